//! Concrete modules over quantum sl2: Weyl and dual Weyl modules, tensor
//! products, intertwiner spaces, invariant forms and indecomposable tilting
//! modules.

pub mod forms;
pub mod hom;
pub mod module;
pub mod tilting;

pub use forms::{duality_involution, tensor_power_form, weyl_form, DualityForm};
pub use hom::{hom_space, is_module_map, GeneratorData, Intertwiner, LiftSolver};
pub use module::{dual_module, dual_weyl_module, natural_module, tensor, tensor_power, weyl_module, WeightModule};
pub use tilting::{build_tilting, decompose_module, Summand, TiltingCache, TiltingModel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UqError {
    #[error("modules live over different scalar contexts")]
    ContextMismatch,
    #[error("a divided power is not integral on the generic lift")]
    IntegralityFailure,
    #[error("no module map extends the prescribed image")]
    LiftUnsolvable,
    #[error("peeling T({lambda}) stalled: {detail}")]
    PeelingStalled { lambda: u32, detail: String },
    #[error("no symmetric nondegenerate invariant form was found")]
    AsymmetricForm,
    #[error("the invariant form is degenerate")]
    DegenerateForm,
    #[error("cache error: {0}")]
    Cache(String),
}

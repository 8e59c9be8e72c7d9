//! The Temperley-Lieb algebra TL_d(delta) as planar diagrams, its
//! Graham-Lehrer cellular basis, Jones-Wenzl projectors and the Schur-Weyl
//! map TL_d -> End(V^(x)d).

pub mod diagram;
pub mod element;
pub mod gl;
pub mod jw;
pub mod pullback;
pub mod schur_weyl;

pub use diagram::{tl_basis, HalfDiagram, TLDiagram, Tangle};
pub use element::TLElement;
pub use gl::{graham_lehrer_basis, tableau_to_half_diagram, GlDatum, Tableau};
pub use jw::{generalized_jw, jones_wenzl, rescale_to_idempotents, tl_semisimplicity};
pub use pullback::{pullback_cell_datum, PulledBack};
pub use schur_weyl::{schur_weyl, SchurWeyl};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TlError {
    #[error("strand counts do not match: {left} against {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("elements live over different scalar contexts")]
    ContextMismatch,
    #[error("not a perfect matching: {0}")]
    InvalidMatching(String),
    #[error("matching is not planar: {0}")]
    NonPlanar(String),
    #[error("cannot parse diagram: {0}")]
    Parse(String),
    #[error("the quantum integer [{k}] vanishes, so the coefficient has a pole")]
    CoefficientPole { k: usize },
    #[error("sign vector {0:?} is not admissible")]
    InadmissibleSigns(Vec<i8>),
    #[error("element is not proportional to an idempotent")]
    NotIdempotentable,
    #[error("idempotents {left} and {right} are not orthogonal")]
    NotOrthogonal { left: usize, right: usize },
    #[error("idempotents do not sum to the identity")]
    Incomplete,
    #[error("not a standard two-row tableau: {0}")]
    InvalidTableau(String),
    #[error("the Schur-Weyl map is not invertible on this element")]
    NotInImage,
    #[error(transparent)]
    Cell(#[from] cellular_engine::CellError),
}

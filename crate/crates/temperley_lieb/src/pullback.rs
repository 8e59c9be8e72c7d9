//! Transport of the cellular basis of End(V^(x)d) to TL_d.

use cellular_engine::{CellDatum, Label};

use crate::diagram::Tangle;
use crate::element::TLElement;
use crate::schur_weyl::SchurWeyl;
use crate::TlError;

#[derive(Clone, Debug)]
pub struct PulledBack {
    pub labels: Vec<Label>,
    pub elements: Vec<TLElement>,
}

impl PulledBack {
    pub fn element(&self, label: &Label) -> Option<&TLElement> {
        self.labels.iter().position(|l| l == label).map(|k| &self.elements[k])
    }

    /// Does flip send the element labelled (lambda, i, j) to (lambda, j, i)?
    pub fn flip_is_involution(&self) -> bool {
        self.labels
            .iter()
            .zip(&self.elements)
            .all(|(&(lambda, i, j), x)| self.element(&(lambda, j, i)).is_some_and(|y| &x.flip() == y))
    }

    /// Is some basis element a multiple of the identity diagram?
    pub fn contains_identity(&self) -> bool {
        let d = self.elements.first().map_or(0, |x| x.bottom());
        let id = Tangle::identity(d);
        self.elements
            .iter()
            .any(|x| x.terms().len() == 1 && x.terms().contains_key(&id))
    }
}

/// Express each c_ij of a cell datum on V^(x)d in the diagram basis.
pub fn pullback_cell_datum(cd: &CellDatum, sw: &SchurWeyl) -> Result<PulledBack, TlError> {
    if cd.ctx() != sw.ctx() || cd.module.dim() != 1 << sw.d {
        return Err(TlError::ContextMismatch);
    }
    let labels = cd.labels();
    let elements = cd
        .elements()
        .iter()
        .map(|m| sw.preimage(m))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PulledBack { labels, elements })
}

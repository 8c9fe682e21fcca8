use crate::scalar::GaussScalar;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    Inversion,
    Connection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientVector {
    pub values: Vec<GaussScalar>,
    pub n: usize,
    pub kind: Kind,
    pub provenance: String,
}

impl CoefficientVector {
    pub fn new(values: Vec<GaussScalar>, kind: Kind, provenance: &str) -> Self {
        let n = values.len().saturating_sub(1);
        CoefficientVector { values, n, kind, provenance: provenance.to_string() }
    }

    /// Kronecker delta at m = n.
    pub fn is_delta(&self) -> bool {
        self.values.iter().enumerate().all(|(m, v)| if m == self.n { v.is_one() } else { v.is_zero() })
    }
}

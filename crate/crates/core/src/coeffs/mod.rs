pub mod dorth;
pub mod generic;
pub mod ledger;
pub mod table1;
pub mod table2;

pub use generic::{
    compose, connect_basic, connect_basic_printed_exponent, connect_classical, invert_basic, invert_classical,
    monic_closed_form, monic_closed_form_printed, self_inverse_check,
};
pub use ledger::{ledger, CorrectionEntry};

use crate::error::{Error, Result};
use crate::families::{family_coefficients, FamilyInstance};
use crate::phi::{eval_phi_scalar, PhiSpec};
use crate::scalar::{GaussScalar, QContext};
pub use crate::vector::{CoefficientVector, Kind};
use table1::InversionRow;
use table2::ConnectionRow;

/// How a registry row relates to the formula as originally typeset.
#[derive(Clone, Copy)]
pub enum Printed<F> {
    Same,
    Differs(F),
    Absent,
}

/// Small exact-arithmetic helpers shared by the row formulas.
pub struct Kit<'a> {
    c: &'a QContext,
}

impl<'a> Kit<'a> {
    pub fn new(c: &'a QContext) -> Self {
        Kit { c }
    }

    pub fn q(&self) -> GaussScalar {
        self.c.q().clone()
    }

    pub fn qp(&self, k: i64) -> GaussScalar {
        self.c.qpow(k)
    }

    pub fn poch(&self, a: &GaussScalar, n: usize) -> GaussScalar {
        self.c.poch(a, n)
    }

    pub fn pochs(&self, a: &[GaussScalar], n: usize) -> GaussScalar {
        self.c.pochs(a, n)
    }

    pub fn qq(&self, k: usize) -> GaussScalar {
        match self.c.qq(k) {
            Ok(v) => v.clone(),
            Err(_) => self.c.poch(self.c.q(), k),
        }
    }

    pub fn qb(&self, n: usize, m: usize) -> GaussScalar {
        &self.qq(n) / &(&self.qq(m) * &self.qq(n - m))
    }

    pub fn ratio(&self, num: GaussScalar, den: GaussScalar) -> Result<GaussScalar> {
        if den.is_zero() {
            return Err(Error::VanishingFactor("denominator product is zero".into()));
        }
        Ok(&num / &den)
    }

    pub fn pw(&self, x: &GaussScalar, e: i64) -> Result<GaussScalar> {
        x.pow(e).ok_or_else(|| Error::VanishingFactor("zero raised to a negative power".into()))
    }

    pub fn phi(&self, num: Vec<GaussScalar>, den: Vec<GaussScalar>, z: GaussScalar, terms: usize) -> Result<GaussScalar> {
        eval_phi_scalar(&PhiSpec::truncated(num, den, self.c, terms), &z)
    }
}

pub fn inversion_row(id: &str) -> Option<&'static InversionRow> {
    table1::ROWS.iter().chain(dorth::INVERSIONS).find(|r| r.id == id)
}

pub fn connection_row(id: &str) -> Option<&'static ConnectionRow> {
    table2::ROWS.iter().chain(dorth::CONNECTIONS).find(|r| r.id == id)
}

pub fn inversion_rows() -> impl Iterator<Item = &'static InversionRow> {
    table1::ROWS.iter().chain(dorth::INVERSIONS)
}

pub fn connection_rows() -> impl Iterator<Item = &'static ConnectionRow> {
    table2::ROWS.iter().chain(dorth::CONNECTIONS)
}

fn run_inversion(row: &InversionRow, inst: &FamilyInstance, n: usize, printed: bool) -> Result<CoefficientVector> {
    inst.ctx().check_degree(n)?;
    let f = match (printed, row.printed) {
        (true, Printed::Differs(p)) => p,
        _ => row.shipped,
    };
    let k = Kit::new(inst.ctx());
    let values = (0..=n).map(|m| f(&k, inst, n, m)).collect::<Result<Vec<_>>>()?;
    Ok(CoefficientVector::new(values, Kind::Inversion, row.provenance))
}

fn generic_inversion(inst: &FamilyInstance, n: usize) -> Option<Result<CoefficientVector>> {
    let (num, den) = (inst.group("a"), inst.group("b"));
    let a = inst.p("a");
    let lambda = inst.p("lambda");
    Some(match inst.id() {
        "generic-q" => invert_basic(None, &num, &den, n, inst.ctx()),
        "generic-q-a" => invert_basic(Some(&a), &num, &den, n, inst.ctx()),
        "generic-hyp" => invert_classical(None, &num, &den, n),
        "generic-hyp-lambda" => invert_classical(Some(&lambda), &num, &den, n),
        _ => return None,
    })
}

/// I_m(n) with B_n = sum_m I_m(n) P_m.
pub fn closed_form_inversion(inst: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    inversion(inst, n, false)
}

/// Same, using the formula as typeset wherever it differs from the shipped one.
pub fn closed_form_inversion_printed(inst: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    inversion(inst, n, true)
}

fn inversion(inst: &FamilyInstance, n: usize, printed: bool) -> Result<CoefficientVector> {
    inst.ctx().check_degree(n)?;
    if let Some(r) = generic_inversion(inst, n) {
        return r;
    }
    let row = inversion_row(inst.id()).ok_or_else(|| Error::UnknownRow(inst.id().into()))?;
    run_inversion(row, inst, n, printed)
}

fn check_row(row: &ConnectionRow, s: &FamilyInstance, t: &FamilyInstance) -> Result<()> {
    for p in row.shared {
        if s.p(p) != t.p(p) {
            return Err(Error::PreconditionViolated(format!("`{}` needs the same {p} on both sides", row.id)));
        }
    }
    if !row.product.is_empty() {
        let prod = |f: &FamilyInstance| row.product.iter().map(|p| f.p(p)).product::<GaussScalar>();
        if prod(s) != prod(t) {
            return Err(Error::PreconditionViolated(format!(
                "`{}` needs {} equal on both sides",
                row.id,
                row.product.join("*")
            )));
        }
    }
    if row.same_shape {
        if s.group("b").len() != t.group("b").len() {
            return Err(Error::PreconditionViolated(format!("`{}` needs the same number of b parameters", row.id)));
        }
        if row.id == "d-little-q-laguerre" && s.zero_count()? != t.zero_count()? {
            return Err(Error::PreconditionViolated("`d-little-q-laguerre` needs the same d on both sides".into()));
        }
    }
    Ok(())
}

fn run_connection(
    row: &ConnectionRow,
    s: &FamilyInstance,
    t: &FamilyInstance,
    n: usize,
    printed: bool,
) -> Result<CoefficientVector> {
    check_row(row, s, t)?;
    let f = match (printed, row.printed) {
        (true, Printed::Differs(p)) => p,
        _ => row.shipped,
    };
    let k = Kit::new(s.ctx());
    let values = (0..=n).map(|m| f(&k, s, t, n, m)).collect::<Result<Vec<_>>>()?;
    Ok(CoefficientVector::new(values, Kind::Connection, row.provenance))
}

fn generic_connection(s: &FamilyInstance, t: &FamilyInstance, n: usize, printed: bool) -> Option<Result<CoefficientVector>> {
    let basic = |f: &FamilyInstance| match f.id() {
        "generic-q" => Some(None),
        "generic-q-a" => Some(Some(f.p("a"))),
        _ => None,
    };
    let (sa, sn, sd) = (basic(s), s.group("a"), s.group("b"));
    let (ta, tn, td) = (basic(t), t.group("a"), t.group("b"));
    if let (Some(a), Some(c)) = (sa, ta) {
        let ctx = s.ctx();
        return Some(match (&a, &c) {
            (None, None) if printed => connect_basic_printed_exponent(&sn, &sd, &tn, &td, n, ctx),
            _ => connect_basic(a.as_ref(), &sn, &sd, c.as_ref(), &tn, &td, n, ctx),
        });
    }
    match (s.id(), t.id()) {
        ("generic-hyp", "generic-hyp") => Some(connect_classical(None, &sn, &sd, &tn, &td, n)),
        ("generic-hyp-lambda", "generic-hyp-lambda") => {
            let (l, b) = (s.p("lambda"), t.p("lambda"));
            Some(connect_classical(Some((&l, &b)), &sn, &sd, &tn, &td, n))
        }
        _ => None,
    }
}

/// C_m(n) with src P_n = sum_m C_m(n) tgt Q_m.
pub fn closed_form_connection(src: &FamilyInstance, tgt: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    connection(src, tgt, n, false)
}

pub fn closed_form_connection_printed(src: &FamilyInstance, tgt: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    connection(src, tgt, n, true)
}

fn connection(s: &FamilyInstance, t: &FamilyInstance, n: usize, printed: bool) -> Result<CoefficientVector> {
    if !s.ctx().same(t.ctx()) {
        return Err(Error::MixedContexts);
    }
    s.ctx().check_degree(n)?;
    if let Some(r) = generic_connection(s, t, n, printed) {
        return r;
    }
    if s.id() == t.id() {
        if let Some(row) = connection_row(s.id()) {
            return run_connection(row, s, t, n, printed);
        }
    }
    composed(s, t, n)
}

/// Definition coefficients of src in the shared basis times the target inversion.
pub fn composed(s: &FamilyInstance, t: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    let unknown = || Error::UnknownPair { src: s.id().into(), tgt: t.id().into() };
    if !s.spec.expansion_capable || !t.spec.expansion_capable || s.variable() != t.variable() {
        return Err(unknown());
    }
    let (sb, tb) = (s.basis().map_err(|_| unknown())?, t.basis().map_err(|_| unknown())?);
    if !sb.same(&tb) {
        return Err(unknown());
    }
    let d = (0..=n).map(|j| family_coefficients(s, j)).collect::<Result<Vec<_>>>()?;
    let inv = (0..=n).map(|j| closed_form_inversion(t, j).map(|v| v.values)).collect::<Result<Vec<_>>>()?;
    let c = compose(&d, &inv)?;
    Ok(CoefficientVector::new(c[n].clone(), Kind::Connection, "compose"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_connection, oracle_inversion};
    use crate::scalar::parse_scalar;

    fn ctx(q: &str) -> QContext {
        QContext::new(parse_scalar(q).unwrap(), 16).unwrap()
    }

    fn inst(id: &str, pairs: &[(&str, &str)], c: &QContext) -> FamilyInstance {
        let p: Vec<(&str, GaussScalar)> = pairs.iter().map(|(k, v)| (*k, parse_scalar(v).unwrap())).collect();
        FamilyInstance::from_pairs(id, &p, c).unwrap()
    }

    fn lits(v: &CoefficientVector) -> Vec<String> {
        v.values.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn little_q_laguerre_degree_one() {
        let c = ctx("1/3");
        let f = inst("little-q-laguerre", &[("a", "1/2")], &c);
        let v = closed_form_inversion(&f, 1).unwrap();
        assert_eq!(lits(&v), ["5/6", "-5/6"]);
        assert_eq!(v.provenance, "Table1:little-q-laguerre");
    }

    #[test]
    fn frozen_values() {
        let c = ctx("1/2");
        let f = inst("q-charlier", &[("a", "3/4")], &c);
        assert_eq!(lits(&closed_form_inversion(&f, 2).unwrap()), ["9/4", "-27/4", "9/2"]);

        let c = ctx("2/5");
        let s = inst("askey-wilson", &[("a", "1/2"), ("b", "1/3"), ("c", "2/5"), ("d", "3/7")], &c);
        let t = inst("askey-wilson", &[("a", "1/2"), ("b", "2/9"), ("c", "1/4"), ("d", "5/6")], &c);
        let v = closed_form_connection(&s, &t, 2).unwrap();
        assert_eq!(lits(&v), ["1961167058/22224234375", "1286078886/6208015625", "878783256/881479375"]);
        assert_eq!(v.provenance, "Eq4.3");

        let t = inst("continuous-dual-q-hahn", &[("a", "1/2"), ("b", "2/9"), ("c", "1/4")], &c);
        let v = closed_form_connection(&s, &t, 2).unwrap();
        assert_eq!(lits(&v), ["2515883/17718750", "-16152491/19687500", "150683/153125"]);
        assert_eq!(v.provenance, "compose");

        let c = ctx("1/2");
        let f = inst("d-little-q-laguerre", &[("b1", "1/3"), ("b2", "1/5")], &c);
        assert_eq!(lits(&closed_form_inversion(&f, 2).unwrap()), ["2/5", "-3/5", "1/5"]);
    }

    #[test]
    fn racah_needs_matching_product() {
        let c = ctx("2/5");
        let s = inst("q-racah", &[("alpha", "1/3"), ("beta", "2/7"), ("gamma", "3/5"), ("delta", "5/11")], &c);
        let bad = inst("q-racah", &[("alpha", "4/9"), ("beta", "1/6"), ("gamma", "3/5"), ("delta", "7/11")], &c);
        assert!(matches!(closed_form_connection(&s, &bad, 3), Err(Error::PreconditionViolated(_))));
        let good = inst("q-racah", &[("alpha", "4/9"), ("beta", "1/6"), ("gamma", "3/7"), ("delta", "7/11")], &c);
        let v = closed_form_connection(&s, &good, 3).unwrap();
        assert_eq!(v, CoefficientVector { provenance: "Eq4.6".into(), ..oracle_connection(&s, &good, 3).unwrap() });
    }

    #[test]
    fn shared_parameter_rows_reject_mismatch() {
        let c = ctx("2/5");
        let s = inst("askey-wilson", &[("a", "1/2"), ("b", "1/3"), ("c", "2/5"), ("d", "3/7")], &c);
        let t = inst("askey-wilson", &[("a", "1/3"), ("b", "1/3"), ("c", "2/5"), ("d", "3/7")], &c);
        assert!(matches!(closed_form_connection(&s, &t, 2), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn routing_errors() {
        let c = ctx("1/2");
        let s = inst("little-q-jacobi", &[("a", "1/3"), ("b", "2/5")], &c);
        let t = inst("big-q-jacobi", &[("a", "1/3"), ("b", "2/5"), ("c", "1/7")], &c);
        assert!(matches!(closed_form_connection(&s, &t, 2), Err(Error::UnknownPair { .. })));
        let other = inst("little-q-jacobi", &[("a", "1/3"), ("b", "2/5")], &ctx("1/3"));
        assert_eq!(closed_form_connection(&s, &other, 2).unwrap_err(), Error::MixedContexts);
        assert!(matches!(closed_form_inversion(&s, 17), Err(Error::DegreeExceeded { .. })));
    }

    #[test]
    fn printed_forms_differ_where_recorded() {
        let c = ctx("2/5");
        let f = inst("q-meixner", &[("b", "1/3"), ("c", "3/7")], &c);
        let want = oracle_inversion(&f, 4).unwrap().values;
        assert_eq!(closed_form_inversion(&f, 4).unwrap().values, want);
        assert_ne!(closed_form_inversion_printed(&f, 4).unwrap().values, want);
        let plain = inst("little-q-laguerre", &[("a", "1/2")], &c);
        assert_eq!(closed_form_inversion_printed(&plain, 4).unwrap(), closed_form_inversion(&plain, 4).unwrap());
    }

    #[test]
    fn every_differing_row_has_a_ledger_entry() {
        let located = |p: &str| ledger().iter().any(|e| e.location == p);
        for r in inversion_rows().filter(|r| matches!(r.printed, Printed::Differs(_))) {
            assert!(located(r.provenance), "{}", r.provenance);
        }
        for r in connection_rows().filter(|r| matches!(r.printed, Printed::Differs(_))) {
            assert!(located(r.provenance), "{}", r.provenance);
        }
    }
}

// Brute-force ground truth. Nothing here may call into `coeffs`.
use crate::error::{Error, Result};
use crate::families::{family_basis_element, family_polynomial, FamilyInstance};
use crate::poly::{poly_eval, to_monomial, Polynomial};
use crate::scalar::GaussScalar;
use crate::vector::{CoefficientVector, Kind};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Match,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub status: Status,
    #[serde(rename = "defect")]
    pub max_defect: GaussScalar,
    pub witness: String,
}

impl VerificationReport {
    pub fn matched(id: &str, witness: String) -> Self {
        VerificationReport { identity_id: id.into(), status: Status::Match, max_defect: GaussScalar::zero(), witness }
    }

    pub fn mismatch(id: &str, defect: GaussScalar, witness: String) -> Self {
        VerificationReport { identity_id: id.into(), status: Status::Mismatch, max_defect: defect, witness }
    }

    pub fn error(id: &str, err: &Error, witness: String) -> Self {
        VerificationReport {
            identity_id: id.into(),
            status: Status::Error,
            max_defect: GaussScalar::zero(),
            witness: format!("{witness}; {}: {err}", err.kind()),
        }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}

/// Coefficients c_m with target = sum_m c_m polys[m], by back-substitution on degrees.
pub fn solve_triangular(target: &Polynomial, polys: &[Polynomial]) -> Result<Vec<GaussScalar>> {
    let n = polys.len().checked_sub(1).ok_or_else(|| Error::ShapeMismatch("no basis polynomials".into()))?;
    let mut r = to_monomial(target).coeffs;
    if r.len() > n + 1 {
        return Err(Error::ShapeMismatch(format!("target degree {} above {n}", r.len() - 1)));
    }
    r.resize(n + 1, GaussScalar::zero());
    let monos: Vec<Vec<GaussScalar>> = polys.iter().map(|p| to_monomial(p).coeffs).collect();
    let mut out = vec![GaussScalar::zero(); n + 1];
    for m in (0..=n).rev() {
        let q = &monos[m];
        if q.len() != m + 1 || q[m].is_zero() {
            return Err(Error::DegenerateLeadingCoefficient { n: m });
        }
        let c = &r[m] / &q[m];
        if !c.is_zero() {
            for (k, x) in q.iter().enumerate() {
                r[k] -= &(&c * x);
            }
        }
        out[m] = c;
    }
    // every step zeroes one coefficient, so the residual is the zero polynomial
    debug_assert!(r.iter().all(|x| x.is_zero()));
    Ok(out)
}

fn compatible(src: &FamilyInstance, tgt: &FamilyInstance) -> Result<()> {
    for f in [src, tgt] {
        if !f.spec.expansion_capable {
            return Err(Error::NotExpansionCapable(f.id().into()));
        }
    }
    if !src.ctx().same(tgt.ctx()) {
        return Err(Error::MixedContexts);
    }
    let (a, b) = (src.variable(), tgt.variable());
    if a != b {
        return Err(Error::VariableMismatch(format!("{} uses {a}, {} uses {b}", src.id(), tgt.id())));
    }
    Ok(())
}

fn family_polys(inst: &FamilyInstance, n: usize) -> Result<Vec<Polynomial>> {
    (0..=n).map(|m| family_polynomial(inst, m)).collect()
}

/// C_m(n) with src P_n = sum_m C_m(n) tgt Q_m, by triangular solve.
pub fn oracle_connection(src: &FamilyInstance, tgt: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    compatible(src, tgt)?;
    let values = solve_triangular(&family_polynomial(src, n)?, &family_polys(tgt, n)?)?;
    Ok(CoefficientVector::new(values, Kind::Connection, "oracle"))
}

/// I_m(n) with B_n = sum_m I_m(n) P_m.
pub fn oracle_inversion(inst: &FamilyInstance, n: usize) -> Result<CoefficientVector> {
    compatible(inst, inst)?;
    let values = solve_triangular(&family_basis_element(inst, n)?, &family_polys(inst, n)?)?;
    Ok(CoefficientVector::new(values, Kind::Inversion, "oracle"))
}

/// oracle_connection for every degree 0..=n_max, sharing the target expansions.
pub fn oracle_connection_upto(src: &FamilyInstance, tgt: &FamilyInstance, n_max: usize) -> Result<Vec<CoefficientVector>> {
    compatible(src, tgt)?;
    let polys = family_polys(tgt, n_max)?;
    (0..=n_max)
        .map(|n| {
            let values = solve_triangular(&family_polynomial(src, n)?, &polys[..=n])?;
            Ok(CoefficientVector::new(values, Kind::Connection, "oracle"))
        })
        .collect()
}

pub fn oracle_inversion_upto(inst: &FamilyInstance, n_max: usize) -> Result<Vec<CoefficientVector>> {
    compatible(inst, inst)?;
    let polys = family_polys(inst, n_max)?;
    (0..=n_max)
        .map(|n| {
            let values = solve_triangular(&family_basis_element(inst, n)?, &polys[..=n])?;
            Ok(CoefficientVector::new(values, Kind::Inversion, "oracle"))
        })
        .collect()
}

/// Inverts a monic set P_j = sum_k A_k(j) B_{j-k}, given `table[j][k] = A_k(j)` for j = 0..=n.
/// Returns I with B_n = sum_j I_j P_j.
pub fn recursive_invert(table: &[Vec<GaussScalar>], n: usize) -> Result<CoefficientVector> {
    if table.len() <= n {
        return Err(Error::ShapeMismatch(format!("need rows 0..={n}, got {}", table.len())));
    }
    for (j, row) in table.iter().enumerate().take(n + 1) {
        if !row.first().is_some_and(|a| a.is_one()) {
            return Err(Error::NonMonic { n: j });
        }
    }
    let a = |j: usize, k: usize| table[j].get(k).cloned().unwrap_or_default();
    // b holds b_m(n, k) for k = 0..=n
    let mut b = vec![GaussScalar::zero(); n + 2];
    b[0] = GaussScalar::one();
    let mut lead = vec![b[0].clone()];
    for m in 0..n {
        let b0 = b[0].clone();
        let next: Vec<GaussScalar> =
            (0..=n).map(|k| &b[k + 1] - &(&b0 * &a(n - m, k + 1))).chain(std::iter::once(GaussScalar::zero())).collect();
        b = next;
        lead.push(b[0].clone());
    }
    let values = (0..=n).map(|j| lead[n - j].clone()).collect();
    Ok(CoefficientVector::new(values, Kind::Inversion, "lemma2.2"))
}

pub type Eval<'a> = dyn Fn(&GaussScalar) -> Result<GaussScalar> + 'a;

/// Exact comparison of two procedures at each point; the defect is the first nonzero lhs - rhs.
pub fn verify_pointwise(id: &str, lhs: &Eval, rhs: &Eval, points: &[GaussScalar]) -> VerificationReport {
    for y in points {
        let (l, r) = match (lhs(y), rhs(y)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => return VerificationReport::error(id, &e, format!("point {y}")),
        };
        let d = &l - &r;
        if !d.is_zero() {
            return VerificationReport::mismatch(id, d, format!("point {y}"));
        }
    }
    VerificationReport::matched(id, format!("{} points", points.len()))
}

/// Pointwise check of a polynomial identity given as two polynomials.
pub fn verify_polynomials(id: &str, lhs: &Polynomial, rhs: &Polynomial, points: &[GaussScalar]) -> VerificationReport {
    verify_pointwise(id, &|y| Ok(poly_eval(lhs, y)), &|y| Ok(poly_eval(rhs, y)), points)
}

/// Exact comparison of two coefficient vectors.
pub fn compare(id: &str, got: &[GaussScalar], want: &[GaussScalar], witness: String) -> VerificationReport {
    if got.len() != want.len() {
        return VerificationReport::error(
            id,
            &Error::ShapeMismatch(format!("{} values against {}", got.len(), want.len())),
            witness,
        );
    }
    match got.iter().zip(want).enumerate().find(|(_, (g, w))| g != w) {
        None => VerificationReport::matched(id, witness),
        Some((m, (g, w))) => VerificationReport::mismatch(id, g - w, format!("{witness}; first difference at m={m}")),
    }
}

/// Small integer points 0, 1, ..., count-1.
pub fn integer_points(count: usize) -> Vec<GaussScalar> {
    (0..count as i64).map(GaussScalar::int).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyInstance;
    use crate::poly::linear_combination;
    use crate::scalar::{parse_scalar, QContext};

    fn s(t: &str) -> GaussScalar {
        parse_scalar(t).unwrap()
    }

    fn little(a: &str, q: &str) -> FamilyInstance {
        let c = QContext::new(s(q), 12).unwrap();
        FamilyInstance::from_pairs("little-q-laguerre", &[("a", s(a))], &c).unwrap()
    }

    #[test]
    fn inversion_example() {
        let f = little("1/2", "1/3");
        assert_eq!(oracle_inversion(&f, 1).unwrap().values, vec![s("5/6"), s("-5/6")]);
        assert_eq!(oracle_inversion(&f, 0).unwrap().values, vec![s("1")]);
    }

    #[test]
    fn connection_to_itself_is_delta() {
        let f = little("2/7", "2/5");
        for n in 0..5 {
            assert!(oracle_connection(&f, &f, n).unwrap().is_delta());
        }
    }

    #[test]
    fn monomial_targets_give_expansion() {
        let f = little("2/7", "2/5");
        let p = family_polynomial(&f, 3).unwrap();
        let monos: Vec<Polynomial> = (0..=3)
            .map(|k| {
                let mut c = vec![GaussScalar::zero(); k + 1];
                c[k] = GaussScalar::one();
                Polynomial::monomial(f.ctx(), c)
            })
            .collect();
        assert_eq!(solve_triangular(&p, &monos).unwrap(), p.coeffs);
    }

    #[test]
    fn round_trip_reconstructs_basis() {
        let f = little("3/5", "3/7");
        for n in 0..6 {
            let inv = oracle_inversion(&f, n).unwrap();
            let terms: Vec<_> =
                inv.values.iter().enumerate().map(|(m, c)| (c.clone(), family_polynomial(&f, m).unwrap())).collect();
            let back = linear_combination(&terms).unwrap();
            assert_eq!(back.coeffs, to_monomial(&family_basis_element(&f, n).unwrap()).coeffs);
        }
    }

    #[test]
    fn refuses_mismatched_variables() {
        let c = QContext::new(s("2/5"), 12).unwrap();
        let a = FamilyInstance::from_pairs("q-charlier", &[("a", s("1/3"))], &c).unwrap();
        let b = little("1/2", "2/5");
        assert!(matches!(oracle_connection(&a, &b, 2), Err(Error::VariableMismatch(_))));
        let r1 = FamilyInstance::from_pairs(
            "dual-q-hahn",
            &[("gamma", s("1/3")), ("delta", s("1/5")), ("qnegN", s("1/7"))],
            &c,
        )
        .unwrap();
        let r2 = FamilyInstance::from_pairs(
            "dual-q-hahn",
            &[("gamma", s("1/3")), ("delta", s("2/5")), ("qnegN", s("1/7"))],
            &c,
        )
        .unwrap();
        assert!(matches!(oracle_connection(&r1, &r2, 2), Err(Error::VariableMismatch(_))));
    }

    #[test]
    fn refuses_degenerate_leading_coefficient() {
        // second basis polynomial has degree 0 instead of 1
        let c = QContext::new(s("1/2"), 12).unwrap();
        let t = FamilyInstance::from_pairs("q-charlier", &[("a", s("1/3"))], &c).unwrap();
        let q = family_polynomial(&t, 1).unwrap();
        let flat = Polynomial::monomial(&c, vec![s("1")]);
        assert!(matches!(
            solve_triangular(&q, &[Polynomial::monomial(&c, vec![s("1")]), flat]),
            Err(Error::DegenerateLeadingCoefficient { n: 1 })
        ));
    }

    #[test]
    fn recursion_examples() {
        let n = 5;
        let delta: Vec<Vec<GaussScalar>> =
            (0..=n).map(|j| (0..=j).map(|k| if k == 0 { s("1") } else { s("0") }).collect()).collect();
        let v = recursive_invert(&delta, n).unwrap();
        assert!(v.is_delta());
        let tele: Vec<Vec<GaussScalar>> =
            (0..=n).map(|j| (0..=j).map(|k| [s("1"), s("-1")].get(k).cloned().unwrap_or_default()).collect()).collect();
        assert!(recursive_invert(&tele, n).unwrap().values.iter().all(|x| x.is_one()));
        let mut bad = tele.clone();
        bad[2][0] = s("2");
        assert_eq!(recursive_invert(&bad, n).unwrap_err(), Error::NonMonic { n: 2 });
    }

    #[test]
    fn recursion_matches_solve() {
        // monic little q-Laguerre written as P_j = sum_k A_k(j) y^{j-k}
        let f = little("2/9", "3/7");
        let n = 6;
        let polys = family_polys(&f, n).unwrap();
        let table: Vec<Vec<GaussScalar>> = polys
            .iter()
            .map(|p| {
                let lc = p.leading().clone();
                p.coeffs.iter().rev().map(|c| c / &lc).collect()
            })
            .collect();
        let rec = recursive_invert(&table, n).unwrap();
        let solved = oracle_inversion(&f, n).unwrap();
        for j in 0..=n {
            assert_eq!(&rec.values[j] / polys[j].leading(), solved.values[j]);
        }
    }

    #[test]
    fn pointwise_examples() {
        let c = QContext::new(s("1/2"), 4).unwrap();
        let y = Polynomial::monomial(&c, vec![s("0"), s("1")]);
        let y1 = Polynomial::monomial(&c, vec![s("1"), s("1")]);
        let pts = integer_points(3);
        let r = verify_polynomials("same", &y, &y, &pts);
        assert!(r.is_match() && r.max_defect.is_zero());
        let r = verify_polynomials("shift", &y, &y1, &pts);
        assert_eq!((r.status, r.max_defect), (Status::Mismatch, s("-1")));
        let r = verify_pointwise("err", &|_| Err(Error::NonTerminating), &|_| Ok(s("0")), &pts);
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn compare_reports_first_difference() {
        let r = compare("x", &[s("1"), s("2")], &[s("1"), s("5/2")], "w".into());
        assert_eq!(r.status, Status::Mismatch);
        assert_eq!(r.max_defect, s("-1/2"));
        assert!(compare("x", &[s("1")], &[s("1")], "w".into()).is_match());
    }
}

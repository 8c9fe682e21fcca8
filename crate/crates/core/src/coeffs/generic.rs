use super::{CoefficientVector, Kind, Kit};
use crate::error::{Error, Result};
use crate::phi::eval_hyp_scalar;
use crate::scalar::{binomial, rising_factorial, rising_multi, tri, GaussScalar, QContext};

fn shifted(list: &[GaussScalar], by: &GaussScalar) -> Vec<GaussScalar> {
    list.iter().map(|x| x * by).collect()
}

fn shifted_add(list: &[GaussScalar], by: i64) -> Vec<GaussScalar> {
    let b = GaussScalar::int(by);
    list.iter().map(|x| x + &b).collect()
}

fn nonvanishing(k: &Kit, list: &[GaussScalar], n: usize, what: &str) -> Result<GaussScalar> {
    let v = k.pochs(list, n);
    if v.is_zero() {
        return Err(Error::VanishingFactor(format!("[{what};q]_{n} = 0")));
    }
    Ok(v)
}

/// Coefficients of y^n in the generic basic classes. `a = None` is the class
/// without the a q^n numerator.
pub fn invert_basic(
    a: Option<&GaussScalar>,
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
    ctx: &QContext,
) -> Result<CoefficientVector> {
    ctx.check_degree(n)?;
    let k = Kit::new(ctx);
    let (r, s) = (num.len() as i64, den.len() as i64);
    let ni = n as i64;
    let head = k.ratio(k.pochs(den, n), nonvanishing(&k, num, n, "a_r")?)?;
    let e = if a.is_some() { r + 1 - s } else { r - s };
    let pre = head * ctx.gauss_sign_pow(ni, e);
    let mut values = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mi = m as i64;
        let mut t = k.qb(n, m) * crate::scalar::sign(mi) * k.qp(tri(mi));
        if let Some(a) = a {
            let d1 = k.poch(&(a * &k.qp(mi)), m);
            let d2 = k.poch(&(a * &k.qp(2 * mi + 1)), n - m);
            if d1.is_zero() || d2.is_zero() {
                return Err(Error::VanishingFactor(format!("(a q^{m};q)_{m} (a q^{};q)_{} = 0", 2 * m + 1, n - m)));
            }
            t = k.ratio(t, d1 * d2)?;
        }
        values.push(&pre * &t);
    }
    let prov = if a.is_some() { "Eq2.1" } else { "Eq2.6" };
    Ok(CoefficientVector::new(values, Kind::Inversion, prov))
}

/// Source (a; a_r; b_s) to target (c; c_l; d_h).
#[allow(clippy::too_many_arguments)]
pub fn connect_basic(
    a: Option<&GaussScalar>,
    num: &[GaussScalar],
    den: &[GaussScalar],
    c: Option<&GaussScalar>,
    tgt_num: &[GaussScalar],
    tgt_den: &[GaussScalar],
    n: usize,
    ctx: &QContext,
) -> Result<CoefficientVector> {
    connect_basic_impl(a, num, den, c, tgt_num, tgt_den, n, ctx, false)
}

/// The a = c = 0 branch with the exponent as printed, kept for the ledger.
pub fn connect_basic_printed_exponent(
    num: &[GaussScalar],
    den: &[GaussScalar],
    tgt_num: &[GaussScalar],
    tgt_den: &[GaussScalar],
    n: usize,
    ctx: &QContext,
) -> Result<CoefficientVector> {
    connect_basic_impl(None, num, den, None, tgt_num, tgt_den, n, ctx, true)
}

#[allow(clippy::too_many_arguments)]
fn connect_basic_impl(
    a: Option<&GaussScalar>,
    num: &[GaussScalar],
    den: &[GaussScalar],
    c: Option<&GaussScalar>,
    tgt_num: &[GaussScalar],
    tgt_den: &[GaussScalar],
    n: usize,
    ctx: &QContext,
    printed: bool,
) -> Result<CoefficientVector> {
    ctx.check_degree(n)?;
    let zero = GaussScalar::zero();
    // the class without a embeds into the class with a = 0 and one extra zero denominator
    let embed = |x: Option<&GaussScalar>, d: &[GaussScalar]| -> (GaussScalar, Vec<GaussScalar>) {
        match x {
            Some(v) => (v.clone(), d.to_vec()),
            None => (GaussScalar::zero(), [d, &[GaussScalar::zero()][..]].concat()),
        }
    };
    let k = Kit::new(ctx);
    let ni = n as i64;
    let both_none = a.is_none() && c.is_none();
    let (av, den) = if both_none { (zero.clone(), den.to_vec()) } else { embed(a, den) };
    let (cv, tgt_den) = if both_none { (zero.clone(), tgt_den.to_vec()) } else { embed(c, tgt_den) };
    let tgt_num = tgt_num.to_vec();
    let (r, s, l, h) = (num.len() as i64, den.len() as i64, tgt_num.len() as i64, tgt_den.len() as i64);
    let e = s + l - r - h;
    let texp = if printed { e - 1 } else { e };
    let mut values = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mi = m as i64;
        let qm = k.qp(mi);
        let mut top = k.qb(n, m) * k.pochs(num, m) * k.pochs(&tgt_den, m);
        let mut bot = k.pochs(&den, m) * k.pochs(&tgt_num, m);
        let mut inum = vec![k.qp(mi - ni)];
        let mut iden = Vec::new();
        if !both_none {
            top = top * k.poch(&(&av * &k.qp(ni)), m);
            bot = bot * k.poch(&(&cv * &qm), m);
            inum.push(&av * &k.qp(mi + ni));
            iden.push(&cv * &k.qp(2 * mi + 1));
        }
        inum.extend(shifted(num, &qm));
        inum.extend(shifted(&tgt_den, &qm));
        iden.extend(shifted(&den, &qm));
        iden.extend(shifted(&tgt_num, &qm));
        let inner = k.phi(inum, iden, k.qp(1 + mi * e), n - m)?;
        let scale = crate::scalar::sign(mi * e) * k.qp(tri(mi) * texp + mi * (mi - ni));
        values.push(k.ratio(top, bot)? * scale * inner);
    }
    let prov = if both_none { "Eq2.7" } else { "Eq2.2" };
    Ok(CoefficientVector::new(values, Kind::Connection, prov))
}

/// Hypergeometric classes; `lambda = Some` is the class with the lambda + n numerator.
pub fn invert_classical(
    lambda: Option<&GaussScalar>,
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
) -> Result<CoefficientVector> {
    let an = rising_multi(num, n);
    if an.is_zero() {
        return Err(Error::VanishingFactor(format!("(a_r)_{n} = 0")));
    }
    let pre = &rising_multi(den, n) / &an;
    let mut values = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut t = binomial(n, m) * crate::scalar::sign(m as i64);
        if let Some(l) = lambda {
            let d = rising_factorial(&(l + &GaussScalar::int(m as i64)), m)
                * rising_factorial(&(l + &GaussScalar::int(2 * m as i64 + 1)), n - m);
            if d.is_zero() {
                return Err(Error::VanishingFactor(format!("(lambda+{m})_{m} (lambda+{})_{} = 0", 2 * m + 1, n - m)));
            }
            t = &t / &d;
        }
        values.push(&pre * &t);
    }
    let prov = if lambda.is_some() { "Eq2.8" } else { "Eq2.10" };
    Ok(CoefficientVector::new(values, Kind::Inversion, prov))
}

/// Source (lambda; a_r; b_s) to target (beta; c_l; d_h); `lambda_beta` carries both or neither.
pub fn connect_classical(
    lambda_beta: Option<(&GaussScalar, &GaussScalar)>,
    num: &[GaussScalar],
    den: &[GaussScalar],
    tgt_num: &[GaussScalar],
    tgt_den: &[GaussScalar],
    n: usize,
) -> Result<CoefficientVector> {
    let mut values = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mi = m as i64;
        let mut top = binomial(n, m) * rising_multi(num, m) * rising_multi(tgt_den, m);
        let mut bot = rising_multi(den, m) * rising_multi(tgt_num, m);
        let mut inum = vec![GaussScalar::int(mi - n as i64)];
        let mut iden = Vec::new();
        if let Some((l, b)) = lambda_beta {
            top = top * rising_factorial(&(l + &GaussScalar::int(n as i64)), m);
            bot = bot * rising_factorial(&(b + &GaussScalar::int(mi)), m);
            inum.push(l + &GaussScalar::int(n as i64 + mi));
            iden.push(b + &GaussScalar::int(2 * mi + 1));
        }
        if bot.is_zero() {
            return Err(Error::VanishingFactor(format!("denominator factor at m={m}")));
        }
        inum.extend(shifted_add(num, mi));
        inum.extend(shifted_add(tgt_den, mi));
        iden.extend(shifted_add(den, mi));
        iden.extend(shifted_add(tgt_num, mi));
        let inner = eval_hyp_scalar(&inum, &iden, n - m, &GaussScalar::one())?;
        values.push(&(&top / &bot) * &inner);
    }
    let prov = if lambda_beta.is_some() { "Eq2.9" } else { "Eq2.11" };
    Ok(CoefficientVector::new(values, Kind::Connection, prov))
}

/// C_m(n) = sum_k D_k(n) I_m(k) for triangular D (by n) and I (by k).
pub fn compose(d: &[Vec<GaussScalar>], inv: &[Vec<GaussScalar>]) -> Result<Vec<Vec<GaussScalar>>> {
    if d.len() != inv.len() {
        return Err(Error::ShapeMismatch(format!("{} rows against {}", d.len(), inv.len())));
    }
    for (n, (dr, ir)) in d.iter().zip(inv).enumerate() {
        if dr.len() != n + 1 || ir.len() != n + 1 {
            return Err(Error::ShapeMismatch(format!("row {n} must have {} entries", n + 1)));
        }
    }
    Ok(d.iter()
        .enumerate()
        .map(|(n, dr)| (0..=n).map(|m| (m..=n).map(|k| &dr[k] * &inv[k][m]).sum()).collect())
        .collect())
}

/// M[n][k] = C(n,k) (-1)^k [beta]_n [alpha]_k / ([alpha]_n [beta]_k); true when M*M = I.
pub fn self_inverse_check(alpha: &[GaussScalar], beta: &[GaussScalar], n_max: usize) -> Result<bool> {
    let mut ratio = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let (a, b) = (rising_multi(alpha, n), rising_multi(beta, n));
        if a.is_zero() || b.is_zero() {
            return Err(Error::VanishingFactor(format!("rising factorial of order {n} vanishes")));
        }
        ratio.push(&b / &a);
    }
    let m: Vec<Vec<GaussScalar>> = (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|k| &(&binomial(n, k) * &crate::scalar::sign(k as i64)) * &(&ratio[n] / &ratio[k]))
                .collect()
        })
        .collect();
    for n in 0..=n_max {
        for j in 0..=n {
            let v: GaussScalar = (j..=n).map(|k| &m[n][k] * &m[k][j]).sum();
            if v != if n == j { GaussScalar::one() } else { GaussScalar::zero() } {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed form of b_m(n,0) for the monic rescaling of the class with a.
pub fn monic_closed_form(
    a: &GaussScalar,
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
    m: usize,
    ctx: &QContext,
) -> Result<GaussScalar> {
    monic_form(a, num, den, n, m, ctx, false)
}

pub fn monic_closed_form_printed(
    a: &GaussScalar,
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
    m: usize,
    ctx: &QContext,
) -> Result<GaussScalar> {
    monic_form(a, num, den, n, m, ctx, true)
}

fn monic_form(
    a: &GaussScalar,
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
    m: usize,
    ctx: &QContext,
    printed: bool,
) -> Result<GaussScalar> {
    let k = Kit::new(ctx);
    let (ni, mi) = (n as i64, m as i64);
    let e = den.len() as i64 - num.len() as i64 - 1;
    let unit = crate::scalar::sign(mi) * k.qp(-(mi * (2 * ni - mi - 1)) / 2);
    let top = k.qb(n, m) * k.pw(&unit, e)? * k.pochs(&shifted(den, &k.qp(ni - mi)), m);
    let mut bot = k.pochs(&shifted(num, &k.qp(ni - mi)), m);
    if printed {
        let t = k.poch(&(a * &k.qp(ni - mi)), n - m);
        bot = bot * k.poch(&(a * &k.qp(ni)), n);
        return k.ratio(top * t, bot);
    }
    bot = bot * k.poch(&(a * &k.qp(2 * ni - 2 * mi + 1)), m);
    k.ratio(top, bot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;
    use proptest::prelude::*;

    fn s(t: &str) -> GaussScalar {
        parse_scalar(t).unwrap()
    }

    fn v(xs: &[&str]) -> Vec<GaussScalar> {
        xs.iter().map(|x| s(x)).collect()
    }

    fn ctx(q: &str) -> QContext {
        QContext::new(s(q), 12).unwrap()
    }

    #[test]
    fn invert_examples() {
        let c = ctx("1/3");
        for a in [None, Some(s("1/7"))] {
            assert_eq!(invert_basic(a.as_ref(), &v(&["2"]), &v(&["3/4"]), 0, &c).unwrap().values, v(&["1"]));
        }
        // little q-Laguerre at a = 1/2
        let r = invert_basic(None, &v(&["0"]), &v(&["1/6"]), 1, &c).unwrap();
        assert_eq!(r.values, v(&["5/6", "-5/6"]));
        assert_eq!(r.provenance, "Eq2.6");
    }

    #[test]
    fn zero_a_specializes() {
        let c = ctx("2/5");
        let (ar, bs) = (v(&["3/4", "-1/3"]), v(&["5/7"]));
        let zero = GaussScalar::zero();
        for n in 0..=6 {
            let with = invert_basic(Some(&zero), &ar, &bs, n, &c).unwrap();
            let without = invert_basic(None, &[&[zero.clone()][..], &ar].concat(), &bs, n, &c).unwrap();
            assert_eq!(with.values, without.values);
        }
    }

    #[test]
    fn classical_examples() {
        assert_eq!(invert_classical(None, &v(&["2"]), &v(&["3"]), 0).unwrap().values, v(&["1"]));
        assert!(matches!(invert_classical(Some(&s("-2")), &[], &[], 2), Err(Error::VanishingFactor(_))));
        let delta = connect_classical(Some((&s("1/3"), &s("1/3"))), &v(&["2"]), &v(&["5/2"]), &v(&["2"]), &v(&["5/2"]), 4)
            .unwrap();
        assert!(delta.is_delta());
        assert_eq!(connect_classical(None, &[], &[], &[], &[], 0).unwrap().values, v(&["1"]));
    }

    #[test]
    fn basic_delta() {
        let c = ctx("3/7");
        let (a, ar, bs) = (s("1/7"), v(&["2/3"]), v(&["-4/5", "6"]));
        let r = connect_basic(Some(&a), &ar, &bs, Some(&a), &ar, &bs, 3, &c).unwrap();
        assert_eq!(r.values, v(&["0", "0", "0", "1"]));
        assert!(connect_basic(None, &ar, &bs, None, &ar, &bs, 5, &c).unwrap().is_delta());
        assert_eq!(connect_basic(None, &ar, &bs, Some(&a), &bs, &ar, 0, &c).unwrap().values, v(&["1"]));
    }

    #[test]
    fn compose_identities() {
        let d = vec![v(&["1"]), v(&["2", "3"]), v(&["-1", "4", "5/2"])];
        let id = vec![v(&["1"]), v(&["0", "1"]), v(&["0", "0", "1"])];
        assert_eq!(compose(&id, &d).unwrap(), d);
        assert_eq!(compose(&d, &id).unwrap(), d);
        assert!(compose(&d, &id[..2]).is_err());
    }

    #[test]
    fn self_inverse_examples() {
        assert!(self_inverse_check(&[], &[], 4).unwrap());
        assert!(self_inverse_check(&v(&["2"]), &v(&["3"]), 5).unwrap());
        assert!(self_inverse_check(&v(&["2"]), &v(&["3"]), 0).unwrap());
        assert!(self_inverse_check(&v(&["-1"]), &v(&["3"]), 3).is_err());
    }

    fn rat() -> impl Strategy<Value = GaussScalar> {
        (1i64..40, 1i64..40, any::<bool>()).prop_map(|(n, d, neg)| GaussScalar::frac(if neg { -n } else { n }, d + 40))
    }

    proptest! {
        #[test]
        fn inversion_is_left_inverse_of_definition(ar in prop::collection::vec(rat(), 0..3),
                                                     bs in prop::collection::vec(rat(), 0..3),
                                                     n in 0usize..6) {
            // sum_m I_m(n) D_k(m) = delta_{kn}
            let c = ctx("2/5");
            let a = s("1/7");
            let inv: Vec<Vec<GaussScalar>> = (0..=n).map(|j| invert_basic(Some(&a), &ar, &bs, j, &c).unwrap().values).collect();
            let defs: Vec<Vec<GaussScalar>> = (0..=n).map(|j| {
                let mut num = vec![c.qpow(-(j as i64)), &a * &c.qpow(j as i64)];
                num.extend(ar.clone());
                crate::phi::PhiSpec::new(num, bs.clone(), &c, j).unwrap().terms(c.q()).unwrap()
            }).collect();
            for k in 0..=n {
                let t: GaussScalar = (k..=n).map(|m| &inv[n][m] * &defs[m][k]).sum();
                prop_assert_eq!(t, if k == n { GaussScalar::one() } else { GaussScalar::zero() });
            }
        }
    }
}

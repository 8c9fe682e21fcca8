use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{factorial, rising_multi, GaussScalar, QContext};

/// A terminating r-phi-s with explicit summation bound.
#[derive(Clone, Debug)]
pub struct PhiSpec {
    pub num: Vec<GaussScalar>,
    pub den: Vec<GaussScalar>,
    pub ctx: QContext,
    pub n: usize,
    /// numerator parameters carried by a basis factor rather than listed in `num`
    pub hidden: usize,
    pub cross_check: bool,
}

impl PhiSpec {
    /// Requires a q^{-n} numerator parameter.
    pub fn new(num: Vec<GaussScalar>, den: Vec<GaussScalar>, ctx: &QContext, n: usize) -> Result<Self> {
        let target = ctx.qpow(-(n as i64));
        if !num.iter().any(|a| *a == target) {
            return Err(Error::NonTerminating);
        }
        Ok(Self::truncated(num, den, ctx, n))
    }

    pub fn truncated(num: Vec<GaussScalar>, den: Vec<GaussScalar>, ctx: &QContext, n: usize) -> Self {
        PhiSpec { num, den, ctx: ctx.clone(), n, hidden: 0, cross_check: false }
    }

    pub fn with_hidden(mut self, hidden: usize) -> Self {
        self.hidden = hidden;
        self
    }

    pub fn cross_checked(mut self) -> Self {
        self.cross_check = true;
        self
    }

    /// The exponent 1+s-r of the compensating factor.
    pub fn excess(&self) -> i64 {
        1 + self.den.len() as i64 - (self.num.len() + self.hidden) as i64
    }

    fn term_direct(&self, k: usize, z: &GaussScalar) -> Result<GaussScalar> {
        let den = &self.ctx.pochs(&self.den, k) * self.ctx.qq(k)?;
        let head = &self.ctx.pochs(&self.num, k) / &den;
        let comp = self.ctx.gauss_sign_pow(k as i64, self.excess());
        Ok(&(&head * &comp) * &z.powu(k as u64))
    }

    /// Series terms k = 0..=n at argument z.
    pub fn terms(&self, z: &GaussScalar) -> Result<Vec<GaussScalar>> {
        self.ctx.check_degree(self.n)?;
        let one = GaussScalar::one();
        let e = self.excess();
        let mut out = Vec::with_capacity(self.n + 1);
        let mut t = GaussScalar::one();
        out.push(t.clone());
        for k in 0..self.n {
            if t.is_zero() {
                out.push(GaussScalar::zero());
                continue;
            }
            let qk = self.ctx.qpow(k as i64);
            let mut numf = GaussScalar::one();
            for a in &self.num {
                numf *= &(&one - &(a * &qk));
            }
            let mut denf = &one - &(&qk * self.ctx.q());
            for (j, b) in self.den.iter().enumerate() {
                let f = &one - &(b * &qk);
                if f.is_zero() {
                    return Err(Error::DenominatorVanishes { k: k + 1, param: format!("b{} = {}", j + 1, b) });
                }
                denf *= &f;
            }
            let comp = &crate::scalar::sign(e) * &self.ctx.qpow(k as i64 * e);
            t = &(&(&(&t * &numf) / &denf) * &comp) * z;
            if t.is_zero() && k + 1 < self.n {
                log::debug!("series truncates early at k={}", k + 1);
            }
            if self.cross_check {
                let d = self.term_direct(k + 1, z)?;
                assert_eq!(d, t, "term recurrence disagrees with direct evaluation at k={}", k + 1);
            }
            out.push(t.clone());
        }
        Ok(out)
    }
}

pub fn eval_phi_scalar(spec: &PhiSpec, z: &GaussScalar) -> Result<GaussScalar> {
    Ok(spec.terms(z)?.into_iter().sum())
}

/// Series as a polynomial in y with z = arg_scale * y.
pub fn eval_phi_poly(spec: &PhiSpec, arg_scale: &GaussScalar) -> Result<Polynomial> {
    let p = Polynomial::monomial(&spec.ctx, spec.terms(arg_scale)?);
    if p.degree() < spec.n {
        log::debug!("phi polynomial has degree {} < {}", p.degree(), spec.n);
    }
    Ok(p)
}

pub fn hyp_terms(num: &[GaussScalar], den: &[GaussScalar], n: usize, z: &GaussScalar) -> Result<Vec<GaussScalar>> {
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let top = rising_multi(num, k);
        if top.is_zero() {
            out.push(GaussScalar::zero());
            continue;
        }
        let bot = rising_multi(den, k);
        if bot.is_zero() {
            let j = den.iter().position(|b| crate::scalar::rising_factorial(b, k).is_zero()).unwrap_or(0);
            return Err(Error::DenominatorVanishes { k, param: format!("b{} = {}", j + 1, den[j]) });
        }
        out.push(&(&top / &(&bot * &factorial(k))) * &z.powu(k as u64));
    }
    Ok(out)
}

pub fn eval_hyp_scalar(num: &[GaussScalar], den: &[GaussScalar], n: usize, z: &GaussScalar) -> Result<GaussScalar> {
    Ok(hyp_terms(num, den, n, z)?.into_iter().sum())
}

pub fn eval_hyp_poly(
    num: &[GaussScalar],
    den: &[GaussScalar],
    n: usize,
    arg_scale: &GaussScalar,
    ctx: &QContext,
) -> Result<Polynomial> {
    Ok(Polynomial::monomial(ctx, hyp_terms(num, den, n, arg_scale)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_eval;
    use crate::scalar::parse_scalar;
    use proptest::prelude::*;

    fn s(t: &str) -> GaussScalar {
        parse_scalar(t).unwrap()
    }

    fn ctx(q: &str) -> QContext {
        QContext::new(s(q), 12).unwrap()
    }

    #[test]
    fn phi_examples() {
        let c = ctx("1/2");
        let spec = PhiSpec::truncated(vec![s("5"), s("7")], vec![s("3")], &c, 0);
        assert!(eval_phi_scalar(&spec, &s("9")).unwrap().is_one());
        let spec = PhiSpec::new(vec![s("2")], vec![], &c, 1).unwrap();
        assert_eq!(eval_phi_scalar(&spec, &s("1")).unwrap(), s("-1"));
        let c = ctx("1/3");
        let spec = PhiSpec::new(vec![s("3"), s("0")], vec![s("1/6")], &c, 1).unwrap();
        assert_eq!(eval_phi_scalar(&spec, &s("1/3")).unwrap(), s("-1/5"));
    }

    #[test]
    fn phi_poly_examples() {
        let c = ctx("1/3");
        let spec = PhiSpec::new(vec![s("3"), s("0")], vec![s("1/6")], &c, 1).unwrap();
        assert_eq!(eval_phi_poly(&spec, &s("1/3")).unwrap().coeffs, vec![s("1"), s("-6/5")]);
        let spec = PhiSpec::truncated(vec![], vec![], &c, 0);
        assert_eq!(eval_phi_poly(&spec, &s("4")).unwrap().coeffs, vec![s("1")]);
        let spec = PhiSpec::new(vec![s("9"), s("2/7")], vec![s("1/5")], &c, 2).unwrap();
        assert_eq!(eval_phi_poly(&spec, &s("0")).unwrap().coeffs, vec![s("1")]);
    }

    #[test]
    fn refuses_nonterminating_and_vanishing() {
        let c = ctx("2/5");
        assert_eq!(PhiSpec::new(vec![s("3")], vec![], &c, 2).unwrap_err(), Error::NonTerminating);
        // denominator q^{-1} vanishes at k = 2
        let spec = PhiSpec::new(vec![c.qpow(-3)], vec![c.qpow(-1)], &c, 3).unwrap();
        assert!(matches!(eval_phi_scalar(&spec, &s("1")), Err(Error::DenominatorVanishes { k: 2, .. })));
    }

    #[test]
    fn early_truncation_is_legal() {
        let c = ctx("2/5");
        let spec = PhiSpec::new(vec![c.qpow(-4), c.qpow(-1)], vec![c.qpow(-2)], &c, 4).unwrap();
        let p = eval_phi_poly(&spec, &s("1")).unwrap();
        assert_eq!(p.degree(), 1);
    }

    #[test]
    fn hyp_examples() {
        assert!(eval_hyp_scalar(&[s("0"), s("3")], &[s("2")], 3, &s("5")).unwrap().is_one());
        assert_eq!(eval_hyp_scalar(&[s("-1")], &[], 1, &s("2")).unwrap(), s("-1"));
        assert_eq!(eval_hyp_scalar(&[s("-2"), s("1")], &[s("2")], 2, &s("1")).unwrap(), s("1/3"));
        assert!(matches!(
            eval_hyp_scalar(&[s("-3")], &[s("-1")], 3, &s("1")),
            Err(Error::DenominatorVanishes { .. })
        ));
    }

    #[test]
    fn chu_vandermonde() {
        for n in 0..6usize {
            let (b, c) = (s("3/4"), s("5/3"));
            let lhs = eval_hyp_scalar(&[GaussScalar::int(-(n as i64)), b.clone()], &[c.clone()], n, &s("1")).unwrap();
            let cb = &c - &b;
            let rhs = &crate::scalar::rising_factorial(&cb, n) / &crate::scalar::rising_factorial(&c, n);
            assert_eq!(lhs, rhs);
        }
    }

    fn rat() -> impl Strategy<Value = GaussScalar> {
        (-30i64..30, 1i64..30).prop_map(|(n, d)| GaussScalar::frac(n, d))
    }

    proptest! {
        #[test]
        fn terminates_after_n(num in prop::collection::vec(rat(), 0..3),
                              den in prop::collection::vec(rat(), 0..3),
                              n in 0usize..6, z in rat()) {
            let c = ctx("3/7");
            let mut full = vec![c.qpow(-(n as i64))];
            full.extend(num);
            let spec = PhiSpec::new(full.clone(), den.clone(), &c, n).unwrap();
            let longer = PhiSpec::truncated(full, den, &c, n + 1);
            if let (Ok(a), Ok(b)) = (spec.terms(&z), longer.clone().cross_checked().terms(&z)) {
                prop_assert!(b[n + 1].is_zero());
                prop_assert_eq!(&a[..], &b[..=n]);
            }
        }

        #[test]
        fn poly_matches_scalar(num in prop::collection::vec(rat(), 0..3),
                               den in prop::collection::vec(rat(), 0..3),
                               n in 0usize..6, scale in rat(),
                               ys in prop::collection::vec(rat(), 5)) {
            let c = ctx("2/5");
            let mut full = vec![c.qpow(-(n as i64)), GaussScalar::zero()];
            full.extend(num);
            let spec = PhiSpec::new(full, den, &c, n).unwrap();
            if let Ok(p) = eval_phi_poly(&spec, &scale) {
                for y in ys {
                    prop_assert_eq!(poly_eval(&p, &y), eval_phi_scalar(&spec, &(&scale * &y)).unwrap());
                }
            }
        }
    }
}

use crate::error::{Error, Result};
use crate::scalar::{GaussScalar, QContext};

#[derive(Clone, Debug, PartialEq)]
pub enum BasisTag {
    Monomial,
    /// (y;q)_n
    QShifted,
    /// prod (1 - alpha q^j y + tau q^{2j})
    PairedProduct { alpha: GaussScalar, tau: GaussScalar },
    /// prod (y - q^j)
    ShiftedNodes,
    /// (iy;q)_n
    ImaginaryShifted,
}

impl BasisTag {
    pub fn name(&self) -> &'static str {
        match self {
            BasisTag::Monomial => "monomial",
            BasisTag::QShifted => "q-shifted",
            BasisTag::PairedProduct { .. } => "paired-product",
            BasisTag::ShiftedNodes => "shifted-nodes",
            BasisTag::ImaginaryShifted => "imaginary-shifted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Basis {
    pub tag: BasisTag,
    pub ctx: QContext,
}

impl Basis {
    pub fn new(tag: BasisTag, ctx: &QContext) -> Self {
        Basis { tag, ctx: ctx.clone() }
    }

    pub fn monomial(ctx: &QContext) -> Self {
        Self::new(BasisTag::Monomial, ctx)
    }

    pub fn is_monomial(&self) -> bool {
        self.tag == BasisTag::Monomial
    }

    /// The linear factor taking B_j to B_{j+1}, lowest degree first.
    fn factor(&self, j: usize) -> [GaussScalar; 2] {
        let qj = self.ctx.qpow(j as i64);
        let one = GaussScalar::one();
        match &self.tag {
            BasisTag::Monomial => [GaussScalar::zero(), one],
            BasisTag::QShifted => [one, -&qj],
            BasisTag::PairedProduct { alpha, tau } => {
                [&one + &(tau * &(&qj * &qj)), -&(alpha * &qj)]
            }
            BasisTag::ShiftedNodes => [-&qj, one],
            BasisTag::ImaginaryShifted => [one, -&(&GaussScalar::i() * &qj)],
        }
    }

    pub fn same(&self, other: &Basis) -> bool {
        self.tag == other.tag && self.ctx.same(&other.ctx)
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    pub basis: Basis,
    pub coeffs: Vec<GaussScalar>,
}

fn trim(mut v: Vec<GaussScalar>) -> Vec<GaussScalar> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        v.push(GaussScalar::zero());
    }
    v
}

fn mul_linear(p: &[GaussScalar], f: &[GaussScalar; 2]) -> Vec<GaussScalar> {
    let mut out = vec![GaussScalar::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[i] += &(c * &f[0]);
        out[i + 1] += &(c * &f[1]);
    }
    out
}

impl Polynomial {
    pub fn new(basis: Basis, coeffs: Vec<GaussScalar>) -> Self {
        Polynomial { basis, coeffs: trim(coeffs) }
    }

    pub fn monomial(ctx: &QContext, coeffs: Vec<GaussScalar>) -> Self {
        Self::new(Basis::monomial(ctx), coeffs)
    }

    pub fn zero(ctx: &QContext) -> Self {
        Self::monomial(ctx, vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &GaussScalar {
        self.coeffs.last().unwrap()
    }

    pub fn coeff(&self, k: usize) -> GaussScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn ctx(&self) -> &QContext {
        &self.basis.ctx
    }

    pub fn scale(&self, c: &GaussScalar) -> Polynomial {
        Polynomial::new(self.basis.clone(), self.coeffs.iter().map(|x| x * c).collect())
    }
}

pub fn basis_element(basis: &Basis, n: usize) -> Result<Polynomial> {
    basis.ctx.check_degree(n)?;
    let mut p = vec![GaussScalar::one()];
    for j in 0..n {
        p = mul_linear(&p, &basis.factor(j));
    }
    Ok(Polynomial::monomial(&basis.ctx, p))
}

/// All basis elements B_0..B_n, built incrementally.
pub fn basis_elements(basis: &Basis, n: usize) -> Result<Vec<Polynomial>> {
    basis.ctx.check_degree(n)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut p = vec![GaussScalar::one()];
    for j in 0..=n {
        out.push(Polynomial::monomial(&basis.ctx, p.clone()));
        if j < n {
            p = mul_linear(&p, &basis.factor(j));
        }
    }
    Ok(out)
}

pub fn to_monomial(p: &Polynomial) -> Polynomial {
    if p.basis.is_monomial() {
        return p.clone();
    }
    let mut acc = vec![GaussScalar::zero(); p.coeffs.len()];
    let mut b = vec![GaussScalar::one()];
    for (j, c) in p.coeffs.iter().enumerate() {
        if !c.is_zero() {
            for (k, bk) in b.iter().enumerate() {
                acc[k] += &(c * bk);
            }
        }
        if j + 1 < p.coeffs.len() {
            b = mul_linear(&b, &p.basis.factor(j));
        }
    }
    Polynomial::monomial(p.ctx(), acc)
}

pub fn poly_eval(p: &Polynomial, y: &GaussScalar) -> GaussScalar {
    if p.basis.is_monomial() {
        let mut acc = GaussScalar::zero();
        for c in p.coeffs.iter().rev() {
            acc = &(&acc * y) + c;
        }
        return acc;
    }
    // direct product form: sum c_j B_j(y)
    let mut acc = GaussScalar::zero();
    let mut bj = GaussScalar::one();
    for (j, c) in p.coeffs.iter().enumerate() {
        acc += &(c * &bj);
        let f = p.basis.factor(j);
        bj = &bj * &(&f[0] + &(&f[1] * y));
    }
    acc
}

pub fn linear_combination(terms: &[(GaussScalar, Polynomial)]) -> Result<Polynomial> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::ShapeMismatch("empty linear combination".into()));
    };
    let ctx = first.ctx().clone();
    let mut acc: Vec<GaussScalar> = Vec::new();
    for (c, p) in terms {
        if !p.ctx().same(&ctx) {
            return Err(Error::MixedContexts);
        }
        let m = to_monomial(p);
        if acc.len() < m.coeffs.len() {
            acc.resize(m.coeffs.len(), GaussScalar::zero());
        }
        for (k, x) in m.coeffs.iter().enumerate() {
            acc[k] += &(c * x);
        }
    }
    Ok(Polynomial::monomial(&ctx, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;
    use proptest::prelude::*;

    fn s(t: &str) -> GaussScalar {
        parse_scalar(t).unwrap()
    }

    fn ctx(q: &str) -> QContext {
        QContext::new(s(q), 12).unwrap()
    }

    fn v(xs: &[&str]) -> Vec<GaussScalar> {
        xs.iter().map(|x| s(x)).collect()
    }

    fn tags() -> Vec<BasisTag> {
        vec![
            BasisTag::Monomial,
            BasisTag::QShifted,
            BasisTag::PairedProduct { alpha: s("3/4"), tau: s("-2/9") },
            BasisTag::ShiftedNodes,
            BasisTag::ImaginaryShifted,
        ]
    }

    #[test]
    fn basis_examples() {
        let c = ctx("1/3");
        let e = basis_element(&Basis::new(BasisTag::QShifted, &c), 1).unwrap();
        assert_eq!(e.coeffs, v(&["1", "-1"]));
        let pair = BasisTag::PairedProduct { alpha: s("1"), tau: s("0") };
        let e = basis_element(&Basis::new(pair, &c), 1).unwrap();
        assert_eq!(e.coeffs, v(&["1", "-1"]));
        let e = basis_element(&Basis::new(BasisTag::ShiftedNodes, &c), 2).unwrap();
        assert_eq!(e.coeffs, v(&["1/3", "-4/3", "1"]));
        for t in tags() {
            let b = Basis::new(t, &c);
            assert_eq!(basis_element(&b, 0).unwrap().coeffs, v(&["1"]));
            for n in 0..=10 {
                assert_eq!(basis_element(&b, n).unwrap().degree(), n);
            }
        }
        assert!(basis_element(&Basis::monomial(&c), 13).is_err());
    }

    #[test]
    fn conversion_examples() {
        let c = ctx("2/5");
        let p = Polynomial::monomial(&c, v(&["2", "3"]));
        assert_eq!(to_monomial(&p).coeffs, v(&["2", "3"]));
        let qs = Basis::new(BasisTag::QShifted, &c);
        assert_eq!(to_monomial(&Polynomial::new(qs.clone(), v(&["0", "1"]))).coeffs, v(&["1", "-1"]));
        assert_eq!(to_monomial(&Polynomial::new(qs, v(&["1", "1"]))).coeffs, v(&["2", "-1"]));
    }

    #[test]
    fn eval_examples() {
        let c = ctx("1/3");
        assert!(poly_eval(&Polynomial::zero(&c), &s("5/7")).is_zero());
        assert!(poly_eval(&Polynomial::monomial(&c, v(&["1", "-1"])), &s("1")).is_zero());
        let p = Polynomial::new(Basis::new(BasisTag::QShifted, &c), v(&["0", "0", "1"]));
        assert_eq!(poly_eval(&p, &s("2")), s("-1/3"));
    }

    #[test]
    fn combination_examples() {
        let c = ctx("2/5");
        let p = Polynomial::new(Basis::new(BasisTag::QShifted, &c), v(&["1", "2", "3"]));
        let one = s("1");
        assert_eq!(linear_combination(&[(one.clone(), p.clone())]).unwrap(), to_monomial(&p));
        assert!(linear_combination(&[(one.clone(), p.clone()), (s("-1"), p.clone())]).unwrap().is_zero());
        let a = Polynomial::monomial(&c, v(&["1"]));
        let b = Polynomial::monomial(&c, v(&["0", "1"]));
        let r = linear_combination(&[(s("2"), a), (s("3"), b)]).unwrap();
        assert_eq!(r.coeffs, v(&["2", "3"]));
        let other = Polynomial::monomial(&ctx("3/7"), v(&["1"]));
        assert_eq!(linear_combination(&[(one.clone(), p), (one, other)]), Err(Error::MixedContexts));
    }

    #[test]
    fn shifted_vanishes_at_nodes() {
        let c = ctx("2/5");
        let b = Basis::new(BasisTag::QShifted, &c);
        for n in 1..=8 {
            let e = basis_element(&b, n).unwrap();
            for k in 0..n {
                assert!(poly_eval(&e, &c.qpow(-(k as i64))).is_zero());
            }
        }
    }

    fn rat() -> impl Strategy<Value = GaussScalar> {
        (-30i64..30, 1i64..30).prop_map(|(n, d)| GaussScalar::frac(n, d))
    }

    proptest! {
        #[test]
        fn eval_agrees_with_monomial(
            coeffs in prop::collection::vec(rat(), 1..7),
            pts in prop::collection::vec((rat(), rat()), 5),
            which in 0usize..5,
        ) {
            let c = ctx("3/7");
            let p = Polynomial::new(Basis::new(tags()[which].clone(), &c), coeffs);
            let m = to_monomial(&p);
            for (a, b) in pts {
                let y = &a + &(&b * &GaussScalar::i());
                prop_assert_eq!(poly_eval(&p, &y), poly_eval(&m, &y));
            }
        }

        #[test]
        fn paired_product_is_cosine_form(a in rat(), x0 in rat(), n in 0usize..7) {
            // prod (1 - 2 a q^j x0 + a^2 q^{2j}) is the paired basis at alpha=a, tau=a^2, y=2 x0
            let c = ctx("2/5");
            let q = c.q().clone();
            let one = GaussScalar::one();
            let two = GaussScalar::int(2);
            let direct: GaussScalar = (0..n).map(|j| {
                let aq = &a * &q.powu(j as u64);
                &(&one - &(&(&two * &aq) * &x0)) + &(&aq * &aq)
            }).product();
            let b = Basis::new(BasisTag::PairedProduct { alpha: a.clone(), tau: &a * &a }, &c);
            prop_assert_eq!(poly_eval(&basis_element(&b, n).unwrap(), &(&two * &x0)), direct);
        }
    }
}

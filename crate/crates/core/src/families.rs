use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::phi::{eval_phi_scalar, hyp_terms, PhiSpec};
use crate::poly::{to_monomial, Basis, BasisTag, Polynomial};
use crate::scalar::{tri, GaussScalar, QContext};

#[derive(Debug)]
pub struct FamilySpec {
    pub id: &'static str,
    pub params: &'static [&'static str],
    /// prefixes of numbered parameter groups, e.g. "b" for b1, b2, ...
    pub groups: &'static [&'static str],
    pub optional: &'static [&'static str],
    /// parameters that appear as divisors in the definition
    pub nonzero: &'static [&'static str],
    pub expansion_capable: bool,
    pub finite_support: bool,
    pub variable_note: &'static str,
}

const fn fam(
    id: &'static str,
    params: &'static [&'static str],
    nonzero: &'static [&'static str],
    variable_note: &'static str,
) -> FamilySpec {
    FamilySpec {
        id,
        params,
        groups: &[],
        optional: &[],
        nonzero,
        expansion_capable: true,
        finite_support: false,
        variable_note,
    }
}

const COS: &str = "y = 2cos(theta) = z + 1/z with z = e^{i theta}";
const COS_PHI: &str = "y = 2cos(theta + phi)";
const QX: &str = "y = q^{-x}";
const X: &str = "y = x";

static REGISTRY: &[FamilySpec] = &[
    fam("askey-wilson", &["a", "b", "c", "d"], &["a"], COS),
    FamilySpec {
        finite_support: true,
        ..fam("q-racah", &["alpha", "beta", "gamma", "delta"], &[], "y = q^{-x} + gamma delta q^{x+1}")
    },
    fam("continuous-dual-q-hahn", &["a", "b", "c"], &["a"], COS),
    fam("continuous-q-hahn", &["a", "b", "c", "d", "eiphi"], &["a", "eiphi"], COS_PHI),
    fam("big-q-jacobi", &["a", "b", "c"], &[], X),
    FamilySpec { finite_support: true, ..fam("q-hahn", &["alpha", "beta", "qnegN"], &["qnegN"], QX) },
    FamilySpec {
        finite_support: true,
        ..fam("dual-q-hahn", &["gamma", "delta", "qnegN"], &["qnegN"], "y = q^{-x} + gamma delta q^{x+1}")
    },
    fam("al-salam-chihara", &["a", "b"], &["a"], COS),
    fam("q-meixner-pollaczek", &["a", "eiphi"], &["a", "eiphi"], COS_PHI),
    fam("continuous-q-jacobi", &["qa", "qb"], &["qa"], "y = 2cos(theta); qa = q^{alpha/2+1/4}, qb = q^{beta/2+1/4}; needs q^{1/2}"),
    fam("continuous-q-ultraspherical", &["sqrtbeta"], &["sqrtbeta"], "y = 2cos(theta); sqrtbeta = beta^{1/2}; needs q^{1/2}"),
    fam("continuous-q-legendre", &[], &[], "y = 2cos(theta); needs q^{1/4}"),
    fam("big-q-laguerre", &["a", "b"], &[], X),
    fam("little-q-jacobi", &["a", "b"], &[], X),
    fam("little-q-legendre", &[], &[], X),
    fam("q-meixner", &["b", "c"], &["c"], QX),
    FamilySpec { finite_support: true, ..fam("quantum-q-krawtchouk", &["p", "qnegN"], &["p", "qnegN"], QX) },
    FamilySpec { finite_support: true, ..fam("q-krawtchouk", &["p", "qnegN"], &["qnegN"], QX) },
    FamilySpec { finite_support: true, ..fam("affine-q-krawtchouk", &["p", "qnegN"], &["qnegN"], QX) },
    FamilySpec {
        finite_support: true,
        ..fam("dual-q-krawtchouk", &["c", "qnegN"], &["qnegN"], "y = q^{-x} + c q^{x-N}")
    },
    fam("continuous-big-q-hermite", &["a"], &["a"], COS),
    fam("continuous-q-laguerre", &["qa"], &["qa"], "y = 2cos(theta); qa = q^{alpha/2+1/4}; needs q^{1/2}"),
    fam("little-q-laguerre", &["a"], &[], X),
    fam("q-laguerre", &["qalpha"], &["qalpha"], "y = x; qalpha = q^alpha"),
    fam("alternative-q-charlier", &["a"], &[], X),
    fam("q-charlier", &["a"], &["a"], QX),
    fam("al-salam-carlitz-1", &["a"], &["a"], X),
    fam("al-salam-carlitz-2", &["a"], &["a"], X),
    FamilySpec {
        expansion_capable: false,
        ..fam("continuous-q-hermite", &[], &[], "pointwise in z = e^{i theta}")
    },
    fam("stieltjes-wigert", &[], &[], X),
    fam("discrete-q-hermite-1", &[], &[], X),
    fam("discrete-q-hermite-2", &[], &[], X),
    FamilySpec { groups: &["b"], optional: &["d"], ..fam("d-little-q-laguerre", &[], &[], X) },
    FamilySpec { groups: &["b"], ..fam("d-q-meixner", &["c"], &["c"], QX) },
    FamilySpec { groups: &["b"], ..fam("d-big-q-laguerre", &[], &[], X) },
    FamilySpec { groups: &["b"], ..fam("d-q-laguerre", &[], &[], X) },
    FamilySpec { groups: &["a", "b"], ..fam("generic-q", &[], &[], X) },
    FamilySpec { groups: &["a", "b"], ..fam("generic-q-a", &["a"], &[], X) },
    FamilySpec { groups: &["a", "b"], ..fam("generic-hyp", &[], &[], X) },
    FamilySpec { groups: &["a", "b"], ..fam("generic-hyp-lambda", &["lambda"], &[], X) },
];

pub fn registry() -> &'static [FamilySpec] {
    REGISTRY
}

pub fn registry_lookup(id: &str) -> Result<&'static FamilySpec> {
    REGISTRY.iter().find(|f| f.id == id).ok_or_else(|| Error::UnknownFamily(id.to_string()))
}

impl FamilySpec {
    pub fn is_hypergeometric(&self) -> bool {
        self.id.starts_with("generic-hyp")
    }
}

fn group_index(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
        return None;
    }
    rest.parse().ok()
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub spec: &'static FamilySpec,
    pub bindings: BTreeMap<String, GaussScalar>,
    pub ctx: QContext,
}

/// A family polynomial in its own basis, P_n = prefactor * sum terms_k B_k.
pub enum Series {
    Basic { spec: PhiSpec, arg: GaussScalar, prefactor: GaussScalar },
    Hyper { num: Vec<GaussScalar>, den: Vec<GaussScalar>, n: usize, prefactor: GaussScalar },
}

impl Series {
    pub fn coefficients(&self) -> Result<Vec<GaussScalar>> {
        let (terms, pref) = match self {
            Series::Basic { spec, arg, prefactor } => (spec.terms(arg)?, prefactor),
            Series::Hyper { num, den, n, prefactor } => (hyp_terms(num, den, *n, &GaussScalar::one())?, prefactor),
        };
        Ok(terms.iter().map(|t| t * pref).collect())
    }
}

impl FamilyInstance {
    pub fn new(id: &str, bindings: BTreeMap<String, GaussScalar>, ctx: &QContext) -> Result<Self> {
        let spec = registry_lookup(id)?;
        for name in bindings.keys() {
            let known = spec.params.contains(&name.as_str())
                || spec.optional.contains(&name.as_str())
                || spec.groups.iter().any(|g| group_index(name, g).is_some());
            if !known {
                return Err(Error::Binding(format!("`{id}` has no parameter `{name}`")));
            }
        }
        for p in spec.params {
            if !bindings.contains_key(*p) {
                return Err(Error::Binding(format!("`{id}` needs parameter `{p}`")));
            }
        }
        for g in spec.groups {
            let mut idx: Vec<usize> = bindings.keys().filter_map(|k| group_index(k, g)).collect();
            idx.sort();
            if idx.iter().enumerate().any(|(i, &j)| j != i + 1) {
                return Err(Error::Binding(format!("`{id}` group {g} must be numbered {g}1, {g}2, ... without gaps")));
            }
        }
        for p in spec.nonzero {
            if bindings[*p].is_zero() {
                return Err(Error::Binding(format!("`{id}` needs {p} != 0")));
            }
        }
        let inst = FamilyInstance { spec, bindings, ctx: ctx.clone() };
        inst.check_shape()?;
        Ok(inst)
    }

    /// Parses `name=value` pairs.
    pub fn from_pairs(id: &str, pairs: &[(&str, GaussScalar)], ctx: &QContext) -> Result<Self> {
        let map = pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        Self::new(id, map, ctx)
    }

    fn check_shape(&self) -> Result<()> {
        let nb = self.group("b").len();
        match self.spec.id {
            "d-little-q-laguerre" | "d-q-meixner" | "d-q-laguerre" | "d-big-q-laguerre" if nb == 0 => {
                Err(Error::Binding(format!("`{}` needs at least b1", self.spec.id)))
            }
            "d-little-q-laguerre" => {
                self.zero_count()?;
                Ok(())
            }
            "continuous-q-jacobi" | "continuous-q-ultraspherical" | "continuous-q-laguerre" => {
                self.sqrt_q().map(|_| ())
            }
            "continuous-q-legendre" => self.quarter_q().map(|_| ()),
            _ => Ok(()),
        }
    }

    pub fn id(&self) -> &'static str {
        self.spec.id
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn p(&self, name: &str) -> GaussScalar {
        self.bindings.get(name).cloned().unwrap_or_default()
    }

    pub fn group(&self, prefix: &str) -> Vec<GaussScalar> {
        let mut v: Vec<(usize, GaussScalar)> = self
            .bindings
            .iter()
            .filter_map(|(k, x)| group_index(k, prefix).map(|i| (i, x.clone())))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v.into_iter().map(|(_, x)| x).collect()
    }

    /// Number of zero numerator slots for the d-little family.
    pub fn zero_count(&self) -> Result<usize> {
        match self.bindings.get("d") {
            None => Ok(self.group("b").len()),
            Some(d) => {
                if d.is_real() && d.re().is_integer() && !d.re().numer().sign().eq(&num_bigint::Sign::Minus) {
                    Ok(d.re().to_integer().try_into().map_err(|_| Error::Binding("d too large".into()))?)
                } else {
                    Err(Error::Binding("d must be a non-negative integer".into()))
                }
            }
        }
    }

    pub fn sqrt_q(&self) -> Result<GaussScalar> {
        self.ctx.root(2).ok_or_else(|| {
            Error::PreconditionViolated(format!("`{}` needs q to be a rational square", self.spec.id))
        })
    }

    pub fn quarter_q(&self) -> Result<GaussScalar> {
        self.ctx.root(4).ok_or_else(|| {
            Error::PreconditionViolated(format!("`{}` needs q to be a rational fourth power", self.spec.id))
        })
    }

    /// Same family id and identical bindings.
    pub fn same_as(&self, other: &FamilyInstance) -> bool {
        self.spec.id == other.spec.id && self.bindings == other.bindings && self.ctx.same(&other.ctx)
    }

    /// The working variable y, with any parameters it depends on.
    pub fn variable(&self) -> String {
        let p = |k: &str| self.p(k);
        match self.spec.id {
            "q-racah" | "dual-q-hahn" => format!("q^-x + ({}) q^(x+1)", &p("gamma") * &p("delta")),
            "dual-q-krawtchouk" => format!("q^-x + ({}) q^x", &p("c") * &p("qnegN")),
            "continuous-q-hahn" | "q-meixner-pollaczek" => format!("2cos(theta+phi), e^(i phi) = {}", p("eiphi")),
            "continuous-q-hermite" => "e^(i theta)".into(),
            _ if self.spec.variable_note.starts_with(COS) || self.spec.variable_note.starts_with("y = 2cos(theta);") => {
                "2cos(theta)".into()
            }
            _ if self.spec.variable_note == QX => "q^-x".into(),
            _ => "x".into(),
        }
    }

    pub fn basis(&self) -> Result<Basis> {
        Ok(Basis::new(self.basis_tag()?, &self.ctx))
    }

    pub fn basis_tag(&self) -> Result<BasisTag> {
        let p = |k: &str| self.p(k);
        let pair = |alpha: GaussScalar, tau: GaussScalar| BasisTag::PairedProduct { alpha, tau };
        let q = self.ctx.q().clone();
        Ok(match self.spec.id {
            "askey-wilson" | "continuous-dual-q-hahn" | "al-salam-chihara" | "continuous-big-q-hermite" => {
                pair(p("a"), &p("a") * &p("a"))
            }
            "q-racah" | "dual-q-hahn" => pair(GaussScalar::one(), &(&p("gamma") * &p("delta")) * &q),
            "continuous-q-hahn" | "q-meixner-pollaczek" => {
                let ae = &p("a") * &p("eiphi");
                pair(ae.clone(), &ae * &ae)
            }
            "continuous-q-jacobi" | "continuous-q-laguerre" => pair(p("qa"), &p("qa") * &p("qa")),
            "continuous-q-ultraspherical" => pair(p("sqrtbeta"), &p("sqrtbeta") * &p("sqrtbeta")),
            "continuous-q-legendre" => {
                let r = self.quarter_q()?;
                pair(r.clone(), &r * &r)
            }
            "dual-q-krawtchouk" => pair(GaussScalar::one(), &p("c") * &p("qnegN")),
            "big-q-jacobi" | "q-hahn" | "big-q-laguerre" | "q-meixner" | "quantum-q-krawtchouk" | "q-krawtchouk"
            | "affine-q-krawtchouk" | "q-charlier" | "al-salam-carlitz-2" | "d-q-meixner" | "d-big-q-laguerre" => {
                BasisTag::QShifted
            }
            "al-salam-carlitz-1" | "discrete-q-hermite-1" => BasisTag::ShiftedNodes,
            "discrete-q-hermite-2" => BasisTag::ImaginaryShifted,
            "continuous-q-hermite" => return Err(Error::NotExpansionCapable(self.spec.id.into())),
            _ => BasisTag::Monomial,
        })
    }

    pub fn series(&self, n: usize) -> Result<Series> {
        self.ctx.check_degree(n)?;
        let c = &self.ctx;
        let q = c.q().clone();
        let ni = n as i64;
        let qn = c.qpow(-ni);
        let qp = |k: i64| c.qpow(k);
        let p = |k: &str| self.p(k);
        let z0 = GaussScalar::zero();
        let one = GaussScalar::one();
        let basic = |num: Vec<GaussScalar>, den: Vec<GaussScalar>, arg: GaussScalar, hidden: usize, prefactor: GaussScalar| {
            Ok(Series::Basic { spec: PhiSpec::new(num, den, c, n)?.with_hidden(hidden), arg, prefactor })
        };
        let inv_pow = |x: &GaussScalar| x.pow(-ni).ok_or_else(|| Error::VanishingFactor("zero base to negative power".into()));
        match self.spec.id {
            "askey-wilson" => {
                let (a, b, cc, d) = (p("a"), p("b"), p("c"), p("d"));
                let den = vec![&a * &b, &a * &cc, &a * &d];
                let pref = &c.pochs(&den, n) * &inv_pow(&a)?;
                let abcd = &(&a * &b) * &(&cc * &d);
                basic(vec![qn, &abcd * &qp(ni - 1)], den, q, 2, pref)
            }
            "q-racah" => {
                let (al, be, ga, de) = (p("alpha"), p("beta"), p("gamma"), p("delta"));
                let num = vec![qn, &(&al * &be) * &qp(ni + 1)];
                basic(num, vec![&al * &q, &(&be * &de) * &q, &ga * &q], q, 2, one)
            }
            "continuous-dual-q-hahn" => {
                let (a, b, cc) = (p("a"), p("b"), p("c"));
                let den = vec![&a * &b, &a * &cc];
                let pref = &c.pochs(&den, n) * &inv_pow(&a)?;
                basic(vec![qn], den, q, 2, pref)
            }
            "continuous-q-hahn" => {
                let (a, b, cc, d, e) = (p("a"), p("b"), p("c"), p("d"), p("eiphi"));
                let den = vec![&(&a * &b) * &(&e * &e), &a * &cc, &a * &d];
                let pref = &c.pochs(&den, n) * &inv_pow(&(&a * &e))?;
                let abcd = &(&a * &b) * &(&cc * &d);
                basic(vec![qn, &abcd * &qp(ni - 1)], den, q, 2, pref)
            }
            "big-q-jacobi" => {
                let (a, b, cc) = (p("a"), p("b"), p("c"));
                basic(vec![qn, &(&a * &b) * &qp(ni + 1)], vec![&a * &q, &cc * &q], q, 1, one)
            }
            "q-hahn" => {
                let (al, be) = (p("alpha"), p("beta"));
                basic(vec![qn, &(&al * &be) * &qp(ni + 1)], vec![&al * &q, p("qnegN")], q, 1, one)
            }
            "dual-q-hahn" => basic(vec![qn], vec![&p("gamma") * &q, p("qnegN")], q, 2, one),
            "al-salam-chihara" => {
                let (a, b) = (p("a"), p("b"));
                let ab = &a * &b;
                let pref = &c.poch(&ab, n) * &inv_pow(&a)?;
                basic(vec![qn], vec![ab, z0], q, 2, pref)
            }
            "q-meixner-pollaczek" => {
                let (a, e) = (p("a"), p("eiphi"));
                let a2 = &a * &a;
                let pref = &(&c.poch(&a2, n) / c.qq(n)?) * &inv_pow(&(&a * &e))?;
                basic(vec![qn], vec![a2, z0], q, 2, pref)
            }
            "continuous-q-jacobi" => {
                let (aa, bb, s) = (p("qa"), p("qb"), self.sqrt_q()?);
                let ab = &aa * &bb;
                let a2s = &(&aa * &aa) * &s;
                let pref = &c.poch(&a2s, n) / c.qq(n)?;
                let num = vec![qn, &(&ab * &ab) * &qp(ni)];
                basic(num, vec![a2s, -&ab, -&(&ab * &s)], q, 2, pref)
            }
            "continuous-q-ultraspherical" => {
                let (b, s) = (p("sqrtbeta"), self.sqrt_q()?);
                let be = &b * &b;
                let be2 = &be * &be;
                let pref = &(&c.poch(&be2, n) / c.qq(n)?) * &inv_pow(&b)?;
                basic(vec![qn, &be2 * &qp(ni)], vec![&be * &s, -&be, -&(&be * &s)], q, 2, pref)
            }
            "continuous-q-legendre" => {
                let r = self.quarter_q()?;
                let s = &r * &r;
                basic(vec![qn, qp(ni + 1)], vec![q.clone(), -&s, -&q], q, 2, one)
            }
            "big-q-laguerre" => basic(vec![qn, z0], vec![&p("a") * &q, &p("b") * &q], q, 1, one),
            "little-q-jacobi" => {
                let ab = &p("a") * &p("b");
                basic(vec![qn, &ab * &qp(ni + 1)], vec![&p("a") * &q], q, 0, one)
            }
            "little-q-legendre" => basic(vec![qn, qp(ni + 1)], vec![q.clone()], q, 0, one),
            "q-meixner" => basic(vec![qn], vec![&p("b") * &q], -&(&qp(ni + 1) / &p("c")), 1, one),
            "quantum-q-krawtchouk" => basic(vec![qn], vec![p("qnegN")], &p("p") * &qp(ni + 1), 1, one),
            "q-krawtchouk" => basic(vec![qn, -&(&p("p") * &qp(ni))], vec![p("qnegN"), z0], q, 1, one),
            "affine-q-krawtchouk" => basic(vec![qn, z0], vec![&p("p") * &q, p("qnegN")], q, 1, one),
            "dual-q-krawtchouk" => basic(vec![qn], vec![p("qnegN"), z0], q, 2, one),
            "continuous-big-q-hermite" => basic(vec![qn], vec![z0.clone(), z0], q, 2, inv_pow(&p("a"))?),
            "continuous-q-laguerre" => {
                let (aa, s) = (p("qa"), self.sqrt_q()?);
                let a2s = &(&aa * &aa) * &s;
                let pref = &c.poch(&a2s, n) / c.qq(n)?;
                basic(vec![qn], vec![a2s, z0], q, 2, pref)
            }
            "little-q-laguerre" => basic(vec![qn, z0], vec![&p("a") * &q], q, 0, one),
            "q-laguerre" => {
                let qa = p("qalpha");
                let qaq = &qa * &q;
                let pref = &c.poch(&qaq, n) / c.qq(n)?;
                basic(vec![qn], vec![qaq], -&(&qp(ni + 1) * &qa), 0, pref)
            }
            "alternative-q-charlier" => basic(vec![qn, -&(&p("a") * &qp(ni))], vec![z0], q, 0, one),
            "q-charlier" => basic(vec![qn], vec![z0], -&(&qp(ni + 1) / &p("a")), 1, one),
            "al-salam-carlitz-1" => {
                let a = p("a");
                let pref = &(-&a).powu(n as u64) * &qp(tri(ni));
                basic(vec![qn], vec![z0], &q / &a, 1, pref)
            }
            "al-salam-carlitz-2" => {
                let a = p("a");
                let pref = &(-&a).powu(n as u64) * &qp(-tri(ni));
                basic(vec![qn], vec![], &qp(ni) / &a, 1, pref)
            }
            "stieltjes-wigert" => {
                let pref = &one / c.qq(n)?;
                basic(vec![qn], vec![z0], -&qp(ni + 1), 0, pref)
            }
            "discrete-q-hermite-1" => basic(vec![qn], vec![z0], -&q, 1, qp(tri(ni))),
            "discrete-q-hermite-2" => {
                let pref = &GaussScalar::i().pow(-ni).unwrap() * &qp(-tri(ni));
                basic(vec![qn], vec![], -&qp(ni), 1, pref)
            }
            "continuous-q-hermite" => Err(Error::NotExpansionCapable(self.spec.id.into())),
            "d-little-q-laguerre" => {
                let mut num = vec![qn];
                num.extend(std::iter::repeat(z0).take(self.zero_count()?));
                basic(num, self.group("b"), q, 0, one)
            }
            "d-q-meixner" => basic(vec![qn], self.group("b"), -&(&qp(ni + 1) / &p("c")), 1, one),
            "d-big-q-laguerre" => {
                let b = self.group("b");
                let mut num = vec![qn];
                num.extend(std::iter::repeat(z0).take(b.len() - 1));
                basic(num, b, q, 1, one)
            }
            "d-q-laguerre" => basic(vec![qn], self.group("b"), qp(ni), 0, one),
            "generic-q" => {
                let mut num = vec![qn];
                num.extend(self.group("a"));
                basic(num, self.group("b"), q, 0, one)
            }
            "generic-q-a" => {
                let mut num = vec![qn, &p("a") * &qp(ni)];
                num.extend(self.group("a"));
                basic(num, self.group("b"), q, 0, one)
            }
            "generic-hyp" | "generic-hyp-lambda" => {
                let mut num = vec![GaussScalar::int(-ni)];
                if self.spec.id == "generic-hyp-lambda" {
                    num.push(&p("lambda") + &GaussScalar::int(ni));
                }
                num.extend(self.group("a"));
                Ok(Series::Hyper { num, den: self.group("b"), n, prefactor: one })
            }
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

/// Coefficients D_k(n) of P_n in the family's own basis.
pub fn family_coefficients(inst: &FamilyInstance, n: usize) -> Result<Vec<GaussScalar>> {
    let mut co = inst.series(n)?.coefficients()?;
    co.resize(n + 1, GaussScalar::zero());
    Ok(co)
}

pub fn family_polynomial_in_basis(inst: &FamilyInstance, n: usize) -> Result<Polynomial> {
    let p = Polynomial::new(inst.basis()?, family_coefficients(inst, n)?);
    if p.degree() != n || p.leading().is_zero() {
        return Err(Error::DegenerateLeadingCoefficient { n });
    }
    Ok(p)
}

pub fn family_polynomial(inst: &FamilyInstance, n: usize) -> Result<Polynomial> {
    let m = to_monomial(&family_polynomial_in_basis(inst, n)?);
    if m.degree() != n {
        return Err(Error::DegenerateLeadingCoefficient { n });
    }
    Ok(m)
}

pub fn family_basis_element(inst: &FamilyInstance, n: usize) -> Result<Polynomial> {
    crate::poly::basis_element(&inst.basis()?, n)
}

/// Continuous q-Hermite H_n at z = e^{i theta}: z^n 2phi0(q^{-n}, 0; -; q, q^n z^{-2}).
pub fn continuous_q_hermite(n: usize, z: &GaussScalar, ctx: &QContext) -> Result<GaussScalar> {
    let ni = n as i64;
    let spec = PhiSpec::new(vec![ctx.qpow(-ni), GaussScalar::zero()], vec![], ctx, n)?;
    let zinv2 = z.pow(-2).ok_or_else(|| Error::VanishingFactor("z = 0".into()))?;
    Ok(&z.powu(n as u64) * &eval_phi_scalar(&spec, &(&ctx.qpow(ni) * &zinv2))?)
}

/// Pythagorean points on the unit circle, pairwise distinct.
pub fn unit_circle_points(count: usize) -> Vec<GaussScalar> {
    (0..count as i64)
        .map(|j| {
            let t = j + 2;
            let d = t * t + 1;
            GaussScalar::gauss((t * t - 1, d), (2 * t, d))
        })
        .collect()
}

use crate::error::{Error, Result};
use crate::families::{registry_lookup, unit_circle_points, FamilyInstance};
use crate::scalar::{GaussScalar, QContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

pub const RETRY_CAP: usize = 100;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A rational with numerator and denominator at most 64 in size, never 0, +-1 or a small power of q.
    pub fn rational(&mut self, ctx: &QContext) -> GaussScalar {
        loop {
            let n = self.rng.gen_range(-64i64..=64);
            let d = self.rng.gen_range(1i64..=64);
            let x = GaussScalar::frac(n, d);
            if x.is_zero() || x.is_one() || (-&x).is_one() {
                continue;
            }
            if (-24..=24).any(|k| ctx.qpow(k) == x) {
                continue;
            }
            return x;
        }
    }

    pub fn small_int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    fn unit(&mut self) -> GaussScalar {
        let pts = unit_circle_points(8);
        pts[self.rng.gen_range(0..pts.len())].clone()
    }

    /// Random bindings; `sizes` gives the length of each numbered group (missing groups get 1).
    pub fn bindings(&mut self, id: &str, sizes: &[(&str, usize)], ctx: &QContext) -> Result<BTreeMap<String, GaussScalar>> {
        let spec = registry_lookup(id)?;
        let mut map = BTreeMap::new();
        for p in spec.params {
            let v = if *p == "eiphi" { self.unit() } else { self.rational(ctx) };
            map.insert(p.to_string(), v);
        }
        for g in spec.groups {
            let count = sizes.iter().find(|(k, _)| k == g).map_or(1, |(_, c)| *c);
            for i in 1..=count {
                map.insert(format!("{g}{i}"), self.rational(ctx));
            }
        }
        Ok(map)
    }

    /// Draws instances until `accept` stops reporting a degenerate choice.
    pub fn instance<F>(&mut self, id: &str, sizes: &[(&str, usize)], ctx: &QContext, accept: F) -> Result<FamilyInstance>
    where
        F: Fn(&FamilyInstance) -> Result<()>,
    {
        for _ in 0..RETRY_CAP {
            let inst = FamilyInstance::new(id, self.bindings(id, sizes, ctx)?, ctx)?;
            match accept(&inst) {
                Ok(()) => return Ok(inst),
                Err(e) if e.is_degenerate() => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::SamplingExhausted(RETRY_CAP))
    }

    /// Source and target of one family with `shared` parameters copied and the product of
    /// `product` parameters matched by solving for the last one.
    pub fn pair<F>(
        &mut self,
        id: &str,
        sizes: &[(&str, usize)],
        shared: &[&str],
        product: &[&str],
        ctx: &QContext,
        accept: F,
    ) -> Result<(FamilyInstance, FamilyInstance)>
    where
        F: Fn(&FamilyInstance, &FamilyInstance) -> Result<()>,
    {
        for _ in 0..RETRY_CAP {
            let src = self.bindings(id, sizes, ctx)?;
            let mut tgt = self.bindings(id, sizes, ctx)?;
            for p in shared {
                tgt.insert(p.to_string(), src[*p].clone());
            }
            if let Some((last, rest)) = product.split_last() {
                let want: GaussScalar = product.iter().map(|p| src[*p].clone()).product();
                let have: GaussScalar = rest.iter().map(|p| tgt[*p].clone()).product();
                tgt.insert(last.to_string(), &want / &have);
            }
            let (s, t) = (FamilyInstance::new(id, src, ctx)?, FamilyInstance::new(id, tgt, ctx)?);
            match accept(&s, &t) {
                Ok(()) => return Ok((s, t)),
                Err(e) if e.is_degenerate() => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::SamplingExhausted(RETRY_CAP))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> QContext {
        QContext::new(GaussScalar::frac(2, 5), 12).unwrap()
    }

    #[test]
    fn same_seed_same_draws() {
        let c = ctx();
        let a: Vec<_> = (0..20).scan(Sampler::new(7), |s, _| Some(s.rational(&c))).collect();
        let b: Vec<_> = (0..20).scan(Sampler::new(7), |s, _| Some(s.rational(&c))).collect();
        assert_eq!(a, b);
        let d: Vec<_> = (0..20).scan(Sampler::new(8), |s, _| Some(s.rational(&c))).collect();
        assert_ne!(a, d);
    }

    #[test]
    fn draws_are_small_and_not_q_powers() {
        let c = ctx();
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let x = s.rational(&c);
            assert!(x.is_real() && !x.is_zero());
            assert!(x.re().numer().magnitude() <= &64u32.into() && x.re().denom() <= &64.into());
            assert!((-24..=24).all(|k| c.qpow(k) != x));
        }
    }

    #[test]
    fn pair_respects_constraints() {
        let c = ctx();
        let mut s = Sampler::new(3);
        let (a, b) = s.pair("q-racah", &[], &[], &["gamma", "delta"], &c, |_, _| Ok(())).unwrap();
        assert_eq!(&a.p("gamma") * &a.p("delta"), &b.p("gamma") * &b.p("delta"));
        let (a, b) = s.pair("continuous-q-hahn", &[], &["a", "eiphi"], &[], &c, |_, _| Ok(())).unwrap();
        assert_eq!((a.p("a"), a.p("eiphi")), (b.p("a"), b.p("eiphi")));
        assert!(GaussScalar::real(a.p("eiphi").norm_sqr()).is_one());
    }

    #[test]
    fn gives_up_after_cap() {
        let c = ctx();
        let mut s = Sampler::new(3);
        let r = s.instance("little-q-laguerre", &[], &c, |_| Err(Error::VanishingFactor("always".into())));
        assert_eq!(r.unwrap_err(), Error::SamplingExhausted(RETRY_CAP));
        let r = s.instance("little-q-laguerre", &[], &c, |_| Err(Error::NonTerminating));
        assert_eq!(r.unwrap_err(), Error::NonTerminating);
    }

    #[test]
    fn group_sizes() {
        let c = ctx();
        let mut s = Sampler::new(5);
        let f = s.instance("generic-q", &[("a", 2), ("b", 0)], &c, |_| Ok(())).unwrap();
        assert_eq!((f.group("a").len(), f.group("b").len()), (2, 0));
    }
}

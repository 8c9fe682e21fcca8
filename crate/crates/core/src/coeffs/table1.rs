use super::{Kit, Printed};
use crate::error::Result;
use crate::families::FamilyInstance;
use crate::scalar::{sign, tri, GaussScalar};

pub type InvFn = fn(&Kit, &FamilyInstance, usize, usize) -> Result<GaussScalar>;

pub struct InversionRow {
    pub id: &'static str,
    pub provenance: &'static str,
    pub shipped: InvFn,
    pub printed: Printed<InvFn>,
}

fn neg(x: &GaussScalar) -> GaussScalar {
    -x
}

// (-1)^m [n,m] q^{T(m)}, common to most rows
fn core(k: &Kit, n: usize, m: usize) -> GaussScalar {
    sign(m as i64) * k.qb(n, m) * k.qp(tri(m as i64))
}

fn askey_wilson(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c, d) = (f.p("a"), f.p("b"), f.p("c"), f.p("d"));
    let mi = m as i64;
    let abcd = &(&a * &b) * &(&c * &d);
    let qm = k.qp(mi);
    let top = k.qb(n, m) * k.qp(tri(mi)) * k.pw(&neg(&a), mi)? * k.pochs(&[&a * &b * &qm, &a * &c * &qm, &a * &d * &qm], n - m);
    k.ratio(top, k.poch(&(&abcd * &k.qp(mi - 1)), m) * k.poch(&(&abcd * &k.qp(2 * mi)), n - m))
}

fn q_racah(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (al, be, ga, de) = (f.p("alpha"), f.p("beta"), f.p("gamma"), f.p("delta"));
    let q = k.q();
    let mi = m as i64;
    let ab = &al * &be;
    let top = core(k, n, m) * k.pochs(&[&al * &q, &be * &de * &q, &ga * &q], n);
    k.ratio(top, k.poch(&(&ab * &k.qp(mi + 1)), m) * k.poch(&(&ab * &k.qp(2 * mi + 2)), n - m))
}

fn continuous_dual_q_hahn(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c) = (f.p("a"), f.p("b"), f.p("c"));
    let qm = k.qp(m as i64);
    Ok(k.pw(&neg(&a), m as i64)? * k.qb(n, m) * k.qp(tri(m as i64)) * k.pochs(&[&a * &b * &qm, &a * &c * &qm], n - m))
}

fn continuous_q_hahn(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c, d, e) = (f.p("a"), f.p("b"), f.p("c"), f.p("d"), f.p("eiphi"));
    let mi = m as i64;
    let qm = k.qp(mi);
    let abcd = &(&a * &b) * &(&c * &d);
    let ae = &a * &e;
    let top = k.qb(n, m)
        * k.qp(tri(mi))
        * k.pw(&neg(&ae), mi)?
        * k.pochs(&[&a * &b * &e * &e * &qm, &a * &c * &qm, &a * &d * &qm], n - m);
    k.ratio(top, k.poch(&(&abcd * &k.qp(mi - 1)), m) * k.poch(&(&abcd * &k.qp(2 * mi)), n - m))
}

fn big_q_jacobi(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c) = (f.p("a"), f.p("b"), f.p("c"));
    let q = k.q();
    let mi = m as i64;
    let ab = &a * &b;
    let top = core(k, n, m) * k.pochs(&[&a * &q, &c * &q], n);
    k.ratio(top, k.poch(&(&ab * &k.qp(2 * mi + 2)), n - m) * k.poch(&(&ab * &k.qp(mi + 1)), m))
}

fn q_hahn(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (al, be, qn) = (f.p("alpha"), f.p("beta"), f.p("qnegN"));
    let mi = m as i64;
    let ab = &al * &be;
    let top = core(k, n, m) * k.pochs(&[qn, &al * &k.q()], n);
    k.ratio(top, k.poch(&(&ab * &k.qp(mi + 1)), m) * k.poch(&(&ab * &k.qp(2 * mi + 2)), n - m))
}

fn dual_q_hahn(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(core(k, n, m) * k.pochs(&[&f.p("gamma") * &k.q(), f.p("qnegN")], n))
}

fn al_salam_chihara(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b) = (f.p("a"), f.p("b"));
    let mi = m as i64;
    Ok(k.pw(&neg(&a), mi)? * k.poch(&(&a * &b * &k.qp(mi)), n - m) * k.qb(n, m) * k.qp(tri(mi)))
}

fn q_meixner_pollaczek(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, e) = (f.p("a"), f.p("eiphi"));
    let mi = m as i64;
    Ok(k.poch(&(&a * &a * &k.qp(mi)), n - m) * k.qq(m) * k.pw(&neg(&(&a * &e)), mi)? * k.qb(n, m) * k.qp(tri(mi)))
}

fn cqj(k: &Kit, f: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (aa, bb, s) = (f.p("qa"), f.p("qb"), f.sqrt_q()?);
    let mi = m as i64;
    let ab = &aa * &bb;
    let second = if printed { neg(&k.ratio(GaussScalar::one(), &ab * &s)?) } else { neg(&(&ab * &s)) };
    let a2b2 = &ab * &ab;
    let top = k.pochs(&[neg(&ab), second], n)
        * core(k, n, m)
        * k.qq(m)
        * k.poch(&(&aa * &aa * &s * &k.qp(mi)), n - m);
    k.ratio(top, k.poch(&(&a2b2 * &k.qp(mi)), m) * k.poch(&(&a2b2 * &k.qp(2 * mi + 1)), n - m))
}

fn continuous_q_jacobi(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqj(k, f, n, m, false)
}

fn continuous_q_jacobi_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqj(k, f, n, m, true)
}

fn continuous_q_ultraspherical(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (b, s) = (f.p("sqrtbeta"), f.sqrt_q()?);
    let mi = m as i64;
    let be = &b * &b;
    let be2 = &be * &be;
    let top = k.qb(n, m)
        * k.qp(tri(mi))
        * k.pochs(&[&be * &s, neg(&be), neg(&(&be * &s))], n)
        * k.pw(&neg(&b), mi)?
        * k.qq(m);
    let bot = k.poch(&(&be2 * &k.qp(mi)), m) * k.poch(&be2, m) * k.poch(&(&be2 * &k.qp(2 * mi + 1)), n - m);
    k.ratio(top, bot)
}

fn continuous_q_legendre(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let r = f.quarter_q()?;
    let s = &r * &r;
    let q = k.q();
    let mi = m as i64;
    let top = core(k, n, m) * k.pochs(&[q.clone(), neg(&s), neg(&q)], n);
    k.ratio(top, k.poch(&k.qp(mi + 1), m) * k.poch(&k.qp(2 * mi + 2), n - m))
}

fn big_q_laguerre(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let q = k.q();
    Ok(core(k, n, m) * k.pochs(&[&f.p("a") * &q, &f.p("b") * &q], n))
}

fn little_q_jacobi(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b) = (f.p("a"), f.p("b"));
    let mi = m as i64;
    let ab = &a * &b;
    let top = core(k, n, m) * k.poch(&(&a * &k.q()), n);
    k.ratio(top, k.poch(&(&ab * &k.qp(mi + 1)), m) * k.poch(&(&ab * &k.qp(2 * mi + 2)), n - m))
}

fn little_q_legendre(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let mi = m as i64;
    let top = core(k, n, m) * k.qq(n);
    k.ratio(top, k.poch(&k.qp(mi + 1), m) * k.poch(&k.qp(2 * mi + 2), n - m))
}

fn shift(k: &Kit, n: usize, m: usize) -> GaussScalar {
    k.qp(m as i64 - n as i64)
}

fn q_meixner_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (b, c) = (f.p("b"), f.p("c"));
    let (ni, mi) = (n as i64, m as i64);
    Ok(k.poch(&(&b * &k.q()), n) * sign(mi + ni) * c.powu(n as u64) * k.qb(n, m) * k.qp(tri(mi) - mi * ni))
}

fn q_meixner(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(q_meixner_printed(k, f, n, m)? * shift(k, n, m))
}

fn quantum_q_krawtchouk_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (p, qn) = (f.p("p"), f.p("qnegN"));
    let (ni, mi) = (n as i64, m as i64);
    Ok(k.pw(&p, -ni)? * k.poch(&qn, n) * sign(mi) * k.qb(n, m) * k.qp(tri(mi) - mi * ni))
}

fn quantum_q_krawtchouk(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(quantum_q_krawtchouk_printed(k, f, n, m)? * shift(k, n, m))
}

fn q_krawtchouk(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (p, qn) = (f.p("p"), f.p("qnegN"));
    let mi = m as i64;
    let top = core(k, n, m) * k.poch(&qn, n);
    k.ratio(top, k.poch(&neg(&(&p * &k.qp(mi))), m) * k.poch(&neg(&(&p * &k.qp(2 * mi + 1))), n - m))
}

fn affine_q_krawtchouk(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(core(k, n, m) * k.pochs(&[&f.p("p") * &k.q(), f.p("qnegN")], n))
}

fn dual_q_krawtchouk(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(core(k, n, m) * k.poch(&f.p("qnegN"), n))
}

fn continuous_big_q_hermite(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(k.pw(&neg(&f.p("a")), m as i64)? * k.qb(n, m) * k.qp(tri(m as i64)))
}

fn continuous_q_laguerre(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (aa, s) = (f.p("qa"), f.sqrt_q()?);
    Ok(core(k, n, m) * k.qq(m) * k.poch(&(&aa * &aa * &s * &k.qp(m as i64)), n - m))
}

fn little_q_laguerre(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(core(k, n, m) * k.poch(&(&f.p("a") * &k.q()), n))
}

fn q_laguerre_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let qa = f.p("qalpha");
    let (ni, mi) = (n as i64, m as i64);
    Ok(k.pw(&qa, -ni)?
        * k.qp(-ni * mi - tri(ni))
        * core(k, n, m)
        * k.qq(m)
        * k.poch(&(&qa * &k.qp(mi + 1)), n - m))
}

fn q_laguerre(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(q_laguerre_printed(k, f, n, m)? * shift(k, n, m))
}

fn alternative_q_charlier(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let a = f.p("a");
    let mi = m as i64;
    k.ratio(core(k, n, m), k.poch(&neg(&(&a * &k.qp(mi))), m) * k.poch(&neg(&(&a * &k.qp(2 * mi + 1))), n - m))
}

fn q_charlier_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(sign(mi + ni) * f.p("a").powu(n as u64) * k.qb(n, m) * k.qp(tri(mi) - ni * mi))
}

fn q_charlier(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(q_charlier_printed(k, f, n, m)? * shift(k, n, m))
}

fn al_salam_carlitz_1(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(f.p("a").powu((n - m) as u64) * k.qb(n, m))
}

fn al_salam_carlitz_2_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(f.p("a").powu((n - m) as u64) * k.qp(tri(ni) + (mi - ni) * (mi - 1)) * sign(ni) * k.qb(n, m))
}

fn al_salam_carlitz_2(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(al_salam_carlitz_2_printed(k, f, n, m)? * shift(k, n, m))
}

fn stieltjes_wigert_printed(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(k.qq(m) * sign(mi) * k.qp(tri(mi) - tri(ni)) * k.qb(n, m))
}

fn stieltjes_wigert(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    let e = (-ni * (ni + 1) + mi * (mi + 1)) / 2 - mi * ni;
    Ok(k.qq(m) * sign(mi) * k.qb(n, m) * k.qp(e))
}

fn discrete_q_hermite_1(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(sign((m + n) as i64) * k.qb(n, m))
}

fn minus_i_pow(m: usize) -> GaussScalar {
    (-GaussScalar::i()).powu(m as u64)
}

fn discrete_q_hermite_2_printed(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(minus_i_pow(m) * k.qp(ni * (mi - 1) + tri(ni)) * k.qb(n, m))
}

fn discrete_q_hermite_2(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(minus_i_pow(m) * k.qb(n, m) * k.qp(tri(ni) + mi * (mi - ni)))
}

/// Coefficient of z^{-m} H_m(z) in z^{-2n}.
pub fn continuous_q_hermite(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(sign((n + m) as i64) * k.qb(n, m) * k.qp(tri((n - m) as i64)))
}

pub fn continuous_q_hermite_printed(k: &Kit, _f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ni, mi) = (n as i64, m as i64);
    Ok(sign(ni + mi) * k.qb(n, m) * k.qp(ni * (mi - 1) + tri(ni) + tri(mi)))
}

macro_rules! row {
    ($id:literal, $prov:literal, $f:ident) => {
        InversionRow { id: $id, provenance: $prov, shipped: $f, printed: Printed::Same }
    };
    ($id:literal, $prov:literal, $f:ident, $p:ident) => {
        InversionRow { id: $id, provenance: $prov, shipped: $f, printed: Printed::Differs($p) }
    };
}

pub static ROWS: &[InversionRow] = &[
    row!("askey-wilson", "Eq4.2", askey_wilson),
    row!("q-racah", "Eq4.5", q_racah),
    InversionRow {
        id: "continuous-dual-q-hahn",
        provenance: "Eq2.1",
        shipped: continuous_dual_q_hahn,
        printed: Printed::Absent,
    },
    InversionRow { id: "continuous-q-hahn", provenance: "Eq2.1", shipped: continuous_q_hahn, printed: Printed::Absent },
    row!("big-q-jacobi", "Table1:big-q-jacobi", big_q_jacobi),
    row!("q-hahn", "Table1:q-hahn", q_hahn),
    row!("dual-q-hahn", "Table1:dual-q-hahn", dual_q_hahn),
    row!("al-salam-chihara", "Table1:al-salam-chihara", al_salam_chihara),
    row!("q-meixner-pollaczek", "Table1:q-meixner-pollaczek", q_meixner_pollaczek),
    row!("continuous-q-jacobi", "Table1:continuous-q-jacobi", continuous_q_jacobi, continuous_q_jacobi_printed),
    row!("continuous-q-ultraspherical", "Table1:continuous-q-ultraspherical", continuous_q_ultraspherical),
    row!("continuous-q-legendre", "Table1:continuous-q-legendre", continuous_q_legendre),
    row!("big-q-laguerre", "Table1:big-q-laguerre", big_q_laguerre),
    row!("little-q-jacobi", "Table1:little-q-jacobi", little_q_jacobi),
    row!("little-q-legendre", "Table1:little-q-legendre", little_q_legendre),
    row!("q-meixner", "Table1:q-meixner", q_meixner, q_meixner_printed),
    row!("quantum-q-krawtchouk", "Table1:quantum-q-krawtchouk", quantum_q_krawtchouk, quantum_q_krawtchouk_printed),
    row!("q-krawtchouk", "Table1:q-krawtchouk", q_krawtchouk),
    row!("affine-q-krawtchouk", "Table1:affine-q-krawtchouk", affine_q_krawtchouk),
    row!("dual-q-krawtchouk", "Table1:dual-q-krawtchouk", dual_q_krawtchouk),
    row!("continuous-big-q-hermite", "Table1:continuous-big-q-hermite", continuous_big_q_hermite),
    row!("continuous-q-laguerre", "Table1:continuous-q-laguerre", continuous_q_laguerre),
    row!("little-q-laguerre", "Table1:little-q-laguerre", little_q_laguerre),
    row!("q-laguerre", "Table1:q-laguerre", q_laguerre, q_laguerre_printed),
    row!("alternative-q-charlier", "Table1:alternative-q-charlier", alternative_q_charlier),
    row!("q-charlier", "Table1:q-charlier", q_charlier, q_charlier_printed),
    row!("al-salam-carlitz-1", "Table1:al-salam-carlitz-1", al_salam_carlitz_1),
    row!("al-salam-carlitz-2", "Table1:al-salam-carlitz-2", al_salam_carlitz_2, al_salam_carlitz_2_printed),
    row!("continuous-q-hermite", "Table1:continuous-q-hermite", continuous_q_hermite, continuous_q_hermite_printed),
    row!("stieltjes-wigert", "Table1:stieltjes-wigert", stieltjes_wigert, stieltjes_wigert_printed),
    row!("discrete-q-hermite-1", "Table1:discrete-q-hermite-1", discrete_q_hermite_1),
    row!("discrete-q-hermite-2", "Table1:discrete-q-hermite-2", discrete_q_hermite_2, discrete_q_hermite_2_printed),
];

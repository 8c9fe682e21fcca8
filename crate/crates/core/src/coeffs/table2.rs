use super::{Kit, Printed};
use crate::error::Result;
use crate::families::FamilyInstance;
use crate::scalar::{tri, GaussScalar};

pub type ConnFn = fn(&Kit, &FamilyInstance, &FamilyInstance, usize, usize) -> Result<GaussScalar>;

pub struct ConnectionRow {
    pub id: &'static str,
    pub provenance: &'static str,
    pub shipped: ConnFn,
    pub printed: Printed<ConnFn>,
    /// parameters that source and target must share
    pub shared: &'static [&'static str],
    /// parameters whose product must agree between source and target
    pub product: &'static [&'static str],
    /// source and target must have the same numbered-group sizes
    pub same_shape: bool,
}

fn neg(x: &GaussScalar) -> GaussScalar {
    -x
}

fn mul(xs: &[GaussScalar], by: &GaussScalar) -> Vec<GaussScalar> {
    xs.iter().map(|x| x * by).collect()
}

// q^{m(m-n)} (q;q)_n / ((q;q)_m (q;q)_{n-m})
fn lead(k: &Kit, n: usize, m: usize) -> GaussScalar {
    let (ni, mi) = (n as i64, m as i64);
    k.qp(mi * (mi - ni)) * k.qb(n, m)
}

fn askey_wilson(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c, d) = (s.p("a"), s.p("b"), s.p("c"), s.p("d"));
    let (be, ga, de) = (t.p("b"), t.p("c"), t.p("d"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let qm = k.qp(mi);
    let abcd = &(&a * &b) * &(&c * &d);
    let abgd = &(&a * &be) * &(&ga * &de);
    let pairs = [&a * &b, &a * &c, &a * &d];
    let head = [&pairs[..], &[q.clone()]].concat();
    let top = k.pw(&a, mi - ni)? * k.qp(mi * (mi - ni)) * k.pochs(&head, n) * k.poch(&(&abcd * &k.qp(ni - 1)), m);
    let bot = k.qq(n - m) * k.pochs(&head, m) * k.poch(&(&abgd * &k.qp(mi - 1)), m);
    let inner = k.phi(
        vec![k.qp(mi - ni), &a * &be * &qm, &a * &ga * &qm, &a * &de * &qm, &abcd * &k.qp(ni + mi - 1)],
        [mul(&pairs, &qm), vec![&abgd * &k.qp(2 * mi)]].concat(),
        q,
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn q_racah(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (al, be, ga, de) = (s.p("alpha"), s.p("beta"), s.p("gamma"), s.p("delta"));
    let (a, b, c, d) = (t.p("alpha"), t.p("beta"), t.p("gamma"), t.p("delta"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let q1 = k.qp(mi + 1);
    let top = lead(k, n, m) * k.pochs(&[&al * &be * &k.qp(ni + 1), &a * &q, &b * &d * &q, &c * &q], m);
    let bot = k.pochs(&[&al * &q, &be * &de * &q, &ga * &q, &a * &b * &q1], m);
    let inner = k.phi(
        vec![k.qp(mi - ni), &al * &be * &k.qp(mi + ni + 1), &a * &q1, &b * &d * &q1, &c * &q1],
        vec![&al * &q1, &be * &de * &q1, &a * &b * &k.qp(2 * mi + 2), &ga * &q1],
        q,
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn continuous_dual_q_hahn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c) = (s.p("a"), s.p("b"), s.p("c"));
    let (be, ga) = (t.p("b"), t.p("c"));
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let den = [&a * &b * &qm, &a * &c * &qm];
    let head = k.pw(&a, mi - ni)? * lead(k, n, m) * k.pochs(&den, n - m);
    let inner = k.phi(vec![k.qp(mi - ni), &a * &be * &qm, &a * &ga * &qm], den.to_vec(), k.q(), n - m)?;
    Ok(head * inner)
}

fn cqh(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (a, b, c, d, e) = (s.p("a"), s.p("b"), s.p("c"), s.p("d"), s.p("eiphi"));
    let (be, ga, de) = (t.p("b"), t.p("c"), t.p("d"));
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let e2 = &e * &e;
    let abcd = &(&a * &b) * &(&c * &d);
    let abgd = &(&a * &be) * &(&ga * &de);
    let pars = [&a * &b * &e2, &a * &c, &a * &d];
    let top = lead(k, n, m) * k.pochs(&pars, n) * k.poch(&(&abcd * &k.qp(ni - 1)), m) * k.pw(&(&a * &e), mi - ni)?;
    let bot = k.pochs(&pars, m) * k.poch(&(&abgd * &k.qp(mi - 1)), m);
    let last = if printed { &abgd * &c * &k.qp(2 * mi) } else { &abgd * &k.qp(2 * mi) };
    let inner = k.phi(
        vec![k.qp(mi - ni), &abcd * &k.qp(mi + ni - 1), &a * &be * &e2 * &qm, &a * &ga * &qm, &a * &de * &qm],
        [mul(&pars, &qm), vec![last]].concat(),
        k.q(),
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn continuous_q_hahn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqh(k, s, t, n, m, false)
}

fn continuous_q_hahn_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqh(k, s, t, n, m, true)
}

fn big_q_jacobi(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, c) = (s.p("a"), s.p("b"), s.p("c"));
    let (al, be, ga) = (t.p("a"), t.p("b"), t.p("c"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let q1 = k.qp(mi + 1);
    let top = lead(k, n, m) * k.pochs(&[&a * &b * &k.qp(ni + 1), &al * &q, &ga * &q], m);
    let bot = k.pochs(&[&a * &q, &c * &q, &al * &be * &q1], m);
    let inner = k.phi(
        vec![k.qp(mi - ni), &a * &b * &k.qp(mi + ni + 1), &al * &q1, &ga * &q1],
        vec![&a * &q1, &c * &q1, &al * &be * &k.qp(2 * mi + 2)],
        q,
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn qh(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (al, be, qn) = (s.p("alpha"), s.p("beta"), s.p("qnegN"));
    let (a1, b1, qn1) = (t.p("alpha"), t.p("beta"), t.p("qnegN"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let qm = k.qp(mi);
    let q1 = k.qp(mi + 1);
    let top = lead(k, n, m) * k.pochs(&[&al * &be * &k.qp(ni + 1), qn1.clone(), &a1 * &q], m);
    let bot = k.pochs(&[&al * &q, qn.clone(), &a1 * &b1 * &q1], m);
    let (sn1, sn) = if printed { (qn1, qn) } else { (&qm * &qn1, &qm * &qn) };
    let inner = k.phi(
        vec![k.qp(mi - ni), &al * &be * &k.qp(ni + mi + 1), sn1, &a1 * &q1],
        vec![&al * &q1, sn, &a1 * &b1 * &k.qp(2 * mi + 2)],
        q,
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn q_hahn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qh(k, s, t, n, m, false)
}

fn q_hahn_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qh(k, s, t, n, m, true)
}

fn dual_q_hahn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (ga, qn) = (s.p("gamma"), s.p("qnegN"));
    let (g1, qn1) = (t.p("gamma"), t.p("qnegN"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let qm = k.qp(mi);
    let q1 = k.qp(mi + 1);
    let top = lead(k, n, m) * k.pochs(&[&g1 * &q, qn1.clone()], m);
    let bot = k.pochs(&[&ga * &q, qn.clone()], m);
    let inner = k.phi(vec![k.qp(mi - ni), &g1 * &q1, &qm * &qn1], vec![&ga * &q1, &qm * &qn], q, n - m)?;
    Ok(k.ratio(top, bot)? * inner)
}

fn al_salam_chihara(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (b, be) = (s.p("b"), t.p("b"));
    let nm = n - m;
    Ok(k.qb(n, m) * be.powu(nm as u64) * k.poch(&k.ratio(b, be)?, nm))
}

fn al_salam_chihara_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b, be) = (s.p("a"), s.p("b"), t.p("b"));
    let nm = n - m;
    let qm = k.qp(m as i64);
    let top = k.qb(n, m) * be.powu(nm as u64) * k.poch(&k.ratio(b.clone(), be.clone())?, nm) * k.poch(&(&a * &b * &qm), nm);
    k.ratio(top, k.poch(&(&a * &be * &qm), nm) * k.poch(&(&a * &be), nm))
}

fn cqj(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (aa, bb, r) = (s.p("qa"), s.p("qb"), s.sqrt_q()?);
    let b1 = t.p("qb");
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let qa1 = &aa * &aa * &r;
    let qnu = &aa * &aa * &bb * &bb;
    let qla = &aa * &aa * &b1 * &b1;
    let (hnu, hla) = (&aa * &bb, &aa * &b1);
    let (tla, tnu) = if printed {
        (neg(&k.ratio(GaussScalar::one(), &hla * &r)?), neg(&k.ratio(GaussScalar::one(), &hnu * &r)?))
    } else {
        (neg(&(&hla * &r)), neg(&(&hnu * &r)))
    };
    let top = k.qp(mi * (mi - ni)) * k.poch(&qa1, n) * k.pochs(&[&qnu * &k.qp(ni), neg(&hla), tla], m);
    let bot = k.qq(n - m) * k.poch(&(&qla * &qm), m) * k.pochs(&[qa1.clone(), neg(&hnu), tnu.clone()], m);
    let fifth = if printed { neg(&(&qa1 * &qm)) } else { &qa1 * &qm };
    let inner = k.phi(
        vec![k.qp(mi - ni), &qnu * &k.qp(mi + ni), neg(&(&hla * &qm)), neg(&(&hla * &r * &qm)), fifth],
        vec![&qa1 * &qm, neg(&(&hnu * &qm)), &tnu * &qm, &qla * &k.qp(2 * mi + 1)],
        k.q(),
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn continuous_q_jacobi(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqj(k, s, t, n, m, false)
}

fn continuous_q_jacobi_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    cqj(k, s, t, n, m, true)
}

fn big_q_laguerre(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, b) = (s.p("a"), s.p("b"));
    let (al, be) = (t.p("a"), t.p("b"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let q1 = k.qp(mi + 1);
    let top = lead(k, n, m) * k.pochs(&[&al * &q, &be * &q], m);
    let bot = k.pochs(&[&a * &q, &b * &q], m);
    let inner = k.phi(vec![k.qp(mi - ni), &al * &q1, &be * &q1], vec![&a * &q1, &b * &q1], q, n - m)?;
    Ok(k.ratio(top, bot)? * inner)
}

fn lqj(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (a, b) = (s.p("a"), s.p("b"));
    let (al, be) = (t.p("a"), t.p("b"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let q1 = k.qp(mi + 1);
    let second = if printed { al.clone() } else { &al * &q };
    let top = lead(k, n, m) * k.pochs(&[&a * &b * &k.qp(ni + 1), second], m);
    let bot = k.pochs(&[&a * &q, &al * &be * &q1], m);
    let inner = k.phi(
        vec![k.qp(mi - ni), &a * &b * &k.qp(mi + ni + 1), &al * &q1],
        vec![&a * &q1, &al * &be * &k.qp(2 * mi + 2)],
        q,
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn little_q_jacobi(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    lqj(k, s, t, n, m, false)
}

fn little_q_jacobi_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    lqj(k, s, t, n, m, true)
}

fn qm(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (b, c) = (s.p("b"), s.p("c"));
    let (be, ga) = (t.p("b"), t.p("c"));
    let (ni, mi) = (n as i64, m as i64);
    let q = k.q();
    let q1 = k.qp(mi + 1);
    let r = k.ratio(ga, c)?;
    let arg = &r * &k.qp(ni - mi + if printed { 1 } else { 0 });
    let head = k.ratio(r.powu(m as u64) * k.qb(n, m) * k.poch(&(&be * &q), m), k.poch(&(&b * &q), m))?;
    Ok(head * k.phi(vec![k.qp(mi - ni), &be * &q1], vec![&b * &q1], arg, n - m)?)
}

fn q_meixner(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qm(k, s, t, n, m, false)
}

fn q_meixner_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qm(k, s, t, n, m, true)
}

fn qqk(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (p, qn) = (s.p("p"), s.p("qnegN"));
    let (p1, qn1) = (t.p("p"), t.p("qnegN"));
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let r = k.ratio(p, p1)?;
    let arg = &r * &k.qp(ni - mi + if printed { 1 } else { 0 });
    let head = k.ratio(k.qb(n, m) * k.poch(&qn1, m) * r.powu(m as u64), k.poch(&qn, m))?;
    Ok(head * k.phi(vec![k.qp(mi - ni), &qm * &qn1], vec![&qm * &qn], arg, n - m)?)
}

fn quantum_q_krawtchouk(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qqk(k, s, t, n, m, false)
}

fn quantum_q_krawtchouk_printed(
    k: &Kit,
    s: &FamilyInstance,
    t: &FamilyInstance,
    n: usize,
    m: usize,
) -> Result<GaussScalar> {
    qqk(k, s, t, n, m, true)
}

fn qk(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (p, qn) = (s.p("p"), s.p("qnegN"));
    let (p1, qn1) = (t.p("p"), t.p("qnegN"));
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let (up, down) = if printed { (qn.clone(), qn1.clone()) } else { (qn1.clone(), qn.clone()) };
    let top = lead(k, n, m) * k.pochs(&[neg(&(&p * &k.qp(ni))), up], m);
    let bot = k.pochs(&[neg(&(&p1 * &qm)), down], m);
    let inner = k.phi(
        vec![k.qp(mi - ni), neg(&(&p * &k.qp(mi + ni))), &qm * &qn1],
        vec![&qm * &qn, neg(&(&p1 * &k.qp(2 * mi + 1)))],
        k.q(),
        n - m,
    )?;
    Ok(k.ratio(top, bot)? * inner)
}

fn q_krawtchouk(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qk(k, s, t, n, m, false)
}

fn q_krawtchouk_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qk(k, s, t, n, m, true)
}

fn little_q_laguerre(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let (a, al) = (s.p("a"), t.p("a"));
    let q = k.q();
    let nm = n - m;
    let top = (&al * &q).powu(nm as u64) * k.qb(n, m) * k.poch(&(&al * &q), m) * k.poch(&k.ratio(a.clone(), al)?, nm);
    k.ratio(top, k.poch(&(&a * &q), n))
}

fn ql(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (qa, qb) = (s.p("qalpha"), t.p("qalpha"));
    let (ni, mi) = (n as i64, m as i64);
    let q1 = k.qp(mi + 1);
    let r = k.ratio(qa.clone(), qb.clone())?;
    let arg = &r * &k.qp(ni - mi + if printed { 1 } else { 0 });
    let head = k.ratio(r.powu(m as u64) * k.poch(&(&qa * &q1), n - m), k.qq(n - m))?;
    Ok(head * k.phi(vec![k.qp(mi - ni), &qb * &q1], vec![&qa * &q1], arg, n - m)?)
}

fn q_laguerre(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    ql(k, s, t, n, m, false)
}

fn q_laguerre_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    ql(k, s, t, n, m, true)
}

fn aqc(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let (a, al) = (s.p("a"), t.p("a"));
    let (ni, mi) = (n as i64, m as i64);
    let one = GaussScalar::one();
    let nm = n - m;
    let mut top = k.qb(n, m)
        * k.poch(&neg(&(&a * &k.qp(ni))), m)
        * (&one + &(&al * &k.qp(2 * mi)))
        * k.poch(&(k.ratio(al.clone(), a.clone())? * k.qp(mi - ni + 1)), nm)
        * neg(&(&a * &k.qp(ni))).powu(nm as u64);
    if printed {
        top = top * k.qp(mi * (mi - ni));
    }
    k.ratio(top, k.poch(&neg(&(&al * &k.qp(mi))), n) * (&one + &(&al * &k.qp(mi + ni))))
}

fn alternative_q_charlier(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    aqc(k, s, t, n, m, false)
}

fn alternative_q_charlier_printed(
    k: &Kit,
    s: &FamilyInstance,
    t: &FamilyInstance,
    n: usize,
    m: usize,
) -> Result<GaussScalar> {
    aqc(k, s, t, n, m, true)
}

fn qc(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let r = k.ratio(t.p("a"), s.p("a"))?;
    let base = if printed { &r * &k.q() } else { r.clone() };
    Ok(k.qb(n, m) * k.poch(&base, n - m) * r.powu(m as u64))
}

fn q_charlier(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qc(k, s, t, n, m, false)
}

fn q_charlier_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    qc(k, s, t, n, m, true)
}

fn asc1(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let a = s.p("a");
    let r = k.ratio(t.p("a"), a.clone())?;
    let (ni, mi) = (n as i64, m as i64);
    let nm = n - m;
    let (e, shift) = if printed { (tri(ni) + tri(mi), mi - ni) } else { (tri(ni - mi), mi - ni + 1) };
    Ok(k.qb(n, m) * neg(&a).powu(nm as u64) * k.qp(e) * k.poch(&(&r * &k.qp(shift)), nm))
}

fn al_salam_carlitz_1(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    asc1(k, s, t, n, m, false)
}

fn al_salam_carlitz_1_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    asc1(k, s, t, n, m, true)
}

fn asc2(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let a = s.p("a");
    let r = k.ratio(t.p("a"), a.clone())?;
    let (ni, mi) = (n as i64, m as i64);
    let nm = n - m;
    let base = if printed { &r * &k.qp(2 * mi - 1) } else { r };
    Ok(k.qb(n, m) * neg(&a).powu(nm as u64) * k.qp(tri(mi) - tri(ni)) * k.poch(&base, nm))
}

fn al_salam_carlitz_2(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    asc2(k, s, t, n, m, false)
}

fn al_salam_carlitz_2_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    asc2(k, s, t, n, m, true)
}

macro_rules! row {
    ($id:literal, $prov:expr, $f:ident, $printed:expr, $shared:expr, $product:expr) => {
        ConnectionRow {
            id: $id,
            provenance: $prov,
            shipped: $f,
            printed: $printed,
            shared: $shared,
            product: $product,
            same_shape: false,
        }
    };
    ($id:literal, $f:ident) => {
        row!($id, concat!("Table2:", $id, "->", $id), $f, Printed::Same, &[], &[])
    };
    ($id:literal, $f:ident, $p:ident) => {
        row!($id, concat!("Table2:", $id, "->", $id), $f, Printed::Differs($p), &[], &[])
    };
}

pub static ROWS: &[ConnectionRow] = &[
    row!("askey-wilson", "Eq4.3", askey_wilson, Printed::Same, &["a"], &[]),
    row!("q-racah", "Eq4.6", q_racah, Printed::Same, &[], &["gamma", "delta"]),
    row!(
        "continuous-dual-q-hahn",
        "Table2:continuous-dual-q-hahn->continuous-dual-q-hahn",
        continuous_dual_q_hahn,
        Printed::Same,
        &["a"],
        &[]
    ),
    row!(
        "continuous-q-hahn",
        "Table2:continuous-q-hahn->continuous-q-hahn",
        continuous_q_hahn,
        Printed::Differs(continuous_q_hahn_printed),
        &["a", "eiphi"],
        &[]
    ),
    row!("big-q-jacobi", big_q_jacobi),
    row!("q-hahn", q_hahn, q_hahn_printed),
    row!(
        "dual-q-hahn",
        "Table2:dual-q-hahn->dual-q-hahn",
        dual_q_hahn,
        Printed::Same,
        &[],
        &["gamma", "delta"]
    ),
    row!(
        "al-salam-chihara",
        "Table2:al-salam-chihara->al-salam-chihara",
        al_salam_chihara,
        Printed::Differs(al_salam_chihara_printed),
        &["a"],
        &[]
    ),
    row!(
        "continuous-q-jacobi",
        "Table2:continuous-q-jacobi->continuous-q-jacobi",
        continuous_q_jacobi,
        Printed::Differs(continuous_q_jacobi_printed),
        &["qa"],
        &[]
    ),
    row!("big-q-laguerre", big_q_laguerre),
    row!("little-q-jacobi", little_q_jacobi, little_q_jacobi_printed),
    row!("q-meixner", q_meixner, q_meixner_printed),
    row!("quantum-q-krawtchouk", quantum_q_krawtchouk, quantum_q_krawtchouk_printed),
    row!("q-krawtchouk", q_krawtchouk, q_krawtchouk_printed),
    row!("little-q-laguerre", little_q_laguerre),
    row!("q-laguerre", q_laguerre, q_laguerre_printed),
    row!("alternative-q-charlier", alternative_q_charlier, alternative_q_charlier_printed),
    row!("q-charlier", q_charlier, q_charlier_printed),
    row!("al-salam-carlitz-1", al_salam_carlitz_1, al_salam_carlitz_1_printed),
    row!("al-salam-carlitz-2", al_salam_carlitz_2, al_salam_carlitz_2_printed),
];

// d-orthogonal families: inversion and same-family connection rows
use super::table1::InversionRow;
use super::table2::ConnectionRow;
use super::{Kit, Printed};
use crate::error::Result;
use crate::families::FamilyInstance;
use crate::scalar::{sign, tri, GaussScalar};

fn sg(k: &Kit, n: usize, e: i64) -> Result<GaussScalar> {
    let ni = n as i64;
    k.pw(&(sign(ni) * k.qp(tri(ni))), e)
}

fn d_little_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let b = f.group("b");
    let e = f.zero_count()? as i64 - b.len() as i64;
    let mi = m as i64;
    Ok(k.qb(n, m) * sg(k, n, e)? * k.pochs(&b, n) * sign(mi) * k.qp(tri(mi)))
}

fn dqm_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let b = f.group("b");
    let (ni, mi) = (n as i64, m as i64);
    let shift = if printed { 0 } else { mi - ni };
    Ok(k.pochs(&b, n)
        * sg(k, n, 1 - b.len() as i64)?
        * sign(mi + ni)
        * k.qp(tri(mi) - mi * ni + shift)
        * f.p("c").powu(n as u64)
        * k.qb(n, m))
}

fn d_q_meixner_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dqm_inv(k, f, n, m, false)
}

fn d_q_meixner_inv_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dqm_inv(k, f, n, m, true)
}

fn d_big_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let mi = m as i64;
    Ok(k.pochs(&f.group("b"), n) * k.qp(tri(mi)) * k.qb(n, m) * sign(mi))
}

fn d_big_inv_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    Ok(k.pochs(&f.group("b"), n) * k.qp(tri(m as i64)) * k.qb(n, m))
}

fn dql_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let b = f.group("b");
    let (ni, mi) = (n as i64, m as i64);
    let shift = if printed { 0 } else { mi };
    Ok(k.pochs(&b, n) * k.qb(n, m) * sg(k, n, -(b.len() as i64))? * k.qp(tri(mi) - mi * ni + shift) * sign(mi))
}

fn d_q_laguerre_inv(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dql_inv(k, f, n, m, false)
}

fn d_q_laguerre_inv_printed(k: &Kit, f: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dql_inv(k, f, n, m, true)
}

pub static INVERSIONS: &[InversionRow] = &[
    InversionRow { id: "d-little-q-laguerre", provenance: "Eq3.2", shipped: d_little_inv, printed: Printed::Same },
    InversionRow {
        id: "d-q-meixner",
        provenance: "Eq3.5",
        shipped: d_q_meixner_inv,
        printed: Printed::Differs(d_q_meixner_inv_printed),
    },
    InversionRow {
        id: "d-big-q-laguerre",
        provenance: "Eq3.8",
        shipped: d_big_inv,
        printed: Printed::Differs(d_big_inv_printed),
    },
    InversionRow {
        id: "d-q-laguerre",
        provenance: "Eq3.11",
        shipped: d_q_laguerre_inv,
        printed: Printed::Differs(d_q_laguerre_inv_printed),
    },
];

// [n,m] [beta]_m/[b]_m phi(q^{m-n}, beta q^m; b q^m; q, z)
fn shifted_phi(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, z: GaussScalar, shift_b: bool) -> Result<GaussScalar> {
    let (b, be) = (s.group("b"), t.group("b"));
    let (ni, mi) = (n as i64, m as i64);
    let qm = k.qp(mi);
    let head = k.ratio(k.qb(n, m) * k.pochs(&be, m), k.pochs(&b, m))?;
    let mut num = vec![k.qp(mi - ni)];
    num.extend(be.iter().map(|x| x * &qm));
    let den = if shift_b { b.iter().map(|x| x * &qm).collect() } else { b };
    Ok(head * k.phi(num, den, z, n - m)?)
}

fn same_arg(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    let mi = m as i64;
    Ok(k.qp(mi * (mi - n as i64)) * shifted_phi(k, s, t, n, m, k.q(), true)?)
}

fn dqm_conn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize, printed: bool) -> Result<GaussScalar> {
    let r = k.ratio(t.p("c"), s.p("c"))?;
    let (ni, mi) = (n as i64, m as i64);
    if printed {
        let z = &r * &k.qp(1 + ni - mi);
        let lead = k.ratio(GaussScalar::one(), r)?.powu(m as u64);
        Ok(lead * shifted_phi(k, s, t, n, m, z, false)?)
    } else {
        let z = &r * &k.qp(ni - mi);
        Ok(r.powu(m as u64) * shifted_phi(k, s, t, n, m, z, true)?)
    }
}

fn d_q_meixner_conn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dqm_conn(k, s, t, n, m, false)
}

fn d_q_meixner_conn_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    dqm_conn(k, s, t, n, m, true)
}

fn d_q_laguerre_conn(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    shifted_phi(k, s, t, n, m, k.qp(n as i64 - m as i64), true)
}

fn d_q_laguerre_conn_printed(k: &Kit, s: &FamilyInstance, t: &FamilyInstance, n: usize, m: usize) -> Result<GaussScalar> {
    shifted_phi(k, s, t, n, m, k.qp(1 + n as i64 - m as i64), true)
}

macro_rules! conn {
    ($id:literal, $prov:literal, $f:ident, $p:expr) => {
        ConnectionRow { id: $id, provenance: $prov, shipped: $f, printed: $p, shared: &[], product: &[], same_shape: true }
    };
}

pub static CONNECTIONS: &[ConnectionRow] = &[
    conn!("d-little-q-laguerre", "Eq3.3", same_arg, Printed::Same),
    conn!("d-q-meixner", "Eq3.6", d_q_meixner_conn, Printed::Differs(d_q_meixner_conn_printed)),
    conn!("d-big-q-laguerre", "Eq3.9", same_arg, Printed::Same),
    conn!("d-q-laguerre", "Eq3.12", d_q_laguerre_conn, Printed::Differs(d_q_laguerre_conn_printed)),
];

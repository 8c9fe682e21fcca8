use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CorrectionEntry {
    pub location: &'static str,
    pub printed_form: &'static str,
    pub corrected_form: &'static str,
    /// suite and identity id of the oracle run that separates the two forms
    pub evidence: &'static str,
}

const fn e(
    location: &'static str,
    printed_form: &'static str,
    corrected_form: &'static str,
    evidence: &'static str,
) -> CorrectionEntry {
    CorrectionEntry { location, printed_form, corrected_form, evidence }
}

static LEDGER: &[CorrectionEntry] = &[
    e(
        "Eq2.1",
        "[b_r;q]_n / [a_s;q]_n",
        "[b_s;q]_n / [a_r;q]_n",
        "theorem21: invert_basic vs oracle_inversion over (r,s) in {0,1,2}^2",
    ),
    e(
        "Eq2.7",
        "q^{m(m-1)/2 (s+l-r-1-h)}",
        "q^{m(m-1)/2 (s+l-r-h)}",
        "theorem21: connect_basic a=c=0 vs oracle_connection",
    ),
    e(
        "lemma2.2",
        "b_m(n,0) with factor (aq^{n-m};q)_{n-m} / (aq^n;q)_n",
        "b_m(n,0) with factor 1 / (aq^{2n-2m+1};q)_m",
        "lemma22: recursive_invert vs closed form, a != 0",
    ),
    e(
        "identity:(a;q)_{n+m}",
        "(a;q)_{n+m} = (a;q)_m (aq^m;q)_{n-m}",
        "(a;q)_{n+m} = (a;q)_m (aq^m;q)_n",
        "scalar unit tests: qpochhammer splitting",
    ),
    e(
        "Eq4.1",
        "prefactor (ab, ac, dq;q)_n / a^n",
        "prefactor (ab, ac, ad;q)_n / a^n",
        "table1: askey-wilson inversion vs oracle_inversion",
    ),
    e(
        "basis:continuous-q-ultraspherical",
        "(beta^{1/2} e^{i theta}, beta q^{-i theta};q)_n",
        "(beta^{1/2} e^{i theta}, beta^{1/2} e^{-i theta};q)_n",
        "table1: continuous-q-ultraspherical inversion vs oracle_inversion",
    ),
    e(
        "Table1:continuous-q-jacobi",
        "-q^{-(alpha+beta+2)/2} inside the Pochhammer",
        "-q^{(alpha+beta+2)/2} inside the Pochhammer",
        "table1: continuous-q-jacobi",
    ),
    e("Table1:q-meixner", "row as typeset", "row times q^{m-n}", "table1: q-meixner"),
    e("Table1:quantum-q-krawtchouk", "row as typeset", "row times q^{m-n}", "table1: quantum-q-krawtchouk"),
    e("Table1:q-laguerre", "row as typeset", "row times q^{m-n}", "table1: q-laguerre"),
    e("Table1:q-charlier", "row as typeset", "row times q^{m-n}", "table1: q-charlier"),
    e("Table1:al-salam-carlitz-2", "row as typeset", "row times q^{m-n}", "table1: al-salam-carlitz-2"),
    e(
        "Table1:continuous-q-hermite",
        "(-1)^{n+m} [n,m] q^{n(m-1) + n(n-1)/2 + m(m-1)/2}",
        "(-1)^{n+m} [n,m] q^{(n-m)(n-m-1)/2}",
        "table1: continuous-q-hermite, pointwise on unit-circle points",
    ),
    e(
        "Table1:stieltjes-wigert",
        "q-binomial factor displaced in the row",
        "(-1)^m (q;q)_m [n,m] q^{-n(n+1)/2 + m(m+1)/2 - mn}",
        "table1: stieltjes-wigert",
    ),
    e(
        "Table1:discrete-q-hermite-2",
        "q-binomial factor displaced in the row",
        "(-i)^m [n,m] q^{n(n-1)/2 + m(m-n)}",
        "table1: discrete-q-hermite-2",
    ),
    e(
        "Table2:continuous-q-hahn->continuous-q-hahn",
        "denominator parameter a beta gamma delta c q^{2m}",
        "denominator parameter a beta gamma delta q^{2m}",
        "table2: continuous-q-hahn",
    ),
    e(
        "Table2:q-hahn->q-hahn",
        "inner parameters q^{-N1}, q^{-N}",
        "inner parameters q^{m-N1}, q^{m-N}",
        "table2: q-hahn",
    ),
    e(
        "Table2:al-salam-chihara->al-salam-chihara",
        "extra factor (abq^m;q)_{n-m} / ((a beta q^m;q)_{n-m} (a beta;q)_{n-m})",
        "[n,m] beta^{n-m} (b/beta;q)_{n-m}",
        "table2: al-salam-chihara",
    ),
    e(
        "Table2:continuous-q-jacobi->continuous-q-jacobi",
        "exponents -(lambda+1)/2, -(nu+1)/2 and numerator -q^{alpha+m+1}",
        "exponents (lambda+1)/2, (nu+1)/2 and numerator q^{alpha+m+1}",
        "table2: continuous-q-jacobi",
    ),
    e("Table2:little-q-jacobi->little-q-jacobi", "(alpha;q)_m", "(alpha q;q)_m", "table2: little-q-jacobi"),
    e(
        "Table2:q-meixner->q-meixner",
        "argument (gamma/c) q^{n-m+1}",
        "argument (gamma/c) q^{n-m}",
        "table2: q-meixner",
    ),
    e(
        "Table2:quantum-q-krawtchouk->quantum-q-krawtchouk",
        "argument (p/p1) q^{n-m+1}",
        "argument (p/p1) q^{n-m}",
        "table2: quantum-q-krawtchouk",
    ),
    e(
        "Table2:q-krawtchouk->q-krawtchouk",
        "(q^{-N};q)_m / (q^{-N1};q)_m",
        "(q^{-N1};q)_m / (q^{-N};q)_m",
        "table2: q-krawtchouk",
    ),
    e(
        "Table2:q-laguerre->q-laguerre",
        "argument q^{n-m+1+alpha-beta}; fails the delta check at alpha = beta",
        "argument q^{n-m+alpha-beta}",
        "table2: q-laguerre",
    ),
    e(
        "Table2:alternative-q-charlier->alternative-q-charlier",
        "extra factor q^{m(m-n)}",
        "factor q^{m(m-n)} dropped",
        "table2: alternative-q-charlier",
    ),
    e("Table2:q-charlier->q-charlier", "(alpha q/a;q)_{n-m}", "(alpha/a;q)_{n-m}", "table2: q-charlier"),
    e(
        "Table2:al-salam-carlitz-1->al-salam-carlitz-1",
        "[n,m](-a)^{n-m} q^{n(n-1)/2 + m(m-1)/2} (alpha q^{m-n}/a;q)_{n-m}",
        "[n,m](-a)^{n-m} q^{(n-m)(n-m-1)/2} (alpha q^{m-n+1}/a;q)_{n-m}",
        "table2: al-salam-carlitz-1",
    ),
    e(
        "Table2:al-salam-carlitz-2->al-salam-carlitz-2",
        "(alpha q^{2m-1}/a;q)_{n-m}",
        "(alpha/a;q)_{n-m}",
        "table2: al-salam-carlitz-2",
    ),
    e("Eq3.5", "row as typeset", "row times q^{m-n}", "table1: d-q-meixner"),
    e(
        "Eq3.6",
        "(c/gamma)^m ... phi(q^{m-n}, beta q^m; b; q, (gamma/c) q^{n-m+1})",
        "(gamma/c)^m ... phi(q^{m-n}, beta q^m; b q^m; q, (gamma/c) q^{n-m})",
        "table2: d-q-meixner",
    ),
    e("Eq3.8", "[b]_n q^{m(m-1)/2} [n,m]", "(-1)^m [b]_n q^{m(m-1)/2} [n,m]", "table1: d-big-q-laguerre"),
    e("Eq3.11", "row as typeset", "row times q^m", "table1: d-q-laguerre"),
    e("Eq3.12", "argument q^{n-m+1}", "argument q^{n-m}", "table2: d-q-laguerre"),
];

pub fn ledger() -> &'static [CorrectionEntry] {
    LEDGER
}

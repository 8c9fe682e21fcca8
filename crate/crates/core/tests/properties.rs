use proptest::prelude::*;
use qconnect::coeffs::{closed_form_connection, closed_form_inversion, connection_rows, inversion_rows};
use qconnect::families::registry;
use qconnect::oracle::{oracle_connection, oracle_inversion};
use qconnect::sampling::Sampler;
use qconnect::{GaussScalar, QContext};

fn base(id: &str) -> GaussScalar {
    match id {
        "continuous-q-legendre" => GaussScalar::frac(16, 81),
        "continuous-q-jacobi" | "continuous-q-ultraspherical" | "continuous-q-laguerre" => GaussScalar::frac(4, 9),
        _ => GaussScalar::frac(3, 7),
    }
}

fn sizes(id: &str) -> Vec<(&'static str, usize)> {
    if id.starts_with("d-") {
        vec![("b", 2)]
    } else {
        vec![]
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inversion_rows_match_oracle(row in 0..inversion_rows().count(), seed in any::<u64>(), n in 0usize..=4) {
        let row = inversion_rows().nth(row).unwrap();
        prop_assume!(row.id != "continuous-q-hermite");
        let c = QContext::new(base(row.id), 12).unwrap();
        let mut s = Sampler::new(seed);
        let f = s.instance(row.id, &sizes(row.id), &c, |f| oracle_inversion(f, n).map(|_| ())).unwrap();
        prop_assert_eq!(closed_form_inversion(&f, n).unwrap().values, oracle_inversion(&f, n).unwrap().values);
    }

    #[test]
    fn connection_rows_match_oracle(row in 0..connection_rows().count(), seed in any::<u64>(), n in 0usize..=4) {
        let row = connection_rows().nth(row).unwrap();
        let c = QContext::new(base(row.id), 12).unwrap();
        let mut s = Sampler::new(seed);
        let (a, b) = s
            .pair(row.id, &sizes(row.id), row.shared, row.product, &c, |a, b| {
                oracle_connection(a, b, n)?;
                closed_form_connection(a, b, n).map(|_| ())
            })
            .unwrap();
        prop_assert_eq!(closed_form_connection(&a, &b, n).unwrap().values, oracle_connection(&a, &b, n).unwrap().values);
    }

    #[test]
    fn self_connection_is_delta(fam in 0..registry().len(), seed in any::<u64>(), n in 0usize..=5) {
        let spec = &registry()[fam];
        prop_assume!(spec.expansion_capable);
        let c = QContext::new(base(spec.id), 12).unwrap();
        let mut s = Sampler::new(seed);
        let f = s.instance(spec.id, &sizes(spec.id), &c, |f| closed_form_connection(f, f, n).map(|_| ())).unwrap();
        prop_assert!(closed_form_connection(&f, &f, n).unwrap().is_delta());
    }
}

use proptest::prelude::*;

use mayachain::atlas::{family_polynomial, find_roots, is_triangular, to_csv, to_svg, WronskianFamilySpec};
use mayachain::cyclic::Signature;
use mayachain::exact::Poly;

fn product_of_linears(roots: &[i64]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, &r| &acc * &Poly::from_ints(&[-r, 1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn integer_roots_are_found(roots in prop::collection::btree_set(-12i64..=12, 1..8)) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let p = product_of_linears(&roots);
        let rs = find_roots(&p, 128).unwrap();
        prop_assert_eq!(rs.len(), roots.len());
        let mut found: Vec<f64> = rs.roots.iter().map(|z| z.to_f64().0).collect();
        found.sort_by(f64::total_cmp);
        for (f, r) in found.iter().zip(&roots) {
            prop_assert!((f - *r as f64).abs() < 1e-20);
        }
        prop_assert!(rs.residual_bound < 2f64.powi(-64));
    }

    #[test]
    fn small_families(parts in prop::sample::select(vec![
        vec![5usize], vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3], vec![1, 1, 1, 1, 1],
    ]), n in prop::array::uniform4(0u64..=3)) {
        let spec = WronskianFamilySpec::new(Signature::new(parts).unwrap(), n).unwrap();
        let p = family_polynomial(&spec).unwrap();
        let deg = p.degree().unwrap();
        prop_assert_eq!(deg, spec.expected_degree().unwrap());
        let m0 = p.trailing_zeros().unwrap();
        prop_assert!(is_triangular(m0));
        if deg > 0 {
            let rs = find_roots(&p, 128).unwrap();
            prop_assert_eq!(rs.len(), deg);
            prop_assert_eq!(rs.origin_multiplicity, m0);
            prop_assert!(rs.conjugate_pairing(10.0 * rs.residual_bound));
        }
    }
}

#[test]
fn deterministic_output() {
    let spec = WronskianFamilySpec::new(Signature::new(vec![1, 1, 1, 1, 1]).unwrap(), [1, 3, 5, 6]).unwrap();
    let p = family_polynomial(&spec).unwrap();
    let a = find_roots(&p, 128).unwrap();
    let b = find_roots(&p, 128).unwrap();
    assert_eq!(to_csv(&a), to_csv(&b));
    assert_eq!(to_csv(&a).lines().count(), p.degree().unwrap() + 1);
    let svg = to_svg(&a);
    assert_eq!(svg.matches("<circle").count(), p.degree().unwrap());
}

use std::collections::BTreeSet;

use proptest::prelude::*;

use mayachain::cyclic::{interlace, modular_decompose, KBlockCoordinates};
use mayachain::maya::{xi, BlockCoordinates, MayaDiagram};

fn diagram() -> impl Strategy<Value = MayaDiagram> {
    (-8i64..=0, prop::collection::vec(any::<bool>(), 0..16)).prop_map(|(lo, bits)| {
        let members: BTreeSet<i64> =
            bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| lo + i as i64).collect();
        MayaDiagram::from_members_above(lo, &members)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn frobenius_round_trip(m in diagram()) {
        let sym = m.frobenius();
        prop_assert_eq!(MayaDiagram::from_frobenius(&sym).unwrap(), m.clone());
        prop_assert_eq!(sym.index(), m.index());
    }

    #[test]
    fn block_coordinates_round_trip(m in diagram()) {
        let b = m.block_coordinates();
        prop_assert!(b.is_strict());
        prop_assert_eq!(b.len() % 2, 1);
        prop_assert_eq!(b.to_diagram(), m.clone());
        prop_assert_eq!(xi(b.as_slice()).unwrap(), m.clone());
    }

    #[test]
    fn shift_moves_index(m in diagram(), k in -5i64..=5) {
        prop_assert_eq!(m.shift(k).index(), m.index() + k);
        prop_assert_eq!(m.shift(k).shift(-k), m.clone());
        prop_assert!(m.shift(k).equivalent(&m));
        prop_assert_eq!(m.shift(k).genus(), m.genus());
    }

    #[test]
    fn standard_form(m in diagram()) {
        let (s, k) = m.standard_form();
        prop_assert!(s.empty_neg().is_empty());
        prop_assert!(!s.contains(0));
        prop_assert_eq!(s.shift(k), m.clone());
    }

    #[test]
    fn flips(m in diagram(), site in -10i64..=20) {
        let f = m.flip(site);
        prop_assert_eq!(f.flip(site), m.clone());
        prop_assert_eq!(m.symmetric_difference(&f), vec![site]);
        prop_assert_eq!(f.index() - m.index(), if m.contains(site) { -1 } else { 1 });
    }

    #[test]
    fn interlacing_inverts_decomposition(m in diagram(), k in 1usize..=5) {
        let parts = modular_decompose(&m, k);
        prop_assert_eq!(parts.len(), k);
        prop_assert_eq!(interlace(&parts), m.clone());
        let blocks = KBlockCoordinates::of_diagram(&m, k).unwrap();
        prop_assert_eq!(blocks.to_diagram(), m.clone());
        prop_assert_eq!(blocks.period(), parts.iter().map(|d| 2 * d.genus() + 1).sum::<usize>());
    }

    #[test]
    fn classification_law(m in diagram(), k in 1i64..=6) {
        let shifted = m.shift(k);
        let (lo, hi) = m.window();
        let brute = (lo - k - 1..hi + k + 1).filter(|&x| m.contains(x) != shifted.contains(x)).count();
        let law: usize = modular_decompose(&m, k as usize).iter().map(|d| 2 * d.genus() + 1).sum();
        prop_assert_eq!(brute, law);
    }

    #[test]
    fn canonical_flips_close_the_cycle(m in diagram(), k in 1usize..=4) {
        let blocks = KBlockCoordinates::of_diagram(&m, k).unwrap();
        let mu = blocks.canonical_flip_sequence();
        prop_assert_eq!(m.multi_flip(&mu), m.shift(k as i64));
    }
}

#[test]
fn block_coordinate_examples() {
    let m = xi(&[2, 3, 5, 7, 10]).unwrap();
    assert_eq!(m.index(), 7);
    assert_eq!(m.filled_nonneg(), &[0, 1, 3, 4, 7, 8, 9]);
    assert_eq!(m.genus(), 2);
    assert!(BlockCoordinates::new(vec![0, 1]).is_err());
    assert!(BlockCoordinates::new(vec![3, 1, 4]).is_err());
    assert_eq!(xi(&[0]).unwrap(), MayaDiagram::trivial());
}

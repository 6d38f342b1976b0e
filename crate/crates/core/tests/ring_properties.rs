use polarhull::rings::{
    find_isomorphism, has_local_units, ideal_lattice, ideals, image, is_essential_ideal, is_ideal, is_injective,
    is_non_degenerate, is_ring_hom, multiplier_ring, pseudocomplement, small_rings, validate_ring, FinRing, MAX_ELEMENTS,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

/// A listed ring or the product of two listed rings with at most 16
/// elements.
fn ring() -> impl Strategy<Value = (String, FinRing)> {
    let pool = small_rings();
    let n = pool.len();
    (0..n, 0..n, any::<bool>()).prop_map(move |(i, j, product)| {
        let (a, b) = (&pool[i], &pool[j]);
        if product && a.1.len() * b.1.len() <= 16 {
            (format!("{}x{}", a.0, b.0), FinRing::product(&a.1, &b.1))
        } else {
            a.clone()
        }
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        rng_seed: RngSeed::Fixed(0x717),
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn generated_tables_validate((name, r) in ring()) {
        prop_assert!(validate_ring(&r.to_entry(&name)).is_empty());
    }

    #[test]
    fn base_embeds_as_an_essential_ideal((name, r) in ring()) {
        prop_assume!(is_non_degenerate(&r));
        let m = match multiplier_ring(&r) {
            Ok(m) => m,
            Err(polarhull::Error::TooLarge { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{name}: {e}"))),
        };
        prop_assert!(is_ring_hom(&r, &m.ring, &m.embedding), "{}", name);
        prop_assert!(is_injective(&m.embedding));
        let im = image(&m.embedding);
        prop_assert!(is_ideal(&m.ring, im));
        prop_assert!(is_essential_ideal(&m.ring, im));
        prop_assert!(m.ring.unit().is_some());
    }

    #[test]
    fn multipliers_are_idempotent((name, r) in ring()) {
        prop_assume!(is_non_degenerate(&r));
        let Ok(m) = multiplier_ring(&r) else { return Ok(()); };
        prop_assume!(m.ring.len() <= MAX_ELEMENTS);
        let mm = multiplier_ring(&m.ring).unwrap();
        prop_assert!(find_isomorphism(&m.ring, &mm.ring).is_some(), "{}", name);
        if r.unit().is_some() {
            prop_assert!(find_isomorphism(&r, &m.ring).is_some(), "{}", name);
        }
    }

    #[test]
    fn local_units_make_finite_rings_unital((_name, r) in ring()) {
        let lu = has_local_units(&r);
        prop_assert_eq!(lu.per_element, lu.uniform);
    }

    #[test]
    fn ideal_lattice_is_bounded_with_honest_pseudocomplements((name, r) in ring()) {
        let all = ideals(&r);
        let zero = 1u32 << r.zero();
        prop_assert_eq!(all.first().copied(), Some(zero));
        prop_assert_eq!(all.last().copied(), Some(r.all()));
        prop_assert!(ideal_lattice(&r).is_complete_lattice());
        for &i in &all {
            if let Some(p) = pseudocomplement(&r, i) {
                prop_assert!(is_ideal(&r, p));
                prop_assert_eq!(i & p, zero, "{} {:#x}", name, i);
                for &j in &all {
                    if i & j == zero {
                        prop_assert_eq!(j & !p, 0, "{} {:#x} {:#x}", name, i, j);
                    }
                }
            }
        }
    }
}

#[test]
fn oversized_rings_are_refused() {
    // M(col) has 8 elements, so M(col x col) would have 64
    let big = FinRing::product(&FinRing::column_ring(), &FinRing::column_ring());
    assert!(matches!(multiplier_ring(&big), Err(polarhull::Error::TooLarge { size: 64, limit: 32 })));
    let m = multiplier_ring(&FinRing::product(&FinRing::column_ring(), &FinRing::zn(2))).unwrap();
    assert_eq!(m.ring.len(), 16);
    assert!(matches!(
        multiplier_ring(&FinRing::product(&m.ring, &FinRing::zn(2))),
        Err(polarhull::Error::TooLarge { size: 32, limit: 16 })
    ));
}

#[test]
fn degenerate_rings_have_no_multiplier_ring() {
    for (name, r) in small_rings() {
        assert_eq!(multiplier_ring(&r).is_ok(), is_non_degenerate(&r), "{name}");
    }
}

use polarhull::boolean::{
    build_ba_capacitor, enumerate_homs, is_continuous_hom, is_dense_subalgebra, is_embedding, is_essential_embedding,
    is_hom, is_surjective, materialize_ba_universe, sikorski_extend, validate_ba, BaTables, FinBoolAlg,
};
use polarhull::fincat::props::{epics, isos, monics, regular_monics};
use polarhull::fincat::DEFAULT_ARROW_BUDGET;
use polarhull::polarity::essential_monics;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn ba(n: usize) -> FinBoolAlg {
    FinBoolAlg::from_atoms(n).unwrap()
}

fn algebras(ns: &[usize]) -> Vec<(String, FinBoolAlg)> {
    ns.iter().map(|&n| ((1usize << n).to_string(), ba(n))).collect()
}

/// The tables of the algebra on `n` atoms with elements listed in the order
/// `perm`.
fn shuffled_tables(n: usize, perm: &[usize]) -> BaTables {
    let a = ba(n);
    let size = a.size();
    let mut pos = vec![0; size];
    for (k, &x) in perm.iter().enumerate() {
        pos[x] = k;
    }
    BaTables {
        name: "shuffled".into(),
        elements: perm.iter().map(|&x| a.element_name(x)).collect(),
        meet: perm.iter().map(|&x| perm.iter().map(|&y| pos[x & y]).collect()).collect(),
        join: perm.iter().map(|&x| perm.iter().map(|&y| pos[x | y]).collect()).collect(),
        neg: perm.iter().map(|&x| pos[a.neg(x)]).collect(),
    }
}

fn shuffle() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..=3).prop_flat_map(|n| (Just(n), Just((0..1usize << n).collect::<Vec<_>>()).prop_shuffle()))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        rng_seed: RngSeed::Fixed(0xba),
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn shuffled_tables_normalize_to_the_same_algebra((n, perm) in shuffle()) {
        let t = shuffled_tables(n, &perm);
        prop_assert!(validate_ba(&t).is_empty());
        let (alg, masks) = FinBoolAlg::from_tables(&t).unwrap();
        prop_assert_eq!(alg.atom_count(), n);
        let mut sorted = masks.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..alg.size()).collect::<Vec<_>>());
    }

    #[test]
    fn breaking_a_complement_is_reported((n, perm) in shuffle(), at in any::<prop::sample::Index>()) {
        prop_assume!(n >= 1);
        let mut t = shuffled_tables(n, &perm);
        let x = at.index(t.elements.len());
        t.neg[x] = x;
        prop_assert!(!validate_ba(&t).is_empty());
    }

    #[test]
    fn homomorphisms_preserve_joins_and_bounds(m in 0usize..=3, n in 0usize..=3) {
        let (a, b) = (ba(m), ba(n));
        let homs = enumerate_homs(&a, &b);
        let expected = if m == 0 { usize::from(n == 0) } else { m.pow(n as u32) };
        prop_assert_eq!(homs.len(), expected);
        for f in &homs {
            prop_assert!(is_hom(&a, &b, f));
            prop_assert_eq!(f[0], 0);
            prop_assert_eq!(f[a.one()], b.one());
            for x in 0..a.size() {
                for y in 0..a.size() {
                    prop_assert_eq!(f[x | y], f[x] | f[y]);
                }
            }
            prop_assert!(is_continuous_hom(&a, &b, f));
            if is_essential_embedding(&b, f) {
                prop_assert!(is_surjective(&b, f));
            }
        }
    }

    #[test]
    fn embeddings_extend_into_every_algebra(m in 0usize..=2, k in 0usize..=1, n in 0usize..=3) {
        let (a, b, c) = (ba(m), ba(m + k), ba(n));
        for f in enumerate_homs(&a, &b).into_iter().filter(|f| is_embedding(f)) {
            for h in enumerate_homs(&a, &c) {
                let g = sikorski_extend(&a, &b, &c, &f, &h).unwrap();
                prop_assert!(is_hom(&b, &c, &g));
                prop_assert!((0..a.size()).all(|x| g[f[x]] == h[x]));
            }
        }
    }
}

#[test]
fn dense_subalgebras_preserve_every_join() {
    for m in 0..=3 {
        for n in m..=3 {
            let (a, b) = (ba(m), ba(n));
            for f in enumerate_homs(&a, &b) {
                if !(is_embedding(&f) && is_dense_subalgebra(&b, &f)) {
                    continue;
                }
                for xs in 0u32..1 << a.size() {
                    let join = (0..a.size()).filter(|&i| xs >> i & 1 == 1).fold(0, |acc, i| acc | i);
                    let image = (0..a.size()).filter(|&i| xs >> i & 1 == 1).fold(0, |acc, i| acc | f[i]);
                    assert_eq!(f[join], image);
                }
            }
        }
    }
}

#[test]
fn detectors_match_the_algebra_on_the_universe() {
    let u = materialize_ba_universe(&algebras(&[0, 1, 2, 3]), DEFAULT_ARROW_BUDGET).unwrap();
    let c = &u.concrete.category;
    let (mono, epi, regular, iso) = (monics(c), epics(c), regular_monics(c), isos(c));
    for f in c.arrow_ids() {
        let values = u.concrete.values(f);
        let tgt = u.algebras[c.tgt(f)];
        assert_eq!(mono.contains(f), is_embedding(values), "{}", c.arrow_name(f));
        assert_eq!(epi.contains(f), is_surjective(&tgt, values), "{}", c.arrow_name(f));
        assert_eq!(regular.contains(f), mono.contains(f), "{}", c.arrow_name(f));
        assert_eq!(iso.contains(f), is_embedding(values) && is_surjective(&tgt, values));
    }
}

#[test]
fn essential_monics_are_the_essential_embeddings() {
    for ns in [vec![1, 2], vec![1, 2, 3], vec![0, 1, 2, 3]] {
        let u = materialize_ba_universe(&algebras(&ns), DEFAULT_ARROW_BUDGET).unwrap();
        let c = &u.concrete.category;
        let ess = essential_monics(c);
        for f in c.arrow_ids() {
            let tgt = u.algebras[c.tgt(f)];
            assert_eq!(ess.contains(f), is_essential_embedding(&tgt, u.concrete.values(f)), "{}", c.arrow_name(f));
        }
    }
}

#[test]
fn capacitor_units_are_identities() {
    let built = build_ba_capacitor(&algebras(&[1, 2, 3]), DEFAULT_ARROW_BUDGET).unwrap();
    let spec = &built.capacitor.spec;
    let c = spec.category();
    for x in c.objects() {
        let entry = spec.family[x].unwrap();
        assert_eq!(entry.unit, c.identity(x));
    }
}

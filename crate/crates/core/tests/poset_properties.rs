use polarhull::posets::{
    enumerate_monotone_maps, is_dense, is_embedding, is_monotone, macneille, members, FinPoset,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

/// A random order on `n ≤ 5` elements: the transitive closure of random
/// pairs `i < j`.
fn poset() -> impl Strategy<Value = FinPoset> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                leq[i][i] = true;
                for j in i + 1..n {
                    leq[i][j] = bits[i * n + j];
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if leq[i][k] && leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && leq[i][j])
                .collect();
            FinPoset::new((0..n).map(|i| format!("p{i}")).collect(), &pairs).unwrap()
        })
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        rng_seed: RngSeed::Fixed(0x0de7),
        ..ProptestConfig::default()
    }
}

fn cut(p: &FinPoset, a: u32) -> u32 {
    p.down_set(p.up_set(a))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn down_up_is_a_closure_operator(p in poset()) {
        for a in 0..=p.all() {
            prop_assert_eq!(a & !cut(&p, a), 0, "not extensive on {:#b}", a);
            prop_assert_eq!(cut(&p, cut(&p, a)), cut(&p, a));
            for b in 0..=p.all() {
                if a & !b == 0 {
                    prop_assert_eq!(cut(&p, a) & !cut(&p, b), 0);
                }
            }
        }
    }

    #[test]
    fn meets_are_intersections_and_joins_close_unions(p in poset()) {
        let m = macneille(&p).unwrap();
        let l = &m.lattice;
        prop_assert!(l.is_complete_lattice());
        for i in 0..m.carrier.len() {
            for j in 0..m.carrier.len() {
                let both = 1 << i | 1 << j;
                let meet = m.index(m.carrier[i] & m.carrier[j]);
                let join = m.index(cut(&p, m.carrier[i] | m.carrier[j]));
                prop_assert_eq!(l.inf(both), meet);
                prop_assert_eq!(l.sup(both), join);
            }
        }
    }

    #[test]
    fn macneille_unit_is_a_dense_embedding(p in poset()) {
        let m = macneille(&p).unwrap();
        prop_assert!(is_embedding(&p, &m.lattice, &m.unit));
        prop_assert!(is_dense(&m.lattice, &m.unit));
        for (k, &a) in m.carrier.iter().enumerate() {
            let below: u32 = members(a).fold(0, |s, i| s | 1 << m.unit[i]);
            prop_assert_eq!(m.lattice.sup(below), Some(k));
        }
    }

    #[test]
    fn lattices_are_their_own_completion(p in poset()) {
        let m = macneille(&p).unwrap();
        if p.is_complete_lattice() {
            prop_assert_eq!(m.carrier.len(), p.len());
            prop_assert!(m.lattice.is_isomorphic(&p));
        } else {
            prop_assert!(m.carrier.len() > p.len());
        }
    }

    #[test]
    fn dense_embeddings_factor_the_unit(p in poset(), q in poset()) {
        prop_assume!(q.len() <= 4 && p.len() <= q.len());
        let m = macneille(&p).unwrap();
        for f in enumerate_monotone_maps(&p, &q) {
            if !(is_embedding(&p, &q, &f) && is_dense(&q, &f)) {
                continue;
            }
            let found = enumerate_monotone_maps(&q, &m.lattice)
                .into_iter()
                .any(|g| (0..p.len()).all(|i| g[f[i]] == m.unit[i]));
            prop_assert!(found, "no factorization for {:?}", f);
        }
    }

    #[test]
    fn canonical_form_is_an_isomorphism_invariant(p in poset()) {
        let (c, perm) = p.canonical();
        prop_assert!(c.is_isomorphic(&p));
        prop_assert!(is_embedding(&c, &p, &perm) && is_monotone(&c, &p, &perm));
        let again = c.canonical().0;
        prop_assert_eq!(again.shape(), c.shape());
    }
}

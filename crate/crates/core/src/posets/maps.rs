use super::{members, FinPoset, Subset};
use crate::error::{Error, Result};

/// Continuity is checked over every subset of the source; refused above this.
pub const CONTINUITY_LIMIT: usize = 12;

/// Values of a map between two posets, by element index.
pub type MonotoneMap = Vec<usize>;

pub fn is_monotone(p: &FinPoset, q: &FinPoset, f: &[usize]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| !p.leq(i, j) || q.leq(f[i], f[j])))
}

/// `i ≤ j ⇔ f(i) ≤ f(j)`; injective as a consequence.
pub fn is_embedding(p: &FinPoset, q: &FinPoset, f: &[usize]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| p.leq(i, j) == q.leq(f[i], f[j])))
}

fn image(f: &[usize]) -> Subset {
    f.iter().fold(0, |m, &v| m | 1 << v)
}

/// Every element of `q` is the supremum of the image elements below it.
pub fn is_join_dense(q: &FinPoset, f: &[usize]) -> bool {
    let im = image(f);
    (0..q.len()).all(|b| q.sup(im & q.below(b)) == Some(b))
}

pub fn is_meet_dense(q: &FinPoset, f: &[usize]) -> bool {
    let im = image(f);
    (0..q.len()).all(|b| q.inf(im & q.above(b)) == Some(b))
}

pub fn is_dense(q: &FinPoset, f: &[usize]) -> bool {
    is_join_dense(q, f) && is_meet_dense(q, f)
}

/// Every existing infimum and supremum of every subset of `p` is sent to the
/// infimum (supremum) of the image.
pub fn is_continuous_map(p: &FinPoset, q: &FinPoset, f: &[usize]) -> Result<bool> {
    if p.len() > CONTINUITY_LIMIT {
        return Err(Error::TooLarge {
            size: p.len(),
            limit: CONTINUITY_LIMIT,
        });
    }
    for a in 0..=p.all() {
        let fa = members(a).fold(0, |m, i| m | 1 << f[i]);
        if let Some(s) = p.sup(a) {
            if q.sup(fa) != Some(f[s]) {
                return Ok(false);
            }
        }
        if let Some(s) = p.inf(a) {
            if q.inf(fa) != Some(f[s]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All monotone maps, in lexicographic order of their value vectors.
pub fn enumerate_monotone_maps(p: &FinPoset, q: &FinPoset) -> Vec<MonotoneMap> {
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(p.len());
    extend(p, q, &mut values, &mut out);
    out
}

fn extend(p: &FinPoset, q: &FinPoset, values: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
    let i = values.len();
    if i == p.len() {
        out.push(values.clone());
        return;
    }
    for v in 0..q.len() {
        let fits = (0..i).all(|j| (!p.leq(j, i) || q.leq(values[j], v)) && (!p.leq(i, j) || q.leq(v, values[j])));
        if fits {
            values.push(v);
            extend(p, q, values, out);
            values.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FinPoset {
        FinPoset::new(
            ["0", "a", "b", "1"].map(String::from).to_vec(),
            &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn chain_maps() {
        let (one, two) = (FinPoset::chain(1), FinPoset::chain(2));
        assert_eq!(enumerate_monotone_maps(&two, &one), vec![vec![0, 0]]);
        assert_eq!(enumerate_monotone_maps(&one, &two).len(), 2);
        assert_eq!(enumerate_monotone_maps(&two, &two).len(), 3);
        // bottom inclusion: an embedding, not join dense at the top
        assert!(is_embedding(&one, &two, &[0]));
        assert!(!is_join_dense(&two, &[0]));
        assert!(is_meet_dense(&two, &[0]));
    }

    #[test]
    fn antichain_into_chain_is_monotone_not_embedding() {
        let (a, c) = (FinPoset::antichain(2), FinPoset::chain(2));
        assert!(is_monotone(&a, &c, &[0, 1]));
        assert!(!is_embedding(&a, &c, &[0, 1]));
    }

    #[test]
    fn collapse_of_a_join_is_not_continuous() {
        // {a, b < ⊤} → 2-chain with a, b ↦ 0 and ⊤ ↦ 1
        let v = FinPoset::new(["a", "b", "t"].map(String::from).to_vec(), &[(0, 2), (1, 2)]).unwrap();
        let c = FinPoset::chain(2);
        assert!(is_monotone(&v, &c, &[0, 0, 1]));
        assert!(!is_continuous_map(&v, &c, &[0, 0, 1]).unwrap());
        assert!(is_continuous_map(&v, &v, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn antichain_sits_densely_in_the_diamond() {
        let d = diamond();
        assert!(is_embedding(&FinPoset::antichain(2), &d, &[1, 2]));
        assert!(is_dense(&d, &[1, 2]));
        assert!(is_continuous_map(&FinPoset::antichain(2), &d, &[1, 2]).unwrap());
    }
}

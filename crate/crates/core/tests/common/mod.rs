#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use polarhull::fincat::{ConcreteCategory, MapArrow};
use proptest::prelude::*;

/// Most arrows a random category may close up to before it is discarded.
pub const ARROW_CAP: usize = 150;

/// The closure of `gens` and the identities under composition, or `None`
/// when it exceeds [`ARROW_CAP`].
pub fn closed_category(sizes: &[usize], gens: &[Generator]) -> Option<ConcreteCategory> {
    let mut seen: BTreeSet<(usize, usize, Vec<usize>)> = BTreeSet::new();
    let mut queue: VecDeque<(usize, usize, Vec<usize>)> = VecDeque::new();
    for (x, &n) in sizes.iter().enumerate() {
        queue.push_back((x, x, (0..n).collect()));
    }
    queue.extend(gens.iter().cloned());
    let mut maps: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    while let Some(m) = queue.pop_front() {
        if !seen.insert(m.clone()) {
            continue;
        }
        if seen.len() > ARROW_CAP {
            return None;
        }
        for other in maps.clone() {
            if other.0 == m.1 {
                queue.push_back((m.0, other.1, m.2.iter().map(|&v| other.2[v]).collect()));
            }
            if m.0 == other.1 {
                queue.push_back((other.0, m.1, other.2.iter().map(|&v| m.2[v]).collect()));
            }
        }
        if m.0 == m.1 {
            queue.push_back((m.0, m.1, m.2.iter().map(|&v| m.2[v]).collect()));
        }
        maps.push(m);
    }
    let objects = sizes.iter().enumerate().map(|(i, &n)| (format!("o{i}"), n)).collect();
    let maps = seen
        .into_iter()
        .map(|(src, tgt, values)| MapArrow { src, tgt, values })
        .collect();
    ConcreteCategory::build(objects, maps, ARROW_CAP, |i, _| format!("a{i}")).ok()
}

/// `(source, target, values)` of one generating map.
pub type Generator = (usize, usize, Vec<usize>);

fn generator(sizes: Vec<usize>) -> impl Strategy<Value = Generator> {
    let k = sizes.len();
    (0..k, 0..k).prop_flat_map(move |(s, t)| {
        let (n, m) = (sizes[s], sizes[t]);
        proptest::collection::vec(0..m, n).prop_map(move |v| (s, t, v))
    })
}

/// Carrier sizes and generator maps of a small category of functions.
pub fn category_parts() -> impl Strategy<Value = (Vec<usize>, Vec<Generator>)> {
    proptest::collection::vec(1usize..=3, 1..=3).prop_flat_map(|sizes| {
        let gens = proptest::collection::vec(generator(sizes.clone()), 0..=4);
        (Just(sizes), gens)
    })
}

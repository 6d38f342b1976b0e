//! Small named categories used by examples and tests.

use super::{Arrow, BuildOptions, FiniteCategory};

/// The cyclic group of order `n` as a one-object category; arrow `k` is the
/// rotation by `k` and arrow 0 is the identity.
pub fn cyclic_group(n: usize) -> FiniteCategory {
    assert!(n > 0);
    let arrows = (0..n)
        .map(|k| Arrow {
            name: if k == 0 { "e".to_string() } else { format!("r{k}") },
            src: 0,
            tgt: 0,
        })
        .collect();
    FiniteCategory::from_table(vec!["*".into()], arrows, vec![0], |g, f| Some((g + f) % n), BuildOptions::default())
        .expect("cyclic group is a category")
}

/// `n` objects and only identities.
pub fn discrete(n: usize) -> FiniteCategory {
    let objects = (0..n).map(|i| format!("x{i}")).collect();
    let arrows = (0..n)
        .map(|i| Arrow {
            name: format!("1x{i}"),
            src: i,
            tgt: i,
        })
        .collect();
    FiniteCategory::from_table(objects, arrows, (0..n).collect(), |g, _| Some(g), BuildOptions::default())
        .expect("discrete category is a category")
}

/// `a → b` with a single non-identity arrow `u`.
pub fn walking_arrow() -> FiniteCategory {
    let objects = vec!["a".to_string(), "b".to_string()];
    let arrows = vec![
        Arrow { name: "1a".into(), src: 0, tgt: 0 },
        Arrow { name: "1b".into(), src: 1, tgt: 1 },
        Arrow { name: "u".into(), src: 0, tgt: 1 },
    ];
    FiniteCategory::from_table(
        objects,
        arrows,
        vec![0, 1],
        |g, f| Some(if g < 2 { f } else { g }),
        BuildOptions::default(),
    )
    .expect("walking arrow is a category")
}

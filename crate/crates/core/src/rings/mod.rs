//! Finite, possibly non-unital rings given by tables: annihilators, local
//! units, ideals and pseudocomplements, multiplier rings, non-degenerate
//! homomorphisms and the ring capacitor.

mod lemmas;
mod multiplier;
mod universe;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lemmas::{check_quotient_kernel, check_trivial_complement, QuotientKernelReport, TrivialComplementReport};
pub use multiplier::{
    extend_multiplier_hom, lift_ideal_embedding, multiplier_ring, IdealLift, MultiplierExtension, MultiplierRing,
};
pub use universe::{build_ring_capacitor, materialize_ring_universe, RingCapacitor, RingUniverse};

/// Largest accepted carrier.
pub const MAX_ELEMENTS: usize = 16;

/// Subsets of a carrier as bitmasks.
pub type Subset = u32;

/// A ring with elements `0..n`, given by addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRing {
    names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
}

/// A ring file entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingEntry {
    pub name: String,
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingViolation {
    Shape { detail: String },
    AddAssociative { x: usize, y: usize, z: usize },
    AddCommutative { x: usize, y: usize },
    NoZero,
    NoNegative { x: usize },
    MulAssociative { x: usize, y: usize, z: usize },
    LeftDistributive { x: usize, y: usize, z: usize },
    RightDistributive { x: usize, y: usize, z: usize },
}

/// Every violated ring axiom, each with its witnessing elements.
pub fn validate_ring(e: &RingEntry) -> Vec<RingViolation> {
    let n = e.elements.len();
    let square = |m: &Vec<Vec<usize>>| m.len() == n && m.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));
    if n == 0 || !square(&e.add) || !square(&e.mul) {
        return vec![RingViolation::Shape {
            detail: format!("tables do not match {n} elements"),
        }];
    }
    let (a, m) = (&e.add, &e.mul);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if a[x][y] != a[y][x] && x < y {
                out.push(RingViolation::AddCommutative { x, y });
            }
            for z in 0..n {
                if a[a[x][y]][z] != a[x][a[y][z]] {
                    out.push(RingViolation::AddAssociative { x, y, z });
                }
                if m[m[x][y]][z] != m[x][m[y][z]] {
                    out.push(RingViolation::MulAssociative { x, y, z });
                }
                if m[x][a[y][z]] != a[m[x][y]][m[x][z]] {
                    out.push(RingViolation::LeftDistributive { x, y, z });
                }
                if m[a[y][z]][x] != a[m[y][x]][m[z][x]] {
                    out.push(RingViolation::RightDistributive { x, y, z });
                }
            }
        }
    }
    match (0..n).find(|&z| (0..n).all(|x| a[z][x] == x && a[x][z] == x)) {
        None => out.push(RingViolation::NoZero),
        Some(z) => {
            for (x, row) in a.iter().enumerate() {
                if !row.contains(&z) {
                    out.push(RingViolation::NoNegative { x });
                }
            }
        }
    }
    out
}

impl FinRing {
    pub fn from_entry(e: &RingEntry) -> Result<Self> {
        if e.elements.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                size: e.elements.len(),
                limit: MAX_ELEMENTS,
            });
        }
        if let Some(v) = validate_ring(e).into_iter().next() {
            return Err(Error::Malformed(format!("`{}` is not a ring: {v:?}", e.name)));
        }
        Ok(Self::from_tables(e.elements.clone(), e.add.clone(), e.mul.clone()))
    }

    fn from_tables(names: Vec<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Self {
        let n = names.len();
        let zero = (0..n).find(|&z| (0..n).all(|x| add[z][x] == x)).expect("validated");
        let neg = (0..n)
            .map(|x| (0..n).find(|&y| add[x][y] == zero).expect("validated"))
            .collect();
        Self {
            names,
            add,
            mul,
            zero,
            neg,
        }
    }

    /// Builds tables from closures over `0..n`; panics on non-rings, so only
    /// used by the generators below.
    fn generated(names: Vec<String>, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let r = Self::from_tables(
            names,
            (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect(),
            (0..n).map(|x| (0..n).map(|y| mul(x, y)).collect()).collect(),
        );
        debug_assert!(validate_ring(&r.to_entry("generated")).is_empty());
        r
    }

    /// `Z/n`.
    pub fn zn(n: usize) -> Self {
        Self::generated((0..n).map(|x| x.to_string()).collect(), |x, y| (x + y) % n, |x, y| x * y % n)
    }

    /// `Z/n` with zero multiplication.
    pub fn zero_mul(n: usize) -> Self {
        Self::generated((0..n).map(|x| x.to_string()).collect(), |x, y| (x + y) % n, |_, _| 0)
    }

    /// The field with four elements, `a + bw` stored as `a | b << 1`, `w² = w + 1`.
    pub fn f4() -> Self {
        let names = ["0", "1", "w", "w+1"].map(String::from).to_vec();
        Self::generated(names, |x, y| x ^ y, |x, y| {
            let (a, b, c, d) = (x & 1, x >> 1, y & 1, y >> 1);
            ((a & c) ^ (b & d)) | ((a & d) ^ (b & c) ^ (b & d)) << 1
        })
    }

    /// Upper triangular 2×2 matrices over F₂; bits are the entries (1,1),
    /// (1,2), (2,2).
    pub fn upper_triangular() -> Self {
        let names = (0..8).map(|x| format!("[{}{};0{}]", x & 1, x >> 1 & 1, x >> 2)).collect();
        Self::generated(names, |x, y| x ^ y, |x, y| {
            let (a, b, c) = (x & 1, x >> 1 & 1, x >> 2);
            let (d, e, f) = (y & 1, y >> 1 & 1, y >> 2);
            (a & d) | ((a & e) ^ (b & f)) << 1 | (c & f) << 2
        })
    }

    /// The left ideal `{a·e₁₁ + b·e₂₁}` of 2×2 matrices over F₂:
    /// `(a, b)(c, d) = c·(a, b)`. Non-degenerate, without a left unit.
    pub fn column_ring() -> Self {
        let names = ["0", "e11", "e21", "e11+e21"].map(String::from).to_vec();
        Self::generated(names, |x, y| x ^ y, |x, y| if y & 1 == 1 { x } else { 0 })
    }

    /// The right ideal `{a·e₁₁ + b·e₁₂}`: `(a, b)(c, d) = a·(c, d)`.
    pub fn row_ring() -> Self {
        let names = ["0", "e11", "e12", "e11+e12"].map(String::from).to_vec();
        Self::generated(names, |x, y| x ^ y, |x, y| if x & 1 == 1 { y } else { 0 })
    }

    /// `A × B`, element `(a, b)` at `a·|B| + b`.
    pub fn product(a: &FinRing, b: &FinRing) -> Self {
        let m = b.len();
        let names = (0..a.len() * m).map(|x| format!("({},{})", a.names[x / m], b.names[x % m])).collect();
        Self::generated(
            names,
            |x, y| a.add(x / m, y / m) * m + b.add(x % m, y % m),
            |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m),
        )
    }

    /// `F₂ᵏ`.
    pub fn f2_power(k: usize) -> Self {
        (1..k).fold(Self::zn(2), |acc, _| Self::product(&acc, &Self::zn(2)))
    }

    pub fn to_entry(&self, name: &str) -> RingEntry {
        RingEntry {
            name: name.to_string(),
            elements: self.names.clone(),
            add: self.add.clone(),
            mul: self.mul.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x][y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn all(&self) -> Subset {
        ((1u64 << self.len()) - 1) as Subset
    }

    pub fn unit(&self) -> Option<usize> {
        (0..self.len()).find(|&e| (0..self.len()).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// The additive subgroup generated by `seed`.
    pub fn span(&self, seed: impl IntoIterator<Item = usize>) -> Subset {
        let mut mask: Subset = 1 << self.zero;
        let mut members = vec![self.zero];
        let gens: Vec<usize> = seed.into_iter().collect();
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in &gens {
                let y = self.add(x, g);
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    members.push(y);
                }
            }
            i += 1;
        }
        mask
    }

    /// A minimal-by-construction generating list of the additive group, taken
    /// greedily in element order.
    pub fn additive_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.span([]);
        for x in 0..self.len() {
            if span >> x & 1 == 0 {
                gens.push(x);
                span = self.span(gens.iter().copied());
            }
        }
        gens
    }

    /// The additive span of `{xy : x ∈ X, y ∈ Y}`.
    pub fn product_span(&self, xs: Subset, ys: Subset) -> Subset {
        let products = members(xs).flat_map(|x| members(ys).map(move |y| (x, y)));
        self.span(products.map(|(x, y)| self.mul(x, y)).collect::<Vec<_>>())
    }

    /// The subring on an ideal, with its inclusion.
    pub fn subring(&self, ideal: Subset) -> (FinRing, Vec<usize>) {
        let elems: Vec<usize> = members(ideal).collect();
        let pos = |v: usize| elems.iter().position(|&e| e == v).expect("closed subset");
        let names = elems.iter().map(|&e| self.names[e].clone()).collect();
        let ring = Self::generated(names, |x, y| pos(self.add(elems[x], elems[y])), |x, y| {
            pos(self.mul(elems[x], elems[y]))
        });
        (ring, elems)
    }

    /// `R/I` with its projection; cosets are numbered by least member.
    pub fn quotient(&self, ideal: Subset) -> (FinRing, Vec<usize>) {
        let n = self.len();
        let mut class = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if class[x] == usize::MAX {
                for i in members(ideal) {
                    class[self.add(x, i)] = reps.len();
                }
                reps.push(x);
            }
        }
        let names = reps
            .iter()
            .map(|&r| format!("{}+I", self.names[r]))
            .collect();
        let ring = Self::generated(names, |x, y| class[self.add(reps[x], reps[y])], |x, y| {
            class[self.mul(reps[x], reps[y])]
        });
        (ring, class)
    }
}

/// The bundled rings of order at most 8: the unital ones first, then the
/// non-unital column and row rings, then a degenerate one.
pub fn small_rings() -> Vec<(String, FinRing)> {
    let mut out: Vec<(String, FinRing)> = (1..=8).map(|n| (format!("Z{n}"), FinRing::zn(n))).collect();
    out.extend([
        ("F4".to_string(), FinRing::f4()),
        ("F2^2".to_string(), FinRing::f2_power(2)),
        ("F2^3".to_string(), FinRing::f2_power(3)),
        ("Z2xZ4".to_string(), FinRing::product(&FinRing::zn(2), &FinRing::zn(4))),
        ("T2".to_string(), FinRing::upper_triangular()),
        ("col".to_string(), FinRing::column_ring()),
        ("row".to_string(), FinRing::row_ring()),
        ("Z2_0".to_string(), FinRing::zero_mul(2)),
    ]);
    out
}

pub fn members(mask: Subset) -> impl Iterator<Item = usize> + Clone {
    (0..Subset::BITS as usize).filter(move |&i| mask >> i & 1 == 1)
}

/// The two-sided annihilator `{x : xR = Rx = 0}`.
pub fn annihilator(r: &FinRing) -> Subset {
    (0..r.len())
        .filter(|&x| (0..r.len()).all(|y| r.mul(x, y) == r.zero() && r.mul(y, x) == r.zero()))
        .fold(0, |m, x| m | 1 << x)
}

pub fn is_non_degenerate(r: &FinRing) -> bool {
    annihilator(r) == 1 << r.zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalUnits {
    /// Every `a` has `e`, `f` with `ae = fa = a`.
    pub per_element: bool,
    /// One `e` with `ae = ea = a` for the whole carrier.
    pub uniform: bool,
}

pub fn has_local_units(r: &FinRing) -> LocalUnits {
    let n = r.len();
    LocalUnits {
        per_element: (0..n).all(|a| (0..n).any(|e| r.mul(a, e) == a) && (0..n).any(|f| r.mul(f, a) == a)),
        uniform: r.unit().is_some(),
    }
}

/// Whether an additive subgroup absorbs multiplication on both sides.
pub fn is_ideal(r: &FinRing, s: Subset) -> bool {
    r.span(members(s)) == s
        && members(s).all(|x| (0..r.len()).all(|y| s >> r.mul(x, y) & 1 == 1 && s >> r.mul(y, x) & 1 == 1))
}

/// Every two-sided ideal, sorted by (size, mask).
pub fn ideals(r: &FinRing) -> Vec<Subset> {
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = vec![r.span([])];
    seen.insert(queue[0]);
    while let Some(s) = queue.pop() {
        for x in 0..r.len() {
            if s >> x & 1 == 0 {
                let t = r.span(members(s).chain([x]));
                if seen.insert(t) {
                    queue.push(t);
                }
            }
        }
    }
    let mut out: Vec<Subset> = seen.into_iter().filter(|&s| is_ideal(r, s)).collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Nontrivial intersection with every nontrivial ideal.
pub fn is_essential_ideal(r: &FinRing, i: Subset) -> bool {
    let zero: Subset = 1 << r.zero();
    ideals(r).into_iter().all(|j| j == zero || i & j != zero)
}

/// The largest ideal meeting `i` in zero, when it exists.
pub fn pseudocomplement(r: &FinRing, i: Subset) -> Option<Subset> {
    let zero: Subset = 1 << r.zero();
    let orthogonal: Vec<Subset> = ideals(r).into_iter().filter(|&j| i & j == zero).collect();
    let top = *orthogonal.last()?;
    orthogonal.iter().all(|&j| j & !top == 0).then_some(top)
}

/// The ideal lattice ordered by inclusion, with element names from masks.
pub fn ideal_lattice(r: &FinRing) -> crate::posets::FinPoset {
    let all = ideals(r);
    let pairs: Vec<(usize, usize)> = (0..all.len())
        .flat_map(|a| (0..all.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && all[a] & !all[b] == 0)
        .collect();
    let names = all.iter().map(|s| format!("{s:#x}")).collect();
    crate::posets::FinPoset::new(names, &pairs).expect("inclusion is an order")
}

/// The additive map over the span of `seed` (pairs `x ↦ y`), with the
/// number of elements reached; `None` when the assignments clash.
fn close_additive(a: &FinRing, b: &FinRing, seed: &[(usize, usize)]) -> Option<(Vec<usize>, usize)> {
    let mut map = vec![usize::MAX; a.len()];
    map[a.zero()] = b.zero();
    let mut known = vec![a.zero()];
    let mut i = 0;
    while i < known.len() {
        let x = known[i];
        for &(g, y) in seed {
            let (t, v) = (a.add(x, g), b.add(map[x], y));
            if map[t] == usize::MAX {
                map[t] = v;
                known.push(t);
            } else if map[t] != v {
                return None;
            }
        }
        i += 1;
    }
    Some((map, known.len()))
}

/// Extends `seed` (pairs `x ↦ y`) to an additive map `A → B`; `None` when the
/// assignments clash or do not span `A`.
pub fn extend_additive(a: &FinRing, b: &FinRing, seed: &[(usize, usize)]) -> Option<Vec<usize>> {
    close_additive(a, b, seed).and_then(|(map, reached)| (reached == a.len()).then_some(map))
}

/// Additive homomorphisms `A → B`, by images of the additive generators, in
/// lexicographic order of those images. Each partial assignment is checked
/// before the next generator is tried.
pub fn additive_homs(a: &FinRing, b: &FinRing) -> Vec<Vec<usize>> {
    fn go(a: &FinRing, b: &FinRing, gens: &[usize], seed: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<usize>>) {
        let k = seed.len();
        if k == gens.len() {
            out.extend(extend_additive(a, b, seed));
            return;
        }
        for y in 0..b.len() {
            seed.push((gens[k], y));
            if close_additive(a, b, seed).is_some() {
                go(a, b, gens, seed, out);
            }
            seed.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &a.additive_generators(), &mut Vec::new(), &mut out);
    out
}

pub fn is_ring_hom(a: &FinRing, b: &FinRing, f: &[usize]) -> bool {
    f.len() == a.len()
        && (0..a.len()).all(|x| (0..a.len()).all(|y| f[a.add(x, y)] == b.add(f[x], f[y]) && f[a.mul(x, y)] == b.mul(f[x], f[y])))
}

/// All ring homomorphisms `A → B`, units not required to be preserved.
pub fn ring_homs(a: &FinRing, b: &FinRing) -> Vec<Vec<usize>> {
    additive_homs(a, b)
        .into_iter()
        .filter(|f| (0..a.len()).all(|x| (0..a.len()).all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y]))))
        .collect()
}

pub fn is_unital_hom(a: &FinRing, b: &FinRing, f: &[usize]) -> bool {
    matches!((a.unit(), b.unit()), (Some(u), Some(v)) if f[u] == v)
}

pub fn is_injective(f: &[usize]) -> bool {
    let mut v = f.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

pub fn image(f: &[usize]) -> Subset {
    f.iter().fold(0, |m, &v| m | 1 << v)
}

/// `f(A)B = Bf(A) = B`, with products spanned additively.
pub fn is_non_degenerate_hom(b: &FinRing, f: &[usize]) -> bool {
    let img = image(f);
    b.product_span(img, b.all()) == b.all() && b.product_span(b.all(), img) == b.all()
}

/// The lowest ring isomorphism `A → B`.
pub fn find_isomorphism(a: &FinRing, b: &FinRing) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    ring_homs(a, b).into_iter().find(|f| is_injective(f))
}

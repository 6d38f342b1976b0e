//! Finite Boolean algebras in powerset-of-atoms form, their homomorphisms,
//! dense subalgebras, continuity, completions and the Boolean capacitor.

mod universe;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::posets::{macneille, FinPoset};

pub use universe::{build_ba_capacitor, materialize_ba_universe, BaCapacitor, BaUniverse};

/// Largest number of atoms accepted; continuity checks run over all subsets
/// of the carrier.
pub const MAX_ATOMS: usize = 4;

/// The powerset algebra on `atoms` atoms. Element `x` is the bitmask of the
/// atoms below it, so meet is `&`, join is `|` and `0`, `1` are the empty
/// and full masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinBoolAlg {
    atoms: usize,
}

/// Element values of a map between two algebras.
pub type BaHom = Vec<usize>;

/// A Boolean algebra file entry: a powerset algebra or explicit tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaEntry {
    Atoms { name: String, atoms: usize },
    Tables(BaTables),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaTables {
    pub name: String,
    pub elements: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaViolation {
    Shape { detail: String },
    Commutative { op: &'static str, x: usize, y: usize },
    Associative { op: &'static str, x: usize, y: usize, z: usize },
    Absorption { x: usize, y: usize },
    Distributive { x: usize, y: usize, z: usize },
    NoBounds,
    Complement { x: usize },
}

/// Every violated axiom of a bounded distributive complemented lattice.
pub fn validate_ba(t: &BaTables) -> Vec<BaViolation> {
    let n = t.elements.len();
    let mut out = Vec::new();
    let square = |m: &Vec<Vec<usize>>| m.len() == n && m.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));
    if n == 0 || !square(&t.meet) || !square(&t.join) || t.neg.len() != n || t.neg.iter().any(|&v| v >= n) {
        out.push(BaViolation::Shape {
            detail: format!("tables do not match {n} elements"),
        });
        return out;
    }
    for (op, m) in [("meet", &t.meet), ("join", &t.join)] {
        for x in 0..n {
            for y in 0..n {
                if m[x][y] != m[y][x] {
                    out.push(BaViolation::Commutative { op, x, y });
                }
                for z in 0..n {
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        out.push(BaViolation::Associative { op, x, y, z });
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if t.meet[x][t.join[x][y]] != x || t.join[x][t.meet[x][y]] != x {
                out.push(BaViolation::Absorption { x, y });
            }
            for z in 0..n {
                if t.meet[x][t.join[y][z]] != t.join[t.meet[x][y]][t.meet[x][z]] {
                    out.push(BaViolation::Distributive { x, y, z });
                }
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    let bottom = (0..n).find(|&z| (0..n).all(|x| t.join[z][x] == x));
    let top = (0..n).find(|&o| (0..n).all(|x| t.meet[o][x] == x));
    let (Some(zero), Some(one)) = (bottom, top) else {
        out.push(BaViolation::NoBounds);
        return out;
    };
    for x in 0..n {
        if t.meet[x][t.neg[x]] != zero || t.join[x][t.neg[x]] != one {
            out.push(BaViolation::Complement { x });
        }
    }
    out
}

impl FinBoolAlg {
    pub fn from_atoms(atoms: usize) -> Result<Self> {
        if atoms > MAX_ATOMS {
            return Err(Error::TooLarge {
                size: atoms,
                limit: MAX_ATOMS,
            });
        }
        Ok(Self { atoms })
    }

    /// Normalizes validated tables: returns the powerset algebra and, for
    /// every listed element, its mask of atoms.
    pub fn from_tables(t: &BaTables) -> Result<(Self, Vec<usize>)> {
        let violations = validate_ba(t);
        if !violations.is_empty() {
            return Err(Error::Malformed(format!("`{}` is not a Boolean algebra: {:?}", t.name, violations[0])));
        }
        let n = t.elements.len();
        let leq = |x: usize, y: usize| t.meet[x][y] == x;
        let zero = (0..n).find(|&z| (0..n).all(|x| leq(z, x))).expect("validated");
        let atoms: Vec<usize> = (0..n)
            .filter(|&a| a != zero && (0..n).all(|x| !leq(x, a) || x == a || x == zero))
            .collect();
        let alg = Self::from_atoms(atoms.len())?;
        let masks = (0..n)
            .map(|x| atoms.iter().enumerate().filter(|&(_, &a)| leq(a, x)).fold(0, |m, (i, _)| m | 1 << i))
            .collect();
        Ok((alg, masks))
    }

    pub fn from_entry(entry: &BaEntry) -> Result<(String, Self)> {
        match entry {
            BaEntry::Atoms { name, atoms } => Ok((name.clone(), Self::from_atoms(*atoms)?)),
            BaEntry::Tables(t) => Ok((t.name.clone(), Self::from_tables(t)?.0)),
        }
    }

    pub fn atom_count(&self) -> usize {
        self.atoms
    }

    pub fn size(&self) -> usize {
        1 << self.atoms
    }

    pub fn one(&self) -> usize {
        self.size() - 1
    }

    pub fn neg(&self, x: usize) -> usize {
        self.one() & !x
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.atoms).map(|i| 1 << i).collect()
    }

    pub fn element_name(&self, x: usize) -> String {
        if x == 0 {
            return "0".into();
        }
        let atoms: Vec<String> = (0..self.atoms).filter(|i| x >> i & 1 == 1).map(|i| format!("a{i}")).collect();
        atoms.join("+")
    }

    /// The tables of this algebra, for round trips and validation tests.
    pub fn tables(&self, name: &str) -> BaTables {
        let n = self.size();
        BaTables {
            name: name.to_string(),
            elements: (0..n).map(|x| self.element_name(x)).collect(),
            meet: (0..n).map(|x| (0..n).map(|y| x & y).collect()).collect(),
            join: (0..n).map(|x| (0..n).map(|y| x | y).collect()).collect(),
            neg: (0..n).map(|x| self.neg(x)).collect(),
        }
    }

    /// The underlying poset, ordered by inclusion of atom sets.
    pub fn poset(&self) -> FinPoset {
        let n = self.size();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && x & !y == 0)
            .collect();
        FinPoset::new((0..n).map(|x| self.element_name(x)).collect(), &pairs).expect("inclusion is an order")
    }
}

/// Preserves meets and complements.
pub fn is_hom(a: &FinBoolAlg, b: &FinBoolAlg, f: &[usize]) -> bool {
    f.len() == a.size()
        && (0..a.size()).all(|x| f[a.neg(x)] == b.neg(f[x]) && (0..a.size()).all(|y| f[x & y] == f[x] & f[y]))
}

/// All homomorphisms `A → B`, one per map from the atoms of `B` to the atoms
/// of `A`: `x ↦ {b : φ(b) ∈ x}`. Ordered lexicographically by `φ`.
pub fn enumerate_homs(a: &FinBoolAlg, b: &FinBoolAlg) -> Vec<BaHom> {
    let (m, n) = (a.atoms, b.atoms);
    if m == 0 {
        return if n == 0 { vec![vec![0]] } else { Vec::new() };
    }
    let count = m.pow(n as u32);
    (0..count)
        .map(|mut code| {
            let mut phi = vec![0; n];
            for slot in phi.iter_mut().rev() {
                *slot = code % m;
                code /= m;
            }
            (0..a.size())
                .map(|x| (0..n).filter(|&j| x >> phi[j] & 1 == 1).fold(0, |acc, j| acc | 1 << j))
                .collect()
        })
        .collect()
}

pub fn is_embedding(f: &[usize]) -> bool {
    let mut seen = f.to_vec();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

pub fn is_surjective(b: &FinBoolAlg, f: &[usize]) -> bool {
    let mut hit = vec![false; b.size()];
    for &v in f {
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

/// Every element of the target is the join of the image elements below it.
pub fn is_dense_subalgebra(b: &FinBoolAlg, f: &[usize]) -> bool {
    (0..b.size()).all(|y| f.iter().filter(|&&v| v & !y == 0).fold(0, |acc, &v| acc | v) == y)
}

pub fn is_essential_embedding(b: &FinBoolAlg, f: &[usize]) -> bool {
    is_embedding(f) && is_dense_subalgebra(b, f)
}

/// `⋀X = 0 ⇒ ⋀f(X) = 0` for every subset `X` of the source.
pub fn is_continuous_hom(a: &FinBoolAlg, b: &FinBoolAlg, f: &[usize]) -> bool {
    let n = a.size();
    (1u64..1 << n).all(|x| {
        let elements = (0..n).filter(|&i| x >> i & 1 == 1);
        let meet = elements.clone().fold(a.one(), |m, i| m & i);
        meet != 0 || elements.fold(b.one(), |m, i| m & f[i]) == 0
    })
}

/// The completion of a finite algebra is itself, with the identity unit.
/// Cross-checked against the MacNeille completion of the underlying poset.
pub fn completion(a: &FinBoolAlg) -> Result<(FinBoolAlg, BaHom)> {
    let poset = a.poset();
    let m = macneille(&poset)?;
    if !m.lattice.is_isomorphic(&poset) {
        return Err(Error::Mismatch("MacNeille completion differs from the algebra".into()));
    }
    Ok((*a, (0..a.size()).collect()))
}

/// The lowest-id `g: B → C` with `g∘f = h`, for an embedding `f: A → B`.
pub fn sikorski_extend(a: &FinBoolAlg, b: &FinBoolAlg, c: &FinBoolAlg, f: &[usize], h: &[usize]) -> Result<BaHom> {
    if !is_hom(a, b, f) || !is_embedding(f) || !is_hom(a, c, h) {
        return Err(Error::Precondition("extension needs an embedding and a homomorphism".into()));
    }
    enumerate_homs(b, c)
        .into_iter()
        .find(|g| (0..a.size()).all(|x| g[f[x]] == h[x]))
        .ok_or_else(|| Error::Precondition("no extension found".into()))
}

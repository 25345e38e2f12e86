//! Brute-force recomputation by enumerating elements. Slow, and independent
//! of the row-reduction machinery: submodules are plain sets of vectors.

use std::collections::BTreeSet;

use pairops_core::{FLModule, PrimeField, Submodule};

use crate::session::Ring;

pub type Set = BTreeSet<Vec<u32>>;

/// Every vector of `GF(p)^n`.
pub fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

/// Closes a set of vectors under addition (hence under `GF(p)`-scaling).
pub fn additive_closure(p: u32, n: usize, seeds: impl IntoIterator<Item = Vec<u32>>) -> Set {
    let mut set: Set = BTreeSet::new();
    set.insert(vec![0; n]);
    let mut frontier: Vec<Vec<u32>> = seeds.into_iter().collect();
    while let Some(v) = frontier.pop() {
        if set.contains(&v) {
            continue;
        }
        let snapshot: Vec<Vec<u32>> = set.iter().cloned().collect();
        set.insert(v.clone());
        for w in snapshot {
            let s = add(p, &v, &w);
            if !set.contains(&s) {
                frontier.push(s);
            }
        }
        let d = add(p, &v, &v);
        if !set.contains(&d) {
            frontier.push(d);
        }
    }
    set
}

/// A module seen as a set with a ring action.
pub struct BruteModule<'a> {
    pub ring: &'a Ring,
    pub module: &'a FLModule<PrimeField>,
    pub ring_elements: Vec<Vec<u32>>,
    pub elements: Vec<Vec<u32>>,
}

impl<'a> BruteModule<'a> {
    pub fn new(ring: &'a Ring, module: &'a FLModule<PrimeField>) -> Self {
        let p = ring.field().modulus();
        BruteModule {
            ring,
            module,
            ring_elements: all_vectors(p, ring.dim()),
            elements: all_vectors(p, module.dim()),
        }
    }

    pub fn p(&self) -> u32 {
        self.ring.field().modulus()
    }

    pub fn act(&self, r: &[u32], u: &[u32]) -> Vec<u32> {
        self.module.act(r, u)
    }

    pub fn maximal_ideal(&self) -> Set {
        let unit = self.ring.unit_index();
        self.ring_elements
            .iter()
            .filter(|r| r[unit] == 0)
            .cloned()
            .collect()
    }

    pub fn full(&self) -> Set {
        self.elements.iter().cloned().collect()
    }

    pub fn zero(&self) -> Set {
        std::iter::once(vec![0; self.module.dim()]).collect()
    }

    /// `J L`: sums of products `j u`.
    pub fn product(&self, j: &Set, l: &Set) -> Set {
        let seeds = j.iter().flat_map(|r| l.iter().map(move |u| self.act(r, u)));
        additive_closure(self.p(), self.module.dim(), seeds.collect::<Vec<_>>())
    }

    /// `(L :_M J)`.
    pub fn colon(&self, l: &Set, j: &Set) -> Set {
        self.elements
            .iter()
            .filter(|u| j.iter().all(|r| l.contains(&self.act(r, u))))
            .cloned()
            .collect()
    }

    pub fn sum(&self, a: &Set, b: &Set) -> Set {
        additive_closure(self.p(), self.module.dim(), a.iter().chain(b).cloned().collect::<Vec<_>>())
    }

    pub fn intersect(&self, a: &Set, b: &Set) -> Set {
        a.intersection(b).cloned().collect()
    }

    pub fn bf(&self, j: &Set, l: &Set) -> Set {
        self.colon(&self.product(j, l), j)
    }

    pub fn be(&self, j: &Set, l: &Set) -> Set {
        self.product(j, &self.colon(l, j))
    }

    /// `(0 :_M m)`.
    pub fn socle(&self) -> Set {
        let m = self.maximal_ideal();
        self.colon(&self.zero(), &m)
    }

    pub fn is_submodule(&self, s: &Set) -> bool {
        s.contains(&vec![0; self.module.dim()])
            && s.iter().all(|a| s.iter().all(|b| s.contains(&add(self.p(), a, b))))
            && s
                .iter()
                .all(|u| self.ring_elements.iter().all(|r| s.contains(&self.act(r, u))))
    }

    /// Every submodule, by testing every subset containing zero. Only for
    /// modules with at most 16 elements.
    pub fn submodules(&self) -> Vec<Set> {
        assert!(self.elements.len() <= 16, "too many subsets to enumerate");
        let zero = vec![0; self.module.dim()];
        let rest: Vec<&Vec<u32>> = self.elements.iter().filter(|v| **v != zero).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << rest.len()) {
            let mut s: Set = BTreeSet::new();
            s.insert(zero.clone());
            for (i, v) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    s.insert((*v).clone());
                }
            }
            if self.is_submodule(&s) {
                out.push(s);
            }
        }
        out
    }

    /// `ann_R(N)`.
    pub fn annihilator(&self, n: &Set) -> Set {
        self.ring_elements
            .iter()
            .filter(|r| n.iter().all(|u| self.act(r, u).iter().all(|c| *c == 0)))
            .cloned()
            .collect()
    }
}

/// The element set of an engine submodule.
pub fn set_of(n: &Submodule<PrimeField>) -> Set {
    n.space()
        .elements()
        .expect("finite field")
        .into_iter()
        .collect()
}

/// `r^e` in `ring`.
pub fn power(ring: &Ring, r: &[u32], e: u64) -> Vec<u32> {
    let mut acc = ring.unit_vector();
    for _ in 0..e {
        acc = ring.multiply_coords(&acc, r);
    }
    acc
}

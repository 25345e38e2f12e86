use std::collections::BTreeSet;

use pairops_core::duality::{dual_sub_quot, eta, matlis_dual, MatlisContext};
use pairops_core::fixtures;
use pairops_core::{FLModule, LocalAlgebra, Matrix, PrimeField, Subspace};

type Ring = LocalAlgebra<PrimeField>;
type Module = FLModule<PrimeField>;
type Set = BTreeSet<Vec<u32>>;

fn vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
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

fn p_of(ring: &Ring) -> u32 {
    ring.field().modulus()
}

fn add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

/// Submodules as element sets: subsets containing 0, closed under `+` and
/// the ring action.
fn brute_submodules(ring: &Ring, m: &Module) -> Vec<Set> {
    let p = p_of(ring);
    let elems = vectors(p, m.dim());
    let scalars = vectors(p, ring.dim());
    let zero = vec![0; m.dim()];
    let rest: Vec<&Vec<u32>> = elems.iter().filter(|v| **v != zero).collect();
    assert!(rest.len() <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut s: Set = [zero.clone()].into_iter().collect();
        for (i, v) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert((*v).clone());
            }
        }
        let closed = s
            .iter()
            .all(|a| s.iter().all(|b| s.contains(&add(p, a, b))))
            && s.iter()
                .all(|u| scalars.iter().all(|r| s.contains(&m.act(r, u))));
        if closed {
            out.push(s);
        }
    }
    out
}

fn elements(s: &Subspace<PrimeField>) -> Set {
    s.elements().unwrap().into_iter().collect()
}

fn fixture_rings() -> Vec<(&'static str, Ring)> {
    ["R1", "R2", "R3", "R4"]
        .into_iter()
        .map(|n| (n, fixtures::by_name(n).unwrap()))
        .collect()
}

#[test]
fn fixture_dimensions() {
    let dims: Vec<usize> = fixture_rings().iter().map(|(_, r)| r.dim()).collect();
    assert_eq!(dims, [2, 3, 4, 3]);
    let names: Vec<Vec<String>> = fixture_rings()
        .iter()
        .map(|(_, r)| r.basis_names())
        .collect();
    assert_eq!(names[2], ["1", "x", "y", "x*y"]);
    assert_eq!(names[3], ["1", "x", "x^2"]);
}

#[test]
fn multiplication_is_a_commutative_associative_unital_law() {
    for (name, ring) in fixture_rings() {
        let all = vectors(p_of(&ring), ring.dim());
        let one = ring.unit_vector();
        for a in &all {
            assert_eq!(ring.multiply_coords(a, &one), *a, "{name}");
            for b in &all {
                let ab = ring.multiply_coords(a, b);
                assert_eq!(ab, ring.multiply_coords(b, a), "{name}");
                for c in &all {
                    assert_eq!(
                        ring.multiply_coords(&ab, c),
                        ring.multiply_coords(a, &ring.multiply_coords(b, c)),
                        "{name}"
                    );
                }
            }
        }
        assert!(ring.validate().is_ok(), "{name}");
    }
}

#[test]
fn maximal_ideal_is_the_non_units_and_nilpotent() {
    for (name, ring) in fixture_rings() {
        let m = ring.maximal_ideal();
        for a in vectors(p_of(&ring), ring.dim()) {
            assert_eq!(m.contains(&a), !ring.is_unit(&a), "{name}");
            if m.contains(&a) {
                assert!(ring
                    .power_coords(&a, ring.nil_bound() as u64)
                    .iter()
                    .all(|c| *c == 0));
            }
        }
    }
}

#[test]
fn submodule_enumeration_matches_subset_search() {
    for (name, ring) in fixture_rings() {
        let r = FLModule::regular(&ring);
        let k = FLModule::residue_field(&ring);
        let socle_quotient = r.quotient(&r.socle()).unwrap().module;
        let modules = [
            ("R", r.clone()),
            ("E", r.dual()),
            ("k^2", k.direct_sum(&k).unwrap()),
            ("R/soc", socle_quotient),
        ];
        for (label, m) in modules {
            if (p_of(&ring) as u64).pow(m.dim() as u32) > 17 {
                continue;
            }
            let engine: BTreeSet<Set> = m
                .enumerate_submodules(1000)
                .unwrap()
                .iter()
                .map(|s| elements(s.space()))
                .collect();
            let brute: BTreeSet<Set> = brute_submodules(&ring, &m).into_iter().collect();
            assert_eq!(engine, brute, "{name} {label}");
        }
    }
}

#[test]
fn ideal_counts() {
    let counts: Vec<usize> = fixture_rings()
        .iter()
        .map(|(_, r)| {
            FLModule::regular(r)
                .enumerate_submodules(100)
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(counts, [3, 6, 7, 4]);
}

#[test]
fn socle_and_radical_match_their_definitions() {
    for (name, ring) in fixture_rings() {
        let r = FLModule::regular(&ring);
        for m in [r.clone(), r.dual()] {
            let all = vectors(p_of(&ring), m.dim());
            let mm = elements(ring.maximal_ideal());
            let soc: Set = all
                .iter()
                .filter(|u| mm.iter().all(|a| m.act(a, u).iter().all(|c| *c == 0)))
                .cloned()
                .collect();
            assert_eq!(elements(m.socle().space()), soc, "{name}");
            let images: Vec<Vec<u32>> = mm
                .iter()
                .flat_map(|a| all.iter().map(|u| m.act(a, u)))
                .collect();
            let rad = Subspace::from_rows(*ring.field(), m.dim(), &images).unwrap();
            assert_eq!(*m.radical().space(), rad, "{name}");
        }
    }
}

/// `Hom_R(M, N)` as the set of all intertwining matrices.
fn brute_hom_count(ring: &Ring, m: &Module, n: &Module) -> usize {
    let p = p_of(ring);
    let f = *ring.field();
    vectors(p, m.dim() * n.dim())
        .into_iter()
        .filter(|data| {
            let t = Matrix::new(f, n.dim(), m.dim(), data.clone()).unwrap();
            m.actions()
                .iter()
                .zip(n.actions())
                .all(|(a, b)| t.mul(a).unwrap() == b.mul(&t).unwrap())
        })
        .count()
}

#[test]
fn hom_dimensions_match_enumeration() {
    for name in ["R1", "R2", "R3"] {
        let ring = fixtures::by_name(name).unwrap();
        let r = FLModule::regular(&ring);
        let k = FLModule::residue_field(&ring);
        let e = r.dual();
        let mods = [("R", &r), ("k", &k), ("E", &e)];
        for (a, m) in mods {
            for (b, n) in mods {
                if m.dim() * n.dim() > 12 {
                    continue;
                }
                let basis = m.hom(n).unwrap();
                assert_eq!(
                    1usize << basis.len(),
                    brute_hom_count(&ring, m, n),
                    "{name} Hom({a}, {b})"
                );
            }
        }
    }
}

#[test]
fn tensor_with_residue_field_is_the_top() {
    for (name, ring) in fixture_rings() {
        let r = FLModule::regular(&ring);
        let k = FLModule::residue_field(&ring);
        for m in [r.clone(), r.dual(), k.clone()] {
            let t = k.tensor(&m).unwrap();
            assert_eq!(t.module.dim(), m.dim() - m.radical().dim(), "{name}");
            assert_eq!(t.module.dim(), m.minimal_generators().len(), "{name}");
        }
        assert_eq!(r.tensor(&r).unwrap().module.dim(), r.dim());
    }
}

#[test]
fn quotient_projection_is_surjective_with_the_right_kernel() {
    for (name, ring) in fixture_rings() {
        let r = FLModule::regular(&ring);
        for i in r.enumerate_submodules(100).unwrap() {
            let q = r.quotient(&i).unwrap();
            assert_eq!(q.module.dim() + i.dim(), r.dim(), "{name}");
            assert!(q.projection.is_surjective());
            assert_eq!(q.projection.kernel(), i);
        }
    }
}

#[test]
fn matlis_duality_on_fixtures() {
    for (name, ring) in fixture_rings() {
        let ctx = MatlisContext::new(&ring);
        let e = ctx.injective_hull();
        assert_eq!(e.socle().dim(), 1, "{name}");
        assert_eq!(matlis_dual(e), *ctx.regular());
        assert!(eta(e).unwrap().is_isomorphism());
        // ann_R ann_E I = I and (0 :_E I)^∨ has the length of R/I.
        for i in ctx.regular().enumerate_submodules(100).unwrap() {
            let a = ctx.ann_e(i.space()).unwrap();
            assert_eq!(a.dim(), ring.dim() - i.dim(), "{name}");
            assert_eq!(ctx.ann_r(&a).unwrap(), *i.space(), "{name}");
        }
    }
}

#[test]
fn dual_sub_quot_is_an_order_reversing_bijection() {
    for (name, ring) in fixture_rings() {
        let r = FLModule::regular(&ring);
        let k = FLModule::residue_field(&ring);
        for m in [r.clone(), r.dual(), k.direct_sum(&k).unwrap()] {
            let subs = m.enumerate_submodules(1000).unwrap();
            let images: Vec<_> = subs.iter().map(|n| dual_sub_quot(&m, n).unwrap()).collect();
            let distinct: BTreeSet<_> = images.iter().map(|s| s.space().clone()).collect();
            assert_eq!(distinct.len(), subs.len(), "{name}");
            for (a, ia) in subs.iter().zip(&images) {
                assert_eq!(ia.dim() + a.dim(), m.dim());
                for (b, ib) in subs.iter().zip(&images) {
                    assert_eq!(a.is_submodule_of(b), ib.is_submodule_of(ia), "{name}");
                }
            }
        }
    }
}

use std::collections::BTreeSet;

use pairops_core::fixtures;
use pairops_core::pairops::builders::{
    be, bf, custom_table, frobenius_closure, identity, module_closure, trace,
};
use pairops_core::pairops::{
    check_properties, cohereditary_version, gamma, hereditary_version, join, meet, rho, Bounds,
    Catalog, Property, SubmoduleSelector,
};
use pairops_core::{
    smile_dual, FLModule, LocalAlgebra, PairOperation, PrimeField, Submodule, Subspace,
};
use proptest::prelude::*;

type Ring = LocalAlgebra<PrimeField>;
type Op = PairOperation<PrimeField>;
type Set = BTreeSet<Vec<u32>>;

fn catalog(ring: &Ring) -> Catalog<PrimeField> {
    Catalog::new(ring, Bounds::default()).unwrap()
}

fn elements(s: &Subspace<PrimeField>) -> Set {
    s.elements().unwrap().into_iter().collect()
}

/// Evaluates both operations on every catalog pair and compares.
fn agree_everywhere(p: &Op, q: &Op, ring: &Ring) -> usize {
    let cat = catalog(ring);
    let mut pairs = 0;
    for e in cat.entries() {
        for l in &e.submodules {
            let a = p.eval(l, &e.module).unwrap();
            let b = q.eval(l, &e.module).unwrap();
            assert_eq!(
                a,
                b,
                "{} vs {} at {:?} in {}",
                p.name(),
                q.name(),
                l.basis_vectors(),
                e.name
            );
            pairs += 1;
        }
    }
    pairs
}

fn ideals(ring: &Ring) -> Vec<Subspace<PrimeField>> {
    FLModule::regular(ring)
        .enumerate_submodules(100)
        .unwrap()
        .into_iter()
        .map(Submodule::into_space)
        .collect()
}

fn small_rings() -> [Ring; 3] {
    [fixtures::r1(), fixtures::r2(), fixtures::r3()]
}

#[test]
fn bf_and_be_match_element_formulas() {
    for ring in small_rings() {
        let cat = catalog(&ring);
        for j in ideals(&ring) {
            let js = elements(&j);
            let (bfj, bej) = (bf(j.clone()), be(j.clone()));
            for e in cat.entries() {
                let m = &e.module;
                if 2u64.pow(m.dim() as u32) > 64 {
                    continue;
                }
                let all: Vec<Vec<u32>> = m.full().space().elements().unwrap();
                let product = |l: &Set| -> Subspace<PrimeField> {
                    let gens: Vec<Vec<u32>> = js
                        .iter()
                        .flat_map(|r| l.iter().map(|u| m.act(r, u)))
                        .collect();
                    Subspace::from_rows(*ring.field(), m.dim(), &gens).unwrap()
                };
                let colon = |l: &Set| -> Set {
                    all.iter()
                        .filter(|u| js.iter().all(|r| l.contains(&m.act(r, u))))
                        .cloned()
                        .collect()
                };
                for l in &e.submodules {
                    let ls = elements(l.space());
                    let want_bf = colon(&elements(&product(&ls)));
                    let want_be = elements(&product(&colon(&ls)));
                    assert_eq!(elements(bfj.eval(l, m).unwrap().space()), want_bf);
                    assert_eq!(elements(bej.eval(l, m).unwrap().space()), want_be);
                }
            }
        }
    }
}

#[test]
fn bf_and_be_are_smile_duals() {
    for ring in small_rings() {
        for j in ideals(&ring) {
            agree_everywhere(&smile_dual(&bf(j.clone())), &be(j.clone()), &ring);
            agree_everywhere(&smile_dual(&be(j.clone())), &bf(j), &ring);
        }
    }
}

#[test]
fn trace_and_closure_are_smile_duals() {
    for ring in small_rings() {
        let k = FLModule::residue_field(&ring);
        let r = FLModule::regular(&ring);
        for (l, s) in [(k, vec![vec![1]]), (r.clone(), vec![ring.unit_vector()])] {
            let tr = trace(s.clone(), l.clone()).unwrap();
            let cl = module_closure(s, l).unwrap();
            let pairs = agree_everywhere(&smile_dual(&tr), &cl, &ring);
            assert!(pairs > 0);
        }
    }
}

#[test]
fn frobenius_matches_bracket_powers_in_r4() {
    let r4 = fixtures::r4();
    let reg = FLModule::regular(&r4);
    let all = reg.full().space().elements().unwrap();
    for i in ideals(&r4) {
        let got = frobenius_closure()
            .eval(&reg.submodule(i.clone()).unwrap(), &reg)
            .unwrap();
        let gens = elements(&i);
        let mut want: Set = gens.clone();
        for q in [3u64, 9] {
            let bracket: Vec<Vec<u32>> = gens.iter().map(|g| r4.power_coords(g, q)).collect();
            let bracket = r4.ideal(&bracket).unwrap();
            for r in &all {
                if bracket.contains(&r4.power_coords(r, q)) {
                    want.insert(r.clone());
                }
            }
        }
        assert_eq!(elements(got.space()), want);
    }
    // Everything in m cubes to zero, so every proper nonzero ideal closes to m.
    let x2 = reg.span(&[vec![0, 0, 1]]).unwrap();
    assert_eq!(
        frobenius_closure().eval(&x2, &reg).unwrap().space(),
        r4.maximal_ideal()
    );
}

#[test]
fn meet_and_join_are_pointwise() {
    let r2 = fixtures::r2();
    let m = r2.maximal_ideal().clone();
    let ops = [bf(m.clone()), be(m), identity()];
    let cat = catalog(&r2);
    let (mt, jn) = (meet(&ops).unwrap(), join(&ops).unwrap());
    for e in cat.entries() {
        for l in &e.submodules {
            let vals: Vec<_> = ops.iter().map(|p| p.eval(l, &e.module).unwrap()).collect();
            let lo = vals
                .iter()
                .skip(1)
                .fold(vals[0].clone(), |a, b| a.intersect(b).unwrap());
            let hi = vals
                .iter()
                .skip(1)
                .fold(vals[0].clone(), |a, b| a.sum(b).unwrap());
            assert_eq!(mt.eval(l, &e.module).unwrap(), lo);
            assert_eq!(jn.eval(l, &e.module).unwrap(), hi);
        }
    }
    assert!(meet::<PrimeField>(&[]).is_err());
}

#[test]
fn selector_bridges_are_residual_and_absolute() {
    let r2 = fixtures::r2();
    for alpha in [SubmoduleSelector::socle(), SubmoduleSelector::radical()] {
        let r = check_properties(&rho(&alpha), &r2, Bounds::default()).unwrap();
        assert!(r.passes(Property::Residual), "{}", r);
        let g = check_properties(&gamma(&alpha), &r2, Bounds::default()).unwrap();
        assert!(g.passes(Property::Absolute), "{}", g);
    }
}

#[test]
fn socle_and_radical_bridges_are_dual() {
    for ring in small_rings() {
        let (soc, rad) = (SubmoduleSelector::socle(), SubmoduleSelector::radical());
        agree_everywhere(&smile_dual(&rho(&soc)), &gamma(&rad), &ring);
        agree_everywhere(&smile_dual(&gamma(&rad)), &rho(&soc), &ring);
    }
}

#[test]
fn versions_are_fixed_points() {
    let r3 = fixtures::r3();
    let b = Bounds::default();
    let m = r3.maximal_ideal().clone();
    let ch = cohereditary_version(&bf(m.clone()));
    assert!(check_properties(&ch, &r3, b)
        .unwrap()
        .passes(Property::Cohereditary));
    let h = hereditary_version(&be(m));
    assert!(check_properties(&h, &r3, b)
        .unwrap()
        .passes(Property::Hereditary));
}

fn r2_table_op() -> impl Strategy<Value = Op> {
    let r2 = fixtures::r2();
    let ids = ideals(&r2);
    let n = ids.len();
    (prop::collection::vec((0..n, 0..n), 0..4), 0..n).prop_map(move |(rules, d)| {
        let rules = rules
            .into_iter()
            .map(|(a, b)| (ids[a].clone(), ids[b].clone()))
            .collect();
        custom_table(rules, ids[d].clone())
    })
}

fn builtin(i: usize, ring: &Ring) -> Op {
    let m = ring.maximal_ideal().clone();
    let k = FLModule::residue_field(ring);
    match i {
        0 => bf(m),
        1 => be(m),
        2 => module_closure(vec![vec![1]], k).unwrap(),
        3 => trace(vec![vec![1]], k).unwrap(),
        4 => identity(),
        5 => rho(&SubmoduleSelector::socle()),
        _ => gamma(&SubmoduleSelector::socle()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn double_dual_of_tables(op in r2_table_op()) {
        let r2 = fixtures::r2();
        let r = FLModule::regular(&r2);
        let dd = smile_dual(&smile_dual(&op));
        for l in r.enumerate_submodules(100).unwrap() {
            prop_assert_eq!(dd.eval(&l, &r).unwrap(), op.eval(&l, &r).unwrap());
        }
    }

    #[test]
    fn join_and_meet_swap_under_smile(picks in prop::collection::btree_set(0usize..7, 1..4)) {
        let r2 = fixtures::r2();
        let ops: Vec<Op> = picks.iter().map(|&i| builtin(i, &r2)).collect();
        let duals: Vec<Op> = ops.iter().map(smile_dual).collect();
        agree_everywhere(&smile_dual(&join(&ops).unwrap()), &meet(&duals).unwrap(), &r2);
        agree_everywhere(&smile_dual(&meet(&ops).unwrap()), &join(&duals).unwrap(), &r2);
    }

    #[test]
    fn smile_swaps_extensive_and_intensive(i in 0usize..7) {
        let r2 = fixtures::r2();
        let p = builtin(i, &r2);
        let b = Bounds::default();
        let pr = check_properties(&p, &r2, b).unwrap();
        let dr = check_properties(&smile_dual(&p), &r2, b).unwrap();
        for prop in [Property::Extensive, Property::Idempotent, Property::OpSubmodules, Property::Residual] {
            prop_assert_eq!(pr.passes(prop), dr.passes(prop.dual()), "{} {}", p.name(), prop);
        }
    }
}

use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::FLModule;
use crate::pairops::PairOperation;
use crate::{Error, Result};

/// `p(L, M) = L`.
pub fn identity<F: Field>() -> PairOperation<F> {
    PairOperation::new("identity", |l, _| Ok(l.clone()))
}

/// `p(L, M) = 0`.
pub fn zero_interior<F: Field>() -> PairOperation<F> {
    PairOperation::new("zero_interior", |_, m| Ok(m.zero_submodule()))
}

/// `J`-basically full closure `(J L :_M J)`.
pub fn bf<F: Field>(j: Subspace<F>) -> PairOperation<F> {
    PairOperation::new("bf", move |l, m| m.colon(&m.scale(&j, l)?, &j))
}

/// `J`-basically empty interior `J (L :_M J)`.
pub fn be<F: Field>(j: Subspace<F>) -> PairOperation<F> {
    PairOperation::new("be", move |l, m| m.scale(&j, &m.colon(l, &j)?))
}

fn check_elements<F: Field>(s: &[Vec<F::Elem>], l: &FLModule<F>) -> Result<()> {
    for v in s {
        if v.len() != l.dim() || v.iter().any(|c| !l.field().is_canonical(c)) {
            return Err(Error::NotContained(alloc::format!(
                "subset element has {} coordinates, the module has dimension {}",
                v.len(),
                l.dim()
            )));
        }
    }
    Ok(())
}

/// Module closure `cl_{S,L}`: `u ∈ N^cl_M` iff `s ⊗ u` lies in the image of
/// `L ⊗ N → L ⊗ M` for every `s ∈ S`.
pub fn module_closure<F: Field>(s: Vec<Vec<F::Elem>>, l: FLModule<F>) -> Result<PairOperation<F>> {
    check_elements(&s, &l)?;
    Ok(PairOperation::new("module_closure", move |n, m| {
        l.same_ring(m)?;
        let t = l.tensor(m)?;
        let hit = t.image_of_right(n);
        let f = m.field();
        let mut acc = Subspace::full(f.clone(), m.dim());
        for x in &s {
            let cols: Vec<Vec<F::Elem>> = (0..m.dim())
                .map(|j| {
                    let mut e = alloc::vec![f.zero(); m.dim()];
                    e[j] = f.one();
                    t.simple(x, &e)
                })
                .collect();
            let phi = Matrix::from_columns(f.clone(), t.module.dim(), &cols)?;
            acc = acc.intersect(&hit.space().preimage_under(&phi)?)?;
        }
        m.submodule(acc)
    }))
}

/// Trace `tr_{S,L}(N)`: the submodule of `N` generated by `f(s)` for
/// `f ∈ Hom_R(L, N)` and `s ∈ S`. Ignores the ambient module.
pub fn trace<F: Field>(s: Vec<Vec<F::Elem>>, l: FLModule<F>) -> Result<PairOperation<F>> {
    check_elements(&s, &l)?;
    Ok(PairOperation::new("trace", move |n, m| {
        l.same_ring(m)?;
        let (nmod, inclusion) = m.restrict(n)?;
        let mut images = Vec::new();
        for f in l.hom(&nmod)? {
            for x in &s {
                images.push(inclusion.apply(&f.apply(x)));
            }
        }
        m.span(&images)
    }))
}

/// For `M ≅ R`, the matrix of `R → M, r ↦ r g` for the first minimal
/// generator `g`.
fn regular_frame<F: Field>(m: &FLModule<F>) -> Result<Matrix<F>> {
    let ring = m.ring();
    let gens = m.minimal_generators();
    if m.dim() != ring.dim() || gens.len() != 1 {
        return Err(Error::OutsideDomain(
            "ambient module is not isomorphic to the ring".into(),
        ));
    }
    let cols: Vec<Vec<F::Elem>> = (0..ring.dim())
        .map(|b| m.monomial_action(b).apply(&gens[0]))
        .collect();
    Matrix::from_columns(m.field().clone(), m.dim(), &cols)
}

/// Lifts an operation on ideals to pairs `(L, M)` with `M ≅ R`.
fn on_ideals<F: Field>(
    name: &str,
    op: impl Fn(&Subspace<F>, &FLModule<F>) -> Result<Subspace<F>> + Send + Sync + 'static,
) -> PairOperation<F> {
    PairOperation::new(name, move |l, m| {
        let frame = regular_frame(m)?;
        let ideal = l.space().preimage_under(&frame)?;
        let out = op(&ideal, m)?;
        if out.ambient_dim() != m.ring().dim() {
            return Err(Error::RingMismatch);
        }
        m.submodule(out.image_under(&frame)?)
    })
}

/// Frobenius closure on ideals, `I^F = {r : r^q ∈ I^[q] for some q = p^e}`,
/// with `e` running up to the first `p^e ≥ nil_bound`.
pub fn frobenius_closure<F: Field>() -> PairOperation<F> {
    on_ideals("frobenius", |ideal: &Subspace<F>, m: &FLModule<F>| {
        let ring = m.ring();
        let f = ring.field();
        let p = f.characteristic();
        if p == 0 {
            return Err(Error::CharacteristicZero("Frobenius closure"));
        }
        let mut out = ideal.clone();
        let mut q = 1u64;
        loop {
            // r ↦ r^q is linear over GF(p): coordinates are fixed by Frobenius.
            let powers: Vec<Vec<F::Elem>> = (0..ring.dim())
                .map(|b| ring.power_coords(&ring.basis_vector(b), q))
                .collect();
            let bracket_gens: Vec<Vec<F::Elem>> = ideal
                .basis_vectors()
                .iter()
                .map(|v| ring.power_coords(v, q))
                .collect();
            let bracket = ring.ideal(&bracket_gens)?;
            let frob = Matrix::from_columns(f.clone(), ring.dim(), &powers)?;
            out = out.sum(&bracket.preimage_under(&frob)?)?;
            if q >= ring.nil_bound() as u64 {
                return Ok(out);
            }
            q *= p;
        }
    })
}

/// An operation on ideals given by ordered rules: the first `(bound, value)`
/// with `I ⊆ bound` gives `value`, otherwise `default`. Defined on pairs
/// `(L, M)` with `M ≅ R`.
pub fn custom_table<F: Field>(
    rules: Vec<(Subspace<F>, Subspace<F>)>,
    default: Subspace<F>,
) -> PairOperation<F> {
    on_ideals("custom_table", move |ideal: &Subspace<F>, _: &FLModule<F>| {
        for (bound, value) in &rules {
            if ideal.is_subspace_of(bound) {
                return Ok(value.clone());
            }
        }
        Ok(default.clone())
    })
}

/// The submodule `p(L, M)` for an ideal `L` of `R`, as an ideal.
pub fn eval_on_ideal<F: Field>(
    p: &PairOperation<F>,
    ideal: &Subspace<F>,
    r: &FLModule<F>,
) -> Result<Subspace<F>> {
    Ok(p.eval(&r.submodule(ideal.clone())?, r)?.into_space())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::fixtures;
    use crate::PrimeField;

    fn ideal(r: &crate::LocalAlgebra<PrimeField>, gens: &[&str]) -> Subspace<PrimeField> {
        let vs: Vec<_> = gens
            .iter()
            .map(|g| r.parse_element(g).unwrap().coords().to_vec())
            .collect();
        r.ideal(&vs).unwrap()
    }

    #[test]
    fn bf_and_be_on_r3() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let max = r3.maximal_ideal().clone();
        let x = ideal(&r3, &["x"]);
        assert_eq!(eval_on_ideal(&bf(max.clone()), &x, &r).unwrap(), max);
        assert_eq!(eval_on_ideal(&bf(max.clone()), &max, &r).unwrap(), max);
        assert_eq!(eval_on_ideal(&be(max.clone()), &x, &r).unwrap(), ideal(&r3, &["x*y"]));
        let unit = Subspace::full(*r3.field(), 4);
        for l in r.enumerate_submodules(100).unwrap() {
            assert_eq!(bf(unit.clone()).eval(&l, &r).unwrap(), l);
            assert_eq!(be(unit.clone()).eval(&l, &r).unwrap(), l);
        }
    }

    #[test]
    fn be_on_r1() {
        let r1 = fixtures::r1();
        let r = FLModule::regular(&r1);
        let out = be(r1.maximal_ideal().clone()).eval(&r.zero_submodule(), &r).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn closures_and_traces_over_r3() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let k = FLModule::residue_field(&r3);
        let cl_k = module_closure(vec![vec![1]], k.clone()).unwrap();
        let xy = r.submodule(ideal(&r3, &["x*y"])).unwrap();
        assert_eq!(cl_k.eval(&xy, &r).unwrap().space(), r3.maximal_ideal());

        let cl_r = module_closure(vec![r3.unit_vector()], r.clone()).unwrap();
        for l in r.enumerate_submodules(100).unwrap() {
            assert_eq!(cl_r.eval(&l, &r).unwrap(), l);
        }
        let x = r3.variable_vector(0);
        let cl_x = module_closure(vec![x.clone()], r.clone()).unwrap();
        assert_eq!(cl_x.eval(&xy, &r).unwrap().space(), r3.maximal_ideal());

        let tr_k = trace(vec![vec![1]], k).unwrap();
        assert_eq!(tr_k.eval(&r.full(), &r).unwrap(), xy);
        let tr_r = trace(vec![r3.unit_vector()], r.clone()).unwrap();
        for l in r.enumerate_submodules(100).unwrap() {
            assert_eq!(tr_r.eval(&l, &r).unwrap(), l);
        }
        let tr_x = trace(vec![x], r.clone()).unwrap();
        assert_eq!(*tr_x.eval(&r.full(), &r).unwrap().space(), ideal(&r3, &["x"]));
    }

    #[test]
    fn frobenius_in_r4() {
        let r4 = fixtures::r4();
        let r = FLModule::regular(&r4);
        let fr = frobenius_closure();
        let max = r4.maximal_ideal().clone();
        assert_eq!(eval_on_ideal(&fr, &ideal(&r4, &["x^2"]), &r).unwrap(), max);
        assert_eq!(eval_on_ideal(&fr, &Subspace::zero(*r4.field(), 3), &r).unwrap(), max);
        let unit = Subspace::full(*r4.field(), 3);
        assert_eq!(eval_on_ideal(&fr, &unit, &r).unwrap(), unit);
        let k = FLModule::residue_field(&r4);
        assert!(matches!(
            fr.eval(&k.zero_submodule(), &k),
            Err(Error::OutsideDomain(_))
        ));
    }

    #[test]
    fn custom_table_transports_along_isomorphisms() {
        let r1 = fixtures::r1();
        // R1 is Gorenstein, so E ≅ R and the table applies on E too.
        let max = r1.maximal_ideal().clone();
        let unit = Subspace::full(*r1.field(), 2);
        let op = custom_table(vec![(max.clone(), max.clone())], unit);
        let e = FLModule::regular(&r1).dual();
        let out = op.eval(&e.zero_submodule(), &e).unwrap();
        assert_eq!(out, e.socle());
    }
}

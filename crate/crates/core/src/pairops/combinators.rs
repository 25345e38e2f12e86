use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::field::Field;
use crate::linalg::Subspace;
use crate::module::{FLModule, Submodule};
use crate::pairops::PairOperation;
use crate::{Error, Result};

fn joined_names<F: Field>(ops: &[PairOperation<F>]) -> String {
    let names: Vec<&str> = ops.iter().map(|p| p.name()).collect();
    names.join(", ")
}

/// `(⋀ p_i)(L, M) = ⋂ p_i(L, M)`.
pub fn meet<F: Field>(ops: &[PairOperation<F>]) -> Result<PairOperation<F>> {
    if ops.is_empty() {
        return Err(Error::EmptyList);
    }
    let ops: Vec<PairOperation<F>> = ops.to_vec();
    let name = alloc::format!("meet({})", joined_names(&ops));
    Ok(PairOperation::new(name, move |l, m| {
        let mut acc = ops[0].eval(l, m)?;
        for p in &ops[1..] {
            acc = acc.intersect(&p.eval(l, m)?)?;
        }
        Ok(acc)
    }))
}

/// `(⋁ p_i)(L, M) = Σ p_i(L, M)`.
pub fn join<F: Field>(ops: &[PairOperation<F>]) -> Result<PairOperation<F>> {
    if ops.is_empty() {
        return Err(Error::EmptyList);
    }
    let ops: Vec<PairOperation<F>> = ops.to_vec();
    let name = alloc::format!("join({})", joined_names(&ops));
    Ok(PairOperation::new(name, move |l, m| {
        let mut acc = ops[0].eval(l, m)?;
        for p in &ops[1..] {
            acc = acc.sum(&p.eval(l, m)?)?;
        }
        Ok(acc)
    }))
}

/// Value of the finitistic version at one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitisticDetails<F: Field> {
    /// Span of `⋃ p(L ∩ U, U)`.
    pub value: Submodule<F>,
    /// Whether the union was already a submodule.
    pub union_is_submodule: bool,
    /// Submodules `U` that contributed (those inside the domain of `p`).
    pub contributing: usize,
}

/// `p_f(L, M)` together with the union diagnostic.
pub fn finitistic_details<F: Field>(
    p: &PairOperation<F>,
    l: &Submodule<F>,
    m: &FLModule<F>,
    limit: usize,
) -> Result<FinitisticDetails<F>> {
    let f = m.field();
    let mut pieces: Vec<Submodule<F>> = Vec::new();
    for u in m.enumerate_submodules(limit)? {
        let (umod, inclusion) = m.restrict(&u)?;
        let lu = inclusion.preimage(&l.intersect(&u)?)?;
        match p.eval(&lu, &umod) {
            Ok(v) => pieces.push(inclusion.image(&v)?),
            Err(Error::OutsideDomain(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    if pieces.is_empty() {
        return Err(Error::OutsideDomain(alloc::format!(
            "{} is undefined on every submodule of the ambient module",
            p.name()
        )));
    }
    let mut span = Subspace::zero(f.clone(), m.dim());
    let mut union: BTreeSet<Vec<F::Elem>> = BTreeSet::new();
    for piece in &pieces {
        span = span.sum(piece.space())?;
        union.extend(piece.space().elements()?);
    }
    let union_is_submodule = union.len() == span.elements()?.len();
    Ok(FinitisticDetails {
        value: m.submodule(span)?,
        union_is_submodule,
        contributing: pieces.len(),
    })
}

/// The finitistic version `p_f(L, M)`, the span of `p(L ∩ U, U)` over all
/// submodules `U ⊆ M`.
pub fn finitistic<F: Field>(p: &PairOperation<F>, limit: usize) -> PairOperation<F> {
    let inner = p.clone();
    PairOperation::new(alloc::format!("finitistic({})", p.name()), move |l, m| {
        Ok(finitistic_details(&inner, l, m, limit)?.value)
    })
}

/// `p_ch(L, M) = π(p(π^{-1}(L), P))` for the minimal free cover `π: P ↠ M`.
pub fn cohereditary_version<F: Field>(p: &PairOperation<F>) -> PairOperation<F> {
    let inner = p.clone();
    PairOperation::new(alloc::format!("ch({})", p.name()), move |l, m| {
        let (free, pi) = m.free_cover()?;
        pi.image(&inner.eval(&pi.preimage(l)?, &free)?)
    })
}

/// `p_h(L, M) = ι^{-1}(p(ι(L), E^n))` for the embedding `ι: M ↪ E^n`.
pub fn hereditary_version<F: Field>(p: &PairOperation<F>) -> PairOperation<F> {
    let inner = p.clone();
    PairOperation::new(alloc::format!("h({})", p.name()), move |l, m| {
        let (hull, iota) = m.injective_embed()?;
        iota.preimage(&inner.eval(&iota.image(l)?, &hull)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::fixtures;
    use crate::pairops::builders::{be, bf, identity, module_closure, zero_interior};
    use crate::pairops::selectors::{rho, SubmoduleSelector};

    #[test]
    fn lattice_basics() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let max = r3.maximal_ideal().clone();
        let b = bf(max.clone());
        let cl_k = module_closure(vec![vec![1]], FLModule::residue_field(&r3)).unwrap();
        let x = r.span(&[r3.variable_vector(0)]).unwrap();
        assert_eq!(meet(&[b.clone(), cl_k]).unwrap().eval(&x, &r).unwrap().space(), &max);
        for l in r.enumerate_submodules(100).unwrap() {
            let v = b.eval(&l, &r).unwrap();
            assert_eq!(meet(&[b.clone(), identity()]).unwrap().eval(&l, &r).unwrap(), l);
            assert_eq!(join(&[b.clone(), identity()]).unwrap().eval(&l, &r).unwrap(), v);
            assert_eq!(join(&[b.clone(), zero_interior()]).unwrap().eval(&l, &r).unwrap(), v);
            assert_eq!(meet(&[b.clone(), b.clone()]).unwrap().eval(&l, &r).unwrap(), v);
            let e = be(max.clone());
            let w = e.eval(&l, &r).unwrap();
            assert_eq!(join(&[e.clone(), e]).unwrap().eval(&l, &r).unwrap(), w);
        }
        assert_eq!(meet::<crate::PrimeField>(&[]).unwrap_err(), Error::EmptyList);
        assert_eq!(join::<crate::PrimeField>(&[]).unwrap_err(), Error::EmptyList);
    }

    #[test]
    fn finitistic_examples() {
        let r3 = fixtures::r3();
        let e = FLModule::regular(&r3).dual();
        let b = bf(r3.maximal_ideal().clone());
        let x = e.span(&[e.radical().basis_vectors()[0].clone()]).unwrap();
        let d = finitistic_details(&b, &x, &e, 100).unwrap();
        assert_eq!(d.contributing, 7);
        assert!(d.value.is_submodule_of(&e.full()));
        assert!(b.eval(&x, &e).unwrap().is_submodule_of(&d.value));
        for l in e.enumerate_submodules(100).unwrap() {
            assert_eq!(finitistic(&identity(), 100).eval(&l, &e).unwrap(), l);
        }
    }

    #[test]
    fn cohereditary_version_of_bf_is_strictly_smaller() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let xy = r.socle();
        let q = r.quotient(&xy).unwrap().module;
        let b = bf(r3.maximal_ideal().clone());
        let direct = b.eval(&q.zero_submodule(), &q).unwrap();
        let ch = cohereditary_version(&b).eval(&q.zero_submodule(), &q).unwrap();
        assert_eq!(direct.dim(), 2);
        assert!(ch.is_zero());
        for l in r.enumerate_submodules(100).unwrap() {
            assert_eq!(cohereditary_version(&identity()).eval(&l, &r).unwrap(), l);
            assert_eq!(hereditary_version(&identity()).eval(&l, &r).unwrap(), l);
        }
        let a = rho(&SubmoduleSelector::socle());
        let r2 = fixtures::r2();
        let m2 = FLModule::regular(&r2);
        for l in m2.enumerate_submodules(100).unwrap() {
            assert_eq!(
                cohereditary_version(&a).eval(&l, &m2).unwrap(),
                a.eval(&l, &m2).unwrap()
            );
        }
    }

    #[test]
    fn hereditary_version_on_hull_is_direct() {
        let r3 = fixtures::r3();
        let e = FLModule::regular(&r3).dual();
        let b = bf(r3.maximal_ideal().clone());
        for l in e.enumerate_submodules(100).unwrap() {
            assert_eq!(
                hereditary_version(&b).eval(&l, &e).unwrap(),
                b.eval(&l, &e).unwrap()
            );
        }
    }
}

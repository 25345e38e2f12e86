//! Matlis duality over an Artinian local algebra.
//!
//! `M^∨ = Hom_k(M, k)` in the dual coordinates, so the dual action is the
//! transpose, `E = R^∨`, and the evaluation map `η: M → M^∨∨` is the
//! identity in coordinates.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::LocalAlgebra;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{FLModule, ModuleMap, Submodule};
use crate::pairops::{DualStats, PairOperation};
use crate::{Error, Result};

/// `R`, `E = R^∨` and the evaluation pairing `R × E → k`.
#[derive(Clone, Debug)]
pub struct MatlisContext<F: Field> {
    ring: LocalAlgebra<F>,
    regular: FLModule<F>,
    e: FLModule<F>,
}

impl<F: Field> MatlisContext<F> {
    pub fn new(ring: &LocalAlgebra<F>) -> Self {
        let regular = FLModule::regular(ring);
        let e = regular.dual();
        MatlisContext {
            ring: ring.clone(),
            regular,
            e,
        }
    }

    pub fn ring(&self) -> &LocalAlgebra<F> {
        &self.ring
    }

    pub fn regular(&self) -> &FLModule<F> {
        &self.regular
    }

    /// `E = E_R(k)`.
    pub fn injective_hull(&self) -> &FLModule<F> {
        &self.e
    }

    /// `⟨r, φ⟩ = φ(r)`.
    pub fn pairing(&self, r: &[F::Elem], phi: &[F::Elem]) -> F::Elem {
        let f = self.ring.field();
        r.iter()
            .zip(phi)
            .fold(f.zero(), |acc, (a, b)| f.mul_add(&acc, a, b))
    }

    /// `ann_E(I) = (0 :_E I)`.
    pub fn ann_e(&self, ideal: &Subspace<F>) -> Result<Submodule<F>> {
        self.e.colon(&self.e.zero_submodule(), ideal)
    }

    /// `ann_R(N)` for `N ⊆ E`.
    pub fn ann_r(&self, n: &Submodule<F>) -> Result<Subspace<F>> {
        self.e.annihilator(n)
    }
}

pub fn matlis_dual<F: Field>(m: &FLModule<F>) -> FLModule<F> {
    m.dual()
}

/// `(M/N)^∨` as the functionals on `M` that kill `N`.
pub fn dual_sub_quot<F: Field>(m: &FLModule<F>, n: &Submodule<F>) -> Result<Submodule<F>> {
    if n.ambient_dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: n.ambient_dim(),
        });
    }
    m.dual().submodule(n.space().orthogonal())
}

/// `η_M: M → M^∨∨`, built by evaluating each dual basis functional.
pub fn eta<F: Field>(m: &FLModule<F>) -> Result<ModuleMap<F>> {
    let f = m.field();
    let n = m.dim();
    let dual_basis: Vec<Vec<F::Elem>> = Matrix::identity(f.clone(), n).row_vectors();
    let columns: Vec<Vec<F::Elem>> = (0..n)
        .map(|j| dual_basis.iter().map(|g| g[j].clone()).collect())
        .collect();
    ModuleMap::new(m, &m.dual().dual(), Matrix::from_columns(f.clone(), n, &columns)?)
}

/// The image of `(M/N)^∨ ↪ M^∨`, the transpose of the projection.
fn quotient_dual_in<F: Field>(m: &FLModule<F>, n: &Submodule<F>) -> Result<Submodule<F>> {
    let q = m.quotient(n)?;
    let inclusion = ModuleMap::new(
        &q.module.dual(),
        &m.dual(),
        q.projection.matrix().transpose(),
    )?;
    Ok(inclusion.image_of_source())
}

/// The smile dual `p^∨(A, B) = η_B^{-1}((B^∨ / p((B/A)^∨, B^∨))^∨)`.
///
/// Every evaluation is computed twice, once by the displayed formula
/// (quotients, transposes and `η`) and once as the common kernel of the
/// functionals in `p((B/A)^∨, B^∨)`; a disagreement is an error.
pub fn smile_dual<F: Field>(p: &PairOperation<F>) -> PairOperation<F> {
    let inner = p.clone();
    let stats = Arc::new(DualStats::default());
    let counter = stats.clone();
    let name = alloc::format!("smile({})", p.name());
    PairOperation::new(name, move |a, b| {
        let bd = b.dual();

        let u_formula = quotient_dual_in(b, a)?;
        let u_kernel = dual_sub_quot(b, a)?;
        if u_formula != u_kernel {
            counter.record(false);
            return Err(mismatch(b, &u_formula, &u_kernel));
        }
        let pv = inner.eval(&u_formula, &bd)?;

        let w = quotient_dual_in(&bd, &pv)?;
        let formula = eta(b)?.preimage(&w)?;

        let mut kernel = Subspace::full(b.field().clone(), b.dim());
        for g in pv.basis_vectors() {
            let functional = Matrix::from_rows(b.field().clone(), b.dim(), &[g])?;
            kernel = kernel.intersect(&functional.kernel())?;
        }
        let kernel = b.submodule(kernel)?;

        let agreed = formula == kernel;
        counter.record(agreed);
        if agreed {
            Ok(formula)
        } else {
            Err(mismatch(b, &formula, &kernel))
        }
    })
    .with_stats(stats)
}

fn mismatch<F: Field>(b: &FLModule<F>, x: &Submodule<F>, y: &Submodule<F>) -> Error {
    let show = |s: &Submodule<F>| -> String {
        let rows: Vec<String> = s
            .basis_vectors()
            .iter()
            .map(|v| {
                let entries: Vec<String> = v.iter().map(|c| b.field().format(c)).collect();
                alloc::format!("[{}]", entries.join(" "))
            })
            .collect();
        alloc::format!("span{{{}}}", rows.join(", "))
    };
    Error::DualityMismatch {
        formula: show(x),
        kernel: show(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::pairops::builders::{be, bf, identity};

    #[test]
    fn hull_has_simple_socle() {
        for r in [fixtures::r1(), fixtures::r2(), fixtures::r3(), fixtures::r4()] {
            let ctx = MatlisContext::new(&r);
            let e = ctx.injective_hull();
            assert_eq!(e.dim(), r.dim());
            assert_eq!(e.socle().dim(), 1);
            let zero = Subspace::zero(*r.field(), r.dim());
            assert!(ctx.ann_e(&zero).unwrap().space().is_full());
            let whole = Subspace::full(*r.field(), r.dim());
            assert!(ctx.ann_e(&whole).unwrap().is_zero());
        }
    }

    #[test]
    fn dual_of_r2_has_simple_socle() {
        let r2 = fixtures::r2();
        let d = FLModule::regular(&r2).dual();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.socle().dim(), 1);
        assert_eq!(FLModule::zero(&r2).dual().dim(), 0);
    }

    #[test]
    fn dual_sub_quot_reverses_order() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let subs = r.enumerate_submodules(100).unwrap();
        for a in &subs {
            let da = dual_sub_quot(&r, a).unwrap();
            assert_eq!(da.dim(), r.dim() - a.dim());
            assert_eq!(da, quotient_dual_in(&r, a).unwrap());
            for b in &subs {
                let db = dual_sub_quot(&r, b).unwrap();
                assert_eq!(a.is_submodule_of(b), db.is_submodule_of(&da));
            }
        }
        assert_eq!(dual_sub_quot(&r, &r.zero_submodule()).unwrap().dim(), 4);
        assert!(dual_sub_quot(&r, &r.full()).unwrap().is_zero());
        let killer = dual_sub_quot(&r, &r.socle()).unwrap();
        assert_eq!(killer, r.dual().radical());
    }

    #[test]
    fn eta_is_an_isomorphism() {
        let r3 = fixtures::r3();
        for m in [FLModule::regular(&r3), FLModule::residue_field(&r3), FLModule::zero(&r3)] {
            let e = eta(&m).unwrap();
            assert!(e.is_isomorphism());
        }
    }

    #[test]
    fn smile_of_identity_is_identity() {
        let r3 = fixtures::r3();
        let id = identity();
        let d = smile_dual(&id);
        let m = FLModule::regular(&r3).dual();
        for l in m.enumerate_submodules(100).unwrap() {
            assert_eq!(d.eval(&l, &m).unwrap(), l);
        }
        let (n, agreed) = d.dual_stats().unwrap().snapshot();
        assert_eq!(n, agreed);
        assert_eq!(n, 7);
    }

    #[test]
    fn smile_of_bf_matches_be_on_r1() {
        let r1 = fixtures::r1();
        let max = r1.maximal_ideal().clone();
        let d = smile_dual(&bf(max.clone()));
        let b = be(max);
        let r = FLModule::regular(&r1);
        for l in r.enumerate_submodules(10).unwrap() {
            assert_eq!(d.eval(&l, &r).unwrap(), b.eval(&l, &r).unwrap());
        }
        let x = r.span(&[r1.variable_vector(0)]).unwrap();
        assert_eq!(d.eval(&x, &r).unwrap(), x);
        assert!(d.eval(&r.zero_submodule(), &r).unwrap().is_zero());
    }
}

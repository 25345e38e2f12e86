use alloc::vec::Vec;

use crate::algebra::LocalAlgebra;
use crate::duality::{smile_dual, MatlisContext};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::module::{FLModule, Submodule};
use crate::pairops::combinators::finitistic;
use crate::pairops::properties::{Bounds, Catalog};
use crate::pairops::PairOperation;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TestIdealMode {
    /// `ann_R cl(0, E)`.
    Big,
    /// `ann_R cl_f(0, E)`.
    Finitistic,
    /// `⋂ (L :_R cl(L, M))` over every catalog pair.
    Enumerated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestIdeal<F: Field> {
    pub mode: TestIdealMode,
    pub ideal: Subspace<F>,
    /// `cl(0, E)` (or `cl_f(0, E)`), for the annihilator modes.
    pub closure_of_zero: Option<Submodule<F>>,
    /// Pairs intersected over, for the enumerated mode.
    pub pairs: usize,
}

/// `(L :_R N) = ann_R((N + L)/L)` for submodules of `m`.
pub fn colon_ideal<F: Field>(
    m: &FLModule<F>,
    l: &Submodule<F>,
    n: &Submodule<F>,
) -> Result<Subspace<F>> {
    let q = m.quotient(l)?;
    q.module.annihilator(&q.projection.image(n)?)
}

pub fn test_ideal<F: Field>(
    cl: &PairOperation<F>,
    ring: &LocalAlgebra<F>,
    mode: TestIdealMode,
    bounds: Bounds,
) -> Result<TestIdeal<F>> {
    let ctx = MatlisContext::new(ring);
    let e = ctx.injective_hull();
    match mode {
        TestIdealMode::Big | TestIdealMode::Finitistic => {
            let op = if mode == TestIdealMode::Big {
                cl.clone()
            } else {
                finitistic(cl, bounds.max_submodules)
            };
            let c = op.eval(&e.zero_submodule(), e)?;
            Ok(TestIdeal {
                mode,
                ideal: ctx.ann_r(&c)?,
                closure_of_zero: Some(c),
                pairs: 0,
            })
        }
        TestIdealMode::Enumerated => {
            let cat = Catalog::new(ring, bounds)?;
            let mut acc = Subspace::full(ring.field().clone(), ring.dim());
            let mut pairs = 0;
            for entry in cat.entries() {
                for l in &entry.submodules {
                    let c = cl.eval(l, &entry.module)?;
                    acc = acc.intersect(&colon_ideal(&entry.module, l, &c)?)?;
                    pairs += 1;
                }
            }
            Ok(TestIdeal {
                mode,
                ideal: acc,
                closure_of_zero: None,
                pairs,
            })
        }
    }
}

/// One ideal's row of the test-ideal chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRow<F: Field> {
    pub ideal: Subspace<F>,
    /// `cl^∨(I, R)`.
    pub dual: Subspace<F>,
    /// `ann_R cl(ann_E I, E)`.
    pub via_hull: Subspace<F>,
    /// `cl_f^∨(I, R)`.
    pub finitistic_dual: Subspace<F>,
    /// `ann_R cl_f(ann_E I, E)`.
    pub finitistic_via_hull: Subspace<F>,
    /// `(0 : (0 : I)^cl_R)`.
    pub collapsed: Subspace<F>,
}

impl<F: Field> ChainRow<F> {
    pub fn holds(&self) -> bool {
        self.dual == self.via_hull
            && self.finitistic_dual == self.finitistic_via_hull
            && self.finitistic_dual == self.collapsed
    }
}

/// Both routes to the dual of `cl` on every ideal of `R`, plain and
/// finitistic, next to `(0 : (0 : I)^cl_R)`.
pub fn test_ideal_chain<F: Field>(
    cl: &PairOperation<F>,
    ring: &LocalAlgebra<F>,
    limit: usize,
) -> Result<Vec<ChainRow<F>>> {
    let ctx = MatlisContext::new(ring);
    let r = ctx.regular();
    let e = ctx.injective_hull();
    let fin = finitistic(cl, limit);
    let dual = smile_dual(cl);
    let fin_dual = smile_dual(&fin);
    let mut rows = Vec::new();
    for i in r.enumerate_submodules(limit)? {
        let ann_e = ctx.ann_e(i.space())?;
        let zero_i = r.annihilator(&i)?;
        let closed = cl.eval(&r.submodule(zero_i)?, r)?;
        let collapsed = colon_ideal(r, &r.zero_submodule(), &closed)?;
        rows.push(ChainRow {
            dual: dual.eval(&i, r)?.into_space(),
            via_hull: ctx.ann_r(&cl.eval(&ann_e, e)?)?,
            finitistic_dual: fin_dual.eval(&i, r)?.into_space(),
            finitistic_via_hull: ctx.ann_r(&fin.eval(&ann_e, e)?)?,
            collapsed,
            ideal: i.into_space(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::fixtures;
    use crate::pairops::builders::{bf, identity, module_closure};

    #[test]
    fn test_ideals_of_r3() {
        let r3 = fixtures::r3();
        let b = bf(r3.maximal_ideal().clone());
        let big = test_ideal(&b, &r3, TestIdealMode::Big, Bounds::default()).unwrap();
        assert_eq!(&big.ideal, r3.maximal_ideal());
        let cl_k = module_closure(vec![vec![1]], FLModule::residue_field(&r3)).unwrap();
        let t = test_ideal(&cl_k, &r3, TestIdealMode::Big, Bounds::default()).unwrap();
        assert_eq!(t.ideal, FLModule::regular(&r3).socle().into_space());
        for mode in [TestIdealMode::Big, TestIdealMode::Finitistic, TestIdealMode::Enumerated] {
            let t = test_ideal(&identity(), &r3, mode, Bounds::default()).unwrap();
            assert!(t.ideal.is_full());
        }
    }
}

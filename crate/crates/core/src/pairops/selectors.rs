use alloc::string::String;
use alloc::sync::Arc;

use crate::field::Field;
use crate::module::{FLModule, Submodule};
use crate::pairops::PairOperation;
use crate::{Error, Result};

type SelectorFn<F> = dyn Fn(&FLModule<F>) -> Result<Submodule<F>> + Send + Sync;

/// A rule `M ↦ α(M) ⊆ M`.
#[derive(Clone)]
pub struct SubmoduleSelector<F: Field> {
    name: String,
    eval: Arc<SelectorFn<F>>,
}

impl<F: Field> core::fmt::Debug for SubmoduleSelector<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "SubmoduleSelector({})", self.name)
    }
}

impl<F: Field> SubmoduleSelector<F> {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&FLModule<F>) -> Result<Submodule<F>> + Send + Sync + 'static,
    ) -> Self {
        SubmoduleSelector {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, m: &FLModule<F>) -> Result<Submodule<F>> {
        let out = (self.eval)(m)?;
        if out.ambient_dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                found: out.ambient_dim(),
            });
        }
        Ok(out)
    }

    /// `soc M = (0 :_M m)`.
    pub fn socle() -> Self {
        Self::new("socle", |m| Ok(m.socle()))
    }

    /// `mM`.
    pub fn radical() -> Self {
        Self::new("radical", |m| Ok(m.radical()))
    }

    pub fn zero() -> Self {
        Self::new("zero", |m| Ok(m.zero_submodule()))
    }

    /// `α(M) = M`.
    pub fn full() -> Self {
        Self::new("full", |m| Ok(m.full()))
    }

    /// The selector `M ↦ p(0, M)` of a pair operation.
    pub fn at_zero(p: &PairOperation<F>) -> Self {
        let p = p.clone();
        Self::new(alloc::format!("{}(0, -)", p.name()), move |m| {
            p.eval(&m.zero_submodule(), m)
        })
    }
}

/// The residual operation `ρ(α)(L, M) = π^{-1}(α(M/L))`.
pub fn rho<F: Field>(alpha: &SubmoduleSelector<F>) -> PairOperation<F> {
    let a = alpha.clone();
    PairOperation::new(alloc::format!("rho({})", alpha.name()), move |l, m| {
        let q = m.quotient(l)?;
        q.projection.preimage(&a.eval(&q.module)?)
    })
}

/// The absolute operation `γ(α)(L, M) = α(L)`.
pub fn gamma<F: Field>(alpha: &SubmoduleSelector<F>) -> PairOperation<F> {
    let a = alpha.clone();
    PairOperation::new(alloc::format!("gamma({})", alpha.name()), move |l, m| {
        let (sub, inclusion) = m.restrict(l)?;
        inclusion.image(&a.eval(&sub)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn selector_bridges_on_r3() {
        let r3 = fixtures::r3();
        let r = FLModule::regular(&r3);
        let x = r.span(&[r3.variable_vector(0)]).unwrap();
        let soc = SubmoduleSelector::socle();
        assert_eq!(rho(&soc).eval(&x, &r).unwrap().space(), r3.maximal_ideal());
        assert_eq!(gamma(&soc).eval(&x, &r).unwrap(), r.socle());
        for l in r.enumerate_submodules(100).unwrap() {
            assert_eq!(rho(&SubmoduleSelector::zero()).eval(&l, &r).unwrap(), l);
            assert_eq!(rho(&SubmoduleSelector::full()).eval(&l, &r).unwrap(), r.full());
            assert_eq!(gamma(&SubmoduleSelector::full()).eval(&l, &r).unwrap(), l);
            assert!(gamma(&SubmoduleSelector::zero()).eval(&l, &r).unwrap().is_zero());
        }
    }

    #[test]
    fn round_trips() {
        for ring in [fixtures::r1(), fixtures::r2(), fixtures::r3(), fixtures::r4()] {
            let ms = [
                FLModule::regular(&ring),
                FLModule::regular(&ring).dual(),
                FLModule::residue_field(&ring),
            ];
            for a in [
                SubmoduleSelector::socle(),
                SubmoduleSelector::radical(),
                SubmoduleSelector::zero(),
                SubmoduleSelector::full(),
            ] {
                for m in &ms {
                    let direct = a.eval(m).unwrap();
                    assert_eq!(rho(&a).eval(&m.zero_submodule(), m).unwrap(), direct);
                    assert_eq!(gamma(&a).eval(&m.full(), m).unwrap(), direct);
                }
            }
        }
    }
}

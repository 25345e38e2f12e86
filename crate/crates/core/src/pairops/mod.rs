//! Pair operations `(L ⊆ M) ↦ p(L, M) ⊆ M` and submodule selectors.
//!
//! * [`builders`]: identity, the zero interior, `J`-basically full closure and
//!   empty interior, module closures, traces, Frobenius closure and
//!   table-driven operations on ideals.
//! * [`selectors`]: submodule selectors and the `ρ`/`γ` bridges.
//! * [`combinators`]: meets, joins, finitistic, cohereditary and hereditary
//!   versions.
//! * [`properties`]: the exhaustive property checker.
//! * [`test_ideal`]: test ideals of closure operations.

pub mod builders;
pub mod combinators;
pub mod properties;
pub mod selectors;
pub mod test_ideal;

use alloc::string::String;
use alloc::sync::Arc;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::field::Field;
use crate::module::{FLModule, Submodule};
use crate::{Error, Result};

pub use builders::{
    be, bf, custom_table, frobenius_closure, identity, module_closure, trace, zero_interior,
};
pub use combinators::{cohereditary_version, finitistic, hereditary_version, join, meet};
pub use properties::{check_properties, Bounds, Catalog, Property, PropertyReport, Verdict};
pub use selectors::{gamma, rho, SubmoduleSelector};

type Evaluator<F> = dyn Fn(&Submodule<F>, &FLModule<F>) -> Result<Submodule<F>> + Send + Sync;

/// Counters for the two evaluation routes of a smile dual.
#[derive(Debug, Default)]
pub struct DualStats {
    evaluations: AtomicU64,
    agreements: AtomicU64,
}

impl DualStats {
    pub(crate) fn record(&self, agreed: bool) {
        self.evaluations.fetch_add(1, Ordering::Relaxed);
        if agreed {
            self.agreements.fetch_add(1, Ordering::Relaxed);
        }
    }

    /// `(evaluations, agreements)` so far.
    pub fn snapshot(&self) -> (u64, u64) {
        (
            self.evaluations.load(Ordering::Relaxed),
            self.agreements.load(Ordering::Relaxed),
        )
    }
}

/// A pair operation with a display name. Cheap to clone; clones share the
/// evaluator and any dual statistics.
#[derive(Clone)]
pub struct PairOperation<F: Field> {
    name: String,
    eval: Arc<Evaluator<F>>,
    stats: Option<Arc<DualStats>>,
}

impl<F: Field> core::fmt::Debug for PairOperation<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "PairOperation({})", self.name)
    }
}

impl<F: Field> PairOperation<F> {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&Submodule<F>, &FLModule<F>) -> Result<Submodule<F>> + Send + Sync + 'static,
    ) -> Self {
        PairOperation {
            name: name.into(),
            eval: Arc::new(eval),
            stats: None,
        }
    }

    pub(crate) fn with_stats(mut self, stats: Arc<DualStats>) -> Self {
        self.stats = Some(stats);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Route-agreement counters, present on smile duals.
    pub fn dual_stats(&self) -> Option<&DualStats> {
        self.stats.as_deref()
    }

    /// `p(L, M)`. Fails with [`Error::OutsideDomain`] on pairs the
    /// operation is not defined on.
    pub fn eval(&self, l: &Submodule<F>, m: &FLModule<F>) -> Result<Submodule<F>> {
        if l.ambient_dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                found: l.ambient_dim(),
            });
        }
        let out = (self.eval)(l, m)?;
        if out.ambient_dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: m.dim(),
                found: out.ambient_dim(),
            });
        }
        Ok(out)
    }
}

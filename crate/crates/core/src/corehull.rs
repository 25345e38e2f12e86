//! Reductions, cores, expansions and hulls, and the duality between them.

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::LocalAlgebra;
use crate::duality::{dual_sub_quot, smile_dual, MatlisContext};
use crate::field::Field;
use crate::linalg::Subspace;
use crate::module::{FLModule, Submodule};
use crate::pairops::properties::{Property, PropertyReport};
use crate::pairops::PairOperation;
use crate::{Error, Result};

/// The `cl`-reductions of `N` in `M`: all `L ⊆ N` with `N ⊆ cl(L, M)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionSet<F: Field> {
    pub closure: String,
    pub n: Submodule<F>,
    pub reductions: Vec<Submodule<F>>,
}

impl<F: Field> ReductionSet<F> {
    /// The intersection of all reductions.
    pub fn core(&self) -> Result<Submodule<F>> {
        let mut acc = self.n.clone();
        for l in &self.reductions {
            acc = acc.intersect(l)?;
        }
        Ok(acc)
    }
}

fn check_sub<F: Field>(n: &Submodule<F>, m: &FLModule<F>) -> Result<()> {
    if n.ambient_dim() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: n.ambient_dim(),
        });
    }
    Ok(())
}

pub fn reductions<F: Field>(
    cl: &PairOperation<F>,
    n: &Submodule<F>,
    m: &FLModule<F>,
    limit: usize,
) -> Result<ReductionSet<F>> {
    check_sub(n, m)?;
    let mut out = Vec::new();
    for l in m.enumerate_submodules(limit)? {
        if l.is_submodule_of(n) && n.is_submodule_of(&cl.eval(&l, m)?) {
            out.push(l);
        }
    }
    Ok(ReductionSet {
        closure: cl.name().into(),
        n: n.clone(),
        reductions: out,
    })
}

/// `cl-core_M(N)`.
pub fn cl_core<F: Field>(
    cl: &PairOperation<F>,
    n: &Submodule<F>,
    m: &FLModule<F>,
    limit: usize,
) -> Result<Submodule<F>> {
    reductions(cl, n, m, limit)?.core()
}

/// The `int`-expansions of `A` in `B` and the hull candidates
/// `{C : int(C, B) ⊆ A ⊆ C}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSet<F: Field> {
    pub interior: String,
    pub a: Submodule<F>,
    pub expansions: Vec<Submodule<F>>,
    pub candidates: Vec<Submodule<F>>,
}

impl<F: Field> ExpansionSet<F> {
    pub fn sets_agree(&self) -> bool {
        self.expansions == self.candidates
    }

    /// `int-hull^B(A)`, the sum over the candidates.
    pub fn hull(&self) -> Result<Submodule<F>> {
        sum_all(&self.a, &self.candidates)
    }

    /// The sum over the expansions.
    pub fn expansion_sum(&self) -> Result<Submodule<F>> {
        sum_all(&self.a, &self.expansions)
    }
}

fn sum_all<F: Field>(start: &Submodule<F>, parts: &[Submodule<F>]) -> Result<Submodule<F>> {
    let mut acc = start.clone();
    for c in parts {
        acc = acc.sum(c)?;
    }
    Ok(acc)
}

pub fn expansions<F: Field>(
    int: &PairOperation<F>,
    a: &Submodule<F>,
    b: &FLModule<F>,
    limit: usize,
) -> Result<ExpansionSet<F>> {
    check_sub(a, b)?;
    let base = int.eval(a, b)?;
    let mut exp = Vec::new();
    let mut cand = Vec::new();
    for c in b.enumerate_submodules(limit)? {
        if !a.is_submodule_of(&c) {
            continue;
        }
        let v = int.eval(&c, b)?;
        if v == base {
            exp.push(c.clone());
        }
        if v.is_submodule_of(a) {
            cand.push(c);
        }
    }
    Ok(ExpansionSet {
        interior: int.name().into(),
        a: a.clone(),
        expansions: exp,
        candidates: cand,
    })
}

/// `int-hull^B(A)` together with the expansion-based sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullReport<F: Field> {
    pub hull: Submodule<F>,
    pub expansion_sum: Submodule<F>,
    pub sets_agree: bool,
}

pub fn int_hull<F: Field>(
    int: &PairOperation<F>,
    a: &Submodule<F>,
    b: &FLModule<F>,
    limit: usize,
) -> Result<HullReport<F>> {
    let set = expansions(int, a, b, limit)?;
    Ok(HullReport {
        hull: set.hull()?,
        expansion_sum: set.expansion_sum()?,
        sets_agree: set.sets_agree(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityStatus {
    /// `cl` was not certified as a Nakayama closure; nothing is asserted.
    HypothesesUnmet(String),
    Checked,
}

/// Result of comparing the hull of `A ⊆ B` with the core of its dual pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreHullReport<F: Field> {
    pub status: DualityStatus,
    pub hull: Option<Submodule<F>>,
    /// `(B/hull)^∨` inside `B^∨`.
    pub dual_of_hull: Option<Submodule<F>>,
    /// The `cl`-core of `(B/A)^∨` in `B^∨`.
    pub core: Option<Submodule<F>>,
    pub expansions: Vec<Submodule<F>>,
    pub reductions: Vec<Submodule<F>>,
    /// `C ↦ (B/C)^∨` maps the expansions bijectively onto the reductions.
    pub bijection: bool,
    pub order_reversing: bool,
}

impl<F: Field> CoreHullReport<F> {
    /// Whether every asserted identity held; false when hypotheses are unmet.
    pub fn holds(&self) -> bool {
        self.status == DualityStatus::Checked
            && self.dual_of_hull == self.core
            && self.bijection
            && self.order_reversing
    }
}

/// Checks that the `int`-hull of `A` in `B` is dual to the `cl`-core of
/// `(B/A)^∨` in `B^∨`, with `int = cl^∨`, and that dualizing maps
/// expansions onto reductions reversing inclusions. Nothing is asserted
/// unless `certificate` shows `cl` to be a Nakayama closure.
pub fn verify_core_hull_duality<F: Field>(
    cl: &PairOperation<F>,
    a: &Submodule<F>,
    b: &FLModule<F>,
    certificate: &PropertyReport,
    limit: usize,
) -> Result<CoreHullReport<F>> {
    check_sub(a, b)?;
    if certificate.operation != cl.name() || !certificate.passes(Property::NakayamaClosure) {
        let reason = if certificate.operation != cl.name() {
            alloc::format!(
                "certificate is for {}, not {}",
                certificate.operation,
                cl.name()
            )
        } else {
            alloc::format!(
                "{} is not certified as a Nakayama closure: {}",
                cl.name(),
                certificate.verdict(Property::NakayamaClosure)
            )
        };
        return Ok(CoreHullReport {
            status: DualityStatus::HypothesesUnmet(reason),
            hull: None,
            dual_of_hull: None,
            core: None,
            expansions: Vec::new(),
            reductions: Vec::new(),
            bijection: false,
            order_reversing: false,
        });
    }
    let int = smile_dual(cl);
    let exp = expansions(&int, a, b, limit)?;
    let hull = exp.hull()?;
    let bd = b.dual();
    let n = dual_sub_quot(b, a)?;
    let red = reductions(cl, &n, &bd, limit)?;
    let core = red.core()?;
    let dual_of_hull = dual_sub_quot(b, &hull)?;

    let images: Vec<Submodule<F>> = exp
        .expansions
        .iter()
        .map(|c| dual_sub_quot(b, c))
        .collect::<Result<_>>()?;
    let mut sorted = images.clone();
    sorted.sort_by(|x, y| x.space().cmp(y.space()));
    sorted.dedup();
    let mut target = red.reductions.clone();
    target.sort_by(|x, y| x.space().cmp(y.space()));
    let bijection = sorted.len() == images.len() && sorted == target;
    let mut order_reversing = true;
    for (c1, d1) in exp.expansions.iter().zip(&images) {
        for (c2, d2) in exp.expansions.iter().zip(&images) {
            if c1.is_submodule_of(c2) != d2.is_submodule_of(d1) {
                order_reversing = false;
            }
        }
    }
    Ok(CoreHullReport {
        status: DualityStatus::Checked,
        hull: Some(hull),
        dual_of_hull: Some(dual_of_hull),
        core: Some(core),
        expansions: exp.expansions,
        reductions: red.reductions,
        bijection,
        order_reversing,
    })
}

/// Both sides of `hull^E(0 :_E I) = I^n (0 :_E J^{n+1})` and the status of
/// its premise `core(I) = (J^{n+1} : I^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullFormulaReport<F: Field> {
    pub j_is_reduction: bool,
    pub core: Subspace<F>,
    /// `(J^{n+1} :_R I^n)`.
    pub colon: Subspace<F>,
    pub premise_holds: bool,
    pub hull: Submodule<F>,
    /// `I^n (0 :_E J^{n+1})`.
    pub formula: Submodule<F>,
    /// `None` when the premise fails.
    pub conclusion: Option<bool>,
}

fn ideal_power<F: Field>(r: &FLModule<F>, i: &Subspace<F>, n: u32) -> Result<Submodule<F>> {
    let mut acc = r.full();
    for _ in 0..n {
        acc = r.scale(i, &acc)?;
    }
    Ok(acc)
}

pub fn hull_formula_check<F: Field>(
    cl: &PairOperation<F>,
    ring: &LocalAlgebra<F>,
    i: &Subspace<F>,
    j: &Subspace<F>,
    n: u32,
    limit: usize,
) -> Result<HullFormulaReport<F>> {
    let ctx = MatlisContext::new(ring);
    let r = ctx.regular();
    let e = ctx.injective_hull();
    let isub = r.submodule(i.clone())?;
    let jsub = r.submodule(j.clone())?;
    let j_is_reduction =
        jsub.is_submodule_of(&isub) && isub.is_submodule_of(&cl.eval(&jsub, r)?);
    let core = cl_core(cl, &isub, r, limit)?.into_space();
    let jn1 = ideal_power(r, j, n + 1)?;
    let i_n = ideal_power(r, i, n)?;
    let colon = r.colon(&jn1, i_n.space())?.into_space();
    let premise_holds = j_is_reduction && core == colon;
    let hull = int_hull(&smile_dual(cl), &ctx.ann_e(i)?, e, limit)?.hull;
    let formula = e.scale(i_n.space(), &ctx.ann_e(jn1.space())?)?;
    let conclusion = premise_holds.then(|| hull == formula);
    Ok(HullFormulaReport {
        j_is_reduction,
        core,
        colon,
        premise_holds,
        hull,
        formula,
        conclusion,
    })
}

//! Exhaustive property checking over a finite catalog of modules.
//!
//! The catalog for a ring `R` holds `R`, `k`, `R/I` and `I` for the ideals of
//! `R`, `k^2`, and the Matlis duals of all of these, with exact duplicates
//! removed. Every property is tested on every instance that can be built from
//! catalog modules, their submodules, their quotients and the maps between
//! them. Instances where the operation is undefined are skipped.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::LocalAlgebra;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::module::{FLModule, ModuleMap, Submodule};
use crate::pairops::selectors::SubmoduleSelector;
use crate::pairops::PairOperation;
use crate::{Error, Result};

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_dim: usize,
    pub max_submodules: usize,
    /// Largest `Hom` set enumerated element by element.
    pub max_maps: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_dim: 8,
            max_submodules: 20000,
            max_maps: 4096,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Extensive,
    Intensive,
    Idempotent,
    OpSubmodules,
    OpAmbient,
    SurjectionFunctorial,
    Functorial,
    Restrictable,
    SurjectionCofunctorial,
    Cofunctorial,
    Hereditary,
    Absolute,
    Cohereditary,
    Residual,
    NakayamaClosure,
    NakayamaInterior,
    IsoInvariance,
    ClosureOperation,
    InteriorOperation,
}

impl Property {
    pub const ALL: [Property; 19] = [
        Property::Extensive,
        Property::Intensive,
        Property::Idempotent,
        Property::OpSubmodules,
        Property::OpAmbient,
        Property::SurjectionFunctorial,
        Property::Functorial,
        Property::Restrictable,
        Property::SurjectionCofunctorial,
        Property::Cofunctorial,
        Property::Hereditary,
        Property::Absolute,
        Property::Cohereditary,
        Property::Residual,
        Property::NakayamaClosure,
        Property::NakayamaInterior,
        Property::IsoInvariance,
        Property::ClosureOperation,
        Property::InteriorOperation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Extensive => "extensive",
            Property::Intensive => "intensive",
            Property::Idempotent => "idempotent",
            Property::OpSubmodules => "order-preserving on submodules",
            Property::OpAmbient => "order-preserving on ambient modules",
            Property::SurjectionFunctorial => "surjection-functorial",
            Property::Functorial => "functorial",
            Property::Restrictable => "restrictable",
            Property::SurjectionCofunctorial => "surjection-cofunctorial",
            Property::Cofunctorial => "cofunctorial",
            Property::Hereditary => "hereditary",
            Property::Absolute => "absolute",
            Property::Cohereditary => "cohereditary",
            Property::Residual => "residual",
            Property::NakayamaClosure => "Nakayama closure",
            Property::NakayamaInterior => "Nakayama interior",
            Property::IsoInvariance => "isomorphism-invariant",
            Property::ClosureOperation => "closure operation",
            Property::InteriorOperation => "interior operation",
        }
    }

    pub fn from_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == name)
    }

    /// The property of `p^∨` that corresponds to this property of `p`.
    pub fn dual(self) -> Property {
        match self {
            Property::Extensive => Property::Intensive,
            Property::Intensive => Property::Extensive,
            Property::Idempotent => Property::Idempotent,
            Property::OpSubmodules => Property::OpSubmodules,
            Property::OpAmbient => Property::SurjectionCofunctorial,
            Property::SurjectionCofunctorial => Property::OpAmbient,
            Property::SurjectionFunctorial => Property::Restrictable,
            Property::Restrictable => Property::SurjectionFunctorial,
            Property::Functorial => Property::Cofunctorial,
            Property::Cofunctorial => Property::Functorial,
            Property::Hereditary => Property::Cohereditary,
            Property::Cohereditary => Property::Hereditary,
            Property::Residual => Property::Absolute,
            Property::Absolute => Property::Residual,
            Property::NakayamaClosure => Property::NakayamaInterior,
            Property::NakayamaInterior => Property::NakayamaClosure,
            Property::IsoInvariance => Property::IsoInvariance,
            Property::ClosureOperation => Property::InteriorOperation,
            Property::InteriorOperation => Property::ClosureOperation,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A counterexample: labelled modules and submodules, plus what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub entries: Vec<(String, String)>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, v)| alloc::format!("{k} = {v}"))
            .collect();
        write!(f, "{}; {}", parts.join(", "), self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass { instances: usize },
    Fail { witness: Witness },
    Skipped { reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass { .. } => "pass",
            Verdict::Fail { .. } => "FAIL",
            Verdict::Skipped { .. } => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass { instances } => write!(f, "pass ({instances} instances)"),
            Verdict::Fail { witness } => write!(f, "FAIL: {witness}"),
            Verdict::Skipped { reason } => write!(f, "skipped: {reason}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry<F: Field> {
    pub name: String,
    pub module: FLModule<F>,
    pub submodules: Vec<Submodule<F>>,
    /// Whether `module` is `R` with its standard coordinates.
    pub regular: bool,
}

/// The modules a property check ranges over.
#[derive(Clone, Debug)]
pub struct Catalog<F: Field> {
    ring: LocalAlgebra<F>,
    bounds: Bounds,
    entries: Vec<CatalogEntry<F>>,
    omitted: Vec<String>,
}

impl<F: Field> Catalog<F> {
    pub fn new(ring: &LocalAlgebra<F>, bounds: Bounds) -> Result<Self> {
        ring.field().order().ok_or(Error::InfiniteField)?;
        let r = FLModule::regular(ring);
        let ideals = r.enumerate_submodules(bounds.max_submodules)?;
        let mut base: Vec<(String, FLModule<F>, bool)> = Vec::new();
        base.push(("R".into(), r.clone(), true));
        base.push(("k".into(), FLModule::residue_field(ring), false));
        for i in &ideals {
            if !i.is_zero() && !i.space().is_full() {
                let name = alloc::format!("R/{}", format_ideal(ring, i.space()));
                base.push((name, r.quotient(i)?.module, false));
            }
        }
        for i in &ideals {
            if !i.is_zero() {
                base.push((format_ideal(ring, i.space()), r.restrict(i)?.0, false));
            }
        }
        let k = FLModule::residue_field(ring);
        base.push(("k^2".into(), k.direct_sum(&k)?, false));
        let mut all = base.clone();
        for (name, m, _) in &base {
            let dual_name = if name == "R" {
                "E".to_string()
            } else {
                alloc::format!("{name}^v")
            };
            all.push((dual_name, m.dual(), false));
        }
        let mut kept: Vec<(String, FLModule<F>, bool)> = Vec::new();
        for (name, m, regular) in all {
            if m.dim() > bounds.max_dim || kept.iter().any(|(_, k, _)| same_module(k, &m)) {
                continue;
            }
            kept.push((name, m, regular));
        }
        Self::from_modules(ring, kept, bounds)
    }

    /// A catalog of the given modules, in the given order.
    pub fn from_modules(
        ring: &LocalAlgebra<F>,
        modules: Vec<(String, FLModule<F>, bool)>,
        bounds: Bounds,
    ) -> Result<Self> {
        let mut entries = Vec::new();
        let mut omitted = Vec::new();
        for (name, module, regular) in modules {
            module.same_ring(&FLModule::regular(ring))?;
            match module.enumerate_submodules(bounds.max_submodules) {
                Ok(submodules) => entries.push(CatalogEntry {
                    name,
                    module,
                    submodules,
                    regular,
                }),
                Err(Error::LimitExceeded { .. }) => omitted.push(name),
                Err(e) => return Err(e),
            }
        }
        Ok(Catalog {
            ring: ring.clone(),
            bounds,
            entries,
            omitted,
        })
    }

    pub fn ring(&self) -> &LocalAlgebra<F> {
        &self.ring
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn entries(&self) -> &[CatalogEntry<F>] {
        &self.entries
    }

    /// Modules left out for exceeding the submodule bound.
    pub fn omitted(&self) -> &[String] {
        &self.omitted
    }

    pub fn pair_count(&self) -> usize {
        self.entries.iter().map(|e| e.submodules.len()).sum()
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }

    /// Human-readable form of a submodule of entry `i`.
    pub fn describe(&self, i: usize, n: &Submodule<F>) -> String {
        let e = &self.entries[i];
        if n.is_zero() {
            "0".into()
        } else if n.space().is_full() {
            e.name.clone()
        } else if e.regular {
            format_ideal(&self.ring, n.space())
        } else {
            format_span(n.space())
        }
    }

    pub fn scope(&self) -> String {
        let mut s = alloc::format!(
            "{} modules of dimension <= {} ({} pairs)",
            self.entries.len(),
            self.bounds.max_dim,
            self.pair_count()
        );
        if !self.omitted.is_empty() {
            s.push_str(&alloc::format!(
                "; omitted for exceeding {} submodules: {}",
                self.bounds.max_submodules,
                self.omitted.join(", ")
            ));
        }
        s
    }
}

fn same_module<F: Field>(a: &FLModule<F>, b: &FLModule<F>) -> bool {
    a.dim() == b.dim() && a.actions() == b.actions()
}

/// `0`, `m`, `R`, or the minimal generators of an ideal, as `(x, y)`.
pub fn format_ideal<F: Field>(ring: &LocalAlgebra<F>, ideal: &Subspace<F>) -> String {
    if ideal.is_zero() {
        return "0".into();
    }
    if ideal.is_full() {
        return "R".into();
    }
    if ideal == ring.maximal_ideal() {
        return "m".into();
    }
    let r = FLModule::regular(ring);
    let gens = match r.submodule(ideal.clone()).and_then(|i| r.restrict(&i)) {
        Ok((sub, inclusion)) => sub
            .minimal_generators()
            .iter()
            .map(|g| ring.format_coords(&inclusion.apply(g)))
            .collect::<Vec<_>>(),
        Err(_) => return format_span(ideal),
    };
    alloc::format!("({})", gens.join(", "))
}

/// `span{[1 0], [0 1]}`.
pub fn format_span<F: Field>(s: &Subspace<F>) -> String {
    let f = s.field();
    let rows: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| {
            let entries: Vec<String> = v.iter().map(|c| f.format(c)).collect();
            alloc::format!("[{}]", entries.join(" "))
        })
        .collect();
    alloc::format!("span{{{}}}", rows.join(", "))
}

fn format_matrix<F: Field>(m: &Matrix<F>) -> String {
    let f = m.field();
    let rows: Vec<String> = m
        .row_vectors()
        .iter()
        .map(|v| {
            let entries: Vec<String> = v.iter().map(|c| f.format(c)).collect();
            alloc::format!("[{}]", entries.join(" "))
        })
        .collect();
    alloc::format!("[{}]", rows.join(", "))
}

/// Every element of `Hom_R(source, target)`, or `None` past `limit`.
pub fn all_maps<F: Field>(
    source: &FLModule<F>,
    target: &FLModule<F>,
    limit: usize,
) -> Result<Option<Vec<ModuleMap<F>>>> {
    let f = source.field();
    let scalars = f.elements().ok_or(Error::InfiniteField)?;
    let basis = source.hom(target)?;
    let mut count: usize = 1;
    for _ in 0..basis.len() {
        count = count.saturating_mul(scalars.len());
        if count > limit {
            return Ok(None);
        }
    }
    let mut out = Vec::with_capacity(count);
    let mut idx = alloc::vec![0usize; basis.len()];
    loop {
        let mut m = Matrix::zeros(f.clone(), target.dim(), source.dim());
        for (b, &i) in basis.iter().zip(&idx) {
            if i != 0 {
                m = m.add(&b.matrix().scale(&scalars[i]))?;
            }
        }
        out.push(ModuleMap::new(source, target, m)?);
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(Some(out));
            }
            idx[k] += 1;
            if idx[k] < scalars.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

type MemoKey<F> = (usize, Vec<<F as Field>::Elem>, Subspace<F>);

struct Checker<'a, F: Field> {
    p: &'a PairOperation<F>,
    cat: &'a Catalog<F>,
    memo: BTreeMap<MemoKey<F>, Option<Submodule<F>>>,
}

fn module_key<F: Field>(m: &FLModule<F>) -> (usize, Vec<F::Elem>) {
    let mut data = Vec::new();
    for a in m.actions() {
        data.extend_from_slice(a.data());
    }
    (m.dim(), data)
}

fn fail(entries: Vec<(&str, String)>, detail: String) -> Verdict {
    Verdict::Fail {
        witness: Witness {
            entries: entries
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            detail,
        },
    }
}

macro_rules! ev_or_skip {
    ($self:ident, $l:expr, $m:expr) => {
        match $self.ev($l, $m)? {
            Some(v) => v,
            None => continue,
        }
    };
}

impl<'a, F: Field> Checker<'a, F> {
    fn ev(&mut self, l: &Submodule<F>, m: &FLModule<F>) -> Result<Option<Submodule<F>>> {
        let (dim, data) = module_key(m);
        let key = (dim, data, l.space().clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let v = match self.p.eval(l, m) {
            Ok(v) => Some(v),
            Err(Error::OutsideDomain(_)) => None,
            Err(e) => return Err(e),
        };
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn name(&self, i: usize) -> String {
        self.cat.entries[i].name.clone()
    }

    fn desc(&self, i: usize, n: &Submodule<F>) -> String {
        self.cat.describe(i, n)
    }

    fn quotient_name(&self, i: usize, u: &Submodule<F>) -> String {
        if u.is_zero() {
            return self.name(i);
        }
        let d = self.desc(i, u);
        if d.starts_with('(') || d == "m" {
            alloc::format!("{}/{}", self.name(i), d)
        } else {
            alloc::format!("{}/({})", self.name(i), d)
        }
    }

    fn extensive(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for l in &e.submodules {
                let v = ev_or_skip!(self, l, &e.module);
                if !l.is_submodule_of(&v) {
                    return Ok(fail(
                        alloc::vec![("M", self.name(i)), ("L", self.desc(i, l))],
                        alloc::format!("p(L, M) = {} does not contain L", self.desc(i, &v)),
                    ));
                }
                n += 1;
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn intensive(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for l in &e.submodules {
                let v = ev_or_skip!(self, l, &e.module);
                if !v.is_submodule_of(l) {
                    return Ok(fail(
                        alloc::vec![("M", self.name(i)), ("L", self.desc(i, l))],
                        alloc::format!("p(L, M) = {} is not inside L", self.desc(i, &v)),
                    ));
                }
                n += 1;
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn idempotent(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for l in &e.submodules {
                let v = ev_or_skip!(self, l, &e.module);
                let w = ev_or_skip!(self, &v, &e.module);
                if w != v {
                    return Ok(fail(
                        alloc::vec![("M", self.name(i)), ("L", self.desc(i, l))],
                        alloc::format!(
                            "p(L, M) = {} but p(p(L, M), M) = {}",
                            self.desc(i, &v),
                            self.desc(i, &w)
                        ),
                    ));
                }
                n += 1;
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn op_submodules(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for l in &e.submodules {
                for big in &e.submodules {
                    if !l.is_submodule_of(big) {
                        continue;
                    }
                    let a = ev_or_skip!(self, l, &e.module);
                    let b = ev_or_skip!(self, big, &e.module);
                    if !a.is_submodule_of(&b) {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("L", self.desc(i, l)),
                                ("N", self.desc(i, big)),
                            ],
                            alloc::format!(
                                "p(L, M) = {} is not inside p(N, M) = {}",
                                self.desc(i, &a),
                                self.desc(i, &b)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn op_ambient(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for sub in &e.submodules {
                let (nmod, inc) = e.module.restrict(sub)?;
                for l in e.submodules.iter().filter(|l| l.is_submodule_of(sub)) {
                    let inner = ev_or_skip!(self, &inc.preimage(l)?, &nmod);
                    let outer = ev_or_skip!(self, l, &e.module);
                    let pushed = inc.image(&inner)?;
                    if !pushed.is_submodule_of(&outer) {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("N", self.desc(i, sub)),
                                ("L", self.desc(i, l)),
                            ],
                            alloc::format!(
                                "p(L, N) = {} is not inside p(L, M) = {}",
                                self.desc(i, &pushed),
                                self.desc(i, &outer)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn surjection_functorial(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for u in &e.submodules {
                let q = e.module.quotient(u)?;
                for l in &e.submodules {
                    let a = ev_or_skip!(self, l, &e.module);
                    let b = ev_or_skip!(self, &q.projection.image(l)?, &q.module);
                    let pa = q.projection.image(&a)?;
                    if !pa.is_submodule_of(&b) {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("U", self.desc(i, u)),
                                ("L", self.desc(i, l)),
                            ],
                            alloc::format!(
                                "in M' = {}: pi(p(L, M)) = {} is not inside p(pi(L), M') = {}",
                                self.quotient_name(i, u),
                                format_span(pa.space()),
                                format_span(b.space())
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn surjection_cofunctorial(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for u in &e.submodules {
                let q = e.module.quotient(u)?;
                for l in e.submodules.iter().filter(|l| u.is_submodule_of(l)) {
                    let a = ev_or_skip!(self, l, &e.module);
                    let b = ev_or_skip!(self, &q.projection.image(l)?, &q.module);
                    let back = q.projection.preimage(&b)?;
                    if !a.is_submodule_of(&back) {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("U", self.desc(i, u)),
                                ("L", self.desc(i, l)),
                            ],
                            alloc::format!(
                                "in M' = {}: p(L, M) = {} is not inside pi^-1(p(L/U, M')) = {}",
                                self.quotient_name(i, u),
                                self.desc(i, &a),
                                self.desc(i, &back)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn maps(&self, i: usize, j: usize) -> Result<Option<Vec<ModuleMap<F>>>> {
        all_maps(
            &self.cat.entries[i].module,
            &self.cat.entries[j].module,
            self.cat.bounds.max_maps,
        )
    }

    fn too_many_maps(&self, i: usize, j: usize) -> Verdict {
        Verdict::Skipped {
            reason: alloc::format!(
                "Hom({}, {}) has more than {} elements",
                self.name(i),
                self.name(j),
                self.cat.bounds.max_maps
            ),
        }
    }

    fn functorial(&mut self) -> Result<Verdict> {
        let mut n = 0;
        let count = self.cat.entries.len();
        for i in 0..count {
            for j in 0..count {
                let Some(maps) = self.maps(i, j)? else {
                    return Ok(self.too_many_maps(i, j));
                };
                let (src, tgt) = (&self.cat.entries[i], &self.cat.entries[j]);
                for g in &maps {
                    for l in &src.submodules {
                        let a = ev_or_skip!(self, l, &src.module);
                        let gl = g.image(l)?;
                        let b = ev_or_skip!(self, &gl, &tgt.module);
                        let ga = g.image(&a)?;
                        if !ga.is_submodule_of(&b) {
                            return Ok(fail(
                                alloc::vec![
                                    ("M", self.name(i)),
                                    ("M'", self.name(j)),
                                    ("L", self.desc(i, l)),
                                ],
                                alloc::format!(
                                    "g = {}: g(p(L, M)) = {} is not inside p(g(L), M') = {}",
                                    format_matrix(g.matrix()),
                                    self.desc(j, &ga),
                                    self.desc(j, &b)
                                ),
                            ));
                        }
                        n += 1;
                    }
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn cofunctorial(&mut self) -> Result<Verdict> {
        let mut n = 0;
        let count = self.cat.entries.len();
        for i in 0..count {
            for j in 0..count {
                let Some(maps) = self.maps(i, j)? else {
                    return Ok(self.too_many_maps(i, j));
                };
                let (src, tgt) = (&self.cat.entries[i], &self.cat.entries[j]);
                for g in &maps {
                    for l in &tgt.submodules {
                        let pre = g.preimage(l)?;
                        let a = ev_or_skip!(self, &pre, &src.module);
                        let b = ev_or_skip!(self, l, &tgt.module);
                        let back = g.preimage(&b)?;
                        if !a.is_submodule_of(&back) {
                            return Ok(fail(
                                alloc::vec![
                                    ("M", self.name(i)),
                                    ("M'", self.name(j)),
                                    ("L'", self.desc(j, l)),
                                ],
                                alloc::format!(
                                    "g = {}: p(g^-1(L'), M) = {} is not inside g^-1(p(L', M')) = {}",
                                    format_matrix(g.matrix()),
                                    self.desc(i, &a),
                                    self.desc(i, &back)
                                ),
                            ));
                        }
                        n += 1;
                    }
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn restrictable(&mut self) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for k in &e.submodules {
                let (kmod, inc) = e.module.restrict(k)?;
                for l in &e.submodules {
                    let lk = inc.preimage(&l.intersect(k)?)?;
                    let inner = ev_or_skip!(self, &lk, &kmod);
                    let outer = ev_or_skip!(self, l, &e.module);
                    let pushed = inc.image(&inner)?;
                    if !pushed.is_submodule_of(&outer) {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("K", self.desc(i, k)),
                                ("L", self.desc(i, l)),
                            ],
                            alloc::format!(
                                "p(L ∩ K, K) = {} is not inside p(L, M) = {}",
                                self.desc(i, &pushed),
                                self.desc(i, &outer)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    /// `hereditary` when `absolute` is false, `absolute` otherwise.
    fn restriction_law(&mut self, absolute: bool) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for sub in &e.submodules {
                let (nmod, inc) = e.module.restrict(sub)?;
                for l in e.submodules.iter().filter(|l| l.is_submodule_of(sub)) {
                    let inner = ev_or_skip!(self, &inc.preimage(l)?, &nmod);
                    let outer = ev_or_skip!(self, l, &e.module);
                    let pushed = inc.image(&inner)?;
                    let expected = if absolute {
                        outer.clone()
                    } else {
                        outer.intersect(sub)?
                    };
                    if pushed != expected {
                        let rhs = if absolute { "p(L, M)" } else { "p(L, M) ∩ N" };
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("N", self.desc(i, sub)),
                                ("L", self.desc(i, l)),
                            ],
                            alloc::format!(
                                "p(L, N) = {} but {} = {}",
                                self.desc(i, &pushed),
                                rhs,
                                self.desc(i, &expected)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    /// `cohereditary` when `residual` is false, `residual` otherwise.
    fn quotient_law(&mut self, residual: bool) -> Result<Verdict> {
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for l in &e.submodules {
                let q = e.module.quotient(l)?;
                for big in e.submodules.iter().filter(|b| l.is_submodule_of(b)) {
                    let nq = q.projection.image(big)?;
                    let inner = ev_or_skip!(self, &nq, &q.module);
                    let outer = ev_or_skip!(self, big, &e.module);
                    let back = q.projection.preimage(&inner)?;
                    let expected = if residual {
                        outer.clone()
                    } else {
                        outer.sum(l)?
                    };
                    if back != expected {
                        let lhs = if residual { "p(N, M)" } else { "p(N, M) + L" };
                        let nq_desc = if nq.is_zero() {
                            "0".to_string()
                        } else {
                            format_span(nq.space())
                        };
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("L", self.desc(i, l)),
                                ("N", self.desc(i, big)),
                            ],
                            alloc::format!(
                                "quotient pair (N/L, M/L) = ({}, {}): {} = {} but pi^-1(p(N/L, M/L)) = {}",
                                nq_desc,
                                self.quotient_name(i, l),
                                lhs,
                                self.desc(i, &expected),
                                self.desc(i, &back)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn nakayama_closure(&mut self, closure: &Verdict) -> Result<Verdict> {
        match closure {
            Verdict::Pass { .. } => {}
            Verdict::Fail { witness } => {
                return Ok(Verdict::Fail {
                    witness: Witness {
                        entries: witness.entries.clone(),
                        detail: alloc::format!("not a closure operation: {}", witness.detail),
                    },
                })
            }
            Verdict::Skipped { reason } => {
                return Ok(Verdict::Skipped {
                    reason: reason.clone(),
                })
            }
        }
        let max = self.cat.ring.maximal_ideal().clone();
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for big in &e.submodules {
                let mn = e.module.scale(&max, big)?;
                for l in e.submodules.iter().filter(|l| l.is_submodule_of(big)) {
                    let t = ev_or_skip!(self, &l.sum(&mn)?, &e.module);
                    if !big.is_submodule_of(&t) {
                        continue;
                    }
                    let a = ev_or_skip!(self, l, &e.module);
                    let b = ev_or_skip!(self, big, &e.module);
                    if a != b {
                        return Ok(fail(
                            alloc::vec![
                                ("M", self.name(i)),
                                ("L", self.desc(i, l)),
                                ("N", self.desc(i, big)),
                            ],
                            alloc::format!(
                                "N ⊆ p(L + mN, M) = {} but p(L, M) = {} differs from p(N, M) = {}",
                                self.desc(i, &t),
                                self.desc(i, &a),
                                self.desc(i, &b)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn nakayama_interior(&mut self, interior: &Verdict) -> Result<Verdict> {
        match interior {
            Verdict::Pass { .. } => {}
            Verdict::Fail { witness } => {
                return Ok(Verdict::Fail {
                    witness: Witness {
                        entries: witness.entries.clone(),
                        detail: alloc::format!("not an interior operation: {}", witness.detail),
                    },
                })
            }
            Verdict::Skipped { reason } => {
                return Ok(Verdict::Skipped {
                    reason: reason.clone(),
                })
            }
        }
        let max = self.cat.ring.maximal_ideal().clone();
        let mut n = 0;
        for (i, e) in self.cat.entries.iter().enumerate() {
            for a in &e.submodules {
                let colon = e.module.colon(a, &max)?;
                for c in e.submodules.iter().filter(|c| a.is_submodule_of(c)) {
                    let ac = c.intersect(&colon)?;
                    let t = ev_or_skip!(self, &ac, &e.module);
                    if !t.is_submodule_of(a) {
                        continue;
                    }
                    let pc = ev_or_skip!(self, c, &e.module);
                    if !pc.is_submodule_of(a) {
                        return Ok(fail(
                            alloc::vec![
                                ("B", self.name(i)),
                                ("A", self.desc(i, a)),
                                ("C", self.desc(i, c)),
                            ],
                            alloc::format!(
                                "p((A :_C m), B) = {} lies in A but p(C, B) = {} does not",
                                self.desc(i, &t),
                                self.desc(i, &pc)
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }

    fn iso_invariance(&mut self) -> Result<Verdict> {
        let mut n = 0;
        let ring = self.cat.ring.clone();
        for (i, e) in self.cat.entries.iter().enumerate() {
            let Some(endos) = all_maps(&e.module, &e.module, self.cat.bounds.max_maps)? else {
                return Ok(self.too_many_maps(i, i));
            };
            let mut isos: Vec<(ModuleMap<F>, FLModule<F>)> = endos
                .into_iter()
                .filter(|g| g.is_isomorphism())
                .map(|g| (g, e.module.clone()))
                .collect();
            if e.module.dim() >= 2 {
                let f = e.module.field();
                let d = e.module.dim();
                let mut t = Matrix::identity(f.clone(), d);
                for r in 0..d {
                    for c in r + 1..d {
                        t.set(r, c, f.one());
                    }
                }
                let tinv = t.inverse()?;
                let actions = e
                    .module
                    .actions()
                    .iter()
                    .map(|a| t.mul(a)?.mul(&tinv))
                    .collect::<Result<Vec<_>>>()?;
                let moved = FLModule::new(&ring, actions)?;
                isos.push((ModuleMap::new(&e.module, &moved, t)?, moved));
            }
            for (phi, target) in &isos {
                for l in &e.submodules {
                    let a = ev_or_skip!(self, l, &e.module);
                    let b = ev_or_skip!(self, &phi.image(l)?, target);
                    let pa = phi.image(&a)?;
                    if pa != b {
                        return Ok(fail(
                            alloc::vec![("M", self.name(i)), ("L", self.desc(i, l))],
                            alloc::format!(
                                "phi = {}: phi(p(L, M)) = {} but p(phi(L), M') = {}",
                                format_matrix(phi.matrix()),
                                format_span(pa.space()),
                                format_span(b.space())
                            ),
                        ));
                    }
                    n += 1;
                }
            }
        }
        Ok(Verdict::Pass { instances: n })
    }
}

fn conjunction(parts: &[&Verdict]) -> Verdict {
    if let Some(Verdict::Fail { witness }) = parts.iter().find(|v| v.is_fail()) {
        return Verdict::Fail {
            witness: witness.clone(),
        };
    }
    if let Some(Verdict::Skipped { reason }) =
        parts.iter().find(|v| matches!(v, Verdict::Skipped { .. }))
    {
        return Verdict::Skipped {
            reason: reason.clone(),
        };
    }
    let instances = parts
        .iter()
        .map(|v| match v {
            Verdict::Pass { instances } => *instances,
            _ => 0,
        })
        .sum();
    Verdict::Pass { instances }
}

/// Verdicts for every [`Property`] of one operation on one catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub operation: String,
    pub scope: String,
    pub bounds: Bounds,
    pub verdicts: Vec<(Property, Verdict)>,
}

impl PropertyReport {
    pub fn verdict(&self, p: Property) -> &Verdict {
        &self
            .verdicts
            .iter()
            .find(|(q, _)| *q == p)
            .expect("every property is checked")
            .1
    }

    pub fn passes(&self, p: Property) -> bool {
        self.verdict(p).is_pass()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} on {}", self.operation, self.scope)?;
        let width = Property::ALL.iter().map(|p| p.name().len()).max().unwrap_or(0);
        for (p, v) in &self.verdicts {
            writeln!(f, "  {:width$}  {}", p.name(), v)?;
        }
        Ok(())
    }
}

/// Checks every property of `p` on the standard catalog of `ring`.
pub fn check_properties<F: Field>(
    p: &PairOperation<F>,
    ring: &LocalAlgebra<F>,
    bounds: Bounds,
) -> Result<PropertyReport> {
    check_properties_on(p, &Catalog::new(ring, bounds)?)
}

pub fn check_properties_on<F: Field>(
    p: &PairOperation<F>,
    catalog: &Catalog<F>,
) -> Result<PropertyReport> {
    let mut c = Checker {
        p,
        cat: catalog,
        memo: BTreeMap::new(),
    };
    let extensive = c.extensive()?;
    let intensive = c.intensive()?;
    let idempotent = c.idempotent()?;
    let op_sub = c.op_submodules()?;
    let op_amb = c.op_ambient()?;
    let sf = c.surjection_functorial()?;
    let func = c.functorial()?;
    let restrictable = c.restrictable()?;
    let scf = c.surjection_cofunctorial()?;
    let cofunc = c.cofunctorial()?;
    let hereditary = c.restriction_law(false)?;
    let absolute = c.restriction_law(true)?;
    let cohereditary = c.quotient_law(false)?;
    let residual = c.quotient_law(true)?;
    let closure = conjunction(&[&extensive, &op_sub, &idempotent]);
    let interior = conjunction(&[&intensive, &op_sub, &idempotent]);
    let nak_cl = c.nakayama_closure(&closure)?;
    let nak_int = c.nakayama_interior(&interior)?;
    let iso = c.iso_invariance()?;
    let verdicts = alloc::vec![
        (Property::Extensive, extensive),
        (Property::Intensive, intensive),
        (Property::Idempotent, idempotent),
        (Property::OpSubmodules, op_sub),
        (Property::OpAmbient, op_amb),
        (Property::SurjectionFunctorial, sf),
        (Property::Functorial, func),
        (Property::Restrictable, restrictable),
        (Property::SurjectionCofunctorial, scf),
        (Property::Cofunctorial, cofunc),
        (Property::Hereditary, hereditary),
        (Property::Absolute, absolute),
        (Property::Cohereditary, cohereditary),
        (Property::Residual, residual),
        (Property::NakayamaClosure, nak_cl),
        (Property::NakayamaInterior, nak_int),
        (Property::IsoInvariance, iso),
        (Property::ClosureOperation, closure),
        (Property::InteriorOperation, interior),
    ];
    Ok(PropertyReport {
        operation: p.name().to_string(),
        scope: catalog.scope(),
        bounds: catalog.bounds(),
        verdicts,
    })
}

/// Properties of submodule selectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SelectorProperty {
    OrderPreserving,
    SurjectionFunctorial,
    Functorial,
    Idempotent,
    CoIdempotent,
}

impl SelectorProperty {
    pub const ALL: [SelectorProperty; 5] = [
        SelectorProperty::OrderPreserving,
        SelectorProperty::SurjectionFunctorial,
        SelectorProperty::Functorial,
        SelectorProperty::Idempotent,
        SelectorProperty::CoIdempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SelectorProperty::OrderPreserving => "order-preserving",
            SelectorProperty::SurjectionFunctorial => "surjection-functorial",
            SelectorProperty::Functorial => "functorial",
            SelectorProperty::Idempotent => "idempotent",
            SelectorProperty::CoIdempotent => "co-idempotent",
        }
    }
}

/// Checks the selector properties of `alpha` on `catalog`.
pub fn check_selector_properties<F: Field>(
    alpha: &SubmoduleSelector<F>,
    catalog: &Catalog<F>,
) -> Result<Vec<(SelectorProperty, Verdict)>> {
    let entries = catalog.entries();
    let name = |i: usize| entries[i].name.clone();
    let desc = |i: usize, s: &Submodule<F>| catalog.describe(i, s);
    let mut out = Vec::new();

    let mut order = Verdict::Pass { instances: 0 };
    let mut n = 0;
    'order: for (i, e) in entries.iter().enumerate() {
        let whole = alpha.eval(&e.module)?;
        for l in &e.submodules {
            let (lmod, inc) = e.module.restrict(l)?;
            let inner = inc.image(&alpha.eval(&lmod)?)?;
            if !inner.is_submodule_of(&whole) {
                order = fail(
                    alloc::vec![("M", name(i)), ("L", desc(i, l))],
                    alloc::format!("alpha(L) = {} is not inside alpha(M) = {}", desc(i, &inner), desc(i, &whole)),
                );
                break 'order;
            }
            n += 1;
        }
    }
    if order.is_pass() {
        order = Verdict::Pass { instances: n };
    }
    out.push((SelectorProperty::OrderPreserving, order));

    let mut sf = Verdict::Pass { instances: 0 };
    let mut n = 0;
    'sf: for (i, e) in entries.iter().enumerate() {
        let whole = alpha.eval(&e.module)?;
        for u in &e.submodules {
            let q = e.module.quotient(u)?;
            let image = q.projection.image(&whole)?;
            let target = alpha.eval(&q.module)?;
            if !image.is_submodule_of(&target) {
                sf = fail(
                    alloc::vec![("M", name(i)), ("U", desc(i, u))],
                    alloc::format!(
                        "pi(alpha(M)) = {} is not inside alpha(M/U) = {}",
                        format_span(image.space()),
                        format_span(target.space())
                    ),
                );
                break 'sf;
            }
            n += 1;
        }
    }
    if sf.is_pass() {
        sf = Verdict::Pass { instances: n };
    }
    out.push((SelectorProperty::SurjectionFunctorial, sf));

    let mut func = Verdict::Pass { instances: 0 };
    let mut n = 0;
    'func: for i in 0..entries.len() {
        let whole = alpha.eval(&entries[i].module)?;
        for j in 0..entries.len() {
            let Some(maps) = all_maps(&entries[i].module, &entries[j].module, catalog.bounds().max_maps)? else {
                func = Verdict::Skipped {
                    reason: alloc::format!("Hom({}, {}) is too large", name(i), name(j)),
                };
                break 'func;
            };
            let target = alpha.eval(&entries[j].module)?;
            for g in &maps {
                let image = g.image(&whole)?;
                if !image.is_submodule_of(&target) {
                    func = fail(
                        alloc::vec![("M", name(i)), ("M'", name(j))],
                        alloc::format!(
                            "g = {}: g(alpha(M)) = {} is not inside alpha(M') = {}",
                            format_matrix(g.matrix()),
                            desc(j, &image),
                            desc(j, &target)
                        ),
                    );
                    break 'func;
                }
                n += 1;
            }
        }
    }
    if func.is_pass() {
        func = Verdict::Pass { instances: n };
    }
    out.push((SelectorProperty::Functorial, func));

    let mut idem = Verdict::Pass { instances: 0 };
    let mut coidem = Verdict::Pass { instances: 0 };
    for (i, e) in entries.iter().enumerate() {
        let whole = alpha.eval(&e.module)?;
        let (amod, inc) = e.module.restrict(&whole)?;
        let again = inc.image(&alpha.eval(&amod)?)?;
        if idem.is_pass() && again != whole {
            idem = fail(
                alloc::vec![("M", name(i))],
                alloc::format!("alpha(M) = {} but alpha(alpha(M)) = {}", desc(i, &whole), desc(i, &again)),
            );
        }
        let q = e.module.quotient(&whole)?;
        let rest = alpha.eval(&q.module)?;
        if coidem.is_pass() && !rest.is_zero() {
            coidem = fail(
                alloc::vec![("M", name(i))],
                alloc::format!("alpha(M/alpha(M)) = {} is nonzero", format_span(rest.space())),
            );
        }
    }
    let count = entries.len();
    if idem.is_pass() {
        idem = Verdict::Pass { instances: count };
    }
    if coidem.is_pass() {
        coidem = Verdict::Pass { instances: count };
    }
    out.push((SelectorProperty::Idempotent, idem));
    out.push((SelectorProperty::CoIdempotent, coidem));
    Ok(out)
}

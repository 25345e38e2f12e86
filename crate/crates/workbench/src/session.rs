//! Resolution of workspace names into rings, ideals, modules and
//! operations.

use std::collections::BTreeMap;

use pairops_core::pairops::properties::{format_ideal, Bounds};
use pairops_core::pairops::{
    be, bf, cohereditary_version, custom_table, finitistic, frobenius_closure, gamma,
    hereditary_version, identity, join, meet, module_closure, rho, trace, zero_interior,
};
use pairops_core::{
    build_local_algebra, smile_dual, Field, FLModule, LocalAlgebra, Matrix, PairOperation,
    PolyExpr, PrimeField, Submodule, SubmoduleSelector, Subspace,
};
use serde_json::{json, Value};

use crate::workspace::{
    ErrorCode, Generator, ModuleDecl, ModuleKind, OperationDecl, OperationKind, SelectorSpec,
    SubmoduleSpec, SubsetSpec, TaskDecl, TaskKind, Workspace, WorkspaceError,
};

pub type Ring = LocalAlgebra<PrimeField>;
pub type Module = FLModule<PrimeField>;
pub type Sub = Submodule<PrimeField>;
pub type Op = PairOperation<PrimeField>;

type WResult<T> = Result<T, WorkspaceError>;

/// Modules every ring provides under these names.
pub const BUILTIN_MODULES: [&str; 3] = ["R", "E", "k"];
/// Ideals every ring provides under these names.
pub const BUILTIN_IDEALS: [&str; 3] = ["0", "m", "R"];

/// A module together with its cyclic generator, when it has a canonical one
/// (`R`, `k`, quotients of `R`).
#[derive(Clone, Debug)]
pub struct ModuleInfo {
    pub ring: String,
    pub module: Module,
    pub generator: Option<Vec<u32>>,
    pub regular: bool,
}

pub struct Session<'w> {
    ws: &'w Workspace,
    rings: BTreeMap<String, Ring>,
    ideals: BTreeMap<String, (String, Subspace<PrimeField>)>,
    modules: BTreeMap<String, ModuleInfo>,
}

fn core_err(code: ErrorCode, path: &str, e: pairops_core::Error) -> WorkspaceError {
    WorkspaceError::at(code, path, e.to_string())
}

/// Splits `(a, b, c)` at top-level commas.
fn split_inline(text: &str) -> Option<Vec<&str>> {
    let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].trim());
    if parts.iter().any(|p| p.is_empty()) {
        return None;
    }
    Some(parts)
}

impl<'w> Session<'w> {
    pub fn new(ws: &'w Workspace) -> WResult<Self> {
        let mut s = Session {
            ws,
            rings: BTreeMap::new(),
            ideals: BTreeMap::new(),
            modules: BTreeMap::new(),
        };
        for (i, r) in ws.rings.iter().enumerate() {
            let path = format!("rings[{i}]");
            let p = r.char.unwrap_or(ws.field.char);
            if p == 0 {
                return Err(WorkspaceError::at(
                    ErrorCode::Field,
                    format!("{path}.char"),
                    pairops_core::Error::InfiniteField.to_string(),
                ));
            }
            let field = PrimeField::new(p)
                .map_err(|e| core_err(ErrorCode::Field, &format!("{path}.char"), e))?;
            let mut rels = Vec::new();
            for (j, t) in r.relations.iter().enumerate() {
                rels.push(
                    PolyExpr::parse(field, &r.vars, t).map_err(|e| {
                        core_err(ErrorCode::Polynomial, &format!("{path}.relations[{j}]"), e)
                    })?,
                );
            }
            let vars: Vec<&str> = r.vars.iter().map(|v| v.as_str()).collect();
            let ring = build_local_algebra(field, &vars, &rels, r.nil_bound)
                .map_err(|e| core_err(ErrorCode::Ring, &path, e))?;
            s.rings.insert(r.name.clone(), ring);
        }
        for (i, d) in ws.ideals.iter().enumerate() {
            let path = format!("ideals[{i}]");
            let ring = s.ring(&d.ring, &format!("{path}.ring"))?.clone();
            let mut gens = Vec::new();
            for (j, g) in d.generators.iter().enumerate() {
                gens.push(s.parse_poly(&ring, g, &format!("{path}.generators[{j}]"))?);
            }
            let ideal = ring
                .ideal(&gens)
                .map_err(|e| core_err(ErrorCode::Schema, &path, e))?;
            s.ideals.insert(d.name.clone(), (d.ring.clone(), ideal));
        }
        for (i, d) in ws.modules.iter().enumerate() {
            let info = s.build_module(d, &format!("modules[{i}]"))?;
            s.modules.insert(d.name.clone(), info);
        }
        Ok(s)
    }

    pub fn workspace(&self) -> &Workspace {
        self.ws
    }

    /// Bounds from the workspace, with unset entries at their defaults.
    pub fn bounds(&self) -> Bounds {
        let mut b = Bounds::default();
        if let Some(d) = self.ws.bounds.max_dim {
            b.max_dim = d;
        }
        if let Some(k) = self.ws.bounds.max_submodules {
            b.max_submodules = k;
        }
        b
    }

    pub fn ring_names(&self) -> Vec<String> {
        self.ws.rings.iter().map(|r| r.name.clone()).collect()
    }

    pub fn ring(&self, name: &str, path: &str) -> WResult<&Ring> {
        self.rings.get(name).ok_or_else(|| {
            WorkspaceError::at(
                ErrorCode::Unresolved,
                path,
                format!("undeclared ring {name:?}"),
            )
        })
    }

    fn parse_poly(&self, ring: &Ring, text: &str, path: &str) -> WResult<Vec<u32>> {
        let p = PolyExpr::parse(*ring.field(), ring.vars(), text)
            .map_err(|e| core_err(ErrorCode::Polynomial, path, e))?;
        ring.normal_form(&p)
            .map_err(|e| core_err(ErrorCode::Polynomial, path, e))
    }

    /// `0`, `m`, `R`, a declared ideal of `ring_name`, or inline `(f, g)`.
    pub fn ideal(&self, ring_name: &str, text: &str, path: &str) -> WResult<Subspace<PrimeField>> {
        let ring = self.ring(ring_name, path)?;
        let f = *ring.field();
        match text {
            "0" => return Ok(Subspace::zero(f, ring.dim())),
            "m" => return Ok(ring.maximal_ideal().clone()),
            "R" => return Ok(Subspace::full(f, ring.dim())),
            _ => {}
        }
        if let Some((owner, ideal)) = self.ideals.get(text) {
            if owner != ring_name {
                return Err(WorkspaceError::at(
                    ErrorCode::RingMismatch,
                    path,
                    format!("ideal {text:?} lives in {owner}, not {ring_name}"),
                ));
            }
            return Ok(ideal.clone());
        }
        if text.trim_start().starts_with('(') {
            let parts = split_inline(text).ok_or_else(|| {
                WorkspaceError::at(
                    ErrorCode::Polynomial,
                    path,
                    format!("malformed ideal {text:?}; expected (f, g, ...)"),
                )
            })?;
            let gens = parts
                .iter()
                .map(|p| self.parse_poly(ring, p, path))
                .collect::<WResult<Vec<_>>>()?;
            return ring
                .ideal(&gens)
                .map_err(|e| core_err(ErrorCode::Schema, path, e));
        }
        Err(WorkspaceError::at(
            ErrorCode::Unresolved,
            path,
            format!("undeclared ideal {text:?}"),
        ))
    }

    /// `R`, `E`, `k` or a declared module of `ring_name`.
    pub fn module(&self, ring_name: &str, name: &str, path: &str) -> WResult<ModuleInfo> {
        let ring = self.ring(ring_name, path)?;
        let info = |module: Module, generator: Option<Vec<u32>>, regular: bool| ModuleInfo {
            ring: ring_name.to_string(),
            module,
            generator,
            regular,
        };
        match name {
            "R" => return Ok(info(FLModule::regular(ring), Some(ring.unit_vector()), true)),
            "E" => return Ok(info(FLModule::regular(ring).dual(), None, false)),
            "k" => return Ok(info(FLModule::residue_field(ring), Some(vec![1]), false)),
            _ => {}
        }
        match self.modules.get(name) {
            Some(m) if m.ring == ring_name => Ok(m.clone()),
            Some(m) => Err(WorkspaceError::at(
                ErrorCode::RingMismatch,
                path,
                format!("module {name:?} lives in {}, not {ring_name}", m.ring),
            )),
            None => Err(WorkspaceError::at(
                ErrorCode::Unresolved,
                path,
                format!("undeclared module {name:?}"),
            )),
        }
    }

    fn build_module(&self, d: &ModuleDecl, path: &str) -> WResult<ModuleInfo> {
        let ring = self.ring(&d.ring, &format!("{path}.ring"))?.clone();
        let used: [(&str, bool); 4] = [
            ("ideal", d.ideal.is_some()),
            ("module", d.module.is_some()),
            ("modules", !d.modules.is_empty()),
            ("rank", d.rank.is_some()),
        ];
        let wanted: &[&str] = match d.kind {
            ModuleKind::Quotient | ModuleKind::Ideal => &["ideal"],
            ModuleKind::Dual => &["module"],
            ModuleKind::DirectSum => &["modules"],
            ModuleKind::Free => &["rank"],
            _ => &[],
        };
        for (field, present) in used {
            if present != wanted.contains(&field) {
                let msg = if present {
                    format!("field {field:?} is not used by this module kind")
                } else {
                    format!("this module kind needs field {field:?}")
                };
                return Err(WorkspaceError::at(ErrorCode::Schema, format!("{path}.{field}"), msg));
            }
        }
        let earlier = |name: &str, p: &str| -> WResult<ModuleInfo> {
            if BUILTIN_MODULES.contains(&name) || self.modules.contains_key(name) {
                self.module(&d.ring, name, p)
            } else if self.ws.modules.iter().any(|m| m.name == name) {
                Err(WorkspaceError::at(
                    ErrorCode::Unresolved,
                    p,
                    format!("module {name:?} must be declared before it is used"),
                ))
            } else {
                self.module(&d.ring, name, p)
            }
        };
        let err = |e: pairops_core::Error| core_err(ErrorCode::Schema, path, e);
        let r = FLModule::regular(&ring);
        let out = |module: Module, generator: Option<Vec<u32>>, regular: bool| ModuleInfo {
            ring: d.ring.clone(),
            module,
            generator,
            regular,
        };
        Ok(match d.kind {
            ModuleKind::Regular => out(r, Some(ring.unit_vector()), true),
            ModuleKind::Hull => out(r.dual(), None, false),
            ModuleKind::ResidueField => out(FLModule::residue_field(&ring), Some(vec![1]), false),
            ModuleKind::Quotient => {
                let i = self.ideal(&d.ring, d.ideal.as_deref().unwrap(), &format!("{path}.ideal"))?;
                let q = r.quotient(&r.submodule(i).map_err(err)?).map_err(err)?;
                let g = q.projection.apply(&ring.unit_vector());
                out(q.module, Some(g), false)
            }
            ModuleKind::Ideal => {
                let i = self.ideal(&d.ring, d.ideal.as_deref().unwrap(), &format!("{path}.ideal"))?;
                let (m, _) = r.restrict(&r.submodule(i).map_err(err)?).map_err(err)?;
                out(m, None, false)
            }
            ModuleKind::Dual => {
                let inner = earlier(d.module.as_deref().unwrap(), &format!("{path}.module"))?;
                out(inner.module.dual(), None, false)
            }
            ModuleKind::DirectSum => {
                let mut acc = FLModule::zero(&ring);
                for (j, name) in d.modules.iter().enumerate() {
                    let m = earlier(name, &format!("{path}.modules[{j}]"))?;
                    acc = acc.direct_sum(&m.module).map_err(err)?;
                }
                out(acc, None, false)
            }
            ModuleKind::Free => out(FLModule::free(&ring, d.rank.unwrap()), None, false),
        })
    }

    fn element(&self, info: &ModuleInfo, g: &Generator, path: &str) -> WResult<Vec<u32>> {
        let ring = self.ring(&info.ring, path)?;
        match g {
            Generator::Poly(text) => {
                let gen = info.generator.as_ref().ok_or_else(|| {
                    WorkspaceError::at(
                        ErrorCode::Schema,
                        path,
                        "polynomial generators need a cyclic module (R, k or a quotient); give coordinates",
                    )
                })?;
                let r = self.parse_poly(ring, text, path)?;
                Ok(info.module.act(&r, gen))
            }
            Generator::Coords(v) => {
                let p = ring.field().modulus();
                if v.len() != info.module.dim() || v.iter().any(|&c| c >= p) {
                    return Err(WorkspaceError::at(
                        ErrorCode::Schema,
                        path,
                        format!(
                            "coordinates must be {} entries in 0..{p}",
                            info.module.dim()
                        ),
                    ));
                }
                Ok(v.clone())
            }
        }
    }

    pub fn submodule(&self, info: &ModuleInfo, spec: &SubmoduleSpec, path: &str) -> WResult<Sub> {
        let m = &info.module;
        let err = |e: pairops_core::Error| core_err(ErrorCode::Schema, path, e);
        match spec {
            SubmoduleSpec::Named(name) => match name.as_str() {
                "0" => Ok(m.zero_submodule()),
                "full" => Ok(m.full()),
                "socle" => Ok(m.socle()),
                "radical" => Ok(m.radical()),
                other => {
                    let i = self.ideal(&info.ring, other, path)?;
                    m.scale(&i, &m.full()).map_err(err)
                }
            },
            SubmoduleSpec::Generators(gens) => {
                let vs = gens
                    .iter()
                    .enumerate()
                    .map(|(j, g)| self.element(info, g, &format!("{path}[{j}]")))
                    .collect::<WResult<Vec<_>>>()?;
                m.span(&vs).map_err(err)
            }
        }
    }

    fn subset(&self, info: &ModuleInfo, s: Option<&SubsetSpec>, path: &str) -> WResult<Vec<Vec<u32>>> {
        match s {
            None => Ok(identity_rows(info.module.dim())),
            Some(SubsetSpec::Keyword(k)) if k == "basis" => Ok(identity_rows(info.module.dim())),
            Some(SubsetSpec::Keyword(k)) => Err(WorkspaceError::at(
                ErrorCode::Schema,
                path,
                format!("unknown subset keyword {k:?}; use \"basis\" or a list"),
            )),
            Some(SubsetSpec::Elements(gens)) => gens
                .iter()
                .enumerate()
                .map(|(j, g)| self.element(info, g, &format!("{path}[{j}]")))
                .collect(),
        }
    }

    fn decl(&self, name: &str, path: &str) -> WResult<&OperationDecl> {
        self.ws
            .operations
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| {
                WorkspaceError::at(
                    ErrorCode::Unresolved,
                    path,
                    format!("undeclared operation {name:?}"),
                )
            })
    }

    /// The operation `name` instantiated over `ring_name`.
    pub fn operation(&self, name: &str, ring_name: &str, path: &str) -> WResult<Op> {
        let d = self.decl(name, path)?;
        let at = |field: &str| format!("operation {name:?} params.{field}");
        let prm = &d.params;
        let sub = |n: &str| self.operation(n, ring_name, path);
        let selector = |s: &SelectorSpec| -> WResult<SubmoduleSelector<PrimeField>> {
            match s {
                SelectorSpec::Named(n) => match n.as_str() {
                    "socle" => Ok(SubmoduleSelector::socle()),
                    "radical" => Ok(SubmoduleSelector::radical()),
                    "zero" => Ok(SubmoduleSelector::zero()),
                    "full" => Ok(SubmoduleSelector::full()),
                    _ => Err(WorkspaceError::at(
                        ErrorCode::Schema,
                        at("selector"),
                        format!("unknown selector {n:?}"),
                    )),
                },
                SelectorSpec::AtZero { at_zero } => Ok(SubmoduleSelector::at_zero(&sub(at_zero)?)),
            }
        };
        let op = match d.kind {
            OperationKind::Bf => bf(self.ideal(ring_name, prm.ideal.as_deref().unwrap_or(""), &at("ideal"))?),
            OperationKind::Be => be(self.ideal(ring_name, prm.ideal.as_deref().unwrap_or(""), &at("ideal"))?),
            OperationKind::ModuleClosure | OperationKind::Trace => {
                let info = self.module(ring_name, prm.module.as_deref().unwrap_or(""), &at("module"))?;
                let s = self.subset(&info, prm.subset.as_ref(), &at("subset"))?;
                let built = if d.kind == OperationKind::Trace {
                    trace(s, info.module)
                } else {
                    module_closure(s, info.module)
                };
                built.map_err(|e| core_err(ErrorCode::Schema, &at("subset"), e))?
            }
            OperationKind::Frobenius => frobenius_closure(),
            OperationKind::Rho | OperationKind::Gamma => {
                let s = prm.selector.as_ref().ok_or_else(|| missing(&at("selector")))?;
                let alpha = selector(s)?;
                if d.kind == OperationKind::Rho {
                    rho(&alpha)
                } else {
                    gamma(&alpha)
                }
            }
            OperationKind::Meet | OperationKind::Join => {
                let ops = prm.operations.iter().map(|n| sub(n)).collect::<WResult<Vec<_>>>()?;
                let built = if d.kind == OperationKind::Meet { meet(&ops) } else { join(&ops) };
                built.map_err(|e| core_err(ErrorCode::Schema, &at("operations"), e))?
            }
            OperationKind::Finitistic
            | OperationKind::CohereditaryVersion
            | OperationKind::HereditaryVersion
            | OperationKind::SmileDual => {
                let inner = sub(prm.operation.as_deref().unwrap_or(""))?;
                match d.kind {
                    OperationKind::Finitistic => finitistic(&inner, self.bounds().max_submodules),
                    OperationKind::CohereditaryVersion => cohereditary_version(&inner),
                    OperationKind::HereditaryVersion => hereditary_version(&inner),
                    _ => smile_dual(&inner),
                }
            }
            OperationKind::Identity => identity(),
            OperationKind::ZeroInterior => zero_interior(),
            OperationKind::CustomTable => {
                let mut rules = Vec::new();
                for (j, rule) in prm.rules.iter().enumerate() {
                    rules.push((
                        self.ideal(ring_name, &rule.bound, &at(&format!("rules[{j}].bound")))?,
                        self.ideal(ring_name, &rule.value, &at(&format!("rules[{j}].value")))?,
                    ));
                }
                let default = self.ideal(ring_name, prm.default.as_deref().unwrap_or(""), &at("default"))?;
                custom_table(rules, default)
            }
        };
        Ok(op.renamed(d.name.clone()))
    }

    /// Ring-independent checks of an operation's parameters.
    pub fn check_operation_params(&self, d: &OperationDecl, path: &str) -> WResult<()> {
        let p = &d.params;
        let present: [(&str, bool); 8] = [
            ("ideal", p.ideal.is_some()),
            ("module", p.module.is_some()),
            ("subset", p.subset.is_some()),
            ("selector", p.selector.is_some()),
            ("operation", p.operation.is_some()),
            ("operations", !p.operations.is_empty()),
            ("rules", !p.rules.is_empty()),
            ("default", p.default.is_some()),
        ];
        let (required, optional): (&[&str], &[&str]) = match d.kind {
            OperationKind::Bf | OperationKind::Be => (&["ideal"], &[]),
            OperationKind::ModuleClosure | OperationKind::Trace => (&["module"], &["subset"]),
            OperationKind::Rho | OperationKind::Gamma => (&["selector"], &[]),
            OperationKind::Meet | OperationKind::Join => (&["operations"], &[]),
            OperationKind::Finitistic
            | OperationKind::CohereditaryVersion
            | OperationKind::HereditaryVersion
            | OperationKind::SmileDual => (&["operation"], &[]),
            OperationKind::CustomTable => (&["default"], &["rules"]),
            OperationKind::Frobenius | OperationKind::Identity | OperationKind::ZeroInterior => {
                (&[], &[])
            }
        };
        for (field, here) in present {
            if here && !required.contains(&field) && !optional.contains(&field) {
                return Err(WorkspaceError::at(
                    ErrorCode::Schema,
                    format!("{path}.params.{field}"),
                    "parameter is not used by this operation kind",
                ));
            }
            if !here && required.contains(&field) {
                return Err(missing(&format!("{path}.params.{field}")));
            }
        }
        let ideal_name = |t: &str, field: &str| -> WResult<()> {
            if BUILTIN_IDEALS.contains(&t) || t.trim_start().starts_with('(') || self.ideals.contains_key(t) {
                Ok(())
            } else {
                Err(WorkspaceError::at(
                    ErrorCode::Unresolved,
                    format!("{path}.params.{field}"),
                    format!("undeclared ideal {t:?}"),
                ))
            }
        };
        if let Some(t) = &p.ideal {
            ideal_name(t, "ideal")?;
        }
        if let Some(t) = &p.default {
            ideal_name(t, "default")?;
        }
        for (j, r) in p.rules.iter().enumerate() {
            ideal_name(&r.bound, &format!("rules[{j}].bound"))?;
            ideal_name(&r.value, &format!("rules[{j}].value"))?;
        }
        if let Some(m) = &p.module {
            if !BUILTIN_MODULES.contains(&m.as_str()) && !self.modules.contains_key(m) {
                return Err(WorkspaceError::at(
                    ErrorCode::Unresolved,
                    format!("{path}.params.module"),
                    format!("undeclared module {m:?}"),
                ));
            }
        }
        if let Some(SelectorSpec::Named(n)) = &p.selector {
            if !["socle", "radical", "zero", "full"].contains(&n.as_str()) {
                return Err(WorkspaceError::at(
                    ErrorCode::Schema,
                    format!("{path}.params.selector"),
                    format!("unknown selector {n:?}"),
                ));
            }
        }
        Ok(())
    }

    /// Checks a task's fields and resolves everything it refers to.
    pub fn check_task(&self, t: &TaskDecl, path: &str) -> WResult<()> {
        let present: [(&str, bool); 11] = [
            ("ring", t.ring.is_some()),
            ("rings", !t.rings.is_empty()),
            ("operation", t.operation.is_some()),
            ("operations", !t.operations.is_empty()),
            ("closure", t.closure.is_some()),
            ("module", t.module.is_some()),
            ("submodule", t.submodule.is_some()),
            ("mode", t.mode.is_some()),
            ("i", t.i.is_some()),
            ("j", t.j.is_some()),
            ("n", t.n.is_some()),
        ];
        let (required, optional): (&[&str], &[&str]) = match t.kind {
            TaskKind::Eval | TaskKind::Core => (&["operation", "ring", "submodule"], &["module"]),
            TaskKind::Props | TaskKind::DualCheck => (&["operation", "ring"], &[]),
            TaskKind::Hull => (&["ring", "submodule"], &["operation", "closure", "module"]),
            TaskKind::TestIdeal => (&["operation", "ring"], &["mode"]),
            TaskKind::DualityTable => (&["operations", "rings"], &[]),
            TaskKind::Fixtures => (&[], &["rings"]),
            TaskKind::HullFormula => (&["closure", "ring", "i", "j"], &["n"]),
        };
        for (field, here) in present {
            if here && !required.contains(&field) && !optional.contains(&field) {
                return Err(WorkspaceError::at(
                    ErrorCode::Schema,
                    format!("{path}.{field}"),
                    format!("field is not used by {} tasks", t.kind.as_str()),
                ));
            }
            if !here && required.contains(&field) {
                return Err(missing(&format!("{path}.{field}")));
            }
        }
        if t.kind == TaskKind::Hull && t.operation.is_some() == t.closure.is_some() {
            return Err(WorkspaceError::at(
                ErrorCode::Schema,
                path,
                "hull tasks need exactly one of \"operation\" (an interior) or \"closure\"",
            ));
        }
        let ring_path = format!("{path}.ring");
        match t.kind {
            TaskKind::DualityTable | TaskKind::Fixtures => {
                for (j, r) in t.rings.iter().enumerate() {
                    self.ring(r, &format!("{path}.rings[{j}]"))?;
                }
                for (j, o) in t.operations.iter().enumerate() {
                    self.decl(o, &format!("{path}.operations[{j}]"))?;
                }
            }
            _ => {
                let ring = t.ring.as_deref().unwrap();
                self.ring(ring, &ring_path)?;
                for name in t.operation.iter().chain(t.closure.iter()) {
                    self.operation(name, ring, &format!("{path}.operation"))?;
                }
                if let Some(spec) = &t.submodule {
                    let default = if t.kind == TaskKind::Hull { "E" } else { "R" };
                    let info = self.module(
                        ring,
                        t.module.as_deref().unwrap_or(default),
                        &format!("{path}.module"),
                    )?;
                    self.submodule(&info, spec, &format!("{path}.submodule"))?;
                }
                for (field, v) in [("i", &t.i), ("j", &t.j)] {
                    if let Some(text) = v {
                        self.ideal(ring, text, &format!("{path}.{field}"))?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn missing(path: &str) -> WorkspaceError {
    WorkspaceError::at(ErrorCode::Schema, path, "required field is missing")
}

fn identity_rows(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

/// Some `r` with `r g = v`, or `None` if `v ∉ R g`.
fn solve_cyclic(ring: &Ring, m: &Module, g: &[u32], v: &[u32]) -> Option<Vec<u32>> {
    let f = *ring.field();
    let mut cols: Vec<Vec<u32>> = (0..ring.dim())
        .map(|b| m.monomial_action(b).apply(g))
        .collect();
    cols.push(v.iter().map(|c| f.neg(c)).collect());
    let a = Matrix::from_columns(f, m.dim(), &cols).ok()?;
    let last = ring.dim();
    a.kernel()
        .basis_vectors()
        .into_iter()
        .find(|k| k[last] != 0)
        .map(|k| {
            let inv = f.inv(&k[last]).expect("nonzero");
            k[..last].iter().map(|c| f.mul(c, &inv)).collect()
        })
}

fn format_coordinates(f: &PrimeField, v: &[u32]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| {
            if *c == 1 {
                format!("e{}", i + 1)
            } else {
                format!("{}*e{}", f.format(c), i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// JSON form of a submodule: its basis as coordinate rows and as strings
/// (polynomial multiples of the generator for cyclic modules, otherwise
/// combinations of the standard basis `e1, e2, ...`).
pub fn submodule_json(ring: &Ring, info: &ModuleInfo, n: &Sub) -> Value {
    let rows = n.basis_vectors();
    let gens: Vec<String> = rows
        .iter()
        .map(|v| match &info.generator {
            Some(g) => match solve_cyclic(ring, &info.module, g, v) {
                Some(r) => ring.format_coords(&r),
                None => format_coordinates(ring.field(), v),
            },
            None => format_coordinates(ring.field(), v),
        })
        .collect();
    let mut out = json!({
        "dim": n.dim(),
        "generators": gens,
        "basis": rows,
    });
    if info.regular {
        out["ideal"] = json!(format_ideal(ring, n.space()));
    }
    out
}

/// JSON form of an ideal of `ring`.
pub fn ideal_json(ring: &Ring, i: &Subspace<PrimeField>) -> Value {
    let r = ModuleInfo {
        ring: String::new(),
        module: FLModule::regular(ring),
        generator: Some(ring.unit_vector()),
        regular: true,
    };
    let sub = r.module.submodule(i.clone()).expect("ideals are submodules of R");
    submodule_json(ring, &r, &sub)
}

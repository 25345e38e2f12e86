//! Task execution.

use std::time::Instant;

use pairops_core::corehull::{
    expansions, hull_formula_check, reductions, verify_core_hull_duality, DualityStatus,
};
use pairops_core::pairops::properties::{
    check_properties_on, format_ideal, Bounds, Catalog, Property, PropertyReport, Verdict,
};
use pairops_core::pairops::test_ideal::{test_ideal, test_ideal_chain, TestIdealMode};
use pairops_core::{smile_dual, Error, FLModule, MatlisContext, PrimeField};
use serde_json::{json, Value};

use crate::report::{Report, TaskReport, TaskStatus};
use crate::session::{ideal_json, submodule_json, ModuleInfo, Op, Ring, Session};
use crate::workspace::{TaskDecl, TaskKind, TestIdealModeSpec, Workspace, WorkspaceError};

/// Overrides from the command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExecOptions {
    pub max_dim: Option<usize>,
    pub max_submodules: Option<usize>,
    /// Record wall-clock time per task (makes reports nondeterministic).
    pub timing: bool,
}

/// Why a task did not produce a result.
#[derive(Debug)]
enum TaskError {
    Workspace(WorkspaceError),
    Core(Error),
}

impl From<WorkspaceError> for TaskError {
    fn from(e: WorkspaceError) -> Self {
        TaskError::Workspace(e)
    }
}

impl From<Error> for TaskError {
    fn from(e: Error) -> Self {
        TaskError::Core(e)
    }
}

impl std::fmt::Display for TaskError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TaskError::Workspace(e) => write!(f, "{e}"),
            TaskError::Core(e) => write!(f, "{e}"),
        }
    }
}

type Outcome = Result<(Value, bool), TaskError>;

/// Runs every task in declaration order. A failing task is recorded and
/// does not stop the others.
pub fn execute_tasks(ws: &Workspace, opts: ExecOptions) -> Result<Report, WorkspaceError> {
    let session = Session::new(ws)?;
    let mut bounds = session.bounds();
    if let Some(d) = opts.max_dim {
        bounds.max_dim = d;
    }
    if let Some(k) = opts.max_submodules {
        bounds.max_submodules = k;
    }
    let mut tasks = Vec::new();
    for (index, t) in ws.tasks.iter().enumerate() {
        let start = Instant::now();
        let outcome = run_task(&session, t, index, bounds);
        let elapsed_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
        let (status, result, error) = match outcome {
            Ok((v, true)) => (TaskStatus::Ok, v, None),
            Ok((v, false)) => (TaskStatus::Failed, v, None),
            Err(e) => (TaskStatus::Error, Value::Null, Some(e.to_string())),
        };
        tasks.push(TaskReport {
            index,
            kind: t.kind.as_str().to_string(),
            status,
            bounds: bounds_json(bounds),
            result,
            error,
            elapsed_ms,
        });
    }
    Ok(Report { tasks })
}

pub fn bounds_json(b: Bounds) -> Value {
    json!({"max_dim": b.max_dim, "max_submodules": b.max_submodules, "max_maps": b.max_maps})
}

fn run_task(s: &Session, t: &TaskDecl, index: usize, bounds: Bounds) -> Outcome {
    let path = format!("tasks[{index}]");
    match t.kind {
        TaskKind::Eval => eval_task(s, t, &path),
        TaskKind::Props => props_task(s, t, &path, bounds),
        TaskKind::DualCheck => dual_check_task(s, t, &path, bounds),
        TaskKind::Core => core_task(s, t, &path, bounds),
        TaskKind::Hull => hull_task(s, t, &path, bounds),
        TaskKind::TestIdeal => test_ideal_task(s, t, &path, bounds),
        TaskKind::DualityTable => duality_table_task(s, t, &path, bounds),
        TaskKind::Fixtures => fixtures_task(s, t, bounds),
        TaskKind::HullFormula => hull_formula_task(s, t, &path, bounds),
    }
}

struct Target<'a> {
    ring_name: &'a str,
    ring: Ring,
    info: ModuleInfo,
    module_name: &'a str,
}

fn target<'a>(s: &Session, t: &'a TaskDecl, path: &str, default: &'a str) -> Result<Target<'a>, TaskError> {
    let ring_name = t.ring.as_deref().unwrap_or_default();
    let ring = s.ring(ring_name, &format!("{path}.ring"))?.clone();
    let module_name = t.module.as_deref().unwrap_or(default);
    let info = s.module(ring_name, module_name, &format!("{path}.module"))?;
    Ok(Target {
        ring_name,
        ring,
        info,
        module_name,
    })
}

fn eval_task(s: &Session, t: &TaskDecl, path: &str) -> Outcome {
    let tg = target(s, t, path, "R")?;
    let op = s.operation(t.operation.as_deref().unwrap_or_default(), tg.ring_name, path)?;
    let l = s.submodule(&tg.info, t.submodule.as_ref().unwrap(), &format!("{path}.submodule"))?;
    let out = op.eval(&l, &tg.info.module)?;
    Ok((
        json!({
            "operation": op.name(),
            "ring": tg.ring_name,
            "module": tg.module_name,
            "submodule": submodule_json(&tg.ring, &tg.info, &l),
            "value": submodule_json(&tg.ring, &tg.info, &out),
        }),
        true,
    ))
}

pub fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Pass { instances } => json!({"verdict": "pass", "instances": instances}),
        Verdict::Fail { witness } => json!({
            "verdict": "FAIL",
            "witness": witness
                .entries
                .iter()
                .map(|(k, v)| json!([k, v]))
                .collect::<Vec<_>>(),
            "detail": witness.detail,
        }),
        Verdict::Skipped { reason } => json!({"verdict": "skipped", "reason": reason}),
    }
}

pub fn property_report_json(r: &PropertyReport) -> Value {
    let rows: Vec<Value> = r
        .verdicts
        .iter()
        .map(|(p, v)| {
            let mut row = verdict_json(v);
            row["property"] = json!(p.name());
            row
        })
        .collect();
    json!({
        "operation": r.operation,
        "scope": r.scope,
        "properties": rows,
    })
}

fn props_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let ring_name = t.ring.as_deref().unwrap_or_default();
    let ring = s.ring(ring_name, path)?;
    let op = s.operation(t.operation.as_deref().unwrap_or_default(), ring_name, path)?;
    let cat = Catalog::new(ring, bounds)?;
    let report = check_properties_on(&op, &cat)?;
    let mut v = property_report_json(&report);
    v["ring"] = json!(ring_name);
    Ok((v, true))
}

/// `Ok(Some(x))`, `Ok(None)` for pairs outside the domain, or the error.
fn defined(r: pairops_core::Result<crate::session::Sub>) -> pairops_core::Result<Option<crate::session::Sub>> {
    match r {
        Ok(x) => Ok(Some(x)),
        Err(Error::OutsideDomain(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Pointwise comparison of two operations on every pair of a catalog.
pub struct PointwiseComparison {
    pub pairs: usize,
    pub undefined: usize,
    pub mismatch: Option<String>,
}

pub fn compare_pointwise(
    a: &Op,
    b: &Op,
    cat: &Catalog<PrimeField>,
    max_dim: usize,
) -> pairops_core::Result<PointwiseComparison> {
    let mut out = PointwiseComparison {
        pairs: 0,
        undefined: 0,
        mismatch: None,
    };
    for (i, e) in cat.entries().iter().enumerate() {
        if e.module.dim() > max_dim {
            continue;
        }
        for l in &e.submodules {
            let x = defined(a.eval(l, &e.module));
            let y = defined(b.eval(l, &e.module));
            let show = |r: &pairops_core::Result<Option<crate::session::Sub>>| match r {
                Ok(Some(n)) => cat.describe(i, n),
                Ok(None) => "undefined".to_string(),
                Err(err) => format!("error: {err}"),
            };
            match (&x, &y) {
                (Ok(p), Ok(q)) if p == q => {
                    out.pairs += 1;
                    if p.is_none() {
                        out.undefined += 1;
                    }
                }
                _ => {
                    out.pairs += 1;
                    if out.mismatch.is_none() {
                        out.mismatch = Some(format!(
                            "at (L, M) = ({}, {}): {} gives {}, {} gives {}",
                            cat.describe(i, l),
                            e.name,
                            a.name(),
                            show(&x),
                            b.name(),
                            show(&y)
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn comparison_json(c: &PointwiseComparison) -> Value {
    json!({
        "pairs": c.pairs,
        "undefined_pairs": c.undefined,
        "holds": c.mismatch.is_none(),
        "first_mismatch": c.mismatch,
    })
}

/// Annihilator form of the dual on every ideal: `p^∨(I, R)` against
/// `ann_R p(ann_E I, E)`.
pub fn annihilator_form(p: &Op, ring: &Ring, limit: usize) -> pairops_core::Result<(usize, Option<String>)> {
    let ctx = MatlisContext::new(ring);
    let r = ctx.regular();
    let e = ctx.injective_hull();
    let dual = smile_dual(p);
    let mut n = 0;
    for i in r.enumerate_submodules(limit)? {
        n += 1;
        let lhs = defined(dual.eval(&i, r))?.map(|x| x.into_space());
        let rhs = match defined(p.eval(&ctx.ann_e(i.space())?, e))? {
            Some(c) => Some(ctx.ann_r(&c)?),
            None => None,
        };
        if lhs != rhs {
            let show = |x: &Option<pairops_core::Subspace<PrimeField>>| match x {
                Some(s) => format_ideal(ring, s),
                None => "undefined".into(),
            };
            return Ok((
                n,
                Some(format!(
                    "I = {}: dual gives {}, annihilator form gives {}",
                    format_ideal(ring, i.space()),
                    show(&lhs),
                    show(&rhs)
                )),
            ));
        }
    }
    Ok((n, None))
}

fn dual_check_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let ring_name = t.ring.as_deref().unwrap_or_default();
    let ring = s.ring(ring_name, path)?;
    let p = s.operation(t.operation.as_deref().unwrap_or_default(), ring_name, path)?;
    let cat = Catalog::new(ring, bounds)?;
    let once = smile_dual(&p);
    let twice = smile_dual(&once);
    let dd = compare_pointwise(&twice, &p, &cat, bounds.max_dim)?;
    let (ideals, ann) = annihilator_form(&p, ring, bounds.max_submodules)?;
    let (ev1, ag1) = once.dual_stats().map(|s| s.snapshot()).unwrap_or_default();
    let (ev2, ag2) = twice.dual_stats().map(|s| s.snapshot()).unwrap_or_default();
    let kernel_ok = ev1 == ag1 && ev2 == ag2;
    let holds = dd.mismatch.is_none() && ann.is_none() && kernel_ok;
    Ok((
        json!({
            "operation": p.name(),
            "ring": ring_name,
            "scope": cat.scope(),
            "double_dual": comparison_json(&dd),
            "kernel_view": {
                "evaluations": ev1 + ev2,
                "agreements": ag1 + ag2,
                "holds": kernel_ok,
            },
            "annihilator_form": {
                "ideals": ideals,
                "holds": ann.is_none(),
                "first_mismatch": ann,
            },
        }),
        holds,
    ))
}

fn core_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let tg = target(s, t, path, "R")?;
    let cl = s.operation(t.operation.as_deref().unwrap_or_default(), tg.ring_name, path)?;
    let n = s.submodule(&tg.info, t.submodule.as_ref().unwrap(), &format!("{path}.submodule"))?;
    let set = reductions(&cl, &n, &tg.info.module, bounds.max_submodules)?;
    let core = set.core()?;
    let show = |x: &crate::session::Sub| submodule_json(&tg.ring, &tg.info, x);
    Ok((
        json!({
            "operation": cl.name(),
            "ring": tg.ring_name,
            "module": tg.module_name,
            "submodule": show(&n),
            "reductions": set.reductions.iter().map(show).collect::<Vec<_>>(),
            "core": show(&core),
        }),
        true,
    ))
}

fn hull_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let tg = target(s, t, path, "E")?;
    let a = s.submodule(&tg.info, t.submodule.as_ref().unwrap(), &format!("{path}.submodule"))?;
    let limit = bounds.max_submodules;
    let (int, closure) = match (&t.operation, &t.closure) {
        (Some(name), _) => (s.operation(name, tg.ring_name, path)?, None),
        (None, Some(name)) => {
            let cl = s.operation(name, tg.ring_name, path)?;
            (smile_dual(&cl), Some(cl))
        }
        (None, None) => unreachable!("validated"),
    };
    let set = expansions(&int, &a, &tg.info.module, limit)?;
    let show = |x: &crate::session::Sub| submodule_json(&tg.ring, &tg.info, x);
    let mut v = json!({
        "operation": int.name(),
        "ring": tg.ring_name,
        "module": tg.module_name,
        "submodule": show(&a),
        "expansions": set.expansions.iter().map(show).collect::<Vec<_>>(),
        "candidates": set.candidates.iter().map(show).collect::<Vec<_>>(),
        "sets_agree": set.sets_agree(),
        "hull": show(&set.hull()?),
        "expansion_sum": show(&set.expansion_sum()?),
    });
    let mut holds = true;
    if let Some(cl) = closure {
        let cat = Catalog::new(&tg.ring, bounds)?;
        let cert = check_properties_on(&cl, &cat)?;
        let r = verify_core_hull_duality(&cl, &a, &tg.info.module, &cert, limit)?;
        let dual_info = ModuleInfo {
            ring: tg.ring_name.to_string(),
            module: tg.info.module.dual(),
            generator: None,
            regular: false,
        };
        let dshow = |x: &crate::session::Sub| submodule_json(&tg.ring, &dual_info, x);
        v["duality"] = match &r.status {
            DualityStatus::HypothesesUnmet(reason) => {
                json!({"status": "hypotheses unmet", "reason": reason})
            }
            DualityStatus::Checked => {
                holds = r.holds();
                json!({
                    "status": "checked",
                    "closure": cl.name(),
                    "holds": r.holds(),
                    "dual_of_hull": r.dual_of_hull.as_ref().map(dshow),
                    "core": r.core.as_ref().map(dshow),
                    "reductions": r.reductions.iter().map(dshow).collect::<Vec<_>>(),
                    "bijection": r.bijection,
                    "order_reversing": r.order_reversing,
                })
            }
        };
    }
    Ok((v, holds))
}

fn test_ideal_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let ring_name = t.ring.as_deref().unwrap_or_default();
    let ring = s.ring(ring_name, path)?;
    let cl = s.operation(t.operation.as_deref().unwrap_or_default(), ring_name, path)?;
    let mode = t.mode.unwrap_or(TestIdealModeSpec::Big);
    let core_mode = match mode {
        TestIdealModeSpec::Big => TestIdealMode::Big,
        TestIdealModeSpec::Finitistic => TestIdealMode::Finitistic,
        TestIdealModeSpec::Enumerated => TestIdealMode::Enumerated,
        TestIdealModeSpec::Chain => return chain_task(ring_name, ring, &cl, bounds),
    };
    let ti = test_ideal(&cl, ring, core_mode, bounds)?;
    let e_info = ModuleInfo {
        ring: ring_name.to_string(),
        module: FLModule::regular(ring).dual(),
        generator: None,
        regular: false,
    };
    Ok((
        json!({
            "operation": cl.name(),
            "ring": ring_name,
            "mode": serde_json::to_value(mode).expect("mode serializes"),
            "ideal": ideal_json(ring, &ti.ideal),
            "closure_of_zero": ti.closure_of_zero.as_ref().map(|c| submodule_json(ring, &e_info, c)),
            "pairs": ti.pairs,
        }),
        true,
    ))
}

fn chain_task(ring_name: &str, ring: &Ring, cl: &Op, bounds: Bounds) -> Outcome {
    let cat = Catalog::new(ring, bounds)?;
    let cert = check_properties_on(cl, &cat)?;
    let hypotheses = [
        Property::Functorial,
        Property::Residual,
        Property::Extensive,
        Property::OpSubmodules,
    ];
    let unmet: Vec<&str> = hypotheses
        .iter()
        .filter(|p| !cert.passes(**p))
        .map(|p| p.name())
        .collect();
    let rows = test_ideal_chain(cl, ring, bounds.max_submodules)?;
    let f = |x: &pairops_core::Subspace<PrimeField>| format_ideal(ring, x);
    let mut ann_ok = true;
    let mut chain_ok = true;
    let out: Vec<Value> = rows
        .iter()
        .map(|r| {
            ann_ok &= r.dual == r.via_hull && r.finitistic_dual == r.finitistic_via_hull;
            chain_ok &= r.finitistic_dual == r.collapsed;
            json!({
                "ideal": f(&r.ideal),
                "dual": f(&r.dual),
                "via_hull": f(&r.via_hull),
                "finitistic_dual": f(&r.finitistic_dual),
                "finitistic_via_hull": f(&r.finitistic_via_hull),
                "collapsed": f(&r.collapsed),
                "holds": r.holds(),
            })
        })
        .collect();
    // The annihilator form holds unconditionally; the collapse to
    // (0 : (0 : I)^cl) is asserted only under its hypotheses.
    let asserted = unmet.is_empty();
    let holds = ann_ok && (!asserted || chain_ok);
    Ok((
        json!({
            "operation": cl.name(),
            "ring": ring_name,
            "mode": "chain",
            "rows": out,
            "annihilator_form_holds": ann_ok,
            "chain_holds": chain_ok,
            "chain_asserted": asserted,
            "unmet_hypotheses": unmet,
        }),
        holds,
    ))
}

/// Property-by-property comparison of `p` and `p^∨` on one catalog.
pub fn duality_rows(p: &PropertyReport, d: &PropertyReport) -> (Vec<Value>, usize) {
    let mut asym = 0;
    let rows = Property::ALL
        .iter()
        .map(|&prop| {
            let a = p.verdict(prop);
            let b = d.verdict(prop.dual());
            let consistent = a.is_pass() == b.is_pass();
            if !consistent {
                asym += 1;
            }
            json!({
                "property": prop.name(),
                "verdict": a.label(),
                "dual_property": prop.dual().name(),
                "dual_verdict": b.label(),
                "consistent": consistent,
            })
        })
        .collect();
    (rows, asym)
}

fn duality_table_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let mut entries = Vec::new();
    let mut holds = true;
    for ring_name in &t.rings {
        let ring = s.ring(ring_name, path)?;
        let cat = Catalog::new(ring, bounds)?;
        for op_name in &t.operations {
            let p = match s.operation(op_name, ring_name, path) {
                Ok(p) => p,
                Err(e) => {
                    entries.push(json!({
                        "operation": op_name,
                        "ring": ring_name,
                        "applicable": false,
                        "reason": e.to_string(),
                    }));
                    continue;
                }
            };
            let d = smile_dual(&p);
            let rp = check_properties_on(&p, &cat)?;
            let rd = check_properties_on(&d, &cat)?;
            let (rows, asym) = duality_rows(&rp, &rd);
            holds &= asym == 0;
            entries.push(json!({
                "operation": op_name,
                "dual": d.name(),
                "ring": ring_name,
                "applicable": true,
                "scope": cat.scope(),
                "asymmetries": asym,
                "rows": rows,
            }));
        }
    }
    Ok((json!({"entries": entries}), holds))
}

fn fixtures_task(s: &Session, t: &TaskDecl, bounds: Bounds) -> Outcome {
    let names = if t.rings.is_empty() {
        s.ring_names()
    } else {
        t.rings.clone()
    };
    let mut out = Vec::new();
    for name in names {
        let ring = s.ring(&name, "tasks")?;
        let r = FLModule::regular(ring);
        let ideals = r.enumerate_submodules(bounds.max_submodules)?;
        let socle = r.socle();
        let validation = ring.validate();
        out.push(json!({
            "ring": name,
            "characteristic": ring.field().modulus(),
            "dim": ring.dim(),
            "basis": ring.basis_names(),
            "valid": validation.is_ok(),
            "ideal_count": ideals.len(),
            "ideals": ideals.iter().map(|i| format_ideal(ring, i.space())).collect::<Vec<_>>(),
            "maximal_ideal": ideal_json(ring, ring.maximal_ideal()),
            "socle": ideal_json(ring, socle.space()),
            "gorenstein": socle.dim() == 1,
        }));
    }
    Ok((json!({"rings": out}), true))
}

fn hull_formula_task(s: &Session, t: &TaskDecl, path: &str, bounds: Bounds) -> Outcome {
    let ring_name = t.ring.as_deref().unwrap_or_default();
    let ring = s.ring(ring_name, path)?;
    let cl = s.operation(t.closure.as_deref().unwrap_or_default(), ring_name, path)?;
    let i = s.ideal(ring_name, t.i.as_deref().unwrap_or_default(), &format!("{path}.i"))?;
    let j = s.ideal(ring_name, t.j.as_deref().unwrap_or_default(), &format!("{path}.j"))?;
    let n = t.n.unwrap_or(0);
    let r = hull_formula_check(&cl, ring, &i, &j, n, bounds.max_submodules)?;
    let e_info = ModuleInfo {
        ring: ring_name.to_string(),
        module: FLModule::regular(ring).dual(),
        generator: None,
        regular: false,
    };
    let status = match r.conclusion {
        None => "premise false, theorem vacuous",
        Some(true) => "holds",
        Some(false) => "fails",
    };
    Ok((
        json!({
            "closure": cl.name(),
            "ring": ring_name,
            "n": n,
            "i": format_ideal(ring, &i),
            "j": format_ideal(ring, &j),
            "j_is_reduction": r.j_is_reduction,
            "core": format_ideal(ring, &r.core),
            "colon": format_ideal(ring, &r.colon),
            "premise_holds": r.premise_holds,
            "hull": submodule_json(ring, &e_info, &r.hull),
            "formula": submodule_json(ring, &e_info, &r.formula),
            "status": status,
        }),
        r.conclusion != Some(false),
    ))
}

//! Script execution: binds declarations in a scope and dispatches commands
//! to the engine, collecting one report per command.

use std::collections::HashMap;
use std::sync::Arc;

use num::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use rl_core::constructions::{
    cantor_membership, diagonal, schroder_bernstein, DiagonalRule, Word,
};
use rl_core::logic::{self, Statement, Tag};
use rl_core::orders::{self, GridKind, OrderStructure};
use rl_core::pluralities::{self, FamilyParams, Plurality};
use rl_core::relation::check_relation_laws;
use rl_core::sets::check_set_laws;
use rl_core::{PointId, PointSet, Relation, Universe};

use crate::ast::*;

pub const DEFAULT_UNIVERSE_CAP: usize = 4096;

#[derive(Debug, Error)]
pub enum ExecError {
    #[error("line {line}: no universe declared yet")]
    NoUniverse { line: usize },
    #[error("line {line}: {name} is not declared")]
    Undeclared { line: usize, name: String },
    #[error("line {line}: {name} is not a {wanted}")]
    WrongKind {
        line: usize,
        name: String,
        wanted: &'static str,
    },
    #[error("line {line}: {msg}")]
    Invalid { line: usize, msg: String },
}

/// One executed command. `ok` reflects the inline expectation (vacuously
/// true when none was given); it is skipped in the serialized form.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub target: String,
    pub result: Value,
    pub trace: Vec<String>,
    #[serde(skip)]
    pub ok: bool,
    #[serde(skip)]
    pub summary: String,
}

enum Binding {
    Rel(Arc<Relation>),
    Set(PointSet),
    Stmt(Statement),
    Plur(Plurality),
    Ord(OrderStructure),
}

pub struct Scope {
    universe: Option<Arc<Universe>>,
    names: HashMap<String, Binding>,
    seed: u64,
    cap: usize,
}

impl Scope {
    pub fn new(seed: u64) -> Scope {
        let cap = std::env::var("RLM_MAX_UNIVERSE")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_UNIVERSE_CAP);
        Scope {
            universe: None,
            names: HashMap::new(),
            seed,
            cap,
        }
    }

    fn universe(&self, line: usize) -> Result<&Arc<Universe>, ExecError> {
        self.universe.as_ref().ok_or(ExecError::NoUniverse { line })
    }

    fn relation(&self, line: usize, name: &str) -> Result<Arc<Relation>, ExecError> {
        match self.names.get(name) {
            Some(Binding::Rel(r)) => Ok(r.clone()),
            Some(_) => Err(ExecError::WrongKind {
                line,
                name: name.into(),
                wanted: "relation",
            }),
            None => Err(ExecError::Undeclared {
                line,
                name: name.into(),
            }),
        }
    }

    fn set(&self, line: usize, name: &str) -> Result<&PointSet, ExecError> {
        match self.names.get(name) {
            Some(Binding::Set(s)) => Ok(s),
            Some(_) => Err(ExecError::WrongKind {
                line,
                name: name.into(),
                wanted: "set",
            }),
            None => Err(ExecError::Undeclared {
                line,
                name: name.into(),
            }),
        }
    }

    fn plurality(&self, line: usize, name: &str) -> Result<&Plurality, ExecError> {
        match self.names.get(name) {
            Some(Binding::Plur(p)) => Ok(p),
            Some(_) => Err(ExecError::WrongKind {
                line,
                name: name.into(),
                wanted: "plurality",
            }),
            None => Err(ExecError::Undeclared {
                line,
                name: name.into(),
            }),
        }
    }

    fn order(&self, line: usize, name: &str) -> Result<&OrderStructure, ExecError> {
        match self.names.get(name) {
            Some(Binding::Ord(o)) => Ok(o),
            Some(_) => Err(ExecError::WrongKind {
                line,
                name: name.into(),
                wanted: "order",
            }),
            None => Err(ExecError::Undeclared {
                line,
                name: name.into(),
            }),
        }
    }

    fn build_statement(&self, line: usize, e: &StmtExpr) -> Result<Statement, ExecError> {
        Ok(match e {
            StmtExpr::Name(n) => match self.names.get(n) {
                Some(Binding::Stmt(s)) => s.clone(),
                Some(Binding::Rel(r)) => Statement::Atom(r.clone()),
                Some(_) => {
                    return Err(ExecError::WrongKind {
                        line,
                        name: n.clone(),
                        wanted: "statement or relation",
                    })
                }
                None => {
                    return Err(ExecError::Undeclared {
                        line,
                        name: n.clone(),
                    })
                }
            },
            StmtExpr::And(a, b) => Statement::and(
                self.build_statement(line, a)?,
                self.build_statement(line, b)?,
            ),
            StmtExpr::Or(a, b) => Statement::or(
                self.build_statement(line, a)?,
                self.build_statement(line, b)?,
            ),
            StmtExpr::Implies(a, b) => Statement::implies(
                self.build_statement(line, a)?,
                self.build_statement(line, b)?,
            ),
            StmtExpr::Iff(a, b) => Statement::iff(
                self.build_statement(line, a)?,
                self.build_statement(line, b)?,
            ),
            StmtExpr::TagTr(a) => {
                Statement::tagged(self.build_statement(line, a)?, Tag::Tr)
            }
            StmtExpr::TagLi(a) => {
                Statement::tagged(self.build_statement(line, a)?, Tag::Li)
            }
            StmtExpr::ForAll(names, t) | StmtExpr::Exists(names, t) => {
                let mut field = Vec::with_capacity(names.len());
                for n in names {
                    field.push(self.relation(line, n)?);
                }
                let tag = match t {
                    TagKind::Tr => Tag::Tr,
                    TagKind::Li => Tag::Li,
                };
                if matches!(e, StmtExpr::ForAll(..)) {
                    Statement::ForAllField(field, tag)
                } else {
                    Statement::ExistsField(field, tag)
                }
            }
            StmtExpr::Chain(parts, bound) => {
                let mut built = Vec::with_capacity(parts.len());
                for p in parts {
                    built.push(self.build_statement(line, p)?);
                }
                Statement::Chain(built, *bound)
            }
        })
    }
}

// ---- predicate evaluation ----

fn eval_arith(e: &ArithExpr, m: i64, n: i64) -> Option<i64> {
    Some(match e {
        ArithExpr::Num(v) => *v,
        ArithExpr::M => m,
        ArithExpr::N => n,
        ArithExpr::Neg(a) => eval_arith(a, m, n)?.checked_neg()?,
        ArithExpr::Abs(a) => eval_arith(a, m, n)?.checked_abs()?,
        // (-1) to the power of the argument.
        ArithExpr::Sign(a) => {
            if eval_arith(a, m, n)?.rem_euclid(2) == 0 {
                1
            } else {
                -1
            }
        }
        ArithExpr::Add(a, b) => eval_arith(a, m, n)?.checked_add(eval_arith(b, m, n)?)?,
        ArithExpr::Sub(a, b) => eval_arith(a, m, n)?.checked_sub(eval_arith(b, m, n)?)?,
        ArithExpr::Mul(a, b) => eval_arith(a, m, n)?.checked_mul(eval_arith(b, m, n)?)?,
        ArithExpr::Div(a, b) => eval_arith(a, m, n)?.checked_div(eval_arith(b, m, n)?)?,
        ArithExpr::Mod(a, b) => eval_arith(a, m, n)?.checked_rem(eval_arith(b, m, n)?)?,
    })
}

/// Undefined arithmetic (division by zero, overflow) makes the enclosing
/// comparison false rather than aborting the run.
fn eval_bool(e: &BoolExpr, m: i64, n: i64) -> bool {
    match e {
        BoolExpr::Cmp(op, a, b) => match (eval_arith(a, m, n), eval_arith(b, m, n)) {
            (Some(a), Some(b)) => match op {
                CmpOp::Eq => a == b,
                CmpOp::Ne => a != b,
                CmpOp::Lt => a < b,
                CmpOp::Le => a <= b,
                CmpOp::Gt => a > b,
                CmpOp::Ge => a >= b,
            },
            _ => false,
        },
        BoolExpr::In(a, items) => {
            eval_arith(a, m, n).is_some_and(|v| items.contains(&v))
        }
        BoolExpr::And(a, b) => eval_bool(a, m, n) && eval_bool(b, m, n),
        BoolExpr::Or(a, b) => eval_bool(a, m, n) || eval_bool(b, m, n),
        BoolExpr::Not(a) => !eval_bool(a, m, n),
    }
}

fn lookup(u: &Arc<Universe>, line: usize, label: &str) -> Result<PointId, ExecError> {
    u.lookup(label).map_err(|_| ExecError::Invalid {
        line,
        msg: format!("{label} is not a point of the active universe"),
    })
}

fn parse_word(base: u32, literal: &str, line: usize) -> Result<Word, ExecError> {
    let bad = |msg: String| ExecError::Invalid { line, msg };
    let digit = |c: char| -> Result<u32, ExecError> {
        c.to_digit(base)
            .ok_or_else(|| bad(format!("{c:?} is not a base-{base} digit")))
    };
    let (pre, per) = match literal.find('(') {
        Some(i) => {
            let rest = &literal[i + 1..];
            let j = rest
                .find(')')
                .ok_or_else(|| bad(format!("unclosed period in {literal:?}")))?;
            if !rest[j + 1..].is_empty() {
                return Err(bad(format!("trailing characters in {literal:?}")));
            }
            (&literal[..i], &rest[..j])
        }
        None => (literal, ""),
    };
    let prefix: Vec<u32> = pre.chars().map(digit).collect::<Result<_, _>>()?;
    let period: Vec<u32> = if per.is_empty() {
        vec![0]
    } else {
        per.chars().map(digit).collect::<Result<_, _>>()?
    };
    Word::new(base, prefix, period).map_err(|e| bad(e.to_string()))
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn same_labels(got: &[String], want: &[String]) -> bool {
    sorted(got.to_vec()) == sorted(want.to_vec())
}

// ---- execution ----

pub fn run_script(script: &Script, seed: u64) -> Result<Vec<Report>, ExecError> {
    let mut scope = Scope::new(seed);
    let mut reports = Vec::new();
    for l in &script.lines {
        match &l.decl {
            Decl::Command(cmd) => reports.push(run_command(&scope, cmd, l.line)?),
            other => declare(&mut scope, other, l.line)?,
        }
    }
    Ok(reports)
}

fn declare(scope: &mut Scope, decl: &Decl, line: usize) -> Result<(), ExecError> {
    match decl {
        Decl::Universe { labels, .. } => {
            let u = Universe::with_cap(labels.iter().cloned(), scope.cap).map_err(|e| {
                ExecError::Invalid {
                    line,
                    msg: e.to_string(),
                }
            })?;
            scope.universe = Some(u);
        }
        Decl::RelationPred { name, pred } => {
            let u = scope.universe(line)?.clone();
            if u.points().any(|p| u.numeric(p).is_none()) {
                return Err(ExecError::Invalid {
                    line,
                    msg: "predicate relations need a numeric universe".into(),
                });
            }
            let r = Relation::from_predicate(&u, |x, y| {
                let m = u.numeric(x).unwrap();
                let n = u.numeric(y).unwrap();
                eval_bool(pred, m, n)
            })
            .named(name.clone());
            scope.names.insert(name.clone(), Binding::Rel(Arc::new(r)));
        }
        Decl::RelationPairs { name, pairs } => {
            let u = scope.universe(line)?.clone();
            let mut ids = Vec::with_capacity(pairs.len());
            for (a, b) in pairs {
                ids.push((lookup(&u, line, a)?, lookup(&u, line, b)?));
            }
            let r = Relation::from_pairs(&u, ids).named(name.clone());
            scope.names.insert(name.clone(), Binding::Rel(Arc::new(r)));
        }
        Decl::Set { name, labels } => {
            let u = scope.universe(line)?.clone();
            let mut pts = Vec::with_capacity(labels.len());
            for l in labels {
                pts.push(lookup(&u, line, l)?);
            }
            scope
                .names
                .insert(name.clone(), Binding::Set(PointSet::from_points(&u, pts)));
        }
        Decl::Statement { name, expr } => {
            let s = scope.build_statement(line, expr)?;
            scope.names.insert(name.clone(), Binding::Stmt(s));
        }
        Decl::Plurality { name, spec } => {
            let u = scope.universe(line)?.clone();
            let params = match spec {
                PluralitySpec::MetricBalls(radii) => FamilyParams::MetricBalls {
                    radii: radii.clone(),
                },
                PluralitySpec::MetricBallsOpen => FamilyParams::MetricBallsSymbolic,
                PluralitySpec::Group(perms) => {
                    let mut generators = Vec::with_capacity(perms.len());
                    for p in perms {
                        let mut map = Vec::with_capacity(p.len());
                        for item in p {
                            map.push(item.parse::<usize>().map_err(|_| {
                                ExecError::Invalid {
                                    line,
                                    msg: format!("{item} is not a point index"),
                                }
                            })?);
                        }
                        generators.push(map);
                    }
                    FamilyParams::TransformationGroup { generators }
                }
                PluralitySpec::Family(names) => {
                    let mut members = Vec::with_capacity(names.len());
                    for n in names {
                        let r = scope.relation(line, n)?;
                        members.push((n.clone(), r.as_ref().clone()));
                    }
                    let p = Plurality::from_members(&u, members).map_err(|e| {
                        ExecError::Invalid {
                            line,
                            msg: e.to_string(),
                        }
                    })?;
                    scope.names.insert(name.clone(), Binding::Plur(p));
                    return Ok(());
                }
            };
            let p = pluralities::make_family(&u, params).map_err(|e| ExecError::Invalid {
                line,
                msg: e.to_string(),
            })?;
            scope.names.insert(name.clone(), Binding::Plur(p));
        }
        Decl::Order { name, spec } => {
            let o = match spec {
                OrderSpec::From(rel) => {
                    let u = scope.universe(line)?.clone();
                    let r = scope.relation(line, rel)?;
                    orders::build_order(&u, &r).map_err(|e| ExecError::Invalid {
                        line,
                        msg: e.to_string(),
                    })?
                }
                OrderSpec::Zigzag(m) => orders::zigzag_order(*m),
                OrderSpec::ProductGrid(m) => orders::grid_orders(*m, GridKind::Product),
                OrderSpec::LexGrid(m) => orders::grid_orders(*m, GridKind::Lexicographic),
            };
            scope.names.insert(name.clone(), Binding::Ord(o));
        }
        Decl::Command(_) => unreachable!("commands are dispatched separately"),
    }
    Ok(())
}

fn report(
    command: &str,
    target: impl Into<String>,
    result: Value,
    trace: Vec<String>,
    ok: bool,
    summary: impl Into<String>,
) -> Report {
    Report {
        command: command.into(),
        target: target.into(),
        result,
        trace,
        ok,
        summary: summary.into(),
    }
}

fn run_command(scope: &Scope, cmd: &Command, line: usize) -> Result<Report, ExecError> {
    Ok(match cmd {
        Command::Classify { expr, expect } => {
            let stmt = scope.build_statement(line, expr)?;
            let c = logic::classify(&stmt);
            let j = c.to_json();
            let mut ok = true;
            let mut summary = match (&j.truth_domain, &j.reason) {
                (Some(d), _) => format!("{} domain {{{}}}", j.class, d.join(",")),
                (_, Some(r)) => format!("{} ({r})", j.class),
                _ => j.class.clone(),
            };
            if j.absurd {
                summary.push_str(" [absurd]");
            }
            if let Some(e) = expect {
                let class_ok = match e.class.as_str() {
                    // The serialized class for absurd statements is Nonsense;
                    // the script-level expectation distinguishes them.
                    "Absurd" => c.class_name() == "Absurd",
                    other => c.class_name() == other,
                };
                ok = class_ok
                    && match (&e.domain, c.domain()) {
                        (Some(want), Some(got)) => same_labels(&got.labels(), want),
                        (Some(_), None) => false,
                        (None, _) => true,
                    };
            }
            report(
                "classify",
                expr.print(),
                serde_json::to_value(&j).unwrap(),
                c.trace.clone(),
                ok,
                summary,
            )
        }
        Command::TruthDomain { expr, expect } => {
            let stmt = scope.build_statement(line, expr)?;
            let labels = logic::truth_domain_of(&stmt)
                .map(|d| d.labels())
                .map_err(|e| ExecError::Invalid {
                    line,
                    msg: e.to_string(),
                })?;
            let ok = expect
                .as_ref()
                .is_none_or(|want| same_labels(&labels, want));
            let summary = format!("{{{}}}", labels.join(","));
            report(
                "truth_domain",
                expr.print(),
                json!({ "truth_domain": labels }),
                vec![],
                ok,
                summary,
            )
        }
        Command::ImplicationType { r, s, expect } => {
            let rr = scope.relation(line, r)?;
            let ss = scope.relation(line, s)?;
            let t = logic::implication_type(&rr, &ss).map_err(|e| ExecError::Invalid {
                line,
                msg: e.to_string(),
            })?;
            let ok = expect.as_ref().is_none_or(|want| t.label() == want);
            report(
                "implication_type",
                format!("{r} {s}"),
                json!({ "label": t.label(), "flags": t }),
                vec![],
                ok,
                t.label(),
            )
        }
        Command::Taxonomy { name, expect } => {
            let p = scope.plurality(line, name)?;
            let t = pluralities::taxonomy_report(p);
            let ok = expect.as_ref().is_none_or(|want| &t.code == want);
            let summary = t.code.clone();
            report(
                "taxonomy",
                name,
                serde_json::to_value(&t).unwrap(),
                t.axes.trace.clone(),
                ok,
                summary,
            )
        }
        Command::FilterQ { name, expect } => {
            let p = scope.plurality(line, name)?;
            let f = pluralities::is_filter(p);
            let ok = expect.is_none_or(|want| f.verdict == want);
            let summary = format!(
                "{} (code {}, minimal element: {})",
                f.verdict,
                f.code.code_string(),
                f.minimal
            );
            report(
                "filter?",
                name,
                serde_json::to_value(&f).unwrap(),
                vec![],
                ok,
                summary,
            )
        }
        Command::GroupQ { name, expect } => {
            let p = scope.plurality(line, name)?;
            let g = pluralities::check_group(p);
            let ok = expect.is_none_or(|want| g.is_group == want);
            let summary = if g.is_group {
                "true".to_string()
            } else {
                format!("false ({})", g.failures.join("; "))
            };
            report(
                "group?",
                name,
                serde_json::to_value(&g).unwrap(),
                g.trace.clone(),
                ok,
                summary,
            )
        }
        Command::OrderReport { name, expect } => {
            let o = scope.order(line, name)?;
            let r = orders::order_report(o);
            let mut ok = true;
            if let Some(e) = expect {
                ok = format!("{:?}", r.kind) == e.kind;
                if let Some(chain) = &e.chain {
                    ok = ok && r.chain.as_deref() == Some(chain.as_slice());
                }
                if let Some(minimal) = &e.minimal {
                    ok = ok && r.minimal == *minimal;
                }
                if let Some(maximals) = &e.maximals {
                    ok = ok && same_labels(&r.maximals, maximals);
                }
                if let Some(roots) = &e.roots {
                    ok = ok && same_labels(&r.roots, roots);
                }
            }
            let mut summary = format!("{:?}", r.kind);
            if let Some(chain) = &r.chain {
                summary.push_str(&format!(" chain {{{}}}", chain.join(",")));
            } else {
                summary.push_str(&format!(
                    " minimal {} maximals {{{}}} roots {{{}}}",
                    r.minimal.as_deref().unwrap_or("none"),
                    r.maximals.join(","),
                    r.roots.join(",")
                ));
            }
            report(
                "order",
                name,
                serde_json::to_value(&r).unwrap(),
                vec![],
                ok,
                summary,
            )
        }
        Command::Compare { order, x, y, expect } => {
            let o = scope.order(line, order)?;
            let px = lookup(o.universe(), line, x)?;
            let py = lookup(o.universe(), line, y)?;
            let c = orders::compare(o, px, py);
            let got = format!("{c:?}");
            let ok = expect.as_ref().is_none_or(|want| &got == want);
            report(
                "compare",
                format!("{order} {x} {y}"),
                json!({ "comparison": got }),
                vec![],
                ok,
                got,
            )
        }
        Command::Laws { trials, seed } => {
            let u = match scope.universe.clone() {
                Some(u) => u,
                None => Universe::range(1, 12).unwrap(),
            };
            let trials = trials.unwrap_or(2000);
            let seed = seed.unwrap_or(scope.seed);
            let suites = [
                logic::check_laws(&u, trials, seed),
                check_set_laws(&u, trials, seed),
                check_relation_laws(&u, trials, seed),
            ];
            let ok = suites.iter().all(|s| s.passed());
            let checks: Vec<Value> = suites
                .iter()
                .flat_map(|s| {
                    s.checks.iter().map(move |c| {
                        json!({
                            "suite": s.suite,
                            "law": c.law,
                            "trials": c.trials,
                            "failures": c.failures,
                            "notes": c.notes,
                        })
                    })
                })
                .collect();
            let failed: Vec<&str> = suites
                .iter()
                .flat_map(|s| s.failures())
                .map(|c| c.law.as_str())
                .collect();
            let summary = if ok {
                format!("all laws hold ({} trials)", trials)
            } else {
                format!("failures: {}", failed.join(", "))
            };
            report(
                "laws",
                format!("trials {trials}"),
                json!({ "passed": ok, "checks": checks }),
                vec![],
                ok,
                summary,
            )
        }
        Command::RefuteClassical { seed } => {
            let u = match scope.universe.clone() {
                Some(u) => u,
                None => Universe::range(1, 12).unwrap(),
            };
            let seed = seed.unwrap_or(scope.seed);
            let r = logic::refute_classical_laws(&u, seed);
            let ok = r.passed();
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "law": c.law,
                        "failures": c.failures,
                        "notes": c.notes,
                    })
                })
                .collect();
            let summary = if ok {
                "all classical laws refuted".to_string()
            } else {
                format!(
                    "not refuted: {}",
                    r.failures()
                        .iter()
                        .map(|c| c.law.as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            report(
                "refute_classical",
                format!("seed {seed}"),
                json!({ "refuted": ok, "checks": checks }),
                vec![],
                ok,
                summary,
            )
        }
        Command::Bijection {
            x,
            y,
            p,
            q,
            expect_bijective,
        } => {
            let xs = scope.set(line, x)?;
            let ys = scope.set(line, y)?;
            let pr = scope.relation(line, p)?;
            let qr = scope.relation(line, q)?;
            let target = format!("{x} {y} {p} {q}");
            match schroder_bernstein(xs, ys, &pr, &qr) {
                Ok(out) => {
                    let pairs: Vec<[String; 2]> = out
                        .bijection
                        .pairs()
                        .map(|(a, b)| {
                            [
                                xs.universe().label(a).to_string(),
                                xs.universe().label(b).to_string(),
                            ]
                        })
                        .collect();
                    let summary = format!(
                        "bijective ({} pairs, crossover region {{{}}})",
                        pairs.len(),
                        out.y0.labels().join(",")
                    );
                    report(
                        "bijection",
                        target,
                        json!({
                            "bijective": true,
                            "pairs": pairs,
                            "y0": out.y0.labels(),
                            "fixpoint_ok": out.fixpoint_ok,
                            "complement_ok": out.complement_ok,
                        }),
                        vec![],
                        out.fixpoint_ok && out.complement_ok,
                        summary,
                    )
                }
                Err(e) => report(
                    "bijection",
                    target,
                    json!({ "bijective": false, "error": e.to_string() }),
                    vec![],
                    !expect_bijective,
                    format!("failed: {e}"),
                ),
            }
        }
        Command::Diagonal {
            base,
            rule,
            words,
            expect_differs,
            expect_hazard,
        } => {
            let parsed: Vec<Word> = words
                .iter()
                .map(|w| parse_word(*base, w, line))
                .collect::<Result<_, _>>()?;
            let rule = match rule {
                DiagRule::Flip => DiagonalRule::Flip,
                DiagRule::Adversarial => DiagonalRule::Adversarial,
            };
            let d = diagonal(&parsed, *base, rule).map_err(|e| ExecError::Invalid {
                line,
                msg: e.to_string(),
            })?;
            let mut ok = true;
            if *expect_differs {
                ok = ok && d.differs_at_all;
            }
            if *expect_hazard {
                ok = ok && d.dead_hazard;
            }
            let summary = format!(
                "word {} differs {} hazard {}",
                d.word, d.differs_at_all, d.dead_hazard
            );
            report(
                "diagonal",
                format!("base {base}"),
                json!({
                    "word": d.word.to_string(),
                    "digits": d.digits,
                    "differs_at_all": d.differs_at_all,
                    "dead_hazard": d.dead_hazard,
                }),
                vec![],
                ok,
                summary,
            )
        }
        Command::CantorQ {
            numer,
            denom,
            depth,
            expect,
        } => {
            if *denom == 0 {
                return Err(ExecError::Invalid {
                    line,
                    msg: "zero denominator".into(),
                });
            }
            let v = BigRational::new((*numer).into(), (*denom).into());
            let member = cantor_membership(&v, *depth);
            let ok = expect.is_none_or(|want| member == want);
            report(
                "cantor?",
                format!("{numer}/{denom}"),
                json!({ "member": member, "depth": depth }),
                vec![],
                ok,
                member.to_string(),
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn run(src: &str) -> Vec<Report> {
        run_script(&parse(src).unwrap(), 1).unwrap()
    }

    #[test]
    fn classify_with_expectation() {
        let reports = run(
            "universe F = 1..12\n\
             relation r2(m,n) := n == m and m % 2 == 0\n\
             relation r3(m,n) := n == m and m % 3 == 0\n\
             classify and(r2, r3) expect Sensible domain {6, 12}",
        );
        assert_eq!(reports.len(), 1);
        assert!(reports[0].ok, "{}", reports[0].summary);
    }

    #[test]
    fn wrong_expectation_flags_mismatch() {
        let reports = run(
            "universe F = 1..12\n\
             relation r2(m,n) := n == 2 * m\n\
             classify r2 expect Indefinite",
        );
        assert!(!reports[0].ok);
    }

    #[test]
    fn orders_and_compare() {
        let reports = run(
            "order zz = zigzag(8)\n\
             order zz expect Linear chain {0, 2, 4, 6, 7, 5, 3, 1}\n\
             compare zz 2 7 expect Less",
        );
        assert!(reports.iter().all(|r| r.ok));
    }

    #[test]
    fn word_literals() {
        let w = parse_word(2, "11(01)", 1).unwrap();
        assert_eq!(w.to_string(), "2:1(10)");
        let dead = parse_word(3, "21", 1).unwrap();
        assert!(dead.is_dead());
    }

    #[test]
    fn undeclared_name_is_an_error() {
        let err = run_script(&parse("classify ghost").unwrap(), 1).unwrap_err();
        assert!(matches!(err, ExecError::Undeclared { .. }));
    }
}

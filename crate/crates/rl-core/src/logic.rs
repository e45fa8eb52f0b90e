//! Four-way classification of compound statements: Sensible, Indefinite,
//! Nonsense, with Absurd as a proper refinement of Nonsense.
//!
//! Classification is bottom-up. Atoms are sensible exactly when their
//! truthfulness domain is nonempty; connectives are sensible only under the
//! domain side-conditions of the conjunction, disjunction and implication
//! axioms; tag stacks normalize innermost-first, with a clash (affirming the
//! truth of a lie or the lie of a truth) collapsing to Absurd.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::relation::Relation;
use crate::report::{LawCheck, LawReport};
use crate::sets::PointSet;
use crate::universe::{PointId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("statement is not sensible: {0}")]
    NotSensible(String),
    #[error("nonsense statements have no verdicts: {0}")]
    NonsenseEval(String),
    #[error("operand classifies indefinite")]
    IndefiniteOperand,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Tr,
    Li,
}

/// Per-point verdict: true, lying, or primitive (no truth machinery).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Tr,
    Li,
    Pr,
}

/// AST of compound statements over relations on one shared universe.
#[derive(Debug, Clone)]
pub enum Statement {
    Atom(Arc<Relation>),
    Tagged(Box<Statement>, Tag),
    And(Box<Statement>, Box<Statement>),
    Or(Box<Statement>, Box<Statement>),
    Implies(Box<Statement>, Box<Statement>),
    Iff(Box<Statement>, Box<Statement>),
    /// Tag-quantification over a declared finite field of relations.
    ForAllField(Vec<Arc<Relation>>, Tag),
    ExistsField(Vec<Arc<Relation>>, Tag),
    /// A conjunction chain folded left-to-right up to the bound.
    Chain(Vec<Statement>, usize),
}

impl Statement {
    pub fn atom(r: Relation) -> Statement {
        Statement::Atom(Arc::new(r))
    }

    pub fn tagged(s: Statement, tag: Tag) -> Statement {
        Statement::Tagged(Box::new(s), tag)
    }

    pub fn and(a: Statement, b: Statement) -> Statement {
        Statement::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Statement, b: Statement) -> Statement {
        Statement::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Statement, b: Statement) -> Statement {
        Statement::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Statement, b: Statement) -> Statement {
        Statement::Iff(Box::new(a), Box::new(b))
    }

    /// The universe every referenced relation lives on.
    pub fn universe(&self) -> Option<Arc<Universe>> {
        match self {
            Statement::Atom(r) => Some(r.universe().clone()),
            Statement::Tagged(s, _) => s.universe(),
            Statement::And(a, b)
            | Statement::Or(a, b)
            | Statement::Implies(a, b)
            | Statement::Iff(a, b) => a.universe().or_else(|| b.universe()),
            Statement::ForAllField(f, _) | Statement::ExistsField(f, _) => {
                f.first().map(|r| r.universe().clone())
            }
            Statement::Chain(ss, _) => ss.iter().find_map(Statement::universe),
        }
    }
}

/// Statement-level class. Absurd statements are the self-refuting proper
/// subclass of nonsense statements.
#[derive(Debug, Clone, PartialEq)]
pub enum Class {
    Sensible(PointSet),
    Indefinite(String),
    Nonsense(String),
    Absurd(String),
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub class: Class,
    pub trace: Vec<String>,
}

impl Classification {
    pub fn is_sensible(&self) -> bool {
        matches!(self.class, Class::Sensible(_))
    }

    pub fn domain(&self) -> Option<&PointSet> {
        match &self.class {
            Class::Sensible(d) => Some(d),
            _ => None,
        }
    }

    pub fn class_name(&self) -> &'static str {
        match &self.class {
            Class::Sensible(_) => "Sensible",
            Class::Indefinite(_) => "Indefinite",
            Class::Nonsense(_) => "Nonsense",
            Class::Absurd(_) => "Absurd",
        }
    }

    fn with(mut self, line: impl Into<String>) -> Classification {
        self.trace.push(line.into());
        self
    }
}

/// Serialized shape: Absurd is reported as Nonsense with the absurd flag set.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationJson {
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth_domain: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub absurd: bool,
    pub trace: Vec<String>,
}

impl Classification {
    pub fn to_json(&self) -> ClassificationJson {
        match &self.class {
            Class::Sensible(d) => ClassificationJson {
                class: "Sensible".into(),
                truth_domain: Some(d.labels()),
                reason: None,
                absurd: false,
                trace: self.trace.clone(),
            },
            Class::Indefinite(r) => ClassificationJson {
                class: "Indefinite".into(),
                truth_domain: None,
                reason: Some(r.clone()),
                absurd: false,
                trace: self.trace.clone(),
            },
            Class::Nonsense(r) => ClassificationJson {
                class: "Nonsense".into(),
                truth_domain: None,
                reason: Some(r.clone()),
                absurd: false,
                trace: self.trace.clone(),
            },
            Class::Absurd(r) => ClassificationJson {
                class: "Nonsense".into(),
                truth_domain: None,
                reason: Some(r.clone()),
                absurd: true,
                trace: self.trace.clone(),
            },
        }
    }
}

fn sensible(domain: PointSet, line: impl Into<String>) -> Classification {
    Classification {
        class: Class::Sensible(domain),
        trace: vec![line.into()],
    }
}

fn indefinite(reason: impl Into<String>) -> Classification {
    let reason = reason.into();
    Classification {
        trace: vec![format!("indefinite: {reason}")],
        class: Class::Indefinite(reason),
    }
}

fn nonsense(reason: impl Into<String>) -> Classification {
    let reason = reason.into();
    Classification {
        trace: vec![format!("nonsense: {reason}")],
        class: Class::Nonsense(reason),
    }
}

fn absurd(reason: impl Into<String>) -> Classification {
    let reason = reason.into();
    Classification {
        trace: vec![format!("absurd: {reason}")],
        class: Class::Absurd(reason),
    }
}

/// Normalize a tag stack innermost-first. Equal adjacent tags cancel to Tr
/// (the double-negation law); a clash is absurd (the law of absurdity).
/// Returns None on a clash, otherwise the single effective tag.
fn fold_tags(tags: &[Tag]) -> Option<Tag> {
    let mut state: Option<Tag> = None;
    for &t in tags {
        state = match (state, t) {
            (None, t) => Some(t),
            (Some(Tag::Tr), Tag::Tr) => Some(Tag::Tr),
            (Some(Tag::Li), Tag::Li) => Some(Tag::Tr),
            (Some(Tag::Tr), Tag::Li) | (Some(Tag::Li), Tag::Tr) => return None,
        };
    }
    state
}

/// Combine two operand classifications under conjunction semantics.
/// Nonsense and absurdity propagate; an indefinite operand leaves the
/// conjunction indefinite.
fn combine_and(a: Classification, b: Classification) -> Classification {
    match (&a.class, &b.class) {
        (Class::Absurd(_), _) => a.with("conjunction: absurd operand propagates"),
        (_, Class::Absurd(_)) => b.with("conjunction: absurd operand propagates"),
        (Class::Nonsense(_), _) => a.with("conjunction: nonsense operand propagates"),
        (_, Class::Nonsense(_)) => b.with("conjunction: nonsense operand propagates"),
        (Class::Indefinite(_), _) => a.with("conjunction: indefinite operand propagates"),
        (_, Class::Indefinite(_)) => b.with("conjunction: indefinite operand propagates"),
        (Class::Sensible(da), Class::Sensible(db)) => {
            let inter = da.intersection(db).expect("shared universe");
            if !inter.is_empty() {
                let mut c = sensible(inter, "conjunction sensible: domains overlap");
                c.trace.splice(0..0, a.trace.iter().cloned().chain(b.trace.iter().cloned()));
                c
            } else if *db == da.complement() {
                absurd("one part of the conjunction refuses the other (complementary domains)")
            } else {
                nonsense("conjunction with empty truthfulness domain")
            }
        }
    }
}

fn combine_or(a: Classification, b: Classification) -> Classification {
    match (&a.class, &b.class) {
        (Class::Absurd(_), _) => a.with("disjunction: absurd operand propagates"),
        (_, Class::Absurd(_)) => b.with("disjunction: absurd operand propagates"),
        (Class::Nonsense(_), _) => a.with("disjunction: nonsense operand propagates"),
        (_, Class::Nonsense(_)) => b.with("disjunction: nonsense operand propagates"),
        (Class::Indefinite(_), _) => a.with("disjunction: indefinite operand propagates"),
        (_, Class::Indefinite(_)) => b.with("disjunction: indefinite operand propagates"),
        (Class::Sensible(da), Class::Sensible(db)) => {
            let union = da.union(db).expect("shared universe");
            let mut c = sensible(union, "disjunction sensible for any sensible operands");
            c.trace.splice(0..0, a.trace.iter().cloned().chain(b.trace.iter().cloned()));
            c
        }
    }
}

fn propagate_pair(
    a: Classification,
    b: Classification,
    ctx: &str,
) -> Result<(PointSet, PointSet), Classification> {
    match (&a.class, &b.class) {
        (Class::Absurd(_), _) => Err(a.with(format!("{ctx}: absurd operand propagates"))),
        (_, Class::Absurd(_)) => Err(b.with(format!("{ctx}: absurd operand propagates"))),
        (Class::Nonsense(_), _) => Err(a.with(format!("{ctx}: nonsense operand propagates"))),
        (_, Class::Nonsense(_)) => Err(b.with(format!("{ctx}: nonsense operand propagates"))),
        (Class::Indefinite(_), _) => Err(a.with(format!("{ctx}: indefinite operand propagates"))),
        (_, Class::Indefinite(_)) => Err(b.with(format!("{ctx}: indefinite operand propagates"))),
        (Class::Sensible(da), Class::Sensible(db)) => Ok((da.clone(), db.clone())),
    }
}

/// Bottom-up classification; total over well-formed ASTs.
pub fn classify(stmt: &Statement) -> Classification {
    match stmt {
        Statement::Atom(r) => {
            let domain = r.truth_domain();
            if domain.is_empty() {
                indefinite("relation undefined in the field of primitives (empty truthfulness domain)")
            } else {
                let name = r.name().unwrap_or("relation");
                sensible(domain, format!("atom {name} sensible with its truthfulness domain"))
            }
        }
        Statement::Tagged(_, _) => {
            // Collect the full tag stack down to the first non-tag node, then
            // normalize innermost-first.
            let mut tags = Vec::new();
            let mut base = stmt;
            while let Statement::Tagged(inner, t) = base {
                tags.push(*t);
                base = inner;
            }
            tags.reverse(); // innermost first
            match fold_tags(&tags) {
                None => absurd("tag clash: affirming the lie of a truth or the truth of a lie"),
                Some(effective) => {
                    let inner = classify(base);
                    match (&inner.class, effective) {
                        (Class::Sensible(_), Tag::Tr) => {
                            inner.with("tag stack normalizes to Tr: domain unchanged")
                        }
                        (Class::Sensible(d), Tag::Li) => {
                            let comp = d.complement();
                            let mut c = sensible(comp, "tag stack normalizes to Li: complemented domain");
                            c.trace.splice(0..0, inner.trace.iter().cloned());
                            c
                        }
                        _ => inner.with("tagging a non-sensible statement propagates its class"),
                    }
                }
            }
        }
        Statement::And(a, b) => combine_and(classify(a), classify(b)),
        Statement::Or(a, b) => combine_or(classify(a), classify(b)),
        Statement::Implies(a, b) => {
            let (da, db) = match propagate_pair(classify(a), classify(b), "implication") {
                Ok(p) => p,
                Err(c) => return c,
            };
            let whole = PointSet::whole(da.universe());
            if da == db {
                sensible(whole, "implication sensible: equal truthfulness domains")
            } else if db == da.complement() || da == db.complement() {
                sensible(whole, "implication sensible: cross-complement domains")
            } else {
                nonsense("implication between domains neither equal nor complementary")
            }
        }
        Statement::Iff(a, b) => {
            let (da, db) = match propagate_pair(classify(a), classify(b), "equivalence") {
                Ok(p) => p,
                Err(c) => return c,
            };
            let u = da.universe().clone();
            if da == db {
                sensible(PointSet::whole(&u), "equivalence true: equal truthfulness domains")
            } else if db == da.complement() {
                sensible(
                    PointSet::empty(&u),
                    "equivalence lying: cross-complement domains (both one-sided implications sensible)",
                )
            } else {
                nonsense("equivalence between domains neither equal nor complementary")
            }
        }
        Statement::ForAllField(field, tag) => match tag {
            Tag::Li => {
                if field.iter().any(|r| !r.truth_domain().is_empty()) {
                    absurd("the liar: affirming that every statement of the field lies")
                } else {
                    indefinite("every field member is undefined")
                }
            }
            Tag::Tr => {
                if field.iter().any(|r| r.truth_domain().is_empty()) {
                    indefinite("a field member is undefined")
                } else if field
                    .iter()
                    .all(|r| r.truth_domain() == PointSet::whole(r.universe()))
                {
                    let u = field[0].universe().clone();
                    sensible(PointSet::whole(&u), "every field member is true everywhere")
                } else {
                    absurd("affirming the truth of a lying state of things in the field")
                }
            }
        },
        Statement::ExistsField(field, tag) => match tag {
            Tag::Li => indefinite("the sensible statement 'I lie' is indefinite"),
            Tag::Tr => {
                let mut union: Option<PointSet> = None;
                for r in field {
                    let d = r.truth_domain();
                    union = Some(match union {
                        None => d,
                        Some(acc) => acc.union(&d).expect("shared universe"),
                    });
                }
                match union {
                    Some(d) if !d.is_empty() => {
                        sensible(d, "some field member holds somewhere")
                    }
                    _ => indefinite("no field member has truth machinery"),
                }
            }
        },
        Statement::Chain(parts, bound) => {
            let read = (*bound).min(parts.len());
            if read == 0 {
                return indefinite("empty chain prefix");
            }
            let mut acc = classify(&parts[0]);
            for (i, part) in parts.iter().enumerate().skip(1).take(read - 1) {
                acc = combine_and(acc, classify(part));
                if !acc.is_sensible() {
                    // The running domain emptied (or an operand failed) while
                    // statements remain unread: the chain is unresolved.
                    if i + 1 < parts.len() || read < parts.len() {
                        return indefinite(
                            "chain unresolved: prefix domain emptied with conjuncts remaining",
                        );
                    }
                    return acc;
                }
            }
            acc.with(format!("chain prefix of {read} conjuncts folded"))
        }
    }
}

/// Truth domain of a sensible statement.
pub fn truth_domain_of(stmt: &Statement) -> Result<PointSet, LogicError> {
    let c = classify(stmt);
    match c.class {
        Class::Sensible(d) => Ok(d),
        other => Err(LogicError::NotSensible(format!("{other:?}"))),
    }
}

/// Per-point verdict of a sensible or indefinite statement.
pub fn eval_at(stmt: &Statement, x: PointId) -> Result<Verdict, LogicError> {
    let c = classify(stmt);
    match c.class {
        Class::Sensible(d) => Ok(if d.contains(x) { Verdict::Tr } else { Verdict::Li }),
        Class::Indefinite(_) => Ok(Verdict::Pr),
        other => Err(LogicError::NonsenseEval(format!("{other:?}"))),
    }
}

/// Which of the sensible-implication conditions a pair of relations meets.
/// On a finite universe the two cross-complement readings coincide; both
/// flags are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ImplicationType {
    pub same_domain: bool,
    pub lie_implies_true: bool,
    pub true_implies_lie: bool,
}

impl ImplicationType {
    pub fn label(&self) -> &'static str {
        if self.same_domain {
            "SameDomain"
        } else if self.lie_implies_true || self.true_implies_lie {
            "CrossComplement"
        } else {
            "None"
        }
    }

    pub fn is_sensible(&self) -> bool {
        self.same_domain || self.lie_implies_true || self.true_implies_lie
    }
}

fn type_of_domains(da: &PointSet, db: &PointSet) -> ImplicationType {
    ImplicationType {
        same_domain: da == db,
        lie_implies_true: *db == da.complement(),
        true_implies_lie: *da == db.complement(),
    }
}

pub fn implication_type(r: &Relation, s: &Relation) -> Result<ImplicationType, LogicError> {
    let da = r.truth_domain();
    let db = s.truth_domain();
    if da.is_empty() || db.is_empty() {
        return Err(LogicError::IndefiniteOperand);
    }
    Ok(type_of_domains(&da, &db))
}

/// Two sensible statements are equipollent when their truth domains agree.
pub fn equipollent(a: &Statement, b: &Statement) -> Result<bool, LogicError> {
    let ca = classify(a);
    let cb = classify(b);
    match (&ca.class, &cb.class) {
        (Class::Sensible(da), Class::Sensible(db)) => Ok(da == db),
        (Class::Indefinite(_), _) | (_, Class::Indefinite(_)) => {
            Err(LogicError::IndefiniteOperand)
        }
        (c, _) => Err(LogicError::NotSensible(format!("{c:?}"))),
    }
}

/// Random relation whose truthfulness domain is exactly `domain`.
fn relation_with_domain(
    u: &Arc<Universe>,
    domain: &PointSet,
    rng: &mut impl Rng,
) -> Relation {
    let n = u.size();
    let mut r = Relation::empty(u);
    for x in domain.iter() {
        r.insert(x, PointId(rng.gen_range(0..n)));
    }
    r
}

fn random_nonempty_domain(u: &Arc<Universe>, rng: &mut impl Rng) -> PointSet {
    loop {
        let pts: Vec<PointId> = u.points().filter(|_| rng.gen_bool(0.5)).collect();
        if !pts.is_empty() {
            return PointSet::from_points(u, pts);
        }
    }
}

/// Randomized run of the seven retained laws R1-R7, each generated with the
/// side-conditions it needs.
pub fn check_laws(u: &Arc<Universe>, trials: u64, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("rl-laws");
    let mut r1 = LawCheck::new("R1 identity");
    let mut r2 = LawCheck::new("R2 third option exclusion");
    let mut r3 = LawCheck::new("R3 absurdity of tag clashes");
    let mut r4 = LawCheck::new("R4 double negation");
    let mut r5 = LawCheck::new("R5 contraposition");
    let mut r6 = LawCheck::new("R6 de Morgan");
    let mut r7 = LawCheck::new("R7 transitivity of implication");
    r2.notes
        .push("empty-domain atoms are indefinite and excluded by generation".into());

    for _ in 0..trials {
        let domain = random_nonempty_domain(u, &mut rng);
        let r = relation_with_domain(u, &domain, &mut rng);
        let atom = Statement::atom(r.clone());

        r1.trials += 1;
        if !equipollent(&atom, &atom).unwrap_or(false) {
            r1.fail(format!("r with domain {domain}"));
        }

        r2.trials += 1;
        let verdict_ok = u.points().all(|x| {
            matches!(eval_at(&atom, x), Ok(Verdict::Tr) | Ok(Verdict::Li))
        });
        if !verdict_ok {
            r2.fail(format!("r with domain {domain}"));
        }

        r3.trials += 1;
        let clash1 = Statement::tagged(Statement::tagged(atom.clone(), Tag::Tr), Tag::Li);
        let clash2 = Statement::tagged(Statement::tagged(atom.clone(), Tag::Li), Tag::Tr);
        if !matches!(classify(&clash1).class, Class::Absurd(_))
            || !matches!(classify(&clash2).class, Class::Absurd(_))
        {
            r3.fail(format!("r with domain {domain}"));
        }

        r4.trials += 1;
        let double = Statement::tagged(Statement::tagged(atom.clone(), Tag::Li), Tag::Li);
        match classify(&double).class {
            Class::Sensible(d) if d == domain => {}
            other => r4.fail(format!("domain {domain}: got {other:?}")),
        }

        // R5: build a sensible implication, same-domain or cross-complement.
        r5.trials += 1;
        let (s_dom, expect_same) = if rng.gen_bool(0.5) {
            (domain.clone(), true)
        } else {
            let comp = domain.complement();
            if comp.is_empty() {
                (domain.clone(), true)
            } else {
                (comp, false)
            }
        };
        let s = relation_with_domain(u, &s_dom, &mut rng);
        let s_atom = Statement::atom(s.clone());
        let imp = Statement::implies(atom.clone(), s_atom.clone());
        if classify(&imp).is_sensible() {
            let contra = Statement::implies(
                Statement::tagged(s_atom.clone(), Tag::Li),
                Statement::tagged(atom.clone(), Tag::Li),
            );
            let direct_type = type_of_domains(&domain, &s_dom);
            let contra_type = type_of_domains(&s_dom.complement(), &domain.complement());
            if !classify(&contra).is_sensible() || direct_type.label() != contra_type.label() {
                r5.fail(format!("I_r={domain} I_s={s_dom}"));
            }
            if direct_type.same_domain != expect_same {
                r5.fail(format!("generation mismatch I_r={domain} I_s={s_dom}"));
            }
        } else {
            r5.fail(format!("generated implication not sensible: I_r={domain} I_s={s_dom}"));
        }

        // R6 needs overlapping, non-covering domains.
        r6.trials += 1;
        let mut overlap_dom = None;
        for _ in 0..50 {
            let cand = random_nonempty_domain(u, &mut rng);
            let inter = cand.intersection(&domain).unwrap();
            let union = cand.union(&domain).unwrap();
            if !inter.is_empty() && union.len() < u.size() {
                overlap_dom = Some(cand);
                break;
            }
        }
        if let Some(s_dom) = overlap_dom {
            let s = relation_with_domain(u, &s_dom, &mut rng);
            let s_atom = Statement::atom(s);
            let lhs1 = Statement::tagged(Statement::and(atom.clone(), s_atom.clone()), Tag::Li);
            let rhs1 = Statement::or(
                Statement::tagged(atom.clone(), Tag::Li),
                Statement::tagged(s_atom.clone(), Tag::Li),
            );
            let lhs2 = Statement::tagged(Statement::or(atom.clone(), s_atom.clone()), Tag::Li);
            let rhs2 = Statement::and(
                Statement::tagged(atom.clone(), Tag::Li),
                Statement::tagged(s_atom.clone(), Tag::Li),
            );
            let pairs = [(lhs1, rhs1), (lhs2, rhs2)];
            for (lhs, rhs) in &pairs {
                match (truth_domain_of(lhs), truth_domain_of(rhs)) {
                    (Ok(a), Ok(b)) if a == b => {}
                    other => r6.fail(format!("I_r={domain} I_s={s_dom}: {other:?}")),
                }
            }
        } else {
            r6.notes.push("no overlapping non-covering partner found; trial skipped".into());
        }

        // R7: three relations sharing one truthfulness domain.
        r7.trials += 1;
        let s = relation_with_domain(u, &domain, &mut rng);
        let t = relation_with_domain(u, &domain, &mut rng);
        let rs = Statement::implies(Statement::atom(r.clone()), Statement::atom(s.clone()));
        let st = Statement::implies(Statement::atom(s), Statement::atom(t.clone()));
        let rt = Statement::implies(Statement::atom(r.clone()), Statement::atom(t));
        if !(classify(&rs).is_sensible()
            && classify(&st).is_sensible()
            && classify(&rt).is_sensible())
        {
            r7.fail(format!("shared domain {domain}"));
        }
    }
    report.checks = vec![r1, r2, r3, r4, r5, r6, r7];
    report
}

/// For each rejected classical law C1-C5, construct a relation pair on the
/// universe whose domains violate the implication side-condition and show the
/// classical tautology classifying Nonsense.
pub fn refute_classical_laws(u: &Arc<Universe>, seed: u64) -> LawReport {
    assert!(u.size() >= 3, "refutation construction needs at least 3 points");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("rejected-classical-laws");

    // Overlapping, unequal, non-complementary domains with a proper union:
    // enough to break every C-law side-condition at once.
    let (dr, ds) = loop {
        let dr = random_nonempty_domain(u, &mut rng);
        let ds = random_nonempty_domain(u, &mut rng);
        let inter = dr.intersection(&ds).unwrap();
        let union = dr.union(&ds).unwrap();
        let ok = !inter.is_empty()
            && dr != ds
            && ds != dr.complement()
            && union.len() < u.size()
            && inter != dr
            && inter != ds;
        if ok {
            break (dr, ds);
        }
    };
    let r = Statement::atom(relation_with_domain(u, &dr, &mut rng).named("r"));
    let s = Statement::atom(relation_with_domain(u, &ds, &mut rng).named("s"));

    let check = |name: &str, stmt: Statement, note: String| {
        let mut c = LawCheck::new(name);
        c.trials = 1;
        c.notes.push(note);
        let cls = classify(&stmt);
        match cls.class {
            Class::Nonsense(_) | Class::Absurd(_) => {}
            other => c.fail(format!("expected Nonsense, got {other:?}")),
        }
        c
    };

    let c1 = check(
        "C1 (r and s) -> r",
        Statement::implies(Statement::and(r.clone(), s.clone()), r.clone()),
        format!("I_r={dr} I_s={ds}: intersection differs from I_r"),
    );
    let c2 = check(
        "C2 r -> (s or r)",
        Statement::implies(r.clone(), Statement::or(s.clone(), r.clone())),
        format!("I_r={dr} union={}: differs from I_r", dr.union(&ds).unwrap()),
    );
    let c3 = check(
        "C3 (any s) -> r",
        Statement::implies(s.clone(), r.clone()),
        "a true assertion does not proceed from an arbitrary assertion".into(),
    );
    let c4 = check(
        "C4 r -> (r -> s)",
        Statement::implies(r.clone(), Statement::implies(r.clone(), s.clone())),
        "the inner implication is nonsense and propagates".into(),
    );
    let c5 = check(
        "C5 (r -> s) or (s -> r)",
        Statement::or(
            Statement::implies(r.clone(), s.clone()),
            Statement::implies(s, r),
        ),
        "both directions are nonsense".into(),
    );
    report.checks = vec![c1, c2, c3, c4, c5];
    report
}

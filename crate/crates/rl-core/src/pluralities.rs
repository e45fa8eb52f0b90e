//! Indexed families of relations: the three-axis reflexivity / symmetry /
//! transitivity taxonomy, upper and lower edges, germ images, filter
//! detection, group verification, and the two parameterized family builders
//! (metric balls and transformation groups).
//!
//! All containments in the taxonomy axioms are read as non-strict: the group
//! example needs the exact inverse of a member to witness normal symmetry,
//! which a strict reading would forbid.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::relation::{relation_properties, Relation, RelationProperties};
use crate::sets::PointSet;
use crate::universe::{same_universe, PointId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PluralityError {
    #[error("a plurality needs at least one member")]
    EmptyFamily,
    #[error("member {0} lives on a different universe")]
    UniverseMismatch(String),
    #[error("duplicate member label {0}")]
    DuplicateLabel(String),
    #[error("ball radius must be positive, got {0}")]
    NonPositiveRadius(i64),
    #[error("metric balls need a numeric universe")]
    NonNumericUniverse,
    #[error("generator is not a permutation: {0}")]
    NotPermutation(String),
}

/// Per-kind analytic rules for families whose true index set is infinite and
/// cannot be materialized (finite truncations would, for example, acquire a
/// minimal element the real family lacks).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SymbolicDescriptor {
    /// Balls |x - y| < alpha with alpha ranging over all positive rationals.
    MetricBallsOpenRadius,
}

/// An indexed family of relations on one shared universe.
#[derive(Debug, Clone)]
pub struct Plurality {
    universe: Arc<Universe>,
    labels: Vec<String>,
    members: Vec<Arc<Relation>>,
    symbolic: Option<SymbolicDescriptor>,
}

impl Plurality {
    pub fn from_members(
        universe: &Arc<Universe>,
        members: Vec<(String, Relation)>,
    ) -> Result<Plurality, PluralityError> {
        if members.is_empty() {
            return Err(PluralityError::EmptyFamily);
        }
        let mut labels = Vec::with_capacity(members.len());
        let mut rels = Vec::with_capacity(members.len());
        for (label, r) in members {
            if !same_universe(r.universe(), universe) {
                return Err(PluralityError::UniverseMismatch(label));
            }
            if labels.contains(&label) {
                return Err(PluralityError::DuplicateLabel(label));
            }
            labels.push(label);
            rels.push(Arc::new(r));
        }
        Ok(Plurality {
            universe: universe.clone(),
            labels,
            members: rels,
            symbolic: None,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = (&str, &Arc<Relation>)> {
        self.labels.iter().map(String::as_str).zip(self.members.iter())
    }

    pub fn is_symbolic(&self) -> bool {
        self.symbolic.is_some()
    }

    pub fn symbolic(&self) -> Option<&SymbolicDescriptor> {
        self.symbolic.as_ref()
    }

    /// Extend with one more member (used by the monotonicity properties).
    pub fn with_member(&self, label: impl Into<String>, r: Relation) -> Result<Plurality, PluralityError> {
        let mut p = self.clone();
        let label = label.into();
        if !same_universe(r.universe(), &p.universe) {
            return Err(PluralityError::UniverseMismatch(label));
        }
        if p.labels.contains(&label) {
            return Err(PluralityError::DuplicateLabel(label));
        }
        p.labels.push(label);
        p.members.push(Arc::new(r));
        Ok(p)
    }
}

/// Achieved level per axis (0 = even the weakest axiom fails), with a witness
/// for the first failed level on each axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TaxonomyCode {
    pub reflexivity: u8,
    pub symmetry: u8,
    pub transitivity: u8,
    pub witnesses: Vec<String>,
    pub trace: Vec<String>,
}

impl TaxonomyCode {
    pub fn code_string(&self) -> String {
        format!("R_{}{}{}", self.reflexivity, self.symmetry, self.transitivity)
    }

    pub fn dominates(&self, r: u8, s: u8, t: u8) -> bool {
        self.reflexivity >= r && self.symmetry >= s && self.transitivity >= t
    }
}

fn union_holds(members: &[Arc<Relation>], x: PointId, y: PointId) -> bool {
    members.iter().any(|r| r.holds(x, y))
}

fn reflexivity_level(p: &Plurality, witnesses: &mut Vec<String>) -> u8 {
    let u = &p.universe;
    // Level 1: every point has a loop in some member.
    for x in u.points() {
        if !p.members.iter().any(|r| r.holds(x, x)) {
            witnesses.push(format!("reflexivity 1 fails: no member loops at {}", u.label(x)));
            return 0;
        }
    }
    // Level 2: one member loops everywhere.
    if !p.members.iter().any(|r| u.points().all(|x| r.holds(x, x))) {
        witnesses.push("reflexivity 2 fails: no single member loops at every point".into());
        return 1;
    }
    // Level 3: every member loops everywhere.
    for (label, r) in p.members() {
        if let Some(x) = p.universe.points().find(|&x| !r.holds(x, x)) {
            witnesses.push(format!(
                "reflexivity 3 fails: member {label} has no loop at {}",
                u.label(x)
            ));
            return 2;
        }
    }
    3
}

fn symmetry_level(p: &Plurality, witnesses: &mut Vec<String>) -> u8 {
    // Level 1: every held pair is reversed somewhere in the family.
    for (label, r) in p.members() {
        for (x, y) in r.pairs() {
            if !union_holds(&p.members, y, x) {
                witnesses.push(format!(
                    "symmetry 1 fails: {label} holds ({},{}) but no member holds the reverse",
                    p.universe.label(x),
                    p.universe.label(y)
                ));
                return 0;
            }
        }
    }
    // Level 2: every member's inverse is contained in some member.
    let inverses: Vec<Relation> = p.members.iter().map(|r| r.inverse()).collect();
    for ((label, _), inv) in p.members().zip(&inverses) {
        if !p.members.iter().any(|s| s.contains_relation(inv)) {
            witnesses.push(format!("symmetry 2 fails: no member contains the inverse of {label}"));
            return 1;
        }
    }
    // Level 3: additionally every member contains some member's inverse.
    // (Read with beta ranging over all members; see the trace note emitted
    // by taxonomy().)
    for (label, s) in p.members() {
        if !inverses.iter().any(|inv| s.contains_relation(inv)) {
            witnesses.push(format!("symmetry 3 fails: {label} contains no member's inverse"));
            return 2;
        }
    }
    // Level 4: every member equals its own inverse.
    for ((label, r), inv) in p.members().zip(&inverses) {
        if r.as_ref() != inv {
            witnesses.push(format!("symmetry 4 fails: {label} is not its own inverse"));
            return 3;
        }
    }
    4
}

fn transitivity_level(p: &Plurality, witnesses: &mut Vec<String>) -> u8 {
    // All ordered compositions r_alpha after r_beta.
    let mut compositions = Vec::new();
    for (la, a) in p.members() {
        for (lb, b) in p.members() {
            let c = a.compose_after(b.as_ref()).expect("shared universe");
            compositions.push((la, lb, c));
        }
    }
    // Level 1: every composed pair is covered pointwise by some member.
    for (la, lb, c) in &compositions {
        for (x, z) in c.pairs() {
            if !union_holds(&p.members, x, z) {
                witnesses.push(format!(
                    "transitivity 1 fails: ({},{}) from {la} after {lb} covered by no member",
                    p.universe.label(x),
                    p.universe.label(z)
                ));
                return 0;
            }
        }
    }
    // Level 2: each composition is contained in a single member.
    for (la, lb, c) in &compositions {
        if !p.members.iter().any(|g| g.contains_relation(c)) {
            witnesses.push(format!(
                "transitivity 2 fails: no member contains {la} after {lb}"
            ));
            return 1;
        }
    }
    // Level 3: every member dominates some composition pointwise at each x.
    for (label, g) in p.members() {
        for x in p.universe.points() {
            let gx = g.image(x);
            if !compositions.iter().any(|(_, _, c)| c.image(x).subset_of(&gx)) {
                witnesses.push(format!(
                    "transitivity 3 fails: {label} at {} dominates no composed image",
                    p.universe.label(x)
                ));
                return 2;
            }
        }
    }
    // Level 4: every member contains some full composition.
    for (label, g) in p.members() {
        if !compositions.iter().any(|(_, _, c)| g.contains_relation(c)) {
            witnesses.push(format!("transitivity 4 fails: {label} contains no composition"));
            return 3;
        }
    }
    4
}

/// Classify a plurality on the three axes, strongest level satisfied per
/// axis. Symbolic families are answered by their per-kind analytic rule.
pub fn taxonomy(p: &Plurality) -> TaxonomyCode {
    if let Some(desc) = &p.symbolic {
        return match desc {
            SymbolicDescriptor::MetricBallsOpenRadius => TaxonomyCode {
                reflexivity: 3,
                symmetry: 4,
                transitivity: 4,
                witnesses: Vec::new(),
                trace: vec![
                    "symbolic family: open-radius metric balls".into(),
                    "every ball loops everywhere (strong reflexivity)".into(),
                    "|x-y| is symmetric (strong symmetry)".into(),
                    "ball(a) after ball(b) sits inside ball(a+b) (uniform transitivity)".into(),
                ],
            },
        };
    }
    let mut witnesses = Vec::new();
    let code = TaxonomyCode {
        reflexivity: reflexivity_level(p, &mut witnesses),
        symmetry: symmetry_level(p, &mut witnesses),
        transitivity: transitivity_level(p, &mut witnesses),
        witnesses,
        trace: vec![
            "containments read as non-strict".into(),
            "symmetry level 3 quantifies beta over all members".into(),
        ],
    };
    debug_assert!(levels_cumulative(p, &code));
    code
}

/// Levels are cumulative by construction of the checkers (each level-k pass
/// re-verifies through the weaker levels); asserted for the explicit case.
fn levels_cumulative(p: &Plurality, code: &TaxonomyCode) -> bool {
    let mut w = Vec::new();
    code.reflexivity <= reflexivity_level(p, &mut w)
        && code.symmetry <= symmetry_level(p, &mut w)
        && code.transitivity <= transitivity_level(p, &mut w)
}

/// Upper edge (union), lower edge (intersection), minimal-element flag and
/// the germ images of the lower edge.
#[derive(Debug, Clone)]
pub struct EdgeReport {
    pub upper_edge: Relation,
    pub lower_edge: Relation,
    pub has_minimal_element: bool,
    pub germ_images: Vec<(String, PointSet)>,
    pub trace: Vec<String>,
}

pub fn edges(p: &Plurality) -> EdgeReport {
    if let Some(SymbolicDescriptor::MetricBallsOpenRadius) = &p.symbolic {
        // Radii are unbounded above and open below: the upper edge is the
        // complete relation, the lower edge the identity, and no single
        // radius realizes the lower edge.
        let u = &p.universe;
        let lower = Relation::identity(u);
        let germ_images = u
            .points()
            .map(|x| (u.label(x).to_string(), lower.image(x)))
            .collect();
        return EdgeReport {
            upper_edge: Relation::complete(u),
            lower_edge: lower,
            has_minimal_element: false,
            germ_images,
            trace: vec![
                "symbolic family: edges by the open-radius rule".into(),
                "no smallest radius, so the lower edge is not a member".into(),
            ],
        };
    }
    let mut upper = p.members[0].as_ref().clone();
    let mut lower = p.members[0].as_ref().clone();
    for r in &p.members[1..] {
        upper = upper.union(r).expect("shared universe");
        lower = lower.intersection(r).expect("shared universe");
    }
    let has_minimal_element = p.members.iter().any(|r| r.as_ref() == &lower);
    let germ_images = p
        .universe
        .points()
        .map(|x| (p.universe.label(x).to_string(), lower.image(x)))
        .collect();
    EdgeReport {
        upper_edge: upper,
        lower_edge: lower,
        has_minimal_element,
        germ_images,
        trace: vec!["edges folded over explicit members".into()],
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterReport {
    pub verdict: bool,
    pub code: TaxonomyCode,
    pub minimal: bool,
}

/// A filter is an R_112-or-stronger plurality without a minimal element.
pub fn is_filter(p: &Plurality) -> FilterReport {
    let code = taxonomy(p);
    let minimal = edges(p).has_minimal_element;
    FilterReport {
        verdict: code.dominates(1, 1, 2) && !minimal,
        code,
        minimal,
    }
}

/// The stratum of x: the upper-edge image J_r[x].
pub fn filter_image(p: &Plurality, x: PointId) -> PointSet {
    edges(p).upper_edge.image(x)
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperEdgeReport {
    pub code_dominates_111: bool,
    pub properties: RelationProperties,
    pub consistent: bool,
    pub notes: Vec<String>,
}

/// When the code dominates (1,1,1) the upper edge must be an equivalence;
/// otherwise report which axis failure breaks which property.
pub fn verify_upper_edge_equivalence(p: &Plurality) -> UpperEdgeReport {
    let code = taxonomy(p);
    let properties = relation_properties(&edges(p).upper_edge);
    let dominates = code.dominates(1, 1, 1);
    let mut notes = Vec::new();
    if dominates {
        notes.push("code dominates (1,1,1): upper edge must be an equivalence".into());
    } else {
        if code.reflexivity < 1 {
            notes.push("weak reflexivity fails: upper edge need not be reflexive".into());
        }
        if code.symmetry < 1 {
            notes.push("weak symmetry fails: upper edge need not be symmetric".into());
        }
        if code.transitivity < 1 {
            notes.push("weak transitivity fails: upper edge need not be transitive".into());
        }
        notes.extend(code.witnesses.iter().cloned());
    }
    let consistent = !dominates || properties.equivalence;
    UpperEdgeReport {
        code_dominates_111: dominates,
        properties,
        consistent,
        notes,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub is_group: bool,
    pub failures: Vec<String>,
    pub trace: Vec<String>,
}

fn is_permutation_graph(r: &Relation) -> bool {
    let u = r.universe();
    let total_single = u.points().all(|x| r.image(x).len() == 1);
    let inv = r.inverse();
    total_single && u.points().all(|y| inv.image(y).len() == 1)
}

/// A plurality of total bijective mappings containing the identity and
/// closed under inverse and composition is a group; composition
/// associativity is inherited from associativity of relation composition.
pub fn check_group(p: &Plurality) -> GroupReport {
    let mut failures = Vec::new();
    let id = Relation::identity(&p.universe);
    for (label, r) in p.members() {
        if !is_permutation_graph(r) {
            failures.push(format!("member {label} is not a total bijective mapping"));
        }
    }
    if !p.members.iter().any(|r| r.as_ref() == &id) {
        failures.push("no identity member".into());
    }
    for (label, r) in p.members() {
        let inv = r.inverse();
        if !p.members.iter().any(|s| s.as_ref() == &inv) {
            failures.push(format!("inverse of {label} is not a member"));
        }
    }
    for (la, a) in p.members() {
        for (lb, b) in p.members() {
            let c = a.compose_after(b.as_ref()).expect("shared universe");
            if !p.members.iter().any(|s| s.as_ref() == &c) {
                failures.push(format!("{la} after {lb} is not a member"));
            }
        }
    }
    GroupReport {
        is_group: failures.is_empty(),
        failures,
        trace: vec!["associativity of composition of relations".into()],
    }
}

/// Ball relation |x - y| < radius on a numeric universe.
fn ball(u: &Arc<Universe>, radius: i64) -> Result<Relation, PluralityError> {
    if u.points().any(|p| u.numeric(p).is_none()) {
        return Err(PluralityError::NonNumericUniverse);
    }
    Ok(Relation::from_predicate(u, |x, y| {
        let a = u.numeric(x).unwrap();
        let b = u.numeric(y).unwrap();
        (a - b).abs() < radius
    }))
}

fn permutation_relation(
    u: &Arc<Universe>,
    map: &[usize],
) -> Result<Relation, PluralityError> {
    let n = u.size();
    let mut seen = vec![false; n];
    if map.len() != n {
        return Err(PluralityError::NotPermutation(format!("{map:?}")));
    }
    for &t in map {
        if t >= n || seen[t] {
            return Err(PluralityError::NotPermutation(format!("{map:?}")));
        }
        seen[t] = true;
    }
    Ok(Relation::from_pairs(
        u,
        map.iter().enumerate().map(|(i, &t)| (PointId(i), PointId(t))),
    ))
}

fn permutation_label(map: &[usize]) -> String {
    let body: Vec<String> = map.iter().map(|t| t.to_string()).collect();
    format!("p[{}]", body.join(" "))
}

pub enum FamilyParams {
    /// Explicit radii; each must be positive.
    MetricBalls { radii: Vec<i64> },
    /// Radius ranges over all positive rationals; answered analytically.
    MetricBallsSymbolic,
    /// Generator permutations given as index maps; closed into a group.
    TransformationGroup { generators: Vec<Vec<usize>> },
}

pub fn make_family(
    u: &Arc<Universe>,
    params: FamilyParams,
) -> Result<Plurality, PluralityError> {
    match params {
        FamilyParams::MetricBalls { radii } => {
            let mut members = Vec::new();
            for r in radii {
                if r <= 0 {
                    return Err(PluralityError::NonPositiveRadius(r));
                }
                members.push((format!("ball{r}"), ball(u, r)?));
            }
            Plurality::from_members(u, members)
        }
        FamilyParams::MetricBallsSymbolic => {
            if u.points().any(|p| u.numeric(p).is_none()) {
                return Err(PluralityError::NonNumericUniverse);
            }
            // A representative truncation is materialized for display; all
            // structural questions go through the symbolic rule.
            let members = vec![
                ("ball1".to_string(), ball(u, 1)?),
                ("ball2".to_string(), ball(u, 2)?),
            ];
            let mut p = Plurality::from_members(u, members)?;
            p.symbolic = Some(SymbolicDescriptor::MetricBallsOpenRadius);
            Ok(p)
        }
        FamilyParams::TransformationGroup { generators } => {
            let mut maps: Vec<Vec<usize>> = vec![(0..u.size()).collect()];
            for g in &generators {
                permutation_relation(u, g)?; // validate
                if !maps.contains(g) {
                    maps.push(g.clone());
                }
            }
            // Close under composition (finite, so inverses come for free).
            let mut frontier = maps.clone();
            while let Some(m) = frontier.pop() {
                for g in maps.clone() {
                    let composed: Vec<usize> = (0..u.size()).map(|i| m[g[i]]).collect();
                    if !maps.contains(&composed) {
                        maps.push(composed.clone());
                        frontier.push(composed);
                    }
                    let other: Vec<usize> = (0..u.size()).map(|i| g[m[i]]).collect();
                    if !maps.contains(&other) {
                        maps.push(other.clone());
                        frontier.push(other);
                    }
                }
            }
            let members = maps
                .into_iter()
                .map(|m| {
                    let rel = permutation_relation(u, &m)?;
                    Ok((permutation_label(&m), rel))
                })
                .collect::<Result<Vec<_>, PluralityError>>()?;
            Plurality::from_members(u, members)
        }
    }
}

/// Serialized shape for taxonomy answers.
#[derive(Debug, Clone, Serialize)]
pub struct TaxonomyReport {
    pub code: String,
    pub axes: TaxonomyCode,
    pub filter: bool,
    pub symbolic: bool,
}

pub fn taxonomy_report(p: &Plurality) -> TaxonomyReport {
    let f = is_filter(p);
    TaxonomyReport {
        code: f.code.code_string(),
        filter: f.verdict,
        symbolic: p.is_symbolic(),
        axes: f.code,
    }
}

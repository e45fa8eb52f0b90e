//! Transitive-reflexive relations as order structures.
//!
//! The image s[x] is the up-set of x; "y ranks over x" (x < y) exactly when
//! s[y] is a strict subset of s[x]. A minimal element has s = the whole set,
//! a maximal element sees only itself, and a root has nothing strictly below
//! it without being the global minimum. Relations carrying a nontrivial
//! internal equivalence are quotiented first, per the stated convention.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::relation::{factorize, Partition, Relation};
use crate::sets::PointSet;
use crate::universe::{PointId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("relation is not transitive-reflexive: {0}")]
    NotTransitiveReflexive(String),
    #[error("order is not a well-order")]
    NotWellOrdered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Serialize)]
pub enum OrderKind {
    Partial,
    Normal,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// An order on a (possibly quotiented) universe.
#[derive(Debug, Clone)]
pub struct OrderStructure {
    universe: Arc<Universe>,
    relation: Relation,
    pub kind: OrderKind,
    pub minimal: Option<PointId>,
    pub maximals: PointSet,
    pub roots: PointSet,
    /// Partition of the original universe when quotienting was applied.
    pub quotient: Option<Partition>,
}

impl OrderStructure {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    /// Points listed smallest-first; only meaningful when Linear.
    pub fn chain(&self) -> Option<Vec<PointId>> {
        if self.kind != OrderKind::Linear {
            return None;
        }
        let mut pts: Vec<PointId> = self.universe.points().collect();
        // Smaller elements have larger up-sets.
        pts.sort_by_key(|&x| std::cmp::Reverse(self.relation.image(x).len()));
        Some(pts)
    }

    pub fn chain_labels(&self) -> Option<Vec<String>> {
        self.chain().map(|pts| {
            pts.iter().map(|&p| self.universe.label(p).to_string()).collect()
        })
    }
}

fn check_transitive_reflexive(s: &Relation) -> Result<(), OrderError> {
    let u = s.universe();
    for x in u.points() {
        if !s.holds(x, x) {
            return Err(OrderError::NotTransitiveReflexive(format!(
                "no loop at {}",
                u.label(x)
            )));
        }
    }
    for (x, y) in s.pairs() {
        for z in s.image(y).iter() {
            if !s.holds(x, z) {
                return Err(OrderError::NotTransitiveReflexive(format!(
                    "({},{}) and ({},{}) hold but ({},{}) does not",
                    u.label(x),
                    u.label(y),
                    u.label(y),
                    u.label(z),
                    u.label(x),
                    u.label(z)
                )));
            }
        }
    }
    Ok(())
}

/// Classify a transitive-reflexive relation, quotienting away any nontrivial
/// internal equivalence first.
pub fn build_order(u: &Arc<Universe>, s: &Relation) -> Result<OrderStructure, OrderError> {
    check_transitive_reflexive(s)?;
    let symmetric_core = s.intersection(&s.inverse()).expect("same universe");
    let nontrivial = symmetric_core
        .pairs()
        .any(|(x, y)| x != y);
    let (universe, relation, quotient) = if nontrivial {
        let partition = factorize(&symmetric_core).expect("core is an equivalence");
        let labels: Vec<String> = partition
            .classes
            .iter()
            .map(|c| c.labels().join("~"))
            .collect();
        let qu = Universe::new(labels).expect("nonempty quotient");
        let reps: Vec<PointId> = partition
            .classes
            .iter()
            .map(|c| c.first().expect("nonempty class"))
            .collect();
        let qrel = Relation::from_predicate(&qu, |a, b| s.holds(reps[a.0], reps[b.0]));
        (qu, qrel, Some(partition))
    } else {
        (u.clone(), s.clone(), None)
    };

    let whole = PointSet::whole(&universe);
    let n = universe.size();
    let images: Vec<PointSet> = universe.points().map(|x| relation.image(x)).collect();

    let minimal = universe.points().find(|&x| images[x.0] == whole);
    let maximals = PointSet::from_points(
        &universe,
        universe.points().filter(|&x| images[x.0].len() == 1),
    );
    // A root is not the global minimum and has nothing strictly below it.
    let roots = PointSet::from_points(
        &universe,
        universe.points().filter(|&k| {
            images[k.0] != whole
                && !universe
                    .points()
                    .any(|y| images[k.0].strict_subset_of(&images[y.0]))
        }),
    );

    let comparable = |x: usize, y: usize| {
        images[x].subset_of(&images[y]) || images[y].subset_of(&images[x])
    };
    let linear = (0..n).all(|x| (x..n).all(|y| comparable(x, y)));
    let normal = linear
        || (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).any(|z| images[z].subset_of(&images[x]) && images[z].subset_of(&images[y]))
            })
        });
    let kind = if linear {
        OrderKind::Linear
    } else if normal {
        OrderKind::Normal
    } else {
        OrderKind::Partial
    };

    Ok(OrderStructure {
        universe,
        relation,
        kind,
        minimal,
        maximals,
        roots,
        quotient,
    })
}

pub fn compare(o: &OrderStructure, x: PointId, y: PointId) -> Comparison {
    if x == y {
        return Comparison::Equal;
    }
    let sx = o.relation.image(x);
    let sy = o.relation.image(y);
    if sy.strict_subset_of(&sx) {
        Comparison::Less
    } else if sx.strict_subset_of(&sy) {
        Comparison::Greater
    } else {
        Comparison::Incomparable
    }
}

/// The alternating order on {0..m-1} with image
/// s[n] = { m' : (-1)^n m' >= (-1)^{m'} n }: evens ascend, odds descend, the
/// evens preceding every odd.
pub fn zigzag_order(m: usize) -> OrderStructure {
    assert!(m >= 2);
    let u = Universe::range(0, (m - 1) as i64).unwrap();
    let sign = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let s = Relation::from_predicate(&u, |x, y| {
        let n = u.numeric(x).unwrap();
        let mm = u.numeric(y).unwrap();
        sign(n) * mm >= sign(mm) * n
    });
    build_order(&u, &s).expect("zigzag relation is transitive-reflexive")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    Product,
    Lexicographic,
}

/// Orders on the m x m integer grid: coordinatewise (product) or
/// lexicographic (the product refined to a linear order).
pub fn grid_orders(m: usize, kind: GridKind) -> OrderStructure {
    assert!(m >= 2);
    let labels: Vec<String> = (0..m)
        .flat_map(|i| (0..m).map(move |j| format!("({i},{j})")))
        .collect();
    let u = Universe::new(labels).unwrap();
    let coord = |p: PointId| (p.0 / m, p.0 % m);
    let s = match kind {
        GridKind::Product => Relation::from_predicate(&u, |x, y| {
            let (x1, x2) = coord(x);
            let (y1, y2) = coord(y);
            x1 <= y1 && x2 <= y2
        }),
        GridKind::Lexicographic => Relation::from_predicate(&u, |x, y| {
            let (x1, x2) = coord(x);
            let (y1, y2) = coord(y);
            x1 < y1 || (x1 == y1 && x2 <= y2)
        }),
    };
    build_order(&u, &s).expect("grid relations are transitive-reflexive")
}

pub enum WellOrderMode {
    Exhaustive,
    Sampled { trials: u64, seed: u64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct WellOrderReport {
    pub verdict: bool,
    pub subsets_checked: u64,
    /// A nonempty subset with no minimum, when the verdict is false.
    pub witness: Option<Vec<String>>,
    /// No examined subset had two minima.
    pub uniqueness_ok: bool,
    /// On a finite universe the verdict must coincide with linearity.
    pub matches_linearity: bool,
}

fn subset_minima(o: &OrderStructure, subset: &[PointId]) -> Vec<PointId> {
    subset
        .iter()
        .copied()
        .filter(|&y| {
            let sy = o.relation.image(y);
            subset.iter().all(|&z| sy.contains(z))
        })
        .collect()
}

/// Every nonempty subset must own an element whose up-set covers the subset.
pub fn well_order_check(o: &OrderStructure, mode: WellOrderMode) -> WellOrderReport {
    let n = o.universe.size();
    let points: Vec<PointId> = o.universe.points().collect();
    let mut verdict = true;
    let mut witness = None;
    let mut uniqueness_ok = true;
    let mut subsets_checked = 0u64;
    let mut examine = |subset: &[PointId]| {
        subsets_checked += 1;
        let minima = subset_minima(o, subset);
        if minima.len() > 1 {
            uniqueness_ok = false;
        }
        if minima.is_empty() && verdict {
            verdict = false;
            witness = Some(
                subset
                    .iter()
                    .map(|&p| o.universe.label(p).to_string())
                    .collect(),
            );
        }
    };
    match mode {
        WellOrderMode::Exhaustive => {
            assert!(n <= 20, "exhaustive subset scan capped at 20 points");
            for mask in 1u32..(1u32 << n) {
                let subset: Vec<PointId> = points
                    .iter()
                    .copied()
                    .filter(|p| mask & (1 << p.0) != 0)
                    .collect();
                examine(&subset);
            }
        }
        WellOrderMode::Sampled { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..trials {
                let subset: Vec<PointId> =
                    points.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if !subset.is_empty() {
                    examine(&subset);
                }
            }
        }
    }
    WellOrderReport {
        verdict,
        subsets_checked,
        witness,
        uniqueness_ok,
        matches_linearity: verdict == (o.kind == OrderKind::Linear),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InductionReport {
    pub holds_everywhere: bool,
    /// First point, in order, where the predicate fails although it held at
    /// every strictly smaller point.
    pub first_failure: Option<String>,
}

/// Finite transfinite-induction run over a well-ordered structure.
pub fn induction_check(
    o: &OrderStructure,
    predicate: impl Fn(PointId) -> bool,
) -> Result<InductionReport, OrderError> {
    if o.kind != OrderKind::Linear {
        return Err(OrderError::NotWellOrdered);
    }
    let chain = o.chain().expect("linear order has a chain");
    for &p in &chain {
        if !predicate(p) {
            return Ok(InductionReport {
                holds_everywhere: false,
                first_failure: Some(o.universe.label(p).to_string()),
            });
        }
    }
    Ok(InductionReport {
        holds_everywhere: true,
        first_failure: None,
    })
}

/// Serialized shape for order answers.
#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub kind: OrderKind,
    pub minimal: Option<String>,
    pub maximals: Vec<String>,
    pub roots: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Vec<Vec<String>>>,
}

pub fn order_report(o: &OrderStructure) -> OrderReport {
    OrderReport {
        kind: o.kind,
        minimal: o.minimal.map(|p| o.universe.label(p).to_string()),
        maximals: o.maximals.labels(),
        roots: o.roots.labels(),
        chain: o.chain_labels(),
        quotient: o
            .quotient
            .as_ref()
            .map(|p| p.classes.iter().map(PointSet::labels).collect()),
    }
}

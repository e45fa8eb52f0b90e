//! Binary relations on a universe: images, truthfulness domains, the relation
//! algebra, mapping classification and factorization into equivalence classes.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::report::{LawCheck, LawReport};
use crate::sets::PointSet;
use crate::universe::{same_universe, PointId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("relations live on different universes")]
    UniverseMismatch,
    #[error("relation is not an equivalence: {0}")]
    NotEquivalence(String),
    #[error("relation is partial on the declared domain: no image at {0:?}")]
    PartialRelation(String),
}

/// A binary relation stored as one image bit-row per point.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    universe: Arc<Universe>,
    rows: Vec<BitSet>,
    name: Option<String>,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(")?;
        if let Some(n) = &self.name {
            write!(f, "{n}: ")?;
        }
        let mut first = true;
        for (x, row) in self.rows.iter().enumerate() {
            for y in row.iter() {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(
                    f,
                    "({},{})",
                    self.universe.label(PointId(x)),
                    self.universe.label(PointId(y))
                )?;
            }
        }
        write!(f, ")")
    }
}

impl Relation {
    pub fn empty(universe: &Arc<Universe>) -> Relation {
        let n = universe.size();
        Relation {
            universe: universe.clone(),
            rows: vec![BitSet::new(n); n],
            name: None,
        }
    }

    pub fn identity(universe: &Arc<Universe>) -> Relation {
        let mut r = Relation::empty(universe);
        for p in universe.points() {
            r.insert(p, p);
        }
        r
    }

    pub fn complete(universe: &Arc<Universe>) -> Relation {
        let n = universe.size();
        Relation {
            universe: universe.clone(),
            rows: vec![BitSet::full(n); n],
            name: None,
        }
    }

    pub fn from_pairs<I>(universe: &Arc<Universe>, pairs: I) -> Relation
    where
        I: IntoIterator<Item = (PointId, PointId)>,
    {
        let mut r = Relation::empty(universe);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    /// Materialize a predicate over the finite universe.
    pub fn from_predicate<F>(universe: &Arc<Universe>, mut pred: F) -> Relation
    where
        F: FnMut(PointId, PointId) -> bool,
    {
        let mut r = Relation::empty(universe);
        for x in universe.points() {
            for y in universe.points() {
                if pred(x, y) {
                    r.insert(x, y);
                }
            }
        }
        r
    }

    pub fn named(mut self, name: impl Into<String>) -> Relation {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn insert(&mut self, x: PointId, y: PointId) {
        self.rows[x.0].insert(y.0);
    }

    pub fn holds(&self, x: PointId, y: PointId) -> bool {
        self.rows[x.0].contains(y.0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (PointId, PointId)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (PointId(x), PointId(y))))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn is_empty_relation(&self) -> bool {
        self.rows.iter().all(BitSet::is_empty)
    }

    /// Image r[x].
    pub fn image(&self, x: PointId) -> PointSet {
        PointSet::from_bits(&self.universe, self.rows[x.0].clone())
    }

    pub(crate) fn image_bits(&self, x: PointId) -> &BitSet {
        &self.rows[x.0]
    }

    /// Image of a set: r[X] = union of the point images.
    pub fn image_of_set(&self, xs: &PointSet) -> PointSet {
        let mut acc = BitSet::new(self.universe.size());
        for x in xs.iter() {
            acc.union_with(&self.rows[x.0]);
        }
        PointSet::from_bits(&self.universe, acc)
    }

    /// Truthfulness domain I_r: points with a nonempty image.
    pub fn truth_domain(&self) -> PointSet {
        let mut bits = BitSet::new(self.universe.size());
        for x in self.universe.points() {
            if !self.rows[x.0].is_empty() {
                bits.insert(x.0);
            }
        }
        PointSet::from_bits(&self.universe, bits)
    }

    /// Lie domain F \ I_r.
    pub fn lie_domain(&self) -> PointSet {
        self.truth_domain().complement()
    }

    /// The set of points with (x, x) in the relation; this is what an
    /// identifier contributes as a set.
    pub fn reflexive_trace(&self) -> PointSet {
        let mut bits = BitSet::new(self.universe.size());
        for x in self.universe.points() {
            if self.holds(x, x) {
                bits.insert(x.0);
            }
        }
        PointSet::from_bits(&self.universe, bits)
    }

    pub fn inverse(&self) -> Relation {
        let mut r = Relation::empty(&self.universe);
        for (x, y) in self.pairs() {
            r.insert(y, x);
        }
        r
    }

    /// Composition with (r o s)[x] = union of r[y] over y in s[x]:
    /// `r.compose_after(s)` is "r after s".
    pub fn compose_after(&self, s: &Relation) -> Result<Relation, RelationError> {
        self.check_same(s)?;
        let n = self.universe.size();
        let mut rows = Vec::with_capacity(n);
        for x in 0..n {
            let mut acc = BitSet::new(n);
            for y in s.rows[x].iter() {
                acc.union_with(&self.rows[y]);
            }
            rows.push(acc);
        }
        Ok(Relation {
            universe: self.universe.clone(),
            rows,
            name: None,
        })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.union(b))
            .collect();
        Ok(Relation {
            universe: self.universe.clone(),
            rows,
            name: None,
        })
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.check_same(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.intersection(b))
            .collect();
        Ok(Relation {
            universe: self.universe.clone(),
            rows,
            name: None,
        })
    }

    /// Pair-set containment (non-strict).
    pub fn contains_relation(&self, other: &Relation) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| b.is_subset(a))
    }

    /// Restriction of the pair set to a domain set (the "exposition" of a
    /// mapping onto a subset).
    pub fn restrict_domain(&self, domain: &PointSet) -> Relation {
        let mut r = Relation::empty(&self.universe);
        for (x, y) in self.pairs() {
            if domain.contains(x) {
                r.insert(x, y);
            }
        }
        r
    }

    /// Preimage under the relation viewed as a mapping: f^{-1}[P].
    pub fn preimage_of_set(&self, ys: &PointSet) -> PointSet {
        self.inverse().image_of_set(ys)
    }

    fn check_same(&self, other: &Relation) -> Result<(), RelationError> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(RelationError::UniverseMismatch)
        }
    }

    fn display_pair(&self, x: PointId, y: PointId) -> String {
        format!(
            "({},{})",
            self.universe.label(x),
            self.universe.label(y)
        )
    }
}

/// Which operation `relation_algebra` should perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationOp {
    Inverse,
    Compose,
    Union,
    Intersect,
}

/// Dispatch form of the relation algebra; `compose` is "r after s".
pub fn relation_algebra(
    r: &Relation,
    s: &Relation,
    op: RelationOp,
) -> Result<Relation, RelationError> {
    match op {
        RelationOp::Inverse => Ok(r.inverse()),
        RelationOp::Compose => r.compose_after(s),
        RelationOp::Union => r.union(s),
        RelationOp::Intersect => r.intersection(s),
    }
}

/// Reflexivity/symmetry/transitivity flags with witnesses for failures.
#[derive(Debug, Clone, Serialize)]
pub struct RelationProperties {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub equivalence: bool,
    pub witnesses: Vec<String>,
}

pub fn relation_properties(r: &Relation) -> RelationProperties {
    let u = r.universe();
    let mut witnesses = Vec::new();
    let mut reflexive = true;
    for x in u.points() {
        if !r.holds(x, x) {
            reflexive = false;
            witnesses.push(format!("not reflexive at {}", u.label(x)));
            break;
        }
    }
    let mut symmetric = true;
    'sym: for (x, y) in r.pairs() {
        if !r.holds(y, x) {
            symmetric = false;
            witnesses.push(format!(
                "not symmetric: {} holds but {} does not",
                r.display_pair(x, y),
                r.display_pair(y, x)
            ));
            break 'sym;
        }
    }
    let mut transitive = true;
    'tr: for (x, y) in r.pairs() {
        for z in r.image_bits(y).iter() {
            if !r.holds(x, PointId(z)) {
                transitive = false;
                witnesses.push(format!(
                    "not transitive: {} and {} hold but {} does not",
                    r.display_pair(x, y),
                    r.display_pair(y, PointId(z)),
                    r.display_pair(x, PointId(z))
                ));
                break 'tr;
            }
        }
    }
    RelationProperties {
        reflexive,
        symmetric,
        transitive,
        equivalence: reflexive && symmetric && transitive,
        witnesses,
    }
}

/// Disjoint nonempty classes covering the universe.
#[derive(Debug, Clone)]
pub struct Partition {
    pub classes: Vec<PointSet>,
    class_of: Vec<usize>,
}

impl Partition {
    pub fn class_of(&self, p: PointId) -> usize {
        self.class_of[p.0]
    }
}

/// Factorize an equivalence relation into its classes (the factor set X/r).
pub fn factorize(r: &Relation) -> Result<Partition, RelationError> {
    let props = relation_properties(r);
    if !props.equivalence {
        return Err(RelationError::NotEquivalence(
            props.witnesses.join("; "),
        ));
    }
    let u = r.universe();
    let mut class_of = vec![usize::MAX; u.size()];
    let mut classes = Vec::new();
    for x in u.points() {
        if class_of[x.0] == usize::MAX {
            let idx = classes.len();
            let class = r.image(x);
            for y in class.iter() {
                class_of[y.0] = idx;
            }
            classes.push(class);
        }
    }
    Ok(Partition { classes, class_of })
}

/// Mapping classification per the composition tests: surjective when
/// f o f^{-1} = id_Y, injective when f^{-1} o f = id_X.
#[derive(Debug, Clone, Serialize)]
pub struct MappingReport {
    pub is_algebraic: bool,
    pub is_injective: bool,
    pub is_surjective: bool,
    pub is_bijective: bool,
    pub witnesses: Vec<String>,
}

pub fn classify_mapping(
    r: &Relation,
    domain: &PointSet,
    codomain: &PointSet,
) -> Result<MappingReport, RelationError> {
    let u = r.universe();
    let td = r.truth_domain();
    if &td != domain {
        let missing = domain
            .iter()
            .find(|&x| !td.contains(x))
            .or_else(|| td.iter().find(|&x| !domain.contains(x)));
        return Err(RelationError::PartialRelation(
            missing.map(|p| u.label(p).to_string()).unwrap_or_default(),
        ));
    }
    let mut witnesses = Vec::new();
    let mut is_algebraic = true;
    for x in domain.iter() {
        let img = r.image_bits(x);
        if img.count() != 1 {
            is_algebraic = false;
            witnesses.push(format!(
                "image at {} has {} points (multivalued or empty)",
                u.label(x),
                img.count()
            ));
            break;
        }
    }
    let inv = r.inverse();
    // f^{-1} o f restricted to the domain must be the identity on it.
    let mut is_injective = is_algebraic;
    if is_algebraic {
        'inj: for x in domain.iter() {
            for y in r.image_bits(x).iter() {
                for x2 in inv.image_bits(PointId(y)).iter() {
                    if x2 != x.0 {
                        is_injective = false;
                        witnesses.push(format!(
                            "not injective: {} and {} both map to {}",
                            u.label(x),
                            u.label(PointId(x2)),
                            u.label(PointId(y))
                        ));
                        break 'inj;
                    }
                }
            }
        }
    }
    // f o f^{-1} must be the identity on the codomain; in particular every
    // codomain point needs a preimage.
    let mut is_surjective = is_algebraic;
    if is_algebraic {
        for y in codomain.iter() {
            if inv.image_bits(y).is_empty() {
                is_surjective = false;
                witnesses.push(format!("not surjective: {} has no preimage", u.label(y)));
                break;
            }
        }
        // Values must land inside the codomain at all.
        for x in domain.iter() {
            if let Some(y) = r.image_bits(x).first() {
                if !codomain.contains(PointId(y)) {
                    is_surjective = false;
                    witnesses.push(format!(
                        "value {} at {} falls outside the codomain",
                        u.label(PointId(y)),
                        u.label(x)
                    ));
                    break;
                }
            }
        }
    }
    Ok(MappingReport {
        is_algebraic,
        is_injective,
        is_surjective,
        is_bijective: is_injective && is_surjective,
        witnesses,
    })
}

/// Uniform random relation on the universe with roughly `density` pair share.
pub fn random_relation(u: &Arc<Universe>, rng: &mut impl Rng, density: f64) -> Relation {
    let mut r = Relation::empty(u);
    for x in u.points() {
        for y in u.points() {
            if rng.gen_bool(density) {
                r.insert(x, y);
            }
        }
    }
    r
}

/// Random total single-valued mapping on the universe.
pub fn random_mapping(u: &Arc<Universe>, rng: &mut impl Rng) -> Relation {
    let n = u.size();
    let mut r = Relation::empty(u);
    for x in u.points() {
        let y = rng.gen_range(0..n);
        r.insert(x, PointId(y));
    }
    r
}

/// Random equivalence relation, built from a random partition.
pub fn random_equivalence(u: &Arc<Universe>, rng: &mut impl Rng) -> Relation {
    let n = u.size();
    let class_count = rng.gen_range(1..=n);
    let assignment: Vec<usize> = (0..n).map(|_| rng.gen_range(0..class_count)).collect();
    Relation::from_predicate(u, |x, y| assignment[x.0] == assignment[y.0])
}

fn random_subset(u: &Arc<Universe>, rng: &mut impl Rng) -> PointSet {
    let mut bits = BitSet::new(u.size());
    for i in 0..u.size() {
        if rng.gen_bool(0.5) {
            bits.insert(i);
        }
    }
    PointSet::from_bits(u, bits)
}

/// Randomized check of the relation-algebra identities (inverse laws,
/// associativity, set-image laws) and the preimage laws for mappings.
pub fn check_relation_laws(u: &Arc<Universe>, trials: u64, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("relation-algebra");
    let mut inv_involution = LawCheck::new("(r^-1)^-1 = r");
    let mut inv_compose = LawCheck::new("(r o s)^-1 = s^-1 o r^-1");
    let mut assoc = LawCheck::new("r o (s o t) = (r o s) o t");
    let mut image_compose = LawCheck::new("(r o s)[X] = r[s[X]]");
    let mut image_union = LawCheck::new("r[X u Y] = r[X] u r[Y]");
    let mut image_intersect = LawCheck::new("r[X] n r[Y] >= r[X n Y]");
    let mut pre_diff = LawCheck::new("f^-1[P \\ Q] = f^-1[P] \\ f^-1[Q]");
    let mut pre_union = LawCheck::new("f^-1[P u Q] = f^-1[P] u f^-1[Q]");
    let mut pre_intersect = LawCheck::new("f^-1[P n Q] = f^-1[P] n f^-1[Q]");

    for _ in 0..trials {
        let r = random_relation(u, &mut rng, 0.3);
        let s = random_relation(u, &mut rng, 0.3);
        let t = random_relation(u, &mut rng, 0.3);
        let xs = random_subset(u, &mut rng);
        let ys = random_subset(u, &mut rng);

        inv_involution.trials += 1;
        if r.inverse().inverse() != r {
            inv_involution.fail(format!("{r:?}"));
        }
        inv_compose.trials += 1;
        let lhs = r.compose_after(&s).unwrap().inverse();
        let rhs = s.inverse().compose_after(&r.inverse()).unwrap();
        if lhs != rhs {
            inv_compose.fail(format!("r={r:?} s={s:?}"));
        }
        assoc.trials += 1;
        let lhs = r.compose_after(&s.compose_after(&t).unwrap()).unwrap();
        let rhs = r.compose_after(&s).unwrap().compose_after(&t).unwrap();
        if lhs != rhs {
            assoc.fail(format!("r={r:?} s={s:?} t={t:?}"));
        }
        image_compose.trials += 1;
        let lhs = r.compose_after(&s).unwrap().image_of_set(&xs);
        let rhs = r.image_of_set(&s.image_of_set(&xs));
        if lhs != rhs {
            image_compose.fail(format!("r={r:?} s={s:?} X={xs}"));
        }
        image_union.trials += 1;
        let lhs = r.image_of_set(&xs.union(&ys).unwrap());
        let rhs = r.image_of_set(&xs).union(&r.image_of_set(&ys)).unwrap();
        if lhs != rhs {
            image_union.fail(format!("r={r:?} X={xs} Y={ys}"));
        }
        image_intersect.trials += 1;
        let small = r.image_of_set(&xs.intersection(&ys).unwrap());
        let big = r
            .image_of_set(&xs)
            .intersection(&r.image_of_set(&ys))
            .unwrap();
        if !small.subset_of(&big) {
            image_intersect.fail(format!("r={r:?} X={xs} Y={ys}"));
        }

        let f = random_mapping(u, &mut rng);
        let p = random_subset(u, &mut rng);
        let q = random_subset(u, &mut rng);
        pre_diff.trials += 1;
        let lhs = f.preimage_of_set(&p.difference(&q).unwrap());
        let rhs = f
            .preimage_of_set(&p)
            .difference(&f.preimage_of_set(&q))
            .unwrap();
        if lhs != rhs {
            pre_diff.fail(format!("f={f:?} P={p} Q={q}"));
        }
        pre_union.trials += 1;
        let lhs = f.preimage_of_set(&p.union(&q).unwrap());
        let rhs = f.preimage_of_set(&p).union(&f.preimage_of_set(&q)).unwrap();
        if lhs != rhs {
            pre_union.fail(format!("f={f:?} P={p} Q={q}"));
        }
        pre_intersect.trials += 1;
        let lhs = f.preimage_of_set(&p.intersection(&q).unwrap());
        let rhs = f
            .preimage_of_set(&p)
            .intersection(&f.preimage_of_set(&q))
            .unwrap();
        if lhs != rhs {
            pre_intersect.fail(format!("f={f:?} P={p} Q={q}"));
        }
    }
    report.checks = vec![
        inv_involution,
        inv_compose,
        assoc,
        image_compose,
        image_union,
        image_intersect,
        pre_diff,
        pre_union,
        pre_intersect,
    ];
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Arc<Universe> {
        Universe::range(1, 3).unwrap()
    }

    fn p(u: &Arc<Universe>, label: &str) -> PointId {
        u.lookup(label).unwrap()
    }

    #[test]
    fn compose_uses_the_image_formula() {
        // s = {(1,2)}, r = {(2,3)}: r o s = {(1,3)}.
        let u = u3();
        let s = Relation::from_pairs(&u, [(p(&u, "1"), p(&u, "2"))]);
        let r = Relation::from_pairs(&u, [(p(&u, "2"), p(&u, "3"))]);
        let c = r.compose_after(&s).unwrap();
        assert_eq!(
            c.pairs().collect::<Vec<_>>(),
            vec![(p(&u, "1"), p(&u, "3"))]
        );
    }

    #[test]
    fn identity_is_neutral_for_composition() {
        let u = u3();
        let id = Relation::identity(&u);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let r = random_relation(&u, &mut rng, 0.4);
            assert_eq!(r.compose_after(&id).unwrap(), r);
            assert_eq!(id.compose_after(&r).unwrap(), r);
        }
    }

    #[test]
    fn inverse_of_composition_swaps_factors() {
        let u = Universe::range(1, 6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let r = random_relation(&u, &mut rng, 0.3);
            let s = random_relation(&u, &mut rng, 0.3);
            assert_eq!(
                r.compose_after(&s).unwrap().inverse(),
                s.inverse().compose_after(&r.inverse()).unwrap()
            );
        }
    }

    #[test]
    fn strict_inclusion_witness_for_image_of_intersection() {
        // X = {1}, Y = {2}, r = {(1,3),(2,3)}: r[X n Y] is empty but
        // r[X] n r[Y] = {3}.
        let u = u3();
        let r = Relation::from_pairs(&u, [(p(&u, "1"), p(&u, "3")), (p(&u, "2"), p(&u, "3"))]);
        let xs = PointSet::from_labels(&u, ["1"]).unwrap();
        let ys = PointSet::from_labels(&u, ["2"]).unwrap();
        let small = r.image_of_set(&xs.intersection(&ys).unwrap());
        let big = r.image_of_set(&xs).intersection(&r.image_of_set(&ys)).unwrap();
        assert!(small.is_empty());
        assert_eq!(big.len(), 1);
        assert!(small.subset_of(&big) && small != big);
    }

    #[test]
    fn properties_of_worked_relations() {
        let u = Universe::range(1, 8).unwrap();
        let id = Relation::identity(&u);
        let props = relation_properties(&id);
        assert!(props.reflexive && props.symmetric && props.transitive && props.equivalence);

        let parity = Relation::from_predicate(&u, |x, y| {
            (u.numeric(x).unwrap() - u.numeric(y).unwrap()) % 2 == 0
        });
        assert!(relation_properties(&parity).equivalence);

        let less = Relation::from_predicate(&u, |x, y| u.numeric(x).unwrap() < u.numeric(y).unwrap());
        let props = relation_properties(&less);
        assert!(!props.reflexive && !props.symmetric && props.transitive);
    }

    #[test]
    fn factorize_parity_gives_two_classes() {
        let u = Universe::range(1, 8).unwrap();
        let parity = Relation::from_predicate(&u, |x, y| {
            (u.numeric(x).unwrap() - u.numeric(y).unwrap()) % 2 == 0
        });
        let partition = factorize(&parity).unwrap();
        assert_eq!(partition.classes.len(), 2);
        let sizes: Vec<usize> = partition.classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![4, 4]);
        // Two points share a class iff related.
        for x in u.points() {
            for y in u.points() {
                assert_eq!(
                    partition.class_of(x) == partition.class_of(y),
                    parity.holds(x, y)
                );
            }
        }
    }

    #[test]
    fn factorize_identity_gives_singletons() {
        let u = u3();
        let partition = factorize(&Relation::identity(&u)).unwrap();
        assert_eq!(partition.classes.len(), 3);
        assert!(partition.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn factorize_rejects_non_equivalence() {
        let u = u3();
        let less = Relation::from_predicate(&u, |x, y| x.0 < y.0);
        assert!(matches!(
            factorize(&less),
            Err(RelationError::NotEquivalence(_))
        ));
    }

    #[test]
    fn mapping_classification() {
        let u = Universe::range(1, 5).unwrap();
        let all = PointSet::whole(&u);
        let id = Relation::identity(&u);
        let report = classify_mapping(&id, &all, &all).unwrap();
        assert!(report.is_bijective && report.is_algebraic);

        // {(1,3),(2,3)} on domain {1,2}, codomain {3,4}: algebraic, neither
        // injective nor surjective.
        let r = Relation::from_pairs(
            &u,
            [
                (u.lookup("1").unwrap(), u.lookup("3").unwrap()),
                (u.lookup("2").unwrap(), u.lookup("3").unwrap()),
            ],
        );
        let dom = PointSet::from_labels(&u, ["1", "2"]).unwrap();
        let cod = PointSet::from_labels(&u, ["3", "4"]).unwrap();
        let report = classify_mapping(&r, &dom, &cod).unwrap();
        assert!(report.is_algebraic);
        assert!(!report.is_injective && !report.is_surjective && !report.is_bijective);
        assert!(!report.witnesses.is_empty());

        // Multivalued image makes the relation topologic.
        let mut multi = Relation::empty(&u);
        multi.insert(u.lookup("1").unwrap(), u.lookup("2").unwrap());
        multi.insert(u.lookup("1").unwrap(), u.lookup("3").unwrap());
        let dom = PointSet::from_labels(&u, ["1"]).unwrap();
        let report = classify_mapping(&multi, &dom, &all).unwrap();
        assert!(!report.is_algebraic);
    }

    #[test]
    fn partial_relation_is_rejected() {
        let u = u3();
        let r = Relation::from_pairs(&u, [(p(&u, "1"), p(&u, "2"))]);
        let all = PointSet::whole(&u);
        assert!(matches!(
            classify_mapping(&r, &all, &all),
            Err(RelationError::PartialRelation(_))
        ));
    }

    #[test]
    fn law_suite_passes() {
        let u = Universe::range(1, 6).unwrap();
        let report = check_relation_laws(&u, 300, 42);
        assert!(report.passed(), "{:?}", report.failures());
    }
}

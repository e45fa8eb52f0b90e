//! Identifier-defined point sets and their Boolean algebra.
//!
//! Empty sets exist as values but carry an `undefined_identifier` flag: the
//! null-set is not an object here, so operations that need a defined set
//! (choice, identifier-backed use) reject flagged inputs.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::relation::{Relation, RelationError};
use crate::report::{LawCheck, LawReport};
use crate::universe::{same_universe, PointId, Universe};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetError {
    #[error("sets live on different universes")]
    UniverseMismatch,
    #[error("choice from an undefined (empty) set at family index {0}")]
    ChoiceFromUndefinedSet(usize),
}

/// A subset of a universe, possibly carrying the identifier that defined it.
#[derive(Clone)]
pub struct PointSet {
    universe: Arc<Universe>,
    members: BitSet,
    origin: Option<Arc<Relation>>,
}

impl PartialEq for PointSet {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.members == other.members
    }
}

impl Eq for PointSet {}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet{self}")
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.universe.label(p))?;
        }
        write!(f, "}}")
    }
}

impl PointSet {
    pub fn empty(universe: &Arc<Universe>) -> PointSet {
        PointSet {
            universe: universe.clone(),
            members: BitSet::new(universe.size()),
            origin: None,
        }
    }

    pub fn whole(universe: &Arc<Universe>) -> PointSet {
        PointSet {
            universe: universe.clone(),
            members: BitSet::full(universe.size()),
            origin: None,
        }
    }

    pub(crate) fn from_bits(universe: &Arc<Universe>, members: BitSet) -> PointSet {
        PointSet {
            universe: universe.clone(),
            members,
            origin: None,
        }
    }

    pub fn from_points<I>(universe: &Arc<Universe>, points: I) -> PointSet
    where
        I: IntoIterator<Item = PointId>,
    {
        let mut bits = BitSet::new(universe.size());
        for p in points {
            bits.insert(p.0);
        }
        PointSet::from_bits(universe, bits)
    }

    pub fn from_labels<I, S>(
        universe: &Arc<Universe>,
        labels: I,
    ) -> Result<PointSet, crate::universe::UniverseError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = BitSet::new(universe.size());
        for l in labels {
            bits.insert(universe.lookup(l.as_ref())?.0);
        }
        Ok(PointSet::from_bits(universe, bits))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn contains(&self, p: PointId) -> bool {
        self.members.contains(p.0)
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// An empty set has no defined identifier: the paper's "identifier is not
    /// defined" case.
    pub fn is_undefined(&self) -> bool {
        self.is_empty()
    }

    pub fn origin(&self) -> Option<&Arc<Relation>> {
        self.origin.as_ref()
    }

    pub fn iter(&self) -> impl Iterator<Item = PointId> + '_ {
        self.members.iter().map(PointId)
    }

    pub fn labels(&self) -> Vec<String> {
        self.iter().map(|p| self.universe.label(p).to_string()).collect()
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet, SetError> {
        self.check_same(other)?;
        Ok(PointSet::from_bits(
            &self.universe,
            self.members.union(&other.members),
        ))
    }

    pub fn intersection(&self, other: &PointSet) -> Result<PointSet, SetError> {
        self.check_same(other)?;
        Ok(PointSet::from_bits(
            &self.universe,
            self.members.intersection(&other.members),
        ))
    }

    /// Complement of `other` in `self`: self \ other.
    pub fn difference(&self, other: &PointSet) -> Result<PointSet, SetError> {
        self.check_same(other)?;
        Ok(PointSet::from_bits(
            &self.universe,
            self.members.difference(&other.members),
        ))
    }

    /// Complement within the whole universe.
    pub fn complement(&self) -> PointSet {
        PointSet::from_bits(&self.universe, self.members.complement())
    }

    pub fn subset_of(&self, other: &PointSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn strict_subset_of(&self, other: &PointSet) -> bool {
        self.subset_of(other) && self.members != other.members
    }

    /// Least-position member, used by the deterministic choice rule.
    pub fn first(&self) -> Option<PointId> {
        self.members.first().map(PointId)
    }

    fn check_same(&self, other: &PointSet) -> Result<(), SetError> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(SetError::UniverseMismatch)
        }
    }
}

/// Build the set defined by an identifier relation: its reflexive trace.
/// An empty trace yields a value flagged undefined rather than an error.
pub fn define_set(u: &Arc<Universe>, identifier: &Relation) -> Result<PointSet, RelationError> {
    if !same_universe(u, identifier.universe()) {
        return Err(RelationError::UniverseMismatch);
    }
    let mut set = identifier.reflexive_trace();
    set.origin = Some(Arc::new(identifier.clone()));
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    ComplementOfAInB,
    SubsetTest,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SetAlgebraResult {
    Set(PointSet),
    Subset { subset: bool, strict: bool },
}

pub fn set_algebra(a: &PointSet, b: &PointSet, op: SetOp) -> Result<SetAlgebraResult, SetError> {
    Ok(match op {
        SetOp::Union => SetAlgebraResult::Set(a.union(b)?),
        SetOp::Intersection => SetAlgebraResult::Set(a.intersection(b)?),
        SetOp::ComplementOfAInB => SetAlgebraResult::Set(b.difference(a)?),
        SetOp::SubsetTest => {
            a.check_same(b)?;
            SetAlgebraResult::Subset {
                subset: a.subset_of(b),
                strict: a.strict_subset_of(b),
            }
        }
    })
}

/// Deterministic choice function: for each family member, its least-position
/// point. Rejects undefined (empty) members.
pub fn choice_function(family: &[PointSet]) -> Result<Vec<(usize, PointId)>, SetError> {
    let mut choices = Vec::with_capacity(family.len());
    for (idx, set) in family.iter().enumerate() {
        match set.first() {
            Some(p) if !set.is_undefined() => choices.push((idx, p)),
            _ => return Err(SetError::ChoiceFromUndefinedSet(idx)),
        }
    }
    Ok(choices)
}

fn random_set(u: &Arc<Universe>, rng: &mut impl Rng) -> PointSet {
    let mut bits = BitSet::new(u.size());
    for i in 0..u.size() {
        if rng.gen_bool(0.5) {
            bits.insert(i);
        }
    }
    PointSet::from_bits(u, bits)
}

/// Randomized check of the set-algebra identities: commutativity,
/// associativity, distributivity, X \ (X \ Y) = X n Y, and the two
/// family-level de Morgan identities.
pub fn check_set_laws(u: &Arc<Universe>, trials: u64, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::new("set-algebra");
    let mut comm = LawCheck::new("commutativity of union and intersection");
    let mut assoc = LawCheck::new("associativity of union and intersection");
    let mut distr = LawCheck::new("distributivity both ways");
    let mut dd = LawCheck::new("X \\ (X \\ Y) = X n Y");
    let mut dm_union = LawCheck::new("Y \\ union{X_a} = intersection{Y \\ X_a}");
    let mut dm_inter = LawCheck::new("Y \\ intersection{X_a} = union{Y \\ X_a}");

    for _ in 0..trials {
        let x = random_set(u, &mut rng);
        let y = random_set(u, &mut rng);
        let z = random_set(u, &mut rng);

        comm.trials += 1;
        if x.union(&y).unwrap() != y.union(&x).unwrap()
            || x.intersection(&y).unwrap() != y.intersection(&x).unwrap()
        {
            comm.fail(format!("X={x} Y={y}"));
        }
        assoc.trials += 1;
        let ua = x.union(&y.union(&z).unwrap()).unwrap();
        let ub = x.union(&y).unwrap().union(&z).unwrap();
        let ia = x.intersection(&y.intersection(&z).unwrap()).unwrap();
        let ib = x.intersection(&y).unwrap().intersection(&z).unwrap();
        if ua != ub || ia != ib {
            assoc.fail(format!("X={x} Y={y} Z={z}"));
        }
        distr.trials += 1;
        let da = x.intersection(&y.union(&z).unwrap()).unwrap();
        let db = x
            .intersection(&y)
            .unwrap()
            .union(&x.intersection(&z).unwrap())
            .unwrap();
        let dc = x.union(&y.intersection(&z).unwrap()).unwrap();
        let dd2 = x
            .union(&y)
            .unwrap()
            .intersection(&x.union(&z).unwrap())
            .unwrap();
        if da != db || dc != dd2 {
            distr.fail(format!("X={x} Y={y} Z={z}"));
        }
        dd.trials += 1;
        let lhs = x.difference(&x.difference(&y).unwrap()).unwrap();
        if lhs != x.intersection(&y).unwrap() {
            dd.fail(format!("X={x} Y={y}"));
        }

        // Random finite family for the de Morgan identities.
        let k = rng.gen_range(1..=4);
        let family: Vec<PointSet> = (0..k).map(|_| random_set(u, &mut rng)).collect();
        let mut union_all = PointSet::empty(u);
        let mut inter_all = PointSet::whole(u);
        for f in &family {
            union_all = union_all.union(f).unwrap();
            inter_all = inter_all.intersection(f).unwrap();
        }
        dm_union.trials += 1;
        let lhs = y.difference(&union_all).unwrap();
        let mut rhs = PointSet::whole(u);
        for f in &family {
            rhs = rhs.intersection(&y.difference(f).unwrap()).unwrap();
        }
        if lhs != rhs {
            dm_union.fail(format!("Y={y} family size {k}"));
        }
        dm_inter.trials += 1;
        let lhs = y.difference(&inter_all).unwrap();
        let mut rhs = PointSet::empty(u);
        for f in &family {
            rhs = rhs.union(&y.difference(f).unwrap()).unwrap();
        }
        if lhs != rhs {
            dm_inter.fail(format!("Y={y} family size {k}"));
        }
    }
    report.checks = vec![comm, assoc, distr, dd, dm_union, dm_inter];
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u12() -> Arc<Universe> {
        Universe::range(1, 12).unwrap()
    }

    fn divisible_identifier(u: &Arc<Universe>, k: i64) -> Relation {
        Relation::from_predicate(u, |x, y| {
            let m = u.numeric(x).unwrap();
            let n = u.numeric(y).unwrap();
            n == m && m % k == 0
        })
    }

    #[test]
    fn identifier_defines_divisible_set() {
        let u = u12();
        let evens = define_set(&u, &divisible_identifier(&u, 2)).unwrap();
        assert_eq!(evens.labels(), vec!["2", "4", "6", "8", "10", "12"]);
        // Membership agrees with the reflexive verdict.
        let ident = evens.origin().unwrap().clone();
        for x in u.points() {
            assert_eq!(evens.contains(x), ident.holds(x, x));
        }
    }

    #[test]
    fn identity_identifier_defines_whole_universe() {
        let u = u12();
        let all = define_set(&u, &Relation::identity(&u)).unwrap();
        assert_eq!(all.len(), 12);
    }

    #[test]
    fn empty_trace_yields_undefined_flag() {
        let u = u12();
        let s = define_set(&u, &Relation::empty(&u)).unwrap();
        assert!(s.is_undefined());
    }

    #[test]
    fn mismatched_universe_rejected() {
        let u = u12();
        let v = Universe::range(1, 3).unwrap();
        assert_eq!(
            define_set(&u, &Relation::identity(&v)).unwrap_err(),
            RelationError::UniverseMismatch
        );
    }

    #[test]
    fn intersection_of_divisibility_sets() {
        let u = u12();
        let evens = define_set(&u, &divisible_identifier(&u, 2)).unwrap();
        let threes = define_set(&u, &divisible_identifier(&u, 3)).unwrap();
        let both = evens.intersection(&threes).unwrap();
        assert_eq!(both.labels(), vec!["6", "12"]);
    }

    #[test]
    fn union_with_undefined_set_is_neutral() {
        let u = u12();
        let evens = define_set(&u, &divisible_identifier(&u, 2)).unwrap();
        let undefined = PointSet::empty(&u);
        assert_eq!(evens.union(&undefined).unwrap(), evens);
    }

    #[test]
    fn evens_are_a_strict_subset_of_the_universe() {
        let u = u12();
        let evens = define_set(&u, &divisible_identifier(&u, 2)).unwrap();
        let all = PointSet::whole(&u);
        match set_algebra(&evens, &all, SetOp::SubsetTest).unwrap() {
            SetAlgebraResult::Subset { subset, strict } => {
                assert!(subset && strict);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn hand_checked_double_difference() {
        let u = u12();
        let x = PointSet::from_labels(&u, ["1"]).unwrap();
        let y = PointSet::from_labels(&u, ["2"]).unwrap();
        let lhs = x.difference(&x.difference(&y).unwrap()).unwrap();
        assert!(lhs.is_empty());
        assert_eq!(lhs, x.intersection(&y).unwrap());
    }

    #[test]
    fn set_laws_pass_randomized_and_degenerate() {
        let u = Universe::range(1, 8).unwrap();
        let report = check_set_laws(&u, 1000, 11);
        assert!(report.passed(), "{:?}", report.failures());

        // Degenerate empty triple.
        let e = PointSet::empty(&u);
        assert_eq!(
            e.difference(&e.difference(&e).unwrap()).unwrap(),
            e.intersection(&e).unwrap()
        );
    }

    #[test]
    fn choice_picks_least_position_members() {
        let u = u12();
        let a = PointSet::from_labels(&u, ["2", "4"]).unwrap();
        let b = PointSet::from_labels(&u, ["3", "4"]).unwrap();
        let choices = choice_function(&[a.clone(), b.clone()]).unwrap();
        let labels: Vec<&str> = choices.iter().map(|&(_, p)| u.label(p)).collect();
        assert_eq!(labels, vec!["2", "3"]);
        // Reproducible.
        assert_eq!(choice_function(&[a, b]).unwrap(), choices);
    }

    #[test]
    fn choice_from_singleton_is_forced() {
        let u = u12();
        let s = PointSet::from_labels(&u, ["5"]).unwrap();
        let choices = choice_function(std::slice::from_ref(&s)).unwrap();
        assert_eq!(u.label(choices[0].1), "5");
    }

    #[test]
    fn choice_from_undefined_set_is_rejected() {
        let u = u12();
        let a = PointSet::from_labels(&u, ["1", "2"]).unwrap();
        let e = PointSet::empty(&u);
        assert_eq!(
            choice_function(&[a, e]).unwrap_err(),
            SetError::ChoiceFromUndefinedSet(1)
        );
    }

    #[test]
    fn sets_equal_iff_identifiers_rl_equivalent() {
        let u = u12();
        // Two different identifiers for the even numbers.
        let by_div = divisible_identifier(&u, 2);
        let by_sign = Relation::from_predicate(&u, |x, y| {
            let m = u.numeric(x).unwrap();
            let n = u.numeric(y).unwrap();
            n == m && (-1i64).pow(m as u32 % 2) > 0
        });
        let a = define_set(&u, &by_div).unwrap();
        let b = define_set(&u, &by_sign).unwrap();
        assert_eq!(a, b);
        for x in u.points() {
            assert_eq!(by_div.holds(x, x), by_sign.holds(x, x));
        }
    }
}

//! Constructive bijections: the fixed-point Schröder–Bernstein argument on
//! finite point sets, and countable-enumeration absorption/removal maps on
//! finite truncations.

use std::collections::HashMap;

use thiserror::Error;

use crate::relation::Relation;
use crate::sets::PointSet;
use crate::universe::PointId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("not injective: {0}")]
    NotInjective(String),
    #[error("not a total mapping into the stated codomain: {0}")]
    NonTotal(String),
    #[error("enumerations overlap on {0}")]
    Overlap(String),
    #[error("duplicate enumeration item {0}")]
    DuplicateItem(String),
    #[error("{0} is not a subsequence of the base enumeration")]
    NotSubsequence(String),
}

fn check_injection(
    r: &Relation,
    domain: &PointSet,
    codomain: &PointSet,
    name: &str,
) -> Result<(), BijectionError> {
    let u = r.universe();
    let mut hit: HashMap<PointId, PointId> = HashMap::new();
    for x in domain.iter() {
        let img = r.image(x);
        if img.len() != 1 || !img.subset_of(codomain) {
            return Err(BijectionError::NonTotal(format!(
                "{name} at {}: image {img}",
                u.label(x)
            )));
        }
        let y = img.first().unwrap();
        if let Some(prev) = hit.insert(y, x) {
            return Err(BijectionError::NotInjective(format!(
                "{name}: {} and {} both map to {}",
                u.label(prev),
                u.label(x),
                u.label(y)
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SbOutcome {
    pub bijection: Relation,
    /// Least set with Y0 = (X0 \ X1) union f[Y0].
    pub y0: PointSet,
    pub fixpoint_ok: bool,
    /// X0 \ Y0 = X1 \ f[Y0].
    pub complement_ok: bool,
}

/// Given injections p: X -> Y and q: Y -> X, produce a verified bijection
/// h: X -> Y by the least-fixed-point construction: h follows p on Y0 and
/// the inverse of q elsewhere.
pub fn schroder_bernstein(
    x: &PointSet,
    y: &PointSet,
    p: &Relation,
    q: &Relation,
) -> Result<SbOutcome, BijectionError> {
    check_injection(p, x, y, "p")?;
    check_injection(q, y, x, "q")?;
    let x0 = x.clone();
    let x1 = q.image_of_set(y);
    let f = q.compose_after(p).expect("shared universe");
    let seed = x0.difference(&x1).expect("shared universe");

    let mut z = PointSet::empty(seed.universe());
    loop {
        let next = seed.union(&f.image_of_set(&z)).expect("shared universe");
        if next == z {
            break;
        }
        z = next;
    }
    let y0 = z;
    let fixpoint_ok = y0 == seed.union(&f.image_of_set(&y0)).expect("shared universe");
    let complement_ok = x0.difference(&y0).expect("shared universe")
        == x1.difference(&f.image_of_set(&y0)).expect("shared universe");

    let q_inv = q.inverse();
    let mut h = Relation::empty(x.universe());
    for pt in x.iter() {
        let target = if y0.contains(pt) {
            p.image(pt).first()
        } else {
            q_inv.image(pt).first()
        };
        match target {
            Some(t) => h.insert(pt, t),
            None => {
                return Err(BijectionError::NonTotal(format!(
                    "no image for {} outside Y0",
                    x.universe().label(pt)
                )))
            }
        }
    }
    check_injection(&h, x, y, "h")?;
    if h.image_of_set(x) != *y {
        return Err(BijectionError::NonTotal("h is not onto Y".into()));
    }
    Ok(SbOutcome {
        bijection: h,
        y0,
        fixpoint_ok,
        complement_ok,
    })
}

/// A finite truncation of a countable enumeration, with inverse lookup.
#[derive(Debug, Clone)]
pub struct Enumeration {
    items: Vec<String>,
    index: HashMap<String, usize>,
}

impl Enumeration {
    pub fn from_items<I, S>(items: I) -> Result<Enumeration, BijectionError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let items: Vec<String> = items.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, item) in items.iter().enumerate() {
            if index.insert(item.clone(), i).is_some() {
                return Err(BijectionError::DuplicateItem(item.clone()));
            }
        }
        Ok(Enumeration { items, index })
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&str> {
        self.items.get(k).map(String::as_str)
    }

    pub fn index_of(&self, item: &str) -> Option<usize> {
        self.index.get(item).copied()
    }

    pub fn contains(&self, item: &str) -> bool {
        self.index.contains_key(item)
    }

    pub fn items(&self) -> &[String] {
        &self.items
    }
}

/// Element-level piecewise map produced by the absorption/removal
/// combinators, restricted to the given truncations.
#[derive(Debug, Clone)]
pub struct CountableMap {
    pub pairs: Vec<(String, String)>,
    forward: HashMap<String, String>,
}

impl CountableMap {
    fn from_pairs(pairs: Vec<(String, String)>) -> CountableMap {
        let forward = pairs.iter().cloned().collect();
        CountableMap { pairs, forward }
    }

    pub fn forward(&self, item: &str) -> Option<&str> {
        self.forward.get(item).map(String::as_str)
    }

    pub fn is_injective(&self) -> bool {
        let targets: std::collections::HashSet<&str> =
            self.pairs.iter().map(|(_, t)| t.as_str()).collect();
        targets.len() == self.pairs.len()
    }
}

/// Absorb the `extra` elements into `x` along the designated subsequence:
/// identity off the subsequence, a shift re-indexing the merged list of
/// extra-then-designated onto the subsequence.
pub fn absorb_countable(
    x: &Enumeration,
    designated: &Enumeration,
    extra: &Enumeration,
) -> Result<CountableMap, BijectionError> {
    for d in designated.items() {
        if !x.contains(d) {
            return Err(BijectionError::NotSubsequence(d.clone()));
        }
    }
    for e in extra.items() {
        if x.contains(e) {
            return Err(BijectionError::Overlap(e.clone()));
        }
    }
    let m = extra.len();
    let mut pairs = Vec::new();
    for (i, e) in extra.items().iter().enumerate() {
        if let Some(target) = designated.get(i) {
            pairs.push((e.clone(), target.to_string()));
        }
    }
    for (k, d) in designated.items().iter().enumerate() {
        if let Some(target) = designated.get(k + m) {
            pairs.push((d.clone(), target.to_string()));
        }
    }
    for item in x.items() {
        if !designated.contains(item) {
            pairs.push((item.clone(), item.clone()));
        }
    }
    Ok(CountableMap::from_pairs(pairs))
}

/// The removal variant: a bijection from `x` onto `x` minus the first
/// `count` designated elements, shifting along the subsequence.
pub fn remove_countable(
    x: &Enumeration,
    designated: &Enumeration,
    count: usize,
) -> Result<CountableMap, BijectionError> {
    for d in designated.items() {
        if !x.contains(d) {
            return Err(BijectionError::NotSubsequence(d.clone()));
        }
    }
    let mut pairs = Vec::new();
    for (k, d) in designated.items().iter().enumerate() {
        if let Some(target) = designated.get(k + count) {
            pairs.push((d.clone(), target.to_string()));
        }
    }
    for item in x.items() {
        if !designated.contains(item) {
            pairs.push((item.clone(), item.clone()));
        }
    }
    Ok(CountableMap::from_pairs(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_injections_give_the_identity_bijection() {
        let u = Universe::range(1, 4).unwrap();
        let all = PointSet::whole(&u);
        let id = Relation::identity(&u);
        let out = schroder_bernstein(&all, &all, &id, &id).unwrap();
        assert_eq!(out.bijection, id);
        assert!(out.y0.is_empty());
        assert!(out.fixpoint_ok && out.complement_ok);
    }

    #[test]
    fn non_injective_q_is_rejected() {
        let u = Universe::new(["1", "2", "3", "a", "b", "c", "d"]).unwrap();
        let x = PointSet::from_labels(&u, ["1", "2", "3"]).unwrap();
        let y = PointSet::from_labels(&u, ["a", "b", "c", "d"]).unwrap();
        let p = Relation::from_pairs(&u, [(0, 3), (1, 4), (2, 5)].map(|(a, b)| (PointId(a), PointId(b))));
        let q = Relation::from_pairs(
            &u,
            [(3, 0), (4, 1), (5, 2), (6, 2)].map(|(a, b)| (PointId(a), PointId(b))),
        );
        assert!(matches!(
            schroder_bernstein(&x, &y, &p, &q),
            Err(BijectionError::NotInjective(_))
        ));
    }

    #[test]
    fn proper_sub_injections_still_yield_a_bijection() {
        // X and Y overlap, p shifts into Y, q shifts back: h must cover Y.
        let u = Universe::range(0, 9).unwrap();
        let x = PointSet::from_points(&u, (0..6).map(PointId));
        let y = PointSet::from_points(&u, (4..10).map(PointId));
        let p = Relation::from_pairs(&u, (0..6).map(|i| (PointId(i), PointId(i + 4))));
        let q = Relation::from_pairs(&u, (4..10).map(|i| (PointId(i), PointId(i - 4))));
        let out = schroder_bernstein(&x, &y, &p, &q).unwrap();
        assert!(out.fixpoint_ok && out.complement_ok);
        assert_eq!(out.bijection.image_of_set(&x), y);
    }

    #[test]
    fn random_injection_pairs_always_verify() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let u = Universe::range(0, 99).unwrap();
        for _ in 0..300 {
            let size = 30;
            let mut all: Vec<PointId> = u.points().collect();
            all.shuffle(&mut rng);
            let xs: Vec<PointId> = all[..size].to_vec();
            let ys: Vec<PointId> = all[10..10 + size].to_vec();
            let x = PointSet::from_points(&u, xs.iter().copied());
            let y = PointSet::from_points(&u, ys.iter().copied());
            let mut p_targets = ys.clone();
            p_targets.shuffle(&mut rng);
            let mut q_targets = xs.clone();
            q_targets.shuffle(&mut rng);
            let p = Relation::from_pairs(&u, xs.iter().copied().zip(p_targets));
            let q = Relation::from_pairs(&u, ys.iter().copied().zip(q_targets));
            let out = schroder_bernstein(&x, &y, &p, &q).unwrap();
            assert!(out.fixpoint_ok && out.complement_ok);
            assert_eq!(out.bijection.image_of_set(&x), y);
        }
    }

    fn naturals(n: usize) -> Enumeration {
        Enumeration::from_items((0..n).map(|i| i.to_string())).unwrap()
    }

    fn evens(n: usize) -> Enumeration {
        Enumeration::from_items((0..n).map(|i| (2 * i).to_string())).unwrap()
    }

    #[test]
    fn absorbing_two_extras_along_the_evens() {
        let x = naturals(1000);
        let designated = evens(500);
        let extra = Enumeration::from_items(["a", "b"]).unwrap();
        let map = absorb_countable(&x, &designated, &extra).unwrap();
        assert_eq!(map.forward("a"), Some("0"));
        assert_eq!(map.forward("b"), Some("2"));
        assert_eq!(map.forward("4"), Some("8"));
        assert_eq!(map.forward("7"), Some("7"));
        assert!(map.is_injective());
    }

    #[test]
    fn empty_extra_gives_the_identity() {
        let x = naturals(100);
        let designated = evens(50);
        let extra = Enumeration::from_items(Vec::<String>::new()).unwrap();
        let map = absorb_countable(&x, &designated, &extra).unwrap();
        for item in x.items() {
            assert_eq!(map.forward(item), Some(item.as_str()));
        }
    }

    #[test]
    fn removal_shifts_along_the_subsequence() {
        let x = naturals(1000);
        let designated = evens(500);
        let map = remove_countable(&x, &designated, 10).unwrap();
        // First ten evens (0..18) leave the range.
        assert_eq!(map.forward("0"), Some("20"));
        assert_eq!(map.forward("2"), Some("22"));
        assert_eq!(map.forward("3"), Some("3"));
        assert!(map.is_injective());
        let removed: Vec<String> = (0..10).map(|i| (2 * i).to_string()).collect();
        for (_, target) in &map.pairs {
            assert!(!removed.contains(target));
        }
    }

    #[test]
    fn overlapping_extra_is_rejected() {
        let x = naturals(10);
        let designated = evens(5);
        let extra = Enumeration::from_items(["3"]).unwrap();
        assert_eq!(
            absorb_countable(&x, &designated, &extra).unwrap_err(),
            BijectionError::Overlap("3".into())
        );
    }
}

//! Finite products of point sets with total projections and a lexicographic
//! tuple enumeration.

use thiserror::Error;

use crate::sets::PointSet;
use crate::universe::PointId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("a product needs at least one factor")]
    EmptyFactorList,
}

/// Ordered factors; tuples are enumerated lexicographically, last factor
/// fastest.
#[derive(Debug, Clone)]
pub struct FiniteProduct {
    factors: Vec<Vec<PointId>>,
    factor_sets: Vec<PointSet>,
}

pub fn finite_product(sets: &[PointSet]) -> Result<FiniteProduct, ProductError> {
    if sets.is_empty() {
        return Err(ProductError::EmptyFactorList);
    }
    Ok(FiniteProduct {
        factors: sets.iter().map(|s| s.iter().collect()).collect(),
        factor_sets: sets.to_vec(),
    })
}

impl FiniteProduct {
    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn len(&self) -> usize {
        self.factors.iter().map(Vec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn factor(&self, beta: usize) -> &PointSet {
        &self.factor_sets[beta]
    }

    /// Tuple at the given lexicographic index.
    pub fn tuple(&self, index: usize) -> Option<Vec<PointId>> {
        if index >= self.len() {
            return None;
        }
        let mut rest = index;
        let mut out = vec![PointId(0); self.factors.len()];
        for (slot, coords) in self.factors.iter().enumerate().rev() {
            out[slot] = coords[rest % coords.len()];
            rest /= coords.len();
        }
        Some(out)
    }

    pub fn index_of(&self, tuple: &[PointId]) -> Option<usize> {
        if tuple.len() != self.factors.len() {
            return None;
        }
        let mut index = 0;
        for (coords, &p) in self.factors.iter().zip(tuple) {
            let pos = coords.iter().position(|&c| c == p)?;
            index = index * coords.len() + pos;
        }
        Some(index)
    }

    /// The projection p_beta: the beta-th coordinate of a tuple.
    pub fn project(&self, tuple: &[PointId], beta: usize) -> Option<PointId> {
        tuple.get(beta).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    #[test]
    fn two_by_two_square() {
        let u = Universe::range(0, 1).unwrap();
        let s = PointSet::whole(&u);
        let prod = finite_product(&[s.clone(), s]).unwrap();
        assert_eq!(prod.len(), 4);
        let t = prod.tuple(1).unwrap();
        assert_eq!(prod.project(&t, 0), Some(PointId(0)));
        assert_eq!(prod.project(&t, 1), Some(PointId(1)));
    }

    #[test]
    fn cube_round_trips_indices() {
        let u = Universe::range(0, 2).unwrap();
        let s = PointSet::whole(&u);
        let prod = finite_product(&[s.clone(), s.clone(), s]).unwrap();
        assert_eq!(prod.len(), 27);
        for i in 0..27 {
            let t = prod.tuple(i).unwrap();
            assert_eq!(prod.index_of(&t), Some(i));
        }
        assert_eq!(prod.tuple(27), None);
    }

    #[test]
    fn singleton_times_x_is_x_via_projection() {
        let u = Universe::range(0, 4).unwrap();
        let one = PointSet::from_points(&u, [PointId(2)]);
        let x = PointSet::whole(&u);
        let prod = finite_product(&[one, x.clone()]).unwrap();
        assert_eq!(prod.len(), x.len());
        let seen: Vec<PointId> = (0..prod.len())
            .map(|i| prod.project(&prod.tuple(i).unwrap(), 1).unwrap())
            .collect();
        assert_eq!(seen.len(), 5);
        assert!(x.iter().all(|p| seen.contains(&p)));
    }

    #[test]
    fn empty_factor_list_is_rejected() {
        assert_eq!(finite_product(&[]).unwrap_err(), ProductError::EmptyFactorList);
    }
}

//! Anti-diagonal enumeration of index pairs, visiting (1,1), (2,1), (1,2),
//! (3,1), (2,2), (1,3), ... — within each diagonal n descends while k
//! ascends.

/// 1-based pair to 1-based position in the enumeration.
pub fn pairing(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1, "indices are 1-based");
    let d = n + k;
    (d - 2) * (d - 1) / 2 + k
}

/// Two-sided inverse of `pairing`.
pub fn unpairing(m: u64) -> (u64, u64) {
    assert!(m >= 1, "positions are 1-based");
    // Largest diagonal whose block starts at or before m.
    let mut d = 2;
    while (d - 1) * d / 2 < m {
        d += 1;
    }
    let start = (d - 2) * (d - 1) / 2;
    let k = m - start;
    (d - k, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_six_pairs_follow_the_listed_order() {
        let listed = [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)];
        for (i, &(n, k)) in listed.iter().enumerate() {
            assert_eq!(pairing(n, k), (i + 1) as u64);
            assert_eq!(unpairing((i + 1) as u64), (n, k));
        }
    }

    #[test]
    fn round_trip_on_the_hundred_square() {
        let mut seen = std::collections::HashSet::new();
        for n in 1..=100 {
            for k in 1..=100 {
                let m = pairing(n, k);
                assert_eq!(unpairing(m), (n, k));
                assert!(seen.insert(m), "collision at ({n},{k})");
            }
        }
    }

    #[test]
    #[should_panic(expected = "1-based")]
    fn zero_index_is_rejected() {
        pairing(0, 1);
    }
}

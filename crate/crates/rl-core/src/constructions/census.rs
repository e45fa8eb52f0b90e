//! Finite counting argument for indicator functions: the point-indicator
//! embedding of E into E -> {0,1}, and the diagonal refuter h(x) = 1 - g_x(x)
//! escaping every E-indexed family of functions.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::sets::PointSet;

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub points: usize,
    pub function_count: u64,
    pub injection_ok: bool,
    pub families_checked: u64,
    pub all_escaped: bool,
    pub exhaustive: bool,
}

/// Functions E -> {0,1} encoded as bit rows over the member list of E.
fn escapes(family: &[u64], h: u64) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(x, &g)| (h >> x) & 1 != (g >> x) & 1)
}

/// Verify the indicator embedding is injective and that every indexed
/// family {g_x} is escaped by h(x) = 1 - g_x(x). Exhaustive over all
/// |E|^|E|-style families when feasible, sampled otherwise.
pub fn indicator_census(e: &PointSet, samples: u64, seed: u64) -> CensusReport {
    let n = e.len();
    assert!(n >= 1 && n <= 20, "finite census capped at 20 points");
    let function_count = 1u64 << n;

    // Indicators are pairwise distinct bit rows.
    let indicators: Vec<u64> = (0..n).map(|x| 1u64 << x).collect();
    let mut sorted = indicators.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injection_ok = sorted.len() == n;

    let refute = |family: &[u64]| -> bool {
        let mut h = 0u64;
        for (x, &g) in family.iter().enumerate() {
            if (g >> x) & 1 == 0 {
                h |= 1 << x;
            }
        }
        escapes(family, h)
    };

    let total_families = (function_count as u128).checked_pow(n as u32);
    let exhaustive = matches!(total_families, Some(t) if t <= 1 << 16);
    let mut families_checked = 0u64;
    let mut all_escaped = true;
    if exhaustive {
        let total = total_families.unwrap() as u64;
        for idx in 0..total {
            let mut family = Vec::with_capacity(n);
            let mut rest = idx;
            for _ in 0..n {
                family.push(rest % function_count);
                rest /= function_count;
            }
            families_checked += 1;
            all_escaped &= refute(&family);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let family: Vec<u64> =
                (0..n).map(|_| rng.gen_range(0..function_count)).collect();
            families_checked += 1;
            all_escaped &= refute(&family);
        }
    }
    CensusReport {
        points: n,
        function_count,
        injection_ok,
        families_checked,
        all_escaped,
        exhaustive,
    }
}

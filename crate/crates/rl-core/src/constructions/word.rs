//! Eventually periodic base-n digit words and their exact rational values.
//!
//! A word is prefix digits followed by a repeating period; its value is
//! sum x_i / n^i in [0, 1]. Words with period (0) and a nonzero body are
//! "dead": the same value is carried by an alive word with period (n-1).
//! The all-zero word is the one exception — it has a unique representation
//! and counts as alive.

use std::collections::HashMap;
use std::fmt;

use num::integer::lcm;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("base must be at least 2, got {0}")]
    BadBase(u32),
    #[error("digit {0} out of range for base {1}")]
    DigitOutOfRange(u32, u32),
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("value {0} outside [0, 1]")]
    ValueOutOfRange(String),
    #[error("no eventually periodic expansion within {0} places")]
    NonPeriodicWithinBound(usize),
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u32, u32),
    #[error("digit {0} not in {{0,1}}")]
    NotBinaryDigit(u32),
    #[error("scale factor {0}/{1} must be a reduced fraction with 2 <= k < n")]
    BadScale(u32, u32),
}

/// Canonical eventually periodic word: the period is primitive and the
/// prefix is as short as possible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    base: u32,
    prefix: Vec<u32>,
    period: Vec<u32>,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ds: &[u32]| -> String {
            if self.base <= 10 {
                ds.iter().map(u32::to_string).collect()
            } else {
                ds.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "{}:{}({})", self.base, join(&self.prefix), join(&self.period))
    }
}

fn primitive_period(period: &[u32]) -> Vec<u32> {
    let k = period.len();
    for d in 1..=k {
        if k % d == 0 && (d..k).all(|i| period[i] == period[i - d]) {
            return period[..d].to_vec();
        }
    }
    period.to_vec()
}

impl Word {
    pub fn new(base: u32, prefix: Vec<u32>, period: Vec<u32>) -> Result<Word, WordError> {
        if base < 2 {
            return Err(WordError::BadBase(base));
        }
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        for &d in prefix.iter().chain(&period) {
            if d >= base {
                return Err(WordError::DigitOutOfRange(d, base));
            }
        }
        let mut w = Word { base, prefix, period };
        w.canonicalize();
        Ok(w)
    }

    pub fn zero(base: u32) -> Word {
        Word::new(base, vec![], vec![0]).unwrap()
    }

    fn canonicalize(&mut self) {
        self.period = primitive_period(&self.period);
        // A prefix digit equal to the period's last digit can be absorbed by
        // rotating the period right.
        while let (Some(&last), Some(&plast)) = (self.prefix.last(), self.period.last()) {
            if last != plast {
                break;
            }
            self.prefix.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    /// Digit at 1-indexed place i.
    pub fn digit(&self, i: usize) -> u32 {
        let idx = i - 1;
        if idx < self.prefix.len() {
            self.prefix[idx]
        } else {
            self.period[(idx - self.prefix.len()) % self.period.len()]
        }
    }

    /// Dead words have a trailing-zeros period and a nonzero body; the
    /// all-zero word is alive by the uniqueness exception.
    pub fn is_dead(&self) -> bool {
        self.period == [0] && !self.prefix.is_empty()
    }

    pub fn is_alive(&self) -> bool {
        !self.is_dead()
    }

    /// Exact value with place weights taken in `radix` (normally the base).
    fn value_in_radix(&self, radix: u32) -> BigRational {
        let n = BigInt::from(radix);
        let mut prefix_num = BigInt::zero();
        for &d in &self.prefix {
            prefix_num = &prefix_num * &n + BigInt::from(d);
        }
        let p = self.prefix.len() as u32;
        let k = self.period.len() as u32;
        let mut period_num = BigInt::zero();
        for &d in &self.period {
            period_num = &period_num * &n + BigInt::from(d);
        }
        let np = n.pow(p);
        let nk = n.pow(k);
        BigRational::new(prefix_num, np.clone())
            + BigRational::new(period_num, (nk - BigInt::one()) * np)
    }

    pub fn value(&self) -> BigRational {
        self.value_in_radix(self.base)
    }
}

pub fn word_value(w: &Word) -> BigRational {
    w.value()
}

/// All representations of a value in [0, 1] as base-n words, the alive one
/// first; an n-adic rational additionally has the dead trailing-zeros form.
pub fn words_of(
    value: &BigRational,
    base: u32,
    max_len: usize,
) -> Result<Vec<Word>, WordError> {
    if base < 2 {
        return Err(WordError::BadBase(base));
    }
    if value.is_negative() || value > &BigRational::one() {
        return Err(WordError::ValueOutOfRange(value.to_string()));
    }
    if value == &BigRational::one() {
        return Ok(vec![Word::new(base, vec![], vec![base - 1])?]);
    }
    // Long division, cycling on the rational remainder.
    let n = BigRational::from(BigInt::from(base));
    let mut digits: Vec<u32> = Vec::new();
    let mut seen: HashMap<BigRational, usize> = HashMap::new();
    let mut rem = value.clone();
    let (prefix, period) = loop {
        if let Some(&at) = seen.get(&rem) {
            break (digits[..at].to_vec(), digits[at..].to_vec());
        }
        if digits.len() > max_len {
            return Err(WordError::NonPeriodicWithinBound(max_len));
        }
        seen.insert(rem.clone(), digits.len());
        let scaled = &rem * &n;
        let digit = scaled.floor().to_integer().to_u32().expect("digit fits");
        digits.push(digit);
        rem = scaled - BigRational::from(BigInt::from(digit));
    };
    let canonical = Word::new(base, prefix, period)?;
    if canonical.is_dead() {
        // The alive twin: decrement the last prefix digit, repeat n-1.
        let mut alive_prefix = canonical.prefix().to_vec();
        let last = alive_prefix.last_mut().expect("dead words have a prefix");
        *last -= 1;
        let alive = Word::new(base, alive_prefix, vec![base - 1])?;
        debug_assert_eq!(alive.value(), *value);
        Ok(vec![alive, canonical])
    } else {
        Ok(vec![canonical])
    }
}

fn stream_shape(w: &Word) -> (usize, usize) {
    (w.prefix.len(), w.period.len())
}

/// Alternate the digits of two same-base words into one compound word.
pub fn interleave(a: &Word, b: &Word) -> Result<Word, WordError> {
    if a.base != b.base {
        return Err(WordError::BaseMismatch(a.base, b.base));
    }
    let (pa, ka) = stream_shape(a);
    let (pb, kb) = stream_shape(b);
    let p = pa.max(pb);
    let k = lcm(ka, kb);
    let mut prefix = Vec::with_capacity(2 * p);
    for i in 1..=p {
        prefix.push(a.digit(i));
        prefix.push(b.digit(i));
    }
    let mut period = Vec::with_capacity(2 * k);
    for i in (p + 1)..=(p + k) {
        period.push(a.digit(i));
        period.push(b.digit(i));
    }
    Word::new(a.base, prefix, period)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeinterleaveOutcome {
    pub first: Word,
    pub second: Word,
    /// The input was alive yet one extracted word is dead: the value has no
    /// preimage among pairs of alive words.
    pub not_alive_splittable: bool,
}

/// Split a compound word back into its odd- and even-place digit streams.
pub fn deinterleave(w: &Word) -> DeinterleaveOutcome {
    let (p, k) = stream_shape(w);
    // Even prefix cutoff and even period length make both extractions
    // eventually periodic with simple shapes.
    let m = p + (p % 2);
    let l = if k % 2 == 0 { k } else { 2 * k };
    let extract = |offset: usize| -> Word {
        let prefix: Vec<u32> = (0..m / 2).map(|j| w.digit(2 * j + offset + 1)).collect();
        let period: Vec<u32> = (0..l / 2)
            .map(|j| w.digit(m + 2 * j + offset + 1))
            .collect();
        Word::new(w.base, prefix, period).expect("digits already validated")
    };
    let first = extract(0);
    let second = extract(1);
    let not_alive_splittable = w.is_alive() && (first.is_dead() || second.is_dead());
    DeinterleaveOutcome {
        first,
        second,
        not_alive_splittable,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalRule {
    /// Base 2: flip the diagonal digit.
    Flip,
    /// y_k = (n-1) - x_{k,k}; can land in the dead-word set.
    Adversarial,
}

#[derive(Debug, Clone)]
pub struct DiagonalReport {
    pub word: Word,
    pub digits: Vec<u32>,
    pub differs_at_all: bool,
    /// The truncated output ends in zeros: the escape candidate may be a
    /// dead word, so the diagonal argument needs the flip rule instead.
    pub dead_hazard: bool,
}

/// Build a word differing from word k at place k, for k up to the list
/// length, under the chosen digit rule.
pub fn diagonal(
    words: &[Word],
    base: u32,
    rule: DiagonalRule,
) -> Result<DiagonalReport, WordError> {
    for w in words {
        if w.base != base {
            return Err(WordError::BaseMismatch(w.base, base));
        }
    }
    if rule == DiagonalRule::Flip && base != 2 {
        return Err(WordError::BadBase(base));
    }
    let digits: Vec<u32> = words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let x = w.digit(i + 1);
            match rule {
                DiagonalRule::Flip => 1 - x,
                DiagonalRule::Adversarial => (base - 1) - x,
            }
        })
        .collect();
    let differs_at_all = words
        .iter()
        .enumerate()
        .all(|(i, w)| w.digit(i + 1) != digits[i]);
    let dead_hazard = digits.last() == Some(&0);
    let word = Word::new(base, digits.clone(), vec![0])?;
    Ok(DiagonalReport {
        word,
        digits,
        differs_at_all,
        dead_hazard,
    })
}

/// Value of sum k * x_i / n^i for a {0,1}-digit word: the K_{k/n} set.
pub fn k_set(w: &Word, k: u32, n: u32) -> Result<BigRational, WordError> {
    for i in 1..=(w.prefix.len() + w.period.len()) {
        let d = w.digit(i);
        if d > 1 {
            return Err(WordError::NotBinaryDigit(d));
        }
    }
    if k < 2 || k >= n || num::integer::gcd(k, n) != 1 {
        return Err(WordError::BadScale(k, n));
    }
    Ok(w.value_in_radix(n) * BigRational::from(BigInt::from(k)))
}

/// Middle-thirds membership to the given depth: survive `depth` rounds of
/// removing the open middle third.
pub fn cantor_membership(value: &BigRational, depth: usize) -> bool {
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
    let three = BigRational::from(BigInt::from(3));
    let two = BigRational::from(BigInt::from(2));
    if value.is_negative() || value > &BigRational::one() {
        return false;
    }
    let mut x = value.clone();
    for _ in 0..depth {
        if x <= third {
            x = &x * &three;
        } else if x >= two_thirds {
            x = &x * &three - &two;
        } else {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn half_has_a_dead_and_an_alive_representation() {
        let reps = words_of(&rat(1, 2), 2, 32).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps[0].is_alive());
        assert_eq!(reps[0].to_string(), "2:0(1)");
        assert!(reps[1].is_dead());
        assert_eq!(reps[1].to_string(), "2:1(0)");
        for w in &reps {
            assert_eq!(word_value(w), rat(1, 2));
        }
    }

    #[test]
    fn zero_word_is_alive_and_unique() {
        let reps = words_of(&rat(0, 1), 2, 8).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0], Word::zero(2));
        assert!(reps[0].is_alive());
    }

    #[test]
    fn one_has_only_the_top_period() {
        let reps = words_of(&rat(1, 1), 2, 8).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].to_string(), "2:(1)");
        assert_eq!(word_value(&reps[0]), rat(1, 1));
    }

    #[test]
    fn base3_mixed_word_value_round_trips() {
        let w = Word::new(3, vec![2, 0], vec![2]).unwrap();
        let v = word_value(&w);
        assert_eq!(v, rat(7, 9));
        let reps = words_of(&v, 3, 32).unwrap();
        assert!(reps.contains(&w));
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn canonical_form_absorbs_trailing_period_digits() {
        let a = Word::new(2, vec![1, 0], vec![0]).unwrap();
        let b = Word::new(2, vec![1], vec![0]).unwrap();
        assert_eq!(a, b);
        let c = Word::new(2, vec![], vec![1, 0, 1, 0]).unwrap();
        assert_eq!(c.period(), &[1, 0]);
    }

    #[test]
    fn alive_representation_is_unique_per_value() {
        for q in 1..60i64 {
            for p in 0..=q {
                let reps = words_of(&rat(p, q), 2, 128).unwrap();
                assert_eq!(reps.iter().filter(|w| w.is_alive()).count(), 1);
                for w in &reps {
                    assert_eq!(word_value(w), rat(p, q));
                }
            }
        }
    }

    #[test]
    fn interleave_and_deinterleave_round_trip() {
        let a = Word::new(2, vec![1], vec![0, 1]).unwrap();
        let b = Word::new(2, vec![], vec![1, 1, 0]).unwrap();
        let w = interleave(&a, &b).unwrap();
        let out = deinterleave(&w);
        assert_eq!(out.first, a);
        assert_eq!(out.second, b);
        assert!(!out.not_alive_splittable);
    }

    #[test]
    fn interleave_of_half_and_zero() {
        let half_dead = Word::new(2, vec![1], vec![0]).unwrap();
        let w = interleave(&half_dead, &Word::zero(2)).unwrap();
        assert_eq!(w.to_string(), "2:1(0)");
        assert_eq!(word_value(&w), rat(1, 2));
    }

    #[test]
    fn alive_words_interleave_to_an_alive_word() {
        let samples = [
            Word::new(2, vec![], vec![1]).unwrap(),
            Word::new(2, vec![0], vec![0, 1]).unwrap(),
            Word::new(2, vec![1, 1], vec![1, 0]).unwrap(),
            Word::zero(2),
        ];
        for a in &samples {
            for b in &samples {
                assert!(interleave(a, b).unwrap().is_alive());
            }
        }
    }

    #[test]
    fn zero_one_period_word_is_not_alive_splittable() {
        // 2:11(01): odd places give 1,0,0,0,... - a dead word.
        let w = Word::new(2, vec![1, 1], vec![0, 1]).unwrap();
        assert!(w.is_alive());
        let out = deinterleave(&w);
        assert!(out.not_alive_splittable);
        assert!(out.first.is_dead());
        assert!(out.second.is_alive());
    }

    #[test]
    fn diagonal_flip_differs_everywhere() {
        let rows = vec![
            Word::new(2, vec![1, 0, 0], vec![0]).unwrap(),
            Word::new(2, vec![0, 1, 0], vec![0]).unwrap(),
            Word::new(2, vec![0, 0, 1], vec![0]).unwrap(),
        ];
        let rep = diagonal(&rows, 2, DiagonalRule::Flip).unwrap();
        assert!(rep.differs_at_all);
        assert_eq!(rep.digits, vec![0, 0, 0]);
    }

    #[test]
    fn adversarial_diagonal_raises_the_dead_word_hazard() {
        // Rows engineered with diagonal digit 2 from place 2 on: the rule
        // (n-1) - x produces zeros there.
        let rows = vec![
            Word::new(3, vec![0], vec![1]).unwrap(),
            Word::new(3, vec![0, 2], vec![1]).unwrap(),
            Word::new(3, vec![0, 0, 2], vec![1]).unwrap(),
            Word::new(3, vec![0, 0, 0, 2], vec![1]).unwrap(),
        ];
        let rep = diagonal(&rows, 3, DiagonalRule::Adversarial).unwrap();
        assert!(rep.differs_at_all);
        assert!(rep.dead_hazard);
        assert_eq!(&rep.digits[1..], &[0, 0, 0]);
    }

    #[test]
    fn single_zero_word_diagonal() {
        let rep = diagonal(&[Word::zero(2)], 2, DiagonalRule::Flip).unwrap();
        assert!(rep.differs_at_all);
        assert_eq!(rep.digits, vec![1]);
    }

    #[test]
    fn k_set_values() {
        let w = Word::new(2, vec![1], vec![0]).unwrap();
        assert_eq!(k_set(&w, 2, 3).unwrap(), rat(2, 3));
        let w = Word::new(2, vec![0, 1], vec![0]).unwrap();
        assert_eq!(k_set(&w, 2, 3).unwrap(), rat(2, 9));
        let bad = Word::new(3, vec![2], vec![0]).unwrap();
        assert_eq!(k_set(&bad, 2, 3).unwrap_err(), WordError::NotBinaryDigit(2));
        let w = Word::zero(2);
        assert_eq!(k_set(&w, 2, 4).unwrap_err(), WordError::BadScale(2, 4));
    }

    #[test]
    fn cantor_membership_matches_known_points() {
        assert!(cantor_membership(&rat(2, 3), 10));
        assert!(cantor_membership(&rat(1, 3), 10));
        assert!(cantor_membership(&rat(2, 9), 10));
        assert!(cantor_membership(&rat(0, 1), 10));
        assert!(cantor_membership(&rat(1, 1), 10));
        assert!(!cantor_membership(&rat(1, 2), 1));
        assert!(!cantor_membership(&rat(4, 9), 2));
    }

    #[test]
    fn k_set_agrees_with_the_interval_oracle() {
        // Every K_{2/3} value of a {0,1}-word survives the middle-thirds
        // removal to depth 10.
        let words = [
            Word::new(2, vec![1, 0, 1], vec![0, 1]).unwrap(),
            Word::new(2, vec![], vec![1]).unwrap(),
            Word::new(2, vec![0, 1, 1], vec![1, 0, 0]).unwrap(),
        ];
        for w in &words {
            let v = k_set(w, 2, 3).unwrap();
            assert!(cantor_membership(&v, 10), "{w} -> {v}");
        }
    }

    #[test]
    fn dead_words_stratify_by_prefix_length() {
        // Dead words with prefix length exactly j and base 2: the last
        // prefix digit must be 1 (canonical form), the others free.
        for j in 1..=10usize {
            let mut count = 0u64;
            for mask in 0..(1u64 << j) {
                let prefix: Vec<u32> =
                    (0..j).map(|i| ((mask >> i) & 1) as u32).collect();
                let w = Word::new(2, prefix, vec![0]).unwrap();
                if w.is_dead() && w.prefix().len() == j {
                    count += 1;
                }
            }
            assert_eq!(count, 1 << (j - 1));
        }
    }
}

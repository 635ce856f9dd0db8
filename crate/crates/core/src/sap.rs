//! Subcarrier-activation-pattern combinatorics.
//!
//! Index bits select one of the first `2^p1` k-combinations of `{0..n-1}`
//! in lexicographic order, where `p1 = floor(log2 C(n, k))`. Ranking and
//! unranking use the combinadic number system, so the mapping is
//! deterministic and cheap in both directions.

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k); 0 when k > n.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1usize;
    for i in 1..=k {
        result = result * (n - (k - i)) / i;
    }
    result
}

/// Number of index bits carried by one subblock: floor(log2 C(n, k)).
pub fn index_bits(n: usize, k: usize) -> usize {
    let total = binomial(n, k);
    debug_assert!(total >= 1);
    (usize::BITS - 1 - total.leading_zeros()) as usize
}

/// Rank of a pattern relative to the usable codebook.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternRank {
    /// Lexicographic rank below `2^p1`; maps back to index bits.
    Codebook(usize),
    /// Valid combination, but beyond the `2^p1` patterns carrying data.
    Unused,
}

/// Unrank: the `idx`-th k-combination of `{0..n-1}` in lexicographic order.
pub fn sap_index_to_pattern(idx: usize, n: usize, k: usize) -> Result<Vec<usize>> {
    let codebook_size = 1usize << index_bits(n, k);
    if idx >= codebook_size {
        return Err(Error::SapIndexOutOfRange {
            index: idx,
            codebook_size,
        });
    }
    let mut rank = idx;
    let mut pattern = Vec::with_capacity(k);
    let mut next = 0usize;
    for slot in 0..k {
        let mut candidate = next;
        loop {
            let below = binomial(n - candidate - 1, k - slot - 1);
            if below <= rank {
                rank -= below;
                candidate += 1;
            } else {
                pattern.push(candidate);
                next = candidate + 1;
                break;
            }
        }
    }
    Ok(pattern)
}

/// Rank a sorted pattern; patterns past the codebook report [`PatternRank::Unused`].
pub fn pattern_to_sap_index(pattern: &[usize], n: usize, k: usize) -> Result<PatternRank> {
    if pattern.len() != k {
        return Err(Error::InvalidPattern {
            expected: k,
            got: pattern.len(),
        });
    }
    let mut rank = 0usize;
    for (slot, &c) in pattern.iter().enumerate() {
        let start = if slot == 0 { 0 } else { pattern[slot - 1] + 1 };
        for j in start..c {
            rank += binomial(n - j - 1, k - slot - 1);
        }
    }
    let codebook_size = 1usize << index_bits(n, k);
    if rank < codebook_size {
        Ok(PatternRank::Codebook(rank))
    } else {
        Ok(PatternRank::Unused)
    }
}

/// Precomputed codebook of the `2^p1` usable activation patterns.
#[derive(Debug, Clone)]
pub struct Codebook {
    n: usize,
    k: usize,
    index_bits: usize,
    patterns: Vec<Vec<usize>>,
}

impl Codebook {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidConfig(format!(
                "active count {k} out of range 1..={n}"
            )));
        }
        let p1 = index_bits(n, k);
        let patterns = (0..1usize << p1)
            .map(|idx| sap_index_to_pattern(idx, n, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            k,
            index_bits: p1,
            patterns,
        })
    }

    pub fn subblock_len(&self) -> usize {
        self.n
    }

    pub fn active_count(&self) -> usize {
        self.k
    }

    pub fn index_bits(&self) -> usize {
        self.index_bits
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn pattern(&self, idx: usize) -> &[usize] {
        &self.patterns[idx]
    }

    pub fn patterns(&self) -> impl Iterator<Item = (usize, &[usize])> {
        self.patterns.iter().enumerate().map(|(i, p)| (i, p.as_slice()))
    }

    pub fn rank(&self, pattern: &[usize]) -> Result<PatternRank> {
        pattern_to_sap_index(pattern, self.n, self.k)
    }
}

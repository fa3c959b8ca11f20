use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::entropy::{RankDistribution, RankSource};
use crate::{Error, Result};

/// Token multiplicities. Partial counts over disjoint chunks of a stream
/// merge into the same result as counting the whole stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TokenCounts {
    counts: BTreeMap<String, u64>,
    total: u64,
}

impl TokenCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, token: &str) {
        match self.counts.get_mut(token) {
            Some(c) => *c += 1,
            None => {
                self.counts.insert(token.into(), 1);
            }
        }
        self.total += 1;
    }

    pub fn merge(&mut self, other: &TokenCounts) {
        for (token, &c) in &other.counts {
            *self.counts.entry(token.clone()).or_insert(0) += c;
        }
        self.total += other.total;
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    /// Orders tokens by descending count, ties broken by ascending token.
    pub fn rank(self) -> Result<TokenRanking> {
        if self.total == 0 {
            return Err(Error::Empty);
        }
        let mut entries: Vec<(String, u64)> = self.counts.into_iter().collect();
        // BTreeMap order is already lexicographic; a stable sort keeps it
        // within equal counts.
        entries.sort_by_key(|e| core::cmp::Reverse(e.1));
        Ok(TokenRanking {
            entries,
            total: self.total,
        })
    }
}

impl<S: AsRef<str>> Extend<S> for TokenCounts {
    fn extend<I: IntoIterator<Item = S>>(&mut self, iter: I) {
        for t in iter {
            self.add(t.as_ref());
        }
    }
}

/// Tokens in rank order with their counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenRanking {
    entries: Vec<(String, u64)>,
    total: u64,
}

impl TokenRanking {
    /// `(token, count)` for ranks 1..=R.
    pub fn entries(&self) -> &[(String, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max_rank(&self) -> u64 {
        self.entries.len() as u64
    }

    pub fn distribution(&self) -> Result<RankDistribution> {
        let total = self.total as f64;
        let freqs = self
            .entries
            .iter()
            .map(|(_, c)| *c as f64 / total)
            .collect();
        RankDistribution::new(RankSource::Empirical, freqs)
    }
}

/// Counts and ranks a token stream.
pub fn rank_frequency_of_tokens<I, S>(tokens: I) -> Result<TokenRanking>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut counts = TokenCounts::new();
    counts.extend(tokens);
    counts.rank()
}

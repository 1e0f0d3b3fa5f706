//! Character n-gram tables and affix word discovery.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{is_cjk, Poem};
use crate::error::{Error, Result};
use crate::index::CorpusIndex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Global,
    Author(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct NGramTable {
    pub n: usize,
    pub scope: Scope,
    pub entries: HashMap<String, u64>,
}

impl NGramTable {
    pub fn get(&self, gram: &str) -> u64 {
        self.entries.get(gram).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }
}

pub(crate) fn merge_counts<K: std::hash::Hash + Eq>(
    a: HashMap<K, u64>,
    b: HashMap<K, u64>,
) -> HashMap<K, u64> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for (k, v) in small {
        *big.entry(k).or_default() += v;
    }
    big
}

/// Sorts `(key, count)` pairs by descending count, ties in code-point order.
pub fn rank_counts<K: Ord, I>(counts: I) -> Vec<(K, u64)>
where
    I: IntoIterator<Item = (K, u64)>,
{
    let mut v: Vec<(K, u64)> = counts.into_iter().collect();
    v.sort_unstable_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    v
}

/// Counts every window of `n` consecutive characters inside a line.
pub fn ngram_table(poems: &[Poem], n: usize, author: Option<&str>) -> Result<NGramTable> {
    if n < 1 {
        return Err(Error::arg("n must be at least 1"));
    }
    let entries = poems
        .par_iter()
        .filter(|p| author.is_none_or(|a| p.author == a))
        .fold(HashMap::new, |mut acc: HashMap<String, u64>, poem| {
            for line in &poem.lines {
                for window in line.chars.windows(n) {
                    *acc.entry(window.iter().collect()).or_default() += 1;
                }
            }
            acc
        })
        .reduce(HashMap::new, merge_counts);
    Ok(NGramTable {
        n,
        scope: author.map_or(Scope::Global, |a| Scope::Author(a.to_string())),
        entries,
    })
}

pub fn top_k(table: &NGramTable, k: usize) -> Vec<(String, u64)> {
    let mut ranked = rank_counts(table.entries.iter().map(|(g, &c)| (g.clone(), c)));
    ranked.truncate(k);
    ranked
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// The target character ends the word.
    Suffix,
    /// The target character starts the word.
    Prefix,
}

/// Words of `word_len` characters that end with `target`.
pub fn words_with_suffix(
    index: &CorpusIndex,
    target: char,
    word_len: usize,
    author: Option<&str>,
) -> Result<BTreeMap<String, u64>> {
    affix_words(index, target, Side::Suffix, word_len, author)
}

/// Words of `word_len` characters that start with `target`.
pub fn words_with_prefix(
    index: &CorpusIndex,
    target: char,
    word_len: usize,
    author: Option<&str>,
) -> Result<BTreeMap<String, u64>> {
    affix_words(index, target, Side::Prefix, word_len, author)
}

pub fn affix_words(
    index: &CorpusIndex,
    target: char,
    side: Side,
    word_len: usize,
    author: Option<&str>,
) -> Result<BTreeMap<String, u64>> {
    if !is_cjk(target) {
        return Err(Error::arg(format!("`{target}` is not a CJK character")));
    }
    if word_len < 2 {
        return Err(Error::arg("word length must be at least 2"));
    }
    let mut words = BTreeMap::new();
    for &pos in index.positions(target) {
        let pos = pos as usize;
        if author.is_some_and(|a| index.author(index.poem_of(pos)) != a) {
            continue;
        }
        let line = index.line_range(pos);
        let start = match side {
            Side::Suffix => match (pos + 1).checked_sub(word_len) {
                Some(s) if s >= line.start => s,
                _ => continue,
            },
            Side::Prefix => {
                if pos + word_len > line.end {
                    continue;
                }
                pos
            }
        };
        let word: String = index.slice(start..start + word_len).iter().collect();
        *words.entry(word).or_default() += 1;
    }
    Ok(words)
}

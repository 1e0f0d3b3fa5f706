//! Context windows and windowed co-occurrence counts around a target word.
//!
//! Distance between two occurrences is the number of non-delimiter characters
//! strictly between their nearer ends, counted across line breaks but never
//! across poems. Occurrences that share characters are never paired.

use std::collections::{HashMap, HashSet};
use std::ops::Range;

use serde::Serialize;

use crate::corpus::is_delimiter;
use crate::error::{Error, Result};
use crate::index::CorpusIndex;
use crate::lexstats::rank_counts;
use crate::style::Lexicon;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub poem_id: String,
    pub line: usize,
    pub offset: usize,
    pub word: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextWindow {
    pub center: Occurrence,
    pub before: String,
    pub after: String,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollocationRecord {
    pub target: String,
    pub collocate: String,
    pub window: usize,
    pub count: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CountMode {
    /// Every (target occurrence, collocate occurrence) pair counts once.
    #[default]
    Pairs,
    /// Each poem counts at most once per collocate.
    Poems,
}

#[derive(Clone, Debug)]
pub struct CollocateOptions<'a> {
    pub window: usize,
    pub top: usize,
    /// Length of candidate grams when no lexicon is given.
    pub candidate_len: usize,
    /// Restricts candidates to these words (of any length).
    pub lexicon: Option<&'a Lexicon>,
    pub mode: CountMode,
}

impl Default for CollocateOptions<'_> {
    fn default() -> Self {
        CollocateOptions {
            window: 30,
            top: 20,
            candidate_len: 2,
            lexicon: None,
            mode: CountMode::Pairs,
        }
    }
}

/// Characters strictly between two spans, or `None` when they overlap.
pub fn gap(a: &Range<usize>, b: &Range<usize>) -> Option<usize> {
    if a.end <= b.start {
        Some(b.start - a.end)
    } else if b.end <= a.start {
        Some(a.start - b.end)
    } else {
        None
    }
}

fn word_chars(word: &str) -> Result<Vec<char>> {
    let chars: Vec<char> = word.chars().collect();
    if chars.is_empty() {
        return Err(Error::arg("word must not be empty"));
    }
    if chars.iter().any(|&c| is_delimiter(c)) {
        return Err(Error::arg(format!("`{word}` contains a delimiter")));
    }
    Ok(chars)
}

fn occurrence_at(index: &CorpusIndex, flat: usize, word: &str) -> Occurrence {
    let pos = index.locate(flat);
    Occurrence {
        poem_id: index.poem_id(pos.poem).to_string(),
        line: pos.line,
        offset: pos.offset,
        word: word.to_string(),
    }
}

/// Every within-line occurrence of `word`, in corpus order.
pub fn occurrences(index: &CorpusIndex, word: &str) -> Result<Vec<Occurrence>> {
    let chars = word_chars(word)?;
    Ok(index
        .find(&chars)
        .into_iter()
        .map(|p| occurrence_at(index, p, word))
        .collect())
}

pub fn context_windows(index: &CorpusIndex, word: &str, n: usize) -> Result<Vec<ContextWindow>> {
    if n < 1 {
        return Err(Error::arg("window must be at least 1"));
    }
    let chars = word_chars(word)?;
    Ok(index
        .find(&chars)
        .into_iter()
        .map(|start| {
            let end = start + chars.len();
            let poem = index.poem_range(index.poem_of(start));
            let before = start.saturating_sub(n).max(poem.start)..start;
            let after = end..(end + n).min(poem.end);
            ContextWindow {
                center: occurrence_at(index, start, word),
                before: index.slice(before).iter().collect(),
                after: index.slice(after).iter().collect(),
                n,
            }
        })
        .collect())
}

/// Most frequent collocates of `target` within `window` characters.
pub fn collocates(
    index: &CorpusIndex,
    target: &str,
    window: usize,
    top: usize,
    candidate_len: usize,
) -> Result<Vec<CollocationRecord>> {
    collocates_with(
        index,
        target,
        &CollocateOptions {
            window,
            top,
            candidate_len,
            ..Default::default()
        },
    )
}

pub fn collocates_with(
    index: &CorpusIndex,
    target: &str,
    opts: &CollocateOptions<'_>,
) -> Result<Vec<CollocationRecord>> {
    if opts.window < 1 {
        return Err(Error::arg("window must be at least 1"));
    }
    let target_chars = word_chars(target)?;

    let lexicon: Option<HashSet<Vec<char>>> = opts
        .lexicon
        .map(|l| l.words.iter().map(|w| w.chars().collect()).collect());
    let lengths: Vec<usize> = match &lexicon {
        Some(words) => {
            let mut ls: Vec<usize> = words.iter().map(Vec::len).collect();
            ls.sort_unstable();
            ls.dedup();
            ls
        }
        None => {
            if opts.candidate_len < 1 {
                return Err(Error::arg("candidate length must be at least 1"));
            }
            vec![opts.candidate_len]
        }
    };

    let n = opts.window;
    let mut pair_counts: HashMap<&[char], u64> = HashMap::new();
    let mut poem_hits: HashSet<(usize, &[char])> = HashSet::new();

    for start in index.find(&target_chars) {
        let span = start..start + target_chars.len();
        let poem_no = index.poem_of(start);
        let poem = index.poem_range(poem_no);
        for &len in &lengths {
            if poem.len() < len {
                continue;
            }
            let lo = span.start.saturating_sub(n + len).max(poem.start);
            let hi = (span.end + n).min(poem.end - len);
            for cs in lo..=hi {
                let cand = cs..cs + len;
                match gap(&span, &cand) {
                    Some(g) if g <= n => {}
                    _ => continue,
                }
                if !index.fits_in_line(cs, len) {
                    continue;
                }
                let gram = index.slice(cand);
                if gram == target_chars.as_slice() {
                    continue;
                }
                if lexicon.as_ref().is_some_and(|l| !l.contains(gram)) {
                    continue;
                }
                match opts.mode {
                    CountMode::Pairs => *pair_counts.entry(gram).or_default() += 1,
                    CountMode::Poems => {
                        poem_hits.insert((poem_no, gram));
                    }
                }
            }
        }
    }

    if opts.mode == CountMode::Poems {
        for (_, gram) in poem_hits {
            *pair_counts.entry(gram).or_default() += 1;
        }
    }

    let mut ranked = rank_counts(
        pair_counts
            .into_iter()
            .map(|(g, c)| (g.iter().collect::<String>(), c)),
    );
    ranked.truncate(opts.top);
    Ok(ranked
        .into_iter()
        .map(|(collocate, count)| CollocationRecord {
            target: target.to_string(),
            collocate,
            window: n,
            count,
        })
        .collect())
}

/// Occurrence pairs of `w1` and `w2` in the same poem within `n` characters.
pub fn cooccurrence_count(index: &CorpusIndex, w1: &str, w2: &str, n: usize) -> Result<u64> {
    if w1 == w2 {
        return Err(Error::arg("co-occurrence needs two different words"));
    }
    if n < 1 {
        return Err(Error::arg("window must be at least 1"));
    }
    let a = word_chars(w1)?;
    let b = word_chars(w2)?;
    let first = index.find(&a);
    let second = index.find(&b);

    let mut count = 0;
    for s1 in first {
        let span1 = s1..s1 + a.len();
        let poem = index.poem_of(s1);
        let lo = s1.saturating_sub(n + b.len());
        let hi = span1.end + n;
        let from = second.partition_point(|&p| p < lo);
        for &s2 in second[from..].iter().take_while(|&&p| p <= hi) {
            let span2 = s2..s2 + b.len();
            if index.poem_of(s2) == poem && gap(&span1, &span2).is_some_and(|g| g <= n) {
                count += 1;
            }
        }
    }
    Ok(count)
}

//! Couplets, positional word alignment and color correspondences.
//!
//! Regulated eight-line poems pair lines 3/4 and 5/6. Everything else is
//! paired heuristically: lines (1,2), (3,4), ... whenever both lines have the
//! same length. Results carry that confidence so either reading can be
//! filtered out. Nothing here checks tones or meaning; aligned pairs are
//! candidates only.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::corpus::Poem;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Confidence {
    Structural,
    Heuristic,
}

impl fmt::Display for Confidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Confidence::Structural => "structural",
            Confidence::Heuristic => "heuristic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Couplet {
    pub poem_id: String,
    /// Zero-based index of the first line; the second line follows it.
    pub first: usize,
    pub confidence: Confidence,
}

impl Couplet {
    pub fn second(&self) -> usize {
        self.first + 1
    }

    /// One-based line numbers, e.g. `(3, 4)`.
    pub fn slot(&self) -> (usize, usize) {
        (self.first + 1, self.first + 2)
    }
}

pub fn extract_couplets(poem: &Poem) -> Vec<Couplet> {
    let couplet = |first, confidence| Couplet {
        poem_id: poem.id.clone(),
        first,
        confidence,
    };
    if poem.form.is_lushi() {
        return vec![
            couplet(2, Confidence::Structural),
            couplet(4, Confidence::Structural),
        ];
    }
    poem.lines
        .chunks_exact(2)
        .enumerate()
        .filter(|(_, pair)| pair[0].len() == pair[1].len())
        .map(|(i, _)| couplet(2 * i, Confidence::Heuristic))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlignedPair {
    pub poem_id: String,
    pub first_line: usize,
    pub offset: usize,
    pub length: usize,
    pub word_a: String,
    pub word_b: String,
    /// False when both words are identical.
    pub candidate: bool,
}

/// Same-offset word pairs of `length` characters across a couplet.
pub fn aligned_word_pairs(
    poem: &Poem,
    couplet: &Couplet,
    length: usize,
) -> Result<Vec<AlignedPair>> {
    let (a, b) = match (
        poem.lines.get(couplet.first),
        poem.lines.get(couplet.second()),
    ) {
        (Some(a), Some(b)) if a.len() == b.len() => (a, b),
        _ => {
            return Err(Error::arg(format!(
                "couplet at line {} does not belong to poem `{}`",
                couplet.first + 1,
                poem.id
            )))
        }
    };
    if length < 1 || length > a.len() {
        return Err(Error::arg(format!(
            "pair length {length} outside 1..={}",
            a.len()
        )));
    }
    Ok((0..=a.len() - length)
        .map(|offset| {
            let word_a: String = a.chars[offset..offset + length].iter().collect();
            let word_b: String = b.chars[offset..offset + length].iter().collect();
            AlignedPair {
                poem_id: poem.id.clone(),
                first_line: couplet.first,
                offset,
                length,
                candidate: word_a != word_b,
                word_a,
                word_b,
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub structural: u64,
    pub heuristic: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.structural + self.heuristic
    }

    pub fn get(&self, class: Option<Confidence>) -> u64 {
        match class {
            Some(Confidence::Structural) => self.structural,
            Some(Confidence::Heuristic) => self.heuristic,
            None => self.total(),
        }
    }

    fn bump(&mut self, class: Confidence) {
        match class {
            Confidence::Structural => self.structural += 1,
            Confidence::Heuristic => self.heuristic += 1,
        }
    }
}

/// Counts of distinct colors meeting at the same offset of a couplet, keyed
/// by unordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorMatrix {
    pub colors: Vec<char>,
    #[serde(rename = "pairs", serialize_with = "serialize_pairs")]
    counts: BTreeMap<(char, char), ClassCounts>,
}

#[derive(Serialize)]
struct PairEntry {
    a: char,
    b: char,
    #[serde(flatten)]
    counts: ClassCounts,
}

fn serialize_pairs<S: serde::Serializer>(
    counts: &BTreeMap<(char, char), ClassCounts>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(
        counts
            .iter()
            .map(|(&(a, b), &counts)| PairEntry { a, b, counts }),
    )
}

fn unordered(a: char, b: char) -> (char, char) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl ColorMatrix {
    pub fn counts(&self, a: char, b: char) -> ClassCounts {
        if a == b {
            return ClassCounts::default();
        }
        self.counts
            .get(&unordered(a, b))
            .copied()
            .unwrap_or_default()
    }

    pub fn get(&self, a: char, b: char, class: Option<Confidence>) -> u64 {
        self.counts(a, b).get(class)
    }

    /// Non-zero unordered pairs in code-point order.
    pub fn pairs(&self) -> impl Iterator<Item = ((char, char), ClassCounts)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Colors paired with `color`, by descending count then code point.
    pub fn column(&self, color: char, class: Option<Confidence>) -> Vec<(char, u64)> {
        let mut col: Vec<(char, u64)> = self
            .colors
            .iter()
            .filter(|&&c| c != color)
            .map(|&c| (c, self.get(color, c, class)))
            .filter(|&(_, n)| n > 0)
            .collect();
        col.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        col
    }
}

pub fn color_matrix(poems: &[Poem], colors: &[char]) -> Result<ColorMatrix> {
    let palette: BTreeSet<char> = colors.iter().copied().collect();
    if palette.len() != colors.len() {
        return Err(Error::arg("color palette contains duplicates"));
    }
    let mut counts: BTreeMap<(char, char), ClassCounts> = BTreeMap::new();
    for poem in poems {
        for couplet in extract_couplets(poem) {
            let a = &poem.lines[couplet.first].chars;
            let b = &poem.lines[couplet.second()].chars;
            for (&x, &y) in a.iter().zip(b) {
                if x != y && palette.contains(&x) && palette.contains(&y) {
                    counts
                        .entry(unordered(x, y))
                        .or_default()
                        .bump(couplet.confidence);
                }
            }
        }
    }
    Ok(ColorMatrix {
        colors: colors.to_vec(),
        counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntithesisInstance {
    pub poem_id: String,
    pub author: String,
    pub title: String,
    /// One-based line numbers of the couplet.
    pub slot: (usize, usize),
    pub offset: usize,
    pub confidence: Confidence,
    /// Word found in the first line.
    pub first_word: String,
}

/// Couplets in which `word_a` and `word_b` face each other, in either order.
pub fn antithesis_instances(
    poems: &[Poem],
    word_a: &str,
    word_b: &str,
    length: usize,
) -> Result<Vec<AntithesisInstance>> {
    let la = word_a.chars().count();
    let lb = word_b.chars().count();
    if la != length || lb != length {
        return Err(Error::arg(format!(
            "both words must be {length} characters long"
        )));
    }
    let mut found = Vec::new();
    for poem in poems {
        for couplet in extract_couplets(poem) {
            if poem.lines[couplet.first].len() < length {
                continue;
            }
            for pair in aligned_word_pairs(poem, &couplet, length)? {
                let hit = pair.candidate
                    && ((pair.word_a == word_a && pair.word_b == word_b)
                        || (pair.word_a == word_b && pair.word_b == word_a));
                if hit {
                    found.push(AntithesisInstance {
                        poem_id: poem.id.clone(),
                        author: poem.author.clone(),
                        title: poem.title.clone(),
                        slot: couplet.slot(),
                        offset: pair.offset,
                        confidence: couplet.confidence,
                        first_word: pair.word_a,
                    });
                }
            }
        }
    }
    Ok(found)
}

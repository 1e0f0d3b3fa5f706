//! Character-position index over poem bodies.
//!
//! Every line character of every poem is laid out in one flat array, poem
//! after poem, with delimiters removed. A flat position therefore doubles as
//! a within-poem ordinal that ignores line breaks, which is the distance
//! metric the collocation queries need. An inverted map from character to
//! flat positions answers affix and occurrence lookups.

use std::collections::HashMap;
use std::ops::Range;

use serde::Serialize;

use crate::corpus::Poem;

/// Address of one character: poem ordinal, line within the poem and offset
/// within the line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Position {
    pub poem: usize,
    pub line: usize,
    pub offset: usize,
}

#[derive(Clone, Copy, Debug)]
struct LineSpan {
    poem: u32,
    line: u32,
    start: u32,
    len: u32,
}

#[derive(Clone, Debug)]
pub struct CorpusIndex {
    ids: Vec<String>,
    authors: Vec<String>,
    text: Vec<char>,
    lines: Vec<LineSpan>,
    line_of: Vec<u32>,
    poem_spans: Vec<Range<u32>>,
    positions: HashMap<char, Vec<u32>>,
}

impl CorpusIndex {
    pub fn build(poems: &[Poem]) -> Self {
        let total: usize = poems
            .iter()
            .flat_map(|p| p.lines.iter())
            .map(|l| l.len())
            .sum();
        assert!(
            total < u32::MAX as usize,
            "corpus too large for 32-bit positions"
        );

        let mut text = Vec::with_capacity(total);
        let mut line_of = Vec::with_capacity(total);
        let mut lines = Vec::new();
        let mut poem_spans = Vec::with_capacity(poems.len());
        let mut positions: HashMap<char, Vec<u32>> = HashMap::new();

        for (p, poem) in poems.iter().enumerate() {
            let poem_start = text.len() as u32;
            for (l, line) in poem.lines.iter().enumerate() {
                let span_id = lines.len() as u32;
                lines.push(LineSpan {
                    poem: p as u32,
                    line: l as u32,
                    start: text.len() as u32,
                    len: line.len() as u32,
                });
                for &c in &line.chars {
                    positions.entry(c).or_default().push(text.len() as u32);
                    text.push(c);
                    line_of.push(span_id);
                }
            }
            poem_spans.push(poem_start..text.len() as u32);
        }

        CorpusIndex {
            ids: poems.iter().map(|p| p.id.clone()).collect(),
            authors: poems.iter().map(|p| p.author.clone()).collect(),
            text,
            lines,
            line_of,
            poem_spans,
            positions,
        }
    }

    pub fn poem_count(&self) -> usize {
        self.ids.len()
    }

    /// Number of indexed (non-delimiter) characters.
    pub fn char_count(&self) -> usize {
        self.text.len()
    }

    pub fn poem_id(&self, poem: usize) -> &str {
        &self.ids[poem]
    }

    pub fn author(&self, poem: usize) -> &str {
        &self.authors[poem]
    }

    pub fn has_author(&self, author: &str) -> bool {
        self.authors.iter().any(|a| a == author)
    }

    pub fn char_at(&self, flat: usize) -> char {
        self.text[flat]
    }

    /// Slice of the flat text; callers keep ranges within one line or poem.
    pub fn slice(&self, range: Range<usize>) -> &[char] {
        &self.text[range]
    }

    /// Flat positions of `c`, ascending.
    pub fn positions(&self, c: char) -> &[u32] {
        self.positions.get(&c).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn distinct_chars(&self) -> usize {
        self.positions.len()
    }

    pub fn locate(&self, flat: usize) -> Position {
        let span = self.lines[self.line_of[flat] as usize];
        Position {
            poem: span.poem as usize,
            line: span.line as usize,
            offset: flat - span.start as usize,
        }
    }

    pub fn poem_of(&self, flat: usize) -> usize {
        self.lines[self.line_of[flat] as usize].poem as usize
    }

    /// Flat range of the line containing `flat`.
    pub fn line_range(&self, flat: usize) -> Range<usize> {
        let span = self.lines[self.line_of[flat] as usize];
        span.start as usize..(span.start + span.len) as usize
    }

    /// Flat range of a whole poem body.
    pub fn poem_range(&self, poem: usize) -> Range<usize> {
        let r = &self.poem_spans[poem];
        r.start as usize..r.end as usize
    }

    /// Flat range of one line.
    pub fn line_span(&self, poem: usize, line: usize) -> Option<Range<usize>> {
        let range = self.poem_range(poem);
        if range.is_empty() {
            return None;
        }
        let first = self.line_of[range.start] as usize;
        let span = self.lines.get(first + line)?;
        (span.poem as usize == poem).then(|| span.start as usize..(span.start + span.len) as usize)
    }

    /// Whether the `len` characters starting at `flat` lie inside one line.
    pub fn fits_in_line(&self, flat: usize, len: usize) -> bool {
        flat + len <= self.line_range(flat).end
    }

    /// Within-line start positions of `word`, in corpus order.
    pub fn find(&self, word: &[char]) -> Vec<usize> {
        let Some((&first, rest)) = word.split_first() else {
            return Vec::new();
        };
        self.positions(first)
            .iter()
            .map(|&p| p as usize)
            .filter(|&p| {
                self.fits_in_line(p, word.len()) && self.text[p + 1..p + word.len()] == *rest
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Poem> {
        vec![
            Poem::new("a", "", "甲", "白日依山盡，黃河入海流。"),
            Poem::new("b", "", "乙", "白雲，白日。"),
        ]
    }

    #[test]
    fn positions_cover_every_character_once() {
        let poems = sample();
        let index = CorpusIndex::build(&poems);
        assert_eq!(index.char_count(), 14);
        let total: usize = "白日依山盡黃河入海流雲"
            .chars()
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .map(|c| index.positions(c).len())
            .sum();
        assert_eq!(total, index.char_count());
        for flat in 0..index.char_count() {
            let pos = index.locate(flat);
            assert_eq!(
                poems[pos.poem].lines[pos.line].chars[pos.offset],
                index.char_at(flat)
            );
        }
    }

    #[test]
    fn find_stays_within_lines() {
        let index = CorpusIndex::build(&sample());
        let hits: Vec<Position> = index
            .find(&['白', '日'])
            .into_iter()
            .map(|p| index.locate(p))
            .collect();
        assert_eq!(
            hits,
            vec![
                Position {
                    poem: 0,
                    line: 0,
                    offset: 0
                },
                Position {
                    poem: 1,
                    line: 1,
                    offset: 0
                },
            ]
        );
        // 盡黃 spans a comma
        assert!(index.find(&['盡', '黃']).is_empty());
        assert!(index.find(&[]).is_empty());
    }

    #[test]
    fn ranges() {
        let index = CorpusIndex::build(&sample());
        assert_eq!(index.poem_range(1), 10..14);
        assert_eq!(index.line_span(1, 1), Some(12..14));
        assert_eq!(index.line_span(0, 2), None);
        assert_eq!(index.line_range(7), 5..10);
    }
}

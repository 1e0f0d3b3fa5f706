//! Per-poet lexicon usage: the share of a poet's works that use at least one
//! word of a lexicon, and raw occurrence profiles.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::corpus::{is_delimiter, Line, Poem};
use crate::error::{Error, Result};

/// A named word list. Word order follows the source file; duplicates are
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lexicon {
    pub name: String,
    pub words: Vec<String>,
}

impl Lexicon {
    pub fn new<I, S>(name: impl Into<String>, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let name = name.into();
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for (i, word) in words.into_iter().enumerate() {
            let word: String = word.into();
            if word.is_empty() {
                continue;
            }
            if word.chars().any(|c| is_delimiter(c) || c.is_whitespace()) {
                return Err(Error::MalformedLexicon {
                    name,
                    line: i + 1,
                    message: format!("`{word}` contains a delimiter or whitespace"),
                });
            }
            if seen.insert(word.clone()) {
                kept.push(word);
            }
        }
        if kept.is_empty() {
            return Err(Error::arg(format!("lexicon `{name}` is empty")));
        }
        Ok(Lexicon { name, words: kept })
    }

    /// One word per line; `#` starts a comment.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let name = name.into();
        let mut words = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let word = raw.split('#').next().unwrap_or("").trim();
            if word.is_empty() {
                continue;
            }
            if word.chars().any(|c| is_delimiter(c) || c.is_whitespace()) {
                return Err(Error::MalformedLexicon {
                    name,
                    line: i + 1,
                    message: format!("`{word}` is not a single word"),
                });
            }
            words.push(word.to_string());
        }
        Lexicon::new(name, words)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Lexicon::parse(name, &text)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.iter().any(|w| w == word)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UsageRatio {
    pub author: String,
    pub lexicon: String,
    /// Poems with at least one lexicon word.
    pub numerator: usize,
    /// All poems by the author.
    pub denominator: usize,
}

impl UsageRatio {
    pub fn percent(&self) -> f64 {
        100.0 * self.numerator as f64 / self.denominator as f64
    }

    /// Hundredths of a percent, rounded half up.
    pub fn basis_points(&self) -> u64 {
        let num = self.numerator as u64 * 10_000;
        let den = self.denominator as u64;
        (2 * num + den) / (2 * den)
    }
}

impl fmt::Display for UsageRatio {
    /// Two decimals, as in `46.65`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bp = self.basis_points();
        write!(f, "{}.{:02}", bp / 100, bp % 100)
    }
}

fn occurrences_in_line(line: &Line, word: &[char]) -> u64 {
    if word.is_empty() || word.len() > line.len() {
        return 0;
    }
    line.chars
        .windows(word.len())
        .filter(|w| *w == word)
        .count() as u64
}

fn poem_uses(poem: &Poem, words: &[Vec<char>]) -> bool {
    words
        .iter()
        .any(|w| poem.lines.iter().any(|l| occurrences_in_line(l, w) > 0))
}

fn poems_by<'a>(poems: &'a [Poem], author: &str) -> Result<Vec<&'a Poem>> {
    let by: Vec<&Poem> = poems.iter().filter(|p| p.author == author).collect();
    if by.is_empty() {
        return Err(Error::UnknownAuthor(author.to_string()));
    }
    Ok(by)
}

fn char_words(lexicon: &Lexicon) -> Vec<Vec<char>> {
    lexicon.words.iter().map(|w| w.chars().collect()).collect()
}

pub fn usage_ratio(poems: &[Poem], author: &str, lexicon: &Lexicon) -> Result<UsageRatio> {
    let by = poems_by(poems, author)?;
    let words = char_words(lexicon);
    Ok(ratio_over(&by, author, &lexicon.name, &words))
}

fn ratio_over(by: &[&Poem], author: &str, name: &str, words: &[Vec<char>]) -> UsageRatio {
    UsageRatio {
        author: author.to_string(),
        lexicon: name.to_string(),
        numerator: by.iter().filter(|p| poem_uses(p, words)).count(),
        denominator: by.len(),
    }
}

/// Occurrences of each lexicon word in the author's poems, every start
/// offset counted.
pub fn lexical_profile(
    poems: &[Poem],
    author: &str,
    lexicon: &Lexicon,
) -> Result<BTreeMap<String, u64>> {
    let by = poems_by(poems, author)?;
    Ok(profile_over(&by, lexicon))
}

fn profile_over(by: &[&Poem], lexicon: &Lexicon) -> BTreeMap<String, u64> {
    lexicon
        .words
        .iter()
        .map(|word| {
            let chars: Vec<char> = word.chars().collect();
            let n = by
                .iter()
                .flat_map(|p| p.lines.iter())
                .map(|l| occurrences_in_line(l, &chars))
                .sum();
            (word.clone(), n)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct WhiteRow {
    pub word: String,
    /// Occurrences of the word summed over the listed authors.
    pub total: u64,
    /// One singleton-lexicon ratio per author, in author order.
    pub cells: Vec<UsageRatio>,
}

/// The word-by-poet percentage table, with the whole-lexicon ratio per poet.
#[derive(Clone, Debug, Serialize)]
pub struct WhiteTable {
    pub authors: Vec<String>,
    pub lexicon_ratio: Vec<UsageRatio>,
    pub rows: Vec<WhiteRow>,
}

pub fn white_word_matrix(
    poems: &[Poem],
    authors: &[String],
    lexicon: &Lexicon,
) -> Result<WhiteTable> {
    let grouped: Vec<Vec<&Poem>> = authors
        .iter()
        .map(|a| poems_by(poems, a))
        .collect::<Result<_>>()?;
    let all_words = char_words(lexicon);

    let lexicon_ratio = authors
        .iter()
        .zip(&grouped)
        .map(|(a, by)| ratio_over(by, a, &lexicon.name, &all_words))
        .collect();

    let profiles: Vec<BTreeMap<String, u64>> =
        grouped.iter().map(|by| profile_over(by, lexicon)).collect();

    let rows = lexicon
        .words
        .iter()
        .zip(&all_words)
        .map(|(word, chars)| {
            let single = std::slice::from_ref(chars);
            WhiteRow {
                word: word.clone(),
                total: profiles.iter().map(|p| p[word]).sum(),
                cells: authors
                    .iter()
                    .zip(&grouped)
                    .map(|(a, by)| ratio_over(by, a, word, single))
                    .collect(),
            }
        })
        .collect();

    Ok(WhiteTable {
        authors: authors.to_vec(),
        lexicon_ratio,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lex(words: &[&str]) -> Lexicon {
        Lexicon::new("t", words.iter().copied()).unwrap()
    }

    #[test]
    fn full_coverage() {
        let poems = vec![Poem::new("1", "", "杜甫", "白頭搔更短，渾欲不勝簪。")];
        let r = usage_ratio(&poems, "杜甫", &lex(&["白頭"])).unwrap();
        assert_eq!((r.numerator, r.denominator), (1, 1));
        assert_eq!(r.to_string(), "100.00");
    }

    #[test]
    fn errors() {
        let poems = vec![Poem::new("1", "", "杜甫", "白頭")];
        assert!(matches!(
            usage_ratio(&poems, "李白", &lex(&["白頭"])),
            Err(Error::UnknownAuthor(_))
        ));
        assert!(Lexicon::new("e", Vec::<String>::new()).is_err());
        assert!(Lexicon::parse("e", "# only a comment\n\n").is_err());
        assert!(matches!(
            Lexicon::parse("bad", "白雲\n白，日\n"),
            Err(Error::MalformedLexicon { line: 2, .. })
        ));
    }

    #[test]
    fn lexicon_file_format() {
        let l = Lexicon::parse(
            "white",
            "# white words\n白日\n白髮 # gray hair\n\n白日\n皓齒\n",
        )
        .unwrap();
        assert_eq!(l.words, vec!["白日", "白髮", "皓齒"]);
        assert_eq!(l.name, "white");
    }

    #[test]
    fn rounding_is_half_up() {
        let r = |n, d| UsageRatio {
            author: String::new(),
            lexicon: String::new(),
            numerator: n,
            denominator: d,
        };
        assert_eq!(r(1, 8).to_string(), "12.50");
        // 1/1600 = 0.0625% -> 0.06, 1/800 = 0.125% -> 0.13
        assert_eq!(r(1, 1600).to_string(), "0.06");
        assert_eq!(r(1, 800).to_string(), "0.13");
        assert_eq!(r(2, 3).to_string(), "66.67");
        assert_eq!(r(0, 7).to_string(), "0.00");
    }

    #[test]
    fn matrix_cells() {
        let poems = vec![
            Poem::new("1", "", "X", "白日依山盡"),
            Poem::new("2", "", "X", "黃河入海流"),
            Poem::new("3", "", "Y", "白雲，白雲"),
        ];
        let authors = vec!["X".to_string(), "Y".to_string()];
        let table = white_word_matrix(&poems, &authors, &lex(&["白日", "白雲"])).unwrap();
        assert_eq!(table.rows[0].cells[0].to_string(), "50.00");
        assert_eq!(table.rows[0].cells[1].to_string(), "0.00");
        assert_eq!(table.rows[1].total, 2);
        assert_eq!(table.lexicon_ratio[1].to_string(), "100.00");
        assert!(white_word_matrix(&poems, &["Z".to_string()], &lex(&["白日"])).is_err());
    }

    #[test]
    fn profile_counts_every_start() {
        let poems = vec![Poem::new("1", "", "X", "春風春風")];
        let p = lexical_profile(&poems, "X", &lex(&["春風", "秋風", "風春"])).unwrap();
        assert_eq!(p["春風"], 2);
        assert_eq!(p["秋風"], 0);
        assert_eq!(p["風春"], 1);
        let p =
            lexical_profile(&[Poem::new("1", "", "X", "白白白")], "X", &lex(&["白白"])).unwrap();
        assert_eq!(p["白白"], 2);
    }
}

//! Poem ingestion: normalization, line segmentation, form classification and
//! corpus-level counts.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};

/// Author string used by the e-texts for works of unknown authorship.
pub const UNKNOWN_AUTHOR: &str = "不詳";

/// Sentence marks that end a line.
pub const DELIMITERS: [char; 7] = ['，', '。', '、', '；', '：', '？', '！'];

pub fn is_delimiter(c: char) -> bool {
    DELIMITERS.contains(&c)
}

/// CJK ideographs, including the extension and compatibility blocks.
pub fn is_cjk(c: char) -> bool {
    matches!(c as u32,
        0x3400..=0x4DBF
        | 0x4E00..=0x9FFF
        | 0xF900..=0xFAFF
        | 0x20000..=0x2A6DF
        | 0x2A700..=0x2EBEF
        | 0x2F800..=0x2FA1F
        | 0x30000..=0x3134F
        | 0x31350..=0x323AF
        | 0x3007)
}

fn full_width(c: char) -> char {
    match c {
        ',' => '，',
        '.' | '｡' => '。',
        '､' => '、',
        ';' => '；',
        ':' => '：',
        '?' => '？',
        '!' => '！',
        other => other,
    }
}

/// NFC, whitespace removal and half-width punctuation mapped to full width.
/// Character variants are left untouched.
pub fn normalize_text(raw: &str) -> String {
    raw.nfc()
        .filter(|c| !c.is_whitespace())
        .map(full_width)
        .collect()
}

/// One sentence of a poem body.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Line {
    pub chars: Vec<char>,
    /// The delimiter run that closed this line, usually a single mark.
    /// Empty when the body ends without punctuation.
    pub trailing: String,
}

impl Line {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn text(&self) -> String {
        self.chars.iter().collect()
    }
}

/// Splits a normalized body at every delimiter. Delimiters before the first
/// line are dropped; use [`Poem`] when the exact round trip matters.
pub fn segment_lines(body: &str) -> Vec<Line> {
    segment(body).1
}

fn segment(body: &str) -> (String, Vec<Line>) {
    let mut leading = String::new();
    let mut lines: Vec<Line> = Vec::new();
    let mut current: Vec<char> = Vec::new();
    for c in body.chars() {
        if is_delimiter(c) {
            if !current.is_empty() {
                lines.push(Line {
                    chars: std::mem::take(&mut current),
                    trailing: c.to_string(),
                });
            } else if let Some(last) = lines.last_mut() {
                last.trailing.push(c);
            } else {
                leading.push(c);
            }
        } else {
            current.push(c);
        }
    }
    if !current.is_empty() {
        lines.push(Line {
            chars: current,
            trailing: String::new(),
        });
    }
    (leading, lines)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VerseForm {
    /// Four lines of five characters.
    WuyanJueju,
    /// Four lines of seven characters.
    QiyanJueju,
    /// Eight lines of five characters.
    WuyanLushi,
    /// Eight lines of seven characters.
    QiyanLushi,
    Other,
}

impl VerseForm {
    pub fn is_lushi(self) -> bool {
        matches!(self, VerseForm::WuyanLushi | VerseForm::QiyanLushi)
    }
}

impl fmt::Display for VerseForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            VerseForm::WuyanJueju => "wuyan-jueju",
            VerseForm::QiyanJueju => "qiyan-jueju",
            VerseForm::WuyanLushi => "wuyan-lushi",
            VerseForm::QiyanLushi => "qiyan-lushi",
            VerseForm::Other => "other",
        };
        f.write_str(name)
    }
}

/// Classifies by line count and per-line length only.
pub fn classify_lines(lines: &[Line]) -> VerseForm {
    let Some(first) = lines.first() else {
        return VerseForm::Other;
    };
    let width = first.len();
    if lines.iter().any(|l| l.len() != width) {
        return VerseForm::Other;
    }
    match (lines.len(), width) {
        (4, 5) => VerseForm::WuyanJueju,
        (4, 7) => VerseForm::QiyanJueju,
        (8, 5) => VerseForm::WuyanLushi,
        (8, 7) => VerseForm::QiyanLushi,
        _ => VerseForm::Other,
    }
}

pub fn classify_form(poem: &Poem) -> VerseForm {
    classify_lines(&poem.lines)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poem {
    pub id: String,
    pub title: String,
    pub author: String,
    pub body_raw: String,
    /// `normalize_text(body_raw)`.
    pub body: String,
    /// Delimiters preceding the first line; almost always empty.
    pub leading: String,
    pub lines: Vec<Line>,
    pub form: VerseForm,
}

impl Poem {
    /// Builds a poem from raw record fields. An empty author becomes
    /// [`UNKNOWN_AUTHOR`].
    pub fn new(
        id: impl Into<String>,
        title: &str,
        author: &str,
        body_raw: impl Into<String>,
    ) -> Self {
        let body_raw = body_raw.into();
        let body = normalize_text(&body_raw);
        let (leading, lines) = segment(&body);
        let form = classify_lines(&lines);
        let author = normalize_text(author);
        let author = if author.is_empty() {
            UNKNOWN_AUTHOR.to_string()
        } else {
            author
        };
        Poem {
            id: id.into(),
            title: normalize_text(title),
            author,
            body_raw,
            body,
            leading,
            lines,
            form,
        }
    }

    pub fn has_unknown_author(&self) -> bool {
        self.author == UNKNOWN_AUTHOR
    }

    /// Lines joined with their delimiters; equals `body`.
    pub fn reassemble(&self) -> String {
        let mut out = self.leading.clone();
        for line in &self.lines {
            out.extend(line.chars.iter());
            out.push_str(&line.trailing);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusFormat {
    /// One JSON object per line with `id`, `title`, `author`, `body`.
    JsonLines,
    /// Records separated by `%%` lines: title, author, then body lines.
    PlainText,
}

impl CorpusFormat {
    /// Picks a format from the file extension, falling back to sniffing the
    /// first non-blank byte.
    pub fn detect(path: &Path, bytes: &[u8]) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl" | "ndjson" | "json") => CorpusFormat::JsonLines,
            Some("txt") => CorpusFormat::PlainText,
            _ => match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
                Some(b'{') => CorpusFormat::JsonLines,
                _ => CorpusFormat::PlainText,
            },
        }
    }
}

#[derive(Deserialize)]
struct JsonRecord {
    id: String,
    title: String,
    author: String,
    body: String,
}

pub fn parse_corpus(input: &[u8], format: CorpusFormat) -> Result<Vec<Poem>> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let line = input[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1;
        Error::InvalidUtf8 { line }
    })?;
    let poems = match format {
        CorpusFormat::JsonLines => parse_json_lines(text)?,
        CorpusFormat::PlainText => parse_plain_text(text)?,
    };
    let mut seen = HashSet::with_capacity(poems.len());
    for poem in &poems {
        if !seen.insert(poem.id.as_str()) {
            return Err(Error::DuplicateId(poem.id.clone()));
        }
    }
    Ok(poems)
}

fn parse_json_lines(text: &str) -> Result<Vec<Poem>> {
    let mut poems = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonRecord = serde_json::from_str(line).map_err(|e| {
            let full = e.to_string();
            let reason = full.split(" at line ").next().unwrap_or(&full);
            Error::MalformedRecord {
                line: i + 1,
                message: format!("{reason} (column {})", e.column()),
            }
        })?;
        if record.id.trim().is_empty() {
            return Err(Error::MalformedRecord {
                line: i + 1,
                message: "empty id".into(),
            });
        }
        poems.push(Poem::new(
            record.id,
            &record.title,
            &record.author,
            record.body,
        ));
    }
    Ok(poems)
}

fn parse_plain_text(text: &str) -> Result<Vec<Poem>> {
    // (first line number, lines)
    let mut records: Vec<(usize, Vec<&str>)> = vec![(1, Vec::new())];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim() == "%%" {
            records.push((i + 2, Vec::new()));
        } else {
            records.last_mut().expect("non-empty").1.push(line);
        }
    }

    let mut poems = Vec::new();
    for (start, record) in records {
        let mut lines = record.into_iter().skip_while(|l| l.trim().is_empty());
        let Some(title) = lines.next() else {
            continue;
        };
        let author = lines.next().ok_or_else(|| Error::MalformedRecord {
            line: start,
            message: "missing author line".into(),
        })?;
        let body: Vec<&str> = lines.collect();
        let id = (poems.len() + 1).to_string();
        poems.push(Poem::new(id, title, author, body.join("\n")));
    }
    Ok(poems)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub work_count: usize,
    /// Distinct authors, not counting the unknown marker.
    pub author_count: usize,
    /// Characters and punctuation in the normalized bodies.
    pub char_count: usize,
}

pub fn corpus_stats(poems: &[Poem]) -> CorpusStats {
    let authors: HashSet<&str> = poems
        .iter()
        .filter(|p| !p.has_unknown_author())
        .map(|p| p.author.as_str())
        .collect();
    CorpusStats {
        work_count: poems.len(),
        author_count: authors.len(),
        char_count: poems.iter().map(|p| p.body.chars().count()).sum(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuthorRank {
    pub author: String,
    pub works: usize,
    /// Set for the unknown-author marker, which is not a name.
    pub unknown: bool,
}

/// Authors by descending work count, ties in code-point order.
pub fn author_ranking(poems: &[Poem]) -> Vec<AuthorRank> {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for poem in poems {
        *counts.entry(poem.author.as_str()).or_default() += 1;
    }
    let mut ranking: Vec<AuthorRank> = counts
        .into_iter()
        .map(|(author, works)| AuthorRank {
            author: author.to_string(),
            works,
            unknown: author == UNKNOWN_AUTHOR,
        })
        .collect();
    ranking.sort_by(|a, b| b.works.cmp(&a.works).then_with(|| a.author.cmp(&b.author)));
    ranking
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const DENG: &str = "白日依山盡，黃河入海流。欲窮千里目，更上一層樓。";
    const CHUNWANG: &str = "國破山河在，城春草木深。感時花濺淚，恨別鳥驚心。烽火連三月，家書抵萬金。白頭搔更短，渾欲不勝簪。";

    fn lens(lines: &[Line]) -> Vec<usize> {
        lines.iter().map(Line::len).collect()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_text("白日, 依山"), "白日，依山");
        assert_eq!(normalize_text("牀前看月光"), "牀前看月光");
        assert_eq!(normalize_text(" 白雲 "), "白雲");
        assert_eq!(normalize_text("白雲\u{3000}流水\n"), "白雲流水");
        assert_eq!(normalize_text("何處?不知!"), "何處？不知！");
    }

    #[test]
    fn segment_examples() {
        assert_eq!(lens(&segment_lines("白日依山盡，黃河入海流。")), vec![5, 5]);
        assert!(segment_lines("").is_empty());
        assert_eq!(lens(&segment_lines(CHUNWANG)), vec![5; 8]);
        let lines = segment_lines("白日依山盡");
        assert_eq!(lines[0].trailing, "");
    }

    #[test]
    fn consecutive_delimiters_stay_on_the_line() {
        let poem = Poem::new("x", "", "a", "。何處？！不知");
        assert_eq!(poem.leading, "。");
        assert_eq!(poem.lines.len(), 2);
        assert_eq!(poem.lines[0].trailing, "？！");
        assert_eq!(poem.reassemble(), poem.body);
    }

    #[test]
    fn classify_examples() {
        let jueju = Poem::new("p1", "登鸛雀樓", "王之渙", DENG);
        assert_eq!(jueju.form, VerseForm::WuyanJueju);
        let lushi = Poem::new("p2", "春望", "杜甫", CHUNWANG);
        assert_eq!(lushi.form, VerseForm::WuyanLushi);
        let irregular = Poem::new(
            "p3",
            "",
            "x",
            "一二三四五，一二三四五，一二三四五，一二三四五，一二三四五，一二三四五，一二三四五，一二三四五六。",
        );
        assert_eq!(irregular.form, VerseForm::Other);
        assert_eq!(classify_lines(&[]), VerseForm::Other);
    }

    #[test]
    fn parse_one_json_record() {
        let input = r#"{"id":"p1","title":"登鸛雀樓","author":"王之渙","body":"白日依山盡，黃河入海流。欲窮千里目，更上一層樓。"}"#;
        let poems = parse_corpus(input.as_bytes(), CorpusFormat::JsonLines).unwrap();
        assert_eq!(poems.len(), 1);
        assert_eq!(poems[0].lines.len(), 4);
        assert_eq!(
            corpus_stats(&poems),
            CorpusStats {
                work_count: 1,
                author_count: 1,
                char_count: 24,
            }
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_corpus(b"", CorpusFormat::JsonLines)
            .unwrap()
            .is_empty());
        assert!(parse_corpus(b"", CorpusFormat::PlainText)
            .unwrap()
            .is_empty());

        let bad =
            "{\"id\":\"a\",\"title\":\"t\",\"author\":\"x\",\"body\":\"b\"}\n{\"id\":\"b\"}\n";
        match parse_corpus(bad.as_bytes(), CorpusFormat::JsonLines) {
            Err(Error::MalformedRecord { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }

        let dup = "{\"id\":\"a\",\"title\":\"\",\"author\":\"x\",\"body\":\"b\"}\n{\"id\":\"a\",\"title\":\"\",\"author\":\"y\",\"body\":\"c\"}";
        assert!(matches!(
            parse_corpus(dup.as_bytes(), CorpusFormat::JsonLines),
            Err(Error::DuplicateId(id)) if id == "a"
        ));

        let mut latin1 = b"{\"id\":\"a\"}\n".to_vec();
        latin1.push(0xff);
        assert!(matches!(
            parse_corpus(&latin1, CorpusFormat::JsonLines),
            Err(Error::InvalidUtf8 { line: 2 })
        ));
    }

    #[test]
    fn parse_plain_text_records() {
        let input = "登鸛雀樓\n王之渙\n白日依山盡，黃河入海流。\n欲窮千里目，更上一層樓。\n%%\n春望\n杜甫\n國破山河在，城春草木深。\n%%\n";
        let poems = parse_corpus(input.as_bytes(), CorpusFormat::PlainText).unwrap();
        assert_eq!(poems.len(), 2);
        assert_eq!(poems[0].id, "1");
        assert_eq!(poems[0].author, "王之渙");
        assert_eq!(poems[0].lines.len(), 4);
        assert_eq!(poems[1].title, "春望");

        let missing_author = "只有標題\n%%\n";
        assert!(matches!(
            parse_corpus(missing_author.as_bytes(), CorpusFormat::PlainText),
            Err(Error::MalformedRecord { line: 1, .. })
        ));
    }

    #[test]
    fn ranking_orders_by_count_then_code_point() {
        let poems = vec![
            Poem::new("1", "", "b", "甲"),
            Poem::new("2", "", "a", "甲"),
            Poem::new("3", "", "a", "甲"),
            Poem::new("4", "", "a", "甲"),
            Poem::new("5", "", "b", "甲"),
            Poem::new("6", "", "", "甲"),
        ];
        let ranking = author_ranking(&poems);
        let flat: Vec<_> = ranking
            .iter()
            .map(|r| (r.author.as_str(), r.works))
            .collect();
        assert_eq!(flat, vec![("a", 3), ("b", 2), (UNKNOWN_AUTHOR, 1)]);
        assert!(ranking[2].unknown);
        assert_eq!(corpus_stats(&poems).author_count, 2);
        assert_eq!(author_ranking(&poems[..1]).len(), 1);
    }

    fn body_strategy() -> impl Strategy<Value = String> {
        let piece = prop_oneof![
            4 => proptest::sample::select(vec!['白', '日', '雲', '山', '風', '月', '青', '𠀋']),
            1 => proptest::sample::select(vec!['，', '。', '、', '？', ',', '.', ' ', '\n']),
        ];
        proptest::collection::vec(piece, 0..60).prop_map(|v| v.into_iter().collect())
    }

    proptest! {
        #[test]
        fn lines_reassemble_to_normalized_body(raw in body_strategy()) {
            let poem = Poem::new("x", "", "a", raw.clone());
            prop_assert_eq!(poem.reassemble(), normalize_text(&raw));
            for line in &poem.lines {
                prop_assert!(!line.is_empty());
                prop_assert!(!line.chars.iter().any(|&c| is_delimiter(c)));
            }
        }

        #[test]
        fn form_depends_only_on_line_lengths(raw in body_strategy(), seed in any::<u64>()) {
            let poem = Poem::new("x", "", "a", raw);
            let mut shuffled = poem.lines.clone();
            let mut state = seed;
            for line in &mut shuffled {
                // deterministic in-line permutation
                let n = line.chars.len();
                for i in (1..n).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    line.chars.swap(i, (state >> 33) as usize % (i + 1));
                }
            }
            prop_assert_eq!(classify_lines(&shuffled), poem.form);
        }
    }
}

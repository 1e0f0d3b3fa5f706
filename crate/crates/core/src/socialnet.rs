//! Person mentions in titles and bodies, anachronism flags, the characters
//! that precede a name, and the weighted mention graph.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::corpus::{is_delimiter, segment_lines, Line, Poem};
use crate::error::{Error, Result};
use crate::lexstats::rank_counts;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PersonRecord {
    pub canonical: String,
    /// Style names, pen names and short forms.
    pub aliases: Vec<String>,
    /// Negative years are BC.
    pub birth_year: Option<i32>,
    pub death_year: Option<i32>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Gazetteer {
    people: Vec<PersonRecord>,
    #[serde(skip)]
    by_name: HashMap<String, usize>,
}

fn parse_year(field: &str, line: usize) -> Result<Option<i32>> {
    let field = field.trim();
    if field.is_empty() {
        return Ok(None);
    }
    let ascii: String = field
        .chars()
        .map(|c| match c {
            '\u{2010}' | '\u{2011}' | '\u{2212}' => '-',
            other => other,
        })
        .collect();
    ascii
        .parse::<i32>()
        .map(Some)
        .map_err(|_| Error::MalformedGazetteer {
            line,
            message: format!("`{field}` is not a year"),
        })
}

impl Gazetteer {
    pub fn new(people: Vec<PersonRecord>) -> Result<Self> {
        let mut by_name = HashMap::with_capacity(people.len());
        for (i, person) in people.iter().enumerate() {
            if person.canonical.is_empty() {
                return Err(Error::MalformedGazetteer {
                    line: i + 1,
                    message: "empty canonical name".into(),
                });
            }
            if let (Some(b), Some(d)) = (person.birth_year, person.death_year) {
                if b > d {
                    return Err(Error::MalformedGazetteer {
                        line: i + 1,
                        message: format!("{} born {b} after death {d}", person.canonical),
                    });
                }
            }
            if by_name.insert(person.canonical.clone(), i).is_some() {
                return Err(Error::MalformedGazetteer {
                    line: i + 1,
                    message: format!("duplicate person `{}`", person.canonical),
                });
            }
        }
        Ok(Gazetteer { people, by_name })
    }

    /// Tab-separated `canonical, aliases (;-separated), birth, death`; blank
    /// years are unknown. Lines without a tab may use `|` instead. Blank
    /// lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut people = Vec::new();
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let raw = raw.trim_end_matches('\r');
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            let sep = if raw.contains('\t') { '\t' } else { '|' };
            let fields: Vec<&str> = raw.split(sep).collect();
            if fields.len() != 4 {
                return Err(Error::MalformedGazetteer {
                    line: line_no,
                    message: format!("expected 4 fields, found {}", fields.len()),
                });
            }
            let canonical = fields[0].trim().to_string();
            if canonical.is_empty() {
                return Err(Error::MalformedGazetteer {
                    line: line_no,
                    message: "empty canonical name".into(),
                });
            }
            let aliases = fields[1]
                .split(';')
                .map(str::trim)
                .filter(|a| !a.is_empty() && *a != canonical)
                .map(String::from)
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            people.push(PersonRecord {
                canonical,
                aliases,
                birth_year: parse_year(fields[2], line_no)?,
                death_year: parse_year(fields[3], line_no)?,
            });
            lines.push(line_no);
        }
        // report validation failures against file lines, not record numbers
        Gazetteer::new(people).map_err(|e| match e {
            Error::MalformedGazetteer { line, message } => Error::MalformedGazetteer {
                line: lines[line - 1],
                message,
            },
            other => other,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Gazetteer::parse(&std::fs::read_to_string(path)?)
    }

    pub fn people(&self) -> &[PersonRecord] {
        &self.people
    }

    pub fn get(&self, canonical: &str) -> Option<&PersonRecord> {
        self.by_name.get(canonical).map(|&i| &self.people[i])
    }

    pub fn len(&self) -> usize {
        self.people.len()
    }

    pub fn is_empty(&self) -> bool {
        self.people.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Title,
    Body,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Location::Title => "title",
            Location::Body => "body",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    /// The poet names themself.
    SelfLoop,
    /// The target died before the source was born.
    Anachronistic,
    /// Matched through an alias shorter than the canonical name.
    ShortForm,
    /// Matched through any other alias.
    Alias,
    /// The matched text names more than one person.
    Ambiguous,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::SelfLoop => "self_loop",
            Flag::Anachronistic => "anachronistic",
            Flag::ShortForm => "short_form",
            Flag::Alias => "alias",
            Flag::Ambiguous => "ambiguous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MentionEdge {
    /// The poem's author.
    pub source: String,
    /// Canonical name of the mentioned person.
    pub target: String,
    pub poem_id: String,
    pub location: Location,
    /// Line of the body, or delimiter-separated segment of the title.
    pub segment: usize,
    pub offset: usize,
    pub matched_text: String,
    pub flags: BTreeSet<Flag>,
}

#[derive(Default)]
struct TrieNode {
    children: HashMap<char, usize>,
    /// (person index, matched through canonical name)
    hits: Vec<(usize, bool)>,
}

struct NameMatcher {
    nodes: Vec<TrieNode>,
}

impl NameMatcher {
    fn new(gazetteer: &Gazetteer, min_len: usize) -> Self {
        let mut matcher = NameMatcher {
            nodes: vec![TrieNode::default()],
        };
        for (p, person) in gazetteer.people.iter().enumerate() {
            matcher.insert(&person.canonical, p, true, min_len);
            for alias in &person.aliases {
                matcher.insert(alias, p, false, min_len);
            }
        }
        matcher
    }

    fn insert(&mut self, name: &str, person: usize, canonical: bool, min_len: usize) {
        if name.chars().count() < min_len.max(1) || name.chars().any(is_delimiter) {
            return;
        }
        let mut node = 0;
        for c in name.chars() {
            node = match self.nodes[node].children.get(&c) {
                Some(&next) => next,
                None => {
                    self.nodes.push(TrieNode::default());
                    let next = self.nodes.len() - 1;
                    self.nodes[node].children.insert(c, next);
                    next
                }
            };
        }
        let hits = &mut self.nodes[node].hits;
        if !hits.iter().any(|&(p, _)| p == person) {
            hits.push((person, canonical));
        }
    }

    /// Longest name starting at `chars[0]`: its length and the trie node.
    fn longest(&self, chars: &[char]) -> Option<(usize, usize)> {
        let mut node = 0;
        let mut best = None;
        for (i, c) in chars.iter().enumerate() {
            match self.nodes[node].children.get(c) {
                Some(&next) => node = next,
                None => break,
            }
            if !self.nodes[node].hits.is_empty() {
                best = Some((i + 1, node));
            }
        }
        best
    }
}

fn title_segments(poem: &Poem) -> Vec<Line> {
    segment_lines(&poem.title)
}

/// Scans every title segment and body line, longest name first, without
/// overlapping matches. A name repeated in one body yields one edge per
/// occurrence.
pub fn find_mentions(poems: &[Poem], gazetteer: &Gazetteer, min_len: usize) -> Vec<MentionEdge> {
    let matcher = NameMatcher::new(gazetteer, min_len);
    let mut edges = Vec::new();
    for poem in poems {
        let title = title_segments(poem);
        let scans = title
            .iter()
            .map(|l| (Location::Title, l))
            .chain(poem.lines.iter().map(|l| (Location::Body, l)));
        let mut body_line = 0;
        let mut title_seg = 0;
        for (location, line) in scans {
            let segment = match location {
                Location::Title => {
                    title_seg += 1;
                    title_seg - 1
                }
                Location::Body => {
                    body_line += 1;
                    body_line - 1
                }
            };
            let chars = &line.chars;
            let mut i = 0;
            while i < chars.len() {
                let Some((len, node)) = matcher.longest(&chars[i..]) else {
                    i += 1;
                    continue;
                };
                let matched: String = chars[i..i + len].iter().collect();
                let hits = &matcher.nodes[node].hits;
                for &(p, canonical) in hits {
                    let person = &gazetteer.people[p];
                    let mut flags = BTreeSet::new();
                    if person.canonical == poem.author {
                        flags.insert(Flag::SelfLoop);
                    }
                    if !canonical {
                        if len < person.canonical.chars().count() {
                            flags.insert(Flag::ShortForm);
                        } else {
                            flags.insert(Flag::Alias);
                        }
                    }
                    if hits.len() > 1 {
                        flags.insert(Flag::Ambiguous);
                    }
                    edges.push(MentionEdge {
                        source: poem.author.clone(),
                        target: person.canonical.clone(),
                        poem_id: poem.id.clone(),
                        location,
                        segment,
                        offset: i,
                        matched_text: matched.clone(),
                        flags,
                    });
                }
                i += len;
            }
        }
    }
    edges
}

/// Sets the anachronistic flag where the target died before the source was
/// born; clears it otherwise. Source years come from `authors`.
pub fn flag_anachronisms(edges: &mut [MentionEdge], people: &Gazetteer, authors: &Gazetteer) {
    for edge in edges {
        let born = authors.get(&edge.source).and_then(|p| p.birth_year);
        let died = people.get(&edge.target).and_then(|p| p.death_year);
        match (born, died) {
            (Some(b), Some(d)) if d < b => {
                edge.flags.insert(Flag::Anachronistic);
            }
            _ => {
                edge.flags.remove(&Flag::Anachronistic);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerbContext {
    pub verb: char,
    pub target: String,
    pub count: u64,
}

/// The character right before each matched name in its title segment or
/// line, aggregated by (character, person). Mentions at the start of a
/// segment contribute nothing.
pub fn verb_contexts(poems: &[Poem], edges: &[MentionEdge]) -> Vec<VerbContext> {
    let by_id: HashMap<&str, &Poem> = poems.iter().map(|p| (p.id.as_str(), p)).collect();
    let mut titles: HashMap<&str, Vec<Line>> = HashMap::new();
    let mut counts: BTreeMap<(char, String), u64> = BTreeMap::new();
    for edge in edges {
        if edge.offset == 0 {
            continue;
        }
        let Some(poem) = by_id.get(edge.poem_id.as_str()) else {
            continue;
        };
        let line = match edge.location {
            Location::Body => poem.lines.get(edge.segment),
            Location::Title => titles
                .entry(poem.id.as_str())
                .or_insert_with(|| title_segments(poem))
                .get(edge.segment),
        };
        if let Some(&c) = line.and_then(|l| l.chars.get(edge.offset - 1)) {
            *counts.entry((c, edge.target.clone())).or_default() += 1;
        }
    }
    rank_counts(counts)
        .into_iter()
        .map(|((verb, target), count)| VerbContext {
            verb,
            target,
            count,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgeWeight {
    pub weight: u64,
    pub anachronistic: u64,
}

/// Mentions collapsed to weighted (source, target) edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MentionGraph {
    pub nodes: BTreeSet<String>,
    #[serde(serialize_with = "serialize_edges")]
    pub edges: BTreeMap<(String, String), EdgeWeight>,
}

#[derive(Serialize)]
struct EdgeEntry<'a> {
    source: &'a str,
    target: &'a str,
    #[serde(flatten)]
    weight: EdgeWeight,
}

fn serialize_edges<S: serde::Serializer>(
    edges: &BTreeMap<(String, String), EdgeWeight>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(edges.iter().map(|((source, target), &weight)| EdgeEntry {
        source,
        target,
        weight,
    }))
}

impl MentionGraph {
    pub fn in_weight(&self, node: &str) -> u64 {
        self.edges
            .iter()
            .filter(|((_, t), _)| t == node)
            .map(|(_, w)| w.weight)
            .sum()
    }

    pub fn out_weight(&self, node: &str) -> u64 {
        self.edges
            .iter()
            .filter(|((s, _), _)| s == node)
            .map(|(_, w)| w.weight)
            .sum()
    }

    pub fn total_weight(&self) -> u64 {
        self.edges.values().map(|w| w.weight).sum()
    }
}

pub fn build_graph(edges: &[MentionEdge]) -> MentionGraph {
    let mut graph = MentionGraph::default();
    for edge in edges {
        graph.nodes.insert(edge.source.clone());
        graph.nodes.insert(edge.target.clone());
        let w = graph
            .edges
            .entry((edge.source.clone(), edge.target.clone()))
            .or_default();
        w.weight += 1;
        if edge.flags.contains(&Flag::Anachronistic) {
            w.anachronistic += 1;
        }
    }
    graph
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    GraphMl,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "graphml" => Ok(ExportFormat::GraphMl),
            "csv" => Ok(ExportFormat::Csv),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

pub fn export_graph(graph: &MentionGraph, format: ExportFormat) -> Result<Vec<u8>> {
    let mut out = String::new();
    match format {
        ExportFormat::Dot => {
            out.push_str("digraph mentions {\n");
            for node in &graph.nodes {
                let _ = writeln!(out, "  {};", dot_quote(node));
            }
            for ((s, t), w) in &graph.edges {
                let _ = writeln!(
                    out,
                    "  {} -> {} [weight={}, label=\"{}\", anachronistic={}];",
                    dot_quote(s),
                    dot_quote(t),
                    w.weight,
                    w.weight,
                    w.anachronistic
                );
            }
            out.push_str("}\n");
        }
        ExportFormat::GraphMl => {
            out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
            out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
            out.push_str(
                "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n",
            );
            out.push_str("  <key id=\"anachronistic\" for=\"edge\" attr.name=\"anachronistic\" attr.type=\"int\"/>\n");
            out.push_str("  <graph id=\"mentions\" edgedefault=\"directed\">\n");
            for node in &graph.nodes {
                let _ = writeln!(out, "    <node id=\"{}\"/>", xml_escape(node));
            }
            for (i, ((s, t), w)) in graph.edges.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "    <edge id=\"e{i}\" source=\"{}\" target=\"{}\"><data key=\"weight\">{}</data><data key=\"anachronistic\">{}</data></edge>",
                    xml_escape(s),
                    xml_escape(t),
                    w.weight,
                    w.anachronistic
                );
            }
            out.push_str("  </graph>\n</graphml>\n");
        }
        ExportFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["source", "target", "weight", "anachronistic"])
                .map_err(std::io::Error::from)?;
            for ((s, t), w) in &graph.edges {
                writer
                    .write_record([
                        s.as_str(),
                        t.as_str(),
                        &w.weight.to_string(),
                        &w.anachronistic.to_string(),
                    ])
                    .map_err(std::io::Error::from)?;
            }
            return writer.into_inner().map_err(|e| Error::Io(e.into_error()));
        }
    }
    Ok(out.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    const PEOPLE: &str = "\
# canonical\taliases\tbirth\tdeath
李白\t太白;李十二;青蓮居士\t701\t762
杜甫\t子美;杜少陵\t712\t770
賈誼\t\t-200\t-168
劉長卿\t\t709\t
汪倫\t\t\t
";

    fn gaz() -> Gazetteer {
        Gazetteer::parse(PEOPLE).unwrap()
    }

    #[test]
    fn gazetteer_rows() {
        let g = gaz();
        assert_eq!(g.len(), 5);
        assert_eq!(g.get("賈誼").unwrap().death_year, Some(-168));
        assert_eq!(g.get("李白").unwrap().aliases.len(), 3);
        assert_eq!(g.get("汪倫").unwrap().birth_year, None);

        let piped = Gazetteer::parse("賈誼||\u{2011}200|\u{2011}168\n").unwrap();
        assert_eq!(piped.get("賈誼").unwrap().birth_year, Some(-200));
        assert_eq!(piped.get("賈誼").unwrap().death_year, Some(-168));

        assert!(Gazetteer::parse("").unwrap().is_empty());
    }

    #[test]
    fn gazetteer_errors() {
        assert!(matches!(
            Gazetteer::parse("李白\t\t701\t762\n杜甫\t\t712\n"),
            Err(Error::MalformedGazetteer { line: 2, .. })
        ));
        assert!(matches!(
            Gazetteer::parse("李白\t\t762\t701\n"),
            Err(Error::MalformedGazetteer { line: 1, .. })
        ));
        assert!(matches!(
            Gazetteer::parse("\n李白\t\t701\t762\n李白\t\t\t\n"),
            Err(Error::MalformedGazetteer { line: 3, .. })
        ));
        assert!(Gazetteer::parse("李白\t\tabc\t\n").is_err());
    }

    #[test]
    fn title_mention_and_verb() {
        let poems = vec![Poem::new(
            "c",
            "春日憶李白",
            "杜甫",
            "白也詩無敵，飄然思不群。",
        )];
        let edges = find_mentions(&poems, &gaz(), 2);
        assert_eq!(edges.len(), 1);
        let e = &edges[0];
        assert_eq!((e.source.as_str(), e.target.as_str()), ("杜甫", "李白"));
        assert_eq!(e.location, Location::Title);
        assert_eq!(e.offset, 3);
        assert!(e.flags.is_empty());
        assert_eq!(
            verb_contexts(&poems, &edges),
            vec![VerbContext {
                verb: '憶',
                target: "李白".into(),
                count: 1,
            }]
        );
    }

    #[test]
    fn self_mention() {
        let poems = vec![Poem::new(
            "z",
            "贈汪倫",
            "李白",
            "李白乘舟將欲行，忽聞岸上踏歌聲。桃花潭水深千尺，不及汪倫送我情。",
        )];
        let edges = find_mentions(&poems, &gaz(), 2);
        let self_loop: Vec<_> = edges
            .iter()
            .filter(|e| e.flags.contains(&Flag::SelfLoop))
            .collect();
        assert_eq!(self_loop.len(), 1);
        assert_eq!(self_loop[0].location, Location::Body);
        assert_eq!(self_loop[0].matched_text, "李白");
        assert_eq!(edges.iter().filter(|e| e.target == "汪倫").count(), 2);
        // the self mention opens its line
        let verbs = verb_contexts(&poems, &edges);
        assert!(verbs.iter().all(|v| v.target != "李白"));
        assert!(verbs.contains(&VerbContext {
            verb: '贈',
            target: "汪倫".into(),
            count: 1
        }));
    }

    #[test]
    fn longest_match_wins() {
        let g = Gazetteer::parse("李白\t\t\t\n李白鳳\t\t\t\n白鳳\t\t\t\n").unwrap();
        let poems = vec![Poem::new("x", "", "某", "見李白鳳來")];
        let edges = find_mentions(&poems, &g, 2);
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].matched_text, "李白鳳");
    }

    #[test]
    fn alias_flags() {
        let g =
            Gazetteer::parse("李白\t太白;李十二\t\t\n杜甫\t杜二\t\t\n王二\t杜二\t\t\n").unwrap();
        let poems = vec![Poem::new("x", "", "某", "太白與杜二")];
        let edges = find_mentions(&poems, &g, 2);
        assert_eq!(edges[0].target, "李白");
        assert!(edges[0].flags.contains(&Flag::Alias));
        assert_eq!(edges.len(), 3);
        assert!(edges[1..]
            .iter()
            .all(|e| e.flags.contains(&Flag::Ambiguous)));

        let g = Gazetteer::parse("劉長卿\t長卿\t\t\n").unwrap();
        let edges = find_mentions(&[Poem::new("y", "", "某", "送長卿")], &g, 2);
        assert!(edges[0].flags.contains(&Flag::ShortForm));
    }

    #[test]
    fn single_character_names_skipped_by_default() {
        let g = Gazetteer::parse("李白\t白\t\t\n").unwrap();
        let poems = vec![Poem::new("x", "", "杜甫", "白也詩無敵")];
        assert!(find_mentions(&poems, &g, 2).is_empty());
        assert_eq!(find_mentions(&poems, &g, 1).len(), 1);
    }

    #[test]
    fn anachronism() {
        let g = gaz();
        let poems = vec![
            Poem::new("a", "長沙過賈誼宅", "劉長卿", "三年謫宦此棲遲"),
            Poem::new("b", "春日憶李白", "杜甫", "渭北春天樹"),
            Poem::new("c", "懷賈誼", "無名氏", "漢文"),
        ];
        let mut edges = find_mentions(&poems, &g, 2);
        let before = edges.len();
        flag_anachronisms(&mut edges, &g, &g);
        assert_eq!(edges.len(), before);
        let flagged = |t: &str| {
            edges
                .iter()
                .find(|e| e.poem_id == t)
                .unwrap()
                .flags
                .contains(&Flag::Anachronistic)
        };
        assert!(flagged("a"));
        assert!(!flagged("b"));
        assert!(!flagged("c"));
    }

    #[test]
    fn repeated_verb() {
        let g = Gazetteer::parse("房玄齡\t\t\t\n").unwrap();
        let poems = vec![Poem::new("x", "賜房玄齡", "李世民", "再賜房玄齡")];
        let verbs = verb_contexts(&poems, &find_mentions(&poems, &g, 2));
        assert_eq!(
            verbs,
            vec![VerbContext {
                verb: '賜',
                target: "房玄齡".into(),
                count: 2
            }]
        );
    }

    #[test]
    fn graph_and_exports() {
        let edge = |s: &str, t: &str| MentionEdge {
            source: s.into(),
            target: t.into(),
            poem_id: "p".into(),
            location: Location::Body,
            segment: 0,
            offset: 0,
            matched_text: t.into(),
            flags: BTreeSet::new(),
        };
        let graph = build_graph(&[edge("A", "B"), edge("A", "B")]);
        assert_eq!(graph.edges.len(), 1);
        assert_eq!(graph.in_weight("B"), 2);
        let csv = String::from_utf8(export_graph(&graph, ExportFormat::Csv).unwrap()).unwrap();
        assert_eq!(csv, "source,target,weight,anachronistic\nA,B,2,0\n");

        let empty = build_graph(&[]);
        let dot = String::from_utf8(export_graph(&empty, ExportFormat::Dot).unwrap()).unwrap();
        assert_eq!(dot, "digraph mentions {\n}\n");

        let quoted = build_graph(&[edge("a\"b", "<c>")]);
        let dot = String::from_utf8(export_graph(&quoted, ExportFormat::Dot).unwrap()).unwrap();
        assert!(dot.contains("\"a\\\"b\" -> \"<c>\""));
        let xml = String::from_utf8(export_graph(&quoted, ExportFormat::GraphMl).unwrap()).unwrap();
        assert!(xml.contains("target=\"&lt;c&gt;\""));

        assert!(matches!(
            "gexf".parse::<ExportFormat>(),
            Err(Error::UnknownFormat(_))
        ));
        assert_eq!(
            "GraphML".parse::<ExportFormat>().unwrap(),
            ExportFormat::GraphMl
        );
    }
}

//! `tangscope` command-line front end.
//!
//! [`run`] parses an argument vector, dispatches to the library and writes
//! the result to standard output or `--out`. Diagnostics go to the error
//! stream only. Exit status: 0 on success, 1 on usage errors, 2 on data
//! errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tangscope_core as core;
use tangscope_core::{
    Confidence, CorpusFormat, CorpusIndex, ExportFormat, Gazetteer, Lexicon, Poem,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tangscope",
    version,
    about = "Corpus analytics for classical Chinese poetry"
)]
pub struct Cli {
    /// Output format. Tables support tsv and json; `network` also takes
    /// dot, graphml and csv.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Tsv)]
    pub format: OutputFormat,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Corpus encoding; guessed from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub corpus_format: Option<InputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
    Dot,
    Graphml,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Jsonl,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AffixSide {
    Prefix,
    Suffix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassFilter {
    All,
    Structural,
    Heuristic,
}

impl ClassFilter {
    fn class(self) -> Option<Confidence> {
        match self {
            ClassFilter::All => None,
            ClassFilter::Structural => Some(Confidence::Structural),
            ClassFilter::Heuristic => Some(Confidence::Heuristic),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColorLayout {
    /// One (C, F) column pair per color.
    Table,
    /// One row per unordered color pair with per-class counts.
    Pairs,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Work, author and character counts.
    Stats { corpus: PathBuf },

    /// Authors by number of works.
    Rank {
        corpus: PathBuf,
        #[arg(long)]
        top: Option<usize>,
        /// Leave out the unknown-author marker.
        #[arg(long)]
        exclude_unknown: bool,
    },

    /// Character n-gram frequencies.
    Ngrams {
        corpus: PathBuf,
        #[arg(long, default_value = "2", value_parser = positive)]
        n: usize,
        #[arg(long)]
        author: Option<String>,
        #[arg(long, default_value_t = 50)]
        top: usize,
    },

    /// Words that start or end with a character.
    Affix {
        corpus: PathBuf,
        #[arg(long = "char")]
        target: String,
        #[arg(long, value_enum)]
        side: AffixSide,
        #[arg(long, default_value_t = 2)]
        len: usize,
        #[arg(long)]
        author: Option<String>,
        #[arg(long)]
        top: Option<usize>,
    },

    /// Share of an author's poems that use a lexicon.
    Ratio {
        corpus: PathBuf,
        #[arg(long)]
        author: String,
        #[arg(long)]
        lexicon: PathBuf,
    },

    /// Word-by-author usage percentages.
    Whitetable {
        corpus: PathBuf,
        /// One author per line.
        #[arg(long)]
        authors: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        /// Extra lexicon reported as a second ratio row.
        #[arg(long)]
        ratio_b: Option<PathBuf>,
    },

    /// Frequent words near a target word.
    Colloc {
        corpus: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "30", value_parser = positive)]
        window: usize,
        #[arg(long, default_value_t = 20)]
        top: usize,
        /// Candidate word length.
        #[arg(long, default_value = "2", value_parser = positive, conflicts_with = "lexicon")]
        len: usize,
        /// Only count these candidate words.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        /// Count poems instead of occurrence pairs.
        #[arg(long)]
        per_poem: bool,
    },

    /// Couplets of one poem, optionally with aligned word pairs.
    Couplets {
        corpus: PathBuf,
        #[arg(long)]
        poem: String,
        /// Emit aligned pairs of this many characters.
        #[arg(long, value_parser = positive)]
        align: Option<usize>,
    },

    /// Color correspondences across couplets.
    Colors {
        corpus: PathBuf,
        /// Colors to count, one character per line.
        #[arg(long)]
        palette: PathBuf,
        /// Colors shown as table columns; defaults to the palette.
        #[arg(long)]
        columns: Option<PathBuf>,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = ClassFilter::All)]
        class: ClassFilter,
        #[arg(long, value_enum, default_value_t = ColorLayout::Table)]
        layout: ColorLayout,
    },

    /// Couplets where two words face each other.
    Antithesis {
        corpus: PathBuf,
        /// Two words separated by a comma, e.g. 白髮,青雲.
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t = ClassFilter::All)]
        class: ClassFilter,
    },

    /// Person-mention network.
    Network {
        corpus: PathBuf,
        #[arg(long)]
        gazetteer: PathBuf,
        /// Lifespans of the poets; defaults to the gazetteer.
        #[arg(long)]
        authors_gazetteer: Option<PathBuf>,
        #[arg(long, default_value = "2", value_parser = positive)]
        min_len: usize,
        /// List individual mentions instead of the collapsed graph.
        #[arg(long)]
        edges: bool,
    },

    /// Characters preceding person names.
    Verbs {
        corpus: PathBuf,
        #[arg(long)]
        gazetteer: PathBuf,
        #[arg(long, default_value = "2", value_parser = positive)]
        min_len: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Data(anyhow::Error),
}

impl From<core::Error> for Failure {
    fn from(e: core::Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Data(e.into())
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<core::Error>() {
            Ok(inner) if inner.is_usage() => Failure::Usage(inner.to_string()),
            Ok(inner) => Failure::Data(inner.into()),
            Err(e) => Failure::Data(e),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    let result = execute(&cli).and_then(|bytes| match &cli.out {
        Some(path) => std::fs::write(path, &bytes)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Data),
        None => stdout
            .write_all(&bytes)
            .and_then(|_| stdout.flush())
            .context("writing output")
            .map_err(Failure::Data),
    });

    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            let _ = writeln!(stderr, "\nFor more information, try '--help'.");
            EXIT_USAGE
        }
        Err(Failure::Data(e)) => {
            let _ = writeln!(stderr, "error: {e:#}");
            EXIT_DATA
        }
    }
}

fn load_corpus(path: &Path, format: Option<InputFormat>) -> anyhow::Result<Vec<Poem>> {
    let bytes =
        std::fs::read(path).with_context(|| format!("reading corpus {}", path.display()))?;
    let format = match format {
        Some(InputFormat::Jsonl) => CorpusFormat::JsonLines,
        Some(InputFormat::Text) => CorpusFormat::PlainText,
        None => CorpusFormat::detect(path, &bytes),
    };
    core::parse_corpus(&bytes, format).with_context(|| format!("parsing corpus {}", path.display()))
}

fn load_lexicon(path: &Path) -> anyhow::Result<Lexicon> {
    Lexicon::load(path).with_context(|| format!("loading lexicon {}", path.display()))
}

fn load_gazetteer(path: &Path) -> anyhow::Result<Gazetteer> {
    Gazetteer::load(path).with_context(|| format!("loading gazetteer {}", path.display()))
}

fn single_char(s: &str, what: &str) -> Outcome<char> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Failure::Usage(format!(
            "{what} `{s}` must be a single character"
        ))),
    }
}

fn palette_chars(lexicon: &Lexicon) -> Outcome<Vec<char>> {
    lexicon
        .words
        .iter()
        .map(|w| single_char(w, "color"))
        .collect()
}

/// Header row plus data rows, tab-separated.
struct Tsv(String);

impl Tsv {
    fn new(header: &[&str]) -> Self {
        let mut t = Tsv(String::new());
        t.row(header);
        t
    }

    fn row<S: AsRef<str>>(&mut self, cells: &[S]) {
        let cells: Vec<&str> = cells.iter().map(AsRef::as_ref).collect();
        let _ = writeln!(self.0, "{}", cells.join("\t"));
    }

    fn into_bytes(self) -> Vec<u8> {
        self.0.into_bytes()
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> Outcome<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)
        .context("serializing JSON")
        .map_err(Failure::Data)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn table_format(format: OutputFormat) -> Outcome<OutputFormat> {
    match format {
        OutputFormat::Tsv | OutputFormat::Json => Ok(format),
        other => Err(Failure::Usage(format!(
            "--format {} only applies to `network`",
            other
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default()
        ))),
    }
}

#[derive(Serialize)]
struct Count<'a> {
    gram: &'a str,
    count: u64,
}

fn counts_output(format: OutputFormat, ranked: &[(String, u64)]) -> Outcome<Vec<u8>> {
    if format == OutputFormat::Json {
        let v: Vec<Count> = ranked
            .iter()
            .map(|(g, c)| Count { gram: g, count: *c })
            .collect();
        return json(&v);
    }
    let mut t = Tsv::new(&["gram", "count"]);
    for (g, c) in ranked {
        t.row(&[g.as_str(), &c.to_string()]);
    }
    Ok(t.into_bytes())
}

fn execute(cli: &Cli) -> Outcome<Vec<u8>> {
    let load = |p: &Path| load_corpus(p, cli.corpus_format).map_err(Failure::from);
    let fmt = cli.format;
    match &cli.command {
        Command::Stats { corpus } => {
            let fmt = table_format(fmt)?;
            let stats = core::corpus_stats(&load(corpus)?);
            if fmt == OutputFormat::Json {
                return json(&stats);
            }
            let mut t = Tsv::new(&["metric", "value"]);
            t.row(&["work_count".to_string(), stats.work_count.to_string()]);
            t.row(&["author_count".to_string(), stats.author_count.to_string()]);
            t.row(&["char_count".to_string(), stats.char_count.to_string()]);
            Ok(t.into_bytes())
        }

        Command::Rank {
            corpus,
            top,
            exclude_unknown,
        } => {
            let fmt = table_format(fmt)?;
            let mut ranking = core::author_ranking(&load(corpus)?);
            if *exclude_unknown {
                ranking.retain(|r| !r.unknown);
            }
            if let Some(k) = top {
                ranking.truncate(*k);
            }
            if fmt == OutputFormat::Json {
                return json(&ranking);
            }
            let mut t = Tsv::new(&["author", "works", "unknown"]);
            for r in &ranking {
                t.row(&[
                    r.author.clone(),
                    r.works.to_string(),
                    u8::from(r.unknown).to_string(),
                ]);
            }
            Ok(t.into_bytes())
        }

        Command::Ngrams {
            corpus,
            n,
            author,
            top,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let table = core::ngram_table(&poems, *n, author.as_deref())?;
            counts_output(fmt, &core::top_k(&table, *top))
        }

        Command::Affix {
            corpus,
            target,
            side,
            len,
            author,
            top,
        } => {
            let fmt = table_format(fmt)?;
            let c = single_char(target, "--char")?;
            let poems = load(corpus)?;
            let index = CorpusIndex::build(&poems);
            let words = match side {
                AffixSide::Prefix => core::words_with_prefix(&index, c, *len, author.as_deref())?,
                AffixSide::Suffix => core::words_with_suffix(&index, c, *len, author.as_deref())?,
            };
            let mut ranked = core::lexstats::rank_counts(words);
            if let Some(k) = top {
                ranked.truncate(*k);
            }
            counts_output(fmt, &ranked)
        }

        Command::Ratio {
            corpus,
            author,
            lexicon,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let lexicon = load_lexicon(lexicon)?;
            let ratio = core::usage_ratio(&poems, author, &lexicon)?;
            if fmt == OutputFormat::Json {
                #[derive(Serialize)]
                struct Out<'a> {
                    #[serde(flatten)]
                    ratio: &'a core::UsageRatio,
                    percent: String,
                }
                return json(&Out {
                    ratio: &ratio,
                    percent: ratio.to_string(),
                });
            }
            let mut t = Tsv::new(&["author", "lexicon", "poems_using", "poems", "percent"]);
            t.row(&[
                ratio.author.clone(),
                ratio.lexicon.clone(),
                ratio.numerator.to_string(),
                ratio.denominator.to_string(),
                ratio.to_string(),
            ]);
            Ok(t.into_bytes())
        }

        Command::Whitetable {
            corpus,
            authors,
            lexicon,
            ratio_b,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let authors = load_lexicon(authors)?.words;
            let lexicon = load_lexicon(lexicon)?;
            let table = core::white_word_matrix(&poems, &authors, &lexicon)?;
            let second = match ratio_b {
                Some(path) => {
                    let lex = load_lexicon(path)?;
                    Some(
                        authors
                            .iter()
                            .map(|a| core::usage_ratio(&poems, a, &lex))
                            .collect::<Result<Vec<_>, _>>()?,
                    )
                }
                None => None,
            };
            if fmt == OutputFormat::Json {
                #[derive(Serialize)]
                struct Out<'a> {
                    #[serde(flatten)]
                    table: &'a core::WhiteTable,
                    ratio_b: &'a Option<Vec<core::UsageRatio>>,
                }
                return json(&Out {
                    table: &table,
                    ratio_b: &second,
                });
            }
            let mut header = vec!["freq".to_string(), "word".to_string()];
            header.extend(authors.iter().cloned());
            let mut t = Tsv(String::new());
            t.row(&header);
            let ratio_row = |label: &str, ratios: &[core::UsageRatio]| {
                let mut row = vec![String::new(), label.to_string()];
                row.extend(ratios.iter().map(ToString::to_string));
                row
            };
            t.row(&ratio_row("Ratio A", &table.lexicon_ratio));
            if let Some(b) = &second {
                t.row(&ratio_row("Ratio B", b));
            }
            for r in &table.rows {
                let mut row = vec![r.total.to_string(), r.word.clone()];
                row.extend(r.cells.iter().map(ToString::to_string));
                t.row(&row);
            }
            Ok(t.into_bytes())
        }

        Command::Colloc {
            corpus,
            word,
            window,
            top,
            len,
            lexicon,
            per_poem,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let lexicon = lexicon.as_deref().map(load_lexicon).transpose()?;
            let index = CorpusIndex::build(&poems);
            let records = core::collocates_with(
                &index,
                word,
                &core::CollocateOptions {
                    window: *window,
                    top: *top,
                    candidate_len: *len,
                    lexicon: lexicon.as_ref(),
                    mode: if *per_poem {
                        core::CountMode::Poems
                    } else {
                        core::CountMode::Pairs
                    },
                },
            )?;
            if fmt == OutputFormat::Json {
                return json(&records);
            }
            let mut t = Tsv::new(&["target", "collocate", "count"]);
            for r in &records {
                t.row(&[r.target.clone(), r.collocate.clone(), r.count.to_string()]);
            }
            Ok(t.into_bytes())
        }

        Command::Couplets {
            corpus,
            poem,
            align,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let poem = poems
                .iter()
                .find(|p| &p.id == poem)
                .ok_or_else(|| Failure::from(core::Error::UnknownPoem(poem.clone())))?;
            let couplets = core::extract_couplets(poem);
            match align {
                None => {
                    if fmt == OutputFormat::Json {
                        return json(&couplets);
                    }
                    let mut t = Tsv::new(&["lines", "confidence", "first", "second"]);
                    for c in &couplets {
                        let (a, b) = c.slot();
                        t.row(&[
                            format!("{a}-{b}"),
                            c.confidence.to_string(),
                            poem.lines[c.first].text(),
                            poem.lines[c.second()].text(),
                        ]);
                    }
                    Ok(t.into_bytes())
                }
                Some(len) => {
                    let mut rows = Vec::new();
                    for c in &couplets {
                        if *len > poem.lines[c.first].len() {
                            continue;
                        }
                        for p in core::aligned_word_pairs(poem, c, *len)? {
                            rows.push((c.slot(), c.confidence, p));
                        }
                    }
                    if fmt == OutputFormat::Json {
                        let pairs: Vec<&core::AlignedPair> = rows.iter().map(|r| &r.2).collect();
                        return json(&pairs);
                    }
                    let mut t = Tsv::new(&[
                        "lines",
                        "confidence",
                        "offset",
                        "word_a",
                        "word_b",
                        "candidate",
                    ]);
                    for ((a, b), conf, p) in &rows {
                        t.row(&[
                            format!("{a}-{b}"),
                            conf.to_string(),
                            p.offset.to_string(),
                            p.word_a.clone(),
                            p.word_b.clone(),
                            u8::from(p.candidate).to_string(),
                        ]);
                    }
                    Ok(t.into_bytes())
                }
            }
        }

        Command::Colors {
            corpus,
            palette,
            columns,
            rows,
            class,
            layout,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let palette = palette_chars(&load_lexicon(palette)?)?;
            let columns = match columns {
                Some(p) => palette_chars(&load_lexicon(p)?)?,
                None => palette.clone(),
            };
            let matrix = core::color_matrix(&poems, &palette)?;
            if fmt == OutputFormat::Json {
                return json(&matrix);
            }
            match layout {
                ColorLayout::Pairs => {
                    let mut t =
                        Tsv::new(&["color_a", "color_b", "structural", "heuristic", "total"]);
                    for ((a, b), c) in matrix.pairs() {
                        if c.get(class.class()) == 0 {
                            continue;
                        }
                        t.row(&[
                            a.to_string(),
                            b.to_string(),
                            c.structural.to_string(),
                            c.heuristic.to_string(),
                            c.total().to_string(),
                        ]);
                    }
                    Ok(t.into_bytes())
                }
                ColorLayout::Table => {
                    let cols: Vec<Vec<(char, u64)>> = columns
                        .iter()
                        .map(|&c| matrix.column(c, class.class()))
                        .collect();
                    let mut t = Tsv(String::new());
                    t.row(
                        &columns
                            .iter()
                            .flat_map(|c| [c.to_string(), String::new()])
                            .collect::<Vec<_>>(),
                    );
                    t.row(&columns.iter().flat_map(|_| ["C", "F"]).collect::<Vec<_>>());
                    let depth = cols.iter().map(Vec::len).max().unwrap_or(0).min(*rows);
                    for r in 0..depth {
                        let cells: Vec<String> = cols
                            .iter()
                            .flat_map(|col| match col.get(r) {
                                Some((c, n)) => [c.to_string(), n.to_string()],
                                None => [String::new(), String::new()],
                            })
                            .collect();
                        t.row(&cells);
                    }
                    Ok(t.into_bytes())
                }
            }
        }

        Command::Antithesis {
            corpus,
            pair,
            class,
        } => {
            let fmt = table_format(fmt)?;
            let words: Vec<&str> = pair.split([',', '，']).map(str::trim).collect();
            let [a, b] = words.as_slice() else {
                return Err(Failure::Usage(format!(
                    "--pair `{pair}` must be two words separated by a comma"
                )));
            };
            let len = a.chars().count();
            let poems = load(corpus)?;
            let mut found = core::antithesis_instances(&poems, a, b, len)?;
            if let Some(c) = class.class() {
                found.retain(|i| i.confidence == c);
            }
            if fmt == OutputFormat::Json {
                return json(&found);
            }
            let mut t = Tsv::new(&[
                "poem_id",
                "author",
                "title",
                "lines",
                "offset",
                "confidence",
                "first_word",
            ]);
            for i in &found {
                t.row(&[
                    i.poem_id.clone(),
                    i.author.clone(),
                    i.title.clone(),
                    format!("{}-{}", i.slot.0, i.slot.1),
                    i.offset.to_string(),
                    i.confidence.to_string(),
                    i.first_word.clone(),
                ]);
            }
            Ok(t.into_bytes())
        }

        Command::Network {
            corpus,
            gazetteer,
            authors_gazetteer,
            min_len,
            edges: list_edges,
        } => {
            let poems = load(corpus)?;
            let people = load_gazetteer(gazetteer)?;
            let authors = match authors_gazetteer {
                Some(p) => load_gazetteer(p)?,
                None => people.clone(),
            };
            let mut edges = core::find_mentions(&poems, &people, *min_len);
            core::flag_anachronisms(&mut edges, &people, &authors);

            if *list_edges {
                let fmt = table_format(fmt)?;
                if fmt == OutputFormat::Json {
                    return json(&edges);
                }
                let mut t = Tsv::new(&[
                    "source", "target", "poem_id", "location", "segment", "offset", "matched",
                    "flags",
                ]);
                for e in &edges {
                    let flags: Vec<String> = e.flags.iter().map(ToString::to_string).collect();
                    t.row(&[
                        e.source.clone(),
                        e.target.clone(),
                        e.poem_id.clone(),
                        e.location.to_string(),
                        e.segment.to_string(),
                        e.offset.to_string(),
                        e.matched_text.clone(),
                        flags.join(","),
                    ]);
                }
                return Ok(t.into_bytes());
            }

            let graph = core::build_graph(&edges);
            let export = match fmt {
                OutputFormat::Json => return json(&graph),
                OutputFormat::Tsv => {
                    let mut t = Tsv::new(&["source", "target", "weight", "anachronistic"]);
                    for ((s, tgt), w) in &graph.edges {
                        t.row(&[
                            s.clone(),
                            tgt.clone(),
                            w.weight.to_string(),
                            w.anachronistic.to_string(),
                        ]);
                    }
                    return Ok(t.into_bytes());
                }
                OutputFormat::Dot => ExportFormat::Dot,
                OutputFormat::Graphml => ExportFormat::GraphMl,
                OutputFormat::Csv => ExportFormat::Csv,
            };
            Ok(core::export_graph(&graph, export)?)
        }

        Command::Verbs {
            corpus,
            gazetteer,
            min_len,
        } => {
            let fmt = table_format(fmt)?;
            let poems = load(corpus)?;
            let people = load_gazetteer(gazetteer)?;
            let edges = core::find_mentions(&poems, &people, *min_len);
            let verbs = core::verb_contexts(&poems, &edges);
            if fmt == OutputFormat::Json {
                return json(&verbs);
            }
            let mut t = Tsv::new(&["verb", "target", "count"]);
            for v in &verbs {
                t.row(&[v.verb.to_string(), v.target.clone(), v.count.to_string()]);
            }
            Ok(t.into_bytes())
        }
    }
}

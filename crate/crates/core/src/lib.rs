//! Corpus analytics for classical Chinese poetry.
//!
//! The crate reads a corpus of poems ([`corpus`]), indexes every body
//! character by position ([`index`]) and answers the queries built on top:
//! n-gram and affix counts ([`lexstats`]), per-poet lexicon usage
//! ([`style`]), windowed collocations ([`collocation`]), couplet alignment and
//! color correspondences ([`antithesis`]), and person-mention networks
//! ([`socialnet`]).
//!
//! All counts are deterministic. Ranked outputs sort by descending count and
//! break ties by code point.

pub mod antithesis;
pub mod collocation;
pub mod corpus;
pub mod error;
pub mod index;
pub mod lexstats;
pub mod socialnet;
pub mod style;
pub mod synth;

pub use antithesis::{
    aligned_word_pairs, antithesis_instances, color_matrix, extract_couplets, AlignedPair,
    AntithesisInstance, ColorMatrix, Confidence, Couplet,
};
pub use collocation::{
    collocates, collocates_with, context_windows, cooccurrence_count, occurrences,
    CollocateOptions, CollocationRecord, ContextWindow, CountMode, Occurrence,
};
pub use corpus::{
    author_ranking, classify_form, corpus_stats, normalize_text, parse_corpus, segment_lines,
    AuthorRank, CorpusFormat, CorpusStats, Line, Poem, VerseForm, UNKNOWN_AUTHOR,
};
pub use error::{Error, Result};
pub use index::{CorpusIndex, Position};
pub use lexstats::{
    ngram_table, top_k, words_with_prefix, words_with_suffix, NGramTable, Scope, Side,
};
pub use socialnet::{
    build_graph, export_graph, find_mentions, flag_anachronisms, verb_contexts, ExportFormat, Flag,
    Gazetteer, Location, MentionEdge, MentionGraph, PersonRecord, VerbContext,
};
pub use style::{lexical_profile, usage_ratio, white_word_matrix, Lexicon, UsageRatio, WhiteTable};

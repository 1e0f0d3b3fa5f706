use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use tangscope_core::synth::{synthetic_corpus, SynthConfig, AUTHORS};
use tangscope_core::*;

fn corpus(seed: u64, poems: usize) -> Vec<Poem> {
    synthetic_corpus(&SynthConfig {
        poems,
        seed,
        ..Default::default()
    })
}

/// Naive pair count over the flattened poem text, independent of the index.
fn brute_cooccurrence(poems: &[Poem], w1: &str, w2: &str, n: usize) -> u64 {
    let a: Vec<char> = w1.chars().collect();
    let b: Vec<char> = w2.chars().collect();
    let mut total = 0;
    for poem in poems {
        // (flat position, line) for each character
        let mut flat = Vec::new();
        for (li, line) in poem.lines.iter().enumerate() {
            for &c in &line.chars {
                flat.push((c, li));
            }
        }
        let starts = |w: &[char]| -> Vec<usize> {
            (0..flat.len())
                .filter(|&i| {
                    i + w.len() <= flat.len()
                        && (0..w.len()).all(|k| flat[i + k].0 == w[k] && flat[i + k].1 == flat[i].1)
                })
                .collect()
        };
        for &i in &starts(&a) {
            for &j in &starts(&b) {
                let (ie, je) = (i + a.len(), j + b.len());
                let gap = if ie <= j {
                    j - ie
                } else if je <= i {
                    i - je
                } else {
                    continue;
                };
                if gap <= n {
                    total += 1;
                }
            }
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn affix_and_ngram_tables_agree(seed in any::<u64>()) {
        let poems = corpus(seed, 120);
        let index = CorpusIndex::build(&poems);
        let bigrams = ngram_table(&poems, 2, None).unwrap();
        for (gram, &count) in &bigrams.entries {
            let cs: Vec<char> = gram.chars().collect();
            let pre = words_with_prefix(&index, cs[0], 2, None).unwrap();
            let suf = words_with_suffix(&index, cs[1], 2, None).unwrap();
            prop_assert_eq!(pre.get(gram).copied(), Some(count));
            prop_assert_eq!(suf.get(gram).copied(), Some(count));
        }
        // and nothing extra on the affix side
        for c in ['白', '月', '風'] {
            for (w, n) in words_with_prefix(&index, c, 2, None).unwrap() {
                prop_assert_eq!(bigrams.get(&w), n);
            }
        }
        let positions: usize = poems.iter().flat_map(|p| &p.lines).map(Line::len).sum();
        prop_assert_eq!(index.char_count(), positions);
    }

    #[test]
    fn author_scopes_partition_global_counts(seed in any::<u64>(), n in 1usize..4) {
        let poems = corpus(seed, 100);
        let global = ngram_table(&poems, n, None).unwrap();
        let authors: BTreeSet<&str> = poems.iter().map(|p| p.author.as_str()).collect();
        let mut summed: BTreeMap<String, u64> = BTreeMap::new();
        for a in authors {
            for (g, c) in ngram_table(&poems, n, Some(a)).unwrap().entries {
                *summed.entry(g).or_default() += c;
            }
        }
        let global: BTreeMap<String, u64> = global.entries.into_iter().collect();
        prop_assert_eq!(&summed, &global);
        for key in global.keys() {
            prop_assert_eq!(key.chars().count(), n);
            prop_assert!(!key.chars().any(|c| corpus::DELIMITERS.contains(&c)));
        }
    }

    #[test]
    fn cooccurrence_symmetric_monotone_and_brute_force(
        seed in any::<u64>(),
        w1 in proptest::sample::select(vec!["白雲", "明月", "春風", "青山", "白"]),
        w2 in proptest::sample::select(vec!["明月", "流水", "秋風", "山", "日"]),
        n in 1usize..40,
    ) {
        prop_assume!(w1 != w2);
        let poems = corpus(seed, 100);
        let index = CorpusIndex::build(&poems);
        let ab = cooccurrence_count(&index, w1, w2, n).unwrap();
        let ba = cooccurrence_count(&index, w2, w1, n).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(ab <= cooccurrence_count(&index, w1, w2, n + 5).unwrap());
        prop_assert_eq!(ab, brute_cooccurrence(&poems, w1, w2, n));
    }

    #[test]
    fn collocate_counts_match_pairwise_counts(seed in any::<u64>(), n in 1usize..31) {
        let poems = corpus(seed, 100);
        let index = CorpusIndex::build(&poems);
        for record in collocates(&index, "白雲", n, 15, 2).unwrap() {
            prop_assert_ne!(&record.collocate, "白雲");
            prop_assert_eq!(
                record.count,
                brute_cooccurrence(&poems, "白雲", &record.collocate, n)
            );
        }
        for w in context_windows(&index, "明月", n).unwrap() {
            prop_assert!(w.before.chars().count() <= n && w.after.chars().count() <= n);
            prop_assert!(!w.before.chars().chain(w.after.chars()).any(|c| corpus::DELIMITERS.contains(&c)));
        }
    }

    #[test]
    fn usage_ratios_bounded_monotone_and_union_bounded(seed in any::<u64>()) {
        let poems = corpus(seed, 150);
        let small = Lexicon::new("s", ["白雲", "白日"]).unwrap();
        let big = Lexicon::new("b", ["白雲", "白日", "青山", "明月"]).unwrap();
        let other = Lexicon::new("o", ["青山", "明月"]).unwrap();
        for author in AUTHORS {
            let Ok(rs) = usage_ratio(&poems, author, &small) else { continue };
            let rb = usage_ratio(&poems, author, &big).unwrap();
            let ro = usage_ratio(&poems, author, &other).unwrap();
            prop_assert!(rb.percent() >= 0.0 && rb.percent() <= 100.0);
            prop_assert!(rs.numerator <= rb.numerator);
            prop_assert!(rb.numerator <= rs.numerator + ro.numerator);

            let profile = lexical_profile(&poems, author, &big).unwrap();
            let scoped = ngram_table(&poems, 2, Some(author)).unwrap();
            for (w, c) in profile {
                prop_assert_eq!(c, scoped.get(&w));
            }
        }
    }

    #[test]
    fn ratio_order_survives_duplication(seed in any::<u64>()) {
        let poems = corpus(seed, 120);
        let mut doubled = poems.clone();
        doubled.extend(poems.iter().map(|p| {
            Poem::new(format!("{}-dup", p.id), &p.title, &p.author, p.body_raw.clone())
        }));
        let lex = Lexicon::new("b", ["白髮", "白頭", "白首", "白雲", "明月"]).unwrap();
        for author in AUTHORS {
            let Ok(a) = usage_ratio(&poems, author, &lex) else { continue };
            let b = usage_ratio(&doubled, author, &lex).unwrap();
            prop_assert_eq!(a.basis_points(), b.basis_points());
        }
    }

    #[test]
    fn couplet_invariants(seed in any::<u64>()) {
        let poems = corpus(seed, 100);
        let index = CorpusIndex::build(&poems);
        for poem in &poems {
            let couplets = extract_couplets(poem);
            if poem.form.is_lushi() {
                prop_assert_eq!(couplets.len(), 2);
            }
            for c in &couplets {
                let len = poem.lines[c.first].len();
                prop_assert_eq!(len, poem.lines[c.second()].len());
                for l in 1..=len.min(3) {
                    let pairs = aligned_word_pairs(poem, c, l).unwrap();
                    prop_assert_eq!(pairs.len(), len - l + 1);
                    for p in pairs.iter().filter(|p| p.candidate) {
                        // any aligned pair is also a collocation
                        prop_assert!(cooccurrence_count(&index, &p.word_a, &p.word_b, len).unwrap() >= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn color_matrix_symmetric_and_deterministic(seed in any::<u64>()) {
        let poems = corpus(seed, 150);
        let colors: Vec<char> = "白青紅黃綠紫碧丹赤黑".chars().collect();
        let m = color_matrix(&poems, &colors).unwrap();
        for &a in &colors {
            prop_assert_eq!(m.get(a, a, None), 0);
            for &b in &colors {
                prop_assert_eq!(m.counts(a, b), m.counts(b, a));
            }
        }
        let again = color_matrix(&poems, &colors).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&m).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn mention_graph_conserves_weight(seed in any::<u64>()) {
        let poems = corpus(seed, 150);
        let gaz = Gazetteer::parse("李白\t太白\t701\t762\n杜甫\t\t712\t770\n汪倫\t\t\t\n賈誼\t\t-200\t-168\n").unwrap();
        let mut edges = find_mentions(&poems, &gaz, 2);
        let count = edges.len();
        flag_anachronisms(&mut edges, &gaz, &gaz);
        prop_assert_eq!(edges.len(), count);
        let by_id: BTreeMap<&str, &Poem> = poems.iter().map(|p| (p.id.as_str(), p)).collect();
        for e in &edges {
            let poem = by_id[e.poem_id.as_str()];
            let hay = match e.location {
                Location::Title => &poem.title,
                Location::Body => &poem.body,
            };
            prop_assert!(hay.contains(&e.matched_text));
        }
        let graph = build_graph(&edges);
        prop_assert_eq!(graph.total_weight(), count as u64);
        for node in &graph.nodes {
            let targeting = edges.iter().filter(|e| &e.target == node).count() as u64;
            prop_assert_eq!(graph.in_weight(node), targeting);
        }
        for format in [ExportFormat::Dot, ExportFormat::GraphMl, ExportFormat::Csv] {
            let a = export_graph(&graph, format).unwrap();
            let b = export_graph(&build_graph(&edges), format).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn rank_sums_to_work_count() {
    let poems = corpus(3, 300);
    let ranking = author_ranking(&poems);
    let stats = corpus_stats(&poems);
    assert_eq!(
        ranking.iter().map(|r| r.works).sum::<usize>(),
        stats.work_count
    );
    assert_eq!(stats.work_count, poems.len());
}

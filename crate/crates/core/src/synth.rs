//! Seeded synthetic corpora for property tests, scale checks and benchmarks.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Poem, UNKNOWN_AUTHOR};

/// Frequent characters, drawn often so that bigrams repeat.
const HOT: &str = "白青紅黃綠紫碧丹赤黑雲日月風山水明春秋花人天不何處";
/// Background characters.
const COLD: &str = "一二三四五六七八九十上下中大小長高深遠近來去歸行見聞思知夜朝暮寒暖江河海湖城樓門家鄉國年時歲今古千萬里鳥魚草木松竹柳葉雪霜露煙塵石玉金銀酒琴書劍馬舟車路橋流髮頭";
pub const AUTHORS: [&str; 8] = [
    "李白",
    "杜甫",
    "王維",
    "白居易",
    "孟浩然",
    "賈島",
    "韓愈",
    "李賀",
];
pub const NAMES: [&str; 4] = ["李白", "杜甫", "汪倫", "賈誼"];
const VERBS: &str = "憶贈送寄懷賜";

#[derive(Clone, Debug)]
pub struct SynthConfig {
    pub poems: usize,
    pub seed: u64,
    /// Share of poems in a regulated eight-line form.
    pub lushi_share: f64,
    /// Probability that a title mentions a person.
    pub mention_rate: f64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            poems: 100,
            seed: 0,
            lushi_share: 0.4,
            mention_rate: 0.2,
        }
    }
}

fn pick(rng: &mut ChaCha8Rng, hot: &[char], cold: &[char]) -> char {
    if rng.random_bool(0.35) {
        *hot.choose(rng).expect("non-empty")
    } else {
        *cold.choose(rng).expect("non-empty")
    }
}

/// Body with one line per entry of `lengths`.
fn body(rng: &mut ChaCha8Rng, lengths: &[usize], hot: &[char], cold: &[char]) -> String {
    let mut out = String::new();
    for (i, &len) in lengths.iter().enumerate() {
        for _ in 0..len {
            out.push(pick(rng, hot, cold));
        }
        out.push(if i % 2 == 0 { '，' } else { '。' });
    }
    out
}

pub fn synthetic_corpus(config: &SynthConfig) -> Vec<Poem> {
    let hot: Vec<char> = HOT.chars().collect();
    let cold: Vec<char> = COLD.chars().collect();
    let verbs: Vec<char> = VERBS.chars().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut poems = Vec::with_capacity(config.poems);

    for i in 0..config.poems {
        let lengths: Vec<usize> = if rng.random_bool(config.lushi_share) {
            vec![if rng.random_bool(0.5) { 5 } else { 7 }; 8]
        } else if rng.random_bool(0.5) {
            vec![if rng.random_bool(0.5) { 5 } else { 7 }; 4]
        } else {
            let lines = rng.random_range(1..=12);
            (0..lines).map(|_| rng.random_range(2..=9)).collect()
        };
        let mut text = body(&mut rng, &lengths, &hot, &cold);
        let mut title: String = (0..rng.random_range(2..=4))
            .map(|_| pick(&mut rng, &hot, &cold))
            .collect();
        if rng.random_bool(config.mention_rate) {
            title.push(*verbs.choose(&mut rng).expect("non-empty"));
            title.push_str(NAMES.choose(&mut rng).expect("non-empty"));
        }
        if rng.random_bool(config.mention_rate / 2.0) {
            text.push_str(NAMES.choose(&mut rng).expect("non-empty"));
            text.push('。');
        }
        let author = if rng.random_bool(0.05) {
            UNKNOWN_AUTHOR
        } else {
            AUTHORS.choose(&mut rng).expect("non-empty")
        };
        poems.push(Poem::new(format!("s{i}"), &title, author, text));
    }
    poems
}

/// A corpus with at least `chars` body characters (punctuation included).
pub fn corpus_of_size(chars: usize, seed: u64) -> Vec<Poem> {
    // about 60 characters per poem on average
    let mut config = SynthConfig {
        poems: chars / 60 + 1,
        seed,
        ..Default::default()
    };
    loop {
        let poems = synthetic_corpus(&config);
        let total: usize = poems.iter().map(|p| p.body.chars().count()).sum();
        if total >= chars {
            return poems;
        }
        config.poems = config.poems * chars / total.max(1) + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_sized() {
        let a = synthetic_corpus(&SynthConfig {
            seed: 7,
            ..Default::default()
        });
        let b = synthetic_corpus(&SynthConfig {
            seed: 7,
            ..Default::default()
        });
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        assert!(a.iter().any(|p| p.form.is_lushi()));
        let big = corpus_of_size(20_000, 1);
        assert!(big.iter().map(|p| p.body.chars().count()).sum::<usize>() >= 20_000);
    }
}

//! Shared inputs for the query benchmarks.

use tangscope_core::synth::corpus_of_size;
use tangscope_core::Poem;

/// Single-character colors used by the color-matrix benchmark.
pub const PALETTE: &str = "白青紅黃綠紫碧丹赤黑";

/// Seeded synthetic corpus of at least `chars` body characters.
pub fn corpus(chars: usize) -> Vec<Poem> {
    corpus_of_size(chars, 2024)
}

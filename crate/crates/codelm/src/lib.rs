//! A self-contained language-modelling toolkit for source code.
//!
//! The crate trains and evaluates three next-token architectures over a
//! corpus of source files: a Transformer-XL with segment-level recurrent
//! memory, and stacked LSTM / GRU baselines. Everything runs on the CPU on
//! top of a small dense-tensor library with reverse-mode automatic
//! differentiation ([`tensor`]).
//!
//! Pipeline, end to end:
//!
//! 1. [`corpus`] — ingest a directory of source files, fold exact
//!    duplicates, split 80/10/10, drop validation/test files whose line
//!    overlap with the training set exceeds a threshold.
//! 2. [`tokenizer`] — character-level or byte-pair-encoding vocabularies
//!    with lossless encode/decode.
//! 3. [`model`] — Transformer-XL layers with gradient-blocked memory,
//!    plus LSTM and GRU cells unrolled over segments.
//! 4. [`train`] — Adam with linear-warmup/cosine-decay, global gradient
//!    norm clipping, epoch checkpoints, metrics CSV.
//! 5. [`eval`] — bits-per-character and perplexity scoring, plus a
//!    normalized per-iteration training-time benchmark.
//!
//! The `codelm` binary (see [`cli`]) wires these together as subcommands.

pub mod cli;
pub mod corpus;
pub mod eval;
pub mod model;
pub mod tensor;
pub mod tokenizer;
pub mod train;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Tensor extents do not line up for the requested operation.
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    /// A configuration value is out of range or inconsistent.
    #[error("invalid config: {0}")]
    Config(String),
    /// Input data (corpus, vocabulary, checkpoint, token ids) is unusable.
    #[error("invalid data: {0}")]
    Data(String),
    /// A numeric failure: non-finite loss, degenerate softmax slice, etc.
    #[error("numeric failure: {0}")]
    Numeric(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage/config, 2 data, 3 numeric.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Config(_) => 1,
            Error::Data(_) | Error::Io(_) => 2,
            Error::Numeric(_) | Error::ShapeMismatch { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

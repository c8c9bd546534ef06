//! Scoring trained models: bits-per-character, perplexity, throughput.
//!
//! Losses everywhere in this crate are mean cross-entropy in nats per
//! token. [`bpc`] and [`perplexity`] convert that one number; [`evaluate`]
//! produces it for a whole [`SegmentStream`] by threading recurrent memory
//! across segments with dropout disabled, accumulating in f64 so the result
//! does not depend on how the stream was cut into segments. [`benchmark`]
//! compares median per-iteration training time across models.

use std::time::Instant;

use rand_chacha::rand_core::SeedableRng;

use crate::corpus::SegmentStream;
use crate::model::{MemoryState, Model};
use crate::tensor::tape::Tape;
use crate::tensor::Scalar;
use crate::train::Trainer;
use crate::{Error, Result};

/// Largest loss converted to a finite perplexity; e^710 overflows f64.
pub const PERPLEXITY_OVERFLOW: f64 = 700.0;

/// Bits per character for a mean loss in nats. `bpc(ln 2) == 1`.
pub fn bpc(loss: f64) -> Result<f64> {
    if !loss.is_finite() || loss < 0.0 {
        return Err(Error::Numeric(format!(
            "bits-per-character needs a finite non-negative loss, got {loss}"
        )));
    }
    Ok(loss / std::f64::consts::LN_2)
}

/// Perplexity `e^loss`. Saturates to +inf once the exponent would overflow.
pub fn perplexity(loss: f64) -> Result<f64> {
    if !loss.is_finite() || loss < 0.0 {
        return Err(Error::Numeric(format!(
            "perplexity needs a finite non-negative loss, got {loss}"
        )));
    }
    if loss > PERPLEXITY_OVERFLOW {
        return Ok(f64::INFINITY);
    }
    Ok(loss.exp())
}

/// Everything [`evaluate`] measures over one stream.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    /// Model identifier, e.g. `txl-4`.
    pub model: String,
    /// Scored (input, target) positions.
    pub token_count: usize,
    /// Mean cross-entropy, nats per token.
    pub loss: f64,
    pub bpc: f64,
    pub perplexity: f64,
    pub wall_seconds: f64,
    pub tokens_per_second: f64,
}

impl EvalReport {
    /// Derives the converted metrics from `loss` so the struct can never
    /// hold an inconsistent triple.
    pub fn new(model: String, token_count: usize, loss: f64, wall_seconds: f64) -> Result<Self> {
        Ok(EvalReport {
            model,
            token_count,
            loss,
            bpc: bpc(loss)?,
            perplexity: perplexity(loss)?,
            wall_seconds,
            tokens_per_second: if wall_seconds > 0.0 {
                token_count as f64 / wall_seconds
            } else {
                0.0
            },
        })
    }
}

impl std::fmt::Display for EvalReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: loss {:.6} nats, {:.4} bpc, perplexity {:.3}, {} tokens in {:.2}s ({:.0} tok/s)",
            self.model,
            self.loss,
            self.bpc,
            self.perplexity,
            self.token_count,
            self.wall_seconds,
            self.tokens_per_second,
        )
    }
}

/// Short id used in reports and benchmark tables: arch name plus depth.
pub fn model_id<T: Scalar>(model: &Model<T>) -> String {
    format!("{}-{}", model.config().arch.name(), model.config().depth)
}

/// Teacher-forced scoring of `stream`. Memory starts empty, threads across
/// every segment in order, dropout is off, and nothing in `model` is
/// mutated. Per-segment losses are combined weighted by token count, so the
/// mean is the same (to rounding) as scoring the stream in one giant
/// segment.
pub fn evaluate<T: Scalar>(model: &Model<T>, stream: &SegmentStream) -> Result<EvalReport> {
    if stream.num_batches() == 0 {
        return Err(Error::Data("evaluation stream holds no segments".into()));
    }
    let start = Instant::now();
    let batch = stream.batch_size();
    let mut memory = MemoryState::initial(model.config(), batch);
    // Dropout is disabled in eval mode so this rng is never consulted.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    let mut weighted = 0.0f64;
    let mut tokens = 0usize;
    for index in 0..stream.num_batches() {
        let segment = stream.batch(index);
        let mut tape = Tape::new();
        let out = model.step(
            &mut tape,
            &segment.inputs,
            Some(&segment.targets),
            batch,
            &memory,
            false,
            &mut rng,
        )?;
        let loss = tape.value(out.loss.expect("targets were given")).data()[0].as_f64();
        if !loss.is_finite() {
            return Err(Error::Numeric(format!(
                "non-finite loss {loss} while evaluating segment {index}"
            )));
        }
        let n = segment.inputs.len();
        weighted += loss * n as f64;
        tokens += n;
        memory = out.memory;
    }
    let mean = weighted / tokens as f64;
    EvalReport::new(model_id(model), tokens, mean, start.elapsed().as_secs_f64())
}

/// Fewer timed iterations than this and the median is too noisy to rank
/// models, so [`benchmark`] refuses to run.
pub const MIN_TIMED_ITERS: usize = 30;

/// One row of a benchmark comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub model: String,
    /// Median wall-clock seconds per training iteration.
    pub median_seconds: f64,
    /// Median divided by the fastest median in the set; the fastest is 1.0.
    pub normalized: f64,
}

/// Times full training iterations (forward, backward, clip, optimizer) for
/// each trainer: `warmup` untimed iterations, then `timed` measured ones,
/// reported as the median and normalized so the fastest model reads 1.0.
pub fn benchmark<T: Scalar>(
    entries: &mut [(String, Trainer<T>)],
    warmup: usize,
    timed: usize,
) -> Result<Vec<BenchResult>> {
    if timed < MIN_TIMED_ITERS {
        return Err(Error::Config(format!(
            "benchmark needs at least {MIN_TIMED_ITERS} timed iterations, got {timed}"
        )));
    }
    if entries.is_empty() {
        return Err(Error::Config("benchmark needs at least one model".into()));
    }
    let mut results = Vec::with_capacity(entries.len());
    for (name, trainer) in entries.iter_mut() {
        for _ in 0..warmup {
            trainer.train_iteration()?;
        }
        let mut times = Vec::with_capacity(timed);
        for _ in 0..timed {
            let t0 = Instant::now();
            trainer.train_iteration()?;
            times.push(t0.elapsed().as_secs_f64());
        }
        results.push(BenchResult {
            model: name.clone(),
            median_seconds: median(&mut times),
            normalized: 0.0,
        });
    }
    let fastest = results
        .iter()
        .map(|r| r.median_seconds)
        .fold(f64::INFINITY, f64::min);
    for r in &mut results {
        r.normalized = r.median_seconds / fastest;
    }
    Ok(results)
}

fn median(times: &mut [f64]) -> f64 {
    times.sort_unstable_by(|a, b| a.partial_cmp(b).expect("durations are finite"));
    let n = times.len();
    if n % 2 == 1 {
        times[n / 2]
    } else {
        0.5 * (times[n / 2 - 1] + times[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Arch, ModelConfig};
    use crate::train::{TrainOptions, TrainSchedule};
    use proptest::prelude::*;

    fn tiny_config(arch: Arch) -> ModelConfig {
        let mut cfg = match arch {
            Arch::Txl => ModelConfig::txl(11),
            Arch::Lstm => ModelConfig::lstm(11),
            Arch::Gru => ModelConfig::gru(11),
        };
        cfg.depth = 2;
        cfg.hidden = 8;
        cfg.heads = 2;
        cfg.ffd_inner = 16;
        cfg.seq_len = 4;
        cfg.mem_len = if arch == Arch::Txl { 4 } else { 0 };
        cfg.dropout = 0.0;
        cfg
    }

    fn tiny_stream(tokens: usize) -> SegmentStream {
        let ids: Vec<u32> = (0..tokens as u32).map(|i| 2 + (i * 7 + 3) % 9).collect();
        SegmentStream::new(&ids, 4, 2).unwrap()
    }

    #[test]
    fn conversion_formulas_match_hand_values() {
        assert!((bpc(std::f64::consts::LN_2).unwrap() - 1.0).abs() < 1e-9);
        assert!((perplexity(0.0).unwrap() - 1.0).abs() < 1e-9);
        let loss = 2.7185f64.ln();
        assert!((perplexity(loss).unwrap() - 2.7185).abs() < 1e-9);
        assert!((bpc(1.0).unwrap() - std::f64::consts::LOG2_E).abs() < 1e-12);
    }

    #[test]
    fn negative_or_non_finite_loss_is_rejected() {
        assert!(bpc(-0.1).is_err());
        assert!(perplexity(-0.1).is_err());
        assert!(bpc(f64::NAN).is_err());
        assert!(perplexity(f64::INFINITY).is_err());
    }

    #[test]
    fn perplexity_saturates_instead_of_overflowing() {
        assert!(perplexity(700.0).unwrap().is_finite());
        assert!(perplexity(700.1).unwrap().is_infinite());
    }

    proptest! {
        // Two routes to the same quantity: e^loss directly and 2^bpc.
        #[test]
        fn perplexity_equals_two_to_the_bpc(loss in 0.0f64..600.0) {
            let p = perplexity(loss).unwrap();
            let via_bits = 2.0f64.powf(bpc(loss).unwrap());
            prop_assert!((p - via_bits).abs() <= 1e-12 * p.max(1.0));
        }
    }

    #[test]
    fn report_derives_consistent_fields() {
        let r = EvalReport::new("txl-2".into(), 1000, 0.9, 2.0).unwrap();
        assert_eq!(r.bpc, bpc(0.9).unwrap());
        assert_eq!(r.perplexity, perplexity(0.9).unwrap());
        assert!((r.tokens_per_second - 500.0).abs() < 1e-9);
    }

    #[test]
    fn zeroed_model_scores_exactly_ln_vocab() {
        // All-zero parameters short every logit to 0.0, so the predictive
        // distribution is uniform and the loss is ln(vocab) exactly.
        let mut model = Model::<f32>::new(tiny_config(Arch::Txl), 1).unwrap();
        for p in model.params_mut() {
            for v in p.value_mut().data_mut() {
                *v = 0.0;
            }
        }
        let stream = tiny_stream(90);
        let report = evaluate(&model, &stream).unwrap();
        let expected = (11f64).ln();
        assert!(
            (report.loss - expected).abs() < 1e-6,
            "loss {} vs ln(11) {}",
            report.loss,
            expected
        );
        assert_eq!(report.token_count, stream.num_batches() * 2 * 4);
    }

    #[test]
    fn evaluation_is_deterministic_and_does_not_mutate() {
        let model = Model::<f32>::new(tiny_config(Arch::Txl), 7).unwrap();
        let before: Vec<Vec<f32>> = model.params().iter().map(|p| p.value().data().to_vec()).collect();
        let stream = tiny_stream(200);
        let a = evaluate(&model, &stream).unwrap();
        let b = evaluate(&model, &stream).unwrap();
        assert_eq!(a.loss.to_bits(), b.loss.to_bits());
        let after: Vec<Vec<f32>> = model.params().iter().map(|p| p.value().data().to_vec()).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn streamed_mean_matches_token_weighted_accumulation() {
        // Recompute the mean by scoring each segment separately (threading
        // the same memory) and weighting by token count; the report's
        // single number must agree.
        let model = Model::<f32>::new(tiny_config(Arch::Gru), 3).unwrap();
        let stream = tiny_stream(150);
        let report = evaluate(&model, &stream).unwrap();

        let mut memory = MemoryState::initial(model.config(), stream.batch_size());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let mut weighted = 0.0;
        let mut tokens = 0usize;
        for i in 0..stream.num_batches() {
            let seg = stream.batch(i);
            let mut tape = Tape::new();
            let out = model
                .step(
                    &mut tape,
                    &seg.inputs,
                    Some(&seg.targets),
                    stream.batch_size(),
                    &memory,
                    false,
                    &mut rng,
                )
                .unwrap();
            weighted += tape.value(out.loss.unwrap()).data()[0] as f64 * seg.inputs.len() as f64;
            tokens += seg.inputs.len();
            memory = out.memory;
        }
        assert!((report.loss - weighted / tokens as f64).abs() < 1e-9);
    }

    #[test]
    fn benchmark_ranks_and_normalizes() {
        let stream = tiny_stream(200);
        let mk = |depth: usize, seed: u64| {
            let mut cfg = tiny_config(Arch::Txl);
            cfg.depth = depth;
            let model = Model::<f32>::new(cfg, seed).unwrap();
            Trainer::new(
                model,
                tiny_stream(200),
                None,
                TrainOptions {
                    schedule: TrainSchedule::default(),
                    ..TrainOptions::default()
                },
            )
            .unwrap()
        };
        let _ = &stream;
        let mut entries = vec![("d1".to_string(), mk(1, 1)), ("d4".to_string(), mk(4, 2))];
        let results = benchmark(&mut entries, 2, 31).unwrap();
        let fastest = results
            .iter()
            .map(|r| r.median_seconds)
            .fold(f64::INFINITY, f64::min);
        assert!(results.iter().any(|r| r.normalized == 1.0));
        for r in &results {
            assert!(r.normalized >= 1.0);
            assert!((r.normalized - r.median_seconds / fastest).abs() < 1e-12);
        }
    }

    #[test]
    fn benchmark_refuses_too_few_iterations() {
        let mut entries: Vec<(String, Trainer<f32>)> = Vec::new();
        assert!(benchmark(&mut entries, 0, 29).is_err());
    }

    #[test]
    fn empty_stream_cannot_be_built_so_evaluate_needs_one_segment() {
        assert!(SegmentStream::new(&[1, 2, 3], 4, 2).is_err());
    }
}

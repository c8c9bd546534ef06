//! The training loop: Adam with warmup + cosine decay, global-norm
//! clipping, per-epoch validation, checkpointing, and a metrics CSV.
//!
//! An epoch here is a fixed number of iterations ([`TrainSchedule::epoch_iters`]),
//! not one pass over the corpus: token streams wrap cyclically and the
//! recurrent memory is reset to empty whenever a stream restarts, so segment
//! `i+1` always continues the text that segment `i` ended on.

pub mod checkpoint;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::SegmentStream;
use crate::eval::{self, EvalReport};
use crate::model::{MemoryState, Model};
use crate::tensor::tape::Tape;
use crate::tensor::{clip_global_norm, Scalar};
use crate::{Error, Result};

/// Learning-rate schedule: linear warmup from `lr_floor` to `lr_peak`, then
/// cosine decay back to the floor, clamped there for any iteration past
/// `total_iters`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainSchedule {
    pub lr_floor: f64,
    pub lr_peak: f64,
    pub warmup_iters: usize,
    pub total_iters: usize,
    pub epoch_iters: usize,
}

impl Default for TrainSchedule {
    fn default() -> Self {
        TrainSchedule {
            lr_floor: 1e-6,
            lr_peak: 5e-4,
            warmup_iters: 5120,
            total_iters: 25_600,
            epoch_iters: 512,
        }
    }
}

impl TrainSchedule {
    pub fn validate(&self) -> Result<()> {
        if !(self.lr_floor > 0.0 && self.lr_floor.is_finite()) {
            return Err(Error::Config(format!(
                "lr_floor must be positive, got {}",
                self.lr_floor
            )));
        }
        if !(self.lr_peak >= self.lr_floor && self.lr_peak.is_finite()) {
            return Err(Error::Config(format!(
                "lr_peak {} must be at least lr_floor {}",
                self.lr_peak, self.lr_floor
            )));
        }
        if self.total_iters == 0 || self.epoch_iters == 0 {
            return Err(Error::Config(
                "total_iters and epoch_iters must be positive".into(),
            ));
        }
        if self.warmup_iters > self.total_iters {
            return Err(Error::Config(format!(
                "warmup ({}) cannot exceed total iterations ({})",
                self.warmup_iters, self.total_iters
            )));
        }
        Ok(())
    }

    /// Learning rate for a 0-based iteration index.
    pub fn lr_at(&self, iter: usize) -> f64 {
        let span = self.lr_peak - self.lr_floor;
        if iter >= self.total_iters {
            return self.lr_floor;
        }
        if self.warmup_iters > 0 && iter <= self.warmup_iters {
            return self.lr_floor + span * iter as f64 / self.warmup_iters as f64;
        }
        let progress =
            (iter - self.warmup_iters) as f64 / (self.total_iters - self.warmup_iters) as f64;
        self.lr_floor + span * 0.5 * (1.0 + (std::f64::consts::PI * progress).cos())
    }
}

/// Adam with bias correction. Moments are kept in the parameter dtype; the
/// update arithmetic runs in f64.
#[derive(Debug, Clone, PartialEq)]
pub struct AdamState<T> {
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    /// Completed steps; bias correction uses `t` after incrementing.
    pub t: u64,
    pub m: Vec<Vec<T>>,
    pub v: Vec<Vec<T>>,
}

impl<T: Scalar> AdamState<T> {
    pub fn new(params: &[crate::tensor::Parameter<T>]) -> Self {
        AdamState {
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            t: 0,
            m: params.iter().map(|p| vec![T::zero(); p.numel()]).collect(),
            v: params.iter().map(|p| vec![T::zero(); p.numel()]).collect(),
        }
    }

    /// One update from the gradients currently held in `params`.
    pub fn step(&mut self, params: &mut [crate::tensor::Parameter<T>], lr: f64) {
        assert_eq!(params.len(), self.m.len(), "optimizer/model mismatch");
        self.t += 1;
        let bc1 = 1.0 - self.beta1.powi(self.t as i32);
        let bc2 = 1.0 - self.beta2.powi(self.t as i32);
        for (p, (m, v)) in params.iter_mut().zip(self.m.iter_mut().zip(&mut self.v)) {
            let grads = p.grad().to_vec();
            let theta = p.value_mut().data_mut();
            for i in 0..theta.len() {
                let g = grads[i].as_f64();
                let mi = self.beta1 * m[i].as_f64() + (1.0 - self.beta1) * g;
                let vi = self.beta2 * v[i].as_f64() + (1.0 - self.beta2) * g * g;
                m[i] = T::of(mi);
                v[i] = T::of(vi);
                let update = lr * (mi / bc1) / ((vi / bc2).sqrt() + self.eps);
                theta[i] = T::of(theta[i].as_f64() - update);
            }
        }
    }
}

/// Everything about one training iteration worth logging.
#[derive(Debug, Clone, PartialEq)]
pub struct IterRecord {
    pub iter: usize,
    pub epoch: usize,
    /// Mean cross-entropy of the segment, nats per token.
    pub loss: f64,
    pub lr: f64,
    /// Global gradient norm before clipping.
    pub grad_norm: f64,
    pub seconds: f64,
}

/// Appends CSV rows to a metrics file. The resolved run configuration goes
/// in as `# key = value` comment lines above the column header, so a
/// metrics file identifies the run that produced it.
pub struct MetricsWriter {
    out: std::io::BufWriter<fs::File>,
}

pub const METRICS_HEADER: &str = "iter,epoch,split,loss,bpc,perplexity,lr,grad_norm,seconds";

impl MetricsWriter {
    pub fn create(path: impl AsRef<Path>, config: &[(String, String)]) -> Result<Self> {
        if let Some(dir) = path.as_ref().parent() {
            if !dir.as_os_str().is_empty() {
                fs::create_dir_all(dir)?;
            }
        }
        let mut out = std::io::BufWriter::new(fs::File::create(path)?);
        for (key, value) in config {
            writeln!(out, "# {key} = {value}")?;
        }
        writeln!(out, "{METRICS_HEADER}")?;
        Ok(MetricsWriter { out })
    }

    pub fn train_row(&mut self, r: &IterRecord) -> Result<()> {
        let bpc = r.loss / std::f64::consts::LN_2;
        let ppl = if r.loss > eval::PERPLEXITY_OVERFLOW {
            f64::INFINITY
        } else {
            r.loss.exp()
        };
        writeln!(
            self.out,
            "{},{},train,{},{},{},{},{},{:.3}",
            r.iter, r.epoch, r.loss, bpc, ppl, r.lr, r.grad_norm, r.seconds
        )?;
        Ok(())
    }

    pub fn validation_row(
        &mut self,
        iter: usize,
        epoch: usize,
        report: &EvalReport,
        lr: f64,
    ) -> Result<()> {
        writeln!(
            self.out,
            "{},{},validation,{},{},{},{},,{:.3}",
            iter, epoch, report.loss, report.bpc, report.perplexity, lr, report.wall_seconds
        )?;
        Ok(())
    }

    pub fn flush(&mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

/// Static knobs for a [`Trainer`]. `vocab_hash` ties checkpoints to the
/// vocabulary file they were trained with.
#[derive(Debug, Clone)]
pub struct TrainOptions {
    pub schedule: TrainSchedule,
    /// Global gradient-norm ceiling.
    pub clip_norm: f64,
    pub seed: u64,
    pub vocab_hash: String,
    /// When set, `run` writes `latest.cxlm` each epoch and keeps the best
    /// validation checkpoint as `best.cxlm`.
    pub checkpoint_dir: Option<PathBuf>,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            schedule: TrainSchedule::default(),
            clip_norm: 0.1,
            seed: 0,
            vocab_hash: String::new(),
            checkpoint_dir: None,
        }
    }
}

/// Owns the model, optimizer state, recurrent memory, and rng for one run.
///
/// The dropout rng is the only randomness consumed while training, and
/// evaluation consumes none, so a (parameters, optimizer, memory, rng,
/// iteration) snapshot is enough to resume a run bit-for-bit.
pub struct Trainer<T: Scalar> {
    model: Model<T>,
    adam: AdamState<T>,
    schedule: TrainSchedule,
    clip_norm: f64,
    seed: u64,
    vocab_hash: String,
    checkpoint_dir: Option<PathBuf>,
    train_stream: SegmentStream,
    val_stream: Option<SegmentStream>,
    memory: MemoryState<T>,
    rng: ChaCha8Rng,
    iteration: usize,
    best_val: f64,
    metrics: Option<MetricsWriter>,
}

impl<T: Scalar> Trainer<T> {
    pub fn new(
        model: Model<T>,
        train_stream: SegmentStream,
        val_stream: Option<SegmentStream>,
        options: TrainOptions,
    ) -> Result<Self> {
        options.schedule.validate()?;
        if !(options.clip_norm > 0.0 && options.clip_norm.is_finite()) {
            return Err(Error::Config(format!(
                "clip norm must be positive, got {}",
                options.clip_norm
            )));
        }
        let memory = MemoryState::initial(model.config(), train_stream.batch_size());
        Ok(Trainer {
            adam: AdamState::new(model.params()),
            model,
            schedule: options.schedule,
            clip_norm: options.clip_norm,
            seed: options.seed,
            vocab_hash: options.vocab_hash,
            checkpoint_dir: options.checkpoint_dir,
            train_stream,
            val_stream,
            memory,
            rng: ChaCha8Rng::seed_from_u64(options.seed),
            iteration: 0,
            best_val: f64::INFINITY,
            metrics: None,
        })
    }

    pub fn attach_metrics(&mut self, writer: MetricsWriter) {
        self.metrics = Some(writer);
    }

    pub fn model(&self) -> &Model<T> {
        &self.model
    }

    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn best_validation_loss(&self) -> f64 {
        self.best_val
    }

    pub fn schedule(&self) -> &TrainSchedule {
        &self.schedule
    }

    /// Forward, backward, clip, Adam. Returns what was measured.
    pub fn train_iteration(&mut self) -> Result<IterRecord> {
        let start = Instant::now();
        let index = self.iteration % self.train_stream.num_batches();
        if index == 0 {
            // Stream wrapped back to its start; the next segment does not
            // continue the previous one, so the memory must not carry over.
            self.memory = MemoryState::initial(self.model.config(), self.train_stream.batch_size());
        }
        let segment = self.train_stream.batch(index);
        let mut tape = Tape::new();
        let out = self.model.step(
            &mut tape,
            &segment.inputs,
            Some(&segment.targets),
            self.train_stream.batch_size(),
            &self.memory,
            true,
            &mut self.rng,
        )?;
        let loss_var = out.loss.expect("targets were given");
        let loss = tape.value(loss_var).data()[0].as_f64();
        if !loss.is_finite() {
            return Err(Error::Numeric(format!(
                "non-finite loss {loss} at iteration {}",
                self.iteration
            )));
        }
        tape.backward(loss_var)?;
        self.model.zero_grads();
        self.model.accumulate_grads(&tape, &out);
        drop(tape);

        let mut grads: Vec<&mut [T]> = self
            .model
            .params_mut()
            .iter_mut()
            .map(|p| p.grad_mut())
            .collect();
        let grad_norm = clip_global_norm(&mut grads, T::of(self.clip_norm)).as_f64();
        let lr = self.schedule.lr_at(self.iteration);
        self.adam.step(self.model.params_mut(), lr);
        self.memory = out.memory;

        let record = IterRecord {
            iter: self.iteration,
            epoch: self.iteration / self.schedule.epoch_iters,
            loss,
            lr,
            grad_norm,
            seconds: start.elapsed().as_secs_f64(),
        };
        if let Some(w) = &mut self.metrics {
            w.train_row(&record)?;
        }
        self.iteration += 1;
        Ok(record)
    }

    /// Scores the validation stream without touching parameters, optimizer
    /// state, training memory, or the rng. Tracks the best loss seen and
    /// writes `best.cxlm` when it improves.
    pub fn validate(&mut self) -> Result<EvalReport> {
        let stream = self
            .val_stream
            .as_ref()
            .ok_or_else(|| Error::Config("no validation stream attached".into()))?;
        let report = eval::evaluate(&self.model, stream)?;
        let epoch = self.iteration.saturating_sub(1) / self.schedule.epoch_iters;
        let lr = self.schedule.lr_at(self.iteration);
        if let Some(w) = &mut self.metrics {
            w.validation_row(self.iteration, epoch, &report, lr)?;
        }
        if report.loss < self.best_val {
            self.best_val = report.loss;
            if let Some(dir) = self.checkpoint_dir.clone() {
                self.save(dir.join("best.cxlm"))?;
            }
        }
        Ok(report)
    }

    /// Runs `iters` training iterations, validating and checkpointing at
    /// every epoch boundary.
    pub fn run(&mut self, iters: usize) -> Result<Vec<IterRecord>> {
        let mut records = Vec::with_capacity(iters);
        for _ in 0..iters {
            records.push(self.train_iteration()?);
            if self.iteration.is_multiple_of(self.schedule.epoch_iters) {
                if self.val_stream.is_some() {
                    self.validate()?;
                }
                if let Some(dir) = self.checkpoint_dir.clone() {
                    self.save(dir.join("latest.cxlm"))?;
                }
                if let Some(w) = &mut self.metrics {
                    w.flush()?;
                }
            }
        }
        if let Some(w) = &mut self.metrics {
            w.flush()?;
        }
        Ok(records)
    }

    /// Snapshot of everything `resume` needs for a bit-identical
    /// continuation.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let cp = checkpoint::Checkpoint {
            config: self.model.config().clone(),
            params: self
                .model
                .params()
                .iter()
                .map(|p| crate::tensor::Parameter::new(p.name().to_string(), p.value().clone()))
                .collect(),
            adam: self.adam.clone(),
            iteration: self.iteration as u64,
            best_val: self.best_val,
            schedule: self.schedule.clone(),
            clip_norm: self.clip_norm,
            seed: self.seed,
            vocab_hash: self.vocab_hash.clone(),
            rng: checkpoint::RngState::capture(&self.rng),
            memory: self.memory.clone(),
            batch: self.train_stream.batch_size(),
        };
        checkpoint::save(path, &cp)
    }

    /// Rebuilds a trainer mid-run from [`save`](Self::save) output. The
    /// caller supplies streams built from the same tokenized corpus; the
    /// position within the training stream is derived from the stored
    /// iteration count.
    pub fn resume(
        path: impl AsRef<Path>,
        train_stream: SegmentStream,
        val_stream: Option<SegmentStream>,
        checkpoint_dir: Option<PathBuf>,
    ) -> Result<Self> {
        let cp: checkpoint::Checkpoint<T> = checkpoint::load(path)?;
        if cp.batch != train_stream.batch_size() {
            return Err(Error::Data(format!(
                "checkpoint was trained with batch size {}, stream has {}",
                cp.batch,
                train_stream.batch_size()
            )));
        }
        cp.schedule.validate()?;
        let model = Model::from_params(cp.config, cp.params)?;
        if cp.adam.m.len() != model.params().len() {
            return Err(Error::Data(
                "optimizer state does not match the parameter manifest".into(),
            ));
        }
        Ok(Trainer {
            model,
            adam: cp.adam,
            schedule: cp.schedule,
            clip_norm: cp.clip_norm,
            seed: cp.seed,
            vocab_hash: cp.vocab_hash,
            checkpoint_dir,
            train_stream,
            val_stream,
            memory: cp.memory,
            rng: cp.rng.restore(),
            iteration: cp.iteration as usize,
            best_val: cp.best_val,
            metrics: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelConfig;
    use crate::tensor::{Parameter, Tensor};
    use proptest::prelude::*;

    fn schedule() -> TrainSchedule {
        TrainSchedule::default()
    }

    #[test]
    fn schedule_hits_the_stated_anchor_points() {
        let s = schedule();
        assert!((s.lr_at(0) - 1e-6).abs() < 1e-9);
        assert!((s.lr_at(5120) - 5e-4).abs() < 1e-9);
        assert!((s.lr_at(25_600) - 1e-6).abs() < 1e-9);
        // Halfway through warmup: floor + half the span.
        assert!((s.lr_at(2560) - 2.505e-4).abs() < 1e-12);
    }

    #[test]
    fn schedule_is_continuous_at_the_warmup_junction() {
        let s = schedule();
        let linear_end = s.lr_at(s.warmup_iters);
        let cosine_start = s.lr_floor
            + (s.lr_peak - s.lr_floor) * 0.5 * (1.0 + (std::f64::consts::PI * 0.0).cos());
        assert!((linear_end - cosine_start).abs() < 1e-15);
    }

    #[test]
    fn schedule_clamps_past_the_end() {
        let s = schedule();
        assert_eq!(s.lr_at(25_601), 1e-6);
        assert_eq!(s.lr_at(1_000_000), 1e-6);
    }

    proptest! {
        #[test]
        fn schedule_stays_within_bounds(iter in 0usize..60_000) {
            let s = schedule();
            let lr = s.lr_at(iter);
            prop_assert!(lr >= s.lr_floor - 1e-15);
            prop_assert!(lr <= s.lr_peak + 1e-15);
        }

        #[test]
        fn warmup_is_monotonic(a in 0usize..5120) {
            let s = schedule();
            prop_assert!(s.lr_at(a) < s.lr_at(a + 1));
        }

        #[test]
        fn decay_is_monotonic(a in 5120usize..25_600) {
            let s = schedule();
            prop_assert!(s.lr_at(a) >= s.lr_at(a + 1));
        }
    }

    #[test]
    fn schedule_validation_rejects_nonsense() {
        let mut s = schedule();
        s.lr_peak = 1e-9;
        assert!(s.validate().is_err());
        let mut s = schedule();
        s.warmup_iters = s.total_iters + 1;
        assert!(s.validate().is_err());
        let mut s = schedule();
        s.epoch_iters = 0;
        assert!(s.validate().is_err());
    }

    #[test]
    fn adam_first_step_matches_hand_computation() {
        let mut p = vec![Parameter::new("w", Tensor::from_vec(vec![1.0f64]))];
        p[0].grad_mut()[0] = 0.5;
        let mut adam = AdamState::new(&p);
        adam.step(&mut p, 1e-3);
        // Bias correction makes the first update lr * g / (|g| + eps).
        let expected = 1.0 - 1e-3 * 0.5 / (0.5 + 1e-8);
        let got = p[0].value().data()[0];
        assert!((got - expected).abs() < 1e-15, "got {got}");
        assert!((got - (1.0 - 9.99998e-4)).abs() < 1e-8);
        assert_eq!(adam.t, 1);
    }

    #[test]
    fn adam_with_zero_gradient_leaves_parameters_alone() {
        let mut p = vec![Parameter::new("w", Tensor::from_vec(vec![3.5f64, -2.0]))];
        let mut adam = AdamState::new(&p);
        adam.step(&mut p, 1e-3);
        adam.step(&mut p, 1e-3);
        assert_eq!(p[0].value().data(), &[3.5, -2.0]);
        assert_eq!(adam.t, 2);
    }

    #[test]
    fn adam_second_moment_never_goes_negative() {
        let mut p = vec![Parameter::new("w", Tensor::from_vec(vec![0.0f64]))];
        let mut adam = AdamState::new(&p);
        let grads = [1.0, -3.0, 0.25, -0.001, 8.0];
        for g in grads {
            p[0].grad_mut()[0] = g;
            adam.step(&mut p, 1e-3);
            assert!(adam.v[0][0] >= 0.0);
        }
    }

    fn tiny_config() -> ModelConfig {
        let mut cfg = ModelConfig::txl(11);
        cfg.depth = 2;
        cfg.hidden = 8;
        cfg.heads = 2;
        cfg.ffd_inner = 16;
        cfg.seq_len = 4;
        cfg.mem_len = 4;
        cfg.dropout = 0.1;
        cfg
    }

    fn tiny_stream(tokens: usize) -> SegmentStream {
        let ids: Vec<u32> = (0..tokens as u32).map(|i| 2 + (i * 5 + 1) % 9).collect();
        SegmentStream::new(&ids, 4, 2).unwrap()
    }

    fn tiny_trainer(seed: u64) -> Trainer<f32> {
        let model = Model::<f32>::new(tiny_config(), seed).unwrap();
        let mut options = TrainOptions {
            seed,
            ..TrainOptions::default()
        };
        options.schedule.epoch_iters = 8;
        options.schedule.warmup_iters = 16;
        options.schedule.total_iters = 64;
        Trainer::new(model, tiny_stream(58), Some(tiny_stream(58)), options).unwrap()
    }

    #[test]
    fn initial_loss_is_near_uniform_entropy() {
        let mut t = tiny_trainer(3);
        let r = t.train_iteration().unwrap();
        let uniform = (11f64).ln();
        assert!(
            (r.loss - uniform).abs() < 0.1 * uniform,
            "first loss {} too far from ln(11) = {}",
            r.loss,
            uniform
        );
        assert!(r.grad_norm > 0.0);
        assert_eq!(r.iter, 0);
    }

    #[test]
    fn same_seed_gives_identical_loss_trace() {
        let mut a = tiny_trainer(9);
        let mut b = tiny_trainer(9);
        for _ in 0..30 {
            let ra = a.train_iteration().unwrap();
            let rb = b.train_iteration().unwrap();
            assert_eq!(ra.loss.to_bits(), rb.loss.to_bits());
            assert_eq!(ra.grad_norm.to_bits(), rb.grad_norm.to_bits());
        }
        let va = a.validate().unwrap();
        let vb = b.validate().unwrap();
        assert_eq!(va.loss.to_bits(), vb.loss.to_bits());
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = tiny_trainer(1);
        let mut b = tiny_trainer(2);
        let ra = a.train_iteration().unwrap();
        let rb = b.train_iteration().unwrap();
        assert_ne!(ra.loss.to_bits(), rb.loss.to_bits());
    }

    #[test]
    fn validation_mutates_nothing() {
        let mut t = tiny_trainer(5);
        for _ in 0..3 {
            t.train_iteration().unwrap();
        }
        let params: Vec<Vec<f32>> = t
            .model()
            .params()
            .iter()
            .map(|p| p.value().data().to_vec())
            .collect();
        let adam_t = t.adam.t;
        let rng_before = t.rng.clone();
        t.validate().unwrap();
        let after: Vec<Vec<f32>> = t
            .model()
            .params()
            .iter()
            .map(|p| p.value().data().to_vec())
            .collect();
        assert_eq!(params, after);
        assert_eq!(adam_t, t.adam.t);
        assert_eq!(rng_before, t.rng, "validation must not consume the rng");
        // Training picks up where it left off.
        let r = t.train_iteration().unwrap();
        assert_eq!(r.iter, 3);
    }

    #[test]
    fn training_reduces_loss_on_a_repetitive_stream() {
        // 58 tokens of period-9 structure are easy to memorize once the
        // learning rate is high enough to move in 150 iterations.
        let model = Model::<f32>::new(tiny_config(), 11).unwrap();
        let options = TrainOptions {
            schedule: TrainSchedule {
                lr_floor: 1e-5,
                lr_peak: 5e-3,
                warmup_iters: 10,
                total_iters: 200,
                epoch_iters: 512,
            },
            seed: 11,
            ..TrainOptions::default()
        };
        let mut t = Trainer::new(model, tiny_stream(58), None, options).unwrap();
        let first = t.train_iteration().unwrap().loss;
        let mut last = first;
        for _ in 0..149 {
            last = t.train_iteration().unwrap().loss;
        }
        assert!(
            last < 0.7 * first,
            "loss did not drop: first {first}, last {last}"
        );
    }

    #[test]
    fn non_finite_loss_aborts_and_names_the_iteration() {
        let mut t = tiny_trainer(4);
        // Poison the output bias: it reaches every logit, so the loss is
        // guaranteed to go NaN no matter which tokens the segment holds.
        let bias = t
            .model
            .params_mut()
            .iter_mut()
            .find(|p| p.name() == "out.bias")
            .unwrap();
        bias.value_mut().data_mut()[0] = f32::NAN;
        let err = t.train_iteration().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("iteration 0"), "message was {msg}");
        assert!(matches!(err, Error::Numeric(_)));
    }

    #[test]
    fn save_then_resume_continues_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mid.cxlm");

        let mut a = tiny_trainer(21);
        for _ in 0..10 {
            a.train_iteration().unwrap();
        }
        a.save(&path).unwrap();
        let continued: Vec<u64> = (0..10)
            .map(|_| a.train_iteration().unwrap().loss.to_bits())
            .collect();

        let mut b = Trainer::<f32>::resume(&path, tiny_stream(58), Some(tiny_stream(58)), None)
            .unwrap();
        assert_eq!(b.iteration(), 10);
        let resumed: Vec<u64> = (0..10)
            .map(|_| b.train_iteration().unwrap().loss.to_bits())
            .collect();
        assert_eq!(continued, resumed);
    }

    #[test]
    fn run_writes_epoch_checkpoints_and_tracks_the_best() {
        let dir = tempfile::tempdir().unwrap();
        let mut t = tiny_trainer(8);
        t.checkpoint_dir = Some(dir.path().to_path_buf());
        t.run(16).unwrap();
        assert!(dir.path().join("latest.cxlm").is_file());
        assert!(dir.path().join("best.cxlm").is_file());
        assert!(t.best_validation_loss().is_finite());
    }

    #[test]
    fn metrics_file_has_config_header_and_both_row_kinds() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("metrics.csv");
        let pairs = vec![
            ("arch".to_string(), "txl".to_string()),
            ("hidden".to_string(), "8".to_string()),
        ];
        let mut t = tiny_trainer(2);
        t.attach_metrics(MetricsWriter::create(&path, &pairs).unwrap());
        t.run(8).unwrap();
        drop(t);
        let text = fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# arch = txl"));
        assert_eq!(lines.next(), Some("# hidden = 8"));
        assert_eq!(lines.next(), Some(METRICS_HEADER));
        let rows: Vec<&str> = lines.collect();
        let train_rows = rows.iter().filter(|r| r.contains(",train,")).count();
        let val_rows = rows.iter().filter(|r| r.contains(",validation,")).count();
        assert_eq!(train_rows, 8);
        assert_eq!(val_rows, 1, "one epoch of 8 iterations ran");
        for row in &rows {
            assert_eq!(row.split(',').count(), 9, "bad row {row}");
        }
        let first = rows[0].split(',').collect::<Vec<_>>();
        assert_eq!(first[0], "0");
        assert_eq!(first[2], "train");
        let loss: f64 = first[3].parse().unwrap();
        let bpc: f64 = first[4].parse().unwrap();
        assert!((bpc - loss / std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn memory_resets_exactly_when_the_stream_wraps() {
        // Two identical trainers; poisoning the carried memory right before
        // a wrap iteration must not change anything (it gets discarded),
        // while the same poison before a mid-stream iteration must.
        let mut a = tiny_trainer(15);
        let mut b = tiny_trainer(15);
        let n = a.train_stream.num_batches();
        for _ in 0..n {
            a.train_iteration().unwrap();
            b.train_iteration().unwrap();
        }
        for layer in &mut a.memory.layers {
            for v in layer.data_mut() {
                *v += 0.5;
            }
        }
        let ra = a.train_iteration().unwrap();
        let rb = b.train_iteration().unwrap();
        assert_eq!(
            ra.loss.to_bits(),
            rb.loss.to_bits(),
            "wrap iteration must start from empty memory"
        );
        for layer in &mut a.memory.layers {
            for v in layer.data_mut() {
                *v += 0.5;
            }
        }
        let ra = a.train_iteration().unwrap();
        let rb = b.train_iteration().unwrap();
        assert_ne!(
            ra.loss.to_bits(),
            rb.loss.to_bits(),
            "mid-stream iterations must consume the carried memory"
        );
    }
}

//! The three architectures: a Transformer-XL style model with segment
//! recurrence and two recurrent baselines (LSTM, GRU).
//!
//! A model owns named parameters; every training step mounts them on a fresh
//! tape, builds the forward graph, and harvests gradients back after the
//! backward sweep. Recurrent state lives outside the tape as plain tensors,
//! so it is gradient-blocked by construction: backprop never crosses a
//! segment boundary in any of the three models.

mod rnn;
mod txl;

use crate::tensor::tape::{Tape, Var};
use crate::tensor::{Parameter, Scalar, Tensor};
use crate::{Error, Result};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;

/// Epsilon inside layer-norm's variance square root.
pub const LN_EPS: f64 = 1e-5;
/// Standard deviation for weight-matrix initialization.
pub const INIT_STD: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arch {
    Txl,
    Lstm,
    Gru,
}

impl Arch {
    pub fn name(&self) -> &'static str {
        match self {
            Arch::Txl => "txl",
            Arch::Lstm => "lstm",
            Arch::Gru => "gru",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "txl" => Ok(Arch::Txl),
            "lstm" => Ok(Arch::Lstm),
            "gru" => Ok(Arch::Gru),
            other => Err(Error::Config(format!("unknown architecture {other:?}"))),
        }
    }
}

/// Positional information for the attention model. Relative is the real
/// configuration; the absolute memory-unaware variant exists so the
/// no-memory reduction can be checked against a plain transformer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosEncoding {
    Relative,
    AbsoluteSinusoid,
}

impl PosEncoding {
    pub fn name(&self) -> &'static str {
        match self {
            PosEncoding::Relative => "relative",
            PosEncoding::AbsoluteSinusoid => "sinusoid",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "relative" => Ok(PosEncoding::Relative),
            "sinusoid" => Ok(PosEncoding::AbsoluteSinusoid),
            other => Err(Error::Config(format!("unknown position encoding {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelConfig {
    pub arch: Arch,
    pub depth: usize,
    pub hidden: usize,
    pub heads: usize,
    pub ffd_inner: usize,
    pub vocab_size: usize,
    pub seq_len: usize,
    pub mem_len: usize,
    pub dropout: f64,
    pub pos_encoding: PosEncoding,
}

impl ModelConfig {
    pub fn txl(vocab_size: usize) -> Self {
        Self {
            arch: Arch::Txl,
            depth: 4,
            hidden: 512,
            heads: 8,
            ffd_inner: 2048,
            vocab_size,
            seq_len: 256,
            mem_len: 256,
            dropout: 0.1,
            pos_encoding: PosEncoding::Relative,
        }
    }

    pub fn lstm(vocab_size: usize) -> Self {
        Self {
            arch: Arch::Lstm,
            heads: 1,
            ffd_inner: 1,
            mem_len: 0,
            ..Self::txl(vocab_size)
        }
    }

    pub fn gru(vocab_size: usize) -> Self {
        Self {
            arch: Arch::Gru,
            ..Self::lstm(vocab_size)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("depth", self.depth),
            ("hidden", self.hidden),
            ("vocab_size", self.vocab_size),
            ("seq_len", self.seq_len),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be positive")));
            }
        }
        if !(0.0..1.0).contains(&self.dropout) {
            return Err(Error::Config(format!(
                "dropout must be in [0, 1), got {}",
                self.dropout
            )));
        }
        if self.arch == Arch::Txl {
            if self.heads == 0 || !self.hidden.is_multiple_of(self.heads) {
                return Err(Error::Config(format!(
                    "hidden {} must divide into heads {}",
                    self.hidden, self.heads
                )));
            }
            if self.ffd_inner == 0 {
                return Err(Error::Config("ffd_inner must be positive".into()));
            }
        }
        Ok(())
    }
}

/// Recurrent state carried between segments, always detached.
///
/// For the attention model `layers[l]` holds the previous segment's input to
/// layer `l`, truncated to the last `mem_len` positions and laid out as
/// `[batch * m, hidden]` in batch-major order. For the RNN baselines it is
/// the `[batch, hidden]` hidden state, and `cell` holds the LSTM cell state.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryState<T> {
    pub layers: Vec<Tensor<T>>,
    pub cell: Vec<Tensor<T>>,
}

impl<T: Scalar> MemoryState<T> {
    pub fn initial(config: &ModelConfig, batch: usize) -> Self {
        let zeros = || Tensor::zeros(&[batch, config.hidden]);
        match config.arch {
            Arch::Txl => Self {
                layers: (0..config.depth)
                    .map(|_| Tensor::zeros(&[0, config.hidden]))
                    .collect(),
                cell: Vec::new(),
            },
            Arch::Lstm => Self {
                layers: (0..config.depth).map(|_| zeros()).collect(),
                cell: (0..config.depth).map(|_| zeros()).collect(),
            },
            Arch::Gru => Self {
                layers: (0..config.depth).map(|_| zeros()).collect(),
                cell: Vec::new(),
            },
        }
    }
}

/// Result of one forward pass.
pub struct StepOut<T> {
    /// `[batch*seq, vocab]` next-token logits. Rows are batch-major
    /// `(b, t)` when `time_major` is false, `(t, b)` otherwise.
    pub logits: Var,
    /// Mean cross-entropy over all positions, present when targets were given.
    pub loss: Option<Var>,
    /// Detached state to feed the next segment.
    pub memory: MemoryState<T>,
    /// Tape leaves for every parameter, in `Model::params` order.
    pub param_vars: Vec<Var>,
    /// Attention model only: the on-tape input each layer consumed.
    pub layer_inputs: Vec<Var>,
    pub time_major: bool,
}

impl<T> StepOut<T> {
    /// Row of `logits` holding position `t` of batch row `b`.
    pub fn logits_row(&self, b: usize, t: usize, batch: usize, seq: usize) -> usize {
        if self.time_major {
            t * batch + b
        } else {
            b * seq + t
        }
    }
}

#[derive(Clone, Copy)]
enum Init {
    Normal,
    Zeros,
    Ones,
}

fn param_specs(config: &ModelConfig) -> Vec<(String, Vec<usize>, Init)> {
    let h = config.hidden;
    let mut specs: Vec<(String, Vec<usize>, Init)> = Vec::new();
    let mut push = |name: String, shape: Vec<usize>, init: Init| specs.push((name, shape, init));
    push("embed.table".into(), vec![config.vocab_size, h], Init::Normal);
    for l in 0..config.depth {
        match config.arch {
            Arch::Txl => {
                for w in ["wq", "wk", "wv", "wo"] {
                    push(format!("layer{l}.att.{w}"), vec![h, h], Init::Normal);
                }
                if config.pos_encoding == PosEncoding::Relative {
                    push(format!("layer{l}.att.wr"), vec![h, h], Init::Normal);
                    push(format!("layer{l}.att.u"), vec![h], Init::Normal);
                    push(format!("layer{l}.att.v"), vec![h], Init::Normal);
                }
                push(
                    format!("layer{l}.ffd.w1"),
                    vec![h, config.ffd_inner],
                    Init::Normal,
                );
                push(format!("layer{l}.ffd.b1"), vec![config.ffd_inner], Init::Zeros);
                push(
                    format!("layer{l}.ffd.w2"),
                    vec![config.ffd_inner, h],
                    Init::Normal,
                );
                push(format!("layer{l}.ffd.b2"), vec![h], Init::Zeros);
                for n in ["norm1", "norm2"] {
                    push(format!("layer{l}.{n}.gain"), vec![h], Init::Ones);
                    push(format!("layer{l}.{n}.bias"), vec![h], Init::Zeros);
                }
            }
            Arch::Lstm => {
                push(format!("layer{l}.wx"), vec![h, 4 * h], Init::Normal);
                push(format!("layer{l}.wh"), vec![h, 4 * h], Init::Normal);
                push(format!("layer{l}.b"), vec![4 * h], Init::Zeros);
            }
            Arch::Gru => {
                push(format!("layer{l}.wxg"), vec![h, 2 * h], Init::Normal);
                push(format!("layer{l}.whg"), vec![h, 2 * h], Init::Normal);
                push(format!("layer{l}.bg"), vec![2 * h], Init::Zeros);
                push(format!("layer{l}.wxc"), vec![h, h], Init::Normal);
                push(format!("layer{l}.whc"), vec![h, h], Init::Normal);
                push(format!("layer{l}.bc"), vec![h], Init::Zeros);
            }
        }
    }
    push("out.weight".into(), vec![h, config.vocab_size], Init::Normal);
    push("out.bias".into(), vec![config.vocab_size], Init::Zeros);
    specs
}

pub struct Model<T: Scalar> {
    config: ModelConfig,
    params: Vec<Parameter<T>>,
    index: HashMap<String, usize>,
}

impl<T: Scalar> Model<T> {
    /// Fresh model with seed-deterministic initialization: weight matrices
    /// are normal(0, 0.02), biases zero, norm gains one.
    pub fn new(config: ModelConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        let mut rng = <ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let mut params = Vec::new();
        for (name, shape, init) in param_specs(&config) {
            let value = match init {
                Init::Normal => Tensor::randn(&shape, T::of(INIT_STD), &mut rng),
                Init::Zeros => Tensor::zeros(&shape),
                Init::Ones => Tensor::full(&shape, T::one()),
            };
            params.push(Parameter::new(name, value));
        }
        Self::assemble(config, params)
    }

    /// Rebuild from checkpointed parameters; names, order, and shapes must
    /// match what `new` would produce for this config.
    pub fn from_params(config: ModelConfig, params: Vec<Parameter<T>>) -> Result<Self> {
        config.validate()?;
        let specs = param_specs(&config);
        if specs.len() != params.len() {
            return Err(Error::Data(format!(
                "expected {} parameters, got {}",
                specs.len(),
                params.len()
            )));
        }
        for ((name, shape, _), p) in specs.iter().zip(&params) {
            if p.name() != name || p.value().shape() != &shape[..] {
                return Err(Error::Data(format!(
                    "parameter mismatch: expected {name} {shape:?}, got {} {:?}",
                    p.name(),
                    p.value().shape()
                )));
            }
            if !p.value().is_finite() {
                return Err(Error::Numeric(format!("parameter {name} is not finite")));
            }
        }
        Self::assemble(config, params)
    }

    fn assemble(config: ModelConfig, params: Vec<Parameter<T>>) -> Result<Self> {
        let index = params
            .iter()
            .enumerate()
            .map(|(i, p)| (p.name().to_string(), i))
            .collect();
        Ok(Self {
            config,
            params,
            index,
        })
    }

    pub fn config(&self) -> &ModelConfig {
        &self.config
    }

    pub fn params(&self) -> &[Parameter<T>] {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut [Parameter<T>] {
        &mut self.params
    }

    pub fn param(&self, name: &str) -> Option<&Parameter<T>> {
        self.index.get(name).map(|&i| &self.params[i])
    }

    pub fn param_mut(&mut self, name: &str) -> Option<&mut Parameter<T>> {
        self.index.get(name).copied().map(|i| &mut self.params[i])
    }

    /// Exact count of scalar trainable values.
    pub fn count_parameters(&self) -> usize {
        self.params.iter().map(|p| p.value().numel()).sum()
    }

    pub(crate) fn var(&self, vars: &[Var], name: &str) -> Var {
        vars[self.index[name]]
    }

    /// Mount parameters and run one segment. `inputs` (and `targets`, when
    /// present) are `batch` rows of `seq` ids, row-major. Gradients flow only
    /// within this segment: `memory` enters as plain constants.
    #[allow(clippy::too_many_arguments)]
    pub fn step<R: Rng>(
        &self,
        tape: &mut Tape<T>,
        inputs: &[u32],
        targets: Option<&[u32]>,
        batch: usize,
        memory: &MemoryState<T>,
        training: bool,
        rng: &mut R,
    ) -> Result<StepOut<T>> {
        self.check_step_args(inputs, targets, batch, memory)?;
        match self.config.arch {
            Arch::Txl => txl::step(self, tape, inputs, targets, batch, memory, training, rng),
            Arch::Lstm | Arch::Gru => {
                rnn::step(self, tape, inputs, targets, batch, memory, training, rng)
            }
        }
    }

    /// Attention model only: run a segment with caller-supplied memory vars
    /// (e.g. stop-gradient views of a previous segment living on the same
    /// tape). `mem_vars[l]` of `None` means empty memory for that layer.
    #[allow(clippy::too_many_arguments)]
    pub fn step_with_memory_vars<R: Rng>(
        &self,
        tape: &mut Tape<T>,
        inputs: &[u32],
        targets: Option<&[u32]>,
        batch: usize,
        mem_vars: &[Option<Var>],
        training: bool,
        rng: &mut R,
    ) -> Result<StepOut<T>> {
        if self.config.arch != Arch::Txl {
            return Err(Error::Config(
                "step_with_memory_vars applies to the attention model only".into(),
            ));
        }
        if mem_vars.len() != self.config.depth {
            return Err(Error::Config(format!(
                "expected {} memory vars, got {}",
                self.config.depth,
                mem_vars.len()
            )));
        }
        txl::step_with_memory(self, tape, inputs, targets, batch, mem_vars, training, rng)
    }

    fn check_step_args(
        &self,
        inputs: &[u32],
        targets: Option<&[u32]>,
        batch: usize,
        memory: &MemoryState<T>,
    ) -> Result<()> {
        if batch == 0 || inputs.is_empty() || !inputs.len().is_multiple_of(batch) {
            return Err(Error::Config(format!(
                "inputs of {} do not form whole rows of batch {batch}",
                inputs.len()
            )));
        }
        if let Some(t) = targets {
            if t.len() != inputs.len() {
                return Err(Error::Config(format!(
                    "targets of {} do not match inputs of {}",
                    t.len(),
                    inputs.len()
                )));
            }
        }
        if memory.layers.len() != self.config.depth {
            return Err(Error::Config(format!(
                "memory has {} layers, model has {}",
                memory.layers.len(),
                self.config.depth
            )));
        }
        if self.config.arch == Arch::Lstm && memory.cell.len() != self.config.depth {
            return Err(Error::Config("lstm memory must carry cell state".into()));
        }
        Ok(())
    }

    /// Copy gradients from the tape into parameter buffers, accumulating.
    pub fn accumulate_grads(&mut self, tape: &Tape<T>, out: &StepOut<T>) {
        for (param, &var) in self.params.iter_mut().zip(&out.param_vars) {
            if let Some(g) = tape.grad(var) {
                for (pg, &tg) in param.grad_mut().iter_mut().zip(g) {
                    *pg += tg;
                }
            }
        }
    }

    pub fn zero_grads(&mut self) {
        for p in &mut self.params {
            p.zero_grad();
        }
    }
}

/// Sinusoidal position table: row `p` interleaves `sin(p / 10000^(2i/h))`
/// and the matching cosine. Used directly for absolute encoding and as the
/// pre-projection relative-offset table.
pub(crate) fn sinusoid_table<T: Scalar>(rows: usize, hidden: usize) -> Tensor<T> {
    let mut data = vec![T::zero(); rows * hidden];
    for pos in 0..rows {
        for i in 0..hidden.div_ceil(2) {
            let angle = pos as f64 / 10000f64.powf(2.0 * i as f64 / hidden as f64);
            data[pos * hidden + 2 * i] = T::of(angle.sin());
            if 2 * i + 1 < hidden {
                data[pos * hidden + 2 * i + 1] = T::of(angle.cos());
            }
        }
    }
    Tensor::new(vec![rows, hidden], data).expect("table shape is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn tiny_txl() -> ModelConfig {
        ModelConfig {
            depth: 2,
            hidden: 8,
            heads: 2,
            ffd_inner: 16,
            seq_len: 4,
            mem_len: 4,
            dropout: 0.0,
            ..ModelConfig::txl(11)
        }
    }

    #[test]
    fn config_rejects_bad_extents() {
        let mut c = tiny_txl();
        c.heads = 3; // 8 % 3 != 0
        assert!(c.validate().is_err());
        let mut c = tiny_txl();
        c.dropout = 1.0;
        assert!(c.validate().is_err());
        let mut c = tiny_txl();
        c.depth = 0;
        assert!(c.validate().is_err());
        assert!(tiny_txl().validate().is_ok());
    }

    #[test]
    fn single_square_matrix_counts_its_elements() {
        let p = Parameter::new("w", Tensor::<f32>::zeros(&[512, 512]));
        assert_eq!(p.value().numel(), 262144);
    }

    #[test]
    fn deeper_model_has_more_parameters() {
        let m4 = Model::<f32>::new(tiny_txl(), 0).unwrap();
        let mut c8 = tiny_txl();
        c8.depth = 4;
        let m8 = Model::<f32>::new(c8, 0).unwrap();
        assert!(m8.count_parameters() > m4.count_parameters());
    }

    #[test]
    fn count_matches_sum_over_enumerated_params() {
        let m = Model::<f32>::new(tiny_txl(), 0).unwrap();
        let total: usize = m.params().iter().map(|p| p.value().numel()).sum();
        assert_eq!(m.count_parameters(), total);
    }

    #[test]
    fn same_seed_same_parameters() {
        let a = Model::<f32>::new(tiny_txl(), 9).unwrap();
        let b = Model::<f32>::new(tiny_txl(), 9).unwrap();
        for (x, y) in a.params().iter().zip(b.params()) {
            assert_eq!(x.value().data(), y.value().data());
        }
        let c = Model::<f32>::new(tiny_txl(), 10).unwrap();
        let differs = a
            .params()
            .iter()
            .zip(c.params())
            .any(|(x, y)| x.value().data() != y.value().data());
        assert!(differs);
    }

    #[test]
    fn from_params_checks_names_and_shapes() {
        let m = Model::<f32>::new(tiny_txl(), 0).unwrap();
        let params: Vec<_> = m
            .params()
            .iter()
            .map(|p| Parameter::new(p.name(), p.value().clone()))
            .collect();
        assert!(Model::from_params(tiny_txl(), params).is_ok());
        let mut broken: Vec<_> = m
            .params()
            .iter()
            .map(|p| Parameter::new(p.name(), p.value().clone()))
            .collect();
        broken.swap(0, 1);
        assert!(Model::from_params(tiny_txl(), broken).is_err());
    }

    #[test]
    fn initial_memory_matches_arch() {
        let txl = MemoryState::<f32>::initial(&tiny_txl(), 3);
        assert_eq!(txl.layers.len(), 2);
        assert_eq!(txl.layers[0].shape(), &[0, 8]);
        assert!(txl.cell.is_empty());

        let mut lc = tiny_txl();
        lc.arch = Arch::Lstm;
        let lstm = MemoryState::<f32>::initial(&lc, 3);
        assert_eq!(lstm.layers[0].shape(), &[3, 8]);
        assert_eq!(lstm.cell.len(), 2);
    }

    #[test]
    fn sinusoid_table_interleaves_sin_cos() {
        let t = sinusoid_table::<f64>(3, 4);
        assert_eq!(t.shape(), &[3, 4]);
        // row 0: sin(0)=0, cos(0)=1 in both frequency pairs
        assert_eq!(&t.data()[0..4], &[0.0, 1.0, 0.0, 1.0]);
        let angle = 2.0 / 10000f64.powf(0.5);
        assert!((t.data()[2 * 4 + 2] - angle.sin()).abs() < 1e-15);
        assert!((t.data()[2 * 4 + 3] - angle.cos()).abs() < 1e-15);
    }

    #[test]
    fn step_rejects_ragged_inputs_and_bad_memory() {
        let m = Model::<f32>::new(tiny_txl(), 0).unwrap();
        let mem = MemoryState::initial(m.config(), 2);
        let mut tape = Tape::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // 7 ids do not form 2 rows
        assert!(m
            .step(&mut tape, &[0; 7], None, 2, &mem, false, &mut rng)
            .is_err());
        // memory with wrong layer count
        let bad = MemoryState {
            layers: vec![Tensor::zeros(&[0, 8])],
            cell: vec![],
        };
        assert!(m
            .step(&mut tape, &[0; 8], None, 2, &bad, false, &mut rng)
            .is_err());
    }
}

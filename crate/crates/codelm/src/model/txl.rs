//! Attention forward pass with segment-level recurrence.
//!
//! Keys and values are computed over the concatenation of the cached
//! previous segment and the current one; queries come from the current
//! segment only. The cache enters the tape as a constant (or an explicit
//! stop-gradient var), so backpropagation never reaches the previous
//! segment. Each layer's composition follows the layernorm-then-residual
//! form: `x' = layernorm(att) + x; out = layernorm(ffd(x')) + x'`.

use super::{sinusoid_table, MemoryState, Model, ModelConfig, PosEncoding, StepOut, LN_EPS};
use crate::tensor::tape::{RelPos, Tape, Var};
use crate::tensor::{Scalar, Tensor};
use crate::Result;
use rand::Rng;

#[allow(clippy::too_many_arguments)]
pub(super) fn step<T: Scalar, R: Rng>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    inputs: &[u32],
    targets: Option<&[u32]>,
    batch: usize,
    memory: &MemoryState<T>,
    training: bool,
    rng: &mut R,
) -> Result<StepOut<T>> {
    let mem_vars: Vec<Option<Var>> = memory
        .layers
        .iter()
        .map(|m| (m.shape()[0] > 0).then(|| tape.constant(m.clone())))
        .collect();
    step_with_memory(model, tape, inputs, targets, batch, &mem_vars, training, rng)
}

#[allow(clippy::too_many_arguments)]
pub(super) fn step_with_memory<T: Scalar, R: Rng>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    inputs: &[u32],
    targets: Option<&[u32]>,
    batch: usize,
    mem_vars: &[Option<Var>],
    training: bool,
    rng: &mut R,
) -> Result<StepOut<T>> {
    let cfg = model.config();
    let seq = inputs.len() / batch;
    let pv: Vec<Var> = model
        .params()
        .iter()
        .map(|p| tape.leaf(p.value().clone(), training))
        .collect();

    let mut x = tape.embedding(model.var(&pv, "embed.table"), inputs)?;
    if cfg.pos_encoding == PosEncoding::AbsoluteSinusoid {
        // Memory-unaware absolute positions, added to the segment only.
        let table = sinusoid_table::<T>(seq, cfg.hidden);
        let mut tiled = Vec::with_capacity(batch * seq * cfg.hidden);
        for _ in 0..batch {
            tiled.extend_from_slice(table.data());
        }
        let pe = tape.constant(Tensor::new(vec![batch * seq, cfg.hidden], tiled)?);
        x = tape.add(x, pe)?;
    }

    let mut layer_inputs = Vec::with_capacity(cfg.depth);
    for (l, &mem) in mem_vars.iter().enumerate() {
        layer_inputs.push(x);
        x = layer(model, tape, x, mem, l, batch, &pv, training, rng)?;
    }

    let proj = tape.matmul(x, model.var(&pv, "out.weight"))?;
    let logits = tape.add_bias(proj, model.var(&pv, "out.bias"))?;
    let loss = match targets {
        Some(t) => Some(tape.softmax_cross_entropy(logits, t)?),
        None => None,
    };
    let memory = updated_memory(cfg, tape, mem_vars, &layer_inputs, batch, seq);
    Ok(StepOut {
        logits,
        loss,
        memory,
        param_vars: pv,
        layer_inputs,
        time_major: false,
    })
}

#[allow(clippy::too_many_arguments)]
fn layer<T: Scalar, R: Rng>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    x: Var,
    mem: Option<Var>,
    l: usize,
    batch: usize,
    pv: &[Var],
    training: bool,
    rng: &mut R,
) -> Result<Var> {
    let cfg = model.config();
    let p = |name: &str| model.var(pv, &format!("layer{l}.{name}"));

    let att = attention(model, tape, x, mem, l, batch, pv)?;
    let att = tape.dropout(att, cfg.dropout, training, rng)?;
    let ln1 = tape.layer_norm(att, p("norm1.gain"), p("norm1.bias"), T::of(LN_EPS))?;
    let x1 = tape.add(ln1, x)?;

    let f = ffd(model, tape, x1, l, pv)?;
    let f = tape.dropout(f, cfg.dropout, training, rng)?;
    let ln2 = tape.layer_norm(f, p("norm2.gain"), p("norm2.bias"), T::of(LN_EPS))?;
    tape.add(ln2, x1)
}

/// Multi-head causal attention over `[memory ∥ segment]`.
fn attention<T: Scalar>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    x: Var,
    mem: Option<Var>,
    l: usize,
    batch: usize,
    pv: &[Var],
) -> Result<Var> {
    let cfg = model.config();
    let p = |name: &str| model.var(pv, &format!("layer{l}.att.{name}"));

    let kv_in = match mem {
        Some(m) => tape.concat_time(m, x, batch)?,
        None => x,
    };
    let q = tape.matmul(x, p("wq"))?;
    let k = tape.matmul(kv_in, p("wk"))?;
    let v = tape.matmul(kv_in, p("wv"))?;

    let rel = match cfg.pos_encoding {
        PosEncoding::Relative => {
            let klen = tape.value(kv_in).shape()[0] / batch;
            let sin = tape.constant(sinusoid_table::<T>(klen, cfg.hidden));
            let pos = tape.matmul(sin, p("wr"))?;
            Some(RelPos {
                pos,
                content_bias: p("u"),
                pos_bias: p("v"),
            })
        }
        PosEncoding::AbsoluteSinusoid => None,
    };

    let scores = tape.attention_scores(q, k, rel, batch, cfg.heads)?;
    let probs = tape.softmax_rows(scores)?;
    let ctx = tape.attention_context(probs, v, batch, cfg.heads)?;
    tape.matmul(ctx, p("wo"))
}

/// Position-wise feed-forward: `w2 · gelu(w1 · x + b1) + b2`.
fn ffd<T: Scalar>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    x: Var,
    l: usize,
    pv: &[Var],
) -> Result<Var> {
    let p = |name: &str| model.var(pv, &format!("layer{l}.ffd.{name}"));
    let h = tape.matmul(x, p("w1"))?;
    let h = tape.add_bias(h, p("b1"))?;
    let h = tape.gelu(h);
    let out = tape.matmul(h, p("w2"))?;
    tape.add_bias(out, p("b2"))
}

/// Next segment's cache: the last `mem_len` positions of `[old ∥ input]`
/// per layer and batch row, copied out of the tape as plain values.
fn updated_memory<T: Scalar>(
    cfg: &ModelConfig,
    tape: &Tape<T>,
    mem_vars: &[Option<Var>],
    layer_inputs: &[Var],
    batch: usize,
    seq: usize,
) -> MemoryState<T> {
    let hidden = cfg.hidden;
    let mut layers = Vec::with_capacity(cfg.depth);
    for (l, &xv) in layer_inputs.iter().enumerate() {
        if cfg.mem_len == 0 {
            layers.push(Tensor::zeros(&[0, hidden]));
            continue;
        }
        let x = tape.value(xv);
        let old = mem_vars[l].map(|m| tape.value(m));
        let m_old = old.map_or(0, |t| t.shape()[0] / batch);
        let keep = cfg.mem_len.min(m_old + seq);
        let from_x = keep.min(seq);
        let from_old = keep - from_x;
        let mut data = Vec::with_capacity(batch * keep * hidden);
        for b in 0..batch {
            if let Some(t) = old {
                if from_old > 0 {
                    let start = (b * m_old + (m_old - from_old)) * hidden;
                    data.extend_from_slice(&t.data()[start..start + from_old * hidden]);
                }
            }
            let start = (b * seq + (seq - from_x)) * hidden;
            data.extend_from_slice(&x.data()[start..start + from_x * hidden]);
        }
        layers.push(
            Tensor::new(vec![batch * keep, hidden], data).expect("memory shape is consistent"),
        );
    }
    MemoryState {
        layers,
        cell: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelConfig;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tiny(depth: usize) -> ModelConfig {
        ModelConfig {
            depth,
            hidden: 8,
            heads: 2,
            ffd_inner: 16,
            seq_len: 4,
            mem_len: 4,
            dropout: 0.0,
            ..ModelConfig::txl(11)
        }
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(40)
    }

    fn zeroed(mut model: Model<f64>) -> Model<f64> {
        for p in model.params_mut() {
            let one = p.name().ends_with("gain");
            for v in p.value_mut().data_mut() {
                *v = if one { 1.0 } else { 0.0 };
            }
        }
        model
    }

    #[test]
    fn singleton_attention_weight_is_exactly_one() {
        // one token, one head, hidden 1: softmax over a single score is 1,
        // so the output is exactly x * wv * wo
        let cfg = ModelConfig {
            depth: 1,
            hidden: 1,
            heads: 1,
            ffd_inner: 1,
            seq_len: 1,
            mem_len: 0,
            dropout: 0.0,
            ..ModelConfig::txl(3)
        };
        let mut model = Model::<f64>::new(cfg, 0).unwrap();
        model.param_mut("layer0.att.wv").unwrap().value_mut().data_mut()[0] = 2.0;
        model.param_mut("layer0.att.wo").unwrap().value_mut().data_mut()[0] = 3.0;
        let mut tape = Tape::new();
        let pv: Vec<Var> = model
            .params()
            .iter()
            .map(|p| tape.leaf(p.value().clone(), false))
            .collect();
        let x = tape.leaf(Tensor::new(vec![1, 1], vec![5.0]).unwrap(), false);
        let out = attention(&model, &mut tape, x, None, 0, 1, &pv).unwrap();
        assert_eq!(tape.value(out).data(), &[5.0 * 2.0 * 3.0]);
    }

    #[test]
    fn ffd_zero_weights_give_zero_output() {
        let model = zeroed(Model::<f64>::new(tiny(1), 0).unwrap());
        let mut tape = Tape::new();
        let pv: Vec<Var> = model
            .params()
            .iter()
            .map(|p| tape.leaf(p.value().clone(), false))
            .collect();
        let x = tape.leaf(Tensor::randn(&[3, 8], 1.0, &mut rng()), false);
        let out = ffd(&model, &mut tape, x, 0, &pv).unwrap();
        assert_eq!(tape.value(out).shape(), &[3, 8]);
        assert!(tape.value(out).data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn ffd_identity_weights_reduce_to_gelu() {
        let cfg = ModelConfig {
            depth: 1,
            hidden: 1,
            heads: 1,
            ffd_inner: 1,
            seq_len: 1,
            mem_len: 0,
            dropout: 0.0,
            ..ModelConfig::txl(3)
        };
        let mut model = zeroed(Model::<f64>::new(cfg, 0).unwrap());
        model.param_mut("layer0.ffd.w1").unwrap().value_mut().data_mut()[0] = 1.0;
        model.param_mut("layer0.ffd.w2").unwrap().value_mut().data_mut()[0] = 1.0;
        let mut tape = Tape::new();
        let pv: Vec<Var> = model
            .params()
            .iter()
            .map(|p| tape.leaf(p.value().clone(), false))
            .collect();
        let x = tape.leaf(Tensor::new(vec![1, 1], vec![1.0]).unwrap(), false);
        let out = ffd(&model, &mut tape, x, 0, &pv).unwrap();
        assert!((tape.value(out).data()[0] - 0.841345).abs() < 1e-6);
    }

    #[test]
    fn zeroed_sublayers_pass_residual_through() {
        // zero attention/ffd weights with unit norm gains: both sublayer
        // outputs are zero vectors, layernorm of zero is zero, so each
        // AddNorm reduces to the residual and the layer is the identity
        let model = zeroed(Model::<f64>::new(tiny(1), 0).unwrap());
        let mut tape = Tape::new();
        let pv: Vec<Var> = model
            .params()
            .iter()
            .map(|p| tape.leaf(p.value().clone(), false))
            .collect();
        let xt = Tensor::randn(&[8, 8], 1.0, &mut rng());
        let x = tape.leaf(xt.clone(), false);
        let out = layer(&model, &mut tape, x, None, 0, 2, &pv, false, &mut rng()).unwrap();
        assert_eq!(tape.value(out).data(), xt.data());
    }

    #[test]
    fn memory_after_segment_equals_layer_inputs() {
        let model = Model::<f64>::new(tiny(2), 1).unwrap();
        let mut tape = Tape::new();
        let mem = MemoryState::initial(model.config(), 2);
        let ids: Vec<u32> = (0..8).map(|i| i % 11).collect();
        let out = model
            .step(&mut tape, &ids, None, 2, &mem, false, &mut rng())
            .unwrap();
        assert_eq!(out.memory.layers.len(), 2);
        for (l, mv) in out.memory.layers.iter().enumerate() {
            // seq == mem_len, so the cache is exactly this segment's input
            assert_eq!(mv.shape(), &[8, 8]);
            assert_eq!(mv.data(), tape.value(out.layer_inputs[l]).data());
        }
    }

    #[test]
    fn memory_truncates_to_last_mem_len_positions() {
        let mut cfg = tiny(1);
        cfg.mem_len = 6;
        let model = Model::<f64>::new(cfg, 1).unwrap();
        let mut rng = rng();
        let mem0 = MemoryState::initial(model.config(), 1);
        let ids: Vec<u32> = vec![1, 2, 3, 4];

        let mut tape = Tape::new();
        let s1 = model
            .step(&mut tape, &ids, None, 1, &mem0, false, &mut rng)
            .unwrap();
        assert_eq!(s1.memory.layers[0].shape(), &[4, 8]);

        let mut tape2 = Tape::new();
        let s2 = model
            .step(&mut tape2, &ids, None, 1, &s1.memory, false, &mut rng)
            .unwrap();
        let m = &s2.memory.layers[0];
        assert_eq!(m.shape(), &[6, 8]);
        // last 2 rows of the first segment's input, then all 4 of the second
        let prev = &s1.memory.layers[0];
        assert_eq!(&m.data()[0..16], &prev.data()[2 * 8..]);
        assert_eq!(
            &m.data()[16..],
            tape2.value(s2.layer_inputs[0]).data()
        );
    }

    #[test]
    fn carried_memory_changes_next_segment_logits() {
        let model = Model::<f64>::new(tiny(2), 3).unwrap();
        let mut rng = rng();
        let ids: Vec<u32> = vec![5, 6, 7, 8];
        let mem0 = MemoryState::initial(model.config(), 1);

        let mut t1 = Tape::new();
        let s1 = model
            .step(&mut t1, &ids, None, 1, &mem0, false, &mut rng)
            .unwrap();

        let mut with_mem = Tape::new();
        let a = model
            .step(&mut with_mem, &ids, None, 1, &s1.memory, false, &mut rng)
            .unwrap();
        let mut without = Tape::new();
        let b = model
            .step(&mut without, &ids, None, 1, &mem0, false, &mut rng)
            .unwrap();
        assert_ne!(
            with_mem.value(a.logits).data(),
            without.value(b.logits).data()
        );
    }

    #[test]
    fn future_tokens_cannot_influence_earlier_logits() {
        let model = Model::<f64>::new(tiny(2), 5).unwrap();
        let mem = MemoryState::initial(model.config(), 1);
        let base: Vec<u32> = vec![1, 2, 3, 4];
        let mut perturbed = base.clone();
        perturbed[2] = 9;

        let mut ta = Tape::new();
        let a = model
            .step(&mut ta, &base, None, 1, &mem, false, &mut rng())
            .unwrap();
        let mut tb = Tape::new();
        let b = model
            .step(&mut tb, &perturbed, None, 1, &mem, false, &mut rng())
            .unwrap();
        let (av, bv) = (ta.value(a.logits), tb.value(b.logits));
        let vocab = 11;
        for t in 0..2 {
            assert_eq!(
                av.data()[t * vocab..(t + 1) * vocab],
                bv.data()[t * vocab..(t + 1) * vocab],
                "position {t} saw a future change"
            );
        }
        assert_ne!(
            av.data()[2 * vocab..3 * vocab],
            bv.data()[2 * vocab..3 * vocab]
        );
    }

    #[test]
    fn logits_softmax_rows_are_distributions() {
        let model = Model::<f64>::new(tiny(2), 6).unwrap();
        let mem = MemoryState::initial(model.config(), 2);
        let ids: Vec<u32> = (0..8).map(|i| (i * 3) % 11).collect();
        let mut tape = Tape::new();
        let out = model
            .step(&mut tape, &ids, None, 2, &mem, false, &mut rng())
            .unwrap();
        let probs = tape.softmax_rows(out.logits).unwrap();
        for row in tape.value(probs).data().chunks(11) {
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn loss_is_finite_scalar_and_eval_is_deterministic() {
        let model = Model::<f64>::new(tiny(2), 7).unwrap();
        let mem = MemoryState::initial(model.config(), 2);
        let ids: Vec<u32> = (0..8).map(|i| i % 11).collect();
        let targets: Vec<u32> = (0..8).map(|i| (i + 1) % 11).collect();
        let mut t1 = Tape::new();
        let a = model
            .step(&mut t1, &ids, Some(&targets), 2, &mem, false, &mut rng())
            .unwrap();
        let loss = t1.value(a.loss.unwrap());
        assert_eq!(loss.numel(), 1);
        assert!(loss.data()[0].is_finite());
        let mut t2 = Tape::new();
        let b = model
            .step(&mut t2, &ids, Some(&targets), 2, &mem, false, &mut rng())
            .unwrap();
        assert_eq!(t1.value(a.logits).data(), t2.value(b.logits).data());
    }

    #[test]
    fn absolute_encoding_has_no_relative_parameters() {
        let mut cfg = tiny(1);
        cfg.pos_encoding = PosEncoding::AbsoluteSinusoid;
        let abs = Model::<f64>::new(cfg, 0).unwrap();
        assert!(abs.param("layer0.att.wr").is_none());
        assert!(abs.param("layer0.att.u").is_none());
        let rel = Model::<f64>::new(tiny(1), 0).unwrap();
        assert!(rel.param("layer0.att.wr").is_some());
        assert!(rel.count_parameters() > abs.count_parameters());
    }
}

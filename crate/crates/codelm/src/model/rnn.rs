//! Stacked LSTM and GRU baselines.
//!
//! Cells unroll over the segment in time-major order (each timestep is a
//! contiguous `[batch, hidden]` block), with hidden state carried across
//! segments as detached values, matching the attention model's one-segment
//! backpropagation horizon.

use super::{Arch, MemoryState, Model, StepOut};
use crate::tensor::tape::{Tape, Var};
use crate::tensor::Scalar;
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
    let cfg = model.config();
    let seq = inputs.len() / batch;
    let reorder = |ids: &[u32]| -> Vec<u32> {
        let mut out = Vec::with_capacity(ids.len());
        for t in 0..seq {
            for b in 0..batch {
                out.push(ids[b * seq + t]);
            }
        }
        out
    };
    let tm_inputs = reorder(inputs);
    let tm_targets = targets.map(reorder);

    let pv: Vec<Var> = model
        .params()
        .iter()
        .map(|p| tape.leaf(p.value().clone(), training))
        .collect();

    let mut x = tape.embedding(model.var(&pv, "embed.table"), &tm_inputs)?;
    let mut new_layers = Vec::with_capacity(cfg.depth);
    let mut new_cell = Vec::with_capacity(cfg.depth);
    for l in 0..cfg.depth {
        let mut h = tape.constant(memory.layers[l].clone());
        let mut c = match cfg.arch {
            Arch::Lstm => Some(tape.constant(memory.cell[l].clone())),
            _ => None,
        };
        let mut outs = Vec::with_capacity(seq);
        for t in 0..seq {
            let xt = tape.narrow_rows(x, t * batch, batch)?;
            match cfg.arch {
                Arch::Lstm => {
                    let (h2, c2) = lstm_cell(model, tape, xt, h, c.unwrap(), l, &pv)?;
                    h = h2;
                    c = Some(c2);
                }
                Arch::Gru => h = gru_cell(model, tape, xt, h, l, &pv)?,
                Arch::Txl => unreachable!("rnn::step is only dispatched for rnn archs"),
            }
            outs.push(h);
        }
        // new state is the raw final hidden (pre-dropout), detached
        new_layers.push(tape.value(h).clone());
        if let Some(c) = c {
            new_cell.push(tape.value(c).clone());
        }
        x = tape.concat_rows(&outs)?;
        x = tape.dropout(x, cfg.dropout, training, rng)?;
    }

    let proj = tape.matmul(x, model.var(&pv, "out.weight"))?;
    let logits = tape.add_bias(proj, model.var(&pv, "out.bias"))?;
    let loss = match &tm_targets {
        Some(t) => Some(tape.softmax_cross_entropy(logits, t)?),
        None => None,
    };
    Ok(StepOut {
        logits,
        loss,
        memory: MemoryState {
            layers: new_layers,
            cell: new_cell,
        },
        param_vars: pv,
        layer_inputs: Vec::new(),
        time_major: true,
    })
}

/// Standard LSTM update: `i,f,o = σ(affine)`, `g = tanh(affine)`,
/// `c' = f⊙c + i⊙g`, `h' = o⊙tanh(c')`. Gate blocks are packed in the
/// weight columns in i, f, g, o order.
fn lstm_cell<T: Scalar>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    x_t: Var,
    h: Var,
    c: Var,
    l: usize,
    pv: &[Var],
) -> Result<(Var, Var)> {
    let hid = model.config().hidden;
    let p = |name: &str| model.var(pv, &format!("layer{l}.{name}"));
    let xw = tape.matmul(x_t, p("wx"))?;
    let hw = tape.matmul(h, p("wh"))?;
    let pre = tape.add(xw, hw)?;
    let pre = tape.add_bias(pre, p("b"))?;

    let i_pre = tape.narrow_cols(pre, 0, hid)?;
    let f_pre = tape.narrow_cols(pre, hid, hid)?;
    let g_pre = tape.narrow_cols(pre, 2 * hid, hid)?;
    let o_pre = tape.narrow_cols(pre, 3 * hid, hid)?;
    let i = tape.sigmoid(i_pre);
    let f = tape.sigmoid(f_pre);
    let g = tape.tanh(g_pre);
    let o = tape.sigmoid(o_pre);

    let fc = tape.mul(f, c)?;
    let ig = tape.mul(i, g)?;
    let c2 = tape.add(fc, ig)?;
    let tc = tape.tanh(c2);
    let h2 = tape.mul(o, tc)?;
    Ok((h2, c2))
}

/// Standard GRU update: `z,r = σ(affine)`, `h̃ = tanh(affine with r⊙h)`,
/// `h' = (1−z)⊙h + z⊙h̃`. Gate blocks are packed z then r.
fn gru_cell<T: Scalar>(
    model: &Model<T>,
    tape: &mut Tape<T>,
    x_t: Var,
    h: Var,
    l: usize,
    pv: &[Var],
) -> Result<Var> {
    let hid = model.config().hidden;
    let p = |name: &str| model.var(pv, &format!("layer{l}.{name}"));
    let xg = tape.matmul(x_t, p("wxg"))?;
    let hg = tape.matmul(h, p("whg"))?;
    let gates = tape.add(xg, hg)?;
    let gates = tape.add_bias(gates, p("bg"))?;
    let z_pre = tape.narrow_cols(gates, 0, hid)?;
    let r_pre = tape.narrow_cols(gates, hid, hid)?;
    let z = tape.sigmoid(z_pre);
    let r = tape.sigmoid(r_pre);

    let rh = tape.mul(r, h)?;
    let xc = tape.matmul(x_t, p("wxc"))?;
    let hc = tape.matmul(rh, p("whc"))?;
    let cand_pre = tape.add(xc, hc)?;
    let cand_pre = tape.add_bias(cand_pre, p("bc"))?;
    let cand = tape.tanh(cand_pre);

    let keep = tape.affine(z, T::of(-1.0), T::one()); // 1 - z
    let kh = tape.mul(keep, h)?;
    let zc = tape.mul(z, cand)?;
    tape.add(kh, zc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelConfig;
    use crate::tensor::Tensor;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tiny(arch: Arch) -> ModelConfig {
        let base = ModelConfig {
            depth: 2,
            hidden: 6,
            seq_len: 4,
            dropout: 0.0,
            ..ModelConfig::lstm(9)
        };
        ModelConfig { arch, ..base }
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(77)
    }

    fn zeroed(mut model: Model<f64>) -> Model<f64> {
        for p in model.params_mut() {
            for v in p.value_mut().data_mut() {
                *v = 0.0;
            }
        }
        model
    }

    fn mount(model: &Model<f64>, tape: &mut Tape<f64>) -> Vec<Var> {
        model
            .params()
            .iter()
            .map(|p| tape.leaf(p.value().clone(), false))
            .collect()
    }

    #[test]
    fn lstm_cell_zero_weights_hand_values() {
        let model = zeroed(Model::<f64>::new(tiny(Arch::Lstm), 0).unwrap());
        let mut tape = Tape::new();
        let pv = mount(&model, &mut tape);
        let x = tape.leaf(Tensor::zeros(&[1, 6]), false);
        let h = tape.leaf(Tensor::zeros(&[1, 6]), false);

        // c = 0: every gate is sigmoid(0) = 0.5, candidate tanh(0) = 0,
        // so c' = 0 and h' = 0.5 * tanh(0) = 0
        let c0 = tape.leaf(Tensor::zeros(&[1, 6]), false);
        let (h2, c2) = lstm_cell(&model, &mut tape, x, h, c0, 0, &pv).unwrap();
        assert!(tape.value(h2).data().iter().all(|&v| v == 0.0));
        assert!(tape.value(c2).data().iter().all(|&v| v == 0.0));

        // c = 1: c' = 0.5*1 + 0.5*0 = 0.5, h' = 0.5 * tanh(0.5)
        let c1 = tape.leaf(Tensor::full(&[1, 6], 1.0), false);
        let (h2, c2) = lstm_cell(&model, &mut tape, x, h, c1, 0, &pv).unwrap();
        for &v in tape.value(c2).data() {
            assert!((v - 0.5).abs() < 1e-12);
        }
        for &v in tape.value(h2).data() {
            assert!((v - 0.231059).abs() < 1e-6);
        }
    }

    #[test]
    fn lstm_gates_stay_in_unit_interval() {
        let model = Model::<f64>::new(tiny(Arch::Lstm), 2).unwrap();
        let mut tape = Tape::new();
        let pv = mount(&model, &mut tape);
        let mut r = rng();
        let x = tape.leaf(Tensor::randn(&[3, 6], 2.0, &mut r), false);
        let h = tape.leaf(Tensor::randn(&[3, 6], 2.0, &mut r), false);
        let c = tape.leaf(Tensor::randn(&[3, 6], 2.0, &mut r), false);
        let (h2, c2) = lstm_cell(&model, &mut tape, x, h, c, 0, &pv).unwrap();
        // |h'| is bounded by |o ⊙ tanh(c')| < 1
        assert!(tape.value(h2).data().iter().all(|&v| v.abs() < 1.0));
        assert!(tape.value(c2).is_finite());
    }

    #[test]
    fn gru_cell_zero_weights_hand_values() {
        let model = zeroed(Model::<f64>::new(tiny(Arch::Gru), 0).unwrap());
        let mut tape = Tape::new();
        let pv = mount(&model, &mut tape);
        let x = tape.leaf(Tensor::zeros(&[1, 6]), false);
        // h = 1: z = 0.5, candidate = tanh(0) = 0, h' = 0.5*1 + 0.5*0 = 0.5
        let h = tape.leaf(Tensor::full(&[1, 6], 1.0), false);
        let h2 = gru_cell(&model, &mut tape, x, h, 0, &pv).unwrap();
        for &v in tape.value(h2).data() {
            assert!((v - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn gru_update_gate_zero_keeps_state() {
        // force z = 0 via a very negative gate bias: h' = h exactly up to
        // sigmoid saturation
        let mut model = zeroed(Model::<f64>::new(tiny(Arch::Gru), 0).unwrap());
        for v in model
            .param_mut("layer0.bg")
            .unwrap()
            .value_mut()
            .data_mut()[0..6]
            .iter_mut()
        {
            *v = -1e9;
        }
        let mut tape = Tape::new();
        let pv = mount(&model, &mut tape);
        let mut r = rng();
        let x = tape.leaf(Tensor::randn(&[2, 6], 1.0, &mut r), false);
        let ht = Tensor::randn(&[2, 6], 1.0, &mut r);
        let h = tape.leaf(ht.clone(), false);
        let h2 = gru_cell(&model, &mut tape, x, h, 0, &pv).unwrap();
        for (a, b) in tape.value(h2).data().iter().zip(ht.data()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn gru_output_is_finite_for_random_inputs() {
        let model = Model::<f64>::new(tiny(Arch::Gru), 3).unwrap();
        let mut tape = Tape::new();
        let pv = mount(&model, &mut tape);
        let mut r = rng();
        let x = tape.leaf(Tensor::randn(&[4, 6], 3.0, &mut r), false);
        let h = tape.leaf(Tensor::randn(&[4, 6], 3.0, &mut r), false);
        let h2 = gru_cell(&model, &mut tape, x, h, 0, &pv).unwrap();
        assert!(tape.value(h2).is_finite());
    }

    #[test]
    fn logits_shape_and_zero_state_on_first_segment() {
        for arch in [Arch::Lstm, Arch::Gru] {
            let model = Model::<f64>::new(tiny(arch), 4).unwrap();
            let mem = MemoryState::initial(model.config(), 2);
            assert!(mem.layers.iter().all(|t| t.data().iter().all(|&v| v == 0.0)));
            let ids: Vec<u32> = (0..8).map(|i| i % 9).collect();
            let mut tape = Tape::new();
            let out = model
                .step(&mut tape, &ids, None, 2, &mem, false, &mut rng())
                .unwrap();
            assert_eq!(tape.value(out.logits).shape(), &[8, 9]);
            assert!(out.time_major);
            assert_eq!(out.memory.layers.len(), 2);
            assert_eq!(out.memory.layers[0].shape(), &[2, 6]);
        }
    }

    #[test]
    fn carried_state_changes_second_segment_logits() {
        for arch in [Arch::Lstm, Arch::Gru] {
            let model = Model::<f64>::new(tiny(arch), 5).unwrap();
            let mem0 = MemoryState::initial(model.config(), 1);
            let ids: Vec<u32> = vec![1, 2, 3, 4];
            let mut t1 = Tape::new();
            let s1 = model
                .step(&mut t1, &ids, None, 1, &mem0, false, &mut rng())
                .unwrap();
            assert_ne!(s1.memory.layers[0].data(), mem0.layers[0].data());

            let mut t2 = Tape::new();
            let with_state = model
                .step(&mut t2, &ids, None, 1, &s1.memory, false, &mut rng())
                .unwrap();
            let mut t3 = Tape::new();
            let fresh = model
                .step(&mut t3, &ids, None, 1, &mem0, false, &mut rng())
                .unwrap();
            assert_ne!(
                t2.value(with_state.logits).data(),
                t3.value(fresh.logits).data(),
                "{} ignored carried state",
                arch.name()
            );
        }
    }

    #[test]
    fn time_major_rows_interleave_batch() {
        let model = Model::<f64>::new(tiny(Arch::Gru), 6).unwrap();
        let mem = MemoryState::initial(model.config(), 2);
        // row 0 = [1,2,3,4], row 1 = [5,6,7,8]
        let ids: Vec<u32> = vec![1, 2, 3, 4, 5, 6, 7, 8];
        let mut tape = Tape::new();
        let out = model
            .step(&mut tape, &ids, None, 2, &mem, false, &mut rng())
            .unwrap();
        // batch row 1, t 0 lives at logits row 1 in time-major order
        assert_eq!(out.logits_row(1, 0, 2, 4), 1);
        assert_eq!(out.logits_row(0, 3, 2, 4), 6);
    }
}

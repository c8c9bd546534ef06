//! Reverse-mode automatic differentiation over a dynamically recorded graph.
//!
//! A [`Tape`] is an append-only arena of [`Node`]s; every operation pushes
//! its output as a new node, so insertion order is already a topological
//! order and [`Tape::backward`] is a single reverse sweep. Gradients are
//! only propagated into subgraphs that can reach a `requires_grad` leaf,
//! and [`Tape::stop_gradient`] cuts that reachability — its output is a
//! plain copy that never passes gradient to its source.
//!
//! The tape is rebuilt every iteration and dropped after the backward pass;
//! non-leaf gradients are freed progressively as the sweep retires them.

use super::kernels;
use super::{Scalar, Tensor};
use crate::{Error, Result};
use rand::Rng;
use rayon::prelude::*;

/// Handle to a node on a [`Tape`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Var(usize);

/// Relative-position inputs for [`Tape::attention_scores`]: projected
/// relative embeddings (one row per backward offset) plus the global
/// content and position query biases.
#[derive(Copy, Clone)]
pub struct RelPos {
    pub pos: Var,
    pub content_bias: Var,
    pub pos_bias: Var,
}

struct AttnDims {
    batch: usize,
    heads: usize,
    seq: usize,
    klen: usize,
    head_dim: usize,
}

enum Op<T> {
    Leaf,
    StopGrad,
    Add {
        a: Var,
        b: Var,
    },
    Sub {
        a: Var,
        b: Var,
    },
    Mul {
        a: Var,
        b: Var,
    },
    /// Elementwise `mul * x + add`.
    Affine {
        x: Var,
        mul: T,
    },
    AddBias {
        x: Var,
        bias: Var,
    },
    Matmul {
        a: Var,
        b: Var,
    },
    Gelu {
        x: Var,
    },
    Sigmoid {
        x: Var,
    },
    Tanh {
        x: Var,
    },
    Softmax {
        x: Var,
    },
    LayerNorm {
        x: Var,
        gain: Var,
        bias: Var,
        /// Per-row (mean, 1/std) saved by the forward pass.
        stats: Vec<(T, T)>,
    },
    Dropout {
        x: Var,
        mask: Vec<T>,
    },
    Embedding {
        table: Var,
        ids: Vec<u32>,
    },
    /// Per-batch concatenation along the time axis: rows of `a` for batch
    /// element i precede rows of `b` for batch element i.
    ConcatTime {
        a: Var,
        b: Var,
        batch: usize,
    },
    ConcatRows {
        parts: Vec<Var>,
    },
    NarrowRows {
        x: Var,
        start: usize,
    },
    NarrowCols {
        x: Var,
        start: usize,
        full_cols: usize,
    },
    MeanAll {
        x: Var,
    },
    SoftmaxXent {
        logits: Var,
        targets: Vec<u32>,
        /// Softmax probabilities saved for the backward pass.
        probs: Vec<T>,
    },
    AttnScores {
        q: Var,
        k: Var,
        rel: Option<RelPos>,
        dims: AttnDims,
        scale: T,
    },
    AttnContext {
        probs: Var,
        v: Var,
        dims: AttnDims,
    },
}

struct Node<T> {
    value: Tensor<T>,
    requires_grad: bool,
    op: Op<T>,
}

/// Recorded computation graph; see the module docs.
pub struct Tape<T> {
    nodes: Vec<Node<T>>,
    grads: Vec<Option<Vec<T>>>,
}

impl<T: Scalar> Default for Tape<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Tape<T> {
    pub fn new() -> Self {
        Self {
            nodes: Vec::new(),
            grads: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn value(&self, v: Var) -> &Tensor<T> {
        &self.nodes[v.0].value
    }

    /// Gradient of the last `backward` target w.r.t. `v`, if it received one.
    pub fn grad(&self, v: Var) -> Option<&[T]> {
        self.grads.get(v.0).and_then(|g| g.as_deref())
    }

    fn push(&mut self, value: Tensor<T>, requires_grad: bool, op: Op<T>) -> Var {
        self.nodes.push(Node {
            value,
            requires_grad,
            op,
        });
        Var(self.nodes.len() - 1)
    }

    fn rg(&self, v: Var) -> bool {
        self.nodes[v.0].requires_grad
    }

    fn val(&self, v: Var) -> &[T] {
        self.nodes[v.0].value.data()
    }

    fn dims2(&self, v: Var) -> Result<(usize, usize)> {
        self.nodes[v.0].value.dims2()
    }

    // ---- graph construction ------------------------------------------------

    /// A node gradients never flow out of.
    pub fn constant(&mut self, t: Tensor<T>) -> Var {
        self.push(t, false, Op::Leaf)
    }

    pub fn leaf(&mut self, t: Tensor<T>, requires_grad: bool) -> Var {
        self.push(t, requires_grad, Op::Leaf)
    }

    /// Forward identity; blocks all gradient flow into `x`.
    pub fn stop_gradient(&mut self, x: Var) -> Var {
        let value = self.nodes[x.0].value.clone();
        self.push(value, false, Op::StopGrad)
    }

    fn zip_shape_check(&self, op: &'static str, a: Var, b: Var) -> Result<()> {
        if self.nodes[a.0].value.shape() != self.nodes[b.0].value.shape() {
            return Err(Error::ShapeMismatch {
                op,
                lhs: self.nodes[a.0].value.shape().to_vec(),
                rhs: self.nodes[b.0].value.shape().to_vec(),
            });
        }
        Ok(())
    }

    pub fn add(&mut self, a: Var, b: Var) -> Result<Var> {
        self.zip_shape_check("add", a, b)?;
        let data = self
            .val(a)
            .iter()
            .zip(self.val(b))
            .map(|(&x, &y)| x + y)
            .collect();
        let t = Tensor::new(self.nodes[a.0].value.shape().to_vec(), data)?;
        Ok(self.push(t, self.rg(a) || self.rg(b), Op::Add { a, b }))
    }

    pub fn sub(&mut self, a: Var, b: Var) -> Result<Var> {
        self.zip_shape_check("sub", a, b)?;
        let data = self
            .val(a)
            .iter()
            .zip(self.val(b))
            .map(|(&x, &y)| x - y)
            .collect();
        let t = Tensor::new(self.nodes[a.0].value.shape().to_vec(), data)?;
        Ok(self.push(t, self.rg(a) || self.rg(b), Op::Sub { a, b }))
    }

    pub fn mul(&mut self, a: Var, b: Var) -> Result<Var> {
        self.zip_shape_check("mul", a, b)?;
        let data = self
            .val(a)
            .iter()
            .zip(self.val(b))
            .map(|(&x, &y)| x * y)
            .collect();
        let t = Tensor::new(self.nodes[a.0].value.shape().to_vec(), data)?;
        Ok(self.push(t, self.rg(a) || self.rg(b), Op::Mul { a, b }))
    }

    /// Elementwise `mul * x + add`.
    pub fn affine(&mut self, x: Var, mul: T, add: T) -> Var {
        let data = self.val(x).iter().map(|&v| mul * v + add).collect();
        let t = Tensor {
            shape: self.nodes[x.0].value.shape().to_vec(),
            data,
        };
        self.push(t, self.rg(x), Op::Affine { x, mul })
    }

    /// Broadcast a vector over every row of a matrix.
    pub fn add_bias(&mut self, x: Var, bias: Var) -> Result<Var> {
        let (_, cols) = self.dims2(x)?;
        let blen = self.nodes[bias.0].value.numel();
        if blen != cols {
            return Err(Error::ShapeMismatch {
                op: "add_bias",
                lhs: self.nodes[x.0].value.shape().to_vec(),
                rhs: self.nodes[bias.0].value.shape().to_vec(),
            });
        }
        let bv = self.val(bias).to_vec();
        let data = self
            .val(x)
            .chunks_exact(cols)
            .flat_map(|row| row.iter().zip(&bv).map(|(&v, &b)| v + b))
            .collect();
        let t = Tensor::new(self.nodes[x.0].value.shape().to_vec(), data)?;
        Ok(self.push(t, self.rg(x) || self.rg(bias), Op::AddBias { x, bias }))
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var> {
        let (m, ka) = self.dims2(a)?;
        let (kb, n) = self.dims2(b)?;
        if ka != kb {
            return Err(Error::ShapeMismatch {
                op: "matmul",
                lhs: self.nodes[a.0].value.shape().to_vec(),
                rhs: self.nodes[b.0].value.shape().to_vec(),
            });
        }
        let mut out = vec![T::zero(); m * n];
        kernels::matmul(self.val(a), self.val(b), m, ka, n, &mut out);
        let t = Tensor::new(vec![m, n], out)?;
        Ok(self.push(t, self.rg(a) || self.rg(b), Op::Matmul { a, b }))
    }

    /// Exact-erf GELU: `x * Phi(x)` with `Phi` the standard normal CDF.
    pub fn gelu(&mut self, x: Var) -> Var {
        let half = T::of(0.5);
        let inv_sqrt2 = T::of(std::f64::consts::FRAC_1_SQRT_2);
        let data = self
            .val(x)
            .iter()
            .map(|&v| v * half * (T::one() + (v * inv_sqrt2).verf()))
            .collect();
        let t = Tensor {
            shape: self.nodes[x.0].value.shape().to_vec(),
            data,
        };
        self.push(t, self.rg(x), Op::Gelu { x })
    }

    pub fn sigmoid(&mut self, x: Var) -> Var {
        let data = self.val(x).iter().map(|&v| v.vsigmoid()).collect();
        let t = Tensor {
            shape: self.nodes[x.0].value.shape().to_vec(),
            data,
        };
        self.push(t, self.rg(x), Op::Sigmoid { x })
    }

    pub fn tanh(&mut self, x: Var) -> Var {
        let data = self.val(x).iter().map(|&v| v.vtanh()).collect();
        let t = Tensor {
            shape: self.nodes[x.0].value.shape().to_vec(),
            data,
        };
        self.push(t, self.rg(x), Op::Tanh { x })
    }

    /// Stabilized softmax along the last axis. `-inf` entries are treated as
    /// masked and come out exactly zero; a fully masked slice is an error.
    pub fn softmax_rows(&mut self, x: Var) -> Result<Var> {
        let (_, cols) = self.dims2(x)?;
        let mut data = self.val(x).to_vec();
        if let Some(row) = kernels::softmax_rows_in_place(&mut data, cols) {
            return Err(Error::Numeric(format!(
                "softmax: slice {row} is fully masked"
            )));
        }
        let t = Tensor::new(self.nodes[x.0].value.shape().to_vec(), data)?;
        Ok(self.push(t, self.rg(x), Op::Softmax { x }))
    }

    /// Per last-axis slice: `(x - mean) / sqrt(var + eps) * gain + bias`.
    pub fn layer_norm(&mut self, x: Var, gain: Var, bias: Var, eps: T) -> Result<Var> {
        let (rows, cols) = self.dims2(x)?;
        if self.nodes[gain.0].value.numel() != cols || self.nodes[bias.0].value.numel() != cols {
            return Err(Error::ShapeMismatch {
                op: "layer_norm",
                lhs: self.nodes[x.0].value.shape().to_vec(),
                rhs: self.nodes[gain.0].value.shape().to_vec(),
            });
        }
        let mut stats = Vec::with_capacity(rows);
        let mut data = vec![T::zero(); rows * cols];
        {
            let xs = self.val(x);
            let g = self.val(gain);
            let b = self.val(bias);
            for (row_in, row_out) in xs.chunks_exact(cols).zip(data.chunks_exact_mut(cols)) {
                let (mean, rstd) = kernels::row_norm_stats(row_in, eps);
                stats.push((mean, rstd));
                for ((o, &v), (&gv, &bv)) in
                    row_out.iter_mut().zip(row_in).zip(g.iter().zip(b.iter()))
                {
                    *o = (v - mean) * rstd * gv + bv;
                }
            }
        }
        let t = Tensor::new(vec![rows, cols], data)?;
        let rg = self.rg(x) || self.rg(gain) || self.rg(bias);
        Ok(self.push(
            t,
            rg,
            Op::LayerNorm {
                x,
                gain,
                bias,
                stats,
            },
        ))
    }

    /// Inverted dropout: zero with probability `rate`, scale survivors by
    /// `1/(1-rate)`. Identity when not training or when `rate` is zero.
    pub fn dropout<R: Rng>(
        &mut self,
        x: Var,
        rate: f64,
        training: bool,
        rng: &mut R,
    ) -> Result<Var> {
        if !(0.0..1.0).contains(&rate) {
            return Err(Error::Config(format!(
                "dropout rate must be in [0, 1), got {rate}"
            )));
        }
        if !training || rate == 0.0 {
            return Ok(x);
        }
        let scale = T::of(1.0 / (1.0 - rate));
        let mask: Vec<T> = (0..self.nodes[x.0].value.numel())
            .map(|_| {
                if rng.gen::<f64>() < rate {
                    T::zero()
                } else {
                    scale
                }
            })
            .collect();
        let data = self
            .val(x)
            .iter()
            .zip(&mask)
            .map(|(&v, &m)| v * m)
            .collect();
        let t = Tensor {
            shape: self.nodes[x.0].value.shape().to_vec(),
            data,
        };
        Ok(self.push(t, self.rg(x), Op::Dropout { x, mask }))
    }

    /// Row gather: output row i is `table[ids[i]]`.
    pub fn embedding(&mut self, table: Var, ids: &[u32]) -> Result<Var> {
        let (vocab, width) = self.dims2(table)?;
        let tv = self.val(table);
        let mut data = Vec::with_capacity(ids.len() * width);
        for &id in ids {
            let id = id as usize;
            if id >= vocab {
                return Err(Error::Data(format!(
                    "token id {id} out of range for vocabulary of {vocab}"
                )));
            }
            data.extend_from_slice(&tv[id * width..(id + 1) * width]);
        }
        let t = Tensor::new(vec![ids.len(), width], data)?;
        Ok(self.push(
            t,
            self.rg(table),
            Op::Embedding {
                table,
                ids: ids.to_vec(),
            },
        ))
    }

    /// Concatenate along time per batch element: for each batch element,
    /// the rows of `a` (its memory) precede the rows of `b` (its segment).
    pub fn concat_time(&mut self, a: Var, b: Var, batch: usize) -> Result<Var> {
        let (ra, ca) = self.dims2(a)?;
        let (rb, cb) = self.dims2(b)?;
        if ca != cb || ra % batch != 0 || rb % batch != 0 {
            return Err(Error::ShapeMismatch {
                op: "concat_time",
                lhs: self.nodes[a.0].value.shape().to_vec(),
                rhs: self.nodes[b.0].value.shape().to_vec(),
            });
        }
        let (ta, tb) = (ra / batch, rb / batch);
        let cols = ca;
        let mut data = Vec::with_capacity((ra + rb) * cols);
        let (av, bv) = (self.val(a), self.val(b));
        for i in 0..batch {
            data.extend_from_slice(&av[i * ta * cols..(i + 1) * ta * cols]);
            data.extend_from_slice(&bv[i * tb * cols..(i + 1) * tb * cols]);
        }
        let t = Tensor::new(vec![ra + rb, cols], data)?;
        Ok(self.push(t, self.rg(a) || self.rg(b), Op::ConcatTime { a, b, batch }))
    }

    /// Plain vertical concatenation.
    pub fn concat_rows(&mut self, parts: &[Var]) -> Result<Var> {
        let (_, cols) = self.dims2(parts[0])?;
        let mut rows = 0;
        let mut data = Vec::new();
        for &p in parts {
            let (r, c) = self.dims2(p)?;
            if c != cols {
                return Err(Error::ShapeMismatch {
                    op: "concat_rows",
                    lhs: vec![rows, cols],
                    rhs: self.nodes[p.0].value.shape().to_vec(),
                });
            }
            rows += r;
            data.extend_from_slice(self.val(p));
        }
        let t = Tensor::new(vec![rows, cols], data)?;
        let rg = parts.iter().any(|&p| self.rg(p));
        Ok(self.push(
            t,
            rg,
            Op::ConcatRows {
                parts: parts.to_vec(),
            },
        ))
    }

    pub fn narrow_rows(&mut self, x: Var, start: usize, len: usize) -> Result<Var> {
        let (rows, cols) = self.dims2(x)?;
        if start + len > rows {
            return Err(Error::ShapeMismatch {
                op: "narrow_rows",
                lhs: vec![rows, cols],
                rhs: vec![start, len],
            });
        }
        let data = self.val(x)[start * cols..(start + len) * cols].to_vec();
        let t = Tensor::new(vec![len, cols], data)?;
        Ok(self.push(t, self.rg(x), Op::NarrowRows { x, start }))
    }

    pub fn narrow_cols(&mut self, x: Var, start: usize, len: usize) -> Result<Var> {
        let (rows, cols) = self.dims2(x)?;
        if start + len > cols {
            return Err(Error::ShapeMismatch {
                op: "narrow_cols",
                lhs: vec![rows, cols],
                rhs: vec![start, len],
            });
        }
        let mut data = Vec::with_capacity(rows * len);
        for row in self.val(x).chunks_exact(cols) {
            data.extend_from_slice(&row[start..start + len]);
        }
        let t = Tensor::new(vec![rows, len], data)?;
        Ok(self.push(
            t,
            self.rg(x),
            Op::NarrowCols {
                x,
                start,
                full_cols: cols,
            },
        ))
    }

    /// Mean over all elements, as a scalar node.
    pub fn mean_all(&mut self, x: Var) -> Var {
        let n = self.nodes[x.0].value.numel();
        let mut acc = 0.0_f64;
        for &v in self.val(x) {
            acc += v.as_f64();
        }
        let t = Tensor::scalar(T::of(acc / n as f64));
        self.push(t, self.rg(x), Op::MeanAll { x })
    }

    /// Mean cross-entropy between softmax(logits) rows and integer targets,
    /// fused in log-space for stability. Returns a scalar node.
    pub fn softmax_cross_entropy(&mut self, logits: Var, targets: &[u32]) -> Result<Var> {
        let (rows, cols) = self.dims2(logits)?;
        if targets.len() != rows {
            return Err(Error::ShapeMismatch {
                op: "softmax_cross_entropy",
                lhs: vec![rows, cols],
                rhs: vec![targets.len()],
            });
        }
        let mut probs = vec![T::zero(); rows * cols];
        let mut acc = 0.0_f64;
        for ((row, &target), prow) in self
            .val(logits)
            .chunks_exact(cols)
            .zip(targets)
            .zip(probs.chunks_exact_mut(cols))
        {
            let t = target as usize;
            if t >= cols {
                return Err(Error::Data(format!(
                    "target id {t} out of range for {cols} classes"
                )));
            }
            let max = row.iter().cloned().fold(T::neg_infinity(), T::max);
            let mut sum = T::zero();
            for (p, &v) in prow.iter_mut().zip(row) {
                *p = (v - max).vexp();
                sum += *p;
            }
            let inv = T::one() / sum;
            for p in prow.iter_mut() {
                *p *= inv;
            }
            // loss = logsumexp(row) - row[t]
            acc += (max + sum.ln() - row[t]).as_f64();
        }
        let t = Tensor::scalar(T::of(acc / rows as f64));
        Ok(self.push(
            t,
            self.rg(logits),
            Op::SoftmaxXent {
                logits,
                targets: targets.to_vec(),
                probs,
            },
        ))
    }

    /// Scaled attention scores with the causal-plus-memory mask applied:
    /// query i may attend to every memory position and to segment positions
    /// up to and including itself; later positions get `-inf`.
    ///
    /// `q` is `[batch*seq, hidden]`, `k` is `[batch*klen, hidden]` where
    /// `klen = mem + seq`. With `rel` set, scores follow the
    /// relative-position form: `(q + content_bias)·k + (q + pos_bias)·p_d`
    /// with `d` the backward offset between query and key.
    /// Output is `[batch*heads*seq, klen]`.
    pub fn attention_scores(
        &mut self,
        q: Var,
        k: Var,
        rel: Option<RelPos>,
        batch: usize,
        heads: usize,
    ) -> Result<Var> {
        let (qr, hidden) = self.dims2(q)?;
        let (kr, kh) = self.dims2(k)?;
        if kh != hidden || qr % batch != 0 || kr % batch != 0 || hidden % heads != 0 {
            return Err(Error::ShapeMismatch {
                op: "attention_scores",
                lhs: vec![qr, hidden],
                rhs: vec![kr, kh],
            });
        }
        let seq = qr / batch;
        let klen = kr / batch;
        if klen < seq {
            return Err(Error::ShapeMismatch {
                op: "attention_scores",
                lhs: vec![seq],
                rhs: vec![klen],
            });
        }
        if let Some(r) = &rel {
            let (pr, pc) = self.dims2(r.pos)?;
            if pr < klen
                || pc != hidden
                || self.nodes[r.content_bias.0].value.numel() != hidden
                || self.nodes[r.pos_bias.0].value.numel() != hidden
            {
                return Err(Error::ShapeMismatch {
                    op: "attention_scores.rel",
                    lhs: vec![pr, pc],
                    rhs: vec![klen, hidden],
                });
            }
        }
        let dims = AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: hidden / heads,
        };
        let scale = T::of(1.0 / (dims.head_dim as f64).sqrt());
        let value = self.attn_scores_forward(q, k, &rel, &dims, scale);
        let mut rg = self.rg(q) || self.rg(k);
        if let Some(r) = &rel {
            rg |= self.rg(r.pos) || self.rg(r.content_bias) || self.rg(r.pos_bias);
        }
        Ok(self.push(
            value,
            rg,
            Op::AttnScores {
                q,
                k,
                rel,
                dims,
                scale,
            },
        ))
    }

    fn attn_scores_forward(
        &self,
        q: Var,
        k: Var,
        rel: &Option<RelPos>,
        dims: &AttnDims,
        scale: T,
    ) -> Tensor<T> {
        let &AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: dk,
        } = dims;
        let hidden = heads * dk;
        let mem = klen - seq;
        let qv = self.val(q);
        let kv = self.val(k);
        let rel_data = rel.as_ref().map(|r| {
            (
                self.val(r.pos),
                self.val(r.content_bias),
                self.val(r.pos_bias),
            )
        });
        let mut out = vec![T::zero(); batch * heads * seq * klen];

        let block = |bh: usize, out_block: &mut [T]| {
            let (b, h) = (bh / heads, bh % heads);
            let hoff = h * dk;
            // Head-sliced copies keep the inner loops contiguous.
            let mut q_eff = vec![T::zero(); seq * dk]; // q + content_bias
            let mut q_pos = vec![T::zero(); seq * dk]; // q + pos_bias
            for i in 0..seq {
                let src = &qv[(b * seq + i) * hidden + hoff..][..dk];
                q_eff[i * dk..(i + 1) * dk].copy_from_slice(src);
                q_pos[i * dk..(i + 1) * dk].copy_from_slice(src);
            }
            if let Some((_, u, v)) = &rel_data {
                for i in 0..seq {
                    for d in 0..dk {
                        q_eff[i * dk + d] += u[hoff + d];
                        q_pos[i * dk + d] += v[hoff + d];
                    }
                }
            }
            let mut kt = vec![T::zero(); dk * klen]; // k block transposed
            for j in 0..klen {
                for d in 0..dk {
                    kt[d * klen + j] = kv[(b * klen + j) * hidden + hoff + d];
                }
            }
            // content term: (q + u) · k^T
            kernels::matmul(&q_eff, &kt, seq, dk, klen, out_block);
            if let Some((p, _, _)) = &rel_data {
                // position term over backward offsets, then the relative
                // shift maps offset d to key column mem + i - d.
                let mut pt = vec![T::zero(); dk * klen];
                for d_off in 0..klen {
                    for d in 0..dk {
                        pt[d * klen + d_off] = p[d_off * hidden + hoff + d];
                    }
                }
                let mut pos_term = vec![T::zero(); seq * klen];
                kernels::matmul(&q_pos, &pt, seq, dk, klen, &mut pos_term);
                for i in 0..seq {
                    for j in 0..=(mem + i) {
                        out_block[i * klen + j] += pos_term[i * klen + (mem + i - j)];
                    }
                }
            }
            for i in 0..seq {
                let row = &mut out_block[i * klen..(i + 1) * klen];
                for (j, v) in row.iter_mut().enumerate() {
                    if j <= mem + i {
                        *v *= scale;
                    } else {
                        *v = T::neg_infinity();
                    }
                }
            }
        };

        if batch * heads > 1 && seq * klen * dk >= (1 << 18) && rayon::current_num_threads() > 1 {
            out.par_chunks_exact_mut(seq * klen)
                .enumerate()
                .for_each(|(bh, chunk)| block(bh, chunk));
        } else {
            for (bh, chunk) in out.chunks_exact_mut(seq * klen).enumerate() {
                block(bh, chunk);
            }
        }
        Tensor {
            shape: vec![batch * heads * seq, klen],
            data: out,
        }
    }

    /// Weighted sum of values by attention probabilities; heads are
    /// re-concatenated so the output is `[batch*seq, hidden]`.
    pub fn attention_context(
        &mut self,
        probs: Var,
        v: Var,
        batch: usize,
        heads: usize,
    ) -> Result<Var> {
        let (pr, klen) = self.dims2(probs)?;
        let (vr, hidden) = self.dims2(v)?;
        if pr % (batch * heads) != 0 || vr != batch * klen || hidden % heads != 0 {
            return Err(Error::ShapeMismatch {
                op: "attention_context",
                lhs: vec![pr, klen],
                rhs: vec![vr, hidden],
            });
        }
        let seq = pr / (batch * heads);
        let dims = AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: hidden / heads,
        };
        let value = self.attn_context_forward(probs, v, &dims);
        let rg = self.rg(probs) || self.rg(v);
        Ok(self.push(value, rg, Op::AttnContext { probs, v, dims }))
    }

    fn attn_context_forward(&self, probs: Var, v: Var, dims: &AttnDims) -> Tensor<T> {
        let &AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: dk,
        } = dims;
        let hidden = heads * dk;
        let pv = self.val(probs);
        let vv = self.val(v);
        let mut out = vec![T::zero(); batch * seq * hidden];

        let run_batch = |b: usize, out_b: &mut [T]| {
            for h in 0..heads {
                let hoff = h * dk;
                for i in 0..seq {
                    let prow = &pv[((b * heads + h) * seq + i) * klen..][..klen];
                    let orow = &mut out_b[i * hidden + hoff..][..dk];
                    for (j, &p) in prow.iter().enumerate() {
                        if p != T::zero() {
                            let vrow = &vv[(b * klen + j) * hidden + hoff..][..dk];
                            for (o, &vx) in orow.iter_mut().zip(vrow) {
                                *o += p * vx;
                            }
                        }
                    }
                }
            }
        };

        if batch > 1 && seq * klen * hidden >= (1 << 18) && rayon::current_num_threads() > 1 {
            out.par_chunks_exact_mut(seq * hidden)
                .enumerate()
                .for_each(|(b, chunk)| run_batch(b, chunk));
        } else {
            for (b, chunk) in out.chunks_exact_mut(seq * hidden).enumerate() {
                run_batch(b, chunk);
            }
        }
        Tensor {
            shape: vec![batch * seq, hidden],
            data: out,
        }
    }

    // ---- backward ----------------------------------------------------------

    /// Populate gradients of every `requires_grad` node reachable from the
    /// scalar `loss`. Leaf gradients stay on the tape for harvesting;
    /// intermediate gradients are freed as the reverse sweep passes them.
    pub fn backward(&mut self, loss: Var) -> Result<()> {
        let lv = &self.nodes[loss.0].value;
        if lv.numel() != 1 {
            return Err(Error::Numeric(format!(
                "backward requires a scalar loss, got shape {:?}",
                lv.shape()
            )));
        }
        if !lv.is_finite() {
            return Err(Error::Numeric("backward on a non-finite loss".into()));
        }
        self.grads = Vec::new();
        self.grads.resize_with(self.nodes.len(), || None);
        self.grads[loss.0] = Some(vec![T::one()]);

        for idx in (0..=loss.0).rev() {
            if !self.nodes[idx].requires_grad {
                self.grads[idx] = None;
                continue;
            }
            if matches!(self.nodes[idx].op, Op::Leaf) {
                continue; // keep leaf grads for the caller
            }
            let Some(gout) = self.grads[idx].take() else {
                continue;
            };
            self.propagate(idx, gout);
        }
        Ok(())
    }

    fn propagate(&mut self, idx: usize, gout: Vec<T>) {
        let Tape { nodes, grads } = self;
        let (parents, current) = nodes.split_at_mut(idx);
        let node = &current[0];

        // Allocates (or finds) the gradient buffer of a parent node.
        macro_rules! gbuf {
            ($v:expr) => {{
                let v: Var = $v;
                if parents[v.0].requires_grad {
                    Some(
                        grads[v.0]
                            .get_or_insert_with(|| vec![T::zero(); parents[v.0].value.numel()])
                            .as_mut_slice(),
                    )
                } else {
                    None
                }
            }};
        }

        match &node.op {
            Op::Leaf | Op::StopGrad => {}
            Op::Add { a, b } => {
                if let Some(g) = gbuf!(*a) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d += s;
                    }
                }
                if let Some(g) = gbuf!(*b) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d += s;
                    }
                }
            }
            Op::Sub { a, b } => {
                if let Some(g) = gbuf!(*a) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d += s;
                    }
                }
                if let Some(g) = gbuf!(*b) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d -= s;
                    }
                }
            }
            Op::Mul { a, b } => {
                let (av, bv) = (parents[a.0].value.data(), parents[b.0].value.data());
                if parents[a.0].requires_grad {
                    let contrib: Vec<T> = gout.iter().zip(bv).map(|(&g, &v)| g * v).collect();
                    if let Some(gr) = gbuf!(*a) {
                        for (d, s) in gr.iter_mut().zip(contrib) {
                            *d += s;
                        }
                    }
                }
                if parents[b.0].requires_grad {
                    let contrib: Vec<T> = gout.iter().zip(av).map(|(&g, &v)| g * v).collect();
                    if let Some(gr) = gbuf!(*b) {
                        for (d, s) in gr.iter_mut().zip(contrib) {
                            *d += s;
                        }
                    }
                }
            }
            Op::Affine { x, mul } => {
                let mul = *mul;
                if let Some(g) = gbuf!(*x) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d += mul * s;
                    }
                }
            }
            Op::AddBias { x, bias } => {
                let cols = parents[bias.0].value.numel();
                if let Some(g) = gbuf!(*x) {
                    for (d, &s) in g.iter_mut().zip(&gout) {
                        *d += s;
                    }
                }
                if let Some(g) = gbuf!(*bias) {
                    for row in gout.chunks_exact(cols) {
                        for (d, &s) in g.iter_mut().zip(row) {
                            *d += s;
                        }
                    }
                }
            }
            Op::Matmul { a, b } => {
                let (m, k) = parents[a.0].value.dims2().expect("checked at forward");
                let (_, n) = parents[b.0].value.dims2().expect("checked at forward");
                if parents[a.0].requires_grad {
                    // dA = dC · B^T
                    let bt = kernels::transposed(parents[b.0].value.data(), k, n);
                    let mut da = vec![T::zero(); m * k];
                    kernels::matmul(&gout, &bt, m, n, k, &mut da);
                    if let Some(g) = gbuf!(*a) {
                        for (d, s) in g.iter_mut().zip(da) {
                            *d += s;
                        }
                    }
                }
                if parents[b.0].requires_grad {
                    // dB = A^T · dC
                    let at = kernels::transposed(parents[a.0].value.data(), m, k);
                    let mut db = vec![T::zero(); k * n];
                    kernels::matmul(&at, &gout, k, m, n, &mut db);
                    if let Some(g) = gbuf!(*b) {
                        for (d, s) in g.iter_mut().zip(db) {
                            *d += s;
                        }
                    }
                }
            }
            Op::Gelu { x } => {
                let xv = parents[x.0].value.data();
                let half = T::of(0.5);
                let inv_sqrt2 = T::of(std::f64::consts::FRAC_1_SQRT_2);
                let inv_sqrt_2pi = T::of(1.0 / (2.0 * std::f64::consts::PI).sqrt());
                if let Some(g) = gbuf!(*x) {
                    for ((d, &s), &v) in g.iter_mut().zip(&gout).zip(xv) {
                        let cdf = half * (T::one() + (v * inv_sqrt2).verf());
                        let pdf = inv_sqrt_2pi * (-v * v * half).vexp();
                        *d += s * (cdf + v * pdf);
                    }
                }
            }
            Op::Sigmoid { x } => {
                let yv = node.value.data();
                if let Some(g) = gbuf!(*x) {
                    for ((d, &s), &y) in g.iter_mut().zip(&gout).zip(yv) {
                        *d += s * y * (T::one() - y);
                    }
                }
            }
            Op::Tanh { x } => {
                let yv = node.value.data();
                if let Some(g) = gbuf!(*x) {
                    for ((d, &s), &y) in g.iter_mut().zip(&gout).zip(yv) {
                        *d += s * (T::one() - y * y);
                    }
                }
            }
            Op::Softmax { x } => {
                let cols = node.value.dims2().expect("2-d by construction").1;
                let yv = node.value.data();
                if let Some(g) = gbuf!(*x) {
                    for ((grow, yrow), srow) in g
                        .chunks_exact_mut(cols)
                        .zip(yv.chunks_exact(cols))
                        .zip(gout.chunks_exact(cols))
                    {
                        let mut dot = T::zero();
                        for (&y, &s) in yrow.iter().zip(srow) {
                            dot += y * s;
                        }
                        for ((d, &y), &s) in grow.iter_mut().zip(yrow).zip(srow) {
                            *d += y * (s - dot);
                        }
                    }
                }
            }
            Op::LayerNorm {
                x,
                gain,
                bias,
                stats,
            } => {
                let cols = parents[x.0].value.dims2().expect("checked").1;
                let n = T::of(cols as f64);
                let xv = parents[x.0].value.data();
                let gv = parents[gain.0].value.data();
                let x_rg = parents[x.0].requires_grad;
                let g_rg = parents[gain.0].requires_grad;
                let b_rg = parents[bias.0].requires_grad;
                let mut dx = if x_rg {
                    vec![T::zero(); xv.len()]
                } else {
                    Vec::new()
                };
                let mut dgain = if g_rg {
                    vec![T::zero(); cols]
                } else {
                    Vec::new()
                };
                let mut dbias = if b_rg {
                    vec![T::zero(); cols]
                } else {
                    Vec::new()
                };
                for (row, (&(mean, rstd), srow)) in
                    stats.iter().zip(gout.chunks_exact(cols)).enumerate()
                {
                    let xrow = &xv[row * cols..(row + 1) * cols];
                    // x_hat = (x - mean) * rstd
                    if g_rg || b_rg {
                        for (j, &s) in srow.iter().enumerate() {
                            if g_rg {
                                dgain[j] += s * (xrow[j] - mean) * rstd;
                            }
                            if b_rg {
                                dbias[j] += s;
                            }
                        }
                    }
                    if x_rg {
                        // dxhat = s * gain; dx = rstd * (dxhat - mean(dxhat) - xhat * mean(dxhat*xhat))
                        let mut mean_dxhat = T::zero();
                        let mut mean_dxhat_xhat = T::zero();
                        for (j, &s) in srow.iter().enumerate() {
                            let dxhat = s * gv[j];
                            let xhat = (xrow[j] - mean) * rstd;
                            mean_dxhat += dxhat;
                            mean_dxhat_xhat += dxhat * xhat;
                        }
                        mean_dxhat /= n;
                        mean_dxhat_xhat /= n;
                        let dxrow = &mut dx[row * cols..(row + 1) * cols];
                        for (j, &s) in srow.iter().enumerate() {
                            let dxhat = s * gv[j];
                            let xhat = (xrow[j] - mean) * rstd;
                            dxrow[j] += rstd * (dxhat - mean_dxhat - xhat * mean_dxhat_xhat);
                        }
                    }
                }
                if x_rg {
                    if let Some(g) = gbuf!(*x) {
                        for (d, s) in g.iter_mut().zip(dx) {
                            *d += s;
                        }
                    }
                }
                if g_rg {
                    if let Some(g) = gbuf!(*gain) {
                        for (d, s) in g.iter_mut().zip(dgain) {
                            *d += s;
                        }
                    }
                }
                if b_rg {
                    if let Some(g) = gbuf!(*bias) {
                        for (d, s) in g.iter_mut().zip(dbias) {
                            *d += s;
                        }
                    }
                }
            }
            Op::Dropout { x, mask } => {
                if parents[x.0].requires_grad {
                    let contrib: Vec<T> = gout.iter().zip(mask).map(|(&g, &m)| g * m).collect();
                    if let Some(gr) = gbuf!(*x) {
                        for (d, s) in gr.iter_mut().zip(contrib) {
                            *d += s;
                        }
                    }
                }
            }
            Op::Embedding { table, ids } => {
                let width = parents[table.0].value.dims2().expect("checked").1;
                if let Some(g) = gbuf!(*table) {
                    for (row, &id) in gout.chunks_exact(width).zip(ids) {
                        let dst = &mut g[id as usize * width..(id as usize + 1) * width];
                        for (d, &s) in dst.iter_mut().zip(row) {
                            *d += s;
                        }
                    }
                }
            }
            Op::ConcatTime { a, b, batch } => {
                let batch = *batch;
                let (ra, cols) = parents[a.0].value.dims2().expect("checked");
                let rb = parents[b.0].value.dims2().expect("checked").0;
                let (ta, tb) = (ra / batch, rb / batch);
                let stride = (ta + tb) * cols;
                if let Some(g) = gbuf!(*a) {
                    for i in 0..batch {
                        let src = &gout[i * stride..i * stride + ta * cols];
                        let dst = &mut g[i * ta * cols..(i + 1) * ta * cols];
                        for (d, &s) in dst.iter_mut().zip(src) {
                            *d += s;
                        }
                    }
                }
                if let Some(g) = gbuf!(*b) {
                    for i in 0..batch {
                        let src = &gout[i * stride + ta * cols..(i + 1) * stride];
                        let dst = &mut g[i * tb * cols..(i + 1) * tb * cols];
                        for (d, &s) in dst.iter_mut().zip(src) {
                            *d += s;
                        }
                    }
                }
            }
            Op::ConcatRows { parts } => {
                let parts = parts.clone();
                let mut offset = 0;
                for p in parts {
                    let numel = parents[p.0].value.numel();
                    if let Some(g) = gbuf!(p) {
                        for (d, &s) in g.iter_mut().zip(&gout[offset..offset + numel]) {
                            *d += s;
                        }
                    }
                    offset += numel;
                }
            }
            Op::NarrowRows { x, start } => {
                let cols = parents[x.0].value.dims2().expect("checked").1;
                let start = *start;
                if let Some(g) = gbuf!(*x) {
                    for (d, &s) in g[start * cols..start * cols + gout.len()]
                        .iter_mut()
                        .zip(&gout)
                    {
                        *d += s;
                    }
                }
            }
            Op::NarrowCols {
                x,
                start,
                full_cols,
            } => {
                let (start, full_cols) = (*start, *full_cols);
                let len = node.value.dims2().expect("2-d").1;
                if let Some(g) = gbuf!(*x) {
                    for (grow, srow) in g.chunks_exact_mut(full_cols).zip(gout.chunks_exact(len)) {
                        for (d, &s) in grow[start..start + len].iter_mut().zip(srow) {
                            *d += s;
                        }
                    }
                }
            }
            Op::MeanAll { x } => {
                let n = parents[x.0].value.numel();
                let scale = gout[0] / T::of(n as f64);
                if let Some(g) = gbuf!(*x) {
                    for d in g.iter_mut() {
                        *d += scale;
                    }
                }
            }
            Op::SoftmaxXent {
                logits,
                targets,
                probs,
            } => {
                let cols = parents[logits.0].value.dims2().expect("checked").1;
                let rows = targets.len();
                let scale = gout[0] / T::of(rows as f64);
                if let Some(g) = gbuf!(*logits) {
                    for ((grow, prow), &t) in g
                        .chunks_exact_mut(cols)
                        .zip(probs.chunks_exact(cols))
                        .zip(targets)
                    {
                        for (d, &p) in grow.iter_mut().zip(prow) {
                            *d += scale * p;
                        }
                        grow[t as usize] -= scale;
                    }
                }
            }
            Op::AttnScores {
                q,
                k,
                rel,
                dims,
                scale,
            } => {
                Self::attn_scores_backward(parents, grads, &gout, *q, *k, rel, dims, *scale);
            }
            Op::AttnContext { probs, v, dims } => {
                Self::attn_context_backward(parents, grads, &gout, *probs, *v, dims);
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn attn_scores_backward(
        parents: &mut [Node<T>],
        grads: &mut [Option<Vec<T>>],
        gout: &[T],
        q: Var,
        k: Var,
        rel: &Option<RelPos>,
        dims: &AttnDims,
        scale: T,
    ) {
        let &AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: dk,
        } = dims;
        let hidden = heads * dk;
        let mem = klen - seq;
        let qv = parents[q.0].value.data();
        let kv = parents[k.0].value.data();

        let q_rg = parents[q.0].requires_grad;
        let k_rg = parents[k.0].requires_grad;
        let (p_rg, u_rg, v_rg) = rel
            .as_ref()
            .map(|r| {
                (
                    parents[r.pos.0].requires_grad,
                    parents[r.content_bias.0].requires_grad,
                    parents[r.pos_bias.0].requires_grad,
                )
            })
            .unwrap_or((false, false, false));

        let mut dq = vec![T::zero(); batch * seq * hidden];
        let mut dk_acc = vec![T::zero(); batch * klen * hidden];
        let p_rows = rel
            .as_ref()
            .map(|r| parents[r.pos.0].value.dims2().expect("checked").0)
            .unwrap_or(0);
        let mut dp = vec![T::zero(); p_rows * hidden];
        let mut du = vec![T::zero(); hidden];
        let mut dv = vec![T::zero(); hidden];

        // Per-head scratch, allocated once. The triangle write patterns in
        // `ds` and `dt` are identical for every block, so the masked region
        // stays zero across reuses; the matmul outputs accumulate and are
        // rezeroed explicitly.
        let mut ds = vec![T::zero(); seq * klen];
        let mut dt = vec![T::zero(); seq * klen];
        let mut tr = vec![T::zero(); seq * klen];
        let mut kb = vec![T::zero(); klen * dk];
        let mut pb = vec![T::zero(); klen * dk];
        let mut q_eff = vec![T::zero(); seq * dk];
        let mut q_pos = vec![T::zero(); seq * dk];
        let mut g_sq = vec![T::zero(); seq * dk];
        let mut g_kq = vec![T::zero(); klen * dk];

        for b in 0..batch {
            for h in 0..heads {
                let hoff = h * dk;
                // Masked entries carry exactly zero upstream gradient, but the
                // stored score there is -inf, so only touch the valid triangle.
                for i in 0..seq {
                    let src = &gout[((b * heads + h) * seq + i) * klen..][..klen];
                    for j in 0..=(mem + i) {
                        ds[i * klen + j] = src[j] * scale;
                    }
                }
                // k block [klen, dk]
                for j in 0..klen {
                    kb[j * dk..(j + 1) * dk]
                        .copy_from_slice(&kv[(b * klen + j) * hidden + hoff..][..dk]);
                }
                // content: d(q+u) = ds · k
                if q_rg || u_rg {
                    g_sq.iter_mut().for_each(|z| *z = T::zero());
                    kernels::matmul(&ds, &kb, seq, klen, dk, &mut g_sq);
                    for i in 0..seq {
                        let row = &g_sq[i * dk..(i + 1) * dk];
                        if q_rg {
                            let dst = &mut dq[(b * seq + i) * hidden + hoff..][..dk];
                            for (d, &s) in dst.iter_mut().zip(row) {
                                *d += s;
                            }
                        }
                        if u_rg {
                            for (d, &s) in du[hoff..hoff + dk].iter_mut().zip(row) {
                                *d += s;
                            }
                        }
                    }
                }
                if k_rg {
                    // dk = ds^T · (q + u)
                    for i in 0..seq {
                        q_eff[i * dk..(i + 1) * dk]
                            .copy_from_slice(&qv[(b * seq + i) * hidden + hoff..][..dk]);
                    }
                    if let Some(r) = rel {
                        let u = parents[r.content_bias.0].value.data();
                        for i in 0..seq {
                            for d in 0..dk {
                                q_eff[i * dk + d] += u[hoff + d];
                            }
                        }
                    }
                    kernels::transpose(&ds, seq, klen, &mut tr);
                    g_kq.iter_mut().for_each(|z| *z = T::zero());
                    kernels::matmul(&tr, &q_eff, klen, seq, dk, &mut g_kq);
                    for j in 0..klen {
                        let dstk = &mut dk_acc[(b * klen + j) * hidden + hoff..][..dk];
                        for (d, &s) in dstk.iter_mut().zip(&g_kq[j * dk..(j + 1) * dk]) {
                            *d += s;
                        }
                    }
                }
                if let Some(r) = rel {
                    // scatter ds back over offsets: dt[i, d_off] = ds[i, mem+i-d_off]
                    for i in 0..seq {
                        for j in 0..=(mem + i) {
                            dt[i * klen + (mem + i - j)] = ds[i * klen + j];
                        }
                    }
                    if q_rg || v_rg {
                        // d(q+v) = dt · p
                        let pvals = parents[r.pos.0].value.data();
                        for d_off in 0..klen {
                            pb[d_off * dk..(d_off + 1) * dk]
                                .copy_from_slice(&pvals[d_off * hidden + hoff..][..dk]);
                        }
                        g_sq.iter_mut().for_each(|z| *z = T::zero());
                        kernels::matmul(&dt, &pb, seq, klen, dk, &mut g_sq);
                        for i in 0..seq {
                            let row = &g_sq[i * dk..(i + 1) * dk];
                            if q_rg {
                                let dst = &mut dq[(b * seq + i) * hidden + hoff..][..dk];
                                for (d, &s) in dst.iter_mut().zip(row) {
                                    *d += s;
                                }
                            }
                            if v_rg {
                                for (d, &s) in dv[hoff..hoff + dk].iter_mut().zip(row) {
                                    *d += s;
                                }
                            }
                        }
                    }
                    if p_rg {
                        // dp = dt^T · (q + v)
                        let vbias = parents[r.pos_bias.0].value.data();
                        for i in 0..seq {
                            let src = &qv[(b * seq + i) * hidden + hoff..][..dk];
                            for d in 0..dk {
                                q_pos[i * dk + d] = src[d] + vbias[hoff + d];
                            }
                        }
                        kernels::transpose(&dt, seq, klen, &mut tr);
                        g_kq.iter_mut().for_each(|z| *z = T::zero());
                        kernels::matmul(&tr, &q_pos, klen, seq, dk, &mut g_kq);
                        for d_off in 0..klen {
                            let dst = &mut dp[d_off * hidden + hoff..][..dk];
                            for (d, &s) in
                                dst.iter_mut().zip(&g_kq[d_off * dk..(d_off + 1) * dk])
                            {
                                *d += s;
                            }
                        }
                    }
                }
            }
        }

        let mut apply = |var: Var, contrib: Vec<T>| {
            if parents[var.0].requires_grad {
                let g = grads[var.0]
                    .get_or_insert_with(|| vec![T::zero(); parents[var.0].value.numel()]);
                for (d, s) in g.iter_mut().zip(contrib) {
                    *d += s;
                }
            }
        };
        apply(q, dq);
        apply(k, dk_acc);
        if let Some(r) = rel {
            apply(r.pos, dp);
            apply(r.content_bias, du);
            apply(r.pos_bias, dv);
        }
    }

    fn attn_context_backward(
        parents: &mut [Node<T>],
        grads: &mut [Option<Vec<T>>],
        gout: &[T],
        probs: Var,
        v: Var,
        dims: &AttnDims,
    ) {
        let &AttnDims {
            batch,
            heads,
            seq,
            klen,
            head_dim: dk,
        } = dims;
        let hidden = heads * dk;
        let pv = parents[probs.0].value.data();
        let vv = parents[v.0].value.data();
        let p_rg = parents[probs.0].requires_grad;
        let v_rg = parents[v.0].requires_grad;

        // Both products run as per-head matmuls on contiguous scratch
        // blocks; `matmul` accumulates, so it can target the gradient
        // buffers directly. Masked probabilities are exact zeros and
        // contribute nothing.
        let mut gout_b = vec![T::zero(); seq * dk];
        if p_rg {
            // dprobs[i, j] = gout_i · v_j over this head's slice
            let mut vt = vec![T::zero(); dk * klen];
            let g = grads[probs.0]
                .get_or_insert_with(|| vec![T::zero(); parents[probs.0].value.numel()]);
            for b in 0..batch {
                for h in 0..heads {
                    let hoff = h * dk;
                    for i in 0..seq {
                        gout_b[i * dk..(i + 1) * dk]
                            .copy_from_slice(&gout[(b * seq + i) * hidden + hoff..][..dk]);
                    }
                    for j in 0..klen {
                        for d in 0..dk {
                            vt[d * klen + j] = vv[(b * klen + j) * hidden + hoff + d];
                        }
                    }
                    let dst = &mut g[((b * heads + h) * seq) * klen..][..seq * klen];
                    kernels::matmul(&gout_b, &vt, seq, dk, klen, dst);
                }
            }
        }
        if v_rg {
            // dval[j, d] = sum_i probs[i, j] * gout[i, d], built transposed
            // so the matmul's inner dimension stays contiguous.
            let mut gout_t = vec![T::zero(); dk * seq];
            let mut dvt = vec![T::zero(); dk * klen];
            let g =
                grads[v.0].get_or_insert_with(|| vec![T::zero(); parents[v.0].value.numel()]);
            for b in 0..batch {
                for h in 0..heads {
                    let hoff = h * dk;
                    for i in 0..seq {
                        gout_b[i * dk..(i + 1) * dk]
                            .copy_from_slice(&gout[(b * seq + i) * hidden + hoff..][..dk]);
                    }
                    kernels::transpose(&gout_b, seq, dk, &mut gout_t);
                    let probs_b = &pv[((b * heads + h) * seq) * klen..][..seq * klen];
                    dvt.iter_mut().for_each(|z| *z = T::zero());
                    kernels::matmul(&gout_t, probs_b, dk, seq, klen, &mut dvt);
                    for j in 0..klen {
                        let dst = &mut g[(b * klen + j) * hidden + hoff..][..dk];
                        for (d, drow) in dst.iter_mut().zip(dvt.chunks_exact(klen)) {
                            *d += drow[j];
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t1(data: Vec<f64>) -> Tensor<f64> {
        Tensor::from_vec(data)
    }

    fn t2(rows: usize, cols: usize, data: Vec<f64>) -> Tensor<f64> {
        Tensor::new(vec![rows, cols], data).unwrap()
    }

    /// Maclaurin series for erf, an oracle independent of libm.
    fn erf_series(x: f64) -> f64 {
        let mut term = x;
        let mut sum = x;
        let mut n = 0.0;
        loop {
            n += 1.0;
            term *= -x * x / n;
            let add = term / (2.0 * n + 1.0);
            sum += add;
            if add.abs() < 1e-17 {
                break;
            }
        }
        sum * 2.0 / std::f64::consts::PI.sqrt()
    }

    fn gelu_oracle(x: f64) -> f64 {
        x * 0.5 * (1.0 + erf_series(x / std::f64::consts::SQRT_2))
    }

    #[test]
    fn gelu_matches_normal_cdf_oracle() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![0.0, 1.0, -1.0, 10.0, -10.0, 0.5]), false);
        let y = tape.gelu(x);
        let out = tape.value(y).data();
        assert_eq!(out[0], 0.0);
        assert!((out[1] - 0.841345).abs() < 1e-6);
        // the series oracle only converges for small arguments
        for (i, &xi) in [0.0, 1.0, -1.0].iter().enumerate() {
            assert!((out[i] - gelu_oracle(xi)).abs() < 1e-12, "x = {xi}");
        }
        assert!((out[5] - gelu_oracle(0.5)).abs() < 1e-12);
        assert!((out[3] - 10.0).abs() < 1e-6);
        assert!(out[4].abs() < 1e-6);
    }

    #[test]
    fn softmax_known_rows() {
        let mut tape = Tape::new();
        let x = tape.leaf(t2(2, 3, vec![0.0, 0.0, 0.0, 1.0, 2.0, 3.0]), false);
        let y = tape.softmax_rows(x).unwrap();
        let out = tape.value(y).data();
        for &p in &out[..3] {
            assert!((p - 1.0 / 3.0).abs() < 1e-12);
        }
        // oracle: direct exp / sum in double precision
        let e: Vec<f64> = [1.0, 2.0, 3.0f64].iter().map(|v| v.exp()).collect();
        let z: f64 = e.iter().sum();
        for j in 0..3 {
            assert!((out[3 + j] - e[j] / z).abs() < 1e-12);
        }
        assert!((out[3] - 0.090031).abs() < 1e-6);
        assert!((out[4] - 0.244728).abs() < 1e-6);
        assert!((out[5] - 0.665241).abs() < 1e-6);
    }

    #[test]
    fn softmax_masked_entries_are_exactly_zero() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0, f64::NEG_INFINITY, 3.0]), false);
        let y = tape.softmax_rows(x).unwrap();
        let out = tape.value(y).data();
        assert_eq!(out[1], 0.0);
        assert!((out.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn softmax_fully_masked_row_is_numeric_error() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![f64::NEG_INFINITY; 4]), false);
        assert!(matches!(tape.softmax_rows(x), Err(Error::Numeric(_))));
    }

    #[test]
    fn layer_norm_constant_row_is_all_zeros() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![5.0, 5.0, 5.0]), false);
        let g = tape.leaf(t1(vec![1.0, 1.0, 1.0]), false);
        let b = tape.leaf(t1(vec![0.0, 0.0, 0.0]), false);
        let y = tape.layer_norm(x, g, b, 1e-5).unwrap();
        assert!(tape.value(y).data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn layer_norm_frozen_example() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0, 2.0, 3.0]), false);
        let g = tape.leaf(t1(vec![1.0, 1.0, 1.0]), false);
        let b = tape.leaf(t1(vec![0.0, 0.0, 0.0]), false);
        let y = tape.layer_norm(x, g, b, 0.0).unwrap();
        let out = tape.value(y).data();
        // oracle: mean 2, population variance 2/3, so x_hat = (x-2) * sqrt(1.5)
        let rstd = 1.5f64.sqrt();
        assert!((out[0] + rstd).abs() < 1e-12);
        assert!(out[1].abs() < 1e-12);
        assert!((out[2] - rstd).abs() < 1e-12);
        assert!((out[0] + 1.224745).abs() < 1e-6);
        assert!((out[2] - 1.224745).abs() < 1e-6);
    }

    #[test]
    fn layer_norm_applies_gain_and_bias() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0, 2.0, 3.0]), false);
        let g = tape.leaf(t1(vec![2.0, 2.0, 2.0]), false);
        let b = tape.leaf(t1(vec![0.5, 0.5, 0.5]), false);
        let y = tape.layer_norm(x, g, b, 0.0).unwrap();
        let out = tape.value(y).data();
        let rstd = 1.5f64.sqrt();
        assert!((out[0] - (-rstd * 2.0 + 0.5)).abs() < 1e-12);
        assert!((out[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn dropout_identity_when_disabled() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0, 2.0, 3.0]), false);
        let eval_mode = tape.dropout(x, 0.5, false, &mut rng).unwrap();
        assert_eq!(eval_mode, x);
        let zero_rate = tape.dropout(x, 0.0, true, &mut rng).unwrap();
        assert_eq!(zero_rate, x);
    }

    #[test]
    fn dropout_preserves_mean_statistically() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let mut tape = Tape::new();
        let n = 100_000;
        let x = tape.leaf(t1(vec![1.0; n]), false);
        let y = tape.dropout(x, 0.1, true, &mut rng).unwrap();
        let mean = tape.value(y).data().iter().sum::<f64>() / n as f64;
        assert!((0.98..=1.02).contains(&mean), "mean {mean}");
    }

    #[test]
    fn dropout_rate_one_is_config_error() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0]), false);
        assert!(matches!(
            tape.dropout(x, 1.0, true, &mut rng),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn mul_backward_follows_product_rule() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![2.0]), true);
        let y = tape.leaf(t1(vec![3.0]), true);
        let p = tape.mul(x, y).unwrap();
        let loss = tape.mean_all(p);
        tape.backward(loss).unwrap();
        assert_eq!(tape.grad(x).unwrap(), &[3.0]);
        assert_eq!(tape.grad(y).unwrap(), &[2.0]);
    }

    #[test]
    fn stop_gradient_blocks_flow() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![2.0]), true);
        let y = tape.leaf(t1(vec![3.0]), true);
        let xs = tape.stop_gradient(x);
        let p = tape.mul(xs, y).unwrap();
        let loss = tape.mean_all(p);
        tape.backward(loss).unwrap();
        assert!(tape.grad(x).is_none());
        assert_eq!(tape.grad(y).unwrap(), &[2.0]);
    }

    #[test]
    fn unreachable_leaf_gets_no_grad() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![2.0]), true);
        let unused = tape.leaf(t1(vec![9.0]), true);
        let loss = tape.mean_all(x);
        tape.backward(loss).unwrap();
        assert!(tape.grad(unused).is_none());
        assert_eq!(tape.grad(x).unwrap(), &[1.0]);
    }

    #[test]
    fn backward_rejects_non_scalar_loss() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![1.0, 2.0]), true);
        assert!(matches!(tape.backward(x), Err(Error::Numeric(_))));
    }

    #[test]
    fn backward_rejects_non_finite_loss() {
        let mut tape = Tape::new();
        let x = tape.leaf(t1(vec![f64::NAN]), true);
        assert!(matches!(tape.backward(x), Err(Error::Numeric(_))));
    }

    #[test]
    fn xent_gradient_is_probs_minus_one_hot() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let logits = Tensor::<f64>::randn(&[2, 5], 1.0, &mut rng);
        let targets = [1u32, 3];
        let mut tape = Tape::new();
        let l = tape.leaf(logits.clone(), true);
        let loss = tape.softmax_cross_entropy(l, &targets).unwrap();
        tape.backward(loss).unwrap();
        let grad = tape.grad(l).unwrap().to_vec();

        // oracle: softmax row minus one-hot, averaged over rows
        for (r, &tgt) in targets.iter().enumerate() {
            let row = &logits.data()[r * 5..(r + 1) * 5];
            let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let e: Vec<f64> = row.iter().map(|v| (v - max).exp()).collect();
            let z: f64 = e.iter().sum();
            for j in 0..5 {
                let onehot = if j == tgt as usize { 1.0 } else { 0.0 };
                let want = (e[j] / z - onehot) / 2.0;
                assert!((grad[r * 5 + j] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn xent_loss_matches_log_softmax_oracle() {
        let mut tape = Tape::new();
        let l = tape.leaf(t2(1, 3, vec![1.0, 2.0, 3.0]), false);
        let loss = tape.softmax_cross_entropy(l, &[2]).unwrap();
        let z: f64 = [1.0f64, 2.0, 3.0].iter().map(|v| v.exp()).sum();
        let want = z.ln() - 3.0;
        assert!((tape.value(loss).data()[0] - want).abs() < 1e-12);
    }

    #[test]
    fn embedding_gathers_and_scatters() {
        let mut tape = Tape::new();
        let table = tape.leaf(t2(3, 2, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]), true);
        let e = tape.embedding(table, &[0, 2, 0]).unwrap();
        assert_eq!(tape.value(e).data(), &[1.0, 2.0, 5.0, 6.0, 1.0, 2.0]);
        let loss = tape.mean_all(e);
        tape.backward(loss).unwrap();
        let g = tape.grad(table).unwrap();
        // rows 0 appears twice, row 1 never, row 2 once; mean scale 1/6
        let s = 1.0 / 6.0;
        assert_eq!(g, &[2.0 * s, 2.0 * s, 0.0, 0.0, s, s]);
    }

    #[test]
    fn embedding_rejects_out_of_range_ids() {
        let mut tape = Tape::new();
        let table = tape.leaf(t2(3, 2, vec![0.0; 6]), false);
        assert!(matches!(
            tape.embedding(table, &[3]),
            Err(Error::Data(_))
        ));
    }

    #[test]
    fn concat_time_interleaves_per_batch() {
        let mut tape = Tape::new();
        // batch 2: memory of 1 step, segment of 2 steps, width 1
        let mem = tape.leaf(t2(2, 1, vec![10.0, 20.0]), false);
        let x = tape.leaf(t2(4, 1, vec![1.0, 2.0, 3.0, 4.0]), false);
        let y = tape.concat_time(mem, x, 2).unwrap();
        assert_eq!(tape.value(y).data(), &[10.0, 1.0, 2.0, 20.0, 3.0, 4.0]);
    }

    #[test]
    fn attention_mask_is_causal_with_memory() {
        let (batch, heads, seq, mem, dk) = (1, 1, 3, 2, 2);
        let klen = mem + seq;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut tape = Tape::new();
        let q = tape.leaf(
            Tensor::<f64>::randn(&[batch * seq, heads * dk], 1.0, &mut rng),
            false,
        );
        let k = tape.leaf(
            Tensor::randn(&[batch * klen, heads * dk], 1.0, &mut rng),
            false,
        );
        let s = tape.attention_scores(q, k, None, batch, heads).unwrap();
        let sv = tape.value(s).data();
        for i in 0..seq {
            for j in 0..klen {
                let v = sv[i * klen + j];
                if j <= mem + i {
                    assert!(v.is_finite());
                } else {
                    assert_eq!(v, f64::NEG_INFINITY, "({i},{j}) must be masked");
                }
            }
        }
        let p = tape.softmax_rows(s).unwrap();
        let pv = tape.value(p).data();
        for i in 0..seq {
            let row = &pv[i * klen..(i + 1) * klen];
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            for (j, &pj) in row.iter().enumerate() {
                if j > mem + i {
                    assert_eq!(pj, 0.0);
                }
            }
        }
    }

    #[test]
    fn attention_scores_match_hand_rolled_oracle() {
        // 1 batch, 2 heads, seq 2, no memory: compare against a direct
        // q.k^T / sqrt(dk) evaluation per head.
        let (batch, heads, seq, dk) = (1, 2, 2, 3);
        let hidden = heads * dk;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let qt = Tensor::<f64>::randn(&[seq, hidden], 1.0, &mut rng);
        let kt = Tensor::<f64>::randn(&[seq, hidden], 1.0, &mut rng);
        let mut tape = Tape::new();
        let q = tape.leaf(qt.clone(), false);
        let k = tape.leaf(kt.clone(), false);
        let s = tape.attention_scores(q, k, None, batch, heads).unwrap();
        let sv = tape.value(s).data();
        let scale = 1.0 / (dk as f64).sqrt();
        for h in 0..heads {
            for i in 0..seq {
                for j in 0..=i {
                    let mut dot = 0.0;
                    for d in 0..dk {
                        dot += qt.data()[i * hidden + h * dk + d] * kt.data()[j * hidden + h * dk + d];
                    }
                    let got = sv[(h * seq + i) * seq + j];
                    assert!((got - dot * scale).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn attention_context_matches_hand_rolled_oracle() {
        let (batch, heads, seq, klen, dk) = (1, 1, 2, 2, 2);
        let mut tape = Tape::new();
        let probs = tape.leaf(t2(seq, klen, vec![1.0, 0.0, 0.25, 0.75]), false);
        let v = tape.leaf(t2(klen, dk, vec![1.0, 2.0, 3.0, 4.0]), false);
        let ctx = tape.attention_context(probs, v, batch, heads).unwrap();
        let got = tape.value(ctx).data();
        assert_eq!(&got[..2], &[1.0, 2.0]);
        assert!((got[2] - (0.25 * 1.0 + 0.75 * 3.0)).abs() < 1e-12);
        assert!((got[3] - (0.25 * 2.0 + 0.75 * 4.0)).abs() < 1e-12);
    }

    #[test]
    fn narrow_cols_extracts_gate_slices() {
        let mut tape = Tape::new();
        let x = tape.leaf(t2(2, 4, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]), true);
        let right = tape.narrow_cols(x, 2, 2).unwrap();
        assert_eq!(tape.value(right).data(), &[3.0, 4.0, 7.0, 8.0]);
        let loss = tape.mean_all(right);
        tape.backward(loss).unwrap();
        assert_eq!(tape.grad(x).unwrap(), &[0.0, 0.0, 0.25, 0.25, 0.0, 0.0, 0.25, 0.25]);
    }

    proptest! {
        #[test]
        fn softmax_rows_are_distributions(row in proptest::collection::vec(-50.0f64..50.0, 1..16)) {
            let cols = row.len();
            let mut tape = Tape::new();
            let x = tape.leaf(Tensor::new(vec![1, cols], row).unwrap(), false);
            let y = tape.softmax_rows(x).unwrap();
            let out = tape.value(y).data();
            let sum: f64 = out.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
            prop_assert!(out.iter().all(|&p| (0.0..=1.0).contains(&p)));
        }

        #[test]
        fn softmax_is_shift_invariant(
            row in proptest::collection::vec(-20.0f64..20.0, 2..8),
            shift in -100.0f64..100.0,
        ) {
            let cols = row.len();
            let shifted: Vec<f64> = row.iter().map(|v| v + shift).collect();
            let mut tape = Tape::new();
            let a = tape.leaf(Tensor::new(vec![1, cols], row).unwrap(), false);
            let b = tape.leaf(Tensor::new(vec![1, cols], shifted).unwrap(), false);
            let ya = tape.softmax_rows(a).unwrap();
            let yb = tape.softmax_rows(b).unwrap();
            for (pa, pb) in tape.value(ya).data().iter().zip(tape.value(yb).data()) {
                prop_assert!((pa - pb).abs() < 1e-9);
            }
        }

        #[test]
        fn layer_norm_output_has_zero_mean_unit_variance(
            row in proptest::collection::vec(-100.0f64..100.0, 2..16),
        ) {
            let n = row.len();
            let mean: f64 = row.iter().sum::<f64>() / n as f64;
            let var: f64 = row.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n as f64;
            prop_assume!(var > 1e-3);
            let mut tape = Tape::new();
            let x = tape.leaf(Tensor::new(vec![1, n], row).unwrap(), false);
            let g = tape.leaf(Tensor::from_vec(vec![1.0; n]), false);
            let b = tape.leaf(Tensor::from_vec(vec![0.0; n]), false);
            let y = tape.layer_norm(x, g, b, 0.0).unwrap();
            let out = tape.value(y).data();
            let om: f64 = out.iter().sum::<f64>() / n as f64;
            let ov: f64 = out.iter().map(|v| (v - om) * (v - om)).sum::<f64>() / n as f64;
            prop_assert!(om.abs() < 1e-9);
            prop_assert!((ov - 1.0).abs() < 1e-6);
        }
    }
}

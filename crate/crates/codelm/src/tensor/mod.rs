//! Minimal dense-tensor numerics with reverse-mode automatic differentiation.
//!
//! [`Tensor`] is a plain row-major value (shape + data) with no gradient
//! machinery of its own; gradients live on the [`tape::Tape`] that records
//! operations during a forward pass, and persistently on [`Parameter`]s
//! between optimizer steps.
//!
//! Everything is generic over [`Scalar`]: `f32` is the training element
//! type, `f64` is used by gradient-check mode, where central finite
//! differences need more headroom than single precision can give.

pub mod gradcheck;
pub mod kernels;
pub mod tape;

use crate::{Error, Result};

/// Floating-point element type for tensors.
pub trait Scalar:
    num_traits::Float
    + num_traits::NumAssign
    + Default
    + std::fmt::Debug
    + std::fmt::Display
    + Send
    + Sync
    + 'static
{
    /// Dtype tag used by the checkpoint format.
    const DTYPE: &'static str;
    /// Size of one element in bytes.
    const BYTES: usize;

    fn of(v: f64) -> Self;
    fn as_f64(self) -> f64;
    /// The Gauss error function, used by the exact-erf GELU.
    fn erf(self) -> Self;
    fn write_le(self, out: &mut Vec<u8>);
    fn read_le(bytes: &[u8]) -> Self;

    /// exp for bulk elementwise loops. The f32 path is a branch-free
    /// polynomial the compiler can vectorize (~2 ulp); f64 stays on libm,
    /// which the finite-difference checks rely on.
    fn vexp(self) -> Self;
    /// tanh counterpart of [`Scalar::vexp`].
    fn vtanh(self) -> Self;
    /// erf counterpart of [`Scalar::vexp`] (f32 absolute error ≤ 1.5e-7).
    fn verf(self) -> Self;
    /// Logistic function, `1 / (1 + exp(-x))`, built on [`Scalar::vexp`].
    #[inline(always)]
    fn vsigmoid(self) -> Self {
        Self::one() / (Self::one() + (-self).vexp())
    }
}

impl Scalar for f32 {
    const DTYPE: &'static str = "f32";
    const BYTES: usize = 4;

    #[inline(always)]
    fn of(v: f64) -> Self {
        v as f32
    }
    #[inline(always)]
    fn as_f64(self) -> f64 {
        self as f64
    }
    #[inline(always)]
    fn erf(self) -> Self {
        libm::erff(self)
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f32::from_le_bytes(bytes[..4].try_into().unwrap())
    }

    #[inline(always)]
    fn vexp(self) -> Self {
        kernels::exp_f32(self)
    }
    #[inline(always)]
    fn vtanh(self) -> Self {
        kernels::tanh_f32(self)
    }
    #[inline(always)]
    fn verf(self) -> Self {
        kernels::erf_f32(self)
    }
}

impl Scalar for f64 {
    const DTYPE: &'static str = "f64";
    const BYTES: usize = 8;

    #[inline(always)]
    fn of(v: f64) -> Self {
        v
    }
    #[inline(always)]
    fn as_f64(self) -> f64 {
        self
    }
    #[inline(always)]
    fn erf(self) -> Self {
        libm::erf(self)
    }
    fn write_le(self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.to_le_bytes());
    }
    fn read_le(bytes: &[u8]) -> Self {
        f64::from_le_bytes(bytes[..8].try_into().unwrap())
    }

    #[inline(always)]
    fn vexp(self) -> Self {
        self.exp()
    }
    #[inline(always)]
    fn vtanh(self) -> Self {
        self.tanh()
    }
    #[inline(always)]
    fn verf(self) -> Self {
        libm::erf(self)
    }
}

/// Dense row-major tensor. Immutable in normal use; the in-place accessors
/// exist for the optimizer and for construction.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn new(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        let expected: usize = shape.iter().product();
        if expected != data.len() {
            return Err(Error::ShapeMismatch {
                op: "Tensor::new",
                lhs: shape,
                rhs: vec![data.len()],
            });
        }
        Ok(Self { shape, data })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let n = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![T::zero(); n],
        }
    }

    pub fn full(shape: &[usize], v: T) -> Self {
        let n = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![v; n],
        }
    }

    pub fn scalar(v: T) -> Self {
        Self {
            shape: vec![1],
            data: vec![v],
        }
    }

    pub fn from_vec(data: Vec<T>) -> Self {
        Self {
            shape: vec![data.len()],
            data,
        }
    }

    /// Sample i.i.d. normal(0, std) entries using Box-Muller over the given rng.
    pub fn randn(shape: &[usize], std: T, rng: &mut impl rand::Rng) -> Self {
        let n: usize = shape.iter().product();
        let mut data = Vec::with_capacity(n);
        while data.len() < n {
            // (0, 1] to keep the log finite.
            let u1: f64 = 1.0 - rng.gen::<f64>();
            let u2: f64 = rng.gen::<f64>();
            let r = (-2.0 * u1.ln()).sqrt();
            let (s, c) = (2.0 * std::f64::consts::PI * u2).sin_cos();
            data.push(T::of(r * c) * std);
            if data.len() < n {
                data.push(T::of(r * s) * std);
            }
        }
        Self {
            shape: shape.to_vec(),
            data,
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    /// Interpret as a matrix: `[rows, cols]`, or a vector as one row.
    pub fn dims2(&self) -> Result<(usize, usize)> {
        match self.shape.len() {
            2 => Ok((self.shape[0], self.shape[1])),
            1 => Ok((1, self.shape[0])),
            _ => Err(Error::ShapeMismatch {
                op: "dims2",
                lhs: self.shape.clone(),
                rhs: vec![],
            }),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Vertical concatenation of matrices with equal column counts.
    pub fn concat_rows(parts: &[&Tensor<T>]) -> Result<Self> {
        let cols = parts
            .first()
            .map(|t| t.dims2())
            .transpose()?
            .map(|(_, c)| c)
            .unwrap_or(0);
        let mut rows = 0;
        let mut data = Vec::new();
        for p in parts {
            let (r, c) = p.dims2()?;
            if c != cols {
                return Err(Error::ShapeMismatch {
                    op: "concat_rows",
                    lhs: vec![rows, cols],
                    rhs: p.shape.clone(),
                });
            }
            rows += r;
            data.extend_from_slice(&p.data);
        }
        Tensor::new(vec![rows, cols], data)
    }

    /// Copy of rows `start..start + len`.
    pub fn slice_rows(&self, start: usize, len: usize) -> Result<Self> {
        let (rows, cols) = self.dims2()?;
        if start + len > rows {
            return Err(Error::ShapeMismatch {
                op: "slice_rows",
                lhs: self.shape.clone(),
                rhs: vec![start, len],
            });
        }
        Tensor::new(
            vec![len, cols],
            self.data[start * cols..(start + len) * cols].to_vec(),
        )
    }
}

/// A named trainable tensor with a persistent gradient buffer.
///
/// Names are unique within a model and enumeration order is deterministic,
/// so optimizer state and checkpoints can key off them.
#[derive(Clone, Debug)]
pub struct Parameter<T> {
    name: String,
    value: Tensor<T>,
    grad: Vec<T>,
}

impl<T: Scalar> Parameter<T> {
    pub fn new(name: impl Into<String>, value: Tensor<T>) -> Self {
        let grad = vec![T::zero(); value.numel()];
        Self {
            name: name.into(),
            value,
            grad,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self) -> &Tensor<T> {
        &self.value
    }

    pub fn value_mut(&mut self) -> &mut Tensor<T> {
        &mut self.value
    }

    pub fn grad(&self) -> &[T] {
        &self.grad
    }

    pub fn grad_mut(&mut self) -> &mut [T] {
        &mut self.grad
    }

    pub fn zero_grad(&mut self) {
        self.grad.iter_mut().for_each(|g| *g = T::zero());
    }

    /// Accumulate a gradient contribution (e.g. harvested from a tape).
    pub fn add_grad(&mut self, g: &[T]) {
        debug_assert_eq!(g.len(), self.grad.len());
        for (dst, src) in self.grad.iter_mut().zip(g) {
            *dst += *src;
        }
    }

    pub fn numel(&self) -> usize {
        self.value.numel()
    }
}

/// Scale all gradients so the global L2 norm does not exceed `max_norm`.
///
/// Returns the pre-clip norm for logging. The norm is accumulated in f64 in
/// a fixed order, so the result is deterministic for a given gradient set.
pub fn clip_global_norm<T: Scalar>(grads: &mut [&mut [T]], max_norm: T) -> T {
    let mut sq_sum = 0.0_f64;
    for g in grads.iter() {
        for v in g.iter() {
            let v = v.as_f64();
            sq_sum += v * v;
        }
    }
    let total = sq_sum.sqrt();
    if total > max_norm.as_f64() && total > 0.0 {
        let scale = T::of(max_norm.as_f64() / total);
        for g in grads.iter_mut() {
            for v in g.iter_mut() {
                *v *= scale;
            }
        }
    }
    T::of(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_new_rejects_bad_length() {
        assert!(Tensor::<f32>::new(vec![2, 3], vec![0.0; 5]).is_err());
        assert!(Tensor::<f32>::new(vec![2, 3], vec![0.0; 6]).is_ok());
    }

    #[test]
    fn randn_is_deterministic_per_seed() {
        use rand::SeedableRng;
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let x = Tensor::<f32>::randn(&[4, 4], 0.02, &mut a);
        let y = Tensor::<f32>::randn(&[4, 4], 0.02, &mut b);
        assert_eq!(x.data(), y.data());
    }

    #[test]
    fn clip_under_threshold_unchanged() {
        let mut g = vec![0.03_f32, 0.04];
        let norm = clip_global_norm(&mut [&mut g], 0.1);
        assert!((norm - 0.05).abs() < 1e-7);
        assert_eq!(g, vec![0.03, 0.04]);
    }

    #[test]
    fn clip_scales_to_max_norm() {
        // norm 0.5 against max 0.1: every entry scaled by 0.2
        let mut g = vec![0.3_f32, 0.4];
        let norm = clip_global_norm(&mut [&mut g], 0.1);
        assert!((norm - 0.5).abs() < 1e-6);
        assert!((g[0] - 0.06).abs() < 1e-7);
        assert!((g[1] - 0.08).abs() < 1e-7);
    }

    #[test]
    fn clip_zero_grads_noop() {
        let mut g = vec![0.0_f32; 8];
        let norm = clip_global_norm(&mut [&mut g], 0.1);
        assert_eq!(norm, 0.0);
        assert!(g.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn clip_never_exceeds_max_norm() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mut a: Vec<f32> = (0..37).map(|_| rng.gen_range(-2.0..2.0)).collect();
            let mut b: Vec<f32> = (0..11).map(|_| rng.gen_range(-2.0..2.0)).collect();
            clip_global_norm(&mut [&mut a, &mut b], 0.1_f32);
            let total: f64 = a
                .iter()
                .chain(b.iter())
                .map(|v| (*v as f64) * (*v as f64))
                .sum::<f64>()
                .sqrt();
            assert!(total <= 0.1 + 1e-7);
        }
    }
}

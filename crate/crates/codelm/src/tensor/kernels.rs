//! Hot numeric kernels behind the tape operations.
//!
//! Matrix products use the i-k-j loop order so the inner loop is a
//! saxpy over contiguous rows, which LLVM autovectorizes. Backward-pass
//! products reuse the same kernel on an explicitly transposed operand;
//! transposition is cheap next to the multiply at these sizes.
//!
//! Parallel paths split work over output rows with a fixed chunk size, so
//! each element is produced by one thread in one deterministic order —
//! results are bitwise identical regardless of thread count.

use super::Scalar;
use rayon::prelude::*;

/// Below this many multiply-adds the fork/join overhead beats the speedup.
const PAR_FLOP_THRESHOLD: usize = 1 << 20;

fn par_enabled() -> bool {
    rayon::current_num_threads() > 1
}

/// `out[m,n] = a[m,k] · b[k,n]`, accumulating into zeroed `out`.
pub fn matmul<T: Scalar>(a: &[T], b: &[T], m: usize, k: usize, n: usize, out: &mut [T]) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(out.len(), m * n);
    if m * k * n >= PAR_FLOP_THRESHOLD && par_enabled() && m >= 8 {
        out.par_chunks_mut(4 * n)
            .zip(a.par_chunks(4 * k))
            .for_each(|(out_rows, a_rows)| matmul_tile(a_rows, b, k, n, out_rows));
    } else {
        for (out_rows, a_rows) in out.chunks_mut(4 * n).zip(a.chunks(4 * k)) {
            matmul_tile(a_rows, b, k, n, out_rows);
        }
    }
}

/// Product for a tile of up to four output rows.
#[inline]
fn matmul_tile<T: Scalar>(a_rows: &[T], b: &[T], k: usize, n: usize, out_rows: &mut [T]) {
    if a_rows.len() == 4 * k {
        matmul_row4(a_rows, b, k, n, out_rows);
    } else {
        for (out_row, a_row) in out_rows.chunks_exact_mut(n).zip(a_rows.chunks_exact(k)) {
            matmul_row(a_row, b, n, out_row);
        }
    }
}

/// Four output rows at once: each loaded `b` row feeds four accumulator
/// rows, quadrupling the arithmetic per byte moved. The k-term association
/// per output element is fixed by the source (ascending, grouped in fours),
/// never by thread count or input values, so results are reproducible.
#[inline]
fn matmul_row4<T: Scalar>(a_rows: &[T], b: &[T], k: usize, n: usize, out_rows: &mut [T]) {
    let (a0r, rest) = a_rows.split_at(k);
    let (a1r, rest) = rest.split_at(k);
    let (a2r, a3r) = rest.split_at(k);
    let (o0, rest) = out_rows.split_at_mut(n);
    let (o1, rest) = rest.split_at_mut(n);
    let (o2, o3) = rest.split_at_mut(n);

    let mut p = 0;
    while p + 8 <= k {
        let bp: [&[T]; 8] = std::array::from_fn(|u| &b[(p + u) * n..(p + u + 1) * n]);
        let ca: [T; 8] = std::array::from_fn(|u| a0r[p + u]);
        let cb: [T; 8] = std::array::from_fn(|u| a1r[p + u]);
        let cc: [T; 8] = std::array::from_fn(|u| a2r[p + u]);
        let cd: [T; 8] = std::array::from_fn(|u| a3r[p + u]);
        for j in 0..n {
            let v: [T; 8] = std::array::from_fn(|u| bp[u][j]);
            let mut s0 = ca[0] * v[0];
            let mut s1 = cb[0] * v[0];
            let mut s2 = cc[0] * v[0];
            let mut s3 = cd[0] * v[0];
            for u in 1..8 {
                s0 += ca[u] * v[u];
                s1 += cb[u] * v[u];
                s2 += cc[u] * v[u];
                s3 += cd[u] * v[u];
            }
            o0[j] += s0;
            o1[j] += s1;
            o2[j] += s2;
            o3[j] += s3;
        }
        p += 8;
    }
    while p + 4 <= k {
        let b0 = &b[p * n..(p + 1) * n];
        let b1 = &b[(p + 1) * n..(p + 2) * n];
        let b2 = &b[(p + 2) * n..(p + 3) * n];
        let b3 = &b[(p + 3) * n..(p + 4) * n];
        let (a00, a01, a02, a03) = (a0r[p], a0r[p + 1], a0r[p + 2], a0r[p + 3]);
        let (a10, a11, a12, a13) = (a1r[p], a1r[p + 1], a1r[p + 2], a1r[p + 3]);
        let (a20, a21, a22, a23) = (a2r[p], a2r[p + 1], a2r[p + 2], a2r[p + 3]);
        let (a30, a31, a32, a33) = (a3r[p], a3r[p + 1], a3r[p + 2], a3r[p + 3]);
        for j in 0..n {
            let (v0, v1, v2, v3) = (b0[j], b1[j], b2[j], b3[j]);
            o0[j] += a00 * v0 + a01 * v1 + a02 * v2 + a03 * v3;
            o1[j] += a10 * v0 + a11 * v1 + a12 * v2 + a13 * v3;
            o2[j] += a20 * v0 + a21 * v1 + a22 * v2 + a23 * v3;
            o3[j] += a30 * v0 + a31 * v1 + a32 * v2 + a33 * v3;
        }
        p += 4;
    }
    while p < k {
        let brow = &b[p * n..(p + 1) * n];
        let (c0, c1, c2, c3) = (a0r[p], a1r[p], a2r[p], a3r[p]);
        for j in 0..n {
            let v = brow[j];
            o0[j] += c0 * v;
            o1[j] += c1 * v;
            o2[j] += c2 * v;
            o3[j] += c3 * v;
        }
        p += 1;
    }
}

/// One output row, with k unrolled 8-wide so each `out` element is loaded
/// and stored once per eight multiply-adds instead of once per one. The
/// k-term association is fixed by the source (ascending, grouped in eights),
/// never by thread count or input values, so results are reproducible.
#[inline]
fn matmul_row<T: Scalar>(a_row: &[T], b: &[T], n: usize, out_row: &mut [T]) {
    let k = a_row.len();
    let mut p = 0;
    while p + 8 <= k {
        let a0 = a_row[p];
        let a1 = a_row[p + 1];
        let a2 = a_row[p + 2];
        let a3 = a_row[p + 3];
        let a4 = a_row[p + 4];
        let a5 = a_row[p + 5];
        let a6 = a_row[p + 6];
        let a7 = a_row[p + 7];
        let b0 = &b[p * n..(p + 1) * n];
        let b1 = &b[(p + 1) * n..(p + 2) * n];
        let b2 = &b[(p + 2) * n..(p + 3) * n];
        let b3 = &b[(p + 3) * n..(p + 4) * n];
        let b4 = &b[(p + 4) * n..(p + 5) * n];
        let b5 = &b[(p + 5) * n..(p + 6) * n];
        let b6 = &b[(p + 6) * n..(p + 7) * n];
        let b7 = &b[(p + 7) * n..(p + 8) * n];
        for j in 0..n {
            out_row[j] += a0 * b0[j]
                + a1 * b1[j]
                + a2 * b2[j]
                + a3 * b3[j]
                + a4 * b4[j]
                + a5 * b5[j]
                + a6 * b6[j]
                + a7 * b7[j];
        }
        p += 8;
    }
    for (&aik, b_row) in a_row[p..].iter().zip(b[p * n..].chunks_exact(n)) {
        for (o, &bv) in out_row.iter_mut().zip(b_row) {
            *o += aik * bv;
        }
    }
}

// Bounds past which single-precision exp saturates: the polynomial's 2^n
// scale factor must stay a normal float, so the window is slightly narrower
// than f32's full range. Outside it the true value is 0 or over 1.7e38.
const EXP_F32_MIN: f32 = -87.336_54;
const EXP_F32_MAX: f32 = 88.029_69;

/// Single-precision exp as a branch-free polynomial (Cephes expf form,
/// ~2 ulp). Inputs at or below the underflow bound come out exactly 0,
/// so softmax masks behave as with libm; NaN propagates.
#[inline(always)]
pub fn exp_f32(x: f32) -> f32 {
    const LOG2E: f32 = std::f32::consts::LOG2_E;
    // ln 2 split so the high part subtracts exactly (its low bits are zero).
    const LN2_HI: f32 = 0.693_359_375;
    const LN2_LO: f32 = -2.121_944_4e-4;
    let xc = x.clamp(EXP_F32_MIN, EXP_F32_MAX);
    let n = (xc * LOG2E).round();
    let r = (-n).mul_add(LN2_HI, xc);
    let r = (-n).mul_add(LN2_LO, r);
    let mut p = 1.987_569_1e-4_f32;
    p = p.mul_add(r, 1.398_199_9e-3);
    p = p.mul_add(r, 8.333_452e-3);
    p = p.mul_add(r, 4.166_579_6e-2);
    p = p.mul_add(r, 0.166_666_65);
    p = p.mul_add(r, 0.5);
    let y = (p * r).mul_add(r, r + 1.0);
    let scale = f32::from_bits(((n as i32 + 127) << 23) as u32);
    let y = y * scale;
    if x < EXP_F32_MIN {
        0.0
    } else if x > EXP_F32_MAX {
        f32::INFINITY
    } else {
        y
    }
}

/// Single-precision tanh as a clamped rational approximation (the
/// standard 13/6-degree minimax pair), branch-free and vectorizable.
/// Exact at 0; saturates within a few ulp of ±1 past the clamp.
#[inline(always)]
pub fn tanh_f32(x: f32) -> f32 {
    // edge of the domain the rational pair was fitted on
    let xc = x.clamp(-7.905_311, 7.905_311);
    let x2 = xc * xc;
    let mut p = -2.760_768_5e-16_f32;
    p = p.mul_add(x2, 2.000_187_9e-13);
    p = p.mul_add(x2, -8.604_672e-11);
    p = p.mul_add(x2, 5.122_297_1e-8);
    p = p.mul_add(x2, 1.485_722_4e-5);
    p = p.mul_add(x2, 6.372_619_3e-4);
    p = p.mul_add(x2, 4.893_524_6e-3);
    let num = p * xc;
    let mut q = 1.198_258_4e-6_f32;
    q = q.mul_add(x2, 1.185_347_1e-4);
    q = q.mul_add(x2, 2.268_434_6e-3);
    q = q.mul_add(x2, 4.893_525_2e-3);
    num / q
}

/// Single-precision erf via the Abramowitz-Stegun rational form.
/// Absolute error stays under ~4e-7 once f32 rounding is included;
/// branch-free, and odd symmetry is exact.
#[inline(always)]
pub fn erf_f32(x: f32) -> f32 {
    let ax = x.abs();
    let t = 1.0 / 0.327_591_1_f32.mul_add(ax, 1.0);
    let mut p = 1.061_405_4_f32;
    p = p.mul_add(t, -1.453_152);
    p = p.mul_add(t, 1.421_413_7);
    p = p.mul_add(t, -0.284_496_74);
    p = p.mul_add(t, 0.254_829_6);
    let y = 1.0 - p * t * exp_f32(-ax * ax);
    y.copysign(x)
}

/// `out[cols, rows] = src[rows, cols]` transposed.
pub fn transpose<T: Scalar>(src: &[T], rows: usize, cols: usize, out: &mut [T]) {
    debug_assert_eq!(src.len(), rows * cols);
    debug_assert_eq!(out.len(), rows * cols);
    for (i, row) in src.chunks_exact(cols).enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out[j * rows + i] = v;
        }
    }
}

pub fn transposed<T: Scalar>(src: &[T], rows: usize, cols: usize) -> Vec<T> {
    let mut out = vec![T::zero(); rows * cols];
    transpose(src, rows, cols, &mut out);
    out
}

/// Numerically stabilized softmax over each row, in place.
///
/// `-inf` entries come out exactly zero. Returns the index of the first row
/// whose entries are all `-inf` (a degenerate slice), if any.
///
/// Max and sum reduce through eight fixed lanes so the passes vectorize;
/// the lane-fold order is part of the output's deterministic definition.
pub fn softmax_rows_in_place<T: Scalar>(data: &mut [T], cols: usize) -> Option<usize> {
    for (r, row) in data.chunks_exact_mut(cols).enumerate() {
        let max = fold8(row, T::neg_infinity(), T::max);
        if !max.is_finite() {
            return Some(r);
        }
        for v in row.iter_mut() {
            // vexp(-inf - max) is exactly 0 for finite max.
            *v = (*v - max).vexp();
        }
        let sum = fold8(row, T::zero(), |a, b| a + b);
        let inv = T::one() / sum;
        for v in row.iter_mut() {
            *v *= inv;
        }
    }
    None
}

/// Reduction over eight interleaved lanes, folded pairwise at the end.
/// The grouping is fixed by element index, so the result is reproducible.
#[inline]
fn fold8<T: Scalar>(xs: &[T], init: T, f: impl Fn(T, T) -> T + Copy) -> T {
    let mut lanes = [init; 8];
    let mut chunks = xs.chunks_exact(8);
    for c in &mut chunks {
        for (l, &v) in lanes.iter_mut().zip(c) {
            *l = f(*l, v);
        }
    }
    for (l, &v) in lanes.iter_mut().zip(chunks.remainder()) {
        *l = f(*l, v);
    }
    let q = [
        f(lanes[0], lanes[4]),
        f(lanes[1], lanes[5]),
        f(lanes[2], lanes[6]),
        f(lanes[3], lanes[7]),
    ];
    f(f(q[0], q[2]), f(q[1], q[3]))
}

/// Per-row mean and reciprocal standard deviation for layer normalization.
/// Variance is the population variance over the row.
pub fn row_norm_stats<T: Scalar>(row: &[T], eps: T) -> (T, T) {
    let n = T::of(row.len() as f64);
    let mut mean = T::zero();
    for &v in row {
        mean += v;
    }
    mean /= n;
    let mut var = T::zero();
    for &v in row {
        let d = v - mean;
        var += d * d;
    }
    var /= n;
    (mean, T::one() / (var + eps).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent naive triple-loop product used as the matmul oracle.
    fn matmul_naive(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                let mut s = 0.0;
                for p in 0..k {
                    s += a[i * k + p] * b[p * n + j];
                }
                out[i * n + j] = s;
            }
        }
        out
    }

    #[test]
    fn matmul_identity() {
        let eye = vec![1.0_f64, 0.0, 0.0, 1.0];
        let b = vec![5.0, 6.0, 7.0, 8.0];
        let mut out = vec![0.0; 4];
        matmul(&eye, &b, 2, 2, 2, &mut out);
        assert_eq!(out, b);
    }

    #[test]
    fn matmul_matches_naive_oracle() {
        // Frozen 2x2 case first: [[1,2],[3,4]]·[[5,6],[7,8]] = [[19,22],[43,50]]
        let a = vec![1.0_f64, 2.0, 3.0, 4.0];
        let b = vec![5.0, 6.0, 7.0, 8.0];
        let mut out = vec![0.0; 4];
        matmul(&a, &b, 2, 2, 2, &mut out);
        assert_eq!(out, vec![19.0, 22.0, 43.0, 50.0]);

        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for &(m, k, n) in &[(1usize, 1usize, 1usize), (3, 5, 2), (7, 4, 9), (16, 16, 16)] {
            let a: Vec<f64> = (0..m * k).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let b: Vec<f64> = (0..k * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mut out = vec![0.0; m * n];
            matmul(&a, &b, m, k, n, &mut out);
            let want = matmul_naive(&a, &b, m, k, n);
            for (x, y) in out.iter().zip(&want) {
                assert!((x - y).abs() < 1e-12, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn transpose_roundtrip() {
        let src = vec![1.0_f32, 2.0, 3.0, 4.0, 5.0, 6.0];
        let t = transposed(&src, 2, 3);
        assert_eq!(t, vec![1.0, 4.0, 2.0, 5.0, 3.0, 6.0]);
        let back = transposed(&t, 3, 2);
        assert_eq!(back, src);
    }

    #[test]
    fn softmax_uniform_and_masked() {
        let mut row = vec![0.0_f64, 0.0];
        assert!(softmax_rows_in_place(&mut row, 2).is_none());
        assert_eq!(row, vec![0.5, 0.5]);

        let mut masked = vec![1.0_f64, f64::NEG_INFINITY, 2.0];
        assert!(softmax_rows_in_place(&mut masked, 3).is_none());
        assert_eq!(masked[1], 0.0);
        assert!((masked.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn softmax_all_masked_is_degenerate() {
        let mut row = vec![f64::NEG_INFINITY; 3];
        assert_eq!(softmax_rows_in_place(&mut row, 3), Some(0));
    }

    fn ulp_diff(a: f32, b: f32) -> u32 {
        if a == b {
            return 0;
        }
        let (ia, ib) = (a.to_bits() as i64, b.to_bits() as i64);
        // same sign assumed by callers; both values here are positive
        (ia - ib).unsigned_abs() as u32
    }

    #[test]
    fn exp_f32_tracks_the_reference_within_two_ulp() {
        let mut x = -87.0_f32;
        while x < 88.0 {
            let got = exp_f32(x);
            let want = (x as f64).exp() as f32;
            assert!(
                ulp_diff(got, want) <= 2,
                "exp({x}) = {got:e}, reference {want:e}"
            );
            x += 0.0137;
        }
    }

    #[test]
    fn exp_f32_edge_cases() {
        assert_eq!(exp_f32(0.0), 1.0);
        assert_eq!(exp_f32(f32::NEG_INFINITY), 0.0);
        assert_eq!(exp_f32(-200.0), 0.0);
        assert_eq!(exp_f32(f32::INFINITY), f32::INFINITY);
        assert_eq!(exp_f32(200.0), f32::INFINITY);
        assert!(exp_f32(f32::NAN).is_nan());
        // just inside the clamp bounds the result is still finite / nonzero
        assert!(exp_f32(EXP_F32_MAX).is_finite());
        assert!(exp_f32(EXP_F32_MIN) > 0.0);
    }

    #[test]
    fn tanh_f32_tracks_the_reference() {
        let mut x = -9.0_f32;
        while x < 9.0 {
            let got = tanh_f32(x);
            let want = (x as f64).tanh() as f32;
            assert!(
                (got - want).abs() <= 4.0 * f32::EPSILON,
                "tanh({x}) = {got}, reference {want}"
            );
            x += 0.0113;
        }
        assert_eq!(tanh_f32(0.0), 0.0);
        // saturates a few ulp shy of +-1 (the clamped rational never
        // quite reaches it)
        assert!((tanh_f32(50.0) - 1.0).abs() <= 4.0 * f32::EPSILON);
        assert!((tanh_f32(-50.0) + 1.0).abs() <= 4.0 * f32::EPSILON);
        assert_eq!(tanh_f32(50.0), -tanh_f32(-50.0));
        assert!(tanh_f32(f32::NAN).is_nan());
    }

    #[test]
    fn erf_f32_tracks_libm_and_is_exactly_odd() {
        let mut x = 0.0_f32;
        while x < 6.0 {
            let got = erf_f32(x);
            let want = libm::erf(x as f64) as f32;
            assert!(
                (got - want).abs() <= 4.0e-7,
                "erf({x}) = {got}, reference {want}"
            );
            assert_eq!(erf_f32(-x), -got);
            x += 0.0071;
        }
        // the coefficient sum is 1e-9 shy of one, so zero lands 2^-24 off;
        // downstream use multiplies by x, which kills the residue at 0
        assert!(erf_f32(0.0).abs() <= 1.0e-7);
        assert_eq!(erf_f32(10.0), 1.0);
        assert_eq!(erf_f32(-10.0), -1.0);
    }
}

#[cfg(test)]
mod bench {
    use super::*;

    #[test]
    #[ignore = "manual throughput probe"]
    fn matmul_throughput_probe() {
        // square plus the shapes that dominate training at width 128
        for (m, k, n) in [
            (512, 512, 512),
            (2048, 128, 512),
            (2048, 512, 128),
            (2048, 128, 128),
            (128, 32, 256),
            (256, 128, 32),
            (16, 128, 512),
        ] {
            let a = vec![1.000_1_f32; m * k];
            let b = vec![0.999_9_f32; k * n];
            let mut out = vec![0.0_f32; m * n];
            let flops_per = 2.0 * (m * k * n) as f64;
            let reps = ((2e9 / flops_per) as usize).max(3);
            let start = std::time::Instant::now();
            for _ in 0..reps {
                out.iter_mut().for_each(|v| *v = 0.0);
                matmul(&a, &b, m, k, n, &mut out);
            }
            let secs = start.elapsed().as_secs_f64();
            let gflops = flops_per * reps as f64 / secs / 1e9;
            println!("matmul {m}x{k}x{n}: {gflops:.2} GFLOP/s");
            assert!(out[0].is_finite());
        }
    }
}

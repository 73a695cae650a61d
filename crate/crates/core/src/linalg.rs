//! Dense complex matrices, unitarity checks, Haar-random unitaries and
//! pattern sub-matrices.
//!
//! Matrices are value-immutable after construction so they can be shared
//! freely across worker threads. The only stateful object in the crate is
//! [`RngStream`], a counter-based generator: every draw is a keyed hash of
//! a 64-bit counter, so a stream is reproduced bit-for-bit by
//! `(seed, stream_id)` on any platform, and distinct stream ids give
//! statistically independent sequences for parallel workers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::OccupationPattern;

/// Max-norm tolerance for `‖U†U − I‖` accepted at unitary construction.
///
/// Well above double-precision accumulation error at the dimensions this
/// crate targets (≤ ~30), well below anything physically meaningful.
pub const UNITARITY_TOL: f64 = 1e-10;

// ---------------------------------------------------------------------------
// RngStream
// ---------------------------------------------------------------------------

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM_SALT: u64 = 0xC2B2_AE3D_27D4_EB4F;

/// Finalizer with full avalanche (the SplitMix64 / MurmurHash3 mixer).
#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based, splittable pseudo-random stream.
///
/// Draw `i` of stream `(seed, stream_id)` is
///
/// ```text
/// out_i = mix64( mix64( i·GOLDEN ^ k0 ) ^ k1 )
/// k0 = mix64(seed ^ GOLDEN),  k1 = mix64(stream_id ^ STREAM_SALT)
/// ```
///
/// where `mix64` is the SplitMix64 finalizer. The counter is spread by a
/// golden-ratio Weyl step and pushed through two keyed avalanche rounds,
/// so consecutive counters decorrelate fully and the keys select
/// effectively unrelated bijections per `(seed, stream_id)`. All
/// arithmetic is wrapping 64-bit integer math: identical output on every
/// platform.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_id: u64,
    counter: u64,
    key0: u64,
    key1: u64,
}

impl RngStream {
    /// Stream `stream_id` of the generator family seeded by `seed`.
    pub fn new(seed: u64, stream_id: u64) -> Self {
        RngStream {
            seed,
            stream_id,
            counter: 0,
            key0: mix64(seed ^ GOLDEN),
            key1: mix64(stream_id ^ STREAM_SALT),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_id(&self) -> u64 {
        self.stream_id
    }

    /// Number of draws consumed so far.
    pub fn counter(&self) -> u64 {
        self.counter
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        let c = self.counter;
        self.counter = self.counter.wrapping_add(1);
        mix64(mix64(c.wrapping_mul(GOLDEN) ^ self.key0) ^ self.key1)
    }

    /// Uniform double in `[0, 1)` from the top 53 bits of one draw.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.next_u64() >> 11) as f64 * SCALE
    }

    /// Uniform double in `(0, 1]`; safe as a logarithm argument.
    #[inline]
    pub fn next_f64_open(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        ((self.next_u64() >> 11) + 1) as f64 * SCALE
    }

    /// Pair of independent standard normals (Box–Muller).
    pub fn next_normal_pair(&mut self) -> (f64, f64) {
        let u = self.next_f64_open();
        let v = self.next_f64();
        let radius = (-2.0 * u.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * v;
        (radius * angle.cos(), radius * angle.sin())
    }

    /// Standard complex normal: `E z = 0`, `E |z|² = 1`.
    pub fn next_complex_normal(&mut self) -> Complex64 {
        let (re, im) = self.next_normal_pair();
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    }
}

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

/// Dense row-major complex matrix, immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries. Rejects empty shapes,
    /// entry-count mismatches and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("matrix must have at least one row and column"));
        }
        if data.len() != rows * cols {
            return Err(Error::invalid(format!(
                "matrix shape {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if !data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::invalid("matrix entries must be finite"));
        }
        Ok(ComplexMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("matrix rows must all have the same length"));
        }
        ComplexMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        ComplexMatrix::new(dim, dim, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Largest entry modulus; the magnitude scale of the matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn transpose(&self) -> ComplexMatrix {
        let mut data = vec![Complex64::new(0.0, 0.0); self.data.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                data[j * self.rows + i] = self.get(i, j);
            }
        }
        ComplexMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Serializes a square matrix to the interchange JSON format
    /// `{"dim": d, "re": [[..]], "im": [[..]]}`.
    pub fn to_json(&self) -> Result<String> {
        if !self.is_square() {
            return Err(Error::Format("matrix JSON format holds square matrices only".into()));
        }
        let dim = self.rows;
        let grid = |sel: fn(&Complex64) -> f64| -> Vec<Vec<f64>> {
            (0..dim)
                .map(|i| (0..dim).map(|j| sel(&self.data[i * dim + j])).collect())
                .collect()
        };
        let json = MatrixJson {
            dim,
            re: grid(|z| z.re),
            im: grid(|z| z.im),
        };
        serde_json::to_string(&json).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: MatrixJson =
            serde_json::from_str(text).map_err(|e| Error::Format(format!("matrix JSON: {e}")))?;
        let dim = json.dim;
        if dim == 0 {
            return Err(Error::Format("matrix JSON: dim must be >= 1".into()));
        }
        if json.re.len() != dim || json.im.len() != dim {
            return Err(Error::Format("matrix JSON: row count does not match dim".into()));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (re_row, im_row) in json.re.iter().zip(&json.im) {
            if re_row.len() != dim || im_row.len() != dim {
                return Err(Error::Format("matrix JSON: column count does not match dim".into()));
            }
            for (&re, &im) in re_row.iter().zip(im_row) {
                data.push(Complex64::new(re, im));
            }
        }
        ComplexMatrix::new(dim, dim, data)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

/// `max_ij |(M†M − I)_ij|`, the unitarity defect of a square matrix.
pub fn unitarity_defect(m: &ComplexMatrix) -> f64 {
    debug_assert!(m.is_square());
    let n = m.rows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for k in 0..n {
                dot += m.get(k, i).conj() * m.get(k, j);
            }
            if i == j {
                dot -= Complex64::new(1.0, 0.0);
            }
            worst = worst.max(dot.norm());
        }
    }
    worst
}

/// True iff `‖M†M − I‖_max ≤ tol`. Non-square input is an error.
pub fn check_unitary(m: &ComplexMatrix, tol: f64) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::invalid("check_unitary requires a square matrix"));
    }
    Ok(unitarity_defect(m) <= tol)
}

// ---------------------------------------------------------------------------
// UnitaryMatrix
// ---------------------------------------------------------------------------

/// A square matrix verified unitary to [`UNITARITY_TOL`] at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    matrix: ComplexMatrix,
}

impl UnitaryMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::invalid("unitary matrix must be square"));
        }
        let defect = unitarity_defect(&matrix);
        if defect > UNITARITY_TOL {
            return Err(Error::invalid(format!(
                "matrix is not unitary: ‖U†U − I‖_max = {defect:.3e} exceeds {UNITARITY_TOL:.0e}"
            )));
        }
        Ok(UnitaryMatrix { matrix })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        UnitaryMatrix::new(ComplexMatrix::identity(dim)?)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.matrix.get(i, j)
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// New unitary with column `j` taken from column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<UnitaryMatrix> {
        let n = self.dim();
        check_permutation(perm, n)?;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for &p in perm {
                data.push(self.get(i, p));
            }
        }
        UnitaryMatrix::new(ComplexMatrix::new(n, n, data)?)
    }

    /// New unitary with row `i` taken from row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<UnitaryMatrix> {
        let n = self.dim();
        check_permutation(perm, n)?;
        let mut data = Vec::with_capacity(n * n);
        for &p in perm {
            for j in 0..n {
                data.push(self.get(p, j));
            }
        }
        UnitaryMatrix::new(ComplexMatrix::new(n, n, data)?)
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::invalid("permutation length must match dimension"));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::invalid("not a permutation of 0..dim"));
        }
        seen[p] = true;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Haar sampling
// ---------------------------------------------------------------------------

/// Draws a Haar-distributed `dim × dim` unitary.
///
/// A Ginibre matrix (i.i.d. standard complex normals) is QR-factorized
/// with Householder reflections and each column of Q is multiplied by the
/// phase of the matching diagonal entry of R. That phase fix makes the
/// factorization the unique one with positive real diagonal, whose Q is
/// exactly Haar; the raw Householder Q alone carries the reflector phase
/// convention and is only orthonormal, not Haar.
pub fn haar_unitary(dim: usize, rng: &mut RngStream) -> Result<UnitaryMatrix> {
    if dim == 0 {
        return Err(Error::invalid("haar_unitary requires dim >= 1"));
    }
    let mut a: Vec<Complex64> = (0..dim * dim).map(|_| rng.next_complex_normal()).collect();
    let (mut q, r_diag) = householder_qr(&mut a, dim);
    for j in 0..dim {
        let d = r_diag[j];
        let scale = d.norm();
        let phase = if scale == 0.0 { Complex64::new(1.0, 0.0) } else { d / scale };
        for i in 0..dim {
            q[i * dim + j] *= phase;
        }
    }
    UnitaryMatrix::new(ComplexMatrix::new(dim, dim, q)?)
}

/// In-place Householder QR of a flat row-major `n × n` matrix. Returns the
/// accumulated Q (flat) and the diagonal of R.
fn householder_qr(a: &mut [Complex64], n: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    // Hermitian reflectors H = I − τ v v† with v = x − β e₁ and
    // β = −(x₀/|x₀|)·‖x‖, so Hx = β e₁ and ‖v‖² never cancels.
    let mut reflectors: Vec<(usize, Vec<Complex64>, f64)> = Vec::with_capacity(n);
    for j in 0..n {
        let norm_sqr: f64 = (j..n).map(|i| a[i * n + j].norm_sqr()).sum();
        if norm_sqr == 0.0 {
            continue;
        }
        let norm = norm_sqr.sqrt();
        let head = a[j * n + j];
        let phase = if head.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { head / head.norm() };
        let beta = -phase * norm;
        let mut v: Vec<Complex64> = (j..n).map(|i| a[i * n + j]).collect();
        v[0] -= beta;
        let tau = 2.0 / v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        for c in j..n {
            let mut w = Complex64::new(0.0, 0.0);
            for (t, i) in (j..n).enumerate() {
                w += v[t].conj() * a[i * n + c];
            }
            w *= tau;
            for (t, i) in (j..n).enumerate() {
                a[i * n + c] -= w * v[t];
            }
        }
        reflectors.push((j, v, tau));
    }
    let r_diag: Vec<Complex64> = (0..n).map(|j| a[j * n + j]).collect();

    let mut q = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        q[i * n + i] = Complex64::new(1.0, 0.0);
    }
    for (j, v, tau) in reflectors.iter().rev() {
        for c in 0..n {
            let mut w = Complex64::new(0.0, 0.0);
            for (t, i) in (*j..n).enumerate() {
                w += v[t].conj() * q[i * n + c];
            }
            w *= *tau;
            for (t, i) in (*j..n).enumerate() {
                q[i * n + c] -= w * v[t];
            }
        }
    }
    (q, r_diag)
}

// ---------------------------------------------------------------------------
// Pattern sub-matrices
// ---------------------------------------------------------------------------

/// The `n × n` matrix with column `j` of `u` repeated `input[j]` times and
/// row `i` repeated `output[i]` times, modes in ascending order.
///
/// Column multiplicities come from the input pattern, row multiplicities
/// from the output pattern.
pub fn submatrix(
    u: &UnitaryMatrix,
    input: &OccupationPattern,
    output: &OccupationPattern,
) -> Result<ComplexMatrix> {
    let m = u.dim();
    if input.num_modes() != m || output.num_modes() != m {
        return Err(Error::invalid(format!(
            "pattern lengths ({}, {}) must equal the unitary dimension {m}",
            input.num_modes(),
            output.num_modes()
        )));
    }
    if input.total() != output.total() {
        return Err(Error::invalid(format!(
            "photon totals differ: input {} vs output {}",
            input.total(),
            output.total()
        )));
    }
    if input.total() == 0 {
        return Err(Error::invalid("patterns must carry at least one photon"));
    }
    let expand = |p: &OccupationPattern| -> Vec<usize> {
        p.counts()
            .iter()
            .enumerate()
            .flat_map(|(mode, &c)| std::iter::repeat(mode).take(c as usize))
            .collect()
    };
    let col_modes = expand(input);
    let row_modes = expand(output);
    let n = col_modes.len();
    let mut data = Vec::with_capacity(n * n);
    for &r in &row_modes {
        for &c in &col_modes {
            data.push(u.get(r, c));
        }
    }
    ComplexMatrix::new(n, n, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pat(counts: &[u32]) -> OccupationPattern {
        OccupationPattern::new(counts.to_vec())
    }

    #[test]
    fn rng_is_deterministic_per_seed_and_stream() {
        let mut a = RngStream::new(42, 7);
        let mut b = RngStream::new(42, 7);
        for _ in 0..64 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn rng_streams_differ() {
        let mut a = RngStream::new(42, 0);
        let mut b = RngStream::new(42, 1);
        let hits = (0..64).filter(|_| a.next_u64() == b.next_u64()).count();
        assert_eq!(hits, 0);
    }

    #[test]
    fn rng_uniform_f64_in_unit_interval() {
        let mut rng = RngStream::new(1, 0);
        let mut sum = 0.0;
        for _ in 0..10_000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
            sum += u;
        }
        let mean = sum / 10_000.0;
        // SE of the mean is ~0.0029.
        assert!((mean - 0.5).abs() < 0.01, "uniform mean {mean}");
    }

    #[test]
    fn rng_normals_have_unit_variance() {
        let mut rng = RngStream::new(3, 0);
        let n = 20_000;
        let mut sum = 0.0;
        let mut sum_sqr = 0.0;
        for _ in 0..n {
            let (x, y) = rng.next_normal_pair();
            sum += x + y;
            sum_sqr += x * x + y * y;
        }
        let mean = sum / (2 * n) as f64;
        let var = sum_sqr / (2 * n) as f64 - mean * mean;
        assert!(mean.abs() < 0.02, "normal mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "normal variance {var}");
    }

    #[test]
    fn matrix_rejects_nonfinite_entries() {
        let err = ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = ComplexMatrix::from_rows(vec![
            vec![c(1.0, -0.5), c(0.25, 0.0)],
            vec![c(0.0, 1.0), c(-1.0, 1e-17)],
        ])
        .unwrap();
        let text = m.to_json().unwrap();
        let back = ComplexMatrix::from_json(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn matrix_json_rejects_inconsistent_shape() {
        let text = r#"{"dim": 2, "re": [[1.0, 0.0]], "im": [[0.0, 0.0]]}"#;
        assert!(matches!(ComplexMatrix::from_json(text), Err(Error::Format(_))));
    }

    #[test]
    fn check_unitary_on_identity_and_perturbation() {
        let id = ComplexMatrix::identity(3).unwrap();
        assert!(check_unitary(&id, 1e-12).unwrap());

        let mut data = id.entries().to_vec();
        data[1] += c(1e-3, 0.0);
        let bumped = ComplexMatrix::new(3, 3, data).unwrap();
        assert!(!check_unitary(&bumped, 1e-10).unwrap());
    }

    #[test]
    fn check_unitary_rejects_nonsquare() {
        let m = ComplexMatrix::new(1, 2, vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(matches!(check_unitary(&m, 1e-10), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn haar_rejects_dim_zero() {
        let mut rng = RngStream::new(0, 0);
        assert!(matches!(haar_unitary(0, &mut rng), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn haar_dim_one_is_a_pure_phase() {
        for seed in 0..20 {
            let mut rng = RngStream::new(seed, 0);
            let u = haar_unitary(1, &mut rng).unwrap();
            assert!((u.get(0, 0).norm() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn haar_passes_unitarity_check_at_various_dims() {
        for (seed, dim) in [(1u64, 2usize), (2, 3), (3, 5), (4, 8), (5, 13), (6, 21)] {
            let mut rng = RngStream::new(seed, 0);
            let u = haar_unitary(dim, &mut rng).unwrap();
            assert!(check_unitary(u.as_matrix(), UNITARITY_TOL).unwrap(), "dim {dim}");
        }
    }

    #[test]
    fn haar_is_bit_reproducible() {
        let mut a = RngStream::new(99, 4);
        let mut b = RngStream::new(99, 4);
        let u = haar_unitary(6, &mut a).unwrap();
        let v = haar_unitary(6, &mut b).unwrap();
        assert_eq!(u.as_matrix(), v.as_matrix());
    }

    /// Monte Carlo over the Haar ensemble: each |u_ij|² must average 1/dim.
    #[test]
    fn haar_moduli_match_haar_first_moment() {
        let dim = 4;
        let draws = 100_000;
        let mut rng = RngStream::new(2024, 0);
        let mut sum = vec![0.0f64; dim * dim];
        let mut sum_sqr = vec![0.0f64; dim * dim];
        for _ in 0..draws {
            let u = haar_unitary(dim, &mut rng).unwrap();
            for i in 0..dim {
                for j in 0..dim {
                    let p = u.get(i, j).norm_sqr();
                    sum[i * dim + j] += p;
                    sum_sqr[i * dim + j] += p * p;
                }
            }
        }
        let expect = 1.0 / dim as f64;
        for idx in 0..dim * dim {
            let mean = sum[idx] / draws as f64;
            let var = sum_sqr[idx] / draws as f64 - mean * mean;
            let se = (var / draws as f64).sqrt();
            assert!(
                (mean - expect).abs() <= 3.0 * se,
                "entry {idx}: mean {mean} vs {expect} (SE {se})"
            );
        }
    }

    #[test]
    fn submatrix_with_unit_multiplicities_is_the_matrix() {
        let mut rng = RngStream::new(5, 0);
        let u = haar_unitary(2, &mut rng).unwrap();
        let sub = submatrix(&u, &pat(&[1, 1]), &pat(&[1, 1])).unwrap();
        assert_eq!(&sub, u.as_matrix());
    }

    #[test]
    fn submatrix_repeats_columns() {
        let mut rng = RngStream::new(6, 0);
        let u = haar_unitary(2, &mut rng).unwrap();
        let sub = submatrix(&u, &pat(&[2, 0]), &pat(&[1, 1])).unwrap();
        assert_eq!(sub.get(0, 0), u.get(0, 0));
        assert_eq!(sub.get(0, 1), u.get(0, 0));
        assert_eq!(sub.get(1, 0), u.get(1, 0));
        assert_eq!(sub.get(1, 1), u.get(1, 0));
    }

    #[test]
    fn submatrix_of_identity_selects_identity() {
        let u = UnitaryMatrix::identity(3).unwrap();
        let sub = submatrix(&u, &pat(&[1, 0, 1]), &pat(&[1, 0, 1])).unwrap();
        assert_eq!(&sub, &ComplexMatrix::identity(2).unwrap());
    }

    #[test]
    fn submatrix_shape_and_transpose_property() {
        let mut rng = RngStream::new(7, 0);
        let u = haar_unitary(4, &mut rng).unwrap();
        let k = pat(&[2, 0, 1, 0]);
        let l = pat(&[0, 1, 1, 1]);
        let sub = submatrix(&u, &k, &l).unwrap();
        assert_eq!((sub.rows(), sub.cols()), (3, 3));

        // Swapping the pattern roles on the transposed unitary transposes
        // the sub-matrix.
        let ut = UnitaryMatrix::new(u.as_matrix().transpose()).unwrap();
        let swapped = submatrix(&ut, &l, &k).unwrap();
        assert_eq!(swapped, sub.transpose());
    }

    #[test]
    fn submatrix_rejects_mismatches() {
        let u = UnitaryMatrix::identity(3).unwrap();
        assert!(submatrix(&u, &pat(&[1, 0]), &pat(&[1, 0, 0])).is_err());
        assert!(submatrix(&u, &pat(&[1, 1, 0]), &pat(&[1, 0, 0])).is_err());
        assert!(submatrix(&u, &pat(&[0, 0, 0]), &pat(&[0, 0, 0])).is_err());
    }

    #[test]
    fn permuted_unitary_moves_columns() {
        let mut rng = RngStream::new(8, 0);
        let u = haar_unitary(3, &mut rng).unwrap();
        let v = u.permute_columns(&[2, 0, 1]).unwrap();
        for i in 0..3 {
            assert_eq!(v.get(i, 0), u.get(i, 2));
            assert_eq!(v.get(i, 1), u.get(i, 0));
            assert_eq!(v.get(i, 2), u.get(i, 1));
        }
        assert!(u.permute_columns(&[0, 0, 1]).is_err());
    }
}

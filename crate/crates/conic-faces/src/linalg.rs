//! Dense real symmetric linear algebra: Jacobi eigendecomposition, rank,
//! orthonormalization, tensor squares, and the `svec` embedding.
//!
//! Everything here is sized for desk-scale work (orders up to roughly 50);
//! storage is dense `Vec<f64>` and the eigensolver is a cyclic Jacobi sweep.

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Symmetry tolerance applied when constructing a [`SymMatrix`] from raw rows,
/// relative to the largest entry magnitude.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Off-diagonal convergence threshold of the Jacobi sweep, relative to the
/// Frobenius norm of the input.
const JACOBI_TOL: f64 = 1e-13;

/// Sweep cap for the Jacobi iteration.
const JACOBI_MAX_SWEEPS: usize = 100;

/// A dense real symmetric matrix. Entries satisfy `a[i][j] == a[j][i]`
/// exactly: the constructor symmetrizes after validating that the input
/// asymmetry is below [`SYMMETRY_TOL`] relative to the largest entry.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from dense rows, validating squareness and symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Dimension("matrix order must be positive".into()));
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "expected {n} columns, found {}",
                    row.len()
                )));
            }
        }
        let max_abs = rows
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0_f64, |m, &v| m.max(v.abs()));
        let tolerance = SYMMETRY_TOL * max_abs.max(1.0);
        let mut asymmetry = 0.0_f64;
        for i in 0..n {
            for j in (i + 1)..n {
                asymmetry = asymmetry.max((rows[i][j] - rows[j][i]).abs());
            }
        }
        if asymmetry > tolerance {
            return Err(Error::NotSymmetric {
                asymmetry,
                tolerance,
            });
        }
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = rows[i][i];
            for j in (i + 1)..n {
                let v = 0.5 * (rows[i][j] + rows[j][i]);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(Self { n, data })
    }

    /// Builds from an entry function; the result is symmetrized exactly.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = f(i, i);
            for j in (i + 1)..n {
                let v = 0.5 * (f(i, j) + f(j, i));
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// The matrix `J_n = diag(1, -1, ..., -1)` carrying the Lorentz quadratic
    /// form `x' J_n x = x_1^2 - ||x_{2:n}||^2`.
    pub fn j_matrix(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i != j {
                0.0
            } else if i == 0 {
                1.0
            } else {
                -1.0
            }
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)` together.
    pub fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| c * v).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// `A - t J_n`.
    pub fn sub_j_multiple(&self, t: f64) -> Self {
        let mut out = self.clone();
        out.data[0] -= t;
        for i in 1..self.n {
            out.data[i * self.n + i] += t;
        }
        out
    }

    /// Trace inner product `<A, B> = sum_ij A_ij B_ij`.
    pub fn inner(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j) * x[j])
                    .sum()
            })
            .collect()
    }

    /// The quadratic form `x' A x`.
    pub fn quad_form(&self, x: &[f64]) -> f64 {
        dot(x, &self.mat_vec(x))
    }

    /// `B' A B` for a rectangular `B` given as a list of columns.
    pub fn congruence(&self, cols: &[Vec<f64>]) -> SymMatrix {
        let d = cols.len();
        let images: Vec<Vec<f64>> = cols.iter().map(|c| self.mat_vec(c)).collect();
        SymMatrix::from_fn(d, |i, j| dot(&cols[i], &images[j]))
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            n: usize,
            rows: Vec<Vec<f64>>,
        }
        Wire {
            n: self.n,
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            rows: Vec<Vec<f64>>,
        }
        let wire = Wire::deserialize(deserializer)?;
        if wire.rows.len() != wire.n {
            return Err(D::Error::custom(format!(
                "declared order {} but found {} rows",
                wire.n,
                wire.rows.len()
            )));
        }
        SymMatrix::from_rows(&wire.rows).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// The rank-one dyad `x x'`.
pub fn tensor_square(x: &[f64]) -> SymMatrix {
    SymMatrix::from_fn(x.len(), |i, j| x[i] * x[j])
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn axpy(y: &mut [f64], alpha: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

pub fn scale_vec(x: &[f64], c: f64) -> Vec<f64> {
    x.iter().map(|v| c * v).collect()
}

/// Eigendecomposition of a symmetric matrix: `A = V diag(λ) V'` with
/// eigenvalues sorted ascending and orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` is the unit eigenvector paired with `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<f64>>,
}

impl EigenResult {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.eigenvectors[0].len();
        let mut m = SymMatrix::zeros(n);
        for (lam, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            for i in 0..n {
                for j in i..n {
                    let val = m.get(i, j) + lam * v[i] * v[j];
                    m.set_sym(i, j, val);
                }
            }
        }
        m
    }
}

/// Cyclic Jacobi eigendecomposition. Sweeps rotate away off-diagonal mass
/// until its norm drops below `1e-13 * ||A||_F`; exceeding the 100-sweep cap
/// is reported as a numerical failure.
pub fn sym_eigen(a: &SymMatrix) -> Result<EigenResult> {
    let n = a.order();
    let fro = a.fro_norm();
    let mut m = a.clone();
    let mut v = SymMatrix::identity(n);

    let off_norm = |m: &SymMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * m.get(i, j) * m.get(i, j);
            }
        }
        s.sqrt()
    };

    let mut converged = fro == 0.0 || n == 1;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged || off_norm(&m) <= JACOBI_TOL * fro {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m.get(p, q);
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (m.get(q, q) - m.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                // Two-sided Givens rotation in the (p, q) plane; the (p, q)
                // entry is annihilated exactly.
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                m.set_sym(p, p, app - t * apq);
                m.set_sym(q, q, aqq + t * apq);
                m.set_sym(p, q, 0.0);
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = m.get(k, p);
                    let akq = m.get(k, q);
                    m.set_sym(k, p, akp - s * (akq + tau * akp));
                    m.set_sym(k, q, akq + s * (akp - tau * akq));
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.data[k * n + p] = vkp - s * (vkq + tau * vkp);
                    v.data[k * n + q] = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }
    if !converged && off_norm(&m) > JACOBI_TOL * fro {
        return Err(Error::Numerical(format!(
            "Jacobi sweep did not converge within {JACOBI_MAX_SWEEPS} sweeps"
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).partial_cmp(&m.get(j, j)).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m.get(i, i)).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| v.get(i, k)).collect())
        .collect();
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
    })
}

/// Count of eigenvalues with `|λ| > tol * (1 + max |λ|)`. The threshold is
/// relative to the spectral radius, never absolute.
pub fn rank_of(a: &SymMatrix, tol: f64) -> usize {
    let eig = sym_eigen(a).expect("Jacobi convergence");
    let radius = eig
        .eigenvalues
        .iter()
        .fold(0.0_f64, |m, &v| m.max(v.abs()));
    let threshold = tol * (1.0 + radius);
    eig.eigenvalues
        .iter()
        .filter(|v| v.abs() > threshold)
        .count()
}

/// A linear subspace of `R^n` carried by an orthonormal basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    n: usize,
    basis: Vec<Vec<f64>>,
}

/// Orthonormality tolerance enforced on [`Subspace`] values.
pub const ORTHONORMALITY_TOL: f64 = 1e-10;

impl Subspace {
    /// The zero subspace of `R^n`.
    pub fn zero(n: usize) -> Self {
        Self { n, basis: vec![] }
    }

    pub fn full(n: usize) -> Self {
        orthonormalize(
            n,
            &(0..n)
                .map(|i| unit_vector(n, i))
                .collect::<Vec<_>>(),
            SYMMETRY_TOL,
        )
    }

    /// Wraps an already-orthonormal basis, validating `B'B = I` within
    /// [`ORTHONORMALITY_TOL`].
    pub fn from_orthonormal(n: usize, basis: Vec<Vec<f64>>) -> Result<Self> {
        for b in &basis {
            if b.len() != n {
                return Err(Error::Dimension(format!(
                    "basis vector of length {} in ambient dimension {n}",
                    b.len()
                )));
            }
        }
        for i in 0..basis.len() {
            for j in i..basis.len() {
                let expect = if i == j { 1.0 } else { 0.0 };
                if (dot(&basis[i], &basis[j]) - expect).abs() > ORTHONORMALITY_TOL {
                    return Err(Error::Precondition(
                        "basis columns are not orthonormal".into(),
                    ));
                }
            }
        }
        Ok(Self { n, basis })
    }

    /// Orthonormalizes a spanning set; see [`orthonormalize`].
    pub fn from_span(n: usize, vectors: &[Vec<f64>], tol: f64) -> Self {
        orthonormalize(n, vectors, tol)
    }

    /// The orthogonal complement `{(1; v)}^⊥`-style: the hyperplane of all
    /// vectors orthogonal to `w`.
    pub fn hyperplane_perp(w: &[f64]) -> Self {
        let n = w.len();
        let line = orthonormalize(n, &[w.to_vec()], SYMMETRY_TOL);
        line.complement()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    /// Orthogonal projection of `v` onto the subspace.
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.n];
        for b in &self.basis {
            axpy(&mut out, dot(b, v), b);
        }
        out
    }

    /// Norm of `(I - BB') v`.
    pub fn residual_norm(&self, v: &[f64]) -> f64 {
        let p = self.project(v);
        (0..self.n)
            .map(|i| (v[i] - p[i]) * (v[i] - p[i]))
            .sum::<f64>()
            .sqrt()
    }

    /// Membership of a vector up to `tol * (1 + ||v||)`.
    pub fn contains_vector(&self, v: &[f64], tol: f64) -> bool {
        self.residual_norm(v) <= tol * (1.0 + norm(v))
    }

    /// Orthogonal complement, built by eliminating the coordinate basis
    /// against this basis in order.
    pub fn complement(&self) -> Subspace {
        let mut cols = self.basis.clone();
        for i in 0..self.n {
            cols.push(unit_vector(self.n, i));
        }
        let all = orthonormalize_in_order(self.n, &cols, 1e-8);
        Subspace {
            n: self.n,
            basis: all.basis[self.dim()..].to_vec(),
        }
    }

    /// Whether the two subspaces have the same span at tolerance `tol`.
    pub fn same_span(&self, other: &Subspace, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .basis
                .iter()
                .all(|b| other.contains_vector(b, tol))
            && other.basis.iter().all(|b| self.contains_vector(b, tol))
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            vectors: &'a Vec<Vec<f64>>,
        }
        Wire {
            n: self.n,
            vectors: &self.basis,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            vectors: Vec<Vec<f64>>,
        }
        let wire = Wire::deserialize(deserializer)?;
        Subspace::from_orthonormal(wire.n, wire.vectors)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; n];
    e[i] = 1.0;
    e
}

/// Pivoted Gram-Schmidt: repeatedly takes the remaining vector with the
/// largest residual, orthogonalizes it (twice, for stability), and drops any
/// vector whose residual falls below `tol * (1 + ||input vector||)`.
///
/// The span of the result equals the span of the input; the empty input
/// yields the zero subspace.
pub fn orthonormalize(n: usize, vectors: &[Vec<f64>], tol: f64) -> Subspace {
    let mut residuals: Vec<Vec<f64>> = vectors.to_vec();
    let scales: Vec<f64> = vectors.iter().map(|v| 1.0 + norm(v)).collect();
    let mut alive: Vec<usize> = (0..vectors.len()).collect();
    let mut basis: Vec<Vec<f64>> = Vec::new();

    while !alive.is_empty() && basis.len() < n {
        let (pos, &idx) = alive
            .iter()
            .enumerate()
            .max_by(|(_, &a), (_, &b)| {
                norm(&residuals[a])
                    .partial_cmp(&norm(&residuals[b]))
                    .unwrap()
            })
            .unwrap();
        if norm(&residuals[idx]) <= tol * scales[idx] {
            break;
        }
        let mut q = residuals[idx].clone();
        // Second orthogonalization pass against the accepted basis.
        for b in &basis {
            let c = dot(b, &q);
            axpy(&mut q, -c, b);
        }
        let nq = norm(&q);
        if nq <= tol * scales[idx] {
            alive.remove(pos);
            continue;
        }
        let q = scale_vec(&q, 1.0 / nq);
        alive.remove(pos);
        for &r in &alive {
            let c = dot(&q, &residuals[r]);
            let row = &mut residuals[r];
            axpy(row, -c, &q);
        }
        basis.push(q);
    }
    Subspace { n, basis }
}

/// Gram-Schmidt preserving the input order (no pivoting); used where the
/// leading vectors must stay in front, e.g. complement extraction.
pub fn orthonormalize_in_order(n: usize, vectors: &[Vec<f64>], tol: f64) -> Subspace {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        if basis.len() == n {
            break;
        }
        let scale = 1.0 + norm(v);
        let mut q = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &q);
                axpy(&mut q, -c, b);
            }
        }
        let nq = norm(&q);
        if nq > tol * scale {
            basis.push(scale_vec(&q, 1.0 / nq));
        }
    }
    Subspace { n, basis }
}

/// Inner-product-preserving vectorization of a symmetric matrix: upper
/// triangle read column by column with `sqrt(2)`-scaled off-diagonals,
/// ordered `(X11, √2·X12, X22, √2·X13, √2·X23, X33, ...)`.
pub fn svec(x: &SymMatrix) -> Vec<f64> {
    let m = x.order();
    let mut out = Vec::with_capacity(crate::triangular(m));
    let root2 = 2.0_f64.sqrt();
    for j in 0..m {
        for i in 0..=j {
            if i == j {
                out.push(x.get(i, j));
            } else {
                out.push(root2 * x.get(i, j));
            }
        }
    }
    out
}

/// Exact inverse of [`svec`]: off-diagonal slots are divided by `sqrt(2)`.
pub fn svec_inverse(v: &[f64]) -> Result<SymMatrix> {
    // T_m = m(m+1)/2 must match the input length.
    let mut m = 0usize;
    while crate::triangular(m) < v.len() {
        m += 1;
    }
    if crate::triangular(m) != v.len() {
        return Err(Error::Dimension(format!(
            "length {} is not a triangular number",
            v.len()
        )));
    }
    let root2 = 2.0_f64.sqrt();
    let mut out = SymMatrix::zeros(m);
    let mut idx = 0;
    for j in 0..m {
        for i in 0..=j {
            if i == j {
                out.set_sym(i, j, v[idx]);
            } else {
                out.set_sym(i, j, v[idx] / root2);
            }
            idx += 1;
        }
    }
    Ok(out)
}

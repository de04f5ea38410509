//! Coined quantum walks on regular digraphs.
//!
//! States are column vectors and operators act on the left. The basis vector
//! `|F_j, v>` has index `j * n + v`, so the walk operator is
//! `U = T (C ⊗ I_n)` with the coin as the outer tensor factor. Shift block
//! `j` sends `|F_j, v>` to `|F_j, successor_j(v)>`, i.e. it is `M(F_j)^T`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::factorization::{block_line_matrix, one_factorization, Factorization};
use crate::line::is_line_digraph_matrix;
use crate::report::{Assertion, Report};

/// Unitarity tolerance on `max |U^dagger U - I|`.
pub const UNITARY_TOL: f64 = 1e-12;
/// Default support threshold.
pub const SUPPORT_TOL: f64 = 1e-12;
/// Allowed drift of the total probability.
pub const NORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct CxMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CxMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CxMatrix {
            rows,
            cols,
            data: vec![Complex64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let data = (0..rows * cols).map(|x| f(x / cols, x % cols)).collect();
        CxMatrix { rows, cols, data }
    }

    pub fn from_real(rows: &[Vec<f64>]) -> Self {
        let c = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), c, |i, j| Complex64::new(rows[i][j], 0.0))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn try_mul(&self, rhs: &CxMatrix) -> Result<CxMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &CxMatrix) -> CxMatrix {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols) * rhs.get(i % rhs.rows, j % rhs.cols)
        })
    }

    pub fn max_abs_diff(&self, other: &CxMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max |M^dagger M - I|`, or infinity for non-square input.
    pub fn unitarity_defect(&self) -> f64 {
        if self.rows != self.cols {
            return f64::INFINITY;
        }
        let g = self.adjoint().try_mul(self).expect("square");
        g.max_abs_diff(&Self::identity(self.rows))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn count_nonzero(&self, tol: f64) -> usize {
        self.data.iter().filter(|z| z.norm() > tol).count()
    }
}

impl fmt::Display for CxMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| {
                    let z = self.get(i, j);
                    format!("{:.6}{:+.6}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `(1/√2) [[1, 1], [1, -1]]`.
pub fn coin_hadamard() -> CxMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    CxMatrix::from_real(&[vec![h, h], vec![h, -h]])
}

/// Entries `2/k - δ_ij`.
pub fn coin_grover(k: usize) -> Result<CxMatrix> {
    if k < 2 {
        return Err(Error::BadDimension(format!(
            "Grover coin needs k >= 2, got {k}"
        )));
    }
    let kf = k as f64;
    Ok(CxMatrix::from_fn(k, k, |i, j| {
        Complex64::new(2.0 / kf - if i == j { 1.0 } else { 0.0 }, 0.0)
    }))
}

/// Entries `ω^(jl) / √k` with `ω = e^(2πi/k)`.
pub fn coin_fourier(k: usize) -> Result<CxMatrix> {
    if k < 2 {
        return Err(Error::BadDimension(format!(
            "Fourier coin needs k >= 2, got {k}"
        )));
    }
    let norm = (k as f64).sqrt().recip();
    Ok(CxMatrix::from_fn(k, k, |j, l| {
        let angle = 2.0 * PI * ((j * l) % k) as f64 / k as f64;
        Complex64::from_polar(norm, angle)
    }))
}

/// Named coins for the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoinKind {
    Hadamard,
    Grover,
    Fourier,
}

impl CoinKind {
    pub fn name(self) -> &'static str {
        match self {
            CoinKind::Hadamard => "hadamard",
            CoinKind::Grover => "grover",
            CoinKind::Fourier => "fourier",
        }
    }

    /// The `k x k` coin; `k = 1` always gives `[1]`.
    pub fn build(self, k: usize) -> Result<CxMatrix> {
        if k == 1 {
            return Ok(CxMatrix::identity(1));
        }
        match self {
            CoinKind::Hadamard if k == 2 => Ok(coin_hadamard()),
            CoinKind::Hadamard => Err(Error::BadDimension(format!(
                "Hadamard coin is 2x2, walk needs {k}x{k}"
            ))),
            CoinKind::Grover => coin_grover(k),
            CoinKind::Fourier => coin_fourier(k),
        }
    }
}

impl std::str::FromStr for CoinKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hadamard" => Ok(CoinKind::Hadamard),
            "grover" => Ok(CoinKind::Grover),
            "fourier" => Ok(CoinKind::Fourier),
            _ => Err(Error::BadDimension(format!("unknown coin `{s}`"))),
        }
    }
}

/// Block-diagonal permutation matrix, block `j` moving `v` to `successor_j(v)`.
pub fn build_shift(fac: &Factorization) -> CxMatrix {
    let (k, n) = (fac.k(), fac.host_n());
    let mut t = CxMatrix::zeros(k * n, k * n);
    for (j, f) in fac.factors().iter().enumerate() {
        for (v, w) in f.arcs() {
            t.set(j * n + w, j * n + v, Complex64::new(1.0, 0.0));
        }
    }
    t
}

#[derive(Debug, Clone)]
pub struct WalkOperator {
    pub u: CxMatrix,
    pub coin: CxMatrix,
    pub shift: CxMatrix,
    pub factorization: Factorization,
    pub k: usize,
    pub n: usize,
}

impl WalkOperator {
    pub fn dim(&self) -> usize {
        self.k * self.n
    }

    /// Basis index of `|F_j, v>`.
    pub fn basis_index(&self, j: usize, v: usize) -> usize {
        j * self.n + v
    }
}

pub fn build_walk(d: &Digraph, coin: &CxMatrix) -> Result<WalkOperator> {
    let k = d.regularity().ok_or(Error::NotRegular)?;
    let fac = one_factorization(d)?;
    build_walk_with(&fac, coin).map_err(|e| match e {
        Error::DimensionMismatch { found, .. } => Error::DimensionMismatch { expected: k, found },
        other => other,
    })
}

/// `U = T (C ⊗ I_n)` for a given factorization.
pub fn build_walk_with(fac: &Factorization, coin: &CxMatrix) -> Result<WalkOperator> {
    let (k, n) = (fac.k(), fac.host_n());
    if coin.rows() != coin.cols() || coin.rows() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: coin.rows(),
        });
    }
    let defect = coin.unitarity_defect();
    if defect > UNITARY_TOL {
        return Err(Error::NotUnitary(defect));
    }
    let shift = build_shift(fac);
    let u = shift.try_mul(&coin.kron(&CxMatrix::identity(n)))?;
    Ok(WalkOperator {
        u,
        coin: coin.clone(),
        shift,
        factorization: fac.clone(),
        k,
        n,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    pub psi: Vec<Complex64>,
    pub time: usize,
}

impl WalkState {
    /// Normalised state; rejects a norm off by more than `NORM_TOL`.
    pub fn new(psi: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = psi.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::BadDimension(format!("state norm {norm} is not 1")));
        }
        Ok(WalkState { psi, time: 0 })
    }

    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: index,
            });
        }
        let mut psi = vec![Complex64::zero(); dim];
        psi[index] = Complex64::new(1.0, 0.0);
        Ok(WalkState { psi, time: 0 })
    }

    pub fn uniform(dim: usize) -> Self {
        let a = Complex64::new((dim as f64).sqrt().recip(), 0.0);
        WalkState {
            psi: vec![a; dim],
            time: 0,
        }
    }

    pub fn norm(&self) -> f64 {
        self.psi.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
    }
}

/// `U^t |psi0>`.
pub fn evolve(w: &WalkOperator, psi0: &WalkState, t: usize) -> Result<WalkState> {
    let mut state = step_check(w, psi0)?;
    for _ in 0..t {
        state = step(w, &state)?;
    }
    Ok(state)
}

fn step_check(w: &WalkOperator, s: &WalkState) -> Result<WalkState> {
    if s.psi.len() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: w.dim(),
            found: s.psi.len(),
        });
    }
    Ok(s.clone())
}

/// One application of `U`.
pub fn step(w: &WalkOperator, s: &WalkState) -> Result<WalkState> {
    Ok(WalkState {
        psi: w.u.mul_vec(&s.psi)?,
        time: s.time + 1,
    })
}

/// `Pr(v) = Σ_j |<F_j, v | psi>|²`.
pub fn distribution(w: &WalkOperator, s: &WalkState) -> Vec<f64> {
    (0..w.n)
        .map(|v| {
            (0..w.k)
                .map(|j| s.psi[w.basis_index(j, v)].norm_sqr())
                .sum()
        })
        .collect()
}

/// Digraph whose adjacency is the support `|M_ij| > tol`; loops allowed.
pub fn support_digraph(m: &CxMatrix, tol: f64) -> Result<Digraph> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let arcs: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m.get(i, j).norm() > tol)
        .collect();
    Digraph::with_loops(n, arcs)
}

pub fn coin_has_zeros(coin: &CxMatrix, tol: f64) -> bool {
    coin.count_nonzero(tol) != coin.rows() * coin.cols()
}

/// Checks that the support of the walk operator is the transposed block
/// matrix of the factorization, hence the reverse of a line digraph.
pub fn verify_underlying_line_digraph(d: &Digraph, coin: &CxMatrix) -> Result<Report> {
    let w = build_walk(d, coin)?;
    verify_walk_support(&w)
}

/// Support checks for an already built walk operator.
pub fn verify_walk_support(w: &WalkOperator) -> Result<Report> {
    let mut report = Report::new("walk-support");
    let defect = w.u.unitarity_defect();
    report.push(Assertion::check(
        "unitary",
        "walk operator is unitary",
        defect <= UNITARY_TOL,
        format!("max |U'U - I| = {defect:.3e}"),
    ));
    let recomposed = w.shift.try_mul(&w.coin.kron(&CxMatrix::identity(w.n)))?;
    let diff = recomposed.max_abs_diff(&w.u);
    report.push(Assertion::check(
        "operator-form",
        "U = T (C x I_n)",
        diff <= 1e-15,
        format!("max deviation {diff:.3e}"),
    ));

    let support = support_digraph(&w.u, SUPPORT_TOL)?;
    let block_t = block_line_matrix(&w.factorization).transpose();
    let pattern = Digraph::from_adjacency(&block_t)?;
    if coin_has_zeros(&w.coin, SUPPORT_TOL) {
        let contained = support.arcs().iter().all(|&(u, v)| pattern.has_arc(u, v));
        report.push(Assertion::skip(
            "support-equals-block-transpose",
            "support(U) = transposed block matrix",
            Error::CoinHasZeros.name(),
        ));
        report.push(Assertion::check(
            "support-within-block-transpose",
            "support(U) contained in transposed block matrix",
            contained,
            format!("{} of {} arcs", support.arc_count(), pattern.arc_count()),
        ));
        return Ok(report);
    }
    report.push(Assertion::check(
        "support-equals-block-transpose",
        "support(U) = transposed block matrix",
        support == pattern,
        format!("{} arcs", support.arc_count()),
    ));
    let reversed = support.reverse();
    if reversed.has_loops() {
        report.push(Assertion::skip(
            "reverse-support-recognised",
            "reverse of support(U) is a line digraph",
            "support has loops",
        ));
    } else {
        let ok = is_line_digraph_matrix(&reversed)? && is_line_digraph_matrix(&support)?;
        report.push(Assertion::check(
            "reverse-support-recognised",
            "reverse of support(U) is a line digraph",
            ok,
            "matrix criterion on support and its reverse".to_string(),
        ));
    }
    Ok(report)
}

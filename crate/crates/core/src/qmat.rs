//! Dense complex linear algebra for operators on at most three qubits.
//!
//! Storage is a fixed 8×8 array so nothing here allocates; a matrix carries its
//! active dimension (2, 4 or 8). Qubit 0 is the most significant bit of a basis
//! index, so for `A ⊗ B ⊗ C` the state `|abc⟩` sits at index `4a + 2b + c`.

use core::fmt;
use core::ops::{Add, BitOr, Index, IndexMut, Mul, Sub};

use crate::error::{Error, Result};

pub type C64 = num_complex::Complex64;

pub const MAX_DIM: usize = 8;

/// Entrywise tolerance for `M = M†`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues in `[-NEG_EIG_TOL, 0)` are rounding noise and clamp to zero.
pub const NEG_EIG_TOL: f64 = 1e-10;

const JACOBI_OFF_TOL: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

#[derive(Clone, Copy, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: [[C64; MAX_DIM]; MAX_DIM],
}

fn check_dim(dim: usize) {
    assert!(matches!(dim, 1 | 2 | 4 | 8), "matrix dimension must be 1, 2, 4 or 8, got {dim}");
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        check_dim(dim);
        Self { dim, data: [[ZERO; MAX_DIM]; MAX_DIM] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i][i] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i][i] = C64::new(d, 0.0);
        }
        m
    }

    /// Row-major construction; `rows.len()` is the dimension.
    pub fn from_rows<const N: usize>(rows: [[C64; N]; N]) -> Self {
        Self::from_fn(N, |i, j| rows[i][j])
    }

    /// `|ψ⟩⟨ψ|` for an amplitude vector of length 2, 4 or 8.
    pub fn outer(psi: &[C64]) -> Self {
        Self::from_fn(psi.len(), |i, j| psi[i] * psi[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.data[j][i].conj())
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::from_fn(self.dim, |i, j| self.data[i][j] * k)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.data[i][i]).sum()
    }

    /// Largest `|m_ij − conj(m_ji)|` and where it occurs.
    pub fn max_asymmetry(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self.data[i][j] - self.data[j][i].conj()).norm_sqr();
                if d > worst.2 {
                    worst = (i, j, d);
                }
            }
        }
        (worst.0, worst.1, libm::sqrt(worst.2))
    }

    pub fn is_hermitian(&self) -> bool {
        self.max_asymmetry().2 <= HERMITIAN_TOL
    }

    /// `(M + M†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| (self.data[i][j] + self.data[j][i].conj()) * 0.5)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        let mut worst = 0.0_f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.data[i][j] - other.data[i][j]).norm_sqr());
            }
        }
        libm::sqrt(worst)
    }

    /// `U M U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        &(u * self) * &u.adjoint()
    }

    /// `P M P` for a Hermitian `P` (projector sandwiches).
    pub fn sandwich(&self, p: &Self) -> Self {
        &(p * self) * p
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i][j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i][j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix::from_fn(self.dim, |i, j| self.data[i][j] + rhs.data[i][j])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix::from_fn(self.dim, |i, j| self.data[i][j] - rhs.data[i][j])
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, " ")?;
            for j in 0..self.dim {
                let z = self.data[i][j];
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Pauli matrix `σ_k`, with `σ_0 = I₂`.
pub fn pauli(k: usize) -> ComplexMatrix {
    match k {
        0 => ComplexMatrix::identity(2),
        1 => ComplexMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]]),
        2 => ComplexMatrix::from_rows([[ZERO, -I], [I, ZERO]]),
        3 => ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("Pauli index must be 0..=3, got {k}"),
    }
}

/// `σ_{k₀} ⊗ σ_{k₁} ⊗ σ_{k₂}`.
pub fn pauli_string(ks: [usize; 3]) -> ComplexMatrix {
    kron(&kron(&pauli(ks[0]), &pauli(ks[1])), &pauli(ks[2]))
}

/// Kronecker product. Panics if the result would exceed 8×8.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.dim, b.dim);
    let n = na * nb;
    assert!(n <= MAX_DIM, "kron result {n}x{n} exceeds {MAX_DIM}x{MAX_DIM}");
    ComplexMatrix::from_fn(n, |i, j| a.data[i / nb][j / nb] * b.data[i % nb][j % nb])
}

/// Ascending real eigenvalues of a Hermitian matrix.
#[derive(Clone, Copy, PartialEq)]
pub struct Spectrum {
    len: usize,
    values: [f64; MAX_DIM],
}

impl Spectrum {
    pub fn as_slice(&self) -> &[f64] {
        &self.values[..self.len]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.len - 1]
    }

    pub fn sum(&self) -> f64 {
        self.as_slice().iter().sum()
    }
}

impl core::ops::Deref for Spectrum {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        self.as_slice()
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.as_slice()).finish()
    }
}

fn check_hermitian(m: &ComplexMatrix) -> Result<()> {
    let (row, col, deviation) = m.max_asymmetry();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { row, col, deviation });
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<Spectrum> {
    check_hermitian(m)?;
    jacobi(m, false).map(|(s, _)| s)
}

/// Eigenvalues (ascending) and the unitary whose columns are the matching
/// eigenvectors, so that `M = V Λ V†`.
#[cfg(test)]
pub(crate) fn eigh(m: &ComplexMatrix) -> Result<(Spectrum, ComplexMatrix)> {
    check_hermitian(m)?;
    jacobi(m, true)
}

/// Cyclic complex Jacobi. Each rotation zeroes one off-diagonal pair; the
/// off-diagonal Frobenius norm falls quadratically once small.
fn jacobi(m: &ComplexMatrix, want_vectors: bool) -> Result<(Spectrum, ComplexMatrix)> {
    let n = m.dim;
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = frobenius(&a).max(1.0);

    let mut off = off_diagonal_norm(&a);
    let mut sweeps = 0;
    while off > JACOBI_OFF_TOL * scale {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q, want_vectors);
            }
        }
        off = off_diagonal_norm(&a);
    }

    let mut order = [0usize; MAX_DIM];
    for (i, o) in order.iter_mut().enumerate().take(n) {
        *o = i;
    }
    order[..n].sort_unstable_by(|&i, &j| a.data[i][i].re.total_cmp(&a.data[j][j].re));

    let mut values = [0.0; MAX_DIM];
    for (slot, &i) in order[..n].iter().enumerate() {
        values[slot] = a.data[i][i].re;
    }
    let vectors = if want_vectors { ComplexMatrix::from_fn(n, |r, c| v.data[r][order[c]]) } else { v };
    Ok((Spectrum { len: n, values }, vectors))
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, want_vectors: bool) {
    let apq = a.data[p][q];
    let mag = libm::sqrt(apq.norm_sqr());
    if mag == 0.0 {
        return;
    }
    // Phase-rotate the (p, q) block to a real symmetric one, then apply the
    // classical real Jacobi rotation. U = diag(1, e^{-iφ}) · [[c, s], [-s, c]].
    let phase = apq.conj() / mag; // e^{-iφ}
    let app = a.data[p][p].re;
    let aqq = a.data[q][q].re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + libm::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + libm::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / libm::sqrt(1.0 + t * t);
    let s = t * c;

    // U entries: U_pp = c, U_pq = s, U_qp = -s·e^{-iφ}, U_qq = c·e^{-iφ}.
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = -phase * s;
    let uqq = phase * c;

    let n = a.dim;
    // A ← A U (columns p, q)
    for k in 0..n {
        let akp = a.data[k][p];
        let akq = a.data[k][q];
        a.data[k][p] = akp * upp + akq * uqp;
        a.data[k][q] = akp * upq + akq * uqq;
    }
    // A ← U† A (rows p, q)
    for k in 0..n {
        let apk = a.data[p][k];
        let aqk = a.data[q][k];
        a.data[p][k] = upp.conj() * apk + uqp.conj() * aqk;
        a.data[q][k] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a.data[p][q] = ZERO;
    a.data[q][p] = ZERO;
    a.data[p][p].im = 0.0;
    a.data[q][q].im = 0.0;

    if want_vectors {
        for k in 0..n {
            let vkp = v.data[k][p];
            let vkq = v.data[k][q];
            v.data[k][p] = vkp * upp + vkq * uqp;
            v.data[k][q] = vkp * upq + vkq * uqq;
        }
    }
}

fn frobenius(a: &ComplexMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..a.dim {
        for j in 0..a.dim {
            s += a.data[i][j].norm_sqr();
        }
    }
    libm::sqrt(s)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..a.dim {
        for j in 0..a.dim {
            if i != j {
                s += a.data[i][j].norm_sqr();
            }
        }
    }
    libm::sqrt(s)
}

/// A set of qubits, bit `q` standing for qubit `q` (A = 0, B = 1, C = 2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Subsystems(u8);

impl Subsystems {
    pub const A: Self = Self(0b001);
    pub const B: Self = Self(0b010);
    pub const C: Self = Self(0b100);

    pub const fn from_bits(bits: u8) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn contains(self, qubit: usize) -> bool {
        qubit < 8 && self.0 & (1 << qubit) != 0
    }

    pub const fn count(self) -> usize {
        self.0.count_ones() as usize
    }
}

impl BitOr for Subsystems {
    type Output = Self;

    fn bitor(self, rhs: Self) -> Self {
        Self(self.0 | rhs.0)
    }
}

/// Trace out every qubit not in `keep`. Kept qubits retain their order.
pub fn partial_trace(rho: &ComplexMatrix, keep: Subsystems) -> Result<ComplexMatrix> {
    let n = rho.qubits();
    let mask = keep.bits();
    if mask == 0 || (mask >> n) != 0 {
        return Err(Error::InvalidMask { mask, qubits: n });
    }
    let kept = keep.count();
    let mut out = ComplexMatrix::zeros(1 << kept);

    // Reduced index of a full index: the kept bits, in qubit order.
    let reduce = |idx: usize| -> usize {
        let mut r = 0;
        for q in 0..n {
            if keep.contains(q) {
                r = (r << 1) | ((idx >> (n - 1 - q)) & 1);
            }
        }
        r
    };
    let traced = !(mask as usize) & ((1 << n) - 1);
    // Bits of the full index belonging to traced qubits.
    let mut traced_bits = 0usize;
    for q in 0..n {
        if traced & (1 << q) != 0 {
            traced_bits |= 1 << (n - 1 - q);
        }
    }

    for i in 0..rho.dim {
        for j in 0..rho.dim {
            if i & traced_bits == j & traced_bits {
                out.data[reduce(i)][reduce(j)] += rho.data[i][j];
            }
        }
    }
    Ok(out)
}

/// `x log₂ x` with `0 log₂ 0 = 0`.
#[inline]
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * libm::log2(x)
    }
}

/// `−Σ λ log₂ λ` over a spectrum, after clamping rounding noise.
pub fn entropy_of_spectrum(values: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in values {
        if l < -NEG_EIG_TOL {
            return Err(Error::NegativeEigenvalue { value: l });
        }
        s -= xlog2x(l);
    }
    Ok(s.max(0.0))
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    entropy_of_spectrum(&eig_hermitian(rho)?)
}

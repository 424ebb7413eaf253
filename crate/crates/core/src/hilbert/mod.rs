//! Finite-dimensional complex Hilbert spaces: unit state vectors, orthogonal
//! projectors and the lattice of closed subspaces they represent.
//!
//! Subspaces are stored as projector matrices. Ranges are recovered by a
//! Hermitian eigendecomposition, spans are orthonormalized by column-pivoted
//! QR with a single rank cutoff ([`RANK_TOL`]), and the meet is obtained from
//! the join by orthocomplement duality.
//!
//! Basis convention: `|0⟩ = (1, 0)` is the `+1` eigenvector of `σ_Z`, and for
//! several qubits the first site is the leftmost tensor factor.

mod files;

pub use files::{ProjectorFile, StateFile};

use nalgebra::{Complex, DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

pub type C64 = Complex<f64>;

/// Rank cutoff for spans, and the Hermiticity and idempotence checks.
pub const RANK_TOL: f64 = 1e-9;
/// Tolerance for identities that hold to machine precision (involution,
/// pointwise negation).
pub const IDENTITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HilbertError {
    #[error("the zero vector cannot be normalized")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    EmptySpace,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (max entry deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix is not idempotent (Frobenius norm of P^2 - P is {0:e})")]
    NotIdempotent(f64),
    #[error("projector spectrum not in {{0, 1}} (worst eigenvalue deviation {0:e})")]
    BadSpectrum(f64),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("non-finite entry")]
    NonFinite,
    #[error("Born value {0} lies outside [0, 1] beyond tolerance")]
    NumericRange(f64),
    #[error("site {site} out of range 1..={n_sites}")]
    IndexOutOfRange { site: usize, n_sites: usize },
    #[error("{0}")]
    Format(String),
}

fn check_dim(expected: usize, found: usize) -> Result<(), HilbertError> {
    if expected == found {
        Ok(())
    } else {
        Err(HilbertError::DimensionMismatch { expected, found })
    }
}

/// A unit vector `ψ ∈ S¹(H)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: DVector<C64>,
}

impl StateVector {
    /// Normalizes `amplitudes` to unit length.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self, HilbertError> {
        if amplitudes.is_empty() {
            return Err(HilbertError::EmptySpace);
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(HilbertError::NonFinite);
        }
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if norm == 0.0 || norm < f64::MIN_POSITIVE {
            return Err(HilbertError::ZeroVector);
        }
        Ok(StateVector { amps: v.unscale(norm) })
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self, HilbertError> {
        Self::new(amplitudes.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Accepts `amplitudes` only if already normalized within `tol`.
    pub fn from_normalized(amplitudes: Vec<C64>, tol: f64) -> Result<Self, HilbertError> {
        let v = DVector::from_vec(amplitudes);
        let norm = v.norm();
        if !norm.is_finite() {
            return Err(HilbertError::NonFinite);
        }
        if (norm - 1.0).abs() > tol {
            return Err(HilbertError::NotNormalized(norm));
        }
        Self::new(v.as_slice().to_vec())
    }

    /// Computational basis vector `|index⟩`.
    pub fn basis(dim: usize, index: usize) -> Result<Self, HilbertError> {
        if index >= dim {
            return Err(HilbertError::IndexOutOfRange { site: index, n_sites: dim });
        }
        let mut v = vec![C64::new(0.0, 0.0); dim];
        v[index] = C64::new(1.0, 0.0);
        Self::new(v)
    }

    /// Haar-uniform random state, deterministic per `(dim, seed)`.
    pub fn random(dim: usize, seed: u64) -> Result<Self, HilbertError> {
        Self::random_with(dim, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Haar-uniform random state: `2·dim` standard normals as real and
    /// imaginary parts, then normalized.
    pub fn random_with<R: rand::Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Self, HilbertError> {
        if dim == 0 {
            return Err(HilbertError::EmptySpace);
        }
        loop {
            let amps: Vec<C64> = (0..dim)
                .map(|_| C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)))
                .collect();
            match Self::new(amps) {
                Ok(s) => return Ok(s),
                Err(HilbertError::ZeroVector) => continue,
                Err(e) => return Err(e),
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        self.amps.as_slice()
    }

    pub fn as_vector(&self) -> &DVector<C64> {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<C64, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.amps.dotc(&other.amps))
    }

    /// Multiplies by the global phase `e^{iθ}`.
    pub fn with_phase(&self, theta: f64) -> StateVector {
        StateVector { amps: self.amps.map(|z| z * C64::from_polar(1.0, theta)) }
    }
}

/// `⟨ψ|M|ψ⟩` for a square column-major matrix, real part only.
fn quadratic_form(m: &DMatrix<C64>, psi: &DVector<C64>) -> f64 {
    let n = psi.len();
    let data = m.as_slice();
    let amps = psi.as_slice();
    let mut acc = C64::new(0.0, 0.0);
    for (j, col) in data.chunks_exact(n).enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for (m_ij, a_i) in col.iter().zip(amps) {
            s += a_i.conj() * m_ij;
        }
        acc += s * amps[j];
    }
    acc.re
}

fn max_hermitian_deviation(m: &DMatrix<C64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn hermitian_eigen(m: &DMatrix<C64>) -> nalgebra::SymmetricEigen<C64, nalgebra::Dyn> {
    // Symmetrize first; the solver reads only one triangle.
    let sym = (m + m.adjoint()).scale(0.5);
    sym.symmetric_eigen()
}

/// Orthonormal basis (as columns) of the span of the columns of `cols`,
/// by column-pivoted QR, dropping directions whose `|R_ii|` is at or below
/// `tol`.
///
/// nalgebra's complex SVD mis-converges on rank-deficient inputs with
/// repeated singular values (exactly what joining nested subspaces
/// produces), so it is not used here.
pub fn orthonormal_basis(cols: &DMatrix<C64>, tol: f64) -> DMatrix<C64> {
    let rows = cols.nrows();
    if cols.ncols() == 0 {
        return DMatrix::zeros(rows, 0);
    }
    let qr = cols.clone().col_piv_qr();
    let r = qr.r();
    // Pivoting keeps |R_ii| non-increasing.
    let rank = (0..r.nrows().min(r.ncols()))
        .take_while(|&i| r[(i, i)].norm() > tol)
        .count();
    qr.q().columns(0, rank).into_owned()
}

/// Orthogonal projector onto a closed subspace of `C^dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    m: DMatrix<C64>,
}

impl Projector {
    pub fn zero(dim: usize) -> Self {
        Projector { m: DMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Projector { m: DMatrix::identity(dim, dim) }
    }

    /// Projector `Σ q_k q_k†` for the orthonormal columns of `basis`.
    fn from_orthonormal(basis: &DMatrix<C64>) -> Self {
        Projector { m: basis * basis.adjoint() }
    }

    /// Projector onto the span of `vectors`. An empty family gives the zero
    /// projector of dimension `dim`.
    pub fn from_vectors(dim: usize, vectors: &[StateVector]) -> Result<Self, HilbertError> {
        Self::from_vectors_with(dim, vectors, RANK_TOL)
    }

    pub fn from_vectors_with(dim: usize, vectors: &[StateVector], tol: f64) -> Result<Self, HilbertError> {
        if dim == 0 {
            return Err(HilbertError::EmptySpace);
        }
        for v in vectors {
            check_dim(dim, v.dim())?;
        }
        let cols = DMatrix::from_fn(dim, vectors.len(), |r, c| vectors[c].amps[r]);
        Ok(Self::from_orthonormal(&orthonormal_basis(&cols, tol)))
    }

    /// Projector onto the ray through `v`.
    pub fn onto(v: &StateVector) -> Self {
        Self::from_orthonormal(&DMatrix::from_column_slice(v.dim(), 1, v.amplitudes()))
    }

    /// Validates a raw matrix against the projector invariants.
    pub fn from_matrix(m: DMatrix<C64>, tol: f64) -> Result<Self, HilbertError> {
        if m.nrows() != m.ncols() {
            return Err(HilbertError::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        if m.nrows() == 0 {
            return Err(HilbertError::EmptySpace);
        }
        if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(HilbertError::NonFinite);
        }
        let herm = max_hermitian_deviation(&m);
        if herm > tol {
            return Err(HilbertError::NotHermitian(herm));
        }
        let p = Projector { m };
        let idem = p.idempotence_residual();
        if idem > tol {
            return Err(HilbertError::NotIdempotent(idem));
        }
        let spec = p.spectrum_residual();
        if spec > tol {
            return Err(HilbertError::BadSpectrum(spec));
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    /// Rank, read off the trace.
    pub fn rank(&self) -> usize {
        self.m.trace().re.round().max(0.0) as usize
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.m.norm() <= tol
    }

    pub fn hermitian_residual(&self) -> f64 {
        max_hermitian_deviation(&self.m)
    }

    /// `‖P² − P‖_F`.
    pub fn idempotence_residual(&self) -> f64 {
        (&self.m * &self.m - &self.m).norm()
    }

    /// Largest distance of an eigenvalue from `{0, 1}`.
    pub fn spectrum_residual(&self) -> f64 {
        hermitian_eigen(&self.m)
            .eigenvalues
            .iter()
            .map(|&e| e.abs().min((e - 1.0).abs()))
            .fold(0.0, f64::max)
    }

    /// Worst violation of the projector invariants.
    pub fn invariant_residual(&self) -> f64 {
        self.hermitian_residual()
            .max(self.idempotence_residual())
            .max(self.spectrum_residual())
    }

    /// Orthonormal basis of the range, as columns.
    pub fn range_basis(&self) -> DMatrix<C64> {
        let eig = hermitian_eigen(&self.m);
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| eig.eigenvalues[i] > 0.5).collect();
        DMatrix::from_fn(self.dim(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])])
    }

    /// `I − P`.
    pub fn orthocomplement(&self) -> Projector {
        Projector { m: DMatrix::identity(self.dim(), self.dim()) - &self.m }
    }

    /// Projector onto the closed span of both ranges.
    pub fn join(&self, other: &Projector) -> Result<Projector, HilbertError> {
        self.join_with(other, RANK_TOL)
    }

    pub fn join_with(&self, other: &Projector, tol: f64) -> Result<Projector, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        let (a, b) = (self.range_basis(), other.range_basis());
        let mut cols = DMatrix::zeros(self.dim(), a.ncols() + b.ncols());
        cols.columns_mut(0, a.ncols()).copy_from(&a);
        cols.columns_mut(a.ncols(), b.ncols()).copy_from(&b);
        Ok(Self::from_orthonormal(&orthonormal_basis(&cols, tol)))
    }

    /// Projector onto the intersection of both ranges, `(P⊥ ∨ Q⊥)⊥`.
    pub fn meet(&self, other: &Projector) -> Result<Projector, HilbertError> {
        self.meet_with(other, RANK_TOL)
    }

    pub fn meet_with(&self, other: &Projector, tol: f64) -> Result<Projector, HilbertError> {
        Ok(self
            .orthocomplement()
            .join_with(&other.orthocomplement(), tol)?
            .orthocomplement())
    }

    /// Subspace containment `range(self) ⊆ range(other)`, tested as `QP = P`.
    pub fn leq(&self, other: &Projector) -> Result<bool, HilbertError> {
        self.leq_with(other, RANK_TOL)
    }

    pub fn leq_with(&self, other: &Projector, tol: f64) -> Result<bool, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok((&other.m * &self.m - &self.m).norm() <= tol)
    }

    /// `‖PQ‖_F`; zero exactly when the ranges are orthogonal.
    pub fn overlap_norm(&self, other: &Projector) -> Result<f64, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok((&self.m * &other.m).norm())
    }

    /// Frobenius distance between the two matrices.
    pub fn distance(&self, other: &Projector) -> Result<f64, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok((&self.m - &other.m).norm())
    }

    /// Matrix sum of projectors with pairwise orthogonal ranges. Orthogonality
    /// is the caller's responsibility; the result is checked against the
    /// projector invariants.
    pub fn orthogonal_sum(dim: usize, parts: &[&Projector], tol: f64) -> Result<Projector, HilbertError> {
        let mut m = DMatrix::zeros(dim, dim);
        for p in parts {
            check_dim(dim, p.dim())?;
            m += &p.m;
        }
        let sum = Projector { m };
        let idem = sum.idempotence_residual();
        if idem > tol {
            return Err(HilbertError::NotIdempotent(idem));
        }
        Ok(sum)
    }

    pub fn as_operator(&self) -> HermitianOperator {
        HermitianOperator { m: self.m.clone() }
    }
}

/// Born-rule probability `⟨ψ|P|ψ⟩`, read as a truth value in `[0, 1]`.
pub fn born_value(p: &Projector, psi: &StateVector) -> Result<f64, HilbertError> {
    born_value_with(p, psi, RANK_TOL)
}

/// As [`born_value`]; raw values within `tol` of `[0, 1]` are clamped into it.
pub fn born_value_with(p: &Projector, psi: &StateVector, tol: f64) -> Result<f64, HilbertError> {
    check_dim(p.dim(), psi.dim())?;
    let raw = quadratic_form(&p.m, &psi.amps);
    if !raw.is_finite() || raw < -tol || raw > 1.0 + tol {
        return Err(HilbertError::NumericRange(raw));
    }
    Ok(raw.clamp(0.0, 1.0))
}

/// A Hermitian matrix: an observable, or a sum of projectors.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    m: DMatrix<C64>,
}

impl HermitianOperator {
    pub fn new(m: DMatrix<C64>) -> Result<Self, HilbertError> {
        Self::new_with(m, RANK_TOL)
    }

    pub fn new_with(m: DMatrix<C64>, tol: f64) -> Result<Self, HilbertError> {
        if m.nrows() != m.ncols() {
            return Err(HilbertError::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
        let dev = max_hermitian_deviation(&m);
        if dev > tol {
            return Err(HilbertError::NotHermitian(dev));
        }
        Ok(HermitianOperator { m })
    }

    pub fn identity(dim: usize) -> Self {
        HermitianOperator { m: DMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    /// Largest eigenvalue.
    pub fn lambda_max(&self) -> f64 {
        if self.dim() == 0 {
            return f64::NEG_INFINITY;
        }
        hermitian_eigen(&self.m).eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = hermitian_eigen(&self.m).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn add(&self, other: &HermitianOperator) -> Result<HermitianOperator, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok(HermitianOperator { m: &self.m + &other.m })
    }

    pub fn scale(&self, k: f64) -> HermitianOperator {
        HermitianOperator { m: self.m.scale(k) }
    }

    /// Matrix product. The product of commuting Hermitian operators is Hermitian;
    /// this is checked.
    pub fn compose(&self, other: &HermitianOperator) -> Result<HermitianOperator, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Self::new(&self.m * &other.m)
    }

    /// `‖AB − BA‖_F`.
    pub fn commutator_norm(&self, other: &HermitianOperator) -> Result<f64, HilbertError> {
        check_dim(self.dim(), other.dim())?;
        Ok((&self.m * &other.m - &other.m * &self.m).norm())
    }

    /// `⟨ψ|A|ψ⟩`.
    pub fn expectation(&self, psi: &StateVector) -> Result<f64, HilbertError> {
        check_dim(self.dim(), psi.dim())?;
        Ok(quadratic_form(&self.m, &psi.amps))
    }

    pub fn apply(&self, psi: &StateVector) -> Result<DVector<C64>, HilbertError> {
        check_dim(self.dim(), psi.dim())?;
        Ok(&self.m * &psi.amps)
    }
}

/// Single-qubit Pauli axes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn pauli(self) -> DMatrix<C64> {
        let (o, l, i) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 1.0));
        match self {
            Axis::X => DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
            Axis::Y => DMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
            Axis::Z => DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Axis::X => 'X',
            Axis::Y => 'Y',
            Axis::Z => 'Z',
        }
    }
}

/// Kronecker product of the given single-site matrices, first factor leftmost.
fn tensor(factors: &[DMatrix<C64>]) -> DMatrix<C64> {
    factors
        .iter()
        .fold(DMatrix::identity(1, 1), |acc, f| acc.kronecker(f))
}

/// `I ⊗ … ⊗ σ_axis ⊗ … ⊗ I` with the Pauli matrix at 1-based `site`.
pub fn pauli_embed(axis: Axis, site: usize, n_sites: usize) -> Result<HermitianOperator, HilbertError> {
    embed_single(axis.pauli(), site, n_sites).map(|m| HermitianOperator { m })
}

/// Embeds a 2×2 matrix at 1-based `site` of an `n_sites`-qubit register.
pub fn embed_single(op: DMatrix<C64>, site: usize, n_sites: usize) -> Result<DMatrix<C64>, HilbertError> {
    if site == 0 || site > n_sites {
        return Err(HilbertError::IndexOutOfRange { site, n_sites });
    }
    let factors: Vec<DMatrix<C64>> = (1..=n_sites)
        .map(|k| if k == site { op.clone() } else { DMatrix::identity(2, 2) })
        .collect();
    Ok(tensor(&factors))
}

/// Projector `(I + σ_axis)/2` onto spin up along `axis` at 1-based `site`.
pub fn spin_up_projector(axis: Axis, site: usize, n_sites: usize) -> Result<Projector, HilbertError> {
    let up = (DMatrix::identity(2, 2) + axis.pauli()).scale(0.5);
    embed_single(up, site, n_sites).map(|m| Projector { m })
}

//! Propositional functions on the unit sphere of a Hilbert space.
//!
//! Every projector `P` defines a function `p(ψ) = ⟨ψ|P|ψ⟩` from unit states to
//! `[0, 1]`. Under this map the orthocomplement becomes pointwise Łukasiewicz
//! negation, and the orthogonal sum of a pairwise exclusive family becomes
//! pointwise Łukasiewicz disjunction. Two functions are *exclusive* when
//! `p(ψ) + q(ψ) ≤ 1` for every state, which for projectors is a spectral
//! condition: `λ_max(P + Q) ≤ 1`.
//!
//! [`verify_conditions`] samples projectors, orthogonal families and states
//! from a seed and checks the four closure conditions of the representing
//! family, reporting worst-case residuals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hilbert::{self, HilbertError, Projector, StateVector, IDENTITY_TOL, RANK_TOL};
use crate::truth::{TruthError, TruthValue};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReprError {
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error("members {0} and {1} of the family are not exclusive")]
    NotExclusive(usize, usize),
    #[error("an empty family has no disjunction")]
    EmptyFamily,
    #[error(transparent)]
    Truth(#[from] TruthError),
}

/// The propositional function `ψ ↦ ⟨ψ|P|ψ⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct PropFunction {
    projector: Projector,
    label: Option<String>,
}

impl PropFunction {
    pub fn new(projector: Projector) -> Self {
        PropFunction { projector, label: None }
    }

    pub fn labeled(projector: Projector, label: impl Into<String>) -> Self {
        PropFunction { projector, label: Some(label.into()) }
    }

    /// The always-false function `F` (zero projector).
    pub fn always_false(dim: usize) -> Self {
        Self::labeled(Projector::zero(dim), "F")
    }

    /// The always-true function `V` (identity).
    pub fn always_true(dim: usize) -> Self {
        Self::labeled(Projector::identity(dim), "V")
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.projector.dim()
    }

    pub fn eval(&self, psi: &StateVector) -> Result<f64, ReprError> {
        Ok(hilbert::born_value(&self.projector, psi)?)
    }

    /// [`eval`](Self::eval) converted exactly into a kernel truth value.
    pub fn eval_truth(&self, psi: &StateVector) -> Result<TruthValue, ReprError> {
        Ok(TruthValue::from_f64(self.eval(psi)?)?)
    }

    /// Pointwise Łukasiewicz negation, realized by the orthocomplement.
    pub fn neg(&self) -> PropFunction {
        PropFunction {
            projector: self.projector.orthocomplement(),
            label: self.label.as_ref().map(|l| format!("~{l}")),
        }
    }

    pub fn exclusive(&self, other: &PropFunction) -> Result<bool, ReprError> {
        self.exclusive_with(other, RANK_TOL)
    }

    /// Spectral exclusivity test `λ_max(P + Q) ≤ 1 + tol`.
    pub fn exclusive_with(&self, other: &PropFunction, tol: f64) -> Result<bool, ReprError> {
        let t = exclusivity_tests(self, other, tol)?;
        debug_assert_eq!(
            t.spectral, t.algebraic,
            "spectral and algebraic exclusivity disagree (lambda_max {}, |PQ| {})",
            t.lambda_max, t.overlap_norm
        );
        Ok(t.spectral)
    }
}

/// Both exclusivity criteria for a pair of propositional functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExclusivityTests {
    /// `λ_max(P + Q)`: the supremum of `p(ψ) + q(ψ)` over unit states.
    pub lambda_max: f64,
    /// `‖PQ‖_F`.
    pub overlap_norm: f64,
    pub spectral: bool,
    pub algebraic: bool,
}

pub fn exclusivity_tests(p: &PropFunction, q: &PropFunction, tol: f64) -> Result<ExclusivityTests, ReprError> {
    let sum = p.projector.as_operator().add(&q.projector.as_operator())?;
    let lambda_max = sum.lambda_max();
    let overlap_norm = p.projector.overlap_norm(&q.projector)?;
    Ok(ExclusivityTests {
        lambda_max,
        overlap_norm,
        spectral: lambda_max <= 1.0 + tol,
        algebraic: overlap_norm <= tol,
    })
}

/// Łukasiewicz disjunction of a pairwise exclusive family: the orthogonal sum
/// of the projectors.
pub fn disj_exclusive(ps: &[PropFunction]) -> Result<PropFunction, ReprError> {
    disj_exclusive_with(ps, RANK_TOL)
}

pub fn disj_exclusive_with(ps: &[PropFunction], tol: f64) -> Result<PropFunction, ReprError> {
    let first = ps.first().ok_or(ReprError::EmptyFamily)?;
    let dim = first.dim();
    for (i, p) in ps.iter().enumerate() {
        if p.dim() != dim {
            return Err(HilbertError::DimensionMismatch { expected: dim, found: p.dim() }.into());
        }
        for (j, q) in ps.iter().enumerate().skip(i + 1) {
            if !p.exclusive_with(q, tol)? {
                return Err(ReprError::NotExclusive(i, j));
            }
        }
    }
    let parts: Vec<&Projector> = ps.iter().map(|p| &p.projector).collect();
    let sum = Projector::orthogonal_sum(dim, &parts, tol)?;
    let label = ps
        .iter()
        .map(|p| p.label.clone())
        .collect::<Option<Vec<_>>>()
        .map(|ls| ls.join(" | "));
    Ok(PropFunction { projector: sum, label })
}

/// True unless `p` is exclusive with itself without being `F`.
pub fn only_f_self_exclusive(p: &PropFunction) -> bool {
    only_f_self_exclusive_with(p, RANK_TOL)
}

pub fn only_f_self_exclusive_with(p: &PropFunction, tol: f64) -> bool {
    let self_exclusive = p.projector.as_operator().scale(2.0).lambda_max() <= 1.0 + tol;
    !self_exclusive || p.projector.rank() == 0
}

const STATE_STREAM: u64 = 1;
const PROJECTOR_STREAM: u64 = 2;
const FAMILY_STREAM: u64 = 3;

/// Random stream for sample `index` of kind `tag`, independent of the order in
/// which samples are drawn.
pub fn sample_rng(seed: u64, tag: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((tag << 48) ^ index);
    rng
}

/// Projector onto the span of `k` Haar-random vectors, with `k` uniform in
/// `0..=dim`.
pub fn random_projector<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Projector, HilbertError> {
    let rank = rng.gen_range(0..=dim);
    let vectors = (0..rank)
        .map(|_| StateVector::random_with(dim, rng))
        .collect::<Result<Vec<_>, _>>()?;
    Projector::from_vectors(dim, &vectors)
}

/// Random family of at most `dim` projectors with pairwise orthogonal ranges.
///
/// A Haar-random orthonormal basis is split among the members; each basis
/// vector goes to a uniformly chosen member or is left out, so members of rank
/// zero (copies of `F`) occur.
pub fn random_orthogonal_family<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<Vec<Projector>, HilbertError> {
    let members = rng.gen_range(1..=dim);
    let vectors = (0..dim)
        .map(|_| StateVector::random_with(dim, rng))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = nalgebra::DMatrix::from_fn(dim, dim, |r, c| vectors[c].amplitudes()[r]);
    let basis = hilbert::orthonormal_basis(&cols, RANK_TOL);
    let mut groups: Vec<Vec<StateVector>> = vec![Vec::new(); members];
    for c in 0..basis.ncols() {
        let owner = rng.gen_range(0..=members);
        if owner < members {
            groups[owner].push(StateVector::new(basis.column(c).iter().copied().collect())?);
        }
    }
    groups.iter().map(|g| Projector::from_vectors(dim, g)).collect()
}

/// Tolerances used by [`verify_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Projector invariants and exclusivity.
    pub construction: f64,
    /// Pointwise identities.
    pub identity: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { construction: RANK_TOL, identity: IDENTITY_TOL }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub dim: usize,
    pub n_state_samples: usize,
    pub n_family_samples: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl VerifyConfig {
    pub fn new(dim: usize, n_state_samples: usize, n_family_samples: usize, seed: u64) -> Self {
        VerifyConfig { dim, n_state_samples, n_family_samples, seed, tolerances: Tolerances::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub description: String,
    pub passed: bool,
    /// Largest deviation from the pointwise identity checked by the condition.
    pub worst_residual: f64,
    /// Largest violation of the projector invariants by a constructed member.
    pub worst_validity_residual: f64,
    pub checks: usize,
}

impl ConditionResult {
    fn new(description: &str) -> Self {
        ConditionResult {
            description: description.into(),
            passed: true,
            worst_residual: 0.0,
            worst_validity_residual: 0.0,
            checks: 0,
        }
    }

    // Negated comparisons so that a NaN residual fails the condition.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn residual(&mut self, r: f64, tol: f64) {
        self.checks += 1;
        self.worst_residual = self.worst_residual.max(r);
        if !(r <= tol) {
            self.passed = false;
        }
    }

    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn validity(&mut self, r: f64, tol: f64) {
        self.worst_validity_residual = self.worst_validity_residual.max(r);
        if !(r <= tol) {
            self.passed = false;
        }
    }

    fn require(&mut self, ok: bool) {
        self.checks += 1;
        if !ok {
            self.passed = false;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub dim: usize,
    pub n_state_samples: usize,
    pub n_family_samples: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub condition1: ConditionResult,
    pub condition2: ConditionResult,
    pub condition3: ConditionResult,
    pub condition4: ConditionResult,
    pub all_passed: bool,
}

impl TheoremReport {
    pub fn conditions(&self) -> [&ConditionResult; 4] {
        [&self.condition1, &self.condition2, &self.condition3, &self.condition4]
    }

    /// Largest residual of any kind over all four conditions.
    pub fn worst_residual(&self) -> f64 {
        self.conditions()
            .iter()
            .map(|c| c.worst_residual.max(c.worst_validity_residual))
            .fold(0.0, f64::max)
    }
}

/// Samples states, projectors and orthogonal families from `config.seed` and
/// checks the four closure conditions. Failures are reported, not raised.
pub fn verify_conditions(config: &VerifyConfig) -> Result<TheoremReport, ReprError> {
    let dim = config.dim;
    if dim == 0 {
        return Err(HilbertError::EmptySpace.into());
    }
    let tol = config.tolerances;
    let states = (0..config.n_state_samples)
        .map(|j| StateVector::random_with(dim, &mut sample_rng(config.seed, STATE_STREAM, j as u64)))
        .collect::<Result<Vec<_>, _>>()?;

    let mut c1 = ConditionResult::new("contains the always-false function F");
    let f = PropFunction::always_false(dim);
    c1.validity(f.projector.invariant_residual(), tol.construction);
    for psi in &states {
        c1.residual(f.eval(psi)?.abs(), tol.identity);
    }

    let mut c2 = ConditionResult::new("closed under Lukasiewicz negation");
    let mut c4 = ConditionResult::new("F is the only self-exclusive member");
    for special in [PropFunction::always_false(dim), PropFunction::always_true(dim)] {
        c4.require(only_f_self_exclusive_with(&special, tol.construction));
    }
    let mut values = vec![0.0; states.len()];
    for i in 0..config.n_family_samples {
        let p = PropFunction::new(random_projector(dim, &mut sample_rng(config.seed, PROJECTOR_STREAM, i as u64))?);
        let n = p.neg();
        c2.validity(n.projector.invariant_residual(), tol.construction);
        for (v, psi) in values.iter_mut().zip(&states) {
            *v = p.eval(psi)?;
            c2.residual((n.eval(psi)? - (1.0 - *v)).abs(), tol.identity);
            if !(0.0..=1.0).contains(v) {
                c2.passed = false;
            }
        }
        c4.require(only_f_self_exclusive_with(&p, tol.construction));
        if p.projector.as_operator().scale(2.0).lambda_max() <= 1.0 + tol.construction {
            // Self-exclusive: must be F.
            c4.residual(p.projector.matrix().norm(), tol.construction);
        }
    }

    let mut c3 = ConditionResult::new("closed under Lukasiewicz disjunction of pairwise exclusive families");
    for i in 0..config.n_family_samples {
        let family: Vec<PropFunction> =
            random_orthogonal_family(dim, &mut sample_rng(config.seed, FAMILY_STREAM, i as u64))?
                .into_iter()
                .map(PropFunction::new)
                .collect();
        let joined = match disj_exclusive_with(&family, tol.construction) {
            Ok(j) => j,
            Err(ReprError::NotExclusive(..)) | Err(ReprError::Hilbert(HilbertError::NotIdempotent(_))) => {
                c3.require(false);
                continue;
            }
            Err(e) => return Err(e),
        };
        c3.validity(joined.projector.invariant_residual(), tol.construction);
        for psi in &states {
            let mut sum = 0.0;
            for p in &family {
                sum += p.eval(psi)?;
            }
            c3.residual((joined.eval(psi)? - sum.min(1.0)).abs(), tol.identity);
        }
    }

    let all_passed = c1.passed && c2.passed && c3.passed && c4.passed;
    Ok(TheoremReport {
        dim,
        n_state_samples: config.n_state_samples,
        n_family_samples: config.n_family_samples,
        seed: config.seed,
        tolerances: tol,
        condition1: c1,
        condition2: c2,
        condition3: c3,
        condition4: c4,
        all_passed,
    })
}

//! The three-qubit GHZ argument, computed three ways.
//!
//! * Quantum: the GHZ state is a joint eigenvector of `X₁Y₂Y₃`, `Y₁X₂Y₃`,
//!   `Y₁Y₂X₃` and `X₁X₂X₃` with eigenvalues `+1, +1, +1, −1`.
//! * Classical: no assignment of `±1` to the six local outcomes satisfies all
//!   four product equations. Two independent routes find this: brute force over
//!   the 64 numeric assignments, and truth tables of the XOR encoding.
//! * Many-valued: in the GHZ state every elementary proposition "spin of
//!   particle i along X (Y) is up" has Born-rule degree exactly 1/2, as does its
//!   negation, so no crisp preassignment exists to feed the XOR system.
//!
//! Sign convention: with `|0⟩` spin up along Z and particle 1 as the leftmost
//! tensor factor, `(|000⟩ − |111⟩)/√2` ([`Phase::Minus`], the default) has the
//! eigenvalues above. `(|000⟩ + |111⟩)/√2` ([`Phase::Plus`]) flips all four
//! signs.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::formula::{Assignment, BinOp, Formula};
use crate::hilbert::{self, Axis, HermitianOperator, HilbertError, StateFile, StateVector, C64};
use crate::truth::TruthValue;

pub const N_SITES: usize = 3;
pub const DIM: usize = 8;

/// Relative sign between `|000⟩` and `|111⟩`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Phase {
    Plus,
    #[default]
    Minus,
}

impl Phase {
    pub fn sign(self) -> f64 {
        match self {
            Phase::Plus => 1.0,
            Phase::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Phase::Plus => 1,
            Phase::Minus => -1,
        }
    }
}

impl std::str::FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Phase::Plus),
            "-1" | "-" => Ok(Phase::Minus),
            other => Err(format!("phase must be +1 or -1, got {other:?}")),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::Plus => "+1",
            Phase::Minus => "-1",
        })
    }
}

impl Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match i8::deserialize(d)? {
            1 => Ok(Phase::Plus),
            -1 => Ok(Phase::Minus),
            other => Err(serde::de::Error::custom(format!("phase must be +1 or -1, got {other}"))),
        }
    }
}

/// `(|000⟩ + phase·|111⟩)/√2`.
pub fn ghz_state(phase: Phase) -> StateVector {
    let mut amps = vec![C64::new(0.0, 0.0); DIM];
    amps[0] = C64::new(1.0, 0.0);
    amps[DIM - 1] = C64::new(phase.sign(), 0.0);
    StateVector::new(amps).expect("nonzero vector")
}

/// Three-site Pauli product such as `X₁Y₂Y₃`.
#[derive(Debug, Clone, PartialEq)]
pub struct GhzObservable {
    pattern: [Axis; N_SITES],
    operator: HermitianOperator,
}

impl GhzObservable {
    /// `pattern` is three characters from `{X, Y}`, e.g. `"XYY"`.
    pub fn new(pattern: &str) -> Result<Self, HilbertError> {
        let axes: Vec<Axis> = pattern
            .chars()
            .map(|c| match c {
                'X' => Ok(Axis::X),
                'Y' => Ok(Axis::Y),
                _ => Err(HilbertError::Format(format!("bad observable pattern {pattern:?}"))),
            })
            .collect::<Result<_, _>>()?;
        let pattern: [Axis; N_SITES] = axes
            .try_into()
            .map_err(|_| HilbertError::Format(format!("pattern {pattern:?} must name three sites")))?;
        let m = pattern
            .iter()
            .fold(DMatrix::identity(1, 1), |acc: DMatrix<C64>, a| acc.kronecker(&a.pauli()));
        Ok(GhzObservable { pattern, operator: HermitianOperator::new(m)? })
    }

    /// `X₁Y₂Y₃`, `Y₁X₂Y₃`, `Y₁Y₂X₃`, `X₁X₂X₃`, in that order.
    pub fn standard() -> [GhzObservable; 4] {
        STANDARD_PATTERNS.map(|p| GhzObservable::new(p).expect("valid pattern"))
    }

    pub fn pattern(&self) -> String {
        self.pattern.iter().map(|a| a.symbol()).collect()
    }

    pub fn axes(&self) -> [Axis; N_SITES] {
        self.pattern
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.operator
    }
}

pub const STANDARD_PATTERNS: [&str; 4] = ["XYY", "YXY", "YYX", "XXX"];
/// Right-hand sides of the four product equations.
pub const STANDARD_RHS: [i8; 4] = [1, 1, 1, -1];

/// `⟨ψ|O|ψ⟩` for the four standard observables, in [`STANDARD_PATTERNS`] order.
pub fn ghz_expectations(psi: &StateVector) -> Result<[f64; 4], HilbertError> {
    let obs = GhzObservable::standard();
    let mut out = [0.0; 4];
    for (o, slot) in obs.iter().zip(out.iter_mut()) {
        *slot = o.operator.expectation(psi)?;
    }
    Ok(out)
}

/// Outcomes `±1` for `X₁, X₂, X₃` and `Y₁, Y₂, Y₃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalAssignment {
    pub x: [i8; N_SITES],
    pub y: [i8; N_SITES],
}

impl ClassicalAssignment {
    /// Assignment number `index` in lexicographic order over
    /// `(X₁, X₂, X₃, Y₁, Y₂, Y₃)` with `+1 < −1`.
    pub fn from_index(index: u8) -> Self {
        let v = |k: u32| if (index >> (5 - k)) & 1 == 0 { 1 } else { -1 };
        ClassicalAssignment { x: [v(0), v(1), v(2)], y: [v(3), v(4), v(5)] }
    }

    pub fn all() -> impl Iterator<Item = ClassicalAssignment> {
        (0..64u8).map(Self::from_index)
    }

    pub fn value(&self, axis: Axis, site: usize) -> i8 {
        match axis {
            Axis::X => self.x[site - 1],
            Axis::Y => self.y[site - 1],
            Axis::Z => panic!("no Z outcomes in a GHZ assignment"),
        }
    }

    /// Crisp truth values for `x1..x3, y1..y3` under `+1 ↔ 1`, `−1 ↔ 0`.
    pub fn to_truth(&self) -> Assignment {
        let mut a = Assignment::new();
        for site in 1..=N_SITES {
            a.insert(format!("x{site}"), TruthValue::from_bool(self.x[site - 1] == 1));
            a.insert(format!("y{site}"), TruthValue::from_bool(self.y[site - 1] == 1));
        }
        a
    }
}

/// `Π factors = rhs` over `±1` outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEquation {
    pub factors: Vec<(Axis, usize)>,
    pub rhs: i8,
}

impl ProductEquation {
    pub fn from_pattern(pattern: &str, rhs: i8) -> Self {
        let factors = pattern
            .chars()
            .enumerate()
            .map(|(i, c)| (if c == 'X' { Axis::X } else { Axis::Y }, i + 1))
            .collect();
        ProductEquation { factors, rhs }
    }

    pub fn lhs(&self, a: &ClassicalAssignment) -> i8 {
        self.factors.iter().map(|&(axis, site)| a.value(axis, site)).product()
    }

    pub fn holds(&self, a: &ClassicalAssignment) -> bool {
        self.lhs(a) == self.rhs
    }
}

pub fn ghz_equations() -> Vec<ProductEquation> {
    STANDARD_PATTERNS
        .iter()
        .zip(STANDARD_RHS)
        .map(|(p, r)| ProductEquation::from_pattern(p, r))
        .collect()
}

/// All assignments satisfying every equation, in lexicographic order.
pub fn satisfying_assignments(equations: &[ProductEquation]) -> Vec<ClassicalAssignment> {
    ClassicalAssignment::all()
        .filter(|a| equations.iter().all(|e| e.holds(a)))
        .collect()
}

/// The parity argument: multiplying all four equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParitySummary {
    /// Product of the left-hand sides; every symbol occurs an even number of
    /// times, so this is `+1` under every assignment.
    pub lhs_product: i8,
    pub rhs_product: i8,
    /// Occurrences of each symbol across the four left-hand sides.
    pub symbol_counts: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalOutcome {
    pub solutions: Vec<ClassicalAssignment>,
    pub parity: ParitySummary,
}

pub fn parity_summary(equations: &[ProductEquation]) -> ParitySummary {
    let mut symbol_counts = BTreeMap::new();
    for e in equations {
        for &(axis, site) in &e.factors {
            *symbol_counts.entry(format!("{}{}", axis.symbol(), site)).or_insert(0) += 1;
        }
    }
    let lhs_values: Vec<i8> = ClassicalAssignment::all()
        .map(|a| equations.iter().map(|e| e.lhs(&a)).product())
        .collect();
    let all_even = symbol_counts.values().all(|c| c % 2 == 0);
    let lhs_product = if all_even && lhs_values.iter().all(|&v| v == 1) {
        1
    } else if lhs_values.iter().all(|&v| v == -1) {
        -1
    } else {
        0
    };
    ParitySummary {
        lhs_product,
        rhs_product: equations.iter().map(|e| e.rhs).product(),
        symbol_counts,
    }
}

/// Exhaustive search over all 64 outcome assignments.
pub fn classical_exhaustive() -> ClassicalOutcome {
    let eqs = ghz_equations();
    ClassicalOutcome { solutions: satisfying_assignments(&eqs), parity: parity_summary(&eqs) }
}

/// Outcome of the truth-table check of the XOR encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XorSystemCheck {
    /// The four formulas, each written with the constant it must match.
    pub equations: Vec<String>,
    pub satisfying_assignments: usize,
    pub total_assignments: usize,
    /// The XOR of all four left-hand sides evaluated to 0 on every row.
    pub aggregate_lhs_always_false: bool,
    /// Value of `V ^ V ^ V ^ F`.
    pub aggregate_rhs: String,
    /// Row by row, the XOR system holds exactly when the product system does.
    pub agrees_with_product_system: bool,
}

/// Left-hand side formulas `x1 ^ y2 ^ y3`, … and their constants.
pub fn xor_equations() -> Vec<(Formula, Formula)> {
    STANDARD_PATTERNS
        .iter()
        .zip(STANDARD_RHS)
        .map(|(p, rhs)| {
            let atoms = p
                .chars()
                .enumerate()
                .map(|(i, c)| Formula::atom(format!("{}{}", c.to_ascii_lowercase(), i + 1)));
            let lhs = Formula::fold(BinOp::Xor, atoms).expect("three atoms");
            (lhs, if rhs == 1 { Formula::ConstTrue } else { Formula::ConstFalse })
        })
        .collect()
}

fn xor_row_holds(eqs: &[(Formula, Formula)], a: &Assignment) -> bool {
    eqs.iter().all(|(lhs, rhs)| {
        let l = lhs.evaluate(a).expect("crisp row");
        let r = rhs.evaluate(a).expect("constant");
        l == r
    })
}

pub fn xor_system_check() -> XorSystemCheck {
    let eqs = xor_equations();
    let names = ["x1", "x2", "x3", "y1", "y2", "y3"];
    let rows: Vec<Assignment> = (0..64u64).map(|bits| Assignment::from_bits(&names, bits)).collect();

    let satisfying = rows.iter().filter(|a| xor_row_holds(&eqs, a)).count();

    let aggregate = Formula::fold(BinOp::Xor, eqs.iter().map(|(l, _)| l.clone())).expect("four formulas");
    let aggregate_lhs_always_false = rows.iter().all(|a| aggregate.evaluate(a).expect("crisp row").is_zero());
    let aggregate_rhs = Formula::fold(BinOp::Xor, eqs.iter().map(|(_, r)| r.clone()))
        .expect("four constants")
        .evaluate(&Assignment::new())
        .expect("constants only");

    let products = ghz_equations();
    let agrees = ClassicalAssignment::all()
        .all(|a| products.iter().all(|e| e.holds(&a)) == xor_row_holds(&eqs, &a.to_truth()));

    XorSystemCheck {
        equations: eqs.iter().map(|(l, r)| format!("{l} == {r}")).collect(),
        satisfying_assignments: satisfying,
        total_assignments: rows.len(),
        aggregate_lhs_always_false,
        aggregate_rhs: aggregate_rhs.to_string(),
        agrees_with_product_system: agrees,
    }
}

/// Born-rule degree of "spin of particle `site` along `axis` is up", and of
/// its negation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementaryDegree {
    pub axis: Axis,
    pub site: usize,
    pub up: f64,
    pub down: f64,
}

impl ElementaryDegree {
    pub fn name(&self) -> String {
        format!("{}{}", self.axis.symbol(), self.site)
    }
}

/// Degrees for `X1, X2, X3, Y1, Y2, Y3`, in that order.
pub fn elementary_degrees(psi: &StateVector) -> Result<Vec<ElementaryDegree>, HilbertError> {
    let mut out = Vec::with_capacity(2 * N_SITES);
    for axis in [Axis::X, Axis::Y] {
        for site in 1..=N_SITES {
            let up = hilbert::spin_up_projector(axis, site, N_SITES)?;
            out.push(ElementaryDegree {
                axis,
                site,
                up: hilbert::born_value(&up, psi)?,
                down: hilbert::born_value(&up.orthocomplement(), psi)?,
            });
        }
    }
    Ok(out)
}

/// Renders a degree as a small-denominator fraction when it is one to within
/// `1e-12`, otherwise as a decimal.
pub fn render_degree(x: f64) -> String {
    for den in 1..=64u32 {
        let num = (x * den as f64).round();
        if (x - num / den as f64).abs() <= 1e-12 {
            let g = gcd(num as u64, den as u64).max(1);
            let (n, d) = (num as u64 / g, den as u64 / g);
            return if d == 1 { n.to_string() } else { format!("{n}/{d}") };
        }
    }
    format!("{x}")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateDescription {
    pub label: String,
    pub phase: Phase,
    #[serde(flatten)]
    pub vector: StateFile,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GhzReport {
    pub state: StateDescription,
    pub expectations: BTreeMap<String, f64>,
    pub classical_solutions: usize,
    pub parity: ParitySummary,
    pub xor_check: XorSystemCheck,
    pub degrees: BTreeMap<String, String>,
    pub negated_degrees: BTreeMap<String, String>,
    /// Whether every elementary proposition is crisp, which the XOR system
    /// presupposes.
    pub crisp_premise_holds: bool,
    pub conclusion: String,
}

/// Runs the quantum, classical and many-valued analyses for the GHZ state with
/// the given phase.
pub fn ghz_report(phase: Phase) -> GhzReport {
    let psi = ghz_state(phase);
    let exps = ghz_expectations(&psi).expect("dimension 8");
    let classical = classical_exhaustive();
    let xor_check = xor_system_check();
    let degrees = elementary_degrees(&psi).expect("dimension 8");

    let crisp_premise_holds = degrees.iter().all(|d| d.up.abs() < 1e-12 || (d.up - 1.0).abs() < 1e-12);
    let conclusion = format!(
        "No assignment of definite +1/-1 outcomes reproduces the quantum correlations \
         ({} of 64 satisfy them, and the left-hand sides multiply to {:+} while the right-hand sides multiply to {:+}). \
         Read as many-valued propositions, every elementary spin statement has degree {} and so does its negation; \
         the two-valued premise of the argument {}.",
        classical.solutions.len(),
        classical.parity.lhs_product,
        classical.parity.rhs_product,
        degrees.first().map(|d| render_degree(d.up)).unwrap_or_default(),
        if crisp_premise_holds { "holds" } else { "does not hold" },
    );

    GhzReport {
        state: StateDescription {
            label: format!("(|000> {} |111>)/sqrt(2)", if phase == Phase::Plus { "+" } else { "-" }),
            phase,
            vector: StateFile::from(&psi),
        },
        expectations: STANDARD_PATTERNS.iter().map(|p| p.to_string()).zip(exps).collect(),
        classical_solutions: classical.solutions.len(),
        parity: classical.parity,
        xor_check,
        degrees: degrees.iter().map(|d| (d.name(), render_degree(d.up))).collect(),
        negated_degrees: degrees.iter().map(|d| (d.name(), render_degree(d.down))).collect(),
        crisp_premise_holds,
        conclusion,
    }
}

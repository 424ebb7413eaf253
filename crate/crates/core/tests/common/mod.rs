#![allow(dead_code)]

use std::collections::HashMap;

use qlogic::formula::{BinOp, Formula};
use rand::Rng;

pub const OPS: [BinOp; 5] = [BinOp::LukConj, BinOp::LukDisj, BinOp::MinConj, BinOp::MaxDisj, BinOp::Xor];

/// Random formula of depth at most `depth` over `atoms`.
pub fn random_formula<R: Rng>(rng: &mut R, depth: usize, atoms: &[&str]) -> Formula {
    let leaf = depth == 0 || rng.gen_bool(0.2);
    if leaf {
        return match rng.gen_range(0..10) {
            0 => Formula::ConstFalse,
            1 => Formula::ConstTrue,
            _ => Formula::atom(atoms[rng.gen_range(0..atoms.len())]),
        };
    }
    if rng.gen_bool(0.25) {
        return Formula::neg(random_formula(rng, depth - 1, atoms));
    }
    let op = OPS[rng.gen_range(0..OPS.len())];
    Formula::binary(op, random_formula(rng, depth - 1, atoms), random_formula(rng, depth - 1, atoms))
}

/// Classical truth-table semantics over booleans, independent of the
/// rational kernel.
pub fn classical_eval(f: &Formula, env: &HashMap<String, bool>) -> bool {
    match f {
        Formula::Atom(name) => env[name],
        Formula::ConstFalse => false,
        Formula::ConstTrue => true,
        Formula::Neg(c) => !classical_eval(c, env),
        Formula::LukConj(l, r) | Formula::MinConj(l, r) => classical_eval(l, env) && classical_eval(r, env),
        Formula::LukDisj(l, r) | Formula::MaxDisj(l, r) => classical_eval(l, env) || classical_eval(r, env),
        Formula::Xor(l, r) => classical_eval(l, env) != classical_eval(r, env),
    }
}

/// Distinct rationals `a/b` in `[0, 1]` with `1 ≤ b ≤ max_den`.
pub fn farey_grid(max_den: i64) -> Vec<qlogic::truth::TruthValue> {
    let mut v: Vec<_> = (1..=max_den)
        .flat_map(|b| (0..=b).map(move |a| qlogic::truth::TruthValue::new(a, b).unwrap()))
        .collect();
    v.sort();
    v.dedup();
    v
}

use qlogic::hilbert::{Projector, StateVector, C64};

/// Random pair `P ≤ Q`: `Q` spans random vectors, `P` spans random
/// combinations inside the range of `Q`.
pub fn nested_pair<R: Rng>(rng: &mut R, dim: usize) -> (Projector, Projector) {
    let k = rng.gen_range(1..=dim);
    let vs: Vec<StateVector> = (0..k).map(|_| StateVector::random_with(dim, rng).unwrap()).collect();
    let q = Projector::from_vectors(dim, &vs).unwrap();
    let basis = q.range_basis();
    let j = rng.gen_range(0..=basis.ncols());
    let ws: Vec<StateVector> = (0..j)
        .map(|_| {
            let coeffs = StateVector::random_with(basis.ncols(), rng).unwrap();
            StateVector::new((&basis * coeffs.as_vector()).iter().copied().collect::<Vec<C64>>()).unwrap()
        })
        .collect();
    let p = if ws.is_empty() { Projector::zero(dim) } else { Projector::from_vectors(dim, &ws).unwrap() };
    (p, q)
}

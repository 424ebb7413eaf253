mod common;

use qlogic::hilbert::{born_value, Projector, StateVector};
use qlogic::representation::{random_projector, sample_rng};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;

fn close(a: &Projector, b: &Projector) -> bool {
    a.distance(b).unwrap() <= TOL
}

#[test]
fn join_and_meet_are_commutative_associative_absorptive() {
    for i in 0..120 {
        let mut rng = sample_rng(11, 0, i);
        let dim = rng.gen_range(1..=5);
        let (p, q, r) = (
            random_projector(dim, &mut rng).unwrap(),
            random_projector(dim, &mut rng).unwrap(),
            random_projector(dim, &mut rng).unwrap(),
        );
        assert!(close(&p.join(&q).unwrap(), &q.join(&p).unwrap()));
        assert!(close(&p.meet(&q).unwrap(), &q.meet(&p).unwrap()));
        assert!(close(&p.join(&q).unwrap().join(&r).unwrap(), &p.join(&q.join(&r).unwrap()).unwrap()));
        assert!(close(&p.meet(&q).unwrap().meet(&r).unwrap(), &p.meet(&q.meet(&r).unwrap()).unwrap()));
        assert!(close(&p.join(&p.meet(&q).unwrap()).unwrap(), &p));
        assert!(close(&p.meet(&p.join(&q).unwrap()).unwrap(), &p));
    }
}

#[test]
fn orthocomplement_is_an_involution_and_complement() {
    for i in 0..120 {
        let mut rng = sample_rng(12, 0, i);
        let dim = rng.gen_range(1..=6);
        let p = random_projector(dim, &mut rng).unwrap();
        let c = p.orthocomplement();
        assert!(close(&c.orthocomplement(), &p));
        assert!(close(&p.join(&c).unwrap(), &Projector::identity(dim)));
        assert!(close(&p.meet(&c).unwrap(), &Projector::zero(dim)));
        assert_eq!(p.rank() + c.rank(), dim);
    }
}

#[test]
fn order_is_reversed_by_orthocomplement() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let dim = rng.gen_range(1..=6);
        let (p, q) = common::nested_pair(&mut rng, dim);
        assert!(p.leq(&q).unwrap());
        assert!(q.orthocomplement().leq(&p.orthocomplement()).unwrap());
        assert!(close(&p.meet(&q).unwrap(), &p));
        assert!(close(&p.join(&q).unwrap(), &q));
    }
}

#[test]
fn born_value_ignores_global_phase_and_splits_under_complement() {
    for i in 0..200 {
        let mut rng = sample_rng(14, 0, i);
        let dim = rng.gen_range(1..=6);
        let p = random_projector(dim, &mut rng).unwrap();
        let psi = StateVector::random_with(dim, &mut rng).unwrap();
        let v = born_value(&p, &psi).unwrap();
        assert!((0.0..=1.0).contains(&v));
        let theta = rng.gen_range(0.0..std::f64::consts::TAU);
        assert!((born_value(&p, &psi.with_phase(theta)).unwrap() - v).abs() <= 1e-12);
        assert!((born_value(&p.orthocomplement(), &psi).unwrap() + v - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn born_value_is_monotone_in_the_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=6);
        let (p, q) = common::nested_pair(&mut rng, dim);
        let psi = StateVector::random_with(dim, &mut rng).unwrap();
        assert!(born_value(&p, &psi).unwrap() <= born_value(&q, &psi).unwrap() + 1e-12);
    }
}

#[test]
fn haar_states_give_rank_over_dim_on_average() {
    let p = Projector::onto(&StateVector::basis(2, 0).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let n = 100_000;
    let mean = (0..n).map(|_| born_value(&p, &StateVector::random_with(2, &mut rng).unwrap()).unwrap()).sum::<f64>() / n as f64;
    assert!((mean - 0.5).abs() < 0.01, "mean {mean}");
}


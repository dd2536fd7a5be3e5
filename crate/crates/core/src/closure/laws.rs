use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::operator::ClosureOperator;
use super::set::ElementSet;

/// First counterexample found for one closure law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawWitness {
    /// `X ⊄ ρ(X)`.
    Extensivity { x: ElementSet },
    /// `X ⊆ Y` but `ρ(X) ⊄ ρ(Y)`.
    Monotonicity { x: ElementSet, y: ElementSet },
    /// `ρ(ρ(X)) ≠ ρ(X)`.
    Idempotency { x: ElementSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LawReport {
    pub trials: usize,
    pub extensivity: Option<LawWitness>,
    pub monotonicity: Option<LawWitness>,
    pub idempotency: Option<LawWitness>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.extensivity.is_none() && self.monotonicity.is_none() && self.idempotency.is_none()
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> ElementSet {
    // mix densities so that both tiny and large subsets get sampled
    let p: f64 = rng.gen();
    ElementSet::from_ids(n, (0..n).filter(|_| rng.gen_bool(p)))
}

/// Drops elements from `x` while `violates` keeps holding.
fn shrink(mut x: ElementSet, violates: impl Fn(&ElementSet) -> bool) -> ElementSet {
    loop {
        let smaller = x.iter().find_map(|e| {
            let mut y = x.clone();
            y.remove(e);
            violates(&y).then_some(y)
        });
        match smaller {
            Some(y) => x = y,
            None => return x,
        }
    }
}

/// Samples `trials` random subsets (and random supersets of them) and checks
/// extensivity, monotonicity and idempotency. Reports a shrunk witness for
/// each violated law.
pub fn verify_closure_laws<C: ClosureOperator + ?Sized>(
    op: &C,
    trials: usize,
    seed: u64,
) -> LawReport {
    assert!(trials >= 1, "at least one trial is required");
    let n = op.ground_size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport {
        trials,
        ..LawReport::default()
    };

    let extensive = |x: &ElementSet| x.is_subset(&op.close(x));
    let idempotent = |x: &ElementSet| {
        let c = op.close(x);
        op.close(&c) == c
    };
    let monotone = |x: &ElementSet, y: &ElementSet| op.close(x).is_subset(&op.close(y));

    for _ in 0..trials {
        let x = random_subset(&mut rng, n);
        let y = x.union(&random_subset(&mut rng, n));

        if report.extensivity.is_none() && !extensive(&x) {
            let x = shrink(x.clone(), |s| !extensive(s));
            report.extensivity = Some(LawWitness::Extensivity { x });
        }
        if report.idempotency.is_none() && !idempotent(&x) {
            let x = shrink(x.clone(), |s| !idempotent(s));
            report.idempotency = Some(LawWitness::Idempotency { x });
        }
        if report.monotonicity.is_none() && !monotone(&x, &y) {
            let x = shrink(x.clone(), |s| !monotone(s, &y));
            report.monotonicity = Some(LawWitness::Monotonicity { x, y });
        }
    }
    report
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EuclidError, PointSet};

pub const DEFAULT_MARGIN: f64 = 0.05;

/// Two point clouds in `[-1, 1]^d` on opposite sides of a random hyperplane
/// through the origin, so their convex hulls are disjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct D2Instance {
    pub points: PointSet,
    /// `true` for the positive side.
    pub labels: Vec<bool>,
    pub normal: Vec<f64>,
}

impl D2Instance {
    pub fn positives(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.labels.len()).filter(|&i| self.labels[i])
    }

    pub fn negatives(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.labels.len()).filter(|&i| !self.labels[i])
    }
}

/// Samples a uniform random unit normal, then uniform points in the box,
/// dropping points closer than `margin` to the hyperplane and points of a
/// class that is already full.
pub fn generate_d2_instance(d: usize, n_per_class: usize, margin: f64, seed: u64) -> Result<D2Instance, EuclidError> {
    if d == 0 {
        return Err(EuclidError::ZeroDimension);
    }
    if n_per_class == 0 || !(margin > 0.0 && margin < 1.0) {
        return Err(EuclidError::InvalidParameters(format!(
            "need n_per_class >= 1 and 0 < margin < 1, got {n_per_class} and {margin}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = loop {
        let v: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-3 && norm <= 1.0 {
            break v.into_iter().map(|x| x / norm).collect::<Vec<_>>();
        }
    };
    let (mut pos, mut neg) = (0, 0);
    let mut rows = Vec::with_capacity(2 * n_per_class);
    let mut labels = Vec::with_capacity(2 * n_per_class);
    while pos < n_per_class || neg < n_per_class {
        let p: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        let s: f64 = p.iter().zip(&normal).map(|(x, w)| x * w).sum();
        if s >= margin && pos < n_per_class {
            pos += 1;
        } else if s <= -margin && neg < n_per_class {
            neg += 1;
        } else {
            continue;
        }
        labels.push(s > 0.0);
        rows.push(p);
    }
    Ok(D2Instance {
        points: PointSet::new(d, rows)?,
        labels,
        normal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_are_full_and_strictly_separated() {
        for d in 2..=4 {
            let inst = generate_d2_instance(d, 50, 0.05, d as u64).unwrap();
            assert_eq!(inst.positives().count(), 50);
            assert_eq!(inst.negatives().count(), 50);
            for (i, p) in inst.points.iter().enumerate() {
                let s: f64 = p.iter().zip(&inst.normal).map(|(x, w)| x * w).sum();
                assert!(if inst.labels[i] { s >= 0.05 } else { s <= -0.05 });
                assert!(p.iter().all(|x| x.abs() <= 1.0));
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(generate_d2_instance(3, 20, 0.05, 7), generate_d2_instance(3, 20, 0.05, 7));
        assert_ne!(generate_d2_instance(3, 20, 0.05, 7), generate_d2_instance(3, 20, 0.05, 8));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_d2_instance(0, 5, 0.05, 0).is_err());
        assert!(generate_d2_instance(2, 0, 0.05, 0).is_err());
        assert!(generate_d2_instance(2, 5, 0.0, 0).is_err());
    }
}

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{accuracy, coverage, ExperimentError};
use crate::closure::{mcs_separate, ClosureOperator, ElementSet, ExtensionOrder, InstrumentedClosure, SeparationOutcome};
use crate::euclid::{generate_d2_instance, AlphaClosure, DEFAULT_MARGIN};
use crate::graph::{random_tree, random_tree_halfspace_labeling, GraphError, TreeClosure};

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for one unit of work, a pure function of the master seed and the
/// work coordinates. Results therefore do not depend on execution order.
pub fn derive_seed(master: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(splitmix(master), |h, &p| splitmix(h ^ splitmix(p)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub experiment: String,
    pub dim_or_size: usize,
    pub train_size: usize,
    pub seed: u64,
    pub accuracy: Option<f64>,
    pub coverage: Option<f64>,
    pub closure_calls: u64,
    pub partition: bool,
}

/// One averaged grid cell; the CSV row format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub experiment: String,
    pub dim_or_size: usize,
    pub train_size: usize,
    pub trials: usize,
    pub mean_accuracy: Option<f64>,
    pub mean_coverage: Option<f64>,
    pub undefined_count: usize,
    pub mean_closure_calls: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub cells: Vec<CellSummary>,
    pub trials: Vec<TrialResult>,
    /// Trees drawn again because no edge gave a balanced split.
    pub resampled_trees: usize,
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    (n > 0).then(|| sum / n as f64)
}

/// Averages trials per `(experiment, dim_or_size, train_size)` cell, in
/// order of first appearance. Undefined metrics are left out of the means
/// and counted in `undefined_count`.
pub fn summarize(trials: &[TrialResult], seed: u64) -> Vec<CellSummary> {
    let mut keys: Vec<(&str, usize, usize)> = Vec::new();
    for t in trials {
        let k = (t.experiment.as_str(), t.dim_or_size, t.train_size);
        if !keys.contains(&k) {
            keys.push(k);
        }
    }
    keys.into_iter()
        .map(|(exp, size, train)| {
            let cell: Vec<&TrialResult> = trials
                .iter()
                .filter(|t| t.experiment == exp && t.dim_or_size == size && t.train_size == train)
                .collect();
            CellSummary {
                experiment: exp.to_string(),
                dim_or_size: size,
                train_size: train,
                trials: cell.len(),
                mean_accuracy: mean(cell.iter().filter_map(|t| t.accuracy)),
                mean_coverage: mean(cell.iter().filter_map(|t| t.coverage)),
                undefined_count: cell.iter().filter(|t| t.accuracy.is_none() || t.coverage.is_none()).count(),
                mean_closure_calls: mean(cell.iter().map(|t| t.closure_calls as f64)).unwrap_or(0.0),
                seed,
            }
        })
        .collect()
}

pub fn write_summary_csv(cells: &[CellSummary]) -> Result<String, ExperimentError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in cells {
        w.serialize(c)?;
    }
    let bytes = w.into_inner().map_err(|e| ExperimentError::Csv(e.into_error().into()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn read_summary_csv(text: &str) -> Result<Vec<CellSummary>, ExperimentError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

#[allow(clippy::too_many_arguments)]
fn run_trial<C: ClosureOperator>(
    experiment: &str,
    dim_or_size: usize,
    op: &InstrumentedClosure<C>,
    e1: &ElementSet,
    e2: &ElementSet,
    a: &ElementSet,
    b: &ElementSet,
    seed: u64,
    order_seed: u64,
) -> Result<TrialResult, ExperimentError> {
    let out = mcs_separate(op, a, b, &ExtensionOrder::Random(order_seed))?;
    let SeparationOutcome::Separated { h1, h2, closure_calls } = out else {
        return Err(ExperimentError::Precondition("training sets have overlapping closures".into()));
    };
    Ok(TrialResult {
        experiment: experiment.to_string(),
        dim_or_size,
        train_size: a.len() + b.len(),
        seed,
        accuracy: accuracy(e1, e2, &h1, &h2, a, b)?,
        coverage: coverage(a, b, &h1, &h2)?,
        closure_calls,
        partition: h1.union(&h2).is_full(),
    })
}

/// Random trees split into two half-spaces by an edge cut; the training set
/// is drawn uniformly from all vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct D1Config {
    pub tree_sizes: Vec<usize>,
    pub train_sizes: Vec<usize>,
    pub trees_per_size: usize,
    pub trainsets_per_tree: usize,
    /// Largest allowed size ratio between the two label blocks.
    pub ratio_bound: f64,
    pub seed: u64,
}

impl Default for D1Config {
    fn default() -> Self {
        D1Config {
            tree_sizes: vec![100, 500, 1000],
            train_sizes: vec![10, 20, 40, 100],
            trees_per_size: 10,
            trainsets_per_tree: 10,
            ratio_bound: 3.0,
            seed: 1,
        }
    }
}

pub fn run_d1(cfg: &D1Config) -> Result<ExperimentReport, ExperimentError> {
    if cfg.tree_sizes.is_empty() || cfg.train_sizes.is_empty() {
        return Err(ExperimentError::Config("empty grid".into()));
    }
    if cfg.trees_per_size == 0 || cfg.trainsets_per_tree == 0 {
        return Err(ExperimentError::Config("need at least one tree and one training set".into()));
    }
    for &s in &cfg.tree_sizes {
        if let Some(&t) = cfg.train_sizes.iter().find(|&&t| t < 2 || t > s) {
            return Err(ExperimentError::Config(format!("train size {t} invalid for tree size {s}")));
        }
    }
    let mut trials = Vec::new();
    let mut resampled_trees = 0;
    for &s in &cfg.tree_sizes {
        for tree_idx in 0..cfg.trees_per_size {
            let (tree, e1, e2) = {
                let mut attempt = 0u64;
                loop {
                    let tseed = derive_seed(cfg.seed, &[1, s as u64, tree_idx as u64, attempt]);
                    let tree = random_tree(s, tseed);
                    match random_tree_halfspace_labeling(&tree, splitmix(tseed), cfg.ratio_bound) {
                        Ok((e1, e2)) => break (tree, e1, e2),
                        Err(GraphError::NoBalancedEdge(_)) if attempt < 1000 => {
                            attempt += 1;
                            resampled_trees += 1;
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            };
            let op = InstrumentedClosure::new(TreeClosure::new(&tree).expect("generator yields trees"));
            for &t in &cfg.train_sizes {
                for set_idx in 0..cfg.trainsets_per_tree {
                    let seed = derive_seed(cfg.seed, &[2, s as u64, t as u64, tree_idx as u64, set_idx as u64]);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let (a, b) = loop {
                        let pick = ElementSet::from_ids(s, sample(&mut rng, s, t));
                        let (a, b) = (pick.intersection(&e1), pick.intersection(&e2));
                        if !a.is_empty() && !b.is_empty() {
                            break (a, b);
                        }
                    };
                    trials.push(run_trial("d1", s, &op, &e1, &e2, &a, &b, seed, rng.gen())?);
                }
            }
        }
    }
    Ok(ExperimentReport {
        cells: summarize(&trials, cfg.seed),
        trials,
        resampled_trees,
    })
}

/// Point clouds from [`generate_d2_instance`]; training sets take half of
/// the budget from each class.
#[derive(Debug, Clone, PartialEq)]
pub struct D2Config {
    pub dims: Vec<usize>,
    pub train_sizes: Vec<usize>,
    pub instances_per_dim: usize,
    pub n_per_class: usize,
    pub margin: f64,
    pub seed: u64,
}

impl Default for D2Config {
    fn default() -> Self {
        D2Config {
            dims: vec![2, 3, 4],
            train_sizes: vec![10, 20, 50, 100],
            instances_per_dim: 50,
            n_per_class: 200,
            margin: DEFAULT_MARGIN,
            seed: 1,
        }
    }
}

pub fn run_d2(cfg: &D2Config) -> Result<ExperimentReport, ExperimentError> {
    if cfg.dims.is_empty() || cfg.train_sizes.is_empty() || cfg.instances_per_dim == 0 {
        return Err(ExperimentError::Config("empty grid".into()));
    }
    if let Some(&t) = cfg.train_sizes.iter().find(|&&t| t < 2 || t.div_ceil(2) > cfg.n_per_class) {
        return Err(ExperimentError::Config(format!(
            "train size {t} invalid for {} points per class",
            cfg.n_per_class
        )));
    }
    let mut trials = Vec::new();
    for &d in &cfg.dims {
        for inst_idx in 0..cfg.instances_per_dim {
            let inst = generate_d2_instance(d, cfg.n_per_class, cfg.margin, derive_seed(cfg.seed, &[3, d as u64, inst_idx as u64]))?;
            let n = inst.labels.len();
            let pos: Vec<usize> = inst.positives().collect();
            let neg: Vec<usize> = inst.negatives().collect();
            let e1 = ElementSet::from_ids(n, pos.iter().copied());
            let e2 = e1.complement();
            let op = InstrumentedClosure::new(AlphaClosure::new(inst.points));
            for &t in &cfg.train_sizes {
                let seed = derive_seed(cfg.seed, &[4, d as u64, t as u64, inst_idx as u64]);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let a = ElementSet::from_ids(n, sample(&mut rng, pos.len(), t.div_ceil(2)).into_iter().map(|i| pos[i]));
                let b = ElementSet::from_ids(n, sample(&mut rng, neg.len(), t / 2).into_iter().map(|i| neg[i]));
                trials.push(run_trial("d2", d, &op, &e1, &e2, &a, &b, seed, rng.gen())?);
            }
        }
    }
    Ok(ExperimentReport {
        cells: summarize(&trials, cfg.seed),
        trials,
        resampled_trees: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_depend_on_every_part() {
        let s = derive_seed(1, &[2, 3]);
        assert_eq!(s, derive_seed(1, &[2, 3]));
        assert_ne!(s, derive_seed(1, &[3, 2]));
        assert_ne!(s, derive_seed(2, &[2, 3]));
    }

    #[test]
    fn small_d1_grid_partitions() {
        let cfg = D1Config {
            tree_sizes: vec![30],
            train_sizes: vec![4, 30],
            trees_per_size: 3,
            trainsets_per_tree: 4,
            ..D1Config::default()
        };
        let rep = run_d1(&cfg).unwrap();
        assert_eq!(rep.trials.len(), 24);
        assert!(rep.trials.iter().all(|t| t.partition && t.coverage.unwrap_or(1.0) == 1.0));
        assert_eq!(rep.cells.len(), 2);
        // full supervision leaves nothing to score
        assert_eq!(rep.cells[1].undefined_count, 12);
        assert_eq!(rep, run_d1(&cfg).unwrap());
    }

    #[test]
    fn small_d2_grid_runs() {
        let cfg = D2Config {
            dims: vec![2],
            train_sizes: vec![10],
            instances_per_dim: 2,
            n_per_class: 30,
            ..D2Config::default()
        };
        let rep = run_d2(&cfg).unwrap();
        assert_eq!(rep.cells.len(), 1);
        assert_eq!(rep.cells[0].trials, 2);
        let acc = rep.cells[0].mean_accuracy.unwrap();
        assert!((0.0..=1.0).contains(&acc));
    }

    #[test]
    fn csv_round_trip() {
        let cells = vec![CellSummary {
            experiment: "d2".into(),
            dim_or_size: 3,
            train_size: 20,
            trials: 5,
            mean_accuracy: Some(0.875),
            mean_coverage: None,
            undefined_count: 5,
            mean_closure_calls: 312.5,
            seed: 9,
        }];
        let text = write_summary_csv(&cells).unwrap();
        assert!(text.starts_with(
            "experiment,dim_or_size,train_size,trials,mean_accuracy,mean_coverage,undefined_count,mean_closure_calls,seed\n"
        ));
        assert_eq!(read_summary_csv(&text).unwrap(), cells);
    }

    #[test]
    fn bad_grids_rejected() {
        let cfg = D1Config { train_sizes: vec![200], tree_sizes: vec![100], ..D1Config::default() };
        assert!(run_d1(&cfg).is_err());
        let cfg = D2Config { train_sizes: vec![1], ..D2Config::default() };
        assert!(run_d2(&cfg).is_err());
    }
}

use super::{FiniteLattice, LatticeError};

pub const MAX_PARTITION_N: usize = 7;

/// Set partitions of `{1..n}`. A partition is below another when it is
/// coarser, so the single block is the bottom and the all-singletons
/// partition the top.
#[derive(Debug, Clone)]
pub struct PartitionLattice {
    pub n: usize,
    /// Restricted growth string of each element: block number per position.
    pub blocks: Vec<Vec<u8>>,
    pub lattice: FiniteLattice,
}

fn growth_strings(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    fn rec(i: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur[i] = b;
            rec(i + 1, max.max(b), cur, out);
        }
    }
    if n > 0 {
        rec(1, 0, &mut cur, &mut out);
    }
    out
}

fn label(rgs: &[u8]) -> String {
    let k = rgs.iter().max().map_or(0, |m| *m as usize + 1);
    (0..k)
        .map(|b| {
            let members: Vec<String> = (0..rgs.len()).filter(|&i| rgs[i] as usize == b).map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect()
}

/// Lattice of all set partitions of `{1..n}`, `1 ≤ n ≤ 7`.
pub fn partition_lattice(n: usize) -> Result<PartitionLattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::Empty);
    }
    if n > MAX_PARTITION_N {
        return Err(LatticeError::TooLarge { n, bound: MAX_PARTITION_N });
    }
    let mut blocks = growth_strings(n);
    blocks.sort_by_key(|r| (r.iter().max().copied(), r.clone()));
    // a ≤ b iff every block of b sits inside a block of a
    let coarser = |a: &[u8], b: &[u8]| (0..n).all(|x| (x + 1..n).all(|y| b[x] != b[y] || a[x] == a[y]));
    let labels = blocks.iter().map(|r| label(r)).collect();
    let lattice = FiniteLattice::from_order(blocks.len(), |a, b| coarser(&blocks[a], &blocks[b]), Some(labels))?;
    Ok(PartitionLattice { n, blocks, lattice })
}

impl PartitionLattice {
    /// Element of the atom `P(t1, …, tn)`: positions with equal terms share a block.
    pub fn atom(&self, terms: &[&str]) -> Option<usize> {
        if terms.len() != self.n {
            return None;
        }
        let mut seen: Vec<&str> = Vec::new();
        let rgs: Vec<u8> = terms
            .iter()
            .map(|t| match seen.iter().position(|s| s == t) {
                Some(i) => i as u8,
                None => {
                    seen.push(t);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        self.blocks.iter().position(|b| *b == rgs)
    }

    /// Element written as blocks of 1-based positions, e.g. `[[1, 2], [3]]`.
    pub fn from_blocks(&self, parts: &[Vec<usize>]) -> Option<usize> {
        let mut rgs = vec![u8::MAX; self.n];
        for (b, part) in parts.iter().enumerate() {
            for &p in part {
                if p == 0 || p > self.n || rgs[p - 1] != u8::MAX {
                    return None;
                }
                rgs[p - 1] = b as u8;
            }
        }
        if rgs.contains(&u8::MAX) {
            return None;
        }
        let labels: Vec<String> = (0..self.n).map(|i| rgs[i].to_string()).collect();
        self.atom(&labels.iter().map(String::as_str).collect::<Vec<_>>())
    }
}

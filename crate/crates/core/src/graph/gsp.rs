use super::{GeodesicClosure, Graph, GraphError};
use crate::closure::{ClosureOperator, ElementSet};

/// A graph whose vertices carry disjoint non-empty bags covering a ground set.
#[derive(Debug, Clone)]
pub struct GsPartition {
    graph: Graph,
    bags: Vec<ElementSet>,
    owner: Vec<usize>,
}

impl GsPartition {
    /// `bags[v]` lists the ground elements of vertex `v`; the ground set is
    /// `0..ground_size`.
    pub fn new(graph: Graph, ground_size: usize, bags: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let bad = |m: String| Err(GraphError::InvalidPartition(m));
        if bags.len() != graph.n() {
            return bad(format!("{} bags for {} vertices", bags.len(), graph.n()));
        }
        let mut owner = vec![usize::MAX; ground_size];
        for (v, bag) in bags.iter().enumerate() {
            if bag.is_empty() {
                return bad(format!("bag of vertex {v} is empty"));
            }
            for &e in bag {
                if e >= ground_size {
                    return bad(format!("element {e} outside ground set of size {ground_size}"));
                }
                if owner[e] != usize::MAX {
                    return bad(format!("element {e} in bags of {} and {v}", owner[e]));
                }
                owner[e] = v;
            }
        }
        if let Some(e) = owner.iter().position(|&o| o == usize::MAX) {
            return bad(format!("element {e} is in no bag"));
        }
        let bags = bags
            .into_iter()
            .map(|b| ElementSet::from_ids(ground_size, b))
            .collect();
        Ok(GsPartition { graph, bags, owner })
    }

    /// One singleton bag per vertex.
    pub fn singletons(graph: Graph) -> Self {
        let n = graph.n();
        Self::new(graph, n, (0..n).map(|v| vec![v]).collect()).expect("singleton bags")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ground_size(&self) -> usize {
        self.owner.len()
    }

    pub fn bag(&self, v: usize) -> &ElementSet {
        &self.bags[v]
    }

    /// Vertex whose bag holds `e`.
    pub fn owner(&self, e: usize) -> usize {
        self.owner[e]
    }
}

/// Union of the bags over the geodesic closure of the vertices touched by `s`.
pub fn sigma_closure(gsp: &GsPartition, s: &ElementSet) -> ElementSet {
    SigmaClosure::new(gsp.clone()).close(s)
}

#[derive(Debug, Clone)]
pub struct SigmaClosure {
    gsp: GsPartition,
    gamma: GeodesicClosure,
}

impl SigmaClosure {
    pub fn new(gsp: GsPartition) -> Self {
        let gamma = GeodesicClosure::new(&gsp.graph);
        SigmaClosure { gsp, gamma }
    }

    pub fn partition(&self) -> &GsPartition {
        &self.gsp
    }

    fn touched(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_ids(self.gsp.graph.n(), s.iter().map(|e| self.gsp.owner[e]))
    }

    fn bags_of(&self, vertices: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.ground_size());
        for v in vertices.iter() {
            out.union_with(&self.gsp.bags[v]);
        }
        out
    }
}

impl ClosureOperator for SigmaClosure {
    fn ground_size(&self) -> usize {
        self.gsp.ground_size()
    }

    fn close(&self, set: &ElementSet) -> ElementSet {
        self.bags_of(&self.gamma.close(&self.touched(set)))
    }

    fn extend_avoiding(
        &self,
        closed: &ElementSet,
        e: usize,
        avoid: &ElementSet,
    ) -> Option<ElementSet> {
        let grown = self
            .gamma
            .extend_avoiding(&self.touched(closed), self.gsp.owner[e], &self.touched(avoid))?;
        Some(self.bags_of(&grown))
    }
}

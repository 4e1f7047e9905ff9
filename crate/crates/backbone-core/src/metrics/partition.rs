//! Node partitions: connected components and the canonical block form
//! shared by components and communities.

use std::collections::VecDeque;

use crate::graph::Graph;

/// Assignment of every node to exactly one block, with block ids densified
/// to `0..block_count` in order of first appearance by ascending node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    block_count: usize,
}

impl Partition {
    /// Canonicalizes an arbitrary block labelling.
    pub fn from_assignment(raw: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut assignment = Vec::with_capacity(raw.len());
        let mut next = 0usize;
        let max = raw.iter().copied().max().map_or(0, |m| m + 1);
        remap.resize(max, None);
        for &b in raw {
            let id = *remap[b].get_or_insert_with(|| {
                let id = next;
                next += 1;
                id
            });
            assignment.push(id);
        }
        Partition {
            assignment,
            block_count: next,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            assignment: (0..n).collect(),
            block_count: n,
        }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn block_of(&self, node: usize) -> usize {
        self.assignment[node]
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Nodes per block.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.block_count];
        for &b in &self.assignment {
            sizes[b] += 1;
        }
        sizes
    }
}

/// Maximal connected node sets, found by BFS from ascending node ids, so
/// block 0 is the component of node 0.
pub fn connected_components(g: &Graph) -> Partition {
    let n = g.node_count();
    let mut assignment = vec![usize::MAX; n];
    let mut block = 0usize;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if assignment[start] != usize::MAX {
            continue;
        }
        assignment[start] = block;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if assignment[v] == usize::MAX {
                    assignment[v] = block;
                    queue.push_back(v);
                }
            }
        }
        block += 1;
    }
    Partition {
        assignment,
        block_count: block,
    }
}

/// Disjoint-set forest over sites with union by size and path compression.
/// Also tracks the largest cluster and the sum of squared cluster sizes.
#[derive(Debug, Clone)]
pub struct ClusterForest {
    parent: Vec<usize>,
    size: Vec<usize>,
    largest: usize,
    sum_sq: u64,
}

impl ClusterForest {
    pub fn new(n: usize) -> Self {
        ClusterForest {
            parent: (0..n).collect(),
            size: vec![0; n],
            largest: 0,
            sum_sq: 0,
        }
    }

    /// Opens site `v` as a singleton cluster.
    pub fn activate(&mut self, v: usize) {
        debug_assert_eq!(self.size[v], 0);
        self.size[v] = 1;
        self.sum_sq += 1;
        self.largest = self.largest.max(1);
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.size[self.find_const(v)] > 0
    }

    fn find_const(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the clusters of two active sites; returns the new root.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let (sa, sb) = (self.size[ra] as u64, self.size[rb] as u64);
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sum_sq += 2 * sa * sb;
        self.largest = self.largest.max(self.size[ra]);
        ra
    }

    pub fn largest(&self) -> usize {
        self.largest
    }

    /// Sum of squared sizes over all clusters.
    pub fn sum_sq(&self) -> u64 {
        self.sum_sq
    }

    /// Sizes of all active clusters, sorted descending.
    pub fn cluster_sizes(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut sizes: Vec<usize> = (0..n)
            .filter(|&v| self.parent[v] == v && self.size[v] > 0)
            .map(|v| self.size[v])
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

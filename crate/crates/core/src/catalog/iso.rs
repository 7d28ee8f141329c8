use crate::gcm::GcmGraph;

/// A bijection on node indices, stored 1-based: `map[i - 1]` is σ(i).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeRelabeling {
    map: Vec<usize>,
}

impl NodeRelabeling {
    /// Returns `None` unless `map` is a permutation of 1..=n.
    pub fn new(map: Vec<usize>) -> Option<Self> {
        let n = map.len();
        let mut seen = vec![false; n + 1];
        for &v in &map {
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Self { map })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            map: (1..=n).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (k, &v) in self.map.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self { map: inv }
    }

    /// True when M_ij = M'_{σ(i)σ(j)} for all i, j.
    pub fn preserves(&self, g1: &GcmGraph, g2: &GcmGraph) -> bool {
        let n = g1.n();
        n == g2.n()
            && self.map.len() == n
            && (1..=n).all(|i| (1..=n).all(|j| g1.m(i, j) == g2.m(self.apply(i), self.apply(j))))
    }
}

impl std::fmt::Display for NodeRelabeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sorted multiset of (outgoing, incoming) amplitudes at a node.
fn signature(g: &GcmGraph, i: usize) -> Vec<(i64, i64)> {
    let mut s: Vec<(i64, i64)> = g.neighbors(i).map(|j| (g.m(i, j), g.m(j, i))).collect();
    s.sort_unstable();
    s
}

/// Finds the lexicographically least σ with M_ij = M'_{σ(i)σ(j)}, if any.
pub fn graphs_isomorphic(g1: &GcmGraph, g2: &GcmGraph) -> Option<NodeRelabeling> {
    let n = g1.n();
    if n != g2.n() || g1.edges().len() != g2.edges().len() {
        return None;
    }
    let sig1: Vec<_> = (1..=n).map(|i| signature(g1, i)).collect();
    let sig2: Vec<_> = (1..=n).map(|i| signature(g2, i)).collect();
    let mut sorted1 = sig1.clone();
    let mut sorted2 = sig2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }
    let mut map = vec![0usize; n];
    let mut used = vec![false; n + 1];
    if extend(g1, g2, &sig1, &sig2, 1, &mut map, &mut used) {
        Some(NodeRelabeling { map })
    } else {
        None
    }
}

fn extend(
    g1: &GcmGraph,
    g2: &GcmGraph,
    sig1: &[Vec<(i64, i64)>],
    sig2: &[Vec<(i64, i64)>],
    i: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = g1.n();
    if i > n {
        return true;
    }
    for c in 1..=n {
        if used[c] || sig1[i - 1] != sig2[c - 1] {
            continue;
        }
        let consistent = (1..i).all(|k| {
            let ck = map[k - 1];
            g1.m(i, k) == g2.m(c, ck) && g1.m(k, i) == g2.m(ck, c)
        });
        if !consistent {
            continue;
        }
        map[i - 1] = c;
        used[c] = true;
        if extend(g1, g2, sig1, sig2, i + 1, map, used) {
            return true;
        }
        used[c] = false;
    }
    false
}

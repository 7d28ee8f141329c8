//! Generalized Cartan matrices and the graphs they define.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcmError {
    #[error("matrix must be square with at least one row")]
    NotSquare,
    #[error("diagonal entry M[{0},{0}] is not 2")]
    BadDiagonal(usize),
    #[error("off-diagonal entry M[{0},{1}] is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("M[{0},{1}] and its transpose entry disagree on being zero")]
    AsymmetricZero(usize, usize),
}

/// An integer matrix with 2 on the diagonal, nonpositive entries elsewhere,
/// and a symmetric zero pattern. Indices are 1-based in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmplitudeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl AmplitudeMatrix {
    /// Checks the three defining conditions, reporting the first violation in
    /// row-major order.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, GcmError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(GcmError::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                let m = rows[i][j];
                if i == j {
                    if m != 2 {
                        return Err(GcmError::BadDiagonal(i + 1));
                    }
                } else if m > 0 {
                    return Err(GcmError::PositiveOffDiagonal(i + 1, j + 1));
                } else if (m == 0) != (rows[j][i] == 0) {
                    return Err(GcmError::AsymmetricZero(i + 1, j + 1));
                }
            }
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// M_ij with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }
}

/// A GCM together with its derived edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GcmGraph {
    matrix: AmplitudeMatrix,
    edges: Vec<(usize, usize)>,
    connected: bool,
}

impl GcmGraph {
    pub fn new(matrix: AmplitudeMatrix) -> Self {
        let n = matrix.n();
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if matrix.get(i, j) != 0 {
                    edges.push((i, j));
                }
            }
        }
        let connected = is_connected(n, &edges);
        Self {
            matrix,
            edges,
            connected,
        }
    }

    /// Builds a graph on `n` nodes from `(i, j, p, q)` tuples, each meaning
    /// M_ij = -p and M_ji = -q.
    pub fn from_edges(n: usize, edges: &[(usize, usize, i64, i64)]) -> Result<Self, GcmError> {
        let mut rows = vec![vec![0i64; n]; n];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = 2;
        }
        for &(i, j, p, q) in edges {
            rows[i - 1][j - 1] = -p;
            rows[j - 1][i - 1] = -q;
        }
        Ok(Self::new(AmplitudeMatrix::new(rows)?))
    }

    pub fn matrix(&self) -> &AmplitudeMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.matrix.get(i, j)
    }

    /// Unordered edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges as `(i, j, p, q)` with `p = -M_ij`, `q = -M_ji`.
    pub fn amplitude_edges(&self) -> Vec<(usize, usize, i64, i64)> {
        self.edges
            .iter()
            .map(|&(i, j)| (i, j, -self.m(i, j), -self.m(j, i)))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&j| j != i && self.m(i, j) != 0)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }
}

fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

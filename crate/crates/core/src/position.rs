use std::fmt;
use std::ops::Index;

use num_traits::{Signed, Zero};

use crate::rational::{self, Rational};

/// An assignment of exact rationals to the nodes of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position(Vec<Rational>);

impl Position {
    pub fn new(values: Vec<Rational>) -> Self {
        Self(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self(rational::ints(values))
    }

    /// The fundamental position: 1 at node `i` (1-based), 0 elsewhere.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[i - 1] = rational::int(1);
        Self(v)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at node `i` (1-based).
    pub fn at(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_strongly_dominant(&self) -> bool {
        self.0.iter().all(|x| x.is_positive())
    }

    pub fn is_nonzero(&self) -> bool {
        self.0.iter().any(|x| !x.is_zero())
    }

    pub fn scaled(&self, r: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * r).collect())
    }

    pub(crate) fn values_mut(&mut self) -> &mut [Rational] {
        &mut self.0
    }
}

impl Index<usize> for Position {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rational::join(&self.0))
    }
}

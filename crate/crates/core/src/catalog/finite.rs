use std::fmt;
use std::str::FromStr;

use crate::catalog::CatalogError;
use crate::gcm::GcmGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A connected Dynkin diagram of finite type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CatalogError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(CatalogError::RankOutOfRange(format!("{family:?}{rank}")))
        }
    }

    /// Every finite type of the given rank, in family order.
    pub fn all_of_rank(rank: usize) -> Vec<Self> {
        use Family::*;
        [A, B, C, D, E, F, G]
            .into_iter()
            .filter_map(|f| Self::new(f, rank).ok())
            .collect()
    }

    /// Every finite type with rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<Self> {
        (1..=max_rank).flat_map(Self::all_of_rank).collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let unknown = || CatalogError::UnknownFamily(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(unknown)? {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(unknown()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        Self::new(family, rank)
    }
}

fn path_edges(from: usize, to: usize) -> Vec<(usize, usize, i64, i64)> {
    (from..to).map(|i| (i, i + 1, 1, 1)).collect()
}

/// Builds the diagram with the standard node numbering: a path for A/B/C,
/// D_n with nodes n-1 and n both attached to n-2, and E with node 2 hanging
/// off node 4 of the path 1-3-4-5-...
///
/// B2 has M_12 = -1, M_21 = -2. For n >= 3 the double edge of B_n has
/// M_{n-1,n} = -2 and M_{n,n-1} = -1 and C_n is the reverse; these are the
/// orientations under which the block sequences of
/// [`crate::strategies::lemma21_sequence`] produce their closed forms.
pub fn build_finite(t: DynkinType) -> GcmGraph {
    let n = t.rank;
    let edges: Vec<(usize, usize, i64, i64)> = match t.family {
        Family::A => path_edges(1, n),
        Family::B if n == 2 => vec![(1, 2, 1, 2)],
        Family::B => {
            let mut e = path_edges(1, n - 1);
            e.push((n - 1, n, 2, 1));
            e
        }
        Family::C => {
            let mut e = path_edges(1, n - 1);
            e.push((n - 1, n, 1, 2));
            e
        }
        Family::D => {
            let mut e = path_edges(1, n - 2);
            e.push((n - 2, n - 1, 1, 1));
            e.push((n - 2, n, 1, 1));
            e
        }
        Family::E => {
            let mut e = vec![(1, 3, 1, 1), (3, 4, 1, 1), (2, 4, 1, 1)];
            e.extend(path_edges(4, n));
            e
        }
        Family::F => vec![(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 1, 1)],
        Family::G => vec![(1, 2, 1, 3)],
    };
    GcmGraph::from_edges(n, &edges).expect("finite-type data is a valid GCM")
}

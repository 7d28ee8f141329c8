use std::fmt;
use std::str::FromStr;

use crate::catalog::CatalogError;
use crate::gcm::GcmGraph;

/// The parametric triangle shapes. The vertical edge between nodes 1 and 2
/// is simple, (2,1) or (3,1) respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriVariant {
    One,
    Two,
    Three,
}

impl TriVariant {
    pub fn index(self) -> u8 {
        match self {
            TriVariant::One => 1,
            TriVariant::Two => 2,
            TriVariant::Three => 3,
        }
    }

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(TriVariant::One),
            2 => Some(TriVariant::Two),
            3 => Some(TriVariant::Three),
            _ => None,
        }
    }

    /// Lower bound on both products p1*q1 and p2*q2.
    pub fn min_product(self) -> i64 {
        self.index() as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriParams {
    pub p1: i64,
    pub q1: i64,
    pub p2: i64,
    pub q2: i64,
}

/// One graph from the catalog of non-admissible families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InadmissibleFamilyId {
    ATilde(usize),
    BTildeFork(usize),
    BTildePath(usize),
    CTildeA(usize),
    CTildeB(usize),
    CTildeFork(usize),
    DTildeStar,
    DTilde(usize),
    ETilde7Node,
    ETilde8Node,
    ETilde9Node,
    FTildeA,
    FTildeB,
    GTilde(u8),
    Tri(TriVariant, TriParams),
    Sq(u8),
    Pent1,
}

use InadmissibleFamilyId as Id;

impl InadmissibleFamilyId {
    pub fn validate(self) -> Result<Self, CatalogError> {
        let bad = |msg: String| Err(CatalogError::BadParameters(msg));
        match self {
            Id::ATilde(n) | Id::BTildePath(n) | Id::CTildeA(n) | Id::CTildeB(n) if n < 3 => {
                bad(format!("{self} needs at least 3 nodes"))
            }
            Id::BTildeFork(n) | Id::CTildeFork(n) if n < 4 => {
                bad(format!("{self} needs at least 4 nodes"))
            }
            Id::DTilde(n) if n < 6 => bad(format!("{self} needs at least 6 nodes")),
            Id::GTilde(k) if !(1..=6).contains(&k) => bad(format!("no G-tilde graph numbered {k}")),
            Id::Sq(k) if !(1..=3).contains(&k) => bad(format!("no square numbered {k}")),
            Id::Tri(v, p) => {
                if [p.p1, p.q1, p.p2, p.q2].iter().any(|&x| x < 1) {
                    return bad("triangle amplitudes must be positive".into());
                }
                if p.p1 * p.q1 < v.min_product() || p.p2 * p.q2 < v.min_product() {
                    return bad(format!(
                        "{self} needs amplitude products of at least {}",
                        v.min_product()
                    ));
                }
                Ok(self)
            }
            _ => Ok(self),
        }
    }

    pub fn node_count(self) -> usize {
        match self {
            Id::ATilde(n)
            | Id::BTildeFork(n)
            | Id::BTildePath(n)
            | Id::CTildeA(n)
            | Id::CTildeB(n)
            | Id::CTildeFork(n)
            | Id::DTilde(n) => n,
            Id::DTildeStar | Id::FTildeA | Id::FTildeB | Id::Pent1 => 5,
            Id::ETilde7Node => 7,
            Id::ETilde8Node => 8,
            Id::ETilde9Node => 9,
            Id::GTilde(_) | Id::Tri(..) => 3,
            Id::Sq(_) => 4,
        }
    }

    /// The instance of each family with the fewest nodes (for triangles, the
    /// smallest parameters of each variant).
    pub fn minimal_instances() -> Vec<Self> {
        let tri = |v, p1, q1, p2, q2| Id::Tri(v, TriParams { p1, q1, p2, q2 });
        let mut out = vec![
            Id::ATilde(3),
            Id::BTildeFork(4),
            Id::BTildePath(3),
            Id::CTildeA(3),
            Id::CTildeB(3),
            Id::CTildeFork(4),
            Id::DTildeStar,
            Id::DTilde(6),
            Id::ETilde7Node,
            Id::ETilde8Node,
            Id::ETilde9Node,
            Id::FTildeA,
            Id::FTildeB,
        ];
        out.extend((1..=6).map(Id::GTilde));
        out.extend([
            tri(TriVariant::One, 1, 1, 1, 1),
            tri(TriVariant::Two, 1, 2, 1, 2),
            tri(TriVariant::Three, 1, 3, 1, 3),
        ]);
        out.extend((1..=3).map(Id::Sq));
        out.push(Id::Pent1);
        out
    }

    /// Every triangle instance with all amplitudes at most `max`.
    pub fn triangle_grid(max: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for v in [TriVariant::One, TriVariant::Two, TriVariant::Three] {
            for p1 in 1..=max {
                for q1 in 1..=max {
                    for p2 in 1..=max {
                        for q2 in 1..=max {
                            let id = Id::Tri(v, TriParams { p1, q1, p2, q2 });
                            if id.validate().is_ok() {
                                out.push(id);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn path(from: usize, to: usize) -> Vec<(usize, usize, i64, i64)> {
    (from..to).map(|i| (i, i + 1, 1, 1)).collect()
}

fn fork_then_path(n: usize) -> Vec<(usize, usize, i64, i64)> {
    let mut e = vec![(1, 3, 1, 1), (2, 3, 1, 1)];
    e.extend(path(3, n - 1));
    e
}

/// Builds the graph of a catalog instance. Fork tips are nodes 1 and 2.
pub fn build_inadmissible(id: InadmissibleFamilyId) -> Result<GcmGraph, CatalogError> {
    let id = id.validate()?;
    let n = id.node_count();
    let edges: Vec<(usize, usize, i64, i64)> = match id {
        Id::ATilde(n) => {
            let mut e = path(1, n);
            e.push((n, 1, 1, 1));
            e
        }
        Id::BTildeFork(n) => {
            let mut e = fork_then_path(n);
            e.push((n - 1, n, 2, 1));
            e
        }
        Id::BTildePath(n) => {
            let mut e = vec![(1, 2, 1, 2)];
            e.extend(path(2, n - 1));
            e.push((n - 1, n, 2, 1));
            e
        }
        Id::CTildeA(n) => {
            let mut e = vec![(1, 2, 2, 1)];
            e.extend(path(2, n - 1));
            e.push((n - 1, n, 1, 2));
            e
        }
        Id::CTildeB(n) => {
            let mut e = vec![(1, 2, 1, 2)];
            e.extend(path(2, n - 1));
            e.push((n - 1, n, 1, 2));
            e
        }
        Id::CTildeFork(n) => {
            let mut e = fork_then_path(n);
            e.push((n - 1, n, 1, 2));
            e
        }
        Id::DTildeStar => vec![(1, 3, 1, 1), (2, 3, 1, 1), (3, 4, 1, 1), (3, 5, 1, 1)],
        Id::DTilde(n) => {
            let mut e = fork_then_path(n);
            e.push((n - 2, n, 1, 1));
            e
        }
        Id::ETilde7Node => vec![
            (1, 4, 1, 1),
            (4, 5, 1, 1),
            (5, 6, 1, 1),
            (6, 7, 1, 1),
            (3, 5, 1, 1),
            (2, 3, 1, 1),
        ],
        Id::ETilde8Node => {
            let mut e = vec![(1, 3, 1, 1), (2, 5, 1, 1)];
            e.extend(path(3, 8));
            e
        }
        Id::ETilde9Node => {
            let mut e = vec![(1, 3, 1, 1), (2, 4, 1, 1)];
            e.extend(path(3, 9));
            e
        }
        Id::FTildeA => vec![(1, 2, 1, 1), (2, 3, 2, 1), (3, 4, 1, 1), (4, 5, 1, 1)],
        Id::FTildeB => vec![(1, 2, 1, 1), (2, 3, 1, 2), (3, 4, 1, 1), (4, 5, 1, 1)],
        Id::GTilde(k) => {
            let (a, b) = match k {
                1 => ((1, 3), (1, 1)),
                2 => ((1, 3), (1, 2)),
                3 => ((1, 3), (1, 3)),
                4 => ((3, 1), (1, 1)),
                5 => ((1, 3), (2, 1)),
                _ => ((1, 3), (3, 1)),
            };
            vec![(1, 2, a.0, a.1), (2, 3, b.0, b.1)]
        }
        Id::Tri(v, p) => {
            let top = v.index() as i64;
            vec![(1, 2, top, 1), (1, 3, p.p1, p.q1), (2, 3, p.p2, p.q2)]
        }
        Id::Sq(k) => {
            let south_west = match k {
                1 => (1, 1),
                2 => (1, 2),
                _ => (2, 1),
            };
            vec![
                (1, 2, 2, 1),
                (2, 3, 1, 1),
                (3, 4, south_west.0, south_west.1),
                (4, 1, 1, 1),
            ]
        }
        Id::Pent1 => vec![
            (1, 2, 2, 1),
            (2, 3, 1, 1),
            (3, 4, 1, 1),
            (4, 5, 1, 1),
            (5, 1, 1, 1),
        ],
    };
    Ok(GcmGraph::from_edges(n, &edges).expect("catalog data is a valid GCM"))
}

impl fmt::Display for InadmissibleFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Id::ATilde(n) => write!(f, "Atilde:{n}"),
            Id::BTildeFork(n) => write!(f, "Btilde-fork:{n}"),
            Id::BTildePath(n) => write!(f, "Btilde-path:{n}"),
            Id::CTildeA(n) => write!(f, "Ctilde-a:{n}"),
            Id::CTildeB(n) => write!(f, "Ctilde-b:{n}"),
            Id::CTildeFork(n) => write!(f, "Ctilde-fork:{n}"),
            Id::DTildeStar => write!(f, "Dtilde-star"),
            Id::DTilde(n) => write!(f, "Dtilde:{n}"),
            Id::ETilde7Node => write!(f, "Etilde7node"),
            Id::ETilde8Node => write!(f, "Etilde8node"),
            Id::ETilde9Node => write!(f, "Etilde9node"),
            Id::FTildeA => write!(f, "Ftilde-a"),
            Id::FTildeB => write!(f, "Ftilde-b"),
            Id::GTilde(k) => write!(f, "Gtilde{k}"),
            Id::Tri(v, p) => write!(
                f,
                "Tri{}:p1={},q1={},p2={},q2={}",
                v.index(),
                p.p1,
                p.q1,
                p.p2,
                p.q2
            ),
            Id::Sq(k) => write!(f, "Sq{k}"),
            Id::Pent1 => write!(f, "Pent1"),
        }
    }
}

impl FromStr for InadmissibleFamilyId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let unknown = || CatalogError::UnknownFamily(s.to_string());
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let rank = || -> Result<usize, CatalogError> {
            arg.ok_or_else(unknown)?.parse().map_err(|_| unknown())
        };
        let fixed = |id: Id, nodes: usize| -> Result<Id, CatalogError> {
            match arg {
                None => Ok(id),
                Some(a) if a.parse::<usize>().ok() == Some(nodes) => Ok(id),
                Some(_) => Err(CatalogError::BadParameters(format!(
                    "{id} has exactly {nodes} nodes"
                ))),
            }
        };
        let id = match head {
            "Atilde" => Id::ATilde(rank()?),
            "Btilde-fork" => Id::BTildeFork(rank()?),
            "Btilde-path" => Id::BTildePath(rank()?),
            "Ctilde-a" => Id::CTildeA(rank()?),
            "Ctilde-b" => Id::CTildeB(rank()?),
            "Ctilde-fork" => Id::CTildeFork(rank()?),
            "Dtilde-star" => fixed(Id::DTildeStar, 5)?,
            "Dtilde" => Id::DTilde(rank()?),
            "Etilde7node" => fixed(Id::ETilde7Node, 7)?,
            "Etilde8node" => fixed(Id::ETilde8Node, 8)?,
            "Etilde9node" => fixed(Id::ETilde9Node, 9)?,
            "Ftilde-a" => fixed(Id::FTildeA, 5)?,
            "Ftilde-b" => fixed(Id::FTildeB, 5)?,
            "Pent1" => fixed(Id::Pent1, 5)?,
            h if h.starts_with("Gtilde") && arg.is_none() => {
                Id::GTilde(h[6..].parse().map_err(|_| unknown())?)
            }
            h if h.starts_with("Sq") && arg.is_none() => {
                Id::Sq(h[2..].parse().map_err(|_| unknown())?)
            }
            h if h.starts_with("Tri") => {
                let v = h[3..]
                    .parse::<u8>()
                    .ok()
                    .and_then(TriVariant::from_index)
                    .ok_or_else(unknown)?;
                Id::Tri(
                    v,
                    parse_tri_params(arg.ok_or_else(unknown)?).ok_or_else(unknown)?,
                )
            }
            _ => return Err(unknown()),
        };
        id.validate()
    }
}

fn parse_tri_params(s: &str) -> Option<TriParams> {
    let mut vals = [None; 4];
    for part in s.split(',') {
        let (k, v) = part.split_once('=')?;
        let slot = ["p1", "q1", "p2", "q2"]
            .iter()
            .position(|&name| name == k.trim())?;
        vals[slot] = Some(v.trim().parse().ok()?);
    }
    Some(TriParams {
        p1: vals[0]?,
        q1: vals[1]?,
        p2: vals[2]?,
        q2: vals[3]?,
    })
}

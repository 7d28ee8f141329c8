//! The firing rule and budgeted game execution.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::Rational;

pub type FiringSequence = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GameError {
    #[error("position has {got} entries but the graph has {expected} nodes")]
    LengthMismatch { expected: usize, got: usize },
    #[error("node {0} does not exist")]
    IndexOutOfRange(usize),
    #[error("cannot fire node {node}: its value {value} is not positive")]
    IllegalFiring { node: usize, value: Rational },
    #[error("firing {step} (node {node}) is illegal")]
    IllegalFiringAt {
        step: usize,
        node: usize,
        partial: Box<GameTrace>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub fired: usize,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GameOutcome {
    Converged {
        terminal: Position,
        steps: usize,
    },
    BudgetExhausted {
        steps: usize,
    },
    /// A prescribed sequence was legal but left some node positive.
    Partial {
        steps: usize,
    },
    /// Divergence established by a verified certificate rather than by play.
    CertifiedDivergent {
        certificate: String,
    },
}

impl GameOutcome {
    pub fn is_converged(&self) -> bool {
        matches!(self, GameOutcome::Converged { .. })
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, GameOutcome::BudgetExhausted { .. })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameTrace {
    pub initial: Position,
    pub steps: Vec<Step>,
    pub outcome: GameOutcome,
}

impl GameTrace {
    pub fn last_position(&self) -> &Position {
        self.steps
            .last()
            .map(|s| &s.position)
            .unwrap_or(&self.initial)
    }

    pub fn fired(&self) -> FiringSequence {
        self.steps.iter().map(|s| s.fired).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    GreedyMin,
    GreedyMax,
    RandomSeeded(u64),
    /// Fire the listed nodes while they are legal, then continue with GreedyMin.
    Prescribed(FiringSequence),
}

fn check_len(g: &GcmGraph, p: &Position) -> Result<(), GameError> {
    if p.len() != g.n() {
        return Err(GameError::LengthMismatch {
            expected: g.n(),
            got: p.len(),
        });
    }
    Ok(())
}

fn check_node(g: &GcmGraph, i: usize) -> Result<(), GameError> {
    if i == 0 || i > g.n() {
        return Err(GameError::IndexOutOfRange(i));
    }
    Ok(())
}

/// Applies the firing rule at `i` in place without a legality check. Being
/// linear, it also transports slopes and linear forms.
pub fn reflect(g: &GcmGraph, values: &mut [Rational], i: usize) {
    let li = values[i - 1].clone();
    let whole = li.is_integer();
    for j in g.neighbors(i) {
        let mij = BigInt::from(g.m(i, j));
        let vj = &mut values[j - 1];
        if whole && vj.is_integer() {
            // Skips the gcd normalisation, which dominates on long games.
            *vj = Rational::from_integer(vj.numer() - mij * li.numer());
        } else {
            *vj -= &li * Rational::from_integer(mij);
        }
    }
    values[i - 1] = -li;
}

/// Fires node `i`: every λ_j becomes λ_j - M_ij λ_i. Requires λ_i > 0.
pub fn fire(g: &GcmGraph, position: &Position, i: usize) -> Result<Position, GameError> {
    check_len(g, position)?;
    check_node(g, i)?;
    let value = position.at(i);
    if !value.is_positive() {
        return Err(GameError::IllegalFiring {
            node: i,
            value: value.clone(),
        });
    }
    let mut next = position.clone();
    reflect(g, next.values_mut(), i);
    Ok(next)
}

/// The matrix F_i with (F_i λ)_j = λ_j - M_ij λ_i, rows indexed by j.
pub fn firing_map(g: &GcmGraph, i: usize) -> Vec<Vec<Rational>> {
    let n = g.n();
    let mut f = vec![vec![Rational::zero(); n]; n];
    for (j, row) in f.iter_mut().enumerate() {
        row[j] = Rational::one();
        row[i - 1] -= Rational::from_integer(g.m(i, j + 1).into());
    }
    f
}

/// Nodes with a strictly positive value, in increasing order.
pub fn legal_moves(g: &GcmGraph, position: &Position) -> Vec<usize> {
    (1..=g.n())
        .filter(|&i| position.at(i).is_positive())
        .collect()
}

/// Plays `seq` in order, recording every intermediate position.
pub fn play_sequence(
    g: &GcmGraph,
    position: &Position,
    seq: &[usize],
) -> Result<GameTrace, GameError> {
    check_len(g, position)?;
    let mut current = position.clone();
    let mut steps = Vec::with_capacity(seq.len());
    for (k, &i) in seq.iter().enumerate() {
        let legal = i >= 1 && i <= g.n() && current.at(i).is_positive();
        if !legal {
            let partial = GameTrace {
                initial: position.clone(),
                outcome: GameOutcome::Partial { steps: steps.len() },
                steps,
            };
            return Err(GameError::IllegalFiringAt {
                step: k + 1,
                node: i,
                partial: Box::new(partial),
            });
        }
        reflect(g, current.values_mut(), i);
        steps.push(Step {
            fired: i,
            position: current.clone(),
        });
    }
    let outcome = if legal_moves(g, &current).is_empty() {
        GameOutcome::Converged {
            terminal: current,
            steps: steps.len(),
        }
    } else {
        GameOutcome::Partial { steps: steps.len() }
    };
    Ok(GameTrace {
        initial: position.clone(),
        steps,
        outcome,
    })
}

/// Chooses moves for one game. Deterministic for a fixed strategy.
struct Chooser {
    strategy: Strategy,
    rng: Option<ChaCha8Rng>,
    cursor: usize,
}

impl Chooser {
    fn new(strategy: &Strategy) -> Self {
        let rng = match strategy {
            Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
            _ => None,
        };
        Self {
            strategy: strategy.clone(),
            rng,
            cursor: 0,
        }
    }

    fn choose(&mut self, values: &[Rational]) -> Option<usize> {
        let positive = |i: usize| values[i - 1].is_positive();
        let n = values.len();
        match &self.strategy {
            Strategy::GreedyMin => (1..=n).find(|&i| positive(i)),
            Strategy::GreedyMax => (1..=n).rev().find(|&i| positive(i)),
            Strategy::RandomSeeded(_) => {
                let legal: Vec<usize> = (1..=n).filter(|&i| positive(i)).collect();
                if legal.is_empty() {
                    return None;
                }
                let rng = self.rng.as_mut().expect("seeded strategy owns an rng");
                Some(legal[rng.gen_range(0..legal.len())])
            }
            Strategy::Prescribed(seq) => {
                if let Some(&i) = seq.get(self.cursor) {
                    if i >= 1 && i <= n && positive(i) {
                        self.cursor += 1;
                        return Some(i);
                    }
                    self.cursor = seq.len();
                }
                (1..=n).find(|&i| positive(i))
            }
        }
    }
}

/// Runs a game until no node is positive or `budget` firings were made.
pub fn run_game(
    g: &GcmGraph,
    position: &Position,
    strategy: &Strategy,
    budget: usize,
) -> GameTrace {
    let mut chooser = Chooser::new(strategy);
    let mut current = position.clone();
    let mut steps = Vec::new();
    while steps.len() < budget {
        match chooser.choose(current.values()) {
            Some(i) => {
                reflect(g, current.values_mut(), i);
                steps.push(Step {
                    fired: i,
                    position: current.clone(),
                });
            }
            None => {
                let n = steps.len();
                return GameTrace {
                    initial: position.clone(),
                    steps,
                    outcome: GameOutcome::Converged {
                        terminal: current,
                        steps: n,
                    },
                };
            }
        }
    }
    let outcome = if legal_moves(g, &current).is_empty() {
        GameOutcome::Converged {
            terminal: current,
            steps: steps.len(),
        }
    } else {
        GameOutcome::BudgetExhausted { steps: steps.len() }
    };
    GameTrace {
        initial: position.clone(),
        steps,
        outcome,
    }
}

/// Same game as [`run_game`] but keeps only the outcome, which matters for
/// long divergent runs where positions grow large.
pub fn run_outcome(
    g: &GcmGraph,
    position: &Position,
    strategy: &Strategy,
    budget: usize,
) -> GameOutcome {
    let mut chooser = Chooser::new(strategy);
    let mut current = position.clone();
    let mut steps = 0;
    while steps < budget {
        match chooser.choose(current.values()) {
            Some(i) => {
                reflect(g, current.values_mut(), i);
                steps += 1;
            }
            None => {
                return GameOutcome::Converged {
                    terminal: current,
                    steps,
                }
            }
        }
    }
    if legal_moves(g, &current).is_empty() {
        GameOutcome::Converged {
            terminal: current,
            steps,
        }
    } else {
        GameOutcome::BudgetExhausted { steps }
    }
}

//! Convergent firing sequences for the finite types, their expected lengths
//! and terminal positions, and a strong-convergence prober.

use rand::Rng;

use crate::catalog::{CatalogError, DynkinType, Family};
use crate::game::{run_outcome, FiringSequence, GameOutcome, Strategy};
use crate::gcm::GcmGraph;
use crate::position::Position;
use crate::rational::{self, Rational};

/// How a plan's terminal position depends on the start (a_1, ..., a_n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TerminalRule {
    /// (-a_n, ..., -a_1)
    ReverseNegate,
    /// (-a_1, ..., -a_n)
    Negate,
    /// Negation, with the last two entries swapped when n is odd.
    NegateDParitySwap,
    /// (a,b,c,d,e,f) -> (-f,-b,-e,-d,-c,-a)
    E6PermutedNegate,
    /// The partial-block positions reached by [`lemma21_sequence`].
    BlockForm(DynkinType),
}

impl TerminalRule {
    pub fn apply(&self, a: &[Rational]) -> Vec<Rational> {
        let n = a.len();
        match *self {
            TerminalRule::ReverseNegate => a.iter().rev().map(|x| -x).collect(),
            TerminalRule::Negate => a.iter().map(|x| -x).collect(),
            TerminalRule::NegateDParitySwap => {
                let mut out: Vec<Rational> = a.iter().map(|x| -x).collect();
                if n % 2 == 1 {
                    out.swap(n - 2, n - 1);
                }
                out
            }
            TerminalRule::E6PermutedNegate => [5, 1, 4, 3, 2, 0].iter().map(|&k| -&a[k]).collect(),
            TerminalRule::BlockForm(t) => block_form(t, a),
        }
    }
}

fn block_form(t: DynkinType, a: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let two = rational::int(2);
    let sum = |range: std::ops::Range<usize>| {
        range
            .map(|k| a[k].clone())
            .fold(rational::int(0), |s, x| s + x)
    };
    let mut out = Vec::with_capacity(n);
    match t.family {
        Family::A => {
            out.push(sum(0..n));
            out.extend(a[1..].iter().rev().map(|x| -x));
        }
        Family::B | Family::C => {
            // B2 carries its double edge the other way round, so its first
            // entry picks up 2a_2 like the C forms.
            let doubled_last = t.family == Family::C || n == 2;
            let last = if doubled_last {
                &two * &a[n - 1]
            } else {
                a[n - 1].clone()
            };
            let first = &a[0] + &two * sum(1..n - 1) + last;
            out.push(first);
            out.extend(a[1..].iter().map(|x| -x));
        }
        Family::D => {
            out.push(&a[0] + &two * sum(1..n - 2) + &a[n - 2] + &a[n - 1]);
            out.extend(a[1..n - 2].iter().map(|x| -x));
            if n % 2 == 1 {
                out.push(-&a[n - 2]);
                out.push(-&a[n - 1]);
            } else {
                out.push(-&a[n - 1]);
                out.push(-&a[n - 2]);
            }
        }
        _ => unreachable!("block forms exist only for A-D"),
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentPlan {
    pub dynkin: DynkinType,
    pub sequence: FiringSequence,
    pub expected_length: usize,
    pub terminal_rule: TerminalRule,
}

/// The block s_i of the classical types.
pub fn block(t: DynkinType, i: usize) -> FiringSequence {
    let n = t.rank;
    match t.family {
        Family::A => (i..=n).collect(),
        Family::B | Family::C if i == n => vec![n],
        Family::B | Family::C => (i..=n).chain((i..n).rev()).collect(),
        Family::D if i == n - 1 => vec![n - 1, n],
        Family::D => (i..=n - 2)
            .chain([n - 1, n])
            .chain((i..=n - 2).rev())
            .collect(),
        _ => Vec::new(),
    }
}

fn top_block(t: DynkinType) -> usize {
    if t.family == Family::D {
        t.rank - 1
    } else {
        t.rank
    }
}

fn check_classical(t: DynkinType, min_a: usize) -> Result<(), CatalogError> {
    let ok = match t.family {
        Family::A => t.rank >= min_a,
        Family::B | Family::C | Family::D => true,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(CatalogError::RankOutOfRange(format!(
            "no block sequence for {t}"
        )))
    }
}

/// (s_n, ..., s_2), or (s_{n-1}, ..., s_2) for D.
pub fn lemma21_sequence(t: DynkinType) -> Result<FiringSequence, CatalogError> {
    check_classical(t, 2)?;
    Ok((2..=top_block(t)).rev().flat_map(|i| block(t, i)).collect())
}

/// The full block sequence (s_n, ..., s_1), or (s_{n-1}, ..., s_1) for D.
pub fn lemma22_sequence(t: DynkinType) -> Result<ConvergentPlan, CatalogError> {
    check_classical(t, 1)?;
    let sequence: FiringSequence = (1..=top_block(t)).rev().flat_map(|i| block(t, i)).collect();
    let terminal_rule = match t.family {
        Family::A => TerminalRule::ReverseNegate,
        Family::D => TerminalRule::NegateDParitySwap,
        _ => TerminalRule::Negate,
    };
    Ok(ConvergentPlan {
        dynkin: t,
        expected_length: expected_length(t),
        sequence,
        terminal_rule,
    })
}

const G2_SEQUENCE: [usize; 6] = [1, 2, 1, 2, 1, 2];

const F4_SEQUENCE: [usize; 24] = [
    1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 2, 3, 2, 1, 4, 3, 2, 3, 4, 2, 1, 3, 2, 3,
];

const E6_SEQUENCE: [usize; 36] = [
    1, 2, 3, 4, 3, 2, 1, 4, 3, 4, 5, 4, 2, 3, 4, 1, 3, 5, 6, 4, 5, 4, 2, 3, 1, 4, 3, 1, 5, 4, 2, 6,
    5, 4, 3, 1,
];

/// Firings 37..63 of the E7 sequence; the first 36 are the E6 sequence.
const E7_TAIL: [usize; 27] = [
    7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7,
];

/// Firings 64..120 of the E8 sequence; the first 63 are the E7 sequence.
const E8_TAIL: [usize; 57] = [
    8, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8, 7, 6, 5,
    4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 7, 5, 6, 4, 3, 1, 5, 4, 2, 3, 4, 5, 6, 7, 8,
];

/// The stored sequences for E6, E7, E8, F4 and G2.
pub fn exceptional_sequence(t: DynkinType) -> Result<ConvergentPlan, CatalogError> {
    let (sequence, terminal_rule): (Vec<usize>, _) = match (t.family, t.rank) {
        (Family::G, 2) => (G2_SEQUENCE.to_vec(), TerminalRule::Negate),
        (Family::F, 4) => (F4_SEQUENCE.to_vec(), TerminalRule::Negate),
        (Family::E, 6) => (E6_SEQUENCE.to_vec(), TerminalRule::E6PermutedNegate),
        (Family::E, 7) => (
            E6_SEQUENCE.iter().chain(&E7_TAIL).copied().collect(),
            TerminalRule::Negate,
        ),
        (Family::E, 8) => (
            E6_SEQUENCE
                .iter()
                .chain(&E7_TAIL)
                .chain(&E8_TAIL)
                .copied()
                .collect(),
            TerminalRule::Negate,
        ),
        _ => {
            return Err(CatalogError::RankOutOfRange(format!(
                "{t} is not exceptional"
            )))
        }
    };
    Ok(ConvergentPlan {
        dynkin: t,
        expected_length: expected_length(t),
        sequence,
        terminal_rule,
    })
}

/// The plan for any finite type: block sequences for A-D, stored data otherwise.
pub fn convergent_plan(t: DynkinType) -> ConvergentPlan {
    match t.family {
        Family::A | Family::B | Family::C | Family::D => lemma22_sequence(t),
        _ => exceptional_sequence(t),
    }
    .expect("every finite type has a plan")
}

/// The common length of every game from a strongly dominant position.
pub fn expected_length(t: DynkinType) -> usize {
    let n = t.rank;
    match (t.family, n) {
        (Family::A, _) => n * (n + 1) / 2,
        (Family::B | Family::C, _) => n * n,
        (Family::D, _) => n * (n - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        (Family::F, _) => 24,
        _ => 6,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub runs: Vec<(Strategy, GameOutcome)>,
    pub kinds_agree: bool,
    pub terminals_agree: bool,
    pub steps_agree: bool,
}

impl ProbeReport {
    pub fn all_agree(&self) -> bool {
        self.kinds_agree && self.terminals_agree && self.steps_agree
    }
}

/// Seed of the `t`-th random trial derived from a base seed.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(t as u64)
}

/// Plays GreedyMin, GreedyMax and `trials` seeded random games and reports
/// whether they agree. Observation only; nothing is asserted.
pub fn strong_convergence_probe(
    g: &GcmGraph,
    lambda: &Position,
    trials: usize,
    seed: u64,
    budget: usize,
) -> ProbeReport {
    let mut strategies = vec![Strategy::GreedyMin, Strategy::GreedyMax];
    strategies.extend((0..trials).map(|t| Strategy::RandomSeeded(trial_seed(seed, t))));
    let runs: Vec<(Strategy, GameOutcome)> = strategies
        .into_iter()
        .map(|s| (s.clone(), run_outcome(g, lambda, &s, budget)))
        .collect();
    let first = &runs[0].1;
    let kinds_agree = runs
        .iter()
        .all(|(_, o)| std::mem::discriminant(o) == std::mem::discriminant(first));
    let terminal = |o: &GameOutcome| match o {
        GameOutcome::Converged { terminal, .. } => Some(terminal.clone()),
        _ => None,
    };
    let steps = |o: &GameOutcome| match o {
        GameOutcome::Converged { steps, .. } | GameOutcome::BudgetExhausted { steps } => {
            Some(*steps)
        }
        _ => None,
    };
    let terminals_agree = runs.iter().all(|(_, o)| terminal(o) == terminal(first));
    let steps_agree = runs.iter().all(|(_, o)| steps(o) == steps(first));
    ProbeReport {
        runs,
        kinds_agree,
        terminals_agree,
        steps_agree,
    }
}

/// A random rational in (0, 100] with numerator in 1..=100 and denominator in 1..=10.
pub fn random_positive<R: Rng>(rng: &mut R) -> Rational {
    rational::frac(rng.gen_range(1..=100), rng.gen_range(1..=10))
}

pub fn random_strongly_dominant<R: Rng>(rng: &mut R, n: usize) -> Position {
    Position::new((0..n).map(|_| random_positive(rng)).collect())
}

/// Dominant and nonzero; each entry is zero with probability 1/3.
pub fn random_dominant<R: Rng>(rng: &mut R, n: usize) -> Position {
    loop {
        let p = Position::new(
            (0..n)
                .map(|_| {
                    if rng.gen_range(0..3) == 0 {
                        rational::int(0)
                    } else {
                        random_positive(rng)
                    }
                })
                .collect(),
        );
        if p.is_nonzero() {
            return p;
        }
    }
}

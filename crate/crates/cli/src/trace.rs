//! Trace files: a played game as JSON, version 1.

use numgame_core::rational::{format_rational, parse_rational};
use numgame_core::{play_sequence, GameOutcome, GameTrace, GcmGraph, Position, Step};
use serde::{Deserialize, Serialize};

pub const TRACE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: usize,
    /// `[i, j, p, q]` with M_ij = -p and M_ji = -q.
    pub edges: Vec<[i64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub fired: usize,
    pub position: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OutcomeJson {
    Converged { steps: usize, terminal: Vec<String> },
    BudgetExhausted { steps: usize },
    Partial { steps: usize },
    CertifiedDivergent { certificate: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFile {
    pub version: u32,
    pub graph: GraphJson,
    pub initial: Vec<String>,
    pub steps: Vec<StepJson>,
    pub outcome: OutcomeJson,
}

fn strings(p: &Position) -> Vec<String> {
    p.values().iter().map(format_rational).collect()
}

fn position(v: &[String]) -> Result<Position, String> {
    v.iter()
        .map(|s| parse_rational(s).ok_or_else(|| format!("not a rational: {s}")))
        .collect::<Result<_, _>>()
        .map(Position::new)
}

impl TraceFile {
    pub fn from_trace(g: &GcmGraph, trace: &GameTrace) -> Self {
        let outcome = match &trace.outcome {
            GameOutcome::Converged { terminal, steps } => OutcomeJson::Converged {
                steps: *steps,
                terminal: strings(terminal),
            },
            GameOutcome::BudgetExhausted { steps } => {
                OutcomeJson::BudgetExhausted { steps: *steps }
            }
            GameOutcome::Partial { steps } => OutcomeJson::Partial { steps: *steps },
            GameOutcome::CertifiedDivergent { certificate } => OutcomeJson::CertifiedDivergent {
                certificate: certificate.clone(),
            },
        };
        TraceFile {
            version: TRACE_VERSION,
            graph: GraphJson {
                nodes: g.n(),
                edges: g
                    .amplitude_edges()
                    .into_iter()
                    .map(|(i, j, p, q)| [i as i64, j as i64, p, q])
                    .collect(),
            },
            initial: strings(&trace.initial),
            steps: trace
                .steps
                .iter()
                .map(|s| StepJson {
                    fired: s.fired,
                    position: strings(&s.position),
                })
                .collect(),
            outcome,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let t: TraceFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if t.version != TRACE_VERSION {
            return Err(format!("unsupported trace version {}", t.version));
        }
        Ok(t)
    }

    pub fn graph(&self) -> Result<GcmGraph, String> {
        let edges: Vec<(usize, usize, i64, i64)> = self
            .graph
            .edges
            .iter()
            .map(|e| (e[0] as usize, e[1] as usize, e[2], e[3]))
            .collect();
        GcmGraph::from_edges(self.graph.nodes, &edges).map_err(|e| e.to_string())
    }

    /// Replays the recorded firings and checks every recorded position and
    /// the recorded terminal exactly. Returns the replayed trace.
    pub fn replay(&self) -> Result<GameTrace, String> {
        let g = self.graph()?;
        let initial = position(&self.initial)?;
        let fired: Vec<usize> = self.steps.iter().map(|s| s.fired).collect();
        let replayed = play_sequence(&g, &initial, &fired).map_err(|e| e.to_string())?;
        for (k, (rec, got)) in self.steps.iter().zip(&replayed.steps).enumerate() {
            let Step { position: p, .. } = got;
            if position(&rec.position)? != *p {
                return Err(format!("step {} position differs on replay", k + 1));
            }
        }
        if let OutcomeJson::Converged { terminal, .. } = &self.outcome {
            if position(terminal)? != *replayed.last_position() || !replayed.outcome.is_converged()
            {
                return Err("terminal differs on replay".to_string());
            }
        }
        Ok(replayed)
    }
}

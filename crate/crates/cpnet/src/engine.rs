//! Enabling semantics, the firing rule, and the seeded random-firing
//! simulator.
//!
//! Each step enumerates every enabled (transition, binding) pair in
//! deterministic order and picks one uniformly at random. The generator is
//! ChaCha8 seeded by `SimulationConfig::seed` (zero-extended to the 256-bit
//! key), so equal inputs give byte-identical reports.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::compiled::{BindingRank, CompiledNet};
use crate::marking::Marking;

/// Name of the PRNG and its seeding procedure, echoed in every report.
pub const RNG_ALGORITHM: &str = "ChaCha8 (64-bit seed zero-extended to the 256-bit key)";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("unknown transition {0}")]
    UnknownTransition(String),
    #[error("transition {transition} is not enabled under the given binding")]
    NotEnabled { transition: String },
}

/// Assignment of inscription variables to color values. Constant-only
/// transitions have exactly the empty binding (rank 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub rank: BindingRank,
    pub assignments: Vec<(String, String)>,
}

impl Binding {
    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiringEvent {
    pub step: u64,
    pub transition: String,
    pub binding: Binding,
    pub marking_before: Option<Marking>,
    pub marking_after: Option<Marking>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimulationConfig {
    pub max_steps: u64,
    pub seed: u64,
    pub record_trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// No transition was enabled.
    Dead,
    /// `max_steps` firings were performed.
    StepLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimulationReport {
    pub steps_executed: u64,
    pub terminated: Termination,
    /// Indexed by transition declaration order.
    pub firing_counts: Vec<u64>,
    pub final_marking: Marking,
    pub trace: Option<Vec<FiringEvent>>,
    pub seed: u64,
    pub rng_algorithm: &'static str,
}

/// All bindings under which `transition` is enabled, in lexicographic order
/// of (variable declaration order, color-value order).
pub fn enabled_bindings(
    net: &CompiledNet,
    marking: &Marking,
    transition: &str,
) -> Result<Vec<Binding>, EngineError> {
    let ti = net
        .transition_id(transition)
        .ok_or_else(|| EngineError::UnknownTransition(transition.to_string()))?;
    let state = net.state_from_marking(marking);
    Ok(net
        .enabled_ranks(&state, ti)
        .into_iter()
        .map(|rank| Binding {
            rank,
            assignments: net.binding_assignments(ti, rank),
        })
        .collect())
}

/// Fires one enabled (transition, binding) pair; the input marking is not
/// mutated.
pub fn fire(
    net: &CompiledNet,
    marking: &Marking,
    transition: &str,
    binding: &Binding,
) -> Result<Marking, EngineError> {
    let ti = net
        .transition_id(transition)
        .ok_or_else(|| EngineError::UnknownTransition(transition.to_string()))?;
    let mut state = net.state_from_marking(marking);
    if !net.is_enabled(&state, ti, binding.rank) {
        return Err(EngineError::NotEnabled {
            transition: transition.to_string(),
        });
    }
    net.fire_unchecked(&mut state, ti, binding.rank);
    Ok(net.marking_from_state(&state))
}

/// One random step on a flat state. Returns the fired pair, or `None` when
/// the marking is dead.
pub fn step(
    net: &CompiledNet,
    state: &mut [u64],
    rng: &mut ChaCha8Rng,
) -> Option<(usize, BindingRank)> {
    let mut enabled: Vec<(usize, BindingRank)> = Vec::new();
    net.for_each_enabled(state, |t, r| enabled.push((t, r)));
    if enabled.is_empty() {
        return None;
    }
    let pick = enabled[rng.gen_range(0..enabled.len())];
    net.fire_unchecked(state, pick.0, pick.1);
    Some(pick)
}

/// Runs random firings from the initial marking until dead or `max_steps`.
pub fn simulate(net: &CompiledNet, config: &SimulationConfig) -> SimulationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut state = net.initial_state();
    let mut firing_counts = vec![0u64; net.transition_count()];
    let mut trace = config.record_trace.then(Vec::new);
    let mut steps = 0u64;
    let mut terminated = Termination::StepLimit;

    while steps < config.max_steps {
        let before = trace.as_ref().map(|_| net.marking_from_state(&state));
        match step(net, &mut state, &mut rng) {
            None => {
                terminated = Termination::Dead;
                break;
            }
            Some((t, rank)) => {
                firing_counts[t] += 1;
                if let Some(events) = trace.as_mut() {
                    events.push(FiringEvent {
                        step: steps,
                        transition: net.net().transitions[t].name.clone(),
                        binding: Binding {
                            rank,
                            assignments: net.binding_assignments(t, rank),
                        },
                        marking_before: before,
                        marking_after: Some(net.marking_from_state(&state)),
                    });
                }
                steps += 1;
            }
        }
    }
    if terminated == Termination::StepLimit && net.is_dead(&state) {
        // Ran out of steps exactly at a dead marking.
        terminated = Termination::Dead;
    }

    SimulationReport {
        steps_executed: steps,
        terminated,
        firing_counts,
        final_marking: net.marking_from_state(&state),
        trace,
        seed: config.seed,
        rng_algorithm: RNG_ALGORITHM,
    }
}

impl SimulationReport {
    pub fn firing_count(&self, net: &CompiledNet, transition: &str) -> u64 {
        self.firing_counts[net.transition_id(transition).unwrap()]
    }

    /// JSON document with maps keyed in declaration order.
    pub fn to_json(&self, net: &CompiledNet) -> Value {
        let mut counts = Map::new();
        for (t, &c) in net.net().transitions.iter().zip(&self.firing_counts) {
            counts.insert(t.name.clone(), json!(c));
        }
        json!({
            "seed": self.seed,
            "rng": self.rng_algorithm,
            "steps": self.steps_executed,
            "terminated": match self.terminated {
                Termination::Dead => "dead",
                Termination::StepLimit => "step-limit",
            },
            "firingCounts": counts,
            "finalMarking": marking_json(net, &self.final_marking),
        })
    }
}

/// `{place: {color: count, …}, …}` in declaration order, nonzero entries only.
pub fn marking_json(net: &CompiledNet, marking: &Marking) -> Value {
    let mut places = Map::new();
    for (pi, place) in net.net().places.iter().enumerate() {
        let cs = net.color_set_of_place(pi);
        let mut tokens = Map::new();
        for (vi, count) in marking.place(pi).entries() {
            tokens.insert(cs.values[vi].clone(), json!(count));
        }
        places.insert(place.name.clone(), Value::Object(tokens));
    }
    Value::Object(places)
}

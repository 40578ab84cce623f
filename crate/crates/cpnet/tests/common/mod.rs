//! Shared test machinery: an independent brute-force state-space enumerator
//! and seeded random net generators.
//!
//! The enumerator is written directly against the declarative [`Net`] with
//! its own name-keyed token maps, binding enumeration, and firing rule. It
//! shares no code with the engine's compiled fast path, so agreement between
//! the two is a meaningful check.

use std::collections::{BTreeMap, BTreeSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cpnet::compiled::CompiledNet;
use cpnet::net::{
    ArcInscription, ArcTerm, ColorSet, InitEntry, Net, Place, Term, Transition, Variable,
};
use cpnet::statespace::ReachabilityGraph;

/// Marking as nested name-keyed maps, zero entries dropped.
pub type State = BTreeMap<String, BTreeMap<String, u64>>;

/// Arc keyed by full source/target states, transition name, and the binding
/// as (variable, value) pairs.
pub type ArcRepr = (State, String, Vec<(String, String)>, State);

pub struct OracleGraph {
    pub states: BTreeSet<State>,
    pub arcs: BTreeSet<ArcRepr>,
    pub dead: BTreeSet<State>,
}

fn initial_state(net: &Net) -> State {
    let mut state = State::new();
    for place in &net.places {
        let mut tokens = BTreeMap::new();
        for entry in &place.initial {
            *tokens.entry(entry.value.clone()).or_insert(0) += entry.count;
        }
        tokens.retain(|_, c| *c > 0);
        state.insert(place.name.clone(), tokens);
    }
    state
}

fn place_total(state: &State, place: &str) -> u64 {
    state[place].values().sum()
}

/// All variable assignments for the transition, as ordered (var, value)
/// lists; exactly one empty binding when no variables occur.
fn bindings_of(net: &Net, trans: &Transition) -> Vec<Vec<(String, String)>> {
    let mut vars: Vec<&Variable> = Vec::new();
    for var in &net.variables {
        let used = trans
            .inputs
            .iter()
            .chain(&trans.outputs)
            .flat_map(|(_, ins)| &ins.terms)
            .any(|t| matches!(&t.term, Term::Var(n) if *n == var.name));
        if used {
            vars.push(var);
        }
    }
    let mut bindings: Vec<Vec<(String, String)>> = vec![Vec::new()];
    for var in vars {
        let values = &net.color_set(&var.color_set).unwrap().values;
        let mut next = Vec::new();
        for partial in &bindings {
            for value in values {
                let mut b = partial.clone();
                b.push((var.name.clone(), value.clone()));
                next.push(b);
            }
        }
        bindings = next;
    }
    bindings
}

fn eval_terms(ins: &ArcInscription, binding: &[(String, String)]) -> BTreeMap<String, u64> {
    let mut out = BTreeMap::new();
    for term in &ins.terms {
        let value = match &term.term {
            Term::Value(v) => v.clone(),
            Term::Var(name) => binding
                .iter()
                .find(|(v, _)| v == name)
                .map(|(_, val)| val.clone())
                .unwrap(),
        };
        *out.entry(value).or_insert(0) += term.multiplicity;
    }
    out
}

fn is_enabled(net: &Net, state: &State, trans: &Transition, binding: &[(String, String)]) -> bool {
    for (place, threshold) in &trans.inhibitors {
        if place_total(state, place) >= *threshold {
            return false;
        }
    }
    for (place, ins) in &trans.inputs {
        let need = eval_terms(ins, binding);
        for (value, n) in need {
            if state[place].get(&value).copied().unwrap_or(0) < n {
                return false;
            }
        }
    }
    // Strong capacity rule on every capacitated output place.
    for (place_name, _) in &trans.outputs {
        let place = net.place(place_name).unwrap();
        if let Some(cap) = place.capacity {
            let consumed: u64 = trans
                .inputs
                .iter()
                .filter(|(p, _)| p == place_name)
                .map(|(_, ins)| ins.size())
                .sum();
            let produced: u64 = trans
                .outputs
                .iter()
                .filter(|(p, _)| p == place_name)
                .map(|(_, ins)| ins.size())
                .sum();
            let total = place_total(state, place_name);
            if total.saturating_sub(consumed) + produced > cap {
                return false;
            }
        }
    }
    true
}

fn fire(state: &State, trans: &Transition, binding: &[(String, String)]) -> State {
    let mut next = state.clone();
    for (place, ins) in &trans.inputs {
        for (value, n) in eval_terms(ins, binding) {
            let slot = next.get_mut(place).unwrap().get_mut(&value).unwrap();
            *slot -= n;
        }
        next.get_mut(place).unwrap().retain(|_, c| *c > 0);
    }
    for (place, ins) in &trans.outputs {
        for (value, n) in eval_terms(ins, binding) {
            *next.get_mut(place).unwrap().entry(value).or_insert(0) += n;
        }
    }
    next
}

fn enabled_pairs<'a>(
    net: &'a Net,
    state: &State,
) -> Vec<(&'a Transition, Vec<(String, String)>)> {
    let mut out = Vec::new();
    for trans in &net.transitions {
        for binding in bindings_of(net, trans) {
            if is_enabled(net, state, trans, &binding) {
                out.push((trans, binding));
            }
        }
    }
    out
}

/// Depth-first enumeration of the full reachable state space with a visited
/// set. Panics if the space exceeds `max_states` (oracle inputs must stay
/// small).
pub fn enumerate_oracle(net: &Net, max_states: usize) -> OracleGraph {
    let mut states = BTreeSet::new();
    let mut arcs = BTreeSet::new();
    let mut dead = BTreeSet::new();
    let mut stack = vec![initial_state(net)];
    states.insert(stack[0].clone());

    while let Some(state) = stack.pop() {
        assert!(states.len() <= max_states, "oracle state limit exceeded");
        let pairs = enabled_pairs(net, &state);
        if pairs.is_empty() {
            dead.insert(state.clone());
        }
        for (trans, binding) in pairs {
            let next = fire(&state, trans, &binding);
            arcs.insert((state.clone(), trans.name.clone(), binding, next.clone()));
            if states.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    OracleGraph { states, arcs, dead }
}

/// Converts an explored graph into the oracle's representation for exact
/// set comparison.
pub fn graph_repr(net: &CompiledNet, graph: &ReachabilityGraph) -> OracleGraph {
    let state_of = |node: u32| -> State {
        let marking = graph.marking(net, node);
        let mut state = State::new();
        for (pi, place) in net.net().places.iter().enumerate() {
            let cs = net.color_set_of_place(pi);
            let mut tokens = BTreeMap::new();
            for (vi, count) in marking.place(pi).entries() {
                tokens.insert(cs.values[vi].clone(), count);
            }
            state.insert(place.name.clone(), tokens);
        }
        state
    };
    let states: BTreeSet<State> = (0..graph.node_count() as u32).map(state_of).collect();
    let arcs: BTreeSet<ArcRepr> = graph
        .arcs()
        .iter()
        .map(|arc| {
            (
                state_of(arc.source),
                net.net().transitions[arc.transition as usize].name.clone(),
                net.binding_assignments(arc.transition as usize, arc.binding as u64),
                state_of(arc.target),
            )
        })
        .collect();
    let dead: BTreeSet<State> = cpnet::statespace::find_dead_markings(graph)
        .into_iter()
        .map(state_of)
        .collect();
    OracleGraph { states, arcs, dead }
}

// ---------------------------------------------------------------------------
// Random net generators.
// ---------------------------------------------------------------------------

/// Random well-formed net whose transitions never increase the total token
/// count, so the reachable state space is finite.
pub fn random_finite_net(seed: u64) -> Net {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut net = random_net_skeleton(&mut rng, true);

    let n_trans = rng.gen_range(2..=6);
    for ti in 0..n_trans {
        let n_inputs = rng.gen_range(1..=2.min(net.places.len()));
        let mut input_places: Vec<usize> = (0..net.places.len()).collect();
        shuffle(&mut input_places, &mut rng);
        input_places.truncate(n_inputs);

        let mut inputs = Vec::new();
        let mut in_size = 0u64;
        for &pi in &input_places {
            let ins = random_inscription(&net, pi, &mut rng);
            in_size += ins.size();
            inputs.push((net.places[pi].name.clone(), ins));
        }

        // Outputs give away at most what the inputs consume.
        let mut outputs = Vec::new();
        let mut budget = rng.gen_range(0..=in_size);
        while budget > 0 {
            let pi = rng.gen_range(0..net.places.len());
            let take = rng.gen_range(1..=budget);
            let ins = fixed_size_inscription(&net, pi, take, &mut rng);
            outputs.push((net.places[pi].name.clone(), ins));
            budget -= take;
            if rng.gen_bool(0.5) {
                break;
            }
        }

        let mut inhibitors = Vec::new();
        if rng.gen_bool(0.3) {
            let candidates: Vec<usize> = (0..net.places.len())
                .filter(|pi| !input_places.contains(pi))
                .collect();
            if let Some(&pi) = candidates.first() {
                inhibitors.push((net.places[pi].name.clone(), rng.gen_range(1..=2)));
            }
        }

        net.transitions.push(Transition {
            name: format!("T{ti}"),
            inputs,
            outputs,
            inhibitors,
        });
    }
    assert!(net.validate().is_empty(), "generator produced invalid net");
    net
}

/// Random well-formed net with no finiteness constraint; exercises the
/// serializer and parser.
pub fn random_net_any(seed: u64) -> Net {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut net = random_net_skeleton(&mut rng, false);

    let n_trans = rng.gen_range(0..=5);
    for ti in 0..n_trans {
        let mut inputs = Vec::new();
        let mut outputs = Vec::new();
        let mut inhibitors = Vec::new();
        let mut used_as_input = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            let pi = rng.gen_range(0..net.places.len());
            inputs.push((net.places[pi].name.clone(), random_inscription(&net, pi, &mut rng)));
            used_as_input.push(pi);
        }
        for _ in 0..rng.gen_range(0..=2) {
            let pi = rng.gen_range(0..net.places.len());
            outputs.push((net.places[pi].name.clone(), random_inscription(&net, pi, &mut rng)));
        }
        if rng.gen_bool(0.4) {
            let candidates: Vec<usize> = (0..net.places.len())
                .filter(|pi| !used_as_input.contains(pi))
                .collect();
            if let Some(&pi) = candidates.last() {
                inhibitors.push((net.places[pi].name.clone(), rng.gen_range(1..=3)));
            }
        }
        net.transitions.push(Transition {
            name: format!("T{ti}"),
            inputs,
            outputs,
            inhibitors,
        });
    }
    assert!(net.validate().is_empty(), "generator produced invalid net");
    net
}

fn random_net_skeleton(rng: &mut StdRng, small: bool) -> Net {
    let n_colorsets = rng.gen_range(1..=2);
    let color_sets: Vec<ColorSet> = (0..n_colorsets)
        .map(|ci| {
            let n_values = rng.gen_range(1..=3);
            ColorSet {
                name: format!("CS{ci}"),
                values: (0..n_values).map(|vi| format!("c{ci}v{vi}")).collect(),
            }
        })
        .collect();

    let variables: Vec<Variable> = (0..rng.gen_range(0..=2))
        .map(|vi| Variable {
            name: format!("x{vi}"),
            color_set: color_sets[rng.gen_range(0..color_sets.len())].name.clone(),
        })
        .collect();

    let n_places = rng.gen_range(2..=5);
    let places: Vec<Place> = (0..n_places)
        .map(|pi| {
            let cs = &color_sets[rng.gen_range(0..color_sets.len())];
            let n_init = if small { rng.gen_range(0..=2) } else { rng.gen_range(0..=3) };
            let initial: Vec<InitEntry> = {
                // Distinct values per entry keeps the init list canonical.
                let mut values: Vec<usize> = (0..cs.values.len()).collect();
                shuffle(&mut values, rng);
                values
                    .into_iter()
                    .take(n_init)
                    .map(|vi| InitEntry {
                        count: rng.gen_range(1..=if small { 2 } else { 4 }),
                        value: cs.values[vi].clone(),
                    })
                    .collect()
            };
            let total: u64 = initial.iter().map(|e| e.count).sum();
            let capacity = rng.gen_bool(0.3).then(|| total + rng.gen_range(1..=3));
            Place {
                name: format!("P{pi}"),
                color_set: cs.name.clone(),
                capacity,
                initial,
            }
        })
        .collect();

    Net {
        name: format!("rand{}", rng.gen_range(0..10_000)),
        color_sets,
        variables,
        places,
        transitions: Vec::new(),
    }
}

fn random_inscription(net: &Net, place: usize, rng: &mut StdRng) -> ArcInscription {
    fixed_size_inscription(net, place, rng.gen_range(1..=2), rng)
}

/// Inscription over the place's color set whose total size is exactly `size`.
fn fixed_size_inscription(net: &Net, place: usize, size: u64, rng: &mut StdRng) -> ArcInscription {
    let cs_name = &net.places[place].color_set;
    let cs = net.color_set(cs_name).unwrap();
    let vars: Vec<&Variable> = net
        .variables
        .iter()
        .filter(|v| v.color_set == *cs_name)
        .collect();
    let mut terms = Vec::new();
    let mut remaining = size;
    while remaining > 0 {
        let mult = rng.gen_range(1..=remaining);
        let term = if !vars.is_empty() && rng.gen_bool(0.3) {
            Term::Var(vars[rng.gen_range(0..vars.len())].name.clone())
        } else {
            Term::Value(cs.values[rng.gen_range(0..cs.values.len())].clone())
        };
        terms.push(ArcTerm { multiplicity: mult, term });
        remaining -= mult;
    }
    ArcInscription { terms }
}

fn shuffle<T>(items: &mut [T], rng: &mut StdRng) {
    for i in (1..items.len()).rev() {
        items.swap(i, rng.gen_range(0..=i));
    }
}

//! Index-resolved form of a validated net.
//!
//! [`CompiledNet`] resolves every name to an index and lays all token counts
//! out in one flat slot array (`state[slot]`), one slot per (place, color
//! value) pair in declaration order. Both the simulator and the state-space
//! explorer run on this flat form; the map-like [`Marking`] is converted at
//! the API boundary.

use std::collections::HashMap;

use crate::marking::Marking;
use crate::multiset::Multiset;
use crate::net::{Diagnostic, Net, Term};

/// A variable assignment for one transition, identified by its rank in the
/// lexicographic enumeration of all assignments (variable declaration order
/// major, color-value order minor). Constant-only transitions have exactly
/// one binding, rank 0.
pub type BindingRank = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CTerm {
    /// Fixed color value, as an index into the place's color set.
    Value(usize),
    /// Local variable slot (index into the transition's `vars`).
    Var(usize),
}

#[derive(Debug, Clone)]
struct CompiledArc {
    place: usize,
    terms: Vec<(u64, CTerm)>,
}

#[derive(Debug, Clone)]
pub(crate) struct CompiledTransition {
    /// Global variable indices used by this transition, declaration order.
    vars: Vec<usize>,
    /// Domain size of each variable in `vars`.
    domains: Vec<u64>,
    pub(crate) binding_count: u64,
    inputs: Vec<CompiledArc>,
    outputs: Vec<CompiledArc>,
    /// `(place, threshold)`.
    inhibitors: Vec<(usize, u64)>,
    /// Capacity checks: `(place, consumed_total, produced_total, capacity)`.
    cap_checks: Vec<(usize, u64, u64, u64)>,
    /// Precomputed slot deltas when the transition has no variables.
    constant: Option<ConstantForm>,
}

#[derive(Debug, Clone)]
struct ConstantForm {
    /// Merged per-slot consumption, slot order.
    consume: Vec<(usize, u64)>,
    /// Merged per-slot production, slot order.
    produce: Vec<(usize, u64)>,
}

#[derive(Debug)]
pub struct CompiledNet {
    net: Net,
    /// Color set index of each place.
    place_color_set: Vec<usize>,
    /// First slot of each place in the flat state, plus a final sentinel.
    offsets: Vec<usize>,
    capacities: Vec<Option<u64>>,
    pub(crate) transitions: Vec<CompiledTransition>,
    place_index: HashMap<String, usize>,
    transition_index: HashMap<String, usize>,
    initial: Vec<u64>,
}

impl CompiledNet {
    /// Validates and compiles; a net with diagnostics is refused.
    pub fn compile(net: Net) -> Result<CompiledNet, Vec<Diagnostic>> {
        let diags = net.validate();
        if !diags.is_empty() {
            return Err(diags);
        }

        let cs_index: HashMap<&str, usize> = net
            .color_sets
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.as_str(), i))
            .collect();
        let place_index: HashMap<String, usize> = net
            .places
            .iter()
            .enumerate()
            .map(|(i, p)| (p.name.clone(), i))
            .collect();
        let transition_index: HashMap<String, usize> = net
            .transitions
            .iter()
            .enumerate()
            .map(|(i, t)| (t.name.clone(), i))
            .collect();
        let var_index: HashMap<&str, usize> = net
            .variables
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.as_str(), i))
            .collect();

        let place_color_set: Vec<usize> =
            net.places.iter().map(|p| cs_index[p.color_set.as_str()]).collect();
        let mut offsets = Vec::with_capacity(net.places.len() + 1);
        let mut next = 0usize;
        for &cs in &place_color_set {
            offsets.push(next);
            next += net.color_sets[cs].values.len();
        }
        offsets.push(next);
        let capacities: Vec<Option<u64>> = net.places.iter().map(|p| p.capacity).collect();

        let mut initial = vec![0u64; next];
        for (pi, place) in net.places.iter().enumerate() {
            let cs = &net.color_sets[place_color_set[pi]];
            for entry in &place.initial {
                let vi = cs.values.iter().position(|v| *v == entry.value).unwrap();
                initial[offsets[pi] + vi] = initial[offsets[pi] + vi]
                    .checked_add(entry.count)
                    .expect("token count overflow");
            }
        }

        let mut transitions = Vec::with_capacity(net.transitions.len());
        for trans in &net.transitions {
            // Variables used by this transition, in global declaration order.
            let mut vars: Vec<usize> = trans
                .inputs
                .iter()
                .chain(&trans.outputs)
                .flat_map(|(_, ins)| ins.terms.iter())
                .filter_map(|t| match &t.term {
                    Term::Var(name) => Some(var_index[name.as_str()]),
                    Term::Value(_) => None,
                })
                .collect();
            vars.sort_unstable();
            vars.dedup();
            let domains: Vec<u64> = vars
                .iter()
                .map(|&v| {
                    let cs = cs_index[net.variables[v].color_set.as_str()];
                    net.color_sets[cs].values.len() as u64
                })
                .collect();
            let binding_count = domains.iter().product::<u64>().max(1);

            let compile_arcs = |arcs: &[(String, crate::net::ArcInscription)]| -> Vec<CompiledArc> {
                arcs.iter()
                    .map(|(pname, ins)| {
                        let place = place_index[pname];
                        let cs = &net.color_sets[place_color_set[place]];
                        let terms = ins
                            .terms
                            .iter()
                            .map(|at| {
                                let ct = match &at.term {
                                    Term::Value(v) => CTerm::Value(
                                        cs.values.iter().position(|x| x == v).unwrap(),
                                    ),
                                    Term::Var(name) => {
                                        let g = var_index[name.as_str()];
                                        CTerm::Var(vars.iter().position(|&x| x == g).unwrap())
                                    }
                                };
                                (at.multiplicity, ct)
                            })
                            .collect();
                        CompiledArc { place, terms }
                    })
                    .collect()
            };
            let inputs = compile_arcs(&trans.inputs);
            let outputs = compile_arcs(&trans.outputs);
            let inhibitors: Vec<(usize, u64)> = trans
                .inhibitors
                .iter()
                .map(|(p, k)| (place_index[p], *k))
                .collect();

            // Capacity checks only for capacitated output places.
            let consumed_at = |place: usize| -> u64 {
                inputs
                    .iter()
                    .filter(|a| a.place == place)
                    .map(|a| a.terms.iter().map(|(m, _)| m).sum::<u64>())
                    .sum()
            };
            let mut cap_checks = Vec::new();
            let mut seen = Vec::new();
            for arc in &outputs {
                if seen.contains(&arc.place) {
                    continue;
                }
                seen.push(arc.place);
                if let Some(cap) = capacities[arc.place] {
                    let produced: u64 = outputs
                        .iter()
                        .filter(|a| a.place == arc.place)
                        .map(|a| a.terms.iter().map(|(m, _)| m).sum::<u64>())
                        .sum();
                    cap_checks.push((arc.place, consumed_at(arc.place), produced, cap));
                }
            }

            let constant = if vars.is_empty() {
                let merge = |arcs: &[CompiledArc]| -> Vec<(usize, u64)> {
                    let mut out: Vec<(usize, u64)> = Vec::new();
                    for arc in arcs {
                        for &(mult, term) in &arc.terms {
                            let CTerm::Value(v) = term else { unreachable!() };
                            let slot = offsets[arc.place] + v;
                            match out.iter_mut().find(|(s, _)| *s == slot) {
                                Some((_, c)) => *c += mult,
                                None => out.push((slot, mult)),
                            }
                        }
                    }
                    out.sort_unstable();
                    out
                };
                Some(ConstantForm {
                    consume: merge(&inputs),
                    produce: merge(&outputs),
                })
            } else {
                None
            };

            transitions.push(CompiledTransition {
                vars,
                domains,
                binding_count,
                inputs,
                outputs,
                inhibitors,
                cap_checks,
                constant,
            });
        }

        Ok(CompiledNet {
            net,
            place_color_set,
            offsets,
            capacities,
            transitions,
            place_index,
            transition_index,
            initial,
        })
    }

    pub fn net(&self) -> &Net {
        &self.net
    }

    pub fn place_count(&self) -> usize {
        self.net.places.len()
    }

    pub fn transition_count(&self) -> usize {
        self.net.transitions.len()
    }

    /// Total number of (place, value) slots in a flat state.
    pub fn slot_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn place_slots(&self, place: usize) -> std::ops::Range<usize> {
        self.offsets[place]..self.offsets[place + 1]
    }

    pub fn capacity(&self, place: usize) -> Option<u64> {
        self.capacities[place]
    }

    pub fn place_id(&self, name: &str) -> Option<usize> {
        self.place_index.get(name).copied()
    }

    pub fn transition_id(&self, name: &str) -> Option<usize> {
        self.transition_index.get(name).copied()
    }

    pub fn color_set_of_place(&self, place: usize) -> &crate::net::ColorSet {
        &self.net.color_sets[self.place_color_set[place]]
    }

    pub fn initial_state(&self) -> Vec<u64> {
        self.initial.clone()
    }

    pub fn initial_marking(&self) -> Marking {
        self.marking_from_state(&self.initial)
    }

    pub fn place_total(&self, state: &[u64], place: usize) -> u64 {
        state[self.place_slots(place)].iter().sum()
    }

    pub fn marking_from_state(&self, state: &[u64]) -> Marking {
        let per_place = (0..self.place_count())
            .map(|p| Multiset::from_counts(state[self.place_slots(p)].to_vec()))
            .collect();
        Marking::new(per_place)
    }

    pub fn state_from_marking(&self, marking: &Marking) -> Vec<u64> {
        let mut state = Vec::with_capacity(self.slot_count());
        for ms in marking.places() {
            state.extend_from_slice(ms.counts());
        }
        state
    }

    /// Decodes a binding rank into `(variable name, value name)` pairs.
    pub fn binding_assignments(&self, trans: usize, rank: BindingRank) -> Vec<(String, String)> {
        let t = &self.transitions[trans];
        let values = decode_rank(rank, &t.domains);
        t.vars
            .iter()
            .zip(values)
            .map(|(&v, val)| {
                let var = &self.net.variables[v];
                let cs = self.net.color_set(&var.color_set).unwrap();
                (var.name.clone(), cs.values[val as usize].clone())
            })
            .collect()
    }

    /// Per-slot token demand of the transition's inputs under a binding,
    /// merged and sorted by slot.
    fn input_needs(&self, t: &CompiledTransition, rank: BindingRank) -> Vec<(usize, u64)> {
        if let Some(c) = &t.constant {
            return c.consume.clone();
        }
        let values = decode_rank(rank, &t.domains);
        self.resolve_arcs(&t.inputs, &values)
    }

    fn output_adds(&self, t: &CompiledTransition, rank: BindingRank) -> Vec<(usize, u64)> {
        if let Some(c) = &t.constant {
            return c.produce.clone();
        }
        let values = decode_rank(rank, &t.domains);
        self.resolve_arcs(&t.outputs, &values)
    }

    fn resolve_arcs(&self, arcs: &[CompiledArc], values: &[u64]) -> Vec<(usize, u64)> {
        let mut out: Vec<(usize, u64)> = Vec::new();
        for arc in arcs {
            for &(mult, term) in &arc.terms {
                let v = match term {
                    CTerm::Value(v) => v,
                    CTerm::Var(slot) => values[slot] as usize,
                };
                let slot = self.offsets[arc.place] + v;
                match out.iter_mut().find(|(s, _)| *s == slot) {
                    Some((_, c)) => *c += mult,
                    None => out.push((slot, mult)),
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Enabling test for one (transition, binding) pair on a flat state.
    pub fn is_enabled(&self, state: &[u64], trans: usize, rank: BindingRank) -> bool {
        let t = &self.transitions[trans];
        if rank >= t.binding_count {
            return false;
        }
        for &(place, threshold) in &t.inhibitors {
            if self.place_total(state, place) >= threshold {
                return false;
            }
        }
        if let Some(c) = &t.constant {
            for &(slot, need) in &c.consume {
                if state[slot] < need {
                    return false;
                }
            }
        } else {
            for (slot, need) in self.input_needs(t, rank) {
                if state[slot] < need {
                    return false;
                }
            }
        }
        for &(place, consumed, produced, cap) in &t.cap_checks {
            let total = self.place_total(state, place);
            if total - consumed.min(total) + produced > cap {
                return false;
            }
        }
        true
    }

    /// Fires without re-checking enablement; caller must have checked.
    pub fn fire_unchecked(&self, state: &mut [u64], trans: usize, rank: BindingRank) {
        let t = &self.transitions[trans];
        if let Some(c) = &t.constant {
            for &(slot, n) in &c.consume {
                state[slot] -= n;
            }
            for &(slot, n) in &c.produce {
                state[slot] = state[slot].checked_add(n).expect("token count overflow");
            }
        } else {
            for (slot, n) in self.input_needs(t, rank) {
                state[slot] -= n;
            }
            for (slot, n) in self.output_adds(t, rank) {
                state[slot] = state[slot].checked_add(n).expect("token count overflow");
            }
        }
    }

    /// All enabled bindings of one transition, in rank order.
    pub fn enabled_ranks(&self, state: &[u64], trans: usize) -> Vec<BindingRank> {
        let t = &self.transitions[trans];
        (0..t.binding_count)
            .filter(|&r| self.is_enabled(state, trans, r))
            .collect()
    }

    /// Calls `f` for every enabled (transition, binding) pair, in
    /// (transition declaration order, binding rank order).
    pub fn for_each_enabled(&self, state: &[u64], mut f: impl FnMut(usize, BindingRank)) {
        for (ti, t) in self.transitions.iter().enumerate() {
            for rank in 0..t.binding_count {
                if self.is_enabled(state, ti, rank) {
                    f(ti, rank);
                }
            }
        }
    }

    pub fn is_dead(&self, state: &[u64]) -> bool {
        let mut any = false;
        self.for_each_enabled(state, |_, _| any = true);
        !any
    }
}

fn decode_rank(rank: u64, domains: &[u64]) -> Vec<u64> {
    let mut values = vec![0u64; domains.len()];
    let mut rest = rank;
    for i in (0..domains.len()).rev() {
        values[i] = rest % domains[i];
        rest /= domains[i];
    }
    values
}

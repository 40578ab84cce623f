//! Explicit-state reachability graph construction and its analyses: dead
//! markings, boundedness, SCC condensation, home markings, fairness, dead
//! transitions.
//!
//! Exploration is breadth-first with a hash-indexed canonical-marking store;
//! successor order is fixed by (transition declaration order, binding rank),
//! so node numbering is deterministic. The parallel mode expands one BFS
//! level at a time and merges results in frontier order, which makes its
//! output byte-identical to the single-threaded reference mode.

use std::collections::HashSet;
use std::time::Instant;

use indexmap::IndexSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::compiled::CompiledNet;
use crate::marking::Marking;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// Verdict-style analyses are unsound on a truncated state space.
    #[error("analysis undefined on truncated state space (exploration hit a limit)")]
    Truncated,
    #[error("DOT export limited to {limit} nodes, graph has {nodes}")]
    TooLargeForDot { nodes: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_states: usize,
    pub max_arcs: usize,
    pub max_seconds: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 5_000_000,
            max_arcs: 50_000_000,
            max_seconds: 300,
        }
    }
}

/// One firing event edge: `source --transition/binding--> target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphArc {
    pub source: u32,
    pub transition: u32,
    pub binding: u32,
    pub target: u32,
}

/// Explicit state graph. Node 0 is the initial marking; nodes are
/// deduplicated by canonical (flat) form and numbered in BFS order.
#[derive(Debug)]
pub struct ReachabilityGraph {
    nodes: IndexSet<Box<[u64]>>,
    arcs: Vec<GraphArc>,
    complete: bool,
}

impl ReachabilityGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn arcs(&self) -> &[GraphArc] {
        &self.arcs
    }

    pub fn state(&self, node: u32) -> &[u64] {
        &self.nodes[node as usize]
    }

    pub fn marking(&self, net: &CompiledNet, node: u32) -> Marking {
        net.marking_from_state(self.state(node))
    }

    pub fn node_of_state(&self, state: &[u64]) -> Option<u32> {
        self.nodes.get_index_of(state).map(|i| i as u32)
    }

    /// Out-arc offsets in CSR form. Arcs are stored grouped by source node
    /// in ascending order, so offsets follow from one counting pass.
    fn out_offsets(&self) -> Vec<u32> {
        let mut offsets = vec![0u32; self.nodes.len() + 1];
        for arc in &self.arcs {
            offsets[arc.source as usize + 1] += 1;
        }
        for i in 0..self.nodes.len() {
            offsets[i + 1] += offsets[i];
        }
        offsets
    }
}

fn successors(net: &CompiledNet, state: &[u64]) -> Vec<Successor> {
    let mut out = Vec::new();
    net.for_each_enabled(state, |t, rank| {
        let mut succ = state.to_vec();
        net.fire_unchecked(&mut succ, t, rank);
        assert!(rank <= u32::MAX as u64, "binding rank exceeds u32 range");
        out.push((t as u32, rank as u32, succ.into_boxed_slice()));
    });
    out
}

/// Breadth-first exploration from the initial marking. Discovers every
/// reachable marking when no limit is hit; a hit limit yields a truncated
/// graph with `complete() == false`, not an error.
pub fn explore(net: &CompiledNet, limits: &Limits) -> ReachabilityGraph {
    explore_with_threads(net, limits, 1)
}

/// As [`explore`], with `threads > 1` expanding each BFS level in parallel.
/// Output is identical to the single-threaded mode.
pub fn explore_with_threads(net: &CompiledNet, limits: &Limits, threads: usize) -> ReachabilityGraph {
    if threads > 1 {
        return explore_parallel(net, limits, threads);
    }
    let start = Instant::now();
    let mut nodes: IndexSet<Box<[u64]>> = IndexSet::new();
    nodes.insert(net.initial_state().into_boxed_slice());
    let mut arcs: Vec<GraphArc> = Vec::new();
    let mut cursor = 0usize;
    let mut complete = true;

    while cursor < nodes.len() {
        if nodes.len() > limits.max_states
            || arcs.len() > limits.max_arcs
            || (cursor.is_multiple_of(1024) && start.elapsed().as_secs() >= limits.max_seconds)
        {
            complete = false;
            break;
        }
        let state = nodes[cursor].clone();
        for (t, rank, succ) in successors(net, &state) {
            let (target, _) = nodes.insert_full(succ);
            arcs.push(GraphArc {
                source: cursor as u32,
                transition: t,
                binding: rank,
                target: target as u32,
            });
        }
        cursor += 1;
    }

    ReachabilityGraph { nodes, arcs, complete }
}

/// One discovered successor: (source node, transition, binding rank packed
/// into the arc) plus the successor's flat state.
type Successor = (u32, u32, Box<[u64]>);

fn explore_parallel(net: &CompiledNet, limits: &Limits, threads: usize) -> ReachabilityGraph {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let mut nodes: IndexSet<Box<[u64]>> = IndexSet::new();
    nodes.insert(net.initial_state().into_boxed_slice());
    let mut arcs: Vec<GraphArc> = Vec::new();
    let mut frontier: Vec<usize> = vec![0];
    let mut complete = true;

    'outer: while !frontier.is_empty() {
        let batches: Vec<Vec<Successor>> = pool.install(|| {
            frontier
                .par_iter()
                .map(|&idx| successors(net, &nodes[idx]))
                .collect()
        });
        let mut next = Vec::new();
        for (&source, batch) in frontier.iter().zip(batches) {
            if nodes.len() > limits.max_states
                || arcs.len() > limits.max_arcs
                || start.elapsed().as_secs() >= limits.max_seconds
            {
                complete = false;
                break 'outer;
            }
            for (t, rank, succ) in batch {
                let (target, fresh) = nodes.insert_full(succ);
                if fresh {
                    next.push(target);
                }
                arcs.push(GraphArc {
                    source: source as u32,
                    transition: t,
                    binding: rank,
                    target: target as u32,
                });
            }
        }
        frontier = next;
    }

    ReachabilityGraph { nodes, arcs, complete }
}

/// Nodes with out-degree 0.
pub fn find_dead_markings(graph: &ReachabilityGraph) -> Vec<u32> {
    let mut has_out = vec![false; graph.node_count()];
    for arc in graph.arcs() {
        has_out[arc.source as usize] = true;
    }
    (0..graph.node_count() as u32)
        .filter(|&n| !has_out[n as usize])
        .collect()
}

/// Per-place token bounds over every reachable marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceBounds {
    pub lower_total: u64,
    pub upper_total: u64,
    pub per_color_upper: Vec<u64>,
}

pub fn compute_bounds(
    net: &CompiledNet,
    graph: &ReachabilityGraph,
) -> Result<Vec<PlaceBounds>, AnalysisError> {
    if !graph.complete() {
        return Err(AnalysisError::Truncated);
    }
    let mut bounds: Vec<PlaceBounds> = (0..net.place_count())
        .map(|p| PlaceBounds {
            lower_total: u64::MAX,
            upper_total: 0,
            per_color_upper: vec![0; net.place_slots(p).len()],
        })
        .collect();
    for node in 0..graph.node_count() as u32 {
        let state = graph.state(node);
        for (p, b) in bounds.iter_mut().enumerate() {
            let slots = net.place_slots(p);
            let mut total = 0;
            for (i, slot) in slots.enumerate() {
                let c = state[slot];
                total += c;
                if c > b.per_color_upper[i] {
                    b.per_color_upper[i] = c;
                }
            }
            b.lower_total = b.lower_total.min(total);
            b.upper_total = b.upper_total.max(total);
        }
    }
    Ok(bounds)
}

#[derive(Debug, Clone)]
pub struct SccDecomposition {
    pub component_of: Vec<u32>,
    pub components: Vec<Vec<u32>>,
    /// Distinct cross-component pairs; no self-pairs, so acyclic.
    pub condensation_arcs: HashSet<(u32, u32)>,
}

/// Iterative single-pass Tarjan; safe on state spaces far beyond any
/// recursion depth the stack would take.
pub fn scc_condense(graph: &ReachabilityGraph) -> SccDecomposition {
    let n = graph.node_count();
    let offsets = graph.out_offsets();
    let arcs = graph.arcs();

    const UNSET: u32 = u32::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut component_of = vec![UNSET; n];
    let mut components: Vec<Vec<u32>> = Vec::new();
    let mut counter: u32 = 0;

    // (node, next out-arc position) pairs form the explicit DFS stack.
    let mut work: Vec<(u32, u32)> = Vec::new();
    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        work.push((root, offsets[root as usize]));
        index[root as usize] = counter;
        low[root as usize] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut next)) = work.last_mut() {
            if *next < offsets[v as usize + 1] {
                let w = arcs[*next as usize].target;
                *next += 1;
                if index[w as usize] == UNSET {
                    index[w as usize] = counter;
                    low[w as usize] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    work.push((w, offsets[w as usize]));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
            } else {
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                }
                if low[v as usize] == index[v as usize] {
                    let id = components.len() as u32;
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        component_of[w as usize] = id;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }

    let mut condensation_arcs = HashSet::new();
    for arc in arcs {
        let (a, b) = (
            component_of[arc.source as usize],
            component_of[arc.target as usize],
        );
        if a != b {
            condensation_arcs.insert((a, b));
        }
    }

    SccDecomposition {
        component_of,
        components,
        condensation_arcs,
    }
}

/// All nodes of the unique terminal SCC, or empty when the condensation has
/// more than one terminal component.
pub fn find_home_markings(
    graph: &ReachabilityGraph,
    scc: &SccDecomposition,
) -> Result<Vec<u32>, AnalysisError> {
    if !graph.complete() {
        return Err(AnalysisError::Truncated);
    }
    let mut has_out = vec![false; scc.components.len()];
    for &(a, _) in &scc.condensation_arcs {
        has_out[a as usize] = true;
    }
    let terminal: Vec<usize> = (0..scc.components.len())
        .filter(|&c| !has_out[c])
        .collect();
    Ok(match terminal.as_slice() {
        [only] => scc.components[*only].clone(),
        _ => Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairnessReport {
    pub acyclic: bool,
    pub infinite_occurrence_sequences_exist: bool,
    /// Transitions labeling an arc inside a nontrivial SCC or a self-loop.
    pub live_cycle_transitions: Vec<u32>,
}

pub fn fairness_report(
    graph: &ReachabilityGraph,
    scc: &SccDecomposition,
) -> Result<FairnessReport, AnalysisError> {
    if !graph.complete() {
        return Err(AnalysisError::Truncated);
    }
    let mut cycle_transitions: Vec<u32> = Vec::new();
    for arc in graph.arcs() {
        let same_component = scc.component_of[arc.source as usize]
            == scc.component_of[arc.target as usize];
        if same_component || arc.source == arc.target {
            cycle_transitions.push(arc.transition);
        }
    }
    cycle_transitions.sort_unstable();
    cycle_transitions.dedup();
    let acyclic = cycle_transitions.is_empty();
    Ok(FairnessReport {
        acyclic,
        infinite_occurrence_sequences_exist: !acyclic,
        live_cycle_transitions: cycle_transitions,
    })
}

/// Transitions labeling no arc anywhere in the graph.
pub fn find_dead_transitions(
    net: &CompiledNet,
    graph: &ReachabilityGraph,
) -> Result<Vec<u32>, AnalysisError> {
    if !graph.complete() {
        return Err(AnalysisError::Truncated);
    }
    let mut fired = vec![false; net.transition_count()];
    for arc in graph.arcs() {
        fired[arc.transition as usize] = true;
    }
    Ok((0..net.transition_count() as u32)
        .filter(|&t| !fired[t as usize])
        .collect())
}

/// Aggregate of every analysis the `explore` CLI reports. Verdict fields
/// are absent on a truncated graph.
#[derive(Debug, Clone)]
pub struct StateSpaceReport {
    pub state_count: usize,
    pub arc_count: usize,
    pub complete: bool,
    pub verdicts: Option<Verdicts>,
}

#[derive(Debug, Clone)]
pub struct Verdicts {
    pub dead_marking_count: usize,
    /// First few dead markings, node order.
    pub dead_marking_sample: Vec<u32>,
    pub dead_transitions: Vec<String>,
    /// Indexed by place declaration order.
    pub bounds: Vec<PlaceBounds>,
    pub scc_count: usize,
    pub home_marking_count: usize,
    pub home_marking_sample: Vec<u32>,
    pub acyclic: bool,
    pub infinite_occurrence_sequences_exist: bool,
    pub live_cycle_transitions: Vec<String>,
}

pub const REPORT_SAMPLE_LIMIT: usize = 10;

/// Runs every analysis on the graph. Truncated graphs yield only the size
/// counters.
pub fn analyze(net: &CompiledNet, graph: &ReachabilityGraph) -> StateSpaceReport {
    let verdicts = graph.complete().then(|| {
        let dead = find_dead_markings(graph);
        let scc = scc_condense(graph);
        let home = find_home_markings(graph, &scc).unwrap();
        let fairness = fairness_report(graph, &scc).unwrap();
        let bounds = compute_bounds(net, graph).unwrap();
        let dead_transitions = find_dead_transitions(net, graph)
            .unwrap()
            .into_iter()
            .map(|t| net.net().transitions[t as usize].name.clone())
            .collect();
        Verdicts {
            dead_marking_count: dead.len(),
            dead_marking_sample: dead.iter().take(REPORT_SAMPLE_LIMIT).copied().collect(),
            dead_transitions,
            bounds,
            scc_count: scc.components.len(),
            home_marking_count: home.len(),
            home_marking_sample: home.iter().take(REPORT_SAMPLE_LIMIT).copied().collect(),
            acyclic: fairness.acyclic,
            infinite_occurrence_sequences_exist: fairness.infinite_occurrence_sequences_exist,
            live_cycle_transitions: fairness
                .live_cycle_transitions
                .into_iter()
                .map(|t| net.net().transitions[t as usize].name.clone())
                .collect(),
        }
    });
    StateSpaceReport {
        state_count: graph.node_count(),
        arc_count: graph.arc_count(),
        complete: graph.complete(),
        verdicts,
    }
}

impl StateSpaceReport {
    /// JSON mirror of the report; map keys in place declaration order.
    pub fn to_json(&self, net: &CompiledNet) -> serde_json::Value {
        use serde_json::{json, Map, Value};
        let mut root = Map::new();
        root.insert("stateCount".into(), json!(self.state_count));
        root.insert("arcCount".into(), json!(self.arc_count));
        root.insert("complete".into(), json!(self.complete));
        if let Some(v) = &self.verdicts {
            root.insert("deadMarkingCount".into(), json!(v.dead_marking_count));
            root.insert("deadMarkingSample".into(), json!(v.dead_marking_sample));
            root.insert("deadTransitions".into(), json!(v.dead_transitions));
            let mut bounds = Map::new();
            for (pi, place) in net.net().places.iter().enumerate() {
                let b = &v.bounds[pi];
                let cs = net.color_set_of_place(pi);
                let mut per_color = Map::new();
                for (vi, value) in cs.values.iter().enumerate() {
                    per_color.insert(value.clone(), json!(b.per_color_upper[vi]));
                }
                bounds.insert(
                    place.name.clone(),
                    json!({
                        "lowerTotal": b.lower_total,
                        "upperTotal": b.upper_total,
                        "perColorUpper": per_color,
                    }),
                );
            }
            root.insert("boundsPerPlace".into(), Value::Object(bounds));
            root.insert("sccCount".into(), json!(v.scc_count));
            root.insert("homeMarkingCount".into(), json!(v.home_marking_count));
            root.insert("homeMarkingSample".into(), json!(v.home_marking_sample));
            root.insert("acyclic".into(), json!(v.acyclic));
            root.insert(
                "infiniteOccurrenceSequencesExist".into(),
                json!(v.infinite_occurrence_sequences_exist),
            );
            root.insert("liveCycleTransitions".into(), json!(v.live_cycle_transitions));
        }
        Value::Object(root)
    }
}

pub const DOT_NODE_LIMIT: usize = 2000;

/// DOT rendering for small graphs; nodes carry their index, arcs carry
/// `transition/binding`.
pub fn to_dot(net: &CompiledNet, graph: &ReachabilityGraph) -> Result<String, AnalysisError> {
    if graph.node_count() > DOT_NODE_LIMIT {
        return Err(AnalysisError::TooLargeForDot {
            nodes: graph.node_count(),
            limit: DOT_NODE_LIMIT,
        });
    }
    let mut out = String::from("digraph statespace {\n");
    for node in 0..graph.node_count() {
        out.push_str(&format!("  n{node} [label=\"{node}\"];\n"));
    }
    for arc in graph.arcs() {
        let name = &net.net().transitions[arc.transition as usize].name;
        let binding = net.binding_assignments(arc.transition as usize, arc.binding as u64);
        let label = if binding.is_empty() {
            name.clone()
        } else {
            let assigns: Vec<String> =
                binding.iter().map(|(v, c)| format!("{v}={c}")).collect();
            format!("{name}/{}", assigns.join(","))
        };
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{label}\"];\n",
            arc.source, arc.target
        ));
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_net;

    fn compiled(src: &str) -> CompiledNet {
        CompiledNet::compile(parse_net(src).unwrap()).unwrap()
    }

    #[test]
    fn single_sink_transition_gives_two_nodes_one_arc() {
        let net = compiled("colorset C = { a }; place P : C init 1`a; trans T { in P : 1`a; }");
        let graph = explore(&net, &Limits::default());
        assert!(graph.complete());
        assert_eq!(graph.node_count(), 2);
        assert_eq!(graph.arc_count(), 1);
        assert_eq!(find_dead_markings(&graph), vec![1]);
        let scc = scc_condense(&graph);
        assert_eq!(scc.components.len(), 2);
        let fairness = fairness_report(&graph, &scc).unwrap();
        assert!(fairness.acyclic);
        assert!(!fairness.infinite_occurrence_sequences_exist);
    }

    #[test]
    fn self_loop_is_a_nontrivial_cycle_and_home_marking() {
        let net =
            compiled("colorset C = { a }; place P : C init 1`a; trans T { in P : 1`a; out P : 1`a; }");
        let graph = explore(&net, &Limits::default());
        assert_eq!(graph.node_count(), 1);
        assert!(find_dead_markings(&graph).is_empty());
        let scc = scc_condense(&graph);
        let fairness = fairness_report(&graph, &scc).unwrap();
        assert!(!fairness.acyclic);
        assert_eq!(fairness.live_cycle_transitions, vec![0]);
        // Single cycle covering all nodes: every node is a home marking.
        assert_eq!(find_home_markings(&graph, &scc).unwrap(), vec![0]);
    }

    #[test]
    fn three_node_cycle_is_one_component() {
        let net = compiled(
            "colorset C = { a };\nplace P1 : C init 1`a;\nplace P2 : C;\nplace P3 : C;\n\
             trans T1 { in P1 : 1`a; out P2 : 1`a; }\n\
             trans T2 { in P2 : 1`a; out P3 : 1`a; }\n\
             trans T3 { in P3 : 1`a; out P1 : 1`a; }\n",
        );
        let graph = explore(&net, &Limits::default());
        assert_eq!(graph.node_count(), 3);
        let scc = scc_condense(&graph);
        assert_eq!(scc.components.len(), 1);
        assert_eq!(scc.components[0].len(), 3);
        assert!(scc.condensation_arcs.is_empty());
        assert_eq!(find_home_markings(&graph, &scc).unwrap().len(), 3);
    }

    #[test]
    fn two_dead_markings_force_empty_home_set() {
        let net = compiled(
            "colorset C = { a };\nplace P : C init 1`a;\nplace A : C;\nplace B : C;\n\
             trans TA { in P : 1`a; out A : 1`a; }\n\
             trans TB { in P : 1`a; out B : 1`a; }\n",
        );
        let graph = explore(&net, &Limits::default());
        assert_eq!(find_dead_markings(&graph).len(), 2);
        let scc = scc_condense(&graph);
        assert!(find_home_markings(&graph, &scc).unwrap().is_empty());
    }

    #[test]
    fn bounds_on_untouched_and_empty_places() {
        let net = compiled(
            "colorset C = { a };\nplace Stock : C init 5`a;\nplace Empty : C;\n\
             place Src : C init 1`a;\nplace Dst : C;\n\
             trans T { in Src : 1`a; out Dst : 1`a; }\n",
        );
        let graph = explore(&net, &Limits::default());
        let bounds = compute_bounds(&net, &graph).unwrap();
        let p = |name: &str| net.place_id(name).unwrap();
        assert_eq!((bounds[p("Stock")].lower_total, bounds[p("Stock")].upper_total), (5, 5));
        assert_eq!((bounds[p("Empty")].lower_total, bounds[p("Empty")].upper_total), (0, 0));
        assert_eq!((bounds[p("Dst")].lower_total, bounds[p("Dst")].upper_total), (0, 1));
    }

    #[test]
    fn unreachable_transition_is_dead() {
        let net = compiled(
            "colorset C = { a };\nplace P : C init 1`a;\nplace Q : C;\nplace R : C;\n\
             trans T1 { in P : 1`a; }\n\
             trans T2 { in Q : 1`a; out R : 1`a; }\n",
        );
        let graph = explore(&net, &Limits::default());
        assert_eq!(find_dead_transitions(&net, &graph).unwrap(), vec![1]);
    }

    #[test]
    fn limits_truncate_and_analyses_refuse() {
        // Unbounded producer: exploration must hit the state limit.
        let net = compiled("colorset C = { a }; place P : C; trans T { out P : 1`a; }");
        let limits = Limits { max_states: 10, max_arcs: 1_000, max_seconds: 60 };
        let graph = explore(&net, &limits);
        assert!(!graph.complete());
        assert!(graph.node_count() >= 10);
        assert_eq!(compute_bounds(&net, &graph), Err(AnalysisError::Truncated));
        let scc = scc_condense(&graph);
        assert!(find_home_markings(&graph, &scc).is_err());
        assert!(fairness_report(&graph, &scc).is_err());
        assert!(find_dead_transitions(&net, &graph).is_err());
    }

    #[test]
    fn parallel_mode_matches_reference_mode() {
        let net = compiled(
            "colorset C = { a };\nplace P : C init 6`a;\nplace Q : C;\nplace R : C;\n\
             trans T1 { in P : 1`a; out Q : 1`a; }\n\
             trans T2 { in Q : 1`a; out R : 1`a; }\n\
             trans T3 { in P : 2`a; out R : 2`a; }\n",
        );
        let a = explore(&net, &Limits::default());
        let b = explore_with_threads(&net, &Limits::default(), 4);
        assert_eq!(a.node_count(), b.node_count());
        assert_eq!(a.arcs(), b.arcs());
        for n in 0..a.node_count() as u32 {
            assert_eq!(a.state(n), b.state(n));
        }
    }

    #[test]
    fn dot_export_labels_arcs_with_transition_names() {
        let net = compiled("colorset C = { a }; place P : C init 1`a; trans T { in P : 1`a; }");
        let graph = explore(&net, &Limits::default());
        let dot = to_dot(&net, &graph).unwrap();
        assert!(dot.contains("n0 -> n1 [label=\"T\"]"));
    }
}

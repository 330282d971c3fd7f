//! Shared generators, rule-instance synthesizers and the acceptance checks.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use opd_kernel::batch::kernelize_and_verify;
use opd_kernel::bounds::{f1, f2, f3, f4, f5, kernel_size_bound};
use opd_kernel::modulator::{
    avoidance_set, build_augmented, build_op_decomposition, compute_z, rule1_reduce_degree, rule2_remove_pendant,
    Avoidance, ComponentGraph, ProviderMode,
};
use opd_kernel::oracle::{has_minor, opd_exact, opd_exact_avoiding};
use opd_kernel::outerplanar::{is_outerplanar, MinorKind};
use opd_kernel::pipeline::{
    check_obstruction, generate_instance, kernelize, random_biconnected_outerplanar, single_step_minors, KernelConfig,
    Verdict,
};
use opd_kernel::protrusion::{
    check_fan, check_ladder, find_reducible_structure, rule3_irrelevant_edge, rule4_replace_component,
    rule5_contract_bump, rule6_fan, rule7_ladder, Mode,
};
use opd_kernel::tree_decomp::{decompose_outerplanar, expand_separator, lca_closure, mark_bags, RootedTree};
use opd_kernel::{replay_trace, Edge, Graph, Instance, Stage, Vertex, VertexSet};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Result of one acceptance criterion.
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: String) -> Self {
        Self { passed, detail }
    }
}

// ---------------------------------------------------------------- generators

/// Graph on `1..=n` whose edges are the set bits of `mask` in lexicographic pair order.
pub fn graph_from_mask(n: u32, mask: u64) -> Graph {
    let mut g = Graph::with_vertices(1..=n);
    let mut bit = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Erdős–Rényi graph on `labels`.
pub fn random_graph(rng: &mut Rng8, labels: &[Vertex], p: f64) -> Graph {
    let mut g = Graph::with_vertices(labels.iter().copied());
    for (i, &u) in labels.iter().enumerate() {
        for &v in &labels[i + 1..] {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random biconnected outerplanar graph on `labels` (in order of the
/// underlying polygon construction).
pub fn outerplanar_on(rng: &mut Rng8, labels: &[Vertex], drop_chord: f64) -> Graph {
    let base = random_biconnected_outerplanar(rng.random(), labels.len(), drop_chord);
    base.relabel(|v| labels[v as usize - 1])
}

/// Random connected outerplanar graph on `labels`: a biconnected one with
/// some edges removed while staying connected.
pub fn connected_outerplanar_on(rng: &mut Rng8, labels: &[Vertex], drop_chord: f64, drop_edge: f64) -> Graph {
    let mut g = outerplanar_on(rng, labels, drop_chord);
    let edges: Vec<Edge> = g.edges().collect();
    for (u, v) in edges {
        if rng.random_bool(drop_edge) {
            g.remove_edge(u, v).unwrap();
            if !g.is_connected() {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random outerplanar graph with arbitrary connectivity on `1..=n`.
pub fn random_outerplanar(rng: &mut Rng8, n: u32) -> Graph {
    let labels: Vec<Vertex> = (1..=n).collect();
    let drop_chord = rng.random_range(0.0..1.0);
    let mut g = outerplanar_on(rng, &labels, drop_chord);
    let edges: Vec<Edge> = g.edges().collect();
    let p = rng.random_range(0.0..0.4);
    for (u, v) in edges {
        if rng.random_bool(p) {
            g.remove_edge(u, v).unwrap();
        }
    }
    g
}

/// Adds the vertices and edges of `h` to `g`.
pub fn merge(g: &mut Graph, h: &Graph) {
    for v in h.vertices() {
        g.add_vertex(v);
    }
    for (u, v) in h.edges() {
        g.add_edge(u, v).unwrap();
    }
}

/// Random triangulated strip whose weak dual is a path; each new triangle
/// switches side with probability `switch` (low: long fans, high: zigzags).
/// Labels `1..=n`.
pub fn random_strip(rng: &mut Rng8, n: u32, switch: f64) -> Graph {
    let mut g = Graph::from_edges(&[(1, 2), (2, 3), (1, 3)]);
    let (mut u, mut v) = (2, 3);
    let mut keep_left = true;
    for w in 4..=n {
        g.add_edge(u, w).unwrap();
        g.add_edge(v, w).unwrap();
        if rng.random_bool(switch) {
            keep_left = !keep_left;
        }
        if keep_left {
            v = w;
        } else {
            u = w;
        }
    }
    g
}

// ---------------------------------------------------------------- oracle helpers

const ORACLE_CAP: usize = 8;

fn opd(g: &Graph) -> Result<usize, String> {
    opd_exact(g, ORACLE_CAP).exact().ok_or_else(|| format!("opd above {ORACLE_CAP}"))
}

/// Contract of one rule application from `(before, k)` to `after`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Contract {
    /// `opd` unchanged and budget unchanged.
    Equal,
    /// Equivalence, plus `opd(after) = opd(before) - (k - k')` when `opd(before) <= k`.
    Conditional,
}

pub fn check_application(before: &Graph, k: usize, after: &Instance, contract: Contract) -> Result<(), String> {
    let replayed = replay_trace(before, &after.trace).map_err(|e| format!("replay error: {e}"))?;
    if replayed != after.graph {
        return Err("trace replay mismatch".into());
    }
    let size = |g: &Graph| g.vertex_count() + g.edge_count();
    if size(&after.graph) >= size(before) {
        return Err("no strict size decrease".into());
    }
    let (a, b) = (opd(before)?, opd(&after.graph)?);
    match contract {
        Contract::Equal => {
            if a != b || after.k != k {
                return Err(format!("opd {a} -> {b}, budget {k} -> {}", after.k));
            }
        }
        Contract::Conditional => {
            if (a <= k) != (b <= after.k) {
                return Err(format!("not equivalent: opd {a} (k {k}) vs opd {b} (k {})", after.k));
            }
            if a <= k && a - b != k - after.k {
                return Err(format!("shift violated: opd {a} -> {b}, budget {k} -> {}", after.k));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- rule synthesizers

/// One synthesized and applied rule instance: the graph and budget before,
/// and the instance after.
pub struct Application {
    pub before: Graph,
    pub k: usize,
    pub after: Instance,
}

/// Two hubs sharing more than `k+3` components, optionally with a disjoint K4.
pub fn rule1_case(rng: &mut Rng8) -> Option<Application> {
    let k = rng.random_range(1..=2);
    let mut g = Graph::with_vertices([1, 2]);
    let mut next = 3;
    let shared = k + 4 + rng.random_range(0..=2);
    for _ in 0..shared {
        if next > 13 || rng.random_bool(0.6) {
            g.add_edge(1, next).unwrap();
            g.add_edge(2, next).unwrap();
            next += 1;
        } else {
            g.add_edge(1, next).unwrap();
            g.add_edge(next, next + 1).unwrap();
            g.add_edge(next + 1, 2).unwrap();
            if rng.random_bool(0.5) {
                g.add_edge(1, next + 1).unwrap();
            }
            next += 2;
        }
    }
    if k == 2 && next <= 13 && rng.random_bool(0.7) {
        let base = next;
        merge(&mut g, &Graph::complete(4).relabel(|v| v + base - 1));
        if rng.random_bool(0.5) {
            g.add_edge(base, *[1, 2].choose(rng).unwrap()).unwrap();
        }
    }
    let mut inst = Instance::new(g, k);
    let Stage::Ready(mut am) = build_augmented(&mut inst, ProviderMode::Exact).ok()? else {
        return None;
    };
    let before = inst.graph.clone();
    let k = inst.k;
    let mut work = Instance::new(before.clone(), k);
    rule1_reduce_degree(&mut work, &mut am).unwrap().then_some(Application { before, k, after: work })
}

/// Non-outerplanar core with an outerplanar piece hanging off one vertex
/// (or detached).
pub fn rule2_case(rng: &mut Rng8) -> Option<Application> {
    let h = rng.random_range(4..=7);
    let core: Vec<Vertex> = (1..=h).collect();
    let mut g = random_graph(rng, &core, 0.6);
    let m = rng.random_range(1..=8);
    let piece: Vec<Vertex> = (h + 1..=h + m).collect();
    let p = connected_outerplanar_on(rng, &piece, 0.5, 0.2);
    merge(&mut g, &p);
    let c: VertexSet = piece.iter().copied().collect();
    if !rng.random_bool(0.15) {
        let w = *core.choose(rng).unwrap();
        let a = rng.random_range(0..m as usize);
        g.add_edge(w, piece[a]).unwrap();
        if m > 1 && rng.random_bool(0.5) {
            g.add_edge(w, piece[(a + 1) % m as usize]).unwrap();
        }
    }
    if !is_outerplanar(&g.closure(&c)) {
        return None;
    }
    let k = opd(&g).ok()?;
    let mut inst = Instance::new(g.clone(), k);
    rule2_remove_pendant(&mut inst, &c).unwrap();
    Some(Application { before: g, k, after: inst })
}

/// Apex `x` of a K4 over a path component that also touches the K4 elsewhere.
pub fn rule3_case(rng: &mut Rng8) -> Option<Application> {
    let mut g = Graph::complete(4);
    let m = rng.random_range(6..=12);
    let path: Vec<Vertex> = (5..5 + m).collect();
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]).unwrap();
    }
    for &v in &path {
        if rng.random_bool(0.75) {
            g.add_edge(1, v).unwrap();
        }
    }
    g.add_edge(path[0], 2).unwrap();
    if rng.random_bool(0.5) {
        g.add_edge(*path.last().unwrap(), *[2, 3].choose(rng).unwrap()).unwrap();
    }
    if rng.random_bool(0.3) {
        let (a, b) = (rng.random_range(0..m as usize), rng.random_range(0..m as usize));
        let (a, b) = (path[a.min(b)], path[a.max(b)]);
        if b > a + 1 {
            g.add_edge(a, b).unwrap();
        }
    }
    let k = opd(&g).ok()? + rng.random_range(0..=1);
    let mut inst = Instance::new(g, k);
    let Stage::Ready(od) = build_op_decomposition(&mut inst, ProviderMode::Exact).ok()? else {
        return None;
    };
    let before = inst.graph.clone();
    let k = inst.k;
    for x in od.modulator.all() {
        for comp in od.components(&before) {
            let mut work = Instance::new(before.clone(), k);
            if rule3_irrelevant_edge(&mut work, &od, x, &comp).unwrap().is_some() {
                return Some(Application { before, k, after: work });
            }
        }
    }
    None
}

/// Random core with `1, 2` and an outerplanar piece `o` glued at `1, 2`.
/// `adjacent` selects whether `1` and `2` are adjacent.
fn glued_piece(rng: &mut Rng8, adjacent: bool) -> Option<(Graph, VertexSet)> {
    let h = rng.random_range(4..=7);
    let core: Vec<Vertex> = (1..=h).collect();
    let mut g = random_graph(rng, &core, 0.6);
    let m = rng.random_range(2..=9);
    let labels: Vec<Vertex> = (100..100 + m + 2).collect();
    let o = connected_outerplanar_on(rng, &labels, 0.5, 0.1);
    let mut pairs: Vec<(Vertex, Vertex)> = labels
        .iter()
        .flat_map(|&a| labels.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a < b && o.has_edge(a, b) == adjacent)
        .filter(|&(a, b)| o.without(&[a, b]).is_connected())
        .collect();
    pairs.shuffle(rng);
    let &(a, b) = pairs.first()?;
    let mut next = h + 1;
    let mut map = BTreeMap::new();
    for &v in &labels {
        let to = if v == a {
            1
        } else if v == b {
            2
        } else {
            next += 1;
            next - 1
        };
        map.insert(v, to);
    }
    let piece = o.relabel(|v| map[&v]);
    if adjacent {
        g.add_edge(1, 2).unwrap();
    } else if g.has_edge(1, 2) {
        g.remove_edge(1, 2).unwrap();
    }
    merge(&mut g, &piece);
    let c: VertexSet = (h + 1..next).collect();
    if g.neighborhood(&c) != VertexSet::from([1, 2]) {
        return None;
    }
    Some((g, c))
}

pub fn rule4_case(rng: &mut Rng8) -> Option<Application> {
    let (g, c) = glued_piece(rng, false)?;
    let k = opd(&g).ok()?;
    let mut inst = Instance::new(g.clone(), k);
    rule4_replace_component(&mut inst, &c).unwrap().then_some(Application { before: g, k, after: inst })
}

pub fn rule5_case(rng: &mut Rng8) -> Option<Application> {
    let (g, c) = glued_piece(rng, true)?;
    let k = opd(&g).ok()?;
    let mut inst = Instance::new(g.clone(), k);
    rule5_contract_bump(&mut inst, 1, 2, &c).unwrap().then_some(Application { before: g, k, after: inst })
}

/// Fan `x = 1` over an induced path from `2` to `3` with decorations, on a random core.
pub fn rule6_case(rng: &mut Rng8) -> Option<Application> {
    let r = rng.random_range(2..=5);
    let core: Vec<Vertex> = (1..=3 + r).collect();
    let mut g = random_graph(rng, &core, 0.5);
    if g.has_edge(2, 3) {
        g.remove_edge(2, 3).unwrap();
    }
    g.add_edge(1, 2).unwrap();
    g.add_edge(1, 3).unwrap();
    let mut next = 10;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut path = vec![2];
    let mut fan = vec![2];
    for i in 0..4 {
        for _ in 0..rng.random_range(0..=1) {
            path.push(fresh());
        }
        let v = if i == 3 { 3 } else { fresh() };
        path.push(v);
        fan.push(v);
    }
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]).unwrap();
    }
    for &v in &fan {
        g.add_edge(1, v).unwrap();
    }
    for w in path.windows(2) {
        if g.vertex_count() < 18 && rng.random_bool(0.3) {
            let d = fresh();
            g.add_edge(w[0], d).unwrap();
            g.add_edge(w[1], d).unwrap();
        }
    }
    let fan: [Vertex; 5] = fan.try_into().unwrap();
    check_fan(&g, 1, &fan, &path).ok()?;
    let k = opd(&g).ok()?;
    let mut inst = Instance::new(g.clone(), k);
    rule6_fan(&mut inst, 1, &fan, &path).unwrap();
    Some(Application { before: g, k, after: inst })
}

/// Seven-rung ladder `a_i = i`, `b_i = 7+i` with random diagonals, glued to a
/// random core at the end rungs.
pub fn rule7_case(rng: &mut Rng8) -> Option<Application> {
    let mut g = Graph::new();
    for i in 1..=7 {
        g.add_edge(i, 7 + i).unwrap();
        if i < 7 {
            g.add_edge(i, i + 1).unwrap();
            g.add_edge(7 + i, 8 + i).unwrap();
            match rng.random_range(0..3) {
                1 => g.add_edge(i, 8 + i).map(|_| ()).unwrap(),
                2 => g.add_edge(7 + i, i + 1).map(|_| ()).unwrap(),
                _ => {}
            }
        }
    }
    let r = rng.random_range(1..=5);
    let mut core = vec![1, 8, 7, 14];
    core.extend(15..15 + r);
    let extra = random_graph(rng, &core, 0.5);
    merge(&mut g, &extra);
    let es: [Edge; 7] = std::array::from_fn(|i| (i as Vertex + 1, i as Vertex + 8));
    check_ladder(&g, &es).ok()?;
    let k = opd(&g).ok()?;
    let mut inst = Instance::new(g.clone(), k);
    rule7_ladder(&mut inst, &es).unwrap();
    Some(Application { before: g, k, after: inst })
}

pub type Synth = fn(&mut Rng8) -> Option<Application>;

/// Every rule with its synthesizer and contract.
pub const RULES: [(&str, Synth, Contract); 7] = [
    ("rule 1 (degree reduction)", rule1_case, Contract::Conditional),
    ("rule 2 (pendant removal)", rule2_case, Contract::Equal),
    ("rule 3 (irrelevant edge)", rule3_case, Contract::Conditional),
    ("rule 4 (component replacement)", rule4_case, Contract::Equal),
    ("rule 5 (bump contraction)", rule5_case, Contract::Equal),
    ("rule 6 (fan edge)", rule6_case, Contract::Equal),
    ("rule 7 (ladder rung)", rule7_case, Contract::Equal),
];

/// Synthesizes up to `want` firing instances (within `attempts` tries) and
/// checks each. Returns `(checked, failures)`.
pub fn run_rule(synth: Synth, contract: Contract, seed: u64, want: usize, attempts: usize) -> (usize, Vec<String>) {
    let mut rng = rng(seed);
    let mut checked = 0;
    let mut failures = Vec::new();
    for attempt in 0..attempts {
        if checked == want {
            break;
        }
        let Some(app) = synth(&mut rng) else { continue };
        if app.before.vertex_count() > 20 {
            failures.push(format!("attempt {attempt}: instance has {} vertices", app.before.vertex_count()));
            continue;
        }
        checked += 1;
        if let Err(e) = check_application(&app.before, app.k, &app.after, contract) {
            failures.push(format!("attempt {attempt}: {e}; graph {:?}", app.before));
        }
    }
    (checked, failures)
}

// ---------------------------------------------------------------- criteria

pub const INSTANCES: usize = 500;

/// Recognition agrees with the minor characterization.
pub fn criterion_recognition() -> Outcome {
    let start = Instant::now();
    let agrees = |g: &Graph| is_outerplanar(g) == (!has_minor(g, MinorKind::K4) && !has_minor(g, MinorKind::K23));
    let mut graphs = 0usize;
    let mut mismatches = 0usize;
    for n in 0..=6u32 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            graphs += 1;
            mismatches += usize::from(!agrees(&graph_from_mask(n, mask)));
        }
    }
    let mut r = rng(1);
    for _ in 0..1000 {
        let n = r.random_range(1..=10u32);
        let p = r.random_range(0.1..0.7);
        let labels: Vec<Vertex> = (1..=n).collect();
        graphs += 1;
        mismatches += usize::from(!agrees(&random_graph(&mut r, &labels, p)));
    }
    let t = start.elapsed();
    Outcome::new(
        mismatches == 0 && t < Duration::from_secs(120),
        format!("{graphs} graphs, {mismatches} mismatches, {:.1}s", t.as_secs_f64()),
    )
}

/// Parameters of the end-to-end instance `i`.
pub fn end_to_end_params(i: u64) -> (u64, usize, usize, f64) {
    let n_base = 5 + (i as usize * 7) % 21;
    let k_apex = (i % 4) as usize;
    let p = if i.is_multiple_of(2) { 0.2 } else { 0.5 };
    (i, n_base, k_apex, p)
}

/// Kernelize plus oracle verification on generated instances.
pub fn criterion_end_to_end() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut fires = 0;
    let mut shrunk = 0;
    for i in 0..INSTANCES as u64 {
        let (seed, n, a, p) = end_to_end_params(i);
        let inst = generate_instance(seed, n, a, p);
        match kernelize_and_verify(&inst.graph, inst.k, KernelConfig::default()) {
            Ok((r, report)) => {
                fires += r.stats.fires.total();
                shrunk += usize::from(r.g_out.vertex_count() < inst.graph.vertex_count());
                if !report.passed() {
                    failures.push(format!("seed {seed}: {:?}", report.failures));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let t = start.elapsed();
    Outcome::new(
        failures.is_empty() && t < Duration::from_secs(600),
        format!(
            "{INSTANCES} instances, {} failures, {shrunk} shrunk, {fires} rule fires, {:.1}s{}",
            failures.len(),
            t.as_secs_f64(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

pub const PER_RULE: usize = 200;

/// Oracle-checked safeness of every rule.
pub fn criterion_rule_safeness() -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for (i, (name, synth, contract)) in RULES.iter().enumerate() {
        let (checked, failures) = run_rule(*synth, *contract, 1000 + i as u64, PER_RULE, 50 * PER_RULE);
        passed &= checked >= PER_RULE && failures.is_empty();
        parts.push(format!("{name}: {checked} checked, {} failures", failures.len()));
    }
    Outcome::new(passed, parts.join("; "))
}

pub const BOUND_INPUTS: usize = 1000;

/// Random rooted tree on `n` nodes with a random root.
pub fn random_tree(rng: &mut Rng8, n: usize) -> RootedTree {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.random_range(0..i), i)).collect();
    RootedTree::new(n, &edges, rng.random_range(0..n)).unwrap()
}

/// Components of `tree - m`, each with its neighbours in `m`.
pub fn tree_components(tree: &RootedTree, m: &BTreeSet<usize>) -> Vec<(Vec<usize>, BTreeSet<usize>)> {
    let n = tree.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || m.contains(&s) {
            continue;
        }
        seen[s] = true;
        let (mut comp, mut nb, mut stack) = (vec![], BTreeSet::new(), vec![s]);
        while let Some(a) = stack.pop() {
            comp.push(a);
            for b in tree.neighbors(a) {
                if m.contains(&b) {
                    nb.insert(b);
                } else if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        out.push((comp, nb));
    }
    out
}

/// Closure size, idempotence and two-neighbour property of the LCA closure.
pub fn prop_lca_basic(rng: &mut Rng8) -> Result<(), String> {
    let n = rng.random_range(1..=80);
    let tree = random_tree(rng, n);
    let s: BTreeSet<usize> = (0..rng.random_range(1..=n.min(12))).map(|_| rng.random_range(0..n)).collect();
    let m = lca_closure(&tree, &s);
    if !s.is_subset(&m) || m.len() > 2 * s.len() - 1 {
        return Err(format!("|S| = {}, |M| = {}", s.len(), m.len()));
    }
    if lca_closure(&tree, &m) != m {
        return Err("closure not idempotent".into());
    }
    for &a in &m {
        for &b in &m {
            if !m.contains(&tree.lca(a, b)) {
                return Err("closure misses a pairwise lca".into());
            }
        }
    }
    match tree_components(&tree, &m).iter().find(|(_, nb)| nb.len() > 2) {
        Some((_, nb)) => Err(format!("component with {} closure neighbours", nb.len())),
        None => Ok(()),
    }
}

/// Components outside the bags of an LCA-closed node set see at most `2·width` of them.
pub fn prop_lca_few_neighbors(rng: &mut Rng8) -> Result<(), String> {
    let n = rng.random_range(3..=60);
    let g = random_outerplanar(rng, n);
    let td = decompose_outerplanar(&g).map_err(|e| e.to_string())?;
    td.validate(&g).map_err(|e| e.to_string())?;
    let nodes = td.bags.len();
    let b: BTreeSet<usize> = (0..rng.random_range(1..=6)).map(|_| rng.random_range(0..nodes)).collect();
    let closed = lca_closure(&td.tree, &b);
    let m = mark_bags(&td, &closed).map_err(|e| e.to_string())?;
    let cap = 2 * td.width();
    for comp in g.components_avoiding(&m) {
        let nb = g.neighborhood(&comp).len();
        if nb > cap {
            return Err(format!("component sees {nb} > {cap} marked vertices"));
        }
    }
    Ok(())
}

/// Separator expansion: superset, at most six times larger, at most four neighbours per component.
pub fn prop_modulator_lca(rng: &mut Rng8) -> Result<(), String> {
    let n = rng.random_range(2..=80);
    let g = random_outerplanar(rng, n);
    let z: VertexSet = (0..rng.random_range(1..=8)).map(|_| rng.random_range(1..=n)).collect();
    let zp = expand_separator(&g, &z).map_err(|e| e.to_string())?;
    if !z.is_subset(&zp) || zp.len() > 6 * z.len() {
        return Err(format!("|Z| = {}, |Z'| = {}", z.len(), zp.len()));
    }
    for comp in g.components_avoiding(&zp) {
        let nb = g.neighborhood(&comp).len();
        if nb > 4 {
            return Err(format!("component with {nb} neighbours"));
        }
    }
    Ok(())
}

/// Bipartite outerplanar bound on component graphs of outerplanar hosts.
pub fn prop_outerplanar_bipartite(rng: &mut Rng8) -> Result<(), String> {
    let n = rng.random_range(3..=50);
    let g = random_outerplanar(rng, n);
    let p = rng.random_range(0.05..0.6);
    let x: VertexSet = g.vertices().filter(|_| rng.random_bool(p)).collect();
    let cg = ComponentGraph::build(&g, &x);
    let (y, e) = cg.rich_size();
    if y > 4 * x.len() || e > 10 * x.len() {
        return Err(format!("|X| = {}, |Y| = {y}, |E| = {e}", x.len()));
    }
    Ok(())
}

/// Components with two or more neighbours in `X ∪ Z` number at most `3s + 4|Z|`.
pub fn prop_decomposition_bounded(rng: &mut Rng8) -> Result<(), String> {
    let n_base = rng.random_range(4..=16);
    let apex = rng.random_range(0..=2);
    let inst = generate_instance(rng.random(), n_base, apex, rng.random_range(0.1..0.6));
    let mut work = Instance::new(inst.graph, inst.k);
    let Stage::Ready(am) = build_augmented(&mut work, ProviderMode::Exact).map_err(|e| e.to_string())? else {
        return Ok(());
    };
    let g = &work.graph;
    let x = am.all();
    let z: VertexSet = if rng.random_bool(0.5) {
        compute_z(g, work.k, &am).map_err(|e| e.to_string())?
    } else {
        g.vertices().filter(|v| !x.contains(v) && rng.random_bool(0.2)).collect()
    };
    let cg = ComponentGraph::build(g, &x);
    let s = (cg.modulator.len() + cg.components.len()).max(cg.edges.len());
    let xz: VertexSet = x.union(&z).copied().collect();
    let rich = g.components_avoiding(&xz).iter().filter(|c| g.neighborhood(*c).len() >= 2).count();
    if rich > 3 * s + 4 * z.len() {
        return Err(format!("{rich} components > 3·{s} + 4·{}", z.len()));
    }
    Ok(())
}

/// Avoidance sets: at most `3k` vertices avoiding `v`, or a refusal confirmed by the oracle.
pub fn prop_apx_undeletable(rng: &mut Rng8) -> Result<(), String> {
    let n = rng.random_range(3..=14);
    let mut g = random_outerplanar(rng, n);
    let v = n + 1;
    g.add_vertex(v);
    let p = rng.random_range(0.2..0.9);
    for u in 1..=n {
        if rng.random_bool(p) {
            g.add_edge(u, v).unwrap();
        }
    }
    let k = rng.random_range(0..=3);
    match avoidance_set(&g, v, k).map_err(|e| e.to_string())? {
        Avoidance::Set(s) => {
            if s.contains(&v) || s.len() > 3 * k || !is_outerplanar(&g.without(&s)) {
                return Err(format!("bad avoidance set of size {} for k = {k}", s.len()));
            }
        }
        Avoidance::Refused => {
            if opd_exact_avoiding(&g, v, k).map_err(|e| e.to_string())?.at_most(k) {
                return Err(format!("refused although a solution of size {k} avoids v"));
            }
        }
    }
    Ok(())
}

pub type Property = fn(&mut Rng8) -> Result<(), String>;

pub const PROPERTIES: [(&str, Property); 6] = [
    ("lca closure basics", prop_lca_basic),
    ("lca closure neighbours", prop_lca_few_neighbors),
    ("separator expansion", prop_modulator_lca),
    ("outerplanar bipartite", prop_outerplanar_bipartite),
    ("decomposition count", prop_decomposition_bounded),
    ("avoidance sets", prop_apx_undeletable),
];

/// Runs a property on `count` seeded inputs; returns the violations.
pub fn run_property(p: Property, seed: u64, count: usize) -> Vec<String> {
    let mut r = rng(seed);
    (0..count).filter_map(|i| p(&mut r).err().map(|e| format!("input {i}: {e}"))).collect()
}

pub fn criterion_structural_bounds() -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for (i, (name, p)) in PROPERTIES.iter().enumerate() {
        let violations = run_property(*p, 2000 + i as u64, BOUND_INPUTS);
        passed &= violations.is_empty();
        parts.push(format!("{name}: {BOUND_INPUTS} inputs, {} violations", violations.len()));
    }
    Outcome::new(passed, parts.join("; "))
}

/// Large graph `i` of the reducible-structure run with its terminals.
pub fn large_instance(i: u64) -> (Graph, VertexSet) {
    let mut r = rng(3000 + i);
    let n = r.random_range(6300..=10000u32);
    let g = match i % 3 {
        0 => random_biconnected_outerplanar(r.random(), n as usize, [0.0, 0.5, 0.9][(i / 3 % 3) as usize]),
        _ => random_strip(&mut r, n, if i.is_multiple_of(2) { 0.15 } else { 0.9 }),
    };
    let t: VertexSet = match i % 3 {
        // terminals at both ends of the strip so that the whole dual path is spanned
        2 => [1, n].into(),
        _ => (0..r.random_range(1..=4)).map(|_| r.random_range(1..=n)).collect(),
    };
    (g, t)
}

pub const LARGE_INSTANCES: u64 = 50;

pub fn criterion_reducible_totality() -> Outcome {
    let mut failures = Vec::new();
    let mut worst = Duration::ZERO;
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    for i in 0..LARGE_INSTANCES {
        let (g, t) = large_instance(i);
        let start = Instant::now();
        let found = find_reducible_structure(&g, &t);
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        match found {
            Ok(Some(s)) => {
                if let Err(e) = s.validate(&g, &t) {
                    failures.push(format!("graph {i}: invalid structure: {e}"));
                }
                *kinds.entry(structure_name(&s)).or_default() += 1;
            }
            Ok(None) => failures.push(format!("graph {i}: nothing found on {} vertices", g.vertex_count())),
            Err(e) => failures.push(format!("graph {i}: {e}")),
        }
        if elapsed >= Duration::from_secs(1) {
            failures.push(format!("graph {i}: {:.2}s", elapsed.as_secs_f64()));
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!(
            "{LARGE_INSTANCES} graphs, {} failures, worst {:.3}s, found {kinds:?}{}",
            failures.len(),
            worst.as_secs_f64(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

pub fn structure_name(s: &opd_kernel::protrusion::ReducibleStructure) -> &'static str {
    use opd_kernel::protrusion::ReducibleStructure::*;
    match s {
        SmallCutPair { .. } => "cut-pair",
        Ladder { .. } => "ladder",
        Fan { .. } => "fan",
    }
}

/// Formula regression plus the size bound on kernelize runs in every configuration.
pub fn criterion_formulas() -> Outcome {
    let mut failures = Vec::new();
    let expected: [(&str, u128, u128); 7] = [
        ("f1(40)", f1(40), 24800),
        ("f2(40)", f2(40), 7000),
        ("f3(40)", f3(40), 242400),
        ("f3(1)", f3(1), 678),
        ("f4(1,678)", f4(1, 678), 3396),
        ("f5(1,678)", f5(1, 678), 1_646_400),
        ("bound(c=1,k=0)", kernel_size_bound(1, 0), 2 * (25 * 6288 + 5) * 1_646_400 * 81),
    ];
    for (name, got, want) in expected {
        if got != want {
            failures.push(format!("{name} = {got}, expected {want}"));
        }
    }
    let configs = [
        KernelConfig::default(),
        KernelConfig { mode: Mode::Strict, provider: ProviderMode::Exact },
        KernelConfig { mode: Mode::Aggressive, provider: ProviderMode::Heuristic },
        KernelConfig { mode: Mode::Strict, provider: ProviderMode::Heuristic },
    ];
    let mut runs = 0;
    for i in 0..INSTANCES as u64 {
        let (seed, n, a, p) = end_to_end_params(i);
        let inst = generate_instance(seed, n, a, p);
        let config = configs[i as usize % configs.len()];
        let r = match kernelize(&inst.graph, inst.k, config) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        runs += 1;
        let bound = kernel_size_bound(config.provider.c() as u128, r.k_out as u128);
        if r.g_out.vertex_count() as u128 > bound || r.g_out.edge_count() as u128 > bound {
            failures.push(format!("seed {seed}: output exceeds {bound}"));
        }
    }
    Outcome::new(
        failures.is_empty(),
        format!("7 constants, {runs} kernelize runs size-checked, {} failures", failures.len()),
    )
}

/// Greedily descends through single-step minors keeping `opd > k`; the end
/// point is minor-minimal.
pub fn minimize_obstruction(mut g: Graph, k: usize) -> Graph {
    loop {
        let next = single_step_minors(&g).find(|h| !opd_exact(h, k).at_most(k));
        match next {
            Some(h) => g = h,
            None => return g,
        }
    }
}

/// Canonical form by exhaustive relabeling (small graphs only).
pub fn canonical(g: &Graph) -> Vec<(u32, u32)> {
    fn permutations(n: usize) -> Vec<Vec<u32>> {
        let mut out = vec![];
        let mut p: Vec<u32> = (0..n as u32).collect();
        heap(n, &mut p, &mut out);
        out
    }
    fn heap(k: usize, p: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    let vs: Vec<Vertex> = g.vertices().collect();
    let idx = |v: Vertex| vs.binary_search(&v).unwrap();
    permutations(vs.len())
        .into_iter()
        .map(|perm| {
            let mut es: Vec<(u32, u32)> = g
                .edges()
                .map(|(u, v)| {
                    let (a, b) = (perm[idx(u)], perm[idx(v)]);
                    (a.min(b), a.max(b))
                })
                .collect();
            es.sort_unstable();
            es
        })
        .min()
        .unwrap_or_default()
}

/// Descriptive name for the small obstructions the harness tends to find.
pub fn obstruction_name(g: &Graph) -> String {
    let k4 = Graph::complete(4);
    let k23 = Graph::complete_bipartite(2, 3);
    let known = [
        ("K5", Graph::complete(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("2K4", k4.disjoint_union(&k4)),
        ("K4+K2,3", k4.disjoint_union(&k23)),
        ("2K2,3", k23.disjoint_union(&k23)),
    ];
    let c = canonical(g);
    known
        .iter()
        .find(|(_, h)| h.vertex_count() == g.vertex_count() && canonical(h) == c)
        .map(|(name, _)| name.to_string())
        .unwrap_or_else(|| {
            let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
            deg.sort_unstable_by(|a, b| b.cmp(a));
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            format!("n{}m{}deg{deg:?} [{}]", g.vertex_count(), g.edge_count(), edges.join(" "))
        })
}

/// Minor-minimal graphs with `opd = 2` reached from seeded starting graphs.
pub fn find_budget_one_obstructions(starts: usize) -> Vec<Graph> {
    let k4 = Graph::complete(4);
    let k23 = Graph::complete_bipartite(2, 3);
    let mut seeds: Vec<Graph> = vec![
        Graph::complete(5),
        Graph::complete_bipartite(3, 3),
        k4.disjoint_union(&k4),
        k4.disjoint_union(&k23),
        k23.disjoint_union(&k23),
    ];
    let mut r = rng(4000);
    while seeds.len() < starts {
        let n = r.random_range(6..=9u32);
        let labels: Vec<Vertex> = (1..=n).collect();
        let p = r.random_range(0.4..0.8);
        let g = random_graph(&mut r, &labels, p);
        if !opd_exact(&g, 1).at_most(1) {
            seeds.push(g);
        }
    }
    let mut found: BTreeMap<Vec<(u32, u32)>, Graph> = BTreeMap::new();
    for g in seeds {
        let h = minimize_obstruction(g, 1);
        let h = h.without(&h.vertices().filter(|&v| h.degree(v) == 0).collect::<Vec<_>>());
        found.entry(canonical(&h)).or_insert(h);
    }
    found.into_values().collect()
}

pub fn criterion_obstructions() -> Outcome {
    let base = check_obstruction(&Graph::complete(4), 0) == Ok(true)
        && check_obstruction(&Graph::complete_bipartite(2, 3), 0) == Ok(true);
    let found = find_budget_one_obstructions(40);
    let bound = kernel_size_bound(ProviderMode::Exact.c() as u128, 1);
    let mut ok = base;
    let mut names = Vec::new();
    for h in &found {
        let verified = check_obstruction(h, 1) == Ok(true) && opd_exact(h, 2).exact() == Some(2);
        let small = (h.vertex_count() as u128) <= bound && (h.edge_count() as u128) <= bound;
        ok &= verified && small;
        names.push(obstruction_name(h));
    }
    Outcome::new(
        ok,
        format!("K4 and K2,3 at k=0: {base}; k=1 minor-minimal graphs found: {}", names.join(", ")),
    )
}

/// Shorthand used by the per-criterion test files.
pub fn assert_outcome(o: Outcome) {
    assert!(o.passed, "{}", o.detail);
}

/// Budget-zero verdict of an obstruction input, used by kernel tests.
pub fn trivially_no(v: Verdict) -> bool {
    matches!(v, Verdict::TriviallyNo(_))
}

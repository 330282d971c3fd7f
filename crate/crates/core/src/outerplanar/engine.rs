//! Series elimination on one biconnected block.
//!
//! A vertex with exactly two distinct live neighbours `a`, `b` is removed and
//! replaced by a virtual piece on the pair `ab`. A biconnected block is
//! outerplanar iff this never overloads a pair and ends with two vertices;
//! the surviving pieces then unfold into the Hamiltonian cycle.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::compact::NONE;

#[derive(Clone, Copy, Debug)]
struct Piece {
    a: u32,
    b: u32,
    mid: u32,
    /// Piece standing for the `a`-`mid` side, or `NONE` for the real edge.
    side_a: u32,
    side_b: u32,
}

#[derive(Clone, Copy, Debug, Default)]
struct Pair {
    real: bool,
    pieces: [u32; 2],
    count: u8,
}

fn key(u: u32, w: u32) -> u64 {
    let (a, b) = if u < w { (u, w) } else { (w, u) };
    (u64::from(a) << 32) | u64::from(b)
}

/// Hamiltonian cycle of a biconnected block on local vertices `0..n`
/// (`n >= 3`), or `None` when the block is not outerplanar.
pub(crate) fn block_cycle(n: usize, edges: &[(u32, u32)]) -> Option<Vec<u32>> {
    if edges.len() > 2 * n - 3 {
        return None;
    }
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut pairs: HashMap<u64, Pair> = HashMap::with_capacity(2 * edges.len());
    for &(u, w) in edges {
        adj[u as usize].push(w);
        adj[w as usize].push(u);
        pairs.entry(key(u, w)).or_default().real = true;
    }
    let mut heap: BinaryHeap<Reverse<u32>> =
        (0..n as u32).filter(|&v| adj[v as usize].len() == 2).map(Reverse).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut pieces: Vec<Piece> = Vec::with_capacity(n);
    while remaining > 2 {
        let v = loop {
            let Reverse(v) = heap.pop()?;
            if alive[v as usize] && adj[v as usize].len() == 2 {
                break v;
            }
        };
        let (a, b) = (adj[v as usize][0], adj[v as usize][1]);
        let side = |pairs: &HashMap<u64, Pair>, x: u32| -> Option<u32> {
            let p = pairs[&key(x, v)];
            match p.count {
                0 => Some(NONE),
                1 => Some(p.pieces[0]),
                _ => None,
            }
        };
        let side_a = side(&pairs, a)?;
        let side_b = side(&pairs, b)?;
        alive[v as usize] = false;
        remaining -= 1;
        let id = pieces.len() as u32;
        pieces.push(Piece { a, b, mid: v, side_a, side_b });
        let pair = pairs.entry(key(a, b)).or_default();
        if pair.count == 2 || (pair.count == 1 && remaining > 2) {
            return None;
        }
        pair.pieces[pair.count as usize] = id;
        pair.count += 1;
        for (x, y) in [(a, b), (b, a)] {
            let list = &mut adj[x as usize];
            list.retain(|&w| w != v);
            if !list.contains(&y) {
                list.push(y);
            }
            if list.len() == 2 {
                heap.push(Reverse(x));
            }
        }
    }
    let ends: Vec<u32> = (0..n as u32).filter(|&v| alive[v as usize]).collect();
    let (a, b) = (ends[0], ends[1]);
    let last = pairs.get(&key(a, b)).copied().unwrap_or_default();
    let mut cycle = vec![a];
    match (last.count, last.real) {
        (2, _) => {
            walk(&pieces, last.pieces[0], a, &mut cycle);
            walk(&pieces, last.pieces[1], b, &mut cycle);
            cycle.pop();
        }
        (1, true) => walk(&pieces, last.pieces[0], a, &mut cycle),
        _ => return None,
    }
    (cycle.len() == n).then_some(cycle)
}

/// Appends the vertices of piece `pid` from `from` (exclusive) to its other
/// end (inclusive).
fn walk(pieces: &[Piece], pid: u32, from: u32, out: &mut Vec<u32>) {
    enum Task {
        Piece(u32, u32),
        Side(u32, u32, u32),
    }
    let mut stack = vec![Task::Piece(pid, from)];
    while let Some(task) = stack.pop() {
        match task {
            Task::Side(q, x, y) => {
                if q == NONE {
                    out.push(y);
                } else {
                    stack.push(Task::Piece(q, x));
                }
            }
            Task::Piece(q, x) => {
                let p = pieces[q as usize];
                if x == p.a {
                    stack.push(Task::Side(p.side_b, p.mid, p.b));
                    stack.push(Task::Side(p.side_a, p.a, p.mid));
                } else {
                    stack.push(Task::Side(p.side_a, p.mid, p.a));
                    stack.push(Task::Side(p.side_b, p.b, p.mid));
                }
            }
        }
    }
}

//! Splitting a regular complex of even degree into 2-factors.

use super::euler::euler_circuit;
use super::{Dart, Graph1, GraphError};

/// Partition of the segments into `r` spanning subcomplexes in which every
/// point has order 2. Each factor is a sorted list of segment indices.
pub fn petersen_2_factorization(g: &Graph1) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = g.n_points();
    if n == 0 {
        return Ok(Vec::new());
    }
    let deg = g.order(0);
    for p in 0..n {
        let d = g.order(p);
        if d != deg {
            return Err(GraphError::NotRegular {
                point: p,
                order: d,
                expected: deg,
            });
        }
    }
    if deg % 2 == 1 {
        return Err(GraphError::OddDegree(deg));
    }
    let r = deg / 2;
    let mut factors = match r {
        0 => Vec::new(),
        1 => vec![(0..g.n_segments()).collect()],
        2 => alternate(g),
        _ => by_matchings(g, r),
    };
    for f in &mut factors {
        f.sort_unstable();
    }
    Ok(factors)
}

/// Closed Euler tours of each component.
fn tours(g: &Graph1) -> Vec<Vec<Dart>> {
    let mut done = vec![false; g.n_points()];
    let mut out = Vec::new();
    for p in 0..g.n_points() {
        if done[p] {
            continue;
        }
        let comp = g.component(p);
        let keep: Vec<usize> = (0..g.n_segments()).filter(|&s| comp[g.endpoints(s).0]).collect();
        let sub = Graph1::new(g.n_points(), keep.iter().map(|&s| g.endpoints(s)).collect()).expect("same points");
        let tour = euler_circuit(&sub, p)
            .into_iter()
            .map(|d| Dart { seg: keep[d.seg], rev: d.rev })
            .collect();
        out.push(tour);
        for (q, &c) in comp.iter().enumerate() {
            done[q] |= c;
        }
    }
    out
}

/// Degree 4: alternate along each Euler tour. A tour through a component
/// with `m` points has `2m` segments, so alternation closes up consistently.
fn alternate(g: &Graph1) -> Vec<Vec<usize>> {
    let mut f = vec![Vec::new(), Vec::new()];
    for tour in tours(g) {
        for (i, d) in tour.iter().enumerate() {
            f[i % 2].push(d.seg);
        }
    }
    f
}

/// Orient along Euler tours so every point has `r` outgoing and `r`
/// incoming segments, then peel off perfect matchings of the bipartite
/// out/in graph one at a time.
fn by_matchings(g: &Graph1, r: usize) -> Vec<Vec<usize>> {
    let n = g.n_points();
    // arcs[s] = (tail, head) in the chosen orientation
    let mut arcs = vec![(0, 0); g.n_segments()];
    for tour in tours(g) {
        for d in tour {
            arcs[d.seg] = (g.tail(d), g.head(d));
        }
    }
    let mut alive = vec![true; g.n_segments()];
    let mut factors = Vec::with_capacity(r);
    for _ in 0..r {
        let mut adj = vec![Vec::new(); n];
        for (s, &(a, _)) in arcs.iter().enumerate() {
            if alive[s] {
                adj[a].push(s);
            }
        }
        let matching = perfect_matching(n, &adj, &arcs);
        for &s in &matching {
            alive[s] = false;
        }
        factors.push(matching);
    }
    factors
}

/// Kuhn's augmenting paths. Regular bipartite multigraphs always have a
/// perfect matching.
fn perfect_matching(n: usize, adj: &[Vec<usize>], arcs: &[(usize, usize)]) -> Vec<usize> {
    // match_in[head] = arc currently matched into head
    let mut match_in: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut seen = vec![false; n];
        let ok = augment(u, adj, arcs, &mut match_in, &mut seen);
        assert!(ok, "regular bipartite graph has a perfect matching");
    }
    match_in.into_iter().map(|s| s.expect("perfect")).collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    arcs: &[(usize, usize)],
    match_in: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &s in &adj[u] {
        let v = arcs[s].1;
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match match_in[v] {
            None => true,
            Some(t) => augment(arcs[t].0, adj, arcs, match_in, seen),
        };
        if free {
            match_in[v] = Some(s);
            return true;
        }
    }
    false
}

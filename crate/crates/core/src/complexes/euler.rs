//! Euler trails by Hierholzer's algorithm. Odd points are paired up by
//! virtual segments; one closed tour of the augmented complex then splits at
//! the virtual segments into `#odd / 2` trails.

use super::{Dart, Graph1, GraphError, GraphPath};

/// Closed tour through every segment of a connected complex whose points
/// all have even order, starting at `start`.
pub(crate) fn euler_circuit(g: &Graph1, start: usize) -> Vec<Dart> {
    let adj = g.darts_at();
    let mut used = vec![false; g.n_segments()];
    let mut next = vec![0usize; g.n_points()];
    // stack of (point, dart used to arrive)
    let mut stack: Vec<(usize, Option<Dart>)> = vec![(start, None)];
    let mut circuit = Vec::new();
    while let Some(&(v, via)) = stack.last() {
        let mut advanced = false;
        while next[v] < adj[v].len() {
            let d = adj[v][next[v]];
            next[v] += 1;
            if !used[d.seg] {
                used[d.seg] = true;
                stack.push((g.head(d), Some(d)));
                advanced = true;
                break;
            }
        }
        if !advanced {
            stack.pop();
            if let Some(d) = via {
                circuit.push(d);
            }
        }
    }
    circuit.reverse();
    circuit
}

/// `max(1, #odd / 2)` trails using every segment exactly once.
pub fn euler_trails(g: &Graph1) -> Result<Vec<GraphPath>, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.n_points() == 0 {
        return Ok(Vec::new());
    }
    let odd: Vec<usize> = (0..g.n_points()).filter(|&p| g.order(p) % 2 == 1).collect();
    if odd.is_empty() {
        return Ok(vec![GraphPath {
            start: 0,
            darts: euler_circuit(g, 0),
        }]);
    }
    let real = g.n_segments();
    let mut segs = g.segments().to_vec();
    for pair in odd.chunks(2) {
        segs.push((pair[0], pair[1]));
    }
    let aug = Graph1::new(g.n_points(), segs)?;
    let circuit = euler_circuit(&aug, odd[0]);
    // rotate so the tour begins right after a virtual segment
    let cut = circuit.iter().position(|d| d.seg >= real).expect("virtual segment present");
    let rotated: Vec<Dart> = circuit[cut + 1..].iter().chain(&circuit[..=cut]).copied().collect();
    let mut trails = Vec::new();
    let mut cur = GraphPath {
        start: aug.tail(rotated[0]),
        darts: Vec::new(),
    };
    for d in rotated {
        if d.seg >= real {
            let start = aug.head(d);
            trails.push(std::mem::replace(&mut cur, GraphPath { start, darts: Vec::new() }));
        } else {
            cur.darts.push(d);
        }
    }
    Ok(trails)
}

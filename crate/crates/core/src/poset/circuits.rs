//! Positivity of subposets via simple cycles of the comparability graph.

use super::{labels_of, Poset, SubposetRelation};

/// Whether `q` is a positive subposet of `p`: on every simple cycle (length
/// at least 3) of the comparability graph of `p`, all down-edges lie in `q`
/// exactly when all up-edges do.
pub fn is_positive_subposet(p: &Poset, q: &SubposetRelation) -> bool {
    let adj = p.comparability();
    let n = p.n();
    let mut path = Vec::with_capacity(n);
    // Cycles are rooted at their least vertex to bound the search.
    for start in 0..n {
        path.push(start);
        let ok = walk(p, q, &adj, start, 1 << start, &mut path);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn walk(p: &Poset, q: &SubposetRelation, adj: &[u64], start: usize, visited: u64, path: &mut Vec<usize>) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= 3 && adj[last] & (1 << start) != 0 && !cycle_ok(p, q, path) {
        return false;
    }
    for next in labels_of(adj[last]) {
        let v = next as usize - 1;
        if v <= start || visited & (1 << v) != 0 {
            continue;
        }
        path.push(v);
        let ok = walk(p, q, adj, start, visited | 1 << v, path);
        path.pop();
        if !ok {
            return false;
        }
    }
    true
}

fn cycle_ok(p: &Poset, q: &SubposetRelation, cycle: &[usize]) -> bool {
    let mut ups_in = true;
    let mut downs_in = true;
    for k in 0..cycle.len() {
        let a = cycle[k] as u32 + 1;
        let b = cycle[(k + 1) % cycle.len()] as u32 + 1;
        if p.less(a, b) {
            ups_in &= q.contains(a, b);
        } else {
            downs_in &= q.contains(b, a);
        }
    }
    ups_in == downs_in
}

//! Canonical forms by brute force over invariant-respecting relabelings, and
//! exhaustive generation of isomorphism classes.

use std::collections::BTreeMap;

use super::{Mask, Poset};
use crate::error::{Error, Result};

pub const MAX_CANONICAL_N: usize = 8;
pub const MAX_GENERATED_N: usize = 7;

struct Search<'a> {
    p: &'a Poset,
    /// Vertices (0-based) grouped into cells of equal invariant, cells in key order.
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn encode(&self) -> u64 {
        let n = self.order.len();
        let mut code = 0u64;
        for a in 0..n {
            let below = self.p.below_masks()[self.order[a]];
            for b in 0..n {
                code <<= 1;
                if below & (1 << self.order[b]) != 0 {
                    code |= 1;
                }
            }
        }
        code
    }

    fn run(&mut self, cell: usize, within: usize) {
        if cell == self.cells.len() {
            let code = self.encode();
            if self.best.as_ref().is_none_or(|(c, _)| code < *c) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        if within == self.cells[cell].len() {
            self.run(cell + 1, 0);
            return;
        }
        for k in 0..self.cells[cell].len() {
            let v = self.cells[cell][k];
            if !self.used[v] {
                self.used[v] = true;
                self.order.push(v);
                self.run(cell, within + 1);
                self.order.pop();
                self.used[v] = false;
            }
        }
    }
}

fn vertex_keys(p: &Poset) -> Vec<(u32, u32)> {
    (1..=p.n() as u32)
        .map(|v| (p.below(v).count_ones(), p.above(v).count_ones()))
        .collect()
}

/// Sorted vertex keys, best matrix code, and the relabeling achieving it.
type Best = (Vec<(u32, u32)>, u64, Vec<usize>);

fn search(p: &Poset) -> Result<Best> {
    if p.n() > MAX_CANONICAL_N {
        return Err(Error::Size { what: "canonical form", got: p.n(), max: MAX_CANONICAL_N });
    }
    let keys = vertex_keys(p);
    let mut by_key: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (v, k) in keys.iter().enumerate() {
        by_key.entry(*k).or_default().push(v);
    }
    let mut sorted_keys = keys.clone();
    sorted_keys.sort_unstable();
    let mut s = Search {
        p,
        cells: by_key.into_values().collect(),
        order: Vec::with_capacity(p.n()),
        used: vec![false; p.n()],
        best: None,
    };
    s.run(0, 0);
    let (code, order) = s.best.unwrap_or((0, Vec::new()));
    Ok((sorted_keys, code, order))
}

/// A byte string equal for isomorphic posets and distinct otherwise.
pub fn canonical_form(p: &Poset) -> Result<Vec<u8>> {
    let (keys, code, _) = search(p)?;
    let mut out = vec![p.n() as u8];
    for (d, u) in keys {
        out.push(d as u8);
        out.push(u as u8);
    }
    out.extend_from_slice(&code.to_be_bytes());
    Ok(out)
}

/// The isomorphic copy whose relation matrix realises the canonical form.
pub fn canonical_representative(p: &Poset) -> Result<Poset> {
    let (_, _, order) = search(p)?;
    let mut perm = vec![0u32; p.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos as u32 + 1;
    }
    Ok(p.relabel(&perm))
}

/// One representative per isomorphism class of posets on `n` elements,
/// ordered by canonical form.
pub fn all_posets(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_GENERATED_N {
        return Err(Error::Size { what: "poset generation", got: n, max: MAX_GENERATED_N });
    }
    let mut level = vec![Poset::empty()];
    for _ in 0..n {
        let mut next: BTreeMap<Vec<u8>, Poset> = BTreeMap::new();
        for p in &level {
            // Every poset arises from a smaller one by adding a maximal
            // element whose down-set is an ideal.
            let full = p.full();
            let mut sub: Mask = full;
            loop {
                if p.is_ideal_mask(sub) {
                    let mut below = p.below_masks().to_vec();
                    below.push(sub);
                    let q = Poset::from_closed_below(below);
                    let key = canonical_form(&q)?;
                    if let std::collections::btree_map::Entry::Vacant(e) = next.entry(key) {
                        e.insert(canonical_representative(&q)?);
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & full;
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

use super::{labels_of, Mask, Poset};

/// All linear extensions `(i_1, ..., i_n)` in lexicographic order.
pub fn linear_extensions(p: &Poset) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p.n());
    extend(p, 0, &mut current, &mut out);
    out
}

fn available(p: &Poset, placed: Mask) -> Vec<u32> {
    labels_of(p.full() & !placed)
        .into_iter()
        .filter(|&v| p.below(v) & !placed == 0)
        .collect()
}

fn extend(p: &Poset, placed: Mask, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if placed == p.full() {
        out.push(current.clone());
        return;
    }
    for v in available(p, placed) {
        current.push(v);
        extend(p, placed | 1 << (v - 1), current, out);
        current.pop();
    }
}

pub(crate) fn first_linear_extension(p: &Poset) -> Vec<u32> {
    let mut placed = 0;
    let mut out = Vec::with_capacity(p.n());
    while placed != p.full() {
        let v = available(p, placed)[0];
        placed |= 1 << (v - 1);
        out.push(v);
    }
    out
}

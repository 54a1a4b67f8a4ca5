use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;

use super::{QPoly, QSymFunction};

/// A polynomial in `x_1, ..., x_m` with `ℤ[q]` coefficients, keyed by exponent
/// vectors of length `m`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TruncatedExpansion {
    m: usize,
    monomials: BTreeMap<Vec<u32>, QPoly>,
}

impl TruncatedExpansion {
    pub fn new(m: usize) -> Self {
        Self { m, monomials: BTreeMap::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn add(&mut self, exponents: Vec<u32>, coeff: &QPoly) {
        debug_assert_eq!(exponents.len(), self.m);
        if coeff.is_zero() {
            return;
        }
        let slot = self.monomials.entry(exponents).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.monomials.retain(|_, c| !c.is_zero());
        }
    }

    /// Adds `coeff · x_{values[0]} ⋯ x_{values[k-1]}` (values 1-based).
    pub fn add_word(&mut self, values: &[u32], coeff: &QPoly) {
        let mut exps = vec![0; self.m];
        for &v in values {
            exps[v as usize - 1] += 1;
        }
        self.add(exps, coeff);
    }

    pub fn merge(mut self, other: Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        let (mut big, small) = if self.monomials.len() >= other.monomials.len() {
            (std::mem::take(&mut self), other)
        } else {
            (other, self)
        };
        for (e, c) in small.monomials {
            big.add(e, &c);
        }
        big
    }

    pub fn get(&self, exponents: &[u32]) -> QPoly {
        self.monomials.get(exponents).cloned().unwrap_or_default()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Vec<u32>, &QPoly)> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Expands every `M_α` over `i_1 < ... < i_k ≤ m`.
    pub fn from_qsym(f: &QSymFunction, m: usize) -> Self {
        let mut out = Self::new(m);
        for (alpha, c) in f.terms() {
            for idx in (0..m).combinations(alpha.len()) {
                let mut exps = vec![0; m];
                for (&i, &part) in idx.iter().zip(alpha.parts()) {
                    exps[i] = part;
                }
                out.add(exps, c);
            }
        }
        out
    }
}

impl Mul for &TruncatedExpansion {
    type Output = TruncatedExpansion;
    fn mul(self, rhs: &TruncatedExpansion) -> TruncatedExpansion {
        assert_eq!(self.m, rhs.m);
        let mut out = TruncatedExpansion::new(self.m);
        for (a, ca) in &self.monomials {
            for (b, cb) in &rhs.monomials {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add(e, &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Debug for TruncatedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `c*x1^2*x2 + ...`, monomials in exponent-vector order.
impl fmt::Display for TruncatedExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let rendered = self.monomials.iter().map(|(e, c)| {
            let vars = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .join("*");
            let vars = if vars.is_empty() { "1".to_string() } else { vars };
            if *c == QPoly::one() {
                vars
            } else {
                format!("({c})*{vars}")
            }
        });
        write!(f, "{}", rendered.format(" + "))
    }
}

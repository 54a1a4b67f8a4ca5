use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Composition, QPoly, TruncatedExpansion};

/// An element of `QSym ⊗ ℤ[q]`, stored in the monomial basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSymFunction {
    terms: BTreeMap<Composition, QPoly>,
}

/// `M_a · M_b` as a multiset of compositions (quasi-shuffles of `a` and `b`).
fn quasi_shuffles(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, u64>) {
    match (a.split_first(), b.split_first()) {
        (None, None) => *out.entry(prefix.clone()).or_default() += 1,
        (Some((&x, ra)), None) | (None, Some((&x, ra))) => {
            prefix.push(x);
            quasi_shuffles(ra, &[], prefix, out);
            prefix.pop();
        }
        (Some((&x, ra)), Some((&y, rb))) => {
            prefix.push(x);
            quasi_shuffles(ra, b, prefix, out);
            prefix.pop();
            prefix.push(y);
            quasi_shuffles(a, rb, prefix, out);
            prefix.pop();
            prefix.push(x + y);
            quasi_shuffles(ra, rb, prefix, out);
            prefix.pop();
        }
    }
}

/// `binom(m, k)` for any integer `m`, via the falling factorial.
pub fn binomial(m: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

impl QSymFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `M_∅`.
    pub fn one() -> Self {
        Self::monomial(Composition::empty())
    }

    pub fn monomial(alpha: Composition) -> Self {
        Self::term(alpha, QPoly::one())
    }

    pub fn term(alpha: Composition, coeff: QPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(alpha, &coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Composition, QPoly)>) -> Self {
        let mut out = Self::zero();
        for (alpha, c) in terms {
            out.add_term(alpha, &c);
        }
        out
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Composition) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weights present among the terms.
    pub fn weights(&self) -> BTreeSet<u32> {
        self.terms.keys().map(Composition::weight).collect()
    }

    fn map_terms(&self, f: impl Fn(&Composition, &QPoly) -> (Composition, QPoly)) -> Self {
        Self::from_terms(self.terms.iter().map(|(a, c)| f(a, c)))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> Self {
        self.map_terms(|a, x| (a.clone(), x * c))
    }

    /// Quasi-shuffle product, bilinear over `ℤ[q]`.
    pub fn quasi_shuffle(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca * cb;
                let mut shuffles = BTreeMap::new();
                quasi_shuffles(a.parts(), b.parts(), &mut Vec::new(), &mut shuffles);
                for (gamma, mult) in shuffles {
                    out.add_term(Composition::new(gamma), &coeff.scale(&BigInt::from(mult)));
                }
            }
        }
        out
    }

    /// `k`-th quasi-shuffle power.
    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.quasi_shuffle(self))
    }

    /// Concatenation product `M_α ∘ M_β = M_{α·β}`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), &(ca * cb));
            }
        }
        out
    }

    /// `(F)_i`: `M_α ↦ M_{(α, i)}`.
    pub fn append(&self, part: u32) -> Self {
        self.map_terms(|a, c| (a.append(part), c.clone()))
    }

    /// Deconcatenation coproduct.
    pub fn coproduct(&self) -> Tensor {
        let mut out = Tensor::zero();
        for (a, c) in &self.terms {
            for i in 0..=a.len() {
                let (l, r) = a.split_at(i);
                out.add_term(l, r, c);
            }
        }
        out
    }

    /// `S(M_α) = (-1)^{k(α)} Σ_{β coarsening rev(α)} M_β`.
    pub fn antipode(&self) -> Self {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            let signed = if a.len() % 2 == 0 { c.clone() } else { -c };
            for beta in a.reverse().coarsenings() {
                out.add_term(beta, &signed);
            }
        }
        out
    }

    /// `L_α = Σ_{α ⪯ β} M_β`.
    pub fn fundamental(alpha: &Composition) -> Self {
        Self::from_terms(alpha.refinements().into_iter().map(|b| (b, QPoly::one())))
    }

    /// Expands a combination of fundamental functions into the monomial basis.
    pub fn from_fundamental(coeffs: &BTreeMap<Composition, QPoly>) -> Self {
        let mut out = Self::zero();
        for (alpha, c) in coeffs {
            for beta in alpha.refinements() {
                out.add_term(beta, c);
            }
        }
        out
    }

    /// Coefficients in the fundamental basis, by Möbius inversion of the
    /// refinement order: `M_α = Σ_{α ⪯ β} (-1)^{k(β) - k(α)} L_β`.
    pub fn to_fundamental(&self) -> BTreeMap<Composition, QPoly> {
        let mut out: BTreeMap<Composition, QPoly> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            for beta in alpha.refinements() {
                let slot = out.entry(beta.clone()).or_default();
                if (beta.len() - alpha.len()) % 2 == 0 {
                    *slot += c;
                } else {
                    *slot -= c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `ps¹(F)(m) = Σ c_α · binom(m, k(α))`.
    pub fn principal_specialization(&self, m: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (a, c) in &self.terms {
            out += &c.scale(&binomial(m, a.len()));
        }
        out
    }

    /// Substitutes `q ↦ factor · q` in every coefficient.
    pub fn scale_q(&self, factor: i64) -> Self {
        self.map_terms(|a, c| (a.clone(), c.scale_q(factor)))
    }

    /// The `q = 0` part.
    pub fn at_q_zero(&self) -> Self {
        self.map_terms(|a, c| (a.clone(), QPoly::from_big(vec![c.coeff(0)])))
    }

    /// `M_α ↦ M_{rev(α)}`.
    pub fn reverse(&self) -> Self {
        self.map_terms(|a, c| (a.reverse(), c.clone()))
    }

    /// Expansion in the variables `x_1, ..., x_m`.
    pub fn truncate(&self, m: usize) -> TruncatedExpansion {
        TruncatedExpansion::from_qsym(self, m)
    }
}

impl AddAssign<&QSymFunction> for QSymFunction {
    fn add_assign(&mut self, rhs: &QSymFunction) {
        for (a, c) in &rhs.terms {
            self.add_term(a.clone(), c);
        }
    }
}

impl SubAssign<&QSymFunction> for QSymFunction {
    fn sub_assign(&mut self, rhs: &QSymFunction) {
        for (a, c) in &rhs.terms {
            self.add_term(a.clone(), &-c);
        }
    }
}

impl Add for QSymFunction {
    type Output = QSymFunction;
    fn add(mut self, rhs: QSymFunction) -> QSymFunction {
        self += &rhs;
        self
    }
}

impl Add for &QSymFunction {
    type Output = QSymFunction;
    fn add(self, rhs: &QSymFunction) -> QSymFunction {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QSymFunction {
    type Output = QSymFunction;
    fn sub(self, rhs: &QSymFunction) -> QSymFunction {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QSymFunction {
    type Output = QSymFunction;
    fn sub(self, rhs: QSymFunction) -> QSymFunction {
        &self - &rhs
    }
}

impl Neg for &QSymFunction {
    type Output = QSymFunction;
    fn neg(self) -> QSymFunction {
        self.map_terms(|a, c| (a.clone(), -c))
    }
}

impl Mul for &QSymFunction {
    type Output = QSymFunction;
    fn mul(self, rhs: &QSymFunction) -> QSymFunction {
        self.quasi_shuffle(rhs)
    }
}

impl Mul for QSymFunction {
    type Output = QSymFunction;
    fn mul(self, rhs: QSymFunction) -> QSymFunction {
        self.quasi_shuffle(&rhs)
    }
}

/// Renders a `c*B[..]` sum where `B` is the basis symbol; terms in the
/// crate's composition order.
pub fn render_terms<'a>(terms: impl IntoIterator<Item = (&'a Composition, &'a QPoly)>, basis: &str) -> String {
    let mut out = String::new();
    for (a, c) in terms {
        let (negative, body) = render_coeff(c);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        match body {
            Some(b) => out.push_str(&format!("{b}*{basis}{a}")),
            None => out.push_str(&format!("{basis}{a}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Splits a coefficient into a sign and a printable magnitude; `None` means
/// the magnitude is 1 and is omitted.
fn render_coeff(c: &QPoly) -> (bool, Option<String>) {
    if c.is_monomial() {
        let d = c.degree().unwrap_or(0);
        let lead = c.coeff(d);
        let negative = lead < BigInt::zero();
        let abs = QPoly::big_monomial(if negative { -lead } else { lead }, d);
        if abs == QPoly::one() {
            (negative, None)
        } else {
            (negative, Some(abs.to_string()))
        }
    } else {
        (false, Some(format!("({c})")))
    }
}

/// `q^3*M[4] + 2q^2*M[1,3] + ...`
impl fmt::Display for QSymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_terms(&self.terms, "M"))
    }
}

impl fmt::Debug for QSymFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Element of `QSym ⊗ QSym` over `ℤ[q]`, in the basis `M_α ⊗ M_β`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor {
    terms: BTreeMap<(Composition, Composition), QPoly>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((left, right)).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    /// `F ⊗ G`.
    pub fn product(left: &QSymFunction, right: &QSymFunction) -> Self {
        let mut out = Self::zero();
        for (a, ca) in left.terms() {
            for (b, cb) in right.terms() {
                out.add_term(a.clone(), b.clone(), &(ca * cb));
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `m ∘ (f ⊗ g)` for linear maps given on basis elements.
    pub fn contract(&self, f: impl Fn(&Composition) -> QSymFunction, g: impl Fn(&Composition) -> QSymFunction) -> QSymFunction {
        let mut out = QSymFunction::zero();
        for ((a, b), c) in &self.terms {
            out += &f(a).quasi_shuffle(&g(b)).scale(c);
        }
        out
    }

    /// `(ε ⊗ id)`: keeps the terms whose left factor is `M_∅`.
    pub fn counit_left(&self) -> QSymFunction {
        QSymFunction::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| a.is_empty())
                .map(|((_, b), c)| (b.clone(), c.clone())),
        )
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> QSymFunction {
        QSymFunction::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| b.is_empty())
                .map(|((a, _), c)| (a.clone(), c.clone())),
        )
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, rhs: &Tensor) {
        for ((a, b), c) in &rhs.terms {
            self.add_term(a.clone(), b.clone(), c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(parts: &[u32]) -> QSymFunction {
        QSymFunction::monomial(Composition::new(parts.to_vec()))
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn qm(k: i64, d: usize, parts: &[u32]) -> QSymFunction {
        QSymFunction::term(c(parts), QPoly::monomial(k, d))
    }

    #[test]
    fn quasi_shuffle_small() {
        assert_eq!(&m(&[1]) * &m(&[1]), &qm(2, 0, &[1, 1]) + &m(&[2]));
        let sq = m(&[1]).power(2);
        let k22_q0 = sq.concat(&sq);
        let expected = [qm(4, 0, &[1, 1, 1, 1]), qm(2, 0, &[1, 1, 2]), qm(2, 0, &[2, 1, 1]), m(&[2, 2])]
            .iter()
            .fold(QSymFunction::zero(), |a, b| &a + b);
        assert_eq!(k22_q0, expected);
        let f = &qm(3, 1, &[2, 1]) + &m(&[1]);
        assert_eq!(&f * &QSymFunction::one(), f);
    }

    #[test]
    fn concat_and_append() {
        assert_eq!(m(&[1]).concat(&m(&[2])).concat(&m(&[1])), m(&[1, 2, 1]));
        assert_eq!(m(&[1, 1]).append(2), m(&[1, 1, 2]));
        let f = &qm(3, 1, &[2, 1]) + &m(&[1]);
        assert_eq!(QSymFunction::one().concat(&f), f);
    }

    #[test]
    fn coproduct_small() {
        let d = m(&[2]).coproduct();
        let mut expected = Tensor::zero();
        expected.add_term(Composition::empty(), c(&[2]), &QPoly::one());
        expected.add_term(c(&[2]), Composition::empty(), &QPoly::one());
        assert_eq!(d, expected);
        assert_eq!(m(&[1, 1]).coproduct().len(), 3);
        let f = &qm(3, 1, &[2, 1]) + &m(&[1, 3]);
        assert_eq!(f.coproduct().counit_left(), f);
        assert_eq!(f.coproduct().counit_right(), f);
    }

    #[test]
    fn antipode_small() {
        assert_eq!(m(&[1]).antipode(), -&m(&[1]));
        assert_eq!(m(&[1, 1]).antipode(), &m(&[1, 1]) + &m(&[2]));
        assert_eq!(m(&[2]).antipode(), -&m(&[2]));
        assert_eq!(QSymFunction::one().antipode(), QSymFunction::one());
    }

    #[test]
    fn fundamental_basis() {
        assert_eq!(QSymFunction::fundamental(&c(&[2])), &m(&[2]) + &m(&[1, 1]));
        assert_eq!(QSymFunction::fundamental(&c(&[1, 1])), m(&[1, 1]));
        let f = &m(&[1, 1]) + &qm(1, 1, &[2]);
        let l = f.to_fundamental();
        assert_eq!(l.len(), 2);
        assert_eq!(l[&c(&[2])], QPoly::q());
        assert_eq!(l[&c(&[1, 1])], QPoly::from_coeffs(&[1, -1]));
        assert_eq!(QSymFunction::from_fundamental(&l), f);
    }

    #[test]
    fn specialization() {
        assert_eq!(m(&[2, 1]).principal_specialization(2), QPoly::one());
        assert_eq!(m(&[1, 1]).principal_specialization(-1), QPoly::one());
        assert_eq!(m(&[2]).principal_specialization(-1), QPoly::constant(-1));
        let f = &m(&[1, 1]) + &qm(1, 1, &[2]);
        assert_eq!(f.principal_specialization(-1), QPoly::from_coeffs(&[1, -1]));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    #[test]
    fn substitution_and_reversal() {
        assert_eq!(qm(1, 1, &[2]).scale_q(-1), qm(-1, 1, &[2]));
        assert_eq!(m(&[1, 3]).reverse(), m(&[3, 1]));
        let f = &qm(2, 1, &[1, 3]) + &m(&[2, 1, 1]);
        assert_eq!(f.reverse().reverse(), f);
    }

    #[test]
    fn rendering() {
        let f = &qm(1, 3, &[4]) + &qm(2, 2, &[1, 3]);
        assert_eq!(f.to_string(), "q^3*M[4] + 2q^2*M[1,3]");
        let g = &m(&[1, 1]) + &QSymFunction::term(c(&[2]), QPoly::from_coeffs(&[1, -1]));
        assert_eq!(g.to_string(), "(1 - q)*M[2] + M[1,1]");
        assert_eq!((-&m(&[1])).to_string(), "-M[1]");
        assert_eq!(qm(2, 0, &[1]).to_string(), "2*M[1]");
        assert_eq!(QSymFunction::zero().to_string(), "0");
    }
}

//! Sparse exact polynomials in the `d·n²` variables `x_{i, ζ^k j}`.
//!
//! A [`Monomial`] is square-free with pairwise distinct rows; it is *full* when
//! it also uses every row once and every column once, in which case it equals
//! `x^{e,g}` for a unique `g ∈ G(n,d)` (row `i` carries the one-line entry `gᵢ`).
//! Partial monomials appear as factors of block products and are first class.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::ring::ExactRing;
use crate::wreath::{TwistedLetter, WreathElement};

/// The variable `x_{row, ζ^twist col}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex {
    pub row: u16,
    pub col: u16,
    pub twist: u16,
}

impl VarIndex {
    pub fn new(row: usize, col: usize, twist: u32) -> Self {
        VarIndex {
            row: row as u16,
            col: col as u16,
            twist: twist as u16,
        }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist == 0 {
            write!(f, "x[{},{}]", self.row, self.col)
        } else {
            write!(f, "x[{},{}@{}]", self.row, self.col, self.twist)
        }
    }
}

/// Row-sorted product of variables with distinct rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<VarIndex>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut vars: Vec<VarIndex>) -> Result<Self> {
        vars.sort_unstable();
        for w in vars.windows(2) {
            if w[0].row == w[1].row {
                return Err(Error::RowCollision(w[0].row as usize));
            }
        }
        Ok(Monomial(vars))
    }

    pub fn vars(&self) -> &[VarIndex] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `x^{e,g} = x_{1,g₁} ⋯ x_{n,gₙ}`
    pub fn of_element(g: &WreathElement) -> Self {
        Monomial(
            g.one_line()
                .iter()
                .enumerate()
                .map(|(i, e)| VarIndex::new(i + 1, e.letter, e.twist))
                .collect(),
        )
    }

    /// `x^{u,g} = x_{u₁,g₁} ⋯ x_{uₙ,gₙ}` for a permutation `u` in one-line notation.
    pub fn from_pair(u: &[usize], g: &WreathElement) -> Result<Self> {
        if u.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                got: u.len(),
            });
        }
        let vars = u
            .iter()
            .zip(g.one_line())
            .map(|(&r, e)| VarIndex::new(r, e.letter, e.twist))
            .collect();
        Self::new(vars)
    }

    /// Merges two monomials on disjoint rows.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.row.cmp(&b.row) {
                std::cmp::Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return Err(Error::RowCollision(a.row as usize)),
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Ok(Monomial(out))
    }

    /// Uses rows `1..=n` and distinct columns.
    pub fn is_full(&self, n: usize) -> bool {
        if self.0.len() != n {
            return false;
        }
        let mut cols = vec![false; n];
        for (i, v) in self.0.iter().enumerate() {
            let c = v.col as usize;
            if v.row as usize != i + 1 || c == 0 || c > n || cols[c - 1] {
                return false;
            }
            cols[c - 1] = true;
        }
        true
    }

    /// The `g` with `self = x^{e,g}`, if the monomial is full.
    pub fn to_element(&self, n: usize, d: u32) -> Option<WreathElement> {
        if !self.is_full(n) {
            return None;
        }
        let entries: Vec<_> = self
            .0
            .iter()
            .map(|v| TwistedLetter {
                letter: v.col as usize,
                twist: v.twist as u32,
            })
            .collect();
        WreathElement::from_one_line(&entries, d).ok()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            write!(f, "{}", self.0.iter().format("·"))
        }
    }
}

/// Sparse polynomial with `Z[ζ_d]` coefficients; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ImmPolynomial {
    n: usize,
    d: u32,
    terms: BTreeMap<Monomial, CyclotomicInt>,
}

impl ImmPolynomial {
    pub fn zero(n: usize, d: u32) -> Self {
        ImmPolynomial {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, d: u32) -> Self {
        Self::constant(n, CyclotomicInt::one(d))
    }

    pub fn constant(n: usize, c: CyclotomicInt) -> Self {
        let mut p = Self::zero(n, c.order());
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn variable(n: usize, d: u32, var: VarIndex) -> Self {
        Self::term(n, Monomial(vec![var]), CyclotomicInt::one(d))
    }

    pub fn term(n: usize, monomial: Monomial, c: CyclotomicInt) -> Self {
        let mut p = Self::zero(n, c.order());
        p.add_term(monomial, c);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CyclotomicInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, monomial: Monomial, c: CyclotomicInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.d != other.d {
            return Err(Error::GroupMismatch(self.n, self.d, other.n, other.d));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Product; fails if any pair of terms shares a row.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n, self.d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.try_mul(m2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &CyclotomicInt) -> Self {
        let mut out = Self::zero(self.n, self.d);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn coefficient_of(&self, monomial: &Monomial) -> CyclotomicInt {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| CyclotomicInt::zero(self.d))
    }

    /// Coefficient of `x^{e,g}`.
    pub fn coefficient(&self, g: &WreathElement) -> CyclotomicInt {
        self.coefficient_of(&Monomial::of_element(g))
    }

    /// Whether every monomial is a full `x^{e,g}`.
    pub fn is_in_immanant_space(&self) -> bool {
        self.terms.keys().all(|m| m.is_full(self.n))
    }

    /// Coefficients keyed by `g`, for polynomials in the immanant subspace.
    pub fn to_group_map(&self) -> Result<BTreeMap<WreathElement, CyclotomicInt>> {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.to_element(self.n, self.d)
                    .map(|g| (g, c.clone()))
                    .ok_or_else(|| Error::NotImmanantMonomial(m.to_string()))
            })
            .collect()
    }

    /// `h₁ ∘ p ∘ h₂`, extending `h₁ ∘ x^{e,g} ∘ h₂ = x^{e, h₁gh₂}` linearly.
    pub fn act(&self, h1: &WreathElement, h2: &WreathElement) -> Result<Self> {
        let mut out = Self::zero(self.n, self.d);
        for (m, c) in &self.terms {
            let g = m
                .to_element(self.n, self.d)
                .ok_or_else(|| Error::NotImmanantMonomial(m.to_string()))?;
            let moved = h1.multiply(&g)?.multiply(h2)?;
            out.add_term(Monomial::of_element(&moved), c.clone());
        }
        Ok(out)
    }
}

impl ExactRing for ImmPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, self.d)
    }

    fn one_like(&self) -> Self {
        Self::one(self.n, self.d)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// # Panics
    /// On a row collision; the kernels only multiply entries from distinct rows.
    fn mul_ref(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    fn neg_ref(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -&*v;
        }
        out
    }

    fn scale(&self, c: &CyclotomicInt) -> Self {
        self.scaled(c)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        assert!(self.n == other.n && self.d == other.d, "polynomial ambient mismatch");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

fn render_coefficient(c: &CyclotomicInt) -> (bool, String) {
    let text = c.to_string();
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.as_str()),
    };
    if body.contains(['+', '-']) {
        (false, format!("({text})"))
    } else {
        (neg, body.to_string())
    }
}

impl fmt::Display for ImmPolynomial {
    /// `3·x[1,1]·x[2,2] - x[1,2]·x[2,1] + z^2·x[1,1@1]`; unit coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, coeff) = render_coefficient(c);
            let body = match (coeff.as_str(), m.degree()) {
                (_, 0) => coeff,
                ("1", _) => m.to_string(),
                _ => format!("{coeff}·{m}"),
            };
            match (i, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ImmPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ImmPolynomial(n={}, d={}): {}", self.n, self.d, self)
    }
}

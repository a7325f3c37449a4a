//! One-dimensional characters, Young subgroup characters `θ`, the induced
//! (monomial) characters `β^λ = θ↑_{G_λ}^{G}` and group-algebra sums.
//!
//! The induction oracle works without generating functions:
//! `β^λ(g) = Σ_{u ∈ L, u⁻¹gu ∈ G_λ} θ(u⁻¹gu)` over a left transversal `L`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{k_intervals, DPartition};
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::wreath::{inversions, WreathElement, YoungSubgroupSpec};

/// The symmetric group character `1` or `ε` attached to one component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Beta {
    Trivial,
    Sign,
}

impl Beta {
    pub fn from_char(c: char) -> Result<Self> {
        match c {
            't' => Ok(Beta::Trivial),
            's' => Ok(Beta::Sign),
            other => Err(Error::InvalidToken(other.to_string())),
        }
    }

    /// Parses a `t`/`s` string such as `sst`.
    pub fn parse_sequence(text: &str) -> Result<Vec<Beta>> {
        text.trim().chars().map(Beta::from_char).collect()
    }

    pub fn to_char(self) -> char {
        match self {
            Beta::Trivial => 't',
            Beta::Sign => 's',
        }
    }

    /// All `2^d` sequences, trivial before sign in each slot.
    pub fn all_sequences(d: usize) -> Vec<Vec<Beta>> {
        (0..1usize << d)
            .map(|mask| {
                (0..d)
                    .map(|k| if mask >> (d - 1 - k) & 1 == 1 { Beta::Sign } else { Beta::Trivial })
                    .collect()
            })
            .collect()
    }
}

/// `δ_k` or `δ_k ε`: `(γ, w) ↦ ζ^{k(γ₁+⋯+γₙ)}`, times `(-1)^{inv(w)}` for the sign flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OneDimChar {
    pub k: u32,
    pub beta: Beta,
}

impl OneDimChar {
    pub fn new(k: u32, beta: Beta) -> Self {
        OneDimChar { k, beta }
    }

    pub fn eval(&self, g: &WreathElement) -> CyclotomicInt {
        let d = g.d();
        let exponent = (self.k as u64 * g.twist_sum() as u64) % d as u64;
        let value = CyclotomicInt::root_power(d, exponent as i64);
        match self.beta {
            Beta::Sign if inversions(g.perm()) % 2 == 1 => -value,
            _ => value,
        }
    }
}

/// A monomial character `(β₀, …, β_{d-1})^λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterSpec {
    lambda: DPartition,
    beta: Vec<Beta>,
}

impl CharacterSpec {
    pub fn new(lambda: DPartition, beta: Vec<Beta>) -> Result<Self> {
        if beta.len() != lambda.d() {
            return Err(Error::ComponentCount {
                expected: lambda.d(),
                got: beta.len(),
            });
        }
        Ok(CharacterSpec { lambda, beta })
    }

    /// From the text forms `2,1/1/2` and `sst`; `d` is the length of the β string.
    pub fn parse(lambda: &str, beta: &str) -> Result<Self> {
        let beta = Beta::parse_sequence(beta)?;
        let lambda = DPartition::parse(lambda, beta.len())?;
        Self::new(lambda, beta)
    }

    /// The one-dimensional character `δ_k β` of `G(n,d)`, written as the monomial character
    /// with `λ^k = (n)`.
    pub fn one_dimensional(n: usize, d: u32, c: OneDimChar) -> Result<Self> {
        let components = (0..d)
            .map(|k| {
                if k == c.k % d {
                    crate::combinatorics::Partition::new(vec![n])
                } else {
                    Ok(crate::combinatorics::Partition::empty())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let beta = (0..d).map(|k| if k == c.k % d { c.beta } else { Beta::Trivial }).collect();
        Self::new(DPartition::new(components)?, beta)
    }

    pub fn lambda(&self) -> &DPartition {
        &self.lambda
    }

    pub fn beta(&self) -> &[Beta] {
        &self.beta
    }

    pub fn beta_string(&self) -> String {
        self.beta.iter().map(|b| b.to_char()).collect()
    }

    pub fn n(&self) -> usize {
        self.lambda.size()
    }

    pub fn d(&self) -> u32 {
        self.lambda.d() as u32
    }

    pub fn young_spec(&self) -> YoungSubgroupSpec {
        k_intervals(&self.lambda)
    }

    /// `θ(y) = Π_k δ_kβ_k(y_k)` for `y = y₀ ⋯ y_{d-1} ∈ G_λ`.
    pub fn eval_young_char(&self, y: &WreathElement) -> Result<CyclotomicInt> {
        let factors = self
            .young_spec()
            .factor(y)
            .ok_or_else(|| Error::NotInYoungSubgroup(y.to_string()))?;
        Ok(self.theta_of_factors(&factors))
    }

    fn theta_of_factors(&self, factors: &[WreathElement]) -> CyclotomicInt {
        let mut value = CyclotomicInt::one(self.d());
        for (k, (f, b)) in factors.iter().zip(&self.beta).enumerate() {
            value = &value * &OneDimChar::new(k as u32, *b).eval(f);
        }
        value
    }

    /// `Σ_{y ∈ G_λ} θ(y⁻¹) y`.
    pub fn t_h_theta(&self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n(), self.d());
        for y in self.young_spec().elements() {
            let inv: Vec<_> = y.factors.iter().map(|f| f.inverse()).collect();
            out.add_term(y.element, self.theta_of_factors(&inv));
        }
        out
    }

    /// `Σ_{u ∈ L} u T u⁻¹` over the left transversal `L`; the coefficient of `g`
    /// is `β^λ(g⁻¹)`.
    pub fn conjugate_sum(&self) -> GroupAlgebraElement {
        let t = self.t_h_theta();
        let mut out = GroupAlgebraElement::zero(self.n(), self.d());
        for u in self.young_spec().left_transversal() {
            out.add_assign(&t.conjugated_by(&u));
        }
        out
    }

    pub fn oracle(&self) -> InductionOracle {
        InductionOracle::new(self.clone())
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^({})", self.beta_string(), self.lambda)
    }
}

/// Induced character evaluation from a fixed left transversal of `G_λ`.
#[derive(Debug, Clone)]
pub struct InductionOracle {
    spec: CharacterSpec,
    young: YoungSubgroupSpec,
    transversal: Vec<WreathElement>,
}

impl InductionOracle {
    /// Uses the transversal `{v⁻¹ : v ∈ G_λ^-}`.
    pub fn new(spec: CharacterSpec) -> Self {
        let young = spec.young_spec();
        let transversal = young.left_transversal();
        InductionOracle {
            spec,
            young,
            transversal,
        }
    }

    /// Uses a caller-supplied left transversal (one element of each coset `uG_λ`).
    pub fn with_transversal(spec: CharacterSpec, transversal: Vec<WreathElement>) -> Self {
        let young = spec.young_spec();
        InductionOracle {
            spec,
            young,
            transversal,
        }
    }

    pub fn spec(&self) -> &CharacterSpec {
        &self.spec
    }

    pub fn transversal(&self) -> &[WreathElement] {
        &self.transversal
    }

    pub fn eval(&self, g: &WreathElement) -> Result<CyclotomicInt> {
        if g.n() != self.spec.n() || g.d() != self.spec.d() {
            return Err(Error::GroupMismatch(g.n(), g.d(), self.spec.n(), self.spec.d()));
        }
        let mut total = CyclotomicInt::zero(g.d());
        for u in &self.transversal {
            let c = u.inverse().multiply(g)?.multiply(u)?;
            if let Some(factors) = self.young.factor(&c) {
                total += &self.spec.theta_of_factors(&factors);
            }
        }
        Ok(total)
    }

    /// Values on many elements, evaluated in parallel, in input order.
    pub fn eval_many(&self, gs: &[WreathElement]) -> Result<Vec<CyclotomicInt>> {
        gs.par_iter().map(|g| self.eval(g)).collect()
    }
}

/// `β^λ(g)` by induction.
pub fn induced_char_oracle(spec: &CharacterSpec, g: &WreathElement) -> Result<CyclotomicInt> {
    spec.oracle().eval(g)
}

/// A finite formal sum `Σ c_g g` in `Z[ζ_d][G(n,d)]`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    d: u32,
    terms: BTreeMap<WreathElement, CyclotomicInt>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, d: u32) -> Self {
        GroupAlgebraElement {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(g: WreathElement) -> Self {
        let mut out = Self::zero(g.n(), g.d());
        let d = g.d();
        out.add_term(g, CyclotomicInt::one(d));
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WreathElement, &CyclotomicInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &WreathElement) -> CyclotomicInt {
        self.terms
            .get(g)
            .cloned()
            .unwrap_or_else(|| CyclotomicInt::zero(self.d))
    }

    pub fn add_term(&mut self, g: WreathElement, c: CyclotomicInt) {
        assert!(g.n() == self.n && g.d() == self.d, "group element outside the algebra");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    pub fn add_assign(&mut self, other: &Self) {
        for (g, c) in &other.terms {
            self.add_term(g.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n, self.d);
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                out.add_term(g * h, a * b);
            }
        }
        out
    }

    /// `u · self · u⁻¹`.
    pub fn conjugated_by(&self, u: &WreathElement) -> Self {
        let ui = u.inverse();
        let mut out = Self::zero(self.n, self.d);
        for (g, c) in &self.terms {
            out.add_term(&(u * g) * &ui, c.clone());
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(g, c)| (g.to_string(), c.to_string()))).finish()
    }
}

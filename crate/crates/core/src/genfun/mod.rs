//! Generating functions for characters of `G(n,d)`.
//!
//! The `θ`-immanant of a class function `θ` is `Gimm_θ(x) = Σ_g θ(g⁻¹) x^{e,g}`.
//! The one-dimensional ones are `perm Q_k(x)` and `det Q_k(x)`, where
//! `Q_k(x)_{i,j} = Σ_l ζ^{-lk} x_{i, ζ^l j}`. For a monomial character
//! `(β₀, …, β_{d-1})^λ` the immanant is the sum, over ordered set partitions
//! `(I₀, …, I_{d-1})` of `[n]` with `|I_k| = |λ^k|`, of
//! `Π_k Imm_{β_k^{λ^k}}(Q_k(x)_{I_k, I_k})`, each factor expanded as a sum of
//! products of minors (sign) or permanents (trivial) over ordered set
//! partitions of `I_k` of type `λ^k`.

pub mod kernels;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::characters::{Beta, CharacterSpec, OneDimChar};
use crate::combinatorics::{ordered_set_partitions, OrderedSetPartition, Partition};
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::poly::{ImmPolynomial, Monomial, VarIndex};
use crate::wreath::{all_elements, WreathElement};

pub use kernels::{determinant, permanent, ryser_permanent, sn_immanant, SquareMatrix, Strategy};

/// The matrix `Q_k(x)` of `G(n,d)`.
#[derive(Debug, Clone)]
pub struct QMatrix {
    k: u32,
    matrix: SquareMatrix<ImmPolynomial>,
}

impl QMatrix {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn matrix(&self) -> &SquareMatrix<ImmPolynomial> {
        &self.matrix
    }

    /// `Q_k(x)_{I,I}` for 1-based indices `I`, sorted ascending.
    pub fn principal(&self, indices: &[usize]) -> SquareMatrix<ImmPolynomial> {
        let zero_based: Vec<_> = indices.iter().map(|i| i - 1).collect();
        self.matrix.principal(&zero_based)
    }
}

/// `q_{i,j,k}(x) = Σ_{l=0}^{d-1} ζ^{-lk} x_{i, ζ^l j}`.
pub fn q_entry(n: usize, d: u32, k: u32, i: usize, j: usize) -> ImmPolynomial {
    let mut p = ImmPolynomial::zero(n, d);
    for l in 0..d {
        let c = CyclotomicInt::root_power(d, -((l as i64) * (k as i64)));
        p.add_term(Monomial::new(vec![VarIndex::new(i, j, l)]).expect("single variable"), c);
    }
    p
}

pub fn q_matrix(n: usize, d: u32, k: u32) -> QMatrix {
    let matrix = SquareMatrix::from_fn(n, ImmPolynomial::one(n, d), |i, j| q_entry(n, d, k, i + 1, j + 1));
    QMatrix { k: k % d, matrix }
}

/// `perm Q_k` for `δ_k`, `det Q_k` for `δ_k ε`.
pub fn gimm_one_dim(c: OneDimChar, n: usize, d: u32, strategy: Strategy) -> ImmPolynomial {
    let q = q_matrix(n, d, c.k);
    match c.beta {
        Beta::Trivial => permanent(q.matrix(), strategy),
        Beta::Sign => determinant(q.matrix(), strategy),
    }
}

/// `Σ_J Π_i M_{J_i, J_i}` over ordered set partitions `J` of `[m]` of type `λ`,
/// with determinants for `Sign` and permanents for `Trivial`. This is the
/// immanant of `ε^λ` resp. `η^λ`.
pub fn lmw_expand(
    lambda: &Partition,
    beta: Beta,
    m: &SquareMatrix<ImmPolynomial>,
    strategy: Strategy,
) -> Result<ImmPolynomial> {
    if lambda.size() != m.size() {
        return Err(Error::SizeMismatch {
            expected: m.size(),
            got: lambda.size(),
        });
    }
    let mut total = ImmPolynomial::zero(m.one().n(), m.one().d());
    for j in ordered_set_partitions(m.size(), lambda.parts())? {
        let mut term = m.one().clone();
        for block in j.blocks() {
            let rows: Vec<_> = block.iter().map(|i| i - 1).collect();
            let sub = m.principal(&rows);
            let factor = match beta {
                Beta::Sign => determinant(&sub, strategy),
                Beta::Trivial => permanent(&sub, strategy),
            };
            term = term.try_mul(&factor)?;
        }
        total = total.try_add(&term)?;
    }
    Ok(total)
}

/// Ordered set partitions `(I₀, …, I_{d-1})` of `[n]` with `|I_k| = |λ^k|`,
/// in lexicographic order.
pub fn outer_partitions(spec: &CharacterSpec) -> Vec<OrderedSetPartition> {
    ordered_set_partitions(spec.n(), &spec.lambda().component_sizes())
        .expect("component sizes sum to n")
        .collect()
}

/// Per-component factors `Imm_{β_k^{λ^k}}(Q_k(x)_{I,I})`, memoized by `(k, I)`.
struct FactorTable {
    tables: Vec<BTreeMap<Vec<usize>, ImmPolynomial>>,
}

impl FactorTable {
    fn build(spec: &CharacterSpec, strategy: Strategy) -> Result<Self> {
        let n = spec.n();
        let d = spec.d();
        let tables = spec
            .lambda()
            .components()
            .par_iter()
            .zip(spec.beta().par_iter())
            .enumerate()
            .map(|(k, (lambda_k, beta_k))| {
                let q = q_matrix(n, d, k as u32);
                let size = lambda_k.size();
                let subsets = ordered_set_partitions(n, &[size, n - size])?;
                subsets
                    .map(|osp| {
                        let subset = osp.blocks()[0].clone();
                        let poly = lmw_expand(lambda_k, *beta_k, &q.principal(&subset), strategy)?;
                        Ok((subset, poly))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FactorTable { tables })
    }

    fn term(&self, n: usize, d: u32, outer: &OrderedSetPartition) -> Result<ImmPolynomial> {
        let mut term = ImmPolynomial::one(n, d);
        for (k, block) in outer.blocks().iter().enumerate() {
            term = term.try_mul(&self.tables[k][block])?;
        }
        Ok(term)
    }
}

/// The summand of the expansion indexed by one outer ordered set partition.
pub fn outer_term(spec: &CharacterSpec, outer: &OrderedSetPartition, strategy: Strategy) -> Result<ImmPolynomial> {
    let expected = spec.lambda().component_sizes();
    if outer.type_sizes() != expected || outer.n() != spec.n() {
        return Err(Error::TypeMismatch {
            expected,
            got: outer.type_sizes(),
        });
    }
    let (n, d) = (spec.n(), spec.d());
    let mut term = ImmPolynomial::one(n, d);
    for (k, block) in outer.blocks().iter().enumerate() {
        let q = q_matrix(n, d, k as u32);
        let factor = lmw_expand(&spec.lambda().components()[k], spec.beta()[k], &q.principal(block), strategy)?;
        term = term.try_mul(&factor)?;
    }
    Ok(term)
}

/// The full sum over outer ordered set partitions, summed in parallel.
pub fn main_theorem_rhs(spec: &CharacterSpec, strategy: Strategy) -> Result<ImmPolynomial> {
    let (n, d) = (spec.n(), spec.d());
    let table = FactorTable::build(spec, strategy)?;
    let outer = outer_partitions(spec);
    outer
        .par_iter()
        .map(|o| table.term(n, d, o))
        .try_reduce(|| ImmPolynomial::zero(n, d), |a, b| a.try_add(&b))
}

/// `Σ_g θ(g⁻¹) x^{e,g}`, the convention under which `Gimm` of an induced
/// character matches the group-algebra sum of conjugated idempotents.
pub fn g_immanant(n: usize, d: u32, theta: impl Fn(&WreathElement) -> CyclotomicInt) -> ImmPolynomial {
    let mut p = ImmPolynomial::zero(n, d);
    for g in all_elements(n, d) {
        let c = theta(&g.inverse());
        p.add_term(Monomial::of_element(&g), c);
    }
    p
}

/// `Σ_g θ(g) x^{e,g}`; for `d <= 2` it coincides with [`g_immanant`] on class functions.
pub fn direct_immanant(n: usize, d: u32, theta: impl Fn(&WreathElement) -> CyclotomicInt) -> ImmPolynomial {
    let mut p = ImmPolynomial::zero(n, d);
    for g in all_elements(n, d) {
        let c = theta(&g);
        p.add_term(Monomial::of_element(&g), c);
    }
    p
}

/// The expanded immanant of a monomial character with its coefficients keyed by `g`.
#[derive(Debug, Clone)]
pub struct GeneratingFunction {
    spec: CharacterSpec,
    polynomial: ImmPolynomial,
    coefficients: BTreeMap<WreathElement, CyclotomicInt>,
}

impl GeneratingFunction {
    pub fn new(spec: &CharacterSpec, strategy: Strategy) -> Result<Self> {
        let polynomial = main_theorem_rhs(spec, strategy)?;
        let coefficients = polynomial.to_group_map()?;
        Ok(GeneratingFunction {
            spec: spec.clone(),
            polynomial,
            coefficients,
        })
    }

    pub fn spec(&self) -> &CharacterSpec {
        &self.spec
    }

    pub fn polynomial(&self) -> &ImmPolynomial {
        &self.polynomial
    }

    /// Coefficient of `x^{e,g}`.
    pub fn coefficient(&self, g: &WreathElement) -> CyclotomicInt {
        self.coefficients
            .get(g)
            .cloned()
            .unwrap_or_else(|| CyclotomicInt::zero(self.spec.d()))
    }

    /// The character value at `g`, the coefficient of `x^{e,g⁻¹}`.
    pub fn character_value(&self, g: &WreathElement) -> Result<CyclotomicInt> {
        if g.n() != self.spec.n() || g.d() != self.spec.d() {
            return Err(Error::GroupMismatch(g.n(), g.d(), self.spec.n(), self.spec.d()));
        }
        Ok(self.coefficient(&g.inverse()))
    }

    /// Nonzero coefficients in group-element order.
    pub fn coefficients(&self) -> &BTreeMap<WreathElement, CyclotomicInt> {
        &self.coefficients
    }
}

/// `β^λ(g)` from the generating function.
pub fn char_from_genfun(spec: &CharacterSpec, g: &WreathElement) -> Result<CyclotomicInt> {
    GeneratingFunction::new(spec, Strategy::Auto)?.character_value(g)
}

//! Exhaustive agreement checks between the generating functions, the
//! induction oracle and the group-algebra sums.

use std::fmt;

use crate::characters::{Beta, CharacterSpec};
use crate::combinatorics::d_partitions;
use crate::cyclotomic::CyclotomicInt;
use crate::error::Result;
use crate::genfun::{GeneratingFunction, Strategy};
use crate::wreath::{all_elements, WreathElement};

/// Every `(λ, β)` with `λ` a d-partition of `n`, in enumeration order.
pub fn all_specs(n: usize, d: usize) -> Vec<CharacterSpec> {
    d_partitions(n, d)
        .flat_map(|lambda| {
            Beta::all_sequences(d)
                .into_iter()
                .map(move |beta| CharacterSpec::new(lambda.clone(), beta).expect("β has length d"))
        })
        .collect()
}

/// A coefficient where two computations of the same quantity disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub spec: CharacterSpec,
    pub element: WreathElement,
    pub expected: CyclotomicInt,
    pub got: CyclotomicInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: expected {}, got {}",
            self.spec, self.element, self.expected, self.got
        )
    }
}

/// Outcome of checking one spec on every group element.
#[derive(Debug, Clone)]
pub struct SpecCheck {
    /// Character values `β^λ(g)` from the generating function, in group order.
    pub values: Vec<(WreathElement, CyclotomicInt)>,
    pub mismatch: Option<Mismatch>,
}

/// Compares the coefficient of every `x^{e,g}` in the expansion with the
/// induced character at `g⁻¹`, and checks that no other monomial survives.
pub fn check_theorem(spec: &CharacterSpec, strategy: Strategy) -> Result<SpecCheck> {
    let gf = GeneratingFunction::new(spec, strategy)?;
    let oracle = spec.oracle();
    let mut values = Vec::new();
    let mut mismatch = None;
    for g in all_elements(spec.n(), spec.d()) {
        let got = gf.coefficient(&g);
        let expected = oracle.eval(&g.inverse())?;
        if mismatch.is_none() && got != expected {
            mismatch = Some(Mismatch {
                spec: spec.clone(),
                element: g.clone(),
                expected,
                got: got.clone(),
            });
        }
        values.push((g.inverse(), got));
    }
    values.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(SpecCheck { values, mismatch })
}

/// Compares the coefficient of `g` in `Σ_u u T u⁻¹` with the induced character at `g⁻¹`.
pub fn check_group_algebra(spec: &CharacterSpec) -> Result<Option<Mismatch>> {
    let sum = spec.conjugate_sum();
    let oracle = spec.oracle();
    for g in all_elements(spec.n(), spec.d()) {
        let got = sum.coefficient(&g);
        let expected = oracle.eval(&g.inverse())?;
        if got != expected {
            return Ok(Some(Mismatch {
                spec: spec.clone(),
                element: g,
                expected,
                got,
            }));
        }
    }
    Ok(None)
}

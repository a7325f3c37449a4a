//! Exact arithmetic in the ring of cyclotomic integers `Z[ζ_d]`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(φ(d)-1)` after reduction
//! modulo the `d`-th cyclotomic polynomial, so equality of values is equality of
//! coefficient vectors. Coefficients are arbitrary precision integers.
//!
//! Products are first folded modulo `x^d - 1` (which `Φ_d` divides) and then
//! reduced with a per-order table holding `ζ^j` in the reduced basis for every
//! `j < d`. The tables are built once per order and shared between threads.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduction data for one order `d`.
#[derive(Debug)]
struct Basis {
    phi: usize,
    cyclotomic: Vec<i64>,
    /// `powers[j]` holds the coordinates of `ζ^j`, `0 <= j < d`.
    powers: Vec<Vec<i64>>,
}

const SMALL_ORDERS: usize = 64;

fn small_cache() -> &'static [OnceLock<Arc<Basis>>; SMALL_ORDERS] {
    static SMALL: OnceLock<[OnceLock<Arc<Basis>>; SMALL_ORDERS]> = OnceLock::new();
    SMALL.get_or_init(|| std::array::from_fn(|_| OnceLock::new()))
}

fn large_cache() -> &'static RwLock<HashMap<u32, Arc<Basis>>> {
    static LARGE: OnceLock<RwLock<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    LARGE.get_or_init(Default::default)
}

fn basis(order: u32) -> Arc<Basis> {
    debug_assert!(order > 0);
    if (order as usize) < SMALL_ORDERS {
        return small_cache()[order as usize]
            .get_or_init(|| Arc::new(build_basis(order)))
            .clone();
    }
    if let Some(b) = large_cache().read().unwrap().get(&order) {
        return b.clone();
    }
    // Built outside the lock; two racing threads produce identical tables.
    let built = Arc::new(build_basis(order));
    large_cache()
        .write()
        .unwrap()
        .entry(order)
        .or_insert(built)
        .clone()
}

fn build_basis(order: u32) -> Basis {
    let cyclotomic = compute_cyclotomic(order);
    let phi = cyclotomic.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut current = vec![0i64; phi];
    current[0] = 1;
    for _ in 0..order {
        powers.push(current.clone());
        // multiply by x, then eliminate x^phi using the monic relation
        let top = current[phi - 1];
        for i in (1..phi).rev() {
            current[i] = current[i - 1];
        }
        current[0] = 0;
        if top != 0 {
            for i in 0..phi {
                current[i] = current[i]
                    .checked_sub(top.checked_mul(cyclotomic[i]).expect("coefficient overflow"))
                    .expect("coefficient overflow");
            }
        }
    }
    Basis {
        phi,
        cyclotomic,
        powers,
    }
}

/// `Φ_d = (x^d - 1) / Π_{e | d, e < d} Φ_e`, coefficients from low to high degree.
fn compute_cyclotomic(order: u32) -> Vec<i64> {
    let d = order as usize;
    let mut num = vec![0i64; d + 1];
    num[0] = -1;
    num[d] = 1;
    for e in 1..order {
        if order.is_multiple_of(e) {
            let divisor = basis(e).cyclotomic.clone();
            num = divide_monic(&num, &divisor);
        }
    }
    num
}

/// Exact division by a monic integer polynomial.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Euler's totient, the degree of `Φ_d`.
pub fn totient(d: u32) -> usize {
    let mut n = d as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Coefficients (low to high) of the `d`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(d: u32) -> Result<Vec<i64>> {
    if d == 0 {
        return Err(Error::ZeroOrder);
    }
    Ok(basis(d).cyclotomic.clone())
}

/// An element of `Z[ζ_d]` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn zero(d: u32) -> Self {
        assert!(d > 0, "cyclotomic order must be positive");
        CyclotomicInt {
            order: d,
            coeffs: vec![BigInt::zero(); totient(d)],
        }
    }

    pub fn one(d: u32) -> Self {
        Self::from_int(d, 1)
    }

    pub fn from_int(d: u32, value: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(d);
        z.coeffs[0] = value.into();
        z
    }

    /// `ζ^k` for any integer `k`.
    pub fn root_power(d: u32, k: i64) -> Self {
        assert!(d > 0, "cyclotomic order must be positive");
        let b = basis(d);
        let j = k.rem_euclid(d as i64) as usize;
        CyclotomicInt {
            order: d,
            coeffs: b.powers[j].iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Builds a value from coordinates that are already in the reduced basis.
    pub fn from_coeffs(d: u32, coeffs: Vec<BigInt>) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroOrder);
        }
        let phi = totient(d);
        if coeffs.len() != phi {
            return Err(Error::CoefficientLength {
                order: d,
                expected: phi,
                got: coeffs.len(),
            });
        }
        Ok(CyclotomicInt { order: d, coeffs })
    }

    /// Canonical form of `Σ c_i ζ^i` for a coefficient list of any length.
    pub fn reduce<T: Into<BigInt> + Clone>(d: u32, power_coeffs: &[T]) -> Self {
        assert!(d > 0, "cyclotomic order must be positive");
        let mut folded = vec![BigInt::zero(); d as usize];
        for (i, c) in power_coeffs.iter().enumerate() {
            folded[i % d as usize] += c.clone().into();
        }
        Self::from_folded(d, folded)
    }

    fn from_folded(d: u32, mut folded: Vec<BigInt>) -> Self {
        let b = basis(d);
        let mut out: Vec<BigInt> = folded.drain(..b.phi).collect();
        for (j, c) in folded.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &p) in out.iter_mut().zip(&b.powers[j + b.phi]) {
                if p != 0 {
                    *o += &c * p;
                }
            }
        }
        CyclotomicInt {
            order: d,
            coeffs: out,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CyclotomicInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CyclotomicInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let d = self.order as usize;
        if d <= 2 {
            return Ok(CyclotomicInt {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut folded = vec![BigInt::zero(); d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    folded[(i + j) % d] += a * b;
                }
            }
        }
        Ok(Self::from_folded(self.order, folded))
    }

    /// Image under `ζ ↦ ζ^(-1)`, i.e. complex conjugation.
    pub fn conjugate(&self) -> Self {
        let d = self.order as usize;
        let mut folded = vec![BigInt::zero(); d];
        for (i, c) in self.coeffs.iter().enumerate() {
            folded[(d - i) % d] += c;
        }
        Self::from_folded(self.order, folded)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

/// Power coefficients used for display. For prime `d` the relation
/// `1 + ζ + ⋯ + ζ^(d-1) = 0` lets a constant shift cancel terms; the sparsest
/// shift is chosen, preferring the canonical form on ties.
fn display_coeffs(value: &CyclotomicInt) -> Vec<BigInt> {
    let d = value.order as usize;
    let prime = d > 2 && totient(value.order) == d - 1;
    if !prime {
        return value.coeffs.clone();
    }
    let mut padded = value.coeffs.clone();
    padded.push(BigInt::zero());
    let weight = |c: &BigInt| padded.iter().filter(|a| *a != c).count();
    let mut best = BigInt::zero();
    let mut best_weight = weight(&best);
    for c in &padded {
        let w = weight(c);
        if w < best_weight || (w == best_weight && c.abs() < best.abs()) {
            best = c.clone();
            best_weight = w;
        }
    }
    padded.iter().map(|a| a - &best).collect()
}

impl fmt::Display for CyclotomicInt {
    /// Renders e.g. `3+3z-3z^2`, with `z` standing for `ζ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in display_coeffs(self).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            if i == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (d={})", self, self.order)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CyclotomicInt> for &CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: &CyclotomicInt) -> CyclotomicInt {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<CyclotomicInt> for CyclotomicInt {
            type Output = CyclotomicInt;
            fn $method(self, rhs: CyclotomicInt) -> CyclotomicInt {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&CyclotomicInt> for CyclotomicInt {
    fn add_assign(&mut self, rhs: &CyclotomicInt) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    d: u32,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for CyclotomicInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.to_string().parse::<serde_json::Number>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::ser::Error::custom)?;
        CyclotomicRepr {
            d: self.order,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|n| n.to_string().parse::<BigInt>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        CyclotomicInt::from_coeffs(repr.d, coeffs).map_err(D::Error::custom)
    }
}

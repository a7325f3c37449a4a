//! Exact determinant, permanent and immanant kernels over any [`ExactRing`].

use itertools::Itertools;

use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::ring::ExactRing;
use crate::wreath::inversions;

/// Dense row-major square matrix. It carries the ring's `1` so that the
/// `0 × 0` matrix still knows its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<R> {
    size: usize,
    entries: Vec<R>,
    one: R,
}

impl<R: ExactRing> SquareMatrix<R> {
    pub fn new(size: usize, entries: Vec<R>, one: R) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::NotSquare {
                rows: size,
                entries: entries.len(),
            });
        }
        Ok(SquareMatrix { size, entries, one })
    }

    pub fn from_fn(size: usize, one: R, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let entries = (0..size * size).map(|ix| f(ix / size, ix % size)).collect();
        SquareMatrix { size, entries, one }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn one(&self) -> &R {
        &self.one
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.size + col]
    }

    /// The principal submatrix on the 0-based indices `rows` (kept in the given order).
    pub fn principal(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.one.clone(), |i, j| self.get(rows[i], rows[j]).clone())
    }
}

/// Expansion strategy for determinants and permanents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Leibniz for `m <= 4`, subset recursion above.
    #[default]
    Auto,
    Leibniz,
    Laplace,
}

const LEIBNIZ_LIMIT: usize = 4;

impl Strategy {
    fn resolve(self, m: usize) -> Strategy {
        match self {
            Strategy::Auto if m <= LEIBNIZ_LIMIT => Strategy::Leibniz,
            Strategy::Auto => Strategy::Laplace,
            s => s,
        }
    }
}

/// `Σ_{w ∈ S_m} θ(w) M_{1,w₁} ⋯ M_{m,wₘ}`, with `w` passed to `theta` in
/// 1-based one-line notation.
pub fn sn_immanant<R, F>(m: &SquareMatrix<R>, mut theta: F) -> R
where
    R: ExactRing,
    F: FnMut(&[usize]) -> CyclotomicInt,
{
    let size = m.size();
    let mut total = m.one().zero_like();
    for w in (1..=size).permutations(size) {
        let c = theta(&w);
        if c.is_zero() {
            continue;
        }
        let mut term = m.one().clone();
        for (i, &j) in w.iter().enumerate() {
            term = term.mul_ref(m.get(i, j - 1));
            if ExactRing::is_zero(&term) {
                break;
            }
        }
        if !ExactRing::is_zero(&term) {
            total.add_assign_ref(&term.scale(&c));
        }
    }
    total
}

fn leibniz<R: ExactRing>(m: &SquareMatrix<R>, signed: bool) -> R {
    let size = m.size();
    let mut total = m.one().zero_like();
    for w in (0..size).permutations(size) {
        let mut term = m.one().clone();
        for (i, &j) in w.iter().enumerate() {
            term = term.mul_ref(m.get(i, j));
        }
        if signed && inversions(&w) % 2 == 1 {
            term = term.neg_ref();
        }
        total.add_assign_ref(&term);
    }
    total
}

/// Row-by-row expansion over column subsets: `f(S ∪ {j}) += ± f(S)·M_{|S|, j}`,
/// the sign counting columns of `S` to the right of `j`.
fn laplace<R: ExactRing>(m: &SquareMatrix<R>, signed: bool) -> R {
    let size = m.size();
    let full = (1usize << size) - 1;
    let mut table: Vec<Option<R>> = vec![None; 1 << size];
    table[0] = Some(m.one().clone());
    for mask in 0..full {
        let Some(value) = table[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        for col in 0..size {
            if mask >> col & 1 == 1 {
                continue;
            }
            let mut term = value.mul_ref(m.get(row, col));
            if signed && (mask >> (col + 1)).count_ones() % 2 == 1 {
                term = term.neg_ref();
            }
            let slot = &mut table[mask | 1 << col];
            match slot {
                Some(acc) => acc.add_assign_ref(&term),
                None => *slot = Some(term),
            }
        }
    }
    table[full].take().unwrap_or_else(|| m.one().zero_like())
}

pub fn determinant<R: ExactRing>(m: &SquareMatrix<R>, strategy: Strategy) -> R {
    match strategy.resolve(m.size()) {
        Strategy::Leibniz => leibniz(m, true),
        _ => laplace(m, true),
    }
}

pub fn permanent<R: ExactRing>(m: &SquareMatrix<R>, strategy: Strategy) -> R {
    match strategy.resolve(m.size()) {
        Strategy::Leibniz => leibniz(m, false),
        _ => laplace(m, false),
    }
}

/// Ryser's inclusion–exclusion `perm M = (-1)^m Σ_{S ⊆ [m]} (-1)^{|S|} Π_i Σ_{j ∈ S} M_{ij}`,
/// walking the subsets in Gray code order so each row sum changes by one entry.
pub fn ryser_permanent<R: ExactRing>(m: &SquareMatrix<R>) -> R {
    let size = m.size();
    if size == 0 {
        return m.one().clone();
    }
    let mut row_sums: Vec<R> = (0..size).map(|_| m.one().zero_like()).collect();
    let mut total = m.one().zero_like();
    let mut subset = 0usize;
    for step in 1usize..1 << size {
        let col = step.trailing_zeros() as usize;
        subset ^= 1 << col;
        let adding = subset >> col & 1 == 1;
        for (i, sum) in row_sums.iter_mut().enumerate() {
            *sum = if adding {
                sum.add_ref(m.get(i, col))
            } else {
                sum.add_ref(&m.get(i, col).neg_ref())
            };
        }
        let mut product = m.one().clone();
        for sum in &row_sums {
            product = product.mul_ref(sum);
        }
        if (size - subset.count_ones() as usize) % 2 == 1 {
            product = product.neg_ref();
        }
        total.add_assign_ref(&product);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ImmPolynomial, VarIndex};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_scalar(rng: &mut StdRng, d: u32) -> CyclotomicInt {
        let coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
        CyclotomicInt::reduce(d, &coeffs)
    }

    fn random_matrix(rng: &mut StdRng, m: usize, d: u32) -> SquareMatrix<CyclotomicInt> {
        SquareMatrix::from_fn(m, CyclotomicInt::one(d), |_, _| random_scalar(rng, d))
    }

    fn z(m: usize) -> SquareMatrix<ImmPolynomial> {
        SquareMatrix::from_fn(m, ImmPolynomial::one(m, 1), |i, j| {
            ImmPolynomial::variable(m, 1, VarIndex::new(i + 1, j + 1, 0))
        })
    }

    #[test]
    fn empty_matrix_is_one() {
        let e = SquareMatrix::new(0, vec![], CyclotomicInt::one(3)).unwrap();
        for s in [Strategy::Leibniz, Strategy::Laplace, Strategy::Auto] {
            assert!(determinant(&e, s).is_one());
            assert!(permanent(&e, s).is_one());
        }
        assert!(ryser_permanent(&e).is_one());
        assert!(sn_immanant(&e, |_| CyclotomicInt::from_int(3, 5)).coeffs()[0] == 5.into());
    }

    #[test]
    fn shape_is_checked() {
        assert_eq!(
            SquareMatrix::new(2, vec![CyclotomicInt::one(1); 3], CyclotomicInt::one(1)),
            Err(Error::NotSquare { rows: 2, entries: 3 })
        );
    }

    #[test]
    fn two_by_two_symbolic() {
        let m = z(2);
        assert_eq!(determinant(&m, Strategy::Auto).to_string(), "x[1,1]·x[2,2] - x[1,2]·x[2,1]");
        assert_eq!(permanent(&m, Strategy::Laplace).to_string(), "x[1,1]·x[2,2] + x[1,2]·x[2,1]");
    }

    #[test]
    fn strategies_agree_symbolically() {
        for m in 0..=5 {
            let zm = z(m);
            assert_eq!(determinant(&zm, Strategy::Leibniz), determinant(&zm, Strategy::Laplace));
            assert_eq!(permanent(&zm, Strategy::Leibniz), permanent(&zm, Strategy::Laplace));
            assert_eq!(permanent(&zm, Strategy::Leibniz), ryser_permanent(&zm));
            assert_eq!(determinant(&zm, Strategy::Leibniz).len(), (1..=m).product::<usize>());
        }
    }

    #[test]
    fn ryser_matches_naive_on_scalars() {
        let mut rng = StdRng::seed_from_u64(5);
        for m in 0..=7 {
            for d in [1, 3, 4] {
                let a = random_matrix(&mut rng, m, d);
                assert_eq!(ryser_permanent(&a), permanent(&a, Strategy::Leibniz), "m={m} d={d}");
                assert_eq!(permanent(&a, Strategy::Laplace), permanent(&a, Strategy::Leibniz));
                assert_eq!(determinant(&a, Strategy::Laplace), determinant(&a, Strategy::Leibniz));
            }
        }
    }

    #[test]
    fn immanant_specializes() {
        let mut rng = StdRng::seed_from_u64(9);
        let a = random_matrix(&mut rng, 4, 3);
        let sign = |w: &[usize]| CyclotomicInt::from_int(3, if inversions(w).is_multiple_of(2) { 1 } else { -1 });
        assert_eq!(sn_immanant(&a, sign), determinant(&a, Strategy::Auto));
        assert_eq!(sn_immanant(&a, |_| CyclotomicInt::one(3)), permanent(&a, Strategy::Auto));
    }

    #[test]
    fn principal_submatrix() {
        let m = z(3);
        let p = m.principal(&[0, 2]);
        assert_eq!(p.size(), 2);
        assert_eq!(p.get(0, 1).to_string(), "x[1,3]");
        assert_eq!(p.get(1, 0).to_string(), "x[3,1]");
    }
}

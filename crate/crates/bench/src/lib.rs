//! Fixtures shared by the criterion benches.

use wreathchar::genfun::q_matrix;
use wreathchar::{CharacterSpec, CyclotomicInt, ImmPolynomial, SquareMatrix};

/// `(ε, ε, 1)^{(21, 1, 2)}` on `G(6,3)`.
pub fn worked_example() -> CharacterSpec {
    CharacterSpec::parse("2,1/1/2", "sst").expect("valid spec")
}

/// A dense `m × m` matrix of small cyclotomic integers, fixed by `(m, d)`.
pub fn scalar_matrix(m: usize, d: u32) -> SquareMatrix<CyclotomicInt> {
    SquareMatrix::from_fn(m, CyclotomicInt::one(d), |i, j| {
        let coeffs: Vec<i64> = (0..d as usize).map(|l| ((i * 7 + j * 3 + l * 5) % 7) as i64 - 3).collect();
        CyclotomicInt::reduce(d, &coeffs)
    })
}

/// `Q_k(x)` of `G(m, d)`.
pub fn symbolic_matrix(m: usize, d: u32, k: u32) -> SquareMatrix<ImmPolynomial> {
    q_matrix(m, d, k).matrix().clone()
}

use crate::cyclotomic::CyclotomicInt;

/// A commutative `Z[ζ_d]`-algebra, as used by the determinant, permanent and
/// immanant kernels.
///
/// Identities are produced from an existing element so implementors can carry
/// their own context (cyclotomic order, polynomial ambient size).
pub trait ExactRing: Clone + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, c: &CyclotomicInt) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }
}

impl ExactRing for CyclotomicInt {
    fn zero_like(&self) -> Self {
        CyclotomicInt::zero(self.order())
    }

    fn one_like(&self) -> Self {
        CyclotomicInt::one(self.order())
    }

    fn is_zero(&self) -> bool {
        CyclotomicInt::is_zero(self)
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, c: &CyclotomicInt) -> Self {
        self * c
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

use std::fmt::Debug;

use crate::scalar::{Fp, Scalar};

/// Commutative ring interface used by the division-free linear algebra.
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
}

impl Ring for Fp {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::ZERO
    }

    fn one(&self) -> Scalar {
        Scalar::ONE
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Fp::add(*self, *a, *b)
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Fp::sub(*self, *a, *b)
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        Fp::neg(*self, *a)
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        Fp::mul(*self, *a, *b)
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
}

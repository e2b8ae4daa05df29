//! Dense polynomials over the exact scalars, and the falling/rising
//! factorial expansions built from them.

use crate::exact::{ExactInt, ExactRational};
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Sub};

/// Dense polynomial, coefficients stored in ascending degree order with no
/// trailing zeros; the zero polynomial stores nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

/// Polynomial with `ExactInt` coefficients.
pub type IntPolynomial = Polynomial<ExactInt>;

/// Polynomial with `ExactRational` coefficients.
pub type RatPolynomial = Polynomial<ExactRational>;

impl<T> Polynomial<T>
where
    T: Clone + Zero + One + Sub<Output = T>,
{
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^degree`; zero beyond the stored length.
    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation; exact for any exact coefficient type.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by the monic linear factor `(x + c)`.
    pub fn mul_linear(&self, c: &T) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + a.clone();
            out[i] = out[i].clone() + a.clone() * c.clone();
        }
        Self::new(out)
    }

    /// Expands `self(x + c)` exactly.
    pub fn shift(&self, c: &T) -> Self {
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul_linear(c);
            acc = &acc + &Self::constant(coeff.clone());
        }
        acc
    }
}

impl<'b, T> Add<&'b Polynomial<T>> for &Polynomial<T>
where
    T: Clone + Zero + One + Sub<Output = T>,
{
    type Output = Polynomial<T>;

    fn add(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'b, T> Sub<&'b Polynomial<T>> for &Polynomial<T>
where
    T: Clone + Zero + One + Sub<Output = T>,
{
    type Output = Polynomial<T>;

    fn sub(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'b, T> Mul<&'b Polynomial<T>> for &Polynomial<T>
where
    T: Clone + Zero + One + Sub<Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Falling factorial `x(x-1)(x-2)...(x-p+1)` expanded as a degree-`p`
/// polynomial; `p = 0` gives the constant 1 (empty product).
pub fn falling_factorial_poly(p: u32) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 0..i64::from(p) {
        acc = acc.mul_linear(&ExactInt::from(-i));
    }
    acc
}

/// Rising factorial `x(x+1)(x+2)...(x+p-1)` expanded as a degree-`p`
/// polynomial. Its coefficient of `x^t` is the unsigned Stirling number
/// of the first kind for `(p, t)`.
pub fn rising_factorial_poly(p: u32) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for i in 0..i64::from(p) {
        acc = acc.mul_linear(&ExactInt::from(i));
    }
    acc
}

/// `q(x + c)`, expanded exactly.
pub fn poly_shift(q: &IntPolynomial, c: &ExactInt) -> IntPolynomial {
    q.shift(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn ipoly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn new_trims_trailing_zeros() {
        let p = ipoly(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert!(ipoly(&[0, 0]).is_zero());
        assert_eq!(ipoly(&[]).degree(), None);
        assert_eq!(ipoly(&[7]).degree(), Some(0));
    }

    #[test]
    fn arithmetic_basics() {
        let a = ipoly(&[1, 2]);
        let b = ipoly(&[3, 0, 1]);
        assert_eq!(&a + &b, ipoly(&[4, 2, 1]));
        assert_eq!(&b - &a, ipoly(&[2, -2, 1]));
        assert_eq!(&a * &b, ipoly(&[3, 6, 1, 2]));
        assert_eq!(a.eval(&int(10)), int(21));
        assert_eq!(a.scale(&int(0)), IntPolynomial::zero());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial_poly(0), ipoly(&[1]));
        assert_eq!(falling_factorial_poly(2), ipoly(&[0, -1, 1]));
        assert_eq!(falling_factorial_poly(3), ipoly(&[0, 2, -3, 1]));
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial_poly(0), ipoly(&[1]));
        assert_eq!(rising_factorial_poly(2), ipoly(&[0, 1, 1]));
        assert_eq!(rising_factorial_poly(3), ipoly(&[0, 2, 3, 1]));
    }

    #[test]
    fn factorial_polys_match_pointwise_products() {
        // oracle: evaluate the expansion against the literal product
        for p in 0..=8u32 {
            let falling = falling_factorial_poly(p);
            let rising = rising_factorial_poly(p);
            for x in -3..=(i64::from(p) + 3) {
                let mut fall = int(1);
                let mut rise = int(1);
                for i in 0..i64::from(p) {
                    fall *= int(x - i);
                    rise *= int(x + i);
                }
                assert_eq!(falling.eval(&int(x)), fall, "falling p={p} x={x}");
                assert_eq!(rising.eval(&int(x)), rise, "rising p={p} x={x}");
            }
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(poly_shift(&ipoly(&[0, 1]), &int(4)), ipoly(&[4, 1]));
        assert_eq!(poly_shift(&ipoly(&[0, 0, 1]), &int(1)), ipoly(&[1, 2, 1]));
        let shifted = poly_shift(&ipoly(&[0, -1, 1]), &int(2));
        assert_eq!(shifted, ipoly(&[2, 3, 1]));
        for x in 0..=3i64 {
            let direct = ipoly(&[0, -1, 1]).eval(&int(x + 2));
            assert_eq!(shifted.eval(&int(x)), direct);
        }
    }
}

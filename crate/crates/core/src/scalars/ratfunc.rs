use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{poly_gcd, DensePoly};
use crate::error::{Error, Result};

/// A reduced fraction of polynomials over `F_p`: an element of `F_p(x)`.
///
/// The denominator is monic and coprime to the numerator, and zero is `0/1`,
/// so two fractions are equal exactly when their representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: DensePoly,
    den: DensePoly,
}

impl RatFunc {
    /// Canonical representative of `num / den`.
    pub fn new(num: DensePoly, den: DensePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.modulus() != den.modulus() {
            return Err(Error::ModulusMismatch);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: DensePoly, den: DensePoly) -> Self {
        let p = den.modulus();
        if num.is_zero() {
            return RatFunc {
                num,
                den: DensePoly::one(p),
            };
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        if !den.is_monic() {
            let lc = den.leading().unwrap().inv().unwrap().residue();
            num = num.scale(lc);
            den = den.scale(lc);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(num: DensePoly) -> Self {
        let p = num.modulus();
        RatFunc {
            num,
            den: DensePoly::one(p),
        }
    }

    pub fn zero(p: u32) -> Self {
        Self::from_poly(DensePoly::zero(p))
    }

    pub fn one(p: u32) -> Self {
        Self::from_poly(DensePoly::one(p))
    }

    pub fn constant(p: u32, c: i64) -> Self {
        Self::from_poly(DensePoly::constant(p, c))
    }

    pub fn x(p: u32) -> Self {
        Self::from_poly(DensePoly::x(p))
    }

    /// `c · x^k`.
    pub fn monomial(p: u32, c: i64, k: usize) -> Self {
        Self::from_poly(DensePoly::monomial(p, c, k))
    }

    pub fn modulus(&self) -> u32 {
        self.den.modulus()
    }

    pub fn numerator(&self) -> &DensePoly {
        &self.num
    }

    pub fn denominator(&self) -> &DensePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Sum of numerator and denominator degrees; a rough size measure.
    pub fn weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }

    /// Larger of the numerator and denominator degrees.
    pub fn height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i64) -> Result<RatFunc> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let e = exp.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// `self^p`, computed coefficientwise.
    pub fn frobenius(&self) -> RatFunc {
        RatFunc {
            num: self.num.frobenius(),
            den: self.den.frobenius(),
        }
    }

    pub fn scale(&self, c: i64) -> RatFunc {
        let p = self.modulus();
        Self::canonical(self.num.scale(super::prime::reduce(c, p)), self.den.clone())
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.modulus());
        }
        // Cross-cancel before multiplying to keep the gcd inputs small.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let n1 = self.num.div_rem(&g1).unwrap().0;
        let d2 = rhs.den.div_rem(&g1).unwrap().0;
        let n2 = rhs.num.div_rem(&g2).unwrap().0;
        let d1 = self.den.div_rem(&g2).unwrap().0;
        RatFunc::canonical(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

fn needs_parens(p: &DensePoly) -> bool {
    p.term_count() > 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u32, c: &[i64]) -> DensePoly {
        DensePoly::from_coeffs(p, c)
    }

    #[test]
    fn canonical_examples() {
        // (x^2 + x) / x = x + 1
        let r = RatFunc::new(poly(2, &[0, 1, 1]), poly(2, &[0, 1])).unwrap();
        assert_eq!(r, RatFunc::from_poly(poly(2, &[1, 1])));
        let z = RatFunc::new(DensePoly::zero(2), poly(2, &[1, 1])).unwrap();
        assert!(z.is_zero());
        assert!(z.denominator().is_one());
        let one = RatFunc::new(poly(2, &[0, 1]), poly(2, &[0, 1])).unwrap();
        assert!(one.is_one());
        assert_eq!(
            RatFunc::new(poly(2, &[1]), DensePoly::zero(2)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn denominators_are_monic() {
        let r = RatFunc::new(poly(5, &[1, 1]), poly(5, &[0, 3])).unwrap();
        assert!(r.denominator().is_monic());
        assert_eq!(r, RatFunc::new(poly(5, &[2, 2]), poly(5, &[0, 1])).unwrap());
    }

    #[test]
    fn field_op_examples() {
        let x = RatFunc::x(2);
        assert!((&x + &x).is_zero());
        assert!((&x.inv().unwrap() * &x).is_one());
        let h = RatFunc::new(poly(2, &[1]), poly(2, &[1, 1])).unwrap();
        assert!((&h + &h).is_zero());
        assert_eq!(RatFunc::zero(2).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn pow_and_display() {
        let x = RatFunc::x(3);
        assert_eq!(x.pow(-2).unwrap().to_string(), "1/x^2");
        let r = RatFunc::new(poly(2, &[0, 0, 1]), poly(2, &[1, 1])).unwrap();
        assert_eq!(r.to_string(), "x^2/(x + 1)");
        assert_eq!(RatFunc::zero(2).pow(-1), Err(Error::DivisionByZero));
    }
}

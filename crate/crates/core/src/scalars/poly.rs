use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::prime::{add_mod, inv_mod, mul_mod, reduce, sub_mod, Fp};
use crate::error::{Error, Result};

/// Dense univariate polynomial over `F_p`, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl DensePoly {
    pub(crate) fn from_residues(p: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePoly { p, coeffs }
    }

    /// Builds a polynomial from integer coefficients, reducing them mod `p`.
    pub fn from_coeffs(p: u32, coeffs: &[i64]) -> Self {
        Self::from_residues(p, coeffs.iter().map(|&c| reduce(c, p)).collect())
    }

    pub fn zero(p: u32) -> Self {
        DensePoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u32, c: i64) -> Self {
        Self::from_coeffs(p, &[c])
    }

    /// The indeterminate `x`.
    pub fn x(p: u32) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: u32, c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = reduce(c, p);
        Self::from_residues(p, coeffs)
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fp {
        Fp::from_raw(self.coeffs.get(i).copied().unwrap_or(0), self.p)
    }

    pub fn leading(&self) -> Option<Fp> {
        self.coeffs.last().map(|&c| Fp::from_raw(c, self.p))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn scale(&self, c: u32) -> DensePoly {
        let c = c % self.p;
        if c == 0 {
            return DensePoly::zero(self.p);
        }
        DensePoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        }
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> DensePoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(inv_mod(lc, self.p).expect("nonzero leading coefficient")),
        }
    }

    pub fn div_rem(&self, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        assert_eq!(self.p, divisor.p, "modulus mismatch");
        let p = self.p;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = inv_mod(*divisor.coeffs.last().unwrap(), p).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((DensePoly::zero(p), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = mul_mod(rem[k + dd], lc_inv, p);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = sub_mod(rem[k + j], mul_mod(c, dc, p), p);
            }
        }
        rem.truncate(dd);
        Ok((Self::from_residues(p, quot), Self::from_residues(p, rem)))
    }

    /// Formal derivative `d/dx`.
    pub fn derivative(&self) -> DensePoly {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64 % p as u64) as u32, p))
            .collect();
        Self::from_residues(p, coeffs)
    }

    /// `self(x)^p`, which over `F_p` equals `self(x^p)`.
    pub fn frobenius(&self) -> DensePoly {
        let p = self.p as usize;
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * p + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * p] = c;
        }
        Self::from_residues(self.p, coeffs)
    }

    pub fn pow(&self, mut exp: u64) -> DensePoly {
        let mut base = self.clone();
        let mut acc = DensePoly::one(self.p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Splits `self = Σ_r x^r · parts[r]` where every exponent in `parts[r]` is a
    /// multiple of `p`.
    pub fn split_by_residue(&self) -> Vec<DensePoly> {
        let p = self.p as usize;
        let mut parts = vec![vec![0u32; self.coeffs.len()]; p];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let r = i % p;
            parts[r][i - r] = c;
        }
        parts
            .into_iter()
            .map(|c| Self::from_residues(self.p, c))
            .collect()
    }

    /// True when every exponent with a nonzero coefficient is a multiple of `p`.
    pub fn is_p_power_series(&self) -> bool {
        let p = self.p as usize;
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || i % p == 0)
    }

    /// Shifts by `x^k`.
    pub fn shift(&self, k: usize) -> DensePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        DensePoly { p: self.p, coeffs }
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &DensePoly, b: &DensePoly) -> DensePoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.monic()
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = add_mod(*c, s, self.p);
        }
        DensePoly::from_residues(self.p, coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        self + &(-rhs)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| sub_mod(0, c, self.p)).collect(),
        }
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero(self.p);
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        DensePoly::from_residues(self.p, acc.into_iter().map(|c| c as u32).collect())
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

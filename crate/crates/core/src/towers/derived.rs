use std::fmt;

use super::DiffRing;
use crate::error::{Error, Result};
use crate::sample::Sampler;
use crate::scalars::RatFunc;

/// The field `K = F_p(x)` with the derivation determined by `δ(x)`.
///
/// Every derivation of `F_p(x)` has the form `h · d/dx`, so `δ(x) = h` pins
/// it down. Its constants are `F = F_p(x^p)` whenever `δ ≠ 0`, and
/// `{1, x, …, x^{p−1}}` is an `F`-basis of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedField {
    p: u32,
    delta_of_x: RatFunc,
}

impl DerivedField {
    pub fn new(delta_of_x: RatFunc) -> Result<Self> {
        if delta_of_x.is_zero() {
            return Err(Error::ZeroDerivation);
        }
        Ok(DerivedField {
            p: delta_of_x.modulus(),
            delta_of_x,
        })
    }

    /// `δ = d/dx`.
    pub fn standard(p: u32) -> Self {
        Self::new(RatFunc::one(p)).expect("nonzero")
    }

    /// `δ = x · d/dx`, whose minimum p-polynomial is `t^p − t`.
    pub fn euler(p: u32) -> Self {
        Self::new(RatFunc::x(p)).expect("nonzero")
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn delta_of_x(&self) -> &RatFunc {
        &self.delta_of_x
    }

    pub fn x(&self) -> RatFunc {
        RatFunc::x(self.p)
    }

    /// `δ(u/v) = (u'v − uv') / v² · δ(x)`.
    pub fn derivation_apply(&self, a: &RatFunc) -> RatFunc {
        if a.is_zero() {
            return a.clone();
        }
        let (u, v) = (a.numerator(), a.denominator());
        let top = &(&u.derivative() * v) - &(u * &v.derivative());
        if top.is_zero() {
            return RatFunc::zero(self.p);
        }
        let quotient = RatFunc::new(top, v * v).expect("nonzero denominator");
        &quotient * &self.delta_of_x
    }

    /// `δ^n(a)`.
    pub fn derivation_power(&self, a: &RatFunc, n: usize) -> RatFunc {
        let mut out = a.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = self.derivation_apply(&out);
        }
        out
    }

    pub fn is_constant(&self, a: &RatFunc) -> bool {
        self.derivation_apply(a).is_zero()
    }

    /// Coordinates `(c_0, …, c_{p−1})` of `a` in the basis `1, x, …, x^{p−1}`
    /// over the constants.
    ///
    /// With `a = u/v`, `a = u·v^{p−1} / v^p`; the denominator `v^p` is a
    /// constant and the numerator splits by exponent residue mod `p`.
    pub fn coords_over_f(&self, a: &RatFunc) -> Vec<RatFunc> {
        let p = self.p;
        let (u, v) = (a.numerator(), a.denominator());
        let numer = u * &v.pow(p as u64 - 1);
        let den_p = v.frobenius();
        numer
            .split_by_residue()
            .into_iter()
            .map(|part| RatFunc::new(part, den_p.clone()).expect("nonzero denominator"))
            .collect()
    }

    /// Inverse of [`coords_over_f`](Self::coords_over_f).
    pub fn from_coords(&self, coords: &[RatFunc]) -> RatFunc {
        let mut acc = RatFunc::zero(self.p);
        for (j, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &RatFunc::monomial(self.p, 1, j));
            }
        }
        acc
    }

    /// `δ(a)/a`.
    pub fn log_derivative(&self, a: &RatFunc) -> Result<RatFunc> {
        self.derivation_apply(a).div(a)
    }
}

impl fmt::Display for DerivedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(x) with δ(x) = {}", self.p, self.delta_of_x)
    }
}

impl DiffRing for DerivedField {
    type Elem = RatFunc;

    fn characteristic(&self) -> u32 {
        self.p
    }
    fn base(&self) -> &DerivedField {
        self
    }
    fn zero(&self) -> RatFunc {
        RatFunc::zero(self.p)
    }
    fn one(&self) -> RatFunc {
        RatFunc::one(self.p)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a + b
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a - b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        a.inv().ok()
    }
    fn derive(&self, a: &RatFunc) -> RatFunc {
        self.derivation_apply(a)
    }
    fn scalar(&self, k: &RatFunc) -> RatFunc {
        k.clone()
    }
    fn as_scalar(&self, a: &RatFunc) -> Option<RatFunc> {
        Some(a.clone())
    }
    fn is_commutative(&self) -> bool {
        true
    }
    fn f_basis(&self) -> Vec<RatFunc> {
        (0..self.p as usize).map(|j| RatFunc::monomial(self.p, 1, j)).collect()
    }
    fn f_coords(&self, a: &RatFunc) -> Vec<RatFunc> {
        self.coords_over_f(a)
    }
    fn generators(&self) -> Vec<RatFunc> {
        vec![self.x()]
    }
    fn sample(&self, s: &mut Sampler, max_degree: usize) -> RatFunc {
        s.ratfunc(max_degree)
    }
}

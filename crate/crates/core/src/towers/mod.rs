//! The differential field `K = F_p(x)`, its constants, its minimum
//! p-polynomial, and a matrix-ring coefficient adapter.

mod derived;
mod matrix;

use std::fmt;

pub use derived::DerivedField;
pub use matrix::{KMatrix, MatrixRing};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, RatFuncField};
use crate::sample::Sampler;
use crate::scalars::RatFunc;

/// Exponent bound for [`minimal_p_polynomial`] searches.
pub const DEFAULT_MAX_E: usize = 3;

/// An associative unital ring with a derivation, finite-dimensional over the
/// constants `F` of a [`DerivedField`].
pub trait DiffRing: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn characteristic(&self) -> u32;
    /// The commutative field underneath (the center, up to scalars).
    fn base(&self) -> &DerivedField;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn derive(&self, a: &Self::Elem) -> Self::Elem;

    /// Embeds an element of `K` as a central scalar.
    fn scalar(&self, k: &RatFunc) -> Self::Elem;
    /// The `K`-scalar `a` is, if it is one.
    fn as_scalar(&self, a: &Self::Elem) -> Option<RatFunc>;
    fn is_commutative(&self) -> bool;

    /// An `F`-basis of the ring.
    fn f_basis(&self) -> Vec<Self::Elem>;
    /// Coordinates over `F` in the order of [`f_basis`](Self::f_basis).
    fn f_coords(&self, a: &Self::Elem) -> Vec<RatFunc>;
    /// Ring generators over `F_p`; derivations and ring maps are fixed by
    /// their values here.
    fn generators(&self) -> Vec<Self::Elem>;
    /// A random element with entries of numerator and denominator degree at
    /// most `max_degree`.
    fn sample(&self, s: &mut Sampler, max_degree: usize) -> Self::Elem;

    fn from_f_coords(&self, coords: &[RatFunc]) -> Self::Elem {
        let basis = self.f_basis();
        assert_eq!(coords.len(), basis.len(), "coordinate length");
        coords
            .iter()
            .zip(&basis)
            .filter(|(c, _)| !c.is_zero())
            .fold(self.zero(), |acc, (c, b)| self.add(&acc, &self.mul(&self.scalar(c), b)))
    }

    fn is_constant(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.derive(a))
    }

    fn pow(&self, a: &Self::Elem, n: usize) -> Self::Elem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, a))
    }
}

/// `g(t) = t^{p^e} + a_1 t^{p^{e−1}} + … + a_e t` with constant `a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PPolynomial {
    p: u32,
    coeffs: Vec<RatFunc>,
}

impl PPolynomial {
    /// `coeffs = [a_1, …, a_e]`; the exponent `e` is `coeffs.len()`.
    pub fn new(p: u32, coeffs: Vec<RatFunc>) -> Self {
        assert!(coeffs.iter().all(|c| c.modulus() == p), "modulus mismatch");
        PPolynomial { p, coeffs }
    }

    /// `t^{p^e}`.
    pub fn pure(p: u32, e: usize) -> Self {
        Self::new(p, vec![RatFunc::zero(p); e])
    }

    /// `t^p − t`.
    pub fn artin_schreier(p: u32) -> Self {
        Self::new(p, vec![RatFunc::constant(p, -1)])
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn exponent(&self) -> usize {
        self.coeffs.len()
    }

    /// `p^e`.
    pub fn degree(&self) -> usize {
        (self.p as usize).pow(self.exponent() as u32)
    }

    /// `[a_1, …, a_e]`.
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    /// `(coefficient, exponent)` pairs with `a_0 = 1` first: `(a_i, p^{e−i})`.
    pub fn terms(&self) -> Vec<(RatFunc, usize)> {
        let e = self.exponent();
        let p = self.p as usize;
        std::iter::once(RatFunc::one(self.p))
            .chain(self.coeffs.iter().cloned())
            .enumerate()
            .map(|(i, a)| (a, p.pow((e - i) as u32)))
            .collect()
    }

    /// True when `g = t^p + a_1 t`.
    pub fn is_degree_p(&self) -> bool {
        self.exponent() == 1
    }

    /// `g(δ)(b)`.
    pub fn apply_operator(&self, k: &DerivedField, b: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero(self.p);
        for (a, n) in self.terms() {
            if !a.is_zero() {
                acc = &acc + &(&a * &k.derivation_power(b, n));
            }
        }
        acc
    }
}

fn fmt_coeff(c: &RatFunc) -> String {
    let s = c.to_string();
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, n) in self.terms() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = if n == 1 { "t".to_string() } else { format!("t^{n}") };
            if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&a), mono)?;
            }
        }
        Ok(())
    }
}

/// Finds constants `a_1, …, a_e` with `δ^{p^e} + a_1 δ^{p^{e−1}} + … + a_e δ = 0`
/// for this exact `e`, by an exact solve over `F` on the basis `1, x, …, x^{p−1}`.
///
/// `e = 0` asks whether `δ` itself vanishes. Fails with
/// [`Error::NoSolution`] when no such operator identity exists.
pub fn p_polynomial_of_exponent(k: &DerivedField, e: usize) -> Result<PPolynomial> {
    let p = k.modulus();
    let field = RatFuncField { p };
    let basis: Vec<RatFunc> = (0..p as usize).map(|j| RatFunc::monomial(p, 1, j)).collect();
    // powers[k][j] = δ^{p^k}(x^j), for k = 0..=e.
    let mut powers: Vec<Vec<RatFunc>> = Vec::with_capacity(e + 1);
    powers.push(basis.iter().map(|b| k.derivation_apply(b)).collect());
    for level in 1..=e {
        let step = (p as usize).pow(level as u32) - (p as usize).pow(level as u32 - 1);
        let next = powers[level - 1].iter().map(|v| k.derivation_power(v, step)).collect();
        powers.push(next);
    }
    // Unknown column i stands for a_{e−i}, multiplying δ^{p^i}.
    let rows = basis.len() * p as usize;
    let mut m = Matrix::filled(&field, rows, e);
    let mut rhs = Vec::with_capacity(rows);
    for j in 0..basis.len() {
        let top = k.coords_over_f(&powers[e][j]);
        for (r, c) in top.iter().enumerate() {
            rhs.push(-c);
            for i in 0..e {
                m.set(j * p as usize + r, i, k.coords_over_f(&powers[i][j])[r].clone());
            }
        }
    }
    let sol = linalg::solve(&field, &m, &rhs)?;
    let mut coeffs = vec![RatFunc::zero(p); e];
    for (i, v) in sol.particular.into_iter().enumerate() {
        coeffs[e - 1 - i] = v;
    }
    if let Some(bad) = coeffs.iter().find(|c| !k.is_constant(c)) {
        return Err(Error::InternalInvariantViolation(format!(
            "p-polynomial coefficient {bad} is not constant"
        )));
    }
    Ok(PPolynomial::new(p, coeffs))
}

/// The minimum p-polynomial of `δ` with exponent at most `max_e`.
pub fn minimal_p_polynomial(k: &DerivedField, max_e: usize) -> Result<PPolynomial> {
    if k.delta_of_x().is_zero() {
        return Err(Error::ZeroDerivation);
    }
    for e in 1..=max_e {
        match p_polynomial_of_exponent(k, e) {
            Ok(g) => {
                verify_annihilates(k, &g, 20, 0x5eed)?;
                return Ok(g);
            }
            Err(Error::NoSolution) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(Error::PPolynomialNotFound { max_e })
}

/// Checks `g(δ)(b) = 0` on the `F`-basis and on `samples` random elements.
pub fn verify_annihilates(k: &DerivedField, g: &PPolynomial, samples: usize, seed: u64) -> Result<()> {
    let p = k.modulus();
    let mut sampler = Sampler::new(p, seed);
    let basis = (0..p as usize).map(|j| RatFunc::monomial(p, 1, j));
    let random = (0..samples).map(|_| sampler.ratfunc(crate::sample::SAMPLE_DEGREE));
    for b in basis.chain(random.collect::<Vec<_>>()) {
        if !g.apply_operator(k, &b).is_zero() {
            return Err(Error::GNotAnnihilating);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::DensePoly;

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(
            minimal_p_polynomial(&DerivedField::standard(2), DEFAULT_MAX_E).unwrap(),
            PPolynomial::pure(2, 1)
        );
        assert_eq!(
            minimal_p_polynomial(&DerivedField::euler(3), DEFAULT_MAX_E).unwrap(),
            PPolynomial::artin_schreier(3)
        );
        assert_eq!(
            minimal_p_polynomial(&DerivedField::euler(2), DEFAULT_MAX_E).unwrap(),
            PPolynomial::artin_schreier(2)
        );
    }

    #[test]
    fn minimality_at_exponent_zero() {
        for k in [DerivedField::standard(2), DerivedField::euler(3)] {
            assert_eq!(p_polynomial_of_exponent(&k, 0), Err(Error::NoSolution));
        }
    }

    #[test]
    fn general_derivation_annihilated() {
        // δ(x) = x^2 + 1 over F_3.
        let k = DerivedField::new(RatFunc::from_poly(DensePoly::from_coeffs(3, &[1, 0, 1]))).unwrap();
        let g = minimal_p_polynomial(&k, DEFAULT_MAX_E).unwrap();
        assert_eq!(g.exponent(), 1);
        verify_annihilates(&k, &g, 200, 1).unwrap();
    }

    #[test]
    fn display() {
        assert_eq!(PPolynomial::artin_schreier(3).to_string(), "t^3 + 2*t");
        assert_eq!(PPolynomial::pure(2, 2).to_string(), "t^4");
    }
}

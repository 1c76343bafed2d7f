use std::fmt;

use super::{Element, ExtAlgebra};
use crate::diffpoly::DiffPoly;
use crate::error::{Error, Result};
use crate::scalars::{poly_gcd, DensePoly, RatFunc};
use crate::towers::{DerivedField, DiffRing};

/// Outcome of [`ExtAlgebra::linear_right_factor_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorSearch {
    /// `f = quotient·(t − b)`.
    Found { b: RatFunc, quotient: DiffPoly<RatFunc> },
    /// No `b` with numerator and denominator degree at most `bound` works.
    NoneFound { bound: usize },
}

/// Three-valued answer to "is `S_f` a division algebra".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionVerdict {
    DivisionProved,
    NotDivision { b: RatFunc },
    Unknown { bound: usize },
}

impl fmt::Display for DivisionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisionVerdict::DivisionProved => f.write_str("division (proved)"),
            DivisionVerdict::NotDivision { b } => write!(f, "not division (witness t - ({b}))"),
            DivisionVerdict::Unknown { bound } => write!(f, "unknown (bound {bound} exhausted)"),
        }
    }
}

/// The polynomial whose base-`p` digits, lowest first, are those of `index`.
fn poly_from_index(p: u32, mut index: u64) -> DensePoly {
    let mut coeffs = Vec::new();
    while index > 0 {
        coeffs.push((index % p as u64) as i64);
        index /= p as u64;
    }
    DensePoly::from_coeffs(p, &coeffs)
}

/// Candidates `b = u/v` with `deg u, deg v ≤ bound`, `v` monic and coprime to
/// `u`: small denominators first, and within each, numerators in base-`p`
/// order `1, x, x + 1, x², …` with `0` last.
fn candidates(p: u32, bound: usize) -> impl Iterator<Item = RatFunc> {
    let count = (p as u64).pow(bound as u32 + 1);
    let dens = (1..count).map(move |i| poly_from_index(p, i)).filter(DensePoly::is_monic);
    let zero = std::iter::once(RatFunc::zero(p));
    dens.flat_map(move |v| {
        (1..count).filter_map(move |i| {
            let u = poly_from_index(p, i);
            poly_gcd(&u, &v).is_one().then(|| RatFunc::new(u, v.clone()).expect("nonzero"))
        })
    })
    .chain(zero)
}

impl ExtAlgebra<DerivedField> {
    /// Looks for `b ∈ K` with `V_g(b) = d`, i.e. a right factor `t − b` of `f`.
    pub fn linear_right_factor_search(&self, bound: usize) -> Result<FactorSearch> {
        let k = self.base();
        for b in candidates(self.characteristic(), bound) {
            let v = self.ring().v_g(&b, self.g());
            if !k.is_constant(&v) {
                return Err(Error::InternalInvariantViolation(format!("V_g({b}) = {v} is not constant")));
            }
            if v != *self.d() {
                continue;
            }
            let lin = self.ring().from_coeffs(vec![-&b, RatFunc::one(self.characteristic())]);
            let (quotient, r) = self.ring().right_divide(self.f(), &lin)?;
            if !r.is_zero() {
                return Err(Error::InternalInvariantViolation(format!(
                    "V_g({b}) = d but t - b leaves remainder {r}"
                )));
            }
            return Ok(FactorSearch::Found { b, quotient });
        }
        Ok(FactorSearch::NoneFound { bound })
    }

    /// `V_g` maps `K` into `F`, so for `d ∉ F` there is no linear right
    /// factor at all; at degree 2 that makes `f` irreducible.
    pub fn division_verdict(&self, bound: usize) -> Result<DivisionVerdict> {
        match self.linear_right_factor_search(bound)? {
            FactorSearch::Found { b, .. } => Ok(DivisionVerdict::NotDivision { b }),
            FactorSearch::NoneFound { .. } if self.degree() == 2 && !self.d_is_constant() => {
                Ok(DivisionVerdict::DivisionProved)
            }
            FactorSearch::NoneFound { bound } => Ok(DivisionVerdict::Unknown { bound }),
        }
    }

    /// The isomorphism `h(t) ↦ h(t − a)` onto `(K, δ, d + V_g(a))`.
    pub fn iso_shift(&self, a: &RatFunc) -> Result<IsoShift> {
        let target_d = self.d() + &self.ring().v_g(a, self.g());
        let target = ExtAlgebra::new(self.base().clone(), self.g().clone(), target_d)?;
        Ok(IsoShift { a: a.clone(), target })
    }
}

/// `S_f → S_{f'}` given by `t ↦ t − a`.
#[derive(Debug)]
pub struct IsoShift {
    a: RatFunc,
    target: ExtAlgebra<DerivedField>,
}

impl IsoShift {
    pub fn shift(&self) -> &RatFunc {
        &self.a
    }

    pub fn target(&self) -> &ExtAlgebra<DerivedField> {
        &self.target
    }

    pub fn apply(&self, u: &Element<DerivedField>) -> Element<DerivedField> {
        let ring = self.target.ring();
        let one = ring.base().one();
        let h = ring.substitute(u.poly(), RatFunc::clone, &-&self.a, &one);
        self.target.element(h)
    }

    /// The shift by `−a` out of the target, which undoes this one.
    pub fn inverse(&self) -> Result<IsoShift> {
        self.target.iso_shift(&-&self.a)
    }
}

//! Automorphisms `H_{τ,c,ε}` of `S_f`, given on polynomials by
//! `Σ d_i t^i ↦ Σ τ(d_i)(εt + c)^i`.
//!
//! A descriptor is checked on ring generators only. This is enough because,
//! for a ring map `τ` and a central `ε`, the defect
//! `D(z) = c·τ(z) + ε·δ(τ(z)) − τ(z)·c − τ(δ(z))` satisfies
//! `D(z₁ + z₂) = D(z₁) + D(z₂)`, `D(z₁z₂) = D(z₁)τ(z₂) + τ(z₁)D(z₂)` and
//! `D(z⁻¹) = −τ(z⁻¹)D(z)τ(z⁻¹)`, so it vanishes on the field generated by the
//! generators once it vanishes on them.

use std::collections::HashMap;
use std::fmt;

use crate::dext::{Element, ExtAlgebra};
use crate::error::{Condition, Error, Result};
use crate::scalars::{DensePoly, RatFunc};
use crate::towers::{DerivedField, DiffRing};

/// The coefficient part `τ` of a descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingMap<E> {
    Identity,
    /// `z ↦ a⁻¹·z·a`.
    Conjugation { by: E, inverse: E },
}

impl<E: Clone> RingMap<E> {
    pub fn apply<R: DiffRing<Elem = E>>(&self, ring: &R, z: &E) -> E {
        match self {
            RingMap::Identity => z.clone(),
            RingMap::Conjugation { by, inverse } => ring.mul(&ring.mul(inverse, z), by),
        }
    }

    /// `self ∘ other`.
    pub fn compose<R: DiffRing<Elem = E>>(&self, ring: &R, other: &RingMap<E>) -> RingMap<E> {
        match (self, other) {
            (RingMap::Identity, m) | (m, RingMap::Identity) => m.clone(),
            (RingMap::Conjugation { by: a, inverse: ai }, RingMap::Conjugation { by: b, inverse: bi }) => {
                RingMap::Conjugation {
                    by: ring.mul(b, a),
                    inverse: ring.mul(ai, bi),
                }
            }
        }
    }
}

/// `H_{τ,c,ε}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoDescriptor<E> {
    pub tau: RingMap<E>,
    pub c: E,
    pub eps: E,
}

impl<E: fmt::Display> fmt::Display for AutoDescriptor<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau = match &self.tau {
            RingMap::Identity => "id".to_string(),
            RingMap::Conjugation { by, .. } => format!("i_({by})"),
        };
        write!(f, "H(tau = {tau}, c = {}, eps = {})", self.c, self.eps)
    }
}

pub type Descriptor<R> = AutoDescriptor<<R as DiffRing>::Elem>;

impl<E: Clone> AutoDescriptor<E> {
    pub fn identity<R: DiffRing<Elem = E>>(ring: &R) -> Self {
        AutoDescriptor {
            tau: RingMap::Identity,
            c: ring.zero(),
            eps: ring.one(),
        }
    }

    /// `(id, c, 1)`.
    pub fn shift<R: DiffRing<Elem = E>>(ring: &R, c: E) -> Self {
        AutoDescriptor {
            tau: RingMap::Identity,
            c,
            eps: ring.one(),
        }
    }
}

/// Validates `(τ, c, ε)` as an automorphism of `alg`.
///
/// Checks, in order: the compatibility rule `c·τ(z) + ε·δ(τ(z)) = τ(z)·c + τ(δ(z))`
/// on the generators, that `ε` is a central unit,
/// and that the substitution fixes `f`.
pub fn build_auto<R: DiffRing>(
    alg: &ExtAlgebra<R>,
    tau: RingMap<R::Elem>,
    c: R::Elem,
    eps: R::Elem,
) -> Result<Descriptor<R>> {
    let ring = alg.base();
    for z in ring.generators() {
        let tz = tau.apply(ring, &z);
        let lhs = ring.add(&ring.mul(&c, &tz), &ring.mul(&eps, &ring.derive(&tz)));
        let rhs = ring.add(&ring.mul(&tz, &c), &tau.apply(ring, &ring.derive(&z)));
        if lhs != rhs {
            return Err(Error::ConditionFailed(Condition::Eq1));
        }
    }
    let central = ring
        .generators()
        .iter()
        .all(|z| ring.mul(&eps, z) == ring.mul(z, &eps));
    if ring.inv(&eps).is_none() || !central {
        return Err(Error::ConditionFailed(Condition::UnitEpsilon));
    }
    let h = AutoDescriptor { tau, c, eps };
    if substitute(alg, &h, alg.f()) != *alg.f() {
        return Err(Error::ConditionFailed(Condition::FixesF));
    }
    Ok(h)
}

fn substitute<R: DiffRing>(
    alg: &ExtAlgebra<R>,
    h: &Descriptor<R>,
    poly: &crate::diffpoly::Poly<R>,
) -> crate::diffpoly::Poly<R> {
    let ring = alg.base();
    alg.ring().substitute(poly, |z| h.tau.apply(ring, z), &h.c, &h.eps)
}

/// `H(u)`, reduced mod_r `f`.
pub fn apply_auto<R: DiffRing>(alg: &ExtAlgebra<R>, h: &Descriptor<R>, u: &Element<R>) -> Element<R> {
    alg.element(substitute(alg, h, u.poly()))
}

/// `h1 ∘ h2` (apply `h2` first).
pub fn compose<R: DiffRing>(ring: &R, h1: &Descriptor<R>, h2: &Descriptor<R>) -> Descriptor<R> {
    let eps2 = h1.tau.apply(ring, &h2.eps);
    AutoDescriptor {
        tau: h1.tau.compose(ring, &h2.tau),
        c: ring.add(&ring.mul(&eps2, &h1.c), &h1.tau.apply(ring, &h2.c)),
        eps: ring.mul(&eps2, &h1.eps),
    }
}

/// Result of [`auto_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutoOrder {
    Order(usize),
    ExceedsBound(usize),
}

/// The least `k ≤ bound` with `H^k` the identity on the basis.
pub fn auto_order<R: DiffRing>(alg: &ExtAlgebra<R>, h: &Descriptor<R>, bound: usize) -> AutoOrder {
    assert!(bound >= 1, "bound must be positive");
    let mut images: Vec<Element<R>> = alg.basis().to_vec();
    for k in 1..=bound {
        images = images.iter().map(|u| apply_auto(alg, h, u)).collect();
        if images.as_slice() == alg.basis() {
            return AutoOrder::Order(k);
        }
    }
    AutoOrder::ExceedsBound(bound)
}

/// `G_a : u ↦ (a⁻¹∘u)∘a` as the descriptor `(i_a, a⁻¹δ(a), 1)`.
pub fn inner_auto<R: DiffRing>(alg: &ExtAlgebra<R>, a: &Element<R>) -> Result<Descriptor<R>> {
    if !alg.is_nuclear(a) {
        return Err(Error::NotNuclear);
    }
    let ring = alg.base();
    let coeff = match a.poly().degree() {
        None => return Err(Error::NotInvertible),
        Some(0) => a.poly().coeffs()[0].clone(),
        Some(_) => return Err(Error::NotInCoefficientRing),
    };
    let inv = ring.inv(&coeff).ok_or(Error::NotInvertible)?;
    let tau = if ring.is_commutative() {
        RingMap::Identity
    } else {
        RingMap::Conjugation { by: coeff.clone(), inverse: inv.clone() }
    };
    let c = ring.mul(&inv, &ring.derive(&coeff));
    build_auto(alg, tau, c, ring.one())
}

/// Whether `c` is a logarithmic derivative `δ(u)/u`, with a witness `u` when
/// one turned up in the bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDerivative {
    pub member: bool,
    pub witness: Option<RatFunc>,
}

fn monic_polys(p: u32, max_degree: usize) -> Vec<DensePoly> {
    let mut out = vec![DensePoly::one(p)];
    for deg in 1..=max_degree {
        let count = (p as u64).pow(deg as u32);
        for index in 0..count {
            let mut coeffs = Vec::with_capacity(deg + 1);
            let mut i = index;
            for _ in 0..deg {
                coeffs.push((i % p as u64) as i64);
                i /= p as u64;
            }
            coeffs.push(1);
            out.push(DensePoly::from_coeffs(p, &coeffs));
        }
    }
    out
}

/// `V_g(c) = 0` decides membership; when it holds, looks for `u = v/w`
/// with `v`, `w` monic of degree at most `witness_degree` and
/// `δ(v)/v − δ(w)/w = c`. A missing witness refutes nothing.
pub fn is_log_derivative(alg: &ExtAlgebra<DerivedField>, c: &RatFunc, witness_degree: usize) -> LogDerivative {
    let member = alg.ring().v_g(c, alg.g()).is_zero();
    if !member {
        return LogDerivative { member, witness: None };
    }
    let k = alg.base();
    let logs: Vec<(DensePoly, RatFunc)> = monic_polys(k.modulus(), witness_degree)
        .into_iter()
        .map(|v| {
            let l = k.log_derivative(&RatFunc::from_poly(v.clone())).expect("nonzero");
            (v, l)
        })
        .collect();
    let by_log: HashMap<&RatFunc, &DensePoly> = logs.iter().rev().map(|(v, l)| (l, v)).collect();
    // Small denominators first, so that polynomial witnesses win.
    let witness = logs.iter().find_map(|(w, l)| {
        by_log
            .get(&(l + c))
            .map(|v| RatFunc::new((*v).clone(), w.clone()).expect("nonzero"))
    });
    LogDerivative { member, witness }
}

/// The shape of `Aut((K, δ, d))` for a commutative base: `τ = id`, `ε = 1`,
/// and `c` ranging over the kernel of `V_g`.
#[derive(Debug)]
pub struct AutoConstraints<'a, R: DiffRing> {
    alg: &'a ExtAlgebra<R>,
    /// `(Y − x)^p = Y^p − x^p`, so `x` has a single `p`-th root of `x^p`
    /// and an `F`-automorphism of `K` fixes `x`.
    pub tau_is_identity: bool,
    /// With `τ = id`, the compatibility rule at `z = x` reads `(ε − 1)δ(x) = 0`.
    pub eps_is_one: bool,
}

impl<R: DiffRing> AutoConstraints<'_, R> {
    /// Whether `(id, c, 1)` belongs to the group.
    pub fn contains(&self, c: &R::Elem) -> bool {
        let ring = self.alg.base();
        ring.is_zero(&self.alg.ring().v_g(c, self.alg.g()))
    }

    pub fn summary(&self) -> String {
        "Aut = {H_{id,c} : V_g(c) = 0}".to_string()
    }
}

pub fn auto_constraints<R: DiffRing>(alg: &ExtAlgebra<R>) -> Result<AutoConstraints<'_, R>> {
    let ring = alg.base();
    if !ring.is_commutative() {
        return Err(Error::UnsupportedInstance(
            "automorphism classification needs a commutative coefficient field".into(),
        ));
    }
    let p = ring.characteristic();
    // (Y − 1)^p = Y^p − 1 in F_p[Y]: the middle binomial coefficients vanish.
    let lhs = DensePoly::from_coeffs(p, &[-1, 1]).pow(p as u64);
    let rhs = &DensePoly::monomial(p, 1, p as usize) - &DensePoly::one(p);
    let tau_is_identity = lhs == rhs;
    let k = ring.base();
    let eps_is_one = !k.derivation_apply(&k.x()).is_zero();
    Ok(AutoConstraints { alg, tau_is_identity, eps_is_one })
}

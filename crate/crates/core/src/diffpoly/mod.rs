//! The differential polynomial ring `A[t;δ]` with `ta = at + δ(a)`.
//!
//! Polynomials are written with coefficients on the left, `Σ a_i t^i`.
//! Only right division is provided: `g = q·f + r` with `deg r < deg f`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, RatFuncField};
use crate::scalars::RatFunc;
use crate::towers::{DiffRing, PPolynomial};

/// `Σ a_i t^i`, lowest degree first, with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffPoly<E> {
    coeffs: Vec<E>,
}

impl<E> DiffPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

fn wrap(s: String) -> String {
    if s.contains(' ') || s.contains('/') {
        format!("({s})")
    } else {
        s
    }
}

impl<E: fmt::Display> fmt::Display for DiffPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let s = c.to_string();
            if s == "0" {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            match (i, s.as_str()) {
                (0, _) => f.write_str(&s)?,
                (_, "1") => f.write_str(&mono)?,
                _ => write!(f, "{}*{}", wrap(s), mono)?,
            }
        }
        Ok(())
    }
}

/// `A[t;δ]` over a coefficient ring `A`.
#[derive(Clone, Debug)]
pub struct DiffPolyRing<R: DiffRing> {
    base: R,
}

pub type Poly<R> = DiffPoly<<R as DiffRing>::Elem>;

impl<R: DiffRing> DiffPolyRing<R> {
    pub fn new(base: R) -> Self {
        DiffPolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }

    /// Builds a polynomial from `[a_0, a_1, …]`, dropping trailing zeros.
    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        DiffPoly { coeffs }
    }

    pub fn zero(&self) -> Poly<R> {
        DiffPoly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<R> {
        self.constant(self.base.one())
    }

    pub fn t(&self) -> Poly<R> {
        self.monomial(self.base.one(), 1)
    }

    pub fn constant(&self, a: R::Elem) -> Poly<R> {
        self.from_coeffs(vec![a])
    }

    /// `a·t^n`.
    pub fn monomial(&self, a: R::Elem, n: usize) -> Poly<R> {
        let mut coeffs = vec![self.base.zero(); n];
        coeffs.push(a);
        self.from_coeffs(coeffs)
    }

    /// The coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, h: &Poly<R>, i: usize) -> R::Elem {
        h.coeffs.get(i).cloned().unwrap_or_else(|| self.base.zero())
    }

    fn zip(&self, a: &Poly<R>, b: &Poly<R>, op: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Poly<R> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n).map(|i| op(&self.coeff(a, i), &self.coeff(b, i))).collect();
        self.from_coeffs(coeffs)
    }

    pub fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        self.zip(a, b, |x, y| self.base.add(x, y))
    }

    pub fn sub(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        self.zip(a, b, |x, y| self.base.sub(x, y))
    }

    pub fn neg(&self, a: &Poly<R>) -> Poly<R> {
        self.from_coeffs(a.coeffs.iter().map(|c| self.base.neg(c)).collect())
    }

    /// `a·h`.
    pub fn left_scale(&self, a: &R::Elem, h: &Poly<R>) -> Poly<R> {
        self.from_coeffs(h.coeffs.iter().map(|c| self.base.mul(a, c)).collect())
    }

    /// `t·h = Σ (h_k t^{k+1} + δ(h_k) t^k)`.
    pub fn mul_t(&self, h: &Poly<R>) -> Poly<R> {
        let mut coeffs = vec![self.base.zero(); h.coeffs.len() + 1];
        for (k, c) in h.coeffs.iter().enumerate() {
            coeffs[k + 1] = self.base.add(&coeffs[k + 1], c);
            coeffs[k] = self.base.add(&coeffs[k], &self.base.derive(c));
        }
        self.from_coeffs(coeffs)
    }

    /// The product in `A[t;δ]`.
    pub fn mul(&self, f: &Poly<R>, g: &Poly<R>) -> Poly<R> {
        let mut acc = self.zero();
        let mut t_pow_g = g.clone();
        for (i, a) in f.coeffs.iter().enumerate() {
            if i > 0 {
                t_pow_g = self.mul_t(&t_pow_g);
            }
            if !self.base.is_zero(a) {
                acc = self.add(&acc, &self.left_scale(a, &t_pow_g));
            }
        }
        acc
    }

    pub fn pow(&self, h: &Poly<R>, n: usize) -> Poly<R> {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, h))
    }

    /// `g = q·f + r` with `deg r < deg f`.
    pub fn right_divide(&self, g: &Poly<R>, f: &Poly<R>) -> Result<(Poly<R>, Poly<R>)> {
        let n = f.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = self
            .base
            .inv(f.leading().expect("nonzero"))
            .ok_or(Error::NonInvertibleLeadingCoefficient)?;
        let top = match g.degree() {
            Some(m) if m >= n => m - n,
            _ => return Ok((self.zero(), g.clone())),
        };
        // shifted[m] = t^m · f
        let mut shifted = vec![f.clone()];
        for m in 1..=top {
            let next = self.mul_t(&shifted[m - 1]);
            shifted.push(next);
        }
        let mut q = vec![self.base.zero(); top + 1];
        let mut r = g.clone();
        while let Some(deg) = r.degree().filter(|&d| d >= n) {
            let m = deg - n;
            let a = self.base.mul(r.leading().expect("nonzero"), &lc_inv);
            r = self.sub(&r, &self.left_scale(&a, &shifted[m]));
            if r.degree() == Some(deg) {
                return Err(Error::InternalInvariantViolation(
                    "right division failed to lower the degree".into(),
                ));
            }
            q[m] = self.base.add(&q[m], &a);
        }
        Ok((self.from_coeffs(q), r))
    }

    /// `g mod_r f`.
    pub fn rem(&self, g: &Poly<R>, f: &Poly<R>) -> Result<Poly<R>> {
        self.right_divide(g, f).map(|(_, r)| r)
    }

    /// `Σ τ(h_i)·(εt + c)^i`, evaluated by Horner's rule from the top.
    pub fn substitute(
        &self,
        h: &Poly<R>,
        tau: impl Fn(&R::Elem) -> R::Elem,
        c: &R::Elem,
        eps: &R::Elem,
    ) -> Poly<R> {
        let lin = self.from_coeffs(vec![c.clone(), eps.clone()]);
        let mut acc = self.zero();
        for a in h.coeffs.iter().rev() {
            acc = self.mul(&acc, &lin);
            acc = self.add(&acc, &self.constant(tau(a)));
        }
        acc
    }

    /// `V_{p^e}(b)`, read off from `(t − b)^{p^e} = t^{p^e} − V_{p^e}(b)`.
    pub fn v_p_tower(&self, b: &R::Elem, e: usize) -> Result<R::Elem> {
        assert!(e >= 1, "e must be positive");
        let p = self.characteristic() as usize;
        let mut h = self.from_coeffs(vec![self.base.neg(b), self.base.one()]);
        for _ in 0..e {
            h = self.pow(&h, p);
        }
        let deg = p.pow(e as u32);
        if let Some(i) = (1..deg).find(|&i| !self.base.is_zero(&self.coeff(&h, i))) {
            return Err(Error::InternalInvariantViolation(format!(
                "coefficient of t^{i} in (t − b)^{deg} is nonzero"
            )));
        }
        Ok(self.base.neg(&self.coeff(&h, 0)))
    }

    /// `V_p(b)`.
    pub fn v_p(&self, b: &R::Elem) -> R::Elem {
        self.v_p_tower(b, 1).expect("(t − b)^p has no middle terms")
    }

    /// `V_g(b) = V_{p^e}(b) + a_1 V_{p^{e−1}}(b) + … + a_e b`.
    ///
    /// `V_{p^k}` is read off the expansion of `(t − b)^{p^k}`. Iterating `V_p`
    /// is only correct when level `k` uses the derivation `δ^{p^k}`, so no
    /// shortcut is taken above `e = 1`.
    pub fn v_g(&self, b: &R::Elem, g: &PPolynomial) -> R::Elem {
        let e = g.exponent();
        let mut iterates = vec![b.clone()];
        for k in 1..=e {
            iterates.push(self.v_p_tower(b, k).expect("(t − b)^{p^k} has no middle terms"));
        }
        let mut acc = iterates[e].clone();
        for (i, a) in g.coeffs().iter().enumerate() {
            if !a.is_zero() {
                let term = self.base.mul(&self.base.scalar(a), &iterates[e - 1 - i]);
                acc = self.base.add(&acc, &term);
            }
        }
        acc
    }

    /// `g(t)` as an element of the ring.
    pub fn from_ppoly(&self, g: &PPolynomial) -> Poly<R> {
        let mut coeffs = vec![self.base.zero(); g.degree() + 1];
        for (a, n) in g.terms() {
            coeffs[n] = self.base.add(&coeffs[n], &self.base.scalar(&a));
        }
        self.from_coeffs(coeffs)
    }

    /// `g(δ)(a)` for a ring element.
    pub fn apply_operator(&self, g: &PPolynomial, a: &R::Elem) -> R::Elem {
        let mut acc = self.base.zero();
        for (c, n) in g.terms() {
            if c.is_zero() {
                continue;
            }
            let mut d = a.clone();
            for _ in 0..n {
                d = self.base.derive(&d);
            }
            acc = self.base.add(&acc, &self.base.mul(&self.base.scalar(&c), &d));
        }
        acc
    }

    /// Whether `fR ⊆ Rf`. Since `a ↦ f·a mod_r f` is `F`-linear and
    /// multiplicative closure is automatic, testing `t` and an `F`-basis of
    /// `A` suffices.
    pub fn is_right_invariant(&self, f: &Poly<R>) -> Result<bool> {
        let mut probes = vec![self.t()];
        probes.extend(self.base.f_basis().into_iter().map(|b| self.constant(b)));
        for u in probes {
            if !self.rem(&self.mul(f, &u), f)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A constant `d_0` with `g(δ)(a) = d_0 a − a d_0` for all `a`.
    ///
    /// Both sides are derivations, so it is enough to match them on the
    /// ring generators; the unknowns are the `F`-coordinates of `d_0`.
    pub fn find_inner_constant(&self, g: &PPolynomial) -> Result<R::Elem> {
        let field = RatFuncField { p: self.characteristic() };
        let basis = self.base.f_basis();
        let n = basis.len();
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        let mut rhs: Vec<RatFunc> = Vec::new();
        for z in self.base.generators() {
            let target = self.base.f_coords(&self.apply_operator(g, &z));
            let cols: Vec<Vec<RatFunc>> = basis
                .iter()
                .map(|b| {
                    let comm = self.base.sub(&self.base.mul(b, &z), &self.base.mul(&z, b));
                    self.base.f_coords(&comm)
                })
                .collect();
            for (r, value) in target.into_iter().enumerate() {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
                rhs.push(value);
            }
        }
        // d_0 must be a constant.
        let derived: Vec<Vec<RatFunc>> = basis.iter().map(|b| self.base.f_coords(&self.base.derive(b))).collect();
        for r in 0..derived[0].len() {
            rows.push(derived.iter().map(|c| c[r].clone()).collect());
            rhs.push(RatFunc::zero(self.characteristic()));
        }
        let m = Matrix::from_rows(n, rows);
        let sol = linalg::solve(&field, &m, &rhs).map_err(|e| match e {
            Error::NoSolution => Error::NotInner,
            other => other,
        })?;
        Ok(self.base.from_f_coords(&sol.particular))
    }

    /// `z = g(t) − d_0`, which generates the center of `A[t;δ]` over `F`.
    pub fn center_generator(&self, g: &PPolynomial) -> Result<Poly<R>> {
        let d0 = self.find_inner_constant(g)?;
        Ok(self.sub(&self.from_ppoly(g), &self.constant(d0)))
    }
}

//! The algebra `S_f = A[t;δ]/A[t;δ]f` for `f = g(t) − d`, with product
//! `u∘v = uv mod_r f`.
//!
//! Everything linear is done over the constants `F` in the basis
//! `b_k t^i` (`b_k` running over an `F`-basis of `A`, `0 ≤ i < deg f`), using
//! a structure-constant table built once per algebra.

mod factor;
mod subspace;

use std::fmt;
use std::sync::OnceLock;

pub use factor::{DivisionVerdict, FactorSearch, IsoShift};
pub use subspace::FSubspace;

use crate::diffpoly::{DiffPoly, DiffPolyRing, Poly};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RatFuncField};
use crate::sample::Sampler;
use crate::scalars::RatFunc;
use crate::towers::{DiffRing, PPolynomial};

/// An element of `S_f`: a polynomial of degree below `deg f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<E> {
    poly: DiffPoly<E>,
}

impl<E> AlgebraElement<E> {
    pub fn poly(&self) -> &DiffPoly<E> {
        &self.poly
    }

    pub fn into_poly(self) -> DiffPoly<E> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl<E: fmt::Display> fmt::Display for AlgebraElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

pub type Element<R> = AlgebraElement<<R as DiffRing>::Elem>;

/// Which slot of the associator must vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Left,
    Middle,
    Right,
    /// All three.
    Full,
}

#[derive(Debug)]
pub struct ExtAlgebra<R: DiffRing> {
    ring: DiffPolyRing<R>,
    g: PPolynomial,
    d: R::Elem,
    f: Poly<R>,
    coeff_basis: Vec<R::Elem>,
    basis: Vec<Element<R>>,
    // table[a][b] = coordinates of basis[a]∘basis[b]
    table: Vec<Vec<Vec<RatFunc>>>,
    assoc: OnceLock<Vec<Vec<RatFunc>>>,
}

impl<R: DiffRing> ExtAlgebra<R> {
    /// Builds `S_f` for `f = g(t) − d`.
    pub fn new(base: R, g: PPolynomial, d: R::Elem) -> Result<Self> {
        if g.modulus() != base.characteristic() {
            return Err(Error::ModulusMismatch);
        }
        let ring = DiffPolyRing::new(base);
        let f = ring.sub(&ring.from_ppoly(&g), &ring.constant(d.clone()));
        let coeff_basis = ring.base().f_basis();
        let m = g.degree();
        let mut basis = Vec::with_capacity(m * coeff_basis.len());
        for i in 0..m {
            for b in &coeff_basis {
                basis.push(AlgebraElement { poly: ring.monomial(b.clone(), i) });
            }
        }
        let mut alg = ExtAlgebra {
            ring,
            g,
            d,
            f,
            coeff_basis,
            basis,
            table: Vec::new(),
            assoc: OnceLock::new(),
        };
        let mut table = Vec::with_capacity(alg.dim());
        for a in &alg.basis {
            let mut row = Vec::with_capacity(alg.dim());
            for b in &alg.basis {
                row.push(alg.coords(&alg.mul(a, b)));
            }
            table.push(row);
        }
        alg.table = table;
        Ok(alg)
    }

    pub fn ring(&self) -> &DiffPolyRing<R> {
        &self.ring
    }

    pub fn base(&self) -> &R {
        self.ring.base()
    }

    pub fn characteristic(&self) -> u32 {
        self.ring.characteristic()
    }

    pub fn g(&self) -> &PPolynomial {
        &self.g
    }

    pub fn d(&self) -> &R::Elem {
        &self.d
    }

    pub fn f(&self) -> &Poly<R> {
        &self.f
    }

    /// `deg f = p^e`.
    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    /// Dimension over `F`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element<R>] {
        &self.basis
    }

    /// `F`-basis of the coefficient ring, the `t^0` slice of [`basis`](Self::basis).
    pub fn coefficient_basis(&self) -> &[R::Elem] {
        &self.coeff_basis
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<RatFunc>>] {
        &self.table
    }

    /// Reduces `h` mod_r `f`.
    pub fn element(&self, h: Poly<R>) -> Element<R> {
        let poly = self.ring.rem(&h, &self.f).expect("f is monic");
        AlgebraElement { poly }
    }

    pub fn from_coeff(&self, a: R::Elem) -> Element<R> {
        self.element(self.ring.constant(a))
    }

    pub fn zero(&self) -> Element<R> {
        AlgebraElement { poly: self.ring.zero() }
    }

    pub fn one(&self) -> Element<R> {
        self.element(self.ring.one())
    }

    pub fn t(&self) -> Element<R> {
        self.element(self.ring.t())
    }

    pub fn add(&self, u: &Element<R>, v: &Element<R>) -> Element<R> {
        AlgebraElement { poly: self.ring.add(&u.poly, &v.poly) }
    }

    pub fn sub(&self, u: &Element<R>, v: &Element<R>) -> Element<R> {
        AlgebraElement { poly: self.ring.sub(&u.poly, &v.poly) }
    }

    /// `u∘v = uv mod_r f`.
    pub fn mul(&self, u: &Element<R>, v: &Element<R>) -> Element<R> {
        self.element(self.ring.mul(&u.poly, &v.poly))
    }

    /// `[u, v, w] = (u∘v)∘w − u∘(v∘w)`.
    pub fn associator(&self, u: &Element<R>, v: &Element<R>, w: &Element<R>) -> Element<R> {
        self.sub(&self.mul(&self.mul(u, v), w), &self.mul(u, &self.mul(v, w)))
    }

    pub fn commutator(&self, u: &Element<R>, v: &Element<R>) -> Element<R> {
        self.sub(&self.mul(u, v), &self.mul(v, u))
    }

    /// Coordinates over `F` in the order of [`basis`](Self::basis).
    pub fn coords(&self, u: &Element<R>) -> Vec<RatFunc> {
        let c: Vec<RatFunc> = (0..self.degree())
            .flat_map(|i| self.base().f_coords(&self.ring.coeff(&u.poly, i)))
            .collect();
        debug_assert!(self.all_constant(&c), "F-coordinates must be constants");
        c
    }

    fn all_constant(&self, c: &[RatFunc]) -> bool {
        let k = self.base().base();
        c.iter().all(|a| k.is_constant(a))
    }

    pub fn from_coords(&self, coords: &[RatFunc]) -> Element<R> {
        assert_eq!(coords.len(), self.dim(), "coordinate length");
        debug_assert!(self.all_constant(coords), "F-coordinates must be constants");
        let nb = self.coeff_basis.len();
        let coeffs = coords.chunks(nb).map(|c| self.base().from_f_coords(c)).collect();
        AlgebraElement { poly: self.ring.from_coeffs(coeffs) }
    }

    pub fn sample(&self, s: &mut Sampler, max_degree: usize) -> Element<R> {
        let coeffs = (0..self.degree()).map(|_| self.base().sample(s, max_degree)).collect();
        AlgebraElement { poly: self.ring.from_coeffs(coeffs) }
    }

    fn field(&self) -> RatFuncField {
        RatFuncField { p: self.characteristic() }
    }

    /// Product of coordinate vectors through the structure constants.
    pub fn mul_coords(&self, a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
        let n = self.dim();
        let mut out = vec![RatFunc::zero(self.characteristic()); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let s = ai * bj;
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o = &*o + &(&s * t);
                    }
                }
            }
        }
        out
    }

    /// Associators of basis triples, `[b_i, b_j, b_k]` at `(i·n + j)·n + k`.
    fn associator_tensor(&self) -> &[Vec<RatFunc>] {
        self.assoc.get_or_init(|| {
            let n = self.dim();
            let p = self.characteristic();
            let unit = |i: usize| {
                let mut v = vec![RatFunc::zero(p); n];
                v[i] = RatFunc::one(p);
                v
            };
            let mut out = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let left = self.mul_coords(&self.table[i][j], &unit(k));
                        let right = self.mul_coords(&unit(i), &self.table[j][k]);
                        out.push(left.iter().zip(&right).map(|(a, b)| a - b).collect());
                    }
                }
            }
            out
        })
    }

    pub fn basis_associator(&self, i: usize, j: usize, k: usize) -> &[RatFunc] {
        let n = self.dim();
        &self.associator_tensor()[(i * n + j) * n + k]
    }

    /// True when every basis associator vanishes.
    pub fn is_associative(&self) -> bool {
        self.associator_tensor().iter().all(|v| v.iter().all(RatFunc::is_zero))
    }

    /// An `F`-basis of the requested nucleus.
    pub fn nucleus(&self, which: Which) -> FSubspace {
        let n = self.dim();
        let slots: &[Which] = match which {
            Which::Full => &[Which::Left, Which::Middle, Which::Right],
            Which::Left => &[Which::Left],
            Which::Middle => &[Which::Middle],
            Which::Right => &[Which::Right],
        };
        let mut rows = Vec::new();
        for &slot in slots {
            for j in 0..n {
                for k in 0..n {
                    // Column u holds the associator with b_u in `slot`.
                    let cols: Vec<&[RatFunc]> = (0..n)
                        .map(|u| match slot {
                            Which::Left => self.basis_associator(u, j, k),
                            Which::Middle => self.basis_associator(j, u, k),
                            _ => self.basis_associator(j, k, u),
                        })
                        .collect();
                    push_rows(&mut rows, &cols, n);
                }
            }
        }
        FSubspace::kernel_of(self.field(), n, rows)
    }

    /// The center: nuclear elements commuting with every basis element.
    pub fn center(&self) -> FSubspace {
        let nuc = self.nucleus(Which::Full);
        let comm = self.centralizer(&self.basis);
        nuc.intersect(&comm)
    }

    /// `{u : u∘s = s∘u for all s ∈ set}`.
    pub fn centralizer(&self, set: &[Element<R>]) -> FSubspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for s in set {
            let cols: Vec<Vec<RatFunc>> = (0..n)
                .map(|u| {
                    let us = self.coords(&self.mul(&self.basis[u], s));
                    let su = self.coords(&self.mul(s, &self.basis[u]));
                    us.iter().zip(&su).map(|(a, b)| a - b).collect()
                })
                .collect();
            let refs: Vec<&[RatFunc]> = cols.iter().map(Vec::as_slice).collect();
            push_rows(&mut rows, &refs, n);
        }
        FSubspace::kernel_of(self.field(), n, rows)
    }

    /// The span of `A` itself, the `t^0` slice.
    pub fn coefficient_subspace(&self) -> FSubspace {
        let p = self.characteristic();
        let n = self.dim();
        let vecs = (0..self.coeff_basis.len())
            .map(|k| {
                let mut v = vec![RatFunc::zero(p); n];
                v[k] = RatFunc::one(p);
                v
            })
            .collect();
        FSubspace::span(self.field(), n, vecs)
    }

    pub fn subspace_of(&self, elems: &[Element<R>]) -> FSubspace {
        FSubspace::span(self.field(), self.dim(), elems.iter().map(|u| self.coords(u)).collect())
    }

    /// Whether `u` associates with everything in every slot.
    pub fn is_nuclear(&self, u: &Element<R>) -> bool {
        for a in &self.basis {
            for b in &self.basis {
                let zero = |v: Element<R>| v.is_zero();
                if !zero(self.associator(u, a, b)) || !zero(self.associator(a, u, b)) || !zero(self.associator(a, b, u)) {
                    return false;
                }
            }
        }
        true
    }

    /// Matrix of `v ↦ u∘v` in the basis (column `j` is `u∘b_j`).
    pub fn left_mul_matrix(&self, u: &Element<R>) -> Matrix<RatFunc> {
        let n = self.dim();
        let cu = self.coords(u);
        let cols: Vec<Vec<RatFunc>> = (0..n)
            .map(|j| {
                let mut e = vec![RatFunc::zero(self.characteristic()); n];
                e[j] = RatFunc::one(self.characteristic());
                self.mul_coords(&cu, &e)
            })
            .collect();
        let entries = (0..n).flat_map(|r| cols.iter().map(move |c| c[r].clone())).collect();
        Matrix::new(n, n, entries)
    }

    /// Whether `v ↦ u∘v` has trivial kernel.
    pub fn left_mul_is_injective(&self, u: &Element<R>) -> bool {
        crate::linalg::kernel(&self.field(), &self.left_mul_matrix(u)).is_empty()
    }

    /// Whether `d` is a constant, i.e. lies in `F` (or `F`-scalars for the
    /// matrix adapter).
    pub fn d_is_constant(&self) -> bool {
        self.base()
            .as_scalar(&self.d)
            .is_some_and(|k| self.base().base().is_constant(&k))
    }
}

/// Appends one row per output coordinate, reading column `u` from `cols[u]`,
/// skipping rows that are identically zero.
fn push_rows(rows: &mut Vec<Vec<RatFunc>>, cols: &[impl AsRef<[RatFunc]>], n: usize) {
    let len = cols.first().map_or(0, |c| c.as_ref().len());
    for r in 0..len {
        if cols.iter().all(|c| c.as_ref()[r].is_zero()) {
            continue;
        }
        let row: Vec<RatFunc> = cols.iter().map(|c| c.as_ref()[r].clone()).collect();
        debug_assert_eq!(row.len(), n);
        rows.push(row);
    }
}

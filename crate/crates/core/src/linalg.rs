//! Exact dense linear algebra over an abstract field.
//!
//! Elimination always produces the reduced row echelon form, which is unique,
//! so kernels and particular solutions do not depend on the pivot rule or on
//! whether the fraction-free path was taken.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::scalars::{poly_gcd, DensePoly, Fp, PrimeField, RatFunc};

/// Field operations used by the solvers.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Size measure for the smallest-entry pivot heuristic.
    fn size(&self, _a: &Self::Elem) -> usize {
        0
    }

    /// Rescales a row by a nonzero factor to make entries simpler, e.g. by
    /// clearing denominators. Must not change the row's span.
    fn normalize_row(&self, _row: &mut [Self::Elem]) {}
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        PrimeField::zero(self)
    }
    fn one(&self) -> Fp {
        PrimeField::one(self)
    }
    fn is_zero(&self, a: &Fp) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        *a + *b
    }
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        *a - *b
    }
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        *a * *b
    }
    fn neg(&self, a: &Fp) -> Fp {
        -*a
    }
    fn inv(&self, a: &Fp) -> Option<Fp> {
        a.inv().ok()
    }
}

/// The field `F_p(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatFuncField {
    pub p: u32,
}

impl Field for RatFuncField {
    type Elem = RatFunc;

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
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a * b
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        -a
    }
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        a.inv().ok()
    }
    fn size(&self, a: &RatFunc) -> usize {
        a.weight()
    }

    fn normalize_row(&self, row: &mut [RatFunc]) {
        // Multiply through by the lcm of the denominators.
        let mut lcm = DensePoly::one(self.p);
        for a in row.iter().filter(|a| !a.is_zero()) {
            let den = a.denominator();
            let g = poly_gcd(&lcm, den);
            lcm = &lcm * &den.div_rem(&g).unwrap().0;
        }
        if lcm.is_one() {
            return;
        }
        let scale = RatFunc::from_poly(lcm);
        for a in row.iter_mut() {
            *a = &*a * &scale;
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entries length must be rows × cols");
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let entries: Vec<T> = rows
            .into_iter()
            .inspect(|r| assert_eq!(r.len(), cols, "ragged rows"))
            .flatten()
            .collect();
        Matrix::new(n, cols, entries)
    }

    pub fn filled<F: Field<Elem = T>>(field: &F, rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![field.zero(); rows * cols])
    }

    pub fn identity<F: Field<Elem = T>>(field: &F, n: usize) -> Self {
        let mut m = Self::filled(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }
}

pub fn mat_vec<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(v.len(), m.cols);
    (0..m.rows)
        .map(|r| {
            m.row(r)
                .iter()
                .zip(v)
                .filter(|(a, b)| !field.is_zero(a) && !field.is_zero(b))
                .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// First nonzero entry scanning down the column.
    #[default]
    FirstNonzero,
    /// Nonzero entry of smallest [`Field::size`], ties broken by position.
    SmallestEntry,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EliminationOptions {
    pub pivot: PivotRule,
    /// Forward elimination without divisions (Bareiss), normalizing only at
    /// the end.
    pub fraction_free: bool,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

fn choose_pivot<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    col: usize,
    from: usize,
    rule: PivotRule,
) -> Option<usize> {
    let mut candidates = (from..m.rows).filter(|&r| !field.is_zero(m.get(r, col)));
    match rule {
        PivotRule::FirstNonzero => candidates.next(),
        PivotRule::SmallestEntry => candidates.min_by_key(|&r| (field.size(m.get(r, col)), r)),
    }
}

fn swap_rows<T>(m: &mut Matrix<T>, a: usize, b: usize) {
    if a == b {
        return;
    }
    let cols = m.cols;
    for c in 0..cols {
        m.entries.swap(a * cols + c, b * cols + c);
    }
}

fn scale_row<F: Field>(field: &F, m: &mut Matrix<F::Elem>, r: usize, s: &F::Elem) {
    for c in 0..m.cols {
        let v = field.mul(m.get(r, c), s);
        m.set(r, c, v);
    }
}

/// `row[target] -= factor · row[source]`
fn eliminate<F: Field>(field: &F, m: &mut Matrix<F::Elem>, target: usize, source: usize, factor: &F::Elem) {
    for c in 0..m.cols {
        let s = m.get(source, c);
        if field.is_zero(s) {
            continue;
        }
        let v = field.sub(m.get(target, c), &field.mul(factor, s));
        m.set(target, c, v);
    }
}

fn normalize_rows<F: Field>(field: &F, m: &mut Matrix<F::Elem>) {
    let cols = m.cols;
    for r in 0..m.rows {
        field.normalize_row(&mut m.entries[r * cols..(r + 1) * cols]);
    }
}

fn gauss_jordan<F: Field>(field: &F, m: &mut Matrix<F::Elem>, rule: PivotRule) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = choose_pivot(field, m, col, r, rule) else {
            continue;
        };
        swap_rows(m, r, pr);
        let inv = field.inv(m.get(r, col)).expect("nonzero pivot is invertible");
        scale_row(field, m, r, &inv);
        for i in 0..m.rows {
            if i != r && !field.is_zero(m.get(i, col)) {
                let factor = m.get(i, col).clone();
                eliminate(field, m, i, r, &factor);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

fn bareiss<F: Field>(field: &F, m: &mut Matrix<F::Elem>, rule: PivotRule) -> Vec<usize> {
    normalize_rows(field, m);
    let mut pivots = Vec::new();
    let mut prev = field.one();
    let mut r = 0;
    for col in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pr) = choose_pivot(field, m, col, r, rule) else {
            continue;
        };
        swap_rows(m, r, pr);
        let piv = m.get(r, col).clone();
        let prev_inv = field.inv(&prev).expect("previous pivot is nonzero");
        for i in r + 1..m.rows {
            let lead = m.get(i, col).clone();
            for c in col..m.cols {
                let v = field.sub(
                    &field.mul(&piv, m.get(i, c)),
                    &field.mul(&lead, m.get(r, c)),
                );
                m.set(i, c, field.mul(&v, &prev_inv));
            }
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    // Back substitution to the reduced form.
    for (i, &col) in pivots.iter().enumerate().rev() {
        let inv = field.inv(m.get(i, col)).expect("nonzero pivot is invertible");
        scale_row(field, m, i, &inv);
        for k in 0..i {
            if !field.is_zero(m.get(k, col)) {
                let factor = m.get(k, col).clone();
                eliminate(field, m, k, i, &factor);
            }
        }
    }
    pivots
}

pub fn rref_with<F: Field>(field: &F, m: &Matrix<F::Elem>, opts: EliminationOptions) -> Echelon<F::Elem> {
    let mut reduced = m.clone();
    let pivots = if opts.fraction_free {
        bareiss(field, &mut reduced, opts.pivot)
    } else {
        gauss_jordan(field, &mut reduced, opts.pivot)
    };
    Echelon { reduced, pivots }
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    rref_with(field, m, EliminationOptions::default())
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    rref(field, m).pivots.len()
}

fn kernel_from_rref<F: Field>(field: &F, e: &Echelon<F::Elem>, cols: usize) -> Vec<Vec<F::Elem>> {
    let mut is_pivot = vec![false; cols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (i, &pc) in e.pivots.iter().enumerate() {
                v[pc] = field.neg(e.reduced.get(i, free));
            }
            v
        })
        .collect()
}

pub fn kernel_with<F: Field>(field: &F, m: &Matrix<F::Elem>, opts: EliminationOptions) -> Vec<Vec<F::Elem>> {
    let e = rref_with(field, m, opts);
    kernel_from_rref(field, &e, m.cols)
}

/// Basis of `{v : M·v = 0}`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    kernel_with(field, m, EliminationOptions::default())
}

/// A particular solution plus a basis of the homogeneous solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<T> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

pub fn solve_with<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    b: &[F::Elem],
    opts: EliminationOptions,
) -> Result<Solution<F::Elem>> {
    assert_eq!(b.len(), m.rows, "right-hand side length must equal rows");
    let cols = m.cols;
    let mut aug = Vec::with_capacity(m.rows * (cols + 1));
    for r in 0..m.rows {
        aug.extend_from_slice(m.row(r));
        aug.push(b[r].clone());
    }
    let aug = Matrix::new(m.rows, cols + 1, aug);
    let e = rref_with(field, &aug, opts);
    if e.pivots.last() == Some(&cols) {
        return Err(Error::NoSolution);
    }
    let mut particular = vec![field.zero(); cols];
    for (i, &pc) in e.pivots.iter().enumerate() {
        particular[pc] = e.reduced.get(i, cols).clone();
    }
    Ok(Solution {
        particular,
        kernel: kernel_from_rref(field, &e, cols),
    })
}

pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Solution<F::Elem>> {
    solve_with(field, m, b, EliminationOptions::default())
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    assert_eq!(m.rows, m.cols, "inverse needs a square matrix");
    let n = m.rows;
    let mut aug = Vec::with_capacity(n * 2 * n);
    for r in 0..n {
        aug.extend_from_slice(m.row(r));
        aug.extend((0..n).map(|c| if c == r { field.one() } else { field.zero() }));
    }
    let e = rref(field, &Matrix::new(n, 2 * n, aug));
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    let entries = (0..n)
        .flat_map(|r| e.reduced.row(r)[n..].to_vec())
        .collect();
    Some(Matrix::new(n, n, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    fn k2() -> RatFuncField {
        RatFuncField { p: 2 }
    }

    fn all_options() -> Vec<EliminationOptions> {
        let mut v = Vec::new();
        for pivot in [PivotRule::FirstNonzero, PivotRule::SmallestEntry] {
            for fraction_free in [false, true] {
                v.push(EliminationOptions { pivot, fraction_free });
            }
        }
        v
    }

    #[test]
    fn kernel_examples() {
        let f = k2();
        assert!(kernel(&f, &Matrix::identity(&f, 2)).is_empty());
        let z = Matrix::filled(&f, 2, 2);
        let k = kernel(&f, &z);
        assert_eq!(k, vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]]);

        // [[1, x], [x, x^2]] has kernel spanned by (x, 1) over F_2(x).
        let x = RatFunc::x(2);
        let m = Matrix::from_rows(2, vec![vec![f.one(), x.clone()], vec![x.clone(), &x * &x]]);
        assert_eq!(kernel(&f, &m), vec![vec![x.clone(), f.one()]]);
        assert_eq!(rank(&f, &m), 1);
    }

    #[test]
    fn solve_examples() {
        let f = k2();
        let x = RatFunc::x(2);
        let b = vec![x.clone(), f.one()];
        let sol = solve(&f, &Matrix::identity(&f, 2), &b).unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.kernel.is_empty());

        assert_eq!(solve(&f, &Matrix::filled(&f, 2, 2), &b), Err(Error::NoSolution));

        let m = Matrix::new(1, 1, vec![x.clone()]);
        let sol = solve(&f, &m, &[&x * &x]).unwrap();
        assert_eq!(sol.particular, vec![x]);
    }

    #[test]
    fn zero_column_system() {
        let f = k2();
        let m: Matrix<RatFunc> = Matrix::new(2, 0, vec![]);
        assert_eq!(solve(&f, &m, &[f.zero(), f.one()]), Err(Error::NoSolution));
        assert!(solve(&f, &m, &[f.zero(), f.zero()]).is_ok());
    }

    fn random_matrix(s: &mut Sampler, rows: usize, cols: usize) -> Matrix<RatFunc> {
        // Low-rank products exercise the kernel paths.
        let inner = 1 + s.index(rows.min(cols));
        let a: Vec<RatFunc> = (0..rows * inner).map(|_| s.ratfunc(2)).collect();
        let b: Vec<RatFunc> = (0..inner * cols).map(|_| s.ratfunc(2)).collect();
        let mut m = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let mut acc = RatFunc::zero(s.modulus());
                for k in 0..inner {
                    acc = &acc + &(&a[r * inner + k] * &b[k * cols + c]);
                }
                m.push(acc);
            }
        }
        Matrix::new(rows, cols, m)
    }

    #[test]
    fn rank_nullity_and_exact_residuals() {
        for p in [2u32, 3] {
            let f = RatFuncField { p };
            let mut s = Sampler::new(p, 77);
            for _ in 0..60 {
                let (rows, cols) = (1 + s.index(4), 1 + s.index(4));
                let m = random_matrix(&mut s, rows, cols);
                let k = kernel(&f, &m);
                assert_eq!(rank(&f, &m) + k.len(), cols);
                for v in &k {
                    assert!(mat_vec(&f, &m, v).iter().all(|e| e.is_zero()));
                }
                let x: Vec<RatFunc> = (0..cols).map(|_| s.ratfunc(2)).collect();
                let b = mat_vec(&f, &m, &x);
                let sol = solve(&f, &m, &b).unwrap();
                assert_eq!(mat_vec(&f, &m, &sol.particular), b);
                for v in &sol.kernel {
                    let shifted: Vec<RatFunc> =
                        sol.particular.iter().zip(v).map(|(a, b)| a + b).collect();
                    assert_eq!(mat_vec(&f, &m, &shifted), b);
                }
            }
        }
    }

    #[test]
    fn elimination_options_agree() {
        let f = RatFuncField { p: 3 };
        let mut s = Sampler::new(3, 4);
        for _ in 0..40 {
            let m = random_matrix(&mut s, 3, 4);
            let reference = rref(&f, &m);
            for opts in all_options() {
                let e = rref_with(&f, &m, opts);
                assert_eq!(e.pivots, reference.pivots);
                assert_eq!(e.reduced, reference.reduced);
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = RatFuncField { p: 5 };
        let mut s = Sampler::new(5, 8);
        let mut seen = 0;
        while seen < 20 {
            let m = Matrix::new(3, 3, (0..9).map(|_| s.ratfunc(2)).collect());
            let Some(inv) = inverse(&f, &m) else { continue };
            seen += 1;
            for c in 0..3 {
                let col: Vec<RatFunc> = (0..3).map(|r| inv.get(r, c).clone()).collect();
                let prod = mat_vec(&f, &m, &col);
                for (r, v) in prod.iter().enumerate() {
                    assert_eq!(v.is_one(), r == c);
                    assert_eq!(v.is_zero(), r != c);
                }
            }
        }
    }

    #[test]
    fn prime_field_backend() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(
            3,
            vec![
                vec![f.element(1), f.element(2), f.element(3)],
                vec![f.element(2), f.element(4), f.element(6)],
            ],
        );
        assert_eq!(rank(&f, &m), 1);
        assert_eq!(kernel(&f, &m).len(), 2);
    }
}

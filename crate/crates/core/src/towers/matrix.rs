use std::fmt;

use super::{DerivedField, DiffRing};
use crate::linalg::{self, Matrix, RatFuncField};
use crate::sample::Sampler;
use crate::scalars::RatFunc;

/// An `n × n` matrix over `K`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KMatrix {
    n: usize,
    entries: Vec<RatFunc>,
}

impl KMatrix {
    pub fn new(n: usize, entries: Vec<RatFunc>) -> Self {
        assert_eq!(entries.len(), n * n, "entries length must be n²");
        KMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFunc {
        &self.entries[r * self.n + c]
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> KMatrix {
        KMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &KMatrix, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> KMatrix {
        assert_eq!(self.n, other.n, "size mismatch");
        KMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.n {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.n {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `M_n(K)` with the entrywise derivation.
///
/// Not a division ring; it exists to exercise the noncommutative code paths
/// (commutator terms in `V_p`, conjugation as `τ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRing {
    n: usize,
    base: DerivedField,
}

impl MatrixRing {
    pub fn new(n: usize, base: DerivedField) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        MatrixRing { n, base }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn from_entries(&self, entries: Vec<RatFunc>) -> KMatrix {
        KMatrix::new(self.n, entries)
    }

    /// `E_{rc}`.
    pub fn unit(&self, r: usize, c: usize) -> KMatrix {
        let p = self.base.modulus();
        let mut entries = vec![RatFunc::zero(p); self.n * self.n];
        entries[r * self.n + c] = RatFunc::one(p);
        KMatrix::new(self.n, entries)
    }
}

impl DiffRing for MatrixRing {
    type Elem = KMatrix;

    fn characteristic(&self) -> u32 {
        self.base.modulus()
    }
    fn base(&self) -> &DerivedField {
        &self.base
    }
    fn zero(&self) -> KMatrix {
        self.scalar(&RatFunc::zero(self.base.modulus()))
    }
    fn one(&self) -> KMatrix {
        self.scalar(&RatFunc::one(self.base.modulus()))
    }
    fn is_zero(&self, a: &KMatrix) -> bool {
        a.entries.iter().all(RatFunc::is_zero)
    }
    fn add(&self, a: &KMatrix, b: &KMatrix) -> KMatrix {
        a.zip(b, |x, y| x + y)
    }
    fn sub(&self, a: &KMatrix, b: &KMatrix) -> KMatrix {
        a.zip(b, |x, y| x - y)
    }
    fn neg(&self, a: &KMatrix) -> KMatrix {
        a.map(|x| -x)
    }
    fn mul(&self, a: &KMatrix, b: &KMatrix) -> KMatrix {
        let n = self.n;
        let p = self.base.modulus();
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = RatFunc::zero(p);
                for k in 0..n {
                    let (x, y) = (a.get(r, k), b.get(k, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                entries.push(acc);
            }
        }
        KMatrix::new(n, entries)
    }
    fn inv(&self, a: &KMatrix) -> Option<KMatrix> {
        let field = RatFuncField { p: self.base.modulus() };
        let m = Matrix::new(self.n, self.n, a.entries.clone());
        linalg::inverse(&field, &m).map(|inv| KMatrix::new(self.n, inv.entries().to_vec()))
    }
    fn derive(&self, a: &KMatrix) -> KMatrix {
        a.map(|x| self.base.derivation_apply(x))
    }
    fn scalar(&self, k: &RatFunc) -> KMatrix {
        let p = self.base.modulus();
        let entries = (0..self.n * self.n)
            .map(|i| if i % (self.n + 1) == 0 { k.clone() } else { RatFunc::zero(p) })
            .collect();
        KMatrix::new(self.n, entries)
    }
    fn as_scalar(&self, a: &KMatrix) -> Option<RatFunc> {
        let k = a.get(0, 0).clone();
        (*a == self.scalar(&k)).then_some(k)
    }
    fn is_commutative(&self) -> bool {
        self.n == 1
    }
    fn f_basis(&self) -> Vec<KMatrix> {
        let mut out = Vec::new();
        for r in 0..self.n {
            for c in 0..self.n {
                for b in self.base.f_basis() {
                    out.push(self.mul(&self.unit(r, c), &self.scalar(&b)));
                }
            }
        }
        out
    }
    fn f_coords(&self, a: &KMatrix) -> Vec<RatFunc> {
        a.entries.iter().flat_map(|e| self.base.coords_over_f(e)).collect()
    }
    fn generators(&self) -> Vec<KMatrix> {
        let mut gens = vec![self.scalar(&self.base.x())];
        for r in 0..self.n {
            for c in 0..self.n {
                gens.push(self.unit(r, c));
            }
        }
        gens
    }
    fn sample(&self, s: &mut Sampler, max_degree: usize) -> KMatrix {
        self.from_entries((0..self.n * self.n).map(|_| s.ratfunc(max_degree)).collect())
    }
}

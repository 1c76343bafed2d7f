use crate::linalg::{self, Field, Matrix, RatFuncField};
use crate::scalars::RatFunc;

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row echelon
/// form. That form is unique, so equality of subspaces is equality of values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSubspace {
    ambient: usize,
    rows: Vec<Vec<RatFunc>>,
}

fn echelon_rows(field: RatFuncField, n: usize, rows: Vec<Vec<RatFunc>>) -> Vec<Vec<RatFunc>> {
    if rows.is_empty() {
        return rows;
    }
    let m = Matrix::from_rows(n, rows);
    let e = linalg::rref(&field, &m);
    (0..e.pivots.len()).map(|r| e.reduced.row(r).to_vec()).collect()
}

/// Independent rows with the same span, reducing in batches so that long
/// systems never sit in one matrix.
fn reduce_rows(field: RatFuncField, n: usize, rows: Vec<Vec<RatFunc>>) -> Vec<Vec<RatFunc>> {
    let mut acc: Vec<Vec<RatFunc>> = Vec::new();
    let mut batch = Vec::new();
    for row in rows {
        batch.push(row);
        if batch.len() >= 2 * n.max(1) {
            acc.append(&mut batch);
            acc = echelon_rows(field, n, acc);
            if acc.len() == n {
                return acc;
            }
        }
    }
    acc.append(&mut batch);
    echelon_rows(field, n, acc)
}

impl FSubspace {
    pub fn span(field: RatFuncField, ambient: usize, vectors: Vec<Vec<RatFunc>>) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length");
        FSubspace {
            ambient,
            rows: reduce_rows(field, ambient, vectors),
        }
    }

    /// `{v : r·v = 0 for every row r}`.
    pub fn kernel_of(field: RatFuncField, ambient: usize, rows: Vec<Vec<RatFunc>>) -> Self {
        let reduced = reduce_rows(field, ambient, rows);
        let kernel = if reduced.is_empty() {
            (0..ambient)
                .map(|i| {
                    let mut v = vec![field.zero(); ambient];
                    v[i] = field.one();
                    v
                })
                .collect()
        } else {
            linalg::kernel(&field, &Matrix::from_rows(ambient, reduced))
        };
        Self::span(field, ambient, kernel)
    }

    fn field(&self) -> RatFuncField {
        let p = self.rows.first().and_then(|r| r.first()).map_or(2, |c| c.modulus());
        RatFuncField { p }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// The canonical basis.
    pub fn basis(&self) -> &[Vec<RatFunc>] {
        &self.rows
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        if v.iter().all(RatFunc::is_zero) {
            return true;
        }
        let field = RatFuncField { p: v.iter().find(|c| !c.is_zero()).unwrap().modulus() };
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        linalg::rank(&field, &Matrix::from_rows(self.ambient, rows)) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &FSubspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// `{c : c·v = 0 for all v in self}`.
    fn annihilator(&self, field: RatFuncField) -> Vec<Vec<RatFunc>> {
        if self.rows.is_empty() {
            return (0..self.ambient)
                .map(|i| {
                    let mut v = vec![field.zero(); self.ambient];
                    v[i] = field.one();
                    v
                })
                .collect();
        }
        linalg::kernel(&field, &Matrix::from_rows(self.ambient, self.rows.clone()))
    }

    pub fn intersect(&self, other: &FSubspace) -> FSubspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension");
        let field = if self.rows.is_empty() { other.field() } else { self.field() };
        let mut rows = self.annihilator(field);
        rows.extend(other.annihilator(field));
        Self::kernel_of(field, self.ambient, rows)
    }
}

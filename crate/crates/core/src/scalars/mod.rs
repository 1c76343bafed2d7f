//! Exact arithmetic in `F_p`, `F_p[x]` and `F_p(x)`.

mod poly;
mod prime;
mod ratfunc;

pub use poly::{poly_gcd, DensePoly};
pub use prime::{Fp, PrimeField, MAX_MODULUS};
pub use ratfunc::RatFunc;

/// Canonical representative of `num / den`.
pub fn ratfunc_canonical(num: DensePoly, den: DensePoly) -> crate::Result<RatFunc> {
    RatFunc::new(num, den)
}

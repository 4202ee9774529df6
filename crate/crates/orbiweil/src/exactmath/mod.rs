//! Exact arithmetic: integer/rational polynomials, cyclotomic numbers,
//! matrices over cyclotomic fields.

mod poly;
mod cyclotomic;
mod matrix;

pub use poly::{
    cache_preload, cache_snapshot, cyclotomic_polynomial, divisors, order_cap, phi,
    set_order_cap, DEFAULT_ORDER_CAP,
};
pub use cyclotomic::{ArithOp, CyclotomicNumber};
pub use matrix::CycloMatrix;

pub use num::BigRational as Rat;
pub use num::BigInt;

/// `a/b` as an exact rational.
pub fn rat(a: i64, b: i64) -> Rat {
    Rat::new(BigInt::from(a), BigInt::from(b))
}

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

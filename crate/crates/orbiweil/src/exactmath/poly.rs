//! Polynomial helpers and the cyclotomic polynomial cache.
//!
//! Polynomials are little-endian coefficient vectors: index `i` holds the
//! coefficient of `x^i`. The zero polynomial is the empty vector.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num::traits::{One, Zero};
use num::{BigInt, BigRational};

use crate::error::{Error, Result};

/// Default bound on cyclotomic orders, see [`set_order_cap`].
pub const DEFAULT_ORDER_CAP: u64 = 10_000;

static ORDER_CAP: AtomicU64 = AtomicU64::new(DEFAULT_ORDER_CAP);

/// Current bound on cyclotomic orders.
pub fn order_cap() -> u64 {
    ORDER_CAP.load(Ordering::Relaxed)
}

/// Adjusts the bound on cyclotomic orders. Anything that would need `Phi_n`
/// for `n` beyond the cap fails with [`Error::OrderCap`] instead of chewing
/// through memory; the cap exists because orders grow multiplicatively under
/// mixed-order arithmetic.
pub fn set_order_cap(cap: u64) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

/// Euler totient of `n >= 1`.
pub fn phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `n >= 1` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub(crate) fn int_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn rat_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Long division of `num` by a monic integer divisor. Returns
/// `(quotient, remainder)` with `deg remainder < deg den`.
pub(crate) fn int_divmod_monic(num: &[BigInt], den: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(
        den.last().is_some_and(One::is_one),
        "divisor must be monic"
    );
    let dd = den.len() - 1;
    let mut rem: Vec<BigInt> = num.to_vec();
    int_trim(&mut rem);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = rem.pop().expect("non-empty remainder");
        if !c.is_zero() {
            for i in 0..dd {
                let t = &c * &den[i];
                rem[top - dd + i] -= t;
            }
            quot[top - dd] = c;
        }
        int_trim(&mut rem);
    }
    int_trim(&mut quot);
    (quot, rem)
}

/// Reduces `p` modulo the monic integer polynomial `den`, in place over
/// rationals, returning a vector of length exactly `deg den`.
pub(crate) fn rat_rem_monic_int(mut p: Vec<BigRational>, den: &[BigInt]) -> Vec<BigRational> {
    assert!(
        den.last().is_some_and(One::is_one),
        "divisor must be monic"
    );
    let dd = den.len() - 1;
    while p.len() > dd {
        let c = p.pop().expect("non-empty polynomial");
        let top = p.len();
        if !c.is_zero() {
            for i in 0..dd {
                let t = &c * BigRational::from(den[i].clone());
                p[top - dd + i] -= t;
            }
        }
    }
    p.resize(dd, BigRational::zero());
    p
}

pub(crate) fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    rat_trim(&mut out);
    out
}

/// Division with remainder over the rationals; `den` need not be monic.
pub(crate) fn rat_divmod(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut den = den.to_vec();
    rat_trim(&mut den);
    assert!(!den.is_empty(), "division by the zero polynomial");
    let dd = den.len() - 1;
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    rat_trim(&mut rem);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let top = rem.len() - 1;
        let c = rem.pop().expect("non-empty remainder") / &lead;
        if !c.is_zero() {
            for i in 0..dd {
                let t = &c * &den[i];
                rem[top - dd + i] -= t;
            }
            quot[top - dd] = c;
        }
        rat_trim(&mut rem);
    }
    rat_trim(&mut quot);
    (quot, rem)
}

/// Extended gcd over `Q[x]`: returns monic `g` and `(u, v)` with
/// `u a + v b = g`.
pub(crate) fn rat_ext_gcd(
    a: &[BigRational],
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    rat_trim(&mut r0);
    rat_trim(&mut r1);
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let s_next = rat_sub(&s0, &rat_mul(&q, &s1));
        let t_next = rat_sub(&t0, &rat_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s_next);
        t0 = std::mem::replace(&mut t1, t_next);
    }
    assert!(!r0.is_empty(), "gcd of two zero polynomials");
    let lead = r0.last().expect("non-empty gcd").clone();
    let inv = BigRational::one() / lead;
    for c in r0.iter_mut().chain(s0.iter_mut()).chain(t0.iter_mut()) {
        *c *= &inv;
    }
    (r0, s0, t0)
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    rat_trim(&mut out);
    out
}

static CYCLO_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

fn cache() -> &'static RwLock<HashMap<u64, Arc<Vec<BigInt>>>> {
    CYCLO_CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial `Phi_n`, little-endian, monic, with
/// integer coefficients; computed by exact division of `x^n - 1` by the
/// `Phi_d` over proper divisors `d` of `n` and cached process-wide.
///
/// # Errors
/// [`Error::OrderCap`] when `n` is zero or exceeds [`order_cap`].
pub fn cyclotomic_polynomial(n: u64) -> Result<Arc<Vec<BigInt>>> {
    if n == 0 || n > order_cap() {
        return Err(Error::OrderCap {
            order: n,
            cap: order_cap(),
        });
    }
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return Ok(p.clone());
    }
    let mut quotient = vec![BigInt::zero(); n as usize + 1];
    quotient[0] = -BigInt::one();
    quotient[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d)?;
        let (q, r) = int_divmod_monic(&quotient, &phi_d);
        assert!(r.is_empty(), "Phi_{d} must divide x^{n} - 1 exactly");
        quotient = q;
    }
    assert_eq!(
        quotient.len() as u64,
        phi(n) + 1,
        "deg Phi_{n} must equal phi({n})"
    );
    let arc = Arc::new(quotient);
    let mut w = cache().write().expect("cyclotomic cache poisoned");
    Ok(w.entry(n).or_insert(arc).clone())
}

/// Snapshot of the cyclotomic polynomial cache, for optional persistence.
pub fn cache_snapshot() -> Vec<(u64, Vec<BigInt>)> {
    let r = cache().read().expect("cyclotomic cache poisoned");
    let mut out: Vec<(u64, Vec<BigInt>)> = r.iter().map(|(n, p)| (*n, (**p).clone())).collect();
    out.sort_by_key(|(n, _)| *n);
    out
}

/// Preloads cache entries, e.g. from a persisted snapshot. Each entry is
/// validated (monic, degree `phi(n)`, divides `x^n - 1`); invalid entries are
/// ignored rather than trusted.
pub fn cache_preload(entries: Vec<(u64, Vec<BigInt>)>) {
    for (n, p) in entries {
        if n == 0 || n > order_cap() {
            continue;
        }
        if p.len() as u64 != phi(n) + 1 || !p.last().is_some_and(One::is_one) {
            continue;
        }
        let mut xn1 = vec![BigInt::zero(); n as usize + 1];
        xn1[0] = -BigInt::one();
        xn1[n as usize] = BigInt::one();
        let (_, r) = int_divmod_monic(&xn1, &p);
        if !r.is_empty() {
            continue;
        }
        let mut w = cache().write().expect("cyclotomic cache poisoned");
        w.entry(n).or_insert_with(|| Arc::new(p));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(2), 1);
        assert_eq!(phi(12), 4);
        assert_eq!(phi(49), 42);
        assert_eq!(phi(546), 144);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(7), vec![1, 7]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1).unwrap(), int_poly(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2).unwrap(), int_poly(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3).unwrap(), int_poly(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4).unwrap(), int_poly(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6).unwrap(), int_poly(&[1, -1, 1]));
        assert_eq!(
            *cyclotomic_polynomial(7).unwrap(),
            int_poly(&[1, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            *cyclotomic_polynomial(12).unwrap(),
            int_poly(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn cyclotomic_divides_xn_minus_one() {
        for n in 1..=200u64 {
            let mut xn1 = vec![BigInt::zero(); n as usize + 1];
            xn1[0] = -BigInt::one();
            xn1[n as usize] = BigInt::one();
            let mut deg_sum = 0;
            for d in divisors(n) {
                let p = cyclotomic_polynomial(d).unwrap();
                let (_, r) = int_divmod_monic(&xn1, &p);
                assert!(r.is_empty(), "Phi_{d} does not divide x^{n} - 1");
                deg_sum += p.len() as u64 - 1;
            }
            assert_eq!(deg_sum, n, "totient sum over divisors of {n}");
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            cyclotomic_polynomial(0),
            Err(Error::OrderCap { .. })
        ));
        assert!(matches!(
            cyclotomic_polynomial(order_cap() + 1),
            Err(Error::OrderCap { .. })
        ));
    }

    #[test]
    fn ext_gcd_bezout() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1
        let a: Vec<BigRational> = int_poly(&[-1, 0, 1])
            .into_iter()
            .map(BigRational::from)
            .collect();
        let b: Vec<BigRational> = int_poly(&[1, -2, 1])
            .into_iter()
            .map(BigRational::from)
            .collect();
        let (g, u, v) = rat_ext_gcd(&a, &b);
        let expect: Vec<BigRational> = int_poly(&[-1, 1]).into_iter().map(BigRational::from).collect();
        assert_eq!(g, expect);
        let combo = rat_sub(&rat_mul(&u, &a), &rat_mul(&v, &b).iter().map(|c| -c).collect::<Vec<_>>());
        assert_eq!(combo, g);
    }

    #[test]
    fn snapshot_reload_roundtrip() {
        cyclotomic_polynomial(15).unwrap();
        let snap = cache_snapshot();
        assert!(snap.iter().any(|(n, _)| *n == 15));
        cache_preload(snap);
        // Corrupt entries are rejected.
        cache_preload(vec![(9999, int_poly(&[2, 1]))]);
        assert!(cache_snapshot().iter().all(|(n, _)| *n != 9999));
    }
}

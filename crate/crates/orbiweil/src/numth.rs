//! Small integer number theory shared across modules.

/// Trial-division primality; fine for the sizes this crate meets.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn modpow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m < 1 << 31);
    base %= m;
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime `q`.
pub(crate) fn modinv(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q), "inverse of 0 mod {q}");
    modpow(a, q - 2, q)
}

/// Prime factors of `n`, ascending, without multiplicity.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least primitive root modulo a prime `q`.
pub(crate) fn primitive_root(q: u64) -> u64 {
    if q == 2 {
        return 1;
    }
    let factors = prime_factors(q - 1);
    (2..q)
        .find(|&w| factors.iter().all(|&f| modpow(w, (q - 1) / f, q) != 1))
        .expect("every prime has a primitive root")
}

//! Cyclotomic numbers with exact rational coefficients.
//!
//! A [`CyclotomicNumber`] is an element of `Q(zeta_n)` stored on the power
//! basis `1, zeta_n, ..., zeta_n^(phi(n)-1)`, i.e. as a rational coefficient
//! vector reduced modulo `Phi_n`. Arithmetic between different orders embeds
//! both operands into `Q(zeta_lcm)` first. There is no floating point
//! anywhere and no normalization of `n` to the minimal field of definition:
//! the order is part of the representation, equality is mathematical.

use std::fmt;

use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational, Integer};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly;
use crate::error::{Error, Result};

/// Binary operation selector for [`CyclotomicNumber::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of `Q(zeta_order)` on the power basis.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    order: u64,
    /// Length exactly `phi(order)`.
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    fn from_reduced(order: u64, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len() as u64, poly::phi(order));
        CyclotomicNumber { order, coeffs }
    }

    /// Reduces an arbitrary coefficient vector (powers of `zeta_n`) modulo
    /// `Phi_n`.
    fn reduce(order: u64, raw: Vec<BigRational>) -> Result<Self> {
        let phi_n = poly::cyclotomic_polynomial(order)?;
        Ok(Self::from_reduced(
            order,
            poly::rat_rem_monic_int(raw, &phi_n),
        ))
    }

    /// The zero of `Q(zeta_1) = Q`.
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    /// The one of `Q(zeta_1) = Q`.
    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    /// A rational number, as an order-1 cyclotomic.
    pub fn from_rational(q: BigRational) -> Self {
        Self::from_reduced(1, vec![q])
    }

    /// An integer, as an order-1 cyclotomic.
    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// `zeta_n^k` for `zeta_n = exp(2 pi i / n)`; `k` may be any integer and
    /// is taken modulo `n`.
    ///
    /// # Errors
    /// [`Error::OrderCap`] when `n` is zero or beyond the cap.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderCap {
                order: 0,
                cap: poly::order_cap(),
            });
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        Self::reduce(n, raw)
    }

    /// The order `n` of the ambient field `Q(zeta_n)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients on the power basis, length `phi(order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the value lies in `Q`, i.e. all higher basis coefficients
    /// vanish.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number.
    ///
    /// # Errors
    /// [`Error::NotRational`] when higher basis coefficients are non-zero.
    /// The power basis makes this sound: rationals have a unique
    /// representation with all higher coefficients zero.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// Embeds into `Q(zeta_m)`; requires `order | m`.
    pub fn embed(&self, m: u64) -> Result<Self> {
        if m == self.order {
            return Ok(self.clone());
        }
        assert!(
            m.is_multiple_of(self.order),
            "embedding target {m} is not a multiple of order {}",
            self.order
        );
        let step = (m / self.order) as usize;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * step] = c.clone();
            }
        }
        Self::reduce(m, raw)
    }

    fn common_order(&self, other: &Self) -> Result<u64> {
        let l = self.order.lcm(&other.order);
        if l > poly::order_cap() {
            return Err(Error::OrderCap {
                order: l,
                cap: poly::order_cap(),
            });
        }
        Ok(l)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let l = self.common_order(other)?;
        let a = self.embed(l)?;
        let b = other.embed(l)?;
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Ok(Self::from_reduced(l, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let l = self.common_order(other)?;
        let a = self.embed(l)?;
        let b = other.embed(l)?;
        Self::reduce(l, poly::rat_mul(&a.coeffs, &b.coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inverse()?)
    }

    /// Dispatch by [`ArithOp`]; convenience for data-driven tests and the
    /// command-line surface.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    pub fn neg(&self) -> Self {
        Self::from_reduced(self.order, self.coeffs.iter().map(|c| -c).collect())
    }

    /// Multiplies by a rational scalar.
    pub fn scaled(&self, q: &BigRational) -> Self {
        Self::from_reduced(self.order, self.coeffs.iter().map(|c| c * q).collect())
    }

    /// The multiplicative inverse, via the extended Euclidean algorithm
    /// against `Phi_order` in `Q[x]`.
    ///
    /// # Errors
    /// [`Error::DivisionByZero`] when `self` is zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi_n = poly::cyclotomic_polynomial(self.order)?;
        let phi_rat: Vec<BigRational> = phi_n.iter().cloned().map(BigRational::from).collect();
        let (g, u, _) = poly::rat_ext_gcd(&self.coeffs, &phi_rat);
        assert_eq!(
            g.len(),
            1,
            "gcd with the irreducible Phi_n must be a unit for non-zero input"
        );
        let scale = BigRational::one() / g[0].clone();
        let inv: Vec<BigRational> = u.iter().map(|c| c * &scale).collect();
        Self::reduce(self.order, inv)
    }

    /// Integer power, with negative exponents via the inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            k >>= 1;
            if k > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// The Galois substitution `zeta_n -> zeta_n^j`; requires
    /// `gcd(j, order) = 1`.
    pub fn galois(&self, j: u64) -> Result<Self> {
        let n = self.order;
        let j = j % n;
        assert_eq!(j.gcd(&n), 1, "galois exponent must be coprime to the order");
        if n == 1 || j == 1 {
            return Ok(self.clone());
        }
        let max_exp = (self.coeffs.len() - 1) * j as usize;
        let mut raw = vec![BigRational::zero(); max_exp + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[(i as u64 * j % n) as usize] += c;
            }
        }
        Self::reduce(n, raw)
    }

    /// Complex conjugation, `zeta_n -> zeta_n^(n-1)`.
    pub fn conjugate(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        self.galois(self.order - 1)
            .expect("n-1 is always coprime to n")
    }

    /// A deterministic sort key: the coefficient vector after embedding into
    /// `Q(zeta_m)`. Lexicographic comparison of keys at one `m` is a total
    /// order on values of `Q(zeta_m)`.
    pub fn sort_key_at(&self, m: u64) -> Result<Vec<BigRational>> {
        Ok(self.embed(m)?.coeffs)
    }

    /// Multiplicative order if the value is a root of unity, else `None`.
    /// Small search bounded by the field order; used by verification code.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let mut acc = self.clone();
        let bound = self.order.max(2) * 2;
        for k in 1..=bound {
            if acc == Self::one() {
                return Some(k);
            }
            acc = acc.checked_mul(self).ok()?;
        }
        None
    }
}

impl PartialEq for CyclotomicNumber {
    /// Mathematical equality, via embedding into the common field.
    ///
    /// # Panics
    /// If the lcm of the two orders exceeds the order cap. Comparisons inside
    /// this crate always stay below it.
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self
            .common_order(other)
            .expect("order cap exceeded in equality comparison");
        let a = self.embed(l).expect("embedding within the cap");
        let b = other.embed(l).expect("embedding within the cap");
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "z{}", self.order)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Serialized form: the order and coefficient strings `"p/q"` or `"p"`.
/// Deserialization accepts any coefficient vector of length at most `order`
/// (exponents of `zeta_order`) and reduces it, so hand-written values like
/// `{"order": 6, "coeffs": ["0","0","0","0","0","-1"]}` for `-zeta_6^5` are
/// valid input; serialization always emits the reduced power-basis form.
#[derive(Serialize, Deserialize)]
struct CycloRepr {
    order: u64,
    coeffs: Vec<String>,
}

impl Serialize for CyclotomicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        if repr.coeffs.len() as u64 > repr.order {
            return Err(D::Error::custom(format!(
                "coefficient vector of length {} exceeds order {}",
                repr.coeffs.len(),
                repr.order
            )));
        }
        let mut raw = Vec::with_capacity(repr.coeffs.len());
        for s in &repr.coeffs {
            let q: BigRational = s
                .parse()
                .map_err(|e| D::Error::custom(format!("bad rational {s:?}: {e}")))?;
            raw.push(q);
        }
        CyclotomicNumber::reduce(repr.order, raw)
            .map_err(|e| D::Error::custom(format!("reduction failed: {e}")))
    }
}

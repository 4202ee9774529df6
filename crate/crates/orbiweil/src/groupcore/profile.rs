//! Eigenvalue profiles: multiplicity vectors of roots of unity.
//!
//! For a representation `rho` and an element `g` of order `N`, the profile
//! records `N_k = dim ker(rho(g) - zeta_N^k I)` for `k = 0..N`. For a
//! diagonalizable `rho(g)` (always the case in a finite group) the profile
//! determines and is determined by the character values on the powers of
//! `g`, via a discrete Fourier transform over `Q(zeta_N)`.

use num::traits::Signed;
use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::CyclotomicNumber;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueProfile {
    order: u64,
    /// `counts[k]` is the multiplicity of `zeta_order^k`; length `order`.
    counts: Vec<u64>,
}

impl EigenvalueProfile {
    /// # Errors
    /// [`Error::Inconsistent`] when `counts` does not have length `order`
    /// or `order` is zero.
    pub fn new(order: u64, counts: Vec<u64>) -> Result<Self> {
        if order == 0 || counts.len() as u64 != order {
            return Err(Error::Inconsistent(format!(
                "profile of order {order} needs exactly {order} counts, got {}",
                counts.len()
            )));
        }
        Ok(EigenvalueProfile { order, counts })
    }

    /// Profile of the identity action in dimension `dim` at order `order`.
    pub fn trivial_action(order: u64, dim: u64) -> Self {
        let mut counts = vec![0; order as usize];
        counts[0] = dim;
        EigenvalueProfile { order, counts }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, k: u64) -> u64 {
        self.counts[(k % self.order) as usize]
    }

    /// Total multiplicity, i.e. the dimension of the representation.
    pub fn dim(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The profile of the same element under `rho` twisted by the character
    /// `g -> zeta_order^shift`: eigenvalue exponents all move by `shift`, so
    /// `out[k] = in[(k - shift) mod order]`.
    pub fn twist(&self, shift: i64) -> Self {
        let n = self.order as i64;
        let counts = (0..n)
            .map(|k| self.counts[(k - shift).rem_euclid(n) as usize])
            .collect();
        EigenvalueProfile {
            order: self.order,
            counts,
        }
    }

    /// Character value on `g^j` implied by the profile:
    /// `sum_k N_k zeta_N^(kj)`.
    pub fn character_on_power(&self, j: u64) -> Result<CyclotomicNumber> {
        let mut acc = CyclotomicNumber::zero();
        for (k, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let z = CyclotomicNumber::root_of_unity(self.order, (k as u64 * j) as i64)?;
            acc = acc.checked_add(&z.scaled(&BigRational::from_integer(c.into())))?;
        }
        Ok(acc)
    }
}

/// Recovers the eigenvalue profile from character values on the powers of an
/// element: `char_on_powers[j]` must be the character at `g^j`, for
/// `j = 0..N` with `N` the element order, and `char_on_powers[0]` the
/// dimension. Then `N_k = (1/N) sum_j chi(g^j) zeta_N^(-kj)`.
///
/// # Errors
/// [`Error::NonIntegral`] when some `N_k` is not a non-negative integer
/// (i.e. the data is not a genuine character on a cyclic group), or
/// [`Error::Inconsistent`] when the counts do not sum to the dimension.
pub fn nk_profile(char_on_powers: &[CyclotomicNumber], dim: u64) -> Result<EigenvalueProfile> {
    let n = char_on_powers.len() as u64;
    if n == 0 {
        return Err(Error::Inconsistent("empty character list".into()));
    }
    if char_on_powers[0].to_rational().ok() != Some(BigRational::from_integer(dim.into())) {
        return Err(Error::Inconsistent(format!(
            "character at the identity must equal the dimension {dim}"
        )));
    }
    let inv_n = BigRational::new(1.into(), (n as i64).into());
    let mut counts = Vec::with_capacity(n as usize);
    for k in 0..n {
        let mut acc = CyclotomicNumber::zero();
        for (j, chi) in char_on_powers.iter().enumerate() {
            let z = CyclotomicNumber::root_of_unity(n, -((k * j as u64) as i64))?;
            acc = acc.checked_add(&chi.checked_mul(&z)?)?;
        }
        let scaled = acc.scaled(&inv_n);
        let q = scaled.to_rational().map_err(|_| Error::NonIntegral {
            context: format!("eigenvalue count N_{k}"),
            value: scaled.to_string(),
        })?;
        if !q.is_integer() || q.is_negative() {
            return Err(Error::NonIntegral {
                context: format!("eigenvalue count N_{k}"),
                value: q.to_string(),
            });
        }
        let c: u64 = q
            .to_integer()
            .try_into()
            .map_err(|_| Error::NonIntegral {
                context: format!("eigenvalue count N_{k}"),
                value: q.to_string(),
            })?;
        counts.push(c);
    }
    let profile = EigenvalueProfile::new(n, counts)?;
    if profile.dim() != dim {
        return Err(Error::Inconsistent(format!(
            "eigenvalue counts sum to {}, expected dimension {dim}",
            profile.dim()
        )));
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    fn zeta(n: u64, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn trivial_character_profile() {
        let chi = vec![CyclotomicNumber::one(); 3];
        let p = nk_profile(&chi, 1).unwrap();
        assert_eq!(p.counts(), &[1, 0, 0]);
        assert_eq!(p.dim(), 1);
    }

    #[test]
    fn single_eigenvalue_recovery() {
        // chi(g^j) = zeta_6^(5j): eigenvalue zeta_6^5 with multiplicity 1
        let chi: Vec<_> = (0..6).map(|j| zeta(6, 5 * j)).collect();
        let p = nk_profile(&chi, 1).unwrap();
        assert_eq!(p.counts(), &[0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn two_dim_mixed_profile() {
        // eigenvalues zeta_4 and zeta_4^3: chi(g^j) = i^j + (-i)^j
        let chi: Vec<_> = (0..4)
            .map(|j| zeta(4, j).checked_add(&zeta(4, 3 * j)).unwrap())
            .collect();
        let p = nk_profile(&chi, 2).unwrap();
        assert_eq!(p.counts(), &[0, 1, 0, 1]);
        // round-trip back to character values
        for j in 0..4 {
            assert_eq!(p.character_on_power(j).unwrap(), chi[j as usize]);
        }
    }

    #[test]
    fn non_character_data_rejected() {
        // chi(g) = 1/2 is not a character value on a cyclic group of order 2
        let chi = vec![
            CyclotomicNumber::one(),
            CyclotomicNumber::from_rational(rat_int(1) / rat_int(2)),
        ];
        assert!(matches!(
            nk_profile(&chi, 1),
            Err(Error::NonIntegral { .. })
        ));
        // wrong dimension at the identity
        let chi = vec![CyclotomicNumber::one(), CyclotomicNumber::one()];
        assert!(nk_profile(&chi, 2).is_err());
    }

    #[test]
    fn twist_shifts_exponents() {
        let p = EigenvalueProfile::new(3, vec![1, 0, 0]).unwrap();
        // twisting by zeta_3^-1 moves the exponent-0 eigenvalue to slot 2
        assert_eq!(p.twist(-1).counts(), &[0, 0, 1]);
        assert_eq!(p.twist(1).counts(), &[0, 1, 0]);
        assert_eq!(p.twist(-1).twist(1), p);
        let q = EigenvalueProfile::new(3, vec![1, 2, 0]).unwrap();
        assert_eq!(q.twist(-1).counts(), &[2, 0, 1]);
    }

    #[test]
    fn twist_round_trip_all_shifts() {
        let p = EigenvalueProfile::new(8, vec![3, 0, 1, 0, 2, 0, 0, 1]).unwrap();
        for shift in -9i64..=9 {
            assert_eq!(p.twist(shift).twist(-shift), p);
            assert_eq!(p.twist(shift).dim(), p.dim());
        }
    }
}

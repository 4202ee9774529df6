//! The orbifold Chevalley-Weil formula over explicit profile data.
//!
//! Setting: a Galois cover `f : X -> Y` of compact Riemann orbifolds with
//! group `G`, where `Y` has signature `(g_Y; p_1, ..., p_s)`, `f` is
//! branched over `n` further points with monodromy of order `e_j` at the
//! `j`-th one, and over the `i`-th orbifold point the local monodromy
//! `gamma_i` maps to a generator of the local isotropy `Z/p_i`. For an
//! irreducible `rho` of `G`, the multiplicity of `rho` in `H^0(X, Omega^1)`
//! is
//!
//! ```text
//! d(rho) = eps + dim(rho) (g_Y - 1 + s - sum_{i=1}^{s} 1/p_i)
//!        + sum_j sum_{k=1}^{e_j - 1} N_k(rho; gamma_{R_j}) (1 - k/e_j)
//!        - sum_i sum_{k=1}^{p_i - 1} N_k(zeta_{p_i}^{-1} rho; gamma_{P_i}) k/p_i
//! ```
//!
//! with `eps = 1` exactly for the trivial representation and
//! `N_k(rho; g) = dim ker(rho(g) - zeta I)` the eigenvalue profile. All
//! four pieces are exposed through [`CwTerms`] so that callers (and tests)
//! can see each term exactly, not just the total.

use num::traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rat_int, Rat};
use crate::groupcore::EigenvalueProfile;

/// A base orbifold: genus plus the orders of its orbifold points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldCurve {
    pub genus: u64,
    /// Orders `p_i >= 2` of the orbifold points.
    pub orbifold_orders: Vec<u64>,
}

impl OrbifoldCurve {
    /// The modular base: genus 0 with orbifold points of orders 2 and 3.
    pub fn modular() -> Self {
        OrbifoldCurve {
            genus: 0,
            orbifold_orders: vec![2, 3],
        }
    }

    fn validate(&self) -> Result<()> {
        if let Some(&p) = self.orbifold_orders.iter().find(|&&p| p < 2) {
            return Err(Error::OutOfRange(format!("orbifold order {p} < 2")));
        }
        Ok(())
    }
}

/// One branch point of the cover outside the orbifold locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamPoint {
    /// Order `e_j >= 2` of the local monodromy.
    pub degree: u64,
    /// Free-form label for reporting.
    pub label: String,
}

/// A Galois cover of an orbifold base, described by the numerical data the
/// formula needs. Monodromy elements appear only through their eigenvalue
/// profiles on each representation, carried by [`RepInput`]; here they are
/// named for reporting. Branch points and orbifold points are separate
/// lists, so they are disjoint by construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSpec {
    pub base: OrbifoldCurve,
    pub ramification: Vec<RamPoint>,
    /// Monodromy labels at the orbifold points, one per entry of
    /// `base.orbifold_orders`.
    pub orbifold_monodromies: Vec<String>,
    /// Order of the deck group; 0 means unspecified (divisibility checks
    /// are skipped then).
    pub group_order: u64,
}

impl CoverSpec {
    fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.orbifold_monodromies.len() != self.base.orbifold_orders.len() {
            return Err(Error::Inconsistent(format!(
                "{} orbifold monodromy labels for {} orbifold points",
                self.orbifold_monodromies.len(),
                self.base.orbifold_orders.len()
            )));
        }
        if self.group_order != 0 {
            for point in &self.ramification {
                if !self.group_order.is_multiple_of(point.degree) {
                    return Err(Error::Inconsistent(format!(
                        "branch order {} does not divide group order {}",
                        point.degree, self.group_order
                    )));
                }
            }
            for &p in &self.base.orbifold_orders {
                if !self.group_order.is_multiple_of(p) {
                    return Err(Error::Inconsistent(format!(
                        "orbifold order {p} does not divide group order {}",
                        self.group_order
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One irreducible representation, as profile data at each monodromy
/// element: `ram_profiles[j]` at the `j`-th branch point (order
/// `ramification[j].degree`), `orb_profiles[i]` at the `i`-th orbifold
/// point (order `orbifold_orders[i]`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepInput {
    pub id: String,
    pub dim: u64,
    pub is_trivial: bool,
    pub ram_profiles: Vec<EigenvalueProfile>,
    pub orb_profiles: Vec<EigenvalueProfile>,
}

/// The four pieces of the formula, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwTerms {
    /// 1 for the trivial representation, else 0.
    pub epsilon: u64,
    /// `dim(rho) (g_Y - 1 + n - sum 1/p_i)`.
    pub base_term: Rat,
    /// One term per branch point: `sum_k N_k (1 - k/e_j)`.
    pub ram_terms: Vec<Rat>,
    /// One term per orbifold point, with its sign:
    /// `- sum_k N_k(twisted) k/p_i`.
    pub orb_terms: Vec<Rat>,
}

impl CwTerms {
    pub fn total(&self) -> Rat {
        let mut acc = rat_int(self.epsilon as i64) + &self.base_term;
        for t in &self.ram_terms {
            acc += t;
        }
        for t in &self.orb_terms {
            acc += t;
        }
        acc
    }
}

/// Degree of the canonical divisor of an orbifold curve:
/// `2 g - 2 + sum_i (1 - 1/p_i)`. For the modular base `(0; 2, 3)` this is
/// `-2 + 1/2 + 2/3 = -5/6`.
pub fn canonical_degree(curve: &OrbifoldCurve) -> Result<Rat> {
    curve.validate()?;
    let mut acc = rat_int(2 * curve.genus as i64 - 2);
    for &p in &curve.orbifold_orders {
        acc += rat_int(1) - Rat::new(1.into(), (p as i64).into());
    }
    Ok(acc)
}

/// The isotropy trace of a profile: `sum_k k N_k`, the sum of the exponent
/// labels of the local eigenvalues. This is the integer that enters the
/// orbifold Riemann-Roch count for the sheaf the profile describes.
pub fn isotropy_trace(profile: &EigenvalueProfile) -> u64 {
    profile
        .counts()
        .iter()
        .enumerate()
        .map(|(k, &c)| k as u64 * c)
        .sum()
}

/// Orbifold Riemann-Roch Euler characteristic for a bundle of rank `rank`
/// and degree `degree` on `base`, with prescribed isotropy exponent sums at
/// the orbifold points:
/// `chi = rank (1 - g) + degree - sum_i iota_i / p_i`.
///
/// # Errors
/// [`Error::Inconsistent`] when the trace list length does not match the
/// orbifold point count.
pub fn riemann_roch_chi(
    rank: i64,
    degree: &Rat,
    base: &OrbifoldCurve,
    isotropy_traces: &[u64],
) -> Result<Rat> {
    base.validate()?;
    if isotropy_traces.len() != base.orbifold_orders.len() {
        return Err(Error::Inconsistent(format!(
            "{} isotropy traces for {} orbifold points",
            isotropy_traces.len(),
            base.orbifold_orders.len()
        )));
    }
    let mut acc = rat_int(rank) * rat_int(1 - base.genus as i64) + degree;
    for (&iota, &p) in isotropy_traces.iter().zip(base.orbifold_orders.iter()) {
        acc -= Rat::new((iota as i64).into(), (p as i64).into());
    }
    Ok(acc)
}

fn validate_rep(cover: &CoverSpec, rep: &RepInput) -> Result<()> {
    cover.validate()?;
    if rep.dim == 0 {
        return Err(Error::Inconsistent(format!(
            "representation {} has dimension 0",
            rep.id
        )));
    }
    if rep.is_trivial && rep.dim != 1 {
        return Err(Error::Inconsistent(format!(
            "trivial representation {} must have dimension 1, got {}",
            rep.id, rep.dim
        )));
    }
    if rep.ram_profiles.len() != cover.ramification.len() {
        return Err(Error::Inconsistent(format!(
            "representation {} has {} branch profiles for {} branch points",
            rep.id,
            rep.ram_profiles.len(),
            cover.ramification.len()
        )));
    }
    if rep.orb_profiles.len() != cover.base.orbifold_orders.len() {
        return Err(Error::Inconsistent(format!(
            "representation {} has {} orbifold profiles for {} orbifold points",
            rep.id,
            rep.orb_profiles.len(),
            cover.base.orbifold_orders.len()
        )));
    }
    for (j, (point, prof)) in cover
        .ramification
        .iter()
        .zip(rep.ram_profiles.iter())
        .enumerate()
    {
        if point.degree < 2 {
            return Err(Error::OutOfRange(format!(
                "branch point {j} has monodromy order {} < 2",
                point.degree
            )));
        }
        if prof.order() != point.degree || prof.dim() != rep.dim {
            return Err(Error::Inconsistent(format!(
                "branch profile {j} of {} has order {} / dimension {}, expected {} / {}",
                rep.id,
                prof.order(),
                prof.dim(),
                point.degree,
                rep.dim
            )));
        }
    }
    for (i, (&p, prof)) in cover
        .base
        .orbifold_orders
        .iter()
        .zip(rep.orb_profiles.iter())
        .enumerate()
    {
        if prof.order() != p || prof.dim() != rep.dim {
            return Err(Error::Inconsistent(format!(
                "orbifold profile {i} of {} has order {} / dimension {}, expected {} / {}",
                rep.id,
                prof.order(),
                prof.dim(),
                p,
                rep.dim
            )));
        }
    }
    Ok(())
}

/// Evaluates the formula piece by piece. See the module docs for the exact
/// expression each field carries.
pub fn cw_terms(cover: &CoverSpec, rep: &RepInput) -> Result<CwTerms> {
    validate_rep(cover, rep)?;
    let mut base_factor = rat_int(cover.base.genus as i64 - 1);
    for &p in &cover.base.orbifold_orders {
        base_factor += rat_int(1) - Rat::new(1.into(), (p as i64).into());
    }
    let base_term = rat_int(rep.dim as i64) * base_factor;

    let ram_terms = cover
        .ramification
        .iter()
        .zip(rep.ram_profiles.iter())
        .map(|(point, prof)| {
            let e = point.degree;
            let mut acc = Rat::zero();
            for k in 1..e {
                let nk = prof.count(k);
                if nk != 0 {
                    acc += rat_int(nk as i64)
                        * (rat_int(1) - Rat::new((k as i64).into(), (e as i64).into()));
                }
            }
            acc
        })
        .collect();

    let orb_terms = cover
        .base
        .orbifold_orders
        .iter()
        .zip(rep.orb_profiles.iter())
        .map(|(&p, prof)| {
            // the formula twists rho by the inverse local character, which
            // shifts every eigenvalue exponent down by one
            let twisted = prof.twist(-1);
            let mut acc = Rat::zero();
            for k in 1..p {
                let nk = twisted.count(k);
                if nk != 0 {
                    acc -= rat_int(nk as i64) * Rat::new((k as i64).into(), (p as i64).into());
                }
            }
            acc
        })
        .collect();

    Ok(CwTerms {
        epsilon: u64::from(rep.is_trivial),
        base_term,
        ram_terms,
        orb_terms,
    })
}

/// The multiplicity of `rep` in the canonical representation of the cover.
///
/// # Errors
/// [`Error::NonIntegral`] / [`Error::Negative`] when the total is not a
/// non-negative integer, which means the profile data does not come from an
/// actual representation of the cover's monodromy.
pub fn cw_multiplicity_general(cover: &CoverSpec, rep: &RepInput) -> Result<u64> {
    let total = cw_terms(cover, rep)?.total();
    if !total.is_integer() {
        return Err(Error::NonIntegral {
            context: format!("multiplicity of {}", rep.id),
            value: total.to_string(),
        });
    }
    if total.is_negative() {
        return Err(Error::Negative {
            context: format!("multiplicity of {}", rep.id),
            value: total.to_string(),
        });
    }
    Ok(total
        .to_integer()
        .try_into()
        .expect("non-negative integer fits u64"))
}

/// One line of a decomposition: `multiplicity` copies of the
/// `dim`-dimensional representation `rep_id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionEntry {
    pub rep_id: String,
    pub dim: u64,
    pub multiplicity: u64,
}

/// Certificate that the decomposition fills the expected space:
/// `total = sum multiplicity * dim` must equal the genus of the cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCertificate {
    pub expected: u64,
    pub total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub entries: Vec<DecompositionEntry>,
    pub genus_certificate: Option<GenusCertificate>,
}

impl Decomposition {
    /// `sum multiplicity * dim` over all entries, i.e. `dim H^0(X, Omega^1)`.
    pub fn total_dimension(&self) -> u64 {
        self.entries
            .iter()
            .map(|e| e.multiplicity * e.dim)
            .sum()
    }
}

/// Decomposes the canonical representation of the cover over the given
/// irreducible representations. Entry order follows `reps`.
///
/// # Errors
/// Propagates per-representation errors; [`Error::GenusMismatch`] when
/// `expected_genus` is given and the total dimension disagrees with it.
pub fn decompose(
    cover: &CoverSpec,
    reps: &[RepInput],
    expected_genus: Option<u64>,
) -> Result<Decomposition> {
    let mut entries = Vec::with_capacity(reps.len());
    for rep in reps {
        entries.push(DecompositionEntry {
            rep_id: rep.id.clone(),
            dim: rep.dim,
            multiplicity: cw_multiplicity_general(cover, rep)?,
        });
    }
    let dec = Decomposition {
        entries,
        genus_certificate: None,
    };
    let total = dec.total_dimension();
    let genus_certificate = match expected_genus {
        Some(expected) => {
            if total != expected {
                return Err(Error::GenusMismatch { expected, total });
            }
            Some(GenusCertificate { expected, total })
        }
        None => None,
    };
    Ok(Decomposition {
        genus_certificate,
        ..dec
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn profile(order: u64, counts: &[u64]) -> EigenvalueProfile {
        EigenvalueProfile::new(order, counts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_degree_examples() {
        assert_eq!(
            canonical_degree(&OrbifoldCurve::modular()).unwrap(),
            rat(-5, 6)
        );
        let genus2 = OrbifoldCurve {
            genus: 2,
            orbifold_orders: vec![],
        };
        assert_eq!(canonical_degree(&genus2).unwrap(), rat_int(2));
        let sphere = OrbifoldCurve {
            genus: 0,
            orbifold_orders: vec![],
        };
        assert_eq!(canonical_degree(&sphere).unwrap(), rat_int(-2));
        let bad = OrbifoldCurve {
            genus: 0,
            orbifold_orders: vec![1],
        };
        assert!(canonical_degree(&bad).is_err());
    }

    #[test]
    fn isotropy_trace_examples() {
        // order-14 profile with exponents {1, 5, 8}: trace 14
        let mut counts = vec![0u64; 14];
        counts[1] = 1;
        counts[5] = 1;
        counts[8] = 1;
        assert_eq!(isotropy_trace(&profile(14, &counts)), 14);
        assert_eq!(isotropy_trace(&EigenvalueProfile::trivial_action(5, 3)), 0);
    }

    #[test]
    fn riemann_roch_examples() {
        let modular = OrbifoldCurve::modular();
        // structure sheaf: chi = 1 on a rational base
        assert_eq!(
            riemann_roch_chi(1, &rat_int(0), &modular, &[0, 0]).unwrap(),
            rat_int(1)
        );
        // canonical sheaf of the modular base: local exponents p_i - 1
        let chi = riemann_roch_chi(1, &rat(-5, 6), &modular, &[1, 2]).unwrap();
        assert_eq!(chi, rat_int(-1));
        // plain curve: rank 2, degree 3, genus 1
        let torus = OrbifoldCurve {
            genus: 1,
            orbifold_orders: vec![],
        };
        assert_eq!(
            riemann_roch_chi(2, &rat_int(3), &torus, &[]).unwrap(),
            rat_int(3)
        );
        assert!(riemann_roch_chi(1, &rat_int(0), &modular, &[0]).is_err());
    }

    /// The modular-base cover with one branch point of order `e`; the
    /// trivial representation must get multiplicity 0 whatever `e` is.
    #[test]
    fn trivial_rep_has_multiplicity_zero() {
        for e in 2..=20u64 {
            let cover = CoverSpec {
                base: OrbifoldCurve::modular(),
                ramification: vec![RamPoint {
                    degree: e,
                    label: "cusp".into(),
                }],
                orbifold_monodromies: vec!["S".into(), "R^-1".into()],
                group_order: 0,
            };
            let rep = RepInput {
                id: "trivial".into(),
                dim: 1,
                is_trivial: true,
                ram_profiles: vec![EigenvalueProfile::trivial_action(e, 1)],
                orb_profiles: vec![
                    EigenvalueProfile::trivial_action(2, 1),
                    EigenvalueProfile::trivial_action(3, 1),
                ],
            };
            let terms = cw_terms(&cover, &rep).unwrap();
            assert_eq!(terms.epsilon, 1);
            assert_eq!(terms.base_term, rat(1, 6));
            assert_eq!(terms.ram_terms, vec![rat_int(0)]);
            // each orbifold term is -(p-1)/p for the trivial action
            assert_eq!(terms.orb_terms, vec![rat(-1, 2), rat(-2, 3)]);
            assert_eq!(cw_multiplicity_general(&cover, &rep).unwrap(), 0);
        }
    }

    /// Genus-2 cover of the plain sphere, trivial group view: the canonical
    /// representation of the identity cover of a genus-2 curve is just
    /// H^0(Omega^1), dimension 2. Branch data chosen so the formula gives 2
    /// for the trivial representation (hyperelliptic double cover shape).
    #[test]
    fn hyperelliptic_sanity() {
        let cover = CoverSpec {
            base: OrbifoldCurve {
                genus: 0,
                orbifold_orders: vec![],
            },
            ramification: (0..6)
                .map(|i| RamPoint {
                    degree: 2,
                    label: format!("w{i}"),
                })
                .collect(),
            orbifold_monodromies: vec![],
            group_order: 2,
        };
        let sign = RepInput {
            id: "sign".into(),
            dim: 1,
            is_trivial: false,
            ram_profiles: vec![profile(2, &[0, 1]); 6],
            orb_profiles: vec![],
        };
        let trivial = RepInput {
            id: "trivial".into(),
            dim: 1,
            is_trivial: true,
            ram_profiles: vec![profile(2, &[1, 0]); 6],
            orb_profiles: vec![],
        };
        assert_eq!(cw_multiplicity_general(&cover, &sign).unwrap(), 2);
        assert_eq!(cw_multiplicity_general(&cover, &trivial).unwrap(), 0);
        let dec = decompose(&cover, &[trivial.clone(), sign.clone()], Some(2)).unwrap();
        assert_eq!(dec.total_dimension(), 2);
        assert!(matches!(
            decompose(&cover, &[trivial, sign], Some(3)),
            Err(Error::GenusMismatch {
                expected: 3,
                total: 2
            })
        ));
    }

    #[test]
    fn validation_rejects_mismatched_profiles() {
        let cover = CoverSpec {
            base: OrbifoldCurve::modular(),
            ramification: vec![RamPoint {
                degree: 7,
                label: "cusp".into(),
            }],
            orbifold_monodromies: vec!["S".into(), "R^-1".into()],
            group_order: 168,
        };
        let rep = RepInput {
            id: "bad".into(),
            dim: 3,
            is_trivial: false,
            ram_profiles: vec![profile(7, &[0, 1, 1, 0, 1, 0, 0])],
            orb_profiles: vec![profile(2, &[1, 2]), profile(3, &[1, 1, 1])],
        };
        // baseline is fine
        assert!(cw_terms(&cover, &rep).is_ok());
        // wrong order on a branch profile
        let mut bad = rep.clone();
        bad.ram_profiles = vec![profile(6, &[0, 1, 1, 0, 1, 0])];
        assert!(cw_terms(&cover, &bad).is_err());
        // wrong dimension sum
        let mut bad = rep.clone();
        bad.orb_profiles = vec![profile(2, &[1, 1]), profile(3, &[1, 1, 1])];
        assert!(cw_terms(&cover, &bad).is_err());
        // trivial flag with dim > 1
        let mut bad = rep;
        bad.is_trivial = true;
        assert!(cw_terms(&cover, &bad).is_err());
    }

    /// Spot check of every exposed term on a known multiplicity-one case:
    /// dimension 3, branch order 7 with exponents {1, 2, 4}, involution
    /// trace -1, order-3 trace 0 twice.
    #[test]
    fn klein_quartic_term_breakdown() {
        let cover = CoverSpec {
            base: OrbifoldCurve::modular(),
            ramification: vec![RamPoint {
                degree: 7,
                label: "cusp".into(),
            }],
            orbifold_monodromies: vec!["S".into(), "R^-1".into()],
            group_order: 168,
        };
        let rep = RepInput {
            id: "gamma_2".into(),
            dim: 3,
            is_trivial: false,
            ram_profiles: vec![profile(7, &[0, 1, 1, 0, 1, 0, 0])],
            orb_profiles: vec![profile(2, &[1, 2]), profile(3, &[1, 1, 1])],
        };
        let terms = cw_terms(&cover, &rep).unwrap();
        assert_eq!(terms.epsilon, 0);
        assert_eq!(terms.base_term, rat(1, 2));
        assert_eq!(terms.ram_terms, vec![rat_int(2)]);
        assert_eq!(terms.orb_terms, vec![rat(-1, 2), rat_int(-1)]);
        assert_eq!(terms.total(), rat_int(1));
        assert_eq!(cw_multiplicity_general(&cover, &rep).unwrap(), 1);
    }

    #[test]
    fn negative_total_is_reported() {
        let cover = CoverSpec {
            base: OrbifoldCurve {
                genus: 0,
                orbifold_orders: vec![],
            },
            ramification: vec![RamPoint {
                degree: 2,
                label: "w".into(),
            }],
            orbifold_monodromies: vec![],
            group_order: 2,
        };
        let rep = RepInput {
            id: "impossible".into(),
            dim: 1,
            is_trivial: false,
            ram_profiles: vec![profile(2, &[1, 0])],
            orb_profiles: vec![],
        };
        assert!(matches!(
            cw_multiplicity_general(&cover, &rep),
            Err(Error::Negative { .. })
        ));
    }
}

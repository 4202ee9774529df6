//! Specialization to covers of the modular curve.
//!
//! A normal subgroup `Gamma` of `PSL_2(Z)` of finite index gives a Galois
//! cover `X(Gamma) -> X(1)` over the `(0; 2, 3)` orbifold base, branched at
//! the cusp with monodromy `T = [[1,1],[0,1]]` of some order `e`; local
//! monodromy at the orbifold points is generated by `S = [[0,-1],[1,0]]`
//! and `R^-1` with `R = ST`. For an irreducible `rho` of the deck group
//! with `rho != 1` the general formula collapses to the trace form
//!
//! ```text
//! d = -(5/12) dim(rho) + sum_{k=1}^{e-1} N_k(rho; T) (1 - k/e)
//!     - Tr(rho(S))/4
//!     + z3^2 Tr(rho(R^-1)) / (3 (1 - z3^2)) + z3 Tr(rho(R)) / (3 (1 - z3))
//! ```
//!
//! with `z3 = e^{2 pi i / 3}`. This module evaluates that form exactly and
//! also provides the translation back into [`crate::cwcore`] inputs, so
//! every specialized value can be cross-checked against the general
//! formula.

use num::traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cwcore::{CoverSpec, OrbifoldCurve, RamPoint, RepInput};
use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_int, CyclotomicNumber, CycloMatrix, Rat};
use crate::groupcore::{nk_profile, EigenvalueProfile};

/// Character data of one irreducible representation of the deck group of a
/// modular cover, reduced to what the trace form consumes: traces at `S`,
/// `R`, `R^-1` and the full eigenvalue profile at `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl2zRepData {
    pub id: String,
    pub dim: u64,
    pub is_trivial: bool,
    pub trace_s: CyclotomicNumber,
    pub trace_r: CyclotomicNumber,
    pub trace_rinv: CyclotomicNumber,
    /// Eigenvalue profile of `rho(T)`; its order is the cusp width `e`.
    pub t_profile: EigenvalueProfile,
}

fn validate(rep: &Psl2zRepData, e: u64) -> Result<()> {
    if rep.is_trivial {
        return Err(Error::TrivialRep);
    }
    if e < 2 {
        return Err(Error::OutOfRange(format!("cusp width {e} < 2")));
    }
    if rep.t_profile.order() != e {
        return Err(Error::Inconsistent(format!(
            "T-profile of {} has order {}, cusp width is {e}",
            rep.id,
            rep.t_profile.order()
        )));
    }
    if rep.t_profile.dim() != rep.dim {
        return Err(Error::Inconsistent(format!(
            "T-profile of {} sums to {}, dimension is {}",
            rep.id,
            rep.t_profile.dim(),
            rep.dim
        )));
    }
    Ok(())
}

/// The trace form of the multiplicity, for a nontrivial irreducible.
///
/// # Errors
/// [`Error::TrivialRep`] for the trivial representation (its multiplicity
/// is 0, but the trace form does not apply); [`Error::NonIntegral`] /
/// [`Error::Negative`] when the data is not that of an actual
/// representation.
pub fn cw_modular(rep: &Psl2zRepData, e: u64) -> Result<u64> {
    validate(rep, e)?;

    let mut rational_part = rat(-5 * rep.dim as i64, 12);
    for k in 1..e {
        let nk = rep.t_profile.count(k);
        if nk != 0 {
            rational_part +=
                rat_int(nk as i64) * (rat_int(1) - Rat::new((k as i64).into(), (e as i64).into()));
        }
    }

    let z3 = CyclotomicNumber::root_of_unity(3, 1)?;
    let z3sq = CyclotomicNumber::root_of_unity(3, 2)?;
    let one = CyclotomicNumber::one();
    let three = CyclotomicNumber::from_integer(3);

    let s_term = rep.trace_s.scaled(&rat(-1, 4));
    let rinv_term = z3sq
        .checked_mul(&rep.trace_rinv)?
        .checked_div(&three.checked_mul(&one.checked_sub(&z3sq)?)?)?;
    let r_term = z3
        .checked_mul(&rep.trace_r)?
        .checked_div(&three.checked_mul(&one.checked_sub(&z3)?)?)?;

    let total = CyclotomicNumber::from_rational(rational_part)
        .checked_add(&s_term)?
        .checked_add(&rinv_term)?
        .checked_add(&r_term)?;

    let total = total.to_rational().map_err(|_| Error::NonIntegral {
        context: format!("trace-form multiplicity of {}", rep.id),
        value: total.to_string(),
    })?;
    if !total.is_integer() {
        return Err(Error::NonIntegral {
            context: format!("trace-form multiplicity of {}", rep.id),
            value: total.to_string(),
        });
    }
    if total.is_negative() {
        return Err(Error::Negative {
            context: format!("trace-form multiplicity of {}", rep.id),
            value: total.to_string(),
        });
    }
    Ok(total
        .to_integer()
        .try_into()
        .expect("non-negative integer fits u64"))
}

/// The modular-base cover with cusp monodromy of order `e`. Pass
/// `group_order = 0` when the deck group order is not part of the data.
pub fn modular_cover(e: u64, group_order: u64) -> CoverSpec {
    CoverSpec {
        base: OrbifoldCurve::modular(),
        ramification: vec![RamPoint {
            degree: e,
            label: "T".into(),
        }],
        orbifold_monodromies: vec!["S".into(), "R^-1".into()],
        group_order,
    }
}

/// Rebuilds general-formula inputs from trace data. The orbifold profiles
/// come from the traces through the Fourier inversion in
/// [`nk_profile`]: at `S` from `(dim, Tr S)`, at `R^-1` from
/// `(dim, Tr R^-1, Tr R)` since `(R^-1)^2 = R`.
pub fn to_rep_input(rep: &Psl2zRepData) -> Result<RepInput> {
    let dim_value = CyclotomicNumber::from_integer(rep.dim as i64);
    let s_profile = nk_profile(&[dim_value.clone(), rep.trace_s.clone()], rep.dim)?;
    let rinv_profile = nk_profile(
        &[dim_value, rep.trace_rinv.clone(), rep.trace_r.clone()],
        rep.dim,
    )?;
    Ok(RepInput {
        id: rep.id.clone(),
        dim: rep.dim,
        is_trivial: rep.is_trivial,
        ram_profiles: vec![rep.t_profile.clone()],
        orb_profiles: vec![s_profile, rinv_profile],
    })
}

/// Translation into the general formula's input pair, for cross-checking
/// `cw_modular` against `cw_multiplicity_general`.
pub fn to_cover_and_rep(rep: &Psl2zRepData, e: u64) -> Result<(CoverSpec, RepInput)> {
    if rep.t_profile.order() != e {
        return Err(Error::Inconsistent(format!(
            "T-profile of {} has order {}, cusp width is {e}",
            rep.id,
            rep.t_profile.order()
        )));
    }
    Ok((modular_cover(e, 0), to_rep_input(rep)?))
}

/// Trace of an involution from its eigenvalue profile: `N_0 - N_1` at
/// order 2. The same number is `2 N_1(-rho(S)) - dim`, since negating
/// shifts the profile by one; both routes are exercised in the tests.
pub fn involution_trace(profile: &EigenvalueProfile) -> Result<i64> {
    if profile.order() != 2 {
        return Err(Error::Inconsistent(format!(
            "involution profile has order {}",
            profile.order()
        )));
    }
    Ok(profile.count(0) as i64 - profile.count(1) as i64)
}

/// Genus of the cover attached to a normal subgroup of index `d` with cusp
/// width `e` and `e2`/`e3` elliptic fixed classes of order 2/3:
/// `g = 1 + d/12 - e2/4 - e3/3 - d/(2e)`.
///
/// # Errors
/// [`Error::NonIntegral`] when the signature is invalid;
/// [`Error::Negative`] likewise.
pub fn genus_normal_subgroup(d: u64, e: u64, e2: u64, e3: u64) -> Result<u64> {
    if d == 0 || e == 0 {
        return Err(Error::OutOfRange(format!("index {d}, cusp width {e}")));
    }
    let g = rat_int(1) + rat(d as i64, 12) - rat(e2 as i64, 4) - rat(e3 as i64, 3)
        - Rat::new((d as i64).into(), (2 * e as i64).into());
    if !g.is_integer() {
        return Err(Error::NonIntegral {
            context: format!("genus for index {d}, cusp width {e}"),
            value: g.to_string(),
        });
    }
    if g.is_negative() {
        return Err(Error::Negative {
            context: format!("genus for index {d}, cusp width {e}"),
            value: g.to_string(),
        });
    }
    Ok(g.to_integer().try_into().expect("non-negative genus"))
}

/// The six one-dimensional characters of `PSL_2(Z)`, from its
/// abelianization `C_6` generated by the image of `T`: `chi_j(T) = z6^j`,
/// `chi_j(S) = (-1)^j`, `chi_j(R) = z3^{2j}`. Each `t_profile` is stored
/// at the order of `chi_j(T)`, the cusp width of the kernel.
pub fn six_characters() -> Result<Vec<Psl2zRepData>> {
    let mut out = Vec::with_capacity(6);
    for j in 0..6u64 {
        let e = 6 / num::integer::gcd(6, j);
        let exponent = j * e / 6;
        let mut counts = vec![0u64; e as usize];
        counts[exponent as usize] = 1;
        out.push(Psl2zRepData {
            id: format!("chi_{j}"),
            dim: 1,
            is_trivial: j == 0,
            trace_s: CyclotomicNumber::from_integer(if j % 2 == 0 { 1 } else { -1 }),
            trace_r: CyclotomicNumber::root_of_unity(3, 2 * j as i64)?,
            trace_rinv: CyclotomicNumber::root_of_unity(3, j as i64)?,
            t_profile: EigenvalueProfile::new(e, counts)?,
        });
    }
    Ok(out)
}

/// One two-dimensional spectrum with finite image: the pair of
/// `T`-eigenvalue exponents at order 120, plus the trace data its
/// projective-image classification forces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoDimSpectrum {
    /// Sorted exponent pair `(a, b)`: eigenvalues `z120^a, z120^b`.
    pub t_exponents_120: (u64, u64),
    /// Order of the projective image of `rho(T)`.
    pub projective_t_order: u64,
    pub trace_r: CyclotomicNumber,
    pub trace_rinv: CyclotomicNumber,
}

impl TwoDimSpectrum {
    /// The smallest order at which both eigenvalues live.
    pub fn minimal_e(&self) -> u64 {
        let g = num::integer::gcd(
            num::integer::gcd(self.t_exponents_120.0, self.t_exponents_120.1),
            120,
        );
        120 / g
    }

    /// Rep data at the minimal cusp width. `Tr S = 0` is forced in
    /// dimension 2 (the involution is nonscalar, so its eigenvalues are
    /// `1, -1`).
    pub fn rep_data(&self) -> Result<Psl2zRepData> {
        let e = self.minimal_e();
        let scale = 120 / e;
        let mut counts = vec![0u64; e as usize];
        counts[(self.t_exponents_120.0 / scale) as usize] += 1;
        counts[(self.t_exponents_120.1 / scale) as usize] += 1;
        Ok(Psl2zRepData {
            id: format!(
                "dim2_{}_{}",
                self.t_exponents_120.0, self.t_exponents_120.1
            ),
            dim: 2,
            is_trivial: false,
            trace_s: CyclotomicNumber::zero(),
            trace_r: self.trace_r.clone(),
            trace_rinv: self.trace_rinv.clone(),
            t_profile: EigenvalueProfile::new(e, counts)?,
        })
    }
}

/// All `T`-eigenvalue spectra of irreducible two-dimensional
/// representations of `PSL_2(Z)` with finite image, classified through the
/// finite subgroups of `PGL_2(C)`.
///
/// The projective image is generated by an involution and an order-3
/// element, so it is `S_3`, `A_4`, `S_4` or `A_5`, and the projective
/// order `m` of the image of `T` lies in `{2, 3, 4, 5}`. Writing
/// `delta = t1 t2 = det rho(T) = -det rho(R)`, the `R`-eigenvalues force
/// `delta` into `{-1, -z3, -z3^2}`; the eigenvalue ratio `omega = t2/t1`
/// is a primitive `m`-th root of unity and `t1^2 = delta omega`. Running
/// over all choices and both square roots yields exactly 27 distinct
/// spectra, 9 per `delta` family.
pub fn two_dim_finite_spectra() -> Result<Vec<TwoDimSpectrum>> {
    let z3 = CyclotomicNumber::root_of_unity(3, 1)?;
    let z3sq = CyclotomicNumber::root_of_unity(3, 2)?;
    let one = CyclotomicNumber::one();
    let minus_one = CyclotomicNumber::from_integer(-1);
    // (delta exponent at order 6, Tr R, Tr R^-1) per R-eigenvalue family:
    // (z3, z3^2) has det rho(R) = 1, (1, z3) has z3, (1, z3^2) has z3^2
    let families = [
        (3u64, minus_one.clone(), minus_one),
        (5, one.checked_add(&z3)?, one.checked_add(&z3sq)?),
        (1, one.checked_add(&z3sq)?, one.checked_add(&z3)?),
    ];

    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (d6, trace_r, trace_rinv) in families {
        for m in [2u64, 3, 4, 5] {
            let l = num::integer::lcm(6, m);
            for w in 1..m {
                if num::integer::gcd(w, m) != 1 {
                    continue;
                }
                // delta * omega at order l, then a square root at order 2l
                let a = (d6 * l / 6 + w * l / m) % l;
                let t1 = a * (60 / l);
                let t2 = (d6 * 20 + 120 - t1) % 120;
                for flip in [0u64, 60] {
                    let p = ((t1 + flip) % 120, (t2 + flip) % 120);
                    let key = (p.0.min(p.1), p.0.max(p.1));
                    if seen.insert(key) {
                        out.push(TwoDimSpectrum {
                            t_exponents_120: key,
                            projective_t_order: m,
                            trace_r: trace_r.clone(),
                            trace_rinv: trace_rinv.clone(),
                        });
                    }
                }
            }
        }
    }
    if out.len() != 27 {
        return Err(Error::Inconsistent(format!(
            "two-dimensional spectrum enumeration produced {} entries, expected 27",
            out.len()
        )));
    }
    Ok(out)
}

/// One of the four admissible two-dimensional spectra, with the recorded
/// data of the smallest normal subgroup realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleSpectrum {
    /// Exponent pair at `minimal_e`: eigenvalues `z_e^a, z_e^b`.
    pub t_exponents: (u64, u64),
    pub minimal_e: u64,
    pub minimal_index: u64,
    pub genus: u64,
}

/// The four spectra that occur in canonical representations, in the
/// recorded order: `(z12, z12^5)`, `(z8, z8^3)`, `(z20, z20^9)`,
/// `(z20^3, z20^7)`.
pub fn admissible_2dim_spectra() -> Vec<AdmissibleSpectrum> {
    vec![
        AdmissibleSpectrum {
            t_exponents: (1, 5),
            minimal_e: 12,
            minimal_index: 48,
            genus: 3,
        },
        AdmissibleSpectrum {
            t_exponents: (1, 3),
            minimal_e: 8,
            minimal_index: 48,
            genus: 2,
        },
        AdmissibleSpectrum {
            t_exponents: (1, 9),
            minimal_e: 20,
            minimal_index: 240,
            genus: 15,
        },
        AdmissibleSpectrum {
            t_exponents: (3, 7),
            minimal_e: 20,
            minimal_index: 720,
            genus: 55,
        },
    ]
}

/// An explicit matrix realization of a representation: images of `S` and
/// `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixModel {
    pub name: String,
    pub dim: u64,
    pub s_matrix: Vec<Vec<CyclotomicNumber>>,
    pub t_matrix: Vec<Vec<CyclotomicNumber>>,
}

/// Outcome of checking a matrix model against expected character data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Checks the defining relations `S^2 = I`, `(S T)^3 = I`, then the
/// `T`-eigenvalue profile and the traces at `S`, `R = S T` and
/// `R^-1 = (S T)^2` against `expected`. Every failed check is named in
/// the report.
pub fn verify_model(model: &MatrixModel, expected: &Psl2zRepData) -> Result<ModelReport> {
    let mut failures = Vec::new();
    let s = CycloMatrix::new(model.s_matrix.clone())?;
    let t = CycloMatrix::new(model.t_matrix.clone())?;
    if s.dim() as u64 != model.dim || t.dim() as u64 != model.dim {
        return Err(Error::Inconsistent(format!(
            "model {} declares dimension {}, matrices are {}x{} and {}x{}",
            model.name,
            model.dim,
            s.dim(),
            s.dim(),
            t.dim(),
            t.dim()
        )));
    }
    if model.dim != expected.dim {
        failures.push(format!(
            "dimension: model has {}, expected {}",
            model.dim, expected.dim
        ));
    }
    if !s.pow(2)?.is_identity() {
        failures.push("relation S^2 = I fails".into());
    }
    let r = s.checked_mul(&t)?;
    if !r.pow(3)?.is_identity() {
        failures.push("relation (ST)^3 = I fails".into());
    }
    match t.eigenvalue_counts(expected.t_profile.order()) {
        Ok(counts) => {
            if counts != expected.t_profile.counts() {
                failures.push(format!(
                    "T-eigenvalue profile: model {:?}, expected {:?}",
                    counts,
                    expected.t_profile.counts()
                ));
            }
        }
        Err(err) => failures.push(format!("T-eigenvalue extraction failed: {err}")),
    }
    let pairs = [
        ("Tr S", s.trace()?, &expected.trace_s),
        ("Tr R", r.trace()?, &expected.trace_r),
        ("Tr R^-1", r.pow(2)?.trace()?, &expected.trace_rinv),
    ];
    for (name, got, want) in pairs {
        if got != *want {
            failures.push(format!("{name}: model {got}, expected {want}"));
        }
    }
    Ok(ModelReport {
        pass: failures.is_empty(),
        failures,
    })
}

//! Stored explicit matrix models for canonical representations, checked
//! against independently computed character data.
//!
//! The models come from worked examples: the Klein quartic `X(Gamma(7))`,
//! the level-8 modular curve `X(Gamma(8))`, and the Fermat curves of
//! exponent 7 and 6. Each is stored as a pair of matrices for `S` and `T`
//! over a fixed root of unity, and must satisfy the defining relations of
//! the modular group and reproduce the `T`-eigenvalue profile and elliptic
//! traces predicted by the character tables. The expected data is pulled
//! from the character-table modules at check time, never stored alongside
//! the matrices, so the two can disagree.

use crate::error::{Error, Result};
use crate::exactmath::{rat_int, CycloMatrix, CyclotomicNumber};
use crate::fermat::{self, FermatKind};
use crate::groupcore::{
    character_table_dixon, generate_group, EigenvalueProfile, FiniteGroup, GroupElement, Matrix2,
    DEFAULT_SIZE_CAP,
};
use crate::modular::{
    cw_modular, genus_normal_subgroup, modular_cover, to_rep_input, verify_model, MatrixModel,
    ModelReport, Psl2zRepData,
};
use crate::psl2fp;
use serde::Deserialize;

/// A matrix entry as a sum of integer multiples of powers of the file's
/// root of unity.
type FixtureEntry = Vec<(i64, i64)>;

#[derive(Deserialize)]
struct FixtureModel {
    name: String,
    root_order: u64,
    t: Vec<Vec<FixtureEntry>>,
    s: Vec<Vec<FixtureEntry>>,
}

#[derive(Deserialize)]
struct FixtureFile {
    models: Vec<FixtureModel>,
}

const GAMMA7: &str = include_str!("../data/gamma7.json");
const GAMMA8: &str = include_str!("../data/gamma8.json");
const PHI7: &str = include_str!("../data/phi7.json");
const PHI6: &str = include_str!("../data/phi6.json");

fn entry(order: u64, terms: &[(i64, i64)]) -> Result<CyclotomicNumber> {
    let mut total = CyclotomicNumber::zero();
    for &(e, c) in terms {
        let term = CyclotomicNumber::root_of_unity(order, e)?.scaled(&rat_int(c));
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

fn matrix(order: u64, rows: &[Vec<FixtureEntry>]) -> Result<Vec<Vec<CyclotomicNumber>>> {
    rows.iter()
        .map(|row| row.iter().map(|e| entry(order, e)).collect())
        .collect()
}

fn load(raw: &str) -> Result<Vec<MatrixModel>> {
    let file: FixtureFile = serde_json::from_str(raw)
        .map_err(|e| Error::Inconsistent(format!("fixture file does not parse: {e}")))?;
    file.models
        .into_iter()
        .map(|m| {
            Ok(MatrixModel {
                dim: m.t.len() as u64,
                s_matrix: matrix(m.root_order, &m.s)?,
                t_matrix: matrix(m.root_order, &m.t)?,
                name: m.name,
            })
        })
        .collect()
}

/// All stored matrix models, in file order.
pub fn all_models() -> Result<Vec<MatrixModel>> {
    let mut models = Vec::new();
    for raw in [GAMMA7, GAMMA8, PHI7, PHI6] {
        models.extend(load(raw)?);
    }
    Ok(models)
}

/// Look up a stored model by name.
pub fn model(name: &str) -> Result<MatrixModel> {
    all_models()?
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| Error::Inconsistent(format!("no stored model named {name}")))
}

fn fermat_row(n: u64, kind: FermatKind) -> Result<Psl2zRepData> {
    let table = fermat::rep_table(n)?;
    let row = table
        .iter()
        .find(|r| r.kind == kind)
        .ok_or_else(|| Error::Inconsistent(format!("no Fermat table row for {kind:?}")))?;
    fermat::to_rep_data(row)
}

/// The character data each stored model must reproduce, taken from the
/// independent sources: the Frobenius-Schur table for the Klein quartic,
/// the Dixon table of the level-8 quotient, and the Fermat representation
/// table.
pub fn expected_data(name: &str) -> Result<Psl2zRepData> {
    match name {
        "gamma7" => {
            let rows = psl2fp::char_data(7)?;
            let row = rows
                .iter()
                .find(|r| r.id() == "gamma_2")
                .ok_or_else(|| Error::Inconsistent("no gamma_2 row for p = 7".into()))?;
            psl2fp::to_rep_data(row)
        }
        "gamma8" => gamma8_expected(),
        "phi7_rho_minus_1" => fermat_row(7, FermatKind::Minus(1)),
        "phi7_rho_minus_2" => fermat_row(7, FermatKind::Minus(2)),
        "phi7_rho_minus_3" => fermat_row(7, FermatKind::Minus(3)),
        "phi7_rho_2_1" => fermat_row(7, FermatKind::SixDim(1, 2)),
        "phi6_rho2_2" => fermat_row(6, FermatKind::Extra { level: 2, m: 2 }),
        "phi6_rho_minus_1" => fermat_row(6, FermatKind::Minus(1)),
        "phi6_rho_3_2" => fermat_row(6, FermatKind::SixDim(1, 2)),
        other => Err(Error::Inconsistent(format!(
            "no expected data for model {other}"
        ))),
    }
}

/// The image of the modular group at level 8: `SL2(Z/8)` with the center
/// identified, generated by `S` and `T`, of order 192.
pub fn gamma8_group() -> Result<FiniteGroup> {
    let s = GroupElement::Matrix(Matrix2::new(8, true, [0, -1, 1, 0])?);
    let t = GroupElement::Matrix(Matrix2::new(8, true, [1, 1, 0, 1])?);
    let group = generate_group(&[s, t], DEFAULT_SIZE_CAP)?;
    if group.order() != 192 {
        return Err(Error::Inconsistent(format!(
            "level-8 quotient has order {}, expected 192",
            group.order()
        )));
    }
    Ok(group)
}

/// The irreducible constituents of the canonical representation at level 8
/// with their data, computed from the Dixon table of the generated group:
/// exactly one 2-dimensional and one 3-dimensional representation, each
/// with multiplicity one, totalling the genus 5.
pub fn gamma8_canonical_summands() -> Result<Vec<Psl2zRepData>> {
    let group = gamma8_group()?;
    let table = character_table_dixon(&group)?;
    let classes = group.conjugacy_classes();
    let locate = |e: [i64; 4]| -> Result<usize> {
        let el = GroupElement::Matrix(Matrix2::new(8, true, e)?);
        let idx = group
            .index_of(&el)
            .ok_or_else(|| Error::Inconsistent(format!("element {e:?} not in group")))?;
        Ok(classes.class_of[idx])
    };
    let s_class = locate([0, -1, 1, 0])?;
    let r_class = locate([0, -1, 1, 1])?;
    let rinv_class = locate([1, 1, -1, 0])?;
    let t_class = locate([1, 1, 0, 1])?;

    let one = CyclotomicNumber::one();
    let cover = modular_cover(8, 192);
    let mut summands = Vec::new();
    let mut total = 0u64;
    for (i, row) in table.values.iter().enumerate() {
        let profile = table.profiles[i][t_class].clone();
        if profile.order() != 8 {
            return Err(Error::Inconsistent(format!(
                "class of T at level 8 has representative order {}",
                profile.order()
            )));
        }
        let rep = Psl2zRepData {
            id: format!("level8_row_{i}"),
            dim: table.dim(i),
            is_trivial: row.iter().all(|v| *v == one),
            trace_s: row[s_class].clone(),
            trace_r: row[r_class].clone(),
            trace_rinv: row[rinv_class].clone(),
            t_profile: profile,
        };
        let d = if rep.is_trivial {
            crate::cwcore::cw_multiplicity_general(&cover, &to_rep_input(&rep)?)?
        } else {
            cw_modular(&rep, 8)?
        };
        total += d * rep.dim;
        if d > 0 {
            if d != 1 {
                return Err(Error::Inconsistent(format!(
                    "level-8 constituent {} has multiplicity {d}",
                    rep.id
                )));
            }
            summands.push(rep);
        }
    }
    let genus = genus_normal_subgroup(192, 8, 0, 0)?;
    if total != genus {
        return Err(Error::GenusMismatch {
            expected: genus,
            total,
        });
    }
    summands.sort_by_key(|r| r.dim);
    let dims: Vec<u64> = summands.iter().map(|r| r.dim).collect();
    if dims != [2, 3] {
        return Err(Error::Inconsistent(format!(
            "level-8 constituents have dimensions {dims:?}, expected [2, 3]"
        )));
    }
    Ok(summands)
}

/// Expected data for the reducible 5-dimensional level-8 model: the direct
/// sum of the two canonical constituents.
fn gamma8_expected() -> Result<Psl2zRepData> {
    let summands = gamma8_canonical_summands()?;
    let mut counts = vec![0u64; 8];
    let mut trace_s = CyclotomicNumber::zero();
    let mut trace_r = CyclotomicNumber::zero();
    let mut trace_rinv = CyclotomicNumber::zero();
    let mut dim = 0;
    for rep in &summands {
        dim += rep.dim;
        trace_s = trace_s.checked_add(&rep.trace_s)?;
        trace_r = trace_r.checked_add(&rep.trace_r)?;
        trace_rinv = trace_rinv.checked_add(&rep.trace_rinv)?;
        for (k, c) in rep.t_profile.counts().iter().enumerate() {
            counts[k] += c;
        }
    }
    Ok(Psl2zRepData {
        id: "gamma8".into(),
        dim,
        is_trivial: false,
        trace_s,
        trace_r,
        trace_rinv,
        t_profile: EigenvalueProfile::new(8, counts)?,
    })
}

/// Order of a matrix known to be of finite order, by repeated
/// multiplication up to `cap`.
pub fn matrix_order(m: &CycloMatrix, cap: u64) -> Result<u64> {
    let mut acc = CycloMatrix::identity(m.dim());
    for k in 1..=cap {
        acc = acc.checked_mul(m)?;
        if acc.is_identity() {
            return Ok(k);
        }
    }
    Err(Error::Inconsistent(format!(
        "matrix order exceeds the cap {cap}"
    )))
}

/// Verify every stored model against its expected data; returns the
/// per-model reports in file order.
pub fn verify_all() -> Result<Vec<(String, ModelReport)>> {
    let mut reports = Vec::new();
    for model in all_models()? {
        let expected = expected_data(&model.name)?;
        let report = verify_model(&model, &expected)?;
        reports.push((model.name, report));
    }
    Ok(reports)
}

//! Character data and canonical-representation multiplicities for the
//! principal congruence covers of prime level.
//!
//! For a prime `p >= 5` the deck group of `X(Gamma(p)) -> X(1)` is
//! `PSL_2(F_p)`. This module carries its Frobenius-Schur character table
//! (one table per residue of `p` mod 4), the `T`-ramification profiles,
//! the class-number identities entering the `p = 3 (mod 4)` case, and two
//! independent routes to the multiplicities: the printed closed forms and
//! direct evaluation of the trace formula. A third, fully independent
//! route goes through the Dixon-Burnside oracle of
//! [`crate::groupcore::character_table_dixon`] on the matrix group itself.

use num::traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cwcore::{cw_multiplicity_general, Decomposition, DecompositionEntry, GenusCertificate};
use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_int, CyclotomicNumber, Rat};
use crate::groupcore::{
    character_table_dixon, generate_group, EigenvalueProfile, FiniteGroup, GroupElement, Matrix2,
    DEFAULT_SIZE_CAP,
};
use crate::modular::{cw_modular, genus_normal_subgroup, modular_cover, to_rep_input, Psl2zRepData};
use crate::numth;

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i64 {
    debug_assert!(p > 2 && numth::is_prime(p));
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    match numth::modpow(r, (p - 1) / 2, p) {
        1 => 1,
        x if x == p - 1 => -1,
        _ => unreachable!("Euler criterion"),
    }
}

/// `epsilon_3(n)`: 2 when `3 | n`, else -1.
pub fn epsilon3(n: u64) -> i64 {
    if n.is_multiple_of(3) {
        2
    } else {
        -1
    }
}

/// The quadratic Gauss sum `sum_k (k/p) zeta_p^k`. Its square is
/// `(-1/p) p`, so it is `sqrt(p)` for `p = 1 (mod 4)` and `sqrt(-p)` for
/// `p = 3 (mod 4)`; the square-root entries of the character tables are
/// stored through it, inside the single field `Q(zeta_p)`.
pub fn gauss_sum(p: u64) -> Result<CyclotomicNumber> {
    check_p(p)?;
    let mut acc = CyclotomicNumber::zero();
    for k in 1..p {
        let term = CyclotomicNumber::root_of_unity(p, k as i64)?;
        acc = if legendre(k as i64, p) == 1 {
            acc.checked_add(&term)?
        } else {
            acc.checked_sub(&term)?
        };
    }
    Ok(acc)
}

/// The fixed generator of `F_p^x` used to name the non-residue unipotent
/// class: the least primitive root mod `p`. Only its class modulo squares
/// matters, which the tests confirm.
pub fn u_p(p: u64) -> u64 {
    numth::primitive_root(p)
}

fn check_p(p: u64) -> Result<()> {
    if !numth::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::OutOfRange(format!("level {p} < 5")));
    }
    Ok(())
}

/// Which Frobenius-Schur family a row belongs to. `Mu`/`Theta` carry the
/// series parameter; `Chi1`/`Chi2` exist for `p = 1 (mod 4)`,
/// `Gamma1`/`Gamma2` for `p = 3 (mod 4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Trivial,
    Lambda,
    Mu(u64),
    Theta(u64),
    Chi1,
    Chi2,
    Gamma1,
    Gamma2,
}

/// One row of the character table, reduced to the classes the trace
/// formula consumes: `S`, `R` (conjugate to `R^-1` here, so one value
/// serves both), the class of `T`, and the non-residue unipotent class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl2fpCharData {
    pub p: u64,
    pub family: Family,
    pub dim: u64,
    pub trace_s: CyclotomicNumber,
    pub trace_r: CyclotomicNumber,
    pub trace_t: CyclotomicNumber,
    pub trace_u: CyclotomicNumber,
}

impl Psl2fpCharData {
    pub fn id(&self) -> String {
        match &self.family {
            Family::Trivial => "trivial".into(),
            Family::Lambda => "lambda".into(),
            Family::Mu(s) => format!("mu_{s}"),
            Family::Theta(t) => format!("theta_{t}"),
            Family::Chi1 => "chi_1".into(),
            Family::Chi2 => "chi_2".into(),
            Family::Gamma1 => "gamma_1".into(),
            Family::Gamma2 => "gamma_2".into(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.family == Family::Trivial
    }
}

/// The full character data of `PSL_2(F_p)`, trivial row first, then
/// `lambda`, the `mu_s`, the `theta_t`, and the half-dimension pair.
/// Square-root entries are Gauss sums in `Q(zeta_p)`.
pub fn char_data(p: u64) -> Result<Vec<Psl2fpCharData>> {
    check_p(p)?;
    let int = CyclotomicNumber::from_integer;
    let one = int(1);
    let g = gauss_sum(p)?;
    let half = rat(1, 2);
    let p3 = legendre(p as i64, 3);

    let mut rows = Vec::new();
    let mut push = |family: Family, dim: u64, s: i64, r: i64, t: CyclotomicNumber, u: CyclotomicNumber| {
        rows.push(Psl2fpCharData {
            p,
            family,
            dim,
            trace_s: int(s),
            trace_r: int(r),
            trace_t: t,
            trace_u: u,
        });
    };

    push(Family::Trivial, 1, 1, 1, one.clone(), one.clone());
    if p % 4 == 1 {
        push(
            Family::Lambda,
            p,
            1,
            if p3 == 1 { 1 } else { -1 },
            int(0),
            int(0),
        );
        for s in 1..=(p - 5) / 4 {
            push(
                Family::Mu(s),
                p + 1,
                2 * (-1i64).pow(s as u32),
                if p3 == 1 { epsilon3(s) } else { 0 },
                one.clone(),
                one.clone(),
            );
        }
        for t in 1..=(p - 1) / 4 {
            push(
                Family::Theta(t),
                p - 1,
                0,
                if p3 == 1 { 0 } else { -epsilon3(t) },
                int(-1),
                int(-1),
            );
        }
        let s_chi = (-1i64).pow(((p - 1) / 4) as u32);
        let r_chi = if p3 == 1 { 1 } else { 0 };
        let plus = one.checked_add(&g)?.scaled(&half);
        let minus = one.checked_sub(&g)?.scaled(&half);
        push(Family::Chi1, p.div_ceil(2), s_chi, r_chi, plus.clone(), minus.clone());
        push(Family::Chi2, p.div_ceil(2), s_chi, r_chi, minus, plus);
    } else {
        push(
            Family::Lambda,
            p,
            -1,
            if p3 == 1 { 1 } else { -1 },
            int(0),
            int(0),
        );
        for s in 1..=(p - 3) / 4 {
            push(
                Family::Mu(s),
                p + 1,
                0,
                if p3 == 1 { epsilon3(s) } else { 0 },
                one.clone(),
                one.clone(),
            );
        }
        for t in 1..=(p - 3) / 4 {
            push(
                Family::Theta(t),
                p - 1,
                -2 * (-1i64).pow(t as u32),
                if p3 == 1 { 0 } else { -epsilon3(t) },
                int(-1),
                int(-1),
            );
        }
        let s_gamma = -(-1i64).pow(((p + 1) / 4) as u32);
        let r_gamma = if p3 == 1 { 0 } else { -1 };
        let minus = int(-1).checked_sub(&g)?.scaled(&half);
        let plus = int(-1).checked_add(&g)?.scaled(&half);
        push(
            Family::Gamma1,
            (p - 1) / 2,
            s_gamma,
            r_gamma,
            minus.clone(),
            plus.clone(),
        );
        push(Family::Gamma2, (p - 1) / 2, s_gamma, r_gamma, plus, minus);
    }

    let mut dim_sq = 0u64;
    for row in &rows {
        dim_sq += row.dim * row.dim;
    }
    let order = p * (p * p - 1) / 2;
    if dim_sq != order {
        return Err(Error::Inconsistent(format!(
            "character dimensions for p = {p} give sum of squares {dim_sq}, group order is {order}"
        )));
    }
    Ok(rows)
}

/// The eigenvalue profile of the row at `T`, order `p`. The `k >= 1`
/// counts follow the residue pattern of the family; `N_0` is forced by
/// `sum_k N_k = dim` (`lambda`: 1, `mu`: 2, `theta`: 0, `chi`: 1,
/// `gamma`: 0).
pub fn t_profile(rep: &Psl2fpCharData) -> Result<EigenvalueProfile> {
    let p = rep.p;
    let counts: Vec<u64> = match rep.family {
        Family::Trivial => {
            let mut c = vec![0; p as usize];
            c[0] = 1;
            c
        }
        Family::Lambda => vec![1; p as usize],
        Family::Mu(_) => {
            let mut c = vec![1; p as usize];
            c[0] = 2;
            c
        }
        Family::Theta(_) => {
            let mut c = vec![1; p as usize];
            c[0] = 0;
            c
        }
        Family::Chi1 | Family::Chi2 | Family::Gamma1 | Family::Gamma2 => {
            let want = match rep.family {
                Family::Chi1 | Family::Gamma2 => 1,
                _ => -1,
            };
            let mut c: Vec<u64> = (0..p).map(|k| (legendre(k as i64, p) == want) as u64).collect();
            c[0] = match rep.family {
                Family::Chi1 | Family::Chi2 => 1,
                _ => 0,
            };
            c
        }
    };
    let profile = EigenvalueProfile::new(p, counts)?;
    if profile.dim() != rep.dim {
        return Err(Error::Inconsistent(format!(
            "T-profile of {} sums to {}, dimension is {}",
            rep.id(),
            profile.dim(),
            rep.dim
        )));
    }
    Ok(profile)
}

/// Translation into the trace-form input; `Tr R^-1 = Tr R` because the two
/// classes coincide here.
pub fn to_rep_data(rep: &Psl2fpCharData) -> Result<Psl2zRepData> {
    Ok(Psl2zRepData {
        id: rep.id(),
        dim: rep.dim,
        is_trivial: rep.is_trivial(),
        trace_s: rep.trace_s.clone(),
        trace_r: rep.trace_r.clone(),
        trace_rinv: rep.trace_r.clone(),
        t_profile: t_profile(rep)?,
    })
}

fn check_p_3mod4(p: u64) -> Result<()> {
    check_p(p)?;
    if p % 4 != 3 {
        return Err(Error::OutOfRange(format!("{p} is not 3 mod 4")));
    }
    Ok(())
}

/// Class number of `Q(sqrt(-p))` for `p = 3 (mod 4)`, `p >= 7`, by the
/// finite sum the analytic class number formula reduces to:
/// `h(p) = (p-1)/2 - (2/p) sum_{(k/p) = 1} k`.
pub fn class_number(p: u64) -> Result<u64> {
    check_p_3mod4(p)?;
    let qr_sum: i128 = (1..p).filter(|&k| legendre(k as i64, p) == 1).map(|k| k as i128).sum();
    let twice = 2 * qr_sum;
    if twice % p as i128 != 0 {
        return Err(Error::Inconsistent(format!(
            "residue sum {qr_sum} for p = {p} is not divisible as required"
        )));
    }
    let h = (p as i128 - 1) / 2 - twice / p as i128;
    if h <= 0 {
        return Err(Error::Inconsistent(format!(
            "class number formula for p = {p} gave {h}"
        )));
    }
    Ok(h as u64)
}

/// Independent class-number oracle: counts reduced primitive binary
/// quadratic forms `a x^2 + b x y + c y^2` of discriminant `-p`, i.e.
/// `|b| <= a <= c`, `b^2 - 4 a c = -p`, with `b >= 0` whenever `|b| = a`
/// or `a = c`.
pub fn class_number_forms_oracle(p: u64) -> Result<u64> {
    check_p_3mod4(p)?;
    let disc = -(p as i64);
    let mut count = 0u64;
    let mut a = 1i64;
    while 3 * a * a <= -disc {
        for b in -a..=a {
            let num = b * b - disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if b < 0 && (b == -a || a == c) {
                continue;
            }
            // discriminant -p prime: forms are automatically primitive
            count += 1;
        }
        a += 1;
    }
    Ok(count)
}

fn expect_multiplicity(id: &str, value: Rat) -> Result<u64> {
    if !value.is_integer() {
        return Err(Error::NonIntegral {
            context: format!("closed-form multiplicity of {id}"),
            value: value.to_string(),
        });
    }
    if value.is_negative() {
        return Err(Error::Negative {
            context: format!("closed-form multiplicity of {id}"),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer().try_into().expect("nonnegative fits u64"))
}

fn certified(p: u64, entries: Vec<DecompositionEntry>) -> Result<Decomposition> {
    let order = p * (p * p - 1) / 2;
    let expected = genus_normal_subgroup(order, p, 0, 0)?;
    let total: u64 = entries.iter().map(|e| e.multiplicity * e.dim).sum();
    if total != expected {
        return Err(Error::GenusMismatch { expected, total });
    }
    Ok(Decomposition {
        entries,
        genus_certificate: Some(GenusCertificate { expected, total }),
    })
}

/// Multiplicities by the printed closed forms, one formula per family and
/// residue of `p` mod 4, certified against the genus of `X(Gamma(p))`.
pub fn multiplicities_closed_form(p: u64) -> Result<Decomposition> {
    check_p(p)?;
    let pi = p as i64;
    let l3 = legendre(pi, 3);
    let mut entries = Vec::new();
    let mut push = |id: String, dim: u64, value: Rat| -> Result<()> {
        entries.push(DecompositionEntry {
            rep_id: id.clone(),
            dim,
            multiplicity: expect_multiplicity(&id, value)?,
        });
        Ok(())
    };

    push("trivial".into(), 1, rat_int(0))?;
    if p % 4 == 1 {
        push("lambda".into(), p, rat(pi - 9, 12) - rat(l3, 3))?;
        for s in 1..=(p - 5) / 4 {
            let d = rat(pi - 11, 12) - rat((-1i64).pow(s as u32), 2)
                - rat((1 + l3) * epsilon3(s), 6);
            push(format!("mu_{s}"), p + 1, d)?;
        }
        for t in 1..=(p - 1) / 4 {
            let d = rat(pi - 1, 12) + rat((1 - l3) * epsilon3(t), 6);
            push(format!("theta_{t}"), p - 1, d)?;
        }
        let d_chi = rat(pi - 11, 24) - rat((-1i64).pow(((p - 1) / 4) as u32), 4)
            - rat(1 + l3, 6);
        push("chi_1".into(), p.div_ceil(2), d_chi.clone())?;
        push("chi_2".into(), p.div_ceil(2), d_chi)?;
    } else {
        let h = class_number(p)? as i64;
        push("lambda".into(), p, rat(pi - 3, 12) - rat(l3, 3))?;
        for s in 1..=(p - 3) / 4 {
            let d = rat(pi - 11, 12) - rat((1 + l3) * epsilon3(s), 6);
            push(format!("mu_{s}"), p + 1, d)?;
        }
        for t in 1..=(p - 3) / 4 {
            let d = rat(pi - 1, 12) + rat((-1i64).pow(t as u32), 2)
                + rat((1 - l3) * epsilon3(t), 6);
            push(format!("theta_{t}"), p - 1, d)?;
        }
        let base = rat(pi - 1, 24) + rat((-1i64).pow(((p + 1) / 4) as u32), 4)
            + rat(1 - l3, 6);
        push("gamma_1".into(), (p - 1) / 2, base.clone() - rat(h, 2))?;
        push("gamma_2".into(), (p - 1) / 2, base + rat(h, 2))?;
    }
    certified(p, entries)
}

/// Multiplicities by direct evaluation of the trace formula at cusp width
/// `p` on the tabulated character data; the trivial row goes through the
/// general formula instead (the trace form excludes it).
pub fn multiplicities_direct(p: u64) -> Result<Decomposition> {
    let data = char_data(p)?;
    let cover = modular_cover(p, p * (p * p - 1) / 2);
    let mut entries = Vec::with_capacity(data.len());
    for row in &data {
        let rep = to_rep_data(row)?;
        let multiplicity = if row.is_trivial() {
            cw_multiplicity_general(&cover, &to_rep_input(&rep)?)?
        } else {
            cw_modular(&rep, p)?
        };
        entries.push(DecompositionEntry {
            rep_id: rep.id,
            dim: rep.dim,
            multiplicity,
        });
    }
    certified(p, entries)
}

/// The group itself, generated by the images of `S` and `T` mod `p`.
pub fn psl2fp_group(p: u64) -> Result<FiniteGroup> {
    check_p(p)?;
    let s = GroupElement::Matrix(Matrix2::new(p, true, [0, -1, 1, 0])?);
    let t = GroupElement::Matrix(Matrix2::new(p, true, [1, 1, 0, 1])?);
    let group = generate_group(&[s, t], DEFAULT_SIZE_CAP)?;
    let order = p * (p * p - 1) / 2;
    if group.order() as u64 != order {
        return Err(Error::Inconsistent(format!(
            "generated group for p = {p} has order {}, expected {order}",
            group.order()
        )));
    }
    Ok(group)
}

/// Cross-validates the tabulated character data against the Dixon-Burnside
/// oracle run on the generated matrix group: the multisets of
/// `(dim, Tr S, Tr R, Tr T, Tr U)` tuples must coincide, where `U` is the
/// non-residue unipotent class.
pub fn dixon_cross_check(p: u64) -> Result<()> {
    let group = psl2fp_group(p)?;
    let table = character_table_dixon(&group)?;
    let classes = group.conjugacy_classes();

    let locate = |e: [i64; 4]| -> Result<usize> {
        let el = GroupElement::Matrix(Matrix2::new(p, true, e)?);
        let idx = group
            .index_of(&el)
            .ok_or_else(|| Error::Inconsistent(format!("element {e:?} not in group")))?;
        Ok(classes.class_of[idx])
    };
    let u = u_p(p) as i64;
    let columns = [
        locate([0, -1, 1, 0])?,       // S
        locate([1, -1, 1, 0])?,       // R = ST
        locate([1, 1, 0, 1])?,        // T
        locate([1, u, 0, 1])?,        // non-residue unipotent
    ];

    let key_of = |dim: u64, values: [&CyclotomicNumber; 4]| -> Result<(u64, Vec<Vec<Rat>>)> {
        let mut keys = Vec::with_capacity(4);
        for v in values {
            keys.push(v.sort_key_at(table.exponent)?);
        }
        Ok((dim, keys))
    };

    let mut oracle_keys = Vec::new();
    for (i, row) in table.values.iter().enumerate() {
        oracle_keys.push(key_of(
            table.dim(i),
            [
                &row[columns[0]],
                &row[columns[1]],
                &row[columns[2]],
                &row[columns[3]],
            ],
        )?);
    }
    let mut table_keys = Vec::new();
    for row in char_data(p)? {
        table_keys.push(key_of(
            row.dim,
            [&row.trace_s, &row.trace_r, &row.trace_t, &row.trace_u],
        )?);
    }
    oracle_keys.sort();
    table_keys.sort();
    if oracle_keys != table_keys {
        return Err(Error::Inconsistent(format!(
            "character data for p = {p} disagrees with the Dixon oracle on the designated classes"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(1, 7), 1);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
        assert_eq!(legendre(13, 3), 1);
        assert_eq!(legendre(-1, 5), 1);
        assert_eq!(legendre(-1, 7), -1);
        // multiplicativity spot check
        for p in [5u64, 11, 13] {
            for a in 1..p as i64 {
                for b in 1..p as i64 {
                    assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
                }
            }
        }
    }

    #[test]
    fn epsilon3_values() {
        assert_eq!(epsilon3(0), 2);
        assert_eq!(epsilon3(1), -1);
        assert_eq!(epsilon3(6), 2);
    }

    #[test]
    fn gauss_sum_squares() {
        for p in [5u64, 13, 17] {
            let g = gauss_sum(p).unwrap();
            let sq = g.checked_mul(&g).unwrap();
            assert_eq!(sq.to_rational().unwrap(), rat_int(p as i64));
        }
        for p in [7u64, 11, 19] {
            let g = gauss_sum(p).unwrap();
            let sq = g.checked_mul(&g).unwrap();
            assert_eq!(sq.to_rational().unwrap(), rat_int(-(p as i64)));
        }
    }

    #[test]
    fn char_data_shapes() {
        for (p, n_rows) in [(5u64, 5usize), (7, 6), (11, 8), (13, 9)] {
            let rows = char_data(p).unwrap();
            assert_eq!(rows.len(), n_rows, "row count for p = {p}");
            let total: u64 = rows.iter().map(|r| r.dim * r.dim).sum();
            assert_eq!(total, p * (p * p - 1) / 2);
            for row in &rows {
                assert_eq!(t_profile(row).unwrap().dim(), row.dim);
            }
        }
        assert!(matches!(char_data(6), Err(Error::NotPrime(6))));
        assert!(matches!(char_data(3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn klein_quartic_row() {
        let rows = char_data(7).unwrap();
        let gamma2 = rows.iter().find(|r| r.family == Family::Gamma2).unwrap();
        assert_eq!(gamma2.dim, 3);
        assert_eq!(gamma2.trace_s.to_rational().unwrap(), rat_int(-1));
        assert_eq!(gamma2.trace_r.to_rational().unwrap(), rat_int(0));
        let profile = t_profile(gamma2).unwrap();
        let exponents: Vec<u64> = (0..7).filter(|&k| profile.count(k) == 1).collect();
        assert_eq!(exponents, vec![1, 2, 4]);
    }

    #[test]
    fn residue_sums_identity() {
        for p in (5..=47u64).filter(|&p| numth::is_prime(p)) {
            let qr: u64 = (1..p).filter(|&k| legendre(k as i64, p) == 1).sum();
            let nqr: u64 = (1..p).filter(|&k| legendre(k as i64, p) == -1).sum();
            assert_eq!(qr + nqr, p * (p - 1) / 2);
            if p % 4 == 1 {
                // both sums equal (p-1)/4 after dividing by p
                assert_eq!(qr, nqr);
                assert_eq!(4 * qr, p * (p - 1));
            }
        }
    }

    #[test]
    fn class_numbers_match_forms_oracle() {
        assert_eq!(class_number(7).unwrap(), 1);
        assert_eq!(class_number(11).unwrap(), 1);
        assert_eq!(class_number(23).unwrap(), 3);
        assert_eq!(class_number_forms_oracle(23).unwrap(), 3);
        for p in (7..=163u64).filter(|&p| numth::is_prime(p) && p % 4 == 3) {
            assert_eq!(
                class_number(p).unwrap(),
                class_number_forms_oracle(p).unwrap(),
                "class number disagreement at p = {p}"
            );
        }
        assert!(class_number(13).is_err());
    }

    #[test]
    fn closed_form_golden_values() {
        let by_id = |d: &Decomposition, id: &str| -> u64 {
            d.entries
                .iter()
                .find(|e| e.rep_id == id)
                .unwrap()
                .multiplicity
        };
        let d5 = multiplicities_closed_form(5).unwrap();
        assert!(d5.entries.iter().all(|e| e.multiplicity == 0));

        let d7 = multiplicities_closed_form(7).unwrap();
        for e in &d7.entries {
            assert_eq!(e.multiplicity, u64::from(e.rep_id == "gamma_2"), "{}", e.rep_id);
        }
        assert_eq!(d7.total_dimension(), 3);

        let d11 = multiplicities_closed_form(11).unwrap();
        for id in ["lambda", "theta_2", "gamma_2"] {
            assert_eq!(by_id(&d11, id), 1);
        }
        assert_eq!(d11.total_dimension(), 26);

        let d13 = multiplicities_closed_form(13).unwrap();
        for id in ["mu_1", "theta_1", "theta_2", "theta_3"] {
            assert_eq!(by_id(&d13, id), 1);
        }
        assert_eq!(by_id(&d13, "mu_2"), 0);
        assert_eq!(by_id(&d13, "chi_1"), 0);
        assert_eq!(d13.total_dimension(), 50);
    }

    #[test]
    fn direct_equals_closed_form() {
        for p in [5u64, 7, 11, 13, 19] {
            let closed = multiplicities_closed_form(p).unwrap();
            let direct = multiplicities_direct(p).unwrap();
            assert_eq!(closed, direct, "disagreement at p = {p}");
        }
    }

    #[test]
    fn unipotent_classes_split_by_residue() {
        for p in [5u64, 7, 11, 13] {
            let group = psl2fp_group(p).unwrap();
            let classes = group.conjugacy_classes();
            let class_of = |j: i64| {
                let el = GroupElement::Matrix(Matrix2::new(p, true, [1, j, 0, 1]).unwrap());
                classes.class_of[group.index_of(&el).unwrap()]
            };
            let t_class = class_of(1);
            let u_class = class_of(u_p(p) as i64);
            assert_ne!(t_class, u_class);
            for j in 1..p as i64 {
                let expected = if legendre(j, p) == 1 { t_class } else { u_class };
                assert_eq!(class_of(j), expected, "p = {p}, j = {j}");
            }
            // lower-triangular form of the table footnote: for p = 3 (4)
            // it lands in the class of T
            if p % 4 == 3 {
                let lower = GroupElement::Matrix(
                    Matrix2::new(p, true, [1, 0, u_p(p) as i64, 1]).unwrap(),
                );
                assert_eq!(classes.class_of[group.index_of(&lower).unwrap()], t_class);
            }
        }
    }

    #[test]
    fn dixon_agrees_small_primes() {
        for p in [5u64, 7] {
            dixon_cross_check(p).unwrap();
        }
    }
}

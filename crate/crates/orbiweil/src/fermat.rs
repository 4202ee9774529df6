//! The Fermat curve `x^N + y^N = z^N` as a cover of the modular orbifold.
//!
//! The curve is Galois over `P^1` with group `G = (Z/N)^2 x| S3` of order
//! `6 N^2`, the quotient orbifold is the modular one of signature
//! `(0; 2, 3; 1)` with cusp width `e = 2N`, and the genus is
//! `(N-1)(N-2)/2`. Everything here is driven by the character theory of
//! `G`: the irreducible characters are parametrized by the orbits of `S3`
//! on the character lattice `(Z/N)^2` together with a character of the
//! stabilizer, and the space of holomorphic differentials decomposes with
//! multiplicities that admit short combinatorial closed forms.
//!
//! Three independent routes to those multiplicities are implemented and
//! cross-checked: the closed forms, the trace form of the general
//! multiplicity formula evaluated on the representation data, and a
//! little-groups induction oracle whose output is matched both against the
//! stored representation table and against the Dixon character table of
//! the explicitly generated group.

use crate::cwcore::{
    cw_multiplicity_general, Decomposition, DecompositionEntry, GenusCertificate,
};
use crate::error::{Error, Result};
use crate::exactmath::{CyclotomicNumber, Rat};
use crate::groupcore::{
    character_table_dixon, generate_group, nk_profile, s3_compose, EigenvalueProfile, FiniteGroup,
    GroupElement, SemiElem, S3, S3_IDENTITY, DEFAULT_SIZE_CAP,
};
use crate::modular::{
    cw_modular, genus_normal_subgroup, modular_cover, to_rep_input, Psl2zRepData,
};
use num::{Signed, Zero};

/// Transposition `(0 1)`; its dual action swaps the two label coordinates.
const S3_SWAP: S3 = [1, 0, 2];
/// Three-cycle `0 -> 1 -> 2 -> 0`.
const S3_ROT: S3 = [1, 2, 0];
/// Permutation part of the cusp generator `T = (0, -1; su)`.
const S3_SU: S3 = [0, 2, 1];

fn check_n(n: u64) -> Result<()> {
    if !(2..=100).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "Fermat exponent {n} outside the supported range 2..=100"
        )));
    }
    Ok(())
}

/// Stabilizer in `S3` of a character of `(Z/N)^2` under the dual action.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Stabilizer {
    /// All of `S3`; the orbit is a single label.
    Full,
    /// The order-2 subgroup generated by the swap; orbit size 3.
    Swap,
    /// Trivial stabilizer; orbit size 6.
    Trivial,
}

impl Stabilizer {
    pub fn orbit_size(self) -> usize {
        match self {
            Stabilizer::Full => 1,
            Stabilizer::Swap => 3,
            Stabilizer::Trivial => 6,
        }
    }
}

/// One `S3`-orbit on the character lattice `(Z/N)^2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharOrbit {
    pub n: u64,
    /// Canonical representative: the label itself for a singleton, the
    /// diagonal member `(a, a)` for a swap orbit, and the lexicographically
    /// least member with both coordinates nonzero for a free orbit.
    pub representative: (u64, u64),
    /// All members, sorted lexicographically.
    pub members: Vec<(u64, u64)>,
    pub stabilizer: Stabilizer,
}

fn dual_swap(n: u64, l: (u64, u64)) -> (u64, u64) {
    let _ = n;
    (l.1, l.0)
}

fn dual_rot(n: u64, l: (u64, u64)) -> (u64, u64) {
    (l.1, (2 * n - l.0 - l.1) % n)
}

/// Decompose the character lattice of `(Z/N)^2` into `S3`-orbits under the
/// dual action generated by `(a, b) -> (b, a)` and `(a, b) -> (b, -a-b)`.
/// The census is checked: one free orbit per six labels, and the number of
/// orbits of each stabilizer type must match the closed count.
pub fn orbit_decomposition(n: u64) -> Result<Vec<CharOrbit>> {
    check_n(n)?;
    let mut seen = vec![false; (n * n) as usize];
    let mut orbits = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if seen[(a * n + b) as usize] {
                continue;
            }
            let mut members = vec![(a, b)];
            seen[(a * n + b) as usize] = true;
            let mut frontier = vec![(a, b)];
            while let Some(l) = frontier.pop() {
                for next in [dual_swap(n, l), dual_rot(n, l)] {
                    let idx = (next.0 * n + next.1) as usize;
                    if !seen[idx] {
                        seen[idx] = true;
                        members.push(next);
                        frontier.push(next);
                    }
                }
            }
            members.sort_unstable();
            let stabilizer = match members.len() {
                1 => Stabilizer::Full,
                3 => Stabilizer::Swap,
                6 => Stabilizer::Trivial,
                k => {
                    return Err(Error::CensusMismatch(format!(
                        "orbit of ({a}, {b}) mod {n} has size {k}"
                    )))
                }
            };
            let representative = match stabilizer {
                Stabilizer::Full => members[0],
                Stabilizer::Swap => *members
                    .iter()
                    .find(|m| m.0 == m.1)
                    .ok_or_else(|| {
                        Error::CensusMismatch(format!(
                            "swap orbit of ({a}, {b}) mod {n} has no diagonal member"
                        ))
                    })?,
                Stabilizer::Trivial => *members
                    .iter()
                    .find(|m| m.0 != 0 && m.1 != 0)
                    .ok_or_else(|| {
                        Error::CensusMismatch(format!(
                            "free orbit of ({a}, {b}) mod {n} has no zero-free member"
                        ))
                    })?,
            };
            orbits.push(CharOrbit {
                n,
                representative,
                members,
                stabilizer,
            });
        }
    }

    let count = |s: Stabilizer| orbits.iter().filter(|o| o.stabilizer == s).count() as u64;
    let (full, swap, free) = (
        count(Stabilizer::Full),
        count(Stabilizer::Swap),
        count(Stabilizer::Trivial),
    );
    let expected = if n.is_multiple_of(3) {
        (3, n - 3, (n * n - 3 * n + 6) / 6)
    } else {
        (1, n - 1, (n - 1) * (n - 2) / 6)
    };
    if (full, swap, free) != expected {
        return Err(Error::CensusMismatch(format!(
            "orbit census for N = {n}: got {full}/{swap}/{free} orbits by stabilizer, expected {expected:?}"
        )));
    }
    Ok(orbits)
}

/// Which irreducible representation of `(Z/N)^2 x| S3` a table row describes.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FermatKind {
    /// Trivial character.
    Rho1,
    /// Sign character of the `S3` quotient.
    Rho2,
    /// Standard 2-dimensional representation of the `S3` quotient.
    Rho3,
    /// For `3 | N` only: the representations over the fixed labels
    /// `(m, m)`, `m in {N/3, 2N/3}`, twisted by the trivial, sign, and
    /// standard representation of the stabilizer (`level` 1, 2, 3).
    Extra { level: u8, m: u64 },
    /// 3-dimensional, induced from a diagonal label with swap extension `+1`.
    Plus(u64),
    /// 3-dimensional, induced with swap extension `-1`.
    Minus(u64),
    /// 6-dimensional, induced from a free orbit; parameters are the
    /// canonical zero-free representative.
    SixDim(u64, u64),
}

/// One row of the representation table: traces at the distinguished
/// elliptic elements and the full list of `T`-eigenvalue exponents at the
/// cusp order `2N`.
#[derive(Clone, PartialEq, Debug)]
pub struct FermatRep {
    pub n: u64,
    pub kind: FermatKind,
    pub dim: u64,
    pub trace_s: CyclotomicNumber,
    pub trace_r: CyclotomicNumber,
    pub trace_rinv: CyclotomicNumber,
    /// Exponents `k` of the eigenvalues `zeta_{2N}^k` of the image of `T`,
    /// sorted, with multiplicity.
    pub t_exponents: Vec<u64>,
}

impl FermatRep {
    pub fn id(&self) -> String {
        match self.kind {
            FermatKind::Rho1 => "rho_1".into(),
            FermatKind::Rho2 => "rho_2".into(),
            FermatKind::Rho3 => "rho_3".into(),
            FermatKind::Extra { level, m } => format!("rho{level}_{m}"),
            FermatKind::Plus(a) => format!("rho_plus_{a}"),
            FermatKind::Minus(a) => format!("rho_minus_{a}"),
            FermatKind::SixDim(a, b) => format!("rho_{a}_{b}"),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == FermatKind::Rho1
    }

    pub fn t_profile(&self) -> Result<EigenvalueProfile> {
        let order = 2 * self.n;
        let mut counts = vec![0u64; order as usize];
        for &k in &self.t_exponents {
            if k >= order {
                return Err(Error::Inconsistent(format!(
                    "T-eigenvalue exponent {k} out of range for order {order}"
                )));
            }
            counts[k as usize] += 1;
        }
        EigenvalueProfile::new(order, counts)
    }
}

fn zeta3(k: i64) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(3, k).expect("order 3 is below the cap")
}

fn int(v: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(v)
}

/// Valid indices for the 3-dimensional pairs: `1..N-1`, excluding the two
/// fixed labels when `3 | N`.
fn pair_indices(n: u64) -> Vec<u64> {
    (1..n)
        .filter(|&a| !n.is_multiple_of(3) || (a != n / 3 && a != 2 * n / 3))
        .collect()
}

/// The irreducible representation table of `(Z/N)^2 x| S3`, rows in a fixed
/// order: the three `S3`-pullbacks, the six extra twists when `3 | N`, the
/// plus family, the minus family, and the 6-dimensional family sorted by
/// canonical representative. The squared dimensions are checked to sum to
/// the group order `6 N^2`.
pub fn rep_table(n: u64) -> Result<Vec<FermatRep>> {
    check_n(n)?;
    let two_n = 2 * n;
    let m = two_n as i64;
    let exp = |k: i64| (k.rem_euclid(m)) as u64;
    let mut rows = Vec::new();

    rows.push(FermatRep {
        n,
        kind: FermatKind::Rho1,
        dim: 1,
        trace_s: int(1),
        trace_r: int(1),
        trace_rinv: int(1),
        t_exponents: vec![0],
    });
    rows.push(FermatRep {
        n,
        kind: FermatKind::Rho2,
        dim: 1,
        trace_s: int(-1),
        trace_r: int(1),
        trace_rinv: int(1),
        t_exponents: vec![n],
    });
    rows.push(FermatRep {
        n,
        kind: FermatKind::Rho3,
        dim: 2,
        trace_s: int(0),
        trace_r: int(-1),
        trace_rinv: int(-1),
        t_exponents: vec![0, n],
    });

    if n.is_multiple_of(3) {
        for (j, mm) in [n / 3, 2 * n / 3].into_iter().enumerate() {
            // chi(T) = zeta_N^{-m} has exponent -2m at order 2N
            let base = exp(-2 * mm as i64);
            let (r, rinv) = if j == 0 {
                (zeta3(-1), zeta3(1))
            } else {
                (zeta3(1), zeta3(-1))
            };
            rows.push(FermatRep {
                n,
                kind: FermatKind::Extra { level: 1, m: mm },
                dim: 1,
                trace_s: int(1),
                trace_r: r.clone(),
                trace_rinv: rinv.clone(),
                t_exponents: vec![base],
            });
            rows.push(FermatRep {
                n,
                kind: FermatKind::Extra { level: 2, m: mm },
                dim: 1,
                trace_s: int(-1),
                trace_r: r.clone(),
                trace_rinv: rinv.clone(),
                t_exponents: vec![exp(base as i64 + n as i64)],
            });
            let mut te = vec![base, exp(base as i64 + n as i64)];
            te.sort_unstable();
            rows.push(FermatRep {
                n,
                kind: FermatKind::Extra { level: 3, m: mm },
                dim: 2,
                trace_s: int(0),
                trace_r: r.neg(),
                trace_rinv: rinv.neg(),
                t_exponents: te,
            });
        }
    }

    for a in pair_indices(n) {
        let ai = a as i64;
        let mut te = vec![exp(-2 * ai), a, a + n];
        te.sort_unstable();
        rows.push(FermatRep {
            n,
            kind: FermatKind::Plus(a),
            dim: 3,
            trace_s: int(1),
            trace_r: int(0),
            trace_rinv: int(0),
            t_exponents: te,
        });
    }
    for a in pair_indices(n) {
        let ai = a as i64;
        let mut te = vec![exp(n as i64 - 2 * ai), a, a + n];
        te.sort_unstable();
        rows.push(FermatRep {
            n,
            kind: FermatKind::Minus(a),
            dim: 3,
            trace_s: int(-1),
            trace_r: int(0),
            trace_rinv: int(0),
            t_exponents: te,
        });
    }

    let mut free: Vec<(u64, u64)> = orbit_decomposition(n)?
        .into_iter()
        .filter(|o| o.stabilizer == Stabilizer::Trivial)
        .map(|o| o.representative)
        .collect();
    free.sort_unstable();
    for (a, b) in free {
        let c = exp(-(a as i64 + b as i64));
        let mut te = vec![a, a + n, b, b + n, c, exp(c as i64 + n as i64)];
        te.sort_unstable();
        rows.push(FermatRep {
            n,
            kind: FermatKind::SixDim(a, b),
            dim: 6,
            trace_s: int(0),
            trace_r: int(0),
            trace_rinv: int(0),
            t_exponents: te,
        });
    }

    let dim_sq: u64 = rows.iter().map(|r| r.dim * r.dim).sum();
    if dim_sq != 6 * n * n {
        return Err(Error::CensusMismatch(format!(
            "squared dimensions for N = {n} sum to {dim_sq}, group order is {}",
            6 * n * n
        )));
    }
    for row in &rows {
        if row.t_exponents.len() as u64 != row.dim {
            return Err(Error::CensusMismatch(format!(
                "row {} lists {} T-eigenvalues for dimension {}",
                row.id(),
                row.t_exponents.len(),
                row.dim
            )));
        }
    }
    Ok(rows)
}

/// Repackage a table row as modular-cover representation data at cusp
/// width `2N`.
pub fn to_rep_data(rep: &FermatRep) -> Result<Psl2zRepData> {
    Ok(Psl2zRepData {
        id: rep.id(),
        dim: rep.dim,
        is_trivial: rep.is_trivial(),
        trace_s: rep.trace_s.clone(),
        trace_r: rep.trace_r.clone(),
        trace_rinv: rep.trace_rinv.clone(),
        t_profile: rep.t_profile()?,
    })
}

fn certified(n: u64, entries: Vec<DecompositionEntry>) -> Result<Decomposition> {
    let expected = genus_normal_subgroup(6 * n * n, 2 * n, 0, 0)?;
    debug_assert_eq!(expected, (n - 1) * (n - 2) / 2);
    let total: u64 = entries.iter().map(|e| e.multiplicity * e.dim).sum();
    if total != expected {
        return Err(Error::GenusMismatch { expected, total });
    }
    Ok(Decomposition {
        entries,
        genus_certificate: Some(GenusCertificate { expected, total }),
    })
}

/// Multiplicities of the irreducible representations in the differentials
/// of the Fermat curve, by the combinatorial closed forms: the pullbacks
/// from `S3` and the plus family never occur, `rho_-^a` occurs once exactly
/// for `1 <= a <= (N-1)/2`, a 6-dimensional representation occurs once
/// exactly when the canonical zero-free representative `(a, b)` has
/// integer sum `a + b < N`, and for `3 | N` the sign twist at `N/3` occurs
/// once. Certified against the genus `(N-1)(N-2)/2`.
pub fn multiplicities_closed_form(n: u64) -> Result<Decomposition> {
    let half = (n - 1) / 2;
    let mut entries = Vec::new();
    for row in rep_table(n)? {
        let multiplicity = match row.kind {
            FermatKind::Rho1 | FermatKind::Rho2 | FermatKind::Rho3 => 0,
            FermatKind::Extra { level, m } => u64::from(level == 2 && m == n / 3),
            FermatKind::Plus(_) => 0,
            FermatKind::Minus(a) => u64::from(a <= half),
            FermatKind::SixDim(a, b) => u64::from(a + b < n),
        };
        entries.push(DecompositionEntry {
            rep_id: row.id(),
            dim: row.dim,
            multiplicity,
        });
    }
    certified(n, entries)
}

/// The same multiplicities by the trace form of the general formula on the
/// modular orbifold with cusp width `2N`, certified against the genus.
pub fn multiplicities_direct(n: u64) -> Result<Decomposition> {
    let cover = modular_cover(2 * n, 6 * n * n);
    let mut entries = Vec::new();
    for row in rep_table(n)? {
        let rep = to_rep_data(&row)?;
        let multiplicity = if row.is_trivial() {
            cw_multiplicity_general(&cover, &to_rep_input(&rep)?)?
        } else {
            cw_modular(&rep, 2 * n)?
        };
        entries.push(DecompositionEntry {
            rep_id: rep.id,
            dim: rep.dim,
            multiplicity,
        });
    }
    certified(n, entries)
}

fn s_bar(n: u64) -> SemiElem {
    SemiElem::new(n, [0, 0], S3_SWAP).expect("swap generator is valid")
}

fn t_bar(n: u64) -> SemiElem {
    SemiElem::new(n, [0, -1], S3_SU).expect("cusp generator is valid")
}

/// The Galois group `(Z/N)^2 x| S3` generated by `S = (0; swap)` and
/// `T = ((0, -1); su)`, with the order checked against `6 N^2`. That the
/// two generators suffice is part of the check.
pub fn fermat_group(n: u64) -> Result<FiniteGroup> {
    check_n(n)?;
    let s = GroupElement::Semi(s_bar(n));
    let t = GroupElement::Semi(t_bar(n));
    let group = generate_group(&[s, t], DEFAULT_SIZE_CAP)?;
    if group.order() as u64 != 6 * n * n {
        return Err(Error::Inconsistent(format!(
            "<S, T> for N = {n} has order {}, expected {}",
            group.order(),
            6 * n * n
        )));
    }
    Ok(group)
}

/// Character of the stabilizer used to build one induced representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum LittleChar {
    /// Full stabilizer: tensor with the trivial, sign, or standard
    /// representation of `S3` (level 1, 2, 3).
    Full(u8),
    /// Swap stabilizer: extend the lattice character by `eps` on the swap.
    Swap(i64),
    /// Trivial stabilizer: plain induction from the lattice.
    Induce,
}

fn s3_sign(sigma: S3) -> i64 {
    // transpositions are the odd permutations
    if sigma == S3_IDENTITY || sigma == S3_ROT || sigma == s3_compose(S3_ROT, S3_ROT) {
        1
    } else {
        -1
    }
}

fn s3_std_trace(sigma: S3) -> i64 {
    if sigma == S3_IDENTITY {
        2
    } else if s3_sign(sigma) == 1 {
        -1
    } else {
        0
    }
}

/// One character produced by the induction oracle, in the same shape as a
/// representation-table row.
#[derive(Clone, PartialEq, Debug)]
pub struct InducedCharacter {
    pub dim: u64,
    pub trace_s: CyclotomicNumber,
    pub trace_r: CyclotomicNumber,
    pub trace_rinv: CyclotomicNumber,
    pub t_profile: EigenvalueProfile,
}

fn lattice_char(n: u64, label: (u64, u64), v: [u64; 2]) -> Result<CyclotomicNumber> {
    CyclotomicNumber::root_of_unity(n, (label.0 * v[0] + label.1 * v[1]) as i64)
}

fn induced_value(
    n: u64,
    label: (u64, u64),
    little: LittleChar,
    g: &SemiElem,
) -> Result<CyclotomicNumber> {
    match little {
        LittleChar::Full(level) => {
            let factor = match level {
                1 => 1,
                2 => s3_sign(g.permutation()),
                3 => s3_std_trace(g.permutation()),
                _ => unreachable!("levels are 1..=3"),
            };
            Ok(lattice_char(n, label, g.translation())?.scaled(&Rat::from_integer(factor.into())))
        }
        LittleChar::Swap(eps) => {
            let u2 = s3_compose(S3_ROT, S3_ROT);
            let mut total = CyclotomicNumber::zero();
            for sigma in [S3_IDENTITY, S3_ROT, u2] {
                let x = SemiElem::new(n, [0, 0], sigma).expect("coset representative is valid");
                let h = x.inv().mul(g).mul(&x);
                let contribution = if h.permutation() == S3_IDENTITY {
                    lattice_char(n, label, h.translation())?
                } else if h.permutation() == S3_SWAP {
                    lattice_char(n, label, h.translation())?
                        .scaled(&Rat::from_integer(eps.into()))
                } else {
                    continue;
                };
                total = total.checked_add(&contribution)?;
            }
            Ok(total)
        }
        LittleChar::Induce => {
            let mut total = CyclotomicNumber::zero();
            for sigma in crate::groupcore::S3_ALL {
                let x = SemiElem::new(n, [0, 0], sigma).expect("coset representative is valid");
                let h = x.inv().mul(g).mul(&x);
                if h.permutation() == S3_IDENTITY {
                    total = total.checked_add(&lattice_char(n, label, h.translation())?)?;
                }
            }
            Ok(total)
        }
    }
}

fn little_chars(orbit: &CharOrbit) -> Vec<LittleChar> {
    match orbit.stabilizer {
        Stabilizer::Full => vec![LittleChar::Full(1), LittleChar::Full(2), LittleChar::Full(3)],
        Stabilizer::Swap => vec![LittleChar::Swap(1), LittleChar::Swap(-1)],
        Stabilizer::Trivial => vec![LittleChar::Induce],
    }
}

/// Independent route to the representation table: induce each orbit's
/// stabilizer characters up to `G` by summing the lattice character over
/// coset representatives, and read off the traces at `1`, `S`, `R`,
/// `R^{-1}` and the eigenvalue profile at `T` from the values on `<T>`.
pub fn induced_character_oracle(n: u64, orbit: &CharOrbit) -> Result<Vec<InducedCharacter>> {
    check_n(n)?;
    if orbit.n != n {
        return Err(Error::Inconsistent(format!(
            "orbit modulus {} does not match N = {n}",
            orbit.n
        )));
    }
    let label = orbit.representative;
    let s = s_bar(n);
    let t = t_bar(n);
    let r = s.mul(&t);
    let rinv = r.inv();
    let identity = SemiElem::identity(n);

    let mut rows = Vec::new();
    for little in little_chars(orbit) {
        let at_identity = induced_value(n, label, little, &identity)?;
        let dim_rat = at_identity.to_rational().map_err(|_| {
            Error::Inconsistent("induced character is irrational at the identity".into())
        })?;
        if !dim_rat.is_integer() || dim_rat.is_negative() || dim_rat.is_zero() {
            return Err(Error::Inconsistent(format!(
                "induced degree {dim_rat} is not a positive integer"
            )));
        }
        let dim: u64 = dim_rat
            .to_integer()
            .try_into()
            .expect("positive degree fits u64");

        let mut t_values = Vec::with_capacity(2 * n as usize);
        let mut power = identity;
        for _ in 0..2 * n {
            t_values.push(induced_value(n, label, little, &power)?);
            power = power.mul(&t);
        }
        if power != identity {
            return Err(Error::Inconsistent(format!(
                "T does not have order {} in the semidirect product",
                2 * n
            )));
        }
        rows.push(InducedCharacter {
            dim,
            trace_s: induced_value(n, label, little, &s)?,
            trace_r: induced_value(n, label, little, &r)?,
            trace_rinv: induced_value(n, label, little, &rinv)?,
            t_profile: nk_profile(&t_values, dim)?,
        });
    }
    Ok(rows)
}

/// The representation-table rows that the oracle rows for an orbit must
/// reproduce, in the oracle's own order.
pub fn kinds_for_orbit(orbit: &CharOrbit) -> Vec<FermatKind> {
    match orbit.stabilizer {
        Stabilizer::Full => {
            if orbit.representative == (0, 0) {
                vec![FermatKind::Rho1, FermatKind::Rho2, FermatKind::Rho3]
            } else {
                let m = orbit.representative.0;
                vec![
                    FermatKind::Extra { level: 1, m },
                    FermatKind::Extra { level: 2, m },
                    FermatKind::Extra { level: 3, m },
                ]
            }
        }
        Stabilizer::Swap => {
            let a = orbit.representative.0;
            vec![FermatKind::Plus(a), FermatKind::Minus(a)]
        }
        Stabilizer::Trivial => {
            let (a, b) = orbit.representative;
            vec![FermatKind::SixDim(a, b)]
        }
    }
}

/// Check that the induction oracle reproduces every row of the stored
/// representation table, orbit by orbit: dimension, the three elliptic
/// traces, and the full `T`-eigenvalue profile.
pub fn oracle_matches_rep_table(n: u64) -> Result<()> {
    let table = rep_table(n)?;
    let by_kind = |kind: FermatKind| -> Result<&FermatRep> {
        table
            .iter()
            .find(|r| r.kind == kind)
            .ok_or_else(|| Error::Inconsistent(format!("no table row for {kind:?}")))
    };
    let mut matched = 0usize;
    for orbit in orbit_decomposition(n)? {
        let rows = induced_character_oracle(n, &orbit)?;
        let kinds = kinds_for_orbit(&orbit);
        if rows.len() != kinds.len() {
            return Err(Error::Inconsistent(format!(
                "oracle produced {} rows for a {:?} orbit, expected {}",
                rows.len(),
                orbit.stabilizer,
                kinds.len()
            )));
        }
        for (row, kind) in rows.iter().zip(kinds) {
            let want = by_kind(kind)?;
            let ok = row.dim == want.dim
                && row.trace_s == want.trace_s
                && row.trace_r == want.trace_r
                && row.trace_rinv == want.trace_rinv
                && row.t_profile == want.t_profile()?;
            if !ok {
                return Err(Error::Inconsistent(format!(
                    "induced character for orbit of {:?} disagrees with table row {}",
                    orbit.representative,
                    want.id()
                )));
            }
            matched += 1;
        }
    }
    if matched != table.len() {
        return Err(Error::Inconsistent(format!(
            "oracle matched {matched} rows, table has {}",
            table.len()
        )));
    }
    Ok(())
}

/// Generate the group, run the Dixon oracle on it, and check that the
/// stored table matches the computed one up to row permutation on the
/// distinguished data: dimension, traces at `S`, `R`, `R^{-1}`, and the
/// eigenvalue profile at `T`.
pub fn dixon_cross_check(n: u64) -> Result<()> {
    let group = fermat_group(n)?;
    let table = character_table_dixon(&group)?;
    let classes = group.conjugacy_classes();
    let locate = |el: SemiElem| -> Result<usize> {
        let wrapped = GroupElement::Semi(el);
        let idx = group
            .index_of(&wrapped)
            .ok_or_else(|| Error::Inconsistent("designated element not in group".into()))?;
        Ok(classes.class_of[idx])
    };
    let s = s_bar(n);
    let t = t_bar(n);
    let r = s.mul(&t);
    let columns = [locate(s)?, locate(r)?, locate(r.inv())?];
    let t_class = locate(t)?;

    type Key = (u64, Vec<Vec<Rat>>, Vec<u64>);
    let mut oracle_keys: Vec<Key> = Vec::new();
    for (i, row) in table.values.iter().enumerate() {
        let mut keys = Vec::with_capacity(3);
        for &c in &columns {
            keys.push(row[c].sort_key_at(table.exponent)?);
        }
        let profile = &table.profiles[i][t_class];
        if profile.order() != 2 * n {
            return Err(Error::Inconsistent(format!(
                "class of T has representative order {}, expected {}",
                profile.order(),
                2 * n
            )));
        }
        oracle_keys.push((table.dim(i), keys, profile.counts().to_vec()));
    }
    let mut table_keys: Vec<Key> = Vec::new();
    for row in rep_table(n)? {
        let mut keys = Vec::with_capacity(3);
        for tr in [&row.trace_s, &row.trace_r, &row.trace_rinv] {
            keys.push(tr.sort_key_at(table.exponent)?);
        }
        table_keys.push((row.dim, keys, row.t_profile()?.counts().to_vec()));
    }
    oracle_keys.sort();
    table_keys.sort();
    if oracle_keys != table_keys {
        return Err(Error::Inconsistent(format!(
            "representation table for N = {n} disagrees with the Dixon oracle"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::six_characters;

    fn orbit_of(orbits: &[CharOrbit], label: (u64, u64)) -> &CharOrbit {
        orbits
            .iter()
            .find(|o| o.members.contains(&label))
            .expect("every label lies in an orbit")
    }

    #[test]
    fn orbit_census() {
        for n in 2..=12u64 {
            let orbits = orbit_decomposition(n).unwrap();
            let total: usize = orbits.iter().map(|o| o.members.len()).sum();
            assert_eq!(total, (n * n) as usize, "N = {n}");
            for orbit in &orbits {
                assert_eq!(orbit.members.len(), orbit.stabilizer.orbit_size());
                assert!(orbit.members.contains(&orbit.representative));
                if orbit.stabilizer == Stabilizer::Swap {
                    let (a, b) = orbit.representative;
                    assert_eq!(a, b);
                }
                if orbit.stabilizer == Stabilizer::Trivial {
                    let (a, b) = orbit.representative;
                    assert!(a != 0 && b != 0);
                    // zero-free members agree on which side of N the
                    // integer sum falls, so the occurrence criterion does
                    // not depend on the choice among them
                    let sums: Vec<bool> = orbit
                        .members
                        .iter()
                        .filter(|m| m.0 != 0 && m.1 != 0)
                        .map(|m| m.0 + m.1 < n)
                        .collect();
                    assert!(sums.iter().all(|&s| s == sums[0]), "orbit {orbit:?}");
                }
            }
        }
    }

    #[test]
    fn orbit_representatives_for_seven() {
        let orbits = orbit_decomposition(7).unwrap();
        let mut free: Vec<(u64, u64)> = orbits
            .iter()
            .filter(|o| o.stabilizer == Stabilizer::Trivial)
            .map(|o| o.representative)
            .collect();
        free.sort_unstable();
        assert_eq!(free, vec![(1, 2), (1, 6), (2, 5), (3, 4), (3, 5)]);
        // the same orbits are often labeled by other members; the orbit of
        // (2, 1) is the one whose canonical representative is (1, 2)
        for (alt, canonical) in [
            ((6, 1), (1, 6)),
            ((5, 2), (2, 5)),
            ((4, 3), (3, 4)),
            ((2, 1), (1, 2)),
            ((6, 3), (3, 5)),
        ] {
            assert_eq!(orbit_of(&orbits, alt).representative, canonical);
        }
    }

    #[test]
    fn rep_table_shapes() {
        // row count: 3 pullbacks, 6 extras iff 3 | N, two 3-dim families,
        // one row per free orbit
        for (n, rows, free) in [(3u64, 10, 1), (4, 10, 1), (6, 19, 4), (7, 20, 5), (12, 46, 19)] {
            let table = rep_table(n).unwrap();
            assert_eq!(table.len(), rows, "N = {n}");
            assert_eq!(
                table
                    .iter()
                    .filter(|r| matches!(r.kind, FermatKind::SixDim(_, _)))
                    .count(),
                free
            );
            let dim_sq: u64 = table.iter().map(|r| r.dim * r.dim).sum();
            assert_eq!(dim_sq, 6 * n * n);
        }
        let table = rep_table(6).unwrap();
        let extra: Vec<&FermatRep> = table
            .iter()
            .filter(|r| matches!(r.kind, FermatKind::Extra { .. }))
            .collect();
        assert_eq!(extra.len(), 6);
        assert_eq!(extra[1].id(), "rho2_2");
        assert_eq!(extra[1].t_exponents, vec![2]);
        assert_eq!(extra[5].id(), "rho3_4");
        assert_eq!(extra[5].t_exponents, vec![4, 10]);
    }

    #[test]
    fn closed_form_golden_values() {
        let nonzero = |d: &Decomposition| -> Vec<(String, u64)> {
            d.entries
                .iter()
                .filter(|e| e.multiplicity > 0)
                .map(|e| (e.rep_id.clone(), e.dim))
                .collect()
        };

        let d7 = multiplicities_closed_form(7).unwrap();
        assert_eq!(
            nonzero(&d7),
            vec![
                ("rho_minus_1".to_string(), 3),
                ("rho_minus_2".to_string(), 3),
                ("rho_minus_3".to_string(), 3),
                ("rho_1_2".to_string(), 6),
            ]
        );
        assert_eq!(d7.total_dimension(), 15);

        let d6 = multiplicities_closed_form(6).unwrap();
        assert_eq!(
            nonzero(&d6),
            vec![
                ("rho2_2".to_string(), 1),
                ("rho_minus_1".to_string(), 3),
                ("rho_1_2".to_string(), 6),
            ]
        );
        assert_eq!(d6.total_dimension(), 10);

        let d4 = multiplicities_closed_form(4).unwrap();
        assert_eq!(nonzero(&d4), vec![("rho_minus_1".to_string(), 3)]);

        let d3 = multiplicities_closed_form(3).unwrap();
        assert_eq!(nonzero(&d3), vec![("rho2_1".to_string(), 1)]);
        assert_eq!(d3.total_dimension(), 1);
    }

    #[test]
    fn direct_equals_closed_form() {
        for n in 2..=12u64 {
            let closed = multiplicities_closed_form(n).unwrap();
            let direct = multiplicities_direct(n).unwrap();
            assert_eq!(closed, direct, "N = {n}");
            assert_eq!(closed.total_dimension(), (n - 1) * (n - 2) / 2);
        }
    }

    #[test]
    fn group_relations() {
        for n in [3u64, 4, 5] {
            let group = fermat_group(n).unwrap();
            assert_eq!(group.order() as u64, 6 * n * n);

            let s = s_bar(n);
            let t = t_bar(n);
            let a = t.mul(&t);
            assert_eq!(a, SemiElem::new(n, [1, 0], S3_IDENTITY).unwrap());
            let b = SemiElem::new(n, [0, 1], S3_IDENTITY).unwrap();

            let idx = |el: &SemiElem| group.index_of(&GroupElement::Semi(*el)).unwrap();
            assert_eq!(group.element_order(idx(&t)), 2 * n);
            assert_eq!(group.element_order(idx(&a)), n);
            assert_eq!(group.element_order(idx(&s)), 2);
            let r = s.mul(&t);
            assert_eq!(group.element_order(idx(&r)), 3);

            // S A S = B, and the rotation sends A to B and B to (AB)^{-1}
            assert_eq!(s.mul(&a).mul(&s), b);
            let u = SemiElem::new(n, [0, 0], S3_ROT).unwrap();
            assert_eq!(u.mul(&a).mul(&u.inv()), b);
            assert_eq!(u.mul(&b).mul(&u.inv()), a.inv().mul(&b.inv()));
        }
    }

    #[test]
    fn oracle_reproduces_table_rows() {
        for n in [3u64, 5, 6] {
            oracle_matches_rep_table(n).unwrap();
        }
    }

    #[test]
    fn dixon_agrees_for_small_exponents() {
        for n in [3u64, 4] {
            dixon_cross_check(n).unwrap();
        }
    }

    #[test]
    fn genus_one_matches_modular_character() {
        // N = 3 is the elliptic Fermat cubic; its unique differential
        // transforms by the same character of the modular group as the
        // index-6 genus-one cover in the six-character table
        let table = rep_table(3).unwrap();
        let row = table
            .iter()
            .find(|r| r.kind == (FermatKind::Extra { level: 2, m: 1 }))
            .unwrap();
        let rep = to_rep_data(row).unwrap();
        let chi = &six_characters().unwrap()[1];
        assert_eq!(rep.dim, chi.dim);
        assert_eq!(rep.trace_s, chi.trace_s);
        assert_eq!(rep.trace_r, chi.trace_r);
        assert_eq!(rep.trace_rinv, chi.trace_rinv);
        assert_eq!(rep.t_profile, chi.t_profile);
        assert_eq!(rep.t_profile.count(1), 1);
        let d3 = multiplicities_closed_form(3).unwrap();
        assert_eq!(d3.genus_certificate, Some(GenusCertificate { expected: 1, total: 1 }));
    }
}

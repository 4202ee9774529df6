//! The Dixon-Burnside character table algorithm.
//!
//! Computes the full character table of an explicit finite group with no
//! structural input: class-algebra structure constants, simultaneous
//! diagonalization of the class-sum matrices over a prime field `F_q` with
//! `q = 1 (mod exponent)` and `q > 2 sqrt(|G|)`, then an exact lift of each
//! character value to `Z[zeta_n]` through a discrete Fourier transform of
//! the values on the powers of a class representative. The lift also yields
//! the eigenvalue profile of every character at every class, which is what
//! the Chevalley-Weil formula consumes.
//!
//! This is the independent oracle the structured character tables elsewhere
//! in the crate are checked against, so it deliberately shares no code or
//! assumptions with them.

use super::chartab::{row_sort_key, CharacterTable, ClassInfo};
use super::group::{Classes, FiniteGroup};
use super::profile::EigenvalueProfile;
use crate::error::{Error, Result};
use crate::exactmath::CyclotomicNumber;
use crate::numth::{is_prime, modinv, modpow, primitive_root};

/// Computes the character table of `g`.
///
/// # Errors
/// [`Error::LiftFailure`] if any internal consistency check fails; this
/// indicates a bug rather than unsupported input, since the algorithm is
/// complete for finite groups.
pub fn character_table_dixon(g: &FiniteGroup) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let r = classes.classes.len();
    let group_order = g.order() as u64;
    let exponent = g.exponent(&classes);
    let q = working_modulus(group_order, exponent);

    let class_info = build_class_info(g, &classes);
    let b = structure_matrices(g, &classes, q);
    let eigenvectors = simultaneous_eigenvectors(&b, r, q)?;

    // With w normalized to w[0] = 1 the components are the central character
    // values w[k] = |C_k| chi(g_k) / chi(1) mod q.
    for w in &eigenvectors {
        for (i, bi) in b.iter().enumerate() {
            for row in 0..r {
                let mut acc = 0u64;
                for (k, &wk) in w.iter().enumerate() {
                    acc = (acc + bi[row][k] * wk) % q;
                }
                if acc != w[i] * w[row] % q {
                    return Err(Error::LiftFailure(
                        "candidate vector is not a common eigenvector".into(),
                    ));
                }
            }
        }
    }

    let dims = character_dims(&eigenvectors, &class_info, group_order, q)?;
    let sum_sq: u64 = dims.iter().map(|d| d * d).sum();
    if sum_sq != group_order {
        return Err(Error::LiftFailure(format!(
            "dimension check failed: sum of squares {sum_sq} != {group_order}"
        )));
    }

    let z = modpow(primitive_root(q), (q - 1) / exponent, q);
    let mut rows: Vec<(Vec<CyclotomicNumber>, Vec<EigenvalueProfile>, u64)> = Vec::with_capacity(r);
    for (w, &dim) in eigenvectors.iter().zip(dims.iter()) {
        // theta[k] = chi(class k) mod q
        let theta: Vec<u64> = (0..r)
            .map(|k| dim % q * w[k] % q * modinv(class_info[k].size % q, q) % q)
            .collect();
        let mut values = Vec::with_capacity(r);
        let mut profiles = Vec::with_capacity(r);
        for k in 0..r {
            let (value, profile) = lift_class_value(g, &classes, &theta, k, dim, q, exponent, z)?;
            values.push(value);
            profiles.push(profile);
        }
        rows.push((values, profiles, dim));
    }

    rows.sort_by_cached_key(|(values, _, dim)| {
        row_sort_key(*dim, values, exponent).expect("exponent divides the value orders' lcm")
    });

    let (values, profiles): (Vec<_>, Vec<_>) = rows
        .into_iter()
        .map(|(v, p, _)| (v, p))
        .unzip();

    Ok(CharacterTable {
        classes: class_info,
        values,
        profiles,
        group_order,
        exponent,
    })
}

fn build_class_info(g: &FiniteGroup, classes: &Classes) -> Vec<ClassInfo> {
    classes
        .classes
        .iter()
        .map(|c| ClassInfo {
            rep_index: c.rep,
            size: c.members.len() as u64,
            rep_order: g.element_order(c.rep),
            inverse_class: classes.class_of[g.inv_idx(c.rep)],
        })
        .collect()
}

/// Least prime `q = 1 (mod e)` with `q > 2 sqrt(|G|)`, so that dimensions
/// (bounded by `sqrt(|G|)`) are determined by their residues and `F_q`
/// contains all needed roots of unity. Such `q` never divides `|G|`: an
/// element of order `q` would force `q | e`, impossible for `q = 1 (mod e)`.
fn working_modulus(group_order: u64, e: u64) -> u64 {
    let mut q = e + 1;
    loop {
        if (q as u128) * (q as u128) > 4 * group_order as u128 && is_prime(q) {
            return q;
        }
        q += e;
    }
}

/// Structure-constant matrices of the class algebra over `F_q`:
/// `b[i][j][k] = a_ijk = #{(x, y) in C_i x C_j : x y = z_k}`, so that each
/// central character `w` satisfies `b[i] w = w[i] w`.
fn structure_matrices(g: &FiniteGroup, classes: &Classes, q: u64) -> Vec<Vec<Vec<u64>>> {
    let r = classes.classes.len();
    let reps: Vec<usize> = classes.classes.iter().map(|c| c.rep).collect();
    let mut b = vec![vec![vec![0u64; r]; r]; r];
    for (i, class) in classes.classes.iter().enumerate() {
        for &x in &class.members {
            let x_inv = g.inv_idx(x);
            for (k, &zk) in reps.iter().enumerate() {
                let j = classes.class_of[g.mul_idx(x_inv, zk)];
                b[i][j][k] = (b[i][j][k] + 1) % q;
            }
        }
    }
    b
}

/// Splits `F_q^r` into the common eigenspaces of the matrices `b[1..]`,
/// returning the `r` one-dimensional eigenvectors normalized to first
/// component 1.
fn simultaneous_eigenvectors(b: &[Vec<Vec<u64>>], r: usize, q: u64) -> Result<Vec<Vec<u64>>> {
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for bi in b.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let restricted = restrict_operator(bi, &basis, q)?;
            let s = basis.len();
            let poly = char_poly_mod(&restricted, q);
            let mut split_total = 0;
            for lambda in 0..q {
                if eval_poly_mod(&poly, lambda, q) != 0 {
                    continue;
                }
                let kernel = kernel_basis(&shift_diagonal(&restricted, lambda, q), q);
                if kernel.is_empty() {
                    continue;
                }
                split_total += kernel.len();
                // map kernel vectors back into the ambient space
                let lifted: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|kv| {
                        let mut v = vec![0u64; basis[0].len()];
                        for (m, &coef) in kv.iter().enumerate() {
                            if coef != 0 {
                                for (c, x) in v.iter_mut().zip(basis[m].iter()) {
                                    *c = (*c + coef * x) % q;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(lifted);
                if split_total == s {
                    break;
                }
            }
            if split_total != s {
                return Err(Error::LiftFailure(format!(
                    "eigenspace refinement split {split_total} of {s} dimensions"
                )));
            }
        }
        spaces = next;
    }
    let mut out = Vec::with_capacity(r);
    for basis in spaces {
        if basis.len() != 1 {
            return Err(Error::LiftFailure(
                "class matrices failed to separate all characters".into(),
            ));
        }
        let v = &basis[0];
        if v[0] == 0 {
            return Err(Error::LiftFailure(
                "eigenvector has zero identity component".into(),
            ));
        }
        let inv = modinv(v[0], q);
        out.push(v.iter().map(|&x| x * inv % q).collect());
    }
    if out.len() != r {
        return Err(Error::LiftFailure(format!(
            "found {} eigenvectors for {r} classes",
            out.len()
        )));
    }
    Ok(out)
}

/// Expresses the action of `m` on the span of `basis` in that basis:
/// returns `c` with `m . basis[l] = sum_k basis[k] c[k][l]`.
fn restrict_operator(m: &[Vec<u64>], basis: &[Vec<u64>], q: u64) -> Result<Vec<Vec<u64>>> {
    let r = basis[0].len();
    let s = basis.len();
    // augmented matrix [basis columns | images]
    let mut aug: Vec<Vec<u64>> = (0..r)
        .map(|row| {
            let mut line = Vec::with_capacity(2 * s);
            for bv in basis {
                line.push(bv[row]);
            }
            for bv in basis {
                let mut acc = 0u64;
                for (k, &x) in bv.iter().enumerate() {
                    acc = (acc + m[row][k] * x) % q;
                }
                line.push(acc);
            }
            line
        })
        .collect();
    let pivots = rref(&mut aug, s, q);
    if pivots.len() != s {
        return Err(Error::LiftFailure(
            "subspace basis is not linearly independent".into(),
        ));
    }
    // rows past the pivots must have vanished on the image side too
    for row in aug.iter().skip(s) {
        if row.iter().any(|&x| x != 0) {
            return Err(Error::LiftFailure(
                "subspace is not invariant under a class matrix".into(),
            ));
        }
    }
    let mut c = vec![vec![0u64; s]; s];
    for (t, &p) in pivots.iter().enumerate() {
        debug_assert_eq!(p, t, "full-rank square block pivots are the leading columns");
        for l in 0..s {
            c[t][l] = aug[t][s + l];
        }
    }
    Ok(c)
}

/// Row reduction over `F_q`, eliminating on the first `main_cols` columns
/// only (the rest of each row is carried along). Returns the pivot columns.
fn rref(rows: &mut [Vec<u64>], main_cols: usize, q: u64) -> Vec<usize> {
    let nr = rows.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..main_cols {
        if row == nr {
            break;
        }
        let Some(pr) = (row..nr).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(row, pr);
        let inv = modinv(rows[row][col], q);
        for x in rows[row].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..nr {
            if i != row && rows[i][col] != 0 {
                let f = rows[i][col];
                let (head, tail) = if i < row {
                    let (a, b) = rows.split_at_mut(row);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&mut b[0], &a[row])
                };
                for (x, &s) in head.iter_mut().zip(tail.iter()) {
                    *x = (*x + (q - s) * f) % q;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn shift_diagonal(m: &[Vec<u64>], lambda: u64, q: u64) -> Vec<Vec<u64>> {
    let mut out = m.to_vec();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = (row[i] + q - lambda) % q;
    }
    out
}

/// Basis of the kernel of a square matrix over `F_q`.
fn kernel_basis(m: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let s = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, s, q);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; s];
        for (t, &p) in pivots.iter().enumerate() {
            v[p] = Some(t);
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..s {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; s];
        v[free] = 1;
        for (col, &pt) in pivot_set.iter().enumerate() {
            if let Some(t) = pt {
                v[col] = (q - rows[t][free]) % q;
            }
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial mod `q` (monic, little-endian) by the
/// Faddeev-LeVerrier recurrence; divisions are by `k <= dim < q`.
fn char_poly_mod(a: &[Vec<u64>], q: u64) -> Vec<u64> {
    let n = a.len();
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut m = a.to_vec();
    for k in 1..=n {
        if k > 1 {
            let c_prev = coeffs[n - (k - 1)];
            let mut shifted = m;
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = (row[i] + c_prev) % q;
            }
            m = mat_mul_mod(a, &shifted, q);
        }
        let tr: u64 = (0..n).fold(0, |acc, i| (acc + m[i][i]) % q);
        coeffs[n - k] = (q - tr % q) % q * modinv(k as u64 % q, q) % q;
    }
    coeffs
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            let aik = a[i][k];
            for j in 0..n {
                out[i][j] = (out[i][j] + aik * b[k][j]) % q;
            }
        }
    }
    out
}

fn eval_poly_mod(p: &[u64], x: u64, q: u64) -> u64 {
    p.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % q)
}

/// Squared dimension of each character from the second orthogonality
/// relation mod `q`, then the unique square root below `q/2`.
fn character_dims(
    eigenvectors: &[Vec<u64>],
    class_info: &[ClassInfo],
    group_order: u64,
    q: u64,
) -> Result<Vec<u64>> {
    let mut dims = Vec::with_capacity(eigenvectors.len());
    for w in eigenvectors {
        let mut denom = 0u64;
        for (k, info) in class_info.iter().enumerate() {
            let term = w[k] * w[info.inverse_class] % q * modinv(info.size % q, q) % q;
            denom = (denom + term) % q;
        }
        if denom == 0 {
            return Err(Error::LiftFailure("singular dimension denominator".into()));
        }
        let dim_sq = group_order % q * modinv(denom, q) % q;
        let dim = (1..=(q - 1) / 2)
            .find(|&x| x * x % q == dim_sq)
            .ok_or_else(|| Error::LiftFailure(format!("no square root of {dim_sq} mod {q}")))?;
        dims.push(dim);
    }
    Ok(dims)
}

/// Lifts the value of one character on one class from `F_q` to the exact
/// cyclotomic value, recovering on the way the eigenvalue multiplicities
/// `m_j` of `zeta_n^j` at the class representative:
/// `m_j = (1/n) sum_l theta(class(g^l)) z_n^(-lj) (mod q)`, with `z_n` the
/// order-`n` power of the fixed order-`exponent` root `z` of `F_q`. Each
/// `m_j` must lift to `0..=dim`.
#[allow(clippy::too_many_arguments)]
fn lift_class_value(
    g: &FiniteGroup,
    classes: &Classes,
    theta: &[u64],
    k: usize,
    dim: u64,
    q: u64,
    exponent: u64,
    z: u64,
) -> Result<(CyclotomicNumber, EigenvalueProfile)> {
    let rep = classes.classes[k].rep;
    let n = g.element_order(rep);
    debug_assert_eq!(exponent % n, 0);
    let zn = modpow(z, exponent / n, q);
    let zn_inv = modinv(zn, q);
    let theta_on_powers: Vec<u64> = g
        .power_map(rep, n)
        .iter()
        .map(|&el| theta[classes.class_of[el]])
        .collect();
    let inv_n = modinv(n % q, q);
    let mut counts = Vec::with_capacity(n as usize);
    for j in 0..n {
        let mut acc = 0u64;
        for (l, &t) in theta_on_powers.iter().enumerate() {
            acc = (acc + t * modpow(zn_inv, l as u64 * j % n, q)) % q;
        }
        let m_j = acc * inv_n % q;
        if m_j > dim {
            return Err(Error::LiftFailure(format!(
                "eigenvalue multiplicity residue {m_j} exceeds dimension {dim}"
            )));
        }
        counts.push(m_j);
    }
    if counts.iter().sum::<u64>() != dim {
        return Err(Error::LiftFailure(format!(
            "profile counts sum to {} for dimension {dim}",
            counts.iter().sum::<u64>()
        )));
    }
    let profile = EigenvalueProfile::new(n, counts)?;
    let value = profile.character_on_power(1)?;
    Ok((value, profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::chartab::verify_orthogonality;
    use crate::groupcore::element::{GroupElement, Matrix2, PermElem};
    use crate::groupcore::group::{generate_group, DEFAULT_SIZE_CAP};

    fn zeta(n: u64, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let c = GroupElement::Perm(PermElem(vec![1, 2, 0]));
        let g = generate_group(&[c], 10).unwrap();
        let t = character_table_dixon(&g).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 1]);
        assert!(verify_orthogonality(&t).unwrap().pass);
        // the three rows are k -> zeta_3^(jk) in some order; identity first
        for row in &t.values {
            assert_eq!(row[0], CyclotomicNumber::one());
        }
        let nontrivial_at_g: Vec<_> = t
            .values
            .iter()
            .map(|row| row[1].clone())
            .filter(|v| *v != CyclotomicNumber::one())
            .collect();
        assert_eq!(nontrivial_at_g.len(), 2);
        assert!(nontrivial_at_g.contains(&zeta(3, 1)));
        assert!(nontrivial_at_g.contains(&zeta(3, 2)));
    }

    #[test]
    fn symmetric_group_s3() {
        let s = GroupElement::Perm(PermElem(vec![1, 0, 2]));
        let u = GroupElement::Perm(PermElem(vec![1, 2, 0]));
        let g = generate_group(&[s, u], 10).unwrap();
        assert_eq!(g.order(), 6);
        let t = character_table_dixon(&g).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 2]);
        assert!(verify_orthogonality(&t).unwrap().pass);
    }

    #[test]
    fn psl2_f5_dimensions() {
        let s = GroupElement::Matrix(Matrix2::new(5, true, [0, -1, 1, 0]).unwrap());
        let t = GroupElement::Matrix(Matrix2::new(5, true, [1, 1, 0, 1]).unwrap());
        let g = generate_group(&[s, t], DEFAULT_SIZE_CAP).unwrap();
        let table = character_table_dixon(&g).unwrap();
        assert_eq!(table.dims(), vec![1, 3, 3, 4, 5]);
        assert!(verify_orthogonality(&table).unwrap().pass);
        let sum_sq: u64 = table.dims().iter().map(|d| d * d).sum();
        assert_eq!(sum_sq, 60);
    }

    #[test]
    fn psl2_f7_table() {
        let s = GroupElement::Matrix(Matrix2::new(7, true, [0, -1, 1, 0]).unwrap());
        let t = GroupElement::Matrix(Matrix2::new(7, true, [1, 1, 0, 1]).unwrap());
        let g = generate_group(&[s, t], DEFAULT_SIZE_CAP).unwrap();
        let table = character_table_dixon(&g).unwrap();
        assert_eq!(table.num_classes(), 6);
        assert_eq!(table.dims(), vec![1, 3, 3, 6, 7, 8]);
        assert_eq!(table.exponent, 84);
        assert!(verify_orthogonality(&table).unwrap().pass);
        // identity column holds the dimensions
        for (i, row) in table.values.iter().enumerate() {
            assert_eq!(
                row[0],
                CyclotomicNumber::from_integer(table.dim(i) as i64)
            );
        }
    }

    #[test]
    fn profiles_are_consistent_with_values() {
        let s = GroupElement::Perm(PermElem(vec![1, 0, 2]));
        let u = GroupElement::Perm(PermElem(vec![1, 2, 0]));
        let g = generate_group(&[s, u], 10).unwrap();
        let t = character_table_dixon(&g).unwrap();
        for (row, profs) in t.values.iter().zip(t.profiles.iter()) {
            for (v, p) in row.iter().zip(profs.iter()) {
                assert_eq!(p.character_on_power(1).unwrap(), *v);
            }
        }
    }
}

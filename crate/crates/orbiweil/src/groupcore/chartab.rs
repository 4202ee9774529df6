//! Character tables and their exact consistency checks.

use num::BigRational;

use super::profile::EigenvalueProfile;
use crate::error::Result;
use crate::exactmath::CyclotomicNumber;

/// Per-class data carried alongside a character table.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// Element index of the representative in the generating group.
    pub rep_index: usize,
    pub size: u64,
    /// Order of the representative element.
    pub rep_order: u64,
    /// Index of the class containing the inverses of this class.
    pub inverse_class: usize,
}

/// An exact character table. Rows are irreducible characters sorted by
/// `(dimension, embedded coefficient tuple)`; columns follow the class order
/// of the group (identity class first).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<ClassInfo>,
    /// `values[i][c]` is the `i`-th character at class `c`.
    pub values: Vec<Vec<CyclotomicNumber>>,
    /// `profiles[i][c]` is the eigenvalue profile of the `i`-th character at
    /// the representative of class `c`.
    pub profiles: Vec<Vec<EigenvalueProfile>>,
    /// Group order (sum of class sizes).
    pub group_order: u64,
    /// Group exponent; all values lie in `Q(zeta_exponent)`.
    pub exponent: u64,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Dimension of the `i`-th character.
    pub fn dim(&self, i: usize) -> u64 {
        self.profiles[i][0].dim()
    }

    /// All dimensions, in row order.
    pub fn dims(&self) -> Vec<u64> {
        (0..self.values.len()).map(|i| self.dim(i)).collect()
    }
}

/// Outcome of an orthogonality check; `failures` lists every violated
/// relation by name.
#[derive(Clone, Debug)]
pub struct OrthReport {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Verifies the row and column orthogonality relations of a character table
/// in exact cyclotomic arithmetic:
/// `sum_C |C| chi_i(C) conj(chi_j(C)) = delta_ij |G|` and
/// `sum_i chi_i(C) conj(chi_i(D)) = delta_CD |G| / |C|`.
pub fn verify_orthogonality(table: &CharacterTable) -> Result<OrthReport> {
    let mut failures = Vec::new();
    let g = BigRational::from_integer(table.group_order.into());
    let r = table.values.len();
    let n_cls = table.classes.len();
    if r != n_cls {
        failures.push(format!("{r} characters for {n_cls} classes"));
    }
    for i in 0..r {
        for j in i..r {
            let mut acc = CyclotomicNumber::zero();
            for (c, info) in table.classes.iter().enumerate() {
                let term = table.values[i][c].checked_mul(&table.values[j][c].conjugate())?;
                acc = acc
                    .checked_add(&term.scaled(&BigRational::from_integer(info.size.into())))?;
            }
            let expect = if i == j { g.clone() } else { BigRational::from_integer(0.into()) };
            if acc.to_rational().ok() != Some(expect) {
                failures.push(format!("row orthogonality ({i}, {j}): got {acc}"));
            }
        }
    }
    for a in 0..n_cls {
        for b in a..n_cls {
            let mut acc = CyclotomicNumber::zero();
            for i in 0..r {
                let term = table.values[i][a].checked_mul(&table.values[i][b].conjugate())?;
                acc = acc.checked_add(&term)?;
            }
            let expect = if a == b {
                &g / BigRational::from_integer(table.classes[a].size.into())
            } else {
                BigRational::from_integer(0.into())
            };
            if acc.to_rational().ok() != Some(expect) {
                failures.push(format!("column orthogonality ({a}, {b}): got {acc}"));
            }
        }
    }
    Ok(OrthReport {
        pass: failures.is_empty(),
        failures,
    })
}

/// Sort key for a character row: dimension first, then the coefficient
/// vectors of the values embedded into `Q(zeta_exponent)`, lexicographically.
/// Total and deterministic for rows of one table.
pub fn row_sort_key(
    dim: u64,
    values: &[CyclotomicNumber],
    exponent: u64,
) -> Result<(u64, Vec<Vec<BigRational>>)> {
    let mut key = Vec::with_capacity(values.len());
    for v in values {
        key.push(v.sort_key_at(exponent)?);
    }
    Ok((dim, key))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64, k: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(n, k).unwrap()
    }

    /// Hand-built table of C3 for the checks: values zeta_3^(jk).
    fn c3_table() -> CharacterTable {
        let classes = (0..3)
            .map(|i| ClassInfo {
                rep_index: i,
                size: 1,
                rep_order: if i == 0 { 1 } else { 3 },
                inverse_class: [0, 2, 1][i],
            })
            .collect();
        let values: Vec<Vec<_>> = (0..3)
            .map(|j| (0..3).map(|k| zeta(3, (j * k) as i64)).collect())
            .collect();
        let profiles = (0..3)
            .map(|j| {
                (0..3)
                    .map(|k| {
                        let mut counts = vec![0u64; 3];
                        counts[(j * k % 3) as usize] = 1;
                        EigenvalueProfile::new(3, counts).unwrap()
                    })
                    .collect()
            })
            .collect();
        CharacterTable {
            classes,
            values,
            profiles,
            group_order: 3,
            exponent: 3,
        }
    }

    #[test]
    fn c3_orthogonality_passes() {
        let report = verify_orthogonality(&c3_table()).unwrap();
        assert!(report.pass, "failures: {:?}", report.failures);
    }

    #[test]
    fn perturbed_value_is_detected() {
        let mut t = c3_table();
        // replace chi_1(g^2) = zeta_3^2 by zeta_3: now rows 1 and 2 collide
        t.values[1][2] = zeta(3, 1);
        let report = verify_orthogonality(&t).unwrap();
        assert!(!report.pass);
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("row orthogonality")));
    }

    #[test]
    fn sort_keys_are_distinct_and_ordered() {
        let t = c3_table();
        let mut keys: Vec<_> = (0..3)
            .map(|i| row_sort_key(t.dim(i), &t.values[i], t.exponent).unwrap())
            .collect();
        let orig = keys.clone();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 3);
        // all-ones row has the largest value tuple of the three
        assert_eq!(keys[2], orig[0].clone());
    }
}

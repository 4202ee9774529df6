//! Finite group closure and conjugacy classes.

use std::collections::HashMap;

use super::element::GroupElement;
use crate::error::{Error, Result};

/// Default bound on group closure size.
pub const DEFAULT_SIZE_CAP: usize = 100_000;

/// A finite group as an explicit, deterministically ordered element list.
/// Index 0 is the identity; the rest appear in breadth-first discovery order
/// from the generators, so the numbering is reproducible run to run.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    generator_indices: Vec<usize>,
}

/// One conjugacy class: the representative is the member with the smallest
/// element index, and `members` is sorted ascending.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: usize,
    pub members: Vec<usize>,
}

/// The class partition plus the element-to-class lookup.
#[derive(Clone, Debug)]
pub struct Classes {
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<usize>,
}

/// Closes the generators under multiplication, breadth-first.
///
/// # Errors
/// [`Error::Inconsistent`] for an empty generator list or generators from
/// different ambient groups; [`Error::SizeBound`] when the closure exceeds
/// `cap`.
pub fn generate_group(generators: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
    let first = generators
        .first()
        .ok_or_else(|| Error::Inconsistent("at least one generator is required".into()))?;
    for g in generators {
        if !g.same_family(first) {
            return Err(Error::Inconsistent(
                "generators from different ambient groups".into(),
            ));
        }
    }
    let identity = first.identity_like();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut cursor = 0;
    while cursor < elements.len() {
        let current = elements[cursor].clone();
        for g in generators {
            let next = current.mul(g)?;
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::SizeBound(cap));
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }
    let generator_indices = generators.iter().map(|g| index[g]).collect();
    Ok(FiniteGroup {
        elements,
        index,
        generator_indices,
    })
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, el: &GroupElement) -> Option<usize> {
        self.index.get(el).copied()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn mul_idx(&self, i: usize, j: usize) -> usize {
        let prod = self.elements[i]
            .mul(&self.elements[j])
            .expect("elements of one group share a family");
        self.index[&prod]
    }

    pub fn inv_idx(&self, i: usize) -> usize {
        self.index[&self.elements[i].inv()]
    }

    /// Order of the element at index `i`.
    pub fn element_order(&self, i: usize) -> u64 {
        let mut acc = i;
        for k in 1..=self.order() as u64 + 1 {
            if acc == 0 {
                return k;
            }
            acc = self.mul_idx(acc, i);
        }
        unreachable!("element order divides the group order")
    }

    /// Indices of `g^0, g^1, ..., g^(n-1)` for `g` the element at `i` of
    /// order `n`.
    pub fn power_map(&self, i: usize, n: u64) -> Vec<usize> {
        let mut out = Vec::with_capacity(n as usize);
        let mut acc = 0usize;
        for _ in 0..n {
            out.push(acc);
            acc = self.mul_idx(acc, i);
        }
        out
    }

    /// Conjugacy classes by orbit search, conjugating by generators only.
    /// Classes are ordered by their smallest member index, so the identity
    /// class comes first.
    pub fn conjugacy_classes(&self) -> Classes {
        let n = self.order();
        let unassigned = usize::MAX;
        let mut class_of = vec![unassigned; n];
        let mut classes = Vec::new();
        let gen_inv: Vec<(usize, usize)> = self
            .generator_indices
            .iter()
            .map(|&g| (g, self.inv_idx(g)))
            .collect();
        for start in 0..n {
            if class_of[start] != unassigned {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut cursor = 0;
            while cursor < members.len() {
                let x = members[cursor];
                for &(g, g_inv) in &gen_inv {
                    let y = self.mul_idx(self.mul_idx(g_inv, x), g);
                    if class_of[y] == unassigned {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                cursor += 1;
            }
            members.sort_unstable();
            classes.push(ConjClass { rep: start, members });
        }
        Classes { classes, class_of }
    }

    /// The group exponent: lcm of the element orders (class representatives
    /// suffice since order is a class invariant).
    pub fn exponent(&self, classes: &Classes) -> u64 {
        let mut e = 1u64;
        for c in &classes.classes {
            e = num::Integer::lcm(&e, &self.element_order(c.rep));
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::element::{Matrix2, PermElem, SemiElem, S3_IDENTITY};

    fn psl2(p: u64) -> FiniteGroup {
        let s = GroupElement::Matrix(Matrix2::new(p, true, [0, -1, 1, 0]).unwrap());
        let t = GroupElement::Matrix(Matrix2::new(p, true, [1, 1, 0, 1]).unwrap());
        generate_group(&[s, t], DEFAULT_SIZE_CAP).unwrap()
    }

    #[test]
    fn identity_only_group() {
        let id = GroupElement::Perm(PermElem::identity(4));
        let g = generate_group(&[id], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.conjugacy_classes().classes.len(), 1);
    }

    #[test]
    fn psl2_f7_orders_and_classes() {
        let g = psl2(7);
        assert_eq!(g.order(), 168);
        let cls = g.conjugacy_classes();
        assert_eq!(cls.classes.len(), 6);
        assert_eq!(g.exponent(&cls), 84);
        // identity class first and a singleton
        assert_eq!(cls.classes[0].members, vec![0]);
        // class sizes sum to the group order
        let total: usize = cls.classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(total, 168);
    }

    #[test]
    fn psl2_f5_and_sl2_z8() {
        assert_eq!(psl2(5).order(), 60);
        let s = GroupElement::Matrix(Matrix2::new(8, false, [0, -1, 1, 0]).unwrap());
        let t = GroupElement::Matrix(Matrix2::new(8, false, [1, 1, 0, 1]).unwrap());
        let sl = generate_group(&[s, t], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(sl.order(), 384);
        let sp = GroupElement::Matrix(Matrix2::new(8, true, [0, -1, 1, 0]).unwrap());
        let tp = GroupElement::Matrix(Matrix2::new(8, true, [1, 1, 0, 1]).unwrap());
        let psl = generate_group(&[sp, tp], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(psl.order(), 192);
    }

    #[test]
    fn semidirect_group_order() {
        let n = 3;
        let a = GroupElement::Semi(SemiElem::new(n, [1, 0], S3_IDENTITY).unwrap());
        let s = GroupElement::Semi(SemiElem::new(n, [0, 0], [1, 0, 2]).unwrap());
        let u = GroupElement::Semi(SemiElem::new(n, [0, 0], [1, 2, 0]).unwrap());
        let g = generate_group(&[a, s, u], DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(g.order(), 54);
    }

    #[test]
    fn size_cap_enforced() {
        let t = GroupElement::Matrix(Matrix2::new(13, true, [1, 1, 0, 1]).unwrap());
        let s = GroupElement::Matrix(Matrix2::new(13, true, [0, -1, 1, 0]).unwrap());
        assert!(matches!(
            generate_group(&[s, t], 100),
            Err(Error::SizeBound(100))
        ));
    }

    #[test]
    fn mixed_generators_rejected() {
        let a = GroupElement::Matrix(Matrix2::identity(5, true));
        let b = GroupElement::Perm(PermElem::identity(3));
        assert!(generate_group(&[a, b], 10).is_err());
        assert!(generate_group(&[], 10).is_err());
    }

    #[test]
    fn powers_and_inverses() {
        let g = psl2(5);
        for i in [0usize, 1, 5, 17] {
            let n = g.element_order(i);
            let powers = g.power_map(i, n);
            assert_eq!(powers[0], 0);
            if n > 1 {
                assert_eq!(powers[1], i);
            }
            assert_eq!(g.mul_idx(powers[n as usize - 1], i), 0);
            assert_eq!(g.mul_idx(g.inv_idx(i), i), 0);
        }
    }
}

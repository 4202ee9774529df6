//! Concrete group elements: 2x2 matrices over `Z/m` (optionally projective),
//! semidirect-product pairs `(Z/n)^2 x| S3`, and plain permutations.

use crate::error::{Error, Result};

/// A permutation of `{0, 1, 2}` as its image list: `sigma[i]` is the image
/// of `i`.
pub type S3 = [u8; 3];

pub const S3_IDENTITY: S3 = [0, 1, 2];

/// All six permutations, identity first.
pub const S3_ALL: [S3; 6] = [
    [0, 1, 2],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [0, 2, 1],
    [2, 1, 0],
];

/// Composition `(a o b)(i) = a(b(i))`.
pub fn s3_compose(a: S3, b: S3) -> S3 {
    [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
}

pub fn s3_inverse(a: S3) -> S3 {
    let mut inv = [0u8; 3];
    for i in 0..3 {
        inv[a[i] as usize] = i as u8;
    }
    inv
}

/// The matrix of `sigma` acting on `(Z/n)^2` in the semidirect product
/// `(Z/n)^2 x| S3`, written `(v, sigma)(w, tau) = (v + sigma.w, sigma tau)`.
///
/// The transposition `(0 1)` swaps the two coordinates and the 3-cycle
/// `0 -> 1 -> 2 -> 0` sends `(m, n)` to `(-n, m - n)`; the rest follow by
/// composition (checked exhaustively in the tests).
pub fn s3_action_matrix(sigma: S3) -> [[i64; 2]; 2] {
    match sigma {
        [0, 1, 2] => [[1, 0], [0, 1]],
        [1, 0, 2] => [[0, 1], [1, 0]],
        [1, 2, 0] => [[0, -1], [1, -1]],
        [2, 0, 1] => [[-1, 1], [-1, 0]],
        [0, 2, 1] => [[1, -1], [0, -1]],
        [2, 1, 0] => [[-1, 0], [-1, 1]],
        _ => panic!("not a permutation of 0..3: {sigma:?}"),
    }
}

/// A 2x2 matrix over `Z/m` with determinant 1. With `projective` set, the
/// matrix is identified with its negative and stored as the lexicographically
/// smaller of the two entry tuples, so equality and hashing see `PSL` rather
/// than `SL`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Matrix2 {
    m: u64,
    projective: bool,
    /// Row-major `[a, b, c, d]`, entries reduced mod `m`.
    e: [u64; 4],
}

impl Matrix2 {
    /// # Errors
    /// [`Error::OutOfRange`] for modulus below 2, [`Error::Inconsistent`]
    /// when the determinant is not 1 mod `m`.
    pub fn new(m: u64, projective: bool, entries: [i64; 4]) -> Result<Self> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("matrix modulus {m} < 2")));
        }
        let e = entries.map(|x| x.rem_euclid(m as i64) as u64);
        let det = (e[0] * e[3] % m + m - e[1] * e[2] % m) % m;
        if det != 1 {
            return Err(Error::Inconsistent(format!(
                "determinant {det} != 1 mod {m} for entries {entries:?}"
            )));
        }
        Ok(Matrix2 { m, projective, e }.canonical())
    }

    pub fn identity(m: u64, projective: bool) -> Self {
        Matrix2 {
            m,
            projective,
            e: [1, 0, 0, 1],
        }
    }

    fn canonical(mut self) -> Self {
        if self.projective {
            let neg = self.e.map(|x| if x == 0 { 0 } else { self.m - x });
            if neg < self.e {
                self.e = neg;
            }
        }
        self
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn entries(&self) -> [u64; 4] {
        self.e
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!((self.m, self.projective), (o.m, o.projective));
        let m = self.m;
        let [a, b, c, d] = self.e;
        let [e, f, g, h] = o.e;
        Matrix2 {
            m,
            projective: self.projective,
            e: [
                (a * e + b * g) % m,
                (a * f + b * h) % m,
                (c * e + d * g) % m,
                (c * f + d * h) % m,
            ],
        }
        .canonical()
    }

    /// Inverse via the adjugate; valid because the determinant is 1.
    pub fn inv(&self) -> Self {
        let m = self.m;
        let [a, b, c, d] = self.e;
        Matrix2 {
            m,
            projective: self.projective,
            e: [d, (m - b) % m, (m - c) % m, a],
        }
        .canonical()
    }
}

/// An element `(v, sigma)` of `(Z/n)^2 x| S3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SemiElem {
    n: u64,
    v: [u64; 2],
    sigma: S3,
}

impl SemiElem {
    /// # Errors
    /// [`Error::OutOfRange`] for modulus 0, [`Error::Inconsistent`] for a
    /// non-permutation.
    pub fn new(n: u64, v: [i64; 2], sigma: S3) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("semidirect modulus 0".into()));
        }
        if !S3_ALL.contains(&sigma) {
            return Err(Error::Inconsistent(format!(
                "not a permutation of 0..3: {sigma:?}"
            )));
        }
        Ok(SemiElem {
            n,
            v: v.map(|x| x.rem_euclid(n as i64) as u64),
            sigma,
        })
    }

    pub fn identity(n: u64) -> Self {
        SemiElem {
            n,
            v: [0, 0],
            sigma: S3_IDENTITY,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn translation(&self) -> [u64; 2] {
        self.v
    }

    pub fn permutation(&self) -> S3 {
        self.sigma
    }

    /// Applies the action matrix of `sigma` to `w` mod `n`.
    pub fn act(sigma: S3, n: u64, w: [u64; 2]) -> [u64; 2] {
        let mat = s3_action_matrix(sigma);
        let apply = |row: [i64; 2]| -> u64 {
            (row[0] * w[0] as i64 + row[1] * w[1] as i64).rem_euclid(n as i64) as u64
        };
        [apply(mat[0]), apply(mat[1])]
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.n, o.n);
        let moved = Self::act(self.sigma, self.n, o.v);
        SemiElem {
            n: self.n,
            v: [(self.v[0] + moved[0]) % self.n, (self.v[1] + moved[1]) % self.n],
            sigma: s3_compose(self.sigma, o.sigma),
        }
    }

    pub fn inv(&self) -> Self {
        let si = s3_inverse(self.sigma);
        let moved = Self::act(si, self.n, self.v);
        SemiElem {
            n: self.n,
            v: [(self.n - moved[0]) % self.n, (self.n - moved[1]) % self.n],
            sigma: si,
        }
    }
}

/// A permutation of `{0, .., k-1}` as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PermElem(pub Vec<u8>);

impl PermElem {
    pub fn identity(k: usize) -> Self {
        PermElem((0..k as u8).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.0.len(), o.0.len());
        PermElem(o.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inv(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        PermElem(inv)
    }
}

/// A group element of one of the supported kinds. Elements of different
/// kinds, or of the same kind with different ambient parameters, never
/// multiply.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupElement {
    Matrix(Matrix2),
    Semi(SemiElem),
    Perm(PermElem),
}

impl GroupElement {
    /// True when both elements live in the same ambient group description.
    pub fn same_family(&self, other: &Self) -> bool {
        match (self, other) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                a.modulus() == b.modulus() && a.is_projective() == b.is_projective()
            }
            (GroupElement::Semi(a), GroupElement::Semi(b)) => a.modulus() == b.modulus(),
            (GroupElement::Perm(a), GroupElement::Perm(b)) => a.0.len() == b.0.len(),
            _ => false,
        }
    }

    /// # Errors
    /// [`Error::Inconsistent`] when the operands are not from the same
    /// ambient group.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !self.same_family(other) {
            return Err(Error::Inconsistent(
                "group elements from different ambient groups".into(),
            ));
        }
        Ok(match (self, other) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a.mul(b)),
            (GroupElement::Semi(a), GroupElement::Semi(b)) => GroupElement::Semi(a.mul(b)),
            (GroupElement::Perm(a), GroupElement::Perm(b)) => GroupElement::Perm(a.mul(b)),
            _ => unreachable!("same_family checked"),
        })
    }

    pub fn inv(&self) -> Self {
        match self {
            GroupElement::Matrix(a) => GroupElement::Matrix(a.inv()),
            GroupElement::Semi(a) => GroupElement::Semi(a.inv()),
            GroupElement::Perm(a) => GroupElement::Perm(a.inv()),
        }
    }

    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Matrix(a) => {
                GroupElement::Matrix(Matrix2::identity(a.modulus(), a.is_projective()))
            }
            GroupElement::Semi(a) => GroupElement::Semi(SemiElem::identity(a.modulus())),
            GroupElement::Perm(a) => GroupElement::Perm(PermElem::identity(a.0.len())),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// Multiplicative order, by repeated multiplication.
    pub fn order(&self) -> u64 {
        let id = self.identity_like();
        let mut acc = self.clone();
        for k in 1..=1_000_000u64 {
            if acc == id {
                return k;
            }
            acc = acc.mul(self).expect("same family by construction");
        }
        panic!("element order exceeds 1e6; not a supported finite group element")
    }
}

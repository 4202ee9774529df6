//! Finite groups as explicit element sets: closure, conjugacy classes,
//! character tables (Dixon-Burnside), eigenvalue profiles.

mod element;
mod group;
mod profile;
mod chartab;
mod dixon;

pub use element::{
    s3_action_matrix, s3_compose, s3_inverse, GroupElement, Matrix2, PermElem, SemiElem, S3,
    S3_ALL, S3_IDENTITY,
};
pub use group::{generate_group, Classes, ConjClass, FiniteGroup, DEFAULT_SIZE_CAP};
pub use profile::{nk_profile, EigenvalueProfile};
pub use chartab::{row_sort_key, verify_orthogonality, CharacterTable, ClassInfo, OrthReport};
pub use dixon::character_table_dixon;

//! Class counts, Fitting subgroups and character degrees of enumerated
//! groups, and the inequalities relating them.

pub mod affine;
pub mod characters;
pub mod classes;
pub mod fitting;
pub mod inequalities;

pub use affine::{affine_group, affine_group_left, spot_check_axioms, AffineElement, LeftAffineElement};
pub use characters::{character_degrees, degree_modulus, DegreeData, DEFAULT_DEGREE_CAP};
pub use classes::{
    commuting_pair_count, commuting_probability, conjugacy_classes, conjugacy_classes_exhaustive, ClassData,
    CommutingProbability,
};
pub use fitting::{fitting_order, p_core, sylow_subgroup, FittingData, FittingSource, DEFAULT_SYLOW_BUDGET};
pub use inequalities::{
    profile, verify_inequalities, verify_k_affine_le_module, Expectation, GroupProfile, ProfileOptions, CHECK_IDS,
};

use crate::group::{FiniteGroup, GroupElement};

pub fn is_solvable<E: GroupElement>(g: &FiniteGroup<E>) -> bool {
    g.is_solvable()
}

#[cfg(test)]
mod tests;

mod support;

use proptest::prelude::*;
use support::*;

proptest! {
    #![proptest_config(config(1500))]

    #[test]
    fn smith_decomposition_is_valid(rows in matrix_strategy()) {
        snf_is_valid(rows)?;
    }

    #[test]
    fn smith_preserves_determinant(rows in square_strategy()) {
        snf_determinant(rows)?;
    }

    #[test]
    fn ext_dual_is_an_involution((s, t, raw) in hom_strategy()) {
        ext_is_involution(s, t, raw)?;
    }

    #[test]
    fn ext_dual_reverses_composition((s, _, raw) in hom_strategy()) {
        ext_reverses_composition(s, raw)?;
    }

    #[test]
    fn dihedral_d_reverses_with_orientation(n in -500i64..=500) {
        dihedral_conjugation_symmetry(n)?;
    }

    #[test]
    fn profiles_are_orbit_invariant((a, b) in ab_strategy()) {
        profile_orbit_invariance(a, b)?;
    }
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn conjugation_keeps_classes((a, b) in ab_strategy()) {
        conjugation_preserves_classes(a, b)?;
    }
}

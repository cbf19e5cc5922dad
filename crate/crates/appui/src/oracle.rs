//! Brute-force counterparts of the closed-form constructions.
//!
//! Everything here is defined directly from the bracket, with no knowledge of
//! the antichain combinatorics in [`crate::standard`]: the appui subspace is
//! a literal spanwise bracket, the normalizer tests every root space
//! individually, and subalgebra/closure questions iterate the bracket to a
//! fixed point.  These functions are the reference the closed forms are
//! measured against.

use crate::chevalley::{Algebra, HStableSubspace};
use crate::linalg::RatMatrix;

/// `[U, g]`, computed spanwise.
pub fn appui(alg: &Algebra, u: &HStableSubspace) -> HStableSubspace {
    alg.bracket_spaces(u, &alg.full_subspace())
}

/// The normalizer `{x ∈ g : [x, U] ⊆ U}` of an `ad(h)`-stable subspace.
///
/// The normalizer is again `ad(h)`-stable, so it suffices to test each root
/// space as a whole; all of `h` normalizes `U` because `U` is a sum of root
/// spaces and a piece of `h`.
pub fn normalizer(alg: &Algebra, u: &HStableSubspace) -> HStableSubspace {
    let rank = alg.rank();
    let m = alg.num_positive();
    let mut result = HStableSubspace::new(
        Default::default(),
        Default::default(),
        RatMatrix::identity(rank),
    );
    for a in 0..alg.signed_count() {
        let line = HStableSubspace::from_parts(rank, m, [a], []);
        if u.contains(&alg.bracket_spaces(&line, u)) {
            if a < m {
                result.pos.insert(a);
            } else {
                result.neg.insert(a - m);
            }
        }
    }
    result
}

/// Smallest subalgebra containing `U`: iterates `U ← U + [U, U]` to a fixed
/// point (the dimension strictly grows, so at most `dim g` rounds).
pub fn closure(alg: &Algebra, u: &HStableSubspace) -> HStableSubspace {
    let mut cur = u.clone();
    loop {
        let next = cur.sum(&alg.bracket_spaces(&cur, &cur));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Whether `[U, U] ⊆ U`.
pub fn is_subalgebra(alg: &Algebra, u: &HStableSubspace) -> bool {
    u.contains(&alg.bracket_spaces(u, u))
}

/// Whether `[U, W] ⊆ U` (U is an ideal of W when also `U ⊆ W`).
pub fn is_ideal_of(alg: &Algebra, u: &HStableSubspace, w: &HStableSubspace) -> bool {
    u.contains(&alg.bracket_spaces(u, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::NilpotentStandard;
    use std::collections::BTreeSet;

    fn alg(name: &str) -> Algebra {
        Algebra::new(name.parse().unwrap())
    }

    #[test]
    fn appui_of_highest_root_space_a2() {
        let g = alg("A2");
        let th = g.root_system().highest_root_index();
        let u = HStableSubspace::from_parts(2, 3, [th], []);
        let v = appui(&g, &u);
        assert_eq!(v.pos, (0..3usize).collect());
        assert!(v.neg.is_empty());
        assert_eq!(v.cartan().rank(), 1);
    }

    #[test]
    fn normalizer_of_borel_is_borel() {
        for name in ["A2", "B3", "G2"] {
            let g = alg(name);
            let m = g.num_positive();
            let borel = HStableSubspace::new(
                (0..m).collect(),
                BTreeSet::new(),
                RatMatrix::identity(g.rank()),
            );
            assert_eq!(normalizer(&g, &borel), borel, "{name}");
        }
    }

    #[test]
    fn normalizer_matches_closed_form_on_an_example() {
        let g = alg("B4");
        let rs = g.root_system();
        let beta = rs.index_of(&[0, 1, 2, 2]).unwrap();
        let nil = NilpotentStandard::new(rs, &[beta]).unwrap();
        assert_eq!(normalizer(&g, &nil.tau(&g)), nil.normalizer(&g));
    }

    #[test]
    fn closure_of_opposite_simple_spaces_is_everything() {
        let g = alg("A2");
        let rs = g.root_system();
        let a1 = rs.index_of(&[1, 0]).unwrap();
        let u = HStableSubspace::from_parts(2, 3, [a1, a1 + 3], []);
        let c = closure(&g, &u);
        // e_{α1}, e_{-α1} generate an sl₂: {e, f, h_{α1}}.
        assert_eq!(c.pos, BTreeSet::from([a1]));
        assert_eq!(c.neg, BTreeSet::from([a1]));
        assert_eq!(c.cartan().rank(), 1);
        assert!(is_subalgebra(&g, &c));
        assert!(!is_subalgebra(&g, &u));
    }

    #[test]
    fn nilpotent_tau_is_an_ideal_of_its_normalizer() {
        let g = alg("C3");
        let rs = g.root_system();
        for r in rs.antichains(false).take(8).collect::<Vec<_>>() {
            let nil = NilpotentStandard::new(rs, &r).unwrap();
            let tau = nil.tau(&g);
            assert!(is_subalgebra(&g, &tau));
            assert!(is_ideal_of(&g, &tau, &nil.normalizer(&g)));
        }
    }
}

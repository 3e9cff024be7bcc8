//! Property tests over randomly sampled words, points and fold sets.

use std::collections::BTreeSet;

use proptest::prelude::*;

use alcove_core::exact::{rat, Rat};
use alcove_core::gallery;
use alcove_core::root_data::Root;
use alcove_core::{Element, GroupContext, Word};

fn type_tag() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2~"), Just("C2~"), Just("G2~")]
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..3, 0..=max_len).prop_map(Word)
}

fn rat_point() -> impl Strategy<Value = [Rat; 2]> {
    let coord = (-40i64..40, 1i64..8).prop_map(|(n, d)| Rat::new(n, d));
    (coord.clone(), coord).prop_map(|(a, b)| [a, b])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Affine reflections are involutions on arbitrary rational points.
    #[test]
    fn affine_reflect_is_involutive(tag in type_tag(), p in rat_point(), k in -4i64..=4, idx in 0usize..6) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let roots = ctx.root_system().positive_roots();
        let g = roots[idx % roots.len()];
        let once = ctx.root_system().affine_reflect(&g, k, &p);
        let twice = ctx.root_system().affine_reflect(&g, k, &once);
        prop_assert_eq!(twice, p);
    }

    /// Words evaluate consistently: length of the product never exceeds the
    /// word length and matches the canonical reduced word round trip.
    #[test]
    fn word_evaluation_round_trips(tag in type_tag(), w in word(9)) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let element = ctx.from_word(&w).unwrap();
        prop_assert!(ctx.length(&element) <= w.len());
        let reduced = ctx.reduced_word(&element);
        prop_assert_eq!(reduced.len(), ctx.length(&element));
        prop_assert_eq!(ctx.from_word(&reduced).unwrap(), element);
    }

    /// Length is inverse-invariant.
    #[test]
    fn length_of_inverse(tag in type_tag(), w in word(9)) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let element = ctx.from_word(&w).unwrap();
        prop_assert_eq!(ctx.length(&element), ctx.length(&element.inverse()));
    }

    /// Multifolding is an involution that preserves the gallery type, and
    /// the fold set is the symmetric difference.
    #[test]
    fn multifold_involution(tag in type_tag(), w in word(8), mask in 0u64..256, start in word(4)) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let c0 = ctx.from_word(&start).unwrap();
        let g = gallery::gallery_from_word(&ctx, &c0, &w).unwrap();
        let j: BTreeSet<usize> = (1..=g.len()).filter(|t| mask >> (t - 1) & 1 == 1).collect();
        let folded = gallery::multifold(&g, &j).unwrap();
        prop_assert_eq!(folded.word_type(), g.word_type());
        prop_assert_eq!(folded.fold_set(), j.clone());
        prop_assert_eq!(gallery::multifold(&folded, &j).unwrap(), g);
    }

    /// End alcoves are equivariant under the left group action.
    #[test]
    fn end_alcove_equivariance(tag in type_tag(), w in word(7), mask in 0u64..128, mover in word(5)) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let g = gallery::gallery_from_word(&ctx, &Element::IDENTITY, &w).unwrap();
        let j: BTreeSet<usize> = (1..=g.len()).filter(|t| mask >> (t - 1) & 1 == 1).collect();
        let folded = gallery::multifold(&g, &j).unwrap();
        let x = ctx.from_word(&mover).unwrap();
        prop_assert_eq!(
            gallery::end_alcove(&ctx, &gallery::act(&x, &folded)),
            x.mul(&gallery::end_alcove(&ctx, &folded))
        );
    }

    /// The footprint of any gallery is unfolded and ends where the gallery
    /// ends.
    #[test]
    fn footprint_endpoint_law(tag in type_tag(), w in word(8), mask in 0u64..256) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let g = gallery::gallery_from_word(&ctx, &Element::IDENTITY, &w).unwrap();
        let j: BTreeSet<usize> = (1..=g.len()).filter(|t| mask >> (t - 1) & 1 == 1).collect();
        let folded = gallery::multifold(&g, &j).unwrap();
        let ft = gallery::footprint(&folded);
        prop_assert!(ft.is_unfolded());
        prop_assert_eq!(gallery::end_alcove(&ctx, &ft), gallery::end_alcove(&ctx, &folded));
    }

    /// Simple reflections send positive roots to roots, negating exactly the
    /// root defining the reflection.
    #[test]
    fn root_reflection_permutes_positives(tag in type_tag(), idx in 0usize..6, which in 0usize..2) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let rs = ctx.root_system();
        let roots = rs.positive_roots();
        let g = roots[idx % roots.len()];
        let simple = if which == 0 { Root::new(1, 0) } else { Root::new(0, 1) };
        let m = rs.root_reflection_matrix(&simple);
        let image = Root { coords: m.mul_ivec(g.coords) };
        prop_assert!(rs.is_root(&image));
        if g == simple {
            prop_assert_eq!(image, g.neg());
        } else {
            prop_assert!(rs.is_positive_root(&image));
        }
    }

    /// Barycenter pairings of the fundamental alcove stay strictly inside
    /// (0,1); used by every wall-counting routine.
    #[test]
    fn barycenter_stays_in_the_open_alcove(tag in type_tag(), idx in 0usize..6) {
        let ctx = GroupContext::from_tag(tag).unwrap();
        let roots = ctx.root_system().positive_roots();
        let g = roots[idx % roots.len()];
        let t = ctx.root_system().pairing(ctx.barycenter(), &g);
        prop_assert!(t > rat(0) && t < rat(1));
    }
}

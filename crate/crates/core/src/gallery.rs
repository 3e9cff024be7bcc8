//! Combinatorial galleries: decorated words, multifoldings, footprints and
//! the folding route to shadows.
//!
//! A gallery is stored as its start alcove plus the decorated word (panel
//! types with fold flags); the induced alcove sequence is recomputed on
//! demand. Folding is then a pure index-set operation on the flags, and the
//! geometric description (reflecting the tail across the panel's wall) is a
//! tested consequence rather than the stored representation.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::coxeter::{Element, GroupContext, Word};
use crate::error::Error;
use crate::root_data::Hyperplane;

/// Cap on the word length for the 2^ℓ folding sweep.
pub const FOLDING_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GalleryStep {
    pub panel_type: u8,
    pub folded: bool,
}

/// A combinatorial gallery: start alcove plus decorated word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gallery {
    pub start: Element,
    pub steps: Vec<GalleryStep>,
}

impl Gallery {
    /// The (W,S)-type: the underlying word with fold decorations dropped.
    pub fn word_type(&self) -> Word {
        Word(self.steps.iter().map(|s| s.panel_type).collect())
    }

    /// Fold positions, 1-based as in the decorated-word picture.
    pub fn fold_set(&self) -> BTreeSet<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.folded)
            .map(|(t, _)| t + 1)
            .collect()
    }

    pub fn is_unfolded(&self) -> bool {
        self.steps.iter().all(|s| !s.folded)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for Gallery {
    /// Decorated digit string; `~` precedes each folded letter ("01~20").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            if step.folded {
                write!(f, "~")?;
            }
            write!(f, "{}", step.panel_type)?;
        }
        Ok(())
    }
}

impl FromStr for Gallery {
    type Err = Error;

    /// Parse a decorated digit string starting at the identity alcove.
    fn from_str(s: &str) -> Result<Gallery, Error> {
        let mut steps = Vec::new();
        let mut folded = false;
        for ch in s.chars() {
            if ch == '~' {
                folded = true;
                continue;
            }
            let digit = ch.to_digit(10).ok_or(Error::InvalidGenerator { letter: ch as u8, count: 10 })?;
            steps.push(GalleryStep { panel_type: digit as u8, folded });
            folded = false;
        }
        Ok(Gallery { start: Element::IDENTITY, steps })
    }
}

/// The unfolded gallery of type `word` starting at `c0`.
pub fn gallery_from_word(ctx: &GroupContext, c0: &Element, word: &Word) -> Result<Gallery, Error> {
    for &letter in &word.0 {
        ctx.generator(letter)?;
    }
    Ok(Gallery {
        start: *c0,
        steps: word.0.iter().map(|&panel_type| GalleryStep { panel_type, folded: false }).collect(),
    })
}

/// Induced alcove sequence `c_0, …, c_n`: a folded step stays put, an
/// unfolded step crosses the panel.
pub fn alcove_sequence(ctx: &GroupContext, g: &Gallery) -> Vec<Element> {
    let mut seq = Vec::with_capacity(g.len() + 1);
    let mut cur = g.start;
    seq.push(cur);
    for step in &g.steps {
        if !step.folded {
            cur = ctx.mul_simple_right(&cur, step.panel_type);
        }
        seq.push(cur);
    }
    seq
}

pub fn end_alcove(ctx: &GroupContext, g: &Gallery) -> Element {
    let mut cur = g.start;
    for step in &g.steps {
        if !step.folded {
            cur = ctx.mul_simple_right(&cur, step.panel_type);
        }
    }
    cur
}

/// Multifold over a 1-based index set: the fold set of the result is the
/// symmetric difference of the old fold set with `J`, the type is unchanged.
pub fn multifold(g: &Gallery, j: &BTreeSet<usize>) -> Result<Gallery, Error> {
    let mut out = g.clone();
    for &idx in j {
        if idx == 0 || idx > g.len() {
            return Err(Error::FoldIndexOutOfRange { index: idx, len: g.len() });
        }
        out.steps[idx - 1].folded = !out.steps[idx - 1].folded;
    }
    Ok(out)
}

/// The wall containing panel `p_t` (1-based), i.e. the wall of the
/// conjugate reflection `c_{t-1} s_{j_t} c_{t-1}⁻¹`.
pub fn panel_wall(ctx: &GroupContext, g: &Gallery, t: usize) -> Result<Hyperplane, Error> {
    if t == 0 || t > g.len() {
        return Err(Error::FoldIndexOutOfRange { index: t, len: g.len() });
    }
    let seq = alcove_sequence(ctx, g);
    let carrier = seq[t - 1];
    panel_wall_of_alcove(ctx, &carrier, g.steps[t - 1].panel_type)
}

/// Wall of the type-`i` panel of alcove `x`: the wall of `x sᵢ x⁻¹`. Since
/// `sᵢ` is the reflection in `H_{γᵢ,kᵢ}`, the conjugate fixes
/// `x(H_{γᵢ,kᵢ}) = H_{u(γᵢ), kᵢ + (λ, u(γᵢ))}` for `x = t_λ u`.
pub fn panel_wall_of_alcove(ctx: &GroupContext, x: &Element, i: u8) -> Result<Hyperplane, Error> {
    ctx.generator(i)?;
    let rs = ctx.root_system();
    let (gamma, k) = if i == 0 {
        (rs.highest_root(), 1)
    } else {
        let mut coords = [0i64; 2];
        coords[i as usize - 1] = 1;
        (crate::root_data::Root { coords }, 0)
    };
    let image_dir = x.apply_to_root(&gamma);
    let level = k + rs.pairing_int(x.translation(), &image_dir);
    Ok(if image_dir.is_positive() {
        Hyperplane::new(image_dir, level)
    } else {
        Hyperplane::new(image_dir.neg(), -level)
    })
}

/// Footprint: delete all folded steps; the remaining unfolded gallery ends
/// at the same alcove.
pub fn footprint(g: &Gallery) -> Gallery {
    Gallery {
        start: g.start,
        steps: g.steps.iter().copied().filter(|s| !s.folded).collect(),
    }
}

/// Number of steps of an unfolded gallery whose panel lies in `h`.
pub fn crossing_count(ctx: &GroupContext, g: &Gallery, h: &Hyperplane) -> usize {
    debug_assert!(g.is_unfolded(), "crossing_count expects an unfolded gallery");
    (1..=g.len())
        .filter(|&t| panel_wall(ctx, g, t).map(|w| w == *h).unwrap_or(false))
        .count()
}

/// The set of end alcoves over all 2^ℓ multifoldings of one minimal gallery
/// of `w` starting at the identity. With the trivial orientation this is the
/// shadow of `w`.
pub fn shadow_via_foldings(ctx: &GroupContext, w: &Element) -> Result<BTreeSet<Element>, Error> {
    let word = ctx.reduced_word(w);
    shadow_via_foldings_of_word(ctx, &Element::IDENTITY, &word)
}

/// Folding sweep over an explicit gallery type; used to test braid
/// invariance with a second reduced word.
pub fn shadow_via_foldings_of_word(
    ctx: &GroupContext,
    c0: &Element,
    word: &Word,
) -> Result<BTreeSet<Element>, Error> {
    let n = word.len();
    if n > FOLDING_CAP {
        return Err(Error::FoldingCapExceeded { length: n, cap: FOLDING_CAP });
    }
    let base = gallery_from_word(ctx, c0, word)?;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let mut g = base.clone();
        for (pos, step) in g.steps.iter_mut().enumerate() {
            if mask >> pos & 1 == 1 {
                step.folded = true;
            }
        }
        out.insert(end_alcove(ctx, &g));
    }
    Ok(out)
}

/// Left action of the group on galleries.
pub fn act(x: &Element, g: &Gallery) -> Gallery {
    Gallery { start: x.mul(&g.start), steps: g.steps.clone() }
}

/// Decorated string form of a gallery, e.g. `01~20`.
pub fn decorated_string(g: &Gallery) -> String {
    use alloc::string::ToString;
    g.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat;
    use crate::root_data::Root;

    fn ctx() -> GroupContext {
        GroupContext::from_tag("A2~").unwrap()
    }

    fn el(c: &GroupContext, s: &str) -> Element {
        c.from_word(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn unfolded_gallery_ends_at_the_word_product() {
        let c = ctx();
        let empty = gallery_from_word(&c, &Element::IDENTITY, &Word::empty()).unwrap();
        assert_eq!(end_alcove(&c, &empty), Element::IDENTITY);
        let g = gallery_from_word(&c, &Element::IDENTITY, &"01".parse().unwrap()).unwrap();
        assert_eq!(end_alcove(&c, &g), el(&c, "01"));
        // From an arbitrary start alcove.
        let x = el(&c, "120");
        let g = gallery_from_word(&c, &x, &"0102".parse().unwrap()).unwrap();
        assert_eq!(end_alcove(&c, &g), x.mul(&el(&c, "0102")));
    }

    #[test]
    fn multifold_is_an_involution_preserving_type() {
        let c = ctx();
        let g = gallery_from_word(&c, &Element::IDENTITY, &"01201".parse().unwrap()).unwrap();
        assert_eq!(multifold(&g, &BTreeSet::new()).unwrap(), g);
        let j = BTreeSet::from([1, 3, 4]);
        let folded = multifold(&g, &j).unwrap();
        assert_eq!(folded.word_type(), g.word_type());
        assert_eq!(folded.fold_set(), j);
        assert_eq!(multifold(&folded, &j).unwrap(), g);
        // Symmetric difference law (γ^J)^K = γ^{JΔK}.
        let k = BTreeSet::from([3, 5]);
        let lhs = multifold(&folded, &k).unwrap();
        let sym: BTreeSet<usize> = j.symmetric_difference(&k).copied().collect();
        assert_eq!(lhs, multifold(&g, &sym).unwrap());
        assert!(multifold(&g, &BTreeSet::from([6])).is_err());
        assert!(multifold(&g, &BTreeSet::from([0])).is_err());
    }

    #[test]
    fn single_foldings_commute() {
        let c = ctx();
        let g = gallery_from_word(&c, &Element::IDENTITY, &"012010".parse().unwrap()).unwrap();
        for i in 1..=g.len() {
            for j in 1..=g.len() {
                let ij = multifold(&multifold(&g, &BTreeSet::from([i])).unwrap(), &BTreeSet::from([j]));
                let ji = multifold(&multifold(&g, &BTreeSet::from([j])).unwrap(), &BTreeSet::from([i]));
                assert_eq!(ij.unwrap(), ji.unwrap());
            }
        }
    }

    /// A single fold toggled at an unfolded position reflects the tail of
    /// the alcove sequence across the wall of that panel.
    #[test]
    fn folding_reflects_the_tail_across_the_panel_wall() {
        let c = ctx();
        let g = gallery_from_word(&c, &el(&c, "2"), &"01021".parse().unwrap()).unwrap();
        let seq = alcove_sequence(&c, &g);
        for t in 1..=g.len() {
            let wall = panel_wall(&c, &g, t).unwrap();
            let r = crate::boundary::reflection_element(&c, &wall);
            let folded = multifold(&g, &BTreeSet::from([t])).unwrap();
            let fseq = alcove_sequence(&c, &folded);
            for (pos, alcove) in fseq.iter().enumerate() {
                if pos < t {
                    assert_eq!(*alcove, seq[pos]);
                } else {
                    assert_eq!(*alcove, r.mul(&seq[pos]));
                }
            }
        }
    }

    #[test]
    fn fully_folded_gallery_stays_home() {
        let c = ctx();
        let g = gallery_from_word(&c, &el(&c, "12"), &"0120".parse().unwrap()).unwrap();
        let all: BTreeSet<usize> = (1..=g.len()).collect();
        let folded = multifold(&g, &all).unwrap();
        assert_eq!(end_alcove(&c, &folded), el(&c, "12"));
        assert_eq!(footprint(&folded).len(), 0);
    }

    #[test]
    fn footprint_preserves_the_endpoint_and_filters_the_type() {
        let c = ctx();
        let g = gallery_from_word(&c, &Element::IDENTITY, &"012010".parse().unwrap()).unwrap();
        assert_eq!(footprint(&g), g);
        let folded = multifold(&g, &BTreeSet::from([2, 5])).unwrap();
        let ft = footprint(&folded);
        assert!(ft.is_unfolded());
        assert_eq!(end_alcove(&c, &ft), end_alcove(&c, &folded));
        assert_eq!(ft.word_type(), Word(alloc::vec![0, 2, 0, 0]));
    }

    #[test]
    fn crossing_counts_match_the_length_criterion() {
        let c = ctx();
        let trivial = gallery_from_word(&c, &Element::IDENTITY, &Word::empty()).unwrap();
        assert_eq!(crossing_count(&c, &trivial, &Hyperplane::new(Root::new(1, 0), 0)), 0);
        for x in c.elements_up_to(4) {
            let gallery = gallery_from_word(&c, &Element::IDENTITY, &c.reduced_word(&x)).unwrap();
            for dir in c.root_system().positive_roots() {
                for level in -3..=3 {
                    let h = Hyperplane::new(*dir, level);
                    let r = crate::boundary::reflection_element(&c, &h);
                    let crossings = crossing_count(&c, &gallery, &h);
                    if c.length(&r.mul(&x)) < c.length(&x) {
                        assert_eq!(crossings, 1, "minimal gallery must cross a separating wall once");
                    } else {
                        assert_eq!(crossings, 0, "minimal gallery must avoid a non-separating wall");
                    }
                }
            }
        }
    }

    /// Folding a minimal gallery to rx at its unique crossing of H_r lands
    /// on x.
    #[test]
    fn single_fold_at_the_unique_crossing_reaches_the_mirror_alcove() {
        let c = ctx();
        let x = el(&c, "120");
        let h = Hyperplane::new(Root::new(1, 1), 2);
        let r = crate::boundary::reflection_element(&c, &h);
        let rx = r.mul(&x);
        assert!(c.length(&rx) > c.length(&x));
        let g = gallery_from_word(&c, &Element::IDENTITY, &c.reduced_word(&rx)).unwrap();
        let t = (1..=g.len())
            .find(|&t| panel_wall(&c, &g, t).unwrap() == h)
            .expect("gallery to rx crosses H_r");
        let folded = multifold(&g, &BTreeSet::from([t])).unwrap();
        assert_eq!(end_alcove(&c, &folded), x);
    }

    #[test]
    fn shadow_via_foldings_small_cases() {
        let c = ctx();
        assert_eq!(
            shadow_via_foldings(&c, &Element::IDENTITY).unwrap(),
            BTreeSet::from([Element::IDENTITY])
        );
        let s1 = el(&c, "1");
        assert_eq!(shadow_via_foldings(&c, &s1).unwrap(), BTreeSet::from([Element::IDENTITY, s1]));
    }

    #[test]
    fn foldings_agree_with_bruhat_shadow_on_a_small_ball() {
        for tag in ["A2~", "C2~", "G2~"] {
            let c = GroupContext::from_tag(tag).unwrap();
            for w in c.elements_up_to(4) {
                assert_eq!(shadow_via_foldings(&c, &w).unwrap(), bruhat::shadow(&c, &w), "{tag}");
            }
        }
    }

    #[test]
    fn folding_cap_is_enforced() {
        let c = ctx();
        let long = Word(alloc::vec![0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0]);
        assert!(matches!(
            shadow_via_foldings_of_word(&c, &Element::IDENTITY, &long),
            Err(Error::FoldingCapExceeded { length: 13, cap: FOLDING_CAP })
        ));
    }

    #[test]
    fn group_action_is_equivariant_on_endpoints() {
        let c = ctx();
        let g = gallery_from_word(&c, &el(&c, "1"), &"0201".parse().unwrap()).unwrap();
        let g = multifold(&g, &BTreeSet::from([2])).unwrap();
        for x in c.elements_up_to(3) {
            assert_eq!(end_alcove(&c, &act(&x, &g)), x.mul(&end_alcove(&c, &g)));
        }
    }

    #[test]
    fn decorated_string_round_trips() {
        let c = ctx();
        let g = gallery_from_word(&c, &Element::IDENTITY, &"0120".parse().unwrap()).unwrap();
        let folded = multifold(&g, &BTreeSet::from([3])).unwrap();
        assert_eq!(decorated_string(&folded), "01~20");
        let parsed: Gallery = "01~20".parse().unwrap();
        assert_eq!(parsed, folded);
    }
}

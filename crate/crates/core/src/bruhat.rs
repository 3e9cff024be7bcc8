//! Bruhat order: the lifting-property predicate, the brute-force subword
//! oracle, and shadow/interval enumeration.

use alloc::collections::BTreeSet;

use crate::coxeter::{Element, GroupContext, Word};
use crate::error::Error;

/// Default cap on `ℓ(y)` for the 2^ℓ subword oracle.
pub const ORACLE_CAP: usize = 14;

/// Bruhat order predicate `x ≤ y` via the lifting property: strip the
/// smallest right descent of `y` and follow `x` down when it shares it.
/// The recursion takes exactly one branch per step, so it runs in O(ℓ(y)).
pub fn leq(ctx: &GroupContext, x: &Element, y: &Element) -> bool {
    let mut x = *x;
    let mut y = *y;
    let mut ly = ctx.length(&y);
    loop {
        if x.is_identity() {
            return true;
        }
        let lx = ctx.length(&x);
        if lx > ly {
            return false;
        }
        // y ≠ e here since ℓ(y) ≥ ℓ(x) ≥ 1.
        let i = *ctx.right_descents(&y).iter().next().expect("descent of a non-identity element");
        let xs = ctx.mul_simple_right(&x, i);
        if ctx.length(&xs) < lx {
            x = xs;
        }
        y = ctx.mul_simple_right(&y, i);
        ly -= 1;
    }
}

/// Brute-force oracle: enumerate all 2^ℓ subwords of one reduced word of
/// `y` and test whether any evaluates to `x`. Kept independent of [`leq`].
pub fn leq_oracle(ctx: &GroupContext, x: &Element, y: &Element) -> Result<bool, Error> {
    leq_oracle_with_cap(ctx, x, y, ORACLE_CAP)
}

pub fn leq_oracle_with_cap(ctx: &GroupContext, x: &Element, y: &Element, cap: usize) -> Result<bool, Error> {
    let word = ctx.reduced_word(y);
    Ok(subword_evaluations_capped(ctx, &word, cap)?.contains(x))
}

/// Distinct evaluations of all subwords of `word`.
pub fn subword_evaluations(ctx: &GroupContext, word: &Word) -> Result<BTreeSet<Element>, Error> {
    subword_evaluations_capped(ctx, word, ORACLE_CAP)
}

fn subword_evaluations_capped(ctx: &GroupContext, word: &Word, cap: usize) -> Result<BTreeSet<Element>, Error> {
    let n = word.len();
    if n > cap {
        return Err(Error::OracleCapExceeded { length: n, cap });
    }
    let gens: Result<alloc::vec::Vec<&Element>, Error> =
        word.0.iter().map(|&i| ctx.generator(i)).collect();
    let gens = gens?;
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let mut acc = Element::IDENTITY;
        for (pos, gen) in gens.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                acc = acc.mul(gen);
            }
        }
        out.insert(acc);
    }
    Ok(out)
}

/// The lower Bruhat interval `[1, w]`, computed by filtering the length
/// ball with [`leq`]. This route is deliberately independent of subword
/// and folding enumeration so the three can cross-check each other.
pub fn shadow(ctx: &GroupContext, w: &Element) -> BTreeSet<Element> {
    let lw = ctx.length(w);
    ctx.elements_up_to(lw)
        .into_iter()
        .filter(|x| leq(ctx, x, w))
        .collect()
}

/// A Bruhat interval `[low, high]` with its member set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatInterval {
    pub low: Element,
    pub high: Element,
    pub members: BTreeSet<Element>,
}

/// The interval `[x, y]` as the shadow of `y` minus the annex of `x`.
pub fn interval(ctx: &GroupContext, x: &Element, y: &Element) -> Result<BruhatInterval, Error> {
    let annex = crate::annex::annex(ctx, x)?;
    let members = shadow(ctx, y)
        .into_iter()
        .filter(|z| !annex.members.contains(z))
        .collect();
    Ok(BruhatInterval { low: *x, high: *y, members })
}

/// Same interval by directly filtering the shadow with [`leq`]; retained as
/// a permanent consistency check against [`interval`].
pub fn interval_by_filter(ctx: &GroupContext, x: &Element, y: &Element) -> BruhatInterval {
    let members = shadow(ctx, y).into_iter().filter(|z| leq(ctx, x, z)).collect();
    BruhatInterval { low: *x, high: *y, members }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn ctx() -> GroupContext {
        GroupContext::from_tag("A2~").unwrap()
    }

    fn el(c: &GroupContext, s: &str) -> Element {
        c.from_word(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_is_below_everything() {
        let c = ctx();
        for y in c.elements_up_to(4) {
            assert!(leq(&c, &Element::IDENTITY, &y));
        }
    }

    #[test]
    fn s0_is_not_below_the_finite_parabolic() {
        let c = ctx();
        let s0 = el(&c, "0");
        for y in c.parabolic_elements(&BTreeSet::from([1, 2])).unwrap() {
            assert!(!leq(&c, &s0, &y));
        }
    }

    #[test]
    fn subword_example_012() {
        let c = ctx();
        assert!(leq(&c, &el(&c, "1"), &el(&c, "012")));
    }

    #[test]
    fn oracle_examples() {
        let c = ctx();
        let x = el(&c, "01");
        assert!(leq_oracle(&c, &x, &x).unwrap());
        assert!(!leq_oracle(&c, &el(&c, "01"), &el(&c, "10")).unwrap());
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let c = ctx();
        let long = el(&c, "0120102");
        assert!(matches!(
            leq_oracle_with_cap(&c, &Element::IDENTITY, &long, 5),
            Err(Error::OracleCapExceeded { length: 7, cap: 5 })
        ));
    }

    #[test]
    fn oracle_agrees_with_leq_on_small_ball() {
        let c = ctx();
        let ball = c.elements_up_to(4);
        for x in &ball {
            for y in &ball {
                assert_eq!(leq(&c, x, y), leq_oracle(&c, x, y).unwrap());
            }
        }
    }

    #[test]
    fn oracle_is_reduced_word_independent() {
        let c = ctx();
        for y in c.elements_up_to(5) {
            let min_word = c.reduced_word(&y);
            let max_word = c.reduced_word_max(&y);
            if min_word == max_word {
                continue;
            }
            let a = subword_evaluations(&c, &min_word).unwrap();
            let b = subword_evaluations(&c, &max_word).unwrap();
            assert_eq!(a, b, "subword sets differ between reduced words of {min_word}");
        }
    }

    #[test]
    fn shadow_examples() {
        let c = ctx();
        assert_eq!(shadow(&c, &Element::IDENTITY), BTreeSet::from([Element::IDENTITY]));
        let s1 = el(&c, "1");
        assert_eq!(shadow(&c, &s1), BTreeSet::from([Element::IDENTITY, s1]));
        // The dihedral longest element 010 dominates all of W_{0,1}.
        let shadow_010 = shadow(&c, &el(&c, "010"));
        assert_eq!(shadow_010.len(), 6);
        let parabolic: BTreeSet<_> =
            c.parabolic_elements(&BTreeSet::from([0, 1])).unwrap().into_iter().collect();
        assert_eq!(shadow_010, parabolic);
    }

    #[test]
    fn shadow_is_downward_closed() {
        let c = ctx();
        let w = el(&c, "01201");
        let sh = shadow(&c, &w);
        for z in &sh {
            for i in c.generator_indices() {
                let shorter = c.mul_simple_right(z, i);
                if c.length(&shorter) < c.length(z) {
                    assert!(sh.contains(&shorter));
                }
            }
        }
    }

    #[test]
    fn interval_trivial_cases() {
        let c = ctx();
        let w = el(&c, "0120");
        assert_eq!(interval(&c, &Element::IDENTITY, &w).unwrap().members, shadow(&c, &w));
        assert_eq!(interval(&c, &w, &w).unwrap().members, BTreeSet::from([w]));
    }

    #[test]
    fn both_interval_routes_agree() {
        let c = ctx();
        let ball = c.elements_up_to(4);
        for x in &ball {
            for y in &ball {
                assert_eq!(
                    interval(&c, x, y).unwrap().members,
                    interval_by_filter(&c, x, y).members
                );
            }
        }
    }

    #[test]
    fn partial_order_axioms_hold_exhaustively() {
        let c = GroupContext::from_tag("C2~").unwrap();
        let ball = c.elements_up_to(4);
        for x in &ball {
            assert!(leq(&c, x, x));
            for y in &ball {
                if leq(&c, x, y) && leq(&c, y, x) {
                    assert_eq!(x, y);
                }
                if leq(&c, x, y) && ctx_len_eq(&c, x, y) {
                    assert_eq!(x, y);
                }
                for z in &ball {
                    if leq(&c, x, y) && leq(&c, y, z) {
                        assert!(leq(&c, x, z));
                    }
                }
            }
        }
    }

    fn ctx_len_eq(c: &GroupContext, x: &Element, y: &Element) -> bool {
        c.length(x) == c.length(y)
    }
}

//! Annex enumeration and the structural checks attached to it.
//!
//! The annex of `w` is the set of alcoves `y` with `w ≰ y`. It is downward
//! closed in Bruhat order, so every member has a reduced word all of whose
//! prefixes are members; a BFS from the identity that only expands
//! length-increasing neighbours staying in the annex therefore reaches
//! every member, and it terminates because the annex is finite in affine
//! groups. The safety cap exists solely to turn a hypothetical
//! non-termination bug into a clean error.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::bruhat::leq;
use crate::coxeter::{Element, GroupContext};
use crate::error::Error;
use crate::exact::rat_floor;

/// Annex of an owner element: member set plus the boundary panels
/// (member, panel type) whose far side leaves the annex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annex {
    pub owner: Element,
    pub members: BTreeSet<Element>,
    pub boundary: BTreeSet<(Element, u8)>,
    /// Largest member length observed; recorded as data since no a-priori
    /// bound is known.
    pub max_member_length: usize,
}

impl Annex {
    /// Alcoves with at least one boundary panel.
    pub fn boundary_alcoves(&self) -> BTreeSet<Element> {
        self.boundary.iter().map(|(y, _)| *y).collect()
    }
}

/// Default safety cap on member length.
pub fn default_cap(ctx: &GroupContext, w: &Element) -> usize {
    let w0_order = match ctx.affine_type() {
        crate::root_data::AffineType::A2 => 6,
        crate::root_data::AffineType::C2 => 8,
        crate::root_data::AffineType::G2 => 12,
        crate::root_data::AffineType::A1 => 2,
    };
    ctx.length(w) + 2 * w0_order
}

pub fn annex(ctx: &GroupContext, w: &Element) -> Result<Annex, Error> {
    annex_with_cap(ctx, w, default_cap(ctx, w))
}

pub fn annex_with_cap(ctx: &GroupContext, w: &Element, cap: usize) -> Result<Annex, Error> {
    let mut members = BTreeSet::new();
    let mut max_member_length = 0;
    if !w.is_identity() {
        // e is a member iff w ≰ e, i.e. iff w ≠ e.
        members.insert(Element::IDENTITY);
        let mut queue: VecDeque<(Element, usize)> = VecDeque::new();
        queue.push_back((Element::IDENTITY, 0));
        while let Some((y, len)) = queue.pop_front() {
            max_member_length = max_member_length.max(len);
            for i in ctx.generator_indices() {
                let next = ctx.mul_simple_right(&y, i);
                let next_len = ctx.length(&next);
                if next_len <= len || members.contains(&next) {
                    continue;
                }
                if next_len > cap {
                    return Err(Error::AnnexCapExceeded { reached: next_len, cap });
                }
                if !leq(ctx, w, &next) {
                    members.insert(next);
                    queue.push_back((next, next_len));
                }
            }
        }
    }

    let mut boundary = BTreeSet::new();
    for y in &members {
        for i in ctx.generator_indices() {
            if !members.contains(&ctx.mul_simple_right(y, i)) {
                boundary.insert((*y, i));
            }
        }
    }

    Ok(Annex { owner: *w, members, boundary, max_member_length })
}

/// Every boundary panel type must be a right descent of the owner, and the
/// members must be closed under right multiplication by non-descents.
pub fn check_boundary_types(ctx: &GroupContext, w: &Element) -> Result<bool, Error> {
    let ax = annex(ctx, w)?;
    let descents = ctx.right_descents(w);
    for (y, i) in &ax.boundary {
        if !descents.contains(i) {
            return Ok(false);
        }
        let _ = y;
    }
    // Closure restated: for i with ℓ(wsᵢ) > ℓ(w), y ∈ annex ⇒ ysᵢ ∈ annex.
    for y in &ax.members {
        for i in ctx.generator_indices() {
            if !descents.contains(&i) && !ax.members.contains(&ctx.mul_simple_right(y, i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The product set `annex(w) · W_{I−{k}}`. The inclusion
/// `annex(w·s_k) ⊆ annex(w) · W_{I−{k}}` and its equality case when
/// `D_R(w·s_k) = {k}` are checked by the callers in [`crate::verify`].
pub fn annex_product(ctx: &GroupContext, w: &Element, k: u8) -> Result<BTreeSet<Element>, Error> {
    if w.is_identity() {
        return Err(Error::Precondition("annex_product requires w != e"));
    }
    if ctx.right_descents(w).contains(&k) {
        return Err(Error::Precondition("annex_product requires k not in D_R(w)"));
    }
    let ax = annex(ctx, w)?;
    let complement: BTreeSet<u8> = ctx.generator_indices().filter(|&i| i != k).collect();
    let parabolic = ctx.parabolic_elements(&complement)?;
    let mut out = BTreeSet::new();
    for x in &ax.members {
        for y in &parabolic {
            out.insert(x.mul(y));
        }
    }
    Ok(out)
}

/// For a fundamental-chamber owner, the annex must be stable under the
/// left action of the finite Weyl group W₀.
pub fn check_w0_stability(ctx: &GroupContext, w: &Element) -> Result<bool, Error> {
    if !ctx.is_fundamental_chamber(w) {
        return Err(Error::Precondition("check_w0_stability requires a fundamental-chamber element"));
    }
    let ax = annex(ctx, w)?;
    let finite: BTreeSet<u8> = (1..ctx.generator_count() as u8).collect();
    let w0 = ctx.parabolic_elements(&finite)?;
    for v in &w0 {
        for z in &ax.members {
            if !ax.members.contains(&v.mul(z)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Length-decreasing reflections preserve the annex: for every member `x`
/// and every wall separating `x` from the identity, the reflected element
/// is again a member.
pub fn reflection_closure_check(ctx: &GroupContext, w: &Element) -> Result<bool, Error> {
    let ax = annex(ctx, w)?;
    let rs = ctx.root_system();
    for x in &ax.members {
        let lx = ctx.length(x);
        for g in rs.positive_roots() {
            let p = ctx.strip_pairing(x, g);
            let hi = rat_floor(p);
            // Walls with levels in 1..=⌊p⌋ (or ⌈p⌉..=0 below) separate x
            // from the fundamental alcove.
            let levels: Vec<i64> = if hi >= 1 {
                (1..=hi).collect()
            } else {
                (hi + 1..=0).collect()
            };
            for k in levels {
                let h = crate::root_data::Hyperplane::new(*g, k);
                let r = crate::boundary::reflection_element(ctx, &h);
                let rx = r.mul(x);
                debug_assert!(ctx.length(&rx) < lx);
                if !ax.members.contains(&rx) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

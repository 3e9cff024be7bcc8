//! Exact root-system data for the rank-2 affine types Ã2, C̃2, G̃2 and the
//! degenerate sanity type Ã1.
//!
//! Roots are stored as integer pairs in the simple-root basis, points as
//! rational pairs in the simple-coroot basis. With the Cartan pairing
//! matrix `P[i][j] = (αᵢ∨, αⱼ)` every pairing `(x, γ)` used for wall levels
//! is `xᵀ P c`, which is an integer whenever `x` is a coroot-lattice vector.
//! G2 has no rational Cartesian embedding, so no Cartesian coordinates
//! appear anywhere in this crate; the renderer converts to floats at the
//! very end.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::{ivec_neg, point_from_int, point_scale, point_sub, rat, IVec, Mat2, Rat, RatPoint};

/// The supported affine types. Tag strings use a trailing `~`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineType {
    A2,
    C2,
    G2,
    A1,
}

impl AffineType {
    pub fn from_tag(tag: &str) -> Result<AffineType, Error> {
        match tag {
            "A2~" => Ok(AffineType::A2),
            "C2~" => Ok(AffineType::C2),
            "G2~" => Ok(AffineType::G2),
            "A1~" => Ok(AffineType::A1),
            other => Err(Error::UnknownTypeTag(other.into())),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            AffineType::A2 => "A2~",
            AffineType::C2 => "C2~",
            AffineType::G2 => "G2~",
            AffineType::A1 => "A1~",
        }
    }

    /// True for the three plane tilings (rank-2 underlying root system).
    pub fn is_plane(&self) -> bool {
        !matches!(self, AffineType::A1)
    }

    /// Number of Coxeter generators: 3 for the plane types, 2 for Ã1.
    /// Generator 0 is always the affine reflection.
    pub fn generator_count(&self) -> usize {
        if self.is_plane() {
            3
        } else {
            2
        }
    }

    pub const ALL: [AffineType; 4] = [AffineType::A2, AffineType::C2, AffineType::G2, AffineType::A1];
    pub const PLANE: [AffineType; 3] = [AffineType::A2, AffineType::C2, AffineType::G2];
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A root, as integer coefficients in the simple-root basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub coords: IVec,
}

impl Root {
    pub fn new(a: i64, b: i64) -> Root {
        Root { coords: [a, b] }
    }

    pub fn neg(&self) -> Root {
        Root { coords: ivec_neg(self.coords) }
    }

    pub fn is_positive(&self) -> bool {
        let [a, b] = self.coords;
        (a > 0 && b >= 0) || (a >= 0 && b > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a1+{}a2", self.coords[0], self.coords[1])
    }
}

/// An affine wall `H_{γ,k} = { x : (x, γ) = k }` with positive direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub direction: Root,
    pub level: i64,
}

impl Hyperplane {
    pub fn new(direction: Root, level: i64) -> Hyperplane {
        debug_assert!(direction.is_positive());
        Hyperplane { direction, level }
    }

    pub fn is_parallel_to(&self, other: &Hyperplane) -> bool {
        self.direction == other.direction
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.direction, self.level)
    }
}

/// Root system of the underlying finite Weyl group, with everything needed
/// for exact affine computations.
#[derive(Clone, Debug)]
pub struct RootSystem {
    affine_type: AffineType,
    /// Cartan pairing matrix `P[i][j] = (αᵢ∨, αⱼ)`.
    cartan: Mat2,
    /// Symmetrized form `S[i][j] = (αᵢ, αⱼ)` (integer for all four types).
    sym_form: Mat2,
    /// All positive roots, simple roots first.
    positive_roots: Vec<Root>,
    /// Coroot-basis coordinates of `γ∨`, aligned with `positive_roots`.
    coroots: Vec<IVec>,
    highest_root: Root,
}

impl RootSystem {
    pub fn new(affine_type: AffineType) -> RootSystem {
        let (cartan, sym_form) = match affine_type {
            AffineType::A2 => (Mat2([[2, -1], [-1, 2]]), Mat2([[2, -1], [-1, 2]])),
            AffineType::C2 => (Mat2([[2, -2], [-1, 2]]), Mat2([[2, -2], [-2, 4]])),
            AffineType::G2 => (Mat2([[2, -3], [-1, 2]]), Mat2([[2, -3], [-3, 6]])),
            AffineType::A1 => (Mat2([[2, 0], [0, 2]]), Mat2([[2, 0], [0, 2]])),
        };
        let mut rs = RootSystem {
            affine_type,
            cartan,
            sym_form,
            positive_roots: Vec::new(),
            coroots: Vec::new(),
            highest_root: Root::new(1, 0),
        };
        rs.positive_roots = rs.close_positive_roots();
        rs.coroots = rs.positive_roots.iter().map(|g| rs.compute_coroot(g)).collect();
        rs.highest_root = rs.compute_highest_root();
        rs
    }

    /// Close `{α1, α2}` under the simple reflections, keeping positives.
    fn close_positive_roots(&self) -> Vec<Root> {
        if self.affine_type == AffineType::A1 {
            return alloc::vec![Root::new(1, 0)];
        }
        let mut found = alloc::vec![Root::new(1, 0), Root::new(0, 1)];
        loop {
            let mut grew = false;
            for idx in 0..found.len() {
                let g = found[idx];
                for i in 0..2 {
                    let image = self.simple_root_reflection(i, &g);
                    let pos = if image.is_positive() { image } else { image.neg() };
                    if !found.contains(&pos) {
                        found.push(pos);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        found.sort();
        found
    }

    /// Image of `γ` under the simple reflection `sᵢ` acting on root coords.
    fn simple_root_reflection(&self, i: usize, g: &Root) -> Root {
        // s_i(γ) = γ − (γ, αᵢ∨) αᵢ, and (γ, αᵢ∨) = Σⱼ cⱼ P[i][j].
        let c = g.coords;
        let pairing = self.cartan.0[i][0] * c[0] + self.cartan.0[i][1] * c[1];
        let mut out = c;
        out[i] -= pairing;
        Root { coords: out }
    }

    fn compute_coroot(&self, g: &Root) -> IVec {
        // γ∨ = 2γ/(γ,γ); in the coroot basis the coefficient of αᵢ∨ is
        // cᵢ·(αᵢ,αᵢ)/(γ,γ), an integer for crystallographic systems.
        let c = g.coords;
        let norm = self.inner_product_roots(g, g);
        let mut out = [0i64; 2];
        for i in 0..2 {
            let num = c[i] * self.sym_form.0[i][i];
            assert_eq!(num % norm, 0, "coroot coefficient must be integral");
            out[i] = num / norm;
        }
        out
    }

    fn compute_highest_root(&self) -> Root {
        let mut best = self.positive_roots[0];
        for g in &self.positive_roots {
            if g.coords[0] >= best.coords[0] && g.coords[1] >= best.coords[1] {
                best = *g;
            }
        }
        // The componentwise maximum must dominate every positive root.
        for g in &self.positive_roots {
            assert!(best.coords[0] >= g.coords[0] && best.coords[1] >= g.coords[1]);
        }
        best
    }

    pub fn affine_type(&self) -> AffineType {
        self.affine_type
    }

    pub fn cartan(&self) -> &Mat2 {
        &self.cartan
    }

    pub fn sym_form(&self) -> &Mat2 {
        &self.sym_form
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn is_positive_root(&self, g: &Root) -> bool {
        self.positive_roots.contains(g)
    }

    pub fn is_root(&self, g: &Root) -> bool {
        self.is_positive_root(g) || self.is_positive_root(&g.neg())
    }

    pub fn highest_root(&self) -> Root {
        self.highest_root
    }

    /// Coroot-basis coordinates of `γ∨` for any root `γ` (sign carried over).
    pub fn coroot(&self, g: &Root) -> IVec {
        if let Some(idx) = self.positive_roots.iter().position(|r| r == g) {
            return self.coroots[idx];
        }
        let neg = g.neg();
        if let Some(idx) = self.positive_roots.iter().position(|r| r == &neg) {
            return ivec_neg(self.coroots[idx]);
        }
        panic!("not a root of {}: {:?}", self.affine_type, g);
    }

    /// Pairing `(x, γ)` for a rational point in simple-coroot coordinates.
    pub fn pairing(&self, x: &RatPoint, g: &Root) -> Rat {
        let c = g.coords;
        let col = [
            rat(self.cartan.0[0][0] * c[0] + self.cartan.0[0][1] * c[1]),
            rat(self.cartan.0[1][0] * c[0] + self.cartan.0[1][1] * c[1]),
        ];
        x[0] * col[0] + x[1] * col[1]
    }

    /// Pairing `(λ, γ)` for an integer coroot-lattice vector; always integral.
    pub fn pairing_int(&self, lambda: IVec, g: &Root) -> i64 {
        let c = g.coords;
        lambda[0] * (self.cartan.0[0][0] * c[0] + self.cartan.0[0][1] * c[1])
            + lambda[1] * (self.cartan.0[1][0] * c[0] + self.cartan.0[1][1] * c[1])
    }

    /// Inner product `(γ, δ)` of two roots via the symmetrized form.
    pub fn inner_product_roots(&self, g: &Root, d: &Root) -> i64 {
        let a = g.coords;
        let b = d.coords;
        let s = &self.sym_form.0;
        a[0] * s[0][0] * b[0] + a[0] * s[0][1] * b[1] + a[1] * s[1][0] * b[0] + a[1] * s[1][1] * b[1]
    }

    /// Integer Cartan pairing `(γ∨, δ) = ⟨δ, γ∨⟩` for roots `γ`, `δ`.
    pub fn coroot_pairing(&self, g: &Root, d: &Root) -> i64 {
        self.pairing_int(self.coroot(g), d)
    }

    /// The affine reflection `s_{γ;k}(x) = x − ((x,γ) − k)·γ∨` on points.
    pub fn affine_reflect(&self, g: &Root, k: i64, x: &RatPoint) -> RatPoint {
        let t = self.pairing(x, g) - rat(k);
        let coroot = point_from_int(self.coroot(g));
        point_sub(*x, point_scale(t, coroot))
    }

    /// Linear part of `s_γ` acting on points in coroot coordinates.
    pub fn point_reflection_matrix(&self, g: &Root) -> Mat2 {
        // Column j is e_j − (P c_γ)_j · d_γ.
        let c = g.coords;
        let d = self.coroot(g);
        let pc = [
            self.cartan.0[0][0] * c[0] + self.cartan.0[0][1] * c[1],
            self.cartan.0[1][0] * c[0] + self.cartan.0[1][1] * c[1],
        ];
        let col = |j: usize| -> IVec {
            let mut e = [0i64; 2];
            e[j] = 1;
            [e[0] - pc[j] * d[0], e[1] - pc[j] * d[1]]
        };
        Mat2::from_cols(col(0), col(1))
    }

    /// Linear part of `s_γ` acting on roots in simple-root coordinates.
    pub fn root_reflection_matrix(&self, g: &Root) -> Mat2 {
        // Column j is e_j − (Pᵀ d_γ)_j · c_γ.
        let c = g.coords;
        let d = self.coroot(g);
        let ptd = [
            self.cartan.0[0][0] * d[0] + self.cartan.0[1][0] * d[1],
            self.cartan.0[0][1] * d[0] + self.cartan.0[1][1] * d[1],
        ];
        let col = |j: usize| -> IVec {
            let mut e = [0i64; 2];
            e[j] = 1;
            [e[0] - ptd[j] * c[0], e[1] - ptd[j] * c[1]]
        };
        Mat2::from_cols(col(0), col(1))
    }
}

/// Full positive-root list for a plane type. Ã1 has a single root direction
/// that is handled specially and is rejected here.
pub fn positive_roots(rs: &RootSystem) -> Result<&[Root], Error> {
    if !rs.affine_type().is_plane() {
        return Err(Error::UnsupportedType(rs.affine_type()));
    }
    Ok(rs.positive_roots())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_roots(&RootSystem::new(AffineType::A2)).unwrap().len(), 3);
        assert_eq!(positive_roots(&RootSystem::new(AffineType::C2)).unwrap().len(), 4);
        assert_eq!(positive_roots(&RootSystem::new(AffineType::G2)).unwrap().len(), 6);
        assert!(matches!(
            positive_roots(&RootSystem::new(AffineType::A1)),
            Err(Error::UnsupportedType(AffineType::A1))
        ));
    }

    #[test]
    fn a2_positive_roots_are_the_expected_three() {
        let rs = RootSystem::new(AffineType::A2);
        let set = rs.positive_roots();
        assert!(set.contains(&Root::new(1, 0)));
        assert!(set.contains(&Root::new(0, 1)));
        assert!(set.contains(&Root::new(1, 1)));
    }

    #[test]
    fn highest_roots() {
        assert_eq!(RootSystem::new(AffineType::A2).highest_root(), Root::new(1, 1));
        assert_eq!(RootSystem::new(AffineType::C2).highest_root(), Root::new(2, 1));
        assert_eq!(RootSystem::new(AffineType::G2).highest_root(), Root::new(3, 2));
    }

    #[test]
    fn highest_coroots() {
        assert_eq!(RootSystem::new(AffineType::A2).coroot(&Root::new(1, 1)), [1, 1]);
        assert_eq!(RootSystem::new(AffineType::C2).coroot(&Root::new(2, 1)), [1, 1]);
        assert_eq!(RootSystem::new(AffineType::G2).coroot(&Root::new(3, 2)), [1, 2]);
    }

    #[test]
    fn pairing_at_origin_vanishes() {
        for ty in AffineType::ALL {
            let rs = RootSystem::new(ty);
            let origin = [rat(0), rat(0)];
            for g in rs.positive_roots() {
                assert_eq!(rs.pairing(&origin, g), rat(0));
            }
        }
    }

    #[test]
    fn highest_root_pairs_to_two_with_own_coroot() {
        let rs = RootSystem::new(AffineType::A2);
        let theta = rs.highest_root();
        let theta_v = point_from_int(rs.coroot(&theta));
        assert_eq!(rs.pairing(&theta_v, &theta), rat(2));
    }

    #[test]
    fn cartan_pairings_are_integers_for_all_root_pairs() {
        for ty in AffineType::PLANE {
            let rs = RootSystem::new(ty);
            for g in rs.positive_roots() {
                for d in rs.positive_roots() {
                    // (γ∨, δ) computed two ways: integer table and 2(γ,δ)/(γ,γ).
                    let lhs = rat(rs.coroot_pairing(g, d));
                    let rhs = rat(2 * rs.inner_product_roots(g, d)) / rat(rs.inner_product_roots(g, g));
                    assert_eq!(lhs, rhs, "{ty} {g} {d}");
                }
            }
        }
    }

    #[test]
    fn sym_form_is_symmetric_positive_definite() {
        for ty in AffineType::ALL {
            let rs = RootSystem::new(ty);
            let s = rs.sym_form().0;
            assert_eq!(s[0][1], s[1][0]);
            assert!(s[0][0] > 0);
            assert!(s[0][0] * s[1][1] - s[0][1] * s[1][0] > 0);
        }
    }

    #[test]
    fn affine_reflect_fixes_wall_and_is_involutive() {
        let rs = RootSystem::new(AffineType::G2);
        let g = Root::new(2, 1);
        // A point on H_{γ,3}: scale γ∨-dual direction until the pairing is 3.
        let x = [Rat::new(7, 5), Rat::new(11, 3)];
        let k = 3;
        let on_wall_t = rs.pairing(&x, &g);
        let shift = (rat(k) - on_wall_t) / rs.pairing(&point_from_int(rs.coroot(&g)), &g);
        let w = crate::exact::point_add(x, point_scale(shift, point_from_int(rs.coroot(&g))));
        assert_eq!(rs.pairing(&w, &g), rat(k));
        assert_eq!(rs.affine_reflect(&g, k, &w), w);
        // Involution on a generic point.
        let y = [Rat::new(-4, 7), Rat::new(9, 2)];
        assert_eq!(rs.affine_reflect(&g, k, &rs.affine_reflect(&g, k, &y)), y);
    }

    #[test]
    fn affine_reflect_of_origin_across_level_one_is_the_coroot() {
        let rs = RootSystem::new(AffineType::A2);
        let a1 = Root::new(1, 0);
        let image = rs.affine_reflect(&a1, 1, &[rat(0), rat(0)]);
        assert_eq!(image, [rat(1), rat(0)]);
    }

    #[test]
    fn simple_reflections_permute_positive_roots_up_to_sign() {
        for ty in AffineType::PLANE {
            let rs = RootSystem::new(ty);
            for i in 0..2 {
                for g in rs.positive_roots() {
                    let image = rs.simple_root_reflection(i, g);
                    assert!(
                        rs.is_positive_root(&image) || rs.is_positive_root(&image.neg()),
                        "{ty}: s{} of {g} left the root set",
                        i + 1
                    );
                }
            }
        }
    }
}

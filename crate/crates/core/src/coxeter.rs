//! Affine Weyl group elements and the word/length machinery.
//!
//! An element is the affine map `x ↦ Mx + λ` on simple-coroot coordinates,
//! i.e. the product of a coroot-lattice translation and a finite Weyl part.
//! Alongside the point action we carry the root action of the finite part,
//! so conjugating reflections and transporting walls stays in integers.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::exact::{ivec_add, point_from_int, point_scale, rat, rat_floor, IVec, Mat2, Rat, RatPoint};
use crate::root_data::{AffineType, Root, RootSystem};

/// A word in the generators, stored as indices into `0..generator_count`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let digit = ch.to_digit(10).ok_or(Error::InvalidGenerator {
                letter: ch as u8,
                count: 10,
            })?;
            letters.push(digit as u8);
        }
        Ok(Word(letters))
    }
}

/// An affine Weyl group element `t_λ · w₀`, acting on points as `Mx + λ`.
///
/// `root_action` is the action of the finite part `w₀` on simple-root
/// coordinates; it is determined by `linear` and kept only to avoid
/// rational matrix inversion when transporting walls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    linear: Mat2,
    root_action: Mat2,
    translation: IVec,
}

impl Element {
    pub const IDENTITY: Element = Element {
        linear: Mat2::IDENTITY,
        root_action: Mat2::IDENTITY,
        translation: [0, 0],
    };

    pub fn is_identity(&self) -> bool {
        *self == Element::IDENTITY
    }

    /// Translation part `λ` in coroot coordinates.
    pub fn translation(&self) -> IVec {
        self.translation
    }

    /// Finite-part action on points in coroot coordinates.
    pub fn linear(&self) -> &Mat2 {
        &self.linear
    }

    /// Apply to a rational point in coroot coordinates.
    pub fn apply(&self, p: &RatPoint) -> RatPoint {
        let mp = self.linear.mul_point(*p);
        [mp[0] + rat(self.translation[0]), mp[1] + rat(self.translation[1])]
    }

    /// Image of a root under the finite part.
    pub fn apply_to_root(&self, g: &Root) -> Root {
        Root { coords: self.root_action.mul_ivec(g.coords) }
    }

    pub fn mul(&self, rhs: &Element) -> Element {
        Element {
            linear: self.linear.mul(&rhs.linear),
            root_action: self.root_action.mul(&rhs.root_action),
            translation: ivec_add(self.linear.mul_ivec(rhs.translation), self.translation),
        }
    }

    pub fn inverse(&self) -> Element {
        let inv = self.linear.inverse_unimodular();
        let neg = inv.mul_ivec([-self.translation[0], -self.translation[1]]);
        Element {
            linear: inv,
            root_action: self.root_action.inverse_unimodular(),
            translation: neg,
        }
    }

    /// Assemble an element from its raw action parts. Crate-internal: the
    /// caller must supply a matching root action.
    pub(crate) fn from_parts(linear: Mat2, root_action: Mat2, translation: IVec) -> Element {
        Element { linear, root_action, translation }
    }
}

/// The selected affine type with its root system, generators, fundamental
/// alcove and Coxeter matrix. Immutable after construction.
#[derive(Clone, Debug)]
pub struct GroupContext {
    root_system: RootSystem,
    generators: Vec<Element>,
    /// Coxeter matrix orders m_ij; `None` encodes infinity (Ã1 only).
    coxeter_matrix: Vec<Vec<Option<u32>>>,
    /// Vertices of the fundamental alcove (origin first).
    alcove_vertices: Vec<RatPoint>,
    barycenter: RatPoint,
}

impl GroupContext {
    pub fn new(affine_type: AffineType) -> GroupContext {
        let root_system = RootSystem::new(affine_type);
        let n = affine_type.generator_count();

        let mut generators = Vec::with_capacity(n);
        // Generator 0 is s_{θ;1}; an affine reflection s_{γ;k} is the linear
        // reflection followed by translation by k·γ∨.
        let theta = root_system.highest_root();
        generators.push(Element {
            linear: root_system.point_reflection_matrix(&theta),
            root_action: root_system.root_reflection_matrix(&theta),
            translation: root_system.coroot(&theta),
        });
        for i in 0..n - 1 {
            let alpha = if i == 0 { Root::new(1, 0) } else { Root::new(0, 1) };
            generators.push(Element {
                linear: root_system.point_reflection_matrix(&alpha),
                root_action: root_system.root_reflection_matrix(&alpha),
                translation: [0, 0],
            });
        }

        let alcove_vertices = Self::compute_alcove_vertices(&root_system);
        let k = alcove_vertices.len() as i64;
        let mut sum = [rat(0), rat(0)];
        for v in &alcove_vertices {
            sum = crate::exact::point_add(sum, *v);
        }
        let barycenter = point_scale(Rat::new(1, k), sum);

        let mut ctx = GroupContext {
            root_system,
            generators,
            coxeter_matrix: Vec::new(),
            alcove_vertices,
            barycenter,
        };
        ctx.coxeter_matrix = ctx.compute_coxeter_matrix();
        ctx.check_barycenter();
        ctx
    }

    pub fn from_tag(tag: &str) -> Result<GroupContext, Error> {
        Ok(GroupContext::new(AffineType::from_tag(tag)?))
    }

    fn compute_alcove_vertices(rs: &RootSystem) -> Vec<RatPoint> {
        if rs.affine_type() == AffineType::A1 {
            // The alcove is the segment from 0 to the wall (x, α1) = 1.
            return alloc::vec![[rat(0), rat(0)], [Rat::new(1, 2), rat(0)]];
        }
        // Vertices: origin, and ωᵢ∨/mᵢ where θ = Σ mᵢαᵢ. The fundamental
        // coweights solve Pᵀ u = eᵢ.
        let p = rs.cartan().0;
        let det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
        // (Pᵀ)⁻¹ = adj(Pᵀ)/det with adj(Pᵀ) = [[P11, -P10],[-P01, P00]].
        let omega = |i: usize| -> RatPoint {
            let adj_cols = [
                [rat(p[1][1]), rat(-p[0][1])],
                [rat(-p[1][0]), rat(p[0][0])],
            ];
            [adj_cols[i][0] / rat(det), adj_cols[i][1] / rat(det)]
        };
        let m = rs.highest_root().coords;
        let mut vertices = alloc::vec![[rat(0), rat(0)]];
        for i in 0..2 {
            vertices.push(point_scale(Rat::new(1, m[i]), omega(i)));
        }
        vertices
    }

    fn compute_coxeter_matrix(&self) -> Vec<Vec<Option<u32>>> {
        let n = self.generator_count();
        let mut m = alloc::vec![alloc::vec![None; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let prod = self.generators[i].mul(&self.generators[j]);
                let mut acc = prod;
                let mut order = 1u32;
                while !acc.is_identity() && order <= 12 {
                    acc = acc.mul(&prod);
                    order += 1;
                }
                *cell = if acc.is_identity() { Some(order) } else { None };
            }
        }
        m
    }

    fn check_barycenter(&self) {
        for g in self.root_system.positive_roots() {
            let t = self.root_system.pairing(&self.barycenter, g);
            assert!(t > rat(0) && t < rat(1), "barycenter must lie in the open fundamental alcove");
        }
    }

    pub fn affine_type(&self) -> AffineType {
        self.root_system.affine_type()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_indices(&self) -> impl Iterator<Item = u8> {
        0..self.generator_count() as u8
    }

    pub fn generator(&self, i: u8) -> Result<&Element, Error> {
        self.generators.get(i as usize).ok_or(Error::InvalidGenerator {
            letter: i,
            count: self.generator_count(),
        })
    }

    /// Coxeter matrix entry m_ij; `None` is infinite order (Ã1 only).
    pub fn coxeter_order(&self, i: u8, j: u8) -> Option<u32> {
        self.coxeter_matrix[i as usize][j as usize]
    }

    pub fn alcove_vertices(&self) -> &[RatPoint] {
        &self.alcove_vertices
    }

    /// Barycenter of the fundamental alcove.
    pub fn barycenter(&self) -> &RatPoint {
        &self.barycenter
    }

    /// Barycenter of the alcove of `w`.
    pub fn alcove_barycenter(&self, w: &Element) -> RatPoint {
        w.apply(&self.barycenter)
    }

    /// Evaluate a word to an element.
    pub fn from_word(&self, word: &Word) -> Result<Element, Error> {
        let mut acc = Element::IDENTITY;
        for &letter in &word.0 {
            acc = acc.mul(self.generator(letter)?);
        }
        Ok(acc)
    }

    pub fn mul_simple_right(&self, w: &Element, i: u8) -> Element {
        w.mul(self.generators.get(i as usize).expect("generator index"))
    }

    pub fn mul_simple_left(&self, w: &Element, i: u8) -> Element {
        self.generators.get(i as usize).expect("generator index").mul(w)
    }

    /// Length as the number of walls `H_{γ,k}` separating the fundamental
    /// barycenter from `w`'s barycenter: with `(b₀,γ) ∈ (0,1)` this is
    /// `Σ_{γ>0} |⌊(w·b₀, γ)⌋|`.
    pub fn length(&self, w: &Element) -> usize {
        let b = self.alcove_barycenter(w);
        let mut total = 0i64;
        for g in self.root_system.positive_roots() {
            total += rat_floor(self.root_system.pairing(&b, g)).abs();
        }
        total as usize
    }

    pub fn right_descents(&self, w: &Element) -> BTreeSet<u8> {
        let len = self.length(w);
        self.generator_indices()
            .filter(|&i| self.length(&self.mul_simple_right(w, i)) < len)
            .collect()
    }

    pub fn left_descents(&self, w: &Element) -> BTreeSet<u8> {
        let len = self.length(w);
        self.generator_indices()
            .filter(|&i| self.length(&self.mul_simple_left(w, i)) < len)
            .collect()
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn reduced_word(&self, w: &Element) -> Word {
        self.reduced_word_by(w, false)
    }

    /// Reduced word with the descent tie broken upward instead; used to get
    /// a second reduced word for braid-invariance checks.
    pub fn reduced_word_max(&self, w: &Element) -> Word {
        self.reduced_word_by(w, true)
    }

    fn reduced_word_by(&self, w: &Element, take_max: bool) -> Word {
        let mut letters = Vec::new();
        let mut cur = *w;
        let mut len = self.length(&cur);
        while len > 0 {
            let descents = self.right_descents(&cur);
            let i = if take_max {
                *descents.iter().next_back().expect("nonempty descent set")
            } else {
                *descents.iter().next().expect("nonempty descent set")
            };
            letters.push(i);
            cur = self.mul_simple_right(&cur, i);
            len -= 1;
        }
        letters.reverse();
        Word(letters)
    }

    /// Serialize an element as its canonical reduced word digits.
    pub fn word_string(&self, w: &Element) -> String {
        use alloc::string::ToString;
        self.reduced_word(w).to_string()
    }

    /// All elements of the (finite) standard parabolic subgroup W_J.
    pub fn parabolic_elements(&self, j: &BTreeSet<u8>) -> Result<Vec<Element>, Error> {
        if j.len() >= self.generator_count() {
            return Err(Error::Precondition("parabolic subset must be proper (W itself is infinite)"));
        }
        for &i in j {
            if i as usize >= self.generator_count() {
                return Err(Error::InvalidGenerator { letter: i, count: self.generator_count() });
            }
        }
        let mut seen = BTreeSet::new();
        seen.insert(Element::IDENTITY);
        let mut frontier = alloc::vec![Element::IDENTITY];
        while let Some(w) = frontier.pop() {
            for &i in j {
                let next = self.mul_simple_right(&w, i);
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// All elements of length ≤ `max_len`, grouped by length shell.
    pub fn enumerate_by_length(&self, max_len: usize) -> Vec<Vec<Element>> {
        let mut shells: Vec<Vec<Element>> = alloc::vec![alloc::vec![Element::IDENTITY]];
        let mut seen: BTreeSet<Element> = BTreeSet::new();
        seen.insert(Element::IDENTITY);
        for len in 1..=max_len {
            let mut shell = BTreeSet::new();
            for w in &shells[len - 1] {
                for i in self.generator_indices() {
                    let next = self.mul_simple_right(w, i);
                    if !seen.contains(&next) {
                        debug_assert_eq!(self.length(&next), len);
                        shell.insert(next);
                    }
                }
            }
            for w in &shell {
                seen.insert(*w);
            }
            shells.push(shell.into_iter().collect());
        }
        shells
    }

    /// Flattened enumeration of all elements with length ≤ `max_len`.
    pub fn elements_up_to(&self, max_len: usize) -> Vec<Element> {
        self.enumerate_by_length(max_len).into_iter().flatten().collect()
    }

    /// True iff every finite generator increases length on the left, i.e.
    /// the alcove lies in the fundamental chamber of W₀.
    pub fn is_fundamental_chamber(&self, w: &Element) -> bool {
        let len = self.length(w);
        (1..self.generator_count() as u8).all(|i| self.length(&self.mul_simple_left(w, i)) > len)
    }

    /// Pairing of `w`'s barycenter with a positive root; the wall levels in
    /// direction `γ` bracketing `w`'s strip are `⌊t⌋` and `⌊t⌋+1`.
    pub fn strip_pairing(&self, w: &Element, g: &Root) -> Rat {
        self.root_system.pairing(&self.alcove_barycenter(w), g)
    }

    /// Pairings of all vertices of `w`'s alcove with `γ`.
    pub fn vertex_pairings(&self, w: &Element, g: &Root) -> Vec<Rat> {
        self.alcove_vertices
            .iter()
            .map(|v| self.root_system.pairing(&w.apply(v), g))
            .collect()
    }

    /// Shorthand for t_λ with λ an integer coroot vector.
    pub fn translation_element(&self, lambda: IVec) -> Element {
        Element {
            linear: Mat2::IDENTITY,
            root_action: Mat2::IDENTITY,
            translation: lambda,
        }
    }

    #[allow(unused)]
    pub(crate) fn coroot_point(&self, g: &Root) -> RatPoint {
        point_from_int(self.root_system.coroot(g))
    }
}

//! Small exact-arithmetic building blocks: rationals, integer 2-vectors and
//! 2×2 integer matrices.

use num_rational::Ratio;

/// Exact rational scalar. Coordinates stay tiny at desk scale, so `i64`
/// numerators and denominators have plenty of headroom.
pub type Rat = Ratio<i64>;

/// Integer coordinate pair. Roots use it in the simple-root basis,
/// translations and coroots in the simple-coroot basis.
pub type IVec = [i64; 2];

/// Rational point in simple-coroot coordinates.
pub type RatPoint = [Rat; 2];

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

pub fn point_from_int(v: IVec) -> RatPoint {
    [rat(v[0]), rat(v[1])]
}

pub fn point_add(a: RatPoint, b: RatPoint) -> RatPoint {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn point_sub(a: RatPoint, b: RatPoint) -> RatPoint {
    [a[0] - b[0], a[1] - b[1]]
}

pub fn point_scale(s: Rat, a: RatPoint) -> RatPoint {
    [s * a[0], s * a[1]]
}

/// Floor of a rational as an integer.
pub fn rat_floor(r: Rat) -> i64 {
    r.floor().to_integer()
}

/// Row-major 2×2 integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    /// Matrix with the given columns (images of the basis vectors).
    pub fn from_cols(c0: IVec, c1: IVec) -> Mat2 {
        Mat2([[c0[0], c1[0]], [c0[1], c1[1]]])
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(out)
    }

    pub fn mul_ivec(&self, v: IVec) -> IVec {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn mul_point(&self, p: RatPoint) -> RatPoint {
        [
            rat(self.0[0][0]) * p[0] + rat(self.0[0][1]) * p[1],
            rat(self.0[1][0]) * p[0] + rat(self.0[1][1]) * p[1],
        ]
    }

    pub fn det(&self) -> i64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    /// Inverse of a unimodular matrix (det ±1). Panics otherwise; finite
    /// Weyl parts always have det ±1.
    pub fn inverse_unimodular(&self) -> Mat2 {
        let d = self.det();
        assert!(d == 1 || d == -1, "matrix is not unimodular");
        let adj = [
            [self.0[1][1], -self.0[0][1]],
            [-self.0[1][0], self.0[0][0]],
        ];
        Mat2([
            [adj[0][0] * d, adj[0][1] * d],
            [adj[1][0] * d, adj[1][1] * d],
        ])
    }
}

pub fn ivec_add(a: IVec, b: IVec) -> IVec {
    [a[0] + b[0], a[1] + b[1]]
}

pub fn ivec_neg(a: IVec) -> IVec {
    [-a[0], -a[1]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_inverse_round_trips() {
        let m = Mat2([[0, -1], [-1, 0]]);
        assert_eq!(m.mul(&m.inverse_unimodular()), Mat2::IDENTITY);
        let n = Mat2([[-1, 1], [0, 1]]);
        assert_eq!(n.inverse_unimodular().mul(&n), Mat2::IDENTITY);
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(rat_floor(Rat::new(-5, 3)), -2);
        assert_eq!(rat_floor(Rat::new(5, 3)), 1);
        assert_eq!(rat_floor(rat(-2)), -2);
    }
}

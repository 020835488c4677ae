//! Ten-moment family: `H_{p,q}` with `q >= 1`, `p + q <= 4`.

use super::scalar::Scalar;
use super::Family;

/// The moments `H_{p,q}(n; m, a, b)` for all `q >= 1`, `p + q <= 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct MomentVector10<T = i128> {
    pub h01: T,
    pub h11: T,
    pub h21: T,
    pub h31: T,
    pub h02: T,
    pub h12: T,
    pub h22: T,
    pub h03: T,
    pub h13: T,
    pub h04: T,
}

impl MomentVector10<i128> {
    pub fn get(&self, p: u32, q: u32) -> Option<i128> {
        Some(match (p, q) {
            (0, 1) => self.h01,
            (1, 1) => self.h11,
            (2, 1) => self.h21,
            (3, 1) => self.h31,
            (0, 2) => self.h02,
            (1, 2) => self.h12,
            (2, 2) => self.h22,
            (0, 3) => self.h03,
            (1, 3) => self.h13,
            (0, 4) => self.h04,
            _ => return None,
        })
    }

    pub fn to_array(&self) -> [i128; 10] {
        [
            self.h01, self.h11, self.h21, self.h31, self.h02, self.h12, self.h22, self.h03,
            self.h13, self.h04,
        ]
    }
}

impl<T: Scalar> MomentVector10<T> {
    pub(crate) fn map<U>(self, mut f: impl FnMut(T) -> U) -> MomentVector10<U> {
        MomentVector10 {
            h01: f(self.h01),
            h11: f(self.h11),
            h21: f(self.h21),
            h31: f(self.h31),
            h02: f(self.h02),
            h12: f(self.h12),
            h22: f(self.h22),
            h03: f(self.h03),
            h13: f(self.h13),
            h04: f(self.h04),
        }
    }
}

impl<T: Scalar> Family<T> for MomentVector10<T> {
    const STATES: &'static [(u32, u32)] = &[
        (0, 1),
        (1, 1),
        (2, 1),
        (3, 1),
        (0, 2),
        (1, 2),
        (2, 2),
        (0, 3),
        (1, 3),
        (0, 4),
    ];
    const DEGREE: u32 = 4;
    // 64 * V^5 < 2^127 keeps every intermediate inside i128.
    const FAST_LIMIT: i128 = 1 << 24;

    #[inline]
    fn constant(c: T, p: &[T; 5]) -> Self {
        let c2 = c * c;
        let c3 = c2 * c;
        MomentVector10 {
            h01: c * p[0],
            h11: c * p[1],
            h21: c * p[2],
            h31: c * p[3],
            h02: c2 * p[0],
            h12: c2 * p[1],
            h22: c2 * p[2],
            h03: c3 * p[0],
            h13: c3 * p[1],
            h04: c3 * c * p[0],
        }
    }

    #[inline]
    fn zero() -> Self {
        let z = T::ZERO;
        MomentVector10 {
            h01: z,
            h11: z,
            h21: z,
            h31: z,
            h02: z,
            h12: z,
            h22: z,
            h03: z,
            h13: z,
            h04: z,
        }
    }

    #[inline]
    fn affine(self, a: T, b: T, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let four = T::lift(4);
        let six = T::lift(6);
        let twelve = T::lift(12);
        let aa = a * a;
        let ab = a * b;
        let bb = b * b;
        let aaa = aa * a;
        let bbb = bb * b;
        MomentVector10 {
            h01: s.h01 + a * p[1] + b * p[0],
            h11: s.h11 + a * p[2] + b * p[1],
            h21: s.h21 + a * p[3] + b * p[2],
            h31: s.h31 + a * p[4] + b * p[3],
            h02: s.h02 + two * (a * s.h11 + b * s.h01) + aa * p[2] + two * ab * p[1] + bb * p[0],
            h12: s.h12 + two * (a * s.h21 + b * s.h11) + aa * p[3] + two * ab * p[2] + bb * p[1],
            h22: s.h22 + two * (a * s.h31 + b * s.h21) + aa * p[4] + two * ab * p[3] + bb * p[2],
            h03: s.h03
                + three * (a * s.h12 + b * s.h02 + aa * s.h21 + bb * s.h01)
                + six * ab * s.h11
                + aaa * p[3]
                + three * (aa * b * p[2] + a * bb * p[1])
                + bbb * p[0],
            h13: s.h13
                + three * (a * s.h22 + b * s.h12 + aa * s.h31 + bb * s.h11)
                + six * ab * s.h21
                + aaa * p[4]
                + three * (aa * b * p[3] + a * bb * p[2])
                + bbb * p[1],
            h04: s.h04
                + four * (a * s.h13 + b * s.h03)
                + six * (aa * s.h22 + bb * s.h02)
                + twelve * ab * s.h12
                + four * (aaa * s.h31 + bbb * s.h01)
                + twelve * (aa * b * s.h21 + a * bb * s.h11)
                + aa * aa * p[4]
                + four * (aaa * b * p[3] + a * bbb * p[1])
                + six * aa * bb * p[2]
                + bb * bb * p[0],
        }
    }

    #[inline]
    fn affine_slope_only(self, a: T, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let four = T::lift(4);
        let aa = a * a;
        let aaa = aa * a;
        MomentVector10 {
            h01: s.h01 + a * p[1],
            h11: s.h11 + a * p[2],
            h21: s.h21 + a * p[3],
            h31: s.h31 + a * p[4],
            h02: s.h02 + two * a * s.h11 + aa * p[2],
            h12: s.h12 + two * a * s.h21 + aa * p[3],
            h22: s.h22 + two * a * s.h31 + aa * p[4],
            h03: s.h03 + three * (a * s.h12 + aa * s.h21) + aaa * p[3],
            h13: s.h13 + three * (a * s.h22 + aa * s.h31) + aaa * p[4],
            h04: s.h04
                + four * (a * s.h13 + aaa * s.h31)
                + T::lift(6) * aa * s.h22
                + aa * aa * p[4],
        }
    }

    #[inline]
    fn affine_unit_slope(self, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let four = T::lift(4);
        MomentVector10 {
            h01: s.h01 + p[1],
            h11: s.h11 + p[2],
            h21: s.h21 + p[3],
            h31: s.h31 + p[4],
            h02: s.h02 + two * s.h11 + p[2],
            h12: s.h12 + two * s.h21 + p[3],
            h22: s.h22 + two * s.h31 + p[4],
            h03: s.h03 + three * (s.h12 + s.h21) + p[3],
            h13: s.h13 + three * (s.h22 + s.h31) + p[4],
            h04: s.h04 + four * (s.h13 + s.h31) + T::lift(6) * s.h22 + p[4],
        }
    }

    #[inline]
    fn reciprocal(self, n: T, y: T, p: &[T; 5], q: &[T; 5]) -> Self {
        let g = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let four = T::lift(4);
        let six = T::lift(6);
        let yy = y * y;
        let yyy = yy * y;
        MomentVector10 {
            h01: n * y - q[0] - g.h01,
            h11: (two * p[1] * y - g.h01 - g.h02).div_exact(2),
            h21: (six * p[2] * y - g.h01 - three * g.h02 - two * g.h03).div_exact(6),
            h31: (four * p[3] * y - g.h02 - two * g.h03 - g.h04).div_exact(4),
            h02: n * yy - q[0] - g.h01 - two * (q[1] + g.h11),
            h12: (two * p[1] * yy - g.h01 - g.h02 - two * (g.h11 + g.h12)).div_exact(2),
            h22: (six * p[2] * yy - g.h01 - three * g.h02 - two * g.h03 - two * g.h11
                - six * g.h12
                - four * g.h13)
                .div_exact(6),
            h03: n * yyy - q[0] - g.h01 - three * (q[1] + g.h11 + q[2] + g.h21),
            h13: (two * p[1] * yyy - g.h01 - g.h02 - three * (g.h11 + g.h12 + g.h21 + g.h22))
                .div_exact(2),
            h04: n * yy * yy - q[0] - g.h01 - four * (q[1] + g.h11 + q[3] + g.h31)
                - six * (q[2] + g.h21),
        }
    }
}

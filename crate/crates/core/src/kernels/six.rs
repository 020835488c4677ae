//! Six-moment family: `H_{p,q}` with `q >= 1`, `p + q <= 3`.

use super::scalar::Scalar;
use super::Family;

/// The moments `H_{p,q}(n; m, a, b) = sum_{x<n} x^p floor((a x + b)/m)^q`
/// for `(p,q)` in `{(0,1),(1,1),(2,1),(0,2),(1,2),(0,3)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct MomentVector6<T = i128> {
    pub h01: T,
    pub h11: T,
    pub h21: T,
    pub h02: T,
    pub h12: T,
    pub h03: T,
}

impl MomentVector6<i128> {
    /// Looks up `H_{p,q}`; `None` outside the family.
    pub fn get(&self, p: u32, q: u32) -> Option<i128> {
        Some(match (p, q) {
            (0, 1) => self.h01,
            (1, 1) => self.h11,
            (2, 1) => self.h21,
            (0, 2) => self.h02,
            (1, 2) => self.h12,
            (0, 3) => self.h03,
            _ => return None,
        })
    }

    pub fn to_array(&self) -> [i128; 6] {
        [self.h01, self.h11, self.h21, self.h02, self.h12, self.h03]
    }
}

impl<T: Scalar> MomentVector6<T> {
    pub(crate) fn map<U>(self, mut f: impl FnMut(T) -> U) -> MomentVector6<U> {
        MomentVector6 {
            h01: f(self.h01),
            h11: f(self.h11),
            h21: f(self.h21),
            h02: f(self.h02),
            h12: f(self.h12),
            h03: f(self.h03),
        }
    }
}

impl<T: Scalar> Family<T> for MomentVector6<T> {
    const STATES: &'static [(u32, u32)] = &[(0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (0, 3)];
    const DEGREE: u32 = 3;
    // 64 * V^4 < 2^127 keeps every intermediate inside i128.
    const FAST_LIMIT: i128 = 1 << 30;

    #[inline]
    fn constant(c: T, p: &[T; 5]) -> Self {
        let c2 = c * c;
        MomentVector6 {
            h01: c * p[0],
            h11: c * p[1],
            h21: c * p[2],
            h02: c2 * p[0],
            h12: c2 * p[1],
            h03: c2 * c * p[0],
        }
    }

    #[inline]
    fn zero() -> Self {
        let z = T::ZERO;
        MomentVector6 { h01: z, h11: z, h21: z, h02: z, h12: z, h03: z }
    }

    #[inline]
    fn affine(self, a: T, b: T, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let aa = a * a;
        let ab = a * b;
        let bb = b * b;
        MomentVector6 {
            h01: s.h01 + a * p[1] + b * p[0],
            h11: s.h11 + a * p[2] + b * p[1],
            h21: s.h21 + a * p[3] + b * p[2],
            h02: s.h02 + two * (a * s.h11 + b * s.h01) + aa * p[2] + two * ab * p[1] + bb * p[0],
            h12: s.h12 + two * (a * s.h21 + b * s.h11) + aa * p[3] + two * ab * p[2] + bb * p[1],
            h03: s.h03
                + three * (a * s.h12 + b * s.h02 + aa * s.h21 + bb * s.h01)
                + T::lift(6) * ab * s.h11
                + aa * a * p[3]
                + three * (aa * b * p[2] + a * bb * p[1])
                + bb * b * p[0],
        }
    }

    #[inline]
    fn affine_slope_only(self, a: T, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let aa = a * a;
        MomentVector6 {
            h01: s.h01 + a * p[1],
            h11: s.h11 + a * p[2],
            h21: s.h21 + a * p[3],
            h02: s.h02 + two * a * s.h11 + aa * p[2],
            h12: s.h12 + two * a * s.h21 + aa * p[3],
            h03: s.h03 + three * (a * s.h12 + aa * s.h21) + aa * a * p[3],
        }
    }

    #[inline]
    fn affine_unit_slope(self, p: &[T; 5]) -> Self {
        let s = self;
        let two = T::lift(2);
        let three = T::lift(3);
        MomentVector6 {
            h01: s.h01 + p[1],
            h11: s.h11 + p[2],
            h21: s.h21 + p[3],
            h02: s.h02 + two * s.h11 + p[2],
            h12: s.h12 + two * s.h21 + p[3],
            h03: s.h03 + three * (s.h12 + s.h21) + p[3],
        }
    }

    #[inline]
    fn reciprocal(self, n: T, y: T, p: &[T; 5], q: &[T; 5]) -> Self {
        let g = self;
        let two = T::lift(2);
        let three = T::lift(3);
        let yy = y * y;
        MomentVector6 {
            h01: n * y - q[0] - g.h01,
            h11: (two * p[1] * y - g.h01 - g.h02).div_exact(2),
            h21: (T::lift(6) * p[2] * y - g.h01 - three * g.h02 - two * g.h03).div_exact(6),
            h02: n * yy - q[0] - g.h01 - two * (q[1] + g.h11),
            h12: (two * p[1] * yy - g.h01 - g.h02 - two * (g.h11 + g.h12)).div_exact(2),
            h03: n * yy * y - q[0] - g.h01 - three * (q[1] + g.h11 + q[2] + g.h21),
        }
    }
}

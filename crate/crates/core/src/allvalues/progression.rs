//! Quadratic updates along arithmetic progressions, batched per step through
//! stride-`m` difference buffers over a sliding window of positions.

use std::ops::Range;

/// `G[base + step * l] += c0 + c1 l + c2 l^2` for `first <= l <= last`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProgressionUpdate {
    pub base: i64,
    pub step: i64,
    pub first: i64,
    pub last: i64,
    pub coeffs: [i128; 3],
}

impl ProgressionUpdate {
    #[inline]
    fn eval(&self, l: i64) -> i128 {
        let l = l as i128;
        self.coeffs[0] + l * (self.coeffs[1] + l * self.coeffs[2])
    }

    /// Applies the update entry by entry, ignoring positions outside `target`.
    pub fn apply_direct(&self, target: &mut [i128]) {
        for l in self.first..=self.last {
            let pos = self.base + self.step * l;
            if (0..target.len() as i64).contains(&pos) {
                target[pos as usize] += self.eval(l);
            }
        }
    }
}

/// Impulses that start a constant, a linear and a quadratic polynomial at
/// index `l`: `[e0, e1, e1', e2, e2', e2'']`, where primed entries belong
/// one and two steps further on.
#[inline(always)]
pub(crate) fn leading_differences(c: &[[i128; 3]; 3], l: i128) -> [i128; 6] {
    let w0 = c[1][0] + c[1][1] * l;
    let v0 = c[2][0] + l * (c[2][1] + l * c[2][2]);
    let dv = c[2][1] + c[2][2] * (2 * l + 1);
    [c[0][0], w0, c[1][1] - w0, v0, dv - 2 * v0, v0 - dv + 2 * c[2][2]]
}

/// Difference buffers of orders 1, 2 and 3 for three target arrays,
/// covering a window of positions.
///
/// Updates pushed between two flushes must share one step `m`. A flush turns
/// the impulses into values with chained prefix sums along each residue
/// class mod `m`; the running sums live in a caller-owned carry so a
/// progression keeps contributing in later windows.
#[derive(Clone, Debug)]
pub struct ProgressionBuffers {
    lo: i64,
    /// Length of the current window, at most `diff.len()`.
    active: usize,
    diff: Vec<[i128; 3]>,
    pending: bool,
}

/// Per-residue running sums of one step, `step` entries long.
pub type Carry = [[i128; 6]];

impl ProgressionBuffers {
    /// An empty buffer for windows of up to `capacity` positions, covering
    /// `0..capacity` to begin with.
    pub fn new(capacity: usize) -> Self {
        ProgressionBuffers { lo: 0, active: capacity, diff: vec![[0; 3]; capacity], pending: false }
    }

    pub fn capacity(&self) -> usize {
        self.diff.len()
    }

    pub fn window(&self) -> Range<i64> {
        self.lo..self.lo + self.active as i64
    }

    /// True when no update is pending and every buffer entry is zero.
    pub fn is_clear(&self) -> bool {
        !self.pending && self.diff.iter().all(|d| *d == [0; 3])
    }

    /// Moves the window to `window`, no longer than the capacity. The buffer
    /// must be clear.
    pub fn move_to(&mut self, window: Range<i64>) {
        debug_assert!(self.is_clear());
        assert!(window.start <= window.end && (window.end - window.start) as usize <= self.diff.len());
        self.lo = window.start;
        self.active = (window.end - window.start) as usize;
    }

    /// Queues one update per target; all three share base, step and range,
    /// and update `i` has degree at most `i`. Only impulses inside the
    /// window are stored.
    pub fn push(&mut self, updates: [ProgressionUpdate; 3]) {
        let [u0, u1, u2] = updates;
        let step = u0.step;
        debug_assert!(step > 0);
        debug_assert!([u1, u2].iter().all(|u| (u.base, u.step, u.first, u.last) == (u0.base, step, u0.first, u0.last)));
        debug_assert!(u0.coeffs[1..] == [0, 0] && u1.coeffs[2] == 0);
        // Positions below zero are dropped.
        let first = u0.first.max(-(u0.base.div_euclid(step)));
        if first > u0.last {
            return;
        }
        let c = [u0.coeffs, u1.coeffs, u2.coeffs];
        let start = leading_differences(&c, first as i128);
        self.push_impulses(u0.base + step * first, step, start, 1);
        let end = leading_differences(&c, u0.last as i128 + 1);
        self.push_impulses(u0.base + step * (u0.last + 1), step, end, -1);
    }

    /// Adds impulses from [`leading_differences`] at `pos`, `pos + step` and
    /// `pos + 2 step`, keeping those inside the window.
    #[inline(always)]
    pub(crate) fn push_impulses(&mut self, pos: i64, step: i64, e: [i128; 6], sign: i128) {
        self.pending = true;
        let len = self.active as i64;
        let idx = pos - self.lo;
        if (0..len).contains(&idx) {
            let d = &mut self.diff[idx as usize];
            d[0] += sign * e[0];
            d[1] += sign * e[1];
            d[2] += sign * e[3];
        }
        let idx = idx + step;
        if (0..len).contains(&idx) {
            let d = &mut self.diff[idx as usize];
            d[1] += sign * e[2];
            d[2] += sign * e[4];
        }
        let idx = idx + step;
        if (0..len).contains(&idx) {
            self.diff[idx as usize][2] += sign * e[5];
        }
    }

    /// Adds the pending batch of step `carry.len()` into `targets`, slices
    /// covering the window, then clears the buffer. Runs even with nothing
    /// pending, so progressions from earlier windows keep contributing.
    pub fn flush(&mut self, carry: &mut Carry, targets: [&mut [i128]; 3]) {
        let m = carry.len();
        let [g0, g1, g2] = targets;
        let n = self.active;
        assert!(g0.len() == n && g1.len() == n && g2.len() == n);
        let mut r = (self.lo as usize) % m;
        for pos in 0..n {
            let d = std::mem::take(&mut self.diff[pos]);
            let a = &mut carry[r];
            a[0] += d[0];
            a[1] += d[1];
            a[2] += a[1];
            a[3] += d[2];
            a[4] += a[3];
            a[5] += a[4];
            g0[pos] += a[0];
            g1[pos] += a[2];
            g2[pos] += a[5];
            r += 1;
            if r == m {
                r = 0;
            }
        }
        self.pending = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn update(base: i64, step: i64, first: i64, last: i64, coeffs: [i128; 3]) -> ProgressionUpdate {
        ProgressionUpdate { base, step, first, last, coeffs }
    }

    /// Replays `updates` window by window, as the table build does.
    fn windowed(len: usize, window: usize, step: i64, updates: &[[ProgressionUpdate; 3]]) -> [Vec<i128>; 3] {
        let mut out = [vec![0i128; len], vec![0i128; len], vec![0i128; len]];
        let mut buf = ProgressionBuffers::new(window);
        let mut carry = vec![[0i128; 6]; step as usize];
        for lo in (0..len).step_by(window) {
            let hi = (lo + window).min(len);
            buf.move_to(lo as i64..hi as i64);
            for &u in updates {
                buf.push(u);
            }
            let [g0, g1, g2] = &mut out;
            buf.flush(&mut carry, [&mut g0[lo..hi], &mut g1[lo..hi], &mut g2[lo..hi]]);
            assert!(buf.is_clear());
        }
        out
    }

    #[test]
    fn single_quadratic() {
        let u = update(2, 3, 1, 100, [4, -2, 7]);
        let mut want = vec![0i128; 40];
        u.apply_direct(&mut want);
        let zero = update(2, 3, 1, 100, [0; 3]);
        let [g0, g1, g2] = windowed(40, 7, 3, &[[zero, zero, u]]);
        assert_eq!(g2, want);
        assert!(g0.iter().chain(&g1).all(|&v| v == 0));
    }

    proptest! {
        #[test]
        fn buffers_match_direct_loop(
            len in 1usize..120,
            window in 1usize..50,
            step in 1i64..12,
            raw in prop::collection::vec((-20i64..80, -5i64..30, 0i64..30, -50i128..50, -50i128..50, -50i128..50), 1..12),
        ) {
            let mut want = [vec![0i128; len], vec![0i128; len], vec![0i128; len]];
            let mut updates = Vec::new();
            for (base, first, extra, c0, c1, c2) in raw {
                let last = first + extra - 3;
                let us = [
                    update(base, step, first, last, [c0, 0, 0]),
                    update(base, step, first, last, [c0, c1, 0]),
                    update(base, step, first, last, [c0, c1, c2]),
                ];
                for (u, w) in us.iter().zip(want.iter_mut()) {
                    u.apply_direct(w);
                }
                updates.push(us);
            }
            prop_assert_eq!(windowed(len, window, step, &updates), want);
        }
    }
}

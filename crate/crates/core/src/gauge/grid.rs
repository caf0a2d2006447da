use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A periodic 4D box with `dims[a]` nodes along axis `a` and spacing `h`.
/// Node `x` has coordinates `x_a = i_a h`; axis 3 varies fastest.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Real + Serialize + for<'a> Deserialize<'a>")]
pub struct Grid4<T: Real> {
    pub dims: [usize; 4],
    pub h: T,
}

impl<T: Real> Grid4<T> {
    pub fn new(dims: [usize; 4], h: T) -> Result<Self> {
        if let Some(&d) = dims.iter().find(|&&d| d < 3) {
            return Err(Error::GridTooSmall(d));
        }
        if h <= T::zero() || !h.is_finite() {
            return Err(Error::Format(format!("grid spacing must be positive, got {}", h.to_f64_lossy())));
        }
        Ok(Self { dims, h })
    }

    /// `n⁴` nodes covering one period `[0, 2π)` per axis.
    pub fn periodic_box(n: usize) -> Result<Self> {
        Self::new([n; 4], T::two_pi() / T::lit(n as f64))
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: [usize; 4]) -> usize {
        ((i[0] * self.dims[1] + i[1]) * self.dims[2] + i[2]) * self.dims[3] + i[3]
    }

    pub fn multi_index(&self, mut idx: usize) -> [usize; 4] {
        let mut out = [0; 4];
        for a in (0..4).rev() {
            out[a] = idx % self.dims[a];
            idx /= self.dims[a];
        }
        out
    }

    pub fn coords(&self, idx: usize) -> [T; 4] {
        self.multi_index(idx).map(|i| T::lit(i as f64) * self.h)
    }

    /// Periodic neighbour of `idx` displaced by `step` along `axis`.
    pub fn shift(&self, idx: usize, axis: usize, step: isize) -> usize {
        let mut i = self.multi_index(idx);
        let d = self.dims[axis] as isize;
        i[axis] = ((i[axis] as isize + step).rem_euclid(d)) as usize;
        self.index(i)
    }

    pub fn ensure_same(&self, other: &Self) -> Result<()> {
        if self.dims == other.dims && self.h == other.h {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }
}

/// Index of the unordered pair `a < b` among the six planes.
pub fn pair_index(a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < 4);
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    }
}

pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

//! Upper bound on the largest achievable minimal distance of `n` points in
//! the unit square.
//!
//! The bound is the minimum of two closed-form estimates. The first charges
//! every point a disc and accounts for the area lost along the boundary and
//! between discs; the second is a hexagonal-packing estimate. Both are
//! `O(1/sqrt(n))`, so a grid whose cells have this side length has `O(n)`
//! cells.

use std::f64::consts::PI;

use crate::{Error, Result};

/// The packing bound for one `n`, with both of its components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PackingBound {
    pub n: usize,
    /// Disc-area estimate. `None` where its denominator is not positive.
    pub u1: Option<f64>,
    /// Hexagonal estimate.
    pub u2: f64,
    pub delta_bar: f64,
}

impl PackingBound {
    /// Number of cells per side of a unit-square grid with cell side `delta_bar`.
    pub fn grid_side(&self) -> usize {
        (1.0 / self.delta_bar).ceil().max(1.0) as usize
    }
}

/// Piecewise correction count used by the disc-area estimate.
///
/// `n = 2` falls into the general branch and yields `-2`.
pub fn c_n(n: usize) -> Result<i64> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    let n = n as i64;
    Ok(match n {
        3..=6 => n - 2,
        7..=9 => n - 1,
        _ => 3 * (n / 2) - 5 + n % 2,
    })
}

pub fn delta_bar(n: usize) -> Result<PackingBound> {
    let c = c_n(n)? as f64;
    let nf = n as f64;
    let sqrt3 = 3f64.sqrt();

    let floor_sqrt = integer_sqrt(n) as f64;
    let radicand = nf * PI + c * (sqrt3 - PI / 2.0) + (4.0 * floor_sqrt - 2.0) * (2.0 - PI / 2.0);
    let denominator = radicand.sqrt() - 2.0;
    let u1 = (denominator > 0.0)
        .then(|| 2.0 / denominator)
        .filter(|u| u.is_finite() && *u > 0.0);

    let m = nf - 1.0;
    let u2 = (1.0 + (1.0 + m * 2.0 / sqrt3).sqrt()) / m;

    let delta_bar = match u1 {
        Some(u1) => u1.min(u2),
        None => u2,
    };
    Ok(PackingBound {
        n,
        u1,
        u2,
        delta_bar,
    })
}

fn integer_sqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

//! Exact lattice-width computation with a provably complete bounded search.
//!
//! For `T_{a,b,n}` and `u = (r,s,t)` the u-width is
//! `max{0, r, s, ar+bs+nt} - min{0, r, s, ar+bs+nt}`; both 0 and each of
//! `r`, `s`, `ar+bs+nt` belong to the evaluated set, so any direction of
//! width `<= W0` satisfies `|r| <= W0`, `|s| <= W0`, `|ar+bs+nt| <= W0`.
//! With `W0 = 2*ceil(n^(1/3))` (the pigeonhole bound, which always holds)
//! the candidate grid below therefore contains every direction achieving
//! the minimum, which makes the search complete.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cadd, cmul};
use crate::geom::{Direction, LatticePoint, LatticeTetrahedron, StandardTet};
use crate::normalize::to_standard;
use crate::pointcount::census;

/// Smallest `m` with `m^3 >= n`.
pub fn ceil_cbrt(n: i64) -> i64 {
    let mut m = 1;
    while m * m * m < n {
        m += 1;
    }
    m
}

/// Exact u-width of a standard tetrahedron.
pub fn u_width(t: &StandardTet, u: &Direction) -> Result<i64> {
    let top = cadd(
        cadd(cmul(t.a(), u.r)?, cmul(t.b(), u.s)?)?,
        cmul(t.n(), u.t)?,
    )?;
    let vals = [0, u.r, u.s, top];
    Ok(vals.iter().max().unwrap() - vals.iter().min().unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthReport {
    pub width: i64,
    /// All sign-normalized directions achieving `width`, sorted.
    pub minimal_directions: Vec<Direction>,
    /// Per-plane lattice-point counts, aligned with `minimal_directions`.
    pub occupancy: Vec<Vec<i64>>,
}

/// Lattice-point counts of `T` on each plane `u . x = j`, from the plane
/// through the origin-side face outward when `(0,0,0)` is on an outer
/// plane, else from the minimum plane to the maximum plane.
pub fn plane_occupancy(t: &StandardTet, u: &Direction) -> Result<Vec<i64>> {
    let tet = t.to_tetrahedron();
    let c = census(&tet)?;
    let mut points: Vec<LatticePoint> = tet.vertices().to_vec();
    points.extend(&c.interior);
    points.extend(&c.boundary_nonvertex);
    occupancy_of_points(t, u, &points)
}

fn occupancy_of_points(
    t: &StandardTet,
    u: &Direction,
    points: &[LatticePoint],
) -> Result<Vec<i64>> {
    // Vertices attain the extreme values of a linear functional over T.
    let vertex_vals: Vec<i64> = t
        .to_tetrahedron()
        .vertices()
        .iter()
        .map(|v| u.dot(v))
        .collect::<Result<_>>()?;
    let lo = *vertex_vals.iter().min().unwrap();
    let hi = *vertex_vals.iter().max().unwrap();
    let mut counts = vec![0i64; (hi - lo + 1) as usize];
    for p in points {
        let v = u.dot(p)?;
        counts[(v - lo) as usize] += 1;
    }
    // Origin is vertex v1; orient so its plane comes first when outermost.
    if hi == 0 && lo != 0 {
        counts.reverse();
    }
    Ok(counts)
}

/// Exact lattice width with all minimal directions and their occupancies.
pub fn lattice_width(t: &StandardTet) -> Result<WidthReport> {
    let w0 = 2 * ceil_cbrt(t.n());
    let mut widths: BTreeMap<Direction, i64> = BTreeMap::new();
    for r in 0..=w0 {
        for s in -w0..=w0 {
            // half-space representatives; u and -u have equal width
            if r == 0 && s < 0 {
                continue;
            }
            let e = cadd(cmul(t.a(), r)?, cmul(t.b(), s)?)?;
            let t_lo = (-w0 - e).div_euclid(t.n());
            let t_hi = (w0 - e).div_euclid(t.n());
            for tt in t_lo..=t_hi + 1 {
                if (r, s, tt) == (0, 0, 0) {
                    continue;
                }
                let u = Direction::new(r, s, tt)?;
                let w = u_width(t, &u)?;
                widths.entry(u).or_insert(w);
            }
        }
    }
    let min = *widths.values().min().ok_or(Error::Inconsistency("empty width search"))?;
    let minimal_directions: Vec<Direction> = widths
        .iter()
        .filter(|(_, w)| **w == min)
        .map(|(u, _)| *u)
        .collect();

    let tet = t.to_tetrahedron();
    let c = census(&tet)?;
    let mut points: Vec<LatticePoint> = tet.vertices().to_vec();
    points.extend(&c.interior);
    points.extend(&c.boundary_nonvertex);
    let occupancy = minimal_directions
        .iter()
        .map(|u| occupancy_of_points(t, u, &points))
        .collect::<Result<_>>()?;
    Ok(WidthReport { width: min, minimal_directions, occupancy })
}

/// Width of the minimum over the candidate grid only, without direction
/// or occupancy reporting. Used by large sweeps.
pub fn lattice_width_value(t: &StandardTet) -> Result<i64> {
    let w0 = 2 * ceil_cbrt(t.n());
    let mut min = i64::MAX;
    for r in 0..=w0 {
        for s in -w0..=w0 {
            if r == 0 && s < 0 {
                continue;
            }
            let e = cadd(cmul(t.a(), r)?, cmul(t.b(), s)?)?;
            let t_lo = (-w0 - e).div_euclid(t.n());
            let t_hi = (w0 - e).div_euclid(t.n());
            for tt in t_lo..=t_hi + 1 {
                if (r, s, tt) == (0, 0, 0) {
                    continue;
                }
                let top = e + t.n() * tt;
                let vals = [0, r, s, top];
                let w = vals.iter().max().unwrap() - vals.iter().min().unwrap();
                if w < min {
                    min = w;
                    if min == 1 {
                        return Ok(1);
                    }
                }
            }
        }
    }
    Ok(min)
}

/// Width of an arbitrary tetrahedron: normalize to standard form first;
/// tetrahedra with no clean face fall back to a direct dual-box search.
pub fn lattice_width_general(t: &LatticeTetrahedron) -> Result<i64> {
    match to_standard(t) {
        Ok(r) => Ok(lattice_width(&r.standard)?.width),
        Err(Error::NoCleanFace) => direct_width_search(t),
        Err(e) => Err(e),
    }
}

/// Complete search for general tetrahedra: with edge matrix E (rows
/// `v_{i+1} - v_1`), any direction of width `<= W0` has `|E u| <= W0`
/// componentwise, so `u = E^{-1} y` for some integer vector `y` in the
/// cube `[-W0, W0]^3`; integrality is checked via the adjugate.
fn direct_width_search(t: &LatticeTetrahedron) -> Result<i64> {
    let n = t.normalized_volume()?;
    if n == 0 {
        return Err(Error::Degenerate);
    }
    let w0 = 2 * ceil_cbrt(n);
    let vs = t.vertices();
    let e: Vec<LatticePoint> = (1..4).map(|i| vs[i].sub(&vs[0])).collect::<Result<_>>()?;
    let det = crate::geom::Mat3([
        [e[0].x, e[0].y, e[0].z],
        [e[1].x, e[1].y, e[1].z],
        [e[2].x, e[2].y, e[2].z],
    ])
    .det()?;
    // adjugate of the edge matrix: adj * E = det * I
    let m = [[e[0].x, e[0].y, e[0].z], [e[1].x, e[1].y, e[1].z], [e[2].x, e[2].y, e[2].z]];
    let cof = |r1: usize, c1: usize, r2: usize, c2: usize| m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    let adj = [
        [cof(1, 1, 2, 2), -cof(0, 1, 2, 2), cof(0, 1, 1, 2)],
        [-cof(1, 0, 2, 2), cof(0, 0, 2, 2), -cof(0, 0, 1, 2)],
        [cof(1, 0, 2, 1), -cof(0, 0, 2, 1), cof(0, 0, 1, 1)],
    ];
    let mut min = i64::MAX;
    for y1 in -w0..=w0 {
        for y2 in -w0..=w0 {
            for y3 in 0..=w0 {
                let y = [y1, y2, y3];
                if y == [0, 0, 0] {
                    continue;
                }
                // u = adj^T y / det must be integral (E^T u = y)
                let mut u = [0i64; 3];
                let mut ok = true;
                for (i, ui) in u.iter_mut().enumerate() {
                    let num: i64 = (0..3).map(|j| adj[i][j] * y[j]).sum();
                    if num % det != 0 {
                        ok = false;
                        break;
                    }
                    *ui = num / det;
                }
                if !ok || u == [0, 0, 0] {
                    continue;
                }
                let dots: Vec<i64> = vs
                    .iter()
                    .map(|v| u[0] * v.x + u[1] * v.y + u[2] * v.z)
                    .collect();
                let w = dots.iter().max().unwrap() - dots.iter().min().unwrap();
                min = min.min(w);
            }
        }
    }
    Ok(min)
}

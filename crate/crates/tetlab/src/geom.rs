//! Core geometric types: lattice points, tetrahedra, unimodular maps,
//! barycentric coordinates, and primitive directions.
//!
//! The standard family `T_{a,b,n}` has the fixed vertex order
//! `((0,0,0), (1,0,0), (0,1,0), (a,b,n))`; every formula in the crate
//! depends on that order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cadd, cmul, csub, gcd3, Rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0, z: 0 };

    pub fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint { x, y, z }
    }

    pub fn sub(&self, other: &LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint::new(
            csub(self.x, other.x)?,
            csub(self.y, other.y)?,
            csub(self.z, other.z)?,
        ))
    }

    pub fn add(&self, other: &LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint::new(
            cadd(self.x, other.x)?,
            cadd(self.y, other.y)?,
            cadd(self.z, other.z)?,
        ))
    }

    pub fn neg(&self) -> Result<LatticePoint> {
        LatticePoint::ORIGIN.sub(self)
    }

    fn coords(&self) -> [i64; 3] {
        [self.x, self.y, self.z]
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

impl FromStr for LatticePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed lattice point {s:?}"));
        let mut it = s.split(',').map(|p| p.trim().parse::<i64>());
        let x = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
        let y = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
        let z = it.next().ok_or_else(bad)?.map_err(|_| bad())?;
        if it.next().is_some() {
            return Err(bad());
        }
        Ok(LatticePoint::new(x, y, z))
    }
}

/// 3x3 integer matrix, row-major, acting on column vectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat3(pub [[i64; 3]; 3]);

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub fn det(&self) -> Result<i64> {
        let m = &self.0;
        let c0 = csub(cmul(m[1][1], m[2][2])?, cmul(m[1][2], m[2][1])?)?;
        let c1 = csub(cmul(m[1][0], m[2][2])?, cmul(m[1][2], m[2][0])?)?;
        let c2 = csub(cmul(m[1][0], m[2][1])?, cmul(m[1][1], m[2][0])?)?;
        cadd(csub(cmul(m[0][0], c0)?, cmul(m[0][1], c1)?)?, cmul(m[0][2], c2)?)
    }

    pub fn mul(&self, other: &Mat3) -> Result<Mat3> {
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..3 {
                    acc = cadd(acc, cmul(self.0[i][k], other.0[k][j])?)?;
                }
                *cell = acc;
            }
        }
        Ok(Mat3(out))
    }

    pub fn apply(&self, p: &LatticePoint) -> Result<LatticePoint> {
        let v = p.coords();
        let mut out = [0i64; 3];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for k in 0..3 {
                acc = cadd(acc, cmul(self.0[i][k], v[k])?)?;
            }
            *o = acc;
        }
        Ok(LatticePoint::new(out[0], out[1], out[2]))
    }

    /// Inverse of a unimodular matrix (integer adjugate divided by det = +-1).
    pub fn inverse(&self) -> Result<Mat3> {
        let d = self.det()?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        let m = &self.0;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| -> Result<i64> {
            csub(cmul(m[r1][c1], m[r2][c2])?, cmul(m[r1][c2], m[r2][c1])?)
        };
        let adj = Mat3([
            [cof(1, 1, 2, 2)?, -cof(0, 1, 2, 2)?, cof(0, 1, 1, 2)?],
            [-cof(1, 0, 2, 2)?, cof(0, 0, 2, 2)?, -cof(0, 0, 1, 2)?],
            [cof(1, 0, 2, 1)?, -cof(0, 0, 2, 1)?, cof(0, 0, 1, 1)?],
        ]);
        let mut out = adj.0;
        if d == -1 {
            for row in &mut out {
                for v in row {
                    *v = -*v;
                }
            }
        }
        Ok(Mat3(out))
    }
}

/// Affine unimodular map `v -> Mv + u` with `det M = +-1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct UnimodularMap {
    pub matrix: Mat3,
    pub translation: LatticePoint,
}

impl UnimodularMap {
    pub fn new(matrix: Mat3, translation: LatticePoint) -> Result<Self> {
        let d = matrix.det()?;
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        Ok(UnimodularMap { matrix, translation })
    }

    pub fn identity() -> Self {
        UnimodularMap {
            matrix: Mat3::IDENTITY,
            translation: LatticePoint::ORIGIN,
        }
    }

    pub fn linear(matrix: Mat3) -> Result<Self> {
        UnimodularMap::new(matrix, LatticePoint::ORIGIN)
    }

    pub fn translate(u: LatticePoint) -> Self {
        UnimodularMap {
            matrix: Mat3::IDENTITY,
            translation: u,
        }
    }

    pub fn apply_point(&self, p: &LatticePoint) -> Result<LatticePoint> {
        self.matrix.apply(p)?.add(&self.translation)
    }

    /// Composition `self o inner` (apply `inner` first).
    pub fn compose(&self, inner: &UnimodularMap) -> Result<UnimodularMap> {
        Ok(UnimodularMap {
            matrix: self.matrix.mul(&inner.matrix)?,
            translation: self.matrix.apply(&inner.translation)?.add(&self.translation)?,
        })
    }

    pub fn inverse(&self) -> Result<UnimodularMap> {
        let inv = self.matrix.inverse()?;
        Ok(UnimodularMap {
            matrix: inv,
            translation: inv.apply(&self.translation)?.neg()?,
        })
    }
}

/// Vertex-wise image of a tetrahedron; preserves normalized volume.
pub fn apply_map(f: &UnimodularMap, t: &LatticeTetrahedron) -> Result<LatticeTetrahedron> {
    let v = t.vertices();
    LatticeTetrahedron::from_vertices([
        f.apply_point(&v[0])?,
        f.apply_point(&v[1])?,
        f.apply_point(&v[2])?,
        f.apply_point(&v[3])?,
    ])
}

/// An ordered quadruple of lattice points. Degenerate (coplanar) quadruples
/// are representable; geometric operations reject them.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeTetrahedron {
    vertices: [LatticePoint; 4],
}

impl LatticeTetrahedron {
    pub fn from_vertices(vertices: [LatticePoint; 4]) -> Result<Self> {
        // Overflow in the edge determinant is the only construction failure.
        let t = LatticeTetrahedron { vertices };
        t.normalized_volume()?;
        Ok(t)
    }

    pub fn vertices(&self) -> [LatticePoint; 4] {
        self.vertices
    }

    pub fn vertex(&self, i: usize) -> LatticePoint {
        self.vertices[i]
    }

    /// `|det(v2-v1, v3-v1, v4-v1)|` = six times the volume; 0 signals degeneracy.
    pub fn normalized_volume(&self) -> Result<i64> {
        let [v1, v2, v3, v4] = &self.vertices;
        let e2 = v2.sub(v1)?;
        let e3 = v3.sub(v1)?;
        let e4 = v4.sub(v1)?;
        let m = Mat3([
            [e2.x, e3.x, e4.x],
            [e2.y, e3.y, e4.y],
            [e2.z, e3.z, e4.z],
        ]);
        Ok(m.det()?.abs())
    }

    pub fn is_degenerate(&self) -> Result<bool> {
        Ok(self.normalized_volume()? == 0)
    }

    /// Barycentric numerators of `w` over a common signed denominator:
    /// returns `(num, den)` with `lambda_j = num[j] / den` and `den = +-vol`.
    pub(crate) fn barycentric_numerators(&self, w: &LatticePoint) -> Result<([i64; 4], i64)> {
        let [v1, v2, v3, v4] = &self.vertices;
        let e2 = v2.sub(v1)?;
        let e3 = v3.sub(v1)?;
        let e4 = v4.sub(v1)?;
        let p = w.sub(v1)?;
        let det3 = |a: &LatticePoint, b: &LatticePoint, c: &LatticePoint| -> Result<i64> {
            Mat3([[a.x, b.x, c.x], [a.y, b.y, c.y], [a.z, b.z, c.z]]).det()
        };
        let d = det3(&e2, &e3, &e4)?;
        if d == 0 {
            return Err(Error::Degenerate);
        }
        let n2 = det3(&p, &e3, &e4)?;
        let n3 = det3(&e2, &p, &e4)?;
        let n4 = det3(&e2, &e3, &p)?;
        let n1 = csub(d, cadd(cadd(n2, n3)?, n4)?)?;
        Ok(([n1, n2, n3, n4], d))
    }

    /// Exact barycentric coordinates of `w` with respect to this vertex order.
    pub fn barycentric(&self, w: &LatticePoint) -> Result<BarycentricCoords> {
        let (nums, d) = self.barycentric_numerators(w)?;
        BarycentricCoords::new([
            Rational::new(nums[0], d)?,
            Rational::new(nums[1], d)?,
            Rational::new(nums[2], d)?,
            Rational::new(nums[3], d)?,
        ])
    }

    /// Exact point location of `w` relative to this tetrahedron.
    pub fn classify_point(&self, w: &LatticePoint) -> Result<PointLocation> {
        let (nums, d) = self.barycentric_numerators(w)?;
        let sign = d.signum();
        let mut zeros = 0;
        for n in nums {
            match (n * sign).signum() {
                -1 => return Ok(PointLocation::Outside),
                0 => zeros += 1,
                _ => {}
            }
        }
        Ok(match zeros {
            0 => PointLocation::Interior,
            3 => PointLocation::Vertex,
            _ => PointLocation::OnBoundary,
        })
    }
}

impl fmt::Display for LatticeTetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.vertices;
        write!(f, "{a};{b};{c};{d}")
    }
}

impl FromStr for LatticeTetrahedron {
    type Err = Error;

    /// Parses the CLI vertex format `"x,y,z;x,y,z;x,y,z;x,y,z"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 4 {
            return Err(Error::InvalidInput(format!(
                "expected four ';'-separated vertices, got {}",
                parts.len()
            )));
        }
        let mut vs = [LatticePoint::ORIGIN; 4];
        for (v, p) in vs.iter_mut().zip(parts) {
            *v = p.parse()?;
        }
        LatticeTetrahedron::from_vertices(vs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum PointLocation {
    Interior,
    OnBoundary,
    Vertex,
    Outside,
}

/// The standard family `T_{a,b,n}` with `n >= 1` and `0 <= a, b <= n-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StandardTet {
    a: i64,
    b: i64,
    n: i64,
}

impl StandardTet {
    pub fn new(a: i64, b: i64, n: i64) -> Result<Self> {
        if n < 1 || a < 0 || b < 0 || a > n - 1 || b > n - 1 {
            return Err(Error::InvalidInput(format!(
                "T_{{{a},{b},{n}}} violates n >= 1, 0 <= a,b <= n-1"
            )));
        }
        Ok(StandardTet { a, b, n })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The hidden third parameter `c = 1 - a - b`.
    pub fn c(&self) -> i64 {
        1 - self.a - self.b
    }

    pub fn to_tetrahedron(&self) -> LatticeTetrahedron {
        LatticeTetrahedron::from_vertices([
            LatticePoint::ORIGIN,
            LatticePoint::new(1, 0, 0),
            LatticePoint::new(0, 1, 0),
            LatticePoint::new(self.a, self.b, self.n),
        ])
        .expect("standard tetrahedron construction cannot overflow")
    }

    /// Barycentric coordinates of `w = (r,s,t)` over the standard vertex order:
    /// `(1 - r - s + t(a+b-1)/n, r - ta/n, s - tb/n, t/n)`.
    pub fn barycentric_of(&self, w: &LatticePoint) -> Result<BarycentricCoords> {
        let (r, s, t) = (w.x, w.y, w.z);
        let n = self.n;
        let l4 = Rational::new(t, n)?;
        let l2 = Rational::new(csub(cmul(r, n)?, cmul(t, self.a)?)?, n)?;
        let l3 = Rational::new(csub(cmul(s, n)?, cmul(t, self.b)?)?, n)?;
        let l1 = Rational::ONE.sub(&l2)?.sub(&l3)?.sub(&l4)?;
        BarycentricCoords::new([l1, l2, l3, l4])
    }

    /// Evaluates `sum lambda_j v_j`; errors when the combination is not integral.
    pub fn point_from_barycentric(&self, bc: &BarycentricCoords) -> Result<LatticePoint> {
        let [_, l2, l3, l4] = bc.lambda();
        let x = l2.add(&l4.mul(&Rational::integer(self.a))?)?;
        let y = l3.add(&l4.mul(&Rational::integer(self.b))?)?;
        let z = l4.mul(&Rational::integer(self.n))?;
        if !(x.is_integer() && y.is_integer() && z.is_integer()) {
            return Err(Error::NotALatticePoint);
        }
        Ok(LatticePoint::new(x.numer(), y.numer(), z.numer()))
    }
}

impl fmt::Debug for StandardTet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T_{{{},{},{}}}", self.a, self.b, self.n)
    }
}

impl fmt::Display for StandardTet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.n)
    }
}

impl FromStr for StandardTet {
    type Err = Error;

    /// Parses the CLI flag format `"a,b,n"`.
    fn from_str(s: &str) -> Result<Self> {
        let p: LatticePoint = s.parse().map_err(|_| {
            Error::InvalidInput(format!("malformed standard tetrahedron {s:?}, expected a,b,n"))
        })?;
        StandardTet::new(p.x, p.y, p.z)
    }
}

/// Ordered rational quadruple summing to 1, tied to a vertex order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BarycentricCoords {
    lambda: [Rational; 4],
}

impl BarycentricCoords {
    pub fn new(lambda: [Rational; 4]) -> Result<Self> {
        let mut sum = Rational::ZERO;
        for l in &lambda {
            sum = sum.add(l)?;
        }
        if sum != Rational::ONE {
            return Err(Error::InvalidInput(format!(
                "barycentric coordinates sum to {sum}, not 1"
            )));
        }
        Ok(BarycentricCoords { lambda })
    }

    pub fn lambda(&self) -> [Rational; 4] {
        self.lambda
    }

    pub fn sorted(&self) -> [Rational; 4] {
        let mut l = self.lambda;
        l.sort();
        l
    }

    pub fn all_positive(&self) -> bool {
        self.lambda.iter().all(|l| *l > Rational::ZERO)
    }
}

impl fmt::Debug for BarycentricCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.lambda;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Primitive integer direction, sign-normalized so the first nonzero
/// component is positive. `u` and `-u` give identical widths.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Direction {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl Direction {
    pub fn new(r: i64, s: i64, t: i64) -> Result<Self> {
        if (r, s, t) == (0, 0, 0) {
            return Err(Error::InvalidInput("zero direction".into()));
        }
        let g = gcd3(r, s, t);
        let (mut r, mut s, mut t) = (r / g, s / g, t / g);
        let lead = [r, s, t].into_iter().find(|v| *v != 0).unwrap();
        if lead < 0 {
            (r, s, t) = (-r, -s, -t);
        }
        Ok(Direction { r, s, t })
    }

    pub fn dot(&self, p: &LatticePoint) -> Result<i64> {
        cadd(
            cadd(cmul(self.r, p.x)?, cmul(self.s, p.y)?)?,
            cmul(self.t, p.z)?,
        )
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.r, self.s, self.t)
    }
}

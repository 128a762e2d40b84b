//! Reduction of a lattice tetrahedron with a clean face to the standard
//! form `T_{a,b,n}` via explicit unimodular moves (translations, tweaks,
//! Euclidean shears), returning the witnessing map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{ext_gcd, gcd, Rational};
use crate::geom::{
    apply_map, LatticePoint, LatticeTetrahedron, Mat3, StandardTet, UnimodularMap,
};

/// Determinant-1 2x2 matrix sending `(p, q)` to `(gcd(p, q), 0)`,
/// built from the extended Euclidean algorithm.
pub fn tweak(p: i64, q: i64) -> Result<[[i64; 2]; 2]> {
    if (p, q) == (0, 0) {
        return Err(Error::InvalidInput("tweak of (0, 0)".into()));
    }
    let g = gcd(p, q);
    let (pp, qq) = (p / g, q / g);
    let (_, m, n) = ext_gcd(pp, qq);
    // m*pp + n*qq = 1, so [[m, n], [-qq, pp]] has det 1 and maps (p,q) to (g,0).
    Ok([[m, n], [-qq, pp]])
}

/// Embeds a 2x2 tweak into a 3x3 map acting on coordinates `(i, j)`.
fn tweak_map(p: i64, q: i64, i: usize, j: usize) -> Result<UnimodularMap> {
    let t = tweak(p, q)?;
    let mut m = Mat3::IDENTITY.0;
    m[i][i] = t[0][0];
    m[i][j] = t[0][1];
    m[j][i] = t[1][0];
    m[j][j] = t[1][1];
    UnimodularMap::linear(Mat3(m))
}

/// Euclidean shear `(x,y,z) -> (x - mz, y - kz, z)` reducing the top vertex
/// `(a, b, n)` so that `0 <= a', b' <= |n| - 1`. Fixes the base plane `z = 0`.
pub fn euclidean_shear(a: i64, b: i64, n: i64) -> Result<(i64, i64, UnimodularMap)> {
    if n == 0 {
        return Err(Error::InvalidInput("euclidean shear with n = 0".into()));
    }
    let a_red = a.rem_euclid(n.abs());
    let b_red = b.rem_euclid(n.abs());
    let m = (a - a_red) / n;
    let k = (b - b_red) / n;
    let map = UnimodularMap::linear(Mat3([[1, 0, -m], [0, 1, -k], [0, 0, 1]]))?;
    Ok((a_red, b_red, map))
}

/// Shear in the `(x, y)` plane fixing `(0,0,0)` and `(1,0,0)` and sending
/// `(p, q, 0)` to `(p - mq, q, 0)`.
fn xy_shear(m: i64) -> Result<UnimodularMap> {
    UnimodularMap::linear(Mat3([[1, -m, 0], [0, 1, 0], [0, 0, 1]]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationResult {
    pub standard: StandardTet,
    pub witness: UnimodularMap,
    /// `vertex_permutation[k]` is the original index of the vertex that the
    /// witness sends to standard position `k`.
    pub vertex_permutation: [usize; 4],
}

/// True when the only lattice points on the closed triangle `q1 q2 q3`
/// are its three vertices, tested by exhaustive enumeration over the
/// triangle's integer bounding box.
fn face_is_clean(q1: &LatticePoint, q2: &LatticePoint, q3: &LatticePoint) -> Result<bool> {
    let e1 = q2.sub(q1)?;
    let e2 = q3.sub(q1)?;
    let cross = |a: &LatticePoint, b: &LatticePoint| -> Result<LatticePoint> {
        Ok(LatticePoint::new(
            a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x,
        ))
    };
    let dot = |a: &LatticePoint, b: &LatticePoint| a.x * b.x + a.y * b.y + a.z * b.z;
    let nvec = cross(&e1, &e2)?;
    let nn = dot(&nvec, &nvec);
    if nn == 0 {
        return Err(Error::Degenerate);
    }
    let lo = |f: fn(&LatticePoint) -> i64| f(q1).min(f(q2)).min(f(q3));
    let hi = |f: fn(&LatticePoint) -> i64| f(q1).max(f(q2)).max(f(q3));
    let mut count = 0i64;
    for x in lo(|p| p.x)..=hi(|p| p.x) {
        for y in lo(|p| p.y)..=hi(|p| p.y) {
            for z in lo(|p| p.z)..=hi(|p| p.z) {
                let p = LatticePoint::new(x, y, z).sub(q1)?;
                if dot(&p, &nvec) != 0 {
                    continue; // off the supporting plane
                }
                // p = alpha e1 + beta e2; on the closed triangle iff
                // alpha >= 0, beta >= 0, alpha + beta <= 1.
                let alpha_num = dot(&cross(&p, &e2)?, &nvec);
                let beta_num = dot(&cross(&e1, &p)?, &nvec);
                let alpha = Rational::new(alpha_num, nn)?;
                let beta = Rational::new(beta_num, nn)?;
                if alpha >= Rational::ZERO
                    && beta >= Rational::ZERO
                    && alpha.add(&beta)? <= Rational::ONE
                {
                    count += 1;
                }
            }
        }
    }
    Ok(count == 3)
}

/// Normalizes `t` to `T_{a,b,n}`: finds a clean face (trying the face
/// opposite `v4` first, then `v3`, `v2`, `v1`), permutes it to the base,
/// and applies the tweak/shear pipeline. The witness is re-applied to the
/// permuted input to verify the construction before returning.
pub fn to_standard(t: &LatticeTetrahedron) -> Result<NormalizationResult> {
    if t.is_degenerate()? {
        return Err(Error::Degenerate);
    }
    let vs = t.vertices();
    for apex in [3usize, 2, 1, 0] {
        let base: Vec<usize> = (0..4).filter(|&i| i != apex).collect();
        if !face_is_clean(&vs[base[0]], &vs[base[1]], &vs[base[2]])? {
            continue;
        }
        let perm = [base[0], base[1], base[2], apex];
        let permuted = LatticeTetrahedron::from_vertices([
            vs[perm[0]],
            vs[perm[1]],
            vs[perm[2]],
            vs[perm[3]],
        ])?;
        let (standard, witness) = reduce_with_clean_base(&permuted)?;
        // Verify by re-application rather than trusting the construction.
        let image = apply_map(&witness, &permuted)?;
        if image != standard.to_tetrahedron() {
            return Err(Error::Inconsistency("normalization witness check failed"));
        }
        return Ok(NormalizationResult {
            standard,
            witness,
            vertex_permutation: perm,
        });
    }
    Err(Error::NoCleanFace)
}

/// Reduction pipeline for a tetrahedron whose base face (v1 v2 v3) is clean.
fn reduce_with_clean_base(t: &LatticeTetrahedron) -> Result<(StandardTet, UnimodularMap)> {
    let mut f = UnimodularMap::translate(t.vertex(0).neg()?);
    let mut cur = apply_map(&f, t)?;

    // v2 = (r,s,t): tweak (y,z) to (r,g,0), then (x,y) to (1,0,0).
    let v2 = cur.vertex(1);
    if (v2.y, v2.z) != (0, 0) {
        let step = tweak_map(v2.y, v2.z, 1, 2)?;
        f = step.compose(&f)?;
        cur = apply_map(&step, &cur)?;
    }
    let v2 = cur.vertex(1);
    let step = tweak_map(v2.x, v2.y, 0, 1)?;
    f = step.compose(&f)?;
    cur = apply_map(&step, &cur)?;

    // v3 = (i,j,k): tweak (y,z) to (i,q,0), then shear x by y to (p,q,0).
    let v3 = cur.vertex(2);
    let step = tweak_map(v3.y, v3.z, 1, 2)?;
    f = step.compose(&f)?;
    cur = apply_map(&step, &cur)?;
    let v3 = cur.vertex(2);
    let q = v3.y;
    debug_assert!(q != 0, "v3 collinear with the x-axis");
    // A clean base forces q = +-1 (otherwise (1,1,0) or a sheared copy of it
    // would be a non-vertex face point). Normalize the sign of y first.
    let (q, cur, f) = if q < 0 {
        let flip = UnimodularMap::linear(Mat3([[1, 0, 0], [0, -1, 0], [0, 0, 1]]))?;
        (-q, apply_map(&flip, &cur)?, flip.compose(&f)?)
    } else {
        (q, cur, f)
    };
    if q != 1 {
        return Err(Error::Inconsistency("clean base reduced to q > 1"));
    }
    let mut cur = cur;
    let mut f = f;
    let step = xy_shear(cur.vertex(2).x)?;
    f = step.compose(&f)?;
    cur = apply_map(&step, &cur)?;

    // v4 = (a,b,n): reflect to n >= 1, then shear a, b into [0, n-1].
    if cur.vertex(3).z < 0 {
        let refl = UnimodularMap::linear(Mat3([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))?;
        f = refl.compose(&f)?;
        cur = apply_map(&refl, &cur)?;
    }
    let v4 = cur.vertex(3);
    let (a, b, shear) = euclidean_shear(v4.x, v4.y, v4.z)?;
    f = shear.compose(&f)?;
    let n = v4.z;
    Ok((StandardTet::new(a, b, n)?, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_tet(a: i64, b: i64, n: i64) -> StandardTet {
        StandardTet::new(a, b, n).unwrap()
    }

    #[test]
    fn tweak_values() {
        let m = tweak(6, 4).unwrap();
        assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1);
        assert_eq!((m[0][0] * 6 + m[0][1] * 4, m[1][0] * 6 + m[1][1] * 4), (2, 0));

        let m = tweak(1, 0).unwrap();
        assert_eq!((m[0][0], m[0][1], m[1][0], m[1][1]), (1, 0, 0, 1));

        let m = tweak(0, 5).unwrap();
        assert_eq!((m[0][0] * 0 + m[0][1] * 5, m[1][0] * 0 + m[1][1] * 5), (5, 0));
        assert_eq!(m[0][0] * m[1][1] - m[0][1] * m[1][0], 1);
    }

    #[test]
    fn euclidean_shear_values() {
        let (a, b, map) = euclidean_shear(23, -4, 20).unwrap();
        assert_eq!((a, b), (3, 16));
        assert_eq!(
            map.apply_point(&LatticePoint::new(23, -4, 20)).unwrap(),
            LatticePoint::new(3, 16, 20)
        );

        let (a, b, map) = euclidean_shear(3, 7, 20).unwrap();
        assert_eq!((a, b), (3, 7));
        assert_eq!(map, UnimodularMap::identity());

        let (a, b, _) = euclidean_shear(20, 20, 20).unwrap();
        assert_eq!((a, b), (0, 0));
    }

    #[test]
    fn already_standard_input() {
        let t = std_tet(3, 7, 20).to_tetrahedron();
        let r = to_standard(&t).unwrap();
        assert_eq!(r.standard, std_tet(3, 7, 20));
        assert_eq!(r.vertex_permutation, [0, 1, 2, 3]);
        assert_eq!(apply_map(&r.witness, &t).unwrap(), t);
    }

    #[test]
    fn dilated_unit_tet_has_no_clean_face() {
        let t: LatticeTetrahedron = "0,0,0;2,0,0;0,2,0;0,0,2".parse().unwrap();
        assert_eq!(to_standard(&t), Err(Error::NoCleanFace));
    }

    #[test]
    fn shuffled_image_normalizes() {
        // hand-built unimodular image of T_{3,3,4} with permuted vertices
        let f = UnimodularMap::new(
            Mat3([[2, 1, 0], [1, 1, 3], [1, 1, 2]]),
            LatticePoint::new(-4, 7, 2),
        )
        .unwrap();
        let t = apply_map(&f, &std_tet(3, 3, 4).to_tetrahedron()).unwrap();
        let vs = t.vertices();
        let shuffled =
            LatticeTetrahedron::from_vertices([vs[2], vs[0], vs[3], vs[1]]).unwrap();
        let r = to_standard(&shuffled).unwrap();
        assert_eq!(r.standard.n(), 4);
        // n = 4: the only clean class is T_{3,3,4} up to equivalence
        let pairs = crate::equiv::candidate_pairs(&std_tet(3, 3, 4)).unwrap();
        assert!(pairs.contains(&(r.standard.a(), r.standard.b())));
    }

    #[test]
    fn n_equals_volume() {
        for (a, b, n) in [(3, 7, 20), (2, 2, 5), (1, 1, 2), (0, 0, 1)] {
            let t = std_tet(a, b, n).to_tetrahedron();
            let r = to_standard(&t).unwrap();
            assert_eq!(r.standard.n(), t.normalized_volume().unwrap());
        }
    }
}

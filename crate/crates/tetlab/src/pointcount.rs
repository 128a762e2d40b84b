//! Cleanliness testing, interior-point counting by the fractional-part
//! formula, the brute-force census oracle, the barycentric table M(a,b,n),
//! the pairwise-sum emptiness criterion, and the constructor that realizes
//! a prescribed barycentric quadruple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{cmul, gcd, mod_inverse, Rational};
use crate::geom::{
    BarycentricCoords, LatticePoint, LatticeTetrahedron, PointLocation, StandardTet,
};
use crate::normalize::euclidean_shear;

/// Exhaustive lattice-point inventory of a tetrahedron.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub interior: Vec<LatticePoint>,
    pub boundary_nonvertex: Vec<LatticePoint>,
    pub vertex_count: i64,
}

impl Census {
    pub fn total_points(&self) -> i64 {
        self.vertex_count + self.interior.len() as i64 + self.boundary_nonvertex.len() as i64
    }
}

/// gcd criterion: `T_{a,b,n}` is clean iff n = 1 with (a,b) = (0,0), or
/// `gcd(a,n) = gcd(b,n) = gcd(1-a-b,n) = 1`.
pub fn is_clean_standard(t: &StandardTet) -> bool {
    if t.n() == 1 {
        return t.a() == 0 && t.b() == 0;
    }
    gcd(t.a(), t.n()) == 1 && gcd(t.b(), t.n()) == 1 && gcd(t.c(), t.n()) == 1
}

fn require_clean(t: &StandardTet) -> Result<()> {
    if is_clean_standard(t) {
        Ok(())
    } else {
        Err(Error::NotClean { a: t.a(), b: t.b(), n: t.n() })
    }
}

/// Residue sum `r(t)` with `A_t = r/n`: `A_t` equals
/// `{t(n-c)/n} + {t(n-a)/n} + {t(n-b)/n} + {t/n}`.
fn a_t_residue_sum(t: &StandardTet, k: i64) -> Result<i64> {
    let n = t.n();
    let sum = cmul(k, n - t.c())?.rem_euclid(n)
        + cmul(k, n - t.a())?.rem_euclid(n)
        + cmul(k, n - t.b())?.rem_euclid(n)
        + k.rem_euclid(n);
    Ok(sum)
}

/// The fractional-part sum `A_t` as an exact rational.
pub fn a_t(t: &StandardTet, k: i64) -> Result<Rational> {
    if k < 1 || k > t.n() - 1 {
        return Err(Error::InvalidInput(format!(
            "t = {k} outside [1, n-1] for n = {}",
            t.n()
        )));
    }
    Rational::new(a_t_residue_sum(t, k)?, t.n())
}

/// The candidate interior point at height `t`: `w_t = (r(t), s(t), t)` with
/// `r(t) = ceil(ta/n)` and `s(t) = ceil(tb/n)`.
fn w_t(t: &StandardTet, k: i64) -> Result<LatticePoint> {
    let n = t.n();
    let ceil_div = |num: i64, den: i64| -> i64 { num.div_euclid(den) + i64::from(num.rem_euclid(den) != 0) };
    Ok(LatticePoint::new(
        ceil_div(cmul(k, t.a())?, n),
        ceil_div(cmul(k, t.b())?, n),
        k,
    ))
}

/// Interior lattice-point count of a clean `T_{a,b,n}`:
/// the number of `t` in `[1, n-1]` with `A_t = 1`.
pub fn interior_count_formula(t: &StandardTet) -> Result<i64> {
    require_clean(t)?;
    let mut count = 0;
    for k in 1..t.n() {
        if a_t_residue_sum(t, k)? == t.n() {
            count += 1;
        }
    }
    Ok(count)
}

/// Interior lattice points of a clean `T_{a,b,n}` in increasing `t`.
pub fn interior_points_formula(t: &StandardTet) -> Result<Vec<LatticePoint>> {
    require_clean(t)?;
    let mut points = Vec::new();
    for k in 1..t.n() {
        if a_t_residue_sum(t, k)? == t.n() {
            points.push(w_t(t, k)?);
        }
    }
    Ok(points)
}

/// Brute-force census over the integer bounding box of the vertices.
pub fn census(t: &LatticeTetrahedron) -> Result<Census> {
    if t.is_degenerate()? {
        return Err(Error::Degenerate);
    }
    let vs = t.vertices();
    let lo = |f: fn(&LatticePoint) -> i64| vs.iter().map(f).min().unwrap();
    let hi = |f: fn(&LatticePoint) -> i64| vs.iter().map(f).max().unwrap();
    let mut interior = Vec::new();
    let mut boundary = Vec::new();
    for x in lo(|p| p.x)..=hi(|p| p.x) {
        for y in lo(|p| p.y)..=hi(|p| p.y) {
            for z in lo(|p| p.z)..=hi(|p| p.z) {
                let p = LatticePoint::new(x, y, z);
                match t.classify_point(&p)? {
                    PointLocation::Interior => interior.push(p),
                    PointLocation::OnBoundary => boundary.push(p),
                    PointLocation::Vertex | PointLocation::Outside => {}
                }
            }
        }
    }
    interior.sort();
    boundary.sort();
    Ok(Census {
        interior,
        boundary_nonvertex: boundary,
        vertex_count: 4,
    })
}

/// The `(n-1) x 4` table whose `t`-th row is
/// `({t(n-c)/n}, {t(n-a)/n}, {t(n-b)/n}, t/n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BCTable {
    pub rows: Vec<[Rational; 4]>,
}

impl BCTable {
    /// Row for height `t`, 1-based.
    pub fn row(&self, t: i64) -> &[Rational; 4] {
        &self.rows[(t - 1) as usize]
    }
}

pub fn bc_table(t: &StandardTet) -> Result<BCTable> {
    require_clean(t)?;
    if t.n() < 2 {
        return Err(Error::InvalidInput("bc_table needs n >= 2".into()));
    }
    let n = t.n();
    let mut rows = Vec::with_capacity((n - 1) as usize);
    for k in 1..n {
        rows.push([
            Rational::new(cmul(k, n - t.c())?, n)?.frac(),
            Rational::new(cmul(k, n - t.a())?, n)?.frac(),
            Rational::new(cmul(k, n - t.b())?, n)?.frac(),
            Rational::new(k, n)?,
        ]);
    }
    Ok(BCTable { rows })
}

/// Emptiness test by the pairwise-sum criterion: `T` is empty iff every row
/// of the table splits into two pairs each summing to an integer.
pub fn pairwise_sum_empty_test(t: &StandardTet) -> Result<bool> {
    require_clean(t)?;
    if t.n() == 1 {
        return Ok(true);
    }
    let table = bc_table(t)?;
    for row in &table.rows {
        let int_pair = |i: usize, j: usize| -> Result<bool> {
            Ok(row[i].add(&row[j])?.is_integer())
        };
        let splits = [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)];
        let mut ok = false;
        for (i, j, k, l) in splits {
            if int_pair(i, j)? && int_pair(k, l)? {
                ok = true;
                break;
            }
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_bc_numerators(d: &[i64; 4], n_total: i64) -> Result<()> {
    let sum: i64 = d.iter().sum();
    if d.iter().any(|&x| x < 1) || sum != n_total {
        return Err(Error::InvalidInput(format!(
            "quadruple {d:?} must be positive and sum to N = {n_total}"
        )));
    }
    for &x in d {
        if gcd(x, n_total) != 1 {
            return Err(Error::InvalidInput(format!(
                "gcd({x}, {n_total}) > 1 in quadruple {d:?}"
            )));
        }
    }
    Ok(())
}

/// The no-smaller-generator condition: for every `s` in `[2, N-1]`,
/// `sum_j {s d_j / N} > 1`.
pub fn nogen_check(d: &[i64; 4], n_total: i64) -> Result<bool> {
    check_bc_numerators(d, n_total)?;
    for s in 2..n_total {
        let residue_sum: i64 = d.iter().map(|&x| (s * x).rem_euclid(n_total)).sum();
        if residue_sum <= n_total {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a clean standard tetrahedron with an interior-candidate lattice
/// point realizing the barycentric quadruple `(d_1/N, ..., d_4/N)`.
/// The result is verified internally before returning.
pub fn construct_from_bc(d: &[i64; 4], n_total: i64) -> Result<(StandardTet, LatticePoint)> {
    check_bc_numerators(d, n_total)?;
    let m = mod_inverse(d[3], n_total)?;
    let s = (cmul(m, d[3])? - 1) / n_total;
    let a_raw = n_total - cmul(m, d[1])?;
    let b_raw = n_total - cmul(m, d[2])?;
    let w_raw = LatticePoint::new(d[3] - cmul(s, d[1])?, d[3] - cmul(s, d[2])?, d[3]);
    let (a, b, shear) = euclidean_shear(a_raw, b_raw, n_total)?;
    // The shear fixes the base and must be applied to w as well. Its action
    // is (x,y,z) -> (x - pz, y - qz, z) for the reduction multipliers p, q.
    let w = shear.apply_point(&w_raw)?;
    let tet = StandardTet::new(a, b, n_total)?;
    let expected = BarycentricCoords::new([
        Rational::new(d[0], n_total)?,
        Rational::new(d[1], n_total)?,
        Rational::new(d[2], n_total)?,
        Rational::new(d[3], n_total)?,
    ])?;
    if tet.barycentric_of(&w)? != expected {
        return Err(Error::Inconsistency("construct_from_bc postcondition failed"));
    }
    Ok((tet, w))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tet(a: i64, b: i64, n: i64) -> StandardTet {
        StandardTet::new(a, b, n).unwrap()
    }

    #[test]
    fn cleanliness_values() {
        assert!(is_clean_standard(&tet(2, 5, 7)));
        assert!(is_clean_standard(&tet(3, 7, 20)));
        assert!(!is_clean_standard(&tet(2, 4, 6)));
        assert!(is_clean_standard(&tet(0, 0, 1)));
    }

    #[test]
    fn a_t_values() {
        assert_eq!(a_t(&tet(3, 7, 20), 5).unwrap(), Rational::ONE);
        assert_eq!(a_t(&tet(3, 3, 4), 1).unwrap(), Rational::ONE);
        assert_eq!(a_t(&tet(3, 3, 4), 3).unwrap(), Rational::integer(3));
    }

    #[test]
    fn interior_count_values() {
        assert_eq!(interior_count_formula(&tet(3, 7, 20)).unwrap(), 1);
        assert_eq!(interior_count_formula(&tet(1, 2, 7)).unwrap(), 0);
        assert_eq!(interior_count_formula(&tet(4, 4, 5)).unwrap(), 1);
    }

    #[test]
    fn interior_points_values() {
        assert_eq!(
            interior_points_formula(&tet(3, 7, 20)).unwrap(),
            vec![LatticePoint::new(1, 2, 5)]
        );
        assert_eq!(
            interior_points_formula(&tet(5, 5, 7)).unwrap(),
            vec![LatticePoint::new(1, 1, 1), LatticePoint::new(3, 3, 4)]
        );
        assert_eq!(
            interior_points_formula(&tet(5, 5, 8)).unwrap(),
            vec![LatticePoint::new(1, 1, 1), LatticePoint::new(2, 2, 3)]
        );
    }

    #[test]
    fn census_values() {
        let c = census(&tet(3, 3, 4).to_tetrahedron()).unwrap();
        assert_eq!(c.interior, vec![LatticePoint::new(1, 1, 1)]);
        assert!(c.boundary_nonvertex.is_empty());

        let c = census(&tet(7, 7, 8).to_tetrahedron()).unwrap();
        assert!(c.interior.contains(&LatticePoint::new(1, 1, 1)));
        assert!(c.interior.contains(&LatticePoint::new(2, 2, 2)));

        let c = census(&tet(0, 0, 1).to_tetrahedron()).unwrap();
        assert!(c.interior.is_empty());
        assert!(c.boundary_nonvertex.is_empty());
    }

    #[test]
    fn bc_table_values() {
        let q = |n, d| Rational::new(n, d).unwrap();
        let table = bc_table(&tet(3, 7, 20)).unwrap();
        assert_eq!(table.row(5), &[q(1, 4), q(1, 4), q(1, 4), q(1, 4)]);

        let table = bc_table(&tet(4, 4, 5)).unwrap();
        assert_eq!(table.row(1), &[q(2, 5), q(1, 5), q(1, 5), q(1, 5)]);

        // every row sums to an integer
        for (a, b, n) in [(3, 7, 20), (2, 5, 7), (4, 4, 5)] {
            for row in &bc_table(&tet(a, b, n)).unwrap().rows {
                let mut sum = Rational::ZERO;
                for x in row {
                    sum = sum.add(x).unwrap();
                }
                assert!(sum.is_integer());
            }
        }
    }

    #[test]
    fn pairwise_sum_values() {
        assert!(pairwise_sum_empty_test(&tet(1, 2, 7)).unwrap());
        assert!(!pairwise_sum_empty_test(&tet(3, 3, 4)).unwrap());
        assert!(pairwise_sum_empty_test(&tet(2, 5, 7)).unwrap());
    }

    #[test]
    fn nogen_values() {
        assert!(nogen_check(&[1, 1, 1, 1], 4).unwrap());
        assert!(nogen_check(&[1, 2, 3, 5], 11).unwrap());
        assert!(nogen_check(&[1, 1, 2, 4], 8).is_err());
    }

    #[test]
    fn construct_from_bc_values() {
        let (t, w) = construct_from_bc(&[1, 1, 1, 2], 5).unwrap();
        assert_eq!(t, tet(2, 2, 5));
        assert_eq!(w, LatticePoint::new(1, 1, 2));

        let (t, w) = construct_from_bc(&[1, 1, 1, 1], 4).unwrap();
        assert_eq!(t, tet(3, 3, 4));
        assert_eq!(w, LatticePoint::new(1, 1, 1));

        let (t, w) = construct_from_bc(&[2, 3, 5, 7], 17).unwrap();
        assert!(is_clean_standard(&t));
        let bc = t.barycentric_of(&w).unwrap();
        let lambda = bc.lambda();
        for (l, d) in lambda.iter().zip([2, 3, 5, 7]) {
            assert_eq!(*l, Rational::new(d, 17).unwrap());
        }
    }

    #[test]
    fn formula_matches_oracle_small() {
        for n in 2..=15i64 {
            for a in 0..n {
                for b in 0..n {
                    let t = tet(a, b, n);
                    if !is_clean_standard(&t) {
                        continue;
                    }
                    let c = census(&t.to_tetrahedron()).unwrap();
                    assert_eq!(
                        interior_points_formula(&t).unwrap(),
                        c.interior,
                        "T_{{{a},{b},{n}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn complement_identity_a_t() {
        for (a, b, n) in [(3, 7, 20), (2, 5, 7), (4, 4, 5), (5, 5, 8)] {
            let t = tet(a, b, n);
            for k in 1..n {
                let sum = a_t(&t, k).unwrap().add(&a_t(&t, n - k).unwrap()).unwrap();
                assert_eq!(sum, Rational::integer(4));
            }
        }
    }
}

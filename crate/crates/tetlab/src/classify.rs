//! Emptiness decision, ripe quadruples, the seven barycentric vectors of
//! 1-point tetrahedra, and the eight-class 1-point catalog.

use serde::{Deserialize, Serialize};

use crate::equiv::{canonical_pair, CanonicalPair};
use crate::error::{Error, Result};
use crate::exact::{gcd, Rational};
use crate::geom::{BarycentricCoords, StandardTet};
use crate::pointcount::{interior_count_formula, interior_points_formula, is_clean_standard};

/// A quadruple satisfying the gcd, pair-sum divisibility, and multiplicity
/// conditions; the candidate barycentric numerators of 1-point tetrahedra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RipeQuadruple {
    pub d: [i64; 4],
    pub n_total: i64,
}

/// Checks ripeness conditions (i)-(iii) literally.
pub fn is_ripe(d: &[i64; 4]) -> bool {
    if d.iter().any(|&x| x < 1) {
        return false;
    }
    let n: i64 = d.iter().sum();
    // (i) gcd(d_j, N) = 1
    if d.iter().any(|&x| gcd(x, n) != 1) {
        return false;
    }
    // (ii) each d_i divides some pair-sum of the other three
    for i in 0..4 {
        let others: Vec<i64> = (0..4).filter(|&j| j != i).map(|j| d[j]).collect();
        let divides_pair = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .any(|&(j, k)| (others[j] + others[k]) % d[i] == 0);
        if !divides_pair {
            return false;
        }
    }
    // (iii) d_j = d_i or d_j = 2 d_i with j != i forces d_i = 1
    for i in 0..4 {
        for j in 0..4 {
            if i != j && (d[j] == d[i] || d[j] == 2 * d[i]) && d[i] != 1 {
                return false;
            }
        }
    }
    true
}

/// All sorted ripe quadruples with `d_4 <= max_d`, lexicographic order.
pub fn enumerate_ripe(max_d: i64) -> Vec<RipeQuadruple> {
    let mut out = Vec::new();
    for d1 in 1..=max_d {
        for d2 in d1..=max_d {
            for d3 in d2..=max_d {
                for d4 in d3..=max_d {
                    let d = [d1, d2, d3, d4];
                    if is_ripe(&d) {
                        out.push(RipeQuadruple { d, n_total: d.iter().sum() });
                    }
                }
            }
        }
    }
    out
}

/// The seven barycentric quadruples realizable by the interior point of a
/// 1-point tetrahedron, with denominators 4, 5, 7, 11, 13, 17, 19.
pub fn lambda_table() -> Vec<BarycentricCoords> {
    let entries: [([i64; 4], i64); 7] = [
        ([1, 1, 1, 1], 4),
        ([1, 1, 1, 2], 5),
        ([1, 1, 2, 3], 7),
        ([2, 1, 3, 5], 11),
        ([1, 3, 4, 5], 13),
        ([2, 3, 5, 7], 17),
        ([3, 5, 4, 7], 19),
    ];
    entries
        .iter()
        .map(|(nums, den)| {
            BarycentricCoords::new([
                Rational::new(nums[0], *den).unwrap(),
                Rational::new(nums[1], *den).unwrap(),
                Rational::new(nums[2], *den).unwrap(),
                Rational::new(nums[3], *den).unwrap(),
            ])
            .unwrap()
        })
        .collect()
}

/// Representatives of the eight equivalence classes of 1-point tetrahedra.
pub fn one_point_representatives() -> Vec<StandardTet> {
    [
        (3, 3, 4),
        (2, 2, 5),
        (2, 4, 7),
        (2, 6, 11),
        (2, 7, 13),
        (2, 9, 17),
        (2, 13, 19),
        (3, 7, 20),
    ]
    .iter()
    .map(|&(a, b, n)| StandardTet::new(a, b, n).unwrap())
    .collect()
}

/// The eight canonical pairs of the 1-point catalog.
pub fn one_point_catalog() -> Vec<CanonicalPair> {
    one_point_representatives()
        .iter()
        .map(|t| canonical_pair(t).expect("catalog members are clean"))
        .collect()
}

/// Decides emptiness of a clean tetrahedron, cross-checking the counting
/// route against the `T_{1,d,n}` candidate-pair characterization.
pub fn is_empty(t: &StandardTet) -> Result<bool> {
    if !is_clean_standard(t) {
        return Err(Error::NotClean { a: t.a(), b: t.b(), n: t.n() });
    }
    let by_count = interior_count_formula(t)? == 0;
    let by_white = if t.n() == 1 {
        true
    } else {
        crate::equiv::candidate_pairs(t)?.iter().any(|&(d, _)| d == 1)
    };
    if by_count != by_white {
        return Err(Error::Inconsistency("emptiness routes disagree"));
    }
    Ok(by_count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum TetClass {
    Empty,
    KPoint { k: i64, canonical: CanonicalPair },
}

/// Interior point of a clean tetrahedron together with its derived data:
/// the reduced barycentric denominator `N` and the ratio `g = n / N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteriorPointInfo {
    pub point: crate::geom::LatticePoint,
    pub bc: BarycentricCoords,
    pub bc_denominator: i64,
    pub g: i64,
}

pub fn interior_point_info(t: &StandardTet) -> Result<Vec<InteriorPointInfo>> {
    let mut out = Vec::new();
    for w in interior_points_formula(t)? {
        let bc = t.barycentric_of(&w)?;
        let denom = bc.lambda().iter().map(|l| l.denom()).max().unwrap();
        out.push(InteriorPointInfo {
            point: w,
            bc,
            bc_denominator: denom,
            g: t.n() / denom,
        });
    }
    Ok(out)
}

/// Classifies a clean tetrahedron. For `k = 1` the membership of its class
/// in the eight-class catalog is asserted at runtime, turning the
/// classification theorem into a falsifiable check.
pub fn classify(t: &StandardTet) -> Result<TetClass> {
    if is_empty(t)? {
        return Ok(TetClass::Empty);
    }
    let k = interior_count_formula(t)?;
    let canonical = canonical_pair(t)?;
    if k == 1 && !one_point_catalog().contains(&canonical) {
        return Err(Error::CatalogViolation { a: t.a(), b: t.b(), n: t.n() });
    }
    Ok(TetClass::KPoint { k, canonical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointcount::nogen_check;

    fn tet(a: i64, b: i64, n: i64) -> StandardTet {
        StandardTet::new(a, b, n).unwrap()
    }

    #[test]
    fn emptiness_values() {
        assert!(is_empty(&tet(1, 5, 9)).unwrap());
        assert!(is_empty(&tet(2, 5, 7)).unwrap());
        assert!(!is_empty(&tet(3, 3, 4)).unwrap());
        assert!(is_empty(&tet(0, 0, 1)).unwrap());
    }

    #[test]
    fn ripeness_values() {
        assert!(is_ripe(&[1, 2, 3, 5]));
        assert!(!is_ripe(&[1, 1, 2, 4])); // gcd(2, 8) > 1
        assert!(!is_ripe(&[2, 2, 3, 5])); // repeated 2 > 1
    }

    #[test]
    fn ripe_enumeration_is_the_seven() {
        let expected = [
            [1, 1, 1, 1],
            [1, 1, 1, 2],
            [1, 1, 2, 3],
            [1, 2, 3, 5],
            [1, 3, 4, 5],
            [2, 3, 5, 7],
            [3, 4, 5, 7],
        ];
        let found: Vec<[i64; 4]> = enumerate_ripe(7).iter().map(|r| r.d).collect();
        assert_eq!(found, expected);

        let found: Vec<[i64; 4]> = enumerate_ripe(2).iter().map(|r| r.d).collect();
        assert_eq!(found, [[1, 1, 1, 1], [1, 1, 1, 2]]);

        // stable under raising the bound
        let found: Vec<[i64; 4]> = enumerate_ripe(50).iter().map(|r| r.d).collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn lambda_table_values() {
        let table = lambda_table();
        assert_eq!(table.len(), 7);
        let q = |n, d| Rational::new(n, d).unwrap();
        assert_eq!(table[1].lambda(), [q(1, 5), q(1, 5), q(1, 5), q(2, 5)]);
        assert_eq!(table[6].lambda(), [q(3, 19), q(5, 19), q(4, 19), q(7, 19)]);
    }

    #[test]
    fn ripe_quadruples_satisfy_nogen() {
        for r in enumerate_ripe(7) {
            assert!(nogen_check(&r.d, r.n_total).unwrap(), "{:?}", r.d);
        }
    }

    #[test]
    fn catalog_has_eight_distinct_classes() {
        let catalog = one_point_catalog();
        assert_eq!(catalog.len(), 8);
        let mut dedup = catalog.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        let mut ns: Vec<i64> = dedup.iter().map(|c| c.n).collect();
        ns.sort();
        assert_eq!(ns, [4, 5, 7, 11, 13, 17, 19, 20]);
    }

    #[test]
    fn classify_values() {
        assert_eq!(classify(&tet(1, 3, 7)).unwrap(), TetClass::Empty);

        let c = classify(&tet(7, 11, 20)).unwrap();
        let expected = canonical_pair(&tet(3, 7, 20)).unwrap();
        assert_eq!(c, TetClass::KPoint { k: 1, canonical: expected });

        match classify(&tet(3, 5, 23)).unwrap() {
            TetClass::KPoint { k, .. } => assert_eq!(k, 2),
            other => panic!("expected 2-point, got {other:?}"),
        }
    }

    #[test]
    fn g_ratio_of_3_7_20() {
        let info = interior_point_info(&tet(3, 7, 20)).unwrap();
        assert_eq!(info.len(), 1);
        assert_eq!(info[0].bc_denominator, 4);
        assert_eq!(info[0].g, 5);
    }
}

//! Randomized property tests for the arithmetic core and the geometric
//! invariants.

mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use tetlab::equiv::{are_equivalent, canonical_pair};
use tetlab::exact::{ext_gcd, gcd, Rational};
use tetlab::geom::{apply_map, LatticePoint, StandardTet};
use tetlab::normalize::to_standard;
use tetlab::pointcount::{census, interior_count_formula, is_clean_standard};
use tetlab::width::lattice_width_value;

use common::random_unimodular_map;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..1000).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn arb_tet() -> impl Strategy<Value = StandardTet> {
    (2i64..=30).prop_flat_map(|n| {
        (0..n, 0..n, Just(n)).prop_map(|(a, b, n)| StandardTet::new(a, b, n).unwrap())
    })
}

fn arb_clean_tet() -> impl Strategy<Value = StandardTet> {
    arb_tet().prop_filter("clean", is_clean_standard)
}

proptest! {
    #[test]
    fn gcd_divides_both(a in -10000i64..10000, b in -10000i64..10000) {
        let g = gcd(a, b);
        if a != 0 || b != 0 {
            prop_assert!(g > 0);
            prop_assert_eq!(a % g, 0);
            prop_assert_eq!(b % g, 0);
        }
        let (g2, x, y) = ext_gcd(a, b);
        prop_assert_eq!(g, g2);
        prop_assert_eq!(a * x + b * y, g);
    }

    #[test]
    fn rational_field_laws(x in arb_rational(), y in arb_rational(), z in arb_rational()) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(
            x.add(&y).unwrap().add(&z).unwrap(),
            x.add(&y.add(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.sub(&x).unwrap(), Rational::integer(0));
    }

    #[test]
    fn fractional_part_in_unit_interval(x in arb_rational()) {
        let f = x.frac();
        prop_assert!(f >= Rational::integer(0));
        prop_assert!(f < Rational::integer(1));
        let whole = x.sub(&f).unwrap();
        prop_assert!(whole.is_integer());
    }

    #[test]
    fn rational_display_roundtrip(x in arb_rational()) {
        let back: Rational = x.to_string().parse().unwrap();
        prop_assert_eq!(x, back);
    }

    #[test]
    fn barycentric_roundtrip_on_census_points(t in arb_tet()) {
        let c = census(&t.to_tetrahedron()).unwrap();
        for w in c.interior.iter().chain(c.boundary_nonvertex.iter()) {
            let bc = t.barycentric_of(w).unwrap();
            prop_assert_eq!(t.point_from_barycentric(&bc).unwrap(), *w);
        }
    }

    #[test]
    fn bc_sums_to_one(t in arb_tet(), x in -3i64..6, y in -3i64..6, z in -3i64..8) {
        let bc = t.barycentric_of(&LatticePoint::new(x, y, z)).unwrap();
        let sum = bc.lambda().iter().try_fold(Rational::integer(0), |s, l| s.add(l)).unwrap();
        prop_assert_eq!(sum, Rational::integer(1));
    }

    #[test]
    fn canonical_pair_is_class_invariant(t in arb_clean_tet()) {
        let c = canonical_pair(&t).unwrap();
        // the representative is itself clean, equivalent, and a fixed point
        let rep = StandardTet::new(c.a_star, c.b_star, c.n).unwrap();
        prop_assert!(is_clean_standard(&rep));
        prop_assert!(are_equivalent(&t, &rep).unwrap());
        prop_assert_eq!(canonical_pair(&rep).unwrap(), c);
    }

    #[test]
    fn normalization_inverts_random_maps(t in arb_clean_tet(), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = random_unimodular_map(&mut rng);
        let image = apply_map(&f, &t.to_tetrahedron()).unwrap();
        let norm = to_standard(&image).unwrap();
        prop_assert_eq!(norm.standard.n(), t.n());
        prop_assert!(are_equivalent(&t, &norm.standard).unwrap());
        // witness actually maps the image onto the claimed standard form
        let mut got = apply_map(&norm.witness, &image).unwrap().vertices().to_vec();
        let mut want = norm.standard.to_tetrahedron().vertices().to_vec();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn count_and_width_are_equivalence_invariants(t in arb_clean_tet()) {
        let c = canonical_pair(&t).unwrap();
        let rep = StandardTet::new(c.a_star, c.b_star, c.n).unwrap();
        prop_assert_eq!(
            interior_count_formula(&t).unwrap(),
            interior_count_formula(&rep).unwrap()
        );
        prop_assert_eq!(
            lattice_width_value(&t).unwrap(),
            lattice_width_value(&rep).unwrap()
        );
    }

    #[test]
    fn interior_count_never_exceeds_volume_bound(t in arb_clean_tet()) {
        let k = interior_count_formula(&t).unwrap();
        prop_assert!(k >= 0);
        // n >= 2k + 1 for clean tetrahedra
        prop_assert!(t.n() >= 2 * k + 1);
    }
}

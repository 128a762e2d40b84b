//! Shared helpers for integration tests: seeded random unimodular maps and
//! clean-parameter enumeration.

use rand::rngs::StdRng;
use rand::Rng;

use tetlab::geom::{LatticePoint, Mat3, StandardTet, UnimodularMap};
use tetlab::pointcount::is_clean_standard;

/// Random unimodular map built from elementary row operations on the
/// identity, plus a small translation. Entries are kept small so census
/// bounding boxes of mapped tetrahedra stay tractable.
pub fn random_unimodular_map(rng: &mut StdRng) -> UnimodularMap {
    let mut m = [[0i64; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..6 {
        let i = rng.gen_range(0..3);
        let mut j = rng.gen_range(0..3);
        while j == i {
            j = rng.gen_range(0..3);
        }
        match rng.gen_range(0..3) {
            0 => {
                // add a small multiple of row j to row i
                let k: i64 = rng.gen_range(-2..=2);
                for col in 0..3 {
                    m[i][col] += k * m[j][col];
                }
            }
            1 => m.swap(i, j),
            _ => {
                for col in 0..3 {
                    m[i][col] = -m[i][col];
                }
            }
        }
    }
    let translation = LatticePoint::new(
        rng.gen_range(-4..=4),
        rng.gen_range(-4..=4),
        rng.gen_range(-4..=4),
    );
    UnimodularMap::new(Mat3(m), translation).expect("elementary ops preserve |det| = 1")
}

/// All clean `(a, b)` pairs for a fixed n.
#[allow(dead_code)] // not every test target uses it
pub fn clean_pairs(n: i64) -> Vec<StandardTet> {
    let mut out = Vec::new();
    for a in 0..n.max(1) {
        for b in 0..n.max(1) {
            let t = StandardTet::new(a, b, n).unwrap();
            if is_clean_standard(&t) {
                out.push(t);
            }
        }
    }
    out
}

//! Unimodular equivalence of standard tetrahedra via the triple families
//! `(a,b,c)`, `(a^-1, -ba^-1, -ca^-1)`, `(b^-1, -ab^-1, -cb^-1)`,
//! `(c^-1, -ac^-1, -bc^-1)` (mod n), and the canonical representative
//! built as the lexicographic minimum over all candidate pairs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::mod_inverse;
use crate::geom::StandardTet;
use crate::pointcount::{self, is_clean_standard};

/// The defined triples of a standard tetrahedron, entries reduced to `[0, n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleFamily {
    pub triples: Vec<[i64; 3]>,
}

/// Deterministic class representative: lexicographically minimal pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalPair {
    pub a_star: i64,
    pub b_star: i64,
    pub n: i64,
}

/// All defined triples: `(a,b,c)` always, plus one inverse triple per
/// invertible element of `{a, b, c}`.
pub fn triple_families(t: &StandardTet) -> Result<TripleFamily> {
    let n = t.n();
    if n < 2 {
        return Err(Error::InvalidInput("triple families need n >= 2".into()));
    }
    let (a, b, c) = (t.a().rem_euclid(n), t.b().rem_euclid(n), t.c().rem_euclid(n));
    let mut triples = vec![[a, b, c]];
    for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
        if let Ok(inv) = mod_inverse(x, n) {
            triples.push([
                inv,
                (-y * inv).rem_euclid(n),
                (-z * inv).rem_euclid(n),
            ]);
        }
    }
    Ok(TripleFamily { triples })
}

/// All ordered pairs of two distinct positions of each triple.
pub fn candidate_pairs(t: &StandardTet) -> Result<BTreeSet<(i64, i64)>> {
    let fam = triple_families(t)?;
    let mut pairs = BTreeSet::new();
    for [x, y, z] in fam.triples {
        for (d, e) in [(x, y), (x, z), (y, x), (y, z), (z, x), (z, y)] {
            pairs.insert((d, e));
        }
    }
    Ok(pairs)
}

fn require_clean(t: &StandardTet) -> Result<()> {
    if is_clean_standard(t) {
        Ok(())
    } else {
        Err(Error::NotClean { a: t.a(), b: t.b(), n: t.n() })
    }
}

/// Canonical representative of the equivalence class of a clean tetrahedron.
pub fn canonical_pair(t: &StandardTet) -> Result<CanonicalPair> {
    require_clean(t)?;
    if t.n() == 1 {
        return Ok(CanonicalPair { a_star: 0, b_star: 0, n: 1 });
    }
    let (a_star, b_star) = candidate_pairs(t)?
        .into_iter()
        .next()
        .expect("candidate set is never empty");
    Ok(CanonicalPair { a_star, b_star, n: t.n() })
}

/// Decides equivalence of two clean standard tetrahedra via the triple criterion.
pub fn are_equivalent(t1: &StandardTet, t2: &StandardTet) -> Result<bool> {
    require_clean(t1)?;
    require_clean(t2)?;
    if t1.n() != t2.n() {
        return Ok(false);
    }
    if t1.n() == 1 {
        return Ok(true);
    }
    let n = t1.n();
    Ok(candidate_pairs(t1)?.contains(&(t2.a().rem_euclid(n), t2.b().rem_euclid(n))))
}

/// Three-valued verdict usable for non-clean inputs as well.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EquivalenceVerdict {
    /// Witnessed by a candidate pair from the triple families (clean inputs only).
    Equivalent { witness_pair: (i64, i64) },
    Inequivalent,
    /// Invariant signatures match but no witness is available; the triple
    /// criterion is only asserted for clean tetrahedra.
    Unknown,
}

/// Equivalence decision that falls back to invariant-signature comparison
/// for non-clean inputs, never claiming an equivalence it cannot witness.
pub fn equivalence_verdict(t1: &StandardTet, t2: &StandardTet) -> Result<EquivalenceVerdict> {
    if is_clean_standard(t1) != is_clean_standard(t2) {
        return Ok(EquivalenceVerdict::Inequivalent);
    }
    if is_clean_standard(t1) {
        if t1.n() != t2.n() {
            return Ok(EquivalenceVerdict::Inequivalent);
        }
        if t1.n() == 1 {
            return Ok(EquivalenceVerdict::Equivalent { witness_pair: (0, 0) });
        }
        let n = t1.n();
        let pair = (t2.a().rem_euclid(n), t2.b().rem_euclid(n));
        return Ok(if candidate_pairs(t1)?.contains(&pair) {
            EquivalenceVerdict::Equivalent { witness_pair: pair }
        } else {
            EquivalenceVerdict::Inequivalent
        });
    }
    // Non-clean: compare unimodular-invariant census signatures.
    if t1.n() != t2.n() {
        return Ok(EquivalenceVerdict::Inequivalent);
    }
    let sig = |t: &StandardTet| -> Result<_> {
        let census = pointcount::census(&t.to_tetrahedron())?;
        let mut interior_bcs: Vec<_> = census
            .interior
            .iter()
            .map(|w| t.barycentric_of(w).map(|bc| bc.sorted()))
            .collect::<Result<_>>()?;
        interior_bcs.sort();
        Ok((census.interior.len(), census.boundary_nonvertex.len(), interior_bcs))
    };
    Ok(if sig(t1)? == sig(t2)? {
        EquivalenceVerdict::Unknown
    } else {
        EquivalenceVerdict::Inequivalent
    })
}

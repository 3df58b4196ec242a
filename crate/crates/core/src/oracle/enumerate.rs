//! Exhaustive, deterministic enumerations of small structures, used as
//! probe spaces by the verifiers and as instance spaces by the agreement
//! suites.

use crate::finord::map::monotone_maps;
use crate::finord::poset::BasePoset;
use crate::finord::preorder::{all_preorders, FinPreorder};
use crate::laxcomma::object::LaxObject;

/// A canonical encoding of a preorder up to isomorphism: the minimum over
/// all permutations of the row-major relation bits.
fn preorder_code(p: &FinPreorder) -> Vec<bool> {
    let n = p.len();
    let mut best: Option<Vec<bool>> = None;
    permute(n, &mut (0..n).collect::<Vec<_>>(), 0, &mut |perm| {
        let mut bits = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bits.push(p.le_idx(perm[i], perm[j]));
            }
        }
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    });
    best.unwrap_or_default()
}

/// Heap-style permutation visitor, smallest-index-first ordering.
fn permute(n: usize, prefix: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == n {
        visit(prefix);
        return;
    }
    for i in at..n {
        prefix.swap(at, i);
        permute(n, prefix, at + 1, visit);
        prefix.swap(at, i);
    }
}

/// One representative per isomorphism class of preorders of each size in
/// `0..=max`, in enumeration order.
pub fn preorder_reps(max: usize) -> Vec<FinPreorder> {
    let mut reps = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for n in 0..=max {
        for p in all_preorders("t", n) {
            if seen.insert(preorder_code(&p)) {
                reps.push(p);
            }
        }
    }
    reps
}

/// Every object with a carrier of size `0..=max` on canonical element
/// names, over the given base: all preorders, all monotone structure maps.
pub fn lax_objects_over(base: &BasePoset, max: usize) -> Vec<LaxObject> {
    let mut out = Vec::new();
    for n in 0..=max {
        for carrier in all_preorders("t", n) {
            for s in monotone_maps(&carrier, base.order()) {
                out.push(
                    LaxObject::new(base.clone(), carrier.clone(), s)
                        .expect("enumerated structures are valid"),
                );
            }
        }
    }
    out
}

/// The probe space the universal-property verifiers quantify over:
/// carriers up to isomorphism (competing cones only care about shape), all
/// structure maps.
pub fn probe_objects(base: &BasePoset, max: usize) -> Vec<LaxObject> {
    let mut out = Vec::new();
    for carrier in preorder_reps(max) {
        for s in monotone_maps(&carrier, base.order()) {
            out.push(
                LaxObject::new(base.clone(), carrier.clone(), s)
                    .expect("enumerated structures are valid"),
            );
        }
    }
    out
}

//! The three strengths of quotient map between finite preorders, in
//! increasing order: regular epi, stable regular epi, and the chain-lifting
//! condition characterizing effective quotients.  Each check has a witness
//! variant used by the evidence records upstream.

use serde::Serialize;

use crate::finord::map::MonotoneMap;

/// Why a map fails to be a regular epi.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RegEpiOrdFailure {
    /// `z` has no preimage.
    NotSurjective { z: String },
    /// `z0 <= z1` holds in the codomain but is not in the
    /// reflexive-transitive closure of the image of the domain order.
    PairNotGenerated { z0: String, z1: String },
}

/// Surjective, and the codomain order is generated by the pushed-forward
/// domain order.
pub fn regular_epi_failure(f: &MonotoneMap) -> Option<RegEpiOrdFailure> {
    let z = f.cod();
    let n = z.len();
    let mut hit = vec![false; n];
    for i in 0..f.dom().len() {
        hit[f.apply_idx(i)] = true;
    }
    if let Some(missing) = hit.iter().position(|&h| !h) {
        return Some(RegEpiOrdFailure::NotSurjective {
            z: z.name(missing).to_owned(),
        });
    }
    let mut pushed = vec![false; n * n];
    for k in 0..n {
        pushed[k * n + k] = true;
    }
    for (i, j) in f.dom().comparable_pairs() {
        pushed[f.apply_idx(i) * n + f.apply_idx(j)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if pushed[i * n + k] {
                for j in 0..n {
                    if pushed[k * n + j] {
                        pushed[i * n + j] = true;
                    }
                }
            }
        }
    }
    for (i, j) in z.comparable_pairs() {
        if !pushed[i * n + j] {
            return Some(RegEpiOrdFailure::PairNotGenerated {
                z0: z.name(i).to_owned(),
                z1: z.name(j).to_owned(),
            });
        }
    }
    None
}

pub fn is_regular_epi_ord(f: &MonotoneMap) -> bool {
    regular_epi_failure(f).is_none()
}

/// First comparable pair `(z0, z1)` of the codomain with no comparable pair
/// of preimages, if any.
pub fn stable_failure(f: &MonotoneMap) -> Option<(String, String)> {
    let z = f.cod();
    for (i, j) in z.comparable_pairs() {
        let lifted = f.fiber(i).into_iter().any(|y0| {
            f.fiber(j)
                .into_iter()
                .any(|y1| f.dom().le_idx(y0, y1))
        });
        if !lifted {
            return Some((z.name(i).to_owned(), z.name(j).to_owned()));
        }
    }
    None
}

/// Every comparable pair of the codomain lifts to a comparable pair of
/// preimages.  This is what survives pulling back along arbitrary maps.
pub fn is_stable_regular_epi_ord(f: &MonotoneMap) -> bool {
    stable_failure(f).is_none()
}

/// All 3-chains of a relation, fully distinct ones first so that a
/// reported witness is as informative as possible, then lexicographic.
pub(crate) fn chains_witness_order(len: usize, le: impl Fn(usize, usize) -> bool) -> Vec<[usize; 3]> {
    let mut chains: Vec<[usize; 3]> = Vec::new();
    for i in 0..len {
        for j in 0..len {
            if !le(i, j) {
                continue;
            }
            for k in 0..len {
                if le(j, k) {
                    chains.push([i, j, k]);
                }
            }
        }
    }
    let repeats = |c: &[usize; 3]| {
        usize::from(c[0] == c[1]) + usize::from(c[1] == c[2]) + usize::from(c[0] == c[2])
    };
    chains.sort_by_key(|c| (repeats(c), *c));
    chains
}

/// First 3-chain `z0 <= z1 <= z2` of the codomain with no lifted 3-chain of
/// preimages, if any.
pub fn effective_descent_failure(f: &MonotoneMap) -> Option<[String; 3]> {
    let z = f.cod();
    let dom = f.dom();
    for [i, j, k] in chains_witness_order(z.len(), |i, j| z.le_idx(i, j)) {
        let lifted = f.fiber(i).into_iter().any(|y0| {
            f.fiber(j).into_iter().any(|y1| {
                dom.le_idx(y0, y1) && f.fiber(k).into_iter().any(|y2| dom.le_idx(y1, y2))
            })
        });
        if !lifted {
            return Some([
                z.name(i).to_owned(),
                z.name(j).to_owned(),
                z.name(k).to_owned(),
            ]);
        }
    }
    None
}

/// Every 3-chain of the codomain lifts to a 3-chain of preimages.
pub fn is_effective_descent_ord(f: &MonotoneMap) -> bool {
    effective_descent_failure(f).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{c2, c3, fzz, singleton, zigzag};
    use crate::finord::preorder::FinPreorder;

    #[test]
    fn identity_is_everything() {
        let id = MonotoneMap::identity(&c3());
        assert!(is_regular_epi_ord(&id));
        assert!(is_stable_regular_epi_ord(&id));
        assert!(is_effective_descent_ord(&id));
    }

    #[test]
    fn non_surjective_map_reports_missing_element() {
        let f = MonotoneMap::new(singleton(), c2(), &[("pt", "0")]).unwrap();
        assert_eq!(
            regular_epi_failure(&f),
            Some(RegEpiOrdFailure::NotSurjective { z: "1".into() })
        );
    }

    #[test]
    fn discrete_cover_of_chain_is_not_regular_epi() {
        let disc = FinPreorder::discrete(&["0", "1"]).unwrap();
        let f = MonotoneMap::from_indices(disc, c2(), vec![0, 1]).unwrap();
        assert_eq!(
            regular_epi_failure(&f),
            Some(RegEpiOrdFailure::PairNotGenerated {
                z0: "0".into(),
                z1: "1".into()
            })
        );
    }

    #[test]
    fn zigzag_cover_generates_the_chain() {
        // The two generating pairs push to z0<=z1 and z1<=z2, whose closure
        // is the whole chain order.
        assert!(is_regular_epi_ord(&fzz()));
    }

    #[test]
    fn zigzag_cover_fails_pair_lifting_at_the_long_pair() {
        // The only preimages of z0 and z2 sit on different legs, so the
        // pair (z0, z2) cannot lift even though each covering pair does.
        assert_eq!(stable_failure(&fzz()), Some(("z0".into(), "z2".into())));
    }

    #[test]
    fn zigzag_cover_fails_chain_lifting() {
        assert_eq!(
            effective_descent_failure(&fzz()),
            Some(["z0".into(), "z1".into(), "z2".into()])
        );
    }

    #[test]
    fn folded_double_chain_is_effective() {
        // Same zigzag codomain trick but with a genuine 3-chain upstairs.
        let dom = FinPreorder::new(
            &["a0", "a1", "a2", "b1"],
            &[("a0", "a1"), ("a1", "a2"), ("b1", "a2")],
        )
        .unwrap();
        let f = MonotoneMap::new(
            dom,
            c3(),
            &[("a0", "z0"), ("a1", "z1"), ("b1", "z1"), ("a2", "z2")],
        )
        .unwrap();
        assert!(is_effective_descent_ord(&f));
        assert!(is_stable_regular_epi_ord(&f));
    }

    #[test]
    fn implication_chain_holds_on_small_sweep() {
        // chain lifting => pair lifting => regular epi, over every monotone
        // endo-ish map among small fixtures.
        let shapes = [c2(), c3(), zigzag(), singleton()];
        for dom in &shapes {
            for cod in &shapes {
                for f in crate::finord::map::monotone_maps(dom, cod) {
                    if is_effective_descent_ord(&f) {
                        assert!(is_stable_regular_epi_ord(&f), "{:?}", f.mapping());
                    }
                    if is_stable_regular_epi_ord(&f) {
                        assert!(is_regular_epi_ord(&f), "{:?}", f.mapping());
                    }
                }
            }
        }
    }
}

use serde::Serialize;

use crate::finord::epis::chains_witness_order;
use crate::presheaf::data::{NatTrans, ValueKind};

/// Witness for a failing pointwise descent condition, naming the level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LevelWitness {
    MissingElement {
        level: String,
        elem: String,
    },
    MissingPair {
        level: String,
        z0: String,
        z1: String,
    },
    MissingChain {
        level: String,
        chain: [String; 3],
    },
}

/// The pointwise descent check, dispatched on the weaker of the two value
/// kinds: surjectivity on elements (Gph), surjectivity on related pairs
/// (Rel), or chain lifting (Ord), each at every level.
pub fn presheaf_descent_failure(alpha: &NatTrans) -> Option<LevelWitness> {
    let kind = alpha.src().kind().min(alpha.tgt().kind());
    let base = alpha.src().base();
    for x in 0..base.len() {
        let src = alpha.src().level(x);
        let tgt = alpha.tgt().level(x);
        let comp = alpha.component(x);
        match kind {
            ValueKind::Gph => {
                for z in 0..tgt.len() {
                    if !comp.contains(&z) {
                        return Some(LevelWitness::MissingElement {
                            level: base.name(x).to_string(),
                            elem: tgt.name(z).to_string(),
                        });
                    }
                }
            }
            ValueKind::Rel => {
                for z0 in 0..tgt.len() {
                    for z1 in 0..tgt.len() {
                        if !tgt.related_idx(z0, z1) {
                            continue;
                        }
                        let lifted = (0..src.len()).any(|y0| {
                            (0..src.len()).any(|y1| {
                                src.related_idx(y0, y1) && comp[y0] == z0 && comp[y1] == z1
                            })
                        });
                        if !lifted {
                            return Some(LevelWitness::MissingPair {
                                level: base.name(x).to_string(),
                                z0: tgt.name(z0).to_string(),
                                z1: tgt.name(z1).to_string(),
                            });
                        }
                    }
                }
            }
            ValueKind::Ord => {
                let order = chains_witness_order(tgt.len(), |i, j| tgt.related_idx(i, j));
                for [z0, z1, z2] in order {
                    let lifted = (0..src.len()).any(|y0| {
                        comp[y0] == z0
                            && (0..src.len()).any(|y1| {
                                comp[y1] == z1
                                    && src.related_idx(y0, y1)
                                    && (0..src.len())
                                        .any(|y2| comp[y2] == z2 && src.related_idx(y1, y2))
                            })
                    });
                    if !lifted {
                        return Some(LevelWitness::MissingChain {
                            level: base.name(x).to_string(),
                            chain: [
                                tgt.name(z0).to_string(),
                                tgt.name(z1).to_string(),
                                tgt.name(z2).to_string(),
                            ],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn descent_check_presheaf(alpha: &NatTrans) -> bool {
    presheaf_descent_failure(alpha).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{base_c2, fzz_lax, gap_morphism};
    use crate::presheaf::data::{FinPresheaf, Level};
    use crate::presheaf::pi::{pi_morphism, pi_object};
    use std::collections::BTreeMap;

    #[test]
    fn identity_passes_all_kinds() {
        let f = gap_morphism();
        let g = pi_object(f.src());
        assert!(descent_check_presheaf(&NatTrans::identity(&g)));
    }

    #[test]
    fn fzz_fails_at_the_bottom_level() {
        let alpha = pi_morphism(&fzz_lax());
        let witness = presheaf_descent_failure(&alpha).unwrap();
        assert_eq!(
            witness,
            LevelWitness::MissingChain {
                level: "z0".into(),
                chain: ["z0".into(), "z1".into(), "z2".into()],
            }
        );
    }

    #[test]
    fn gap_morphism_fails_above() {
        // The target level at top is {pt} while the source level is empty,
        // so even plain surjectivity fails there.
        let alpha = pi_morphism(&gap_morphism());
        let witness = presheaf_descent_failure(&alpha).unwrap();
        assert_eq!(
            witness,
            LevelWitness::MissingChain {
                level: "top".into(),
                chain: ["pt".into(), "pt".into(), "pt".into()],
            }
        );
    }

    #[test]
    fn rel_valued_edge_surjectivity() {
        // Source: two parallel copies of an edge-free pair mapping onto a
        // related pair downstairs; one edge has no lift.
        let base = base_c2();
        let tgt_level =
            Level::new(&["z0", "z1"], &[("z0", "z0"), ("z1", "z1"), ("z0", "z1")]).unwrap();
        let src_level = Level::new(&["y0", "y1"], &[("y0", "y0"), ("y1", "y1")]).unwrap();
        let empty = Level::new::<&str>(&[], &[]).unwrap();
        let mut r = BTreeMap::new();
        r.insert((1usize, 0usize), vec![]);
        let tgt = FinPresheaf::new(
            base.clone(),
            ValueKind::Rel,
            vec![tgt_level, empty.clone()],
            r.clone(),
        )
        .unwrap();
        let src =
            FinPresheaf::new(base, ValueKind::Rel, vec![src_level, empty], r).unwrap();
        let alpha = NatTrans::new(src, tgt, vec![vec![0, 1], vec![]]).unwrap();
        let witness = presheaf_descent_failure(&alpha).unwrap();
        assert_eq!(
            witness,
            LevelWitness::MissingPair {
                level: "0".into(),
                z0: "z0".into(),
                z1: "z1".into(),
            }
        );
    }
}

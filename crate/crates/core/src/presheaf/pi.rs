use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::finord::MonotoneMap;
use crate::laxcomma::{LaxMorphism, LaxObject};
use crate::presheaf::data::{FinPresheaf, Level, NatTrans, ValueKind};

/// The presheaf of an object: level at `x` is the up-set
/// `{y : x <= a(y)}` of the carrier, restrictions are inclusions.
pub fn pi_object(a: &LaxObject) -> FinPresheaf {
    let base = a.base();
    let carrier = a.total();
    // Carrier indices of each level, in carrier (= sorted name) order.
    let members: Vec<Vec<usize>> = (0..base.len())
        .map(|x| {
            (0..carrier.len())
                .filter(|&y| base.le_idx(x, a.value_idx(y)))
                .collect()
        })
        .collect();
    let levels: Vec<Level> = members
        .iter()
        .map(|m| {
            let names: Vec<String> = m.iter().map(|&y| carrier.name(y).to_string()).collect();
            let mut rel = vec![false; m.len() * m.len()];
            for (i, &yi) in m.iter().enumerate() {
                for (j, &yj) in m.iter().enumerate() {
                    rel[i * m.len() + j] = carrier.le_idx(yi, yj);
                }
            }
            let (level, _) = Level::from_parts(names, rel).expect("carrier names are distinct");
            level
        })
        .collect();
    let mut restrictions = BTreeMap::new();
    for upper in 0..base.len() {
        for lower in 0..base.len() {
            if upper != lower && base.le_idx(lower, upper) {
                // Members at `upper` form a subset of the members at
                // `lower`; both lists are in carrier order.
                let map = members[upper]
                    .iter()
                    .map(|y| {
                        members[lower]
                            .binary_search(y)
                            .expect("levels shrink upward")
                    })
                    .collect();
                restrictions.insert((upper, lower), map);
            }
        }
    }
    FinPresheaf::new(base.clone(), ValueKind::Ord, levels, restrictions)
        .expect("restricted orders are functorial")
}

/// The presheaf morphism of a lax morphism: levelwise (co)restriction of
/// the underlying map.  Well defined because `a <= b o f`.
pub fn pi_morphism(f: &LaxMorphism) -> NatTrans {
    let src = pi_object(f.src());
    let tgt = pi_object(f.tgt());
    let components: Vec<Vec<usize>> = (0..f.base().len())
        .map(|x| {
            src.level(x)
                .elems()
                .iter()
                .map(|y| {
                    let z = f.apply(y);
                    tgt.level(x)
                        .index_of(z)
                        .expect("images stay at the same level")
                })
                .collect()
        })
        .collect();
    NatTrans::new(src, tgt, components).expect("corestriction is natural")
}

/// Why a presheaf fails to be (isomorphic to) the presheaf of an object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
pub enum ReprFailure {
    #[error("level `{level}` is not a preorder")]
    NotOrdValued { level: String },
    #[error("injectivity: `{w0}` and `{w1}` at level `{level}` restrict to the same element")]
    NotInjective { level: String, w0: String, w1: String },
    #[error(
        "embedding: `{u}` <= `{v}` at the bottom level but not at level `{level}`"
    )]
    NotEmbedded { level: String, u: String, v: String },
    #[error(
        "up-closure: level `{level}` contains `{member}` but not `{above}` above it"
    )]
    NotUpClosed {
        level: String,
        member: String,
        above: String,
    },
    #[error("join-closure: `{member}` is missing from the level of its join `{join}`")]
    JoinGap { member: String, join: String },
}

/// Decides whether `g` is the presheaf of an object and recovers that
/// object when it is.
///
/// The criterion: all levels are preorders; every restriction to the
/// bottom level is an order-embedding with up-closed image; and each
/// bottom element belongs to the level of the join of the levels it
/// appears in.  The recovered object is `W = g(bottom)` with structure
/// `d(w)` that join.
pub fn representable_as_pi(g: &FinPresheaf) -> std::result::Result<LaxObject, ReprFailure> {
    let base = g.base();
    for x in 0..base.len() {
        if !g.level(x).satisfies(ValueKind::Ord) {
            return Err(ReprFailure::NotOrdValued {
                level: base.name(x).to_string(),
            });
        }
    }
    let bot = base.bottom_idx();
    let bottom = g.level(bot);
    // images[x][i] = bottom index of the i-th element of level x.
    let mut images: Vec<Vec<usize>> = Vec::with_capacity(base.len());
    for x in 0..base.len() {
        let r = g.restriction(x, bot);
        let level = g.level(x);
        for i in 0..level.len() {
            for j in 0..level.len() {
                if i != j && r[i] == r[j] {
                    return Err(ReprFailure::NotInjective {
                        level: base.name(x).to_string(),
                        w0: level.name(i).to_string(),
                        w1: level.name(j).to_string(),
                    });
                }
                if bottom.related_idx(r[i], r[j]) && !level.related_idx(i, j) {
                    return Err(ReprFailure::NotEmbedded {
                        level: base.name(x).to_string(),
                        u: level.name(i).to_string(),
                        v: level.name(j).to_string(),
                    });
                }
            }
        }
        images.push(r);
    }
    for (x, members) in images.iter().enumerate() {
        let in_level = {
            let mut flags = vec![false; bottom.len()];
            for &w in members {
                flags[w] = true;
            }
            flags
        };
        for &w in members {
            for (above, &present) in in_level.iter().enumerate() {
                if bottom.related_idx(w, above) && !present {
                    return Err(ReprFailure::NotUpClosed {
                        level: base.name(x).to_string(),
                        member: bottom.name(w).to_string(),
                        above: bottom.name(above).to_string(),
                    });
                }
            }
        }
    }
    // d(w) = join of the base elements whose level contains w.
    let mut structure = vec![base.bottom_idx(); bottom.len()];
    for w in 0..bottom.len() {
        let appears = (0..base.len()).filter(|&x| images[x].contains(&w));
        structure[w] = base.join_all(appears);
        if !images[structure[w]].contains(&w) {
            return Err(ReprFailure::JoinGap {
                member: bottom.name(w).to_string(),
                join: base.name(structure[w]).to_string(),
            });
        }
    }
    let carrier = crate::finord::FinPreorder::new(
        bottom.elems(),
        &(0..bottom.len())
            .flat_map(|i| (0..bottom.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| bottom.related_idx(i, j))
            .map(|(i, j)| (bottom.name(i).to_string(), bottom.name(j).to_string()))
            .collect::<Vec<_>>(),
    )
    .expect("bottom level is a preorder");
    let map = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), structure)
        .expect("up-closure makes the join monotone");
    Ok(LaxObject::new(base.clone(), carrier, map).expect("join is a structure map"))
}

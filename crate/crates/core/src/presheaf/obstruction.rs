use std::collections::BTreeMap;

use serde::Serialize;

use crate::finord::preorder::all_preorders;
use crate::finord::{BasePoset, FinPreorder};
use crate::laxcomma::LaxMorphism;
use crate::presheaf::data::{FinPresheaf, Level, NatTrans, ValueKind};
use crate::presheaf::descent::presheaf_descent_failure;
use crate::presheaf::pi::{pi_morphism, pi_object, representable_as_pi, ReprFailure};
use crate::presheaf::pullback::pullback_presheaf;
use crate::{Error, Result};

/// A presheaf `G` together with a transformation into the presheaf of the
/// target whose pullback against the morphism lands back in the image of
/// the embedding while `G` itself does not: a proof that the morphism is
/// not an effective quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionCertificate {
    /// 1-based position in the deterministic candidate stream; a later run
    /// can resume past it by skipping candidates up to this index.
    pub cursor: u64,
    /// Carrier of `G` at the bottom level.
    pub carrier: Vec<String>,
    /// Non-reflexive related pairs of the carrier.
    pub order: Vec<(String, String)>,
    /// Members of `G` at each base element.
    pub levels: BTreeMap<String, Vec<String>>,
    /// The transformation into the target presheaf, at the bottom level.
    pub beta: BTreeMap<String, String>,
    /// Why `G` is not the presheaf of any object.
    pub witness: ReprFailure,
}

/// Bounded exhaustive search for obstruction certificates.
///
/// Candidates are: a preorder `W` of size at most `bound` (the carrier at
/// the bottom level), a monotone assignment of a down-set of the base to
/// each carrier element (its levels of membership), and a compatible
/// transformation into the target presheaf.  Only candidates that are not
/// themselves presheaves of objects can certify anything, and of those
/// only the ones whose pullback against the morphism is such a presheaf.
///
/// Requires the pointwise descent condition on the morphism's presheaf;
/// without it the criterion this search realizes does not decide anything,
/// so the operation refuses.
pub fn obstruction_search(f: &LaxMorphism, bound: usize) -> Result<Vec<ObstructionCertificate>> {
    let alpha = pi_morphism(f);
    if let Some(witness) = presheaf_descent_failure(&alpha) {
        return Err(Error::Precondition(format!(
            "pointwise descent fails for the morphism's presheaf: {:?}",
            witness
        )));
    }
    let base = f.base();
    let target = pi_object(f.tgt());
    let z = f.tgt().total();
    let b_vals: Vec<usize> = (0..z.len()).map(|i| f.tgt().value_idx(i)).collect();
    let down_sets = down_sets_with_bottom(base);
    let mut certificates = Vec::new();
    let mut cursor: u64 = 0;
    for n in 1..=bound {
        for w in all_preorders("w", n) {
            search_memberships(
                &SearchCtx {
                    base,
                    alpha: &alpha,
                    target: &target,
                    z,
                    b_vals: &b_vals,
                    down_sets: &down_sets,
                },
                &w,
                &mut Vec::with_capacity(n),
                &mut cursor,
                &mut certificates,
            );
        }
    }
    Ok(certificates)
}

struct SearchCtx<'a> {
    base: &'a BasePoset,
    alpha: &'a NatTrans,
    target: &'a FinPresheaf,
    z: &'a FinPreorder,
    b_vals: &'a [usize],
    down_sets: &'a [u32],
}

/// All down-closed subsets of the base containing the bottom, as bit
/// masks in increasing numeric order.
fn down_sets_with_bottom(base: &BasePoset) -> Vec<u32> {
    let n = base.len();
    let bot = base.bottom_idx();
    (0..1u32 << n)
        .filter(|mask| {
            mask >> bot & 1 == 1
                && (0..n).all(|i| {
                    mask >> i & 1 == 0 || (0..n).all(|j| !base.le_idx(j, i) || mask >> j & 1 == 1)
                })
        })
        .collect()
}

fn search_memberships(
    ctx: &SearchCtx,
    w: &FinPreorder,
    chosen: &mut Vec<u32>,
    cursor: &mut u64,
    certificates: &mut Vec<ObstructionCertificate>,
) {
    let n = w.len();
    if chosen.len() == n {
        try_betas(ctx, w, chosen, cursor, certificates);
        return;
    }
    let i = chosen.len();
    for &mask in ctx.down_sets {
        // Membership must grow along the carrier order in both directions
        // against everything already placed.
        let ok = (0..i).all(|j| {
            (!w.le_idx(j, i) || chosen[j] & !mask == 0)
                && (!w.le_idx(i, j) || mask & !chosen[j] == 0)
        });
        if ok {
            chosen.push(mask);
            search_memberships(ctx, w, chosen, cursor, certificates);
            chosen.pop();
        }
    }
}

fn try_betas(
    ctx: &SearchCtx,
    w: &FinPreorder,
    members: &[u32],
    cursor: &mut u64,
    certificates: &mut Vec<ObstructionCertificate>,
) {
    let n = w.len();
    // Joins of the membership sets; `G` is a presheaf of an object exactly
    // when every join stays a member, so skip those candidates.
    let joins: Vec<usize> = members
        .iter()
        .map(|&mask| {
            ctx.base
                .join_all((0..ctx.base.len()).filter(|&x| mask >> x & 1 == 1))
        })
        .collect();
    if (0..n).all(|i| members[i] >> joins[i] & 1 == 1) {
        return;
    }
    let g = build_candidate(ctx.base, w, members);
    let witness = representable_as_pi(&g).expect_err("a non-principal member remains");
    let mut beta = Vec::with_capacity(n);
    enumerate_betas(ctx, w, members, &joins, &g, &witness, &mut beta, 0, cursor, certificates);
}

#[allow(clippy::too_many_arguments)]
fn enumerate_betas(
    ctx: &SearchCtx,
    w: &FinPreorder,
    members: &[u32],
    joins: &[usize],
    g: &FinPresheaf,
    witness: &ReprFailure,
    beta: &mut Vec<usize>,
    next: usize,
    cursor: &mut u64,
    certificates: &mut Vec<ObstructionCertificate>,
) {
    let n = w.len();
    if next == n {
        *cursor += 1;
        if let Some(cert) = test_candidate(ctx, w, members, g, witness, beta, *cursor) {
            certificates.push(cert);
        }
        return;
    }
    for cand in 0..ctx.z.len() {
        let monotone = (0..next).all(|j| {
            (!w.le_idx(j, next) || ctx.z.le_idx(beta[j], cand))
                && (!w.le_idx(next, j) || ctx.z.le_idx(cand, beta[j]))
        });
        // The component must stay inside the target's levels: everything
        // below the join of the membership set must sit below the target
        // structure value.
        if monotone && ctx.base.le_idx(joins[next], ctx.b_vals[cand]) {
            beta.push(cand);
            enumerate_betas(
                ctx,
                w,
                members,
                joins,
                g,
                witness,
                beta,
                next + 1,
                cursor,
                certificates,
            );
            beta.pop();
        }
    }
}

fn build_candidate(base: &BasePoset, w: &FinPreorder, members: &[u32]) -> FinPresheaf {
    let n = w.len();
    let level_members: Vec<Vec<usize>> = (0..base.len())
        .map(|x| (0..n).filter(|&i| members[i] >> x & 1 == 1).collect())
        .collect();
    let levels: Vec<Level> = level_members
        .iter()
        .map(|m| {
            let names: Vec<String> = m.iter().map(|&i| w.name(i).to_string()).collect();
            let mut rel = vec![false; m.len() * m.len()];
            for (p, &i) in m.iter().enumerate() {
                for (q, &j) in m.iter().enumerate() {
                    rel[p * m.len() + q] = w.le_idx(i, j);
                }
            }
            Level::from_parts(names, rel).expect("carrier names are distinct").0
        })
        .collect();
    let mut restrictions = BTreeMap::new();
    for upper in 0..base.len() {
        for lower in 0..base.len() {
            if upper != lower && base.le_idx(lower, upper) {
                let map = level_members[upper]
                    .iter()
                    .map(|i| {
                        level_members[lower]
                            .binary_search(i)
                            .expect("membership sets are down-closed")
                    })
                    .collect();
                restrictions.insert((upper, lower), map);
            }
        }
    }
    FinPresheaf::new(base.clone(), ValueKind::Ord, levels, restrictions)
        .expect("sub-level presheaves are functorial")
}

fn test_candidate(
    ctx: &SearchCtx,
    w: &FinPreorder,
    members: &[u32],
    g: &FinPresheaf,
    witness: &ReprFailure,
    beta: &[usize],
    cursor: u64,
) -> Option<ObstructionCertificate> {
    let components: Vec<Vec<usize>> = (0..ctx.base.len())
        .map(|x| {
            g.level(x)
                .elems()
                .iter()
                .map(|name| {
                    let i = w.index_of(name).expect("level members come from the carrier");
                    ctx.target
                        .level(x)
                        .index_of(ctx.z.name(beta[i]))
                        .expect("beta lands inside the level")
                })
                .collect()
        })
        .collect();
    let beta_nt = NatTrans::new(g.clone(), ctx.target.clone(), components)
        .expect("level-compatible monotone maps are natural");
    let (pullback, _, _) =
        pullback_presheaf(ctx.alpha, &beta_nt).expect("common codomain by construction");
    if representable_as_pi(&pullback).is_err() {
        return None;
    }
    let n = w.len();
    Some(ObstructionCertificate {
        cursor,
        carrier: w.elems().to_vec(),
        order: w
            .strict_pairs()
            .iter()
            .map(|&(i, j)| (w.name(i).to_string(), w.name(j).to_string()))
            .collect(),
        levels: (0..ctx.base.len())
            .map(|x| {
                (
                    ctx.base.name(x).to_string(),
                    (0..n)
                        .filter(|&i| members[i] >> x & 1 == 1)
                        .map(|i| w.name(i).to_string())
                        .collect(),
                )
            })
            .collect(),
        beta: (0..n)
            .map(|i| (w.name(i).to_string(), ctx.z.name(beta[i]).to_string()))
            .collect(),
        witness: witness.clone(),
    })
}

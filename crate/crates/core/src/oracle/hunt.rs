//! Randomized search for quotients in the open territory between the
//! known necessary conditions for effectiveness and the known sufficient
//! one: stable regular epi, chain lifting downstairs, but no pinned
//! lifting.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::descent::{descent_verdict, DescentEvidence};
use crate::laxcomma::object::LaxMorphism;
use crate::oracle::gen::{GenConfig, Generator};

/// A morphism caught by the gap filter, with the evidence that put it
/// there: stable regular epi, chains lift underneath, pinned lifting
/// fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapInstance {
    pub morphism: LaxMorphism,
    pub evidence: DescentEvidence,
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

fn encode(f: &LaxMorphism, sp: &[usize], tp: &[usize]) -> Vec<usize> {
    let y = f.src().total();
    let z = f.tgt().total();
    let base = f.base().order();
    let mut v = Vec::with_capacity(
        2 + base.len() * base.len() + y.len() * (y.len() + 2) + z.len() * (z.len() + 1),
    );
    v.push(y.len());
    v.push(z.len());
    for i in 0..base.len() {
        for j in 0..base.len() {
            v.push(base.le_idx(i, j) as usize);
        }
    }
    for &i in sp {
        for &j in sp {
            v.push(y.le_idx(i, j) as usize);
        }
    }
    for &i in tp {
        for &j in tp {
            v.push(z.le_idx(i, j) as usize);
        }
    }
    for &i in sp {
        v.push(f.src().value_idx(i));
    }
    for &i in tp {
        v.push(f.tgt().value_idx(i));
    }
    let mut tinv = vec![0usize; z.len()];
    for (pos, &orig) in tp.iter().enumerate() {
        tinv[orig] = pos;
    }
    for &i in sp {
        v.push(tinv[f.map().apply_idx(i)]);
    }
    v
}

/// Minimal relabeling of the morphism: equal canonical forms mean the two
/// morphisms differ only by renaming carrier elements.
pub fn canonical_form(f: &LaxMorphism) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for sp in all_perms(f.src().total().len()) {
        for tp in all_perms(f.tgt().total().len()) {
            let code = encode(f, &sp, &tp);
            if best.as_ref().map(|b| code < *b).unwrap_or(true) {
                best = Some(code);
            }
        }
    }
    best.expect("the identity relabeling always encodes")
}

fn in_gap(e: &DescentEvidence) -> bool {
    e.stable_regepi_lax && e.ed_ord && !e.ped
}

/// Draws `budget` morphisms from the generator, keeps the ones in the
/// gap, deduplicates up to isomorphism, and returns them sorted by
/// canonical form so identical configurations give identical output.
pub fn gap_hunter(cfg: &GenConfig, budget: u64) -> Vec<GapInstance> {
    let mut gen = Generator::new(cfg.clone());
    let mut seen = BTreeSet::new();
    let mut found = Vec::new();
    for _ in 0..budget {
        let base = gen.base();
        let Ok(f) = gen.lax_morphism(&base) else {
            // Rejection sampling ran dry for this draw; move on.
            continue;
        };
        let verdict = descent_verdict(&f);
        if !in_gap(&verdict.evidence) {
            continue;
        }
        let key = canonical_form(&f);
        if seen.insert(key.clone()) {
            found.push((
                key,
                GapInstance {
                    morphism: f,
                    evidence: verdict.evidence,
                },
            ));
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found.into_iter().map(|(_, g)| g).collect()
}

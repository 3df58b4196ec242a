//! Brute-force verification of universal properties by mediator
//! enumeration.  Nothing here reuses the closed-form constructions: cones
//! and cocones are enumerated over a probe space of competing objects, and
//! the mediating morphism is searched for among all monotone maps.

use serde::Serialize;

use crate::finord::map::MonotoneMap;
use crate::finord::preorder::FinPreorder;
use crate::laxcomma::exponential::{curry, uncurry, LaxExponential};
use crate::laxcomma::limits::product_lax;
use crate::laxcomma::object::{hom, hom_preorder, LaxMorphism, LaxObject};
use crate::laxcomma::tensors::Power;
use crate::oracle::enumerate::probe_objects;

/// A failed universal property: which requirement broke, on which
/// competing cone, with the offending counts or points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalViolation {
    pub stage: String,
    pub probe: String,
    pub detail: String,
}

fn violation(stage: &str, probe: String, detail: String) -> Option<UniversalViolation> {
    Some(UniversalViolation {
        stage: stage.to_owned(),
        probe,
        detail,
    })
}

fn describe(o: &LaxObject) -> String {
    let order: Vec<String> = o
        .total()
        .strict_pairs()
        .iter()
        .map(|&(i, j)| format!("{}<={}", o.total().name(i), o.total().name(j)))
        .collect();
    let values: Vec<String> = o
        .total()
        .elems()
        .iter()
        .enumerate()
        .map(|(i, e)| format!("{e}:{}", o.base().name(o.value_idx(i))))
        .collect();
    format!("[{}] [{}]", order.join(" "), values.join(" "))
}

/// Visits the image vector of every monotone map `dom -> cod` without
/// materializing map values.
fn for_each_monotone(dom: &FinPreorder, cod: &FinPreorder, visit: &mut impl FnMut(&[usize])) {
    if dom.is_empty() {
        visit(&[]);
        return;
    }
    if cod.is_empty() {
        return;
    }
    fn rec(
        dom: &FinPreorder,
        cod: &FinPreorder,
        partial: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        let at = partial.len();
        if at == dom.len() {
            visit(partial);
            return;
        }
        'cand: for c in 0..cod.len() {
            for (prev, &pc) in partial.iter().enumerate() {
                if dom.le_idx(prev, at) && !cod.le_idx(pc, c) {
                    continue 'cand;
                }
                if dom.le_idx(at, prev) && !cod.le_idx(c, pc) {
                    continue 'cand;
                }
            }
            partial.push(c);
            rec(dom, cod, partial, visit);
            partial.pop();
        }
    }
    rec(dom, cod, &mut Vec::with_capacity(dom.len()), visit);
}

/// The lax triangle for a raw image vector.
fn is_lax(src: &LaxObject, tgt: &LaxObject, map: &[usize]) -> bool {
    let base = src.base();
    map.iter()
        .enumerate()
        .all(|(y, &fy)| base.le_idx(src.value_idx(y), tgt.value_idx(fy)))
}

/// All lax morphisms `src -> tgt` as image vectors.
fn lax_maps(src: &LaxObject, tgt: &LaxObject) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_monotone(src.total(), tgt.total(), &mut |m| {
        if is_lax(src, tgt, m) {
            out.push(m.to_vec());
        }
    });
    out
}

fn print_map(m: &[usize], cod: &FinPreorder) -> String {
    let parts: Vec<&str> = m.iter().map(|&i| cod.name(i)).collect();
    format!("[{}]", parts.join("|"))
}

/// Every way of choosing one element from each list.
fn for_each_choice<T>(lists: &[Vec<T>], visit: &mut impl FnMut(&[&T]) -> bool) -> bool {
    fn rec<'a, T>(
        lists: &'a [Vec<T>],
        chosen: &mut Vec<&'a T>,
        visit: &mut impl FnMut(&[&T]) -> bool,
    ) -> bool {
        if chosen.len() == lists.len() {
            return visit(chosen);
        }
        for item in &lists[chosen.len()] {
            chosen.push(item);
            if !rec(lists, chosen, visit) {
                return false;
            }
            chosen.pop();
        }
        true
    }
    rec(lists, &mut Vec::with_capacity(lists.len()), visit)
}

/// Initial-lift verification over an explicit probe space: every map that
/// factors the whole family through its targets must already be a morphism
/// into the lift, and the family itself must pass through it.
pub fn verify_initial_lift_with(
    lift: &LaxObject,
    family: &[(MonotoneMap, LaxObject)],
    probes: &[LaxObject],
) -> Option<UniversalViolation> {
    for (f, tgt) in family {
        if !is_lax(lift, tgt, f.mapping()) {
            return violation(
                "family-through-lift",
                describe(lift),
                format!("map {} breaks the triangle", print_map(f.mapping(), tgt.total())),
            );
        }
    }
    for probe in probes {
        let mut bad: Option<Vec<usize>> = None;
        for_each_monotone(probe.total(), lift.total(), &mut |u| {
            if bad.is_some() {
                return;
            }
            let factors = family.iter().all(|(f, tgt)| {
                u.iter().enumerate().all(|(w, &uw)| {
                    probe
                        .base()
                        .le_idx(probe.value_idx(w), tgt.value_idx(f.apply_idx(uw)))
                })
            });
            if factors && !is_lax(probe, lift, u) {
                bad = Some(u.to_vec());
            }
        });
        if let Some(u) = bad {
            return violation(
                "initiality",
                describe(probe),
                format!(
                    "{} factors through every family target but not through the lift",
                    print_map(&u, lift.total())
                ),
            );
        }
    }
    None
}

pub fn verify_initial_lift(
    lift: &LaxObject,
    family: &[(MonotoneMap, LaxObject)],
    bound: usize,
) -> Option<UniversalViolation> {
    verify_initial_lift_with(lift, family, &probe_objects(lift.base(), bound))
}

/// Counts lax mediators `probe -> target` satisfying a pointwise
/// post-composition constraint, stopping at two.
fn count_mediators(
    probe: &LaxObject,
    target: &LaxObject,
    ok: &mut impl FnMut(&[usize]) -> bool,
) -> usize {
    let mut count = 0;
    for_each_monotone(probe.total(), target.total(), &mut |m| {
        if count < 2 && is_lax(probe, target, m) && ok(m) {
            count += 1;
        }
    });
    count
}

pub fn verify_product(
    prod: &LaxObject,
    projections: &[MonotoneMap],
    factors: &[&LaxObject],
    bound: usize,
) -> Option<UniversalViolation> {
    for (k, p) in projections.iter().enumerate() {
        if !is_lax(prod, factors[k], p.mapping()) {
            return violation(
                "projection",
                describe(prod),
                format!("projection {k} breaks the triangle"),
            );
        }
    }
    for probe in probe_objects(prod.base(), bound) {
        let legs: Vec<Vec<Vec<usize>>> =
            factors.iter().map(|f| lax_maps(&probe, f)).collect();
        let mut result = None;
        for_each_choice(&legs, &mut |cone| {
            let n = count_mediators(&probe, prod, &mut |m| {
                cone.iter()
                    .zip(projections)
                    .all(|(leg, p)| m.iter().enumerate().all(|(w, &mw)| p.apply_idx(mw) == leg[w]))
            });
            if n != 1 {
                result = violation(
                    "mediator",
                    describe(&probe),
                    format!("cone has {n} mediators (want 1)"),
                );
                return false;
            }
            true
        });
        if result.is_some() {
            return result;
        }
    }
    None
}

pub fn verify_coproduct(
    sum: &LaxObject,
    injections: &[MonotoneMap],
    summands: &[&LaxObject],
    bound: usize,
) -> Option<UniversalViolation> {
    for (k, i) in injections.iter().enumerate() {
        if !is_lax(summands[k], sum, i.mapping()) {
            return violation(
                "injection",
                describe(sum),
                format!("injection {k} breaks the triangle"),
            );
        }
    }
    for probe in probe_objects(sum.base(), bound) {
        let legs: Vec<Vec<Vec<usize>>> =
            summands.iter().map(|s| lax_maps(s, &probe)).collect();
        let mut result = None;
        for_each_choice(&legs, &mut |cocone| {
            let n = count_mediators(sum, &probe, &mut |m| {
                cocone.iter().zip(injections).all(|(leg, inj)| {
                    leg.iter()
                        .enumerate()
                        .all(|(y, &ly)| m[inj.apply_idx(y)] == ly)
                })
            });
            if n != 1 {
                result = violation(
                    "mediator",
                    describe(&probe),
                    format!("cocone has {n} mediators (want 1)"),
                );
                return false;
            }
            true
        });
        if result.is_some() {
            return result;
        }
    }
    None
}

pub fn verify_equalizer(
    eq: &LaxObject,
    incl: &MonotoneMap,
    f: &LaxMorphism,
    g: &LaxMorphism,
    bound: usize,
) -> Option<UniversalViolation> {
    if !is_lax(eq, f.src(), incl.mapping()) {
        return violation("inclusion", describe(eq), "inclusion breaks the triangle".into());
    }
    if incl
        .mapping()
        .iter()
        .any(|&e| f.map().apply_idx(e) != g.map().apply_idx(e))
    {
        return violation("fork", describe(eq), "inclusion does not equalize the pair".into());
    }
    for probe in probe_objects(eq.base(), bound) {
        for u in lax_maps(&probe, f.src()) {
            if u
                .iter()
                .any(|&y| f.map().apply_idx(y) != g.map().apply_idx(y))
            {
                continue;
            }
            let n = count_mediators(&probe, eq, &mut |m| {
                m.iter().enumerate().all(|(w, &mw)| incl.apply_idx(mw) == u[w])
            });
            if n != 1 {
                return violation(
                    "mediator",
                    describe(&probe),
                    format!(
                        "fork {} has {n} mediators (want 1)",
                        print_map(&u, f.src().total())
                    ),
                );
            }
        }
    }
    None
}

pub fn verify_pullback(
    pb: &LaxObject,
    p1: &MonotoneMap,
    p2: &MonotoneMap,
    f: &LaxMorphism,
    g: &LaxMorphism,
    bound: usize,
) -> Option<UniversalViolation> {
    if !is_lax(pb, f.src(), p1.mapping()) || !is_lax(pb, g.src(), p2.mapping()) {
        return violation("projection", describe(pb), "a projection breaks the triangle".into());
    }
    if (0..pb.total().len())
        .any(|e| f.map().apply_idx(p1.apply_idx(e)) != g.map().apply_idx(p2.apply_idx(e)))
    {
        return violation("square", describe(pb), "projections do not commute over the cospan".into());
    }
    for probe in probe_objects(pb.base(), bound) {
        let lefts = lax_maps(&probe, f.src());
        let rights = lax_maps(&probe, g.src());
        for u1 in &lefts {
            for u2 in &rights {
                if u1
                    .iter()
                    .zip(u2)
                    .any(|(&a, &b)| f.map().apply_idx(a) != g.map().apply_idx(b))
                {
                    continue;
                }
                let n = count_mediators(&probe, pb, &mut |m| {
                    m.iter().enumerate().all(|(w, &mw)| {
                        p1.apply_idx(mw) == u1[w] && p2.apply_idx(mw) == u2[w]
                    })
                });
                if n != 1 {
                    return violation(
                        "mediator",
                        describe(&probe),
                        format!("commuting pair has {n} mediators (want 1)"),
                    );
                }
            }
        }
    }
    None
}

pub fn verify_coequalizer(
    q: &LaxObject,
    qmap: &MonotoneMap,
    f: &LaxMorphism,
    g: &LaxMorphism,
    bound: usize,
) -> Option<UniversalViolation> {
    if !is_lax(f.tgt(), q, qmap.mapping()) {
        return violation("quotient", describe(q), "quotient map breaks the triangle".into());
    }
    if (0..f.src().total().len())
        .any(|y| qmap.apply_idx(f.map().apply_idx(y)) != qmap.apply_idx(g.map().apply_idx(y)))
    {
        return violation("fork", describe(q), "quotient does not coequalize the pair".into());
    }
    for probe in probe_objects(q.base(), bound) {
        for u in lax_maps(f.tgt(), &probe) {
            if (0..f.src().total().len())
                .any(|y| u[f.map().apply_idx(y)] != u[g.map().apply_idx(y)])
            {
                continue;
            }
            let n = count_mediators(q, &probe, &mut |m| {
                u.iter().enumerate().all(|(z, &uz)| m[qmap.apply_idx(z)] == uz)
            });
            if n != 1 {
                return violation(
                    "mediator",
                    describe(&probe),
                    format!(
                        "cofork {} has {n} mediators (want 1)",
                        print_map(&u, probe.total())
                    ),
                );
            }
        }
    }
    None
}

/// Element of `eval_src` carrying the pair `(map index, argument index)`.
fn eval_pair_index(exp: &LaxExponential, a: &LaxObject) -> Vec<Vec<usize>> {
    let mut table = vec![vec![usize::MAX; a.total().len()]; exp.object.total().len()];
    for e in 0..exp.eval_src.total().len() {
        let fi = exp.eval_projections[0].map().apply_idx(e);
        let yi = exp.eval_projections[1].map().apply_idx(e);
        table[fi][yi] = e;
    }
    table
}

/// The defining bijection of the exponential for one probe `w`: morphisms
/// `w x a -> b` correspond one-to-one to morphisms `w -> b^a` through
/// evaluation, and the implemented transposition realizes the bijection.
pub fn verify_exponential_bijection(
    exp: &LaxExponential,
    w: &LaxObject,
    a: &LaxObject,
    b: &LaxObject,
) -> Option<UniversalViolation> {
    let base = w.base();
    let (prod, projs) = match product_lax(base, &[w, a]) {
        Ok(p) => p,
        Err(e) => return violation("product", describe(w), e.to_string()),
    };
    let hs = hom(&prod, b);
    let ms = hom(w, &exp.object);
    if hs.len() != ms.len() {
        return violation(
            "bijection",
            describe(w),
            format!("{} maps from the product, {} transposes", hs.len(), ms.len()),
        );
    }
    let pair = eval_pair_index(exp, a);
    for h in &hs {
        // eval . (m x id) must recover h for exactly one m.
        let mut matches = Vec::new();
        for (mi, m) in ms.iter().enumerate() {
            let agrees = (0..prod.total().len()).all(|e| {
                let wi = projs[0].map().apply_idx(e);
                let yi = projs[1].map().apply_idx(e);
                let ev = pair[m.map().apply_idx(wi)][yi];
                ev != usize::MAX && exp.eval.map().apply_idx(ev) == h.map().apply_idx(e)
            });
            if agrees {
                matches.push(mi);
            }
        }
        if matches.len() != 1 {
            return violation(
                "transpose-uniqueness",
                describe(w),
                format!(
                    "{} factors through evaluation {} ways (want 1)",
                    print_map(h.map().mapping(), b.total()),
                    matches.len()
                ),
            );
        }
        let c = match curry(w, a, b, h) {
            Ok(c) => c,
            Err(e) => return violation("curry", describe(w), e.to_string()),
        };
        if c.map() != ms[matches[0]].map() {
            return violation(
                "curry",
                describe(w),
                "transposition disagrees with the factoring morphism".into(),
            );
        }
        match uncurry(w, a, b, &c) {
            Ok(back) if back.map() == h.map() => {}
            Ok(_) => {
                return violation("round-trip", describe(w), "uncurry(curry(h)) != h".into())
            }
            Err(e) => return violation("uncurry", describe(w), e.to_string()),
        }
    }
    for m in &ms {
        let h = match uncurry(w, a, b, m) {
            Ok(h) => h,
            Err(e) => return violation("uncurry", describe(w), e.to_string()),
        };
        match curry(w, a, b, &h) {
            Ok(back) if back.map() == m.map() => {}
            Ok(_) => {
                return violation("round-trip", describe(w), "curry(uncurry(m)) != m".into())
            }
            Err(e) => return violation("curry", describe(w), e.to_string()),
        }
    }
    None
}

/// Naturality of transposition in the probe: for `u : w2 -> w1`,
/// transposing after reindexing equals reindexing the transpose.
pub fn verify_exponential_naturality(
    u: &LaxMorphism,
    a: &LaxObject,
    b: &LaxObject,
) -> Option<UniversalViolation> {
    let base = u.base();
    let w1 = u.tgt();
    let w2 = u.src();
    let (prod1, projs1) = match product_lax(base, &[w1, a]) {
        Ok(p) => p,
        Err(e) => return violation("product", describe(w1), e.to_string()),
    };
    let (prod2, projs2) = match product_lax(base, &[w2, a]) {
        Ok(p) => p,
        Err(e) => return violation("product", describe(w2), e.to_string()),
    };
    // u x id as an element map between the product carriers.
    let mut pair1 = vec![usize::MAX; w1.total().len() * a.total().len()];
    for e in 0..prod1.total().len() {
        let wi = projs1[0].map().apply_idx(e);
        let yi = projs1[1].map().apply_idx(e);
        pair1[wi * a.total().len() + yi] = e;
    }
    let cross: Vec<usize> = (0..prod2.total().len())
        .map(|e| {
            let wi = projs2[0].map().apply_idx(e);
            let yi = projs2[1].map().apply_idx(e);
            pair1[u.map().apply_idx(wi) * a.total().len() + yi]
        })
        .collect();
    for h in hom(&prod1, b) {
        let reindexed: Vec<usize> = cross.iter().map(|&e| h.map().apply_idx(e)).collect();
        let reindexed = match MonotoneMap::from_indices(
            prod2.total().clone(),
            b.total().clone(),
            reindexed,
        )
        .and_then(|m| LaxMorphism::new(prod2.clone(), b.clone(), m))
        {
            Ok(m) => m,
            Err(e) => return violation("reindex", describe(w2), e.to_string()),
        };
        let lhs = match curry(w2, a, b, &reindexed) {
            Ok(c) => c,
            Err(e) => return violation("curry", describe(w2), e.to_string()),
        };
        let rhs = match curry(w1, a, b, &h) {
            Ok(c) => c,
            Err(e) => return violation("curry", describe(w1), e.to_string()),
        };
        let composed: Vec<usize> = (0..w2.total().len())
            .map(|wi| rhs.map().apply_idx(u.map().apply_idx(wi)))
            .collect();
        if lhs.map().mapping() != composed.as_slice() {
            return violation(
                "naturality",
                describe(w2),
                format!(
                    "square fails for {}",
                    print_map(h.map().mapping(), b.total())
                ),
            );
        }
    }
    None
}

/// The copower bijection: morphisms out of `w (x) a` correspond to
/// monotone maps from `w` into the hom preorder, naturally in the probe.
pub fn verify_copower(
    w: &FinPreorder,
    a: &LaxObject,
    cp: &LaxObject,
    pw: &MonotoneMap,
    py: &MonotoneMap,
    bound: usize,
) -> Option<UniversalViolation> {
    let mut pair = vec![usize::MAX; w.len() * a.total().len()];
    for e in 0..cp.total().len() {
        pair[pw.apply_idx(e) * a.total().len() + py.apply_idx(e)] = e;
    }
    if pair.contains(&usize::MAX) {
        return violation("carrier", describe(cp), "carrier misses a pair".into());
    }
    for probe in probe_objects(a.base(), bound) {
        let (hom_pre, aligned) = hom_preorder(a, &probe);
        let transposes = {
            let mut out = Vec::new();
            for_each_monotone(w, &hom_pre, &mut |m| out.push(m.to_vec()));
            out
        };
        let phis = lax_maps(cp, &probe);
        if phis.len() != transposes.len() {
            return violation(
                "bijection",
                describe(&probe),
                format!("{} morphisms, {} transposes", phis.len(), transposes.len()),
            );
        }
        for phi in &phis {
            // Transpose and check it is a monotone family of morphisms.
            let mut image = Vec::with_capacity(w.len());
            for wi in 0..w.len() {
                let vector: Vec<usize> = (0..a.total().len())
                    .map(|yi| phi[pair[wi * a.total().len() + yi]])
                    .collect();
                match aligned.iter().position(|f| f.map().mapping() == vector) {
                    Some(ix) => image.push(ix),
                    None => {
                        return violation(
                            "transpose",
                            describe(&probe),
                            "a partial application is not a morphism".into(),
                        )
                    }
                }
            }
            for (i, j) in w.comparable_pairs() {
                if !hom_pre.le_idx(image[i], image[j]) {
                    return violation(
                        "transpose",
                        describe(&probe),
                        "transpose is not monotone".into(),
                    );
                }
            }
            // Round trip back to the morphism.
            let back: Vec<usize> = (0..cp.total().len())
                .map(|e| aligned[image[pw.apply_idx(e)]].map().apply_idx(py.apply_idx(e)))
                .collect();
            if &back != phi {
                return violation("round-trip", describe(&probe), "transpose loses the morphism".into());
            }
        }
        for t in &transposes {
            let phi: Vec<usize> = (0..cp.total().len())
                .map(|e| aligned[t[pw.apply_idx(e)]].map().apply_idx(py.apply_idx(e)))
                .collect();
            if !is_lax(cp, &probe, &phi) {
                return violation(
                    "cotranspose",
                    describe(&probe),
                    "a monotone family does not assemble to a morphism".into(),
                );
            }
        }
    }
    None
}

/// The power bijection: morphisms into `w -* a` correspond to monotone
/// maps from `w` into the hom preorder out of the probe.
pub fn verify_power(
    w: &FinPreorder,
    a: &LaxObject,
    power: &Power,
    bound: usize,
) -> Option<UniversalViolation> {
    for probe in probe_objects(a.base(), bound) {
        let (hom_pre, aligned) = hom_preorder(&probe, a);
        let transposes = {
            let mut out = Vec::new();
            for_each_monotone(w, &hom_pre, &mut |m| out.push(m.to_vec()));
            out
        };
        let phis = lax_maps(&probe, &power.object);
        if phis.len() != transposes.len() {
            return violation(
                "bijection",
                describe(&probe),
                format!("{} morphisms, {} transposes", phis.len(), transposes.len()),
            );
        }
        for phi in &phis {
            let mut image = Vec::with_capacity(w.len());
            for wi in 0..w.len() {
                let vector: Vec<usize> = (0..probe.total().len())
                    .map(|pi| power.maps[phi[pi]].apply_idx(wi))
                    .collect();
                match aligned.iter().position(|f| f.map().mapping() == vector) {
                    Some(ix) => image.push(ix),
                    None => {
                        return violation(
                            "transpose",
                            describe(&probe),
                            "a pointwise application is not a morphism".into(),
                        )
                    }
                }
            }
            for (i, j) in w.comparable_pairs() {
                if !hom_pre.le_idx(image[i], image[j]) {
                    return violation(
                        "transpose",
                        describe(&probe),
                        "transpose is not monotone".into(),
                    );
                }
            }
            let back: Vec<usize> = (0..probe.total().len())
                .map(|pi| {
                    let vector: Vec<usize> = (0..w.len())
                        .map(|wi| aligned[image[wi]].map().apply_idx(pi))
                        .collect();
                    power
                        .maps
                        .iter()
                        .position(|m| m.mapping() == vector)
                        .expect("pointwise evaluations of a morphism family are monotone")
                })
                .collect();
            if &back != phi {
                return violation("round-trip", describe(&probe), "transpose loses the morphism".into());
            }
        }
        for t in &transposes {
            let phi: Vec<usize> = (0..probe.total().len())
                .map(|pi| {
                    let vector: Vec<usize> = (0..w.len())
                        .map(|wi| aligned[t[wi]].map().apply_idx(pi))
                        .collect();
                    match power.maps.iter().position(|m| m.mapping() == vector) {
                        Some(ix) => ix,
                        None => usize::MAX,
                    }
                })
                .collect();
            if phi.contains(&usize::MAX) || !is_lax(&probe, &power.object, &phi) {
                return violation(
                    "cotranspose",
                    describe(&probe),
                    "a monotone family does not assemble to a morphism".into(),
                );
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finord::poset::BasePoset;
    use crate::fixtures::{base_b2, base_c2, c2, singleton};
    use crate::laxcomma::colimits::{coequalizer_lax, coproduct_lax};
    use crate::laxcomma::exponential::exponential_lax;
    use crate::laxcomma::lifts::initial_lift;
    use crate::laxcomma::limits::{equalizer_lax, pullback_lax};
    use crate::laxcomma::tensors::{copower, power};

    fn point(base: &BasePoset, at: &str) -> LaxObject {
        let pt = singleton();
        let s = MonotoneMap::new(pt.clone(), base.order().clone(), &[("pt", at)]).unwrap();
        LaxObject::new(base.clone(), pt, s).unwrap()
    }

    #[test]
    fn computed_lift_is_initial() {
        let base = base_b2();
        let pt = singleton();
        let f = MonotoneMap::identity(&pt);
        let family = vec![(f.clone(), point(&base, "p")), (f, point(&base, "q"))];
        let (lift, _) = initial_lift(&base, &pt, &family).unwrap();
        assert_eq!(verify_initial_lift(&lift, &family, 2), None);
    }

    #[test]
    fn wrong_lift_structures_are_caught_from_both_sides() {
        let base = base_b2();
        let pt = singleton();
        let f = MonotoneMap::identity(&pt);
        let family = vec![(f.clone(), point(&base, "p")), (f, point(&base, "q"))];
        // Too high: the family no longer passes through.
        let too_high = point(&base, "top");
        let v = verify_initial_lift(&too_high, &family, 2).unwrap();
        assert_eq!(v.stage, "family-through-lift");
        // Too low: a competing map factors but misses the lift.
        let correct = point(&base, "bot");
        assert_eq!(verify_initial_lift(&correct, &family, 2), None);
        let family_p = vec![(MonotoneMap::identity(&pt), point(&base, "p"))];
        let v = verify_initial_lift(&correct, &family_p, 2).unwrap();
        assert_eq!(v.stage, "initiality");
    }

    #[test]
    fn product_verifies_and_mutation_is_caught() {
        let base = base_b2();
        let p = point(&base, "p");
        let q = point(&base, "q");
        let (prod, projs) = crate::laxcomma::limits::product_lax(&base, &[&p, &q]).unwrap();
        let raw: Vec<MonotoneMap> = projs.iter().map(|m| m.map().clone()).collect();
        assert_eq!(verify_product(&prod, &raw, &[&p, &q], 2), None);
        // Meet replaced by join: the projections stop being morphisms.
        let join = point(&base, "top");
        let v = verify_product(&join, &raw, &[&p, &q], 2).unwrap();
        assert_eq!(v.stage, "projection");
        // Meet replaced by something strictly lower: a cone loses its
        // mediator even though the projections survive.
        let (pp, pprojs) = crate::laxcomma::limits::product_lax(&base, &[&p, &p]).unwrap();
        let praw: Vec<MonotoneMap> = pprojs.iter().map(|m| m.map().clone()).collect();
        assert_eq!(verify_product(&pp, &praw, &[&p, &p], 2), None);
        let lower = LaxObject::new(
            base.clone(),
            pp.total().clone(),
            MonotoneMap::new(pp.total().clone(), base.order().clone(), &[("(pt,pt)", "bot")])
                .unwrap(),
        )
        .unwrap();
        let v = verify_product(&lower, &praw, &[&p, &p], 2).unwrap();
        assert_eq!(v.stage, "mediator");
    }

    #[test]
    fn coproduct_and_coequalizer_verify() {
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let lo = point(&base, "0");
        let (sum, injs) = coproduct_lax(&base, &[&lo, &x]).unwrap();
        let raw: Vec<MonotoneMap> = injs.iter().map(|m| m.map().clone()).collect();
        assert_eq!(verify_coproduct(&sum, &raw, &[&lo, &x], 2), None);

        let pick = |at: &str| {
            LaxMorphism::new(
                lo.clone(),
                x.clone(),
                MonotoneMap::new(lo.total().clone(), x.total().clone(), &[("pt", at)]).unwrap(),
            )
            .unwrap()
        };
        let (q, qm) = coequalizer_lax(&pick("0"), &pick("1")).unwrap();
        assert_eq!(
            verify_coequalizer(&q, qm.map(), &pick("0"), &pick("1"), 2),
            None
        );
        // Coequalizing an equal pair leaves the object alone; inflating
        // the quotient structure then keeps the quotient map lax but robs
        // the identity cofork of its mediator.
        let (q2, qm2) = coequalizer_lax(&pick("0"), &pick("0")).unwrap();
        assert_eq!(
            verify_coequalizer(&q2, qm2.map(), &pick("0"), &pick("0"), 2),
            None
        );
        let inflated = LaxObject::new(
            base.clone(),
            q2.total().clone(),
            MonotoneMap::new(
                q2.total().clone(),
                base.order().clone(),
                &[("0", "1"), ("1", "1")],
            )
            .unwrap(),
        )
        .unwrap();
        let v = verify_coequalizer(&inflated, qm2.map(), &pick("0"), &pick("0"), 2);
        assert_eq!(v.as_ref().map(|v| v.stage.as_str()), Some("mediator"));
    }

    #[test]
    fn equalizer_and_pullback_verify() {
        let f = crate::fixtures::fzz_lax();
        let id = LaxMorphism::identity(f.src());
        let (eq, incl) = equalizer_lax(&id, &id).unwrap();
        assert_eq!(verify_equalizer(&eq, incl.map(), &id, &id, 2), None);

        let base = f.base().clone();
        let pt = point(&base, "z1");
        let g = LaxMorphism::new(
            pt.clone(),
            f.tgt().clone(),
            MonotoneMap::new(pt.total().clone(), f.tgt().total().clone(), &[("pt", "z1")])
                .unwrap(),
        )
        .unwrap();
        let (pb, p1, p2) = pullback_lax(&f, &g).unwrap();
        assert_eq!(
            verify_pullback(&pb, p1.map(), p2.map(), &f, &g, 2),
            None
        );
    }

    #[test]
    fn exponential_bijection_and_naturality() {
        let base = base_c2();
        let a = point(&base, "1");
        let b = LaxObject::base_over_itself(&base);
        let exp = exponential_lax(&a, &b).unwrap();
        for w in [point(&base, "0"), LaxObject::base_over_itself(&base)] {
            assert_eq!(verify_exponential_bijection(&exp, &w, &a, &b), None);
        }
        let w1 = LaxObject::base_over_itself(&base);
        let w2 = point(&base, "0");
        for u in hom(&w2, &w1) {
            assert_eq!(verify_exponential_naturality(&u, &a, &b), None);
        }
    }

    #[test]
    fn copower_and_power_bijections() {
        let base = base_c2();
        let x = LaxObject::base_over_itself(&base);
        let w = c2();
        let (cp, pw, py) = copower(&w, &x).unwrap();
        assert_eq!(verify_copower(&w, &x, &cp, &pw, &py, 1), None);
        let pow = power(&w, &x).unwrap();
        assert_eq!(verify_power(&w, &x, &pow, 1), None);
    }
}

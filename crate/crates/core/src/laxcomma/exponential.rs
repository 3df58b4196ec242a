//! Exponentials in the lax slice.
//!
//! For `(Y, a)` with every structure value exponentiable in the base, the
//! exponential `(Z, b)^(Y, a)` lives on the preorder of monotone maps
//! `Y -> Z` with structure `f |-> /\_y  b(f(y)) ^ a(y)`, evaluation
//! `(f, y) |-> f(y)`, and transposition by currying.  The strict slice has
//! its own, purely order-theoretic, exponentiability criterion, also
//! implemented here.

use crate::finord::constructions;
use crate::finord::map::MonotoneMap;
use crate::laxcomma::limits::product_lax;
use crate::laxcomma::object::{LaxMorphism, LaxObject};
use crate::{Error, Result};

/// An exponential object together with the evaluation data.
#[derive(Debug, Clone)]
pub struct LaxExponential {
    pub object: LaxObject,
    /// Aligned with the carrier: the underlying map each element names.
    pub maps: Vec<MonotoneMap>,
    /// The product `(Z^Y) x (Y, a)` that evaluation is defined on.
    pub eval_src: LaxObject,
    pub eval_projections: Vec<LaxMorphism>,
    pub eval: LaxMorphism,
}

/// Structure values of `a` that are not exponentiable in the base, with
/// their carrier points.
pub fn non_exponentiable_points(a: &LaxObject) -> Vec<(String, String)> {
    let base = a.base();
    a.total()
        .elems()
        .iter()
        .enumerate()
        .filter(|&(y, _)| !base.exponentiable_idx(a.value_idx(y)))
        .map(|(y, name)| (name.clone(), base.name(a.value_idx(y)).to_owned()))
        .collect()
}

pub fn is_exponentiable_lax(a: &LaxObject) -> bool {
    non_exponentiable_points(a).is_empty()
}

/// Exponentiability of `(Y, a)` in the strict slice: between any
/// comparable `y0 <= y1`, every base value sandwiched between `a(y0)` and
/// `a(y1)` must be hit by some interpolating `y`.
pub fn is_exponentiable_strict(a: &LaxObject) -> bool {
    let base = a.base();
    let y = a.total();
    for (y0, y1) in y.comparable_pairs() {
        for x in 0..base.len() {
            if base.le_idx(a.value_idx(y0), x) && base.le_idx(x, a.value_idx(y1)) {
                let hit = (0..y.len()).any(|m| {
                    y.le_idx(y0, m) && y.le_idx(m, y1) && a.value_idx(m) == x
                });
                if !hit {
                    return false;
                }
            }
        }
    }
    true
}

/// Builds `b^a` with its evaluation morphism.  Errors on the first carrier
/// point whose structure value is not exponentiable.
pub fn exponential_lax(a: &LaxObject, b: &LaxObject) -> Result<LaxExponential> {
    if a.base() != b.base() {
        return Err(Error::BaseMismatch);
    }
    let base = a.base();
    if let Some((point, value)) = non_exponentiable_points(a).into_iter().next() {
        return Err(Error::NotExponentiable { point, value });
    }
    let exp = constructions::exponential(a.total(), b.total())?;
    let structure: Vec<usize> = exp
        .maps
        .iter()
        .map(|m| {
            base.meet_all((0..a.total().len()).map(|y| {
                base.heyting_idx(a.value_idx(y), b.value_idx(m.apply_idx(y)))
                    .expect("all structure values of the exponent are exponentiable")
            }))
        })
        .collect();
    let s = MonotoneMap::from_indices(exp.carrier.clone(), base.order().clone(), structure)
        .expect("implication is monotone in its conclusion");
    let object = LaxObject::new(base.clone(), exp.carrier, s)?;
    let (eval_src, eval_projections) = product_lax(base, &[&object, a])?;
    let eval_map: Vec<usize> = (0..eval_src.total().len())
        .map(|e| {
            let f = eval_projections[0].map().apply_idx(e);
            let y = eval_projections[1].map().apply_idx(e);
            exp.maps[f].apply_idx(y)
        })
        .collect();
    let eval_map =
        MonotoneMap::from_indices(eval_src.total().clone(), b.total().clone(), eval_map)
            .expect("evaluation is monotone in both arguments");
    let eval = LaxMorphism::new(eval_src.clone(), b.clone(), eval_map)
        .expect("residuation bounds evaluation below the target structure");
    Ok(LaxExponential {
        object,
        maps: exp.maps,
        eval_src,
        eval_projections,
        eval,
    })
}

/// Transposes `h : (W, c) x (Y, a) -> (Z, b)` to `(W, c) -> (Z, b)^(Y, a)`.
pub fn curry(
    w: &LaxObject,
    a: &LaxObject,
    b: &LaxObject,
    h: &LaxMorphism,
) -> Result<LaxMorphism> {
    let base = w.base();
    let (prod, projs) = product_lax(base, &[w, a])?;
    if h.src() != &prod || h.tgt() != b {
        return Err(Error::Precondition(
            "transposition input must go from the product of the given factors to the given target"
                .into(),
        ));
    }
    let exp = exponential_lax(a, b)?;
    // Product element index for each (w, y) pair.
    let mut pair_index = vec![usize::MAX; w.total().len() * a.total().len()];
    for e in 0..prod.total().len() {
        let wi = projs[0].map().apply_idx(e);
        let yi = projs[1].map().apply_idx(e);
        pair_index[wi * a.total().len() + yi] = e;
    }
    let mapping: Vec<usize> = (0..w.total().len())
        .map(|wi| {
            let image: Vec<usize> = (0..a.total().len())
                .map(|yi| h.map().apply_idx(pair_index[wi * a.total().len() + yi]))
                .collect();
            exp.object
                .total()
                .index_of(&name_of_image(&image, b))
                .expect("each partial application is monotone")
        })
        .collect();
    let m = MonotoneMap::from_indices(w.total().clone(), exp.object.total().clone(), mapping)
        .expect("transposition preserves the pointwise order");
    LaxMorphism::new(w.clone(), exp.object.clone(), m)
}

fn name_of_image(image: &[usize], b: &LaxObject) -> String {
    let parts: Vec<&str> = image.iter().map(|&i| b.total().name(i)).collect();
    format!("[{}]", parts.join("|"))
}

/// Inverse transposition: recovers `h` from `m : (W, c) -> (Z, b)^(Y, a)`.
pub fn uncurry(
    w: &LaxObject,
    a: &LaxObject,
    b: &LaxObject,
    m: &LaxMorphism,
) -> Result<LaxMorphism> {
    let base = w.base();
    let exp = exponential_lax(a, b)?;
    if m.src() != w || m.tgt() != &exp.object {
        return Err(Error::Precondition(
            "inverse transposition input must go from the first factor to the exponential".into(),
        ));
    }
    let (prod, projs) = product_lax(base, &[w, a])?;
    let mapping: Vec<usize> = (0..prod.total().len())
        .map(|e| {
            let wi = projs[0].map().apply_idx(e);
            let yi = projs[1].map().apply_idx(e);
            exp.maps[m.map().apply_idx(wi)].apply_idx(yi)
        })
        .collect();
    let hmap = MonotoneMap::from_indices(prod.total().clone(), b.total().clone(), mapping)
        .expect("evaluation after a morphism stays monotone");
    LaxMorphism::new(prod, b.clone(), hmap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finord::poset::BasePoset;
    use crate::fixtures::{base_b2, base_c2, base_c3, base_m3, singleton};
    use crate::laxcomma::object::hom;

    fn point(base: &BasePoset, at: &str) -> LaxObject {
        let pt = singleton();
        let s = MonotoneMap::new(pt.clone(), base.order().clone(), &[("pt", at)]).unwrap();
        LaxObject::new(base.clone(), pt, s).unwrap()
    }

    #[test]
    fn exponential_of_base_by_point_computes_implication() {
        // Over the 2-chain, ((X,1)^(1,x))(y) must be the implication y^x,
        // here frozen from a direct residuation scan.
        let base = base_c2();
        let x_obj = LaxObject::base_over_itself(&base);
        let e0 = exponential_lax(&point(&base, "0"), &x_obj).unwrap();
        assert_eq!(e0.object.value("[0]"), "1");
        assert_eq!(e0.object.value("[1]"), "1");
        let e1 = exponential_lax(&point(&base, "1"), &x_obj).unwrap();
        assert_eq!(e1.object.value("[0]"), "0");
        assert_eq!(e1.object.value("[1]"), "1");
    }

    #[test]
    fn non_exponentiable_point_is_reported() {
        let base = base_m3();
        let err = exponential_lax(&point(&base, "a"), &LaxObject::base_over_itself(&base))
            .unwrap_err();
        assert_eq!(
            err,
            Error::NotExponentiable {
                point: "pt".into(),
                value: "a".into()
            }
        );
        assert!(!is_exponentiable_lax(&point(&base, "a")));
        assert!(is_exponentiable_lax(&point(&base, "bot")));
    }

    #[test]
    fn eval_satisfies_the_residuation_bound() {
        let base = base_b2();
        let a = point(&base, "p");
        let b = LaxObject::base_over_itself(&base);
        let e = exponential_lax(&a, &b).unwrap();
        for idx in 0..e.eval_src.total().len() {
            let name = e.eval_src.total().name(idx).to_owned();
            let src_val = e.eval_src.value(&name);
            let out = e.eval.apply(&name);
            assert!(base.le(src_val, b.value(out)));
        }
    }

    #[test]
    fn curry_then_uncurry_round_trips() {
        let base = base_c2();
        let w = point(&base, "0");
        let a = point(&base, "0");
        let b = LaxObject::base_over_itself(&base);
        let (prod, _) = product_lax(&base, &[&w, &a]).unwrap();
        for h in hom(&prod, &b) {
            let m = curry(&w, &a, &b, &h).unwrap();
            let back = uncurry(&w, &a, &b, &m).unwrap();
            assert_eq!(back.map(), h.map());
        }
    }

    #[test]
    fn currying_eval_gives_the_identity() {
        let base = base_c2();
        let a = point(&base, "1");
        let b = LaxObject::base_over_itself(&base);
        let e = exponential_lax(&a, &b).unwrap();
        let m = curry(&e.object, &a, &b, &e.eval).unwrap();
        assert!(m.map().is_order_iso());
        for i in 0..m.src().total().len() {
            assert_eq!(m.map().apply_idx(i), i);
        }
    }

    #[test]
    fn strict_exponentiability_criterion() {
        let base = base_c3();
        // (X, 1_X) always interpolates.
        assert!(is_exponentiable_strict(&LaxObject::base_over_itself(&base)));
        // The 2-chain hitting z0 and z2 skips z1.
        let y = crate::fixtures::c2();
        let a = MonotoneMap::new(y.clone(), base.order().clone(), &[("0", "z0"), ("1", "z2")])
            .unwrap();
        let skipping = LaxObject::new(base.clone(), y, a).unwrap();
        assert!(!is_exponentiable_strict(&skipping));
        // Discrete carriers interpolate trivially.
        let d = crate::fixtures::antichain(2);
        let a = MonotoneMap::new(d.clone(), base.order().clone(), &[("e0", "z0"), ("e1", "z2")])
            .unwrap();
        assert!(is_exponentiable_strict(
            &LaxObject::new(base.clone(), d, a).unwrap()
        ));
    }
}

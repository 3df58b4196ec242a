use crate::finord::constructions;
use crate::finord::map::MonotoneMap;
use crate::finord::poset::BasePoset;
use crate::laxcomma::object::{LaxMorphism, LaxObject};
use crate::{Error, Result};

/// Product: the product of totals with the pointwise meet of structures.
/// The empty product is the terminal object, a point over the top.
pub fn product_lax(
    base: &BasePoset,
    factors: &[&LaxObject],
) -> Result<(LaxObject, Vec<LaxMorphism>)> {
    if factors.iter().any(|o| o.base() != base) {
        return Err(Error::BaseMismatch);
    }
    let totals: Vec<_> = factors.iter().map(|o| o.total()).collect();
    let (carrier, projs) = constructions::product(&totals)?;
    let structure: Vec<usize> = (0..carrier.len())
        .map(|e| {
            base.meet_all(
                factors
                    .iter()
                    .zip(&projs)
                    .map(|(o, p)| o.value_idx(p.apply_idx(e))),
            )
        })
        .collect();
    let a = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), structure)
        .expect("meets of monotone maps are monotone");
    let object = LaxObject::new(base.clone(), carrier, a)?;
    let projections = factors
        .iter()
        .zip(projs)
        .map(|(o, p)| {
            LaxMorphism::new(object.clone(), (*o).clone(), p)
                .expect("the meet sits below each factor structure")
        })
        .collect();
    Ok((object, projections))
}

/// Equalizer: the sub-preorder of agreement with the restricted structure;
/// the inclusion is strict.
pub fn equalizer_lax(f: &LaxMorphism, g: &LaxMorphism) -> Result<(LaxObject, LaxMorphism)> {
    if f.src() != g.src() || f.tgt() != g.tgt() {
        return Err(Error::NotParallel);
    }
    let (sub, incl) = constructions::equalizer(f.map(), g.map())?;
    let structure = incl.then(f.src().structure())?;
    let object = LaxObject::new(f.base().clone(), sub, structure)?;
    let inclusion = LaxMorphism::new(object.clone(), f.src().clone(), incl)
        .expect("restricting the structure keeps the triangle strict");
    Ok((object, inclusion))
}

/// Pullback of a cospan: pairs agreeing in the target, with structure the
/// meet of the two leg structures.
pub fn pullback_lax(
    f: &LaxMorphism,
    g: &LaxMorphism,
) -> Result<(LaxObject, LaxMorphism, LaxMorphism)> {
    if f.tgt() != g.tgt() {
        return Err(Error::NotCospan);
    }
    let base = f.base();
    let (carrier, p1, p2) = constructions::pullback(f.map(), g.map())?;
    let structure: Vec<usize> = (0..carrier.len())
        .map(|e| {
            base.meet_idx(
                f.src().value_idx(p1.apply_idx(e)),
                g.src().value_idx(p2.apply_idx(e)),
            )
        })
        .collect();
    let a = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), structure)
        .expect("meets of monotone maps are monotone");
    let object = LaxObject::new(base.clone(), carrier, a)?;
    let proj1 = LaxMorphism::new(object.clone(), f.src().clone(), p1)
        .expect("meet sits below the first leg structure");
    let proj2 = LaxMorphism::new(object.clone(), g.src().clone(), p2)
        .expect("meet sits below the second leg structure");
    Ok((object, proj1, proj2))
}

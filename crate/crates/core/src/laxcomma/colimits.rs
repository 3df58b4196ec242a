use crate::descent::least_extension;
use crate::finord::constructions;
use crate::finord::map::MonotoneMap;
use crate::finord::poset::BasePoset;
use crate::laxcomma::object::{LaxMorphism, LaxObject};
use crate::{Error, Result};

/// Coproduct: the disjoint union of totals carrying each summand's
/// structure unchanged; injections are strict.
pub fn coproduct_lax(
    base: &BasePoset,
    summands: &[&LaxObject],
) -> Result<(LaxObject, Vec<LaxMorphism>)> {
    if summands.iter().any(|o| o.base() != base) {
        return Err(Error::BaseMismatch);
    }
    let totals: Vec<_> = summands.iter().map(|o| o.total()).collect();
    let (carrier, injs) = constructions::coproduct(&totals)?;
    let mut structure = vec![usize::MAX; carrier.len()];
    for (o, inj) in summands.iter().zip(&injs) {
        for y in 0..o.total().len() {
            structure[inj.apply_idx(y)] = o.value_idx(y);
        }
    }
    let b = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), structure)
        .expect("summand structures are monotone on their components");
    let object = LaxObject::new(base.clone(), carrier, b)?;
    let injections = summands
        .iter()
        .zip(injs)
        .map(|(o, inj)| {
            LaxMorphism::new((*o).clone(), object.clone(), inj)
                .expect("injections carry structure on the nose")
        })
        .collect();
    Ok((object, injections))
}

/// Coequalizer: the coequalizer of the underlying maps, equipped with the
/// least structure extending the source's along the quotient.
pub fn coequalizer_lax(f: &LaxMorphism, g: &LaxMorphism) -> Result<(LaxObject, LaxMorphism)> {
    if f.src() != g.src() || f.tgt() != g.tgt() {
        return Err(Error::NotParallel);
    }
    let base = f.base();
    let (carrier, qmap) = constructions::coequalizer(f.map(), g.map())?;
    let c = least_extension(&qmap, f.tgt().structure(), base)?;
    let object = LaxObject::new(base.clone(), carrier, c)?;
    let quotient = LaxMorphism::new(f.tgt().clone(), object.clone(), qmap)
        .expect("the least extension dominates the source structure");
    Ok((object, quotient))
}

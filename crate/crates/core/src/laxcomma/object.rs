use serde::Serialize;

use crate::finord::map::{monotone_maps, MonotoneMap};
use crate::finord::poset::BasePoset;
use crate::finord::preorder::FinPreorder;
use crate::{Error, Result};

/// A finite preorder equipped with a monotone structure map into the base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaxObject {
    base: BasePoset,
    structure: MonotoneMap,
}

impl LaxObject {
    pub fn new(base: BasePoset, total: FinPreorder, structure: MonotoneMap) -> Result<Self> {
        if structure.dom() != &total {
            return Err(Error::EndpointMismatch {
                expected: format!("{:?}", total.elems()),
                found: format!("{:?}", structure.dom().elems()),
            });
        }
        if structure.cod() != base.order() {
            return Err(Error::BaseMismatch);
        }
        Ok(LaxObject { base, structure })
    }

    /// The object `(X, 1_X)`: the base over itself.
    pub fn base_over_itself(base: &BasePoset) -> Self {
        let id = MonotoneMap::identity(base.order());
        LaxObject {
            base: base.clone(),
            structure: id,
        }
    }

    pub fn base(&self) -> &BasePoset {
        &self.base
    }

    pub fn total(&self) -> &FinPreorder {
        self.structure.dom()
    }

    pub fn structure(&self) -> &MonotoneMap {
        &self.structure
    }

    pub fn value(&self, y: &str) -> &str {
        self.structure.apply(y)
    }

    pub fn value_idx(&self, y: usize) -> usize {
        self.structure.apply_idx(y)
    }
}

/// A monotone map between the totals satisfying `a <= b . f` pointwise.
/// Strictness (`a = b . f`) is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaxMorphism {
    src: LaxObject,
    tgt: LaxObject,
    map: MonotoneMap,
    strict: bool,
}

impl LaxMorphism {
    pub fn new(src: LaxObject, tgt: LaxObject, map: MonotoneMap) -> Result<Self> {
        if src.base() != tgt.base() {
            return Err(Error::BaseMismatch);
        }
        if map.dom() != src.total() || map.cod() != tgt.total() {
            return Err(Error::EndpointMismatch {
                expected: format!("{:?} -> {:?}", src.total().elems(), tgt.total().elems()),
                found: format!("{:?} -> {:?}", map.dom().elems(), map.cod().elems()),
            });
        }
        let base = src.base();
        let mut strict = true;
        for y in 0..src.total().len() {
            let lhs = src.value_idx(y);
            let rhs = tgt.value_idx(map.apply_idx(y));
            if !base.le_idx(lhs, rhs) {
                return Err(Error::LaxTriangle {
                    point: src.total().name(y).to_owned(),
                    lhs: base.name(lhs).to_owned(),
                    rhs: base.name(rhs).to_owned(),
                });
            }
            strict &= lhs == rhs;
        }
        Ok(LaxMorphism {
            src,
            tgt,
            map,
            strict,
        })
    }

    pub fn identity(obj: &LaxObject) -> Self {
        LaxMorphism {
            src: obj.clone(),
            tgt: obj.clone(),
            map: MonotoneMap::identity(obj.total()),
            strict: true,
        }
    }

    pub fn src(&self) -> &LaxObject {
        &self.src
    }

    pub fn tgt(&self) -> &LaxObject {
        &self.tgt
    }

    pub fn map(&self) -> &MonotoneMap {
        &self.map
    }

    pub fn base(&self) -> &BasePoset {
        self.src.base()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn apply(&self, y: &str) -> &str {
        self.map.apply(y)
    }

    pub fn then(&self, g: &LaxMorphism) -> Result<LaxMorphism> {
        if self.tgt != g.src {
            return Err(Error::EndpointMismatch {
                expected: format!("{:?}", self.tgt.total().elems()),
                found: format!("{:?}", g.src.total().elems()),
            });
        }
        LaxMorphism::new(self.src.clone(), g.tgt.clone(), self.map.then(&g.map)?)
    }

    /// Isomorphisms are exactly the strict morphisms whose underlying map
    /// is an order isomorphism.
    pub fn is_iso(&self) -> bool {
        self.strict && self.map.is_order_iso()
    }

    pub fn inverse(&self) -> Option<LaxMorphism> {
        if !self.is_iso() {
            return None;
        }
        let inv = self.map.inverse()?;
        LaxMorphism::new(self.tgt.clone(), self.src.clone(), inv).ok()
    }
}

/// The 2-cell order: `f <= g` pointwise in the target total.  Errors when
/// the morphisms are not parallel.
pub fn leq_2cell(f: &LaxMorphism, g: &LaxMorphism) -> Result<bool> {
    if f.src != g.src || f.tgt != g.tgt {
        return Err(Error::NotParallel);
    }
    let z = f.tgt.total();
    Ok((0..f.src.total().len()).all(|y| z.le_idx(f.map.apply_idx(y), g.map.apply_idx(y))))
}

/// All morphisms `a -> b` in lexicographic order of their image vectors.
pub fn hom(a: &LaxObject, b: &LaxObject) -> Vec<LaxMorphism> {
    monotone_maps(a.total(), b.total())
        .into_iter()
        .filter_map(|m| LaxMorphism::new(a.clone(), b.clone(), m).ok())
        .collect()
}

/// The hom-set as a preorder under the 2-cell order, elements named by
/// their image vectors; the morphism list is aligned with the carrier.
pub fn hom_preorder(a: &LaxObject, b: &LaxObject) -> (FinPreorder, Vec<LaxMorphism>) {
    let morphisms = hom(a, b);
    let mut named: Vec<(String, LaxMorphism)> = morphisms
        .into_iter()
        .map(|f| {
            let parts: Vec<&str> = f
                .map()
                .mapping()
                .iter()
                .map(|&i| b.total().name(i))
                .collect();
            (format!("[{}]", parts.join("|")), f)
        })
        .collect();
    named.sort_by(|x, y| x.0.cmp(&y.0));
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let lookup = |name: &str| -> &LaxMorphism {
        &named[named.binary_search_by(|(n, _)| n.as_str().cmp(name)).unwrap()].1
    };
    let carrier = FinPreorder::from_closed(names, |x, y| {
        leq_2cell(lookup(x), lookup(y)).expect("parallel by construction")
    })
    .expect("image vectors are unique names");
    let aligned = carrier.elems().iter().map(|e| lookup(e).clone()).collect();
    (carrier, aligned)
}

/// An isomorphism `a -> b` in the lax slice, if one exists: an order
/// isomorphism of totals that preserves structure on the nose.
pub fn lax_object_iso(a: &LaxObject, b: &LaxObject) -> Option<LaxMorphism> {
    if a.base() != b.base() || a.total().len() != b.total().len() {
        return None;
    }
    monotone_maps(a.total(), b.total())
        .into_iter()
        .filter(|m| m.is_order_iso())
        .filter(|m| {
            (0..a.total().len()).all(|y| a.value_idx(y) == b.value_idx(m.apply_idx(y)))
        })
        .find_map(|m| LaxMorphism::new(a.clone(), b.clone(), m).ok())
}

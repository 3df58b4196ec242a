use serde::Serialize;

use crate::finord::preorder::FinPreorder;
use crate::{Error, Result};

/// A monotone map between finite preorders, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonotoneMap {
    dom: FinPreorder,
    cod: FinPreorder,
    /// Invariant: `map[i]` is the codomain index of the image of element `i`,
    /// and the assignment preserves the order relation.
    map: Vec<usize>,
}

impl MonotoneMap {
    /// Builds a map from `(element, image)` assignments.  Every domain
    /// element needs exactly one assignment; monotonicity failures report a
    /// witness pair.
    pub fn new<S: AsRef<str>>(
        dom: FinPreorder,
        cod: FinPreorder,
        assignments: &[(S, S)],
    ) -> Result<Self> {
        let mut map = vec![usize::MAX; dom.len()];
        for (from, to) in assignments {
            let i = dom.index_checked(from.as_ref())?;
            let j = cod.index_checked(to.as_ref())?;
            if map[i] != usize::MAX {
                return Err(Error::DuplicateElement(from.as_ref().to_owned()));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(Error::MissingAssignment(dom.name(i).to_owned()));
        }
        Self::from_indices(dom, cod, map)
    }

    /// Builds from an index vector, checking monotonicity.
    pub fn from_indices(dom: FinPreorder, cod: FinPreorder, map: Vec<usize>) -> Result<Self> {
        assert_eq!(map.len(), dom.len());
        for (i, j) in dom.comparable_pairs() {
            if !cod.le_idx(map[i], map[j]) {
                return Err(Error::NotMonotone {
                    y0: dom.name(i).to_owned(),
                    y1: dom.name(j).to_owned(),
                    fy0: cod.name(map[i]).to_owned(),
                    fy1: cod.name(map[j]).to_owned(),
                });
            }
        }
        Ok(MonotoneMap { dom, cod, map })
    }

    /// Builds by evaluating `f` on each domain element name.
    pub fn from_fn(
        dom: FinPreorder,
        cod: FinPreorder,
        f: impl Fn(&str) -> String,
    ) -> Result<Self> {
        let map = dom
            .elems()
            .iter()
            .map(|e| cod.index_checked(&f(e)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(dom, cod, map)
    }

    pub fn identity(p: &FinPreorder) -> Self {
        MonotoneMap {
            dom: p.clone(),
            cod: p.clone(),
            map: (0..p.len()).collect(),
        }
    }

    pub fn dom(&self) -> &FinPreorder {
        &self.dom
    }

    pub fn cod(&self) -> &FinPreorder {
        &self.cod
    }

    pub fn mapping(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_idx(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, name: &str) -> &str {
        let i = self
            .dom
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown element `{name}`"));
        self.cod.name(self.map[i])
    }

    /// Diagrammatic composition: `self` then `g`.
    pub fn then(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if self.cod != g.dom {
            return Err(Error::EndpointMismatch {
                expected: format!("{:?}", self.cod.elems()),
                found: format!("{:?}", g.dom.elems()),
            });
        }
        Ok(MonotoneMap {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            map: self.map.iter().map(|&i| g.map[i]).collect(),
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.map {
            hit[j] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_surjective()
    }

    /// Bijective, and comparisons reflect as well as preserve.
    pub fn is_order_iso(&self) -> bool {
        if !self.is_bijective() {
            return false;
        }
        for i in 0..self.dom.len() {
            for j in 0..self.dom.len() {
                if self.cod.le_idx(self.map[i], self.map[j]) && !self.dom.le_idx(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// The inverse map, if this is an order isomorphism.
    pub fn inverse(&self) -> Option<MonotoneMap> {
        if !self.is_order_iso() {
            return None;
        }
        let mut inv = vec![0; self.cod.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(MonotoneMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: inv,
        })
    }

    /// Preimage indices of codomain index `z`.
    pub fn fiber(&self, z: usize) -> Vec<usize> {
        (0..self.dom.len()).filter(|&i| self.map[i] == z).collect()
    }
}

/// All monotone maps `dom -> cod` in lexicographic order of their image
/// vectors.  Backtracking checks each partial assignment against the
/// already-assigned prefix, so the enumeration prunes early.
pub fn monotone_maps(dom: &FinPreorder, cod: &FinPreorder) -> Vec<MonotoneMap> {
    let n = dom.len();
    if n == 0 {
        return vec![MonotoneMap {
            dom: dom.clone(),
            cod: cod.clone(),
            map: Vec::new(),
        }];
    }
    if cod.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut partial = vec![0usize; n];
    fn rec(
        dom: &FinPreorder,
        cod: &FinPreorder,
        partial: &mut Vec<usize>,
        at: usize,
        out: &mut Vec<MonotoneMap>,
    ) {
        if at == dom.len() {
            out.push(MonotoneMap {
                dom: dom.clone(),
                cod: cod.clone(),
                map: partial.clone(),
            });
            return;
        }
        'cand: for c in 0..cod.len() {
            // Only the prefix below `at` is assigned; the tail is stale.
            for (prev, &pc) in partial.iter().enumerate().take(at) {
                if dom.le_idx(prev, at) && !cod.le_idx(pc, c) {
                    continue 'cand;
                }
                if dom.le_idx(at, prev) && !cod.le_idx(c, pc) {
                    continue 'cand;
                }
            }
            partial[at] = c;
            rec(dom, cod, partial, at + 1, out);
        }
    }
    rec(dom, cod, &mut partial, 0, &mut out);
    out
}

use std::collections::BTreeMap;

use serde::Serialize;

use crate::finord::BasePoset;
use crate::{Error, Result};

/// How much structure the level relations are required to carry.
///
/// `Gph` is a bare binary relation, `Rel` adds reflexivity, `Ord` adds
/// transitivity on top.  The order of the variants matters: `Gph < Rel <
/// Ord`, and a diagram involving mixed kinds lives in the weakest one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ValueKind {
    Gph,
    Rel,
    Ord,
}

impl ValueKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueKind::Gph => "Gph",
            ValueKind::Rel => "Rel",
            ValueKind::Ord => "Ord",
        }
    }
}

/// One level of a presheaf: a finite carrier with a binary relation.
///
/// Unlike `FinPreorder` the relation is stored raw; no closure is taken,
/// because levels of kind `Gph` or `Rel` are allowed to be non-transitive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Level {
    elems: Vec<String>,
    rel: Vec<bool>,
}

impl Level {
    pub fn new<S: AsRef<str>>(elems: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elems.iter().map(|e| e.as_ref().to_string()).collect();
        let (mut level, _) = Level::from_parts(names, vec![])?;
        for (a, b) in pairs {
            let i = level
                .index_of(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let j = level
                .index_of(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            let n = level.elems.len();
            level.rel[i * n + j] = true;
        }
        Ok(level)
    }

    /// Builds a level from parallel name/relation arrays, sorting the names.
    /// Returns the level plus, for each input position, its sorted index.
    pub(crate) fn from_parts(names: Vec<String>, rel: Vec<bool>) -> Result<(Self, Vec<usize>)> {
        let n = names.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        for k in 1..n {
            if names[order[k - 1]] == names[order[k]] {
                return Err(Error::DuplicateElement(names[order[k]].clone()));
            }
        }
        let sorted: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let mut new_rel = vec![false; n * n];
        if !rel.is_empty() {
            for i in 0..n {
                for j in 0..n {
                    new_rel[i * n + j] = rel[order[i] * n + order[j]];
                }
            }
        }
        let mut positions = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            positions[old] = new;
        }
        Ok((
            Level {
                elems: sorted,
                rel: new_rel,
            },
            positions,
        ))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[String] {
        &self.elems
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elems[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elems.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    pub fn related_idx(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.elems.len() + j]
    }

    pub fn related(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.related_idx(i, j),
            _ => false,
        }
    }

    pub fn satisfies(&self, kind: ValueKind) -> bool {
        let n = self.elems.len();
        match kind {
            ValueKind::Gph => true,
            ValueKind::Rel => (0..n).all(|i| self.related_idx(i, i)),
            ValueKind::Ord => {
                self.satisfies(ValueKind::Rel)
                    && (0..n).all(|i| {
                        (0..n).all(|j| {
                            !self.related_idx(i, j)
                                || (0..n).all(|k| !self.related_idx(j, k) || self.related_idx(i, k))
                        })
                    })
            }
        }
    }
}

/// A finite presheaf on the base poset, valued in `ValueKind` structures.
///
/// `levels[x]` is the value at the base element with index `x`; for every
/// strictly comparable pair `lower <= upper` the restriction map
/// `levels[upper] -> levels[lower]` is stored under the key
/// `(upper, lower)`.  Construction checks relation preservation and
/// functoriality, so downstream code never has to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinPresheaf {
    base: BasePoset,
    kind: ValueKind,
    levels: Vec<Level>,
    restrictions: BTreeMap<(usize, usize), Vec<usize>>,
}

impl FinPresheaf {
    pub fn new(
        base: BasePoset,
        kind: ValueKind,
        levels: Vec<Level>,
        restrictions: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self> {
        if levels.len() != base.len() {
            return Err(Error::Precondition(format!(
                "expected one level per base element ({}), got {}",
                base.len(),
                levels.len()
            )));
        }
        for (x, level) in levels.iter().enumerate() {
            if !level.satisfies(kind) {
                return Err(Error::Precondition(format!(
                    "level `{}` violates value kind {}",
                    base.name(x),
                    kind.as_str()
                )));
            }
        }
        for upper in 0..base.len() {
            for lower in 0..base.len() {
                let needed = lower != upper && base.le_idx(lower, upper);
                match restrictions.get(&(upper, lower)) {
                    None if needed => {
                        return Err(Error::Precondition(format!(
                            "missing restriction `{}` -> `{}`",
                            base.name(upper),
                            base.name(lower)
                        )));
                    }
                    Some(_) if !needed => {
                        return Err(Error::Precondition(format!(
                            "restriction `{}` -> `{}` keyed on a non-comparable pair",
                            base.name(upper),
                            base.name(lower)
                        )));
                    }
                    Some(map) => {
                        let (src, tgt) = (&levels[upper], &levels[lower]);
                        if map.len() != src.len() || map.iter().any(|&v| v >= tgt.len()) {
                            return Err(Error::EndpointMismatch {
                                expected: format!("{} -> {}", src.len(), tgt.len()),
                                found: format!("map of length {}", map.len()),
                            });
                        }
                        for i in 0..src.len() {
                            for j in 0..src.len() {
                                if src.related_idx(i, j) && !tgt.related_idx(map[i], map[j]) {
                                    return Err(Error::Precondition(format!(
                                        "restriction `{}` -> `{}` does not preserve the \
                                         relation at ({}, {})",
                                        base.name(upper),
                                        base.name(lower),
                                        src.name(i),
                                        src.name(j)
                                    )));
                                }
                            }
                        }
                    }
                    None => {}
                }
            }
        }
        // Functoriality: any two composable restrictions agree with the
        // direct one.
        for upper in 0..base.len() {
            for mid in 0..base.len() {
                for lower in 0..base.len() {
                    if upper == mid || mid == lower || upper == lower {
                        continue;
                    }
                    if !(base.le_idx(lower, mid) && base.le_idx(mid, upper)) {
                        continue;
                    }
                    let first = &restrictions[&(upper, mid)];
                    let second = &restrictions[&(mid, lower)];
                    let direct = &restrictions[&(upper, lower)];
                    for i in 0..levels[upper].len() {
                        if second[first[i]] != direct[i] {
                            return Err(Error::Precondition(format!(
                                "restrictions `{}` -> `{}` -> `{}` disagree with the direct \
                                 map at `{}`",
                                base.name(upper),
                                base.name(mid),
                                base.name(lower),
                                levels[upper].name(i)
                            )));
                        }
                    }
                }
            }
        }
        Ok(FinPresheaf {
            base,
            kind,
            levels,
            restrictions,
        })
    }

    pub fn base(&self) -> &BasePoset {
        &self.base
    }

    pub fn kind(&self) -> ValueKind {
        self.kind
    }

    pub fn level(&self, x: usize) -> &Level {
        &self.levels[x]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// The restriction map from the level at `upper` to the level at
    /// `lower`; identity when the two coincide.  Panics if `lower` is not
    /// below `upper` in the base.
    pub fn restriction(&self, upper: usize, lower: usize) -> Vec<usize> {
        if upper == lower {
            return (0..self.levels[upper].len()).collect();
        }
        self.restrictions[&(upper, lower)].clone()
    }

    /// The strongest value kind every level actually satisfies, which can
    /// exceed the declared kind.
    pub fn actual_kind(&self) -> ValueKind {
        if self.levels.iter().all(|l| l.satisfies(ValueKind::Ord)) {
            ValueKind::Ord
        } else if self.levels.iter().all(|l| l.satisfies(ValueKind::Rel)) {
            ValueKind::Rel
        } else {
            ValueKind::Gph
        }
    }
}

/// A natural transformation between presheaves on the same base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NatTrans {
    src: FinPresheaf,
    tgt: FinPresheaf,
    components: Vec<Vec<usize>>,
}

impl NatTrans {
    pub fn new(src: FinPresheaf, tgt: FinPresheaf, components: Vec<Vec<usize>>) -> Result<Self> {
        if src.base != tgt.base {
            return Err(Error::BaseMismatch);
        }
        if components.len() != src.levels.len() {
            return Err(Error::Precondition(format!(
                "expected {} components, got {}",
                src.levels.len(),
                components.len()
            )));
        }
        for (x, c) in components.iter().enumerate() {
            let (s, t) = (&src.levels[x], &tgt.levels[x]);
            if c.len() != s.len() || c.iter().any(|&v| v >= t.len()) {
                return Err(Error::EndpointMismatch {
                    expected: format!("component of length {} into {}", s.len(), t.len()),
                    found: format!("length {}", c.len()),
                });
            }
            for i in 0..s.len() {
                for j in 0..s.len() {
                    if s.related_idx(i, j) && !t.related_idx(c[i], c[j]) {
                        return Err(Error::Precondition(format!(
                            "component at `{}` does not preserve the relation at ({}, {})",
                            src.base.name(x),
                            s.name(i),
                            s.name(j)
                        )));
                    }
                }
            }
        }
        for (&(upper, lower), r_src) in &src.restrictions {
            let r_tgt = &tgt.restrictions[&(upper, lower)];
            for i in 0..src.levels[upper].len() {
                if components[lower][r_src[i]] != r_tgt[components[upper][i]] {
                    return Err(Error::Precondition(format!(
                        "naturality square `{}` -> `{}` fails at `{}`",
                        src.base.name(upper),
                        src.base.name(lower),
                        src.levels[upper].name(i)
                    )));
                }
            }
        }
        Ok(NatTrans {
            src,
            tgt,
            components,
        })
    }

    pub fn identity(g: &FinPresheaf) -> Self {
        let components = g.levels.iter().map(|l| (0..l.len()).collect()).collect();
        NatTrans {
            src: g.clone(),
            tgt: g.clone(),
            components,
        }
    }

    pub fn src(&self) -> &FinPresheaf {
        &self.src
    }

    pub fn tgt(&self) -> &FinPresheaf {
        &self.tgt
    }

    pub fn component(&self, x: usize) -> &[usize] {
        &self.components[x]
    }
}

/// Searches for an isomorphism of presheaves: levelwise relation-preserving
/// and -reflecting bijections commuting with every restriction map.
/// Returns the levelwise bijections if one exists.
pub fn presheaf_iso(g: &FinPresheaf, h: &FinPresheaf) -> Option<Vec<Vec<usize>>> {
    if g.base != h.base || g.kind != h.kind {
        return None;
    }
    let n = g.levels.len();
    if (0..n).any(|x| g.levels[x].len() != h.levels[x].len()) {
        return None;
    }
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    if assign_level(g, h, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn assign_level(g: &FinPresheaf, h: &FinPresheaf, chosen: &mut Vec<Vec<usize>>) -> bool {
    let x = chosen.len();
    if x == g.levels.len() {
        return true;
    }
    let size = g.levels[x].len();
    let mut perm: Vec<usize> = Vec::with_capacity(size);
    let mut used = vec![false; size];
    extend_perm(g, h, x, &mut perm, &mut used, chosen)
}

fn extend_perm(
    g: &FinPresheaf,
    h: &FinPresheaf,
    x: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    chosen: &mut Vec<Vec<usize>>,
) -> bool {
    let level_g = &g.levels[x];
    let level_h = &h.levels[x];
    if perm.len() == level_g.len() {
        // Full bijection at this level: check squares against every
        // already-assigned comparable level, in both directions.
        for y in 0..x {
            if y != x && g.base().le_idx(y, x) {
                let rg = &g.restrictions[&(x, y)];
                let rh = &h.restrictions[&(x, y)];
                for i in 0..level_g.len() {
                    if chosen[y][rg[i]] != rh[perm[i]] {
                        return false;
                    }
                }
            }
            if y != x && g.base().le_idx(x, y) {
                let rg = &g.restrictions[&(y, x)];
                let rh = &h.restrictions[&(y, x)];
                for i in 0..g.levels[y].len() {
                    if perm[rg[i]] != rh[chosen[y][i]] {
                        return false;
                    }
                }
            }
        }
        chosen.push(perm.clone());
        if assign_level(g, h, chosen) {
            return true;
        }
        chosen.pop();
        return false;
    }
    let i = perm.len();
    for cand in 0..level_h.len() {
        if used[cand] {
            continue;
        }
        // Relation must be preserved and reflected against earlier picks.
        let ok = (0..=i).all(|j| {
            let cj = if j == i { cand } else { perm[j] };
            level_g.related_idx(i, j) == level_h.related_idx(cand, cj)
                && level_g.related_idx(j, i) == level_h.related_idx(cj, cand)
        });
        if !ok {
            continue;
        }
        used[cand] = true;
        perm.push(cand);
        if extend_perm(g, h, x, perm, used, chosen) {
            return true;
        }
        perm.pop();
        used[cand] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::base_c2;

    fn two_point_presheaf(top_rel: &[(&str, &str)]) -> FinPresheaf {
        // Over C2: level bot = chain u <= v, level top as given.
        let bot = Level::new(&["u", "v"], &[("u", "u"), ("v", "v"), ("u", "v")]).unwrap();
        let mut pairs: Vec<(&str, &str)> = vec![("u", "u"), ("v", "v")];
        pairs.extend_from_slice(top_rel);
        let top = Level::new(&["u", "v"], &pairs).unwrap();
        let mut restrictions = BTreeMap::new();
        restrictions.insert((1, 0), vec![0, 1]);
        FinPresheaf::new(base_c2(), ValueKind::Rel, vec![bot, top], restrictions).unwrap()
    }

    #[test]
    fn kind_checks() {
        let l = Level::new(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b")]).unwrap();
        assert!(l.satisfies(ValueKind::Ord));
        let bare = Level::new(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(bare.satisfies(ValueKind::Gph));
        assert!(!bare.satisfies(ValueKind::Rel));
    }

    #[test]
    fn non_transitive_level_is_rel_not_ord() {
        let l = Level::new(
            &["x", "y", "z"],
            &[("x", "x"), ("y", "y"), ("z", "z"), ("x", "y"), ("y", "z")],
        )
        .unwrap();
        assert!(l.satisfies(ValueKind::Rel));
        assert!(!l.satisfies(ValueKind::Ord));
    }

    #[test]
    fn functoriality_is_enforced() {
        // Over C2 there are no composable strict pairs, so build a broken
        // relation-preservation case instead: bot discrete, top a chain.
        let bot = Level::new(&["u", "v"], &[("u", "u"), ("v", "v")]).unwrap();
        let top = Level::new(&["u", "v"], &[("u", "u"), ("v", "v"), ("u", "v")]).unwrap();
        let mut restrictions = BTreeMap::new();
        restrictions.insert((1, 0), vec![0, 1]);
        let err = FinPresheaf::new(base_c2(), ValueKind::Rel, vec![bot, top], restrictions)
            .unwrap_err();
        assert!(err.to_string().contains("does not preserve"));
    }

    #[test]
    fn iso_respects_restrictions() {
        let g = two_point_presheaf(&[("u", "v")]);
        let h = two_point_presheaf(&[("u", "v")]);
        assert!(presheaf_iso(&g, &h).is_some());
        // Levelwise isomorphic (both tops are 2-chains), but one
        // restriction collapses while the other is injective, so no level
        // bijections can be natural.
        let bot = Level::new(&["u", "v"], &[("u", "u"), ("v", "v"), ("u", "v")]).unwrap();
        let top = Level::new(&["u", "v"], &[("u", "u"), ("v", "v"), ("v", "u")]).unwrap();
        let mut restrictions = BTreeMap::new();
        restrictions.insert((1, 0), vec![0, 0]);
        let crushed =
            FinPresheaf::new(base_c2(), ValueKind::Rel, vec![bot, top], restrictions).unwrap();
        assert!(presheaf_iso(&g, &crushed).is_none());
    }

    #[test]
    fn nat_trans_validation() {
        let g = two_point_presheaf(&[("u", "v")]);
        let id = NatTrans::identity(&g);
        assert_eq!(id.component(0), &[0, 1]);
        // Swapping at one level only breaks naturality.
        let swapped = NatTrans::new(g.clone(), g.clone(), vec![vec![1, 0], vec![0, 1]]);
        assert!(swapped.is_err());
    }
}

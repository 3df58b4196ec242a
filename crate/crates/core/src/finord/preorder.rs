use serde::Serialize;

use crate::{Error, Result};

/// A finite preorder.
///
/// Element names are sorted and the full reflexive-transitive closure is
/// stored, so `le` queries are O(1) lookups and equal structures compare
/// equal regardless of how they were presented.  The type is immutable:
/// every construction builds a fresh value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinPreorder {
    elems: Vec<String>,
    /// Row-major `n * n` closure matrix.  Invariant: reflexive, transitive.
    leq: Vec<bool>,
}

impl FinPreorder {
    /// Builds a preorder from element names and generating pairs `(a, b)`
    /// meaning `a <= b`.  The stored relation is the reflexive-transitive
    /// closure of the input.
    pub fn new<S: AsRef<str>>(elems: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = elems.iter().map(|s| s.as_ref().to_owned()).collect();
        names.sort();
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateElement(w[0].clone()));
            }
        }
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        let idx = |name: &str| -> Result<usize> {
            names
                .binary_search_by(|e| e.as_str().cmp(name))
                .map_err(|_| Error::UnknownElement(name.to_owned()))
        };
        for (a, b) in pairs {
            let i = idx(a.as_ref())?;
            let j = idx(b.as_ref())?;
            leq[i * n + j] = true;
        }
        close(&mut leq, n);
        Ok(FinPreorder { elems: names, leq })
    }

    /// The discrete preorder: only reflexive comparisons.
    pub fn discrete<S: AsRef<str>>(elems: &[S]) -> Result<Self> {
        Self::new(elems, &[])
    }

    /// Builds from already-closed data.  `le` is consulted on the *sorted*
    /// element order; callers pass a relation that is already reflexive and
    /// transitive (debug-asserted).
    pub(crate) fn from_closed(
        mut named: Vec<String>,
        le: impl Fn(&str, &str) -> bool,
    ) -> Result<Self> {
        named.sort();
        for w in named.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateElement(w[0].clone()));
            }
        }
        let n = named.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = le(&named[i], &named[j]);
            }
        }
        let p = FinPreorder { elems: named, leq };
        debug_assert!(p.closure_is_fixed());
        Ok(p)
    }

    fn closure_is_fixed(&self) -> bool {
        let n = self.len();
        let mut copy = self.leq.clone();
        close(&mut copy, n);
        copy == self.leq && (0..n).all(|i| self.leq[i * n + i])
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

    /// Index lookup that reports the offending name on failure.
    pub fn index_checked(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn le_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    /// Panics on unknown names; use `index_checked` first when the names
    /// come from outside.
    pub fn le(&self, a: &str, b: &str) -> bool {
        let i = self.index_of(a).unwrap_or_else(|| panic!("unknown element `{a}`"));
        let j = self.index_of(b).unwrap_or_else(|| panic!("unknown element `{b}`"));
        self.le_idx(i, j)
    }

    /// All comparable index pairs `(i, j)` with `i <= j`, reflexive ones
    /// included, in row-major order.
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.le_idx(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Non-reflexive comparable pairs, for printing.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        self.comparable_pairs()
            .into_iter()
            .filter(|&(i, j)| i != j)
            .collect()
    }

    /// `Some((a, b))` with a two-way comparable pair of distinct elements,
    /// if any.
    pub fn antisymmetry_failure(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.le_idx(i, j) && self.le_idx(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_discrete(&self) -> bool {
        self.strict_pairs().is_empty()
    }

    /// Restricts to the elements at `keep` (indices into this preorder),
    /// keeping names and the induced order.
    pub fn restrict(&self, keep: &[usize]) -> FinPreorder {
        let named: Vec<String> = keep.iter().map(|&i| self.elems[i].clone()).collect();
        FinPreorder::from_closed(named, |a, b| self.le(a, b))
            .expect("restriction keeps names unique")
    }

    /// True iff the identity-on-names map is an isomorphism, i.e. both
    /// carriers and closed relations agree.
    pub fn same_as(&self, other: &FinPreorder) -> bool {
        self == other
    }
}

/// Every preorder on the elements `{prefix}0 .. {prefix}{n-1}`, in a fixed
/// enumeration order (by the bitmask of the off-diagonal relation).
pub fn all_preorders(prefix: &str, n: usize) -> Vec<FinPreorder> {
    let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let off_diag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for code in 0..1u64 << off_diag.len() {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (bit, &(i, j)) in off_diag.iter().enumerate() {
            if code >> bit & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| !leq[i * n + j] || (0..n).all(|k| !leq[j * n + k] || leq[i * n + k]))
        });
        if transitive {
            out.push(FinPreorder {
                elems: names.clone(),
                leq,
            });
        }
    }
    out
}

/// In-place reflexive-transitive closure of an `n * n` matrix.
fn close(leq: &mut [bool], n: usize) {
    for i in 0..n {
        leq[i * n + i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
}

use serde::Serialize;

use crate::finord::preorder::FinPreorder;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Meet,
    Join,
}

/// A finite complete poset: the base everything is fibred over.
///
/// Construction verifies antisymmetry and completeness (exhaustively over
/// all subsets up to 10 elements, via binary bounds plus extrema beyond
/// that) and caches the binary meet/join tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BasePoset {
    order: FinPreorder,
    meet: Vec<usize>,
    join: Vec<usize>,
    top: usize,
    bottom: usize,
}

impl BasePoset {
    pub fn new(order: FinPreorder) -> Result<Self> {
        if let Some((i, j)) = order.antisymmetry_failure() {
            return Err(Error::NotAntisymmetric(
                order.name(i).to_owned(),
                order.name(j).to_owned(),
            ));
        }
        let n = order.len();
        if n == 0 {
            return Err(Error::NotComplete {
                subset: String::new(),
                bound: "meet".into(),
            });
        }
        if n <= 10 {
            // Every subset, the empty one included, needs both bounds.
            for mask in 0u32..(1 << n) {
                let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                for dir in [Direction::Meet, Direction::Join] {
                    scan_bound(&order, &subset, dir)?;
                }
            }
        } else {
            for i in 0..n {
                for j in 0..n {
                    scan_bound(&order, &[i, j], Direction::Meet)?;
                    scan_bound(&order, &[i, j], Direction::Join)?;
                }
            }
            scan_bound(&order, &[], Direction::Meet)?;
            scan_bound(&order, &[], Direction::Join)?;
        }
        let top = scan_bound(&order, &[], Direction::Meet)?;
        let bottom = scan_bound(&order, &[], Direction::Join)?;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = scan_bound(&order, &[i, j], Direction::Meet)?;
                join[i * n + j] = scan_bound(&order, &[i, j], Direction::Join)?;
            }
        }
        Ok(BasePoset {
            order,
            meet,
            join,
            top,
            bottom,
        })
    }

    pub fn order(&self) -> &FinPreorder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elems(&self) -> &[String] {
        self.order.elems()
    }

    pub fn name(&self, i: usize) -> &str {
        self.order.name(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.order.index_of(name)
    }

    pub fn le_idx(&self, i: usize, j: usize) -> bool {
        self.order.le_idx(i, j)
    }

    pub fn le(&self, a: &str, b: &str) -> bool {
        self.order.le(a, b)
    }

    pub fn top_idx(&self) -> usize {
        self.top
    }

    pub fn bottom_idx(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> &str {
        self.order.name(self.top)
    }

    pub fn bottom(&self) -> &str {
        self.order.name(self.bottom)
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    pub fn join_idx(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn meet(&self, a: &str, b: &str) -> &str {
        let i = self.order.index_of(a).expect("known element");
        let j = self.order.index_of(b).expect("known element");
        self.name(self.meet_idx(i, j))
    }

    pub fn join(&self, a: &str, b: &str) -> &str {
        let i = self.order.index_of(a).expect("known element");
        let j = self.order.index_of(b).expect("known element");
        self.name(self.join_idx(i, j))
    }

    /// Meet of arbitrarily many indices; the empty meet is the top.
    pub fn meet_all(&self, idxs: impl IntoIterator<Item = usize>) -> usize {
        idxs.into_iter().fold(self.top, |acc, i| self.meet_idx(acc, i))
    }

    /// Join of arbitrarily many indices; the empty join is the bottom.
    pub fn join_all(&self, idxs: impl IntoIterator<Item = usize>) -> usize {
        idxs.into_iter()
            .fold(self.bottom, |acc, i| self.join_idx(acc, i))
    }

    /// Bound of a subset by direct search, not by folding the cached binary
    /// tables; tests compare the two routes.
    pub fn bound<S: AsRef<str>>(&self, subset: &[S], dir: Direction) -> Result<&str> {
        let idxs = subset
            .iter()
            .map(|s| self.order.index_checked(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let i = scan_bound(&self.order, &idxs, dir)?;
        Ok(self.name(i))
    }

    /// `y^x`: the largest `z` with `z /\ x <= y`, verified by residuation.
    /// Fails with the witness `z` breaking `z <= y^x  iff  z /\ x <= y`.
    pub fn heyting_idx(&self, x: usize, y: usize) -> Result<usize> {
        let candidate = self.join_all((0..self.len()).filter(|&z| {
            self.le_idx(self.meet_idx(z, x), y)
        }));
        for z in 0..self.len() {
            let lhs = self.le_idx(z, candidate);
            let rhs = self.le_idx(self.meet_idx(z, x), y);
            if lhs != rhs {
                return Err(Error::NotHeyting {
                    x: self.name(x).to_owned(),
                    y: self.name(y).to_owned(),
                    z: self.name(z).to_owned(),
                });
            }
        }
        Ok(candidate)
    }

    pub fn heyting(&self, x: &str, y: &str) -> Result<&str> {
        let xi = self.order.index_checked(x)?;
        let yi = self.order.index_checked(y)?;
        self.heyting_idx(xi, yi).map(|i| self.name(i))
    }

    /// An element is exponentiable when `-^x` is total.
    pub fn exponentiable_idx(&self, x: usize) -> bool {
        (0..self.len()).all(|y| self.heyting_idx(x, y).is_ok())
    }

    pub fn exponentiable(&self, x: &str) -> Result<bool> {
        Ok(self.exponentiable_idx(self.order.index_checked(x)?))
    }

    /// Every element exponentiable.  For finite lattices this coincides
    /// with binary distributivity, which `is_distributive` checks
    /// independently.
    pub fn is_frame(&self) -> bool {
        (0..self.len()).all(|x| self.exponentiable_idx(x))
    }

    /// Binary distributivity `x /\ (y \/ z) = (x /\ y) \/ (x /\ z)`.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet_idx(x, self.join_idx(y, z));
                    let rhs = self.join_idx(self.meet_idx(x, y), self.meet_idx(x, z));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Greatest lower / least upper bound of `subset` by scanning candidates;
/// reports the subset when no bound exists.
fn scan_bound(order: &FinPreorder, subset: &[usize], dir: Direction) -> Result<usize> {
    let n = order.len();
    let below = |c: usize, s: usize| match dir {
        Direction::Meet => order.le_idx(c, s),
        Direction::Join => order.le_idx(s, c),
    };
    let candidates: Vec<usize> = (0..n)
        .filter(|&c| subset.iter().all(|&s| below(c, s)))
        .collect();
    let best = candidates.iter().copied().find(|&c| {
        candidates.iter().all(|&other| match dir {
            Direction::Meet => order.le_idx(other, c),
            Direction::Join => order.le_idx(c, other),
        })
    });
    best.ok_or_else(|| Error::NotComplete {
        subset: subset
            .iter()
            .map(|&i| order.name(i))
            .collect::<Vec<_>>()
            .join(" "),
        bound: match dir {
            Direction::Meet => "meet".into(),
            Direction::Join => "join".into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chain_is_complete_with_expected_extrema() {
        let x = fixtures::base_c2();
        assert_eq!(x.top(), "1");
        assert_eq!(x.bottom(), "0");
        assert_eq!(x.meet("0", "1"), "0");
        assert_eq!(x.join("0", "1"), "1");
    }

    #[test]
    fn antisymmetry_is_required() {
        let p = FinPreorder::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let err = BasePoset::new(p).unwrap_err();
        assert_eq!(err, Error::NotAntisymmetric("a".into(), "b".into()));
    }

    #[test]
    fn incomplete_poset_reports_witness_subset() {
        // Two incomparable points: no top, no join of the pair.
        let p = FinPreorder::discrete(&["a", "b"]).unwrap();
        let err = BasePoset::new(p).unwrap_err();
        match err {
            Error::NotComplete { .. } => {}
            other => panic!("expected completeness failure, got {other}"),
        }
    }

    #[test]
    fn boolean_square_meets_atoms_to_bottom() {
        let x = fixtures::base_b2();
        assert_eq!(x.meet("p", "q"), "bot");
        assert_eq!(x.join("p", "q"), "top");
    }

    #[test]
    fn empty_bounds_are_extrema_and_agree_with_tables() {
        let x = fixtures::base_b3();
        assert_eq!(x.bound::<&str>(&[], Direction::Meet).unwrap(), x.top());
        assert_eq!(x.bound::<&str>(&[], Direction::Join).unwrap(), x.bottom());
        // Direct scans agree with folded tables on all small subsets.
        let names: Vec<&str> = x.elems().iter().map(|s| s.as_str()).collect();
        for i in 0..names.len() {
            for j in 0..names.len() {
                for k in 0..names.len() {
                    let sub = [names[i], names[j], names[k]];
                    let scan = x.bound(&sub, Direction::Meet).unwrap();
                    let folded = x.name(x.meet_all([i, j, k]));
                    assert_eq!(scan, folded);
                    let scan = x.bound(&sub, Direction::Join).unwrap();
                    let folded = x.name(x.join_all([i, j, k]));
                    assert_eq!(scan, folded);
                }
            }
        }
    }

    #[test]
    fn heyting_on_chain() {
        let x = fixtures::base_c2();
        assert_eq!(x.heyting("1", "0").unwrap(), "0");
        assert_eq!(x.heyting("0", "0").unwrap(), "1");
        assert_eq!(x.heyting("0", "1").unwrap(), "1");
        assert_eq!(x.heyting("1", "1").unwrap(), "1");
    }

    #[test]
    fn diamond_fails_residuation_with_witness() {
        let x = fixtures::base_m3();
        let err = x.heyting("a", "b").unwrap_err();
        match err {
            Error::NotHeyting { x, y, z } => {
                assert_eq!((x.as_str(), y.as_str()), ("a", "b"));
                // The candidate join overshoots to `top`, so `a` itself
                // sits under it while `a /\ a` escapes `b`.
                assert_eq!(z, "a");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn frame_detection_matches_distributivity_on_fixtures() {
        for (base, expect) in [
            (fixtures::base_c2(), true),
            (fixtures::base_c3(), true),
            (fixtures::base_b2(), true),
            (fixtures::base_b3(), true),
            (fixtures::base_m3(), false),
            (fixtures::base_n5(), false),
        ] {
            assert_eq!(base.is_frame(), expect, "frame on {:?}", base.elems());
            assert_eq!(base.is_distributive(), expect);
            assert_eq!(
                (0..base.len()).all(|x| base.exponentiable_idx(x)),
                expect
            );
        }
    }
}

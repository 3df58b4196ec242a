use std::collections::BTreeMap;

use crate::presheaf::data::{FinPresheaf, Level, NatTrans};
use crate::{Error, Result};

/// The pullback of two natural transformations with a common codomain,
/// computed levelwise: carriers are the fibre products, relations are
/// componentwise, restrictions and the two projections are induced.
///
/// The declared value kind of the result is the weaker of the two source
/// kinds; reflexivity survives pointwise but transitivity need not, which
/// is exactly how a pullback can leave the preorder-valued world.
pub fn pullback_presheaf(
    alpha: &NatTrans,
    beta: &NatTrans,
) -> Result<(FinPresheaf, NatTrans, NatTrans)> {
    if alpha.tgt() != beta.tgt() {
        return Err(Error::NotCospan);
    }
    let f = alpha.src();
    let g = beta.src();
    let base = f.base().clone();
    let kind = f.kind().min(g.kind());
    // Pair lists per level, in lexicographic index order, plus the sorted
    // level and the positions of each pair in it.
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(base.len());
    let mut levels: Vec<Level> = Vec::with_capacity(base.len());
    let mut positions: Vec<Vec<usize>> = Vec::with_capacity(base.len());
    for x in 0..base.len() {
        let (lf, lg) = (f.level(x), g.level(x));
        let mut level_pairs = Vec::new();
        for i in 0..lf.len() {
            for j in 0..lg.len() {
                if alpha.component(x)[i] == beta.component(x)[j] {
                    level_pairs.push((i, j));
                }
            }
        }
        let names: Vec<String> = level_pairs
            .iter()
            .map(|&(i, j)| format!("({},{})", lf.name(i), lg.name(j)))
            .collect();
        let m = level_pairs.len();
        let mut rel = vec![false; m * m];
        for (p, &(i0, j0)) in level_pairs.iter().enumerate() {
            for (q, &(i1, j1)) in level_pairs.iter().enumerate() {
                rel[p * m + q] = lf.related_idx(i0, i1) && lg.related_idx(j0, j1);
            }
        }
        let (level, pos) = Level::from_parts(names, rel)?;
        pairs.push(level_pairs);
        levels.push(level);
        positions.push(pos);
    }
    let mut restrictions = BTreeMap::new();
    for upper in 0..base.len() {
        for lower in 0..base.len() {
            if upper == lower || !base.le_idx(lower, upper) {
                continue;
            }
            let (rf, rg) = (f.restriction(upper, lower), g.restriction(upper, lower));
            let mut map = vec![0usize; pairs[upper].len()];
            for (p, &(i, j)) in pairs[upper].iter().enumerate() {
                let image = (rf[i], rg[j]);
                let q = pairs[lower]
                    .binary_search(&image)
                    .expect("restrictions are compatible with the fibre product");
                map[positions[upper][p]] = positions[lower][q];
            }
            restrictions.insert((upper, lower), map);
        }
    }
    let object = FinPresheaf::new(base.clone(), kind, levels, restrictions)?;
    let mut to_f: Vec<Vec<usize>> = vec![Vec::new(); base.len()];
    let mut to_g: Vec<Vec<usize>> = vec![Vec::new(); base.len()];
    for x in 0..base.len() {
        let mut cf = vec![0usize; pairs[x].len()];
        let mut cg = vec![0usize; pairs[x].len()];
        for (p, &(i, j)) in pairs[x].iter().enumerate() {
            cf[positions[x][p]] = i;
            cg[positions[x][p]] = j;
        }
        to_f[x] = cf;
        to_g[x] = cg;
    }
    let pi_f = NatTrans::new(object.clone(), f.clone(), to_f)?;
    let pi_g = NatTrans::new(object.clone(), g.clone(), to_g)?;
    Ok((object, pi_f, pi_g))
}

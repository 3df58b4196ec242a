//! Limits, colimits, and exponentials of finite preorders, each returned
//! together with its structure maps.

use crate::finord::map::{monotone_maps, MonotoneMap};
use crate::finord::preorder::FinPreorder;
use crate::{Error, Result};

fn tuple_name(parts: &[&str]) -> String {
    format!("({})", parts.join(","))
}

/// Product of a family, with projections.  The empty product is the
/// singleton `*`; a single factor is returned as-is with the identity.
pub fn product(factors: &[&FinPreorder]) -> Result<(FinPreorder, Vec<MonotoneMap>)> {
    match factors.len() {
        0 => {
            let one = FinPreorder::new(&["*"], &[])?;
            return Ok((one, Vec::new()));
        }
        1 => {
            let p = factors[0].clone();
            return Ok((p.clone(), vec![MonotoneMap::identity(&p)]));
        }
        _ => {}
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in factors {
        let mut next = Vec::new();
        for t in &tuples {
            for i in 0..f.len() {
                let mut t2 = t.clone();
                t2.push(i);
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut named: Vec<(String, Vec<usize>)> = tuples
        .into_iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&i, f)| f.name(i)).collect();
            (tuple_name(&parts), t)
        })
        .collect();
    named.sort_by(|a, b| a.0.cmp(&b.0));
    if named.windows(2).any(|w| w[0].0 == w[1].0) {
        let dup = named
            .windows(2)
            .find(|w| w[0].0 == w[1].0)
            .map(|w| w[0].0.clone())
            .unwrap();
        return Err(Error::DuplicateElement(dup));
    }
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let lookup = |name: &str| -> &Vec<usize> {
        &named[named.binary_search_by(|(n, _)| n.as_str().cmp(name)).unwrap()].1
    };
    let carrier = FinPreorder::from_closed(names, |a, b| {
        let ta = lookup(a);
        let tb = lookup(b);
        ta.iter()
            .zip(tb)
            .zip(factors)
            .all(|((&i, &j), f)| f.le_idx(i, j))
    })?;
    let projections = (0..factors.len())
        .map(|k| {
            let map = carrier
                .elems()
                .iter()
                .map(|e| lookup(e)[k])
                .collect::<Vec<_>>();
            MonotoneMap::from_indices(carrier.clone(), factors[k].clone(), map)
                .expect("projection is monotone by the componentwise order")
        })
        .collect();
    Ok((carrier, projections))
}

/// Coproduct of a family, with injections.  Elements of the `i`-th summand
/// are renamed `i.{name}`; the empty coproduct is the empty preorder.
pub fn coproduct(summands: &[&FinPreorder]) -> Result<(FinPreorder, Vec<MonotoneMap>)> {
    let mut named: Vec<(String, (usize, usize))> = Vec::new();
    for (k, s) in summands.iter().enumerate() {
        for i in 0..s.len() {
            named.push((format!("{k}.{}", s.name(i)), (k, i)));
        }
    }
    named.sort_by(|a, b| a.0.cmp(&b.0));
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let lookup = |name: &str| -> (usize, usize) {
        named[named.binary_search_by(|(n, _)| n.as_str().cmp(name)).unwrap()].1
    };
    let carrier = FinPreorder::from_closed(names, |a, b| {
        let (ka, ia) = lookup(a);
        let (kb, ib) = lookup(b);
        ka == kb && summands[ka].le_idx(ia, ib)
    })?;
    let injections = summands
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let map = s
                .elems()
                .iter()
                .map(|e| {
                    carrier
                        .index_of(&format!("{k}.{e}"))
                        .expect("summand element present")
                })
                .collect::<Vec<_>>();
            MonotoneMap::from_indices((*s).clone(), carrier.clone(), map)
                .expect("injection preserves the summand order")
        })
        .collect();
    Ok((carrier, injections))
}

/// Equalizer of a parallel pair: the sub-preorder where the maps agree,
/// with its inclusion.
pub fn equalizer(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPreorder, MonotoneMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::NotParallel);
    }
    let keep: Vec<usize> = (0..f.dom().len())
        .filter(|&i| f.apply_idx(i) == g.apply_idx(i))
        .collect();
    let sub = f.dom().restrict(&keep);
    let incl = MonotoneMap::from_fn(sub.clone(), f.dom().clone(), |e| e.to_owned())
        .expect("inclusion of a restriction is monotone");
    Ok((sub, incl))
}

/// Pullback of a cospan `f : Y -> Z <- W : g`: pairs `(y, w)` with
/// `f(y) = g(w)`, ordered componentwise, with the two projections.
pub fn pullback(
    f: &MonotoneMap,
    g: &MonotoneMap,
) -> Result<(FinPreorder, MonotoneMap, MonotoneMap)> {
    if f.cod() != g.cod() {
        return Err(Error::NotCospan);
    }
    let mut named: Vec<(String, (usize, usize))> = Vec::new();
    for y in 0..f.dom().len() {
        for w in 0..g.dom().len() {
            if f.apply_idx(y) == g.apply_idx(w) {
                named.push((
                    tuple_name(&[f.dom().name(y), g.dom().name(w)]),
                    (y, w),
                ));
            }
        }
    }
    named.sort_by(|a, b| a.0.cmp(&b.0));
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let lookup = |name: &str| -> (usize, usize) {
        named[named.binary_search_by(|(n, _)| n.as_str().cmp(name)).unwrap()].1
    };
    let carrier = FinPreorder::from_closed(names, |a, b| {
        let (ya, wa) = lookup(a);
        let (yb, wb) = lookup(b);
        f.dom().le_idx(ya, yb) && g.dom().le_idx(wa, wb)
    })?;
    let p1 = MonotoneMap::from_indices(
        carrier.clone(),
        f.dom().clone(),
        carrier.elems().iter().map(|e| lookup(e).0).collect(),
    )
    .expect("first projection is monotone");
    let p2 = MonotoneMap::from_indices(
        carrier.clone(),
        g.dom().clone(),
        carrier.elems().iter().map(|e| lookup(e).1).collect(),
    )
    .expect("second projection is monotone");
    Ok((carrier, p1, p2))
}

/// Coequalizer of a parallel pair: the codomain modulo the equivalence
/// generated by `f(y) ~ g(y)`, ordered by the reflexive-transitive closure
/// of the pushed-forward relation.  Classes are named by their
/// lexicographically least member.
pub fn coequalizer(f: &MonotoneMap, g: &MonotoneMap) -> Result<(FinPreorder, MonotoneMap)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::NotParallel);
    }
    let z = f.cod();
    let n = z.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for y in 0..f.dom().len() {
        let a = find(&mut parent, f.apply_idx(y));
        let b = find(&mut parent, g.apply_idx(y));
        if a != b {
            // Keep the smaller index as the representative so class names
            // are the least member.
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let reps: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut class_names: Vec<String> = reps
        .iter()
        .enumerate()
        .filter(|&(i, &r)| i == r)
        .map(|(i, _)| z.name(i).to_owned())
        .collect();
    class_names.sort();
    let class_of = |i: usize| -> usize {
        class_names
            .binary_search_by(|c| c.as_str().cmp(z.name(reps[i])))
            .expect("representative is a class name")
    };
    let q = class_names.len();
    let mut rel = vec![false; q * q];
    for (i, j) in z.comparable_pairs() {
        rel[class_of(i) * q + class_of(j)] = true;
    }
    for k in 0..q {
        for i in 0..q {
            if rel[i * q + k] {
                for j in 0..q {
                    if rel[k * q + j] {
                        rel[i * q + j] = true;
                    }
                }
            }
        }
    }
    let names = class_names.clone();
    let carrier = FinPreorder::from_closed(names, |a, b| {
        let i = class_names.binary_search_by(|c| c.as_str().cmp(a)).unwrap();
        let j = class_names.binary_search_by(|c| c.as_str().cmp(b)).unwrap();
        i == j || rel[i * q + j]
    })?;
    let qmap = MonotoneMap::from_indices(
        z.clone(),
        carrier.clone(),
        (0..n)
            .map(|i| carrier.index_of(z.name(reps[i])).expect("class name"))
            .collect(),
    )
    .expect("quotient map is monotone since generators push forward");
    Ok((carrier, qmap))
}

/// The preorder of monotone maps `y -> z` under the pointwise order.
pub struct Exponential {
    pub carrier: FinPreorder,
    /// Aligned with `carrier.elems()`: the map each element names.
    pub maps: Vec<MonotoneMap>,
}

impl Exponential {
    /// Looks up the carrier element naming a given image vector.
    pub fn index_of_mapping(&self, mapping: &[usize]) -> Option<usize> {
        self.maps.iter().position(|m| m.mapping() == mapping)
    }
}

/// Monotone maps `y -> z`, named `[v0|v1|...]` by their image vector over
/// the sorted domain, ordered pointwise.
pub fn exponential(y: &FinPreorder, z: &FinPreorder) -> Result<Exponential> {
    let all = monotone_maps(y, z);
    let mut named: Vec<(String, MonotoneMap)> = all
        .into_iter()
        .map(|m| {
            let parts: Vec<&str> = m.mapping().iter().map(|&i| z.name(i)).collect();
            (format!("[{}]", parts.join("|")), m)
        })
        .collect();
    named.sort_by(|a, b| a.0.cmp(&b.0));
    let names: Vec<String> = named.iter().map(|(n, _)| n.clone()).collect();
    let lookup = |name: &str| -> &MonotoneMap {
        &named[named.binary_search_by(|(n, _)| n.as_str().cmp(name)).unwrap()].1
    };
    let carrier = FinPreorder::from_closed(names, |a, b| {
        let ma = lookup(a);
        let mb = lookup(b);
        ma.mapping()
            .iter()
            .zip(mb.mapping())
            .all(|(&i, &j)| z.le_idx(i, j))
    })?;
    let maps = carrier.elems().iter().map(|e| lookup(e).clone()).collect();
    Ok(Exponential { carrier, maps })
}

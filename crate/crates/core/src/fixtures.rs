//! Small named structures used throughout the test suites and as builtin
//! names in the command-line tool.

use crate::finord::map::MonotoneMap;
use crate::finord::poset::BasePoset;
use crate::finord::preorder::FinPreorder;
use crate::laxcomma::object::{LaxMorphism, LaxObject};

/// The two-element chain `0 <= 1`.
pub fn c2() -> FinPreorder {
    FinPreorder::new(&["0", "1"], &[("0", "1")]).unwrap()
}

/// The three-element chain `z0 <= z1 <= z2`.
pub fn c3() -> FinPreorder {
    FinPreorder::new(&["z0", "z1", "z2"], &[("z0", "z1"), ("z1", "z2")]).unwrap()
}

/// An `n`-element chain `{prefix}0 <= ... <= {prefix}{n-1}`.
pub fn chain(prefix: &str, n: usize) -> FinPreorder {
    let elems: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| (format!("{prefix}{}", i - 1), format!("{prefix}{i}")))
        .collect();
    FinPreorder::new(&elems, &pairs).unwrap()
}

/// Discrete preorder on `e0 .. e{n-1}`.
pub fn antichain(n: usize) -> FinPreorder {
    let elems: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    FinPreorder::discrete(&elems).unwrap()
}

pub fn base_c2() -> BasePoset {
    BasePoset::new(c2()).unwrap()
}

pub fn base_c3() -> BasePoset {
    BasePoset::new(c3()).unwrap()
}

/// Powerset of `atoms` ordered by inclusion; the empty set is named `bot`,
/// the full set `top`, and every other subset by its sorted atom names run
/// together.
pub fn boolean(atoms: &[&str]) -> BasePoset {
    let k = atoms.len();
    let name = |mask: u32| -> String {
        if mask == 0 {
            return "bot".into();
        }
        if mask == (1 << k) - 1 {
            return "top".into();
        }
        let mut parts: Vec<&str> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| atoms[i]).collect();
        parts.sort();
        parts.concat()
    };
    let elems: Vec<String> = (0..1u32 << k).map(name).collect();
    let mut pairs = Vec::new();
    for a in 0..1u32 << k {
        for b in 0..1u32 << k {
            if a & b == a {
                pairs.push((name(a), name(b)));
            }
        }
    }
    BasePoset::new(FinPreorder::new(&elems, &pairs).unwrap()).unwrap()
}

/// Four-element Boolean algebra `bot <= p, q <= top`.
pub fn base_b2() -> BasePoset {
    boolean(&["p", "q"])
}

/// Eight-element Boolean algebra on atoms `p, q, r`.
pub fn base_b3() -> BasePoset {
    boolean(&["p", "q", "r"])
}

/// The diamond: three incomparable middle elements.  Not distributive.
pub fn base_m3() -> BasePoset {
    let p = FinPreorder::new(
        &["bot", "a", "b", "c", "top"],
        &[
            ("bot", "a"),
            ("bot", "b"),
            ("bot", "c"),
            ("a", "top"),
            ("b", "top"),
            ("c", "top"),
        ],
    )
    .unwrap();
    BasePoset::new(p).unwrap()
}

/// The pentagon: `bot <= a <= c <= top` and `bot <= b <= top`.  Not
/// distributive.
pub fn base_n5() -> BasePoset {
    let p = FinPreorder::new(
        &["bot", "a", "b", "c", "top"],
        &[("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")],
    )
    .unwrap();
    BasePoset::new(p).unwrap()
}

/// Two disjoint two-element chains `a0 <= a1` and `b1 <= b2`.
pub fn zigzag() -> FinPreorder {
    FinPreorder::new(&["a0", "a1", "b1", "b2"], &[("a0", "a1"), ("b1", "b2")]).unwrap()
}

/// The surjection from the disjoint chains onto the three-chain:
/// `a0 -> z0, a1 -> z1, b1 -> z1, b2 -> z2`.
pub fn fzz() -> MonotoneMap {
    MonotoneMap::new(
        zigzag(),
        c3(),
        &[("a0", "z0"), ("a1", "z1"), ("b1", "z1"), ("b2", "z2")],
    )
    .unwrap()
}

/// `fzz` as a morphism over the base `C3`, with the codomain structure the
/// identity and the domain structure inherited along the map.
pub fn fzz_lax() -> LaxMorphism {
    let base = base_c3();
    let f = fzz();
    let b = MonotoneMap::identity(base.order());
    let a = f.then(&b).unwrap();
    let src = LaxObject::new(base.clone(), zigzag(), a).unwrap();
    let tgt = LaxObject::new(base, c3(), b).unwrap();
    LaxMorphism::new(src, tgt, f).unwrap()
}

/// The singleton preorder `{pt}`.
pub fn singleton() -> FinPreorder {
    FinPreorder::new(&["pt"], &[]).unwrap()
}

/// The two-point discrete object over `B2` whose structure picks the two
/// atoms, collapsing onto the point with structure `top`.  Satisfies every
/// known necessary condition for an effective quotient while failing the
/// known sufficient one.
pub fn gap_morphism() -> LaxMorphism {
    let base = base_b2();
    let y = FinPreorder::discrete(&["yp", "yq"]).unwrap();
    let a = MonotoneMap::new(y.clone(), base.order().clone(), &[("yp", "p"), ("yq", "q")])
        .unwrap();
    let z = singleton();
    let b = MonotoneMap::new(z.clone(), base.order().clone(), &[("pt", "top")]).unwrap();
    let src = LaxObject::new(base.clone(), y.clone(), a).unwrap();
    let tgt = LaxObject::new(base, z.clone(), b).unwrap();
    let f = MonotoneMap::new(y, z, &[("yp", "pt"), ("yq", "pt")]).unwrap();
    LaxMorphism::new(src, tgt, f).unwrap()
}

/// Builtin base lookup by the names the command-line tool accepts.
pub fn builtin_base(name: &str) -> Option<BasePoset> {
    match name {
        "C2" => Some(base_c2()),
        "C3" => Some(base_c3()),
        "B2" => Some(base_b2()),
        "B3" => Some(base_b3()),
        "M3" => Some(base_m3()),
        "N5" => Some(base_n5()),
        _ => None,
    }
}

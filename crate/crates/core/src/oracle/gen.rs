//! Seeded random structure generation.  Identical configurations yield
//! identical streams; validity is guaranteed either by construction (lax
//! triangles, closures) or by bounded rejection sampling (monotonicity).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finord::map::MonotoneMap;
use crate::finord::poset::BasePoset;
use crate::finord::preorder::FinPreorder;
use crate::laxcomma::object::{LaxMorphism, LaxObject};
use crate::{Error, Result};

/// How many monotonicity rejections to tolerate before reporting the
/// sample as failed; failures are skipped by the stream consumers.
const MAX_RETRIES: usize = 1000;

/// Configuration of a generation stream.  Two equal configurations
/// produce identical streams.
#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    /// Largest carrier size drawn (sizes are uniform on `1..=max_elems`).
    pub max_elems: usize,
    /// Bases are drawn uniformly from this pool.
    pub base_pool: Vec<BasePoset>,
    /// Probability of each non-reflexive pair being related before
    /// closure.
    pub density: f64,
}

// The default StdRng is not stable across library releases; ChaCha8 is
// pinned explicitly so streams stay reproducible over upgrades.
pub struct Generator {
    cfg: GenConfig,
    rng: ChaCha8Rng,
    counter: u64,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Self {
        assert!(cfg.max_elems >= 1, "carriers need at least one element");
        assert!(!cfg.base_pool.is_empty(), "base pool must be non-empty");
        assert!((0.0..=1.0).contains(&cfg.density), "density is a probability");
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Generator {
            cfg,
            rng,
            counter: 0,
        }
    }

    pub fn base(&mut self) -> BasePoset {
        let i = self.rng.random_range(0..self.cfg.base_pool.len());
        self.cfg.base_pool[i].clone()
    }

    /// A random preorder: uniform size, each off-diagonal pair related
    /// with the configured density, then closed.  Element names are unique
    /// across the stream so drawn structures never collide on names.
    pub fn preorder(&mut self, prefix: &str) -> FinPreorder {
        let n = self.rng.random_range(1..=self.cfg.max_elems);
        self.counter += 1;
        let tag = self.counter;
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{tag}_{i}")).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.rng.random_bool(self.cfg.density) {
                    pairs.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        FinPreorder::new(&names, &pairs).expect("generated names are unique")
    }

    /// Rejection-samples a monotone map: uniform images, retried until the
    /// assignment is monotone.
    pub fn monotone_map(&mut self, dom: &FinPreorder, cod: &FinPreorder) -> Result<MonotoneMap> {
        if cod.is_empty() && !dom.is_empty() {
            return Err(Error::RetriesExhausted {
                what: "map into the empty preorder".into(),
                retries: 0,
            });
        }
        for _ in 0..MAX_RETRIES {
            let map: Vec<usize> = (0..dom.len())
                .map(|_| self.rng.random_range(0..cod.len()))
                .collect();
            if let Ok(m) = MonotoneMap::from_indices(dom.clone(), cod.clone(), map) {
                return Ok(m);
            }
        }
        Err(Error::RetriesExhausted {
            what: format!("monotone map on {} elements", dom.len()),
            retries: MAX_RETRIES,
        })
    }

    pub fn lax_object(&mut self, base: &BasePoset) -> Result<LaxObject> {
        let carrier = self.preorder("y");
        let s = self.monotone_map(&carrier, base.order())?;
        LaxObject::new(base.clone(), carrier, s)
    }

    /// A random morphism of the lax slice.  The underlying map and the
    /// target are sampled freely; the source structure is the pointwise
    /// meet of a free sample with the pulled-back target structure, which
    /// makes the triangle hold by construction while still reaching every
    /// valid structure.
    pub fn lax_morphism(&mut self, base: &BasePoset) -> Result<LaxMorphism> {
        let tgt = self.lax_object(base)?;
        let src_carrier = self.preorder("y");
        let f = self.monotone_map(&src_carrier, tgt.total())?;
        let free = self.monotone_map(&src_carrier, base.order())?;
        let bound = f.then(tgt.structure()).expect("composable by construction");
        let a: Vec<usize> = (0..src_carrier.len())
            .map(|y| base.meet_idx(free.apply_idx(y), bound.apply_idx(y)))
            .collect();
        let a = MonotoneMap::from_indices(src_carrier.clone(), base.order().clone(), a)
            .expect("meets of monotone maps are monotone");
        let src = LaxObject::new(base.clone(), src_carrier, a)?;
        LaxMorphism::new(src, tgt, f)
    }

    /// A parallel pair sharing source and target.
    pub fn parallel_pair(&mut self, base: &BasePoset) -> Result<(LaxMorphism, LaxMorphism)> {
        let tgt = self.lax_object(base)?;
        let src_carrier = self.preorder("y");
        let f = self.monotone_map(&src_carrier, tgt.total())?;
        let g = self.monotone_map(&src_carrier, tgt.total())?;
        let free = self.monotone_map(&src_carrier, base.order())?;
        let fb = f.then(tgt.structure()).expect("composable");
        let gb = g.then(tgt.structure()).expect("composable");
        let a: Vec<usize> = (0..src_carrier.len())
            .map(|y| {
                base.meet_all([free.apply_idx(y), fb.apply_idx(y), gb.apply_idx(y)])
            })
            .collect();
        let a = MonotoneMap::from_indices(src_carrier.clone(), base.order().clone(), a)
            .expect("meets of monotone maps are monotone");
        let src = LaxObject::new(base.clone(), src_carrier, a)?;
        Ok((
            LaxMorphism::new(src.clone(), tgt.clone(), f)?,
            LaxMorphism::new(src, tgt, g)?,
        ))
    }

    /// A cospan: two morphisms into a common target.
    pub fn cospan(&mut self, base: &BasePoset) -> Result<(LaxMorphism, LaxMorphism)> {
        let tgt = self.lax_object(base)?;
        let leg = |this: &mut Self| -> Result<LaxMorphism> {
            let carrier = this.preorder("y");
            let f = this.monotone_map(&carrier, tgt.total())?;
            let free = this.monotone_map(&carrier, base.order())?;
            let bound = f.then(tgt.structure()).expect("composable");
            let a: Vec<usize> = (0..carrier.len())
                .map(|y| base.meet_idx(free.apply_idx(y), bound.apply_idx(y)))
                .collect();
            let a = MonotoneMap::from_indices(carrier.clone(), base.order().clone(), a)
                .expect("meets of monotone maps are monotone");
            let src = LaxObject::new(base.clone(), carrier, a)?;
            LaxMorphism::new(src, tgt.clone(), f)
        };
        let l = leg(self)?;
        let r = leg(self)?;
        Ok((l, r))
    }
}

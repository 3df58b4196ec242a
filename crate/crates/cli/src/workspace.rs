//! Named structures resolved from parsed documents.  One namespace for
//! everything; later commands look entities up by name.  The builtin base
//! posets (C2, C3, B2, B3, M3, N5) are always in scope unless shadowed.

use std::collections::BTreeMap;

use laxcomma_core::fixtures::builtin_base;
use laxcomma_core::{BasePoset, FinPreorder, LaxMorphism, LaxObject, MonotoneMap};

use crate::dsl::{parse, print_decl, Decl};
use crate::error::CliError;

#[derive(Debug, Default)]
pub struct Workspace {
    /// Declarations in input order, for canonical printing.
    decls: Vec<Decl>,
    preorders: BTreeMap<String, FinPreorder>,
    posets: BTreeMap<String, BasePoset>,
    maps: BTreeMap<String, MonotoneMap>,
    objects: BTreeMap<String, LaxObject>,
    morphisms: BTreeMap<String, LaxMorphism>,
}

impl Workspace {
    pub fn from_documents<S: AsRef<str>>(texts: &[S]) -> Result<Self, CliError> {
        let mut ws = Workspace::default();
        for text in texts {
            for decl in parse(text.as_ref())? {
                ws.add(decl)?;
            }
        }
        Ok(ws)
    }

    fn claim(&mut self, name: &str) -> Result<(), CliError> {
        let taken = self.preorders.contains_key(name)
            || self.posets.contains_key(name)
            || self.maps.contains_key(name)
            || self.objects.contains_key(name)
            || self.morphisms.contains_key(name);
        if taken {
            return Err(CliError::Duplicate(name.to_string()));
        }
        Ok(())
    }

    fn add(&mut self, decl: Decl) -> Result<(), CliError> {
        self.claim(decl.name())?;
        let invalid = |name: &str| {
            let name = name.to_string();
            move |source: laxcomma_core::Error| CliError::Invalid { name, source }
        };
        match &decl {
            Decl::Preorder { name, elems, le } => {
                let p = FinPreorder::new(elems, le).map_err(invalid(name))?;
                self.preorders.insert(name.clone(), p);
            }
            Decl::Poset { name, elems, le } => {
                let order = FinPreorder::new(elems, le).map_err(invalid(name))?;
                let p = BasePoset::new(order).map_err(invalid(name))?;
                self.posets.insert(name.clone(), p);
            }
            Decl::Map {
                name,
                src,
                tgt,
                assignments,
            } => {
                let dom = self.preorder(src)?;
                let cod = self.preorder(tgt)?;
                let m = MonotoneMap::new(dom, cod, assignments).map_err(invalid(name))?;
                self.maps.insert(name.clone(), m);
            }
            Decl::Lax {
                name,
                carrier,
                structure,
                base,
            } => {
                let carrier = self.preorder(carrier)?;
                let structure = self.map(structure)?.clone();
                let base = self.poset(base)?;
                let o = LaxObject::new(base, carrier, structure).map_err(invalid(name))?;
                self.objects.insert(name.clone(), o);
            }
            Decl::LaxMor {
                name,
                map,
                src,
                tgt,
            } => {
                let map = self.map(map)?.clone();
                let src = self.object(src)?.clone();
                let tgt = self.object(tgt)?.clone();
                let f = LaxMorphism::new(src, tgt, map).map_err(invalid(name))?;
                self.morphisms.insert(name.clone(), f);
            }
        }
        self.decls.push(decl);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.decls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    pub fn counts(&self) -> BTreeMap<&'static str, usize> {
        BTreeMap::from([
            ("preorders", self.preorders.len()),
            ("posets", self.posets.len()),
            ("maps", self.maps.len()),
            ("objects", self.objects.len()),
            ("morphisms", self.morphisms.len()),
        ])
    }

    /// Canonical text form; parsing it back yields an equal workspace.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for d in &self.decls {
            out.push_str(&print_decl(d));
            out.push('\n');
        }
        out
    }

    /// A preorder by name; poset orders count, builtin bases included.
    pub fn preorder(&self, name: &str) -> Result<FinPreorder, CliError> {
        if let Some(p) = self.preorders.get(name) {
            return Ok(p.clone());
        }
        if let Some(p) = self.posets.get(name) {
            return Ok(p.order().clone());
        }
        if let Some(b) = builtin_base(name) {
            return Ok(b.order().clone());
        }
        Err(CliError::Unresolved(name.to_string()))
    }

    /// A base poset by name, falling back to the builtin fixtures.
    pub fn poset(&self, name: &str) -> Result<BasePoset, CliError> {
        if let Some(p) = self.posets.get(name) {
            return Ok(p.clone());
        }
        builtin_base(name).ok_or_else(|| CliError::Unresolved(name.to_string()))
    }

    pub fn map(&self, name: &str) -> Result<&MonotoneMap, CliError> {
        self.maps
            .get(name)
            .ok_or_else(|| CliError::Unresolved(name.to_string()))
    }

    pub fn object(&self, name: &str) -> Result<&LaxObject, CliError> {
        self.objects
            .get(name)
            .ok_or_else(|| CliError::Unresolved(name.to_string()))
    }

    pub fn morphism(&self, name: &str) -> Result<&LaxMorphism, CliError> {
        self.morphisms
            .get(name)
            .ok_or_else(|| CliError::Unresolved(name.to_string()))
    }
}

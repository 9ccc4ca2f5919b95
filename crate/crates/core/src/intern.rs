//! Global string interners for glue and color names.
//!
//! Identity of a glue or color is its interned id; two ids are equal iff the
//! names are equal. Names are leaked into `'static` storage, which is bounded
//! by the number of distinct names a process ever creates.

use std::collections::HashMap;
use std::sync::RwLock;

use once_cell::sync::Lazy;

pub(crate) struct Interner {
    inner: RwLock<InternerInner>,
}

struct InternerInner {
    names: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

impl Interner {
    fn new() -> Self {
        Interner {
            inner: RwLock::new(InternerInner {
                names: Vec::new(),
                ids: HashMap::new(),
            }),
        }
    }

    pub(crate) fn intern(&self, name: &str) -> u32 {
        if let Some(&id) = self.inner.read().unwrap().ids.get(name) {
            return id;
        }
        let mut inner = self.inner.write().unwrap();
        if let Some(&id) = inner.ids.get(name) {
            return id;
        }
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = inner.names.len() as u32;
        inner.names.push(leaked);
        inner.ids.insert(leaked, id);
        id
    }

    pub(crate) fn name(&self, id: u32) -> &'static str {
        self.inner.read().unwrap().names[id as usize]
    }
}

pub(crate) static GLUES: Lazy<Interner> = Lazy::new(Interner::new);
pub(crate) static COLORS: Lazy<Interner> = Lazy::new(Interner::new);

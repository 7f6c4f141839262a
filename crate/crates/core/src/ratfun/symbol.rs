//! Process-wide variable interner.
//!
//! Polynomials store variables as small integer ids. Ids depend on the order
//! in which names were first seen, so anything user-visible (printing, term
//! order for serialization) goes back through the name.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

struct Interner {
    names: Vec<&'static str>,
    ids: HashMap<&'static str, u32>,
}

static INTERNER: LazyLock<RwLock<Interner>> = LazyLock::new(|| {
    RwLock::new(Interner {
        names: Vec::new(),
        ids: HashMap::new(),
    })
});

/// An interned variable name such as `a[1,2]`, `A[2,3]` or `c1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(u32);

impl Symbol {
    pub fn new(name: &str) -> Symbol {
        if let Some(&id) = INTERNER.read().unwrap().ids.get(name) {
            return Symbol(id);
        }
        let mut w = INTERNER.write().unwrap();
        if let Some(&id) = w.ids.get(name) {
            return Symbol(id);
        }
        // Names live for the whole process; the set is small (chart coordinates).
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        let id = w.names.len() as u32;
        w.names.push(leaked);
        w.ids.insert(leaked, id);
        Symbol(id)
    }

    /// Symbol with a two-index suffix, e.g. `indexed("a", 1, 2)` is `a[1,2]`.
    pub fn indexed(base: &str, k: usize, j: usize) -> Symbol {
        Symbol::new(&format!("{base}[{k},{j}]"))
    }

    pub fn name(self) -> &'static str {
        INTERNER.read().unwrap().names[self.0 as usize]
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

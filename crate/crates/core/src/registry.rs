//! Name-keyed registries of interchangeable strategies.
//!
//! Measure algorithms, representation families and verification suites are
//! each registered under a string key and looked up at runtime, typically from
//! a command-line flag.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: BTreeMap<&'static str, Arc<T>>,
}

impl<T: ?Sized> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: BTreeMap::new(),
        }
    }

    /// Registers `entry` under `name`, replacing any previous entry.
    pub fn register(&mut self, name: &'static str, entry: Arc<T>) -> &mut Self {
        self.entries.insert(name, entry);
        self
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Arc<T>)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }
}

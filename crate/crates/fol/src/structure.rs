//! Boolean-valued structures: a finite name pool plus atomic truth tables.

use std::collections::BTreeMap;

use ba_kernel::{Algebra, Element};

use crate::signature::Signature;
use crate::{FolError, Result};

/// Dense table of algebra elements indexed by tuples over the name pool.
/// Arity 0 is a single cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pool: usize,
    arity: usize,
    data: Vec<Element>,
}

impl Table {
    pub fn zeroed(algebra: &Algebra, pool: usize, arity: usize) -> Self {
        let len = pool.pow(arity as u32);
        Table {
            pool,
            arity,
            data: vec![algebra.zero(); len],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn index(&self, args: &[usize]) -> Result<usize> {
        if args.len() != self.arity {
            return Err(FolError::BadStructure(format!(
                "table of arity {} indexed with {} argument(s)",
                self.arity,
                args.len()
            )));
        }
        let mut idx = 0;
        for &a in args {
            if a >= self.pool {
                return Err(FolError::NameOutOfRange {
                    index: a,
                    pool: self.pool,
                });
            }
            idx = idx * self.pool + a;
        }
        Ok(idx)
    }

    pub fn get(&self, args: &[usize]) -> Result<Element> {
        Ok(self.data[self.index(args)?])
    }

    pub fn set(&mut self, args: &[usize], value: Element) -> Result<()> {
        let idx = self.index(args)?;
        self.data[idx] = value;
        Ok(())
    }
}

/// A structure over a finite Boolean algebra: a declared pool of names and
/// caller-supplied atomic tables for equality, every relation symbol, and
/// every function symbol (as the graph table of `y = f(s...)`).
///
/// Tables are raw data.  Nothing here forces the equality or function laws;
/// run [`crate::check_laws`] to find out whether they hold.
#[derive(Debug, Clone)]
pub struct BValuedStructure {
    algebra: Algebra,
    sig: Signature,
    names: Vec<String>,
    eq: Table,
    relations: BTreeMap<String, Table>,
    // Keyed by symbol; the table's first index is y, the rest are arguments.
    functions: BTreeMap<String, Table>,
    relativized: Option<Vec<usize>>,
}

impl BValuedStructure {
    /// All tables zero, including equality.  Names must be distinct.
    pub fn new(algebra: Algebra, sig: Signature, names: &[&str]) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for n in names {
            if !seen.insert(*n) {
                return Err(FolError::BadStructure(format!("duplicate name `{n}`")));
            }
        }
        let pool = names.len();
        let eq = Table::zeroed(&algebra, pool, 2);
        let relations = sig
            .relations()
            .map(|(n, a)| (n.to_string(), Table::zeroed(&algebra, pool, a)))
            .collect();
        let functions = sig
            .functions()
            .map(|(n, a)| (n.to_string(), Table::zeroed(&algebra, pool, a + 1)))
            .collect();
        Ok(BValuedStructure {
            algebra,
            sig,
            names: names.iter().map(|s| s.to_string()).collect(),
            eq,
            relations,
            functions,
            relativized: None,
        })
    }

    /// Like [`new`](Self::new) but with identity equality: `1` on the
    /// diagonal, `0` off it.
    pub fn discrete(algebra: Algebra, sig: Signature, names: &[&str]) -> Result<Self> {
        let mut s = Self::new(algebra, sig, names)?;
        for i in 0..s.names.len() {
            let one = s.algebra.one();
            s.eq.set(&[i, i], one)?;
        }
        Ok(s)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn pool_size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn name_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn check_element(&self, value: Element) -> Result<()> {
        if self.algebra.contains(value) {
            Ok(())
        } else {
            Err(FolError::BadStructure(format!(
                "element {value:?} does not belong to a {}-atom algebra",
                self.algebra.atom_count()
            )))
        }
    }

    /// Sets both orientations of the equality entry.
    pub fn set_eq(&mut self, s: usize, t: usize, value: Element) -> Result<()> {
        self.check_element(value)?;
        self.eq.set(&[s, t], value)?;
        self.eq.set(&[t, s], value)
    }

    /// Sets one orientation only.  Exists so law-violating structures can be
    /// built deliberately.
    pub fn set_eq_raw(&mut self, s: usize, t: usize, value: Element) -> Result<()> {
        self.check_element(value)?;
        self.eq.set(&[s, t], value)
    }

    pub fn eq_value(&self, s: usize, t: usize) -> Result<Element> {
        self.eq.get(&[s, t])
    }

    pub fn set_relation(&mut self, name: &str, args: &[usize], value: Element) -> Result<()> {
        self.check_element(value)?;
        match self.relations.get_mut(name) {
            Some(table) => table.set(args, value),
            None => Err(FolError::BadStructure(format!(
                "relation `{name}` not declared"
            ))),
        }
    }

    pub fn relation_value(&self, name: &str, args: &[usize]) -> Result<Element> {
        match self.relations.get(name) {
            Some(table) => table.get(args),
            None => Err(FolError::BadStructure(format!(
                "relation `{name}` not declared"
            ))),
        }
    }

    /// Sets the value of `y = f(args...)`.
    pub fn set_function(
        &mut self,
        name: &str,
        y: usize,
        args: &[usize],
        value: Element,
    ) -> Result<()> {
        self.check_element(value)?;
        let mut key = Vec::with_capacity(args.len() + 1);
        key.push(y);
        key.extend_from_slice(args);
        match self.functions.get_mut(name) {
            Some(table) => table.set(&key, value),
            None => Err(FolError::BadStructure(format!(
                "function `{name}` not declared"
            ))),
        }
    }

    pub fn function_value(&self, name: &str, y: usize, args: &[usize]) -> Result<Element> {
        let mut key = Vec::with_capacity(args.len() + 1);
        key.push(y);
        key.extend_from_slice(args);
        match self.functions.get(name) {
            Some(table) => table.get(&key),
            None => Err(FolError::BadStructure(format!(
                "function `{name}` not declared"
            ))),
        }
    }

    /// Declares the sub-pool that quantifiers under `@Vcheck` range over.
    /// Indices must be in range; duplicates are dropped.
    pub fn set_relativized_pool(&mut self, mut indices: Vec<usize>) -> Result<()> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.names.len()) {
            return Err(FolError::NameOutOfRange {
                index: bad,
                pool: self.names.len(),
            });
        }
        self.relativized = Some(indices);
        Ok(())
    }

    pub fn relativized_pool(&self) -> Option<&[usize]> {
        self.relativized.as_deref()
    }
}

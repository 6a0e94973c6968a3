use std::fmt;
use std::sync::Arc;

use super::CoeffError;

/// Built-in central symbols, in table order.
pub const BUILTIN_SYMBOLS: [&str; 5] = ["a", "b", "c", "s", "t"];

/// Names that can never be central symbols.
pub const GENERATORS: [&str; 2] = ["x", "y"];

/// Ordered list of central symbols. Exponent vectors are dense over it.
///
/// The built-ins `a, b, c, s, t` always come first; extra names follow in
/// lexicographic order so that two sessions declaring the same names in a
/// different order agree on every canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    /// Table with only the built-in symbols.
    pub fn standard() -> Arc<SymbolTable> {
        Arc::new(SymbolTable {
            names: BUILTIN_SYMBOLS.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Built-ins plus the given extra names (duplicates of built-ins are ignored).
    pub fn with_extra<I, S>(extra: I) -> Result<Arc<SymbolTable>, CoeffError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut more: Vec<String> = Vec::new();
        for name in extra {
            let name = name.as_ref().trim();
            if !is_identifier(name) || GENERATORS.contains(&name) {
                return Err(CoeffError::BadSymbol(name.to_string()));
            }
            if BUILTIN_SYMBOLS.contains(&name) || more.iter().any(|m| m == name) {
                continue;
            }
            more.push(name.to_string());
        }
        more.sort();
        let mut names: Vec<String> = BUILTIN_SYMBOLS.iter().map(|s| s.to_string()).collect();
        names.extend(more);
        Ok(Arc::new(SymbolTable { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Indices of the curve symbols `s` and `t`.
    pub fn curve_indices(&self) -> (usize, usize) {
        (3, 4)
    }
}

impl fmt::Debug for SymbolTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolTable{:?}", self.names)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Same table, by pointer or by contents.
pub fn same_table(a: &Arc<SymbolTable>, b: &Arc<SymbolTable>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

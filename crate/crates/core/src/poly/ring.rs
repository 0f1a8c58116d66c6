use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Polynomial ring `Q[z1, ..., zn]`. The order of the variable list fixes
/// `z1 > z2 > ... > zn`.
#[derive(Clone)]
pub struct Ring(Arc<Vec<String>>);

impl Ring {
    pub fn new<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable {v:?}")));
            }
        }
        Ok(Ring(Arc::new(vars)))
    }

    /// `z1, ..., zn`.
    pub fn standard(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("z{i}"))).expect("n >= 1")
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// A ring with `extra` fresh variables placed in front (hence greater than
    /// every variable of `self`).
    pub(crate) fn with_leading_aux(&self, extra: usize) -> Ring {
        let mut vars = Vec::with_capacity(self.nvars() + extra);
        let mut k = 0;
        while vars.len() < extra {
            let name = format!("_t{k}");
            k += 1;
            if self.index_of(&name).is_none() {
                vars.push(name);
            }
        }
        vars.extend(self.0.iter().cloned());
        Ring(Arc::new(vars))
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.join(", "))
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The variables of a bigraded polynomial ring.
///
/// Indices are laid out as `x1..x{n+1}` (`0..=n`), then `y1..y{n+1}`
/// (`n+1..=2n+1`), then the parameters in the order given.
#[derive(Debug, Clone)]
pub struct VariableUniverse {
    n: usize,
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for VariableUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.names == other.names
    }
}

impl Eq for VariableUniverse {}

impl VariableUniverse {
    /// `x1..x{n+1}, y1..y{n+1}` and no parameters.
    pub fn new(n: usize) -> Arc<Self> {
        Self::with_params(n, Vec::<String>::new()).expect("standard names are distinct")
    }

    pub fn with_params<S: Into<String>>(n: usize, params: Vec<S>) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidUniverse("n must be at least 1".into()));
        }
        let mut names: Vec<String> = (1..=n + 1).map(|i| format!("x{i}")).collect();
        names.extend((1..=n + 1).map(|i| format!("y{i}")));
        for p in params {
            let p = p.into();
            if !is_identifier(&p) {
                return Err(Error::InvalidUniverse(format!("bad variable name `{p}`")));
            }
            names.push(p);
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(Self { n, names, index }))
    }

    /// Parameters of the Laksov chart: `d1..dn`, then `u{i}_{j}` for
    /// `2 <= i <= n+1`, `1 <= j < i`.
    pub fn chart(n: usize) -> Arc<Self> {
        Self::with_params(n, chart_param_names(n)).expect("chart names are distinct")
    }

    /// Chart parameters followed by torus coordinates `c1..cn`.
    pub fn chart_with_torus(n: usize) -> Arc<Self> {
        let mut params = chart_param_names(n);
        params.extend((1..=n).map(|i| format!("c{i}")));
        Self::with_params(n, params).expect("chart names are distinct")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Number of x/y variables, `2n + 2`.
    pub fn num_xy(&self) -> usize {
        2 * self.n + 2
    }

    pub fn num_params(&self) -> usize {
        self.names.len() - self.num_xy()
    }

    /// Index of `x_{i+1}` (zero-based `i`).
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(i <= self.n);
        i
    }

    /// Index of `y_{i+1}` (zero-based `i`).
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(i <= self.n);
        self.n + 1 + i
    }

    pub fn is_x(&self, idx: usize) -> bool {
        idx <= self.n
    }

    pub fn is_y(&self, idx: usize) -> bool {
        idx > self.n && idx < self.num_xy()
    }

    pub fn is_param(&self, idx: usize) -> bool {
        idx >= self.num_xy()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn param_names(&self) -> &[String] {
        &self.names[self.num_xy()..]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Same `n`, with the named parameters removed.
    pub fn drop_params(&self, drop: &[&str]) -> Result<Arc<Self>> {
        for d in drop {
            let idx = self.index_of(d)?;
            if !self.is_param(idx) {
                return Err(Error::InvalidInput(format!("`{d}` is not a parameter")));
            }
        }
        let kept: Vec<String> = self
            .param_names()
            .iter()
            .filter(|p| !drop.contains(&p.as_str()))
            .cloned()
            .collect();
        Self::with_params(self.n, kept)
    }
}

fn chart_param_names(n: usize) -> Vec<String> {
    let mut params: Vec<String> = (1..=n).map(|i| format!("d{i}")).collect();
    for i in 2..=n + 1 {
        for j in 1..i {
            params.push(format!("u{i}_{j}"));
        }
    }
    params
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let u = VariableUniverse::chart(2);
        assert_eq!(u.num_xy(), 6);
        assert_eq!(u.name(u.x(0)), "x1");
        assert_eq!(u.name(u.y(2)), "y3");
        assert_eq!(u.param_names(), ["d1", "d2", "u2_1", "u3_1", "u3_2"]);
        assert!(u.is_param(u.index_of("u3_2").unwrap()));
        assert!(u.is_y(u.y(0)) && !u.is_y(u.x(2)));
    }

    #[test]
    fn rejects_duplicates_and_zero_n() {
        assert!(VariableUniverse::with_params(1, vec!["x1"]).is_err());
        assert!(VariableUniverse::with_params(1, vec!["a", "a"]).is_err());
        assert!(VariableUniverse::with_params(0, Vec::<String>::new()).is_err());
        assert!(VariableUniverse::with_params(1, vec!["1a"]).is_err());
    }

    #[test]
    fn drop_params() {
        let u = VariableUniverse::chart_with_torus(1);
        let v = u.drop_params(&["d1", "u2_1"]).unwrap();
        assert_eq!(v.param_names(), ["c1"]);
        assert!(u.drop_params(&["x1"]).is_err());
    }
}

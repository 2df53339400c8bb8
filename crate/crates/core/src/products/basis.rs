use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A NEPS basis: a set of distinct nonzero 0/1 vectors of length `nu` whose
/// union of supports is every coordinate.
///
/// Vectors are kept sorted so iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis {
    nu: usize,
    vectors: Vec<Vec<bool>>,
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl Basis {
    pub fn new(nu: usize, vectors: Vec<Vec<bool>>) -> Result<Self> {
        if nu == 0 {
            return Err(Error::EmptyFactors);
        }
        let mut sorted = vectors;
        for v in &sorted {
            if v.len() != nu {
                return Err(Error::BasisVectorLength { vector: bits(v), expected: nu, got: v.len() });
            }
            if !v.iter().any(|&b| b) {
                return Err(Error::ZeroBasisVector(bits(v)));
            }
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateBasisVector(bits(&w[0])));
        }
        if let Some(i) = (0..nu).find(|&i| !sorted.iter().any(|v| v[i])) {
            return Err(Error::SupportViolation(i));
        }
        Ok(Self { nu, vectors: sorted })
    }

    /// Parses vectors written as bit strings, e.g. `["10", "01"]`.
    pub fn from_bitstrings<S: AsRef<str>>(strings: &[S]) -> Result<Self> {
        let mut vectors = Vec::new();
        for s in strings {
            let s = s.as_ref().trim();
            let v = s
                .chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::BasisSyntax(format!("{s:?} is not a 0/1 string"))),
                })
                .collect::<Result<Vec<_>>>()?;
            vectors.push(v);
        }
        let nu = vectors.first().map_or(0, Vec::len);
        Self::new(nu, vectors)
    }

    /// Unit vectors: the Cartesian product.
    pub fn cartesian(nu: usize) -> Result<Self> {
        Self::symmetric(nu, 1)
    }

    /// The all-ones vector alone: the strong product.
    pub fn strong(nu: usize) -> Result<Self> {
        Self::symmetric(nu, nu)
    }

    /// All vectors of weight exactly `p`.
    pub fn symmetric(nu: usize, p: usize) -> Result<Self> {
        if nu == 0 {
            return Err(Error::EmptyFactors);
        }
        if p == 0 || p > nu {
            return Err(Error::PRange { p, nu });
        }
        let vectors = (1u64..(1 << nu))
            .filter(|mask| mask.count_ones() as usize == p)
            .map(|mask| (0..nu).map(|i| mask >> (nu - 1 - i) & 1 == 1).collect())
            .collect();
        Self::new(nu, vectors)
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<bool>] {
        &self.vectors
    }

    pub fn iter(&self) -> impl Iterator<Item = &[bool]> {
        self.vectors.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, v: &[bool]) -> bool {
        self.vectors.binary_search_by(|x| x.as_slice().cmp(v)).is_ok()
    }

    /// Whether the unit vector `e_i` belongs to the basis.
    pub fn contains_unit(&self, i: usize) -> bool {
        let e: Vec<bool> = (0..self.nu).map(|j| j == i).collect();
        self.contains(&e)
    }

    /// `Some(p)` when every vector has weight `p`.
    pub fn uniform_weight(&self) -> Option<usize> {
        let w = |v: &Vec<bool>| v.iter().filter(|&&b| b).count();
        let p = w(self.vectors.first()?);
        self.vectors.iter().all(|v| w(v) == p).then_some(p)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vectors.iter().map(|v| bits(v)).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Basis {
    type Err = Error;

    /// Comma-separated bit strings, e.g. `"10,01"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').filter(|p| !p.trim().is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::BasisSyntax("empty basis".into()));
        }
        Self::from_bitstrings(&parts)
    }
}

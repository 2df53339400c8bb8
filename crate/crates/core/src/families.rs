//! Generators for signed paths, cycles, complete graphs, and their Cartesian
//! products (planar, cylindrical and toroidal grids).
//!
//! A family member with `r` negative edges gets them on the first `r` edges in
//! canonical order `v_0v_1, v_1v_2, …` (and `v_{n−1}v_0` last for cycles).
//! Spectra depend only on the parity of `r` for cycles and not at all for
//! paths, so the placement only fixes the output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::products::cartesian;

fn sign_for(index: usize, r: usize) -> Sign {
    if index < r {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// `P_n^{(r)}`: path on `n ≥ 1` vertices with `0 ≤ r ≤ n − 1` negative edges.
pub fn path(n: usize, r: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::FamilyParams("path needs n >= 1".into()));
    }
    if r > n - 1 {
        return Err(Error::FamilyParams(format!("path of order {n} has no {r} edges to negate")));
    }
    SignedGraph::new(n, (0..n - 1).map(|i| (i, i + 1, sign_for(i, r))))
}

/// `C_n^{(r)}`: cycle on `n ≥ 3` vertices with `0 ≤ r ≤ n` negative edges.
pub fn cycle(n: usize, r: usize) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::FamilyParams("cycle needs n >= 3".into()));
    }
    if r > n {
        return Err(Error::FamilyParams(format!("cycle of order {n} has no {r} edges to negate")));
    }
    SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, sign_for(i, r))))
}

/// `±K_n`.
pub fn complete(n: usize, sign: Sign) -> Result<SignedGraph> {
    if n == 0 {
        return Err(Error::FamilyParams("complete graph needs n >= 1".into()));
    }
    SignedGraph::new(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j, sign))))
}

/// `P_m^{(r1)} × P_n^{(r2)}`.
pub fn grid(m: usize, r1: usize, n: usize, r2: usize) -> Result<SignedGraph> {
    cartesian(&[path(m, r1)?, path(n, r2)?])
}

/// `C_m^{(r1)} × P_n^{(r2)}`.
pub fn cylinder(m: usize, r1: usize, n: usize, r2: usize) -> Result<SignedGraph> {
    cartesian(&[cycle(m, r1)?, path(n, r2)?])
}

/// `C_m^{(r1)} × C_n^{(r2)}`.
pub fn torus(m: usize, r1: usize, n: usize, r2: usize) -> Result<SignedGraph> {
    cartesian(&[cycle(m, r1)?, cycle(n, r2)?])
}

/// A parsed family string such as `torus:m=4,r1=1,n=5,r2=0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize, r: usize },
    Cycle { n: usize, r: usize },
    Complete { n: usize, sign: Sign },
    Grid { m: usize, r1: usize, n: usize, r2: usize },
    Cylinder { m: usize, r1: usize, n: usize, r2: usize },
    Torus { m: usize, r1: usize, n: usize, r2: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<SignedGraph> {
        match *self {
            FamilySpec::Path { n, r } => path(n, r),
            FamilySpec::Cycle { n, r } => cycle(n, r),
            FamilySpec::Complete { n, sign } => complete(n, sign),
            FamilySpec::Grid { m, r1, n, r2 } => grid(m, r1, n, r2),
            FamilySpec::Cylinder { m, r1, n, r2 } => cylinder(m, r1, n, r2),
            FamilySpec::Torus { m, r1, n, r2 } => torus(m, r1, n, r2),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::Cylinder { .. } => "cylinder",
            FamilySpec::Torus { .. } => "torus",
        }
    }

    /// Whether `s` starts with a known family kind followed by `:`.
    pub fn looks_like(s: &str) -> bool {
        s.split_once(':').is_some_and(|(k, _)| KINDS.contains(&k))
    }
}

const KINDS: [&str; 6] = ["path", "cycle", "complete", "grid", "cylinder", "torus"];

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path { n, r } => write!(f, "path:n={n},r={r}"),
            FamilySpec::Cycle { n, r } => write!(f, "cycle:n={n},r={r}"),
            FamilySpec::Complete { n, sign } => write!(f, "complete:n={n},sign={sign}"),
            FamilySpec::Grid { m, r1, n, r2 }
            | FamilySpec::Cylinder { m, r1, n, r2 }
            | FamilySpec::Torus { m, r1, n, r2 } => {
                write!(f, "{}:m={m},r1={r1},n={n},r2={r2}", self.kind())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let fail = |reason: String| Error::FamilySyntax { input: input.to_string(), reason };
        let (kind, rest) = input.split_once(':').unwrap_or((input, ""));
        let kind = kind.trim();
        let allowed: &[&str] = match kind {
            "path" | "cycle" => &["n", "r"],
            "complete" => &["n", "sign"],
            "grid" | "cylinder" | "torus" => &["m", "r1", "n", "r2"],
            other => return Err(fail(format!("unknown family {other:?}"))),
        };

        let mut params: BTreeMap<&str, &str> = BTreeMap::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| fail(format!("expected key=value, got {part:?}")))?;
            let key = key.trim();
            if !allowed.contains(&key) {
                return Err(fail(format!("unknown key {key:?} for {kind}")));
            }
            if params.insert(key, value.trim()).is_some() {
                return Err(fail(format!("key {key:?} given twice")));
            }
        }

        let int = |key: &str, default: Option<usize>| -> Result<usize> {
            match params.get(key) {
                Some(v) => v.parse().map_err(|_| fail(format!("{key}={v} is not a nonnegative integer"))),
                None => default.ok_or_else(|| fail(format!("missing required key {key:?}"))),
            }
        };

        Ok(match kind {
            "path" => FamilySpec::Path { n: int("n", None)?, r: int("r", Some(0))? },
            "cycle" => FamilySpec::Cycle { n: int("n", None)?, r: int("r", Some(0))? },
            "complete" => {
                let sign = match params.get("sign").copied().unwrap_or("+") {
                    "+" | "1" | "+1" => Sign::Positive,
                    "-" | "-1" => Sign::Negative,
                    other => return Err(fail(format!("sign={other} is not + or -"))),
                };
                FamilySpec::Complete { n: int("n", None)?, sign }
            }
            _ => {
                let (m, r1, n, r2) = (int("m", None)?, int("r1", Some(0))?, int("n", None)?, int("r2", Some(0))?);
                match kind {
                    "grid" => FamilySpec::Grid { m, r1, n, r2 },
                    "cylinder" => FamilySpec::Cylinder { m, r1, n, r2 },
                    _ => FamilySpec::Torus { m, r1, n, r2 },
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::balance_report;
    use crate::spectra::spectrum;

    #[test]
    fn small_members() {
        let p = path(2, 0).unwrap();
        assert_eq!(p.size(), 1);
        assert!(p.is_all_positive());
        assert_eq!(cycle(3, 3).unwrap().canonical(), complete(3, Sign::Negative).unwrap().canonical());
        assert_eq!(path(1, 0).unwrap().size(), 0);
    }

    #[test]
    fn parameter_ranges() {
        assert!(path(0, 0).is_err());
        assert!(path(3, 3).is_err());
        assert!(path(3, 2).is_ok());
        assert!(cycle(2, 0).is_err());
        assert!(cycle(4, 5).is_err());
        assert!(cycle(4, 4).is_ok());
        assert!(complete(0, Sign::Positive).is_err());
        assert!(grid(3, 3, 2, 0).is_err());
    }

    #[test]
    fn path_spectrum_ignores_signs() {
        let a = spectrum(&path(5, 2).unwrap()).unwrap();
        let b = spectrum(&path(5, 0).unwrap()).unwrap();
        assert!(a.matches(&b, 1e-12));
    }

    #[test]
    fn grid_is_square_for_two_by_two() {
        let g = grid(2, 0, 2, 0).unwrap();
        assert_eq!(g.size(), 4);
        assert!(g.is_all_positive());
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn grid_negative_edge_count() {
        for m in 1..=5 {
            for n in 1..=5 {
                for r1 in 0..m {
                    for r2 in 0..n {
                        let g = grid(m, r1, n, r2).unwrap();
                        assert_eq!(g.negative_edge_count(), n * r1 + m * r2);
                    }
                }
            }
        }
    }

    #[test]
    fn cylinder_and_torus_balance_parity() {
        for m in 3..=5 {
            for r1 in 0..=m {
                let cyl = cylinder(m, r1, 3, 1).unwrap();
                assert_eq!(balance_report(&cyl).is_balanced(), r1 % 2 == 0);
            }
        }
        assert!(!balance_report(&torus(3, 1, 3, 0).unwrap()).is_balanced());
        assert!(balance_report(&torus(3, 2, 4, 4).unwrap()).is_balanced());
    }

    #[test]
    fn parse_family_strings() {
        let f: FamilySpec = "torus:m=4,r1=1,n=5,r2=0".parse().unwrap();
        assert_eq!(f, FamilySpec::Torus { m: 4, r1: 1, n: 5, r2: 0 });
        assert_eq!(f.to_string(), "torus:m=4,r1=1,n=5,r2=0");
        assert_eq!("cycle:n=3,r=1".parse::<FamilySpec>().unwrap(), FamilySpec::Cycle { n: 3, r: 1 });
        assert_eq!("path:n=4".parse::<FamilySpec>().unwrap(), FamilySpec::Path { n: 4, r: 0 });
        assert_eq!(
            "complete:n=4,sign=-".parse::<FamilySpec>().unwrap(),
            FamilySpec::Complete { n: 4, sign: Sign::Negative }
        );
        for bad in ["blob:n=3", "path:n=3,k=2", "path:r=1", "path:n=x", "cycle:n=3,n=4", "complete:n=3,sign=0", "path:n"] {
            assert!(matches!(bad.parse::<FamilySpec>(), Err(Error::FamilySyntax { .. })), "{bad}");
        }
        assert!(FamilySpec::looks_like("grid:m=2,n=2"));
        assert!(!FamilySpec::looks_like("graphs/a.json"));
    }
}

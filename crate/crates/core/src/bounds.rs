//! Closed-form upper bounds on the number of asymptotic non-regular values
//! of a polynomial of degree `d` in `n` variables, given the degrees and
//! dimensions of the positive-dimensional components of its singular locus.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("degree {d} is below the minimum {min} for this bound")]
    DegreeTooSmall { d: u32, min: u32 },
    #[error("at least two variables are required, got {0}")]
    TooFewVariables(u32),
    #[error("component degrees and dimensions must be positive")]
    InvalidComponent,
    #[error("bound does not fit in 128 bits")]
    Overflow,
    #[error("malformed component list: {0}")]
    Parse(String),
}

/// One positive-dimensional irreducible component of `Sing f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularComponent {
    pub degree: u32,
    pub dim: u32,
}

/// User-supplied description of `Sing f` (isolated points excluded).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularComponentData {
    components: Vec<SingularComponent>,
}

impl SingularComponentData {
    pub fn new(components: Vec<SingularComponent>) -> Result<Self, BoundsError> {
        if components.iter().any(|c| c.degree == 0 || c.dim == 0) {
            return Err(BoundsError::InvalidComponent);
        }
        Ok(SingularComponentData { components })
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &[SingularComponent] {
        &self.components
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn degree_sum(&self) -> i128 {
        self.components.iter().map(|c| i128::from(c.degree)).sum()
    }

    pub fn weighted_sum(&self) -> i128 {
        self.components
            .iter()
            .map(|c| i128::from(c.degree) * i128::from(c.dim))
            .sum()
    }
}

/// Parses `"deg:dim,deg:dim,..."`; the empty string means no components.
impl FromStr for SingularComponentData {
    type Err = BoundsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::none());
        }
        let components = s
            .split(',')
            .map(|item| {
                let (deg, dim) = item
                    .split_once(':')
                    .ok_or_else(|| BoundsError::Parse(format!("expected deg:dim, got {item:?}")))?;
                let parse = |v: &str| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|e| BoundsError::Parse(format!("{v:?}: {e}")))
                };
                Ok(SingularComponent {
                    degree: parse(deg)?,
                    dim: parse(dim)?,
                })
            })
            .collect::<Result<Vec<_>, BoundsError>>()?;
        Self::new(components)
    }
}

impl fmt::Display for SingularComponentData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{}:{}", c.degree, c.dim))
            .collect();
        f.write_str(&parts.join(","))
    }
}

fn check(d: u32, n: u32, min_d: u32) -> Result<(), BoundsError> {
    if d < min_d {
        return Err(BoundsError::DegreeTooSmall { d, min: min_d });
    }
    if n < 2 {
        return Err(BoundsError::TooFewVariables(n));
    }
    Ok(())
}

/// `((d-1)^n - 1) / (d-2)` for `d >= 3`, exact.
fn geometric(d: u32, n: u32) -> Result<i128, BoundsError> {
    let base = i128::from(d - 1);
    let pow = base.checked_pow(n).ok_or(BoundsError::Overflow)?;
    Ok((pow - 1) / i128::from(d - 2))
}

/// Bound on `#NK∞(f)`: `((d-1)^n - 1)/(d-2) - Σ d_i dim S_i`, and
/// `n - 1 - Σ d_i dim S_i` for quadrics.
pub fn bound_nk(d: u32, n: u32, sing: &SingularComponentData) -> Result<i128, BoundsError> {
    check(d, n, 2)?;
    let head = if d == 2 {
        i128::from(n) - 1
    } else {
        geometric(d, n)?
    };
    Ok(head - sing.weighted_sum())
}

/// Bound on `#NK∞(f)` from the super-polar curve: `d^(n-1) - 1 - Σ d_i` for
/// `n > 2` and `d - 2 - Σ d_i` for `n = 2`. Only valid when `NK∞(f)` is
/// nonempty.
pub fn bound_superpolar(d: u32, n: u32, sing: &SingularComponentData) -> Result<i128, BoundsError> {
    check(d, n, 2)?;
    let head = if n == 2 {
        i128::from(d) - 2
    } else {
        i128::from(d)
            .checked_pow(n - 1)
            .ok_or(BoundsError::Overflow)?
            - 1
    };
    Ok(head - sing.degree_sum())
}

/// Bound on `#K∞(f)`: `((d-1)^n - 1)/(d-2) - Σ d_i dim S_i + r`.
pub fn bound_kinf(d: u32, n: u32, sing: &SingularComponentData) -> Result<i128, BoundsError> {
    check(d, n, 3)?;
    Ok(geometric(d, n)? - sing.weighted_sum() + sing.count() as i128)
}

/// All three bounds; inapplicable ones are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub nk: Option<i128>,
    pub superpolar: Option<i128>,
    pub kinf: Option<i128>,
}

pub fn all_bounds(d: u32, n: u32, sing: &SingularComponentData) -> Bounds {
    Bounds {
        nk: bound_nk(d, n, sing).ok(),
        superpolar: bound_superpolar(d, n, sing).ok(),
        kinf: bound_kinf(d, n, sing).ok(),
    }
}

//! Compositions `(λ₁, λ₂, λ₃, 1, ..., 1)` whose first three parts permute
//! `(s, t, u)` with `s ≥ t ≥ u ≥ 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symmetric::{Composition, Partition};

/// Which of `s`, `t`, `u` sits in rows 1, 2, 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering3 {
    Stu,
    Sut,
    Tsu,
    Tus,
    Ust,
    Uts,
}

impl Ordering3 {
    pub const ALL: [Ordering3; 6] =
        [Ordering3::Stu, Ordering3::Sut, Ordering3::Tsu, Ordering3::Tus, Ordering3::Ust, Ordering3::Uts];

    /// Letters `'s'`, `'t'`, `'u'` for rows 1 to 3.
    pub fn letters(self) -> [char; 3] {
        match self {
            Ordering3::Stu => ['s', 't', 'u'],
            Ordering3::Sut => ['s', 'u', 't'],
            Ordering3::Tsu => ['t', 's', 'u'],
            Ordering3::Tus => ['t', 'u', 's'],
            Ordering3::Ust => ['u', 's', 't'],
            Ordering3::Uts => ['u', 't', 's'],
        }
    }
}

impl fmt::Display for Ordering3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.letters();
        write!(f, "{a},{b},{c}")
    }
}

impl FromStr for Ordering3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters: String = s.chars().filter(|c| !matches!(c, ',' | ' ' | '(' | ')')).collect();
        Ordering3::ALL
            .into_iter()
            .find(|o| o.letters().iter().collect::<String>() == letters.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParams(format!("unknown ordering {s:?}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct StuShape {
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub order: Ordering3,
    /// Number of trailing parts equal to 1, at least one.
    pub trailing_ones: usize,
}

impl StuShape {
    pub fn new(s: usize, t: usize, u: usize, order: Ordering3, trailing_ones: usize) -> Result<Self> {
        if !(s >= t && t >= u && u >= 1) {
            return Err(Error::InvalidParams(format!("need s >= t >= u >= 1, got ({s},{t},{u})")));
        }
        if trailing_ones == 0 {
            return Err(Error::InvalidParams("at least one trailing part 1 is required".into()));
        }
        Ok(Self { s, t, u, order, trailing_ones })
    }

    /// Reads `λ = (λ₁, λ₂, λ₃, 1^r)`. When parts tie, the first matching
    /// ordering in `Ordering3::ALL` is chosen.
    pub fn from_composition(lambda: &Composition) -> Result<Self> {
        let p = lambda.parts();
        if p.len() < 4 || p[3..].iter().any(|&x| x != 1) {
            return Err(Error::HypothesisStar(lambda.to_string()));
        }
        let mut sorted = [p[0], p[1], p[2]];
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let [s, t, u] = sorted;
        let order = Ordering3::ALL
            .into_iter()
            .find(|o| o.letters().iter().zip(&p[..3]).all(|(&c, &v)| Self::value(s, t, u, c) == v))
            .unwrap();
        Self::new(s, t, u, order, p.len() - 3)
    }

    fn value(s: usize, t: usize, u: usize, c: char) -> usize {
        match c {
            's' => s,
            't' => t,
            _ => u,
        }
    }

    /// `λ̃ = (λ₁, λ₂, λ₃)`.
    pub fn tilde(&self) -> [usize; 3] {
        self.order.letters().map(|c| Self::value(self.s, self.t, self.u, c))
    }

    /// Row (1-based) holding the part equal to `c` in `λ̃`.
    pub fn row_of(&self, c: char) -> usize {
        self.order.letters().iter().position(|&x| x == c).unwrap() + 1
    }

    pub fn composition(&self) -> Composition {
        let mut parts = self.tilde().to_vec();
        parts.extend(std::iter::repeat_n(1, self.trailing_ones));
        Composition::new(parts).unwrap()
    }

    pub fn n(&self) -> usize {
        self.s + self.t + self.u + self.trailing_ones
    }

    /// `λ'` for a single trailing one: `4¹ 3^{u-1} 2^{t-u} 1^{s-t}`.
    pub fn lambda_prime(&self) -> Partition {
        self.composition().conjugate()
    }

    /// Same `(s, t, u)` and ordering with `r` trailing ones.
    pub fn with_trailing_ones(&self, r: usize) -> Result<Self> {
        Self::new(self.s, self.t, self.u, self.order, r)
    }
}

impl fmt::Display for StuShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.composition())
    }
}

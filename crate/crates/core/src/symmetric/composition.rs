use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A proper composition: a nonempty sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("zero part in {parts:?}")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being composed.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `λ'_i = |{j : λ_j >= i}|`; always a partition.
    pub fn conjugate(&self) -> Partition {
        let max = *self.parts.iter().max().unwrap();
        Partition((1..=max).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// The reverse composition `λ̇`.
    pub fn reversed(&self) -> Self {
        Self { parts: self.parts.iter().rev().copied().collect() }
    }

    /// `λ_* = (λ_1, ..., λ_r, 1)`.
    pub fn with_trailing_one(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.push(1);
        Self { parts }
    }

    pub fn sorted(&self) -> Partition {
        let mut p = self.parts.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    /// `J(λ)`: all generators except those at the part boundaries.
    pub fn generator_set(&self) -> GeneratorSet {
        let n = self.size();
        let mut j = GeneratorSet::all(n);
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            j.remove(acc);
        }
        j
    }

    /// Every composition of `n`, in lexicographic order of parts.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Composition::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// A weakly decreasing sequence of positive integers (possibly empty).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidComposition(format!("{parts:?} is not a partition")));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition((1..=max).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// Dominance order `self ⊴ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() || self.0.len() < other.0.len() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..other.0.len() {
            a += self.0[k];
            b += other.0[k];
            if a > b {
                return false;
            }
        }
        true
    }

    /// Partial sums `ν_1 + ... + ν_k` for `k = 1..=len`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Every partition of `n` into exactly `k` parts, lexicographically decreasing.
    pub fn with_parts(n: usize, k: usize) -> Vec<Partition> {
        fn rec(rest: usize, slots: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if rest == 0 {
                    out.push(Partition(cur.clone()));
                }
                return;
            }
            if rest < slots {
                return;
            }
            let hi = max.min(rest - (slots - 1));
            for p in (1..=hi).rev() {
                if p * slots < rest {
                    break;
                }
                cur.push(p);
                rec(rest - p, slots - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, k, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A subset of the Coxeter generators `{s_1, ..., s_{n-1}}`, by index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneratorSet(u32);

impl GeneratorSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn all(n: usize) -> Self {
        let mut s = Self(0);
        for i in 1..n {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self(0);
        for &i in indices {
            if i == 0 || i >= n {
                return Err(Error::InvalidGenerators(format!("s_{i} is not a generator of S_{n}")));
            }
            s.insert(i);
        }
        Ok(s)
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 32 && self.0 >> i & 1 == 1
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..32).filter(|&i| self.contains(i)).collect()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Maximal runs of points joined by generators of the set, as 1-based
    /// half-open ranges.
    pub fn blocks(&self, n: usize) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 1;
        for i in 1..n {
            if !self.contains(i) {
                out.push(start..i + 1);
                start = i + 1;
            }
        }
        if n > 0 {
            out.push(start..n + 1);
        }
        out
    }

    /// Every subset of the generators of `S_n`.
    pub fn all_subsets(n: usize) -> Vec<Self> {
        let m = n.saturating_sub(1);
        (0u32..1 << m).map(|mask| Self(mask << 1)).collect()
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

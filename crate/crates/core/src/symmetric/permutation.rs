use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::roots::InversionSet;
use crate::error::{Error, Result};

/// Largest degree whose positive roots fit the dense inversion bitset.
pub const MAX_DEGREE: usize = 22;

/// An element of `S_n` acting on the right of `{1, ..., n}`.
///
/// Stored in one-line notation: `images()[i - 1] == i·x`. Products follow the
/// right action, so `i·(xy) = (i·x)·y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        Self { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line word".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v as usize)
        });
        Self { images }
    }

    /// The basic transposition `s_i = (i, i+1)`, with `1 <= i < n`.
    pub fn generator(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "generator s_{i} not in S_{n}");
        let mut x = Self::identity(n);
        x.images.swap(i - 1, i);
        x
    }

    /// The product `s_{w[0]} s_{w[1]} ...` of basic transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        let mut x = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::InvalidPermutation(format!("generator s_{i} in S_{n}")));
            }
            x.mul_generator_right(i);
        }
        Ok(x)
    }

    /// The longest element `w_S`, reversing `1..n`.
    pub fn longest(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        Self { images: (0..n as u8).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `i·x` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// The product `self · other` (apply `self` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        Ok(Self { images: self.images.iter().map(|&v| other.images[v as usize]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Self { images: inv }
    }

    /// Right multiplication by `s_i`: swaps the values `i` and `i+1`.
    pub fn mul_generator_right(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for v in self.images.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// Left multiplication by `s_i`: swaps the positions `i` and `i+1`.
    pub fn mul_generator_left(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    pub fn times_generator(&self, i: usize) -> Self {
        let mut x = self.clone();
        x.mul_generator_right(i);
        x
    }

    /// Coxeter length: the number of inverted pairs in one-line notation.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `l(s_i x) < l(x)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `l(x s_i) < l(x)`: the value `i+1` occurs before the value `i`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let (a, b) = ((i - 1) as u8, i as u8);
        for &v in &self.images {
            if v == a {
                return false;
            }
            if v == b {
                return true;
            }
        }
        unreachable!()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.degree()).filter(|&i| inv.images[i - 1] > inv.images[i]).collect()
    }

    pub fn inversion_set(&self) -> InversionSet {
        InversionSet::of(self)
    }

    /// The lexicographically smallest reduced word.
    ///
    /// The first letter of a reduced word is always a left descent, so the
    /// greedy choice of the smallest left descent at each step is lex-minimal.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut x = self.clone();
        let mut word = Vec::with_capacity(x.length());
        'outer: loop {
            for i in 1..x.degree() {
                if x.has_left_descent(i) {
                    word.push(i);
                    x.mul_generator_left(i);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// `self` is a prefix of `other`: `other` has a reduced word beginning
    /// with a reduced word for `self`.
    pub fn is_prefix_of(&self, other: &Self) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self.inversion_set().is_subset(&other.inversion_set()))
    }

    /// Embeds into `S_m`, `m >= n`, fixing the new points.
    pub fn extend_to(&self, m: usize) -> Self {
        assert!(m >= self.degree() && m <= MAX_DEGREE);
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..m as u8);
        Self { images }
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Self::identity(n)) }
    }

    pub(crate) fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }
}

pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.images.clone();
        // next lexicographic permutation
        if let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) {
            let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
            w.swap(i, j);
            w[i + 1..].reverse();
            self.next = Some(Permutation { images: w });
        }
        Some(current)
    }
}

/// Sorts by length, then by one-line notation.
pub fn sort_canonical(perms: &mut [Permutation]) {
    perms.sort_by_cached_key(|x| (x.length(), x.images.clone()));
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_images(&images).map_err(serde::de::Error::custom)
    }
}

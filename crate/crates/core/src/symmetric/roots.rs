//! Type-A root combinatorics.
//!
//! The root `e_i - e_j` is written `(i, j)`; it is positive when `i < j`. A
//! permutation acts on roots through its action on points, so
//! `(i, j)·x = (i·x, j·x)`. Inversion sets are dense bitsets over the positive
//! roots in the fixed order `(1,2), (1,3), ..., (1,n), (2,3), ...`.

use std::fmt;

use super::composition::GeneratorSet;
use super::permutation::Permutation;
use crate::error::{Error, Result};

const WORDS: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        Self { i, j }
    }

    /// The simple root of `s_k`.
    pub fn simple(k: usize) -> Self {
        Self { i: k, j: k + 1 }
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Self {
        Self { i: self.j, j: self.i }
    }

    pub fn act(&self, x: &Permutation) -> Self {
        Self { i: x.image(self.i), j: x.image(self.j) }
    }

    /// Action of the basic transposition `s_k`.
    pub fn reflect(&self, k: usize) -> Self {
        let swap = |p: usize| {
            if p == k {
                k + 1
            } else if p == k + 1 {
                k
            } else {
                p
            }
        };
        Self { i: swap(self.i), j: swap(self.j) }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `N(x)`: the positive roots sent negative by `x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InversionSet {
    n: usize,
    bits: [u64; WORDS],
}

fn root_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    let i0 = i - 1;
    i0 * n - i0 * (i0 + 1) / 2 + (j - i - 1)
}

impl InversionSet {
    pub fn empty(n: usize) -> Self {
        Self { n, bits: [0; WORDS] }
    }

    /// Closed form: `(i, j)` with `i < j` and `i·x > j·x`.
    pub fn of(x: &Permutation) -> Self {
        let n = x.degree();
        let w = x.raw();
        let mut set = Self::empty(n);
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    set.bits[idx / 64] |= 1 << (idx % 64);
                }
                idx += 1;
            }
        }
        set
    }

    /// Word route: `{β_k}` with `β_k = α_{u_k} u_{k-1} ... u_1`.
    ///
    /// Fails if the word is not reduced (some `β_k` negative or repeated).
    pub fn from_reduced_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut set = Self::empty(n);
        for (k, &u) in word.iter().enumerate() {
            let mut beta = Root::simple(u);
            for &v in word[..k].iter().rev() {
                beta = beta.reflect(v);
            }
            if !beta.is_positive() || set.contains(beta) {
                return Err(Error::InvalidPermutation(format!("word {word:?} is not reduced")));
            }
            set.insert(beta);
        }
        Ok(set)
    }

    /// All of `Φ⁺`.
    pub fn all_positive(n: usize) -> Self {
        let mut set = Self::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                set.insert(Root { i, j });
            }
        }
        set
    }

    /// `Φ_J⁺`: pairs inside a single `J`-block.
    pub fn parabolic_positive(n: usize, j: &GeneratorSet) -> Self {
        let mut set = Self::empty(n);
        for block in j.blocks(n) {
            for a in block.clone() {
                for b in a + 1..block.end {
                    set.insert(Root { i: a, j: b });
                }
            }
        }
        set
    }

    /// Builds a set from roots, all of which must be positive.
    pub fn from_roots(n: usize, roots: impl IntoIterator<Item = Root>) -> Option<Self> {
        let mut set = Self::empty(n);
        for r in roots {
            if !r.is_positive() || r.j > n {
                return None;
            }
            set.insert(r);
        }
        Some(set)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, r: Root) {
        let idx = root_index(self.n, r.i, r.j);
        self.bits[idx / 64] |= 1 << (idx % 64);
    }

    pub fn contains(&self, r: Root) -> bool {
        if !r.is_positive() || r.j > self.n {
            return false;
        }
        let idx = root_index(self.n, r.i, r.j);
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits;
        for (a, b) in bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Self { n: self.n, bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits;
        for (a, b) in bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
        Self { n: self.n, bits }
    }

    pub fn iter(&self) -> impl Iterator<Item = Root> + '_ {
        let n = self.n;
        (1..=n)
            .flat_map(move |i| (i + 1..=n).map(move |j| Root { i, j }))
            .filter(move |&r| self.contains(r))
    }

    /// The image `N·x` as a set of (possibly negative) roots.
    pub fn image_under(&self, x: &Permutation) -> Vec<Root> {
        let mut out: Vec<Root> = self.iter().map(|r| r.act(x)).collect();
        out.sort();
        out
    }

    /// `N·x` when every image is positive.
    pub fn act(&self, x: &Permutation) -> Option<Self> {
        Self::from_roots(self.n, self.iter().map(|r| r.act(x)))
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|r| (r.i, r.j))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert!(Permutation::identity(4).inversion_set().is_empty());
        for i in 1..5 {
            let s = Permutation::generator(5, i);
            let set = s.inversion_set();
            assert_eq!(set.len(), 1);
            assert!(set.contains(Root::simple(i)));
        }
        assert_eq!(Permutation::longest(6).inversion_set(), InversionSet::all_positive(6));
    }

    #[test]
    fn both_routes_agree() {
        for n in 1..=6 {
            for x in Permutation::all(n) {
                let word = x.reduced_word();
                let via_word = InversionSet::from_reduced_word(n, &word).unwrap();
                assert_eq!(via_word, x.inversion_set(), "{x}");
                assert_eq!(via_word.len(), x.length());
            }
        }
    }

    #[test]
    fn non_reduced_word_rejected() {
        assert!(InversionSet::from_reduced_word(3, &[1, 1]).is_err());
    }

    #[test]
    fn wide_degree_bits() {
        let n = 20;
        let w = Permutation::longest(n);
        assert_eq!(w.inversion_set().len(), n * (n - 1) / 2);
        assert!(w.inversion_set().contains(Root { i: 19, j: 20 }));
    }
}

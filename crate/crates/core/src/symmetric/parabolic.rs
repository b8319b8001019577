use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::composition::GeneratorSet;
use super::permutation::{sort_canonical, Permutation};
use crate::error::{Error, Result};

/// A standard parabolic subgroup `W_J` of `S_n` with its distinguished right
/// coset representatives.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicData {
    pub n: usize,
    #[serde(serialize_with = "ser_generators")]
    pub j: GeneratorSet,
    /// Longest element of `W_J`.
    pub w_j: Permutation,
    /// Longest element of `X_J`.
    pub d_j: Permutation,
    /// `X_J`, canonically sorted (length, then one-line).
    pub cosets: Vec<Permutation>,
}

fn ser_generators<S: serde::Serializer>(j: &GeneratorSet, s: S) -> std::result::Result<S::Ok, S::Error> {
    j.indices().serialize(s)
}

/// The longest element of `W_J`: reverses every `J`-block.
pub fn longest_in_parabolic(n: usize, j: &GeneratorSet) -> Permutation {
    let mut images = vec![0u8; n];
    for block in j.blocks(n) {
        for i in block.clone() {
            images[i - 1] = (block.start + block.end - 1 - i - 1) as u8;
        }
    }
    Permutation::from_zero_based(images)
}

/// `x ∈ W_J`: `x` maps every `J`-block onto itself.
pub fn in_parabolic(x: &Permutation, j: &GeneratorSet) -> bool {
    j.blocks(x.degree()).iter().all(|b| b.clone().all(|i| b.contains(&x.image(i))))
}

/// `x ∈ X_J`: `x` is increasing on every `J`-block.
pub fn is_coset_representative(x: &Permutation, j: &GeneratorSet) -> bool {
    j.blocks(x.degree()).iter().all(|b| b.clone().skip(1).all(|i| x.image(i - 1) < x.image(i)))
}

/// Builds `w_J`, `d_J = w_J w_S` and `X_J`.
///
/// `X_J` is grown breadth-first from the identity through right ascents that
/// stay below `d_J` in prefix order.
pub fn parabolic(j: &GeneratorSet, n: usize) -> Result<ParabolicData> {
    if j.indices().iter().any(|&i| i >= n) {
        return Err(Error::InvalidGenerators(format!("{j:?} in S_{n}")));
    }
    let w_j = longest_in_parabolic(n, j);
    let d_j = w_j.compose(&Permutation::longest(n))?;
    let top = d_j.inversion_set();

    let start = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for i in 1..n {
            if x.has_right_descent(i) {
                continue;
            }
            let y = x.times_generator(i);
            if !seen.contains(&y) && y.inversion_set().is_subset(&top) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut cosets: Vec<_> = seen.into_iter().collect();
    sort_canonical(&mut cosets);
    Ok(ParabolicData { n, j: *j, w_j, d_j, cosets })
}

/// Factors `x = u·d` with `u ∈ W_J` and `d ∈ X_J`.
///
/// `d` sends each block increasingly onto the block's image under `x`; `u`
/// then records how `x` reorders that image.
pub fn coset_decompose(x: &Permutation, j: &GeneratorSet) -> (Permutation, Permutation) {
    let n = x.degree();
    let mut d = vec![0u8; n];
    let mut u = vec![0u8; n];
    for block in j.blocks(n) {
        let mut values: Vec<usize> = block.clone().map(|i| x.image(i)).collect();
        values.sort_unstable();
        for (k, i) in block.clone().enumerate() {
            d[i - 1] = (values[k] - 1) as u8;
        }
        for i in block.clone() {
            let rank = values.binary_search(&x.image(i)).unwrap();
            u[i - 1] = (block.start + rank - 1) as u8;
        }
    }
    (Permutation::from_zero_based(u), Permutation::from_zero_based(d))
}

/// `{x·d_J : x ∈ Y}`, the minimal determining set of `Z·X_J` when `Y` is
/// the minimal determining set of the right ideal `Z` of `W_J`.
pub fn induced_rim(y: &[Permutation], j: &GeneratorSet, n: usize) -> Result<Vec<Permutation>> {
    let w_j = longest_in_parabolic(n, j);
    let d_j = w_j.compose(&Permutation::longest(n))?;
    let mut out = Vec::with_capacity(y.len());
    for x in y {
        if x.degree() != n {
            return Err(Error::DegreeMismatch { left: x.degree(), right: n });
        }
        if !in_parabolic(x, j) {
            return Err(Error::NotInParabolic(x.to_string()));
        }
        out.push(x.compose(&d_j)?);
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// All of `W_J`.
pub fn parabolic_elements(j: &GeneratorSet, n: usize) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    let mut seen: HashSet<Permutation> = out.iter().cloned().collect();
    let mut k = 0;
    while k < out.len() {
        let x = out[k].clone();
        for i in j.indices() {
            let y = x.times_generator(i);
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        k += 1;
    }
    sort_canonical(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    #[test]
    fn s3_with_j_equal_s1() {
        let j = GeneratorSet::from_indices(3, &[1]).unwrap();
        let p = parabolic(&j, 3).unwrap();
        assert_eq!(p.d_j, w(3, &[2, 1]));
        assert_eq!(p.cosets, vec![w(3, &[]), w(3, &[2]), w(3, &[2, 1])]);
        assert_eq!(p.w_j, w(3, &[1]));
    }

    #[test]
    fn trivial_and_full_parabolics() {
        for n in 1..=5 {
            let full = parabolic(&GeneratorSet::all(n), n).unwrap();
            assert_eq!(full.cosets, vec![Permutation::identity(n)]);
            assert!(full.d_j.is_identity());
            let triv = parabolic(&GeneratorSet::empty(), n).unwrap();
            assert_eq!(triv.cosets.len(), (1..=n).product::<usize>());
            assert_eq!(triv.d_j, Permutation::longest(n));
        }
    }

    #[test]
    fn cosets_match_filter_of_s_n() {
        for n in 1..=5 {
            for j in GeneratorSet::all_subsets(n) {
                let p = parabolic(&j, n).unwrap();
                let mut filtered: Vec<_> = Permutation::all(n).filter(|x| is_coset_representative(x, &j)).collect();
                sort_canonical(&mut filtered);
                assert_eq!(p.cosets, filtered);
                assert_eq!(p.w_j.compose(&p.d_j).unwrap(), Permutation::longest(n));
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let j = GeneratorSet::from_indices(3, &[1]).unwrap();
        let (u, d) = coset_decompose(&w(3, &[1, 2]), &j);
        assert_eq!(u, w(3, &[1]));
        assert_eq!(d, w(3, &[2]));
        let (u, d) = coset_decompose(&w(3, &[1]), &j);
        assert_eq!(u, w(3, &[1]));
        assert!(d.is_identity());
    }

    #[test]
    fn decompose_exhaustive() {
        for n in 1..=6 {
            for j in GeneratorSet::all_subsets(n) {
                for x in Permutation::all(n) {
                    let (u, d) = coset_decompose(&x, &j);
                    assert!(in_parabolic(&u, &j));
                    assert!(is_coset_representative(&d, &j));
                    assert_eq!(u.compose(&d).unwrap(), x);
                    assert_eq!(u.length() + d.length(), x.length());
                }
            }
        }
    }

    #[test]
    fn induced_rim_examples() {
        let j = GeneratorSet::from_indices(3, &[1]).unwrap();
        let r = induced_rim(&[Permutation::identity(3)], &j, 3).unwrap();
        assert_eq!(r, vec![w(3, &[2, 1])]);
        let r = induced_rim(&[w(3, &[1])], &j, 3).unwrap();
        assert_eq!(r, vec![Permutation::longest(3)]);
        assert!(matches!(induced_rim(&[w(3, &[2])], &j, 3), Err(Error::NotInParabolic(_))));
    }

    #[test]
    fn parabolic_elements_size() {
        let j = GeneratorSet::from_indices(6, &[1, 2, 4]).unwrap();
        assert_eq!(parabolic_elements(&j, 6).len(), 6 * 2);
    }
}

//! Right ideals (prefix-closed subsets) and their minimal determining sets.

use std::collections::HashSet;

use super::permutation::{sort_canonical, Permutation};

/// Every prefix of every element, canonically sorted.
pub fn prefix_closure<'a>(elements: impl IntoIterator<Item = &'a Permutation>) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut stack: Vec<Permutation> = Vec::new();
    for x in elements {
        if seen.insert(x.clone()) {
            stack.push(x.clone());
        }
    }
    while let Some(x) = stack.pop() {
        for i in 1..x.degree() {
            if x.has_right_descent(i) {
                let y = x.times_generator(i);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    sort_canonical(&mut out);
    out
}

/// Every prefix of `x`.
pub fn prefixes(x: &Permutation) -> Vec<Permutation> {
    prefix_closure([x])
}

pub fn is_right_ideal(set: &HashSet<Permutation>) -> bool {
    set.iter().all(|x| (1..x.degree()).filter(|&i| x.has_right_descent(i)).all(|i| set.contains(&x.times_generator(i))))
}

/// The elements of a right ideal that are not a prefix of any other element.
///
/// Inside a prefix-closed set, `x` is a proper prefix of some member exactly
/// when some `x·s` with `l(x·s) > l(x)` is a member.
pub fn minimal_determining_set(ideal: &HashSet<Permutation>) -> Vec<Permutation> {
    let mut out: Vec<_> = ideal
        .iter()
        .filter(|x| {
            (1..x.degree()).filter(|&i| !x.has_right_descent(i)).all(|i| !ideal.contains(&x.times_generator(i)))
        })
        .cloned()
        .collect();
    sort_canonical(&mut out);
    out
}

/// No element is a prefix of another.
pub fn is_antichain(elements: &[Permutation]) -> bool {
    let sets: Vec<_> = elements.iter().map(|x| x.inversion_set()).collect();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if a != b && sets[a].is_subset(&sets[b]) {
                return false;
            }
        }
    }
    true
}

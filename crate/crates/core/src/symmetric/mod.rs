//! The symmetric group as a Coxeter group: elements, inversion sets, prefix
//! order and parabolic coset machinery.

pub mod composition;
pub mod ideal;
pub mod parabolic;
pub mod permutation;
pub mod roots;

pub use composition::{Composition, GeneratorSet, Partition};
pub use ideal::{is_antichain, minimal_determining_set, prefix_closure, prefixes};
pub use parabolic::{
    coset_decompose, in_parabolic, induced_rim, is_coset_representative, longest_in_parabolic, parabolic,
    parabolic_elements, ParabolicData,
};
pub use permutation::{sort_canonical, Permutation, MAX_DEGREE};
pub use roots::{InversionSet, Root};

/// `J(λ)` as a generator index set.
pub fn j_of_composition(lambda: &Composition) -> GeneratorSet {
    lambda.generator_set()
}

/// `x' ≤ x` in prefix order.
pub fn is_prefix(x_prime: &Permutation, x: &Permutation) -> crate::Result<bool> {
    x_prime.is_prefix_of(x)
}

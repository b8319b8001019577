//! Benchmark inputs shared by the criterion targets.

use cellrim::{Composition, Ordering3, StuShape};

pub fn composition(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("valid composition")
}

/// `(s, t, u) = (8, 5, 3)` with `λ₁ = u`, the largest shape in the tests.
pub fn large_shape() -> StuShape {
    StuShape::new(8, 5, 3, Ordering3::Ust, 1).expect("valid shape")
}

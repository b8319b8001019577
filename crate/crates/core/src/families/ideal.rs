//! `Z(λ)`, its rim `Y(λ)` and the special part `Y_s(λ)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::diagram::min_column_diagram;
use crate::error::{Error, Result};
use crate::paths::is_admissible;
use crate::rs::right_cell_of;
use crate::symmetric::{is_coset_representative, longest_in_parabolic, minimal_determining_set, parabolic};
use crate::symmetric::{sort_canonical, Composition, Permutation};

pub const GUARD_ENV: &str = "CELLRIM_MAX_N";

/// Size limits for enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Guard {
    /// Largest `n` for which `X_J` or `S_n` is enumerated.
    pub max_group_n: usize,
    /// Largest `n` for parameter-family generation.
    pub max_family_n: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Self { max_group_n: 9, max_family_n: 12 }
    }
}

impl Guard {
    /// The default guard, with `max_group_n` taken from `CELLRIM_MAX_N` if set.
    pub fn from_env() -> Self {
        let mut g = Self::default();
        if let Some(n) = std::env::var(GUARD_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            g.max_group_n = n;
            g.max_family_n = g.max_family_n.max(n);
        }
        g
    }

    pub fn with_max_n(n: usize) -> Self {
        Self { max_group_n: n, max_family_n: n.max(Self::default().max_family_n) }
    }

    pub fn check_group(&self, n: usize) -> Result<()> {
        if n > self.max_group_n {
            return Err(Error::GuardExceeded { n, max: self.max_group_n });
        }
        Ok(())
    }

    pub fn check_family(&self, n: usize) -> Result<()> {
        if n > self.max_family_n {
            return Err(Error::GuardExceeded { n, max: self.max_family_n });
        }
        Ok(())
    }
}

/// `Z(λ)` through the right cell of `w_J`: `e = w_J·y` for `y ∼_R w_J`,
/// kept when `e ∈ X_J` and the lengths add. Canonically sorted.
pub fn z_ideal(lambda: &Composition, guard: &Guard) -> Result<Vec<Permutation>> {
    let n = lambda.size();
    guard.check_group(n)?;
    let j = lambda.generator_set();
    let w_j = longest_in_parabolic(n, &j);
    let lw = w_j.length();
    let mut out = Vec::new();
    for y in right_cell_of(&w_j) {
        let e = w_j.compose(&y)?;
        if is_coset_representative(&e, &j) && lw + e.length() == y.length() {
            out.push(e);
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// `Z(λ)` as the `e ∈ X_J` with `D(e, λ)` admissible.
pub fn z_ideal_by_admissibility(lambda: &Composition, guard: &Guard) -> Result<Vec<Permutation>> {
    let n = lambda.size();
    guard.check_group(n)?;
    let data = parabolic(&lambda.generator_set(), n)?;
    let mut out = Vec::new();
    for e in data.cosets {
        if is_admissible(&min_column_diagram(&e, lambda)?) {
            out.push(e);
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Both routes, failing with `RouteMismatch` if they disagree.
pub fn z_ideal_checked(lambda: &Composition, guard: &Guard) -> Result<Vec<Permutation>> {
    let a = z_ideal(lambda, guard)?;
    let b = z_ideal_by_admissibility(lambda, guard)?;
    if a != b {
        return Err(Error::RouteMismatch(format!("Z({lambda}): {} via cells, {} via admissibility", a.len(), b.len())));
    }
    Ok(a)
}

/// `Y(λ)`, the prefix-maximal elements of `Z(λ)`.
pub fn rim(lambda: &Composition, guard: &Guard) -> Result<Vec<Permutation>> {
    let z: HashSet<Permutation> = z_ideal(lambda, guard)?.into_iter().collect();
    Ok(minimal_determining_set(&z))
}

/// `Y_s(λ)`: rim elements whose diagram `D(y, λ)` is special.
pub fn rim_special(lambda: &Composition, guard: &Guard) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for y in rim(lambda, guard)? {
        if min_column_diagram(&y, lambda)?.is_special() {
            out.push(y);
        }
    }
    Ok(out)
}

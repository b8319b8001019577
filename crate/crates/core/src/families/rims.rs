//! `E^(λ)` by closed form, by ψ and rotation transport, and by brute force;
//! the count tables; and verification reports.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use super::constructions::{family_diagram, rim_params};
use super::ideal::{rim, z_ideal, Guard};
use crate::diagram::{min_column_diagram, Diagram};
use crate::error::{Error, Result};
use crate::shape::{Ordering3, StuShape};
use crate::symmetric::{
    induced_rim, is_antichain, parabolic, prefix_closure, sort_canonical, Composition, GeneratorSet, Permutation,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RimRoute {
    /// Family constructors, then ψ for each trailing one past the first.
    ClosedForm,
    /// Closed form for the reversed composition, rotated.
    Rotated,
    BruteForce,
}

#[derive(Clone, Debug, Serialize)]
pub struct RimDiagrams {
    pub lambda: Vec<usize>,
    pub route: RimRoute,
    /// `E^(λ)`, sorted.
    pub all: Vec<Diagram>,
    /// `E_s^(λ)`, sorted.
    pub special: Vec<Diagram>,
}

impl RimDiagrams {
    /// Sorts and deduplicates `all` and splits off the special diagrams.
    pub fn new(lambda: &Composition, route: RimRoute, mut all: Vec<Diagram>) -> Self {
        all.sort();
        all.dedup();
        let special = all.iter().filter(|d| d.is_special()).cloned().collect();
        Self { lambda: lambda.parts().to_vec(), route, all, special }
    }

    pub fn nonspecial_count(&self) -> usize {
        self.all.len() - self.special.len()
    }
}

/// `E^(λ)` for `λ` satisfying Hypothesis (*).
pub fn closed_form_rim(shape: &StuShape) -> Result<Vec<Diagram>> {
    let base = shape.with_trailing_ones(1)?;
    let mut out: Vec<Diagram> = if base.order == Ordering3::Stu {
        vec![Diagram::young(&base.composition().sorted())?]
    } else {
        rim_params(&base).iter().map(|p| family_diagram(p, &base)).collect::<Result<_>>()?
    };
    for _ in 1..shape.trailing_ones {
        out = out.iter().map(Diagram::psi_append).collect::<Result<_>>()?;
    }
    out.sort();
    Ok(out)
}

/// `{D(y, λ) : y ∈ Y(λ)}`, sorted.
pub fn brute_force_rim(lambda: &Composition, guard: &Guard) -> Result<Vec<Diagram>> {
    let mut out: Vec<Diagram> =
        rim(lambda, guard)?.iter().map(|y| min_column_diagram(y, lambda)).collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// `E^(λ)` and `E_s^(λ)`. Uses the closed form when `λ` or its reverse
/// satisfies Hypothesis (*) and `n` is within the family guard, otherwise
/// brute force within the group guard.
pub fn rim_diagrams(lambda: &Composition, guard: &Guard) -> Result<RimDiagrams> {
    let n = lambda.size();
    if guard.check_family(n).is_ok() {
        if let Ok(shape) = StuShape::from_composition(lambda) {
            return Ok(RimDiagrams::new(lambda, RimRoute::ClosedForm, closed_form_rim(&shape)?));
        }
        if let Ok(shape) = StuShape::from_composition(&lambda.reversed()) {
            let rotated = closed_form_rim(&shape)?.iter().map(Diagram::rotate_180).collect();
            return Ok(RimDiagrams::new(lambda, RimRoute::Rotated, rotated));
        }
    }
    Ok(RimDiagrams::new(lambda, RimRoute::BruteForce, brute_force_rim(lambda, guard)?))
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `(|E_s^(λ)|, |E^(λ) - E_s^(λ)|)` from the count formulas. The second
/// entry is 0 whenever `λ₁ ∈ {s, t}`.
pub fn table_counts(shape: &StuShape) -> (u64, u64) {
    let (s, t, u) = (shape.s, shape.t, shape.u);
    let b = binom;
    match shape.order {
        Ordering3::Stu => (1, 0),
        Ordering3::Sut => (b(t, u), 0),
        Ordering3::Tsu => (b(s - t + u, u), 0),
        Ordering3::Tus => ((s - t) as u64 * b(t - 1, u - 1) + b(t, u), 0),
        Ordering3::Ust => (
            (t - u) as u64 * b(s - t + u - 1, u - 1) + b(s - t + u, u),
            b(t - u, 2) * b(s - t + u - 1, u - 1) + (t - u) as u64 * b(s - t + u, u),
        ),
        Ordering3::Uts => ((s - u + 1) as u64, ((t - u) * (s - t)) as u64 + b(t - u + 1, 2)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RimReport {
    pub lambda: Vec<usize>,
    pub table: (u64, u64),
    pub closed_form: (usize, usize),
    pub counts_match: bool,
    /// No `w_D` is a prefix of another.
    pub antichain: bool,
    /// Every element of `Z(λ)` is a prefix of some `w_D`.
    pub complete: bool,
    /// Closed-form diagrams equal `{D(y, λ) : y ∈ Y(λ)}`.
    pub matches_brute_force: bool,
    pub brute_force: (usize, usize),
}

impl RimReport {
    pub fn passed(&self) -> bool {
        self.counts_match && self.antichain && self.complete && self.matches_brute_force
    }
}

/// Checks the closed-form `E^(λ)` against the tables and against `Z(λ)`.
pub fn verify_rim_family(lambda: &Composition, guard: &Guard) -> Result<RimReport> {
    let shape = StuShape::from_composition(lambda)?;
    let closed = RimDiagrams::new(lambda, RimRoute::ClosedForm, closed_form_rim(&shape)?);
    let table = table_counts(&shape);
    let words: Vec<Permutation> = closed.all.iter().map(Diagram::w).collect();
    let z = z_ideal(lambda, guard)?;
    let tops: Vec<_> = words.iter().map(Permutation::inversion_set).collect();
    let complete = z.iter().all(|e| {
        let n_e = e.inversion_set();
        tops.iter().any(|t| n_e.is_subset(t))
    });
    let brute = RimDiagrams::new(lambda, RimRoute::BruteForce, brute_force_rim(lambda, guard)?);
    Ok(RimReport {
        lambda: lambda.parts().to_vec(),
        table,
        closed_form: (closed.special.len(), closed.nonspecial_count()),
        counts_match: (closed.special.len() as u64, closed.nonspecial_count() as u64) == table,
        antichain: is_antichain(&words),
        complete,
        matches_brute_force: brute.all == closed.all,
        brute_force: (brute.special.len(), brute.nonspecial_count()),
    })
}

/// The six orderings of `(s, t, u)` with one trailing part 1.
pub fn orderings(s: usize, t: usize, u: usize) -> Result<Vec<StuShape>> {
    Ordering3::ALL.into_iter().map(|o| StuShape::new(s, t, u, o, 1)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct InducedReport {
    pub lambda: Vec<usize>,
    pub rim_size: usize,
    pub ideal_size: usize,
    /// `{y·d̂}` equals `{w_D̂ : D ∈ E^(λ)}`.
    pub hat_words_match: bool,
    /// The prefix closure of `{y·d̂}` equals `Z(λ)·X̂`.
    pub closure_matches: bool,
}

impl InducedReport {
    pub fn passed(&self) -> bool {
        self.hat_words_match && self.closure_matches
    }
}

/// Compares the rim of `Z(λ)·X̂` in `S_{n+1}` with the hat diagrams of
/// `E^(λ)`, where `X̂` are the coset representatives of `S_n`.
pub fn verify_induced_rim(lambda: &Composition, guard: &Guard) -> Result<InducedReport> {
    let n = lambda.size();
    guard.check_group(n + 1)?;
    let j = GeneratorSet::from_indices(n + 1, &(1..n).collect::<Vec<_>>())?;
    let x_hat = parabolic(&j, n + 1)?.cosets;
    let z: Vec<Permutation> = z_ideal(lambda, guard)?.iter().map(|e| e.extend_to(n + 1)).collect();
    let mut direct = HashSet::new();
    for e in &z {
        for d in &x_hat {
            direct.insert(e.compose(d)?);
        }
    }
    let y: Vec<Permutation> = rim(lambda, guard)?.iter().map(|e| e.extend_to(n + 1)).collect();
    let induced = induced_rim(&y, &j, n + 1)?;
    let mut hats: Vec<Permutation> = brute_force_rim(lambda, guard)?.iter().map(|d| d.hat().w()).collect();
    sort_canonical(&mut hats);
    let closure: HashSet<Permutation> = prefix_closure(&induced).into_iter().collect();
    Ok(InducedReport {
        lambda: lambda.parts().to_vec(),
        rim_size: induced.len(),
        ideal_size: direct.len(),
        hat_words_match: hats == induced,
        closure_matches: closure == direct,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TransportReport {
    pub lambda: Vec<usize>,
    /// `E^(λ̇)` equals the rotations of `E^(λ)`.
    pub rotation: bool,
    /// For `λ` ending in 1: `E^(λ_*)` equals `ψ(E^(λ))`. `None` otherwise.
    pub psi: Option<bool>,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.rotation && self.psi != Some(false)
    }
}

/// Rotation and ψ transport for `λ`, by brute force on both sides.
pub fn verify_transport(lambda: &Composition, guard: &Guard) -> Result<TransportReport> {
    let e = brute_force_rim(lambda, guard)?;
    let rotated: BTreeSet<Diagram> = e.iter().map(Diagram::rotate_180).collect();
    let reversed: BTreeSet<Diagram> = brute_force_rim(&lambda.reversed(), guard)?.into_iter().collect();
    let psi = if lambda.parts().last() == Some(&1) && lambda.len() >= 2 {
        let mapped: BTreeSet<Diagram> = e.iter().map(Diagram::psi_append).collect::<Result<_>>()?;
        let target: BTreeSet<Diagram> =
            brute_force_rim(&lambda.with_trailing_one(), guard)?.into_iter().collect();
        Some(mapped.len() == e.len() && mapped == target)
    } else {
        None
    };
    Ok(TransportReport { lambda: lambda.parts().to_vec(), rotation: rotated == reversed, psi })
}

/// Pairs `(a, b)` of distinct diagrams with `w_a` a prefix of `w_b`.
pub fn prefix_comparable_pairs(diagrams: &[Diagram]) -> Vec<(usize, usize)> {
    let sets: Vec<_> = diagrams.iter().map(|d| d.w().inversion_set()).collect();
    let mut out = Vec::new();
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if a != b && sets[a].is_subset(&sets[b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Closed-form `E^(λ)` for the reversed shape, rotated; errors when neither
/// `λ` nor its reverse satisfies Hypothesis (*).
pub fn closed_form_or_rotated(lambda: &Composition) -> Result<Vec<Diagram>> {
    if let Ok(shape) = StuShape::from_composition(lambda) {
        return closed_form_rim(&shape);
    }
    let shape = StuShape::from_composition(&lambda.reversed()).map_err(|_| Error::HypothesisStar(lambda.to_string()))?;
    let mut out: Vec<Diagram> = closed_form_rim(&shape)?.iter().map(Diagram::rotate_180).collect();
    out.sort();
    Ok(out)
}

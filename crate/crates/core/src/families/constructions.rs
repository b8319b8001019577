//! The explicit diagram families `F_C`, `G_C`, `H_C`, `M^(S)` and `N^(S)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::shape::{Ordering3, StuShape};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilyParams {
    F { c: Vec<usize> },
    G { c: Vec<usize> },
    /// `C = {v} ∪ C̃`.
    H { v: usize, c_tilde: Vec<usize> },
    M { epsilon: usize, eta: usize, theta: usize, zeta: usize, psi: usize, c: Vec<usize> },
    N { eta: usize, epsilon: usize, theta: usize, phi: usize, zeta: usize },
}

impl FamilyParams {
    pub fn letter(&self) -> char {
        match self {
            FamilyParams::F { .. } => 'F',
            FamilyParams::G { .. } => 'G',
            FamilyParams::H { .. } => 'H',
            FamilyParams::M { .. } => 'M',
            FamilyParams::N { .. } => 'N',
        }
    }

    /// `θ` for `M` and `N`; the other families are always special.
    pub fn theta(&self) -> usize {
        match self {
            FamilyParams::M { theta, .. } | FamilyParams::N { theta, .. } => *theta,
            _ => 0,
        }
    }

    /// The family that lists the rim diagrams for this ordering, if any.
    pub fn family_of(order: Ordering3) -> Option<char> {
        match order {
            Ordering3::Stu => None,
            Ordering3::Sut => Some('F'),
            Ordering3::Tsu => Some('G'),
            Ordering3::Tus => Some('H'),
            Ordering3::Ust => Some('M'),
            Ordering3::Uts => Some('N'),
        }
    }
}

fn check_subset(c: &[usize], lo: usize, hi: usize, size: usize, what: &str) -> Result<BTreeSet<usize>> {
    let set: BTreeSet<usize> = c.iter().copied().collect();
    if set.len() != c.len() || set.len() != size || set.iter().any(|&x| x < lo || x > hi) {
        return Err(Error::InvalidParams(format!("{what} must be a {size}-subset of {{{lo},...,{hi}}}, got {c:?}")));
    }
    Ok(set)
}

fn expect_order(shape: &StuShape, order: Ordering3, name: char) -> Result<()> {
    if shape.order != order {
        return Err(Error::InvalidParams(format!("{name} needs the ordering {order}, got {}", shape.order)));
    }
    if shape.trailing_ones != 1 {
        return Err(Error::InvalidParams(format!("{name} is defined for a single trailing part 1")));
    }
    Ok(())
}

fn rows_to_diagram(rows: [Vec<usize>; 4]) -> Result<Diagram> {
    Diagram::from_nodes(rows.iter().enumerate().flat_map(|(r, cols)| cols.iter().map(move |&c| Node::new(r + 1, c))))
}

/// The node set of a family member, checked against the side conditions.
pub fn family_diagram(p: &FamilyParams, shape: &StuShape) -> Result<Diagram> {
    let (s, t, u) = (shape.s, shape.t, shape.u);
    match p {
        FamilyParams::F { c } => {
            expect_order(shape, Ordering3::Sut, 'F')?;
            let c = check_subset(c, 1, t, u, "C")?;
            let v = *c.iter().next().unwrap();
            rows_to_diagram([(1..=s).collect(), c.into_iter().collect(), (1..=t).collect(), vec![v]])
        }
        FamilyParams::G { c } => {
            expect_order(shape, Ordering3::Tsu, 'G')?;
            let c = check_subset(c, 1, s - t + u, u, "C")?;
            let v = *c.iter().next().unwrap();
            let row1: Vec<usize> = c.iter().copied().chain(s - t + u + 1..=s).collect();
            rows_to_diagram([row1, (1..=s).collect(), c.into_iter().collect(), vec![v]])
        }
        FamilyParams::H { v, c_tilde } => {
            expect_order(shape, Ordering3::Tus, 'H')?;
            let ct = check_subset(c_tilde, s - t + 2, s, u - 1, "C\u{303}")?;
            let bound = ct.iter().next().copied().unwrap_or(s + 1);
            if *v < 1 || *v >= bound {
                return Err(Error::InvalidParams(format!("v must lie in 1..{bound}, got {v}")));
            }
            let v_tilde = if *v < s - t + 1 { *v } else { s - t + 1 };
            let row1: Vec<usize> = std::iter::once(v_tilde).chain(s - t + 2..=s).collect();
            let row2: Vec<usize> = std::iter::once(*v).chain(ct).collect();
            rows_to_diagram([row1, row2, (1..=s).collect(), vec![*v]])
        }
        &FamilyParams::M { epsilon, eta, theta, zeta, psi, ref c } => {
            expect_order(shape, Ordering3::Ust, 'M')?;
            if s != epsilon + eta + 1 + zeta + psi || t != epsilon + theta + zeta + u || psi + 1 < u || eta < theta {
                return Err(Error::InvalidParams(format!(
                    "M parameters ({epsilon},{eta},{theta},{zeta},{psi}) do not fit (s,t,u) = ({s},{t},{u})"
                )));
            }
            let c = check_subset(c, s + theta + 1 - psi, s + theta, u - 1, "C")?;
            let e1 = epsilon + eta + 1;
            let row1: Vec<usize> = std::iter::once(e1).chain(c.iter().copied()).collect();
            let row2: Vec<usize> = (1..=e1).chain(e1 + theta + 1..=s + theta).collect();
            let row3: Vec<usize> = (1..=epsilon).chain(e1..=e1 + theta + zeta).chain(c.iter().copied()).collect();
            rows_to_diagram([row1, row2, row3, vec![e1]])
        }
        &FamilyParams::N { eta, epsilon, theta, phi, zeta } => {
            expect_order(shape, Ordering3::Uts, 'N')?;
            if s != eta + epsilon + phi + zeta + u || t != epsilon + theta + zeta + u || phi < theta {
                return Err(Error::InvalidParams(format!(
                    "N parameters ({eta},{epsilon},{theta},{phi},{zeta}) do not fit (s,t,u) = ({s},{t},{u})"
                )));
            }
            let m = eta + epsilon + theta + 1;
            let end = s + theta;
            let row1: Vec<usize> = std::iter::once(m).chain(end + 2 - u..=end).collect();
            let row2: Vec<usize> = (eta + 1..=m).chain(end + 2 - u - zeta..=end).collect();
            let row3: Vec<usize> = (1..=eta + epsilon).chain(m..=end).collect();
            rows_to_diagram([row1, row2, row3, vec![m]])
        }
    }
}

fn subsets(range: std::ops::RangeInclusive<usize>, k: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = range.collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(&items, 0, k, &mut cur, &mut out);
    out
}

/// Parameters of the rim diagrams for a shape with one trailing part 1:
/// every `C` for `F`, `G`, `H`; for `M` the tuples with `η ≥ θ` and `ζ = 0`
/// when `η > θ`; for `N` the tuples with `φ ≥ θ` and `ε = 0` when `φ > θ`.
/// Empty for the ordering `(s, t, u)`, whose rim is a Young diagram.
pub fn rim_params(shape: &StuShape) -> Vec<FamilyParams> {
    let (s, t, u) = (shape.s, shape.t, shape.u);
    match shape.order {
        Ordering3::Stu => Vec::new(),
        Ordering3::Sut => subsets(1..=t, u).into_iter().map(|c| FamilyParams::F { c }).collect(),
        Ordering3::Tsu => subsets(1..=s - t + u, u).into_iter().map(|c| FamilyParams::G { c }).collect(),
        Ordering3::Tus => {
            let mut out = Vec::new();
            for c_tilde in subsets(s - t + 2..=s, u - 1) {
                let bound = c_tilde.first().copied().unwrap_or(s + 1);
                for v in 1..bound {
                    out.push(FamilyParams::H { v, c_tilde: c_tilde.clone() });
                }
            }
            out
        }
        Ordering3::Ust => {
            let mut out = Vec::new();
            if t == u {
                return out;
            }
            for theta in 0..=t - u {
                for zeta in 0..=t - u - theta {
                    let epsilon = t - u - theta - zeta;
                    let max_extra = if zeta > 0 { 0 } else { s - t };
                    for extra in 0..=max_extra {
                        let eta = theta + extra;
                        let Some(psi) = s.checked_sub(epsilon + eta + 1 + zeta) else { continue };
                        if psi + 1 < u {
                            continue;
                        }
                        for c in subsets(s + theta + 1 - psi..=s + theta, u - 1) {
                            out.push(FamilyParams::M { epsilon, eta, theta, zeta, psi, c });
                        }
                    }
                }
            }
            out
        }
        Ordering3::Uts => {
            let mut out = Vec::new();
            if t == u {
                return out;
            }
            for theta in 0..=t - u {
                for extra in 0..=s - t {
                    let phi = theta + extra;
                    let eta = s - t - extra;
                    let eps_max = if extra > 0 { 0 } else { t - u - theta };
                    for epsilon in 0..=eps_max {
                        let zeta = t - u - theta - epsilon;
                        out.push(FamilyParams::N { eta, epsilon, theta, phi, zeta });
                    }
                }
            }
            out
        }
    }
}

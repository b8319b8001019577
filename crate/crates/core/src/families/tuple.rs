//! Determining tuples of Hypothesis-(†) diagrams and the column operations
//! C1 to C5.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Node};
use crate::error::{Error, Result};
use crate::shape::{Ordering3, StuShape};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum TupleEntry {
    /// Single node on row 2.
    One,
    /// Single node on row 3.
    OneBar,
    Two,
    Three,
    Four,
}

impl TupleEntry {
    /// Rows occupied by a column of this kind.
    pub fn rows(self) -> &'static [usize] {
        match self {
            TupleEntry::One => &[2],
            TupleEntry::OneBar => &[3],
            TupleEntry::Two => &[2, 3],
            TupleEntry::Three => &[1, 2, 3],
            TupleEntry::Four => &[1, 2, 3, 4],
        }
    }

    fn from_rows(rows: &[usize]) -> Option<Self> {
        [TupleEntry::One, TupleEntry::OneBar, TupleEntry::Two, TupleEntry::Three, TupleEntry::Four]
            .into_iter()
            .find(|e| e.rows() == rows)
    }
}

impl fmt::Display for TupleEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TupleEntry::One => "1",
            TupleEntry::OneBar => "1\u{304}",
            TupleEntry::Two => "2",
            TupleEntry::Three => "3",
            TupleEntry::Four => "4",
        })
    }
}

impl FromStr for TupleEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(TupleEntry::One),
            "1b" | "-1" | "1\u{304}" | "\u{304}1" => Ok(TupleEntry::OneBar),
            "2" => Ok(TupleEntry::Two),
            "3" => Ok(TupleEntry::Three),
            "4" => Ok(TupleEntry::Four),
            other => Err(Error::InvalidParams(format!("unknown tuple entry {other:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DeterminingTuple {
    entries: Vec<TupleEntry>,
}

impl DeterminingTuple {
    /// Checks the single 4, the `u - 1` threes and that the 4 comes first.
    pub fn new(entries: Vec<TupleEntry>, u: usize) -> Result<Self> {
        let fours: Vec<usize> = positions(&entries, TupleEntry::Four);
        let threes = positions(&entries, TupleEntry::Three);
        if fours.len() != 1 {
            return Err(Error::HypothesisDagger(format!("{} columns of length 4", fours.len())));
        }
        if threes.len() + 1 != u {
            return Err(Error::HypothesisDagger(format!("{} columns of length 3, expected {}", threes.len(), u - 1)));
        }
        if threes.iter().any(|&k| k < fours[0]) {
            return Err(Error::HypothesisDagger("a column of length 3 precedes the column of length 4".into()));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[TupleEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_diagram(&self) -> Diagram {
        let nodes = self
            .entries
            .iter()
            .enumerate()
            .flat_map(|(j, e)| e.rows().iter().map(move |&r| Node::new(r, j + 1)));
        Diagram::from_nodes(nodes).expect("tuple has a column of length 4")
    }
}

fn positions(entries: &[TupleEntry], e: TupleEntry) -> Vec<usize> {
    entries.iter().enumerate().filter(|(_, &x)| x == e).map(|(k, _)| k).collect()
}

impl fmt::Display for DeterminingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn check_shape(shape: &StuShape) -> Result<()> {
    if !matches!(shape.order, Ordering3::Ust | Ordering3::Uts) || shape.t <= shape.u || shape.trailing_ones != 1 {
        return Err(Error::HypothesisDagger(format!("{shape} needs λ₁ = u < t and four rows")));
    }
    Ok(())
}

/// `α̂_D` for a diagram satisfying Hypothesis (†) for `shape`.
pub fn determining_tuple(d: &Diagram, shape: &StuShape) -> Result<DeterminingTuple> {
    check_shape(shape)?;
    if d.row_composition() != shape.composition() {
        return Err(Error::HypothesisDagger(format!("row lengths {} differ from {shape}", d.row_composition())));
    }
    let mut entries = Vec::with_capacity(d.num_cols());
    for c in 1..=d.num_cols() {
        let rows: Vec<usize> = d.column(c).map(|p| p.row).collect();
        let e = TupleEntry::from_rows(&rows)
            .ok_or_else(|| Error::HypothesisDagger(format!("column {c} occupies rows {rows:?}")))?;
        entries.push(e);
    }
    DeterminingTuple::new(entries, shape.u)
}

/// The Hypothesis-(†) diagram with determining tuple `tuple`.
pub fn from_tuple(tuple: &DeterminingTuple, shape: &StuShape) -> Result<Diagram> {
    check_shape(shape)?;
    let d = tuple.to_diagram();
    if d.row_composition() != shape.composition() {
        return Err(Error::HypothesisDagger(format!("tuple {tuple} gives row lengths {}", d.row_composition())));
    }
    Ok(d)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum ColumnOp {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl ColumnOp {
    pub const ALL: [ColumnOp; 5] = [ColumnOp::C1, ColumnOp::C2, ColumnOp::C3, ColumnOp::C4, ColumnOp::C5];

    /// Whether the op applies at (1-based) column `j`.
    pub fn applies(self, entries: &[TupleEntry], j: usize) -> bool {
        use TupleEntry::*;
        if j == 0 || j > entries.len() {
            return false;
        }
        let a = entries[j - 1];
        let b = entries.get(j).copied();
        match self {
            ColumnOp::C1 => (a, b) == (One, Some(Two)),
            ColumnOp::C2 => (a, b) == (Three, Some(Two)),
            ColumnOp::C3 => (a, b) == (Two, Some(OneBar)),
            ColumnOp::C4 => (a, b) == (Three, Some(OneBar)),
            ColumnOp::C5 => a == Two,
        }
    }
}

impl fmt::Display for ColumnOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ColumnOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColumnOp::ALL
            .into_iter()
            .find(|o| o.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParams(format!("unknown column operation {s:?}")))
    }
}

/// Applies C1 to C4 (swap columns `j`, `j+1`) or C5 (split the length-2
/// column `j` into a row-3 node followed by a row-2 node).
pub fn apply_column_op(e: &Diagram, op: ColumnOp, j: usize, shape: &StuShape) -> Result<Diagram> {
    let tuple = determining_tuple(e, shape)?;
    let mut entries = tuple.entries().to_vec();
    if !op.applies(&entries, j) {
        return Err(Error::PatternMismatch { op: op.to_string(), column: j });
    }
    match op {
        ColumnOp::C5 => {
            entries.splice(j - 1..j, [TupleEntry::OneBar, TupleEntry::One]);
        }
        _ => entries.swap(j - 1, j),
    }
    from_tuple(&DeterminingTuple::new(entries, shape.u)?, shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::constructions::{family_diagram, rim_params, FamilyParams};
    use TupleEntry::*;

    fn shape(s: usize, t: usize, u: usize, o: Ordering3) -> StuShape {
        StuShape::new(s, t, u, o, 1).unwrap()
    }

    #[test]
    fn m_example_tuple() {
        let sh = shape(8, 5, 3, Ordering3::Ust);
        let m = family_diagram(
            &FamilyParams::M { epsilon: 1, eta: 3, theta: 1, zeta: 0, psi: 3, c: vec![7, 8] },
            &sh,
        )
        .unwrap();
        let tuple = determining_tuple(&m, &sh).unwrap();
        assert_eq!(tuple.entries(), &[Two, One, One, One, Four, OneBar, Three, Three, One]);
        assert_eq!(tuple.to_string(), "(2,1,1,1,4,1\u{304},3,3,1)");
        assert_eq!(from_tuple(&tuple, &sh).unwrap(), m);
    }

    #[test]
    fn n_example_tuple() {
        let sh = shape(8, 5, 3, Ordering3::Uts);
        let n = family_diagram(&FamilyParams::N { eta: 3, epsilon: 0, theta: 1, phi: 1, zeta: 1 }, &sh).unwrap();
        let tuple = determining_tuple(&n, &sh).unwrap();
        assert_eq!(tuple.entries(), &[OneBar, OneBar, OneBar, One, Four, OneBar, Two, Three, Three]);
        assert_eq!(from_tuple(&tuple, &sh).unwrap(), n);
    }

    #[test]
    fn u_one_has_no_threes() {
        let sh = shape(3, 2, 1, Ordering3::Ust);
        let t = DeterminingTuple::new(vec![Four, Two, One], 1).unwrap();
        assert_eq!(from_tuple(&t, &sh).unwrap().row_composition(), sh.composition());
        assert!(DeterminingTuple::new(vec![Three, Four], 2).is_err());
        assert!(DeterminingTuple::new(vec![Four, Four], 1).is_err());
    }

    #[test]
    fn c1_swaps_and_extends_prefix() {
        let sh = shape(3, 2, 1, Ordering3::Ust);
        let e = from_tuple(&DeterminingTuple::new(vec![Four, One, Two], 1).unwrap(), &sh).unwrap();
        let f = apply_column_op(&e, ColumnOp::C1, 2, &sh).unwrap();
        assert_eq!(determining_tuple(&f, &sh).unwrap().entries(), &[Four, Two, One]);
        assert!(e.w().is_prefix_of(&f.w()).unwrap());
        assert!(matches!(
            apply_column_op(&e, ColumnOp::C2, 2, &sh),
            Err(Error::PatternMismatch { column: 2, .. })
        ));
    }

    #[test]
    fn c5_splits() {
        let sh = shape(3, 2, 1, Ordering3::Ust);
        let e = from_tuple(&DeterminingTuple::new(vec![Four, Two, One], 1).unwrap(), &sh).unwrap();
        let f = apply_column_op(&e, ColumnOp::C5, 2, &sh).unwrap();
        assert_eq!(determining_tuple(&f, &sh).unwrap().entries(), &[Four, OneBar, One, One]);
        assert_eq!(f.num_cols(), e.num_cols() + 1);
        assert!(e.w().is_prefix_of(&f.w()).unwrap());
    }

    #[test]
    fn every_legal_op_on_family_members_extends_the_prefix() {
        for (s, t, u) in [(3, 2, 1), (4, 3, 2), (5, 3, 2), (4, 4, 2), (5, 4, 3)] {
            for o in [Ordering3::Ust, Ordering3::Uts] {
                let sh = shape(s, t, u, o);
                for p in rim_params(&sh) {
                    let e = family_diagram(&p, &sh).unwrap();
                    let entries = determining_tuple(&e, &sh).unwrap().entries().to_vec();
                    for op in ColumnOp::ALL {
                        for j in 1..=entries.len() {
                            if op.applies(&entries, j) {
                                let f = apply_column_op(&e, op, j, &sh).unwrap();
                                assert!(e.w().is_prefix_of(&f.w()).unwrap(), "{op} at {j} on {p:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}

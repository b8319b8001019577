//! Robinson-Schensted correspondence and the right-cell test built on it.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::min_column_diagram;
use crate::error::{Error, Result};
use crate::paths::is_admissible;
use crate::symmetric::{parabolic, sort_canonical, Composition, Partition, Permutation};

/// Rows of a standard Young tableau.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau("empty row".into()));
            }
            if r > 0 && row.len() > rows[r - 1].len() {
                return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
            }
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::InvalidTableau(format!("entries are not 1..{n}")));
                }
                seen[e] = true;
                if c > 0 && row[c - 1] >= e {
                    return Err(Error::InvalidTableau(format!("row {} is not increasing", r + 1)));
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::InvalidTableau(format!("column {} is not increasing", c + 1)));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// All standard tableaux of a shape.
    pub fn all_of_shape(shape: &Partition) -> Vec<StandardYoungTableau> {
        let n = shape.size();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.parts().len()];
        fn rec(next: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardYoungTableau>) {
            if next > n {
                out.push(StandardYoungTableau { rows: rows.clone() });
                return;
            }
            for r in 0..shape.len() {
                let len = rows[r].len();
                if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                    rows[r].push(next);
                    rec(next + 1, n, shape, rows, out);
                    rows[r].pop();
                }
            }
        }
        rec(1, n, shape.parts(), &mut rows, &mut out);
        out
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for StandardYoungTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StandardYoungTableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Self::new(Vec::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}

/// Row insertion of the one-line word `1·x, 2·x, ..., n·x`. Returns the
/// insertion tableau `P` and the recording tableau `Q`.
pub fn rs_pair(x: &Permutation) -> (StandardYoungTableau, StandardYoungTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for i in 1..=x.degree() {
        let mut v = x.image(i);
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![v]);
                q.push(vec![i]);
                break;
            }
            match p[r].iter().position(|&e| e > v) {
                Some(c) => {
                    std::mem::swap(&mut p[r][c], &mut v);
                    r += 1;
                }
                None => {
                    p[r].push(v);
                    q[r].push(i);
                    break;
                }
            }
        }
    }
    (StandardYoungTableau { rows: p }, StandardYoungTableau { rows: q })
}

/// Inverse of `rs_pair`.
pub fn rs_inverse(p: &StandardYoungTableau, q: &StandardYoungTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::InvalidTableau("P and Q have different shapes".into()));
    }
    let n = p.size();
    let mut p = p.rows.clone();
    let mut q = q.rows.clone();
    let mut images = vec![0usize; n];
    for i in (1..=n).rev() {
        let mut r = q.iter().position(|row| row.last() == Some(&i)).unwrap();
        q[r].pop();
        let mut v = p[r].pop().unwrap();
        if p[r].is_empty() {
            p.pop();
            q.pop();
        }
        while r > 0 {
            r -= 1;
            let c = p[r].iter().rposition(|&e| e < v).unwrap();
            std::mem::swap(&mut p[r][c], &mut v);
        }
        images[i - 1] = v;
    }
    Permutation::from_images(&images)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum TableauSide {
    P,
    Q,
}

impl TableauSide {
    pub fn of(self, x: &Permutation) -> StandardYoungTableau {
        let (p, q) = rs_pair(x);
        match self {
            TableauSide::P => p,
            TableauSide::Q => q,
        }
    }
}

/// Tableau that is constant on right cells for the right action used here.
/// Fixed by `calibrate`; a test fails if the battery stops singling it out.
pub const RIGHT_CELL_SIDE: TableauSide = TableauSide::Q;

/// Outcome of testing both tableau sides against admissibility.
#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub cases: usize,
    pub p_discrepancies: usize,
    pub q_discrepancies: usize,
}

impl Calibration {
    /// The unique side with no discrepancies, if exactly one exists.
    pub fn winner(&self) -> Option<TableauSide> {
        match (self.p_discrepancies == 0, self.q_discrepancies == 0) {
            (true, false) => Some(TableauSide::P),
            (false, true) => Some(TableauSide::Q),
            _ => None,
        }
    }
}

/// For every `λ ⊨ n` with `n` in `degrees` and every `e ∈ X_{J(λ)}`, compares
/// `w_J e ~ w_J` under each side with admissibility of `D(e, λ)`.
pub fn calibrate(degrees: impl IntoIterator<Item = usize>) -> Result<Calibration> {
    let mut cal = Calibration { cases: 0, p_discrepancies: 0, q_discrepancies: 0 };
    for n in degrees {
        for lambda in Composition::all(n) {
            let data = parabolic(&lambda.generator_set(), n)?;
            let (p0, q0) = rs_pair(&data.w_j);
            for e in &data.cosets {
                let admissible = is_admissible(&min_column_diagram(e, &lambda)?);
                let (p, q) = rs_pair(&data.w_j.compose(e)?);
                cal.cases += 1;
                cal.p_discrepancies += usize::from((p == p0) != admissible);
                cal.q_discrepancies += usize::from((q == q0) != admissible);
            }
        }
    }
    Ok(cal)
}

/// `x ~_R y`.
pub fn right_equivalent(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch { left: x.degree(), right: y.degree() });
    }
    Ok(RIGHT_CELL_SIDE.of(x) == RIGHT_CELL_SIDE.of(y))
}

/// The right cell of `w`, canonically sorted. Built by inverse insertion,
/// so it never enumerates the whole group.
pub fn right_cell_of(w: &Permutation) -> Vec<Permutation> {
    let (p, q) = rs_pair(w);
    let mut out: Vec<Permutation> = StandardYoungTableau::all_of_shape(&p.shape())
        .iter()
        .map(|t| match RIGHT_CELL_SIDE {
            TableauSide::P => rs_inverse(&p, t),
            TableauSide::Q => rs_inverse(t, &q),
        })
        .collect::<Result<_>>()
        .expect("tableaux of equal shape");
    sort_canonical(&mut out);
    out
}

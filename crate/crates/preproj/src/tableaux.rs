//! Semistandard Young tableaux and the modules attached to them.
//!
//! A tableau `T` with entries in `1..n` spawns a module with one basis
//! vector `w^X_j` per box `X` and vertex `j = r(X)..c(X)-1`, where
//! `r(X)` is the row of the box and `c(X)` its entry. Leftward arrows
//! walk down each box's chain; the rightward arrow out of `w^X_j` hits
//! `w^Q_{j+1}` with a scalar weight for every box `Q` with
//! `r(X) < r(Q) <= c(X) < c(Q)`. The preprojective relation holds for
//! every choice of scalars, and generic nonzero scalars land in the
//! dense locus where Hom dimensions against the connected Maya modules
//! reproduce the box counts `g_A(T)`; that signature classifies the
//! tableau.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{connected_subsets, SubsetI};
use crate::matrix::RatMatrix;
use crate::maya::{maya_module, MayaSubset};
use crate::rational::Rational;
use crate::rep::{hom_space_basis, GradedRep};

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries bounded by `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: usize,
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

/// A box of a tableau: 1-based row and column position, plus the entry
/// written in it (the "content" of the box).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableauBox {
    pub row: usize,
    pub col: usize,
    pub entry: usize,
}

impl Tableau {
    pub fn new(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("tableaux need n >= 2"));
        }
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("row lengths must weakly decrease"));
        }
        if shape.last() == Some(&0) {
            return Err(Error::invalid("empty trailing rows are not allowed"));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.iter().any(|&e| e < 1 || e > n) {
                return Err(Error::invalid(format!(
                    "row {} has entries outside 1..={n}",
                    r + 1
                )));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::invalid(format!(
                    "row {} is not weakly increasing",
                    r + 1
                )));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.iter().enumerate().any(|(c, &e)| e <= above[c]) {
                    return Err(Error::invalid(format!(
                        "column strictness fails in row {}",
                        r + 1
                    )));
                }
            }
        }
        Ok(Tableau { n, shape, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.iter().sum()
    }

    /// Number of occurrences of each entry, as an n-tuple.
    pub fn content(&self) -> Vec<i64> {
        let mut out = vec![0; self.n];
        for row in &self.rows {
            for &e in row {
                out[e - 1] += 1;
            }
        }
        out
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> Vec<TableauBox> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter().enumerate().map(move |(c, &entry)| TableauBox {
                    row: r + 1,
                    col: c + 1,
                    entry,
                })
            })
            .collect()
    }
}

/// All semistandard tableaux of the given shape whose entry `e` occurs
/// `content[e-1]` times, in lexicographic order of the row reading word
/// (rows concatenated top to bottom). Contents with negative entries or
/// the wrong total yield the empty list.
pub fn ssyt_enumerate(shape: &[usize], content: &[i64]) -> Vec<Tableau> {
    let n = content.len();
    if n < 2 || content.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let shape: Vec<usize> = shape
        .iter()
        .copied()
        .take_while(|&part| part > 0)
        .collect();
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Vec::new();
    }
    let total: usize = shape.iter().sum();
    if content.iter().sum::<i64>() != total as i64 {
        return Vec::new();
    }
    // more rows than available entry values forces a column violation
    if shape.len() > n {
        return Vec::new();
    }
    let mut remaining: Vec<i64> = content.to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill_cells(&shape, n, 0, 0, &mut remaining, &mut grid, &mut out);
    out
}

fn fill_cells(
    shape: &[usize],
    n: usize,
    row: usize,
    col: usize,
    remaining: &mut Vec<i64>,
    grid: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if row == shape.len() {
        out.push(Tableau::new(n, grid.clone()).expect("fill respects all constraints"));
        return;
    }
    let (next_row, next_col) = if col + 1 < shape[row] {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_by_row = if col > 0 { grid[row][col - 1] } else { 1 };
    let min_by_col = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
    for entry in min_by_row.max(min_by_col)..=n {
        if remaining[entry - 1] == 0 {
            continue;
        }
        remaining[entry - 1] -= 1;
        grid[row][col] = entry;
        fill_cells(shape, n, next_row, next_col, remaining, grid, out);
        remaining[entry - 1] += 1;
    }
}

/// Number of boxes `X` with `r(X) <= i < c(X) <= t` for a connected
/// subset `A = {t-i+1, ..., t}`.
pub fn g_count(t: &Tableau, a: &SubsetI) -> Result<usize> {
    if a.size() == 0 || !a.is_connected() {
        return Err(Error::invalid(format!(
            "g counts need a nonempty connected subset, got {{{a}}}"
        )));
    }
    if a.n() != t.n() {
        return Err(Error::invalid("tableau and subset frames differ"));
    }
    let i = a.size();
    let top = *a.elements().last().unwrap();
    Ok(t.boxes()
        .iter()
        .filter(|bx| bx.row <= i && i < bx.entry && bx.entry <= top)
        .count())
}

/// The full collection of box counts over all connected admissible
/// subsets, in the canonical subset order.
pub fn signature(t: &Tableau) -> Vec<(SubsetI, usize)> {
    connected_subsets(t.n(), true)
        .into_iter()
        .map(|a| {
            let g = g_count(t, &a).expect("connected admissible by construction");
            (a, g)
        })
        .collect()
}

/// Scalar weights on the ordered box pairs `(X, Q)` with
/// `r(X) < r(Q) <= c(X) < c(Q)`; exactly these pairs must be keyed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxScalars {
    entries: BTreeMap<((usize, usize), (usize, usize)), Rational>,
}

/// The ordered box pairs that may carry a scalar.
pub fn admissible_pairs(t: &Tableau) -> Vec<(TableauBox, TableauBox)> {
    let boxes = t.boxes();
    boxes
        .iter()
        .flat_map(|x| boxes.iter().map(move |q| (*x, *q)))
        .filter(|(x, q)| x.row < q.row && q.row <= x.entry && x.entry < q.entry)
        .collect()
}

impl BoxScalars {
    pub fn new(entries: BTreeMap<((usize, usize), (usize, usize)), Rational>) -> Self {
        BoxScalars { entries }
    }

    fn constant(t: &Tableau, value: Rational) -> Self {
        let entries = admissible_pairs(t)
            .into_iter()
            .map(|(x, q)| (((x.row, x.col), (q.row, q.col)), value.clone()))
            .collect();
        BoxScalars { entries }
    }

    pub fn zeros(t: &Tableau) -> Self {
        BoxScalars::constant(t, Rational::zero())
    }

    pub fn ones(t: &Tableau) -> Self {
        BoxScalars::constant(t, Rational::one())
    }

    pub fn get(&self, x: (usize, usize), q: (usize, usize)) -> Option<&Rational> {
        self.entries.get(&(x, q))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Nonzero integer scalars in `1..=10^6` on every admissible pair,
/// drawn deterministically from the seed in pair order.
pub fn generic_scalars(t: &Tableau, seed: u64) -> BoxScalars {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = admissible_pairs(t)
        .into_iter()
        .map(|(x, q)| {
            let value = Rational::from_int(rng.random_range(1..=1_000_000));
            (((x.row, x.col), (q.row, q.col)), value)
        })
        .collect();
    BoxScalars { entries }
}

/// Builds the module of type `T` for the given scalars. Basis vectors
/// at each vertex are ordered by the row-major order of their boxes;
/// the output satisfies the preprojective relation for every scalar
/// assignment.
pub fn type_t_module(t: &Tableau, scalars: &BoxScalars) -> Result<GradedRep> {
    let expected = admissible_pairs(t);
    if scalars.len() != expected.len()
        || expected
            .iter()
            .any(|(x, q)| scalars.get((x.row, x.col), (q.row, q.col)).is_none())
    {
        return Err(Error::invalid(
            "scalars must be keyed on exactly the admissible box pairs",
        ));
    }
    let n = t.n();
    let boxes = t.boxes();
    // chain of box b covers vertices r(b) ..= entry(b)-1
    let at_vertex = |j: usize| -> Vec<usize> {
        boxes
            .iter()
            .enumerate()
            .filter_map(|(idx, b)| (b.row <= j && j < b.entry).then_some(idx))
            .collect()
    };
    let dims: Vec<usize> = (1..n).map(|j| at_vertex(j).len()).collect();

    let right = (1..n - 1)
        .map(|j| {
            let sources = at_vertex(j);
            let targets = at_vertex(j + 1);
            RatMatrix::from_fn(targets.len(), sources.len(), |tp, sp| {
                let x = &boxes[sources[sp]];
                let q = &boxes[targets[tp]];
                let admissible = x.row < q.row && q.row <= x.entry && x.entry < q.entry;
                if admissible {
                    scalars
                        .get((x.row, x.col), (q.row, q.col))
                        .cloned()
                        .unwrap_or_else(Rational::zero)
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    let left = (2..n)
        .map(|j| {
            let sources = at_vertex(j);
            let targets = at_vertex(j - 1);
            RatMatrix::from_fn(targets.len(), sources.len(), |tp, sp| {
                if sources[sp] == targets[tp] {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    Ok(GradedRep::from_parts(n, dims, right, left))
}

/// `dim Hom(M, N(A))`, computed by the linear-algebra solver.
pub fn f_value(m: &GradedRep, a: &MayaSubset) -> Result<usize> {
    Ok(hom_space_basis(m, &maya_module(a))?.len())
}

/// The Hom signature of a module against every connected admissible
/// Maya module, in the canonical subset order.
pub fn f_signature(m: &GradedRep) -> Result<Vec<(SubsetI, usize)>> {
    connected_subsets(m.n(), true)
        .into_iter()
        .map(|s| {
            let a = MayaSubset::new(s.clone())?;
            Ok((s, f_value(m, &a)?))
        })
        .collect()
}

/// Finds the unique tableau of the given shape and content whose box
/// counts match the module's Hom signature.
///
/// Fails with a full diagnostic signature when no tableau matches (the
/// module is not generic in any tableau locus, or the inputs are
/// inconsistent); several matches would contradict the injectivity of
/// signatures and are flagged as an internal error.
pub fn classify(m: &GradedRep, shape: &[usize], content: &[i64]) -> Result<Tableau> {
    let n = m.n();
    if content.len() != n {
        return Err(Error::invalid(format!("content must be an n-tuple, n={n}")));
    }
    let mut padded = shape.to_vec();
    if padded.len() > n && padded[n..].iter().any(|&p| p > 0) {
        return Err(Error::invalid("shape has more than n parts"));
    }
    padded.resize(n, 0);
    if padded.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::invalid("shape must be weakly decreasing"));
    }
    // the content must be the shape minus the dimension vector; full
    // columns of the shape shift every coordinate without touching the
    // module, so compare against the shape itself rather than the
    // weight rebuilt from the socle bound
    let alpha = crate::lattice::RootVector::from_dimension_vector(m.dims());
    let mu: Vec<i64> = padded
        .iter()
        .zip(alpha.coords())
        .map(|(&l, x)| l as i64 - x)
        .collect();
    if mu != content {
        return Err(Error::invalid(format!(
            "content {content:?} does not match shape minus the dimension vector ({mu:?})"
        )));
    }
    let w: Vec<usize> = (0..n - 1).map(|k| padded[k] - padded[k + 1]).collect();
    if !m.in_rep_w(&w)? {
        return Err(Error::invalid(format!(
            "socle dimensions {:?} exceed the bound {w:?} recovered from the shape",
            m.socle_dims()
        )));
    }

    let observed = f_signature(m)?;
    let candidates: Vec<Tableau> = ssyt_enumerate(&padded, content)
        .into_iter()
        .filter(|t| {
            signature(t)
                .iter()
                .zip(&observed)
                .all(|((_, g), (_, f))| g == f)
        })
        .collect();
    match candidates.len() {
        1 => Ok(candidates.into_iter().next().unwrap()),
        0 => {
            let rendered: Vec<String> = observed
                .iter()
                .map(|(a, f)| format!("{{{a}}}:{f}"))
                .collect();
            Err(Error::not_applicable(format!(
                "no tableau of this shape and content matches the Hom signature {}",
                rendered.join(", ")
            )))
        }
        k => Err(Error::violation(format!(
            "{k} tableaux share one Hom signature, contradicting signature injectivity"
        ))),
    }
}

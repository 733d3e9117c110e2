//! Standard fillings of partition, composition and shifted shapes.
//!
//! Cells are `(row, column)`, both 1-based, with row 1 at the bottom (French
//! convention). Rows are stored bottom to top. A shifted row `r` begins in
//! column `r`, so column indices are absolute for every flavor.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{Composition, Partition, Permutation, StrictPartition};
use crate::error::{Error, Result};

pub type Cell = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    /// Increasing up columns and along rows.
    #[serde(rename = "SYT")]
    Syt,
    /// Decreasing up columns and along rows.
    #[serde(rename = "SRT")]
    Srt,
    /// Reverse composition tableau: rows decrease, the first column increases
    /// downward, and the triple rule holds.
    #[serde(rename = "SRCT")]
    Srct,
    /// Shifted shape, increasing up columns and along rows.
    #[serde(rename = "SST")]
    Sst,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Syt => "SYT",
            Flavor::Srt => "SRT",
            Flavor::Srct => "SRCT",
            Flavor::Sst => "SST",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    flavor: Flavor,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    flavor: Flavor,
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            flavor: t.flavor,
            shape: t.shape(),
            rows: t.rows,
        }
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        let lens: Vec<usize> = r.rows.iter().map(Vec::len).collect();
        if lens != r.shape.parts() {
            return Err(Error::ShapeMismatch(format!(
                "declared shape {} but rows have lengths {lens:?}",
                r.shape
            )));
        }
        Tableau::new(r.flavor, r.rows)
    }
}

impl Tableau {
    /// Validates the filling against the flavor's rules.
    pub fn new(flavor: Flavor, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { flavor, rows };
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(flavor: Flavor, rows: Vec<Vec<usize>>) -> Self {
        Tableau { flavor, rows }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Rows from bottom to top.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths from bottom to top.
    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(Vec::len).collect()).unwrap_or_default()
    }

    pub fn partition_shape(&self) -> Option<Partition> {
        Partition::new(self.rows.iter().map(Vec::len).collect()).ok()
    }

    fn offset(&self, row: usize) -> usize {
        match self.flavor {
            Flavor::Sst => row - 1,
            _ => 0,
        }
    }

    pub fn get(&self, (row, col): Cell) -> Option<usize> {
        if row == 0 || row > self.rows.len() {
            return None;
        }
        let off = self.offset(row);
        if col <= off {
            return None;
        }
        self.rows[row - 1].get(col - off - 1).copied()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.get(cell).is_some()
    }

    /// All cells with their values, bottom row first, left to right.
    pub fn cells(&self) -> Vec<(Cell, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (r, row) in self.rows.iter().enumerate() {
            let off = self.offset(r + 1);
            for (c, &v) in row.iter().enumerate() {
                out.push(((r + 1, off + c + 1), v));
            }
        }
        out
    }

    /// `positions()[v]` is the cell holding `v`; index 0 unused.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![(0, 0); self.size() + 1];
        for (cell, v) in self.cells() {
            if v < pos.len() {
                pos[v] = cell;
            }
        }
        pos
    }

    /// Values of column `col`, bottom to top.
    pub fn column(&self, col: usize) -> Vec<usize> {
        (1..=self.rows.len())
            .filter_map(|r| self.get((r, col)))
            .collect()
    }

    pub fn width(&self) -> usize {
        (1..=self.rows.len())
            .map(|r| self.offset(r) + self.rows[r - 1].len())
            .max()
            .unwrap_or(0)
    }

    /// Cells in the order the flavor's reading word visits them.
    pub fn reading_order(&self) -> Vec<Cell> {
        match self.flavor {
            Flavor::Syt | Flavor::Sst => row_reading_order(self),
            Flavor::Srt => column_reading_order(self),
            Flavor::Srct => bent_reading_order(self),
        }
    }

    pub fn reading_word(&self) -> Permutation {
        Permutation::from_vec_unchecked(
            self.reading_order()
                .into_iter()
                .map(|c| self.get(c).unwrap())
                .collect(),
        )
    }

    /// Same shape and flavor, with `word[k]` written into the `k`-th cell of the
    /// reading order. The result is not validated.
    pub fn refill(&self, word: &Permutation) -> Tableau {
        let mut rows = self.rows.clone();
        for (cell, &v) in self.reading_order().into_iter().zip(word.word()) {
            let off = self.offset(cell.0);
            rows[cell.0 - 1][cell.1 - off - 1] = v;
        }
        Tableau {
            flavor: self.flavor,
            rows,
        }
    }

    pub fn inverse_descent_set(&self) -> Vec<usize> {
        self.reading_word().inverse_descent_set()
    }

    pub fn descent_composition(&self) -> Composition {
        self.reading_word().descent_composition()
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    fn check(&self) -> Result<()> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (_, v) in self.cells() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "{self:?} is not a standard filling"
                )));
            }
            seen[v] = true;
        }
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        let shape_ok = match self.flavor {
            Flavor::Syt | Flavor::Srt => Partition::new(lens.clone()).is_ok(),
            Flavor::Sst => StrictPartition::new(lens.clone()).is_ok(),
            Flavor::Srct => Composition::new(lens.clone()).is_ok(),
        };
        if !shape_ok {
            return Err(Error::InvalidShape(format!(
                "{lens:?} is not a {} shape",
                self.flavor
            )));
        }
        let bad = |why: &str| Err(Error::InvalidTableau(format!("{self:?}: {why}")));
        match self.flavor {
            Flavor::Syt | Flavor::Sst => {
                if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
                    return bad("row not increasing");
                }
                for ((r, c), v) in self.cells() {
                    if r > 1 {
                        if let Some(below) = self.get((r - 1, c)) {
                            if below > v {
                                return bad("column not increasing upward");
                            }
                        }
                    }
                }
            }
            Flavor::Srt => {
                if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
                    return bad("row not decreasing");
                }
                for ((r, c), v) in self.cells() {
                    if r > 1 && self.get((r - 1, c)).is_some_and(|below| below < v) {
                        return bad("column not decreasing upward");
                    }
                }
            }
            Flavor::Srct => {
                if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] < w[1])) {
                    return bad("row not decreasing");
                }
                if self.rows.windows(2).any(|w| w[0][0] < w[1][0]) {
                    return bad("first column not increasing downward");
                }
                if !srct_triple_rule(self) {
                    return bad("triple rule violated");
                }
            }
        }
        Ok(())
    }

    /// French layout, top row first.
    pub fn render(&self) -> String {
        let n = self.size();
        let w = n.to_string().len();
        let mut out = String::new();
        for r in (1..=self.rows.len()).rev() {
            let off = self.offset(r);
            out.push_str(&" ".repeat(off * (w + 1)));
            let line: Vec<String> = self.rows[r - 1]
                .iter()
                .map(|v| format!("{v:>w$}"))
                .collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.flavor
            .cmp(&other.flavor)
            .then_with(|| self.reading_word().cmp(&other.reading_word()))
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.flavor, self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn row_reading_order(t: &Tableau) -> Vec<Cell> {
    let mut out = Vec::with_capacity(t.size());
    for r in (1..=t.rows.len()).rev() {
        let off = t.offset(r);
        out.extend((0..t.rows[r - 1].len()).map(|c| (r, off + c + 1)));
    }
    out
}

/// Up each column, columns taken right to left.
fn column_reading_order(t: &Tableau) -> Vec<Cell> {
    let mut out = Vec::with_capacity(t.size());
    for c in (1..=t.width()).rev() {
        out.extend(
            (1..=t.rows.len())
                .filter(|&r| t.contains_cell((r, c)))
                .map(|r| (r, c)),
        );
    }
    out
}

/// Down each column from the rightmost to the second, then up the first.
fn bent_reading_order(t: &Tableau) -> Vec<Cell> {
    let mut out = Vec::with_capacity(t.size());
    for c in (2..=t.width()).rev() {
        out.extend(
            (1..=t.rows.len())
                .rev()
                .filter(|&r| t.contains_cell((r, c)))
                .map(|r| (r, c)),
        );
    }
    out.extend((1..=t.rows.len()).map(|r| (r, 1)));
    out
}

/// For horizontally adjacent `a > b` (with `b = 0` past the row end), no
/// entry strictly between `b` and `a` may sit below `b` in `b`'s column.
fn srct_triple_rule(t: &Tableau) -> bool {
    for (r, row) in t.rows.iter().enumerate() {
        let r = r + 1;
        for (c, &a) in row.iter().enumerate() {
            let col = c + 2;
            let b = row.get(c + 1).copied().unwrap_or(0);
            for below in 1..r {
                if let Some(v) = t.get((below, col)) {
                    if b < v && v < a {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn row_reading_word(t: &Tableau) -> Permutation {
    word_in_order(t, &row_reading_order(t))
}

pub fn reverse_column_word(t: &Tableau) -> Permutation {
    word_in_order(t, &column_reading_order(t))
}

pub fn bent_reading_word(t: &Tableau) -> Permutation {
    word_in_order(t, &bent_reading_order(t))
}

fn word_in_order(t: &Tableau, order: &[Cell]) -> Permutation {
    Permutation::from_vec_unchecked(order.iter().map(|&c| t.get(c).unwrap()).collect())
}

/// `U_l`: fill rows bottom to top with `1..=n` in order.
pub fn superstandard(l: &Partition) -> Tableau {
    let mut next = 1;
    let rows = l
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    Tableau::from_rows_unchecked(Flavor::Syt, rows)
}

pub fn is_superstandard(t: &Tableau) -> bool {
    t.flavor == Flavor::Syt && t.partition_shape().is_some_and(|l| superstandard(&l) == *t)
}

/// Cells of each run (in reading order) and the descent composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<Vec<Cell>>,
    pub beta: Composition,
}

impl RunDecomposition {
    /// Last value of each run: the sorted inverse descent set followed by `n`.
    pub fn boundaries(&self) -> Vec<usize> {
        self.beta
            .parts()
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// Run index (1-based) for every value; index 0 unused.
    pub fn run_of_value(&self) -> Vec<usize> {
        let mut out = vec![0];
        for (k, &p) in self.beta.parts().iter().enumerate() {
            out.extend(std::iter::repeat_n(k + 1, p));
        }
        out
    }
}

pub fn runs(t: &Tableau) -> RunDecomposition {
    let beta = t.descent_composition();
    let pos = t.positions();
    let order = t.reading_order();
    let rank: std::collections::HashMap<Cell, usize> =
        order.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut runs = Vec::with_capacity(beta.len());
    let mut next = 1;
    for &p in beta.parts() {
        let mut cells: Vec<Cell> = (next..next + p).map(|v| pos[v]).collect();
        cells.sort_by_key(|c| rank[c]);
        runs.push(cells);
        next += p;
    }
    RunDecomposition { runs, beta }
}

/// Restriction of `t` to the values of its first `j` runs.
pub fn first_j_runs(t: &Tableau, j: usize) -> Result<Tableau> {
    let bounds = runs(t).boundaries();
    if j > bounds.len() {
        return Err(Error::IndexOutOfRange {
            op: "first_j_runs",
            index: j,
            n: t.size(),
        });
    }
    let m = if j == 0 { 0 } else { bounds[j - 1] };
    Ok(restrict_to(t, m))
}

/// Cells holding values `<= m`. Only meaningful when those cells form a
/// shape of the same flavor, as they do for SYT.
pub fn restrict_to(t: &Tableau, m: usize) -> Tableau {
    let rows: Vec<Vec<usize>> = t
        .rows
        .iter()
        .map(|r| r.iter().copied().filter(|&v| v <= m).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    Tableau::from_rows_unchecked(t.flavor, rows)
}

/// Rows of the filling that writes the run index into each cell.
pub fn uyt_rows(t: &Tableau) -> Vec<Vec<usize>> {
    let run_of = runs(t).run_of_value();
    t.rows
        .iter()
        .map(|r| r.iter().map(|&v| run_of[v]).collect())
        .collect()
}

/// Cells weakly below `cell` in its column together with cells weakly above
/// `cell` in the column to its left.
pub fn pistol_from(shape: &Composition, cell: Cell) -> BTreeSet<Cell> {
    let (r, c) = cell;
    let has = |(row, col): Cell| {
        row >= 1 && row <= shape.len() && col >= 1 && col <= shape.parts()[row - 1]
    };
    let mut out = BTreeSet::new();
    if !has(cell) {
        return out;
    }
    out.extend((1..=r).map(|row| (row, c)).filter(|&x| has(x)));
    if c > 1 {
        out.extend(
            (r..=shape.len())
                .map(|row| (row, c - 1))
                .filter(|&x| has(x)),
        );
    }
    out
}

/// Whether `cells` lies inside some pistol of `shape`.
pub fn is_alpha_pistol(shape: &Composition, cells: &BTreeSet<Cell>) -> bool {
    if cells.is_empty() {
        return true;
    }
    shape.parts().iter().enumerate().any(|(r, &len)| {
        (1..=len).any(|c| {
            let p = pistol_from(shape, (r + 1, c));
            cells.is_subset(&p)
        })
    })
}

pub fn hook_length_count(l: &Partition) -> u128 {
    let n = l.weight() as u128;
    let conj = l.conjugate();
    let mut hooks: u128 = 1;
    for (r, &len) in l.parts().iter().enumerate() {
        for c in 1..=len {
            let arm = len - c;
            let leg = conj.part(c) - (r + 1);
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (1..=n).product::<u128>() / hooks
}

/// Place values one at a time into the next free cell of some row; `ready`
/// decides whether row `r` may take its next cell given the fill counts.
fn fill_rows(
    lens: &[usize],
    ascending: bool,
    ready: &dyn Fn(&[usize], usize) -> bool,
    emit: &mut dyn FnMut(&[Vec<usize>]),
) {
    #[allow(clippy::too_many_arguments)]
    fn go(
        lens: &[usize],
        filled: &mut Vec<usize>,
        rows: &mut Vec<Vec<usize>>,
        value: usize,
        n: usize,
        ascending: bool,
        ready: &dyn Fn(&[usize], usize) -> bool,
        emit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if rows.iter().map(Vec::len).sum::<usize>() == n {
            emit(rows);
            return;
        }
        for r in 0..lens.len() {
            if filled[r] < lens[r] && ready(filled, r) {
                filled[r] += 1;
                rows[r].push(value);
                let next = if ascending {
                    value + 1
                } else {
                    value.wrapping_sub(1)
                };
                go(lens, filled, rows, next, n, ascending, ready, emit);
                rows[r].pop();
                filled[r] -= 1;
            }
        }
    }
    let n: usize = lens.iter().sum();
    let mut filled = vec![0; lens.len()];
    let mut rows = vec![Vec::new(); lens.len()];
    let start = if ascending { 1 } else { n };
    go(
        lens,
        &mut filled,
        &mut rows,
        start,
        n,
        ascending,
        ready,
        emit,
    );
}

pub fn syt(l: &Partition) -> Vec<Tableau> {
    let lens = l.parts().to_vec();
    let mut out = Vec::new();
    let ready = |f: &[usize], r: usize| r == 0 || f[r - 1] > f[r];
    fill_rows(&lens, true, &ready, &mut |rows| {
        out.push(Tableau::from_rows_unchecked(Flavor::Syt, rows.to_vec()))
    });
    out.sort();
    out
}

pub fn srt(l: &Partition) -> Vec<Tableau> {
    let lens = l.parts().to_vec();
    let mut out = Vec::new();
    let ready = |f: &[usize], r: usize| r == 0 || f[r - 1] > f[r];
    fill_rows(&lens, false, &ready, &mut |rows| {
        out.push(Tableau::from_rows_unchecked(Flavor::Srt, rows.to_vec()))
    });
    out.sort();
    out
}

pub fn sst(l: &StrictPartition) -> Vec<Tableau> {
    let lens = l.parts().to_vec();
    let mut out = Vec::new();
    // Row r starts one column right of row r-1, so the next cell of row r sits
    // above cell f[r] + 2 of row r-1 (1-based within that row).
    let ready = |f: &[usize], r: usize| r == 0 || f[r - 1] >= f[r] + 2;
    fill_rows(&lens, true, &ready, &mut |rows| {
        out.push(Tableau::from_rows_unchecked(Flavor::Sst, rows.to_vec()))
    });
    out.sort();
    out
}

pub fn srct(a: &Composition) -> Vec<Tableau> {
    let lens = a.parts().to_vec();
    let mut out = Vec::new();
    // Largest values first: a row's first cell needs the first cell below it.
    let ready = |f: &[usize], r: usize| f[r] > 0 || r == 0 || f[r - 1] > 0;
    fill_rows(&lens, false, &ready, &mut |rows| {
        let t = Tableau::from_rows_unchecked(Flavor::Srct, rows.to_vec());
        if srct_triple_rule(&t) {
            out.push(t);
        }
    });
    out.sort();
    out
}

/// All standard fillings of the given row lengths for `flavor`, sorted by
/// reading word.
pub fn enumerate(flavor: Flavor, shape: &[usize]) -> Result<Vec<Tableau>> {
    Ok(match flavor {
        Flavor::Syt => syt(&Partition::new(shape.to_vec())?),
        Flavor::Srt => srt(&Partition::new(shape.to_vec())?),
        Flavor::Sst => sst(&StrictPartition::new(shape.to_vec())?),
        Flavor::Srct => srct(&Composition::new(shape.to_vec())?),
    })
}

/// Every standard Young tableau with `n` cells, grouped by shape in the
/// order of [`crate::combinat::partitions`].
pub fn syt_n(n: usize) -> Vec<Tableau> {
    crate::combinat::partitions(n)
        .iter()
        .flat_map(syt)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{partitions, permutations};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn srct_example() -> Tableau {
        // printed with values 2..=8; shifted down by one
        Tableau::new(Flavor::Srct, vec![vec![7, 4], vec![6, 5, 2], vec![3, 1]]).unwrap()
    }

    /// Every assignment of `[n]` to the cells, kept when valid.
    fn filter_all(flavor: Flavor, lens: &[usize]) -> Vec<Tableau> {
        let n: usize = lens.iter().sum();
        let mut out: Vec<Tableau> = permutations(n)
            .into_iter()
            .filter_map(|w| {
                let mut it = w.word().iter().copied();
                let rows = lens
                    .iter()
                    .map(|&l| it.by_ref().take(l).collect())
                    .collect();
                Tableau::new(flavor, rows).ok()
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn syt_examples() {
        let words: Vec<String> = syt(&p(&[4, 1]))
            .iter()
            .map(|t| t.reading_word().to_string())
            .collect();
        assert_eq!(words, ["21345", "31245", "41235", "51234"]);
        assert_eq!(syt(&p(&[6])).len(), 1);
    }

    #[test]
    fn syt_count_matches_hook_lengths() {
        for n in 0..=8 {
            for l in partitions(n) {
                assert_eq!(syt(&l).len() as u128, hook_length_count(&l), "{l}");
            }
        }
    }

    #[test]
    fn backtracking_matches_filter() {
        for n in 1..=6 {
            for l in partitions(n) {
                assert_eq!(syt(&l), filter_all(Flavor::Syt, l.parts()));
                assert_eq!(srt(&l), filter_all(Flavor::Srt, l.parts()));
            }
            for a in crate::combinat::compositions(n) {
                assert_eq!(srct(&a), filter_all(Flavor::Srct, a.parts()), "{a}");
            }
            for l in crate::combinat::strict_partitions(n) {
                assert_eq!(sst(&l), filter_all(Flavor::Sst, l.parts()));
            }
        }
    }

    #[test]
    fn srct_232_enumeration() {
        let a = Composition::new(vec![2, 3, 2]).unwrap();
        let all = srct(&a);
        assert_eq!(all, filter_all(Flavor::Srct, a.parts()));
        assert_eq!(all.len(), 7);
        assert!(all.contains(&srct_example()));
    }

    #[test]
    fn reading_word_examples() {
        let u = superstandard(&p(&[4, 4, 1]));
        assert_eq!(u.rows(), &[vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9]]);
        assert_eq!(row_reading_word(&u), perm("956781234"));
        let t = Tableau::new(
            Flavor::Syt,
            vec![vec![1, 2, 5, 7], vec![3, 4, 8, 9], vec![6]],
        )
        .unwrap();
        assert_eq!(row_reading_word(&t), perm("634891257"));
        assert_eq!(
            row_reading_word(&superstandard(&p(&[5]))),
            Permutation::identity(5)
        );
        assert_eq!(row_reading_word(&superstandard(&p(&[2, 1]))), perm("312"));
    }

    #[test]
    fn reverse_column_word_examples() {
        let t = Tableau::new(Flavor::Srt, vec![vec![8, 6, 3], vec![7, 5], vec![4, 2]]);
        // values {2..8} are not standard; check the reading order directly
        assert!(t.is_err());
        let t =
            Tableau::from_rows_unchecked(Flavor::Srt, vec![vec![8, 6, 3], vec![7, 5], vec![4, 2]]);
        let word: Vec<usize> = column_reading_order(&t)
            .into_iter()
            .map(|c| t.get(c).unwrap())
            .collect();
        assert_eq!(word, [3, 6, 5, 2, 8, 7, 4]);
        let one = Tableau::new(Flavor::Srt, vec![vec![1]]).unwrap();
        assert_eq!(reverse_column_word(&one), perm("1"));
        let col = Tableau::new(Flavor::Srt, vec![vec![4], vec![3], vec![2], vec![1]]).unwrap();
        assert_eq!(reverse_column_word(&col), perm("4321"));
    }

    #[test]
    fn bent_reading_word_examples() {
        // The printed tableaux use values 2..=8; compare reading orders.
        let left =
            Tableau::from_rows_unchecked(Flavor::Srct, vec![vec![8, 5], vec![7, 6, 3], vec![4, 2]]);
        let w: Vec<usize> = bent_reading_order(&left)
            .into_iter()
            .map(|c| left.get(c).unwrap())
            .collect();
        assert_eq!(w, [3, 2, 6, 5, 8, 7, 4]);
        let middle =
            Tableau::from_rows_unchecked(Flavor::Srct, vec![vec![8, 7], vec![6, 5, 3], vec![4, 2]]);
        let w: Vec<usize> = bent_reading_order(&middle)
            .into_iter()
            .map(|c| middle.get(c).unwrap())
            .collect();
        assert_eq!(w, [3, 2, 5, 7, 8, 6, 4]);
        let row = Tableau::new(Flavor::Srct, vec![vec![3, 2, 1]]).unwrap();
        assert_eq!(bent_reading_word(&row), perm("123"));
    }

    #[test]
    fn runs_examples() {
        let t = Tableau::new(
            Flavor::Syt,
            vec![vec![1, 2, 5, 7], vec![3, 4, 8, 9], vec![6]],
        )
        .unwrap();
        // four runs: {1,2} {3,4,5} {6,7} {8,9}
        assert_eq!(
            uyt_rows(&t),
            vec![vec![1, 1, 2, 3], vec![2, 2, 4, 4], vec![3]]
        );
        let u = superstandard(&p(&[4, 4, 1]));
        let d = runs(&u);
        assert_eq!(
            d.runs,
            vec![
                vec![(1, 1), (1, 2), (1, 3), (1, 4)],
                vec![(2, 1), (2, 2), (2, 3), (2, 4)],
                vec![(3, 1)]
            ]
        );
        let t = Tableau::new(
            Flavor::Syt,
            vec![vec![1, 5, 6, 7, 8, 9], vec![2], vec![3], vec![4]],
        )
        .unwrap();
        assert_eq!(row_reading_word(&t), perm("432156789"));
        assert_eq!(runs(&t).beta.parts(), &[1, 1, 1, 6]);
    }

    #[test]
    fn first_j_runs_are_syt() {
        for n in 0..=7 {
            for t in syt_n(n) {
                let k = runs(&t).beta.len();
                for j in 0..=k {
                    let r = first_j_runs(&t, j).unwrap();
                    assert!(r.is_valid(), "{t:?} j={j}");
                }
                assert!(first_j_runs(&t, k + 1).is_err());
            }
        }
    }

    #[test]
    fn descent_set_matches_cells() {
        // i is an inverse descent exactly when i+1 sits in a strictly higher row.
        for n in 0..=7 {
            for t in syt_n(n) {
                let pos = t.positions();
                let by_cells: Vec<usize> = (1..n).filter(|&i| pos[i + 1].0 > pos[i].0).collect();
                assert_eq!(t.inverse_descent_set(), by_cells);
            }
        }
    }

    #[test]
    fn pistol_examples() {
        let a = Composition::new(vec![5, 3, 4, 3]).unwrap();
        let marked: [&[Cell]; 3] = [
            &[(4, 3), (3, 3), (3, 4), (1, 4)],
            &[(4, 2), (3, 2), (2, 2), (2, 3), (1, 3)],
            &[(4, 1), (4, 2), (3, 2), (2, 2), (1, 2)],
        ];
        let sources = [(3, 4), (2, 3), (4, 2)];
        for (cells, src) in marked.iter().zip(sources) {
            let set: BTreeSet<Cell> = cells.iter().copied().collect();
            assert_eq!(pistol_from(&a, src), set);
            assert!(is_alpha_pistol(&a, &set));
        }
        assert!(is_alpha_pistol(&a, &[(2, 2)].into_iter().collect()));
    }

    #[test]
    fn pistols_of_22() {
        let a = Composition::new(vec![2, 2]).unwrap();
        let all: Vec<BTreeSet<Cell>> = [(1, 1), (1, 2), (2, 1), (2, 2)]
            .iter()
            .map(|&c| pistol_from(&a, c))
            .collect();
        assert_eq!(all[0], [(1, 1)].into_iter().collect());
        assert_eq!(all[1], [(1, 1), (1, 2), (2, 1)].into_iter().collect());
        assert_eq!(all[2], [(1, 1), (2, 1)].into_iter().collect());
        assert_eq!(all[3], [(1, 2), (2, 1), (2, 2)].into_iter().collect());
        assert!(is_alpha_pistol(&a, &[(1, 1), (1, 2)].into_iter().collect()));
        assert!(!is_alpha_pistol(
            &a,
            &[(1, 1), (2, 2)].into_iter().collect()
        ));
        assert!(!is_alpha_pistol(
            &a,
            &[(1, 2), (2, 2), (1, 1)].into_iter().collect()
        ));
    }

    #[test]
    fn invalid_shapes_rejected() {
        assert!(enumerate(Flavor::Sst, &[2, 2]).is_err());
        assert!(enumerate(Flavor::Syt, &[1, 2]).is_err());
        assert_eq!(enumerate(Flavor::Srct, &[1, 2]).unwrap().len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let t = superstandard(&p(&[2, 1]));
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"flavor":"SYT","shape":"2,1","rows":[[1,2],[3]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Tableau>(
            r#"{"flavor":"SYT","shape":"2,1","rows":[[2,1],[3]]}"#
        )
        .is_err());
    }
}

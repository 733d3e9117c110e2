//! Involutions on tableaux and permutations, and the sorting bijection between
//! reverse composition tableaux and reverse Young tableaux.
//!
//! All maps are pure. Tableau maps that act "via a reading word" rewrite the
//! word and refill the same cells.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::combinat::{flatten, flip, Composition, Partition, Permutation};
use crate::error::{Error, Result};
use crate::rsk::{dual_move_unchecked, swap_values};
use crate::tableau::{is_alpha_pistol, restrict_to, runs, superstandard, Cell, Flavor, Tableau};

/// Indices used by `slink` and `slink_star` on a tableau other than `U_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlinkContext {
    /// Smallest `j` whose first `j` runs are not superstandard.
    pub j: usize,
    /// Smallest `i >= 1` with `mu_{i+1} <= beta_j + i - j`.
    pub i: usize,
    /// Shape of the first `j` runs.
    pub mu: Partition,
}

fn expect_flavor(t: &Tableau, flavor: Flavor) -> Result<()> {
    if t.flavor() != flavor {
        return Err(Error::InvalidTableau(format!(
            "expected {flavor}, got {}",
            t.flavor()
        )));
    }
    Ok(())
}

fn check_range(op: &'static str, i: usize, lo: usize, hi: usize, n: usize) -> Result<()> {
    if i < lo || i > hi {
        return Err(Error::IndexOutOfRange { op, index: i, n });
    }
    Ok(())
}

pub fn slink_context(t: &Tableau) -> Option<SlinkContext> {
    let bounds = runs(t).boundaries();
    let beta = t.descent_composition();
    let j = (1..=bounds.len()).find(|&j| {
        let prefix = restrict_to(t, bounds[j - 1]);
        prefix.partition_shape().map(|l| superstandard(&l)) != Some(prefix)
    })?;
    let mu = restrict_to(t, bounds[j - 1]).partition_shape()?;
    let bj = beta.parts()[j - 1] as i64;
    let i = (1..)
        .find(|&i: &usize| (mu.part(i + 1) as i64) <= bj + i as i64 - j as i64)
        .unwrap();
    Some(SlinkContext { j, i, mu })
}

fn row_reading_key(&(r, c): &Cell) -> (Reverse<usize>, usize) {
    (Reverse(r), c)
}

/// Gives run `a` the first `keep` cells of runs `a` and `b` lying below row
/// `j`, and gives the rest to run `b`, then renumbers every run consecutively
/// in reading order. Cells are taken in reading order, except that cells
/// above row `a` come last since run `a` cannot reach them.
fn redistribute(t: &Tableau, a: usize, b: usize, j: usize, keep: usize) -> Tableau {
    let mut cells = runs(t).runs;
    let mut low: Vec<Cell> = cells[a - 1]
        .iter()
        .chain(&cells[b - 1])
        .copied()
        .filter(|&(r, _)| r < j)
        .collect();
    low.sort_by_key(|&(r, c)| (r > a, Reverse(r), c));
    let high: Vec<Cell> = cells[b - 1]
        .iter()
        .copied()
        .filter(|&(r, _)| r >= j)
        .collect();
    let rest = low.split_off(keep);
    cells[a - 1] = low;
    cells[b - 1] = high.into_iter().chain(rest).collect();
    relabel(t, cells)
}

fn relabel(t: &Tableau, mut cells: Vec<Vec<Cell>>) -> Tableau {
    let mut rows: Vec<Vec<usize>> = t.rows().iter().map(|r| vec![0; r.len()]).collect();
    let mut next = 1;
    for run in &mut cells {
        run.sort_by_key(row_reading_key);
        for &(r, c) in run.iter() {
            rows[r - 1][c - 1] = next;
            next += 1;
        }
    }
    let out = Tableau::from_rows_unchecked(Flavor::Syt, rows);
    debug_assert!(out.is_valid(), "{t:?} relabelled to {out:?}");
    out
}

pub fn slink(t: &Tableau) -> Tableau {
    match slink_context(t) {
        None => t.clone(),
        Some(ctx) => {
            let bj = t.descent_composition().parts()[ctx.j - 1];
            redistribute(t, ctx.j - 1, ctx.j, ctx.j, bj - 1)
        }
    }
}

pub fn slink_star(t: &Tableau) -> Tableau {
    match slink_context(t) {
        None => t.clone(),
        Some(SlinkContext { i, j, .. }) => {
            let bj = t.descent_composition().parts()[j - 1];
            redistribute(t, i, j, j, bj + i - j)
        }
    }
}

/// Windows of four consecutive values, written with `x` and `y` for the two
/// letters that get exchanged.
pub const RESTRICTED_DUAL_PATTERNS: [&str; 5] = ["x1y4", "x14y", "x41y", "x3y4", "x34y"];
pub const SHIFTED_DUAL_PATTERNS: [&str; 8] = [
    "1x2y", "x12y", "1x4y", "x14y", "4x1y", "x41y", "4x3y", "x43y",
];

/// The pair of window values to exchange, if `window` fits one of `patterns`.
pub fn match_pattern(patterns: &[&str], window: &[usize]) -> Option<(usize, usize)> {
    patterns.iter().find_map(|pat| {
        let mut x = None;
        let mut y = None;
        for (k, ch) in pat.chars().enumerate() {
            match ch {
                'x' => x = Some(window[k]),
                'y' => y = Some(window[k]),
                d => {
                    if d.to_digit(10) != Some(window[k] as u32) {
                        return None;
                    }
                }
            }
        }
        Some((x?, y?))
    })
}

fn windowed_swap(patterns: &[&str], lo: usize, p: &Permutation) -> Permutation {
    let window = flatten(p, lo, lo + 3);
    match match_pattern(patterns, window.word()) {
        Some((a, b)) => swap_values(p, lo - 1 + a, lo - 1 + b),
        None => p.clone(),
    }
}

/// `d_i^R` on a permutation, read off the four-letter window on `[i-1, i+2]`.
pub fn restricted_dual_move(i: usize, p: &Permutation) -> Result<Permutation> {
    check_range(
        "restricted_dual_move",
        i,
        2,
        p.len().saturating_sub(2),
        p.len(),
    )?;
    Ok(windowed_swap(&RESTRICTED_DUAL_PATTERNS, i - 1, p))
}

/// `d_i^R` straight from its definition: `d_i` unless `i+1` is an inverse
/// descent both before and after.
pub fn restricted_dual_move_by_guard(i: usize, p: &Permutation) -> Result<Permutation> {
    check_range(
        "restricted_dual_move",
        i,
        2,
        p.len().saturating_sub(2),
        p.len(),
    )?;
    let d = dual_move_unchecked(i, p);
    let blocked =
        p.inverse_descent_set().contains(&(i + 1)) && d.inverse_descent_set().contains(&(i + 1));
    Ok(if blocked { p.clone() } else { d })
}

pub fn restricted_dual_move_tableau(i: usize, t: &Tableau) -> Result<Tableau> {
    Ok(t.refill(&restricted_dual_move(i, &t.reading_word())?))
}

/// `d_i^R` applied to the flip of the row reading word of a shifted tableau.
pub fn restricted_dual_move_flipped(i: usize, t: &Tableau) -> Result<Tableau> {
    let moved = restricted_dual_move(i, &flip(&t.reading_word()))?;
    Ok(t.refill(&flip(&moved)))
}

/// `tilde d_i`: cycles `i-1, i, i+1` unless `i` sits between the other two.
pub fn cyclic_move(i: usize, p: &Permutation) -> Result<Permutation> {
    check_range("cyclic_move", i, 2, p.len().saturating_sub(1), p.len())?;
    Ok(cyclic_move_unchecked(i, p))
}

fn cyclic_move_unchecked(i: usize, p: &Permutation) -> Permutation {
    // old window value -> new window value
    let image: [usize; 3] = match flatten(p, i - 1, i + 1).word() {
        [2, 1, 3] | [3, 1, 2] => [3, 1, 2],
        [2, 3, 1] | [1, 3, 2] => [2, 3, 1],
        _ => return p.clone(),
    };
    Permutation::new(
        p.word()
            .iter()
            .map(|&v| {
                if v + 1 >= i && v <= i + 1 {
                    i - 2 + image[v + 1 - i]
                } else {
                    v
                }
            })
            .collect(),
    )
    .expect("cycling three values keeps a permutation")
}

fn first_column_split(t: &Tableau, i: usize) -> bool {
    let pos = t.positions();
    let cols: Vec<usize> = (i - 1..=i + 1).map(|v| pos[v].1).collect();
    cols.iter().filter(|&&c| c == 1).count() == 2 && cols.iter().filter(|&&c| c == 2).count() == 1
}

/// `D_i^Q` on a standard reverse composition tableau.
pub fn quasi_dual_move_srct(i: usize, t: &Tableau) -> Result<Tableau> {
    expect_flavor(t, Flavor::Srct)?;
    check_range(
        "quasi_dual_move_srct",
        i,
        2,
        t.size().saturating_sub(1),
        t.size(),
    )?;
    if first_column_split(t, i) {
        return Ok(t.clone());
    }
    let pos = t.positions();
    let triple: BTreeSet<Cell> = (i - 1..=i + 1).map(|v| pos[v]).collect();
    let w = t.reading_word();
    let moved = if is_alpha_pistol(&t.shape(), &triple) {
        cyclic_move_unchecked(i, &w)
    } else {
        dual_move_unchecked(i, &w)
    };
    Ok(t.refill(&moved))
}

/// `d_i^Q` on a standard reverse tableau.
pub fn quasi_dual_move_srt(i: usize, t: &Tableau) -> Result<Tableau> {
    expect_flavor(t, Flavor::Srt)?;
    check_range(
        "quasi_dual_move_srt",
        i,
        2,
        t.size().saturating_sub(1),
        t.size(),
    )?;
    if first_column_split(t, i) {
        return Ok(t.clone());
    }
    Ok(t.refill(&dual_move_unchecked(i, &t.reading_word())))
}

/// `h_i`, exchanging two letters of the window on `[i, i+3]`. The identity
/// when `n <= 3`.
pub fn shifted_dual_move(i: usize, p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n <= 3 {
        check_range("shifted_dual_move", i, 1, 1, n)?;
        return Ok(p.clone());
    }
    check_range("shifted_dual_move", i, 1, n - 3, n)?;
    Ok(windowed_swap(&SHIFTED_DUAL_PATTERNS, i, p))
}

pub fn shifted_dual_move_tableau(i: usize, t: &Tableau) -> Result<Tableau> {
    Ok(t.refill(&shifted_dual_move(i, &t.reading_word())?))
}

/// Sort every column to decrease upward and push the cells down.
pub fn mason_rho(t: &Tableau) -> Result<Tableau> {
    expect_flavor(t, Flavor::Srct)?;
    let height = t.rows().len();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); height];
    for c in 1..=t.width() {
        let mut col = t.column(c);
        col.sort_unstable_by(|a, b| b.cmp(a));
        for (r, v) in col.into_iter().enumerate() {
            rows[r].push(v);
        }
    }
    Ok(Tableau::from_rows_unchecked(Flavor::Srt, rows))
}

/// Rebuild the reverse composition tableau column by column: the first column
/// keeps its values, then each later value, largest first, goes right of the
/// highest open cell holding something larger.
pub fn mason_rho_inverse(s: &Tableau, alpha: &Composition) -> Result<Tableau> {
    expect_flavor(s, Flavor::Srt)?;
    let not_in_image = || {
        Error::NotInImage(format!(
            "{s:?} is not the image of an SRCT of shape {alpha}"
        ))
    };
    let first = s.column(1);
    let mut rows: Vec<Vec<usize>> = first.iter().map(|&v| vec![v]).collect();
    for c in 2..=s.width() {
        let mut col = s.column(c);
        col.sort_unstable_by(|a, b| b.cmp(a));
        for x in col {
            let r = (0..rows.len())
                .rev()
                .find(|&r| rows[r].len() == c - 1 && rows[r][c - 2] > x)
                .ok_or_else(not_in_image)?;
            rows[r].push(x);
        }
    }
    let t = Tableau::from_rows_unchecked(Flavor::Srct, rows);
    if t.shape() != *alpha || !t.is_valid() || mason_rho(&t)? != *s {
        return Err(not_in_image());
    }
    Ok(t)
}

/// The image of `SRCT(alpha)` under `mason_rho`, sorted.
pub fn mason_image(alpha: &Composition) -> Vec<Tableau> {
    let mut out: Vec<Tableau> = crate::tableau::srct(alpha)
        .iter()
        .map(|t| mason_rho(t).expect("srct yields SRCT tableaux"))
        .collect();
    out.sort();
    out
}

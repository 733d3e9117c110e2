//! Row-insertion RSK, elementary dual equivalences and Knuth moves.

use serde::{Deserialize, Serialize};

use crate::combinat::{flatten, Permutation};
use crate::error::{Error, Result};
use crate::tableau::{Flavor, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RskPair {
    pub insertion: Tableau,
    pub recording: Tableau,
}

pub fn rsk(p: &Permutation) -> RskPair {
    let mut prows: Vec<Vec<usize>> = Vec::new();
    let mut qrows: Vec<Vec<usize>> = Vec::new();
    for (k, &v) in p.word().iter().enumerate() {
        let mut x = v;
        let mut r = 0;
        loop {
            if r == prows.len() {
                prows.push(vec![x]);
                qrows.push(vec![k + 1]);
                break;
            }
            let row = &mut prows[r];
            match row.iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut row[c], x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    qrows[r].push(k + 1);
                    break;
                }
            }
        }
    }
    RskPair {
        insertion: Tableau::from_rows_unchecked(Flavor::Syt, prows),
        recording: Tableau::from_rows_unchecked(Flavor::Syt, qrows),
    }
}

pub fn insertion_tableau(p: &Permutation) -> Tableau {
    rsk(p).insertion
}

pub fn recording_tableau(p: &Permutation) -> Tableau {
    rsk(p).recording
}

/// Reverse row bumping, removing the cell of `n, n-1, ...` in the recording tableau.
pub fn rsk_inverse(pair: &RskPair) -> Result<Permutation> {
    let (p, q) = (&pair.insertion, &pair.recording);
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "insertion shape {} vs recording shape {}",
            p.shape(),
            q.shape()
        )));
    }
    if p.flavor() != Flavor::Syt || q.flavor() != Flavor::Syt || !p.is_valid() || !q.is_valid() {
        return Err(Error::InvalidTableau(
            "both tableaux must be standard Young tableaux".into(),
        ));
    }
    let n = p.size();
    let qpos = q.positions();
    let mut rows: Vec<Vec<usize>> = p.rows().to_vec();
    let mut word = vec![0; n];
    for m in (1..=n).rev() {
        let (r, c) = qpos[m];
        debug_assert_eq!(rows[r - 1].len(), c);
        let mut x = rows[r - 1].pop().unwrap();
        for row in rows[..r - 1].iter_mut().rev() {
            let c = row.iter().rposition(|&y| y < x).unwrap();
            x = std::mem::replace(&mut row[c], x);
        }
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        word[m - 1] = x;
    }
    Ok(Permutation::from_vec_unchecked(word))
}

fn check_index(op: &'static str, i: usize, n: usize) -> Result<()> {
    if i < 2 || i + 1 > n {
        return Err(Error::IndexOutOfRange { op, index: i, n });
    }
    Ok(())
}

/// `d_i` on a word: when `i-1` (resp. `i+1`) sits between the other two
/// values, swap those two. Identity when `i` is in the middle.
pub fn dual_move(i: usize, p: &Permutation) -> Result<Permutation> {
    check_index("dual_move", i, p.len())?;
    Ok(dual_move_unchecked(i, p))
}

pub(crate) fn dual_move_unchecked(i: usize, p: &Permutation) -> Permutation {
    let window = flatten(p, i - 1, i + 1);
    let (a, b) = match window.word() {
        [_, 1, _] => (i, i + 1),
        [_, 3, _] => (i - 1, i),
        _ => return p.clone(),
    };
    swap_values(p, a, b)
}

pub(crate) fn swap_values(p: &Permutation, a: usize, b: usize) -> Permutation {
    Permutation::from_vec_unchecked(
        p.word()
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect(),
    )
}

/// `K_i(p) = d_i(p^{-1})^{-1}`.
pub fn knuth_move(i: usize, p: &Permutation) -> Result<Permutation> {
    check_index("knuth_move", i, p.len())?;
    Ok(dual_move_unchecked(i, &p.inverse()).inverse())
}

/// `d_i` on a tableau, through its reading word.
pub fn dual_move_tableau(i: usize, t: &Tableau) -> Result<Tableau> {
    Ok(t.refill(&dual_move(i, &t.reading_word())?))
}

/// The permutation with insertion tableau `f(P(p))` and recording tableau `Q(p)`.
pub fn act_via_insertion<F>(f: F, p: &Permutation) -> Result<Permutation>
where
    F: FnOnce(&Tableau) -> Result<Tableau>,
{
    let RskPair {
        insertion,
        recording,
    } = rsk(p);
    let image = f(&insertion)?;
    if image.shape() != insertion.shape() {
        return Err(Error::ShapeMismatch(format!(
            "tableau map changed shape {} to {}",
            insertion.shape(),
            image.shape()
        )));
    }
    rsk_inverse(&RskPair {
        insertion: image,
        recording,
    })
}

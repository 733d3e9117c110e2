//! Partitions, compositions, permutations and the word-level statistics
//! shared by every other module.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

macro_rules! string_serde {
    ($ty:ty) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

/// A finite sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The composition of `n` whose partial sums are the elements of `set`.
    pub fn from_descent_set(set: &[usize], n: usize) -> Self {
        let mut prev = 0;
        let mut parts = Vec::with_capacity(set.len() + 1);
        let sorted: BTreeSet<usize> = set.iter().copied().filter(|&d| d >= 1 && d < n).collect();
        for d in sorted.into_iter().chain(std::iter::once(n)) {
            if d > prev {
                parts.push(d - prev);
            }
            prev = d;
        }
        Composition(parts)
    }

    /// Partial sums of all but the last part, as a subset of `[n-1]`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Bit `d - 1` is set for every partial sum `d`.
    pub fn descent_mask(&self) -> u64 {
        self.descent_set()
            .into_iter()
            .fold(0u64, |m, d| m | (1u64 << (d - 1)))
    }

    pub fn from_descent_mask(mask: u64, n: usize) -> Self {
        let set: Vec<usize> = (1..n).filter(|d| mask >> (d - 1) & 1 == 1).collect();
        Self::from_descent_set(&set, n)
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_list(s)?)
    }
}

string_serde!(Composition);

/// A weakly decreasing composition.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` counting from 1; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

string_serde!(Partition);

/// A strictly decreasing partition; indexes shifted shapes.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidStrictPartition(parts));
        }
        Ok(StrictPartition(Partition(parts)))
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_list(s)?)
    }
}

string_serde!(StrictPartition);

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(word));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    /// Callers guarantee `word` is a bijection on `[n]`.
    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok(), "{word:?}");
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `positions()[v]` is the 0-based position of value `v`; index 0 unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len() + 1];
        for (k, &v) in self.0.iter().enumerate() {
            pos[v] = k;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation(inv)
    }

    pub fn inverse_descent_set(&self) -> Vec<usize> {
        inverse_descent_set(self)
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition(self)
    }

    pub fn inverse_descent_mask(&self) -> u64 {
        let pos = self.positions();
        (1..self.0.len())
            .filter(|&i| pos[i] > pos[i + 1])
            .fold(0u64, |m, i| m | (1u64 << (i - 1)))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write_list(f, &self.0)
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word = if s.contains(',') {
            parse_list(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

string_serde!(Permutation);

/// `{ i in [n-1] : i occurs after i+1 }`, sorted.
pub fn inverse_descent_set(p: &Permutation) -> Vec<usize> {
    let pos = p.positions();
    (1..p.len()).filter(|&i| pos[i] > pos[i + 1]).collect()
}

pub fn descent_composition(p: &Permutation) -> Composition {
    Composition::from_descent_set(&inverse_descent_set(p), p.len())
}

/// Values of `p` inside `[a, b]`, renumbered order-isomorphically to `1..=count`.
pub fn flatten(p: &Permutation, a: usize, b: usize) -> Permutation {
    let sub: Vec<usize> = p.0.iter().copied().filter(|&v| v >= a && v <= b).collect();
    standardize_distinct(&sub)
}

/// Replace distinct values by their ranks.
pub(crate) fn standardize_distinct(values: &[usize]) -> Permutation {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Permutation(
        values
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect(),
    )
}

pub fn reverse(p: &Permutation) -> Permutation {
    Permutation(p.0.iter().rev().copied().collect())
}

pub fn flip(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation(p.0.iter().rev().map(|&v| n + 1 - v).collect())
}

/// A composition Schur function straightened to zero or a signed Schur function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SignedSchur {
    Zero,
    Term { sign: i8, shape: Partition },
}

impl SignedSchur {
    pub fn sign(&self) -> i64 {
        match self {
            SignedSchur::Zero => 0,
            SignedSchur::Term { sign, .. } => *sign as i64,
        }
    }

    pub fn shape(&self) -> Option<&Partition> {
        match self {
            SignedSchur::Zero => None,
            SignedSchur::Term { shape, .. } => Some(shape),
        }
    }

    pub fn negate(&self) -> SignedSchur {
        match self {
            SignedSchur::Zero => SignedSchur::Zero,
            SignedSchur::Term { sign, shape } => SignedSchur::Term {
                sign: -sign,
                shape: shape.clone(),
            },
        }
    }
}

/// Straighten `s_a`. With `v_i = a_i - i`, the result is zero when `v` has a
/// repeated value; otherwise the shape is `sorted(v)_i + i` and the sign is the
/// parity of the sorting permutation.
pub fn slinky(a: &Composition) -> SignedSchur {
    let v: Vec<i64> =
        a.0.iter()
            .enumerate()
            .map(|(k, &p)| p as i64 - (k as i64 + 1))
            .collect();
    let mut inversions = 0usize;
    for x in 0..v.len() {
        for y in x + 1..v.len() {
            match v[x].cmp(&v[y]) {
                std::cmp::Ordering::Equal => return SignedSchur::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = v;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let shape = sorted
        .iter()
        .enumerate()
        .map(|(k, &x)| (x + k as i64 + 1) as usize)
        .collect();
    SignedSchur::Term {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        shape: Partition(shape),
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(cur.clone())];
    while let Some(k) = (0..n.saturating_sub(1))
        .rev()
        .find(|&k| cur[k] < cur[k + 1])
    {
        let l = (k + 1..n).rev().find(|&l| cur[l] > cur[k]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
        out.push(Permutation(cur.clone()));
    }
    out
}

/// All compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    let mut out: Vec<Composition> = (0..1u64 << (n - 1))
        .map(|m| Composition::from_descent_mask(m, n))
        .collect();
    out.sort();
    out
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: usize) -> Vec<StrictPartition> {
    partitions(n)
        .into_iter()
        .filter(Partition::is_strict)
        .map(StrictPartition)
        .collect()
}

/// Words with `l_i` copies of `i` such that every suffix holds at least as
/// many `i`s as `i+1`s. Lexicographic order.
pub fn yamanouchi_words(l: &Partition) -> Vec<Vec<usize>> {
    fn go(
        remaining: &mut [usize],
        counts: &mut [usize],
        suffix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining.iter().all(|&r| r == 0) {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for letter in 0..remaining.len() {
            if remaining[letter] == 0 || (letter > 0 && counts[letter] + 1 > counts[letter - 1]) {
                continue;
            }
            remaining[letter] -= 1;
            counts[letter] += 1;
            suffix.push(letter + 1);
            go(remaining, counts, suffix, out);
            suffix.pop();
            counts[letter] -= 1;
            remaining[letter] += 1;
        }
    }
    let mut remaining = l.0.clone();
    let mut counts = vec![0; remaining.len()];
    let mut out = Vec::new();
    go(&mut remaining, &mut counts, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Smaller letters get smaller values; among equal letters the earlier one is smaller.
pub fn standardize(word: &[usize]) -> Permutation {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&k| (word[k], k));
    let mut out = vec![0; word.len()];
    for (rank, k) in idx.into_iter().enumerate() {
        out[k] = rank + 1;
    }
    Permutation(out)
}

pub fn standardized_yamanouchi(l: &Partition) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = yamanouchi_words(l).iter().map(|w| standardize(w)).collect();
    out.sort();
    out
}

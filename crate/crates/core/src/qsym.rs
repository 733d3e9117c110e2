//! Quasisymmetric functions of fixed degree in the fundamental basis, Schur
//! expansions of symmetric ones, and exact linear algebra over families of
//! class generating functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinat::{
    compositions, flip, partitions, reverse, slinky, Composition, Partition, Permutation,
};
use crate::equivalence::{all_classes, EquivClass, GeneratorSet, Relation};
use crate::error::{Error, Result};
use crate::operators::mason_image;
use crate::rsk::insertion_tableau;
use crate::tableau::{is_superstandard, srct, superstandard, syt, syt_n, Tableau};

/// A degree-`n` quasisymmetric function as integer coefficients on `F_a`,
/// stored densely by descent mask (bit `d-1` set when `d` is a descent).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QsymElement {
    degree: usize,
    coeffs: Vec<i64>,
}

fn dimension(n: usize) -> usize {
    1usize << n.saturating_sub(1)
}

impl QsymElement {
    pub fn zero(degree: usize) -> Self {
        QsymElement {
            degree,
            coeffs: vec![0; dimension(degree)],
        }
    }

    pub fn from_dense(degree: usize, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != dimension(degree) {
            return Err(Error::ShapeMismatch(format!(
                "degree {degree} needs {} coefficients, got {}",
                dimension(degree),
                coeffs.len()
            )));
        }
        Ok(QsymElement { degree, coeffs })
    }

    pub fn fundamental(alpha: &Composition) -> Self {
        let mut q = Self::zero(alpha.weight());
        q.coeffs[alpha.descent_mask() as usize] = 1;
        q
    }

    /// `F` of the descent composition of a word.
    pub fn of_word(p: &Permutation) -> Self {
        let mut q = Self::zero(p.len());
        q.coeffs[p.inverse_descent_mask() as usize] = 1;
        q
    }

    pub fn of_tableau(t: &Tableau) -> Self {
        Self::of_word(&t.reading_word())
    }

    pub fn sum_of_words<'a>(n: usize, words: impl IntoIterator<Item = &'a Permutation>) -> Self {
        let mut q = Self::zero(n);
        for w in words {
            q.coeffs[w.inverse_descent_mask() as usize] += 1;
        }
        q
    }

    pub fn sum_of_tableaux<'a>(n: usize, tableaux: impl IntoIterator<Item = &'a Tableau>) -> Self {
        let mut q = Self::zero(n);
        for t in tableaux {
            q.coeffs[t.reading_word().inverse_descent_mask() as usize] += 1;
        }
        q
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients indexed by descent mask.
    pub fn dense(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: &Composition) -> i64 {
        if alpha.weight() != self.degree {
            return 0;
        }
        self.coeffs[alpha.descent_mask() as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Non-zero terms, compositions in lexicographic order.
    pub fn terms(&self) -> Vec<(Composition, i64)> {
        compositions(self.degree)
            .into_iter()
            .map(|a| {
                let c = self.coeffs[a.descent_mask() as usize];
                (a, c)
            })
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    /// Coefficients in the monomial basis: `F_a` is the sum of `M_b` over the
    /// refinements `b` of `a`, so `M_E` collects `F_D` for `D` inside `E`.
    pub fn monomial_dense(&self) -> Vec<i64> {
        let mut m = self.coeffs.clone();
        for bit in 0..self.degree.saturating_sub(1) {
            for mask in 0..m.len() {
                if mask & (1 << bit) != 0 {
                    m[mask] += m[mask ^ (1 << bit)];
                }
            }
        }
        m
    }

    pub fn to_monomial(&self) -> BTreeMap<Composition, i64> {
        let m = self.monomial_dense();
        compositions(self.degree)
            .into_iter()
            .filter_map(|a| {
                let c = m[a.descent_mask() as usize];
                (c != 0).then_some((a, c))
            })
            .collect()
    }

    /// Symmetric exactly when every `M_b` coefficient equals the one at the
    /// sorted rearrangement of `b`. The error names the first mismatch.
    pub fn check_symmetric(&self) -> Result<()> {
        let m = self.monomial_dense();
        for b in compositions(self.degree) {
            let sorted = b.sorted().as_composition();
            if m[b.descent_mask() as usize] != m[sorted.descent_mask() as usize] {
                return Err(Error::NotSymmetric {
                    left: sorted,
                    right: b,
                });
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// `F_D -> F_{D^c}`.
    pub fn omega(&self) -> Self {
        let full = self.coeffs.len() - 1;
        let mut coeffs = vec![0; self.coeffs.len()];
        for (mask, &c) in self.coeffs.iter().enumerate() {
            coeffs[full ^ mask] = c;
        }
        QsymElement {
            degree: self.degree,
            coeffs,
        }
    }

    fn check_degree(&self, other: &Self) {
        assert_eq!(
            self.degree, other.degree,
            "quasisymmetric functions of different degree"
        );
    }
}

impl AddAssign<&QsymElement> for QsymElement {
    fn add_assign(&mut self, rhs: &QsymElement) {
        self.check_degree(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Add for &QsymElement {
    type Output = QsymElement;
    fn add(self, rhs: &QsymElement) -> QsymElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &QsymElement {
    type Output = QsymElement;
    fn neg(self) -> QsymElement {
        self * -1
    }
}

impl Sub for &QsymElement {
    type Output = QsymElement;
    fn sub(self, rhs: &QsymElement) -> QsymElement {
        self + &(-rhs)
    }
}

impl Mul<i64> for &QsymElement {
    type Output = QsymElement;
    fn mul(self, k: i64) -> QsymElement {
        QsymElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl fmt::Display for QsymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (a, c)) in terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "F[{a}]")?;
        }
        Ok(())
    }
}

impl Serialize for QsymElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            composition: Composition,
            coeff: i64,
        }
        let terms: Vec<Term> = self
            .terms()
            .into_iter()
            .map(|(composition, coeff)| Term { composition, coeff })
            .collect();
        let mut st = s.serialize_struct("QsymElement", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", "fundamental")?;
        st.serialize_field("coeffs", &terms)?;
        st.end()
    }
}

/// Anything with a word whose inverse descents index a fundamental function.
pub trait HasWord {
    fn word_of(&self) -> Permutation;
}

impl HasWord for Permutation {
    fn word_of(&self) -> Permutation {
        self.clone()
    }
}

impl HasWord for Tableau {
    fn word_of(&self) -> Permutation {
        self.reading_word()
    }
}

pub fn fundamental_of<T: HasWord>(x: &T) -> QsymElement {
    QsymElement::of_word(&x.word_of())
}

/// `s_l` as the generating function of `SYT(l)`.
pub fn schur_function(l: &Partition) -> QsymElement {
    QsymElement::sum_of_tableaux(l.weight(), &syt(l))
}

/// Signed integer coefficients on Schur functions; zero entries are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new(degree: usize) -> Self {
        SchurExpansion {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, l: Partition, c: i64) {
        let e = self.coeffs.entry(l.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&l);
        }
    }

    pub fn single(l: Partition) -> Self {
        let mut out = Self::new(l.weight());
        out.add_term(l, 1);
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, l: &Partition) -> i64 {
        self.coeffs.get(l).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coeffs.iter().rev().map(|(l, &c)| (l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn conjugate(&self) -> Self {
        let mut out = Self::new(self.degree);
        for (l, &c) in &self.coeffs {
            out.add_term(l.conjugate(), c);
        }
        out
    }

    pub fn to_qsym(&self) -> QsymElement {
        let mut q = QsymElement::zero(self.degree);
        for (l, &c) in &self.coeffs {
            q += &(&schur_function(l) * c);
        }
        q
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "s[{l}]")?;
        }
        Ok(())
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coeff: i64,
        }
        let terms: Vec<Term> = self
            .terms()
            .map(|(partition, coeff)| Term { partition, coeff })
            .collect();
        let mut st = s.serialize_struct("SchurExpansion", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", "schur")?;
        st.serialize_field("coeffs", &terms)?;
        st.end()
    }
}

/// Number of semistandard tableaux of shape `shape` and content `content`,
/// by peeling off horizontal strips for the largest letter.
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    fn go(
        shape: Vec<usize>,
        content: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return u64::from(shape.iter().all(|&p| p == 0));
        };
        let key = (shape.clone(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        let mut inner = shape.clone();
        strips(&shape, 0, last, &mut inner, &mut |mu| {
            total += go(mu.to_vec(), rest, memo)
        });
        memo.insert(key, total);
        total
    }

    /// Every `mu` with `shape / mu` a horizontal strip of size `left`.
    fn strips(
        shape: &[usize],
        row: usize,
        left: usize,
        mu: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if row == shape.len() {
            if left == 0 {
                f(mu);
            }
            return;
        }
        let floor = shape.get(row + 1).copied().unwrap_or(0);
        for take in 0..=left.min(shape[row] - floor) {
            mu[row] = shape[row] - take;
            strips(shape, row + 1, left - take, mu, f);
        }
        mu[row] = shape[row];
    }

    if shape.weight() != content.iter().sum::<usize>() {
        return 0;
    }
    go(shape.parts().to_vec(), content, &mut HashMap::new())
}

/// Schur expansion of a symmetric function by unitriangularity of the Kostka
/// matrix: read `m_mu` coefficients and peel off `s_l` in decreasing order.
pub fn schur_expand(q: &QsymElement) -> Result<SchurExpansion> {
    q.check_symmetric()?;
    let m = q.monomial_dense();
    let shapes = partitions(q.degree());
    let mut out = SchurExpansion::new(q.degree());
    let mut found: Vec<(Partition, i64)> = Vec::new();
    for l in &shapes {
        let a = m[l.as_composition().descent_mask() as usize];
        let above: i64 = found
            .iter()
            .map(|(nu, c)| c * kostka(nu, l.parts()) as i64)
            .sum();
        let c = a - above;
        if c != 0 {
            found.push((l.clone(), c));
            out.add_term(l.clone(), c);
        }
    }
    Ok(out)
}

/// `sum_a c_a s_a` for `q = sum_a c_a F_a`, each `s_a` straightened to zero or
/// a signed Schur function. Meaningful when `q` is symmetric.
pub fn slinky_expand(q: &QsymElement) -> SchurExpansion {
    let mut out = SchurExpansion::new(q.degree());
    for (a, c) in q.terms() {
        let s = slinky(&a);
        if let Some(l) = s.shape() {
            out.add_term(l.clone(), c * s.sign());
        }
    }
    out
}

fn agree(label: &str, expected: &SchurExpansion, routes: &[(&str, SchurExpansion)]) -> Result<()> {
    for (name, e) in routes {
        if e != expected {
            return Err(Error::Inconsistent(format!(
                "{label}: {expected} but {name} gives {e}"
            )));
        }
    }
    Ok(())
}

/// Schur expansion of a union of tableau classes, read off from the
/// superstandard tableaux it contains and checked against the Kostka and
/// straightening routes.
pub fn schur_expand_tableau_union(classes: &[EquivClass<Tableau>]) -> Result<SchurExpansion> {
    let n = classes.first().map_or(0, |c| c.least().size());
    let members = classes.iter().flat_map(|c| c.members());
    let q = QsymElement::sum_of_tableaux(n, members.clone());
    q.check_symmetric()?;
    let mut by_count = SchurExpansion::new(n);
    for t in members.filter(|t| is_superstandard(t)) {
        by_count.add_term(t.partition_shape().unwrap(), 1);
    }
    agree(
        "superstandard count",
        &by_count,
        &[("kostka", schur_expand(&q)?), ("slinky", slinky_expand(&q))],
    )?;
    Ok(by_count)
}

fn yamanouchi_count<'a>(
    n: usize,
    words: impl Iterator<Item = &'a Permutation>,
    map: impl Fn(&Permutation) -> Permutation,
) -> SchurExpansion {
    let mut out = SchurExpansion::new(n);
    for p in words {
        let t = insertion_tableau(&map(p));
        if is_superstandard(&t) {
            out.add_term(t.partition_shape().unwrap(), 1);
        }
    }
    out
}

/// Schur expansion of a union of permutation classes under `equiv0..2`,
/// counting members whose insertion tableau is superstandard.
pub fn schur_expand_permutation_union(
    classes: &[EquivClass<Permutation>],
) -> Result<SchurExpansion> {
    if classes.iter().any(|c| c.relation == Relation::Shifted) {
        return shifted_expansions(classes).map(|(by_flip, _)| by_flip);
    }
    let n = classes.first().map_or(0, |c| c.least().len());
    let members = classes.iter().flat_map(|c| c.members());
    let q = QsymElement::sum_of_words(n, members.clone());
    q.check_symmetric()?;
    let by_count = yamanouchi_count(n, members, Permutation::clone);
    agree(
        "Yamanouchi count",
        &by_count,
        &[("kostka", schur_expand(&q)?), ("slinky", slinky_expand(&q))],
    )?;
    Ok(by_count)
}

/// For a union of shifted dual classes: the expansion from flipped Yamanouchi
/// words and the one from reversed Yamanouchi words (coefficients moved to
/// conjugate shapes). Both are checked against the Kostka route.
pub fn shifted_expansions(
    classes: &[EquivClass<Permutation>],
) -> Result<(SchurExpansion, SchurExpansion)> {
    let n = classes.first().map_or(0, |c| c.least().len());
    let members = classes.iter().flat_map(|c| c.members());
    let q = QsymElement::sum_of_words(n, members.clone());
    q.check_symmetric()?;
    let by_flip = yamanouchi_count(n, members.clone(), flip);
    let by_reverse = yamanouchi_count(n, members, reverse).conjugate();
    agree(
        "flipped Yamanouchi count",
        &by_flip,
        &[
            ("reversed Yamanouchi count", by_reverse.clone()),
            ("kostka", schur_expand(&q)?),
        ],
    )?;
    Ok((by_flip, by_reverse))
}

/// Class unions whose Schur expansion can be read off by counting.
pub trait ClassUnion: Sized {
    fn schur_expand_union(classes: &[Self]) -> Result<SchurExpansion>;
}

impl ClassUnion for EquivClass<Tableau> {
    fn schur_expand_union(classes: &[Self]) -> Result<SchurExpansion> {
        schur_expand_tableau_union(classes)
    }
}

impl ClassUnion for EquivClass<Permutation> {
    fn schur_expand_union(classes: &[Self]) -> Result<SchurExpansion> {
        schur_expand_permutation_union(classes)
    }
}

pub fn schur_expand_class_union<C: ClassUnion>(classes: &[C]) -> Result<SchurExpansion> {
    C::schur_expand_union(classes)
}

/// Quasisymmetric Schur function: bent-word descents over `SRCT(alpha)`.
pub fn quasi_schur(alpha: &Composition) -> QsymElement {
    QsymElement::sum_of_tableaux(alpha.weight(), &srct(alpha))
}

/// The same function summed over the column-sorted images.
pub fn quasi_schur_via_image(alpha: &Composition) -> QsymElement {
    QsymElement::sum_of_tableaux(alpha.weight(), &mason_image(alpha))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FkMember {
    pub function: QsymElement,
    /// Reading words of the least tableau of each class with this function.
    pub representatives: Vec<String>,
    /// Total number of tableaux over those classes.
    pub tableaux: usize,
}

/// The distinct generating functions of the classes of a relation on `SYT(n)`.
/// Classes sharing a function are merged into one member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FkFamily {
    pub relation: Relation,
    pub degree: usize,
    pub classes: usize,
    pub members: Vec<FkMember>,
}

impl FkFamily {
    pub fn functions(&self) -> Vec<QsymElement> {
        self.members.iter().map(|m| m.function.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn fk_family(relation: Relation, n: usize) -> Result<FkFamily> {
    let classes = all_classes(&syt_n(n), &GeneratorSet::for_tableaux(relation, n)?)?;
    let mut members: Vec<FkMember> = Vec::new();
    let mut index: HashMap<QsymElement, usize> = HashMap::new();
    for c in &classes {
        let function = QsymElement::sum_of_tableaux(n, c.members());
        let k = *index.entry(function.clone()).or_insert_with(|| {
            members.push(FkMember {
                function,
                representatives: Vec::new(),
                tableaux: 0,
            });
            members.len() - 1
        });
        members[k]
            .representatives
            .push(c.least().reading_word().to_string());
        members[k].tableaux += c.len();
    }
    Ok(FkFamily {
        relation,
        degree: n,
        classes: classes.len(),
        members,
    })
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
pub fn exact_rank(vectors: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in rank + 1..rows.len() {
            for c in col + 1..width {
                let v = (&rows[rank][col] * &rows[r][c] - &rows[r][col] * &rows[rank][c]) / &prev;
                rows[r][c] = v;
            }
            rows[r][col] = BigInt::zero();
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn family_rank(family: &[QsymElement]) -> usize {
    let vectors: Vec<Vec<i64>> = family.iter().map(|q| q.dense().to_vec()).collect();
    exact_rank(&vectors)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `q = sum_k c_k f_k` with every `c_k` a nonnegative integer.
    NonNegative(Vec<u64>),
    /// Some exact solution; no nonnegative integral one was found.
    Rational(Vec<BigRational>),
}

const SEARCH_BUDGET: usize = 1_000_000;

/// Writes `q` over `family`, preferring a nonnegative integer combination.
pub fn decompose_in_fk(q: &QsymElement, family: &[QsymElement]) -> Result<Decomposition> {
    if let Some(k) = family.iter().position(|f| f == q) {
        let mut unit = vec![0; family.len()];
        unit[k] = 1;
        return Ok(Decomposition::NonNegative(unit));
    }
    let mut counts = vec![0; family.len()];
    let mut budget = SEARCH_BUDGET;
    if q.dense().iter().all(|&c| c >= 0)
        && search(q.dense().to_vec(), family, &mut counts, &mut budget)
    {
        return Ok(Decomposition::NonNegative(counts));
    }
    rational_solve(q, family).map(Decomposition::Rational)
}

/// Depth-first search for a multiset of family members summing to `residual`:
/// some member must cover the lowest non-zero coordinate.
fn search(
    residual: Vec<i64>,
    family: &[QsymElement],
    counts: &mut [u64],
    budget: &mut usize,
) -> bool {
    let Some(pivot) = residual.iter().position(|&c| c != 0) else {
        return true;
    };
    for k in 0..family.len() {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let f = family[k].dense();
        if f[pivot] == 0 || f.iter().zip(&residual).any(|(a, b)| a > b) {
            continue;
        }
        counts[k] += 1;
        let next: Vec<i64> = residual.iter().zip(f).map(|(a, b)| a - b).collect();
        if search(next, family, counts, budget) {
            return true;
        }
        counts[k] -= 1;
    }
    false
}

/// Gauss-Jordan over the rationals on `[family | q]`. Errors with a linear
/// functional that kills the family but not `q` when there is no solution.
fn rational_solve(q: &QsymElement, family: &[QsymElement]) -> Result<Vec<BigRational>> {
    let dim = q.dense().len();
    let cols = family.len();
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    // rows: coordinates; columns: family members, then q, then an identity block
    let mut m: Vec<Vec<BigRational>> = (0..dim)
        .map(|r| {
            let mut row: Vec<BigRational> = family.iter().map(|f| rat(f.dense()[r])).collect();
            row.push(rat(q.dense()[r]));
            row.extend((0..dim).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if let Some(r) = (rank..dim).find(|&r| !m[r][cols].is_zero()) {
        let functional: Vec<String> = compositions(q.degree())
            .iter()
            .filter_map(|a| {
                let c = &m[r][cols + 1 + a.descent_mask() as usize];
                (!c.is_zero()).then(|| format!("{c}*[{a}]"))
            })
            .collect();
        return Err(Error::NotInSpan(format!(
            "functional {} vanishes on the family but is {} on the input",
            functional.join(" + "),
            m[r][cols]
        )));
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Ok(x)
}

pub fn is_nonnegative_integral(coeffs: &[BigRational]) -> bool {
    coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
}

/// Sum of the `F_{ID(T)}` over a single tableau class, as a convenience.
pub fn class_function(class: &EquivClass<Tableau>) -> QsymElement {
    QsymElement::sum_of_tableaux(class.least().size(), class.members())
}

pub fn superstandard_function(l: &Partition) -> QsymElement {
    QsymElement::of_tableau(&superstandard(l))
}

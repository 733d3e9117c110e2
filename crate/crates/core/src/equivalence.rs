//! Equivalence relations generated by families of moves, computed by graph
//! closure over an explicit carrier.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::operators::{
    quasi_dual_move_srct, quasi_dual_move_srt, restricted_dual_move, restricted_dual_move_tableau,
    shifted_dual_move, shifted_dual_move_tableau, slink, slink_star,
};
use crate::rsk::{
    act_via_insertion, dual_move, dual_move_tableau, knuth_move, rsk, rsk_inverse, RskPair,
};
use crate::tableau::{syt, Flavor, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// Generated by `slink_star`.
    #[serde(rename = "equiv0")]
    Equiv0,
    /// Generated by `slink`.
    #[serde(rename = "equiv1")]
    Equiv1,
    /// Generated by the restricted dual moves `d_i^R`.
    #[serde(rename = "equiv2")]
    Equiv2,
    /// Generated by the elementary dual moves `d_i`.
    #[serde(rename = "dual")]
    Dual,
    /// Generated by the Knuth moves `K_i` (permutations only).
    #[serde(rename = "knuth")]
    Knuth,
    #[serde(rename = "quasiDualSRCT")]
    QuasiDualSrct,
    #[serde(rename = "quasiDualSRT")]
    QuasiDualSrt,
    /// `d_i^R` acting on reverse tableaux through the column word.
    #[serde(rename = "quasiDualSRT-restricted")]
    RestrictedSrt,
    /// Generated by the shifted dual moves `h_i`.
    #[serde(rename = "shifted")]
    Shifted,
}

impl Relation {
    pub const ALL: [Relation; 9] = [
        Relation::Equiv0,
        Relation::Equiv1,
        Relation::Equiv2,
        Relation::Dual,
        Relation::Knuth,
        Relation::QuasiDualSrct,
        Relation::QuasiDualSrt,
        Relation::RestrictedSrt,
        Relation::Shifted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Equiv0 => "equiv0",
            Relation::Equiv1 => "equiv1",
            Relation::Equiv2 => "equiv2",
            Relation::Dual => "dual",
            Relation::Knuth => "knuth",
            Relation::QuasiDualSrct => "quasiDualSRCT",
            Relation::QuasiDualSrt => "quasiDualSRT",
            Relation::RestrictedSrt => "quasiDualSRT-restricted",
            Relation::Shifted => "shifted",
        }
    }

    /// Index range of the generators for carriers of size `n`.
    pub fn indices(self, n: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Relation::Equiv0 | Relation::Equiv1 => 1..=1,
            Relation::Equiv2 | Relation::RestrictedSrt => 2..=n.saturating_sub(2),
            Relation::Dual | Relation::Knuth | Relation::QuasiDualSrct | Relation::QuasiDualSrt => {
                2..=n.saturating_sub(1)
            }
            Relation::Shifted => 1..=n.saturating_sub(3),
        }
    }

    fn move_label(self, i: usize) -> String {
        match self {
            Relation::Equiv0 => "slink*".into(),
            Relation::Equiv1 => "slink".into(),
            Relation::Equiv2 | Relation::RestrictedSrt => format!("dR_{i}"),
            Relation::Dual => format!("d_{i}"),
            Relation::Knuth => format!("K_{i}"),
            Relation::QuasiDualSrct => format!("DQ_{i}"),
            Relation::QuasiDualSrt => format!("dQ_{i}"),
            Relation::Shifted => format!("h_{i}"),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown relation {s:?}")))
    }
}

/// Elements that can live in a carrier: canonically ordered, with a short
/// text key (the reading word or one-line word).
pub trait Element: Clone + Ord + Hash + Send + Sync + fmt::Debug {
    fn key(&self) -> String;
}

impl Element for Permutation {
    fn key(&self) -> String {
        self.to_string()
    }
}

impl Element for Tableau {
    fn key(&self) -> String {
        self.reading_word().to_string()
    }
}

type MoveFn<T> = Box<dyn Fn(&T) -> Result<T> + Send + Sync>;
type CarrierFn<T> = Box<dyn Fn(&T) -> Result<Vec<T>> + Send + Sync>;
type ValidFn<T> = Box<dyn Fn(&T) -> bool + Send + Sync>;

pub struct Move<T> {
    pub label: String,
    pub index: usize,
    apply: MoveFn<T>,
}

impl<T> Move<T> {
    pub fn apply(&self, x: &T) -> Result<T> {
        (self.apply)(x)
    }
}

/// A named family of moves. When the moves are not involutions, closures
/// need the whole connected carrier, supplied by `carrier_of`.
pub struct GeneratorSet<T> {
    pub relation: Relation,
    pub moves: Vec<Move<T>>,
    pub involutive: bool,
    valid: ValidFn<T>,
    carrier_of: Option<CarrierFn<T>>,
}

impl<T: Element> GeneratorSet<T> {
    fn build<F>(relation: Relation, n: usize, valid: ValidFn<T>, f: F) -> Self
    where
        F: Fn(usize, &T) -> Result<T> + Send + Sync + Clone + 'static,
    {
        let moves = relation
            .indices(n)
            .map(|i| {
                let f = f.clone();
                Move {
                    label: relation.move_label(i),
                    index: i,
                    apply: Box::new(move |x: &T| f(i, x)),
                }
            })
            .collect();
        GeneratorSet {
            relation,
            moves,
            involutive: relation != Relation::Equiv1,
            valid,
            carrier_of: None,
        }
    }

    pub fn is_valid(&self, x: &T) -> bool {
        (self.valid)(x)
    }

    fn step(&self, m: &Move<T>, x: &T) -> Result<T> {
        let y = m.apply(x)?;
        if !self.is_valid(&y) {
            return Err(Error::LeftCarrier {
                relation: self.relation.name().into(),
                element: x.key(),
                index: m.index,
            });
        }
        Ok(y)
    }
}

impl GeneratorSet<Tableau> {
    /// Moves on tableaux of size `n`. The flavor is implied by the relation:
    /// SYT for `equiv0..2` and `dual`, SRCT and SRT for the quasi-dual
    /// relations, shifted for `shifted`.
    pub fn for_tableaux(relation: Relation, n: usize) -> Result<Self> {
        let valid: ValidFn<Tableau> = Box::new(Tableau::is_valid);
        Ok(match relation {
            Relation::Equiv0 => Self::build(relation, n, valid, |_, t| Ok(slink_star(t))),
            Relation::Equiv1 => {
                let mut g = Self::build(relation, n, valid, |_, t| Ok(slink(t)));
                g.carrier_of = Some(Box::new(|t: &Tableau| {
                    t.partition_shape()
                        .filter(|_| t.flavor() == Flavor::Syt)
                        .map(|l| syt(&l))
                        .ok_or_else(|| Error::InvalidTableau(format!("{t:?} is not an SYT")))
                }));
                g
            }
            Relation::Equiv2 | Relation::RestrictedSrt => {
                Self::build(relation, n, valid, restricted_dual_move_tableau)
            }
            Relation::Dual => Self::build(relation, n, valid, dual_move_tableau),
            Relation::QuasiDualSrct => Self::build(relation, n, valid, quasi_dual_move_srct),
            Relation::QuasiDualSrt => Self::build(relation, n, valid, quasi_dual_move_srt),
            Relation::Shifted => {
                if n <= 3 {
                    Self::build(relation, n, valid, |_, t| Ok(t.clone()))
                } else {
                    Self::build(relation, n, valid, shifted_dual_move_tableau)
                }
            }
            Relation::Knuth => {
                return Err(Error::Unsupported(
                    "Knuth moves act on permutations only".into(),
                ))
            }
        })
    }
}

impl GeneratorSet<Permutation> {
    /// Moves on `S_n`. `equiv0` and `equiv1` act through the insertion
    /// tableau and keep the recording tableau.
    pub fn for_permutations(relation: Relation, n: usize) -> Result<Self> {
        let valid: ValidFn<Permutation> = Box::new(move |p: &Permutation| p.len() == n);
        Ok(match relation {
            Relation::Equiv0 => Self::build(relation, n, valid, |_, p| {
                act_via_insertion(|t| Ok(slink_star(t)), p)
            }),
            Relation::Equiv1 => {
                let mut g = Self::build(relation, n, valid, |_, p| {
                    act_via_insertion(|t| Ok(slink(t)), p)
                });
                g.carrier_of = Some(Box::new(|p: &Permutation| {
                    let recording = rsk(p).recording;
                    let shape = recording
                        .partition_shape()
                        .expect("recording tableau has partition shape");
                    syt(&shape)
                        .into_iter()
                        .map(|insertion| {
                            rsk_inverse(&RskPair {
                                insertion,
                                recording: recording.clone(),
                            })
                        })
                        .collect()
                }));
                g
            }
            Relation::Equiv2 => Self::build(relation, n, valid, restricted_dual_move),
            Relation::Dual => Self::build(relation, n, valid, dual_move),
            Relation::Knuth => Self::build(relation, n, valid, knuth_move),
            Relation::Shifted => Self::build(relation, n, valid, shifted_dual_move),
            Relation::QuasiDualSrct | Relation::QuasiDualSrt | Relation::RestrictedSrt => {
                return Err(Error::Unsupported(format!(
                    "{relation} acts on tableaux only"
                )))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass<T> {
    pub relation: Relation,
    members: Vec<T>,
}

impl<T: Element> EquivClass<T> {
    pub fn new(relation: Relation, mut members: Vec<T>) -> Self {
        members.sort();
        members.dedup();
        EquivClass { relation, members }
    }

    /// Members in canonical order.
    pub fn members(&self) -> &[T] {
        &self.members
    }

    pub fn least(&self) -> &T {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.members.binary_search(x).is_ok()
    }
}

impl<T: Element + Serialize> Serialize for EquivClass<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EquivClass", 4)?;
        st.serialize_field("relation", &self.relation)?;
        st.serialize_field("least", &self.least().key())?;
        st.serialize_field("size", &self.len())?;
        st.serialize_field("members", &self.members)?;
        st.end()
    }
}

/// Smallest move-closed set containing `seed`.
pub fn closure<T: Element>(seed: &T, gens: &GeneratorSet<T>) -> Result<EquivClass<T>> {
    if !gens.is_valid(seed) {
        return Err(Error::InvalidTableau(format!(
            "seed {seed:?} is outside the carrier"
        )));
    }
    if let Some(carrier_of) = &gens.carrier_of {
        let carrier = carrier_of(seed)?;
        return all_classes(&carrier, gens)?
            .into_iter()
            .find(|c| c.contains(seed))
            .ok_or_else(|| {
                Error::InvalidTableau(format!("seed {seed:?} missing from its carrier"))
            });
    }
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut frontier = VecDeque::from([seed.clone()]);
    while let Some(x) = frontier.pop_front() {
        for m in &gens.moves {
            let y = gens.step(m, &x)?;
            if seen.insert(y.clone()) {
                frontier.push_back(y);
            }
        }
    }
    Ok(EquivClass::new(gens.relation, seen.into_iter().collect()))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Neighbour indices of every carrier element, computed in parallel.
fn adjacency<T: Element>(carrier: &[T], gens: &GeneratorSet<T>) -> Result<Vec<Vec<usize>>> {
    let index: HashMap<&T, usize> = carrier.iter().enumerate().map(|(k, x)| (x, k)).collect();
    carrier
        .par_iter()
        .map(|x| {
            gens.moves
                .iter()
                .map(|m| {
                    let y = gens.step(m, x)?;
                    index.get(&y).copied().ok_or_else(|| Error::LeftCarrier {
                        relation: gens.relation.name().into(),
                        element: x.key(),
                        index: m.index,
                    })
                })
                .collect()
        })
        .collect()
}

/// Partition of `carrier` into classes, ordered by least member. Fails if a
/// move leaves the carrier.
pub fn all_classes<T: Element>(
    carrier: &[T],
    gens: &GeneratorSet<T>,
) -> Result<Vec<EquivClass<T>>> {
    let adj = adjacency(carrier, gens)?;
    let mut parent: Vec<usize> = (0..carrier.len()).collect();
    for (a, nbrs) in adj.iter().enumerate() {
        for &b in nbrs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<T>> = HashMap::new();
    for (k, x) in carrier.iter().enumerate() {
        let root = find(&mut parent, k);
        groups.entry(root).or_default().push(x.clone());
    }
    let mut classes: Vec<EquivClass<T>> = groups
        .into_values()
        .map(|m| EquivClass::new(gens.relation, m))
        .collect();
    classes.sort_by(|a, b| a.least().cmp(b.least()));
    Ok(classes)
}

/// Two elements that share a class of `fine` but not of `coarse` after
/// applying `map`, or an element whose image is missing from `coarse`.
pub fn refinement_witness<A, B, F>(
    fine: &[EquivClass<A>],
    coarse: &[EquivClass<B>],
    map: F,
) -> Option<(A, A)>
where
    A: Element,
    B: Element,
    F: Fn(&A) -> B,
{
    let owner: HashMap<&B, usize> = coarse
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.members().iter().map(move |x| (x, k)))
        .collect();
    for class in fine {
        let first = class.least();
        let Some(&home) = owner.get(&map(first)) else {
            return Some((first.clone(), first.clone()));
        };
        for x in class.members() {
            if owner.get(&map(x)) != Some(&home) {
                return Some((first.clone(), x.clone()));
            }
        }
    }
    None
}

/// Every class of `fine` lies inside a class of `coarse`.
pub fn refines<T: Element>(fine: &[EquivClass<T>], coarse: &[EquivClass<T>]) -> bool {
    refinement_witness(fine, coarse, T::clone).is_none()
}

/// Every class of `fine`, mapped elementwise by `map`, lies inside a class of `coarse`.
pub fn refines_under<A, B, F>(fine: &[EquivClass<A>], coarse: &[EquivClass<B>], map: F) -> bool
where
    A: Element,
    B: Element,
    F: Fn(&A) -> B,
{
    refinement_witness(fine, coarse, map).is_none()
}

/// Graphviz rendering. Involutive moves give one undirected edge per pair;
/// other moves give arcs. Fixed points are omitted.
pub fn to_dot<T: Element>(classes: &[EquivClass<T>], gens: &GeneratorSet<T>) -> Result<String> {
    let mut out = format!("graph \"{}\" {{\n", gens.relation);
    let arrow = if gens.involutive { "--" } else { "->" };
    if !gens.involutive {
        out = format!("digraph \"{}\" {{\n", gens.relation);
    }
    for (k, class) in classes.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{k} {{\n"));
        for x in class.members() {
            out.push_str(&format!("    \"{}\";\n", x.key()));
        }
        out.push_str("  }\n");
    }
    for class in classes {
        for x in class.members() {
            for m in &gens.moves {
                let y = gens.step(m, x)?;
                if y == *x || (gens.involutive && y < *x) {
                    continue;
                }
                out.push_str(&format!(
                    "  \"{}\" {arrow} \"{}\" [label=\"{}\", generator=\"{}\", index={}];\n",
                    x.key(),
                    y.key(),
                    m.label,
                    gens.relation,
                    m.index
                ));
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn to_json<T: Element + Serialize>(classes: &[EquivClass<T>]) -> serde_json::Value {
    serde_json::json!({
        "relation": classes.first().map(|c| c.relation.name()),
        "count": classes.len(),
        "classes": classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{
        compositions, flip, partitions, permutations, reverse, strict_partitions, Partition,
    };
    use crate::operators::mason_image;
    use crate::tableau::{srt, sst, superstandard, syt_n};

    fn from_word(shape: &[usize], word: &str) -> Tableau {
        let l = Partition::new(shape.to_vec()).unwrap();
        superstandard(&l).refill(&word.parse().unwrap())
    }

    fn syt_classes(r: Relation, n: usize) -> Vec<EquivClass<Tableau>> {
        all_classes(&syt_n(n), &GeneratorSet::for_tableaux(r, n).unwrap()).unwrap()
    }

    fn perm_classes(r: Relation, n: usize) -> Vec<EquivClass<Permutation>> {
        all_classes(
            &permutations(n),
            &GeneratorSet::for_permutations(r, n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn superstandard_is_alone() {
        for n in 1..=7 {
            for l in partitions(n) {
                let u = superstandard(&l);
                for r in [Relation::Equiv0, Relation::Equiv1] {
                    let g = GeneratorSet::for_tableaux(r, n).unwrap();
                    assert_eq!(closure(&u, &g).unwrap().members(), std::slice::from_ref(&u));
                }
            }
        }
    }

    #[test]
    fn slink_classes_in_hook_and_two_row_shapes() {
        let hook = [
            "432156789",
            "654123789",
            "832145679",
            "854123679",
            "862134579",
            "864123579",
        ];
        let g1 = GeneratorSet::for_tableaux(Relation::Equiv1, 9).unwrap();
        let g0 = GeneratorSet::for_tableaux(Relation::Equiv0, 9).unwrap();
        let seed = from_word(&[6, 1, 1, 1], hook[0]);
        let class = closure(&seed, &g1).unwrap();
        let expected: Vec<Tableau> = hook.iter().map(|w| from_word(&[6, 1, 1, 1], w)).collect();
        assert_eq!(class, EquivClass::new(Relation::Equiv1, expected));
        assert_eq!(closure(&seed, &g0).unwrap().len(), 2);

        let block = ["534126789", "645123789", "734125689", "745123689"];
        let seed = from_word(&[6, 2, 1], block[0]);
        let class = closure(&seed, &g1).unwrap();
        let expected: Vec<Tableau> = block.iter().map(|w| from_word(&[6, 2, 1], w)).collect();
        assert_eq!(class, EquivClass::new(Relation::Equiv1, expected));
    }

    #[test]
    fn small_counts_and_row_shape() {
        // SYT(3): d_i^R has no generators, so every tableau is alone
        assert_eq!(syt_classes(Relation::Equiv2, 3).len(), 4);
        for n in 1..=6 {
            let row = superstandard(&Partition::new(vec![n]).unwrap());
            for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
                let g = GeneratorSet::for_tableaux(r, n).unwrap();
                assert_eq!(
                    all_classes(std::slice::from_ref(&row), &g).unwrap().len(),
                    1
                );
            }
        }
    }

    #[test]
    fn closure_matches_partition() {
        for n in 1..=7 {
            for r in [
                Relation::Equiv0,
                Relation::Equiv1,
                Relation::Equiv2,
                Relation::Dual,
            ] {
                let g = GeneratorSet::for_tableaux(r, n).unwrap();
                let classes = all_classes(&syt_n(n), &g).unwrap();
                let total: usize = classes.iter().map(EquivClass::len).sum();
                assert_eq!(total, syt_n(n).len());
                for c in &classes {
                    assert_eq!(closure(c.least(), &g).unwrap(), *c);
                }
            }
        }
    }

    #[test]
    fn dual_classes_are_shapes() {
        for n in 1..=7 {
            let classes = syt_classes(Relation::Dual, n);
            assert_eq!(classes.len(), partitions(n).len());
        }
    }

    #[test]
    fn equiv2_two_rows_fix_the_top_value() {
        for n in 3..=7 {
            let g = GeneratorSet::for_tableaux(Relation::Equiv2, n).unwrap();
            for l in partitions(n).into_iter().filter(|l| l.len() <= 2) {
                for t in syt(&l) {
                    let cell = t.positions()[n];
                    for u in closure(&t, &g).unwrap().members() {
                        assert_eq!(u.positions()[n], cell);
                    }
                }
            }
        }
    }

    #[test]
    fn poset_chain_on_tableaux() {
        for n in 1..=7 {
            let c0 = syt_classes(Relation::Equiv0, n);
            let c1 = syt_classes(Relation::Equiv1, n);
            let c2 = syt_classes(Relation::Equiv2, n);
            assert!(refines(&c0, &c0));
            assert!(refines(&c0, &c1));
            assert!(refines(&c1, &c2));
            assert!(refines(&c2, &syt_classes(Relation::Dual, n)));
            if n >= 4 {
                assert!(!refines(&c2, &c0));
            }
        }
    }

    #[test]
    fn poset_chain_on_permutations() {
        for n in 1..=6 {
            let c0 = perm_classes(Relation::Equiv0, n);
            let c1 = perm_classes(Relation::Equiv1, n);
            let c2 = perm_classes(Relation::Equiv2, n);
            let h = perm_classes(Relation::Shifted, n);
            assert!(refines(&c0, &c1));
            assert!(refines(&c1, &c2));
            assert!(refines_under(&c2, &h, reverse));
            assert!(refines_under(&c2, &h, flip));
        }
    }

    #[test]
    fn permutation_classes_map_to_tableau_classes() {
        for n in 1..=6 {
            for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
                let tab = syt_classes(r, n);
                for class in perm_classes(r, n) {
                    let q = rsk(class.least()).recording;
                    let ps: Vec<Tableau> =
                        class.members().iter().map(|p| rsk(p).insertion).collect();
                    assert!(class.members().iter().all(|p| rsk(p).recording == q));
                    let image = EquivClass::new(r, ps);
                    assert!(tab.contains(&image), "{r} {:?}", class.least());
                    let mut a: Vec<_> = class
                        .members()
                        .iter()
                        .map(|p| p.descent_composition())
                        .collect();
                    let mut b: Vec<_> = image
                        .members()
                        .iter()
                        .map(|t| t.descent_composition())
                        .collect();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn quasi_dual_on_reverse_tableaux() {
        for n in 1..=7 {
            let restricted = GeneratorSet::for_tableaux(Relation::RestrictedSrt, n).unwrap();
            let quasi = GeneratorSet::for_tableaux(Relation::QuasiDualSrt, n).unwrap();
            for l in partitions(n) {
                let mut images: Vec<Vec<Tableau>> = Vec::new();
                for alpha in compositions(n).into_iter().filter(|a| a.sorted() == l) {
                    let image = mason_image(&alpha);
                    let fine = all_classes(&image, &restricted).unwrap();
                    let coarse = all_classes(&image, &quasi).unwrap();
                    assert_eq!(coarse.len(), 1);
                    assert!(refines(&fine, &coarse));
                    images.push(image);
                }
                let mut whole = all_classes(&srt(&l), &quasi)
                    .unwrap()
                    .into_iter()
                    .map(|c| c.members().to_vec())
                    .collect::<Vec<_>>();
                whole.sort();
                images.sort();
                assert_eq!(whole, images);
            }
        }
    }

    #[test]
    fn restricted_moves_split_222() {
        let alpha = "2,2,2".parse().unwrap();
        let g = GeneratorSet::for_tableaux(Relation::RestrictedSrt, 6).unwrap();
        assert!(all_classes(&mason_image(&alpha), &g).unwrap().len() > 1);
    }

    #[test]
    fn shifted_tableaux_are_one_class() {
        for n in 1..=8 {
            let g = GeneratorSet::for_tableaux(Relation::Shifted, n).unwrap();
            for l in strict_partitions(n) {
                assert_eq!(all_classes(&sst(&l), &g).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn leaving_the_carrier_is_an_error() {
        let g = GeneratorSet::for_tableaux(Relation::Dual, 3).unwrap();
        let carrier = vec![from_word(&[2, 1], "312")];
        assert!(matches!(
            all_classes(&carrier, &g),
            Err(Error::LeftCarrier { .. })
        ));
    }

    #[test]
    fn relation_names_round_trip() {
        for r in Relation::ALL {
            assert_eq!(r.name().parse::<Relation>().unwrap(), r);
            assert_eq!(serde_json::to_value(r).unwrap(), r.name());
        }
        assert!("equiv3".parse::<Relation>().is_err());
        assert!(GeneratorSet::for_permutations(Relation::QuasiDualSrt, 4).is_err());
        assert!(GeneratorSet::for_tableaux(Relation::Knuth, 4).is_err());
    }

    #[test]
    fn exports() {
        let classes = syt_classes(Relation::Equiv1, 4);
        let g = GeneratorSet::for_tableaux(Relation::Equiv1, 4).unwrap();
        let dot = to_dot(&classes, &g).unwrap();
        assert!(dot.starts_with("digraph \"equiv1\""));
        assert!(dot.contains("label=\"slink\""));
        let json = to_json(&classes);
        assert_eq!(json["relation"], "equiv1");
        assert_eq!(json["count"], classes.len());
        assert_eq!(json["classes"][0]["size"], classes[0].len());
        let g = GeneratorSet::for_tableaux(Relation::Dual, 4).unwrap();
        let dot = to_dot(&syt_classes(Relation::Dual, 4), &g).unwrap();
        assert!(dot.starts_with("graph \"dual\"") && dot.contains(" -- "));
    }

    #[test]
    fn moves_are_involutions() {
        for n in 1..=7 {
            for r in [Relation::Equiv0, Relation::Equiv2, Relation::Dual] {
                let g = GeneratorSet::for_tableaux(r, n).unwrap();
                for t in syt_n(n) {
                    for m in &g.moves {
                        assert_eq!(m.apply(&m.apply(&t).unwrap()).unwrap(), t);
                    }
                }
            }
        }
    }
}

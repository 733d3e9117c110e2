//! Named verification suites. Each check runs exhaustively over every degree
//! up to the requested bound and reports the first failing case.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinat::{
    compositions, flip, partitions, permutations, reverse, slinky, strict_partitions, Composition,
    Permutation,
};
use crate::equivalence::{
    all_classes, refinement_witness, Element, EquivClass, GeneratorSet, Relation,
};
use crate::error::{Error, Result};
use crate::operators::{
    mason_image, mason_rho, mason_rho_inverse, quasi_dual_move_srct, quasi_dual_move_srt,
    restricted_dual_move, restricted_dual_move_by_guard, restricted_dual_move_flipped,
    shifted_dual_move, shifted_dual_move_tableau, slink, slink_context, slink_star,
};
use crate::qsym::{
    decompose_in_fk, family_rank, fk_family, quasi_schur, quasi_schur_via_image,
    schur_expand_permutation_union, schur_expand_tableau_union, shifted_expansions, Decomposition,
    QsymElement, SchurExpansion,
};
use crate::rsk::{act_via_insertion, dual_move, knuth_move, rsk, rsk_inverse};
use crate::tableau::{
    is_superstandard, reverse_column_word, srct, srt, sst, superstandard, syt, syt_n, Tableau,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Poset,
    Involutions,
    Commutation,
    Mason,
    Shifted,
    Expansion,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Poset,
        Suite::Involutions,
        Suite::Commutation,
        Suite::Mason,
        Suite::Shifted,
        Suite::Expansion,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Poset => "poset",
            Suite::Involutions => "involutions",
            Suite::Commutation => "commutation",
            Suite::Mason => "mason",
            Suite::Shifted => "shifted",
            Suite::Expansion => "expansion",
            Suite::Conjecture => "conjecture",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Outcome of one named property over all its cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n <= {})", self.suite, self.n)?;
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(f, "  {status} {} [{} cases", c.name, c.cases)?;
            if !c.passed() {
                write!(f, ", {} failed", c.failures)?;
            }
            f.write_str("]")?;
            if let Some(w) = &c.witness {
                write!(f, " witness: {w}")?;
            }
            if let Some(note) = &c.note {
                write!(f, " ({note})")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "ok" } else { "FAILED" })
    }
}

/// Runs `f` on every item in parallel; `Err` is a failure witness. The
/// witness kept is the first in item order.
fn scan<I, F>(name: &str, items: &[I], f: F) -> Check
where
    I: Sync,
    F: Fn(&I) -> std::result::Result<(), String> + Sync,
{
    let outcomes: Vec<Option<String>> = items.par_iter().map(|x| f(x).err()).collect();
    let failures = outcomes.iter().filter(|o| o.is_some()).count();
    Check {
        name: name.to_string(),
        cases: items.len(),
        failures,
        witness: outcomes.into_iter().flatten().next(),
        note: None,
    }
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn show(t: &Tableau) -> String {
    format!("{} in shape {}", t.reading_word(), t.shape())
}

fn degrees(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

fn all_syt(n: usize) -> Vec<Tableau> {
    degrees(n).into_iter().flat_map(syt_n).collect()
}

fn all_permutations(lo: usize, n: usize) -> Vec<Permutation> {
    (lo..=n).flat_map(permutations).collect()
}

fn all_compositions(n: usize) -> Vec<Composition> {
    degrees(n).into_iter().flat_map(compositions).collect()
}

fn syt_classes(r: Relation, n: usize) -> Result<Vec<EquivClass<Tableau>>> {
    all_classes(&syt_n(n), &GeneratorSet::for_tableaux(r, n)?)
}

fn perm_classes(r: Relation, n: usize) -> Result<Vec<EquivClass<Permutation>>> {
    all_classes(&permutations(n), &GeneratorSet::for_permutations(r, n)?)
}

fn refinement<A: Element, B: Element>(
    fine: &[EquivClass<A>],
    coarse: &[EquivClass<B>],
    map: impl Fn(&A) -> B,
) -> std::result::Result<(), String> {
    match refinement_witness(fine, coarse, map) {
        None => Ok(()),
        Some((a, b)) => Err(format!("{} and {} split", a.key(), b.key())),
    }
}

pub fn run_suite(suite: Suite, n: usize) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Poset => poset(n),
        Suite::Involutions => involutions(n),
        Suite::Commutation => commutation(n),
        Suite::Mason => mason(n),
        Suite::Shifted => shifted(n),
        Suite::Expansion => expansion(n),
        Suite::Conjecture => conjecture(n),
    };
    Ok(SuiteReport { suite, n, checks })
}

fn poset(n: usize) -> Vec<Check> {
    let ds = degrees(n);
    let chain = |fine: Relation, coarse: Relation| {
        move |&m: &usize| {
            refinement(
                &lib(syt_classes(fine, m))?,
                &lib(syt_classes(coarse, m))?,
                Tableau::clone,
            )
        }
    };
    let perm_chain = |fine: Relation, coarse: Relation, map: fn(&Permutation) -> Permutation| {
        move |&m: &usize| {
            refinement(
                &lib(perm_classes(fine, m))?,
                &lib(perm_classes(coarse, m))?,
                map,
            )
        }
    };
    let restricted_in_quasi = |alpha: &Composition| {
        let m = alpha.weight();
        let image = mason_image(alpha);
        let fine = lib(all_classes(
            &image,
            &lib(GeneratorSet::for_tableaux(Relation::RestrictedSrt, m))?,
        ))?;
        let coarse = lib(all_classes(
            &image,
            &lib(GeneratorSet::for_tableaux(Relation::QuasiDualSrt, m))?,
        ))?;
        ensure(coarse.len() == 1, || {
            format!("C({alpha}) splits into {} quasi-dual classes", coarse.len())
        })?;
        refinement(&fine, &coarse, Tableau::clone)
    };
    let cw_classes_stay = |&m: &usize| {
        let owner: std::collections::HashMap<Permutation, Composition> = compositions(m)
            .into_iter()
            .flat_map(|a| {
                mason_image(&a)
                    .into_iter()
                    .map(move |s| (reverse_column_word(&s), a.clone()))
            })
            .collect();
        for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
            for class in lib(perm_classes(r, m))? {
                let homes: BTreeSet<Option<&Composition>> =
                    class.members().iter().map(|p| owner.get(p)).collect();
                ensure(homes.len() == 1, || {
                    format!("{r} class of {} meets several C(alpha)", class.least())
                })?;
            }
        }
        Ok(())
    };
    let as_perm = |f: fn(&Permutation) -> Permutation| f;
    vec![
        scan(
            "equiv0 refines equiv1 on SYT",
            &ds,
            chain(Relation::Equiv0, Relation::Equiv1),
        ),
        scan(
            "equiv1 refines equiv2 on SYT",
            &ds,
            chain(Relation::Equiv1, Relation::Equiv2),
        ),
        scan(
            "equiv2 refines dual equivalence on SYT",
            &ds,
            chain(Relation::Equiv2, Relation::Dual),
        ),
        scan(
            "equiv0 refines equiv1 on permutations",
            &ds,
            perm_chain(
                Relation::Equiv0,
                Relation::Equiv1,
                as_perm(Permutation::clone),
            ),
        ),
        scan(
            "equiv1 refines equiv2 on permutations",
            &ds,
            perm_chain(
                Relation::Equiv1,
                Relation::Equiv2,
                as_perm(Permutation::clone),
            ),
        ),
        scan(
            "equiv2 refines dual equivalence on permutations",
            &ds,
            perm_chain(
                Relation::Equiv2,
                Relation::Dual,
                as_perm(Permutation::clone),
            ),
        ),
        scan(
            "equiv2 on C(alpha) refines quasi-dual equivalence",
            &all_compositions(n),
            restricted_in_quasi,
        ),
        scan(
            "quasi-dual classes of SRT(lambda) are the C(alpha)",
            &ds,
            |&m: &usize| {
                let g = lib(GeneratorSet::for_tableaux(Relation::QuasiDualSrt, m))?;
                for l in partitions(m) {
                    let mut classes: Vec<Vec<Tableau>> = lib(all_classes(&srt(&l), &g))?
                        .into_iter()
                        .map(|c| c.members().to_vec())
                        .collect();
                    let mut images: Vec<Vec<Tableau>> = compositions(m)
                        .iter()
                        .filter(|a| a.sorted() == l)
                        .map(mason_image)
                        .collect();
                    classes.sort();
                    images.sort();
                    ensure(classes == images, || format!("SRT({l})"))?;
                }
                Ok(())
            },
        ),
        scan(
            "permutation classes of column words stay in one C(alpha)",
            &ds,
            cw_classes_stay,
        ),
        scan(
            "equiv2 after reverse refines shifted dual equivalence",
            &ds,
            perm_chain(Relation::Equiv2, Relation::Shifted, as_perm(reverse)),
        ),
        scan(
            "equiv2 after flip refines shifted dual equivalence",
            &ds,
            perm_chain(Relation::Equiv2, Relation::Shifted, as_perm(flip)),
        ),
    ]
}

fn involutions(n: usize) -> Vec<Check> {
    let tableaux = all_syt(n);
    let perms = all_permutations(3, n.min(8));
    vec![
        scan("slink and slink* keep shape and validity", &tableaux, |t| {
            let (s, s_star) = (slink(t), slink_star(t));
            ensure(s.is_valid() && s.shape() == t.shape(), || {
                format!("slink of {}", show(t))
            })?;
            ensure(s_star.is_valid() && s_star.shape() == t.shape(), || {
                format!("slink* of {}", show(t))
            })
        }),
        scan("slink* is an involution", &tableaux, |t| {
            ensure(slink_star(&slink_star(t)) == *t, || show(t))
        }),
        scan(
            "slink and slink* fix the superstandard tableaux",
            &tableaux,
            |t| {
                ensure(
                    !is_superstandard(t) || (slink(t) == *t && slink_star(t) == *t),
                    || show(t),
                )
            },
        ),
        scan(
            "slink and slink* negate the straightened descent composition",
            &tableaux,
            |t| {
                if slink_context(t).is_none() {
                    return Ok(());
                }
                let beta = slinky(&t.descent_composition());
                ensure(
                    slinky(&slink(t).descent_composition()) == beta.negate(),
                    || format!("slink of {}", show(t)),
                )?;
                ensure(
                    slinky(&slink_star(t).descent_composition()) == beta.negate(),
                    || format!("slink* of {}", show(t)),
                )
            },
        ),
        scan("d_i, d_i^R, K_i and h_i are involutions", &perms, |p| {
            let m = p.len();
            for i in 2..m {
                for (name, f) in [
                    (
                        "d",
                        dual_move as fn(usize, &Permutation) -> Result<Permutation>,
                    ),
                    ("K", knuth_move),
                ] {
                    let q = lib(f(i, p))?;
                    ensure(lib(f(i, &q))? == *p, || format!("{name}_{i} on {p}"))?;
                }
            }
            for i in 2..=m.saturating_sub(2) {
                let q = lib(restricted_dual_move(i, p))?;
                ensure(lib(restricted_dual_move(i, &q))? == *p, || {
                    format!("d^R_{i} on {p}")
                })?;
            }
            for i in 1..=m.saturating_sub(3) {
                let q = lib(shifted_dual_move(i, p))?;
                ensure(lib(shifted_dual_move(i, &q))? == *p, || {
                    format!("h_{i} on {p}")
                })?;
            }
            Ok(())
        }),
        scan(
            "equiv0, equiv2 and dual moves are involutions on SYT",
            &tableaux,
            |t| {
                let m = t.size();
                for r in [Relation::Equiv0, Relation::Equiv2, Relation::Dual] {
                    for mv in lib(GeneratorSet::for_tableaux(r, m))?.moves {
                        let u = lib(mv.apply(t))?;
                        ensure(lib(mv.apply(&u))? == *t, || {
                            format!("{} on {}", mv.label, show(t))
                        })?;
                    }
                }
                Ok(())
            },
        ),
    ]
}

fn commutation(n: usize) -> Vec<Check> {
    let tableaux = all_syt(n);
    let perms = all_permutations(3, n.min(7));
    vec![
        scan("slink commutes with slink*", &tableaux, |t| {
            ensure(slink(&slink_star(t)) == slink_star(&slink(t)), || show(t))
        }),
        scan(
            "slink^(j-i) equals slink^(j-i-1) after slink*",
            &tableaux,
            |t| {
                let Some(ctx) = slink_context(t) else {
                    return Ok(());
                };
                let power = |mut u: Tableau, k: usize| {
                    for _ in 0..k {
                        u = slink(&u);
                    }
                    u
                };
                let k = ctx.j - ctx.i;
                ensure(power(t.clone(), k) == power(slink_star(t), k - 1), || {
                    show(t)
                })
            },
        ),
        scan(
            "slink lowers j unless j = i + 1; slink* keeps (i, j)",
            &tableaux,
            |t| {
                let Some(ctx) = slink_context(t) else {
                    return Ok(());
                };
                let after = slink_context(&slink(t)).ok_or_else(|| show(t))?;
                let after_star = slink_context(&slink_star(t)).ok_or_else(|| show(t))?;
                let expect_j = if ctx.i + 1 == ctx.j { ctx.j } else { ctx.j - 1 };
                ensure(after.i == ctx.i && after.j == expect_j, || {
                    format!("slink of {}", show(t))
                })?;
                ensure(after_star.i == ctx.i && after_star.j == ctx.j, || {
                    format!("slink* of {}", show(t))
                })
            },
        ),
        scan(
            "Knuth moves commute with slink, slink* and d^R on permutations",
            &perms,
            |p| {
                let m = p.len();
                for k in 2..m {
                    let kp = lib(knuth_move(k, p))?;
                    for (name, f) in [
                        ("slink", slink as fn(&Tableau) -> Tableau),
                        ("slink*", slink_star),
                    ] {
                        let a = lib(act_via_insertion(|t| Ok(f(t)), p))?;
                        let b = lib(act_via_insertion(|t| Ok(f(t)), &kp))?;
                        ensure(lib(knuth_move(k, &a))? == b, || {
                            format!("K_{k} and {name} on {p}")
                        })?;
                    }
                    for i in 2..=m.saturating_sub(2) {
                        let a = lib(restricted_dual_move(i, p))?;
                        let b = lib(restricted_dual_move(i, &kp))?;
                        ensure(lib(knuth_move(k, &a))? == b, || {
                            format!("K_{k} and d^R_{i} on {p}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
        scan(
            "dual moves keep Q and act on P; Knuth moves keep P",
            &perms,
            |p| {
                let pair = rsk(p);
                for i in 2..p.len() {
                    let d = rsk(&lib(dual_move(i, p))?);
                    ensure(d.recording == pair.recording, || format!("d_{i} on {p}"))?;
                    ensure(
                        d.insertion == lib(crate::rsk::dual_move_tableau(i, &pair.insertion))?,
                        || format!("d_{i} on {p}"),
                    )?;
                    let k = rsk(&lib(knuth_move(i, p))?);
                    ensure(k.insertion == pair.insertion, || format!("K_{i} on {p}"))?;
                }
                ensure(lib(rsk_inverse(&pair))? == *p, || {
                    format!("RSK round trip of {p}")
                })
            },
        ),
        scan(
            "d^R pattern table matches the guarded definition",
            &perms,
            |p| {
                for i in 2..=p.len().saturating_sub(2) {
                    ensure(
                        lib(restricted_dual_move(i, p))?
                            == lib(restricted_dual_move_by_guard(i, p))?,
                        || format!("d^R_{i} on {p}"),
                    )?;
                }
                Ok(())
            },
        ),
    ]
}

fn mason(n: usize) -> Vec<Check> {
    let comps = all_compositions(n);
    let small: Vec<Composition> = comps.iter().filter(|a| a.weight() <= 6).cloned().collect();
    let mut checks = vec![
        scan("D^Q preserves SRCT(alpha)", &comps, |alpha| {
            let all: HashSet<Tableau> = srct(alpha).into_iter().collect();
            for t in &all {
                for i in 2..alpha.weight() {
                    let u = lib(quasi_dual_move_srct(i, t))?;
                    ensure(all.contains(&u), || format!("D^Q_{i} on {}", show(t)))?;
                }
            }
            Ok(())
        }),
        scan("D^Q is transitive on SRCT(alpha)", &comps, |alpha| {
            let all: BTreeSet<Tableau> = srct(alpha).into_iter().collect();
            let start = all.first().unwrap().clone();
            let mut seen = BTreeSet::from([start.clone()]);
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for i in 2..alpha.weight() {
                    let u = lib(quasi_dual_move_srct(i, &t))?;
                    if seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
            ensure(seen == all, || {
                format!("SRCT({alpha}) reaches {} of {}", seen.len(), all.len())
            })
        }),
        scan(
            "rho is a descent-preserving bijection onto C(alpha)",
            &comps,
            |alpha| {
                let all = srct(alpha);
                let images: BTreeSet<Tableau> = all
                    .iter()
                    .map(mason_rho)
                    .collect::<Result<_>>()
                    .map_err(|e| e.to_string())?;
                ensure(images.len() == all.len(), || {
                    format!("rho not injective on SRCT({alpha})")
                })?;
                for t in &all {
                    let s = lib(mason_rho(t))?;
                    ensure(s.is_valid(), || format!("rho of {}", show(t)))?;
                    ensure(s.inverse_descent_set() == t.inverse_descent_set(), || {
                        format!("descents of {}", show(t))
                    })?;
                    ensure(lib(mason_rho_inverse(&s, alpha))? == *t, || {
                        format!("inverse of rho of {}", show(t))
                    })?;
                }
                for s in srt(&alpha.sorted()) {
                    if !images.contains(&s) {
                        ensure(
                            matches!(mason_rho_inverse(&s, alpha), Err(Error::NotInImage(_))),
                            || format!("{} accepted for {alpha}", show(&s)),
                        )?;
                    }
                }
                Ok(())
            },
        ),
        scan(
            "rho intertwines D^Q on SRCT with d^Q on SRT",
            &comps,
            |alpha| {
                for t in srct(alpha) {
                    let s = lib(mason_rho(&t))?;
                    for i in 2..alpha.weight() {
                        let lhs = lib(quasi_dual_move_srt(i, &s))?;
                        let rhs = lib(mason_rho(&lib(quasi_dual_move_srct(i, &t))?))?;
                        ensure(lhs == rhs, || format!("index {i} on {}", show(&t)))?;
                    }
                }
                Ok(())
            },
        ),
        scan(
            "S_alpha over SRCT equals the sum over C(alpha)",
            &comps,
            |alpha| {
                ensure(quasi_schur(alpha) == quasi_schur_via_image(alpha), || {
                    alpha.to_string()
                })
            },
        ),
        scan(
            "s_lambda is the sum of S_alpha over rearrangements",
            &degrees(n),
            |&m| {
                for l in partitions(m) {
                    let mut total = QsymElement::zero(m);
                    for a in compositions(m).iter().filter(|a| a.sorted() == l) {
                        total += &quasi_schur(a);
                    }
                    ensure(total == QsymElement::sum_of_tableaux(m, &syt(&l)), || {
                        l.to_string()
                    })?;
                }
                Ok(())
            },
        ),
    ];
    for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
        let families: Vec<Vec<QsymElement>> = (0..=6.min(n))
            .map(|m| {
                fk_family(r, m.max(1))
                    .map(|f| f.functions())
                    .unwrap_or_default()
            })
            .collect();
        checks.push(scan(
            &format!(
                "S_alpha is a nonnegative integer sum over {{f^({})}}",
                r.name()
            ),
            &small,
            |alpha| {
                let fam = &families[alpha.weight()];
                match lib(decompose_in_fk(&quasi_schur(alpha), fam))? {
                    Decomposition::NonNegative(_) => Ok(()),
                    Decomposition::Rational(x) => Err(format!("{alpha}: {x:?}")),
                }
            },
        ));
    }
    if n >= 6 {
        let alpha: Composition = "2,2,2".parse().unwrap();
        let mut c = scan("d^R is not transitive on C(2,2,2)", &[alpha], |alpha| {
            let g = lib(GeneratorSet::for_tableaux(Relation::RestrictedSrt, 6))?;
            let classes = lib(all_classes(&mason_image(alpha), &g))?;
            ensure(classes.len() > 1, || "C(2,2,2) is a single class".into())
        });
        if c.passed() {
            let g = GeneratorSet::for_tableaux(Relation::RestrictedSrt, 6).unwrap();
            let k = all_classes(&mason_image(&"2,2,2".parse().unwrap()), &g)
                .unwrap()
                .len();
            c.note = Some(format!("{k} classes"));
        }
        checks.push(c);
    }
    checks
}

fn shifted(n: usize) -> Vec<Check> {
    let strict: Vec<_> = degrees(n).into_iter().flat_map(strict_partitions).collect();
    let perms = all_permutations(4, n.min(7));
    let mut checks = Vec::new();
    if n >= 4 {
        checks.push(scan("h_1 pattern table on S_4", &[4usize], |_| {
            let mut moved = BTreeSet::new();
            for p in permutations(4) {
                let h = lib(shifted_dual_move(1, &p))?;
                if h != p {
                    moved.insert(p.to_string());
                    ensure(
                        h == lib(dual_move(2, &p))? || h == lib(dual_move(3, &p))?,
                        || p.to_string(),
                    )?;
                }
            }
            let expected: BTreeSet<String> = [
                "1x2y", "x12y", "1x4y", "x14y", "4x1y", "x41y", "4x3y", "x43y",
            ]
            .iter()
            .flat_map(|pat| {
                ('1'..='4')
                    .flat_map(|x| ('1'..='4').map(move |y| (x, y)))
                    .map(move |(x, y)| {
                        pat.replace('x', &x.to_string())
                            .replace('y', &y.to_string())
                    })
            })
            .filter(|w| {
                let mut c: Vec<char> = w.chars().collect();
                c.sort();
                c == ['1', '2', '3', '4']
            })
            .collect();
            ensure(moved == expected, || {
                format!("moved {moved:?}, table {expected:?}")
            })
        }));
    }
    let mut bridge = scan(
        "reverse bridge: d^R_i(rev p) = rev(h_(i-1) p)",
        &perms,
        |p| {
            for i in 2..=p.len() - 2 {
                let r = reverse(p);
                let moved = lib(restricted_dual_move(i, &r))?;
                if moved != r {
                    ensure(lib(shifted_dual_move(i - 1, p))? == reverse(&moved), || {
                        format!("i={i} on {p}")
                    })?;
                }
            }
            Ok(())
        },
    );
    bridge.name = "reverse bridge: d^R_i(rev p) = rev(h_(i-1) p) when d^R_i moves".into();
    checks.push(bridge);
    let mut flipped = scan(
        "flip bridge: d^R_i(flip p) = flip(h_(n-i-1) p) when d^R_i moves",
        &perms,
        |p| {
            let m = p.len();
            for i in 2..=m - 2 {
                let f = flip(p);
                let moved = lib(restricted_dual_move(i, &f))?;
                if moved != f {
                    ensure(
                        lib(shifted_dual_move(m - i - 1, p))? == flip(&moved),
                        || format!("i={i} on {p}"),
                    )?;
                }
            }
            Ok(())
        },
    );
    let stated_fails = perms.par_iter().find_map_first(|p| {
        let m = p.len();
        (2..=m - 2).find_map(|i| {
            let f = flip(p);
            let moved = restricted_dual_move(i, &f).ok()?;
            if moved == f || m - i > m - 3 {
                return None;
            }
            let holds = shifted_dual_move(m - i, p).ok()? == flip(&moved);
            (!holds).then(|| format!("index n-i fails at i={i} on {p}"))
        })
    });
    flipped.note = stated_fails;
    checks.push(flipped);
    checks.push(scan("h_i preserves SST(lambda)", &strict, |l| {
        let all: HashSet<Tableau> = sst(l).into_iter().collect();
        let m = l.weight();
        for t in &all {
            for i in 1..=m.saturating_sub(3) {
                ensure(all.contains(&lib(shifted_dual_move_tableau(i, t))?), || {
                    format!("h_{i} on {}", show(t))
                })?;
            }
        }
        Ok(())
    }));
    checks.push(scan(
        "d^R on flipped reading words is transitive on SST(lambda)",
        &strict,
        |l| {
            let all: BTreeSet<Tableau> = sst(l).into_iter().collect();
            let start = all.first().unwrap().clone();
            let mut seen = BTreeSet::from([start.clone()]);
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for i in 2..=l.weight().saturating_sub(2) {
                    let u = lib(restricted_dual_move_flipped(i, &t))?;
                    ensure(all.contains(&u), || {
                        format!("left SST({l}) from {}", show(&t))
                    })?;
                    if seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
            ensure(seen == all, || {
                format!("SST({l}) reaches {} of {}", seen.len(), all.len())
            })
        },
    ));
    checks.push(scan(
        "SST(lambda) is one shifted dual class",
        &strict,
        |l| {
            let g = lib(GeneratorSet::for_tableaux(Relation::Shifted, l.weight()))?;
            let k = lib(all_classes(&sst(l), &g))?.len();
            ensure(k == 1, || format!("SST({l}) has {k} classes"))
        },
    ));
    let union_degrees: Vec<usize> = (1..=n.min(6)).collect();
    checks.push(scan(
        "symmetric shifted unions are Schur positive; both counts agree",
        &union_degrees,
        |&m| {
            let classes = lib(perm_classes(Relation::Shifted, m))?;
            for union in unions(&classes, 3) {
                let f = QsymElement::sum_of_words(m, union.iter().flat_map(|c| c.members()));
                if !f.is_symmetric() {
                    continue;
                }
                let (by_flip, _) = lib(shifted_expansions(
                    &union.into_iter().cloned().collect::<Vec<_>>(),
                ))?;
                ensure(by_flip.is_nonnegative() && by_flip.to_qsym() == f, || {
                    format!("degree {m}: {by_flip}")
                })?;
            }
            Ok(())
        },
    ));
    checks.push(scan(
        "shifted classes are nonnegative sums over omega(f^(2))",
        &union_degrees,
        |&m| {
            let twisted: Vec<QsymElement> = lib(fk_family(Relation::Equiv2, m))?
                .functions()
                .iter()
                .map(QsymElement::omega)
                .collect();
            for c in lib(perm_classes(Relation::Shifted, m))? {
                let f = QsymElement::sum_of_words(m, c.members());
                ensure(
                    matches!(
                        lib(decompose_in_fk(&f, &twisted))?,
                        Decomposition::NonNegative(_)
                    ),
                    || format!("class of {}", c.least()),
                )?;
            }
            Ok(())
        },
    ));
    checks
}

/// Every union of at most `k` distinct classes, in lexicographic order of
/// class indices.
fn unions<T>(classes: &[T], k: usize) -> Vec<Vec<&T>> {
    fn go<'a, T>(
        classes: &'a [T],
        k: usize,
        from: usize,
        cur: &mut Vec<&'a T>,
        out: &mut Vec<Vec<&'a T>>,
    ) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in from..classes.len() {
            cur.push(&classes[i]);
            go(classes, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(classes, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Bounds on the unions tried for permutation classes, whose count grows fast.
fn permutation_union_size(m: usize) -> usize {
    match m {
        0..=4 => 3,
        5 => 2,
        _ => 1,
    }
}

fn expansion(n: usize) -> Vec<Check> {
    let ds = degrees(n.min(8));
    let union_degrees: Vec<usize> = (1..=n.min(6)).collect();
    let mut checks = vec![scan(
        "each s_lambda from SYT(lambda) expands to itself",
        &ds,
        |&m| {
            for l in partitions(m) {
                let class = EquivClass::new(Relation::Dual, syt(&l));
                let e = lib(schur_expand_tableau_union(&[class]))?;
                ensure(e == SchurExpansion::single(l.clone()), || {
                    format!("{l}: {e}")
                })?;
            }
            Ok(())
        },
    )];
    for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
        checks.push(scan(
            &format!(
                "symmetric unions of <= 3 {} classes on SYT expand by superstandard count",
                r.name()
            ),
            &union_degrees,
            |&m| {
                let classes = lib(syt_classes(r, m))?;
                let functions: Vec<QsymElement> = classes
                    .iter()
                    .map(|c| QsymElement::sum_of_tableaux(m, c.members()))
                    .collect();
                let index: Vec<usize> = (0..classes.len()).collect();
                for union in unions(&index, 3) {
                    let mut f = QsymElement::zero(m);
                    for &&k in &union {
                        f += &functions[k];
                    }
                    if !f.is_symmetric() {
                        continue;
                    }
                    let chosen: Vec<EquivClass<Tableau>> =
                        union.iter().map(|&&k| classes[k].clone()).collect();
                    let e = lib(schur_expand_tableau_union(&chosen))?;
                    ensure(e.is_nonnegative(), || {
                        format!("{}: {e}", chosen[0].least().reading_word())
                    })?;
                }
                Ok(())
            },
        ));
        checks.push(scan(
            &format!(
                "symmetric unions of {} permutation classes expand by Yamanouchi count",
                r.name()
            ),
            &union_degrees,
            |&m| {
                let classes = lib(perm_classes(r, m))?;
                let functions: Vec<QsymElement> = classes
                    .iter()
                    .map(|c| QsymElement::sum_of_words(m, c.members()))
                    .collect();
                let index: Vec<usize> = (0..classes.len()).collect();
                for union in unions(&index, permutation_union_size(m)) {
                    let mut f = QsymElement::zero(m);
                    for &&k in &union {
                        f += &functions[k];
                    }
                    if !f.is_symmetric() {
                        continue;
                    }
                    let chosen: Vec<EquivClass<Permutation>> =
                        union.iter().map(|&&k| classes[k].clone()).collect();
                    let e = lib(schur_expand_permutation_union(&chosen))?;
                    ensure(e.is_nonnegative(), || format!("{}: {e}", chosen[0].least()))?;
                }
                Ok(())
            },
        ));
        if r == Relation::Equiv2 {
            continue;
        }
        checks.push(scan(
            &format!(
                "single {} classes without U_lambda straighten to zero",
                r.name()
            ),
            &union_degrees,
            |&m| {
                for c in lib(syt_classes(r, m))? {
                    let e =
                        crate::qsym::slinky_expand(&QsymElement::sum_of_tableaux(m, c.members()));
                    let expect = match c.members().iter().find(|t| is_superstandard(t)) {
                        Some(u) => SchurExpansion::single(u.partition_shape().unwrap()),
                        None => SchurExpansion::new(m),
                    };
                    ensure(e == expect, || format!("class of {}: {e}", show(c.least())))?;
                }
                Ok(())
            },
        ));
    }
    checks
}

fn conjecture(n: usize) -> Vec<Check> {
    let ds = degrees(n);
    let mut checks = Vec::new();
    let mut independent = scan(
        "distinct f^(equiv2) functions are linearly independent",
        &ds,
        |&m| {
            let fam = lib(fk_family(Relation::Equiv2, m))?;
            let rank = family_rank(&fam.functions());
            ensure(rank == fam.len(), || {
                format!("degree {m}: rank {rank} of {} functions", fam.len())
            })
        },
    );
    let counts: Vec<String> = ds
        .iter()
        .filter_map(|&m| {
            fk_family(Relation::Equiv2, m)
                .ok()
                .map(|f| format!("{m}:{}/{}", f.len(), f.classes))
        })
        .collect();
    independent.note = Some(format!(
        "distinct functions/classes by degree {}",
        counts.join(" ")
    ));
    checks.push(independent);
    for r in [Relation::Equiv0, Relation::Equiv1, Relation::Equiv2] {
        checks.push(scan(
            &format!("f^({}) spans degree-n quasisymmetric functions", r.name()),
            &ds,
            |&m| {
                let rank = family_rank(&lib(fk_family(r, m))?.functions());
                ensure(rank == 1 << (m - 1), || format!("degree {m}: rank {rank}"))
            },
        ));
    }
    checks
}

/// Superstandard tableaux are singleton classes of `equiv0` and `equiv1`.
pub fn superstandard_is_isolated(n: usize) -> bool {
    partitions(n).iter().all(|l| {
        let u = superstandard(l);
        slink(&u) == u && slink_star(&u) == u
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), s.name());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn unions_enumerate_small_subsets() {
        let xs = [1, 2, 3, 4];
        assert_eq!(unions(&xs, 1).len(), 4);
        assert_eq!(unions(&xs, 2).len(), 10);
        assert_eq!(unions(&xs, 3).len(), 14);
    }

    #[test]
    fn every_suite_passes_at_small_degree() {
        for s in Suite::ALL {
            let report = run_suite(s, 5).unwrap();
            assert!(report.passed(), "{report}");
            assert!(!report.checks.is_empty());
        }
        assert!(superstandard_is_isolated(6));
    }

    #[test]
    fn degree_one_is_vacuous() {
        for s in Suite::ALL {
            assert!(run_suite(s, 1).unwrap().passed(), "{s}");
        }
    }

    #[test]
    fn failures_carry_witnesses() {
        let c = scan("even", &[2, 4, 5, 7], |x| {
            ensure(x % 2 == 0, || x.to_string())
        });
        assert_eq!(c.failures, 2);
        assert_eq!(c.witness.as_deref(), Some("5"));
        let report = SuiteReport {
            suite: Suite::Poset,
            n: 1,
            checks: vec![c],
        };
        assert!(!report.passed());
        assert!(report.to_string().contains("FAIL even"));
    }
}

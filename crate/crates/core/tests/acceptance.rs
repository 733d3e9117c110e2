//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tabkit::combinat::{
    compositions, partitions, permutations, standardized_yamanouchi, strict_partitions, Partition,
    Permutation,
};
use tabkit::operators::{slink, slink_star};
use tabkit::qsym::{schur_expand, slinky_expand, QsymElement, SchurExpansion};
use tabkit::rsk::{dual_move_tableau, insertion_tableau, rsk, rsk_inverse};
use tabkit::tableau::{enumerate, hook_length_count, superstandard, syt, Flavor, Tableau};
use tabkit::verify::{run_suite, Suite, SuiteReport};

type Outcome = Result<Option<String>, String>;
type Edge = (fn(&Tableau) -> Tableau, Tableau, Tableau);
type Criterion = (&'static str, fn() -> Outcome);

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn filled(shape: &str, word: &str) -> Tableau {
    superstandard(&part(shape)).refill(&perm(word))
}

fn suite(s: Suite, n: usize) -> Result<SuiteReport, String> {
    let report = run_suite(s, n).map_err(|e| e.to_string())?;
    if report.passed() {
        Ok(report)
    } else {
        Err(report.to_string())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn schur_from_syt() -> Outcome {
    let start = Instant::now();
    let mut shapes = 0;
    for n in 1..=8 {
        for l in partitions(n) {
            let q = QsymElement::sum_of_tableaux(n, &syt(&l));
            if !q.is_symmetric() {
                return Err(format!("s[{l}] not symmetric"));
            }
            let one = SchurExpansion::single(l.clone());
            let by_kostka = schur_expand(&q).map_err(|e| e.to_string())?;
            if by_kostka != one || slinky_expand(&q) != one {
                return Err(format!("s[{l}] expands to {by_kostka}"));
            }
            if q.dense().iter().sum::<i64>() as u128 != hook_length_count(&l) {
                return Err(format!("s[{l}] has the wrong number of terms"));
            }
            shapes += 1;
        }
    }
    within(Duration::from_secs(60), start)?;
    Ok(Some(format!("{shapes} shapes in {:?}", start.elapsed())))
}

fn golden_examples() -> Outcome {
    let mut bad = Vec::new();
    let mut expect = |ok: bool, what: &str| {
        if !ok {
            bad.push(what.to_string());
        }
    };
    let u = superstandard(&part("4,4,1"));
    let t = filled("4,4,1", "634891257");
    expect(
        u.reading_word() == perm("956781234"),
        "reading word of U_(4,4,1)",
    );
    expect(
        t.reading_word() == perm("634891257"),
        "reading word of the (4,4,1) example",
    );
    expect(
        t.rows() == [vec![1, 2, 5, 7], vec![3, 4, 8, 9], vec![6]],
        "rows of the (4,4,1) example",
    );
    expect(u.inverse_descent_set() == [4, 8], "descents of U_(4,4,1)");
    expect(
        t.inverse_descent_set() == [2, 5, 7],
        "descents of the (4,4,1) example",
    );
    expect(
        u.descent_composition().parts() == [4, 4, 1],
        "composition of U_(4,4,1)",
    );
    expect(
        t.descent_composition().parts() == [2, 3, 2, 2],
        "composition of the (4,4,1) example",
    );

    let chain = ["21345", "31245", "41235", "51234"];
    let got: BTreeSet<String> = syt(&part("4,1"))
        .iter()
        .map(|t| t.reading_word().to_string())
        .collect();
    expect(
        got == chain.iter().map(|s| s.to_string()).collect(),
        "SYT(4,1) reading words",
    );
    for (i, pair) in (2..).zip(chain.windows(2)) {
        let moved = dual_move_tableau(i, &filled("4,1", pair[0])).unwrap();
        expect(
            moved == filled("4,1", pair[1]),
            &format!("d_{i} on {}", pair[0]),
        );
    }

    let hook = |w| filled("6,1,1,1", w);
    let two = |w| filled("6,2,1", w);
    let edges: [Edge; 13] = [
        (slink, hook("432156789"), hook("832145679")),
        (slink, hook("832145679"), hook("862134579")),
        (slink, hook("654123789"), hook("854123679")),
        (slink, hook("854123679"), hook("864123579")),
        (slink, hook("862134579"), hook("864123579")),
        (slink_star, hook("432156789"), hook("654123789")),
        (slink_star, hook("832145679"), hook("854123679")),
        (slink_star, hook("862134579"), hook("864123579")),
        (slink_star, two("534126789"), two("645123789")),
        (slink, two("534126789"), two("734125689")),
        (slink, two("645123789"), two("745123689")),
        (slink, two("734125689"), two("745123689")),
        (slink_star, two("734125689"), two("745123689")),
    ];
    for (f, from, to) in &edges {
        expect(
            f(from) == *to,
            &format!("edge from {}", from.reading_word()),
        );
    }
    if bad.is_empty() {
        Ok(Some(format!("{} labelled slink/slink* edges", edges.len())))
    } else {
        Err(bad.join("; "))
    }
}

fn slink_laws() -> Outcome {
    let start = Instant::now();
    let a = suite(Suite::Involutions, 8)?;
    let b = suite(Suite::Commutation, 8)?;
    within(Duration::from_secs(120), start)?;
    let checks = a.checks.len() + b.checks.len();
    Ok(Some(format!(
        "{checks} checks over SYT(n), n <= 8, in {:?}",
        start.elapsed()
    )))
}

fn poset() -> Outcome {
    let r = suite(Suite::Poset, 7)?;
    Ok(Some(format!("{} refinements, n <= 7", r.checks.len())))
}

fn class_union_expansions() -> Outcome {
    let r = suite(Suite::Expansion, 6)?;
    Ok(Some(format!("{} checks, n <= 6", r.checks.len())))
}

fn composition_tableaux() -> Outcome {
    let r = suite(Suite::Mason, 7)?;
    let split = r
        .checks
        .iter()
        .find(|c| c.name.contains("2,2,2"))
        .ok_or("C(2,2,2) check missing")?;
    Ok(Some(format!(
        "{} checks, n <= 7; C(2,2,2): {}",
        r.checks.len(),
        split.note.clone().unwrap_or_default()
    )))
}

fn shifted() -> Outcome {
    let r = suite(Suite::Shifted, 8)?;
    let bridge = r
        .checks
        .iter()
        .find(|c| c.name.starts_with("flip bridge"))
        .ok_or("flip bridge missing")?;
    match &bridge.note {
        Some(note) => Ok(Some(format!(
            "{} checks; flip bridge holds at index n-i-1, {note}",
            r.checks.len()
        ))),
        None => Err("the index n-i also satisfies the flip bridge".into()),
    }
}

fn conjecture() -> Outcome {
    let start = Instant::now();
    let r = suite(Suite::Conjecture, 7)?;
    within(Duration::from_secs(300), start)?;
    Ok(r.checks[0].note.clone())
}

fn brute_force() -> Outcome {
    for n in 0..=6 {
        for p in permutations(n) {
            if rsk_inverse(&rsk(&p)).map_err(|e| e.to_string())? != p {
                return Err(format!("RSK round trip of {p}"));
            }
        }
        for l in partitions(n) {
            let mut a = standardized_yamanouchi(&l);
            let u = superstandard(&l);
            let mut b: Vec<Permutation> = permutations(n)
                .into_iter()
                .filter(|p| insertion_tableau(p) == u)
                .collect();
            a.sort();
            b.sort();
            if a != b {
                return Err(format!("Yamanouchi words of {l}"));
            }
        }
        let shapes: Vec<(Flavor, Vec<usize>)> = partitions(n)
            .iter()
            .flat_map(|l| {
                [
                    (Flavor::Syt, l.parts().to_vec()),
                    (Flavor::Srt, l.parts().to_vec()),
                ]
            })
            .chain(
                strict_partitions(n)
                    .iter()
                    .map(|l| (Flavor::Sst, l.parts().to_vec())),
            )
            .chain(
                compositions(n)
                    .iter()
                    .map(|a| (Flavor::Srct, a.parts().to_vec())),
            )
            .collect();
        for (flavor, shape) in shapes {
            let listed: BTreeSet<Tableau> = enumerate(flavor, &shape)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            let filtered: BTreeSet<Tableau> = permutations(n)
                .into_iter()
                .filter_map(|p| {
                    let mut rest = p.word();
                    let rows = shape
                        .iter()
                        .map(|&len| {
                            let (row, tail) = rest.split_at(len);
                            rest = tail;
                            row.to_vec()
                        })
                        .collect();
                    Tableau::new(flavor, rows).ok()
                })
                .collect();
            if listed != filtered {
                return Err(format!("{flavor} of shape {shape:?}"));
            }
        }
    }
    Ok(Some("n <= 6".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "Schur functions from SYT(lambda) expand to themselves, n <= 8",
            schur_from_syt,
        ),
        (
            "golden reading words, descents, compositions, d_i chain and slink edges",
            golden_examples,
        ),
        (
            "slink/slink* involution, commutation, power identity and sign law, n <= 8",
            slink_laws,
        ),
        ("relation poset refinements, n <= 7", poset),
        (
            "symmetric class unions expand by superstandard and Yamanouchi counts, n <= 6",
            class_union_expansions,
        ),
        (
            "composition tableaux: D^Q, rho square, C(2,2,2), S_alpha positivity",
            composition_tableaux,
        ),
        (
            "shifted: h_i table, bridges, SST transitivity, shifted unions",
            shifted,
        ),
        ("f^(2) independence and spanning ranks, n <= 7", conjecture),
        (
            "brute-force oracles: RSK, Yamanouchi words, enumeration vs filtering, n <= 6",
            brute_force,
        ),
    ];
    let mut failed = 0;
    for (k, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => {
                let detail = detail.map(|d| format!(" ({d})")).unwrap_or_default();
                println!("criterion {} PASS [{took:.2?}] {label}{detail}", k + 1);
            }
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL [{took:.2?}] {label}: {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

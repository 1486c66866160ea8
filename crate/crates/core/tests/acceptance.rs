//! The twelve acceptance criteria, each exact and run under its time limit.
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use concatset::arith::{num_concat, word_num};
use concatset::eval::{eval_formula_with, run_suite, word_structure, Hints, SuiteName, SuiteParams, Verdict};
use concatset::logic::translate::{flatten_ps0, translate_plus, translate_star, translate_starstar, EqualityMode};
use concatset::logic::{parse_formula, print_formula, Signature, CORPUS};
use concatset::oracle::{brute_canonical, enumerate_sets, permutations, FiniteWordSet};
use concatset::setcode::{adjoin, canonical_encode, is_canonical, is_member, is_set, members, quine_encode, quine_member};
use concatset::word::{w, words_up_to, Word};

type Outcome = Result<(), String>;

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_holds(name: SuiteName, params: &SuiteParams, required: &[&str]) -> Outcome {
    let report = run_suite(name, params).map_err(|e| format!("{name}: {e}"))?;
    for id in required {
        ensure(report.outcome(id).is_some(), || format!("{name} has no outcome {id}"))?;
    }
    let failure = report.failures().next().map(|o| format!("{name} {}: {} {}", o.id, o.verdict, o.verdict.assignment_text()));
    failure.map_or(Ok(()), Err)
}

fn null_set() -> Outcome {
    let aa = w("aa");
    ensure(is_set(&aa), || "aa is not a set code".into())?;
    if let Some(y) = words_up_to(6).into_iter().find(|y| is_member(y, &aa)) {
        return Err(format!("{y} ε aa"));
    }
    let s = word_structure(words_up_to(6));
    let f = parse_formula("exists y Eps(y,x)", &Signature::target()).map_err(|e| e.to_string())?;
    let v = eval_formula_with(&s, &f, &Hints::none(), &[("x", aa)], u64::MAX).map_err(|e| e.to_string())?;
    ensure(matches!(v, Verdict::Fails(_)), || format!("exists y (y ε aa): {v}"))
}

fn uniqueness() -> Outcome {
    let words = words_up_to(12);
    ensure(words.len() == 8190, || format!("U12 has {} words", words.len()))?;
    let mut seen: std::collections::HashMap<FiniteWordSet, Word> = Default::default();
    for x in words.into_iter().filter(is_canonical) {
        let m = members(&x).map_err(|e| e.to_string())?;
        ensure(canonical_encode(&m) == x, || format!("{x} is canonical but encode({m}) differs"))?;
        if let Some(other) = seen.insert(m.clone(), x.clone()) {
            return Err(format!("{other} and {x} both decode to {m}"));
        }
    }
    ensure(seen.len() == 68, || format!("{} canonical codes in U12", seen.len()))
}

fn round_trip() -> Outcome {
    let sets = enumerate_sets(3, 3);
    ensure(sets.len() == 470, || format!("{} sets", sets.len()))?;
    for s in &sets {
        let x = canonical_encode(s);
        ensure(is_canonical(&x), || format!("encode({s}) = {x} is not canonical"))?;
        let back = members(&x).map_err(|e| e.to_string())?;
        ensure(&back == s, || format!("decode(encode({s})) = {back}"))?;
    }
    for s in enumerate_sets(2, 2) {
        let x = canonical_encode(&s);
        let found = brute_canonical(&s, x.len()).map_err(|e| e.to_string())?;
        ensure(found.as_ref() == Some(&x), || format!("brute force gives {found:?} for {s}, encoder {x}"))?;
    }
    Ok(())
}

fn permutation_invariance() -> Outcome {
    for s in enumerate_sets(3, 3) {
        let expected = canonical_encode(&s);
        let items: Vec<Word> = s.iter().cloned().collect();
        for order in permutations(&items) {
            let mut x = w("aa");
            for y in &order {
                x = adjoin(&x, y).map_err(|e| e.to_string())?;
            }
            ensure(x == expected, || format!("order {order:?} folds to {x}, encode gives {expected}"))?;
        }
    }
    Ok(())
}

fn adjunction_semantics() -> Outcome {
    let ys = words_up_to(3);
    for s in enumerate_sets(3, 3) {
        let x = canonical_encode(&s);
        for y in &ys {
            let z = adjoin(&x, y).map_err(|e| e.to_string())?;
            let got = members(&z).map_err(|e| e.to_string())?;
            ensure(got == s.with(y.clone()), || format!("members(adjoin({x},{y})) = {got}"))?;
            ensure((z == x) == is_member(y, &x), || format!("adjoin({x},{y}) = x disagrees with {y} ε {x}"))?;
        }
    }
    Ok(())
}

fn qt_axioms() -> Outcome {
    let params = SuiteParams {
        max_len: Some(6),
        ..SuiteParams::default()
    };
    suite_holds(SuiteName::Qt, &params, &["QT1", "QT2", "QT3", "QT4", "QT5"])
}

fn order_facts() -> Outcome {
    let params = SuiteParams {
        max_len: Some(8),
        ..SuiteParams::default()
    };
    suite_holds(SuiteName::Theorem0, &params, &["I0-antisym", "T0-1", "T0-6"])?;
    suite_holds(
        SuiteName::Order,
        &params,
        &["lex-total", "lex-asym", "lex-trans", "mlex-total", "mlex-asym", "mlex-trans", "tally-trichotomy"],
    )
}

fn quine_observations() -> Outcome {
    let pool = words_up_to(3);
    let probes = words_up_to(4);
    let mut lists: Vec<Vec<Word>> = pool.iter().map(|x| vec![x.clone()]).collect();
    for _ in 1..3 {
        let longer: Vec<Vec<Word>> = lists
            .iter()
            .filter(|l| l.len() == lists.last().map_or(0, Vec::len))
            .flat_map(|l| pool.iter().map(move |x| [l.clone(), vec![x.clone()]].concat()))
            .collect();
        lists.extend(longer);
    }
    ensure(lists.len() == 14 + 196 + 2744, || format!("{} lists", lists.len()))?;
    for list in &lists {
        let code = quine_encode(list).map_err(|e| e.to_string())?;
        for y in &probes {
            ensure(quine_member(y, &code) == list.contains(y), || format!("quine_member({y}, {code}) for {list:?}"))?;
        }
    }
    Ok(())
}

fn translated_suites() -> Outcome {
    let params = SuiteParams::default();
    suite_holds(SuiteName::AstPlus, &params, &["NULL+", "ADJ+"])?;
    suite_holds(SuiteName::AstExtStar, &params, &["NULL*", "ADJ-variant*", "EXT*"])?;
    suite_holds(SuiteName::Ps0Star, &params, &["(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"])?;
    suite_holds(
        SuiteName::Ps0ExtStarStar,
        &params,
        &["(i**)", "(ii**)", "(iii**)", "(iv**)", "(v**)", "(vi**)", "(EXT**)"],
    )
}

fn arithmetization() -> Outcome {
    let t = SuiteParams {
        max_len: Some(6),
        ..SuiteParams::default()
    };
    suite_holds(SuiteName::ArithT, &t, &["t0", "t1", "t2", "t3", "t4", "t5", "t6", "t7", "t8", "t9"])?;
    let q = SuiteParams {
        max_len: Some(10),
        ..SuiteParams::default()
    };
    suite_holds(SuiteName::ArithQ, &q, &["Q1", "Q2", "Q3", "Q4", "Q5", "Q6", "Q7"])?;
    let words = words_up_to(8);
    let nums: Vec<_> = words.iter().map(word_num).collect();
    for (x, m) in words.iter().zip(&nums) {
        for (y, n) in words.iter().zip(&nums) {
            let xy = word_num(&x.concat(y));
            ensure(xy == num_concat(m, n), || format!("num({x}{y}) = {xy}, concat of numbers gives {}", num_concat(m, n)))?;
        }
    }
    Ok(())
}

fn dual_evaluators() -> Outcome {
    common::parser_disagreement(12).map_or(Ok(()), Err)
}

fn parser_round_trip() -> Outcome {
    let target = Signature::target();
    for c in CORPUS {
        let f = c.parse().map_err(|e| format!("{}: {e}", c.id))?;
        let printed = print_formula(&f);
        let squash = |s: &str| s.split_whitespace().collect::<String>();
        ensure(squash(&printed) == squash(c.text), || format!("{} prints as {printed}", c.id))?;
        let again = parse_formula(&printed, &c.signature()).map_err(|e| format!("{}: {e}", c.id))?;
        ensure(again == f, || format!("{} does not reparse to the same tree", c.id))?;
        let mut images = Vec::new();
        match c.sig {
            "set" => images.extend([translate_plus(&f), translate_star(&f)]),
            "ps0'" => images.extend([
                translate_starstar(&f, EqualityMode::Identity),
                translate_starstar(&f, EqualityMode::Congruence),
            ]),
            "ps0" => images.push(translate_starstar(&flatten_ps0(&f), EqualityMode::Identity)),
            _ => {}
        }
        for g in images {
            let text = print_formula(&g);
            let back = parse_formula(&text, &target).map_err(|e| format!("image of {}: {e}", c.id))?;
            ensure(back == g, || format!("image of {} does not reparse: {text}", c.id))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("null set", 1, null_set),
        ("uniqueness of canonical codes on U12", 10, uniqueness),
        ("encode/decode round trip and brute-force agreement", 30, round_trip),
        ("permutation invariance of adjunction", 30, permutation_invariance),
        ("adjunction semantics", 60, adjunction_semantics),
        ("QT axioms on U6", 5, qt_axioms),
        ("order facts on U8", 30, order_facts),
        ("Quine coding membership", 10, quine_observations),
        ("translated suites", 120, translated_suites),
        ("arithmetization", 120, arithmetization),
        ("dual evaluator agreement on U12", 120, dual_evaluators),
        ("parser round trip on the corpus", 1, parser_round_trip),
    ];
    let mut failed = Vec::new();
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let verdict = match &outcome {
            Err(e) => format!("FAIL ({e})"),
            Ok(()) if elapsed >= limit => format!("FAIL (time limit {}s exceeded)", limit.as_secs()),
            Ok(()) => "PASS".to_string(),
        };
        println!("{verdict} criterion {}: {name} [{:.2}s / {}s]", k + 1, elapsed.as_secs_f64(), limit.as_secs());
        if !verdict.starts_with("PASS") {
            failed.push(k + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use twofactor::families::{build_family, family_witness_ratio, formula_toughness};
use twofactor::forbidden::is_pa_pb_free;
use twofactor::format::{parse_graph6, to_graph6};
use twofactor::harness::{
    enumerate_labeled_graphs, verify_lemma5, verify_main_theorem, verify_sharpness, CheckStatus, RecordPolicy,
    SharpnessOptions, TheoremOptions,
};
use twofactor::toughness::toughness_exact;
use twofactor::two_factor::{eta_of, find_tutte_pair_exhaustive, find_two_factor};
use twofactor::{Graph, Rational, VertexSet};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn sharpness_numbers() -> Outcome {
    let r = match verify_sharpness(1, 2, &SharpnessOptions::default()) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let all_checks = r.checks.iter().all(|c| c.status == CheckStatus::Pass);
    let pass = r.eta == -2
        && r.h == 6
        && r.witness_ratio == Rational::new(27, 16)
        && r.witness_ratio == Rational::integer(2).checked_sub(&Rational::new(5, 16)).unwrap()
        && !r.two_factor
        && all_checks
        && !r.violation;
    outcome(
        pass,
        format!(
            "G(1,2): n={} eta={} h={} ratio={} two_factor={} checks={}",
            r.n,
            r.eta,
            r.h,
            r.witness_ratio,
            r.two_factor,
            r.checks.len()
        ),
    )
}

fn formula_sweep() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (l, m) in [(1, 2), (1, 3), (2, 2), (3, 2)] {
        let fw = build_family(l, m).unwrap();
        let k = ((2 * l + 1) * (2 * m + 1)) as i64;
        let closed = Rational::new(2 * (k + 1) - (m as i64 + 3), k + 1);
        let ratio = family_witness_ratio(&fw);
        ok &= ratio.as_ref().is_ok_and(|r| *r == closed) && formula_toughness(l, m) == closed;
        parts.push(format!("({l},{m})={}", ratio.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string())));
    }
    let increasing = (1..=3).map(|l| formula_toughness(l, 2)).collect::<Vec<_>>().windows(2).all(|w| w[0] < w[1]);
    outcome(ok && increasing, format!("{} increasing_in_l={increasing}", parts.join(" ")))
}

fn two_p5_freeness() -> Outcome {
    let g = build_family(1, 2).unwrap().graph;
    let free55 = is_pa_pb_free(&g, 5, 5);
    let free410 = is_pa_pb_free(&g, 4, 10);
    outcome(free55 && !free410, format!("2P5-free={free55} (P4+P10)-free={free410}"))
}

fn main_theorem() -> Outcome {
    let stream = (3..=7).flat_map(|n| enumerate_labeled_graphs(n).unwrap());
    let r = verify_main_theorem("labeled n=3..7", stream, &TheoremOptions::default());
    let s = &r.summary;
    outcome(
        r.passed() && s.skipped == 0 && s.graphs == 2_097_152 + 32_768 + 1_024 + 64 + 8,
        format!(
            "graphs={} checked={} hypothesis={} skipped={} violations={}",
            s.graphs, s.checked, s.hypothesis_holds, s.skipped, s.violations
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut graphs: Vec<Graph> = labeled_up_to(6).collect();
    let exhaustive = graphs.len();
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..1000 {
        let n = rng.gen_range(7..=12);
        let p = rng.gen_range(0.3..0.9);
        graphs.push(random_graph(&mut rng, n, p));
    }
    let disagreements = graphs
        .par_iter()
        .filter(|g| {
            let gadget = find_two_factor(g);
            let criterion = find_tutte_pair_exhaustive(g).unwrap().is_none();
            gadget.is_some() != criterion || gadget.is_some_and(|f| !f.is_valid_in(g))
        })
        .count();
    let with_factor = graphs[exhaustive..].iter().filter(|g| find_two_factor(g).is_some()).count();
    outcome(
        disagreements == 0,
        format!("exhaustive={exhaustive} random=1000 (with 2-factor {with_factor}) disagreements={disagreements}"),
    )
}

fn eta_parity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut odd = 0;
    let mut mismatch = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let side: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
        let s = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v] == 0));
        let t = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v] == 1));
        let pair = eta_of(&g, &s, &t).unwrap();
        odd += (pair.eta % 2 != 0) as usize;
        mismatch += ((pair.eta, pair.h) != naive_eta(&g, &side)) as usize;
    }
    outcome(odd == 0 && mismatch == 0, format!("triples=10000 odd={odd} definition_mismatches={mismatch}"))
}

fn lemma5_suite() -> Outcome {
    let r = verify_lemma5("labeled n<=6", labeled_up_to(6), RecordPolicy::All);
    let tough = r.records.iter().filter(|rec| rec.lemma5.as_ref().is_some_and(|l| l.claim_s_and_t.is_some())).count();
    let s = &r.summary;
    outcome(
        r.passed() && s.skipped == 0,
        format!(
            "graphs={} without_2_factor={} three_halves_tough={tough} violations={}",
            s.graphs, s.hypothesis_holds, s.violations
        ),
    )
}

fn toughness_values() -> Outcome {
    let cases = [
        ("K5", Graph::complete(5), Rational::Infinite),
        ("C6", Graph::cycle(6), Rational::integer(1)),
        ("K1,3", Graph::star(3), Rational::new(1, 3)),
        ("P4", Graph::path(4), Rational::new(1, 2)),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, g, expected) in cases {
        let got = toughness_exact(&g).unwrap().value;
        let naive = match naive_toughness(&g) {
            None => Rational::Infinite,
            Some((p, q)) => Rational::new(p, q),
        };
        ok &= got == expected && naive == expected;
        parts.push(format!("t({name})={got}"));
    }
    outcome(ok, parts.join(" "))
}

fn graph6_round_trip() -> Outcome {
    let mut total = 0;
    let mut mismatches = 0;
    for g in labeled_up_to(6) {
        total += 1;
        mismatches += (parse_graph6(&to_graph6(&g)).ok() != Some(g)) as usize;
    }
    outcome(mismatches == 0, format!("graphs={total} mismatches={mismatches}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 sharpness numbers", sharpness_numbers),
        ("2 family formula sweep", formula_sweep),
        ("3 2P5-freeness of G(1,2)", two_p5_freeness),
        ("4 main theorem, labeled 3<=n<=7", main_theorem),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 eta parity", eta_parity),
        ("7 special pair properties", lemma5_suite),
        ("8 toughness values", toughness_values),
        ("9 graph6 round trip", graph6_round_trip),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let o = run();
        let secs = started.elapsed().as_secs_f64();
        println!("{} criterion {name}: {} [{secs:.1}s]", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += !o.pass as usize;
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

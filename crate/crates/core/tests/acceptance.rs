//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use knotcomp::complex::*;
use knotcomp::corpus::braid_corpus;
use knotcomp::cycles::{label2_components_turn, turn_stats};
use knotcomp::gradings::{
    euler_alexander_check, euler_homfly_check, HomflyEulerVariant, LabelingData,
};
use knotcomp::{
    close_braid, enumerate_cycles, BraidWord, Composer, Diagram, JaegerConvention, LaurentPoly,
    SignConvention, Var,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("valid polynomial literal")
}

fn corpus(max_len: usize) -> Vec<Diagram> {
    braid_corpus(max_len, 3).iter().map(close_braid).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!("took {elapsed:.2?}, budget {budget:?}")
    })
}

fn trefoil_table() -> Outcome {
    let start = Instant::now();
    let d = close_braid(&"1 1 1".parse::<BraidWord>().map_err(|e| e.to_string())?);
    let mut c = Composer::new();
    let terms = c
        .destabilized_terms(&d, SignConvention::Signed)
        .map_err(|e| e.to_string())?;
    let z = LaurentPoly::difference(Var::Q);
    let rows: [(&[usize], LaurentPoly); 4] = [
        (&[], &poly("q^-4") * &poly("a^-2*q^2 + a^-2*q^-2 - a^-4")),
        (&[1, 2, 5], &z * &poly("q^-3*a^-2")),
        (&[1, 3, 4], &z * &poly("q^-3*a^-2")),
        (&[1, 3, 5], &z.pow(3) * &poly("q^-3*a^-2")),
    ];
    ensure(terms.len() == rows.len(), || {
        format!("{} labelings, expected 4", terms.len())
    })?;
    for (edges, value) in &rows {
        let t = terms
            .iter()
            .find(|t| t.cycle.edges() == *edges)
            .ok_or_else(|| format!("no row for {edges:?}"))?;
        let got = t.value().try_poly().map_err(|e| e.to_string())?;
        ensure(&got == value, || format!("row {edges:?}: {got} != {value}"))?;
    }
    let total = c
        .composition_destabilized(&d, SignConvention::Signed)
        .map_err(|e| e.to_string())?;
    let want = poly("a^-2 + a^-2*q^-4 - a^-4*q^-4");
    ensure(total.try_poly().ok() == Some(want.clone()), || {
        format!("total {total} != {want}")
    })?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("4 rows and total {want}"))
}

fn destabilized_identity() -> Outcome {
    let start = Instant::now();
    let words = corpus(6);
    let mut c = Composer::new();
    for d in &words {
        let lhs = c
            .composition_destabilized(d, SignConvention::Signed)
            .map_err(|e| e.to_string())?;
        let rhs = c.destabilized_oracle(d).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{:?}: {lhs} != {rhs}", d.letters()))?;
    }
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("{} words", words.len()))
}

fn jaeger_identity() -> Outcome {
    let start = Instant::now();
    let words = corpus(5);
    let mut c = Composer::new();
    for d in &words {
        let lhs = c
            .composition_jaeger(d, JaegerConvention::default())
            .map_err(|e| e.to_string())?;
        let rhs = c.jaeger_oracle(d);
        ensure(lhs == rhs, || format!("{:?}: {lhs} != {rhs}", d.letters()))?;
    }
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!("{} words", words.len()))
}

fn alexander_identity() -> Outcome {
    let words = corpus(6);
    let mut c = Composer::new();
    for d in &words {
        let lhs = c
            .alexander_composition(d, SignConvention::Signed)
            .map_err(|e| e.to_string())?;
        let rhs = c.alexander_oracle(d).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{:?}: {lhs} != {rhs}", d.letters()))?;
    }
    Ok(format!("{} words", words.len()))
}

fn combinatorial_identities() -> Outcome {
    let words = corpus(6);
    let mut labelings = 0;
    for d in &words {
        let tag = || format!("{:?}", d.letters());
        let b = d.strand_count() as i64;
        ensure(
            d.rotation_number() == -b && d.seifert_circles().circles.len() as i64 == b,
            || format!("{}: rotation number", tag()),
        )?;
        let n = d.component_count() as i64;
        ensure(
            (d.writhe() + d.marked_rotation_number() - n - 1).rem_euclid(2) == 0,
            || format!("{}: parity", tag()),
        )?;
        for z in enumerate_cycles(d, false) {
            let st = turn_stats(d, &z).map_err(|e| e.to_string())?;
            ensure(st.diagonals() % 2 == 0, || {
                format!("{} {z}: odd diagonal count", tag())
            })?;
        }
        for z in enumerate_cycles(d, true) {
            labelings += 1;
            let l = LabelingData::new(d, &z).map_err(|e| e.to_string())?;
            ensure(l.s1 == l.w - l.w2, || {
                format!("{} {z}: s1 != w - w2", tag())
            })?;
            ensure(l.w1 - l.w2 == l.s1 - l.s2, || {
                format!("{} {z}: w1 - w2 != s1 - s2", tag())
            })?;
            if n == 1 && !z.is_empty() {
                let turns = label2_components_turn(d, &z).map_err(|e| e.to_string())?;
                ensure(turns.iter().all(|&t| t), || {
                    format!("{} {z}: a label-2 component has no turn", tag())
                })?;
            }
        }
    }
    Ok(format!("{} words, {labelings} labelings", words.len()))
}

fn euler_characteristics() -> Outcome {
    let knots: Vec<Diagram> = corpus(6)
        .into_iter()
        .filter(|d| d.component_count() == 1)
        .collect();
    let mut c = Composer::new();
    for d in &knots {
        let a = euler_alexander_check(d, &mut c).map_err(|e| e.to_string())?;
        ensure(a.pass(), || {
            format!("{:?} alexander: {}", d.letters(), a.to_json())
        })?;
        let h = euler_homfly_check(d, HomflyEulerVariant::FromShifts, &mut c)
            .map_err(|e| e.to_string())?;
        ensure(h.pass(), || {
            format!("{:?} homfly: {}", d.letters(), h.to_json())
        })?;
    }
    Ok(format!("{} knots, both checks", knots.len()))
}

fn chain_complex_lab() -> Outcome {
    const CUTOFF: i64 = 12;
    let start = Instant::now();
    let err = |e: knotcomp::KnotError| e.to_string();

    // two-loop resolution
    let s = common::braid(2, "1 1");
    let res = [Resolution::Singular; 2];
    let lift = resolution_homology(&s, &res, CUTOFF).map_err(err)?;
    let whole = resolved_cube_homology(&s, &res, CUTOFF).map_err(err)?;
    let unknot = resolved_cube_homology(&common::braid(1, ""), &[], CUTOFF).map_err(err)?;
    let total = lift
        .values()
        .fold(GradedDims::new(CUTOFF, vec![0, 1]), |acc, h| acc.sum(h));
    ensure(lift.len() == 3, || {
        format!("{} cycles in the resolution", lift.len())
    })?;
    ensure(total.dims == whole.sum(&unknot).sum(&unknot).dims, || {
        "resolution total differs".into()
    })?;

    // sl(-1)
    for (strands, word, n) in [(2, "1 1 1", 1), (2, "1 1", 2), (2, "1 -1", 2)] {
        let h = sl_minus1_homology(&common::braid(strands, word), CUTOFF).map_err(err)?;
        ensure(h.dims == common::unlink_sl_minus1(n, CUTOFF), || {
            format!("sl(-1) of {word}")
        })?;
    }

    // per-cycle fixtures
    let report = appendix_fixtures().map_err(err)?;
    if let Some(bad) = report.checks.iter().find(|c| !c.pass) {
        return Err(format!(
            "fixture {} {}: {}",
            bad.fixture, bad.check, bad.detail
        ));
    }

    // randomized unit cancellation
    let mut rng = StdRng::seed_from_u64(7);
    for case in 0..200 {
        let (base, planted, _) = common::planted_units(&mut rng);
        let reduced = unit_cancel(&planted).map_err(err)?;
        let want = graded_homology(&base, 0, 10).map_err(err)?;
        let got = graded_homology(&reduced, 0, 10).map_err(err)?;
        ensure(got.dims == want.dims, || {
            format!("unit cancellation case {case}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "resolution, sl(-1), {} fixture checks, 200 cancellations",
        report.checks.len()
    ))
}

fn skein_pairs() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let strands = rng.gen_range(2..=3usize);
        let len = rng.gen_range(1..=7);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let at = rng.gen_range(0..len);
        ensure(common::skein_holds(strands, &letters, at), || {
            format!("{strands} strands {letters:?} at {at}")
        })?;
    }
    Ok("200 pairs".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 trefoil golden table", trefoil_table),
        ("2 destabilized composition identity", destabilized_identity),
        ("3 Jaeger identity", jaeger_identity),
        ("4 Alexander identity", alexander_identity),
        ("5 combinatorial identities", combinatorial_identities),
        ("6 Euler characteristics", euler_characteristics),
        ("7 chain-complex lab", chain_complex_lab),
        ("8 skein relation", skein_pairs),
    ];
    let outcomes: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                s.spawn(move || {
                    let start = Instant::now();
                    let out = f();
                    (out, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| (Err("panicked".into()), Duration::ZERO))
            })
            .collect()
    });
    let mut failed = 0;
    for ((name, _), (out, t)) in criteria.iter().zip(outcomes) {
        match out {
            Ok(detail) => println!("PASS criterion {name} ({detail}; {:.2}s)", t.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every check is an exact integer (or set) equality over GF(32003) on
//! seeds 1..=5; there is no numeric tolerance anywhere. Runtime targets are
//! printed next to the measured time but not enforced, since they are
//! stated for a laptop rather than for this test harness.

use homlab::fat::FatScheme;
use homlab::field::PrimeField;
use homlab::ideal::{growth_class, span_ideal, GrowthClass};
use homlab::net::*;
use homlab::report::{run_claims, ClaimVerdict, SessionConfig};
use homlab::types::*;
use std::collections::BTreeMap;
use std::time::Instant;

const SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn ty(s: &str) -> PlaneType {
    s.parse().unwrap()
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, observed: T) -> Outcome {
    ensure(expected == observed, || {
        format!("{what}: expected {expected:?}, observed {observed:?}")
    })
}

fn stripped_steps(c: &TransformChain) -> Vec<String> {
    c.steps.iter().map(|t| t.stripped().to_string()).collect()
}

fn c1_hudson_chains() -> Outcome {
    let a = hudson_test(&ty("8;5,3^2,2^5")).map_err(|e| e.to_string())?;
    eq(
        "proper chain",
        vec!["8;5,3^2,2^5", "5;2^6", "4;2^3,1^3", "2;1^3", "1;"],
        stripped_steps(&a).iter().map(|s| s.as_str()).collect(),
    )?;
    eq("proper verdict", Verdict::Proper, a.verdict)?;
    let b = hudson_test(&ty("12;8,4,3^7")).map_err(|e| e.to_string())?;
    let sb = stripped_steps(&b);
    eq(
        "improper chain",
        vec!["12;8,4,3^7", "9;5,3^6,1", "7;3^5,1^3", "5;3^2,1^6"],
        sb[..4].iter().map(|s| s.as_str()).collect(),
    )?;
    ensure(b.last().mults().iter().any(|&m| m < 0), || {
        "last step has no negative entry".into()
    })?;
    eq(
        "improper verdict",
        Verdict::Improper(ImproperReason::NegativeMultiplicity),
        b.verdict,
    )
}

fn c2_enumeration() -> Outcome {
    let five = enumerate_homaloidal(5, true).map_err(|e| e.to_string())?;
    eq(
        "degree 5",
        vec![ty("5;4,1^8"), ty("5;3,2^3,1^3"), ty("5;2^6")],
        five,
    )?;
    for d in 2..=9 {
        let all = enumerate_homaloidal(d, true).map_err(|e| e.to_string())?;
        for gap in [2, 3, 4] {
            let mut fam = match classify_family(d, gap) {
                Ok(f) => f,
                Err(TypeError::DegreeOutOfRange { .. }) => continue,
                Err(e) => return Err(e.to_string()),
            };
            let mut slice: Vec<PlaneType> =
                all.iter().filter(|t| t.mu(0) == d - gap).cloned().collect();
            fam.sort();
            slice.sort();
            eq(&format!("d={d} gap={gap}"), slice, fam)?;
        }
    }
    Ok(())
}

fn c3_fat_dims() -> Outcome {
    for seed in SEEDS {
        let p = FatScheme::from_type(gf(), seed, &ty("5;2^6"), false)
            .and_then(|s| s.profile(None))
            .map_err(|e| e.to_string())?;
        eq(
            &format!("seed {seed} dims"),
            (3, 10, 18, 5),
            (p.dim(5), p.dim(6), p.e, p.regularity),
        )?;
        eq(&format!("seed {seed} gens"), vec![(5, 3), (6, 1)], p.gens)?;
    }
    Ok(())
}

fn c4_resolution() -> Outcome {
    for d in 4..=8 {
        for t in enumerate_homaloidal(d, true).unwrap() {
            for seed in SEEDS {
                let net = build_net(&t, seed, gf()).map_err(|e| format!("{t}: {e}"))?;
                let r = resolution_profile(&net).map_err(|e| e.to_string())?;
                let d = d as usize;
                let s = usize::from(t.mu(0) == d as i64 - 1);
                eq(&format!("{t} seed {seed} s"), s, r.s)?;
                let mut n = BTreeMap::from([(d, 3)]);
                if d - 4 + s > 0 {
                    n.insert(d + 1, d - 4 + s);
                }
                eq(&format!("{t} seed {seed} generators"), n, r.n)?;
                let mut syz = BTreeMap::from([(d + 2, d - 2)]);
                if s > 0 {
                    syz.insert(d + 1, s);
                }
                eq(&format!("{t} seed {seed} syzygies"), syz, r.syz)?;
            }
        }
    }
    Ok(())
}

fn c5_square() -> Outcome {
    for lit in ["5;2^6", "6;4,2^4,1^3", "7;3^4,2^3"] {
        for seed in SEEDS {
            let net = build_net(&ty(lit), seed, gf()).map_err(|e| e.to_string())?;
            let d = net.degree();
            let p = square_profile(&net).map_err(|e| e.to_string())?;
            eq(
                &format!("{lit} seed {seed} generators"),
                d + 5,
                p.generators,
            )?;
            eq(
                &format!("{lit} seed {seed} syzygies"),
                BTreeMap::from([(d + 2, d + 7)]),
                p.syz,
            )?;
            eq(
                &format!("{lit} seed {seed} second"),
                BTreeMap::from([(d + 3, 3)]),
                p.second_syz,
            )?;
        }
    }
    Ok(())
}

fn c6_saturation() -> Outcome {
    for seed in SEEDS {
        let rep = |lit: &str| {
            let net = build_net(&ty(lit), seed, gf()).map_err(|e| e.to_string())?;
            saturation_report(&net, None).map_err(|e| e.to_string())
        };
        let a = rep("4;2^3,1^3")?;
        ensure(a.saturated && a.j_equals_sat, || {
            format!("(4;2^3,1^3) seed {seed}: {a:?}")
        })?;
        let b = rep("5;2^6")?;
        ensure(!b.saturated && b.j_equals_sat, || {
            format!("(5;2^6) seed {seed}: {b:?}")
        })?;
        eq(&format!("(5;2^6) seed {seed} gap"), vec![(6, 1)], b.gap)?;
        for lit in ["6;4,2^4,1^3", "7;5,2^5,1^3"] {
            let r = rep(lit)?;
            ensure(r.saturated, || {
                format!("({lit}) seed {seed} not saturated: {r:?}")
            })?;
        }
    }
    Ok(())
}

fn c7_linear_block() -> Outcome {
    for (lit, c) in [
        ("6;4,2^4,1^3", 2),
        ("7;5,2^5,1^3", 2),
        ("7;4,3^3,1^5", 3),
        ("8;5,3^3,2^2,1^3", 3),
    ] {
        for seed in SEEDS {
            let net = build_net(&ty(lit), seed, gf()).map_err(|e| e.to_string())?;
            let lb = linear_block(&net).map_err(|e| e.to_string())?;
            eq(
                &format!("({lit}) seed {seed}"),
                (c, c),
                (lb.c, lb.reextracted_c),
            )?;
        }
    }
    Ok(())
}

fn growth_of_piece(s: &FatScheme, t: usize) -> Result<GrowthClass, String> {
    let piece = s.graded_piece(t);
    let mut ideal = span_ideal(s.field(), std::slice::from_ref(&piece), t);
    growth_class(&mut ideal, None).map_err(|e| e.to_string())
}

fn c8_examples() -> Outcome {
    let cases: [(&str, usize, &[usize], &[usize], bool, bool); 3] = [
        ("4^2,1^10", 7, &[7, 8], &[13, 14, 15, 16], true, false),
        ("4,2^6,1^2", 7, &[7], &[13, 14], false, true),
        ("4,3^6,1^2", 9, &[9], &[17, 18], false, true),
    ];
    for (lit, s, jdeg, jjdeg, j_curve, shaped) in cases {
        let m: MultiplicitySet = lit.parse().unwrap();
        for seed in SEEDS {
            let tag = format!("({lit}) seed {seed}");
            let j = FatScheme::from_set(gf(), seed, &m, false).map_err(|e| e.to_string())?;
            let jp = j.profile(None).map_err(|e| e.to_string())?;
            eq(
                &format!("{tag} J degrees"),
                jdeg.to_vec(),
                jp.generator_degrees(),
            )?;
            if j_curve {
                ensure(
                    matches!(growth_of_piece(&j, s)?, GrowthClass::CurveComponent(_)),
                    || format!("{tag}: (J_{s}) has no fixed curve"),
                )?;
            }
            let jj = j.symbolic_square();
            let jjp = jj.profile(None).map_err(|e| e.to_string())?;
            eq(
                &format!("{tag} doubled degrees"),
                jjdeg.to_vec(),
                jjp.generator_degrees(),
            )?;
            let dd = 2 * s - 1;
            if shaped {
                eq(
                    &format!("{tag} doubled counts"),
                    vec![(dd, 3), (dd + 1, dd - 4)],
                    jjp.gens.clone(),
                )?;
                let syz = fat_syzygy_counts(&jj, &jjp.gens, dd..=dd + 3);
                eq(
                    &format!("{tag} doubled syzygies"),
                    BTreeMap::from([(dd + 2, dd - 2)]),
                    syz,
                )?;
            }
            ensure(
                matches!(growth_of_piece(&jj, dd)?, GrowthClass::CurveComponent(_)),
                || format!("{tag}: doubled piece has no fixed curve"),
            )?;
        }
    }
    Ok(())
}

fn c9_principal_curves() -> Outcome {
    for s in [3usize, 5] {
        for seed in SEEDS {
            let tag = format!("s={s} seed {seed}");
            let net = doubled_net(s, seed, gf()).map_err(|e| e.to_string())?;
            // an error here is a 1-dimensionality failure of some J_i piece
            let tr = principal_curves(&net).map_err(|e| format!("{tag}: {e}"))?;
            ensure(tr.independent && tr.spans_net, || {
                format!("{tag}: products do not span I_(2s-1)")
            })?;
            let r = verify_non_saturated_structure(&tr, &net, None).map_err(|e| e.to_string())?;
            eq(
                &format!("{tag} syzygies"),
                BTreeMap::from([(3 * s - 1, 3)]),
                r.syz.clone(),
            )?;
            ensure(r.phi_psi_zero && r.gens_phi_zero, || {
                format!("{tag}: complex identities fail")
            })?;
            ensure(r.sat_equals_extension, || {
                format!("{tag}: I^sat differs from (I, f1 f2 f3)")
            })?;
            eq(
                &format!("{tag} extra generators"),
                vec![(3 * (s - 1), 1)],
                r.extra_sat_generators,
            )?;
        }
    }
    Ok(())
}

fn c10_initial_degree() -> Outcome {
    for seed in SEEDS {
        let m: MultiplicitySet = "2^4,1^4".parse().unwrap();
        let p = FatScheme::from_set(gf(), seed, &m, false)
            .and_then(|j| j.profile(None))
            .map_err(|e| e.to_string())?;
        eq(
            &format!("(2^4,1^4) seed {seed} indeg, e"),
            (Some(5), 16),
            (p.indeg, p.e),
        )?;
        ensure(p.dim(5) >= 5, || {
            format!("(2^4,1^4) seed {seed}: dim J_5 = {}", p.dim(5))
        })?;
        let m: MultiplicitySet = "4,2^6,1^2".parse().unwrap();
        let p = FatScheme::from_set(gf(), seed, &m, false)
            .and_then(|j| j.profile(None))
            .map_err(|e| e.to_string())?;
        eq(&format!("(4,2^6,1^2) seed {seed} e"), 30, p.e)?;
    }
    Ok(())
}

fn c11_properties() -> Outcome {
    let cfg = SessionConfig::default();
    let reports = run_claims(&["properties".into()], &cfg).map_err(|e| e.to_string())?;
    let r = &reports[0];
    ensure(r.verdict == ClaimVerdict::Confirmed, || {
        r.failures()
            .map(|c| {
                format!(
                    "{}: expected {}, observed {}",
                    c.name, c.expected, c.observed
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    })
}

fn main() {
    let criteria: [(&str, &str, fn() -> Outcome); 11] = [
        ("1 Hudson chains", "< 1 ms", c1_hudson_chains),
        (
            "2 enumeration vs closed-form families",
            "< 1 s",
            c2_enumeration,
        ),
        ("3 fat-point dimensions of (5;2^6)", "< 1 s", c3_fat_dims),
        (
            "4 resolution pattern, proper d = 4..8",
            "< 5 s per type",
            c4_resolution,
        ),
        ("5 counts of (J_{d+1})", "< 10 s", c5_square),
        ("6 saturation dichotomy", "< 10 s", c6_saturation),
        ("7 linear-block dichotomy", "< 10 s", c7_linear_block),
        ("8 sub-homaloidal example suite", "< 30 s", c8_examples),
        (
            "9 principal curves and non-saturated structure",
            "< 30 s",
            c9_principal_curves,
        ),
        (
            "10 initial degree and multiplicity",
            "< 5 s",
            c10_initial_degree,
        ),
        ("11 property suite", "-", c11_properties),
    ];
    let mut failed = Vec::new();
    for (name, target, run) in criteria {
        let t0 = Instant::now();
        let outcome = run();
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => {
                println!("PASS  criterion {name}  [exact, seeds 1..5, {secs:.2}s, target {target}]")
            }
            Err(why) => {
                println!("FAIL  criterion {name}  [exact, seeds 1..5, {secs:.2}s, target {target}]: {why}");
                failed.push(name);
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

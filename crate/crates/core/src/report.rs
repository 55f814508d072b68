//! Reproduction suites: session configuration, the claim registry, and
//! rendering of claim reports and tables for the `homlab` CLI.
//!
//! Every claim is a pure function of `(claim id, prime, seed)`; batches run
//! on a rayon pool and are merged in (claim id, seed) order, so a report is
//! byte-identical across runs with the same [`SessionConfig`].

use crate::fat::{FatError, FatScheme};
use crate::field::{FieldError, PrimeField, DEFAULT_PRIME};
use crate::ideal::{growth_class, saturate, span_ideal, GradedPiece, GrowthClass, IdealError};
use crate::net::{
    build_net, build_net_with, doubled_net, fat_syzygy_counts, linear_block, net_syzygy_counts,
    principal_curves, resolution_profile, saturation_report, square_profile,
    verify_non_saturated_structure, NetError,
};
use crate::types::{
    classify_family, double, enumerate_homaloidal, exceptional_proper_test, halve, hudson_test,
    is_exceptional, is_homaloidal, is_sub_homaloidal, ImproperReason, MultiplicitySet, ParseError,
    PlaneType, TypeError, Verdict,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

/// Largest degree `enumerate` and `experiment` accept.
pub const CLI_DEGREE_CAP: i64 = 12;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("at least one seed is required")]
    NoSeeds,
    #[error("bounds must be positive")]
    ZeroBound,
    #[error("unknown claim id `{0}`; see claims.md for the list")]
    UnknownClaim(String),
    #[error("unknown output format `{0}` (expected json, csv or text)")]
    UnknownFormat(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Net(#[from] NetError),
    #[error(transparent)]
    Fat(#[from] FatError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("bad scheme literal: {0}")]
    Scheme(String),
    #[error("degree {0} exceeds the cap {CLI_DEGREE_CAP}")]
    DegreeCap(i64),
    #[error("bad degree range `{0}` (expected A..B)")]
    Range(String),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error("csv: {0}")]
    Csv(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = ReportError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(ReportError::UnknownFormat(s.into())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub field: PrimeField,
    pub seeds: Vec<u64>,
    /// saturation inspection bound; `None` means 2d per net
    pub bound: Option<usize>,
    pub format: Format,
    /// worker threads; `None` lets rayon decide
    pub jobs: Option<usize>,
    /// replaces a claim's default type list where that makes sense
    pub types: Vec<PlaneType>,
    /// replaces the default s ∈ {3, 5} of the principal-curve claims
    pub s: Vec<usize>,
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            field: PrimeField::default(),
            seeds: (1..=5).collect(),
            bound: None,
            format: Format::Json,
            jobs: None,
            types: Vec::new(),
            s: Vec::new(),
        }
    }
}

impl SessionConfig {
    pub fn new(prime: u32, seeds: Vec<u64>, bound: Option<usize>) -> Result<Self, ReportError> {
        if seeds.is_empty() {
            return Err(ReportError::NoSeeds);
        }
        if bound == Some(0) {
            return Err(ReportError::ZeroBound);
        }
        Ok(SessionConfig {
            field: PrimeField::new(prime as u64)?,
            seeds,
            bound,
            ..Default::default()
        })
    }

    pub fn prime(&self) -> u32 {
        self.field.modulus()
    }

    fn first_seed(&self) -> u64 {
        self.seeds[0]
    }

    fn pool(&self) -> Result<rayon::ThreadPool, ReportError> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.unwrap_or(0))
            .build()
            .map_err(|e| ReportError::Pool(e.to_string()))
    }
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// stated in the source literature
    Stated,
    /// computed here by an independent route (brute force, closed form)
    Computed,
    /// an algebraic identity
    Identity,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub provenance: Provenance,
    pub expected: Value,
    pub observed: Value,
    pub ok: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimVerdict {
    Confirmed,
    Falsified,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim: &'static str,
    pub seed: Option<u64>,
    pub prime: u32,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub verdict: ClaimVerdict,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

/// Accumulates the checks of one claim run.
#[derive(Debug, Default)]
struct Outcome {
    inputs: Value,
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(inputs: Value) -> Self {
        Outcome {
            inputs,
            ..Default::default()
        }
    }

    fn eq<T: Serialize>(
        &mut self,
        name: impl Into<String>,
        p: Provenance,
        expected: T,
        observed: T,
    ) {
        let expected = serde_json::to_value(expected).expect("plain data");
        let observed = serde_json::to_value(observed).expect("plain data");
        self.checks.push(Check {
            name: name.into(),
            provenance: p,
            ok: expected == observed,
            expected,
            observed,
        });
    }

    fn holds(&mut self, name: impl Into<String>, p: Provenance, what: bool) {
        self.eq(name, p, true, what);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Records a failed computation as a failing check.
    fn error(&mut self, name: impl Into<String>, e: impl std::fmt::Display) {
        let name = name.into();
        self.checks.push(Check {
            name: name.clone(),
            provenance: Provenance::Computed,
            expected: json!("no error"),
            observed: json!(e.to_string()),
            ok: false,
        });
        self.notes.push(format!("{name}: {e}"));
    }
}

type ClaimFn = fn(&SessionConfig, u64) -> Result<Outcome, ReportError>;

pub struct ClaimSpec {
    pub id: &'static str,
    pub summary: &'static str,
    /// runs once per configured seed; otherwise once per session
    pub seeded: bool,
    run: ClaimFn,
}

pub static CLAIMS: &[ClaimSpec] = &[
    ClaimSpec {
        id: "doubling-a",
        summary: "(4^2,1^10): generator degrees and fixed curves of J and its symbolic square",
        seeded: true,
        run: doubling_a,
    },
    ClaimSpec {
        id: "doubling-b",
        summary:
            "(4,2^6,1^2): the symbolic square has the net-type resolution counts yet a fixed curve",
        seeded: true,
        run: doubling_b,
    },
    ClaimSpec {
        id: "doubling-c",
        summary: "(4,3^6,1^2): same pattern in degree 17",
        seeded: true,
        run: doubling_c,
    },
    ClaimSpec {
        id: "enumeration",
        summary: "proper types by brute force agree with the closed-form families",
        seeded: false,
        run: enumeration,
    },
    ClaimSpec {
        id: "fat-points-dims",
        summary: "Hilbert function, multiplicity, regularity and generators of J for (5;2^6)",
        seeded: true,
        run: fat_points_dims,
    },
    ClaimSpec {
        id: "hudson-chains",
        summary: "quadratic-transform chains and proper/improper verdicts",
        seeded: false,
        run: hudson_chains,
    },
    ClaimSpec {
        id: "initial-degree",
        summary: "indeg J = s and e = (s+3)(s-1)/2 for sub-homaloidal sets",
        seeded: true,
        run: initial_degree,
    },
    ClaimSpec {
        id: "linear-block",
        summary: "linear block of the syzygy matrix has dimension 2 iff mu1 >= d-2",
        seeded: true,
        run: linear_block_claim,
    },
    ClaimSpec {
        id: "non-saturated-structure",
        summary: "resolution, explicit complex and saturation of the principal-curve base ideals",
        seeded: true,
        run: non_saturated_structure,
    },
    ClaimSpec {
        id: "principal-curves",
        summary: "three principal curves of degree s-1 whose products span I_{2s-1}",
        seeded: true,
        run: principal_curves_claim,
    },
    ClaimSpec {
        id: "properties",
        summary: "Hilbert-function shape, seed independence, saturation idempotence",
        seeded: false,
        run: properties,
    },
    ClaimSpec {
        id: "resolution",
        summary: "generator and syzygy counts of J around degree d for proper types",
        seeded: true,
        run: resolution,
    },
    ClaimSpec {
        id: "saturation",
        summary: "base ideal saturation dichotomy and I^sat = J",
        seeded: true,
        run: saturation,
    },
    ClaimSpec {
        id: "square-resolution",
        summary: "(J_{d+1}): d+5 generators, d+7 linear syzygies, 3 second syzygies",
        seeded: true,
        run: square_resolution,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn lookup(id: &str) -> Result<&'static ClaimSpec, ReportError> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| ReportError::UnknownClaim(id.into()))
}

/// Runs `ids` (or every claim for "all") across the configured seeds.
pub fn run_claims(ids: &[String], cfg: &SessionConfig) -> Result<Vec<ClaimReport>, ReportError> {
    let mut specs: Vec<&ClaimSpec> = if ids.iter().any(|i| i == "all") {
        CLAIMS.iter().collect()
    } else {
        ids.iter().map(|i| lookup(i)).collect::<Result<_, _>>()?
    };
    specs.sort_by_key(|c| c.id);
    specs.dedup_by_key(|c| c.id);
    let mut jobs: Vec<(&ClaimSpec, Option<u64>)> = Vec::new();
    for c in specs {
        if c.seeded {
            let mut seeds = cfg.seeds.clone();
            seeds.sort_unstable();
            seeds.dedup();
            jobs.extend(seeds.into_iter().map(|s| (c, Some(s))));
        } else {
            jobs.push((c, None));
        }
    }
    let pool = cfg.pool()?;
    Ok(pool.install(|| {
        jobs.par_iter()
            .map(|&(c, seed)| run_one(c, seed, cfg))
            .collect()
    }))
}

fn run_one(c: &'static ClaimSpec, seed: Option<u64>, cfg: &SessionConfig) -> ClaimReport {
    let (inputs, checks, mut notes) = match (c.run)(cfg, seed.unwrap_or_else(|| cfg.first_seed())) {
        Ok(o) => (o.inputs, o.checks, o.notes),
        Err(e) => {
            let mut o = Outcome::new(Value::Null);
            o.error("computation", &e);
            (o.inputs, o.checks, o.notes)
        }
    };
    let verdict = if checks.is_empty() {
        ClaimVerdict::Skipped
    } else if checks.iter().all(|c| c.ok) {
        ClaimVerdict::Confirmed
    } else {
        ClaimVerdict::Falsified
    };
    if verdict == ClaimVerdict::Skipped && notes.is_empty() {
        notes.push("no applicable inputs".into());
    }
    ClaimReport {
        claim: c.id,
        seed,
        prime: cfg.prime(),
        inputs,
        checks,
        verdict,
        notes,
    }
}

pub fn any_falsified(reports: &[ClaimReport]) -> bool {
    reports.iter().any(|r| r.verdict == ClaimVerdict::Falsified)
}

// ---------------------------------------------------------------- helpers

fn ty(s: &str) -> PlaneType {
    s.parse().expect("built-in type literal")
}

fn set(s: &str) -> MultiplicitySet {
    s.parse().expect("built-in multiplicity literal")
}

fn strs<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn proper_types(degrees: std::ops::RangeInclusive<i64>) -> Result<Vec<PlaneType>, ReportError> {
    let mut out = Vec::new();
    for d in degrees {
        out.extend(enumerate_homaloidal(d, true)?);
    }
    Ok(out)
}

/// The override list if given, else `default`.
fn types_or(cfg: &SessionConfig, default: Vec<PlaneType>) -> Vec<PlaneType> {
    if cfg.types.is_empty() {
        default
    } else {
        cfg.types.clone()
    }
}

fn s_values(cfg: &SessionConfig) -> Vec<usize> {
    if cfg.s.is_empty() {
        vec![3, 5]
    } else {
        cfg.s.clone()
    }
}

fn growth_name(g: GrowthClass) -> &'static str {
    match g {
        GrowthClass::FinitelySupportedQuotient => "finite",
        GrowthClass::CurveComponent(_) => "curve",
    }
}

/// Growth class of the ideal generated by the degree-t piece of `scheme`.
fn piece_growth(scheme: &FatScheme, t: usize) -> Result<GrowthClass, ReportError> {
    let piece = scheme.graded_piece(t);
    let mut ideal = span_ideal(scheme.field(), std::slice::from_ref(&piece), t);
    Ok(growth_class(&mut ideal, None)?)
}

/// Runs `f` on each type, turning "not applicable" errors into notes.
fn per_type<F>(o: &mut Outcome, types: &[PlaneType], f: F)
where
    F: Fn(&PlaneType, &mut Outcome) -> Result<(), ReportError> + Sync,
{
    let parts: Vec<Outcome> = types
        .par_iter()
        .map(|t| {
            let mut part = Outcome::default();
            match f(t, &mut part) {
                Ok(()) => {}
                Err(ReportError::Net(NetError::NotProper(..)))
                | Err(ReportError::Net(NetError::NotApplicable(_))) => {
                    part.note(format!("{t}: not applicable, skipped"));
                }
                Err(ReportError::Type(e @ TypeError::NotHomaloidal(_))) => {
                    part.note(format!("{t}: {e}, skipped"));
                }
                Err(e) => part.error(format!("{t}"), e),
            }
            part
        })
        .collect();
    for p in parts {
        o.checks.extend(p.checks);
        o.notes.extend(p.notes);
    }
}

use Provenance::{Computed, Identity, Stated};

// ---------------------------------------------------------------- claims

fn hudson_chains(_: &SessionConfig, _: u64) -> Result<Outcome, ReportError> {
    let mut o = Outcome::new(json!({
        "types": ["8;5,3^2,2^5", "12;8,4,3^7", "13;8^2,2^10", "5;4,1^8"],
        "exceptional": ["1;1^2", "4;2^3,1^5", "5;3^2,1^8", "2;1^4"],
    }));
    let steps = |c: &crate::types::TransformChain| -> Vec<String> {
        c.steps.iter().map(|t| t.stripped().to_string()).collect()
    };

    let a = hudson_test(&ty("8;5,3^2,2^5"))?;
    let sa = steps(&a);
    o.eq(
        "(8;5,3^2,2^5) first steps",
        Stated,
        strs(&["8;5,3^2,2^5", "5;2^6", "4;2^3,1^3"]),
        sa.iter().take(3).cloned().collect(),
    );
    o.eq(
        "(8;5,3^2,2^5) chain",
        Computed,
        strs(&["8;5,3^2,2^5", "5;2^6", "4;2^3,1^3", "2;1^3", "1;"]),
        sa,
    );
    o.eq("(8;5,3^2,2^5) verdict", Stated, Verdict::Proper, a.verdict);

    let b = hudson_test(&ty("12;8,4,3^7"))?;
    let sb = steps(&b);
    o.eq(
        "(12;8,4,3^7) chain before the negative entry",
        Stated,
        strs(&["12;8,4,3^7", "9;5,3^6,1", "7;3^5,1^3", "5;3^2,1^6"]),
        sb.iter().take(4).cloned().collect(),
    );
    o.holds(
        "(12;8,4,3^7) final step has a negative entry",
        Stated,
        b.last().mults().iter().any(|&m| m < 0),
    );
    o.eq(
        "(12;8,4,3^7) verdict",
        Stated,
        Verdict::Improper(ImproperReason::NegativeMultiplicity),
        b.verdict,
    );

    let c = hudson_test(&ty("13;8^2,2^10"))?;
    o.holds("(13;8^2,2^10) is improper", Stated, !c.is_proper());

    let d = hudson_test(&ty("5;4,1^8"))?;
    let degs: Vec<i64> = d.steps.iter().map(|t| t.degree).collect();
    o.eq(
        "(5;4,1^8) degrees drop by one",
        Computed,
        vec![5, 4, 3, 2, 1],
        degs,
    );

    o.holds(
        "(7;3^4,1^3) is not homaloidal",
        Computed,
        !is_homaloidal(&ty("7;3^4,1^3")),
    );

    let e1 = exceptional_proper_test(&ty("1;1^2"))?;
    o.eq(
        "(1;1^2) exceptional chain verdict",
        Stated,
        Verdict::Proper,
        e1.verdict,
    );
    let e2 = exceptional_proper_test(&ty("4;2^3,1^5"))?;
    o.eq(
        "(4;2^3,1^5) exceptional chain verdict",
        Computed,
        Verdict::Proper,
        e2.verdict,
    );
    let e3 = exceptional_proper_test(&ty("5;3^2,1^8"))?;
    o.holds(
        "(5;3^2,1^8) exceptional but improper",
        Computed,
        !e3.is_proper(),
    );
    o.holds(
        "(2;1^4) is not exceptional",
        Computed,
        !is_exceptional(&ty("2;1^4")),
    );
    Ok(o)
}

fn enumeration(_: &SessionConfig, _: u64) -> Result<Outcome, ReportError> {
    let mut o = Outcome::new(json!({"degrees": [2, CLI_DEGREE_CAP], "gaps": [1, 2, 3, 4]}));
    let five: BTreeSet<String> = strs(&enumerate_homaloidal(5, true)?).into_iter().collect();
    let want: BTreeSet<String> = strs(&["5;4,1^8", "5;3,2^3,1^3", "5;2^6"])
        .into_iter()
        .collect();
    o.eq("proper types of degree 5", Stated, want, five);

    let all: BTreeMap<i64, Vec<PlaneType>> = (2..=CLI_DEGREE_CAP)
        .into_par_iter()
        .map(|d| enumerate_homaloidal(d, true).map(|v| (d, v)))
        .collect::<Result<_, _>>()?;
    let counts: Vec<usize> = all.values().map(|v| v.len()).collect();
    // from an independent Python enumeration
    o.eq(
        "proper counts for d = 2..12",
        Computed,
        vec![1, 1, 2, 3, 4, 5, 9, 10, 17, 19, 29],
        counts,
    );

    for gap in 1..=4 {
        let mut brute = BTreeMap::new();
        let mut family = BTreeMap::new();
        for (&d, list) in &all {
            let fam = match classify_family(d, gap) {
                Ok(f) => f,
                Err(TypeError::DegreeOutOfRange { .. }) => continue,
                Err(e) => return Err(e.into()),
            };
            let mut slice: Vec<String> = strs(
                &list
                    .iter()
                    .filter(|t| t.mu(0) == d - gap)
                    .cloned()
                    .collect::<Vec<_>>(),
            );
            let mut fam = strs(&fam);
            slice.sort();
            fam.sort();
            brute.insert(d, slice);
            family.insert(d, fam);
        }
        o.eq(
            format!("mu1 = d-{gap} family equals the brute-force slice"),
            Computed,
            brute,
            family,
        );
    }

    let seven = &all[&7];
    o.holds(
        "(7;3^4,2^3) is proper",
        Stated,
        seven.contains(&ty("7;3^4,2^3")),
    );
    o.holds(
        "(7;3^5,1^3) is not proper",
        Stated,
        !seven.contains(&ty("7;3^5,1^3")),
    );
    let eight = &all[&8];
    o.holds(
        "(8;5,3^3,2^2,1^3) is proper",
        Stated,
        eight.contains(&ty("8;5,3^3,2^2,1^3")),
    );
    o.holds(
        "(8;4,3^5,1^2) is proper",
        Stated,
        eight.contains(&ty("8;4,3^5,1^2")),
    );

    // the transform keeps both equations along every chain
    let mut broken = Vec::new();
    for d in 2..=CLI_DEGREE_CAP {
        for t in enumerate_homaloidal(d, false)? {
            for step in hudson_test(&t)?.steps {
                let d = step.degree;
                if step.sum() != 3 * d - 3 || step.sum_sq() != d * d - 1 {
                    broken.push(step.to_string());
                }
            }
        }
    }
    o.eq(
        "quadratic transform preserves the equations",
        Identity,
        Vec::<String>::new(),
        broken,
    );
    Ok(o)
}

fn fat_points_dims(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let t = ty("5;2^6");
    let mut o = Outcome::new(json!({"type": t}));
    let scheme = FatScheme::from_type(cfg.field, seed, &t, false)?;
    let p = scheme.profile(None)?;
    o.eq("dim J_5", Stated, 3, p.dim(5));
    o.eq("dim J_6", Stated, 10, p.dim(6));
    o.eq("e", Stated, 18, p.e);
    o.eq("regularity index", Stated, 5, p.regularity);
    o.eq(
        "minimal generators",
        Stated,
        vec![(5, 3), (6, 1)],
        p.gens.clone(),
    );
    o.eq("indeg", Stated, Some(5), p.indeg);
    Ok(o)
}

fn resolution(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let types = types_or(cfg, proper_types(4..=8)?);
    let mut o = Outcome::new(json!({"types": types}));
    per_type(&mut o, &types, |t, o| {
        let net = build_net(t, seed, cfg.field)?;
        let r = resolution_profile(&net)?;
        let d = r.d;
        let s = usize::from(r.mu1 == d as i64 - 1);
        o.eq(format!("{t}: s"), Stated, s, r.s);
        let mut n = BTreeMap::from([(d, 3)]);
        if d + s > 4 {
            n.insert(d + 1, d - 4 + s);
        }
        o.eq(format!("{t}: generator counts"), Stated, n, r.n.clone());
        let mut syz = BTreeMap::new();
        if s > 0 {
            syz.insert(d + 1, s);
        }
        syz.insert(d + 2, d - 2);
        o.eq(format!("{t}: syzygy counts"), Stated, syz, r.syz.clone());
        Ok(())
    });
    Ok(o)
}

fn square_resolution(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let types = types_or(cfg, vec![ty("5;2^6"), ty("6;4,2^4,1^3"), ty("7;3^4,2^3")]);
    let mut o = Outcome::new(json!({"types": types}));
    per_type(&mut o, &types, |t, o| {
        let net = build_net(t, seed, cfg.field)?;
        let d = net.degree();
        let p = square_profile(&net)?;
        o.eq(
            format!("{t}: generators of (J_{{d+1}})"),
            Stated,
            d + 5,
            p.generators,
        );
        o.eq(
            format!("{t}: linear syzygies"),
            Stated,
            BTreeMap::from([(d + 2, d + 7)]),
            p.syz.clone(),
        );
        o.eq(
            format!("{t}: second syzygies"),
            Stated,
            BTreeMap::from([(d + 3, 3)]),
            p.second_syz.clone(),
        );
        Ok(())
    });
    Ok(o)
}

fn saturation(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let types = types_or(cfg, proper_types(4..=7)?);
    let mut o = Outcome::new(json!({"types": types, "bound": cfg.bound}));
    let equal_types = [ty("4;2^3,1^3"), ty("5;2^6")];
    per_type(&mut o, &types, |t, o| {
        let net = build_net(t, seed, cfg.field)?;
        let r = saturation_report(&net, cfg.bound)?;
        let t = net.plane_type();
        o.eq(
            format!("{t}: I^sat = J"),
            Stated,
            equal_types.contains(t),
            r.j_equals_sat,
        );
        let (expected, prov) = match t.to_string().as_str() {
            "5;2^6" => (Some((false, vec![(6, 1)])), Stated),
            "4;2^3,1^3" | "6;4,2^4,1^3" | "7;5,2^5,1^3" => (Some((true, vec![])), Stated),
            _ => (None, Computed),
        };
        if let Some((sat, gap)) = expected {
            o.eq(format!("{t}: saturated"), prov, sat, r.saturated);
            o.eq(format!("{t}: saturation gap"), prov, gap, r.gap.clone());
        } else {
            o.note(format!("{t}: saturated = {}, gap {:?}", r.saturated, r.gap));
        }
        Ok(())
    });
    Ok(o)
}

fn linear_block_claim(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let special = ty("5;2^6");
    let default: Vec<PlaneType> = proper_types(5..=8)?
        .into_iter()
        .filter(|t| *t != special)
        .collect();
    let types = types_or(cfg, default);
    let mut o = Outcome::new(json!({"types": types}));
    per_type(&mut o, &types, |t, o| {
        let net = build_net(t, seed, cfg.field)?;
        let d = net.degree() as i64;
        let lb = linear_block(&net)?;
        let want = if t.stripped() == special {
            3
        } else if t.mu(0) >= d - 2 {
            2
        } else {
            3
        };
        o.eq(format!("{t}: dim of the linear block"), Stated, want, lb.c);
        o.eq(
            format!("{t}: re-extraction agrees"),
            Computed,
            lb.c,
            lb.reextracted_c,
        );
        Ok(())
    });
    Ok(o)
}

struct DoublingCase {
    set: &'static str,
    s: i64,
    doubled: &'static str,
    j_degrees: &'static [usize],
    /// whether (J_s) is stated to have a fixed curve
    j_curve: bool,
    jj_degrees: &'static [usize],
    /// whether the square carries the counts of a net's base ideal
    net_shaped: bool,
}

fn doubling(cfg: &SessionConfig, seed: u64, case: DoublingCase) -> Result<Outcome, ReportError> {
    let m = set(case.set);
    let mut o = Outcome::new(json!({"set": case.set}));
    o.eq(
        "sub-homaloidal degree",
        Stated,
        Some(case.s),
        is_sub_homaloidal(&m),
    );
    let dt = double(&m)?;
    o.eq(
        "doubled type",
        Stated,
        case.doubled.to_string(),
        dt.to_string(),
    );
    o.holds(
        "doubled type is improper",
        Stated,
        !hudson_test(&dt)?.is_proper(),
    );

    let j = FatScheme::from_set(cfg.field, seed, &m, false)?;
    let jp = j.profile(None)?;
    o.eq(
        "J generator degrees",
        Stated,
        case.j_degrees.to_vec(),
        jp.generator_degrees(),
    );
    let s = case.s as usize;
    let jg = growth_name(piece_growth(&j, s)?);
    if case.j_curve {
        o.eq(format!("(J_{s}) has a fixed curve"), Stated, "curve", jg);
    } else {
        o.note(format!("(J_{s}) growth: {jg}"));
    }

    let jj = j.symbolic_square();
    let jjp = jj.profile(None)?;
    let dd = 2 * s - 1;
    o.eq(
        "symbolic square generator degrees",
        Stated,
        case.jj_degrees.to_vec(),
        jjp.generator_degrees(),
    );
    if case.net_shaped {
        o.eq(
            format!("dim of its degree-{dd} piece"),
            Stated,
            3,
            jjp.dim(dd),
        );
        let n: BTreeMap<usize, usize> = jjp.gens.iter().copied().collect();
        o.eq(
            "symbolic square generator counts",
            Stated,
            BTreeMap::from([(dd, 3), (dd + 1, dd - 4)]),
            n,
        );
        let syz = fat_syzygy_counts(&jj, &jjp.gens, dd..=dd + 3);
        o.eq(
            "symbolic square syzygy counts",
            Stated,
            BTreeMap::from([(dd + 2, dd - 2)]),
            syz,
        );
    }
    o.eq(
        format!("its degree-{dd} piece has a fixed curve"),
        Stated,
        "curve",
        growth_name(piece_growth(&jj, dd)?),
    );
    Ok(o)
}

fn doubling_a(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    doubling(
        cfg,
        seed,
        DoublingCase {
            set: "4^2,1^10",
            s: 7,
            doubled: "13;8^2,2^10",
            j_degrees: &[7, 8],
            j_curve: true,
            jj_degrees: &[13, 14, 15, 16],
            net_shaped: false,
        },
    )
}

fn doubling_b(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    doubling(
        cfg,
        seed,
        DoublingCase {
            set: "4,2^6,1^2",
            s: 7,
            doubled: "13;8,4^6,2^2",
            j_degrees: &[7],
            j_curve: false,
            jj_degrees: &[13, 14],
            net_shaped: true,
        },
    )
}

fn doubling_c(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    doubling(
        cfg,
        seed,
        DoublingCase {
            set: "4,3^6,1^2",
            s: 9,
            doubled: "17;8,6^6,2^2",
            j_degrees: &[9],
            j_curve: false,
            jj_degrees: &[17, 18],
            net_shaped: true,
        },
    )
}

fn principal_curves_claim(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let svals = s_values(cfg);
    let mut o = Outcome::new(json!({"s": svals}));
    for &s in &svals {
        let net = match doubled_net(s, seed, cfg.field) {
            Err(NetError::NotApplicable(why)) => {
                o.note(format!("s = {s}: {why}"));
                continue;
            }
            r => r?,
        };
        match principal_curves(&net) {
            Ok(tr) => {
                o.holds(
                    format!(
                        "s = {s}: each J_i has a 1-dimensional degree-{} piece",
                        s - 1
                    ),
                    Stated,
                    true,
                );
                o.holds(
                    format!("s = {s}: the three products are independent"),
                    Stated,
                    tr.independent,
                );
                o.holds(
                    format!("s = {s}: the products span I_{}", 2 * s - 1),
                    Stated,
                    tr.spans_net,
                );
            }
            Err(e @ NetError::PrincipalPiece { .. }) => o.error(format!("s = {s}"), e),
            Err(e) => return Err(e.into()),
        }
    }
    let improper = build_net_with(&ty("13;8^2,2^10"), seed, cfg.field, true);
    o.holds(
        "improper doubled input (13;8^2,2^10) is rejected",
        Stated,
        matches!(improper, Err(NetError::NotProper(..))),
    );
    Ok(o)
}

fn non_saturated_structure(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let svals = s_values(cfg);
    let mut o = Outcome::new(json!({"s": svals, "bound": cfg.bound}));
    for &s in &svals {
        let net = match doubled_net(s, seed, cfg.field) {
            Err(NetError::NotApplicable(why)) => {
                o.note(format!("s = {s}: {why}"));
                continue;
            }
            r => r?,
        };
        let tr = principal_curves(&net)?;
        let r = verify_non_saturated_structure(&tr, &net, cfg.bound)?;
        o.eq(
            format!("s = {s}: first syzygies"),
            Stated,
            BTreeMap::from([(3 * s - 1, 3)]),
            r.syz.clone(),
        );
        o.eq(
            format!("s = {s}: second syzygies"),
            Stated,
            BTreeMap::from([(3 * s, 1)]),
            r.second_syz.clone(),
        );
        o.holds(format!("s = {s}: phi psi = 0"), Identity, r.phi_psi_zero);
        o.holds(
            format!("s = {s}: generators times phi = 0"),
            Stated,
            r.gens_phi_zero,
        );
        o.holds(
            format!(
                "s = {s}: I^sat = (I, f1 f2 f3) on degrees {}..={}",
                2 * s - 1,
                r.bound
            ),
            Stated,
            r.sat_equals_extension,
        );
        o.eq(
            format!("s = {s}: extra saturation generators"),
            Stated,
            vec![(3 * (s - 1), 1)],
            r.extra_sat_generators.clone(),
        );
    }
    Ok(o)
}

fn initial_degree(cfg: &SessionConfig, seed: u64) -> Result<Outcome, ReportError> {
    let sets = ["2^4,1^4", "4,2^6,1^2", "4^2,1^10", "4,3^6,1^2"];
    let mut o = Outcome::new(json!({"sets": sets}));
    for lit in sets {
        let m = set(lit);
        let Some(s) = is_sub_homaloidal(&m) else {
            o.error(format!("({lit})"), TypeError::NotSubHomaloidal(m.clone()));
            continue;
        };
        let s = s as usize;
        let p = FatScheme::from_set(cfg.field, seed, &m, false)?.profile(None)?;
        o.eq(
            format!("({lit}): e = (s+3)(s-1)/2"),
            Stated,
            (s + 3) * (s - 1) / 2,
            p.e,
        );
        if hudson_test(&double(&m)?)?.is_proper() {
            o.eq(format!("({lit}): indeg J = s"), Stated, Some(s), p.indeg);
            o.holds(
                format!("({lit}): dim J_s >= (s+5)/2"),
                Stated,
                p.dim(s) >= (s + 5) / 2,
            );
        } else {
            o.note(format!(
                "({lit}): doubled type improper, indeg not asserted (observed {:?}, gens {:?})",
                p.indeg, p.gens
            ));
        }
    }
    Ok(o)
}

/// Schemes whose Hilbert functions the property suite inspects.
fn touched_schemes(field: PrimeField, seed: u64) -> Result<Vec<(String, FatScheme)>, ReportError> {
    let types = [
        "4;2^3,1^3",
        "5;2^6",
        "6;4,2^4,1^3",
        "7;5,2^5,1^3",
        "7;4,3^3,1^5",
        "7;3^4,2^3",
        "8;5,3^3,2^2,1^3",
        "9;4^4,2^4",
    ];
    let sets = ["2^4,1^4", "4,2^6,1^2", "4^2,1^10", "4,3^6,1^2"];
    let mut out = Vec::new();
    for t in types {
        out.push((
            t.to_string(),
            FatScheme::from_type(field, seed, &ty(t), false)?,
        ));
    }
    for m in sets {
        let j = FatScheme::from_set(field, seed, &set(m), false)?;
        out.push((format!("square of ({m})"), j.symbolic_square()));
        out.push((format!("({m})"), j));
    }
    Ok(out)
}

/// (Hilbert function, generators, e, expected e) of one scheme.
type ProfileRow = Result<(Vec<usize>, Vec<(usize, usize)>, usize, usize), String>;

fn properties(cfg: &SessionConfig, _: u64) -> Result<Outcome, ReportError> {
    let mut o = Outcome::new(json!({"seeds": cfg.seeds}));
    let per_seed: Vec<(u64, Vec<(String, ProfileRow)>)> = cfg
        .seeds
        .par_iter()
        .map(|&seed| {
            let schemes = match touched_schemes(cfg.field, seed) {
                Ok(s) => s,
                Err(e) => return (seed, vec![("schemes".to_string(), Err(e.to_string()))]),
            };
            let rows = schemes
                .par_iter()
                .map(|(name, sch)| {
                    let r = sch
                        .profile(None)
                        .map(|p| (p.hilbert.clone(), p.gens.clone(), p.e, expected_e(sch)))
                        .map_err(|e| e.to_string());
                    (name.clone(), r)
                })
                .collect();
            (seed, rows)
        })
        .collect();

    let mut shapes_bad = Vec::new();
    let mut by_name: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (seed, rows) in &per_seed {
        for (name, r) in rows {
            match r {
                Ok((h, gens, e, want_e)) => {
                    if !hilbert_shape_ok(h, *want_e) || e != want_e {
                        shapes_bad.push(format!("{name} (seed {seed})"));
                    }
                    by_name
                        .entry(name.clone())
                        .or_default()
                        .insert(serde_json::to_string(&(h, gens)).expect("plain data"));
                }
                Err(e) => o.error(format!("{name} (seed {seed})"), e),
            }
        }
    }
    o.eq(
        "Hilbert functions strictly increase, then stay at e",
        Stated,
        Vec::<String>::new(),
        shapes_bad,
    );
    let varying: Vec<String> = by_name
        .iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(k, _)| k.clone())
        .collect();
    o.eq(
        "dimensions are seed-independent",
        Computed,
        Vec::<String>::new(),
        varying,
    );

    let mut gaps: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for t in ["5;2^6", "9;4^4,2^4"] {
        let results: Vec<Result<(bool, String), ReportError>> = cfg
            .seeds
            .par_iter()
            .map(|&seed| saturation_idempotent(cfg, &ty(t), seed))
            .collect();
        for (seed, r) in cfg.seeds.iter().zip(results) {
            match r {
                Ok((idem, gap)) => {
                    o.holds(
                        format!("{t} (seed {seed}): saturation is certified and idempotent"),
                        Identity,
                        idem,
                    );
                    gaps.entry(t.to_string()).or_default().insert(gap);
                }
                Err(e) => o.error(format!("{t} (seed {seed})"), e),
            }
        }
    }
    let varying: Vec<String> = gaps
        .iter()
        .filter(|(_, v)| v.len() > 1)
        .map(|(k, _)| k.clone())
        .collect();
    o.eq(
        "saturation gaps are seed-independent",
        Computed,
        Vec::<String>::new(),
        varying,
    );
    Ok(o)
}

/// e = Σ μ(μ+1)/2.
fn expected_e(s: &FatScheme) -> usize {
    s.mults()
        .iter()
        .map(|&m| (m as usize) * (m as usize + 1) / 2)
        .sum()
}

fn hilbert_shape_ok(h: &[usize], e: usize) -> bool {
    let k = match h.iter().position(|&v| v == e) {
        Some(k) => k,
        None => return false,
    };
    h[..=k].windows(2).all(|w| w[0] < w[1]) && h[k..].iter().all(|&v| v == e)
}

/// Saturates the base ideal twice; returns (idempotent, gap literal).
fn saturation_idempotent(
    cfg: &SessionConfig,
    t: &PlaneType,
    seed: u64,
) -> Result<(bool, String), ReportError> {
    let net = build_net(t, seed, cfg.field)?;
    let d = net.degree();
    let bound = cfg.bound.unwrap_or(2 * d);
    let mut base = net.base_ideal().clone();
    let first = saturate(&mut base, bound, None)?;
    let pieces: Vec<GradedPiece> = (d.saturating_sub(2)..=bound)
        .map(|t| first.ideal.piece(t))
        .filter(|p| p.dim() > 0)
        .collect();
    let mut again = span_ideal(cfg.field, &pieces, bound);
    let second = saturate(&mut again, bound, None)?;
    let idem = second.ideal.agrees_with(&first.ideal, 0..=bound);
    let gap: Vec<(usize, usize)> = (0..=bound)
        .filter_map(|t| {
            let g = first.ideal.dim(t) - base.dim(t);
            (g > 0).then_some((t, g))
        })
        .collect();
    Ok((idem, format!("{gap:?}")))
}

// ---------------------------------------------------------------- per-net report

#[derive(Debug, Clone, Serialize)]
pub struct NetReport {
    #[serde(rename = "type")]
    pub plane_type: PlaneType,
    pub seed: u64,
    pub prime: u32,
    pub s: usize,
    pub n: BTreeMap<usize, usize>,
    pub syz: BTreeMap<usize, usize>,
    pub saturated: bool,
    pub gap: Vec<(usize, usize)>,
    pub linear_block_dim: Option<usize>,
    /// principal-curve span check, for doubled types with pinned triangle
    pub principal_curves: Option<Value>,
    /// resolution/saturation structure of the doubled types
    pub non_saturated_structure: Option<Value>,
    pub verdict: ClaimVerdict,
    pub notes: Vec<String>,
}

pub fn net_report(t: &PlaneType, seed: u64, cfg: &SessionConfig) -> Result<NetReport, ReportError> {
    let net = build_net(t, seed, cfg.field)?;
    let res = resolution_profile(&net)?;
    let sat = saturation_report(&net, cfg.bound)?;
    let mut notes = res.mismatches();
    let linear_block_dim = match linear_block(&net) {
        Ok(lb) => Some(lb.c),
        Err(NetError::NotApplicable(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut principal = None;
    let mut structure = None;
    let doubled = halve(net.plane_type())
        .and_then(|m| is_sub_homaloidal(&m).map(|s| (m, s as u32)))
        .filter(|(m, s)| s % 2 == 1 && m.mults().len() >= 3 && m.mults()[..3] == [(s - 1) / 2; 3]);
    if doubled.is_some() {
        let pinned = build_net_with(t, seed, cfg.field, true)?;
        let tr = principal_curves(&pinned)?;
        if !(tr.independent && tr.spans_net) {
            notes.push("principal-curve products do not span the net".into());
        }
        principal =
            Some(json!({"s": tr.s, "independent": tr.independent, "spans_net": tr.spans_net}));
        let rep = verify_non_saturated_structure(&tr, &pinned, cfg.bound)?;
        notes.extend(rep.mismatches());
        structure = Some(serde_json::to_value(&rep).expect("plain data"));
    }
    Ok(NetReport {
        plane_type: net.plane_type().clone(),
        seed,
        prime: cfg.prime(),
        s: res.s,
        n: res.n,
        syz: res.syz,
        saturated: sat.saturated,
        gap: sat.gap,
        linear_block_dim,
        principal_curves: principal,
        non_saturated_structure: structure,
        verdict: if notes.is_empty() {
            ClaimVerdict::Confirmed
        } else {
            ClaimVerdict::Falsified
        },
        notes,
    })
}

// ---------------------------------------------------------------- tables

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeReport {
    pub literal: String,
    #[serde(rename = "type")]
    pub plane_type: PlaneType,
    pub homaloidal: bool,
    pub proper: Option<bool>,
    pub chain: Option<Vec<String>>,
    pub verdict: Option<Verdict>,
    pub exceptional: bool,
    pub exceptional_proper: Option<bool>,
    /// s such that the multiplicities alone form a sub-homaloidal set
    pub sub_homaloidal_degree: Option<i64>,
}

pub fn check_type(literal: &str) -> Result<TypeReport, ReportError> {
    let t: PlaneType = literal.parse()?;
    let homaloidal = is_homaloidal(&t);
    let chain = if homaloidal {
        Some(hudson_test(&t)?)
    } else {
        None
    };
    let exceptional = is_exceptional(&t);
    let exceptional_proper = if exceptional {
        Some(exceptional_proper_test(&t)?.is_proper())
    } else {
        None
    };
    let pos = t.positive_mults();
    let sub = if pos.is_empty() {
        None
    } else {
        is_sub_homaloidal(&MultiplicitySet::new(pos))
    };
    Ok(TypeReport {
        literal: literal.to_string(),
        plane_type: t.clone(),
        homaloidal,
        proper: chain.as_ref().map(|c| c.is_proper()),
        chain: chain
            .as_ref()
            .map(|c| c.steps.iter().map(|s| s.stripped().to_string()).collect()),
        verdict: chain.map(|c| c.verdict),
        exceptional,
        exceptional_proper,
        sub_homaloidal_degree: sub,
    })
}

impl TypeReport {
    pub fn render(&self, format: Format) -> Result<String, ReportError> {
        Ok(match format {
            Format::Json => pretty(self),
            Format::Csv => to_csv(std::slice::from_ref(&TypeRow::from(self)))?,
            Format::Text => {
                let mut s = format!("type {}\n", self.plane_type);
                let yn = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(s, "homaloidal: {}", yn(self.homaloidal));
                if let (Some(chain), Some(v)) = (&self.chain, &self.verdict) {
                    let _ = writeln!(
                        s,
                        "chain: {}",
                        chain
                            .iter()
                            .map(|c| format!("({c})"))
                            .collect::<Vec<_>>()
                            .join(" -> ")
                    );
                    let _ = writeln!(s, "verdict: {}", verdict_text(v));
                }
                let _ = writeln!(s, "exceptional: {}", yn(self.exceptional));
                if let Some(p) = self.exceptional_proper {
                    let _ = writeln!(s, "exceptional chain proper: {}", yn(p));
                }
                if let Some(d) = self.sub_homaloidal_degree {
                    let _ = writeln!(s, "multiplicities are sub-homaloidal in degree {d}");
                }
                s
            }
        })
    }
}

#[derive(Serialize)]
struct TypeRow {
    #[serde(rename = "type")]
    plane_type: String,
    homaloidal: bool,
    proper: String,
    chain_length: String,
    exceptional: bool,
    sub_homaloidal_degree: String,
}

impl From<&TypeReport> for TypeRow {
    fn from(r: &TypeReport) -> Self {
        let opt = |o: Option<String>| o.unwrap_or_default();
        TypeRow {
            plane_type: r.plane_type.to_string(),
            homaloidal: r.homaloidal,
            proper: opt(r.proper.map(|p| p.to_string())),
            chain_length: opt(r.chain.as_ref().map(|c| c.len().to_string())),
            exceptional: r.exceptional,
            sub_homaloidal_degree: opt(r.sub_homaloidal_degree.map(|d| d.to_string())),
        }
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Proper => "proper".into(),
        Verdict::Improper(r) => format!(
            "improper ({})",
            serde_json::to_value(r)
                .expect("plain data")
                .as_str()
                .unwrap_or("?")
        ),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumRow {
    #[serde(rename = "type")]
    pub plane_type: String,
    pub mu1: i64,
    pub proper: bool,
    /// number of quadratic transforms applied before the verdict
    pub chain_length: usize,
}

pub fn enumerate_table(d: i64, proper_only: bool) -> Result<Vec<EnumRow>, ReportError> {
    if d > CLI_DEGREE_CAP {
        return Err(ReportError::DegreeCap(d));
    }
    enumerate_homaloidal(d, proper_only)?
        .into_iter()
        .map(|t| {
            let c = hudson_test(&t)?;
            Ok(EnumRow {
                plane_type: t.to_string(),
                mu1: t.mu(0),
                proper: c.is_proper(),
                chain_length: c.steps.len() - 1,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mu1Row {
    #[serde(rename = "type")]
    pub plane_type: String,
    pub mu1: i64,
    pub d: i64,
    pub half_d: i64,
    pub saturated: bool,
    /// total number of minimal first syzygies of I
    pub syzygies: usize,
    /// saturated with exactly two first syzygies
    pub cohen_macaulay: bool,
}

/// Parses "A..B" or "A..=B" (both inclusive) or a single degree.
pub fn parse_degree_range(s: &str) -> Result<std::ops::RangeInclusive<i64>, ReportError> {
    let bad = || ReportError::Range(s.to_string());
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    Ok(a..=b)
}

/// Saturation verdicts against μ₁ per proper type; nothing is asserted.
pub fn experiment_mu1_saturation(
    degrees: std::ops::RangeInclusive<i64>,
    cfg: &SessionConfig,
) -> Result<Vec<Mu1Row>, ReportError> {
    if *degrees.end() > CLI_DEGREE_CAP {
        return Err(ReportError::DegreeCap(*degrees.end()));
    }
    let lo = (*degrees.start()).max(4);
    if lo > *degrees.end() {
        return Ok(Vec::new());
    }
    let types = proper_types(lo..=*degrees.end())?;
    let seed = cfg.first_seed();
    let pool = cfg.pool()?;
    pool.install(|| {
        types
            .par_iter()
            .map(|t| {
                let net = build_net(t, seed, cfg.field)?;
                let sat = saturation_report(&net, cfg.bound)?;
                let syzygies = net_syzygy_counts(&net).values().sum();
                Ok(Mu1Row {
                    plane_type: t.to_string(),
                    mu1: t.mu(0),
                    d: t.degree,
                    half_d: t.degree / 2,
                    saturated: sat.saturated,
                    syzygies,
                    cohen_macaulay: sat.saturated && syzygies == 2,
                })
            })
            .collect()
    })
}

// ---------------------------------------------------------------- fat-point literal

/// `p=32003 seed=7 type=5;2^6 pin=false`, or `set=4,2^6,1^2` in place of
/// `type`; `square=true` takes the symbolic square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeSpec {
    pub prime: u32,
    pub seed: u64,
    pub mults: MultiplicitySet,
    pub label: String,
    pub pin: bool,
    pub square: bool,
}

impl FromStr for SchemeSpec {
    type Err = ReportError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: String| ReportError::Scheme(m);
        let mut prime = DEFAULT_PRIME;
        let mut seed = 1;
        let mut mults = None;
        let mut pin = false;
        let mut square = false;
        for tok in s.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| bad(format!("`{tok}` is not key=value")))?;
            let flag = |v: &str| {
                v.parse::<bool>()
                    .map_err(|_| bad(format!("{k}: `{v}` is not true/false")))
            };
            match k {
                "p" | "prime" => {
                    prime = v
                        .parse()
                        .map_err(|_| bad(format!("p: `{v}` is not a number")))?
                }
                "seed" => {
                    seed = v
                        .parse()
                        .map_err(|_| bad(format!("seed: `{v}` is not a number")))?
                }
                "type" => {
                    let t: PlaneType = v.parse()?;
                    mults = Some((MultiplicitySet::new(t.positive_mults()), t.to_string()));
                }
                "set" => {
                    let m: MultiplicitySet = v.parse()?;
                    let label = format!("({m})");
                    mults = Some((m, label));
                }
                "pin" => pin = flag(v)?,
                "square" => square = flag(v)?,
                _ => return Err(bad(format!("unknown key `{k}`"))),
            }
        }
        let (mults, label) = mults.ok_or_else(|| bad("needs type=... or set=...".into()))?;
        Ok(SchemeSpec {
            prime,
            seed,
            mults,
            label,
            pin,
            square,
        })
    }
}

impl SchemeSpec {
    pub fn build(&self) -> Result<FatScheme, ReportError> {
        let f = PrimeField::new(self.prime as u64)?;
        let j = FatScheme::from_set(f, self.seed, &self.mults, self.pin)?;
        Ok(if self.square { j.symbolic_square() } else { j })
    }
}

pub fn fatpoints_report(spec: &SchemeSpec, bound: Option<usize>) -> Result<Value, ReportError> {
    if bound == Some(0) {
        return Err(ReportError::ZeroBound);
    }
    let scheme = spec.build()?;
    let p = scheme.profile(bound)?;
    Ok(json!({
        "scheme": spec.label,
        "square": spec.square,
        "mults": scheme.mults(),
        "config": scheme.config(),
        "profile": p.to_json(),
    }))
}

// ---------------------------------------------------------------- rendering

fn pretty<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| ReportError::Csv(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| ReportError::Csv(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 input"))
}

fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&width).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{c:<w$}");
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(headers.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

#[derive(Serialize)]
struct CheckRow<'a> {
    claim: &'a str,
    seed: String,
    check: &'a str,
    provenance: Provenance,
    expected: String,
    observed: String,
    ok: bool,
    verdict: ClaimVerdict,
}

fn seed_text(s: Option<u64>) -> String {
    s.map(|s| s.to_string()).unwrap_or_else(|| "-".into())
}

pub fn render_claims(reports: &[ClaimReport], format: Format) -> Result<String, ReportError> {
    match format {
        Format::Json => Ok(pretty(reports)),
        Format::Csv => {
            let rows: Vec<CheckRow> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(move |c| CheckRow {
                        claim: r.claim,
                        seed: seed_text(r.seed),
                        check: &c.name,
                        provenance: c.provenance,
                        expected: c.expected.to_string(),
                        observed: c.observed.to_string(),
                        ok: c.ok,
                        verdict: r.verdict,
                    })
                })
                .collect();
            to_csv(&rows)
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let passed = r.checks.iter().filter(|c| c.ok).count();
                let v = match r.verdict {
                    ClaimVerdict::Confirmed => "confirmed",
                    ClaimVerdict::Falsified => "FALSIFIED",
                    ClaimVerdict::Skipped => "skipped",
                };
                let _ = writeln!(
                    s,
                    "{:<24} seed {:>3}  {:<9}  {passed}/{} checks",
                    r.claim,
                    seed_text(r.seed),
                    v,
                    r.checks.len()
                );
                for c in r.failures() {
                    let _ = writeln!(
                        s,
                        "    {}: expected {}, observed {}",
                        c.name, c.expected, c.observed
                    );
                }
                for n in &r.notes {
                    let _ = writeln!(s, "    note: {n}");
                }
            }
            let falsified = reports
                .iter()
                .filter(|r| r.verdict == ClaimVerdict::Falsified)
                .count();
            let _ = writeln!(s, "{} reports, {} falsified", reports.len(), falsified);
            Ok(s)
        }
    }
}

pub fn render_rows<T: Serialize>(rows: &[T], format: Format) -> Result<String, ReportError> {
    match format {
        Format::Json => Ok(pretty(rows)),
        Format::Csv => to_csv(rows),
        Format::Text => {
            let values: Vec<serde_json::Map<String, Value>> = rows
                .iter()
                .map(|r| match serde_json::to_value(r).expect("plain data") {
                    Value::Object(m) => m,
                    other => {
                        let mut m = serde_json::Map::new();
                        m.insert("value".into(), other);
                        m
                    }
                })
                .collect();
            let Some(first) = values.first() else {
                return Ok("(no rows)\n".into());
            };
            let headers: Vec<&str> = first.keys().map(|k| k.as_str()).collect();
            let cells: Vec<Vec<String>> = values
                .iter()
                .map(|m| {
                    headers
                        .iter()
                        .map(|h| match &m[*h] {
                            Value::String(s) => s.clone(),
                            v => v.to_string(),
                        })
                        .collect()
                })
                .collect();
            Ok(text_table(&headers, &cells))
        }
    }
}

/// JSON values have no flat form; every format prints them as JSON.
pub fn render_value(v: &Value) -> String {
    pretty(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_are_sorted_and_unique() {
        let ids = claim_ids();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        let cfg = SessionConfig::default();
        assert!(matches!(
            run_claims(&["thm-nope".into()], &cfg),
            Err(ReportError::UnknownClaim(_))
        ));
    }

    #[test]
    fn session_config_validation() {
        assert!(SessionConfig::new(32003, vec![], None).is_err());
        assert!(SessionConfig::new(32004, vec![1], None).is_err());
        assert!(SessionConfig::new(32003, vec![1], Some(0)).is_err());
        assert_eq!(
            SessionConfig::new(101, vec![1], Some(9)).unwrap().prime(),
            101
        );
    }

    #[test]
    fn scheme_literal() {
        let s: SchemeSpec = "p=32003 seed=7 type=5;2^6 pin=false".parse().unwrap();
        assert_eq!((s.prime, s.seed, s.pin), (32003, 7, false));
        assert_eq!(s.mults.mults(), &[2; 6]);
        assert!("seed=1".parse::<SchemeSpec>().is_err());
        assert!("type=5;2^6 colour=red".parse::<SchemeSpec>().is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_degree_range("4..7").unwrap(), 4..=7);
        assert_eq!(parse_degree_range("4..=7").unwrap(), 4..=7);
        assert_eq!(parse_degree_range("6").unwrap(), 6..=6);
        assert!(parse_degree_range("a..b").is_err());
    }

    #[test]
    fn hilbert_shape() {
        assert!(hilbert_shape_ok(&[1, 3, 5, 5, 5], 5));
        assert!(!hilbert_shape_ok(&[1, 3, 3, 5, 5], 5));
        assert!(!hilbert_shape_ok(&[1, 3, 4], 5));
    }

    #[test]
    fn check_type_reports() {
        let r = check_type("8;5,3^2,2^5").unwrap();
        assert_eq!(r.proper, Some(true));
        assert_eq!(r.chain.as_ref().unwrap()[1], "5;2^6");
        assert!(check_type("0;").is_err());
        let r = check_type("5;2^6").unwrap();
        assert_eq!(r.sub_homaloidal_degree, None);
        assert_eq!(
            check_type("7;2^4,1^4").unwrap().sub_homaloidal_degree,
            Some(5)
        );
    }
}

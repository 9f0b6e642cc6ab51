//! Text fixtures for complexes and the checks run on the negative-crossing
//! listings (one fixture per local cycle type).

use serde_json::{json, Value};

use super::cancel::{cancel_pair, change_basis};
use super::free::{graded_homology, FreeComplex, GradedDims};
use super::koszul::koszul;
use super::poly::{PolyRingZ2, PolyZ2};
use crate::error::{KnotError, ParseError};

/// Parse the `VARS` / `GEN name level q..` / `DIF src dst poly` format.
/// The differential raises the level by one; variables have q-degree 2.
pub fn parse_fixture(text: &str) -> Result<FreeComplex, ParseError> {
    let err = |line: usize, msg: &str| ParseError::Fixture {
        line,
        msg: msg.to_string(),
    };
    let mut c: Option<FreeComplex> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let words: Vec<&str> = raw.split_whitespace().collect();
        match words[0] {
            "VARS" => {
                if c.is_some() {
                    return Err(err(line, "repeated VARS"));
                }
                let ring = PolyRingZ2::new(words[1..].iter().copied());
                c = Some(FreeComplex::new(ring, vec![], vec![]));
            }
            "GEN" => {
                let cx = c.as_mut().ok_or_else(|| err(line, "GEN before VARS"))?;
                if words.len() < 4 {
                    return Err(err(line, "GEN needs a name, a level and a q-grading"));
                }
                let grading: Vec<i64> = words[2..]
                    .iter()
                    .map(|w| w.parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| err(line, "non-integer grading"))?;
                if cx.rank() == 0 {
                    let k = grading.len();
                    let mut w = vec![0; k];
                    w[1] = 2;
                    let mut win = vec![0; k];
                    win[1] = 1;
                    let mut deg = vec![0; k];
                    deg[0] = 1;
                    let ring = cx.ring().clone();
                    *cx = FreeComplex::new(ring, w, win);
                    cx.add_differential("d", deg);
                } else if grading.len() != cx.generators()[0].grading.len() {
                    return Err(err(line, "grading length differs from earlier generators"));
                }
                if cx.generator_index(words[1]).is_some() {
                    return Err(err(line, "duplicate generator"));
                }
                cx.add_generator(words[1], grading);
            }
            "DIF" => {
                let cx = c.as_mut().ok_or_else(|| err(line, "DIF before VARS"))?;
                if words.len() != 4 {
                    return Err(err(line, "DIF needs source, target and polynomial"));
                }
                let s = cx
                    .generator_index(words[1])
                    .ok_or_else(|| err(line, "unknown source"))?;
                let t = cx
                    .generator_index(words[2])
                    .ok_or_else(|| err(line, "unknown target"))?;
                let p = cx
                    .ring()
                    .parse(words[3])
                    .map_err(|_| err(line, "bad polynomial"))?;
                cx.add_entry(0, s, t, p);
            }
            _ => return Err(err(line, "unknown directive")),
        }
    }
    let c = c.ok_or_else(|| err(0, "missing VARS"))?;
    if c.rank() == 0 {
        return Err(err(0, "no generators"));
    }
    Ok(c)
}

pub const FIXTURES: [(&str, &str); 9] = [
    ("z0", include_str!("../../fixtures/z0.cx")),
    (
        "z0_cancelled",
        include_str!("../../fixtures/z0_cancelled.cx"),
    ),
    ("z1", include_str!("../../fixtures/z1.cx")),
    (
        "z1_cancelled",
        include_str!("../../fixtures/z1_cancelled.cx"),
    ),
    ("z2", include_str!("../../fixtures/z2.cx")),
    (
        "z2_cancelled",
        include_str!("../../fixtures/z2_cancelled.cx"),
    ),
    ("z3", include_str!("../../fixtures/z3.cx")),
    ("z4", include_str!("../../fixtures/z4.cx")),
    ("z5", include_str!("../../fixtures/z5.cx")),
];

pub fn load_fixture(name: &str) -> Result<FreeComplex, KnotError> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| KnotError::Complex(format!("unknown fixture {name}")))?;
    let c = parse_fixture(text)?;
    c.check_homogeneous()?;
    Ok(c)
}

/// First difference between two single-differential complexes, matching
/// generators by name.
pub fn compare_by_name(a: &FreeComplex, b: &FreeComplex) -> Result<(), String> {
    let names = |c: &FreeComplex| {
        let mut v: Vec<String> = c.generators().iter().map(|g| g.name.clone()).collect();
        v.sort();
        v
    };
    if names(a) != names(b) {
        return Err(format!(
            "generator sets differ: {:?} vs {:?}",
            names(a),
            names(b)
        ));
    }
    for g in a.generators() {
        let h = &b.generators()[b.generator_index(&g.name).unwrap_or(0)];
        if g.grading != h.grading {
            return Err(format!("grading of {} differs", g.name));
        }
    }
    let ga = a.generators();
    for s in ga {
        for t in ga {
            let (sa, ta) = (
                a.generator_index(&s.name).unwrap(),
                a.generator_index(&t.name).unwrap(),
            );
            let (sb, tb) = (
                b.generator_index(&s.name).unwrap(),
                b.generator_index(&t.name).unwrap(),
            );
            let pa = a.entry(0, sa, ta);
            let pb = b.entry(0, sb, tb);
            if pa != pb {
                return Err(format!(
                    "entry {} -> {}: {} vs {}",
                    s.name,
                    t.name,
                    a.ring().display(&pa),
                    b.ring().display(&pb)
                ));
            }
        }
    }
    Ok(())
}

/// Check that the block of `c` on `names` is the Koszul complex on `elems`,
/// with `names[s]` standing for the Koszul generator of subset mask `s`.
fn block_is_koszul(c: &FreeComplex, names: &[&str], elems: &[PolyZ2]) -> Result<(), String> {
    let k = koszul(c.ring(), elems).map_err(|e| e.to_string())?;
    for s in 0..names.len() {
        for t in 0..names.len() {
            let gs = c
                .generator_index(names[s])
                .ok_or(format!("missing {}", names[s]))?;
            let gt = c
                .generator_index(names[t])
                .ok_or(format!("missing {}", names[t]))?;
            let want = k.entry(0, s, t);
            let got = c.entry(0, gs, gt);
            if want != got {
                return Err(format!(
                    "entry {} -> {} is {}, Koszul model has {}",
                    names[s],
                    names[t],
                    c.ring().display(&got),
                    c.ring().display(&want)
                ));
            }
        }
    }
    Ok(())
}

fn cancel_named(c: &FreeComplex, pairs: &[(String, String)]) -> Result<FreeComplex, KnotError> {
    let mut cur = c.clone();
    for (x, y) in pairs {
        let xi = cur
            .generator_index(x)
            .ok_or_else(|| KnotError::Complex(format!("missing {x}")))?;
        let yi = cur
            .generator_index(y)
            .ok_or_else(|| KnotError::Complex(format!("missing {y}")))?;
        cur = cancel_pair(&cur, xi, yi)?;
    }
    Ok(cur)
}

/// Hilbert data by internal degree, re-based so the lowest degree is 0.
fn normalized(h: &GradedDims, cutoff: i64) -> Vec<(i64, u64)> {
    let by = h.by_internal_degree();
    let base = by.keys().next().copied().unwrap_or(0);
    by.into_iter()
        .map(|(q, n)| (q - base, n))
        .filter(|(q, _)| *q <= cutoff)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub fixture: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct FixtureReport {
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    fn push(&mut self, fixture: &str, check: &str, r: Result<(), String>) {
        let (pass, detail) = match r {
            Ok(()) => (true, String::new()),
            Err(e) => (false, e),
        };
        self.checks.push(FixtureCheck {
            fixture: fixture.into(),
            check: check.into(),
            pass,
            detail,
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn fixture_passes(&self, fixture: &str) -> bool {
        self.checks
            .iter()
            .filter(|c| c.fixture == fixture)
            .all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"fixture": c.fixture, "check": c.check, "pass": c.pass, "detail": c.detail}))
            .collect();
        json!({"pass": self.pass(), "checks": checks})
    }
}

const CUTOFF: i64 = 8;

fn pairs_of(c: &FreeComplex, from: &str, to: &str) -> Vec<(String, String)> {
    c.generators()
        .iter()
        .filter(|g| g.name.contains(from))
        .map(|g| (g.name.clone(), g.name.replace(from, to)))
        .collect()
}

fn zero_homology(c: &FreeComplex) -> Result<(), String> {
    let h = graded_homology(c, 0, CUTOFF).map_err(|e| e.to_string())?;
    if h.is_zero() {
        Ok(())
    } else {
        Err(format!("nonzero homology {:?}", h.dims))
    }
}

fn check_z0(r: &mut FixtureReport) -> Result<(), KnotError> {
    let z0 = load_fixture("z0")?;
    let want = load_fixture("z0_cancelled")?;
    let pairs = vec![
        ("ax2".to_string(), "yf2".to_string()),
        ("ax1".to_string(), "yf1".to_string()),
    ];
    let got = cancel_named(&z0, &pairs)?;
    r.push("z0", "d^2 = 0 after cancellation", got.squares_to_zero());
    r.push(
        "z0",
        "cancellation matches listing",
        compare_by_name(&got, &want),
    );
    let h0 = graded_homology(&z0, 0, CUTOFF)?;
    let h1 = graded_homology(&got, 0, CUTOFF)?;
    r.push(
        "z0",
        "cancellation preserves homology",
        if h0 == h1 {
            Ok(())
        } else {
            Err("homology changed".into())
        },
    );
    let ring = got.ring().clone();
    let p = |s: &str| ring.parse(s).expect("fixed polynomial");
    let i = got.generator_index("d1g2").expect("d1g2");
    let j = got.generator_index("d2g1").expect("d2g1");
    let based = change_basis(&got, i, j, &ring.one())?;
    let sum = p("U1+U2+U3+U4");
    // subset masks: bit 0 for the first element, bit 1 for the second
    r.push(
        "z0",
        "d,g block is the smoothing square",
        block_is_koszul(
            &based,
            &["d1g1", "d2g1", "d1g2", "d2g2"],
            &[p("U2+U4"), sum.clone()],
        ),
    );
    r.push(
        "z0",
        "e block is the singularization square",
        block_is_koszul(
            &based,
            &["gx1", "gx2", "bx1", "bx2"],
            &[p("U1*U2+U3*U4"), sum],
        ),
    );
    let e_block = ["gx1", "gx2", "bx1", "bx2"];
    let leaks = based.differentials()[0].entries().any(|(s, t, _)| {
        e_block.contains(&based.generators()[s].name.as_str())
            && !e_block.contains(&based.generators()[t].name.as_str())
    });
    r.push(
        "z0",
        "e block is a subcomplex",
        if leaks {
            Err("map out of the e block".into())
        } else {
            Ok(())
        },
    );
    Ok(())
}

fn check_z1(r: &mut FixtureReport) -> Result<(), KnotError> {
    let z1 = load_fixture("z1")?;
    let want = load_fixture("z1_cancelled")?;
    let got = cancel_named(&z1, &pairs_of(&z1, ".ea.", ".ey."))?;
    r.push("z1", "d^2 = 0 after cancellation", got.squares_to_zero());
    r.push(
        "z1",
        "cancellation matches listing",
        compare_by_name(&got, &want),
    );
    r.push("z1", "acyclic", zero_homology(&z1));
    r.push("z1", "acyclic after cancellation", zero_homology(&got));
    Ok(())
}

fn check_z2(r: &mut FixtureReport) -> Result<(), KnotError> {
    let z2 = load_fixture("z2")?;
    let want = load_fixture("z2_cancelled")?;
    let got = cancel_named(&z2, &pairs_of(&z2, ".ea.", ".ey."))?;
    r.push("z2", "d^2 = 0 after cancellation", got.squares_to_zero());
    r.push(
        "z2",
        "cancellation matches listing",
        compare_by_name(&got, &want),
    );
    let u4 = got.ring().var(3);
    let gens = got.generators();
    let src: Vec<usize> = (0..gens.len())
        .filter(|&g| gens[g].name.contains(".d"))
        .collect();
    let dst: Vec<usize> = (0..gens.len())
        .filter(|&g| !gens[g].name.contains(".d"))
        .collect();
    let mut edge = Ok(());
    let mut rows = Vec::new();
    for &s in &src {
        let mut row = super::f2::BitVec::zeros(dst.len());
        for (k, &t) in dst.iter().enumerate() {
            let e = got.entry(0, s, t);
            if e.is_zero() {
                continue;
            }
            if e == u4 {
                row.set(k);
            } else {
                edge = Err(format!(
                    "edge entry {} -> {} is {}",
                    gens[s].name,
                    gens[t].name,
                    got.ring().display(&e)
                ));
            }
        }
        rows.push(row);
    }
    if edge.is_ok() && (src.len() != dst.len() || super::f2::rank(rows) != dst.len()) {
        edge = Err("edge map is U4 times a singular matrix".into());
    }
    r.push("z2", "edge map is U4 times an isomorphism", edge);
    let h = graded_homology(&got, 0, CUTOFF)?;
    let h0 = graded_homology(&z2, 0, CUTOFF)?;
    r.push(
        "z2",
        "cancellation preserves homology",
        if h == h0 {
            Ok(())
        } else {
            Err("homology changed".into())
        },
    );
    Ok(())
}

fn bivalent_oracle(names: [&str; 2]) -> Result<GradedDims, KnotError> {
    let ring = PolyRingZ2::new(names);
    let lin = ring.var(0) + ring.var(1);
    graded_homology(&koszul(&ring, &[lin])?, 0, CUTOFF + 8)
}

fn check_diagonal(r: &mut FixtureReport, name: &str, kept: [&str; 2]) -> Result<(), KnotError> {
    let c = load_fixture(name)?;
    r.push(name, "d^2 = 0", c.squares_to_zero());
    let h = graded_homology(&c, 0, CUTOFF + 8)?;
    let levels: std::collections::BTreeSet<i64> = h.dims.keys().map(|g| g[0]).collect();
    r.push(
        name,
        "homology in one level",
        if levels.len() == 1 {
            Ok(())
        } else {
            Err(format!("levels {levels:?}"))
        },
    );
    let want = normalized(&bivalent_oracle(kept)?, CUTOFF);
    let got = normalized(&h, CUTOFF);
    r.push(
        name,
        "matches the bivalent-vertex complex",
        if got == want {
            Ok(())
        } else {
            Err(format!("{got:?} vs {want:?}"))
        },
    );
    Ok(())
}

fn check_z5(r: &mut FixtureReport) -> Result<(), KnotError> {
    let c = load_fixture("z5")?;
    r.push("z5", "d^2 = 0", c.squares_to_zero());
    let ring = c.ring().clone();
    let vars: Vec<PolyZ2> = (0..4).map(|i| ring.var(i)).collect();
    let model = koszul(&ring, &vars)?;
    let h = graded_homology(&c, 0, CUTOFF)?;
    let hm = graded_homology(&model, 0, CUTOFF)?;
    let ok = h.total() == 1 && normalized(&h, CUTOFF) == normalized(&hm, CUTOFF);
    r.push(
        "z5",
        "Koszul homology on U1..U4",
        if ok {
            Ok(())
        } else {
            Err(format!("{:?}", h.dims))
        },
    );
    Ok(())
}

/// Build every fixture, verify d^2 = 0, run the cancellations and the
/// per-cycle assertions.
pub fn appendix_fixtures() -> Result<FixtureReport, KnotError> {
    let mut r = FixtureReport::default();
    for (name, _) in FIXTURES {
        let c = load_fixture(name)?;
        r.push(name, "d^2 = 0", c.squares_to_zero());
    }
    check_z0(&mut r)?;
    check_z1(&mut r)?;
    check_z2(&mut r)?;
    check_diagonal(&mut r, "z3", ["U1", "U4"])?;
    check_diagonal(&mut r, "z4", ["U2", "U3"])?;
    check_z5(&mut r)?;
    Ok(r)
}

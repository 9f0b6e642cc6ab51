//! One function per subcommand, each producing a [`Report`].

use knotcomp::complex::cube::middle_euler;
use knotcomp::complex::{
    appendix_fixtures, middle_homfly_homology, sl_minus1_homology, GradedDims,
};
use knotcomp::cycles::{
    cycle_json, enumerate_cycles, is_admissible, local_types, s_value, subdiagram, turn_stats,
};
use knotcomp::gradings::{
    alexander_euler_term, bigrading_shift, euler_alexander_check, euler_homfly_check,
    homfly_euler_term, triple_shift, HomflyEulerVariant, LabelingData,
};
use knotcomp::{
    Composer, Diagram, HomflyEvaluator, JaegerConvention, KnotError, MultiCycle, SignConvention,
};
use serde_json::{json, Value};

use crate::report::Report;

fn cycle_label(z: &MultiCycle) -> String {
    if z.is_empty() {
        "∅".into()
    } else {
        z.to_string()
    }
}

fn strings<const N: usize>(cells: [&str; N]) -> Vec<String> {
    cells.iter().map(|s| s.to_string()).collect()
}

pub fn homfly(d: &Diagram, n: Option<i32>, prime: bool) -> Result<Report, KnotError> {
    let mut h = HomflyEvaluator::new();
    let (name, value) = match (n, prime) {
        (Some(n), _) => (format!("P_{n}(q)"), h.specialize(d, n)?.to_string()),
        (None, true) => ("P'_H(a,q)".to_string(), h.homfly_prime(d).to_string()),
        (None, false) => ("P_H(a,q)".to_string(), h.homfly(d)?.to_string()),
    };
    let mut r = Report::new(json!({ "diagram": d.to_json(), "invariant": name, "value": value }));
    r.line(value);
    Ok(r)
}

pub fn labelings(d: &Diagram, all: bool) -> Result<Report, KnotError> {
    let mut rows = vec![strings([
        "cycle",
        "local_types",
        "admissible",
        "T+",
        "T-",
        "D+",
        "D-",
        "X+",
        "X-",
        "s1",
        "s2",
        "r1",
        "r2",
    ])];
    let mut items = Vec::new();
    for z in enumerate_cycles(d, !all) {
        let st = turn_stats(d, &z)?;
        let types: Vec<String> = local_types(d, &z)?
            .iter()
            .map(|t| format!("{t:?}"))
            .collect();
        let (d1, d2) = (subdiagram(d, &z, 1), subdiagram(d, &z, 2));
        rows.push(vec![
            cycle_label(&z),
            types.join(","),
            is_admissible(d, &z).to_string(),
            st.t_pos.to_string(),
            st.t_neg.to_string(),
            st.d_pos.to_string(),
            st.d_neg.to_string(),
            st.x_pos.to_string(),
            st.x_neg.to_string(),
            s_value(d, &z, 1).to_string(),
            s_value(d, &z, 2).to_string(),
            d1.marked_rotation_number().to_string(),
            d2.marked_rotation_number().to_string(),
        ]);
        items.push(cycle_json(d, &z)?);
    }
    let mut r = Report::new(json!({ "diagram": d.to_json(), "labelings": items }));
    r.table(rows);
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionKind {
    Destabilized,
    Jaeger,
    Alexander,
}

pub fn composition(
    d: &Diagram,
    kind: CompositionKind,
    sign: SignConvention,
    circle_rotation: i64,
) -> Result<Report, KnotError> {
    let mut c = Composer::new();
    let (rows, total, expected): (Vec<(String, usize, String)>, String, String) = match kind {
        CompositionKind::Destabilized => {
            let terms = c.destabilized_terms(d, sign)?;
            let rows = terms
                .iter()
                .map(|t| (cycle_label(&t.cycle), t.turns, t.value().to_string()))
                .collect();
            let total = c.composition_destabilized(d, sign)?;
            (
                rows,
                total.to_string(),
                c.destabilized_oracle(d)?.to_string(),
            )
        }
        CompositionKind::Jaeger => {
            let conv = JaegerConvention {
                sign,
                circle_rotation,
            };
            let total = c.composition_jaeger(d, conv)?;
            (
                Vec::new(),
                total.to_string(),
                c.jaeger_oracle(d).to_string(),
            )
        }
        CompositionKind::Alexander => {
            let total = c.alexander_composition(d, sign)?;
            (
                Vec::new(),
                total.to_string(),
                c.alexander_oracle(d)?.to_string(),
            )
        }
    };
    let mut r = Report::new(Value::Null);
    let verdict = r.check(total == expected);
    if !rows.is_empty() {
        let mut table = vec![strings(["cycle", "T", "contribution"])];
        table.extend(
            rows.iter()
                .map(|(z, t, v)| vec![z.clone(), t.to_string(), v.clone()]),
        );
        r.table(table);
    }
    r.line(format!("TOTAL {total}  {verdict}"));
    r.line(format!("ORACLE {expected}"));
    r.json = json!({
        "diagram": d.to_json(),
        "kind": format!("{kind:?}"),
        "terms": rows.iter().map(|(z, t, v)| json!({"cycle": z, "turns": t, "contribution": v})).collect::<Vec<_>>(),
        "total": total,
        "oracle": expected,
        "pass": verdict == "PASS",
    });
    Ok(r)
}

pub fn euler_check(
    d: &Diagram,
    homfly: bool,
    variant: HomflyEulerVariant,
) -> Result<Report, KnotError> {
    let mut c = Composer::new();
    let mut table = vec![if homfly {
        strings(["labeling", "T", "q", "h", "v", "contribution"])
    } else {
        strings(["labeling", "T", "M", "A", "contribution"])
    }];
    let mut rows = Vec::new();
    for z in enumerate_cycles(d, true) {
        let l = LabelingData::new(d, &z)?;
        let t = l.stats.turns();
        let row = if homfly {
            let g = triple_shift(d, &z)?;
            let term = homfly_euler_term(d, &l, variant, &mut c)?.to_string();
            rows.push(json!({"labeling": z.edges(), "turns": t, "shift": g, "contribution": term}));
            vec![
                cycle_label(&z),
                t.to_string(),
                g.q.to_string(),
                g.h.to_string(),
                g.v.to_string(),
                term,
            ]
        } else {
            let b = bigrading_shift(d, &z)?;
            let term = alexander_euler_term(&l).to_string();
            rows.push(json!({"labeling": z.edges(), "turns": t, "shift": b, "contribution": term}));
            vec![cycle_label(&z), t.to_string(), half(b.m2), half(b.a2), term]
        };
        table.push(row);
    }
    let report = if homfly {
        euler_homfly_check(d, variant, &mut c)?
    } else {
        euler_alexander_check(d, &mut c)?
    };
    let mut r = Report::new(Value::Null);
    let verdict = r.check(report.pass());
    r.table(table);
    r.line(format!("FORMULA {}", report.formula));
    r.line(format!("GRADED {}", report.graded));
    r.line(format!("EXPECTED {}  {verdict}", report.expected));
    r.json = json!({ "diagram": d.to_json(), "rows": rows, "report": report.to_json() });
    Ok(r)
}

fn half(x2: i64) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{x2}/2")
    }
}

fn dims_table(h: &GradedDims, header: Vec<String>) -> Vec<Vec<String>> {
    let mut table = vec![header];
    for (g, n) in &h.dims {
        let mut row: Vec<String> = g.iter().map(i64::to_string).collect();
        row.push(n.to_string());
        table.push(row);
    }
    table
}

pub fn homology(
    d: &Diagram,
    cutoff: i64,
    reduce: Option<usize>,
    sl_minus1: bool,
) -> Result<Report, KnotError> {
    let mut r = Report::new(Value::Null);
    if sl_minus1 {
        let h = sl_minus1_homology(d, cutoff)?;
        r.line(format!(
            "sl(-1) homology, doubled (M, A), internal degree -2A <= {cutoff}"
        ));
        r.table(dims_table(&h, strings(["2M", "2A", "dim"])));
        r.json = json!({ "diagram": d.to_json(), "kind": "sl-1", "homology": h.to_json() });
        return Ok(r);
    }
    let k = reduce.unwrap_or_else(|| d.component_count());
    let h = middle_homfly_homology(d, k, cutoff)?;
    let euler = middle_euler(&h)?;
    r.line(format!(
        "middle HOMFLY-PT homology, {k} reductions, (q, h, v), internal degree q - h <= {cutoff}"
    ));
    r.table(dims_table(&h, strings(["q", "h", "v", "dim"])));
    r.line(format!("EULER {euler}"));
    r.json = json!({
        "diagram": d.to_json(),
        "kind": "middle",
        "reductions": k,
        "homology": h.to_json(),
        "euler": euler.to_string(),
    });
    Ok(r)
}

pub fn fixtures() -> Result<Report, KnotError> {
    let report = appendix_fixtures()?;
    let mut r = Report::new(report.to_json());
    let mut table = Vec::new();
    for c in &report.checks {
        let verdict = r.check(c.pass);
        table.push(vec![
            verdict.to_string(),
            c.fixture.clone(),
            c.check.clone(),
            c.detail.clone(),
        ]);
    }
    r.table(table);
    Ok(r)
}

//! Grading shifts of the labeling summands and the Euler characteristics they
//! produce. Half-integer gradings are stored doubled.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::composition::Composer;
use crate::cycles::{enumerate_cycles, s_value, subdiagram, turn_stats, MultiCycle, TurnStats};
use crate::diagram::Diagram;
use crate::error::KnotError;
use crate::laurent::{Exps, MonomialMap, Var};
use crate::{HomflyValue, LaurentPoly};

/// Maslov and Alexander gradings, both doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bigrading {
    pub m2: i64,
    pub a2: i64,
}

impl Bigrading {
    pub fn maslov(&self) -> f64 {
        self.m2 as f64 / 2.0
    }

    pub fn alexander(&self) -> f64 {
        self.a2 as f64 / 2.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TripleGrading {
    pub q: i64,
    pub h: i64,
    pub v: i64,
}

/// Absolute Maslov normalization added to the relative multicycle gradings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum OverallShift {
    /// `{-w(D) + r(D), -(w(D) - r(D))/2}`
    #[default]
    MinusWPlusR,
    /// `{-w(D) - r(D), -(w(D) - r(D))/2}`
    MinusWMinusR,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PoincareMode {
    BigradedReduced,
    /// Unreduced at the marked edge; `u_powers` truncates the `Z2[U]` factor
    /// of the empty labeling.
    BigradedMinus {
        u_powers: usize,
    },
    TripleReduced,
}

/// Labeled quantities entering every shift formula.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabelingData {
    pub cycle: MultiCycle,
    pub stats: TurnStats,
    pub w: i64,
    pub r: i64,
    pub w1: i64,
    pub w2: i64,
    pub r1: i64,
    pub r2: i64,
    pub s1: i64,
    pub s2: i64,
    pub components2: usize,
    /// Discs of the cycle's circles that avoid / contain the marked edge.
    pub k_plus: i64,
    pub k_minus: i64,
}

impl LabelingData {
    pub fn new(d: &Diagram, z: &MultiCycle) -> Result<Self, KnotError> {
        let stats = turn_stats(d, z)?;
        let d1 = subdiagram(d, z, 1);
        let d2 = subdiagram(d, z, 2);
        Ok(LabelingData {
            cycle: z.clone(),
            stats,
            w: d.writhe(),
            r: d.marked_rotation_number(),
            w1: d1.writhe(),
            w2: d2.writhe(),
            r1: d1.marked_rotation_number(),
            r2: d2.marked_rotation_number(),
            s1: s_value(d, z, 1),
            s2: s_value(d, z, 2),
            components2: d2.component_count(),
            // every circle of the cycle winds once around the braid axis and
            // stays strictly inside the outermost strand that carries e0
            k_plus: d1.strand_count() as i64,
            k_minus: 0,
        })
    }

    fn signed_counts(&self) -> (i64, i64, i64) {
        let s = &self.stats;
        (
            s.t_pos as i64 - s.t_neg as i64,
            s.d_pos as i64 - s.d_neg as i64,
            s.x_pos as i64 - s.x_neg as i64,
        )
    }
}

/// Relative multicycle grading plus the overall normalization, doubled.
pub fn bigrading_shift_with(l: &LabelingData, shift: OverallShift) -> Bigrading {
    let (t, dd, x) = l.signed_counts();
    let rel_m2 = 2 * (dd + x + l.k_plus - l.k_minus) + t;
    let rel_a2 = dd + t + 2 * x;
    let overall_m2 = match shift {
        OverallShift::MinusWPlusR => 2 * (-l.w + l.r),
        OverallShift::MinusWMinusR => 2 * (-l.w - l.r),
    };
    Bigrading {
        m2: rel_m2 + overall_m2,
        a2: rel_a2 - (l.w - l.r),
    }
}

/// `{-w(D_{f,2}) + r(D_{f,2}) - (T+ - T-)/2, (w(D_{f,1}) - w(D_{f,2}) + r(D))/2}`.
pub fn bigrading_closed_form(l: &LabelingData) -> Bigrading {
    let (t, _, _) = l.signed_counts();
    Bigrading {
        m2: 2 * (-l.w2 + l.r2) - t,
        a2: l.w1 - l.w2 + l.r,
    }
}

pub fn bigrading_shift(d: &Diagram, z: &MultiCycle) -> Result<Bigrading, KnotError> {
    Ok(bigrading_shift_with(
        &LabelingData::new(d, z)?,
        OverallShift::default(),
    ))
}

/// `(q, h, v)` shifts; `euler_mode` moves the reducing complexes so each one
/// has Euler characteristic `q - q^-1`, lowering `v` by `T`.
pub fn triple_shift_of(l: &LabelingData, euler_mode: bool) -> TripleGrading {
    let s = &l.stats;
    let mut v = l.w + l.r1 - l.s2 - s.d_pos as i64 + s.d_neg as i64;
    if euler_mode {
        v -= s.turns() as i64;
    }
    TripleGrading {
        q: -l.r2 + l.s2,
        h: l.r1 + l.s1,
        v,
    }
}

pub fn triple_shift(d: &Diagram, z: &MultiCycle) -> Result<TripleGrading, KnotError> {
    Ok(triple_shift_of(&LabelingData::new(d, z)?, false))
}

/// `gr_q = 2A - 2M - v` and `gr_h = 4A - 2M - v`, from doubled `M`, `A`.
pub fn triple_from_bigrading(b: Bigrading, v: i64) -> TripleGrading {
    TripleGrading {
        q: b.a2 - b.m2 - v,
        h: 2 * b.a2 - b.m2 - v,
        v,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionSummand {
    pub cycle: MultiCycle,
    pub tensor_power: usize,
    pub bigrading: Bigrading,
    pub triple: TripleGrading,
}

pub fn summands(d: &Diagram) -> Result<Vec<(LabelingData, DecompositionSummand)>, KnotError> {
    enumerate_cycles(d, true)
        .iter()
        .map(|z| {
            let l = LabelingData::new(d, z)?;
            let s = DecompositionSummand {
                cycle: z.clone(),
                tensor_power: l.stats.turns(),
                bigrading: bigrading_shift_with(&l, OverallShift::default()),
                triple: triple_shift_of(&l, false),
            };
            Ok((l, s))
        })
        .collect()
}

/// Doubled `(M, A)` gradings of a basis of `V^{⊗n}` shifted by `b`.
fn v_power(n: usize, b: Bigrading, out: &mut BTreeMap<(i64, i64), u64>) {
    for ups in 0..=n {
        let e = 2 * ups as i64 - n as i64;
        let mult = binomial(n, ups);
        *out.entry((b.m2 + e, b.a2 + e)).or_default() += mult;
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Poincaré data of the labeling decomposition.
#[derive(Debug, Clone, PartialEq)]
pub enum Poincare {
    /// Doubled `(M, A)` to dimension.
    Bigraded(BTreeMap<(i64, i64), u64>),
    /// Euler characteristic `Σ (-1)^{(v-h)/2} q^{gr_q} a^{gr_h}` of the
    /// triply graded decomposition.
    Triple(HomflyValue),
}

impl Poincare {
    pub fn total_dimension(&self) -> Option<u64> {
        match self {
            Poincare::Bigraded(m) => Some(m.values().sum()),
            Poincare::Triple(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Poincare::Bigraded(m) => Value::Array(
                m.iter()
                    .map(|((m2, a2), n)| json!({ "m2": m2, "a2": a2, "dim": n }))
                    .collect(),
            ),
            Poincare::Triple(p) => json!({ "euler": p.to_string() }),
        }
    }
}

/// `Σ (-1)^M q^{2A}`; fails on a half-integer Maslov grading.
pub fn bigraded_euler(m: &BTreeMap<(i64, i64), u64>) -> Result<LaurentPoly, KnotError> {
    let mut out = LaurentPoly::zero();
    for (&(m2, a2), &n) in m {
        if m2 % 2 != 0 {
            return Err(KnotError::Grading(format!(
                "half-integer Maslov grading {m2}/2"
            )));
        }
        let sign = if (m2 / 2) % 2 == 0 { 1 } else { -1 };
        out.add_term(Exps::of(Var::Q, a2 as i32), (sign * n as i64).into());
    }
    Ok(out)
}

pub fn decomposition_poincare(
    d: &Diagram,
    mode: PoincareMode,
    composer: &mut Composer,
) -> Result<Poincare, KnotError> {
    let parts = summands(d)?;
    match mode {
        PoincareMode::BigradedReduced | PoincareMode::BigradedMinus { .. } => {
            let mut out = BTreeMap::new();
            for (_, s) in &parts {
                match (mode, s.tensor_power) {
                    (PoincareMode::BigradedMinus { u_powers }, 0) => {
                        for u in 0..u_powers as i64 {
                            let b = Bigrading {
                                m2: s.bigrading.m2 - 4 * u,
                                a2: s.bigrading.a2 - 2 * u,
                            };
                            *out.entry((b.m2, b.a2)).or_default() += 1;
                        }
                    }
                    (PoincareMode::BigradedMinus { .. }, t) => {
                        v_power(t - 1, s.bigrading, &mut out)
                    }
                    (_, t) => v_power(t, s.bigrading, &mut out),
                }
            }
            Ok(Poincare::Bigraded(out))
        }
        PoincareMode::TripleReduced => {
            let mut acc = HomflyValue::zero();
            for (l, _) in &parts {
                let g = triple_shift_of(l, true);
                let t = l.stats.turns();
                let diff = g.v - g.h;
                if diff % 2 != 0 {
                    return Err(KnotError::Grading(format!("odd v - h = {diff}")));
                }
                let sign = if (diff / 2) % 2 == 0 { 1 } else { -1 };
                let pre = &LaurentPoly::difference(Var::Q).pow(t as u32)
                    * &LaurentPoly::monomial(Exps([g.h as i32, 0, 0, g.q as i32]), sign.into());
                let d2 = subdiagram(d, &l.cycle, 2);
                let right = composer.homfly().homfly(&d2.mirror())?;
                acc = acc.add(&right.mul_poly(&pre));
            }
            Ok(Poincare::Triple(acc))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EulerReport {
    /// The labeling-sum formula.
    pub formula: HomflyValue,
    /// The same quantity read off the graded decomposition.
    pub graded: HomflyValue,
    /// The skein-side value.
    pub expected: HomflyValue,
}

impl EulerReport {
    pub fn pass(&self) -> bool {
        self.formula == self.expected && self.graded == self.expected
    }

    pub fn to_json(&self) -> Value {
        json!({
            "formula": self.formula.to_string(),
            "graded": self.graded.to_string(),
            "expected": self.expected.to_string(),
            "pass": self.pass(),
        })
    }
}

/// One labeling's term `±(q - q^-1)^T q^{r + s1 - s2}` of the Alexander
/// Euler characteristic.
pub fn alexander_euler_term(l: &LabelingData) -> LaurentPoly {
    let sign_exp = l.stats.t_neg + l.components2 + 1;
    let term = &LaurentPoly::difference(Var::Q).pow(l.stats.turns() as u32)
        * &LaurentPoly::var_pow(Var::Q, (l.r + l.s1 - l.s2) as i32);
    if sign_exp.is_multiple_of(2) {
        term
    } else {
        -term
    }
}

pub fn euler_alexander_check(
    d: &Diagram,
    composer: &mut Composer,
) -> Result<EulerReport, KnotError> {
    let mut formula = LaurentPoly::zero();
    for z in enumerate_cycles(d, true) {
        formula += &alexander_euler_term(&LabelingData::new(d, &z)?);
    }
    let Poincare::Bigraded(m) = decomposition_poincare(d, PoincareMode::BigradedReduced, composer)?
    else {
        unreachable!("bigraded mode returns bigraded data")
    };
    Ok(EulerReport {
        formula: HomflyValue::from_poly(formula),
        graded: HomflyValue::from_poly(bigraded_euler(&m)?),
        expected: HomflyValue::from_poly(composer.alexander_oracle(d)?),
    })
}

/// Exponent and sign conventions for the triply graded Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum HomflyEulerVariant {
    /// `(-1)^{T+} z^T q^{-r2+s2} a^{r1+s1} P_H(a, q, m(D_{f,2}))`, the
    /// exponents of the triple shifts.
    #[default]
    FromShifts,
    /// `(-1)^{T+} z^T q^{r2+s2} a^{-r1+s1} P_H(a, q, m(D_{f,2}))`.
    Reflected,
}

/// One labeling's term of the HOMFLY-PT Euler characteristic.
pub fn homfly_euler_term(
    d: &Diagram,
    l: &LabelingData,
    variant: HomflyEulerVariant,
    composer: &mut Composer,
) -> Result<HomflyValue, KnotError> {
    let (qe, ae) = match variant {
        HomflyEulerVariant::FromShifts => (-l.r2 + l.s2, l.r1 + l.s1),
        HomflyEulerVariant::Reflected => (l.r2 + l.s2, -l.r1 + l.s1),
    };
    let sign: i32 = if l.stats.t_pos.is_multiple_of(2) { 1 } else { -1 };
    let pre = &LaurentPoly::difference(Var::Q).pow(l.stats.turns() as u32)
        * &LaurentPoly::monomial(Exps([ae as i32, 0, 0, qe as i32]), sign.into());
    let d2 = subdiagram(d, &l.cycle, 2);
    Ok(composer.homfly().homfly(&d2.mirror())?.mul_poly(&pre))
}

pub fn euler_homfly_check(
    d: &Diagram,
    variant: HomflyEulerVariant,
    composer: &mut Composer,
) -> Result<EulerReport, KnotError> {
    let mut formula = HomflyValue::zero();
    for z in enumerate_cycles(d, true) {
        let l = LabelingData::new(d, &z)?;
        formula = formula.add(&homfly_euler_term(d, &l, variant, composer)?);
    }
    let Poincare::Triple(graded) =
        decomposition_poincare(d, PoincareMode::TripleReduced, composer)?
    else {
        unreachable!("triple mode returns an Euler characteristic")
    };
    let expected = composer
        .homfly()
        .homfly(&d.mirror())?
        .substitute(&MonomialMap::a_times_q());
    Ok(EulerReport {
        formula,
        graded,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::diagram::close_braid;

    fn d(s: &str) -> Diagram {
        close_braid(&parse_braid(s).unwrap())
    }

    #[test]
    fn unknot_shifts_vanish() {
        let u = d("");
        let z = MultiCycle::empty();
        assert_eq!(bigrading_shift(&u, &z).unwrap(), Bigrading { m2: 0, a2: 0 });
        assert_eq!(
            triple_shift(&u, &z).unwrap(),
            TripleGrading { q: 0, h: 0, v: 0 }
        );
    }

    #[test]
    fn trefoil_empty_labeling() {
        let t = d("1 1 1");
        let z = MultiCycle::empty();
        assert_eq!(
            bigrading_shift(&t, &z).unwrap(),
            Bigrading { m2: -8, a2: -4 }
        );
        assert_eq!(
            triple_shift(&t, &z).unwrap(),
            TripleGrading { q: 4, h: 0, v: 0 }
        );
    }

    #[test]
    fn closed_form_agrees_with_normalized_relative_grading() {
        let t = d("1 -2 1 -2");
        for z in enumerate_cycles(&t, true) {
            let l = LabelingData::new(&t, &z).unwrap();
            assert_eq!(
                bigrading_shift_with(&l, OverallShift::MinusWPlusR),
                bigrading_closed_form(&l)
            );
        }
    }

    #[test]
    fn trefoil_dimension_and_euler() {
        let mut c = Composer::new();
        let t = d("1 1 1");
        let p = decomposition_poincare(&t, PoincareMode::BigradedReduced, &mut c).unwrap();
        assert_eq!(p.total_dimension(), Some(13));
        let r = euler_alexander_check(&t, &mut c).unwrap();
        assert!(r.pass());
        assert_eq!(r.formula.to_string(), "q^2 - 1 + q^-2");
        assert!(
            euler_homfly_check(&t, HomflyEulerVariant::default(), &mut c)
                .unwrap()
                .pass()
        );
        assert!(
            euler_homfly_check(&t.mirror(), HomflyEulerVariant::default(), &mut c)
                .unwrap()
                .pass()
        );
    }

    #[test]
    fn minus_mode_of_unknot_is_a_polynomial_ring() {
        let mut c = Composer::new();
        let p = decomposition_poincare(&d(""), PoincareMode::BigradedMinus { u_powers: 3 }, &mut c)
            .unwrap();
        let Poincare::Bigraded(m) = p else { panic!() };
        assert_eq!(
            m.into_iter().collect::<Vec<_>>(),
            [((-8, -4), 1), ((-4, -2), 1), ((0, 0), 1)]
        );
    }
}

//! Composition products: sums over admissible labelings of products of
//! invariants of the two labeled subdiagrams.

use serde::Serialize;
use serde_json::{json, Value};

use crate::cycles::{enumerate_cycles, is_admissible, s_value, subdiagram, turn_stats, MultiCycle};
use crate::diagram::Diagram;
use crate::error::KnotError;
use crate::homfly::Homfly;
use crate::laurent::{Exps, MonomialMap, Var};
use crate::{HomflyValue, LaurentPoly};

/// Whether a labeling contributes the sign `(-1)^{T-}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum SignConvention {
    #[default]
    Signed,
    Unsigned,
}

impl SignConvention {
    fn sign(self, t_neg: usize) -> i32 {
        match self {
            SignConvention::Signed if t_neg % 2 == 1 => -1,
            _ => 1,
        }
    }
}

/// Conventions for the classical (unmarked) composition product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JaegerConvention {
    pub sign: SignConvention,
    /// Rotation number contributed by each Seifert circle.
    pub circle_rotation: i64,
}

impl Default for JaegerConvention {
    fn default() -> Self {
        JaegerConvention {
            sign: SignConvention::Signed,
            circle_rotation: 1,
        }
    }
}

/// One summand: `prefactor · left · right`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositionTerm {
    pub cycle: MultiCycle,
    pub turns: usize,
    pub prefactor: LaurentPoly,
    pub left: HomflyValue,
    pub right: HomflyValue,
}

impl CompositionTerm {
    pub fn value(&self) -> HomflyValue {
        self.left.mul(&self.right).mul_poly(&self.prefactor)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cycle": self.cycle.edges(),
            "turns": self.turns,
            "prefactor": self.prefactor.to_string(),
            "left": self.left.to_string(),
            "right": self.right.to_string(),
            "value": self.value().to_string(),
        })
    }
}

fn monomial(a: i64, q: i64) -> LaurentPoly {
    LaurentPoly::monomial(Exps([a as i32, 0, 0, q as i32]), 1.into())
}

fn z_pow(t: usize) -> LaurentPoly {
    LaurentPoly::difference(Var::Q).pow(t as u32)
}

fn signed(p: LaurentPoly, s: i32) -> LaurentPoly {
    if s < 0 {
        -p
    } else {
        p
    }
}

/// Evaluator bundling a skein memo table.
#[derive(Default)]
pub struct Composer {
    homfly: Homfly<num_bigint::BigInt>,
}

impl Composer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn homfly(&mut self) -> &mut Homfly<num_bigint::BigInt> {
        &mut self.homfly
    }

    /// `P_H(q, q, ·)`, which is 1 on every link and on the empty diagram.
    fn p_one(&mut self, d: &Diagram) -> Result<HomflyValue, KnotError> {
        if d.is_empty() {
            return Ok(HomflyValue::one());
        }
        Ok(self
            .homfly
            .homfly(d)?
            .substitute(&MonomialMap::a_to_q_pow(1)))
    }

    pub fn term_for_labeling(
        &mut self,
        d: &Diagram,
        z: &MultiCycle,
        conv: SignConvention,
    ) -> Result<CompositionTerm, KnotError> {
        if !is_admissible(d, z) {
            return Err(KnotError::Inadmissible(z.to_string()));
        }
        let st = turn_stats(d, z)?;
        let d1 = subdiagram(d, z, 1);
        let d2 = subdiagram(d, z, 2);
        let (r1, r2) = (d1.marked_rotation_number(), d2.marked_rotation_number());
        let (s1, s2) = (s_value(d, z, 1), s_value(d, z, 2));
        let prefactor = signed(
            &z_pow(st.turns()) * &monomial(-r1 - s1, r2 - s2),
            conv.sign(st.t_neg),
        );
        Ok(CompositionTerm {
            cycle: z.clone(),
            turns: st.turns(),
            prefactor,
            left: self.p_one(&d1)?,
            right: self.homfly.homfly(&d2)?,
        })
    }

    pub fn destabilized_terms(
        &mut self,
        d: &Diagram,
        conv: SignConvention,
    ) -> Result<Vec<CompositionTerm>, KnotError> {
        enumerate_cycles(d, true)
            .iter()
            .map(|z| self.term_for_labeling(d, z, conv))
            .collect()
    }

    /// Sum over admissible labelings with the marked edge labeled 2. Should
    /// equal `P_H(aq, q, D)`.
    pub fn composition_destabilized(
        &mut self,
        d: &Diagram,
        conv: SignConvention,
    ) -> Result<HomflyValue, KnotError> {
        Ok(self
            .destabilized_terms(d, conv)?
            .iter()
            .fold(HomflyValue::zero(), |acc, t| acc.add(&t.value())))
    }

    /// `P_H(aq, q, D)` straight from the skein evaluator.
    pub fn destabilized_oracle(&mut self, d: &Diagram) -> Result<HomflyValue, KnotError> {
        Ok(self.homfly.homfly(d)?.substitute(&MonomialMap::a_times_q()))
    }

    /// Classical product in `(a1, a2, q)` over all admissible labelings of the
    /// unmarked diagram. Should equal `P′_H(a1·a2, q, D)`.
    pub fn composition_jaeger(
        &mut self,
        d: &Diagram,
        conv: JaegerConvention,
    ) -> Result<HomflyValue, KnotError> {
        let unmarked = d.unmarked();
        let mut acc = HomflyValue::zero();
        for z in enumerate_cycles(&unmarked, true) {
            let st = turn_stats(&unmarked, &z)?;
            let d1 = subdiagram(&unmarked, &z, 1);
            let d2 = subdiagram(&unmarked, &z, 2);
            let r1 = conv.circle_rotation * d1.strand_count() as i64;
            let r2 = conv.circle_rotation * d2.strand_count() as i64;
            let pre = signed(
                &z_pow(st.turns())
                    * &LaurentPoly::monomial(Exps([0, r2 as i32, -r1 as i32, 0]), 1.into()),
                conv.sign.sign(st.t_neg),
            );
            let left = self.homfly.homfly_prime_in(&d1, Var::A1);
            let right = self.homfly.homfly_prime_in(&d2, Var::A2);
            acc = acc.add(&left.mul(&right).mul_poly(&pre));
        }
        Ok(acc)
    }

    pub fn jaeger_oracle(&mut self, d: &Diagram) -> HomflyValue {
        self.homfly
            .homfly_prime(d)
            .substitute(&MonomialMap::identity().with(Var::A, Exps([0, 1, 1, 0])))
    }

    /// Specialization at `a = 1`, written with `P_1` of the label-1 part and
    /// `P_{-1} = (-1)^{components+1}` of the label-2 part.
    pub fn alexander_composition(
        &mut self,
        d: &Diagram,
        conv: SignConvention,
    ) -> Result<LaurentPoly, KnotError> {
        let r = d.marked_rotation_number();
        let mut acc = LaurentPoly::zero();
        for z in enumerate_cycles(d, true) {
            let st = turn_stats(d, &z)?;
            let d1 = subdiagram(d, &z, 1);
            let d2 = subdiagram(d, &z, 2);
            let (s1, s2) = (s_value(d, &z, 1), s_value(d, &z, 2));
            let p1 = self.p_one(&d1)?.try_poly()?;
            let pm1 = if d2.component_count() % 2 == 1 { 1 } else { -1 };
            let term = &(&z_pow(st.turns()) * &monomial(0, r + s1 - s2)) * &p1;
            acc += &signed(term, conv.sign(st.t_neg) * pm1);
        }
        Ok(acc)
    }

    pub fn alexander_oracle(&mut self, d: &Diagram) -> Result<LaurentPoly, KnotError> {
        self.homfly.specialize(d, 0)
    }
}

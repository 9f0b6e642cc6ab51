//! HOMFLY-PT polynomial by skein recursion on braid closures.
//!
//! Normalization: `a·P(L+) − a⁻¹·P(L−) = z·P(L0)` with `z = q − q⁻¹` and
//! `P(unknot) = 1`. Values live in `Z[a±, q±][z⁻¹]` and are carried as
//! [`ZQuotient`]s.

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::braid::{cycle_count, permutation};
use crate::diagram::Diagram;
use crate::error::KnotError;
use crate::laurent::{Coeff, Exps, Laurent, MonomialMap, Var};

/// `num / z^zpow`, kept with `z ∤ num` so equal values compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZQuotient<C> {
    num: Laurent<C>,
    zpow: u32,
}

fn z<C: Coeff>() -> Laurent<C> {
    Laurent::difference(Var::Q)
}

impl<C: Coeff> ZQuotient<C> {
    pub fn new(num: Laurent<C>, zpow: u32) -> Self {
        let mut r = ZQuotient { num, zpow };
        r.normalize();
        r
    }

    pub fn from_poly(p: Laurent<C>) -> Self {
        ZQuotient { num: p, zpow: 0 }
    }

    pub fn zero() -> Self {
        Self::from_poly(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Laurent::one())
    }

    /// `(v − v⁻¹)/(q − q⁻¹)`, the value of a split unknot component.
    pub fn delta(v: Var) -> Self {
        Self::new(Laurent::difference(v), 1)
    }

    pub fn numerator(&self) -> &Laurent<C> {
        &self.num
    }

    pub fn z_power(&self) -> u32 {
        self.zpow
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.zpow = 0;
            return;
        }
        let z = z::<C>();
        while self.zpow > 0 {
            match self.num.div_exact(&z) {
                Some(n) => {
                    self.num = n;
                    self.zpow -= 1;
                }
                None => break,
            }
        }
    }

    /// The polynomial value, when the denominator cancels.
    pub fn to_poly(&self) -> Option<Laurent<C>> {
        (self.zpow == 0).then(|| self.num.clone())
    }

    pub fn try_poly(&self) -> Result<Laurent<C>, KnotError> {
        self.to_poly()
            .ok_or_else(|| KnotError::InexactDivision(self.to_string()))
    }

    fn lift(&self, zpow: u32) -> Laurent<C> {
        &self.num * &z::<C>().pow(zpow - self.zpow)
    }

    pub fn add(&self, o: &Self) -> Self {
        let m = self.zpow.max(o.zpow);
        Self::new(&self.lift(m) + &o.lift(m), m)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let m = self.zpow.max(o.zpow);
        Self::new(&self.lift(m) - &o.lift(m), m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.num * &o.num, self.zpow + o.zpow)
    }

    pub fn mul_poly(&self, p: &Laurent<C>) -> Self {
        Self::new(&self.num * p, self.zpow)
    }

    pub fn neg(&self) -> Self {
        ZQuotient {
            num: -&self.num,
            zpow: self.zpow,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(self.num.pow(n), self.zpow * n)
    }

    /// Substitution of monomials for `a`, `a1`, `a2`; `q` must stay fixed so the
    /// denominator is untouched.
    pub fn substitute(&self, map: &MonomialMap) -> Self {
        debug_assert_eq!(map.apply(Exps::of(Var::Q, 1)), Exps::of(Var::Q, 1));
        Self::new(self.num.substitute(map), self.zpow)
    }

    /// `(a, q) ↦ (a⁻¹, q⁻¹)`; sends `z` to `−z`.
    pub fn invert_a_q(&self) -> Self {
        let num = self.num.substitute(&MonomialMap::invert_a_q());
        Self::new(if self.zpow % 2 == 1 { -num } else { num }, self.zpow)
    }

    pub fn to_json(&self) -> Value {
        json!({ "numerator": self.num.to_json(), "z_power": self.zpow })
    }
}

impl<C: Coeff> fmt::Display for ZQuotient<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.zpow {
            0 => write!(f, "{}", self.num),
            1 => write!(f, "({})/(q - q^-1)", self.num),
            k => write!(f, "({})/(q - q^-1)^{}", self.num, k),
        }
    }
}

impl<C: Coeff> fmt::Debug for ZQuotient<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZQuotient({self})")
    }
}

/// Skein evaluator with a per-instance memo table.
pub struct Homfly<C> {
    memo: HashMap<(usize, Vec<i32>), ZQuotient<C>>,
}

impl<C: Coeff> Default for Homfly<C> {
    fn default() -> Self {
        Self::new()
    }
}

/// First crossing met as the under-strand when walking the components from
/// the top of their leftmost position, or `None` if the closure is descending.
fn first_bad_crossing(strands: usize, letters: &[i32]) -> Option<usize> {
    let mut visited = vec![false; letters.len()];
    let mut started = vec![false; strands];
    for start in 0..strands {
        if started[start] {
            continue;
        }
        let mut p = start;
        loop {
            started[p] = true;
            for (ci, &l) in letters.iter().enumerate() {
                let left = l.unsigned_abs() as usize - 1;
                if p != left && p != left + 1 {
                    continue;
                }
                let from_left = p == left;
                if !visited[ci] {
                    visited[ci] = true;
                    let over = if l > 0 { from_left } else { !from_left };
                    if !over {
                        return Some(ci);
                    }
                }
                p = if from_left { left + 1 } else { left };
            }
            if p == start {
                break;
            }
        }
    }
    None
}

fn canonical(letters: &[i32]) -> Vec<i32> {
    (0..letters.len().max(1))
        .map(|k| {
            let mut v = letters.to_vec();
            if !v.is_empty() {
                v.rotate_left(k);
            }
            v
        })
        .min()
        .unwrap_or_default()
}

impl<C: Coeff> Homfly<C> {
    pub fn new() -> Self {
        Homfly {
            memo: HashMap::new(),
        }
    }

    /// `P_H(a, q)` of the closure of a nonempty braid.
    pub fn braid(&mut self, strands: usize, letters: &[i32]) -> ZQuotient<C> {
        let key = (strands, canonical(letters));
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = self.compute(strands, &key.1);
        self.memo.insert(key, v.clone());
        v
    }

    /// Walks one basepoint order: each bad crossing is switched in place (the
    /// first bad crossing then moves strictly later) and its smoothing, which
    /// has fewer crossings, is evaluated recursively.
    fn compute(&mut self, strands: usize, letters: &[i32]) -> ZQuotient<C> {
        let zl = z::<C>();
        let mono = |a: i32| Laurent::<C>::var_pow(Var::A, a);
        let mut word = letters.to_vec();
        let mut coef = Laurent::<C>::one();
        let mut acc = ZQuotient::zero();
        while let Some(ci) = first_bad_crossing(strands, &word) {
            let mut smoothed = word.clone();
            smoothed.remove(ci);
            let p0 = self.braid(strands, &smoothed);
            if word[ci] > 0 {
                // P(L+) = a⁻²P(L−) + a⁻¹zP(L0)
                acc = acc.add(&p0.mul_poly(&(&(&coef * &mono(-1)) * &zl)));
                coef = &coef * &mono(-2);
            } else {
                // P(L−) = a²P(L+) − azP(L0)
                acc = acc.sub(&p0.mul_poly(&(&(&coef * &mono(1)) * &zl)));
                coef = &coef * &mono(2);
            }
            word[ci] = -word[ci];
        }
        let c = cycle_count(&permutation(strands, &word)) as u32;
        acc.add(&ZQuotient::delta(Var::A).pow(c - 1).mul_poly(&coef))
    }

    /// `P_H(a, q, D)`. The empty diagram has no HOMFLY-PT polynomial in this
    /// normalization and is rejected.
    pub fn homfly(&mut self, d: &Diagram) -> Result<ZQuotient<C>, KnotError> {
        if d.is_empty() {
            return Err(KnotError::EmptyDiagram);
        }
        Ok(self.braid(d.strand_count(), d.letters()))
    }

    /// `P_H` as a Laurent polynomial; fails for links whose value keeps a
    /// `z` denominator.
    pub fn homfly_poly(&mut self, d: &Diagram) -> Result<Laurent<C>, KnotError> {
        self.homfly(d)?.try_poly()
    }

    /// `P′_H = δ·a^w·P_H`, with `P′_H(∅) = 1`. `v` names the variable used in
    /// place of `a`.
    pub fn homfly_prime_in(&mut self, d: &Diagram, v: Var) -> ZQuotient<C> {
        if d.is_empty() {
            return ZQuotient::one();
        }
        let p = self.braid(d.strand_count(), d.letters());
        let w = d.writhe() as i32;
        ZQuotient::delta(Var::A)
            .mul(&p)
            .mul_poly(&Laurent::var_pow(Var::A, w))
            .substitute(&MonomialMap::rename_a(v))
    }

    pub fn homfly_prime(&mut self, d: &Diagram) -> ZQuotient<C> {
        self.homfly_prime_in(d, Var::A)
    }

    /// `P_n(q) = P_H(qⁿ, q)`. The empty diagram gives 1 for `n = ±1`.
    pub fn specialize(&mut self, d: &Diagram, n: i32) -> Result<Laurent<C>, KnotError> {
        if d.is_empty() && n.abs() == 1 {
            return Ok(Laurent::one());
        }
        self.homfly(d)?
            .substitute(&MonomialMap::a_to_q_pow(n))
            .try_poly()
    }
}

//! Exact Laurent polynomials in the variables `a`, `a1`, `a2`, `q`.
//!
//! Every polynomial lives in the same four-variable exponent space; a variable
//! that does not occur simply has exponent zero everywhere. Coefficients are any
//! signed integer type (`i64`, `BigInt`, ...).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::ParseError;

/// Coefficient ring for [`Laurent`].
pub trait Coeff: Integer + Signed + Clone + fmt::Display + fmt::Debug + From<i32> {}

impl<T> Coeff for T where T: Integer + Signed + Clone + fmt::Display + fmt::Debug + From<i32> {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A = 0,
    A1 = 1,
    A2 = 2,
    Q = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::A, Var::A1, Var::A2, Var::Q];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::A1 => "a1",
            Var::A2 => "a2",
            Var::Q => "q",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Exponent vector indexed by [`Var`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exps(pub [i32; 4]);

impl Exps {
    pub fn of(v: Var, e: i32) -> Self {
        let mut x = [0; 4];
        x[v as usize] = e;
        Exps(x)
    }

    pub fn get(&self, v: Var) -> i32 {
        self.0[v as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }
}

impl Add for Exps {
    type Output = Exps;
    fn add(self, o: Exps) -> Exps {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(o.0) {
            *a += b;
        }
        Exps(x)
    }
}

impl Sub for Exps {
    type Output = Exps;
    fn sub(self, o: Exps) -> Exps {
        let mut x = self.0;
        for (a, b) in x.iter_mut().zip(o.0) {
            *a -= b;
        }
        Exps(x)
    }
}

/// A substitution sending each variable to a monomial. Covers `a -> q^n`,
/// `a -> a*q`, `(a, q) -> (a^-1, q^-1)`, `a -> a1*a2` and friends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialMap {
    images: [Exps; 4],
}

impl Default for MonomialMap {
    fn default() -> Self {
        Self::identity()
    }
}

impl MonomialMap {
    pub fn identity() -> Self {
        MonomialMap {
            images: Var::ALL.map(|v| Exps::of(v, 1)),
        }
    }

    /// Sends `v` to the monomial `image`.
    pub fn with(mut self, v: Var, image: Exps) -> Self {
        self.images[v as usize] = image;
        self
    }

    /// `a -> q^n`, the `sl_n` specialization.
    pub fn a_to_q_pow(n: i32) -> Self {
        Self::identity().with(Var::A, Exps::of(Var::Q, n))
    }

    /// `a -> a*q`.
    pub fn a_times_q() -> Self {
        Self::identity().with(Var::A, Exps([1, 0, 0, 1]))
    }

    /// `a -> a^-1`, `q -> q^-1`.
    pub fn invert_a_q() -> Self {
        Self::identity()
            .with(Var::A, Exps::of(Var::A, -1))
            .with(Var::Q, Exps::of(Var::Q, -1))
    }

    /// Renames `a` to another variable.
    pub fn rename_a(to: Var) -> Self {
        Self::identity().with(Var::A, Exps::of(to, 1))
    }

    pub fn apply(&self, e: Exps) -> Exps {
        let mut out = Exps::default();
        for v in Var::ALL {
            let k = e.get(v);
            if k != 0 {
                for w in Var::ALL {
                    out.0[w as usize] += k * self.images[v as usize].get(w);
                }
            }
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<C> {
    terms: BTreeMap<Exps, C>,
}

impl<C: Coeff> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Exps::default(), C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Exps::default(), c)
    }

    pub fn monomial(e: Exps, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Exps::of(v, 1), C::one())
    }

    /// `v^e`
    pub fn var_pow(v: Var, e: i32) -> Self {
        Self::monomial(Exps::of(v, e), C::one())
    }

    /// `v - v^-1`; with `v = q` this is the skein factor `z`.
    pub fn difference(v: Var) -> Self {
        Self::var_pow(v, 1) - Self::var_pow(v, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exps) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|e| e.get(v) != 0))
            .collect()
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: Exps) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k + e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| (*k, x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn substitute(&self, map: &MonomialMap) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(map.apply(*e), c.clone());
        }
        out
    }

    fn leading(&self) -> Option<(&Exps, &C)> {
        self.terms.iter().next_back()
    }

    fn trailing(&self) -> Option<(&Exps, &C)> {
        self.terms.iter().next()
    }

    /// Componentwise minimum and maximum exponents.
    pub fn degree_box(&self) -> (Exps, Exps) {
        let mut lo = [i32::MAX; 4];
        let mut hi = [i32::MIN; 4];
        for e in self.terms.keys() {
            for i in 0..4 {
                lo[i] = lo[i].min(e.0[i]);
                hi[i] = hi[i].max(e.0[i]);
            }
        }
        if self.is_zero() {
            return (Exps::default(), Exps::default());
        }
        (Exps(lo), Exps(hi))
    }

    /// Exact division. Returns `None` when `d` does not divide `self` in the
    /// Laurent ring with coefficients in `C`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dlead_e, dlead_c) = d.leading()?;
        let (dlead_e, dlead_c) = (*dlead_e, dlead_c.clone());
        let dtrail_e = *d.trailing()?.0;
        if self.is_zero() {
            return Some(Self::zero());
        }
        // every quotient term lies between these two in lex order
        let floor = *self.trailing()?.0 - dtrail_e;
        // per-variable degree box for the quotient
        let (plo, phi) = self.degree_box();
        let (dlo, dhi) = d.degree_box();
        let (qlo, qhi) = (plo - dlo, phi - dhi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading() {
            let qe = *re - dlead_e;
            if qe < floor || (0..4).any(|i| qe.0[i] < qlo.0[i] || qe.0[i] > qhi.0[i]) {
                return None;
            }
            let (qc, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return None;
            }
            let t = Self::monomial(qe, qc.clone());
            rem = &rem - &(&t * d);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(e, c)| {
                    let exps: serde_json::Map<String, Value> = Var::ALL
                        .into_iter()
                        .filter(|&v| e.get(v) != 0)
                        .map(|v| (v.name().to_string(), json!(e.get(v))))
                        .collect();
                    json!({ "exps": exps, "c": c.to_string() })
                })
                .collect(),
        )
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        let mut out = Laurent::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_zero() {
                parts.push(abs.to_string());
            }
            for v in Var::ALL {
                match e.get(v) {
                    0 => {}
                    1 => parts.push(v.name().to_string()),
                    k => parts.push(format!("{}^{}", v.name(), k)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coeff + FromStr> FromStr for Laurent<C> {
    type Err = ParseError;

    /// Parses the canonical text form, e.g. `a^-2*q^2 + a^-2*q^-2 - a^-4`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = |t: &str| ParseError::Polynomial(format!("{t:?} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad(""));
        }
        // split on top-level '+'/'-' that are not exponent signs
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let chars: Vec<char> = compact.chars().collect();
        for (i, &ch) in chars.iter().enumerate() {
            let after_caret = i > 0 && chars[i - 1] == '^';
            if (ch == '+' || ch == '-') && !after_caret {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if i != 0 {
                    return Err(bad(&compact));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad(&compact));
        }
        terms.push((neg, cur));

        let mut out = Self::zero();
        for (neg, t) in terms {
            let mut c = C::one();
            let mut e = Exps::default();
            for factor in t.split('*') {
                if factor.is_empty() {
                    return Err(bad(&t));
                }
                if factor.chars().next().is_some_and(|ch| ch.is_ascii_digit()) {
                    let k: C = factor.parse().map_err(|_| bad(factor))?;
                    c = c * k;
                    continue;
                }
                let (name, pow) = match factor.split_once('^') {
                    Some((n, p)) => (n, p.parse::<i32>().map_err(|_| bad(factor))?),
                    None => (factor, 1),
                };
                let v = Var::from_name(name).ok_or_else(|| bad(factor))?;
                e.0[v as usize] += pow;
            }
            out.add_term(e, if neg { -c } else { c });
        }
        Ok(out)
    }
}

impl<C: Coeff> Add<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, o: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl<C: Coeff> Sub<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, o: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl<C: Coeff> Mul<&Laurent<C>> for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, o: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, o: &Laurent<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&Laurent<C>> for Laurent<C> {
    fn sub_assign(&mut self, o: &Laurent<C>) {
        for (e, c) in &o.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr<Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, o: Laurent<C>) -> Laurent<C> {
                (&self).$f(&o)
            }
        }
        impl<C: Coeff> $tr<&Laurent<C>> for Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, o: &Laurent<C>) -> Laurent<C> {
                (&self).$f(o)
            }
        }
        impl<C: Coeff> $tr<Laurent<C>> for &Laurent<C> {
            type Output = Laurent<C>;
            fn $f(self, o: Laurent<C>) -> Laurent<C> {
                self.$f(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<C: Coeff> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Laurent<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let z = P::difference(Var::Q);
        let w = P::var(Var::Q) + P::var_pow(Var::Q, -1);
        assert_eq!(&z * &w, p("q^2 - q^-2"));
    }

    #[test]
    fn additive_identity() {
        let x = p("a^-2*q^2 + a^-2*q^-2 - a^-4");
        assert_eq!(&x + &P::zero(), x);
    }

    #[test]
    fn cube_of_z_has_binomial_coefficients() {
        let z3 = P::difference(Var::Q).pow(3);
        let cs: Vec<String> = z3.terms().map(|(_, c)| c.to_string()).collect();
        assert_eq!(cs, ["1", "-3", "3", "-1"]);
    }

    #[test]
    fn display_is_canonical() {
        let x = p("-a^-4 + a^-2*q^-2 + a^-2*q^2");
        assert_eq!(x.to_string(), "a^-2*q^2 + a^-2*q^-2 - a^-4");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p("-1 + 3*q").to_string(), "3*q - 1");
    }

    #[test]
    fn substitution_a_to_one() {
        let x = p("a^-2*q^2 + a^-2*q^-2 - a^-4");
        assert_eq!(
            x.substitute(&MonomialMap::a_to_q_pow(0)),
            p("q^2 + q^-2 - 1")
        );
    }

    #[test]
    fn substitution_a_to_aq() {
        assert_eq!(
            p("a^-2").substitute(&MonomialMap::a_times_q()),
            p("a^-2*q^-2")
        );
    }

    #[test]
    fn exact_division() {
        let z = P::difference(Var::Q);
        let x = p("3*a*q^5 - 7*q + a^-1");
        assert_eq!((&x * &z).div_exact(&z), Some(x));
        assert_eq!(p("q").div_exact(&z), None);
        assert_eq!(p("2*q").div_exact(&p("4")), None);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<P>().is_err());
        assert!("a +".parse::<P>().is_err());
        assert!("b^2".parse::<P>().is_err());
    }

    #[test]
    fn json_shape() {
        let j = p("a^-2*q^2 + 3*a*q").to_json();
        assert_eq!(j[0]["exps"]["a"], 1);
        assert_eq!(j[1]["exps"]["a"], -2);
        assert_eq!(j[0]["c"], "3");
    }
}

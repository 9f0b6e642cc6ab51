//! Polynomials over the two-element field and linear quotients of
//! polynomial rings.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{KnotError, ParseError};

/// Exponent vector; all monomials of one ring share the same length.
pub type Mono = Vec<u32>;

/// A polynomial over F2 as the set of monomials with coefficient 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyZ2 {
    terms: BTreeSet<Mono>,
}

pub fn mono_mul(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

impl PolyZ2 {
    pub fn zero() -> Self {
        PolyZ2::default()
    }

    pub fn one(nvars: usize) -> Self {
        PolyZ2::monomial(vec![0; nvars])
    }

    pub fn monomial(m: Mono) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        PolyZ2 { terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        PolyZ2::monomial(m)
    }

    /// Sum of the given variables.
    pub fn linear(nvars: usize, vars: &[usize]) -> Self {
        vars.iter()
            .fold(PolyZ2::zero(), |acc, &i| acc + PolyZ2::var(nvars, i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant 1, the only unit.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = &Mono> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: Mono) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Common total degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|m| mono_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn mul_mono(&self, m: &[u32]) -> PolyZ2 {
        PolyZ2 {
            terms: self.terms.iter().map(|t| mono_mul(t, m)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> PolyZ2 {
        let nv = self.terms.iter().next().map_or(0, |m| m.len());
        (0..k).fold(PolyZ2::one(nv), |acc, _| &acc * self)
    }

    /// Replace variable `i` by `images[i]`.
    pub fn substitute(&self, images: &[PolyZ2], target_vars: usize) -> PolyZ2 {
        let mut out = PolyZ2::zero();
        for m in &self.terms {
            let mut t = PolyZ2::one(target_vars);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out += t;
        }
        out
    }

    /// Variables of a linear form, or `None` if some term is not a single variable.
    pub fn linear_support(&self) -> Option<Vec<usize>> {
        self.terms
            .iter()
            .map(|m| {
                if mono_degree(m) != 1 {
                    return None;
                }
                m.iter().position(|&e| e == 1)
            })
            .collect()
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|m| {
                let f: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{e}", names[i])
                        }
                    })
                    .collect();
                if f.is_empty() {
                    "1".into()
                } else {
                    f.join("*")
                }
            })
            .collect();
        parts.join("+")
    }
}

impl std::ops::AddAssign for PolyZ2 {
    fn add_assign(&mut self, rhs: PolyZ2) {
        for m in rhs.terms {
            self.toggle(m);
        }
    }
}

impl std::ops::Add for PolyZ2 {
    type Output = PolyZ2;
    fn add(mut self, rhs: PolyZ2) -> PolyZ2 {
        self += rhs;
        self
    }
}

impl<'a> std::ops::Add<&'a PolyZ2> for &'a PolyZ2 {
    type Output = PolyZ2;
    fn add(self, rhs: &PolyZ2) -> PolyZ2 {
        self.clone() + rhs.clone()
    }
}

impl<'a> std::ops::Mul<&'a PolyZ2> for &'a PolyZ2 {
    type Output = PolyZ2;
    fn mul(self, rhs: &PolyZ2) -> PolyZ2 {
        let mut out = PolyZ2::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(mono_mul(a, b));
            }
        }
        out
    }
}

/// A polynomial ring F2[x_1..x_n] with named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRingZ2 {
    names: Vec<String>,
}

impl PolyRingZ2 {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        PolyRingZ2 {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, i: usize) -> PolyZ2 {
        PolyZ2::var(self.nvars(), i)
    }

    pub fn one(&self) -> PolyZ2 {
        PolyZ2::one(self.nvars())
    }

    pub fn display(&self, p: &PolyZ2) -> String {
        p.fmt_with(&self.names)
    }

    /// Parse sums of products such as `U1*U2+U3^2+1`.
    pub fn parse(&self, text: &str) -> Result<PolyZ2, ParseError> {
        let bad = || ParseError::Polynomial(text.to_string());
        let mut out = PolyZ2::zero();
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split('+') {
            let mut m = vec![0u32; self.nvars()];
            if term != "1" {
                for factor in term.split('*') {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad())?),
                        None => (factor, 1),
                    };
                    let i = self.names.iter().position(|n| n == name).ok_or_else(bad)?;
                    m[i] += e;
                }
            }
            out.toggle(m);
        }
        Ok(out)
    }
}

impl fmt::Display for PolyRingZ2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2[{}]", self.names.join(","))
    }
}

/// Presentation of `R / (linear forms)` as a polynomial ring in the surviving
/// variables: each original variable maps to a linear form in them.
#[derive(Clone, Debug)]
pub struct LinearQuotient {
    pub ring: PolyRingZ2,
    pub free: Vec<usize>,
    images: Vec<PolyZ2>,
}

impl LinearQuotient {
    /// Row-reduces the relations, eliminating the highest-index variable of
    /// each independent relation.
    pub fn new(ring: &PolyRingZ2, relations: &[PolyZ2]) -> Result<Self, KnotError> {
        let n = ring.nvars();
        let mut rows: Vec<Vec<bool>> = Vec::new();
        for r in relations {
            let supp = r.linear_support().ok_or_else(|| {
                KnotError::Complex(format!("relation {} is not linear", ring.display(r)))
            })?;
            let mut row = vec![false; n];
            for i in supp {
                row[i] = true;
            }
            rows.push(row);
        }
        // Reduced echelon form, pivoting from the right.
        let mut pivots: Vec<(usize, Vec<bool>)> = Vec::new();
        for mut row in rows {
            for (p, prow) in &pivots {
                if row[*p] {
                    row.iter_mut().zip(prow).for_each(|(a, b)| *a ^= b);
                }
            }
            if let Some(p) = row.iter().rposition(|&b| b) {
                for (_, prow) in pivots.iter_mut() {
                    if prow[p] {
                        prow.iter_mut().zip(&row).for_each(|(a, b)| *a ^= b);
                    }
                }
                pivots.push((p, row));
            }
        }
        let eliminated: Vec<usize> = pivots.iter().map(|(p, _)| *p).collect();
        let free: Vec<usize> = (0..n).filter(|i| !eliminated.contains(i)).collect();
        let new_names: Vec<String> = free.iter().map(|&i| ring.names[i].clone()).collect();
        let m = free.len();
        let pos = |i: usize| free.iter().position(|&f| f == i);
        let mut images = vec![PolyZ2::zero(); n];
        for (i, img) in images.iter_mut().enumerate() {
            if let Some(k) = pos(i) {
                *img = PolyZ2::var(m, k);
            }
        }
        for (p, row) in &pivots {
            let others: Vec<usize> = row
                .iter()
                .enumerate()
                .filter(|&(j, &b)| b && j != *p)
                .filter_map(|(j, _)| pos(j))
                .collect();
            images[*p] = PolyZ2::linear(m, &others);
        }
        Ok(LinearQuotient {
            ring: PolyRingZ2::new(new_names),
            free,
            images,
        })
    }

    pub fn image_of_var(&self, i: usize) -> &PolyZ2 {
        &self.images[i]
    }

    pub fn apply(&self, p: &PolyZ2) -> PolyZ2 {
        p.substitute(&self.images, self.ring.nvars())
    }
}

/// All monomials of total degree `d` in `n` variables, in lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Mono>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRingZ2 {
        PolyRingZ2::new(["U1", "U2", "U3", "U4"])
    }

    #[test]
    fn parse_and_print() {
        let r = ring();
        let p = r.parse("U1*U2+U3*U4").unwrap();
        assert_eq!(p.degree(), Some(2));
        assert_eq!(r.parse(&r.display(&p)).unwrap(), p);
        assert!(r.parse("1").unwrap().is_one());
        assert!(r.parse("U1+U1").unwrap().is_zero());
        assert!(r.parse("U9").is_err());
    }

    #[test]
    fn characteristic_two() {
        let r = ring();
        let s = r.parse("U1+U2").unwrap();
        assert_eq!(&s * &s, r.parse("U1^2+U2^2").unwrap());
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 5).len(), 1);
        assert_eq!(monomials(0, 0).len(), 1);
        assert!(monomials(0, 1).is_empty());
    }

    #[test]
    fn linear_quotient_eliminates() {
        let r = ring();
        let rels = [r.parse("U1+U2+U3+U4").unwrap(), r.parse("U3+U4").unwrap()];
        let lq = LinearQuotient::new(&r, &rels).unwrap();
        assert_eq!(lq.ring.nvars(), 2);
        // U1 = U2 and U3 = U4 in the quotient
        assert_eq!(lq.apply(&r.parse("U1+U2").unwrap()), PolyZ2::zero());
        assert_eq!(lq.apply(&r.parse("U3+U4").unwrap()), PolyZ2::zero());
        assert!(!lq.apply(&r.parse("U1+U3").unwrap()).is_zero());
        assert!(LinearQuotient::new(&r, &[r.parse("U1*U2").unwrap()]).is_err());
    }
}

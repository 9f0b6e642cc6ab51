//! Koszul complexes on lists of homogeneous ring elements.

use super::free::FreeComplex;
use super::poly::{PolyRingZ2, PolyZ2};
use crate::error::KnotError;
use itertools::Itertools;

/// Gradings are `(level, q)`; each variable has q-degree 2 and the
/// differential lowers the level by one.
pub fn koszul(ring: &PolyRingZ2, elements: &[PolyZ2]) -> Result<FreeComplex, KnotError> {
    let mut degs = Vec::with_capacity(elements.len());
    for e in elements {
        match e.degree() {
            Some(d) => degs.push(2 * d as i64),
            None if e.is_zero() => degs.push(0),
            None => {
                return Err(KnotError::Complex(format!(
                    "inhomogeneous Koszul element {}",
                    ring.display(e)
                )))
            }
        }
    }
    if elements.iter().any(|e| e.is_zero()) {
        return Err(KnotError::Complex(
            "zero Koszul element has no degree".into(),
        ));
    }
    let k = elements.len();
    let mut c = FreeComplex::new(ring.clone(), vec![0, 2], vec![0, 1]);
    let d = c.add_differential("d", vec![-1, 0]);
    for s in 0..(1usize << k) {
        let level = s.count_ones() as i64;
        let q: i64 = (0..k).filter(|i| s >> i & 1 == 1).map(|i| degs[i]).sum();
        let name: String = if s == 0 {
            "1".into()
        } else {
            (0..k)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| format!("e{i}"))
                .join("^")
        };
        c.add_generator(name, vec![level, q]);
    }
    for s in 0..(1usize << k) {
        for i in (0..k).filter(|i| s >> i & 1 == 1) {
            c.add_entry(d, s, s & !(1 << i), elements[i].clone());
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::super::free::graded_homology;
    use super::*;

    #[test]
    fn single_variable() {
        let r = PolyRingZ2::new(["x"]);
        let h = graded_homology(&koszul(&r, &[r.var(0)]).unwrap(), 0, 12).unwrap();
        assert_eq!(
            h.dims.into_iter().collect::<Vec<_>>(),
            vec![(vec![0, 0], 1)]
        );
    }

    #[test]
    fn regular_pair() {
        let r = PolyRingZ2::new(["x", "y"]);
        let h = graded_homology(&koszul(&r, &[r.var(0), r.var(1)]).unwrap(), 0, 12).unwrap();
        assert_eq!(
            h.dims.into_iter().collect::<Vec<_>>(),
            vec![(vec![0, 0], 1)]
        );
    }

    #[test]
    fn repeated_element() {
        let r = PolyRingZ2::new(["x"]);
        let c = koszul(&r, &[r.var(0), r.var(0)]).unwrap();
        c.squares_to_zero().unwrap();
        let h = graded_homology(&c, 0, 12).unwrap();
        // e0 + e1 is a cycle not hit by anything in q-degree 2
        assert_eq!(h.get(&[1, 2]), 1);
        assert_eq!(h.get(&[0, 0]), 1);
        assert_eq!(h.total(), 2);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = PolyRingZ2::new(["x"]);
        let p = r.parse("x+x^2").unwrap();
        assert!(koszul(&r, &[p]).is_err());
    }
}

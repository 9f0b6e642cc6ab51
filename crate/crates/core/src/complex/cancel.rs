//! Gaussian elimination of unit entries and elementary basis changes.

use std::collections::{BTreeMap, BTreeSet};

use super::free::FreeComplex;
use super::poly::PolyZ2;
use crate::error::KnotError;

fn single(c: &FreeComplex) -> Result<(), KnotError> {
    if c.differentials().len() != 1 {
        return Err(KnotError::Complex(
            "cancellation needs exactly one differential".into(),
        ));
    }
    Ok(())
}

/// Cancel the unit entry `x -> y`: every zig-zag `a -> y <- x -> b` adds
/// `d(a,y) d(x,b)` to `d(a,b)`, then `x` and `y` are removed.
pub fn cancel_pair(c: &FreeComplex, x: usize, y: usize) -> Result<FreeComplex, KnotError> {
    single(c)?;
    if !c.entry(0, x, y).is_one() {
        return Err(KnotError::Complex(format!(
            "entry {} -> {} is not a unit",
            c.generators()[x].name,
            c.generators()[y].name
        )));
    }
    let into_y: Vec<(usize, PolyZ2)> = c.differentials()[0]
        .entries()
        .filter(|&(s, t, _)| t == y && s != x)
        .map(|(s, _, p)| (s, p.clone()))
        .collect();
    let from_x: Vec<(usize, PolyZ2)> = c.differentials()[0]
        .entries()
        .filter(|&(s, t, _)| s == x && t != y)
        .map(|(_, t, p)| (t, p.clone()))
        .collect();
    let keep: Vec<usize> = (0..c.rank()).filter(|&g| g != x && g != y).collect();
    let mut out = c.restrict(&keep);
    let pos = |g: usize| keep.iter().position(|&k| k == g);
    for (a, pa) in &into_y {
        for (b, pb) in &from_x {
            if let (Some(ia), Some(ib)) = (pos(*a), pos(*b)) {
                out.add_entry(0, ia, ib, pa * pb);
            }
        }
    }
    Ok(out)
}

/// Cancel unit entries accepted by `allow` until none remain. Each step
/// takes the first unit entry in `(source, target)` order, as repeated
/// [`cancel_pair`] calls would.
pub fn unit_cancel_where(
    c: &FreeComplex,
    allow: impl Fn(&str, &str) -> bool,
) -> Result<FreeComplex, KnotError> {
    single(c)?;
    let n = c.rank();
    let gens = c.generators();
    let mut out: Vec<BTreeMap<usize, PolyZ2>> = vec![BTreeMap::new(); n];
    let mut inc: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (s, t, p) in c.differentials()[0].entries() {
        out[s].insert(t, p.clone());
        inc[t].insert(s);
    }
    let mut alive = vec![true; n];
    let mut x = 0;
    while x < n {
        let unit = out[x]
            .iter()
            .find(|&(&t, p)| p.is_one() && t != x && allow(&gens[x].name, &gens[t].name));
        let Some(y) = unit.map(|(&t, _)| t) else {
            x += 1;
            continue;
        };
        let into_y: Vec<(usize, PolyZ2)> = inc[y]
            .iter()
            .filter(|&&a| a != x && a != y)
            .map(|&a| (a, out[a][&y].clone()))
            .collect();
        let from_x: Vec<(usize, PolyZ2)> = out[x]
            .iter()
            .filter(|(&b, _)| b != y && b != x)
            .map(|(&b, p)| (b, p.clone()))
            .collect();
        for g in [x, y] {
            for b in std::mem::take(&mut out[g]).into_keys() {
                inc[b].remove(&g);
            }
            for a in std::mem::take(&mut inc[g]) {
                out[a].remove(&g);
            }
            alive[g] = false;
        }
        let mut lowest = x;
        for (a, pa) in &into_y {
            for (b, pb) in &from_x {
                let entry = out[*a].entry(*b).or_insert_with(PolyZ2::zero);
                *entry += pa * pb;
                if entry.is_zero() {
                    out[*a].remove(b);
                    inc[*b].remove(a);
                } else {
                    inc[*b].insert(*a);
                }
            }
            lowest = lowest.min(*a);
        }
        x = lowest;
    }
    let keep: Vec<usize> = (0..n).filter(|&g| alive[g]).collect();
    let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    let mut res = FreeComplex::new(
        c.ring().clone(),
        c.var_weight().to_vec(),
        c.window().to_vec(),
    );
    for &g in &keep {
        res.add_generator(gens[g].name.clone(), gens[g].grading.clone());
    }
    let d = &c.differentials()[0];
    let k = res.add_differential(d.name.clone(), d.degree.clone());
    for &a in &keep {
        for (b, p) in &out[a] {
            res.add_entry(k, pos[&a], pos[b], p.clone());
        }
    }
    Ok(res)
}

/// Cancel every unit entry.
pub fn unit_cancel(c: &FreeComplex) -> Result<FreeComplex, KnotError> {
    unit_cancel_where(c, |_, _| true)
}

/// Replace generator `i` by `g_i + p g_j`. Rows: `d(g_i)` gains `p d(g_j)`;
/// columns: anything hitting `g_i` now also hits `g_j` with factor `p`.
pub fn change_basis(
    c: &FreeComplex,
    i: usize,
    j: usize,
    p: &PolyZ2,
) -> Result<FreeComplex, KnotError> {
    if i == j {
        return Err(KnotError::Complex(
            "basis change needs two distinct generators".into(),
        ));
    }
    let gi = &c.generators()[i].grading;
    let gj = &c.generators()[j].grading;
    let shift: Vec<i64> = c
        .var_weight()
        .iter()
        .map(|w| w * p.degree().unwrap_or(0) as i64)
        .collect();
    let expect: Vec<i64> = gj.iter().zip(&shift).map(|(a, b)| a + b).collect();
    if p.degree().is_none() || expect != *gi {
        return Err(KnotError::Complex("basis change is not homogeneous".into()));
    }
    let mut out = c.clone();
    for (k, d) in c.differentials().iter().enumerate() {
        for (s, t, q) in d.entries() {
            if s == j {
                out.add_entry(k, i, t, p * q);
            }
        }
        for (s, t, q) in d.entries() {
            if t == i {
                out.add_entry(k, s, j, q * p);
            }
        }
        // the (j -> i) entry feeds both corrections
        if let Some(q) = d.entry(j, i) {
            out.add_entry(k, i, j, &(p * q) * p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::free::graded_homology;
    use super::super::koszul::koszul;
    use super::super::poly::PolyRingZ2;
    use super::*;

    #[test]
    fn unit_arrow_cancels_to_nothing() {
        let r = PolyRingZ2::new(["x"]);
        let c = koszul(&r, &[r.one()]).unwrap();
        assert_eq!(unit_cancel(&c).unwrap().rank(), 0);
    }

    #[test]
    fn no_units_unchanged() {
        let r = PolyRingZ2::new(["x", "y"]);
        let c = koszul(&r, &[r.var(0), r.var(1)]).unwrap();
        let d = unit_cancel(&c).unwrap();
        assert_eq!(d.rank(), 4);
        assert_eq!(d.differentials(), c.differentials());
    }

    #[test]
    fn basis_change_keeps_homology() {
        let r = PolyRingZ2::new(["x", "y"]);
        let c = koszul(&r, &[r.var(0), r.var(1)]).unwrap();
        // e0 (level 1, q 2) -> e0 + e1
        let i = c.generator_index("e0").unwrap();
        let j = c.generator_index("e1").unwrap();
        let d = change_basis(&c, i, j, &r.one()).unwrap();
        d.squares_to_zero().unwrap();
        assert_eq!(
            graded_homology(&d, 0, 10).unwrap(),
            graded_homology(&c, 0, 10).unwrap()
        );
    }
}

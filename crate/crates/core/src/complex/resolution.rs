//! Complete resolutions: per-cycle homology computed two ways.
//!
//! The lift route works over one variable per edge (the marked edge gets one
//! variable at each end) and takes the Koszul complex on: the variables of
//! the cycle's edges, the linear form at every singular vertex together with
//! the quadratic form where the cycle avoids that vertex, and the two arc
//! forms of every smoothed vertex for arcs outside the cycle. The quotient
//! route eliminates the linear elements instead and keeps only the Koszul
//! complex on the quadratics. Both report `(level, q)` gradings.

use std::collections::BTreeMap;

use super::cube::{homfly_cube_with, Resolution};
use super::free::{iterated_homology, GradedDims};
use super::koszul::koszul;
use super::poly::{LinearQuotient, PolyRingZ2, PolyZ2};
use crate::cycles::{enumerate_cycles, local_types, LocalType, MultiCycle};
use crate::diagram::{Diagram, Slot};
use crate::error::KnotError;

/// Cycles present in the resolution: no `Z5` at singular vertices and no
/// diagonal at smoothed ones. The marked edge is never used.
pub fn resolution_cycles(d: &Diagram, res: &[Resolution]) -> Result<Vec<MultiCycle>, KnotError> {
    check_resolution(d, res)?;
    let mut out = Vec::new();
    for z in enumerate_cycles(d, false) {
        let types = local_types(d, &z)?;
        let ok = types.iter().zip(res).all(|(t, r)| match r {
            Resolution::Singular => *t != LocalType::Z5,
            Resolution::Smoothed => !t.is_diagonal(),
            Resolution::Crossing => true,
        });
        if ok {
            out.push(z);
        }
    }
    Ok(out)
}

fn check_resolution(d: &Diagram, res: &[Resolution]) -> Result<(), KnotError> {
    if res.len() != d.crossing_count() || res.contains(&Resolution::Crossing) {
        return Err(KnotError::Complex(
            "a complete resolution fixes every crossing as singular or smoothed".into(),
        ));
    }
    Ok(())
}

/// Variable index for edge `e` seen from slot `s` of a crossing. The marked
/// edge uses an extra variable at its tail.
fn lift_var(d: &Diagram, e: usize, s: Slot) -> usize {
    if Some(e) == d.marked_edge() && !s.is_incoming() && d.crossing_count() > 0 {
        d.edge_count()
    } else {
        e
    }
}

fn lift_elements(
    d: &Diagram,
    res: &[Resolution],
    z: &MultiCycle,
) -> Result<(PolyRingZ2, Vec<PolyZ2>), KnotError> {
    let split = d.marked_edge().is_some() && d.crossing_count() > 0;
    let n = d.edge_count() + usize::from(split);
    let mut names: Vec<String> = (0..d.edge_count()).map(|e| format!("U{e}")).collect();
    if split {
        names.push("U0'".into());
    }
    let ring = PolyRingZ2::new(names);
    let types = local_types(d, z)?;
    let mut elems: Vec<PolyZ2> = z.edges().iter().map(|&e| PolyZ2::var(n, e)).collect();
    for (ci, c) in d.crossings().iter().enumerate() {
        let v = |s: Slot| PolyZ2::var(n, lift_var(d, c.slot(s), s));
        match res[ci] {
            Resolution::Singular => {
                elems.push(v(Slot::I) + v(Slot::J) + v(Slot::K) + v(Slot::L));
                if types[ci] == LocalType::Z0 {
                    elems.push(&(&v(Slot::I) * &v(Slot::J)) + &(&v(Slot::K) * &v(Slot::L)));
                }
            }
            Resolution::Smoothed => {
                for (a, b) in [(Slot::K, Slot::I), (Slot::L, Slot::J)] {
                    if !z.contains(c.slot(a)) {
                        elems.push(v(a) + v(b));
                    }
                }
            }
            Resolution::Crossing => unreachable!("checked complete"),
        }
    }
    Ok((ring, elems))
}

/// Lift route: homology of each cycle's Koszul complex.
pub fn resolution_homology(
    d: &Diagram,
    res: &[Resolution],
    cutoff: i64,
) -> Result<BTreeMap<MultiCycle, GradedDims>, KnotError> {
    let mut out = BTreeMap::new();
    for z in resolution_cycles(d, res)? {
        let (ring, elems) = lift_elements(d, res, &z)?;
        let k = koszul(&ring, &elems)?;
        out.insert(z, super::free::graded_homology(&k, 0, cutoff)?);
    }
    Ok(out)
}

/// Quotient route for one cycle: impose the linear elements as relations,
/// then take the Koszul complex on the quadratics over the quotient.
pub fn complement_homology(
    d: &Diagram,
    res: &[Resolution],
    z: &MultiCycle,
    cutoff: i64,
) -> Result<GradedDims, KnotError> {
    check_resolution(d, res)?;
    let (ring, elems) = lift_elements(d, res, z)?;
    let n = ring.nvars();
    let (linear, quads): (Vec<PolyZ2>, Vec<PolyZ2>) =
        elems.into_iter().partition(|p| p.degree() == Some(1));
    let lq = LinearQuotient::new(&ring, &linear)?;
    let dependent = linear.len() - (n - lq.free.len());
    let quads: Vec<PolyZ2> = quads.iter().map(|q| lq.apply(q)).collect();
    let (nonzero, zero): (Vec<PolyZ2>, Vec<PolyZ2>) = quads.into_iter().partition(|q| !q.is_zero());
    let mut h = super::free::graded_homology(&koszul(&lq.ring, &nonzero)?, 0, cutoff)?;
    // a relation that vanishes leaves an exterior factor
    for shift in
        std::iter::repeat_n([1, 2], dependent).chain(std::iter::repeat_n([1, 4], zero.len()))
    {
        let mut next = h.clone();
        for (g, &m) in &h.dims {
            next.add(vec![g[0] + shift[0], g[1] + shift[1]], m);
        }
        h = next;
    }
    Ok(h)
}

/// Cube route: `H(C_H(S), d+)` for the resolved diagram, regraded to
/// `(level, q)` with `level = -h/2` and `q = q - h + 2 * (negative singular
/// vertices)`, which is how the Koszul routes grade the same modules.
pub fn resolved_cube_homology(
    d: &Diagram,
    res: &[Resolution],
    cutoff: i64,
) -> Result<GradedDims, KnotError> {
    check_resolution(d, res)?;
    let neg_sing = d
        .crossings()
        .iter()
        .zip(res)
        .filter(|(c, r)| c.sign < 0 && **r == Resolution::Singular)
        .count() as i64;
    let mut c = homfly_cube_with(d, res, &[])?;
    c.regrade(|g| vec![-g[1] / 2, g[0] - g[1], g[2]], vec![0, 1, 0]);
    c.shift(&[0, 2 * neg_sing, 0]);
    let h = iterated_homology(&c, 0, 1, cutoff)?;
    let mut out = GradedDims::new(cutoff, vec![0, 1]);
    for (g, n) in h.dims {
        out.add(vec![g[0], g[1]], n);
    }
    Ok(out)
}

//! HOMFLY-PT cube complexes of braid closures and their homologies.
//!
//! Gradings are `(q, h, v)`; the generator of `R{a, b, c}` sits in degree
//! `(a, b, c)` and every edge variable has degree `(2, 0, 0)`, so `d+` has
//! degree `(2, 2, 0)` and `d_v` has degree `(0, 0, 2)`. The internal degree
//! is `q - h`, preserved by both.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::cancel::unit_cancel;
use super::free::{graded_homology, iterated_homology, FreeComplex, GradedDims};
use super::poly::{monomials, LinearQuotient, PolyRingZ2, PolyZ2};
use crate::diagram::Diagram;
use crate::error::KnotError;
use crate::laurent::{Exps, Var};
use crate::LaurentPoly;
use num_bigint::BigInt;

pub const D_PLUS: &str = "d+";
pub const D_V: &str = "dv";

/// How a crossing enters the cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Resolution {
    /// The full four-generator square.
    Crossing,
    /// Only the singularization row.
    Singular,
    /// Only the oriented-smoothing row.
    Smoothed,
}

fn label(v: [i64; 3]) -> Vec<i64> {
    v.to_vec()
}

fn unit_complex(ring: PolyRingZ2) -> FreeComplex {
    let mut c = FreeComplex::new(ring, vec![2, 0, 0], vec![1, -1, 0]);
    c.add_generator("", vec![0, 0, 0]);
    c.add_differential(D_PLUS, vec![2, 2, 0]);
    c.add_differential(D_V, vec![0, 0, 2]);
    c
}

fn empty_like(ring: &PolyRingZ2) -> FreeComplex {
    let mut c = FreeComplex::new(ring.clone(), vec![2, 0, 0], vec![1, -1, 0]);
    c.add_differential(D_PLUS, vec![2, 2, 0]);
    c.add_differential(D_V, vec![0, 0, 2]);
    c
}

/// Edge variables `X0..X{n-1}` and the relations `Xi + Xj + Xk + Xl`.
pub fn edge_ring(d: &Diagram) -> (PolyRingZ2, Vec<PolyZ2>) {
    let n = d.edge_count();
    let ring = PolyRingZ2::new((0..n).map(|e| format!("X{e}")));
    let rels = d
        .crossings()
        .iter()
        .map(|c| PolyZ2::linear(n, &[c.i, c.j, c.k, c.l]))
        .collect();
    (ring, rels)
}

/// Component index of every edge (the strand through `k` leaves by `j`).
pub fn edge_components(d: &Diagram) -> Vec<usize> {
    let n = d.edge_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for c in d.crossings() {
        for (a, b) in [(c.k, c.j), (c.l, c.i)] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    (0..n)
        .map(|e| {
            let r = find(&mut parent, e);
            let next = ids.len();
            *ids.entry(r).or_insert(next)
        })
        .collect()
}

/// Square (or one row of it) for crossing `ci`, over the full edge ring.
fn crossing_factor(d: &Diagram, ci: usize, res: Resolution, ring: &PolyRingZ2) -> FreeComplex {
    let c = &d.crossings()[ci];
    let n = ring.nvars();
    let x = |e: usize| PolyZ2::var(n, e);
    let lin = |a: usize, b: usize| &x(a) + &x(b);
    let quad = &(&x(c.i) * &x(c.j)) + &(&x(c.k) * &x(c.l));
    let one = PolyZ2::one(n);
    let (tl, tr, bl, br, bl_tl, tl_tr, br_tr, bl_br) = if c.sign > 0 {
        (
            [0, -2, 0],
            [0, 0, 0],
            [2, -2, -2],
            [0, 0, -2],
            lin(c.j, c.k),
            lin(c.k, c.i),
            one,
            quad,
        )
    } else {
        (
            [0, -2, 2],
            [-2, 0, 2],
            [0, -2, 0],
            [0, 0, 0],
            one,
            quad,
            lin(c.j, c.k),
            lin(c.k, c.i),
        )
    };
    let mut f = empty_like(ring);
    let (dp, dv) = (0, 1);
    let name = |s: &str| format!("c{ci}{s}");
    // the singular row is the bottom one at a positive crossing
    let singular_is_bottom = c.sign > 0;
    let rows: Vec<bool> = match res {
        Resolution::Crossing => vec![true, false],
        Resolution::Singular => vec![singular_is_bottom],
        Resolution::Smoothed => vec![!singular_is_bottom],
    };
    let mut idx: BTreeMap<&str, usize> = BTreeMap::new();
    for &bottom in &rows {
        if bottom {
            idx.insert("BL", f.add_generator(name("BL"), label(bl)));
            idx.insert("BR", f.add_generator(name("BR"), label(br)));
        } else {
            idx.insert("TL", f.add_generator(name("TL"), label(tl)));
            idx.insert("TR", f.add_generator(name("TR"), label(tr)));
        }
    }
    let arrows = [
        ("BL", "TL", dv, bl_tl),
        ("TL", "TR", dp, tl_tr),
        ("BR", "TR", dv, br_tr),
        ("BL", "BR", dp, bl_br),
    ];
    for (s, t, k, p) in arrows {
        if let (Some(&a), Some(&b)) = (idx.get(s), idx.get(t)) {
            f.add_entry(k, a, b, p);
        }
    }
    f
}

/// Reducing factor `R{2,0,-2} -> R{0,0,0}` by `X_e`, a vertical arrow.
fn reducing_factor(e: usize, ring: &PolyRingZ2, tag: usize) -> FreeComplex {
    let mut f = empty_like(ring);
    let a = f.add_generator(format!("r{tag}u"), label([2, 0, -2]));
    let b = f.add_generator(format!("r{tag}l"), label([0, 0, 0]));
    f.add_entry(1, a, b, ring.var(e));
    f
}

/// Tensor product of the crossing complexes over `R = F2[X] / I`, with one
/// reducing factor per listed edge, presented over the free ring left after
/// eliminating the linear relations.
pub fn homfly_cube(d: &Diagram, reduced_at: &[usize]) -> Result<FreeComplex, KnotError> {
    let res = vec![Resolution::Crossing; d.crossing_count()];
    homfly_cube_with(d, &res, reduced_at)
}

pub fn homfly_cube_with(
    d: &Diagram,
    res: &[Resolution],
    reduced_at: &[usize],
) -> Result<FreeComplex, KnotError> {
    if res.len() != d.crossing_count() {
        return Err(KnotError::Complex(
            "one resolution per crossing is required".into(),
        ));
    }
    if let Some(&e) = reduced_at.iter().find(|&&e| e >= d.edge_count()) {
        return Err(KnotError::Complex(format!("no edge {e} to reduce at")));
    }
    let (ring, rels) = edge_ring(d);
    let mut c = unit_complex(ring.clone());
    for (ci, &r) in res.iter().enumerate() {
        c = c.tensor(&crossing_factor(d, ci, r, &ring))?;
    }
    for (t, &e) in reduced_at.iter().enumerate() {
        c = c.tensor(&reducing_factor(e, &ring, t))?;
    }
    let lq = LinearQuotient::new(&ring, &rels)?;
    Ok(c.map_ring(lq.ring.clone(), |p| lq.apply(p)))
}

/// Edges to reduce at for `k` reductions: one per component in order, then
/// cycling through the components again.
pub fn reduction_edges(d: &Diagram, k: usize) -> Vec<usize> {
    let comp = edge_components(d);
    let mut reps: Vec<usize> = Vec::new();
    for (e, &c) in comp.iter().enumerate() {
        if c == reps.len() {
            reps.push(e);
        }
    }
    if reps.is_empty() {
        return Vec::new();
    }
    (0..k).map(|i| reps[i % reps.len()]).collect()
}

/// Overall shift `{-w+b-1, w+b-1, w-b+1}`.
pub fn middle_shift(d: &Diagram) -> Vec<i64> {
    let w = d.writhe();
    let b = d.strand_count() as i64;
    label([-w + b - 1, w + b - 1, w - b + 1])
}

/// `H(H(C, d+), d_v*)` with `k` reductions, in `(q, h, v)` degrees.
pub fn middle_homfly_homology(
    d: &Diagram,
    k_reductions: usize,
    cutoff: i64,
) -> Result<GradedDims, KnotError> {
    let edges = reduction_edges(d, k_reductions);
    let mut c = homfly_cube(d, &edges)?;
    c.shift(&middle_shift(d));
    iterated_homology(&c, 0, 1, cutoff)
}

/// Homology of the total differential `d+ + d_v`, in doubled `(M, A)`
/// degrees with `2M = h - v - 2q` and `2A = h - q`, shifted by `{w, w}`.
/// The internal degree is `-2A`.
pub fn sl_minus1_homology(d: &Diagram, cutoff: i64) -> Result<GradedDims, KnotError> {
    // d+ and d_v share a degree only after regrading
    let total_of = |mut c: FreeComplex| -> Result<FreeComplex, KnotError> {
        c.regrade(|g| vec![g[1] - g[2] - 2 * g[0], g[1] - g[0]], vec![0, -1]);
        unit_cancel(&c.merged("d")?)
    };
    let (ring, rels) = edge_ring(d);
    let mut total = total_of(unit_complex(ring.clone()))?;
    for ci in 0..d.crossing_count() {
        total = total.tensor(&total_of(crossing_factor(
            d,
            ci,
            Resolution::Crossing,
            &ring,
        ))?)?;
    }
    let lq = LinearQuotient::new(&ring, &rels)?;
    let mut total = total.map_ring(lq.ring.clone(), |p| lq.apply(p));
    let w = d.writhe();
    total.shift(&[2 * w, 2 * w]);
    graded_homology(&total, 0, cutoff)
}

/// `F2[X1..Xn] (x) V^(n-1)` with `V = {0,0} + {-1,-1}`, in the doubled
/// `(M, A)` degrees used by [`sl_minus1_homology`].
pub fn sl_minus1_closed_form(components: usize, cutoff: i64) -> GradedDims {
    let mut out = GradedDims::new(cutoff, vec![0, -1]);
    if components == 0 {
        out.add(vec![0, 0], 1);
        return out;
    }
    let var = [-4i64, -2];
    for j in 0..components {
        // choose j copies of the shifted summand of V
        let mult = binomial(components - 1, j);
        if mult == 0 {
            continue;
        }
        let base = [-2 * j as i64, -2 * j as i64];
        let mut n = 0u32;
        loop {
            let g = vec![base[0] + n as i64 * var[0], base[1] + n as i64 * var[1]];
            if -g[1] > cutoff {
                break;
            }
            out.add(g, mult * monomials(components, n).len() as u64);
            n += 1;
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Graded Euler characteristic `sum (-1)^((v-h)/2) q^q a^h dim` of
/// `(q, h, v)`-graded dimensions.
pub fn middle_euler(h: &GradedDims) -> Result<LaurentPoly, KnotError> {
    let mut out = LaurentPoly::zero();
    for (g, &n) in &h.dims {
        if (g[2] - g[1]) % 2 != 0 {
            return Err(KnotError::Grading(format!("odd v - h in {g:?}")));
        }
        let sign = if ((g[2] - g[1]) / 2).rem_euclid(2) == 0 {
            1
        } else {
            -1
        };
        let e = Exps::of(Var::Q, g[0] as i32) + Exps::of(Var::A, g[1] as i32);
        out.add_term(e, BigInt::from(sign * n as i64));
    }
    Ok(out)
}

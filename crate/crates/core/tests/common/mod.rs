#![allow(dead_code)]

use std::collections::BTreeMap;

use knotcomp::{close_braid, BraidWord, Diagram};

pub fn braid(strands: usize, word: &str) -> Diagram {
    let letters = word
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    close_braid(&BraidWord::new(strands, letters).unwrap())
}

/// Hilbert data of `F2[X1..Xn] (x) V^(n-1)` in doubled `(M, A)` degrees,
/// with `V` spanned by degrees `(0,0)` and `(-2,-2)` and each variable in
/// `(-4,-2)`, counted by brute force over exponent vectors.
pub fn unlink_sl_minus1(n: usize, cutoff: i64) -> BTreeMap<Vec<i64>, u64> {
    split_unlink_sl_minus1(n, n - 1, cutoff)
}

/// Number of split pieces of a braid closure: strand positions joined by
/// the generators that occur.
pub fn split_pieces(d: &Diagram) -> usize {
    let used: std::collections::BTreeSet<i32> = d.letters().iter().map(|l| l.abs()).collect();
    d.strand_count() - used.len()
}

/// As [`unlink_sl_minus1`] with `v_factors` copies of `V`; a split diagram
/// with `p` pieces has `n - p` of them.
pub fn split_unlink_sl_minus1(n: usize, v_factors: usize, cutoff: i64) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    let max_deg = (cutoff / 2).max(0) as usize;
    for v_mask in 0u32..(1 << v_factors) {
        let k = v_mask.count_ones() as i64;
        let mut exps = vec![0usize; n];
        loop {
            let total: usize = exps.iter().sum();
            if total <= max_deg {
                let t = total as i64;
                let g = vec![-2 * k - 4 * t, -2 * k - 2 * t];
                if -g[1] <= cutoff {
                    *out.entry(g).or_default() += 1;
                }
            }
            // odometer over exponents bounded by max_deg
            let mut i = 0;
            while i < n {
                exps[i] += 1;
                if exps[i] <= max_deg {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

use knotcomp::complex::poly::monomials;
use knotcomp::complex::{change_basis, koszul, FreeComplex, PolyRingZ2, PolyZ2};
use rand::Rng;

fn random_homogeneous(rng: &mut impl Rng, nvars: usize, degree: u32) -> PolyZ2 {
    loop {
        let mut p = PolyZ2::zero();
        for m in monomials(nvars, degree) {
            if rng.gen_bool(0.5) {
                p.toggle(m);
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// A Koszul complex, the same complex with cancellable unit pairs planted,
/// and the number of planted pairs. The planted copy is then hidden by
/// random homogeneous changes of basis.
pub fn planted_units(rng: &mut impl Rng) -> (FreeComplex, FreeComplex, usize) {
    let ring = PolyRingZ2::new(["U1", "U2", "U3"]);
    let n_elems = rng.gen_range(1..=2);
    let elems: Vec<PolyZ2> = (0..n_elems)
        .map(|_| {
            let deg = rng.gen_range(1..=2);
            random_homogeneous(rng, 3, deg)
        })
        .collect();
    let base = koszul(&ring, &elems).unwrap();
    let mut c = base.clone();
    let pairs = rng.gen_range(1..=3);
    for t in 0..pairs {
        let level = rng.gen_range(0..=n_elems as i64);
        let q = 2 * rng.gen_range(0..=3);
        let x = c.add_generator(format!("x{t}"), vec![level + 1, q]);
        let y = c.add_generator(format!("y{t}"), vec![level, q]);
        c.add_entry(0, x, y, ring.one());
    }
    for _ in 0..rng.gen_range(2..=6) {
        let i = rng.gen_range(0..c.rank());
        let j = rng.gen_range(0..c.rank());
        let (gi, gj) = (&c.generators()[i].grading, &c.generators()[j].grading);
        if i == j || gi[0] != gj[0] || gi[1] < gj[1] {
            continue;
        }
        let k = ((gi[1] - gj[1]) / 2) as u32;
        let p = if k == 0 {
            ring.one()
        } else {
            random_homogeneous(rng, 3, k)
        };
        c = change_basis(&c, i, j, &p).unwrap();
    }
    (base, c, pairs)
}

/// `a P(L+) - a^-1 P(L-) = (q - q^-1) P(L0)` at letter `at` of the word.
pub fn skein_holds(strands: usize, letters: &[i32], at: usize) -> bool {
    use knotcomp::{HomflyEvaluator, LaurentPoly, Var};
    let mut plus = letters.to_vec();
    plus[at] = plus[at].abs();
    let mut minus = plus.clone();
    minus[at] = -minus[at];
    let mut zero = plus.clone();
    zero.remove(at);
    let mut h = HomflyEvaluator::new();
    let mut p = |w: &[i32]| {
        h.homfly(&close_braid(&BraidWord::new(strands, w.to_vec()).unwrap()))
            .unwrap()
    };
    let (pp, pm, p0) = (p(&plus), p(&minus), p(&zero));
    let lhs = pp
        .mul_poly(&LaurentPoly::var(Var::A))
        .sub(&pm.mul_poly(&LaurentPoly::var_pow(Var::A, -1)));
    lhs == p0.mul_poly(&LaurentPoly::difference(Var::Q))
}

//! Free graded complexes over F2 polynomial rings with one or more
//! homogeneous differentials, and degree-truncated homology.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};

use super::f2::{kernel, BitVec, Echelon};
use super::poly::{monomials, Mono, PolyRingZ2, PolyZ2};
use crate::error::KnotError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub grading: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Differential {
    pub name: String,
    pub degree: Vec<i64>,
    entries: BTreeMap<(usize, usize), PolyZ2>,
}

impl Differential {
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &PolyZ2)> {
        self.entries.iter().map(|(&(s, t), p)| (s, t, p))
    }

    pub fn entry(&self, src: usize, dst: usize) -> Option<&PolyZ2> {
        self.entries.get(&(src, dst))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A free module with named homogeneous generators over a polynomial ring in
/// which every variable has the same grading vector `var_weight`. The window
/// functional must be positive on `var_weight`; it defines the internal degree
/// used for truncation.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    ring: PolyRingZ2,
    var_weight: Vec<i64>,
    window: Vec<i64>,
    gens: Vec<Generator>,
    diffs: Vec<Differential>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn vadd(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl FreeComplex {
    pub fn new(ring: PolyRingZ2, var_weight: Vec<i64>, window: Vec<i64>) -> Self {
        FreeComplex {
            ring,
            var_weight,
            window,
            gens: Vec::new(),
            diffs: Vec::new(),
        }
    }

    pub fn ring(&self) -> &PolyRingZ2 {
        &self.ring
    }

    pub fn var_weight(&self) -> &[i64] {
        &self.var_weight
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn differentials(&self) -> &[Differential] {
        &self.diffs
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn add_generator(&mut self, name: impl Into<String>, grading: Vec<i64>) -> usize {
        self.gens.push(Generator {
            name: name.into(),
            grading,
        });
        self.gens.len() - 1
    }

    pub fn add_differential(&mut self, name: impl Into<String>, degree: Vec<i64>) -> usize {
        self.diffs.push(Differential {
            name: name.into(),
            degree,
            entries: BTreeMap::new(),
        });
        self.diffs.len() - 1
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Adds `p` to the `src -> dst` entry of differential `d`.
    pub fn add_entry(&mut self, d: usize, src: usize, dst: usize, p: PolyZ2) {
        let e = self.diffs[d].entries.entry((src, dst)).or_default();
        *e += p;
        if e.is_zero() {
            self.diffs[d].entries.remove(&(src, dst));
        }
    }

    pub fn entry(&self, d: usize, src: usize, dst: usize) -> PolyZ2 {
        self.diffs[d].entry(src, dst).cloned().unwrap_or_default()
    }

    pub fn internal_degree(&self, grading: &[i64]) -> i64 {
        dot(&self.window, grading)
    }

    /// Every entry `p` on `s -> t` must be homogeneous with
    /// `deg(t) + deg(p) * var_weight = deg(s) + deg(d)`.
    pub fn check_homogeneous(&self) -> Result<(), KnotError> {
        if dot(&self.window, &self.var_weight) <= 0 {
            return Err(KnotError::Complex(
                "window functional is not positive on variables".into(),
            ));
        }
        for d in &self.diffs {
            for (s, t, p) in d.entries() {
                let deg = p.degree().ok_or_else(|| {
                    KnotError::Complex(format!(
                        "{}: entry {} -> {} is inhomogeneous: {}",
                        d.name,
                        self.gens[s].name,
                        self.gens[t].name,
                        self.ring.display(p)
                    ))
                })?;
                let lhs: Vec<i64> = self.gens[t]
                    .grading
                    .iter()
                    .zip(&self.var_weight)
                    .map(|(g, w)| g + deg as i64 * w)
                    .collect();
                if lhs != vadd(&self.gens[s].grading, &d.degree) {
                    return Err(KnotError::Complex(format!(
                        "{}: entry {} -> {} has degree mismatch",
                        d.name, self.gens[s].name, self.gens[t].name
                    )));
                }
            }
        }
        Ok(())
    }

    /// The composite of the listed differentials (as one total map) squares to
    /// zero, checked entry by entry.
    pub fn total_squares_to_zero(&self, which: &[usize]) -> Result<(), String> {
        let mut adj: HashMap<usize, Vec<(usize, &PolyZ2)>> = HashMap::new();
        let mut sum: BTreeMap<(usize, usize), PolyZ2> = BTreeMap::new();
        for &d in which {
            for (s, t, p) in self.diffs[d].entries() {
                let e = sum.entry((s, t)).or_default();
                *e += p.clone();
            }
        }
        for ((s, t), p) in &sum {
            if !p.is_zero() {
                adj.entry(*s).or_default().push((*t, p));
            }
        }
        for (&s, outs) in &adj {
            let mut acc: BTreeMap<usize, PolyZ2> = BTreeMap::new();
            for &(m, p) in outs {
                for &(t, q) in adj.get(&m).map(|v| v.as_slice()).unwrap_or(&[]) {
                    *acc.entry(t).or_default() += p * q;
                }
            }
            if let Some((t, p)) = acc.iter().find(|(_, p)| !p.is_zero()) {
                return Err(format!(
                    "d^2 {} -> {} = {}",
                    self.gens[s].name,
                    self.gens[*t].name,
                    self.ring.display(p)
                ));
            }
        }
        Ok(())
    }

    pub fn squares_to_zero(&self) -> Result<(), String> {
        let all: Vec<usize> = (0..self.diffs.len()).collect();
        for d in 0..self.diffs.len() {
            self.total_squares_to_zero(&[d])?;
        }
        self.total_squares_to_zero(&all)
    }

    pub fn shift(&mut self, by: &[i64]) {
        for g in &mut self.gens {
            g.grading = vadd(&g.grading, by);
        }
    }

    /// Apply a linear change of grading coordinates to generators, variables,
    /// differential degrees and the window (given directly in new coordinates).
    pub fn regrade(&mut self, f: impl Fn(&[i64]) -> Vec<i64>, window: Vec<i64>) {
        for g in &mut self.gens {
            g.grading = f(&g.grading);
        }
        self.var_weight = f(&self.var_weight);
        for d in &mut self.diffs {
            d.degree = f(&d.degree);
        }
        self.window = window;
    }

    /// Sum all differentials into one; they must share a degree.
    pub fn merged(&self, name: &str) -> Result<FreeComplex, KnotError> {
        let degree = self
            .diffs
            .first()
            .map(|d| d.degree.clone())
            .unwrap_or_else(|| vec![0; self.window.len()]);
        if self.diffs.iter().any(|d| d.degree != degree) {
            return Err(KnotError::Complex(
                "differentials have different degrees".into(),
            ));
        }
        let mut out = FreeComplex {
            diffs: Vec::new(),
            ..self.clone()
        };
        let k = out.add_differential(name, degree);
        for d in &self.diffs {
            for (s, t, p) in d.entries() {
                out.add_entry(k, s, t, p.clone());
            }
        }
        Ok(out)
    }

    /// Tensor product over the common ring. Differentials are matched by
    /// name; a name missing on one side acts as zero there.
    pub fn tensor(&self, other: &FreeComplex) -> Result<FreeComplex, KnotError> {
        if self.ring != other.ring || self.var_weight != other.var_weight {
            return Err(KnotError::Complex(
                "tensor factors live over different rings".into(),
            ));
        }
        let mut out = FreeComplex::new(
            self.ring.clone(),
            self.var_weight.clone(),
            self.window.clone(),
        );
        let mut names: Vec<(String, Vec<i64>)> = Vec::new();
        for d in self.diffs.iter().chain(&other.diffs) {
            match names.iter().find(|(n, _)| *n == d.name) {
                Some((_, deg)) if *deg != d.degree => {
                    return Err(KnotError::Complex(format!(
                        "differential {} has two degrees",
                        d.name
                    )))
                }
                Some(_) => {}
                None => names.push((d.name.clone(), d.degree.clone())),
            }
        }
        for (n, deg) in &names {
            out.add_differential(n.clone(), deg.clone());
        }
        let m = other.gens.len();
        for a in &self.gens {
            for b in &other.gens {
                let name = if a.name.is_empty() {
                    b.name.clone()
                } else if b.name.is_empty() {
                    a.name.clone()
                } else {
                    format!("{}.{}", a.name, b.name)
                };
                out.add_generator(name, vadd(&a.grading, &b.grading));
            }
        }
        for (k, (n, _)) in names.iter().enumerate() {
            if let Some(d) = self.diffs.iter().find(|d| d.name == *n) {
                for (s, t, p) in d.entries() {
                    for j in 0..m {
                        out.add_entry(k, s * m + j, t * m + j, p.clone());
                    }
                }
            }
            if let Some(d) = other.diffs.iter().find(|d| d.name == *n) {
                for (s, t, p) in d.entries() {
                    for i in 0..self.gens.len() {
                        out.add_entry(k, i * m + s, i * m + t, p.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Change the coefficient ring by a substitution of variables.
    pub fn map_ring(&self, ring: PolyRingZ2, f: impl Fn(&PolyZ2) -> PolyZ2) -> FreeComplex {
        let mut out = FreeComplex {
            ring,
            diffs: Vec::new(),
            ..self.clone()
        };
        for d in &self.diffs {
            let k = out.add_differential(d.name.clone(), d.degree.clone());
            for (s, t, p) in d.entries() {
                out.add_entry(k, s, t, f(p));
            }
        }
        out
    }

    /// Restriction to a subset of generators (entries between kept generators).
    pub fn restrict(&self, keep: &[usize]) -> FreeComplex {
        let mut out = FreeComplex::new(
            self.ring.clone(),
            self.var_weight.clone(),
            self.window.clone(),
        );
        for &g in keep {
            out.add_generator(self.gens[g].name.clone(), self.gens[g].grading.clone());
        }
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        for d in &self.diffs {
            let k = out.add_differential(d.name.clone(), d.degree.clone());
            for (s, t, p) in d.entries() {
                if let (Some(&a), Some(&b)) = (pos.get(&s), pos.get(&t)) {
                    out.add_entry(k, a, b, p.clone());
                }
            }
        }
        out
    }

    fn window_weight(&self) -> Result<i64, KnotError> {
        let lw = dot(&self.window, &self.var_weight);
        if lw <= 0 {
            return Err(KnotError::Complex(
                "window functional is not positive on variables".into(),
            ));
        }
        Ok(lw)
    }

    /// Gradings of nonzero graded pieces with internal degree at most `cutoff`.
    fn gradings_up_to(&self, cutoff: i64) -> Result<BTreeSet<Vec<i64>>, KnotError> {
        self.window_weight()?;
        let mut out = BTreeSet::new();
        for g in &self.gens {
            let mut n = 0i64;
            loop {
                let gr: Vec<i64> = g
                    .grading
                    .iter()
                    .zip(&self.var_weight)
                    .map(|(a, w)| a + n * w)
                    .collect();
                if dot(&self.window, &gr) > cutoff {
                    break;
                }
                out.insert(gr);
                if self.ring.nvars() == 0 {
                    break;
                }
                n += 1;
            }
        }
        Ok(out)
    }
}

/// Basis of one graded piece: pairs (generator, monomial).
struct Piece {
    basis: Vec<(usize, Mono)>,
    index: HashMap<(usize, Mono), usize>,
}

struct Pieces<'a> {
    c: &'a FreeComplex,
    lw: i64,
    cache: HashMap<Vec<i64>, Piece>,
    mono_cache: HashMap<u32, Vec<Mono>>,
}

impl<'a> Pieces<'a> {
    fn new(c: &'a FreeComplex) -> Result<Self, KnotError> {
        Ok(Pieces {
            c,
            lw: c.window_weight()?,
            cache: HashMap::new(),
            mono_cache: HashMap::new(),
        })
    }

    fn ensure(&mut self, gr: &[i64]) {
        if self.cache.contains_key(gr) {
            return;
        }
        let c = self.c;
        let nv = c.ring.nvars();
        let mut basis = Vec::new();
        for (gi, g) in c.gens.iter().enumerate() {
            let diff = vsub(gr, &g.grading);
            let l = dot(&c.window, &diff);
            if l < 0 || l % self.lw != 0 {
                continue;
            }
            let n = l / self.lw;
            if c.var_weight.iter().map(|w| w * n).collect::<Vec<_>>() != diff {
                continue;
            }
            if nv == 0 && n > 0 {
                continue;
            }
            let monos = self
                .mono_cache
                .entry(n as u32)
                .or_insert_with(|| monomials(nv, n as u32));
            for m in monos.iter() {
                basis.push((gi, m.clone()));
            }
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();
        self.cache.insert(gr.to_vec(), Piece { basis, index });
    }

    fn dim(&mut self, gr: &[i64]) -> usize {
        self.ensure(gr);
        self.cache[gr].basis.len()
    }

    /// Images of the basis of the piece at `gr` under differential `d`,
    /// as vectors in the piece at `gr + deg(d)`.
    fn images(&mut self, d: usize, gr: &[i64]) -> Vec<BitVec> {
        let tgt = vadd(gr, &self.c.diffs[d].degree);
        self.ensure(gr);
        self.ensure(&tgt);
        let src = &self.cache[gr];
        let dst = &self.cache[&tgt];
        let mut outs: HashMap<usize, Vec<(usize, &PolyZ2)>> = HashMap::new();
        for (s, t, p) in self.c.diffs[d].entries() {
            outs.entry(s).or_default().push((t, p));
        }
        src.basis
            .iter()
            .map(|(g, m)| {
                let mut v = BitVec::zeros(dst.basis.len());
                for &(t, p) in outs.get(g).map(|x| x.as_slice()).unwrap_or(&[]) {
                    for term in p.terms() {
                        let mm = super::poly::mono_mul(m, term);
                        let idx = dst.index[&(t, mm)];
                        v.flip(idx);
                    }
                }
                v
            })
            .collect()
    }
}

/// Homology dimensions per full grading vector, recorded only where nonzero
/// and only up to the internal-degree cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedDims {
    pub cutoff: i64,
    pub window: Vec<i64>,
    pub dims: BTreeMap<Vec<i64>, u64>,
}

impl GradedDims {
    pub fn new(cutoff: i64, window: Vec<i64>) -> Self {
        GradedDims {
            cutoff,
            window,
            dims: BTreeMap::new(),
        }
    }

    pub fn internal_degree(&self, g: &[i64]) -> i64 {
        dot(&self.window, g)
    }

    pub fn add(&mut self, g: Vec<i64>, n: u64) {
        if n > 0 && self.internal_degree(&g) <= self.cutoff {
            *self.dims.entry(g).or_default() += n;
        }
    }

    pub fn get(&self, g: &[i64]) -> u64 {
        self.dims.get(g).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Direct sum, keeping the smaller cutoff.
    pub fn sum(&self, other: &GradedDims) -> GradedDims {
        let mut out = GradedDims::new(self.cutoff.min(other.cutoff), self.window.clone());
        for (g, &n) in self.dims.iter().chain(&other.dims) {
            out.add(g.clone(), n);
        }
        out
    }

    pub fn truncated(&self, cutoff: i64) -> GradedDims {
        let mut out = GradedDims::new(cutoff.min(self.cutoff), self.window.clone());
        for (g, &n) in &self.dims {
            out.add(g.clone(), n);
        }
        out
    }

    /// Dimensions summed over all gradings with the same internal degree.
    pub fn by_internal_degree(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for (g, &n) in &self.dims {
            *out.entry(self.internal_degree(g)).or_default() += n;
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .dims
            .iter()
            .map(|(g, n)| json!({"grading": g, "dim": n}))
            .collect();
        json!({"cutoff": self.cutoff, "window": self.window, "dims": entries})
    }
}

/// Homology of differential `d` in every grading up to the cutoff.
pub fn graded_homology(c: &FreeComplex, d: usize, cutoff: i64) -> Result<GradedDims, KnotError> {
    if cutoff < 0 {
        return Err(KnotError::Complex("negative cutoff".into()));
    }
    c.check_homogeneous()?;
    let deg = c
        .diffs
        .get(d)
        .ok_or_else(|| KnotError::Complex(format!("no differential {d}")))?
        .degree
        .clone();
    let mut pieces = Pieces::new(c)?;
    let mut out = GradedDims::new(cutoff, c.window.clone());
    let mut ranks: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut rank_out = |pieces: &mut Pieces, gr: &Vec<i64>| -> usize {
        if let Some(&r) = ranks.get(gr) {
            return r;
        }
        let r = super::f2::rank(pieces.images(d, gr));
        ranks.insert(gr.clone(), r);
        r
    };
    for gr in c.gradings_up_to(cutoff)? {
        let dim = pieces.dim(&gr);
        if dim == 0 {
            continue;
        }
        let r_out = rank_out(&mut pieces, &gr);
        let prev = vsub(&gr, &deg);
        let r_in = rank_out(&mut pieces, &prev);
        out.add(gr, (dim - r_out - r_in) as u64);
    }
    Ok(out)
}

struct FirstPage {
    kernel: Vec<BitVec>,
    image: Echelon,
    image_rank: usize,
}

/// H(H(C, d1), d2*) for two anticommuting differentials, computed per
/// grading from kernels and images of `d1`.
pub fn iterated_homology(
    c: &FreeComplex,
    d1: usize,
    d2: usize,
    cutoff: i64,
) -> Result<GradedDims, KnotError> {
    if cutoff < 0 {
        return Err(KnotError::Complex("negative cutoff".into()));
    }
    c.check_homogeneous()?;
    c.total_squares_to_zero(&[d1, d2])
        .map_err(KnotError::Complex)?;
    let deg1 = c.diffs[d1].degree.clone();
    let deg2 = c.diffs[d2].degree.clone();
    let mut pieces = Pieces::new(c)?;
    let mut pages: HashMap<Vec<i64>, FirstPage> = HashMap::new();

    fn page(
        pieces: &mut Pieces,
        pages: &mut HashMap<Vec<i64>, FirstPage>,
        d1: usize,
        deg1: &[i64],
        gr: &[i64],
    ) {
        if pages.contains_key(gr) {
            return;
        }
        let imgs = pieces.images(d1, gr);
        let ker = kernel(&imgs);
        let prev = vsub(gr, deg1);
        let mut image = Echelon::new();
        for v in pieces.images(d1, &prev) {
            image.insert(v);
        }
        let image_rank = image.rank();
        pages.insert(
            gr.to_vec(),
            FirstPage {
                kernel: ker,
                image,
                image_rank,
            },
        );
    }

    // rank of d2*: H_gr -> H_{gr + deg2}
    let out_rank =
        |pieces: &mut Pieces, pages: &mut HashMap<Vec<i64>, FirstPage>, gr: &[i64]| -> usize {
            page(pieces, pages, d1, &deg1, gr);
            let tgt = vadd(gr, &deg2);
            page(pieces, pages, d1, &deg1, &tgt);
            let d2_imgs = pieces.images(d2, gr);
            let src = &pages[gr];
            let dst = &pages[&tgt];
            let mut span = dst.image.clone();
            let base = dst.image_rank;
            for k in &src.kernel {
                let mut v = BitVec::zeros(pieces.cache[&tgt].basis.len());
                k.ones().for_each(|i| v.xor_with(&d2_imgs[i]));
                span.insert(v);
            }
            span.rank() - base
        };

    let mut out = GradedDims::new(cutoff, c.window.clone());
    for gr in c.gradings_up_to(cutoff)? {
        page(&mut pieces, &mut pages, d1, &deg1, &gr);
        let h = pages[&gr].kernel.len() - pages[&gr].image_rank;
        if h == 0 {
            continue;
        }
        let r_out = out_rank(&mut pieces, &mut pages, &gr);
        let prev = vsub(&gr, &deg2);
        let r_in = out_rank(&mut pieces, &mut pages, &prev);
        out.add(gr, (h - r_out - r_in) as u64);
    }
    Ok(out)
}

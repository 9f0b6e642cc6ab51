//! Multi-cycles (edge subsets with balanced flow at every crossing), their
//! local behaviour at crossings, and the two labeled subdiagrams.

use itertools::Itertools;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diagram::{Crossing, Diagram};
use crate::error::KnotError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiCycle {
    edges: Vec<usize>,
}

impl MultiCycle {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        MultiCycle { edges }
    }

    pub fn empty() -> Self {
        MultiCycle { edges: Vec::new() }
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Label of each edge: 1 inside the cycle, 2 outside.
    pub fn labels(&self, edge_count: usize) -> Vec<u8> {
        let mut l = vec![2; edge_count];
        for &e in &self.edges {
            l[e] = 1;
        }
        l
    }
}

impl fmt::Display for MultiCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "{{}}");
        }
        write!(
            f,
            "{{{}}}",
            self.edges
                .iter()
                .format_with(",", |e, g| g(&format_args!("e{e}")))
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LocalType {
    /// No incident edge.
    Z0,
    /// Right turn through `l` and `j`; forbidden at negative crossings.
    Z1,
    /// Left turn through `k` and `i`; forbidden at positive crossings.
    Z2,
    /// Diagonal `k` to `j`.
    Z3,
    /// Diagonal `l` to `i`.
    Z4,
    /// All four edges.
    Z5,
}

impl LocalType {
    pub const ALL: [LocalType; 6] = [
        LocalType::Z0,
        LocalType::Z1,
        LocalType::Z2,
        LocalType::Z3,
        LocalType::Z4,
        LocalType::Z5,
    ];

    /// Membership of the slots `(i, j, k, l)`.
    pub fn slots(self) -> [bool; 4] {
        match self {
            LocalType::Z0 => [false, false, false, false],
            LocalType::Z1 => [false, true, false, true],
            LocalType::Z2 => [true, false, true, false],
            LocalType::Z3 => [false, true, true, false],
            LocalType::Z4 => [true, false, false, true],
            LocalType::Z5 => [true, true, true, true],
        }
    }

    pub fn from_slots(s: [bool; 4]) -> Option<Self> {
        LocalType::ALL.into_iter().find(|t| t.slots() == s)
    }

    pub fn is_turn(self) -> bool {
        matches!(self, LocalType::Z1 | LocalType::Z2)
    }

    pub fn is_diagonal(self) -> bool {
        matches!(self, LocalType::Z3 | LocalType::Z4)
    }

    pub fn allowed_at(self, sign: i8) -> bool {
        !matches!(
            (self, sign > 0),
            (LocalType::Z2, true) | (LocalType::Z1, false)
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TurnStats {
    pub t_pos: usize,
    pub t_neg: usize,
    pub d_pos: usize,
    pub d_neg: usize,
    pub x_pos: usize,
    pub x_neg: usize,
}

impl TurnStats {
    pub fn turns(&self) -> usize {
        self.t_pos + self.t_neg
    }

    pub fn diagonals(&self) -> usize {
        self.d_pos + self.d_neg
    }
}

fn local_of(c: &Crossing, inside: impl Fn(usize) -> bool) -> Option<LocalType> {
    LocalType::from_slots([inside(c.i), inside(c.j), inside(c.k), inside(c.l)])
}

pub fn classify_local(
    d: &Diagram,
    z: &MultiCycle,
    crossing: usize,
) -> Result<LocalType, KnotError> {
    let c = d
        .crossings()
        .get(crossing)
        .ok_or(KnotError::CrossingIndex(crossing))?;
    local_of(c, |e| z.contains(e)).ok_or_else(|| {
        KnotError::Inadmissible(format!(
            "{z} violates the flow condition at crossing {crossing}"
        ))
    })
}

pub fn local_types(d: &Diagram, z: &MultiCycle) -> Result<Vec<LocalType>, KnotError> {
    (0..d.crossing_count())
        .map(|c| classify_local(d, z, c))
        .collect()
}

pub fn is_admissible(d: &Diagram, z: &MultiCycle) -> bool {
    !d.marked_edge().is_some_and(|e| z.contains(e))
        && local_types(d, z).is_ok_and(|ts| {
            ts.iter()
                .zip(d.crossings())
                .all(|(t, c)| t.allowed_at(c.sign))
        })
}

pub fn turn_stats(d: &Diagram, z: &MultiCycle) -> Result<TurnStats, KnotError> {
    let mut s = TurnStats::default();
    for (t, c) in local_types(d, z)?.into_iter().zip(d.crossings()) {
        let pos = c.sign > 0;
        let slot = match t {
            LocalType::Z1 | LocalType::Z2 if pos => &mut s.t_pos,
            LocalType::Z1 | LocalType::Z2 => &mut s.t_neg,
            LocalType::Z3 | LocalType::Z4 if pos => &mut s.d_pos,
            LocalType::Z3 | LocalType::Z4 => &mut s.d_neg,
            LocalType::Z5 if pos => &mut s.x_pos,
            LocalType::Z5 => &mut s.x_neg,
            LocalType::Z0 => continue,
        };
        *slot += 1;
    }
    Ok(s)
}

/// All multi-cycles avoiding the marked edge, found by a depth-first choice of
/// local type per crossing. Loop edges of untouched strand positions are free.
pub fn enumerate_cycles(d: &Diagram, admissible_only: bool) -> Vec<MultiCycle> {
    let mut state: Vec<Option<bool>> = vec![None; d.edge_count()];
    if let Some(e) = d.marked_edge() {
        state[e] = Some(false);
    }
    let mut partial = Vec::new();
    dfs(d, 0, admissible_only, &mut state, &mut partial);

    let touched: Vec<bool> = {
        let mut t = vec![false; d.edge_count()];
        for c in d.crossings() {
            for e in c.edges() {
                t[e] = true;
            }
        }
        t
    };
    let free: Vec<usize> = (0..d.edge_count())
        .filter(|&e| !touched[e] && Some(e) != d.marked_edge())
        .collect();
    let mut out = Vec::new();
    for base in partial {
        for mask in 0u64..(1 << free.len()) {
            let mut edges = base.clone();
            edges.extend(
                free.iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e),
            );
            out.push(MultiCycle::new(edges));
        }
    }
    out.sort();
    out
}

fn dfs(
    d: &Diagram,
    ci: usize,
    admissible_only: bool,
    state: &mut Vec<Option<bool>>,
    out: &mut Vec<Vec<usize>>,
) {
    let Some(c) = d.crossings().get(ci) else {
        out.push(
            state
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == Some(true))
                .map(|(e, _)| e)
                .collect(),
        );
        return;
    };
    let edges = c.edges();
    for t in LocalType::ALL {
        if admissible_only && !t.allowed_at(c.sign) {
            continue;
        }
        let want = t.slots();
        // an edge filling two slots of one crossing must agree with itself
        let consistent = (0..4).all(|a| {
            state[edges[a]].is_none_or(|s| s == want[a])
                && (0..4).all(|b| edges[a] != edges[b] || want[a] == want[b])
        });
        if !consistent {
            continue;
        }
        let fresh: Vec<usize> = (0..4).filter(|&a| state[edges[a]].is_none()).collect();
        for &a in &fresh {
            state[edges[a]] = Some(want[a]);
        }
        dfs(d, ci + 1, admissible_only, state, out);
        for &a in &fresh {
            state[edges[a]] = None;
        }
    }
}

/// `D_{f,i}`: edges labeled `label`, keeping a crossing only when all four of
/// its edges carry that label. The result is again a braid closure; the
/// label-2 part keeps the marked edge.
pub fn subdiagram(d: &Diagram, z: &MultiCycle, label: u8) -> Diagram {
    let labels = z.labels(d.edge_count());
    let has = |e: usize| labels[e] == label;
    let mut occupied: Vec<bool> = d.top_edges().iter().map(|&e| has(e)).collect();
    let strands = occupied.iter().filter(|&&o| o).count();
    let mut letters = Vec::new();
    for c in d.crossings() {
        if c.edges().iter().all(|&e| has(e)) {
            let rank = occupied[..c.pos].iter().filter(|&&o| o).count() as i32;
            letters.push(c.sign as i32 * (rank + 1));
        }
        occupied[c.pos] = has(c.i);
        occupied[c.pos + 1] = has(c.j);
    }
    let marked = label == 2 && d.marked_edge().is_some();
    Diagram::closure(strands, &letters, marked)
}

/// Sum of the signs of crossings with at least one incident edge labeled
/// `label`.
pub fn s_value(d: &Diagram, z: &MultiCycle, label: u8) -> i64 {
    let labels = z.labels(d.edge_count());
    d.crossings()
        .iter()
        .filter(|c| c.edges().iter().any(|&e| labels[e] == label))
        .map(|c| c.sign as i64)
        .sum()
}

/// For each component of the label-2 part, whether it passes through a
/// crossing where the cycle turns.
pub fn label2_components_turn(d: &Diagram, z: &MultiCycle) -> Result<Vec<bool>, KnotError> {
    let types = local_types(d, z)?;
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
    let mut turning = vec![false; n];
    for (c, t) in d.crossings().iter().zip(&types) {
        let joins: &[(usize, usize)] = match t {
            LocalType::Z0 => &[(c.k, c.j), (c.l, c.i)],
            LocalType::Z1 => &[(c.k, c.i)],
            LocalType::Z2 => &[(c.l, c.j)],
            LocalType::Z3 => &[(c.l, c.i)],
            LocalType::Z4 => &[(c.k, c.j)],
            LocalType::Z5 => &[],
        };
        for &(x, y) in joins {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent[rx] = ry;
            if t.is_turn() {
                turning[x] = true;
            }
        }
    }
    let mut comp_turns = std::collections::BTreeMap::new();
    for e in (0..n).filter(|&e| !z.contains(e)) {
        let r = find(&mut parent, e);
        *comp_turns.entry(r).or_insert(false) |= turning[e];
    }
    Ok(comp_turns.into_values().collect())
}

pub fn cycle_json(d: &Diagram, z: &MultiCycle) -> Result<Value, KnotError> {
    let st = turn_stats(d, z)?;
    let d1 = subdiagram(d, z, 1);
    let d2 = subdiagram(d, z, 2);
    Ok(json!({
        "edges": z.edges(),
        "local_types": local_types(d, z)?.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>(),
        "admissible": is_admissible(d, z),
        "turn_stats": st,
        "s1": s_value(d, z, 1),
        "s2": s_value(d, z, 2),
        "r1": d1.marked_rotation_number(),
        "r2": d2.marked_rotation_number(),
        "w1": d1.writhe(),
        "w2": d2.writhe(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use crate::diagram::close_braid;

    fn d(s: &str) -> Diagram {
        close_braid(&parse_braid(s).unwrap())
    }

    fn z(e: &[usize]) -> MultiCycle {
        MultiCycle::new(e.to_vec())
    }

    #[test]
    fn trefoil_local_cycles() {
        let t = d("1 1 1");
        let got = enumerate_cycles(&t, true);
        assert_eq!(
            got,
            vec![z(&[]), z(&[1, 2, 5]), z(&[1, 3, 4]), z(&[1, 3, 5])]
        );
        let all = enumerate_cycles(&t, false);
        assert_eq!(all.len(), 5);
        assert!(all.contains(&z(&[1, 2, 4])));
    }

    #[test]
    fn unknot_has_only_empty_cycle() {
        assert_eq!(enumerate_cycles(&d(""), true), vec![MultiCycle::empty()]);
    }

    #[test]
    fn trefoil_turns() {
        let t = d("1 1 1");
        assert_eq!(classify_local(&t, &z(&[]), 0).unwrap(), LocalType::Z0);
        let st = turn_stats(&t, &z(&[1, 3, 5])).unwrap();
        assert_eq!((st.t_pos, st.t_neg, st.diagonals(), st.x_pos), (3, 0, 0, 0));
        assert_eq!(turn_stats(&t, &z(&[1, 2, 5])).unwrap().turns(), 1);
        assert!(classify_local(&t, &z(&[1]), 0).is_err());
    }

    #[test]
    fn trefoil_subdiagrams() {
        let t = d("1 1 1");
        let full = z(&[1, 3, 5]);
        let d1 = subdiagram(&t, &full, 1);
        let d2 = subdiagram(&t, &full, 2);
        assert_eq!((d1.strand_count(), d1.crossing_count()), (1, 0));
        assert_eq!((d2.strand_count(), d2.crossing_count()), (1, 0));
        assert!(subdiagram(&t, &z(&[]), 1).is_empty());
        assert_eq!(subdiagram(&t, &z(&[]), 2).letters(), t.letters());
        assert_eq!((s_value(&t, &z(&[]), 1), s_value(&t, &z(&[]), 2)), (0, 3));
        assert_eq!((s_value(&t, &full, 1), s_value(&t, &full, 2)), (3, 3));
    }

    #[test]
    fn mirror_swaps_turn_signs() {
        let t = d("1 1 1");
        let st = turn_stats(&t.mirror(), &z(&[1, 3, 5])).unwrap();
        assert_eq!((st.t_pos, st.t_neg), (0, 3));
    }
}

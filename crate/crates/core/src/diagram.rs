//! Decorated braid-closure diagrams.
//!
//! Every crossing has incoming slots `k` (left) and `l` (right) and outgoing
//! slots `i` (left) and `j` (right), so `j`/`k` and `i`/`l` are the diagonal
//! pairs. Strands run downward through the braid and return upward along
//! closure arcs routed to the right. Edge `e0`, when present, is the top edge of
//! the leftmost strand position and is the marked edge.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::braid::{cycle_count, permutation, BraidWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    I,
    J,
    K,
    L,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::I, Slot::J, Slot::K, Slot::L];

    pub fn is_incoming(self) -> bool {
        matches!(self, Slot::K | Slot::L)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub sign: i8,
    /// Left strand position; the crossing acts on `pos` and `pos + 1`.
    pub pos: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl Crossing {
    pub fn slot(&self, s: Slot) -> usize {
        match s {
            Slot::I => self.i,
            Slot::J => self.j,
            Slot::K => self.k,
            Slot::L => self.l,
        }
    }

    pub fn edges(&self) -> [usize; 4] {
        [self.i, self.j, self.k, self.l]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    strands: usize,
    letters: Vec<i32>,
    crossings: Vec<Crossing>,
    edge_pos: Vec<usize>,
    top_edges: Vec<usize>,
    marked: Option<usize>,
}

/// Seifert circles of a braid closure: one per strand position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertData {
    pub circles: Vec<Vec<usize>>,
    pub special_circle: Option<usize>,
    pub signs: Vec<i8>,
}

impl Diagram {
    /// Closure of `letters` on `strands` strands. `marked` selects whether the
    /// top edge of position 0 is the marked edge. Zero strands give the empty
    /// diagram.
    pub(crate) fn closure(strands: usize, letters: &[i32], marked: bool) -> Self {
        let mut last_touch = vec![usize::MAX; strands];
        for (ci, &l) in letters.iter().enumerate() {
            let p = l.unsigned_abs() as usize - 1;
            last_touch[p] = ci;
            last_touch[p + 1] = ci;
        }
        let mut edge_pos: Vec<usize> = (0..strands).collect();
        let mut cur: Vec<usize> = (0..strands).collect();
        let mut crossings = Vec::with_capacity(letters.len());
        for (ci, &l) in letters.iter().enumerate() {
            let p = l.unsigned_abs() as usize - 1;
            let mut out = |q: usize| {
                if last_touch[q] == ci {
                    q
                } else {
                    edge_pos.push(q);
                    edge_pos.len() - 1
                }
            };
            let (i, j) = (out(p), out(p + 1));
            crossings.push(Crossing {
                sign: if l > 0 { 1 } else { -1 },
                pos: p,
                i,
                j,
                k: cur[p],
                l: cur[p + 1],
            });
            cur[p] = i;
            cur[p + 1] = j;
        }
        Diagram {
            strands,
            letters: letters.to_vec(),
            crossings,
            edge_pos,
            top_edges: (0..strands).collect(),
            marked: (marked && strands > 0).then_some(0),
        }
    }

    pub fn empty() -> Self {
        Self::closure(0, &[], false)
    }

    pub fn is_empty(&self) -> bool {
        self.strands == 0
    }

    pub fn strand_count(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The underlying braid word, if the diagram is nonempty.
    pub fn braid(&self) -> Option<BraidWord> {
        BraidWord::new(self.strands, self.letters.clone()).ok()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_pos.len()
    }

    /// Strand position an edge runs along.
    pub fn edge_position(&self, e: usize) -> usize {
        self.edge_pos[e]
    }

    pub fn top_edges(&self) -> &[usize] {
        &self.top_edges
    }

    pub fn marked_edge(&self) -> Option<usize> {
        self.marked
    }

    /// The same diagram with no marked edge.
    pub fn unmarked(&self) -> Self {
        let mut d = self.clone();
        d.marked = None;
        d
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Positive and negative crossing counts.
    pub fn sign_counts(&self) -> (usize, usize) {
        let pos = self.crossings.iter().filter(|c| c.sign > 0).count();
        (pos, self.crossings.len() - pos)
    }

    pub fn component_count(&self) -> usize {
        cycle_count(&permutation(self.strands, &self.letters))
    }

    pub fn mirror(&self) -> Self {
        let mut m = self.clone();
        for l in &mut m.letters {
            *l = -*l;
        }
        for c in &mut m.crossings {
            c.sign = -c.sign;
        }
        m
    }

    /// For each edge, the crossing and slot where it ends (`None` for a loop
    /// around an untouched position).
    pub fn edge_heads(&self) -> Vec<Option<(usize, Slot)>> {
        let mut heads = vec![None; self.edge_count()];
        for (ci, c) in self.crossings.iter().enumerate() {
            heads[c.k] = Some((ci, Slot::K));
            heads[c.l] = Some((ci, Slot::L));
        }
        heads
    }

    /// For each edge, the crossing and slot where it starts.
    pub fn edge_tails(&self) -> Vec<Option<(usize, Slot)>> {
        let mut tails = vec![None; self.edge_count()];
        for (ci, c) in self.crossings.iter().enumerate() {
            tails[c.i] = Some((ci, Slot::I));
            tails[c.j] = Some((ci, Slot::J));
        }
        tails
    }

    pub fn seifert_circles(&self) -> SeifertData {
        let mut circles = vec![Vec::new(); self.strands];
        for (e, &p) in self.edge_pos.iter().enumerate() {
            circles[p].push(e);
        }
        let special_circle = self.marked.map(|e| self.edge_pos[e]);
        // circle p bounds a disc containing the circles to its right; the disc
        // avoiding e0 is that inner disc, traversed clockwise
        let signs = (0..self.strands)
            .map(|p| if Some(p) == special_circle { 0 } else { -1 })
            .collect();
        SeifertData {
            circles,
            special_circle,
            signs,
        }
    }

    /// Unmarked rotation number: every circle of a braid closure is clockwise.
    pub fn rotation_number(&self) -> i64 {
        -(self.strands as i64)
    }

    /// Rotation number with circle signs read relative to the marked edge.
    /// Subdiagrams that do not contain the marked edge still use it, so every
    /// one of their circles counts.
    pub fn marked_rotation_number(&self) -> i64 {
        marked_rotation_number(&self.seifert_circles())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "strands": self.strands,
            "word": self.letters,
            "edges": self.edge_count(),
            "crossings": self.crossings.iter().map(|c| json!({
                "sign": c.sign, "i": c.i, "j": c.j, "k": c.k, "l": c.l,
            })).collect::<Vec<_>>(),
            "marked_edge": self.marked,
        })
    }
}

pub fn marked_rotation_number(s: &SeifertData) -> i64 {
    s.signs.iter().map(|&x| x as i64).sum()
}

pub fn close_braid(w: &BraidWord) -> Diagram {
    Diagram::closure(w.strand_count(), w.letters(), true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn d(s: &str) -> Diagram {
        close_braid(&parse_braid(s).unwrap())
    }

    #[test]
    fn trefoil_edges_follow_the_figure() {
        let t = d("1 1 1");
        assert_eq!(t.edge_count(), 6);
        let c: Vec<_> = t.crossings().iter().map(|c| (c.k, c.l, c.i, c.j)).collect();
        assert_eq!(c, [(0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 0, 1)]);
        assert_eq!(t.marked_edge(), Some(0));
    }

    #[test]
    fn counts() {
        assert_eq!(d("").edge_count(), 1);
        assert_eq!(d("").crossing_count(), 0);
        assert_eq!(d("1").edge_count(), 2);
        assert_eq!(d("1").crossings()[0].k, d("1").crossings()[0].i);
        let w = BraidWord::new(3, vec![1]).unwrap();
        assert_eq!(close_braid(&w).edge_count(), 3);
    }

    #[test]
    fn writhe_and_mirror() {
        assert_eq!(d("1 1 1").writhe(), 3);
        assert_eq!(d("1 -1").writhe(), 0);
        assert_eq!(d("").writhe(), 0);
        assert_eq!(d("1 1 1").mirror().writhe(), -3);
        assert_eq!(d("1 -2").mirror().mirror(), d("1 -2"));
    }

    #[test]
    fn seifert_and_rotation() {
        assert_eq!(d("1 1 1").seifert_circles().circles.len(), 2);
        assert_eq!(d("").seifert_circles().special_circle, Some(0));
        assert_eq!(d("1 -2").seifert_circles().circles.len(), 3);
        assert_eq!(d("1 1 1").rotation_number(), -2);
        assert_eq!(d("").rotation_number(), -1);
        assert_eq!(d("1 -2").rotation_number(), -3);
        assert_eq!(d("").marked_rotation_number(), 0);
        assert_eq!(d("1 1 1").marked_rotation_number(), -1);
        assert_eq!(Diagram::empty().marked_rotation_number(), 0);
    }

    #[test]
    fn every_edge_used_twice() {
        let t = d("1 -2 1 -2");
        let mut uses = vec![0; t.edge_count()];
        for c in t.crossings() {
            for e in c.edges() {
                uses[e] += 1;
            }
        }
        assert!(uses.iter().all(|&u| u == 2));
    }
}

//! Dense bit-vector linear algebra over F2.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn xor_with(&mut self, other: &BitVec) {
        self.words
            .iter_mut()
            .zip(&other.words)
            .for_each(|(a, b)| *a ^= b);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }
}

/// Row echelon basis built incrementally; each stored row has a distinct
/// leading position and may carry a tag vector recording its combination.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, BitVec, Option<BitVec>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut BitVec, mut tag: Option<&mut BitVec>) {
        for (p, row, rtag) in &self.rows {
            if v.get(*p) {
                v.xor_with(row);
                if let (Some(t), Some(rt)) = (tag.as_deref_mut(), rtag) {
                    t.xor_with(rt);
                }
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already in it.
    pub fn insert(&mut self, v: BitVec) -> bool {
        self.insert_tagged(v, None).is_none()
    }

    /// Adds `v` with a tag. If `v` already lies in the span, returns the
    /// reduced tag (a relation among the inserted vectors).
    pub fn insert_tagged(
        &mut self,
        mut v: BitVec,
        mut tag: Option<BitVec>,
    ) -> Option<Option<BitVec>> {
        self.reduce(&mut v, tag.as_mut());
        match v.first_one() {
            Some(p) => {
                // keep rows sorted by pivot so reduction is a single pass
                let idx = self.rows.partition_point(|(q, _, _)| *q < p);
                self.rows.insert(idx, (p, v, tag));
                None
            }
            None => Some(tag),
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w, None);
        w.is_zero()
    }
}

/// Rank of a list of vectors.
pub fn rank(vectors: impl IntoIterator<Item = BitVec>) -> usize {
    let mut e = Echelon::new();
    vectors.into_iter().for_each(|v| {
        e.insert(v);
    });
    e.rank()
}

/// Kernel of the map sending basis vector `i` to `images[i]`, as vectors in
/// the domain.
pub fn kernel(images: &[BitVec]) -> Vec<BitVec> {
    let n = images.len();
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut tag = BitVec::zeros(n);
        tag.set(i);
        if let Some(Some(rel)) = e.insert_tagged(img.clone(), Some(tag)) {
            out.push(rel);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVec {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b == 1 {
                v.set(i);
            }
        }
        v
    }

    #[test]
    fn rank_and_kernel() {
        let imgs = vec![
            bv(&[1, 1, 0]),
            bv(&[0, 1, 1]),
            bv(&[1, 0, 1]),
            bv(&[0, 0, 0]),
        ];
        assert_eq!(rank(imgs.clone()), 2);
        let k = kernel(&imgs);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut s = BitVec::zeros(3);
            v.ones().for_each(|i| s.xor_with(&imgs[i]));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn wide_vectors() {
        let mut a = BitVec::zeros(130);
        a.set(129);
        assert_eq!(a.first_one(), Some(129));
        let mut e = Echelon::new();
        assert!(e.insert(a.clone()));
        assert!(!e.insert(a.clone()));
        assert!(e.contains(&a));
    }
}

//! Test corpus of braid words up to cyclic rotation.

use crate::braid::BraidWord;

/// One representative per rotation class of words over `±1..±(max_strands-1)`
/// with at most `max_len` letters, each on its minimal strand count. The empty
/// word comes first.
pub fn braid_corpus(max_len: usize, max_strands: usize) -> Vec<BraidWord> {
    let gens = max_strands.saturating_sub(1) as i32;
    let alphabet: Vec<i32> = (1..=gens).flat_map(|g| [g, -g]).collect();
    let mut out = vec![BraidWord::minimal(vec![]).expect("empty word")];
    for len in 1..=max_len {
        let mut word = vec![0usize; len];
        loop {
            let letters: Vec<i32> = word.iter().map(|&i| alphabet[i]).collect();
            let minimal_rotation = (1..len).all(|k| {
                let mut r = letters.clone();
                r.rotate_left(k);
                letters <= r
            });
            if minimal_rotation {
                out.push(BraidWord::minimal(letters).expect("letters fit"));
            }
            let mut pos = len;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                word[pos] += 1;
                if word[pos] < alphabet.len() {
                    break;
                }
                word[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || alphabet.is_empty() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_counts() {
        // rotation classes of words over 4 letters: 4, 10, 24, 70, 208, 700
        assert_eq!(braid_corpus(6, 3).len(), 1 + 4 + 10 + 24 + 70 + 208 + 700);
        assert_eq!(braid_corpus(2, 2).len(), 1 + 2 + 3);
    }
}

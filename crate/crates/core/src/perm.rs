//! Permutations of `{1..n}` with the composition, length, descent, and
//! reduced-word machinery used by the symmetric-group actions.

use rand::seq::SliceRandom;
use rand::Rng;

/// A permutation of `{1..n}`, stored as the image list `w(1), ..., w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            img: (1..=n as u16).collect(),
        }
    }

    /// The adjacent transposition `s_i` swapping `i` and `i+1` (1-based).
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        assert!(i >= 1 && i < n, "adjacent index out of range");
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Permutation {
        assert!(i != j && i >= 1 && j >= 1 && i <= n && j <= n);
        let mut p = Permutation::identity(n);
        p.img.swap(i - 1, j - 1);
        p
    }

    /// The order-reversing permutation `i -> n+1-i`.
    pub fn longest(n: usize) -> Permutation {
        Permutation {
            img: (1..=n as u16).rev().collect(),
        }
    }

    pub fn from_images(img: Vec<u16>) -> Permutation {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &v in &img {
            assert!(v >= 1 && v as usize <= n && !seen[v as usize], "not a permutation");
            seen[v as usize] = true;
        }
        Permutation { img }
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// `w(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            img: (1..=self.n()).map(|i| self.img[other.apply(i) - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0u16; self.n()];
        for i in 1..=self.n() {
            img[self.apply(i) - 1] = i as u16;
        }
        Permutation { img }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut l = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.img[i] > self.img[j] {
                    l += 1;
                }
            }
        }
        l
    }

    /// Right multiplication by `s_i`: swaps the images at positions `i`, `i+1`.
    pub fn right_mul_adjacent(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n());
        let mut p = self.clone();
        p.img.swap(i - 1, i);
        p
    }

    /// Right descent set: positions `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.img[i - 1] > self.img[i])
            .collect()
    }

    /// One reduced word `[i_1, ..., i_L]` with
    /// `self = s_{i_1} · s_{i_2} · ... · s_{i_L}` (left-to-right right-multiplication).
    pub fn reduced_word(&self) -> Vec<u16> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(&i) = w.right_descents().first() {
            w = w.right_mul_adjacent(i);
            word.push(i as u16);
        }
        word.reverse();
        word
    }

    /// All reduced words (exponential; intended for small `n`).
    pub fn all_reduced_words(&self) -> Vec<Vec<u16>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in self.right_descents() {
            let shorter = self.right_mul_adjacent(i);
            for mut word in shorter.all_reduced_words() {
                word.push(i as u16);
                out.push(word);
            }
        }
        out
    }

    /// Rebuild a permutation from a word of adjacent-transposition indices.
    pub fn from_word(n: usize, word: &[u16]) -> Permutation {
        let mut w = Permutation::identity(n);
        for &i in word {
            w = w.right_mul_adjacent(i as usize);
        }
        w
    }

    /// The image list as a 1-based `t`-relabeling map `t_a -> t_{w(a)}`.
    pub fn t_map(&self) -> Vec<u16> {
        self.img.clone()
    }

    /// All permutations of `{1..n}` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n <= 8, "refusing to enumerate S_n for n > 8");
        let mut out = Vec::new();
        let mut img: Vec<u16> = (1..=n as u16).collect();
        loop {
            out.push(Permutation { img: img.clone() });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| img[k] < img[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| img[l] > img[k]).unwrap();
            img.swap(k, l);
            img[k + 1..].reverse();
        }
        out
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Permutation {
        let mut img: Vec<u16> = (1..=n as u16).collect();
        img.shuffle(rng);
        Permutation { img }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn compose_and_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let w = Permutation::random(5, &mut rng);
            let u = Permutation::random(5, &mut rng);
            let wu = w.after(&u);
            for i in 1..=5 {
                assert_eq!(wu.apply(i), w.apply(u.apply(i)));
            }
            assert!(w.after(&w.inverse()).is_identity());
            assert!(w.inverse().after(&w).is_identity());
        }
    }

    #[test]
    fn lengths_and_descents() {
        assert_eq!(Permutation::identity(4).length(), 0);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(Permutation::adjacent(4, 2).length(), 1);
        assert_eq!(Permutation::longest(3).right_descents(), vec![1, 2]);
    }

    #[test]
    fn reduced_words_roundtrip() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(Permutation::from_word(4, &word), w);
        }
        // the longest element of S_3 has exactly two reduced words
        let words = Permutation::longest(3).all_reduced_words();
        assert_eq!(words.len(), 2);
        for word in &words {
            assert_eq!(Permutation::from_word(3, word), Permutation::longest(3));
        }
        // prefixes of a reduced word have strictly increasing length
        let long = Permutation::longest(4);
        for word in long.all_reduced_words() {
            let mut prev = 0usize;
            for j in 1..=word.len() {
                let l = Permutation::from_word(4, &word[..j]).length();
                assert_eq!(l, prev + 1);
                prev = l;
            }
        }
    }

    #[test]
    fn enumeration_is_complete() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let set: std::collections::BTreeSet<_> = all.into_iter().collect();
        assert_eq!(set.len(), 24);
    }
}

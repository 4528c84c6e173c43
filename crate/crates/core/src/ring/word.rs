//! Nonassociative words over the generators `a1, a2, …` and their conjugates.
//!
//! A word is stored flat: the sequence of its letters together with the
//! preorder shape of its binary product tree (`false` for a product node,
//! `true` for a leaf). The empty word is the unit `1_C`; it never occurs as a
//! child of a product node.

use std::cmp::Ordering;
use std::fmt;

/// A generator `a_i` or its conjugate `a_i'`. Indices are 1-based.
///
/// The derived order puts every generator before every conjugate:
/// `a1 < a2 < … < a1' < a2' < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Gen(u16),
    Conj(u16),
}

impl Letter {
    pub fn index(self) -> u16 {
        match self {
            Letter::Gen(i) | Letter::Conj(i) => i,
        }
    }

    pub fn conj(self) -> Letter {
        match self {
            Letter::Gen(i) => Letter::Conj(i),
            Letter::Conj(i) => Letter::Gen(i),
        }
    }

    pub fn is_conj(self) -> bool {
        matches!(self, Letter::Conj(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Gen(i) => write!(f, "a{i}"),
            Letter::Conj(i) => write!(f, "a{i}'"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    shape: Vec<bool>,
}

/// Structural view of a word.
pub enum View {
    Unit,
    Leaf(Letter),
    Mul(Word, Word),
}

impl Word {
    pub fn unit() -> Word {
        Word {
            letters: Vec::new(),
            shape: Vec::new(),
        }
    }

    pub fn leaf(letter: Letter) -> Word {
        Word {
            letters: vec![letter],
            shape: vec![true],
        }
    }

    pub fn generator(i: u16) -> Word {
        Word::leaf(Letter::Gen(i))
    }

    /// Product node; units are absorbed.
    pub fn mul(left: &Word, right: &Word) -> Word {
        if left.is_unit() {
            return right.clone();
        }
        if right.is_unit() {
            return left.clone();
        }
        let mut letters = Vec::with_capacity(left.letters.len() + right.letters.len());
        letters.extend_from_slice(&left.letters);
        letters.extend_from_slice(&right.letters);
        let mut shape = Vec::with_capacity(1 + left.shape.len() + right.shape.len());
        shape.push(false);
        shape.extend_from_slice(&left.shape);
        shape.extend_from_slice(&right.shape);
        Word { letters, shape }
    }

    /// Left-associated product of the given letters, `((l0 l1) l2) …`.
    pub fn left_assoc(letters: &[Letter]) -> Word {
        letters
            .iter()
            .fold(Word::unit(), |acc, &l| Word::mul(&acc, &Word::leaf(l)))
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of nodes (leaves and products) of the tree.
    pub fn node_count(&self) -> usize {
        self.shape.len()
    }

    pub fn view(&self) -> View {
        match self.letters.len() {
            0 => View::Unit,
            1 => View::Leaf(self.letters[0]),
            _ => {
                let (l, r) = self.split_at_root();
                View::Mul(l, r)
            }
        }
    }

    pub fn split(&self) -> Option<(Word, Word)> {
        if self.letters.len() < 2 {
            None
        } else {
            Some(self.split_at_root())
        }
    }

    fn split_at_root(&self) -> (Word, Word) {
        debug_assert!(!self.shape[0]);
        let mut need = 1usize;
        let mut end = 1usize;
        let mut leaves = 0usize;
        while need > 0 {
            if self.shape[end] {
                need -= 1;
                leaves += 1;
            } else {
                need += 1;
            }
            end += 1;
        }
        let left = Word {
            letters: self.letters[..leaves].to_vec(),
            shape: self.shape[1..end].to_vec(),
        };
        let right = Word {
            letters: self.letters[leaves..].to_vec(),
            shape: self.shape[end..].to_vec(),
        };
        (left, right)
    }

    /// Conjugate: reverse every product and swap generators with conjugates.
    pub fn conj(&self) -> Word {
        match self.view() {
            View::Unit => Word::unit(),
            View::Leaf(l) => Word::leaf(l.conj()),
            View::Mul(l, r) => Word::mul(&r.conj(), &l.conj()),
        }
    }

    pub fn has_conj_letter(&self) -> bool {
        self.letters.iter().any(|l| l.is_conj())
    }

    /// Subtree rooted at preorder node `k`.
    pub fn subtree(&self, k: usize) -> Word {
        if k == 0 {
            return self.clone();
        }
        let (l, r) = self.split().expect("node index out of range");
        let ln = l.node_count();
        if k - 1 < ln {
            l.subtree(k - 1)
        } else {
            r.subtree(k - 1 - ln)
        }
    }

    /// Replace the subtree at preorder node `k`; a unit replacement collapses
    /// the parent product.
    pub fn replace(&self, k: usize, with: &Word) -> Word {
        if k == 0 {
            return with.clone();
        }
        let (l, r) = self.split().expect("node index out of range");
        let ln = l.node_count();
        if k - 1 < ln {
            Word::mul(&l.replace(k - 1, with), &r)
        } else {
            Word::mul(&l, &r.replace(k - 1 - ln, with))
        }
    }

    /// `(xy)z -> x(yz)` or `x(yz) -> (xy)z` at the root, where applicable.
    pub fn reassociations(&self) -> Vec<Word> {
        let mut out = Vec::new();
        if let Some((l, r)) = self.split() {
            if let Some((x, y)) = l.split() {
                out.push(Word::mul(&x, &Word::mul(&y, &r)));
            }
            if let Some((y, z)) = r.split() {
                out.push(Word::mul(&Word::mul(&l, &y), &z));
            }
        }
        out
    }

    /// Rendering used inside `tr(…)`: letters juxtaposed, inner products of
    /// words longer than three letters parenthesized.
    pub fn trace_name(&self) -> String {
        if self.len() <= 3 {
            return self.letters.iter().map(|l| l.to_string()).collect();
        }
        fn inner(w: &Word, top: bool) -> String {
            match w.view() {
                View::Unit => "1".into(),
                View::Leaf(l) => l.to_string(),
                View::Mul(l, r) => {
                    let s = format!("{}{}", inner(&l, false), inner(&r, false));
                    if top {
                        s
                    } else {
                        format!("({s})")
                    }
                }
            }
        }
        inner(self, true)
    }
}

impl Ord for Word {
    /// Shorter words first, then letters lexicographically, then shape (a
    /// product child sorts before a leaf, so `(ab)c < a(bc)`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.shape.cmp(&other.shape))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.view() {
            View::Unit => write!(f, "1_C"),
            View::Leaf(l) => write!(f, "{l}"),
            View::Mul(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All words with exactly `len` letters over `alphabet`, every bracketing.
pub fn all_words(alphabet: &[Letter], len: usize) -> Vec<Word> {
    let mut table: Vec<Vec<Word>> = vec![Vec::new(); len + 1];
    if len == 0 {
        return vec![Word::unit()];
    }
    table[1] = alphabet.iter().map(|&l| Word::leaf(l)).collect();
    for n in 2..=len {
        let mut words = Vec::new();
        for k in 1..n {
            for l in &table[k] {
                for r in &table[n - k] {
                    words.push(Word::mul(l, r));
                }
            }
        }
        table[n] = words;
    }
    std::mem::take(&mut table[len])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u16) -> Word {
        Word::generator(i)
    }

    #[test]
    fn unit_is_absorbed() {
        assert_eq!(Word::mul(&a(1), &Word::unit()), a(1));
        assert_eq!(Word::mul(&Word::unit(), &a(2)), a(2));
    }

    #[test]
    fn split_recovers_factors() {
        let w = Word::mul(&Word::mul(&a(1), &a(2)), &Word::mul(&a(3), &a(1)));
        let (l, r) = w.split().unwrap();
        assert_eq!(l, Word::mul(&a(1), &a(2)));
        assert_eq!(r, Word::mul(&a(3), &a(1)));
    }

    #[test]
    fn conj_reverses_and_swaps() {
        let w = Word::mul(&a(1), &a(2));
        assert_eq!(w.conj().to_string(), "(a2'*a1')");
        assert_eq!(w.conj().conj(), w);
    }

    #[test]
    fn replace_with_unit_collapses() {
        let w = Word::mul(&Word::mul(&a(1), &a(2)), &a(3));
        // preorder: 0 root, 1 (a1 a2), 2 a1, 3 a2, 4 a3
        assert_eq!(w.replace(3, &Word::unit()), Word::mul(&a(1), &a(3)));
        assert_eq!(w.subtree(1), Word::mul(&a(1), &a(2)));
        assert_eq!(w.subtree(4), a(3));
    }

    #[test]
    fn ordering_prefers_short_then_letters_then_left_assoc() {
        let left = Word::left_assoc(&[Letter::Gen(1), Letter::Gen(2), Letter::Gen(3)]);
        let right = Word::mul(&a(1), &Word::mul(&a(2), &a(3)));
        assert!(left < right);
        assert!(a(2) < Word::mul(&a(1), &a(1)));
        assert!(Word::leaf(Letter::Gen(3)) < Word::leaf(Letter::Conj(1)));
    }

    #[test]
    fn word_counts_follow_catalan_numbers() {
        let alphabet = [Letter::Gen(1), Letter::Gen(2)];
        assert_eq!(all_words(&alphabet, 3).len(), 2 * 8);
        assert_eq!(all_words(&alphabet, 4).len(), 5 * 16);
    }

    #[test]
    fn trace_names() {
        let w = Word::mul(&a(1), &Word::leaf(Letter::Conj(2)));
        assert_eq!(w.trace_name(), "a1a2'");
        let w4 = Word::mul(&Word::mul(&a(1), &a(2)), &Word::mul(&a(3), &a(1)));
        assert_eq!(w4.trace_name(), "(a1a2)(a3a1)");
    }
}

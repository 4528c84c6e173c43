//! Canonical representatives for trace indeterminates.

use std::collections::{BTreeSet, VecDeque};

use super::poly::ScalarPoly;
use super::word::{View, Word};

/// Closure orbit of `w` under conjugation, top-level swap and, for words of
/// length three, reassociation.
pub fn orbit(w: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(v) = queue.pop_front() {
        let mut next = vec![v.conj()];
        if let Some((l, r)) = v.split() {
            next.push(Word::mul(&r, &l));
        }
        if v.len() == 3 {
            next.extend(v.reassociations());
        }
        for n in next {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Preorder index of the first node of the form `s * conj(s)`.
fn find_norm_pair(w: &Word) -> Option<(usize, Word)> {
    fn walk(w: &Word, base: usize) -> Option<(usize, Word)> {
        match w.view() {
            View::Mul(l, r) => {
                if r == l.conj() {
                    return Some((base, l));
                }
                let ln = l.node_count();
                walk(&l, base + 1).or_else(|| walk(&r, base + 1 + ln))
            }
            _ => None,
        }
    }
    walk(w, 0)
}

fn norm_of_letters(s: &Word) -> ScalarPoly {
    s.letters().iter().fold(ScalarPoly::one(), |acc, l| {
        &acc * &ScalarPoly::norm_indet(l.index())
    })
}

/// `tr(w) = factor * tr(rep)`, or `tr(w) = factor` when `rep` is `None`.
/// The caller checks length bounds.
pub(crate) fn canonicalize(w: &Word) -> (ScalarPoly, Option<Word>) {
    if w.is_unit() {
        return (ScalarPoly::from_int(2), None);
    }
    let members = orbit(w);
    for m in &members {
        if let Some((k, s)) = find_norm_pair(m) {
            let reduced = m.replace(k, &Word::unit());
            let (f, rep) = canonicalize(&reduced);
            return (&norm_of_letters(&s) * &f, rep);
        }
    }
    let rep = members
        .into_iter()
        .next()
        .expect("orbit contains the word itself");
    (ScalarPoly::one(), Some(rep))
}

/// Orbit member with the fewest conjugate letters (earliest in word order on ties).
pub(crate) fn least_conjugated(w: &Word) -> Word {
    orbit(w)
        .into_iter()
        .min_by_key(|m| {
            (
                m.letters().iter().filter(|l| l.is_conj()).count(),
                m.clone(),
            )
        })
        .expect("orbit contains the word itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::word::Letter;

    fn a(i: u16) -> Word {
        Word::generator(i)
    }

    #[test]
    fn swap_picks_minimum() {
        let (f, rep) = canonicalize(&Word::mul(&a(2), &a(1)));
        assert!(f.is_one());
        assert_eq!(rep.unwrap(), Word::mul(&a(1), &a(2)));
    }

    #[test]
    fn norm_pair_collapses_to_constant() {
        let w = Word::mul(&a(1), &a(1).conj());
        let (f, rep) = canonicalize(&w);
        assert!(rep.is_none());
        assert_eq!(f.to_string(), "2*n(a1)");
    }

    #[test]
    fn length_three_orbit_is_cyclic_and_mirrored() {
        let w = Word::mul(&Word::mul(&a(1), &a(2)), &a(3));
        let o = orbit(&w);
        // 3 rotations x 2 bracketings x 2 mirror images
        assert_eq!(o.len(), 12);
        assert!(o.contains(&Word::mul(&a(3), &Word::mul(&a(1), &a(2)))));
    }

    #[test]
    fn length_four_does_not_reassociate() {
        let w = Word::left_assoc(&[
            Letter::Gen(1),
            Letter::Gen(2),
            Letter::Gen(3),
            Letter::Gen(4),
        ]);
        for m in orbit(&w) {
            assert!(m == w || m.letters() != w.letters());
        }
    }

    #[test]
    fn nested_norm_pair_is_extracted() {
        // tr((a1 a1') a2) = n(a1) tr(a2)
        let w = Word::mul(&Word::mul(&a(1), &a(1).conj()), &a(2));
        let (f, rep) = canonicalize(&w);
        assert_eq!(f.to_string(), "n(a1)");
        assert_eq!(rep.unwrap(), a(2));
    }
}

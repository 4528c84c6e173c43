//! The coefficient ring `k` and the word layer shared with the conic algebra.

pub mod poly;
pub mod trace;
pub mod word;

use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
pub use poly::{with_render_style, Indet, Monomial, RenderStyle, ScalarPoly};
pub use word::{Letter, View, Word};

type TraceCache = RwLock<HashMap<Word, (ScalarPoly, Option<Word>)>>;

/// Bounds on the indeterminates in play: `t1..t{m1}`, `a1..a{m2}` and trace
/// words of length at most `m3`.
pub struct Context {
    m1: usize,
    m2: usize,
    m3: usize,
    registry: OnceLock<BTreeSet<Word>>,
    cache: TraceCache,
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Context")
            .field("m1", &self.m1)
            .field("m2", &self.m2)
            .field("m3", &self.m3)
            .finish()
    }
}

impl Context {
    pub fn new(m1: usize, m2: usize, m3: usize) -> Result<Context> {
        if m2 < 1 {
            return Err(Error::Config(format!("m2 must be at least 1, got {m2}")));
        }
        if m3 < 2 {
            return Err(Error::Config(format!("m3 must be at least 2, got {m3}")));
        }
        if m2 > u16::MAX as usize || m1 > u16::MAX as usize {
            return Err(Error::Config("too many indeterminates".into()));
        }
        Ok(Context {
            m1,
            m2,
            m3,
            registry: OnceLock::new(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn m1(&self) -> usize {
        self.m1
    }

    pub fn m2(&self) -> usize {
        self.m2
    }

    pub fn m3(&self) -> usize {
        self.m3
    }

    /// Generators and their conjugates, in letter order.
    pub fn alphabet(&self) -> Vec<Letter> {
        let n = self.m2 as u16;
        (1..=n)
            .map(Letter::Gen)
            .chain((1..=n).map(Letter::Conj))
            .collect()
    }

    /// The canonical trace words `T(m2, m3)`, enumerated on first use.
    pub fn trace_registry(&self) -> &BTreeSet<Word> {
        self.registry.get_or_init(|| {
            let alphabet = self.alphabet();
            let mut out = BTreeSet::new();
            for len in 1..=self.m3 {
                for w in word::all_words(&alphabet, len) {
                    if let (_, Some(rep)) = trace::canonicalize(&w) {
                        out.insert(rep);
                    }
                }
            }
            out
        })
    }

    pub fn check_scalar(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.m1 {
            return Err(Error::IndexOutOfBounds {
                what: "t",
                index: i,
                max: self.m1,
            });
        }
        Ok(())
    }

    pub fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.m2 {
            return Err(Error::IndexOutOfBounds {
                what: "a",
                index: i,
                max: self.m2,
            });
        }
        Ok(())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        for l in w.letters() {
            self.check_generator(l.index() as usize)?;
        }
        Ok(())
    }

    /// `tr(w) = factor * tr(rep)`; `rep = None` means `tr(w) = factor`.
    pub fn canonical_trace_word(&self, w: &Word) -> Result<(ScalarPoly, Option<Word>)> {
        if w.len() > self.m3 {
            return Err(Error::TraceLengthOverflow {
                len: w.len(),
                max: self.m3,
            });
        }
        self.check_word(w)?;
        if let Some(hit) = self.cache.read().expect("trace cache poisoned").get(w) {
            return Ok(hit.clone());
        }
        let out = trace::canonicalize(w);
        self.cache
            .write()
            .expect("trace cache poisoned")
            .insert(w.clone(), out.clone());
        Ok(out)
    }

    /// `tr(w)` as an element of `k`.
    pub fn trace_of_word(&self, w: &Word) -> Result<ScalarPoly> {
        let (f, rep) = self.canonical_trace_word(w)?;
        Ok(match rep {
            Some(r) => &f * &ScalarPoly::trace_indet(r),
            None => f,
        })
    }

    /// `n(w)`: product of the norms of the letters.
    pub fn norm_of_word(&self, w: &Word) -> Result<ScalarPoly> {
        self.check_word(w)?;
        Ok(w.letters().iter().fold(ScalarPoly::one(), |acc, l| {
            &acc * &ScalarPoly::norm_indet(l.index())
        }))
    }

    /// Expand traces of conjugate-bearing words of length 2 and 3 into traces
    /// of conjugate-free words, then rewrite `tr(a_i a_i)`; repeated to a fixpoint.
    pub fn simplify_scalar(&self, p: &ScalarPoly) -> ScalarPoly {
        let mut cur = p.clone();
        loop {
            let (next, changed) = cur.substitute(|ind| match ind {
                Indet::Trace(w) => self.expand_trace(w),
                _ => None,
            });
            if !changed {
                return cur;
            }
            cur = next;
        }
    }

    fn expand_trace(&self, w: &Word) -> Option<ScalarPoly> {
        let len = w.len();
        if (len == 2 || len == 3) && w.has_conj_letter() {
            let v = trace::least_conjugated(w);
            if !v.has_conj_letter() {
                return Some(
                    self.trace_of_word(&v)
                        .expect("shorter than a registered word"),
                );
            }
            let k = (0..v.node_count())
                .find(|&k| matches!(v.subtree(k).view(), View::Leaf(l) if l.is_conj()))
                .expect("word has a conjugate letter");
            let View::Leaf(l) = v.subtree(k).view() else {
                unreachable!()
            };
            let g = Word::leaf(l.conj());
            let dropped = self.trace_of_word(&v.replace(k, &Word::unit())).ok()?;
            let swapped = self.trace_of_word(&v.replace(k, &g)).ok()?;
            let tr_a = ScalarPoly::trace_indet(g);
            return Some(&(&tr_a * &dropped) - &swapped);
        }
        if let Some((l, r)) = w.split() {
            if len == 2 && l == r && !l.has_conj_letter() {
                let View::Leaf(letter) = l.view() else {
                    return None;
                };
                let t = ScalarPoly::trace_indet(l.clone());
                return Some(&t.pow(2) - &ScalarPoly::norm_indet(letter.index()).scale_int(2));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u16) -> Word {
        Word::generator(i)
    }

    #[test]
    fn bounds_are_validated() {
        assert!(Context::new(0, 1, 2).is_ok());
        assert!(matches!(Context::new(0, 0, 2), Err(Error::Config(_))));
        assert!(matches!(Context::new(1, 1, 1), Err(Error::Config(_))));
    }

    #[test]
    fn overflow_is_reported() {
        let ctx = Context::new(1, 2, 3).unwrap();
        let w = Word::left_assoc(&[
            Letter::Gen(1),
            Letter::Gen(1),
            Letter::Gen(2),
            Letter::Gen(2),
        ]);
        assert_eq!(
            ctx.canonical_trace_word(&w),
            Err(Error::TraceLengthOverflow { len: 4, max: 3 })
        );
    }

    #[test]
    fn registry_representatives_are_fixed_points() {
        let ctx = Context::new(0, 2, 3).unwrap();
        for w in ctx.trace_registry() {
            let (f, rep) = ctx.canonical_trace_word(w).unwrap();
            assert!(f.is_one());
            assert_eq!(rep.as_ref(), Some(w));
        }
    }

    #[test]
    fn registry_sizes_for_small_bounds() {
        let ctx = Context::new(0, 1, 2).unwrap();
        // tr(a1), tr(a1a1); a1a1' reduces to 2n(a1)
        let names: Vec<String> = ctx
            .trace_registry()
            .iter()
            .map(|w| w.trace_name())
            .collect();
        assert_eq!(names, vec!["a1", "a1a1"]);
    }

    #[test]
    fn mixed_trace_expands() {
        let ctx = Context::new(0, 2, 3).unwrap();
        let p = ctx.trace_of_word(&Word::mul(&a(1), &a(2).conj())).unwrap();
        assert_eq!(p.to_string(), "tr(a1a2')");
        assert_eq!(
            ctx.simplify_scalar(&p).to_string(),
            "tr(a1)*tr(a2)-tr(a1a2)"
        );
    }

    #[test]
    fn square_trace_expands() {
        let ctx = Context::new(0, 2, 3).unwrap();
        let p = ctx.trace_of_word(&Word::mul(&a(1), &a(1))).unwrap();
        assert_eq!(ctx.simplify_scalar(&p).to_string(), "tr(a1)^2-2*n(a1)");
    }

    #[test]
    fn simplification_terminates_on_every_short_word() {
        let ctx = Context::new(0, 3, 3).unwrap();
        for len in 1..=3 {
            for w in word::all_words(&ctx.alphabet(), len) {
                let p = ctx.trace_of_word(&w).unwrap();
                let s = ctx.simplify_scalar(&p);
                assert_eq!(ctx.simplify_scalar(&s), s);
                for ind in s.indets() {
                    if let Indet::Trace(t) = ind {
                        assert!(!t.has_conj_letter(), "{w} left {t}");
                    }
                }
            }
        }
    }
}

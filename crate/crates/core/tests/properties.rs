use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use jordan_core::conic::ConicElement;
use jordan_core::dsl::{parse, Tables};
use jordan_core::jordan::CubicElement;
use jordan_core::lie::{check_table, BracketTable, CheckStatus, Tag, TwistTable};
use jordan_core::oracle::{Mat2, Valuation};
use jordan_core::ring::{Context, Letter, ScalarPoly, Word};

fn ctx() -> &'static Context {
    static CTX: OnceLock<Context> = OnceLock::new();
    CTX.get_or_init(|| Context::new(3, 2, 4).unwrap())
}

fn letter() -> impl Strategy<Value = Letter> {
    (1u16..=2, any::<bool>()).prop_map(|(i, c)| if c { Letter::Conj(i) } else { Letter::Gen(i) })
}

/// Random bracketing of 1..=max letters.
fn word(max: usize) -> impl Strategy<Value = Word> {
    let leaf = letter().prop_map(Word::leaf);
    leaf.prop_recursive(3, max as u32, 2, |inner| {
        (inner.clone(), inner).prop_map(|(l, r)| Word::mul(&l, &r))
    })
    .prop_filter("bounded length", move |w| w.len() <= max)
}

fn conic(max_len: usize) -> impl Strategy<Value = ConicElement> {
    prop::collection::vec((-3i64..=3, word(max_len)), 0..5).prop_map(|terms| {
        terms.into_iter().fold(ConicElement::zero(), |acc, (c, w)| {
            &acc + &ConicElement::term(ScalarPoly::from_int(c), w)
        })
    })
}

fn valuation(seed: u64) -> Valuation {
    Valuation::random(&mut ChaCha8Rng::seed_from_u64(seed), 3, 2, false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conj_is_an_involution(c in conic(3)) {
        prop_assert_eq!(c.conj().conj(), c);
    }

    #[test]
    fn conj_matches_adjugate(c in conic(3), seed in any::<u64>()) {
        let v = valuation(seed);
        prop_assert_eq!(v.conic(&c.conj()), v.conic(&c).adj());
    }

    #[test]
    fn trace_canonical_form_is_sound(w in word(4), seed in any::<u64>()) {
        let v = valuation(seed);
        let t = ctx().trace_of_word(&w).unwrap();
        prop_assert_eq!(v.scalar(&t), v.word(&w).trace());
        prop_assert_eq!(v.scalar(&ctx().simplify_scalar(&t)), v.word(&w).trace());
    }

    #[test]
    fn trace_canonical_form_is_idempotent(w in word(4)) {
        if let (_, Some(rep)) = ctx().canonical_trace_word(&w).unwrap() {
            let (f, again) = ctx().canonical_trace_word(&rep).unwrap();
            prop_assert!(f.is_one());
            prop_assert_eq!(again, Some(rep));
        }
    }

    #[test]
    fn trace_is_conjugation_invariant(w in word(4)) {
        let a = ctx().simplify_scalar(&ctx().trace_of_word(&w).unwrap());
        let b = ctx().simplify_scalar(&ctx().trace_of_word(&w.conj()).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn simplify_preserves_value(c in conic(3), seed in any::<u64>()) {
        let v = valuation(seed);
        let s = c.simplify(ctx()).unwrap();
        prop_assert_eq!(v.conic(&s), v.conic(&c));
        prop_assert_eq!(s.simplify(ctx()).unwrap(), s);
    }

    #[test]
    fn norm_and_trace_match_determinant(c in conic(2), seed in any::<u64>()) {
        let v = valuation(seed);
        prop_assert_eq!(v.scalar(&c.norm(ctx()).unwrap()), v.conic(&c).det());
        prop_assert_eq!(v.scalar(&c.trace(ctx()).unwrap()), v.conic(&c).trace());
    }

    #[test]
    fn cayley_hamilton(c in conic(1), seed in any::<u64>()) {
        let v = valuation(seed);
        let m = v.conic(&c);
        let n = v.scalar(&c.norm(ctx()).unwrap());
        let t = v.scalar(&c.trace(ctx()).unwrap());
        let lhs = m.mul(&m).sub(&m.scale(&t)).add(&Mat2::scalar(n));
        prop_assert_eq!(lhs, Mat2::zero());
    }
}

struct Adjoint {
    x: CubicElement,
    sharp_sharp: CubicElement,
    norm: ScalarPoly,
}

/// `x♯♯` and `N(x)` for a generic `x`, computed once.
fn adjoint() -> &'static Adjoint {
    static A: OnceLock<Adjoint> = OnceLock::new();
    A.get_or_init(|| {
        let ctx = Context::new(3, 3, 4).unwrap();
        let mut x = CubicElement::zero();
        for i in 0..3u16 {
            x.xi[i as usize] = ScalarPoly::t(i + 1);
            x.u[i as usize] = ConicElement::generator(i + 1);
        }
        let sharp_sharp = x.sharp(&ctx).unwrap().sharp(&ctx).unwrap();
        let norm = x.norm(&ctx).unwrap();
        Adjoint {
            x,
            sharp_sharp,
            norm,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `x♯♯ = N(x) x` holds for arbitrary structure constants.
    #[test]
    fn adjoint_identity_with_random_gamma(seed in any::<u64>()) {
        let a = adjoint();
        let v = Valuation::random(&mut ChaCha8Rng::seed_from_u64(seed), 3, 3, false);
        let n = v.scalar(&a.norm);
        for i in 0..3 {
            prop_assert_eq!(v.scalar(&a.sharp_sharp.xi[i]), &n * v.scalar(&a.x.xi[i]));
            prop_assert_eq!(v.conic(&a.sharp_sharp.u[i]), v.conic(&a.x.u[i]).scale(&n));
        }
    }
}

fn expr_source() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1u8..=3).prop_map(|i| format!("a{i}")),
        (1u8..=3).prop_map(|i| format!("t{i}")),
        (0u8..=9).prop_map(|n| n.to_string()),
        Just("g2".to_string()),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}+{b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})-({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*{b}")),
            inner.clone().prop_map(|a| format!("-({a})")),
            inner.clone().prop_map(|a| format!("conj({a})")),
            inner.clone().prop_map(|a| format!("({a})'")),
            inner.clone().prop_map(|a| format!("({a})^2")),
            (inner.clone(), inner).prop_map(|(a, b)| format!("tr({a}*{b})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn printing_round_trips(src in expr_source()) {
        let e = parse(&src).unwrap();
        let printed = e.to_string();
        let again = parse(&printed).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(again.to_string(), printed);
    }
}

fn lie_constant() -> impl Strategy<Value = (&'static str, [i64; 2])> {
    prop::sample::select(vec![
        ("x", [-2, -1]),
        ("y", [2, 1]),
        ("xi", [0, 0]),
        ("adPos(CubicEl(1,1,1))", [0, 1]),
        ("adNeg(CubicEl(1,1,1))", [0, -1]),
        ("BrownPos(1,CubicZero,CubicZero,0)", [1, -1]),
        ("BrownPos(0,CubicZero,CubicZero,1)", [1, 2]),
        ("BrownNeg(1,CubicZero,CubicZero,0)", [-1, -2]),
        ("BrownNeg(0,CubicEl(1,1,1),CubicZero,0)", [-1, -1]),
    ])
}

fn pattern(t: Tag, s: &str) -> String {
    let names: Vec<String> = (1..=t.params().len()).map(|k| format!("{s}{k}")).collect();
    format!("{t}({})", names.join(", "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// A record whose output lies in the wrong degree never passes grading.
    #[test]
    fn misgraded_records_are_rejected(
        a in prop::sample::select(Tag::all()),
        b in prop::sample::select(Tag::all()),
        (rhs, d) in lie_constant(),
    ) {
        let want = [a.degree()[0] + b.degree()[0], a.degree()[1] + b.degree()[1]];
        prop_assume!(d != want);
        let src = format!("[{}, {}] = {rhs}", pattern(a, "p"), pattern(b, "q"));
        let table = BracketTable::parse(&src).unwrap();
        let r = check_table(&table, &TwistTable::shipped()).unwrap();
        prop_assert!(matches!(r.grading, CheckStatus::Fail(_)), "{}", src);
    }
}

#[test]
fn shipped_tables_load() {
    let t = Tables::shipped();
    assert!(!t.bracket.is_complete());
    assert_eq!(t.twist.len(), 2);
}

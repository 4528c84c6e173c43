//! Suites over the scalar ring, the conic algebra, `Her3` and the root systems.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{eval_src, expect_render, expect_zero, Item, Outcome};
use crate::conic::ConicElement;
use crate::dsl::{Tables, Value};
use crate::error::{Error, Result};
use crate::jordan::{CubicElement, PeirceIndex};
use crate::oracle::{self, Block3, Mat2, Valuation, Q};
use crate::ring::word::all_words;
use crate::ring::{Context, ScalarPoly};
use crate::roots::{
    base_coordinates, root_base, roots_f4, roots_g2, slot_of, slot_table, RootF4, RootG2, Slot,
};

const VALUATIONS: u64 = 20;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Residue(msg())
    }
}

fn render_item(
    id: &str,
    dims: (usize, usize, usize),
    src: &'static str,
    want: &'static str,
    tables: &Arc<Tables>,
) -> Item {
    let tables = Arc::clone(tables);
    let inputs = format!("ctx{dims:?} {src}");
    Item::new(id, inputs, move || {
        let ctx = Context::new(dims.0, dims.1, dims.2)?;
        Ok(expect_render(eval_src(src, &ctx, &tables)?, want))
    })
}

pub fn transcripts(tables: &Arc<Tables>) -> Vec<Item> {
    let c1 = (1, 2, 3);
    let c6 = (6, 3, 4);
    let cases: [(&str, (usize, usize, usize), &'static str, &'static str); 18] = [
        ("conic-conj", c1, "conj(a1+a1*a2)", "(1)*a1'+(1)*(a2'*a1')"),
        ("conic-tr", c1, "tr(a1+a1*a2)", "tr(a1)+tr(a1a2)"),
        ("conic-norm-product", c1, "n(a1*a2)", "n(a1)*n(a2)"),
        ("conic-norm-sum", c1, "n(a1+a2)", "n(a1)+n(a2)+tr(a1a2')"),
        (
            "conic-raw",
            c1,
            "a1*a2+a1*conj(a2)-tr(a2)*a1",
            "(-tr(a2))*a1+(1)*(a1*a2)+(1)*(a1*a2')",
        ),
        (
            "conic-simplify",
            c1,
            "simplify(a1*a2+a1*conj(a2)-tr(a2)*a1)",
            "0_C",
        ),
        ("cubic-diagonal", c6, "CubicEl(t1, 2, 2)", "(t1)[22]"),
        ("cubic-reversed", c6, "CubicEl(a2, 2, 1)", "((1)*a2')[12]"),
        (
            "jordan-d-diagonal",
            c6,
            "D(CubicEl(t1, 2, 2), CubicEl(a2, 2, 1), CubicEl(a3, 1, 2))",
            "(g1*g2*t1*tr(a2a3))[22]",
        ),
        (
            "jordan-d-offdiagonal",
            c6,
            "D(CubicEl(a1, 2, 3), CubicEl(a2, 3, 1), CubicEl(a3, 1, 3))",
            "((g1*g3*tr(a2a3))*a1+(-g1*g3)*((a1*a3')*a2'))[23]",
        ),
        ("lie-scaled-x", c6, "t1*x", "(t1)*x"),
        (
            "lie-sum",
            c6,
            "xi+2*zeta+adPos(CubicEl(a1, 1, 2))",
            "ad^+_{((1)*a1)[12]}+xi+(2)*zeta",
        ),
        (
            "lie-dd",
            c6,
            "dd(CubicEl(a1, 1, 2), t1*CubicEl(a1, 1, 2))",
            "dd_{((1)*a1)[12],((t1)*a1)[12]}",
        ),
        (
            "lie-brown-neg",
            c6,
            "BrownNegEl(0, CubicZero, CubicEl(a1, 1, 2), t1+t2)",
            "[ 0, 0_J, ((1)*a1)[12], t1+t2 ]_-",
        ),
        (
            "lie-root-hom-short",
            c6,
            "LieRootHomF4([1, 0, 0, 1], a1)",
            "[ 0, 0_J, ((g1^-1)*a1)[12], 0 ]_+",
        ),
        (
            "lie-root-hom-long",
            c6,
            "LieRootHomF4([2, 0, 0, 0], t1)",
            "(-t1)*y",
        ),
        (
            "lie-raw-sum",
            c6,
            "(tr(a1^2)-tr(a1)^2+2*n(a1))*x+dd(CubicEl(a1, 1, 2), CubicEl(a2, 2, 3))",
            "(-tr(a1)^2+2*n(a1)+tr(a1a1))*x + dd_{((1)*a1)[12],((1)*a2)[23]}",
        ),
        (
            "lie-simplify",
            c6,
            "simplify((tr(a1^2)-tr(a1)^2+2*n(a1))*x+dd(CubicEl(a1, 1, 2), CubicEl(a2, 2, 3)))",
            "dd_{(1)[11],((g2)*(a2'*a1'))[31]}",
        ),
    ];
    let mut out: Vec<Item> = cases
        .iter()
        .map(|(id, dims, src, want)| render_item(id, *dims, src, want, tables))
        .collect();
    let t = Arc::clone(tables);
    out.push(Item::new(
        "trace-length-overflow",
        "ctx(1, 2, 3) tr(a1*a1*a2*a2)",
        move || {
            let ctx = Context::new(1, 2, 3)?;
            Ok(match eval_src("tr(a1*a1*a2*a2)", &ctx, &t) {
                Err(e) if matches!(e.root(), Error::TraceLengthOverflow { len: 4, max: 3 }) => {
                    Outcome::Pass
                }
                Err(e) => Outcome::Residue(format!("unexpected error {e}")),
                Ok(v) => Outcome::Residue(format!("expected trace-length-overflow, got {v}")),
            })
        },
    ));
    let t = Arc::clone(tables);
    out.push(Item::new(
        "trace-length-within-bound",
        "ctx(1, 2, 3) tr(a1*a1*a2)",
        move || {
            let ctx = Context::new(1, 2, 3)?;
            eval_src("tr(a1*a1*a2)", &ctx, &t)?;
            Ok(Outcome::Pass)
        },
    ));
    out
}

fn valuations(m1: usize, m2: usize, unit_gamma: bool, salt: u64) -> Vec<Valuation> {
    (0..VALUATIONS)
        .map(|k| {
            Valuation::random(
                &mut ChaCha8Rng::seed_from_u64(salt * 1000 + k),
                m1,
                m2,
                unit_gamma,
            )
        })
        .collect()
}

/// Symbolic identity `expr = 0` in ctx `(3, 3, 4)` after simplification.
fn symbolic_zero(id: &str, src: &'static str) -> Item {
    let tables = Tables::shipped();
    Item::new(id, src, move || {
        let ctx = Context::new(3, 3, 4)?;
        Ok(expect_zero(&eval_src(
            &format!("simplify({src})"),
            &ctx,
            &tables,
        )?))
    })
}

/// Conic identity `expr = 0` checked on random 2×2 matrices.
fn numeric_conic_zero(id: &str, src: &'static str, salt: u64) -> Item {
    let tables = Tables::shipped();
    Item::new(
        id,
        format!("{src} on {VALUATIONS} matrix valuations"),
        move || {
            let ctx = Context::new(3, 3, 4)?;
            let c = eval_src(src, &ctx, &tables)?.into_conic()?;
            for v in valuations(3, 3, false, salt) {
                let m = v.conic(&c);
                if m != Mat2::zero() {
                    return Ok(Outcome::Residue(format!("nonzero value {:?}", m.0)));
                }
            }
            Ok(Outcome::Pass)
        },
    )
}

pub fn identities() -> Vec<Item> {
    let mut out = vec![
        symbolic_zero("conj-additive", "conj(a1+a2)-conj(a1)-conj(a2)"),
        symbolic_zero("conj-involution", "conj(conj(a1*a2))-a1*a2"),
        symbolic_zero("conj-anti-multiplicative", "conj(a1*a2)-conj(a2)*conj(a1)"),
        symbolic_zero("conj-scalar", "conj(t1*a1)-t1*conj(a1)"),
        symbolic_zero("conj-trace", "a1+conj(a1)-tr(a1)"),
        symbolic_zero("tr-commutative", "tr(a1*a2)-tr(a2*a1)"),
        symbolic_zero("tr-associative", "tr((a1*a2)*a3)-tr(a1*(a2*a3))"),
        symbolic_zero("tr-conj", "tr(conj(a1*a2))-tr(a1*a2)"),
        symbolic_zero("norm-conj", "n(conj(a1))-n(a1)"),
        symbolic_zero("norm-unit-shift", "n(1+a1)-1-n(a1)-tr(a1)"),
        symbolic_zero("tr-square", "tr(a1*a1)-tr(a1)^2+2*n(a1)"),
        symbolic_zero(
            "tr-square-sum",
            "tr((a1+a2)*(a1+a2))-tr(a1+a2)^2+2*n(a1+a2)",
        ),
        numeric_conic_zero("kirmse-numeric", "a1*n(a2)-(a1*conj(a2))*a2", 1),
        numeric_conic_zero("norm-numeric", "a1*conj(a1)-n(a1)", 2),
        numeric_conic_zero(
            "kirmse-linearized-numeric",
            "a1*tr(a2*a3)-(a1*a2)*a3-(a1*conj(a3))*conj(a2)",
            3,
        ),
    ];
    let tables = Tables::shipped();
    out.push(Item::new(
        "kirmse-left-to-user",
        "simplify(a1*n(a2)-(a1*conj(a2))*a2)",
        move || {
            let ctx = Context::new(3, 3, 4)?;
            let v = eval_src("simplify(a1*n(a2)-(a1*conj(a2))*a2)", &ctx, &tables)?;
            Ok(check(!v.is_zero(), || {
                "Kirmse's identity was applied by simplify".into()
            }))
        },
    ));
    out.push(Item::new(
        "trace-canonical-sound",
        "all words of length <= 4 over a1, a2 and conjugates, 5 valuations",
        || {
            let ctx = Context::new(1, 2, 4)?;
            let vals: Vec<Valuation> = valuations(1, 2, false, 4).into_iter().take(5).collect();
            for len in 1..=4 {
                for w in all_words(&ctx.alphabet(), len) {
                    let sym = ctx.trace_of_word(&w)?;
                    let simp = ctx.simplify_scalar(&sym);
                    for v in &vals {
                        let want = v.word(&w).trace();
                        if v.scalar(&sym) != want || v.scalar(&simp) != want {
                            return Ok(Outcome::Residue(format!(
                                "tr({w}) rewritten to {sym}, simplified {simp}"
                            )));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        },
    ));
    out.push(Item::new(
        "trace-canonical-idempotent",
        "all words of length <= 3 over a1, a2 and conjugates",
        || {
            let ctx = Context::new(1, 2, 3)?;
            for len in 1..=3 {
                for w in all_words(&ctx.alphabet(), len) {
                    if let (_, Some(rep)) = ctx.canonical_trace_word(&w)? {
                        let (f, again) = ctx.canonical_trace_word(&rep)?;
                        if again.as_ref() != Some(&rep) || !f.is_one() {
                            return Ok(Outcome::Residue(format!(
                                "{w} -> {rep} -> {f} * {again:?}"
                            )));
                        }
                    }
                }
            }
            Ok(Outcome::Pass)
        },
    ));
    out
}

/// Generic element `Σ t_{k+i} e_i + [a_{k+1}]_23 + [a_{k+2}]_31 + [a_{k+3}]_12`.
fn generic(k: u16) -> CubicElement {
    let mut x = CubicElement::zero();
    for i in 0..3u16 {
        x.xi[i as usize] = ScalarPoly::t(k + i + 1);
        x.u[i as usize] = ConicElement::generator(k + i + 1);
    }
    x
}

type MatrixOp = fn(&Block3, &Block3, &Block3) -> Block3;
type SymbolicOp = fn(&CubicElement, &CubicElement, &CubicElement, &Context) -> Result<CubicElement>;

fn cubic_oracle_item(
    id: &'static str,
    desc: &'static str,
    sym: SymbolicOp,
    mat: MatrixOp,
    salt: u64,
) -> Item {
    Item::new(
        id,
        format!("{desc} on {VALUATIONS} valuations with unit gamma"),
        move || {
            let ctx = Context::new(9, 9, 4)?;
            let (x, y, z) = (generic(0), generic(3), generic(6));
            let s = sym(&x, &y, &z, &ctx)?;
            for v in valuations(9, 9, true, salt) {
                let got = v.cubic(&s);
                let want = mat(&v.cubic(&x), &v.cubic(&y), &v.cubic(&z));
                if got != want {
                    return Ok(Outcome::Residue(format!("mismatch for {desc}")));
                }
            }
            Ok(Outcome::Pass)
        },
    )
}

fn scalar_oracle_item(
    id: &'static str,
    desc: &'static str,
    sym: fn(&CubicElement, &CubicElement, &Context) -> Result<ScalarPoly>,
    mat: fn(&Block3, &Block3) -> Option<Q>,
    salt: u64,
) -> Item {
    Item::new(
        id,
        format!("{desc} on {VALUATIONS} valuations with unit gamma"),
        move || {
            let ctx = Context::new(9, 9, 4)?;
            let (x, y) = (generic(0), generic(3));
            let s = sym(&x, &y, &ctx)?;
            for v in valuations(9, 9, true, salt) {
                let got = v.scalar(&s);
                let want = mat(&v.cubic(&x), &v.cubic(&y));
                if want.as_ref() != Some(&got) {
                    return Ok(Outcome::Residue(format!(
                        "{desc}: symbolic {got}, matrix {want:?}"
                    )));
                }
            }
            Ok(Outcome::Pass)
        },
    )
}

pub fn jordan_oracle() -> Vec<Item> {
    vec![
        scalar_oracle_item(
            "norm",
            "N(x)",
            |x, _, c| x.norm(c),
            |x, _| oracle::matrix_norm(x),
            11,
        ),
        scalar_oracle_item(
            "bilinear-trace",
            "T(x, y)",
            |x, y, c| x.trace_t(y, c),
            |x, y| Some(oracle::matrix_bilinear_trace(x, y)),
            12,
        ),
        cubic_oracle_item(
            "sharp",
            "x#",
            |x, _, _, c| x.sharp(c),
            |x, _, _| oracle::matrix_sharp(x),
            13,
        ),
        cubic_oracle_item(
            "cross",
            "x × y",
            |x, y, _, c| x.cross(y, c),
            |x, y, _| oracle::matrix_cross(x, y),
            14,
        ),
        cubic_oracle_item(
            "u-operator",
            "U_x y",
            |x, y, _, c| x.u_op(y, c),
            |x, y, _| oracle::matrix_u(x, y),
            15,
        ),
        cubic_oracle_item(
            "triple-product",
            "{x y z}",
            CubicElement::triple_d,
            oracle::matrix_triple,
            16,
        ),
        Item::new(
            "sharp-sharp",
            "x## = N(x) x on 20 valuations with unit gamma",
            || {
                let ctx = Context::new(3, 3, 4)?;
                let x = generic(0);
                let ss = x.sharp(&ctx)?;
                for v in valuations(3, 3, true, 17) {
                    let m = v.cubic(&x);
                    let n = oracle::matrix_norm(&m).expect("norm is scalar");
                    if oracle::matrix_sharp(&v.cubic(&ss)) != m.scale(&n) {
                        return Ok(Outcome::Residue("x## != N(x) x".into()));
                    }
                }
                Ok(Outcome::Pass)
            },
        ),
    ]
}

fn peirce_entry(p: PeirceIndex, k: u16) -> CubicElement {
    if p.is_diagonal() {
        CubicElement::diagonal(p.i, ScalarPoly::t(k))
    } else {
        CubicElement::off_diagonal(p.i, p.j, ConicElement::generator(k))
    }
}

fn orientations(p: PeirceIndex) -> Vec<(u8, u8)> {
    if p.is_diagonal() {
        vec![(p.i, p.i)]
    } else {
        vec![(p.i, p.j), (p.j, p.i)]
    }
}

/// Components reachable by chaining `(p1 p2)(q1 q2)(r1 r2)` with `p2 = q1`, `q2 = r1`.
fn predicted(p: PeirceIndex, q: PeirceIndex, r: PeirceIndex) -> BTreeSet<PeirceIndex> {
    let mut out = BTreeSet::new();
    for (p1, p2) in orientations(p) {
        for (q1, q2) in orientations(q) {
            for (r1, r2) in orientations(r) {
                if p2 == q1 && q2 == r1 {
                    out.insert(PeirceIndex { i: p1, j: r2 }.normalized());
                }
            }
        }
    }
    out
}

pub fn peirce() -> Vec<Item> {
    let positions: Vec<PeirceIndex> = (0..6).map(PeirceIndex::from_slot).collect();
    let mut out = Vec::new();
    for &p in &positions {
        for &q in &positions {
            for &r in &positions {
                out.push(Item::new(
                    format!("D-{p}-{q}-{r}"),
                    format!("D(J{p}, J{q}, J{r})"),
                    move || {
                        let ctx = Context::new(3, 3, 4)?;
                        let d = CubicElement::triple_d(
                            &peirce_entry(p, 1),
                            &peirce_entry(q, 2),
                            &peirce_entry(r, 3),
                            &ctx,
                        )?;
                        let got = d.peirce_memberships(&ctx)?;
                        let want = predicted(p, q, r);
                        Ok(check(got.is_subset(&want), || {
                            format!("components {got:?} not within predicted {want:?}: {d}")
                        }))
                    },
                ));
            }
        }
    }
    out
}

pub fn linearization() -> Vec<Item> {
    let tables = Tables::shipped();
    let t2 = tables.clone();
    let t3 = tables.clone();
    let x = "(CubicEl(t1,1,1)+CubicEl(t2,2,2)+CubicEl(t3,3,3)+CubicEl(a1,2,3)+CubicEl(a2,3,1)+CubicEl(a3,1,2))";
    let y = "(CubicEl(t4,1,1)+CubicEl(t5,2,2)+CubicEl(t6,3,3)+CubicEl(a4,2,3)+CubicEl(a5,3,1)+CubicEl(a6,1,2))";
    let sharp = format!("simplify(sharp({x}+{y})-sharp({x})-sharp({y})-cross({x},{y}))");
    let cross = format!("simplify(cross({x},{y})-cross({y},{x}))");
    let trace = format!("simplify(T({x},{y})-T({y},{x}))");
    vec![
        Item::new(
            "sharp-linearizes-to-cross",
            "(x+y)# - x# - y# - x×y",
            move || {
                let ctx = Context::new(6, 6, 2)?;
                Ok(expect_zero(&eval_src(&sharp, &ctx, &tables)?))
            },
        ),
        Item::new("cross-symmetric", "x×y - y×x", move || {
            let ctx = Context::new(6, 6, 2)?;
            Ok(expect_zero(&eval_src(&cross, &ctx, &t2)?))
        }),
        Item::new("trace-symmetric", "T(x,y) - T(y,x)", move || {
            let ctx = Context::new(6, 6, 2)?;
            Ok(expect_zero(&eval_src(&trace, &ctx, &t3)?))
        }),
        Item::new(
            "u-linearizes-to-d",
            "U_{x+z} y - U_x y - U_z y - {x y z}",
            || {
                let ctx = Context::new(9, 9, 4)?;
                let (x, y, z) = (generic(0), generic(3), generic(6));
                let lhs = &(&(&x + &z).u_op(&y, &ctx)? - &x.u_op(&y, &ctx)?) - &z.u_op(&y, &ctx)?;
                let d = &lhs - &CubicElement::triple_d(&x, &y, &z, &ctx)?;
                Ok(expect_zero(&Value::Cubic(d.simplify(&ctx)?)))
            },
        ),
    ]
}

pub fn roots() -> Vec<Item> {
    fn item(id: &str, desc: &str, f: fn() -> Outcome) -> Item {
        Item::new(id, desc, move || Ok(f()))
    }
    vec![
        item("f4-count", "48 roots", || {
            let n = roots_f4().len();
            check(n == 48, || format!("{n} roots"))
        }),
        item("f4-layers", "layer sizes 1, 14, 18, 14, 1", || {
            let sizes: Vec<usize> = (-2..=2)
                .map(|p| {
                    roots_f4()
                        .iter()
                        .filter(|r| r.grading_component() == p)
                        .count()
                })
                .collect();
            check(sizes == [1, 14, 18, 14, 1], || format!("{sizes:?}"))
        }),
        item("f4-long-short", "24 long, 24 short", || {
            let long = roots_f4().iter().filter(|r| r.is_long()).count();
            check(long == 24, || format!("{long} long roots"))
        }),
        item("g2-count", "12 roots, 6 long", || {
            let g = roots_g2();
            let long = g.iter().filter(|r| r.is_long()).count();
            check(g.len() == 12 && long == 6, || {
                format!("{} roots, {long} long", g.len())
            })
        }),
        item(
            "fibers",
            "fiber of pi: 6 over short, 1 over long, 6 over zero",
            || {
                let f4 = roots_f4();
                let size = |g: RootG2| f4.iter().filter(|r| r.pi() == g).count();
                for g in roots_g2() {
                    let want = if g.is_short() { 6 } else { 1 };
                    if size(g) != want {
                        return Outcome::Residue(format!("fiber over {g} has {} roots", size(g)));
                    }
                }
                check(size(RootG2([0, 0])) == 6, || "zero fiber".into())
            },
        ),
        item(
            "long-fibers-long",
            "long G2 roots have long preimages",
            || {
                let bad: Vec<RootF4> = roots_f4()
                    .into_iter()
                    .filter(|r| r.pi().is_long() && !r.is_long())
                    .collect();
                check(bad.is_empty(), || format!("{bad:?}"))
            },
        ),
        item(
            "reflections",
            "reflections are involutions preserving F4",
            || {
                let f4 = roots_f4();
                for &a in &f4 {
                    for &b in &f4 {
                        let s = b.reflect(a);
                        if !s.is_root() || s.reflect(a) != b {
                            return Outcome::Residue(format!("s_{a}({b}) = {s}"));
                        }
                    }
                }
                Outcome::Pass
            },
        ),
        item("pi-negation", "pi(-a) = -pi(a)", || {
            let bad: Vec<RootF4> = roots_f4()
                .into_iter()
                .filter(|&r| (-r).pi() != RootG2(r.pi().0.map(|c| -c)))
                .collect();
            check(bad.is_empty(), || format!("{bad:?}"))
        }),
        item("slot-table", "36 placements, each over its box", || {
            let t = slot_table();
            let distinct: BTreeSet<RootF4> = t.iter().map(|(r, _, _)| *r).collect();
            let ok = t.len() == 36
                && distinct.len() == 36
                && t.iter().all(|(r, g, _)| r.is_root() && r.pi() == *g);
            check(ok, || {
                "slot table is not a bijection onto the short fibers".into()
            })
        }),
        item(
            "slot-anchors",
            "(1,-1,1,1) at [11], (1,0,-1,0) at [13], (1,0,0,1) at [12]",
            || {
                let got = [
                    slot_of(RootF4([1, -1, 1, 1])).ok(),
                    slot_of(RootF4([1, 0, -1, 0])).ok(),
                    slot_of(RootF4([1, 0, 0, 1])).ok(),
                ];
                let want = [
                    Some(Slot::Diagonal(1)),
                    Some(Slot::OffDiagonal(1, 3)),
                    Some(Slot::OffDiagonal(1, 2)),
                ];
                check(got == want, || format!("{got:?}"))
            },
        ),
        item(
            "diagonal-slots-long",
            "in each short fiber exactly the 3 long roots sit on the diagonal",
            || {
                for (r, _, s) in slot_table() {
                    if r.is_long() != matches!(s, Slot::Diagonal(_)) {
                        return Outcome::Residue(format!("{r} at {s:?}"));
                    }
                }
                Outcome::Pass
            },
        ),
        item(
            "root-base",
            "every root is a nonnegative or nonpositive integer combination",
            || {
                for r in roots_f4() {
                    let Some(c) = base_coordinates(r) else {
                        return Outcome::Residue(format!("{r} has no integral coordinates"));
                    };
                    if !(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0)) {
                        return Outcome::Residue(format!("{r} has mixed coordinates {c:?}"));
                    }
                }
                let simple: BTreeSet<RootF4> = root_base().into_iter().collect();
                check(
                    simple.len() == 4 && simple.iter().all(|r| r.is_root()),
                    || "bad base".into(),
                )
            },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_prediction() {
        let p = |i, j| PeirceIndex { i, j };
        assert_eq!(
            predicted(p(2, 2), p(1, 2), p(1, 2)),
            [p(2, 2)].into_iter().collect()
        );
        assert_eq!(predicted(p(1, 2), p(1, 2), p(3, 1)).len(), 1);
        assert!(predicted(p(1, 1), p(2, 2), p(3, 3)).is_empty());
    }
}

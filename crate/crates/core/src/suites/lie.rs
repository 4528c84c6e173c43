//! Suites over `L`: the `L00` relations, exponential anchors, commutators and Weyl elements.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{eval_src, expect_render, Item, Outcome};
use crate::conic::ConicElement;
use crate::dsl::{Env, Tables, Value};
use crate::endo::{render_residues, test_equality, weyl_element, Endomorphism};
use crate::error::Result;
use crate::jordan::{CubicElement, PeirceIndex};
use crate::lie::{LieElement, L00};
use crate::oracle::{matrix_triple, Block3, Valuation};
use crate::ring::{Context, ScalarPoly};
use crate::roots::{root_base, roots_f4, RootF4};

const FRESH: u16 = 3;

fn ctx() -> Result<Context> {
    Context::new(6, 3, 4)
}

fn render_item(id: &str, src: &'static str, want: &'static str, tables: &Arc<Tables>) -> Item {
    let tables = Arc::clone(tables);
    Item::new(id, src, move || {
        Ok(expect_render(eval_src(src, &ctx()?, &tables)?, want))
    })
}

fn lie_src(src: &str, ctx: &Context, tables: &Tables) -> Result<LieElement> {
    eval_src(src, ctx, tables)?.into_lie()
}

fn piece(p: PeirceIndex, k: u16) -> CubicElement {
    if p.is_diagonal() {
        CubicElement::diagonal(p.i, ScalarPoly::t(k))
    } else {
        CubicElement::off_diagonal(p.i, p.j, ConicElement::generator(k))
    }
}

/// `Σ coef · {c c' z}` in the matrix model.
fn dd_action(l: &L00, v: &Valuation, z: &Block3) -> Block3 {
    l.dd.iter()
        .fold(Block3::scalar(&BigRational::zero()), |acc, t| {
            let m = matrix_triple(&v.cubic(&t.c), &v.cubic(&t.cprime), z);
            acc.add(&m.scale(&v.scalar(&t.coef)))
        })
}

/// Simplification preserves the action of the `dd`-part on `J` (unit `Γ`).
fn action_item(p: PeirceIndex, q: PeirceIndex, same: bool) -> Item {
    let (kp, kq) = if same { (1, 1) } else { (1, 2) };
    let id = format!("action-{p}-{q}{}", if same { "-same" } else { "" });
    Item::new(
        id,
        format!("dd(J{p}, J{q}) acting on J, 5 valuations with unit gamma"),
        move || {
            let ctx = ctx()?;
            let before = L00::dd(ScalarPoly::one(), piece(p, kp), piece(q, kq));
            let after = before.simplify(&ctx)?;
            if !after.xi.is_zero() || !after.zeta.is_zero() {
                return Ok(Outcome::Residue(format!(
                    "unexpected xi/zeta part in {}",
                    after.render_parts().join("+")
                )));
            }
            for seed in 0..5 {
                let mut rng = ChaCha8Rng::seed_from_u64(500 + seed);
                let v = Valuation::random(&mut rng, 6, 3, true);
                let zv = Valuation::random(&mut rng, 6, 3, true);
                let z = zv.cubic(&generic());
                if dd_action(&before, &v, &z) != dd_action(&after, &v, &z) {
                    return Ok(Outcome::Residue(format!(
                        "action differs after simplify: {}",
                        after.render_parts().join("+")
                    )));
                }
            }
            Ok(Outcome::Pass)
        },
    )
}

fn generic() -> CubicElement {
    let mut x = CubicElement::zero();
    for i in 0..3u16 {
        x.xi[i as usize] = ScalarPoly::t(i + 1);
        x.u[i as usize] = ConicElement::generator(i + 1);
    }
    x
}

pub fn l00(tables: &Arc<Tables>) -> Vec<Item> {
    let mut out = vec![
        render_item(
            "golden",
            "simplify((tr(a1^2)-tr(a1)^2+2*n(a1))*x+dd(CubicEl(a1,1,2),CubicEl(a2,2,3)))",
            "dd_{(1)[11],((g2)*(a2'*a1'))[31]}",
            tables,
        ),
        render_item(
            "merge-equal-terms",
            "simplify(t1*dd(CubicEl(a1,1,2),CubicEl(1,1,1))+t2*dd(CubicEl(a1,1,2),CubicEl(1,1,1)))",
            "dd_{(1)[22],((t1+t2)*a1)[12]}",
            tables,
        ),
        render_item(
            "peirce-vanishing",
            "simplify(dd(CubicEl(a1,1,2),CubicEl(t1,3,3)))",
            "0_L",
            tables,
        ),
        render_item(
            "third-diagonal",
            "simplify(dd(CubicEl(1,3,3),CubicEl(1,3,3)))",
            "dd_{(1)[11],(-1)[11]}+dd_{(1)[22],(-1)[22]}+(-1)*xi+(2)*zeta",
            tables,
        ),
    ];
    let t = Arc::clone(tables);
    out.push(Item::new("conjugate-pair", "dd([a1]12,[a2]12)+dd([a2]12,[a1]12) vs its diagonal form", move || {
        let ctx = ctx()?;
        let lhs = lie_src("simplify(dd(CubicEl(a1,1,2),CubicEl(a2,1,2))+dd(CubicEl(a2,1,2),CubicEl(a1,1,2)))", &ctx, &t)?;
        let rhs = lie_src(
            "simplify(g1*g2*tr(a1*conj(a2))*(dd(CubicEl(1,1,1),CubicEl(1,1,1))+dd(CubicEl(1,2,2),CubicEl(1,2,2))))",
            &ctx,
            &t,
        )?;
        Ok(expect_render(lhs.sub(&rhs).simplify(&ctx)?, "0_L"))
    }));
    let t = Arc::clone(tables);
    out.push(Item::new(
        "idempotent",
        "simplify(simplify(l)) = simplify(l) on mixed sums",
        move || {
            let ctx = ctx()?;
            let srcs = [
                "dd(CubicEl(a1,2,1),CubicEl(t2,1,1))+dd(CubicEl(1,2,2),CubicEl(a3,3,2))",
                "dd(CubicEl(a2,3,1),CubicEl(a1,1,2))+t1*dd(CubicEl(1,3,3),CubicEl(1,3,3))",
                "dd(CubicEl(a1+a2,1,2),CubicEl(a1,1,2)+CubicEl(t1,2,2))+xi",
                "dd(CubicEl(a1*a2,2,3),CubicEl(a3,2,3))-dd(CubicEl(a3,2,3),CubicEl(a1*a2,2,3))",
            ];
            for src in srcs {
                let once = lie_src(src, &ctx, &t)?.simplify(&ctx)?;
                let twice = once.simplify(&ctx)?;
                if once != twice {
                    return Ok(Outcome::Residue(format!("{src}: {once} then {twice}")));
                }
            }
            Ok(Outcome::Pass)
        },
    ));
    let positions: Vec<PeirceIndex> = (0..6).map(PeirceIndex::from_slot).collect();
    for &p in &positions {
        for &q in &positions {
            if !(p.i == 3 && q.i == 3 && p.is_diagonal() && q.is_diagonal()) {
                out.push(action_item(p, q, false));
            }
        }
    }
    out.push(action_item(
        PeirceIndex { i: 1, j: 2 },
        PeirceIndex { i: 1, j: 2 },
        true,
    ));
    out
}

/// Every output scalar is a Laurent polynomial in `γ` with integral coefficients.
fn integral(l: &LieElement) -> bool {
    l.scalars().iter().all(ScalarPoly::is_gamma_integral)
        && l.scalars()
            .iter()
            .all(|s| s.terms().all(|(_, c)| c.is_integer()))
}

fn anchor_item(id: &str, src: &'static str, want: &'static str, tables: &Arc<Tables>) -> Item {
    let tables = Arc::clone(tables);
    Item::new(id, src, move || {
        let l = lie_src(src, &ctx()?, &tables)?;
        if !integral(&l) {
            return Ok(Outcome::Residue(format!("non-integral output {l}")));
        }
        Ok(expect_render(l, want))
    })
}

pub fn exp_anchors(tables: &Arc<Tables>) -> Vec<Item> {
    vec![
        anchor_item("bracket-x-y", "x*y", "xi", tables),
        anchor_item("bracket-y-x", "y*x", "(-1)*xi", tables),
        anchor_item("bracket-x-xi", "x*xi", "(2)*x", tables),
        anchor_item(
            "bracket-ad",
            "adPos(CubicEl(a1,1,2))*adNeg(CubicEl(a1,1,2))",
            "(-1)*dd_{((1)*a1)[12],((1)*a1)[12]}",
            tables,
        ),
        anchor_item(
            "exp-x-on-y",
            "apply(exp(x), y)",
            "(1)*x + xi + (1)*y",
            tables,
        ),
        anchor_item(
            "grp-root-hom-on-y",
            "apply(GrpRootHom([-2,0,0,0], 1), y)",
            "(1)*x + xi + (1)*y",
            tables,
        ),
        anchor_item(
            "exp-inverse-on-y",
            "apply(inverse(exp(x)), apply(exp(x), y))",
            "(1)*y",
            tables,
        ),
    ]
}

fn equality_item(
    id: &str,
    lhs: &'static str,
    rhs: &'static str,
    want: &'static str,
    tables: &Arc<Tables>,
) -> Item {
    let tables = Arc::clone(tables);
    Item::new(
        id,
        format!("TestEquality({lhs}, {rhs}) on S(a{FRESH})"),
        move || {
            let ctx = ctx()?;
            let env = Env::new(&ctx, &tables);
            let phi = eval_src(lhs, &ctx, &tables)?.into_endo()?;
            let psi = eval_src(rhs, &ctx, &tables)?.into_endo()?;
            Ok(expect_render(
                render_residues(&test_equality(&phi, &psi, FRESH, &env)?),
                want,
            ))
        },
    )
}

pub fn commutators(tables: &Arc<Tables>) -> Vec<Item> {
    let mut out = vec![
        equality_item(
            "d2-d3",
            "GrpRootHom([-2,0,0,0], -t1)*GrpRootHom([1,-1,0,0], -a1)*GrpRootHom([-2,0,0,0], t1)*GrpRootHom([1,-1,0,0], a1)",
            "GrpRootHom([-1,-1,0,0], -t1*a1)*GrpRootHom([0,-2,0,0], t1*n(a1))",
            "true",
            tables,
        ),
        equality_item(
            "d4-d3",
            "GrpRootHom([0,1,1,0], -a1)*GrpRootHom([1,-1,0,0], -a2)*GrpRootHom([0,1,1,0], a1)*GrpRootHom([1,-1,0,0], a2)",
            "GrpRootHom([1,0,1,0], ConicInv(a2)*ConicInv(a1))",
            "[ [ (1)*x, dd_{(1)[22],((-n(a2)/g3)*a1+(1/g3)*((a1*a2)*a2'))[12]} ] ]",
            tables,
        ),
        equality_item(
            "exp-additive",
            "GrpRootHom([1,0,0,1], a1+a2)",
            "GrpRootHom([1,0,0,1], a1)*GrpRootHom([1,0,0,1], a2)",
            "true",
            tables,
        ),
        equality_item(
            "exp-inverse",
            "GrpRootHom([1,0,0,1], a1)*GrpRootHom([1,0,0,1], -a1)",
            "id",
            "true",
            tables,
        ),
    ];
    let t = Arc::clone(tables);
    out.push(Item::new(
        "composition-law",
        "psi(phi(y)) = (psi*phi)(y)",
        move || {
            let ctx = ctx()?;
            let env = Env::new(&ctx, &t);
            let phi = eval_src("GrpRootHom([-2,0,0,0], 1)", &ctx, &t)?.into_endo()?;
            let psi = eval_src("GrpRootHom([1,0,0,1], a1)", &ctx, &t)?.into_endo()?;
            let y = LieElement::y();
            let lhs = psi.apply(&phi.apply(&y, &env)?, &env)?;
            let rhs = psi.compose(&phi).apply(&y, &env)?;
            Ok(expect_render(lhs.sub(&rhs).simplify(&ctx)?, "0_L"))
        },
    ));
    out
}

fn rational(n: i64) -> ScalarPoly {
    ScalarPoly::from_rational(BigRational::from_integer(BigInt::from(n)))
}

/// `w_δ⁻¹ x_γ(p) w_δ` against `x_{σ_δ(γ)}(q)` for the sign and conjugation variants `q` of `p`.
fn weyl_item(delta: RootF4, gamma: RootF4, tables: &Arc<Tables>) -> Item {
    let tables = Arc::clone(tables);
    Item::new(
        format!("w{delta}-x{gamma}"),
        format!("w_{delta}^-1 x_{gamma} w_{delta}"),
        move || {
            let ctx = ctx()?;
            let env = Env::new(&ctx, &tables);
            let (payload, candidates) = if gamma.is_long() {
                let t = ScalarPoly::t(1);
                (
                    Value::Scalar(t.clone()),
                    vec![Value::Scalar(t.clone()), Value::Scalar(&t * &rational(-1))],
                )
            } else {
                let a = ConicElement::generator(1);
                let m = |c: &ConicElement| Value::Conic(-c);
                (
                    Value::Conic(a.clone()),
                    vec![
                        Value::Conic(a.clone()),
                        m(&a),
                        Value::Conic(a.conj()),
                        m(&a.conj()),
                    ],
                )
            };
            let w = weyl_element(delta, &env)?;
            let x = Endomorphism::grp_root_hom(gamma, payload, &env)?;
            let conj = w.inverse().compose(&x).compose(&w);
            let target = gamma.reflect(delta);
            let mut last = String::new();
            for q in candidates {
                let cand = Endomorphism::grp_root_hom(target, q, &env)?;
                let res = test_equality(&conj, &cand, FRESH, &env)?;
                if res.is_empty() {
                    return Ok(Outcome::Pass);
                }
                last = render_residues(&res);
            }
            Ok(Outcome::Residue(format!(
                "no candidate x_{target}(±p) matches; last residue {last}"
            )))
        },
    )
}

pub fn weyl(tables: &Arc<Tables>) -> Vec<Item> {
    let mut out = Vec::with_capacity(192);
    for delta in root_base() {
        for gamma in roots_f4() {
            out.push(weyl_item(delta, gamma, tables));
        }
    }
    out
}

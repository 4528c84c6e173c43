//! Kind checking and evaluation of expressions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::ast::{Expr, ExprKind};
use super::value::{mismatch, Kind, Value};
use crate::conic::ConicElement;
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::jordan::{CubicElement, Entry};
use crate::lie::{self, BracketTable, Brown, LieElement, TwistTable};
use crate::ring::{Context, ScalarPoly};

/// Bracket and twist data in effect for an evaluation.
#[derive(Clone, Debug)]
pub struct Tables {
    pub bracket: BracketTable,
    pub twist: TwistTable,
}

impl Tables {
    pub fn shipped() -> Tables {
        Tables {
            bracket: BracketTable::shipped(),
            twist: TwistTable::shipped(),
        }
    }
}

pub struct Env<'a> {
    pub ctx: &'a Context,
    pub tables: &'a Tables,
    pub vars: HashMap<String, Value>,
}

impl<'a> Env<'a> {
    pub fn new(ctx: &'a Context, tables: &'a Tables) -> Env<'a> {
        Env {
            ctx,
            tables,
            vars: HashMap::new(),
        }
    }

    pub fn var_kinds(&self) -> HashMap<String, Kind> {
        self.vars
            .iter()
            .map(|(k, v)| (k.clone(), v.kind()))
            .collect()
    }

    /// Kind-check then evaluate.
    pub fn run(&self, e: &Expr) -> Result<Value> {
        infer(e, &self.var_kinds())?;
        eval(e, self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Arg {
    K(Kind),
    Int,
    Payload,
}

fn signature(name: &str) -> Option<(Vec<Arg>, Option<Kind>)> {
    use Arg::*;
    use Kind::*;
    let sig = match name {
        "conj" | "ConicConj" | "ConicInv" => (vec![K(Conic)], Some(Conic)),
        "tr" | "ConicTr" => (vec![K(Conic)], Some(Scalar)),
        "n" | "ConicNorm" => (vec![K(Conic)], Some(Scalar)),
        "CubicEl" => (vec![Payload, Int, Int], Some(Cubic)),
        "CubicZero" => (vec![], Some(Cubic)),
        "N" | "CubicNorm" => (vec![K(Cubic)], Some(Scalar)),
        "sharp" | "CubicAdj" => (vec![K(Cubic)], Some(Cubic)),
        "cross" | "CubicCross" => (vec![K(Cubic), K(Cubic)], Some(Cubic)),
        "T" | "CubicBiTr" => (vec![K(Cubic), K(Cubic)], Some(Scalar)),
        "U" | "JordanU" => (vec![K(Cubic), K(Cubic)], Some(Cubic)),
        "D" | "JordanD" => (vec![K(Cubic), K(Cubic), K(Cubic)], Some(Cubic)),
        "dd" => (vec![K(Cubic), K(Cubic)], Some(Lie)),
        "adPos" | "CubicPosToLieEmb" => (vec![K(Cubic)], Some(Lie)),
        "adNeg" | "CubicNegToLieEmb" => (vec![K(Cubic)], Some(Lie)),
        "BrownPos" | "BrownPosEl" | "BrownNeg" | "BrownNegEl" => {
            (vec![K(Scalar), K(Cubic), K(Cubic), K(Scalar)], Some(Lie))
        }
        "LieRootHom" | "LieRootHomF4" => (vec![K(Root), Payload], Some(Lie)),
        "GrpRootHom" | "GrpRootHomF4" => (vec![K(Root), Payload], Some(Endo)),
        "exp" => (vec![K(Lie)], Some(Endo)),
        "inverse" => (vec![K(Endo)], Some(Endo)),
        "apply" => (vec![K(Endo), K(Lie)], Some(Lie)),
        "bracket" => (vec![K(Lie), K(Lie)], Some(Lie)),
        "simplify" | "Simplify" => (vec![], None),
        _ => return None,
    };
    Some(sig)
}

fn ident_kind(name: &str) -> Option<Kind> {
    match name {
        "x" | "LieX" | "y" | "LieY" | "xi" | "LieXi" | "zeta" | "LieZeta" => Some(Kind::Lie),
        "id" => Some(Kind::Endo),
        "CubicZero" => Some(Kind::Cubic),
        "g1" | "g2" | "g3" => Some(Kind::Scalar),
        _ => {
            let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
            if let Some(rest) = name.strip_prefix('t') {
                digits(rest).then_some(Kind::Scalar)
            } else if let Some(rest) = name.strip_prefix('a') {
                digits(rest).then_some(Kind::Conic)
            } else {
                None
            }
        }
    }
}

fn accepts(expected: Kind, found: Kind) -> bool {
    expected == found || (expected == Kind::Conic && found == Kind::Scalar)
}

fn positioned<T>(e: &Expr, r: Result<T>) -> Result<T> {
    r.map_err(|err| err.at(e.span.line, e.span.column))
}

/// Static kind of an expression.
pub fn infer(e: &Expr, vars: &HashMap<String, Kind>) -> Result<Kind> {
    positioned(e, infer_inner(e, vars))
}

fn infer_inner(e: &Expr, vars: &HashMap<String, Kind>) -> Result<Kind> {
    use Kind::*;
    match &e.kind {
        ExprKind::Int(_) => Ok(Scalar),
        ExprKind::Vector(_) => Ok(Root),
        ExprKind::Ident(name) => vars
            .get(name)
            .copied()
            .or_else(|| ident_kind(name))
            .ok_or_else(|| Error::Kind(format!("unknown identifier '{name}'"))),
        ExprKind::Neg(x) => {
            let k = infer(x, vars)?;
            if k == Endo {
                return Err(Error::Kind("cannot negate an endomorphism".into()));
            }
            Ok(k)
        }
        ExprKind::Add(l, r) | ExprKind::Sub(l, r) => {
            let (a, b) = (infer(l, vars)?, infer(r, vars)?);
            match (a, b) {
                (Scalar, Scalar) => Ok(Scalar),
                (Scalar | Conic, Scalar | Conic) => Ok(Conic),
                (x, y) if x == y && x != Endo => Ok(x),
                _ => Err(Error::Kind(format!("cannot add {a} and {b}"))),
            }
        }
        ExprKind::Mul(l, r) => {
            let (a, b) = (infer(l, vars)?, infer(r, vars)?);
            match (a, b) {
                (Scalar, Scalar) => Ok(Scalar),
                (Scalar | Conic, Scalar | Conic) => Ok(Conic),
                (Scalar, Cubic) | (Cubic, Scalar) => Ok(Cubic),
                (Scalar, Lie) | (Lie, Scalar) | (Lie, Lie) => Ok(Lie),
                (Endo, Endo) => Ok(Endo),
                (Scalar, Root) | (Root, Scalar) => Ok(Root),
                _ => Err(Error::Kind(format!("cannot multiply {a} by {b}"))),
            }
        }
        ExprKind::Div(l, r) => {
            let (a, b) = (infer(l, vars)?, infer(r, vars)?);
            if b != Scalar || matches!(a, Endo | Root) {
                return Err(Error::Kind(format!("cannot divide {a} by {b}")));
            }
            Ok(a)
        }
        ExprKind::Pow(b, _) => match infer(b, vars)? {
            k @ (Scalar | Conic) => Ok(k),
            k => Err(Error::Kind(format!("cannot raise {k} to a power"))),
        },
        ExprKind::Conj(x) => match infer(x, vars)? {
            Scalar | Conic => Ok(Conic),
            k => Err(Error::Kind(format!("cannot conjugate {k}"))),
        },
        ExprKind::Call(name, args) => {
            let (params, ret) =
                signature(name).ok_or_else(|| Error::Kind(format!("unknown function '{name}'")))?;
            if name == "simplify" || name == "Simplify" {
                if args.len() != 1 {
                    return Err(Error::Kind(format!(
                        "{name} takes 1 argument, got {}",
                        args.len()
                    )));
                }
                return match infer(&args[0], vars)? {
                    k @ (Scalar | Conic | Cubic | Lie) => Ok(k),
                    k => Err(Error::Kind(format!("cannot simplify {k}"))),
                };
            }
            if args.len() != params.len() {
                return Err(Error::Kind(format!(
                    "{name} takes {} argument(s), got {}",
                    params.len(),
                    args.len()
                )));
            }
            for (a, p) in args.iter().zip(params.iter()) {
                let k = infer(a, vars)?;
                let ok = match p {
                    Arg::K(want) => accepts(*want, k),
                    Arg::Int => matches!(a.kind, ExprKind::Int(_)),
                    Arg::Payload => matches!(k, Scalar | Conic),
                };
                if !ok {
                    let want = match p {
                        Arg::K(w) => w.to_string(),
                        Arg::Int => "integer literal".into(),
                        Arg::Payload => "scalar or conic".into(),
                    };
                    return Err(Error::Kind(format!("{name}: expected {want}, found {k}"))
                        .at(a.span.line, a.span.column));
                }
            }
            Ok(ret.expect("fixed return kind"))
        }
    }
}

pub fn eval(e: &Expr, env: &Env) -> Result<Value> {
    positioned(e, eval_inner(e, env))
}

fn int_value(n: &BigInt) -> ScalarPoly {
    ScalarPoly::from_rational(BigRational::from_integer(n.clone()))
}

fn eval_ident(name: &str, env: &Env) -> Result<Value> {
    if let Some(v) = env.vars.get(name) {
        return Ok(v.clone());
    }
    Ok(match name {
        "x" | "LieX" => Value::Lie(LieElement::x()),
        "y" | "LieY" => Value::Lie(LieElement::y()),
        "xi" | "LieXi" => Value::Lie(LieElement::xi()),
        "zeta" | "LieZeta" => Value::Lie(LieElement::zeta()),
        "id" => Value::Endo(Endomorphism::identity()),
        "CubicZero" => Value::Cubic(CubicElement::zero()),
        "g1" => Value::Scalar(ScalarPoly::gamma(1)),
        "g2" => Value::Scalar(ScalarPoly::gamma(2)),
        "g3" => Value::Scalar(ScalarPoly::gamma(3)),
        _ => {
            let parse_index = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::Kind(format!("unknown identifier '{name}'")))
            };
            if let Some(rest) = name.strip_prefix('t') {
                let i = parse_index(rest)?;
                env.ctx.check_scalar(i)?;
                Value::Scalar(ScalarPoly::t(i as u16))
            } else if let Some(rest) = name.strip_prefix('a') {
                let i = parse_index(rest)?;
                env.ctx.check_generator(i)?;
                Value::Conic(ConicElement::generator(i as u16))
            } else {
                return Err(Error::Kind(format!("unknown identifier '{name}'")));
            }
        }
    })
}

fn add_values(a: Value, b: Value) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y),
        (a @ (Value::Scalar(_) | Value::Conic(_)), b @ (Value::Scalar(_) | Value::Conic(_))) => {
            Value::Conic(&a.into_conic()? + &b.into_conic()?)
        }
        (Value::Cubic(x), Value::Cubic(y)) => Value::Cubic(&x + &y),
        (Value::Lie(x), Value::Lie(y)) => Value::Lie(x.add(&y)),
        (Value::Root(x), Value::Root(y)) if x.len() == y.len() => {
            Value::Root(x.iter().zip(y.iter()).map(|(p, q)| p + q).collect())
        }
        (a, b) => {
            return Err(Error::Kind(format!(
                "cannot add {} and {}",
                a.kind(),
                b.kind()
            )))
        }
    })
}

fn scale_value(v: Value, s: &ScalarPoly) -> Result<Value> {
    Ok(match v {
        Value::Scalar(x) => Value::Scalar(&x * s),
        Value::Conic(x) => Value::Conic(x.scale(s)),
        Value::Cubic(x) => Value::Cubic(x.scale(s)),
        Value::Lie(x) => Value::Lie(x.scale(s)),
        Value::Root(x) => {
            let k = s
                .as_constant()
                .filter(|c| c.is_integer())
                .and_then(|c| c.to_integer().to_i64())
                .ok_or_else(|| Error::Kind("root vectors can only be scaled by integers".into()))?;
            Value::Root(x.iter().map(|c| c * k).collect())
        }
        Value::Endo(_) => return Err(Error::Kind("cannot scale an endomorphism".into())),
    })
}

fn neg_value(v: Value) -> Result<Value> {
    scale_value(v, &ScalarPoly::from_int(-1))
}

fn mul_values(a: Value, b: Value, env: &Env) -> Result<Value> {
    Ok(match (a, b) {
        (Value::Scalar(s), v) | (v, Value::Scalar(s)) if !matches!(v, Value::Conic(_)) => {
            scale_value(v, &s)?
        }
        (a @ (Value::Scalar(_) | Value::Conic(_)), b @ (Value::Scalar(_) | Value::Conic(_))) => {
            Value::Conic(a.into_conic()?.mul(&b.into_conic()?))
        }
        (Value::Lie(x), Value::Lie(y)) => Value::Lie(lie::bracket::bracket(&x, &y, env)?),
        (Value::Endo(x), Value::Endo(y)) => Value::Endo(x.compose(&y)),
        (a, b) => {
            return Err(Error::Kind(format!(
                "cannot multiply {} by {}",
                a.kind(),
                b.kind()
            )))
        }
    })
}

fn small_int(e: &Expr) -> Result<u8> {
    match &e.kind {
        ExprKind::Int(n) => {
            n.to_u8()
                .filter(|v| (1..=3).contains(v))
                .ok_or_else(|| Error::IndexOutOfBounds {
                    what: "Peirce index ",
                    index: n.to_usize().unwrap_or(usize::MAX),
                    max: 3,
                })
        }
        _ => Err(Error::Kind("expected an integer literal".into())),
    }
}

fn eval_inner(e: &Expr, env: &Env) -> Result<Value> {
    let ctx = env.ctx;
    match &e.kind {
        ExprKind::Int(n) => Ok(Value::Scalar(int_value(n))),
        ExprKind::Vector(v) => Ok(Value::Root(v.clone())),
        ExprKind::Ident(name) => eval_ident(name, env),
        ExprKind::Neg(x) => neg_value(eval(x, env)?),
        ExprKind::Add(l, r) => add_values(eval(l, env)?, eval(r, env)?),
        ExprKind::Sub(l, r) => add_values(eval(l, env)?, neg_value(eval(r, env)?)?),
        ExprKind::Mul(l, r) => mul_values(eval(l, env)?, eval(r, env)?, env),
        ExprKind::Div(l, r) => {
            let d = eval(r, env)?.into_scalar()?;
            let inv = d
                .inverse()
                .ok_or_else(|| Error::NotInvertible(d.to_string()))?;
            scale_value(eval(l, env)?, &inv)
        }
        ExprKind::Pow(b, k) => match eval(b, env)? {
            Value::Scalar(s) => s
                .pow_signed(*k)
                .map(Value::Scalar)
                .ok_or_else(|| Error::NotInvertible(s.to_string())),
            Value::Conic(c) => {
                if *k < 1 {
                    return Err(Error::Kind("conic powers need a positive exponent".into()));
                }
                let mut acc = c.clone();
                for _ in 1..*k {
                    acc = acc.mul(&c);
                }
                Ok(Value::Conic(acc))
            }
            v => Err(Error::Kind(format!("cannot raise {} to a power", v.kind()))),
        },
        ExprKind::Conj(x) => Ok(Value::Conic(eval(x, env)?.into_conic()?.conj())),
        ExprKind::Call(name, args) => {
            let vals = || -> Result<Vec<Value>> { args.iter().map(|a| eval(a, env)).collect() };
            match name.as_str() {
                "CubicEl" => {
                    let v = eval(&args[0], env)?;
                    let entry = match v {
                        Value::Scalar(s) => Entry::Scalar(s),
                        Value::Conic(c) => Entry::Conic(c),
                        v => return Err(mismatch(Kind::Conic, v.kind())),
                    };
                    let i = small_int(&args[1])
                        .map_err(|er| er.at(args[1].span.line, args[1].span.column))?;
                    let j = small_int(&args[2])
                        .map_err(|er| er.at(args[2].span.line, args[2].span.column))?;
                    Ok(Value::Cubic(CubicElement::cubic_el(entry, i, j)?))
                }
                "simplify" | "Simplify" => Ok(match eval(&args[0], env)? {
                    Value::Scalar(s) => Value::Scalar(ctx.simplify_scalar(&s)),
                    Value::Conic(c) => Value::Conic(c.simplify(ctx)?),
                    Value::Cubic(c) => Value::Cubic(c.simplify(ctx)?),
                    Value::Lie(l) => Value::Lie(l.simplify(ctx)?),
                    v => return Err(Error::Kind(format!("cannot simplify {}", v.kind()))),
                }),
                _ => {
                    let mut v = vals()?.into_iter();
                    let mut next = || v.next().expect("arity checked");
                    call(name, &mut next, env)
                }
            }
        }
    }
}

fn call(name: &str, next: &mut dyn FnMut() -> Value, env: &Env) -> Result<Value> {
    let ctx = env.ctx;
    Ok(match name {
        "conj" | "ConicConj" | "ConicInv" => Value::Conic(next().into_conic()?.conj()),
        "tr" | "ConicTr" => Value::Scalar(next().into_conic()?.trace(ctx)?),
        "n" | "ConicNorm" => Value::Scalar(next().into_conic()?.norm(ctx)?),
        "CubicZero" => Value::Cubic(CubicElement::zero()),
        "N" | "CubicNorm" => Value::Scalar(next().into_cubic()?.norm(ctx)?),
        "sharp" | "CubicAdj" => Value::Cubic(next().into_cubic()?.sharp(ctx)?),
        "cross" | "CubicCross" => {
            let (a, b) = (next().into_cubic()?, next().into_cubic()?);
            Value::Cubic(a.cross(&b, ctx)?)
        }
        "T" | "CubicBiTr" => {
            let (a, b) = (next().into_cubic()?, next().into_cubic()?);
            Value::Scalar(a.trace_t(&b, ctx)?)
        }
        "U" | "JordanU" => {
            let (a, b) = (next().into_cubic()?, next().into_cubic()?);
            Value::Cubic(a.u_op(&b, ctx)?)
        }
        "D" | "JordanD" => {
            let (a, b, c) = (
                next().into_cubic()?,
                next().into_cubic()?,
                next().into_cubic()?,
            );
            Value::Cubic(CubicElement::triple_d(&a, &b, &c, ctx)?)
        }
        "dd" => {
            let (a, b) = (next().into_cubic()?, next().into_cubic()?);
            Value::Lie(LieElement::dd(a, b))
        }
        "adPos" | "CubicPosToLieEmb" => Value::Lie(LieElement::ad_pos(next().into_cubic()?)),
        "adNeg" | "CubicNegToLieEmb" => Value::Lie(LieElement::ad_neg(next().into_cubic()?)),
        "BrownPos" | "BrownPosEl" | "BrownNeg" | "BrownNegEl" => {
            let b = Brown::new(
                next().into_scalar()?,
                next().into_cubic()?,
                next().into_cubic()?,
                next().into_scalar()?,
            );
            Value::Lie(if name.starts_with("BrownPos") {
                LieElement::brown_pos(b)
            } else {
                LieElement::brown_neg(b)
            })
        }
        "LieRootHom" | "LieRootHomF4" => {
            let alpha = next().into_root()?;
            Value::Lie(lie::lie_root_hom(alpha, next(), &env.tables.twist)?)
        }
        "GrpRootHom" | "GrpRootHomF4" => {
            let alpha = next().into_root()?;
            Value::Endo(Endomorphism::grp_root_hom(alpha, next(), env)?)
        }
        "exp" => Value::Endo(Endomorphism::exp(&next().into_lie()?, ctx)?),
        "inverse" => Value::Endo(next().into_endo()?.inverse()),
        "apply" => {
            let f = next().into_endo()?;
            Value::Lie(f.apply(&next().into_lie()?, env)?)
        }
        "bracket" => {
            let (a, b) = (next().into_lie()?, next().into_lie()?);
            Value::Lie(lie::bracket::bracket(&a, &b, env)?)
        }
        other => return Err(Error::Kind(format!("unknown function '{other}'"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;

    fn run(src: &str, ctx: &Context) -> Result<Value> {
        let tables = Tables::shipped();
        let env = Env::new(ctx, &tables);
        env.run(&parse(src)?)
    }

    #[test]
    fn conic_transcript() {
        let ctx = Context::new(1, 2, 3).unwrap();
        let v = run("a1*a2+a1*conj(a2)-tr(a2)*a1", &ctx).unwrap();
        assert_eq!(v.kind(), Kind::Conic);
        assert_eq!(
            run("simplify(a1*a2+a1*conj(a2)-tr(a2)*a1)", &ctx)
                .unwrap()
                .to_string(),
            "0_C"
        );
    }

    #[test]
    fn cubic_and_bounds() {
        let ctx = Context::new(6, 3, 4).unwrap();
        assert_eq!(
            run("CubicEl(a2, 2, 1)", &ctx).unwrap().to_string(),
            "((1)*a2')[12]"
        );
        let err = run("a9", &ctx).unwrap_err();
        assert!(matches!(
            err.root(),
            Error::IndexOutOfBounds {
                index: 9,
                max: 3,
                ..
            }
        ));
    }

    #[test]
    fn kind_errors_are_static() {
        let ctx = Context::new(1, 2, 3).unwrap();
        let err = run("tr(x)", &ctx).unwrap_err();
        assert!(
            matches!(err, Error::Positioned { column: 4, .. }),
            "{err:?}"
        );
        assert!(matches!(err.root(), Error::Kind(_)));
    }

    #[test]
    fn division_by_gamma_and_rationals() {
        let ctx = Context::new(2, 2, 3).unwrap();
        assert_eq!(run("t1/g3", &ctx).unwrap().to_string(), "g3^-1*t1");
        assert_eq!(run("1/2*t1", &ctx).unwrap().to_string(), "1/2*t1");
        assert!(run("t1/t2", &ctx).is_err());
    }
}

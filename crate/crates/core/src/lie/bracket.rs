//! Table-driven Lie bracket.
//!
//! A table file has one record per line:
//!
//! ```text
//! [X(s), Y(t)] = s*t*xi
//! [AdPlus(c), AdMinus(d)] = -dd(c, d)
//! [X(s), X(t)] = 0
//! ```
//!
//! The right-hand side is an expression of kind `lie` (or the literal `0`) in
//! the formal parameters. A pair without a record is looked up in swapped
//! order and negated; if neither is present the bracket fails.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Brown, LieElement, L00};
use crate::conic::ConicElement;
use crate::dsl::ast::{Expr, ExprKind};
use crate::dsl::eval::{infer, Env, Tables};
use crate::dsl::lexer::Tok;
use crate::dsl::parser::Parser;
use crate::dsl::value::{Kind, Value};
use crate::error::{Error, Result};
use crate::jordan::CubicElement;
use crate::ring::{Context, ScalarPoly};
use crate::roots::roots_g2;

/// Atomic components of `L`. Brown slots are numbered 1..4 as `(λ, c, c', μ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    X,
    BrownMinus(u8),
    AdMinus,
    Xi,
    Zeta,
    Dd,
    AdPlus,
    BrownPlus(u8),
    Y,
}

impl Tag {
    pub fn all() -> Vec<Tag> {
        let mut out = vec![Tag::X];
        out.extend((1..=4).map(Tag::BrownMinus));
        out.extend([Tag::AdMinus, Tag::Xi, Tag::Zeta, Tag::Dd, Tag::AdPlus]);
        out.extend((1..=4).map(Tag::BrownPlus));
        out.push(Tag::Y);
        out
    }

    pub fn parse(name: &str) -> Option<Tag> {
        Some(match name {
            "X" => Tag::X,
            "Y" => Tag::Y,
            "Xi" => Tag::Xi,
            "Zeta" => Tag::Zeta,
            "Dd" => Tag::Dd,
            "AdPlus" => Tag::AdPlus,
            "AdMinus" => Tag::AdMinus,
            _ => {
                let (ctor, rest): (fn(u8) -> Tag, &str) =
                    if let Some(r) = name.strip_prefix("BrownMinus") {
                        (Tag::BrownMinus, r)
                    } else {
                        (Tag::BrownPlus, name.strip_prefix("BrownPlus")?)
                    };
                let k: u8 = rest.parse().ok()?;
                if !(1..=4).contains(&k) {
                    return None;
                }
                ctor(k)
            }
        })
    }

    /// Degree in the G2-grading.
    pub fn degree(self) -> [i64; 2] {
        match self {
            Tag::X => [-2, -1],
            Tag::Y => [2, 1],
            Tag::Xi | Tag::Zeta | Tag::Dd => [0, 0],
            Tag::AdPlus => [0, 1],
            Tag::AdMinus => [0, -1],
            Tag::BrownMinus(k) => [-1, k as i64 - 3],
            Tag::BrownPlus(k) => [1, k as i64 - 2],
        }
    }

    /// Kinds of the formal parameters.
    pub fn params(self) -> &'static [Kind] {
        match self {
            Tag::Dd => &[Kind::Cubic, Kind::Cubic],
            Tag::AdPlus | Tag::AdMinus | Tag::BrownMinus(2 | 3) | Tag::BrownPlus(2 | 3) => {
                &[Kind::Cubic]
            }
            _ => &[Kind::Scalar],
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::X => f.write_str("X"),
            Tag::Y => f.write_str("Y"),
            Tag::Xi => f.write_str("Xi"),
            Tag::Zeta => f.write_str("Zeta"),
            Tag::Dd => f.write_str("Dd"),
            Tag::AdPlus => f.write_str("AdPlus"),
            Tag::AdMinus => f.write_str("AdMinus"),
            Tag::BrownMinus(k) => write!(f, "BrownMinus{k}"),
            Tag::BrownPlus(k) => write!(f, "BrownPlus{k}"),
        }
    }
}

/// A single-component summand with its payload values.
#[derive(Clone, Debug)]
pub struct Atom {
    pub tag: Tag,
    pub args: Vec<Value>,
}

impl Atom {
    pub fn to_lie(&self) -> LieElement {
        let s = |k: usize| match &self.args[k] {
            Value::Scalar(s) => s.clone(),
            _ => unreachable!("scalar parameter"),
        };
        let c = |k: usize| match &self.args[k] {
            Value::Cubic(c) => c.clone(),
            _ => unreachable!("cubic parameter"),
        };
        let mut out = LieElement::zero();
        match self.tag {
            Tag::X => out.x = s(0),
            Tag::Y => out.y = s(0),
            Tag::Xi => out.l00.xi = s(0),
            Tag::Zeta => out.l00.zeta = s(0),
            Tag::Dd => out.l00 = L00::dd(ScalarPoly::one(), c(0), c(1)),
            Tag::AdPlus => out.ad_plus = c(0),
            Tag::AdMinus => out.ad_minus = c(0),
            Tag::BrownMinus(k) | Tag::BrownPlus(k) => {
                let b = brown_slot(k, self);
                if matches!(self.tag, Tag::BrownMinus(_)) {
                    out.brown_minus = b;
                } else {
                    out.brown_plus = b;
                }
            }
        }
        out
    }
}

fn brown_slot(k: u8, a: &Atom) -> Brown {
    let mut b = Brown::default();
    match (k, &a.args[0]) {
        (1, Value::Scalar(s)) => b.lambda = s.clone(),
        (2, Value::Cubic(c)) => b.c = c.clone(),
        (3, Value::Cubic(c)) => b.cprime = c.clone(),
        (4, Value::Scalar(s)) => b.mu = s.clone(),
        _ => unreachable!("brown slot payload"),
    }
    b
}

/// Decompose an element into atoms; `dd` coefficients move into the first argument.
pub fn atoms(l: &LieElement) -> Vec<Atom> {
    let mut out = Vec::new();
    let mut push = |tag: Tag, args: Vec<Value>| out.push(Atom { tag, args });
    if !l.x.is_zero() {
        push(Tag::X, vec![Value::Scalar(l.x.clone())]);
    }
    for (b, ctor) in [
        (&l.brown_minus, Tag::BrownMinus as fn(u8) -> Tag),
        (&l.brown_plus, Tag::BrownPlus),
    ] {
        if !b.lambda.is_zero() {
            push(ctor(1), vec![Value::Scalar(b.lambda.clone())]);
        }
        if !b.c.is_zero() {
            push(ctor(2), vec![Value::Cubic(b.c.clone())]);
        }
        if !b.cprime.is_zero() {
            push(ctor(3), vec![Value::Cubic(b.cprime.clone())]);
        }
        if !b.mu.is_zero() {
            push(ctor(4), vec![Value::Scalar(b.mu.clone())]);
        }
    }
    if !l.ad_minus.is_zero() {
        push(Tag::AdMinus, vec![Value::Cubic(l.ad_minus.clone())]);
    }
    if !l.ad_plus.is_zero() {
        push(Tag::AdPlus, vec![Value::Cubic(l.ad_plus.clone())]);
    }
    if !l.l00.xi.is_zero() {
        push(Tag::Xi, vec![Value::Scalar(l.l00.xi.clone())]);
    }
    if !l.l00.zeta.is_zero() {
        push(Tag::Zeta, vec![Value::Scalar(l.l00.zeta.clone())]);
    }
    for t in &l.l00.dd {
        push(
            Tag::Dd,
            vec![
                Value::Cubic(t.c.scale(&t.coef)),
                Value::Cubic(t.cprime.clone()),
            ],
        );
    }
    if !l.y.is_zero() {
        push(Tag::Y, vec![Value::Scalar(l.y.clone())]);
    }
    out
}

#[derive(Clone, Debug)]
struct Entry {
    left: Vec<String>,
    right: Vec<String>,
    /// `None` for a zero entry.
    rhs: Option<Expr>,
    line: usize,
}

#[derive(Clone, Debug, Default)]
pub struct BracketTable {
    entries: BTreeMap<(Tag, Tag), Entry>,
}

const SHIPPED: &str = include_str!("../../data/bracket_shipped.tbl");

impl BracketTable {
    /// The entries recoverable without external data, plus all grading-forced zeros.
    pub fn shipped() -> BracketTable {
        BracketTable::parse(SHIPPED).expect("shipped bracket table parses")
    }

    pub fn shipped_source() -> &'static str {
        SHIPPED
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn parse(src: &str) -> Result<BracketTable> {
        let mut table = BracketTable::default();
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let (a, b, entry) = parse_record(body, line)?;
            if table.entries.insert((a, b), entry).is_some() {
                return Err(Error::TableFormat {
                    line,
                    msg: format!("duplicate entry for [{a}, {b}]"),
                });
            }
        }
        Ok(table)
    }

    pub fn has(&self, a: Tag, b: Tag) -> bool {
        self.entries.contains_key(&(a, b)) || self.entries.contains_key(&(b, a))
    }

    /// Unordered tag pairs with no entry in either order.
    pub fn missing_pairs(&self) -> Vec<(Tag, Tag)> {
        let tags = Tag::all();
        let mut out = Vec::new();
        for (k, &a) in tags.iter().enumerate() {
            for &b in &tags[k..] {
                if !self.has(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Left-hand sides `[A(p..), B(q..)]` for the missing pairs, in table syntax.
    pub fn missing_records(&self) -> Vec<String> {
        let pattern = |t: Tag, s: &str| {
            let names: Vec<String> = match t.params().len() {
                1 => vec![s.to_string()],
                n => (1..=n).map(|k| format!("{s}{k}")).collect(),
            };
            format!("{t}({})", names.join(", "))
        };
        self.missing_pairs()
            .into_iter()
            .map(|(a, b)| format!("[{}, {}]", pattern(a, "p"), pattern(b, "q")))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.missing_pairs().is_empty()
    }

    /// Records as `(left, right, line)`.
    pub fn keys(&self) -> Vec<(Tag, Tag, usize)> {
        self.entries
            .iter()
            .map(|(&(a, b), e)| (a, b, e.line))
            .collect()
    }

    fn eval_entry(&self, e: &Entry, left: &Atom, right: &Atom, env: &Env) -> Result<LieElement> {
        let Some(rhs) = &e.rhs else {
            return Ok(LieElement::zero());
        };
        let mut inner = Env::new(env.ctx, env.tables);
        for (name, v) in e
            .left
            .iter()
            .zip(&left.args)
            .chain(e.right.iter().zip(&right.args))
        {
            inner.vars.insert(name.clone(), v.clone());
        }
        crate::dsl::eval::eval(rhs, &inner)
            .and_then(Value::into_lie)
            .map_err(|err| Error::TableFormat {
                line: e.line,
                msg: err.to_string(),
            })
    }

    /// Bracket of two atoms.
    pub fn atom_bracket(&self, a: &Atom, b: &Atom, env: &Env) -> Result<LieElement> {
        if let Some(e) = self.entries.get(&(a.tag, b.tag)) {
            return self.eval_entry(e, a, b, env);
        }
        if let Some(e) = self.entries.get(&(b.tag, a.tag)) {
            return Ok(self.eval_entry(e, b, a, env)?.neg());
        }
        Err(Error::MissingTableEntry {
            left: a.tag.to_string(),
            right: b.tag.to_string(),
        })
    }
}

fn parse_params(p: &mut Parser, tag: Tag) -> Result<Vec<String>> {
    p.expect(Tok::LParen)?;
    let mut names = Vec::new();
    loop {
        names.push(p.ident()?.0);
        if *p.peek() == Tok::Comma {
            p.expect(Tok::Comma)?;
        } else {
            break;
        }
    }
    p.expect(Tok::RParen)?;
    if names.len() != tag.params().len() {
        return Err(p.error(format!("{tag} takes {} parameter(s)", tag.params().len())));
    }
    Ok(names)
}

fn parse_tag(p: &mut Parser) -> Result<Tag> {
    let (name, _) = p.ident()?;
    Tag::parse(&name).ok_or_else(|| Error::Kind(format!("unknown component tag '{name}'")))
}

fn parse_record(body: &str, line: usize) -> Result<(Tag, Tag, Entry)> {
    let fail = |err: Error| Error::TableFormat {
        line,
        msg: err.to_string(),
    };
    let mut p = Parser::new(body).map_err(fail)?;
    let mut head = || -> Result<(Tag, Vec<String>, Tag, Vec<String>, Expr)> {
        p.expect(Tok::LBracket)?;
        let a = parse_tag(&mut p)?;
        let left = parse_params(&mut p, a)?;
        p.expect(Tok::Comma)?;
        let b = parse_tag(&mut p)?;
        let right = parse_params(&mut p, b)?;
        p.expect(Tok::RBracket)?;
        p.expect(Tok::Eq)?;
        let rhs = p.expr()?;
        p.expect_eof()?;
        Ok((a, left, b, right, rhs))
    };
    let (a, left, b, right, rhs) = head().map_err(fail)?;
    let mut kinds = std::collections::HashMap::new();
    for (n, k) in left
        .iter()
        .zip(a.params())
        .chain(right.iter().zip(b.params()))
    {
        if kinds.insert(n.clone(), *k).is_some() {
            return Err(fail(Error::Kind(format!("parameter '{n}' bound twice"))));
        }
    }
    let rhs = match &rhs.kind {
        ExprKind::Int(n) if n == &num_bigint::BigInt::from(0) => None,
        _ => {
            let k = infer(&rhs, &kinds).map_err(fail)?;
            if k != Kind::Lie {
                return Err(fail(Error::Kind(format!(
                    "entry must be of kind lie, found {k}"
                ))));
            }
            Some(rhs)
        }
    };
    Ok((
        a,
        b,
        Entry {
            left,
            right,
            rhs,
            line,
        },
    ))
}

/// Bilinear bracket through the table. The result is not simplified.
pub fn bracket(a: &LieElement, b: &LieElement, env: &Env) -> Result<LieElement> {
    let table = &env.tables.bracket;
    let mut out = LieElement::zero();
    let right = atoms(b);
    for x in atoms(a) {
        for y in &right {
            out = out.add(&table.atom_bracket(&x, y, env)?);
        }
    }
    Ok(out)
}

/// G2-degrees of the nonzero components of an element.
pub fn degrees(l: &LieElement) -> Vec<[i64; 2]> {
    let mut d: Vec<[i64; 2]> = atoms(l).iter().map(|a| a.tag.degree()).collect();
    d.sort();
    d.dedup();
    d
}

fn in_g2_zero(d: [i64; 2]) -> bool {
    d == [0, 0] || roots_g2().iter().any(|r| r.0 == d)
}

/// Fresh indeterminate payloads for validation.
struct Fresh {
    t: u16,
    a: u16,
}

impl Fresh {
    fn scalar(&mut self) -> ScalarPoly {
        self.t += 1;
        ScalarPoly::t(self.t)
    }

    fn cubic(&mut self) -> CubicElement {
        let mut c = CubicElement::zero();
        for i in 0..3 {
            c.xi[i] = self.scalar();
            self.a += 1;
            c.u[i] = ConicElement::generator(self.a);
        }
        c
    }

    fn atom(&mut self, tag: Tag) -> Atom {
        let args = tag
            .params()
            .iter()
            .map(|k| match k {
                Kind::Scalar => Value::Scalar(self.scalar()),
                _ => Value::Cubic(self.cubic()),
            })
            .collect();
        Atom { tag, args }
    }
}

/// Outcome of one validation criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail(Vec<String>),
    Incomplete(Vec<String>),
}

#[derive(Clone, Debug)]
pub struct TableCheck {
    pub grading: CheckStatus,
    pub antisymmetry: CheckStatus,
    pub jacobi: CheckStatus,
}

fn status(fails: Vec<String>, missing: Vec<String>) -> CheckStatus {
    if !fails.is_empty() {
        CheckStatus::Fail(fails)
    } else if !missing.is_empty() {
        CheckStatus::Incomplete(missing)
    } else {
        CheckStatus::Pass
    }
}

pub const JACOBI_SAMPLES: usize = 50;
pub const JACOBI_SEED: u64 = 0x4a41_434f_4249;

/// Validate grading closure, antisymmetry and the Jacobi identity on four fixed
/// triples around the anchor entries plus sampled atom triples whose total
/// degree lies in G2 or is zero.
pub fn check_table(table: &BracketTable, twist: &super::TwistTable) -> Result<TableCheck> {
    let ctx = Context::new(64, 64, 6)?;
    let tables = Tables {
        bracket: table.clone(),
        twist: twist.clone(),
    };
    let env = Env::new(&ctx, &tables);

    let mut fails = Vec::new();
    for (&(a, b), e) in &table.entries {
        let mut fresh = Fresh { t: 0, a: 0 };
        let (x, y) = (fresh.atom(a), fresh.atom(b));
        let r = table.eval_entry(e, &x, &y, &env)?.simplify(&ctx)?;
        let want = [a.degree()[0] + b.degree()[0], a.degree()[1] + b.degree()[1]];
        let bad: Vec<_> = degrees(&r)
            .into_iter()
            .filter(|d| *d != want || !in_g2_zero(want))
            .collect();
        if !bad.is_empty() {
            fails.push(format!(
                "line {}: [{a}, {b}] has components of degree {bad:?}, expected only {want:?}",
                e.line
            ));
        }
    }
    let grading = status(fails, Vec::new());

    let mut fails = Vec::new();
    let mut missing = Vec::new();
    for tag in Tag::all() {
        let mut fresh = Fresh { t: 0, a: 0 };
        let x = fresh.atom(tag);
        match table.atom_bracket(&x, &x, &env) {
            Ok(r) => {
                if !r.simplify(&ctx)?.is_zero() {
                    fails.push(format!("[{tag}, {tag}] does not vanish on equal arguments"));
                }
            }
            Err(Error::MissingTableEntry { .. }) => missing.push(format!("[{tag}, {tag}]")),
            Err(e) => return Err(e),
        }
    }
    for (&(a, b), _) in &table.entries {
        if a < b && table.entries.contains_key(&(b, a)) {
            let mut fresh = Fresh { t: 0, a: 0 };
            let (x, y) = (fresh.atom(a), fresh.atom(b));
            let lhs = table.atom_bracket(&x, &y, &env)?;
            let rhs = table.eval_entry(&table.entries[&(b, a)], &y, &x, &env)?;
            if !lhs.add(&rhs).simplify(&ctx)?.is_zero() {
                fails.push(format!("[{a}, {b}] and [{b}, {a}] are not opposite"));
            }
        }
    }
    let antisymmetry = status(fails, missing);

    let mut rng = ChaCha8Rng::seed_from_u64(JACOBI_SEED);
    let tags = Tag::all();
    let mut fails = Vec::new();
    let mut missing = Vec::new();
    let fixed = [
        [Tag::X, Tag::Y, Tag::Xi],
        [Tag::X, Tag::Y, Tag::Zeta],
        [Tag::X, Tag::Y, Tag::Dd],
        [Tag::AdPlus, Tag::AdMinus, Tag::Xi],
    ];
    for k in 0..JACOBI_SAMPLES {
        let pick = if let Some(f) = fixed.get(k) {
            f.to_vec()
        } else {
            loop {
                let pick: Vec<Tag> = (0..3)
                    .map(|_| *tags.choose(&mut rng).expect("nonempty"))
                    .collect();
                let sum = pick.iter().fold([0, 0], |acc, t| {
                    [acc[0] + t.degree()[0], acc[1] + t.degree()[1]]
                });
                if in_g2_zero(sum) {
                    break pick;
                }
            }
        };
        let mut fresh = Fresh { t: 0, a: 0 };
        let (a, b, c) = (
            fresh.atom(pick[0]).to_lie(),
            fresh.atom(pick[1]).to_lie(),
            fresh.atom(pick[2]).to_lie(),
        );
        let label = format!("({}, {}, {})", pick[0], pick[1], pick[2]);
        let jac = || -> Result<LieElement> {
            let t1 = bracket(&a, &bracket(&b, &c, &env)?, &env)?;
            let t2 = bracket(&b, &bracket(&c, &a, &env)?, &env)?;
            let t3 = bracket(&c, &bracket(&a, &b, &env)?, &env)?;
            t1.add(&t2).add(&t3).simplify(&ctx)
        };
        match jac() {
            Ok(r) if r.is_zero() => {}
            Ok(r) => fails.push(format!("{label}: {r}")),
            Err(Error::MissingTableEntry { left, right }) => {
                missing.push(format!("{label}: no entry for [{left}, {right}]"))
            }
            Err(e) => return Err(e),
        }
    }
    let jacobi = status(fails, missing);
    Ok(TableCheck {
        grading,
        antisymmetry,
        jacobi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::TwistTable;

    fn env_run<T>(f: impl FnOnce(&Env) -> T) -> T {
        let ctx = Context::new(6, 3, 4).unwrap();
        let tables = Tables::shipped();
        let env = Env::new(&ctx, &tables);
        f(&env)
    }

    #[test]
    fn tag_names_round_trip() {
        for t in Tag::all() {
            assert_eq!(Tag::parse(&t.to_string()), Some(t));
        }
        assert_eq!(Tag::all().len(), 15);
        assert_eq!(Tag::parse("BrownPlus5"), None);
    }

    #[test]
    fn degrees_lie_in_g2() {
        for t in Tag::all() {
            assert!(in_g2_zero(t.degree()), "{t}");
        }
    }

    #[test]
    fn shipped_anchor_entries() {
        env_run(|env| {
            let xy = bracket(&LieElement::x(), &LieElement::y(), env).unwrap();
            assert_eq!(xy.to_string(), "xi");
            let yx = bracket(&LieElement::y(), &LieElement::x(), env).unwrap();
            assert_eq!(yx.to_string(), "(-1)*xi");
            let xxi = bracket(&LieElement::x(), &LieElement::xi(), env).unwrap();
            assert_eq!(xxi.to_string(), "(2)*x");
            let c = CubicElement::off_diagonal(1, 2, ConicElement::generator(1));
            let r = bracket(&LieElement::ad_pos(c.clone()), &LieElement::ad_neg(c), env).unwrap();
            assert_eq!(r.to_string(), "(-1)*dd_{((1)*a1)[12],((1)*a1)[12]}");
        });
    }

    #[test]
    fn missing_entries_are_reported() {
        env_run(|env| {
            let err = bracket(&LieElement::x(), &LieElement::zeta(), env).unwrap_err();
            assert!(matches!(err, Error::MissingTableEntry { .. }), "{err}");
        });
        assert!(!BracketTable::shipped().is_complete());
    }

    #[test]
    fn record_errors_carry_line_numbers() {
        let err = BracketTable::parse("\n[X(s), Y(t)] = s*t").unwrap_err();
        assert!(matches!(err, Error::TableFormat { line: 2, .. }), "{err}");
        let err = BracketTable::parse("[X(s), Q(t)] = 0").unwrap_err();
        assert!(matches!(err, Error::TableFormat { line: 1, .. }));
        let err = BracketTable::parse("[X(s), X(t)] = 0\n[X(a), X(b)] = 0").unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn shipped_table_is_graded() {
        let r = check_table(&BracketTable::shipped(), &TwistTable::shipped()).unwrap();
        assert_eq!(r.grading, CheckStatus::Pass);
        assert!(matches!(r.jacobi, CheckStatus::Incomplete(_)));
    }

    #[test]
    fn misgraded_entry_is_rejected() {
        let t = BracketTable::parse("[X(s), Y(t)] = s*t*x").unwrap();
        let r = check_table(&t, &TwistTable::shipped()).unwrap();
        assert!(matches!(r.grading, CheckStatus::Fail(_)));
    }
}

use std::fmt;

use crate::conic::ConicElement;
use crate::endo::Endomorphism;
use crate::error::{Error, Result};
use crate::jordan::CubicElement;
use crate::lie::LieElement;
use crate::ring::ScalarPoly;
use crate::roots::RootF4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Scalar,
    Conic,
    Cubic,
    Lie,
    Endo,
    Root,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Scalar => "scalar",
            Kind::Conic => "conic",
            Kind::Cubic => "cubic",
            Kind::Lie => "lie",
            Kind::Endo => "endomorphism",
            Kind::Root => "root vector",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Value {
    Scalar(ScalarPoly),
    Conic(ConicElement),
    Cubic(CubicElement),
    Lie(LieElement),
    Endo(Endomorphism),
    Root(Vec<i64>),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Scalar(_) => Kind::Scalar,
            Value::Conic(_) => Kind::Conic,
            Value::Cubic(_) => Kind::Cubic,
            Value::Lie(_) => Kind::Lie,
            Value::Endo(_) => Kind::Endo,
            Value::Root(_) => Kind::Root,
        }
    }

    pub fn into_scalar(self) -> Result<ScalarPoly> {
        match self {
            Value::Scalar(s) => Ok(s),
            v => Err(mismatch(Kind::Scalar, v.kind())),
        }
    }

    /// Conic value, coercing scalars to multiples of `1_C`.
    pub fn into_conic(self) -> Result<ConicElement> {
        match self {
            Value::Scalar(s) => Ok(ConicElement::scalar(s)),
            Value::Conic(c) => Ok(c),
            v => Err(mismatch(Kind::Conic, v.kind())),
        }
    }

    pub fn into_cubic(self) -> Result<CubicElement> {
        match self {
            Value::Cubic(c) => Ok(c),
            v => Err(mismatch(Kind::Cubic, v.kind())),
        }
    }

    pub fn into_lie(self) -> Result<LieElement> {
        match self {
            Value::Lie(l) => Ok(l),
            v => Err(mismatch(Kind::Lie, v.kind())),
        }
    }

    pub fn into_endo(self) -> Result<Endomorphism> {
        match self {
            Value::Endo(e) => Ok(e),
            v => Err(mismatch(Kind::Endo, v.kind())),
        }
    }

    pub fn into_root(self) -> Result<RootF4> {
        match self {
            Value::Root(v) if v.len() == 4 => RootF4([v[0], v[1], v[2], v[3]]).checked(),
            Value::Root(v) => Err(Error::NotARoot(v)),
            v => Err(mismatch(Kind::Root, v.kind())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(s) => s.is_zero(),
            Value::Conic(c) => c.is_zero(),
            Value::Cubic(c) => c.is_zero(),
            Value::Lie(l) => l.is_zero(),
            Value::Endo(e) => e.is_identity(),
            Value::Root(v) => v.iter().all(|&c| c == 0),
        }
    }
}

pub fn mismatch(expected: Kind, found: Kind) -> Error {
    Error::Kind(format!("expected {expected}, found {found}"))
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Conic(c) => write!(f, "{c}"),
            Value::Cubic(c) => write!(f, "{c}"),
            Value::Lie(l) => write!(f, "{l}"),
            Value::Endo(e) => write!(f, "{e}"),
            Value::Root(v) => {
                let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

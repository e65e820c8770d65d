//! Terms and equations over `{·, 0, 1, ∧, ∨, ¬}`.
//!
//! Text syntax, loosest binding first:
//!
//! | syntax    | meaning | associativity |
//! |-----------|---------|---------------|
//! | `s \| t`  | join    | left          |
//! | `s & t`   | meet    | left          |
//! | `s . t`   | `s·t`   | left          |
//! | `~t`      | `¬t`    | prefix        |
//!
//! Constants are `0` and `1`; identifiers are variables; an equation has
//! exactly one `=`.

mod eval;
mod parser;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

pub use eval::{eval, holds, Assignment, CompiledEquation};
pub use parser::{parse, parse_term, ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Dot(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Neg(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn dot(l: Term, r: Term) -> Term {
        Term::Dot(Box::new(l), Box::new(r))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    /// Pushes free variables not yet in `out`, in first-occurrence order.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::Dot(l, r) | Term::Meet(l, r) | Term::Join(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Term::Neg(t) => t.collect_vars(out),
        }
    }

    /// Whether evaluation needs the constant `1`.
    pub fn needs_bound(&self) -> bool {
        match self {
            Term::One | Term::Neg(_) | Term::Join(..) => true,
            Term::Var(_) | Term::Zero => false,
            Term::Dot(l, r) | Term::Meet(l, r) => l.needs_bound() || r.needs_bound(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 0,
            Term::Neg(t) => 1 + t.depth(),
            Term::Dot(l, r) | Term::Meet(l, r) | Term::Join(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Binding strength used by the printer; higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Term::Join(..) => 1,
            Term::Meet(..) => 2,
            Term::Dot(..) => 3,
            Term::Neg(_) => 4,
            Term::Var(_) | Term::Zero | Term::One => 5,
        }
    }

    /// Renames variables through `f`.
    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Term {
        match self {
            Term::Var(v) => Term::Var(f(v)),
            Term::Zero => Term::Zero,
            Term::One => Term::One,
            Term::Dot(l, r) => Term::dot(l.rename(f), r.rename(f)),
            Term::Meet(l, r) => Term::meet(l.rename(f), r.rename(f)),
            Term::Join(l, r) => Term::join(l.rename(f), r.rename(f)),
            Term::Neg(t) => Term::neg(t.rename(f)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (l, r, sym) = match self {
            Term::Var(v) => return f.write_str(v),
            Term::Zero => return f.write_str("0"),
            Term::One => return f.write_str("1"),
            Term::Neg(t) => {
                f.write_str("~")?;
                return if t.precedence() < self.precedence() {
                    write!(f, "({t})")
                } else {
                    write!(f, "{t}")
                };
            }
            Term::Dot(l, r) => (l, r, "."),
            Term::Meet(l, r) => (l, r, "&"),
            Term::Join(l, r) => (l, r, "|"),
        };
        let p = self.precedence();
        // `.` is not associative, so `(x . y) . z` keeps its parentheses
        let nested_dot = matches!(self, Term::Dot(..)) && matches!(**l, Term::Dot(..));
        if l.precedence() < p || nested_dot {
            write!(f, "({l})")?;
        } else {
            write!(f, "{l}")?;
        }
        write!(f, " {sym} ")?;
        // left-associative: an equal-precedence right child needs parentheses
        if r.precedence() <= p {
            write!(f, "({r})")
        } else {
            write!(f, "{r}")
        }
    }
}

/// `lhs = rhs`, with its free variables in first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    lhs: Term,
    rhs: Term,
    vars: Vec<String>,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Equation {
        let mut vars = Vec::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Equation { lhs, rhs, vars }
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn needs_bound(&self) -> bool {
        self.lhs.needs_bound() || self.rhs.needs_bound()
    }

    pub fn rename(&self, f: &impl Fn(&str) -> String) -> Equation {
        Equation::new(self.lhs.rename(f), self.rhs.rename(f))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Equation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl Serialize for Equation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The equations studied by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Builtin {
    /// Double negation, `¬¬x = x`.
    DN,
    /// Excluded middle, `x ∨ ¬x = 1`.
    EM,
    /// Commutativity, `x ∧ y = y ∧ x`.
    T,
    /// Positive implicativity, `x·y = (x·y)·y`.
    E1,
    /// Implicativity, `x·(y·x) = x`.
    I,
    /// `x = 1`.
    X1,
    /// `¬x = 1`.
    NX1,
}

impl Builtin {
    pub const ALL: [Builtin; 7] = [
        Builtin::DN,
        Builtin::EM,
        Builtin::T,
        Builtin::E1,
        Builtin::I,
        Builtin::X1,
        Builtin::NX1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::DN => "DN",
            Builtin::EM => "EM",
            Builtin::T => "T",
            Builtin::E1 => "E1",
            Builtin::I => "I",
            Builtin::X1 => "X1",
            Builtin::NX1 => "NX1",
        }
    }

    pub fn source(self) -> &'static str {
        match self {
            Builtin::DN => "~~x = x",
            Builtin::EM => "x | ~x = 1",
            Builtin::T => "x & y = y & x",
            Builtin::E1 => "x . y = (x . y) . y",
            Builtin::I => "x . (y . x) = x",
            Builtin::X1 => "x = 1",
            Builtin::NX1 => "~x = 1",
        }
    }

    pub fn equation(self) -> Equation {
        let x = || Term::var("x");
        let y = || Term::var("y");
        let (lhs, rhs) = match self {
            Builtin::DN => (Term::neg(Term::neg(x())), x()),
            Builtin::EM => (Term::join(x(), Term::neg(x())), Term::One),
            Builtin::T => (Term::meet(x(), y()), Term::meet(y(), x())),
            Builtin::E1 => (Term::dot(x(), y()), Term::dot(Term::dot(x(), y()), y())),
            Builtin::I => (Term::dot(x(), Term::dot(y(), x())), x()),
            Builtin::X1 => (x(), Term::One),
            Builtin::NX1 => (Term::neg(x()), Term::One),
        };
        Equation::new(lhs, rhs)
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown builtin equation `{s}`")))
    }
}

/// Looks up a builtin equation by name.
pub fn builtin(b: Builtin) -> Equation {
    b.equation()
}

/// Accepts either a builtin name (`EM`, `T`, …) or an equation in the text syntax.
pub fn equation_from_arg(s: &str) -> Result<Equation, Error> {
    if !s.contains('=') {
        if let Ok(b) = s.trim().parse::<Builtin>() {
            return Ok(b.equation());
        }
    }
    Ok(parse(s)?)
}

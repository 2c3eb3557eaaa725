//! Textual function definitions: parsing, evaluation and symbolic
//! differentiation of single-variable expressions.
//!
//! The grammar is deliberately small:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?
//! primary := number | 't' | 'x' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//! func    := sin | cos | exp | log | abs | sqrt
//! ```
//!
//! `^` binds tighter than unary minus, so `-t^2` is `-(t^2)`, and it is
//! right-associative: `t^2^3` is `t^(2^3)`. `t` and `x` both name the one
//! free variable.

mod deriv;
mod parser;

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

pub use deriv::differentiate;
pub use parser::parse;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Sin,
    Cos,
    Exp,
    Log,
    Abs,
    Sqrt,
}

impl UnaryOp {
    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "-",
            UnaryOp::Sin => "sin",
            UnaryOp::Cos => "cos",
            UnaryOp::Exp => "exp",
            UnaryOp::Log => "log",
            UnaryOp::Abs => "abs",
            UnaryOp::Sqrt => "sqrt",
        }
    }

    pub(crate) fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => UnaryOp::Sin,
            "cos" => UnaryOp::Cos,
            "exp" => UnaryOp::Exp,
            "log" | "ln" => UnaryOp::Log,
            "abs" => UnaryOp::Abs,
            "sqrt" => UnaryOp::Sqrt,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinaryOp {
    pub fn symbol(self) -> char {
        match self {
            BinaryOp::Add => '+',
            BinaryOp::Sub => '-',
            BinaryOp::Mul => '*',
            BinaryOp::Div => '/',
            BinaryOp::Pow => '^',
        }
    }
}

/// Expression tree over one free variable.
///
/// Values are immutable once built and can be shared across threads.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr<T> {
    Constant(T),
    Variable,
    Unary(UnaryOp, Box<Expr<T>>),
    Binary(BinaryOp, Box<Expr<T>>, Box<Expr<T>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at byte {offset}")]
    UnknownIdentifier { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::UnknownIdentifier { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("division by zero in `{node}` at x = {x}")]
    DivisionByZero { node: String, x: f64 },

    #[error("`{node}` is undefined at x = {x}: {reason}")]
    Domain {
        node: String,
        x: f64,
        reason: &'static str,
    },

    #[error("x = {x} lies outside the domain [{a}, {b}] of `{function}`")]
    OutsideDomain {
        function: String,
        x: f64,
        a: f64,
        b: f64,
    },
}

impl<T: Scalar> Expr<T> {
    pub fn constant(value: T) -> Self {
        Expr::Constant(value)
    }

    pub fn unary(op: UnaryOp, child: Expr<T>) -> Self {
        Expr::Unary(op, Box::new(child))
    }

    pub fn binary(op: BinaryOp, left: Expr<T>, right: Expr<T>) -> Self {
        Expr::Binary(op, Box::new(left), Box::new(right))
    }

    /// True when the tree does not mention the variable.
    pub fn is_constant(&self) -> bool {
        match self {
            Expr::Constant(_) => true,
            Expr::Variable => false,
            Expr::Unary(_, c) => c.is_constant(),
            Expr::Binary(_, l, r) => l.is_constant() && r.is_constant(),
        }
    }

    /// True when the tree is exactly the bare variable.
    pub fn is_identity(&self) -> bool {
        matches!(self, Expr::Variable)
    }

    /// First node (pre-order) whose operator is `op`.
    pub fn find_unary(&self, op: UnaryOp) -> Option<&Expr<T>> {
        match self {
            Expr::Unary(o, c) => {
                if *o == op {
                    Some(self)
                } else {
                    c.find_unary(op)
                }
            }
            Expr::Binary(_, l, r) => l.find_unary(op).or_else(|| r.find_unary(op)),
            _ => None,
        }
    }

    pub fn eval(&self, x: T) -> Result<T, EvalError> {
        let value = match self {
            Expr::Constant(c) => *c,
            Expr::Variable => x,
            Expr::Unary(op, child) => {
                let v = child.eval(x)?;
                match op {
                    UnaryOp::Neg => -v,
                    UnaryOp::Sin => v.sin(),
                    UnaryOp::Cos => v.cos(),
                    UnaryOp::Exp => v.exp(),
                    UnaryOp::Abs => v.abs(),
                    UnaryOp::Log => {
                        if v <= T::zero() {
                            return Err(self.domain(x, "logarithm of a non-positive number"));
                        }
                        v.ln()
                    }
                    UnaryOp::Sqrt => {
                        if v < T::zero() {
                            return Err(self.domain(x, "square root of a negative number"));
                        }
                        v.sqrt()
                    }
                }
            }
            Expr::Binary(op, left, right) => {
                let l = left.eval(x)?;
                let r = right.eval(x)?;
                match op {
                    BinaryOp::Add => l + r,
                    BinaryOp::Sub => l - r,
                    BinaryOp::Mul => l * r,
                    BinaryOp::Div => {
                        if r == T::zero() {
                            return Err(EvalError::DivisionByZero {
                                node: self.to_string(),
                                x: x.as_f64(),
                            });
                        }
                        l / r
                    }
                    BinaryOp::Pow => self.power(l, r, x)?,
                }
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(self.domain(x, "non-finite result"))
        }
    }

    fn power(&self, base: T, exponent: T, x: T) -> Result<T, EvalError> {
        let integral = exponent.fract() == T::zero() && exponent.abs() <= T::lit(i32::MAX as f64);
        if base == T::zero() && exponent < T::zero() {
            return Err(EvalError::DivisionByZero {
                node: self.to_string(),
                x: x.as_f64(),
            });
        }
        if integral {
            let n = exponent.to_i32().expect("checked range");
            return Ok(base.powi(n));
        }
        if base < T::zero() {
            return Err(self.domain(x, "negative base raised to a non-integer power"));
        }
        Ok(base.powf(exponent))
    }

    fn domain(&self, x: T, reason: &'static str) -> EvalError {
        EvalError::Domain {
            node: self.to_string(),
            x: x.as_f64(),
            reason,
        }
    }
}

impl<T: Scalar> fmt::Display for Expr<T> {
    /// Fully parenthesised form; parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Constant(c) => {
                if c.is_sign_negative() {
                    write!(f, "(-{})", c.abs())
                } else {
                    write!(f, "{c}")
                }
            }
            Expr::Variable => f.write_str("t"),
            Expr::Unary(UnaryOp::Neg, c) => write!(f, "(-{c})"),
            Expr::Unary(op, c) => write!(f, "{}({c})", op.name()),
            Expr::Binary(op, l, r) => write!(f, "({l} {} {r})", op.symbol()),
        }
    }
}

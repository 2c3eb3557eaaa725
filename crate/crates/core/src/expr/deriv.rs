use super::{BinaryOp, Expr, UnaryOp};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Symbolic derivative with respect to the free variable.
///
/// Only constant folding is applied to the result. Trees containing `abs`
/// are rejected because the derivative does not exist at the kink.
pub fn differentiate<T: Scalar>(e: &Expr<T>) -> Result<Expr<T>> {
    if let Some(node) = e.find_unary(UnaryOp::Abs) {
        return Err(Error::NotDifferentiable {
            node: node.to_string(),
        });
    }
    Ok(derive(e))
}

fn derive<T: Scalar>(e: &Expr<T>) -> Expr<T> {
    match e {
        Expr::Constant(_) => zero(),
        Expr::Variable => one(),
        Expr::Unary(op, u) => {
            let du = derive(u);
            let u = (**u).clone();
            let outer = match op {
                UnaryOp::Neg => return neg(du),
                UnaryOp::Sin => unary(UnaryOp::Cos, u),
                UnaryOp::Cos => neg(unary(UnaryOp::Sin, u)),
                UnaryOp::Exp => unary(UnaryOp::Exp, u),
                UnaryOp::Log => return div(du, u),
                UnaryOp::Sqrt => {
                    return div(
                        du,
                        mul(Expr::Constant(T::lit(2.0)), unary(UnaryOp::Sqrt, u)),
                    )
                }
                UnaryOp::Abs => unreachable!("rejected before derivation"),
            };
            mul(outer, du)
        }
        Expr::Binary(op, l, r) => {
            let (dl, dr) = (derive(l), derive(r));
            let (l, r) = ((**l).clone(), (**r).clone());
            match op {
                BinaryOp::Add => add(dl, dr),
                BinaryOp::Sub => sub(dl, dr),
                BinaryOp::Mul => add(mul(dl, r), mul(l, dr)),
                BinaryOp::Div => div(
                    sub(mul(dl, r.clone()), mul(l, dr)),
                    pow(r, Expr::Constant(T::lit(2.0))),
                ),
                BinaryOp::Pow => {
                    if r.is_constant() {
                        // c * u^(c-1) * u'
                        let reduced = sub(r.clone(), one());
                        mul(mul(r, pow(l, reduced)), dl)
                    } else if l.is_constant() {
                        // a^v * log(a) * v'
                        let whole = pow(l.clone(), r);
                        mul(mul(whole, unary(UnaryOp::Log, l)), dr)
                    } else {
                        // u^v * (v' log u + v u' / u)
                        let whole = pow(l.clone(), r.clone());
                        let inner =
                            add(mul(dr, unary(UnaryOp::Log, l.clone())), div(mul(r, dl), l));
                        mul(whole, inner)
                    }
                }
            }
        }
    }
}

fn zero<T: Scalar>() -> Expr<T> {
    Expr::Constant(T::zero())
}

fn one<T: Scalar>() -> Expr<T> {
    Expr::Constant(T::one())
}

fn value<T: Scalar>(e: &Expr<T>) -> Option<T> {
    match e {
        Expr::Constant(c) => Some(*c),
        _ => None,
    }
}

fn is_value<T: Scalar>(e: &Expr<T>, v: f64) -> bool {
    value(e) == Some(T::lit(v))
}

/// Folds a fully constant node when evaluation is defined there.
fn fold<T: Scalar>(e: Expr<T>) -> Expr<T> {
    let foldable = match &e {
        Expr::Unary(_, c) => value(c).is_some(),
        Expr::Binary(_, l, r) => value(l).is_some() && value(r).is_some(),
        _ => false,
    };
    if !foldable {
        return e;
    }
    match e.eval(T::zero()) {
        Ok(v) => Expr::Constant(v),
        Err(_) => e,
    }
}

fn unary<T: Scalar>(op: UnaryOp, u: Expr<T>) -> Expr<T> {
    fold(Expr::unary(op, u))
}

fn neg<T: Scalar>(u: Expr<T>) -> Expr<T> {
    match u {
        Expr::Unary(UnaryOp::Neg, inner) => *inner,
        other => unary(UnaryOp::Neg, other),
    }
}

fn add<T: Scalar>(l: Expr<T>, r: Expr<T>) -> Expr<T> {
    if is_value(&l, 0.0) {
        r
    } else if is_value(&r, 0.0) {
        l
    } else {
        fold(Expr::binary(BinaryOp::Add, l, r))
    }
}

fn sub<T: Scalar>(l: Expr<T>, r: Expr<T>) -> Expr<T> {
    if is_value(&r, 0.0) {
        l
    } else if is_value(&l, 0.0) {
        neg(r)
    } else {
        fold(Expr::binary(BinaryOp::Sub, l, r))
    }
}

fn mul<T: Scalar>(l: Expr<T>, r: Expr<T>) -> Expr<T> {
    if is_value(&l, 0.0) || is_value(&r, 0.0) {
        zero()
    } else if is_value(&l, 1.0) {
        r
    } else if is_value(&r, 1.0) {
        l
    } else {
        fold(Expr::binary(BinaryOp::Mul, l, r))
    }
}

fn div<T: Scalar>(l: Expr<T>, r: Expr<T>) -> Expr<T> {
    if is_value(&l, 0.0) {
        zero()
    } else if is_value(&r, 1.0) {
        l
    } else {
        fold(Expr::binary(BinaryOp::Div, l, r))
    }
}

fn pow<T: Scalar>(l: Expr<T>, r: Expr<T>) -> Expr<T> {
    if is_value(&r, 1.0) {
        l
    } else if is_value(&r, 0.0) {
        one()
    } else {
        fold(Expr::binary(BinaryOp::Pow, l, r))
    }
}

use std::fmt;

use super::ExprError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConst {
    Pi,
    E,
}

impl NamedConst {
    pub fn value(self) -> f64 {
        match self {
            NamedConst::Pi => std::f64::consts::PI,
            NamedConst::E => std::f64::consts::E,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Sub => '-',
            BinOp::Mul => '*',
            BinOp::Div => '/',
            BinOp::Pow => '^',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
    Pow,
}

impl Func {
    pub const ALL: [Func; 8] = [
        Func::Sin,
        Func::Cos,
        Func::Tan,
        Func::Exp,
        Func::Log,
        Func::Sqrt,
        Func::Abs,
        Func::Pow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Log => "log",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
            Func::Pow => "pow",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Pow => 2,
            _ => 1,
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Parsed formula. Numeric literals are nonnegative; negation is a node.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Const(NamedConst),
    Var(Var),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

/// Integer exponents up to this magnitude use repeated multiplication.
const MAX_EXACT_EXPONENT: f64 = 16.0;

fn power(base: f64, exponent: f64) -> Result<f64, &'static str> {
    if exponent.fract() == 0.0 && exponent.abs() <= MAX_EXACT_EXPONENT {
        let n = exponent.abs() as u32;
        let mut acc = 1.0;
        for _ in 0..n {
            acc *= base;
        }
        if exponent < 0.0 {
            if acc == 0.0 {
                return Err("division by zero");
            }
            acc = 1.0 / acc;
        }
        Ok(acc)
    } else {
        Ok(base.powf(exponent))
    }
}

impl Expr {
    /// Evaluates the formula at `(x, y)`. Any non-finite intermediate result is
    /// reported together with the subexpression that produced it.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64, ExprError> {
        let fail = |message: &str| ExprError::Eval {
            expr: self.to_string(),
            x,
            y,
            message: message.to_string(),
        };
        let value = match self {
            Expr::Num(v) => *v,
            Expr::Const(c) => c.value(),
            Expr::Var(Var::X) => x,
            Expr::Var(Var::Y) => y,
            Expr::Neg(e) => -e.eval(x, y)?,
            Expr::Binary(op, a, b) => {
                let (a, b) = (a.eval(x, y)?, b.eval(x, y)?);
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div if b == 0.0 => return Err(fail("division by zero")),
                    BinOp::Div => a / b,
                    BinOp::Pow => power(a, b).map_err(fail)?,
                }
            }
            Expr::Call(func, args) => {
                let a = args[0].eval(x, y)?;
                match func {
                    Func::Sin => a.sin(),
                    Func::Cos => a.cos(),
                    Func::Tan => a.tan(),
                    Func::Exp => a.exp(),
                    Func::Log if a <= 0.0 => return Err(fail("logarithm of a nonpositive number")),
                    Func::Log => a.ln(),
                    Func::Sqrt if a < 0.0 => return Err(fail("square root of a negative number")),
                    Func::Sqrt => a.sqrt(),
                    Func::Abs => a.abs(),
                    Func::Pow => power(a, args[1].eval(x, y)?).map_err(fail)?,
                }
            }
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(fail(&format!("result is {value}")))
        }
    }

    /// Wraps the formula as a plain function; evaluation errors become NaN so
    /// that samplers report the offending node.
    pub fn as_fn(&self) -> impl Fn(f64, f64) -> f64 + Sync + '_ {
        move |x, y| self.eval(x, y).unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{v:?}"),
            Expr::Const(NamedConst::Pi) => f.write_str("pi"),
            Expr::Const(NamedConst::E) => f.write_str("e"),
            Expr::Var(Var::X) => f.write_str("x"),
            Expr::Var(Var::Y) => f.write_str("y"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

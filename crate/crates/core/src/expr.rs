//! Recursive-descent parser and evaluator for weight and sequence
//! expressions in the integer variable k, e.g. `sin(k*pi/2)` or `(-1)^k`.
//!
//! Grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' unary)?
//! atom  := number | 'k' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus on its
//! base, so `(-1)^k` needs its parentheses while `-1^k` is -(1^k).

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::periodic::PeriodicWeight;

/// Default tolerance for period detection.
pub const PERIOD_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub position: usize,
}

/// Longest-munch lexer. Numbers are decimal digits with an optional
/// fractional part; identifiers are lowercase ASCII runs.
pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Number,
                    lexeme: src[start..i].to_string(),
                    position: start,
                });
            }
            b'a'..=b'z' => {
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident,
                    lexeme: src[start..i].to_string(),
                    position: start,
                });
            }
            _ => {
                let kind = match b {
                    b'+' => TokenKind::Plus,
                    b'-' => TokenKind::Minus,
                    b'*' => TokenKind::Star,
                    b'/' => TokenKind::Slash,
                    b'^' => TokenKind::Caret,
                    b'(' => TokenKind::LParen,
                    b')' => TokenKind::RParen,
                    b',' => TokenKind::Comma,
                    _ => {
                        return Err(Error::Lex {
                            position: i,
                            message: format!(
                                "unknown character `{}`",
                                src[i..].chars().next().unwrap()
                            ),
                        })
                    }
                };
                i += 1;
                tokens.push(Token {
                    kind,
                    lexeme: src[start..i].to_string(),
                    position: start,
                });
            }
        }
    }
    Ok(tokens)
}

/// Unary functions available in expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Function {
    Sin,
    Cos,
    Tan,
    Log,
    Exp,
    Abs,
    Floor,
}

impl Function {
    fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Function::Sin,
            "cos" => Function::Cos,
            "tan" => Function::Tan,
            "log" => Function::Log,
            "exp" => Function::Exp,
            "abs" => Function::Abs,
            "floor" => Function::Floor,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            Function::Sin => "sin",
            Function::Cos => "cos",
            Function::Tan => "tan",
            Function::Log => "log",
            Function::Exp => "exp",
            Function::Abs => "abs",
            Function::Floor => "floor",
        }
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

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(f64),
    Variable,
    Negate(Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
    Call(Function, Box<Expr>),
}

struct Parser<'a> {
    tokens: &'a [Token],
    cursor: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn advance(&mut self) -> Option<&Token> {
        let token = self.tokens.get(self.cursor);
        if token.is_some() {
            self.cursor += 1;
        }
        token
    }

    fn position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map_or(self.end, |t| t.position)
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<()> {
        match self.peek() {
            Some(token) if token.kind == kind => {
                self.cursor += 1;
                Ok(())
            }
            _ => Err(Error::Parse {
                position: self.position(),
                message: format!("expected {what}"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        while let Some(token) = self.peek() {
            let op = match token.kind {
                TokenKind::Plus => BinaryOp::Add,
                TokenKind::Minus => BinaryOp::Sub,
                _ => break,
            };
            self.cursor += 1;
            let right = self.term()?;
            left = Expr::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while let Some(token) = self.peek() {
            let op = match token.kind {
                TokenKind::Star => BinaryOp::Mul,
                TokenKind::Slash => BinaryOp::Div,
                _ => break,
            };
            self.cursor += 1;
            let right = self.unary()?;
            left = Expr::Binary(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Minus) {
            self.cursor += 1;
            return Ok(Expr::Negate(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Caret) {
            self.cursor += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Binary(
                BinaryOp::Pow,
                Box::new(base),
                Box::new(exponent),
            ));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let position = self.position();
        let token = match self.advance() {
            Some(token) => token.clone(),
            None => {
                return Err(Error::Parse {
                    position,
                    message: "unexpected end of input".into(),
                })
            }
        };
        match token.kind {
            TokenKind::Number => token
                .lexeme
                .parse::<f64>()
                .map(Expr::Constant)
                .map_err(|_| Error::Parse {
                    position: token.position,
                    message: format!("bad number `{}`", token.lexeme),
                }),
            TokenKind::Ident => match token.lexeme.as_str() {
                "k" => Ok(Expr::Variable),
                "pi" => Ok(Expr::Constant(std::f64::consts::PI)),
                "e" => Ok(Expr::Constant(std::f64::consts::E)),
                name => {
                    if matches!(self.peek(), Some(t) if t.kind == TokenKind::LParen) {
                        let function = Function::from_name(name).ok_or(Error::UnknownFunction {
                            position: token.position,
                            name: name.to_string(),
                        })?;
                        self.cursor += 1;
                        let argument = self.expr()?;
                        self.expect(TokenKind::RParen, "closing `)`")?;
                        Ok(Expr::Call(function, Box::new(argument)))
                    } else {
                        Err(Error::Parse {
                            position: token.position,
                            message: format!("unknown identifier `{name}`"),
                        })
                    }
                }
            },
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, "closing `)`")?;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                position: token.position,
                message: format!("unexpected token `{}`", token.lexeme),
            }),
        }
    }
}

/// Parse a token stream produced by [`tokenize`].
pub fn parse(tokens: &[Token]) -> Result<Expr> {
    let end = tokens.last().map_or(0, |t| t.position + t.lexeme.len());
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end,
    };
    let expr = parser.expr()?;
    if let Some(extra) = parser.peek() {
        return Err(Error::Parse {
            position: extra.position,
            message: format!("unexpected trailing token `{}`", extra.lexeme),
        });
    }
    Ok(expr)
}

/// Tokenize and parse in one step.
pub fn parse_str(src: &str) -> Result<Expr> {
    parse(&tokenize(src)?)
}

impl Expr {
    /// Evaluate at the integer k. All reachable values are real; the
    /// complex return type mirrors the weight domain.
    pub fn eval(&self, k: i64) -> Result<Complex64> {
        Ok(Complex64::new(self.eval_real(k)?, 0.0))
    }

    fn eval_real(&self, k: i64) -> Result<f64> {
        Ok(match self {
            Expr::Constant(c) => *c,
            Expr::Variable => k as f64,
            Expr::Negate(inner) => -inner.eval_real(k)?,
            Expr::Binary(op, left, right) => {
                let a = left.eval_real(k)?;
                let b = right.eval_real(k)?;
                match op {
                    BinaryOp::Add => a + b,
                    BinaryOp::Sub => a - b,
                    BinaryOp::Mul => a * b,
                    BinaryOp::Div => {
                        if b == 0.0 {
                            return Err(Error::Eval("division by zero".into()));
                        }
                        a / b
                    }
                    BinaryOp::Pow => pow_real(a, b)?,
                }
            }
            Expr::Call(function, argument) => {
                let x = argument.eval_real(k)?;
                match function {
                    Function::Sin => x.sin(),
                    Function::Cos => x.cos(),
                    Function::Tan => x.tan(),
                    Function::Log => {
                        if x <= 0.0 {
                            return Err(Error::Eval(format!("log of non-positive value {x}")));
                        }
                        x.ln()
                    }
                    Function::Exp => x.exp(),
                    Function::Abs => x.abs(),
                    Function::Floor => x.floor(),
                }
            }
        })
    }
}

/// Real power with exact parity handling: a negative base and an integer
/// exponent go through |a|^b with the sign from the exponent's parity, so
/// (-1)^k is exact. A negative base with a fractional exponent is an
/// evaluation error rather than a branch choice.
fn pow_real(base: f64, exponent: f64) -> Result<f64> {
    if base == 0.0 && exponent < 0.0 {
        return Err(Error::Eval("zero raised to a negative power".into()));
    }
    if base < 0.0 {
        if exponent.fract() != 0.0 {
            return Err(Error::Eval(format!(
                "negative base {base} with non-integer exponent {exponent}"
            )));
        }
        let magnitude = (-base).powf(exponent);
        let odd = (exponent.abs() % 2.0) == 1.0;
        return Ok(if odd { -magnitude } else { magnitude });
    }
    Ok(base.powf(exponent))
}

/// Smallest period q <= q_max of the expression sampled at k = 0..=4*q_max,
/// within the given tolerance. Constant expressions report period 1;
/// weight construction lifts that to q = 2.
pub fn detect_period(expr: &Expr, q_max: usize, tol: f64) -> Result<usize> {
    if q_max < 2 {
        return Err(Error::InvalidParameter(format!(
            "q_max must be >= 2, got {q_max}"
        )));
    }
    let window = 4 * q_max;
    let samples: Vec<Complex64> = (0..=(window + q_max) as i64)
        .map(|k| expr.eval(k))
        .collect::<Result<_>>()?;
    for q in 1..=q_max {
        let periodic = (0..=window).all(|k| (samples[k + q] - samples[k]).norm() <= tol);
        if periodic {
            return Ok(q);
        }
    }
    Err(Error::NotPeriodic { q_max })
}

/// Detect the period and sample one full period into a weight. Period-1
/// (constant) expressions are duplicated to the minimum q = 2.
pub fn sample_weight(expr: &Expr, q_max: usize, tol: f64) -> Result<PeriodicWeight> {
    let q = detect_period(expr, q_max, tol)?;
    let q = q.max(2);
    let values: Vec<Complex64> = (0..q as i64).map(|k| expr.eval(k)).collect::<Result<_>>()?;
    PeriodicWeight::new(values)
}

fn precedence(expr: &Expr) -> u8 {
    match expr {
        Expr::Binary(BinaryOp::Add | BinaryOp::Sub, ..) => 1,
        Expr::Binary(BinaryOp::Mul | BinaryOp::Div, ..) => 2,
        Expr::Negate(_) => 3,
        Expr::Binary(BinaryOp::Pow, ..) => 4,
        Expr::Constant(_) | Expr::Variable | Expr::Call(..) => 5,
    }
}

fn is_atom(expr: &Expr) -> bool {
    matches!(expr, Expr::Variable | Expr::Call(..))
        || matches!(expr, Expr::Constant(c) if *c >= 0.0)
}

struct Paren<'a>(&'a Expr, bool);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Expr {
    /// Prints with the minimal parentheses that reparse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Constant(c) => write!(f, "{c}"),
            Expr::Variable => write!(f, "k"),
            Expr::Negate(inner) => write!(f, "-{}", Paren(inner, precedence(inner) < 3)),
            Expr::Binary(op, left, right) => {
                let (symbol, level) = match op {
                    BinaryOp::Add => ("+", 1),
                    BinaryOp::Sub => ("-", 1),
                    BinaryOp::Mul => ("*", 2),
                    BinaryOp::Div => ("/", 2),
                    BinaryOp::Pow => ("^", 4),
                };
                if *op == BinaryOp::Pow {
                    // base must be an atom; exponent is unary-level
                    write!(
                        f,
                        "{}^{}",
                        Paren(left, !is_atom(left)),
                        Paren(right, precedence(right) < 3)
                    )
                } else {
                    write!(
                        f,
                        "{} {} {}",
                        Paren(left, precedence(left) < level),
                        symbol,
                        Paren(right, precedence(right) <= level)
                    )
                }
            }
            Expr::Call(function, argument) => write!(f, "{}({})", function.name(), argument),
        }
    }
}

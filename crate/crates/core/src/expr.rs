//! Small recursive-descent parser for surface expressions in `x`.
//!
//! Grammar: `+ - * / ^`, parentheses, `sin cos exp tanh`, numeric literals,
//! `pi`, and the variable `x`. Differentiation is analytic: the tree is
//! evaluated in truncated Taylor (jet) arithmetic, so derivatives of any
//! order come out of one pass.

use crate::error::{Error, Result};
use crate::jet;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Sin(Box<Expr>),
    Cos(Box<Expr>),
    Exp(Box<Expr>),
    Tanh(Box<Expr>),
}

impl Expr {
    pub fn parse(text: &str) -> Result<Expr> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Expr::Num(c) => *c,
            Expr::Var => x,
            Expr::Neg(a) => -a.eval(x),
            Expr::Add(a, b) => a.eval(x) + b.eval(x),
            Expr::Sub(a, b) => a.eval(x) - b.eval(x),
            Expr::Mul(a, b) => a.eval(x) * b.eval(x),
            Expr::Div(a, b) => a.eval(x) / b.eval(x),
            Expr::Pow(a, b) => {
                let base = a.eval(x);
                let e = b.eval(x);
                if e.fract() == 0.0 && e.abs() < 64.0 {
                    base.powi(e as i32)
                } else {
                    base.powf(e)
                }
            }
            Expr::Sin(a) => a.eval(x).sin(),
            Expr::Cos(a) => a.eval(x).cos(),
            Expr::Exp(a) => a.eval(x).exp(),
            Expr::Tanh(a) => a.eval(x).tanh(),
        }
    }

    /// Taylor expansion to order `n` at `x0` (plain coefficients).
    pub fn eval_jet(&self, x0: f64, n: usize) -> Result<Vec<f64>> {
        Ok(match self {
            Expr::Num(c) => jet::cnst(*c, n),
            Expr::Var => jet::var(x0, n),
            Expr::Neg(a) => jet::neg(&a.eval_jet(x0, n)?),
            Expr::Add(a, b) => jet::add(&a.eval_jet(x0, n)?, &b.eval_jet(x0, n)?),
            Expr::Sub(a, b) => jet::sub(&a.eval_jet(x0, n)?, &b.eval_jet(x0, n)?),
            Expr::Mul(a, b) => jet::mul(&a.eval_jet(x0, n)?, &b.eval_jet(x0, n)?),
            Expr::Div(a, b) => {
                let d = b.eval_jet(x0, n)?;
                if d[0] == 0.0 {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("division by zero at x = {x0}"),
                    });
                }
                jet::div(&a.eval_jet(x0, n)?, &d)
            }
            Expr::Pow(a, b) => {
                let base = a.eval_jet(x0, n)?;
                // exponent must be a constant for jets
                let e = match b.constant() {
                    Some(e) => e,
                    None => {
                        return Err(Error::Parse {
                            pos: 0,
                            msg: "exponent must be constant".into(),
                        })
                    }
                };
                if e.fract() == 0.0 && e >= 0.0 && e < 64.0 {
                    jet::powi(&base, e as u32)
                } else {
                    if base[0] <= 0.0 {
                        return Err(Error::Parse {
                            pos: 0,
                            msg: format!("non-integer power of non-positive base at x = {x0}"),
                        });
                    }
                    jet::powf(&base, e)
                }
            }
            Expr::Sin(a) => jet::sin(&a.eval_jet(x0, n)?),
            Expr::Cos(a) => jet::cos(&a.eval_jet(x0, n)?),
            Expr::Exp(a) => jet::exp(&a.eval_jet(x0, n)?),
            Expr::Tanh(a) => jet::tanh(&a.eval_jet(x0, n)?),
        })
    }

    fn constant(&self) -> Option<f64> {
        match self {
            Expr::Num(c) => Some(*c),
            Expr::Neg(a) => a.constant().map(|c| -c),
            _ => None,
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat(b'-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if self.eat(b'+') {
            return self.factor();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            // right-associative; allow a signed factor as exponent
            let e = self.factor()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.err("unexpected end of input"))?;
        if c == b'(' {
            self.pos += 1;
            self.skip_ws();
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() || c == b'.' {
            return self.number();
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self
                .peek()
                .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                .unwrap_or(false)
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            self.skip_ws();
            return match name {
                "x" => Ok(Expr::Var),
                "pi" => Ok(Expr::Num(std::f64::consts::PI)),
                "sin" | "cos" | "exp" | "tanh" => {
                    if !self.eat(b'(') {
                        self.pos = start;
                        return Err(self.err("expected '(' after function name"));
                    }
                    let arg = Box::new(self.expr()?);
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    Ok(match name {
                        "sin" => Expr::Sin(arg),
                        "cos" => Expr::Cos(arg),
                        "exp" => Expr::Exp(arg),
                        _ => Expr::Tanh(arg),
                    })
                }
                _ => {
                    self.pos = start;
                    Err(self.err(&format!("unknown identifier '{name}'")))
                }
            };
        }
        Err(self.err("expected number, 'x', function, or '('"))
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit() || c == b'.')
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        // exponent part
        if matches!(self.peek(), Some(b'e') | Some(b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+') | Some(b'-')) {
                self.pos += 1;
            }
            if self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: f64 = text.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("bad numeric literal '{text}'"),
        })?;
        self.skip_ws();
        Ok(Expr::Num(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let e = Expr::parse("0.3*sin(x) + x^2/4 - exp(-x)").unwrap();
        let x = 0.8_f64;
        let want = 0.3 * x.sin() + x * x / 4.0 - (-x).exp();
        assert!((e.eval(x) - want).abs() < 1e-15);
    }

    #[test]
    fn jet_matches_finite_differences() {
        let e = Expr::parse("tanh(x)*cos(2*x) + 0.1*x^3").unwrap();
        let x0 = 0.37;
        let j = e.eval_jet(x0, 3).unwrap();
        let h = 1e-5;
        let fd1 = (e.eval(x0 + h) - e.eval(x0 - h)) / (2.0 * h);
        let fd2 = (e.eval(x0 + h) - 2.0 * e.eval(x0) + e.eval(x0 - h)) / (h * h);
        assert!((j[1] - fd1).abs() < 1e-9);
        assert!((2.0 * j[2] - fd2).abs() < 1e-5);
    }

    #[test]
    fn reports_error_position() {
        match Expr::parse("0.3*sin(x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 9),
            other => panic!("expected parse error, got {other:?}"),
        }
        match Expr::parse("2*y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn power_right_associative_and_signed() {
        let e = Expr::parse("x^-2").unwrap();
        assert!((e.eval(2.0) - 0.25).abs() < 1e-15);
        let e = Expr::parse("2^3^2").unwrap(); // 2^(3^2)
        assert!((e.eval(0.0) - 512.0).abs() < 1e-12);
    }
}

//! Expressions over GF(2)(t).
//!
//! ```text
//! expr   := [sign] term { ("+" | "-") term }
//! term   := factor { ("*" | "/") factor }
//! factor := atom [ "^" [sign] digits ]
//! atom   := "t" | "0" | "1" | "(" expr ")"
//! ```
//!
//! Signs are accepted and ignored: `-x = x` in characteristic 2.

use funident::gf2fun::Gf2Rat;
use thiserror::Error;

/// Exponent magnitudes above this are rejected at parse time.
pub const MAX_EXPONENT: i64 = 1 << 20;
/// Evaluation refuses to build a power whose degree would exceed this.
pub const MAX_DEGREE: usize = 1 << 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    T,
    Zero,
    One,
    Add(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
    Quotient(Box<ExprAst>, Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    ZeroDenominator,
    #[error("power would exceed degree {MAX_DEGREE}")]
    TooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let _ = self.eat(b'+') || self.eat(b'-');
        let mut lhs = self.term()?;
        while self.eat(b'+') || self.eat(b'-') {
            lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = ExprAst::Quotient(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected integer exponent");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let e = match digits.parse::<i64>() {
            Ok(e) if e <= MAX_EXPONENT => e,
            _ => {
                self.pos = start;
                return self.error(format!("exponent exceeds {MAX_EXPONENT}"));
            }
        };
        Ok(ExprAst::Pow(Box::new(base), if negative { -e } else { e }))
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let atom = match self.peek() {
            Some(b't') => ExprAst::T,
            Some(b'0') => ExprAst::Zero,
            Some(b'1') => ExprAst::One,
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.error("expected ')'");
                }
                return Ok(inner);
            }
            Some(_) => return self.error("expected 't', '0', '1' or '('"),
            None => return self.error("unexpected end of input"),
        };
        self.pos += 1;
        if self.src.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
            return self.error("unexpected character");
        }
        Ok(atom)
    }
}

pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return p.error("unexpected trailing input");
    }
    Ok(ast)
}

fn degree_bound(x: &Gf2Rat) -> usize {
    x.num().degree().unwrap_or(0).max(x.den().degree().unwrap_or(0))
}

impl ExprAst {
    pub fn eval(&self) -> Result<Gf2Rat, EvalError> {
        Ok(match self {
            Self::T => Gf2Rat::t(),
            Self::Zero => Gf2Rat::zero(),
            Self::One => Gf2Rat::one(),
            Self::Add(a, b) => a.eval()?.add(&b.eval()?),
            Self::Mul(a, b) => a.eval()?.mul(&b.eval()?),
            Self::Pow(a, e) => {
                let base = a.eval()?;
                let grows = degree_bound(&base)
                    .checked_mul(e.unsigned_abs() as usize)
                    .is_none_or(|d| d > MAX_DEGREE);
                if grows {
                    return Err(EvalError::TooLarge);
                }
                base.pow(*e).map_err(|_| EvalError::ZeroDenominator)?
            }
            Self::Quotient(a, b) => a.eval()?.div(&b.eval()?).map_err(|_| EvalError::ZeroDenominator)?,
        })
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<Gf2Rat, ExprError> {
    Ok(parse_expr(text)?.eval()?)
}

/// Canonical text form: descending degree, parentheses only around
/// multi-term numerators and denominators.
pub fn render_expr(value: &Gf2Rat) -> String {
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use funident::gf2fun::Gf2Poly;

    fn ev(s: &str) -> Gf2Rat {
        eval_str(s).unwrap()
    }

    #[test]
    fn quotient_of_polynomials() {
        let x = ev("(t^3+t+1)/(t^2+t)");
        assert_eq!(x.num(), &Gf2Poly::from_exponents([3, 1, 0]));
        assert_eq!(x.den(), &Gf2Poly::from_exponents([2, 1]));
        assert_eq!(render_expr(&x), "(t^3+t+1)/(t^2+t)");
    }

    #[test]
    fn char_two_and_negative_powers() {
        assert!(ev("t+t").is_zero());
        assert_eq!(ev("t - 1"), ev("t+1"));
        assert_eq!(ev("-t"), ev("t"));
        assert_eq!(ev("t^-1"), Gf2Rat::t_pow(-1));
        assert_eq!(render_expr(&ev("t^-1")), "1/t");
        assert_eq!(ev(" ( t * t ) ^ 2 "), Gf2Rat::t_pow(4));
        assert_eq!(ev("1/t/t"), Gf2Rat::t_pow(-2));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_expr(&Gf2Rat::zero()), "0");
        assert_eq!(render_expr(&ev("(t^2+1)/t")), "(t^2+1)/t");
        assert_eq!(render_expr(&ev("t^-2")), "1/t^2");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let cases = [("", 0), ("t+", 2), ("t^", 2), ("(t+1", 4), ("2", 0), ("t t", 2), ("tt", 1), ("t^99999999999", 2)];
        for (src, offset) in cases {
            assert_eq!(parse_expr(src).unwrap_err().offset, offset, "{src:?}");
        }
    }

    #[test]
    fn zero_denominator_is_an_evaluation_error() {
        for src in ["1/0", "0^-1", "1/(t+t)"] {
            let ast = parse_expr(src).unwrap();
            assert_eq!(ast.eval(), Err(EvalError::ZeroDenominator), "{src}");
        }
        assert_eq!(ev("0^0"), Gf2Rat::one());
    }

    #[test]
    fn huge_powers_are_refused() {
        assert_eq!(eval_str("(t^1000000)^1000000"), Err(EvalError::TooLarge.into()));
    }
}

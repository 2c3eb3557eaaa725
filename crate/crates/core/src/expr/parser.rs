use super::{BinaryOp, Expr, ParseError, UnaryOp};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn tokenize(text: &'a str) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut lexer = Lexer { text, pos: 0 };
        let mut out = Vec::new();
        loop {
            let (offset, token) = lexer.next_token()?;
            let end = token == Token::End;
            out.push((offset, token));
            if end {
                return Ok(out);
            }
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn next_token(&mut self) -> Result<(usize, Token), ParseError> {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(c) = self.peek() else {
            return Ok((start, Token::End));
        };
        let token = match c {
            b'0'..=b'9' | b'.' => self.number()?,
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                Token::Ident(self.text[start..self.pos].to_string())
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                self.pos += 1;
                Token::Op(c as char)
            }
            b'(' => {
                self.pos += 1;
                Token::LParen
            }
            b')' => {
                self.pos += 1;
                Token::RParen
            }
            _ => {
                let ch = self.text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        Ok((start, token))
    }

    fn number(&mut self) -> Result<Token, ParseError> {
        let start = self.pos;
        let bytes = self.text.as_bytes();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'.') {
            self.pos += 1;
        }
        // exponent only when followed by digits, so `2*e` still reads the constant
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let mut look = self.pos + 1;
            if matches!(bytes.get(look), Some(b'+' | b'-')) {
                look += 1;
            }
            if matches!(bytes.get(look), Some(c) if c.is_ascii_digit()) {
                self.pos = look;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
            }
        }
        let literal = &self.text[start..self.pos];
        literal
            .parse::<f64>()
            .map(Token::Number)
            .map_err(|_| ParseError::Syntax {
                offset: start,
                message: format!("malformed number `{literal}`"),
            })
    }
}

struct Parser<T> {
    tokens: Vec<(usize, Token)>,
    index: usize,
    _scalar: std::marker::PhantomData<T>,
}

/// Parses `text` into an expression over the variable `t` (alias `x`).
pub fn parse<T: Scalar>(text: &str) -> Result<Expr<T>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Syntax {
            offset: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser::<T> {
        tokens: Lexer::tokenize(text)?,
        index: 0,
        _scalar: std::marker::PhantomData,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        Token::End => Ok(expr),
        other => Err(parser.unexpected(parser.offset(), &other.clone())),
    }
}

impl<T: Scalar> Parser<T> {
    fn peek(&self) -> &Token {
        &self.tokens[self.index].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.index].0
    }

    fn advance(&mut self) -> Token {
        let token = self.tokens[self.index].1.clone();
        if token != Token::End {
            self.index += 1;
        }
        token
    }

    fn unexpected(&self, offset: usize, token: &Token) -> ParseError {
        let message = match token {
            Token::End => "unexpected end of input".to_string(),
            Token::Number(n) => format!("unexpected number {n}"),
            Token::Ident(name) => format!("unexpected identifier `{name}`"),
            Token::Op(c) => format!("unexpected operator `{c}`"),
            Token::LParen => "unexpected `(`".to_string(),
            Token::RParen => "unexpected `)`".to_string(),
        };
        ParseError::Syntax { offset, message }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Token::RParen => {
                self.advance();
                Ok(())
            }
            _ => Err(ParseError::Syntax {
                offset: self.offset(),
                message: "expected `)`".into(),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr<T>, ParseError> {
        let mut left = self.term()?;
        loop {
            let op = match self.peek() {
                Token::Op('+') => BinaryOp::Add,
                Token::Op('-') => BinaryOp::Sub,
                _ => return Ok(left),
            };
            self.advance();
            let right = self.term()?;
            left = Expr::binary(op, left, right);
        }
    }

    fn term(&mut self) -> Result<Expr<T>, ParseError> {
        let mut left = self.unary()?;
        loop {
            let op = match self.peek() {
                Token::Op('*') => BinaryOp::Mul,
                Token::Op('/') => BinaryOp::Div,
                _ => return Ok(left),
            };
            self.advance();
            let right = self.unary()?;
            left = Expr::binary(op, left, right);
        }
    }

    fn unary(&mut self) -> Result<Expr<T>, ParseError> {
        if *self.peek() == Token::Op('-') {
            self.advance();
            let child = self.unary()?;
            return Ok(Expr::unary(UnaryOp::Neg, child));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr<T>, ParseError> {
        let base = self.primary()?;
        if *self.peek() == Token::Op('^') {
            self.advance();
            let exponent = self.unary()?;
            return Ok(Expr::binary(BinaryOp::Pow, base, exponent));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr<T>, ParseError> {
        let offset = self.offset();
        match self.advance() {
            Token::Number(n) => Ok(Expr::Constant(T::lit(n))),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Token::Ident(name) => match name.as_str() {
                "t" | "x" => Ok(Expr::Variable),
                "pi" => Ok(Expr::Constant(T::PI())),
                "e" => Ok(Expr::Constant(T::E())),
                _ => match UnaryOp::from_name(&name) {
                    Some(op) => {
                        if *self.peek() != Token::LParen {
                            return Err(ParseError::Syntax {
                                offset: self.offset(),
                                message: format!("expected `(` after `{name}`"),
                            });
                        }
                        self.advance();
                        let arg = self.expr()?;
                        self.expect_rparen()?;
                        Ok(Expr::unary(op, arg))
                    }
                    None => Err(ParseError::UnknownIdentifier { offset, name }),
                },
            },
            other => Err(self.unexpected(offset, &other)),
        }
    }
}

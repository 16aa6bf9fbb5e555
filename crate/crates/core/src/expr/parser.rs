use super::ast::{BinOp, Expr, Func, NamedConst, Var};
use super::lexer::{Token, TokenKind};
use super::ExprError;

/// Parses a token stream produced by [`super::tokenize`]. `source_len` is the
/// length of the original text and is used as the position of end-of-input
/// errors.
pub fn parse(tokens: &[Token], source_len: usize) -> Result<Expr, ExprError> {
    let mut p = Parser {
        tokens,
        cursor: 0,
        end: source_len,
    };
    let expr = p.expr()?;
    match p.peek() {
        None => Ok(expr),
        Some(t) if t.kind == TokenKind::RParen => Err(p.error_at(t.pos, "unbalanced ')'")),
        Some(t) => Err(p.error_at(t.pos, &format!("unexpected {:?}", t.text))),
    }
}

struct Parser<'a> {
    tokens: &'a [Token],
    cursor: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.cursor)
    }

    fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.cursor);
        self.cursor += 1;
        t
    }

    fn error_at(&self, pos: usize, message: &str) -> ExprError {
        ExprError::Parse {
            pos,
            message: message.to_string(),
        }
    }

    fn eof(&self, what: &str) -> ExprError {
        self.error_at(self.end, &format!("unexpected end of input, expected {what}"))
    }

    fn peek_operator(&self) -> Option<char> {
        match self.peek()?.kind {
            TokenKind::Operator(c) => Some(c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_operator() {
            self.cursor += 1;
            let op = if c == '+' { BinOp::Add } else { BinOp::Sub };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_operator() {
            self.cursor += 1;
            let op = if c == '*' { BinOp::Mul } else { BinOp::Div };
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek_operator() == Some('-') {
            self.cursor += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if self.peek_operator() == Some('^') {
            self.cursor += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Binary(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let tok = self.next().ok_or_else(|| self.eof("an operand"))?;
        match &tok.kind {
            TokenKind::Number(v) => Ok(Expr::Num(*v)),
            TokenKind::LParen => {
                let inner = self.expr()?;
                self.expect_rparen(tok)?;
                Ok(inner)
            }
            TokenKind::Ident => self.identifier(tok),
            _ => Err(self.error_at(tok.pos, &format!("unexpected {:?}, expected an operand", tok.text))),
        }
    }

    fn expect_rparen(&mut self, open: &Token) -> Result<(), ExprError> {
        match self.next() {
            Some(t) if t.kind == TokenKind::RParen => Ok(()),
            Some(t) => Err(self.error_at(t.pos, &format!("expected ')' to close '(' at {}", open.pos))),
            None => Err(self.error_at(self.end, &format!("unbalanced '(' at {}", open.pos))),
        }
    }

    fn identifier(&mut self, tok: &'a Token) -> Result<Expr, ExprError> {
        let is_call = matches!(self.peek(), Some(t) if t.kind == TokenKind::LParen);
        match (tok.text.as_str(), is_call) {
            ("x", false) => Ok(Expr::Var(Var::X)),
            ("y", false) => Ok(Expr::Var(Var::Y)),
            ("pi", false) => Ok(Expr::Const(NamedConst::Pi)),
            ("e", false) => Ok(Expr::Const(NamedConst::E)),
            (name, true) => {
                let func = Func::from_name(name)
                    .ok_or_else(|| self.error_at(tok.pos, &format!("unknown function {name:?}")))?;
                let open = self.next().expect("peeked '('");
                let args = self.arguments(open)?;
                if args.len() != func.arity() {
                    return Err(self.error_at(
                        tok.pos,
                        &format!("{name} takes {} argument(s), got {}", func.arity(), args.len()),
                    ));
                }
                Ok(Expr::Call(func, args))
            }
            (name, false) => {
                let message = if Func::from_name(name).is_some() {
                    format!("function {name:?} must be called with parentheses")
                } else {
                    format!("unknown identifier {name:?}; variables are x and y")
                };
                Err(self.error_at(tok.pos, &message))
            }
        }
    }

    fn arguments(&mut self, open: &Token) -> Result<Vec<Expr>, ExprError> {
        let mut args = Vec::new();
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::RParen) {
            self.cursor += 1;
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            match self.next() {
                Some(t) if t.kind == TokenKind::Comma => continue,
                Some(t) if t.kind == TokenKind::RParen => return Ok(args),
                Some(t) => return Err(self.error_at(t.pos, &format!("expected ',' or ')', found {:?}", t.text))),
                None => return Err(self.error_at(self.end, &format!("unbalanced '(' at {}", open.pos))),
            }
        }
    }
}

//! Recursive-descent parser for `.rl` scripts: one declaration or command
//! per line, with positioned errors naming the expectation.

use thiserror::Error;

use crate::ast::*;
use crate::lexer::{lex, LexError, Spanned, Tok};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error(transparent)]
    Lex(#[from] LexError),
    #[error("line {line}: expected {expected}, found {found}")]
    Unexpected {
        line: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}: unknown directive {found}")]
    UnknownDirective { line: usize, found: String },
}

pub fn parse(source: &str) -> Result<Script, ParseError> {
    let toks = lex(source)?;
    let mut p = Parser { toks, pos: 0 };
    let mut lines = Vec::new();
    while !p.at_end() {
        let line = p.current_line();
        let decl = p.parse_line()?;
        p.expect_newline()?;
        lines.push(Line { decl, line });
    }
    Ok(Script { lines })
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn current_line(&self) -> usize {
        self.toks.get(self.pos).map_or(0, |s| s.line)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|s| s.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError::Unexpected {
            line: self.current_line(),
            expected: expected.to_string(),
            found: self
                .peek()
                .map_or("end of input".to_string(), |t| t.to_string()),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&tok.to_string()))
        }
    }

    fn expect_newline(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            return Ok(());
        }
        self.expect(Tok::Newline)
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => match self.bump() {
                Some(Tok::Ident(s)) => Ok(s),
                _ => unreachable!(),
            },
            _ => Err(self.error("identifier")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.bump() {
                Some(Tok::Int(n)) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.error("integer")),
        }
    }

    /// A point label: identifier, integer, or quoted string.
    fn label(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::Str(_)) => {
                match self.bump() {
                    Some(Tok::Ident(s)) | Some(Tok::Str(s)) => Ok(s),
                    Some(Tok::Int(n)) => Ok(n.to_string()),
                    _ => unreachable!(),
                }
            }
            _ => Err(self.error("point label")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(kw)),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                true
            }
            _ => false,
        }
    }

    fn label_list(&mut self) -> Result<Vec<String>, ParseError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.peek() == Some(&Tok::RBrace) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            match self.peek() {
                Some(Tok::Comma) => {
                    self.pos += 1;
                }
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.error(", or }")),
            }
        }
    }

    fn parse_line(&mut self) -> Result<Decl, ParseError> {
        let head = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(self.error("declaration or command")),
        };
        match head.as_str() {
            "universe" => self.universe_decl(),
            "relation" => self.relation_decl(),
            "set" => self.set_decl(),
            "statement" => self.statement_decl(),
            "plurality" => self.plurality_decl(),
            "order" => self.order_line(),
            "classify" => self.classify_cmd(),
            "truth_domain" => self.truth_domain_cmd(),
            "implication_type" => self.implication_type_cmd(),
            "taxonomy" => self.taxonomy_cmd(),
            "filter?" => self.filter_cmd(),
            "group?" => self.group_cmd(),
            "compare" => self.compare_cmd(),
            "laws" => self.laws_cmd(),
            "refute_classical" => self.refute_cmd(),
            "bijection" => self.bijection_cmd(),
            "diagonal" => self.diagonal_cmd(),
            "cantor?" => self.cantor_cmd(),
            other => Err(ParseError::UnknownDirective {
                line: self.current_line(),
                found: other.to_string(),
            }),
        }
    }

    fn universe_decl(&mut self) -> Result<Decl, ParseError> {
        self.keyword("universe")?;
        let name = self.ident()?;
        self.expect(Tok::Assign)?;
        let labels = if let Some(Tok::Int(_)) = self.peek() {
            let lo = self.int()?;
            self.expect(Tok::DotDot)?;
            let hi = self.int()?;
            if hi < lo {
                return Err(self.error("nonempty range"));
            }
            (lo..=hi).map(|i| i.to_string()).collect()
        } else {
            self.label_list()?
        };
        Ok(Decl::Universe { name, labels })
    }

    fn relation_decl(&mut self) -> Result<Decl, ParseError> {
        self.keyword("relation")?;
        let name = self.ident()?;
        if self.peek() == Some(&Tok::LParen) {
            self.expect(Tok::LParen)?;
            self.keyword("m")?;
            self.expect(Tok::Comma)?;
            self.keyword("n")?;
            self.expect(Tok::RParen)?;
            self.expect(Tok::Define)?;
            let pred = self.bool_expr()?;
            Ok(Decl::RelationPred { name, pred })
        } else {
            self.expect(Tok::Assign)?;
            self.expect(Tok::LBrace)?;
            let mut pairs = Vec::new();
            if self.peek() == Some(&Tok::RBrace) {
                self.pos += 1;
                return Ok(Decl::RelationPairs { name, pairs });
            }
            loop {
                self.expect(Tok::LParen)?;
                let a = self.label()?;
                self.expect(Tok::Comma)?;
                let b = self.label()?;
                self.expect(Tok::RParen)?;
                pairs.push((a, b));
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.pos += 1;
                    }
                    Some(Tok::RBrace) => {
                        self.pos += 1;
                        return Ok(Decl::RelationPairs { name, pairs });
                    }
                    _ => return Err(self.error(", or }")),
                }
            }
        }
    }

    fn set_decl(&mut self) -> Result<Decl, ParseError> {
        self.keyword("set")?;
        let name = self.ident()?;
        self.expect(Tok::Assign)?;
        let labels = self.label_list()?;
        Ok(Decl::Set { name, labels })
    }

    fn statement_decl(&mut self) -> Result<Decl, ParseError> {
        self.keyword("statement")?;
        let name = self.ident()?;
        self.expect(Tok::Define)?;
        let expr = self.stmt_expr()?;
        Ok(Decl::Statement { name, expr })
    }

    fn plurality_decl(&mut self) -> Result<Decl, ParseError> {
        self.keyword("plurality")?;
        let name = self.ident()?;
        self.expect(Tok::Assign)?;
        let kind = self.ident()?;
        let spec = match kind.as_str() {
            "metric_balls" => {
                self.expect(Tok::LParen)?;
                if self.eat_keyword("open") {
                    self.expect(Tok::RParen)?;
                    PluralitySpec::MetricBallsOpen
                } else {
                    let mut radii = vec![self.int()?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        radii.push(self.int()?);
                    }
                    self.expect(Tok::RParen)?;
                    PluralitySpec::MetricBalls(radii)
                }
            }
            "group" => {
                self.expect(Tok::LParen)?;
                let mut perms = vec![self.label_list()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    perms.push(self.label_list()?);
                }
                self.expect(Tok::RParen)?;
                PluralitySpec::Group(perms)
            }
            "family" => {
                self.expect(Tok::LParen)?;
                let mut names = vec![self.ident()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    names.push(self.ident()?);
                }
                self.expect(Tok::RParen)?;
                PluralitySpec::Family(names)
            }
            _ => return Err(self.error("metric_balls, group or family")),
        };
        Ok(Decl::Plurality { name, spec })
    }

    fn order_line(&mut self) -> Result<Decl, ParseError> {
        self.keyword("order")?;
        let name = self.ident()?;
        if self.peek() == Some(&Tok::Assign) {
            self.pos += 1;
            let kind = self.ident()?;
            let spec = match kind.as_str() {
                "from" => OrderSpec::From(self.ident()?),
                "zigzag" => {
                    self.expect(Tok::LParen)?;
                    let m = self.int()? as usize;
                    self.expect(Tok::RParen)?;
                    OrderSpec::Zigzag(m)
                }
                "product_grid" => {
                    self.expect(Tok::LParen)?;
                    let m = self.int()? as usize;
                    self.expect(Tok::RParen)?;
                    OrderSpec::ProductGrid(m)
                }
                "lex_grid" => {
                    self.expect(Tok::LParen)?;
                    let m = self.int()? as usize;
                    self.expect(Tok::RParen)?;
                    OrderSpec::LexGrid(m)
                }
                _ => return Err(self.error("from, zigzag, product_grid or lex_grid")),
            };
            return Ok(Decl::Order { name, spec });
        }
        // Report command: `order NAME [expect ...]`.
        let expect = if self.eat_keyword("expect") {
            let kind = self.ident()?;
            let mut e = OrderExpect {
                kind,
                ..OrderExpect::default()
            };
            loop {
                if self.eat_keyword("chain") {
                    e.chain = Some(self.label_list()?);
                } else if self.eat_keyword("minimal") {
                    if self.eat_keyword("none") {
                        e.minimal = Some(None);
                    } else {
                        e.minimal = Some(Some(self.label()?));
                    }
                } else if self.eat_keyword("maximals") {
                    e.maximals = Some(self.label_list()?);
                } else if self.eat_keyword("roots") {
                    e.roots = Some(self.label_list()?);
                } else {
                    break;
                }
            }
            Some(e)
        } else {
            None
        };
        Ok(Decl::Command(Command::OrderReport { name, expect }))
    }

    fn class_expect(&mut self) -> Result<Option<ClassExpect>, ParseError> {
        if !self.eat_keyword("expect") {
            return Ok(None);
        }
        let class = self.ident()?;
        let domain = if self.eat_keyword("domain") {
            Some(self.label_list()?)
        } else {
            None
        };
        Ok(Some(ClassExpect { class, domain }))
    }

    fn classify_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("classify")?;
        let expr = self.stmt_expr()?;
        let expect = self.class_expect()?;
        Ok(Decl::Command(Command::Classify { expr, expect }))
    }

    fn truth_domain_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("truth_domain")?;
        let expr = self.stmt_expr()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.label_list()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::TruthDomain { expr, expect }))
    }

    fn implication_type_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("implication_type")?;
        let r = self.ident()?;
        let s = self.ident()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.ident()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::ImplicationType { r, s, expect }))
    }

    fn taxonomy_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("taxonomy")?;
        let name = self.ident()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.ident()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::Taxonomy { name, expect }))
    }

    fn bool_flag(&mut self) -> Result<bool, ParseError> {
        if self.eat_keyword("true") {
            Ok(true)
        } else if self.eat_keyword("false") {
            Ok(false)
        } else {
            Err(self.error("true or false"))
        }
    }

    fn filter_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("filter?")?;
        let name = self.ident()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.bool_flag()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::FilterQ { name, expect }))
    }

    fn group_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("group?")?;
        let name = self.ident()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.bool_flag()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::GroupQ { name, expect }))
    }

    fn compare_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("compare")?;
        let order = self.ident()?;
        let x = self.label()?;
        let y = self.label()?;
        let expect = if self.eat_keyword("expect") {
            Some(self.ident()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::Compare { order, x, y, expect }))
    }

    fn laws_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("laws")?;
        let mut trials = None;
        let mut seed = None;
        loop {
            if self.eat_keyword("trials") {
                trials = Some(self.int()? as u64);
            } else if self.eat_keyword("seed") {
                seed = Some(self.int()? as u64);
            } else {
                break;
            }
        }
        Ok(Decl::Command(Command::Laws { trials, seed }))
    }

    fn refute_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("refute_classical")?;
        let seed = if self.eat_keyword("seed") {
            Some(self.int()? as u64)
        } else {
            None
        };
        Ok(Decl::Command(Command::RefuteClassical { seed }))
    }

    fn bijection_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("bijection")?;
        let x = self.ident()?;
        let y = self.ident()?;
        let p = self.ident()?;
        let q = self.ident()?;
        let expect_bijective = if self.eat_keyword("expect") {
            self.keyword("bijective")?;
            true
        } else {
            false
        };
        Ok(Decl::Command(Command::Bijection {
            x,
            y,
            p,
            q,
            expect_bijective,
        }))
    }

    fn diagonal_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("diagonal")?;
        self.keyword("base")?;
        let base = self.int()? as u32;
        let rule = if self.eat_keyword("flip") {
            DiagRule::Flip
        } else if self.eat_keyword("adversarial") {
            DiagRule::Adversarial
        } else {
            return Err(self.error("flip or adversarial"));
        };
        self.keyword("words")?;
        self.expect(Tok::LBrace)?;
        let mut words = Vec::new();
        loop {
            match self.bump() {
                Some(Tok::Str(s)) => words.push(s),
                _ => return Err(self.error("word literal string")),
            }
            match self.peek() {
                Some(Tok::Comma) => {
                    self.pos += 1;
                }
                Some(Tok::RBrace) => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error(", or }")),
            }
        }
        let mut expect_differs = false;
        let mut expect_hazard = false;
        if self.eat_keyword("expect") {
            loop {
                if self.eat_keyword("differs") {
                    expect_differs = true;
                } else if self.eat_keyword("hazard") {
                    expect_hazard = true;
                } else {
                    break;
                }
            }
        }
        Ok(Decl::Command(Command::Diagonal {
            base,
            rule,
            words,
            expect_differs,
            expect_hazard,
        }))
    }

    fn cantor_cmd(&mut self) -> Result<Decl, ParseError> {
        self.keyword("cantor?")?;
        let numer = self.int()?;
        self.expect(Tok::Slash)?;
        let denom = self.int()?;
        self.keyword("depth")?;
        let depth = self.int()? as usize;
        let expect = if self.eat_keyword("expect") {
            Some(self.bool_flag()?)
        } else {
            None
        };
        Ok(Decl::Command(Command::CantorQ {
            numer,
            denom,
            depth,
            expect,
        }))
    }

    // ---- statement expressions ----

    fn tag_kind(&mut self) -> Result<TagKind, ParseError> {
        if self.eat_keyword("tr") {
            Ok(TagKind::Tr)
        } else if self.eat_keyword("li") {
            Ok(TagKind::Li)
        } else {
            Err(self.error("tr or li"))
        }
    }

    fn stmt_pair(&mut self) -> Result<(StmtExpr, StmtExpr), ParseError> {
        self.expect(Tok::LParen)?;
        let a = self.stmt_expr()?;
        self.expect(Tok::Comma)?;
        let b = self.stmt_expr()?;
        self.expect(Tok::RParen)?;
        Ok((a, b))
    }

    fn stmt_expr(&mut self) -> Result<StmtExpr, ParseError> {
        let head = self.ident()?;
        // A connective name followed by '(' is a connective; otherwise the
        // identifier names a declared relation or statement.
        let call = self.peek() == Some(&Tok::LParen);
        Ok(match (head.as_str(), call) {
            ("and", true) => {
                let (a, b) = self.stmt_pair()?;
                StmtExpr::And(Box::new(a), Box::new(b))
            }
            ("or", true) => {
                let (a, b) = self.stmt_pair()?;
                StmtExpr::Or(Box::new(a), Box::new(b))
            }
            ("implies", true) => {
                let (a, b) = self.stmt_pair()?;
                StmtExpr::Implies(Box::new(a), Box::new(b))
            }
            ("iff", true) => {
                let (a, b) = self.stmt_pair()?;
                StmtExpr::Iff(Box::new(a), Box::new(b))
            }
            ("tag_tr", true) => {
                self.expect(Tok::LParen)?;
                let a = self.stmt_expr()?;
                self.expect(Tok::RParen)?;
                StmtExpr::TagTr(Box::new(a))
            }
            ("tag_li", true) => {
                self.expect(Tok::LParen)?;
                let a = self.stmt_expr()?;
                self.expect(Tok::RParen)?;
                StmtExpr::TagLi(Box::new(a))
            }
            ("forall", true) | ("exists", true) => {
                self.expect(Tok::LParen)?;
                let names = self.label_list()?;
                self.expect(Tok::Comma)?;
                let t = self.tag_kind()?;
                self.expect(Tok::RParen)?;
                if head == "forall" {
                    StmtExpr::ForAll(names, t)
                } else {
                    StmtExpr::Exists(names, t)
                }
            }
            ("chain", true) => {
                self.expect(Tok::LParen)?;
                self.expect(Tok::LBrace)?;
                let mut parts = vec![self.stmt_expr()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    parts.push(self.stmt_expr()?);
                }
                self.expect(Tok::RBrace)?;
                self.expect(Tok::Comma)?;
                let bound = self.int()? as usize;
                self.expect(Tok::RParen)?;
                StmtExpr::Chain(parts, bound)
            }
            _ => StmtExpr::Name(head),
        })
    }

    // ---- predicate expressions ----

    fn bool_expr(&mut self) -> Result<BoolExpr, ParseError> {
        let mut lhs = self.bool_term()?;
        while self.eat_keyword("or") {
            let rhs = self.bool_term()?;
            lhs = BoolExpr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn bool_term(&mut self) -> Result<BoolExpr, ParseError> {
        let mut lhs = self.bool_factor()?;
        while self.eat_keyword("and") {
            let rhs = self.bool_factor()?;
            lhs = BoolExpr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn bool_factor(&mut self) -> Result<BoolExpr, ParseError> {
        if self.eat_keyword("not") {
            return Ok(BoolExpr::Not(Box::new(self.bool_factor()?)));
        }
        // '(' may open a grouped boolean expression or a parenthesized
        // arithmetic operand of a comparison: try boolean, backtrack.
        if self.peek() == Some(&Tok::LParen) {
            let save = self.pos;
            self.pos += 1;
            if let Ok(inner) = self.bool_expr() {
                if self.peek() == Some(&Tok::RParen) {
                    self.pos += 1;
                    return Ok(inner);
                }
            }
            self.pos = save;
        }
        let lhs = self.arith_expr()?;
        if self.eat_keyword("in") {
            self.expect(Tok::LBrace)?;
            let mut items = vec![self.int()?];
            while self.peek() == Some(&Tok::Comma) {
                self.pos += 1;
                items.push(self.int()?);
            }
            self.expect(Tok::RBrace)?;
            return Ok(BoolExpr::In(lhs, items));
        }
        let op = match self.peek() {
            Some(Tok::EqEq) => CmpOp::Eq,
            Some(Tok::Ne) => CmpOp::Ne,
            Some(Tok::Lt) => CmpOp::Lt,
            Some(Tok::Le) => CmpOp::Le,
            Some(Tok::Gt) => CmpOp::Gt,
            Some(Tok::Ge) => CmpOp::Ge,
            _ => return Err(self.error("comparison operator or in")),
        };
        self.pos += 1;
        let rhs = self.arith_expr()?;
        Ok(BoolExpr::Cmp(op, lhs, rhs))
    }

    fn arith_expr(&mut self) -> Result<ArithExpr, ParseError> {
        let mut lhs = self.arith_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = ArithExpr::Add(Box::new(lhs), Box::new(self.arith_term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = ArithExpr::Sub(Box::new(lhs), Box::new(self.arith_term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn arith_term(&mut self) -> Result<ArithExpr, ParseError> {
        let mut lhs = self.arith_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = ArithExpr::Mul(Box::new(lhs), Box::new(self.arith_factor()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = ArithExpr::Div(Box::new(lhs), Box::new(self.arith_factor()?));
                }
                Some(Tok::Percent) => {
                    self.pos += 1;
                    lhs = ArithExpr::Mod(Box::new(lhs), Box::new(self.arith_factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn arith_factor(&mut self) -> Result<ArithExpr, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(ArithExpr::Neg(Box::new(self.arith_factor()?)))
            }
            Some(Tok::Int(_)) => Ok(ArithExpr::Num(self.int()?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.arith_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                match s.as_str() {
                    "m" => {
                        self.pos += 1;
                        Ok(ArithExpr::M)
                    }
                    "n" => {
                        self.pos += 1;
                        Ok(ArithExpr::N)
                    }
                    "abs" => {
                        self.pos += 1;
                        self.expect(Tok::LParen)?;
                        let e = self.arith_expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(ArithExpr::Abs(Box::new(e)))
                    }
                    "sign" => {
                        self.pos += 1;
                        self.expect(Tok::LParen)?;
                        let e = self.arith_expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(ArithExpr::Sign(Box::new(e)))
                    }
                    _ => Err(self.error("m, n, abs, sign, integer or (")),
                }
            }
            _ => Err(self.error("arithmetic operand")),
        }
    }
}

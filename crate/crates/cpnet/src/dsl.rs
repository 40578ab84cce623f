//! Textual net-definition language (`.cpn` files).
//!
//! ```text
//! net        := { stmt }
//! stmt       := netdecl | colorset | vardecl | place | trans
//! netdecl    := "net" IDENT ";"
//! colorset   := "colorset" IDENT "=" "{" IDENT { "," IDENT } "}" ";"
//! vardecl    := "var" IDENT ":" IDENT ";"
//! place      := "place" IDENT ":" IDENT [ "init" msexpr ] [ "capacity" INT ] ";"
//! trans      := "trans" IDENT "{" { arc } "}"
//! arc        := ("in" | "out") IDENT ":" msexpr ";"
//!             | "inhibit" IDENT [ ":" INT ] ";"
//! msexpr     := term { "++" term }
//! term       := INT "`" IDENT
//! IDENT      := letter { letter | digit | "_" | "'" }
//! ```
//!
//! `//` starts a comment running to end of line. An IDENT in a term resolves
//! to a declared variable first, then to a color value; a variable that
//! shadows a color value is a semantic error. Parsing recovers at statement
//! boundaries (`;`, `}`) so several errors can be reported in one pass.

use std::fmt;

use crate::net::{
    ArcInscription, ArcTerm, ColorSet, InitEntry, Net, Place, Term, Transition, Variable,
};

/// 1-based source region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start_line: u32,
    pub start_column: u32,
    pub end_line: u32,
    pub end_column: u32,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start_line, self.start_column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
    pub expected: Option<Vec<String>>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.message)?;
        if let Some(expected) = &self.expected {
            write!(f, " (expected {})", expected.join(" or "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Int(u64),
    Eq,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Colon,
    Backtick,
    PlusPlus,
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier {s}"),
            TokenKind::Int(n) => format!("integer {n}"),
            TokenKind::Eq => "'='".into(),
            TokenKind::LBrace => "'{'".into(),
            TokenKind::RBrace => "'}'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Semi => "';'".into(),
            TokenKind::Colon => "':'".into(),
            TokenKind::Backtick => "'`'".into(),
            TokenKind::PlusPlus => "'++'".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    kind: TokenKind,
    span: SourceSpan,
}

fn lex(source: &str) -> Result<Vec<Token>, Vec<ParseError>> {
    let mut tokens = Vec::new();
    let mut errors = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut chars = source.chars().peekable();

    let span1 = |line: u32, col: u32| SourceSpan {
        start_line: line,
        start_column: col,
        end_line: line,
        end_column: col,
    };

    while let Some(&c) = chars.peek() {
        let (sl, sc) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '/' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'/') {
                    while let Some(&c) = chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        chars.next();
                        col += 1;
                    }
                } else {
                    errors.push(ParseError {
                        span: span1(sl, sc),
                        message: "stray '/' (comments start with //)".into(),
                        expected: None,
                    });
                }
            }
            '+' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'+') {
                    chars.next();
                    col += 1;
                    tokens.push(Token {
                        kind: TokenKind::PlusPlus,
                        span: SourceSpan {
                            start_line: sl,
                            start_column: sc,
                            end_line: line,
                            end_column: col - 1,
                        },
                    });
                } else {
                    errors.push(ParseError {
                        span: span1(sl, sc),
                        message: "stray '+' (multiset union is '++')".into(),
                        expected: None,
                    });
                }
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let span = SourceSpan {
                    start_line: sl,
                    start_column: sc,
                    end_line: line,
                    end_column: col - 1,
                };
                match text.parse::<u64>() {
                    Ok(n) => tokens.push(Token { kind: TokenKind::Int(n), span }),
                    Err(_) => errors.push(ParseError {
                        span,
                        message: format!("integer literal {text} out of range"),
                        expected: None,
                    }),
                }
            }
            c if c.is_alphabetic() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_alphanumeric() || d == '_' || d == '\'' {
                        text.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(text),
                    span: SourceSpan {
                        start_line: sl,
                        start_column: sc,
                        end_line: line,
                        end_column: col - 1,
                    },
                });
            }
            _ => {
                let kind = match c {
                    '=' => Some(TokenKind::Eq),
                    '{' => Some(TokenKind::LBrace),
                    '}' => Some(TokenKind::RBrace),
                    ',' => Some(TokenKind::Comma),
                    ';' => Some(TokenKind::Semi),
                    ':' => Some(TokenKind::Colon),
                    '`' => Some(TokenKind::Backtick),
                    _ => None,
                };
                chars.next();
                col += 1;
                match kind {
                    Some(kind) => tokens.push(Token { kind, span: span1(sl, sc) }),
                    None => errors.push(ParseError {
                        span: span1(sl, sc),
                        message: format!("unexpected character {c:?}"),
                        expected: None,
                    }),
                }
            }
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, span: span1(line, col) });
    if errors.is_empty() {
        Ok(tokens)
    } else {
        Err(errors)
    }
}

// ---------------------------------------------------------------------------
// Parsing to a raw AST (names unresolved), with statement-level recovery.
// ---------------------------------------------------------------------------

#[derive(Debug)]
struct RawTerm {
    multiplicity: u64,
    ident: String,
    span: SourceSpan,
}

#[derive(Debug)]
enum RawStmt {
    NetName(String, SourceSpan),
    ColorSet { name: String, span: SourceSpan, values: Vec<(String, SourceSpan)> },
    Var { name: String, span: SourceSpan, color_set: String, cs_span: SourceSpan },
    Place {
        name: String,
        span: SourceSpan,
        color_set: String,
        cs_span: SourceSpan,
        init: Vec<RawTerm>,
        capacity: Option<u64>,
    },
    Trans { name: String, span: SourceSpan, arcs: Vec<RawArc> },
}

#[derive(Debug)]
enum RawArcKind {
    In,
    Out,
    Inhibit(u64),
}

#[derive(Debug)]
struct RawArc {
    kind: RawArcKind,
    place: String,
    place_span: SourceSpan,
    terms: Vec<RawTerm>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    errors: Vec<ParseError>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&mut self, message: String, expected: Vec<&str>) {
        let span = self.peek().span;
        self.errors.push(ParseError {
            span,
            message,
            expected: if expected.is_empty() {
                None
            } else {
                Some(expected.iter().map(|s| s.to_string()).collect())
            },
        });
    }

    fn expect_ident(&mut self, what: &str) -> Option<(String, SourceSpan)> {
        match &self.peek().kind {
            TokenKind::Ident(_) => {
                let t = self.bump();
                let TokenKind::Ident(name) = t.kind else { unreachable!() };
                Some((name, t.span))
            }
            other => {
                let found = other.describe();
                self.error_here(format!("expected {what}, found {found}"), vec![what]);
                None
            }
        }
    }

    fn expect(&mut self, kind: TokenKind) -> bool {
        if self.peek().kind == kind {
            self.bump();
            true
        } else {
            let found = self.peek().kind.describe();
            let want = kind.describe();
            self.error_here(format!("expected {want}, found {found}"), vec![]);
            false
        }
    }

    fn expect_int(&mut self, what: &str) -> Option<u64> {
        match self.peek().kind {
            TokenKind::Int(n) => {
                self.bump();
                Some(n)
            }
            _ => {
                let found = self.peek().kind.describe();
                self.error_here(format!("expected {what}, found {found}"), vec![what]);
                None
            }
        }
    }

    /// Skips to just past the next `;`, or stops before `}` / EOF.
    fn recover(&mut self) {
        loop {
            match self.peek().kind {
                TokenKind::Semi => {
                    self.bump();
                    return;
                }
                TokenKind::RBrace | TokenKind::Eof => return,
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn msexpr(&mut self) -> Option<Vec<RawTerm>> {
        let mut terms = Vec::new();
        loop {
            let mult = self.expect_int("multiplicity")?;
            if !self.expect(TokenKind::Backtick) {
                return None;
            }
            let (ident, span) = self.expect_ident("color value or variable")?;
            if mult == 0 {
                self.errors.push(ParseError {
                    span,
                    message: "multiplicity must be positive".into(),
                    expected: None,
                });
                return None;
            }
            terms.push(RawTerm { multiplicity: mult, ident, span });
            if self.peek().kind == TokenKind::PlusPlus {
                self.bump();
            } else {
                return Some(terms);
            }
        }
    }

    fn statements(&mut self) -> Vec<RawStmt> {
        let mut stmts = Vec::new();
        loop {
            match &self.peek().kind {
                TokenKind::Eof => return stmts,
                TokenKind::Ident(word) => {
                    let word = word.clone();
                    match word.as_str() {
                        "net" => {
                            self.bump();
                            if let Some((name, span)) = self.expect_ident("net name") {
                                if self.expect(TokenKind::Semi) {
                                    stmts.push(RawStmt::NetName(name, span));
                                    continue;
                                }
                            }
                            self.recover();
                        }
                        "colorset" => {
                            if let Some(s) = self.colorset_stmt() {
                                stmts.push(s);
                            } else {
                                self.recover();
                            }
                        }
                        "var" => {
                            if let Some(s) = self.var_stmt() {
                                stmts.push(s);
                            } else {
                                self.recover();
                            }
                        }
                        "place" => {
                            if let Some(s) = self.place_stmt() {
                                stmts.push(s);
                            } else {
                                self.recover();
                            }
                        }
                        "trans" => {
                            if let Some(s) = self.trans_stmt() {
                                stmts.push(s);
                            } else {
                                self.recover_trans();
                            }
                        }
                        other => {
                            self.error_here(
                                format!("unknown statement keyword {other}"),
                                vec!["net", "colorset", "var", "place", "trans"],
                            );
                            self.bump();
                            self.recover();
                        }
                    }
                }
                other => {
                    let found = other.describe();
                    self.error_here(
                        format!("expected a statement, found {found}"),
                        vec!["net", "colorset", "var", "place", "trans"],
                    );
                    self.bump();
                    self.recover();
                }
            }
        }
    }

    fn colorset_stmt(&mut self) -> Option<RawStmt> {
        self.bump(); // colorset
        let (name, span) = self.expect_ident("color set name")?;
        if !self.expect(TokenKind::Eq) || !self.expect(TokenKind::LBrace) {
            return None;
        }
        let mut values = Vec::new();
        loop {
            values.push(self.expect_ident("color value")?);
            match self.peek().kind {
                TokenKind::Comma => {
                    self.bump();
                }
                TokenKind::RBrace => {
                    self.bump();
                    break;
                }
                _ => {
                    let found = self.peek().kind.describe();
                    self.error_here(format!("expected ',' or '}}', found {found}"), vec![]);
                    return None;
                }
            }
        }
        self.expect(TokenKind::Semi).then_some(RawStmt::ColorSet { name, span, values })
    }

    fn var_stmt(&mut self) -> Option<RawStmt> {
        self.bump(); // var
        let (name, span) = self.expect_ident("variable name")?;
        if !self.expect(TokenKind::Colon) {
            return None;
        }
        let (color_set, cs_span) = self.expect_ident("color set name")?;
        self.expect(TokenKind::Semi)
            .then_some(RawStmt::Var { name, span, color_set, cs_span })
    }

    fn place_stmt(&mut self) -> Option<RawStmt> {
        self.bump(); // place
        let (name, span) = self.expect_ident("place name")?;
        if !self.expect(TokenKind::Colon) {
            return None;
        }
        let (color_set, cs_span) = self.expect_ident("color set name")?;
        let mut init = Vec::new();
        let mut capacity = None;
        if matches!(&self.peek().kind, TokenKind::Ident(w) if w == "init") {
            self.bump();
            init = self.msexpr()?;
        }
        if matches!(&self.peek().kind, TokenKind::Ident(w) if w == "capacity") {
            self.bump();
            let cap = self.expect_int("capacity")?;
            if cap == 0 {
                self.error_here("capacity must be positive".into(), vec![]);
                return None;
            }
            capacity = Some(cap);
        }
        self.expect(TokenKind::Semi)
            .then_some(RawStmt::Place { name, span, color_set, cs_span, init, capacity })
    }

    fn trans_stmt(&mut self) -> Option<RawStmt> {
        self.bump(); // trans
        let (name, span) = self.expect_ident("transition name")?;
        if !self.expect(TokenKind::LBrace) {
            return None;
        }
        let mut arcs = Vec::new();
        loop {
            match &self.peek().kind {
                TokenKind::RBrace => {
                    self.bump();
                    return Some(RawStmt::Trans { name, span, arcs });
                }
                TokenKind::Eof => {
                    self.error_here("unterminated transition block".into(), vec!["'}'"]);
                    return Some(RawStmt::Trans { name, span, arcs });
                }
                TokenKind::Ident(word) if word == "in" || word == "out" => {
                    let is_in = word == "in";
                    self.bump();
                    let arc = (|p: &mut Parser| -> Option<RawArc> {
                        let (place, place_span) = p.expect_ident("place name")?;
                        if !p.expect(TokenKind::Colon) {
                            return None;
                        }
                        let terms = p.msexpr()?;
                        p.expect(TokenKind::Semi).then_some(RawArc {
                            kind: if is_in { RawArcKind::In } else { RawArcKind::Out },
                            place,
                            place_span,
                            terms,
                        })
                    })(self);
                    match arc {
                        Some(a) => arcs.push(a),
                        None => self.recover(),
                    }
                }
                TokenKind::Ident(word) if word == "inhibit" => {
                    self.bump();
                    let arc = (|p: &mut Parser| -> Option<RawArc> {
                        let (place, place_span) = p.expect_ident("place name")?;
                        let mut threshold = 1;
                        if p.peek().kind == TokenKind::Colon {
                            p.bump();
                            threshold = p.expect_int("threshold")?;
                            if threshold == 0 {
                                p.error_here("inhibitor threshold must be positive".into(), vec![]);
                                return None;
                            }
                        }
                        p.expect(TokenKind::Semi).then_some(RawArc {
                            kind: RawArcKind::Inhibit(threshold),
                            place,
                            place_span,
                            terms: Vec::new(),
                        })
                    })(self);
                    match arc {
                        Some(a) => arcs.push(a),
                        None => self.recover(),
                    }
                }
                other => {
                    let found = other.describe();
                    self.error_here(
                        format!("expected an arc, found {found}"),
                        vec!["in", "out", "inhibit", "'}'"],
                    );
                    self.recover();
                    if self.peek().kind == TokenKind::Eof {
                        return Some(RawStmt::Trans { name, span, arcs });
                    }
                }
            }
        }
    }

    /// After a failed `trans` header: skip its block if one follows.
    fn recover_trans(&mut self) {
        self.recover();
    }
}

// ---------------------------------------------------------------------------
// Semantic resolution: raw statements -> Net, spans on every finding.
// ---------------------------------------------------------------------------

struct Resolver {
    net: Net,
    errors: Vec<ParseError>,
}

impl Resolver {
    fn err(&mut self, span: SourceSpan, message: String) {
        self.errors.push(ParseError { span, message, expected: None });
    }

    fn resolve(mut self, stmts: Vec<RawStmt>) -> (Net, Vec<ParseError>) {
        // First pass: declarations, so arcs may reference later statements.
        let mut net_named = false;
        for stmt in &stmts {
            match stmt {
                RawStmt::NetName(name, span) => {
                    if net_named {
                        self.err(*span, "net name declared more than once".into());
                    } else {
                        self.net.name = name.clone();
                        net_named = true;
                    }
                }
                RawStmt::ColorSet { name, span, values } => {
                    if self.net.color_set(name).is_some() {
                        self.err(*span, format!("color set {name} declared more than once"));
                        continue;
                    }
                    let mut vals = Vec::new();
                    for (v, vspan) in values {
                        if vals.contains(v) {
                            self.err(*vspan, format!("value {v} repeated in color set {name}"));
                        } else {
                            vals.push(v.clone());
                        }
                    }
                    self.net.color_sets.push(ColorSet { name: name.clone(), values: vals });
                }
                RawStmt::Var { name, span, color_set, cs_span } => {
                    if self.net.variable(name).is_some() {
                        self.err(*span, format!("variable {name} declared more than once"));
                        continue;
                    }
                    if self.net.color_set(color_set).is_none() {
                        self.err(*cs_span, format!("unknown color set {color_set}"));
                        continue;
                    }
                    self.net.variables.push(Variable {
                        name: name.clone(),
                        color_set: color_set.clone(),
                    });
                }
                RawStmt::Place { name, span, color_set, cs_span, init: _, capacity } => {
                    if self.net.place(name).is_some() {
                        self.err(*span, format!("place {name} declared more than once"));
                        continue;
                    }
                    if self.net.color_set(color_set).is_none() {
                        self.err(*cs_span, format!("unknown color set {color_set}"));
                        continue;
                    }
                    self.net.places.push(Place {
                        name: name.clone(),
                        color_set: color_set.clone(),
                        capacity: *capacity,
                        initial: Vec::new(),
                    });
                }
                RawStmt::Trans { .. } => {}
            }
        }

        // Shadowing check: a variable name that is also a color value would
        // make every textual term mentioning it ambiguous.
        for var in self.net.variables.clone() {
            for cs in self.net.color_sets.clone() {
                if cs.values.contains(&var.name) {
                    let span = stmts
                        .iter()
                        .find_map(|s| match s {
                            RawStmt::Var { name, span, .. } if *name == var.name => Some(*span),
                            _ => None,
                        })
                        .unwrap();
                    self.err(
                        span,
                        format!("variable {} shadows a value of color set {}", var.name, cs.name),
                    );
                }
            }
        }

        // Second pass: initial markings and transition arcs.
        for stmt in &stmts {
            match stmt {
                RawStmt::Place { name, init, .. } => {
                    let Some(place) = self.net.place(name) else { continue };
                    let cs_name = place.color_set.clone();
                    let cap = place.capacity;
                    let cs = self.net.color_set(&cs_name).unwrap().clone();
                    let mut entries = Vec::new();
                    let mut total: u64 = 0;
                    for term in init {
                        if self.net.variable(&term.ident).is_some() {
                            self.err(
                                term.span,
                                format!("variable {} not allowed in an initial marking", term.ident),
                            );
                        } else if !cs.values.contains(&term.ident) {
                            self.err(
                                term.span,
                                format!("{} is not a value of color set {}", term.ident, cs.name),
                            );
                        } else {
                            total = total.saturating_add(term.multiplicity);
                            entries.push(InitEntry {
                                count: term.multiplicity,
                                value: term.ident.clone(),
                            });
                        }
                    }
                    if let Some(cap) = cap {
                        if total > cap {
                            let span = init.first().map(|t| t.span).unwrap_or(SourceSpan {
                                start_line: 1,
                                start_column: 1,
                                end_line: 1,
                                end_column: 1,
                            });
                            self.err(
                                span,
                                format!(
                                    "place {name} holds {total} tokens initially but has capacity {cap}"
                                ),
                            );
                        }
                    }
                    let place = self.net.places.iter_mut().find(|p| p.name == *name).unwrap();
                    place.initial = entries;
                }
                RawStmt::Trans { name, span, arcs } => {
                    if self.net.transition(name).is_some() {
                        self.err(*span, format!("transition {name} declared more than once"));
                        continue;
                    }
                    let mut trans = Transition {
                        name: name.clone(),
                        inputs: Vec::new(),
                        outputs: Vec::new(),
                        inhibitors: Vec::new(),
                    };
                    for arc in arcs {
                        let Some(place) = self.net.place(&arc.place) else {
                            self.err(arc.place_span, format!("unknown place {}", arc.place));
                            continue;
                        };
                        let cs = self.net.color_set(&place.color_set).unwrap().clone();
                        match &arc.kind {
                            RawArcKind::Inhibit(threshold) => {
                                if trans.inputs.iter().any(|(p, _)| *p == arc.place) {
                                    self.err(
                                        arc.place_span,
                                        format!(
                                            "place {} is both input and inhibitor of {name}",
                                            arc.place
                                        ),
                                    );
                                }
                                trans.inhibitors.push((arc.place.clone(), *threshold));
                            }
                            kind => {
                                let mut terms = Vec::new();
                                for raw in &arc.terms {
                                    // Variable first, then color value.
                                    let term = if let Some(var) = self.net.variable(&raw.ident) {
                                        if var.color_set != cs.name {
                                            self.err(
                                                raw.span,
                                                format!(
                                                    "variable {} has color set {} but place {} has {}",
                                                    raw.ident, var.color_set, arc.place, cs.name
                                                ),
                                            );
                                            continue;
                                        }
                                        Term::Var(raw.ident.clone())
                                    } else if cs.values.contains(&raw.ident) {
                                        Term::Value(raw.ident.clone())
                                    } else {
                                        self.err(
                                            raw.span,
                                            format!(
                                                "{} is neither a variable nor a value of color set {}",
                                                raw.ident, cs.name
                                            ),
                                        );
                                        continue;
                                    };
                                    terms.push(ArcTerm { multiplicity: raw.multiplicity, term });
                                }
                                let inscription = ArcInscription { terms };
                                match kind {
                                    RawArcKind::In => {
                                        if trans.inhibitors.iter().any(|(p, _)| *p == arc.place) {
                                            self.err(
                                                arc.place_span,
                                                format!(
                                                    "place {} is both input and inhibitor of {name}",
                                                    arc.place
                                                ),
                                            );
                                        }
                                        trans.inputs.push((arc.place.clone(), inscription));
                                    }
                                    RawArcKind::Out => {
                                        trans.outputs.push((arc.place.clone(), inscription));
                                    }
                                    RawArcKind::Inhibit(_) => unreachable!(),
                                }
                            }
                        }
                    }
                    self.net.transitions.push(trans);
                }
                _ => {}
            }
        }

        (self.net, self.errors)
    }
}

/// Parses a `.cpn` source text. On success the returned net passes
/// [`Net::validate`] with zero diagnostics.
pub fn parse_net(source: &str) -> Result<Net, Vec<ParseError>> {
    let tokens = lex(source)?;
    let mut parser = Parser { tokens, pos: 0, errors: Vec::new() };
    let stmts = parser.statements();
    let mut errors = parser.errors;
    let (net, semantic_errors) = Resolver { net: Net::default(), errors: Vec::new() }.resolve(stmts);
    errors.extend(semantic_errors);
    if errors.is_empty() {
        debug_assert!(net.validate().is_empty());
        Ok(net)
    } else {
        errors.sort_by_key(|e| (e.span.start_line, e.span.start_column));
        Err(errors)
    }
}

fn write_msexpr(out: &mut String, terms: &[(u64, &str)]) {
    for (i, (mult, ident)) in terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" ++ ");
        }
        out.push_str(&format!("{mult}`{ident}"));
    }
}

/// Serializes a net to the textual language. Output re-parses to a
/// structurally equal net, and equal nets serialize to identical bytes.
/// Statement order: net name, color sets, vars, places, transitions.
pub fn serialize_net(net: &Net) -> String {
    let mut out = String::new();
    if !net.name.is_empty() {
        out.push_str(&format!("net {};\n", net.name));
    }
    if !net.color_sets.is_empty() {
        out.push('\n');
    }
    for cs in &net.color_sets {
        out.push_str(&format!("colorset {} = {{ {} }};\n", cs.name, cs.values.join(", ")));
    }
    if !net.variables.is_empty() {
        out.push('\n');
    }
    for var in &net.variables {
        out.push_str(&format!("var {} : {};\n", var.name, var.color_set));
    }
    if !net.places.is_empty() {
        out.push('\n');
    }
    for place in &net.places {
        out.push_str(&format!("place {} : {}", place.name, place.color_set));
        if !place.initial.is_empty() {
            out.push_str(" init ");
            let terms: Vec<(u64, &str)> = place
                .initial
                .iter()
                .map(|e| (e.count, e.value.as_str()))
                .collect();
            write_msexpr(&mut out, &terms);
        }
        if let Some(cap) = place.capacity {
            out.push_str(&format!(" capacity {cap}"));
        }
        out.push_str(";\n");
    }
    for trans in &net.transitions {
        out.push_str(&format!("\ntrans {} {{\n", trans.name));
        let arc_terms = |ins: &ArcInscription| -> Vec<(u64, String)> {
            ins.terms
                .iter()
                .map(|t| {
                    let ident = match &t.term {
                        Term::Value(v) => v.clone(),
                        Term::Var(v) => v.clone(),
                    };
                    (t.multiplicity, ident)
                })
                .collect()
        };
        for (place, ins) in &trans.inputs {
            out.push_str(&format!("  in {place} : "));
            let terms = arc_terms(ins);
            let refs: Vec<(u64, &str)> = terms.iter().map(|(m, s)| (*m, s.as_str())).collect();
            write_msexpr(&mut out, &refs);
            out.push_str(";\n");
        }
        for (place, ins) in &trans.outputs {
            out.push_str(&format!("  out {place} : "));
            let terms = arc_terms(ins);
            let refs: Vec<(u64, &str)> = terms.iter().map(|(m, s)| (*m, s.as_str())).collect();
            write_msexpr(&mut out, &refs);
            out.push_str(";\n");
        }
        for (place, threshold) in &trans.inhibitors {
            out.push_str(&format!("  inhibit {place} : {threshold};\n"));
        }
        out.push_str("}\n");
    }
    out
}

//! The plain-text input format: five declaration forms, `#` comments,
//! whitespace anywhere.
//!
//! ```text
//! preorder NAME { elems: e1 e2 ...; le: a b; c d; }
//! poset NAME { elems: ...; le: ...; }
//! map NAME : SRC -> TGT { e -> e'; ... }
//! lax NAME = (PRE, MAP) over POSET
//! laxmor NAME = MAP : LAXSRC -> LAXTGT
//! ```

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Eq,
    Arrow,
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::Arrow => write!(f, "`->`"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '.'
}

pub fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                bump(&mut chars);
                if c == '\n' {
                    break;
                }
            }
            continue;
        }
        let tok = match c {
            '{' => {
                bump(&mut chars);
                Tok::LBrace
            }
            '}' => {
                bump(&mut chars);
                Tok::RBrace
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            ':' => {
                bump(&mut chars);
                Tok::Colon
            }
            ';' => {
                bump(&mut chars);
                Tok::Semi
            }
            ',' => {
                bump(&mut chars);
                Tok::Comma
            }
            '=' => {
                bump(&mut chars);
                Tok::Eq
            }
            '-' => {
                bump(&mut chars);
                match chars.peek() {
                    Some('>') => {
                        bump(&mut chars);
                        Tok::Arrow
                    }
                    _ => {
                        return Err(CliError::Parse(format!(
                            "{}:{}: expected `->` after `-`",
                            pos.line, pos.col
                        )))
                    }
                }
            }
            c if is_ident_char(c) => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    s.push(bump(&mut chars));
                }
                Tok::Ident(s)
            }
            other => {
                return Err(CliError::Parse(format!(
                    "{}:{}: unexpected character `{other}`",
                    pos.line, pos.col
                )))
            }
        };
        out.push((tok, pos));
    }
    Ok(out)
}

/// One declaration, still by name; resolution happens in the workspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Preorder {
        name: String,
        elems: Vec<String>,
        le: Vec<(String, String)>,
    },
    Poset {
        name: String,
        elems: Vec<String>,
        le: Vec<(String, String)>,
    },
    Map {
        name: String,
        src: String,
        tgt: String,
        assignments: Vec<(String, String)>,
    },
    Lax {
        name: String,
        carrier: String,
        structure: String,
        base: String,
    },
    LaxMor {
        name: String,
        map: String,
        src: String,
        tgt: String,
    },
}

impl Decl {
    pub fn name(&self) -> &str {
        match self {
            Decl::Preorder { name, .. }
            | Decl::Poset { name, .. }
            | Decl::Map { name, .. }
            | Decl::Lax { name, .. }
            | Decl::LaxMor { name, .. } => name,
        }
    }
}

/// Element names plus generating `le` pairs.
type RelationBody = (Vec<String>, Vec<(String, String)>);

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> String {
        match self.toks.get(self.at) {
            Some((_, p)) => format!("{}:{}", p.line, p.col),
            None => "end of input".to_string(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<(), CliError> {
        match self.next() {
            Some(t) if t == *want => Ok(()),
            Some(t) => Err(CliError::Parse(format!(
                "{}: expected {want}, found {t}",
                self.prev_pos()
            ))),
            None => Err(CliError::Parse(format!("end of input: expected {want}"))),
        }
    }

    fn prev_pos(&self) -> String {
        match self.toks.get(self.at.saturating_sub(1)) {
            Some((_, p)) => format!("{}:{}", p.line, p.col),
            None => "end of input".to_string(),
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            Some(t) => Err(CliError::Parse(format!(
                "{}: expected a name, found {t}",
                self.prev_pos()
            ))),
            None => Err(CliError::Parse("end of input: expected a name".into())),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), CliError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Ident(s)) if s == word => Ok(()),
            Some(t) => Err(CliError::Parse(format!("{pos}: expected `{word}`, found {t}"))),
            None => Err(CliError::Parse(format!("end of input: expected `{word}`"))),
        }
    }

    /// `{ elems: e1 e2 ...; le: a b; c d; }` with the `le` section optional.
    fn relation_body(&mut self) -> Result<RelationBody, CliError> {
        self.expect(&Tok::LBrace)?;
        self.keyword("elems")?;
        self.expect(&Tok::Colon)?;
        let mut elems = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            elems.push(self.ident()?);
        }
        self.expect(&Tok::Semi)?;
        let mut le = Vec::new();
        if let Some(Tok::Ident(word)) = self.peek() {
            if word == "le" {
                self.keyword("le")?;
                self.expect(&Tok::Colon)?;
                while let Some(Tok::Ident(_)) = self.peek() {
                    let a = self.ident()?;
                    let b = self.ident()?;
                    self.expect(&Tok::Semi)?;
                    le.push((a, b));
                }
            }
        }
        self.expect(&Tok::RBrace)?;
        Ok((elems, le))
    }

    fn decl(&mut self) -> Result<Decl, CliError> {
        let pos = self.pos();
        let head = self.ident()?;
        match head.as_str() {
            "preorder" => {
                let name = self.ident()?;
                let (elems, le) = self.relation_body()?;
                Ok(Decl::Preorder { name, elems, le })
            }
            "poset" => {
                let name = self.ident()?;
                let (elems, le) = self.relation_body()?;
                Ok(Decl::Poset { name, elems, le })
            }
            "map" => {
                let name = self.ident()?;
                self.expect(&Tok::Colon)?;
                let src = self.ident()?;
                self.expect(&Tok::Arrow)?;
                let tgt = self.ident()?;
                self.expect(&Tok::LBrace)?;
                let mut assignments = Vec::new();
                while let Some(Tok::Ident(_)) = self.peek() {
                    let e = self.ident()?;
                    self.expect(&Tok::Arrow)?;
                    let v = self.ident()?;
                    self.expect(&Tok::Semi)?;
                    assignments.push((e, v));
                }
                self.expect(&Tok::RBrace)?;
                Ok(Decl::Map {
                    name,
                    src,
                    tgt,
                    assignments,
                })
            }
            "lax" => {
                let name = self.ident()?;
                self.expect(&Tok::Eq)?;
                self.expect(&Tok::LParen)?;
                let carrier = self.ident()?;
                self.expect(&Tok::Comma)?;
                let structure = self.ident()?;
                self.expect(&Tok::RParen)?;
                self.keyword("over")?;
                let base = self.ident()?;
                Ok(Decl::Lax {
                    name,
                    carrier,
                    structure,
                    base,
                })
            }
            "laxmor" => {
                let name = self.ident()?;
                self.expect(&Tok::Eq)?;
                let map = self.ident()?;
                self.expect(&Tok::Colon)?;
                let src = self.ident()?;
                self.expect(&Tok::Arrow)?;
                let tgt = self.ident()?;
                Ok(Decl::LaxMor {
                    name,
                    map,
                    src,
                    tgt,
                })
            }
            other => Err(CliError::Parse(format!(
                "{pos}: unknown declaration `{other}` (expected preorder, poset, map, lax, or laxmor)"
            ))),
        }
    }
}

pub fn parse(text: &str) -> Result<Vec<Decl>, CliError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let mut decls = Vec::new();
    while p.peek().is_some() {
        decls.push(p.decl()?);
    }
    Ok(decls)
}

pub fn print_decl(d: &Decl) -> String {
    fn relation_body(elems: &[String], le: &[(String, String)]) -> String {
        let mut s = format!("{{ elems: {};", elems.join(" "));
        if !le.is_empty() {
            s.push_str(" le:");
            for (a, b) in le {
                s.push_str(&format!(" {a} {b};"));
            }
        }
        s.push_str(" }");
        s
    }
    match d {
        Decl::Preorder { name, elems, le } => {
            format!("preorder {name} {}", relation_body(elems, le))
        }
        Decl::Poset { name, elems, le } => {
            format!("poset {name} {}", relation_body(elems, le))
        }
        Decl::Map {
            name,
            src,
            tgt,
            assignments,
        } => {
            let body: Vec<String> = assignments
                .iter()
                .map(|(e, v)| format!("{e} -> {v};"))
                .collect();
            format!("map {name} : {src} -> {tgt} {{ {} }}", body.join(" "))
        }
        Decl::Lax {
            name,
            carrier,
            structure,
            base,
        } => format!("lax {name} = ({carrier}, {structure}) over {base}"),
        Decl::LaxMor {
            name,
            map,
            src,
            tgt,
        } => format!("laxmor {name} = {map} : {src} -> {tgt}"),
    }
}

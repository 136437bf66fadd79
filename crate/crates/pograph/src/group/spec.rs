//! Textual constructor grammar for finite groups.
//!
//! ```text
//! atom    := "C:"n | "D:"n | "Q:"n | "S:"n | "A:"n
//!          | "GL:2:"p | "SL:2:"p | "PSL:2:"p
//!          | "SD:"n":"m":"k
//!          | "GD:(" product ")"
//!          | "SDM:(" product "):"m":" matrix
//! product := atom ("x" atom)*
//! ```
//!
//! Whitespace is insignificant. Numbers accept a power form `b^e`
//! (so `C:2^5` is the cyclic group of order 32). Matrices are written
//! `[[a,b],[c,d]]` with optionally negative integer entries.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    /// Cyclic group of order n.
    Cyclic(u64),
    /// Dihedral group with rotation subgroup of order n (group order 2n).
    Dihedral(u64),
    /// Generalized quaternion group of order 2^k, k >= 3.
    Quaternion(u64),
    /// Symmetric group on n points.
    Symmetric(u32),
    /// Alternating group on n points.
    Alternating(u32),
    /// Invertible 2x2 matrices over F_p.
    GeneralLinear(u64),
    /// Determinant-1 2x2 matrices over F_p.
    SpecialLinear(u64),
    /// SL(2,p) modulo its center.
    ProjectiveSpecialLinear(u64),
    /// Z_n rtimes Z_m where the Z_m generator acts by x -> x^k.
    Semidirect { n: u64, m: u64, k: u64 },
    /// A rtimes Z_2 with the involution acting by inversion on abelian A.
    GeneralizedDihedral(Box<GroupExpr>),
    /// Product of cyclic groups extended by Z_m acting through an integer
    /// matrix on the cyclic generators.
    SemidirectMatrix {
        inner: Box<GroupExpr>,
        m: u64,
        matrix: Vec<Vec<i64>>,
    },
    /// Direct product, at least two factors.
    Product(Vec<GroupExpr>),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C:{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D:{n}"),
            GroupExpr::Quaternion(n) => write!(f, "Q:{n}"),
            GroupExpr::Symmetric(n) => write!(f, "S:{n}"),
            GroupExpr::Alternating(n) => write!(f, "A:{n}"),
            GroupExpr::GeneralLinear(p) => write!(f, "GL:2:{p}"),
            GroupExpr::SpecialLinear(p) => write!(f, "SL:2:{p}"),
            GroupExpr::ProjectiveSpecialLinear(p) => write!(f, "PSL:2:{p}"),
            GroupExpr::Semidirect { n, m, k } => write!(f, "SD:{n}:{m}:{k}"),
            GroupExpr::GeneralizedDihedral(inner) => write!(f, "GD:({inner})"),
            GroupExpr::SemidirectMatrix { inner, m, matrix } => {
                write!(f, "SDM:({inner}):{m}:[")?;
                for (i, row) in matrix.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for (j, e) in row.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{e}")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
            GroupExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

/// A parsed constructor expression together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    expr: GroupExpr,
    source: String,
}

impl GroupSpec {
    pub fn expr(&self) -> &GroupExpr {
        &self.expr
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Canonical rendering of the parsed expression.
    pub fn canonical(&self) -> String {
        self.expr.to_string()
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let mut p = Parser::new(s)?;
        let expr = p.product()?;
        p.expect_end()?;
        Ok(GroupSpec {
            expr,
            source: s.to_string(),
        })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Colon,
    Cross,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Minus,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Colon => write!(f, "':'"),
            Tok::Cross => write!(f, "'x'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBrack => write!(f, "'['"),
            Tok::RBrack => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::Minus => write!(f, "'-'"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = s.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            ':' => {
                toks.push((Tok::Colon, i));
                i += 1;
            }
            'x' => {
                toks.push((Tok::Cross, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '[' => {
                toks.push((Tok::LBrack, i));
                i += 1;
            }
            ']' => {
                toks.push((Tok::RBrack, i));
                i += 1;
            }
            ',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            'A'..='Z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_uppercase() {
                    i += 1;
                }
                toks.push((Tok::Ident(s[start..i].to_string()), start));
            }
            '0'..='9' => {
                let start = i;
                let mut value = read_int(bytes, &mut i, start)?;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(Error::Parse {
                            pos: i,
                            msg: "expected exponent after '^'".into(),
                        });
                    }
                    let exp = read_int(bytes, &mut i, estart)?;
                    value = value.checked_pow(exp.try_into().map_err(|_| Error::Parse {
                        pos: estart,
                        msg: "exponent too large".into(),
                    })?)
                    .ok_or(Error::Parse {
                        pos: start,
                        msg: "number overflows".into(),
                    })?;
                }
                toks.push((Tok::Num(value), start));
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(toks)
}

fn read_int(bytes: &[u8], i: &mut usize, start: usize) -> Result<u64> {
    let mut v: u64 = 0;
    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
        v = v
            .checked_mul(10)
            .and_then(|v| v.checked_add((bytes[*i] - b'0') as u64))
            .ok_or(Error::Parse {
                pos: start,
                msg: "number overflows".into(),
            })?;
        *i += 1;
    }
    Ok(v)
}

impl Parser {
    fn new(s: &str) -> Result<Parser> {
        Ok(Parser {
            toks: lex(s)?,
            pos: 0,
            end: s.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        let pos = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::Parse {
                pos,
                msg: format!("expected {want}, found {t}"),
            }),
            None => Err(Error::Parse {
                pos,
                msg: format!("expected {want}, found end of input"),
            }),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        if let Some(t) = self.peek() {
            return Err(Error::Parse {
                pos: self.here(),
                msg: format!("trailing input starting with {t}"),
            });
        }
        Ok(())
    }

    fn number(&mut self) -> Result<u64> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(n),
            Some(t) => Err(Error::Parse {
                pos,
                msg: format!("expected a number, found {t}"),
            }),
            None => Err(Error::Parse {
                pos,
                msg: "expected a number, found end of input".into(),
            }),
        }
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.bump();
        }
        let pos = self.here();
        let n = self.number()?;
        let v = i64::try_from(n).map_err(|_| Error::Parse {
            pos,
            msg: "matrix entry too large".into(),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn product(&mut self) -> Result<GroupExpr> {
        let mut parts = vec![self.atom()?];
        while matches!(self.peek(), Some(Tok::Cross)) {
            self.bump();
            parts.push(self.atom()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(GroupExpr::Product(parts))
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<i64>>> {
        self.expect(Tok::LBrack)?;
        let mut rows = Vec::new();
        loop {
            self.expect(Tok::LBrack)?;
            let mut row = vec![self.signed()?];
            while matches!(self.peek(), Some(Tok::Comma)) {
                self.bump();
                row.push(self.signed()?);
            }
            self.expect(Tok::RBrack)?;
            rows.push(row);
            match self.peek() {
                Some(Tok::Comma) => {
                    self.bump();
                }
                _ => break,
            }
        }
        self.expect(Tok::RBrack)?;
        Ok(rows)
    }

    fn linear(&mut self, name: &str, pos: usize) -> Result<u64> {
        self.expect(Tok::Colon)?;
        let two = self.number()?;
        if two != 2 {
            return Err(Error::Parse {
                pos,
                msg: format!("{name} only supports degree 2"),
            });
        }
        self.expect(Tok::Colon)?;
        self.number()
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        let pos = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(s)) => s,
            Some(t) => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("expected a constructor name, found {t}"),
                })
            }
            None => {
                return Err(Error::Parse {
                    pos,
                    msg: "expected a constructor name, found end of input".into(),
                })
            }
        };
        match name.as_str() {
            "C" => {
                self.expect(Tok::Colon)?;
                Ok(GroupExpr::Cyclic(self.number()?))
            }
            "D" => {
                self.expect(Tok::Colon)?;
                Ok(GroupExpr::Dihedral(self.number()?))
            }
            "Q" => {
                self.expect(Tok::Colon)?;
                Ok(GroupExpr::Quaternion(self.number()?))
            }
            "S" => {
                self.expect(Tok::Colon)?;
                let n = self.number()?;
                Ok(GroupExpr::Symmetric(n.try_into().map_err(|_| {
                    Error::Parse {
                        pos,
                        msg: "degree too large".into(),
                    }
                })?))
            }
            "A" => {
                self.expect(Tok::Colon)?;
                let n = self.number()?;
                Ok(GroupExpr::Alternating(n.try_into().map_err(|_| {
                    Error::Parse {
                        pos,
                        msg: "degree too large".into(),
                    }
                })?))
            }
            "GL" => Ok(GroupExpr::GeneralLinear(self.linear("GL", pos)?)),
            "SL" => Ok(GroupExpr::SpecialLinear(self.linear("SL", pos)?)),
            "PSL" => Ok(GroupExpr::ProjectiveSpecialLinear(self.linear("PSL", pos)?)),
            "SD" => {
                self.expect(Tok::Colon)?;
                let n = self.number()?;
                self.expect(Tok::Colon)?;
                let m = self.number()?;
                self.expect(Tok::Colon)?;
                let k = self.number()?;
                Ok(GroupExpr::Semidirect { n, m, k })
            }
            "GD" => {
                self.expect(Tok::Colon)?;
                self.expect(Tok::LParen)?;
                let inner = self.product()?;
                self.expect(Tok::RParen)?;
                Ok(GroupExpr::GeneralizedDihedral(Box::new(inner)))
            }
            "SDM" => {
                self.expect(Tok::Colon)?;
                self.expect(Tok::LParen)?;
                let inner = self.product()?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::Colon)?;
                let m = self.number()?;
                self.expect(Tok::Colon)?;
                let matrix = self.matrix()?;
                Ok(GroupExpr::SemidirectMatrix {
                    inner: Box::new(inner),
                    m,
                    matrix,
                })
            }
            other => Err(Error::Parse {
                pos,
                msg: format!("unknown constructor '{other}'"),
            }),
        }
    }
}

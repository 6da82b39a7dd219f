//! Text form of construction trees.
//!
//! ```text
//! recipe := "(petersen)" | "(wheel)" | "(flower " INT ")" | "(g6 " STRING ")"
//!         | "(join " recipe " p=" INT " " recipe " p=" INT [" r=" INT] ")"
//!         | "(superpose52 " recipe " e=" INT " " recipe " u=" INT " v=" INT ")"
//!         | "(dot " recipe " e1=" INT " e2=" INT " " recipe " x=" INT " y=" INT [" swap"] ")"
//! ```
//!
//! Any run of ASCII whitespace separates tokens on input; the printed form
//! uses single spaces and omits `r=0` and a missing `swap`.

use std::fmt;
use std::str::FromStr;

use super::{dot_product, flower, pentagon_join, petersen, superpose_52, wheel_w8, Built};
use crate::error::{Error, Result};
use crate::graph::{decode_graph6, list_pentagons, Cycle, EdgeId, Graph};

const MAX_DEPTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Recipe {
    Petersen,
    Wheel,
    Flower(usize),
    Graph6(String),
    /// Pentagons are chosen by index into `list_pentagons` of each child.
    Join {
        left: Box<Recipe>,
        left_pentagon: usize,
        right: Box<Recipe>,
        right_pentagon: usize,
        rotation: usize,
    },
    Superpose {
        left: Box<Recipe>,
        edge: usize,
        right: Box<Recipe>,
        u: usize,
        v: usize,
    },
    Dot {
        left: Box<Recipe>,
        e1: usize,
        e2: usize,
        right: Box<Recipe>,
        x: usize,
        y: usize,
        swap: bool,
    },
}

fn pentagon(g: &Graph, index: usize) -> Result<Cycle> {
    let all = list_pentagons(g);
    let n = all.len();
    all.into_iter().nth(index).ok_or_else(|| {
        Error::hypothesis(format!("pentagon index {index} out of range ({n} pentagons)"))
    })
}

impl Recipe {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Recipe::Petersen => Ok(petersen()),
            Recipe::Wheel => Ok(wheel_w8().graph),
            Recipe::Flower(n) => flower(*n),
            Recipe::Graph6(s) => decode_graph6(s),
            _ => self.build_parts().map(|p| p.built.graph),
        }
    }

    /// For a two-input node: both inputs, their chosen pieces and the
    /// surgery result. Leaves are an error.
    pub fn build_parts(&self) -> Result<Parts> {
        match self {
            Recipe::Join {
                left,
                left_pentagon,
                right,
                right_pentagon,
                rotation,
            } => {
                let (lg, rg) = (left.build()?, right.build()?);
                let lp = pentagon(&lg, *left_pentagon)?;
                let rp = pentagon(&rg, *right_pentagon)?;
                let built = pentagon_join(&lg, &lp, &rg, &rp, *rotation)?;
                Ok(Parts {
                    left: lg,
                    right: rg,
                    left_pentagon: Some(lp),
                    right_pentagon: Some(rp),
                    built,
                })
            }
            Recipe::Superpose {
                left,
                edge,
                right,
                u,
                v,
            } => {
                let (lg, rg) = (left.build()?, right.build()?);
                let built = superpose_52(&lg, EdgeId(*edge), &rg, *u, *v)?;
                Ok(Parts {
                    left: lg,
                    right: rg,
                    left_pentagon: None,
                    right_pentagon: None,
                    built,
                })
            }
            Recipe::Dot {
                left,
                e1,
                e2,
                right,
                x,
                y,
                swap,
            } => {
                let (lg, rg) = (left.build()?, right.build()?);
                let built = dot_product(&lg, EdgeId(*e1), EdgeId(*e2), &rg, *x, *y, *swap)?;
                Ok(Parts {
                    left: lg,
                    right: rg,
                    left_pentagon: None,
                    right_pentagon: None,
                    built,
                })
            }
            _ => Err(Error::hypothesis("recipe is a leaf, not a surgery")),
        }
    }
}

/// The pieces of one surgery step.
#[derive(Clone, Debug)]
pub struct Parts {
    pub left: Graph,
    pub right: Graph,
    pub left_pentagon: Option<Cycle>,
    pub right_pentagon: Option<Cycle>,
    pub built: Built,
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Petersen => write!(f, "(petersen)"),
            Recipe::Wheel => write!(f, "(wheel)"),
            Recipe::Flower(n) => write!(f, "(flower {n})"),
            Recipe::Graph6(s) => write!(f, "(g6 \"{s}\")"),
            Recipe::Join {
                left,
                left_pentagon,
                right,
                right_pentagon,
                rotation,
            } => {
                write!(f, "(join {left} p={left_pentagon} {right} p={right_pentagon}")?;
                if *rotation != 0 {
                    write!(f, " r={rotation}")?;
                }
                write!(f, ")")
            }
            Recipe::Superpose {
                left,
                edge,
                right,
                u,
                v,
            } => write!(f, "(superpose52 {left} e={edge} {right} u={u} v={v})"),
            Recipe::Dot {
                left,
                e1,
                e2,
                right,
                x,
                y,
                swap,
            } => {
                write!(f, "(dot {left} e1={e1} e2={e2} {right} x={x} y={y}")?;
                if *swap {
                    write!(f, " swap")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
    Str(&'a str),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b'(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            b'"' => {
                let end = text[i + 1..]
                    .find('"')
                    .ok_or_else(|| Error::parse(i, "unterminated string"))?;
                out.push((i, Tok::Str(&text[i + 1..i + 1 + end])));
                i += end + 2;
            }
            _ if b.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len()
                    && !bytes[i].is_ascii_whitespace()
                    && !matches!(bytes[i], b'(' | b')' | b'"')
                {
                    i += 1;
                }
                out.push((start, Tok::Atom(&text[start..i])));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Result<Tok<'a>> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::parse(self.end, "unexpected end of recipe"))?;
        self.pos += 1;
        Ok(t.1)
    }

    fn expect(&mut self, want: Tok<'_>, what: &str) -> Result<()> {
        let at = self.offset();
        if self.next()? == want {
            Ok(())
        } else {
            Err(Error::parse(at, format!("expected {what}")))
        }
    }

    fn int(&self, at: usize, s: &str) -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(at, format!("expected an unsigned integer, found {s:?}")));
        }
        s.parse()
            .map_err(|_| Error::parse(at, format!("integer {s} is too large")))
    }

    fn keyed(&mut self, key: &str) -> Result<usize> {
        let at = self.offset();
        match self.next()? {
            Tok::Atom(a) => match a.strip_prefix(key).and_then(|r| r.strip_prefix('=')) {
                Some(v) => self.int(at + key.len() + 1, v),
                None => Err(Error::parse(at, format!("expected {key}=<integer>"))),
            },
            _ => Err(Error::parse(at, format!("expected {key}=<integer>"))),
        }
    }

    fn peek_atom(&self, word: &str) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Atom(a))) if *a == word)
    }

    fn recipe(&mut self, depth: usize) -> Result<Recipe> {
        if depth > MAX_DEPTH {
            return Err(Error::parse(self.offset(), "recipe nested too deeply"));
        }
        self.expect(Tok::Open, "'('")?;
        let at = self.offset();
        let head = match self.next()? {
            Tok::Atom(a) => a,
            _ => return Err(Error::parse(at, "expected a constructor name")),
        };
        let r = match head {
            "petersen" => Recipe::Petersen,
            "wheel" => Recipe::Wheel,
            "flower" => {
                let at = self.offset();
                match self.next()? {
                    Tok::Atom(a) => Recipe::Flower(self.int(at, a)?),
                    _ => return Err(Error::parse(at, "expected flower size")),
                }
            }
            "g6" => {
                let at = self.offset();
                match self.next()? {
                    Tok::Str(s) => Recipe::Graph6(s.to_string()),
                    _ => return Err(Error::parse(at, "expected a quoted graph6 string")),
                }
            }
            "join" => {
                let left = Box::new(self.recipe(depth + 1)?);
                let left_pentagon = self.keyed("p")?;
                let right = Box::new(self.recipe(depth + 1)?);
                let right_pentagon = self.keyed("p")?;
                let rotation = if self.peek_atom_prefix("r=") { self.keyed("r")? } else { 0 };
                Recipe::Join {
                    left,
                    left_pentagon,
                    right,
                    right_pentagon,
                    rotation,
                }
            }
            "superpose52" => {
                let left = Box::new(self.recipe(depth + 1)?);
                let edge = self.keyed("e")?;
                let right = Box::new(self.recipe(depth + 1)?);
                let u = self.keyed("u")?;
                let v = self.keyed("v")?;
                Recipe::Superpose {
                    left,
                    edge,
                    right,
                    u,
                    v,
                }
            }
            "dot" => {
                let left = Box::new(self.recipe(depth + 1)?);
                let e1 = self.keyed("e1")?;
                let e2 = self.keyed("e2")?;
                let right = Box::new(self.recipe(depth + 1)?);
                let x = self.keyed("x")?;
                let y = self.keyed("y")?;
                let swap = self.peek_atom("swap");
                if swap {
                    self.pos += 1;
                }
                Recipe::Dot {
                    left,
                    e1,
                    e2,
                    right,
                    x,
                    y,
                    swap,
                }
            }
            other => return Err(Error::parse(at, format!("unknown constructor {other:?}"))),
        };
        self.expect(Tok::Close, "')'")?;
        Ok(r)
    }

    fn peek_atom_prefix(&self, prefix: &str) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Atom(a))) if a.starts_with(prefix))
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let r = p.recipe(0)?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.offset(), "trailing input after recipe"));
    }
    Ok(r)
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Recipe> {
        parse_recipe(s)
    }
}

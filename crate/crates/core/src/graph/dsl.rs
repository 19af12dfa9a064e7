//! Graph expression language.
//!
//! ```text
//! expr := K(n) | P(n) | C(n) | E(n) | Kme(r)
//!       | union(expr, expr) | join(expr, expr) | corona(expr, expr)
//!       | compl(expr)
//!       | edges(n, u-v, u-v, ...)
//! ```
//!
//! `join` is the Zykov sum, `E(n)` the edgeless graph and `Kme(r)` is
//! `K_r - e`. Whitespace is ignored everywhere. `edges(..)` is a literal
//! that [`Graph::descriptor`] emits, so any graph can be written back.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(input: &str) -> Result<Graph> {
    let mut p = Parser {
        chars: input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
        len: input.len(),
    };
    let g = p.expr()?;
    if p.pos < p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(g)
}

struct Parser {
    // (byte offset in the original input, char), whitespace removed
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s.parse().map_err(|_| {
            self.pos = start;
            self.error("expected a non-negative integer")
        })
    }

    fn expr(&mut self) -> Result<Graph> {
        let at = self.pos;
        let name = self.ident();
        if name.is_empty() {
            return Err(self.error("expected a graph expression"));
        }
        self.expect('(')?;
        let located = |e: Error, p: &Parser| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                position: p.chars.get(at).map_or(p.len, |&(o, _)| o),
                message: other.to_string(),
            },
        };
        let g = match name.as_str() {
            "K" | "P" | "C" | "E" | "Kme" => {
                let n = self.number()?;
                match name.as_str() {
                    "K" => Graph::complete(n),
                    "P" => Graph::path(n),
                    "E" => Graph::empty_graph(n),
                    "C" => Graph::cycle(n).map_err(|e| located(e, self))?,
                    _ => Graph::complete_minus_edge(n).map_err(|e| located(e, self))?,
                }
            }
            "union" | "join" | "corona" => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                match name.as_str() {
                    "union" => Graph::disjoint_union(&a, &b),
                    "join" => Graph::zykov_sum(&a, &b),
                    _ => Graph::corona(&a, &b),
                }
            }
            "compl" => self.expr()?.complement(),
            "edges" => {
                let n = self.number()?;
                let mut edges = Vec::new();
                while self.peek() == Some(',') {
                    self.pos += 1;
                    let u = self.number()?;
                    self.expect('-')?;
                    let v = self.number()?;
                    edges.push((u, v));
                }
                Graph::from_edges(n, &edges).map_err(|e| located(e, self))?
            }
            _ => {
                self.pos = at;
                return Err(self.error(&format!("unknown constructor {name:?}")));
            }
        };
        self.expect(')')?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    #[test]
    fn constructors_and_combinators() {
        assert_eq!(parse("K(3)").unwrap(), Graph::complete(3));
        assert_eq!(parse(" P ( 4 ) ").unwrap(), Graph::path(4));
        assert_eq!(parse("E(0)").unwrap().order(), 0);
        assert_eq!(parse("Kme(2)").unwrap(), Graph::empty_graph(2));
        let c = parse("corona(P(3), union(K(2),K(1)))").unwrap();
        assert_eq!(c.order(), 12);
        let j = parse("join(K(43), union(K(7),union(K(7),K(7))))").unwrap();
        assert_eq!(j.order(), 64);
        assert!(are_isomorphic(&parse("compl(C(5))").unwrap(), &Graph::cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn descriptor_round_trip() {
        let g = parse("corona(C(4), Kme(3))").unwrap();
        assert_eq!(parse(&g.descriptor()).unwrap(), g);
    }

    #[test]
    fn errors_report_positions() {
        let pos = |s: &str| match parse(s) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(pos("K(3"), 3);
        assert_eq!(pos("union(K(1) K(2))"), 11);
        assert_eq!(pos("foo(1)"), 0);
        assert_eq!(pos("K(3)x"), 4);
        assert_eq!(pos("C(2)"), 0);
        assert_eq!(pos("K(-1)"), 2);
        assert_eq!(pos(""), 0);
    }
}

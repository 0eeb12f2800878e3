//! Named graph families and small join/union expressions.
//!
//! Wherever a construction attaches to "an arbitrary vertex" of a clique,
//! vertex 0 of that clique is used, so every build is deterministic.

use super::{cycle, disjoint_union, join, path, repeat_union, star, Graph};
use crate::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    /// `K_{1,leaves}`
    Star { leaves: usize },
    /// `K1 ∨ (2K1 + K2)`, order 5.
    GStar1,
    /// `K1 ∨ (K1 + 2K2)`, order 6.
    GStar2,
    /// `K1 ∨ 3K2`, order 7.
    G1,
    /// `K_{n-5}` joined by one edge to the hub of `K1 ∨ 2K2`; requires `n >= 8`.
    GN { n: usize },
    /// `K_{n-(k+1)(δ+1)}` with `k+1` pendant copies of `K_{δ+1}`, each
    /// attached by a single bridge to vertex 0 of the big clique.
    GK { n: usize, k: usize, delta: usize },
    Custom(Expr),
}

/// Join/union expression over complete, empty, path and cycle graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Copies(usize, Box<Expr>),
    Union(Box<Expr>, Box<Expr>),
    Join(Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Complete(n) => write!(f, "K{n}"),
            Expr::Empty(n) => write!(f, "E{n}"),
            Expr::Path(n) => write!(f, "P{n}"),
            Expr::Cycle(n) => write!(f, "C{n}"),
            Expr::Copies(c, e) => write!(f, "{c}({e})"),
            Expr::Union(a, b) => write!(f, "({a} + {b})"),
            Expr::Join(a, b) => write!(f, "({a} v {b})"),
        }
    }
}

impl Expr {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Expr::Complete(n) => Graph::complete(*n),
            Expr::Empty(n) => Graph::empty(*n),
            Expr::Path(n) => path(*n),
            Expr::Cycle(n) => cycle(*n),
            Expr::Copies(c, e) => repeat_union(&e.build()?, *c),
            Expr::Union(a, b) => disjoint_union(&a.build()?, &b.build()?),
            Expr::Join(a, b) => join(&a.build()?, &b.build()?),
        }
    }

    /// Parses expressions such as `K1 v (2K1 + K2)`. `+` binds tighter than
    /// the join operator (`v` or `∨`); both associate to the left.
    pub fn parse(text: &str) -> Result<Expr> {
        let tokens = tokenize(text)?;
        let mut p = Parser { tokens, pos: 0 };
        let e = p.join()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Family(format!("trailing input in `{text}`")));
        }
        Ok(e)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(usize),
    Base(char, usize),
    Plus,
    Join,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let number = |i: &mut usize| {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect::<String>().parse::<usize>().ok()
    };
    while i < chars.len() {
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            'v' | '∨' => {
                out.push(Tok::Join);
                i += 1;
            }
            '(' => {
                out.push(Tok::Open);
                i += 1;
            }
            ')' => {
                out.push(Tok::Close);
                i += 1;
            }
            c @ ('K' | 'E' | 'P' | 'C') => {
                i += 1;
                if i < chars.len() && chars[i] == '_' {
                    i += 1;
                }
                let n = number(&mut i)
                    .ok_or_else(|| Error::Family(format!("`{c}` needs an order")))?;
                out.push(Tok::Base(c, n));
            }
            c if c.is_ascii_digit() => out.push(Tok::Num(number(&mut i).unwrap())),
            c => return Err(Error::Family(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn join(&mut self) -> Result<Expr> {
        let mut lhs = self.union()?;
        while self.peek() == Some(&Tok::Join) {
            self.pos += 1;
            lhs = Expr::Join(Box::new(lhs), Box::new(self.union()?));
        }
        Ok(lhs)
    }

    fn union(&mut self) -> Result<Expr> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            lhs = Expr::Union(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(c)) => Ok(Expr::Copies(c, Box::new(self.atom()?))),
            Some(Tok::Base('K', n)) => Ok(Expr::Complete(n)),
            Some(Tok::Base('E', n)) => Ok(Expr::Empty(n)),
            Some(Tok::Base('P', n)) => Ok(Expr::Path(n)),
            Some(Tok::Base(_, n)) => Ok(Expr::Cycle(n)),
            Some(Tok::Open) => {
                let e = self.join()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(Error::Family("unbalanced parentheses".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(Error::Family("expected a graph term".into())),
        }
    }
}

fn k(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

pub fn build_family(spec: &GraphFamily) -> Result<Graph> {
    match *spec {
        GraphFamily::Complete { n } => k(n),
        GraphFamily::Path { n } => path(n),
        GraphFamily::Cycle { n } => cycle(n),
        GraphFamily::Star { leaves } => star(leaves),
        GraphFamily::GStar1 => join(&k(1)?, &disjoint_union(&Graph::empty(2)?, &k(2)?)?),
        GraphFamily::GStar2 => join(&k(1)?, &disjoint_union(&k(1)?, &repeat_union(&k(2)?, 2)?)?),
        GraphFamily::G1 => join(&k(1)?, &repeat_union(&k(2)?, 3)?),
        GraphFamily::GN { n } => {
            if n < 8 {
                return Err(Error::Family(format!("g-n requires n >= 8, got {n}")));
            }
            let hub_part = join(&k(1)?, &repeat_union(&k(2)?, 2)?)?;
            let base = disjoint_union(&k(n - 5)?, &hub_part)?;
            // hub of K1 ∨ 2K2 is its vertex 0, now at n - 5
            base.add_edge(0, n - 5)
        }
        GraphFamily::GK { n, k: kk, delta } => {
            if kk == 0 || delta == 0 {
                return Err(Error::Family("g-k requires k >= 1 and delta >= 1".into()));
            }
            let attached = (kk + 1) * (delta + 1);
            if n < attached + 1 {
                return Err(Error::Family(format!(
                    "g-k requires n >= (k+1)(delta+1)+1 = {}, got {n}",
                    attached + 1
                )));
            }
            let big = n - attached;
            let mut g = k(big)?;
            let small = k(delta + 1)?;
            for _ in 0..=kk {
                g = disjoint_union(&g, &small)?;
            }
            let bridges = (0..=kk).map(|i| (0, big + i * (delta + 1)));
            Graph::from_edges(n, g.edges().iter().copied().chain(bridges))
        }
        GraphFamily::Custom(ref e) => e.build(),
    }
}

impl GraphFamily {
    /// Parses a CLI family tag with its parameters.
    pub fn from_tag(tag: &str, n: Option<usize>, k: Option<usize>, delta: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Error::Family(format!("family `{tag}` needs --{name}")))
        };
        Ok(match tag {
            "complete" => GraphFamily::Complete { n: need(n, "n")? },
            "path" => GraphFamily::Path { n: need(n, "n")? },
            "cycle" => GraphFamily::Cycle { n: need(n, "n")? },
            "star" => GraphFamily::Star {
                leaves: need(n, "n")?.checked_sub(1).ok_or_else(|| Error::Family("star needs n >= 1".into()))?,
            },
            "g-star-1" | "gstar1" => GraphFamily::GStar1,
            "g-star-2" | "gstar2" => GraphFamily::GStar2,
            "g-1" | "g1" => GraphFamily::G1,
            "g-n" | "gn" => GraphFamily::GN { n: need(n, "n")? },
            "g-k" | "gk" => GraphFamily::GK {
                n: need(n, "n")?,
                k: need(k, "k")?,
                delta: need(delta, "delta")?,
            },
            expr => GraphFamily::Custom(Expr::parse(expr).map_err(|_| {
                Error::Family(format!("unknown family or expression `{expr}`"))
            })?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::binomial2;
    use crate::graph::canonical_form;

    #[test]
    fn small_exceptions() {
        let g = build_family(&GraphFamily::GStar1).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
        let g = build_family(&GraphFamily::GStar2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
        let g = build_family(&GraphFamily::G1).unwrap();
        assert_eq!((g.n(), g.m()), (7, 9));
    }

    #[test]
    fn g8_shape() {
        let g = build_family(&GraphFamily::GN { n: 8 }).unwrap();
        assert_eq!((g.n(), g.m()), (8, 10));
        assert_eq!(crate::structure::find_bridges(&g).unwrap().len(), 1);
        assert_eq!(g.degree(3), 5);
    }

    #[test]
    fn gn_sizes_follow_threshold() {
        assert_eq!(build_family(&GraphFamily::GN { n: 9 }).unwrap().m(), 13);
        for n in 8..=20 {
            let g = build_family(&GraphFamily::GN { n }).unwrap();
            assert_eq!(g.m() as u64, binomial2(n as i64 - 5) + 7, "n = {n}");
            assert!(g.is_connected());
        }
        assert!(build_family(&GraphFamily::GN { n: 7 }).is_err());
    }

    #[test]
    fn gk_sizes() {
        let g = build_family(&GraphFamily::GK { n: 40, k: 3, delta: 5 }).unwrap();
        assert_eq!((g.n(), g.m()), (40, 184));
        assert!(build_family(&GraphFamily::GK { n: 12, k: 3, delta: 2 }).is_err());
        let g = build_family(&GraphFamily::GK { n: 13, k: 3, delta: 2 }).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn expressions_match_named_builds() {
        let e = Expr::parse("K1 v (2K1 + K2)").unwrap();
        assert_eq!(e.build().unwrap(), build_family(&GraphFamily::GStar1).unwrap());
        let e = Expr::parse("K_1 ∨ 3K_2").unwrap();
        assert_eq!(e.build().unwrap(), build_family(&GraphFamily::G1).unwrap());
        let e = Expr::parse("K1 v (K1 + 2K2)").unwrap();
        assert_eq!(
            canonical_form(&e.build().unwrap()).unwrap(),
            canonical_form(&build_family(&GraphFamily::GStar2).unwrap()).unwrap()
        );
        assert_eq!(Expr::parse("K3 v K4").unwrap().build().unwrap(), Graph::complete(7).unwrap());
        assert!(Expr::parse("K1 v (K2").is_err());
        assert!(Expr::parse("X3").is_err());
    }
}

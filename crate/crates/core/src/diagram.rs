//! Commutative diagrams of tensor words, compiled to exponent equations.
//!
//! A diagram is two paths of bracketed words with the same endpoints. Each
//! step between consecutive words is read off by comparing the trees: a
//! reassociation `A(BC) → (AB)C` contributes `+α(A,B,C)`, the reverse
//! contributes `−α(A,B,C)`, a swap `AB → BA` contributes `+γ(A,B)`, and a
//! step inside one factor is whiskered by the other. On simple objects of a
//! pointed category every arrow is a scalar, so a diagram commutes exactly
//! when the two paths have the same total exponent.

use std::fmt;

use crate::cochain::{Cochain, Domain};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Var(usize),
    Tensor(Box<Word>, Box<Word>),
}

impl Word {
    pub fn tensor(a: Word, b: Word) -> Word {
        Word::Tensor(Box::new(a), Box::new(b))
    }

    /// Parses words such as `X(YZ)` or `(XY)(ZW)`. Letters are variables,
    /// numbered by their position in `alphabet`; juxtaposition is a binary
    /// tensor product, so longer products need explicit brackets.
    pub fn parse(s: &str, alphabet: &str) -> Result<Word> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = Self::parse_word(&chars, &mut pos, alphabet)?;
        if pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in word {s:?}")));
        }
        Ok(w)
    }

    fn parse_word(c: &[char], pos: &mut usize, alphabet: &str) -> Result<Word> {
        let a = Self::parse_atom(c, pos, alphabet)?;
        if *pos < c.len() && c[*pos] != ')' {
            let b = Self::parse_atom(c, pos, alphabet)?;
            return Ok(Word::tensor(a, b));
        }
        Ok(a)
    }

    fn parse_atom(c: &[char], pos: &mut usize, alphabet: &str) -> Result<Word> {
        match c.get(*pos) {
            Some('(') => {
                *pos += 1;
                let w = Self::parse_word(c, pos, alphabet)?;
                if c.get(*pos) != Some(&')') {
                    return Err(Error::Parse("unbalanced brackets in word".into()));
                }
                *pos += 1;
                Ok(w)
            }
            Some(&ch) => {
                let v = alphabet
                    .chars()
                    .position(|a| a == ch)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {ch:?}")))?;
                *pos += 1;
                Ok(Word::Var(v))
            }
            None => Err(Error::Parse("unexpected end of word".into())),
        }
    }

    /// Variables at the leaves, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Word::Var(v) => vec![*v],
            Word::Tensor(a, b) => {
                let mut l = a.leaves();
                l.extend(b.leaves());
                l
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Var(v) => match "XYZW".chars().nth(*v) {
                Some(c) => write!(f, "{c}"),
                None => write!(f, "V{v}"),
            },
            Word::Tensor(a, b) => {
                let wrap = |w: &Word| match w {
                    Word::Var(_) => format!("{w}"),
                    _ => format!("({w})"),
                };
                write!(f, "{}{}", wrap(a), wrap(b))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Associator,
    Braiding,
}

/// One scalar factor: `sign · (α or γ)` at arguments given as sets of
/// variables whose degrees are summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub constraint: Constraint,
    pub sign: i64,
    pub args: Vec<Vec<usize>>,
}

fn step(from: &Word, to: &Word) -> Result<Option<Term>> {
    if from == to {
        return Ok(None);
    }
    if let (Word::Tensor(a, bc), Word::Tensor(ab, c)) = (from, to) {
        if let (Word::Tensor(b, c1), Word::Tensor(a1, b1)) = (bc.as_ref(), ab.as_ref()) {
            if a == a1 && b == b1 && c1 == c {
                return Ok(Some(Term {
                    constraint: Constraint::Associator,
                    sign: 1,
                    args: vec![a.leaves(), b.leaves(), c.leaves()],
                }));
            }
        }
    }
    if let (Word::Tensor(ab, c), Word::Tensor(a, bc)) = (from, to) {
        if let (Word::Tensor(a1, b1), Word::Tensor(b, c1)) = (ab.as_ref(), bc.as_ref()) {
            if a == a1 && b == b1 && c1 == c {
                return Ok(Some(Term {
                    constraint: Constraint::Associator,
                    sign: -1,
                    args: vec![a.leaves(), b.leaves(), c.leaves()],
                }));
            }
        }
    }
    if let (Word::Tensor(a, b), Word::Tensor(b1, a1)) = (from, to) {
        if a == a1 && b == b1 {
            return Ok(Some(Term {
                constraint: Constraint::Braiding,
                sign: 1,
                args: vec![a.leaves(), b.leaves()],
            }));
        }
    }
    if let (Word::Tensor(a, b), Word::Tensor(a1, b1)) = (from, to) {
        if a == a1 {
            return step(b, b1);
        }
        if b == b1 {
            return step(a, a1);
        }
    }
    Err(Error::Parse(format!("no single constraint maps {from} to {to}")))
}

/// Exponent relation `Σ terms = 0` in the variables of a diagram.
#[derive(Debug, Clone)]
pub struct Relation {
    pub vars: usize,
    pub terms: Vec<Term>,
}

/// Compiles a diagram given as two paths of words with shared endpoints.
pub fn compile(vars: usize, left: &[Word], right: &[Word]) -> Result<Relation> {
    if left.first() != right.first() || left.last() != right.last() {
        return Err(Error::Parse("paths do not share their endpoints".into()));
    }
    let mut terms = Vec::new();
    for (path, sign) in [(left, 1), (right, -1)] {
        for w in path.windows(2) {
            if let Some(mut t) = step(&w[0], &w[1])? {
                t.sign *= sign;
                terms.push(t);
            }
        }
    }
    Ok(Relation { vars, terms })
}

fn words(path: &[&str], alphabet: &str) -> Vec<Word> {
    path.iter().map(|s| Word::parse(s, alphabet).expect("well-formed word")).collect()
}

/// The associativity pentagon.
pub fn pentagon() -> Relation {
    let a = "XYZW";
    compile(
        4,
        &words(&["X(Y(ZW))", "(XY)(ZW)", "((XY)Z)W"], a),
        &words(&["X(Y(ZW))", "X((YZ)W)", "(X(YZ))W", "((XY)Z)W"], a),
    )
    .expect("pentagon compiles")
}

/// First hexagon, starting at `X(YZ)`.
pub fn hexagon_first() -> Relation {
    let a = "XYZ";
    compile(
        3,
        &words(&["X(YZ)", "(XY)Z", "Z(XY)", "(ZX)Y"], a),
        &words(&["X(YZ)", "X(ZY)", "(XZ)Y", "(ZX)Y"], a),
    )
    .expect("hexagon compiles")
}

/// Second hexagon, starting at `(XY)Z`.
pub fn hexagon_second() -> Relation {
    let a = "XYZ";
    compile(
        3,
        &words(&["(XY)Z", "X(YZ)", "(YZ)X", "Y(ZX)"], a),
        &words(&["(XY)Z", "(YX)Z", "Y(XZ)", "Y(ZX)"], a),
    )
    .expect("hexagon compiles")
}

impl Relation {
    /// Evaluates the relation at local indices of the variables.
    pub fn evaluate(&self, domain: &Domain, alpha: &Cochain, gamma: Option<&Cochain>, at: &[usize]) -> u32 {
        let n = alpha.modulus() as i64;
        let mut s: i64 = 0;
        let mut idx = [0usize; 3];
        for t in &self.terms {
            for (slot, vars) in idx.iter_mut().zip(&t.args) {
                *slot = vars.iter().fold(0, |acc, &v| domain.add(acc, at[v]));
            }
            let v = match t.constraint {
                Constraint::Associator => alpha.get(&idx[..3]),
                Constraint::Braiding => gamma.map_or(0, |g| g.get(&idx[..2])),
            } as i64;
            s += t.sign * v;
        }
        s.rem_euclid(n) as u32
    }

    /// First assignment (local indices) where the relation fails.
    pub fn first_failure(&self, alpha: &Cochain, gamma: Option<&Cochain>) -> Option<Vec<usize>> {
        let d = alpha.domain();
        let n = d.len();
        let mut at = vec![0usize; self.vars];
        loop {
            if self.evaluate(d, alpha, gamma, &at) != 0 {
                return Some(at);
            }
            let mut k = self.vars;
            loop {
                if k == 0 {
                    return None;
                }
                k -= 1;
                at[k] += 1;
                if at[k] < n {
                    break;
                }
                at[k] = 0;
            }
        }
    }

    /// Linear coefficients on the table positions of α and γ at one
    /// assignment, as `(constraint, table index, coefficient)`.
    pub fn linearize(&self, domain: &Domain, at: &[usize]) -> Vec<(Constraint, usize, i64)> {
        let mut out = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let idx: Vec<usize> = t
                .args
                .iter()
                .map(|vars| vars.iter().fold(0, |acc, &v| domain.add(acc, at[v])))
                .collect();
            if idx.contains(&0) {
                continue;
            }
            out.push((t.constraint, domain.tuple_index(&idx), t.sign));
        }
        out
    }
}

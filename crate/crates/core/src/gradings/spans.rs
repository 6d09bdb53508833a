//! Transcribed gradings: a small expression language for spanning vectors
//! and the closure validator with single-term erratum search.
//!
//! A fixture is a header line `grading NAME slots K1 K2 ...` (each K a
//! modulus or `Z`) followed by lines `LABEL : VEC ; VEC ; ...`. Label
//! entries are integers or `e`, which expands the line into the two signs.
//! Vectors are sums of terms `[scalars] atom`, where scalars are integers,
//! fractions, `i`, `w` (cube root of unity), `w2`, `s3` (sqrt 3), `e`, or
//! bracketed sums; atoms are names (`E1`, `b17`, `t2`), octonions in a slot
//! (`u1^3`, `1^2`, `(u1+v1)^1`).

use std::fmt;

use super::core::{grading_from_components, Component, Grading, GradingError, Label, Slot};
use crate::algcore::AlgebraTable;
use crate::exactmath::CycNum;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlotKind {
    Cyclic(i64),
    Free,
}

impl SlotKind {
    fn slot(self, v: i64) -> Slot {
        match self {
            SlotKind::Cyclic(m) => Slot::cyclic(v, m),
            SlotKind::Free => Slot::Free(v),
        }
    }
}

/// Atom of a spanning expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    Name(String),
    /// Integer combination of octonion basis names ("1" for the unit),
    /// placed in an embedding slot.
    Octonion {
        terms: Vec<(i64, String)>,
        slot: usize,
    },
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Name(n) => f.write_str(n),
            Atom::Octonion { terms, slot } => {
                let mut s = String::new();
                for (k, (c, n)) in terms.iter().enumerate() {
                    let sign = if *c < 0 {
                        "-"
                    } else if k > 0 {
                        "+"
                    } else {
                        ""
                    };
                    let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
                    s.push_str(&format!("{sign}{mag}{n}"));
                }
                if terms.len() == 1 {
                    write!(f, "{s}^{slot}")
                } else {
                    write!(f, "({s})^{slot}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coef: CycNum,
    pub atom: Atom,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedVector {
    pub text: String,
    pub terms: Vec<Term>,
}

impl ParsedVector {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.terms.iter().map(|t| format!("({})*{}", t.coef, t.atom)).collect();
        parts.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixtureComponent {
    pub label: Label,
    pub vectors: Vec<ParsedVector>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub slots: Vec<SlotKind>,
    pub components: Vec<FixtureComponent>,
}

/// Turns atoms into coordinate vectors of a particular algebra.
pub trait AtomResolver {
    fn dim(&self) -> usize;
    fn resolve(&self, atom: &Atom) -> Result<Vec<CycNum>, String>;
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = chars[start..i].iter().collect();
            out.push(Tok::Num(n.parse().map_err(|e| format!("{e}"))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-()^/[]*".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    eps: i64,
}

fn scalar_name(name: &str, eps: i64) -> Option<CycNum> {
    Some(match name {
        "i" => CycNum::i(),
        "w" => CycNum::omega(),
        "w2" => CycNum::omega() * CycNum::omega(),
        "s3" => CycNum::sqrt3(),
        "s2" => CycNum::sqrt2(),
        "e" => CycNum::int(eps),
        _ => return None,
    })
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), String> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(format!("expected {c:?} at token {}", self.pos))
        }
    }

    fn sign(&mut self) -> i64 {
        let mut s = 1;
        loop {
            if self.eat('-') {
                s = -s;
            } else if !self.eat('+') {
                return s;
            }
        }
    }

    /// Next scalar factor, or None when an atom starts here.
    fn scalar_factor(&mut self) -> Result<Option<CycNum>, String> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                if self.peek_at(1) == Some(&Tok::Sym('^')) {
                    return Ok(None);
                }
                self.pos += 1;
                if self.peek() == Some(&Tok::Sym('/')) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            Ok(Some(CycNum::rational(n, d)))
                        }
                        _ => Err("expected denominator".into()),
                    }
                } else {
                    Ok(Some(CycNum::int(n)))
                }
            }
            Some(Tok::Ident(name)) => match scalar_name(&name, self.eps) {
                Some(v) => {
                    self.pos += 1;
                    Ok(Some(v))
                }
                None => Ok(None),
            },
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let v = self.scalar_sum()?;
                self.expect(']')?;
                Ok(Some(v))
            }
            _ => Ok(None),
        }
    }

    fn scalar_sum(&mut self) -> Result<CycNum, String> {
        let mut total = CycNum::ZERO;
        loop {
            let s = self.sign();
            let mut prod = CycNum::int(s);
            let mut any = false;
            while let Some(f) = self.scalar_factor()? {
                prod *= f;
                any = true;
                self.eat('*');
            }
            if !any {
                return Err("empty scalar term".into());
            }
            total += prod;
            if !matches!(self.peek(), Some(Tok::Sym('+' | '-'))) {
                return Ok(total);
            }
        }
    }

    fn slot(&mut self) -> Result<usize, String> {
        self.expect('^')?;
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n as usize)
            }
            _ => Err("expected slot number".into()),
        }
    }

    fn octonion_group(&mut self) -> Result<Vec<(i64, String)>, String> {
        let mut terms = Vec::new();
        loop {
            let s = self.sign();
            let mut c = s;
            if let Some(Tok::Num(n)) = self.peek().cloned() {
                if !matches!(self.peek_at(1), Some(Tok::Sym('+' | '-' | ')'))) {
                    self.pos += 1;
                    c *= n;
                }
            }
            let name = match self.peek().cloned() {
                Some(Tok::Ident(n)) => n,
                Some(Tok::Num(1)) => "1".to_string(),
                t => return Err(format!("expected octonion name, found {t:?}")),
            };
            self.pos += 1;
            terms.push((c, name));
            if self.eat(')') {
                return Ok(terms);
            }
        }
    }

    fn atom(&mut self) -> Result<Atom, String> {
        match self.peek().cloned() {
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let terms = self.octonion_group()?;
                let slot = self.slot()?;
                Ok(Atom::Octonion { terms, slot })
            }
            Some(Tok::Num(1)) => {
                self.pos += 1;
                let slot = self.slot()?;
                Ok(Atom::Octonion { terms: vec![(1, "1".into())], slot })
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Sym('^')) {
                    let slot = self.slot()?;
                    Ok(Atom::Octonion { terms: vec![(1, name)], slot })
                } else {
                    Ok(Atom::Name(name))
                }
            }
            t => Err(format!("expected atom, found {t:?}")),
        }
    }

    fn vector(&mut self) -> Result<Vec<Term>, String> {
        let mut terms = Vec::new();
        while self.peek().is_some() {
            let s = self.sign();
            let mut coef = CycNum::int(s);
            while let Some(f) = self.scalar_factor()? {
                coef *= f;
                self.eat('*');
            }
            let atom = self.atom()?;
            terms.push(Term { coef, atom });
        }
        Ok(terms)
    }
}

pub fn parse_vector(text: &str, eps: i64) -> Result<ParsedVector, String> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks: &toks, pos: 0, eps };
    let terms = p.vector().map_err(|e| format!("{e} in {text:?}"))?;
    Ok(ParsedVector { text: text.trim().to_string(), terms })
}

/// Parses every fixture in a text block.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>, String> {
    let mut out: Vec<Fixture> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("grading ") {
            let mut words = rest.split_whitespace();
            let name = words.next().ok_or("missing fixture name")?.to_string();
            if words.next() != Some("slots") {
                return Err(format!("line {}: expected 'slots'", ln + 1));
            }
            let slots = words
                .map(|w| if w == "Z" { Ok(SlotKind::Free) } else { w.parse().map(SlotKind::Cyclic) })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("line {}: {e}", ln + 1))?;
            out.push(Fixture { name, slots, components: vec![] });
            continue;
        }
        let fixture = out.last_mut().ok_or_else(|| format!("line {}: component before header", ln + 1))?;
        let (label_text, body) = line.split_once(':').ok_or_else(|| format!("line {}: missing ':'", ln + 1))?;
        let label_words: Vec<&str> = label_text.split_whitespace().collect();
        if label_words.len() != fixture.slots.len() {
            return Err(format!("line {}: label has the wrong length", ln + 1));
        }
        let signs: &[i64] = if label_words.contains(&"e") { &[1, -1] } else { &[1] };
        for &eps in signs {
            let slots = label_words
                .iter()
                .zip(&fixture.slots)
                .map(|(w, kind)| {
                    let v = if *w == "e" { eps } else { w.parse::<i64>().map_err(|e| format!("{e}"))? };
                    Ok(kind.slot(v))
                })
                .collect::<Result<Vec<_>, String>>()
                .map_err(|e| format!("line {}: {e}", ln + 1))?;
            let vectors = body
                .split(';')
                .map(|v| parse_vector(v, eps))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("line {}: {e}", ln + 1))?;
            fixture.components.push(FixtureComponent { label: Label(slots), vectors });
        }
    }
    Ok(out)
}

pub fn evaluate(v: &ParsedVector, resolver: &dyn AtomResolver) -> Result<Vec<CycNum>, String> {
    let mut out = vec![CycNum::ZERO; resolver.dim()];
    for t in &v.terms {
        let a = resolver.resolve(&t.atom)?;
        for (o, x) in out.iter_mut().zip(a) {
            if !x.is_zero() {
                *o += t.coef * x;
            }
        }
    }
    Ok(out)
}

impl Fixture {
    pub fn to_grading(&self, alg: &AlgebraTable, resolver: &dyn AtomResolver) -> Result<Grading, String> {
        let components = self
            .components
            .iter()
            .map(|c| {
                let basis = c.vectors.iter().map(|v| evaluate(v, resolver)).collect::<Result<Vec<_>, _>>()?;
                Ok(Component { label: c.label.clone(), basis })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(grading_from_components(alg, &self.name, components))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.vectors.len()).collect()
    }
}

/// A single-term change restoring closure of a transcribed grading.
#[derive(Clone, Debug, PartialEq)]
pub struct Erratum {
    pub label: Label,
    pub printed: String,
    pub corrected: String,
}

#[derive(Clone, Debug)]
pub struct FixtureReport {
    pub name: String,
    pub closed: bool,
    pub failure: Option<String>,
    pub errata: Vec<Erratum>,
}

fn closes(f: &Fixture, alg: &AlgebraTable, resolver: &dyn AtomResolver) -> Result<Grading, GradingError> {
    let g = f.to_grading(alg, resolver).map_err(|reason| GradingError::FixtureMismatch {
        fixture: f.name.clone(),
        label: String::new(),
        reason,
    })?;
    g.check_closure(alg)?;
    Ok(g)
}

/// Rewrites of one vector considered as transcription slips: moving one
/// term to another embedding slot, flipping the sign of one term, or
/// renaming an index u_a, v_a -> u_b, v_b throughout the vector, possibly
/// together with one sign flip.
pub fn vector_variants(v: &ParsedVector) -> Vec<ParsedVector> {
    let mut out = Vec::new();
    for (ti, t) in v.terms.iter().enumerate() {
        let Atom::Octonion { terms, slot } = &t.atom else {
            continue;
        };
        for alt in (1..=3).filter(|s| s != slot) {
            let mut w = v.clone();
            w.terms[ti].atom = Atom::Octonion { terms: terms.clone(), slot: alt };
            out.push(w);
        }
    }
    let flips = |w: &ParsedVector, out: &mut Vec<ParsedVector>| {
        for ti in 0..w.terms.len() {
            let mut f = w.clone();
            f.terms[ti].coef = -f.terms[ti].coef;
            out.push(f);
        }
    };
    flips(v, &mut out);
    for a in 1..=3 {
        for b in (1..=3).filter(|&b| b != a) {
            let from = [format!("u{a}"), format!("v{a}")];
            let mut w = v.clone();
            let mut touched = false;
            for t in w.terms.iter_mut() {
                if let Atom::Octonion { terms, .. } = &mut t.atom {
                    for (_, name) in terms.iter_mut() {
                        if *name == from[0] || *name == from[1] {
                            *name = format!("{}{b}", &name[..1]);
                            touched = true;
                        }
                    }
                }
            }
            if touched {
                out.push(w.clone());
                flips(&w, &mut out);
            }
        }
    }
    for w in out.iter_mut() {
        w.text = w.render();
    }
    out
}

/// Checks that the transcription is a grading; otherwise searches for a
/// single-vector rewrite (see [`vector_variants`]) that makes it one.
pub fn validate_fixture(f: &Fixture, alg: &AlgebraTable, resolver: &dyn AtomResolver) -> FixtureReport {
    match closes(f, alg, resolver) {
        Ok(_) => FixtureReport { name: f.name.clone(), closed: true, failure: None, errata: vec![] },
        Err(e) => {
            let mut errata = Vec::new();
            for (ci, c) in f.components.iter().enumerate() {
                for (vi, v) in c.vectors.iter().enumerate() {
                    for w in vector_variants(v) {
                        let mut g = f.clone();
                        g.components[ci].vectors[vi] = w;
                        if closes(&g, alg, resolver).is_ok() {
                            errata.push(Erratum {
                                label: c.label.clone(),
                                printed: v.text.clone(),
                                corrected: g.components[ci].vectors[vi].render(),
                            });
                        }
                    }
                }
            }
            FixtureReport { name: f.name.clone(), closed: false, failure: Some(e.to_string()), errata }
        }
    }
}

/// Applies the first erratum candidate of a report, if any.
pub fn corrected_fixture(f: &Fixture, report: &FixtureReport) -> Option<Fixture> {
    let e = report.errata.first()?;
    let mut g = f.clone();
    for c in g.components.iter_mut().filter(|c| c.label == e.label) {
        for v in c.vectors.iter_mut().filter(|v| v.text == e.printed) {
            if let Some(w) = vector_variants(v).into_iter().find(|w| w.render() == e.corrected) {
                *v = w;
                return Some(g);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scalars_and_atoms() {
        let v = parse_vector("-i e 1^3 + 1^2", -1).unwrap();
        assert_eq!(v.terms.len(), 2);
        assert_eq!(v.terms[0].coef, CycNum::i());
        assert_eq!(v.terms[0].atom, Atom::Octonion { terms: vec![(1, "1".into())], slot: 3 });
        let v = parse_vector("i e(-e1 + e2)^3 - (u2 - v2)^2", 1).unwrap();
        assert_eq!(v.terms[0].coef, CycNum::i());
        assert_eq!(v.terms[1].coef, CycNum::int(-1));
        assert_eq!(v.terms[0].atom, Atom::Octonion { terms: vec![(-1, "e1".into()), (1, "e2".into())], slot: 3 });
        let v = parse_vector("-w2 v2^3 - w u2^2 + e1^1", 1).unwrap();
        assert_eq!(v.terms[0].coef, -(CycNum::omega() * CycNum::omega()));
        let v = parse_vector("[1 + 2w] b17 + 1/2 t3 - E2", 1).unwrap();
        assert_eq!(v.terms[0].coef, CycNum::ONE + CycNum::int(2) * CycNum::omega());
        assert_eq!(v.terms[1].coef, CycNum::rational(1, 2));
        assert_eq!(v.terms[2].atom, Atom::Name("E2".into()));
    }

    #[test]
    fn epsilon_lines_expand() {
        let text = "grading demo slots 2 Z\n0 0 : E1\n1 e : e E2 + E3\n";
        let f = parse_fixtures(text).unwrap();
        assert_eq!(f[0].components.len(), 3);
        assert_eq!(f[0].components[2].label, Label(vec![Slot::cyclic(1, 2), Slot::Free(-1)]));
        assert_eq!(f[0].components[2].vectors[0].terms[0].coef, CycNum::int(-1));
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(parse_vector("i +", 1).is_err());
        assert!(parse_fixtures("0 : E1").is_err());
        assert!(parse_fixtures("grading x slots 2\n0 1 : E1").is_err());
    }
}

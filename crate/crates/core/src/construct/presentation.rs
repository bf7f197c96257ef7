//! Finitely presented semirings.
//!
//! The quotient of the free semiring on the generators by the congruence
//! generated by the relations is built by enumerating classes of terms.
//! Every class is named by a term; partial `+` and `·` tables over the live
//! classes are completed breadth-first, and every instance of the semiring
//! axioms (plus `a + a = a` when requested) whose sides can be evaluated is
//! used either to merge two classes or to fill a missing table entry. Merges
//! propagate through the tables by congruence. The run stops when the tables
//! are total and no axiom instance produces anything new, or when filling an
//! entry would need more than `universe_bound` live classes.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semiring::FiniteSemiring;

pub const DEFAULT_UNIVERSE_BOUND: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Gen(usize),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn plus(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn times(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn render(&self, generators: &[String]) -> String {
        match self {
            Term::Zero => "0".into(),
            Term::One => "1".into(),
            Term::Gen(i) => generators[*i].clone(),
            Term::Add(a, b) => {
                let rhs = b.render(generators);
                if matches!(**b, Term::Add(..)) {
                    format!("{}+({rhs})", a.render(generators))
                } else {
                    format!("{}+{rhs}", a.render(generators))
                }
            }
            Term::Mul(a, b) => {
                let lhs = match **a {
                    Term::Add(..) => format!("({})", a.render(generators)),
                    _ => a.render(generators),
                };
                let rhs = match **b {
                    Term::Add(..) | Term::Mul(..) => format!("({})", b.render(generators)),
                    _ => b.render(generators),
                };
                format!("{lhs}*{rhs}")
            }
        }
    }

    /// Evaluates the term in a finite semiring; `generators[i]` is the image of generator `i`.
    pub fn evaluate(&self, s: &FiniteSemiring, generators: &[usize]) -> usize {
        match self {
            Term::Zero => s.zero(),
            Term::One => s.one(),
            Term::Gen(i) => generators[*i],
            Term::Add(a, b) => s.add(a.evaluate(s, generators), b.evaluate(s, generators)),
            Term::Mul(a, b) => s.mul(a.evaluate(s, generators), b.evaluate(s, generators)),
        }
    }
}

/// Parses `sum := product ('+' product)*`, `product := power ('*'? power)*`,
/// `power := atom ('^' k)?`, `atom := integer | generator | '(' sum ')'`.
/// A run of letters that is not itself a generator name is read as the
/// product of single-letter generators (`xy` is `x*y`).
pub fn parse_term(src: &str, generators: &[String]) -> Result<Term> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        generators,
        src,
    };
    let term = parser.sum()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(term)
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Plus,
    Star,
    Caret,
    Open,
    Close,
    Number(u32),
    Ident(String),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' | '*' | '^' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Token::Plus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(d);
                    chars.next();
                }
                let n = digits
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("number too large in `{src}`")))?;
                out.push(Token::Number(n));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                    ident.push(d);
                    chars.next();
                }
                out.push(Token::Ident(ident));
            }
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unexpected character `{other}` in `{src}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    generators: &'a [String],
    src: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::InvalidArgument(format!("{what} at token {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn sum(&mut self) -> Result<Term> {
        let mut term = self.product()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            term = Term::plus(term, self.product()?);
        }
        Ok(term)
    }

    fn product(&mut self) -> Result<Term> {
        let mut term = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                Some(Token::Ident(_) | Token::Open | Token::Number(_)) => {}
                _ => return Ok(term),
            }
            term = Term::times(term, self.power()?);
        }
    }

    fn power(&mut self) -> Result<Term> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek() {
            Some(&Token::Number(k)) => {
                self.pos += 1;
                Ok((1..k).fold(if k == 0 { Term::One } else { base.clone() }, |acc, _| {
                    Term::times(acc, base.clone())
                }))
            }
            _ => Err(self.error("expected exponent")),
        }
    }

    fn atom(&mut self) -> Result<Term> {
        let token = self.peek().cloned().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        match token {
            Token::Number(0) => Ok(Term::Zero),
            Token::Number(k) => Ok((1..k).fold(Term::One, |acc, _| Term::plus(acc, Term::One))),
            Token::Ident(name) => {
                if let Some(i) = self.generators.iter().position(|g| *g == name) {
                    return Ok(Term::Gen(i));
                }
                let letters: Option<Vec<Term>> = name
                    .chars()
                    .map(|c| {
                        self.generators
                            .iter()
                            .position(|g| g.len() == c.len_utf8() && g.starts_with(c))
                            .map(Term::Gen)
                    })
                    .collect();
                letters
                    .and_then(|ts| ts.into_iter().reduce(Term::times))
                    .ok_or_else(|| self.error(&format!("unknown generator `{name}`")))
            }
            Token::Open => {
                let inner = self.sum()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error("unexpected token")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<(Term, Term)>,
    pub additively_idempotent: bool,
    pub universe_bound: usize,
}

impl Presentation {
    /// Relations are written `lhs = rhs`.
    pub fn parse(
        generators: &[&str],
        relations: &[&str],
        additively_idempotent: bool,
        universe_bound: usize,
    ) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
        for g in &generators {
            let mut chars = g.chars();
            let ok = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && chars.all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidArgument(format!("bad generator name `{g}`")));
            }
        }
        let relations = relations
            .iter()
            .map(|r| {
                let (lhs, rhs) = r.split_once('=').ok_or_else(|| {
                    Error::InvalidArgument(format!("relation `{r}` has no `=`"))
                })?;
                Ok((parse_term(lhs, &generators)?, parse_term(rhs, &generators)?))
            })
            .collect::<Result<_>>()?;
        Ok(Presentation {
            generators,
            relations,
            additively_idempotent,
            universe_bound,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PresentationStatus {
    Finite,
    ExceedsBound,
}

impl fmt::Display for PresentationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationStatus::Finite => "finite",
            PresentationStatus::ExceedsBound => "exceeds-bound",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationResult {
    pub status: PresentationStatus,
    pub semiring: Option<FiniteSemiring>,
    /// generator -> label of the older class it was merged into
    pub collapsed_generators: Vec<(String, String)>,
    pub universe_bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Add,
    Mul,
}

struct Overflow;

struct Engine<'a> {
    p: &'a Presentation,
    parent: Vec<usize>,
    terms: Vec<Term>,
    add: HashMap<(usize, usize), usize>,
    mul: HashMap<(usize, usize), usize>,
    pending: Vec<(usize, usize)>,
    live: usize,
}

impl<'a> Engine<'a> {
    fn new(p: &'a Presentation) -> Self {
        Engine {
            p,
            parent: Vec::new(),
            terms: Vec::new(),
            add: HashMap::new(),
            mul: HashMap::new(),
            pending: Vec::new(),
            live: 0,
        }
    }

    fn root(&self, mut a: usize) -> usize {
        while self.parent[a] != a {
            a = self.parent[a];
        }
        a
    }

    fn new_class(&mut self, term: Term) -> Result<usize, Overflow> {
        if self.live >= self.p.universe_bound {
            return Err(Overflow);
        }
        let id = self.parent.len();
        self.parent.push(id);
        self.terms.push(term);
        self.live += 1;
        Ok(id)
    }

    fn key(&self, op: Op, a: usize, b: usize) -> (usize, usize) {
        let (a, b) = (self.root(a), self.root(b));
        match op {
            Op::Add => (a.min(b), a.max(b)),
            Op::Mul => (a, b),
        }
    }

    fn get(&self, op: Op, a: usize, b: usize) -> Option<usize> {
        let key = self.key(op, a, b);
        let table = match op {
            Op::Add => &self.add,
            Op::Mul => &self.mul,
        };
        table.get(&key).map(|&c| self.root(c))
    }

    /// Records `a op b = c`; returns whether anything changed.
    fn set(&mut self, op: Op, a: usize, b: usize, c: usize) -> bool {
        let key = self.key(op, a, b);
        let c = self.root(c);
        let existing = match op {
            Op::Add => self.add.get(&key).copied(),
            Op::Mul => self.mul.get(&key).copied(),
        };
        match existing {
            Some(d) if self.root(d) == c => false,
            Some(d) => {
                self.pending.push((d, c));
                true
            }
            None => {
                match op {
                    Op::Add => self.add.insert(key, c),
                    Op::Mul => self.mul.insert(key, c),
                };
                true
            }
        }
    }

    fn merge(&mut self, a: usize, b: usize) -> bool {
        if self.root(a) == self.root(b) {
            return false;
        }
        self.pending.push((a, b));
        true
    }

    /// Applies queued merges, keeping the older class, and re-keys the tables
    /// until no two entries disagree.
    fn process_merges(&mut self) {
        while !self.pending.is_empty() {
            for (a, b) in std::mem::take(&mut self.pending) {
                let (ra, rb) = (self.root(a), self.root(b));
                if ra != rb {
                    let (keep, drop) = (ra.min(rb), ra.max(rb));
                    self.parent[drop] = keep;
                    self.live -= 1;
                }
            }
            for op in [Op::Add, Op::Mul] {
                let old = match op {
                    Op::Add => std::mem::take(&mut self.add),
                    Op::Mul => std::mem::take(&mut self.mul),
                };
                let mut fresh: HashMap<(usize, usize), usize> = HashMap::with_capacity(old.len());
                let mut conflicts = Vec::new();
                for ((a, b), c) in old {
                    let key = self.key(op, a, b);
                    let c = self.root(c);
                    match fresh.get(&key) {
                        Some(&d) if d != c => conflicts.push((d, c)),
                        Some(_) => {}
                        None => {
                            fresh.insert(key, c);
                        }
                    }
                }
                self.pending.extend(conflicts);
                match op {
                    Op::Add => self.add = fresh,
                    Op::Mul => self.mul = fresh,
                }
            }
        }
    }

    fn live_classes(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&a| self.parent[a] == a).collect()
    }

    /// `x1 op1 y1 = x2 op2 y2`: merge when both sides are known, otherwise
    /// fill in whichever side is missing.
    fn deduce(&mut self, lhs: (Op, usize, usize), rhs: (Op, usize, usize)) -> bool {
        let l = self.get(lhs.0, lhs.1, lhs.2);
        let r = self.get(rhs.0, rhs.1, rhs.2);
        match (l, r) {
            (Some(l), Some(r)) => self.merge(l, r),
            (Some(l), None) => self.set(rhs.0, rhs.1, rhs.2, l),
            (None, Some(r)) => self.set(lhs.0, lhs.1, lhs.2, r),
            (None, None) => false,
        }
    }

    fn axiom_pass(&mut self) -> bool {
        let live = self.live_classes();
        let (zero, one) = (self.root(0), self.root(1));
        let mut changed = false;
        for &a in &live {
            changed |= self.set(Op::Add, zero, a, a);
            changed |= self.set(Op::Mul, one, a, a);
            changed |= self.set(Op::Mul, a, one, a);
            changed |= self.set(Op::Mul, zero, a, zero);
            changed |= self.set(Op::Mul, a, zero, zero);
            if self.p.additively_idempotent {
                changed |= self.set(Op::Add, a, a, a);
            }
        }
        for &a in &live {
            for &b in &live {
                let ab_add = self.get(Op::Add, a, b);
                let ab_mul = self.get(Op::Mul, a, b);
                for &c in &live {
                    let bc_add = self.get(Op::Add, b, c);
                    let bc_mul = self.get(Op::Mul, b, c);
                    if let (Some(ab), Some(bc)) = (ab_add, bc_add) {
                        changed |= self.deduce((Op::Add, ab, c), (Op::Add, a, bc));
                    }
                    if let (Some(ab), Some(bc)) = (ab_mul, bc_mul) {
                        changed |= self.deduce((Op::Mul, ab, c), (Op::Mul, a, bc));
                    }
                    // a(b + c) = ab + ac
                    if let (Some(bc), Some(ab), Some(ac)) =
                        (bc_add, ab_mul, self.get(Op::Mul, a, c))
                    {
                        changed |= self.deduce((Op::Mul, a, bc), (Op::Add, ab, ac));
                    }
                    // (a + b)c = ac + bc
                    if let (Some(ab), Some(ac), Some(bc)) =
                        (ab_add, self.get(Op::Mul, a, c), bc_mul)
                    {
                        changed |= self.deduce((Op::Mul, ab, c), (Op::Add, ac, bc));
                    }
                }
            }
        }
        changed
    }

    fn eval_partial(&self, term: &Term, gens: &[usize]) -> Option<usize> {
        match term {
            Term::Zero => Some(self.root(0)),
            Term::One => Some(self.root(1)),
            Term::Gen(i) => Some(self.root(gens[*i])),
            Term::Add(a, b) => {
                let (a, b) = (self.eval_partial(a, gens)?, self.eval_partial(b, gens)?);
                self.get(Op::Add, a, b)
            }
            Term::Mul(a, b) => {
                let (a, b) = (self.eval_partial(a, gens)?, self.eval_partial(b, gens)?);
                self.get(Op::Mul, a, b)
            }
        }
    }

    fn eval_define(&mut self, term: &Term, gens: &[usize]) -> Result<usize, Overflow> {
        match term {
            Term::Zero => Ok(self.root(0)),
            Term::One => Ok(self.root(1)),
            Term::Gen(i) => Ok(self.root(gens[*i])),
            Term::Add(x, y) | Term::Mul(x, y) => {
                let op = if matches!(term, Term::Add(..)) { Op::Add } else { Op::Mul };
                let a = self.eval_define(x, gens)?;
                let b = self.eval_define(y, gens)?;
                if let Some(c) = self.get(op, a, b) {
                    return Ok(c);
                }
                let fresh = match op {
                    Op::Add => Term::plus(self.terms[a].clone(), self.terms[b].clone()),
                    Op::Mul => Term::times(self.terms[a].clone(), self.terms[b].clone()),
                };
                let c = self.new_class(fresh)?;
                self.set(op, a, b, c);
                Ok(c)
            }
        }
    }

    fn relation_pass(&mut self, gens: &[usize]) -> bool {
        let mut changed = false;
        for (lhs, rhs) in &self.p.relations {
            if let (Some(l), Some(r)) = (self.eval_partial(lhs, gens), self.eval_partial(rhs, gens)) {
                if self.root(l) != self.root(r) {
                    self.pending.push((l, r));
                    changed = true;
                }
            }
        }
        changed
    }

    /// Undefined entry among the oldest classes first.
    fn first_undefined(&self) -> Option<(Op, usize, usize)> {
        let live = self.live_classes();
        for k in 0..live.len() {
            for i in 0..=k {
                let (a, b) = (live[i], live[k]);
                if self.get(Op::Add, a, b).is_none() {
                    return Some((Op::Add, a, b));
                }
                for (x, y) in [(a, b), (b, a)] {
                    if self.get(Op::Mul, x, y).is_none() {
                        return Some((Op::Mul, x, y));
                    }
                }
            }
        }
        None
    }

    fn run(&mut self, gens: &mut Vec<usize>) -> Result<(), Overflow> {
        self.new_class(Term::Zero)?;
        self.new_class(Term::One)?;
        for i in 0..self.p.generators.len() {
            gens.push(self.new_class(Term::Gen(i))?);
        }
        for (lhs, rhs) in &self.p.relations {
            let l = self.eval_define(lhs, gens)?;
            let r = self.eval_define(rhs, gens)?;
            self.merge(l, r);
        }
        loop {
            self.process_merges();
            let mut changed = self.axiom_pass();
            changed |= self.relation_pass(gens);
            if changed {
                continue;
            }
            let Some((op, a, b)) = self.first_undefined() else {
                return Ok(());
            };
            let term = match op {
                Op::Add => Term::plus(self.terms[a].clone(), self.terms[b].clone()),
                Op::Mul => Term::times(self.terms[a].clone(), self.terms[b].clone()),
            };
            let c = self.new_class(term)?;
            self.set(op, a, b, c);
        }
    }

    fn collapsed(&self, gens: &[usize]) -> Vec<(String, String)> {
        gens.iter()
            .enumerate()
            .filter_map(|(i, &g)| {
                let r = self.root(g);
                (r != g).then(|| {
                    (
                        self.p.generators[i].clone(),
                        self.terms[r].render(&self.p.generators),
                    )
                })
            })
            .collect()
    }

    fn table(&self, gens: &[usize]) -> Result<FiniteSemiring> {
        let live = self.live_classes();
        let index: HashMap<usize, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let lookup = |op, a, b| -> Result<usize> {
            self.get(op, a, b)
                .map(|c| index[&c])
                .ok_or_else(|| Error::Internal("presentation table left incomplete".into()))
        };
        let mut add = vec![vec![0; live.len()]; live.len()];
        let mut mul = add.clone();
        for (i, &a) in live.iter().enumerate() {
            for (j, &b) in live.iter().enumerate() {
                add[i][j] = lookup(Op::Add, a, b)?;
                mul[i][j] = lookup(Op::Mul, a, b)?;
            }
        }
        let labels = live
            .iter()
            .map(|&c| self.terms[c].render(&self.p.generators))
            .collect();
        let s = FiniteSemiring::new(add, mul, index[&self.root(0)], index[&self.root(1)], labels)
            .map_err(|e| Error::Internal(format!("presentation produced a non-semiring: {e}")))?;
        let images: Vec<usize> = gens.iter().map(|&g| index[&self.root(g)]).collect();
        for (lhs, rhs) in &self.p.relations {
            if lhs.evaluate(&s, &images) != rhs.evaluate(&s, &images) {
                return Err(Error::Internal("presentation table breaks a relation".into()));
            }
        }
        if self.p.additively_idempotent && s.elements().any(|a| s.add(a, a) != a) {
            return Err(Error::Internal("presentation table is not additively idempotent".into()));
        }
        Ok(s)
    }
}

/// Builds the presented semiring, or reports that the bound was reached.
pub fn presentation(p: &Presentation) -> Result<PresentationResult> {
    if p.universe_bound < 2 {
        return Err(Error::InvalidArgument("universe bound must be >= 2".into()));
    }
    let mut engine = Engine::new(p);
    let mut gens = Vec::new();
    match engine.run(&mut gens) {
        Ok(()) => Ok(PresentationResult {
            status: PresentationStatus::Finite,
            semiring: Some(engine.table(&gens)?),
            collapsed_generators: engine.collapsed(&gens),
            universe_bound: p.universe_bound,
        }),
        Err(Overflow) => {
            engine.process_merges();
            let collapsed = if gens.len() == p.generators.len() {
                engine.collapsed(&gens)
            } else {
                Vec::new()
            };
            Ok(PresentationResult {
                status: PresentationStatus::ExceedsBound,
                semiring: None,
                collapsed_generators: collapsed,
                universe_bound: p.universe_bound,
            })
        }
    }
}

/// `B[x, y]` with every element additively idempotent and
/// `x + y = xy = yx = x^2 = y^2 = 0`.
pub fn bxy_presentation() -> Result<PresentationResult> {
    let p = Presentation::parse(
        &["x", "y"],
        &["x+y=0", "x*y=0", "y*x=0", "x^2=0", "y^2=0"],
        true,
        DEFAULT_UNIVERSE_BOUND,
    )?;
    presentation(&p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::boolean_semiring;
    use crate::iso::isomorphic;

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_terms() {
        let g = gens(&["x", "y"]);
        assert_eq!(
            parse_term("xy", &g).unwrap(),
            Term::times(Term::Gen(0), Term::Gen(1))
        );
        assert_eq!(
            parse_term("x^2", &g).unwrap(),
            Term::times(Term::Gen(0), Term::Gen(0))
        );
        assert_eq!(parse_term("x^0", &g).unwrap(), Term::One);
        assert_eq!(
            parse_term("2", &g).unwrap(),
            Term::plus(Term::One, Term::One)
        );
        let t = parse_term("(x+1)*y + 0", &g).unwrap();
        assert_eq!(t.render(&g), "(x+1)*y+0");
        assert!(parse_term("z", &g).is_err());
        assert!(parse_term("x+", &g).is_err());
        assert!(parse_term("(x", &g).is_err());
    }

    #[test]
    fn rendering_is_unambiguous() {
        let g = gens(&["a", "b", "c"]);
        let (a, b, c) = (Term::Gen(0), Term::Gen(1), Term::Gen(2));
        let left = Term::plus(Term::plus(a.clone(), b.clone()), c.clone());
        let right = Term::plus(a.clone(), Term::plus(b.clone(), c.clone()));
        assert_ne!(left.render(&g), right.render(&g));
        let left = Term::times(Term::times(a.clone(), b.clone()), c.clone());
        let right = Term::times(a, Term::times(b, c));
        assert_ne!(left.render(&g), right.render(&g));
    }

    #[test]
    fn no_generators_additively_idempotent_is_boolean() {
        let p = Presentation::parse(&[], &[], true, DEFAULT_UNIVERSE_BOUND).unwrap();
        let r = presentation(&p).unwrap();
        assert_eq!(r.status, PresentationStatus::Finite);
        let s = r.semiring.unwrap();
        assert_eq!(s.order(), 2);
        assert!(isomorphic(&s, &boolean_semiring()).is_some());
    }

    #[test]
    fn free_idempotent_generator_is_infinite() {
        for bound in [2, 8, DEFAULT_UNIVERSE_BOUND] {
            let p = Presentation::parse(&["e"], &["e^2=e"], false, bound).unwrap();
            let r = presentation(&p).unwrap();
            assert_eq!(r.status, PresentationStatus::ExceedsBound, "bound {bound}");
            assert!(r.semiring.is_none());
        }
    }

    #[test]
    fn idempotent_generator_with_idempotent_addition() {
        // {0, 1, e, 1+e} with e^2 = e and a + a = a
        let p = Presentation::parse(&["e"], &["e^2=e"], true, DEFAULT_UNIVERSE_BOUND).unwrap();
        let r = presentation(&p).unwrap();
        let s = r.semiring.expect("finite");
        assert_eq!(s.order(), 4);
        assert!(s.is_boolean());
        assert!(r.collapsed_generators.is_empty());
    }

    #[test]
    fn z2_from_relation() {
        let p = Presentation::parse(&[], &["1+1=0"], false, DEFAULT_UNIVERSE_BOUND).unwrap();
        let s = presentation(&p).unwrap().semiring.unwrap();
        assert!(isomorphic(&s, &crate::construct::zmod(2).unwrap()).is_some());
    }

    #[test]
    fn bound_must_be_at_least_two() {
        let p = Presentation::parse(&[], &[], true, 1).unwrap();
        assert!(presentation(&p).is_err());
    }
}

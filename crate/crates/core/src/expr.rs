//! Text syntax for classes.
//!
//! ```text
//! expr := ['+'|'-'] term (('+'|'-') term)*
//! term := [rational] ('q' INT ['^' INT])* ('s' INT '[' INT (',' INT)* ']')*
//! ```
//!
//! Whitespace is ignored and `*` may separate factors. `1` is the identity
//! class, `0` the zero class. Several `s` factors on the same vertex are
//! multiplied with Littlewood-Richardson before any reduction.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::class::QuantumClass;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::quiver::Quiver;
use crate::ring::{add_raw, QMonomial, RawClass, SchurTuple};
use crate::schur::{lr_multiply, SchurCombination};
use crate::Rational;

/// One parsed term: coefficient, `q` powers by vertex, Schur factors by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprTerm {
    pub coeff: Rational,
    pub q: Vec<(usize, u32)>,
    pub schur: Vec<(usize, Partition)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Expr {
    pub terms: Vec<ExprTerm>,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    _src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Lexer { chars, pos: 0, _src: src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or_else(|| self.chars.last().map_or(1, |&(i, _)| i + 1))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{c}'"))
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn int(&mut self) -> Result<u64> {
        match self.digits() {
            Some(d) => d.parse().or_else(|_| self.error("integer too large")),
            None => self.error("expected an integer"),
        }
    }
}

/// Parses a class expression.
pub fn parse(src: &str) -> Result<Expr> {
    let mut lx = Lexer::new(src);
    if lx.peek().is_none() {
        return lx.error("empty expression");
    }
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = if lx.eat('-') {
            true
        } else if lx.eat('+') {
            false
        } else if first {
            false
        } else {
            return lx.error("expected '+' or '-'");
        };
        first = false;
        let mut term = parse_term(&mut lx)?;
        if negative {
            term.coeff = -term.coeff;
        }
        if !term.coeff.is_zero() {
            terms.push(term);
        }
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Expr { terms })
}

fn parse_term(lx: &mut Lexer) -> Result<ExprTerm> {
    let mut coeff = Rational::one();
    let mut seen = false;
    if let Some(num) = lx.digits() {
        let num: BigInt = num.parse().unwrap();
        let den: BigInt = if lx.eat('/') {
            match lx.digits() {
                Some(d) => d.parse().unwrap(),
                None => return lx.error("expected a denominator"),
            }
        } else {
            BigInt::one()
        };
        if den.is_zero() {
            return lx.error("zero denominator");
        }
        coeff = Rational::new(num, den);
        seen = true;
    }
    let mut q = Vec::new();
    let mut schur = Vec::new();
    loop {
        lx.eat('*');
        match lx.peek() {
            Some('q') => {
                lx.pos += 1;
                let v = lx.int()? as usize;
                let e = if lx.eat('^') { lx.int()? as u32 } else { 1 };
                q.push((v, e));
            }
            Some('s') => {
                lx.pos += 1;
                let v = lx.int()? as usize;
                lx.expect('[')?;
                let mut parts = Vec::new();
                if !lx.eat(']') {
                    loop {
                        parts.push(lx.int()? as u32);
                        if lx.eat(']') {
                            break;
                        }
                        lx.expect(',')?;
                    }
                }
                match Partition::new(parts) {
                    Ok(p) => schur.push((v, p)),
                    Err(_) => return lx.error("partition parts must be weakly decreasing"),
                }
            }
            _ => break,
        }
        seen = true;
    }
    if !seen {
        return lx.error("expected a term");
    }
    Ok(ExprTerm { coeff, q, schur })
}

impl Expr {
    /// Expands the expression into raw `q^d * tuple` terms for `quiver`.
    /// Factors longer than their vertex rank vanish.
    pub fn to_raw(&self, quiver: &Quiver) -> Result<RawClass> {
        let rho = quiver.rho();
        let check = |v: usize| {
            if v == 0 || v > rho {
                Err(Error::NoSuchVertex { vertex: v, rho })
            } else {
                Ok(())
            }
        };
        let mut out = RawClass::new();
        for term in &self.terms {
            let mut qexp = vec![0u32; rho];
            for &(v, e) in &term.q {
                check(v)?;
                qexp[v - 1] += e;
            }
            let mut slots: Vec<SchurCombination> = (1..=rho)
                .map(|i| SchurCombination::single(quiver.rank(i), Partition::empty()))
                .collect();
            for (v, lambda) in &term.schur {
                check(*v)?;
                let rank = quiver.rank(*v);
                let slot = &mut slots[*v - 1];
                let mut next = SchurCombination::zero(rank);
                if lambda.len() <= rank {
                    for (mu, c) in slot.terms() {
                        next.add_scaled(&lr_multiply(mu, lambda, rank)?, c);
                    }
                }
                *slot = next;
            }
            let mut tuples: Vec<(Vec<Partition>, BigInt)> = vec![(Vec::new(), BigInt::one())];
            for slot in &slots {
                let mut next = Vec::new();
                for (parts, c) in &tuples {
                    for (mu, m) in slot.terms() {
                        let mut p = parts.clone();
                        p.push(mu.clone());
                        next.push((p, c * m));
                    }
                }
                tuples = next;
            }
            let q = QMonomial::new(qexp);
            for (parts, c) in tuples {
                add_raw(
                    &mut out,
                    (q.clone(), SchurTuple::new(parts)),
                    &term.coeff * Rational::from(c),
                );
            }
        }
        Ok(out)
    }
}

/// Output order for rendered classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PrintOrder {
    /// `q`-degree ascending, then class degree descending, then vertex by
    /// vertex in graded reverse-lexicographic order.
    #[default]
    Degree,
    /// `q` exponents ascending, then vertex by vertex reverse-lexicographic.
    Lex,
}

fn compare_terms(
    a: &(&QMonomial, &SchurTuple),
    b: &(&QMonomial, &SchurTuple),
    order: PrintOrder,
    quiver: Option<&Quiver>,
) -> Ordering {
    let qdeg = |q: &QMonomial| match quiver {
        Some(quiver) => q.degree(quiver),
        None => q.exponents().iter().map(|&d| d as i64).sum(),
    };
    let vertexwise = |x: &SchurTuple, y: &SchurTuple, graded: bool| {
        for (l, m) in x.partitions().iter().zip(y.partitions()) {
            let c = if graded {
                m.size().cmp(&l.size()).then_with(|| m.parts().cmp(l.parts()))
            } else {
                m.parts().cmp(l.parts())
            };
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    };
    match order {
        PrintOrder::Degree => qdeg(a.0)
            .cmp(&qdeg(b.0))
            .then_with(|| b.0.exponents().cmp(a.0.exponents()))
            .then_with(|| b.1.degree().cmp(&a.1.degree()))
            .then_with(|| vertexwise(a.1, b.1, true)),
        PrintOrder::Lex => a
            .0
            .exponents()
            .cmp(b.0.exponents())
            .then_with(|| vertexwise(a.1, b.1, false)),
    }
}

/// Renders a class; `quiver` supplies the `q` grading if given, otherwise
/// the plain total `q` exponent is used.
pub fn render_with(class: &QuantumClass, order: PrintOrder, quiver: Option<&Quiver>) -> String {
    let mut terms: Vec<_> = class.terms().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| compare_terms(&(a.0, a.1), &(b.0, b.1), order, quiver));
    let mut out = String::new();
    for (k, (q, t, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors = Vec::new();
        for (i, &d) in q.exponents().iter().enumerate() {
            match d {
                0 => {}
                1 => factors.push(format!("q{}", i + 1)),
                _ => factors.push(format!("q{}^{d}", i + 1)),
            }
        }
        for (i, lambda) in t.partitions().iter().enumerate() {
            if !lambda.is_empty() {
                factors.push(format!("s{}{lambda}", i + 1));
            }
        }
        let abs = c.abs();
        if !abs.is_one() || factors.is_empty() {
            factors.insert(0, abs.to_string());
        }
        out.push_str(&factors.join(" "));
    }
    out
}

pub fn render(class: &QuantumClass, order: PrintOrder) -> String {
    render_with(class, order, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms() {
        let e = parse("2 q1^2 s1[2,1] - 1/3 s2[1] + 1").unwrap();
        assert_eq!(e.terms.len(), 3);
        assert_eq!(e.terms[0].q, vec![(1, 2)]);
        assert_eq!(e.terms[1].coeff, Rational::new((-1).into(), 3.into()));
        assert!(e.terms[2].schur.is_empty() && e.terms[2].q.is_empty());
        assert!(parse("0").unwrap().terms.is_empty());
        assert_eq!(parse("-s1[1]").unwrap().terms[0].coeff, -Rational::one());
    }

    #[test]
    fn parse_errors_carry_columns() {
        assert!(matches!(parse("s1[1"), Err(Error::Parse { .. })));
        assert!(matches!(parse("s1[1,2]"), Err(Error::Parse { .. })));
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        match parse("s1[1] x") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn same_vertex_factors_multiply() {
        let quiver = Quiver::grassmannian(4, 2).unwrap();
        let raw = parse("s1[1] s1[1]").unwrap().to_raw(&quiver).unwrap();
        assert_eq!(raw.len(), 2);
        let raw = parse("s1[1,1,1]").unwrap().to_raw(&quiver).unwrap();
        assert!(raw.is_empty());
        assert!(parse("s2[1]").unwrap().to_raw(&quiver).is_err());
    }

    #[test]
    fn renders_signs_and_coefficients() {
        let quiver = Quiver::flag(4, &[2, 1]).unwrap();
        let raw = parse("q2 + s1[1] s2[1] - s1[1,1] + 3/2 q1 s1[1]")
            .unwrap()
            .to_raw(&quiver)
            .unwrap();
        let class = QuantumClass::from_raw(raw);
        assert_eq!(
            render_with(&class, PrintOrder::Degree, Some(&quiver)),
            "-s1[1,1] + s1[1] s2[1] + q2 + 3/2 q1 s1[1]"
        );
        assert_eq!(render(&QuantumClass::zero(), PrintOrder::Lex), "0");
        let neg = QuantumClass::one(2).scale(&-Rational::one());
        assert_eq!(render(&neg, PrintOrder::Degree), "-1");
    }
}

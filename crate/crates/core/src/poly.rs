//! Exact sparse multivariate polynomials over ℤ in `π` and structured generators.

use crate::error::{Error, Result};
use crate::simplex::MonotoneMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Generator family: `t`, `u` or `ε`-style.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    T,
    U,
    Eps,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::T => 't',
            Family::U => 'u',
            Family::Eps => 'e',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c {
            't' => Some(Family::T),
            'u' => Some(Family::U),
            'e' => Some(Family::Eps),
            _ => None,
        }
    }
}

/// A generator name: family, tensor factor `a`, bar index `j` and simplex labels.
///
/// The derived order is lexicographic on `(family, factor, bar, labels)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarId {
    pub family: Family,
    pub factor: u32,
    pub bar: u32,
    pub labels: Vec<MonotoneMap>,
}

impl VarId {
    pub fn new(family: Family, bar: u32, factor: u32) -> Self {
        VarId { family, factor, bar, labels: Vec::new() }
    }

    pub fn t(bar: u32, factor: u32) -> Self {
        VarId::new(Family::T, bar, factor)
    }

    pub fn u(bar: u32, factor: u32) -> Self {
        VarId::new(Family::U, bar, factor)
    }

    pub fn with_labels(mut self, labels: Vec<MonotoneMap>) -> Self {
        self.labels = labels;
        self
    }

    pub fn with_bar(&self, bar: u32) -> Self {
        VarId { bar, ..self.clone() }
    }
}

const LABEL_NAMES: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.family.letter(), self.bar, self.factor)?;
        if !self.labels.is_empty() {
            write!(f, "(")?;
            for (i, l) in self.labels.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}={}", LABEL_NAMES[i % LABEL_NAMES.len()] as char, l)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// `π^pi · ∏ v^e` with strictly positive exponents, variables sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pi: u32,
    vars: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { pi: 0, vars: Vec::new(), degree: 0 }
    }

    pub fn pi_power(e: u32) -> Self {
        Monomial { pi: e, vars: Vec::new(), degree: e }
    }

    pub fn var(v: VarId) -> Self {
        Monomial { pi: 0, vars: vec![(v, 1)], degree: 1 }
    }

    /// Build from parts, merging repeated variables and dropping zero exponents.
    pub fn from_parts(pi: u32, vars: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in vars {
            if e > 0 {
                *map.entry(v).or_default() += e;
            }
        }
        let vars: Vec<_> = map.into_iter().collect();
        let degree = pi + vars.iter().map(|(_, e)| e).sum::<u32>();
        Monomial { pi, vars, degree }
    }

    pub fn pi_exponent(&self) -> u32 {
        self.pi
    }

    pub fn var_exponents(&self) -> &[(VarId, u32)] {
        &self.vars
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Total degree in the non-π variables.
    pub fn var_degree(&self) -> u32 {
        self.degree - self.pi
    }

    /// `t_weight · (non-π degree) + π-degree`.
    pub fn weight(&self, t_weight: u32) -> u32 {
        t_weight * self.var_degree() + self.pi
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            match self.vars[i].0.cmp(&other.vars[j].0) {
                Ordering::Less => {
                    vars.push(self.vars[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push(other.vars[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((self.vars[i].0.clone(), self.vars[i].1 + other.vars[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&self.vars[i..]);
        vars.extend_from_slice(&other.vars[j..]);
        Monomial { pi: self.pi + other.pi, vars, degree: self.degree + other.degree }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents of `π`, then of each
    /// variable in increasing `VarId` order, larger exponent first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.pi.cmp(&other.pi))
            .then_with(|| {
                for (a, b) in self.vars.iter().zip(other.vars.iter()) {
                    match a.0.cmp(&b.0) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match a.1.cmp(&b.1) {
                            Ordering::Equal => {}
                            o => return o,
                        },
                    }
                }
                self.vars.len().cmp(&other.vars.len())
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                write!(f, "*")
            }
        };
        if self.pi > 0 {
            sep(f)?;
            write!(f, "pi")?;
            if self.pi > 1 {
                write!(f, "^{}", self.pi)?;
            }
        }
        for (v, e) in &self.vars {
            sep(f)?;
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form: no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::from_term(Monomial::one(), c.into())
    }

    pub fn pi() -> Self {
        Polynomial::pi_pow(1)
    }

    pub fn pi_pow(e: u32) -> Self {
        Polynomial::from_term(Monomial::pi_power(e), BigInt::one())
    }

    pub fn var(v: VarId) -> Self {
        Polynomial::from_term(Monomial::var(v), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars.iter().map(|(v, _)| v.clone())).collect()
    }

    /// Simultaneous substitution; unmapped variables are fixed.
    pub fn substitute(&self, sigma: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        self.try_substitute(|v| -> Result<Option<Polynomial>> { Ok(sigma.get(v).cloned()) })
            .expect("infallible")
    }

    /// Simultaneous substitution through a fallible callback; `None` fixes a variable.
    pub fn try_substitute<E>(
        &self,
        mut image: impl FnMut(&VarId) -> std::result::Result<Option<Polynomial>, E>,
    ) -> std::result::Result<Polynomial, E> {
        let mut cache: HashMap<&VarId, Option<Polynomial>> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut fixed = Vec::new();
            let mut acc = Polynomial::from_term(Monomial::pi_power(m.pi), c.clone());
            for (v, e) in &m.vars {
                if !cache.contains_key(v) {
                    let img = image(v)?;
                    cache.insert(v, img);
                }
                match &cache[v] {
                    None => fixed.push((v.clone(), *e)),
                    Some(p) => {
                        for _ in 0..*e {
                            acc = &acc * p;
                        }
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let rest = Monomial::from_parts(0, fixed);
            for (n, k) in acc.terms {
                out.add_term(n.mul(&rest), k);
            }
        }
        Ok(out)
    }

    /// Replace `π` by the integer `c`.
    pub fn specialize_pi(&self, c: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, k) in &self.terms {
            let factor = num_traits::pow(c.clone(), m.pi as usize);
            let stripped = Monomial { pi: 0, vars: m.vars.clone(), degree: m.degree - m.pi };
            out.add_term(stripped, k * factor);
        }
        out
    }

    /// Exact division by `π`; `None` if some term has no factor of `π`.
    pub fn div_pi(&self) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (m, k) in &self.terms {
            if m.pi == 0 {
                return None;
            }
            let n = Monomial { pi: m.pi - 1, vars: m.vars.clone(), degree: m.degree - 1 };
            terms.insert(n, k.clone());
        }
        Some(Polynomial { terms })
    }

    /// Whether every term carries at least one factor of `π`.
    pub fn divisible_by_pi(&self) -> bool {
        self.terms.keys().all(|m| m.pi > 0)
    }

    /// The common weight of all monomials, or `None` if not homogeneous (or zero).
    pub fn weight(&self, t_weight: u32) -> Option<u32> {
        let mut ws = self.terms.keys().map(|m| m.weight(t_weight));
        let w = ws.next()?;
        ws.all(|x| x == w).then_some(w)
    }

    /// Coefficients `c_0, c_1, …` when the polynomial involves `π` only.
    pub fn pi_coefficients(&self) -> Option<Vec<BigInt>> {
        let mut out: Vec<BigInt> = Vec::new();
        for (m, k) in &self.terms {
            if !m.vars.is_empty() {
                return None;
            }
            let e = m.pi as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] = k.clone();
        }
        Some(out)
    }

    pub fn from_pi_coefficients(cs: &[BigInt]) -> Polynomial {
        Polynomial::from_terms(cs.iter().enumerate().map(|(e, c)| (Monomial::pi_power(e as u32), c.clone())))
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, k) in &rhs.terms {
                out.add_term(m.mul(n), c * k);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            Ok(())
        } else {
            self.err(format!("expected {lit:?}"))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<u32> {
        let d = self.digits()?;
        d.parse().or_else(|_| self.err("number too large"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            self.number()
        } else {
            Ok(1)
        }
    }

    fn map(&mut self) -> Result<MonotoneMap> {
        self.expect("(")?;
        let mut values = vec![self.number()?];
        while self.eat(b',') {
            values.push(self.number()?);
        }
        self.expect("):[")?;
        let p = self.number()?;
        self.expect("]->[")?;
        let n = self.number()?;
        self.expect("]")?;
        if p as usize + 1 != values.len() {
            return self.err("label source does not match its values");
        }
        MonotoneMap::new(values, n)
    }

    fn factor(&mut self, coeff: &mut BigInt, pi: &mut u32, vars: &mut Vec<(VarId, u32)>) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                *coeff *= BigInt::from_str(d).expect("digits");
            }
            Some(b'p') => {
                self.expect("pi")?;
                *pi += self.exponent()?;
            }
            Some(c) if Family::from_letter(c as char).is_some() => {
                let family = Family::from_letter(c as char).expect("checked");
                self.pos += 1;
                self.expect("[")?;
                let bar = self.number()?;
                self.expect(",")?;
                let factor = self.number()?;
                self.expect("]")?;
                let mut labels = Vec::new();
                if self.eat(b'(') {
                    loop {
                        match self.peek() {
                            Some(c) if c.is_ascii_lowercase() => self.pos += 1,
                            _ => return self.err("expected label name"),
                        }
                        self.expect("=")?;
                        labels.push(self.map()?);
                        if !self.eat(b',') {
                            break;
                        }
                    }
                    self.expect(")")?;
                }
                let e = self.exponent()?;
                vars.push((VarId { family, factor, bar, labels }, e));
            }
            _ => return self.err("expected a factor"),
        }
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut pi = 0;
        let mut vars = Vec::new();
        self.ws();
        self.factor(&mut coeff, &mut pi, &mut vars)?;
        loop {
            self.ws();
            if !self.eat(b'*') {
                break;
            }
            self.ws();
            self.factor(&mut coeff, &mut pi, &mut vars)?;
        }
        Ok((Monomial::from_parts(pi, vars), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        self.ws();
        let mut negative = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
            self.ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected + or -"),
            }
            self.pos += 1;
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { s: s.as_bytes(), pos: 0 }.polynomial()
    }
}

impl FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Polynomial = s.parse()?;
        let mut it = p.terms();
        match (it.next(), it.next()) {
            (Some((m, c)), None) if c.is_one() && m.pi == 0 && m.vars.len() == 1 && m.vars[0].1 == 1 => {
                Ok(m.vars[0].0.clone())
            }
            _ => Err(Error::Parse { pos: 0, msg: format!("{s:?} is not a single generator") }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(j: u32, a: u32) -> Polynomial {
        Polynomial::var(VarId::t(j, a))
    }

    #[test]
    fn difference_of_squares() {
        let pi = Polynomial::pi();
        let x = t(1, 1);
        assert_eq!((&pi + &x) * (&pi - &x), &pi * &pi - &x * &x);
        assert_eq!(&x + &Polynomial::zero(), x);
        assert!((&pi * &x - &pi * &x).is_zero());
    }

    #[test]
    fn substitution() {
        let p = t(1, 1) * t(1, 2);
        let mut s = BTreeMap::new();
        s.insert(VarId::t(1, 1), Polynomial::pi() * t(1, 1));
        s.insert(VarId::t(1, 2), Polynomial::pi() * t(1, 2));
        assert_eq!(p.substitute(&s), Polynomial::pi_pow(2) * t(1, 1) * t(1, 2));
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        let q = t(1, 1) + t(2, 1);
        let mut swap = BTreeMap::new();
        swap.insert(VarId::t(1, 1), t(2, 1));
        swap.insert(VarId::t(2, 1), t(1, 1));
        assert_eq!(q.substitute(&swap), q);
    }

    #[test]
    fn specialization() {
        let zero = BigInt::zero();
        let x = t(1, 1);
        assert_eq!((Polynomial::pi_pow(2) + x.clone()).specialize_pi(&zero), x);
        let two = BigInt::from(2);
        assert!((Polynomial::pi() * &x - Polynomial::constant(2) * &x).specialize_pi(&two).is_zero());
        assert_eq!((&x * &(Polynomial::pi() - &x)).specialize_pi(&zero), -(&x * &x));
    }

    #[test]
    fn weights() {
        assert_eq!(Monomial::pi_power(3).weight(7), 3);
        assert_eq!((t(1, 1) * t(2, 1)).weight(2), Some(4));
        assert_eq!((Polynomial::pi() * t(1, 1)).weight(3), Some(4));
        assert_eq!((Polynomial::pi() + t(1, 1)).weight(2), None);
    }

    #[test]
    fn canonical_text() {
        let l = MonotoneMap::new(vec![0, 0, 1], 1).unwrap();
        let v = VarId { family: Family::T, factor: 2, bar: 1, labels: vec![l] };
        let p = Polynomial::constant(3) * Polynomial::pi_pow(2) * Polynomial::var(v) - Polynomial::var(VarId::u(2, 1));
        let s = p.to_string();
        assert_eq!(s, "3*pi^2*t[1,2](a=(0,0,1):[2]->[1]) - u[2,1]");
        assert_eq!(s.parse::<Polynomial>().unwrap(), p);
        assert_eq!("0".parse::<Polynomial>().unwrap(), Polynomial::zero());
        assert_eq!("-pi + 2".parse::<Polynomial>().unwrap(), Polynomial::constant(2) - Polynomial::pi());
        assert!("t[1]".parse::<Polynomial>().is_err());
    }

    #[test]
    fn pi_division() {
        let p = Polynomial::pi_pow(2) * t(1, 1) + Polynomial::pi();
        assert_eq!(p.div_pi().unwrap(), Polynomial::pi() * t(1, 1) + Polynomial::one());
        assert!(t(1, 1).div_pi().is_none());
    }
}

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::TermOrder;

pub type Coeff = BigRational;

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

pub fn rational(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn gcd(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn total_degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

/// A polynomial with rational coefficients in `nvars` variables.
///
/// Terms are kept in a map keyed by exponent vector; no zero coefficient is
/// ever stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponent, Coeff>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Coeff::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(nvars, e, Coeff::one())
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: Coeff) -> Self {
        debug_assert_eq!(exp.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Coeff)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> Coeff {
        self.terms.get(e).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Variables occurring in some term.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Exponent, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Exponent> {
        self.leading_term(order).map(|t| t.0)
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &TermOrder) -> Poly {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, e: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(x, c)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] > 0 {
                let mut f = e.clone();
                f[var] -= 1;
                out.add_term(f, c * rational(i64::from(e[var])));
            }
        }
        out
    }

    /// Groups terms by the exponent of `var`: `self = Σ var^k · part[k]`,
    /// with `var` removed from each part.
    pub fn split_by(&self, var: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[var];
            f[var] = 0;
            out.entry(k).or_insert_with(|| Poly::zero(self.nvars)).add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        let mut powers: Vec<Poly> = vec![Poly::one(self.nvars)];
        for (k, part) in self.split_by(var) {
            while powers.len() <= k as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out = &out + &(&part * &powers[k as usize]);
        }
        out
    }

    /// Re-indexes variables: variable `i` becomes `map[i]` in a ring with
    /// `nvars` variables.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Poly {
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    f[map[i]] += x;
                }
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Removes the given variables, assuming they do not occur.
    pub fn drop_vars(&self, keep: &[usize]) -> Poly {
        let mut out = Poly::zero(keep.len());
        for (e, c) in &self.terms {
            out.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
        }
        out
    }

    /// Multiplies by a common denominator and divides by the content so the
    /// coefficients are coprime integers with positive leading coefficient.
    pub fn primitive(&self, order: &TermOrder) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            num = num.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = BigRational::new(den, num);
        if self.leading_term(order).map(|t| t.1.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Whether every term has the same degree under `degrees` (one vector per
    /// variable).
    pub fn is_homogeneous(&self, degrees: &[Vec<i64>]) -> bool {
        let mut first: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            let d = graded_degree(e, degrees);
            match &first {
                None => first = Some(d),
                Some(f) if *f != d => return false,
                _ => {}
            }
        }
        true
    }

    /// Prints with the given variable names, terms in descending graded-lex
    /// order.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let order = TermOrder::GradedLex;
        let mut terms: Vec<(&Exponent, &Coeff)> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut s = String::new();
        if terms.is_empty() {
            return String::from("0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let is_const = e.iter().all(|&x| x == 0);
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || is_const {
                parts.push(alloc::format!("{}", mag));
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(names[i].clone()),
                    _ => parts.push(alloc::format!("{}^{}", names[i], x)),
                }
            }
            let _ = write!(s, "{}", parts.join("*"));
        }
        s
    }
}

pub fn graded_degree(e: &[u32], degrees: &[Vec<i64>]) -> Vec<i64> {
    let k = degrees.first().map_or(0, |d| d.len());
    let mut d = vec![0i64; k];
    for (i, &x) in e.iter().enumerate() {
        if x > 0 {
            for (t, g) in d.iter_mut().zip(&degrees[i]) {
                *t += i64::from(x) * g;
            }
        }
    }
    d
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Coeff::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.iter().zip(b).map(|(p, q)| p + q).collect(), x * y);
            }
        }
        out
    }
}

/// Determinant by cofactor expansion along the first row; matrices here are
/// at most 4×4.
pub fn determinant(m: &[Vec<Poly>], nvars: usize) -> Poly {
    let n = m.len();
    match n {
        0 => Poly::one(nvars),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut out = Poly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&minor, nvars);
                out = if j % 2 == 0 { &out + &term } else { &out - &term };
            }
            out
        }
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Compares two polynomials by their term lists under `order`, largest
/// terms first; used to sort bases deterministically.
pub fn cmp_polys(a: &Poly, b: &Poly, order: &TermOrder) -> Ordering {
    let mut ta: Vec<&Exponent> = a.terms.keys().collect();
    let mut tb: Vec<&Exponent> = b.terms.keys().collect();
    ta.sort_by(|x, y| order.cmp(y, x));
    tb.sort_by(|x, y| order.cmp(y, x));
    for (x, y) in ta.iter().zip(&tb) {
        match order.cmp(x, y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    ta.len().cmp(&tb.len())
}

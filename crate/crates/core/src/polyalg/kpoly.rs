//! K-polynomials and multidegrees.
//!
//! The K-polynomial of `S/I` is computed on an initial monomial ideal. It is
//! a Laurent polynomial in symbols `s_1..s_k` for a grading that assigns
//! each variable a vector in `ℤ^k`; the fine grading has one symbol per
//! variable.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ideal::Ideal;
use super::order::TermOrder;
use super::poly::{rational, Poly};
use crate::{Error, Result};

/// Degree vectors, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grading {
    degrees: Vec<Vec<i64>>,
    rank: usize,
}

impl Grading {
    pub fn new(degrees: Vec<Vec<i64>>) -> Result<Self> {
        let rank = degrees.first().map_or(0, Vec::len);
        if degrees.iter().any(|d| d.len() != rank) {
            return Err(Error::Precondition(String::from("degree vectors of unequal length")));
        }
        Ok(Grading { degrees, rank })
    }

    /// `deg x_i = e_i`.
    pub fn fine(nvars: usize) -> Self {
        let degrees = (0..nvars).map(|i| (0..nvars).map(|j| i64::from(i == j)).collect()).collect();
        Grading { degrees, rank: nvars }
    }

    /// Finest torsion-free grading in which `ideal` is homogeneous: the
    /// integer vectors orthogonal to every exponent difference within a
    /// reduced Gröbner basis element.
    pub fn natural(ideal: &Ideal) -> Result<Self> {
        let n = ideal.nvars();
        let gb = ideal.groebner(&TermOrder::GrevLex)?;
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for g in &gb {
            let exps: Vec<&Vec<u32>> = g.terms().map(|(e, _)| e).collect();
            for e in exps.iter().skip(1) {
                rows.push(e.iter().zip(exps[0]).map(|(a, b)| rational(i64::from(*a) - i64::from(*b))).collect());
            }
        }
        let basis = nullspace(rows, n);
        let degrees = (0..n).map(|i| basis.iter().map(|v| v[i]).collect()).collect();
        Ok(Grading { degrees, rank: basis.len() })
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }
}

/// Integer basis of `{d : r·d = 0 for all rows r}`, from the reduced row
/// echelon form; each vector is scaled to coprime integer entries.
fn nullspace(mut rows: Vec<Vec<BigRational>>, n: usize) -> Vec<Vec<i64>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in &mut rows[r] {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[k][free].clone();
        }
        let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        out.push(ints.iter().map(|x| i64::try_from(&(x / &g)).unwrap_or(0)).collect());
    }
    out
}

/// A Laurent polynomial with integer coefficients in `rank` symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl KPolynomial {
    pub fn one(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; rank], BigInt::one());
        KPolynomial { rank, terms }
    }

    pub fn zero(rank: usize) -> Self {
        KPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>) -> Self {
        let mut k = KPolynomial::zero(rank);
        for (e, c) in terms {
            k.add_term(e, c);
        }
        k
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn is_one(&self) -> bool {
        *self == KPolynomial::one(self.rank)
    }

    /// Pushes forward along a grading: `s^e ↦ Π_i u^{e_i·deg x_i}`.
    pub fn project(&self, grading: &Grading) -> Result<KPolynomial> {
        if grading.nvars() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: grading.nvars() });
        }
        let mut out = KPolynomial::zero(grading.rank());
        for (e, c) in &self.terms {
            let mut d = vec![0i64; grading.rank()];
            for (i, &x) in e.iter().enumerate() {
                for (t, g) in d.iter_mut().zip(&grading.degrees[i]) {
                    *t += x * g;
                }
            }
            out.add_term(d, c.clone());
        }
        Ok(out)
    }

    /// Terms by ascending total degree, ties broken by descending exponent.
    pub fn to_string_with(&self, symbols: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut terms: Vec<(&Vec<i64>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let (da, db): (i64, i64) = (a.0.iter().sum(), b.0.iter().sum());
            da.cmp(&db).then_with(|| b.0.cmp(a.0))
        });
        let mut s = String::new();
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                parts.push(alloc::format!("{}", mag));
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => parts.push(symbols[i].clone()),
                    _ => parts.push(alloc::format!("{}^{}", symbols[i], x)),
                }
            }
            let _ = write!(s, "{}", parts.join("*"));
        }
        s
    }
}

impl Ideal {
    /// K-polynomial of `S/in_o(I)` in the fine grading.
    pub fn kpoly_fine(&self, order: &TermOrder) -> Result<KPolynomial> {
        let m = self.initial_ideal(order)?;
        let n = self.nvars();
        Ok(KPolynomial::from_terms(n, m.kpoly_fine()))
    }

    /// K-polynomial of `S/I` in `grading`, computed on `in_o(I)`. The
    /// answer does not depend on `o` when `I` is homogeneous for `grading`.
    pub fn kpoly(&self, order: &TermOrder, grading: &Grading) -> Result<KPolynomial> {
        self.kpoly_fine(order)?.project(grading)
    }
}

/// Multidegree of `S/I` for variable weights `μ_i` (linear forms in `r`
/// symbols, given by coefficient vectors): the lowest-degree part of the
/// fine K-polynomial of `in_o(I)` after `t_i ↦ 1 − μ_i`. Returns a
/// polynomial in `r` variables; the zero ideal gives 1, the unit ideal 0.
pub fn multidegree(ideal: &Ideal, order: &TermOrder, weights: &[Vec<i64>]) -> Result<Poly> {
    let n = ideal.nvars();
    if weights.len() != n {
        return Err(Error::Precondition(alloc::format!("{} weights for {} variables", weights.len(), n)));
    }
    let r = weights.first().map_or(0, Vec::len);
    if weights.iter().any(|w| w.len() != r) {
        return Err(Error::Precondition(String::from("weights of unequal length")));
    }
    let Some(c) = ideal.codim()? else { return Ok(Poly::zero(r)) };
    let c = c as u32;
    let k = ideal.kpoly_fine(order)?;
    let mu: Vec<Poly> = weights
        .iter()
        .map(|w| Poly::from_terms(r, (0..r).map(|j| (unit(r, j), rational(w[j])))))
        .collect();
    let one_minus: Vec<Poly> = mu.iter().map(|m| &Poly::one(r) - m).collect();
    let mut total = Poly::zero(r);
    for (e, coef) in k.terms() {
        let mut term = Poly::constant(r, BigRational::from_integer(coef.clone()));
        for (i, &x) in e.iter().enumerate() {
            for _ in 0..x {
                term = truncate(&(&term * &one_minus[i]), c);
            }
        }
        total = &total + &term;
    }
    Ok(Poly::from_terms(r, total.terms().filter(|(e, _)| e.iter().sum::<u32>() == c).map(|(e, v)| (e.clone(), v.clone()))))
}

fn unit(r: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; r];
    e[j] = 1;
    e
}

fn truncate(p: &Poly, deg: u32) -> Poly {
    Poly::from_terms(p.nvars(), p.terms().filter(|(e, _)| e.iter().sum::<u32>() <= deg).map(|(e, c)| (e.clone(), c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{minimal_transversals, parse_ideal, MonomialIdeal, Ring};

    fn ideal(ring: &str, gens: &str) -> Ideal {
        parse_ideal(gens, &Ring::parse(ring).unwrap()).unwrap()
    }

    fn syms(n: usize) -> Vec<String> {
        (1..=n).map(|i| alloc::format!("t{}", i)).collect()
    }

    #[test]
    fn kpoly_examples() {
        let zero = Ideal::zero(Ring::parse("x,y").unwrap());
        assert!(zero.kpoly_fine(&TermOrder::GrevLex).unwrap().is_one());
        let x = ideal("x,y", "x");
        assert_eq!(x.kpoly_fine(&TermOrder::GrevLex).unwrap().to_string_with(&syms(2)), "1 - t1");
        let xy = ideal("x,y", "x*y");
        assert_eq!(xy.kpoly_fine(&TermOrder::GrevLex).unwrap().to_string_with(&syms(2)), "1 - t1*t2");
    }

    #[test]
    fn natural_grading_of_a_parabola() {
        let i = ideal("x,y", "y^2 - x");
        let g = Grading::natural(&i).unwrap();
        assert_eq!(g.degrees(), &[vec![2], vec![1]]);
        let lex = i.kpoly(&TermOrder::Lex, &g).unwrap();
        let grevlex = i.kpoly(&TermOrder::GrevLex, &g).unwrap();
        assert_eq!(lex, grevlex);
        assert_eq!(lex.to_string_with(&[String::from("s")]), "1 - s^2");
        // the fine answers differ: in_lex = ⟨x⟩, in_grevlex = ⟨y²⟩
        assert_ne!(i.kpoly_fine(&TermOrder::Lex).unwrap(), i.kpoly_fine(&TermOrder::GrevLex).unwrap());
    }

    #[test]
    fn kpoly_is_order_independent_in_the_natural_grading() {
        let cases = [
            ("x,y,z,w", "x*w - y*z"),
            ("x,y,z,w", "x*z - y^2; y*w - z^2; x*w - y*z"),
            ("a,b,c", "a^2 - b*c; a*b*c"),
            ("x,y,l", "l*(x^2 - y^2) - y^2"),
        ];
        for (r, g) in cases {
            let i = ideal(r, g);
            let gr = Grading::natural(&i).unwrap();
            let orders = [TermOrder::Lex, TermOrder::GrevLex, TermOrder::GradedLex, TermOrder::y_dominant(1)];
            let ks: Vec<KPolynomial> = orders.iter().map(|o| i.kpoly(o, &gr).unwrap()).collect();
            assert!(ks.windows(2).all(|w| w[0] == w[1]), "{}", g);
        }
    }

    #[test]
    fn multidegree_examples() {
        let x = ideal("x,y", "x");
        let w = vec![vec![1, 0], vec![0, 1]];
        let r2 = Ring::parse("m1,m2").unwrap();
        assert_eq!(r2.show(&multidegree(&x, &TermOrder::GrevLex, &w).unwrap()), "m1");
        let xy = ideal("x,y", "x*y");
        assert_eq!(r2.show(&multidegree(&xy, &TermOrder::GrevLex, &w).unwrap()), "m1 + m2");
        let zero = Ideal::zero(Ring::parse("x,y").unwrap());
        assert_eq!(r2.show(&multidegree(&zero, &TermOrder::GrevLex, &w).unwrap()), "1");
        // x² has multiplicity two
        let x2 = ideal("x,y", "x^2");
        assert_eq!(r2.show(&multidegree(&x2, &TermOrder::GrevLex, &w).unwrap()), "2*m1");
        assert!(multidegree(&x, &TermOrder::GrevLex, &w[..1]).is_err());
    }

    /// Oracle for squarefree monomial ideals: sum over the minimal primes of
    /// top codimension of the product of their weights.
    fn squarefree_mdeg(m: &MonomialIdeal, weights: &[Vec<i64>]) -> Poly {
        let r = weights[0].len();
        let primes = minimal_transversals(&m.supports());
        let c = primes.iter().map(Vec::len).min().unwrap();
        let mut out = Poly::zero(r);
        for p in primes.iter().filter(|p| p.len() == c) {
            let mut term = Poly::one(r);
            for &v in p {
                let mu = Poly::from_terms(r, (0..r).map(|j| (unit(r, j), rational(weights[v][j]))));
                term = &term * &mu;
            }
            out = &out + &term;
        }
        out
    }

    #[test]
    fn multidegree_matches_component_sum_and_is_additive() {
        let ring = Ring::parse("a,b,c,d,e").unwrap();
        let weights: Vec<Vec<i64>> = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
        let families: [&[&[usize]]; 4] = [
            &[&[0, 1], &[2, 3]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4]],
            &[&[0], &[1, 2]],
            &[&[0, 1, 2], &[3, 4]],
        ];
        for fam in families {
            let m = MonomialIdeal::from_supports(5, fam.iter().map(|s| s.to_vec()));
            let i = Ideal::from_monomial(ring.clone(), &m);
            assert_eq!(multidegree(&i, &TermOrder::GrevLex, &weights).unwrap(), squarefree_mdeg(&m, &weights));
        }
        // additivity on ⟨a,b⟩ ∩ ⟨c,d⟩
        let i = ideal("a,b,c,d,e", "a; b");
        let j = ideal("a,b,c,d,e", "c; d");
        let both = i.intersection(&j).unwrap();
        let sum = &multidegree(&i, &TermOrder::GrevLex, &weights).unwrap() + &multidegree(&j, &TermOrder::GrevLex, &weights).unwrap();
        assert_eq!(multidegree(&both, &TermOrder::GrevLex, &weights).unwrap(), sum);
    }

    #[test]
    fn nullspace_basis() {
        let rows = vec![vec![rational(1), rational(-1), rational(0)]];
        assert_eq!(nullspace(rows, 3), vec![vec![1, 1, 0], vec![0, 0, 1]]);
        assert_eq!(nullspace(Vec::new(), 2), vec![vec![1, 0], vec![0, 1]]);
    }
}

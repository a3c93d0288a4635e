//! Restriction classes: polynomials in the simple-root symbols `a1..ar`
//! (equivariant cohomology) and finite sums of exponentials `e^λ` of
//! root-lattice vectors (equivariant K-theory).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::polyalg::{rational, Poly};
use crate::roots::Root;

/// Symbol names `a1..ar`.
pub fn root_symbols(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| alloc::format!("a{}", i)).collect()
}

/// A polynomial in the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPoly(Poly);

impl HPoly {
    pub fn zero(rank: usize) -> Self {
        HPoly(Poly::zero(rank))
    }

    pub fn one(rank: usize) -> Self {
        HPoly(Poly::one(rank))
    }

    /// The linear form of a root.
    pub fn root(r: &Root) -> Self {
        let rank = r.rank();
        HPoly(Poly::from_terms(
            rank,
            r.coords().iter().enumerate().map(|(j, &c)| {
                let mut e = vec![0; rank];
                e[j] = 1;
                (e, rational(c))
            }),
        ))
    }

    pub fn from_poly(p: Poly) -> Self {
        HPoly(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Degree if homogeneous (`None` for zero or mixed degrees).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.0.terms().map(|(e, _)| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    /// Every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.0.terms().all(|(_, c)| c.is_integer() && !c.is_negative())
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_string_with(&root_symbols(self.rank())))
    }
}

impl Add for &HPoly {
    type Output = HPoly;
    fn add(self, o: &HPoly) -> HPoly {
        HPoly(&self.0 + &o.0)
    }
}

impl Mul for &HPoly {
    type Output = HPoly;
    fn mul(self, o: &HPoly) -> HPoly {
        HPoly(&self.0 * &o.0)
    }
}

/// A finite sum `Σ c_λ e^λ` with `λ` in the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KElem {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl KElem {
    pub fn zero(rank: usize) -> Self {
        KElem { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        KElem::exp(&vec![0; rank])
    }

    /// `e^λ`.
    pub fn exp(lambda: &[i64]) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda.to_vec(), BigInt::one());
        KElem { rank: lambda.len(), terms }
    }

    /// `1 − e^{−ρ}`, the class of a hyperplane of weight `ρ`.
    pub fn hyperplane(rho: &Root) -> Self {
        let neg: Vec<i64> = rho.coords().iter().map(|c| -c).collect();
        &KElem::one(rho.rank()) - &KElem::exp(&neg)
    }

    pub fn add_term(&mut self, lambda: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Lowest-degree part after `e^λ ↦ Σ_{k ≤ d} λ^k/k!`, looking at degrees
    /// up to `max_degree`; zero when nothing survives.
    pub fn lowest_degree_part(&self, max_degree: u32) -> HPoly {
        let r = self.rank;
        let mut total = Poly::zero(r);
        for (lambda, c) in &self.terms {
            let lin = HPoly::root(&Root(lambda.clone())).0;
            let mut power = Poly::one(r);
            let mut fact = BigInt::one();
            for k in 0..=max_degree {
                if k > 0 {
                    power = &power * &lin;
                    fact *= BigInt::from(k);
                }
                let coef = BigRational::new(c.clone(), fact.clone());
                total = &total + &power.scale(&coef);
            }
        }
        let low = total.terms().map(|(e, _)| e.iter().sum::<u32>()).min();
        match low {
            None => HPoly::zero(r),
            Some(d) => HPoly(Poly::from_terms(
                r,
                total.terms().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, c)| (e.clone(), c.clone())),
            )),
        }
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // by height of λ descending, then λ descending
        let mut terms: Vec<(&Vec<i64>, &BigInt)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.0.iter().sum(), b.0.iter().sum());
            hb.cmp(&ha).then_with(|| b.0.cmp(a.0))
        });
        for (k, (lambda, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let is_const = lambda.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{}", mag)?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", mag)?;
            }
            write!(f, "e^({})", Root((*lambda).clone()))?;
        }
        Ok(())
    }
}

impl Add for &KElem {
    type Output = KElem;
    fn add(self, o: &KElem) -> KElem {
        let mut out = self.clone();
        for (l, c) in &o.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Neg for &KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem { rank: self.rank, terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect() }
    }
}

impl Sub for &KElem {
    type Output = KElem;
    fn sub(self, o: &KElem) -> KElem {
        self + &(-o)
    }
}

impl Mul for &KElem {
    type Output = KElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: &KElem) -> KElem {
        let mut out = KElem::zero(self.rank);
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }
}

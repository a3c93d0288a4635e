//! Exact polynomials over ℚ, reduced Gröbner bases and ideal operations.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU32, AtomicUsize, Ordering};

use crate::{Error, Result};

mod groebner;
mod ideal;
mod kpoly;
mod monomial;
mod order;
mod parse;
mod poly;

pub use groebner::{normal_form, reduced_groebner};
pub use ideal::Ideal;
pub use kpoly::{multidegree, Grading, KPolynomial};
pub use monomial::{minimal_transversals, MonomialIdeal};
pub use order::TermOrder;
pub use parse::{parse_ideal, parse_poly};
pub use poly::{cmp_polys, combinations, determinant, divides, lcm, rational, total_degree, Coeff, Exponent, Poly};

/// Resource caps for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 5000, max_degree: 60 }
    }
}

static MAX_BASIS: AtomicUsize = AtomicUsize::new(5000);
static MAX_DEGREE: AtomicU32 = AtomicU32::new(60);

/// Current process-wide limits.
pub fn limits() -> Limits {
    Limits { max_basis: MAX_BASIS.load(Ordering::Relaxed), max_degree: MAX_DEGREE.load(Ordering::Relaxed) }
}

pub fn set_limits(l: Limits) {
    MAX_BASIS.store(l.max_basis, Ordering::Relaxed);
    MAX_DEGREE.store(l.max_degree, Ordering::Relaxed);
}

/// An ordered list of variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    names: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Parse { pos: 0, msg: alloc::format!("invalid variable name '{}'", n) });
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring { names: Arc::new(names) })
    }

    /// Parses a comma-separated list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Self> {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Ring::new(names)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownVariable(String::from(name)))
    }

    pub fn var(&self, name: &str) -> Result<Poly> {
        Ok(Poly::var(self.nvars(), self.index(name)?))
    }

    /// This ring with extra variables appended.
    pub fn extend<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> Result<Ring> {
        Ring::new(self.names.iter().cloned().chain(extra.into_iter().map(Into::into)))
    }

    /// A variable name not yet used, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut k = 0usize;
        loop {
            let cand = if k == 0 { String::from(stem) } else { alloc::format!("{}{}", stem, k) };
            if !self.names.contains(&cand) {
                return cand;
            }
            k += 1;
        }
    }

    pub fn show(&self, p: &Poly) -> String {
        p.to_string_with(&self.names)
    }
}

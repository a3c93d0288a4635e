//! Buchberger's algorithm with the product and chain criteria.
//!
//! Polynomials are converted to term vectors sorted ascending under the
//! active order, so the leading term is always the last element.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use super::limits;
use super::order::TermOrder;
use super::poly::{cmp_polys, divides, lcm, total_degree, Coeff, Exponent, Poly};
use crate::{Error, Result};

#[derive(Debug, Clone)]
struct OPoly {
    /// ascending; leading term last
    terms: Vec<(Exponent, Coeff)>,
}

impl OPoly {
    fn from_poly(p: &Poly, order: &TermOrder) -> Self {
        let mut terms: Vec<(Exponent, Coeff)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        OPoly { terms }
    }

    fn to_poly(&self, nvars: usize) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().cloned())
    }

    fn lm(&self) -> &Exponent {
        &self.terms.last().unwrap().0
    }

    fn lc(&self) -> &Coeff {
        &self.terms.last().unwrap().1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.terms.last().map(|t| t.1.clone()) {
            if !lc.is_one() {
                let inv = lc.recip();
                for t in &mut self.terms {
                    t.1 = &t.1 * &inv;
                }
            }
        }
    }
}

/// `p − c·x^m·g`, all ascending.
fn sub_scaled(p: &[(Exponent, Coeff)], c: &Coeff, m: &[u32], g: &OPoly, order: &TermOrder) -> Vec<(Exponent, Coeff)> {
    let mut out = Vec::with_capacity(p.len() + g.terms.len());
    let shifted = g.terms.iter().map(|(e, v)| (e.iter().zip(m).map(|(a, b)| a + b).collect::<Exponent>(), v));
    let mut i = 0;
    for (e, v) in shifted {
        while i < p.len() && order.cmp(&p[i].0, &e) == Ordering::Less {
            out.push(p[i].clone());
            i += 1;
        }
        let prod = c * v;
        if i < p.len() && p[i].0 == e {
            let s = &p[i].1 - prod;
            if !s.is_zero() {
                out.push((e, s));
            }
            i += 1;
        } else {
            out.push((e, -prod));
        }
    }
    out.extend_from_slice(&p[i..]);
    out
}

/// Full reduction of `p` by `basis` (every term, not just the leading one).
fn reduce(p: OPoly, basis: &[&OPoly], order: &TermOrder) -> OPoly {
    let mut work = p.terms;
    let mut rem: Vec<(Exponent, Coeff)> = Vec::new();
    while let Some((lm, lc)) = work.last().cloned() {
        match basis.iter().find(|g| divides(g.lm(), &lm)) {
            Some(g) => {
                let m: Exponent = lm.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                let c = &lc / g.lc();
                work = sub_scaled(&work, &c, &m, g, order);
            }
            None => {
                work.pop();
                rem.push((lm, lc));
            }
        }
    }
    rem.reverse();
    OPoly { terms: rem }
}

fn spoly(f: &OPoly, g: &OPoly, order: &TermOrder) -> OPoly {
    let l = lcm(f.lm(), g.lm());
    let mf: Exponent = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
    let mg: Exponent = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
    // f, g monic
    let zero: Vec<(Exponent, Coeff)> = Vec::new();
    let a = sub_scaled(&zero, &-Coeff::one(), &mf, f, order);
    OPoly { terms: sub_scaled(&a, &Coeff::one(), &mg, g, order) }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
    degree: u32,
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic, sorted by
/// leading monomial ascending. The zero ideal gives an empty basis.
pub fn reduced_groebner(gens: &[Poly], nvars: usize, order: &TermOrder) -> Result<Vec<Poly>> {
    let caps = limits();
    let mut basis: Vec<OPoly> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |h: OPoly, basis: &mut Vec<OPoly>, pairs: &mut Vec<Pair>, pending: &mut BTreeSet<(usize, usize)>| -> Result<()> {
        if total_degree(h.lm()) > caps.max_degree {
            return Err(Error::ResourceCap { what: "Gröbner basis degree", cap: caps.max_degree as usize });
        }
        if basis.len() >= caps.max_basis {
            return Err(Error::ResourceCap { what: "Gröbner basis size", cap: caps.max_basis });
        }
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let l = lcm(g.lm(), h.lm());
            pairs.push(Pair { i, j, degree: total_degree(&l), lcm: l });
            pending.insert((i, j));
        }
        basis.push(h);
        Ok(())
    };

    for g in gens {
        let mut h = {
            let refs: Vec<&OPoly> = basis.iter().collect();
            reduce(OPoly::from_poly(g, order), &refs, order)
        };
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().iter().all(|&x| x == 0) {
            return Ok(alloc::vec![Poly::one(nvars)]);
        }
        add(h, &mut basis, &mut pairs, &mut pending)?;
    }

    while !pairs.is_empty() {
        // normal selection strategy: smallest lcm degree, then smallest lcm
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.degree
                    .cmp(&q.degree)
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(k);
        pending.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        // product criterion
        if fi.lm().iter().zip(fj.lm()).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        // chain criterion
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|m| {
            m != pair.i
                && m != pair.j
                && divides(basis[m].lm(), &pair.lcm)
                && !pending.contains(&key(pair.i, m))
                && !pending.contains(&key(pair.j, m))
        });
        if chain {
            continue;
        }
        let s = spoly(fi, fj, order);
        let mut h = {
            let refs: Vec<&OPoly> = basis.iter().collect();
            reduce(s, &refs, order)
        };
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().iter().all(|&x| x == 0) {
            return Ok(alloc::vec![Poly::one(nvars)]);
        }
        add(h, &mut basis, &mut pairs, &mut pending)?;
    }

    Ok(interreduce(basis, nvars, order))
}

fn interreduce(basis: Vec<OPoly>, nvars: usize, order: &TermOrder) -> Vec<Poly> {
    // minimal basis: drop elements whose leading monomial is divisible by
    // another one's (leading monomials are pairwise distinct here)
    let minimal: Vec<OPoly> = basis
        .iter()
        .enumerate()
        .filter(|(i, g)| !basis.iter().enumerate().any(|(j, h)| j != *i && divides(h.lm(), g.lm())))
        .map(|(_, g)| g.clone())
        .collect();
    let mut out: Vec<Poly> = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<&OPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h).collect();
        let lead = g.terms.last().cloned().unwrap();
        let tail = OPoly { terms: g.terms[..g.terms.len() - 1].to_vec() };
        let mut r = reduce(tail, &others, order);
        r.terms.push(lead);
        r.make_monic();
        out.push(r.to_poly(nvars));
    }
    out.sort_by(|a, b| cmp_polys(a, b, order));
    out
}

/// Remainder of `p` on division by a Gröbner basis `gb` (monic or not).
pub fn normal_form(p: &Poly, gb: &[Poly], order: &TermOrder) -> Poly {
    let mut basis: Vec<OPoly> = gb.iter().map(|g| OPoly::from_poly(g, order)).collect();
    for g in &mut basis {
        g.make_monic();
    }
    let refs: Vec<&OPoly> = basis.iter().collect();
    reduce(OPoly::from_poly(p, order), &refs, order).to_poly(p.nvars())
}

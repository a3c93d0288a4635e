//! Monomial ideals as lists of exponent vectors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{divides, gcd, lcm, Exponent};

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Exponent>) -> Self {
        MonomialIdeal { nvars, gens: minimalize(gens.into_iter().collect()) }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![vec![0; nvars]] }
    }

    /// Squarefree ideal from variable supports.
    pub fn from_supports(nvars: usize, supports: impl IntoIterator<Item = Vec<usize>>) -> Self {
        Self::new(
            nvars,
            supports.into_iter().map(|s| {
                let mut e = vec![0; nvars];
                for v in s {
                    e[v] = 1;
                }
                e
            }),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.iter().all(|&x| x <= 1))
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, m))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(lcm(a, b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `I : m`.
    pub fn colon(&self, m: &[u32]) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect()))
    }

    /// Radical: supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.iter().map(|&x| u32::from(x > 0)).collect()))
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.gens.iter().map(|g| (0..self.nvars).filter(|&v| g[v] > 0).collect()).collect()
    }

    /// Minimal primes, as the variable sets generating them: the minimal
    /// transversals of the generator supports. Empty for the unit ideal.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        minimal_transversals(&self.supports())
    }

    /// Krull dimension of the quotient, `None` for the unit ideal.
    pub fn dimension(&self) -> Option<usize> {
        self.minimal_primes().iter().map(|p| self.nvars - p.len()).max()
    }

    /// K-polynomial of the quotient in the fine grading: a map from
    /// exponent vectors of `t` to integer coefficients.
    pub fn kpoly_fine(&self) -> BTreeMap<Vec<i64>, BigInt> {
        let mut memo = BTreeMap::new();
        kpoly_rec(self.nvars, &self.gens, &mut memo)
    }
}

fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && divides(h, g)))
        .collect();
    let mut out: Vec<Exponent> = gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    out.sort();
    out
}

/// Minimal hitting sets of a family of sets (Berge's algorithm), sorted.
pub fn minimal_transversals(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut current: BTreeSet<Vec<usize>> = BTreeSet::new();
    current.insert(Vec::new());
    for s in sets {
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        for t in &current {
            if t.iter().any(|v| s.contains(v)) {
                next.insert(t.clone());
            } else {
                for &v in s {
                    let mut u = t.clone();
                    u.push(v);
                    u.sort_unstable();
                    next.insert(u);
                }
            }
        }
        // keep inclusion-minimal ones
        let all: Vec<Vec<usize>> = next.into_iter().collect();
        current = all
            .iter()
            .filter(|t| !all.iter().any(|u| u != *t && u.len() < t.len() && u.iter().all(|x| t.contains(x))))
            .cloned()
            .collect();
    }
    let mut out: Vec<Vec<usize>> = current.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

type KMap = BTreeMap<Vec<i64>, BigInt>;

fn kadd(acc: &mut KMap, e: Vec<i64>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = acc.entry(e.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        acc.remove(&e);
    }
}

fn kmul(a: &KMap, b: &KMap) -> KMap {
    let mut out = KMap::new();
    for (x, c) in a {
        for (y, d) in b {
            kadd(&mut out, x.iter().zip(y).map(|(p, q)| p + q).collect(), c * d);
        }
    }
    out
}

/// `K(J + ⟨m⟩) = K(J) − t^m·K(J : m)`.
fn kpoly_rec(nvars: usize, gens: &[Exponent], memo: &mut BTreeMap<Vec<Exponent>, KMap>) -> KMap {
    let one = || {
        let mut k = KMap::new();
        k.insert(vec![0; nvars], BigInt::one());
        k
    };
    if gens.is_empty() {
        return one();
    }
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        return KMap::new();
    }
    if let Some(k) = memo.get(gens) {
        return k.clone();
    }
    // pairwise coprime generators form a regular sequence
    let coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..].iter().all(|b| gcd(a, b).iter().all(|&x| x == 0))
    });
    let result = if coprime {
        let mut acc = one();
        for g in gens {
            let mut f = one();
            kadd(&mut f, g.iter().map(|&x| i64::from(x)).collect(), -BigInt::one());
            acc = kmul(&acc, &f);
        }
        acc
    } else {
        let (m, rest) = gens.split_last().unwrap();
        let k_rest = kpoly_rec(nvars, rest, memo);
        let colon = minimalize(rest.iter().map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect()).collect());
        let k_colon = kpoly_rec(nvars, &colon, memo);
        let mut out = k_rest;
        let shift: Vec<i64> = m.iter().map(|&x| i64::from(x)).collect();
        for (e, c) in k_colon {
            kadd(&mut out, e.iter().zip(&shift).map(|(a, b)| a + b).collect(), -c);
        }
        out
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transversals() {
        // ⟨xz, yz⟩ → primes ⟨z⟩, ⟨x,y⟩
        let t = minimal_transversals(&[vec![0, 2], vec![1, 2]]);
        assert_eq!(t, vec![vec![2], vec![0, 1]]);
        assert_eq!(minimal_transversals(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn kpoly_small_cases() {
        let k = MonomialIdeal::zero(2).kpoly_fine();
        assert_eq!(k.len(), 1);
        let x = MonomialIdeal::new(2, [vec![1, 0]]).kpoly_fine();
        assert_eq!(x.get(&vec![0, 0]), Some(&BigInt::one()));
        assert_eq!(x.get(&vec![1, 0]), Some(&-BigInt::one()));
        // ⟨x², xy⟩ = ⟨x⟩∩⟨x²,y⟩: K = 1 − t_x² − t_x t_y + t_x² t_y
        let k = MonomialIdeal::new(2, [vec![2, 0], vec![1, 1]]).kpoly_fine();
        let expect: KMap = [(vec![0, 0], 1), (vec![2, 0], -1), (vec![1, 1], -1), (vec![2, 1], 1)]
            .into_iter()
            .map(|(e, c)| (e, BigInt::from(c)))
            .collect();
        assert_eq!(k, expect);
    }

    #[test]
    fn dimension_and_unit() {
        assert_eq!(MonomialIdeal::new(2, [vec![1, 1]]).dimension(), Some(1));
        assert_eq!(MonomialIdeal::unit(3).dimension(), None);
        assert_eq!(MonomialIdeal::zero(3).dimension(), Some(3));
    }
}

//! Subword complexes and restriction classes `ξ^w(v)`, `k^w(v)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bruhat::{bruhat_leq, demazure_product};
use crate::classes::{HPoly, KElem};
use crate::polyalg::combinations;
use crate::roots::{Root, RootSystem, WeylElement, Word};
use crate::simplicial::{face_of, face_vertices, SimplicialComplex, MAX_VERTICES};
use crate::{Error, Result};

/// `Δ(Q, w)`: position sets (0-based) whose complement in `Q` is a reduced
/// word for `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordComplex {
    pub q: Word,
    pub w: WeylElement,
    pub complex: SimplicialComplex,
}

impl SubwordComplex {
    /// No subword of `Q` is a reduced word for `w`.
    pub fn is_void(&self) -> bool {
        self.complex.is_void()
    }
}

fn check_rank(rs: &RootSystem, x: &WeylElement) -> Result<()> {
    if x.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), found: x.rank() });
    }
    Ok(())
}

/// Position sets of `Q` spelling a reduced word for `w`.
pub fn reduced_subwords(rs: &RootSystem, q: &Word, w: &WeylElement) -> Result<Vec<Vec<usize>>> {
    rs.check_word(q)?;
    check_rank(rs, w)?;
    let l = w.length();
    let mut out = Vec::new();
    if l > q.len() {
        return Ok(out);
    }
    for pos in combinations(q.len(), l) {
        let mut x = rs.identity();
        let mut reduced = true;
        for &p in &pos {
            let i = q.letters()[p];
            if x.has_right_descent(i) {
                reduced = false;
                break;
            }
            x = x.right_mul_simple(i);
        }
        if reduced && x == *w {
            out.push(pos);
        }
    }
    Ok(out)
}

pub fn subword_complex(rs: &RootSystem, q: &Word, w: &WeylElement) -> Result<SubwordComplex> {
    if q.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(q.len()));
    }
    let all: Vec<usize> = (0..q.len()).collect();
    let full = face_of(&all);
    let facets = reduced_subwords(rs, q, w)?.into_iter().map(|j| face_vertices(full & !face_of(&j)));
    let complex = SimplicialComplex::new(q.len(), facets)?;
    Ok(SubwordComplex { q: q.clone(), w: w.clone(), complex })
}

/// `β_j = s_{q_1}⋯s_{q_{j−1}}(α_{q_j})`.
pub fn billey_roots(rs: &RootSystem, q: &Word) -> Result<Vec<Root>> {
    rs.check_word(q)?;
    let mut x = rs.identity();
    let mut out = Vec::with_capacity(q.len());
    for &i in q.letters() {
        out.push(x.image_of_simple(i));
        x = x.right_mul_simple(i);
    }
    Ok(out)
}

fn require_reduced(rs: &RootSystem, q: &Word) -> Result<()> {
    if !rs.word_eval(q)?.is_reduced {
        return Err(Error::NotReduced(alloc::format!("{}", q)));
    }
    Ok(())
}

/// `ξ^w(v)` for `v` the product of the reduced word `Q`: the sum over
/// reduced subwords for `w` of the products of their Billey roots.
pub fn billey_restriction(rs: &RootSystem, q: &Word, w: &WeylElement) -> Result<HPoly> {
    require_reduced(rs, q)?;
    let beta = billey_roots(rs, q)?;
    let mut total = HPoly::zero(rs.rank());
    for j in reduced_subwords(rs, q, w)? {
        let mut term = HPoly::one(rs.rank());
        for p in j {
            term = &term * &HPoly::root(&beta[p]);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `k^w(v)` for `v` the product of the reduced word `Q`:
/// `Σ (−1)^{|J|−ℓ(w)} Π_{j∈J} (1 − e^{−β_j})` over position sets `J` whose
/// Demazure product is `w`.
pub fn ktheory_restriction_direct(rs: &RootSystem, q: &Word, w: &WeylElement) -> Result<KElem> {
    require_reduced(rs, q)?;
    check_rank(rs, w)?;
    if q.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(q.len()));
    }
    let beta = billey_roots(rs, q)?;
    let lambdas: Vec<KElem> = beta.iter().map(KElem::hyperplane).collect();
    let l = w.length();
    let mut total = KElem::zero(rs.rank());
    for mask in 0u32..1 << q.len() {
        let pos = face_vertices(mask);
        let sub = Word(pos.iter().map(|&p| q.letters()[p]).collect());
        if demazure_product(rs, &sub)? != *w {
            continue;
        }
        let mut term = KElem::one(rs.rank());
        for &p in &pos {
            term = &term * &lambdas[p];
        }
        total = if (pos.len() - l).is_multiple_of(2) { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// Which of the three degeneration cases applies at a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepCase {
    /// `w r_α > w`.
    A,
    /// `w r_α < w` and `w ≰ v r_α`.
    B,
    /// `w r_α < w` and `w ≤ v r_α`.
    C,
}

/// Case for `(w, v)` and a simple index `i` with `v r_i < v`. Case B is
/// taken under `w ≰ v r_α`, not under the reversed comparison `v r_α ≰ w`.
pub fn step_case(w: &WeylElement, v: &WeylElement, i: usize) -> Result<StepCase> {
    if !w.has_right_descent(i) {
        return Ok(StepCase::A);
    }
    if bruhat_leq(w, &v.right_mul_simple(i))? {
        Ok(StepCase::C)
    } else {
        Ok(StepCase::B)
    }
}

/// Last letter of the lexicographically first reduced word of `v`.
pub fn recursion_letter(v: &WeylElement) -> Option<usize> {
    v.reduced_word().letters().last().copied()
}

/// `ξ^w(v)` by the degeneration recursion along the last letter of the
/// lex-first reduced word of `v`.
pub fn restriction_recursive(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> Result<HPoly> {
    check_rank(rs, w)?;
    check_rank(rs, v)?;
    let mut memo = BTreeMap::new();
    h_rec(rs, w, v, &mut memo)
}

fn h_rec(
    rs: &RootSystem,
    w: &WeylElement,
    v: &WeylElement,
    memo: &mut BTreeMap<(WeylElement, WeylElement), HPoly>,
) -> Result<HPoly> {
    let r = rs.rank();
    let Some(i) = recursion_letter(v) else {
        return Ok(if w.is_identity() { HPoly::one(r) } else { HPoly::zero(r) });
    };
    if !bruhat_leq(w, v)? {
        return Ok(HPoly::zero(r));
    }
    let key = (w.clone(), v.clone());
    if let Some(h) = memo.get(&key) {
        return Ok(h.clone());
    }
    let rho = HPoly::root(&v.image_of_simple(i).neg());
    let vr = v.right_mul_simple(i);
    let out = match step_case(w, v, i)? {
        StepCase::A => h_rec(rs, w, &vr, memo)?,
        StepCase::B => &rho * &h_rec(rs, &w.right_mul_simple(i), &vr, memo)?,
        StepCase::C => {
            let a = &rho * &h_rec(rs, &w.right_mul_simple(i), &vr, memo)?;
            &a + &h_rec(rs, w, &vr, memo)?
        }
    };
    memo.insert(key, out.clone());
    Ok(out)
}

/// `k^w(v)` by the same recursion, with `λ = 1 − e^{v·α}` and the
/// inclusion–exclusion form in case C.
pub fn ktheory_restriction_recursive(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> Result<KElem> {
    check_rank(rs, w)?;
    check_rank(rs, v)?;
    let mut memo = BTreeMap::new();
    k_rec(rs, w, v, &mut memo)
}

fn k_rec(
    rs: &RootSystem,
    w: &WeylElement,
    v: &WeylElement,
    memo: &mut BTreeMap<(WeylElement, WeylElement), KElem>,
) -> Result<KElem> {
    let r = rs.rank();
    let Some(i) = recursion_letter(v) else {
        return Ok(if w.is_identity() { KElem::one(r) } else { KElem::zero(r) });
    };
    if !bruhat_leq(w, v)? {
        return Ok(KElem::zero(r));
    }
    let key = (w.clone(), v.clone());
    if let Some(k) = memo.get(&key) {
        return Ok(k.clone());
    }
    let lambda = KElem::hyperplane(&v.image_of_simple(i).neg());
    let vr = v.right_mul_simple(i);
    let out = match step_case(w, v, i)? {
        StepCase::A => k_rec(rs, w, &vr, memo)?,
        StepCase::B => &lambda * &k_rec(rs, &w.right_mul_simple(i), &vr, memo)?,
        StepCase::C => {
            let low = k_rec(rs, &w.right_mul_simple(i), &vr, memo)?;
            let same = k_rec(rs, w, &vr, memo)?;
            &(&(&lambda * &low) + &same) - &(&lambda * &same)
        }
    };
    memo.insert(key, out.clone());
    Ok(out)
}

/// Faces of `Δ(Q, w)` whose complement has Demazure product `w`.
pub fn interior_faces(rs: &RootSystem, s: &SubwordComplex) -> Result<Vec<Vec<usize>>> {
    let n = s.q.len();
    let mut out = Vec::new();
    for f in s.complex.all_faces() {
        let comp = Word((0..n).filter(|p| f >> p & 1 == 0).map(|p| s.q.letters()[p]).collect());
        if demazure_product(rs, &comp)? == s.w {
            out.push(face_vertices(f));
        }
    }
    Ok(out)
}

/// `Σ_λ c_λ` as a check value: 1 for `w = 1`, 0 otherwise.
pub fn expected_augmentation(w: &WeylElement) -> BigInt {
    BigInt::from(i32::from(w.is_identity()))
}

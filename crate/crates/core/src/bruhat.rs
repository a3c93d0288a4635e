//! Bruhat order, reduced words and Demazure products.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::roots::{RootSystem, WeylElement, Word};
use crate::{Error, Result};

/// A pair of elements to compare, `u ≤ w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatQuery {
    pub u: WeylElement,
    pub w: WeylElement,
}

/// A reduced word for `w` together with the positions (0-based) of a
/// subword that is a reduced word for `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordWitness {
    pub word: Word,
    pub positions: Vec<usize>,
}

fn check_ranks(u: &WeylElement, w: &WeylElement) -> Result<()> {
    if u.rank() != w.rank() {
        return Err(Error::RankMismatch { expected: w.rank(), found: u.rank() });
    }
    Ok(())
}

/// `u ≤ w` in Bruhat order.
///
/// Uses the lifting property: for a right descent `s` of `w`, `u ≤ w` iff
/// `us ≤ ws` when `s` is also a descent of `u`, and iff `u ≤ ws` otherwise.
/// The recursion never branches, so no memo table is needed.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool> {
    Ok(bruhat_witness(u, w)?.is_some())
}

/// Like [`bruhat_leq`], also returning a reduced word of `w` with a reduced
/// subword for `u` when the answer is yes.
pub fn bruhat_witness(u: &WeylElement, w: &WeylElement) -> Result<Option<SubwordWitness>> {
    check_ranks(u, w)?;
    let (mut u, mut w) = (u.clone(), w.clone());
    if u.length() > w.length() {
        return Ok(None);
    }
    // letters are peeled from the right end of w
    let mut letters = Vec::new();
    let mut used = Vec::new();
    while let Some(s) = w.right_descents().first().copied() {
        letters.push(s);
        if u.has_right_descent(s) {
            u = u.right_mul_simple(s);
            used.push(true);
        } else {
            used.push(false);
        }
        w = w.right_mul_simple(s);
    }
    if !u.is_identity() {
        return Ok(None);
    }
    letters.reverse();
    used.reverse();
    let positions = used.iter().enumerate().filter(|(_, &b)| b).map(|(k, _)| k).collect();
    Ok(Some(SubwordWitness { word: Word(letters), positions }))
}

/// All reduced words of `w`, sorted lexicographically.
pub fn reduced_words(w: &WeylElement) -> Vec<Word> {
    let mut memo = BTreeMap::new();
    words_rec(w, &mut memo)
}

fn words_rec(w: &WeylElement, memo: &mut BTreeMap<WeylElement, Vec<Word>>) -> Vec<Word> {
    if w.is_identity() {
        return alloc::vec![Word::empty()];
    }
    if let Some(ws) = memo.get(w) {
        return ws.clone();
    }
    let inv = w.inverse();
    let mut out = Vec::new();
    // first letters of reduced words are the left descents
    for i in inv.right_descents() {
        for tail in words_rec(&w.left_mul_simple(i), memo) {
            let mut letters = Vec::with_capacity(tail.len() + 1);
            letters.push(i);
            letters.extend_from_slice(tail.letters());
            out.push(Word(letters));
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// 0-Hecke product of a word: multiply by `s_i` only when the length goes up.
pub fn demazure_product(rs: &RootSystem, q: &Word) -> Result<WeylElement> {
    rs.check_word(q)?;
    let mut x = rs.identity();
    for &i in q.letters() {
        if !x.has_right_descent(i) {
            x = x.right_mul_simple(i);
        }
    }
    Ok(x)
}

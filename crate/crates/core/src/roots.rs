//! Root systems of finite type and Weyl group arithmetic.
//!
//! Weyl group elements are stored as integer matrices acting on the root
//! lattice in the basis of simple roots. For a Cartan matrix `A` the simple
//! reflection `s_i` sends `α_j ↦ α_j − A[i][j]·α_i`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::{Error, Result};

/// Maximum number of positive roots before a matrix is declared non-finite.
pub const ROOT_CAP: usize = 10_000;

/// A vector in the root lattice, written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Nonzero with all coordinates nonnegative.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Root {
    /// Prints as a linear form in `a1..ar`, e.g. `a1 + 2a2` or `-a1 - a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if mag != 1 {
                write!(f, "{}", mag)?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A word in the simple reflections. Letters are stored 0-based; parsing and
/// display use the conventional 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from 1-based letters.
    pub fn from_one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&i| i - 1).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses a comma-separated list of 1-based indices. The empty string
    /// is the empty word.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" || s == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let t = part.trim();
            let v: usize = t.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a positive index, found `{}`", t),
            })?;
            if v == 0 {
                return Err(Error::Parse { pos, msg: "indices are 1-based".to_string() });
            }
            letters.push(v - 1);
            pos += part.len() + 1;
        }
        Ok(Word(letters))
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str(")")
    }
}


/// An element of the Weyl group, as its matrix on the root lattice.
///
/// Equality, ordering and hashing use the matrix only.
#[derive(Debug, Clone)]
pub struct WeylElement {
    cartan: Arc<Vec<i64>>,
    rank: usize,
    /// Row-major `rank × rank`; column `j` is the image of `α_j`.
    matrix: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank, &self.matrix).cmp(&(other.rank, &other.matrix))
    }
}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.matrix.hash(state);
    }
}

impl WeylElement {
    fn identity_with(cartan: Arc<Vec<i64>>, rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement { cartan, rank, matrix }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (0..r).all(|j| self.matrix[i * r + j] == i64::from(i == j)))
    }

    pub fn act(&self, beta: &Root) -> Result<Root> {
        if beta.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: beta.rank() });
        }
        let r = self.rank;
        Ok(Root((0..r).map(|i| (0..r).map(|j| self.matrix[i * r + j] * beta.0[j]).sum()).collect()))
    }

    /// Image of the simple root `α_i` (column `i`).
    pub fn image_of_simple(&self, i: usize) -> Root {
        let r = self.rank;
        Root((0..r).map(|k| self.matrix[k * r + i]).collect())
    }

    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let r = self.rank;
        let mut m = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.matrix[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    m[i * r + j] += a * other.matrix[k * r + j];
                }
            }
        }
        Ok(WeylElement { cartan: self.cartan.clone(), rank: r, matrix: m })
    }

    /// `w·s_i`: column `j` becomes `w(α_j) − A[i][j]·w(α_i)`.
    pub fn right_mul_simple(&self, i: usize) -> WeylElement {
        let r = self.rank;
        let wi = self.image_of_simple(i);
        let mut m = self.matrix.clone();
        for j in 0..r {
            let a = self.cartan[i * r + j];
            if a != 0 {
                for k in 0..r {
                    m[k * r + j] -= a * wi.0[k];
                }
            }
        }
        WeylElement { cartan: self.cartan.clone(), rank: r, matrix: m }
    }

    /// `s_i·w`: `s_i` applied to every column.
    pub fn left_mul_simple(&self, i: usize) -> WeylElement {
        let r = self.rank;
        let mut m = self.matrix.clone();
        for j in 0..r {
            // coefficient of α_i in s_i(β) is β_i − Σ_k A[i][k] β_k
            let pairing: i64 = (0..r).map(|k| self.cartan[i * r + k] * self.matrix[k * r + j]).sum();
            m[i * r + j] -= pairing;
        }
        WeylElement { cartan: self.cartan.clone(), rank: r, matrix: m }
    }

    /// `w·s_i < w`, i.e. `w(α_i)` is a negative root.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.image_of_simple(i).is_negative()
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// `s_i·w < w`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Strips the smallest right descent until the identity is reached; the
    /// letters, read backwards, form a reduced word.
    fn descent_letters(&self) -> Vec<usize> {
        let mut u = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| u.has_right_descent(i)) {
            rev.push(i);
            u = u.right_mul_simple(i);
        }
        rev
    }

    pub fn inverse(&self) -> WeylElement {
        // w = s_{i1}⋯s_{ik} with `rev` = (ik, …, i1), so w⁻¹ = s_{ik}⋯s_{i1}.
        let mut u = WeylElement::identity_with(self.cartan.clone(), self.rank);
        for i in self.descent_letters() {
            u = u.right_mul_simple(i);
        }
        u
    }

    /// Coxeter length.
    pub fn length(&self) -> usize {
        self.descent_letters().len()
    }

    /// The lexicographically first reduced word.
    pub fn reduced_word(&self) -> Word {
        // First letters of reduced words are exactly the left descents.
        let mut u = self.inverse();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| u.has_right_descent(i)) {
            word.push(i);
            u = u.right_mul_simple(i);
        }
        Word(word)
    }

    /// One-line notation for type A elements: `w(1), …, w(n)` with
    /// `s_i ↦ (i, i+1)`. Only meaningful when the root system is `A_{n-1}`.
    pub fn to_permutation(&self) -> Vec<usize> {
        let n = self.rank + 1;
        let mut perm: Vec<usize> = (1..=n).collect();
        for i in self.reduced_word().0 {
            perm.swap(i, i + 1);
        }
        perm
    }
}

/// Result of evaluating a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEval {
    pub element: WeylElement,
    pub length: usize,
    pub is_reduced: bool,
}

/// A root system of finite type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: Option<String>,
    rank: usize,
    cartan: Arc<Vec<i64>>,
    positive: Vec<Root>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

impl RootSystem {
    /// Builds the root system for a label such as `A3`, `B2`, `G2`, `E8`.
    pub fn from_label(label: &str) -> Result<Self> {
        let cartan = cartan_for_label(label)?;
        let mut rs = Self::from_cartan(cartan)?;
        rs.label = Some(label.to_string());
        Ok(rs)
    }

    /// Builds from an explicit Cartan matrix given as rows.
    pub fn from_cartan(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        let mut entries = Vec::with_capacity(rank * rank);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j && a != 2 {
                    return Err(Error::InvalidCartan(format!("diagonal entry ({0},{0}) is {1}", i + 1, a)));
                }
                if i != j && a > 0 {
                    return Err(Error::InvalidCartan(format!("off-diagonal entry ({},{}) is positive", i + 1, j + 1)));
                }
                if i != j && (a == 0) != (rows[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!("entries ({0},{1}) and ({1},{0}) disagree on zero", i + 1, j + 1)));
                }
            }
            entries.extend_from_slice(row);
        }
        let positive = positive_roots(rank, &entries)?;
        Ok(RootSystem { label: None, rank, cartan: Arc::new(entries), positive })
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        if beta.is_negative() {
            self.positive.binary_search_by(|p| root_order(p, &beta.neg())).is_ok()
        } else {
            self.positive.binary_search_by(|p| root_order(p, beta)).is_ok()
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity_with(self.cartan.clone(), self.rank)
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(self.identity().right_mul_simple(i))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank {
            return Err(Error::IndexOutOfRange { index: i + 1, rank: self.rank });
        }
        Ok(())
    }

    pub fn check_word(&self, q: &Word) -> Result<()> {
        q.0.iter().try_for_each(|&i| self.check_index(i))
    }

    /// Product of the simple reflections of `q`, in order.
    pub fn word_eval(&self, q: &Word) -> Result<WordEval> {
        self.check_word(q)?;
        let mut element = self.identity();
        for &i in &q.0 {
            element = element.right_mul_simple(i);
        }
        let length = element.length();
        Ok(WordEval { is_reduced: length == q.len(), element, length })
    }

    pub fn element(&self, q: &Word) -> Result<WeylElement> {
        Ok(self.word_eval(q)?.element)
    }

    /// Longest element: keep multiplying by a simple reflection that raises
    /// the length.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        while let Some(i) = (0..self.rank).find(|&i| !w.has_right_descent(i)) {
            w = w.right_mul_simple(i);
        }
        w
    }

    /// Every element of the Weyl group, sorted by length and then matrix.
    /// Fails beyond `cap` elements.
    pub fn elements(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank {
                let u = w.right_mul_simple(i);
                if !seen.contains(&u) {
                    if seen.len() >= cap {
                        return Err(Error::ResourceCap { what: "Weyl group size", cap });
                    }
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
        let mut all: Vec<(usize, WeylElement)> = seen.into_iter().map(|w| (w.length(), w)).collect();
        all.sort();
        Ok(all.into_iter().map(|(_, w)| w).collect())
    }

    /// Whether this is the type `A_r` Cartan matrix in standard numbering.
    pub fn is_type_a(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| {
            (0..r).all(|j| {
                let expected = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    0
                };
                self.cartan(i, j) == expected
            })
        })
    }

    /// Element with one-line notation `perm` (values `1..=rank+1`).
    pub fn from_permutation(&self, perm: &[usize]) -> Result<WeylElement> {
        let n = self.rank + 1;
        if !self.is_type_a() {
            return Err(Error::Precondition("permutations require a type A root system".into()));
        }
        validate_permutation(perm, n)?;
        let mut p = perm.to_vec();
        let mut rev = Vec::new();
        while let Some(i) = (0..n - 1).find(|&i| p[i] > p[i + 1]) {
            rev.push(i);
            p.swap(i, i + 1);
        }
        rev.reverse();
        self.element(&Word(rev))
    }
}

pub fn validate_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!("expected {} entries, found {}", n, perm.len())));
    }
    for &x in perm {
        if x == 0 || x > n || seen[x] {
            return Err(Error::InvalidPermutation(format!("{:?}", perm)));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Number of inversions of a permutation in one-line notation.
pub fn permutation_length(perm: &[usize]) -> usize {
    let n = perm.len();
    (0..n).map(|i| (i + 1..n).filter(|&j| perm[i] > perm[j]).count()).sum()
}

fn root_order(a: &Root, b: &Root) -> Ordering {
    (a.height(), &a.0).cmp(&(b.height(), &b.0))
}

fn positive_roots(rank: usize, a: &[i64]) -> Result<Vec<Root>> {
    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let s = Root::simple(rank, i);
        seen.insert(s.clone());
        queue.push_back(s);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|k| a[i * rank + k] * beta.0[k]).sum();
            if pairing == 0 {
                continue;
            }
            let mut gamma = beta.clone();
            gamma.0[i] -= pairing;
            if gamma.is_positive() && !seen.contains(&gamma) {
                if seen.len() >= ROOT_CAP {
                    return Err(Error::NotFiniteType { cap: ROOT_CAP });
                }
                seen.insert(gamma.clone());
                queue.push_back(gamma);
            }
        }
    }
    let mut roots: Vec<Root> = seen.into_iter().collect();
    roots.sort_by(root_order);
    Ok(roots)
}

fn cartan_for_label(label: &str) -> Result<Vec<Vec<i64>>> {
    let unknown = || Error::UnknownType(label.to_string());
    let mut chars = label.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let digits = chars.as_str();
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(unknown());
    }
    let n: usize = digits.parse().map_err(|_| unknown())?;
    let mut m = vec![vec![0i64; n]; n];
    let chain = |m: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..len {
            m[i][i] = 2;
            if i + 1 < len {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
    };
    match (family, n) {
        ('A', n) if n >= 1 => chain(&mut m, n),
        ('B', n) if n >= 2 => {
            chain(&mut m, n);
            m[n - 1][n - 2] = -2;
        }
        ('C', n) if n >= 2 => {
            chain(&mut m, n);
            m[n - 2][n - 1] = -2;
        }
        ('D', n) if n >= 3 => {
            // chain α_1 … α_{n-1}, with α_n attached to α_{n-2}
            chain(&mut m, n - 1);
            m[n - 1][n - 1] = 2;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
        }
        ('E', 6..=8) => {
            // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n == 8 {
                edges.push((7, 8));
            }
            for (a, b) in edges {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            }
        }
        ('F', 4) => {
            chain(&mut m, 4);
            m[2][1] = -2;
        }
        ('G', 2) => {
            chain(&mut m, 2);
            m[0][1] = -3;
        }
        _ => return Err(unknown()),
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::from_label("A2").unwrap()
    }

    fn w(rs: &RootSystem, letters: &[usize]) -> WeylElement {
        rs.element(&Word::from_one_based(letters)).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        for (label, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("B2", 4),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E8", 120),
        ] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.positive_roots().len(), count, "{}", label);
            assert_eq!(rs.longest_element().length(), count, "{}", label);
        }
    }

    #[test]
    fn a2_roots_in_height_order() {
        let rs = a2();
        let roots: Vec<_> = rs.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn bad_labels_and_matrices() {
        assert!(matches!(RootSystem::from_label("H3"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::from_label("A0"), Err(Error::UnknownType(_))));
        assert!(matches!(RootSystem::from_label("G3"), Err(Error::UnknownType(_))));
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, 1], vec![-1, 2]]),
            Err(Error::InvalidCartan(_))
        ));
        // affine A1
        assert!(matches!(
            RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]),
            Err(Error::NotFiniteType { .. })
        ));
    }

    #[test]
    fn reflection_examples() {
        let rs = a2();
        let s1 = w(&rs, &[1]);
        assert_eq!(s1.act(&Root(vec![1, 0])).unwrap(), Root(vec![-1, 0]));
        assert_eq!(s1.act(&Root(vec![0, 1])).unwrap(), Root(vec![1, 1]));
        assert_eq!(w(&rs, &[1, 2]).act(&Root(vec![1, 0])).unwrap(), Root(vec![0, 1]));
        assert!(matches!(s1.act(&Root(vec![1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn word_eval_examples() {
        let rs = a2();
        let e = rs.word_eval(&Word::from_one_based(&[1, 2, 1])).unwrap();
        assert_eq!(e.length, 3);
        assert!(e.is_reduced);
        let e = rs.word_eval(&Word::from_one_based(&[1, 1])).unwrap();
        assert!(e.element.is_identity());
        assert!(!e.is_reduced);
        let e = rs.word_eval(&Word::empty()).unwrap();
        assert!(e.element.is_identity() && e.is_reduced && e.length == 0);
        assert!(matches!(
            rs.word_eval(&Word::from_one_based(&[3])),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn involutions_and_braids() {
        for label in ["A3", "B2", "B3", "C3", "G2", "D4", "F4"] {
            let rs = RootSystem::from_label(label).unwrap();
            for i in 0..rs.rank() {
                let s = rs.simple_reflection(i).unwrap();
                assert!(s.mul(&s).unwrap().is_identity());
                for j in 0..rs.rank() {
                    if i == j {
                        continue;
                    }
                    let m = match rs.cartan(i, j) * rs.cartan(j, i) {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => unreachable!(),
                    };
                    let st = s.mul(&rs.simple_reflection(j).unwrap()).unwrap();
                    let mut p = rs.identity();
                    for _ in 0..m {
                        p = p.mul(&st).unwrap();
                    }
                    assert!(p.is_identity(), "{} ({},{})", label, i, j);
                }
            }
        }
    }

    #[test]
    fn length_is_inversion_count() {
        for label in ["A3", "B3", "G2"] {
            let rs = RootSystem::from_label(label).unwrap();
            for x in rs.elements(100_000).unwrap() {
                let inv = rs
                    .positive_roots()
                    .iter()
                    .filter(|b| x.act(b).unwrap().is_negative())
                    .count();
                assert_eq!(inv, x.length());
                for i in 0..rs.rank() {
                    let l = x.right_mul_simple(i).length();
                    assert!(l + 1 == x.length() || l == x.length() + 1);
                    assert_eq!(x.left_mul_simple(i), rs.simple_reflection(i).unwrap().mul(&x).unwrap());
                }
                assert!(x.mul(&x.inverse()).unwrap().is_identity());
                assert_eq!(rs.element(&x.reduced_word()).unwrap(), x);
            }
        }
    }

    #[test]
    fn permutations_round_trip() {
        let rs = RootSystem::from_label("A3").unwrap();
        for x in rs.elements(100).unwrap() {
            let p = x.to_permutation();
            assert_eq!(permutation_length(&p), x.length());
            assert_eq!(rs.from_permutation(&p).unwrap(), x);
        }
        // s1 s2 as a function: 1 ↦ 2, 2 ↦ 3, 3 ↦ 1
        let rs3 = a2();
        assert_eq!(w(&rs3, &[1, 2]).to_permutation(), vec![2, 3, 1]);
        assert!(rs3.from_permutation(&[1, 1, 2]).is_err());
    }

    #[test]
    fn group_orders() {
        for (label, order) in [("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48), ("D4", 192)] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.elements(100_000).unwrap().len(), order);
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(alloc::format!("{}", Root(vec![1, 1])), "a1 + a2");
        assert_eq!(alloc::format!("{}", Root(vec![-1, -2])), "-a1 - 2a2");
        assert_eq!(alloc::format!("{}", Root(vec![0, 0])), "0");
    }
}

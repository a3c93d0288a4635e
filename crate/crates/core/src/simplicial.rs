//! Simplicial complexes on at most 25 vertices, with faces stored as
//! bitmasks.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::polyalg::{minimal_transversals, Ideal, MonomialIdeal, Ring};
use crate::{Error, Result};

pub const MAX_VERTICES: usize = 25;

pub type Face = u32;

pub fn face_of(vertices: &[usize]) -> Face {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn face_vertices(f: Face) -> Vec<usize> {
    (0..32).filter(|&v| f >> v & 1 == 1).collect()
}

fn size(f: Face) -> usize {
    f.count_ones() as usize
}

/// A simplicial complex given by its facets. The void complex has no
/// facets; the complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
}

fn sort_faces(faces: &mut [Face]) {
    faces.sort_by_key(|&f| face_vertices(f));
}

fn maximal(faces: impl IntoIterator<Item = Face>) -> Vec<Face> {
    let set: BTreeSet<Face> = faces.into_iter().collect();
    let mut out: Vec<Face> = set.iter().copied().filter(|&f| !set.iter().any(|&g| g != f && g & f == f)).collect();
    sort_faces(&mut out);
    out
}

impl SimplicialComplex {
    /// Vertices `0..n` labelled by their 1-based position.
    pub fn new(n: usize, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let labels = (1..=n).map(|i| alloc::format!("{}", i)).collect();
        Self::with_labels(labels, facets)
    }

    pub fn with_labels(labels: Vec<String>, facets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut masks = Vec::new();
        for f in facets {
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index: v, rank: n });
            }
            masks.push(face_of(&f));
        }
        Ok(SimplicialComplex { labels, facets: maximal(masks) })
    }

    fn from_masks(labels: Vec<String>, masks: impl IntoIterator<Item = Face>) -> Self {
        SimplicialComplex { labels, facets: maximal(masks) }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, [(0..n).collect()])
    }

    pub fn nvertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facet_masks(&self) -> &[Face] {
        &self.facets
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| face_vertices(f)).collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| g & f == f)
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|&f| size(f) as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| size(w[0]) == size(w[1]))
    }

    /// All faces of the given size.
    pub fn faces_of_size(&self, k: usize) -> Vec<Face> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            subsets_of_size(f, k, &mut set);
        }
        let mut out: Vec<Face> = set.into_iter().collect();
        sort_faces(&mut out);
        out
    }

    pub fn all_faces(&self) -> Vec<Face> {
        let top = self.dim().map_or(0, |d| (d + 1) as usize);
        (0..=top).flat_map(|k| self.faces_of_size(k)).collect()
    }

    /// `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            None => Vec::new(),
            Some(d) => (0..=(d + 1) as usize).map(|k| self.faces_of_size(k).len()).collect(),
        }
    }

    /// Reduced Euler characteristic `Σ (−1)^i f_i` from `i = −1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) }).sum()
    }

    /// Link of a face, on the same vertex set. Void when `f` is not a face.
    pub fn link(&self, f: Face) -> SimplicialComplex {
        Self::from_masks(self.labels.clone(), self.facets.iter().filter(|&&g| g & f == f).map(|&g| g & !f))
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        Self::from_masks(self.labels.clone(), self.facets.iter().map(|&g| g & !(1 << v)))
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        Self::from_masks(self.labels.clone(), self.facets.iter().chain(&other.facets).copied())
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        Self::from_masks(
            self.labels.clone(),
            self.facets.iter().flat_map(|&a| other.facets.iter().map(move |&b| a & b)),
        )
    }

    /// Reduced Betti numbers over ℚ, indexed from dimension −1 up to
    /// `dim`. Empty for the void complex.
    pub fn reduced_homology(&self) -> Vec<usize> {
        let Some(d) = self.dim() else { return Vec::new() };
        let top = (d + 1) as usize;
        let faces: Vec<Vec<Face>> = (0..=top).map(|k| self.faces_of_size(k)).collect();
        // rank of ∂_k : C_k → C_{k-1}, faces of size k to size k-1
        let mut ranks = vec![0usize; top + 2];
        for k in 1..=top {
            ranks[k] = boundary_rank(&faces[k], &faces[k - 1]);
        }
        (0..=top).map(|k| faces[k].len() - ranks[k] - ranks[k + 1]).collect()
    }

    /// Reisner's criterion: every link `lk σ` (σ = ∅ included) has vanishing
    /// reduced homology below its dimension.
    pub fn is_cm_reisner(&self) -> CmReport {
        if !self.is_pure() {
            return CmReport { cm: false, witness: None, impure: true };
        }
        for f in self.all_faces() {
            let lk = self.link(f);
            let h = lk.reduced_homology();
            let below = h.len().saturating_sub(1);
            if h[..below].iter().any(|&b| b != 0) {
                return CmReport { cm: false, witness: Some(face_vertices(f)), impure: false };
            }
        }
        CmReport { cm: true, witness: None, impure: false }
    }

    /// Checks an order of facet indices (into [`Self::facets`]) as a
    /// shelling. On failure returns the position in `order` that breaks it.
    pub fn check_shelling(&self, order: &[usize]) -> core::result::Result<(), usize> {
        let mut seen = vec![false; self.facets.len()];
        for (pos, &i) in order.iter().enumerate() {
            if i >= self.facets.len() || seen[i] {
                return Err(pos);
            }
            seen[i] = true;
        }
        if order.len() != self.facets.len() || !self.is_pure() {
            return Err(order.len().min(self.facets.len()));
        }
        let masks: Vec<Face> = order.iter().map(|&i| self.facets[i]).collect();
        for j in 1..masks.len() {
            if !extends_shelling(&masks[..j], masks[j]) {
                return Err(j);
            }
        }
        Ok(())
    }

    /// Backtracking search for a shelling, as facet indices.
    pub fn find_shelling(&self) -> Option<Vec<usize>> {
        if !self.is_pure() {
            return None;
        }
        if self.facets.is_empty() {
            return Some(Vec::new());
        }
        let mut failed: BTreeSet<Vec<bool>> = BTreeSet::new();
        let n = self.facets.len();
        for start in 0..n {
            let mut order = vec![start];
            let mut used = vec![false; n];
            used[start] = true;
            if shell_rec(&self.facets, &mut order, &mut used, &mut failed) {
                return Some(order);
            }
        }
        None
    }

    /// Vertex decomposability via shedding vertices: a shedding vertex `v`
    /// has no face of `lk v` that is a facet of `del v`, and both `lk v` and
    /// `del v` are vertex decomposable. Simplices (including `{∅}` and the
    /// void complex) are vertex decomposable.
    pub fn vertex_decomposition(&self) -> Option<VdTree> {
        let mut memo = BTreeMap::new();
        vd_rec(self, &mut memo)
    }

    pub fn is_vertex_decomposable(&self) -> bool {
        self.vertex_decomposition().is_some()
    }

    /// Minimal non-faces, as a squarefree monomial ideal in one variable per
    /// vertex.
    pub fn minimal_nonfaces(&self) -> MonomialIdeal {
        let n = self.nvertices();
        let all: Face = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let complements: Vec<Vec<usize>> = self.facets.iter().map(|&f| face_vertices(all & !f)).collect();
        MonomialIdeal::from_supports(n, minimal_transversals(&complements))
    }

    /// Stanley–Reisner ideal in the ring with the given variable names.
    pub fn sr_ideal(&self, names: &[String]) -> Result<Ideal> {
        if names.len() != self.nvertices() {
            return Err(Error::RankMismatch { expected: self.nvertices(), found: names.len() });
        }
        let ring = Ring::new(names.iter().cloned())?;
        Ok(Ideal::from_monomial(ring, &self.minimal_nonfaces()))
    }

    /// The complex whose Stanley–Reisner ideal is the squarefree monomial
    /// ideal `m`. The unit ideal gives the void complex.
    pub fn from_monomial_ideal(m: &MonomialIdeal) -> Result<Self> {
        if !m.is_squarefree() {
            return Err(Error::Precondition(String::from("monomial ideal is not squarefree")));
        }
        let n = m.nvars();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let all: Face = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let facets = m.minimal_primes().into_iter().map(|p| all & !face_of(&p));
        Ok(Self::from_masks((1..=n).map(|i| alloc::format!("{}", i)).collect(), facets))
    }
}

/// Verdict of [`SimplicialComplex::is_cm_reisner`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub cm: bool,
    /// A face whose link has homology below its dimension.
    pub witness: Option<Vec<usize>>,
    pub impure: bool,
}

/// Witness tree for vertex decomposability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VdTree {
    Simplex(Vec<usize>),
    Shed { vertex: usize, deletion: Box<VdTree>, link: Box<VdTree> },
}

fn subsets_of_size(f: Face, k: usize, out: &mut BTreeSet<Face>) {
    let verts = face_vertices(f);
    if k > verts.len() {
        return;
    }
    for c in crate::polyalg::combinations(verts.len(), k) {
        out.insert(c.iter().fold(0, |m, &i| m | 1 << verts[i]));
    }
}

fn boundary_rank(rows_faces: &[Face], cols_faces: &[Face]) -> usize {
    if rows_faces.is_empty() || cols_faces.is_empty() {
        return 0;
    }
    let index: BTreeMap<Face, usize> = cols_faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m: Vec<Vec<BigRational>> = rows_faces
        .iter()
        .map(|&f| {
            let mut row = vec![BigRational::zero(); cols_faces.len()];
            for (k, v) in face_vertices(f).into_iter().enumerate() {
                let c = index[&(f & !(1 << v))];
                row[c] = if k % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            }
            row
        })
        .collect();
    rank(&mut m)
}

fn rank(m: &mut [Vec<BigRational>]) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = &*x - &f * y;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// `f ∩ (∪ prev)` is pure of codimension one in `f`: every `f ∩ g` lies in
/// some `f ∩ h` of size `|f| − 1`.
fn extends_shelling(prev: &[Face], f: Face) -> bool {
    let ridges: Vec<Face> = prev.iter().map(|&h| h & f).filter(|&x| size(x) + 1 == size(f)).collect();
    !ridges.is_empty() && prev.iter().all(|&g| ridges.iter().any(|&r| g & f & r == g & f))
}

fn shell_rec(facets: &[Face], order: &mut Vec<usize>, used: &mut [bool], failed: &mut BTreeSet<Vec<bool>>) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if failed.contains(used) {
        return false;
    }
    let prev: Vec<Face> = order.iter().map(|&i| facets[i]).collect();
    // candidates by descending number of codimension-one contacts
    let mut cands: Vec<(usize, usize)> = (0..facets.len())
        .filter(|&i| !used[i] && extends_shelling(&prev, facets[i]))
        .map(|i| (prev.iter().filter(|&&g| size(g & facets[i]) + 1 == size(facets[i])).count(), i))
        .collect();
    cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, i) in cands {
        order.push(i);
        used[i] = true;
        if shell_rec(facets, order, used, failed) {
            return true;
        }
        order.pop();
        used[i] = false;
    }
    failed.insert(used.to_vec());
    false
}

fn vd_rec(c: &SimplicialComplex, memo: &mut BTreeMap<Vec<Face>, Option<VdTree>>) -> Option<VdTree> {
    if c.facets.len() <= 1 {
        return Some(VdTree::Simplex(c.facets.first().map_or(Vec::new(), |&f| face_vertices(f))));
    }
    if let Some(t) = memo.get(&c.facets) {
        return t.clone();
    }
    let support = c.facets.iter().fold(0, |m, &f| m | f);
    let mut result = None;
    for v in face_vertices(support) {
        let del = c.deletion(v);
        let lk = c.link(1 << v);
        // shedding: no face of the link is a facet of the deletion
        if del.facets.iter().any(|&f| lk.contains_face(f)) {
            continue;
        }
        let Some(dt) = vd_rec(&del, memo) else { continue };
        let Some(lt) = vd_rec(&lk, memo) else { continue };
        result = Some(VdTree::Shed { vertex: v, deletion: Box::new(dt), link: Box::new(lt) });
        break;
    }
    memo.insert(c.facets.clone(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn homology_examples() {
        assert_eq!(cx(3, &[&[0, 1], &[1, 2], &[0, 2]]).reduced_homology(), vec![0, 0, 1]);
        assert_eq!(SimplicialComplex::simplex(3).unwrap().reduced_homology(), vec![0, 0, 0, 0]);
        assert_eq!(cx(2, &[&[0], &[1]]).reduced_homology(), vec![0, 1]);
        assert_eq!(cx(1, &[&[]]).reduced_homology(), vec![1]);
        assert!(cx(1, &[]).reduced_homology().is_empty());
        // octahedron boundary: a 2-sphere
        let octa = cx(6, &[&[0, 2, 4], &[0, 2, 5], &[0, 3, 4], &[0, 3, 5], &[1, 2, 4], &[1, 2, 5], &[1, 3, 4], &[1, 3, 5]]);
        assert_eq!(octa.reduced_homology(), vec![0, 0, 0, 1]);
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers() {
        let cases = [
            cx(4, &[&[0, 1, 2], &[1, 2, 3]]),
            cx(5, &[&[0, 1], &[1, 2], &[2, 0], &[3, 4]]),
            cx(4, &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]),
            cx(6, &[&[0, 1, 2], &[2, 3], &[3, 4, 5], &[1, 4]]),
        ];
        for c in cases {
            let h = c.reduced_homology();
            let alt: i64 = h.iter().enumerate().map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) }).sum();
            assert_eq!(alt, c.reduced_euler_characteristic());
        }
    }

    #[test]
    fn reisner_examples() {
        assert!(SimplicialComplex::simplex(3).unwrap().is_cm_reisner().cm);
        let two_edges = cx(4, &[&[0, 1], &[2, 3]]).is_cm_reisner();
        assert!(!two_edges.cm);
        assert_eq!(two_edges.witness, Some(Vec::new()));
        assert!(cx(3, &[&[0, 1], &[1, 2]]).is_cm_reisner().cm);
        let impure = cx(3, &[&[0, 1], &[2]]).is_cm_reisner();
        assert!(!impure.cm && impure.impure);
        // two triangles glued at a vertex: connected but the vertex link is not
        let bowtie = cx(5, &[&[0, 1, 2], &[2, 3, 4]]).is_cm_reisner();
        assert!(!bowtie.cm);
        assert_eq!(bowtie.witness, Some(vec![2]));
    }

    #[test]
    fn shelling_examples() {
        let s = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(s.find_shelling(), Some(vec![0]));
        let path = cx(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(path.check_shelling(&[0, 1]), Ok(()));
        assert!(cx(4, &[&[0, 1], &[2, 3]]).find_shelling().is_none());
        assert_eq!(cx(4, &[&[0, 1], &[2, 3]]).check_shelling(&[0, 1]), Err(1));
        // a path 01, 23, 12 is not a shelling order but 01, 12, 23 is
        let p3 = cx(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(p3.check_shelling(&[0, 2, 1]), Err(1));
        assert!(p3.find_shelling().is_some());
        // points shell in any order
        assert_eq!(cx(3, &[&[0], &[1], &[2]]).check_shelling(&[2, 0, 1]), Ok(()));
    }

    #[test]
    fn vertex_decomposability_examples() {
        assert!(SimplicialComplex::simplex(4).unwrap().is_vertex_decomposable());
        assert!(cx(3, &[&[0, 1], &[1, 2], &[0, 2]]).is_vertex_decomposable());
        assert!(!cx(4, &[&[0, 1], &[2, 3]]).is_vertex_decomposable());
        assert!(cx(4, &[&[0, 1], &[1, 2], &[2, 3]]).is_vertex_decomposable());
    }

    #[test]
    fn sr_ideal_examples() {
        let names = |n: usize| (1..=n).map(|i| alloc::format!("x{}", i)).collect::<Vec<_>>();
        let i = cx(1, &[&[]]).sr_ideal(&names(1)).unwrap();
        assert_eq!(i.show_gens(), ["x1"]);
        let i = cx(3, &[&[0, 1], &[1, 2]]).sr_ideal(&names(3)).unwrap();
        assert_eq!(i.show_gens(), ["x1*x3"]);
        assert!(SimplicialComplex::simplex(3).unwrap().sr_ideal(&names(3)).unwrap().is_zero());
        let clash = vec![String::from("x"), String::from("x")];
        assert!(matches!(cx(2, &[&[0, 1]]).sr_ideal(&clash), Err(Error::DuplicateVariable(_))));
    }

    #[test]
    fn sr_round_trip_and_dimension() {
        let cases = [
            cx(4, &[&[0, 1, 2], &[1, 2, 3]]),
            cx(5, &[&[0, 1], &[1, 2], &[2, 0], &[3, 4]]),
            cx(4, &[&[0, 1], &[2, 3]]),
            cx(3, &[&[0], &[1], &[2]]),
            cx(2, &[&[]]),
        ];
        for c in cases {
            let m = c.minimal_nonfaces();
            assert_eq!(SimplicialComplex::from_monomial_ideal(&m).unwrap(), c);
            let names: Vec<String> = (1..=c.nvertices()).map(|i| alloc::format!("v{}", i)).collect();
            let dim = c.sr_ideal(&names).unwrap().dimension().unwrap();
            assert_eq!(dim.map(|d| d as i64), c.dim().map(|d| d + 1));
        }
    }

    #[test]
    fn too_many_vertices() {
        assert!(matches!(SimplicialComplex::new(26, [vec![0]]), Err(Error::TooManyVertices(26))));
    }
}

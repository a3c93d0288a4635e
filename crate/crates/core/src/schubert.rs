//! Type A Schubert patches and their degenerations.
//!
//! The patch of `X_w = closure(B₋ w B)/B` at the fixed point `v` is cut out
//! of the chart `v N₋` by rank conditions on `M = P_v·U`, where `U` is lower
//! unitriangular with entries `z_ab` (`a > b`) and `(P_v)_{v(b), b} = 1`. The
//! conditions are `rank M[rows ≤ i, cols ≤ j] ≤ #{b ≤ j : w(b) ≤ i}`.
//!
//! The torus scales `z_ab` by the character `e_{v(a)} − e_{v(b)}`, which is
//! the declared weight of the variable.
//!
//! A GVD step along a simple root `α = α_i` with `v r_α < v` uses adapted
//! coordinates: `U = U₀·x₋α(ℓ)` (right-adapted) or `U = x₋α(ℓ)·U₀`
//! (left-adapted), with `U₀` vanishing at `(i+1, i)` and `ℓ` the variable
//! at that position. Charts at `v` and `v r_α` are matched by
//! `U₀[a][b] ↔ U₀'[r(a)][r(b)]` for the transposition `r = (i, i+1)`, which
//! preserves declared weights, and by `ℓ ↔ ℓ'`, whose weights are `∓v·α`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bruhat::bruhat_leq;
use crate::gvd::{gvd_split, rll_certificate, GvdReport, RllCertificate};
use crate::polyalg::{combinations, determinant, multidegree, Ideal, MonomialIdeal, Poly, Ring, TermOrder};
use crate::roots::{Root, RootSystem, WeylElement, Word};
use crate::subword::{billey_roots, step_case, subword_complex, StepCase};
use crate::{Error, Result};

/// How the unipotent factor of the chart is parametrized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinates {
    Standard,
    /// `U = U₀·x₋α(ℓ)` for the simple index `i` (0-based).
    RightAdapted(usize),
    /// `U = x₋α(ℓ)·U₀`.
    LeftAdapted(usize),
}

/// The chart `v N₋ B/B` with coordinates `z_ab`, `a > b`.
#[derive(Debug, Clone)]
pub struct PatchChart {
    n: usize,
    v: WeylElement,
    perm: Vec<usize>,
    ring: Ring,
    /// `(a, b)` 0-based, in ring order
    vars: Vec<(usize, usize)>,
    weights: Vec<Root>,
}

fn require_type_a(rs: &RootSystem) -> Result<()> {
    if !rs.is_type_a() {
        return Err(Error::Precondition(String::from("Schubert patches are implemented in type A only")));
    }
    Ok(())
}

/// `e_p − e_q` (0-based) in simple-root coordinates of `A_{n−1}`.
fn e_diff(n: usize, p: usize, q: usize) -> Root {
    let mut c = vec![0i64; n - 1];
    let (lo, hi, s) = if p < q { (p, q, 1) } else { (q, p, -1) };
    for x in &mut c[lo..hi] {
        *x = s;
    }
    Root(c)
}

fn var_name(n: usize, a: usize, b: usize) -> String {
    if n <= 9 {
        alloc::format!("z{}{}", a + 1, b + 1)
    } else {
        alloc::format!("z{}_{}", a + 1, b + 1)
    }
}

impl PatchChart {
    pub fn new(rs: &RootSystem, v: &WeylElement) -> Result<Self> {
        require_type_a(rs)?;
        let n = rs.rank() + 1;
        let perm: Vec<usize> = v.to_permutation().iter().map(|x| x - 1).collect();
        let vars: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..a).map(move |b| (a, b))).collect();
        let ring = Ring::new(vars.iter().map(|&(a, b)| var_name(n, a, b)))?;
        let weights = vars.iter().map(|&(a, b)| e_diff(n, perm[a], perm[b])).collect();
        Ok(PatchChart { n, v: v.clone(), perm, ring, vars, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn v(&self) -> &WeylElement {
        &self.v
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Declared weights, one per variable.
    pub fn weights(&self) -> &[Root] {
        &self.weights
    }

    pub fn weight_vectors(&self) -> Vec<Vec<i64>> {
        self.weights.iter().map(|r| r.0.clone()).collect()
    }

    /// Index of `z_ab` (0-based `a > b`).
    pub fn var_index(&self, a: usize, b: usize) -> usize {
        a * (a - 1) / 2 + b
    }

    fn unipotent(&self, coords: Coordinates) -> Vec<Vec<Poly>> {
        let (n, nv) = (self.n, self.nvars());
        let mut u = vec![vec![Poly::zero(nv); n]; n];
        for (a, row) in u.iter_mut().enumerate() {
            row[a] = Poly::one(nv);
            for (b, x) in row.iter_mut().enumerate().take(a) {
                *x = Poly::var(nv, self.var_index(a, b));
            }
        }
        match coords {
            Coordinates::Standard => u,
            Coordinates::RightAdapted(i) => {
                // U₀·x₋α(ℓ): column i gains ℓ times column i+1
                let l = u[i + 1][i].clone();
                u[i + 1][i] = Poly::zero(nv);
                for row in u.iter_mut() {
                    let add = &row[i + 1] * &l;
                    row[i] = &row[i] + &add;
                }
                u
            }
            Coordinates::LeftAdapted(i) => {
                // x₋α(ℓ)·U₀: row i+1 gains ℓ times row i
                let l = u[i + 1][i].clone();
                u[i + 1][i] = Poly::zero(nv);
                let row_i = u[i].clone();
                for (x, y) in u[i + 1].iter_mut().zip(&row_i) {
                    *x = &*x + &(y * &l);
                }
                u
            }
        }
    }

    /// `M = P_v·U`.
    pub fn matrix(&self, coords: Coordinates) -> Vec<Vec<Poly>> {
        let u = self.unipotent(coords);
        let mut m = vec![Vec::new(); self.n];
        for (b, row) in u.into_iter().enumerate() {
            m[self.perm[b]] = row;
        }
        m
    }

    /// Patch ideal of `X_w` in this chart.
    pub fn ideal(&self, w: &WeylElement, coords: Coordinates) -> Result<Ideal> {
        if let Coordinates::RightAdapted(i) | Coordinates::LeftAdapted(i) = coords {
            if i + 1 >= self.n {
                return Err(Error::IndexOutOfRange { index: i, rank: self.n - 1 });
            }
        }
        if w.rank() != self.v.rank() {
            return Err(Error::RankMismatch { expected: self.v.rank(), found: w.rank() });
        }
        let wp: Vec<usize> = w.to_permutation().iter().map(|x| x - 1).collect();
        let m = self.matrix(coords);
        let nv = self.nvars();
        let mut gens = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                let r = (0..j).filter(|&b| wp[b] < i).count();
                if r >= i.min(j) {
                    continue;
                }
                for rows in combinations(i, r + 1) {
                    for cols in combinations(j, r + 1) {
                        let sub: Vec<Vec<Poly>> =
                            rows.iter().map(|&a| cols.iter().map(|&b| m[a][b].clone()).collect()).collect();
                        gens.push(determinant(&sub, nv));
                    }
                }
            }
        }
        Ideal::new(self.ring.clone(), gens)?.reduced(&TermOrder::GrevLex)
    }

    /// Multidegree of an ideal of this chart under the declared weights.
    pub fn multidegree(&self, ideal: &Ideal) -> Result<Poly> {
        multidegree(ideal, &TermOrder::GrevLex, &self.weight_vectors())
    }
}

/// `kl_patch_ideal(w, v)` in standard coordinates.
pub fn kl_patch_ideal(rs: &RootSystem, w: &WeylElement, v: &WeylElement) -> Result<(PatchChart, Ideal)> {
    let chart = PatchChart::new(rs, v)?;
    let ideal = chart.ideal(w, Coordinates::Standard)?;
    Ok((chart, ideal))
}

/// Variable map from the chart at `v r_α` into the chart at `v`:
/// `map[k']` is the index at `v` of variable `k'` at `v r_α`.
fn chart_bijection(at_v: &PatchChart, at_vr: &PatchChart, i: usize) -> Result<Vec<usize>> {
    let r = |a: usize| if a == i { i + 1 } else if a == i + 1 { i } else { a };
    let mut map = vec![0; at_vr.nvars()];
    for (k, &(a, b)) in at_vr.vars.iter().enumerate() {
        let target = if (a, b) == (i + 1, i) { (a, b) } else { (r(a), r(b)) };
        let t = at_v.var_index(target.0, target.1);
        if (a, b) != (i + 1, i) && at_vr.weights[k] != at_v.weights[t] {
            return Err(Error::Invariant(String::from("chart bijection does not preserve weights")));
        }
        map[k] = t;
    }
    Ok(map)
}

/// Report of one GVD step on a patch ideal.
#[derive(Debug, Clone)]
pub struct StepReport {
    pub w: WeylElement,
    pub v: WeylElement,
    /// Simple index (0-based).
    pub alpha: usize,
    pub case: StepCase,
    /// The line variable `ℓ`, of declared weight `−v·α`.
    pub y: String,
    pub y_weight: Root,
    /// `w ≰ v`: the patch is empty and nothing is checked.
    pub empty: bool,
    pub split: Option<GvdReport>,
    /// Case A: the patch ideal avoids `ℓ` and matches the chart at `v r_α`.
    pub bundle_matches: Option<bool>,
    /// Cases B, C: `P` matches `X_{w r_α}` at `v r_α`, plus `⟨ℓ⟩`.
    pub p_matches: Option<bool>,
    /// Case C: `C` matches `X_w` at `v r_α`; case B: `C = ⟨1⟩`.
    pub c_matches: Option<bool>,
}

impl StepReport {
    pub fn verified(&self) -> bool {
        if self.empty {
            return true;
        }
        let decomposition = self.split.as_ref().is_none_or(|s| s.decomposition_holds);
        decomposition && [self.bundle_matches, self.p_matches, self.c_matches].iter().all(|m| m.unwrap_or(true))
    }
}

fn mismatch(what: &str, expected: &Ideal, found: &Ideal) -> Result<Error> {
    let gb = |i: &Ideal| -> Result<String> {
        let g = i.groebner(&TermOrder::GrevLex)?;
        Ok(g.iter().map(|p| i.ring().show(p)).collect::<Vec<_>>().join("; "))
    };
    Ok(Error::MatchFailure { what: String::from(what), expected: gb(expected)?, found: gb(found)? })
}

/// One geometric vertex decomposition step of `X_w|_v` along `α_i`, with
/// the components matched against patch ideals at `v r_α`. A failed match
/// is an error carrying both reduced bases.
pub fn gvd_step_schubert(rs: &RootSystem, w: &WeylElement, v: &WeylElement, i: usize) -> Result<StepReport> {
    require_type_a(rs)?;
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange { index: i, rank: rs.rank() });
    }
    if !v.has_right_descent(i) {
        return Err(Error::Precondition(alloc::format!("v r_{} > v", i + 1)));
    }
    let at_v = PatchChart::new(rs, v)?;
    let vr = v.right_mul_simple(i);
    let at_vr = PatchChart::new(rs, &vr)?;
    let y = at_v.var_index(i + 1, i);
    let case = step_case(w, v, i)?;
    let mut report = StepReport {
        w: w.clone(),
        v: v.clone(),
        alpha: i,
        case,
        y: at_v.ring.names()[y].clone(),
        y_weight: at_v.weights[y].clone(),
        empty: !bruhat_leq(w, v)?,
        split: None,
        bundle_matches: None,
        p_matches: None,
        c_matches: None,
    };
    if report.y_weight != v.image_of_simple(i).neg() {
        return Err(Error::Invariant(String::from("line variable weight differs from -v·α")));
    }
    if report.empty {
        return Ok(report);
    }
    let map = chart_bijection(&at_v, &at_vr, i)?;
    let ring = at_v.ring.clone();
    let pull = |ideal: &Ideal| ideal.remap(&map, &ring);
    let ideal = at_v.ideal(w, Coordinates::RightAdapted(i))?;
    match case {
        StepCase::A => {
            let other = pull(&at_vr.ideal(w, Coordinates::RightAdapted(i))?)?;
            let y_free = ideal.gens().iter().all(|g| !g.involves(y));
            if !y_free || !ideal.equals(&other)? {
                return Err(mismatch("fiber-bundle patch at v r_α", &other, &ideal)?);
            }
            report.bundle_matches = Some(true);
        }
        StepCase::B | StepCase::C => {
            let split = gvd_split(&ideal, y)?;
            let wr = w.right_mul_simple(i);
            let p_expected = pull(&at_vr.ideal(&wr, Coordinates::RightAdapted(i))?)?.with([Poly::var(ring.nvars(), y)])?;
            if !split.p.equals(&p_expected)? {
                return Err(mismatch("P versus X_{w r_α} at v r_α", &p_expected, &split.p)?);
            }
            report.p_matches = Some(true);
            let c_expected = if case == StepCase::C {
                pull(&at_vr.ideal(w, Coordinates::LeftAdapted(i))?)?
            } else {
                Ideal::unit(ring.clone())
            };
            if !split.c.equals(&c_expected)? {
                return Err(mismatch("C versus X_w at v r_α", &c_expected, &split.c)?);
            }
            report.c_matches = Some(true);
            if !split.decomposition_holds {
                return Err(mismatch("I' versus C ∩ P", &split.c.intersection(&split.p)?, &split.i_prime)?);
            }
            report.split = Some(split);
        }
    }
    Ok(report)
}

/// One visited node of a degeneration chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    pub w: WeylElement,
    /// Length of the prefix of `Q` whose product is `v`.
    pub prefix: usize,
    pub v: WeylElement,
    pub case: Option<StepCase>,
    /// The step report when patch steps are verified.
    pub step: Option<StepReport>,
    /// Limit of `X_w|_v` along the prefix, in the position variables.
    pub limit: MonomialIdeal,
    pub certificate: Option<RllCertificate>,
}

/// Result of [`degeneration_chain`].
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub q: Word,
    pub w: WeylElement,
    pub v: WeylElement,
    /// Variables `x1..xm`, one per position of `Q`, `x_j` of weight `β_j`.
    pub ring: Ring,
    pub limit: Ideal,
    pub sr_ideal: Ideal,
    pub matches: bool,
    pub certificates_ok: bool,
    pub steps: Vec<ChainStep>,
}

/// Unrolls the degeneration of `X_w|_v`, `v` the product of the reduced
/// word `Q`, along the letters of `Q` from last to first. Each node is
/// certified once its limit is monomial; with `verify_steps` every GVD step
/// is also checked on the patch ideals (type A only).
pub fn degeneration_chain(rs: &RootSystem, w: &WeylElement, q: &Word, verify_steps: bool) -> Result<ChainReport> {
    let eval = rs.word_eval(q)?;
    if !eval.is_reduced {
        return Err(Error::NotReduced(alloc::format!("{}", q)));
    }
    let v = eval.element;
    if !bruhat_leq(w, &v)? {
        return Err(Error::Precondition(String::from("w is not below the product of Q")));
    }
    if verify_steps {
        require_type_a(rs)?;
    }
    let m = q.len();
    let ring = Ring::new((1..=m).map(|j| alloc::format!("x{}", j)))?;
    let prefixes: Vec<WeylElement> = (0..=m).map(|k| rs.element(&Word(q.letters()[..k].to_vec()))).collect::<Result<_>>()?;
    let beta = billey_roots(rs, q)?;
    let mut memo: BTreeMap<(WeylElement, usize), usize> = BTreeMap::new();
    let mut steps = Vec::new();
    let top = chain_rec(rs, w, m, q, &prefixes, &beta, &ring, verify_steps, &mut memo, &mut steps)?;
    let limit_m = steps[top].limit.clone();
    let limit = Ideal::from_monomial(ring.clone(), &limit_m);
    let sr = subword_complex(rs, q, w)?.complex.minimal_nonfaces();
    let sr_ideal = Ideal::from_monomial(ring.clone(), &sr);
    let matches = limit_m == sr;
    let certificates_ok = steps.iter().all(|s| s.certificate.as_ref().is_none_or(|c| c.verdict.is_certified()));
    Ok(ChainReport { q: q.clone(), w: w.clone(), v, ring, limit, sr_ideal, matches, certificates_ok, steps })
}

#[allow(clippy::too_many_arguments)]
fn chain_rec(
    rs: &RootSystem,
    w: &WeylElement,
    k: usize,
    q: &Word,
    prefixes: &[WeylElement],
    beta: &[Root],
    ring: &Ring,
    verify: bool,
    memo: &mut BTreeMap<(WeylElement, usize), usize>,
    steps: &mut Vec<ChainStep>,
) -> Result<usize> {
    if let Some(&idx) = memo.get(&(w.clone(), k)) {
        return Ok(idx);
    }
    let m = q.len();
    let v = &prefixes[k];
    let var = |j: usize| MonomialIdeal::from_supports(m, [vec![j]]);
    let (case, step, limit) = if !bruhat_leq(w, v)? {
        (None, None, MonomialIdeal::unit(m))
    } else if k == 0 {
        (None, None, MonomialIdeal::zero(m))
    } else {
        let i = q.letters()[k - 1];
        let case = step_case(w, v, i)?;
        let step = if verify { Some(gvd_step_schubert(rs, w, v, i)?) } else { None };
        if v.image_of_simple(i).neg() != beta[k - 1] {
            return Err(Error::Invariant(String::from("line weight differs from the Billey root")));
        }
        let wr = w.right_mul_simple(i);
        let mut sub = |x: &WeylElement| -> Result<MonomialIdeal> {
            let idx = chain_rec(rs, x, k - 1, q, prefixes, beta, ring, verify, memo, steps)?;
            Ok(steps[idx].limit.clone())
        };
        let limit = match case {
            StepCase::A => sub(w)?,
            StepCase::B => sub(&wr)?.sum(&var(k - 1)),
            StepCase::C => {
                let a = sub(w)?;
                let b = sub(&wr)?.sum(&var(k - 1));
                a.intersection(&b)
            }
        };
        (Some(case), step, limit)
    };
    let certificate =
        if limit.is_unit() { None } else { Some(rll_certificate(&Ideal::from_monomial(ring.clone(), &limit))?) };
    steps.push(ChainStep { w: w.clone(), prefix: k, v: v.clone(), case, step, limit, certificate });
    let idx = steps.len() - 1;
    memo.insert((w.clone(), k), idx);
    Ok(idx)
}

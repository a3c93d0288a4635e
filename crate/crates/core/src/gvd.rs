//! Geometric vertex decompositions of ideals.
//!
//! For a variable `y`, write each element of the reduced Gröbner basis of
//! `I` under a y-dominant order as `y^{d} q + r` with `r` of lower y-degree.
//! Then `I′ = ⟨y^{d_i} q_i⟩` cuts out the limit of the family that scales
//! `y` to zero, `C = ⟨q_i⟩` the cone component and `P = I′ + ⟨y⟩` the
//! special fiber. The decomposition holds when `I′ = C ∩ P`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::polyalg::{Ideal, MonomialIdeal, Poly, TermOrder};
use crate::simplicial::{face_of, face_vertices, SimplicialComplex, MAX_VERTICES};
use crate::{Error, Result};

fn check_var(ideal: &Ideal, y: usize) -> Result<()> {
    if y >= ideal.nvars() {
        return Err(Error::IndexOutOfRange { index: y, rank: ideal.nvars() });
    }
    Ok(())
}

fn top_y_form(f: &Poly, y: usize) -> Poly {
    let parts = f.split_by(y);
    let (&d, q) = parts.iter().next_back().unwrap();
    let mut e = alloc::vec![0; f.nvars()];
    e[y] = d;
    q.mul_monomial(&e)
}

/// The ideal of top y-degree parts of the y-dominant reduced Gröbner basis.
pub fn initial_y_ideal(ideal: &Ideal, y: usize) -> Result<Ideal> {
    check_var(ideal, y)?;
    let gb = ideal.groebner(&TermOrder::y_dominant(y))?;
    Ideal::new(ideal.ring().clone(), gb.iter().map(|g| top_y_form(g, y)))
}

/// Outcome of [`gvd_split`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvdReport {
    pub y: usize,
    pub i_prime: Ideal,
    /// y-free generators, in the same ring.
    pub c: Ideal,
    pub p: Ideal,
    pub decomposition_holds: bool,
    pub containment_holds: bool,
    /// `C` is the unit ideal: the cone component is empty.
    pub lambda_empty: bool,
    pub notes: Vec<String>,
}

pub fn gvd_split(ideal: &Ideal, y: usize) -> Result<GvdReport> {
    let i_prime = initial_y_ideal(ideal, y)?.reduced(&TermOrder::GrevLex)?;
    let yv = Poly::var(ideal.nvars(), y);
    let c = i_prime.saturation(&yv)?.eliminate(&[y])?;
    let p = i_prime.with([yv])?.reduced(&TermOrder::GrevLex)?;
    let cap = c.intersection(&p)?;
    let containment_holds = cap.contains_ideal(&i_prime)?;
    let decomposition_holds = containment_holds && i_prime.contains_ideal(&cap)?;
    let lambda_empty = c.is_unit()?;
    let mut notes = Vec::new();
    if lambda_empty {
        notes.push(String::from("C is the unit ideal: the cone component is empty"));
    }
    if !decomposition_holds {
        notes.push(String::from("I' differs from C ∩ P: the limit is not the reduced union"));
    }
    notes.push(String::from("set-level (radical) comparison: not checked"));
    Ok(GvdReport { y, i_prime, c, p, decomposition_holds, containment_holds, lambda_empty, notes })
}

/// The family over the `z`-line: homogenize each y-dominant Gröbner basis
/// element `Σ y^e c_e` of y-degree `d` to `Σ z^{d−e} y^e c_e`, then
/// saturate by `z`. The ring gains `z` as its last variable.
pub fn family_ideal(ideal: &Ideal, y: usize, z: &str) -> Result<Ideal> {
    check_var(ideal, y)?;
    let n = ideal.nvars();
    let ring = ideal.ring().extend([z])?;
    let map: Vec<usize> = (0..n).collect();
    let gb = ideal.groebner(&TermOrder::y_dominant(y))?;
    let mut gens = Vec::new();
    for g in &gb {
        let parts = g.split_by(y);
        let d = *parts.keys().next_back().unwrap();
        let mut h = Poly::zero(n + 1);
        for (&e, c) in &parts {
            let mut m = alloc::vec![0; n + 1];
            m[y] = e;
            m[n] = d - e;
            h = &h + &c.remap(&map, n + 1).mul_monomial(&m);
        }
        gens.push(h);
    }
    Ideal::new(ring, gens)?.saturation(&Poly::var(n + 1, n))
}

/// The fiber of a family (last variable `z`) at `z = value`, in the ring
/// without `z`.
pub fn family_fiber(family: &Ideal, value: i64) -> Result<Ideal> {
    let n = family.nvars() - 1;
    let fiber = family.substitute(n, &Poly::constant(n + 1, crate::polyalg::rational(value)))?;
    let keep: Vec<usize> = (0..n).collect();
    fiber.restrict(&keep)
}

/// Outcome of [`gluing_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingReport {
    /// `I_X = I_A ∩ I_B`.
    pub holds: bool,
    /// `I_A + I_B`, the ideal of the gluing locus.
    pub glue: Ideal,
}

pub fn gluing_check(a: &Ideal, b: &Ideal, x: &Ideal) -> Result<GluingReport> {
    let holds = a.intersection(b)?.equals(x)?;
    Ok(GluingReport { holds, glue: a.sum(b)?.reduced(&TermOrder::GrevLex)? })
}

/// Verdict of a limit certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    HypothesisFailed { hypothesis: &'static str, witness: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

/// Certificate that a monomial limit is reduced: generically reduced,
/// pure, and its components admit a shelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RllCertificate {
    /// Minimal primes, as variable index sets, in shelling-candidate order.
    pub components: Vec<Vec<usize>>,
    /// Indices into `components`.
    pub shelling_order: Option<Vec<usize>>,
    pub generically_reduced: bool,
    /// Each step of the shelling glues along a reduced intersection.
    pub gluing_reduced: bool,
    pub verdict: Verdict,
}

fn monomial_ideal_of(ideal: &Ideal) -> Result<MonomialIdeal> {
    if ideal.gens().iter().any(|g| !g.is_monomial()) {
        return Err(Error::NotMonomial);
    }
    Ok(MonomialIdeal::new(ideal.nvars(), ideal.gens().iter().map(|g| g.terms().next().unwrap().0.clone())))
}

pub fn rll_certificate(ideal: &Ideal) -> Result<RllCertificate> {
    let m = monomial_ideal_of(ideal)?;
    let n = m.nvars();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let names = ideal.ring().names();
    let failed = |components, generically_reduced, hypothesis, witness| RllCertificate {
        components,
        shelling_order: None,
        generically_reduced,
        gluing_reduced: false,
        verdict: Verdict::HypothesisFailed { hypothesis, witness },
    };
    if m.is_unit() {
        return Ok(failed(Vec::new(), false, "nonempty limit", String::from("the limit ideal is the unit ideal")));
    }
    let complex = SimplicialComplex::from_monomial_ideal(&m.radical())?;
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let components: Vec<Vec<usize>> = complex.facet_masks().iter().map(|&f| face_vertices(all & !f)).collect();

    // localize at ⟨x_s : s ∈ S⟩: every x_s must appear as a generator
    for comp in &components {
        let mask = face_of(comp);
        for &s in comp {
            let hit = m.gens().iter().any(|g| {
                let local: Vec<u32> = (0..n).map(|v| if mask >> v & 1 == 1 { g[v] } else { 0 }).collect();
                local.iter().enumerate().all(|(v, &x)| x == u32::from(v == s))
            });
            if !hit {
                let w = alloc::format!("component {} is not reduced along {}", show_prime(comp, names), names[s]);
                return Ok(failed(components.clone(), false, "generically reduced", w));
            }
        }
    }
    if !complex.is_pure() {
        let dims: Vec<usize> = components.iter().map(|c| n - c.len()).collect();
        let w = alloc::format!("components of dimensions {:?}: {}", dims, show_primes(&components, names));
        return Ok(failed(components, true, "equidimensional", w));
    }
    let Some(order) = complex.find_shelling() else {
        let w = alloc::format!("no shelling of the components {}", show_primes(&components, names));
        return Ok(failed(components, true, "shelling", w));
    };
    // along the shelling, each new component meets the union so far in a
    // reduced (squarefree) scheme
    let prime = |p: &Vec<usize>| MonomialIdeal::from_supports(n, p.iter().map(|&v| alloc::vec![v]));
    let mut union = prime(&components[order[0]]);
    let mut gluing_reduced = true;
    for &k in &order[1..] {
        let next = prime(&components[k]);
        if !union.sum(&next).is_squarefree() {
            gluing_reduced = false;
        }
        union = union.intersection(&next);
    }
    let verdict = if gluing_reduced && union == m {
        Verdict::Certified
    } else {
        let w = String::from("the limit ideal has an embedded or non-reduced part");
        Verdict::HypothesisFailed { hypothesis: "reduced", witness: w }
    };
    Ok(RllCertificate { components, shelling_order: Some(order), generically_reduced: true, gluing_reduced, verdict })
}

fn show_prime(p: &[usize], names: &[String]) -> String {
    let vars: Vec<&str> = p.iter().map(|&v| names[v].as_str()).collect();
    alloc::format!("<{}>", vars.join(","))
}

fn show_primes(ps: &[Vec<usize>], names: &[String]) -> String {
    ps.iter().map(|p| show_prime(p, names)).collect::<Vec<_>>().join(" ")
}

/// Outcome of [`normality_probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport {
    pub dim: Option<usize>,
    pub singular_ideal: Ideal,
    pub singular_dim: Option<usize>,
    /// `dim X − dim Sing`, `None` when the singular locus is empty.
    pub singular_codim: Option<usize>,
    pub r1: bool,
    pub complete_intersection: bool,
    /// Normal (R1 + S2 from the complete intersection); `None` when S2 is
    /// not available.
    pub normal: Option<bool>,
    /// The singular-locus basis avoids `y`.
    pub singular_y_free: Option<bool>,
}

/// Serre-criterion probe. `complete_intersection` forces the CI flag; it is
/// also set when the number of generators equals the codimension.
pub fn normality_probe(ideal: &Ideal, y: Option<usize>, complete_intersection: bool) -> Result<NormalityReport> {
    if let Some(y) = y {
        check_var(ideal, y)?;
    }
    let dim = ideal.dimension()?;
    let codim = dim.map(|d| ideal.nvars() - d);
    let ci = complete_intersection || codim == Some(ideal.gens().len());
    let singular_ideal = ideal.jacobian_singular_ideal(codim)?.reduced(&TermOrder::GrevLex)?;
    let singular_dim = singular_ideal.dimension()?;
    let singular_codim = match (dim, singular_dim) {
        (Some(d), Some(s)) => Some(d - s),
        _ => None,
    };
    let r1 = singular_codim.is_none_or(|c| c >= 2);
    let normal = ci.then_some(r1);
    let singular_y_free = y.map(|y| singular_ideal.gens().iter().all(|g| !g.involves(y)));
    Ok(NormalityReport { dim, singular_ideal, singular_dim, singular_codim, r1, complete_intersection: ci, normal, singular_y_free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_ideal, Ring};

    fn ideal(ring: &str, gens: &str) -> Ideal {
        parse_ideal(gens, &Ring::parse(ring).unwrap()).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        a.equals(b).unwrap()
    }

    #[test]
    fn initial_y_examples() {
        let i = ideal("x,y", "y^2 - x");
        assert!(same(&initial_y_ideal(&i, 1).unwrap(), &ideal("x,y", "y^2")));
        let f = ideal("x,y,z", "x^2 - z");
        assert!(same(&initial_y_ideal(&f, 1).unwrap(), &f));
        let g = ideal("x,y,z", "y*(x^2 - z^2) - z^2");
        assert!(same(&initial_y_ideal(&g, 1).unwrap(), &ideal("x,y,z", "y*(x^2 - z^2)")));
    }

    #[test]
    fn split_of_the_worked_example() {
        let i = ideal("x,y,l", "l*(x^2 - y^2) - y^2");
        let r = gvd_split(&i, 2).unwrap();
        assert!(same(&r.i_prime, &ideal("x,y,l", "l*(x^2 - y^2)")));
        assert!(same(&r.c, &ideal("x,y,l", "x^2 - y^2")));
        assert!(same(&r.p, &ideal("x,y,l", "l")));
        assert!(r.decomposition_holds && r.containment_holds && !r.lambda_empty);
    }

    #[test]
    fn split_of_y_free_and_parabola() {
        let i = ideal("x,y,z", "x*z - 1");
        let r = gvd_split(&i, 1).unwrap();
        assert!(same(&r.i_prime, &i) && same(&r.c, &i));
        assert!(same(&r.p, &ideal("x,y,z", "x*z - 1; y")));
        assert!(r.decomposition_holds);

        let r = gvd_split(&ideal("x,y", "y^2 - x"), 1).unwrap();
        assert!(r.lambda_empty && r.containment_holds && !r.decomposition_holds);
        assert!(same(&r.p, &ideal("x,y", "y")));
    }

    #[test]
    fn family_examples() {
        let i = ideal("x,y", "y^2 - x");
        let f = family_ideal(&i, 1, "z").unwrap();
        assert!(same(&f, &ideal("x,y,z", "y^2 - z^2*x")));
        assert!(same(&family_fiber(&f, 0).unwrap(), &ideal("x,y", "y^2")));
        assert!(same(&family_fiber(&f, 1).unwrap(), &i));
        let e = ideal("x,y,l", "l*(x^2 - y^2) - y^2");
        let f = family_ideal(&e, 2, "z").unwrap();
        assert!(same(&f, &ideal("x,y,l,z", "l*(x^2 - y^2) - z*y^2")));
        let free = ideal("x,y", "x^3 - 2");
        let f = family_ideal(&free, 1, "z").unwrap();
        assert!(same(&f, &ideal("x,y,z", "x^3 - 2")));
        assert!(matches!(family_ideal(&free, 1, "x"), Err(Error::DuplicateVariable(_))));
    }

    #[test]
    fn gluing_examples() {
        let (a, b) = (ideal("x,y", "x"), ideal("x,y", "y"));
        let r = gluing_check(&a, &b, &ideal("x,y", "x*y")).unwrap();
        assert!(r.holds && same(&r.glue, &ideal("x,y", "x; y")));
        assert!(!gluing_check(&a, &b, &ideal("x,y", "x^2*y")).unwrap().holds);
        let r = gluing_check(&ideal("x,y,l", "l"), &ideal("x,y,l", "x^2 - y^2"), &ideal("x,y,l", "l*(x^2 - y^2)")).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn certificate_examples() {
        let c = rll_certificate(&ideal("x,y", "x*y")).unwrap();
        assert!(c.verdict.is_certified());
        assert_eq!(c.components, [[1], [0]]);
        let c = rll_certificate(&ideal("x,y", "x^2")).unwrap();
        assert!(!c.generically_reduced);
        assert!(matches!(c.verdict, Verdict::HypothesisFailed { hypothesis: "generically reduced", .. }));
        let c = rll_certificate(&ideal("x,y,z", "x*z; y*z")).unwrap();
        assert!(matches!(c.verdict, Verdict::HypothesisFailed { hypothesis: "equidimensional", .. }));
        // two planes meeting at a point: pure but not shellable
        let c = rll_certificate(&ideal("a,b,c,d", "a*c; a*d; b*c; b*d")).unwrap();
        assert!(matches!(c.verdict, Verdict::HypothesisFailed { hypothesis: "shelling", .. }));
        // embedded component: generically reduced and shellable, but not reduced
        let c = rll_certificate(&ideal("x,y", "x^2; x*y")).unwrap();
        assert!(c.generically_reduced && !c.verdict.is_certified());
        assert!(rll_certificate(&ideal("x,y", "1")).map(|c| !c.verdict.is_certified()).unwrap());
        assert!(matches!(rll_certificate(&ideal("x,y", "x - y")), Err(Error::NotMonomial)));
    }

    #[test]
    fn normality_examples() {
        let r = normality_probe(&ideal("x,y,l", "l*(x^2 - y^2) - y^2"), Some(2), false).unwrap();
        assert_eq!(r.dim, Some(2));
        assert_eq!(r.singular_codim, Some(1));
        assert_eq!(r.normal, Some(false));
        let line = ideal("x,y,l", "x; y");
        assert!(r.singular_ideal.contains_ideal(&line.product(&line).unwrap()).unwrap());
        let cone = normality_probe(&ideal("x,y,z", "x^2 + y^2 + z^2"), None, false).unwrap();
        assert_eq!((cone.singular_codim, cone.normal), (Some(2), Some(true)));
        let plane = normality_probe(&ideal("x,y", "x"), None, false).unwrap();
        assert_eq!((plane.singular_codim, plane.normal), (None, Some(true)));
        let not_ci = normality_probe(&ideal("x,y,z", "x*y; x*z; y*z"), None, false).unwrap();
        assert_eq!(not_ci.normal, None);
    }
}

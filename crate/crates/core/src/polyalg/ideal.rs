use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::groebner::{normal_form, reduced_groebner};
use super::monomial::MonomialIdeal;
use super::order::TermOrder;
use super::poly::{combinations, determinant, divides, Exponent, Poly};
use super::Ring;
use crate::{Error, Result};

/// An ideal in a polynomial ring over ℚ, held by its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Poly>) -> Result<Self> {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.iter().any(|g| g.nvars() != ring.nvars()) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring, gens })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> Self {
        let n = ring.nvars();
        Ideal { ring, gens: vec![Poly::one(n)] }
    }

    /// Ideal generated by some of the variables.
    pub fn of_vars(ring: Ring, vars: &[usize]) -> Self {
        let n = ring.nvars();
        Ideal { ring, gens: vars.iter().map(|&v| Poly::var(n, v)).collect() }
    }

    pub fn from_monomial(ring: Ring, m: &MonomialIdeal) -> Self {
        let n = ring.nvars();
        Ideal { ring, gens: m.gens().iter().map(|e| Poly::monomial(n, e.clone(), super::rational(1))).collect() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn groebner(&self, order: &TermOrder) -> Result<Vec<Poly>> {
        reduced_groebner(&self.gens, self.nvars(), order)
    }

    /// The ideal generated by its reduced Gröbner basis under `order`.
    pub fn reduced(&self, order: &TermOrder) -> Result<Ideal> {
        Ok(Ideal { ring: self.ring.clone(), gens: self.groebner(order)? })
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner(&TermOrder::GrevLex)?;
        Ok(gb.len() == 1 && gb[0].is_constant())
    }

    pub fn normal_form(&self, p: &Poly, order: &TermOrder) -> Result<Poly> {
        Ok(normal_form(p, &self.groebner(order)?, order))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        let order = TermOrder::GrevLex;
        Ok(normal_form(p, &self.groebner(&order)?, &order).is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let order = TermOrder::GrevLex;
        let gb = self.groebner(&order)?;
        Ok(other.gens.iter().all(|g| normal_form(g, &gb, &order).is_zero()))
    }

    /// Equality as ideals: identical reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let order = TermOrder::GrevLex;
        Ok(self.groebner(&order)? == other.groebner(&order)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        Ideal::new(self.ring.clone(), self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.gens.iter().cloned().chain(extra))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// Same generators in a larger ring whose first variables are this ring's.
    pub fn extend_to(&self, ring: &Ring) -> Result<Ideal> {
        let n = self.nvars();
        if ring.nvars() < n || ring.names()[..n] != *self.ring.names() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = (0..n).collect();
        Ideal::new(ring.clone(), self.gens.iter().map(|g| g.remap(&map, ring.nvars())))
    }

    /// Renames variables through `map` (old index → new index) into `ring`.
    pub fn remap(&self, map: &[usize], ring: &Ring) -> Result<Ideal> {
        Ideal::new(ring.clone(), self.gens.iter().map(|g| g.remap(map, ring.nvars())))
    }

    /// `I ∩ J` via `t·I + (1−t)·J`, eliminating `t`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.ring.clone()));
        }
        let n = self.nvars();
        let big = self.ring.extend([self.ring.fresh_name("t")])?;
        let map: Vec<usize> = (0..n).collect();
        let t = Poly::var(n + 1, n);
        let one_minus_t = &Poly::one(n + 1) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&t * &g.remap(&map, n + 1));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.remap(&map, n + 1));
        }
        let elim = Ideal::new(big, gens)?.eliminate(&[n])?;
        Ideal::new(self.ring.clone(), elim.gens.iter().map(|g| g.drop_vars(&map)))
    }

    /// `I : ⟨f⟩`, from `I ∩ ⟨f⟩` divided by `f`.
    pub fn colon(&self, f: &Poly) -> Result<Ideal> {
        if f.is_zero() {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let fi = Ideal::new(self.ring.clone(), [f.clone()])?;
        let inter = self.intersection(&fi)?;
        let mut gens = Vec::new();
        for g in &inter.gens {
            gens.push(exact_div(g, f).ok_or_else(|| Error::Invariant(String::from("colon quotient not exact")))?);
        }
        Ideal::new(self.ring.clone(), gens)?.reduced(&TermOrder::GrevLex)
    }

    /// `I : f^∞` by iterated colons.
    pub fn saturation(&self, f: &Poly) -> Result<Ideal> {
        let mut cur = self.reduced(&TermOrder::GrevLex)?;
        loop {
            let next = cur.colon(f)?;
            if next.gens == cur.gens {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Generators of `I ∩ k[other variables]`, kept in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let order = TermOrder::eliminating(vars, self.nvars());
        let gb = self.groebner(&order)?;
        let kept: Vec<Poly> = gb.into_iter().filter(|g| vars.iter().all(|&v| !g.involves(v))).collect();
        Ideal::new(self.ring.clone(), kept)?.reduced(&TermOrder::GrevLex)
    }

    /// Restricts to the ring on `keep` (in order); generators must not
    /// involve the dropped variables.
    pub fn restrict(&self, keep: &[usize]) -> Result<Ideal> {
        let names: Vec<String> = keep.iter().map(|&v| self.ring.names()[v].clone()).collect();
        let ring = Ring::new(names)?;
        for g in &self.gens {
            if g.support().iter().any(|v| !keep.contains(v)) {
                return Err(Error::Precondition(String::from("generator involves a dropped variable")));
            }
        }
        Ideal::new(ring, self.gens.iter().map(|g| g.drop_vars(keep)))
    }

    /// Substitutes `value` for variable `var` in every generator.
    pub fn substitute(&self, var: usize, value: &Poly) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.gens.iter().map(|g| g.substitute(var, value)))
    }

    /// Leading monomials of the reduced basis.
    pub fn initial_ideal(&self, order: &TermOrder) -> Result<MonomialIdeal> {
        let gb = self.groebner(order)?;
        let lead: Vec<Exponent> = gb.iter().map(|g| g.leading_monomial(order).unwrap().clone()).collect();
        Ok(MonomialIdeal::new(self.nvars(), lead))
    }

    /// Krull dimension of the quotient ring, `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>> {
        Ok(self.initial_ideal(&TermOrder::GrevLex)?.dimension())
    }

    /// Codimension, `None` for the unit ideal.
    pub fn codim(&self) -> Result<Option<usize>> {
        Ok(self.dimension()?.map(|d| self.nvars() - d))
    }

    /// `I` plus the `c×c` minors of the Jacobian of its generators, where
    /// `c` is the codimension (computed when not given).
    pub fn jacobian_singular_ideal(&self, c: Option<usize>) -> Result<Ideal> {
        let c = match c {
            Some(c) => c,
            None => match self.codim()? {
                Some(c) => c,
                None => return Ok(Ideal::unit(self.ring.clone())),
            },
        };
        let n = self.nvars();
        if c == 0 {
            return Ok(Ideal::unit(self.ring.clone()));
        }
        let rows = combinations(self.gens.len(), c);
        let cols = combinations(n, c);
        let cap = super::limits().max_basis;
        if rows.len().saturating_mul(cols.len()) > cap {
            return Err(Error::ResourceCap { what: "Jacobian minors", cap });
        }
        let jac: Vec<Vec<Poly>> = self.gens.iter().map(|g| (0..n).map(|v| g.derivative(v)).collect()).collect();
        let mut minors = Vec::new();
        for r in &rows {
            for cs in &cols {
                let m: Vec<Vec<Poly>> = r.iter().map(|&i| cs.iter().map(|&j| jac[i][j].clone()).collect()).collect();
                minors.push(determinant(&m, n));
            }
        }
        self.with(minors)
    }

    /// Generators printed with the ring's variable names.
    pub fn show_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.show(g)).collect()
    }
}

/// `p / f` when `f` divides `p` exactly.
pub(crate) fn exact_div(p: &Poly, f: &Poly) -> Option<Poly> {
    let order = TermOrder::GrevLex;
    let (fl, fc) = {
        let (e, c) = f.leading_term(&order)?;
        (e.clone(), c.clone())
    };
    let mut rem = p.clone();
    let mut q = Poly::zero(p.nvars());
    while let Some((e, c)) = rem.leading_term(&order).map(|(e, c)| (e.clone(), c.clone())) {
        if !divides(&fl, &e) {
            return None;
        }
        let m: Exponent = e.iter().zip(&fl).map(|(a, b)| a - b).collect();
        let coef = &c / &fc;
        let t = Poly::monomial(p.nvars(), m, coef);
        rem = &rem - &(&t * f);
        q = &q + &t;
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse_ideal;

    fn ideal(ring: &str, gens: &str) -> Ideal {
        parse_ideal(gens, &Ring::parse(ring).unwrap()).unwrap()
    }

    fn shown(i: &Ideal, order: &TermOrder) -> Vec<String> {
        i.groebner(order).unwrap().iter().map(|g| i.ring().show(g)).collect()
    }

    #[test]
    fn groebner_examples() {
        assert_eq!(shown(&ideal("x", "x^2; x"), &TermOrder::Lex), ["x"]);
        let mut got = shown(&ideal("x,y", "x - y; y^2"), &TermOrder::Lex);
        got.sort();
        assert_eq!(got, ["x - y", "y^2"]);
        assert_eq!(shown(&ideal("x,y", "1"), &TermOrder::GrevLex), ["1"]);
        assert_eq!(shown(&ideal("x,y", "2*x + 2; x*y"), &TermOrder::GrevLex), ["y", "x + 1"]);
        assert_eq!(shown(&ideal("x,y", "x*y - 1; 3*x"), &TermOrder::GrevLex), ["1"]);
    }

    #[test]
    fn groebner_is_idempotent_and_order_agnostic_for_membership() {
        let i = ideal("x,y,z", "x^2 - y*z; x*y - z^2; y^2 - x*z; x*y*z - 1");
        for o in [TermOrder::Lex, TermOrder::GrevLex, TermOrder::GradedLex, TermOrder::y_dominant(1)] {
            let gb = i.groebner(&o).unwrap();
            assert_eq!(reduced_groebner(&gb, 3, &o).unwrap(), gb);
        }
        let probes = ["x^3 - 1", "x - y", "x*y*z - 1", "z^3 - 1", "x + y + z"];
        for p in probes {
            let p = crate::polyalg::parse_poly(p, i.ring()).unwrap();
            let a = normal_form(&p, &i.groebner(&TermOrder::Lex).unwrap(), &TermOrder::Lex).is_zero();
            let b = normal_form(&p, &i.groebner(&TermOrder::GrevLex).unwrap(), &TermOrder::GrevLex).is_zero();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn combine_examples() {
        let x = ideal("x,y", "x");
        let y = ideal("x,y", "y");
        assert!(x.intersection(&y).unwrap().equals(&ideal("x,y", "x*y")).unwrap());
        let zx = ideal("x,z", "z*x");
        let z = zx.ring().var("z").unwrap();
        assert!(zx.saturation(&z).unwrap().equals(&ideal("x,z", "x")).unwrap());
        let e = ideal("x,y", "y - x^2").eliminate(&[1]).unwrap();
        assert!(e.is_zero());
        // ⟨x²⟩ : x = ⟨x⟩, ⟨x²y⟩ : x^∞ = ⟨y⟩
        let i = ideal("x,y", "x^2*y");
        let xv = i.ring().var("x").unwrap();
        assert!(i.saturation(&xv).unwrap().equals(&ideal("x,y", "y")).unwrap());
        assert!(ideal("x,y", "x^2").colon(&xv).unwrap().equals(&x).unwrap());
    }

    /// Independent saturation oracle: `(I + ⟨1 − s f⟩) ∩ k[x]`.
    fn rabinowitsch(i: &Ideal, f: &Poly) -> Ideal {
        let n = i.nvars();
        let big = i.ring().extend([i.ring().fresh_name("s")]).unwrap();
        let map: Vec<usize> = (0..n).collect();
        let s = Poly::var(n + 1, n);
        let extra = &Poly::one(n + 1) - &(&s * &f.remap(&map, n + 1));
        let j = i.extend_to(&big).unwrap().with([extra]).unwrap();
        let e = j.eliminate(&[n]).unwrap();
        Ideal::new(i.ring().clone(), e.gens().iter().map(|g| g.drop_vars(&map))).unwrap()
    }

    #[test]
    fn saturation_matches_rabinowitsch() {
        let cases = [
            ("x,y,z", "x*z - y*z; z^2*y", "z"),
            ("x,y", "x^3*y - x^2; x*y^2", "x"),
            ("a,b,c", "a*b*c; a^2 - b*c", "a + b"),
        ];
        for (r, g, f) in cases {
            let i = ideal(r, g);
            let f = crate::polyalg::parse_poly(f, i.ring()).unwrap();
            assert!(i.saturation(&f).unwrap().equals(&rabinowitsch(&i, &f)).unwrap(), "{}", g);
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(Ideal::zero(Ring::parse("x,y,z").unwrap()).dimension().unwrap(), Some(3));
        assert_eq!(ideal("x,y", "x*y").dimension().unwrap(), Some(1));
        assert_eq!(ideal("x,y", "x^2 - y").dimension().unwrap(), Some(1));
        assert_eq!(ideal("x,y", "x; x - 1").dimension().unwrap(), None);
    }

    #[test]
    fn jacobian_examples() {
        let i = ideal("x,y", "x^2 + y^2");
        let sing = i.jacobian_singular_ideal(None).unwrap();
        assert!(sing.equals(&ideal("x,y", "x; y")).unwrap());
        assert_eq!(sing.dimension().unwrap(), Some(0));
        assert!(sing.contains(&i.ring().var("x").unwrap().pow(2)).unwrap());
        assert!(ideal("x,y", "x").jacobian_singular_ideal(None).unwrap().is_unit().unwrap());
    }

    #[test]
    fn exact_division() {
        let r = Ring::parse("x,y").unwrap();
        let p = crate::polyalg::parse_poly("x^2 - y^2", &r).unwrap();
        let f = crate::polyalg::parse_poly("x + y", &r).unwrap();
        assert_eq!(r.show(&exact_div(&p, &f).unwrap()), "x - y");
        assert!(exact_div(&f, &p).is_none());
    }
}

use crate::error::{Error, Result};
use crate::ring::{Monomial, MonomialOrder, Polynomial, RingMatrix, RingVector};

use super::buchberger::{self, Ctx};
use super::modpoly::{MPoly, Term};
use super::order::ModuleOrder;
use super::schreyer;
use super::submodule::Submodule;

/// Generators of `ker(O^s -> O^r, e_i -> gen_i)`, returned as a reduced
/// Gröbner basis. Built from Schreyer's syzygies of a Gröbner basis of `m`,
/// pulled back through the transition matrix.
pub fn syzygies(m: &Submodule) -> Submodule {
    let ring = m.ring();
    let s = m.ngens();
    let gb = m.groebner();
    if gb.is_empty() {
        return Submodule::free(ring, s);
    }
    let ctx = gb.ctx();
    let frame = schreyer::frame(&ctx, &gb.elems);
    let trans = gb.transitions();
    let tord = &ctx.tord;
    let mut cols: Vec<MPoly> = Vec::new();
    for v in &frame.syz {
        let mut acc = MPoly::zero();
        for t in &v.terms {
            acc.add_mul(&t.coef, &t.mono, &trans[frame.perm[t.comp]], tord);
        }
        cols.push(acc);
    }
    let one = ring.field().one();
    let leads = buchberger::leading_terms(&gb.elems);
    for (i, g) in m.generators().iter().enumerate() {
        let (rem, quots) =
            buchberger::divide(&ctx, &MPoly::from_vector(g, gb.order()), &gb.elems, &leads, true);
        debug_assert!(rem.is_zero());
        let mut acc = MPoly::unit(ring.nvars(), i, one.clone());
        for (k, q) in quots.iter().enumerate() {
            for (mono, c) in q {
                acc.add_mul(&c.neg(), mono, &trans[k], tord);
            }
        }
        cols.push(acc);
    }
    let vecs: Vec<RingVector> = cols.iter().map(|c| c.to_vector(ring, s)).collect();
    Submodule::from_vectors(ring, s, &vecs)
        .expect("consistent")
        .reduced()
}

/// `{ g in O^c : A g in im N }` for `A: O^c -> O^r` and `N` with `r` rows,
/// by elimination of the first `r` components. Returns a reduced basis.
pub fn kernel_mod(a: &RingMatrix, n: &RingMatrix) -> Result<Submodule> {
    if a.ring() != n.ring() {
        return Err(Error::SessionMismatch);
    }
    if a.rows() != n.rows() {
        return Err(Error::RankMismatch {
            left: a.rows(),
            right: n.rows(),
        });
    }
    let ring = a.ring();
    let (r, c) = (a.rows(), a.cols());
    let ord = ModuleOrder::BlockTop {
        base: ring.order(),
        split: r,
    };
    let one = ring.field().one();
    let mut gens = Vec::with_capacity(c + n.cols());
    for (i, col) in a.columns().iter().enumerate() {
        let mut terms = MPoly::from_vector(col, &ord).terms;
        terms.push(Term {
            mono: Monomial::one(ring.nvars()),
            comp: r + i,
            coef: one.clone(),
        });
        gens.push(MPoly::from_terms(terms, &ord));
    }
    for col in n.columns() {
        gens.push(MPoly::from_vector(&col, &ord));
    }
    let ctx = Ctx::new(&ord, ring.nvars());
    let out = buchberger::groebner(&ctx, &gens, false, false);
    let mut cols = Vec::new();
    for e in out.elems {
        if e.lead().is_some_and(|t| t.comp >= r) {
            cols.push(RingVector::new(ring, e.to_entries_range(ring, r, r + c))?);
        }
    }
    Ok(Submodule::from_vectors(ring, c, &cols)?.reduced())
}

/// `M ∩ N` by eliminating an auxiliary variable `t` from `t*M + (1-t)*N`.
pub fn intersect(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    if m.ring() != n.ring() {
        return Err(Error::SessionMismatch);
    }
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch {
            left: m.rank(),
            right: n.rank(),
        });
    }
    let ring = m.ring();
    let nv = ring.nvars();
    let ord = ModuleOrder::TermOverPosition(MonomialOrder::Elimination { block: 1 });
    let t1 = Monomial::from_exponents(&{
        let mut e = vec![0u32; nv + 1];
        e[0] = 1;
        e
    });
    let t0 = Monomial::one(nv + 1);
    let lift_terms = |v: &RingVector| -> Vec<Term> {
        v.entries()
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms().iter().map(move |(mono, c)| Term {
                    mono: mono.insert_front(0),
                    comp: i,
                    coef: c.clone(),
                })
            })
            .collect()
    };
    let one = ring.field().one();
    let mut gens = Vec::new();
    for v in m.generators() {
        let base = MPoly::from_terms(lift_terms(&v), &ord);
        let mut g = MPoly::zero();
        g.add_mul(&one, &t1, &base, &ord);
        gens.push(g);
    }
    for v in n.generators() {
        let base = MPoly::from_terms(lift_terms(&v), &ord);
        let mut g = MPoly::zero();
        g.add_mul(&one, &t0, &base, &ord);
        g.add_mul(&one.neg(), &t1, &base, &ord);
        gens.push(g);
    }
    let ctx = Ctx::new(&ord, nv + 1);
    let out = buchberger::groebner(&ctx, &gens, false, m.rank() == 1);
    let mut cols = Vec::new();
    for e in out.elems {
        if e.terms.iter().all(|t| t.mono.exponents()[0] == 0) {
            let terms: Vec<Term> = e
                .terms
                .into_iter()
                .map(|t| Term {
                    mono: t.mono.drop_front(),
                    ..t
                })
                .collect();
            let tord = ModuleOrder::TermOverPosition(ring.order());
            cols.push(MPoly::from_terms(terms, &tord).to_vector(ring, m.rank()));
        }
    }
    Ok(Submodule::from_vectors(ring, m.rank(), &cols)?.reduced())
}

/// `I ⊗ Id_k`: block matrix with the ideal generators along the diagonal.
pub fn ideal_diagonal(ideal: &Submodule, k: usize) -> RingMatrix {
    Submodule::ideal_times_free(ideal, k).gens().clone()
}

/// The ideal `M : N = { a : a N ⊆ M }`.
pub fn quotient(m: &Submodule, n: &Submodule) -> Result<Submodule> {
    if m.rank() != n.rank() {
        return Err(Error::RankMismatch {
            left: m.rank(),
            right: n.rank(),
        });
    }
    let ring = m.ring();
    let mut acc = Submodule::ideal(ring, &[ring.one()])?;
    for v in n.generators() {
        let part = kernel_mod(&v.as_column(), m.gens())?;
        acc = intersect(&acc, &part)?;
    }
    Ok(acc)
}

/// Functionals `g` on `O^r` (returned as vectors) with `g(J) ⊆ I`.
pub fn colon_functionals(ideal: &Submodule, j: &Submodule) -> Result<Submodule> {
    if ideal.rank() != 1 {
        return Err(Error::precondition("colon_functionals needs an ideal"));
    }
    let pt = j.gens().transpose();
    kernel_mod(&pt, &ideal_diagonal(ideal, j.ngens()))
}

/// `Ann(O^r / im P) = ∩_i (im P : e_i)`.
pub fn annihilator(p: &RingMatrix) -> Result<Submodule> {
    let ring = p.ring();
    let mut acc = Submodule::ideal(ring, &[ring.one()])?;
    for i in 0..p.rows() {
        let e = RingVector::unit(ring, p.rows(), i);
        let part = kernel_mod(&e.as_column(), p)?;
        acc = intersect(&acc, &part)?;
    }
    Ok(acc)
}

/// Krull dimension of `O/I`. The unit ideal gets `dim = -1` and `unit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dimension {
    pub dim: i64,
    pub unit: bool,
}

/// Largest set of variables containing the support of no leading monomial.
pub fn dimension(ideal: &Submodule) -> Dimension {
    let n = ideal.ring().nvars();
    let gb = ideal.groebner();
    let leads: Vec<&Monomial> = gb.leading_terms().iter().map(|(m, _)| m).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Dimension { dim: -1, unit: true };
    }
    let dim = max_independent_set(n, &leads);
    Dimension {
        dim: dim as i64,
        unit: false,
    }
}

pub(crate) fn max_independent_set(n: usize, leads: &[&Monomial]) -> usize {
    let masks: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for s in 0u64..(1 << n) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&mk| mk & !s != 0) {
            best = size;
        }
    }
    best
}

/// `n - dim`; the unit ideal is an error.
pub fn codimension(ideal: &Submodule) -> Result<usize> {
    let d = dimension(ideal);
    if d.unit {
        return Err(Error::precondition("the unit ideal has no codimension"));
    }
    Ok(ideal.ring().nvars() - d.dim as usize)
}

/// Codimension of `O^r / im P` via its annihilator; `None` for the zero
/// module, whose support is empty.
pub fn module_codimension(p: &RingMatrix) -> Result<Option<usize>> {
    let ann = annihilator(p)?;
    let d = dimension(&ann);
    if d.unit {
        return Ok(None);
    }
    Ok(Some(p.ring().nvars() - d.dim as usize))
}

/// `dim_k O^r / M` when finite, by counting standard monomials.
pub fn colength(m: &Submodule) -> Option<usize> {
    let n = m.ring().nvars();
    let leads = m.groebner().leading_terms();
    let mut total = 0;
    for c in 0..m.rank() {
        let comp: Vec<&Monomial> = leads.iter().filter(|(_, k)| *k == c).map(|(mo, _)| mo).collect();
        let mut bound = Vec::with_capacity(n);
        for i in 0..n {
            let b = comp
                .iter()
                .filter(|mo| mo.support().all(|v| v == i))
                .map(|mo| mo.exponents()[i])
                .min()?;
            bound.push(b);
        }
        total += count_standard(&comp, &bound)?;
    }
    Some(total)
}

/// Monomials in the box `e_i < bound_i` divisible by no element of `comp`.
fn count_standard(comp: &[&Monomial], bound: &[u32]) -> Option<usize> {
    if comp.is_empty() {
        // a component without leading terms is a free summand
        return if bound.is_empty() { Some(1) } else { None };
    }
    if bound.contains(&0) {
        return Some(0);
    }
    let n = bound.len();
    let mut e = vec![0u32; n];
    let mut count = 0;
    loop {
        let mono = Monomial::from_exponents(&e);
        if !comp.iter().any(|l| l.divides(&mono)) {
            count += 1;
        }
        let mut i = 0;
        while i < n {
            e[i] += 1;
            if e[i] < bound[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
        if i == n {
            return Some(count);
        }
    }
}

/// Whether every entry is a single term.
pub fn is_monomial_matrix(m: &RingMatrix) -> bool {
    m.entries().all(Polynomial::is_monomial)
}

/// Whether degrees can be attached to rows and columns making every entry
/// homogeneous of degree `deg(col) - deg(row)`.
pub fn is_graded_matrix(m: &RingMatrix) -> bool {
    graded_degrees(m).is_some()
}

/// A consistent choice of row and column degrees, if one exists.
pub fn graded_degrees(m: &RingMatrix) -> Option<(Vec<i64>, Vec<i64>)> {
    let (r, c) = (m.rows(), m.cols());
    let mut rowdeg: Vec<Option<i64>> = vec![None; r];
    let mut coldeg: Vec<Option<i64>> = vec![None; c];
    for i in 0..r {
        for j in 0..c {
            if !m.get(i, j).is_homogeneous() {
                return None;
            }
        }
    }
    // propagate along the bipartite graph of nonzero entries
    for start in 0..r {
        if rowdeg[start].is_some() {
            continue;
        }
        rowdeg[start] = Some(0);
        let mut stack = vec![(true, start)];
        while let Some((is_row, k)) = stack.pop() {
            if is_row {
                let d = rowdeg[k].unwrap();
                for (j, slot) in coldeg.iter_mut().enumerate() {
                    if let Some(e) = m.get(k, j).total_degree() {
                        let want = d + e as i64;
                        match *slot {
                            None => {
                                *slot = Some(want);
                                stack.push((false, j));
                            }
                            Some(x) if x != want => return None,
                            _ => {}
                        }
                    }
                }
            } else {
                let d = coldeg[k].unwrap();
                for (i, slot) in rowdeg.iter_mut().enumerate() {
                    if let Some(e) = m.get(i, k).total_degree() {
                        let want = d - e as i64;
                        match *slot {
                            None => {
                                *slot = Some(want);
                                stack.push((true, i));
                            }
                            Some(x) if x != want => return None,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    Some((
        rowdeg.into_iter().map(|d| d.unwrap_or(0)).collect(),
        coldeg.into_iter().map(|d| d.unwrap_or(0)).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Field, Ring};

    fn ring(vars: &[&str]) -> Ring {
        Ring::degrevlex(Field::Rational, vars.iter().copied()).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Submodule {
        let g: Vec<Polynomial> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        Submodule::ideal(r, &g).unwrap()
    }

    fn gens(m: &Submodule) -> Vec<String> {
        m.generators().iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn syzygies_of_two_monomials() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let koszul_pair = Submodule::from_vectors(
            &r,
            2,
            &[RingVector::new(&r, vec![p("y"), p("-x")]).unwrap()],
        )
        .unwrap();
        let s = syzygies(&ideal(&r, &["x^2", "x*y"]));
        assert_eq!(s.ngens(), 1);
        assert!(s.same_as(&koszul_pair).unwrap());
        assert_eq!(gens(&syzygies(&ideal(&r, &["x", "y"]))), ["[-y, x]"]);
        assert!(syzygies(&ideal(&r, &["x^2 + y"])).is_zero());
    }

    #[test]
    fn syzygies_with_redundant_generators_kill_the_map() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z", "x*y + x*z", "y^2*z - z^3", "0"]);
        let s = syzygies(&i);
        assert!(i.gens().try_mul(s.gens()).unwrap().is_zero());
        // the obvious linear relation and the zero generator are syzygies
        let p = |s: &str| r.parse(s).unwrap();
        let rel = RingVector::new(&r, vec![p("1"), p("1"), p("-1"), p("0"), p("0")]).unwrap();
        assert!(s.contains(&rel).unwrap());
        assert!(s.contains(&RingVector::unit(&r, 5, 4)).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y", "z", "w"]);
        assert_eq!(gens(&intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap()), ["[x*y]"]);
        let a = intersect(&ideal(&r, &["z^2", "w"]), &ideal(&r, &["z", "w^2"])).unwrap();
        assert!(a.same_as(&ideal(&r, &["z^2", "z*w", "w^2"])).unwrap());
        let b = intersect(&ideal(&r, &["x", "y"]), &ideal(&r, &["x", "y"])).unwrap();
        assert!(b.same_as(&ideal(&r, &["x", "y"])).unwrap());
    }

    #[test]
    fn quotients() {
        let r = ring(&["x", "y"]);
        let q = quotient(&ideal(&r, &["x^2"]), &ideal(&r, &["x^2", "x*y"])).unwrap();
        assert!(q.same_as(&ideal(&r, &["x"])).unwrap());
        let q = quotient(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap();
        assert!(q.same_as(&ideal(&r, &["x"])).unwrap());
        let i = ideal(&r, &["x^2", "y^3"]);
        assert!(quotient(&i, &ideal(&r, &["1"])).unwrap().same_as(&i).unwrap());
    }

    #[test]
    fn colon_functionals_examples() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let q = colon_functionals(&ideal(&r, &["x^2"]), &ideal(&r, &["x^2", "x*y"])).unwrap();
        assert!(q.same_as(&ideal(&r, &["x"])).unwrap());
        let all = Submodule::free(&r, 2);
        let q = colon_functionals(&ideal(&r, &["x", "y"]), &all).unwrap();
        assert!(q.same_as(&Submodule::ideal_times_free(&ideal(&r, &["x", "y"]), 2)).unwrap());
        let j = Submodule::new(RingMatrix::from_rows(&r, vec![vec![p("0")], vec![p("1")]]).unwrap());
        let q = colon_functionals(&ideal(&r, &["x"]), &j).unwrap();
        let expect = Submodule::new(
            RingMatrix::from_rows(&r, vec![vec![p("1"), p("0")], vec![p("0"), p("x")]]).unwrap(),
        );
        assert!(q.same_as(&expect).unwrap());
    }

    #[test]
    fn annihilators() {
        let r = ring(&["x", "y"]);
        let p = |s: &str| r.parse(s).unwrap();
        let cyc = RingMatrix::from_rows(&r, vec![vec![p("x^2"), p("x*y")]]).unwrap();
        assert!(annihilator(&cyc).unwrap().same_as(&ideal(&r, &["x^2", "x*y"])).unwrap());
        let sum = RingMatrix::from_rows(&r, vec![vec![p("x"), p("0")], vec![p("0"), p("y")]]).unwrap();
        assert!(annihilator(&sum).unwrap().same_as(&ideal(&r, &["x*y"])).unwrap());
        assert!(annihilator(&RingMatrix::zero(&r, 2, 0)).unwrap().is_zero());
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y"]);
        let d = dimension(&ideal(&r, &["x^2", "x*y"]));
        assert_eq!((d.dim, codimension(&ideal(&r, &["x^2", "x*y"])).unwrap()), (1, 1));
        let r4 = ring(&["x", "y", "z", "w"]);
        assert_eq!(codimension(&ideal(&r4, &["x*z", "x*w", "y*z", "y*w"])).unwrap(), 2);
        assert_eq!(codimension(&ideal(&r4, &["x", "y", "z", "w"])).unwrap(), 4);
        assert_eq!(codimension(&Submodule::zero(&r4, 1)).unwrap(), 0);
        assert_eq!(dimension(&ideal(&r4, &["x", "1 + x"])), Dimension { dim: -1, unit: true });
    }

    #[test]
    fn kernel_mod_agrees_with_intersection() {
        let r = ring(&["x", "y", "z"]);
        let a = ideal(&r, &["x*y", "z^2"]);
        let b = ideal(&r, &["y^2", "x*z"]);
        let via_t = intersect(&a, &b).unwrap();
        let k1 = kernel_mod(&RingMatrix::identity(&r, 1), a.gens()).unwrap();
        assert!(k1.same_as(&a).unwrap());
        // g with (g, g) in a ⊕ b
        let syz_route = {
            let p = |s: &str| r.parse(s).unwrap();
            let top = RingMatrix::from_rows(&r, vec![vec![p("1")], vec![p("1")]]).unwrap();
            kernel_mod(&top, &a.gens().direct_sum(b.gens())).unwrap()
        };
        assert!(syz_route.same_as(&via_t).unwrap());
    }
}

//! Schreyer's construction: from a Gröbner basis, a Gröbner basis of its
//! syzygy module under the induced order.

use std::cmp::Ordering;

use crate::ring::{Monomial, MonomialOrder};

use super::buchberger::{self, Ctx};
use super::modpoly::{MPoly, Term};
use super::order::ModuleOrder;

pub(crate) struct Frame {
    /// The basis, sorted so that within a component leading monomials
    /// descend lexicographically. This ordering makes the iterated
    /// construction stop after at most `n` steps.
    pub basis: Vec<MPoly>,
    /// `basis[k]` is the input element `perm[k]`.
    pub perm: Vec<usize>,
    /// Induced order on the free module with one basis vector per element.
    pub order: ModuleOrder,
    /// Gröbner basis of the syzygies, under `order`.
    pub syz: Vec<MPoly>,
}

pub(crate) fn frame(ctx: &Ctx, gb: &[MPoly]) -> Frame {
    let leads = buchberger::leading_terms(gb);
    let mut perm: Vec<usize> = (0..gb.len()).collect();
    perm.sort_by(|&a, &b| {
        leads[a]
            .1
            .cmp(&leads[b].1)
            .then_with(|| MonomialOrder::Lex.cmp(&leads[b].0, &leads[a].0))
            .then_with(|| a.cmp(&b))
    });
    let basis: Vec<MPoly> = perm.iter().map(|&k| gb[k].clone()).collect();
    let leads: Vec<(Monomial, usize)> = perm.iter().map(|&k| leads[k].clone()).collect();
    let order = ctx.ord.induced(&leads);
    let mut syz = Vec::new();
    for i in 0..basis.len() {
        let cands: Vec<(usize, Monomial)> = (i + 1..basis.len())
            .filter(|&j| leads[j].1 == leads[i].1)
            .map(|j| (j, leads[i].0.quotient_of(&leads[i].0.lcm(&leads[j].0))))
            .collect();
        for (a, (j, m)) in cands.iter().enumerate() {
            let redundant = cands.iter().enumerate().any(|(b, (_, m2))| {
                b != a && m2.divides(m) && (m2 != m || b < a)
            });
            if redundant {
                continue;
            }
            let l = leads[i].0.lcm(&leads[*j].0);
            let mj = leads[*j].0.quotient_of(&l);
            let ci = basis[i].terms[0].coef.inv();
            let cj = basis[*j].terms[0].coef.inv().neg();
            let mut s = MPoly::zero();
            s.add_mul(&ci, m, &basis[i], ctx.ord);
            s.add_mul(&cj, &mj, &basis[*j], ctx.ord);
            let (rem, quots) = buchberger::divide(ctx, &s, &basis, &leads, true);
            debug_assert!(rem.is_zero(), "frame input is not a Gröbner basis");
            let mut terms = vec![
                Term {
                    mono: m.clone(),
                    comp: i,
                    coef: ci,
                },
                Term {
                    mono: mj,
                    comp: *j,
                    coef: cj,
                },
            ];
            for (k, q) in quots.into_iter().enumerate() {
                terms.extend(q.into_iter().map(|(mono, c)| Term {
                    mono,
                    comp: k,
                    coef: c.neg(),
                }));
            }
            let v = MPoly::from_terms(terms, &order);
            debug_assert!(v
                .lead()
                .is_some_and(|t| t.comp == i && order.cmp(&t.mono, t.comp, m, i) == Ordering::Equal));
            syz.push(v);
        }
    }
    Frame {
        basis,
        perm,
        order,
        syz,
    }
}

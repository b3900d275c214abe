//! Buchberger's algorithm on free-module elements with optional tracking of
//! each basis element as a combination of the input generators.

use std::collections::{BTreeSet, HashSet};

use crate::ring::{Monomial, Scalar};

use super::modpoly::{MPoly, Term};
use super::order::ModuleOrder;

pub(crate) struct GbOutput {
    pub elems: Vec<MPoly>,
    /// `elems[k] = sum_i trans[k]_i * gens[i]`, stored in `O^s` under
    /// term-over-position.
    pub trans: Option<Vec<MPoly>>,
}

pub(crate) struct Ctx<'a> {
    pub ord: &'a ModuleOrder,
    pub tord: ModuleOrder,
    pub nvars: usize,
}

impl<'a> Ctx<'a> {
    pub fn new(ord: &'a ModuleOrder, nvars: usize) -> Ctx<'a> {
        Ctx {
            ord,
            tord: ModuleOrder::TermOverPosition(ord.base()),
            nvars,
        }
    }
}

fn find_divisor(leads: &[(Monomial, usize)], t: &Term) -> Option<usize> {
    leads
        .iter()
        .position(|(m, c)| *c == t.comp && m.divides(&t.mono))
}

fn leads_of(basis: &[MPoly]) -> Vec<(Monomial, usize)> {
    basis
        .iter()
        .map(|g| {
            let t = g.lead().expect("nonzero basis element");
            (t.mono.clone(), t.comp)
        })
        .collect()
}

/// Reduces until the leading term is not divisible by any basis leading term.
fn top_reduce(
    ctx: &Ctx,
    h: &mut MPoly,
    th: &mut Option<MPoly>,
    basis: &[MPoly],
    tbasis: Option<&[MPoly]>,
    leads: &[(Monomial, usize)],
) {
    while let Some(lt) = h.lead() {
        let Some(k) = find_divisor(leads, lt) else { return };
        let c = lt.coef.div(&basis[k].terms[0].coef).neg();
        let m = leads[k].0.quotient_of(&lt.mono);
        h.add_mul(&c, &m, &basis[k], ctx.ord);
        if let (Some(th), Some(tb)) = (th.as_mut(), tbasis) {
            th.add_mul(&c, &m, &tb[k], &ctx.tord);
        }
    }
}

/// Full division of `v` by `basis`: returns the remainder and, per basis
/// element, the quotient terms (`v = sum q_k basis_k + rem`).
pub(crate) fn divide(
    ctx: &Ctx,
    v: &MPoly,
    basis: &[MPoly],
    leads: &[(Monomial, usize)],
    want_quotients: bool,
) -> (MPoly, Vec<Vec<(Monomial, Scalar)>>) {
    let mut h = v.clone();
    let mut rem: Vec<Term> = Vec::new();
    let mut quots = vec![Vec::new(); if want_quotients { basis.len() } else { 0 }];
    while let Some(lt) = h.lead() {
        match find_divisor(leads, lt) {
            Some(k) => {
                let c = lt.coef.div(&basis[k].terms[0].coef);
                let m = leads[k].0.quotient_of(&lt.mono);
                h.add_mul(&c.neg(), &m, &basis[k], ctx.ord);
                if want_quotients {
                    quots[k].push((m, c));
                }
            }
            None => {
                // the remainder is produced in descending order
                rem.push(h.terms.remove(0));
            }
        }
    }
    (MPoly { terms: rem }, quots)
}

fn spair(ctx: &Ctx, g: &[MPoly], leads: &[(Monomial, usize)], i: usize, j: usize) -> (Monomial, Monomial, MPoly) {
    let l = leads[i].0.lcm(&leads[j].0);
    let mi = leads[i].0.quotient_of(&l);
    let mj = leads[j].0.quotient_of(&l);
    let ci = g[i].terms[0].coef.inv();
    let cj = g[j].terms[0].coef.inv().neg();
    let mut s = MPoly::zero();
    s.add_mul(&ci, &mi, &g[i], ctx.ord);
    s.add_mul(&cj, &mj, &g[j], ctx.ord);
    (mi, mj, s)
}

/// Computes a reduced Gröbner basis. Zero generators are ignored. The
/// product criterion is only used when `rank_one` holds.
pub(crate) fn groebner(ctx: &Ctx, gens: &[MPoly], track: bool, rank_one: bool) -> GbOutput {
    let one = gens
        .iter()
        .find_map(|g| g.lead().map(|t| t.coef.field().one()));
    let Some(one) = one else {
        return GbOutput {
            elems: Vec::new(),
            trans: track.then(Vec::new),
        };
    };
    let mut g: Vec<MPoly> = Vec::new();
    let mut t: Vec<MPoly> = Vec::new();
    let mut leads: Vec<(Monomial, usize)> = Vec::new();
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert = |h: MPoly,
                      th: Option<MPoly>,
                      g: &mut Vec<MPoly>,
                      t: &mut Vec<MPoly>,
                      leads: &mut Vec<(Monomial, usize)>,
                      queue: &mut BTreeSet<(u32, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>| {
        let n = g.len();
        let lt = h.terms[0].clone();
        for (k, (m, c)) in leads.iter().enumerate() {
            if *c != lt.comp {
                continue;
            }
            if rank_one && m.is_coprime(&lt.mono) {
                continue;
            }
            queue.insert((m.lcm(&lt.mono).degree(), k, n));
            pending.insert((k, n));
        }
        leads.push((lt.mono, lt.comp));
        g.push(h);
        if let Some(th) = th {
            t.push(th);
        }
    };

    for (i, f) in gens.iter().enumerate() {
        if f.is_zero() {
            continue;
        }
        let mut h = f.clone();
        let mut th = track.then(|| MPoly::unit(ctx.nvars, i, one.clone()));
        top_reduce(ctx, &mut h, &mut th, &g, track.then_some(t.as_slice()), &leads);
        if let Some(inv) = h.make_monic() {
            if let Some(th) = th.as_mut() {
                *th = th.scale(&inv);
            }
            insert(h, th, &mut g, &mut t, &mut leads, &mut queue, &mut pending);
        }
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        pending.remove(&(i, j));
        let lcm = leads[i].0.lcm(&leads[j].0);
        let comp = leads[i].1;
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && leads[k].1 == comp
                && leads[k].0.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (mi, mj, mut s) = spair(ctx, &g, &leads, i, j);
        let mut ts = track.then(|| {
            let mut ts = MPoly::zero();
            ts.add_mul(&g[i].terms[0].coef.inv(), &mi, &t[i], &ctx.tord);
            ts.add_mul(&g[j].terms[0].coef.inv().neg(), &mj, &t[j], &ctx.tord);
            ts
        });
        top_reduce(ctx, &mut s, &mut ts, &g, track.then_some(t.as_slice()), &leads);
        if let Some(inv) = s.make_monic() {
            if let Some(ts) = ts.as_mut() {
                *ts = ts.scale(&inv);
            }
            insert(s, ts, &mut g, &mut t, &mut leads, &mut queue, &mut pending);
        }
    }

    interreduce(ctx, g, track.then_some(t))
}

/// Drops redundant leading terms, then tail-reduces. Survivors keep their
/// insertion order.
pub(crate) fn interreduce(ctx: &Ctx, g: Vec<MPoly>, t: Option<Vec<MPoly>>) -> GbOutput {
    let leads = leads_of(&g);
    let keep: Vec<usize> = (0..g.len())
        .filter(|&a| {
            !(0..g.len()).any(|b| {
                b != a
                    && leads[b].1 == leads[a].1
                    && leads[b].0.divides(&leads[a].0)
                    && (leads[b].0 != leads[a].0 || b < a)
            })
        })
        .collect();
    let basis: Vec<MPoly> = keep.iter().map(|&k| g[k].clone()).collect();
    let tb: Option<Vec<MPoly>> = t.as_ref().map(|t| keep.iter().map(|&k| t[k].clone()).collect());
    let bleads = leads_of(&basis);
    let mut elems = Vec::with_capacity(basis.len());
    let mut trans = tb.as_ref().map(|_| Vec::with_capacity(basis.len()));
    for (a, f) in basis.iter().enumerate() {
        let head = MPoly {
            terms: vec![f.terms[0].clone()],
        };
        let tail = MPoly {
            terms: f.terms[1..].to_vec(),
        };
        let (rem, quots) = divide(ctx, &tail, &basis, &bleads, tb.is_some());
        let mut out = head;
        out.terms.extend(rem.terms);
        let inv = out.make_monic().expect("nonzero");
        elems.push(out);
        if let (Some(trans), Some(tb)) = (trans.as_mut(), tb.as_ref()) {
            let mut tr = tb[a].clone();
            for (k, q) in quots.iter().enumerate() {
                for (m, c) in q {
                    tr.add_mul(&c.neg(), m, &tb[k], &ctx.tord);
                }
            }
            trans.push(tr.scale(&inv));
        }
    }
    GbOutput { elems, trans }
}

/// Checks Buchberger's criterion: every S-pair reduces to zero.
pub(crate) fn is_groebner(ctx: &Ctx, basis: &[MPoly]) -> bool {
    let leads = leads_of(basis);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].1 != leads[j].1 {
                continue;
            }
            let (_, _, s) = spair(ctx, basis, &leads, i, j);
            if !divide(ctx, &s, basis, &leads, false).0.is_zero() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn leading_terms(basis: &[MPoly]) -> Vec<(Monomial, usize)> {
    leads_of(basis)
}

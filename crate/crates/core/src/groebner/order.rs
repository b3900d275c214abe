use std::cmp::Ordering;
use std::sync::Arc;

use crate::ring::{Monomial, MonomialOrder, PositionStrategy};

/// Data of a Schreyer order on a free module `F_k` whose basis vectors map
/// to elements with known leading terms. The flattened form compares
/// `m * shift[c]` first, then the component in the bottom free module, then
/// the chain of indices that led to `c`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct SchreyerData {
    base: MonomialOrder,
    shift: Vec<Monomial>,
    base_comp: Vec<usize>,
    ties: Vec<Vec<usize>>,
}

/// A term order on a free module `O^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrder {
    /// Monomial first; among equal monomials the smaller component index wins.
    TermOverPosition(MonomialOrder),
    /// Component first (smaller index wins), then monomial.
    PositionOverTerm(MonomialOrder),
    /// Components `< split` dominate every other component; otherwise
    /// term-over-position. Used for elimination of the top block.
    BlockTop { base: MonomialOrder, split: usize },
    /// Order induced by a list of generators.
    Schreyer(Arc<SchreyerData>),
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder, strategy: PositionStrategy) -> ModuleOrder {
        match strategy {
            PositionStrategy::TermOverPosition => ModuleOrder::TermOverPosition(base),
            PositionStrategy::PositionOverTerm => ModuleOrder::PositionOverTerm(base),
        }
    }

    pub fn base(&self) -> MonomialOrder {
        match self {
            ModuleOrder::TermOverPosition(o) | ModuleOrder::PositionOverTerm(o) => *o,
            ModuleOrder::BlockTop { base, .. } => *base,
            ModuleOrder::Schreyer(d) => d.base,
        }
    }

    /// Compares `m1 * e_c1` with `m2 * e_c2`.
    #[inline]
    pub fn cmp(&self, m1: &Monomial, c1: usize, m2: &Monomial, c2: usize) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition(o) => o.cmp(m1, m2).then_with(|| c2.cmp(&c1)),
            ModuleOrder::PositionOverTerm(o) => c2.cmp(&c1).then_with(|| o.cmp(m1, m2)),
            ModuleOrder::BlockTop { base, split } => {
                let (t1, t2) = (c1 < *split, c2 < *split);
                t1.cmp(&t2)
                    .then_with(|| base.cmp(m1, m2))
                    .then_with(|| c2.cmp(&c1))
            }
            ModuleOrder::Schreyer(d) => d
                .base
                .cmp_shifted(m1, &d.shift[c1], m2, &d.shift[c2])
                .then_with(|| d.base_comp[c2].cmp(&d.base_comp[c1]))
                .then_with(|| d.ties[c2].cmp(&d.ties[c1])),
        }
    }

    /// The Schreyer order on a free module whose `c`-th basis vector maps to
    /// an element with leading term `leads[c] = (mu_c, d_c)` in this order.
    pub fn induced(&self, leads: &[(Monomial, usize)]) -> ModuleOrder {
        let data = match self {
            ModuleOrder::TermOverPosition(o) => SchreyerData {
                base: *o,
                shift: leads.iter().map(|(m, _)| m.clone()).collect(),
                base_comp: leads.iter().map(|(_, d)| *d).collect(),
                ties: (0..leads.len()).map(|c| vec![c]).collect(),
            },
            ModuleOrder::Schreyer(prev) => SchreyerData {
                base: prev.base,
                shift: leads.iter().map(|(m, d)| m.mul(&prev.shift[*d])).collect(),
                base_comp: leads.iter().map(|(_, d)| prev.base_comp[*d]).collect(),
                ties: leads
                    .iter()
                    .enumerate()
                    .map(|(c, (_, d))| {
                        let mut t = prev.ties[*d].clone();
                        t.push(c);
                        t
                    })
                    .collect(),
            },
            other => panic!("Schreyer order cannot be induced from {other:?}"),
        };
        ModuleOrder::Schreyer(Arc::new(data))
    }
}

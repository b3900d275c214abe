use crate::error::{Error, Result};
use crate::groebner::{annihilator, codimension, colon_functionals, Submodule};

use super::pairing::kernel_mod_ideal;
use super::regular::{find_regular_sequence, CompleteIntersection};

/// `J_[p]` for `J ⊆ O^r` with `codim O^r/J >= p`, by linkage through a
/// complete intersection `I` of length `p` killing `O^r/J`:
/// `J_[p] = { g : w·g ∈ I for every functional w with w(J) ⊆ I }`.
/// When the codimension exceeds `p` the hull is all of `O^r`.
pub fn equidimensional_hull(j: &Submodule, p: usize, seed: u64) -> Result<Submodule> {
    let ann = annihilator(j.gens())?;
    if ann.is_everything() {
        return Ok(Submodule::free(j.ring(), j.rank()));
    }
    let codim = codimension(&ann)?;
    if codim < p {
        return Err(Error::precondition_with(
            format!("module has codimension {codim} < {p}"),
            format!("codim = {codim}"),
        ));
    }
    let ci = find_regular_sequence(&ann, p, seed)?;
    hull_at_level(j, &ci)
}

/// The linkage formula for a given complete intersection inside `Ann(O^r/J)`.
pub fn hull_at_level(j: &Submodule, ci: &CompleteIntersection) -> Result<Submodule> {
    let q = colon_functionals(ci.ideal(), j)?;
    kernel_mod_ideal(&q.gens().transpose(), ci.ideal())
}

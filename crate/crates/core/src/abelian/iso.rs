//! Exhaustive isomorphism search between small finite abelian groups.
//!
//! Used to compare homomorphisms written on different (non-canonical)
//! generating sets: two maps agree "up to automorphism" when there are
//! isomorphisms of source and target making the square commute.

use itertools::Itertools;

use super::group::{enumeration_cap, CyclicProduct};
use super::hom::GroupHom;
use super::matrix::Matrix;
use crate::error::Result;
use crate::scalar::Scalar;

/// Every isomorphism `from -> to`, as homomorphisms on the chosen generators.
/// Empty when the groups are not isomorphic.
pub fn isomorphisms<Z: Scalar>(from: &CyclicProduct<Z>, to: &CyclicProduct<Z>) -> Result<Vec<GroupHom<Z>>> {
    if from.canonical() != to.canonical() {
        return Ok(Vec::new());
    }
    let targets = to.elements(enumeration_cap())?;
    // candidate images for each generator: elements whose order divides the generator's
    let choices: Vec<Vec<&Vec<Z>>> = from
        .orders()
        .iter()
        .map(|m| targets.iter().filter(|y| to.is_zero_element(&to.scale(m, y))).collect())
        .collect();
    let mut out = Vec::new();
    if choices.is_empty() {
        out.push(GroupHom::new(from.clone(), to.clone(), Matrix::zeros(to.rank(), 0))?);
        return Ok(out);
    }
    for images in choices.into_iter().multi_cartesian_product() {
        let mut m = Matrix::zeros(to.rank(), from.rank());
        for (j, y) in images.iter().enumerate() {
            for (i, v) in y.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        let hom = GroupHom::new(from.clone(), to.clone(), m)?;
        if hom.is_injective()? {
            out.push(hom);
        }
    }
    Ok(out)
}

/// Certificate that `computed: G -> H` matches `reference: G' -> H'`:
/// `target_iso ∘ computed == reference ∘ source_iso`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowMatch<Z> {
    pub source_iso: GroupHom<Z>,
    pub target_iso: GroupHom<Z>,
}

/// Searches for isomorphisms of sources and targets carrying `computed` to
/// `reference`. Returns the first certificate found, in enumeration order.
pub fn match_up_to_isomorphism<Z: Scalar>(
    computed: &GroupHom<Z>,
    reference: &GroupHom<Z>,
) -> Result<Option<ArrowMatch<Z>>> {
    let alphas = isomorphisms(computed.source(), reference.source())?;
    let betas = isomorphisms(computed.target(), reference.target())?;
    for alpha in &alphas {
        let rhs = reference.compose(alpha)?;
        for beta in &betas {
            if beta.compose(computed)? == rhs {
                return Ok(Some(ArrowMatch { source_iso: alpha.clone(), target_iso: beta.clone() }));
            }
        }
    }
    Ok(None)
}

/// Isomorphisms `beta` of the target for which `beta ∘ computed` equals
/// `reference ∘ alpha` for some isomorphism `alpha` of the source.
pub fn compatible_target_isos<Z: Scalar>(
    computed: &GroupHom<Z>,
    reference: &GroupHom<Z>,
    betas: &[GroupHom<Z>],
) -> Result<Vec<bool>> {
    let alphas = isomorphisms(computed.source(), reference.source())?;
    let rhs: Vec<GroupHom<Z>> = alphas.iter().map(|a| reference.compose(a)).collect::<Result<_>>()?;
    betas
        .iter()
        .map(|beta| {
            let lhs = beta.compose(computed)?;
            Ok(rhs.contains(&lhs))
        })
        .collect()
}

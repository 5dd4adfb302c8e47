//! Existential image, inverse image, and the power relator.
//!
//! The fast paths build the powerset-level relations directly from row
//! bitmasks; construction cross-checks them against the symmetric-quotient
//! formulas on small inputs.

use crate::error::{Error, Result};
use crate::powerset::membership;
use crate::relation::Relation;
use crate::universe::{power_members, Universe};

/// Ceiling on output cells for the powerset-level constructions.
const IMAGE_CELL_CAP: usize = 1 << 26;

/// Outputs at most this large are re-derived through the defining formulas
/// and compared bit for bit.
const VALIDATE_CELL_CAP: usize = 1 << 16;

fn check_output_cells(rows: &Universe, cols: &Universe) -> Result<()> {
    let cells = rows.size() as u128 * cols.size() as u128;
    if cells > IMAGE_CELL_CAP as u128 {
        return Err(Error::CapExceeded {
            universe: format!("({})x({})", rows.name(), cols.name()),
            requested: cells,
            cap: IMAGE_CELL_CAP,
        });
    }
    Ok(())
}

fn row_mask(r: &Relation, x: usize) -> usize {
    r.row_ones(x).fold(0usize, |acc, y| acc | 1 << y)
}

/// Images of every source subset, by binary-counting dynamic programming:
/// `image[m] = image[m \ lowest bit] ∪ row(lowest bit)`.
fn subset_images(r: &Relation) -> Vec<usize> {
    let n = r.src().size();
    let rows: Vec<usize> = (0..n).map(|x| row_mask(r, x)).collect();
    let mut image = vec![0usize; 1 << n];
    for m in 1..1usize << n {
        let low = m.trailing_zeros() as usize;
        image[m] = image[m & (m - 1)] | rows[low];
    }
    image
}

/// Existential image `ϑ_R : Power(X) → Power(Y)`, the mapping
/// `A ↦ { y | ∃x∈A: R(x,y) }`.
pub fn existential_image(r: &Relation) -> Result<Relation> {
    let ps = Universe::power(r.src())?;
    let pt = Universe::power(r.tgt())?;
    check_output_cells(&ps, &pt)?;
    let image = subset_images(r);
    let pairs: Vec<(usize, usize)> = image.iter().enumerate().map(|(m, &n)| (m, n)).collect();
    let theta = Relation::from_pairs(&ps, &pt, &pairs)?;

    if ps.size() * pt.size() <= VALIDATE_CELL_CAP {
        // ϑ_R = syq(Rᵀ∘ε, ε′), the defining route.
        let eps = membership(r.src())?.epsilon;
        let eps_t = membership(r.tgt())?.epsilon;
        let via_syq = r.converse().compose(&eps)?.syq(&eps_t)?;
        assert_eq!(theta, via_syq, "existential image must match its formula");
    }
    Ok(theta)
}

/// Inverse image `ϑ_{Rᵀ} : Power(Y) → Power(X)`.
pub fn inverse_image(r: &Relation) -> Result<Relation> {
    existential_image(&r.converse())
}

/// Power relator
/// `ζ_R = ¬(εᵀ∘¬(R∘ε′)) ∩ ¬(¬(εᵀ∘R)∘ε′)`:
/// subsets `(A,B)` such that every element of `A` reaches into `B` and every
/// element of `B` is reached from `A`.
pub fn power_relator(r: &Relation) -> Result<Relation> {
    let ps = Universe::power(r.src())?;
    let pt = Universe::power(r.tgt())?;
    check_output_cells(&ps, &pt)?;
    let image = subset_images(r);
    let rows: Vec<usize> = (0..r.src().size()).map(|x| row_mask(r, x)).collect();
    let mut pairs = Vec::new();
    for m in 0..ps.size() {
        for n in 0..pt.size() {
            let covered = n & !image[m] == 0;
            let covering = power_members(m).iter().all(|&x| rows[x] & n != 0);
            if covered && covering {
                pairs.push((m, n));
            }
        }
    }
    let zeta = Relation::from_pairs(&ps, &pt, &pairs)?;

    if ps.size() * pt.size() <= VALIDATE_CELL_CAP {
        let eps = membership(r.src())?.epsilon;
        let eps_t = membership(r.tgt())?.epsilon;
        let left = eps
            .converse()
            .compose(&r.compose(&eps_t)?.negate())?
            .negate();
        let right = eps
            .converse()
            .compose(r)?
            .negate()
            .compose(&eps_t)?
            .negate();
        assert_eq!(
            zeta,
            left.intersect(&right)?,
            "power relator must match its formula"
        );
    }
    Ok(zeta)
}

/// A relation together with its three powerset liftings.
#[derive(Clone, Debug)]
pub struct ImageBundle {
    pub r: Relation,
    /// Existential image `ϑ_R`.
    pub theta: Relation,
    /// Inverse image `ϑ_{Rᵀ}`.
    pub theta_conv: Relation,
    /// Power relator `ζ_R`.
    pub zeta: Relation,
}

/// Build all three liftings of `r` and assert the simulation equations
/// `εᵀ∘R = ϑ_R∘ε′ᵀ` and `R∘ε′ = ε∘ϑ_{Rᵀ}ᵀ`.
pub fn image_bundle(r: &Relation) -> Result<ImageBundle> {
    let theta = existential_image(r)?;
    let theta_conv = inverse_image(r)?;
    let zeta = power_relator(r)?;
    assert!(theta.is_mapping() && theta_conv.is_mapping());

    let ps = theta.src().clone();
    let pt = theta.tgt().clone();
    if ps.size() * pt.size() <= VALIDATE_CELL_CAP {
        let eps = membership(r.src())?.epsilon;
        let eps_t = membership(r.tgt())?.epsilon;
        assert_eq!(
            eps.converse().compose(r)?,
            theta.compose(&eps_t.converse())?,
            "simulation of the existential image"
        );
        assert_eq!(
            r.compose(&eps_t)?,
            eps.compose(&theta_conv.converse())?,
            "simulation of the inverse image"
        );
    }
    Ok(ImageBundle {
        r: r.clone(),
        theta,
        theta_conv,
        zeta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_of_identity_is_identity() {
        let x = Universe::atomic("X", &["a", "b", "c"]).unwrap();
        let id = Relation::identity(&x);
        let theta = existential_image(&id).unwrap();
        assert_eq!(theta, Relation::identity(theta.src()));
    }

    #[test]
    fn image_collects_rows() {
        let x = Universe::atomic("X", &["1", "2"]).unwrap();
        let y = Universe::atomic("Y", &["a", "b", "c"]).unwrap();
        let r = Relation::from_pairs(&x, &y, &[(0, 0), (0, 2), (1, 1)]).unwrap();
        let theta = existential_image(&r).unwrap();
        // {1,2} = index 3 maps to {a,c} ∪ {b} = index 7.
        let images: Vec<usize> = theta.row_ones(3).collect();
        assert_eq!(images, vec![7]);
    }

    #[test]
    fn zeta_differs_from_theta_on_non_mappings() {
        let x = Universe::atomic("X", &["1", "2"]).unwrap();
        let y = Universe::atomic("Y", &["a", "b"]).unwrap();
        let r = Relation::from_pairs(&x, &y, &[(0, 0), (0, 1)]).unwrap();
        let b = image_bundle(&r).unwrap();
        assert_ne!(b.zeta, b.theta);
        assert!(!b.zeta.is_mapping());
    }
}

//! Binary operations on a finite carrier, represented as mappings
//! `X×X → X`, and the element classes definable from them by purely
//! algebraic formulas: invertible elements, neutral elements, the center,
//! inverse maps, and distributivity.

use crate::error::{Error, Result};
use crate::prodsum::{assoc, fork, kronecker, product, swap, ProductWitness};
use crate::relation::Relation;
use crate::universe::Universe;

/// A binary operation `𝔄 : X×X → X`.
#[derive(Clone, Debug)]
pub struct BinOp {
    carrier: Universe,
    product: ProductWitness,
    table: Relation,
}

impl BinOp {
    /// Wrap a relation as a binary operation.  The relation must be typed
    /// `X×X → X` and be a mapping.
    pub fn from_relation(table: Relation) -> Result<BinOp> {
        let (l, r) = table.src().pair_parts().ok_or(Error::TypeMismatch {
            op: "binop",
            left: table.src().name(),
            right: "a pair universe".to_string(),
        })?;
        if l != r || l != table.tgt() {
            return Err(Error::TypeMismatch {
                op: "binop",
                left: table.src().name(),
                right: format!("({0})x({0})", table.tgt().name()),
            });
        }
        if !table.is_mapping() {
            return Err(Error::NotAMapping {
                which: "binop table".to_string(),
            });
        }
        Ok(BinOp {
            carrier: l.clone(),
            product: product(&l, &r)?,
            table,
        })
    }

    /// Build an operation from a row-indexed result table:
    /// `table[x][y]` is the element index of `x·y`.
    pub fn from_table(u: &Universe, table: &[Vec<usize>]) -> Result<BinOp> {
        let n = u.size();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::TypeMismatch {
                op: "binop table",
                left: format!("{} rows", table.len()),
                right: format!("{} elements", n),
            });
        }
        let pair = Universe::pair(u, u)?;
        let mut pairs = Vec::with_capacity(n * n);
        for (x, row) in table.iter().enumerate() {
            for (y, &z) in row.iter().enumerate() {
                if z >= n {
                    return Err(Error::IndexOutOfRange {
                        universe: u.name(),
                        index: z,
                        size: n,
                    });
                }
                pairs.push((x * n + y, z));
            }
        }
        Self::from_relation(Relation::from_pairs(&pair, u, &pairs)?)
    }

    pub fn carrier(&self) -> &Universe {
        &self.carrier
    }

    pub fn table(&self) -> &Relation {
        &self.table
    }

    pub fn product(&self) -> &ProductWitness {
        &self.product
    }

    /// Evaluate `x·y`.
    pub fn apply(&self, x: usize, y: usize) -> usize {
        let n = self.carrier.size();
        self.table
            .row_ones(x * n + y)
            .next()
            .expect("operation tables are total")
    }

    /// `P∘𝔄 = 𝔄` for the argument swap `P`.
    pub fn is_commutative(&self) -> Result<bool> {
        let p = swap(&self.carrier, &self.carrier)?;
        Ok(p.compose(&self.table)? == self.table)
    }

    /// `(𝔄⊗𝕀)∘𝔄 = T∘(𝕀⊗𝔄)∘𝔄` for the rebracketing `T`.
    pub fn is_associative(&self) -> Result<bool> {
        let id = Relation::identity(&self.carrier);
        let lhs = kronecker(&self.table, &id)?.compose(&self.table)?;
        let t = assoc(&self.carrier, &self.carrier, &self.carrier)?;
        let rhs = t
            .compose(&kronecker(&id, &self.table)?)?
            .compose(&self.table)?;
        Ok(lhs == rhs)
    }

    fn unit_top(&self) -> Relation {
        Relation::top(&self.carrier, &Universe::unit())
    }

    /// Vector of elements `x` such that `x·b = z` is solvable for every `z`:
    /// `¬(¬(πᵀ∘𝔄)∘⊤)`.
    pub fn left_invertible_elements(&self) -> Result<Relation> {
        let reach = self.product.pi.converse().compose(&self.table)?;
        Ok(reach.negate().compose(&self.unit_top())?.negate())
    }

    /// Vector of elements `x` such that `a·x = z` is solvable for every `z`.
    pub fn right_invertible_elements(&self) -> Result<Relation> {
        let reach = self.product.rho.converse().compose(&self.table)?;
        Ok(reach.negate().compose(&self.unit_top())?.negate())
    }

    /// `πᵀ∘𝔄 = ⊤`: every equation `x·b = z` is solvable.
    pub fn allows_left_inversion(&self) -> Result<bool> {
        let reach = self.product.pi.converse().compose(&self.table)?;
        Ok(reach == Relation::top(&self.carrier, &self.carrier))
    }

    /// `ρᵀ∘𝔄 = ⊤`: every equation `a·x = z` is solvable.
    pub fn allows_right_inversion(&self) -> Result<bool> {
        let reach = self.product.rho.converse().compose(&self.table)?;
        Ok(reach == Relation::top(&self.carrier, &self.carrier))
    }

    /// The center: elements commuting with everything,
    /// `¬(πᵀ∘¬((𝔄 ∩ P∘𝔄)∘⊤))`.
    pub fn invariant_elements(&self) -> Result<Relation> {
        let p = swap(&self.carrier, &self.carrier)?;
        let agree = self
            .table
            .intersect(&p.compose(&self.table)?)?
            .compose(&self.unit_top())?;
        Ok(self
            .product
            .pi
            .converse()
            .compose(&agree.negate())?
            .negate())
    }

    /// Vector of right neutrals: `¬(ρᵀ∘((¬𝔄 ∩ π)∘⊤))`.
    pub fn right_neutrals(&self) -> Result<Relation> {
        let off = self
            .table
            .negate()
            .intersect(&self.product.pi)?
            .compose(&self.unit_top())?;
        Ok(self.product.rho.converse().compose(&off)?.negate())
    }

    /// Right neutrals by the partial-identity route:
    /// `δ = 𝕀 ∩ 𝔄∘πᵀ`, then `¬(ρᵀ∘¬(δ∘⊤))`.
    pub fn right_neutrals_alt(&self) -> Result<Relation> {
        let delta = Relation::identity(&self.product.universe)
            .intersect(&self.table.compose(&self.product.pi.converse())?)?;
        let fixed = delta.compose(&Relation::top(&self.product.universe, &Universe::unit()))?;
        Ok(self
            .product
            .rho
            .converse()
            .compose(&fixed.negate())?
            .negate())
    }

    /// Vector of left neutrals: `¬(πᵀ∘((¬𝔄 ∩ ρ)∘⊤))`.
    pub fn left_neutrals(&self) -> Result<Relation> {
        let off = self
            .table
            .negate()
            .intersect(&self.product.rho)?
            .compose(&self.unit_top())?;
        Ok(self.product.pi.converse().compose(&off)?.negate())
    }

    /// Two-sided neutrals.
    pub fn neutrals(&self) -> Result<Relation> {
        self.right_neutrals()?.intersect(&self.left_neutrals()?)
    }

    /// The right-inverse relation for a unit point `e`:
    /// `i = πᵀ∘(𝔄∘e∘⊤ ∩ ρ)` relates `x` to every `z` with `x·z = e`.
    pub fn right_inverse_map(&self, e: &Relation) -> Result<Relation> {
        if e.src() != &self.carrier || e.tgt() != &Universe::unit() {
            return Err(Error::TypeMismatch {
                op: "right_inverse_map",
                left: e.src().name(),
                right: self.carrier.name(),
            });
        }
        if !e.is_point() {
            return Err(Error::NotAPoint {
                which: "right_inverse_map unit".to_string(),
            });
        }
        let hits = self
            .table
            .compose(e)?
            .compose(&Relation::top(&Universe::unit(), &self.carrier))?;
        Ok(self
            .product
            .pi
            .converse()
            .compose(&hits.intersect(&self.product.rho)?)?)
    }

    /// Whether `self` distributes over `other` from the right:
    /// `⟨(π⊗𝕀)∘𝔍, (ρ⊗𝕀)∘𝔍⟩∘𝔐 = (𝔐⊗𝕀)∘𝔍`
    /// for `𝔍 = self`, `𝔐 = other`.
    pub fn distributes_over(&self, other: &BinOp) -> Result<bool> {
        if self.carrier != other.carrier {
            return Err(Error::TypeMismatch {
                op: "distributes_over",
                left: self.carrier.name(),
                right: other.carrier.name(),
            });
        }
        let id = Relation::identity(&self.carrier);
        let first = kronecker(&self.product.pi, &id)?.compose(&self.table)?;
        let second = kronecker(&self.product.rho, &id)?.compose(&self.table)?;
        let lhs = fork(&first, &second)?.compose(&other.table)?;
        let rhs = kronecker(&other.table, &id)?.compose(&self.table)?;
        Ok(lhs == rhs)
    }
}

/// The two section mappings of a point `x : X → 1`:
/// `f = (ρ ∩ π∘x∘⊤)ᵀ` sends `y ↦ (x,y)` and
/// `g = (π ∩ ρ∘x∘⊤)ᵀ` sends `y ↦ (y,x)`.
pub fn section_maps(x: &Relation) -> Result<(Relation, Relation)> {
    if !x.is_point() {
        return Err(Error::NotAPoint {
            which: "section_maps argument".to_string(),
        });
    }
    let u = x.src();
    let w = product(u, u)?;
    let row = x.compose(&Relation::top(&Universe::unit(), u))?;
    let f = w
        .rho
        .intersect(&w.pi.compose(&row)?)?
        .converse();
    let g = w
        .pi
        .intersect(&w.rho.compose(&row)?)?
        .converse();
    Ok((f, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod3() -> BinOp {
        let u = Universe::atomic("Z3", &["0", "1", "2"]).unwrap();
        BinOp::from_table(
            &u,
            &[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn addition_mod_three() {
        let op = mod3();
        assert_eq!(op.apply(1, 2), 0);
        assert!(op.is_commutative().unwrap());
        assert!(op.is_associative().unwrap());
        assert!(op.allows_left_inversion().unwrap());
        assert!(op.allows_right_inversion().unwrap());
        // The whole carrier is the center of an abelian group.
        assert_eq!(
            op.invariant_elements().unwrap(),
            Relation::top(op.carrier(), &Universe::unit())
        );
        let neutral = op.neutrals().unwrap();
        assert_eq!(neutral.pairs(), vec![(0, 0)]);
        assert_eq!(op.right_neutrals().unwrap(), op.right_neutrals_alt().unwrap());
        let inv = op.right_inverse_map(&neutral).unwrap();
        assert_eq!(inv.pairs(), vec![(0, 0), (1, 2), (2, 1)]);
    }

    #[test]
    fn left_projection_operation() {
        // x·y = x: every element is a right neutral, none is left neutral
        // unless the carrier is a singleton.
        let u = Universe::atomic("U", &["a", "b"]).unwrap();
        let op = BinOp::from_table(&u, &[vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(
            op.right_neutrals().unwrap(),
            Relation::top(&u, &Universe::unit())
        );
        assert!(op.left_neutrals().unwrap().is_empty_relation());
        assert!(!op.is_commutative().unwrap());
        assert!(op.is_associative().unwrap());
    }

    #[test]
    fn sections_pair_up() {
        let u = Universe::atomic("U", &["a", "b", "c"]).unwrap();
        let x = Relation::from_pairs(&u, &Universe::unit(), &[(1, 0)]).unwrap();
        let (f, g) = section_maps(&x).unwrap();
        assert!(f.is_mapping() && g.is_mapping());
        // f: y ↦ (b,y), g: y ↦ (y,b) in row-major pair indexing.
        assert_eq!(f.pairs(), vec![(0, 3), (1, 4), (2, 5)]);
        assert_eq!(g.pairs(), vec![(0, 1), (1, 4), (2, 7)]);
    }

    #[test]
    fn rejects_non_mappings() {
        let u = Universe::atomic("U", &["a", "b"]).unwrap();
        let pair = Universe::pair(&u, &u).unwrap();
        let partial = Relation::from_pairs(&pair, &u, &[(0, 0)]).unwrap();
        assert!(matches!(
            BinOp::from_relation(partial),
            Err(Error::NotAMapping { .. })
        ));
    }
}

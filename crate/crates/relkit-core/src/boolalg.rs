//! The boolean algebra of subsets, lifted to relation level: complement,
//! meet and join as operations on the powerset universe, and the points
//! encoding bottom and top.
//!
//! Everything is computed twice — once by symmetric-quotient formulas and
//! once from subset bitmasks — and the two routes are compared.

use crate::binop::BinOp;
use crate::error::{Error, Result};
use crate::powerset::{membership, MembershipBundle};
use crate::prodsum::{fork, kronecker, product};
use crate::relation::Relation;
use crate::universe::Universe;

/// The meet table has `|Power(X)|³` cells; keep it addressable.
const LIFT_CELL_CAP: usize = 1 << 26;

/// Complement, meet, join, bottom and top of a powerset, as relations.
#[derive(Clone, Debug)]
pub struct LiftedAlgebra {
    pub base: Universe,
    pub bundle: MembershipBundle,
    /// Complement bijection `N = syq(¬ε, ε) : P → P`.
    pub n: Relation,
    /// Binary meet `𝔐 = syq(⟨ε,ε⟩, ε) : P×P → P`.
    pub meet: Relation,
    /// Binary join `𝔍 = syq(ε∘πᵀ ∪ ε∘ρᵀ, ε) : P×P → P`.
    pub join: Relation,
    /// The point of the empty subset, `syq(ε, ⊥)`.
    pub bot_pt: Relation,
    /// The point of the full subset, `syq(ε, ⊤)`.
    pub top_pt: Relation,
}

/// Lift the subset algebra of `base` to relation level.
pub fn lifted(base: &Universe) -> Result<LiftedAlgebra> {
    let requested = 8u128.pow(base.size() as u32);
    if requested > LIFT_CELL_CAP as u128 {
        return Err(Error::CapExceeded {
            universe: base.name(),
            requested,
            cap: LIFT_CELL_CAP,
        });
    }
    let bundle = membership(base)?;
    let eps = &bundle.epsilon;
    let pow = &bundle.power;
    let one = Universe::unit();
    let pw = product(pow, pow)?;

    let n = eps.negate().syq(eps)?;
    let meet = fork(eps, eps)?.syq(eps)?;
    let join = eps
        .compose(&pw.pi.converse())?
        .union(&eps.compose(&pw.rho.converse())?)?
        .syq(eps)?;
    let bot_pt = eps.syq(&Relation::bottom(base, &one))?;
    let top_pt = eps.syq(&Relation::top(base, &one))?;

    // Bitmask routes for the same five relations.
    let full = pow.size() - 1;
    assert_eq!(
        n,
        Relation::from_fn(pow, pow, |m, k| k == full ^ m),
        "complement must match its formula"
    );
    let ps = pow.size();
    assert_eq!(
        meet,
        Relation::from_fn(&pw.universe, pow, |i, k| k == (i / ps) & (i % ps)),
        "meet must match its formula"
    );
    assert_eq!(
        join,
        Relation::from_fn(&pw.universe, pow, |i, k| k == (i / ps) | (i % ps)),
        "join must match its formula"
    );
    assert_eq!(bot_pt, Relation::from_fn(pow, &one, |m, _| m == 0));
    assert_eq!(top_pt, Relation::from_fn(pow, &one, |m, _| m == full));

    Ok(LiftedAlgebra {
        base: base.clone(),
        bundle,
        n,
        meet,
        join,
        bot_pt,
        top_pt,
    })
}

impl LiftedAlgebra {
    /// The doubled complement `𝒩 = N ⊗ N : P×P → P×P`.
    pub fn nn(&self) -> Result<Relation> {
        kronecker(&self.n, &self.n)
    }

    /// Meet as a binary operation.
    pub fn meet_op(&self) -> Result<BinOp> {
        BinOp::from_relation(self.meet.clone())
    }

    /// Join as a binary operation.
    pub fn join_op(&self) -> Result<BinOp> {
        BinOp::from_relation(self.join.clone())
    }
}

/// The point of `Power(X)` naming a subset given as a vector `U : X → 1`;
/// `syq(ε, U)`.
pub fn subset_of_point(b: &MembershipBundle, u: &Relation) -> Result<Relation> {
    if u.src() != &b.base || u.tgt() != &Universe::unit() {
        return Err(Error::TypeMismatch {
            op: "subset_of_point",
            left: u.src().name(),
            right: b.base.name(),
        });
    }
    b.epsilon.syq(u)
}

/// The member vector `ε∘e : X → 1` of a subset named by a point `e`.
pub fn point_to_subset(b: &MembershipBundle, e: &Relation) -> Result<Relation> {
    if e.src() != &b.power || e.tgt() != &Universe::unit() {
        return Err(Error::TypeMismatch {
            op: "point_to_subset",
            left: e.src().name(),
            right: b.power.name(),
        });
    }
    if !e.is_point() {
        return Err(Error::NotAPoint {
            which: "point_to_subset argument".to_string(),
        });
    }
    b.epsilon.compose(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifted_two_element_base() {
        let x = Universe::atomic("X", &["a", "b"]).unwrap();
        let alg = lifted(&x).unwrap();
        assert!(alg.n.is_mapping());
        // N swaps {} ↔ {a,b} and {a} ↔ {b}.
        assert_eq!(alg.n.pairs(), vec![(0, 3), (1, 2), (2, 1), (3, 0)]);
        assert_eq!(alg.bot_pt.pairs(), vec![(0, 0)]);
        assert_eq!(alg.top_pt.pairs(), vec![(3, 0)]);
        let meet = alg.meet_op().unwrap();
        let join = alg.join_op().unwrap();
        assert_eq!(meet.apply(1, 3), 1);
        assert_eq!(join.apply(1, 2), 3);
        assert!(meet.is_commutative().unwrap() && meet.is_associative().unwrap());
        assert!(join.distributes_over(&meet).unwrap());
        assert!(meet.distributes_over(&join).unwrap());
    }

    #[test]
    fn subset_points_roundtrip() {
        let x = Universe::atomic("X", &["a", "b", "c", "d"]).unwrap();
        let b = membership(&x).unwrap();
        let u = Relation::from_pairs(&x, &Universe::unit(), &[(0, 0), (3, 0)]).unwrap();
        let pt = subset_of_point(&b, &u).unwrap();
        // {a,d} is subset index 1 + 8 = 9.
        assert_eq!(pt.pairs(), vec![(9, 0)]);
        assert_eq!(point_to_subset(&b, &pt).unwrap(), u);
    }

    #[test]
    fn empty_base_degenerates() {
        let x = Universe::atomic("E", &[]).unwrap();
        let alg = lifted(&x).unwrap();
        // Power of the empty set has one element; bottom and top coincide.
        assert_eq!(alg.bot_pt, alg.top_pt);
        assert_eq!(alg.n, Relation::identity(&alg.bundle.power));
    }
}

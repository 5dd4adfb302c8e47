//! Membership relation, powerset ordering, singleton injection, least
//! upper bounds, and the quotient of a membership by an equivalence.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::universe::{power_members, Universe};

/// Bundles above this many epsilon cells skip the construction-time
/// self-checks (they would dominate the build); the law suite still covers
/// smaller instances of the same identities.
const VALIDATE_CELL_CAP: usize = 1 << 16;

/// A base universe together with its powerset apparatus.
///
/// * `epsilon : base → power` — membership, `ε(x,S) ⟺ x ∈ S`.
/// * `omega : power → power` — inclusion ordering, `Ω = ¬(εᵀ∘¬ε)`.
/// * `sigma : base → power` — singleton injection, `σ = syq(𝕀,ε)`.
#[derive(Clone, Debug)]
pub struct MembershipBundle {
    pub base: Universe,
    pub power: Universe,
    pub epsilon: Relation,
    pub omega: Relation,
    pub sigma: Relation,
}

/// Build the membership bundle for `base`.
pub fn membership(base: &Universe) -> Result<MembershipBundle> {
    let power = Universe::power(base)?;
    let mut pairs = Vec::new();
    for m in 0..power.size() {
        for x in power_members(m) {
            pairs.push((x, m));
        }
    }
    let epsilon = Relation::from_pairs(base, &power, &pairs)?;
    let omega = epsilon
        .converse()
        .compose(&epsilon.negate())?
        .negate();
    let sigma = Relation::identity(base).syq(&epsilon)?;

    let bundle = MembershipBundle {
        base: base.clone(),
        power,
        epsilon,
        omega,
        sigma,
    };
    if bundle.base.size() * bundle.power.size() <= VALIDATE_CELL_CAP {
        bundle.validate()?;
    }
    Ok(bundle)
}

impl MembershipBundle {
    /// The axioms characterizing a membership relation, plus the properties
    /// of the derived pieces.
    fn validate(&self) -> Result<()> {
        let id_p = Relation::identity(&self.power);
        assert_eq!(
            self.epsilon.syq(&self.epsilon)?,
            id_p,
            "syq(eps,eps) must be the identity"
        );
        assert!(self.omega.is_order()?, "omega must be an order");
        assert!(
            self.sigma.is_mapping() && self.sigma.is_injective(),
            "sigma must be an injective mapping"
        );
        Ok(())
    }

    /// `a = σᵀ∘σ`: the partial identity on the singleton subsets.
    pub fn atoms(&self) -> Relation {
        self.sigma
            .converse()
            .compose(&self.sigma)
            .expect("sigma types fixed")
    }

    /// Vector on the powerset marking the singletons.
    pub fn atoms_vector(&self) -> Relation {
        let unit_top = Relation::top(&self.base, &Universe::unit());
        self.sigma
            .converse()
            .compose(&unit_top)
            .expect("sigma types fixed")
    }

    /// Column-wise least upper bounds: `lub_Ω(X) = syq(ε, ε∘X)` sends each
    /// column of `X : power → K` to the point at the union of the subsets
    /// it marks.
    pub fn lub(&self, x: &Relation) -> Result<Relation> {
        if x.src() != &self.power {
            return Err(Error::TypeMismatch {
                op: "lub",
                left: self.power.name(),
                right: x.src().name(),
            });
        }
        self.epsilon.syq(&self.epsilon.compose(x)?)
    }

    /// Column-wise greatest lower bounds: `glb_Ω(X) = syq(¬ε, ¬ε∘X)`.
    pub fn glb(&self, x: &Relation) -> Result<Relation> {
        if x.src() != &self.power {
            return Err(Error::TypeMismatch {
                op: "glb",
                left: self.power.name(),
                right: x.src().name(),
            });
        }
        let neg = self.epsilon.negate();
        neg.syq(&neg.compose(x)?)
    }

    /// Row-wise least upper bounds: `lubR_Ω(W) = syq(ε∘Wᵀ, ε)` for
    /// `W : K → power`.
    pub fn lub_rows(&self, w: &Relation) -> Result<Relation> {
        if w.tgt() != &self.power {
            return Err(Error::TypeMismatch {
                op: "lub_rows",
                left: self.power.name(),
                right: w.tgt().name(),
            });
        }
        self.epsilon.compose(&w.converse())?.syq(&self.epsilon)
    }

    /// Row-wise greatest lower bounds: `glbR_Ω(W) = syq(¬ε∘Wᵀ, ¬ε)`.
    pub fn glb_rows(&self, w: &Relation) -> Result<Relation> {
        if w.tgt() != &self.power {
            return Err(Error::TypeMismatch {
                op: "glb_rows",
                left: self.power.name(),
                right: w.tgt().name(),
            });
        }
        let neg = self.epsilon.negate();
        neg.compose(&w.converse())?.syq(&neg)
    }
}

/// The powerset of a quotient, together with everything relating it back
/// to the powerset of the original carrier.
#[derive(Clone, Debug)]
pub struct QuotientBundle {
    pub equivalence: Relation,
    pub quotient_universe: Universe,
    /// Natural projection `ξ : X → X_Ξ` with `ξ∘ξᵀ = Ξ`.
    pub xi: Relation,
    /// Preorder `Ω′ = ¬(εᵀ∘¬(Ξ∘ε))` on `Power(X)`.
    pub omega_prime: Relation,
    /// Equivalence `Q = syq(Ξ∘ε, Ξ∘ε)` on `Power(X)`.
    pub q: Relation,
    /// Natural projection `η : Power(X) → Power(X_Ξ)` with `Q = η∘ηᵀ`;
    /// sends a subset to the set of classes it touches.
    pub eta: Relation,
    /// `ε_Ξ = ξᵀ∘ε∘η`, a membership relation for the quotient.
    pub epsilon_xi: Relation,
}

/// Quotient a membership by the equivalence `Ξ`.
pub fn quotient_membership(xi_rel: &Relation) -> Result<QuotientBundle> {
    if !xi_rel.is_equivalence()? {
        return Err(Error::NotAnEquivalence {
            universe: xi_rel.src().name(),
        });
    }
    let base = xi_rel.src().clone();
    let n = base.size();

    // Class representative = least member; classes ordered by representative.
    let rep_of: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| xi_rel.get(x, y)).expect("reflexive"))
        .collect();
    let mut reps: Vec<usize> = rep_of.clone();
    reps.sort_unstable();
    reps.dedup();
    let labels: Vec<String> = reps
        .iter()
        .map(|&r| Ok(format!("[{}]", base.element_label(r)?)))
        .collect::<Result<_>>()?;
    let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    let quotient = Universe::atomic(&format!("{}/~", base.name()), &label_refs)?;
    let class_of: Vec<usize> = (0..n)
        .map(|x| reps.binary_search(&rep_of[x]).expect("rep present"))
        .collect();
    let xi = Relation::from_fn(&base, &quotient, |x, c| class_of[x] == c);

    let b = membership(&base)?;
    let bq = membership(&quotient)?;
    let sat = xi_rel.compose(&b.epsilon)?;
    let omega_prime = b.epsilon.converse().compose(&sat.negate())?.negate();
    let q = sat.syq(&sat)?;

    // η sends a subset to the set of classes it touches; this realizes the
    // natural projection of Q onto the canonically ordered Power(X_Ξ).
    let eta = Relation::from_fn(&b.power, &bq.power, |m, cmask| {
        let touched = power_members(m)
            .iter()
            .fold(0usize, |acc, &x| acc | 1 << class_of[x]);
        touched == cmask
    });
    assert_eq!(
        q,
        eta.compose(&eta.converse())?,
        "eta must project the subset equivalence"
    );

    let epsilon_xi = xi.converse().compose(&b.epsilon)?.compose(&eta)?;
    assert_eq!(
        epsilon_xi, bq.epsilon,
        "quotient membership must agree with the canonical one"
    );

    assert!(xi.is_mapping() && xi.is_surjective());
    assert_eq!(xi.compose(&xi.converse())?, *xi_rel);
    assert_eq!(q, omega_prime.intersect(&omega_prime.converse())?);

    Ok(QuotientBundle {
        equivalence: xi_rel.clone(),
        quotient_universe: quotient,
        xi,
        omega_prime,
        q,
        eta,
        epsilon_xi,
    })
}

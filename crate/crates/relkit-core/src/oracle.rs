//! Reference implementations written as direct quantifier loops.
//!
//! Everything here is deliberately naive: each operation is the pointwise
//! ∀/∃ definition evaluated bit by bit, with no shared code with the packed
//! fast paths. The test suites compare the two routes bit for bit; these
//! functions are the authority the fast paths are judged against, so they
//! must stay slow and obvious.

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::universe::{power_members, Universe};

/// Inputs above this many cells are refused; the oracles are quadratic or
/// worse and exist only to check small instances.
pub const ORACLE_CELL_CAP: usize = 1 << 12;

fn check_cells(r: &Relation) -> Result<()> {
    let cells = r.src().size() as u128 * r.tgt().size() as u128;
    if cells > ORACLE_CELL_CAP as u128 {
        return Err(Error::CapExceeded {
            universe: format!("oracle input {} -> {}", r.src().name(), r.tgt().name()),
            requested: cells,
            cap: ORACLE_CELL_CAP,
        });
    }
    Ok(())
}

fn check_universe(u: &Universe, label: &str) -> Result<()> {
    let cells = u.size() as u128 * (1u128 << u.size().min(127));
    if u.size() >= 12 || cells > ORACLE_CELL_CAP as u128 {
        return Err(Error::CapExceeded {
            universe: format!("oracle {} over {}", label, u.name()),
            requested: cells,
            cap: ORACLE_CELL_CAP,
        });
    }
    Ok(())
}

/// `(x,z) ∈ R∘S ⟺ ∃y: (x,y) ∈ R ∧ (y,z) ∈ S`.
pub fn oracle_compose(r: &Relation, s: &Relation) -> Result<Relation> {
    if r.tgt() != s.src() {
        return Err(Error::TypeMismatch {
            op: "oracle_compose",
            left: format!("{} -> {}", r.src().name(), r.tgt().name()),
            right: format!("{} -> {}", s.src().name(), s.tgt().name()),
        });
    }
    check_cells(r)?;
    check_cells(s)?;
    let mid = r.tgt().size();
    Ok(Relation::from_fn(r.src(), s.tgt(), |x, z| {
        (0..mid).any(|y| r.get(x, y) && s.get(y, z))
    }))
}

/// `(x,y) ∈ C/B ⟺ ∀z: (y,z) ∈ B ⟹ (x,z) ∈ C`.
pub fn oracle_left_residual(c: &Relation, b: &Relation) -> Result<Relation> {
    if c.tgt() != b.tgt() {
        return Err(Error::TypeMismatch {
            op: "oracle_left_residual",
            left: format!("{} -> {}", c.src().name(), c.tgt().name()),
            right: format!("{} -> {}", b.src().name(), b.tgt().name()),
        });
    }
    check_cells(c)?;
    check_cells(b)?;
    let zs = c.tgt().size();
    Ok(Relation::from_fn(c.src(), b.src(), |x, y| {
        (0..zs).all(|z| !b.get(y, z) || c.get(x, z))
    }))
}

/// `(y,z) ∈ A\C ⟺ ∀x: (x,y) ∈ A ⟹ (x,z) ∈ C`.
pub fn oracle_right_residual(a: &Relation, c: &Relation) -> Result<Relation> {
    if a.src() != c.src() {
        return Err(Error::TypeMismatch {
            op: "oracle_right_residual",
            left: format!("{} -> {}", a.src().name(), a.tgt().name()),
            right: format!("{} -> {}", c.src().name(), c.tgt().name()),
        });
    }
    check_cells(a)?;
    check_cells(c)?;
    let xs = a.src().size();
    Ok(Relation::from_fn(a.tgt(), c.tgt(), |y, z| {
        (0..xs).all(|x| !a.get(x, y) || c.get(x, z))
    }))
}

/// `(w,z) ∈ syq(R,S) ⟺ ∀v: (v,w) ∈ R ⟷ (v,z) ∈ S`.
pub fn oracle_syq(r: &Relation, s: &Relation) -> Result<Relation> {
    if r.src() != s.src() {
        return Err(Error::TypeMismatch {
            op: "oracle_syq",
            left: format!("{} -> {}", r.src().name(), r.tgt().name()),
            right: format!("{} -> {}", s.src().name(), s.tgt().name()),
        });
    }
    check_cells(r)?;
    check_cells(s)?;
    let vs = r.src().size();
    Ok(Relation::from_fn(r.tgt(), s.tgt(), |w, z| {
        (0..vs).all(|v| r.get(v, w) == s.get(v, z))
    }))
}

/// `(x,m) ∈ ε ⟺ x ∈ m`, reading `m` as a bitmask over the base.
pub fn oracle_membership(base: &Universe) -> Result<Relation> {
    check_universe(base, "membership")?;
    let power = Universe::power(base)?;
    Ok(Relation::from_fn(base, &power, |x, m| m >> x & 1 == 1))
}

/// Column `k` of `lub(X)` is the point at the union of the subsets that
/// `X` marks in column `k`.
pub fn oracle_lub(base: &Universe, x: &Relation) -> Result<Relation> {
    let power = Universe::power(base)?;
    if *x.src() != power {
        return Err(Error::TypeMismatch {
            op: "oracle_lub",
            left: power.name(),
            right: x.src().name(),
        });
    }
    check_universe(base, "lub")?;
    check_cells(x)?;
    Ok(Relation::from_fn(&power, x.tgt(), |s, k| {
        let mut union = 0usize;
        for m in 0..power.size() {
            if x.get(m, k) {
                union |= m;
            }
        }
        s == union
    }))
}

/// `(m,n) ∈ ϑ_R ⟺ n = { y | ∃x ∈ m: (x,y) ∈ R }`.
pub fn oracle_exim(r: &Relation) -> Result<Relation> {
    check_universe(r.src(), "existential image")?;
    check_universe(r.tgt(), "existential image")?;
    let ps = Universe::power(r.src())?;
    let pt = Universe::power(r.tgt())?;
    let image = |m: usize| -> usize {
        let mut n = 0usize;
        for x in power_members(m) {
            for y in 0..r.tgt().size() {
                if r.get(x, y) {
                    n |= 1 << y;
                }
            }
        }
        n
    };
    Ok(Relation::from_fn(&ps, &pt, |m, n| image(m) == n))
}

/// `(m,n) ∈ ζ_R ⟺ (∀x∈m ∃y∈n: R(x,y)) ∧ (∀y∈n ∃x∈m: R(x,y))`.
pub fn oracle_power_relator(r: &Relation) -> Result<Relation> {
    check_universe(r.src(), "power relator")?;
    check_universe(r.tgt(), "power relator")?;
    let ps = Universe::power(r.src())?;
    let pt = Universe::power(r.tgt())?;
    Ok(Relation::from_fn(&ps, &pt, |m, n| {
        let forward = power_members(m)
            .iter()
            .all(|&x| power_members(n).iter().any(|&y| r.get(x, y)));
        let backward = power_members(n)
            .iter()
            .all(|&y| power_members(m).iter().any(|&x| r.get(x, y)));
        forward && backward
    }))
}

/// Elements commuting with everything: `x` is invariant for the operation
/// table `t : (X×X)→X` iff `∀y: x·y = y·x`.
pub fn oracle_invariant_elements(table: &Relation) -> Result<Relation> {
    let pair = table.src().clone();
    let x = table.tgt().clone();
    let (l, r) = pair.pair_parts().ok_or_else(|| Error::TypeMismatch {
        op: "oracle_invariant_elements",
        left: pair.name(),
        right: x.name(),
    })?;
    if *l != x || *r != x {
        return Err(Error::TypeMismatch {
            op: "oracle_invariant_elements",
            left: pair.name(),
            right: x.name(),
        });
    }
    check_cells(table)?;
    let n = x.size();
    let apply = |a: usize, b: usize| -> Option<usize> {
        let row = a * n + b;
        let mut out = None;
        for v in 0..n {
            if table.get(row, v) {
                if out.is_some() {
                    return None;
                }
                out = Some(v);
            }
        }
        out
    };
    Ok(Relation::from_fn(&x, &Universe::unit(), |a, _| {
        (0..n).all(|b| {
            let ab = apply(a, b);
            ab.is_some() && ab == apply(b, a)
        })
    }))
}

//! Direct products and sums with their projections and injections, the
//! constructions layered on top of them (Kronecker product, fork, join,
//! swap, associativity), and the encodings of whole relations as points.

use crate::error::{Error, Result};
use crate::powerset::membership;
use crate::relation::Relation;
use crate::universe::{power_index, power_members, Universe};

/// Witness constructors re-assert their axioms up to this many carrier
/// elements.
const WITNESS_CHECK_CAP: usize = 1 << 12;

/// A pair universe with its two projections.
#[derive(Clone, Debug)]
pub struct ProductWitness {
    pub left: Universe,
    pub right: Universe,
    pub universe: Universe,
    /// First projection `π : X×Y → X`.
    pub pi: Relation,
    /// Second projection `ρ : X×Y → Y`.
    pub rho: Relation,
}

/// Build `X×Y` with its projections.
///
/// The projection axioms `πᵀ∘π = 𝕀`, `ρᵀ∘ρ = 𝕀`, `π∘πᵀ ∩ ρ∘ρᵀ = 𝕀` and
/// `πᵀ∘ρ = ⊤` are re-asserted on small carriers; the two totality axioms
/// only hold when both factors are inhabited, so the check skips empty
/// factors.
pub fn product(x: &Universe, y: &Universe) -> Result<ProductWitness> {
    let p = Universe::pair(x, y)?;
    let ys = y.size();
    let pi = Relation::from_fn(&p, x, |i, a| i / ys == a);
    let rho = Relation::from_fn(&p, y, |i, b| i % ys == b);
    let w = ProductWitness {
        left: x.clone(),
        right: y.clone(),
        universe: p,
        pi,
        rho,
    };
    if w.universe.size() <= WITNESS_CHECK_CAP {
        let id_p = Relation::identity(&w.universe);
        assert_eq!(
            w.pi
                .compose(&w.pi.converse())?
                .intersect(&w.rho.compose(&w.rho.converse())?)?,
            id_p
        );
        if !x.is_empty() && !y.is_empty() {
            assert_eq!(w.pi.converse().compose(&w.pi)?, Relation::identity(x));
            assert_eq!(w.rho.converse().compose(&w.rho)?, Relation::identity(y));
            assert_eq!(w.pi.converse().compose(&w.rho)?, Relation::top(x, y));
        }
    }
    Ok(w)
}

/// A sum universe with its two injections.
#[derive(Clone, Debug)]
pub struct SumWitness {
    pub left: Universe,
    pub right: Universe,
    pub universe: Universe,
    /// Left injection `ι : X → X+Y`.
    pub iota: Relation,
    /// Right injection `κ : Y → X+Y`.
    pub kappa: Relation,
}

/// Build `X+Y` with its injections and re-assert `ι∘ιᵀ = 𝕀`, `κ∘κᵀ = 𝕀`,
/// `ιᵀ∘ι ∪ κᵀ∘κ = 𝕀` and `ι∘κᵀ = ⊥` on small carriers.
pub fn sum(x: &Universe, y: &Universe) -> Result<SumWitness> {
    let s = Universe::sum(x, y)?;
    let xs = x.size();
    let iota = Relation::from_fn(x, &s, |a, i| i == a);
    let kappa = Relation::from_fn(y, &s, |b, i| i == xs + b);
    let w = SumWitness {
        left: x.clone(),
        right: y.clone(),
        universe: s,
        iota,
        kappa,
    };
    if w.universe.size() <= WITNESS_CHECK_CAP {
        assert_eq!(w.iota.compose(&w.iota.converse())?, Relation::identity(x));
        assert_eq!(w.kappa.compose(&w.kappa.converse())?, Relation::identity(y));
        assert_eq!(
            w.iota
                .converse()
                .compose(&w.iota)?
                .union(&w.kappa.converse().compose(&w.kappa)?)?,
            Relation::identity(&w.universe)
        );
        assert_eq!(
            w.iota.compose(&w.kappa.converse())?,
            Relation::bottom(x, y)
        );
    }
    Ok(w)
}

/// Kronecker product `A ⊗ B = π∘A∘π′ᵀ ∩ ρ∘B∘ρ′ᵀ : X×Y → U×V`,
/// relating `(x,y)` to `(u,v)` iff `A(x,u)` and `B(y,v)`.
pub fn kronecker(a: &Relation, b: &Relation) -> Result<Relation> {
    let src = Universe::pair(a.src(), b.src())?;
    let tgt = Universe::pair(a.tgt(), b.tgt())?;
    let (bs, bt) = (b.src().size(), b.tgt().size());
    Ok(Relation::from_fn(&src, &tgt, |i, j| {
        a.get(i / bs, j / bt) && b.get(i % bs, j % bt)
    }))
}

/// Fork (tupling) `⟨C,D⟩ = C∘πᵀ ∩ D∘ρᵀ : Z → X×Y`.
pub fn fork(c: &Relation, d: &Relation) -> Result<Relation> {
    if c.src() != d.src() {
        return Err(Error::TypeMismatch {
            op: "fork",
            left: c.src().name(),
            right: d.src().name(),
        });
    }
    let tgt = Universe::pair(c.tgt(), d.tgt())?;
    let dt = d.tgt().size();
    Ok(Relation::from_fn(c.src(), &tgt, |z, j| {
        c.get(z, j / dt) && d.get(z, j % dt)
    }))
}

/// Join (cotupling from a product) `π∘E ∩ ρ∘F : X×Y → W`.
pub fn join(e: &Relation, f: &Relation) -> Result<Relation> {
    if e.tgt() != f.tgt() {
        return Err(Error::TypeMismatch {
            op: "join",
            left: e.tgt().name(),
            right: f.tgt().name(),
        });
    }
    let src = Universe::pair(e.src(), f.src())?;
    let fs = f.src().size();
    Ok(Relation::from_fn(&src, e.tgt(), |i, w| {
        e.get(i / fs, w) && f.get(i % fs, w)
    }))
}

/// The bijective mapping `X×Y → Y×X`, `(x,y) ↦ (y,x)`.
///
/// Equals `π∘ρ′ᵀ ∩ ρ∘π′ᵀ`.
pub fn swap(x: &Universe, y: &Universe) -> Result<Relation> {
    let src = Universe::pair(x, y)?;
    let tgt = Universe::pair(y, x)?;
    let (xs, ys) = (x.size(), y.size());
    Ok(Relation::from_fn(&src, &tgt, |i, j| {
        i / ys == j % xs && i % ys == j / xs
    }))
}

/// The bijective mapping `(X×Y)×Z → X×(Y×Z)`, `((x,y),z) ↦ (x,(y,z))`.
///
/// Equals `⟨π∘π′, ρ′⊗𝕀⟩` for the nested projections.
pub fn assoc(x: &Universe, y: &Universe, z: &Universe) -> Result<Relation> {
    let xy = Universe::pair(x, y)?;
    let yz = Universe::pair(y, z)?;
    let src = Universe::pair(&xy, z)?;
    let tgt = Universe::pair(x, &yz)?;
    let (ys, zs) = (y.size(), z.size());
    Ok(Relation::from_fn(&src, &tgt, |i, j| {
        let (a, c) = (i / zs, i % zs);
        let (ax, ay) = (a / ys, a % ys);
        let (bx, b) = (j / (ys * zs), j % (ys * zs));
        ax == bx && ay == b / zs && c == b % zs
    }))
}

/// Column-vector encoding `vec(R) = (π∘R ∩ ρ)∘⊤ : X×Y → 1`.
pub fn vec(r: &Relation) -> Result<Relation> {
    let src = Universe::pair(r.src(), r.tgt())?;
    let one = Universe::unit();
    let ts = r.tgt().size();
    Ok(Relation::from_fn(&src, &one, |i, _| r.get(i / ts, i % ts)))
}

/// Decode a vector on a pair universe back into a relation:
/// `unvec(v) = πᵀ∘(v∘⊤ ∩ ρ)`.
pub fn unvec(v: &Relation) -> Result<Relation> {
    let (x, y) = v.src().pair_parts().ok_or(Error::TypeMismatch {
        op: "unvec",
        left: v.src().name(),
        right: "a pair universe".to_string(),
    })?;
    if v.tgt() != &Universe::unit() {
        return Err(Error::TypeMismatch {
            op: "unvec",
            left: v.tgt().name(),
            right: Universe::unit().name(),
        });
    }
    let ys = y.size();
    Ok(Relation::from_fn(&x, &y, |a, b| v.get(a * ys + b, 0)))
}

/// Encode a whole relation as the point of `Power(X×Y)` whose member set is
/// exactly the graph of `R`.  Equals `syq(ε_×, vec(R))`.
pub fn relation_point(r: &Relation) -> Result<Relation> {
    let pair = Universe::pair(r.src(), r.tgt())?;
    let pow = Universe::power(&pair)?;
    let ts = r.tgt().size();
    let members: Vec<usize> = r.pairs().iter().map(|&(a, b)| a * ts + b).collect();
    let idx = power_index(&members);
    Relation::from_pairs(&pow, &Universe::unit(), &[(idx, 0)])
}

/// The point encoding the identity relation, `syq(ε_×, (π∩ρ)∘⊤)`.
pub fn identity_point(x: &Universe) -> Result<Relation> {
    relation_point(&Relation::identity(x))
}

/// The point encoding the empty relation, `syq(ε_×, ⊥)`.
pub fn bot_point(x: &Universe, y: &Universe) -> Result<Relation> {
    relation_point(&Relation::bottom(x, y))
}

/// The point encoding the universal relation, `syq(ε_×, ⊤)`.
pub fn top_point(x: &Universe, y: &Universe) -> Result<Relation> {
    relation_point(&Relation::top(x, y))
}

/// Decode a point of `Power(X×Y)` back into the relation it denotes,
/// `unvec(ε_× ∘ p)`.
pub fn point_decode(p: &Relation) -> Result<Relation> {
    if !p.is_point() {
        return Err(Error::NotAPoint {
            which: "point_decode argument".to_string(),
        });
    }
    let base = p.src().power_base().ok_or(Error::TypeMismatch {
        op: "point_decode",
        left: p.src().name(),
        right: "a powerset universe".to_string(),
    })?;
    let (x, y) = base.pair_parts().ok_or(Error::TypeMismatch {
        op: "point_decode",
        left: base.name(),
        right: "a pair universe".to_string(),
    })?;
    let m = (0..p.src().size())
        .find(|&i| p.get(i, 0))
        .expect("a point has exactly one member");
    let ys = y.size();
    let pairs: Vec<(usize, usize)> = power_members(m).iter().map(|&e| (e / ys, e % ys)).collect();
    Relation::from_pairs(&x, &y, &pairs)
}

/// The bijective mapping `Power(X×Y) → Power(Y×X)` induced by swapping,
/// `𝒯 = syq(Pᵀ∘ε, ε′)`; it carries the point of `R` to the point of `Rᵀ`.
pub fn transposition_point_map(x: &Universe, y: &Universe) -> Result<Relation> {
    let pair = Universe::pair(x, y)?;
    let pair_t = Universe::pair(y, x)?;
    let pow = Universe::power(&pair)?;
    let pow_t = Universe::power(&pair_t)?;
    let cells = pow.size() as u128 * pow_t.size() as u128;
    if cells > (1 << 26) {
        return Err(Error::CapExceeded {
            universe: format!("({})x({})", pow.name(), pow_t.name()),
            requested: cells,
            cap: 1 << 26,
        });
    }
    let (xs, ys) = (x.size(), y.size());
    let flip = |m: usize| {
        let members: Vec<usize> = power_members(m)
            .iter()
            .map(|&e| (e % ys) * xs + e / ys)
            .collect();
        power_index(&members)
    };
    let pairs: Vec<(usize, usize)> = (0..pow.size()).map(|m| (m, flip(m))).collect();
    Relation::from_pairs(&pow, &pow_t, &pairs)
}

/// Verify the addition theorem
/// `syq(S, ιᵀ∘Q∘πᵀ ∪ κᵀ∘R∘ρᵀ) = ⟨syq(ι∘S, Q), syq(κ∘S, R)⟩`
/// for `S : X+Y → W`, `Q : X → U`, `R : Y → V`.
pub fn addition_theorem_check(s: &Relation, q: &Relation, r: &Relation) -> Result<bool> {
    let sw = sum(q.src(), r.src())?;
    if s.src() != &sw.universe {
        return Err(Error::TypeMismatch {
            op: "addition_theorem_check",
            left: s.src().name(),
            right: sw.universe.name(),
        });
    }
    let pw = product(q.tgt(), r.tgt())?;
    let mixed = sw
        .iota
        .converse()
        .compose(q)?
        .compose(&pw.pi.converse())?
        .union(
            &sw.kappa
                .converse()
                .compose(r)?
                .compose(&pw.rho.converse())?,
        )?;
    let lhs = s.syq(&mixed)?;
    let rhs = fork(
        &sw.iota.compose(s)?.syq(q)?,
        &sw.kappa.compose(s)?.syq(r)?,
    )?;
    Ok(lhs == rhs)
}

/// The canonical isomorphism between the powerset of a sum and the product
/// of the powersets.
#[derive(Clone, Debug)]
pub struct SumPowerIso {
    pub sum: SumWitness,
    pub product: ProductWitness,
    /// The relation `ε₊ = ιᵀ∘ε_X∘πᵀ ∪ κᵀ∘ε_Y∘ρᵀ : X+Y → Power(X)×Power(Y)`.
    pub epsilon_plus: Relation,
    /// The bijection `φ = syq(ε′, ε₊) : Power(X+Y) → Power(X)×Power(Y)`.
    pub phi: Relation,
}

/// Build `ε₊` and `φ` for the sum `X+Y`; `φ` splits a subset of the sum
/// into its two halves.
pub fn sum_power_iso(x: &Universe, y: &Universe) -> Result<SumPowerIso> {
    let sw = sum(x, y)?;
    let px = Universe::power(x)?;
    let py = Universe::power(y)?;
    let pw = product(&px, &py)?;
    let eps_x = membership(x)?.epsilon;
    let eps_y = membership(y)?.epsilon;
    let epsilon_plus = sw
        .iota
        .converse()
        .compose(&eps_x)?
        .compose(&pw.pi.converse())?
        .union(
            &sw.kappa
                .converse()
                .compose(&eps_y)?
                .compose(&pw.rho.converse())?,
        )?;
    let eps_sum = membership(&sw.universe)?.epsilon;
    let phi = eps_sum.syq(&epsilon_plus)?;
    assert!(phi.is_mapping() && phi.is_injective() && phi.is_surjective());
    Ok(SumPowerIso {
        sum: sw,
        product: pw,
        epsilon_plus,
        phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> (Universe, Universe) {
        (
            Universe::atomic("X", &["1", "2"]).unwrap(),
            Universe::atomic("Y", &["a", "b", "c"]).unwrap(),
        )
    }

    #[test]
    fn projections_project() {
        let (x, y) = small();
        let w = product(&x, &y).unwrap();
        // (2,b) is index 1*3+1 = 4.
        assert!(w.pi.get(4, 1));
        assert!(w.rho.get(4, 1));
        assert!(!w.pi.get(4, 0));
    }

    #[test]
    fn kronecker_componentwise() {
        let (x, y) = small();
        let a = Relation::from_pairs(&x, &x, &[(0, 1)]).unwrap();
        let b = Relation::from_pairs(&y, &y, &[(2, 0)]).unwrap();
        let k = kronecker(&a, &b).unwrap();
        // (1,c) ↦ (2,a): indices 0*3+2=2 and 1*3+0=3.
        assert_eq!(k.pairs(), vec![(2, 3)]);
    }

    #[test]
    fn fork_join_against_formulas() {
        let (x, y) = small();
        let z = Universe::atomic("Z", &["u", "v"]).unwrap();
        let w = product(&x, &y).unwrap();
        let c = Relation::from_pairs(&z, &x, &[(0, 0), (1, 1)]).unwrap();
        let d = Relation::from_pairs(&z, &y, &[(0, 2), (1, 0), (1, 1)]).unwrap();
        let direct = fork(&c, &d).unwrap();
        let formula = c
            .compose(&w.pi.converse())
            .unwrap()
            .intersect(&d.compose(&w.rho.converse()).unwrap())
            .unwrap();
        assert_eq!(direct, formula);

        let e = c.converse();
        let f = d.converse();
        let direct = join(&e, &f).unwrap();
        let formula = w
            .pi
            .compose(&e)
            .unwrap()
            .intersect(&w.rho.compose(&f).unwrap())
            .unwrap();
        assert_eq!(direct, formula);
    }

    #[test]
    fn vec_unvec_roundtrip() {
        let (x, y) = small();
        let r = Relation::from_pairs(&x, &y, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(unvec(&vec(&r).unwrap()).unwrap(), r);
    }

    #[test]
    fn relation_point_roundtrip() {
        let (x, y) = small();
        let r = Relation::from_pairs(&x, &y, &[(0, 0), (1, 2)]).unwrap();
        let p = relation_point(&r).unwrap();
        assert!(p.is_point());
        assert_eq!(point_decode(&p).unwrap(), r);
    }

    #[test]
    fn transposition_carries_points() {
        let (x, y) = small();
        let r = Relation::from_pairs(&x, &y, &[(0, 0), (1, 1), (1, 2)]).unwrap();
        let t = transposition_point_map(&x, &y).unwrap();
        let carried = relation_point(&r).unwrap().converse().compose(&t).unwrap();
        assert_eq!(
            carried.converse(),
            relation_point(&r.converse()).unwrap()
        );
    }

    #[test]
    fn swap_assoc_are_bijections() {
        let (x, y) = small();
        let z = Universe::atomic("Z", &["u"]).unwrap();
        for m in [swap(&x, &y).unwrap(), assoc(&x, &y, &z).unwrap()] {
            assert!(m.is_mapping() && m.is_injective() && m.is_surjective());
        }
    }

    #[test]
    fn sum_power_iso_splits_subsets() {
        let x = Universe::atomic("X", &["1", "2"]).unwrap();
        let y = Universe::atomic("Y", &["a"]).unwrap();
        let iso = sum_power_iso(&x, &y).unwrap();
        // {2,a} ⊆ X+Y is index 2+4=6; halves are {2} (index 2) and {a} (index 1).
        let image: Vec<usize> = iso.phi.row_ones(6).collect();
        assert_eq!(image, vec![2 * 2 + 1]);
    }
}

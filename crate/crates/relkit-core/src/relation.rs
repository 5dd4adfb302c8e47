//! The relation value type: an immutable Boolean matrix between two
//! universes, with the usual typed algebra on top.

use std::fmt;

use crate::bitmat::BitMat;
use crate::error::{Error, Result};
use crate::universe::Universe;

/// A binary relation `src → tgt`, stored as a packed bit matrix whose rows
/// are indexed by `src` and columns by `tgt` in their canonical orders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: Universe,
    tgt: Universe,
    bits: BitMat,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Relation({} -> {}, {}x{})",
            self.src.name(),
            self.tgt.name(),
            self.src.size(),
            self.tgt.size()
        )
    }
}

impl Relation {
    /// The empty relation.
    pub fn bottom(src: &Universe, tgt: &Universe) -> Relation {
        Relation {
            src: src.clone(),
            tgt: tgt.clone(),
            bits: BitMat::zero(src.size(), tgt.size()),
        }
    }

    /// The universal relation.
    pub fn top(src: &Universe, tgt: &Universe) -> Relation {
        Relation::bottom(src, tgt).negate()
    }

    /// The identity relation on `u`.
    pub fn identity(u: &Universe) -> Relation {
        Relation::from_fn(u, u, |i, j| i == j)
    }

    /// Build a relation by evaluating `f` at every index pair.
    pub fn from_fn(src: &Universe, tgt: &Universe, f: impl Fn(usize, usize) -> bool) -> Relation {
        let mut bits = BitMat::zero(src.size(), tgt.size());
        for i in 0..src.size() {
            for j in 0..tgt.size() {
                if f(i, j) {
                    bits.set(i, j, true);
                }
            }
        }
        Relation {
            src: src.clone(),
            tgt: tgt.clone(),
            bits,
        }
    }

    /// Build a relation from explicit index pairs.
    pub fn from_pairs(src: &Universe, tgt: &Universe, pairs: &[(usize, usize)]) -> Result<Relation> {
        let mut bits = BitMat::zero(src.size(), tgt.size());
        for &(i, j) in pairs {
            if i >= src.size() {
                return Err(Error::IndexOutOfRange {
                    universe: src.name(),
                    index: i,
                    size: src.size(),
                });
            }
            if j >= tgt.size() {
                return Err(Error::IndexOutOfRange {
                    universe: tgt.name(),
                    index: j,
                    size: tgt.size(),
                });
            }
            bits.set(i, j, true);
        }
        Ok(Relation {
            src: src.clone(),
            tgt: tgt.clone(),
            bits,
        })
    }

    pub fn src(&self) -> &Universe {
        &self.src
    }

    pub fn tgt(&self) -> &Universe {
        &self.tgt
    }

    /// Whether the pair at the given indices is in the relation.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits.get(i, j)
    }

    /// All pairs of the relation, row-major.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.src.size())
            .flat_map(|i| self.bits.row_ones(i).map(move |j| (i, j)).collect::<Vec<_>>())
            .collect()
    }

    /// Column indices of the set bits in row `i`.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.bits.row_ones(i)
    }

    pub fn count(&self) -> usize {
        (0..self.src.size()).map(|i| self.bits.count_row(i)).sum()
    }

    pub fn is_empty_relation(&self) -> bool {
        self.bits.is_zero()
    }

    fn same_type(&self, other: &Relation, op: &'static str) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::TypeMismatch {
                op,
                left: format!("{} -> {}", self.src.name(), self.tgt.name()),
                right: format!("{} -> {}", other.src.name(), other.tgt.name()),
            });
        }
        Ok(())
    }

    // ---- Boolean lattice ----

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_type(other, "union")?;
        Ok(Relation {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            bits: self.bits.union(&other.bits),
        })
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.same_type(other, "intersect")?;
        Ok(Relation {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            bits: self.bits.intersect(&other.bits),
        })
    }

    pub fn negate(&self) -> Relation {
        Relation {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            bits: self.bits.negate(),
        }
    }

    /// Whether `other ⊑ self`.
    pub fn includes(&self, other: &Relation) -> Result<bool> {
        self.same_type(other, "includes")?;
        Ok(self.bits.includes(&other.bits))
    }

    // ---- Composition and converse ----

    pub fn converse(&self) -> Relation {
        Relation {
            src: self.tgt.clone(),
            tgt: self.src.clone(),
            bits: self.bits.transpose(),
        }
    }

    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if self.tgt != other.src {
            return Err(Error::TypeMismatch {
                op: "compose",
                left: format!("{} -> {}", self.src.name(), self.tgt.name()),
                right: format!("{} -> {}", other.src.name(), other.tgt.name()),
            });
        }
        Ok(Relation {
            src: self.src.clone(),
            tgt: other.tgt.clone(),
            bits: self.bits.compose(&other.bits),
        })
    }

    // ---- Residuals and symmetric quotient ----

    /// `C/B := ¬(¬C∘Bᵀ)` for `C: X→Z`, `B: Y→Z`; the greatest `A: X→Y`
    /// with `A∘B ⊑ C`.
    pub fn left_residual(&self, b: &Relation) -> Result<Relation> {
        if self.tgt != b.tgt {
            return Err(Error::TypeMismatch {
                op: "left_residual",
                left: format!("{} -> {}", self.src.name(), self.tgt.name()),
                right: format!("{} -> {}", b.src.name(), b.tgt.name()),
            });
        }
        Ok(self
            .negate()
            .compose(&b.converse())
            .expect("types checked")
            .negate())
    }

    /// `A\C := ¬(Aᵀ∘¬C)` for `A: X→Y`, `C: X→Z`; the greatest `B: Y→Z`
    /// with `A∘B ⊑ C`.
    pub fn right_residual(&self, c: &Relation) -> Result<Relation> {
        if self.src != c.src {
            return Err(Error::TypeMismatch {
                op: "right_residual",
                left: format!("{} -> {}", self.src.name(), self.tgt.name()),
                right: format!("{} -> {}", c.src.name(), c.tgt.name()),
            });
        }
        Ok(self
            .converse()
            .compose(&c.negate())
            .expect("types checked")
            .negate())
    }

    /// `syq(R,S) := ¬(Rᵀ∘¬S) ∩ ¬(¬Rᵀ∘S)`; relates column `w` of `R` to
    /// column `z` of `S` exactly when the columns are equal.
    pub fn syq(&self, s: &Relation) -> Result<Relation> {
        if self.src != s.src {
            return Err(Error::TypeMismatch {
                op: "syq",
                left: format!("{} -> {}", self.src.name(), self.tgt.name()),
                right: format!("{} -> {}", s.src.name(), s.tgt.name()),
            });
        }
        let a = self.converse().compose(&s.negate()).expect("types checked");
        let b = self
            .negate()
            .converse()
            .compose(s)
            .expect("types checked");
        a.negate().intersect(&b.negate())
    }

    // ---- Predicates ----

    /// Each source element relates to at most one target: `Rᵀ∘R ⊑ 𝕀`.
    pub fn is_univalent(&self) -> bool {
        (0..self.src.size()).all(|i| self.bits.count_row(i) <= 1)
    }

    /// Each source element relates to at least one target: `𝕀 ⊑ R∘Rᵀ`.
    pub fn is_total(&self) -> bool {
        (0..self.src.size()).all(|i| self.bits.count_row(i) >= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.converse().is_univalent()
    }

    pub fn is_surjective(&self) -> bool {
        self.converse().is_total()
    }

    pub fn is_mapping(&self) -> bool {
        self.is_univalent() && self.is_total()
    }

    /// Row-constant: `R = R∘⊤`.
    pub fn is_vector(&self) -> bool {
        let top = Relation::top(&self.tgt, &self.tgt);
        self.compose(&top).expect("endo top") == *self
    }

    /// `x∘⊤ = x`, `x∘xᵀ ⊑ 𝕀`, `⊤∘x = ⊤`: a vector singling out one element.
    pub fn is_point(&self) -> bool {
        self.is_vector() && self.is_injective() && self.is_surjective()
    }

    fn homogeneous(&self, op: &'static str) -> Result<()> {
        if self.src != self.tgt {
            return Err(Error::TypeMismatch {
                op,
                left: self.src.name(),
                right: self.tgt.name(),
            });
        }
        Ok(())
    }

    pub fn is_reflexive(&self) -> Result<bool> {
        self.homogeneous("is_reflexive")?;
        Ok((0..self.src.size()).all(|i| self.get(i, i)))
    }

    pub fn is_transitive(&self) -> Result<bool> {
        self.homogeneous("is_transitive")?;
        let sq = self.compose(self).expect("homogeneous");
        self.includes(&sq)
    }

    pub fn is_symmetric(&self) -> Result<bool> {
        self.homogeneous("is_symmetric")?;
        Ok(self.converse() == *self)
    }

    pub fn is_antisymmetric(&self) -> Result<bool> {
        self.homogeneous("is_antisymmetric")?;
        let both = self.intersect(&self.converse()).expect("homogeneous");
        Ok((0..self.src.size())
            .all(|i| both.row_ones(i).all(|j| i == j)))
    }

    pub fn is_preorder(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_transitive()?)
    }

    pub fn is_order(&self) -> Result<bool> {
        Ok(self.is_preorder()? && self.is_antisymmetric()?)
    }

    pub fn is_equivalence(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_symmetric()? && self.is_transitive()?)
    }
}

/// Labeled `1`/`.` grid; the shape counterexamples are printed in.
impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_labels = self.src.labels();
        let col_labels = self.tgt.labels();
        let left_w = row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
        let col_ws: Vec<usize> = col_labels.iter().map(|l| l.len().max(1)).collect();
        write!(f, "{:left_w$} ", "")?;
        for (l, w) in col_labels.iter().zip(&col_ws) {
            write!(f, " {:>w$}", l)?;
        }
        writeln!(f)?;
        for i in 0..self.src.size() {
            write!(f, "{:>left_w$} ", row_labels[i])?;
            for (j, w) in col_ws.iter().enumerate() {
                write!(f, " {:>w$}", if self.get(i, j) { "1" } else { "." })?;
            }
            if i + 1 < self.src.size() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

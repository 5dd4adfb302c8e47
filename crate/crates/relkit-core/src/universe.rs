//! Labeled finite carrier sets.
//!
//! A [`Universe`] is an immutable, cheaply clonable description of a finite
//! set together with a canonical enumeration of its elements. Universes are
//! compared structurally: two universes built the same way are the same type,
//! no matter where they were constructed.
//!
//! Canonical element orders:
//!
//! * `Atomic` — declaration order of the labels.
//! * `Pair(l, r)` — row-major, the left component varies slowest:
//!   `index = il * size(r) + ir`.
//! * `Sum(l, r)` — all left elements first, then all right elements.
//! * `Power(b)` — binary counting where base element `0` is the least
//!   significant bit, so the subset's index *is* its bitmask:
//!   `{}, {a}, {b}, {a,b}, {c}, ...`.
//! * `Unit` — the single element `*`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default ceiling on universe sizes; guards accidental `Power(Power(..))`.
pub const SIZE_CAP: usize = 1 << 20;

#[derive(Debug, PartialEq, Eq, Hash)]
enum Kind {
    Atomic { name: String, labels: Vec<String> },
    Pair(Universe, Universe),
    Sum(Universe, Universe),
    Power(Universe),
    Unit,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    kind: Kind,
    size: usize,
}

/// A finite labeled set; the source or target type of a [`crate::Relation`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Universe(Arc<Inner>);

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe({}, size {})", self.name(), self.size())
    }
}

impl Universe {
    fn new(kind: Kind, size: usize) -> Self {
        Universe(Arc::new(Inner { kind, size }))
    }

    /// A named atomic universe with the given element labels.
    pub fn atomic(name: &str, labels: &[&str]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel {
                    universe: name.to_string(),
                    label: l.clone(),
                });
            }
        }
        let size = labels.len();
        Ok(Universe::new(
            Kind::Atomic {
                name: name.to_string(),
                labels,
            },
            size,
        ))
    }

    /// The one-element universe `1` with element `*`.
    pub fn unit() -> Self {
        Universe::new(Kind::Unit, 1)
    }

    /// Direct product `X × Y` in row-major order.
    pub fn pair(left: &Universe, right: &Universe) -> Result<Self> {
        Self::pair_with_cap(left, right, SIZE_CAP)
    }

    pub fn pair_with_cap(left: &Universe, right: &Universe, cap: usize) -> Result<Self> {
        let requested = left.size() as u128 * right.size() as u128;
        if requested > cap as u128 {
            return Err(Error::CapExceeded {
                universe: format!("({}x{})", left.name(), right.name()),
                requested,
                cap,
            });
        }
        Ok(Universe::new(
            Kind::Pair(left.clone(), right.clone()),
            requested as usize,
        ))
    }

    /// Direct sum `X + Y`; left block first.
    pub fn sum(left: &Universe, right: &Universe) -> Result<Self> {
        Self::sum_with_cap(left, right, SIZE_CAP)
    }

    pub fn sum_with_cap(left: &Universe, right: &Universe, cap: usize) -> Result<Self> {
        let requested = left.size() as u128 + right.size() as u128;
        if requested > cap as u128 {
            return Err(Error::CapExceeded {
                universe: format!("({}+{})", left.name(), right.name()),
                requested,
                cap,
            });
        }
        Ok(Universe::new(
            Kind::Sum(left.clone(), right.clone()),
            requested as usize,
        ))
    }

    /// Powerset `P(X)` in binary-counting order; `Power(empty)` has the one
    /// element `{}`.
    pub fn power(base: &Universe) -> Result<Self> {
        Self::power_with_cap(base, SIZE_CAP)
    }

    pub fn power_with_cap(base: &Universe, cap: usize) -> Result<Self> {
        if base.size() >= 128 {
            return Err(Error::CapExceeded {
                universe: format!("P({})", base.name()),
                requested: u128::MAX,
                cap,
            });
        }
        let requested: u128 = 1u128 << base.size();
        if requested > cap as u128 {
            return Err(Error::CapExceeded {
                universe: format!("P({})", base.name()),
                requested,
                cap,
            });
        }
        Ok(Universe::new(Kind::Power(base.clone()), requested as usize))
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn is_empty(&self) -> bool {
        self.0.size == 0
    }

    /// A display name: atomic universes keep their declared name, constructed
    /// ones get `(XxY)`, `(X+Y)`, `P(X)`, `1`.
    pub fn name(&self) -> String {
        match &self.0.kind {
            Kind::Atomic { name, .. } => name.clone(),
            Kind::Pair(l, r) => format!("({}x{})", l.name(), r.name()),
            Kind::Sum(l, r) => format!("({}+{})", l.name(), r.name()),
            Kind::Power(b) => format!("P({})", b.name()),
            Kind::Unit => "1".to_string(),
        }
    }

    /// The base universe of a powerset, if this is one.
    pub fn power_base(&self) -> Option<&Universe> {
        match &self.0.kind {
            Kind::Power(b) => Some(b),
            _ => None,
        }
    }

    /// Components of a pair universe, if this is one.
    pub fn pair_parts(&self) -> Option<(&Universe, &Universe)> {
        match &self.0.kind {
            Kind::Pair(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Components of a sum universe, if this is one.
    pub fn sum_parts(&self) -> Option<(&Universe, &Universe)> {
        match &self.0.kind {
            Kind::Sum(l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// Label of element `i` under the canonical enumeration.
    pub fn element_label(&self, i: usize) -> Result<String> {
        if i >= self.size() {
            return Err(Error::IndexOutOfRange {
                universe: self.name(),
                index: i,
                size: self.size(),
            });
        }
        Ok(match &self.0.kind {
            Kind::Atomic { labels, .. } => labels[i].clone(),
            Kind::Pair(l, r) => {
                let (il, ir) = (i / r.size(), i % r.size());
                format!("({},{})", l.element_label(il)?, r.element_label(ir)?)
            }
            Kind::Sum(l, r) => {
                if i < l.size() {
                    format!("{}<", l.element_label(i)?)
                } else {
                    format!(">{}", r.element_label(i - l.size())?)
                }
            }
            Kind::Power(b) => {
                let members = power_members(i);
                let labels: Vec<String> = members
                    .iter()
                    .map(|&m| b.element_label(m))
                    .collect::<Result<_>>()?;
                format!("{{{}}}", labels.join(","))
            }
            Kind::Unit => "*".to_string(),
        })
    }

    /// Index of an atomic label, if present. Constructed universes have
    /// derived labels and are not searched.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        match &self.0.kind {
            Kind::Atomic { labels, .. } => labels.iter().position(|l| l == label),
            Kind::Unit => (label == "*").then_some(0),
            _ => None,
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size())
            .map(|i| self.element_label(i).expect("index in range"))
            .collect()
    }
}

/// Index into `Power(U)` of the subset with the given member indices.
/// The index is the bitmask with base element 0 least significant.
pub fn power_index(members: &[usize]) -> usize {
    members.iter().fold(0, |acc, &m| acc | (1 << m))
}

/// Member indices of the subset at `index` in `Power(U)`, ascending.
pub fn power_members(index: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = index;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        out.push(bit);
        rest &= rest - 1;
    }
    out
}

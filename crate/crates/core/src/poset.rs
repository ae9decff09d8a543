//! Coefficient-wise dominance between graphs of equal order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::enumerate::FamilyCatalog;
use crate::error::{Error, Result};
use crate::spectra::CoeffVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosetRel {
    Equal,
    /// Every coefficient of the left vector is `<=`, at least one `<`.
    LessStrict,
    GreaterStrict,
    Incomparable,
}

impl PosetRel {
    pub fn reversed(self) -> PosetRel {
        match self {
            PosetRel::LessStrict => PosetRel::GreaterStrict,
            PosetRel::GreaterStrict => PosetRel::LessStrict,
            other => other,
        }
    }

    /// `a ⪯ b`.
    pub fn is_le(self) -> bool {
        matches!(self, PosetRel::Equal | PosetRel::LessStrict)
    }
}

pub fn compare(a: &CoeffVector, b: &CoeffVector) -> Result<PosetRel> {
    if a.c.len() != b.c.len() {
        return Err(Error::LengthMismatch(a.c.len(), b.c.len()));
    }
    let (mut less, mut greater) = (false, false);
    for (x, y) in a.c.iter().zip(&b.c) {
        match x.cmp(y) {
            Ordering::Less => less = true,
            Ordering::Greater => greater = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (less, greater) {
        (false, false) => PosetRel::Equal,
        (true, false) => PosetRel::LessStrict,
        (false, true) => PosetRel::GreaterStrict,
        (true, true) => PosetRel::Incomparable,
    })
}

/// Indices where `a` is strictly below / strictly above `b`.
pub fn strict_indices(a: &CoeffVector, b: &CoeffVector) -> (Vec<usize>, Vec<usize>) {
    let mut below = Vec::new();
    let mut above = Vec::new();
    for (k, (x, y)) in a.c.iter().zip(&b.c).enumerate() {
        match x.cmp(y) {
            Ordering::Less => below.push(k),
            Ordering::Greater => above.push(k),
            Ordering::Equal => {}
        }
    }
    (below, above)
}

/// Members not strictly dominated from below by another member.
pub fn minimal_elements(catalog: &FamilyCatalog) -> FamilyCatalog {
    let members = &catalog.members;
    let keep = |i: usize| {
        !members.iter().enumerate().any(|(j, h)| {
            j != i && compare(&h.coeffs, &members[i].coeffs) == Ok(PosetRel::LessStrict)
        })
    };
    FamilyCatalog {
        members: (0..members.len())
            .filter(|&i| keep(i))
            .map(|i| members[i].clone())
            .collect(),
        ..catalog.clone()
    }
}

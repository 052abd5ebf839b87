//! Cosets `W_P \ W` for the parabolic subgroup generated by `s_2, ..., s_n`.
//!
//! Left multiplication by `W_P` permutes the values `±2..±n`, so a coset is
//! determined by where `1` or `-1` sits in one-line notation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::{LieType, SignedPermutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CosetSign {
    Positive,
    Negative,
}

impl CosetSign {
    fn value(self) -> i32 {
        match self {
            CosetSign::Positive => 1,
            CosetSign::Negative => -1,
        }
    }
}

/// Which of the `2n` cosets an element lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CosetDescriptor {
    pub sign: CosetSign,
    /// 1-based position of `1` or `-1` in one-line notation.
    pub position: usize,
}

impl CosetDescriptor {
    pub fn new(sign: CosetSign, position: usize, rank: usize) -> Result<Self> {
        if position == 0 || position > rank {
            return Err(Error::InvalidPosition { position, rank });
        }
        Ok(Self { sign, position })
    }

    pub fn of(w: &SignedPermutation) -> Self {
        match w.position_of(1) {
            Some(position) => Self {
                sign: CosetSign::Positive,
                position,
            },
            None => Self {
                sign: CosetSign::Negative,
                position: w.position_of(-1).expect("1 or -1 occurs"),
            },
        }
    }

    /// All `2n` cosets, positive first, by position.
    pub fn all(rank: usize) -> Vec<Self> {
        [CosetSign::Positive, CosetSign::Negative]
            .into_iter()
            .flat_map(|sign| (1..=rank).map(move |position| Self { sign, position }))
            .collect()
    }
}

impl fmt::Display for CosetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            CosetSign::Positive => '+',
            CosetSign::Negative => '-',
        };
        write!(f, "{sign}@{}", self.position)
    }
}

fn place(desc: CosetDescriptor, rest: Vec<i32>, rank: usize, lie_type: LieType) -> Result<SignedPermutation> {
    let mut rest = rest.into_iter();
    let images = (1..=rank)
        .map(|p| {
            if p == desc.position {
                desc.sign.value()
            } else {
                rest.next().expect("n-1 remaining values")
            }
        })
        .collect();
    SignedPermutation::new(images, lie_type, rank)
}

/// The minimal-length element of a coset.
pub fn coset_min_rep(desc: CosetDescriptor, rank: usize, lie_type: LieType) -> Result<SignedPermutation> {
    CosetDescriptor::new(desc.sign, desc.position, rank)?;
    let n = rank as i32;
    let mut rest: Vec<i32> = (2..=n).collect();
    if lie_type == LieType::D && desc.sign == CosetSign::Negative {
        rest[rank - 2] = -n;
    }
    place(desc, rest, rank, lie_type)
}

/// The maximal-length element of a coset.
pub fn coset_max_rep(desc: CosetDescriptor, rank: usize, lie_type: LieType) -> Result<SignedPermutation> {
    CosetDescriptor::new(desc.sign, desc.position, rank)?;
    let n = rank as i32;
    let mut rest: Vec<i32> = (2..=n).map(|x| -x).collect();
    if lie_type == LieType::D {
        // Parity: exactly one of the two coset signs keeps n-bar.
        let last_positive = match desc.sign {
            CosetSign::Positive => rank.is_multiple_of(2),
            CosetSign::Negative => rank % 2 == 1,
        };
        if last_positive {
            rest[rank - 2] = n;
        }
    }
    place(desc, rest, rank, lie_type)
}

pub fn is_min_rep(w: &SignedPermutation) -> bool {
    coset_min_rep(CosetDescriptor::of(w), w.rank(), w.lie_type()).is_ok_and(|m| &m == w)
}

pub fn is_max_rep(w: &SignedPermutation) -> bool {
    coset_max_rep(CosetDescriptor::of(w), w.rank(), w.lie_type()).is_ok_and(|m| &m == w)
}

/// Whether `u >= v` in Bruhat order, for `u` a maximal and `v` a minimal
/// coset representative, by the closed-form criterion on the positions of
/// `1` and `-1`.
pub fn descriptor_comparable(u: &SignedPermutation, v: &SignedPermutation) -> Result<bool> {
    u.multiply(v)?;
    if !is_max_rep(u) {
        return Err(Error::NotCosetRepresentative(u.to_string(), "maximal"));
    }
    if !is_min_rep(v) {
        return Err(Error::NotCosetRepresentative(v.to_string(), "minimal"));
    }
    let n = u.rank();
    let (du, dv) = (CosetDescriptor::of(u), CosetDescriptor::of(v));
    Ok(match (dv.sign, du.sign) {
        (CosetSign::Positive, CosetSign::Negative) => {
            !(u.lie_type() == LieType::D && dv.position == n && du.position == n)
        }
        (CosetSign::Positive, CosetSign::Positive) => du.position >= dv.position,
        (CosetSign::Negative, CosetSign::Negative) => du.position <= dv.position,
        (CosetSign::Negative, CosetSign::Positive) => false,
    })
}

/// All `(u, v)` with `u` a maximal and `v` a positive minimal representative
/// and `u >= v`, ordered by `(v, u)` descriptors.
pub fn positive_comparable_pairs(rank: usize, lie_type: LieType) -> Vec<(SignedPermutation, SignedPermutation)> {
    let mut pairs = Vec::new();
    for dv in CosetDescriptor::all(rank) {
        if dv.sign != CosetSign::Positive {
            continue;
        }
        let v = coset_min_rep(dv, rank, lie_type).expect("valid descriptor");
        for du in CosetDescriptor::all(rank) {
            let u = coset_max_rep(du, rank, lie_type).expect("valid descriptor");
            if descriptor_comparable(&u, &v).expect("representatives") {
                pairs.push((u, v.clone()));
            }
        }
    }
    pairs
}

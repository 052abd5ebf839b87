//! The clan attached to an `L`-stable Richardson variety `X_u^v` and the
//! resulting rule for `c_{w0 u, v}^w`.

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{act_word, WordAction};
use crate::clan::{clan_with, Clan, ClanChar};
use crate::coset::{descriptor_comparable, CosetDescriptor, CosetSign};
use crate::error::{Error, Result};
use crate::weyl::{elements_of_length, LieType, SignedPermutation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairCaseId {
    /// Both positive, `v^-1(1) = u^-1(1)`.
    C1BothPositiveEqual,
    /// Both positive, `v^-1(1) < u^-1(1)`.
    C2BothPositiveLess,
    /// `u` negative, `v^-1(1) != u^-1(-1)`.
    C3MixedDistinct,
    /// `u` negative, `v^-1(1) = u^-1(-1) < n`.
    C4MixedEqualBelowN,
    /// `u` negative, `v^-1(1) = u^-1(-1) = n` (type B only).
    C5MixedEqualN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairCase {
    pub id: PairCaseId,
    /// `v^-1(1)`.
    pub i: usize,
    /// `u^-1(1)` or `u^-1(-1)`.
    pub j: usize,
}

impl PairCase {
    /// Whether the clan's `K`-orbit splits into two `L`-orbits, one of which
    /// is `X_u^v`.
    pub fn is_split(&self) -> bool {
        matches!(
            self.id,
            PairCaseId::C1BothPositiveEqual | PairCaseId::C2BothPositiveLess | PairCaseId::C3MixedDistinct
        )
    }
}

/// Validates `(u, v)` and sorts it into one of the five cases.
pub fn classify_pair(u: &SignedPermutation, v: &SignedPermutation) -> Result<PairCase> {
    let comparable = descriptor_comparable(u, v)?;
    let (du, dv) = (CosetDescriptor::of(u), CosetDescriptor::of(v));
    if dv.sign == CosetSign::Negative {
        return Err(Error::NegativeVNotSupported(v.to_string()));
    }
    let n = u.rank();
    let (i, j) = (dv.position, du.position);
    if !comparable {
        if u.lie_type() == LieType::D && du.sign == CosetSign::Negative && i == n && j == n {
            return Err(Error::TypeDCase5Excluded);
        }
        return Err(Error::IncomparablePair {
            u: u.to_string(),
            v: v.to_string(),
        });
    }
    let id = match du.sign {
        CosetSign::Positive if i == j => PairCaseId::C1BothPositiveEqual,
        CosetSign::Positive => PairCaseId::C2BothPositiveLess,
        CosetSign::Negative if i != j => PairCaseId::C3MixedDistinct,
        CosetSign::Negative if i < n => PairCaseId::C4MixedEqualBelowN,
        CosetSign::Negative => PairCaseId::C5MixedEqualN,
    };
    Ok(PairCase { id, i, j })
}

fn clan_length(rank: usize, lie_type: LieType) -> usize {
    match lie_type {
        LieType::B => 2 * rank + 1,
        LieType::D => 2 * rank,
    }
}

/// The clan `γ(u, v)` for a maximal representative `u` and a positive
/// minimal representative `v` with `u >= v`.
pub fn gamma_of_pair(u: &SignedPermutation, v: &SignedPermutation) -> Result<Clan> {
    let case = classify_pair(u, v)?;
    let (n, len) = (u.rank(), clan_length(u.rank(), u.lie_type()));
    let m = |p: usize| len + 1 - p;
    let (i, j) = (case.i, case.j);
    let (one, two, plus) = (ClanChar::Number(1), ClanChar::Number(2), ClanChar::Plus);
    let entries: Vec<(usize, ClanChar)> = match case.id {
        PairCaseId::C1BothPositiveEqual => vec![(i, plus), (m(i), plus)],
        PairCaseId::C2BothPositiveLess => vec![(i, one), (j, one), (m(j), two), (m(i), two)],
        PairCaseId::C3MixedDistinct => vec![(i, one), (j, two), (m(j), one), (m(i), two)],
        PairCaseId::C4MixedEqualBelowN => vec![(i, one), (i + 1, two), (m(i + 1), two), (m(i), one)],
        PairCaseId::C5MixedEqualN => vec![(n, one), (n + 1, plus), (n + 2, one)],
    };
    Ok(clan_with(len, &entries))
}

/// `γ_0 = (1,2,-,...,-,2,1)`, the clan of the dense orbit.
pub fn target_clan(rank: usize, lie_type: LieType) -> Clan {
    let len = clan_length(rank, lie_type);
    let (one, two) = (ClanChar::Number(1), ClanChar::Number(2));
    clan_with(len, &[(1, one), (2, two), (len - 1, two), (len, one)])
}

/// `l(w0 u) + l(v)`, the degree of the class of `X_u^v`.
pub fn expansion_degree(u: &SignedPermutation, v: &SignedPermutation) -> Result<usize> {
    let w0 = SignedPermutation::longest_element(u.rank(), u.lie_type());
    Ok(w0.multiply(u)?.length() + v.length())
}

#[derive(Debug, Clone)]
pub struct ConstantResult {
    pub value: u8,
    pub start: Clan,
    pub word: Word,
    pub action: WordAction,
    /// Set when `l(w)` differs from `l(w0 u) + l(v)`; `value` is then 0.
    pub length_mismatch: bool,
}

/// The conjectural `c_{w0 u, v}^w`, acting by the given reduced word of `w`.
pub fn structure_constant_for_word(
    u: &SignedPermutation,
    v: &SignedPermutation,
    word: &Word,
) -> Result<ConstantResult> {
    let (n, lie_type) = (u.rank(), u.lie_type());
    let start = gamma_of_pair(u, v)?;
    if !word.is_reduced(n, lie_type)? {
        return Err(Error::NotReduced(word.to_string()));
    }
    let action = act_word(word, &start, lie_type)?;
    let length_mismatch = word.len() != expansion_degree(u, v)?;
    let value = if length_mismatch || action.result != target_clan(n, lie_type) {
        0
    } else if lie_type == LieType::B && action.rule7_fired {
        2
    } else {
        1
    };
    Ok(ConstantResult {
        value,
        start,
        word: word.clone(),
        action,
        length_mismatch,
    })
}

/// The conjectural `c_{w0 u, v}^w` using the canonical reduced word of `w`.
pub fn structure_constant(
    u: &SignedPermutation,
    v: &SignedPermutation,
    w: &SignedPermutation,
) -> Result<ConstantResult> {
    u.multiply(w)?;
    structure_constant_for_word(u, v, &w.reduced_word())
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpansionRow {
    #[serde(serialize_with = "crate::serialize_display")]
    pub w: SignedPermutation,
    #[serde(serialize_with = "crate::serialize_display")]
    pub word: Word,
    #[serde(serialize_with = "crate::serialize_display")]
    pub clan: Clan,
    pub coefficient: u8,
}

/// `[X_u^v]` in the Schubert basis: one row per `w` of the right length.
#[derive(Debug, Clone, Serialize)]
pub struct ExpansionResult {
    pub degree: usize,
    #[serde(serialize_with = "crate::serialize_display")]
    pub start: Clan,
    pub rows: Vec<ExpansionRow>,
}

impl ExpansionResult {
    pub fn coefficient(&self, w: &SignedPermutation) -> u8 {
        self.rows
            .iter()
            .find(|r| &r.w == w)
            .map_or(0, |r| r.coefficient)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &ExpansionRow> {
        self.rows.iter().filter(|r| r.coefficient != 0)
    }
}

pub fn expand_richardson_class(u: &SignedPermutation, v: &SignedPermutation) -> Result<ExpansionResult> {
    let start = gamma_of_pair(u, v)?;
    let degree = expansion_degree(u, v)?;
    let rows = elements_of_length(u.rank(), u.lie_type(), degree)
        .into_par_iter()
        .map(|w| {
            let result = structure_constant_for_word(u, v, &w.reduced_word())?;
            Ok(ExpansionRow {
                word: result.word,
                clan: result.action.result,
                coefficient: result.value,
                w,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExpansionResult { degree, start, rows })
}

//! Monoid action of simple reflections on symmetric clans.
//!
//! For `i < n` both types use the same four rules on the window
//! `(c_i, c_{i+1})` and its mirror image. The rules for `s_n` differ: type B
//! looks at `(c_n, c_{n+1}, c_{n+2})` around the middle character, type D at
//! `(c_{n-1}, c_n, c_{n+1}, c_{n+2})`. Every unmatched configuration is a
//! fixed point.

use std::fmt;

use serde::Serialize;

use crate::clan::{Clan, ClanChar};
use crate::error::{Error, Result};
use crate::weyl::{LieType, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Opposite signs at `(i, i+1)` become two new mirrored pairs.
    B1,
    /// Sign then number whose mate lies to the right: swap on both sides.
    B2,
    /// Number whose mate lies to the left then sign: swap on both sides.
    B3,
    /// Two numbers mated to each other's mirrors: swap `(i, i+1)` only.
    B4,
    /// Swap `c_n` and `c_{n+2}`.
    B5,
    /// `(+,-,+)` around the middle.
    B6,
    /// `(-,+,-)` around the middle; contributes multiplicity two.
    B7,
    D1,
    D2,
    D3,
    D4,
    D5,
    Fixed,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionOutcome {
    pub result: Clan,
    pub rule_applied: Rule,
    pub rule7_fired: bool,
}

/// Rank implied by a clan's length.
pub fn rank_of(clan: &Clan, lie_type: LieType) -> usize {
    match lie_type {
        LieType::B => (clan.len().saturating_sub(1)) / 2,
        LieType::D => clan.len() / 2,
    }
}

fn check_index(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i > rank {
        return Err(Error::InvalidLetter { letter: i, rank });
    }
    Ok(())
}

/// Fresh labels never collide with normalized ones on these lengths.
const FRESH_A: ClanChar = ClanChar::Number(u32::MAX - 1);
const FRESH_B: ClanChar = ClanChar::Number(u32::MAX);

struct Window<'a> {
    clan: &'a Clan,
    chars: Vec<ClanChar>,
}

impl<'a> Window<'a> {
    fn new(clan: &'a Clan) -> Self {
        Self {
            clan,
            chars: clan.chars().to_vec(),
        }
    }

    fn at(&self, pos: usize) -> ClanChar {
        self.clan.at(pos)
    }

    fn mate(&self, pos: usize) -> Option<usize> {
        self.clan.mate(pos)
    }

    fn m(&self, pos: usize) -> usize {
        self.clan.mirror(pos)
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.chars.swap(a - 1, b - 1);
    }

    fn set(&mut self, pos: usize, c: ClanChar) {
        self.chars[pos - 1] = c;
    }

    fn finish(self, rule: Rule) -> ActionOutcome {
        ActionOutcome {
            result: Clan::normalize(self.chars).expect("rules preserve pairing"),
            rule_applied: rule,
            rule7_fired: rule == Rule::B7,
        }
    }
}

fn fixed(clan: &Clan) -> ActionOutcome {
    ActionOutcome {
        result: clan.clone(),
        rule_applied: Rule::Fixed,
        rule7_fired: false,
    }
}

/// Rules (1)-(4) for `s_i`, `i < n`, shared by both types.
fn act_below_n(i: usize, clan: &Clan) -> ActionOutcome {
    let mut w = Window::new(clan);
    let (a, b) = (w.at(i), w.at(i + 1));
    let (mi, mi1) = (w.m(i), w.m(i + 1));
    if a.is_sign() && b.is_sign() && a != b {
        w.set(i, FRESH_A);
        w.set(i + 1, FRESH_A);
        w.set(mi1, FRESH_B);
        w.set(mi, FRESH_B);
        return w.finish(Rule::B1);
    }
    if a.is_sign() && b.is_number() && w.mate(i + 1) > Some(i + 1) {
        w.swap(i, i + 1);
        w.swap(mi1, mi);
        return w.finish(Rule::B2);
    }
    if a.is_number() && b.is_sign() && w.mate(i) < Some(i) {
        w.swap(i, i + 1);
        w.swap(mi1, mi);
        return w.finish(Rule::B3);
    }
    if a.is_number() && b.is_number() && a != b && w.mate(i) == Some(mi1) && w.mate(i + 1) == Some(mi) {
        w.swap(i, i + 1);
        return w.finish(Rule::B4);
    }
    fixed(clan)
}

/// `s_i` acting on a symmetric `(2, 2n-1)`-clan of length `2n+1`.
pub fn act_simple_b(i: usize, clan: &Clan) -> Result<ActionOutcome> {
    let n = rank_of(clan, LieType::B);
    clan.check_action_domain(n, LieType::B)?;
    check_index(i, n)?;
    Ok(act_simple_b_unchecked(i, n, clan))
}

fn act_simple_b_unchecked(i: usize, n: usize, clan: &Clan) -> ActionOutcome {
    if i < n {
        return act_below_n(i, clan);
    }
    let mut w = Window::new(clan);
    let (left, mid, right) = (w.at(n), w.at(n + 1), w.at(n + 2));
    if left.is_number() && right.is_number() && left != right {
        if w.mate(n) < w.mate(n + 2) {
            w.swap(n, n + 2);
            return w.finish(Rule::B5);
        }
        return fixed(clan);
    }
    let rule = match (left, mid, right) {
        (ClanChar::Plus, ClanChar::Minus, ClanChar::Plus) => Rule::B6,
        (ClanChar::Minus, ClanChar::Plus, ClanChar::Minus) => Rule::B7,
        _ => return fixed(clan),
    };
    w.set(n, FRESH_A);
    w.set(n + 2, FRESH_A);
    w.set(n + 1, mid.flipped());
    w.finish(rule)
}

/// `s_i` acting on a symmetric `(2, 2n-2)`-clan of length `2n`.
pub fn act_simple_d(i: usize, clan: &Clan) -> Result<ActionOutcome> {
    let n = rank_of(clan, LieType::D);
    clan.check_action_domain(n, LieType::D)?;
    check_index(i, n)?;
    Ok(act_simple_d_unchecked(i, n, clan))
}

fn act_simple_d_unchecked(i: usize, n: usize, clan: &Clan) -> ActionOutcome {
    if i < n {
        return act_below_n(i, clan);
    }
    let mut w = Window::new(clan);
    let (p, q, r, s) = (n - 1, n, n + 1, n + 2);
    let (cp, cq, cr, cs) = (w.at(p), w.at(q), w.at(r), w.at(s));
    let interchange = |mut w: Window, rule| {
        w.swap(p, r);
        w.swap(q, s);
        w.finish(rule)
    };
    if cp.is_sign() && cs.is_sign() && cq.is_number() && cr.is_number() {
        if cq == cr {
            return interchange(w, Rule::D1);
        }
        if w.mate(q) < Some(p) && w.mate(r) > Some(s) {
            return interchange(w, Rule::D2);
        }
        return fixed(clan);
    }
    if cp.is_number() && cs.is_number() && cq.is_sign() && cr.is_sign() && cp != cs {
        if w.mate(p) < Some(p) && w.mate(s) > Some(s) {
            return interchange(w, Rule::D3);
        }
        return fixed(clan);
    }
    use ClanChar::{Minus, Plus};
    if matches!((cp, cq, cr, cs), (Plus, Minus, Minus, Plus) | (Minus, Plus, Plus, Minus)) {
        for (pos, c) in [(p, FRESH_A), (q, FRESH_B), (r, FRESH_A), (s, FRESH_B)] {
            w.set(pos, c);
        }
        return w.finish(Rule::D4);
    }
    if cp.is_number() && cp == cq && cr.is_number() && cr == cs && cp != cr {
        for (pos, c) in [(p, FRESH_A), (q, FRESH_B), (r, FRESH_B), (s, FRESH_A)] {
            w.set(pos, c);
        }
        return w.finish(Rule::D5);
    }
    fixed(clan)
}

pub fn act_simple(i: usize, clan: &Clan, lie_type: LieType) -> Result<ActionOutcome> {
    match lie_type {
        LieType::B => act_simple_b(i, clan),
        LieType::D => act_simple_d(i, clan),
    }
}

/// One letter of a word action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub letter: usize,
    pub rule: Rule,
    #[serde(serialize_with = "crate::serialize_display")]
    pub clan_after: Clan,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordAction {
    pub result: Clan,
    /// Steps in application order, i.e. last letter of the word first.
    pub trace: Vec<TraceStep>,
    pub rule7_fired: bool,
    pub rule7_count: usize,
}

/// Acts by `s_{a_1} s_{a_2} ... s_{a_k}` on `clan`, applying `s_{a_k}` first.
pub fn act_word(word: &Word, clan: &Clan, lie_type: LieType) -> Result<WordAction> {
    let n = rank_of(clan, lie_type);
    clan.check_action_domain(n, lie_type)?;
    word.validate(n)?;
    let mut current = clan.clone();
    let mut trace = Vec::with_capacity(word.len());
    let mut rule7_count = 0;
    for &letter in word.letters().iter().rev() {
        let step = match lie_type {
            LieType::B => act_simple_b_unchecked(letter, n, &current),
            LieType::D => act_simple_d_unchecked(letter, n, &current),
        };
        rule7_count += step.rule7_fired as usize;
        trace.push(TraceStep {
            letter,
            rule: step.rule_applied,
            clan_after: step.result.clone(),
        });
        current = step.result;
    }
    Ok(WordAction {
        result: current,
        trace,
        rule7_fired: rule7_count > 0,
        rule7_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clan::enumerate_symmetric_clans;

    fn c(s: &str) -> Clan {
        Clan::parse(s).unwrap()
    }

    fn b(i: usize, s: &str) -> ActionOutcome {
        act_simple_b(i, &c(s)).unwrap()
    }

    fn d(i: usize, s: &str) -> ActionOutcome {
        act_simple_d(i, &c(s)).unwrap()
    }

    #[test]
    fn type_b_rule_examples() {
        let cases = [
            (1, "+,-,-,-,-,-,+", "1,1,-,-,-,2,2", Rule::B1),
            (1, "-,1,-,+,-,1,-", "1,-,-,+,-,-,1", Rule::B2),
            (2, "1,1,-,-,-,2,2", "1,-,1,-,2,-,2", Rule::B3),
            (2, "-,1,2,-,1,2,-", "-,1,2,-,2,1,-", Rule::B4),
            (3, "-,1,1,-,2,2,-", "-,1,2,-,1,2,-", Rule::B5),
            (3, "-,-,+,-,+,-,-", "-,-,1,+,1,-,-", Rule::B6),
            (4, "-,-,1,-,+,-,1,-,-", "-,-,1,2,-,2,1,-,-", Rule::B7),
        ];
        for (i, from, to, rule) in cases {
            let out = b(i, from);
            assert_eq!(out.result, c(to), "s{i} {from}");
            assert_eq!(out.rule_applied, rule);
            assert_eq!(out.rule7_fired, rule == Rule::B7);
        }
        let out = b(1, "-,-,-,-,-,-,-,-,-");
        assert!(matches!(
            out,
            ActionOutcome {
                rule_applied: Rule::Fixed,
                rule7_fired: false,
                ..
            }
        ));
    }

    #[test]
    fn wrong_signature_is_rejected() {
        assert!(matches!(
            act_simple_b(1, &c("+,+,-,-,-,+,+")),
            Err(Error::WrongSignature { .. })
        ));
        assert!(matches!(
            act_simple_b(1, &c("+,-,-,-,-,-,+,-")),
            Err(Error::WrongSignature { .. })
        ));
    }

    #[test]
    fn type_d_rule_examples() {
        let cases = [
            (4, "1,-,-,2,2,-,-,1", "1,-,2,-,-,2,-,1", Rule::D1),
            (4, "1,-,-,1,2,-,-,2", "1,-,2,-,-,1,-,2", Rule::D2),
            (4, "1,-,1,-,-,2,-,2", "1,-,-,2,1,-,-,2", Rule::D3),
            (4, "-,-,+,-,-,+,-,-", "-,-,1,2,1,2,-,-", Rule::D4),
            (4, "-,-,-,+,+,-,-,-", "-,-,1,2,1,2,-,-", Rule::D4),
            (4, "-,-,1,1,2,2,-,-", "-,-,1,2,2,1,-,-", Rule::D5),
        ];
        for (i, from, to, rule) in cases {
            let out = d(i, from);
            assert_eq!(out.result, c(to), "s{i} {from}");
            assert_eq!(out.rule_applied, rule);
        }
        assert_eq!(d(1, "-,-,1,1,2,2,-,-").rule_applied, Rule::Fixed);
    }

    #[test]
    fn errors() {
        assert!(matches!(act_simple_b(1, &c("+,-,-,-,-,+,-")), Err(Error::NotSymmetric(_))));
        assert!(matches!(act_simple_b(4, &c("+,-,-,-,-,-,+")), Err(Error::InvalidLetter { .. })));
        assert!(matches!(act_simple_d(1, &c("+,-,-,-,-,-,+")), Err(Error::WrongSignature { .. })));
        assert!(matches!(act_simple_b(1, &c("+,-,-,-,-,+,-")), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn word_action_table_rows() {
        let start = c("-,-,-,+,-,+,-,-,-");
        let out = act_word(&Word::parse("1,2,1,3,2,4,3", 4).unwrap(), &start, LieType::B).unwrap();
        assert_eq!(out.result, c("1,2,-,-,-,-,-,2,1"));
        assert!(!out.rule7_fired);
        let out = act_word(&Word::parse("2,1,3,2,4,3,4", 4).unwrap(), &start, LieType::B).unwrap();
        assert_eq!(out.result, c("1,2,-,-,-,-,-,2,1"));
        assert!(out.rule7_fired);
        assert_eq!(out.trace.len(), 7);
        assert_eq!(out.trace[0].letter, 4);
        let out = act_word(&Word::default(), &start, LieType::B).unwrap();
        assert_eq!(out.result, start);
        let start = c("-,-,1,1,2,2,-,-");
        let out = act_word(&Word::parse("1,2,1,4,2", 4).unwrap(), &start, LieType::D).unwrap();
        assert_eq!(out.result, c("1,2,-,-,-,-,2,1"));
    }

    #[test]
    fn symmetry_preserved_and_action_is_idempotent() {
        for t in [LieType::B, LieType::D] {
            for n in 2..=4 {
                for g in enumerate_symmetric_clans(n, t) {
                    for i in 1..=n {
                        let out = act_simple(i, &g, t).unwrap();
                        out.result.check_ambient(n, t).unwrap();
                        let again = act_simple(i, &out.result, t).unwrap();
                        assert_eq!(again.rule_applied, Rule::Fixed, "{t}{n} s{i} {g}");
                        assert_eq!(again.result, out.result);
                    }
                }
            }
        }
    }
}

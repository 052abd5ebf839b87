//! Clans: strings of signs and paired natural numbers, taken up to
//! relabeling of the pairs.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::LieType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClanChar {
    Plus,
    Minus,
    /// One end of a matched pair. The label carries no meaning beyond
    /// identifying the mate.
    Number(u32),
}

impl ClanChar {
    pub fn is_sign(self) -> bool {
        !matches!(self, ClanChar::Number(_))
    }

    pub fn is_number(self) -> bool {
        matches!(self, ClanChar::Number(_))
    }

    pub fn flipped(self) -> Self {
        match self {
            ClanChar::Plus => ClanChar::Minus,
            ClanChar::Minus => ClanChar::Plus,
            n => n,
        }
    }
}

impl fmt::Display for ClanChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClanChar::Plus => f.write_str("+"),
            ClanChar::Minus => f.write_str("-"),
            ClanChar::Number(k) => write!(f, "{k}"),
        }
    }
}

/// A clan in first-occurrence normal form, so structural equality is clan
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clan {
    chars: Vec<ClanChar>,
}

/// How the two pairs of a two-pair clan interleave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PairPattern {
    /// `(1,1,2,2)`
    Adjacent,
    /// `(1,2,1,2)`
    Crossing,
    /// `(1,2,2,1)`
    Nested,
}

impl fmt::Display for PairPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairPattern::Adjacent => "(1,1,2,2)",
            PairPattern::Crossing => "(1,2,1,2)",
            PairPattern::Nested => "(1,2,2,1)",
        })
    }
}

/// The three shapes a symmetric clan with `p = 2` can take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SymmetricClass {
    TwoPlus,
    TwoPairs(PairPattern),
    OnePairMiddlePlus,
}

impl Clan {
    /// Relabels pairs `1, 2, ...` by first occurrence.
    pub fn normalize(chars: Vec<ClanChar>) -> Result<Clan> {
        let mut labels: Vec<(u32, u32, usize)> = Vec::new(); // (old, new, count)
        let mut out = Vec::with_capacity(chars.len());
        for c in chars {
            match c {
                ClanChar::Number(old) => {
                    let new = match labels.iter_mut().find(|(o, _, _)| *o == old) {
                        Some(entry) => {
                            entry.2 += 1;
                            entry.1
                        }
                        None => {
                            let new = labels.len() as u32 + 1;
                            labels.push((old, new, 1));
                            new
                        }
                    };
                    out.push(ClanChar::Number(new));
                }
                sign => out.push(sign),
            }
        }
        if let Some(&(old, _, _)) = labels.iter().find(|(_, _, count)| *count != 2) {
            return Err(Error::UnmatchedNumber(old));
        }
        Ok(Clan { chars: out })
    }

    /// Parses `"-,1,2,-"` or `"(-,1,2,-)"`.
    pub fn parse(text: &str) -> Result<Clan> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let chars = inner
            .split(',')
            .map(|t| match t.trim() {
                "+" => Ok(ClanChar::Plus),
                "-" => Ok(ClanChar::Minus),
                num => num
                    .parse::<u32>()
                    .map(ClanChar::Number)
                    .map_err(|e| Error::Parse(text.to_string(), e.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Clan::normalize(chars)
    }

    pub fn chars(&self) -> &[ClanChar] {
        &self.chars
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    /// Character at a 1-based position.
    pub fn at(&self, pos: usize) -> ClanChar {
        self.chars[pos - 1]
    }

    /// 1-based position of the mate of the number at `pos`.
    pub fn mate(&self, pos: usize) -> Option<usize> {
        match self.at(pos) {
            ClanChar::Number(k) => self
                .chars
                .iter()
                .enumerate()
                .position(|(i, &c)| i + 1 != pos && c == ClanChar::Number(k))
                .map(|i| i + 1),
            _ => None,
        }
    }

    /// Mirror position `N + 1 - pos`.
    pub fn mirror(&self, pos: usize) -> usize {
        self.len() + 1 - pos
    }

    pub fn pair_count(&self) -> usize {
        self.chars.iter().filter(|c| c.is_number()).count() / 2
    }

    /// `(p, q)`: each pair contributes one to both.
    pub fn signature(&self) -> (usize, usize) {
        let plus = self.chars.iter().filter(|&&c| c == ClanChar::Plus).count();
        let minus = self.chars.iter().filter(|&&c| c == ClanChar::Minus).count();
        let pairs = self.pair_count();
        (plus + pairs, minus + pairs)
    }

    pub fn reversed(&self) -> Clan {
        let mut chars = self.chars.clone();
        chars.reverse();
        Clan::normalize(chars).expect("reversal preserves pairing")
    }

    /// Whether reversing the characters gives the same clan.
    pub fn is_symmetric(&self) -> bool {
        self.reversed() == *self
    }

    /// Every number is paired away from its mirror image.
    pub fn is_disconnected(&self) -> bool {
        (1..=self.len()).all(|i| !self.at(i).is_number() || self.mate(i) != Some(self.mirror(i)))
    }

    pub fn classify_symmetric(&self) -> Result<SymmetricClass> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        let not_classifiable = || Error::NotClassifiable(self.to_string());
        let plus: Vec<usize> = (1..=self.len()).filter(|&i| self.at(i) == ClanChar::Plus).collect();
        match (plus.len(), self.pair_count()) {
            (2, 0) => Ok(SymmetricClass::TwoPlus),
            (1, 1) if self.len() % 2 == 1 && plus[0] == self.len().div_ceil(2) => {
                Ok(SymmetricClass::OnePairMiddlePlus)
            }
            (0, 2) => {
                let numbers: Vec<ClanChar> = self.chars.iter().copied().filter(|c| c.is_number()).collect();
                let pattern = match numbers[1..] {
                    [ClanChar::Number(1), ClanChar::Number(2), ClanChar::Number(2)] => PairPattern::Adjacent,
                    [ClanChar::Number(2), ClanChar::Number(1), ClanChar::Number(2)] => PairPattern::Crossing,
                    [ClanChar::Number(2), ClanChar::Number(2), ClanChar::Number(1)] => PairPattern::Nested,
                    _ => return Err(not_classifiable()),
                };
                Ok(SymmetricClass::TwoPairs(pattern))
            }
            _ => Err(not_classifiable()),
        }
    }

    /// Checks that this is a symmetric clan of the ambient shape for the
    /// type: signature `(2, 2n-1)` on `2n+1` characters (B) or `(2, 2n-2)`
    /// on `2n` characters (D).
    pub fn check_ambient(&self, rank: usize, lie_type: LieType) -> Result<()> {
        let (len, q) = match lie_type {
            LieType::B => (2 * rank + 1, 2 * rank - 1),
            LieType::D => (2 * rank, 2 * rank - 2),
        };
        if self.len() != len || self.signature() != (2, q) {
            return Err(Error::WrongSignature {
                clan: self.to_string(),
                lie_type,
                rank,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        Ok(())
    }

    /// Domain of the simple-reflection action: a symmetric clan of the
    /// ambient length with at most two `+`-type characters. Clans with
    /// `p < 2` are accepted and are fixed by every generator.
    pub fn check_action_domain(&self, rank: usize, lie_type: LieType) -> Result<()> {
        let len = match lie_type {
            LieType::B => 2 * rank + 1,
            LieType::D => 2 * rank,
        };
        if self.len() != len || self.signature().0 > 2 {
            return Err(Error::WrongSignature {
                clan: self.to_string(),
                lie_type,
                rank,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        Ok(())
    }

    /// Comma-separated characters without parentheses.
    pub fn to_csv(&self) -> String {
        self.chars.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl std::str::FromStr for Clan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Clan::parse(s)
    }
}

/// Builds a clan of length `len` with minus signs everywhere except the
/// listed positions (1-based).
pub(crate) fn clan_with(len: usize, entries: &[(usize, ClanChar)]) -> Clan {
    let mut chars = vec![ClanChar::Minus; len];
    for &(pos, c) in entries {
        chars[pos - 1] = c;
    }
    Clan::normalize(chars).expect("well-formed pairing")
}

/// All symmetric clans of signature `(2, 2n-1)` (type B) or `(2, 2n-2)`
/// (type D), sorted.
pub fn enumerate_symmetric_clans(rank: usize, lie_type: LieType) -> Vec<Clan> {
    let len = match lie_type {
        LieType::B => 2 * rank + 1,
        LieType::D => 2 * rank,
    };
    let m = |p: usize| len + 1 - p;
    let (one, two) = (ClanChar::Number(1), ClanChar::Number(2));
    let mut out = BTreeSet::new();
    for i in 1..=rank {
        out.insert(clan_with(len, &[(i, ClanChar::Plus), (m(i), ClanChar::Plus)]));
        if lie_type == LieType::B {
            out.insert(clan_with(len, &[(i, one), (rank + 1, ClanChar::Plus), (m(i), one)]));
        }
        for j in i + 1..=rank {
            out.insert(clan_with(len, &[(i, one), (j, one), (m(j), two), (m(i), two)]));
            out.insert(clan_with(len, &[(i, one), (j, two), (m(j), one), (m(i), two)]));
            out.insert(clan_with(len, &[(i, one), (j, two), (m(j), two), (m(i), one)]));
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Clan {
        Clan::parse(s).unwrap()
    }

    /// The two explicit conditions: mirrored signs agree, and
    /// `c_i = c_{N+1-j}` implies `c_j = c_{N+1-i}`.
    fn symmetric_by_definition(g: &Clan) -> bool {
        let n = g.len();
        (1..=n).all(|i| {
            let (a, b) = (g.at(i), g.at(n + 1 - i));
            if a.is_sign() {
                return a == b;
            }
            if !b.is_number() {
                return false;
            }
            (1..=n).all(|j| g.at(i) != g.at(n + 1 - j) || g.at(j) == g.at(n + 1 - i))
        })
    }

    /// Exhaustive generation over the alphabet {+, -, a, b} (two pairs at
    /// most since p = 2), filtered by signature and reversal symmetry.
    fn brute_force_symmetric(len: usize, q: usize) -> BTreeSet<Clan> {
        let mut out = BTreeSet::new();
        let alphabet = [ClanChar::Plus, ClanChar::Minus, ClanChar::Number(1), ClanChar::Number(2)];
        let total = 4usize.pow(len as u32);
        for code in 0..total {
            let mut x = code;
            let chars: Vec<ClanChar> = (0..len)
                .map(|_| {
                    let ch = alphabet[x % 4];
                    x /= 4;
                    ch
                })
                .collect();
            if let Ok(g) = Clan::normalize(chars) {
                if g.signature() == (2, q) {
                    let mut rev = g.chars().to_vec();
                    rev.reverse();
                    if Clan::normalize(rev).unwrap() == g {
                        out.insert(g);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn normalization() {
        assert_eq!(c("2,1,2,1"), c("1,2,1,2"));
        assert_eq!(c("5,7,5,7").to_csv(), "1,2,1,2");
        assert_ne!(c("1,1,2,2"), c("1,2,1,2"));
        assert_eq!(c("+,-,+").to_string(), "(+,-,+)");
        assert_eq!(Clan::parse("1,2,1"), Err(Error::UnmatchedNumber(2)));
        assert_eq!(Clan::parse("3,3,3"), Err(Error::UnmatchedNumber(3)));
        let g = c("(-,1,2,-,-,-,1,2,-)");
        assert_eq!(Clan::normalize(g.chars().to_vec()).unwrap(), g);
        assert_eq!(g.mate(2), Some(7));
        assert_eq!(g.mate(1), None);
        assert_eq!(g.signature(), (2, 7));
    }

    #[test]
    fn symmetry_examples() {
        assert!(c("-,1,2,-,-,-,1,2,-").is_symmetric());
        // Reversal of (1,1,2,2) is (2,2,1,1), which renormalizes to itself.
        assert!(c("1,1,2,2").is_symmetric());
        assert!(c("-,-,-,-").is_symmetric());
        assert!(!c("+,-,-,-").is_symmetric());
        assert!(!c("1,-,1,-").is_symmetric());
        assert!(c("1,2,-,1,2").is_symmetric());
        assert!(!c("1,-,1,2,2").is_symmetric());
    }

    #[test]
    fn classification() {
        assert_eq!(c("-,+,-,-,-,-,-,+,-").classify_symmetric().unwrap(), SymmetricClass::TwoPlus);
        assert_eq!(
            c("-,1,2,-,-,-,2,1,-").classify_symmetric().unwrap(),
            SymmetricClass::TwoPairs(PairPattern::Nested)
        );
        assert_eq!(
            c("-,1,1,-,-,-,2,2,-").classify_symmetric().unwrap(),
            SymmetricClass::TwoPairs(PairPattern::Adjacent)
        );
        assert_eq!(
            c("-,1,2,-,-,-,1,2,-").classify_symmetric().unwrap(),
            SymmetricClass::TwoPairs(PairPattern::Crossing)
        );
        assert_eq!(
            c("-,-,-,1,+,1,-,-,-").classify_symmetric().unwrap(),
            SymmetricClass::OnePairMiddlePlus
        );
        assert!(matches!(c("-,+,-").classify_symmetric(), Err(Error::NotClassifiable(_))));
        assert!(matches!(c("+,-,-").classify_symmetric(), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn disconnectedness() {
        assert!(!c("-,-,-,1,+,1,-,-,-").is_disconnected());
        assert!(!c("1,2,-,-,-,-,-,2,1").is_disconnected());
        assert!(c("1,2,-,-,-,-,-,1,2").is_disconnected());
        assert!(c("-,-,+,-,+,-,-").is_disconnected());
        assert!(c("-,-,1,1,2,2,-,-").is_disconnected());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // Golden counts: n + n + 3 C(n,2) in type B, n + 3 C(n,2) in type D.
        let golden = [
            ((2, LieType::B), 7),
            ((3, LieType::B), 15),
            ((4, LieType::B), 26),
            ((2, LieType::D), 5),
            ((3, LieType::D), 12),
            ((4, LieType::D), 22),
        ];
        for ((n, t), count) in golden {
            let clans = enumerate_symmetric_clans(n, t);
            let (len, q) = match t {
                LieType::B => (2 * n + 1, 2 * n - 1),
                LieType::D => (2 * n, 2 * n - 2),
            };
            let brute = brute_force_symmetric(len, q);
            assert_eq!(clans.len(), count, "{t}{n}");
            assert_eq!(clans.iter().cloned().collect::<BTreeSet<_>>(), brute, "{t}{n}");
            assert!(clans.windows(2).all(|p| p[0] < p[1]));
            for g in &clans {
                assert!(g.is_symmetric());
                assert!(symmetric_by_definition(g));
                g.classify_symmetric().unwrap();
                g.check_ambient(n, t).unwrap();
            }
        }
        let d2: Vec<String> = enumerate_symmetric_clans(2, LieType::D).iter().map(|g| g.to_csv()).collect();
        for s in ["+,-,-,+", "-,+,+,-", "1,1,2,2", "1,2,1,2", "1,2,2,1"] {
            assert!(d2.contains(&s.to_string()), "{s}");
        }
    }

    #[test]
    fn definition_matches_reversal_on_all_small_clans() {
        for (len, q) in [(5, 3), (6, 4), (7, 5)] {
            let alphabet = [ClanChar::Plus, ClanChar::Minus, ClanChar::Number(1), ClanChar::Number(2)];
            for code in 0..4usize.pow(len as u32) {
                let mut x = code;
                let chars: Vec<ClanChar> = (0..len)
                    .map(|_| {
                        let ch = alphabet[x % 4];
                        x /= 4;
                        ch
                    })
                    .collect();
                if let Ok(g) = Clan::normalize(chars) {
                    if g.signature() == (2, q) {
                        assert_eq!(g.is_symmetric(), symmetric_by_definition(&g), "{g}");
                    }
                }
            }
        }
    }

    #[test]
    fn mirror_maps_pairs_to_pairs() {
        for t in [LieType::B, LieType::D] {
            for g in enumerate_symmetric_clans(4, t) {
                for i in 1..=g.len() {
                    if let Some(j) = g.mate(i) {
                        assert_eq!(g.mate(g.mirror(i)), Some(g.mirror(j)));
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_ambient_shape() {
        assert!(matches!(
            c("+,-,-,-,-,-,+").check_ambient(4, LieType::B),
            Err(Error::WrongSignature { .. })
        ));
        assert!(matches!(
            c("+,-,-,-,-,+,-").check_ambient(3, LieType::B),
            Err(Error::NotSymmetric(_))
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn raw_clan() -> impl Strategy<Value = Vec<ClanChar>> {
            (3usize..10).prop_flat_map(|len| {
                proptest::collection::vec(
                    prop_oneof![Just(ClanChar::Plus), Just(ClanChar::Minus), (1u32..4).prop_map(ClanChar::Number)],
                    len,
                )
            })
        }

        proptest! {
            #[test]
            fn normalize_is_idempotent(chars in raw_clan()) {
                if let Ok(g) = Clan::normalize(chars) {
                    prop_assert_eq!(Clan::normalize(g.chars().to_vec()).unwrap(), g);
                }
            }

            #[test]
            fn symmetry_ignores_labels(chars in raw_clan(), shift in 1u32..50) {
                if let Ok(g) = Clan::normalize(chars.clone()) {
                    let relabeled: Vec<ClanChar> = chars
                        .iter()
                        .map(|&c| match c {
                            ClanChar::Number(k) => ClanChar::Number(100 - k * shift % 97),
                            s => s,
                        })
                        .collect();
                    if let Ok(h) = Clan::normalize(relabeled) {
                        prop_assert_eq!(g.is_symmetric(), h.is_symmetric());
                    }
                }
            }
        }
    }
}

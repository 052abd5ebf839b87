//! Signed-permutation Weyl groups of types B and D.
//!
//! Elements act on `x_1..x_n` by `x_i -> sign(w(i)) x_|w(i)|`. The simple
//! reflections are `s_i = (i, i+1)` for `i < n`, and `s_n` is the sign change
//! of `x_n` (type B) or `x_{n-1} <-> -x_n` (type D). Products compose as
//! functions, so `(ab)(i) = a(b(i))`; left multiplication acts on values and
//! right multiplication on positions of the one-line notation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LieType {
    B,
    D,
}

impl LieType {
    /// Smallest rank handled for this type.
    pub fn min_rank(self) -> usize {
        2
    }

    /// `|W|`: `2^n n!` in type B and `2^(n-1) n!` in type D.
    pub fn group_order(self, rank: usize) -> usize {
        let fact: usize = (1..=rank).product();
        match self {
            LieType::B => fact << rank,
            LieType::D => fact << (rank - 1),
        }
    }

    /// Length of the longest element, i.e. the number of positive roots.
    pub fn max_length(self, rank: usize) -> usize {
        match self {
            LieType::B => rank * rank,
            LieType::D => rank * (rank - 1),
        }
    }

    pub(crate) fn check_rank(self, rank: usize) -> Result<()> {
        if rank < self.min_rank() {
            return Err(Error::RankTooSmall {
                lie_type: self,
                rank,
                min: self.min_rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::B => f.write_str("B"),
            LieType::D => f.write_str("D"),
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(LieType::B),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(other.to_string(), "expected B or D".into())),
        }
    }
}

/// An element of `W(B_n)` or `W(D_n)` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    lie_type: LieType,
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>, lie_type: LieType, rank: usize) -> Result<Self> {
        lie_type.check_rank(rank)?;
        if images.len() != rank {
            return Err(Error::NotAPermutation(images, rank));
        }
        let mut seen = vec![false; rank + 1];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > rank || seen[a] {
                return Err(Error::NotAPermutation(images, rank));
            }
            seen[a] = true;
        }
        if lie_type == LieType::D && images.iter().filter(|&&x| x < 0).count() % 2 == 1 {
            return Err(Error::OddSignCountInTypeD(images));
        }
        Ok(Self { lie_type, images })
    }

    /// Parses comma-separated signed integers such as `"-2,-3,-4,1"`.
    pub fn parse(text: &str, lie_type: LieType, rank: usize) -> Result<Self> {
        let images = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|e| Error::Parse(text.to_string(), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(images, lie_type, rank)
    }

    pub fn identity(rank: usize, lie_type: LieType) -> Self {
        Self {
            lie_type,
            images: (1..=rank as i32).collect(),
        }
    }

    pub fn simple_reflection(i: usize, rank: usize, lie_type: LieType) -> Result<Self> {
        check_letter(i, rank)?;
        let mut w = Self::identity(rank, lie_type);
        w.apply_right_simple(i);
        Ok(w)
    }

    /// `w_0`, the unique element of maximal length.
    pub fn longest_element(rank: usize, lie_type: LieType) -> Self {
        let mut images: Vec<i32> = (1..=rank as i32).map(|x| -x).collect();
        if lie_type == LieType::D && rank % 2 == 1 {
            images[rank - 1] = rank as i32;
        }
        Self { lie_type, images }
    }

    /// The product `s_{a_1} s_{a_2} ... s_{a_k}`.
    pub fn from_word(word: &Word, rank: usize, lie_type: LieType) -> Result<Self> {
        word.validate(rank)?;
        let mut w = Self::identity(rank, lie_type);
        for &a in word.letters() {
            w.apply_right_simple(a);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(k)` for a signed index `k`.
    pub fn apply(&self, k: i32) -> i32 {
        let image = self.images[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -image
        } else {
            image
        }
    }

    /// The 1-based position at which `value` appears in one-line notation.
    pub fn position_of(&self, value: i32) -> Option<usize> {
        self.images.iter().position(|&x| x == value).map(|p| p + 1)
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.lie_type != other.lie_type || self.rank() != other.rank() {
            return Err(Error::TypeMismatch(
                format!("{}{}", self.lie_type, self.rank()),
                format!("{}{}", other.lie_type, other.rank()),
            ));
        }
        Ok(())
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            lie_type: self.lie_type,
            images: other.images.iter().map(|&k| self.apply(k)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            let pos = x.unsigned_abs() as usize - 1;
            images[pos] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self {
            lie_type: self.lie_type,
            images,
        }
    }

    /// Replaces `self` with `self * s_i` (acts on positions).
    fn apply_right_simple(&mut self, i: usize) {
        let n = self.rank();
        if i < n {
            self.images.swap(i - 1, i);
        } else {
            match self.lie_type {
                LieType::B => self.images[n - 1] = -self.images[n - 1],
                LieType::D => {
                    self.images.swap(n - 2, n - 1);
                    self.images[n - 2] = -self.images[n - 2];
                    self.images[n - 1] = -self.images[n - 1];
                }
            }
        }
    }

    /// `self * s_i`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.apply_right_simple(i);
        w
    }

    /// `s_i * self` (acts on values).
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let n = self.rank() as i32;
        let i = i as i32;
        let lie_type = self.lie_type;
        let swap = |x: i32| -> i32 {
            let (s, a) = (x.signum(), x.abs());
            if i < n {
                if a == i {
                    s * (i + 1)
                } else if a == i + 1 {
                    s * i
                } else {
                    x
                }
            } else {
                match lie_type {
                    LieType::B if a == n => -x,
                    LieType::D if a == n - 1 => -s * n,
                    LieType::D if a == n => -s * (n - 1),
                    _ => x,
                }
            }
        };
        Self {
            lie_type,
            images: self.images.iter().map(|&x| swap(x)).collect(),
        }
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    ///
    /// Positive roots are `x_i - x_j`, `x_i + x_j` (`i < j`), plus `x_i` in
    /// type B; a root is positive iff its coefficient on the smallest index
    /// is positive.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut count = 0;
        for i in 0..n {
            let (ei, ai) = (self.images[i].signum(), self.images[i].abs());
            if self.lie_type == LieType::B && ei < 0 {
                count += 1;
            }
            for j in i + 1..n {
                let (ej, aj) = (self.images[j].signum(), self.images[j].abs());
                // x_i - x_j  ->  ei x_ai - ej x_aj
                let diff_negative = if ai < aj { ei < 0 } else { ej > 0 };
                // x_i + x_j  ->  ei x_ai + ej x_aj
                let sum_negative = if ai < aj { ei < 0 } else { ej < 0 };
                count += diff_negative as usize + sum_negative as usize;
            }
        }
        count
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.left_mul_simple(i).length() < self.length()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.right_mul_simple(i).length() < self.length()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.is_left_descent(i)).collect()
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        let mut len = w.length();
        while len > 0 {
            let (i, next) = (1..=w.rank())
                .map(|i| (i, w.left_mul_simple(i)))
                .find(|(_, x)| x.length() < len)
                .expect("nonidentity element has a left descent");
            letters.push(i);
            w = next;
            len -= 1;
        }
        Word(letters)
    }

    /// Every reduced word of `self`, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Word> {
        fn go(w: &SignedPermutation, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
            if w.is_identity() {
                out.push(Word(prefix.clone()));
                return;
            }
            let len = w.length();
            for i in 1..=w.rank() {
                let next = w.left_mul_simple(i);
                if next.length() < len {
                    prefix.push(i);
                    go(&next, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Comma-separated one-line notation, bars rendered as minus signs.
    pub fn to_csv(&self) -> String {
        self.images
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv())
    }
}

fn check_letter(letter: usize, rank: usize) -> Result<()> {
    if letter == 0 || letter > rank {
        return Err(Error::InvalidLetter { letter, rank });
    }
    Ok(())
}

/// A word in the simple reflections, `[a_1, ..., a_k]` meaning
/// `s_{a_1} ... s_{a_k}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>, rank: usize) -> Result<Self> {
        let w = Word(letters);
        w.validate(rank)?;
        Ok(w)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        self.0.iter().try_for_each(|&a| check_letter(a, rank))
    }

    /// Parses `"2,1,3"` or the bracketed `"[2, 1, 3]"`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Ok(Word::default());
        }
        let letters = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(text.to_string(), e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters, rank)
    }

    pub fn is_reduced(&self, rank: usize, lie_type: LieType) -> Result<bool> {
        let w = SignedPermutation::from_word(self, rank, lie_type)?;
        Ok(w.length() == self.len())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Every element of the group, lexicographic on one-line notation.
pub fn all_elements(rank: usize, lie_type: LieType) -> Vec<SignedPermutation> {
    fn go(
        rank: usize,
        lie_type: LieType,
        used: &mut Vec<bool>,
        prefix: &mut Vec<i32>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if prefix.len() == rank {
            let negatives = prefix.iter().filter(|&&x| x < 0).count();
            if lie_type == LieType::B || negatives % 2 == 0 {
                out.push(SignedPermutation {
                    lie_type,
                    images: prefix.clone(),
                });
            }
            return;
        }
        let values = (1..=rank as i32).rev().map(|x| -x).chain(1..=rank as i32);
        for x in values {
            let a = x.unsigned_abs() as usize;
            if !used[a] {
                used[a] = true;
                prefix.push(x);
                go(rank, lie_type, used, prefix, out);
                prefix.pop();
                used[a] = false;
            }
        }
    }
    let mut out = Vec::with_capacity(lie_type.group_order(rank));
    go(rank, lie_type, &mut vec![false; rank + 1], &mut Vec::new(), &mut out);
    out
}

/// All elements of Coxeter length `len`, lexicographic on one-line notation.
pub fn elements_of_length(rank: usize, lie_type: LieType, len: usize) -> Vec<SignedPermutation> {
    all_elements(rank, lie_type)
        .into_iter()
        .filter(|w| w.length() == len)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(images: &[i32], t: LieType) -> SignedPermutation {
        SignedPermutation::new(images.to_vec(), t, images.len()).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let w = sp(&[2, -1, -3], LieType::B);
        assert_eq!(w.apply(1), 2);
        assert_eq!(w.apply(2), -1);
        assert_eq!(w.apply(3), -3);
        assert!(sp(&[1, 2, 3, 4], LieType::D).is_identity());
        // Two sign changes: a legitimate type D element.
        assert!(SignedPermutation::new(vec![2, -1, -3], LieType::D, 3).is_ok());
        assert_eq!(
            SignedPermutation::new(vec![2, -1, 3], LieType::D, 3),
            Err(Error::OddSignCountInTypeD(vec![2, -1, 3]))
        );
        assert!(matches!(
            SignedPermutation::new(vec![1, 1, 3], LieType::B, 3),
            Err(Error::NotAPermutation(..))
        ));
        assert!(matches!(
            SignedPermutation::new(vec![1, 2], LieType::B, 3),
            Err(Error::NotAPermutation(..))
        ));
        assert!(matches!(
            SignedPermutation::new(vec![0, 2], LieType::B, 2),
            Err(Error::NotAPermutation(..))
        ));
    }

    #[test]
    fn longest_element_and_products() {
        let w0 = SignedPermutation::longest_element(4, LieType::B);
        assert_eq!(w0.images(), &[-1, -2, -3, -4]);
        let u = sp(&[-2, -3, -4, 1], LieType::B);
        assert_eq!(w0.multiply(&u).unwrap().images(), &[2, 3, 4, -1]);
        assert!(u.multiply(&u.inverse()).unwrap().is_identity());
        let d = SignedPermutation::longest_element(4, LieType::D);
        assert!(matches!(d.multiply(&u), Err(Error::TypeMismatch(..))));
        for t in [LieType::B, LieType::D] {
            for n in 2..=5 {
                let w0 = SignedPermutation::longest_element(n, t);
                assert_eq!(w0.length(), t.max_length(n));
            }
        }
        assert_eq!(
            SignedPermutation::longest_element(3, LieType::D).images(),
            &[-1, -2, 3]
        );
    }

    #[test]
    fn lengths_from_examples() {
        assert_eq!(sp(&[2, 3, 4, 1], LieType::B).length(), 3);
        assert_eq!(sp(&[2, 3, 4, -1], LieType::B).length(), 4);
        assert_eq!(sp(&[2, 3, 1, 4], LieType::D).length(), 2);
        assert_eq!(sp(&[2, 3, -4, -1], LieType::D).length(), 3);
        assert_eq!(SignedPermutation::identity(4, LieType::B).length(), 0);
    }

    #[test]
    fn simple_reflections() {
        let s2 = SignedPermutation::simple_reflection(2, 3, LieType::B).unwrap();
        assert_eq!(s2.images(), &[1, 3, 2]);
        assert_eq!(s2.reduced_word().letters(), &[2]);
        let s3 = SignedPermutation::simple_reflection(3, 3, LieType::B).unwrap();
        assert_eq!(s3.images(), &[1, 2, -3]);
        let d3 = SignedPermutation::simple_reflection(3, 3, LieType::D).unwrap();
        assert_eq!(d3.images(), &[1, -3, -2]);
        for t in [LieType::B, LieType::D] {
            for i in 1..=4 {
                let s = SignedPermutation::simple_reflection(i, 4, t).unwrap();
                assert_eq!(s.length(), 1);
                assert_eq!(s.left_mul_simple(i), SignedPermutation::identity(4, t));
                assert_eq!(s.inverse(), s);
            }
        }
        assert!(SignedPermutation::simple_reflection(5, 4, LieType::B).is_err());
        assert!(SignedPermutation::identity(3, LieType::B).reduced_word().is_empty());
    }

    #[test]
    fn left_and_right_multiplication_agree_with_multiply() {
        for t in [LieType::B, LieType::D] {
            for w in all_elements(3, t) {
                for i in 1..=3 {
                    let s = SignedPermutation::simple_reflection(i, 3, t).unwrap();
                    assert_eq!(w.left_mul_simple(i), s.multiply(&w).unwrap());
                    assert_eq!(w.right_mul_simple(i), w.multiply(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn coxeter_property_and_reduced_word_round_trip() {
        for t in [LieType::B, LieType::D] {
            for n in 2..=4 {
                for w in all_elements(n, t) {
                    let len = w.length();
                    for i in 1..=n {
                        let l2 = w.right_mul_simple(i).length();
                        assert!(l2 + 1 == len || l2 == len + 1, "{w} s{i}");
                    }
                    let word = w.reduced_word();
                    assert_eq!(word.len(), len);
                    assert_eq!(SignedPermutation::from_word(&word, n, t).unwrap(), w);
                }
            }
        }
    }

    /// Length by breadth-first search in the Cayley graph, independent of the
    /// inversion formula.
    #[test]
    fn length_matches_cayley_graph_distance() {
        use std::collections::{HashMap, VecDeque};
        for t in [LieType::B, LieType::D] {
            for n in 2..=4 {
                let e = SignedPermutation::identity(n, t);
                let mut dist = HashMap::from([(e.clone(), 0usize)]);
                let mut queue = VecDeque::from([e]);
                while let Some(w) = queue.pop_front() {
                    let d = dist[&w];
                    for i in 1..=n {
                        let x = w.right_mul_simple(i);
                        if !dist.contains_key(&x) {
                            dist.insert(x.clone(), d + 1);
                            queue.push_back(x);
                        }
                    }
                }
                assert_eq!(dist.len(), t.group_order(n));
                for (w, d) in dist {
                    assert_eq!(w.length(), d, "{t}{n} {w}");
                }
            }
        }
    }

    #[test]
    fn element_counts() {
        assert_eq!(elements_of_length(4, LieType::B, 7).len(), 44);
        assert_eq!(elements_of_length(4, LieType::D, 5).len(), 28);
        assert_eq!(
            elements_of_length(3, LieType::B, 0),
            vec![SignedPermutation::identity(3, LieType::B)]
        );
        for t in [LieType::B, LieType::D] {
            for n in 2..=5 {
                let total: usize = (0..=t.max_length(n))
                    .map(|l| elements_of_length(n, t, l).len())
                    .sum();
                assert_eq!(total, t.group_order(n));
            }
        }
        let all = all_elements(3, LieType::B);
        assert!(all.windows(2).all(|p| p[0].images() < p[1].images()));
    }

    #[test]
    fn reduced_words_enumeration() {
        let w0 = SignedPermutation::longest_element(2, LieType::B);
        let words = w0.all_reduced_words();
        assert_eq!(words.len(), 2);
        assert_eq!(words[0].letters(), &[1, 2, 1, 2]);
        // B3 longest element has 42 reduced words.
        assert_eq!(
            SignedPermutation::longest_element(3, LieType::B)
                .all_reduced_words()
                .len(),
            42
        );
    }

    #[test]
    fn word_parsing() {
        let w = Word::parse("[2, 1, 3, 2, 4, 3, 4]", 4).unwrap();
        assert_eq!(w.to_string(), "[2, 1, 3, 2, 4, 3, 4]");
        assert_eq!(Word::parse("2,1", 4).unwrap().letters(), &[2, 1]);
        assert!(Word::parse("1,5", 4).is_err());
        assert!(Word::parse("[]", 4).unwrap().is_empty());
        assert!(!Word::parse("1,1", 4).unwrap().is_reduced(4, LieType::B).unwrap());
        let p = SignedPermutation::parse("-2, -3,-4,1", LieType::B, 4).unwrap();
        assert_eq!(p.to_csv(), "-2,-3,-4,1");
    }
}

//! Schubert products from the Chevalley formula alone.
//!
//! `sigma_{s_i} * sigma_w = sum <omega_i, beta^vee> sigma_{w t_beta}` over
//! positive `beta` with `l(w t_beta) = l(w) + 1`. A general `sigma_u` is
//! written as a polynomial in the divisor operators acting on `sigma_e`,
//! and that polynomial is then applied to `sigma_v`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::weyl::{all_elements, LieType, SignedPermutation};

pub type Class = BTreeMap<SignedPermutation, BigRational>;

/// A positive root `e_i - e_j`, `e_i + e_j` or `e_i` (0-based, `i < j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Root {
    Minus(usize, usize),
    Plus(usize, usize),
    Short(usize),
}

impl Root {
    fn coords(self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        match self {
            Root::Minus(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            Root::Plus(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            Root::Short(i) => v[i] = 1,
        }
        v
    }

    fn reflection(self, rank: usize, lie_type: LieType) -> SignedPermutation {
        let mut images: Vec<i32> = (1..=rank as i32).collect();
        match self {
            Root::Minus(i, j) => images.swap(i, j),
            Root::Plus(i, j) => {
                images[i] = -(j as i32 + 1);
                images[j] = -(i as i32 + 1);
            }
            Root::Short(i) => images[i] = -images[i],
        }
        SignedPermutation::new(images, lie_type, rank).expect("reflection is a group element")
    }
}

/// Reflections with their coroot pairing against `2 omega_i`.
#[derive(Debug, Clone)]
pub struct ChevalleyRule {
    lie_type: LieType,
    rank: usize,
    reflections: Vec<(SignedPermutation, Vec<i64>)>,
}

impl ChevalleyRule {
    pub fn new(rank: usize, lie_type: LieType) -> Result<Self> {
        lie_type.check_rank(rank)?;
        let mut roots = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                roots.push(Root::Minus(i, j));
                roots.push(Root::Plus(i, j));
            }
            if lie_type == LieType::B {
                roots.push(Root::Short(i));
            }
        }
        let weights: Vec<Vec<i64>> = (1..=rank).map(|i| doubled_weight(i, rank, lie_type)).collect();
        let reflections = roots
            .into_iter()
            .map(|beta| {
                let b = beta.coords(rank);
                let norm: i64 = b.iter().map(|x| x * x).sum();
                let pairings = weights
                    .iter()
                    .map(|w| {
                        let dot: i64 = w.iter().zip(&b).map(|(x, y)| x * y).sum();
                        // <omega, beta^vee> = 2 (omega, beta) / (beta, beta)
                        assert_eq!(dot % norm, 0);
                        dot / norm
                    })
                    .collect();
                (beta.reflection(rank, lie_type), pairings)
            })
            .collect();
        Ok(Self {
            lie_type,
            rank,
            reflections,
        })
    }

    /// `sigma_{s_i} * sigma_w`.
    pub fn divisor_times(&self, i: usize, w: &SignedPermutation) -> Class {
        let mut out = Class::new();
        let target = w.length() + 1;
        for (t, pairings) in &self.reflections {
            let c = pairings[i - 1];
            if c == 0 {
                continue;
            }
            let wt = w.multiply(t).expect("same group");
            if wt.length() == target {
                *out.entry(wt).or_insert_with(BigRational::zero) += BigRational::from_integer(c.into());
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn divisor_times_class(&self, i: usize, class: &Class) -> Class {
        let mut out = Class::new();
        for (w, a) in class {
            for (x, c) in self.divisor_times(i, w) {
                *out.entry(x).or_insert_with(BigRational::zero) += a * c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// `2 omega_i` in the `e` basis.
fn doubled_weight(i: usize, rank: usize, lie_type: LieType) -> Vec<i64> {
    let mut w = vec![0; rank];
    let spin = match lie_type {
        LieType::B => i == rank,
        LieType::D => i >= rank - 1,
    };
    if spin {
        w.iter_mut().for_each(|x| *x = 1);
        if lie_type == LieType::D && i == rank - 1 {
            w[rank - 1] = -1;
        }
    } else {
        w[..i].iter_mut().for_each(|x| *x = 2);
    }
    w
}

/// Full product table built from [`ChevalleyRule`].
#[derive(Debug)]
pub struct ChevalleyProducts {
    rule: ChevalleyRule,
    /// For each `u`, a combination of divisor monomials (nondecreasing
    /// letter sequences) with `m(D) sigma_e = sigma_u`.
    expressions: BTreeMap<SignedPermutation, Vec<(Vec<usize>, BigRational)>>,
}

impl ChevalleyProducts {
    pub fn new(rank: usize, lie_type: LieType) -> Result<Self> {
        let rule = ChevalleyRule::new(rank, lie_type)?;
        let elements = all_elements(rank, lie_type);
        let e = SignedPermutation::identity(rank, lie_type);
        let mut expressions = BTreeMap::new();
        for k in 0..=lie_type.max_length(rank) {
            let rows: Vec<&SignedPermutation> = elements.iter().filter(|w| w.length() == k).collect();
            let monomials = nondecreasing_sequences(rank, k);
            let columns: Vec<Class> = monomials
                .iter()
                .map(|m| {
                    let mut c = Class::from([(e.clone(), BigRational::one())]);
                    for &i in m.iter().rev() {
                        c = rule.divisor_times_class(i, &c);
                    }
                    c
                })
                .collect();
            let matrix: Vec<Vec<BigRational>> = rows
                .iter()
                .map(|w| {
                    columns
                        .iter()
                        .map(|c| c.get(*w).cloned().unwrap_or_else(BigRational::zero))
                        .collect()
                })
                .collect();
            for (r, u) in rows.iter().enumerate() {
                let rhs: Vec<BigRational> = (0..rows.len())
                    .map(|s| if s == r { BigRational::one() } else { BigRational::zero() })
                    .collect();
                let solution = solve(&matrix, &rhs).ok_or_else(|| {
                    Error::OracleMiscalibrated(format!("sigma_{u} is not a polynomial in divisors"))
                })?;
                let expr = monomials
                    .iter()
                    .zip(solution)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.clone(), c))
                    .collect();
                expressions.insert((*u).clone(), expr);
            }
        }
        Ok(Self { rule, expressions })
    }

    pub fn rule(&self) -> &ChevalleyRule {
        &self.rule
    }

    /// `sigma_u * sigma_v` with integer coefficients.
    pub fn product(&self, u: &SignedPermutation, v: &SignedPermutation) -> Result<BTreeMap<SignedPermutation, u64>> {
        let mut total = Class::new();
        for (m, a) in &self.expressions[u] {
            let mut c = Class::from([(v.clone(), a.clone())]);
            for &i in m.iter().rev() {
                c = self.rule.divisor_times_class(i, &c);
            }
            for (w, b) in c {
                *total.entry(w).or_insert_with(BigRational::zero) += b;
            }
        }
        let mut out = BTreeMap::new();
        for (w, c) in total {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() || c.is_negative() {
                return Err(Error::NonIntegerResult(c.to_string()));
            }
            out.insert(w, c.to_integer().to_u64().expect("small"));
        }
        Ok(out)
    }

    pub fn lie_type(&self) -> LieType {
        self.rule.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rule.rank
    }
}

fn nondecreasing_sequences(rank: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s: Vec<usize>| {
                let start = s.last().copied().unwrap_or(1);
                (start..=rank).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Some solution of `A x = b` over `Q`, free variables set to zero.
fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = m[k][cols].clone();
    }
    Some(x)
}

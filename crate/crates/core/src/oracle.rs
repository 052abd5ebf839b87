//! Schubert structure constants by divided differences on exact polynomial
//! representatives, `P_{w0} = prod(positive roots) / |W|`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;
use crate::weyl::{all_elements, LieType, SignedPermutation, Word};

/// Roots as integer linear forms in `x_1..x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub lie_type: LieType,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub group_order: usize,
}

impl RootSystemData {
    pub fn new(rank: usize, lie_type: LieType) -> Result<Self> {
        lie_type.check_rank(rank)?;
        let unit = |i: usize| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        };
        let combo = |i: usize, j: usize, sign: i64| {
            let mut v = unit(i);
            v[j] = sign;
            v
        };
        let mut simple_roots: Vec<Vec<i64>> = (0..rank - 1).map(|i| combo(i, i + 1, -1)).collect();
        simple_roots.push(match lie_type {
            LieType::B => unit(rank - 1),
            LieType::D => combo(rank - 2, rank - 1, 1),
        });
        let mut positive_roots = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                positive_roots.push(combo(i, j, -1));
                positive_roots.push(combo(i, j, 1));
            }
            if lie_type == LieType::B {
                positive_roots.push(unit(i));
            }
        }
        Ok(Self {
            lie_type,
            rank,
            simple_roots,
            positive_roots,
            group_order: lie_type.group_order(rank),
        })
    }

    /// `alpha_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i - 1]
    }

    pub fn top_representative(&self) -> RationalPolynomial {
        let mut p = RationalPolynomial::one(self.rank);
        for root in &self.positive_roots {
            p = &p * &RationalPolynomial::linear(root);
        }
        p.scale(&BigRational::new(BigInt::from(1), BigInt::from(self.group_order)))
    }
}

/// `x_i -> sign(w(i)) x_|w(i)|`; a left action.
pub fn weyl_substitute(w: &SignedPermutation, f: &RationalPolynomial) -> RationalPolynomial {
    assert_eq!(w.rank(), f.nvars(), "rank mismatch in substitution");
    let targets: Vec<usize> = w.images().iter().map(|&k| k.unsigned_abs() as usize - 1).collect();
    let signs: Vec<bool> = w.images().iter().map(|&k| k < 0).collect();
    f.substitute_signed(&targets, &signs)
}

/// `(f - s_i f) / alpha_i`.
///
/// # Panics
///
/// If the division leaves a remainder, which cannot happen for a correct
/// substitution.
pub fn divided_difference(i: usize, f: &RationalPolynomial, lie_type: LieType) -> RationalPolynomial {
    let rank = f.nvars();
    let s = SignedPermutation::simple_reflection(i, rank, lie_type).expect("valid simple index");
    let alpha = simple_root_form(i, rank, lie_type);
    let numerator = f - &weyl_substitute(&s, f);
    numerator
        .div_exact_linear(&alpha)
        .unwrap_or_else(|| panic!("divided difference {i} of {f} left a remainder"))
}

fn simple_root_form(i: usize, rank: usize, lie_type: LieType) -> Vec<i64> {
    let mut a = vec![0i64; rank];
    if i < rank {
        a[i - 1] = 1;
        a[i] = -1;
    } else {
        match lie_type {
            LieType::B => a[rank - 1] = 1,
            LieType::D => {
                a[rank - 2] = 1;
                a[rank - 1] = 1;
            }
        }
    }
    a
}

/// `d_{a1} ... d_{ak} f`, rightmost letter first.
pub fn divided_difference_word(word: &Word, f: &RationalPolynomial, lie_type: LieType) -> RationalPolynomial {
    word.letters()
        .iter()
        .rev()
        .fold(f.clone(), |g, &i| divided_difference(i, &g, lie_type))
}

/// Memoized representatives for one (type, rank).
#[derive(Debug)]
pub struct SchubertOracle {
    lie_type: LieType,
    rank: usize,
    representatives: HashMap<SignedPermutation, RationalPolynomial>,
}

impl SchubertOracle {
    pub fn new(rank: usize, lie_type: LieType) -> Result<Self> {
        let roots = RootSystemData::new(rank, lie_type)?;
        let w0 = SignedPermutation::longest_element(rank, lie_type);
        let mut elements = all_elements(rank, lie_type);
        elements.sort_by_key(|w| std::cmp::Reverse(w.length()));
        let mut representatives = HashMap::with_capacity(elements.len());
        representatives.insert(w0.clone(), roots.top_representative());
        for w in elements.iter().skip(1) {
            // P_w = d_i P_{w s_i} for the smallest i with w s_i > w.
            let i = (1..=rank)
                .find(|&i| !w.is_right_descent(i))
                .expect("only w0 has every right descent");
            let above = &representatives[&w.right_mul_simple(i)];
            let p = divided_difference(i, above, lie_type);
            representatives.insert(w.clone(), p);
        }
        let oracle = Self {
            lie_type,
            rank,
            representatives,
        };
        let e = oracle.representative(&SignedPermutation::identity(rank, lie_type));
        if e != &RationalPolynomial::one(rank) {
            return Err(Error::OracleMiscalibrated(format!("P_e = {e}")));
        }
        Ok(oracle)
    }

    /// Process-wide memoized instance.
    pub fn shared(rank: usize, lie_type: LieType) -> Result<Arc<Self>> {
        type Cache = Mutex<HashMap<(LieType, usize), Arc<SchubertOracle>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(o) = cache.lock().unwrap().get(&(lie_type, rank)) {
            return Ok(Arc::clone(o));
        }
        let built = Arc::new(Self::new(rank, lie_type)?);
        let mut guard = cache.lock().unwrap();
        Ok(Arc::clone(guard.entry((lie_type, rank)).or_insert(built)))
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn representative(&self, w: &SignedPermutation) -> &RationalPolynomial {
        &self.representatives[w]
    }

    fn check(&self, w: &SignedPermutation) -> Result<()> {
        if w.lie_type() != self.lie_type || w.rank() != self.rank {
            return Err(Error::TypeMismatch(
                format!("{}{}", self.lie_type, self.rank),
                format!("{}{}", w.lie_type(), w.rank()),
            ));
        }
        Ok(())
    }

    /// `c_{u',v}^w = d_w(P_{u'} P_v)`.
    pub fn constant(&self, u_prime: &SignedPermutation, v: &SignedPermutation, w: &SignedPermutation) -> Result<u64> {
        for x in [u_prime, v, w] {
            self.check(x)?;
        }
        let expected = u_prime.length() + v.length();
        if w.length() != expected {
            return Err(Error::LengthMismatch {
                expected,
                actual: w.length(),
            });
        }
        let f = self.representative(u_prime) * self.representative(v);
        let g = divided_difference_word(&w.reduced_word(), &f, self.lie_type);
        to_count(&g)
    }

    /// All nonzero `c_{u',v}^w`, keyed by `w`.
    pub fn expansion(&self, u_prime: &SignedPermutation, v: &SignedPermutation) -> Result<BTreeMap<SignedPermutation, u64>> {
        self.check(u_prime)?;
        self.check(v)?;
        let f = self.representative(u_prime) * self.representative(v);
        self.expand_polynomial(&f, u_prime.length() + v.length())
    }

    /// Coefficients of a homogeneous `f` of degree `degree` in the `P_w`
    /// basis, via `d_x f` for all `x` up to that length.
    pub fn expand_polynomial(&self, f: &RationalPolynomial, degree: usize) -> Result<BTreeMap<SignedPermutation, u64>> {
        let e = SignedPermutation::identity(self.rank, self.lie_type);
        let mut level: BTreeMap<SignedPermutation, RationalPolynomial> = BTreeMap::new();
        if !f.is_zero() {
            level.insert(e, f.clone());
        }
        for _ in 0..degree {
            let mut next: BTreeMap<SignedPermutation, RationalPolynomial> = BTreeMap::new();
            for (x, g) in &level {
                for i in 1..=self.rank {
                    let y = x.left_mul_simple(i);
                    if y.length() <= x.length() || next.contains_key(&y) {
                        continue;
                    }
                    // d_y = d_i d_x only when i is the smallest left descent
                    // of y; other paths give the same operator.
                    let d = divided_difference(i, g, self.lie_type);
                    if !d.is_zero() {
                        next.insert(y, d);
                    }
                }
            }
            level = next;
        }
        let mut out = BTreeMap::new();
        for (w, g) in level {
            let c = to_count(&g)?;
            if c != 0 {
                out.insert(w, c);
            }
        }
        Ok(out)
    }
}

fn to_count(g: &RationalPolynomial) -> Result<u64> {
    let c = g
        .as_constant()
        .ok_or_else(|| Error::NonIntegerResult(g.to_string()))?;
    if !c.is_integer() || c.is_negative() {
        return Err(Error::NonIntegerResult(c.to_string()));
    }
    c.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegerResult(c.to_string()))
}

/// Standalone form of [`SchubertOracle::constant`] on the shared instance.
pub fn oracle_constant(u_prime: &SignedPermutation, v: &SignedPermutation, w: &SignedPermutation) -> Result<u64> {
    SchubertOracle::shared(u_prime.rank(), u_prime.lie_type())?.constant(u_prime, v, w)
}

pub fn schubert_representative(w: &SignedPermutation) -> Result<RationalPolynomial> {
    Ok(SchubertOracle::shared(w.rank(), w.lie_type())?
        .representative(w)
        .clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::elements_of_length;
    use num_traits::One;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sp(images: &[i32], t: LieType) -> SignedPermutation {
        SignedPermutation::new(images.to_vec(), t, images.len()).unwrap()
    }

    fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> RationalPolynomial {
        let mut p = RationalPolynomial::zero(nvars);
        for _ in 0..rng.gen_range(1..6) {
            let e: Vec<u8> = (0..nvars).map(|_| rng.gen_range(0..4)).collect();
            let c = BigRational::from_integer(rng.gen_range(-5i64..=5).into());
            p.add_term(crate::poly::Monomial::new(&e), c);
        }
        p
    }

    #[test]
    fn root_data() {
        let b = RootSystemData::new(3, LieType::B).unwrap();
        assert_eq!(b.positive_roots.len(), 9);
        assert_eq!(b.group_order, 48);
        let d = RootSystemData::new(4, LieType::D).unwrap();
        assert_eq!(d.positive_roots.len(), 12);
        assert_eq!(d.simple_root(4), &[0, 0, 1, 1]);
        for t in [LieType::B, LieType::D] {
            let r = RootSystemData::new(3, t).unwrap();
            assert_eq!(r.positive_roots.len(), t.max_length(3));
        }
    }

    #[test]
    fn substitution_basics() {
        let f = RationalPolynomial::variable(3, 2);
        let e = SignedPermutation::identity(3, LieType::B);
        assert_eq!(weyl_substitute(&e, &f), f);
        let s3 = SignedPermutation::simple_reflection(3, 3, LieType::B).unwrap();
        assert_eq!(weyl_substitute(&s3, &f), -&f);
    }

    #[test]
    fn substitution_is_an_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for t in [LieType::B, LieType::D] {
            let elems = all_elements(3, t);
            for _ in 0..50 {
                let a = &elems[rng.gen_range(0..elems.len())];
                let b = &elems[rng.gen_range(0..elems.len())];
                let f = random_poly(&mut rng, 3);
                let ab = a.multiply(b).unwrap();
                assert_eq!(weyl_substitute(&ab, &f), weyl_substitute(a, &weyl_substitute(b, &f)));
            }
        }
    }

    #[test]
    fn nil_and_braid_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (t, n) in [(LieType::B, 3), (LieType::D, 4)] {
            for _ in 0..20 {
                let f = random_poly(&mut rng, n);
                for i in 1..=n {
                    let d = divided_difference(i, &f, t);
                    assert!(divided_difference(i, &d, t).is_zero());
                    for j in i + 1..=n {
                        let m = {
                            let s = SignedPermutation::simple_reflection(i, n, t).unwrap();
                            let r = SignedPermutation::simple_reflection(j, n, t).unwrap();
                            let mut p = s.multiply(&r).unwrap();
                            let mut k = 1;
                            while !p.is_identity() {
                                p = p.multiply(&s.multiply(&r).unwrap()).unwrap();
                                k += 1;
                            }
                            k
                        };
                        let alt = |first: usize, second: usize| {
                            let letters: Vec<usize> =
                                (0..m).map(|k| if k % 2 == 0 { first } else { second }).collect();
                            divided_difference_word(&Word::new(letters, n).unwrap(), &f, t)
                        };
                        assert_eq!(alt(i, j), alt(j, i), "{t}{n} braid {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn representatives_have_length_degree() {
        for (t, n) in [(LieType::B, 2), (LieType::B, 3), (LieType::D, 3), (LieType::D, 4)] {
            let o = SchubertOracle::shared(n, t).unwrap();
            for w in all_elements(n, t) {
                let p = o.representative(&w);
                assert!(p.is_homogeneous());
                assert_eq!(p.degree(), Some(w.length()));
            }
        }
    }

    #[test]
    fn representative_is_word_independent() {
        for (t, n) in [(LieType::B, 3), (LieType::D, 4)] {
            let o = SchubertOracle::shared(n, t).unwrap();
            let w0 = SignedPermutation::longest_element(n, t);
            let top = o.representative(&w0).clone();
            for w in all_elements(n, t).iter().step_by(5) {
                let x = w.inverse().multiply(&w0).unwrap();
                for word in x.all_reduced_words().iter().take(3) {
                    assert_eq!(&divided_difference_word(word, &top, t), o.representative(w));
                }
            }
        }
    }

    #[test]
    fn unit_and_duality() {
        for (t, n) in [(LieType::B, 2), (LieType::D, 2), (LieType::D, 3), (LieType::B, 3)] {
            let o = SchubertOracle::shared(n, t).unwrap();
            let e = SignedPermutation::identity(n, t);
            let w0 = SignedPermutation::longest_element(n, t);
            let elems = all_elements(n, t);
            for v in &elems {
                assert_eq!(o.constant(&e, v, v).unwrap(), 1);
            }
            for u in &elems {
                for v in elems_of(&elems, w0.length() - u.length()) {
                    let c = o.constant(u, v, &w0).unwrap();
                    assert_eq!(c == 1, *v == w0.multiply(u).unwrap(), "{u} {v}");
                    assert!(c <= 1);
                }
            }
        }
    }

    fn elems_of(elems: &[SignedPermutation], len: usize) -> impl Iterator<Item = &SignedPermutation> {
        elems.iter().filter(move |w| w.length() == len)
    }

    #[test]
    fn commutativity_and_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (t, n) = (LieType::B, 3);
        let o = SchubertOracle::shared(n, t).unwrap();
        let elems = all_elements(n, t);
        for _ in 0..30 {
            let u = &elems[rng.gen_range(0..elems.len())];
            let v = &elems[rng.gen_range(0..elems.len())];
            let d = u.length() + v.length();
            if d > t.max_length(n) {
                continue;
            }
            let ex = o.expansion(u, v).unwrap();
            assert_eq!(ex, o.expansion(v, u).unwrap());
            for w in elements_of_length(n, t, d) {
                let c = o.constant(u, v, &w).unwrap();
                assert_eq!(c, o.constant(v, u, &w).unwrap());
                assert_eq!(c, ex.get(&w).copied().unwrap_or(0));
            }
        }
    }

    #[test]
    fn known_b4_constant() {
        let t = LieType::B;
        let u_prime = sp(&[2, 3, 4, -1], t);
        let v = sp(&[2, 3, 4, 1], t);
        let w = SignedPermutation::from_word(&Word::new(vec![2, 1, 3, 2, 4, 3, 4], 4).unwrap(), 4, t).unwrap();
        assert_eq!(oracle_constant(&u_prime, &v, &w).unwrap(), 2);
        assert_eq!(
            oracle_constant(&u_prime, &v, &SignedPermutation::identity(4, t)),
            Err(Error::LengthMismatch { expected: 7, actual: 0 })
        );
    }

    #[test]
    fn top_class_integrates_to_one() {
        for (t, n) in [(LieType::B, 2), (LieType::D, 3)] {
            let roots = RootSystemData::new(n, t).unwrap();
            let w0 = SignedPermutation::longest_element(n, t);
            let top = roots.top_representative();
            let c = divided_difference_word(&w0.reduced_word(), &top, t);
            assert_eq!(c.as_constant(), Some(BigRational::one()));
        }
    }
}

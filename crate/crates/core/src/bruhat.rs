//! Bruhat order by the subword property.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use crate::error::Result;
use crate::weyl::SignedPermutation;

/// All subword products of the canonical reduced word of `b`, i.e. the
/// Bruhat interval `[e, b]`.
pub fn lower_interval(b: &SignedPermutation) -> HashSet<SignedPermutation> {
    let mut products = HashSet::from([SignedPermutation::identity(b.rank(), b.lie_type())]);
    // Build subwords from the right: T_j = T_{j+1} u s_{a_j} T_{j+1}.
    for &a in b.reduced_word().letters().iter().rev() {
        let lifted: Vec<_> = products.iter().map(|x| x.left_mul_simple(a)).collect();
        products.extend(lifted);
    }
    products
}

/// `a <= b` in Bruhat order.
pub fn bruhat_leq(a: &SignedPermutation, b: &SignedPermutation) -> Result<bool> {
    a.multiply(b)?;
    if a.length() > b.length() {
        return Ok(false);
    }
    Ok(lower_interval(b).contains(a))
}

/// Bruhat comparisons with the lower intervals cached per upper element.
#[derive(Default)]
pub struct BruhatOracle {
    intervals: Mutex<HashMap<SignedPermutation, Arc<HashSet<SignedPermutation>>>>,
}

impl BruhatOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn leq(&self, a: &SignedPermutation, b: &SignedPermutation) -> Result<bool> {
        a.multiply(b)?;
        if a.length() > b.length() {
            return Ok(false);
        }
        let cached = self.intervals.lock().unwrap().get(b).cloned();
        let interval = match cached {
            Some(set) => set,
            None => {
                let set = Arc::new(lower_interval(b));
                self.intervals
                    .lock()
                    .unwrap()
                    .insert(b.clone(), Arc::clone(&set));
                set
            }
        };
        Ok(interval.contains(a))
    }
}

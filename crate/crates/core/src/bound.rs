//! Exponents of the maximal clique bounds: `n^k` in the plane and the
//! facet-pair count `h` for polytopes in `d` dimensions.

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::Zero;

use crate::error::{Error, Result};

/// `C(a, b)`, zero when `b > a`.
pub fn choose(a: u64, b: u64) -> BigUint {
    if b > a {
        BigUint::zero()
    } else {
        binomial(BigUint::from(a), BigUint::from(b))
    }
}

/// `sum_{i=0}^{d-1} C(k, d-i) * C(k, i+1)`.
pub fn exponent_bound(k: u64, d: u64) -> Result<BigUint> {
    if k == 0 || d == 0 {
        return Err(Error::InvalidParameters(format!(
            "k and d must be positive, got k={k}, d={d}"
        )));
    }
    Ok((0..d).map(|i| choose(k, d - i) * choose(k, i + 1)).sum())
}

/// The tight planar exponent: `k` directions allow at most `n^k` maximal cliques.
pub fn planar_exponent(k: u64) -> u64 {
    k
}

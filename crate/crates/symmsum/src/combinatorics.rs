//! Subset enumeration and binomial coefficients.

use crate::error::Error;
use crate::matrix::IndexSet;
use num_bigint::BigInt;

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
///
/// The count is C(n, k), so callers should keep n small; the identity
/// verifiers cap n themselves before calling this.
pub fn index_subsets(n: usize, k: usize) -> Result<Vec<IndexSet>, Error> {
    if k > n {
        return Err(Error::invalid(format!(
            "cannot choose {} elements from a set of {}",
            k, n
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(IndexSet::from_sorted_unchecked(current.clone()));
        // Advance to the next combination: bump the rightmost index that
        // still has room, then reset everything after it.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if current[i] < n - (k - i) {
                break;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Binomial coefficient C(n, k) as a big integer; 0 when k > n.
pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

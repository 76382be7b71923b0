use std::fmt::Debug;

use crate::error::Result;
use crate::padic::valuation::{Valuation, Q};

/// Context object for a commutative ring whose elements are plain values.
pub trait Ring {
    type El: Clone + Debug;

    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn from_int(&self, n: i64) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;

    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::El, mut k: u64) -> Self::El {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn mul_int(&self, a: &Self::El, n: i64) -> Self::El {
        self.mul(a, &self.from_int(n))
    }

    fn sum<'a, I>(&self, items: I) -> Self::El
    where
        I: IntoIterator<Item = &'a Self::El>,
        Self::El: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// A ring of truncated elements of a finite extension of `Q_p` with the
/// valuation normalized by `v(p) = 1`.
pub trait Valued: Ring {
    /// Short level name (`Qp`, `K`, `L`, `M`).
    fn level_name(&self) -> &str;

    fn valuation(&self, a: &Self::El) -> Result<Valuation>;

    /// Lower bound on the valuation of the representation error; `None`
    /// for exact elements.
    fn precision_of(&self, a: &Self::El) -> Option<Q>;

    fn inverse(&self, a: &Self::El) -> Result<Self::El>;

    /// Absolute ramification index `e(F/Q_p)`.
    fn ramification_index(&self) -> i64;

    /// An element of valuation `k / e(F/Q_p)`.
    fn element_of_valuation(&self, k: i64) -> Result<Self::El>;

    /// Exact rings admit division-based algorithms without precision loss.
    fn is_exact(&self) -> bool {
        false
    }
}

/// A valued field given with a fixed uniformizer `pi`.
pub trait LocalField: Valued {
    /// `pi^k` for any integer `k`.
    fn pi_power(&self, k: i64) -> Result<Self::El>;
    fn from_bigint(&self, n: &num_bigint::BigInt) -> Self::El;
}

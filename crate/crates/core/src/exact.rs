//! Exact arithmetic in the number field `Q(pi) = Q[X]/(Phi)`, used as an
//! oracle for the truncated p-adic computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::padic::ring::{Ring, Valued};
use crate::padic::valuation::{q, Valuation};

#[derive(Clone, Debug)]
pub struct ExactField {
    p: u64,
    /// Monic integer modulus, degree 0 first, leading 1 included.
    phi: Vec<BigInt>,
}

pub type ExactElem = Vec<BigRational>;

impl ExactField {
    pub fn new(p: u64, phi: &[i64]) -> Result<Self> {
        if phi.last() != Some(&1) || phi.len() < 2 {
            return Err(Error::InvalidInput(
                "modulus must be monic of degree >= 1".into(),
            ));
        }
        Ok(ExactField {
            p,
            phi: phi.iter().map(|&c| BigInt::from(c)).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    /// The class of `X`.
    pub fn pi(&self) -> ExactElem {
        self.pi_pow(1)
    }

    pub fn pi_pow(&self, k: u64) -> ExactElem {
        let mut v = vec![BigRational::zero(); k as usize + 1];
        v[k as usize] = BigRational::one();
        self.reduce(v)
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> ExactElem {
        let e = self.degree();
        while v.len() > e {
            let top = v.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let off = v.len() - e;
            for i in 0..e {
                v[off + i] -= &top * BigRational::from_integer(self.phi[i].clone());
            }
        }
        v.resize(e, BigRational::zero());
        v
    }

    fn mult_matrix(&self, a: &ExactElem) -> Vec<Vec<BigRational>> {
        // row j = coordinates of a * X^j
        let mut rows = Vec::with_capacity(self.degree());
        let mut cur = a.clone();
        for j in 0..self.degree() {
            if j > 0 {
                let mut shifted = vec![BigRational::zero()];
                shifted.extend(cur);
                cur = self.reduce(shifted);
            }
            rows.push(cur.clone());
        }
        rows
    }

    /// Norm down to `Q`.
    pub fn norm(&self, a: &ExactElem) -> BigRational {
        rational_det(self.mult_matrix(a))
    }

    fn vp_int(&self, n: &BigInt) -> i64 {
        let p = BigInt::from(self.p);
        let mut v = 0;
        let mut x = n.abs();
        while (&x % &p).is_zero() {
            x /= &p;
            v += 1;
        }
        v
    }

    /// `v_p` of a nonzero rational.
    pub fn vp_rational(&self, r: &BigRational) -> i64 {
        self.vp_int(r.numer()) - self.vp_int(r.denom())
    }
}

/// Determinant over `Q` by Gaussian elimination.
pub fn rational_det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pr != col {
            m.swap(pr, col);
            acc = -acc;
        }
        let piv = m[col][col].clone();
        acc *= &piv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &piv;
            for c in col + 1..n {
                let t = &f * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    acc
}

impl Ring for ExactField {
    type El = ExactElem;

    fn zero(&self) -> ExactElem {
        vec![BigRational::zero(); self.degree()]
    }

    fn one(&self) -> ExactElem {
        self.from_int(1)
    }

    fn from_int(&self, n: i64) -> ExactElem {
        let mut v = self.zero();
        v[0] = BigRational::from_integer(BigInt::from(n));
        v
    }

    fn add(&self, a: &ExactElem, b: &ExactElem) -> ExactElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &ExactElem) -> ExactElem {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &ExactElem, b: &ExactElem) -> ExactElem {
        let e = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * e - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }
}

impl Valued for ExactField {
    fn level_name(&self) -> &str {
        "K(exact)"
    }

    fn valuation(&self, a: &ExactElem) -> Result<Valuation> {
        if a.iter().all(Zero::is_zero) {
            return Ok(Valuation::Bottom {
                precision: crate::padic::valuation::infinite_precision(),
            });
        }
        let n = self.norm(a);
        Ok(Valuation::Finite(q(
            self.vp_rational(&n),
            self.degree() as i64,
        )))
    }

    fn precision_of(&self, _a: &ExactElem) -> Option<crate::padic::Q> {
        None
    }

    fn inverse(&self, a: &ExactElem) -> Result<ExactElem> {
        if a.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput(
                "division by zero in exact field".into(),
            ));
        }
        // solve (mult matrix)^T z = e_0
        let e = self.degree();
        let rows = self.mult_matrix(a);
        let mut m: Vec<Vec<BigRational>> = (0..e)
            .map(|i| {
                let mut r: Vec<BigRational> = (0..e).map(|j| rows[j][i].clone()).collect();
                r.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                r
            })
            .collect();
        for col in 0..e {
            let pr = (col..e)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::InvalidInput("singular multiplication map".into()))?;
            m.swap(pr, col);
            let piv = m[col][col].clone();
            for c in col..=e {
                m[col][c] = &m[col][c] / &piv;
            }
            for r in 0..e {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=e {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        Ok(m.into_iter().map(|r| r[e].clone()).collect())
    }

    fn ramification_index(&self) -> i64 {
        self.degree() as i64
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn element_of_valuation(&self, k: i64) -> Result<ExactElem> {
        if k >= 0 {
            Ok(self.pi_pow(k as u64))
        } else {
            self.inverse(&self.pi_pow((-k) as u64))
        }
    }
}

impl crate::padic::ring::LocalField for ExactField {
    fn pi_power(&self, k: i64) -> Result<ExactElem> {
        self.element_of_valuation(k)
    }

    fn from_bigint(&self, n: &BigInt) -> ExactElem {
        let mut v = self.zero();
        v[0] = BigRational::from_integer(n.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_relations() {
        let k = ExactField::new(2, &[2, 0, 0, 0, 0, 1]).unwrap();
        let x = k.mul(&k.pi_pow(2), &k.pi_pow(3));
        assert_eq!(x, k.from_int(-2));
        assert_eq!(
            k.valuation(&k.pi_pow(6)).unwrap(),
            Valuation::Finite(q(6, 5))
        );
        let a = k.add(&k.one(), &k.pi());
        let ai = k.inverse(&a).unwrap();
        assert_eq!(k.mul(&a, &ai), k.one());
        assert_eq!(
            k.norm(&k.from_int(3)),
            BigRational::from_integer(243.into())
        );
    }
}

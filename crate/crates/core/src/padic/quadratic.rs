//! `M = B[w]/(w^2 - z)` over a valued ring, for a unit `z`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::padic::ring::{Ring, Valued};
use crate::padic::valuation::{Valuation, Q};

pub struct QuadraticExtension<B: Valued> {
    name: String,
    base: Arc<B>,
    z: B::El,
    rel_e: i64,
}

/// `a + b w`.
#[derive(Clone, Debug)]
pub struct QuadElem<E> {
    pub a: E,
    pub b: E,
}

impl<B: Valued> QuadraticExtension<B> {
    /// `rel_e` is the ramification index over the base (1 or 2) as far as the
    /// caller knows it; it only affects the integer normalization.
    pub fn new(name: &str, base: Arc<B>, z: B::El, rel_e: i64) -> Result<Self> {
        if base.valuation(&z)? != Valuation::Finite(Q::from_integer(0)) {
            return Err(Error::InvalidInput(
                "quadratic radicand must be a unit".into(),
            ));
        }
        Ok(QuadraticExtension {
            name: name.to_string(),
            base,
            z,
            rel_e,
        })
    }

    pub fn base(&self) -> &Arc<B> {
        &self.base
    }

    pub fn radicand(&self) -> &B::El {
        &self.z
    }

    /// `w`, the square root of the radicand.
    pub fn w(&self) -> QuadElem<B::El> {
        QuadElem {
            a: self.base.zero(),
            b: self.base.one(),
        }
    }

    pub fn embed(&self, a: &B::El) -> QuadElem<B::El> {
        QuadElem {
            a: a.clone(),
            b: self.base.zero(),
        }
    }

    pub fn conjugate(&self, x: &QuadElem<B::El>) -> QuadElem<B::El> {
        QuadElem {
            a: x.a.clone(),
            b: self.base.neg(&x.b),
        }
    }

    /// `a^2 - z b^2`.
    pub fn norm(&self, x: &QuadElem<B::El>) -> B::El {
        let b2 = self.base.mul(&x.b, &x.b);
        self.base
            .sub(&self.base.mul(&x.a, &x.a), &self.base.mul(&self.z, &b2))
    }
}

impl<B: Valued> Ring for QuadraticExtension<B> {
    type El = QuadElem<B::El>;

    fn zero(&self) -> Self::El {
        self.embed(&self.base.zero())
    }

    fn one(&self) -> Self::El {
        self.embed(&self.base.one())
    }

    fn from_int(&self, n: i64) -> Self::El {
        self.embed(&self.base.from_int(n))
    }

    fn add(&self, x: &Self::El, y: &Self::El) -> Self::El {
        QuadElem {
            a: self.base.add(&x.a, &y.a),
            b: self.base.add(&x.b, &y.b),
        }
    }

    fn neg(&self, x: &Self::El) -> Self::El {
        QuadElem {
            a: self.base.neg(&x.a),
            b: self.base.neg(&x.b),
        }
    }

    fn mul(&self, x: &Self::El, y: &Self::El) -> Self::El {
        let bb = self.base.mul(&x.b, &y.b);
        QuadElem {
            a: self
                .base
                .add(&self.base.mul(&x.a, &y.a), &self.base.mul(&self.z, &bb)),
            b: self
                .base
                .add(&self.base.mul(&x.a, &y.b), &self.base.mul(&x.b, &y.a)),
        }
    }
}

impl<B: Valued> Valued for QuadraticExtension<B> {
    fn level_name(&self) -> &str {
        &self.name
    }

    fn valuation(&self, x: &Self::El) -> Result<Valuation> {
        let prec = self.precision_of(x);
        let v = match self.base.valuation(&self.norm(x))? {
            Valuation::Finite(v) => v / 2,
            Valuation::Bottom { precision } => {
                let half = precision / 2;
                return Ok(Valuation::Bottom {
                    precision: prec.map_or(half, |p| p.min(half)),
                });
            }
        };
        Ok(match prec {
            Some(p) if v >= p => Valuation::Bottom { precision: p },
            _ => Valuation::Finite(v),
        })
    }

    fn precision_of(&self, x: &Self::El) -> Option<Q> {
        // w is a unit, so both coordinates contribute at their own precision
        match (self.base.precision_of(&x.a), self.base.precision_of(&x.b)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn inverse(&self, x: &Self::El) -> Result<Self::El> {
        let n_inv = self.base.inverse(&self.norm(x))?;
        let c = self.conjugate(x);
        Ok(QuadElem {
            a: self.base.mul(&c.a, &n_inv),
            b: self.base.mul(&c.b, &n_inv),
        })
    }

    fn ramification_index(&self) -> i64 {
        self.base.ramification_index() * self.rel_e
    }

    fn element_of_valuation(&self, k: i64) -> Result<Self::El> {
        if k % self.rel_e != 0 {
            return Err(Error::InvalidInput(format!(
                "level {} has no uniformizer attached; only multiples of {} are available",
                self.name, self.rel_e
            )));
        }
        Ok(self.embed(&self.base.element_of_valuation(k / self.rel_e)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{q, EisensteinRing};

    #[test]
    fn sqrt_three_over_q2() {
        let base = EisensteinRing::rational(2, 40).unwrap();
        let m = QuadraticExtension::new("M", base.clone(), base.from_int(3), 2).unwrap();
        let w = m.w();
        assert!(base.sub(&m.mul(&w, &w).a, &base.from_int(3)).is_bottom());
        // 1 + w has norm -2, so valuation 1/2
        let x = m.add(&m.one(), &w);
        assert_eq!(m.valuation(&x).unwrap(), Valuation::Finite(q(1, 2)));
        let xi = m.inverse(&x).unwrap();
        let one = m.mul(&x, &xi);
        assert!(m.valuation(&m.sub(&one, &m.one())).unwrap().is_bottom());
    }
}

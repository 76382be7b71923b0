//! A simple extension `B[Y]/(g(Y))` of a valued ring, with `g` monic.
//!
//! Elements are coordinate vectors in the basis `1, y, ..., y^(d-1)`; the
//! valuation is read off the norm, `v(x) = v(N(x)) / d`.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::padic::linalg;
use crate::padic::ring::{Ring, Valued};
use crate::padic::valuation::{infinite_precision, Valuation, Q};

/// Above this degree the one-off inversion of the change of basis costs more
/// than the norm determinants it saves.
pub const FAST_VALUATION_MAX_DEGREE: usize = 32;

pub struct SimpleExtension<B: Valued> {
    name: String,
    base: Arc<B>,
    /// Monic modulus, degree `d`, coefficients from degree 0.
    modulus: Vec<B::El>,
    gen_val: Q,
    /// `e` of this extension over `base`.
    rel_e: i64,
    uniformizer: OnceLock<Vec<B::El>>,
    /// Change of basis from `1, y, ...` to `1, pi_L, ...`, available once a
    /// uniformizer is known and the extension is totally ramified.
    to_uniformizer_basis: OnceLock<Vec<Vec<B::El>>>,
}

impl<B: Valued> SimpleExtension<B> {
    /// `modulus` must be monic. `gen_val` is the valuation of the class of
    /// `Y`, `rel_e` the ramification index over the base.
    pub fn new(
        name: &str,
        base: Arc<B>,
        modulus: Vec<B::El>,
        gen_val: Q,
        rel_e: i64,
    ) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidInput(
                "extension modulus must have degree >= 1".into(),
            ));
        }
        Ok(SimpleExtension {
            name: name.to_string(),
            base,
            modulus,
            gen_val,
            rel_e,
            uniformizer: OnceLock::new(),
            to_uniformizer_basis: OnceLock::new(),
        })
    }

    pub fn base(&self) -> &Arc<B> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[B::El] {
        &self.modulus
    }

    pub fn gen_valuation(&self) -> Q {
        self.gen_val
    }

    pub fn relative_ramification(&self) -> i64 {
        self.rel_e
    }

    /// Records an element of valuation `1/e`; only the first call succeeds.
    pub fn set_uniformizer(&self, u: Vec<B::El>) -> Result<()> {
        let v = self.valuation(&u)?;
        let want = Q::new(1, self.ramification_index());
        if v != Valuation::Finite(want) {
            return Err(Error::certificate(
                "uniformizer",
                format!("candidate has valuation {v}, expected {want}"),
            ));
        }
        if self.rel_e == self.degree() as i64 && self.degree() <= FAST_VALUATION_MAX_DEGREE {
            // powers of pi_L have distinct valuations modulo the base value
            // group, so coordinates in that basis give the valuation directly
            let mut rows = Vec::with_capacity(self.degree());
            let mut cur = self.one();
            for _ in 0..self.degree() {
                rows.push(cur.clone());
                cur = self.mul(&cur, &u);
            }
            let d = self.degree();
            let bt: Vec<Vec<B::El>> = (0..d)
                .map(|i| (0..d).map(|j| rows[j][i].clone()).collect())
                .collect();
            let inv = linalg::inverse(&*self.base, bt)?;
            let _ = self.to_uniformizer_basis.set(inv);
        }
        self.uniformizer.set(u).map_err(|_| {
            Error::InvalidInput(format!("level {} already has a uniformizer", self.name))
        })
    }

    pub fn uniformizer(&self) -> Option<&Vec<B::El>> {
        self.uniformizer.get()
    }

    /// The class of `Y`.
    pub fn gen(&self) -> Vec<B::El> {
        let mut v = vec![self.base.zero(); self.degree()];
        if self.degree() == 1 {
            v[0] = self.base.neg(&self.modulus[0]);
        } else {
            v[1] = self.base.one();
        }
        v
    }

    pub fn embed(&self, a: &B::El) -> Vec<B::El> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = a.clone();
        v
    }

    /// Reduces a polynomial in `Y` of any degree.
    pub fn reduce(&self, mut poly: Vec<B::El>) -> Vec<B::El> {
        let d = self.degree();
        while poly.len() > d {
            let top = poly.pop().expect("nonempty");
            let off = poly.len() - d;
            for i in 0..d {
                let t = self.base.mul(&top, &self.modulus[i]);
                poly[off + i] = self.base.sub(&poly[off + i], &t);
            }
        }
        poly.resize(d, self.base.zero());
        poly
    }

    fn times_gen(&self, a: &[B::El]) -> Vec<B::El> {
        let mut v = Vec::with_capacity(a.len() + 1);
        v.push(self.base.zero());
        v.extend_from_slice(a);
        self.reduce(v)
    }

    /// Matrix whose row `j` holds the coordinates of `x * y^j`.
    fn mult_rows(&self, x: &[B::El]) -> Vec<Vec<B::El>> {
        let mut rows = Vec::with_capacity(self.degree());
        let mut cur = x.to_vec();
        for j in 0..self.degree() {
            if j > 0 {
                cur = self.times_gen(&cur);
            }
            rows.push(cur.clone());
        }
        rows
    }

    /// `N(x)` down to the base.
    pub fn norm(&self, x: &[B::El]) -> Result<B::El> {
        linalg::det(&*self.base, self.mult_rows(x))
    }

    /// Evaluates a polynomial over the base at an element.
    pub fn eval_base_poly(&self, coeffs: &[B::El], x: &[B::El]) -> Vec<B::El> {
        coeffs.iter().rev().fold(self.zero(), |acc, c| {
            let t = self.mul(&acc, &x.to_vec());
            self.add(&t, &self.embed(c))
        })
    }
}

impl<B: Valued> SimpleExtension<B> {
    fn valuation_in_uniformizer_basis(
        &self,
        inv: &[Vec<B::El>],
        a: &[B::El],
        prec: Option<Q>,
    ) -> Result<Valuation> {
        let e = self.ramification_index();
        let mut best: Option<Q> = None;
        let mut undecided = prec;
        for (j, row) in inv.iter().enumerate() {
            let terms: Vec<B::El> = row
                .iter()
                .zip(a)
                .map(|(m, x)| self.base.mul(m, x))
                .collect();
            let c = self.base.sum(terms.iter());
            let shift = Q::new(j as i64, e);
            match self.base.valuation(&c)? {
                Valuation::Finite(v) => best = Some(best.map_or(v + shift, |b| b.min(v + shift))),
                Valuation::Bottom { precision } => {
                    let bound = precision + shift;
                    undecided = Some(undecided.map_or(bound, |u| u.min(bound)));
                }
            }
        }
        Ok(match (best, undecided) {
            (Some(v), Some(u)) if v >= u => Valuation::Bottom { precision: u },
            (Some(v), _) => Valuation::Finite(v),
            (None, u) => Valuation::Bottom {
                precision: u.unwrap_or(infinite_precision()),
            },
        })
    }
}

impl<B: Valued> Ring for SimpleExtension<B> {
    type El = Vec<B::El>;

    fn zero(&self) -> Self::El {
        vec![self.base.zero(); self.degree()]
    }

    fn one(&self) -> Self::El {
        self.embed(&self.base.one())
    }

    fn from_int(&self, n: i64) -> Self::El {
        self.embed(&self.base.from_int(n))
    }

    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::El) -> Self::El {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El {
        let d = self.degree();
        let mut prod = vec![self.base.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                let t = self.base.mul(x, y);
                prod[i + j] = self.base.add(&prod[i + j], &t);
            }
        }
        self.reduce(prod)
    }
}

impl<B: Valued> Valued for SimpleExtension<B> {
    fn level_name(&self) -> &str {
        &self.name
    }

    fn valuation(&self, a: &Self::El) -> Result<Valuation> {
        let prec = self.precision_of(a);
        if let Some(inv) = self.to_uniformizer_basis.get() {
            return self.valuation_in_uniformizer_basis(inv, a, prec);
        }
        if a.iter()
            .map(|c| self.base.valuation(c))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(Valuation::is_bottom)
        {
            return Ok(Valuation::Bottom {
                precision: prec.unwrap_or(infinite_precision()),
            });
        }
        let n = self.norm(a)?;
        let d = self.degree() as i64;
        let v = match self.base.valuation(&n)? {
            Valuation::Finite(v) => v / d,
            Valuation::Bottom { precision } => {
                let bound = prec.map_or(precision / d, |p| p.min(precision / d));
                return Ok(Valuation::Bottom { precision: bound });
            }
        };
        Ok(match prec {
            Some(p) if v >= p => Valuation::Bottom { precision: p },
            _ => Valuation::Finite(v),
        })
    }

    fn precision_of(&self, a: &Self::El) -> Option<Q> {
        a.iter()
            .enumerate()
            .filter_map(|(i, c)| {
                self.base
                    .precision_of(c)
                    .map(|p| p + self.gen_val * i as i64)
            })
            .min()
    }

    fn inverse(&self, a: &Self::El) -> Result<Self::El> {
        let rows = self.mult_rows(a);
        let d = self.degree();
        // columns of the multiplication map are the rows built above
        let m: Vec<Vec<B::El>> = (0..d)
            .map(|i| (0..d).map(|j| rows[j][i].clone()).collect())
            .collect();
        let mut rhs = vec![self.base.zero(); d];
        rhs[0] = self.base.one();
        linalg::solve(&*self.base, m, rhs)
    }

    fn ramification_index(&self) -> i64 {
        self.base.ramification_index() * self.rel_e
    }

    fn element_of_valuation(&self, k: i64) -> Result<Self::El> {
        let e = self.rel_e;
        let (s, r) = (k.div_euclid(e), k.rem_euclid(e));
        let base_part = self.embed(&self.base.element_of_valuation(s)?);
        if r == 0 {
            return Ok(base_part);
        }
        let u = self.uniformizer.get().ok_or_else(|| {
            Error::InvalidInput(format!("level {} has no uniformizer attached", self.name))
        })?;
        Ok(self.mul(&base_part, &self.pow(u, r as u64)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{q, EisensteinRing};

    #[test]
    fn sqrt_two_over_q2() {
        let base = EisensteinRing::rational(2, 40).unwrap();
        let m = vec![base.from_int(-2), base.zero(), base.one()];
        let l = SimpleExtension::new("L", base.clone(), m, q(1, 2), 2).unwrap();
        let y = l.gen();
        assert_eq!(l.valuation(&y).unwrap(), Valuation::Finite(q(1, 2)));
        let x = l.add(&l.one(), &y);
        let xi = l.inverse(&x).unwrap();
        assert!(l
            .valuation(&l.sub(&l.mul(&x, &xi), &l.one()))
            .unwrap()
            .is_bottom());
        let n = l.norm(&l.embed(&base.from_int(3))).unwrap();
        assert!(base.sub(&n, &base.from_int(9)).is_bottom());
        l.set_uniformizer(y.clone()).unwrap();
        let e3 = l.element_of_valuation(3).unwrap();
        assert_eq!(l.valuation(&e3).unwrap(), Valuation::Finite(q(3, 2)));
    }
}

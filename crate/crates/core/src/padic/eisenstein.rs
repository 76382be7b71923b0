//! Truncated arithmetic in a totally ramified extension `Z_p[X]/(Phi)` with
//! `Phi` Eisenstein, stored as `pi^val * unit + O(pi^prec)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::padic::ring::{Ring, Valued};
use crate::padic::valuation::{infinite_precision, q, Valuation, Q};

/// Absolute precision of an exact zero.
pub const EXACT: i64 = i64::MAX / 4;

/// Element of a truncated Eisenstein ring. `val` and `prec` are measured in
/// units of the uniformizer of that ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicElem {
    val: i64,
    prec: i64,
    unit: Vec<BigInt>,
}

impl PadicElem {
    /// Whether the element is zero at its stored precision.
    pub fn is_bottom(&self) -> bool {
        self.val >= self.prec
    }

    pub fn is_exact_zero(&self) -> bool {
        self.prec >= EXACT
    }

    /// Valuation in uniformizer units; `None` if zero to precision.
    pub fn pi_valuation(&self) -> Option<i64> {
        (!self.is_bottom()).then_some(self.val)
    }

    /// Absolute precision in uniformizer units ([`EXACT`] for exact zero).
    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Coefficients of the unit part in the basis `1, pi, ..., pi^(e-1)`.
    pub fn unit_coefficients(&self) -> &[BigInt] {
        &self.unit
    }
}

/// `Z_p[pi]/(Phi(pi))` truncated at `p^digits` for a monic Eisenstein `Phi`.
#[derive(Debug)]
pub struct EisensteinRing {
    name: String,
    p: u64,
    e: usize,
    /// `phi[i]` is the coefficient of `X^i`, `i < e`; `Phi` is monic.
    phi: Vec<BigInt>,
    digits: u32,
    modulus: BigInt,
    p_big: BigInt,
    /// `p / pi` as an integral polynomial in `pi`.
    p_over_pi: Vec<BigInt>,
    /// `p / pi^e`, a unit.
    eps: Vec<BigInt>,
    /// `pi^k` reduced, for `k` below the relative precision cap.
    pi_powers: Vec<Vec<BigInt>>,
}

pub type SharedRing = Arc<EisensteinRing>;

impl EisensteinRing {
    /// `phi` lists the coefficients of `Phi` from degree 0 up to the leading 1.
    pub fn new(name: &str, p: u64, phi: &[i64], digits: u32) -> Result<SharedRing> {
        Ok(Arc::new(Self::build(name, p, phi, digits, true)?))
    }

    fn build(
        name: &str,
        p: u64,
        phi: &[i64],
        digits: u32,
        with_eps: bool,
    ) -> Result<EisensteinRing> {
        let e = phi.len().saturating_sub(1);
        if e == 0 || phi[e] != 1 {
            return Err(Error::InvalidInput(
                "Eisenstein polynomial must be monic of degree >= 1".into(),
            ));
        }
        let pi64 = p as i64;
        if phi[0] % pi64 != 0
            || (phi[0] / pi64) % pi64 == 0
            || phi[1..e].iter().any(|c| c % pi64 != 0)
        {
            return Err(Error::InvalidInput(format!(
                "{phi:?} is not Eisenstein at {p}"
            )));
        }
        if digits < 2 {
            return Err(Error::InvalidInput(
                "need at least two p-adic digits".into(),
            ));
        }
        let p_big = BigInt::from(p);
        let modulus = p_big.pow(digits);
        let phi_big: Vec<BigInt> = phi[..e].iter().map(|&c| BigInt::from(c)).collect();
        // pi * (pi^(e-1) + phi_{e-1} pi^(e-2) + ... + phi_1) = -phi_0 = -p w
        let w = phi[0] / pi64;
        let mut p_over_pi: Vec<BigInt> = (0..e)
            .map(|i| {
                if i + 1 == e {
                    BigInt::one()
                } else {
                    phi_big[i + 1].clone()
                }
            })
            .collect();
        for c in p_over_pi.iter_mut() {
            // divide by -w, w = +-1 or a unit handled through the modular inverse
            *c = -&*c;
        }
        let mut ring = EisensteinRing {
            name: name.to_string(),
            p,
            e,
            phi: phi_big,
            digits,
            modulus,
            p_big,
            p_over_pi,
            eps: Vec::new(),
            pi_powers: Vec::new(),
        };
        let w_inv = BigInt::from(w).modinv(&ring.modulus).ok_or_else(|| {
            Error::InvalidInput("constant term of Phi is not p times a unit".into())
        })?;
        ring.p_over_pi = ring.reduce_coeffs(ring.p_over_pi.iter().map(|c| c * &w_inv).collect());
        // eps = p / pi^e: divide (p/pi) by pi another e-1 times, with one
        // guard digit since every division loses a pi-digit at the top
        let mut eps = ring.p_over_pi.clone();
        if e > 1 && with_eps {
            let hi = EisensteinRing::build(name, p, phi, digits + 1, false)?;
            eps = hi.p_over_pi.clone();
            for _ in 1..e {
                eps = hi.div_pi(&eps);
            }
        }
        ring.eps = ring.reduce_coeffs(eps);
        let cap = ring.rel_cap() as usize;
        let mut pows = Vec::with_capacity(cap + 1);
        let mut cur = ring.basis(0);
        for _ in 0..=cap {
            pows.push(cur.clone());
            cur = ring.times_pi(&cur);
        }
        ring.pi_powers = pows;
        Ok(ring)
    }

    /// `Q_p` itself, with uniformizer `p`.
    pub fn rational(p: u64, digits: u32) -> Result<SharedRing> {
        EisensteinRing::new("Qp", p, &[-(p as i64), 1], digits)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Largest relative precision an element can carry, in `pi` units.
    pub fn rel_cap(&self) -> i64 {
        (self.e as i64) * (self.digits as i64)
    }

    /// Coefficients of `Phi` as integers, degree 0 first, including the leading 1.
    pub fn eisenstein(&self) -> Vec<BigInt> {
        let mut v = self.phi.clone();
        v.push(BigInt::one());
        v
    }

    fn basis(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.e];
        v[i] = BigInt::one();
        v
    }

    fn reduce_coeffs(&self, v: Vec<BigInt>) -> Vec<BigInt> {
        v.into_iter().map(|c| c.mod_floor(&self.modulus)).collect()
    }

    fn times_pi(&self, a: &[BigInt]) -> Vec<BigInt> {
        let top = a[self.e - 1].clone();
        let mut out = vec![BigInt::zero(); self.e];
        for i in (1..self.e).rev() {
            out[i] = &a[i - 1] - &top * &self.phi[i];
        }
        out[0] = -&top * &self.phi[0];
        self.reduce_coeffs(out)
    }

    /// Exact division by `pi` of an integral polynomial of positive valuation.
    fn div_pi(&self, a: &[BigInt]) -> Vec<BigInt> {
        let (a0, r) = a[0].div_rem(&self.p_big);
        debug_assert!(r.is_zero(), "div_pi on a unit");
        let mut out: Vec<BigInt> = (0..self.e)
            .map(|i| {
                if i + 1 < self.e {
                    a[i + 1].clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        for (o, c) in out.iter_mut().zip(&self.p_over_pi) {
            *o += &a0 * c;
        }
        self.reduce_coeffs(out)
    }

    fn vp_big(&self, c: &BigInt) -> Option<i64> {
        if c.is_zero() {
            return None;
        }
        if self.p == 2 {
            return c.trailing_zeros().map(|t| t as i64);
        }
        let mut v = 0;
        let mut x = c.clone();
        loop {
            let (d, r) = x.div_rem(&self.p_big);
            if !r.is_zero() {
                return Some(v);
            }
            x = d;
            v += 1;
        }
    }

    /// `pi`-adic valuation of an integral representative; `None` if it
    /// vanishes modulo `p^digits`.
    fn vpi_raw(&self, a: &[BigInt]) -> Option<i64> {
        a.iter()
            .enumerate()
            .filter_map(|(i, c)| self.vp_big(c).map(|v| v * self.e as i64 + i as i64))
            .min()
    }

    fn mul_raw(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let e = self.e;
        let mut prod = vec![BigInt::zero(); 2 * e - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for k in (e..2 * e - 1).rev() {
            let top = std::mem::take(&mut prod[k]);
            if top.is_zero() {
                continue;
            }
            for i in 0..e {
                prod[k - e + i] -= &top * &self.phi[i];
            }
        }
        prod.truncate(e);
        self.reduce_coeffs(prod)
    }

    fn bottom(&self, prec: i64) -> PadicElem {
        PadicElem {
            val: prec,
            prec,
            unit: vec![BigInt::zero(); self.e],
        }
    }

    pub fn exact_zero(&self) -> PadicElem {
        self.bottom(EXACT)
    }

    /// Normalizes `pi^shift * raw + O(pi^prec)` where `raw` is integral.
    fn normalize(&self, raw: Vec<BigInt>, shift: i64, prec: i64) -> PadicElem {
        let Some(k) = self.vpi_raw(&raw) else {
            return self.bottom(prec.min(shift.saturating_add(self.rel_cap())));
        };
        if shift.saturating_add(k) >= prec {
            return self.bottom(prec);
        }
        let mut unit = raw;
        for _ in 0..k {
            unit = self.div_pi(&unit);
        }
        // raw was known modulo pi^(e N); each division by pi costs one digit
        PadicElem {
            val: shift + k,
            prec: prec.min(shift.saturating_add(self.rel_cap())),
            unit,
        }
    }

    /// Exact element from an integer.
    pub fn from_bigint(&self, n: &BigInt) -> PadicElem {
        if n.is_zero() {
            return self.exact_zero();
        }
        let v = self.vp_big(n).unwrap_or(0);
        let m = n / self.p_big.pow(v as u32);
        let mut unit = vec![BigInt::zero(); self.e];
        unit[0] = m.mod_floor(&self.modulus);
        let eps_pow = self.pow_raw(&self.eps, v as u64);
        let unit = self.mul_raw(&unit, &eps_pow);
        let val = v * self.e as i64;
        PadicElem {
            val,
            prec: val + self.rel_cap(),
            unit,
        }
    }

    fn pow_raw(&self, a: &[BigInt], mut k: u64) -> Vec<BigInt> {
        let mut acc = self.basis(0);
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_raw(&base, &base);
            }
        }
        acc
    }

    /// `pi^k` exactly, for any integer `k`.
    pub fn pi_pow(&self, k: i64) -> PadicElem {
        PadicElem {
            val: k,
            prec: k + self.rel_cap(),
            unit: self.basis(0),
        }
    }

    /// `u * pi^k` for an integer `u`.
    pub fn monomial(&self, u: i64, k: i64) -> PadicElem {
        self.mul(&self.from_int(u), &self.pi_pow(k))
    }

    /// Element from integral coefficients in the basis `1, pi, ..., pi^(e-1)`.
    pub fn from_coefficients(&self, coeffs: &[i64]) -> PadicElem {
        let mut raw = vec![BigInt::zero(); self.e];
        for (i, &c) in coeffs.iter().enumerate() {
            let mut term = vec![BigInt::zero(); self.e];
            term[0] = BigInt::from(c).mod_floor(&self.modulus);
            let term = if i < self.pi_powers.len() {
                self.mul_raw(&term, &self.pi_powers[i])
            } else {
                self.mul_raw(
                    &term,
                    &self.pow_raw(&self.basis(1.min(self.e - 1)), i as u64),
                )
            };
            for (r, t) in raw.iter_mut().zip(term) {
                *r += t;
            }
        }
        let raw = self.reduce_coeffs(raw);
        self.normalize(raw, 0, EXACT.min(self.rel_cap()))
    }

    /// Drops precision to at most `prec`.
    pub fn truncate(&self, a: &PadicElem, prec: i64) -> PadicElem {
        if prec >= a.prec {
            return a.clone();
        }
        if a.val >= prec {
            return self.bottom(prec);
        }
        PadicElem {
            val: a.val,
            prec,
            unit: a.unit.clone(),
        }
    }

    /// Reduction of an integral element modulo `pi`, as an integer in `[0, p)`.
    pub fn residue(&self, a: &PadicElem) -> Result<u64> {
        if a.is_bottom() && a.prec <= 0 {
            return Err(Error::precision(
                "residue of an element known only modulo pi^0",
            ));
        }
        if a.is_bottom() || a.val > 0 {
            return Ok(0);
        }
        if a.val < 0 {
            return Err(Error::InvalidInput(
                "residue of a non-integral element".into(),
            ));
        }
        Ok(a.unit[0].mod_floor(&self.p_big).to_u64().unwrap_or(0))
    }

    fn unit_inverse(&self, u: &[BigInt]) -> Vec<BigInt> {
        let a0 = u[0]
            .modinv(&self.modulus)
            .expect("unit part has a p-adic unit constant term");
        let mut x = vec![BigInt::zero(); self.e];
        x[0] = a0;
        let two = {
            let mut t = vec![BigInt::zero(); self.e];
            t[0] = BigInt::from(2);
            t
        };
        let mut correct = 1i64;
        while correct < self.rel_cap() {
            let ux = self.mul_raw(u, &x);
            let corr: Vec<BigInt> = two.iter().zip(&ux).map(|(a, b)| a - b).collect();
            x = self.mul_raw(&x, &self.reduce_coeffs(corr));
            correct *= 2;
        }
        x
    }

    fn add_elems(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let prec = a.prec.min(b.prec);
        let live: Vec<&PadicElem> = [a, b]
            .into_iter()
            .filter(|x| !x.is_bottom() && x.val < prec)
            .collect();
        let Some(vmin) = live.iter().map(|x| x.val).min() else {
            return self.bottom(prec);
        };
        let mut raw = vec![BigInt::zero(); self.e];
        for x in live {
            let shift = (x.val - vmin) as usize;
            if shift == 0 {
                for (r, c) in raw.iter_mut().zip(&x.unit) {
                    *r += c;
                }
            } else if (shift as i64) < prec - vmin && shift < self.pi_powers.len() {
                let t = self.mul_raw(&x.unit, &self.pi_powers[shift]);
                for (r, c) in raw.iter_mut().zip(t) {
                    *r += c;
                }
            }
        }
        let raw = self.reduce_coeffs(raw);
        self.normalize(raw, vmin, prec)
    }
}

impl Ring for EisensteinRing {
    type El = PadicElem;

    fn zero(&self) -> PadicElem {
        self.exact_zero()
    }

    fn one(&self) -> PadicElem {
        self.from_int(1)
    }

    fn from_int(&self, n: i64) -> PadicElem {
        self.from_bigint(&BigInt::from(n))
    }

    fn add(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        if a.is_exact_zero() {
            return b.clone();
        }
        if b.is_exact_zero() {
            return a.clone();
        }
        self.add_elems(a, b)
    }

    fn neg(&self, a: &PadicElem) -> PadicElem {
        PadicElem {
            val: a.val,
            prec: a.prec,
            unit: self.reduce_coeffs(a.unit.iter().map(|c| -c).collect()),
        }
    }

    fn mul(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        if a.is_exact_zero() || b.is_exact_zero() {
            return self.exact_zero();
        }
        let prec = a
            .val
            .saturating_add(b.prec)
            .min(b.val.saturating_add(a.prec))
            .min(EXACT);
        if a.is_bottom() || b.is_bottom() {
            return self.bottom(prec);
        }
        let val = a.val + b.val;
        PadicElem {
            val,
            prec: prec.min(val + self.rel_cap()),
            unit: self.mul_raw(&a.unit, &b.unit),
        }
    }
}

impl Valued for EisensteinRing {
    fn level_name(&self) -> &str {
        &self.name
    }

    fn valuation(&self, a: &PadicElem) -> Result<Valuation> {
        let e = self.e as i64;
        Ok(if a.is_exact_zero() {
            Valuation::Bottom {
                precision: infinite_precision(),
            }
        } else if a.is_bottom() {
            Valuation::Bottom {
                precision: q(a.prec, e),
            }
        } else {
            Valuation::Finite(q(a.val, e))
        })
    }

    fn precision_of(&self, a: &PadicElem) -> Option<Q> {
        (a.prec < EXACT).then(|| q(a.prec, self.e as i64))
    }

    fn inverse(&self, a: &PadicElem) -> Result<PadicElem> {
        if a.is_bottom() {
            return Err(Error::precision(format!(
                "inverting an element that is zero modulo pi^{}",
                a.prec
            )));
        }
        Ok(PadicElem {
            val: -a.val,
            prec: a.prec - 2 * a.val,
            unit: self.unit_inverse(&a.unit),
        })
    }

    fn ramification_index(&self) -> i64 {
        self.e as i64
    }

    fn element_of_valuation(&self, k: i64) -> Result<PadicElem> {
        Ok(self.pi_pow(k))
    }
}

impl crate::padic::ring::LocalField for EisensteinRing {
    fn pi_power(&self, k: i64) -> Result<PadicElem> {
        Ok(self.pi_pow(k))
    }

    fn from_bigint(&self, n: &BigInt) -> PadicElem {
        EisensteinRing::from_bigint(self, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::valuation::qi;

    fn k22() -> SharedRing {
        EisensteinRing::new("K", 2, &[2, 0, 0, 0, 0, 1], 40).unwrap()
    }

    #[test]
    fn pi_fifth_is_minus_two() {
        let k = k22();
        let x = k.mul(&k.pi_pow(2), &k.pi_pow(3));
        let d = k.add(&x, &k.from_int(2));
        assert!(d.is_bottom());
        assert_eq!(
            k.valuation(&k.pi_pow(1)).unwrap(),
            Valuation::Finite(q(1, 5))
        );
        assert_eq!(
            k.valuation(&k.pi_pow(6)).unwrap(),
            Valuation::Finite(q(6, 5))
        );
    }

    #[test]
    fn sum_two_plus_pi5_is_bottom() {
        let k = k22();
        let s = k.add(&k.from_int(2), &k.pi_pow(5));
        assert!(k.valuation(&s).unwrap().is_bottom());
        assert!(k.valuation(&k.zero()).unwrap().is_bottom());
    }

    #[test]
    fn geometric_series_inverse() {
        let k = k22();
        let x = k.add(&k.one(), &k.pi_pow(1));
        let inv = k.inverse(&x).unwrap();
        // 1 - pi + pi^2 - pi^3 + pi^4 - ... truncated
        let mut series = k.zero();
        for i in 0..60 {
            let t = k.mul_int(&k.pi_pow(i), if i % 2 == 0 { 1 } else { -1 });
            series = k.add(&series, &t);
        }
        let diff = k.sub(&inv, &series);
        assert!(k
            .valuation(&diff)
            .unwrap()
            .finite()
            .is_none_or(|v| v >= qi(12)));
        let one = k.mul(&x, &inv);
        assert!(k.sub(&one, &k.one()).is_bottom());
    }

    #[test]
    fn integers_have_integer_valuations() {
        let k = k22();
        assert_eq!(
            k.valuation(&k.from_int(64)).unwrap(),
            Valuation::Finite(qi(6))
        );
        assert_eq!(
            k.valuation(&k.from_int(-12)).unwrap(),
            Valuation::Finite(qi(2))
        );
        let q3 = EisensteinRing::rational(3, 20).unwrap();
        assert_eq!(
            q3.valuation(&q3.from_int(18)).unwrap(),
            Valuation::Finite(qi(2))
        );
        let d = q3.sub(&q3.from_int(9), &q3.pi_pow(2));
        assert!(d.is_bottom());
    }

    #[test]
    fn rejects_non_eisenstein() {
        assert!(EisensteinRing::new("K", 2, &[4, 0, 1], 10).is_err());
        assert!(EisensteinRing::new("K", 2, &[2, 1, 1], 10).is_err());
    }
}

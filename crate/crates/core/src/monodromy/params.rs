//! Curve data `(p, n, u, c)` and the polynomials `f`, `s_1` and `L`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::valuation::{q, qi, Q};
use crate::padic::{build_tower, LocalField, TowerDesc};
use crate::poly::{monomial, poly_mul, poly_pow, poly_scale, poly_sub};

/// `c = unit * pi^pi_exp` with `unit` a rational integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffSpec {
    pub unit: i64,
    pub pi_exp: i64,
}

impl CoeffSpec {
    pub fn int(n: i64) -> Self {
        CoeffSpec { unit: n, pi_exp: 0 }
    }

    pub fn pi_pow(k: i64) -> Self {
        CoeffSpec { unit: 1, pi_exp: k }
    }

    /// `lambda = pi^(1+q)`.
    pub fn lambda(q: u64) -> Self {
        Self::pi_pow(q as i64 + 1)
    }

    /// Accepts an integer, `lambda`, `pi^k` or `u*pi^k`.
    pub fn parse(s: &str, q: u64) -> Result<Self> {
        let s = s.trim().replace(' ', "");
        if s == "lambda" {
            return Ok(Self::lambda(q));
        }
        let bad = || Error::Parse(format!("cannot read coefficient descriptor {s:?}"));
        let (unit, rest) = match s.split_once('*') {
            Some((u, r)) => (u.parse::<i64>().map_err(|_| bad())?, r.to_string()),
            None if s.starts_with("pi") => (1, s.clone()),
            None => return s.parse::<i64>().map(Self::int).map_err(|_| bad()),
        };
        let k = match rest.as_str() {
            "pi" => 1,
            "lambda" => q as i64 + 1,
            r => r
                .strip_prefix("pi^")
                .ok_or_else(bad)?
                .parse::<i64>()
                .map_err(|_| bad())?,
        };
        Ok(CoeffSpec { unit, pi_exp: k })
    }

    /// `None` for `c = 0`.
    pub fn valuation(&self, p: u64, e_k: u64) -> Option<Q> {
        if self.unit == 0 {
            return None;
        }
        let mut v = 0;
        let mut u = self.unit;
        while u % p as i64 == 0 {
            u /= p as i64;
            v += 1;
        }
        Some(qi(v) + q(self.pi_exp, e_k as i64))
    }

    pub fn to_field<F: LocalField>(&self, ring: &F) -> Result<F::El> {
        Ok(ring.mul(&ring.from_int(self.unit), &ring.pi_power(self.pi_exp)?))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveParams {
    pub tower: TowerDesc,
    pub p: u64,
    pub n: u32,
    pub q: u64,
    /// `u_0, ..., u_{n-1}`, each zero or prime to `p`.
    pub u: Vec<i64>,
    pub c: CoeffSpec,
    /// `a_n = (-1)^q (-p)^a_n_exp`, times `p^a_n_extra` (zero unless altered
    /// on purpose).
    pub a_n_exp: u64,
    pub a_n_extra: u32,
    /// `b_n = -(-p)^b_n_exp`.
    pub b_n_exp: u64,
    /// `d[i] = p^(n-i+1) + ... + q`; `d[0] = 0`.
    pub d: Vec<u64>,
    /// `rho_k = u_k pi^rho_exp[k]` with `rho_exp[k] = p (q - p^k)`.
    pub rho_exp: Vec<i64>,
}

pub fn make_params(p: u64, n: u32, u: &[i64], c: CoeffSpec) -> Result<CurveParams> {
    let tower = build_tower(p, n)?;
    let q = tower.q;
    if u.len() != n as usize {
        return Err(Error::InvalidInput(format!(
            "expected {n} units u_k, got {}",
            u.len()
        )));
    }
    if let Some((index, &value)) = u
        .iter()
        .enumerate()
        .find(|(_, &x)| x != 0 && x % p as i64 == 0)
    {
        return Err(Error::BadUnit { index, value });
    }
    let pw = |j: u32| p.pow(j);
    let a_n_exp = (1..=n).map(pw).sum();
    let b_n_exp = (0..n).map(pw).sum();
    let d = (0..n)
        .map(|i| {
            if i == 0 {
                0
            } else {
                (n - i + 1..=n).map(pw).sum()
            }
        })
        .collect();
    let rho_exp = (0..n).map(|k| (p * (q - pw(k))) as i64).collect();
    Ok(CurveParams {
        tower,
        p,
        n,
        q,
        u: u.to_vec(),
        c,
        a_n_exp,
        a_n_extra: 0,
        b_n_exp,
        d,
        rho_exp,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reduction {
    GoodOverK,
    WildCase,
}

impl CurveParams {
    pub fn e_k(&self) -> u64 {
        self.tower.e_k
    }

    /// `v(lambda) = 1/(p-1)`.
    pub fn v_lambda(&self) -> Q {
        q(1, self.p as i64 - 1)
    }

    pub fn v_a_n(&self) -> Q {
        qi((self.a_n_exp + self.a_n_extra as u64) as i64)
    }

    pub fn v_b_n(&self) -> Q {
        qi(self.b_n_exp as i64)
    }

    /// `None` when `u_k = 0`.
    pub fn v_rho(&self, k: usize) -> Option<Q> {
        (self.u[k] != 0).then(|| q(self.rho_exp[k], self.e_k() as i64))
    }

    pub fn v_c(&self) -> Option<Q> {
        self.c.valuation(self.p, self.e_k())
    }

    /// `v(lambda^(p/(1+q)))`, the threshold between the two cases and the
    /// common distance between roots of `L`.
    pub fn critical_valuation(&self) -> Q {
        self.v_lambda() * q(self.p as i64, self.q as i64 + 1)
    }

    pub fn classify_reduction(&self) -> Reduction {
        match self.v_c() {
            Some(v) if v < self.critical_valuation() => Reduction::WildCase,
            _ => Reduction::GoodOverK,
        }
    }

    /// Same data with `a_n` multiplied by `p`; the certificates must reject it.
    pub fn with_tampered_a_n(&self) -> CurveParams {
        let mut t = self.clone();
        t.a_n_extra += 1;
        t
    }

    pub fn p_pow(&self, j: u32) -> u64 {
        self.p.pow(j)
    }

    pub fn a_n<F: LocalField>(&self, ring: &F) -> F::El {
        let sign = if self.q.is_multiple_of(2) { 1 } else { -1 };
        let base = ring.pow(&ring.from_int(-(self.p as i64)), self.a_n_exp);
        let extra = ring.from_bigint(&BigInt::from(self.p).pow(self.a_n_extra));
        ring.mul_int(&ring.mul(&base, &extra), sign)
    }

    pub fn b_n<F: LocalField>(&self, ring: &F) -> F::El {
        ring.neg(&ring.pow(&ring.from_int(-(self.p as i64)), self.b_n_exp))
    }

    pub fn rho<F: LocalField>(&self, ring: &F, k: usize) -> Result<F::El> {
        Ok(ring.mul(&ring.from_int(self.u[k]), &ring.pi_power(self.rho_exp[k])?))
    }

    /// `(-p)^k`.
    pub fn minus_p_pow<F: LocalField>(&self, ring: &F, k: u64) -> F::El {
        ring.pow(&ring.from_int(-(self.p as i64)), k)
    }

    pub fn c_elem<F: LocalField>(&self, ring: &F) -> Result<F::El> {
        self.c.to_field(ring)
    }

    /// `f = 1 + sum rho_k X^(1+p^k) + c X^q + X^(1+q)`.
    pub fn build_f<F: LocalField>(&self, ring: &F) -> Result<Vec<F::El>> {
        let q = self.q as usize;
        let mut f = vec![ring.zero(); q + 2];
        f[0] = ring.one();
        for k in 0..self.n as usize {
            let i = 1 + self.p_pow(k as u32) as usize;
            f[i] = ring.add(&f[i], &self.rho(ring, k)?);
        }
        f[q] = ring.add(&f[q], &self.c_elem(ring)?);
        f[q + 1] = ring.one();
        Ok(f)
    }

    /// `s_1 = 2 rho_0 X + sum_{k>=1} rho_k X^(p^k) + X^q`.
    pub fn build_s1<F: LocalField>(&self, ring: &F) -> Result<Vec<F::El>> {
        let q = self.q as usize;
        let mut s = vec![ring.zero(); q + 1];
        s[1] = ring.mul_int(&self.rho(ring, 0)?, 2);
        for k in 1..self.n as usize {
            let i = self.p_pow(k as u32) as usize;
            s[i] = ring.add(&s[i], &self.rho(ring, k)?);
        }
        s[q] = ring.add(&s[q], &ring.one());
        Ok(s)
    }

    /// The summand `(rho_k X)^(q/p^k) (-p)^(d_k) f^(q(p^k-1)/p^k)` of `L`.
    fn l_sum_term<F: LocalField>(&self, ring: &F, f: &[F::El], k: usize) -> Result<Vec<F::El>> {
        let pk = self.p_pow(k as u32);
        let e1 = (self.q / pk) as usize;
        let rho_x = monomial(ring, ring.pow(&self.rho(ring, k)?, e1 as u64), e1);
        let fpow = poly_pow(ring, f, self.q * (pk - 1) / pk);
        let coef = self.minus_p_pow(ring, self.d[k]);
        Ok(poly_scale(ring, &poly_mul(ring, &rho_x, &fpow), &coef))
    }

    /// `L` as defined, not normalized; its leading coefficient is `1 - a_n`.
    pub fn build_l_raw<F: LocalField>(&self, ring: &F) -> Result<Vec<F::El>> {
        let f = self.build_f(ring)?;
        let s = self.build_s1(ring)?;
        let mut l = poly_pow(ring, &s, self.q);
        let c_plus_x = vec![self.c_elem(ring)?, ring.one()];
        let second = poly_mul(ring, &poly_pow(ring, &f, self.q - 1), &c_plus_x);
        l = poly_sub(ring, &l, &poly_scale(ring, &second, &self.a_n(ring)));
        let sign = if self.q.is_multiple_of(2) { 1 } else { -1 };
        for k in 1..self.n as usize {
            if self.u[k] == 0 {
                continue;
            }
            let term = self.l_sum_term(ring, &f, k)?;
            let signed: Vec<F::El> = term.iter().map(|x| ring.mul_int(x, sign)).collect();
            l = poly_sub(ring, &l, &signed);
        }
        l.truncate((self.q * self.q) as usize + 1);
        Ok(l)
    }

    /// `L` divided by its leading coefficient.
    pub fn build_l<F: LocalField>(&self, ring: &F) -> Result<Vec<F::El>> {
        let raw = self.build_l_raw(ring)?;
        let lc_inv = ring.inverse(raw.last().expect("nonempty"))?;
        Ok(poly_scale(ring, &raw, &lc_inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactField;
    use crate::padic::{Ring, Valued};

    fn ex1() -> CurveParams {
        make_params(2, 2, &[1, 1], CoeffSpec::int(1)).unwrap()
    }

    #[test]
    fn derived_constants() {
        let p = ex1();
        assert_eq!(p.v_a_n(), qi(6));
        assert_eq!(p.rho_exp, vec![6, 4]);
        assert_eq!(p.v_rho(0), Some(q(6, 5)));
        assert_eq!(p.v_rho(1), Some(q(4, 5)));
        assert_eq!(p.d, vec![0, 4]);
        let k = ExactField::new(2, &p.tower.eisenstein).unwrap();
        assert_eq!(p.a_n(&k), k.from_int(64));
        assert_eq!(p.b_n(&k), k.from_int(8));
        assert_eq!(k.pow(&p.b_n(&k), 2), p.a_n(&k));
        let e0 = make_params(2, 1, &[1], CoeffSpec::int(1)).unwrap();
        assert_eq!(e0.a_n(&k), k.from_int(4));
        assert_eq!(e0.b_n(&k), k.from_int(2));
        let e3 = make_params(3, 1, &[1], CoeffSpec::int(1)).unwrap();
        let k3 = ExactField::new(3, &e3.tower.eisenstein).unwrap();
        assert_eq!(k3.pow(&e3.b_n(&k3), 3), e3.a_n(&k3));
        assert!(matches!(
            make_params(2, 2, &[1, 2], CoeffSpec::int(1)),
            Err(Error::BadUnit { index: 1, value: 2 })
        ));
    }

    #[test]
    fn polynomial_shapes() {
        let p = ex1();
        let k = ExactField::new(2, &p.tower.eisenstein).unwrap();
        let s = p.build_s1(&k).unwrap();
        assert_eq!(s[1], k.mul_int(&k.pi_pow(6), 2));
        assert_eq!(s[2], k.pi_pow(4));
        assert_eq!(s[4], k.one());
        let f = p.build_f(&k).unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(f[0], k.one());
        let l = p.build_l_raw(&k).unwrap();
        assert_eq!(l.len(), 17);
        assert_eq!(l[16], k.from_int(-63));
        assert_eq!(l[0], k.from_int(-64));
        assert_eq!(k.valuation(&l[0]).unwrap().finite(), Some(qi(6)));
        let z = make_params(2, 2, &[0, 0], CoeffSpec::int(1)).unwrap();
        let f = z.build_f(&k).unwrap();
        assert_eq!(f[2], k.zero());
        assert_eq!(f[3], k.zero());
    }

    #[test]
    fn classification_threshold() {
        assert_eq!(ex1().classify_reduction(), Reduction::WildCase);
        let lam = make_params(2, 2, &[1, 1], CoeffSpec::lambda(4)).unwrap();
        assert_eq!(lam.classify_reduction(), Reduction::GoodOverK);
        // v(pi^2) = 2/5 is exactly the threshold
        let edge = make_params(2, 2, &[1, 1], CoeffSpec::pi_pow(2)).unwrap();
        assert_eq!(edge.classify_reduction(), Reduction::GoodOverK);
        let below = make_params(2, 2, &[1, 1], CoeffSpec::pi_pow(1)).unwrap();
        assert_eq!(below.classify_reduction(), Reduction::WildCase);
        assert_eq!(
            CoeffSpec::parse("3*pi^2", 4).unwrap(),
            CoeffSpec { unit: 3, pi_exp: 2 }
        );
        assert_eq!(CoeffSpec::parse("lambda", 4).unwrap(), CoeffSpec::pi_pow(5));
        assert!(CoeffSpec::parse("x", 4).is_err());
    }
}

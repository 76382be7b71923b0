//! Description of the base part `Q_p ⊂ K` of the tower.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::eisenstein::{EisensteinRing, SharedRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerDesc {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    /// `e(K/Q_p) = (p-1)(q+1)`.
    pub e_k: u64,
    /// `Phi(X) = ((1+X^(1+q))^p - 1) / X^(1+q)`, coefficients from degree 0.
    pub eisenstein: Vec<i64>,
    /// Level names with a short description of each defining polynomial.
    pub levels: Vec<(String, String)>,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn binomial(n: u64, k: u64) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn build_tower(p: u64, n: u32) -> Result<TowerDesc> {
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let q = p
        .checked_pow(n)
        .filter(|&q| q <= 1 << 12)
        .ok_or_else(|| Error::InvalidInput(format!("q = {p}^{n} is too large")))?;
    let e_k = (p - 1) * (q + 1);
    let mut eisenstein = vec![0i64; e_k as usize + 1];
    for j in 1..=p {
        eisenstein[((1 + q) * (j - 1)) as usize] = binomial(p, j);
    }
    let levels = vec![
        ("Qp".to_string(), format!("Q_{p}")),
        (
            "K".to_string(),
            format!("Q_{p}[X]/({})", fmt_poly(&eisenstein)),
        ),
    ];
    Ok(TowerDesc {
        p,
        n,
        q,
        e_k,
        eisenstein,
        levels,
    })
}

impl TowerDesc {
    /// `K` truncated at `p^digits`.
    pub fn k_ring(&self, digits: u32) -> Result<SharedRing> {
        EisensteinRing::new("K", self.p, &self.eisenstein, digits)
    }

    /// `lambda = pi^(1+q)`.
    pub fn lambda_exponent(&self) -> i64 {
        (self.q + 1) as i64
    }

    pub fn attach(&mut self, name: &str, desc: String) {
        self.levels.push((name.to_string(), desc));
    }
}

pub(crate) fn fmt_poly(coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "X".to_string(),
            _ => format!("X^{i}"),
        };
        terms.push(match (c, i) {
            (1, 0) => "1".to_string(),
            (1, _) => mono,
            (_, 0) => c.to_string(),
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{Ring, Valued};

    #[test]
    fn eisenstein_shapes() {
        let t = build_tower(2, 2).unwrap();
        assert_eq!(t.e_k, 5);
        assert_eq!(t.eisenstein, vec![2, 0, 0, 0, 0, 1]);
        assert_eq!(build_tower(2, 1).unwrap().eisenstein, vec![2, 0, 0, 1]);
        let t3 = build_tower(3, 1).unwrap();
        assert_eq!(t3.e_k, 8);
        assert_eq!(t3.eisenstein, vec![3, 0, 0, 0, 3, 0, 0, 0, 1]);
        assert_eq!(fmt_poly(&t3.eisenstein), "X^8 + 3X^4 + 3");
        assert!(build_tower(4, 1).is_err());
        assert!(build_tower(2, 0).is_err());
    }

    #[test]
    fn lambda_is_minus_two_for_p2() {
        let t = build_tower(2, 2).unwrap();
        let k = t.k_ring(30).unwrap();
        let lam = k.pi_pow(t.lambda_exponent());
        assert!(k.add(&lam, &k.from_int(2)).is_bottom());
        // for p = 3, lambda^2 + 3 lambda + 3 = 0 since Phi(pi) = 0
        let t3 = build_tower(3, 1).unwrap();
        let k3 = t3.k_ring(30).unwrap();
        let l = k3.pi_pow(4);
        let r = k3.add(
            &k3.add(&k3.mul(&l, &l), &k3.mul_int(&l, 3)),
            &k3.from_int(3),
        );
        assert!(r.is_bottom());
        assert_eq!(
            k3.valuation(&l).unwrap().finite(),
            Some(crate::padic::q(1, 2))
        );
    }
}

//! `F_{p^m}` as `F_p[x]/(g)` for the first irreducible `g` in a fixed search
//! order.

use std::fmt;

use crate::error::{Error, Result};

/// Coefficient vector of length `m` over `F_p`, low degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(pub Vec<u32>);

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteField {
    pub p: u32,
    pub m: usize,
    /// Monic modulus, `m + 1` coefficients.
    pub modulus: Vec<u32>,
}

// dense polynomials over F_p, trimmed
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pmod(a: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dg = g.len() - 1;
    let inv_lead = inv_mod(g[dg], p);
    while r.len() > dg {
        let top = r.len() - 1;
        let c = (r[top] as u64 * inv_lead as u64 % p as u64) as u32;
        for (i, &gi) in g.iter().enumerate() {
            let idx = top - dg + i;
            r[idx] = ((r[idx] as u64 + (p - c) as u64 * gi as u64) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn pmulmod(a: &[u32], b: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    pmod(&out.into_iter().map(|v| v as u32).collect::<Vec<_>>(), g, p)
}

fn pgcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = pmod(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p prime
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// `x^(p^k) mod g`.
fn x_pow_p_k(g: &[u32], p: u32, k: usize) -> Vec<u32> {
    let mut x = pmod(&[0, 1], g, p);
    for _ in 0..k {
        // raise to the p-th power
        let mut acc = vec![1u32];
        for _ in 0..p {
            acc = pmulmod(&acc, &x, g, p);
        }
        x = acc;
    }
    x
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test.
pub fn is_irreducible(g: &[u32], p: u32) -> bool {
    let m = g.len() - 1;
    if m == 0 {
        return false;
    }
    let sub_x = |mut v: Vec<u32>| {
        v.resize(v.len().max(2), 0);
        v[1] = (v[1] + p - 1) % p;
        trim(v)
    };
    if !sub_x(x_pow_p_k(g, p, m)).is_empty() {
        return false;
    }
    prime_factors(m).into_iter().all(|r| {
        let h = sub_x(x_pow_p_k(g, p, m / r));
        pgcd(g, &h, p).len() == 1
    })
}

impl FiniteField {
    pub fn new(p: u32, m: usize) -> Result<Self> {
        if m == 0 || !crate::padic::tower::is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("no field F_{p}^{m}")));
        }
        if m == 1 {
            return Ok(FiniteField {
                p,
                m,
                modulus: vec![0, 1],
            });
        }
        // monic candidates x^m + (lower part), lower part enumerated in base p
        let mut lower: u128 = 1;
        let limit = (p as u128).saturating_pow(m as u32);
        while lower < limit {
            let mut g = Vec::with_capacity(m + 1);
            let mut x = lower;
            for _ in 0..m {
                g.push((x % p as u128) as u32);
                x /= p as u128;
            }
            g.push(1);
            if is_irreducible(&g, p) {
                return Ok(FiniteField { p, m, modulus: g });
            }
            lower += 1;
        }
        Err(Error::InvalidInput(format!(
            "no irreducible polynomial of degree {m} over F_{p}"
        )))
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.m as u32)
    }

    pub fn zero(&self) -> Fq {
        Fq(vec![0; self.m])
    }

    pub fn one(&self) -> Fq {
        self.from_fp(1)
    }

    pub fn from_fp(&self, c: i64) -> Fq {
        let mut v = vec![0; self.m];
        v[0] = c.rem_euclid(self.p as i64) as u32;
        Fq(v)
    }

    /// `x`, the class of the generator.
    pub fn generator(&self) -> Fq {
        self.from_poly(&[0, 1])
    }

    fn from_poly(&self, a: &[u32]) -> Fq {
        let mut v = pmod(a, &self.modulus, self.p);
        v.resize(self.m, 0);
        Fq(v)
    }

    pub fn is_zero(&self, a: &Fq) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Fq, b: &Fq) -> Fq {
        Fq(a.0
            .iter()
            .zip(&b.0)
            .map(|(x, y)| (x + y) % self.p)
            .collect())
    }

    pub fn neg(&self, a: &Fq) -> Fq {
        Fq(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Fq, c: u32) -> Fq {
        Fq(a.0
            .iter()
            .map(|x| (*x as u64 * c as u64 % self.p as u64) as u32)
            .collect())
    }

    pub fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        let (a, b) = (trim(a.0.clone()), trim(b.0.clone()));
        let mut v = pmulmod(&a, &b, &self.modulus, self.p);
        v.resize(self.m, 0);
        Fq(v)
    }

    pub fn pow(&self, a: &Fq, mut e: u128) -> Fq {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^(p^k)`; negative `k` gives `p^|k|`-th roots.
    pub fn frob(&self, a: &Fq, k: i64) -> Fq {
        let k = k.rem_euclid(self.m as i64) as usize;
        (0..k).fold(a.clone(), |x, _| self.pow(&x, self.p as u128))
    }

    pub fn inverse(&self, a: &Fq) -> Result<Fq> {
        if self.is_zero(a) {
            return Err(Error::InvalidInput("inverse of 0 in a finite field".into()));
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Absolute trace to `F_p`.
    pub fn trace(&self, a: &Fq) -> u32 {
        let mut acc = self.zero();
        let mut x = a.clone();
        for _ in 0..self.m {
            acc = self.add(&acc, &x);
            x = self.frob(&x, 1);
        }
        acc.0[0]
    }

    /// `F_p`-coordinates give a bijection with `0 .. p^m`.
    pub fn from_index(&self, mut i: u128) -> Fq {
        let mut v = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            v.push((i % self.p as u128) as u32);
            i /= self.p as u128;
        }
        Fq(v)
    }

    pub fn index(&self, a: &Fq) -> u128 {
        a.0.iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    /// Basis `1, x, ..., x^(m-1)` of `F_{p^m}` over `F_p`.
    pub fn basis(&self) -> Vec<Fq> {
        (0..self.m)
            .map(|i| {
                let mut v = vec![0; self.m];
                v[i] = 1;
                Fq(v)
            })
            .collect()
    }
}

/// Kernel of an `F_p`-linear map given by the images of a basis, as a basis
/// of coordinate vectors.
pub fn fp_kernel(columns: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let ncols = columns.len();
    let nrows = columns.first().map_or(0, |c| c.len());
    // row-reduce the matrix whose columns are the images
    let mut a: Vec<Vec<u32>> = (0..nrows)
        .map(|r| (0..ncols).map(|c| columns[c][r]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for r in 0..nrows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..ncols {
                    a[r][c] =
                        ((a[r][c] as u64 + (p - f) as u64 * a[row][c] as u64) % p as u64) as u32;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u32; ncols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][free]) % p;
            }
            v
        })
        .collect()
}

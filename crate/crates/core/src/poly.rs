//! Polynomials over a valued ring: Newton polygons, resultants,
//! discriminants and Taylor shifts.
//!
//! Slope convention: a segment `(s, len)` of a Newton polygon means `len`
//! roots of valuation `s`. Segments are listed by increasing `s`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::linalg;
use crate::padic::ring::{Ring, Valued};
use crate::padic::valuation::{fmt_q, Valuation, Q};

/// Coefficients from degree 0, tagged with the level they live in.
#[derive(Clone, Debug)]
pub struct ValuedPolynomial<E> {
    pub level: String,
    pub coeffs: Vec<E>,
}

impl<E: Clone> ValuedPolynomial<E> {
    pub fn new(level: &str, coeffs: Vec<E>) -> Self {
        ValuedPolynomial {
            level: level.to_string(),
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn map<F, R: Clone>(&self, level: &str, f: F) -> ValuedPolynomial<R>
    where
        F: Fn(&E) -> R,
    {
        ValuedPolynomial::new(level, self.coeffs.iter().map(f).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: Q,
    pub length: usize,
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (fmt_q(&self.slope), self.length).serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub segments: Vec<Segment>,
    /// Multiplicity of the root 0.
    pub zero_roots: usize,
}

impl NewtonPolygon {
    pub fn is_pure(&self) -> bool {
        self.segments.len() == 1
    }
}

fn lower_hull(points: &[(i64, Q)]) -> Vec<(i64, Q)> {
    let mut hull: Vec<(i64, Q)> = Vec::new();
    for &pt in points {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly below the chord from a to pt
            let cross = (b.1 - a.1) * Q::from_integer(pt.0 - a.0)
                - (pt.1 - a.1) * Q::from_integer(b.0 - a.0);
            if cross >= Q::from_integer(0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

pub fn newton_polygon<R: Valued>(ring: &R, f: &ValuedPolynomial<R::El>) -> Result<NewtonPolygon> {
    let vals: Vec<Valuation> = f
        .coeffs
        .iter()
        .map(|c| ring.valuation(c))
        .collect::<Result<_>>()?;
    let points: Vec<(i64, Q)> = vals
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.finite().map(|x| (i as i64, x)))
        .collect();
    let (Some(&first), Some(&last)) = (points.first(), points.last()) else {
        return Err(Error::precision(
            "Newton polygon of a polynomial with no determined coefficient",
        ));
    };
    if last.0 as usize != f.degree() {
        return Err(Error::precision(
            "leading coefficient is zero to working precision",
        ));
    }
    let hull = lower_hull(&points);
    let hull_at = |i: i64| -> Q {
        let k = hull.iter().position(|h| h.0 >= i).unwrap_or(hull.len() - 1);
        if hull[k].0 == i || k == 0 {
            return hull[k].1;
        }
        let (a, b) = (hull[k - 1], hull[k]);
        a.1 + (b.1 - a.1) * Q::new(i - a.0, b.0 - a.0)
    };
    for (i, v) in vals.iter().enumerate() {
        if let Valuation::Bottom { precision } = v {
            let i = i as i64;
            let undetermined = if i < first.0 {
                // a nonzero value here could become the first vertex
                f.coeffs.len() > 1 && ring.precision_of(&f.coeffs[i as usize]).is_some()
            } else {
                *precision <= hull_at(i)
            };
            if undetermined {
                return Err(Error::precision(format!(
                    "coefficient of degree {i} is O({}) and may lie on the hull",
                    fmt_q(precision)
                )));
            }
        }
    }
    let mut segments: Vec<Segment> = hull
        .windows(2)
        .map(|w| Segment {
            slope: (w[0].1 - w[1].1) / Q::from_integer(w[1].0 - w[0].0),
            length: (w[1].0 - w[0].0) as usize,
        })
        .collect();
    segments.reverse();
    Ok(NewtonPolygon {
        segments,
        zero_roots: first.0 as usize,
    })
}

pub fn poly_add<R: Ring>(ring: &R, a: &[R::El], b: &[R::El]) -> Vec<R::El> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => ring.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn poly_sub<R: Ring>(ring: &R, a: &[R::El], b: &[R::El]) -> Vec<R::El> {
    let nb: Vec<R::El> = b.iter().map(|x| ring.neg(x)).collect();
    poly_add(ring, a, &nb)
}

pub fn poly_mul<R: Ring>(ring: &R, a: &[R::El], b: &[R::El]) -> Vec<R::El> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = ring.mul(x, y);
            out[i + j] = ring.add(&out[i + j], &t);
        }
    }
    out
}

pub fn poly_scale<R: Ring>(ring: &R, a: &[R::El], c: &R::El) -> Vec<R::El> {
    a.iter().map(|x| ring.mul(x, c)).collect()
}

pub fn poly_pow<R: Ring>(ring: &R, a: &[R::El], mut k: u64) -> Vec<R::El> {
    let mut acc = vec![ring.one()];
    let mut base = a.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = poly_mul(ring, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = poly_mul(ring, &base, &base);
        }
    }
    acc
}

/// `X^k`.
pub fn monomial<R: Ring>(ring: &R, c: R::El, k: usize) -> Vec<R::El> {
    let mut v = vec![ring.zero(); k + 1];
    v[k] = c;
    v
}

pub fn eval<R: Ring>(ring: &R, f: &[R::El], x: &R::El) -> R::El {
    f.iter()
        .rev()
        .fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
}

pub fn derivative<R: Ring>(ring: &R, f: &[R::El]) -> Vec<R::El> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.mul_int(c, i as i64))
        .collect()
}

/// Coefficients of `f(S + y)` in `S`.
pub fn taylor_shift<R: Ring>(
    ring: &R,
    f: &ValuedPolynomial<R::El>,
    y: &R::El,
) -> ValuedPolynomial<R::El> {
    // Horner in the polynomial ring: g <- g * (S + y) + c
    let mut g: Vec<R::El> = Vec::new();
    for c in f.coeffs.iter().rev() {
        let mut next = vec![ring.zero(); g.len() + 1];
        for (i, a) in g.iter().enumerate() {
            next[i + 1] = ring.add(&next[i + 1], a);
            next[i] = ring.add(&next[i], &ring.mul(a, y));
        }
        next[0] = ring.add(&next[0], c);
        g = next;
    }
    ValuedPolynomial::new(&f.level, g)
}

fn trim<R: Valued>(ring: &R, mut a: Vec<R::El>) -> Result<Vec<R::El>> {
    while let Some(last) = a.last() {
        if ring.valuation(last)?.is_bottom() {
            a.pop();
        } else {
            break;
        }
    }
    Ok(a)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem<R: Valued>(ring: &R, a: &[R::El], b: &[R::El]) -> Result<Vec<R::El>> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    let mut steps = a.len() - b.len() + 1;
    while r.len() > db && !r.is_empty() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - 1 - db;
        r = r.iter().map(|x| ring.mul(x, &lb)).collect();
        for (i, c) in b.iter().enumerate() {
            let t = ring.mul(&lr, c);
            r[shift + i] = ring.sub(&r[shift + i], &t);
        }
        r.pop();
        steps -= 1;
        r = trim(ring, r)?;
    }
    let lb_pow = ring.pow(&lb, steps as u64);
    Ok(r.iter().map(|x| ring.mul(x, &lb_pow)).collect())
}

/// Resultant by the subresultant pseudo-remainder sequence; every division
/// is exact in the coefficient domain.
pub fn resultant_subresultant<R: Valued>(ring: &R, f: &[R::El], g: &[R::El]) -> Result<R::El> {
    let mut a = trim(ring, f.to_vec())?;
    let mut b = trim(ring, g.to_vec())?;
    if a.is_empty() || b.is_empty() {
        return Ok(ring.zero());
    }
    let mut s = ring.one();
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            s = ring.neg(&s);
        }
    }
    let mut gg = ring.one();
    let mut h = ring.one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if db == 0 {
            // h <- h^(1 - deg a) lc(b)^(deg a)
            let num = ring.pow(&b[0], da as u64);
            let res = if da == 0 {
                ring.mul(&num, &h)
            } else {
                ring.mul(&num, &ring.inverse(&ring.pow(&h, (da - 1) as u64))?)
            };
            return Ok(ring.mul(&s, &res));
        }
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = ring.neg(&s);
        }
        let r = prem(ring, &a, &b)?;
        if r.is_empty() {
            return Ok(ring.zero());
        }
        let div = ring.inverse(&ring.mul(&gg, &ring.pow(&h, delta as u64)))?;
        a = b;
        b = r.iter().map(|x| ring.mul(x, &div)).collect();
        gg = a.last().expect("nonempty").clone();
        let gd = ring.pow(&gg, delta as u64);
        h = if delta == 0 {
            ring.mul(&h, &gd)
        } else {
            ring.mul(&gd, &ring.inverse(&ring.pow(&h, (delta - 1) as u64))?)
        };
    }
}

/// Resultant as the determinant of the Sylvester matrix.
pub fn resultant_sylvester<R: Valued>(ring: &R, f: &[R::El], g: &[R::El]) -> Result<R::El> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return Ok(ring.one());
    }
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![ring.zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![ring.zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    linalg::det(ring, rows)
}

/// `Res(f, g)`; exact rings use the subresultant chain, truncated rings the
/// Sylvester determinant with valuation pivoting.
pub fn resultant<R: Valued>(
    ring: &R,
    f: &ValuedPolynomial<R::El>,
    g: &ValuedPolynomial<R::El>,
) -> Result<R::El> {
    if f.level != g.level {
        return Err(Error::LevelMismatch(f.level.clone(), g.level.clone()));
    }
    if ring.is_exact() {
        resultant_subresultant(ring, &f.coeffs, &g.coeffs)
    } else {
        resultant_sylvester(ring, &f.coeffs, &g.coeffs)
    }
}

/// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant<R: Valued>(ring: &R, f: &ValuedPolynomial<R::El>) -> Result<R::El> {
    let d = f.degree();
    let df = ValuedPolynomial::new(&f.level, derivative(ring, &f.coeffs));
    let r = resultant(ring, f, &df)?;
    let lc_inv = ring.inverse(&f.coeffs[d])?;
    let v = ring.mul(&r, &lc_inv);
    Ok(if (d * (d.saturating_sub(1)) / 2) % 2 == 1 {
        ring.neg(&v)
    } else {
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactField;
    use crate::padic::{q, qi, EisensteinRing};

    fn ints<R: Ring>(r: &R, c: &[i64]) -> ValuedPolynomial<R::El> {
        ValuedPolynomial::new("Qp", c.iter().map(|&x| r.from_int(x)).collect())
    }

    #[test]
    fn newton_polygons_of_small_polys() {
        let r = EisensteinRing::rational(2, 40).unwrap();
        let np = newton_polygon(&*r, &ints(&*r, &[-2, 0, 1])).unwrap();
        assert_eq!(
            np.segments,
            vec![Segment {
                slope: q(1, 2),
                length: 2
            }]
        );
        // (X - 1)(X - 2) = X^2 - 3X + 2
        let np = newton_polygon(&*r, &ints(&*r, &[2, -3, 1])).unwrap();
        assert_eq!(
            np.segments,
            vec![
                Segment {
                    slope: qi(0),
                    length: 1
                },
                Segment {
                    slope: qi(1),
                    length: 1
                }
            ]
        );
        let np = newton_polygon(&*r, &ints(&*r, &[0, 0, 4, 1])).unwrap();
        assert_eq!(np.zero_roots, 2);
    }

    #[test]
    fn small_discriminants_and_resultants() {
        let r = EisensteinRing::rational(2, 40).unwrap();
        let d = discriminant(&*r, &ints(&*r, &[-2, 0, 1])).unwrap();
        assert!(r.sub(&d, &r.from_int(8)).is_bottom());
        let ex = ExactField::new(2, &[-2, 1]).unwrap();
        let d = discriminant(&ex, &ints(&ex, &[-2, 0, 1])).unwrap();
        assert_eq!(d, ex.from_int(8));
        // Res(X - 3, X^3 + X + 5) = g(3) = 35
        let f = ints(&ex, &[-3, 1]);
        let g = ints(&ex, &[5, 1, 0, 1]);
        assert_eq!(resultant(&ex, &f, &g).unwrap(), ex.from_int(35));
        assert_eq!(resultant(&ex, &g, &f).unwrap(), ex.from_int(-35));
        let s = resultant(&*r, &ints(&*r, &[-3, 1]), &ints(&*r, &[5, 1, 0, 1])).unwrap();
        assert!(r.sub(&s, &r.from_int(35)).is_bottom());
    }

    #[test]
    fn taylor_shift_of_square() {
        let ex = ExactField::new(2, &[2, 0, 0, 1]).unwrap();
        let y = ex.pi();
        let f = ints(&ex, &[0, 0, 1]);
        let g = taylor_shift(&ex, &f, &y);
        assert_eq!(g.coeffs[2], ex.one());
        assert_eq!(g.coeffs[1], ex.mul_int(&y, 2));
        assert_eq!(g.coeffs[0], ex.mul(&y, &y));
    }
}

//! The level `L = K[Y]/(L_{c,rho})`, Step I (slope) and Step A
//! (irreducibility through the element `t`).

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monodromy::params::{CoeffSpec, CurveParams, Reduction};
use crate::padic::valuation::{as_string, fmt_q, q, qi, Q};
use crate::padic::{
    EisensteinRing, PadicElem, QuadElem, QuadraticExtension, Ring, SharedRing, SimpleExtension,
    Valued,
};
use crate::poly::{newton_polygon, NewtonPolygon, ValuedPolynomial};

pub type LField = SimpleExtension<EisensteinRing>;
pub type LElem = Vec<PadicElem>;
pub type MField = QuadraticExtension<LField>;
pub type MElem = QuadElem<LElem>;

/// Working precision in `p`-adic digits when the caller gives none: four
/// times the exponent of the deepest modulus `lambda^(pq^2/(q+1))`, plus a
/// few guard digits.
pub fn default_digits(params: &CurveParams) -> u32 {
    let deepest = q((params.p * params.q * params.q) as i64, params.q as i64 + 1);
    (qi(4) * deepest).ceil().to_integer() as u32 + GUARD_DIGITS
}

pub const GUARD_DIGITS: u32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct FamilyMargin {
    pub family: String,
    pub inequalities: usize,
    /// Smallest `lhs - slope` over the family; `None` for an empty family.
    #[serde(serialize_with = "as_string::opt")]
    pub min_margin: Option<Q>,
    pub attained_at: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SlopeReport {
    #[serde(with = "as_string")]
    pub slope: Q,
    pub newton_polygon: NewtonPolygon,
    pub margins: Vec<FamilyMargin>,
}

fn family(name: &str, items: impl IntoIterator<Item = (usize, Q)>, slope: Q) -> FamilyMargin {
    let mut count = 0;
    let mut best: Option<(usize, Q)> = None;
    for (i, lhs) in items {
        count += 1;
        let m = lhs - slope;
        if best.is_none_or(|(_, b)| m < b) {
            best = Some((i, m));
        }
    }
    FamilyMargin {
        family: name.to_string(),
        inequalities: count,
        min_margin: best.map(|b| b.1),
        attained_at: best.map(|b| b.0),
    }
}

/// Newton polygon of `L` and the three inequality families bounding the
/// slopes contributed by each group of monomials.
pub fn verify_step_i(params: &CurveParams, k: &EisensteinRing) -> Result<SlopeReport> {
    if params.classify_reduction() == Reduction::GoodOverK {
        return Err(Error::certificate(
            "step_i",
            "v(c) is at least the critical valuation: the curve has good reduction over K",
        ));
    }
    let qq = (params.q * params.q) as i64;
    let v_c = params.v_c().expect("wild case has c != 0");
    let slope = (params.v_a_n() + v_c) / qq;
    let l = params.build_l(k)?;
    let np = newton_polygon(k, &ValuedPolynomial::new("K", l))?;
    let expected = vec![crate::poly::Segment {
        slope,
        length: qq as usize,
    }];
    if np.segments != expected || np.zero_roots != 0 {
        return Err(Error::certificate(
            "step_i",
            format!(
                "Newton polygon {:?} is not the single segment ({}, {qq})",
                np.segments,
                fmt_q(&slope)
            ),
        ));
    }
    let a = family(
        "a_n f^(q-1) (c+X)",
        (1..qq).map(|i| (i as usize, params.v_a_n() / (qq - i))),
        slope,
    );
    let b = family(
        "(rho_i X)^(q/p^i) p^(d_i) f^(...)",
        (1..params.n as usize).filter_map(|i| {
            let v = params.v_rho(i)?;
            let e = (params.q / params.p_pow(i as u32)) as i64;
            Some((i, (v * e + qi(params.d[i] as i64)) / (qq - e)))
        }),
        slope,
    );
    let c = family(
        "s_1^q",
        (0..params.n as usize).filter_map(|i| {
            let v = params.v_rho(i)?;
            Some((i, v / (params.q - params.p_pow(i as u32)) as i64))
        }),
        slope,
    );
    let margins = vec![a, b, c];
    if let Some(bad) = margins
        .iter()
        .find(|m| m.min_margin.is_some_and(|x| x < qi(0)))
    {
        return Err(Error::certificate(
            "step_i",
            format!(
                "inequality family {} fails at index {:?}",
                bad.family, bad.attained_at
            ),
        ));
    }
    Ok(SlopeReport {
        slope,
        newton_polygon: np,
        margins,
    })
}

/// A root `y` of `L` with the tower built over it.
pub struct Monodromy {
    pub params: CurveParams,
    pub digits: u32,
    pub k: SharedRing,
    pub f: Vec<PadicElem>,
    pub s1: Vec<PadicElem>,
    /// `L` normalized to be monic.
    pub l_poly: Vec<PadicElem>,
    pub slope_report: SlopeReport,
    pub l: Arc<LField>,
    pub y: LElem,
    pub f_y: LElem,
    pub s_y: LElem,
    /// `M = L(f(y)^(1/2))`, built for `p = 2` only.
    pub m: Option<Arc<MField>>,
}

impl Monodromy {
    pub fn v_y(&self) -> Q {
        self.slope_report.slope
    }

    pub fn l_degree(&self) -> usize {
        self.l.degree()
    }

    /// `e(L/Q_p)` assuming `L/K` totally ramified (certified by Step A).
    pub fn e_l(&self) -> i64 {
        self.l.ramification_index()
    }

    pub fn embed(&self, a: &PadicElem) -> LElem {
        self.l.embed(a)
    }

    pub fn m_field(&self) -> Result<&Arc<MField>> {
        self.m.as_ref().ok_or_else(|| {
            Error::Unsupported(format!(
                "the level M is only built for p = 2 (p = {})",
                self.params.p
            ))
        })
    }
}

/// Runs Step I and attaches `L = K[Y]/(L_{c,rho})`.
pub fn attach_root(params: &CurveParams, digits: Option<u32>) -> Result<Monodromy> {
    let digits = digits.unwrap_or_else(|| default_digits(params));
    let k = params.tower.k_ring(digits)?;
    let slope_report = verify_step_i(params, &k)?;
    let f = params.build_f(&*k)?;
    let s1 = params.build_s1(&*k)?;
    let l_poly = params.build_l(&*k)?;
    let qq = (params.q * params.q) as i64;
    let l = Arc::new(LField::new(
        "L",
        k.clone(),
        l_poly.clone(),
        slope_report.slope,
        qq,
    )?);
    let y = l.gen();
    let f_y = l.eval_base_poly(&f, &y);
    let s_y = l.eval_base_poly(&s1, &y);
    let m = if params.p == 2 {
        Some(Arc::new(MField::new("M", l.clone(), f_y.clone(), 2)?))
    } else {
        None
    };
    Ok(Monodromy {
        params: params.clone(),
        digits,
        k,
        f,
        s1,
        l_poly,
        slope_report,
        l,
        y,
        f_y,
        s_y,
        m,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityCertificate {
    #[serde(with = "as_string")]
    pub v_t: Q,
    #[serde(with = "as_string")]
    pub v_a_n_y: Q,
    /// Lower bound for `e(L/K)` read off the value group; equal to `deg L`
    /// means `L` is irreducible and `L/K` totally ramified.
    pub e_lower_bound: i64,
    pub degree: usize,
    /// `(a, b, c)` with `pi^a y^b t^c` a uniformizer of `L`.
    pub uniformizer: (i64, i64, i64),
}

/// Small exponents `(a, b, c)` with `a va + b vb + c vc = 1`.
fn small_combination(va: i64, vb: i64, vc: i64, bound: i64) -> Option<(i64, i64, i64)> {
    let mut best: Option<(i64, i64, i64)> = None;
    for c in -bound..=bound {
        for b in -bound..=bound {
            let rest = 1 - b * vb - c * vc;
            if rest % va != 0 {
                continue;
            }
            let cand = (rest / va, b, c);
            let cost = |x: (i64, i64, i64)| (x.1.abs() + x.2.abs(), x.0.abs());
            if best.is_none_or(|b0| cost(cand) < cost(b0)) {
                best = Some(cand);
            }
        }
    }
    best
}

/// `t = y^(q^2/p) - b_n + s~^(q/p) + sum_k (rho_k y)^(q/p^(k+1)) (-p)^(d_k/p) f(y)^(q(p^k-1)/p^(k+1))`
/// with `s~ = s_1(y) - y^q`.
pub fn element_t(params: &CurveParams, m: &Monodromy) -> Result<LElem> {
    let (l, k) = (&*m.l, &*m.k);
    let p = params.p;
    let qq = params.q * params.q;
    let mut t = l.pow(&m.y, qq / p);
    t = l.sub(&t, &m.embed(&params.b_n(k)));
    let s_tilde = l.sub(&m.s_y, &l.pow(&m.y, params.q));
    t = l.add(&t, &l.pow(&s_tilde, params.q / p));
    for j in 1..params.n as usize {
        if params.u[j] == 0 {
            continue;
        }
        let pj = params.p_pow(j as u32);
        let rho_y = l.mul(&m.embed(&params.rho(k, j)?), &m.y);
        let mut term = l.pow(&rho_y, params.q / (pj * p));
        term = l.mul(&term, &m.embed(&params.minus_p_pow(k, params.d[j] / p)));
        term = l.mul(&term, &l.pow(&m.f_y, params.q * (pj - 1) / (pj * p)));
        t = l.add(&t, &term);
    }
    Ok(t)
}

pub fn step_a_certificate(
    params: &CurveParams,
    m: &Monodromy,
) -> Result<IrreducibilityCertificate> {
    if params.c != CoeffSpec::int(1) {
        return Err(Error::Unsupported(
            "the irreducibility certificate is only established for c = 1".into(),
        ));
    }
    let t = element_t(params, m)?;
    let v_t =
        m.l.valuation(&t)?
            .finite()
            .ok_or_else(|| Error::precision("t vanishes to working precision"))?;
    let v_a_n_y = params.v_a_n() + m.v_y();
    if v_t * params.p as i64 != v_a_n_y {
        return Err(Error::certificate(
            "step_a",
            format!(
                "p v(t) = {} differs from v(a_n y) = {}",
                fmt_q(&(v_t * params.p as i64)),
                fmt_q(&v_a_n_y)
            ),
        ));
    }
    let e_k = params.e_k() as i64;
    let denom = e_k.lcm(v_t.denom()).lcm(m.v_y().denom());
    let e_lower_bound = denom / e_k;
    let degree = m.l_degree();
    if e_lower_bound != degree as i64 {
        return Err(Error::certificate(
            "step_a",
            format!("value group only forces e(L/K) >= {e_lower_bound}, degree is {degree}"),
        ));
    }
    let e_l = m.e_l();
    let (vk, vy, vt) = (
        e_l / e_k,
        (m.v_y() * e_l).to_integer(),
        (v_t * e_l).to_integer(),
    );
    let (a, b, c) = small_combination(vk, vy, vt, degree as i64).ok_or_else(|| {
        Error::certificate(
            "step_a",
            "no small product of pi, y, t has valuation 1/e(L)",
        )
    })?;
    if m.l.uniformizer().is_none() {
        let l = &*m.l;
        let part = |x: &LElem, k: i64| -> Result<LElem> {
            Ok(if k >= 0 {
                l.pow(x, k as u64)
            } else {
                l.pow(&l.inverse(x)?, (-k) as u64)
            })
        };
        let pi = m.embed(&m.k.pi_pow(1));
        let u = l.mul(&l.mul(&part(&pi, a)?, &part(&m.y, b)?), &part(&t, c)?);
        l.set_uniformizer(u)?;
    }
    Ok(IrreducibilityCertificate {
        v_t,
        v_a_n_y,
        e_lower_bound,
        degree,
        uniformizer: (a, b, c),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::make_params;

    #[test]
    fn uniformizer_exponents() {
        assert_eq!(small_combination(16, 30, 255, 16), Some((16, 0, -1)));
    }

    #[test]
    fn ex0_step_i_and_a() {
        let p = make_params(2, 1, &[1], CoeffSpec::int(1)).unwrap();
        let m = attach_root(&p, None).unwrap();
        assert_eq!(m.v_y(), q(1, 2));
        let cert = step_a_certificate(&p, &m).unwrap();
        assert_eq!(cert.v_t, q(5, 4));
        assert!(step_a_certificate(&p.with_tampered_a_n(), &m).is_err());
    }
}

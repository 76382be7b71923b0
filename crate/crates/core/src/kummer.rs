//! The quadratic layer `M = L(sqrt f(y))` for `p = 2`: the approximate
//! square root of Step E, the different of a quadratic extension, and the
//! resulting break of `M/L`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monodromy::steps::{slack_over, Slack};
use crate::monodromy::{l_valuation, CurveParams, LElem, Monodromy};
use crate::padic::valuation::{as_string, fmt_q, qi, Valuation, Q};
use crate::padic::{Ring, Valued};
use crate::ramification::RamFiltration;

#[derive(Clone, Debug, Serialize)]
pub struct StepEData {
    #[serde(skip)]
    pub u: LElem,
    #[serde(skip)]
    pub h: LElem,
    /// `(q+1)(2q^2-1)`, in units of `1/e(L)`.
    pub s: i64,
    /// `v(2 y^(q/2) h)` in units of `1/e(L)`; equals `s`.
    pub v_leading: i64,
    /// `v(f u^2 - 1 - rho_{n-1} y^(1+q/2) - 2 y^(q/2) h) - s`, in units of `1/e(L)`.
    pub slack: Slack,
    /// `v(h^2) = v(y)`.
    #[serde(with = "as_string")]
    pub v_h: Q,
}

fn two_pow_inv(m: &Monodromy, j: u32) -> Result<LElem> {
    let k = &*m.k;
    let x = k.inverse(&k.pow(&k.from_int(2), j as u64))?;
    Ok(m.embed(&x))
}

fn to_units(v: Q, e: i64, what: &str) -> Result<i64> {
    let x = v * e;
    if !x.is_integer() {
        return Err(Error::certificate(
            "step_e",
            format!("{what} has valuation {} outside (1/{e})Z", fmt_q(&v)),
        ));
    }
    Ok(x.to_integer())
}

/// `h` and `u` with `f(y) u^2 = 1 + rho_{n-1} y^(1+q/2) + 2 y^(q/2) h` up to
/// terms above `s`. Needs `p = 2`.
pub fn step_e_construct(params: &CurveParams, m: &Monodromy) -> Result<StepEData> {
    if params.p != 2 {
        return Err(Error::Unsupported(
            "the quadratic layer exists only for p = 2".into(),
        ));
    }
    let (l, k) = (&*m.l, &*m.k);
    let (n, q) = (params.n, params.q);
    let pw = |j: u32| 1u64 << j;

    // h
    let mut h = l.mul(&l.pow(&m.s_y, q / 2), &m.embed(&k.inverse(&params.b_n(k))?));
    for j in 1..n {
        if params.u[j as usize] == 0 {
            continue;
        }
        let rho_y = l.mul(&m.embed(&params.rho(k, j as usize)?), &m.y);
        let mut term = l.pow(&rho_y, q / pw(j + 1));
        term = l.mul(&term, &two_pow_inv(m, (pw(n - j) - 1) as u32)?);
        term = l.mul(&term, &l.pow(&m.f_y, q * (pw(j) - 1) / pw(j + 1)));
        h = l.add(&h, &term);
    }
    h = l.sub(&h, &l.one());

    // u
    let mut u = l.sub(&l.one(), &l.pow(&m.y, q / 2));
    for j in 0..n.saturating_sub(1) {
        let term = l.mul(
            &l.pow(&m.y, pw(j) * (1 + q)),
            &two_pow_inv(m, (pw(j + 1) - 1) as u32)?,
        );
        u = l.sub(&u, &term);
    }
    for i in 1..n {
        if params.u[i as usize] == 0 {
            continue;
        }
        let rho = m.embed(&params.rho(k, i as usize)?);
        for j in (n - i - 1)..=(n - 2) {
            let mut term = l.mul(&l.pow(&rho, pw(j)), &l.pow(&m.y, pw(j) * (1 + pw(i))));
            term = l.mul(&term, &two_pow_inv(m, (pw(j + 1) - 1) as u32)?);
            u = l.add(&u, &term);
        }
    }

    let e = m.e_l();
    let s = ((q + 1) * (2 * q * q - 1)) as i64;
    let yq2 = l.pow(&m.y, q / 2);
    let lead = l.mul_int(&l.mul(&yq2, &h), 2);
    let v_leading = to_units(l_valuation(m, &lead)?, e, "2 y^(q/2) h")?;
    if v_leading != s {
        return Err(Error::certificate(
            "step_e",
            format!("v(2 y^(q/2) h) = {v_leading}/{e}, expected {s}/{e}"),
        ));
    }
    let v_h = l_valuation(m, &h)?;
    if v_h * 2 != m.v_y() {
        return Err(Error::certificate(
            "step_e",
            format!("v(h^2) = {} differs from v(y)", fmt_q(&(v_h * 2))),
        ));
    }
    let mut rest = l.sub(&l.mul(&m.f_y, &l.mul(&u, &u)), &l.one());
    rest = l.sub(&rest, &lead);
    if params.u[n as usize - 1] != 0 {
        let rho = m.embed(&params.rho(k, n as usize - 1)?);
        rest = l.sub(&rest, &l.mul(&rho, &l.mul(&m.y, &yq2)));
    }
    let v_rest = l.valuation(&rest)?.rescaled(e);
    let slack = slack_over(v_rest, qi(s)).ok_or_else(|| match v_rest {
        Valuation::Bottom { .. } => Error::precision("step_e: remainder known only below s"),
        _ => Error::certificate(
            "step_e",
            format!("remainder has valuation {v_rest}/{e}, not above {s}/{e}"),
        ),
    })?;
    Ok(StepEData {
        u,
        h,
        s,
        v_leading,
        slack,
        v_h,
    })
}

/// Outcome of the refinement loop for `F(sqrt z) / F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticDifferent {
    /// Exponent of the different in units of `1/e(F)`; 0 if unramified or split.
    pub d: i64,
    /// Final `v(z u^2 - 1)` (`None` if `z` is a square to working precision).
    pub m_star: Option<i64>,
    /// Values of `v(z u^2 - 1)` visited.
    pub trace: Vec<i64>,
}

/// Different exponent of `F(sqrt z)/F` for a unit `z`, over a field `F` with
/// residue field `F_2`. Pushes `m = v(z u^2 - 1)` up while it is even and
/// below `2 v(2)`; then an odd `m` gives `d = 2 v(2) + 1 - m`.
pub fn quadratic_different<R: Valued>(
    ring: &R,
    z: &R::El,
    seed: Option<R::El>,
    ceiling: Option<i64>,
) -> Result<QuadraticDifferent> {
    let e = ring.ramification_index();
    let two_v2 = 2 * e;
    let ceiling = ceiling.unwrap_or(two_v2 + 4);
    match ring.valuation(z)? {
        Valuation::Finite(v) if v == qi(0) => {}
        other => {
            return Err(Error::InvalidInput(format!(
                "z must be a unit, has valuation {other}"
            )))
        }
    }
    let mut u = seed.unwrap_or_else(|| ring.one());
    let mut trace = Vec::new();
    for _ in 0..=ceiling {
        let x = ring.sub(&ring.mul(z, &ring.mul(&u, &u)), &ring.one());
        let m = match ring.valuation(&x)? {
            Valuation::Finite(v) => {
                let m = v * e;
                if !m.is_integer() {
                    return Err(Error::InvalidInput(format!(
                        "v(z u^2 - 1) = {} off the value group",
                        fmt_q(&v)
                    )));
                }
                m.to_integer()
            }
            Valuation::Bottom { precision } => {
                if precision * e > qi(two_v2) {
                    return Ok(QuadraticDifferent {
                        d: 0,
                        m_star: None,
                        trace,
                    });
                }
                return Err(Error::precision("z u^2 - 1 vanishes below 2 v(2)"));
            }
        };
        trace.push(m);
        if m <= 0 {
            return Err(Error::InvalidInput("u is not a unit".into()));
        }
        if m >= two_v2 {
            return Ok(QuadraticDifferent {
                d: 0,
                m_star: Some(m),
                trace,
            });
        }
        if m % 2 == 1 {
            return Ok(QuadraticDifferent {
                d: two_v2 + 1 - m,
                m_star: Some(m),
                trace,
            });
        }
        // residue field F_2: any delta of valuation m/2 kills the leading term
        let delta = ring.element_of_valuation(m / 2)?;
        u = ring.mul(&u, &ring.add(&ring.one(), &delta));
    }
    Err(Error::precision(format!(
        "no odd v(z u^2 - 1) within {ceiling} refinements"
    )))
}

/// `d(M/L)` for the curve, seeded with Step E's `u`.
pub fn different_m_over_l(
    params: &CurveParams,
    m: &Monodromy,
    e: &StepEData,
) -> Result<QuadraticDifferent> {
    let two_v2 = 2 * m.e_l();
    quadratic_different(
        &*m.l,
        &m.f_y,
        Some(e.u.clone()),
        Some(two_v2 + params.q as i64 + 4),
    )
}

/// Lower filtration of `Gal(M/L)` (order 2) from `d = t + 1`; `t` must be an
/// odd element of `1 + qN` at least `1 + q`.
pub fn step_f_filtration(q: u64, d: i64) -> Result<RamFiltration> {
    let t = d - 1;
    let mut problems = Vec::new();
    if t < 1 {
        problems.push(format!("different {d} gives no break"));
    } else {
        let tu = t as u64;
        if !(tu - 1).is_multiple_of(q) {
            problems.push(format!("break {t} is not in 1 + {q}N"));
        }
        if tu < 1 + q {
            problems.push(format!("break {t} is below 1 + q = {}", 1 + q));
        }
        if tu.is_multiple_of(2) {
            problems.push(format!("break {t} is even"));
        }
    }
    if !problems.is_empty() {
        return Err(Error::ConstraintViolation(problems));
    }
    RamFiltration::new(2, &[(0, t as u32, 2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::{attach_root, make_params, step_a_certificate, CoeffSpec};
    use crate::padic::EisensteinRing;

    #[test]
    fn rational_quadratic_differents() {
        let r = EisensteinRing::rational(2, 30).unwrap();
        let r = &*r;
        let d = |z: i64| quadratic_different(r, &r.from_int(z), None, None).map(|x| x.d);
        assert_eq!(d(3).unwrap(), 2);
        assert_eq!(d(7).unwrap(), 2);
        assert_eq!(d(5).unwrap(), 0);
        assert_eq!(d(1).unwrap(), 0);
        assert_eq!(d(17).unwrap(), 0);
        assert!(d(2).is_err());
    }

    #[test]
    fn ex0_break() {
        let p = make_params(2, 1, &[1], CoeffSpec::int(1)).unwrap();
        let m = attach_root(&p, None).unwrap();
        step_a_certificate(&p, &m).unwrap();
        let e = step_e_construct(&p, &m).unwrap();
        assert_eq!(e.s, 21);
        let qd = different_m_over_l(&p, &m, &e).unwrap();
        assert_eq!(qd.d, 4);
        assert_eq!(
            step_f_filtration(2, qd.d).unwrap().triples(),
            vec![(0, 3, 2)]
        );
    }

    #[test]
    fn break_constraints() {
        assert!(step_f_filtration(4, 2).is_err());
        assert!(step_f_filtration(4, 4).is_err());
        assert!(step_f_filtration(4, 6).is_ok());
        assert!(step_f_filtration(4, 10).is_ok());
    }
}

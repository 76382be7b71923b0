//! Steps III, IV, V (the change of variables) and VII (root distances).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monodromy::params::CurveParams;
use crate::monodromy::pipeline::{LElem, MElem, Monodromy};
use crate::padic::valuation::{as_string, fmt_q, q, qi, Valuation, Q};
use crate::padic::{Ring, Valued};
use crate::poly::{discriminant, poly_mul, poly_sub, taylor_shift, ValuedPolynomial};

/// How far a valuation clears a bound. A precision-zero value only gives
/// a lower bound for the slack.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slack {
    #[serde(with = "as_string")]
    pub value: Q,
    pub lower_bound_only: bool,
}

pub(crate) fn slack_over(v: Valuation, bound: Q) -> Option<Slack> {
    match v {
        Valuation::Finite(x) => Some(Slack {
            value: x - bound,
            lower_bound_only: false,
        }),
        Valuation::Bottom { precision } => Some(Slack {
            value: precision - bound,
            lower_bound_only: true,
        }),
    }
    .filter(|s| s.value > qi(0))
}

fn require_slack(step: &str, degree: usize, v: Valuation, bound: Q) -> Result<Slack> {
    match (slack_over(v, bound), v) {
        (Some(s), _) => Ok(s),
        (None, Valuation::Bottom { precision }) => Err(Error::precision(format!(
            "{step}: term of degree {degree} known only to O({}), need more than {}",
            fmt_q(&precision),
            fmt_q(&bound)
        ))),
        (None, _) => Err(Error::CongruenceFailure {
            step: step.to_string(),
            degree,
            valuation: v.to_string(),
            bound: fmt_q(&bound),
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StepIIIData {
    /// `B_0, ..., B_n`.
    #[serde(skip)]
    pub b: Vec<LElem>,
    #[serde(serialize_with = "as_string::vec")]
    pub v_b: Vec<Q>,
    /// `S A_0(S), ..., S A_n(S)` as polynomials in `S` over `M` (`p = 2`).
    #[serde(skip)]
    pub sa: Option<Vec<Vec<MElem>>>,
    /// Congruence for `B_n^q` modulo `lambda^(pq^2/(q+1)) m`.
    pub congruence: Slack,
    /// `v(c + y - B_0)` above the critical valuation.
    pub bridge: Slack,
}

pub fn compute_step_iii(params: &CurveParams, m: &Monodromy) -> Result<StepIIIData> {
    let (l, k) = (&*m.l, &*m.k);
    let (p, n) = (params.p, params.n as usize);
    let minus_p_f = l.mul(&m.embed(&k.from_int(-(p as i64))), &m.f_y);
    let denom_inv = l.inverse(&l.pow(&minus_p_f, p))?;
    let step = |b: &LElem| l.mul(&l.mul(&m.f_y, &l.pow(b, p)), &denom_inv);

    let mut b = vec![l.zero(); n + 1];
    b[n] = l.neg(&m.s_y);
    for i in (1..n).rev() {
        let rho_y = l.mul(&m.embed(&params.rho(k, n - i)?), &m.y);
        b[i] = l.sub(&step(&b[i + 1]), &rho_y);
    }
    b[0] = step(&b[1]);

    let v_c = params.v_c().unwrap_or(qi(0));
    let mut v_b = Vec::with_capacity(n + 1);
    for (i, bi) in b.iter().enumerate() {
        let v = l
            .valuation(bi)?
            .finite()
            .ok_or_else(|| Error::precision(format!("B_{i} vanishes to working precision")))?;
        if i >= 1 {
            // v(B_{j+1}) = (1 + ... + p^j)/p^j + v(c)/p^(j+1), j = i - 1
            let j = (i - 1) as u32;
            let pj = params.p_pow(j) as i64;
            let geo: i64 = (0..=j).map(|t| params.p_pow(t) as i64).sum();
            let want = q(geo, pj) + v_c / (pj * p as i64);
            if v != want {
                return Err(Error::certificate(
                    "step_iii",
                    format!(
                        "v(B_{i}) = {} but the ladder predicts {}",
                        fmt_q(&v),
                        fmt_q(&want)
                    ),
                ));
            }
        }
        v_b.push(v);
    }

    // B_n^q against a_n/(-1)^q f^(q-1) B_0 + sum_k (rho_k y)^(q/p^k) (-p)^(d_k) f^(q(p^k-1)/p^k)
    let sign = if params.q.is_multiple_of(2) { 1 } else { -1 };
    let mut rhs = l.mul(
        &l.mul(
            &m.embed(&k.mul_int(&params.a_n(k), sign)),
            &l.pow(&m.f_y, params.q - 1),
        ),
        &b[0],
    );
    for j in 1..n {
        let pj = params.p_pow(j as u32);
        let rho_y = l.mul(&m.embed(&params.rho(k, j)?), &m.y);
        let term = l.mul(
            &l.mul(
                &l.pow(&rho_y, params.q / pj),
                &m.embed(&params.minus_p_pow(k, params.d[j])),
            ),
            &l.pow(&m.f_y, params.q * (pj - 1) / pj),
        );
        rhs = l.add(&rhs, &term);
    }
    let diff = l.sub(&l.pow(&b[n], params.q), &rhs);
    let bound = params.v_lambda() * q((p * params.q * params.q) as i64, params.q as i64 + 1);
    let congruence = require_slack("step_iii", 0, l.valuation(&diff)?, bound)?;

    let c_plus_y = l.add(&m.embed(&params.c_elem(k)?), &m.y);
    let bridge = require_slack(
        "step_iv",
        params.q as usize,
        l.valuation(&l.sub(&c_plus_y, &b[0]))?,
        params.critical_valuation(),
    )?;

    let sa = match &m.m {
        Some(mf) => {
            // S A_{i+1} = S A_i - B_{i+1} S^(q/p^(i+1)) / (p f(y)^((p-1)/p))
            let w = mf.w();
            let inv = mf.inverse(&mf.mul(&mf.from_int(p as i64), &w))?;
            let mut out: Vec<Vec<MElem>> = vec![vec![mf.zero()]];
            for i in 0..n {
                let deg = (params.q / params.p_pow(i as u32 + 1)) as usize;
                let mut next = out[i].clone();
                if next.len() <= deg {
                    next.resize(deg + 1, mf.zero());
                }
                let coef = mf.mul(&mf.embed(&b[i + 1]), &inv);
                next[deg] = mf.sub(&next[deg], &coef);
                out.push(next);
            }
            Some(out)
        }
        None => None,
    };

    Ok(StepIIIData {
        b,
        v_b,
        sa,
        congruence,
        bridge,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub valuation: String,
    #[serde(with = "as_string")]
    pub bound: Q,
}

#[derive(Clone, Debug, Serialize)]
pub struct CongruenceReport {
    pub step: String,
    pub min_slack: Slack,
    pub degrees: Vec<DegreeCheck>,
}

/// Bound on the `S^j` coefficient of an element of `lambda^p m[T]` with
/// `S = lambda^(p/(1+q)) T`: `v > p v(lambda) (1 + q - j)/(1 + q)`.
pub fn coefficient_bound(params: &CurveParams, j: usize) -> Q {
    let qp1 = params.q as i64 + 1;
    params.v_lambda() * q(params.p as i64 * (qp1 - j as i64), qp1)
}

fn congruence_report<R: Valued>(
    step: &str,
    params: &CurveParams,
    ring: &R,
    diff: &[R::El],
) -> Result<CongruenceReport> {
    let mut degrees = Vec::with_capacity(diff.len());
    let mut min: Option<Slack> = None;
    for (j, d) in diff.iter().enumerate() {
        let v = ring.valuation(d)?;
        let bound = coefficient_bound(params, j);
        let s = require_slack(step, j, v, bound)?;
        if min.is_none_or(|m| (s.value, s.lower_bound_only) < (m.value, m.lower_bound_only)) {
            min = Some(s);
        }
        degrees.push(DegreeCheck {
            degree: j,
            valuation: v.to_string(),
            bound,
        });
    }
    Ok(CongruenceReport {
        step: step.to_string(),
        min_slack: min.ok_or_else(|| Error::InvalidInput("empty congruence".into()))?,
        degrees,
    })
}

/// `f(S + y)` with coefficients in `L`.
pub fn shifted_f(m: &Monodromy) -> Vec<LElem> {
    let l = &*m.l;
    let f_l = ValuedPolynomial::new("L", m.f.iter().map(|c| m.embed(c)).collect());
    taylor_shift(l, &f_l, &m.y).coeffs
}

/// `sum_k rho_k S^(1+p^k) + S^(1+q)` over `L`.
fn rho_part(params: &CurveParams, m: &Monodromy) -> Result<Vec<LElem>> {
    let l = &*m.l;
    let q = params.q as usize;
    let mut out = vec![l.zero(); q + 2];
    for k in 0..params.n as usize {
        let i = 1 + params.p_pow(k as u32) as usize;
        out[i] = l.add(&out[i], &m.embed(&params.rho(&*m.k, k)?));
    }
    out[q + 1] = l.one();
    Ok(out)
}

pub fn verify_step_iv(
    params: &CurveParams,
    m: &Monodromy,
    iii: &StepIIIData,
) -> Result<CongruenceReport> {
    let (l, k) = (&*m.l, &*m.k);
    let q = params.q as usize;
    let mut rhs = rho_part(params, m)?;
    rhs[0] = l.add(&rhs[0], &m.f_y);
    rhs[1] = l.add(&rhs[1], &m.s_y);
    for j in 1..params.n as usize {
        let i = params.p_pow(j as u32) as usize;
        let t = l.mul(&m.y, &m.embed(&params.rho(k, j)?));
        rhs[i] = l.add(&rhs[i], &t);
    }
    rhs[q] = l.add(&rhs[q], &iii.b[0]);
    let diff = poly_sub(l, &shifted_f(m), &rhs);
    congruence_report("step_iv", params, l, &diff)
}

pub fn verify_step_v(
    params: &CurveParams,
    m: &Monodromy,
    iii: &StepIIIData,
) -> Result<CongruenceReport> {
    let mf = m.m_field()?;
    let sa = iii
        .sa
        .as_ref()
        .ok_or_else(|| Error::Unsupported("S A_n(S) needs the level M".into()))?;
    let mut base = sa[params.n as usize].clone();
    base[0] = mf.add(&base[0], &mf.w());
    let mut rhs = poly_mul(&**mf, &base, &base);
    let extra: Vec<MElem> = rho_part(params, m)?.iter().map(|c| mf.embed(c)).collect();
    rhs = crate::poly::poly_add(&**mf, &rhs, &extra);
    let lhs: Vec<MElem> = shifted_f(m).iter().map(|c| mf.embed(c)).collect();
    let diff = poly_sub(&**mf, &lhs, &rhs);
    congruence_report("step_v", params, &**mf, &diff)
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceReport {
    #[serde(with = "as_string")]
    pub v_disc: Q,
    #[serde(with = "as_string")]
    pub distance: Q,
}

/// `v(disc L) = q^2 v(a_n)`, hence every `v(L'(y_i)) = v(a_n)` and all root
/// distances equal `v(a_n)/(q^2 - 1)`.
pub fn root_distance_report(params: &CurveParams, m: &Monodromy) -> Result<DistanceReport> {
    let k = &*m.k;
    let disc = discriminant(k, &ValuedPolynomial::new("K", m.l_poly.clone()))?;
    let v_disc = k
        .valuation(&disc)?
        .finite()
        .ok_or_else(|| Error::precision("discriminant vanishes to working precision"))?;
    let qq = (params.q * params.q) as i64;
    if v_disc != params.v_a_n() * qq {
        return Err(Error::certificate(
            "step_vii",
            format!(
                "v(disc L) = {} but q^2 v(a_n) = {}",
                fmt_q(&v_disc),
                fmt_q(&(params.v_a_n() * qq))
            ),
        ));
    }
    let distance = params.v_a_n() / (qq - 1);
    if distance != params.critical_valuation() {
        return Err(Error::certificate(
            "step_vii",
            "root distance differs from v(lambda^(p/(1+q)))",
        ));
    }
    Ok(DistanceReport { v_disc, distance })
}

/// Valuation of an element of `L` that must be determined.
pub fn l_valuation(m: &Monodromy, x: &LElem) -> Result<Q> {
    m.l.valuation(x)?
        .finite()
        .ok_or_else(|| Error::precision("element vanishes to working precision"))
}

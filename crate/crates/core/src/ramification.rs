//! Lower-numbering ramification filtrations, Herbrand functions and the
//! arithmetic built on them.
//!
//! Filtrations are stored in lower numbering only; upper numbering is
//! always derived through `phi`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::valuation::{as_string, fmt_q, qi, Q};

/// `G_i` has order `order` for `from <= i <= to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationSegment {
    pub from: u32,
    pub to: u32,
    pub order: u64,
}

/// Filtration `G_0 ⊇ G_1 ⊇ ...`; `G_i = 1` beyond the last segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamFiltration {
    pub p: u64,
    pub segments: Vec<FiltrationSegment>,
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl RamFiltration {
    /// Segments given as `(from, to, order)`.
    pub fn new(p: u64, segs: &[(u32, u32, u64)]) -> Result<Self> {
        let segments: Vec<FiltrationSegment> = segs
            .iter()
            .map(|&(from, to, order)| FiltrationSegment { from, to, order })
            .collect();
        let f = RamFiltration { p, segments };
        f.validate()?;
        Ok(f)
    }

    /// `G_0 = 1`.
    pub fn trivial(p: u64) -> Self {
        RamFiltration {
            p,
            segments: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        let mut next = 0;
        let mut prev_order: Option<u64> = None;
        for s in &self.segments {
            if s.from != next {
                problems.push(format!(
                    "segment starting at {} is not contiguous (expected {next})",
                    s.from
                ));
            }
            if s.to < s.from {
                problems.push(format!("empty segment {}..{}", s.from, s.to));
            }
            if s.order == 0 {
                problems.push("zero group order".to_string());
            }
            if let Some(po) = prev_order {
                if s.order > po || po % s.order != 0 {
                    problems.push(format!(
                        "order {} does not divide the previous order {po}",
                        s.order
                    ));
                }
            }
            if s.to >= 1 && !is_power_of(s.order, self.p) {
                problems.push(format!(
                    "G_{} of order {} is not a {}-group",
                    s.to, s.order, self.p
                ));
            }
            next = s.to + 1;
            prev_order = Some(s.order);
        }
        if let (Some(g0), Some(g1)) = (
            self.segments.first().map(|s| s.order),
            Some(self.order_at(1)),
        ) {
            if g0 % g1 == 0 && (g0 / g1) % self.p == 0 {
                problems.push(format!(
                    "[G_0 : G_1] = {} is divisible by {}",
                    g0 / g1,
                    self.p
                ));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::ConstraintViolation(problems))
        }
    }

    pub fn group_order(&self) -> u64 {
        self.order_at(0)
    }

    /// `|G_i|` for an integer index.
    pub fn order_at(&self, i: u32) -> u64 {
        self.segments
            .iter()
            .find(|s| s.from <= i && i <= s.to)
            .map_or(1, |s| s.order)
    }

    /// `|G_u|` for real `u >= -1`: `G_u = G_ceil(u)`.
    pub fn order_at_real(&self, u: Q) -> u64 {
        let c = u.ceil().to_integer();
        if c <= 0 {
            self.group_order()
        } else {
            self.order_at(c as u32)
        }
    }

    /// Last index with `G_i != 1`, if any.
    pub fn last_index(&self) -> Option<u32> {
        self.segments
            .iter()
            .rev()
            .find(|s| s.order > 1)
            .map(|s| s.to)
    }

    /// Indices `i` with `G_i != G_{i+1}`.
    pub fn lower_breaks(&self) -> Vec<u32> {
        let Some(last) = self.last_index() else {
            return Vec::new();
        };
        (0..=last)
            .filter(|&i| self.order_at(i) != self.order_at(i + 1))
            .collect()
    }

    pub fn upper_breaks(&self) -> Vec<Q> {
        let phi = phi(self);
        self.lower_breaks()
            .into_iter()
            .map(|b| phi.eval(qi(b as i64)))
            .collect()
    }

    /// Same groups, with every segment split into single indices.
    pub fn refined(&self) -> RamFiltration {
        let segments = self
            .segments
            .iter()
            .flat_map(|s| {
                (s.from..=s.to).map(move |i| FiltrationSegment {
                    from: i,
                    to: i,
                    order: s.order,
                })
            })
            .collect();
        RamFiltration {
            p: self.p,
            segments,
        }
    }

    /// Merges consecutive segments of equal order and drops trailing
    /// trivial ones.
    pub fn normalized(&self) -> RamFiltration {
        let mut out: Vec<FiltrationSegment> = Vec::new();
        for s in &self.segments {
            match out.last_mut() {
                Some(last) if last.order == s.order && last.to + 1 == s.from => last.to = s.to,
                _ => out.push(*s),
            }
        }
        while out.len() > 1 && out.last().is_some_and(|s| s.order == 1) {
            out.pop();
        }
        RamFiltration {
            p: self.p,
            segments: out,
        }
    }

    /// `(from, to, order)` triples.
    pub fn triples(&self) -> Vec<(u32, u32, u64)> {
        self.segments
            .iter()
            .map(|s| (s.from, s.to, s.order))
            .collect()
    }
}

/// Continuous increasing piecewise-linear function on `[0, inf)` through
/// `points`, with `slopes[k]` on `[points[k].0, points[k+1].0]` and the last
/// slope continuing forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HerbrandFn {
    pub points: Vec<(Q, Q)>,
    pub slopes: Vec<Q>,
}

impl Serialize for HerbrandFn {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            points: Vec<(String, String)>,
            slopes: Vec<String>,
        }
        Repr {
            points: self
                .points
                .iter()
                .map(|(x, y)| (fmt_q(x), fmt_q(y)))
                .collect(),
            slopes: self.slopes.iter().map(fmt_q).collect(),
        }
        .serialize(s)
    }
}

impl HerbrandFn {
    fn from_pieces(points: Vec<(Q, Q)>, slopes: Vec<Q>) -> Self {
        // merge collinear pieces so equal functions compare equal
        let mut p2: Vec<(Q, Q)> = Vec::new();
        let mut s2: Vec<Q> = Vec::new();
        for (pt, sl) in points.into_iter().zip(slopes) {
            if s2.last() == Some(&sl) {
                continue;
            }
            p2.push(pt);
            s2.push(sl);
        }
        HerbrandFn {
            points: p2,
            slopes: s2,
        }
    }

    pub fn eval(&self, x: Q) -> Q {
        let k = self.points.iter().rposition(|p| p.0 <= x).unwrap_or(0);
        let (x0, y0) = self.points[k];
        y0 + self.slopes[k] * (x - x0)
    }

    /// The functional inverse.
    pub fn inverse(&self) -> HerbrandFn {
        HerbrandFn {
            points: self.points.iter().map(|&(x, y)| (y, x)).collect(),
            slopes: self.slopes.iter().map(|s| Q::from_integer(1) / s).collect(),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &HerbrandFn) -> HerbrandFn {
        let inv = inner.inverse();
        let mut xs: Vec<Q> = inner.points.iter().map(|p| p.0).collect();
        xs.extend(self.points.iter().map(|p| inv.eval(p.0)));
        xs.sort();
        xs.dedup();
        let points: Vec<(Q, Q)> = xs.iter().map(|&x| (x, self.eval(inner.eval(x)))).collect();
        let slopes: Vec<Q> = xs
            .iter()
            .map(|&x| {
                let ki = inner.points.iter().rposition(|p| p.0 <= x).unwrap_or(0);
                let y = inner.eval(x);
                let ko = self.points.iter().rposition(|p| p.0 <= y).unwrap_or(0);
                inner.slopes[ki] * self.slopes[ko]
            })
            .collect();
        HerbrandFn::from_pieces(points, slopes)
    }

    pub fn is_concave(&self) -> bool {
        self.slopes.windows(2).all(|w| w[1] <= w[0])
    }

    pub fn is_convex(&self) -> bool {
        self.slopes.windows(2).all(|w| w[1] >= w[0])
    }
}

/// `phi(u) = int_0^u dt / [G_0 : G_t]`.
pub fn phi(f: &RamFiltration) -> HerbrandFn {
    let g0 = f.group_order().max(1) as i64;
    let last = f.last_index().unwrap_or(0);
    let mut points = Vec::new();
    let mut slopes = Vec::new();
    let mut y = qi(0);
    for i in 0..=last + 1 {
        // slope on [i, i+1] is |G_{i+1}| / |G_0|
        let s = Q::new(f.order_at(i + 1) as i64, g0);
        points.push((qi(i as i64), y));
        slopes.push(s);
        y += s;
    }
    HerbrandFn::from_pieces(points, slopes)
}

pub fn psi(f: &RamFiltration) -> HerbrandFn {
    phi(f).inverse()
}

/// `sum_{i >= 0} (|G_i| - 1)`.
pub fn different_exponent(f: &RamFiltration) -> u64 {
    f.segments
        .iter()
        .map(|s| (s.order - 1) * (s.to - s.from + 1) as u64)
        .sum()
}

/// The same number through the jumps: `sum_j (|G_j| - |G_{j+1}|)(j + 1)`.
pub fn different_exponent_by_jumps(f: &RamFiltration) -> u64 {
    f.lower_breaks()
        .into_iter()
        .map(|j| (f.order_at(j) - f.order_at(j + 1)) * (j as u64 + 1))
        .sum()
}

/// Different exponent of a tower in the top field's normalization.
pub fn tower_transitivity(d_upper: u64, e_upper: u64, d_lower: u64) -> u64 {
    d_upper + e_upper * d_lower
}

/// For an abelian extension: every upper break is an integer.
pub fn hasse_arf_check(f: &RamFiltration) -> bool {
    f.upper_breaks().iter().all(|b| b.is_integer())
}

/// `{start + step k : k >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    pub start: u64,
    pub step: u64,
}

impl Progression {
    pub fn contains(&self, t: u64) -> bool {
        t >= self.start && (t - self.start).is_multiple_of(self.step)
    }

    pub fn first(&self, k: usize) -> Vec<u64> {
        (0..k as u64).map(|i| self.start + i * self.step).collect()
    }
}

/// Breaks allowed for `M / M^{Z(G)}` when `G` is extra-special of order
/// `p^(2n+1)` and the outer filtration has `(G/H)_2 = 1`.
pub fn admissible_abelian_breaks(p: u64, n: u32, outer: &RamFiltration) -> Result<Progression> {
    if outer.order_at(2) != 1 {
        return Err(Error::ConstraintViolation(vec![format!(
            "outer filtration has (G/H)_2 of order {}",
            outer.order_at(2)
        )]));
    }
    Ok(Progression {
        start: 1,
        step: p.pow(n),
    })
}

/// Filtration of `Gal(M/K)`, or the admissible family when the break is not
/// determined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Assembled {
    Exact {
        filtration: RamFiltration,
    },
    /// `G_0 = G_1` of order `pq^2`, `G_2 = ... = G_t = Z(G)` of order `p`,
    /// for some undetermined `t` in `breaks`.
    Family {
        p: u64,
        group_order: u64,
        center_order: u64,
        breaks: Progression,
    },
}

impl Assembled {
    pub fn exact(&self) -> Option<&RamFiltration> {
        match self {
            Assembled::Exact { filtration } => Some(filtration),
            Assembled::Family { .. } => None,
        }
    }
}

/// `G_0 = G_1 = G`, `G_2 = ... = G_t = Z(G)`, `G_{t+1} = 1`.
pub fn shape_with_break(p: u64, n: u32, t: u32) -> Result<RamFiltration> {
    let q = p.pow(n);
    RamFiltration::new(p, &[(0, 1, p * q * q), (2, t, p)])
}

/// Splices the outer data (`(G/H)_0 = (G/H)_1`, `(G/H)_2 = 1`) with the
/// break `t = d_ML - 1` of `M/L` (`p = 2`). For odd `p` the break is only
/// known to lie in `1 + q N` and the family is returned.
pub fn assemble_g_filtration(p: u64, n: u32, d_ml: Option<u64>) -> Result<Assembled> {
    let q = p.pow(n);
    if p != 2 {
        return Ok(Assembled::Family {
            p,
            group_order: p * q * q,
            center_order: p,
            breaks: Progression {
                start: 1 + q,
                step: q,
            },
        });
    }
    let d = d_ml.ok_or_else(|| Error::InvalidInput("p = 2 needs the different of M/L".into()))?;
    let t = d.checked_sub(1).ok_or_else(|| {
        Error::ConstraintViolation(vec!["different exponent 0 for a ramified M/L".into()])
    })?;
    if t != 1 + q {
        return Err(Error::ConstraintViolation(vec![format!(
            "break {t} of M/L differs from 1 + q = {}",
            1 + q
        )]));
    }
    Ok(Assembled::Exact {
        filtration: shape_with_break(p, n, t as u32)?,
    })
}

/// `G_i ∩ H` for a subgroup `H` of order `h` contained in every nontrivial
/// `G_i` (e.g. the center of a `p`-group with cyclic center of order `p`).
pub fn restrict_to_minimal(f: &RamFiltration, h: u64) -> Result<RamFiltration> {
    let Some(last) = f.last_index() else {
        return Ok(RamFiltration::trivial(f.p));
    };
    if !f.order_at(last).is_multiple_of(h) {
        return Err(Error::ConstraintViolation(vec![format!(
            "subgroup of order {h} is not contained in G_{last}"
        )]));
    }
    RamFiltration::new(f.p, &[(0, last, h)])
}

/// Lower filtration of `G/H` by Herbrand: `(G/H)_v = G_u H / H` with
/// `v = phi_H(u)`; `h` is the filtration of `H` (that is, `G_u ∩ H`).
pub fn quotient(f: &RamFiltration, h: &RamFiltration) -> Result<RamFiltration> {
    let psi_h = psi(h);
    let mut segs: Vec<(u32, u32, u64)> = Vec::new();
    let mut v = 0u32;
    loop {
        let u = psi_h.eval(qi(v as i64));
        let (g, hh) = (f.order_at_real(u), h.order_at_real(u));
        if g % hh != 0 {
            return Err(Error::ConstraintViolation(vec![format!(
                "|H_u| = {hh} does not divide |G_u| = {g} at u = {}",
                fmt_q(&u)
            )]));
        }
        let order = g / hh;
        if order == 1 {
            break;
        }
        match segs.last_mut() {
            Some(last) if last.2 == order => last.1 = v,
            _ => segs.push((v, v, order)),
        }
        v += 1;
        if v > 1 << 20 {
            return Err(Error::InvalidInput(
                "quotient filtration does not terminate".into(),
            ));
        }
    }
    RamFiltration::new(f.p, &segs)
}

#[derive(Clone, Debug, Serialize)]
pub struct HerbrandSummary {
    #[serde(serialize_with = "as_string::vec")]
    pub upper_breaks: Vec<Q>,
    pub phi: HerbrandFn,
}

pub fn summarize(f: &RamFiltration) -> HerbrandSummary {
    HerbrandSummary {
        upper_breaks: f.upper_breaks(),
        phi: phi(f),
    }
}

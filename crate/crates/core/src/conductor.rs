//! Swan and conductor exponents of the Jacobian from a ramification
//! filtration and the invariant dimensions `dim Jac[l]^{G_i}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::padic::valuation::{as_string, fmt_q, qi, Q};
use crate::ramification::RamFiltration;

#[derive(Clone, Debug, Serialize)]
pub struct ConductorInput {
    pub filtration: RamFiltration,
    pub genus: u64,
    /// Subgroup order -> `dim Jac[l]^H`.
    pub fixed_dims: BTreeMap<u64, u64>,
}

/// `dim Jac(C)[l]^H = 2 g(C/H)` for `H` of order prime to `l`.
pub fn guralnick_dim(quotient_genus: u64) -> u64 {
    2 * quotient_genus
}

impl ConductorInput {
    pub fn new(
        filtration: RamFiltration,
        genus: u64,
        fixed_dims: BTreeMap<u64, u64>,
    ) -> Result<Self> {
        let input = ConductorInput {
            filtration,
            genus,
            fixed_dims,
        };
        input.validate()?;
        Ok(input)
    }

    /// The curve's data: every nontrivial `G_i` contains `Z(G)` and the
    /// quotient by `Z(G)` is a projective line, so all those invariants vanish.
    pub fn for_curve(filtration: RamFiltration, genus: u64) -> Result<Self> {
        let mut dims = BTreeMap::from([(1, 2 * genus)]);
        for s in &filtration.segments {
            if s.order > 1 {
                dims.insert(s.order, guralnick_dim(0));
            }
        }
        ConductorInput::new(filtration, genus, dims)
    }

    fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        match self.fixed_dims.get(&1) {
            Some(&d) if d == 2 * self.genus => {}
            other => problems.push(format!(
                "dim of the trivial subgroup's invariants is {other:?}, expected 2g = {}",
                2 * self.genus
            )),
        }
        for s in &self.filtration.segments {
            if !self.fixed_dims.contains_key(&s.order) {
                problems.push(format!(
                    "no invariant dimension for the subgroup of order {}",
                    s.order
                ));
            }
        }
        let dims: Vec<(&u64, &u64)> = self.fixed_dims.iter().collect();
        for w in dims.windows(2) {
            // larger subgroups fix less
            if w[1].1 > w[0].1 {
                problems.push(format!(
                    "dimension grows from order {} to order {}",
                    w[0].0, w[1].0
                ));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::ConstraintViolation(problems))
        }
    }

    fn codim(&self, order: u64) -> u64 {
        2 * self.genus - self.fixed_dims[&order]
    }

    /// `sum_{i >= 1} |G_i|/|G_0| dim(A[l] / A[l]^{G_i})`, as a rational.
    pub fn swan_rational(&self) -> Q {
        let g0 = self.filtration.group_order() as i64;
        self.filtration
            .segments
            .iter()
            .filter(|s| s.to >= 1)
            .map(|s| {
                let count = (s.to - s.from.max(1) + 1) as i64;
                Q::new(s.order as i64 * self.codim(s.order) as i64 * count, g0)
            })
            .sum()
    }

    pub fn epsilon(&self) -> u64 {
        match self.filtration.segments.first() {
            Some(s) => self.codim(s.order),
            None => 0,
        }
    }
}

pub fn swan(input: &ConductorInput) -> Result<u64> {
    let s = input.swan_rational();
    if !s.is_integer() || s < qi(0) {
        return Err(Error::NonIntegralSwan(fmt_q(&s)));
    }
    Ok(s.to_integer() as u64)
}

pub fn conductor_exponent(input: &ConductorInput) -> Result<u64> {
    Ok(input.epsilon() + swan(input)?)
}

/// Filtration over the maximal unramified base: `G_0` grows by the tame
/// index `tame`, the wild groups keep their lower indices.
pub fn over_unramified_base(f: &RamFiltration, tame: u64) -> Result<RamFiltration> {
    let mut segs = Vec::new();
    for s in &f.segments {
        if s.from == 0 {
            segs.push((0, 0, s.order * tame));
            if s.to >= 1 {
                segs.push((1, s.to, s.order));
            }
        } else {
            segs.push((s.from, s.to, s.order));
        }
    }
    RamFiltration::new(f.p, &segs)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConductorReport {
    pub genus: u64,
    pub epsilon: u64,
    pub swan: u64,
    pub conductor: u64,
    /// Tame index `[K : Q_p^ur] = (p-1)(q+1)`.
    pub tame_index: u64,
    pub swan_base: u64,
    pub conductor_base: u64,
    #[serde(with = "as_string")]
    pub swan_rational_base: Q,
}

/// Conductor data of the Jacobian for the filtration of `Gal(M/K)`.
pub fn jacobian_conductors(p: u64, n: u32, filtration: &RamFiltration) -> Result<ConductorReport> {
    let q = p.pow(n);
    let genus = crate::special_fiber::genus_as(p, n);
    let input = ConductorInput::for_curve(filtration.clone(), genus)?;
    let tame_index = (p - 1) * (q + 1);
    let base = ConductorInput::for_curve(over_unramified_base(filtration, tame_index)?, genus)?;
    Ok(ConductorReport {
        genus,
        epsilon: input.epsilon(),
        swan: swan(&input)?,
        conductor: conductor_exponent(&input)?,
        tame_index,
        swan_base: swan(&base)?,
        conductor_base: conductor_exponent(&base)?,
        swan_rational_base: base.swan_rational(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramification::shape_with_break;

    #[test]
    fn maximal_shape_conductors() {
        let r = jacobian_conductors(2, 2, &shape_with_break(2, 2, 5).unwrap()).unwrap();
        assert_eq!((r.epsilon, r.swan, r.conductor), (4, 5, 9));
        assert_eq!(r.swan_base, 1);
        let r0 = jacobian_conductors(2, 1, &shape_with_break(2, 1, 3).unwrap()).unwrap();
        assert_eq!(
            (r0.epsilon, r0.swan, r0.conductor, r0.swan_base),
            (2, 3, 5, 1)
        );
        let r3 = jacobian_conductors(2, 3, &shape_with_break(2, 3, 9).unwrap()).unwrap();
        assert_eq!((r3.conductor, r3.swan_base), (17, 1));
    }

    #[test]
    fn dims_and_trivial_cases() {
        assert_eq!(guralnick_dim(0), 0);
        assert_eq!(guralnick_dim(2), 4);
        let tame = RamFiltration::new(2, &[(0, 0, 3)]).unwrap();
        let input = ConductorInput::new(tame, 2, BTreeMap::from([(1, 4), (3, 0)])).unwrap();
        assert_eq!(swan(&input).unwrap(), 0);
        assert_eq!(conductor_exponent(&input).unwrap(), 4);
        let good =
            ConductorInput::new(RamFiltration::trivial(2), 2, BTreeMap::from([(1, 4)])).unwrap();
        assert_eq!(conductor_exponent(&good).unwrap(), 0);
    }

    #[test]
    fn non_integral_and_missing() {
        let f = RamFiltration::new(2, &[(0, 1, 4), (2, 2, 2)]).unwrap();
        let bad =
            ConductorInput::new(f.clone(), 1, BTreeMap::from([(1, 2), (2, 1), (4, 0)])).unwrap();
        assert!(matches!(swan(&bad), Err(Error::NonIntegralSwan(_))));
        assert!(ConductorInput::new(f, 1, BTreeMap::from([(1, 2)])).is_err());
    }
}

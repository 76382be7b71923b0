//! The special fiber `w^p - w = sum_k u_k t^(1+p^k) + t^(1+q)` over finite
//! fields: translations that prolong, the resulting extra-special group, and
//! its genus and ramification data at `t = infinity`.

mod field;
mod group;

use std::collections::HashMap;

use serde::Serialize;

pub use field::{fp_kernel, is_irreducible, FiniteField, Fq};
pub use group::GroupTable;

use crate::error::{Error, Result};
use crate::ramification::RamFiltration;

/// Largest residue degree tried when looking for a field over which every
/// prolonging translation is rational.
pub const MAX_FIELD_DEGREE: usize = 64;

/// `sum_i c_i X^(p^i)`.
#[derive(Clone, Debug)]
pub struct AdditivePoly {
    pub coeffs: Vec<Fq>,
}

impl AdditivePoly {
    pub fn eval(&self, f: &FiniteField, x: &Fq) -> Fq {
        let mut acc = f.zero();
        let mut xp = x.clone();
        for c in &self.coeffs {
            acc = f.add(&acc, &f.mul(c, &xp));
            xp = f.frob(&xp, 1);
        }
        acc
    }

    pub fn degree(&self, p: u64) -> u64 {
        p.pow(self.coeffs.len().saturating_sub(1) as u32)
    }

    /// Roots in the field, as an `F_p`-basis, through the kernel of the
    /// `F_p`-linear map `x -> P(x)`.
    pub fn kernel_basis(&self, f: &FiniteField) -> Vec<Fq> {
        let cols: Vec<Vec<u32>> = f.basis().iter().map(|b| self.eval(f, b).0).collect();
        fp_kernel(&cols, f.p)
            .into_iter()
            .map(|v| {
                f.basis()
                    .iter()
                    .zip(&v)
                    .fold(f.zero(), |acc, (b, &c)| f.add(&acc, &f.scale(b, c)))
            })
            .collect()
    }
}

/// All `F_p`-combinations of `basis`.
pub fn span(f: &FiniteField, basis: &[Fq]) -> Vec<Fq> {
    let mut out = vec![f.zero()];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * f.p as usize);
        for c in 0..f.p {
            let cb = f.scale(b, c);
            next.extend(out.iter().map(|x| f.add(x, &cb)));
        }
        out = next;
    }
    out
}

/// The special fiber `A_u`: `p`, `n` and the reductions `u_k mod p`.
#[derive(Clone, Debug, Serialize)]
pub struct SpecialCurve {
    pub p: u64,
    pub n: u32,
    pub u_bar: Vec<u32>,
}

impl SpecialCurve {
    pub fn new(p: u64, n: u32, u: &[i64]) -> Result<Self> {
        if u.len() != n as usize {
            return Err(Error::InvalidInput(format!(
                "expected {n} coefficients u_k, got {}",
                u.len()
            )));
        }
        Ok(SpecialCurve {
            p,
            n,
            u_bar: u.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect(),
        })
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// `a^(q^2) + (2 u_0 a)^q + sum_{k>=1} (u_k^q a^(q p^k) + (u_k a)^(q/p^k)) + a`.
    pub fn prolongation_poly(&self, f: &FiniteField) -> AdditivePoly {
        let n = self.n as usize;
        let mut coeffs = vec![f.zero(); 2 * n + 1];
        coeffs[0] = f.add(&coeffs[0], &f.one());
        coeffs[2 * n] = f.add(&coeffs[2 * n], &f.one());
        // u_k lies in F_p, so every Frobenius twist of it is itself
        coeffs[n] = f.add(&coeffs[n], &f.from_fp(2 * self.u_bar[0] as i64));
        for k in 1..n {
            let uk = f.from_fp(self.u_bar[k] as i64);
            coeffs[n + k] = f.add(&coeffs[n + k], &uk);
            coeffs[n - k] = f.add(&coeffs[n - k], &uk);
        }
        AdditivePoly { coeffs }
    }

    /// `t R(t)` evaluated, for cross-checks.
    pub fn rhs(&self, f: &FiniteField, t: &Fq) -> Fq {
        let mut acc = f.pow(t, 1 + self.q() as u128);
        for (k, &uk) in self.u_bar.iter().enumerate() {
            let term = f.pow(t, 1 + self.p.pow(k as u32) as u128);
            acc = f.add(&acc, &f.scale(&term, uk));
        }
        acc
    }

    /// `P_a` (coefficients of `t^(p^j)`, `j < n`) and `c_a` with
    /// `P_a^p - P_a = g(t+a) - g(t) - c_a` and `P_a(0) = 0`.
    pub fn translation_cocycle(&self, f: &FiniteField, a: &Fq) -> Result<(Vec<Fq>, Fq)> {
        let n = self.n as usize;
        let mut delta = vec![f.zero(); n + 1];
        let mut constant = f.pow(a, 1 + self.q() as u128);
        delta[n] = f.add(&delta[n], a);
        delta[0] = f.add(&delta[0], &f.frob(a, n as i64));
        for (k, &uk) in self.u_bar.iter().enumerate() {
            let uk_a = f.scale(a, uk);
            delta[k] = f.add(&delta[k], &uk_a);
            let a_pk = f.frob(a, k as i64);
            delta[0] = f.add(&delta[0], &f.scale(&a_pk, uk));
            constant = f.add(&constant, &f.scale(&f.mul(a, &a_pk), uk));
        }
        let mut beta = vec![f.zero(); n];
        for j in (1..=n).rev() {
            // beta t^(p^(j-1)) absorbs delta_j t^(p^j) modulo the image of
            // Frobenius minus identity
            beta[j - 1] = f.frob(&delta[j], -1);
            delta[j - 1] = f.add(&delta[j - 1], &beta[j - 1]);
        }
        if !f.is_zero(&delta[0]) {
            return Err(Error::ModelFailure(format!(
                "translation by {a:?} leaves a residual t-coefficient {:?}",
                delta[0]
            )));
        }
        Ok((beta, constant))
    }

    pub fn genus(&self) -> u64 {
        genus_as(self.p, self.n)
    }
}

/// `g(w^p - w = t R(t))` with `deg tR = 1 + q`: `(p-1) q / 2`.
pub fn genus_as(p: u64, n: u32) -> u64 {
    (p - 1) * p.pow(n) / 2
}

/// Roots of the prolongation equation in `F_{p^m}`.
#[derive(Clone, Debug)]
pub struct ProlongationSpace {
    pub field: FiniteField,
    pub basis: Vec<Fq>,
    pub elements: Vec<Fq>,
}

impl ProlongationSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Closed under addition and `F_p`-scaling.
    pub fn is_subspace(&self) -> bool {
        let f = &self.field;
        let set: std::collections::HashSet<&Fq> = self.elements.iter().collect();
        self.elements.iter().all(|a| {
            (0..f.p).all(|c| set.contains(&f.scale(a, c)))
                && self.elements.iter().all(|b| set.contains(&f.add(a, b)))
        })
    }
}

pub fn prolongation_solutions(curve: &SpecialCurve, m: usize) -> Result<ProlongationSpace> {
    let field = FiniteField::new(curve.p as u32, m)?;
    let poly = curve.prolongation_poly(&field);
    let basis = poly.kernel_basis(&field);
    let elements = span(&field, &basis);
    Ok(ProlongationSpace {
        field,
        basis,
        elements,
    })
}

/// Exhaustive oracle for small fields.
pub fn prolongation_solutions_brute(curve: &SpecialCurve, m: usize) -> Result<Vec<Fq>> {
    let field = FiniteField::new(curve.p as u32, m)?;
    let poly = curve.prolongation_poly(&field);
    Ok(field
        .elements()
        .filter(|a| field.is_zero(&poly.eval(&field, a)))
        .collect())
}

/// A root of `z^p - z = c`, if one is rational.
pub fn artin_schreier_root(f: &FiniteField, c: &Fq) -> Option<Fq> {
    let basis = f.basis();
    let mut cols: Vec<Vec<u32>> = basis.iter().map(|b| f.sub(&f.frob(b, 1), b).0).collect();
    cols.push(f.neg(c).0);
    let kernel = fp_kernel(&cols, f.p);
    let m = basis.len();
    let v = kernel.into_iter().find(|v| v[m] != 0)?;
    // scale so the last coordinate is 1
    let inv = (1..f.p).find(|&x| (x as u64 * v[m] as u64) % f.p as u64 == 1)?;
    let z = basis.iter().zip(&v).fold(f.zero(), |acc, (b, &c)| {
        f.add(
            &acc,
            &f.scale(b, (c as u64 * inv as u64 % f.p as u64) as u32),
        )
    });
    Some(z)
}

/// `G` realized as automorphisms `(t, w) -> (t + a, w + P_a(t) + z)`.
#[derive(Clone, Debug)]
pub struct ExtraSpecialModel {
    pub curve: SpecialCurve,
    pub field: FiniteField,
    pub translations: Vec<Fq>,
    /// `(a, z)` pairs.
    pub elements: Vec<(Fq, Fq)>,
    pub table: GroupTable,
    pub center: Vec<usize>,
    pub derived: Vec<usize>,
    pub frattini: Vec<usize>,
    /// Abelian `J ⊇ Z(G)` with `|J / Z(G)| = q`.
    pub j: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModelSummary {
    pub field_degree: usize,
    pub translations: usize,
    pub order: usize,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub j_order: usize,
    pub center_equals_derived_equals_frattini: bool,
    pub quotient_elementary_abelian: bool,
    pub group_axioms: bool,
    /// `D8` / `Q8` for order 8.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub small_group: Option<String>,
}

impl ExtraSpecialModel {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn summary(&self, check_axioms: bool) -> ModelSummary {
        let p = self.curve.p as usize;
        let t = &self.table;
        let z = &self.center;
        let quotient_ea = (0..t.order()).all(|g| z.contains(&t.power(g, p)))
            && self.derived.iter().all(|x| z.contains(x));
        let small_group = (self.order() == 8).then(|| {
            let order4 = (0..8).filter(|&g| t.element_order(g) == 4).count();
            match order4 {
                2 => "D8".to_string(),
                6 => "Q8".to_string(),
                k => format!("order-8 group with {k} elements of order 4"),
            }
        });
        ModelSummary {
            field_degree: self.field.m,
            translations: self.translations.len(),
            order: self.order(),
            center_order: z.len(),
            derived_order: self.derived.len(),
            frattini_order: self.frattini.len(),
            j_order: self.j.len(),
            center_equals_derived_equals_frattini: *z == self.derived && *z == self.frattini,
            quotient_elementary_abelian: quotient_ea,
            group_axioms: !check_axioms || t.is_group(),
            small_group,
        }
    }

    /// `z` with `[(a, *), (b, *)] = (0, z)`: `P_a(b) - P_b(a)`.
    pub fn pairing(&self, a: &Fq, b: &Fq) -> Result<Fq> {
        let f = &self.field;
        let (pa, _) = self.curve.translation_cocycle(f, a)?;
        let (pb, _) = self.curve.translation_cocycle(f, b)?;
        Ok(f.sub(&eval_p(f, &pa, b), &eval_p(f, &pb, a)))
    }
}

fn eval_p(f: &FiniteField, beta: &[Fq], t: &Fq) -> Fq {
    AdditivePoly {
        coeffs: beta.to_vec(),
    }
    .eval(f, t)
}

/// Smallest `m` for which all `q^2` translations and every `z` are rational
/// over `F_{p^m}`.
pub fn splitting_degree(curve: &SpecialCurve) -> Result<usize> {
    let q2 = (curve.q() * curve.q()) as usize;
    for m in 1..=MAX_FIELD_DEGREE {
        let space = prolongation_solutions(curve, m)?;
        if space.elements.len() != q2 {
            continue;
        }
        let f = &space.field;
        let all_rational = space.basis.iter().chain(space.elements.iter()).all(|a| {
            curve
                .translation_cocycle(f, a)
                .map(|(_, c)| f.trace(&c) == 0)
                .unwrap_or(false)
        });
        if all_rational {
            return Ok(m);
        }
    }
    Err(Error::ModelFailure(format!(
        "translations not split over F_{}^m for m <= {MAX_FIELD_DEGREE}",
        curve.p
    )))
}

pub fn build_extraspecial(curve: &SpecialCurve, m: Option<usize>) -> Result<ExtraSpecialModel> {
    let m = match m {
        Some(m) => m,
        None => splitting_degree(curve)?,
    };
    let space = prolongation_solutions(curve, m)?;
    let f = space.field.clone();
    let q2 = (curve.q() * curve.q()) as usize;
    if space.elements.len() != q2 {
        return Err(Error::ModelFailure(format!(
            "only {} of the {q2} translations are rational over F_{}^{m}",
            space.elements.len(),
            curve.p
        )));
    }
    let mut cocycles = HashMap::new();
    let mut elements = Vec::new();
    for a in &space.elements {
        let (beta, c) = curve.translation_cocycle(&f, a)?;
        let z0 = artin_schreier_root(&f, &c).ok_or_else(|| {
            Error::ModelFailure(format!("z^p - z = c_a has no rational root for a = {a:?}"))
        })?;
        for k in 0..f.p {
            elements.push((a.clone(), f.add(&z0, &f.from_fp(k as i64))));
        }
        cocycles.insert(a.clone(), beta);
    }
    let index: HashMap<(Fq, Fq), usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut mul = vec![vec![0usize; elements.len()]; elements.len()];
    for (i, (a, z)) in elements.iter().enumerate() {
        for (j, (b, w)) in elements.iter().enumerate() {
            // apply (b, w) first, then (a, z)
            let s = f.add(a, b);
            let zz = f.add(&f.add(z, w), &eval_p(&f, &cocycles[a], b));
            mul[i][j] = *index.get(&(s, zz)).ok_or_else(|| {
                Error::ModelFailure("composition left the set of prolongations".into())
            })?;
        }
    }
    let identity = index[&(f.zero(), f.zero())];
    let table = GroupTable { mul, identity };
    let center = table.center();
    let derived = table.derived_subgroup();
    let frattini = table.frattini_p_group(curve.p as usize);
    let target = center.len() * curve.q() as usize;
    let j = table
        .abelian_extension_of(&center, target)
        .ok_or_else(|| Error::ModelFailure("no abelian J with |J/Z| = q".into()))?;
    Ok(ExtraSpecialModel {
        curve: curve.clone(),
        field: f,
        translations: space.elements,
        elements,
        table,
        center,
        derived,
        frattini,
        j,
    })
}

/// `G_{inf,0} = G_{inf,1}` of order `pq^2`, then `Z` of order `p` on
/// indices `2 ..= 1+q`.
pub fn special_filtration(p: u64, n: u32) -> Result<RamFiltration> {
    crate::ramification::shape_with_break(p, n, (1 + p.pow(n)) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genera() {
        assert_eq!(genus_as(2, 2), 2);
        assert_eq!(genus_as(2, 1), 1);
        assert_eq!(genus_as(3, 1), 3);
    }

    #[test]
    fn zero_residue_translations() {
        let c = SpecialCurve::new(2, 2, &[0, 0]).unwrap();
        let s = prolongation_solutions(&c, 4).unwrap();
        assert_eq!(s.elements.len(), 16);
        assert!(s.is_subspace());
    }

    #[test]
    fn kernel_matches_brute_force() {
        for u in [[1i64, 1], [0, 1], [1, 0]] {
            let c = SpecialCurve::new(2, 2, &u).unwrap();
            for m in 1..=8 {
                let mut k = prolongation_solutions(&c, m).unwrap().elements;
                let mut b = prolongation_solutions_brute(&c, m).unwrap();
                k.sort();
                b.sort();
                assert_eq!(k, b, "u = {u:?}, m = {m}");
                assert!(b.len().is_power_of_two() && b.len() <= 16);
            }
        }
    }

    #[test]
    fn cocycle_solves_artin_schreier() {
        let c = SpecialCurve::new(2, 2, &[1, 1]).unwrap();
        let m = splitting_degree(&c).unwrap();
        let f = FiniteField::new(2, m).unwrap();
        let v = prolongation_solutions(&c, m).unwrap();
        let t = f.generator();
        for a in &v.elements {
            let (beta, ca) = c.translation_cocycle(&f, a).unwrap();
            let pt = eval_p(&f, &beta, &t);
            let lhs = f.sub(&f.frob(&pt, 1), &pt);
            let rhs = f.sub(&f.sub(&c.rhs(&f, &f.add(&t, a)), &c.rhs(&f, &t)), &ca);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn order_eight() {
        let c = SpecialCurve::new(2, 1, &[0]).unwrap();
        let g = build_extraspecial(&c, None).unwrap();
        let s = g.summary(true);
        assert_eq!(s.order, 8);
        assert!(s.group_axioms && s.center_equals_derived_equals_frattini);
        assert!(matches!(s.small_group.as_deref(), Some("D8") | Some("Q8")));
    }

    #[test]
    fn filtration_shapes() {
        assert_eq!(
            special_filtration(2, 2).unwrap().triples(),
            vec![(0, 1, 32), (2, 5, 2)]
        );
        assert_eq!(
            special_filtration(3, 1).unwrap().triples(),
            vec![(0, 1, 27), (2, 4, 3)]
        );
    }
}

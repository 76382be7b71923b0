//! Finite groups as Cayley tables, with the handful of subgroup
//! computations the automorphism model needs.

use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct GroupTable {
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.op(a, b) == self.identity)
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c))))
        })
    }

    /// Identity, inverses and associativity.
    pub fn is_group(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| self.op(self.identity, a) == a && self.op(a, self.identity) == a)
            && (0..n).all(|a| self.inverse(a).is_some())
            && self.is_associative()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |x, _| self.op(x, a))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let (ia, ib) = (self.inverse(a).unwrap(), self.inverse(b).unwrap());
        self.op(self.op(ia, ib), self.op(a, b))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.op(a, b) == self.op(b, a)
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut frontier: Vec<usize> = gens.into_iter().collect();
        let gens = frontier.clone();
        while let Some(x) = frontier.pop() {
            if set.insert(x) {
                frontier.extend(gens.iter().map(|&g| self.op(x, g)));
            }
        }
        // products of any two members stay inside for a finite group once
        // closed under right multiplication by generators
        set.into_iter().collect()
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&a| (0..n).all(|b| self.commutes(a, b)))
            .collect()
    }

    pub fn derived_subgroup(&self) -> Vec<usize> {
        let n = self.order();
        let comms: BTreeSet<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.closure(comms)
    }

    /// `Phi(G) = G^p [G, G]` for a `p`-group.
    pub fn frattini_p_group(&self, p: usize) -> Vec<usize> {
        let n = self.order();
        let mut gens: BTreeSet<usize> = (0..n).map(|a| self.power(a, p)).collect();
        gens.extend(self.derived_subgroup());
        self.closure(gens)
    }

    pub fn is_abelian_subset(&self, s: &[usize]) -> bool {
        s.iter().all(|&a| s.iter().all(|&b| self.commutes(a, b)))
    }

    /// Greedily enlarges `start` by elements centralizing everything so far,
    /// until it has `target` elements.
    pub fn abelian_extension_of(&self, start: &[usize], target: usize) -> Option<Vec<usize>> {
        let mut j = self.closure(start.iter().copied());
        while j.len() < target {
            let x = (0..self.order()).find(|&x| {
                j.binary_search(&x).is_err() && j.iter().all(|&y| self.commutes(x, y))
            })?;
            j = self.closure(j.iter().copied().chain([x]));
        }
        (j.len() == target && self.is_abelian_subset(&j)).then_some(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable {
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            identity: 0,
        }
    }

    #[test]
    fn cyclic_groups() {
        let g = cyclic(8);
        assert!(g.is_group());
        assert_eq!(g.center().len(), 8);
        assert_eq!(g.derived_subgroup(), vec![0]);
        assert_eq!(g.frattini_p_group(2).len(), 4);
        assert_eq!(g.closure([2]), vec![0, 2, 4, 6]);
        assert_eq!(g.element_order(6), 4);
    }
}

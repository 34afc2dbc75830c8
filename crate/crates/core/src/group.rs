//! Fully enumerated finite groups.
//!
//! A [`FiniteGroup`] is closed from generators by breadth-first search and
//! stores its elements in discovery order, index 0 being the identity.
//! Products are computed on elements and looked up by hash, so no Cayley
//! table is materialized; groups of a few hundred thousand elements fit.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::error::{Error, Result};

/// Composition follows the right-action convention: `a.mul(b)` applies `a`
/// first, then `b`.
pub trait GroupElement: Clone + Eq + Hash {
    fn mul(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

#[derive(Clone)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, u32>,
    inverses: Vec<u32>,
    generators: Vec<u32>,
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Closes `generators` under right multiplication.
    ///
    /// Fails with [`Error::CapExceeded`] as soon as more than `cap` elements
    /// are found.
    pub fn close(identity: E, generators: &[E], cap: usize) -> Result<Self> {
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in generators {
                let y = x.mul(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len() as u32);
                    elements.push(y);
                }
            }
        }
        let inverses = elements
            .iter()
            .map(|e| *index.get(&e.inverse()).expect("finite group closed under inverses"))
            .collect();
        let mut gens: Vec<u32> = generators.iter().map(|g| index[g]).collect();
        gens.dedup();
        Ok(FiniteGroup {
            elements,
            index,
            inverses,
            generators: gens,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).map(|&i| i as usize)
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        self.generators.iter().map(|&g| g as usize)
    }

    pub fn generator_elements(&self) -> Vec<E> {
        self.generators().map(|g| self.elements[g].clone()).collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let c = self.elements[a].mul(&self.elements[b]);
        self.index[&c] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g⁻¹ x g`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        let e = self.elements[self.inv(g)].mul(&self.elements[x]).mul(&self.elements[g]);
        self.index[&e] as usize
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let e = self.elements[self.inv(x)]
            .mul(&self.elements[self.inv(y)])
            .mul(&self.elements[x])
            .mul(&self.elements[y]);
        self.index[&e] as usize
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = self.elements[x].clone();
        let id = &self.elements[0];
        while y != *id {
            y = y.mul(&self.elements[x]);
            k += 1;
        }
        k
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        let mut orders: Vec<usize> = (0..self.order()).map(|x| self.element_order(x)).collect();
        orders.sort_unstable();
        orders.dedup();
        orders.into_iter().fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<usize> = self.generators().collect();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
        }
        mask
    }

    /// A small generating set for the subgroup `mask`, chosen greedily in
    /// index order.
    pub fn generating_set(&self, mask: &[bool]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order()];
        span[0] = true;
        for x in 0..self.order() {
            if mask[x] && !span[x] {
                gens.push(x);
                span = self.subgroup_closure(&gens);
            }
        }
        gens
    }

    /// Normal closure of `gens` inside the subgroup generated by `ambient`.
    pub fn normal_closure(&self, gens: &[usize], ambient: &[usize]) -> Vec<bool> {
        let mut current: Vec<usize> = gens.to_vec();
        let mut mask = self.subgroup_closure(&current);
        loop {
            let mut added = false;
            let snapshot = current.clone();
            for &s in &snapshot {
                for &a in ambient {
                    let c = self.conjugate(s, a);
                    if !mask[c] {
                        current.push(c);
                        mask = self.subgroup_closure(&current);
                        added = true;
                    }
                }
            }
            if !added {
                return mask;
            }
        }
    }

    /// Derived subgroup of the subgroup generated by `gens`, as generators and
    /// membership mask.
    pub fn derived_subgroup(&self, gens: &[usize]) -> (Vec<usize>, Vec<bool>) {
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        let mask = self.normal_closure(&comms, gens);
        let new_gens = self.generating_set(&mask);
        (new_gens, mask)
    }

    /// Orders of the terms of the derived series, ending at the first repeat.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self.generators().collect();
        let mut orders = vec![self.order()];
        loop {
            let (next, mask) = self.derived_subgroup(&gens);
            let size = mask.iter().filter(|&&m| m).count();
            if size == *orders.last().unwrap() {
                return orders;
            }
            orders.push(size);
            if size == 1 {
                return orders;
            }
            gens = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        *self.derived_series_orders().last().unwrap() == 1
    }

    pub fn derived_subgroup_order(&self) -> usize {
        let gens: Vec<usize> = self.generators().collect();
        let (_, mask) = self.derived_subgroup(&gens);
        mask.iter().filter(|&&m| m).count()
    }
}

impl<E: fmt::Debug> fmt::Debug for FiniteGroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Permutation of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    /// Builds a permutation of degree `n` from 1-based disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidInput(format!("point outside 1..={n} in cycle {cycle:?}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }
}

impl GroupElement for Permutation {
    fn mul(&self, other: &Self) -> Self {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation { images: inv }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

//! Ideals of a finite ring and the structures derived from the full lattice:
//! annihilators, socle, nilradical, minimal/maximal/prime ideals.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::ring::{FiniteRing, RingId};

pub const DEFAULT_LATTICE_CAP: usize = 100_000;

/// An ideal, stored as its membership vector over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: RingId,
    members: BitSet,
}

impl Ideal {
    pub fn zero(ring: &FiniteRing) -> Ideal {
        let mut members = BitSet::new(ring.order());
        members.insert(0);
        Ideal {
            ring: ring.id(),
            members,
        }
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        Ideal {
            ring: ring.id(),
            members: BitSet::full(ring.order()),
        }
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn size(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.size() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size() == self.members.len()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

fn same_ring(ring: &FiniteRing, ideals: &[&Ideal]) -> Result<()> {
    if ideals.iter().all(|i| i.ring == ring.id()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `Ra`. With an identity, `{ra : r in R}` is already closed under addition.
pub fn principal_ideal(ring: &FiniteRing, a: usize) -> Ideal {
    let mut members = BitSet::new(ring.order());
    for r in 0..ring.order() {
        members.insert(ring.mul(r, a));
    }
    Ideal {
        ring: ring.id(),
        members,
    }
}

/// `I + J`, built coset by coset.
pub fn ideal_sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, &[i, j])?;
    Ok(Ideal {
        ring: ring.id(),
        members: subgroup_sum(ring, &i.members, &j.members),
    })
}

fn subgroup_sum(ring: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    if b.is_subset(a) {
        return a.clone();
    }
    if a.is_subset(b) {
        return b.clone();
    }
    let base: Vec<usize> = a.iter().collect();
    let mut out = a.clone();
    for y in b.iter() {
        if out.contains(y) {
            continue;
        }
        for &x in &base {
            out.insert(ring.add(x, y));
        }
    }
    out
}

pub fn ideal_intersection(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, &[i, j])?;
    Ok(Ideal {
        ring: ring.id(),
        members: i.members.intersection(&j.members),
    })
}

/// `IJ = sum over generators g of I of gJ`; each `gJ` is itself an ideal.
pub fn ideal_product(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(ring, &[i, j])?;
    let mut acc = BitSet::new(ring.order());
    acc.insert(0);
    for g in generators(ring, i) {
        let mut gj = BitSet::new(ring.order());
        for b in j.members.iter() {
            gj.insert(ring.mul(g, b));
        }
        acc = subgroup_sum(ring, &acc, &gj);
    }
    Ok(Ideal {
        ring: ring.id(),
        members: acc,
    })
}

/// A generating set picked greedily in element order.
pub fn generators(ring: &FiniteRing, i: &Ideal) -> Vec<usize> {
    let mut span = BitSet::new(ring.order());
    span.insert(0);
    let mut gens = Vec::new();
    for a in i.members.iter() {
        if span.contains(a) {
            continue;
        }
        span = subgroup_sum(ring, &span, &principal_ideal(ring, a).members);
        gens.push(a);
        if span.count() == i.size() {
            break;
        }
    }
    gens
}

/// `Ann(I) = {r : rI = 0}`.
pub fn annihilator(ring: &FiniteRing, i: &Ideal) -> Ideal {
    let gens = generators(ring, i);
    let mut members = BitSet::new(ring.order());
    for r in 0..ring.order() {
        if gens.iter().all(|&g| ring.mul(r, g) == 0) {
            members.insert(r);
        }
    }
    Ideal {
        ring: ring.id(),
        members,
    }
}

/// Decides `I^k = (0)` for some `k` by iterating powers until they vanish
/// or stop shrinking.
pub fn is_nilpotent_ideal(ring: &FiniteRing, i: &Ideal) -> Result<bool> {
    same_ring(ring, &[i])?;
    let mut power = i.clone();
    loop {
        if power.is_zero() {
            return Ok(true);
        }
        let next = ideal_product(ring, &power, i)?;
        if next == power {
            return Ok(false);
        }
        power = next;
    }
}

/// `Z(R) = {r : rs = 0 for some s != 0}`.
pub fn zero_divisors(ring: &FiniteRing) -> BitSet {
    let n = ring.order();
    let mut z = BitSet::new(n);
    for r in 0..n {
        if n == 1 || (1..n).any(|s| ring.mul(r, s) == 0) {
            z.insert(r);
        }
    }
    z
}

/// Primality on a coset transversal: `P` proper and no product of two
/// non-members lands in `P`.
fn is_prime(ring: &FiniteRing, p: &Ideal) -> bool {
    if p.is_whole() {
        return false;
    }
    let mut covered = p.members.clone();
    let mut reps = Vec::new();
    let base: Vec<usize> = p.members.iter().collect();
    for a in 0..ring.order() {
        if covered.contains(a) {
            continue;
        }
        reps.push(a);
        for &x in &base {
            covered.insert(ring.add(a, x));
        }
    }
    for (k, &a) in reps.iter().enumerate() {
        for &b in &reps[k..] {
            if p.contains(ring.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// The complete ideal lattice of a ring plus its distinguished members.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring: RingId,
    ideals: Vec<Ideal>,
    index: HashMap<BitSet, usize>,
    pub zero_id: usize,
    pub unit_id: usize,
    pub minimal_ideals: Vec<usize>,
    pub maximal_ideals: Vec<usize>,
    pub min_primes: Vec<usize>,
    pub primes: Vec<usize>,
    pub socle: usize,
    pub nilradical: usize,
    /// Annihilator id of each ideal.
    pub annihilator: Vec<usize>,
    /// Nilpotency of each ideal, decided by iterated powers.
    pub nilpotent: Vec<bool>,
    /// Id of `Ra` for each element `a`.
    pub principal: Vec<usize>,
}

impl IdealLattice {
    pub fn enumerate(ring: &FiniteRing) -> Result<IdealLattice> {
        Self::enumerate_with_cap(ring, DEFAULT_LATTICE_CAP)
    }

    /// Closes the set of principal ideals under pairwise sums. Every ideal
    /// of a finite ring is a finite sum of principal ideals, so the fixpoint
    /// is the whole lattice.
    pub fn enumerate_with_cap(ring: &FiniteRing, cap: usize) -> Result<IdealLattice> {
        let n = ring.order();
        let mut found: Vec<BitSet> = Vec::new();
        let mut seen: HashMap<BitSet, usize> = HashMap::new();
        let mut principal_raw = vec![0usize; n];
        for (a, slot) in principal_raw.iter_mut().enumerate() {
            let members = principal_ideal(ring, a).members;
            let next = found.len();
            *slot = *seen.entry(members.clone()).or_insert_with(|| {
                found.push(members);
                next
            });
            if found.len() > cap {
                return Err(Error::LatticeCapExceeded { cap });
            }
        }
        let mut frontier = 0;
        while frontier < found.len() {
            let x = found[frontier].clone();
            for k in 0..frontier {
                let s = subgroup_sum(ring, &x, &found[k]);
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), found.len());
                    found.push(s);
                    if found.len() > cap {
                        return Err(Error::LatticeCapExceeded { cap });
                    }
                }
            }
            frontier += 1;
        }

        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| found[a].cmp(&found[b]));
        let mut remap = vec![0usize; found.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let ideals: Vec<Ideal> = order
            .iter()
            .map(|&old| Ideal {
                ring: ring.id(),
                members: found[old].clone(),
            })
            .collect();
        let index: HashMap<BitSet, usize> = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.members.clone(), k))
            .collect();
        let principal = principal_raw.iter().map(|&p| remap[p]).collect();

        let zero_id = 0;
        let unit_id = ideals.len() - 1;
        debug_assert!(ideals[zero_id].is_zero() && ideals[unit_id].is_whole());

        let mut lattice = IdealLattice {
            ring: ring.id(),
            ideals,
            index,
            zero_id,
            unit_id,
            minimal_ideals: Vec::new(),
            maximal_ideals: Vec::new(),
            min_primes: Vec::new(),
            primes: Vec::new(),
            socle: zero_id,
            nilradical: zero_id,
            annihilator: Vec::new(),
            nilpotent: Vec::new(),
            principal,
        };
        lattice.derive(ring)?;
        Ok(lattice)
    }

    fn derive(&mut self, ring: &FiniteRing) -> Result<()> {
        let count = self.ideals.len();
        let proper: Vec<usize> = (0..count).filter(|&k| k != self.unit_id).collect();
        let nonzero: Vec<usize> = (0..count).filter(|&k| k != self.zero_id).collect();

        self.minimal_ideals = nonzero
            .iter()
            .copied()
            .filter(|&k| {
                !nonzero
                    .iter()
                    .any(|&j| j != k && self.ideals[j].is_subset(&self.ideals[k]))
            })
            .collect();
        self.maximal_ideals = proper
            .iter()
            .copied()
            .filter(|&k| {
                !proper
                    .iter()
                    .any(|&j| j != k && self.ideals[k].is_subset(&self.ideals[j]))
            })
            .collect();
        self.primes = proper
            .iter()
            .copied()
            .filter(|&k| is_prime(ring, &self.ideals[k]))
            .collect();
        self.min_primes = self
            .primes
            .iter()
            .copied()
            .filter(|&k| {
                !self
                    .primes
                    .iter()
                    .any(|&j| j != k && self.ideals[j].is_subset(&self.ideals[k]))
            })
            .collect();

        let mut soc = Ideal::zero(ring);
        for &m in &self.minimal_ideals {
            soc = ideal_sum(ring, &soc, &self.ideals[m])?;
        }
        self.socle = self.id_of(&soc).expect("socle is an ideal");

        let nil = BitSet::from_iter_with_len(
            ring.order(),
            (0..ring.order()).filter(|&a| ring.is_nilpotent(a)),
        );
        self.nilradical = *self.index.get(&nil).expect("nilradical is an ideal");

        let mut anns = Vec::with_capacity(count);
        let mut nilpotent = Vec::with_capacity(count);
        for ideal in &self.ideals {
            let ann = annihilator(ring, ideal);
            anns.push(self.id_of(&ann).expect("annihilator is an ideal"));
            nilpotent.push(is_nilpotent_ideal(ring, ideal)?);
        }
        self.annihilator = anns;
        self.nilpotent = nilpotent;
        Ok(())
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, id: usize) -> &Ideal {
        &self.ideals[id]
    }

    pub fn id_of(&self, ideal: &Ideal) -> Option<usize> {
        if ideal.ring != self.ring {
            return None;
        }
        self.index.get(&ideal.members).copied()
    }

    pub fn socle_ideal(&self) -> &Ideal {
        &self.ideals[self.socle]
    }

    pub fn nilradical_ideal(&self) -> &Ideal {
        &self.ideals[self.nilradical]
    }

    pub fn is_reduced(&self) -> bool {
        self.nilradical == self.zero_id
    }

    /// Essentiality via the socle: every nonzero ideal of a finite ring
    /// contains a minimal ideal, so `I` is essential iff `Soc(R) ⊆ I`.
    pub fn is_essential(&self, id: usize) -> bool {
        self.ideals[self.socle].is_subset(&self.ideals[id])
    }

    /// Essentiality straight from the definition: `I` meets every nonzero ideal.
    pub fn is_essential_by_scan(&self, id: usize) -> bool {
        let i = &self.ideals[id];
        (0..self.ideals.len())
            .filter(|&j| j != self.zero_id)
            .all(|j| i.members.intersection_count(&self.ideals[j].members) > 1)
    }

    /// Id of `IJ`.
    pub fn product_id(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        let p = ideal_product(ring, &self.ideals[i], &self.ideals[j]).expect("same ring");
        self.id_of(&p).expect("product is an ideal")
    }

    pub fn sum_id(&self, ring: &FiniteRing, i: usize, j: usize) -> usize {
        let s = ideal_sum(ring, &self.ideals[i], &self.ideals[j]).expect("same ring");
        self.id_of(&s).expect("sum is an ideal")
    }

    pub fn intersection_id(&self, i: usize, j: usize) -> usize {
        let members = self.ideals[i].members.intersection(&self.ideals[j].members);
        self.index[&members]
    }

    pub fn contains(&self, outer: usize, inner: usize) -> bool {
        self.ideals[inner].is_subset(&self.ideals[outer])
    }

    /// Intersection of all essential ideals.
    pub fn essential_intersection(&self) -> usize {
        let mut acc = BitSet::full(self.ideals[0].members.len());
        for k in 0..self.ideals.len() {
            if self.is_essential_by_scan(k) {
                acc.intersect_with(&self.ideals[k].members);
            }
        }
        self.index[&acc]
    }

    /// Intersection of the minimal primes.
    pub fn min_prime_intersection(&self) -> usize {
        let mut acc = BitSet::full(self.ideals[0].members.len());
        for &p in &self.min_primes {
            acc.intersect_with(&self.ideals[p].members);
        }
        self.index[&acc]
    }

    /// A small generating set: repeatedly add the principal ideal that grows
    /// the span the most (ties to the smallest element).
    pub fn short_generators(&self, ring: &FiniteRing, id: usize) -> Vec<usize> {
        let target = &self.ideals[id];
        let mut span = self.zero_id;
        let mut gens = Vec::new();
        while span != id {
            let mut best: Option<(usize, usize, usize)> = None;
            for a in target.members.iter() {
                if self.ideals[span].contains(a) {
                    continue;
                }
                let p = self.principal[a];
                let grown = self.ideals[p].size();
                if best.is_none_or(|(_, size, _)| grown > size) {
                    best = Some((a, grown, p));
                }
            }
            let (a, _, p) = best.expect("span is a proper subideal");
            gens.push(a);
            span = self.sum_id(ring, span, p);
        }
        gens
    }

    /// Label such as `(6)` or `((1,0), (0,x))`.
    pub fn label(&self, ring: &FiniteRing, id: usize) -> String {
        if id == self.zero_id {
            return "(0)".into();
        }
        let gens: Vec<String> = self
            .short_generators(ring, id)
            .into_iter()
            .map(|g| ring.label(g))
            .collect();
        format!("({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, parse_ring_spec};

    fn setup(s: &str) -> (FiniteRing, IdealLattice) {
        let r = build_ring(&parse_ring_spec(s).unwrap()).unwrap();
        let l = IdealLattice::enumerate(&r).unwrap();
        (r, l)
    }

    fn multiples(n: usize, d: usize) -> BitSet {
        BitSet::from_iter_with_len(n, (0..n).filter(|x| x % d == 0))
    }

    fn id_of_divisor(l: &IdealLattice, n: usize, d: usize) -> usize {
        l.index[&multiples(n, d)]
    }

    #[test]
    fn principal_ideals() {
        let (r, _) = setup("Z/12");
        assert_eq!(principal_ideal(&r, 8).members, multiples(12, 4));
        assert!(principal_ideal(&r, 0).is_zero());
        let (f, _) = setup("GF(4)");
        assert!(principal_ideal(&f, 2).is_whole());
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(setup("Z/12").1.len(), 6);
        assert_eq!(setup("GF(9)").1.len(), 2);
        assert_eq!(setup("Z/2 x Z/2").1.len(), 4);
    }

    #[test]
    fn sum_product_intersection() {
        let (r, l) = setup("Z/12");
        let two = l.ideal(id_of_divisor(&l, 12, 2)).clone();
        let three = l.ideal(id_of_divisor(&l, 12, 3)).clone();
        let p = ideal_product(&r, &two, &three).unwrap();
        assert_eq!(p.members, multiples(12, 6));
        let whole = Ideal::whole(&r);
        assert_eq!(ideal_intersection(&r, &two, &whole).unwrap(), two);
        assert!(ideal_product(&r, &two, &Ideal::zero(&r)).unwrap().is_zero());
        assert!(ideal_sum(&r, &two, &three).unwrap().is_whole());
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let (r, _) = setup("Z/12");
        let (s, _) = setup("Z/12");
        let i = Ideal::whole(&r);
        let j = Ideal::whole(&s);
        assert_eq!(ideal_sum(&r, &i, &j), Err(Error::RingMismatch));
        assert_eq!(ideal_product(&r, &i, &j), Err(Error::RingMismatch));
        assert_eq!(ideal_intersection(&s, &i, &j), Err(Error::RingMismatch));
    }

    #[test]
    fn annihilators() {
        let (r, l) = setup("Z/12");
        let four = l.ideal(id_of_divisor(&l, 12, 4));
        assert_eq!(annihilator(&r, four).members, multiples(12, 3));
        assert!(annihilator(&r, &Ideal::whole(&r)).is_zero());
        assert!(annihilator(&r, &Ideal::zero(&r)).is_whole());
    }

    #[test]
    fn essentiality() {
        let (_, l) = setup("Z/12");
        assert_eq!(l.socle, id_of_divisor(&l, 12, 2));
        assert!(l.is_essential(id_of_divisor(&l, 12, 2)));
        assert!(l.is_essential(l.unit_id));
        assert!(!l.is_essential(id_of_divisor(&l, 12, 4)));
        for k in 0..l.len() {
            assert_eq!(l.is_essential(k), l.is_essential_by_scan(k));
        }
    }

    #[test]
    fn nilpotency() {
        let (r, l) = setup("Z/8");
        assert!(is_nilpotent_ideal(&r, l.ideal(id_of_divisor(&l, 8, 2))).unwrap());
        assert!(is_nilpotent_ideal(&r, &Ideal::zero(&r)).unwrap());
        let (r, l) = setup("Z/12");
        assert!(!is_nilpotent_ideal(&r, l.ideal(id_of_divisor(&l, 12, 4))).unwrap());
    }

    #[test]
    fn distinguished_ideals() {
        let (_, l) = setup("Z/36");
        assert_eq!(l.nilradical, id_of_divisor(&l, 36, 6));
        let mut max = vec![id_of_divisor(&l, 36, 2), id_of_divisor(&l, 36, 3)];
        max.sort();
        assert_eq!(l.maximal_ideals, max);
        assert_eq!(l.min_primes, l.maximal_ideals);
        let (_, l) = setup("Z/30");
        assert!(l.is_reduced());
        let (_, l) = setup("Z/8");
        assert_eq!(l.socle, id_of_divisor(&l, 8, 4));
        assert_eq!(l.essential_intersection(), l.socle);
    }

    #[test]
    fn zero_divisor_set() {
        let (r, _) = setup("Z/12");
        let z: Vec<usize> = zero_divisors(&r).iter().collect();
        assert_eq!(z, vec![0, 2, 3, 4, 6, 8, 9, 10]);
    }

    #[test]
    fn labels_use_short_generators() {
        let (r, l) = setup("Z/12");
        assert_eq!(l.label(&r, id_of_divisor(&l, 12, 6)), "(6)");
        assert_eq!(l.label(&r, l.unit_id), "(1)");
        assert_eq!(l.label(&r, l.zero_id), "(0)");
    }

    #[test]
    fn lattice_cap() {
        let r = build_ring(&parse_ring_spec("Z/2 x Z/2 x Z/2").unwrap()).unwrap();
        assert_eq!(
            IdealLattice::enumerate_with_cap(&r, 4).unwrap_err(),
            Error::LatticeCapExceeded { cap: 4 }
        );
    }
}

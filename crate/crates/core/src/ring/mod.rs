//! Finite commutative unital rings with canonically indexed elements.
//!
//! Every ring is a direct product of atoms `Z/n[x]/(f)` with `f` monic
//! (`Z/n` is the atom with `f = x`, `GF(p^k)` the atom over `Z/p` with the
//! first monic irreducible of degree `k`). Elements are addressed by a
//! mixed-radix index: the first factor is the most significant, and inside an
//! atom the coefficient of `x^i` carries weight `n^i`. Index 0 is zero.

mod spec;

pub use spec::{factorize, format_poly, parse_ring_spec, prime_power, RingSpec};

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 65536;
const FULL_TABLE_LIMIT: usize = 4096;
const ATOM_TABLE_LIMIT: usize = 256;

/// Identity of a constructed ring, used to reject mixing ideals across rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingId(u64);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone)]
struct Atom {
    base: u64,
    /// Monic modulus, constant term first.
    modulus: Vec<u64>,
    degree: usize,
    order: usize,
    plain: bool,
    table: Option<Vec<u32>>,
}

impl Atom {
    fn new(base: u64, modulus: Vec<u64>) -> Atom {
        let degree = modulus.len() - 1;
        let order = (base as usize).pow(degree as u32);
        let plain = degree == 1 && modulus[0] == 0;
        let mut atom = Atom {
            base,
            modulus,
            degree,
            order,
            plain,
            table: None,
        };
        if !plain && order <= ATOM_TABLE_LIMIT {
            let mut t = vec![0u32; order * order];
            for a in 0..order {
                for b in a..order {
                    let c = atom.mul_compute(a, b) as u32;
                    t[a * order + b] = c;
                    t[b * order + a] = c;
                }
            }
            atom.table = Some(t);
        }
        atom
    }

    fn coeffs(&self, mut idx: usize) -> Vec<u64> {
        let n = self.base as usize;
        (0..self.degree)
            .map(|_| {
                let c = (idx % n) as u64;
                idx /= n;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.base as usize + c as usize)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        if self.plain {
            return (a + b) % self.order;
        }
        let n = self.base as usize;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut w = 1;
        for _ in 0..self.degree {
            out += ((a % n + b % n) % n) * w;
            a /= n;
            b /= n;
            w *= n;
        }
        out
    }

    fn neg(&self, a: usize) -> usize {
        if self.plain {
            return (self.order - a) % self.order;
        }
        let n = self.base as usize;
        let mut a = a;
        let mut out = 0;
        let mut w = 1;
        for _ in 0..self.degree {
            out += ((n - a % n) % n) * w;
            a /= n;
            w *= n;
        }
        out
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        if self.plain {
            return ((a as u64 * b as u64) % self.base) as usize;
        }
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_compute(a, b),
        }
    }

    fn mul_compute(&self, a: usize, b: usize) -> usize {
        let n = self.base;
        let d = self.degree;
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % n;
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            // x^d = -(f_0 + ... + f_{d-1} x^{d-1})
            for j in 0..d {
                let sub = c * self.modulus[j] % n;
                prod[k - d + j] = (prod[k - d + j] + n - sub) % n;
            }
            prod[k] = 0;
        }
        self.encode(&prod[..d])
    }

    fn one(&self) -> usize {
        1 % self.order
    }

    fn label(&self, a: usize) -> String {
        if self.degree == 1 {
            return a.to_string();
        }
        let c = self.coeffs(a);
        format_poly(&c)
    }
}

/// A finite commutative ring with identity.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    id: RingId,
    spec: RingSpec,
    order: usize,
    atoms: Vec<Atom>,
    /// Index weight of each factor.
    strides: Vec<usize>,
    one: usize,
    table: Option<Vec<u16>>,
}

/// Builds a ring with the default order cap.
pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing> {
    build_ring_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_ring_with_cap(spec: &RingSpec, order_cap: usize) -> Result<FiniteRing> {
    spec.validate()?;
    let order = spec.order();
    if order > order_cap as u128 {
        return Err(Error::OrderCapExceeded {
            order,
            cap: order_cap,
        });
    }
    let atoms: Vec<Atom> = spec.factors().into_iter().map(atom_for).collect();
    let order = order as usize;
    let mut strides = vec![1usize; atoms.len()];
    for i in (0..atoms.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * atoms[i + 1].order;
    }
    let one = atoms.iter().zip(&strides).map(|(a, s)| a.one() * s).sum();
    let mut ring = FiniteRing {
        id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
        spec: spec.clone(),
        order,
        atoms,
        strides,
        one,
        table: None,
    };
    if order <= FULL_TABLE_LIMIT {
        let mut t = vec![0u16; order * order];
        for a in 0..order {
            for b in a..order {
                let c = ring.mul_compute(a, b) as u16;
                t[a * order + b] = c;
                t[b * order + a] = c;
            }
        }
        ring.table = Some(t);
    }
    Ok(ring)
}

fn atom_for(spec: &RingSpec) -> Atom {
    match spec {
        RingSpec::ZMod(n) => Atom::new(*n, vec![0, 1]),
        RingSpec::GaloisField(q) => {
            let (p, k) = prime_power(*q).expect("validated prime power");
            if k == 1 {
                Atom::new(p, vec![0, 1])
            } else {
                Atom::new(p, first_irreducible(p, k as usize))
            }
        }
        RingSpec::QuotientPoly { base, modulus } => Atom::new(*base, modulus.clone()),
        RingSpec::Product(_) => unreachable!("products are flattened"),
    }
}

/// First monic irreducible polynomial of degree `k` over `Z/p`, scanning the
/// non-leading coefficients as a base-`p` number with `x^{k-1}` most significant.
pub fn first_irreducible(p: u64, k: usize) -> Vec<u64> {
    let count = p.pow(k as u32);
    for code in 0..count {
        let mut f = digits(code, p, k);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over a prime field")
}

fn digits(mut code: u64, p: u64, k: usize) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

/// Whether monic `g` divides `f` over the prime field `Z/p`.
fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for j in 0..=dg {
            let sub = c * g[j] % p;
            r[k - dg + j] = (r[k - dg + j] + p - sub) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

impl FiniteRing {
    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// Orders of the direct factors, in spec order.
    pub fn factor_orders(&self) -> Vec<usize> {
        self.atoms.iter().map(|a| a.order).collect()
    }

    /// Cyclic decomposition `(R,+) = Z/d_1 + ... + Z/d_m`, most significant first.
    pub fn additive_radices(&self) -> Vec<u64> {
        self.atoms
            .iter()
            .flat_map(|a| std::iter::repeat_n(a.base, a.degree))
            .collect()
    }

    /// Mixed-radix digits of an element, aligned with [`Self::additive_radices`].
    pub fn coordinates(&self, a: usize) -> Vec<u64> {
        let mut out = Vec::new();
        for (atom, part) in self.atoms.iter().zip(self.components(a)) {
            let mut c = atom.coeffs(part);
            c.reverse();
            out.extend(c);
        }
        out
    }

    pub fn from_coordinates(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(self.additive_radices())
            .fold(0usize, |acc, (&c, r)| acc * r as usize + c as usize)
    }

    /// Indices of the element's projections onto each direct factor.
    pub fn components(&self, a: usize) -> Vec<usize> {
        self.atoms
            .iter()
            .zip(&self.strides)
            .map(|(atom, s)| (a / s) % atom.order)
            .collect()
    }

    pub fn from_components(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.strides).map(|(p, s)| p * s).sum()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.atoms.len() == 1 {
            return self.atoms[0].add(a, b);
        }
        let mut out = 0;
        for (atom, s) in self.atoms.iter().zip(&self.strides) {
            out += atom.add((a / s) % atom.order, (b / s) % atom.order) * s;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut out = 0;
        for (atom, s) in self.atoms.iter().zip(&self.strides) {
            out += atom.neg((a / s) % atom.order) * s;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.mul_compute(a, b),
        }
    }

    fn mul_compute(&self, a: usize, b: usize) -> usize {
        if self.atoms.len() == 1 {
            return self.atoms[0].mul(a, b);
        }
        let mut out = 0;
        for (atom, s) in self.atoms.iter().zip(&self.strides) {
            out += atom.mul((a / s) % atom.order, (b / s) % atom.order) * s;
        }
        out
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// True iff some `b` satisfies `ab = 1`.
    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order).any(|b| self.mul(a, b) == self.one)
    }

    /// True iff `a^k = 0` for some `k`. Nilpotency index is at most
    /// `log2 |R| + 1`, so squaring that many times decides it.
    pub fn is_nilpotent(&self, a: usize) -> bool {
        let mut x = a;
        let mut bound = 1usize;
        while bound <= self.order {
            x = self.mul(x, x);
            bound <<= 1;
        }
        x == 0 || a == 0
    }

    /// Human-readable element: integers for `Z/n` slots, polynomials for
    /// quotient slots, tuples for products.
    pub fn label(&self, a: usize) -> String {
        let parts: Vec<String> = self
            .atoms
            .iter()
            .zip(self.components(a))
            .map(|(atom, c)| atom.label(c))
            .collect();
        if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }

    /// Builds each direct factor as a standalone ring.
    pub fn factor_rings(&self) -> Result<Vec<FiniteRing>> {
        self.spec
            .factors()
            .into_iter()
            .map(|f| build_ring_with_cap(f, self.order.max(1)))
            .collect()
    }
}

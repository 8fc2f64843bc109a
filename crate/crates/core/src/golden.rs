//! Exact arithmetic in Q(√5), quaternions over it, and the 120-element
//! icosian group together with its binary tetrahedral subgroup.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Order of the binary icosahedral group.
pub const ICOSIAN_ORDER: usize = 120;

/// An element `a + b·√5` of Q(√5).
///
/// Ordering is lexicographic on `(a, b)`; it is a canonical order, not the
/// order of real numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoldenScalar {
    a: BigRational,
    b: BigRational,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GoldenScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        // BigRational keeps itself reduced with a positive denominator.
        GoldenScalar { a, b }
    }

    /// `an/ad + (bn/bd)·√5`
    pub fn from_ratios(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        GoldenScalar::new(ratio(an, ad), ratio(bn, bd))
    }

    pub fn from_int(n: i64) -> Self {
        GoldenScalar::from_ratios(n, 1, 0, 1)
    }

    pub fn zero() -> Self {
        GoldenScalar::from_int(0)
    }

    pub fn one() -> Self {
        GoldenScalar::from_int(1)
    }

    pub fn sqrt5() -> Self {
        GoldenScalar::from_ratios(0, 1, 1, 1)
    }

    /// The golden ratio (1+√5)/2.
    pub fn phi() -> Self {
        GoldenScalar::from_ratios(1, 2, 1, 2)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate `a - b√5`.
    pub fn conjugate(&self) -> Self {
        GoldenScalar::new(self.a.clone(), -self.b.clone())
    }

    /// Field norm `a² - 5b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - ratio(5, 1) * &self.b * &self.b
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a + b√5 with a, b rational is zero only if both vanish, so the norm is nonzero.
        let n = self.norm();
        Ok(GoldenScalar::new(&self.a / &n, -(&self.b / &n)))
    }

    pub fn checked_div(&self, rhs: &GoldenScalar) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn half(&self) -> Self {
        let two = ratio(2, 1);
        GoldenScalar::new(&self.a / &two, &self.b / &two)
    }

    /// Sign of the real number `a + b√5`, computed exactly.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a² with 5b²
        let a2 = &self.a * &self.a;
        let b2 = ratio(5, 1) * &self.b * &self.b;
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// Approximate value, for display only.
    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| -> f64 {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        f(&self.a) + f(&self.b) * 5f64.sqrt()
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for GoldenScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}√5", self.a, -self.b.clone())
                } else {
                    write!(f, "{}+{}√5", self.a, self.b)
                }
            }
        }
    }
}

impl<'a> Add<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn add(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn sub(self, rhs: &GoldenScalar) -> GoldenScalar {
        GoldenScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a GoldenScalar> for &'a GoldenScalar {
    type Output = GoldenScalar;
    fn mul(self, rhs: &GoldenScalar) -> GoldenScalar {
        // (a+b√5)(c+d√5) = (ac+5bd) + (ad+bc)√5
        let five = ratio(5, 1);
        GoldenScalar::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        GoldenScalar::new(-self.a.clone(), -self.b.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GoldenScalar> for GoldenScalar {
            type Output = GoldenScalar;
            fn $m(self, rhs: GoldenScalar) -> GoldenScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GoldenScalar {
    type Output = GoldenScalar;
    fn neg(self) -> GoldenScalar {
        -(&self)
    }
}

/// Binary operations selectable at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Negates the first operand; the second is ignored.
    Neg,
}

pub fn scalar_arith(op: ScalarOp, s: &GoldenScalar, t: &GoldenScalar) -> Result<GoldenScalar> {
    Ok(match op {
        ScalarOp::Add => s + t,
        ScalarOp::Sub => s - t,
        ScalarOp::Mul => s * t,
        ScalarOp::Div => s.checked_div(t)?,
        ScalarOp::Neg => -s,
    })
}

/// A quaternion `w + xi + yj + zk` with coordinates in Q(√5).
///
/// The derived ordering is lexicographic on the 8-tuple
/// `(a_w, b_w, a_x, b_x, a_y, b_y, a_z, b_z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Icosian {
    pub w: GoldenScalar,
    pub x: GoldenScalar,
    pub y: GoldenScalar,
    pub z: GoldenScalar,
}

impl Icosian {
    pub fn new(w: GoldenScalar, x: GoldenScalar, y: GoldenScalar, z: GoldenScalar) -> Self {
        Icosian { w, x, y, z }
    }

    pub fn one() -> Self {
        let z = GoldenScalar::zero;
        Icosian::new(GoldenScalar::one(), z(), z(), z())
    }

    pub fn i() -> Self {
        let z = GoldenScalar::zero;
        Icosian::new(z(), GoldenScalar::one(), z(), z())
    }

    pub fn j() -> Self {
        let z = GoldenScalar::zero;
        Icosian::new(z(), z(), GoldenScalar::one(), z())
    }

    pub fn k() -> Self {
        let z = GoldenScalar::zero;
        Icosian::new(z(), z(), z(), GoldenScalar::one())
    }

    pub fn coords(&self) -> [&GoldenScalar; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn norm(&self) -> GoldenScalar {
        self.dot(self)
    }

    /// Euclidean inner product in R⁴.
    pub fn dot(&self, other: &Icosian) -> GoldenScalar {
        &(&(&self.w * &other.w) + &(&self.x * &other.x))
            + &(&(&self.y * &other.y) + &(&self.z * &other.z))
    }

    pub fn conjugate(&self) -> Self {
        Icosian::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Inverse of a unit quaternion (its conjugate).
    pub fn unit_inverse(&self) -> Self {
        self.conjugate()
    }

    pub fn is_one(&self) -> bool {
        *self == Icosian::one()
    }

    pub fn pow(&self, n: u32) -> Icosian {
        let mut acc = Icosian::one();
        for _ in 0..n {
            acc = quat_mul(&acc, self);
        }
        acc
    }

    /// Coordinates as the 8 exact rationals `a_w,b_w,a_x,b_x,a_y,b_y,a_z,b_z`.
    pub fn label(&self) -> String {
        self.coords()
            .iter()
            .flat_map(|c| [c.rational_part().to_string(), c.sqrt5_part().to_string()])
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Neg for &Icosian {
    type Output = Icosian;
    fn neg(self) -> Icosian {
        Icosian::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl fmt::Display for Icosian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Hamilton product.
pub fn quat_mul(p: &Icosian, q: &Icosian) -> Icosian {
    let (a1, b1, c1, d1) = (&p.w, &p.x, &p.y, &p.z);
    let (a2, b2, c2, d2) = (&q.w, &q.x, &q.y, &q.z);
    let w = &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2));
    let x = &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2));
    let y = &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2));
    let z = &(&(a1 * d2) + &(b1 * c2)) - &(&(c1 * b2) - &(d1 * a2));
    Icosian::new(w, x, y, z)
}

impl Mul for &Icosian {
    type Output = Icosian;
    fn mul(self, rhs: &Icosian) -> Icosian {
        quat_mul(self, rhs)
    }
}

/// The generators used by default: `i` and `½(φ⁻¹ + i + φj)`.
pub fn standard_generators() -> Vec<Icosian> {
    // φ⁻¹ = (−1+√5)/2, so φ⁻¹/2 = (−1+√5)/4 and φ/2 = (1+√5)/4.
    let half_phi_inv = GoldenScalar::from_ratios(-1, 4, 1, 4);
    let half = GoldenScalar::from_ratios(1, 2, 0, 1);
    let half_phi = GoldenScalar::from_ratios(1, 4, 1, 4);
    vec![
        Icosian::i(),
        Icosian::new(half_phi_inv, half, half_phi, GoldenScalar::zero()),
    ]
}

/// A finite group of unit quaternions, stored in canonical order.
#[derive(Clone, Debug)]
pub struct IcosianGroup {
    elements: Vec<Icosian>,
    index: HashMap<Icosian, usize>,
    table: Vec<Vec<usize>>,
}

impl IcosianGroup {
    pub fn elements(&self) -> &[Icosian] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Icosian {
        &self.elements[i]
    }

    pub fn index_of(&self, q: &Icosian) -> Option<usize> {
        self.index.get(q).copied()
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.index[&Icosian::one()]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].unit_inverse()]
    }

    /// Index of `-elements[a]`, if present.
    pub fn negation(&self, a: usize) -> Option<usize> {
        self.index_of(&-&self.elements[a])
    }

    pub fn pow(&self, a: usize, n: u32) -> usize {
        let mut acc = self.identity();
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Smallest `n ≥ 1` with `aⁿ = 1`.
    pub fn order_of(&self, a: usize) -> usize {
        let id = self.identity();
        let mut acc = a;
        let mut n = 1;
        while acc != id {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let id = self.identity();
        seen[id] = true;
        let mut stack = vec![id];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let c = self.mul(a, g);
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        let mut inside = vec![false; self.len()];
        for &m in members {
            inside[m] = true;
        }
        inside[self.identity()]
            && members.iter().all(|&a| {
                inside[self.inverse(a)] && members.iter().all(|&b| inside[self.mul(a, b)])
            })
    }

    /// Canonical fingerprint: SHA-256 over the element labels in order.
    pub fn canonical_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        for e in &self.elements {
            h.update(e.label().as_bytes());
            h.update(b"\n");
        }
        hex::encode(h.finalize())
    }
}

/// Closes the generators under multiplication and returns the group in
/// canonical order.
pub fn generate_icosian_group(generators: &[Icosian]) -> Result<IcosianGroup> {
    let one = GoldenScalar::one();
    for g in generators {
        if g.norm() != one {
            return Err(Error::NotUnit(g.to_string()));
        }
    }
    let mut found: Vec<Icosian> = vec![Icosian::one()];
    let mut known: HashMap<Icosian, usize> = HashMap::from([(Icosian::one(), 0)]);
    let mut cursor = 0;
    while cursor < found.len() {
        let a = found[cursor].clone();
        for g in generators {
            let c = quat_mul(&a, g);
            if !known.contains_key(&c) {
                if found.len() == ICOSIAN_ORDER {
                    return Err(Error::ClosureOverflow {
                        limit: ICOSIAN_ORDER,
                        left: a.to_string(),
                        right: g.to_string(),
                    });
                }
                known.insert(c.clone(), found.len());
                found.push(c);
            }
        }
        cursor += 1;
    }
    found.sort();
    let index: HashMap<Icosian, usize> = found
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, q)| (q, i))
        .collect();
    let table = found
        .iter()
        .map(|a| found.iter().map(|b| index[&quat_mul(a, b)]).collect())
        .collect();
    Ok(IcosianGroup {
        elements: found,
        index,
        table,
    })
}

/// The standard icosian group.
pub fn icosian_group() -> Result<IcosianGroup> {
    let g = generate_icosian_group(&standard_generators())?;
    if g.len() != ICOSIAN_ORDER {
        return Err(Error::Construction(format!(
            "standard generators produced {} elements",
            g.len()
        )));
    }
    Ok(g)
}

fn is_unit_coordinate_vector(q: &Icosian) -> bool {
    let coords = q.coords();
    let nonzero: Vec<&GoldenScalar> = coords.iter().copied().filter(|c| !c.is_zero()).collect();
    nonzero.len() == 1
        && (*nonzero[0] == GoldenScalar::one() || *nonzero[0] == -GoldenScalar::one())
}

fn is_half_vector(q: &Icosian) -> bool {
    let h = GoldenScalar::from_ratios(1, 2, 0, 1);
    q.coords().iter().all(|c| **c == h || **c == -&h)
}

/// The binary tetrahedral subgroup `{±1, ±i, ±j, ±k, (±1±i±j±k)/2}`, as
/// sorted indices into `group`.
pub fn find_24cell_subgroup(group: &IcosianGroup) -> Result<Vec<usize>> {
    let members: Vec<usize> = (0..group.len())
        .filter(|&i| {
            let q = group.element(i);
            is_unit_coordinate_vector(q) || is_half_vector(q)
        })
        .collect();
    if members.len() != 24 {
        return Err(Error::SubgroupNotFound(format!(
            "found {} candidate elements instead of 24",
            members.len()
        )));
    }
    if !group.is_subgroup(&members) {
        return Err(Error::SubgroupNotFound(
            "candidate set is not closed".into(),
        ));
    }
    if members.iter().any(|&m| {
        group
            .negation(m)
            .is_none_or(|n| members.binary_search(&n).is_err())
    }) {
        return Err(Error::SubgroupNotFound(
            "candidate set is not closed under x -> -x".into(),
        ));
    }
    Ok(members)
}

/// Right cosets `T pᵏ` (`right == true`) or left cosets `pᵏ T`, k = 0..4,
/// each as a sorted index list.
pub fn cosets(group: &IcosianGroup, t: &[usize], p: usize, right: bool) -> Vec<Vec<usize>> {
    (0..5)
        .map(|k| {
            let pk = group.pow(p, k);
            let mut c: Vec<usize> = t
                .iter()
                .map(|&x| {
                    if right {
                        group.mul(x, pk)
                    } else {
                        group.mul(pk, x)
                    }
                })
                .collect();
            c.sort_unstable();
            c
        })
        .collect()
}

fn cosets_partition(group: &IcosianGroup, cosets: &[Vec<usize>]) -> bool {
    let mut hit = vec![0u8; group.len()];
    for c in cosets {
        for &x in c {
            hit[x] += 1;
        }
    }
    hit.iter().all(|&h| h == 1)
}

/// Elements q with q⁵ = 1, q ≠ 1, in canonical order.
pub fn order5_elements(group: &IcosianGroup) -> Vec<usize> {
    let id = group.identity();
    (0..group.len())
        .filter(|&i| i != id && group.pow(i, 5) == id)
        .collect()
}

/// Smallest order-5 element (canonical order) whose left and right cosets
/// of `t` partition the group.
pub fn pick_order5_element(group: &IcosianGroup, t: &[usize]) -> Result<usize> {
    pick_order5_excluding(group, t, &[])
}

/// Smallest valid order-5 element that is not a power of `p`.
pub fn alt_order5_element(group: &IcosianGroup, t: &[usize], p: usize) -> Result<usize> {
    let powers: Vec<usize> = (0..5).map(|k| group.pow(p, k)).collect();
    pick_order5_excluding(group, t, &powers)
}

fn pick_order5_excluding(group: &IcosianGroup, t: &[usize], exclude: &[usize]) -> Result<usize> {
    order5_elements(group)
        .into_iter()
        .filter(|q| !exclude.contains(q))
        .find(|&q| {
            cosets_partition(group, &cosets(group, t, q, true))
                && cosets_partition(group, &cosets(group, t, q, false))
        })
        .ok_or(Error::NoOrderFive)
}

/// The 25 double cosets `pⁱ T pʲ`: `cells[i][j]` is a sorted index list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetGrid {
    pub cells: Vec<Vec<Vec<usize>>>,
}

impl DoubleCosetGrid {
    pub fn new(group: &IcosianGroup, t: &[usize], p: usize) -> Self {
        let cells = (0..5)
            .map(|i| {
                let pi = group.pow(p, i);
                (0..5)
                    .map(|j| {
                        let pj = group.pow(p, j);
                        let mut c: Vec<usize> =
                            t.iter().map(|&x| group.mul(group.mul(pi, x), pj)).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect()
            })
            .collect();
        DoubleCosetGrid { cells }
    }

    pub fn cell(&self, i: usize, j: usize) -> &[usize] {
        &self.cells[i][j]
    }

    /// Grid cell containing group element `v` in row `i`, if any.
    pub fn column_of(&self, i: usize, v: usize) -> Option<usize> {
        (0..5).find(|&j| self.cells[i][j].binary_search(&v).is_ok())
    }

    /// The ten partitions: five rows (fixed i) then five columns (fixed j).
    pub fn colorings(&self) -> Vec<Vec<Vec<usize>>> {
        let rows = (0..5).map(|i| (0..5).map(|j| self.cells[i][j].clone()).collect());
        let cols = (0..5).map(|j| (0..5).map(|i| self.cells[i][j].clone()).collect());
        rows.chain(cols).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_inv() -> GoldenScalar {
        GoldenScalar::from_ratios(-1, 2, 1, 2)
    }

    #[test]
    fn golden_ratio_identities() {
        let phi = GoldenScalar::phi();
        assert_eq!(&phi * &phi, &phi + &GoldenScalar::one());
        assert_eq!(
            &GoldenScalar::sqrt5() * &GoldenScalar::sqrt5(),
            GoldenScalar::from_int(5)
        );
        assert_eq!(&phi * &phi_inv(), GoldenScalar::one());
        assert_eq!(phi.recip().unwrap(), phi_inv());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = scalar_arith(ScalarOp::Div, &GoldenScalar::one(), &GoldenScalar::zero());
        assert!(matches!(r, Err(Error::DivisionByZero)));
    }

    #[test]
    fn signum_is_exact() {
        assert_eq!(GoldenScalar::from_ratios(-2, 1, 1, 1).signum(), 1);
        assert_eq!(GoldenScalar::from_ratios(-3, 1, 1, 1).signum(), -1);
        assert_eq!(phi_inv().signum(), 1);
        assert_eq!(GoldenScalar::zero().signum(), 0);
    }

    #[test]
    fn quaternion_units() {
        assert_eq!(quat_mul(&Icosian::i(), &Icosian::j()), Icosian::k());
        assert_eq!(quat_mul(&Icosian::j(), &Icosian::i()), -&Icosian::k());
        assert_eq!(quat_mul(&Icosian::k(), &Icosian::k()), -&Icosian::one());
    }

    #[test]
    fn trivial_generators_give_trivial_group() {
        let g = generate_icosian_group(&[Icosian::one()]).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn non_unit_generator_rejected() {
        let two = Icosian::new(
            GoldenScalar::from_int(2),
            GoldenScalar::zero(),
            GoldenScalar::zero(),
            GoldenScalar::zero(),
        );
        assert!(matches!(
            generate_icosian_group(&[two]),
            Err(Error::NotUnit(_))
        ));
    }

    #[test]
    fn group_structure() {
        let g = icosian_group().unwrap();
        assert_eq!(g.len(), 120);
        let id = g.identity();
        let minus_one = g.index_of(&-&Icosian::one()).unwrap();
        for a in 0..g.len() {
            assert_eq!(g.element(a).norm(), GoldenScalar::one());
            assert_eq!(g.mul(a, g.inverse(a)), id);
            assert!(g.negation(a).is_some());
        }
        assert_ne!(id, minus_one);
        // canonical order is sorted and stable
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        let again = icosian_group().unwrap();
        assert_eq!(g.elements(), again.elements());
        assert_eq!(g.canonical_hash(), again.canonical_hash());
    }

    #[test]
    fn coordinates_come_from_the_expected_set() {
        let g = icosian_group().unwrap();
        let half = GoldenScalar::from_ratios(1, 2, 0, 1);
        let allowed: Vec<GoldenScalar> = vec![
            GoldenScalar::zero(),
            GoldenScalar::one(),
            half.clone(),
            GoldenScalar::phi().half(),
            phi_inv().half(),
        ];
        for q in g.elements() {
            for c in q.coords() {
                let abs = if c.signum() < 0 { -c } else { c.clone() };
                assert!(allowed.contains(&abs), "unexpected coordinate {c}");
            }
        }
    }

    #[test]
    fn tetrahedral_subgroup() {
        let g = icosian_group().unwrap();
        let t = find_24cell_subgroup(&g).unwrap();
        assert_eq!(t.len(), 24);
        assert!(t.contains(&g.identity()));
        assert!(t.contains(&g.index_of(&-&Icosian::one()).unwrap()));
    }

    #[test]
    fn tetrahedral_subgroup_is_the_unique_one_over_q8() {
        // Every order-24 subgroup containing Q8 is <Q8, g> for some g.
        let g = icosian_group().unwrap();
        let t = find_24cell_subgroup(&g).unwrap();
        let q8: Vec<usize> = [Icosian::i(), Icosian::j()]
            .iter()
            .map(|q| g.index_of(q).unwrap())
            .collect();
        let q8_members = g.closure(&q8);
        assert_eq!(q8_members.len(), 8);
        let mut found = std::collections::BTreeSet::new();
        for extra in 0..g.len() {
            let mut gens = q8.clone();
            gens.push(extra);
            let h = g.closure(&gens);
            if h.len() == 24 {
                found.insert(h);
            }
        }
        assert_eq!(found.len(), 1);
        assert_eq!(found.into_iter().next().unwrap(), t);
    }

    #[test]
    fn order_five_elements_and_cosets() {
        let g = icosian_group().unwrap();
        let t = find_24cell_subgroup(&g).unwrap();
        let brute: Vec<usize> = (0..g.len())
            .filter(|&q| {
                let e = g.element(q);
                !e.is_one() && e.pow(5).is_one()
            })
            .collect();
        assert_eq!(brute.len(), 24);
        assert_eq!(order5_elements(&g), brute);

        let p = pick_order5_element(&g, &t).unwrap();
        assert_eq!(p, brute[0]);
        assert!(g.element(p).pow(5).is_one());
        for right in [true, false] {
            let cs = cosets(&g, &t, p, right);
            let mut all: Vec<usize> = cs.concat();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), 120);
        }
        let alt = alt_order5_element(&g, &t, p).unwrap();
        assert!((0..5).all(|k| g.pow(p, k) != alt));
    }

    #[test]
    fn double_cosets_are_25_distinct_classes() {
        let g = icosian_group().unwrap();
        let t = find_24cell_subgroup(&g).unwrap();
        let p = pick_order5_element(&g, &t).unwrap();
        let grid = DoubleCosetGrid::new(&g, &t, p);
        let mut cells: Vec<&Vec<usize>> = grid.cells.iter().flatten().collect();
        cells.sort();
        cells.dedup();
        assert_eq!(cells.len(), 25);
        for c in &cells {
            assert_eq!(c.len(), 24);
        }
        assert_eq!(grid.colorings().len(), 10);
    }
}

//! Exact arithmetic in multiquadratic fields `Q(sqrt d_1, ..., sqrt d_k)`
//! and the quadratic Kummer embedding of their Galois groups.
//!
//! Coordinates are indexed by subsets `S` of the generators, stored as bit
//! masks: bit `i` of `S` stands for `sqrt d_{i+1}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::embeddings::{verify_embedding, EmbeddingReport};
use crate::error::{Error, Result};
use crate::group::{subgroup_from_elements, FiniteGroup, GroupHom, MulRule};
use crate::wreath::{regular_wreath_capped, WreathProduct};

pub const MAX_GENERATORS: usize = 10;
pub const MAX_ABS_GENERATOR: i64 = 1_000_000;

/// Prime factors of `|n|` with multiplicity, `n != 0`.
fn factor(n: i64) -> Vec<(i64, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

struct FieldData {
    gens: Vec<i64>,
    /// `prod_{i in S} d_i` for every mask `S`.
    products: Vec<BigInt>,
}

/// `Q(sqrt d_1, ..., sqrt d_k)`. Cloning is cheap.
#[derive(Clone)]
pub struct MultiQuadField(Arc<FieldData>);

impl fmt::Debug for MultiQuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiQuadField{:?}", self.0.gens)
    }
}

impl PartialEq for MultiQuadField {
    fn eq(&self, other: &Self) -> bool {
        self.0.gens == other.0.gens
    }
}

impl Eq for MultiQuadField {}

impl MultiQuadField {
    /// Generators must be distinct square-free integers outside `{0, 1}`
    /// with `|d| <= 10^6`, and no nonempty product of them may be a square.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.len() > MAX_GENERATORS {
            return Err(Error::InvalidField(format!("at most {MAX_GENERATORS} generators")));
        }
        let mut primes: Vec<i64> = Vec::new();
        let mut vectors: Vec<u128> = Vec::new();
        for &d in gens {
            if d == 0 || d == 1 || d.abs() > MAX_ABS_GENERATOR {
                return Err(Error::InvalidField(format!("generator {d} not allowed")));
            }
            let mut v = if d < 0 { 1u128 } else { 0 };
            for (p, e) in factor(d) {
                if e > 1 {
                    return Err(Error::InvalidField(format!("{d} is not square-free")));
                }
                let i = match primes.iter().position(|&q| q == p) {
                    Some(i) => i,
                    None => {
                        primes.push(p);
                        primes.len() - 1
                    }
                };
                v |= 1 << (i + 1);
            }
            vectors.push(v);
        }
        let k = gens.len();
        for s in 1usize..1 << k {
            let v = (0..k).filter(|i| s >> i & 1 == 1).fold(0, |acc, i| acc ^ vectors[i]);
            if v == 0 {
                let sub: Vec<i64> = (0..k).filter(|i| s >> i & 1 == 1).map(|i| gens[i]).collect();
                return Err(Error::InvalidField(format!("the product of {sub:?} is a square")));
            }
        }
        let products = (0..1usize << k)
            .map(|s| (0..k).filter(|i| s >> i & 1 == 1).map(|i| BigInt::from(gens[i])).product())
            .collect();
        Ok(MultiQuadField(Arc::new(FieldData { gens: gens.to_vec(), products })))
    }

    pub fn generators(&self) -> &[i64] {
        &self.0.gens
    }

    pub fn k(&self) -> usize {
        self.0.gens.len()
    }

    /// `[field : Q] = 2^k`
    pub fn degree(&self) -> usize {
        1 << self.k()
    }

    /// `prod_{i in S} d_i`
    pub fn product(&self, s: usize) -> &BigInt {
        &self.0.products[s]
    }

    pub fn basis_label(&self, s: usize) -> String {
        if s == 0 {
            return "1".into();
        }
        (0..self.k())
            .filter(|i| s >> i & 1 == 1)
            .map(|i| format!("√{}", self.0.gens[i]))
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn zero(&self) -> MultiQuadElement {
        MultiQuadElement { field: self.clone(), coords: vec![BigRational::zero(); self.degree()] }
    }

    pub fn one(&self) -> MultiQuadElement {
        self.rational(BigRational::one())
    }

    pub fn rational(&self, r: BigRational) -> MultiQuadElement {
        self.monomial(0, r)
    }

    /// `c * prod_{i in S} sqrt d_i`
    pub fn monomial(&self, s: usize, c: BigRational) -> MultiQuadElement {
        let mut x = self.zero();
        x.coords[s] = c;
        x
    }

    pub fn element(&self, coords: Vec<BigRational>) -> Result<MultiQuadElement> {
        if coords.len() != self.degree() {
            return Err(Error::LengthMismatch { expected: self.degree(), got: coords.len() });
        }
        Ok(MultiQuadElement { field: self.clone(), coords })
    }

    /// `sqrt d_{i+1}`
    pub fn sqrt_generator(&self, i: usize) -> MultiQuadElement {
        self.monomial(1 << i, BigRational::one())
    }

    /// Position of generator `d` among the generators.
    pub fn index_of(&self, d: i64) -> Option<usize> {
        self.0.gens.iter().position(|&x| x == d)
    }

    /// The mask `S` and the positive `r` with `q = r^2 prod_{i in S} d_i`,
    /// if `q` has a square root in the field.
    pub fn square_class(&self, q: &BigRational) -> Option<(usize, BigRational)> {
        if q.is_zero() {
            return None;
        }
        (0..self.degree()).find_map(|s| {
            let t = q / BigRational::from_integer(self.product(s).clone());
            if t.is_positive() && is_square(t.numer()) && is_square(t.denom()) {
                Some((s, BigRational::new(t.numer().sqrt(), t.denom().sqrt())))
            } else {
                None
            }
        })
    }

    /// The square root `r prod_{i in S} sqrt d_i` of a rational, `r > 0`.
    pub fn canonical_sqrt(&self, q: &BigRational) -> Option<MultiQuadElement> {
        self.square_class(q).map(|(s, r)| self.monomial(s, r))
    }
}

/// An element of a multiquadratic field with exact rational coordinates
/// over the subset basis.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiQuadElement {
    field: MultiQuadField,
    coords: Vec<BigRational>,
}

impl MultiQuadElement {
    pub fn field(&self) -> &MultiQuadField {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The value when the element is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    fn same_field(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different fields");
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        MultiQuadElement { field: self.field.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    /// Inverse through the norm: the product of all conjugates other than
    /// the element itself, divided by the (rational) norm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut cofactor = self.field.one();
        for mask in 1..self.field.degree() {
            cofactor = &cofactor * &conjugate(self, mask);
        }
        let norm = (self * &cofactor)
            .as_rational()
            .cloned()
            .expect("norm of a multiquadratic element is rational");
        Ok(cofactor.scale(&norm.recip()))
    }
}

/// Sign change of the coordinates for the automorphism negating the
/// generators in `mask`.
fn conjugate(x: &MultiQuadElement, mask: usize) -> MultiQuadElement {
    let coords = x
        .coords
        .iter()
        .enumerate()
        .map(|(s, c)| if (s & mask).count_ones() % 2 == 1 { -c } else { c.clone() })
        .collect();
    MultiQuadElement { field: x.field.clone(), coords }
}

impl Add for &MultiQuadElement {
    type Output = MultiQuadElement;

    fn add(self, rhs: Self) -> MultiQuadElement {
        self.same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        MultiQuadElement { field: self.field.clone(), coords }
    }
}

impl Sub for &MultiQuadElement {
    type Output = MultiQuadElement;

    fn sub(self, rhs: Self) -> MultiQuadElement {
        self.same_field(rhs);
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect();
        MultiQuadElement { field: self.field.clone(), coords }
    }
}

impl Neg for &MultiQuadElement {
    type Output = MultiQuadElement;

    fn neg(self) -> MultiQuadElement {
        MultiQuadElement { field: self.field.clone(), coords: self.coords.iter().map(|a| -a).collect() }
    }
}

/// `sqrt d_S * sqrt d_T = (prod_{i in S & T} d_i) sqrt d_{S ^ T}`
impl Mul for &MultiQuadElement {
    type Output = MultiQuadElement;

    fn mul(self, rhs: Self) -> MultiQuadElement {
        self.same_field(rhs);
        let f = &self.field;
        let mut out = f.zero();
        for (s, a) in self.coords.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (t, b) in rhs.coords.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = a * b * BigRational::from_integer(f.product(s & t).clone());
                out.coords[s ^ t] += c;
            }
        }
        out
    }
}

impl fmt::Display for MultiQuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            let body = match (s, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => self.field.basis_label(s),
                _ => format!("{}·{}", mag, self.field.basis_label(s)),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiQuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
}

/// `a + b`, `a * b` or `a^-1` (`b` is ignored for the inverse).
pub fn field_arithmetic(a: &MultiQuadElement, b: &MultiQuadElement, op: FieldOp) -> Result<MultiQuadElement> {
    match op {
        FieldOp::Add => Ok(a + b),
        FieldOp::Mul => Ok(a * b),
        FieldOp::Inv => a.inv(),
    }
}

/// The automorphism sending `sqrt d_i` to `-sqrt d_i` exactly for the bits
/// `i` set in `mask`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldAutomorphism {
    field: MultiQuadField,
    mask: usize,
}

impl FieldAutomorphism {
    pub fn new(field: &MultiQuadField, mask: usize) -> Result<Self> {
        if mask >= field.degree() {
            return Err(Error::IndexOutOfRange { index: mask, order: field.degree() });
        }
        Ok(FieldAutomorphism { field: field.clone(), mask })
    }

    pub fn identity(field: &MultiQuadField) -> Self {
        FieldAutomorphism { field: field.clone(), mask: 0 }
    }

    /// From the images `+1` / `-1` of each `sqrt d_i`.
    pub fn from_signs(field: &MultiQuadField, signs: &[i8]) -> Result<Self> {
        if signs.len() != field.k() {
            return Err(Error::LengthMismatch { expected: field.k(), got: signs.len() });
        }
        let mut mask = 0;
        for (i, &e) in signs.iter().enumerate() {
            match e {
                1 => {}
                -1 => mask |= 1 << i,
                _ => return Err(Error::InvalidField(format!("sign {e} is not ±1"))),
            }
        }
        Ok(FieldAutomorphism { field: field.clone(), mask })
    }

    pub fn mask(&self) -> usize {
        self.mask
    }

    pub fn field(&self) -> &MultiQuadField {
        &self.field
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.field.k()).map(|i| if self.mask >> i & 1 == 1 { -1 } else { 1 }).collect()
    }

    pub fn apply(&self, x: &MultiQuadElement) -> MultiQuadElement {
        assert!(x.field == self.field, "automorphism of a different field");
        conjugate(x, self.mask)
    }

    pub fn compose(&self, other: &FieldAutomorphism) -> FieldAutomorphism {
        FieldAutomorphism { field: self.field.clone(), mask: self.mask ^ other.mask }
    }

    /// Every automorphism is an involution.
    pub fn inverse(&self) -> FieldAutomorphism {
        self.clone()
    }
}

struct XorRule {
    prefix: String,
    order: usize,
}

impl MulRule for XorRule {
    fn mul(&self, a: usize, b: usize) -> usize {
        a ^ b
    }

    fn label(&self, x: usize) -> String {
        match (x, self.order) {
            (0, _) => "id".into(),
            (_, 2) => self.prefix.clone(),
            _ => format!("{}{x}", self.prefix),
        }
    }
}

/// Galois group with elements labelled `id`, `rho1`, `rho2`, ...; element
/// `m` is the automorphism with mask `m`.
pub fn galois_group(f: &MultiQuadField) -> (FiniteGroup, Vec<FieldAutomorphism>) {
    galois_group_labelled(f, "rho")
}

/// As [`galois_group`] with another label prefix. A group of order 2 has its
/// nontrivial element labelled by the bare prefix.
pub fn galois_group_labelled(f: &MultiQuadField, prefix: &str) -> (FiniteGroup, Vec<FieldAutomorphism>) {
    let n = f.degree();
    let rule = XorRule { prefix: prefix.into(), order: n };
    let g = FiniteGroup::from_rule(n, 0, (0..n).collect(), Arc::new(rule), None, None)
        .expect("sign vectors form a group");
    let autos = (0..n).map(|m| FieldAutomorphism { field: f.clone(), mask: m }).collect();
    (g, autos)
}

/// Positions in `big` of the generators of the subfield.
fn subfield_positions(big: &MultiQuadField, k_generators: &[i64]) -> Result<Vec<usize>> {
    k_generators
        .iter()
        .map(|&d| {
            big.index_of(d)
                .ok_or_else(|| Error::InvalidTower(format!("{d} is not a generator of {:?}", big.generators())))
        })
        .collect()
}

fn restrict_mask(positions: &[usize], mask: usize) -> usize {
    positions
        .iter()
        .enumerate()
        .filter(|(_, &p)| mask >> p & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// `rho|_K` for `K` generated by some of the generators of the big field.
pub fn restriction(f_big: &MultiQuadField, k_generators: &[i64], rho: &FieldAutomorphism) -> Result<FieldAutomorphism> {
    let k = MultiQuadField::new(k_generators)?;
    let positions = subfield_positions(f_big, k_generators)?;
    Ok(FieldAutomorphism { field: k, mask: restrict_mask(&positions, rho.mask) })
}

/// Restriction `Gal(L/Q) -> Gal(K/Q)` on the groups of [`galois_group`].
pub fn restriction_hom(
    gal_big: &FiniteGroup,
    gal_small: &FiniteGroup,
    f_big: &MultiQuadField,
    k_generators: &[i64],
) -> Result<GroupHom> {
    let positions = subfield_positions(f_big, k_generators)?;
    let image = gal_big.elements().map(|m| restrict_mask(&positions, m)).collect();
    GroupHom::new(gal_big.clone(), gal_small.clone(), image)
}

/// A tower `Q <= K <= L = K(sqrt alpha)` of multiquadratic fields with
/// rational `alpha`.
#[derive(Debug, Clone)]
pub struct QuadraticTower {
    l: MultiQuadField,
    k: MultiQuadField,
    k_positions: Vec<usize>,
    outside: usize,
    alpha: BigRational,
    alpha_mask: usize,
    sqrt_alpha: MultiQuadElement,
}

impl QuadraticTower {
    /// `K` must be generated by all but one generator of `L`, and `alpha`
    /// must have a square root in `L` outside `K`.
    pub fn new(l_generators: &[i64], k_generators: &[i64], alpha: BigRational) -> Result<Self> {
        let l = MultiQuadField::new(l_generators)?;
        let k = MultiQuadField::new(k_generators)?;
        let k_positions = subfield_positions(&l, k_generators)?;
        let outside: Vec<usize> = (0..l.k()).filter(|i| !k_positions.contains(i)).collect();
        if outside.len() != 1 {
            return Err(Error::InvalidTower(format!(
                "[L:K] must be 2, but L has {} generators outside K",
                outside.len()
            )));
        }
        let (alpha_mask, r) = l
            .square_class(&alpha)
            .ok_or_else(|| Error::InvalidTower(format!("{alpha} has no square root in L")))?;
        if alpha_mask >> outside[0] & 1 == 0 {
            return Err(Error::InvalidTower(format!("the square root of {alpha} lies in K")));
        }
        let sqrt_alpha = l.monomial(alpha_mask, r);
        Ok(QuadraticTower { l, k, k_positions, outside: outside[0], alpha, alpha_mask, sqrt_alpha })
    }

    pub fn l(&self) -> &MultiQuadField {
        &self.l
    }

    pub fn k(&self) -> &MultiQuadField {
        &self.k
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    /// Basis mask of the canonical square root of `alpha`.
    pub fn alpha_mask(&self) -> usize {
        self.alpha_mask
    }

    pub fn sqrt_alpha(&self) -> &MultiQuadElement {
        &self.sqrt_alpha
    }

    /// The generator of `Gal(L/K)`: negates the one generator of `L` not in
    /// `K`, hence negates `sqrt alpha`.
    pub fn eta_flip(&self) -> FieldAutomorphism {
        FieldAutomorphism { field: self.l.clone(), mask: 1 << self.outside }
    }

    pub fn restrict(&self, rho: &FieldAutomorphism) -> FieldAutomorphism {
        FieldAutomorphism { field: self.k.clone(), mask: restrict_mask(&self.k_positions, rho.mask) }
    }

    /// Image in `L` of an element of `K`.
    pub fn embed(&self, x: &MultiQuadElement) -> MultiQuadElement {
        let mut out = self.l.zero();
        for (s, c) in x.coords().iter().enumerate() {
            let t = self.k_positions.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0, |acc, (_, &p)| acc | 1 << p);
            out.coords[t] = c.clone();
        }
        out
    }
}

/// `(-1)^chi = rho(sqrt(rho^-1 tau alpha)) / sqrt(tau alpha)` evaluated
/// exactly in `L`.
pub fn chi(t: &QuadraticTower, rho: &FieldAutomorphism, tau: &FieldAutomorphism) -> Result<u8> {
    let tau_alpha = tau.apply(&t.k.rational(t.alpha.clone()));
    let tau_alpha = t.embed(&tau_alpha);
    let pulled = rho.inverse().apply(&tau_alpha);
    let root = |x: &MultiQuadElement| {
        x.as_rational()
            .and_then(|q| t.l.canonical_sqrt(q))
            .ok_or_else(|| Error::NonUnitQuotient(format!("{x} has no canonical square root")))
    };
    let quotient = &rho.apply(&root(&pulled)?) * &root(&tau_alpha)?.inv()?;
    let one = BigRational::one();
    match quotient.as_rational() {
        Some(q) if *q == one => Ok(0),
        Some(q) if *q == -one => Ok(1),
        _ => Err(Error::NonUnitQuotient(quotient.to_string())),
    }
}

/// Everything produced for a tower: the Galois groups, the restriction map
/// and the verified embedding into `Gal(L/K) wr Gal(K/Q)`.
#[derive(Debug, Clone)]
pub struct KummerEmbedding {
    pub gal_l: FiniteGroup,
    pub gal_k: FiniteGroup,
    pub gal_lk: FiniteGroup,
    pub inclusion: GroupHom,
    pub restriction: GroupHom,
    pub wreath: WreathProduct,
    pub phi: GroupHom,
    pub report: EmbeddingReport,
}

pub fn quadratic_kummer_embedding(t: &QuadraticTower) -> Result<KummerEmbedding> {
    quadratic_kummer_embedding_capped(t, crate::group::DEFAULT_SIZE_CAP)
}

/// `phi(rho) = (tau -> eta^chi(rho, tau), rho|_K)`.
pub fn quadratic_kummer_embedding_capped(t: &QuadraticTower, cap: u64) -> Result<KummerEmbedding> {
    let (gal_l, autos_l) = galois_group(&t.l);
    let (gal_k, autos_k) = galois_group_labelled(&t.k, "eta");
    let eta = t.eta_flip();
    let (gal_lk, inclusion) = subgroup_from_elements(&gal_l, &[0, eta.mask])?;
    let image = autos_l.iter().map(|rho| t.restrict(rho).mask).collect();
    let restriction = GroupHom::new(gal_l.clone(), gal_k.clone(), image)?;
    let wreath = regular_wreath_capped(&gal_lk, &gal_k, cap)?;
    let mut image = Vec::with_capacity(gal_l.order());
    for rho in &autos_l {
        let mut sigma = Vec::with_capacity(autos_k.len());
        for tau in &autos_k {
            sigma.push(chi(t, rho, tau)? as usize);
        }
        image.push(wreath.encode(&sigma, restriction.apply(rho.mask))?);
    }
    let phi = GroupHom::new(gal_l.clone(), wreath.product().clone(), image)?;
    let report = verify_embedding(&phi);
    Ok(KummerEmbedding { gal_l, gal_k, gal_lk, inclusion, restriction, wreath, phi, report })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct CocycleReport {
    pub triples: usize,
    /// First `(rho1, rho2, tau)` (as masks) violating the relation.
    pub counterexample: Option<(usize, usize, usize)>,
}

impl CocycleReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `chi(rho1 rho2, tau) = chi(rho2, rho1^-1 tau) + chi(rho1, tau)` mod 2 for
/// all `rho1, rho2` in `Gal(L/Q)` and `tau` in `Gal(K/Q)`.
pub fn verify_cocycle(t: &QuadraticTower) -> Result<CocycleReport> {
    let (_, autos_l) = galois_group(&t.l);
    let (_, autos_k) = galois_group(&t.k);
    let mut triples = 0;
    for r1 in &autos_l {
        for r2 in &autos_l {
            for tau in &autos_k {
                triples += 1;
                let lhs = chi(t, &r1.compose(r2), tau)?;
                let shifted = t.restrict(&r1.inverse()).compose(tau);
                let rhs = (chi(t, r2, &shifted)? + chi(t, r1, tau)?) % 2;
                if lhs != rhs {
                    return Ok(CocycleReport { triples, counterexample: Some((r1.mask, r2.mask, tau.mask)) });
                }
            }
        }
    }
    Ok(CocycleReport { triples, counterexample: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn f57() -> MultiQuadField {
        MultiQuadField::new(&[5, 7]).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(MultiQuadField::new(&[5, 7]).is_ok());
        assert!(MultiQuadField::new(&[-1, 2]).is_ok());
        assert!(MultiQuadField::new(&[12]).is_err());
        assert!(MultiQuadField::new(&[1]).is_err());
        assert!(MultiQuadField::new(&[2, 3, 6]).is_err());
        assert!(MultiQuadField::new(&[5, 5]).is_err());
        assert!(MultiQuadField::new(&[2_000_003]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let f = MultiQuadField::new(&[5]).unwrap();
        let one = f.one();
        let r5 = f.sqrt_generator(0);
        let prod = &(&one + &r5) * &(&one - &r5);
        assert_eq!(prod, f.rational(q(-4, 1)));

        let g = f57();
        let r7 = g.sqrt_generator(1);
        assert_eq!(r7.inv().unwrap(), g.monomial(2, q(1, 7)));
        assert_eq!(r7.inv().unwrap().to_string(), "1/7·√7");
        let r35 = &g.sqrt_generator(0) * &r7;
        assert_eq!(r35, g.monomial(3, q(1, 1)));
        assert!(matches!(g.zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display() {
        let g = f57();
        let x = g.element(vec![q(3, 2), q(0, 1), q(0, 1), q(1, 2)]).unwrap();
        assert_eq!(x.to_string(), "3/2 + 1/2·√5·√7");
        let y = g.element(vec![q(0, 1), q(-1, 1), q(-2, 3), q(0, 1)]).unwrap();
        assert_eq!(y.to_string(), "-√5 - 2/3·√7");
        assert_eq!(g.zero().to_string(), "0");
    }

    #[test]
    fn inverse_of_general_element() {
        let g = MultiQuadField::new(&[2, 3, 5]).unwrap();
        let x = g.element((1..=8).map(|i| q(i, i + 1)).collect()).unwrap();
        assert_eq!(&x * &x.inv().unwrap(), g.one());
    }

    #[test]
    fn galois_group_of_5_7() {
        let (gal, autos) = galois_group(&f57());
        assert_eq!(gal.order(), 4);
        assert_eq!(gal.mul(1, 2), 3);
        assert_eq!(gal.labels(), vec!["id", "rho1", "rho2", "rho3"]);
        assert_eq!(autos[1].signs(), vec![-1, 1]);
        let (small, _) = galois_group_labelled(&MultiQuadField::new(&[5]).unwrap(), "eta");
        assert_eq!(small.labels(), vec!["id", "eta"]);
    }

    #[test]
    fn restrictions() {
        let f = f57();
        let rho = |m| FieldAutomorphism::new(&f, m).unwrap();
        assert_eq!(restriction(&f, &[5], &rho(2)).unwrap().mask(), 0);
        assert_eq!(restriction(&f, &[5], &rho(3)).unwrap().mask(), 1);
        assert_eq!(restriction(&f, &[5, 7], &rho(3)).unwrap().mask(), 3);
        assert_eq!(restriction(&f, &[5], &rho(0)).unwrap().mask(), 0);
        assert!(restriction(&f, &[11], &rho(0)).is_err());
    }

    #[test]
    fn tower_validation() {
        assert!(QuadraticTower::new(&[5, 7], &[5], q(7, 1)).is_ok());
        assert!(QuadraticTower::new(&[5, 7], &[5], q(35, 4)).is_ok());
        assert!(QuadraticTower::new(&[5, 7], &[5], q(5, 1)).is_err());
        assert!(QuadraticTower::new(&[5, 7], &[5], q(3, 1)).is_err());
        assert!(QuadraticTower::new(&[2, 3, 5], &[2], q(5, 1)).is_err());
    }

    #[test]
    fn chi_values() {
        let t = QuadraticTower::new(&[5, 7], &[5], q(7, 1)).unwrap();
        let l = t.l().clone();
        let kf = t.k().clone();
        let rho = |m| FieldAutomorphism::new(&l, m).unwrap();
        let tau = |m| FieldAutomorphism::new(&kf, m).unwrap();
        for m in 0..2 {
            assert_eq!(chi(&t, &rho(0), &tau(m)).unwrap(), 0);
        }
        assert_eq!(chi(&t, &rho(2), &tau(0)).unwrap(), 1);
        assert_eq!(chi(&t, &rho(1), &tau(1)).unwrap(), 0);
    }

    #[test]
    fn example_tower_embedding() {
        let t = QuadraticTower::new(&[5, 7], &[5], q(7, 1)).unwrap();
        let e = quadratic_kummer_embedding(&t).unwrap();
        let w = &e.wreath;
        let shown: Vec<String> = e.gal_l.elements().map(|x| w.format_element(e.phi.apply(x))).collect();
        assert_eq!(
            shown,
            vec!["(id,id; id)", "(id,id; eta)", "(rho2,rho2; id)", "(rho2,rho2; eta)"]
        );
        assert!(e.report.is_embedding());
        assert_eq!((e.report.image_order, e.report.wreath_order), (4, 8));
        assert!(!e.report.image_is_full);
    }

    #[test]
    fn degenerate_tower() {
        let t = QuadraticTower::new(&[3], &[], q(3, 1)).unwrap();
        let e = quadratic_kummer_embedding(&t).unwrap();
        assert_eq!(e.wreath.order(), 2);
        assert!(e.report.is_embedding() && e.report.image_is_full);
    }

    #[test]
    fn cocycle_examples() {
        let t = QuadraticTower::new(&[5, 7], &[5], q(7, 1)).unwrap();
        let r = verify_cocycle(&t).unwrap();
        assert!(r.holds());
        assert_eq!(r.triples, 32);
        let t = QuadraticTower::new(&[2, 3, 5], &[2, 3], q(5, 1)).unwrap();
        let r = verify_cocycle(&t).unwrap();
        assert!(r.holds());
        assert_eq!(r.triples, 256);
    }
}

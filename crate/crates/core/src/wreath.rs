//! Wreath products `K wr_Omega H = K^Omega x| H`.
//!
//! Element `(f, h)` has index `h * |K|^n + sum_w f(w) |K|^w`, so the point
//! `w = 0` is the least significant digit and `h` the most significant.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::action::{regular_action, FiniteGSet};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupHom, MulRule, DEFAULT_SIZE_CAP};

/// `theta_h(f)(w) = f(h^-1 w)`.
pub fn theta(omega: &FiniteGSet, h: usize, f: &[usize]) -> Result<Vec<usize>> {
    if f.len() != omega.size() {
        return Err(Error::LengthMismatch { expected: omega.size(), got: f.len() });
    }
    omega.group().check_index(h)?;
    let hinv = omega.group().inv(h);
    Ok((0..omega.size()).map(|w| f[omega.act(hinv, w)]).collect())
}

/// Exact order `|K|^n * |H|`.
pub fn wreath_order(k_order: usize, degree: usize, h_order: usize) -> BigUint {
    BigUint::from(k_order).pow(degree as u32) * BigUint::from(h_order)
}

struct WreathRule {
    k: FiniteGroup,
    h: FiniteGroup,
    top: FiniteGSet,
    degree: usize,
    radix: Vec<usize>,
    base_order: usize,
}

impl WreathRule {
    #[inline]
    fn digit(&self, f: usize, w: usize) -> usize {
        (f / self.radix[w]) % self.k.order()
    }

    fn inverse(&self, x: usize) -> usize {
        let (h, f) = (x / self.base_order, x % self.base_order);
        let mut g = 0;
        for w in 0..self.degree {
            g += self.k.inv(self.digit(f, self.top.act(h, w))) * self.radix[w];
        }
        self.h.inv(h) * self.base_order + g
    }
}

impl MulRule for WreathRule {
    fn mul(&self, a: usize, b: usize) -> usize {
        let (h1, f1) = (a / self.base_order, a % self.base_order);
        let (h2, f2) = (b / self.base_order, b % self.base_order);
        let h1inv = self.h.inv(h1);
        let mut f = 0;
        for w in 0..self.degree {
            let x = self.digit(f1, w);
            let y = self.digit(f2, self.top.act(h1inv, w));
            f += self.k.mul(x, y) * self.radix[w];
        }
        self.h.mul(h1, h2) * self.base_order + f
    }

    fn label(&self, x: usize) -> String {
        let (h, f) = (x / self.base_order, x % self.base_order);
        let tuple: Vec<String> = (0..self.degree).map(|w| self.k.label(self.digit(f, w))).collect();
        format!("({}; {})", tuple.join(","), self.h.label(h))
    }
}

#[derive(Debug, Clone)]
pub struct WreathProduct {
    base: FiniteGroup,
    top: FiniteGSet,
    product: FiniteGroup,
    base_order: usize,
    radix: Vec<usize>,
}

pub fn build_wreath(k: &FiniteGroup, omega: &FiniteGSet) -> Result<WreathProduct> {
    build_wreath_capped(k, omega, DEFAULT_SIZE_CAP)
}

pub fn build_wreath_capped(k: &FiniteGroup, omega: &FiniteGSet, cap: u64) -> Result<WreathProduct> {
    let h = omega.group();
    let degree = omega.size();
    let order = wreath_order(k.order(), degree, h.order());
    if order > BigUint::from(cap) {
        return Err(Error::SizeLimit { order, cap });
    }
    let radix: Vec<usize> = (0..=degree).map(|i| k.order().pow(i as u32)).collect();
    let base_order = radix[degree];
    let rule = WreathRule {
        k: k.clone(),
        h: h.clone(),
        top: omega.clone(),
        degree,
        radix: radix.clone(),
        base_order,
    };
    let n = base_order * h.order();
    let inverses = (0..n).map(|x| rule.inverse(x)).collect();
    let identity = h.identity() * base_order + (0..degree).map(|w| k.identity() * radix[w]).sum::<usize>();
    let product = FiniteGroup::from_rule(n, identity, inverses, Arc::new(rule), None, None)?;
    Ok(WreathProduct { base: k.clone(), top: omega.clone(), product, base_order, radix })
}

/// `K wr_r H`, with `H` acting on itself by left multiplication.
pub fn regular_wreath(k: &FiniteGroup, h: &FiniteGroup) -> Result<WreathProduct> {
    build_wreath(k, &regular_action(h))
}

pub fn regular_wreath_capped(k: &FiniteGroup, h: &FiniteGroup, cap: u64) -> Result<WreathProduct> {
    build_wreath_capped(k, &regular_action(h), cap)
}

/// `(f, h)^-1 = (theta_{h^-1}(f^-1), h^-1)`.
pub fn wreath_inverse(w: &WreathProduct, x: usize) -> Result<usize> {
    w.product.check_index(x)?;
    let (f, h) = w.decode(x);
    let k = &w.base;
    let finv: Vec<usize> = f.iter().map(|&y| k.inv(y)).collect();
    let hinv = w.top.group().inv(h);
    w.encode(&theta(&w.top, hinv, &finv)?, hinv)
}

impl WreathProduct {
    pub fn product(&self) -> &FiniteGroup {
        &self.product
    }

    pub fn base_group(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn top(&self) -> &FiniteGSet {
        &self.top
    }

    pub fn top_group(&self) -> &FiniteGroup {
        self.top.group()
    }

    pub fn order(&self) -> usize {
        self.product.order()
    }

    /// `|K|^n`
    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// `|Omega|`
    pub fn degree(&self) -> usize {
        self.top.size()
    }

    pub fn encode(&self, f: &[usize], h: usize) -> Result<usize> {
        if f.len() != self.degree() {
            return Err(Error::LengthMismatch { expected: self.degree(), got: f.len() });
        }
        self.top_group().check_index(h)?;
        let mut x = h * self.base_order;
        for (w, &y) in f.iter().enumerate() {
            self.base.check_index(y)?;
            x += y * self.radix[w];
        }
        Ok(x)
    }

    pub fn decode(&self, x: usize) -> (Vec<usize>, usize) {
        let f = x % self.base_order;
        let tuple = (0..self.degree()).map(|w| (f / self.radix[w]) % self.base.order()).collect();
        (tuple, x / self.base_order)
    }

    pub fn theta(&self, h: usize, f: &[usize]) -> Result<Vec<usize>> {
        theta(&self.top, h, f)
    }

    /// `(f, h) -> h`
    pub fn top_projection(&self) -> GroupHom {
        let image = self.product.elements().map(|x| x / self.base_order).collect();
        GroupHom::new(self.product.clone(), self.top_group().clone(), image).expect("projection")
    }

    /// `f -> (f, e)`
    pub fn base_inclusion(&self, f: &[usize]) -> Result<usize> {
        self.encode(f, self.top_group().identity())
    }

    /// Indices of the base tuples `(f, e)`, increasing.
    pub fn base_elements(&self) -> Vec<usize> {
        let start = self.top_group().identity() * self.base_order;
        (start..start + self.base_order).collect()
    }

    /// `h -> (e, h)`
    pub fn top_inclusion(&self, h: usize) -> Result<usize> {
        self.encode(&vec![self.base.identity(); self.degree()], h)
    }

    pub fn format_element(&self, x: usize) -> String {
        self.product.label(x)
    }

    /// Parses `(t_0,...,t_{n-1}; h)` with labels (or bare indices) of the
    /// base and top groups.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let trimmed = s.trim();
        let lead = s.len() - s.trim_start().len();
        if !trimmed.starts_with('(') || !trimmed.ends_with(')') || trimmed.len() < 2 {
            return Err(Error::parse(s, lead, "expected `(t_0,...; h)`"));
        }
        let inner = &trimmed[1..trimmed.len() - 1];
        let offset = lead + 1;
        let parts = split_top_level(inner, ';');
        if parts.len() != 2 {
            return Err(Error::parse(s, offset, "expected exactly one `;`"));
        }
        let (tuple_part, tuple_at) = parts[0];
        let (top_part, top_at) = parts[1];
        let tokens = if tuple_part.trim().is_empty() { Vec::new() } else { split_top_level(tuple_part, ',') };
        if tokens.len() != self.degree() {
            return Err(Error::parse(
                s,
                offset + tuple_at,
                format!("expected {} tuple entries, found {}", self.degree(), tokens.len()),
            ));
        }
        let mut f = Vec::with_capacity(tokens.len());
        for (tok, at) in tokens {
            let y = lookup(&self.base, tok)
                .ok_or_else(|| Error::parse(s, offset + tuple_at + at, format!("unknown base element `{}`", tok.trim())))?;
            f.push(y);
        }
        let h = lookup(self.top_group(), top_part)
            .ok_or_else(|| Error::parse(s, offset + top_at, format!("unknown top element `{}`", top_part.trim())))?;
        self.encode(&f, h)
    }
}

fn lookup(g: &FiniteGroup, token: &str) -> Option<usize> {
    let t = token.trim();
    g.find_label(t).or_else(|| t.parse::<usize>().ok().filter(|&x| x < g.order()))
}

/// Splits at `sep` outside brackets; returns pieces with their byte offsets.
fn split_top_level(s: &str, sep: char) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((&s[start..i], start));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((&s[start..], start));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::natural_action;
    use crate::group::{construct_named, element_order, identify_small};

    fn named(s: &str) -> FiniteGroup {
        construct_named(s).unwrap()
    }

    fn c2_wr_c2() -> WreathProduct {
        regular_wreath(&named("C:2"), &named("C:2")).unwrap()
    }

    #[test]
    fn theta_swaps_coordinates_over_c2() {
        let w = c2_wr_c2();
        assert_eq!(w.theta(0, &[0, 1]).unwrap(), vec![0, 1]);
        assert_eq!(w.theta(1, &[0, 1]).unwrap(), vec![1, 0]);
        assert!(matches!(w.theta(1, &[0]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn c2_wr_c2_is_d4() {
        let w = c2_wr_c2();
        assert_eq!(w.order(), 8);
        let x = w.encode(&[0, 1], 1).unwrap();
        let y = w.encode(&[0, 0], 1).unwrap();
        assert_eq!(element_order(w.product(), x), 4);
        assert_eq!(element_order(w.product(), y), 2);
        assert_eq!(wreath_inverse(&w, x).unwrap(), w.encode(&[1, 0], 1).unwrap());
        assert_eq!(w.product().pow(x, 3), w.product().inv(x));
        assert_eq!(identify_small(w.product()), "D:4");
        assert!(w.product().associativity_counterexample().is_none());
    }

    #[test]
    fn orders_follow_size_law() {
        assert_eq!(regular_wreath(&named("C:1"), &named("C:1")).unwrap().order(), 1);
        assert_eq!(regular_wreath(&named("A:3"), &named("C:2")).unwrap().order(), 18);
        let s3 = named("S:3");
        let w = build_wreath(&s3, &natural_action(3, &s3).unwrap()).unwrap();
        assert_eq!(w.order(), 1296);
    }

    #[test]
    fn trivial_base_gives_top_group() {
        let h = named("S:3");
        let w = regular_wreath(&named("C:1"), &h).unwrap();
        assert_eq!(identify_small(w.product()), "S:3");
    }

    #[test]
    fn size_cap_reports_exact_order() {
        let err = regular_wreath_capped(&named("C:2"), &named("C:4"), 10).unwrap_err();
        match err {
            Error::SizeLimit { order, cap } => {
                assert_eq!(order, BigUint::from(64u32));
                assert_eq!(cap, 10);
            }
            other => panic!("unexpected {other:?}"),
        }
        let big = regular_wreath(&named("S:3"), &named("S:4")).unwrap_err();
        assert!(matches!(big, Error::SizeLimit { .. }));
    }

    #[test]
    fn inverse_formula_matches_group_inverse() {
        let w = regular_wreath(&named("S:3"), &named("C:2")).unwrap();
        for x in w.product().elements() {
            assert_eq!(wreath_inverse(&w, x).unwrap(), w.product().inv(x));
        }
    }

    #[test]
    fn projection_and_base() {
        let w = regular_wreath(&named("C:3"), &named("C:2")).unwrap();
        let p = w.top_projection();
        assert!(p.is_homomorphism() && p.is_surjective());
        assert_eq!(p.kernel(), w.base_elements());
        let b = w.base_inclusion(&[2, 1]).unwrap();
        assert_eq!(p.apply(b), 0);
    }

    #[test]
    fn print_and_parse() {
        let w = c2_wr_c2();
        let x = w.encode(&[0, 1], 1).unwrap();
        assert_eq!(w.format_element(x), "([0],[1]; [1])");
        assert_eq!(w.parse_element(" ([0], [1]; [1])").unwrap(), x);
        assert_eq!(w.parse_element("(0,1;1)").unwrap(), x);
        assert!(matches!(w.parse_element("([0]; [1])"), Err(Error::Parse { .. })));
        assert!(matches!(w.parse_element("([0],[9]; [1])"), Err(Error::Parse { position: 5, .. })));

        let v = named("V4");
        let pair = crate::group::direct_product(&named("C:2"), &named("C:2")).unwrap();
        let w2 = regular_wreath(&pair, &v).unwrap();
        for x in [0, 17, w2.order() - 1] {
            assert_eq!(w2.parse_element(&w2.format_element(x)).unwrap(), x);
        }
    }
}

//! Named group families with fixed element enumerations:
//!
//! * `C:n` — exponent `k` of the generator, index `k`.
//! * `D:n` — `r^a s^b`, index `2a + b`.
//! * `S:n`, `A:n` — permutations of `{1..n}` in lexicographic order of their
//!   one-line notation (`A:n` keeps the even ones, in the same order).
//! * `AGL:p` — `t -> at + b`, index `(a - 1) p + b`.
//! * `V4`, `Q8` — fixed tables below.

use std::sync::Arc;

use num_bigint::BigUint;

use super::{FiniteGroup, MulRule, PermRep, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};

const MAX_SYMMETRIC_DEGREE: usize = 6;
const MAX_AGL_PRIME: usize = 7;

/// Parses a group spec string (`C:n`, `D:n`, `S:n`, `A:n`, `AGL:p`, `V4`, `Q8`)
/// and builds the group.
pub fn construct_named(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    match spec {
        "V4" => return klein_four(),
        "Q8" => return quaternion(),
        _ => {}
    }
    let (family, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownGroupSpec(spec.to_string()))?;
    let n: usize = arg
        .trim()
        .parse()
        .map_err(|_| Error::UnknownGroupSpec(spec.to_string()))?;
    let out_of_range = |reason: &str| Error::SpecOutOfRange {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    match family.trim() {
        "C" => {
            if n == 0 {
                return Err(out_of_range("cyclic groups need n >= 1"));
            }
            cyclic(n)
        }
        "D" => {
            if n < 2 {
                return Err(out_of_range("dihedral groups need n >= 2"));
            }
            dihedral(n)
        }
        "S" => {
            if !(1..=MAX_SYMMETRIC_DEGREE).contains(&n) {
                return Err(out_of_range("symmetric groups are supported for 1 <= n <= 6"));
            }
            symmetric(n, false)
        }
        "A" => {
            if !(2..=MAX_SYMMETRIC_DEGREE).contains(&n) {
                return Err(out_of_range("alternating groups are supported for 2 <= n <= 6"));
            }
            symmetric(n, true)
        }
        "AGL" => {
            if !is_prime(n) || n > MAX_AGL_PRIME {
                return Err(out_of_range("AGL(1,p) needs a prime p <= 7"));
            }
            affine(n)
        }
        _ => Err(Error::UnknownGroupSpec(spec.to_string())),
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn from_mul(
    order: usize,
    mul: impl Fn(usize, usize) -> usize,
    labels: Vec<String>,
    perms: Option<PermRep>,
) -> Result<FiniteGroup> {
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(mul(a, b) as u32);
        }
    }
    FiniteGroup::from_flat_table(order, table, Some(labels), perms)
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let labels = (0..n).map(|k| format!("[{k}]")).collect();
    from_mul(n, |a, b| (a + b) % n, labels, None)
}

fn dihedral(n: usize) -> Result<FiniteGroup> {
    let order = 2 * n;
    let labels = (0..order)
        .map(|i| {
            let (a, b) = (i / 2, i % 2);
            let r = match a {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{a}"),
            };
            match (r.is_empty(), b) {
                (true, 0) => "e".to_string(),
                (true, _) => "s".to_string(),
                (false, 0) => r,
                (false, _) => format!("{r}s"),
            }
        })
        .collect();
    // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
    let mul = |x: usize, y: usize| {
        let (a, b, c, d) = (x / 2, x % 2, y / 2, y % 2);
        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
        2 * rot + (b + d) % 2
    };
    // natural action on the vertices 0..n of the n-gon
    let images = (0..order)
        .map(|x| {
            let (a, b) = (x / 2, x % 2);
            (0..n)
                .map(|i| if b == 0 { (a + i) % n } else { (a + n - i) % n })
                .collect()
        })
        .collect();
    from_mul(order, mul, labels, Some(PermRep { degree: n, images }))
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Cycle notation with points numbered from 1, `()` for the identity.
pub(crate) fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

fn symmetric(n: usize, even_only: bool) -> Result<FiniteGroup> {
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let index: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = perms.iter().map(|p| cycle_label(p)).collect();
    // (σ τ)(i) = σ(τ(i))
    let mul = |a: usize, b: usize| {
        let composed: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
        index[&composed]
    };
    let rep = PermRep { degree: n, images: perms.clone() };
    from_mul(perms.len(), mul, labels, Some(rep))
}

fn affine(p: usize) -> Result<FiniteGroup> {
    let order = p * (p - 1);
    let split = |i: usize| (i / p + 1, i % p);
    let labels = (0..order)
        .map(|i| {
            let (a, b) = split(i);
            match (a, b) {
                (1, 0) => "t".to_string(),
                (1, _) => format!("t+{b}"),
                (_, 0) => format!("{a}t"),
                _ => format!("{a}t+{b}"),
            }
        })
        .collect();
    // γ_{a,b} ∘ γ_{c,d} = γ_{ac, ad + b}
    let mul = |x: usize, y: usize| {
        let ((a, b), (c, d)) = (split(x), split(y));
        let (na, nb) = ((a * c) % p, (a * d + b) % p);
        (na - 1) * p + nb
    };
    let images = (0..order)
        .map(|i| {
            let (a, b) = split(i);
            (0..p).map(|t| (a * t + b) % p).collect()
        })
        .collect();
    from_mul(order, mul, labels, Some(PermRep { degree: p, images }))
}

fn klein_four() -> Result<FiniteGroup> {
    let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    from_mul(4, |a, b| a ^ b, labels, None)
}

fn quaternion() -> Result<FiniteGroup> {
    // index = 2u + s where u ∈ {1, i, j, k} and s is the sign bit
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| {
            let u = names[x / 2];
            if x % 2 == 0 {
                u.to_string()
            } else {
                format!("-{u}")
            }
        })
        .collect();
    // unit products: (result unit, negated?)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mul = |x: usize, y: usize| {
        let (u, neg) = UNIT[x / 2][y / 2];
        let sign = (x % 2) ^ (y % 2) ^ usize::from(neg);
        2 * u + sign
    };
    from_mul(8, mul, labels, None)
}

struct DirectRule {
    left: FiniteGroup,
    right: FiniteGroup,
}

impl MulRule for DirectRule {
    fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.right.order();
        self.left.mul(a / m, b / m) * m + self.right.mul(a % m, b % m)
    }

    fn label(&self, x: usize) -> String {
        let m = self.right.order();
        format!("({},{})", self.left.label(x / m), self.right.label(x % m))
    }
}

/// Direct product with componentwise multiplication; element `(x, y)` has
/// index `x * |b| + y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(a, b, DEFAULT_SIZE_CAP)
}

pub fn direct_product_capped(a: &FiniteGroup, b: &FiniteGroup, cap: u64) -> Result<FiniteGroup> {
    let order = BigUint::from(a.order()) * BigUint::from(b.order());
    if order > BigUint::from(cap) {
        return Err(Error::SizeLimit { order, cap });
    }
    let m = b.order();
    let n = a.order() * m;
    let inverses = (0..n).map(|x| a.inv(x / m) * m + b.inv(x % m)).collect();
    let rule = Arc::new(DirectRule { left: a.clone(), right: b.clone() });
    FiniteGroup::from_rule(n, a.identity() * m + b.identity(), inverses, rule, None, None)
}

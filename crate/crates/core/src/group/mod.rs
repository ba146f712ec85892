//! Concrete finite groups.
//!
//! Every group is a set of element indices `0..order` together with a
//! multiplication. Small groups (up to [`DENSE_LIMIT`] elements) always carry
//! a full Cayley table; larger groups produced by constructions (direct
//! products, wreath products, subgroups, quotients) keep the rule that
//! defines them and multiply on demand.

mod hom;
mod iso;
mod json;
mod named;
mod subgroup;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use hom::{GroupHom, Section};
pub use iso::{
    are_isomorphic, are_isomorphic_with, embeds_into, embeds_into_with, find_embedding, identify_small, SearchConfig,
    DEFAULT_NODE_BUDGET,
};
pub use json::GroupJson;
pub use named::{construct_named, direct_product, direct_product_capped};
pub use subgroup::{
    center, check_presentation_d4, element_order, is_normal, left_cosets, normal_core,
    quotient, subgroup_from_elements, subgroup_generated, CosetDecomposition,
};
pub(crate) use subgroup::generating_set;

/// Groups up to this order are stored with a dense Cayley table.
pub const DENSE_LIMIT: usize = 2048;

/// Default maximum number of elements of any constructed group.
pub const DEFAULT_SIZE_CAP: u64 = 10_000_000;

/// Multiplication rule for groups that are not stored as a table.
pub trait MulRule: Send + Sync {
    fn mul(&self, a: usize, b: usize) -> usize;

    /// Display label of element `x`.
    fn label(&self, x: usize) -> String;
}

/// Permutation representation: `images[x][i]` is the image of point `i`
/// under element `x`.
#[derive(Debug, Clone)]
pub struct PermRep {
    pub degree: usize,
    pub images: Vec<Vec<usize>>,
}

struct Inner {
    order: usize,
    identity: usize,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
    rule: Option<Arc<dyn MulRule>>,
    labels: Option<Vec<String>>,
    perms: Option<Arc<PermRep>>,
}

/// A finite group with canonical element indices. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("identity", &self.identity())
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a full Cayley table, `rows[i][j]` being the index
    /// of `g_i * g_j`. The identity and inverses are located from the table
    /// and associativity is checked with Light's test.
    pub fn from_table(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= order {
                    return Err(Error::InvalidTable(format!(
                        "entry ({i},{j}) = {x} is outside 0..{order}"
                    )));
                }
                table.push(x as u32);
            }
        }
        Self::from_flat_table(order, table, labels, None)
    }

    pub(crate) fn from_flat_table(
        order: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
        perms: Option<PermRep>,
    ) -> Result<Self> {
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j && at(j, e) == j))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let inv = (0..order)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {i} has no inverse")))?;
            inverses[i] = inv;
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::LengthMismatch { expected: order, got: l.len() });
            }
        }
        let group = FiniteGroup(Arc::new(Inner {
            order,
            identity,
            inverses,
            table: Some(table),
            rule: None,
            labels,
            perms: perms.map(Arc::new),
        }));
        if let Some((a, b, c)) = group.light_associativity_witness() {
            return Err(Error::NotAssociative { a, b, c });
        }
        Ok(group)
    }

    /// Builds a group from a multiplication rule that is associative by
    /// construction. Only the identity and inverse data are validated.
    pub(crate) fn from_rule(
        order: usize,
        identity: usize,
        inverses: Vec<usize>,
        rule: Arc<dyn MulRule>,
        labels: Option<Vec<String>>,
        perms: Option<PermRep>,
    ) -> Result<Self> {
        if identity >= order || inverses.len() != order {
            return Err(Error::InvalidTable("bad identity or inverse data".into()));
        }
        for x in 0..order {
            if rule.mul(identity, x) != x || rule.mul(x, identity) != x {
                return Err(Error::InvalidTable(format!("identity fails at {x}")));
            }
            let y = inverses[x];
            if y >= order || rule.mul(x, y) != identity || rule.mul(y, x) != identity {
                return Err(Error::InvalidTable(format!("inverse fails at {x}")));
            }
        }
        let table = (order <= DENSE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(order * order);
            for a in 0..order {
                for b in 0..order {
                    t.push(rule.mul(a, b) as u32);
                }
            }
            t
        });
        Ok(FiniteGroup(Arc::new(Inner {
            order,
            identity,
            inverses,
            table,
            rule: Some(rule),
            labels,
            perms: perms.map(Arc::new),
        })))
    }

    /// Same group with a replaced label array.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::LengthMismatch { expected: self.order(), got: labels.len() });
        }
        let inner = &self.0;
        Ok(FiniteGroup(Arc::new(Inner {
            order: inner.order,
            identity: inner.identity,
            inverses: inner.inverses.clone(),
            table: inner.table.clone(),
            rule: inner.rule.clone(),
            labels: Some(labels),
            perms: inner.perms.clone(),
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.0.table {
            Some(t) => t[a * self.0.order + b] as usize,
            None => self.0.rule.as_ref().expect("group without table or rule").mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.0.inverses
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let (mut base, mut acc, mut k) = (x, self.identity(), k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^-1 * b * a`
    pub fn conj(&self, b: usize, a: usize) -> usize {
        self.mul(self.inv(a), self.mul(b, a))
    }

    pub fn check_index(&self, x: usize) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: x, order: self.order() })
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn has_labels(&self) -> bool {
        self.0.labels.is_some() || self.0.rule.is_some()
    }

    pub fn label(&self, x: usize) -> String {
        if let Some(l) = &self.0.labels {
            return l[x].clone();
        }
        if let Some(r) = &self.0.rule {
            return r.label(x);
        }
        x.to_string()
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements().map(|x| self.label(x)).collect()
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.elements().find(|&x| self.label(x) == label)
    }

    pub fn table_row(&self, i: usize) -> Vec<usize> {
        self.elements().map(|j| self.mul(i, j)).collect()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|i| self.table_row(i)).collect()
    }

    pub fn perm_rep(&self) -> Option<&PermRep> {
        self.0.perms.as_deref()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn ptr_eq(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// True when both values describe the same multiplication on the same
    /// index set.
    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        if self.ptr_eq(other) {
            return true;
        }
        if self.order() != other.order() || self.identity() != other.identity() {
            return false;
        }
        match (&self.0.table, &other.0.table) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Checks `(x g) y == x (g y)` for every generator `g` of the magma and all
    /// `x, y`. By Light's argument this is equivalent to full associativity.
    fn light_associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let gens = self.magma_generators();
        let n = self.order();
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Some((x, g, y));
                    }
                }
            }
        }
        None
    }

    /// A set whose closure under right multiplication is the whole set.
    fn magma_generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut gens = Vec::new();
        let mut count = 0;
        while count < n {
            let g = (0..n).find(|&x| !seen[x]).expect("unseen element");
            gens.push(g);
            // recompute the right-multiplication closure of all gens
            seen.iter_mut().for_each(|s| *s = false);
            let mut stack: Vec<usize> = Vec::new();
            count = 0;
            for &h in &gens {
                if !seen[h] {
                    seen[h] = true;
                    count += 1;
                    stack.push(h);
                }
            }
            while let Some(x) = stack.pop() {
                for &h in &gens {
                    let y = self.mul(x, h);
                    if !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
        }
        gens
    }

    /// Brute-force associativity check over all triples. Returns the first
    /// failing triple.
    pub fn associativity_counterexample(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Identity and inverse table checks.
    pub fn check_identity_and_inverses(&self) -> bool {
        let e = self.identity();
        self.elements().all(|x| {
            let y = self.inv(x);
            self.mul(e, x) == x
                && self.mul(x, e) == x
                && self.mul(x, y) == e
                && self.mul(y, x) == e
        })
    }

    /// Number of elements of each order, indexed by order.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.order() + 1];
        for x in self.elements() {
            profile[element_order(self, x)] += 1;
        }
        profile
    }
}

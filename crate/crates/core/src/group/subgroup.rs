use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteGroup, GroupHom, MulRule, PermRep};
use crate::error::{Error, Result};

enum Lookup {
    Dense(Vec<u32>),
    Sparse(HashMap<usize, usize>),
}

impl Lookup {
    fn new(parent_order: usize, elements: &[usize]) -> Self {
        if parent_order <= 1 << 20 {
            let mut v = vec![u32::MAX; parent_order];
            for (i, &x) in elements.iter().enumerate() {
                v[x] = i as u32;
            }
            Lookup::Dense(v)
        } else {
            Lookup::Sparse(elements.iter().enumerate().map(|(i, &x)| (x, i)).collect())
        }
    }

    fn get(&self, x: usize) -> usize {
        match self {
            Lookup::Dense(v) => v[x] as usize,
            Lookup::Sparse(m) => m[&x],
        }
    }
}

struct SubRule {
    parent: FiniteGroup,
    elements: Vec<usize>,
    position: Lookup,
}

impl MulRule for SubRule {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.position.get(self.parent.mul(self.elements[a], self.elements[b]))
    }

    fn label(&self, x: usize) -> String {
        self.parent.label(self.elements[x])
    }
}

/// Wraps a set of parent elements that is already known to be a subgroup.
/// Elements are re-indexed in increasing parent order.
pub fn subgroup_from_elements(g: &FiniteGroup, elements: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    elements.dedup();
    for &x in &elements {
        g.check_index(x)?;
    }
    let position = Lookup::new(g.order(), &elements);
    let member = |x: usize| elements.binary_search(&x).is_ok();
    if !member(g.identity()) || !elements.iter().all(|&x| member(g.inv(x))) {
        return Err(Error::InvalidTable("element set is not a subgroup".into()));
    }
    let identity = position.get(g.identity());
    let inverses = elements.iter().map(|&x| position.get(g.inv(x))).collect();
    let perms = g.perm_rep().map(|rep| PermRep {
        degree: rep.degree,
        images: elements.iter().map(|&x| rep.images[x].clone()).collect(),
    });
    let order = elements.len();
    let rule = Arc::new(SubRule { parent: g.clone(), elements: elements.clone(), position });
    let sub = FiniteGroup::from_rule(order, identity, inverses, rule, None, perms)?;
    let inclusion = GroupHom::from_parts(sub.clone(), g.clone(), elements);
    Ok((sub, inclusion))
}

/// Closure of `gens` under multiplication, as elements of `g` (sorted).
pub(crate) fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut out = vec![g.identity()];
    if g.order() <= 1 << 22 {
        let mut seen = vec![false; g.order()];
        seen[g.identity()] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = g.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
    } else {
        let mut seen = std::collections::HashSet::new();
        seen.insert(g.identity());
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = g.mul(x, s);
                if seen.insert(y) {
                    out.push(y);
                }
            }
            i += 1;
        }
    }
    out.sort_unstable();
    out
}

/// Generating set picked in index order: each element outside the current
/// subgroup is added.
pub(crate) fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut inside = vec![false; g.order()];
    inside[g.identity()] = true;
    for x in g.elements() {
        if !inside[x] {
            gens.push(x);
            for y in closure(g, &gens) {
                inside[y] = true;
            }
        }
    }
    gens
}

/// Subgroup generated by `gens` together with its inclusion into `g`.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
    for &x in gens {
        g.check_index(x)?;
    }
    subgroup_from_elements(g, &closure(g, gens))
}

/// Least `k >= 1` with `x^k = e`.
pub fn element_order(g: &FiniteGroup, x: usize) -> usize {
    let mut k = 1;
    let mut y = x;
    while y != g.identity() {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

fn membership(g: &FiniteGroup, h: &GroupHom) -> Vec<bool> {
    let mut member = vec![false; g.order()];
    for &x in h.images() {
        member[x] = true;
    }
    member
}

/// Whether the image of `h` is normal in `g`; on failure returns the pair
/// `(g, n)` with `g n g^-1` outside the image.
pub fn is_normal(g: &FiniteGroup, h: &GroupHom) -> std::result::Result<(), (usize, usize)> {
    let member = membership(g, h);
    let image = h.image_set();
    for x in g.elements() {
        for &n in &image {
            if !member[g.mul(x, g.mul(n, g.inv(x)))] {
                return Err((x, n));
            }
        }
    }
    Ok(())
}

/// Left cosets `xH` of a subgroup, numbered by their minimal member.
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    /// Coset number of each element of the ambient group.
    pub coset_of: Vec<usize>,
    /// Minimal member of each coset.
    pub representatives: Vec<usize>,
}

impl CosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

pub fn left_cosets(g: &FiniteGroup, h: &GroupHom) -> CosetDecomposition {
    let sub = h.image_set();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = representatives.len();
        representatives.push(x);
        for &s in &sub {
            coset_of[g.mul(x, s)] = id;
        }
    }
    CosetDecomposition { coset_of, representatives }
}

/// Largest normal subgroup of `g` inside the image of `h`: the intersection
/// of all conjugates.
pub fn normal_core(g: &FiniteGroup, h: &GroupHom) -> Result<(FiniteGroup, GroupHom)> {
    let member = membership(g, h);
    let cosets = left_cosets(g, h);
    let core: Vec<usize> = h
        .image_set()
        .into_iter()
        .filter(|&x| cosets.representatives.iter().all(|&t| member[g.conj(x, t)]))
        .collect();
    subgroup_from_elements(g, &core)
}

struct QuotientRule {
    parent: FiniteGroup,
    representatives: Vec<usize>,
    coset_of: Vec<usize>,
}

impl MulRule for QuotientRule {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.coset_of[self.parent.mul(self.representatives[a], self.representatives[b])]
    }

    fn label(&self, x: usize) -> String {
        format!("{}N", self.parent.label(self.representatives[x]))
    }
}

/// Coset group `g / n` with its projection. Coset `i` has the `i`-th
/// smallest minimal member as representative.
pub fn quotient(g: &FiniteGroup, n: &GroupHom) -> Result<(FiniteGroup, GroupHom)> {
    if let Err((x, y)) = is_normal(g, n) {
        return Err(Error::NonNormalSubgroup { g: x, n: y });
    }
    let cosets = left_cosets(g, n);
    let order = cosets.len();
    let reps = cosets.representatives.clone();
    let identity = cosets.coset_of[g.identity()];
    let inverses = reps.iter().map(|&r| cosets.coset_of[g.inv(r)]).collect();
    let rule = Arc::new(QuotientRule {
        parent: g.clone(),
        representatives: reps,
        coset_of: cosets.coset_of.clone(),
    });
    let q = FiniteGroup::from_rule(order, identity, inverses, rule, None, None)?;
    let projection = GroupHom::from_parts(g.clone(), q.clone(), cosets.coset_of);
    Ok((q, projection))
}

pub fn center(g: &FiniteGroup) -> Vec<usize> {
    g.elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

/// `x^4 = y^2 = e`, `y x y^-1 = x^-1` and `<x, y> = g`.
pub fn check_presentation_d4(g: &FiniteGroup, x: usize, y: usize) -> Result<bool> {
    g.check_index(x)?;
    g.check_index(y)?;
    let e = g.identity();
    let relations = g.pow(x, 4) == e
        && g.pow(y, 2) == e
        && g.mul(y, g.mul(x, g.inv(y))) == g.inv(x);
    Ok(relations && closure(g, &[x, y]).len() == g.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_named;

    fn perm_index(g: &FiniteGroup, images: &[usize]) -> usize {
        let rep = g.perm_rep().unwrap();
        rep.images.iter().position(|p| p == images).unwrap()
    }

    #[test]
    fn empty_generators_give_trivial_subgroup() {
        let g = construct_named("S:4").unwrap();
        let (h, inc) = subgroup_generated(&g, &[]).unwrap();
        assert_eq!(h.order(), 1);
        assert_eq!(inc.images(), &[g.identity()]);
    }

    #[test]
    fn rotation_generates_cyclic_subgroup_of_d4() {
        let d4 = construct_named("D:4").unwrap();
        let r = d4.find_label("r").unwrap();
        let (h, inc) = subgroup_generated(&d4, &[r]).unwrap();
        assert_eq!(h.order(), 4);
        assert!(inc.is_homomorphism());
        assert!(inc.is_injective());
    }

    #[test]
    fn transposition_and_three_cycle_generate_order_six() {
        let s4 = construct_named("S:4").unwrap();
        let t = perm_index(&s4, &[1, 0, 2, 3]);
        let c = perm_index(&s4, &[1, 2, 0, 3]);
        let (h, _) = subgroup_generated(&s4, &[t, c]).unwrap();
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn core_of_point_stabilizer_in_s4_is_trivial() {
        let s4 = construct_named("S:4").unwrap();
        let stab: Vec<usize> = s4
            .elements()
            .filter(|&x| s4.perm_rep().unwrap().images[x][3] == 3)
            .collect();
        let (_, inc) = subgroup_from_elements(&s4, &stab).unwrap();
        let (core, _) = normal_core(&s4, &inc).unwrap();
        assert_eq!(core.order(), 1);
    }

    #[test]
    fn core_of_normal_subgroup_is_itself() {
        let d4 = construct_named("D:4").unwrap();
        let (_, inc) = subgroup_generated(&d4, &[d4.find_label("r").unwrap()]).unwrap();
        let (core, core_inc) = normal_core(&d4, &inc).unwrap();
        assert_eq!(core.order(), 4);
        assert_eq!(core_inc.image_set(), inc.image_set());
        let whole = GroupHom::identity(&d4);
        assert_eq!(normal_core(&d4, &whole).unwrap().0.order(), 8);
    }

    #[test]
    fn quotients() {
        let s3 = construct_named("S:3").unwrap();
        let a3: Vec<usize> = s3
            .elements()
            .filter(|&x| element_order(&s3, x) != 2)
            .collect();
        let (_, inc) = subgroup_from_elements(&s3, &a3).unwrap();
        let (q, proj) = quotient(&s3, &inc).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_homomorphism());
        // exactness in the middle: quotient ∘ inclusion is trivial
        assert!(inc.then(&proj).unwrap().images().iter().all(|&x| x == q.identity()));

        let (whole_q, _) = quotient(&s3, &GroupHom::identity(&s3)).unwrap();
        assert_eq!(whole_q.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = construct_named("S:3").unwrap();
        let (_, inc) = subgroup_generated(&s3, &[1]).unwrap();
        assert!(matches!(quotient(&s3, &inc), Err(Error::NonNormalSubgroup { .. })));
    }

    #[test]
    fn d4_mod_center_is_klein() {
        let d4 = construct_named("D:4").unwrap();
        let z = center(&d4);
        assert_eq!(z.len(), 2);
        let (_, inc) = subgroup_from_elements(&d4, &z).unwrap();
        let (q, _) = quotient(&d4, &inc).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.elements().all(|x| element_order(&q, x) <= 2));
    }

    #[test]
    fn d4_presentation_holds_for_r_and_s() {
        let d4 = construct_named("D:4").unwrap();
        let (r, s) = (d4.find_label("r").unwrap(), d4.find_label("s").unwrap());
        assert!(check_presentation_d4(&d4, r, s).unwrap());
        assert!(!check_presentation_d4(&d4, s, r).unwrap());
    }
}

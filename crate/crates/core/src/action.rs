//! Finite left actions of groups on point sets `0..size`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{left_cosets, FiniteGroup, GroupHom, GroupJson, Section};

/// A left action of `group` on the points `0..size`.
#[derive(Debug, Clone)]
pub struct FiniteGSet {
    group: FiniteGroup,
    size: usize,
    act: Vec<u32>,
    point_labels: Option<Vec<String>>,
}

impl FiniteGSet {
    /// `act[h][w]` is the image of point `w` under `h`. Both action axioms
    /// are checked.
    pub fn new(
        group: FiniteGroup,
        size: usize,
        act: Vec<Vec<usize>>,
        point_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::InvalidAction("empty point set".into()));
        }
        if act.len() != group.order() {
            return Err(Error::LengthMismatch { expected: group.order(), got: act.len() });
        }
        let mut flat = Vec::with_capacity(group.order() * size);
        for row in &act {
            if row.len() != size {
                return Err(Error::LengthMismatch { expected: size, got: row.len() });
            }
            for &w in row {
                if w >= size {
                    return Err(Error::InvalidAction(format!("point {w} outside 0..{size}")));
                }
                flat.push(w as u32);
            }
        }
        Self::from_flat(group, size, flat, point_labels)
    }

    fn from_flat(group: FiniteGroup, size: usize, act: Vec<u32>, point_labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &point_labels {
            if l.len() != size {
                return Err(Error::LengthMismatch { expected: size, got: l.len() });
            }
        }
        let set = FiniteGSet { group, size, act, point_labels };
        set.check_axioms()?;
        Ok(set)
    }

    /// The identity fixes every point and `h1 (h2 w) = (h1 h2) w`. The second
    /// law is checked for `h1` in a generating set and all `h2`, which forces
    /// it for every `h1` by induction on word length.
    pub fn check_axioms(&self) -> Result<()> {
        let g = &self.group;
        let e = g.identity();
        if let Some(w) = (0..self.size).find(|&w| self.act(e, w) != w) {
            return Err(Error::InvalidAction(format!("identity moves point {w}")));
        }
        for s in crate::group::generating_set(g) {
            for h in g.elements() {
                let sh = g.mul(s, h);
                for w in 0..self.size {
                    if self.act(s, self.act(h, w)) != self.act(sh, w) {
                        return Err(Error::InvalidAction(format!(
                            "composition fails for elements {s}, {h} at point {w}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, h: usize, w: usize) -> usize {
        self.act[h * self.size + w] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.group
            .elements()
            .map(|h| (0..self.size).map(|w| self.act(h, w)).collect())
            .collect()
    }

    pub fn point_label(&self, w: usize) -> String {
        match &self.point_labels {
            Some(l) => l[w].clone(),
            None => w.to_string(),
        }
    }

    pub fn point_labels(&self) -> Option<&[String]> {
        self.point_labels.as_deref()
    }

    pub fn with_point_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::LengthMismatch { expected: self.size, got: labels.len() });
        }
        self.point_labels = Some(labels);
        Ok(self)
    }

    pub fn orbit(&self, w: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size];
        for h in self.group.elements() {
            seen[self.act(h, w)] = true;
        }
        (0..self.size).filter(|&v| seen[v]).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.size
    }

    pub fn stabilizer(&self, w: usize) -> Vec<usize> {
        self.group.elements().filter(|&h| self.act(h, w) == w).collect()
    }

    /// Each group element fixing some point is the identity.
    pub fn is_free(&self) -> bool {
        let e = self.group.identity();
        self.group
            .elements()
            .all(|h| h == e || (0..self.size).all(|w| self.act(h, w) != w))
    }
}

/// `H` acting on itself by left multiplication.
pub fn regular_action(h: &FiniteGroup) -> FiniteGSet {
    let n = h.order();
    let mut act = Vec::with_capacity(n * n);
    for g in h.elements() {
        act.extend(h.elements().map(|x| h.mul(g, x) as u32));
    }
    let labels = h.labels();
    FiniteGSet { group: h.clone(), size: n, act, point_labels: Some(labels) }
}

/// Left translation on the left cosets of a subgroup, cosets numbered by
/// minimal member, with those minimal members as the section.
pub fn coset_action(g: &FiniteGroup, h: &GroupHom) -> Result<(FiniteGSet, Section)> {
    let cosets = left_cosets(g, h);
    let size = cosets.len();
    let mut act = Vec::with_capacity(g.order() * size);
    for x in g.elements() {
        act.extend(cosets.representatives.iter().map(|&r| cosets.coset_of[g.mul(x, r)] as u32));
    }
    let labels = cosets
        .representatives
        .iter()
        .map(|&r| format!("{}H", g.label(r)))
        .collect();
    let set = FiniteGSet::from_flat(g.clone(), size, act, Some(labels))?;
    let section = Section::new(g.clone(), cosets.representatives)?;
    Ok((set, section))
}

/// Action of a permutation group on `{1..n}` (points `0..n`).
pub fn natural_action(n: usize, g: &FiniteGroup) -> Result<FiniteGSet> {
    let rep = g.perm_rep().ok_or(Error::MissingPermutationData)?;
    if rep.degree != n {
        return Err(Error::InvalidAction(format!(
            "group permutes {} points, not {n}",
            rep.degree
        )));
    }
    let act = rep.images.iter().flatten().map(|&w| w as u32).collect();
    let labels = (1..=n).map(|i| i.to_string()).collect();
    FiniteGSet::from_flat(g.clone(), n, act, Some(labels))
}

/// First `(h, w)` with `xi(h w) != phi(h) xi(w)`.
pub fn equivariance_counterexample(
    xi: &[usize],
    omega: &FiniteGSet,
    omega_hat: &FiniteGSet,
    phi: &GroupHom,
) -> Option<(usize, usize)> {
    for h in omega.group().elements() {
        let ph = phi.apply(h);
        for w in 0..omega.size() {
            if xi[omega.act(h, w)] != omega_hat.act(ph, xi[w]) {
                return Some((h, w));
            }
        }
    }
    None
}

/// Whether `xi` is a bijection `omega -> omega_hat` with
/// `xi(h w) = phi(h) xi(w)` for all `h` and `w`.
pub fn check_equivariant(xi: &[usize], omega: &FiniteGSet, omega_hat: &FiniteGSet, phi: &GroupHom) -> bool {
    if xi.len() != omega.size() || omega.size() != omega_hat.size() {
        return false;
    }
    let mut hit = vec![false; omega_hat.size()];
    for &v in xi {
        if v >= hit.len() || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    phi.domain().same_as(omega.group())
        && phi.codomain().same_as(omega_hat.group())
        && equivariance_counterexample(xi, omega, omega_hat, phi).is_none()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSource {
    Inline(GroupJson),
    File { file: String },
}

/// Exchange format for actions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionJson {
    pub group: GroupSource,
    pub size: usize,
    pub act: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_labels: Option<Vec<String>>,
}

impl ActionJson {
    pub fn from_gset(set: &FiniteGSet) -> Self {
        ActionJson {
            group: GroupSource::Inline(GroupJson::from_group(set.group())),
            size: set.size(),
            act: set.table(),
            point_labels: set.point_labels().map(|l| l.to_vec()),
        }
    }

    /// File references are resolved relative to `base_dir`.
    pub fn into_gset(self, base_dir: &Path) -> Result<FiniteGSet> {
        let group = match self.group {
            GroupSource::Inline(j) => j.into_group()?,
            GroupSource::File { file } => {
                let text = std::fs::read_to_string(base_dir.join(file))?;
                GroupJson::parse(&text)?
            }
        };
        FiniteGSet::new(group, self.size, self.act, self.point_labels)
    }

    pub fn load(path: &Path) -> Result<FiniteGSet> {
        let text = std::fs::read_to_string(path)?;
        let parsed: ActionJson = serde_json::from_str(&text)?;
        parsed.into_gset(path.parent().unwrap_or(Path::new(".")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{construct_named, subgroup_from_elements};

    fn named(s: &str) -> FiniteGroup {
        construct_named(s).unwrap()
    }

    fn axioms_by_brute_force(set: &FiniteGSet) -> bool {
        let g = set.group();
        g.elements().all(|a| {
            g.elements().all(|b| (0..set.size()).all(|w| set.act(a, set.act(b, w)) == set.act(g.mul(a, b), w)))
        })
    }

    #[test]
    fn regular_actions() {
        let c2 = regular_action(&named("C:2"));
        assert_eq!(c2.size(), 2);
        assert_eq!((c2.act(1, 0), c2.act(1, 1)), (1, 0));
        assert_eq!(regular_action(&named("C:1")).size(), 1);
        let s3 = named("S:3");
        let r = regular_action(&s3);
        assert_eq!(r.table(), s3.table());
        assert!(r.is_free() && r.is_transitive());
    }

    #[test]
    fn coset_action_of_point_stabilizer() {
        let s4 = named("S:4");
        let stab: Vec<usize> = s4.elements().filter(|&x| s4.perm_rep().unwrap().images[x][3] == 3).collect();
        let (_, inc) = subgroup_from_elements(&s4, &stab).unwrap();
        let (set, reps) = coset_action(&s4, &inc).unwrap();
        assert_eq!(set.size(), 4);
        assert!(set.is_transitive());
        assert!(axioms_by_brute_force(&set));
        let cosets = left_cosets(&s4, &inc);
        for w in 0..4 {
            assert_eq!(cosets.coset_of[reps.at(w)], w);
        }
        let (whole, _) = coset_action(&s4, &GroupHom::identity(&s4)).unwrap();
        assert_eq!(whole.size(), 1);
    }

    #[test]
    fn natural_actions() {
        let s3 = natural_action(3, &named("S:3")).unwrap();
        assert!(s3.is_transitive());
        assert_eq!(s3.stabilizer(0).len(), 2);
        assert!(natural_action(4, &named("A:4")).unwrap().is_transitive());
        let agl = natural_action(3, &named("AGL:3")).unwrap();
        assert!(agl.is_transitive() && axioms_by_brute_force(&agl));
        assert!(matches!(natural_action(2, &named("C:2")), Err(Error::MissingPermutationData)));
    }

    #[test]
    fn rejects_non_actions() {
        let c2 = named("C:2");
        assert!(FiniteGSet::new(c2.clone(), 2, vec![vec![1, 0], vec![1, 0]], None).is_err());
        let c3 = named("C:3");
        // generator acts as a transposition, which has the wrong order
        assert!(FiniteGSet::new(c3, 2, vec![vec![0, 1], vec![1, 0], vec![1, 0]], None).is_err());
    }

    #[test]
    fn equivariance() {
        let s3 = named("S:3");
        let set = natural_action(3, &s3).unwrap();
        let id = GroupHom::identity(&s3);
        assert!(check_equivariant(&[0, 1, 2], &set, &set, &id));
        assert!(!check_equivariant(&[1, 0, 2], &set, &set, &id));
        assert!(!check_equivariant(&[0, 0, 2], &set, &set, &id));
    }

    #[test]
    fn json_round_trip() {
        let set = natural_action(3, &named("AGL:3")).unwrap();
        let text = serde_json::to_string(&ActionJson::from_gset(&set)).unwrap();
        let back: ActionJson = serde_json::from_str(&text).unwrap();
        let back = back.into_gset(Path::new(".")).unwrap();
        assert_eq!(back.table(), set.table());
    }
}

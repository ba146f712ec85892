use std::collections::HashSet;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// A map between finite groups recorded element by element.
#[derive(Debug, Clone)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    image: Vec<usize>,
}

impl GroupHom {
    /// Records a map after cheap checks (length, range, identity). The
    /// homomorphism law itself is checked by [`GroupHom::new_checked`] or
    /// [`GroupHom::homomorphism_counterexample`].
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != domain.order() {
            return Err(Error::LengthMismatch { expected: domain.order(), got: image.len() });
        }
        for &y in &image {
            codomain.check_index(y)?;
        }
        if image[domain.identity()] != codomain.identity() {
            return Err(Error::NotHomomorphism { a: domain.identity(), b: domain.identity() });
        }
        Ok(GroupHom { domain, codomain, image })
    }

    /// Like [`GroupHom::new`] but also checks the homomorphism law on every
    /// pair of domain elements.
    pub fn new_checked(domain: FiniteGroup, codomain: FiniteGroup, image: Vec<usize>) -> Result<Self> {
        let hom = Self::new(domain, codomain, image)?;
        match hom.homomorphism_counterexample() {
            Some((a, b)) => Err(Error::NotHomomorphism { a, b }),
            None => Ok(hom),
        }
    }

    /// Builds a map without any validation; used where the construction
    /// itself guarantees the contract and the test suite checks it.
    pub(crate) fn from_parts(domain: FiniteGroup, codomain: FiniteGroup, image: Vec<usize>) -> Self {
        debug_assert_eq!(image.len(), domain.order());
        GroupHom { domain, codomain, image }
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom::from_parts(g.clone(), g.clone(), g.elements().collect())
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// First pair `(a, b)` in lexicographic order with
    /// `f(ab) != f(a) f(b)`.
    pub fn homomorphism_counterexample(&self) -> Option<(usize, usize)> {
        let (d, c) = (&self.domain, &self.codomain);
        for a in d.elements() {
            let fa = self.image[a];
            for b in d.elements() {
                if self.image[d.mul(a, b)] != c.mul(fa, self.image[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_counterexample().is_none()
    }

    /// Distinct image elements, sorted.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.image.iter().copied().collect::<HashSet<_>>().into_iter().collect();
        v.sort_unstable();
        v
    }

    pub fn image_order(&self) -> usize {
        self.image.iter().collect::<HashSet<_>>().len()
    }

    pub fn is_injective(&self) -> bool {
        self.image_order() == self.domain.order()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.codomain.order()
    }

    /// Domain elements mapping to the identity, sorted.
    pub fn kernel(&self) -> Vec<usize> {
        let e = self.codomain.identity();
        self.domain.elements().filter(|&x| self.image[x] == e).collect()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if !self.codomain.same_as(&other.domain) {
            return Err(Error::InvalidTable("composition of incompatible maps".into()));
        }
        let image = self.image.iter().map(|&y| other.image[y]).collect();
        Ok(GroupHom::from_parts(self.domain.clone(), other.codomain.clone(), image))
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !(self.is_injective() && self.is_surjective()) {
            return Err(Error::NotIsomorphism);
        }
        let mut inv = vec![0; self.codomain.order()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Ok(GroupHom::from_parts(self.codomain.clone(), self.domain.clone(), inv))
    }

    /// Preimage lookup for an injective map: `lookup[y] = Some(x)` with
    /// `f(x) = y`.
    pub fn preimage_table(&self) -> Vec<Option<usize>> {
        let mut table = vec![None; self.codomain.order()];
        for (x, &y) in self.image.iter().enumerate() {
            table[y].get_or_insert(x);
        }
        table
    }
}

/// A right inverse `s` of a surjection onto a group or a finite index set.
/// It is not required to be a homomorphism.
#[derive(Debug, Clone)]
pub struct Section {
    to: FiniteGroup,
    choice: Vec<usize>,
}

impl Section {
    pub fn new(to: FiniteGroup, choice: Vec<usize>) -> Result<Self> {
        for &x in &choice {
            to.check_index(x)?;
        }
        Ok(Section { to, choice })
    }

    /// Section of `eps` given explicitly; checks `eps(choice[q]) = q`.
    pub fn for_surjection(eps: &GroupHom, choice: Vec<usize>) -> Result<Self> {
        if choice.len() != eps.codomain().order() {
            return Err(Error::LengthMismatch { expected: eps.codomain().order(), got: choice.len() });
        }
        let s = Section::new(eps.domain().clone(), choice)?;
        s.check_inverts(eps)?;
        Ok(s)
    }

    pub fn check_inverts(&self, eps: &GroupHom) -> Result<()> {
        if self.choice.len() != eps.codomain().order() {
            return Err(Error::LengthMismatch { expected: eps.codomain().order(), got: self.choice.len() });
        }
        match (0..self.choice.len()).find(|&q| eps.apply(self.choice[q]) != q) {
            Some(q) => Err(Error::SectionMismatch { at: q }),
            None => Ok(()),
        }
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.to
    }

    pub fn choices(&self) -> &[usize] {
        &self.choice
    }

    pub fn len(&self) -> usize {
        self.choice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choice.is_empty()
    }

    #[inline]
    pub fn at(&self, q: usize) -> usize {
        self.choice[q]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::construct_named;

    #[test]
    fn checked_construction_rejects_non_homs() {
        let c4 = construct_named("C:4").unwrap();
        // x -> 2x is a hom, x -> x^2 coincides here; x -> (x == 1) is not
        assert!(GroupHom::new_checked(c4.clone(), c4.clone(), vec![0, 2, 0, 2]).is_ok());
        let err = GroupHom::new_checked(c4.clone(), c4.clone(), vec![0, 1, 0, 0]).unwrap_err();
        assert!(matches!(err, Error::NotHomomorphism { a: 1, b: 1 }));
    }

    #[test]
    fn identity_must_map_to_identity() {
        let c2 = construct_named("C:2").unwrap();
        assert!(GroupHom::new(c2.clone(), c2.clone(), vec![1, 0]).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let c5 = construct_named("C:5").unwrap();
        let double = GroupHom::new_checked(c5.clone(), c5.clone(), (0..5).map(|x| 2 * x % 5).collect()).unwrap();
        let inv = double.inverse().unwrap();
        let id = double.then(&inv).unwrap();
        assert_eq!(id.images(), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn section_mismatch_is_reported() {
        let c4 = construct_named("C:4").unwrap();
        let c2 = construct_named("C:2").unwrap();
        let eps = GroupHom::new_checked(c4, c2, vec![0, 1, 0, 1]).unwrap();
        assert!(Section::for_surjection(&eps, vec![2, 3]).is_ok());
        assert!(matches!(
            Section::for_surjection(&eps, vec![0, 2]),
            Err(Error::SectionMismatch { at: 1 })
        ));
    }
}

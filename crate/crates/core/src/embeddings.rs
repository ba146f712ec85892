//! Embeddings of extensions into wreath products, the transport of wreath
//! products along isomorphisms, and the solvability test by embedding.

use rand::Rng;
use serde::Serialize;

use crate::action::{check_equivariant, equivariance_counterexample, natural_action, FiniteGSet};
use crate::error::{Error, Result};
use crate::group::{
    construct_named, embeds_into, left_cosets, normal_core, quotient, FiniteGroup, GroupHom, Section,
    DEFAULT_SIZE_CAP,
};
use crate::wreath::{build_wreath_capped, regular_wreath_capped, WreathProduct};

/// `1 -> N -> G -> Q -> 1`
#[derive(Debug, Clone)]
pub struct ShortExactSequence {
    iota: GroupHom,
    eps: GroupHom,
}

impl ShortExactSequence {
    /// Checks that `iota` is an injective homomorphism, `eps` a surjective
    /// homomorphism, and that the image of `iota` is the kernel of `eps`.
    pub fn new(iota: GroupHom, eps: GroupHom) -> Result<Self> {
        if !iota.codomain().same_as(eps.domain()) {
            return Err(Error::InvalidTable("maps do not compose".into()));
        }
        for f in [&iota, &eps] {
            if let Some((a, b)) = f.homomorphism_counterexample() {
                return Err(Error::NotHomomorphism { a, b });
            }
        }
        if let Some((a, b)) = first_collision(&iota) {
            return Err(Error::NotInjective { a, b });
        }
        if !eps.is_surjective() {
            return Err(Error::NotSurjective);
        }
        if iota.image_set() != eps.kernel() {
            return Err(Error::InvalidTable("image of the inclusion is not the kernel".into()));
        }
        Ok(ShortExactSequence { iota, eps })
    }

    /// `N -> G -> G/N` for a normal subgroup given by its inclusion.
    pub fn from_normal_subgroup(inclusion: &GroupHom) -> Result<Self> {
        let (_, projection) = quotient(inclusion.codomain(), inclusion)?;
        Ok(ShortExactSequence { iota: inclusion.clone(), eps: projection })
    }

    pub fn n(&self) -> &FiniteGroup {
        self.iota.domain()
    }

    pub fn g(&self) -> &FiniteGroup {
        self.iota.codomain()
    }

    pub fn q(&self) -> &FiniteGroup {
        self.eps.codomain()
    }

    pub fn iota(&self) -> &GroupHom {
        &self.iota
    }

    pub fn eps(&self) -> &GroupHom {
        &self.eps
    }
}

fn first_collision(f: &GroupHom) -> Option<(usize, usize)> {
    let mut seen = vec![None; f.codomain().order()];
    for x in f.domain().elements() {
        match seen[f.apply(x)] {
            Some(y) => return Some((y, x)),
            None => seen[f.apply(x)] = Some(x),
        }
    }
    None
}

/// Minimal-index preimage of every `q`, except that the identity of `Q` is
/// sent to the identity of `G`.
pub fn default_section(eps: &GroupHom) -> Result<Section> {
    let q = eps.codomain();
    let mut choice = vec![usize::MAX; q.order()];
    for x in eps.domain().elements() {
        let y = eps.apply(x);
        if choice[y] == usize::MAX {
            choice[y] = x;
        }
    }
    if choice.contains(&usize::MAX) {
        return Err(Error::NotSurjective);
    }
    let e = eps.domain().identity();
    if eps.apply(e) == q.identity() {
        choice[q.identity()] = e;
    }
    Section::for_surjection(eps, choice)
}

/// The default section with some values replaced, given as `(q, g)` pairs.
pub fn section_with_overrides(eps: &GroupHom, overrides: &[(usize, usize)]) -> Result<Section> {
    let mut choice = default_section(eps)?.choices().to_vec();
    for &(q, g) in overrides {
        eps.codomain().check_index(q)?;
        eps.domain().check_index(g)?;
        choice[q] = g;
    }
    Section::for_surjection(eps, choice)
}

/// Preimages of each element of `Q`, sorted.
fn fibres(eps: &GroupHom) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); eps.codomain().order()];
    for x in eps.domain().elements() {
        out[eps.apply(x)].push(x);
    }
    out
}

/// Every section of `eps`, in lexicographic order of choices. Intended for
/// small quotients only.
pub fn all_sections(eps: &GroupHom) -> Result<Vec<Section>> {
    let fibres = fibres(eps);
    let mut out = Vec::new();
    let mut idx = vec![0usize; fibres.len()];
    loop {
        let choice = idx.iter().zip(&fibres).map(|(&i, f)| f[i]).collect();
        out.push(Section::for_surjection(eps, choice)?);
        let mut pos = fibres.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < fibres[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn random_section<R: Rng>(eps: &GroupHom, rng: &mut R) -> Result<Section> {
    let choice = fibres(eps)
        .iter()
        .map(|f| f[rng.gen_range(0..f.len())])
        .collect();
    Section::for_surjection(eps, choice)
}

pub fn kk_embedding(ses: &ShortExactSequence, s: &Section) -> Result<(WreathProduct, GroupHom)> {
    kk_embedding_capped(ses, s, DEFAULT_SIZE_CAP)
}

/// `phi(g) = (sigma_g, eps(g))` into `N wr_r Q`, where
/// `sigma_g(q) = s(q)^-1 g s(eps(g)^-1 q)` read back in `N`.
pub fn kk_embedding_capped(ses: &ShortExactSequence, s: &Section, cap: u64) -> Result<(WreathProduct, GroupHom)> {
    s.check_inverts(&ses.eps)?;
    let w = regular_wreath_capped(ses.n(), ses.q(), cap)?;
    let (g, q) = (ses.g(), ses.q());
    let back = ses.iota.preimage_table();
    let mut image = Vec::with_capacity(g.order());
    for x in g.elements() {
        let ex = ses.eps.apply(x);
        let exinv = q.inv(ex);
        let mut sigma = Vec::with_capacity(q.order());
        for p in q.elements() {
            let value = g.mul(g.inv(s.at(p)), g.mul(x, s.at(q.mul(exinv, p))));
            let n = back[value].ok_or(Error::NotWellDefined { point: p, value })?;
            sigma.push(n);
        }
        image.push(w.encode(&sigma, ex)?);
    }
    let phi = GroupHom::new(g.clone(), w.product().clone(), image)?;
    Ok((w, phi))
}

/// Data of the embedding of `G` into `H_K wr_Omega G/M`, `M` the core of
/// `H_K` and `Omega` the left cosets of `H_K`.
#[derive(Debug, Clone)]
pub struct OmegaEmbedding {
    pub wreath: WreathProduct,
    pub phi: GroupHom,
    pub core: GroupHom,
    pub projection: GroupHom,
    pub section: Section,
}

pub fn omega_embedding(g: &FiniteGroup, h_k: &GroupHom, s: Option<&Section>) -> Result<OmegaEmbedding> {
    omega_embedding_capped(g, h_k, s, DEFAULT_SIZE_CAP)
}

/// `phi(r) = (sigma_r, eps(r))` with
/// `sigma_r(w) = s(w)^-1 r s(eps(r)^-1 w)`.
///
/// `G/M` acts on cosets through any lift: for `m` in `M`, `m x H_K = x H_K`
/// because `M` is normal and contained in `H_K`. `s` picks one member of each
/// coset; by default the minimal one.
pub fn omega_embedding_capped(
    g: &FiniteGroup,
    h_k: &GroupHom,
    s: Option<&Section>,
    cap: u64,
) -> Result<OmegaEmbedding> {
    let (_, core) = normal_core(g, h_k)?;
    let (q, projection) = quotient(g, &core)?;
    let cosets = left_cosets(g, h_k);
    let size = cosets.len();
    let section = match s {
        Some(s) => s.clone(),
        None => Section::new(g.clone(), cosets.representatives.clone())?,
    };
    if section.len() != size {
        return Err(Error::LengthMismatch { expected: size, got: section.len() });
    }
    if let Some(w) = (0..size).find(|&w| cosets.coset_of[section.at(w)] != w) {
        return Err(Error::SectionMismatch { at: w });
    }
    let lift = default_section(&projection)?;
    let act: Vec<Vec<usize>> = q
        .elements()
        .map(|y| {
            cosets
                .representatives
                .iter()
                .map(|&r| cosets.coset_of[g.mul(lift.at(y), r)])
                .collect()
        })
        .collect();
    let labels = cosets.representatives.iter().map(|&r| format!("{}H", g.label(r))).collect();
    let omega = FiniteGSet::new(q.clone(), size, act, Some(labels))?;
    let base = h_k.domain();
    let w = build_wreath_capped(base, &omega, cap)?;
    let back = h_k.preimage_table();
    let mut image = Vec::with_capacity(g.order());
    for x in g.elements() {
        let ex = projection.apply(x);
        let exinv = q.inv(ex);
        let mut sigma = Vec::with_capacity(size);
        for p in 0..size {
            let value = g.mul(g.inv(section.at(p)), g.mul(x, section.at(omega.act(exinv, p))));
            sigma.push(back[value].ok_or(Error::NotWellDefined { point: p, value })?);
        }
        image.push(w.encode(&sigma, ex)?);
    }
    let phi = GroupHom::new(g.clone(), w.product().clone(), image)?;
    Ok(OmegaEmbedding { wreath: w, phi, core, projection, section })
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbeddingReport {
    #[serde(skip)]
    pub hom: GroupHom,
    pub is_homomorphism: bool,
    pub is_injective: bool,
    pub image_order: usize,
    pub wreath_order: usize,
    pub image_is_full: bool,
    pub counterexample: Option<(usize, usize)>,
}

impl EmbeddingReport {
    pub fn is_embedding(&self) -> bool {
        self.is_homomorphism && self.is_injective
    }
}

pub fn verify_embedding(phi: &GroupHom) -> EmbeddingReport {
    let counterexample = phi.homomorphism_counterexample();
    let image_order = phi.image_order();
    let wreath_order = phi.codomain().order();
    EmbeddingReport {
        hom: phi.clone(),
        is_homomorphism: counterexample.is_none(),
        is_injective: image_order == phi.domain().order(),
        image_order,
        wreath_order,
        image_is_full: image_order == wreath_order,
        counterexample,
    }
}

fn transport(
    psi: &GroupHom,
    phi: &GroupHom,
    xi: &[usize],
    w: &WreathProduct,
    w_hat: &WreathProduct,
) -> Result<GroupHom> {
    if !psi.domain().same_as(w.base_group())
        || !psi.codomain().same_as(w_hat.base_group())
        || !phi.domain().same_as(w.top_group())
        || !phi.codomain().same_as(w_hat.top_group())
    {
        return Err(Error::InvalidTable("maps do not match the wreath factors".into()));
    }
    if !check_equivariant(xi, w.top(), w_hat.top(), phi) {
        let (h, point) = equivariance_counterexample(xi, w.top(), w_hat.top(), phi).unwrap_or((0, 0));
        return Err(Error::NotEquivariant { h, point });
    }
    let n = w.degree();
    let mut xi_inv = vec![0; n];
    for (i, &j) in xi.iter().enumerate() {
        xi_inv[j] = i;
    }
    let image = w
        .product()
        .elements()
        .map(|x| {
            let (f, h) = w.decode(x);
            let g: Vec<usize> = (0..n).map(|j| psi.apply(f[xi_inv[j]])).collect();
            w_hat.encode(&g, phi.apply(h)).expect("components in range")
        })
        .collect();
    GroupHom::new(w.product().clone(), w_hat.product().clone(), image)
}

/// `(f, h) -> (psi . f . xi^-1, phi(h))` for isomorphisms `psi`, `phi` and
/// an equivariant bijection `xi`. The result is checked to be bijective,
/// and to be a homomorphism when the product has at most 4096 elements.
pub fn transport_iso(
    psi: &GroupHom,
    phi: &GroupHom,
    xi: &[usize],
    w: &WreathProduct,
    w_hat: &WreathProduct,
) -> Result<GroupHom> {
    for f in [psi, phi] {
        if !(f.is_injective() && f.is_surjective()) {
            return Err(Error::NotIsomorphism);
        }
    }
    let t = transport(psi, phi, xi, w, w_hat)?;
    if !(t.is_injective() && t.is_surjective()) {
        return Err(Error::NotIsomorphism);
    }
    if w.order() <= 4096 {
        if let Some((a, b)) = t.homomorphism_counterexample() {
            return Err(Error::NotHomomorphism { a, b });
        }
    }
    Ok(t)
}

/// Same map for injective `psi`, `phi`; gives an injective homomorphism
/// `K wr_Omega H -> K' wr_Omega' H'`.
pub fn transport_subgroup(
    psi: &GroupHom,
    phi: &GroupHom,
    xi: &[usize],
    w: &WreathProduct,
    w_hat: &WreathProduct,
) -> Result<GroupHom> {
    for f in [psi, phi] {
        if let Some((a, b)) = first_collision(f) {
            return Err(Error::NotInjective { a, b });
        }
    }
    let t = transport(psi, phi, xi, w, w_hat)?;
    if let Some((a, b)) = first_collision(&t) {
        return Err(Error::NotInjective { a, b });
    }
    Ok(t)
}

/// Some `xi` with `xi(h w) = phi(h) xi(w)`, by trying every target for one
/// point per orbit.
pub fn find_equivariant_bijection(omega: &FiniteGSet, omega_hat: &FiniteGSet, phi: &GroupHom) -> Option<Vec<usize>> {
    if omega.size() != omega_hat.size() {
        return None;
    }
    let n = omega.size();
    let mut xi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        omega: &FiniteGSet,
        omega_hat: &FiniteGSet,
        phi: &GroupHom,
        xi: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(w) = xi.iter().position(|&v| v == usize::MAX) else {
            return true;
        };
        for v in 0..omega_hat.size() {
            if used[v] {
                continue;
            }
            let (saved_xi, saved_used) = (xi.clone(), used.clone());
            let mut ok = true;
            for h in omega.group().elements() {
                let (a, b) = (omega.act(h, w), omega_hat.act(phi.apply(h), v));
                if xi[a] == usize::MAX && !used[b] {
                    xi[a] = b;
                    used[b] = true;
                } else if xi[a] != b {
                    ok = false;
                    break;
                }
            }
            if ok && go(omega, omega_hat, phi, xi, used) {
                return true;
            }
            *xi = saved_xi;
            *used = saved_used;
        }
        false
    }
    go(omega, omega_hat, phi, &mut xi, &mut used).then_some(xi)
}

/// `AGL(1, F_p) wr AGL(1, F_p)` with the evaluation action on `F_p`.
pub fn affine_wreath(p: u64) -> Result<WreathProduct> {
    if p != 2 && p != 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    let agl = construct_named(&format!("AGL:{p}"))?;
    build_wreath_capped(&agl, &natural_action(p as usize, &agl)?, DEFAULT_SIZE_CAP)
}

/// Injective homomorphism of `g` into the affine wreath product, if any.
pub fn solvability_witness(g: &FiniteGroup, p: u64) -> Result<Option<GroupHom>> {
    let target = affine_wreath(p)?;
    embeds_into(g, target.product())
}

pub fn solvability_criterion(g: &FiniteGroup, p: u64) -> Result<bool> {
    Ok(solvability_witness(g, p)?.is_some())
}

//! Property suites over fixed catalogs of small groups, actions, extensions
//! and field towers. Each property yields a [`Verdict`]; failures carry a
//! counterexample in `detail`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::natural_action;
use crate::embeddings::{
    all_sections, default_section, find_equivariant_bijection, kk_embedding_capped, omega_embedding_capped,
    random_section, solvability_criterion, transport_iso, verify_embedding, ShortExactSequence,
};
use crate::error::{Error, Result};
use crate::fields::{quadratic_kummer_embedding_capped, verify_cocycle, QuadraticTower};
use crate::group::{
    are_isomorphic, center, construct_named, direct_product, element_order, embeds_into, identify_small,
    subgroup_from_elements, FiniteGroup, GroupHom, DEFAULT_SIZE_CAP,
};
use crate::sizes::{omega_size, regular_size};
use crate::wreath::{build_wreath_capped, regular_wreath_capped, wreath_order, WreathProduct};

pub const SUITES: [&str; 5] = ["cocycle", "iso", "kk", "omega", "theta"];

/// Largest `|K|^|Omega| |H|` in the theta catalog.
pub const THETA_CATALOG_BOUND: usize = 10_000;

/// Random sections tried per extension when the quotient has more than four
/// elements.
pub const RANDOM_SECTIONS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Exhaustive,
    Sampled(usize),
}

impl FromStr for Depth {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "exhaustive" {
            return Ok(Depth::Exhaustive);
        }
        match s.strip_prefix("sampled:") {
            Some(n) => n
                .parse()
                .ok()
                .filter(|&n: &usize| n > 0)
                .map(Depth::Sampled)
                .ok_or_else(|| Error::parse(s, 8, "expected a positive sample count")),
            None => Err(Error::parse(s, 0, "expected `exhaustive` or `sampled:<n>`")),
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Exhaustive => write!(f, "exhaustive"),
            Depth::Sampled(n) => write!(f, "sampled:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub property: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(suite: &str, property: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Verdict { suite: suite.into(), property: property.into(), passed, detail: detail.into() }
    }
}

/// Turns a property error into a failed verdict, but lets resource limits
/// through.
fn settle(suite: &str, property: String, outcome: Result<(bool, String)>) -> Result<Verdict> {
    match outcome {
        Ok((passed, detail)) => Ok(Verdict::new(suite, property, passed, detail)),
        Err(e @ (Error::SizeLimit { .. } | Error::SearchBudgetExceeded { .. })) => Err(e),
        Err(e) => Ok(Verdict::new(suite, property, false, e.to_string())),
    }
}

pub fn sort_verdicts(v: &mut [Verdict]) {
    v.sort_by(|a, b| (&a.suite, &a.property).cmp(&(&b.suite, &b.property)));
}

/// Runs one suite (or `all`), sorted by suite then property.
pub fn run_suite(name: &str, depth: Depth, seed: u64) -> Result<Vec<Verdict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        other => return Err(Error::parse(other, 0, "unknown suite")),
    };
    let mut out = Vec::new();
    for s in names {
        out.extend(match s {
            "theta" => theta_suite(depth, &mut rng)?,
            "kk" => kk_suite(depth, &mut rng)?,
            "omega" => omega_suite()?,
            "cocycle" => cocycle_suite()?,
            _ => iso_suite()?,
        });
    }
    sort_verdicts(&mut out);
    Ok(out)
}

fn named(s: &str) -> Result<FiniteGroup> {
    construct_named(s)
}

/// Every catalog wreath product with `|K|^|Omega| |H| <= 10^4`.
pub fn theta_catalog() -> Result<Vec<(String, WreathProduct)>> {
    let regular = [("C:2", "C:2"), ("C:3", "C:2"), ("C:2", "C:3"), ("S:3", "C:2"), ("V4", "C:2"), ("C:2", "V4"), ("C:1", "S:3"), ("Q8", "C:2"), ("C:2", "C:4")];
    let natural = [("C:2", "S:3", 3), ("C:3", "S:3", 3), ("C:2", "A:4", 4), ("C:3", "A:4", 4), ("C:2", "S:4", 4), ("S:3", "S:3", 3), ("AGL:3", "AGL:3", 3), ("C:2", "D:5", 5), ("C:2", "AGL:5", 5)];
    let mut out = Vec::new();
    for (ks, hs) in regular {
        let (k, h) = (named(ks)?, named(hs)?);
        out.push((format!("{ks} wr {hs} regular"), regular_wreath_capped(&k, &h, DEFAULT_SIZE_CAP)?));
    }
    for (ks, hs, n) in natural {
        let (k, h) = (named(ks)?, named(hs)?);
        let omega = natural_action(n, &h)?;
        out.push((format!("{ks} wr {hs} natural"), build_wreath_capped(&k, &omega, DEFAULT_SIZE_CAP)?));
    }
    debug_assert!(out.iter().all(|(_, w)| w.order() <= THETA_CATALOG_BOUND));
    Ok(out)
}

fn random_tuple(w: &WreathProduct, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let k = w.base_group().order();
    (0..w.degree()).map(|_| rng.gen_range(0..k)).collect()
}

fn all_tuples(w: &WreathProduct) -> Vec<Vec<usize>> {
    let k = w.base_group().order();
    let n = w.degree();
    (0..k.pow(n as u32))
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = c % k;
                    c /= k;
                    d
                })
                .collect()
        })
        .collect()
}

fn pointwise(w: &WreathProduct, f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().zip(g).map(|(&a, &b)| w.base_group().mul(a, b)).collect()
}

/// `theta_{h1 h2} = theta_{h1} theta_{h2}`, each `theta_h` an automorphism of
/// the base, the product rule, and the exact sequence `K^Omega -> W -> H`.
pub fn theta_properties(name: &str, w: &WreathProduct, depth: Depth, rng: &mut ChaCha8Rng) -> Result<Vec<Verdict>> {
    let top = w.top_group();
    let tuples = all_tuples(w);
    let mut out = Vec::new();

    let mut composition = || -> Result<(bool, String)> {
        let check = |h1: usize, h2: usize, f: &[usize]| -> Result<Option<String>> {
            let lhs = w.theta(top.mul(h1, h2), f)?;
            let rhs = w.theta(h1, &w.theta(h2, f)?)?;
            Ok((lhs != rhs).then(|| format!("h1={} h2={} f={f:?}", top.label(h1), top.label(h2))))
        };
        let mut count = 0usize;
        match depth {
            Depth::Exhaustive => {
                for h1 in top.elements() {
                    for h2 in top.elements() {
                        for f in &tuples {
                            count += 1;
                            if let Some(bad) = check(h1, h2, f)? {
                                return Ok((false, bad));
                            }
                        }
                    }
                }
            }
            Depth::Sampled(n) => {
                let mut r = ChaCha8Rng::seed_from_u64(rng.gen());
                for _ in 0..n {
                    count += 1;
                    let (h1, h2) = (r.gen_range(0..top.order()), r.gen_range(0..top.order()));
                    let f = random_tuple(w, &mut r);
                    if let Some(bad) = check(h1, h2, &f)? {
                        return Ok((false, bad));
                    }
                }
            }
        }
        Ok((true, format!("{count} triples")))
    };
    out.push(settle("theta", format!("{name}: theta composition"), composition())?);

    let mut automorphism = || -> Result<(bool, String)> {
        let mut count = 0usize;
        for h in top.elements() {
            let images: HashSet<Vec<usize>> = tuples.iter().map(|f| w.theta(h, f)).collect::<Result<_>>()?;
            if images.len() != tuples.len() {
                return Ok((false, format!("theta_{} is not bijective", top.label(h))));
            }
            let pairs: Vec<(Vec<usize>, Vec<usize>)> = match depth {
                Depth::Exhaustive => tuples
                    .iter()
                    .flat_map(|f| tuples.iter().map(move |g| (f.clone(), g.clone())))
                    .collect(),
                Depth::Sampled(n) => (0..n).map(|_| (random_tuple(w, rng), random_tuple(w, rng))).collect(),
            };
            for (f, g) in pairs {
                count += 1;
                let lhs = w.theta(h, &pointwise(w, &f, &g))?;
                let rhs = pointwise(w, &w.theta(h, &f)?, &w.theta(h, &g)?);
                if lhs != rhs {
                    return Ok((false, format!("h={} f={f:?} g={g:?}", top.label(h))));
                }
            }
        }
        Ok((true, format!("{count} pairs")))
    };
    out.push(settle("theta", format!("{name}: theta automorphism"), automorphism())?);

    let pairs: Vec<(usize, usize)> = match depth {
        Depth::Exhaustive => {
            let n = w.order();
            (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect()
        }
        Depth::Sampled(n) => (0..n).map(|_| (rng.gen_range(0..w.order()), rng.gen_range(0..w.order()))).collect(),
    };
    let product_rule = || -> Result<(bool, String)> {
        let p = w.product();
        for &(x, y) in &pairs {
            let ((f1, h1), (f2, h2)) = (w.decode(x), w.decode(y));
            let expected = w.encode(&pointwise(w, &f1, &w.theta(h1, &f2)?), top.mul(h1, h2))?;
            if p.mul(x, y) != expected {
                return Ok((false, format!("{} * {}", w.format_element(x), w.format_element(y))));
            }
        }
        Ok((true, format!("{} pairs", pairs.len())))
    };
    out.push(settle("theta", format!("{name}: product rule"), product_rule())?);

    let exact = || -> Result<(bool, String)> {
        let pi = w.top_projection();
        let p = w.product();
        for &(x, y) in &pairs {
            if pi.apply(p.mul(x, y)) != top.mul(pi.apply(x), pi.apply(y)) {
                return Ok((false, format!("projection fails at {} * {}", w.format_element(x), w.format_element(y))));
            }
        }
        let kernel = pi.kernel();
        let base = w.base_elements();
        let expected = wreath_order(w.base_group().order(), w.degree(), top.order());
        let ok = kernel == base && BigUint::from(w.order()) == expected;
        Ok((ok, format!("kernel {} elements, order {}", kernel.len(), w.order())))
    };
    out.push(settle("theta", format!("{name}: exact sequence"), exact())?);

    let round_trip = (0..w.order()).find(|&x| {
        let (f, h) = w.decode(x);
        w.encode(&f, h).ok() != Some(x)
    });
    out.push(Verdict::new(
        "theta",
        format!("{name}: encode decode"),
        round_trip.is_none(),
        round_trip.map_or_else(|| format!("{} elements", w.order()), |x| format!("index {x}")),
    ));
    Ok(out)
}

fn theta_suite(depth: Depth, rng: &mut ChaCha8Rng) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for (name, w) in theta_catalog()? {
        out.extend(theta_properties(&name, &w, depth, rng)?);
    }
    Ok(out)
}

fn subgroup_where(g: &FiniteGroup, keep: impl Fn(usize) -> bool) -> Result<GroupHom> {
    let elems: Vec<usize> = g.elements().filter(|&x| keep(x)).collect();
    Ok(subgroup_from_elements(g, &elems)?.1)
}

fn label(g: &FiniteGroup, l: &str) -> Result<usize> {
    g.find_label(l).ok_or_else(|| Error::parse(l, 0, "no such element"))
}

/// Fixed-point-free involutions of `S:4` together with the identity.
fn klein_in_s4(s4: &FiniteGroup) -> Result<GroupHom> {
    let rep = s4.perm_rep().ok_or(Error::MissingPermutationData)?;
    subgroup_where(s4, |x| {
        x == s4.identity() || (element_order(s4, x) == 2 && rep.images[x].iter().enumerate().all(|(i, &j)| i != j))
    })
}

/// Normal subgroups with their ambient groups: `S3/A3`, `D4/<r>`, `D4/V4`,
/// `S4/V4`, `Q8/Z`.
pub fn normal_catalog() -> Result<Vec<(String, GroupHom)>> {
    let s3 = named("S:3")?;
    let d4 = named("D:4")?;
    let s4 = named("S:4")?;
    let q8 = named("Q8")?;
    let r = label(&d4, "r")?;
    let (r2, s) = (label(&d4, "r^2")?, label(&d4, "s")?);
    let z = center(&q8);
    Ok(vec![
        ("S3/A3".into(), subgroup_where(&s3, |x| element_order(&s3, x) != 2)?),
        ("D4/<r>".into(), crate::group::subgroup_generated(&d4, &[r])?.1),
        ("D4/V4".into(), crate::group::subgroup_generated(&d4, &[r2, s])?.1),
        ("S4/V4".into(), klein_in_s4(&s4)?),
        ("Q8/Z".into(), subgroup_from_elements(&q8, &z)?.1),
    ])
}

fn report_line(phi: &GroupHom) -> (bool, String) {
    let r = verify_embedding(phi);
    let mut detail = format!("image {} of {}", r.image_order, r.wreath_order);
    if let Some((a, b)) = r.counterexample {
        detail = format!("hom law fails at ({}, {})", phi.domain().label(a), phi.domain().label(b));
    } else if !r.is_injective {
        detail.push_str(", not injective");
    }
    (r.is_embedding() && r.wreath_order.is_multiple_of(r.image_order), detail)
}

pub fn kk_properties(name: &str, ses: &ShortExactSequence, depth: Depth, rng: &mut ChaCha8Rng) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let q = ses.q().order();
    let default = || -> Result<(bool, String)> {
        let (w, phi) = kk_embedding_capped(ses, &default_section(ses.eps())?, DEFAULT_SIZE_CAP)?;
        let (ok, detail) = report_line(&phi);
        let size = regular_size(ses.g().order() as u64, q as u64)?;
        Ok((ok && BigUint::from(w.order()) == size, detail))
    };
    out.push(settle("kk", format!("{name}: default section"), default())?);
    let mut many = || -> Result<(bool, String)> {
        let sections = if q <= 4 {
            all_sections(ses.eps())?
        } else {
            let n = match depth {
                Depth::Exhaustive => RANDOM_SECTIONS,
                Depth::Sampled(n) => n,
            };
            (0..n).map(|_| random_section(ses.eps(), rng)).collect::<Result<_>>()?
        };
        for (i, s) in sections.iter().enumerate() {
            let (_, phi) = kk_embedding_capped(ses, s, DEFAULT_SIZE_CAP)?;
            let (ok, detail) = report_line(&phi);
            if !ok {
                return Ok((false, format!("section {i}: {detail}")));
            }
        }
        Ok((true, format!("{} sections", sections.len())))
    };
    let title = if q <= 4 { "every section" } else { "random sections" };
    out.push(settle("kk", format!("{name}: {title}"), many())?);
    Ok(out)
}

fn kk_suite(depth: Depth, rng: &mut ChaCha8Rng) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for (name, inc) in normal_catalog()? {
        let ses = ShortExactSequence::from_normal_subgroup(&inc)?;
        out.extend(kk_properties(&name, &ses, depth, rng)?);
    }
    Ok(out)
}

/// Non-normal subgroups: point stabilizers in `S:4` and `A:4`, `<s>` in
/// `D:4` and `<(1 2)>` in `S:3`.
pub fn non_normal_catalog() -> Result<Vec<(String, GroupHom)>> {
    let mut out = Vec::new();
    for (spec, n) in [("S:4", 4), ("A:4", 4)] {
        let g = named(spec)?;
        let omega = natural_action(n, &g)?;
        let stab = omega.stabilizer(n - 1);
        out.push((format!("{spec}/stab"), subgroup_from_elements(&g, &stab)?.1));
    }
    let d4 = named("D:4")?;
    out.push(("D4/<s>".into(), crate::group::subgroup_generated(&d4, &[label(&d4, "s")?])?.1));
    let s3 = named("S:3")?;
    out.push(("S3/<(1 2)>".into(), crate::group::subgroup_generated(&s3, &[label(&s3, "(1 2)")?])?.1));
    Ok(out)
}

/// Checks the embedding and that the wreath order is
/// `|H_K|^[G:H_K] |G/core|`.
pub fn omega_check(g: &FiniteGroup, h_k: &GroupHom) -> Result<(bool, String)> {
    let e = omega_embedding_capped(g, h_k, None, DEFAULT_SIZE_CAP)?;
    let (ok, detail) = report_line(&e.phi);
    let index = (g.order() / h_k.domain().order()) as u64;
    let kc = (g.order() / e.core.domain().order()) as u64;
    let expected = omega_size(g.order() as u64, index, kc)?;
    let size_ok = BigUint::from(e.wreath.order()) == expected;
    Ok((ok && size_ok, format!("{detail}, core order {}", e.core.domain().order())))
}

/// KK embedding with the default section against the coset embedding of the
/// same normal subgroup, compared through the identity transport.
pub fn coherence_check(inc: &GroupHom) -> Result<(bool, String)> {
    let g = inc.codomain();
    let ses = ShortExactSequence::from_normal_subgroup(inc)?;
    let (w_kk, phi_kk) = kk_embedding_capped(&ses, &default_section(ses.eps())?, DEFAULT_SIZE_CAP)?;
    let e = omega_embedding_capped(g, inc, None, DEFAULT_SIZE_CAP)?;
    let psi = GroupHom::identity(ses.n());
    let q_map = GroupHom::new_checked(w_kk.top_group().clone(), e.wreath.top_group().clone(), w_kk.top_group().elements().collect())?;
    let xi: Vec<usize> = (0..w_kk.degree()).collect();
    let t = transport_iso(&psi, &q_map, &xi, &w_kk, &e.wreath)?;
    let bad = g.elements().find(|&x| t.apply(phi_kk.apply(x)) != e.phi.apply(x));
    Ok(match bad {
        Some(x) => (false, format!("images differ at {}", g.label(x))),
        None => (true, format!("{} elements agree", g.order())),
    })
}

fn omega_suite() -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for (name, inc) in non_normal_catalog()? {
        out.push(settle("omega", format!("{name}: embedding"), omega_check(inc.codomain(), &inc))?);
    }
    for (name, inc) in normal_catalog()? {
        out.push(settle("omega", format!("{name}: embedding"), omega_check(inc.codomain(), &inc))?);
        out.push(settle("omega", format!("{name}: agrees with kk"), coherence_check(&inc))?);
    }
    Ok(out)
}

pub fn tower_catalog() -> Result<Vec<(String, QuadraticTower)>> {
    let t = |l: &[i64], k: &[i64], a: i64| QuadraticTower::new(l, k, BigRational::from_integer(a.into()));
    Ok(vec![
        ("(5,7|5|7)".into(), t(&[5, 7], &[5], 7)?),
        ("(2,3|2|3)".into(), t(&[2, 3], &[2], 3)?),
        ("(2,3,5|2,3|5)".into(), t(&[2, 3, 5], &[2, 3], 5)?),
    ])
}

fn cocycle_suite() -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for (name, t) in tower_catalog()? {
        let relation = verify_cocycle(&t).map(|r| {
            let detail = match r.counterexample {
                Some((a, b, c)) => format!("fails at rho1={a} rho2={b} tau={c}"),
                None => format!("{} triples", r.triples),
            };
            (r.holds(), detail)
        });
        out.push(settle("cocycle", format!("{name}: cocycle relation"), relation)?);
        let embedding = quadratic_kummer_embedding_capped(&t, DEFAULT_SIZE_CAP).map(|k| report_line(&k.phi));
        out.push(settle("cocycle", format!("{name}: kummer embedding"), embedding)?);
    }
    Ok(out)
}

fn bijective_hom(f: &GroupHom) -> bool {
    f.is_homomorphism() && f.is_injective() && f.is_surjective()
}

/// `AGL:3 wr AGL:3` and `S:3 wr S:3` on three points with the transported
/// isomorphism between them.
pub fn transport_example() -> Result<(WreathProduct, WreathProduct, GroupHom)> {
    let (agl, s3) = (named("AGL:3")?, named("S:3")?);
    let iso = are_isomorphic(&agl, &s3)?.ok_or(Error::NotIsomorphism)?;
    let w = build_wreath_capped(&agl, &natural_action(3, &agl)?, DEFAULT_SIZE_CAP)?;
    let w_hat = build_wreath_capped(&s3, &natural_action(3, &s3)?, DEFAULT_SIZE_CAP)?;
    let xi = find_equivariant_bijection(w.top(), w_hat.top(), &iso).ok_or(Error::NotEquivariant { h: 0, point: 0 })?;
    let t = transport_iso(&iso, &iso, &xi, &w, &w_hat)?;
    Ok((w, w_hat, t))
}

fn iso_suite() -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    let specs = ["C:6", "S:3", "AGL:3", "D:3", "C:4", "V4", "D:4", "Q8", "C:8"];
    let mut groups: Vec<(String, FiniteGroup)> = specs.iter().map(|s| Ok((s.to_string(), named(s)?))).collect::<Result<_>>()?;
    groups.push(("C:2 x C:3".into(), direct_product(&named("C:2")?, &named("C:3")?)?));
    groups.push(("C:2 x C:2".into(), direct_product(&named("C:2")?, &named("C:2")?)?));
    groups.push(("C:2 wr C:2".into(), regular_wreath_capped(&named("C:2")?, &named("C:2")?, DEFAULT_SIZE_CAP)?.product().clone()));
    let symmetric = || -> Result<(bool, String)> {
        let mut pairs = 0;
        for (na, a) in &groups {
            for (nb, b) in &groups {
                let (ab, ba) = (are_isomorphic(a, b)?, are_isomorphic(b, a)?);
                pairs += 1;
                if ab.is_some() != ba.is_some() || !ab.iter().chain(&ba).all(bijective_hom) {
                    return Ok((false, format!("{na} vs {nb}")));
                }
            }
        }
        Ok((true, format!("{pairs} ordered pairs")))
    };
    out.push(settle("iso", "isomorphism symmetric".into(), symmetric())?);

    let embeds = || -> Result<(bool, String)> {
        let cases = [("S:3", "S:4", true), ("D:4", "S:4", true), ("Q8", "S:4", false), ("C:4", "D:4", true), ("A:4", "S:4", true), ("C:6", "S:4", false)];
        for (a, b, expect) in cases {
            let found = embeds_into(&named(a)?, &named(b)?)?;
            let ok = match &found {
                Some(f) => f.is_homomorphism() && f.is_injective(),
                None => true,
            };
            if !ok || found.is_some() != expect {
                return Ok((false, format!("{a} into {b}")));
            }
        }
        Ok((true, format!("{} cases", cases.len())))
    };
    out.push(settle("iso", "embeddings injective".into(), embeds())?);

    let identify = || -> Result<(bool, String)> {
        let w = regular_wreath_capped(&named("C:2")?, &named("C:2")?, DEFAULT_SIZE_CAP)?;
        let trivial = regular_wreath_capped(&named("C:1")?, &named("S:3")?, DEFAULT_SIZE_CAP)?;
        let v4 = direct_product(&named("C:2")?, &named("C:2")?)?;
        let got = [identify_small(w.product()), identify_small(trivial.product()), identify_small(&v4)];
        let want = ["D:4", "S:3", "C:2 × C:2"];
        Ok((got == want, format!("{got:?}")))
    };
    out.push(settle("iso", "identify small groups".into(), identify())?);

    let transport = transport_example().map(|(w, _, t)| (bijective_hom(&t), format!("{} elements", w.order())));
    out.push(settle("iso", "transport AGL3 wr AGL3 to S3 wr S3".into(), transport)?);

    let solvable = || -> Result<(bool, String)> {
        let s3 = named("S:3")?;
        let w = build_wreath_capped(&s3, &natural_action(3, &s3)?, DEFAULT_SIZE_CAP)?;
        let q8 = named("Q8")?;
        let (yes, no) = (solvability_criterion(w.product(), 3)?, solvability_criterion(&q8, 3)?);
        Ok((yes && !no, format!("S3 wr S3: {yes}, Q8: {no}")))
    };
    out.push(settle("iso", "solvability criterion".into(), solvable())?);
    Ok(out)
}

/// Checks on a user-supplied group: associativity of every triple (up to
/// order 512, otherwise on a generating set), identity and inverses.
pub fn group_properties(g: &FiniteGroup) -> Vec<Verdict> {
    let mut out = Vec::new();
    let assoc = if g.order() <= 512 {
        let mut bad = None;
        'outer: for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        bad = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        bad
    } else {
        g.associativity_counterexample()
    };
    out.push(Verdict::new(
        "group",
        "associativity",
        assoc.is_none(),
        assoc.map_or_else(|| format!("order {}", g.order()), |(a, b, c)| format!("({a}*{b})*{c} != {a}*({b}*{c})")),
    ));
    out.push(Verdict::new("group", "identity and inverses", g.check_identity_and_inverses(), ""));
    out.push(Verdict::new("group", "identification", true, identify_small(g)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_parses() {
        assert_eq!("exhaustive".parse::<Depth>().unwrap(), Depth::Exhaustive);
        assert_eq!("sampled:7".parse::<Depth>().unwrap(), Depth::Sampled(7));
        assert!("sampled:0".parse::<Depth>().is_err());
        assert!("all".parse::<Depth>().is_err());
    }

    #[test]
    fn theta_catalog_respects_bound() {
        let cat = theta_catalog().unwrap();
        assert!(cat.len() >= 15);
        for (name, w) in &cat {
            assert!(w.order() <= THETA_CATALOG_BOUND, "{name}");
        }
    }

    #[test]
    fn cocycle_suite_passes() {
        let v = run_suite("cocycle", Depth::Exhaustive, 0).unwrap();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|x| x.passed), "{v:?}");
    }

    #[test]
    fn verdicts_are_sorted() {
        let v = run_suite("kk", Depth::Sampled(3), 1).unwrap();
        let mut sorted = v.clone();
        sort_verdicts(&mut sorted);
        assert_eq!(v, sorted);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", Depth::Exhaustive, 0).is_err());
    }
}

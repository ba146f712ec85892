//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails or runs over its time bound.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use wreathlab::action::natural_action;
use wreathlab::checks::{coherence_check, normal_catalog, theta_catalog, tower_catalog, transport_example};
use wreathlab::embeddings::{
    all_sections, default_section, kk_embedding, omega_embedding, solvability_criterion, verify_embedding,
    ShortExactSequence,
};
use wreathlab::fields::{chi, galois_group, quadratic_kummer_embedding, verify_cocycle, QuadraticTower};
use wreathlab::group::{check_presentation_d4, construct_named, identify_small, subgroup_from_elements};
use wreathlab::sizes::{example_432, figure_data, omega_size, regular_size, table1};
use wreathlab::wreath::{regular_wreath, wreath_order, WreathProduct};
use wreathlab::{FiniteGroup, GroupHom};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: wreathlab::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["wreathlab"];
    full.extend_from_slice(args);
    let code = wreathlab_cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

/// Product in `K wr_Omega H` from the definition: the tuple part at `w` is
/// `f1(w) f2(h1^-1 w)`, read off the top action directly.
fn oracle_mul(w: &WreathProduct, x: usize, y: usize) -> usize {
    let (f1, h1) = w.decode(x);
    let (f2, h2) = w.decode(y);
    let (k, top) = (w.base_group(), w.top_group());
    let h1inv = top.inv(h1);
    let f: Vec<usize> = (0..w.degree()).map(|p| k.mul(f1[p], f2[w.top().act(h1inv, p)])).collect();
    w.encode(&f, top.mul(h1, h2)).unwrap()
}

/// Every pair checked against `oracle_mul` in the codomain.
fn oracle_hom(phi: &GroupHom, w: &WreathProduct) -> Result<(), String> {
    let g = phi.domain();
    for a in g.elements() {
        for b in g.elements() {
            let lhs = phi.apply(g.mul(a, b));
            let rhs = oracle_mul(w, phi.apply(a), phi.apply(b));
            ensure(lhs == rhs, || format!("hom law fails at ({}, {})", g.label(a), g.label(b)))?;
        }
    }
    Ok(())
}

fn distinct_images(phi: &GroupHom) -> usize {
    phi.domain().elements().map(|x| phi.apply(x)).collect::<HashSet<_>>().len()
}

fn named(s: &str) -> FiniteGroup {
    construct_named(s).unwrap()
}

fn criterion_1() -> Check {
    let (code, out) = cli(&["build", "--k", "C:2", "--h", "C:2", "--omega", "regular"]);
    ensure(code == 0 && out == "order 8, identified D:4\n", || format!("cli printed {out:?}"))?;
    let w = lib(regular_wreath(&named("C:2"), &named("C:2")))?;
    let x = lib(w.encode(&[0, 1], 1))?;
    let y = lib(w.encode(&[0, 0], 1))?;
    ensure(lib(check_presentation_d4(w.product(), x, y))?, || "presentation fails".into())?;
    let p = w.product();
    let x2 = p.mul(x, x);
    ensure(w.decode(x2) == (vec![1, 1], 0), || "x^2 != (f4,[0])".into())?;
    ensure(w.decode(p.mul(x2, x)) == (vec![1, 0], 1), || "x^3 != (f3,[1])".into())?;
    let name = identify_small(p);
    ensure(name == "D:4", || format!("identified as {name}"))?;
    Ok(format!("order {}, identified {name}", w.order()))
}

fn criterion_2() -> Check {
    let (code, out) = cli(&["embed", "--mode", "tower", "--field", "5,7", "--K", "5", "--alpha", "7", "--section", "eta:rho1"]);
    let expected = [
        "phi(id) = (id,id; id)",
        "phi(rho1) = (id,id; eta)",
        "phi(rho2) = (rho2,rho2; id)",
        "phi(rho3) = (rho2,rho2; eta)",
    ];
    let lines: Vec<&str> = out.lines().collect();
    ensure(code == 0 && lines.len() >= 4 && lines[..4] == expected, || format!("cli printed {out:?}"))?;
    ensure(out.contains("agrees with section embedding: yes"), || "section embedding disagrees".into())?;
    let t = lib(QuadraticTower::new(&[5, 7], &[5], num_rational::BigRational::from_integer(7.into())))?;
    let ke = lib(quadratic_kummer_embedding(&t))?;
    let r = verify_embedding(&ke.phi);
    ensure(r.is_homomorphism && r.is_injective, || "not an injective homomorphism".into())?;
    ensure(r.image_order == 4 && !r.image_is_full && r.wreath_order == 8, || format!("{r:?}"))?;
    oracle_hom(&ke.phi, &ke.wreath)?;
    Ok("four-line table, injective, image 4 of 8, not full".into())
}

fn criterion_3() -> Check {
    let mut sections = 0;
    for (name, inc) in lib(normal_catalog())? {
        let ses = lib(ShortExactSequence::from_normal_subgroup(&inc))?;
        let mut list = vec![lib(default_section(ses.eps()))?];
        if ses.q().order() <= 4 {
            list.extend(lib(all_sections(ses.eps()))?);
        }
        for s in &list {
            let (w, phi) = lib(kk_embedding(&ses, s))?;
            oracle_hom(&phi, &w).map_err(|e| format!("{name}: {e}"))?;
            let distinct = distinct_images(&phi);
            ensure(distinct == ses.g().order(), || format!("{name}: not injective"))?;
            let expected = BigUint::from(ses.n().order()).pow(ses.q().order() as u32) * ses.q().order();
            ensure(BigUint::from(w.order()) == expected, || format!("{name}: wreath order {}", w.order()))?;
            sections += 1;
        }
    }
    Ok(format!("5 extensions, {sections} sections"))
}

fn criterion_4() -> Check {
    let s4 = named("S:4");
    let stab = natural_action(4, &s4).unwrap().stabilizer(3);
    let (_, inc) = lib(subgroup_from_elements(&s4, &stab))?;
    let e = lib(omega_embedding(&s4, &inc, None))?;
    ensure(e.core.domain().order() == 1, || "core is not trivial".into())?;
    ensure(e.wreath.order() == 31104 && 31104 == 6usize.pow(4) * 24, || format!("order {}", e.wreath.order()))?;
    oracle_hom(&e.phi, &e.wreath)?;
    ensure(distinct_images(&e.phi) == 24, || "not injective".into())?;
    Ok("injective into order 31104, 576 pairs".into())
}

fn criterion_5() -> Check {
    let mut total = 0;
    for (name, t) in lib(tower_catalog())? {
        let report = lib(verify_cocycle(&t))?;
        ensure(report.holds(), || format!("{name}: {:?}", report.counterexample))?;
        let (_, autos_l) = galois_group(t.l());
        let (_, autos_k) = galois_group(t.k());
        // alpha is rational here, so chi(rho, tau) is the sign rho puts on sqrt(alpha).
        let sign = |rho: &wreathlab::fields::FieldAutomorphism| ((rho.mask() & t.alpha_mask()).count_ones() % 2) as u8;
        let mut triples = 0;
        for r1 in &autos_l {
            for tau in &autos_k {
                ensure(lib(chi(&t, r1, tau))? == sign(r1), || format!("{name}: chi differs from sign"))?;
            }
            for r2 in &autos_l {
                for _ in &autos_k {
                    triples += 1;
                    ensure(sign(&r1.compose(r2)) == (sign(r1) + sign(r2)) % 2, || format!("{name}: relation"))?;
                }
            }
        }
        ensure(triples == report.triples, || format!("{name}: {} triples", report.triples))?;
        total += triples;
    }
    Ok(format!("3 towers, {total} triples"))
}

fn criterion_6() -> Check {
    let mut entries = 0;
    for (name, w) in lib(theta_catalog())? {
        ensure(w.order() <= 10_000, || format!("{name} too large"))?;
        let (k, top) = (w.base_group(), w.top_group());
        let n = w.degree();
        let tuples: Vec<Vec<usize>> = w.base_elements().into_iter().map(|x| w.decode(x).0).collect();
        let oracle = |h: usize, f: &[usize]| -> Vec<usize> {
            let hinv = top.inv(h);
            (0..n).map(|p| f[w.top().act(hinv, p)]).collect()
        };
        for h in top.elements() {
            let mut seen = HashSet::new();
            for f in &tuples {
                let image = lib(w.theta(h, f))?;
                ensure(image == oracle(h, f), || format!("{name}: theta differs from definition"))?;
                seen.insert(image);
            }
            ensure(seen.len() == tuples.len(), || format!("{name}: theta_{h} not bijective"))?;
            for h2 in top.elements() {
                for f in &tuples {
                    let lhs = lib(w.theta(top.mul(h, h2), f))?;
                    let rhs = lib(w.theta(h, &lib(w.theta(h2, f))?))?;
                    ensure(lhs == rhs, || format!("{name}: composition fails"))?;
                }
            }
            for f in &tuples {
                let tf = oracle(h, f);
                for g in &tuples {
                    let fg: Vec<usize> = (0..n).map(|p| k.mul(f[p], g[p])).collect();
                    let tg = oracle(h, g);
                    let prod: Vec<usize> = (0..n).map(|p| k.mul(tf[p], tg[p])).collect();
                    ensure(lib(w.theta(h, &fg))? == prod, || format!("{name}: not multiplicative"))?;
                }
            }
        }
        entries += 1;
    }
    Ok(format!("{entries} base/top pairs"))
}

fn criterion_7() -> Check {
    let (w, w_hat, t) = lib(transport_example())?;
    ensure(w.order() == 1296 && w_hat.order() == 1296, || "orders".into())?;
    ensure(distinct_images(&t) == 1296, || "not bijective".into())?;
    oracle_hom(&t, &w_hat)?;
    ensure(lib(solvability_criterion(w_hat.product(), 3))?, || "solvability criterion false".into())?;
    Ok("bijective homomorphism over 1296^2 pairs, solvable".into())
}

fn criterion_8() -> Check {
    let c2 = named("C:2");
    let mut built: Vec<(String, usize, BigUint)> = Vec::new();
    let w1 = lib(regular_wreath(&c2, &c2))?;
    built.push(("C2 wr C2".into(), w1.order(), lib(regular_size(4, 2))?));
    for (name, inc) in lib(normal_catalog())? {
        let ses = lib(ShortExactSequence::from_normal_subgroup(&inc))?;
        let (w, _) = lib(kk_embedding(&ses, &lib(default_section(ses.eps()))?))?;
        built.push((name, w.order(), lib(regular_size(ses.g().order() as u64, ses.q().order() as u64))?));
    }
    built.push(("S4 stabilizer".into(), 31104, lib(omega_size(24, 4, 24))?));
    let (w7, _, _) = lib(transport_example())?;
    built.push(("AGL3 wr AGL3".into(), w7.order(), lib(omega_size(18, 3, 6))?));
    for (name, w) in lib(theta_catalog())? {
        built.push((name, w.order(), wreath_order(w.base_group().order(), w.degree(), w.top_group().order())));
    }
    for (name, order, size) in &built {
        ensure(BigUint::from(*order) == *size, || format!("{name}: built {order}, formula {size}"))?;
    }
    let mut rows = 0;
    for kf in 2..=5 {
        for row in lib(table1(kf))? {
            for j in 1..=20u64 {
                let m = j * row.kc;
                let r = lib(row.evaluate(m))?;
                let reg = BigUint::from(m / row.kc).pow(row.kc as u32) * row.kc;
                let om = BigUint::from(m / kf).pow(kf as u32) * row.kc;
                ensure(r.regular_size == reg && r.omega_size == om, || format!("{} at m={m}", row.group))?;
                ensure(lib(regular_size(m, row.kc))? == reg && lib(omega_size(m, kf, row.kc))? == om, || {
                    format!("{} general formula at m={m}", row.group)
                })?;
            }
            rows += 1;
        }
    }
    let mut points = 0;
    for &(group, kf, m, series, value) in common::FIGURE_POINTS {
        let data = lib(figure_data(kf, group, m))?;
        let p = data.iter().find(|p| p.m == m).ok_or_else(|| format!("{group}: no point at {m}"))?;
        let got = if series == "regular" { p.log_regular } else { p.log_omega };
        ensure((got - value).abs() <= 1e-9, || format!("{group} m={m} {series}: {got} vs {value}"))?;
        points += 1;
    }
    let s3 = lib(figure_data(3, "S3", 12))?;
    ensure(s3.last().map(|p| p.log_regular) == Some(5.950642552587727), || "S3 m=12".into())?;
    Ok(format!("{} products, {rows} table rows x 20 m, {points} figure points", built.len()))
}

fn criterion_9() -> Check {
    let c = example_432();
    let two = BigUint::from(2u32);
    let three = BigUint::from(3u32);
    let small = two.pow(9) * three.pow(8);
    let large = two.pow(21) * three.pow(14);
    ensure(c.kummer_wreath_size == small && small == BigUint::from(3_359_232u64), || "kummer size".into())?;
    ensure(c.coset_wreath_size == large && large == BigUint::from(10_030_613_004_288u64), || "coset size".into())?;
    ensure(c.ratio == BigUint::from(2_985_984u64) && c.ratio_factors == (12, 6), || "ratio".into())?;
    ensure(c.note.contains("2985984"), || "note".into())?;
    Ok(format!("{} and {}, ratio {}", c.kummer_wreath_size, c.coset_wreath_size, c.ratio))
}

fn criterion_10() -> Check {
    let mut n = 0;
    for (name, inc) in lib(normal_catalog())? {
        let (ok, detail) = lib(coherence_check(&inc))?;
        ensure(ok, || format!("{name}: {detail}"))?;
        let ses = lib(ShortExactSequence::from_normal_subgroup(&inc))?;
        let (w, phi) = lib(kk_embedding(&ses, &lib(default_section(ses.eps()))?))?;
        let e = lib(omega_embedding(inc.codomain(), &inc, None))?;
        for x in inc.codomain().elements() {
            let a = w.format_element(phi.apply(x));
            let b = e.wreath.format_element(e.phi.apply(x));
            ensure(a == b, || format!("{name}: {a} vs {b}"))?;
        }
        n += 1;
    }
    Ok(format!("{n} normal subgroups agree elementwise"))
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 10] = [
        ("D4 identification", criterion_1, 1),
        ("tower (5,7) embedding table", criterion_2, 1),
        ("KK over the extension catalog", criterion_3, 30),
        ("coset embedding for S4", criterion_4, 10),
        ("cocycle relation", criterion_5, 5),
        ("theta homomorphism", criterion_6, 60),
        ("transport and solvability", criterion_7, 120),
        ("size formulas", criterion_8, 5),
        ("432 arithmetic", criterion_9, 1),
        ("KK and coset embeddings agree", criterion_10, 5),
    ];
    let mut failed = 0;
    for (i, (title, run, bound)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let slow = elapsed > Duration::from_secs(*bound);
        let (mark, detail) = match (&result, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {bound} s bound")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {mark} [{:.2} s] {title}: {detail}", i + 1, elapsed.as_secs_f64());
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}

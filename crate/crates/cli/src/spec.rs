//! Parsing of group, subgroup, section and tower arguments.

use std::path::Path;

use num_rational::BigRational;
use wreathlab::action::natural_action;
use wreathlab::group::{
    center, construct_named, direct_product_capped, find_embedding, subgroup_from_elements, subgroup_generated,
    GroupJson, SearchConfig,
};
use wreathlab::{Error, FiniteGroup, GroupHom, Result};

/// `C:2`, `S:3 × C:2`, `C:2*C:2*C:2` or `file:path.json`.
pub fn parse_group(spec: &str, cap: u64) -> Result<FiniteGroup> {
    if let Some(path) = spec.strip_prefix("file:") {
        return GroupJson::parse(&std::fs::read_to_string(Path::new(path))?);
    }
    let mut factors = Vec::new();
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        if c == '*' || c == '×' {
            factors.push((start, &spec[start..i]));
            start = i + c.len_utf8();
        }
    }
    factors.push((start, &spec[start..]));
    let mut acc: Option<FiniteGroup> = None;
    for (pos, raw) in factors {
        let name = raw.trim();
        let offset = pos + raw.len() - raw.trim_start().len();
        if name.is_empty() {
            return Err(Error::parse(spec, offset, "empty factor"));
        }
        let g = construct_named(name).map_err(|e| match e {
            Error::UnknownGroupSpec(_) => Error::parse(spec, offset, format!("unknown group `{name}`")),
            other => other,
        })?;
        acc = Some(match acc {
            None => g,
            Some(a) => direct_product_capped(&a, &g, cap)?,
        });
    }
    Ok(acc.expect("at least one factor"))
}

/// Element by label, falling back to a bare index.
pub fn parse_element(g: &FiniteGroup, token: &str, context: &str, offset: usize) -> Result<usize> {
    let t = token.trim();
    if let Some(x) = g.find_label(t) {
        return Ok(x);
    }
    match t.parse::<usize>() {
        Ok(x) if x < g.order() => Ok(x),
        _ => Err(Error::parse(context, offset, format!("no element `{t}`"))),
    }
}

fn image_is_normal(g: &FiniteGroup, map: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &y in map {
        inside[y] = true;
    }
    g.elements().all(|x| map.iter().all(|&y| inside[g.conj(y, x)]))
}

/// Subgroup of `g` given as `stab:i`, `center`, `trivial`, `whole`,
/// `gens:a;b;...` or a group spec. A group spec picks the image of an
/// embedding, normal when `normal` is set.
pub fn parse_subgroup(g: &FiniteGroup, spec: &str, normal: bool, cap: u64) -> Result<GroupHom> {
    let s = spec.trim();
    if let Some(point) = s.strip_prefix("stab:") {
        let rep = g.perm_rep().ok_or(Error::MissingPermutationData)?;
        let i: usize = point
            .trim()
            .parse()
            .ok()
            .filter(|&i| i >= 1 && i <= rep.degree)
            .ok_or_else(|| Error::parse(spec, 5, format!("expected a point in 1..={}", rep.degree)))?;
        let omega = natural_action(rep.degree, g)?;
        return Ok(subgroup_from_elements(g, &omega.stabilizer(i - 1))?.1);
    }
    if let Some(list) = s.strip_prefix("gens:") {
        let mut gens = Vec::new();
        let mut pos = 5;
        for token in list.split(';') {
            gens.push(parse_element(g, token, spec, pos)?);
            pos += token.len() + 1;
        }
        return Ok(subgroup_generated(g, &gens)?.1);
    }
    match s {
        "center" => return Ok(subgroup_from_elements(g, &center(g))?.1),
        "trivial" => return Ok(subgroup_from_elements(g, &[g.identity()])?.1),
        "whole" => return Ok(subgroup_from_elements(g, &g.elements().collect::<Vec<_>>())?.1),
        _ => {}
    }
    let h = parse_group(s, cap)?;
    let found = find_embedding(&h, g, SearchConfig::default(), |map| !normal || image_is_normal(g, map))?;
    let emb = found.ok_or_else(|| {
        let kind = if normal { "normal subgroup" } else { "subgroup" };
        Error::parse(spec, 0, format!("no {kind} isomorphic to `{s}`"))
    })?;
    Ok(subgroup_from_elements(g, &emb.image_set())?.1)
}

/// `q:g,q:g,...` pairs; `q` resolved in `from`, `g` in `to`.
pub fn parse_pairs(spec: &str, from: &FiniteGroup, to: &FiniteGroup) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for item in spec.split(',') {
        let (q, g) = item
            .split_once(':')
            .ok_or_else(|| Error::parse(spec, pos, "expected `label:label`"))?;
        out.push((parse_element(from, q, spec, pos)?, parse_element(to, g, spec, pos + q.len() + 1)?));
        pos += item.len() + 1;
    }
    Ok(out)
}

/// Comma-separated integers; empty input gives an empty list.
pub fn parse_int_list(spec: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for item in spec.split(',') {
        let t = item.trim();
        if !t.is_empty() {
            out.push(t.parse().map_err(|_| Error::parse(spec, pos, format!("`{t}` is not an integer")))?);
        }
        pos += item.len() + 1;
    }
    Ok(out)
}

/// `7`, `-3` or `5/4`.
pub fn parse_rational(spec: &str) -> Result<BigRational> {
    let bad = |pos| Error::parse(spec, pos, "expected an integer or a fraction n/d");
    let (n, d) = match spec.trim().split_once('/') {
        Some((n, d)) => (n, d),
        None => (spec.trim(), "1"),
    };
    let n: i64 = n.trim().parse().map_err(|_| bad(0))?;
    let d: i64 = d.trim().parse().map_err(|_| bad(spec.find('/').map_or(0, |p| p + 1)))?;
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n.into(), d.into()))
}

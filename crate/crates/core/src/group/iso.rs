use super::subgroup::closure;
use super::{center, construct_named, direct_product, element_order, FiniteGroup, GroupHom};
use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Above this order the target is not scanned for conjugacy classes or
/// centralizers; every element of the right order is tried.
const SYMMETRY_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { node_budget: DEFAULT_NODE_BUDGET }
    }
}

fn orders(g: &FiniteGroup) -> Vec<usize> {
    g.elements().map(|x| element_order(g, x)).collect()
}

/// Small generating set: repeatedly adds the element that enlarges the
/// generated subgroup the most.
fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = closure(g, &[]);
    while current.len() < g.order() {
        let mut inside = vec![false; g.order()];
        for &x in &current {
            inside[x] = true;
        }
        let mut best = (0, usize::MAX);
        for x in g.elements().filter(|&x| !inside[x]) {
            gens.push(x);
            let size = closure(g, &gens).len();
            gens.pop();
            if size > best.0 {
                best = (size, x);
                if size == g.order() {
                    break;
                }
            }
        }
        gens.push(best.1);
        current = closure(g, &gens);
    }
    gens
}

type Accept<'a> = &'a mut dyn FnMut(&[usize]) -> bool;

struct Search<'a> {
    a: &'a FiniteGroup,
    b: &'a FiniteGroup,
    gens: Vec<usize>,
    gen_orders: Vec<usize>,
    b_orders: Vec<usize>,
    images: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    touched: Vec<usize>,
    budget: u64,
    nodes: u64,
    use_symmetry: bool,
    accept: Option<Accept<'a>>,
}

impl<'a> Search<'a> {
    fn new(a: &'a FiniteGroup, b: &'a FiniteGroup, config: SearchConfig) -> Self {
        let gens = greedy_generators(a);
        let gen_orders = gens.iter().map(|&x| element_order(a, x)).collect();
        Search {
            a,
            b,
            gens,
            gen_orders,
            b_orders: orders(b),
            images: Vec::new(),
            map: vec![usize::MAX; a.order()],
            used: vec![false; b.order()],
            touched: Vec::new(),
            budget: config.node_budget,
            nodes: 0,
            use_symmetry: b.order() <= SYMMETRY_LIMIT,
            accept: None,
        }
    }

    /// Extends the assigned generator images along the Cayley graph of the
    /// subgroup they generate; fails on a clash or a repeated image.
    fn consistent(&mut self) -> bool {
        for &x in &self.touched {
            self.used[self.map[x]] = false;
            self.map[x] = usize::MAX;
        }
        self.touched.clear();
        let (a, b) = (self.a, self.b);
        self.map[a.identity()] = b.identity();
        self.used[b.identity()] = true;
        self.touched.push(a.identity());
        let k = self.images.len();
        let mut i = 0;
        while i < self.touched.len() {
            let x = self.touched[i];
            let fx = self.map[x];
            for j in 0..k {
                let y = a.mul(x, self.gens[j]);
                let fy = b.mul(fx, self.images[j]);
                if self.map[y] == usize::MAX {
                    if self.used[fy] {
                        return false;
                    }
                    self.map[y] = fy;
                    self.used[fy] = true;
                    self.touched.push(y);
                } else if self.map[y] != fy {
                    return false;
                }
            }
            i += 1;
        }
        true
    }

    fn candidates(&self, depth: usize) -> Vec<usize> {
        let want = self.gen_orders[depth];
        let pool: Vec<usize> = self.b.elements().filter(|&y| self.b_orders[y] == want).collect();
        if !self.use_symmetry {
            return pool;
        }
        // Conjugating a solution by anything centralizing the images chosen
        // so far gives another solution, so one candidate per orbit suffices.
        let b = self.b;
        let centralizer: Vec<usize> = b
            .elements()
            .filter(|&c| self.images.iter().all(|&y| b.mul(c, y) == b.mul(y, c)))
            .collect();
        let mut seen = vec![false; b.order()];
        let mut reps = Vec::new();
        for y in pool {
            if seen[y] {
                continue;
            }
            reps.push(y);
            for &c in &centralizer {
                seen[b.conj(y, c)] = true;
            }
        }
        reps
    }

    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.gens.len() {
            if self.accept.is_none() {
                return Ok(true);
            }
            self.consistent();
            let map = self.map.clone();
            return Ok(self.accept.as_mut().is_some_and(|accept| accept(&map)));
        }
        for y in self.candidates(depth) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            self.images.push(y);
            if self.consistent() && self.extend(depth + 1)? {
                return Ok(true);
            }
            self.images.pop();
        }
        Ok(false)
    }

    fn run(mut self) -> Result<Option<GroupHom>> {
        if !self.extend(0)? {
            return Ok(None);
        }
        assert!(self.consistent());
        let image = self.map.clone();
        Ok(Some(GroupHom::from_parts(self.a.clone(), self.b.clone(), image)))
    }
}

fn profile_fits(a: &FiniteGroup, b: &FiniteGroup, exact: bool) -> bool {
    let (pa, pb) = (a.order_profile(), b.order_profile());
    (1..pa.len()).all(|d| {
        let nb = pb.get(d).copied().unwrap_or(0);
        if exact {
            pa[d] == nb
        } else {
            pa[d] <= nb
        }
    })
}

pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<GroupHom>> {
    are_isomorphic_with(a, b, SearchConfig::default())
}

/// Invariant screens (order, commutativity, element-order counts, center
/// size) followed by a backtracking search over generator images.
pub fn are_isomorphic_with(a: &FiniteGroup, b: &FiniteGroup, config: SearchConfig) -> Result<Option<GroupHom>> {
    if a.order() != b.order()
        || a.is_abelian() != b.is_abelian()
        || !profile_fits(a, b, true)
        || center(a).len() != center(b).len()
    {
        return Ok(None);
    }
    Search::new(a, b, config).run()
}

pub fn embeds_into(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<GroupHom>> {
    embeds_into_with(a, b, SearchConfig::default())
}

/// Injective homomorphism `a -> b`, if any.
pub fn embeds_into_with(a: &FiniteGroup, b: &FiniteGroup, config: SearchConfig) -> Result<Option<GroupHom>> {
    if !b.order().is_multiple_of(a.order()) || (b.is_abelian() && !a.is_abelian()) || !profile_fits(a, b, false) {
        return Ok(None);
    }
    Search::new(a, b, config).run()
}

/// Injective homomorphism `a -> b` whose image table satisfies `accept`.
/// Candidates are pruned up to conjugation in `b`, so `accept` should be
/// invariant under conjugation (normality of the image is).
pub fn find_embedding(
    a: &FiniteGroup,
    b: &FiniteGroup,
    config: SearchConfig,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Result<Option<GroupHom>> {
    if !b.order().is_multiple_of(a.order()) || (b.is_abelian() && !a.is_abelian()) || !profile_fits(a, b, false) {
        return Ok(None);
    }
    let mut search = Search::new(a, b, config);
    search.accept = Some(&mut accept);
    search.run()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Named groups of order `n`, in naming priority.
fn single_names(n: usize) -> Vec<String> {
    let mut names = vec![format!("C:{n}")];
    let factorial = [1, 1, 2, 6, 24, 120, 720];
    names.extend((2..=6).filter(|&k| factorial[k] == n).map(|k| format!("S:{k}")));
    names.extend((4..=6).filter(|&k| factorial[k] / 2 == n).map(|k| format!("A:{k}")));
    if n >= 6 && n.is_multiple_of(2) {
        names.push(format!("D:{}", n / 2));
    }
    if n == 8 {
        names.push("Q8".into());
    }
    names
}

fn catalog(n: usize) -> Vec<String> {
    let mut names = single_names(n);
    for a in divisors(n).into_iter().filter(|&a| a > 1 && a * a <= n) {
        for x in single_names(a) {
            for y in single_names(n / a) {
                names.push(format!("{x} × {y}"));
            }
        }
    }
    for a in divisors(n).into_iter().filter(|&a| a > 1) {
        for b in divisors(n / a).into_iter().filter(|&b| b >= a) {
            let c = n / a / b;
            if c >= b {
                names.push(format!("C:{a} × C:{b} × C:{c}"));
            }
        }
    }
    names
}

fn build_catalog_group(name: &str) -> Result<FiniteGroup> {
    let mut parts = name.split(" × ");
    let first = construct_named(parts.next().unwrap_or_default())?;
    parts.try_fold(first, |acc, p| direct_product(&acc, &construct_named(p)?))
}

/// Catalog name of a group of order at most 64, or `unidentified(order=n)`.
pub fn identify_small(g: &FiniteGroup) -> String {
    let n = g.order();
    if n <= 64 {
        let config = SearchConfig { node_budget: 1_000_000 };
        for name in catalog(n) {
            let Ok(candidate) = build_catalog_group(&name) else { continue };
            if let Ok(Some(_)) = are_isomorphic_with(g, &candidate, config) {
                return name;
            }
        }
    }
    format!("unidentified(order={n})")
}

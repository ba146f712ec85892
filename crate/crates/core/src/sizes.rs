//! Exact orders of the wreath products attached to a tower `F < K < L`,
//! written in terms of `m = [L^c : F]`, `k = [K : F]` and `kc = [K^c : F]`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

fn check_divides(numerator: u64, divisor: u64) -> Result<()> {
    if divisor == 0 || !numerator.is_multiple_of(divisor) || numerator == 0 {
        return Err(Error::DivisibilityViolation { numerator, divisor });
    }
    Ok(())
}

/// `(m / kc)^kc * kc`, the order of `Gal(L^c/K^c) wr_r Gal(K^c/F)`.
pub fn regular_size(m: u64, kc: u64) -> Result<BigUint> {
    check_divides(m, kc)?;
    Ok(BigUint::from(m / kc).pow(kc as u32) * kc)
}

/// `(m / k)^k * kc`, the order of `Gal(L^c/K) wr_Omega Gal(K^c/F)`.
pub fn omega_size(m: u64, k: u64, kc: u64) -> Result<BigUint> {
    check_divides(m, k)?;
    if k > kc {
        return Err(Error::SpecOutOfRange {
            spec: format!("k={k}, kc={kc}"),
            reason: "k may not exceed kc".into(),
        });
    }
    Ok(BigUint::from(m / k).pow(k as u32) * kc)
}

/// `n^k * kc`, the order of `Gal(L/K) wr_Omega Gal(K^c/F)` for `[L:K] = n`.
pub fn kummer_size(n: u64, k: u64, kc: u64) -> BigUint {
    BigUint::from(n).pow(k as u32) * kc
}

/// Natural logarithm of a positive integer of any size.
pub fn ln_big(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "log of zero");
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits").to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("fits") as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `coeff * m^power / denominator`, the denominator kept as written
/// (`6^5`, `2^22 · 3^11`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeFormula {
    pub coeff: u64,
    pub power: u32,
    pub denominator: Vec<(u64, u32)>,
}

impl SizeFormula {
    const fn new(coeff: u64, power: u32) -> Self {
        SizeFormula { coeff, power, denominator: Vec::new() }
    }

    fn over(mut self, parts: &[(u64, u32)]) -> Self {
        self.denominator = parts.to_vec();
        self
    }

    pub fn denominator_value(&self) -> BigUint {
        self.denominator
            .iter()
            .map(|&(b, e)| BigUint::from(b).pow(e))
            .product()
    }

    /// Exact value at `m`; an error if the quotient is not an integer.
    pub fn evaluate(&self, m: u64) -> Result<BigUint> {
        let top = BigUint::from(m).pow(self.power) * self.coeff;
        let (q, r) = top.div_rem(&self.denominator_value());
        if !r.is_zero() {
            return Err(Error::DivisibilityViolation { numerator: m, divisor: 0 });
        }
        Ok(q)
    }
}

impl fmt::Display for SizeFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff != 1 {
            write!(f, "{}", self.coeff)?;
        }
        write!(f, "m^{}", self.power)?;
        let parts: Vec<String> = self
            .denominator
            .iter()
            .map(|&(b, e)| if e == 1 { b.to_string() } else { format!("{b}^{e}") })
            .collect();
        match parts.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", parts[0]),
            _ => write!(f, "/({})", parts.join("·")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub kf: u64,
    pub kc: u64,
    pub group: &'static str,
    pub regular: SizeFormula,
    pub omega: SizeFormula,
}

impl Table1Row {
    pub fn is_galois(&self) -> bool {
        self.kf == self.kc
    }

    /// Evaluates both formulas at `m`.
    pub fn evaluate(&self, m: u64) -> Result<SizeRow> {
        check_divides(m, self.kc)?;
        Ok(SizeRow {
            k: self.kf,
            kc: self.kc,
            group_name: self.group.to_string(),
            m,
            regular_size: self.regular.evaluate(m)?,
            omega_size: self.omega.evaluate(m)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeRow {
    pub k: u64,
    pub kc: u64,
    pub group_name: String,
    pub m: u64,
    #[serde(serialize_with = "as_decimal")]
    pub regular_size: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub omega_size: BigUint,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn row(kf: u64, kc: u64, group: &'static str, regular: SizeFormula, omega: SizeFormula) -> Table1Row {
    Table1Row { kf, kc, group, regular, omega }
}

/// Rows of the size table for `[K:F] = kf`, with the possible Galois groups
/// of the closure.
pub fn table1(kf: u64) -> Result<Vec<Table1Row>> {
    let f = SizeFormula::new;
    let rows = match kf {
        2 => vec![row(2, 2, "C2", f(1, 2).over(&[(2, 1)]), f(1, 2).over(&[(2, 1)]))],
        3 => vec![
            row(3, 3, "C3", f(1, 3).over(&[(9, 1)]), f(1, 3).over(&[(9, 1)])),
            row(3, 6, "S3", f(1, 6).over(&[(6, 5)]), f(2, 3).over(&[(9, 1)])),
        ],
        4 => vec![
            row(4, 4, "C4", f(1, 4).over(&[(64, 1)]), f(1, 4).over(&[(64, 1)])),
            row(4, 4, "C2×C2", f(1, 4).over(&[(64, 1)]), f(1, 4).over(&[(64, 1)])),
            row(4, 8, "D4", f(1, 8).over(&[(2, 21)]), f(1, 4).over(&[(2, 5)])),
            row(4, 12, "A4", f(1, 12).over(&[(2, 22), (3, 11)]), f(3, 4).over(&[(64, 1)])),
            row(4, 24, "S4", f(1, 24).over(&[(2, 69), (3, 23)]), f(3, 4).over(&[(32, 1)])),
        ],
        5 => vec![
            row(5, 5, "C5", f(1, 5).over(&[(625, 1)]), f(1, 5).over(&[(625, 1)])),
            row(5, 10, "D5", f(1, 10).over(&[(2, 9), (5, 9)]), f(2, 5).over(&[(625, 1)])),
            row(5, 20, "F5", f(1, 20).over(&[(2, 38), (5, 19)]), f(4, 5).over(&[(625, 1)])),
            row(5, 60, "A5", f(1, 60).over(&[(2, 118), (3, 59), (5, 59)]), f(12, 5).over(&[(625, 1)])),
            row(5, 120, "S5", f(1, 120).over(&[(2, 357), (3, 119), (5, 119)]), f(24, 5).over(&[(625, 1)])),
        ],
        _ => {
            return Err(Error::SpecOutOfRange {
                spec: format!("kf={kf}"),
                reason: "kf must be 2, 3, 4 or 5".into(),
            })
        }
    };
    Ok(rows)
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !matches!(c, ':' | ' ' | '_' | '×' | 'x' | '*'))
        .collect::<String>()
        .to_uppercase()
}

/// Looks up a row by group name (`S3`, `S:3`, `C2×C2`, `C2xC2`, ...).
pub fn table1_row(kf: u64, group: &str) -> Result<Table1Row> {
    let key = normalize(group);
    table1(kf)?
        .into_iter()
        .find(|r| normalize(r.group) == key)
        .ok_or_else(|| Error::SpecOutOfRange {
            spec: group.to_string(),
            reason: format!("no group of that name in the catalog for kf={kf}"),
        })
}

/// Closure groups that are dihedral (`S3` counts as `D3`).
pub fn is_dihedral(group: &str) -> bool {
    matches!(normalize(group).as_str(), "S3" | "D4" | "D5")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigurePoint {
    pub m: u64,
    pub log_regular: f64,
    pub log_omega: f64,
    /// Set on the row with `m = 2 kc`.
    pub reference: bool,
}

/// Natural logs of both sizes for `m = kc, 2kc, ...` up to `m_max`.
pub fn figure_data(kf: u64, group: &str, m_max: u64) -> Result<Vec<FigurePoint>> {
    let r = table1_row(kf, group)?;
    (1..=m_max / r.kc)
        .map(|i| {
            let m = i * r.kc;
            Ok(FigurePoint {
                m,
                log_regular: ln_big(&regular_size(m, r.kc)?),
                log_omega: ln_big(&omega_size(m, r.kf, r.kc)?),
                reference: m == 2 * r.kc,
            })
        })
        .collect()
}

pub const FIGURE_CSV_HEADER: &str = "m,log_regular,log_omega,marker";

pub fn figure_csv(points: &[FigurePoint]) -> String {
    let mut out = String::from(FIGURE_CSV_HEADER);
    out.push('\n');
    for p in points {
        let marker = if p.reference { "2kc" } else { "" };
        out.push_str(&format!("{},{},{},{}\n", p.m, p.log_regular, p.log_omega, marker));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    RegularLarger,
    Equal,
    OmegaLarger,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossoverLine {
    pub m: u64,
    #[serde(serialize_with = "as_decimal")]
    pub regular: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub omega: BigUint,
    pub comparison: Comparison,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossoverReport {
    pub kf: u64,
    pub kc: u64,
    pub group: String,
    pub galois: bool,
    pub dihedral: bool,
    pub lines: Vec<CrossoverLine>,
    /// Sizes agree at `m = 2 kc` (None when `m_max < 2 kc`).
    pub equal_at_2kc: Option<bool>,
    /// The regular product is strictly larger for every `m >= 3 kc` listed.
    pub regular_larger_from_3kc: bool,
    /// Galois rows: equal everywhere. Other rows: strictly larger from
    /// `3 kc` on, and equal at `2 kc` exactly for dihedral groups.
    pub pattern_holds: bool,
}

pub fn crossover_report(kf: u64, group: &str, m_max: u64) -> Result<CrossoverReport> {
    let r = table1_row(kf, group)?;
    let mut lines = Vec::new();
    for i in 1..=m_max / r.kc {
        let m = i * r.kc;
        let regular = regular_size(m, r.kc)?;
        let omega = omega_size(m, r.kf, r.kc)?;
        let comparison = match regular.cmp(&omega) {
            std::cmp::Ordering::Greater => Comparison::RegularLarger,
            std::cmp::Ordering::Equal => Comparison::Equal,
            std::cmp::Ordering::Less => Comparison::OmegaLarger,
        };
        lines.push(CrossoverLine { m, regular, omega, comparison });
    }
    let galois = r.is_galois();
    let dihedral = is_dihedral(r.group);
    let equal_at_2kc = lines
        .iter()
        .find(|l| l.m == 2 * r.kc)
        .map(|l| l.comparison == Comparison::Equal);
    let regular_larger_from_3kc = lines
        .iter()
        .filter(|l| l.m >= 3 * r.kc)
        .all(|l| l.comparison == Comparison::RegularLarger);
    let pattern_holds = if galois {
        lines.iter().all(|l| l.comparison == Comparison::Equal)
    } else {
        regular_larger_from_3kc && equal_at_2kc.is_none_or(|e| e == dihedral)
    };
    Ok(CrossoverReport {
        kf: r.kf,
        kc: r.kc,
        group: r.group.to_string(),
        galois,
        dihedral,
        lines,
        equal_at_2kc,
        regular_larger_from_3kc,
        pattern_holds,
    })
}

/// Exponents of 2 and 3 in `x`, when `x` has no other prime factor.
pub fn factor_2_3(x: &BigUint) -> Option<(u32, u32)> {
    let mut x = x.clone();
    let (two, three) = (BigUint::from(2u32), BigUint::from(3u32));
    let (mut a, mut b) = (0, 0);
    while !x.is_zero() && (&x % &two).is_zero() {
        x /= &two;
        a += 1;
    }
    while !x.is_zero() && (&x % &three).is_zero() {
        x /= &three;
        b += 1;
    }
    (x == BigUint::from(1u32)).then_some((a, b))
}

/// Sizes for a degree-6 extension `K` with closure of degree 72, a
/// 6-Kummer extension `L/K` and `m = [L^c : Q] = 432`.
#[derive(Debug, Clone, Serialize)]
pub struct KummerComparison {
    pub m: u64,
    pub k: u64,
    pub kc: u64,
    pub kummer_degree: u64,
    #[serde(serialize_with = "as_decimal")]
    pub kummer_wreath_size: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub coset_wreath_size: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub ratio: BigUint,
    pub ratio_factors: (u32, u32),
    pub note: String,
}

pub fn kummer_comparison(m: u64, k: u64, kc: u64, kummer_degree: u64) -> Result<KummerComparison> {
    let kummer_wreath_size = kummer_size(kummer_degree, k, kc);
    let coset_wreath_size = omega_size(m, k, kc)?;
    let (ratio, rem) = coset_wreath_size.div_rem(&kummer_wreath_size);
    if !rem.is_zero() {
        return Err(Error::DivisibilityViolation { numerator: m, divisor: kummer_degree });
    }
    let ratio_factors = factor_2_3(&ratio).unwrap_or((0, 0));
    let approx = ratio.to_f64().unwrap_or(f64::INFINITY);
    let note = format!("exact ratio {ratio}, about {:.2} million", approx / 1e6);
    Ok(KummerComparison {
        m,
        k,
        kc,
        kummer_degree,
        kummer_wreath_size,
        coset_wreath_size,
        ratio,
        ratio_factors,
        note,
    })
}

/// The `m = 432`, `k = 6`, `kc = 72`, `[L:K] = 6` instance.
pub fn example_432() -> KummerComparison {
    kummer_comparison(432, 6, 72, 6).expect("fixed data")
}

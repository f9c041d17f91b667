//! The case-1 exponent tables of the two families, symbolic in `N0` and `ŝ`.

use std::fmt;

use exactmath::{solve_linear, Field, Point, Rational};
use kovacic::{assignments, classify, degree_for, Sign, SignAssignment};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::ode::{build_12_ode, family11};
use crate::{Family, PipelineError};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `const_part + n0_coeff·N0 + shat_coeff·ŝ`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AffineInS {
    #[serde(serialize_with = "kovacic::json::rational")]
    pub const_part: Rational,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub n0_coeff: Rational,
    #[serde(serialize_with = "kovacic::json::rational")]
    pub shat_coeff: Rational,
}

impl AffineInS {
    pub fn constant(c: Rational) -> Self {
        AffineInS { const_part: c, n0_coeff: Rational::zero(), shat_coeff: Rational::zero() }
    }

    pub fn is_s_independent(&self) -> bool {
        self.shat_coeff.is_zero()
    }

    /// Substitutes a concrete `N0`.
    pub fn at_n0(&self, n0: u32) -> AffineInS {
        AffineInS {
            const_part: &self.const_part + &self.n0_coeff * Rational::from_integer(n0.into()),
            n0_coeff: Rational::zero(),
            shat_coeff: self.shat_coeff.clone(),
        }
    }

    /// Decidable once `N0` is substituted.
    pub fn is_nonnegative_integer(&self) -> bool {
        self.shat_coeff.is_zero() && self.n0_coeff.is_zero() && self.const_part.is_integer() && !self.const_part.is_negative()
    }

    pub fn eval(&self, n0: u32, shat: &Rational) -> Rational {
        &self.const_part + &self.n0_coeff * Rational::from_integer(n0.into()) + &self.shat_coeff * shat
    }

    fn negated_shat(&self) -> AffineInS {
        AffineInS { shat_coeff: -self.shat_coeff.clone(), ..self.clone() }
    }

    /// The `N0`/constant part as text, `None` if both vanish.
    fn base_text(&self) -> Option<String> {
        let mut out = String::new();
        if !self.n0_coeff.is_zero() {
            out.push_str(&coeff_text(&self.n0_coeff, "N0", true));
        }
        if !self.const_part.is_zero() {
            if out.is_empty() {
                out.push_str(&self.const_part.to_string());
            } else {
                let sign = if self.const_part.is_negative() { '-' } else { '+' };
                out.push_str(&format!(" {sign} {}", self.const_part.abs()));
            }
        }
        (!out.is_empty()).then_some(out)
    }
}

fn coeff_text(k: &Rational, var: &str, leading: bool) -> String {
    let mag = k.abs();
    let body = if mag.is_one() { var.to_string() } else { format!("{mag}*{var}") };
    match (leading, k.is_negative()) {
        (true, true) => format!("-{body}"),
        (true, false) => body,
        (false, _) => body,
    }
}

impl fmt::Display for AffineInS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = self.base_text();
        match (base, self.shat_coeff.is_zero()) {
            (None, true) => write!(f, "0"),
            (Some(b), true) => write!(f, "{b}"),
            (None, false) => write!(f, "{}", coeff_text(&self.shat_coeff, "ŝ", true)),
            (Some(b), false) => {
                let sign = if self.shat_coeff.is_negative() { '-' } else { '+' };
                write!(f, "{b} {sign} {}", coeff_text(&self.shat_coeff, "ŝ", false))
            }
        }
    }
}

/// One assignment of the table, signs listed in the family's column order.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MEntry {
    pub signs: Vec<Sign>,
    pub m: AffineInS,
}

/// A displayed row: two assignments merged under `±`/`∓`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MRow {
    pub columns: Vec<String>,
    pub upper: MEntry,
    pub lower: MEntry,
    pub m_text: String,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct MTable {
    pub family: Family,
    pub headers: Vec<String>,
    /// Every assignment, lexicographic in column order.
    pub entries: Vec<MEntry>,
    pub rows: Vec<MRow>,
}

/// Locations of the columns of a family table, highest first.
fn columns(family: Family, beta: &Rational, delta: &Rational) -> Vec<Point> {
    match family {
        Family::Linear11Distinct => vec![
            Point::Infinity,
            Point::Finite(delta / beta),
            Point::Finite(Rational::one()),
            Point::Finite(Rational::zero()),
        ],
        Family::Linear11Equal | Family::Quadratic12 => {
            vec![Point::Infinity, Point::Finite(Rational::zero()), Point::Finite(Rational::one())]
        }
    }
}

fn headers(family: Family) -> Vec<String> {
    let cols: &[&str] = match family {
        Family::Linear11Distinct => &["eps(inf)", "eps(delta/beta)", "eps(1)", "eps(0)"],
        _ => &["eps(inf)", "eps(0)", "eps(1)"],
    };
    cols.iter().map(|s| s.to_string()).collect()
}

/// Concrete `m` for every assignment, keyed by column signs.
fn concrete_m(family: Family, beta: &Rational, delta: &Rational, n0: u32, s: &Rational) -> Result<Vec<(Vec<Sign>, Rational)>, PipelineError> {
    let r = match family {
        Family::Linear11Distinct => family11(beta, delta, n0, s)?.2.r,
        Family::Quadratic12 => build_12_ode(beta, delta, n0, s)?.1.r,
        Family::Linear11Equal => return Err(PipelineError::ShatUndefined),
    };
    let profiles = classify(&r)?;
    let cols = columns(family, beta, delta);
    if profiles.len() != cols.len() || cols.iter().any(|c| !profiles.iter().any(|p| &p.location == c)) {
        return Err(PipelineError::TableFit(format!("singular set differs from the table columns at s = {s}, N0 = {n0}")));
    }
    let mut out = Vec::new();
    for a in assignments(&profiles) {
        let m = degree_for(&profiles, &a);
        let m = m.as_rational().ok_or_else(|| PipelineError::TableFit(format!("irrational m = {m}")))?;
        let signs: Vec<Sign> = cols.iter().map(|c| a.get(c).expect("total assignment")).collect();
        out.push((signs, m));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Instances used to fit the (1,1) table: `(β, δ, N0, s)` with `ŝ > 0`
/// non-integer and `N0 ≥ 3`, so the principal square roots give
/// `α_1^+ = (1+ŝ)/2` and `α_∞^+ = N0/2`.
const FIT11: [(i64, i64, u32, i64, i64); 6] =
    [(2, 3, 3, 1, 3), (2, 3, 4, 2, 5), (2, 3, 5, 7, 3), (3, 2, 3, -5, 2), (3, 2, 6, -3, 7), (1, 4, 4, 9, 2)];
const FIT12: [(i64, i64, u32, i64, i64); 4] = [(1, 1, 3, 2, 1), (5, 2, 1, -3, 1), (2, 7, 2, 1, 3), (3, 1, 4, -7, 5)];

fn fit_affine(samples: &[(u32, Rational, Rational)]) -> Result<AffineInS, PipelineError> {
    // unknowns: const, n0 coefficient, ŝ coefficient
    let rows: Vec<Vec<Rational>> = samples[..3].iter().map(|(n0, sh, _)| vec![Rational::one(), Rational::from_integer((*n0).into()), sh.clone()]).collect();
    let rhs: Vec<Rational> = samples[..3].iter().map(|(_, _, m)| m.clone()).collect();
    let sol = solve_linear(rows, rhs).ok_or_else(|| PipelineError::TableFit("singular fit".into()))?;
    let fit = AffineInS { const_part: sol[0].clone(), n0_coeff: sol[1].clone(), shat_coeff: sol[2].clone() };
    for (n0, sh, m) in samples {
        if &fit.eval(*n0, sh) != m {
            return Err(PipelineError::TableFit(format!("m is not affine in (N0, ŝ): {fit} fails at N0 = {n0}, ŝ = {sh}")));
        }
    }
    Ok(fit)
}

/// The symbolic `m` table of a family.
pub fn alpha_table_symbolic(family: Family) -> Result<MTable, PipelineError> {
    let (fits, cols): (&[(i64, i64, u32, i64, i64)], usize) = match family {
        Family::Linear11Distinct => (&FIT11, 4),
        Family::Quadratic12 => (&FIT12, 3),
        Family::Linear11Equal => return Err(PipelineError::ShatUndefined),
    };
    let mut per_assignment: Vec<(Vec<Sign>, Vec<(u32, Rational, Rational)>)> = Vec::new();
    for &(b, d, n0, sn, sd) in fits {
        let (beta, delta, s) = (q(b, 1), q(d, 1), q(sn, sd));
        let shat = if family == Family::Linear11Distinct { &s / (&delta - &beta) } else { Rational::zero() };
        for (i, (signs, m)) in concrete_m(family, &beta, &delta, n0, &s)?.into_iter().enumerate() {
            if per_assignment.len() <= i {
                per_assignment.push((signs.clone(), Vec::new()));
            }
            per_assignment[i].1.push((n0, shat.clone(), m));
        }
    }
    let mut entries = Vec::new();
    for (signs, samples) in per_assignment {
        let m = if family == Family::Quadratic12 {
            let m0 = samples[0].2.clone();
            if samples.iter().any(|(_, _, m)| m != &m0) {
                return Err(PipelineError::TableFit("m varies across (1,2) instances".into()));
            }
            AffineInS::constant(m0)
        } else {
            fit_affine(&samples)?
        };
        entries.push(MEntry { signs, m });
    }
    debug_assert_eq!(entries.len(), 1 << cols);
    let rows = merge_rows(family, &entries)?;
    Ok(MTable { family, headers: headers(family), entries, rows })
}

fn find<'a>(entries: &'a [MEntry], signs: &[Sign]) -> &'a MEntry {
    entries.iter().find(|e| e.signs == signs).expect("all assignments present")
}

/// Merges assignments that differ by flipping the two paired columns
/// together; the upper sign of `±` belongs to the `+` member.
fn merge_rows(family: Family, entries: &[MEntry]) -> Result<Vec<MRow>, PipelineError> {
    use Sign::{Minus, Plus};
    let mut rows = Vec::new();
    for same in [true, false] {
        let pair_upper = [Plus, if same { Plus } else { Minus }];
        let pair_lower = [Minus, if same { Minus } else { Plus }];
        let pair_cols = ["±".to_string(), if same { "±" } else { "∓" }.to_string()];
        let outer: Vec<Vec<Sign>> = match family {
            Family::Linear11Distinct => vec![vec![Plus, Plus], vec![Plus, Minus], vec![Minus, Plus], vec![Minus, Minus]],
            _ => vec![vec![Plus], vec![Minus]],
        };
        for o in outer {
            let build = |pair: [Sign; 2]| -> Vec<Sign> {
                let mut v = vec![o[0]];
                v.extend(pair);
                v.extend(o.iter().skip(1));
                v
            };
            let upper = find(entries, &build(pair_upper)).clone();
            let lower = find(entries, &build(pair_lower)).clone();
            let m_text = merged_text(&upper.m, &lower.m)?;
            let mut cols = vec![o[0].symbol().to_string()];
            cols.extend(pair_cols.iter().cloned());
            cols.extend(o.iter().skip(1).map(|s| s.symbol().to_string()));
            rows.push(MRow { columns: cols, upper, lower, m_text });
        }
    }
    Ok(rows)
}

fn merged_text(upper: &AffineInS, lower: &AffineInS) -> Result<String, PipelineError> {
    if upper == lower {
        return Ok(upper.to_string());
    }
    if upper.negated_shat() != *lower {
        return Err(PipelineError::TableFit(format!("rows {upper} and {lower} do not merge under ±")));
    }
    let pm = if upper.shat_coeff.is_negative() { '∓' } else { '±' };
    let sh = coeff_text(&upper.shat_coeff, "ŝ", false);
    Ok(match upper.base_text() {
        Some(b) => format!("{b} {pm} {sh}"),
        None => format!("{pm}{sh}"),
    })
}

impl MTable {
    /// Plain-text rendering compared against the golden files.
    pub fn render(&self) -> String {
        let title = match self.family {
            Family::Linear11Distinct => "# family (1,1), beta != delta; ŝ := s/(delta - beta)",
            Family::Linear11Equal => "# family (1,1), beta = delta",
            Family::Quadratic12 => "# family (1,2)",
        };
        let mut header = self.headers.clone();
        header.push("m".into());
        let mut lines = vec![header];
        for r in &self.rows {
            let mut l = r.columns.clone();
            l.push(r.m_text.clone());
            lines.push(l);
        }
        let widths: Vec<usize> =
            (0..lines[0].len()).map(|i| lines.iter().map(|l| l[i].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("{title}\n");
        for l in lines {
            let cells: Vec<String> = l
                .iter()
                .enumerate()
                .map(|(i, c)| if i + 1 == l.len() { c.clone() } else { format!("{c}{}", " ".repeat(widths[i] - c.chars().count())) })
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// Per displayed row: `m` does not depend on `s`.
pub fn conjecture_check(table: &MTable) -> Vec<bool> {
    table.rows.iter().map(|r| r.upper.m.is_s_independent() && r.lower.m.is_s_independent()).collect()
}

/// Per assignment, in `entries` order.
pub fn conjecture_flags(table: &MTable) -> Vec<bool> {
    table.entries.iter().map(|e| e.m.is_s_independent()).collect()
}

/// Sign assignment over the table columns for a concrete instance.
pub fn assignment_for(family: Family, beta: &Rational, delta: &Rational, signs: &[Sign]) -> SignAssignment {
    SignAssignment(columns(family, beta, delta).into_iter().zip(signs.iter().copied()).collect())
}

pub const GOLDEN_11: &str = include_str!("../golden/family11_m_table.txt");
pub const GOLDEN_12: &str = include_str!("../golden/family12_m_table.txt");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_text() {
        let a = AffineInS { const_part: q(-1, 1), n0_coeff: q(1, 1), shat_coeff: q(-1, 1) };
        assert_eq!(a.to_string(), "N0 - 1 - ŝ");
        assert_eq!(merged_text(&a, &a.negated_shat()).unwrap(), "N0 - 1 ∓ ŝ");
        assert_eq!(AffineInS::constant(q(0, 1)).to_string(), "0");
        assert!(AffineInS::constant(q(3, 1)).is_nonnegative_integer());
        assert!(!a.at_n0(2).is_nonnegative_integer());
    }

    #[test]
    fn equal_rates_have_no_symbolic_table() {
        assert!(matches!(alpha_table_symbolic(Family::Linear11Equal), Err(PipelineError::ShatUndefined)));
    }
}

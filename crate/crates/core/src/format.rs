//! The ideal text format and deterministic report rendering.
//!
//! Grammar, whitespace-insensitive except inside a term:
//!
//! ```text
//! ideal    := monomial (',' monomial)*
//! monomial := '1' | term (('*' | whitespace) term)*
//! term     := 'x' INDEX ('^' EXPONENT)?
//! ```
//!
//! `INDEX` and `EXPONENT` are positive decimal integers and indices are
//! 1-based. A repeated variable inside one monomial multiplies out.
//!
//! The structured report is JSON with the keys `version`, `vars`,
//! `generators`, `cofactor`, `core`, `height`, `spread`, `k_max`,
//! `power_sizes`, `ass_profile`, `depth_profile`, `stable_ass`,
//! `limit_depth`, `astab`, `dstab`, `flags`, `checks` and `ass_method`.
//! Primes are arrays of 1-based variable indices. Keys are emitted in
//! sorted order, so output is byte-stable.

use serde_json::{json, Value};

use crate::error::ParseError;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{Exponent, Monomial, MAX_VARS};
use crate::polymatroid::RelationGraph;
use crate::prime::{AssSet, MonomialPrime};
use crate::search::HuntReport;
use crate::stability::StabilityReport;

/// A parsed ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDocument {
    pub vars: usize,
    /// Whether `vars` was inferred as the largest index used.
    pub inferred: bool,
    /// Generators as written, in source order.
    pub generators: Vec<Monomial>,
    /// Where each generator starts, as `(line, column)`.
    pub positions: Vec<(usize, usize)>,
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

struct Term {
    index: usize,
    exponent: Exponent,
    line: usize,
    column: usize,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace; reports whether any was skipped.
    fn skip_ws(&mut self) -> bool {
        let mut any = false;
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
            any = true;
        }
        any
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expected(&mut self, what: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {what}, found '{c}'")),
            None => self.error(format!("expected {what}, found end of input")),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64, ParseError> {
        let (line, column) = (self.line, self.column);
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.expected(what));
        }
        let value: u64 = digits.parse().map_err(|_| ParseError::Syntax {
            line,
            column,
            message: format!("{what} {digits} is too large"),
        })?;
        if value == 0 {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("{what} must be positive"),
            });
        }
        Ok(value)
    }

    /// A term, and whether whitespace followed it.
    fn term(&mut self) -> Result<(Term, bool), ParseError> {
        let (line, column) = (self.line, self.column);
        if self.peek() != Some('x') {
            return Err(self.expected("a variable 'x<index>'"));
        }
        self.bump();
        let index = self.number("variable index")?;
        if index > MAX_VARS as u64 {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("at most {MAX_VARS} variables are supported"),
            });
        }
        let mut exponent = 1;
        let mut spaced = self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let (l, c) = (self.line, self.column);
            exponent =
                Exponent::try_from(self.number("exponent")?).map_err(|_| ParseError::Syntax {
                    line: l,
                    column: c,
                    message: "exponent is too large".into(),
                })?;
            spaced = false;
        }
        Ok((
            Term {
                index: index as usize,
                exponent,
                line,
                column,
            },
            spaced,
        ))
    }

    /// A monomial as its terms; an empty list is the unit monomial.
    fn monomial(&mut self) -> Result<Vec<Term>, ParseError> {
        self.skip_ws();
        if self.peek() == Some('1') {
            self.bump();
            return Ok(Vec::new());
        }
        let (first, mut spaced) = self.term()?;
        let mut terms = vec![first];
        loop {
            spaced |= self.skip_ws();
            let next = match self.peek() {
                Some('*') => {
                    self.bump();
                    self.skip_ws();
                    self.term()?
                }
                Some('x') if spaced => self.term()?,
                Some('x') => return Err(self.error("expected '*' or whitespace between variables")),
                _ => return Ok(terms),
            };
            terms.push(next.0);
            spaced = next.1;
        }
    }
}

/// Parse an ideal; `explicit_vars` fixes the ambient ring, otherwise it is
/// the largest index used.
pub fn parse_ideal(text: &str, explicit_vars: Option<usize>) -> Result<IdealDocument, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut monomials = Vec::new();
    loop {
        cur.skip_ws();
        let start = (cur.line, cur.column);
        monomials.push((start, cur.monomial()?));
        cur.skip_ws();
        match cur.peek() {
            Some(',') => {
                cur.bump();
            }
            None => break,
            Some(_) => return Err(cur.expected("',' or end of input")),
        }
    }

    let max_index = monomials
        .iter()
        .flat_map(|(_, ts)| ts.iter().map(|t| t.index))
        .max();
    let (vars, inferred) = match explicit_vars {
        Some(n) => {
            if n == 0 || n > MAX_VARS {
                return Err(crate::error::IdealError::TooManyVars {
                    max: MAX_VARS,
                    found: n,
                }
                .into());
            }
            (n, false)
        }
        None => (max_index.ok_or(ParseError::NoVariables)?, true),
    };

    let mut generators = Vec::with_capacity(monomials.len());
    let mut positions = Vec::with_capacity(monomials.len());
    for (start, terms) in monomials {
        let mut m = Monomial::one(vars);
        for t in terms {
            if t.index > vars {
                return Err(ParseError::IndexOutOfRange {
                    line: t.line,
                    column: t.column,
                    index: t.index,
                    vars,
                });
            }
            m = m.checked_mul(&Monomial::pure_power(vars, t.index - 1, t.exponent))?;
        }
        generators.push(m);
        positions.push(start);
    }
    let ideal = minimalize(generators.clone(), vars)?;
    let mut warnings = Vec::new();
    if ideal.len() < generators.len() {
        warnings.push(format!(
            "{} of {} generators were redundant and have been removed",
            generators.len() - ideal.len(),
            generators.len()
        ));
    }
    Ok(IdealDocument {
        vars,
        inferred,
        generators,
        positions,
        ideal,
        warnings,
    })
}

/// The ideal in the input format; parsing it back gives the same ideal.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    ideal.to_string()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

fn prime_json(p: &MonomialPrime) -> Value {
    json!(p.members().iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn ass_json(ass: &AssSet) -> Value {
    Value::Array(ass.iter().map(prime_json).collect())
}

fn strings(ideal: &MonomialIdeal) -> Vec<String> {
    ideal.generators().iter().map(ToString::to_string).collect()
}

pub fn report_json(r: &StabilityReport) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "vars": r.vars(),
        "generators": strings(&r.ideal),
        "cofactor": r.cofactor.to_string(),
        "core": strings(&r.core),
        "height": r.height,
        "spread": r.spread,
        "k_max": r.k_max,
        "power_sizes": r.power_sizes,
        "ass_profile": r.ass_profile.iter().map(ass_json).collect::<Vec<_>>(),
        "depth_profile": r.depth_profile,
        "stable_ass": ass_json(&r.stable_ass),
        "limit_depth": r.limit_depth,
        "astab": r.astab,
        "dstab": r.dstab,
        "flags": {
            "polymatroidal": r.flags.polymatroidal,
            "matroidal": r.flags.matroidal,
            "strong_exchange": r.flags.strong_exchange,
            "max_in_stable_ass": r.flags.max_in_stable_ass,
            "indices_agree": r.indices_agree(),
        },
        "checks": {
            "persistence": r.checks.persistence,
            "depth_nonincreasing": r.checks.depth_nonincreasing,
            "limit_depth": r.checks.limit_depth,
            "spread_criterion": r.checks.spread_criterion,
            "depth_zero_iff_maximal": r.checks.depth_zero_iff_maximal,
        },
        "ass_method": r.method.name(),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serializable");
    s.push('\n');
    s
}

fn report_text(r: &StabilityReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "I = ({})", r.ideal);
    let _ = writeln!(
        w,
        "n = {}, |G(I)| = {}, height = {}, gcd = {}",
        r.vars(),
        r.ideal.len(),
        r.height,
        r.cofactor
    );
    let flags: Vec<&str> = [
        (r.flags.polymatroidal, "polymatroidal"),
        (r.flags.matroidal, "matroidal"),
        (r.flags.strong_exchange, "strong exchange"),
    ]
    .iter()
    .filter(|f| f.0)
    .map(|f| f.1)
    .collect();
    let _ = writeln!(w, "properties: {}", flags.join(", "));
    let _ = writeln!(w);
    let _ = writeln!(w, "{:>3}  {:>8}  {:>5}  Ass(I^k)", "k", "|G(I^k)|", "depth");
    for k in 0..r.k_max {
        let _ = writeln!(
            w,
            "{:>3}  {:>8}  {:>5}  {}",
            k + 1,
            r.power_sizes[k],
            r.depth_profile[k],
            r.ass_profile[k]
        );
    }
    let _ = writeln!(w);
    let _ = writeln!(w, "astab = {}", r.astab);
    let _ = writeln!(w, "dstab = {}", r.dstab);
    let _ = writeln!(w, "ℓ = {}", r.spread);
    let _ = writeln!(w, "k_max = {}", r.k_max);
    let _ = writeln!(w, "limit depth = {}", r.limit_depth);
    let _ = writeln!(w, "stable Ass = {}", r.stable_ass);
    let _ = writeln!(
        w,
        "maximal ideal in stable Ass: {}",
        if r.flags.max_in_stable_ass {
            "yes"
        } else {
            "no"
        }
    );
    if !r.indices_agree() {
        let _ = writeln!(
            w,
            "note: astab != dstab; the conjectured equality fails here"
        );
    }
    let failed: Vec<&str> = [
        (r.checks.persistence, "persistence"),
        (r.checks.depth_nonincreasing, "depth-nonincreasing"),
        (r.checks.limit_depth, "limit-depth"),
        (r.checks.spread_criterion, "spread-criterion"),
        (r.checks.depth_zero_iff_maximal, "depth-zero-iff-maximal"),
    ]
    .iter()
    .filter(|c| !c.0)
    .map(|c| c.1)
    .collect();
    if failed.is_empty() {
        let _ = writeln!(w, "cross-checks: all pass");
    } else {
        let _ = writeln!(w, "cross-checks FAILED: {}", failed.join(", "));
    }
    out
}

pub fn render_report(report: &StabilityReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => report_text(report),
        ReportFormat::Json => pretty(&report_json(report)),
    }
}

pub fn graph_json(graph: &RelationGraph, spread: Option<usize>) -> Value {
    json!({
        "vars": graph.vars,
        "vertices": graph.vertices.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "edges": graph.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>(),
        "components": graph.components.iter()
            .map(|c| c.iter().map(|i| i + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "r": graph.r(),
        "s": graph.s(),
        "spread": spread,
    })
}

pub fn render_graph(graph: &RelationGraph, spread: Option<usize>, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => pretty(&graph_json(graph, spread)),
        ReportFormat::Text => {
            let edges: Vec<String> = graph
                .edges
                .iter()
                .map(|&(i, j)| format!("x{}-x{}", i + 1, j + 1))
                .collect();
            let comps: Vec<String> = graph.components.iter().map(|c| format!("{c:?}")).collect();
            let mut s = format!(
                "vertices: {:?}\nedges: {}\ncomponents: {}\nr = {}, s = {}\n",
                graph.vertices,
                if edges.is_empty() {
                    "none".to_string()
                } else {
                    edges.join(" ")
                },
                if comps.is_empty() {
                    "none".to_string()
                } else {
                    comps.join(" ")
                },
                graph.r(),
                graph.s()
            );
            if let Some(l) = spread {
                s.push_str(&format!("ℓ = {l}\n"));
            }
            s
        }
    }
}

pub fn render_hunt(report: &HuntReport, format: ReportFormat) -> String {
    let space = &report.space;
    match format {
        ReportFormat::Json => pretty(&json!({
            "version": env!("CARGO_PKG_VERSION"),
            "vars": space.vars,
            "degree": space.degree,
            "cap": space.cap,
            "mode": match space.mode {
                crate::search::SearchMode::Exhaustive => json!("exhaustive"),
                crate::search::SearchMode::Sampled { count, seed } =>
                    json!({ "samples": count, "seed": seed }),
            },
            "examined": report.examined,
            "hits": report.hits.iter().map(|h| json!({
                "generators": strings(&h.ideal),
                "astab": h.astab,
                "dstab": h.dstab,
            })).collect::<Vec<_>>(),
        })),
        ReportFormat::Text => {
            let mut s = format!(
                "examined {} polymatroidal ideals (n = {}, d = {}, cap {}); {} with astab != dstab\n",
                report.examined,
                space.vars,
                space.degree,
                space.cap,
                report.hits.len()
            );
            for h in &report.hits {
                s.push_str(&format!(
                    "astab = {}, dstab = {}: ({})\n",
                    h.astab, h.dstab, h.ideal
                ));
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::stability::full_report;

    #[test]
    fn parses_examples() {
        let doc = parse_ideal("x1^3*x2*x3, x1^2*x2^2*x3, x1^3*x2^2", None).unwrap();
        assert_eq!(doc.vars, 3);
        assert!(doc.inferred);
        assert_eq!(doc.ideal, fixtures::height_one_ideal());
        assert!(doc.warnings.is_empty());

        let doc = parse_ideal("x1 x2, x1 x3,\n x2 x3", Some(4)).unwrap();
        assert_eq!(doc.vars, 4);
        assert!(!doc.inferred);
        assert_eq!(doc.ideal, fixtures::triangle().extend_vars(4).unwrap());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(
            parse_ideal("x0", None),
            Err(ParseError::Syntax {
                line: 1,
                column: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal("x1,\n  x2^0", None),
            Err(ParseError::Syntax {
                line: 2,
                column: 6,
                ..
            })
        ));
        assert!(matches!(
            parse_ideal("x1x2", None),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_ideal("x1, x5", Some(3)),
            Err(ParseError::IndexOutOfRange {
                index: 5,
                vars: 3,
                ..
            })
        ));
        assert_eq!(parse_ideal("  ", None), Err(ParseError::Empty));
        assert_eq!(parse_ideal("1", None), Err(ParseError::NoVariables));
        assert!(parse_ideal("x1,", None).is_err());
    }

    #[test]
    fn unit_and_repeats() {
        let doc = parse_ideal("1, x1", Some(2)).unwrap();
        assert!(doc.ideal.is_unit());
        assert_eq!(doc.warnings.len(), 1);
        let doc = parse_ideal("x1 * x1 ^ 2 x2", None).unwrap();
        assert_eq!(doc.ideal.generators()[0], Monomial::from_slice(&[3, 1]));
    }

    #[test]
    fn round_trip() {
        for i in [fixtures::counterexample(), fixtures::height_one_ideal()] {
            let back = parse_ideal(&render_ideal(&i), Some(i.vars())).unwrap();
            assert_eq!(back.ideal, i);
        }
    }

    #[test]
    fn text_report_summary() {
        let text = render_report(
            &full_report(&fixtures::counterexample()).unwrap(),
            ReportFormat::Text,
        );
        assert!(text.contains("astab = 2\n"));
        assert!(text.contains("dstab = 1\n"));
        let text = render_report(
            &full_report(&fixtures::squarefree_veronese()).unwrap(),
            ReportFormat::Text,
        );
        assert!(text.contains("ℓ = 4\n"));
        let p = parse_ideal("x1^2 x3", None).unwrap().ideal;
        let text = render_report(&full_report(&p).unwrap(), ReportFormat::Text);
        assert!(text.contains("astab = 1\n") && text.contains("dstab = 1\n"));
    }

    #[test]
    fn json_report_is_stable() {
        let r = full_report(&fixtures::height_one_ideal()).unwrap();
        let a = render_report(&r, ReportFormat::Json);
        assert_eq!(a, render_report(&r, ReportFormat::Json));
        let v: Value = serde_json::from_str(&a).unwrap();
        for key in [
            "vars",
            "generators",
            "spread",
            "k_max",
            "ass_profile",
            "depth_profile",
            "astab",
            "dstab",
            "flags",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["astab"], 2);
        assert_eq!(v["dstab"], 2);
    }
}

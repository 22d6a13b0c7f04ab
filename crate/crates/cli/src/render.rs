use clap::ValueEnum;
use cobg_core::groupoid::GroupoidReport;
use cobg_core::interchange::{CompressedDoc, MatrixDoc};
use cobg_core::{CobMatrix, CompressedMatrix, CompressionSpec, CoordVec, Family, Rational};
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
    Latex,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output documents always serialize")
}

/// LaTeX form of a rational, `-\frac{p}{q}` or a bare integer.
pub fn tex(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
}

fn grid(rows: &[Vec<Rational>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(Rational::to_string).collect())
        .collect();
    let cols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    cells
        .iter()
        .map(|r| {
            r.iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn csv(rows: &[Vec<Rational>]) -> String {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(Rational::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn bmatrix(rows: &[Vec<Rational>]) -> String {
    let body: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "  {} \\\\",
                r.iter().map(tex).collect::<Vec<_>>().join(" & ")
            )
        })
        .collect();
    format!("\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}", body.join("\n"))
}

pub fn matrix(m: &CobMatrix, fmt: Format) -> String {
    let rows = m.rows();
    match fmt {
        Format::Pretty => format!(
            "{} <- {} ({}x{})\n{}",
            m.range(),
            m.domain(),
            m.dim(),
            m.dim(),
            grid(&rows)
        ),
        Format::Json => to_json(&MatrixDoc::from(m)),
        Format::Csv => csv(&rows),
        Format::Latex => bmatrix(&rows),
    }
}

fn indices(spec: &CompressionSpec) -> String {
    spec.retained()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn compressed(c: &CompressedMatrix, fmt: Format) -> String {
    let rows = c.decompress();
    match fmt {
        Format::Pretty => format!(
            "{} <- {}, indices {} of {} ({} stored)\n{}",
            c.range(),
            c.domain(),
            indices(c.spec()),
            c.spec().m(),
            c.stored_len(),
            grid(&rows)
        ),
        Format::Json => to_json(&CompressedDoc::from(c)),
        Format::Csv => csv(&rows),
        Format::Latex => bmatrix(&rows),
    }
}

pub fn coords(v: &CoordVec, fmt: Format) -> String {
    let text: Vec<String> = v.coords.iter().map(Rational::to_string).collect();
    match fmt {
        Format::Pretty => format!("{}: {}", v.basis, text.join(", ")),
        Format::Json => to_json(&json!({ "basis": v.basis, "coords": v.coords })),
        Format::Csv => text.join(","),
        Format::Latex => bmatrix(&v.coords.iter().map(|c| vec![c.clone()]).collect::<Vec<_>>()),
    }
}

fn symbol(f: Family, n: usize) -> String {
    match f {
        Family::Monomial => format!("x^{{{n}}}"),
        Family::ChebyshevT => format!("T_{{{n}}}"),
        Family::Legendre => format!("P_{{{n}}}"),
        Family::LegendreShifted => format!("\\tilde{{P}}_{{{n}}}"),
        Family::HermitePhysicist => format!("H_{{{n}}}"),
        Family::Laguerre => format!("L_{{{n}}}"),
    }
}

pub fn expansion(
    from: Family,
    to: Family,
    n: usize,
    terms: &[(usize, Rational)],
    fmt: Format,
) -> String {
    match fmt {
        Format::Pretty => terms
            .iter()
            .map(|(i, c)| format!("{i}:{c}"))
            .collect::<Vec<_>>()
            .join(", "),
        Format::Json => {
            let list: Vec<_> = terms
                .iter()
                .map(|(i, c)| json!({ "index": i, "value": c }))
                .collect();
            to_json(&json!({ "from": from.name(), "to": to.name(), "degree": n, "terms": list }))
        }
        Format::Csv => std::iter::once("index,value".to_string())
            .chain(terms.iter().map(|(i, c)| format!("{i},{c}")))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => {
            let mut out = format!("{} =", symbol(from, n));
            for (pos, (i, c)) in terms.iter().enumerate() {
                let sign = match (pos, c.is_negative()) {
                    (0, false) => " ",
                    (0, true) => " -",
                    (_, false) => " + ",
                    (_, true) => " - ",
                };
                out.push_str(sign);
                out.push_str(&format!("{} {}", tex(&c.abs()), symbol(to, *i)));
            }
            out
        }
    }
}

pub fn report(r: &GroupoidReport, fmt: Format) -> String {
    let summary = if r.all_passed() {
        format!("{} elements, all axioms pass", r.elements)
    } else {
        let failed = r.checks.iter().filter(|c| !c.passed).count();
        format!("{} elements, {failed} axioms failed", r.elements)
    };
    let status = |passed: bool| if passed { "pass" } else { "FAIL" };
    match fmt {
        Format::Pretty => {
            let names: Vec<String> = r.bases.iter().map(ToString::to_string).collect();
            let mut lines = vec![format!("bases {} (dim {})", names.join(", "), r.dim)];
            for c in &r.checks {
                let mut line = format!(
                    "{:<14}{}  ({} checked)",
                    c.axiom.name(),
                    status(c.passed),
                    c.checked
                );
                if let Some(why) = &c.failure {
                    line.push_str(&format!(": {why}"));
                }
                lines.push(line);
            }
            lines.push(summary);
            lines.join("\n")
        }
        Format::Json => to_json(r),
        Format::Csv => std::iter::once("axiom,passed,checked".to_string())
            .chain(
                r.checks
                    .iter()
                    .map(|c| format!("{},{},{}", c.axiom.name(), c.passed, c.checked)),
            )
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => {
            let mut lines = vec![
                "\\begin{tabular}{lrr}".to_string(),
                "axiom & status & checked \\\\".to_string(),
            ];
            for c in &r.checks {
                lines.push(format!(
                    "{} & {} & {} \\\\",
                    c.axiom.name(),
                    status(c.passed),
                    c.checked
                ));
            }
            lines.push("\\end{tabular}".into());
            lines.join("\n")
        }
    }
}

pub fn count(spec: &CompressionSpec, count: usize, stored: Option<usize>, fmt: Format) -> String {
    match (fmt, stored) {
        (Format::Pretty, None) | (Format::Latex, None) => count.to_string(),
        (Format::Pretty, Some(s)) => {
            format!("{count} {} {s}", if s == count { "=" } else { "!=" })
        }
        (Format::Latex, Some(s)) => {
            format!("{count} {} {s}", if s == count { "=" } else { "\\neq" })
        }
        (Format::Json, _) => to_json(&json!({ "spec": spec, "count": count, "stored": stored })),
        (Format::Csv, None) => format!("count\n{count}"),
        (Format::Csv, Some(s)) => format!("count,stored\n{count},{s}"),
    }
}

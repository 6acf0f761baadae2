//! Output in the three supported formats. Everything is written in a fixed
//! order so identical invocations print identical bytes.

use std::io::{self, Write};

use clap::ValueEnum;
use enriques_core::verify::Check;
use enriques_core::{
    component_name, phivector_from_coefficients, unirationality_flag, Error, FundamentalCoefficients, ModuliComponent,
    NumClass, PhiVector, PicClass, Presentation,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

/// Everything `phivector` reports about one class.
#[derive(Debug, Serialize)]
pub struct PhiReport {
    pub class: PicClass,
    pub self_intersection: i64,
    pub genus: i64,
    pub phi: PhiVector,
    pub coefficients: FundamentalCoefficients,
    /// The isotropic 10-sequence carrying the fundamental presentation.
    pub sequence: [NumClass; 10],
    pub two_divisible: bool,
    pub component: String,
    pub unirational_flag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

impl PhiReport {
    pub fn new(class: PicClass, p: Presentation) -> Result<Self, Error> {
        let phi = phivector_from_coefficients(&p.coefficients)?;
        let genus = class.num.genus()?;
        Ok(PhiReport {
            class,
            self_intersection: class.num.self_int(),
            genus,
            phi,
            coefficients: p.coefficients,
            sequence: *p.sequence.members(),
            two_divisible: class.num.is_two_divisible(),
            component: component_name(genus, &phi, class.eps),
            unirational_flag: unirationality_flag(&phi),
            oracle_agrees: None,
        })
    }
}

fn json<T: Serialize + ?Sized>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn csv_rows(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()
}

fn markdown_table(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    writeln!(out, "| {} |", header.join(" | "))?;
    writeln!(out, "|{}", "---|".repeat(header.len()))?;
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
        writeln!(out, "| {} |", cells.join(" | "))?;
    }
    Ok(())
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn components(out: &mut impl Write, format: Format, comps: &[ModuliComponent]) -> io::Result<()> {
    const HEADER: [&str; 6] = ["name", "phi", "eps", "2-divisible", "coefficients", "unirational"];
    if format == Format::Json {
        return json(out, comps);
    }
    let rows: Vec<Vec<String>> = comps
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.phi.to_string(),
                c.eps.to_string(),
                yes_no(c.two_divisible),
                c.coefficients.to_string(),
                yes_no(c.unirational_flag),
            ]
        })
        .collect();
    match format {
        Format::Csv => csv_rows(out, &HEADER, &rows),
        _ => markdown_table(out, &HEADER, &rows),
    }
}

pub fn phivector(out: &mut impl Write, format: Format, r: &PhiReport) -> io::Result<()> {
    if format == Format::Json {
        return json(out, r);
    }
    let mut fields = vec![
        ("class", r.class.num.to_string()),
        ("eps", r.class.eps.to_string()),
        ("self-intersection", r.self_intersection.to_string()),
        ("genus", r.genus.to_string()),
        ("phi", r.phi.to_string()),
        ("coefficients", r.coefficients.to_string()),
        ("2-divisible", yes_no(r.two_divisible)),
        ("component", r.component.clone()),
        ("unirational", yes_no(r.unirational_flag)),
    ];
    if let Some(agrees) = r.oracle_agrees {
        fields.push(("oracle agrees", yes_no(agrees)));
    }
    let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
    let values: Vec<String> = fields.iter().map(|f| f.1.clone()).collect();
    match format {
        Format::Csv => csv_rows(out, &header, &[values]),
        _ => {
            let rows: Vec<Vec<String>> = fields.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
            markdown_table(out, &["field", "value"], &rows)
        }
    }
}

pub fn checks(out: &mut impl Write, format: Format, checks: &[Check], color: bool) -> io::Result<()> {
    match format {
        Format::Json => json(out, checks),
        Format::Csv => {
            let rows: Vec<Vec<String>> = checks
                .iter()
                .map(|c| vec![c.name.clone(), c.anchor.to_string(), c.passed.to_string(), c.detail.clone()])
                .collect();
            csv_rows(out, &["name", "anchor", "passed", "detail"], &rows)
        }
        Format::Markdown => {
            for c in checks {
                let line = c.to_string();
                match (color, c.passed) {
                    (false, _) => writeln!(out, "{line}")?,
                    (true, true) => writeln!(out, "\x1b[32m{line}\x1b[0m")?,
                    (true, false) => writeln!(out, "\x1b[31m{line}\x1b[0m")?,
                }
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(out, "{} checks, {failed} failed", checks.len())
        }
    }
}

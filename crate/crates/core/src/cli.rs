//! Command line front end. Every stage of the pipeline has a subcommand
//! that reads one divide file and prints a plain text report.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::divide::{Divide, FreeCase, VertexKind};
use crate::doubling::{double, double_free, OrientedDivide};
use crate::error::Error;
use crate::fibration::{monodromy, Basis, TWIST_SIGN};
use crate::lf::{find_lf, find_lf_free, LfStructure};
use crate::linalg::IntPolynomial;
use crate::shadow::{build_polyhedron, provenance, ShadowedPolyhedron, CONVENTION};
use crate::{io, svg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "divide",
    about = "Divides, their doubled curves, shadows and fibrations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FreeCaseArg {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    Divide,
    Doubled,
    Shadow,
}

#[derive(Debug, clap::Args)]
pub struct Input {
    pub file: PathBuf,
    /// Which case of the free divide criterion to apply.
    #[arg(long, value_enum, default_value = "auto")]
    pub free_case: FreeCaseArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a divide file.
    Validate(Input),
    /// List the regions of the divide.
    Regions(Input),
    /// Check admissibility, or classify a free divide.
    Admissible(Input),
    /// Double the divide and orient the doubled curve.
    Double(Input),
    /// Gleam table of the shadowed polyhedron.
    Shadow(Input),
    /// Find and verify an LF-structure.
    Lf(Input),
    /// Monodromy of the fibration on the first homology of the fiber.
    Monodromy(Input),
    /// Characteristic polynomial of the monodromy, in ascending coefficients.
    Alexander {
        #[command(flatten)]
        input: Input,
        /// Expected coefficients, compared up to a unit.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Write an SVG drawing of one stage.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "divide")]
        stage: Stage,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Exit code and the text written to standard output and standard error.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::DuplicateId(_)
        | Error::DanglingSlot { .. }
        | Error::Invalid(_)
        | Error::NonPlanar { .. } => EXIT_INVALID,
        Error::DegreeMismatch(..) => EXIT_MISMATCH,
        _ => EXIT_REFUSED,
    }
}

fn fail(out: String, e: &Error) -> Outcome {
    Outcome {
        code: exit_code(e),
        stdout: out,
        stderr: format!("error: {e}\n"),
    }
}

pub fn convention_header() -> String {
    format!(
        "# convention crossing={} twist={TWIST_SIGN:+} max=white min=black\n",
        CONVENTION.name()
    )
}

fn load(input: &Input) -> Result<Divide, Error> {
    let text = std::fs::read_to_string(&input.file)
        .map_err(|e| Error::Invalid(format!("{}: {e}", input.file.display())))?;
    io::parse(&text)
}

fn is_free(d: &Divide) -> bool {
    d.vertices().iter().any(|v| v.kind == VertexKind::Free)
}

fn free_case(d: &Divide, arg: FreeCaseArg) -> Result<FreeCase, Error> {
    d.classify_free_as(match arg {
        FreeCaseArg::Auto => None,
        FreeCaseArg::One => Some(1),
        FreeCaseArg::Two => Some(2),
    })
}

/// The doubled curve, through the deformation for free divides.
fn doubled(
    d: &Divide,
    arg: FreeCaseArg,
    out: &mut String,
) -> Result<(OrientedDivide, Option<FreeCase>), Error> {
    if !is_free(d) {
        let report = d.check_admissibility()?;
        if let Some(c) = report.violations().next() {
            return Err(Error::NotAdmissible(format!("{} {}", c.name, c.detail)));
        }
        return Ok((double(d)?, None));
    }
    let fc = free_case(d, arg)?;
    writeln!(out, "free-case {}", fc.label()).unwrap();
    if let FreeCase::Neither { .. } = fc {
        return Err(Error::NeitherCase);
    }
    Ok((double_free(d, &fc)?, Some(fc)))
}

fn shadowed(
    d: &Divide,
    arg: FreeCaseArg,
    out: &mut String,
) -> Result<(ShadowedPolyhedron, Option<FreeCase>), Error> {
    let (od, fc) = doubled(d, arg, out)?;
    Ok((build_polyhedron(&od, CONVENTION), fc))
}

fn lf_structure(d: &Divide, arg: FreeCaseArg, out: &mut String) -> Result<LfStructure, Error> {
    let (sp, fc) = shadowed(d, arg, out)?;
    match fc {
        Some(fc) => find_lf_free(&sp, &fc),
        None => find_lf(&sp),
    }
}

fn validate(d: &Divide, out: &mut String) {
    let bounds = d.vertices().iter().filter(|v| v.kind.is_endpoint()).count();
    writeln!(
        out,
        "valid vertices={} edges={} double-points={} endpoints={bounds} strands={} components={}",
        d.vertices()
            .iter()
            .filter(|v| v.kind != VertexKind::Phantom)
            .count(),
        d.edges().len(),
        d.double_points(),
        d.strands().len(),
        d.map().num_components()
    )
    .unwrap();
}

fn regions(d: &Divide, out: &mut String) -> Result<(), Error> {
    let regions = d.regions()?;
    writeln!(
        out,
        "regions {} inside {}",
        regions.regions.len(),
        regions.num_inside()
    )
    .unwrap();
    for r in &regions.regions {
        let kind = if r.outside { "outside" } else { "inside" };
        writeln!(
            out,
            "region {} {kind} euler={} boundary-walks={}",
            r.id,
            r.euler,
            r.walks.len()
        )
        .unwrap();
    }
    Ok(())
}

fn admissible(d: &Divide, arg: FreeCaseArg, out: &mut String) -> Result<bool, Error> {
    if is_free(d) {
        let fc = free_case(d, arg)?;
        writeln!(out, "free-case {}", fc.label()).unwrap();
        return Ok(!matches!(fc, FreeCase::Neither { .. }));
    }
    let report = d.check_admissibility()?;
    write!(out, "{report}").unwrap();
    Ok(report.admissible())
}

fn describe_doubled(od: &OrientedDivide, out: &mut String) {
    writeln!(
        out,
        "crossings {} strands {} faces {}",
        od.crossings(),
        od.curve.strands().len(),
        od.faces.walks.len()
    )
    .unwrap();
    for name in [
        "region", "outside", "quad", "triangle", "bigon", "strip", "finger",
    ] {
        writeln!(out, "faces {name} {}", od.count(name)).unwrap();
    }
    for (f, tag) in od.face_tags.iter().enumerate() {
        writeln!(
            out,
            "face {f} {} corners={}",
            provenance(tag),
            od.faces.walks[f].len()
        )
        .unwrap();
    }
}

fn describe_monodromy(lf: &LfStructure, out: &mut String) -> Result<IntPolynomial, Error> {
    let m = monodromy(lf)?;
    let basis = match m.basis {
        Basis::Vanishing => "vanishing-cycles",
        Basis::Generators => "generators",
    };
    writeln!(
        out,
        "fiber genus={} boundary={} b1={}",
        m.surface.genus(),
        m.surface.boundary_components,
        m.form.size()
    )
    .unwrap();
    writeln!(out, "basis {basis}").unwrap();
    write!(out, "form\n{}", m.form).unwrap();
    for (i, t) in m.twists.iter().enumerate() {
        write!(
            out,
            "twist D{} class={}\n{t}",
            i + 1,
            lf.disks[i].class.name()
        )
        .unwrap();
    }
    write!(out, "product\n{}", m.matrix).unwrap();
    writeln!(out, "charpoly {}", m.charpoly).unwrap();
    Ok(m.charpoly)
}

fn execute(cmd: &Command, out: &mut String) -> Result<i32, Error> {
    match cmd {
        Command::Validate(i) => validate(&load(i)?, out),
        Command::Regions(i) => regions(&load(i)?, out)?,
        Command::Admissible(i) => {
            if !admissible(&load(i)?, i.free_case, out)? {
                return Ok(EXIT_REFUSED);
            }
        }
        Command::Double(i) => {
            let (od, _) = doubled(&load(i)?, i.free_case, out)?;
            describe_doubled(&od, out);
        }
        Command::Shadow(i) => {
            let (sp, _) = shadowed(&load(i)?, i.free_case, out)?;
            out.push_str(&sp.table());
        }
        Command::Lf(i) => {
            let lf = lf_structure(&load(i)?, i.free_case, out)?;
            write!(out, "{lf}").unwrap();
        }
        Command::Monodromy(i) => {
            let lf = lf_structure(&load(i)?, i.free_case, out)?;
            describe_monodromy(&lf, out)?;
        }
        Command::Alexander { input, expect } => {
            let lf = lf_structure(&load(input)?, input.free_case, out)?;
            let p = crate::fibration::monodromy(&lf)?.charpoly;
            writeln!(out, "charpoly {p}").unwrap();
            if let Some(e) = expect {
                let want = IntPolynomial::parse(e)?;
                let same = p.equivalent(&want)?;
                writeln!(
                    out,
                    "expect {want} {}",
                    if same { "match" } else { "mismatch" }
                )
                .unwrap();
                if !same {
                    return Ok(EXIT_MISMATCH);
                }
            }
        }
        Command::Render {
            input,
            stage,
            output,
        } => {
            let d = load(input)?;
            let text = match stage {
                Stage::Divide => svg::render_divide(&d),
                Stage::Doubled => svg::render_doubled(&doubled(&d, input.free_case, out)?.0),
                Stage::Shadow => svg::render_shadow(&shadowed(&d, input.free_case, out)?.0),
            };
            std::fs::write(output, text)
                .map_err(|e| Error::Invalid(format!("{}: {e}", output.display())))?;
            writeln!(out, "wrote {}", output.display()).unwrap();
        }
    }
    Ok(EXIT_OK)
}

/// Runs one command line, without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            return Outcome {
                code,
                stdout: String::new(),
                stderr: e.render().to_string(),
            };
        }
    };
    let mut out = convention_header();
    match execute(&cli.command, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => fail(out, &e),
    }
}

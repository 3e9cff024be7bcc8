//! Command-line application: computation commands, verification sweeps and
//! figure generation.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a verification sweep
//! recorded at least one conclusion failure (hypothesis skips never fail).

use std::io::Write;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use alcove_core::annex::annex;
use alcove_core::boundary::predicted_boundary;
use alcove_core::gallery::Gallery;
use alcove_core::verify::{self, SweepReport};
use alcove_core::{bruhat, gallery, Element, GroupContext, Word};

use crate::json;
use crate::render::{self, Layer, Scene};

#[derive(Parser)]
#[command(name = "alcove", version, about = "Exact computations in rank-2 affine Coxeter groups", disable_help_subcommand = true)]
pub struct Cli {
    /// Affine type tag: A2~, C2~, G2~ or A1~.
    #[arg(long = "type", global = true, env = "ALCOVE_TYPE", default_value = "A2~", value_name = "TAG")]
    type_tag: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical reduced word of an element.
    Reduce { word: String, #[arg(long)] json: bool },
    /// Print the length of an element.
    Length { word: String },
    /// Print the right descent set of an element.
    Descents { word: String },
    /// Decide Bruhat order: is the first element below the second?
    Leq { lhs: String, rhs: String },
    /// List the lower Bruhat interval [1, w].
    Shadow {
        word: String,
        /// Computation route.
        #[arg(long, value_enum, default_value_t = ShadowRoute::Bruhat)]
        via: ShadowRoute,
        #[arg(long)]
        json: bool,
        /// Write an SVG picture of the shaded shadow to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// List a Bruhat interval [x, y].
    Interval { lhs: String, rhs: String, #[arg(long)] json: bool },
    /// Enumerate the annex of an element with its boundary panels.
    Annex {
        word: String,
        #[arg(long)]
        json: bool,
        /// Write an SVG picture of the shaded annex to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<String>,
    },
    /// List the boundary panels of an annex.
    Boundary { word: String, #[arg(long)] json: bool },
    /// Predict boundary alcoves of the annex from parallel reflection
    /// sequences through the descent panel.
    Predict {
        word: String,
        /// Descent generator to fold through.
        generator: u8,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep; exits 2 on any conclusion failure.
    Verify(VerifyArgs),
    /// Render a tiling picture with optional shaded sets and galleries.
    Render {
        /// Background radius in length rings.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Shade the annex of this element.
        #[arg(long, value_name = "WORD")]
        annex: Option<String>,
        /// Shade the shadow of this element.
        #[arg(long, value_name = "WORD")]
        shadow: Option<String>,
        /// Draw a gallery from a decorated word such as 01~20.
        #[arg(long, value_name = "DECORATED")]
        gallery: Option<String>,
        /// Draw element labels.
        #[arg(long)]
        labels: bool,
        /// Output path; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShadowRoute {
    Bruhat,
    Galleries,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep to run.
    #[arg(value_enum)]
    sweep: SweepName,
    #[arg(long, value_name = "L")]
    max_len: Option<usize>,
    #[arg(long, default_value_t = 6, value_name = "N")]
    max_n: usize,
    /// Sample count for the sampled (non-exhaustive) checks.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Seed for the sampled checks; exhaustive sweeps ignore it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepName {
    Bruhat,
    Shadows,
    Braid,
    Annex,
    Product,
    Stability,
    Threeparallel,
    Pm1,
    Dagger,
    Descent,
    Structural,
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, not usage errors.
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 1;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            1
        }
    }
}

fn parse_word(ctx: &GroupContext, digits: &str) -> Result<(Word, Element)> {
    let word: Word = digits
        .parse()
        .map_err(|_| anyhow!("malformed word `{digits}`: words are digit strings"))?;
    let element = ctx
        .from_word(&word)
        .map_err(|e| anyhow!("malformed word `{digits}` for {}: {e}", ctx.affine_type()))?;
    Ok((word, element))
}

fn print_words(ctx: &GroupContext, out: &mut dyn Write, set: &std::collections::BTreeSet<Element>) -> Result<()> {
    for word in json::sorted_words(ctx, set) {
        writeln!(out, "{word}")?;
    }
    Ok(())
}

fn descents_string(set: &std::collections::BTreeSet<u8>) -> String {
    let inner: Vec<String> = set.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ctx = GroupContext::from_tag(&cli.type_tag)
        .map_err(|e| anyhow!("unknown type tag `{}`: {e}", cli.type_tag))?;

    match &cli.command {
        Command::Reduce { word, json: as_json } => {
            let (_, w) = parse_word(&ctx, word)?;
            if *as_json {
                writeln!(out, "{}", serde_json::to_string(&json::element_json(&ctx, &w))?)?;
            } else {
                writeln!(out, "{}", ctx.word_string(&w))?;
            }
        }
        Command::Length { word } => {
            let (_, w) = parse_word(&ctx, word)?;
            writeln!(out, "{}", ctx.length(&w))?;
        }
        Command::Descents { word } => {
            let (_, w) = parse_word(&ctx, word)?;
            writeln!(out, "{}", descents_string(&ctx.right_descents(&w)))?;
        }
        Command::Leq { lhs, rhs } => {
            let (_, x) = parse_word(&ctx, lhs)?;
            let (_, y) = parse_word(&ctx, rhs)?;
            writeln!(out, "{}", bruhat::leq(&ctx, &x, &y))?;
        }
        Command::Shadow { word, via, json: as_json, svg } => {
            let (_, w) = parse_word(&ctx, word)?;
            let set = match via {
                ShadowRoute::Bruhat => bruhat::shadow(&ctx, &w),
                ShadowRoute::Galleries => gallery::shadow_via_foldings(&ctx, &w)?,
            };
            if let Some(path) = svg {
                let scene = shaded_scene(&ctx, set.iter().copied().collect(), &w);
                std::fs::write(path, render::render_svg(&ctx, &scene))
                    .with_context(|| format!("writing {path}"))?;
            } else if *as_json {
                writeln!(out, "{}", serde_json::to_string(&json::sorted_words(&ctx, &set))?)?;
            } else {
                print_words(&ctx, out, &set)?;
            }
        }
        Command::Interval { lhs, rhs, json: as_json } => {
            let (_, x) = parse_word(&ctx, lhs)?;
            let (_, y) = parse_word(&ctx, rhs)?;
            let interval = bruhat::interval(&ctx, &x, &y)?;
            if *as_json {
                writeln!(out, "{}", serde_json::to_string(&json::sorted_words(&ctx, &interval.members))?)?;
            } else {
                print_words(&ctx, out, &interval.members)?;
            }
        }
        Command::Annex { word, json: as_json, svg } => {
            let (_, w) = parse_word(&ctx, word)?;
            let ax = annex(&ctx, &w)?;
            if let Some(path) = svg {
                let scene = shaded_scene(&ctx, ax.members.iter().copied().collect(), &w);
                std::fs::write(path, render::render_svg(&ctx, &scene))
                    .with_context(|| format!("writing {path}"))?;
            } else if *as_json {
                writeln!(out, "{}", serde_json::to_string(&json::annex_json(&ctx, &ax))?)?;
            } else {
                writeln!(out, "owner: {}", ctx.word_string(&w))?;
                writeln!(out, "members: {}", ax.members.len())?;
                print_words(&ctx, out, &ax.members)?;
            }
        }
        Command::Boundary { word, json: as_json } => {
            let (_, w) = parse_word(&ctx, word)?;
            let ax = annex(&ctx, &w)?;
            let panels = json::annex_json(&ctx, &ax).boundary;
            if *as_json {
                writeln!(out, "{}", serde_json::to_string(&panels)?)?;
            } else {
                for (word, i) in panels {
                    writeln!(out, "{word} {i}")?;
                }
            }
        }
        Command::Predict { word, generator, max_n, json: as_json } => {
            let (_, w) = parse_word(&ctx, word)?;
            let predictions = predicted_boundary(&ctx, &w, *generator, *max_n)?;
            if *as_json {
                writeln!(out, "{}", serde_json::to_string(&json::sorted_words(&ctx, &predictions))?)?;
            } else {
                print_words(&ctx, out, &predictions)?;
            }
        }
        Command::Verify(args) => return run_verify(&ctx, args, out),
        Command::Render { radius, annex: annex_word, shadow, gallery: gallery_word, labels, out: path } => {
            let mut scene = Scene::tiling(*radius);
            scene.labels = *labels;
            if let Some(word) = annex_word {
                let (_, w) = parse_word(&ctx, word)?;
                let ax = annex(&ctx, &w)?;
                scene.layers.push(Layer::Fill {
                    elements: ax.members.iter().copied().collect(),
                    color: render::annex_fill_color(),
                });
            }
            if let Some(word) = shadow {
                let (_, w) = parse_word(&ctx, word)?;
                scene.layers.push(Layer::Fill {
                    elements: bruhat::shadow(&ctx, &w).iter().copied().collect(),
                    color: "#9ecfff".to_string(),
                });
            }
            if let Some(decorated) = gallery_word {
                let g: Gallery = decorated
                    .parse()
                    .map_err(|_| anyhow!("malformed decorated word `{decorated}`"))?;
                for step in &g.steps {
                    ctx.generator(step.panel_type)?;
                }
                scene.layers.push(Layer::GalleryPath { gallery: g, color: "#444444".to_string() });
            }
            let svg = render::render_svg(&ctx, &scene);
            match path {
                Some(p) => std::fs::write(p, svg).with_context(|| format!("writing {p}"))?,
                None => write!(out, "{svg}")?,
            }
        }
    }
    Ok(0)
}

/// Scene that shades a set of alcoves, sized to fit them.
fn shaded_scene(ctx: &GroupContext, elements: Vec<Element>, owner: &Element) -> Scene {
    let radius = elements
        .iter()
        .map(|w| ctx.length(w))
        .chain([ctx.length(owner)])
        .max()
        .unwrap_or(0)
        + 1;
    Scene {
        radius,
        layers: vec![Layer::Fill { elements, color: render::annex_fill_color() }],
        labels: false,
    }
}

fn run_verify(ctx: &GroupContext, args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let max_len = args.max_len.unwrap_or(5);
    let report: SweepReport = match args.sweep {
        SweepName::Bruhat => verify::bruhat_oracle_sweep(ctx, max_len)?,
        SweepName::Shadows => verify::shadow_equivalence_sweep(ctx, max_len)?,
        SweepName::Braid => verify::braid_invariance_samples(ctx, max_len, args.samples, args.seed)?,
        SweepName::Annex => verify::annex_sweep(ctx, max_len)?,
        SweepName::Product => verify::product_sweep(ctx, max_len)?,
        SweepName::Stability => verify::stability_sweep(ctx, max_len)?,
        SweepName::Threeparallel => verify::three_parallel_sweep(ctx, -3..=3),
        SweepName::Pm1 => verify::pm1_sweep(ctx, max_len),
        SweepName::Dagger => verify::main_theorem_sweep(ctx, max_len, args.max_n)?,
        SweepName::Descent => verify::descent_propagation_sweep(ctx, max_len, args.max_n),
        SweepName::Structural => verify::structural_checks(ctx, max_len)?,
    };
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&json::report_json(&report))?)?;
    } else {
        for claim in &report.claims {
            writeln!(
                out,
                "{}::{}: instances={} passed={} skipped={} failures={} {}",
                report.sweep,
                claim.name,
                claim.instances,
                claim.passed,
                claim.skipped,
                claim.failures.len(),
                if claim.ok() { "ok" } else { "FAIL" }
            )?;
            for failure in &claim.failures {
                writeln!(out, "  failure: {failure}")?;
            }
        }
        writeln!(out, "sweep {}: {}", report.sweep, if report.ok() { "PASS" } else { "FAIL" })?;
    }
    Ok(if report.ok() { 0 } else { 2 })
}

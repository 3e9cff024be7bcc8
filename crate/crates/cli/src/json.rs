//! JSON output schemas. Elements serialize as their canonical reduced word
//! digits; the identity is the empty string.

use serde::Serialize;

use alcove_core::annex::Annex;
use alcove_core::verify::SweepReport;
use alcove_core::{Element, GroupContext};

#[derive(Serialize)]
pub struct ElementJson {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub word: String,
}

pub fn element_json(ctx: &GroupContext, w: &Element) -> ElementJson {
    ElementJson {
        type_tag: ctx.affine_type().tag().to_string(),
        word: ctx.word_string(w),
    }
}

/// Words sorted by (length, digits); the deterministic listing order used
/// everywhere.
pub fn sorted_words<'a, I: IntoIterator<Item = &'a Element>>(ctx: &GroupContext, set: I) -> Vec<String> {
    let mut words: Vec<String> = set.into_iter().map(|w| ctx.word_string(w)).collect();
    words.sort_by(|a, b| (a.len(), a.as_str()).cmp(&(b.len(), b.as_str())));
    words
}

#[derive(Serialize)]
pub struct AnnexJson {
    pub owner: String,
    pub members: Vec<String>,
    pub boundary: Vec<(String, u8)>,
}

pub fn annex_json(ctx: &GroupContext, ax: &Annex) -> AnnexJson {
    let mut boundary: Vec<(String, u8)> = ax
        .boundary
        .iter()
        .map(|(y, i)| (ctx.word_string(y), *i))
        .collect();
    boundary.sort_by(|a, b| (a.0.len(), a.0.as_str(), a.1).cmp(&(b.0.len(), b.0.as_str(), b.1)));
    AnnexJson {
        owner: ctx.word_string(&ax.owner),
        members: sorted_words(ctx, &ax.members),
        boundary,
    }
}

#[derive(Serialize)]
pub struct ClaimJson {
    pub name: String,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub sweep: String,
    pub claims: Vec<ClaimJson>,
}

pub fn report_json(report: &SweepReport) -> ReportJson {
    ReportJson {
        sweep: report.sweep.clone(),
        claims: report
            .claims
            .iter()
            .map(|c| ClaimJson {
                name: c.name.clone(),
                instances: c.instances,
                passed: c.passed,
                skipped: c.skipped,
                failures: c.failures.clone(),
            })
            .collect(),
    }
}

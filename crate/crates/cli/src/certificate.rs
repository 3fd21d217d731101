//! Canonical JSON certificates for hunt outcomes.
//!
//! Keys are emitted in sorted order (struct fields are declared
//! alphabetically and serde_json preserves declaration order), vertices
//! are 1-based, and identical outcomes serialize to identical bytes.

use serde::{Deserialize, Serialize};
use treehunt_core::hunter::{HuntOutcome, HuntStatus};
use treehunt_core::tree::{verify_embedding, Embedding, TreeSpec};
use treehunt_core::Graph;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificateFile {
    /// Pairs `[tree_vertex, host_vertex]`, both 1-based, in
    /// breadth-first tree order. Present only for found outcomes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mapping: Option<Vec<(usize, usize)>>,
    pub pattern: String,
    /// Host vertex the tree root maps to, 1-based.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stall: Option<StallSection>,
    pub status: String,
    pub t: usize,
}

/// Trace of where the constructive search ended up: the successful
/// branch for found outcomes, the failing step otherwise.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct StallSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    /// 1-based center vertex.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phase: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pieces: Option<usize>,
    /// 1-based witness vertices for the failing step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<usize>>,
}

pub const PATTERN: &str = "T(t,2,1)";

pub fn from_outcome(outcome: &HuntOutcome) -> CertificateFile {
    let mapping = outcome.certificate.as_ref().map(|e| {
        e.map()
            .iter()
            .enumerate()
            .map(|(tree, &host)| (tree + 1, host + 1))
            .collect::<Vec<_>>()
    });
    let root = mapping.as_ref().map(|m| m[0].1);

    let stall = match outcome.status {
        HuntStatus::Found => Some(StallSection {
            branch: outcome.via.map(|v| v.name().to_string()),
            center: outcome.center.map(|c| c + 1),
            detail: None,
            phase: None,
            pieces: None,
            witnesses: None,
        }),
        HuntStatus::PremiseViolated => Some(StallSection {
            branch: None,
            center: None,
            detail: Some(outcome.detail.clone()),
            phase: Some("premise".into()),
            pieces: None,
            witnesses: None,
        }),
        HuntStatus::NotFound | HuntStatus::StepFailed => {
            outcome.report.as_ref().map(|r| StallSection {
                branch: None,
                center: Some(r.center + 1),
                detail: None,
                phase: Some(r.step.phase().into()),
                pieces: Some(r.pieces_extracted),
                witnesses: Some(r.step.witnesses().iter().map(|v| v + 1).collect()),
            })
        }
    };

    CertificateFile {
        mapping,
        pattern: PATTERN.into(),
        root,
        stall,
        status: outcome.status.name().into(),
        t: outcome.t,
    }
}

pub fn serialize(cert: &CertificateFile) -> String {
    let mut out = serde_json::to_string(cert).expect("certificate serializes");
    out.push('\n');
    out
}

pub fn parse(text: &str) -> Result<CertificateFile, String> {
    serde_json::from_str(text).map_err(|e| format!("bad certificate: {e}"))
}

/// Checks a found-certificate against a host graph: the mapping must be
/// a total relabeling of the tree `[t,2,1]`, embed induced, and agree
/// with the recorded root.
pub fn check_certificate(g: &Graph, cert: &CertificateFile) -> Result<(), String> {
    if cert.pattern != PATTERN {
        return Err(format!("unknown pattern '{}'", cert.pattern));
    }
    if cert.status != "found" {
        return Err(format!("status is '{}', nothing to verify", cert.status));
    }
    let mapping = cert
        .mapping
        .as_ref()
        .ok_or("found certificate without mapping")?;
    if cert.t == 0 {
        return Err("t must be positive".into());
    }
    let spec = TreeSpec::hunted(cert.t);
    let size = spec.vertex_count();
    if mapping.len() != size {
        return Err(format!(
            "mapping has {} entries, tree needs {size}",
            mapping.len()
        ));
    }
    let mut map = vec![usize::MAX; size];
    for &(tree, host) in mapping {
        if tree == 0 || tree > size {
            return Err(format!("tree vertex {tree} out of range 1..={size}"));
        }
        if host == 0 || host > g.vertex_count() {
            return Err(format!(
                "host vertex {host} out of range 1..={}",
                g.vertex_count()
            ));
        }
        if map[tree - 1] != usize::MAX {
            return Err(format!("tree vertex {tree} mapped twice"));
        }
        map[tree - 1] = host - 1;
    }
    let embedding = Embedding::new(map);
    if cert.root != Some(embedding.image_of(0) + 1) {
        return Err("root field disagrees with mapping".into());
    }
    if !verify_embedding(g, &spec, &embedding) {
        return Err("mapping is not an induced embedding".into());
    }
    Ok(())
}

use std::str::FromStr;

use crate::graph::{Color, ColoredGraph, Vertex};
use crate::md::{decompose, ModuleKind};
use crate::perm::{recognize_simple, Certificate, Labeling, Permutation};

use super::{recognize, RecognizerError};

/// An induced subgraph with a certificate derived from the parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub graph: ColoredGraph,
    pub certificate: Certificate,
    /// Sorted old vertex ids; new vertex `i` is `kept[i]`.
    pub kept: Vec<Vertex>,
    /// `color_map[c - 1]` is the new color of old color `c`, or `None` if no
    /// pair of that color survives.
    pub color_map: Vec<Option<Color>>,
}

/// Restricts `g` and its certificate to the vertices in `subset`.
///
/// Labels of kept vertices are compressed to `1..=|subset|` by rank, and each
/// surviving permutation keeps only the entries labeling kept vertices, in
/// their original order, rewritten to the compressed labels.
pub fn restrict(g: &ColoredGraph, cert: &Certificate, subset: &[Vertex]) -> Result<Restriction, RecognizerError> {
    let (graph, kept) = g.induced_subgraph(subset)?;
    let n = g.n();
    if cert.labeling.len() != n || cert.permutations.len() != g.k() || cert.permutations.iter().any(|p| p.len() != n) {
        return Err(RecognizerError::InvalidCertificate);
    }
    // compressed label of each old label, 0 if its vertex is dropped
    let mut compressed = vec![0; n + 1];
    let mut kept_labels: Vec<usize> = kept.iter().map(|&v| cert.labeling.label(v)).collect();
    kept_labels.sort_unstable();
    for (rank, &lab) in kept_labels.iter().enumerate() {
        compressed[lab] = rank + 1;
    }
    let labeling = Labeling::new(kept.iter().map(|&v| compressed[cert.labeling.label(v)]).collect())
        .expect("rank compression is a bijection");

    let surviving = g.surviving_colors(&kept);
    let mut color_map = vec![None; g.k()];
    let mut permutations = Vec::with_capacity(surviving.len());
    for (new, &old) in surviving.iter().enumerate() {
        color_map[old as usize - 1] = Some(new as Color + 1);
        let seq: Vec<usize> = cert.permutations[old as usize - 1]
            .as_slice()
            .iter()
            .map(|&lab| compressed[lab])
            .filter(|&lab| lab != 0)
            .collect();
        permutations.push(Permutation::new(seq).expect("restricted sequence is a bijection"));
    }
    Ok(Restriction { graph, certificate: Certificate::new(labeling, permutations), kept, color_map })
}

/// Equivalent characterizations of membership that can be checked directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characterization {
    /// Every induced subgraph is a member.
    InducedSubgraphs,
    /// Every quotient of a strong module is a member.
    StrongQuotients,
    /// Every prime quotient is a member, and is two-colored when it has at
    /// least three vertices.
    PrimeQuotients,
    /// No rainbow triangle, and every color class is a permutation graph.
    ColorClasses,
}

impl Characterization {
    pub const ALL: [Characterization; 4] = [
        Characterization::InducedSubgraphs,
        Characterization::StrongQuotients,
        Characterization::PrimeQuotients,
        Characterization::ColorClasses,
    ];
}

impl FromStr for Characterization {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "induced-subgraphs" => Ok(Self::InducedSubgraphs),
            "strong-quotients" => Ok(Self::StrongQuotients),
            "prime-quotients" => Ok(Self::PrimeQuotients),
            "color-classes" => Ok(Self::ColorClasses),
            other => Err(format!("unknown characterization {other:?}")),
        }
    }
}

/// Largest graph for which every induced subgraph is enumerated.
pub const INDUCED_SUBGRAPH_LIMIT: usize = 10;

/// Evaluates one characterization of membership on `g`.
pub fn characterization_check(g: &ColoredGraph, which: Characterization) -> Result<bool, RecognizerError> {
    let n = g.n();
    Ok(match which {
        Characterization::InducedSubgraphs => {
            if n > INDUCED_SUBGRAPH_LIMIT {
                return Err(RecognizerError::TooLarge { n, limit: INDUCED_SUBGRAPH_LIMIT });
            }
            (1u32..1 << n).all(|mask| {
                let w: Vec<Vertex> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                recognize(&g.induced_unchecked(&w)).is_member()
            })
        }
        Characterization::StrongQuotients => {
            let tree = decompose(g);
            let ok = tree.inner_nodes().all(|id| recognize(&tree.quotient(id).expect("inner").graph).is_member());
            ok
        }
        Characterization::PrimeQuotients => {
            let tree = decompose(g);
            let ok = tree.inner_nodes().filter(|&id| tree.kind(id) == ModuleKind::Prime).all(|id| {
                let q = &tree.quotient(id).expect("inner").graph;
                (q.n() < 3 || q.k() == 2) && recognize(q).is_member()
            });
            ok
        }
        Characterization::ColorClasses => {
            g.find_rainbow_triangle().is_none()
                && (1..=g.k() as Color)
                    .all(|c| recognize_simple(&g.monochromatic_subgraph(c).expect("color in range")).is_some())
        }
    })
}

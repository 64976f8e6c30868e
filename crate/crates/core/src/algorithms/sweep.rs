//! Perfect Morse matchings on tight complexes from a height sweep.
//!
//! π-tightness constrains the halfspaces above each height, so the complex
//! is built from the top down: vertices are processed in descending height
//! and each processed set is an upper set. When `v` arrives, the new faces
//! are the cone `v ∗ L` over its upper link `L` (the link of `v` restricted
//! to higher vertices). A perfect matching on `L`, planar in the tight case,
//! is lifted over the cone, so each step adds critical faces `v ∗ τ` for the
//! critical faces `τ ≠ w` of `L`.

use std::collections::BTreeSet;

use thiserror::Error;

use super::nonevasive::NonEvasivenessCertificate;
use super::planar::{planar_acyclic_nonevasive, planar_perfect_morse, PlanarError};
use super::recognition::{is_2_sphere, is_3_manifold};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::geometry::{is_pi_tight, sweep_order, GeometricRealization, GeometryError, SweepOrder, TightnessReport};
use crate::homology::{betti_or_zero, BettiVector};
use crate::morse::{lifted_pairs, MorseError, MorseMatching, MorseVector};
use crate::rational::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SweepError {
    #[error("direction is not in general position: {0}")]
    NotGeneralPosition(GeometryError),
    #[error(transparent)]
    Geometry(GeometryError),
    #[error("realization is not tight in this direction ({} failing checks)", .0.failures.len())]
    NotTight(TightnessReport),
    #[error("ambient dimension {0} is only supported for triangulated 3-manifolds")]
    UnsupportedAmbient(usize),
    #[error("upper link of vertex {vertex} is not planar-collapsible: {source}")]
    LinkNotPlanarCollapsible { vertex: Vertex, source: PlanarError },
    #[error("complex is not acyclic (Betti numbers {0:?})")]
    NotAcyclic(Vec<usize>),
    #[error("sweep produced Morse vector {:?} but the Betti numbers are {:?}", .morse_vector.0, .betti.values)]
    PerfectnessAssertionFailed { morse_vector: MorseVector, betti: BettiVector },
    #[error(transparent)]
    Morse(MorseError),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Skip the tightness check. Non-tight input then usually ends in
    /// `PerfectnessAssertionFailed` or `LinkNotPlanarCollapsible`.
    pub assume_tight: bool,
}

/// What happened at one vertex of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SweepStep {
    pub vertex: Vertex,
    /// Morse vector of the matching on the upper link; `None` when the upper
    /// link is empty and the vertex itself is critical.
    pub link_morse_vector: Option<MorseVector>,
    /// Critical faces created at this step, by dimension.
    pub critical_added: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub matching: MorseMatching,
    pub betti: BettiVector,
    pub order: Vec<Vertex>,
    pub steps: Vec<SweepStep>,
}

fn prepare(g: &GeometricRealization, direction: &[Scalar], opts: SweepOptions) -> Result<SweepOrder, SweepError> {
    let order = sweep_order(g, direction).map_err(|e| match e {
        GeometryError::DegenerateDirection { .. } => SweepError::NotGeneralPosition(e),
        other => SweepError::Geometry(other),
    })?;
    if g.ambient_dim() > 3 && !is_3_manifold(g.complex()) {
        return Err(SweepError::UnsupportedAmbient(g.ambient_dim()));
    }
    if !opts.assume_tight {
        let report = is_pi_tight(g, direction).map_err(SweepError::Geometry)?;
        if !report.tight {
            return Err(SweepError::NotTight(report));
        }
    }
    Ok(order)
}

fn upper_link(c: &SimplicialComplex, v: Vertex, above: &BTreeSet<Vertex>) -> SimplicialComplex {
    c.link(v).expect("vertex of complex").induced(above)
}

/// Perfect matching on an upper link. An upper link that is a whole 2-sphere
/// (the bottom vertex of a closed 3-manifold) has no free edge; its smallest
/// triangle is left critical and the rest is handled as a planar disc.
fn link_matching(link: &SimplicialComplex) -> Result<MorseMatching, PlanarError> {
    match planar_perfect_morse(link) {
        Err(PlanarError::StuckNoFreeEdge { .. }) if is_2_sphere(link) => {
            let t = link.faces(2)[0].clone();
            let disc = link.remove_facet(&t).expect("triangle of a sphere is a facet");
            let m = planar_perfect_morse(&disc)?;
            Ok(MorseMatching::new(link.clone(), m.pairs()).expect("disc pairs are link pairs"))
        }
        other => other,
    }
}

/// Perfect discrete Morse matching of a π-tight complex in R³, or of a
/// π-tight triangulated 3-manifold in any dimension.
pub fn sweep_perfect_morse(
    g: &GeometricRealization,
    direction: &[Scalar],
    opts: SweepOptions,
) -> Result<SweepResult, SweepError> {
    let order = prepare(g, direction, opts)?;
    let c = g.complex();
    let mut above = BTreeSet::new();
    let mut pairs: Vec<(Face, Face)> = Vec::new();
    let mut steps = Vec::with_capacity(order.len());
    let descending: Vec<Vertex> = order.vertices.iter().rev().copied().collect();
    for &v in &descending {
        let link = upper_link(c, v, &above);
        let step = if link.is_empty() {
            SweepStep { vertex: v, link_morse_vector: None, critical_added: vec![1] }
        } else {
            let m =
                link_matching(&link).map_err(|source| SweepError::LinkNotPlanarCollapsible { vertex: v, source })?;
            let mv = m.morse_vector();
            let mut added: Vec<usize> = std::iter::once(0).chain(mv.0.iter().copied()).collect();
            added[1] -= 1;
            while added.last() == Some(&0) && added.len() > 1 {
                added.pop();
            }
            pairs.extend(lifted_pairs(v, &m).map_err(SweepError::Morse)?);
            SweepStep { vertex: v, link_morse_vector: Some(mv), critical_added: added }
        };
        steps.push(step);
        above.insert(v);
    }
    let matching = MorseMatching::new(c.clone(), pairs).map_err(SweepError::Morse)?;
    matching.validate().map_err(SweepError::Morse)?;
    let betti = betti_or_zero(c);
    let morse_vector = matching.morse_vector();
    if !morse_vector.matches(&betti) {
        return Err(SweepError::PerfectnessAssertionFailed { morse_vector, betti });
    }
    Ok(SweepResult { matching, betti, order: descending, steps })
}

/// Non-evasiveness certificate for a π-tight acyclic complex in R³: the
/// lowest vertex is deleted first, its link being an acyclic planar complex,
/// and the remaining upper set is again π-tight.
pub fn sweep_nonevasive(
    g: &GeometricRealization,
    direction: &[Scalar],
    opts: SweepOptions,
) -> Result<NonEvasivenessCertificate, SweepError> {
    let order = prepare(g, direction, opts)?;
    let c = g.complex();
    let b = betti_or_zero(c);
    if c.is_empty() || !b.is_acyclic() {
        return Err(SweepError::NotAcyclic(b.values));
    }
    let mut links = Vec::with_capacity(order.len());
    let mut above: BTreeSet<Vertex> = order.vertices.iter().copied().collect();
    for &v in &order.vertices {
        above.remove(&v);
        if above.is_empty() {
            break;
        }
        let link = upper_link(c, v, &above);
        let cert = planar_acyclic_nonevasive(&link)
            .map_err(|source| SweepError::LinkNotPlanarCollapsible { vertex: v, source })?;
        links.push((v, cert));
    }
    let top = order.top().expect("nonempty");
    Ok(links.into_iter().rev().fold(NonEvasivenessCertificate::Point(top), |deletion, (vertex, link)| {
        NonEvasivenessCertificate::Step { vertex, link: Box::new(link), deletion: Box::new(deletion) }
    }))
}

//! Elementary collapses: greedy and exhaustive collapsibility, and collapses
//! onto a prescribed subcomplex.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::hasse::Hasse;
use crate::homology::{betti_or_zero, inclusion_induced_injective};
use crate::morse::{from_collapse_sequence, Collapser, MorseError, MorseMatching};
use crate::par::{derive_seed, Execution};

/// A sequence of elementary collapses from `source` down to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseSequence {
    pub source: SimplicialComplex,
    pub steps: Vec<(Face, Face)>,
    pub target: SimplicialComplex,
}

impl CollapseSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps, checking that each pair is free when used, and
    /// returns the residual complex.
    pub fn replay(&self) -> Result<SimplicialComplex, MorseError> {
        let hasse = Hasse::new(&self.source);
        let mut alive = vec![true; hasse.len()];
        for (k, (low, high)) in self.steps.iter().enumerate() {
            let bad = || MorseError::NotFreeAtStep { step: k, pair: (low.clone(), high.clone()) };
            let (Some(a), Some(b)) = (hasse.id(low), hasse.id(high)) else {
                return Err(bad());
            };
            let live: Vec<usize> = hasse.cofaces[a].iter().copied().filter(|&c| alive[c]).collect();
            if !alive[a] || !alive[b] || live != [b] || hasse.cofaces[b].iter().any(|&c| alive[c]) {
                return Err(bad());
            }
            alive[a] = false;
            alive[b] = false;
        }
        let removed: HashSet<&Face> = (0..hasse.len()).filter(|&i| !alive[i]).map(|i| hasse.face(i)).collect();
        Ok(self.source.filter(|f| !removed.contains(f)))
    }

    /// Replays and compares the residual with `target`.
    pub fn verify(&self) -> bool {
        self.replay().is_ok_and(|r| r == self.target)
    }

    /// The collapse pairs as a Morse matching on `source`.
    pub fn to_matching(&self) -> Result<MorseMatching, MorseError> {
        from_collapse_sequence(self.source.clone(), &self.steps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Random free-pair collapses; the budget is the number of restarts.
    Greedy,
    /// Exhaustive search over collapse orders; the budget bounds the number
    /// of search states expanded.
    Backtracking,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotCollapsibleReason {
    /// Z2 homology is not that of a point.
    Betti,
    /// Every collapse order gets stuck.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollapsibilityResult {
    Collapsible(CollapseSequence),
    NotCollapsible(NotCollapsibleReason),
    /// No decision within the budget. The greedy strategy always ends here
    /// on failure, since a stuck random run proves nothing.
    BudgetExceeded {
        spent: usize,
    },
}

impl CollapsibilityResult {
    pub fn is_collapsible(&self) -> bool {
        matches!(self, CollapsibilityResult::Collapsible(_))
    }
}

pub fn collapsible(
    c: &SimplicialComplex,
    strategy: Strategy,
    budget: usize,
    seed: u64,
    exec: Execution,
) -> CollapsibilityResult {
    if c.is_empty() || !betti_or_zero(c).is_acyclic() {
        return CollapsibilityResult::NotCollapsible(NotCollapsibleReason::Betti);
    }
    match strategy {
        Strategy::Greedy => greedy(c, budget, seed, exec),
        Strategy::Backtracking => backtracking(c, budget),
    }
}

fn sequence(c: &SimplicialComplex, hasse: &Hasse<'_>, pairs: &[(usize, usize)], alive: &[bool]) -> CollapseSequence {
    let target = SimplicialComplex::closure_of((0..hasse.len()).filter(|&i| alive[i]).map(|i| hasse.face(i).clone()));
    CollapseSequence {
        source: c.clone(),
        steps: pairs.iter().map(|&(a, b)| (hasse.face(a).clone(), hasse.face(b).clone())).collect(),
        target,
    }
}

fn greedy(c: &SimplicialComplex, restarts: usize, seed: u64, exec: Execution) -> CollapsibilityResult {
    let hasse = Hasse::new(c);
    let found = exec.find_first(restarts, |r| {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, r as u64));
        let mut collapser = Collapser::new(&hasse);
        let mut pairs = Vec::new();
        while let Some((a, b)) = collapser.random_free_pair(&mut rng) {
            collapser.collapse(a, b);
            pairs.push((a, b));
        }
        (collapser.remaining == 1).then(|| sequence(c, &hasse, &pairs, &collapser.alive))
    });
    match found {
        Some((_, seq)) => CollapsibilityResult::Collapsible(seq),
        None => CollapsibilityResult::BudgetExceeded { spent: restarts },
    }
}

struct SearchState<'h, 'c> {
    hasse: &'h Hasse<'c>,
    alive: Vec<bool>,
    live_cofaces: Vec<usize>,
    remaining: usize,
}

impl SearchState<'_, '_> {
    fn free_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.hasse.len())
            .filter(|&i| self.alive[i] && self.live_cofaces[i] == 1)
            .map(|i| (i, *self.hasse.cofaces[i].iter().find(|&&c| self.alive[c]).unwrap()))
            .collect()
    }

    fn toggle(&mut self, (low, high): (usize, usize), remove: bool) {
        for id in [high, low] {
            self.alive[id] = !remove;
            for &f in &self.hasse.facets[id] {
                if remove {
                    self.live_cofaces[f] -= 1;
                } else {
                    self.live_cofaces[f] += 1;
                }
            }
        }
        if remove {
            self.remaining -= 2;
        } else {
            self.remaining += 2;
        }
    }

    fn key(&self) -> Vec<u64> {
        let mut k = vec![0u64; self.alive.len().div_ceil(64)];
        for (i, &a) in self.alive.iter().enumerate() {
            if a {
                k[i / 64] |= 1 << (i % 64);
            }
        }
        k
    }
}

fn backtracking(c: &SimplicialComplex, budget: usize) -> CollapsibilityResult {
    let hasse = Hasse::new(c);
    let mut state = SearchState {
        hasse: &hasse,
        alive: vec![true; hasse.len()],
        live_cofaces: hasse.cofaces.iter().map(Vec::len).collect(),
        remaining: hasse.len(),
    };
    if state.remaining == 1 {
        return CollapsibilityResult::Collapsible(sequence(c, &hasse, &[], &state.alive));
    }
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut frames: Vec<(Vec<(usize, usize)>, usize)> = vec![(state.free_pairs(), 0)];
    let mut path: Vec<(usize, usize)> = Vec::new();
    let mut expanded = 0;
    while let Some((options, next)) = frames.last_mut() {
        if *next < options.len() {
            let pair = options[*next];
            *next += 1;
            state.toggle(pair, true);
            if state.remaining == 1 {
                path.push(pair);
                return CollapsibilityResult::Collapsible(sequence(c, &hasse, &path, &state.alive));
            }
            if failed.contains(&state.key()) {
                state.toggle(pair, false);
                continue;
            }
            expanded += 1;
            if expanded > budget {
                return CollapsibilityResult::BudgetExceeded { spent: expanded - 1 };
            }
            path.push(pair);
            frames.push((state.free_pairs(), 0));
        } else {
            failed.insert(state.key());
            frames.pop();
            if let Some(pair) = path.pop() {
                state.toggle(pair, false);
            }
        }
    }
    CollapsibilityResult::NotCollapsible(NotCollapsibleReason::Exhausted)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CollapseError {
    #[error("target is not a subcomplex of the source")]
    NotASubcomplex,
    #[error("relative collapse is implemented for complexes of dimension at most 2, got {0}")]
    DimensionTooHigh(isize),
    #[error("inclusion is not a homology isomorphism in dimension {dim}")]
    NotDeformationRetract { dim: usize },
    #[error("greedy collapse got stuck with {} faces outside the target", .extra)]
    StuckBeforeTarget { extra: usize, residual: SimplicialComplex },
}

/// Collapses a 2-complex `c` onto its subcomplex `d` after checking that the
/// inclusion induces an isomorphism on Z2 homology.
pub fn relative_collapse(c: &SimplicialComplex, d: &SimplicialComplex) -> Result<CollapseSequence, CollapseError> {
    if !d.is_subcomplex_of(c) {
        return Err(CollapseError::NotASubcomplex);
    }
    if c.dim() > 2 {
        return Err(CollapseError::DimensionTooHigh(c.dim()));
    }
    let bc = betti_or_zero(c);
    let bd = betti_or_zero(d);
    for i in 0..=c.dim().max(0) as usize {
        let injective = i as isize > d.dim() || inclusion_induced_injective(d, c, i).unwrap_or(false);
        if bc.get(i) != bd.get(i) || !injective {
            return Err(CollapseError::NotDeformationRetract { dim: i });
        }
    }
    collapse_onto(c, d)
}

/// Deterministic greedy collapse of `c` towards the subcomplex `d`, in any
/// dimension: at each step the free pair outside `d` with the highest
/// dimension and then the smallest face is collapsed. Fails if it stops
/// before reaching `d`.
pub fn collapse_onto(c: &SimplicialComplex, d: &SimplicialComplex) -> Result<CollapseSequence, CollapseError> {
    if !d.is_subcomplex_of(c) {
        return Err(CollapseError::NotASubcomplex);
    }
    let hasse = Hasse::new(c);
    let protected: Vec<bool> = (0..hasse.len()).map(|i| d.contains(hasse.face(i))).collect();
    let mut collapser = Collapser::new(&hasse);
    let mut pairs = Vec::new();
    loop {
        let best = (0..collapser.free_count())
            .map(|k| collapser.free_at(k))
            .filter(|&a| !protected[a])
            .map(|a| (a, collapser.coface_of(a)))
            .max_by_key(|&(a, _)| (hasse.dim_of(a), std::cmp::Reverse(a)));
        let Some((a, b)) = best else { break };
        collapser.collapse(a, b);
        pairs.push((a, b));
    }
    let seq = sequence(c, &hasse, &pairs, &collapser.alive);
    let extra = collapser.remaining - d.num_faces();
    if extra > 0 {
        return Err(CollapseError::StuckBeforeTarget { extra, residual: seq.target });
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Vertex;

    fn c(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    #[test]
    fn triangle_collapses_both_ways() {
        let t = c(&[&[1, 2, 3]]);
        for s in [Strategy::Greedy, Strategy::Backtracking] {
            match collapsible(&t, s, 10, 0, Execution::Sequential) {
                CollapsibilityResult::Collapsible(seq) => {
                    assert!(seq.verify());
                    assert_eq!(seq.target.num_faces(), 1);
                    assert!(seq.to_matching().unwrap().validate().is_ok());
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn circle_is_rejected_by_homology() {
        let k = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(
            collapsible(&k, Strategy::Backtracking, 100, 0, Execution::Sequential),
            CollapsibilityResult::NotCollapsible(NotCollapsibleReason::Betti)
        );
    }

    #[test]
    fn point_is_collapsible() {
        let k = c(&[&[7]]);
        assert!(collapsible(&k, Strategy::Backtracking, 1, 0, Execution::Sequential).is_collapsible());
    }

    #[test]
    fn annulus_onto_core_circle() {
        let a = c(&[&[1, 2, 4], &[2, 4, 5], &[2, 3, 5], &[3, 5, 6], &[1, 3, 6], &[1, 4, 6]]);
        let core = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        let seq = relative_collapse(&a, &core).unwrap();
        assert_eq!(seq.replay().unwrap(), core);
        let point = c(&[&[1]]);
        assert!(matches!(relative_collapse(&a, &point), Err(CollapseError::NotDeformationRetract { dim: 0 | 1 })));
    }

    #[test]
    fn replay_rejects_non_free_pairs() {
        let t = c(&[&[1, 2, 3]]);
        let bad = CollapseSequence {
            source: t.clone(),
            steps: vec![(Face::new([1]).unwrap(), Face::new([1, 2]).unwrap())],
            target: t,
        };
        assert!(matches!(bad.replay(), Err(MorseError::NotFreeAtStep { step: 0, .. })));
    }
}

//! Non-evasiveness: certificates and an exact memoized search.

use std::collections::{BTreeMap, HashMap};

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::homology::betti_or_zero;

/// Recursive witness that a complex is non-evasive: either a single point,
/// or a vertex whose link and deletion are both non-evasive.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub enum NonEvasivenessCertificate {
    Point(Vertex),
    Step { vertex: Vertex, link: Box<NonEvasivenessCertificate>, deletion: Box<NonEvasivenessCertificate> },
}

impl NonEvasivenessCertificate {
    /// Replays the certificate against `c`.
    pub fn verify(&self, c: &SimplicialComplex) -> bool {
        match self {
            NonEvasivenessCertificate::Point(v) => c.num_vertices() == 1 && c.has_vertex(*v),
            NonEvasivenessCertificate::Step { vertex, link, deletion } => {
                c.has_vertex(*vertex)
                    && c.num_vertices() > 1
                    && link.verify(&c.link(*vertex).unwrap())
                    && deletion.verify(&c.deletion(*vertex).unwrap())
            }
        }
    }

    /// Number of nodes in the certificate tree.
    pub fn size(&self) -> usize {
        match self {
            NonEvasivenessCertificate::Point(_) => 1,
            NonEvasivenessCertificate::Step { link, deletion, .. } => 1 + link.size() + deletion.size(),
        }
    }

    /// Vertex deletion order along the deletion spine, ending at the last point.
    pub fn deletion_order(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                NonEvasivenessCertificate::Point(v) => {
                    out.push(*v);
                    return out;
                }
                NonEvasivenessCertificate::Step { vertex, deletion, .. } => {
                    out.push(*vertex);
                    cur = deletion;
                }
            }
        }
    }

    fn relabel(&self, map: &impl Fn(Vertex) -> Vertex) -> Self {
        match self {
            NonEvasivenessCertificate::Point(v) => NonEvasivenessCertificate::Point(map(*v)),
            NonEvasivenessCertificate::Step { vertex, link, deletion } => NonEvasivenessCertificate::Step {
                vertex: map(*vertex),
                link: Box::new(link.relabel(map)),
                deletion: Box::new(deletion.relabel(map)),
            },
        }
    }

    /// Certificate for the full simplex on `vertices` (sorted, nonempty).
    pub fn for_simplex(vertices: &[Vertex]) -> Self {
        match vertices {
            [v] => NonEvasivenessCertificate::Point(*v),
            [first, rest @ ..] => {
                let sub = Box::new(Self::for_simplex(rest));
                NonEvasivenessCertificate::Step { vertex: *first, link: sub.clone(), deletion: sub }
            }
            [] => panic!("empty simplex"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvasiveReason {
    /// Z2 homology is not that of a point.
    Betti,
    /// The exhaustive search found no valid deletion sequence.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonEvasiveResult {
    NonEvasive(NonEvasivenessCertificate),
    Evasive(EvasiveReason),
    BudgetExceeded { expanded: usize },
}

pub const DEFAULT_BUDGET: usize = 1_000_000;

struct BudgetExhausted;

struct Search {
    memo: HashMap<Vec<Face>, Option<NonEvasivenessCertificate>>,
    expanded: usize,
    budget: usize,
}

/// Decides non-evasiveness exactly, expanding at most `budget` search nodes.
///
/// Results are memoized under a relabeled facet list (vertices ordered by
/// their face-count profile). Equal keys imply isomorphic complexes, so the
/// memo is sound even though the key is not a full canonical form.
pub fn nonevasive(c: &SimplicialComplex, budget: usize) -> NonEvasiveResult {
    if c.is_empty() {
        return NonEvasiveResult::Evasive(EvasiveReason::Exhausted);
    }
    if !betti_or_zero(c).is_acyclic() {
        return NonEvasiveResult::Evasive(EvasiveReason::Betti);
    }
    let mut search = Search { memo: HashMap::new(), expanded: 0, budget };
    match search.decide(c) {
        Ok(Some(cert)) => NonEvasiveResult::NonEvasive(cert),
        Ok(None) => NonEvasiveResult::Evasive(EvasiveReason::Exhausted),
        Err(BudgetExhausted) => NonEvasiveResult::BudgetExceeded { expanded: search.expanded },
    }
}

/// Vertex relabeling by (face-count profile, label) and the relabeled facets.
fn canonical_key(c: &SimplicialComplex) -> (Vec<Face>, Vec<Vertex>) {
    let dims = (c.dim() + 1) as usize;
    let mut profile: BTreeMap<Vertex, Vec<usize>> = c.vertices().into_iter().map(|v| (v, vec![0; dims])).collect();
    for f in c.all_faces() {
        for v in f.vertices() {
            profile.get_mut(v).unwrap()[f.dim()] += 1;
        }
    }
    let mut order: Vec<Vertex> = profile.keys().copied().collect();
    order.sort_by(|a, b| profile[a].cmp(&profile[b]).then(a.cmp(b)));
    let new_label: HashMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
    let mut key: Vec<Face> = c.facets().into_iter().map(|f| f.map_vertices(|v| new_label[&v]).unwrap()).collect();
    key.sort();
    (key, order)
}

impl Search {
    fn decide(&mut self, c: &SimplicialComplex) -> Result<Option<NonEvasivenessCertificate>, BudgetExhausted> {
        if c.is_empty() {
            return Ok(None);
        }
        if c.num_vertices() == 1 {
            return Ok(Some(NonEvasivenessCertificate::Point(c.vertices()[0])));
        }
        let facets = c.facets();
        if facets.len() == 1 {
            return Ok(Some(NonEvasivenessCertificate::for_simplex(facets[0].vertices())));
        }
        if c.dim() == 0 {
            return Ok(None);
        }
        let (key, order) = canonical_key(c);
        let back = |v: Vertex| order[v as usize];
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.as_ref().map(|cert| cert.relabel(&back)));
        }
        if !betti_or_zero(c).is_acyclic() {
            self.memo.insert(key, None);
            return Ok(None);
        }
        self.expanded += 1;
        if self.expanded > self.budget {
            return Err(BudgetExhausted);
        }
        let mut candidates: Vec<(usize, Vertex, SimplicialComplex)> = c
            .vertices()
            .into_iter()
            .map(|v| {
                let link = c.link(v).unwrap();
                (link.num_faces(), v, link)
            })
            .collect();
        candidates.sort_by_key(|(size, v, _)| (*size, *v));
        let mut found = None;
        for (_, v, link) in candidates {
            let Some(link_cert) = self.decide(&link)? else { continue };
            let deletion = c.deletion(v).unwrap();
            if let Some(del_cert) = self.decide(&deletion)? {
                found = Some(NonEvasivenessCertificate::Step {
                    vertex: v,
                    link: Box::new(link_cert),
                    deletion: Box::new(del_cert),
                });
                break;
            }
        }
        let position: HashMap<Vertex, Vertex> = order.iter().enumerate().map(|(i, &v)| (v, i as Vertex)).collect();
        self.memo.insert(key, found.as_ref().map(|cert| cert.relabel(&|v| position[&v])));
        Ok(found)
    }
}

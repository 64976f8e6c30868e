//! Simplicial homology with Z2 coefficients.
//!
//! Chains are bit vectors indexed by the lexicographic face order of a
//! complex, so every matrix built here is reproducible bit for bit.

use std::collections::HashMap;

use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("dimension {dim} is outside 1..={max}")]
    DimensionOutOfRange { dim: usize, max: isize },
    #[error("homology of the empty complex is not defined here")]
    EmptyComplex,
    #[error("face {0} of the subcomplex is missing from the ambient complex")]
    NotASubcomplex(Face),
}

/// Dense bit vector over Z2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn lowest_set(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Incrementally maintained row-echelon basis of a subspace of Z2^n.
/// Each stored row has a distinct lowest set bit (its pivot).
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    rows: Vec<BitVec>,
    pivot_row: HashMap<usize, usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Clears pivot bits from the bottom up. Since every row's lowest bit is
    /// its pivot, `v` lies in the span iff the result is zero.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        while let Some(p) = v.lowest_set() {
            match self.pivot_row.get(&p) {
                Some(&r) => v.xor_assign(&self.rows[r]),
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns `true` if the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let v = self.reduce(v);
        match v.lowest_set() {
            Some(p) => {
                self.pivot_row.insert(p, self.rows.len());
                self.rows.push(v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Dense bit-packed matrix over Z2, stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows, cols, data: vec![BitVec::zeros(cols); rows] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize) {
        self.data[r].set(c);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.data[r]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.ones() {
                t.set(c, r);
            }
        }
        t
    }

    /// Column `c` as a bit vector of length `rows`.
    pub fn column(&self, c: usize) -> BitVec {
        let mut v = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            if self.get(r, c) {
                v.set(r);
            }
        }
        v
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            for k in row.ones() {
                out.data[r].xor_assign(&other.data[k]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVec::is_zero)
    }

    /// Rank over Z2 by row reduction.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new();
        for row in &self.data {
            basis.insert(row.clone());
        }
        basis.rank()
    }

    /// Column-sum parity check helper: number of ones in column `c`.
    pub fn column_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }
}

/// Betti numbers β_0..β_d with an explicit convention flag.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BettiVector {
    pub values: Vec<usize>,
    pub reduced: bool,
}

impl BettiVector {
    pub fn get(&self, i: usize) -> usize {
        self.values.get(i).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        let s: i64 =
            self.values.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        if self.reduced {
            s + 1
        } else {
            s
        }
    }

    /// The reduced vector: β̃_0 = β_0 − 1 for a nonempty complex.
    pub fn to_reduced(&self) -> BettiVector {
        if self.reduced {
            return self.clone();
        }
        let mut values = self.values.clone();
        values[0] -= 1;
        BettiVector { values, reduced: true }
    }

    /// True for (1, 0, …, 0).
    pub fn is_acyclic(&self) -> bool {
        let mut it = self.values.iter();
        let first = it.next().copied().unwrap_or(0);
        let expected = if self.reduced { 0 } else { 1 };
        first == expected && it.all(|&b| b == 0)
    }
}

/// Boundary chains of the `dim`-faces of `c`, one bit vector per face,
/// indexed over the `(dim-1)`-faces.
pub(crate) fn boundary_columns(c: &SimplicialComplex, dim: usize) -> Vec<BitVec> {
    let lower = c.faces(dim - 1).len();
    c.faces(dim)
        .iter()
        .map(|f| {
            let mut v = BitVec::zeros(lower);
            for g in f.facets() {
                v.set(c.index_of(&g).expect("closed complex"));
            }
            v
        })
        .collect()
}

/// ∂_dim: rows are (dim−1)-faces, columns dim-faces.
pub fn boundary_matrix(c: &SimplicialComplex, dim: usize) -> Result<BitMatrix, HomologyError> {
    if dim < 1 || dim as isize > c.dim() {
        return Err(HomologyError::DimensionOutOfRange { dim, max: c.dim() });
    }
    let cols = boundary_columns(c, dim);
    let mut m = BitMatrix::zeros(c.faces(dim - 1).len(), cols.len());
    for (j, col) in cols.iter().enumerate() {
        for i in col.ones() {
            m.set(i, j);
        }
    }
    Ok(m)
}

fn boundary_rank(c: &SimplicialComplex, dim: usize) -> usize {
    if dim < 1 || dim as isize > c.dim() {
        return 0;
    }
    let mut basis = EchelonBasis::new();
    for col in boundary_columns(c, dim) {
        basis.insert(col);
    }
    basis.rank()
}

/// Non-reduced Betti numbers β_0..β_d over Z2.
pub fn betti(c: &SimplicialComplex) -> Result<BettiVector, HomologyError> {
    if c.is_empty() {
        return Err(HomologyError::EmptyComplex);
    }
    Ok(betti_or_zero(c))
}

/// Like [`betti`], but the empty complex gets the empty vector.
pub fn betti_or_zero(c: &SimplicialComplex) -> BettiVector {
    let d = c.dim();
    if d < 0 {
        return BettiVector { values: vec![], reduced: false };
    }
    let d = d as usize;
    let ranks: Vec<usize> = (0..=d + 1).map(|i| boundary_rank(c, i)).collect();
    let values = (0..=d).map(|i| c.faces(i).len() - ranks[i] - ranks[i + 1]).collect();
    BettiVector { values, reduced: false }
}

/// Basis of the Z2 cycle space Z_dim(c), as chains over the `dim`-faces of `c`.
pub fn cycle_basis(c: &SimplicialComplex, dim: usize) -> Vec<BitVec> {
    let n = c.faces(dim).len();
    if dim == 0 {
        return (0..n)
            .map(|i| {
                let mut v = BitVec::zeros(n);
                v.set(i);
                v
            })
            .collect();
    }
    // Reduce boundary columns while tracking which faces were combined; a
    // column that vanishes yields a cycle.
    let mut pivots: HashMap<usize, (BitVec, BitVec)> = HashMap::new();
    let mut cycles = Vec::new();
    for (j, mut col) in boundary_columns(c, dim).into_iter().enumerate() {
        let mut track = BitVec::zeros(n);
        track.set(j);
        loop {
            match col.lowest_set() {
                None => {
                    cycles.push(track);
                    break;
                }
                Some(p) => match pivots.get(&p) {
                    Some((pc, pt)) => {
                        col.xor_assign(pc);
                        track.xor_assign(pt);
                    }
                    None => {
                        pivots.insert(p, (col, track));
                        break;
                    }
                },
            }
        }
    }
    cycles
}

/// Whether `H_dim(a) → H_dim(x)` induced by inclusion is injective.
///
/// Cycles of `a` are rewritten in the chain basis of `x`; the induced map has
/// rank `dim(Z(a) + B(x)) − dim B(x)`, and it is injective exactly when that
/// rank equals `β_dim(a)`.
pub fn inclusion_induced_injective(
    a: &SimplicialComplex,
    x: &SimplicialComplex,
    dim: usize,
) -> Result<bool, HomologyError> {
    if let Some(f) = a.all_faces().find(|f| !x.contains(f)) {
        return Err(HomologyError::NotASubcomplex(f.clone()));
    }
    Ok(induced_rank_deficiency(a, x, dim) == 0)
}

/// `β_dim(a) − rank(H_dim(a) → H_dim(x))`, i.e. the dimension of the kernel.
/// `a` must be a subcomplex of `x`.
pub(crate) fn induced_rank_deficiency(a: &SimplicialComplex, x: &SimplicialComplex, dim: usize) -> usize {
    if dim as isize > a.dim() {
        return 0;
    }
    let n = x.faces(dim).len();
    let mut basis = EchelonBasis::new();
    if (dim as isize) < x.dim() {
        for col in boundary_columns(x, dim + 1) {
            basis.insert(col);
        }
    }
    let boundary_rank_x = basis.rank();
    let a_faces = a.faces(dim);
    let cycles = cycle_basis(a, dim);
    let z_dim = cycles.len();
    for z in cycles {
        let mut v = BitVec::zeros(n);
        for i in z.ones() {
            v.set(x.index_of(&a_faces[i]).expect("subcomplex"));
        }
        basis.insert(v);
    }
    let map_rank = basis.rank() - boundary_rank_x;
    let beta_a = z_dim - boundary_rank(a, dim + 1);
    beta_a - map_rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Vertex;

    fn c(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.iter().copied())).unwrap()
    }

    fn e() -> SimplicialComplex {
        c(&[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6], &[2, 4, 6]])
    }

    /// Annulus: outer triangle 1,2,3 and inner triangle 4,5,6, six triangles between.
    fn annulus() -> SimplicialComplex {
        c(&[&[1, 2, 4], &[2, 4, 5], &[2, 3, 5], &[3, 5, 6], &[1, 3, 6], &[1, 4, 6]])
    }

    #[test]
    fn boundary_matrices() {
        let m = boundary_matrix(&c(&[&[1, 2]]), 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert!(m.get(0, 0) && m.get(1, 0));
        let m = boundary_matrix(&c(&[&[1, 2, 3]]), 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.column_weight(0), 3);
        let m = boundary_matrix(&e(), 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 12));
        assert!((0..12).all(|j| m.column_weight(j) == 2));
        assert_eq!(m.rank(), 5);
        assert!(matches!(boundary_matrix(&e(), 3), Err(HomologyError::DimensionOutOfRange { .. })));
        assert!(matches!(boundary_matrix(&e(), 0), Err(HomologyError::DimensionOutOfRange { .. })));
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let k = c(&[&[1, 2, 3, 4], &[2, 3, 4, 5], &[5, 6]]);
        for d in 1..k.dim() as usize {
            let a = boundary_matrix(&k, d).unwrap();
            let b = boundary_matrix(&k, d + 1).unwrap();
            assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(&c(&[&[7]])).unwrap().values, vec![1]);
        assert_eq!(betti(&e()).unwrap().values, vec![1, 3, 0]);
        let sphere = c(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(betti(&sphere).unwrap().values, vec![1, 0, 1]);
        assert_eq!(betti(&SimplicialComplex::empty()), Err(HomologyError::EmptyComplex));
        assert_eq!(betti(&annulus()).unwrap().values, vec![1, 1, 0]);
    }

    #[test]
    fn reduced_convention() {
        let b = betti(&e()).unwrap();
        let r = b.to_reduced();
        assert_eq!(r.values, vec![0, 3, 0]);
        assert_eq!(r.euler_characteristic(), b.euler_characteristic());
        assert_eq!(b.euler_characteristic(), e().euler_characteristic());
    }

    #[test]
    fn inclusion_examples() {
        let x = e();
        for i in 0..3 {
            assert!(inclusion_induced_injective(&x, &x, i).unwrap());
        }
        let two = c(&[&[1], &[2]]);
        let edge = c(&[&[1, 2]]);
        assert!(!inclusion_induced_injective(&two, &edge, 0).unwrap());
        let outer = c(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(inclusion_induced_injective(&outer, &annulus(), 1).unwrap());
        // A circle bounding a disc is killed.
        assert!(!inclusion_induced_injective(&outer, &c(&[&[1, 2, 3]]), 1).unwrap());
        assert!(matches!(inclusion_induced_injective(&edge, &two, 0), Err(HomologyError::NotASubcomplex(_))));
    }

    #[test]
    fn echelon_membership() {
        let mut b = EchelonBasis::new();
        let mut v1 = BitVec::zeros(130);
        v1.set(3);
        v1.set(100);
        let mut v2 = BitVec::zeros(130);
        v2.set(100);
        v2.set(129);
        assert!(b.insert(v1.clone()));
        assert!(b.insert(v2.clone()));
        let mut sum = v1.clone();
        sum.xor_assign(&v2);
        assert!(b.contains(&sum));
        assert!(!b.insert(sum));
        let mut other = BitVec::zeros(130);
        other.set(129);
        assert!(!b.contains(&other));
        assert_eq!(b.rank(), 2);
    }
}

//! Hasse diagram of a complex with dense global face ids.

use crate::complex::{Face, SimplicialComplex};

/// Faces are numbered dimension by dimension, lexicographically inside each
/// dimension. `facets[id]` lists the codimension-one faces of `id`,
/// `cofaces[id]` the faces one dimension up that contain it.
pub struct Hasse<'a> {
    pub complex: &'a SimplicialComplex,
    offsets: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    pub cofaces: Vec<Vec<usize>>,
}

impl<'a> Hasse<'a> {
    pub fn new(complex: &'a SimplicialComplex) -> Self {
        let mut offsets = vec![0];
        let dims = (complex.dim() + 1).max(0) as usize;
        for d in 0..dims {
            offsets.push(offsets[d] + complex.faces(d).len());
        }
        let total = *offsets.last().unwrap();
        let mut facets = vec![Vec::new(); total];
        let mut cofaces = vec![Vec::new(); total];
        for d in 1..dims {
            for (j, f) in complex.faces(d).iter().enumerate() {
                let id = offsets[d] + j;
                for g in f.facets() {
                    let gid = offsets[d - 1] + complex.index_of(&g).expect("closed complex");
                    facets[id].push(gid);
                    cofaces[gid].push(id);
                }
            }
        }
        Hasse { complex, offsets, facets, cofaces }
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn id(&self, face: &Face) -> Option<usize> {
        let d = face.dim();
        if d + 1 >= self.offsets.len() {
            return None;
        }
        self.complex.index_of(face).map(|i| self.offsets[d] + i)
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.offsets.partition_point(|&o| o <= id) - 1
    }

    pub fn face(&self, id: usize) -> &Face {
        let d = self.dim_of(id);
        &self.complex.faces(d)[id - self.offsets[d]]
    }

    pub fn range(&self, dim: usize) -> std::ops::Range<usize> {
        if dim + 1 >= self.offsets.len() {
            return 0..0;
        }
        self.offsets[dim]..self.offsets[dim + 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        let c = SimplicialComplex::from_facets([vec![1, 2, 3], vec![3, 4]]).unwrap();
        let h = Hasse::new(&c);
        assert_eq!(h.len(), c.num_faces());
        for id in 0..h.len() {
            assert_eq!(h.id(h.face(id)), Some(id));
            assert_eq!(h.face(id).dim(), h.dim_of(id));
        }
        let tri = h.id(&Face::new([1, 2, 3]).unwrap()).unwrap();
        assert_eq!(h.facets[tri].len(), 3);
        let v3 = h.id(&Face::vertex(3)).unwrap();
        assert_eq!(h.cofaces[v3].len(), 3);
    }
}

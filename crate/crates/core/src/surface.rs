//! Ideal triangulations: faces with clockwise side slots, edge gluing,
//! the sigma matrix, balancedness and the edge/triangle change of basis.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega_ring::OmegaPoly;
use crate::quantum_torus::{CommutationMatrix, QTElement, QTMonomial};

/// Side slot `(face, position)`, both 0-based; positions run clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub face: usize,
    pub pos: usize,
}

impl Slot {
    pub fn new(face: usize, pos: usize) -> Self {
        Self { face, pos }
    }

    /// Generator index in the triangle tensor algebra.
    pub fn index(&self) -> usize {
        3 * self.face + self.pos
    }

    /// Next slot clockwise in the same face.
    pub fn next(&self) -> Slot {
        Slot::new(self.face, (self.pos + 1) % 3)
    }

    pub fn prev(&self) -> Slot {
        Slot::new(self.face, (self.pos + 2) % 3)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.face + 1, self.pos + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    /// One slot for a boundary edge, two for an interior edge. The first
    /// slot faces wall 0 of the edge's biangle.
    pub slots: Vec<Slot>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.slots.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTriangulation {
    m: usize,
    edges: Vec<Edge>,
    slot_edge: Vec<usize>,
}

impl IdealTriangulation {
    /// Builds and validates a triangulation from edge records.
    pub fn new(m: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut slot_edge = vec![usize::MAX; 3 * m];
        for (i, e) in edges.iter().enumerate() {
            if e.slots.is_empty() || e.slots.len() > 2 {
                return Err(Error::Surface(format!("edge {} needs one or two slots", e.name)));
            }
            if e.slots.len() == 2 && e.slots[0] == e.slots[1] {
                return Err(Error::Surface(format!("slot {} glued to itself", e.slots[0])));
            }
            for s in &e.slots {
                if s.face >= m || s.pos >= 3 {
                    return Err(Error::Surface(format!("slot {s} out of range")));
                }
                if slot_edge[s.index()] != usize::MAX {
                    return Err(Error::Surface(format!("slot {s} glued twice")));
                }
                slot_edge[s.index()] = i;
            }
        }
        if let Some(k) = slot_edge.iter().position(|e| *e == usize::MAX) {
            return Err(Error::Surface(format!("slot {} not glued", Slot::new(k / 3, k % 3))));
        }
        for (i, a) in edges.iter().enumerate() {
            if edges[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Surface(format!("edge name {} used twice", a.name)));
            }
        }
        Ok(Self { m, edges, slot_edge })
    }

    pub fn faces(&self) -> usize {
        self.m
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn edge_of(&self, s: Slot) -> usize {
        self.slot_edge[s.index()]
    }

    /// `(edge, wall)` that the slot faces.
    pub fn wall_of(&self, s: Slot) -> (usize, usize) {
        let e = self.edge_of(s);
        let w = self.edges[e].slots.iter().position(|x| *x == s).expect("slot in its edge");
        (e, w)
    }

    /// The slot on the other side of the slot's edge, if interior.
    pub fn partner(&self, s: Slot) -> Option<Slot> {
        let e = &self.edges[self.edge_of(s)];
        e.slots.iter().copied().find(|x| *x != s).filter(|_| e.slots.len() == 2)
    }

    /// Commutation matrix of the tensor product of the face algebras.
    pub fn triangle_commutation(&self) -> CommutationMatrix {
        let mut c = CommutationMatrix::zero(3 * self.m);
        for f in 0..self.m {
            for a in 0..3 {
                let s = Slot::new(f, a);
                c.set(s.index(), s.next().index(), 1);
            }
        }
        c
    }

    /// `sigma_ij = a_ij - a_ji`; `a_ij` counts corners where the side on
    /// edge `i` is followed clockwise by the side on edge `j`.
    pub fn sigma_matrix(&self) -> CommutationMatrix {
        let n = self.n_edges();
        let mut rows = vec![vec![0; n]; n];
        for f in 0..self.m {
            for a in 0..3 {
                let s = Slot::new(f, a);
                let i = self.edge_of(s);
                let j = self.edge_of(s.next());
                rows[i][j] += 1;
                rows[j][i] -= 1;
            }
        }
        CommutationMatrix::from_rows(&rows).expect("antisymmetric by construction")
    }

    /// Slot exponent vector induced by an edge exponent vector.
    pub fn slot_exponents(&self, k: &[i32]) -> Vec<i32> {
        (0..3 * self.m).map(|s| k[self.slot_edge[s]]).collect()
    }

    /// Parity class of `k` when every face sees an even exponent sum.
    pub fn balanced(&self, k: &[i32]) -> Option<Vec<i32>> {
        let ks = self.slot_exponents(k);
        for f in 0..self.m {
            if (ks[3 * f] + ks[3 * f + 1] + ks[3 * f + 2]).rem_euclid(2) != 0 {
                return None;
            }
        }
        Some(k.iter().map(|x| x.rem_euclid(2)).collect())
    }

    /// Image of the Weyl edge monomial `[Z^k]` in the triangle algebra.
    pub fn edge_embed(&self, k: &[i32]) -> QTMonomial {
        let tc = self.triangle_commutation();
        let ks = self.slot_exponents(k);
        QTMonomial { coeff: OmegaPoly::w(tc.weyl_shift(&ks)), exps: ks }
    }

    /// Rewrites an element of the triangle algebra in the Weyl edge basis.
    pub fn tensor_to_edge(&self, x: &QTElement, sigma: Arc<CommutationMatrix>) -> Result<QTElement> {
        let tc = self.triangle_commutation();
        let mut out = QTElement::zero(sigma);
        for (ks, c) in x.terms() {
            let mut k = vec![0; self.n_edges()];
            for (i, e) in self.edges.iter().enumerate() {
                let v = ks[e.slots[0].index()];
                if e.slots.iter().any(|s| ks[s.index()] != v) {
                    return Err(Error::NotInEdgeSubalgebra(format!(
                        "edge {} has exponents {} and {}",
                        e.name,
                        v,
                        ks[e.slots[1].index()]
                    )));
                }
                k[i] = v;
            }
            if self.balanced(&k).is_none() {
                return Err(Error::NotBalanced);
            }
            let weyl = c.div_unit(&OmegaPoly::w(tc.weyl_shift(ks)))?;
            out.add_assign(&QTElement::weyl(out.comm().clone(), weyl, k));
        }
        Ok(out)
    }

    /// Diagonal exchange at an interior edge.
    pub fn flip(&self, e: usize) -> Result<FlipData> {
        let edge = self.edges.get(e).ok_or_else(|| Error::Flip(format!("no edge {e}")))?;
        if edge.is_boundary() {
            return Err(Error::Flip(format!("edge {} is a boundary edge", edge.name)));
        }
        let (s1, s2) = (edge.slots[0], edge.slots[1]);
        if s1.face == s2.face {
            return Err(Error::Flip(format!("edge {} is self-folded", edge.name)));
        }
        let (f1, f2) = (s1.face, s2.face);
        // old slots of the square sides lambda_2..lambda_5
        let old = [s1.prev(), s2.next(), s2.next().next(), s1.next()];
        let new = [Slot::new(f1, 0), Slot::new(f1, 1), Slot::new(f2, 0), Slot::new(f2, 1)];
        let mut edges = self.edges.clone();
        for edge in edges.iter_mut() {
            for s in edge.slots.iter_mut() {
                if let Some(k) = old.iter().position(|o| o == s) {
                    *s = new[k];
                }
            }
        }
        edges[e].slots = vec![Slot::new(f1, 2), Slot::new(f2, 2)];
        let tri = IdealTriangulation::new(self.m, edges)?;
        Ok(FlipData {
            tri,
            t1: f1,
            t2: f2,
            diagonal: e,
            old_sides: old,
            new_sides: new,
        })
    }

    /// Corner orbits (punctures); only used for validation and reporting.
    pub fn vertex_count(&self) -> usize {
        // corner c of slot s sits between s and s.next()
        let n = 3 * self.m;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in &self.edges {
            if let [a, b] = e.slots[..] {
                // the corner after a matches the corner before b, and vice versa
                let pairs = [(a.index(), b.prev().index()), (a.prev().index(), b.index())];
                for (x, y) in pairs {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    parent[rx] = ry;
                }
            }
        }
        (0..n).filter(|x| find(&mut parent, *x) == *x).count()
    }
}

/// Result of a diagonal exchange. Sides are listed as lambda_2..lambda_5.
#[derive(Clone, Debug)]
pub struct FlipData {
    pub tri: IdealTriangulation,
    pub t1: usize,
    pub t2: usize,
    pub diagonal: usize,
    pub old_sides: [Slot; 4],
    pub new_sides: [Slot; 4],
}

/// A few standard triangulations.
pub mod standard {
    use super::*;

    fn e(name: &str, slots: &[(usize, usize)]) -> Edge {
        Edge {
            name: name.to_string(),
            slots: slots.iter().map(|(f, p)| Slot::new(*f, *p)).collect(),
        }
    }

    /// One triangle, three boundary edges.
    pub fn triangle() -> IdealTriangulation {
        IdealTriangulation::new(1, vec![e("a", &[(0, 0)]), e("b", &[(0, 1)]), e("c", &[(0, 2)])])
            .expect("valid")
    }

    /// Two triangles glued along the diagonal `d` (edge 1).
    /// Face 1 clockwise: s2, d, s5; face 2 clockwise: d, s3, s4.
    pub fn square() -> IdealTriangulation {
        IdealTriangulation::new(
            2,
            vec![
                e("d", &[(0, 1), (1, 0)]),
                e("s2", &[(0, 0)]),
                e("s3", &[(1, 1)]),
                e("s4", &[(1, 2)]),
                e("s5", &[(0, 2)]),
            ],
        )
        .expect("valid")
    }

    /// Once-punctured torus: slot (1,a) glued to (2,a).
    pub fn punctured_torus() -> IdealTriangulation {
        IdealTriangulation::new(
            2,
            vec![e("e1", &[(0, 0), (1, 0)]), e("e2", &[(0, 1), (1, 1)]), e("e3", &[(0, 2), (1, 2)])],
        )
        .expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_torus() {
        let t = standard::punctured_torus();
        let s = t.sigma_matrix();
        assert_eq!(s.get(0, 1), 2);
        assert_eq!(s.get(1, 2), 2);
        assert_eq!(s.get(2, 0), 2);
        assert_eq!(t.vertex_count(), 1);
    }

    #[test]
    fn sigma_triangle() {
        let t = standard::triangle();
        let s = t.sigma_matrix();
        assert_eq!((s.get(0, 1), s.get(1, 2), s.get(2, 0)), (1, 1, 1));
    }

    #[test]
    fn balanced_torus() {
        let t = standard::punctured_torus();
        assert_eq!(t.balanced(&[1, 1, 0]), Some(vec![1, 1, 0]));
        assert_eq!(t.balanced(&[1, 0, 0]), None);
        assert_eq!(t.balanced(&[0, 0, 0]), Some(vec![0, 0, 0]));
    }

    #[test]
    fn glued_twice() {
        let r = IdealTriangulation::new(
            1,
            vec![
                Edge { name: "a".into(), slots: vec![Slot::new(0, 0), Slot::new(0, 1)] },
                Edge { name: "b".into(), slots: vec![Slot::new(0, 1)] },
                Edge { name: "c".into(), slots: vec![Slot::new(0, 2)] },
            ],
        );
        assert_eq!(r.unwrap_err().to_string(), "slot (1,2) glued twice");
    }

    #[test]
    fn flip_torus() {
        let t = standard::punctured_torus();
        for e in 0..3 {
            let f = t.flip(e).unwrap();
            assert_eq!((f.tri.faces(), f.tri.n_edges()), (2, 3));
            assert_eq!(f.tri.vertex_count(), 1);
        }
        assert!(standard::square().flip(1).is_err());
    }
}

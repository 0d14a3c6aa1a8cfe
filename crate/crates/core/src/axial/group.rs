use std::collections::{HashMap, VecDeque};

use super::{AxialError, LinearEndo};
use crate::numerics::RatMatrix;

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// The finite group generated by a set of invertible matrices, enumerated
/// breadth-first.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub generators: Vec<LinearEndo>,
    pub elements: Vec<RatMatrix>,
    index: HashMap<RatMatrix, usize>,
}

pub fn group_closure(generators: &[LinearEndo], bound: usize) -> Result<MatrixGroup, AxialError> {
    let n = generators.first().map_or(0, |g| g.matrix.rows());
    if let Some(g) = generators.iter().find(|g| g.matrix.rows() != n || !g.matrix.is_square()) {
        return Err(AxialError::DimensionMismatch { expected: n, found: g.matrix.rows() });
    }
    let id = RatMatrix::identity(n);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let next = elements[i].mul(&g.matrix);
            if !index.contains_key(&next) {
                if elements.len() >= bound {
                    return Err(AxialError::ClosureBound(bound));
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    Ok(MatrixGroup { generators: generators.to_vec(), elements, index })
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.index.contains_key(m)
    }

    fn identity(&self) -> &RatMatrix {
        &self.elements[0]
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, m: &RatMatrix) -> usize {
        let mut p = m.clone();
        let mut k = 1;
        while &p != self.identity() {
            p = p.mul(m);
            k += 1;
        }
        k
    }

    fn inverse(&self, m: &RatMatrix) -> RatMatrix {
        let mut p = m.clone();
        let mut prev = self.identity().clone();
        while &p != self.identity() {
            prev = p.clone();
            p = p.mul(m);
        }
        prev
    }

    pub fn involutions(&self) -> Vec<&RatMatrix> {
        self.elements.iter().filter(|m| self.element_order(m) == 2).collect()
    }

    /// Elements of order dividing 3. For a group of shape 3²:2 these form the
    /// largest normal 3-subgroup.
    pub fn three_part(&self) -> Vec<&RatMatrix> {
        self.elements.iter().filter(|m| 3 % self.element_order(m) == 0).collect()
    }

    /// True iff `subset` is closed under products and under conjugation by
    /// every element.
    pub fn is_normal_subgroup(&self, subset: &[&RatMatrix]) -> bool {
        let set: std::collections::HashSet<&RatMatrix> = subset.iter().copied().collect();
        let closed = subset.iter().all(|a| subset.iter().all(|b| set.contains(&a.mul(b))));
        closed
            && self.elements.iter().all(|g| {
                let gi = self.inverse(g);
                subset.iter().all(|s| set.contains(&g.mul(s).mul(&gi)))
            })
    }

    /// The conjugacy class of `m`.
    pub fn conjugacy_class(&self, m: &RatMatrix) -> Vec<RatMatrix> {
        let mut class: Vec<RatMatrix> = Vec::new();
        for g in &self.elements {
            let c = g.mul(m).mul(&self.inverse(g));
            if !class.contains(&c) {
                class.push(c);
            }
        }
        class
    }

    /// Order 18, a normal subgroup of 9 elements of order dividing 3, and
    /// quotient of order 2.
    pub fn has_shape_3sq_2(&self) -> bool {
        let o3 = self.three_part();
        self.order() == 18 && o3.len() == 9 && self.is_normal_subgroup(&o3)
    }

    pub fn same_elements(&self, other: &MatrixGroup) -> bool {
        self.order() == other.order() && self.elements.iter().all(|m| other.contains(m))
    }
}

//! Finite-support ℤ-graded vector spaces, their elements, and graded linear
//! maps stored as one matrix block per degree.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Degrees outside this window are rejected at construction time.  The
/// complexes in scope are finitely supported; the window just bounds memory.
pub const DEGREE_WINDOW: (i64, i64) = (-6, 6);

/// Finite-support ℤ-graded vector space: a dimension per degree, plus
/// optional basis labels (metadata only, never consulted by the algebra).
#[derive(Clone, PartialEq, Eq)]
pub struct GradedVectorSpace {
    dims: BTreeMap<i64, usize>,
    labels: BTreeMap<i64, Vec<String>>,
}

impl fmt::Debug for GradedVectorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedVectorSpace{:?}", self.dims)
    }
}

impl GradedVectorSpace {
    pub fn new(dims: BTreeMap<i64, usize>) -> Self {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|&(_, n)| n > 0).collect();
        for &d in dims.keys() {
            assert!(
                (DEGREE_WINDOW.0..=DEGREE_WINDOW.1).contains(&d),
                "degree {d} outside supported window {DEGREE_WINDOW:?}"
            );
        }
        GradedVectorSpace { dims, labels: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: &[(i64, usize)]) -> Self {
        Self::new(pairs.iter().copied().collect())
    }

    /// Space concentrated in a single degree.
    pub fn concentrated(degree: i64, dim: usize) -> Self {
        Self::from_pairs(&[(degree, dim)])
    }

    pub fn with_labels(mut self, degree: i64, labels: Vec<String>) -> Self {
        assert_eq!(self.dim(degree), labels.len(), "label count must match dimension");
        self.labels.insert(degree, labels);
        self
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Degrees of nonzero dimension, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    pub fn label(&self, degree: i64, index: usize) -> String {
        self.labels
            .get(&degree)
            .and_then(|v| v.get(index).cloned())
            .unwrap_or_else(|| format!("e[{degree}]_{index}"))
    }

    /// Degree shift: `V[k]` puts the old degree-d component in degree d−k.
    pub fn shift(&self, k: i64) -> GradedVectorSpace {
        GradedVectorSpace {
            dims: self.dims.iter().map(|(&d, &n)| (d - k, n)).collect(),
            labels: self.labels.iter().map(|(&d, l)| (d - k, l.clone())).collect(),
        }
    }

    /// Degreewise direct sum, self-components first.
    pub fn direct_sum(&self, other: &GradedVectorSpace) -> GradedVectorSpace {
        let mut dims = self.dims.clone();
        for (&d, &n) in &other.dims {
            *dims.entry(d).or_insert(0) += n;
        }
        GradedVectorSpace { dims, labels: BTreeMap::new() }
    }

    /// Basis vectors as (degree, index) pairs, ascending degree.
    pub fn basis(&self) -> Vec<(i64, usize)> {
        self.dims.iter().flat_map(|(&d, &n)| (0..n).map(move |i| (d, i))).collect()
    }
}

/// Element of a graded vector space, stored as per-degree coordinate
/// vectors; missing degrees are zero.
#[derive(Clone, Default)]
pub struct GradedElement {
    comps: BTreeMap<i64, Vec<Scalar>>,
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(d, v)| {
                let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("{d}: [{}]", coords.join(", "))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl GradedElement {
    pub fn zero() -> Self {
        GradedElement::default()
    }

    pub fn basis_vector(space: &GradedVectorSpace, degree: i64, index: usize) -> Self {
        assert!(index < space.dim(degree), "basis index out of range");
        let mut v = vec![Scalar::zero(); space.dim(degree)];
        v[index] = Scalar::one();
        GradedElement::from_component(degree, v)
    }

    pub fn from_component(degree: i64, coords: Vec<Scalar>) -> Self {
        let mut comps = BTreeMap::new();
        if coords.iter().any(|x| !x.is_zero()) {
            comps.insert(degree, coords);
        }
        GradedElement { comps }
    }

    /// Coordinates in the given degree, padded to `dim`.
    pub fn component(&self, degree: i64, dim: usize) -> Vec<Scalar> {
        match self.comps.get(&degree) {
            Some(v) => {
                assert!(v.len() <= dim || v.iter().skip(dim).all(Scalar::is_zero));
                let mut out = v.clone();
                out.resize(dim, Scalar::zero());
                out.truncate(dim);
                out
            }
            None => vec![Scalar::zero(); dim],
        }
    }

    /// Degrees with a (possibly zero) stored component.
    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.comps
            .iter()
            .filter(|(_, v)| v.iter().any(|x| !x.is_zero()))
            .map(|(&d, _)| d)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(|v| v.iter().all(Scalar::is_zero))
    }

    /// Degree of a homogeneous element; None for 0 or mixed elements.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let degs: Vec<i64> = self.support().collect();
        match degs.as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Scalar) -> GradedElement {
        GradedElement {
            comps: self
                .comps
                .iter()
                .map(|(&d, v)| (d, v.iter().map(|x| x * s).collect()))
                .collect(),
        }
    }

    pub fn add(&self, other: &GradedElement) -> GradedElement {
        let mut comps = self.comps.clone();
        for (&d, v) in &other.comps {
            let slot = comps.entry(d).or_insert_with(|| vec![Scalar::zero(); v.len()]);
            if slot.len() < v.len() {
                slot.resize(v.len(), Scalar::zero());
            }
            for (i, x) in v.iter().enumerate() {
                slot[i] = &slot[i] + x;
            }
        }
        GradedElement { comps }
    }

    pub fn sub(&self, other: &GradedElement) -> GradedElement {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn neg(&self) -> GradedElement {
        self.scale(&Scalar::from_int(-1))
    }
}

impl PartialEq for GradedElement {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

/// Graded linear map of a fixed shift: one matrix block per source degree,
/// taking source degree d to target degree d + shift.  Absent blocks are 0.
#[derive(Clone)]
pub struct GradedLinearMap {
    pub source: GradedVectorSpace,
    pub target: GradedVectorSpace,
    pub shift: i64,
    blocks: BTreeMap<i64, Matrix>,
}

impl fmt::Debug for GradedLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedLinearMap(shift {}, blocks at {:?})", self.shift, self.blocks.keys())
    }
}

impl GradedLinearMap {
    pub fn zero(source: GradedVectorSpace, target: GradedVectorSpace, shift: i64) -> Self {
        GradedLinearMap { source, target, shift, blocks: BTreeMap::new() }
    }

    pub fn identity(space: &GradedVectorSpace) -> Self {
        let mut m = GradedLinearMap::zero(space.clone(), space.clone(), 0);
        for d in space.degrees() {
            m.blocks.insert(d, Matrix::identity(space.dim(d)));
        }
        m
    }

    pub fn set_block(&mut self, source_degree: i64, block: Matrix) {
        assert_eq!(block.cols, self.source.dim(source_degree), "block cols");
        assert_eq!(block.rows, self.target.dim(source_degree + self.shift), "block rows");
        self.blocks.insert(source_degree, block);
    }

    pub fn with_block(mut self, source_degree: i64, block: Matrix) -> Self {
        self.set_block(source_degree, block);
        self
    }

    /// Block for a source degree, materializing zeros with correct shape.
    pub fn block(&self, source_degree: i64) -> Matrix {
        match self.blocks.get(&source_degree) {
            Some(m) => m.clone(),
            None => Matrix::zero(
                self.target.dim(source_degree + self.shift),
                self.source.dim(source_degree),
            ),
        }
    }

    pub fn apply(&self, x: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for d in self.source.degrees() {
            let v = x.component(d, self.source.dim(d));
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            let img = self.block(d).apply(&v);
            out = out.add(&GradedElement::from_component(d + self.shift, img));
        }
        out
    }

    pub fn add(&self, other: &GradedLinearMap) -> GradedLinearMap {
        assert_eq!(self.shift, other.shift, "shift mismatch in sum");
        let mut out = GradedLinearMap::zero(self.source.clone(), self.target.clone(), self.shift);
        for d in self.source.degrees() {
            let b = &self.block(d) + &other.block(d);
            if !b.is_zero() {
                out.blocks.insert(d, b);
            }
        }
        out
    }

    pub fn sub(&self, other: &GradedLinearMap) -> GradedLinearMap {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> GradedLinearMap {
        let mut out = GradedLinearMap::zero(self.source.clone(), self.target.clone(), self.shift);
        for (&d, b) in &self.blocks {
            out.blocks.insert(d, b.scale(s));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(Matrix::is_zero)
    }

    /// Reinterpret the same blocks between shifted copies of the spaces.
    /// Shifting source by `ks` and target by `kt` changes the stored shift by
    /// `ks − kt` and reindexes the blocks.
    pub fn reindexed(&self, ks: i64, kt: i64) -> GradedLinearMap {
        GradedLinearMap {
            source: self.source.shift(ks),
            target: self.target.shift(kt),
            shift: self.shift + ks - kt,
            blocks: self.blocks.iter().map(|(&d, b)| (d - ks, b.clone())).collect(),
        }
    }
}

impl PartialEq for GradedLinearMap {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift
            && self
                .source
                .degrees()
                .chain(other.source.degrees())
                .all(|d| self.block(d) == other.block(d))
    }
}

/// Composition f ∘ g; shifts add, blocks multiply degreewise.
pub fn glm_compose(f: &GradedLinearMap, g: &GradedLinearMap) -> Result<GradedLinearMap> {
    if f.source != g.target {
        return Err(Error::ShapeMismatch(
            "inner target does not match outer source degreewise".into(),
        ));
    }
    let mut out = GradedLinearMap::zero(g.source.clone(), f.target.clone(), f.shift + g.shift);
    for d in g.source.degrees() {
        let b = &f.block(d + g.shift) * &g.block(d);
        if !b.is_zero() {
            out.blocks.insert(d, b);
        }
    }
    Ok(out)
}

/// Shift every degree of `v` by `k` (see [`GradedVectorSpace::shift`]).
pub fn shift_space(v: &GradedVectorSpace, k: i64) -> GradedVectorSpace {
    v.shift(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(pairs: &[(i64, usize)]) -> GradedVectorSpace {
        GradedVectorSpace::from_pairs(pairs)
    }

    #[test]
    fn shift_space_basics() {
        let v = space(&[(2, 3)]);
        assert_eq!(v.shift(1).dim(1), 3);
        assert_eq!(v.shift(0), v);
        assert_eq!(v.shift(1).shift(-1), v);
    }

    #[test]
    fn compose_with_identity() {
        let v = space(&[(-1, 2), (0, 1)]);
        let w = space(&[(0, 2), (1, 1)]);
        let mut f = GradedLinearMap::zero(v.clone(), w.clone(), 1);
        f.set_block(-1, Matrix::from_int_rows(&[&[1, 2], &[3, 4]]));
        f.set_block(0, Matrix::from_int_rows(&[&[5]]));
        let left = glm_compose(&GradedLinearMap::identity(&w), &f).unwrap();
        let right = glm_compose(&f, &GradedLinearMap::identity(&v)).unwrap();
        assert_eq!(left, f);
        assert_eq!(right, f);
    }

    #[test]
    fn scalar_blocks_multiply() {
        let v = space(&[(0, 1)]);
        let f = GradedLinearMap::zero(v.clone(), v.clone(), 0)
            .with_block(0, Matrix::from_int_rows(&[&[2]]));
        let g = GradedLinearMap::zero(v.clone(), v.clone(), 0)
            .with_block(0, Matrix::from_int_rows(&[&[3]]));
        let fg = glm_compose(&f, &g).unwrap();
        assert_eq!(fg.block(0), Matrix::from_int_rows(&[&[6]]));
    }

    #[test]
    fn compose_associative() {
        let v = space(&[(0, 2), (1, 1)]);
        let f = GradedLinearMap::zero(v.clone(), v.clone(), 0)
            .with_block(0, Matrix::from_int_rows(&[&[1, 1], &[0, 2]]))
            .with_block(1, Matrix::from_int_rows(&[&[3]]));
        let g = GradedLinearMap::zero(v.clone(), v.clone(), 0)
            .with_block(0, Matrix::from_int_rows(&[&[0, 1], &[1, 0]]));
        let h = GradedLinearMap::zero(v.clone(), v.clone(), 0)
            .with_block(0, Matrix::from_int_rows(&[&[2, 0], &[1, 1]]))
            .with_block(1, Matrix::from_int_rows(&[&[-1]]));
        let a = glm_compose(&f, &glm_compose(&g, &h).unwrap()).unwrap();
        let b = glm_compose(&glm_compose(&f, &g).unwrap(), &h).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn apply_respects_shift() {
        let v = space(&[(0, 2)]);
        let w = space(&[(1, 2)]);
        let f = GradedLinearMap::zero(v.clone(), w, 1)
            .with_block(0, Matrix::from_int_rows(&[&[0, 1], &[1, 0]]));
        let x = GradedElement::basis_vector(&v, 0, 0);
        let y = f.apply(&x);
        assert_eq!(y.homogeneous_degree(), Some(1));
        assert_eq!(y.component(1, 2), vec![Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn element_arithmetic() {
        let v = space(&[(0, 2), (1, 1)]);
        let a = GradedElement::basis_vector(&v, 0, 0);
        let b = GradedElement::basis_vector(&v, 1, 0);
        let s = a.add(&b);
        assert_eq!(s.sub(&a), b);
        assert!(s.sub(&s).is_zero());
        assert_eq!(s.homogeneous_degree(), None);
    }
}

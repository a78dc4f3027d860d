//! The finite matrix groups of the verification: exact closure enumeration,
//! the quaternion group generated by A and B, the binary octahedral group
//! generated by tau and sigma with its quotient onto the symmetric group on
//! four letters, the sixteen-element stabilizer family, the extended
//! Heisenberg group of the Hesse pencil, and elements of the ambient group
//! G = G_R ⋉ U.

use crate::field::CycNum;
use crate::linalg::ExactMatrix;
use std::cmp::min;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    #[error("invalid triple: {0}")]
    InvalidTriple(&'static str),
    #[error("element is not a member of the group")]
    NotAMember,
}

/// What closure enumeration and group containers need from an element type.
pub trait GroupOps: Clone + Ord {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// The identity of the ambient group this element lives in.
    fn identity_like(&self) -> Self;
}

impl GroupOps for ExactMatrix {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        ExactMatrix::inverse(self).expect("group element must be invertible")
    }

    fn identity_like(&self) -> Self {
        ExactMatrix::identity(self.nrows())
    }
}

/// Smallest multiplicatively closed set containing the generators and the
/// identity, enumerated breadth-first so the order is deterministic.
pub fn closure<T: GroupOps>(generators: &[T], bound: usize) -> Result<Vec<T>, GroupError> {
    assert!(!generators.is_empty(), "closure needs at least one generator");
    assert!(bound >= 1);
    let id = generators[0].identity_like();
    let mut elements = vec![id.clone()];
    let mut seen: BTreeSet<T> = BTreeSet::new();
    seen.insert(id);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if elements.len() >= bound {
                    return Err(GroupError::BoundExceeded(bound));
                }
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// A finite group materialized as its full element list (identity first,
/// then breadth-first from the generators).
#[derive(Clone, Debug)]
pub struct FiniteGroup<T: GroupOps> {
    generators: Vec<T>,
    elements: Vec<T>,
    index: BTreeSet<T>,
}

impl<T: GroupOps> FiniteGroup<T> {
    pub fn generate(generators: &[T], bound: usize) -> Result<Self, GroupError> {
        let elements = closure(generators, bound)?;
        let index = elements.iter().cloned().collect();
        Ok(FiniteGroup { generators: generators.to_vec(), elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn generators(&self) -> &[T] {
        &self.generators
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains(x)
    }

    /// Identity membership, inverse closure, and product closure. Products
    /// are checked for all pairs up to order 100, and on a deterministic
    /// stride sample of pairs above that.
    pub fn verify_axioms(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let id = self.elements[0].identity_like();
        if !self.contains(&id) {
            return false;
        }
        if !self.elements.iter().all(|g| self.contains(&g.inverse())) {
            return false;
        }
        let step = if n <= 100 { 1 } else { n / 100 + 1 };
        for i in (0..n).step_by(step) {
            for j in (0..n).step_by(step) {
                if !self.contains(&self.elements[i].compose(&self.elements[j])) {
                    return false;
                }
            }
        }
        true
    }
}

fn mat2(e00: CycNum, e01: CycNum, e10: CycNum, e11: CycNum) -> ExactMatrix {
    ExactMatrix::from_rows(vec![vec![e00, e01], vec![e10, e11]])
}

/// A = diag(i, -i).
pub fn a_matrix() -> ExactMatrix {
    mat2(CycNum::i(), CycNum::zero(), CycNum::zero(), -CycNum::i())
}

/// B = (0 1; -1 0).
pub fn b_matrix() -> ExactMatrix {
    mat2(CycNum::zero(), CycNum::one(), -CycNum::one(), CycNum::zero())
}

/// tau = diag(theta^-1, theta) with theta a primitive eighth root of unity.
pub fn tau_matrix() -> ExactMatrix {
    mat2(CycNum::zeta_pow(-3), CycNum::zero(), CycNum::zero(), CycNum::theta())
}

/// sigma = (1/sqrt 2) (theta^3 theta^7; theta^5 theta^5).
pub fn sigma_matrix() -> ExactMatrix {
    let half_sqrt2 = CycNum::sqrt2() * CycNum::from_ratio(1, 2);
    mat2(
        CycNum::zeta_pow(9),
        CycNum::zeta_pow(21),
        CycNum::zeta_pow(15),
        CycNum::zeta_pow(15),
    )
    .scale(&half_sqrt2)
}

/// Cyclic coordinate shift of C^3.
pub fn hesse_translation() -> ExactMatrix {
    ExactMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])
}

/// diag(1, w, w^2) for w a primitive cube root of unity.
pub fn hesse_scaling() -> ExactMatrix {
    let w = CycNum::zeta3();
    let mut m = ExactMatrix::zeros(3, 3);
    m.set(0, 0, CycNum::one());
    m.set(1, 1, w.clone());
    m.set(2, 2, &w * &w);
    m
}

/// Swap of the last two coordinates of C^3.
pub fn hesse_swap() -> ExactMatrix {
    ExactMatrix::from_i64_rows(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]])
}

/// The order-8 quaternion group generated by A and B.
pub fn quaternion_group() -> FiniteGroup<ExactMatrix> {
    FiniteGroup::generate(&[a_matrix(), b_matrix()], 32).expect("A and B generate a finite group")
}

/// The order-48 binary octahedral group generated by tau and sigma.
pub fn binary_octahedral_group() -> FiniteGroup<ExactMatrix> {
    FiniteGroup::generate(&[tau_matrix(), sigma_matrix()], 128)
        .expect("tau and sigma generate a finite group")
}

/// The matrix group generated by the three Hesse-pencil symmetries. Its
/// order is 54 because the commutator of the shift and the scaling is the
/// scalar w * id; the associated group of projectivities has order 18.
pub fn extended_heisenberg_group() -> FiniteGroup<ExactMatrix> {
    FiniteGroup::generate(&[hesse_translation(), hesse_scaling(), hesse_swap()], 256)
        .expect("the Hesse symmetries generate a finite group")
}

/// Scale so the first nonzero entry (row-major) is 1: a canonical
/// representative of the projective class of an invertible matrix.
pub fn projective_canonical(m: &ExactMatrix) -> ExactMatrix {
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            let e = m.get(r, c);
            if !e.is_zero() {
                return m.scale(&e.inv().expect("nonzero entry"));
            }
        }
    }
    m.clone()
}

/// Deduplicate matrices up to scalar factors, keeping first-appearance order.
pub fn projective_classes(elements: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in elements {
        let c = projective_canonical(g);
        if seen.insert(c.clone()) {
            out.push(c);
        }
    }
    out
}

/// An element (a1, a2, a3) of GL2 x GL2 x GL2 with det(a2) det(a3) = 1,
/// i.e. the reductive group G_R acting on the filtered 32-dimensional space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TripleElement {
    a1: ExactMatrix,
    a2: ExactMatrix,
    a3: ExactMatrix,
}

impl TripleElement {
    pub fn new(
        a1: ExactMatrix,
        a2: ExactMatrix,
        a3: ExactMatrix,
    ) -> Result<Self, GroupError> {
        for m in [&a1, &a2, &a3] {
            if m.nrows() != 2 || m.ncols() != 2 {
                return Err(GroupError::InvalidTriple("components must be 2x2"));
            }
        }
        if a1.det().is_zero() {
            return Err(GroupError::InvalidTriple("first component must be invertible"));
        }
        if !(&a2.det() * &a3.det()).is_one() {
            return Err(GroupError::InvalidTriple("det(a2) * det(a3) must equal 1"));
        }
        Ok(TripleElement { a1, a2, a3 })
    }

    /// Skips the determinant constraint; for probes that deliberately lie
    /// outside the group.
    pub fn new_unchecked(a1: ExactMatrix, a2: ExactMatrix, a3: ExactMatrix) -> Self {
        TripleElement { a1, a2, a3 }
    }

    pub fn identity() -> Self {
        let id = ExactMatrix::identity(2);
        TripleElement { a1: id.clone(), a2: id.clone(), a3: id }
    }

    /// (m, m, m).
    pub fn diagonal(m: &ExactMatrix) -> Self {
        TripleElement { a1: m.clone(), a2: m.clone(), a3: m.clone() }
    }

    /// (id, m, id).
    pub fn slot2(m: &ExactMatrix) -> Self {
        let id = ExactMatrix::identity(2);
        TripleElement { a1: id.clone(), a2: m.clone(), a3: id }
    }

    /// (l, s, t) as scalar matrices.
    pub fn scalars(l: &CycNum, s: &CycNum, t: &CycNum) -> Self {
        let id = ExactMatrix::identity(2);
        TripleElement { a1: id.scale(l), a2: id.scale(s), a3: id.scale(t) }
    }

    pub fn a1(&self) -> &ExactMatrix {
        &self.a1
    }

    pub fn a2(&self) -> &ExactMatrix {
        &self.a2
    }

    pub fn a3(&self) -> &ExactMatrix {
        &self.a3
    }
}

impl GroupOps for TripleElement {
    fn compose(&self, other: &Self) -> Self {
        TripleElement {
            a1: self.a1.mul(&other.a1),
            a2: self.a2.mul(&other.a2),
            a3: self.a3.mul(&other.a3),
        }
    }

    fn inverse(&self) -> Self {
        TripleElement {
            a1: GroupOps::inverse(&self.a1),
            a2: GroupOps::inverse(&self.a2),
            a3: GroupOps::inverse(&self.a3),
        }
    }

    fn identity_like(&self) -> Self {
        TripleElement::identity()
    }
}

/// True iff x y^-1 is a central element (l id, +-m id, m^-1 id): all three
/// components scalar with the second-times-third scalar equal to +-1.
pub fn torus_equivalent(x: &TripleElement, y: &TripleElement) -> bool {
    let z = x.compose(&y.inverse());
    let (Some(l), Some(s), Some(t)) = (z.a1.as_scalar(), z.a2.as_scalar(), z.a3.as_scalar())
    else {
        return false;
    };
    if l.is_zero() || s.is_zero() || t.is_zero() {
        return false;
    }
    let st = &s * &t;
    st.is_one() || (-&st).is_one()
}

/// The sixteen triples (h, +-h, h), h in the quaternion group: the finite
/// part of the stabilizer of a general point in the 12-dimensional
/// representation with the symmetric square in the middle slot.
pub fn stabilizer_group_h() -> FiniteGroup<TripleElement> {
    let id = ExactMatrix::identity(2);
    let gens = vec![
        TripleElement::diagonal(&a_matrix()),
        TripleElement::diagonal(&b_matrix()),
        TripleElement::new_unchecked(id.clone(), id.neg(), id),
    ];
    FiniteGroup::generate(&gens, 64).expect("the stabilizer family is finite")
}

/// An element (r, u) of G = G_R ⋉ U with U = Hom(C^2, C^2) abelian. In the
/// 4x4 block picture the element is (a2 0; a3 u  a3) acting on the four
/// coordinates, with the last two coordinates spanning the distinguished
/// plane; accordingly the reductive part acts on the unipotent parameter by
/// u -> a3 u a2^-1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GElement {
    reductive: TripleElement,
    unipotent: ExactMatrix,
}

impl GElement {
    pub fn new(reductive: TripleElement, unipotent: ExactMatrix) -> Self {
        assert_eq!((unipotent.nrows(), unipotent.ncols()), (2, 2), "u must be 2x2");
        GElement { reductive, unipotent }
    }

    pub fn from_reductive(reductive: TripleElement) -> Self {
        GElement::new(reductive, ExactMatrix::zeros(2, 2))
    }

    pub fn from_unipotent(unipotent: ExactMatrix) -> Self {
        GElement::new(TripleElement::identity(), unipotent)
    }

    pub fn reductive(&self) -> &TripleElement {
        &self.reductive
    }

    pub fn unipotent(&self) -> &ExactMatrix {
        &self.unipotent
    }

    /// The action of the reductive part on the unipotent parameter.
    pub fn twist(r: &TripleElement, u: &ExactMatrix) -> ExactMatrix {
        r.a3().mul(u).mul(&GroupOps::inverse(r.a2()))
    }

    /// The 4x4 matrix (a2 0; a3 u  a3) this element acts by on coordinates,
    /// forgetting the first (pencil) component.
    pub fn embed_sl4(&self) -> ExactMatrix {
        let a2 = self.reductive.a2();
        let a3 = self.reductive.a3();
        let lower_left = a3.mul(&self.unipotent);
        let mut m = ExactMatrix::zeros(4, 4);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, a2.get(r, c).clone());
                m.set(2 + r, c, lower_left.get(r, c).clone());
                m.set(2 + r, 2 + c, a3.get(r, c).clone());
            }
        }
        m
    }
}

impl GroupOps for GElement {
    fn compose(&self, other: &Self) -> Self {
        let r = self.reductive.compose(&other.reductive);
        let other_rinv = other.reductive.inverse();
        let u = GElement::twist(&other_rinv, &self.unipotent).add(&other.unipotent);
        GElement { reductive: r, unipotent: u }
    }

    fn inverse(&self) -> Self {
        GElement {
            reductive: self.reductive.inverse(),
            unipotent: GElement::twist(&self.reductive, &self.unipotent).neg(),
        }
    }

    fn identity_like(&self) -> Self {
        GElement::from_reductive(TripleElement::identity())
    }
}

/// A permutation of {0, 1, 2, 3}, stored as the image list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Perm(pub [u8; 4]);

impl Perm {
    pub fn identity() -> Self {
        Perm([0, 1, 2, 3])
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::identity()
    }

    /// (self . other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
            self.0[other.0[3] as usize],
        ])
    }

    /// Cycle lengths in descending order, e.g. [2, 2] or [3, 1].
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut visited = [false; 4];
        let mut lengths = Vec::new();
        for start in 0..4 {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !visited[k] {
                visited[k] = true;
                len += 1;
                k = self.0[k] as usize;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn conjugacy_class(&self) -> ConjClass {
        match self.cycle_type().as_slice() {
            [1, 1, 1, 1] => ConjClass::Identity,
            [2, 1, 1] => ConjClass::Transposition,
            [2, 2] => ConjClass::DoubleTransposition,
            [3, 1] => ConjClass::ThreeCycle,
            [4] => ConjClass::FourCycle,
            other => unreachable!("impossible cycle type {other:?}"),
        }
    }
}

/// Conjugacy classes of the symmetric group on four letters, in the column
/// order of the character table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ConjClass {
    Identity,
    Transposition,
    DoubleTransposition,
    ThreeCycle,
    FourCycle,
}

impl ConjClass {
    pub fn all() -> [ConjClass; 5] {
        [
            ConjClass::Identity,
            ConjClass::Transposition,
            ConjClass::DoubleTransposition,
            ConjClass::ThreeCycle,
            ConjClass::FourCycle,
        ]
    }

    /// Column index in the character table.
    pub fn index(self) -> usize {
        match self {
            ConjClass::Identity => 0,
            ConjClass::Transposition => 1,
            ConjClass::DoubleTransposition => 2,
            ConjClass::ThreeCycle => 3,
            ConjClass::FourCycle => 4,
        }
    }

    pub fn size(self) -> u64 {
        [1, 6, 3, 8, 6][self.index()]
    }

    pub fn label(self) -> &'static str {
        ["1", "(ab)", "(ab)(cd)", "(abc)", "(abcd)"][self.index()]
    }
}

/// The binary octahedral group together with its two-to-one quotient onto
/// the symmetric group on four letters, realized by the conjugation action
/// on the four order-3 subgroups.
pub struct BinaryS4 {
    group: FiniteGroup<ExactMatrix>,
    /// Canonical generator (the smaller of the two non-identity elements)
    /// of each order-3 subgroup, sorted, so that labels 0..3 are canonical.
    sylow_generators: Vec<ExactMatrix>,
}

impl BinaryS4 {
    pub fn new() -> Self {
        let group = binary_octahedral_group();
        let mut keys = BTreeSet::new();
        for g in group.elements() {
            if !g.is_identity() && g.pow(3).is_identity() {
                keys.insert(min(g.clone(), g.mul(g)));
            }
        }
        let sylow_generators: Vec<ExactMatrix> = keys.into_iter().collect();
        assert_eq!(sylow_generators.len(), 4, "expected four order-3 subgroups");
        BinaryS4 { group, sylow_generators }
    }

    pub fn group(&self) -> &FiniteGroup<ExactMatrix> {
        &self.group
    }

    /// The image permutation under the two-to-one cover; the kernel is
    /// {id, -id}.
    pub fn quotient_to_s4(&self, x: &ExactMatrix) -> Result<Perm, GroupError> {
        if !self.group.contains(x) {
            return Err(GroupError::NotAMember);
        }
        let xinv = GroupOps::inverse(x);
        let mut images = [0u8; 4];
        for (k, g) in self.sylow_generators.iter().enumerate() {
            let conj = x.mul(g).mul(&xinv);
            let j = self
                .sylow_generators
                .iter()
                .position(|h| conj == *h || conj == h.mul(h))
                .expect("conjugation permutes the order-3 subgroups");
            images[k] = j as u8;
        }
        Ok(Perm(images))
    }

    pub fn class_of(&self, x: &ExactMatrix) -> Result<ConjClass, GroupError> {
        Ok(self.quotient_to_s4(x)?.conjugacy_class())
    }

    /// One matrix lift per conjugacy class, in table order; each is the
    /// first element of the enumeration mapping into its class.
    pub fn lifted_class_representatives(&self) -> Vec<(ConjClass, ExactMatrix)> {
        let mut found: Vec<Option<ExactMatrix>> = vec![None; 5];
        for g in self.group.elements() {
            let c = self.quotient_to_s4(g).expect("member").conjugacy_class();
            let slot = &mut found[c.index()];
            if slot.is_none() {
                *slot = Some(g.clone());
            }
        }
        ConjClass::all()
            .iter()
            .map(|c| (*c, found[c.index()].clone().expect("the quotient is onto")))
            .collect()
    }
}

impl Default for BinaryS4 {
    fn default() -> Self {
        BinaryS4::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn quaternion_group_has_order_8() {
        let h = quaternion_group();
        assert_eq!(h.order(), 8);
        assert!(h.verify_axioms());
    }

    #[test]
    fn quaternion_commutator_subgroup_is_plus_minus_identity() {
        let h = quaternion_group();
        let mut commutators = BTreeSet::new();
        for g in h.elements() {
            for k in h.elements() {
                let c = g
                    .mul(k)
                    .mul(&GroupOps::inverse(g))
                    .mul(&GroupOps::inverse(k));
                commutators.insert(c);
            }
        }
        let id = ExactMatrix::identity(2);
        let expected: BTreeSet<ExactMatrix> = [id.clone(), id.neg()].into_iter().collect();
        assert_eq!(commutators, expected);
    }

    #[test]
    fn binary_octahedral_group_has_order_48() {
        let s = binary_octahedral_group();
        assert_eq!(s.order(), 48);
        assert!(s.verify_axioms());
        assert!(s.contains(&a_matrix()));
        assert!(s.contains(&b_matrix()));
    }

    #[test]
    fn generator_orders() {
        let tau = tau_matrix();
        let sigma = sigma_matrix();
        assert!(sigma.det().is_one());
        assert!(tau.det().is_one());
        assert!(tau.pow(4) == ExactMatrix::identity(2).neg());
        assert!(tau.pow(8).is_identity());
        assert!(!tau.pow(4).is_identity());
        assert!(sigma.pow(3).is_identity());
        assert!(!sigma.is_identity());
        // tau^2 = -A links the two generator sets.
        assert_eq!(tau.pow(2), a_matrix().neg());
    }

    #[test]
    fn trace_distribution_of_the_48_elements() {
        let s = binary_octahedral_group();
        let mut counts: BTreeMap<CycNum, usize> = BTreeMap::new();
        for g in s.elements() {
            *counts.entry(g.trace()).or_insert(0) += 1;
        }
        let two = CycNum::from_int(2);
        let one = CycNum::one();
        let zero = CycNum::zero();
        let root2 = CycNum::sqrt2();
        assert_eq!(counts[&two], 1);
        assert_eq!(counts[&-&two], 1);
        assert_eq!(counts[&zero], 18);
        assert_eq!(counts[&one], 8);
        assert_eq!(counts[&-&one], 8);
        assert_eq!(counts[&root2], 6);
        assert_eq!(counts[&-&root2], 6);
        assert_eq!(counts.len(), 7);
    }

    #[test]
    fn quotient_classifies_the_generators() {
        let cover = BinaryS4::new();
        let id = ExactMatrix::identity(2);
        assert!(cover.quotient_to_s4(&id).unwrap().is_identity());
        assert!(cover.quotient_to_s4(&id.neg()).unwrap().is_identity());
        assert_eq!(cover.class_of(&tau_matrix()).unwrap(), ConjClass::FourCycle);
        assert_eq!(cover.class_of(&sigma_matrix()).unwrap(), ConjClass::ThreeCycle);
        assert_eq!(
            cover.class_of(&a_matrix()).unwrap(),
            ConjClass::DoubleTransposition
        );
        assert_eq!(
            cover.class_of(&b_matrix()).unwrap(),
            ConjClass::DoubleTransposition
        );
        let outside = ExactMatrix::from_rows(vec![
            vec![CycNum::from_int(2), CycNum::zero()],
            vec![CycNum::zero(), CycNum::from_ratio(1, 2)],
        ]);
        assert_eq!(cover.quotient_to_s4(&outside), Err(GroupError::NotAMember));
    }

    #[test]
    fn quotient_is_a_homomorphism_onto_s4() {
        let cover = BinaryS4::new();
        let elements = cover.group().elements().to_vec();
        // Homomorphism on a deterministic sample of pairs.
        for i in (0..elements.len()).step_by(5) {
            for j in (0..elements.len()).step_by(7) {
                let p = cover.quotient_to_s4(&elements[i]).unwrap();
                let q = cover.quotient_to_s4(&elements[j]).unwrap();
                let pq = cover.quotient_to_s4(&elements[i].mul(&elements[j])).unwrap();
                assert_eq!(p.compose(&q), pq);
            }
        }
        // Image has order 24 with the class sizes of the character table,
        // and each permutation has exactly the two lifts +-x.
        let mut image = BTreeSet::new();
        let mut class_counts: BTreeMap<ConjClass, usize> = BTreeMap::new();
        for g in &elements {
            let p = cover.quotient_to_s4(g).unwrap();
            if image.insert(p) {
                *class_counts.entry(p.conjugacy_class()).or_insert(0) += 1;
            }
        }
        assert_eq!(image.len(), 24);
        for class in ConjClass::all() {
            assert_eq!(class_counts[&class] as u64, class.size());
        }
    }

    #[test]
    fn quaternion_image_is_the_klein_four_group() {
        let cover = BinaryS4::new();
        let mut image = BTreeSet::new();
        for h in quaternion_group().elements() {
            image.insert(cover.quotient_to_s4(h).unwrap());
        }
        assert_eq!(image.len(), 4);
        for p in &image {
            assert!(
                p.is_identity() || p.conjugacy_class() == ConjClass::DoubleTransposition
            );
        }
    }

    #[test]
    fn lifted_class_representatives_cover_all_classes() {
        let cover = BinaryS4::new();
        let reps = cover.lifted_class_representatives();
        assert_eq!(reps.len(), 5);
        for (class, lift) in &reps {
            assert_eq!(cover.class_of(lift).unwrap(), *class);
        }
        assert_eq!(reps[0].1, ExactMatrix::identity(2));
    }

    #[test]
    fn stabilizer_family_has_order_16() {
        let h = stabilizer_group_h();
        assert_eq!(h.order(), 16);
        assert!(h.verify_axioms());
        let a = a_matrix();
        let b = b_matrix();
        assert!(h.contains(&TripleElement::diagonal(&a)));
        assert!(h.contains(&TripleElement::diagonal(&b)));
        assert!(h.contains(&TripleElement::new_unchecked(a.clone(), a.neg(), a)));
        // Every element is (h0, +-h0, h0) with h0 in the quaternion group.
        let quat = quaternion_group();
        for t in h.elements() {
            assert_eq!(t.a1(), t.a3());
            assert!(quat.contains(t.a1()));
            assert!(*t.a2() == t.a1().clone() || *t.a2() == t.a1().neg());
        }
    }

    #[test]
    fn triple_validation() {
        let id = ExactMatrix::identity(2);
        let two = id.scale(&CycNum::from_int(2));
        let three = id.scale(&CycNum::from_int(3));
        let third = id.scale(&CycNum::from_ratio(1, 3));
        assert!(TripleElement::new(id.clone(), two.clone(), three.clone()).is_err());
        assert!(TripleElement::new(two.clone(), three.clone(), third.clone()).is_ok());
        assert!(TripleElement::new(ExactMatrix::zeros(2, 2), id.clone(), id.clone()).is_err());
    }

    #[test]
    fn torus_equivalence_matches_the_center_pattern() {
        let id = ExactMatrix::identity(2);
        let x = TripleElement::identity();
        assert!(torus_equivalent(&x, &x));
        let y = TripleElement::scalars(
            &CycNum::from_int(2),
            &CycNum::from_int(3),
            &CycNum::from_ratio(1, 3),
        );
        assert!(torus_equivalent(&x, &y));
        let z = TripleElement::new_unchecked(
            id.clone(),
            id.scale(&CycNum::from_int(2)),
            id.scale(&CycNum::from_int(3)),
        );
        assert!(!torus_equivalent(&x, &z));
        // The sign freedom in the middle slot is part of the pattern.
        let w = TripleElement::scalars(&CycNum::one(), &-CycNum::from_int(5), &CycNum::from_ratio(1, 5));
        assert!(torus_equivalent(&x, &w));
        // Non-scalar quotients are never equivalent.
        let t = TripleElement::diagonal(&tau_matrix());
        assert!(!torus_equivalent(&x, &t));
    }

    #[test]
    fn product_of_diagonal_and_slot2_groups_has_order_384() {
        let gens = vec![
            TripleElement::diagonal(&tau_matrix()),
            TripleElement::diagonal(&sigma_matrix()),
            TripleElement::slot2(&a_matrix()),
            TripleElement::slot2(&b_matrix()),
        ];
        let g = FiniteGroup::generate(&gens, 1024).unwrap();
        assert_eq!(g.order(), 384);
        // Overlap of the two generating subgroups is only the identity.
        let diag: BTreeSet<TripleElement> = binary_octahedral_group()
            .elements()
            .iter()
            .map(TripleElement::diagonal)
            .collect();
        let slot: BTreeSet<TripleElement> =
            quaternion_group().elements().iter().map(TripleElement::slot2).collect();
        let overlap: Vec<_> = diag.intersection(&slot).collect();
        assert_eq!(overlap.len(), 1);
        assert_eq!(48 * 8 / overlap.len(), g.order());
        // Every element has the shape (x, x y, x).
        let quat = quaternion_group();
        let oct = binary_octahedral_group();
        for t in g.elements() {
            assert!(oct.contains(t.a1()));
            assert_eq!(t.a1(), t.a3());
            let y = GroupOps::inverse(t.a1()).mul(t.a2());
            assert!(quat.contains(&y));
        }
    }

    #[test]
    fn closure_reports_unbounded_growth() {
        let two = ExactMatrix::identity(2).scale(&CycNum::from_int(2));
        assert_eq!(closure(&[two], 10), Err(GroupError::BoundExceeded(10)));
    }

    #[test]
    fn semidirect_law_matches_the_block_matrix_picture() {
        let u1 = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        let u2 = ExactMatrix::from_i64_rows(&[&[0, 1], &[-1, 1]]);
        let g1 = GElement::new(TripleElement::diagonal(&tau_matrix()), u1);
        let g2 = GElement::new(TripleElement::slot2(&b_matrix()), u2);
        let g3 = GElement::new(
            TripleElement::new_unchecked(a_matrix(), sigma_matrix(), sigma_matrix()),
            ExactMatrix::from_i64_rows(&[&[2, 0], &[0, -1]]),
        );
        for x in [&g1, &g2, &g3] {
            for y in [&g1, &g2, &g3] {
                assert_eq!(
                    x.compose(y).embed_sl4(),
                    x.embed_sl4().mul(&y.embed_sl4())
                );
            }
            assert_eq!(
                x.compose(&x.inverse()),
                GElement::from_reductive(TripleElement::identity())
            );
            assert_eq!(
                x.inverse().compose(x),
                GElement::from_reductive(TripleElement::identity())
            );
        }
        // Associativity on a fixed triple.
        assert_eq!(g1.compose(&g2).compose(&g3), g1.compose(&g2.compose(&g3)));
    }

    #[test]
    fn hesse_group_orders() {
        let h = extended_heisenberg_group();
        assert_eq!(h.order(), 54);
        assert!(h.verify_axioms());
        let classes = projective_classes(h.elements());
        assert_eq!(classes.len(), 18);
        // The commutator of the shift and the scaling is the scalar w id.
        let p = hesse_translation();
        let d = hesse_scaling();
        let comm = p
            .mul(&d)
            .mul(&GroupOps::inverse(&p))
            .mul(&GroupOps::inverse(&d));
        assert_eq!(
            comm,
            ExactMatrix::identity(3).scale(&CycNum::zeta3())
        );
    }
}

//! Representations of the triple group and of the full semidirect-product
//! group on the 32-dimensional filtered space: symmetric powers, tensor
//! products, Hom spaces, infinitesimal actions of the Lie algebra,
//! characters with their decomposition into irreducibles of the symmetric
//! group on four letters, and invariant subspaces.

use crate::field::CycNum;
use crate::groups::{BinaryS4, ConjClass, GElement, GroupOps, TripleElement};
use crate::linalg::{ExactMatrix, Subspace};
use num::ToPrimitive;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("the class function is not a nonnegative integer combination of the irreducible characters")]
    NotACharacter,
    #[error("minus the identity acts nontrivially, so the action has no character on the quotient group")]
    SignActsNontrivially,
    #[error("invariant splitting check failed: {0}")]
    SplittingFailed(&'static str),
}

/// The three tensor slots of the triple group: slot one is the
/// two-dimensional space the first component acts on, slot two the first
/// coordinate pair, slot three the distinguished plane (last pair).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Slot {
    One,
    Two,
    Three,
}

impl Slot {
    fn component<'a>(self, t: &'a TripleElement) -> &'a ExactMatrix {
        match self {
            Slot::One => t.a1(),
            Slot::Two => t.a2(),
            Slot::Three => t.a3(),
        }
    }

    fn lie_component<'a>(self, x: &'a LieElement) -> &'a ExactMatrix {
        match self {
            Slot::One => &x.x1,
            Slot::Two => &x.x2,
            Slot::Three => &x.x3,
        }
    }
}

/// An element (x1, x2, x3, u) of the Lie algebra of the full group: three
/// 2x2 blocks for the reductive part and the unipotent parameter u.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LieElement {
    pub x1: ExactMatrix,
    pub x2: ExactMatrix,
    pub x3: ExactMatrix,
    pub u: ExactMatrix,
}

fn comm(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.mul(b).sub(&b.mul(a))
}

impl LieElement {
    pub fn new(x1: ExactMatrix, x2: ExactMatrix, x3: ExactMatrix, u: ExactMatrix) -> Self {
        for m in [&x1, &x2, &x3, &u] {
            assert_eq!((m.nrows(), m.ncols()), (2, 2), "components must be 2x2");
        }
        LieElement { x1, x2, x3, u }
    }

    pub fn zero() -> Self {
        let z = ExactMatrix::zeros(2, 2);
        LieElement { x1: z.clone(), x2: z.clone(), x3: z.clone(), u: z }
    }

    pub fn reductive(x1: ExactMatrix, x2: ExactMatrix, x3: ExactMatrix) -> Self {
        LieElement::new(x1, x2, x3, ExactMatrix::zeros(2, 2))
    }

    pub fn unipotent(u: ExactMatrix) -> Self {
        let z = ExactMatrix::zeros(2, 2);
        LieElement::new(z.clone(), z.clone(), z, u)
    }

    /// Derivative of the twist r.u = a3 u a2^-1 in the reductive direction:
    /// v -> x3 v - v x2.
    pub fn twist_dot(&self, v: &ExactMatrix) -> ExactMatrix {
        self.x3.mul(v).sub(&v.mul(&self.x2))
    }

    /// Componentwise commutators, plus the semidirect term on u.
    pub fn bracket(&self, other: &Self) -> Self {
        LieElement {
            x1: comm(&self.x1, &other.x1),
            x2: comm(&self.x2, &other.x2),
            x3: comm(&self.x3, &other.x3),
            u: self.twist_dot(&other.u).sub(&other.twist_dot(&self.u)),
        }
    }

    /// The 4x4 block matrix (x2 0; u x3), the Lie algebra counterpart of
    /// the group embedding.
    pub fn embed_sl4(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(4, 4);
        for r in 0..2 {
            for c in 0..2 {
                m.set(r, c, self.x2.get(r, c).clone());
                m.set(2 + r, c, self.u.get(r, c).clone());
                m.set(2 + r, 2 + c, self.x3.get(r, c).clone());
            }
        }
        m
    }
}

fn unit2(r: usize, c: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(2, 2);
    m.set(r, c, CycNum::one());
    m
}

fn sl2_h() -> ExactMatrix {
    ExactMatrix::from_i64_rows(&[&[1, 0], &[0, -1]])
}

/// Basis of the Lie algebra of the reductive group: the four matrix units
/// of the first component, the standard sl2 triples (h, e, f) of the second
/// and third components, and the trace coupling (0, id, -id). Eleven
/// elements.
pub fn lie_gr_basis() -> Vec<LieElement> {
    let z = ExactMatrix::zeros(2, 2);
    let mut out = Vec::new();
    for (r, c) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        out.push(LieElement::reductive(unit2(r, c), z.clone(), z.clone()));
    }
    for m in [sl2_h(), unit2(0, 1), unit2(1, 0)] {
        out.push(LieElement::reductive(z.clone(), m, z.clone()));
    }
    for m in [sl2_h(), unit2(0, 1), unit2(1, 0)] {
        out.push(LieElement::reductive(z.clone(), z.clone(), m));
    }
    let id = ExactMatrix::identity(2);
    out.push(LieElement::reductive(z, id.clone(), id.neg()));
    out
}

/// Basis of the unipotent directions: the four matrix units of u.
pub fn lie_u_basis() -> Vec<LieElement> {
    [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .map(|(r, c)| LieElement::unipotent(unit2(r, c)))
        .collect()
}

/// Basis of the Lie algebra of the full group: the reductive basis
/// followed by the unipotent one. Fifteen elements.
pub fn lie_g_basis() -> Vec<LieElement> {
    let mut out = lie_gr_basis();
    out.extend(lie_u_basis());
    out
}

/// Basis of the Lie algebra of the two-parameter central torus
/// (l id, m id, m^-1 id): the directions (id, 0, 0) and (0, id, -id).
pub fn lie_center_basis() -> Vec<LieElement> {
    let z = ExactMatrix::zeros(2, 2);
    let id = ExactMatrix::identity(2);
    vec![
        LieElement::reductive(id.clone(), z.clone(), z.clone()),
        LieElement::reductive(z, id.clone(), id.neg()),
    ]
}

/// Convolution of coefficient lists of homogeneous binary forms indexed by
/// the degree in the second variable.
fn conv(a: &[CycNum], b: &[CycNum]) -> Vec<CycNum> {
    let mut out = vec![CycNum::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += &(ai * bj);
        }
    }
    out
}

/// Matrix of the induced action on the k-th symmetric power of the plane,
/// in the monomial basis x^k, x^(k-1) y, ..., y^k, where the generator
/// sends the basis vector x to g00 x + g10 y and y to g01 x + g11 y.
fn sym_matrix(g: &ExactMatrix, k: usize) -> ExactMatrix {
    let gx = [g.get(0, 0).clone(), g.get(1, 0).clone()];
    let gy = [g.get(0, 1).clone(), g.get(1, 1).clone()];
    let mut out = ExactMatrix::zeros(k + 1, k + 1);
    for j in 0..=k {
        let mut poly = vec![CycNum::one()];
        for _ in 0..(k - j) {
            poly = conv(&poly, &gx);
        }
        for _ in 0..j {
            poly = conv(&poly, &gy);
        }
        for (r, c) in poly.into_iter().enumerate() {
            out.set(r, j, c);
        }
    }
    out
}

/// Derivation induced on the k-th symmetric power by a 2x2 Lie algebra
/// element, in the same monomial basis.
fn sym_inf_matrix(x: &ExactMatrix, k: usize) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(k + 1, k + 1);
    for j in 0..=k {
        let a = (k - j) as i64;
        let b = j as i64;
        let diag = &(&CycNum::from_int(a) * x.get(0, 0)) + &(&CycNum::from_int(b) * x.get(1, 1));
        out.set(j, j, diag);
        if a > 0 {
            out.set(j + 1, j, &CycNum::from_int(a) * x.get(1, 0));
        }
        if b > 0 {
            out.set(j - 1, j, &CycNum::from_int(b) * x.get(0, 1));
        }
    }
    out
}

/// A finite-dimensional representation of the triple group, assembled from
/// standard pieces. The unipotent part of the full group acts trivially on
/// all of these.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rep {
    /// The one-dimensional trivial representation.
    Trivial,
    /// The two-dimensional standard representation of one slot.
    Std(Slot),
    /// The k-th symmetric power of the standard representation of a slot.
    Sym(usize, Slot),
    /// Tensor product of factors, basis ordered with the leftmost factor
    /// most significant.
    Tensor(Vec<Rep>),
    /// 2x2 matrices M with action M -> a_to M a_from^-1, basis the matrix
    /// units in row-major order.
    Hom(Slot, Slot),
    /// Direct sum, basis the concatenation of the summand bases.
    DirectSum(Vec<Rep>),
}

impl Rep {
    pub fn dim(&self) -> usize {
        match self {
            Rep::Trivial => 1,
            Rep::Std(_) => 2,
            Rep::Sym(k, _) => k + 1,
            Rep::Tensor(fs) => fs.iter().map(Rep::dim).product(),
            Rep::Hom(_, _) => 4,
            Rep::DirectSum(fs) => fs.iter().map(Rep::dim).sum(),
        }
    }

    /// The matrix of a group element, columns the images of basis vectors.
    pub fn act(&self, t: &TripleElement) -> ExactMatrix {
        match self {
            Rep::Trivial => ExactMatrix::identity(1),
            Rep::Std(s) => s.component(t).clone(),
            Rep::Sym(k, s) => sym_matrix(s.component(t), *k),
            Rep::Tensor(fs) => fs
                .iter()
                .map(|f| f.act(t))
                .reduce(|acc, m| acc.kronecker(&m))
                .expect("tensor product needs at least one factor"),
            Rep::Hom(from, to) => {
                let s_inv = GroupOps::inverse(from.component(t));
                to.component(t).kronecker(&s_inv.transpose())
            }
            Rep::DirectSum(fs) => {
                let blocks: Vec<ExactMatrix> = fs.iter().map(|f| f.act(t)).collect();
                ExactMatrix::block_diag(&blocks.iter().collect::<Vec<_>>())
            }
        }
    }

    /// The matrix of a Lie algebra element, acting by derivations.
    pub fn inf_act(&self, x: &LieElement) -> ExactMatrix {
        match self {
            Rep::Trivial => ExactMatrix::zeros(1, 1),
            Rep::Std(s) => s.lie_component(x).clone(),
            Rep::Sym(k, s) => sym_inf_matrix(s.lie_component(x), *k),
            Rep::Tensor(fs) => {
                let dims: Vec<usize> = fs.iter().map(Rep::dim).collect();
                let total: usize = dims.iter().product();
                let mut out = ExactMatrix::zeros(total, total);
                for (i, f) in fs.iter().enumerate() {
                    let before: usize = dims[..i].iter().product();
                    let after: usize = dims[i + 1..].iter().product();
                    let term = ExactMatrix::identity(before)
                        .kronecker(&f.inf_act(x))
                        .kronecker(&ExactMatrix::identity(after));
                    out = out.add(&term);
                }
                out
            }
            Rep::Hom(from, to) => {
                let id = ExactMatrix::identity(2);
                to.lie_component(x)
                    .kronecker(&id)
                    .sub(&id.kronecker(&from.lie_component(x).transpose()))
            }
            Rep::DirectSum(fs) => {
                let blocks: Vec<ExactMatrix> = fs.iter().map(|f| f.inf_act(x)).collect();
                ExactMatrix::block_diag(&blocks.iter().collect::<Vec<_>>())
            }
        }
    }

    pub fn labels(&self) -> Vec<String> {
        match self {
            Rep::Trivial => vec!["1".into()],
            Rep::Std(_) => vec!["x".into(), "y".into()],
            Rep::Sym(k, _) => (0..=*k)
                .map(|j| {
                    let s = format!("{}{}", var_label("x", k - j), var_label("y", j));
                    if s.is_empty() {
                        "1".into()
                    } else {
                        s
                    }
                })
                .collect(),
            Rep::Tensor(fs) => fs
                .iter()
                .map(Rep::labels)
                .reduce(|acc, next| {
                    acc.iter()
                        .flat_map(|a| next.iter().map(move |b| format!("{a}⊗{b}")))
                        .collect()
                })
                .expect("tensor product needs at least one factor"),
            Rep::Hom(_, _) => vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            Rep::DirectSum(fs) => fs.iter().flat_map(|f| f.labels()).collect(),
        }
    }
}

fn var_label(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        2 => format!("{var}²"),
        3 => format!("{var}³"),
        _ => format!("{var}^{e}"),
    }
}

/// The representation of the triple group on the grade-d piece of the
/// 32-dimensional filtered space, where the grade is the degree in the
/// first coordinate pair: grade 3 is plane ⊗ Sym3(slot two), grade 2 is
/// plane ⊗ Sym2(slot two) ⊗ slot three, grade 1 is plane ⊗ slot two ⊗
/// Sym2(slot three). In graded coordinates the diagonal blocks of the
/// 32-dimensional action are literally these Kronecker matrices.
pub fn graded_piece(d: usize) -> Rep {
    match d {
        3 => Rep::Tensor(vec![Rep::Std(Slot::One), Rep::Sym(3, Slot::Two)]),
        2 => Rep::Tensor(vec![
            Rep::Std(Slot::One),
            Rep::Sym(2, Slot::Two),
            Rep::Std(Slot::Three),
        ]),
        1 => Rep::Tensor(vec![
            Rep::Std(Slot::One),
            Rep::Std(Slot::Two),
            Rep::Sym(2, Slot::Three),
        ]),
        other => panic!("no graded piece of grade {other}"),
    }
}

/// The character table of the symmetric group on four letters. Rows are
/// irreducible characters, columns the classes in the order identity,
/// transposition, double transposition, three-cycle, four-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S4CharacterTable {
    rows: [[i64; 5]; 5],
    names: [&'static str; 5],
}

impl S4CharacterTable {
    pub fn standard() -> Self {
        S4CharacterTable {
            rows: [
                [1, 1, 1, 1, 1],
                [1, -1, 1, 1, -1],
                [2, 0, 2, -1, 0],
                [3, 1, -1, 0, -1],
                [3, -1, -1, 0, 1],
            ],
            names: ["triv", "sgn", "two", "std", "sgn·std"],
        }
    }

    /// A table with custom rows (for probing the checks with corrupted
    /// data); row names are kept from the standard table.
    pub fn with_rows(rows: [[i64; 5]; 5]) -> Self {
        S4CharacterTable { rows, names: Self::standard().names }
    }

    pub fn rows(&self) -> &[[i64; 5]; 5] {
        &self.rows
    }

    pub fn names(&self) -> &[&'static str; 5] {
        &self.names
    }

    /// First orthogonality: sum over classes of size * chi_i * chi_j must
    /// equal the group order exactly when i = j, and zero otherwise.
    pub fn is_orthonormal(&self) -> bool {
        let sizes = ConjClass::all().map(|c| c.size() as i64);
        for i in 0..5 {
            for j in 0..5 {
                let s: i64 = (0..5).map(|c| sizes[c] * self.rows[i][c] * self.rows[j][c]).sum();
                if s != if i == j { 24 } else { 0 } {
                    return false;
                }
            }
        }
        true
    }

    /// Multiplicities of the irreducible characters in a class function,
    /// or an error when any projection is not a nonnegative integer or the
    /// projections do not reproduce the input exactly.
    pub fn decompose(&self, ch: &[CycNum]) -> Result<[u64; 5], RepError> {
        assert_eq!(ch.len(), 5, "a class function has five values");
        let sizes = ConjClass::all().map(|c| c.size() as i64);
        let mut mults = [0u64; 5];
        for i in 0..5 {
            let mut acc = CycNum::zero();
            for c in 0..5 {
                acc += &(&CycNum::from_int(sizes[c] * self.rows[i][c]) * &ch[c]);
            }
            let m = &acc * &CycNum::from_ratio(1, 24);
            let int = m.as_integer().ok_or(RepError::NotACharacter)?;
            mults[i] = int.to_u64().ok_or(RepError::NotACharacter)?;
        }
        for c in 0..5 {
            let mut acc: i64 = 0;
            for i in 0..5 {
                acc += mults[i] as i64 * self.rows[i][c];
            }
            if ch[c] != CycNum::from_int(acc) {
                return Err(RepError::NotACharacter);
            }
        }
        Ok(mults)
    }
}

/// The action matrices of one lift per conjugacy class, acting diagonally,
/// in table class order. Errors when minus the identity acts nontrivially,
/// since then traces are not class functions of the quotient group.
pub fn class_actions(rep: &Rep, cover: &BinaryS4) -> Result<Vec<ExactMatrix>, RepError> {
    let minus = TripleElement::diagonal(&ExactMatrix::identity(2).neg());
    if !rep.act(&minus).is_identity() {
        return Err(RepError::SignActsNontrivially);
    }
    Ok(cover
        .lifted_class_representatives()
        .iter()
        .map(|(_, g)| rep.act(&TripleElement::diagonal(g)))
        .collect())
}

/// Traces of the given class actions, in table class order.
pub fn character_values(actions: &[ExactMatrix]) -> Vec<CycNum> {
    actions.iter().map(ExactMatrix::trace).collect()
}

/// The character of a representation on the quotient symmetric group.
pub fn character(rep: &Rep, cover: &BinaryS4) -> Result<Vec<CycNum>, RepError> {
    Ok(character_values(&class_actions(rep, cover)?))
}

/// The joint fixed space of a family of action matrices.
pub fn invariant_subspace(actions: &[ExactMatrix]) -> Subspace {
    assert!(!actions.is_empty(), "need at least one action");
    let n = actions[0].nrows();
    let diffs: Vec<ExactMatrix> = actions
        .iter()
        .map(|m| {
            assert_eq!((m.nrows(), m.ncols()), (n, n));
            m.sub(&ExactMatrix::identity(n))
        })
        .collect();
    ExactMatrix::vstack(&diffs.iter().collect::<Vec<_>>()).kernel()
}

/// The matrix of an operator restricted to an invariant subspace, in the
/// subspace basis; None when the subspace is not actually invariant.
pub fn restrict_action(m: &ExactMatrix, s: &Subspace) -> Option<ExactMatrix> {
    let b = s.basis_matrix();
    let mb = m.mul(&b);
    let d = s.dim();
    let mut out = ExactMatrix::zeros(d, d);
    for j in 0..d {
        let c = b.solve_unique(&mb.col(j)).ok()?;
        for (i, v) in c.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Some(out)
}

/// The two complementary invariant subspaces of the grade-1 piece.
pub struct InvariantSplitting {
    /// Kernel of multiplication (slot one times symmetric square of slot
    /// three into cubes), dimension 4.
    pub small: Subspace,
    /// Kernel of symplectic contraction of slot one into the symmetric
    /// square of slot three, dimension 8.
    pub large: Subspace,
}

/// Split the twelve-dimensional grade-1 piece into the kernels of the
/// equivariant multiplication and contraction maps that couple the first
/// slot with the symmetric square in the third, the second slot being a
/// spectator. Checks dimensions 4 and 8, zero intersection, and stability
/// under generators of the relevant normalizer together with central
/// samples.
pub fn check_invariant_splitting() -> Result<InvariantSplitting, RepError> {
    let rep = graded_piece(1);
    let mut mult = ExactMatrix::zeros(8, 12);
    let mut contr = ExactMatrix::zeros(4, 12);
    for a in 0..2usize {
        for j in 0..2usize {
            for w in 0..3usize {
                let col = a * 6 + j * 3 + w;
                // x^(1-a) y^a * x^(2-w) y^w lands in degree three with
                // second-variable degree a + w.
                mult.set((a + w) * 2 + j, col, CycNum::one());
                // Contraction with the symplectic form, om(x, y) = 1:
                // c(v ⊗ w w') = om(v, w) w' + om(v, w') w.
                let pairs: &[(usize, i64)] = match (a, w) {
                    (0, 0) | (1, 2) => &[],
                    (0, 1) => &[(0, 1)],
                    (0, 2) => &[(1, 2)],
                    (1, 0) => &[(0, -2)],
                    (1, 1) => &[(1, -1)],
                    _ => unreachable!(),
                };
                for (t, v) in pairs {
                    contr.set(t * 2 + j, col, CycNum::from_int(*v));
                }
            }
        }
    }
    let small = mult.kernel();
    let large = contr.kernel();
    if small.dim() != 4 {
        return Err(RepError::SplittingFailed("multiplication kernel is not 4-dimensional"));
    }
    if large.dim() != 8 {
        return Err(RepError::SplittingFailed("contraction kernel is not 8-dimensional"));
    }
    if small.intersection_dim(&large) != 0 {
        return Err(RepError::SplittingFailed("the two kernels overlap"));
    }
    let probes = [
        TripleElement::diagonal(&crate::groups::tau_matrix()),
        TripleElement::diagonal(&crate::groups::sigma_matrix()),
        TripleElement::slot2(&crate::groups::a_matrix()),
        TripleElement::slot2(&crate::groups::b_matrix()),
        TripleElement::scalars(
            &CycNum::from_int(2),
            &CycNum::from_int(3),
            &CycNum::from_ratio(1, 3),
        ),
        TripleElement::scalars(
            &CycNum::one(),
            &-CycNum::from_int(5),
            &CycNum::from_ratio(1, 5),
        ),
    ];
    for t in &probes {
        let act = rep.act(t);
        if restrict_action(&act, &small).is_none() {
            return Err(RepError::SplittingFailed("multiplication kernel is not stable"));
        }
        if restrict_action(&act, &large).is_none() {
            return Err(RepError::SplittingFailed("contraction kernel is not stable"));
        }
    }
    Ok(InvariantSplitting { small, large })
}

/// The 32-dimensional representation of the full semidirect-product group
/// on pairs (pencil vector, cubic form in four coordinates) modulo cubes
/// in the distinguished plane. The basis is graded by the degree d in the
/// first coordinate pair, ordered d = 3, 2, 1, within a grade by pencil
/// index then by exponent tuple, lexicographically descending.
pub struct RepR {
    basis: Vec<(usize, [u8; 4])>,
    index: BTreeMap<(usize, [u8; 4]), usize>,
}

impl RepR {
    pub fn new() -> Self {
        let mut basis = Vec::new();
        for d in [3usize, 2, 1] {
            for a in 0..2usize {
                for p in (0..=d).rev() {
                    let q = d - p;
                    for r in (0..=(3 - d)).rev() {
                        let s = 3 - d - r;
                        basis.push((a, [p as u8, q as u8, r as u8, s as u8]));
                    }
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        RepR { basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Row range of the grade-d block: grade 3 is 0..8, grade 2 is 8..20,
    /// grade 1 is 20..32.
    pub fn grade_range(d: usize) -> std::ops::Range<usize> {
        match d {
            3 => 0..8,
            2 => 8..20,
            1 => 20..32,
            other => panic!("no grade {other}"),
        }
    }

    pub fn basis(&self) -> &[(usize, [u8; 4])] {
        &self.basis
    }

    pub fn index_of(&self, pencil: usize, exps: [u8; 4]) -> Option<usize> {
        self.index.get(&(pencil, exps)).copied()
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|(a, exps)| {
                let mut s = format!("e{}⊗", a + 1);
                for (i, e) in exps.iter().enumerate() {
                    s.push_str(&var_label(&format!("x{i}"), *e as usize));
                }
                s
            })
            .collect()
    }

    /// The matrix of a group element: the first component acts on the
    /// pencil vector, the 4x4 embedding substitutes coordinates, and
    /// monomials of degree zero in the first pair are discarded.
    pub fn act(&self, g: &GElement) -> ExactMatrix {
        let m = g.embed_sl4();
        let a1 = g.reductive().a1();
        let lin: Vec<[CycNum; 4]> = (0..4)
            .map(|var| {
                [
                    m.get(0, var).clone(),
                    m.get(1, var).clone(),
                    m.get(2, var).clone(),
                    m.get(3, var).clone(),
                ]
            })
            .collect();
        let n = self.dim();
        let mut out = ExactMatrix::zeros(n, n);
        for (j, (a, exps)) in self.basis.iter().enumerate() {
            let mut poly: BTreeMap<[u8; 4], CycNum> = BTreeMap::new();
            poly.insert([0; 4], CycNum::one());
            for var in 0..4 {
                for _ in 0..exps[var] {
                    poly = poly_mul_linear(&poly, &lin[var]);
                }
            }
            for target in 0..2usize {
                let w = a1.get(target, *a);
                if w.is_zero() {
                    continue;
                }
                for (mono, coeff) in &poly {
                    if mono[0] + mono[1] == 0 {
                        continue;
                    }
                    let i = self.index[&(target, *mono)];
                    out.set(i, j, w * coeff);
                }
            }
        }
        out
    }

    /// The matrix of a Lie algebra element, acting as a derivation on the
    /// cubic together with the first component on the pencil vector.
    pub fn inf_act(&self, x: &LieElement) -> ExactMatrix {
        let l = x.embed_sl4();
        let n = self.dim();
        let mut out = ExactMatrix::zeros(n, n);
        for (j, (a, exps)) in self.basis.iter().enumerate() {
            for target in 0..2usize {
                let w = x.x1.get(target, *a);
                if !w.is_zero() {
                    let i = self.index[&(target, *exps)];
                    let acc = out.get(i, j).clone() + w.clone();
                    out.set(i, j, acc);
                }
            }
            for var in 0..4usize {
                let e = exps[var];
                if e == 0 {
                    continue;
                }
                for k in 0..4usize {
                    let c = l.get(k, var);
                    if c.is_zero() {
                        continue;
                    }
                    let mut mono = *exps;
                    mono[var] -= 1;
                    mono[k] += 1;
                    if mono[0] + mono[1] == 0 {
                        continue;
                    }
                    let i = self.index[&(*a, mono)];
                    let acc = out.get(i, j).clone() + &CycNum::from_int(e as i64) * c;
                    out.set(i, j, acc);
                }
            }
        }
        out
    }
}

impl Default for RepR {
    fn default() -> Self {
        RepR::new()
    }
}

fn poly_mul_linear(
    poly: &BTreeMap<[u8; 4], CycNum>,
    lin: &[CycNum; 4],
) -> BTreeMap<[u8; 4], CycNum> {
    let mut out: BTreeMap<[u8; 4], CycNum> = BTreeMap::new();
    for (mono, c) in poly {
        for (k, lk) in lin.iter().enumerate() {
            if lk.is_zero() {
                continue;
            }
            let mut m = *mono;
            m[k] += 1;
            let term = c * lk;
            out.entry(m)
                .and_modify(|acc| *acc += &term)
                .or_insert(term);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

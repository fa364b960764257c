//! Bisimplicial sets and symmetric (invertible) simplicial spaces.
//!
//! Outer index `n` (the `Δ` or `IΔ` direction), inner index `m` (the space
//! direction). A symmetric space additionally carries adjacent
//! transpositions on each outer level; the action of an arbitrary function
//! `[k] -> [n]` is obtained by factoring it.

use std::collections::HashMap;

use crate::combinat::{
    action_word, all_maps, codegeneracy, coface, monotone_maps, seq_label, transposition, ActionStep, Factorization,
};
use crate::error::{Error, Result};
use crate::presheaf::{self, Diagram, OpKey, Shape, ShapeKind, SortKey, SortMap};
use crate::sgpd::SimplicialGroupoid;
use crate::sset::{SimplicialMap, TruncatedSimplicialSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSimplicialSet {
    diagram: Diagram,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricSimplicialSpace {
    diagram: Diagram,
}

/// Shared access to bisimplicial and symmetric carriers.
pub trait Space {
    fn diagram(&self) -> &Diagram;

    fn truncs(&self) -> (usize, usize) {
        truncs_of(self.diagram())
    }
    fn outer(&self) -> usize {
        self.truncs().0
    }
    fn inner(&self) -> usize {
        self.truncs().1
    }
    fn sort(&self, n: usize, m: usize) -> usize {
        n * (self.inner() + 1) + m
    }
    fn len(&self, n: usize, m: usize) -> usize {
        self.diagram().len(self.sort(n, m))
    }
    fn cells(&self, n: usize, m: usize) -> &[String] {
        self.diagram().names(self.sort(n, m))
    }
    fn outer_face(&self, n: usize, m: usize, i: usize, x: usize) -> usize {
        self.diagram().apply(OpKey::OuterFace { n, m, i }, x)
    }
    fn outer_degen(&self, n: usize, m: usize, i: usize, x: usize) -> usize {
        self.diagram().apply(OpKey::OuterDegen { n, m, i }, x)
    }
    fn inner_face(&self, n: usize, m: usize, i: usize, x: usize) -> usize {
        self.diagram().apply(OpKey::InnerFace { n, m, i }, x)
    }
    fn inner_degen(&self, n: usize, m: usize, i: usize, x: usize) -> usize {
        self.diagram().apply(OpKey::InnerDegen { n, m, i }, x)
    }

    /// The inner simplicial set at outer level `n`.
    fn row(&self, n: usize) -> TruncatedSimplicialSet {
        let inner = self.inner();
        let names = (0..=inner).map(|m| self.cells(n, m).to_vec()).collect();
        let shape = Shape::new(ShapeKind::Simplicial { trunc: inner });
        let d = Diagram::from_fn(shape, names, |key, x| match key {
            OpKey::Face { n: m, i } => self.inner_face(n, m, i, x),
            OpKey::Degen { n: m, i } => self.inner_degen(n, m, i, x),
            _ => unreachable!(),
        })
        .expect("rows are simplicial sets");
        TruncatedSimplicialSet::from_diagram(d).unwrap()
    }

    /// The outer simplicial set at inner level `m`.
    fn column(&self, m: usize) -> TruncatedSimplicialSet {
        let outer = self.outer();
        let names = (0..=outer).map(|n| self.cells(n, m).to_vec()).collect();
        let shape = Shape::new(ShapeKind::Simplicial { trunc: outer });
        let d = Diagram::from_fn(shape, names, |key, x| match key {
            OpKey::Face { n, i } => self.outer_face(n, m, i, x),
            OpKey::Degen { n, i } => self.outer_degen(n, m, i, x),
            _ => unreachable!(),
        })
        .expect("columns are simplicial sets");
        TruncatedSimplicialSet::from_diagram(d).unwrap()
    }

    /// Map of rows induced by the monotone `α: [k] -> [n]`.
    fn monotone_row_map(&self, alpha: &[usize], n: usize) -> SimplicialMap {
        let k = alpha.len() - 1;
        let level = (0..=self.inner())
            .map(|m| (0..self.len(n, m)).map(|x| self.act_monotone(alpha, n, m, x)).collect())
            .collect();
        SimplicialMap { source: self.row(n), target: self.row(k), level }
    }

    /// `α^*` for monotone `α` (faces then degeneracies).
    fn act_monotone(&self, alpha: &[usize], n: usize, m: usize, x: usize) -> usize {
        apply_word(self.diagram(), &action_word(alpha, n, Factorization::Left), n, m, x)
    }

    /// Whether `X_{0,·}` is constant: every inner operator on row 0 is a bijection
    /// that is the identity on cell indices.
    fn is_discrete_row0(&self) -> bool {
        let inner = self.inner();
        (0..=inner).all(|m| self.len(0, m) == self.len(0, 0))
            && (1..=inner).all(|m| (0..=m).all(|i| (0..self.len(0, m)).all(|x| self.inner_face(0, m, i, x) == x)))
            && (0..inner).all(|m| (0..=m).all(|i| (0..self.len(0, m)).all(|x| self.inner_degen(0, m, i, x) == x)))
    }
}

impl Space for BiSimplicialSet {
    fn diagram(&self) -> &Diagram {
        &self.diagram
    }
}
impl Space for SymmetricSimplicialSpace {
    fn diagram(&self) -> &Diagram {
        &self.diagram
    }
}

pub fn truncs_of(d: &Diagram) -> (usize, usize) {
    match d.kind() {
        ShapeKind::Bisimplicial { outer, inner } | ShapeKind::Symmetric { outer, inner } => (outer, inner),
        ShapeKind::Simplicial { .. } => panic!("not a bisimplicial diagram"),
    }
}

/// Applies a generator word along outer operators of a diagram.
pub fn apply_word(d: &Diagram, word: &[ActionStep], n: usize, m: usize, x: usize) -> usize {
    let mut cur = x;
    let mut level = n;
    for step in word {
        match *step {
            ActionStep::Face(i) => {
                cur = d.apply(OpKey::OuterFace { n: level, m, i }, cur);
                level -= 1;
            }
            ActionStep::Degen(i) => {
                cur = d.apply(OpKey::OuterDegen { n: level, m, i }, cur);
                level += 1;
            }
            ActionStep::Transpose(i) => cur = d.apply(OpKey::Transposition { n: level, m, i }, cur),
        }
    }
    cur
}

/// Operator indices of `word` started at level `(n, m)`, for applying one
/// word to many cells.
fn resolve_word(d: &Diagram, word: &[ActionStep], n: usize, m: usize) -> Vec<usize> {
    let shape = d.shape();
    let mut level = n;
    word.iter()
        .map(|step| match *step {
            ActionStep::Face(i) => {
                level -= 1;
                shape.op(OpKey::OuterFace { n: level + 1, m, i })
            }
            ActionStep::Degen(i) => {
                level += 1;
                shape.op(OpKey::OuterDegen { n: level - 1, m, i })
            }
            ActionStep::Transpose(i) => shape.op(OpKey::Transposition { n: level, m, i }),
        })
        .collect()
}

fn apply_resolved(d: &Diagram, ops: &[usize], x: usize) -> usize {
    ops.iter().fold(x, |c, &op| d.table(op)[c])
}

/// Outer function realizing each outer generator.
pub fn generator_function(key: OpKey) -> Option<(Vec<usize>, usize)> {
    match key {
        OpKey::OuterFace { n, i, .. } => Some((coface(n, i), n)),
        OpKey::OuterDegen { n, i, .. } => Some((codegeneracy(n, i), n)),
        OpKey::Transposition { n, i, .. } => Some((transposition(n, i), n)),
        _ => None,
    }
}

impl BiSimplicialSet {
    pub fn from_diagram(diagram: Diagram) -> Result<Self> {
        match diagram.kind() {
            ShapeKind::Bisimplicial { .. } => Ok(BiSimplicialSet { diagram }),
            k => Err(Error::ShapeMismatch(format!("expected a bisimplicial set, got {k}"))),
        }
    }
    pub fn into_diagram(self) -> Diagram {
        self.diagram
    }

    /// Builds from names per `(n, m)` and an operator function, then audits
    /// all identities.
    pub fn build(
        outer: usize,
        inner: usize,
        names: impl Fn(usize, usize) -> Vec<String>,
        op: impl FnMut(OpKey, usize) -> usize,
    ) -> Result<Self> {
        let shape = Shape::new(ShapeKind::Bisimplicial { outer, inner });
        let all = shape_names(&shape, names);
        let d = Diagram::from_fn(shape, all, op)?;
        let x = BiSimplicialSet { diagram: d };
        audit_bisimplicial(&x)?;
        Ok(x)
    }

    pub fn empty(outer: usize, inner: usize) -> Self {
        BiSimplicialSet { diagram: Diagram::empty(Shape::new(ShapeKind::Bisimplicial { outer, inner })) }
    }

    /// Constant in the outer direction.
    pub fn constant(k: &TruncatedSimplicialSet, outer: usize) -> Self {
        let inner = k.trunc();
        Self::build(outer, inner, |_, m| k.cells(m).to_vec(), |key, x| match key {
            OpKey::OuterFace { .. } | OpKey::OuterDegen { .. } => x,
            OpKey::InnerFace { m, i, .. } => k.face(m, i, x),
            OpKey::InnerDegen { m, i, .. } => k.degen(m, i, x),
            _ => unreachable!(),
        })
        .expect("constant object is valid")
    }
}

fn shape_names(shape: &Shape, names: impl Fn(usize, usize) -> Vec<String>) -> Vec<Vec<String>> {
    shape
        .sorts()
        .iter()
        .map(|s| match *s {
            SortKey::Bi(n, m) => names(n, m),
            SortKey::Level(_) => unreachable!(),
        })
        .collect()
}

impl SymmetricSimplicialSpace {
    pub fn from_diagram(diagram: Diagram) -> Result<Self> {
        match diagram.kind() {
            ShapeKind::Symmetric { .. } => Ok(SymmetricSimplicialSpace { diagram }),
            k => Err(Error::ShapeMismatch(format!("expected a symmetric simplicial space, got {k}"))),
        }
    }
    pub fn into_diagram(self) -> Diagram {
        self.diagram
    }

    /// Builds from names and an outer action `act(α, n, m, cell)` for
    /// `α: [k] -> [n]` plus inner operators; audits identities and
    /// coherence of the symmetric action.
    pub fn build(
        outer: usize,
        inner: usize,
        names: impl Fn(usize, usize) -> Vec<String>,
        mut act: impl FnMut(&[usize], usize, usize, usize) -> usize,
        mut inner_op: impl FnMut(OpKey, usize) -> usize,
    ) -> Result<Self> {
        let shape = Shape::new(ShapeKind::Symmetric { outer, inner });
        let all = shape_names(&shape, names);
        let d = Diagram::from_fn(shape, all, |key, x| match generator_function(key) {
            Some((alpha, n)) => {
                let m = match key {
                    OpKey::OuterFace { m, .. } | OpKey::OuterDegen { m, .. } | OpKey::Transposition { m, .. } => m,
                    _ => unreachable!(),
                };
                act(&alpha, n, m, x)
            }
            None => inner_op(key, x),
        })?;
        let x = SymmetricSimplicialSpace { diagram: d };
        audit_bisimplicial(&x)?;
        audit_symmetric(&x, 3)?;
        Ok(x)
    }

    pub fn empty(outer: usize, inner: usize) -> Self {
        SymmetricSimplicialSpace { diagram: Diagram::empty(Shape::new(ShapeKind::Symmetric { outer, inner })) }
    }

    /// `α^*: X_{n,m} -> X_{k,m}` for any function `α: [k] -> [n]`.
    pub fn act(&self, alpha: &[usize], n: usize, m: usize, x: usize) -> usize {
        apply_word(&self.diagram, &action_word(alpha, n, Factorization::Left), n, m, x)
    }

    pub fn act_with(&self, alpha: &[usize], n: usize, m: usize, x: usize, how: Factorization) -> usize {
        apply_word(&self.diagram, &action_word(alpha, n, how), n, m, x)
    }

    /// Forgets the transpositions.
    pub fn restrict(&self) -> BiSimplicialSet {
        let (outer, inner) = self.truncs();
        let shape = Shape::new(ShapeKind::Bisimplicial { outer, inner });
        let all = shape_names(&shape, |n, m| self.cells(n, m).to_vec());
        let d = Diagram::from_fn(shape, all, |key, x| self.diagram.apply(key, x)).expect("same tables");
        BiSimplicialSet { diagram: d }
    }

    /// Constant in the outer direction with trivial symmetric action.
    pub fn constant(k: &TruncatedSimplicialSet, outer: usize) -> Self {
        Self::build(outer, k.trunc(), |_, m| k.cells(m).to_vec(), |_, _, _, x| x, |key, x| match key {
            OpKey::InnerFace { m, i, .. } => k.face(m, i, x),
            OpKey::InnerDegen { m, i, .. } => k.degen(m, i, x),
            _ => unreachable!(),
        })
        .expect("constant object is valid")
    }
}

/// Checks simplicial identities in both directions and that outer and inner
/// operators commute.
pub fn audit_bisimplicial<S: Space>(x: &S) -> Result<usize> {
    let (outer, inner) = x.truncs();
    let d = x.diagram();
    let mut count = 0;
    for n in 0..=outer {
        count += x.row(n).audit_identities().map_err(|e| Error::Invalid(format!("row {n}: {e}")))?;
    }
    for m in 0..=inner {
        count += x.column(m).audit_identities().map_err(|e| Error::Invalid(format!("column {m}: {e}")))?;
    }
    let at_m = |k: OpKey, mm: usize| match k {
        OpKey::OuterFace { n, i, .. } => OpKey::OuterFace { n, m: mm, i },
        OpKey::OuterDegen { n, i, .. } => OpKey::OuterDegen { n, m: mm, i },
        OpKey::Transposition { n, i, .. } => OpKey::Transposition { n, m: mm, i },
        _ => unreachable!(),
    };
    let at_n = |k: OpKey, nn: usize| match k {
        OpKey::InnerFace { m, i, .. } => OpKey::InnerFace { n: nn, m, i },
        OpKey::InnerDegen { m, i, .. } => OpKey::InnerDegen { n: nn, m, i },
        _ => unreachable!(),
    };
    let shape = d.shape();
    for op in shape.ops() {
        if !matches!(op.key, OpKey::OuterFace { .. } | OpKey::OuterDegen { .. } | OpKey::Transposition { .. }) {
            continue;
        }
        let SortKey::Bi(n2, _) = shape.sorts()[op.dst] else { unreachable!() };
        for &iop in shape.ops_from(op.src) {
            let inner_op = shape.ops()[iop];
            let SortKey::Bi(_, m2) = shape.sorts()[inner_op.dst] else { unreachable!() };
            if !matches!(inner_op.key, OpKey::InnerFace { .. } | OpKey::InnerDegen { .. }) {
                continue;
            }
            for c in 0..d.len(op.src) {
                count += 1;
                let a = d.apply(at_n(inner_op.key, n2), d.apply(op.key, c));
                let b = d.apply(at_m(op.key, m2), d.apply(inner_op.key, c));
                if a != b {
                    return Err(Error::Invalid(format!(
                        "{:?} does not commute with {:?} at cell {}",
                        op.key,
                        inner_op.key,
                        d.name(op.src, c)
                    )));
                }
            }
        }
    }
    Ok(count)
}

/// Coherence of the symmetric action for functions `[k] -> [n]`,
/// `k, n ≤ min(bound, outer)`: both factorizations give the same action,
/// and the action is functorial against every generator.
pub fn audit_symmetric(x: &SymmetricSimplicialSpace, bound: usize) -> Result<usize> {
    let (outer, inner) = x.truncs();
    let top = bound.min(outer);
    let mut count = 0;
    for n in 0..=top {
        for k in 0..=top {
            for alpha in all_maps(k, n) {
                let wl = action_word(&alpha, n, Factorization::Left);
                let wr = action_word(&alpha, n, Factorization::Right);
                let d = x.diagram();
                for m in 0..=inner {
                    let (ol, or) = (resolve_word(d, &wl, n, m), resolve_word(d, &wr, n, m));
                    for c in 0..x.len(n, m) {
                        count += 1;
                        if apply_resolved(d, &ol, c) != apply_resolved(d, &or, c) {
                            return Err(Error::Invalid(format!(
                                "symmetric action of {} on {} depends on the factorization",
                                seq_label(&alpha),
                                x.cells(n, m)[c]
                            )));
                        }
                    }
                }
                // (α ∘ β)^* = β^* α^* for generators β: [j] -> [k]
                let mut gens: Vec<Vec<usize>> = Vec::new();
                if k >= 1 {
                    gens.extend((0..=k).map(|i| coface(k, i)));
                }
                if k < top {
                    gens.extend((0..=k).map(|i| codegeneracy(k, i)));
                }
                gens.extend((0..k).map(|i| transposition(k, i)));
                for beta in gens {
                    let wab = action_word(&crate::combinat::compose(&alpha, &beta), n, Factorization::Left);
                    let wb = action_word(&beta, k, Factorization::Left);
                    for m in 0..=inner {
                        let oab = resolve_word(d, &wab, n, m);
                        let mut ob = resolve_word(d, &wl, n, m);
                        ob.extend(resolve_word(d, &wb, k, m));
                        for c in 0..x.len(n, m) {
                            count += 1;
                            if apply_resolved(d, &oab, c) != apply_resolved(d, &ob, c) {
                                return Err(Error::Invalid(format!(
                                    "symmetric action is not functorial at {} ∘ {}",
                                    seq_label(&alpha),
                                    seq_label(&beta)
                                )));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

/// `Δ[n]^t`: monotone maps `[k] -> [n]`, constant in the inner direction.
pub fn rep_outer(n: usize, outer: usize, inner: usize) -> BiSimplicialSet {
    rep_inner_times_outer(0, n, outer, inner)
}

/// `K^t`: the simplicial set `K` in the outer direction, constant in the
/// inner direction.
pub fn outer_discrete(k: &TruncatedSimplicialSet, inner: usize) -> BiSimplicialSet {
    BiSimplicialSet::build(k.trunc(), inner, |n, _| k.cells(n).to_vec(), |key, x| match key {
        OpKey::OuterFace { n, i, .. } => k.face(n, i, x),
        OpKey::OuterDegen { n, i, .. } => k.degen(n, i, x),
        OpKey::InnerFace { .. } | OpKey::InnerDegen { .. } => x,
        _ => unreachable!(),
    })
    .expect("transposed simplicial set is valid")
}

/// `Δ[m] × Δ[n]^t`: cells `(inner monotone map, outer monotone map)`,
/// named `inner/outer`.
pub fn rep_inner_times_outer(m: usize, n: usize, outer: usize, inner: usize) -> BiSimplicialSet {
    let outer_maps: Vec<Vec<Vec<usize>>> = (0..=outer).map(|k| monotone_maps(k, n)).collect();
    let inner_maps: Vec<Vec<Vec<usize>>> = (0..=inner).map(|j| monotone_maps(j, m)).collect();
    pair_space(&outer_maps, &inner_maps, m == 0, outer, inner)
}

/// Cells are pairs (inner sequence, outer sequence); faces delete and
/// degeneracies repeat an entry of the relevant sequence.
fn pair_space(
    outer_seqs: &[Vec<Vec<usize>>],
    inner_seqs: &[Vec<Vec<usize>>],
    outer_names_only: bool,
    outer: usize,
    inner: usize,
) -> BiSimplicialSet {
    let oi: Vec<HashMap<&Vec<usize>, usize>> =
        outer_seqs.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let ii: Vec<HashMap<&Vec<usize>, usize>> =
        inner_seqs.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let width = |m: usize| inner_seqs[m].len();
    BiSimplicialSet::build(
        outer,
        inner,
        |n, m| {
            let mut v = Vec::new();
            for o in &outer_seqs[n] {
                for i in &inner_seqs[m] {
                    v.push(if outer_names_only { seq_label(o) } else { format!("{}/{}", seq_label(i), seq_label(o)) });
                }
            }
            v
        },
        |key, x| {
            let edit = |s: &Vec<usize>, del: Option<usize>, dup: Option<usize>| {
                let mut t = s.clone();
                if let Some(i) = del {
                    t.remove(i);
                }
                if let Some(i) = dup {
                    t.insert(i, t[i]);
                }
                t
            };
            match key {
                OpKey::OuterFace { n, m, i } => {
                    let (o, j) = (x / width(m), x % width(m));
                    oi[n - 1][&edit(&outer_seqs[n][o], Some(i), None)] * width(m) + j
                }
                OpKey::OuterDegen { n, m, i } => {
                    let (o, j) = (x / width(m), x % width(m));
                    oi[n + 1][&edit(&outer_seqs[n][o], None, Some(i))] * width(m) + j
                }
                OpKey::InnerFace { m, i, .. } => {
                    let (o, j) = (x / width(m), x % width(m));
                    o * width(m - 1) + ii[m - 1][&edit(&inner_seqs[m][j], Some(i), None)]
                }
                OpKey::InnerDegen { m, i, .. } => {
                    let (o, j) = (x / width(m), x % width(m));
                    o * width(m + 1) + ii[m + 1][&edit(&inner_seqs[m][j], None, Some(i))]
                }
                _ => unreachable!(),
            }
        },
    )
    .expect("sequence families are closed")
}

/// `IΔ[n]^t`: all functions `[k] -> [n]`, constant in the inner direction,
/// acted on by precomposition.
pub fn irep(n: usize, outer: usize, inner: usize) -> SymmetricSimplicialSpace {
    function_space(n, outer, inner, |_| true)
}

/// Sub-object of `IΔ[n]^t` on the functions satisfying `keep` (which must
/// be closed under precomposition).
fn function_space(
    n: usize,
    outer: usize,
    inner: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> SymmetricSimplicialSpace {
    let maps: Vec<Vec<Vec<usize>>> =
        (0..=outer).map(|k| all_maps(k, n).into_iter().filter(|a| keep(a)).collect()).collect();
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        maps.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    SymmetricSimplicialSpace::build(
        outer,
        inner,
        |k, _| maps[k].iter().map(|a| seq_label(a)).collect(),
        |alpha, k, _, x| index[alpha.len() - 1][&crate::combinat::compose(&maps[k][x], alpha)],
        |_, x| x,
    )
    .expect("function families closed under precomposition")
}

/// `IG(k)^t ⊆ IΔ[k]^t`: functions with image inside some `{i, i+1}`.
pub fn ig(k: usize, outer: usize, inner: usize) -> Result<(SymmetricSimplicialSpace, SortMap)> {
    if k == 0 {
        return Err(Error::OutOfRange("IG(k) needs k ≥ 1".into()));
    }
    let sub = function_space(k, outer, inner, |a| (0..k).any(|i| a.iter().all(|&v| v == i || v == i + 1)));
    let full = irep(k, outer, inner);
    let incl = inclusion_by_name(sub.diagram(), full.diagram());
    Ok((sub, incl))
}

/// Which cone edges build `H(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize)]
pub enum BousfieldIndex {
    /// Edges `0 -> i+1` for `i = 1, ..., k-1`, as printed.
    Paper,
    /// Edges `0 -> i+1` for `i = 0, ..., k-1`.
    #[default]
    Corrected,
}

impl BousfieldIndex {
    /// Endpoints `j` of the edges `0 -> j` used for `H(k)`.
    pub fn cone_targets(self, k: usize) -> Vec<usize> {
        match self {
            BousfieldIndex::Corrected => (1..=k).collect(),
            BousfieldIndex::Paper => (2..=k).collect(),
        }
    }
}

/// `H(k)^t ⊆ Δ[k]^t`: union of the edges `γ^i` (`0 -> i+1`).
pub fn h(k: usize, outer: usize, inner: usize, index: BousfieldIndex) -> Result<(BiSimplicialSet, SortMap)> {
    if k == 0 {
        return Err(Error::OutOfRange("H(k) needs k ≥ 1".into()));
    }
    let targets = index.cone_targets(k);
    let seqs: Vec<Vec<Vec<usize>>> = (0..=outer)
        .map(|j| {
            monotone_maps(j, k)
                .into_iter()
                .filter(|a| a.iter().all(|&v| v == 0) || targets.iter().any(|&t| a.iter().all(|&v| v == 0 || v == t)))
                .collect()
        })
        .collect();
    let inner_seqs: Vec<Vec<Vec<usize>>> = (0..=inner).map(|j| vec![vec![0; j + 1]]).collect();
    let sub = pair_space(&seqs, &inner_seqs, true, outer, inner);
    let full = rep_outer(k, outer, inner);
    let incl = inclusion_by_name(sub.diagram(), full.diagram());
    Ok((sub, incl))
}

/// Inclusion of a sub-object whose cells carry the same names.
pub fn inclusion_by_name(sub: &Diagram, full: &Diagram) -> SortMap {
    (0..sub.shape().sorts().len())
        .map(|s| sub.names(s).iter().map(|nm| full.find(s, nm).expect("cell present")).collect())
        .collect()
}

/// `cosk₀(K)`: outer level `n` is `K^{n+1}`, functions act on coordinates.
pub fn cosk0_space(k: &TruncatedSimplicialSet, outer: usize) -> SymmetricSimplicialSpace {
    let inner = k.trunc();
    let tuples: Vec<Vec<Vec<Vec<usize>>>> = (0..=outer)
        .map(|n| {
            (0..=inner)
                .map(|m| if k.len(m) == 0 { Vec::new() } else { all_maps(n, k.len(m) - 1) })
                .collect()
        })
        .collect();
    let index: Vec<Vec<HashMap<&Vec<usize>, usize>>> = tuples
        .iter()
        .map(|row| row.iter().map(|v| v.iter().enumerate().map(|(i, t)| (t, i)).collect()).collect())
        .collect();
    SymmetricSimplicialSpace::build(
        outer,
        inner,
        |n, m| {
            tuples[n][m]
                .iter()
                .map(|t| format!("({})", t.iter().map(|&c| k.cells(m)[c].as_str()).collect::<Vec<_>>().join(",")))
                .collect()
        },
        |alpha, n, m, x| {
            let t: Vec<usize> = alpha.iter().map(|&a| tuples[n][m][x][a]).collect();
            index[alpha.len() - 1][m][&t]
        },
        |key, x| match key {
            OpKey::InnerFace { n, m, i } => {
                let t: Vec<usize> = tuples[n][m][x].iter().map(|&c| k.face(m, i, c)).collect();
                index[n][m - 1][&t]
            }
            OpKey::InnerDegen { n, m, i } => {
                let t: Vec<usize> = tuples[n][m][x].iter().map(|&c| k.degen(m, i, c)).collect();
                index[n][m + 1][&t]
            }
            _ => unreachable!(),
        },
    )
    .expect("coskeleton is valid")
}

/// The nerve of a simplicial groupoid: outer level `n`, inner level `m`
/// holds composable `n`-strings of level-`m` morphisms; a function acts by
/// composing (and inverting) along the string.
pub fn nerve_sgpd(g: &SimplicialGroupoid, outer: usize) -> SymmetricSimplicialSpace {
    let inner = g.trunc();
    let strings: Vec<Vec<Vec<Vec<usize>>>> = (0..=outer)
        .map(|n| (0..=inner).map(|m| crate::sset::composable_strings(&g.level(m).cat, n).swap_remove(n)).collect())
        .collect();
    let index: Vec<Vec<HashMap<&Vec<usize>, usize>>> = strings
        .iter()
        .map(|row| row.iter().map(|v| v.iter().enumerate().map(|(i, t)| (t, i)).collect()).collect())
        .collect();
    SymmetricSimplicialSpace::build(
        outer,
        inner,
        |n, m| {
            let c = &g.level(m).cat;
            strings[n][m]
                .iter()
                .map(|s| {
                    if n == 0 {
                        c.objects()[s[0]].clone()
                    } else {
                        s.iter().map(|&f| c.morphisms()[f].name.as_str()).collect::<Vec<_>>().join("|")
                    }
                })
                .collect()
        },
        |alpha, n, m, x| {
            let l = g.level(m);
            let c = &l.cat;
            let s = &strings[n][m][x];
            let verts: Vec<usize> =
                if n == 0 { vec![s[0]] } else { std::iter::once(c.dom(s[0])).chain(s.iter().map(|&f| c.cod(f))).collect() };
            let path = |a: usize, b: usize| -> usize {
                if a == b {
                    c.identity(verts[a])
                } else {
                    let (lo, hi) = (a.min(b), a.max(b));
                    let mut acc = s[lo];
                    for &f in &s[lo + 1..hi] {
                        acc = c.compose(f, acc);
                    }
                    if a < b {
                        acc
                    } else {
                        l.inverse(acc)
                    }
                }
            };
            let k = alpha.len() - 1;
            let t: Vec<usize> = if k == 0 { vec![verts[alpha[0]]] } else { (1..=k).map(|j| path(alpha[j - 1], alpha[j])).collect() };
            index[k][m][&t]
        },
        |key, x| match key {
            OpKey::InnerFace { n, m, i } => {
                if n == 0 {
                    return x;
                }
                let t: Vec<usize> = strings[n][m][x].iter().map(|&f| g.face_table(m, i)[f]).collect();
                index[n][m - 1][&t]
            }
            OpKey::InnerDegen { n, m, i } => {
                if n == 0 {
                    return x;
                }
                let t: Vec<usize> = strings[n][m][x].iter().map(|&f| g.degen_table(m, i)[f]).collect();
                index[n][m + 1][&t]
            }
            _ => unreachable!(),
        },
    )
    .expect("nerve of a simplicial groupoid is valid")
}

/// Maps between spaces of the same kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    pub source: Diagram,
    pub target: Diagram,
    pub level: SortMap,
}

impl SpaceMap {
    pub fn new(source: Diagram, target: Diagram, level: SortMap) -> Result<Self> {
        presheaf::check_natural(&source, &target, &level)?;
        Ok(SpaceMap { source, target, level })
    }

    pub fn identity(d: &Diagram) -> Self {
        SpaceMap { source: d.clone(), target: d.clone(), level: presheaf::identity_map(d) }
    }

    /// The map of inner simplicial sets at outer level `n`.
    pub fn row_map(&self, n: usize) -> SimplicialMap {
        let inner = truncs_of(&self.source).1;
        let s = BiView(&self.source);
        let t = BiView(&self.target);
        let level = (0..=inner).map(|m| self.level[s.sort(n, m)].clone()).collect();
        SimplicialMap { source: s.row(n), target: t.row(n), level }
    }

    pub fn is_levelwise_bijection(&self) -> bool {
        presheaf::is_bijective(&self.level, &self.target.sizes())
    }
    pub fn is_injective(&self) -> bool {
        presheaf::is_injective(&self.level, &self.target.sizes())
    }
}

/// Borrowed view giving [`Space`] access to any bisimplicial-kind diagram.
pub struct BiView<'a>(pub &'a Diagram);

impl Space for BiView<'_> {
    fn diagram(&self) -> &Diagram {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::FinGroupoid;
    use crate::group::FinGroup;
    use crate::sset::standard_simplex;

    #[test]
    fn representable_counts() {
        assert!(rep_outer(0, 2, 1).diagram().sizes().iter().all(|&s| s == 1));
        assert_eq!(rep_inner_times_outer(1, 1, 2, 2).len(1, 1), 9);
        let r = rep_inner_times_outer(1, 1, 2, 2);
        assert_eq!(r.len(0, 0), 4);
        assert_eq!(irep(2, 2, 1).len(1, 0), 9);
        assert!(irep(0, 2, 1).diagram().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn ig_and_h() {
        let (ig1, _) = ig(1, 2, 1).unwrap();
        assert_eq!(ig1.diagram().sizes(), irep(1, 2, 1).diagram().sizes());
        let (ig2, incl) = ig(2, 2, 1).unwrap();
        assert_eq!(ig2.len(1, 0), 7);
        assert_eq!(ig2.len(0, 0), 3);
        presheaf::check_natural(ig2.diagram(), irep(2, 2, 1).diagram(), &incl).unwrap();
        let (h2, _) = h(2, 2, 1, BousfieldIndex::Corrected).unwrap();
        assert_eq!(h2.len(0, 0), 3);
        let col = h2.column(0);
        assert_eq!(col.nondegenerate(1).len(), 2);
        assert_eq!(col.nondegenerate(2).len(), 0);
        let (h1, _) = h(1, 2, 1, BousfieldIndex::Corrected).unwrap();
        assert_eq!(h1.diagram().sizes(), rep_outer(1, 2, 1).diagram().sizes());
    }

    #[test]
    fn coskeleton() {
        let two = crate::sset::boundary(1, 1).0;
        let c = cosk0_space(&two, 2);
        assert_eq!(c.len(1, 0), 4);
        assert_eq!(c.row(0).sizes(), two.sizes());
        let pt = cosk0_space(&standard_simplex(0, 1), 2);
        assert!(pt.diagram().sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn nerve_of_walking_iso() {
        let f = crate::sgpd::walking_iso_groupoid(1);
        let n = nerve_sgpd(&f, 3);
        for k in 0..=3 {
            for m in 0..=1 {
                assert_eq!(n.len(k, m), 1 << (k + 1));
            }
        }
        assert!(n.is_discrete_row0());
        assert_eq!(n.cells(0, 0), &["x".to_string(), "y".to_string()]);
        let g = crate::sgpd::SimplicialGroupoid::constant(&FinGroupoid::from_group(&FinGroup::symmetric3(), "*"), 1);
        audit_symmetric(&nerve_sgpd(&g, 3), 3).unwrap();
    }

    #[test]
    fn restrict_keeps_cells() {
        let r = irep(2, 3, 1).restrict();
        for k in 0..=3 {
            assert_eq!(r.len(k, 0), 3usize.pow(k as u32 + 1));
        }
    }

    #[test]
    fn discrete_row0() {
        assert!(!rep_inner_times_outer(1, 1, 2, 2).is_discrete_row0());
        assert!(irep(2, 2, 2).is_discrete_row0());
    }
}

//! Finite presheaves on finitely presented index categories.
//!
//! Every carrier in the crate (truncated simplicial sets, bisimplicial sets,
//! symmetric simplicial spaces) is a [`Diagram`]: a family of finite cell
//! sets indexed by *sorts*, together with one total table per generating
//! operator. A map of diagrams is a [`SortMap`], one table per sort, and is
//! natural when it commutes with every operator table. Because the operators
//! generate the index category, naturality against generators is naturality.
//!
//! The same module hosts the generic constructions used throughout: finite
//! limits as tuple sets, pushouts and quotients via union-find, subobjects,
//! and the backtracking [`HomSearch`] that enumerates natural maps.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which index category a diagram lives over, with its truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `Δ^op` truncated at `trunc`.
    Simplicial { trunc: usize },
    /// `Δ^op × Δ^op`, outer (categorical) and inner (space) directions.
    Bisimplicial { outer: usize, inner: usize },
    /// `IΔ^op × Δ^op`: bisimplicial plus adjacent transpositions in the outer direction.
    Symmetric { outer: usize, inner: usize },
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKind::Simplicial { trunc } => write!(f, "simplicial(trunc={trunc})"),
            ShapeKind::Bisimplicial { outer, inner } => {
                write!(f, "bisimplicial(outer={outer}, inner={inner})")
            }
            ShapeKind::Symmetric { outer, inner } => {
                write!(f, "symmetric(outer={outer}, inner={inner})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SortKey {
    Level(usize),
    /// `(outer, inner)`.
    Bi(usize, usize),
}

/// Generating operators. Indices `n`, `m` always refer to the source sort.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKey {
    Face { n: usize, i: usize },
    Degen { n: usize, i: usize },
    OuterFace { n: usize, m: usize, i: usize },
    OuterDegen { n: usize, m: usize, i: usize },
    InnerFace { n: usize, m: usize, i: usize },
    InnerDegen { n: usize, m: usize, i: usize },
    Transposition { n: usize, m: usize, i: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Operator {
    pub key: OpKey,
    pub src: usize,
    pub dst: usize,
}

#[derive(Debug)]
pub struct Shape {
    kind: ShapeKind,
    sorts: Vec<SortKey>,
    ranks: Vec<usize>,
    ops: Vec<Operator>,
    sort_index: HashMap<SortKey, usize>,
    op_index: HashMap<OpKey, usize>,
    ops_from: Vec<Vec<usize>>,
}

impl Shape {
    pub fn new(kind: ShapeKind) -> Arc<Shape> {
        let mut sorts = Vec::new();
        match kind {
            ShapeKind::Simplicial { trunc } => sorts.extend((0..=trunc).map(SortKey::Level)),
            ShapeKind::Bisimplicial { outer, inner } | ShapeKind::Symmetric { outer, inner } => {
                for n in 0..=outer {
                    for m in 0..=inner {
                        sorts.push(SortKey::Bi(n, m));
                    }
                }
            }
        }
        let sort_index: HashMap<SortKey, usize> =
            sorts.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let ranks = sorts
            .iter()
            .map(|s| match *s {
                SortKey::Level(n) => n,
                SortKey::Bi(n, m) => n + m,
            })
            .collect();
        let mut ops = Vec::new();
        for (si, s) in sorts.iter().enumerate() {
            let mut push = |key: OpKey, dst: SortKey| {
                ops.push(Operator { key, src: si, dst: sort_index[&dst] });
            };
            match (*s, kind) {
                (SortKey::Level(n), ShapeKind::Simplicial { trunc }) => {
                    if n >= 1 {
                        for i in 0..=n {
                            push(OpKey::Face { n, i }, SortKey::Level(n - 1));
                        }
                    }
                    if n < trunc {
                        for i in 0..=n {
                            push(OpKey::Degen { n, i }, SortKey::Level(n + 1));
                        }
                    }
                }
                (SortKey::Bi(n, m), ShapeKind::Bisimplicial { outer, inner })
                | (SortKey::Bi(n, m), ShapeKind::Symmetric { outer, inner }) => {
                    if n >= 1 {
                        for i in 0..=n {
                            push(OpKey::OuterFace { n, m, i }, SortKey::Bi(n - 1, m));
                        }
                    }
                    if n < outer {
                        for i in 0..=n {
                            push(OpKey::OuterDegen { n, m, i }, SortKey::Bi(n + 1, m));
                        }
                    }
                    if m >= 1 {
                        for i in 0..=m {
                            push(OpKey::InnerFace { n, m, i }, SortKey::Bi(n, m - 1));
                        }
                    }
                    if m < inner {
                        for i in 0..=m {
                            push(OpKey::InnerDegen { n, m, i }, SortKey::Bi(n, m + 1));
                        }
                    }
                    if matches!(kind, ShapeKind::Symmetric { .. }) {
                        for i in 0..n {
                            push(OpKey::Transposition { n, m, i }, SortKey::Bi(n, m));
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
        let op_index = ops.iter().enumerate().map(|(i, o)| (o.key, i)).collect();
        let mut ops_from = vec![Vec::new(); sorts.len()];
        for (oi, o) in ops.iter().enumerate() {
            ops_from[o.src].push(oi);
        }
        Arc::new(Shape { kind, sorts, ranks, ops, sort_index, op_index, ops_from })
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }
    pub fn sorts(&self) -> &[SortKey] {
        &self.sorts
    }
    pub fn ops(&self) -> &[Operator] {
        &self.ops
    }
    pub fn rank(&self, sort: usize) -> usize {
        self.ranks[sort]
    }
    pub fn ops_from(&self, sort: usize) -> &[usize] {
        &self.ops_from[sort]
    }
    pub fn sort(&self, key: SortKey) -> usize {
        self.sort_index[&key]
    }
    pub fn try_sort(&self, key: SortKey) -> Option<usize> {
        self.sort_index.get(&key).copied()
    }
    pub fn op(&self, key: OpKey) -> usize {
        self.op_index[&key]
    }
    pub fn try_op(&self, key: OpKey) -> Option<usize> {
        self.op_index.get(&key).copied()
    }
}

/// One table per sort: `map[sort][cell]` is the image cell.
pub type SortMap = Vec<Vec<usize>>;

/// A finite presheaf given by cell names and operator tables.
#[derive(Clone, Debug)]
pub struct Diagram {
    shape: Arc<Shape>,
    names: Vec<Vec<String>>,
    tables: Vec<Vec<usize>>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.shape.kind == other.shape.kind
            && self.names == other.names
            && self.tables == other.tables
    }
}
impl Eq for Diagram {}

impl Diagram {
    /// Builds a diagram, checking table sizes and ranges (not identities).
    pub fn new(shape: Arc<Shape>, names: Vec<Vec<String>>, tables: Vec<Vec<usize>>) -> Result<Self> {
        if names.len() != shape.sorts.len() {
            return Err(Error::Invalid(format!(
                "expected {} sorts, got {}",
                shape.sorts.len(),
                names.len()
            )));
        }
        if tables.len() != shape.ops.len() {
            return Err(Error::Invalid(format!(
                "expected {} operator tables, got {}",
                shape.ops.len(),
                tables.len()
            )));
        }
        for (oi, op) in shape.ops.iter().enumerate() {
            let t = &tables[oi];
            if t.len() != names[op.src].len() {
                return Err(Error::Invalid(format!("table {:?} is not total", op.key)));
            }
            if let Some(bad) = t.iter().find(|&&v| v >= names[op.dst].len()) {
                return Err(Error::Invalid(format!("table {:?} has out-of-range entry {bad}", op.key)));
            }
        }
        for (si, ns) in names.iter().enumerate() {
            let set: BTreeSet<&String> = ns.iter().collect();
            if set.len() != ns.len() {
                return Err(Error::Invalid(format!(
                    "duplicate cell identifier in sort {:?}",
                    shape.sorts[si]
                )));
            }
        }
        Ok(Diagram { shape, names, tables })
    }

    /// Builds a diagram whose operator tables are computed by `f(op, cell)`.
    pub fn from_fn(
        shape: Arc<Shape>,
        names: Vec<Vec<String>>,
        mut f: impl FnMut(OpKey, usize) -> usize,
    ) -> Result<Self> {
        let tables = shape
            .ops
            .iter()
            .map(|op| (0..names[op.src].len()).map(|x| f(op.key, x)).collect())
            .collect();
        Diagram::new(shape, names, tables)
    }

    pub fn empty(shape: Arc<Shape>) -> Self {
        let names = vec![Vec::new(); shape.sorts.len()];
        let tables = vec![Vec::new(); shape.ops.len()];
        Diagram { shape, names, tables }
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }
    pub fn kind(&self) -> ShapeKind {
        self.shape.kind
    }
    pub fn len(&self, sort: usize) -> usize {
        self.names[sort].len()
    }
    pub fn sizes(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }
    pub fn total_cells(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }
    pub fn is_empty(&self) -> bool {
        self.total_cells() == 0
    }
    pub fn names(&self, sort: usize) -> &[String] {
        &self.names[sort]
    }
    pub fn all_names(&self) -> &[Vec<String>] {
        &self.names
    }
    pub fn name(&self, sort: usize, cell: usize) -> &str {
        &self.names[sort][cell]
    }
    pub fn find(&self, sort: usize, name: &str) -> Option<usize> {
        self.names[sort].iter().position(|n| n == name)
    }
    pub fn table(&self, op: usize) -> &[usize] {
        &self.tables[op]
    }
    pub fn tables(&self) -> &[Vec<usize>] {
        &self.tables
    }
    pub fn table_by_key(&self, key: OpKey) -> &[usize] {
        &self.tables[self.shape.op(key)]
    }
    pub fn apply(&self, key: OpKey, cell: usize) -> usize {
        self.tables[self.shape.op(key)][cell]
    }

    /// Renames every cell with `f(sort, old_name)`; the result must stay unique per sort.
    pub fn renamed(&self, mut f: impl FnMut(usize, &str) -> String) -> Result<Self> {
        let names = self
            .names
            .iter()
            .enumerate()
            .map(|(s, ns)| ns.iter().map(|n| f(s, n)).collect())
            .collect();
        Diagram::new(self.shape.clone(), names, self.tables.clone())
    }

    /// Generator-level structure audit hook: operators respect a
    /// user-supplied equation `lhs(cell) == rhs(cell)` on a sort.
    pub fn compose_ops(&self, ops: &[OpKey], cell: usize) -> usize {
        ops.iter().fold(cell, |c, k| self.apply(*k, c))
    }
}

pub fn identity_map(d: &Diagram) -> SortMap {
    d.sizes().into_iter().map(|n| (0..n).collect()).collect()
}

/// `g ∘ f` (apply `f` first).
pub fn compose(f: &SortMap, g: &SortMap) -> SortMap {
    f.iter()
        .zip(g)
        .map(|(fs, gs)| fs.iter().map(|&x| gs[x]).collect())
        .collect()
}

/// Checks that `map` is a natural transformation `src -> tgt`.
pub fn check_natural(src: &Diagram, tgt: &Diagram, map: &SortMap) -> Result<()> {
    if src.kind() != tgt.kind() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", src.kind(), tgt.kind())));
    }
    if map.len() != src.names.len() {
        return Err(Error::NotNatural("wrong number of sort tables".into()));
    }
    for (s, t) in map.iter().enumerate() {
        if t.len() != src.len(s) {
            return Err(Error::NotNatural(format!("table for {:?} not total", src.shape.sorts[s])));
        }
        if t.iter().any(|&v| v >= tgt.len(s)) {
            return Err(Error::NotNatural(format!("table for {:?} out of range", src.shape.sorts[s])));
        }
    }
    for (oi, op) in src.shape.ops.iter().enumerate() {
        let st = &src.tables[oi];
        let tt = &tgt.tables[oi];
        for x in 0..src.len(op.src) {
            if map[op.dst][st[x]] != tt[map[op.src][x]] {
                return Err(Error::NotNatural(format!(
                    "{:?} on cell {}",
                    op.key,
                    src.name(op.src, x)
                )));
            }
        }
    }
    Ok(())
}

pub fn is_injective(map: &SortMap, tgt_sizes: &[usize]) -> bool {
    map.iter().zip(tgt_sizes).all(|(t, &n)| {
        let mut seen = vec![false; n];
        t.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    })
}

pub fn is_surjective(map: &SortMap, tgt_sizes: &[usize]) -> bool {
    map.iter().zip(tgt_sizes).all(|(t, &n)| {
        let mut seen = vec![false; n];
        for &v in t {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    })
}

pub fn is_bijective(map: &SortMap, tgt_sizes: &[usize]) -> bool {
    map.iter().zip(tgt_sizes).all(|(t, &n)| t.len() == n) && is_injective(map, tgt_sizes)
}

/// Inverse of a levelwise bijection.
pub fn invert_bijection(map: &SortMap) -> SortMap {
    map.iter()
        .map(|t| {
            let mut inv = vec![0; t.len()];
            for (x, &y) in t.iter().enumerate() {
                inv[y] = x;
            }
            inv
        })
        .collect()
}

/// The finite limit of a family of diagrams cut out by equations
/// `eq.left_map(x[eq.left]) == eq.right_map(x[eq.right])`.
#[derive(Clone, Debug)]
pub struct Limit {
    pub diagram: Diagram,
    pub projections: Vec<SortMap>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
}

/// One equation between two factors of a tuple limit.
pub struct Equation<'a> {
    pub left: usize,
    pub left_map: &'a SortMap,
    pub right: usize,
    pub right_map: &'a SortMap,
}

impl Limit {
    /// Cells are tuples in lexicographic order of the factor order.
    pub fn tuples(factors: &[&Diagram], eqs: &[Equation<'_>]) -> Result<Limit> {
        let shape = match factors.first() {
            Some(f) => f.shape.clone(),
            None => return Err(Error::Invalid("limit of no factors".into())),
        };
        if let Some(f) = factors.iter().find(|f| f.kind() != shape.kind) {
            return Err(Error::ShapeMismatch(format!("{} vs {}", f.kind(), shape.kind)));
        }
        let nsorts = shape.sorts.len();
        let mut names = Vec::with_capacity(nsorts);
        let mut cells: Vec<Vec<Vec<usize>>> = Vec::with_capacity(nsorts);
        let mut lookup = Vec::with_capacity(nsorts);
        for s in 0..nsorts {
            let mut out = Vec::new();
            let mut cur = Vec::with_capacity(factors.len());
            tuple_rec(factors, eqs, s, &mut cur, &mut out);
            let map: HashMap<Vec<usize>, usize> =
                out.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
            names.push(
                out.iter()
                    .map(|t| {
                        let parts: Vec<&str> =
                            t.iter().enumerate().map(|(f, &c)| factors[f].name(s, c)).collect();
                        format!("({})", parts.join(","))
                    })
                    .collect(),
            );
            cells.push(out);
            lookup.push(map);
        }
        let diagram = Diagram::from_fn(shape.clone(), names, |key, x| {
            let op = &shape.ops[shape.op(key)];
            let img: Vec<usize> = cells[op.src][x]
                .iter()
                .enumerate()
                .map(|(f, &c)| factors[f].apply(key, c))
                .collect();
            lookup[op.dst][&img]
        })?;
        let projections = (0..factors.len())
            .map(|f| cells.iter().map(|cs| cs.iter().map(|t| t[f]).collect()).collect())
            .collect();
        Ok(Limit { diagram, projections, lookup })
    }

    /// The mediating map from a cone `legs[f]: Z -> factor f`.
    pub fn mediate(&self, legs: &[&SortMap]) -> Result<SortMap> {
        let nsorts = self.lookup.len();
        let mut out = Vec::with_capacity(nsorts);
        for s in 0..nsorts {
            let n = legs.first().map(|l| l[s].len()).unwrap_or(0);
            let mut t = Vec::with_capacity(n);
            for z in 0..n {
                let tuple: Vec<usize> = legs.iter().map(|l| l[s][z]).collect();
                match self.lookup[s].get(&tuple) {
                    Some(&c) => t.push(c),
                    None => return Err(Error::NotNatural("cone does not satisfy the limit equations".into())),
                }
            }
            out.push(t);
        }
        Ok(out)
    }

    pub fn cell_of(&self, sort: usize, tuple: &[usize]) -> Option<usize> {
        self.lookup[sort].get(tuple).copied()
    }
}

fn tuple_rec(
    factors: &[&Diagram],
    eqs: &[Equation<'_>],
    s: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let f = cur.len();
    if f == factors.len() {
        out.push(cur.clone());
        return;
    }
    'cand: for c in 0..factors[f].len(s) {
        cur.push(c);
        for e in eqs {
            let hi = e.left.max(e.right);
            if hi == f && e.left_map[s][cur[e.left]] != e.right_map[s][cur[e.right]] {
                cur.pop();
                continue 'cand;
            }
        }
        tuple_rec(factors, eqs, s, cur, out);
        cur.pop();
    }
}

pub fn product(a: &Diagram, b: &Diagram) -> Result<Limit> {
    Limit::tuples(&[a, b], &[])
}

pub fn pullback(a: &Diagram, f: &SortMap, b: &Diagram, g: &SortMap) -> Result<Limit> {
    Limit::tuples(&[a, b], &[Equation { left: 0, left_map: f, right: 1, right_map: g }])
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }
    /// Keeps the smaller index as root so roots are least representatives.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Quotient of a diagram by the congruence generated by `pairs[sort]`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub diagram: Diagram,
    /// The quotient map.
    pub map: SortMap,
    /// Least representative of each class.
    pub reps: SortMap,
}

pub fn quotient(d: &Diagram, pairs: &[Vec<(usize, usize)>]) -> Result<Quotient> {
    quotient_named(d, pairs, |s, c| d.name(s, c).to_string())
}

fn quotient_named(
    d: &Diagram,
    pairs: &[Vec<(usize, usize)>],
    name_of: impl Fn(usize, usize) -> String,
) -> Result<Quotient> {
    let shape = d.shape.clone();
    let nsorts = shape.sorts.len();
    let mut ufs: Vec<UnionFind> = (0..nsorts).map(|s| UnionFind::new(d.len(s))).collect();
    for (s, ps) in pairs.iter().enumerate() {
        for &(a, b) in ps {
            ufs[s].union(a, b);
        }
    }
    // congruence closure
    loop {
        let mut changed = false;
        for (oi, op) in shape.ops.iter().enumerate() {
            let t = &d.tables[oi];
            for x in 0..d.len(op.src) {
                let r = ufs[op.src].find(x);
                if r != x {
                    let (a, b) = (t[x], t[r]);
                    if ufs[op.dst].union(a, b) {
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut map = Vec::with_capacity(nsorts);
    let mut reps = Vec::with_capacity(nsorts);
    let mut names = Vec::with_capacity(nsorts);
    for (s, uf) in ufs.iter_mut().enumerate() {
        let mut class_of_root = HashMap::new();
        let mut m = Vec::with_capacity(d.len(s));
        let mut r = Vec::new();
        for x in 0..d.len(s) {
            let root = uf.find(x);
            let next = class_of_root.len();
            let c = *class_of_root.entry(root).or_insert(next);
            if c == r.len() {
                r.push(x);
            }
            m.push(c);
        }
        let mut used = BTreeSet::new();
        let ns = r
            .iter()
            .map(|&x| {
                let mut n = name_of(s, x);
                while !used.insert(n.clone()) {
                    n.push('\'');
                }
                n
            })
            .collect();
        names.push(ns);
        map.push(m);
        reps.push(r);
    }
    let diagram = Diagram::from_fn(shape.clone(), names, |key, c| {
        let op = &shape.ops[shape.op(key)];
        map[op.dst][d.apply(key, reps[op.src][c])]
    })?;
    Ok(Quotient { diagram, map, reps })
}

/// Disjoint union; cells of `a` precede cells of `b` in every sort.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub diagram: Diagram,
    pub left: SortMap,
    pub right: SortMap,
}

pub fn coproduct(a: &Diagram, b: &Diagram) -> Result<Coproduct> {
    if a.kind() != b.kind() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", a.kind(), b.kind())));
    }
    let shape = a.shape.clone();
    let nsorts = shape.sorts.len();
    let mut names = Vec::with_capacity(nsorts);
    for s in 0..nsorts {
        let mut used: BTreeSet<String> = BTreeSet::new();
        let mut ns = Vec::new();
        for n in a.names(s).iter().chain(b.names(s)) {
            let mut n = n.clone();
            while !used.insert(n.clone()) {
                n.push('\'');
            }
            ns.push(n);
        }
        names.push(ns);
    }
    let diagram = Diagram::from_fn(shape.clone(), names, |key, x| {
        let op = &shape.ops[shape.op(key)];
        let na = a.len(op.src);
        if x < na {
            a.apply(key, x)
        } else {
            a.len(op.dst) + b.apply(key, x - na)
        }
    })?;
    let left = (0..nsorts).map(|s| (0..a.len(s)).collect()).collect();
    let right = (0..nsorts)
        .map(|s| (0..b.len(s)).map(|y| a.len(s) + y).collect())
        .collect();
    Ok(Coproduct { diagram, left, right })
}

/// Pushout of `x <-f- a -g-> y`, computed levelwise as a quotient of `x ⊔ y`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub diagram: Diagram,
    pub left: SortMap,
    pub right: SortMap,
    /// Representative of each class in `x ⊔ y` coordinates: `(is_right, cell)`.
    pub reps: Vec<Vec<(bool, usize)>>,
}

pub fn pushout(a: &Diagram, x: &Diagram, f: &SortMap, y: &Diagram, g: &SortMap) -> Result<Pushout> {
    if a.kind() != x.kind() || a.kind() != y.kind() {
        return Err(Error::ShapeMismatch("pushout legs live over different shapes".into()));
    }
    let co = coproduct(x, y)?;
    let nsorts = a.shape.sorts.len();
    let pairs: Vec<Vec<(usize, usize)>> = (0..nsorts)
        .map(|s| (0..a.len(s)).map(|c| (co.left[s][f[s][c]], co.right[s][g[s][c]])).collect())
        .collect();
    let names_x: Vec<usize> = (0..nsorts).map(|s| x.len(s)).collect();
    let q = quotient_named(&co.diagram, &pairs, |s, c| {
        if c < names_x[s] {
            x.name(s, c).to_string()
        } else {
            y.name(s, c - names_x[s]).to_string()
        }
    })?;
    let left = compose(&co.left, &q.map);
    let right = compose(&co.right, &q.map);
    let reps = q
        .reps
        .iter()
        .enumerate()
        .map(|(s, r)| {
            r.iter()
                .map(|&c| if c < names_x[s] { (false, c) } else { (true, c - names_x[s]) })
                .collect()
        })
        .collect();
    Ok(Pushout { diagram: q.diagram, left, right, reps })
}

impl Pushout {
    /// The map out of the pushout determined by a cocone; fails if the cocone
    /// does not agree on the span.
    pub fn copair(&self, hx: &SortMap, hy: &SortMap) -> Result<SortMap> {
        let mut out = Vec::with_capacity(self.reps.len());
        for s in 0..self.reps.len() {
            let mut t = vec![usize::MAX; self.reps[s].len()];
            for (c, &img) in self.left[s].iter().enumerate() {
                let v = hx[s][c];
                if t[img] != usize::MAX && t[img] != v {
                    return Err(Error::NotNatural("cocone legs disagree".into()));
                }
                t[img] = v;
            }
            for (c, &img) in self.right[s].iter().enumerate() {
                let v = hy[s][c];
                if t[img] != usize::MAX && t[img] != v {
                    return Err(Error::NotNatural("cocone legs disagree".into()));
                }
                t[img] = v;
            }
            out.push(t);
        }
        Ok(out)
    }

    /// Map between pushouts induced by maps of spans.
    pub fn induced(&self, other: &Pushout, mx: &SortMap, my: &SortMap) -> SortMap {
        self.reps
            .iter()
            .enumerate()
            .map(|(s, r)| {
                r.iter()
                    .map(|&(right, c)| {
                        if right {
                            other.right[s][my[s][c]]
                        } else {
                            other.left[s][mx[s][c]]
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Subobject on the kept cells, with its inclusion.
pub fn subobject(d: &Diagram, keep: &[Vec<bool>]) -> Result<(Diagram, SortMap)> {
    let shape = d.shape.clone();
    let nsorts = shape.sorts.len();
    let mut incl: SortMap = Vec::with_capacity(nsorts);
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(nsorts);
    for s in 0..nsorts {
        let kept: Vec<usize> = (0..d.len(s)).filter(|&x| keep[s][x]).collect();
        let mut b = vec![usize::MAX; d.len(s)];
        for (i, &x) in kept.iter().enumerate() {
            b[x] = i;
        }
        incl.push(kept);
        back.push(b);
    }
    for (oi, op) in shape.ops.iter().enumerate() {
        for &x in &incl[op.src] {
            if !keep[op.dst][d.tables[oi][x]] {
                return Err(Error::Invalid(format!(
                    "subobject not closed under {:?} at {}",
                    op.key,
                    d.name(op.src, x)
                )));
            }
        }
    }
    let names = incl
        .iter()
        .enumerate()
        .map(|(s, k)| k.iter().map(|&x| d.name(s, x).to_string()).collect())
        .collect();
    let sub = Diagram::from_fn(shape.clone(), names, |key, c| {
        let op = &shape.ops[shape.op(key)];
        back[op.dst][d.apply(key, incl[op.src][c])]
    })?;
    Ok((sub, incl))
}

/// Image of a map as a subobject of its target.
pub fn image(tgt: &Diagram, map: &SortMap) -> Result<(Diagram, SortMap)> {
    let mut keep: Vec<Vec<bool>> = tgt.sizes().into_iter().map(|n| vec![false; n]).collect();
    for (s, t) in map.iter().enumerate() {
        for &v in t {
            keep[s][v] = true;
        }
    }
    subobject(tgt, &keep)
}

/// Search budget counting candidate assignments.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT: u64 = 1_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }
    pub fn used(&self) -> u64 {
        self.used
    }
    pub fn limit(&self) -> u64 {
        self.limit
    }
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Budget::DEFAULT)
    }
}

/// For each operator, the cells of the target lying over each value.
#[derive(Clone, Debug)]
pub struct FiberIndex {
    fibers: Vec<Vec<Vec<usize>>>,
}

impl FiberIndex {
    pub fn new(d: &Diagram) -> Self {
        let fibers = d
            .shape
            .ops
            .iter()
            .enumerate()
            .map(|(oi, op)| {
                let mut f = vec![Vec::new(); d.len(op.dst)];
                for (y, &z) in d.tables[oi].iter().enumerate() {
                    f[z].push(y);
                }
                f
            })
            .collect();
        FiberIndex { fibers }
    }
}

const UNSET: usize = usize::MAX;

/// Enumerates natural maps `source -> target` by backtracking with
/// propagation along operator tables.
///
/// Optional constraints: a partial pre-assignment, and an "over" condition
/// `p ∘ h = v` for given `p: target -> base`, `v: source -> base`.
pub struct HomSearch<'a> {
    source: &'a Diagram,
    target: &'a Diagram,
    index: std::borrow::Cow<'a, FiberIndex>,
    fixed: Vec<(usize, usize, usize)>,
    over: Option<(&'a SortMap, &'a SortMap)>,
    over_fibers: Option<Vec<Vec<Vec<usize>>>>,
    reverse: bool,
    order: Vec<(usize, usize)>,
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a Diagram, target: &'a Diagram) -> Result<Self> {
        Self::build(source, target, std::borrow::Cow::Owned(FiberIndex::new(target)))
    }

    pub fn with_index(source: &'a Diagram, target: &'a Diagram, index: &'a FiberIndex) -> Result<Self> {
        Self::build(source, target, std::borrow::Cow::Borrowed(index))
    }

    fn build(source: &'a Diagram, target: &'a Diagram, index: std::borrow::Cow<'a, FiberIndex>) -> Result<Self> {
        if source.kind() != target.kind() {
            return Err(Error::ShapeMismatch(format!("{} vs {}", source.kind(), target.kind())));
        }
        let shape = &source.shape;
        let mut sorts: Vec<usize> = (0..shape.sorts.len()).collect();
        sorts.sort_by_key(|&s| (shape.ranks[s], s));
        let order = sorts
            .into_iter()
            .flat_map(|s| (0..source.len(s)).map(move |x| (s, x)))
            .collect();
        Ok(HomSearch {
            source,
            target,
            index,
            fixed: Vec::new(),
            over: None,
            over_fibers: None,
            reverse: false,
            order,
        })
    }

    /// Requires `h(cell) = value` in the given sort.
    pub fn fix(mut self, sort: usize, cell: usize, value: usize) -> Self {
        self.fixed.push((sort, cell, value));
        self
    }

    /// Requires `h ∘ incl = partial` for a map `incl: A -> source`.
    pub fn fix_along(mut self, incl: &SortMap, partial: &SortMap) -> Self {
        for (s, t) in incl.iter().enumerate() {
            for (a, &x) in t.iter().enumerate() {
                self.fixed.push((s, x, partial[s][a]));
            }
        }
        self
    }

    /// Requires `p ∘ h = v`, with `p: target -> base` and `v: source -> base`.
    pub fn over(mut self, p: &'a SortMap, v: &'a SortMap, base_sizes: &[usize]) -> Self {
        let fibers = p
            .iter()
            .enumerate()
            .map(|(s, t)| {
                let mut f = vec![Vec::new(); base_sizes[s]];
                for (y, &b) in t.iter().enumerate() {
                    f[b].push(y);
                }
                f
            })
            .collect();
        self.over = Some((p, v));
        self.over_fibers = Some(fibers);
        self
    }

    /// Tries candidates in reverse order (independent re-verification).
    pub fn reversed(mut self) -> Self {
        self.reverse = true;
        self
    }

    /// Calls `visit` on each map until it returns `false`. Returns whether
    /// the enumeration ran to completion.
    pub fn for_each(&self, budget: &mut Budget, mut visit: impl FnMut(&SortMap) -> bool) -> Result<bool> {
        let mut st = State {
            assign: self.source.sizes().into_iter().map(|n| vec![UNSET; n]).collect(),
            trail: Vec::new(),
            queue: Vec::new(),
        };
        for &(s, x, v) in &self.fixed {
            if v >= self.target.len(s) || !self.assign_propagate(&mut st, s, x, v) {
                return Ok(true);
            }
        }
        let stopped = self.rec(0, &mut st, budget, &mut visit)?;
        Ok(!stopped)
    }

    pub fn first(&self, budget: &mut Budget) -> Result<Option<SortMap>> {
        let mut found = None;
        self.for_each(budget, |m| {
            found = Some(m.clone());
            false
        })?;
        Ok(found)
    }

    pub fn all(&self, budget: &mut Budget) -> Result<Vec<SortMap>> {
        let mut out = Vec::new();
        self.for_each(budget, |m| {
            out.push(m.clone());
            true
        })?;
        Ok(out)
    }

    pub fn count(&self, budget: &mut Budget) -> Result<usize> {
        let mut n = 0;
        self.for_each(budget, |_| {
            n += 1;
            true
        })?;
        Ok(n)
    }

    fn rec(
        &self,
        mut pos: usize,
        st: &mut State,
        budget: &mut Budget,
        visit: &mut impl FnMut(&SortMap) -> bool,
    ) -> Result<bool> {
        while pos < self.order.len() && st.assign[self.order[pos].0][self.order[pos].1] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            return Ok(!visit(&st.assign));
        }
        let (s, x) = self.order[pos];
        let cands = self.candidates(st, s, x);
        let n = cands.len();
        for j in 0..n {
            let y = if self.reverse { cands[n - 1 - j] } else { cands[j] };
            budget.tick()?;
            let mark = st.trail.len();
            if self.assign_propagate(st, s, x, y) && self.rec(pos + 1, st, budget, visit)? {
                return Ok(true);
            }
            while st.trail.len() > mark {
                let (ts, tx) = st.trail.pop().unwrap();
                st.assign[ts][tx] = UNSET;
            }
        }
        Ok(false)
    }

    fn candidates(&self, st: &State, s: usize, x: usize) -> Vec<usize> {
        let shape = &self.source.shape;
        let mut best: Option<&[usize]> = None;
        for &oi in &shape.ops_from[s] {
            let op = &shape.ops[oi];
            let z = st.assign[op.dst][self.source.tables[oi][x]];
            if z != UNSET {
                let f = &self.index.fibers[oi][z];
                if best.is_none_or(|b| f.len() < b.len()) {
                    best = Some(f);
                }
            }
        }
        if let (Some((_, v)), Some(of)) = (self.over, &self.over_fibers) {
            let f = &of[s][v[s][x]];
            if best.is_none_or(|b| f.len() < b.len()) {
                best = Some(f);
            }
        }
        match best {
            Some(b) => b.to_vec(),
            None => (0..self.target.len(s)).collect(),
        }
    }

    fn assign_propagate(&self, st: &mut State, s: usize, x: usize, y: usize) -> bool {
        let shape = &self.source.shape;
        st.queue.clear();
        match st.assign[s][x] {
            UNSET => {
                st.assign[s][x] = y;
                st.trail.push((s, x));
                st.queue.push((s, x));
            }
            v => return v == y,
        }
        while let Some((cs, cx)) = st.queue.pop() {
            let cy = st.assign[cs][cx];
            if let Some((p, v)) = self.over {
                if p[cs][cy] != v[cs][cx] {
                    return false;
                }
            }
            for &oi in &shape.ops_from[cs] {
                let op = &shape.ops[oi];
                let dx = self.source.tables[oi][cx];
                let dy = self.target.tables[oi][cy];
                match st.assign[op.dst][dx] {
                    UNSET => {
                        st.assign[op.dst][dx] = dy;
                        st.trail.push((op.dst, dx));
                        st.queue.push((op.dst, dx));
                    }
                    v if v != dy => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

struct State {
    assign: SortMap,
    trail: Vec<(usize, usize)>,
    queue: Vec<(usize, usize)>,
}

/// Finds an isomorphism between two diagrams if one exists.
pub fn find_isomorphism(a: &Diagram, b: &Diagram, budget: &mut Budget) -> Result<Option<SortMap>> {
    if a.kind() != b.kind() || a.sizes() != b.sizes() {
        return Ok(None);
    }
    let sizes = b.sizes();
    let mut found = None;
    HomSearch::new(a, b)?.for_each(budget, |m| {
        if is_injective(m, &sizes) {
            found = Some(m.clone());
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

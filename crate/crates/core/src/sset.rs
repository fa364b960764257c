//! Truncated simplicial sets and simplicial maps.

use std::collections::HashMap;

use crate::category::FinCategory;
use crate::category::FinGroupoid;
use crate::combinat::{monotone_maps, seq_label};
use crate::error::{Error, Result};
use crate::presheaf::{self, Diagram, OpKey, Shape, ShapeKind, SortMap};

/// A finite simplicial set truncated at level `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
    diagram: Diagram,
}

impl TruncatedSimplicialSet {
    /// Builds from explicit tables: `face[n][i]` for `1 ≤ n ≤ trunc` (index `n-1`)
    /// and `degen[n][i]` for `n < trunc`. Runs the simplicial identity audit.
    pub fn new(
        trunc: usize,
        cells: Vec<Vec<String>>,
        face: Vec<Vec<Vec<usize>>>,
        degen: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if cells.len() != trunc + 1 || face.len() != trunc || degen.len() != trunc {
            return Err(Error::Invalid(format!("tables do not match truncation {trunc}")));
        }
        for (idx, fs) in face.iter().enumerate() {
            if fs.len() != idx + 2 {
                return Err(Error::Invalid(format!("level {} needs {} face tables", idx + 1, idx + 2)));
            }
        }
        for (n, ds) in degen.iter().enumerate() {
            if ds.len() != n + 1 {
                return Err(Error::Invalid(format!("level {n} needs {} degeneracy tables", n + 1)));
            }
        }
        let shape = Shape::new(ShapeKind::Simplicial { trunc });
        let tables = shape
            .ops()
            .iter()
            .map(|op| match op.key {
                OpKey::Face { n, i } => face[n - 1][i].clone(),
                OpKey::Degen { n, i } => degen[n][i].clone(),
                _ => unreachable!(),
            })
            .collect();
        let x = Self::from_diagram(Diagram::new(shape, cells, tables)?)?;
        x.audit_identities()?;
        Ok(x)
    }

    pub fn from_diagram(diagram: Diagram) -> Result<Self> {
        match diagram.kind() {
            ShapeKind::Simplicial { .. } => Ok(TruncatedSimplicialSet { diagram }),
            k => Err(Error::ShapeMismatch(format!("expected a simplicial set, got {k}"))),
        }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }
    pub fn into_diagram(self) -> Diagram {
        self.diagram
    }

    pub fn trunc(&self) -> usize {
        match self.diagram.kind() {
            ShapeKind::Simplicial { trunc } => trunc,
            _ => unreachable!(),
        }
    }

    pub fn empty(trunc: usize) -> Self {
        TruncatedSimplicialSet { diagram: Diagram::empty(Shape::new(ShapeKind::Simplicial { trunc })) }
    }

    /// The discrete simplicial set on `names`: every level is a copy of it.
    pub fn discrete(names: &[String], trunc: usize) -> Self {
        let shape = Shape::new(ShapeKind::Simplicial { trunc });
        let cells = vec![names.to_vec(); trunc + 1];
        let d = Diagram::from_fn(shape, cells, |_, x| x).expect("identity tables");
        TruncatedSimplicialSet { diagram: d }
    }

    pub fn cells(&self, n: usize) -> &[String] {
        self.diagram.names(n)
    }
    pub fn len(&self, n: usize) -> usize {
        self.diagram.len(n)
    }
    pub fn sizes(&self) -> Vec<usize> {
        self.diagram.sizes()
    }
    pub fn is_empty(&self) -> bool {
        self.diagram.is_empty()
    }
    pub fn find(&self, n: usize, name: &str) -> Option<usize> {
        self.diagram.find(n, name)
    }

    /// `d_i` on level `n`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.diagram.apply(OpKey::Face { n, i }, x)
    }
    /// `s_i` on level `n`.
    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.diagram.apply(OpKey::Degen { n, i }, x)
    }
    pub fn face_table(&self, n: usize, i: usize) -> &[usize] {
        self.diagram.table_by_key(OpKey::Face { n, i })
    }
    pub fn degen_table(&self, n: usize, i: usize) -> &[usize] {
        self.diagram.table_by_key(OpKey::Degen { n, i })
    }

    /// Vertex `j` of an `n`-cell (via the last-vertex and first-vertex faces).
    pub fn vertex(&self, n: usize, x: usize, j: usize) -> usize {
        let mut cur = x;
        let mut level = n;
        // drop vertices above j
        for _ in j..n {
            cur = self.face(level, level, cur);
            level -= 1;
        }
        for _ in 0..j {
            cur = self.face(level, 0, cur);
            level -= 1;
        }
        cur
    }

    /// Checks every simplicial identity instance within truncation and
    /// returns the number of instances checked.
    pub fn audit_identities(&self) -> Result<usize> {
        let t = self.trunc();
        let mut count = 0;
        let fail = |name: &str, i: usize, j: usize, n: usize, x: usize| {
            Err(Error::Invalid(format!(
                "simplicial identity {name} fails for (i={i}, j={j}) at level {n} cell {}",
                self.cells(n)[x]
            )))
        };
        for n in 2..=t {
            for x in 0..self.len(n) {
                for j in 1..=n {
                    for i in 0..j {
                        count += 1;
                        let l = self.face(n - 1, i, self.face(n, j, x));
                        let r = self.face(n - 1, j - 1, self.face(n, i, x));
                        if l != r {
                            return fail("d_i d_j = d_{j-1} d_i", i, j, n, x);
                        }
                    }
                }
            }
        }
        for n in 0..t.saturating_sub(1) {
            for x in 0..self.len(n) {
                for j in 0..=n {
                    for i in 0..=j {
                        count += 1;
                        let l = self.degen(n + 1, i, self.degen(n, j, x));
                        let r = self.degen(n + 1, j + 1, self.degen(n, i, x));
                        if l != r {
                            return fail("s_i s_j = s_{j+1} s_i", i, j, n, x);
                        }
                    }
                }
            }
        }
        // d_i s_j on level n+1 with x in level n
        for n in 0..t {
            for x in 0..self.len(n) {
                for j in 0..=n {
                    let sx = self.degen(n, j, x);
                    for i in 0..=n + 1 {
                        count += 1;
                        let l = self.face(n + 1, i, sx);
                        let r = if i == j || i == j + 1 {
                            Some(x)
                        } else if n == 0 {
                            None
                        } else if i < j {
                            Some(self.degen(n - 1, j - 1, self.face(n, i, x)))
                        } else {
                            Some(self.degen(n - 1, j, self.face(n, i - 1, x)))
                        };
                        if let Some(r) = r {
                            if l != r {
                                return fail("d_i s_j", i, j, n, x);
                            }
                        }
                    }
                }
            }
        }
        Ok(count)
    }

    /// Whether the `n`-cell is in the image of some degeneracy.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        if n == 0 {
            return false;
        }
        (0..n).any(|i| self.degen(n - 1, i, self.face(n, i, x)) == x)
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.len(n)).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// Restriction to levels `0..=k`.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.trunc() {
            return Err(Error::TruncationMismatch(format!("{k}"), format!("{}", self.trunc())));
        }
        let names = (0..=k).map(|n| self.cells(n).to_vec()).collect();
        let shape = Shape::new(ShapeKind::Simplicial { trunc: k });
        let d = Diagram::from_fn(shape, names, |key, x| self.diagram.apply(key, x))?;
        Self::from_diagram(d)
    }

    pub fn renamed(&self, f: impl FnMut(usize, &str) -> String) -> Result<Self> {
        Self::from_diagram(self.diagram.renamed(f)?)
    }
}

/// A map of truncated simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: TruncatedSimplicialSet,
    pub target: TruncatedSimplicialSet,
    pub level: SortMap,
}

impl SimplicialMap {
    pub fn new(source: TruncatedSimplicialSet, target: TruncatedSimplicialSet, level: SortMap) -> Result<Self> {
        if source.trunc() != target.trunc() {
            return Err(Error::TruncationMismatch(
                format!("{}", source.trunc()),
                format!("{}", target.trunc()),
            ));
        }
        presheaf::check_natural(source.diagram(), target.diagram(), &level)?;
        Ok(SimplicialMap { source, target, level })
    }

    pub fn identity(x: &TruncatedSimplicialSet) -> Self {
        SimplicialMap { source: x.clone(), target: x.clone(), level: presheaf::identity_map(x.diagram()) }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SimplicialMap) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::ShapeMismatch("maps are not composable".into()));
        }
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: next.target.clone(),
            level: presheaf::compose(&self.level, &next.level),
        })
    }

    pub fn is_levelwise_bijection(&self) -> bool {
        presheaf::is_bijective(&self.level, &self.target.sizes())
    }
    pub fn is_injective(&self) -> bool {
        presheaf::is_injective(&self.level, &self.target.sizes())
    }
}

/// `Δ[n]` truncated at `trunc`: `k`-cells are monotone maps `[k] -> [n]`
/// in lexicographic order, named by their value sequence.
pub fn standard_simplex(n: usize, trunc: usize) -> TruncatedSimplicialSet {
    let cells: Vec<Vec<Vec<usize>>> = (0..=trunc).map(|k| monotone_maps(k, n)).collect();
    from_sequences(trunc, &cells)
}

/// Simplicial set whose cells are value sequences, with faces deleting and
/// degeneracies repeating an entry. Every sequence family closed under those
/// operations is valid.
pub(crate) fn from_sequences(trunc: usize, cells: &[Vec<Vec<usize>>]) -> TruncatedSimplicialSet {
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        cells.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c, i)).collect()).collect();
    let names = cells.iter().map(|cs| cs.iter().map(|c| seq_label(c)).collect()).collect();
    let shape = Shape::new(ShapeKind::Simplicial { trunc });
    let d = Diagram::from_fn(shape, names, |key, x| match key {
        OpKey::Face { n, i } => {
            let mut c = cells[n][x].clone();
            c.remove(i);
            index[n - 1][&c]
        }
        OpKey::Degen { n, i } => {
            let mut c = cells[n][x].clone();
            c.insert(i, c[i]);
            index[n + 1][&c]
        }
        _ => unreachable!(),
    })
    .expect("sequence family is closed");
    TruncatedSimplicialSet { diagram: d }
}

/// Subobject of `Δ[n]` on the monotone maps satisfying `keep`, with its inclusion.
fn simplex_subobject(
    n: usize,
    trunc: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> (TruncatedSimplicialSet, SimplicialMap) {
    let full = standard_simplex(n, trunc);
    let mask: Vec<Vec<bool>> = (0..=trunc).map(|k| monotone_maps(k, n).iter().map(|a| keep(a)).collect()).collect();
    let (sub, incl) = presheaf::subobject(full.diagram(), &mask).expect("faces of kept cells are kept");
    let sub = TruncatedSimplicialSet { diagram: sub };
    let map = SimplicialMap { source: sub.clone(), target: full, level: incl };
    (sub, map)
}

fn misses(a: &[usize], v: usize) -> bool {
    !a.contains(&v)
}

/// `∂Δ[n]` with its inclusion into `Δ[n]`; empty for `n = 0`.
pub fn boundary(n: usize, trunc: usize) -> (TruncatedSimplicialSet, SimplicialMap) {
    simplex_subobject(n, trunc, |a| (0..=n).any(|v| misses(a, v)))
}

/// The horn `V[n,k]` (all faces but the `k`-th) with its inclusion into `Δ[n]`.
pub fn horn(n: usize, k: usize, trunc: usize) -> Result<(TruncatedSimplicialSet, SimplicialMap)> {
    if n == 0 || k > n {
        return Err(Error::OutOfRange(format!("horn({n}, {k})")));
    }
    Ok(simplex_subobject(n, trunc, |a| (0..=n).any(|v| v != k && misses(a, v))))
}

/// Nerve of a finite category: `n`-cells are composable strings
/// `x0 -f1-> x1 -> ... -fn-> xn`, named `f1|...|fn`, ordered lexicographically.
pub fn nerve_category(c: &FinCategory, trunc: usize) -> TruncatedSimplicialSet {
    let strings = composable_strings(c, trunc);
    let index: Vec<HashMap<&Vec<usize>, usize>> =
        strings.iter().map(|cs| cs.iter().enumerate().map(|(i, s)| (s, i)).collect()).collect();
    let names = strings
        .iter()
        .enumerate()
        .map(|(n, cs)| {
            cs.iter()
                .map(|s| {
                    if n == 0 {
                        c.objects()[s[0]].clone()
                    } else {
                        s.iter().map(|&m| c.morphisms()[m].name.as_str()).collect::<Vec<_>>().join("|")
                    }
                })
                .collect()
        })
        .collect();
    let shape = Shape::new(ShapeKind::Simplicial { trunc });
    let d = Diagram::from_fn(shape, names, |key, x| match key {
        OpKey::Face { n, i } => {
            let s = &strings[n][x];
            let t: Vec<usize> = if n == 1 {
                vec![if i == 0 { c.cod(s[0]) } else { c.dom(s[0]) }]
            } else if i == 0 {
                s[1..].to_vec()
            } else if i == n {
                s[..n - 1].to_vec()
            } else {
                let mut t = s[..i - 1].to_vec();
                t.push(c.compose(s[i], s[i - 1]));
                t.extend_from_slice(&s[i + 1..]);
                t
            };
            index[n - 1][&t]
        }
        OpKey::Degen { n, i } => {
            let s = &strings[n][x];
            let t: Vec<usize> = if n == 0 {
                vec![c.identity(s[0])]
            } else {
                let v = if i == 0 { c.dom(s[0]) } else { c.cod(s[i - 1]) };
                let mut t = s.clone();
                t.insert(i, c.identity(v));
                t
            };
            index[n + 1][&t]
        }
        _ => unreachable!(),
    })
    .expect("nerve tables are total");
    TruncatedSimplicialSet { diagram: d }
}

/// Composable strings by level; level 0 holds `[object]`.
pub fn composable_strings(c: &FinCategory, trunc: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![(0..c.num_objects()).map(|o| vec![o]).collect::<Vec<_>>()];
    if trunc >= 1 {
        out.push((0..c.num_morphisms()).map(|m| vec![m]).collect());
    }
    for _ in 2..=trunc {
        let prev = out.last().unwrap();
        let mut next = Vec::new();
        for s in prev {
            let end = c.cod(*s.last().unwrap());
            for &g in c.out_of(end) {
                let mut t = s.clone();
                t.push(g);
                next.push(t);
            }
        }
        out.push(next);
    }
    out
}

/// `E`: the nerve of the walking isomorphism.
pub fn walking_iso_nerve(trunc: usize) -> TruncatedSimplicialSet {
    nerve_category(&FinGroupoid::walking_iso().cat, trunc)
}

fn same_trunc(a: &TruncatedSimplicialSet, b: &TruncatedSimplicialSet) -> Result<()> {
    if a.trunc() != b.trunc() {
        return Err(Error::TruncationMismatch(format!("{}", a.trunc()), format!("{}", b.trunc())));
    }
    Ok(())
}

/// Product with its projections.
pub fn product(
    x: &TruncatedSimplicialSet,
    y: &TruncatedSimplicialSet,
) -> Result<(TruncatedSimplicialSet, SimplicialMap, SimplicialMap)> {
    same_trunc(x, y)?;
    let lim = presheaf::product(x.diagram(), y.diagram())?;
    let p = TruncatedSimplicialSet { diagram: lim.diagram };
    let px = SimplicialMap { source: p.clone(), target: x.clone(), level: lim.projections[0].clone() };
    let py = SimplicialMap { source: p.clone(), target: y.clone(), level: lim.projections[1].clone() };
    Ok((p, px, py))
}

/// Pullback of `X -f-> Z <-g- Y` with its legs.
pub fn pullback(
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<(TruncatedSimplicialSet, SimplicialMap, SimplicialMap)> {
    same_trunc(&f.source, &g.source)?;
    if f.target != g.target {
        return Err(Error::ShapeMismatch("pullback legs have different codomains".into()));
    }
    let lim = presheaf::pullback(f.source.diagram(), &f.level, g.source.diagram(), &g.level)?;
    let p = TruncatedSimplicialSet { diagram: lim.diagram };
    let l = SimplicialMap { source: p.clone(), target: f.source.clone(), level: lim.projections[0].clone() };
    let r = SimplicialMap { source: p.clone(), target: g.source.clone(), level: lim.projections[1].clone() };
    Ok((p, l, r))
}

/// Pushout of `X <-f- A -g-> Y` with its legs.
pub fn pushout(
    f: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<(TruncatedSimplicialSet, SimplicialMap, SimplicialMap)> {
    same_trunc(&f.target, &g.target)?;
    if f.source != g.source {
        return Err(Error::ShapeMismatch("pushout legs have different domains".into()));
    }
    let po = presheaf::pushout(f.source.diagram(), f.target.diagram(), &f.level, g.target.diagram(), &g.level)?;
    let p = TruncatedSimplicialSet { diagram: po.diagram };
    let l = SimplicialMap { source: f.target.clone(), target: p.clone(), level: po.left };
    let r = SimplicialMap { source: g.target.clone(), target: p.clone(), level: po.right };
    Ok((p, l, r))
}

pub fn coproduct(x: &TruncatedSimplicialSet, y: &TruncatedSimplicialSet) -> Result<TruncatedSimplicialSet> {
    same_trunc(x, y)?;
    Ok(TruncatedSimplicialSet { diagram: presheaf::coproduct(x.diagram(), y.diagram())?.diagram })
}

/// Path components of the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Component index of each vertex.
    pub class: Vec<usize>,
    /// Least vertex of each component, in increasing order.
    pub reps: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.reps.len()
    }
}

pub fn pi0(x: &TruncatedSimplicialSet) -> Result<Components> {
    if x.trunc() == 0 {
        return Err(Error::OutOfRange("pi0 needs truncation at least 1".into()));
    }
    let n = x.len(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for e in 0..x.len(1) {
        let (a, b) = (root(&mut parent, x.face(1, 0, e)), root(&mut parent, x.face(1, 1, e)));
        let (lo, hi) = (a.min(b), a.max(b));
        parent[hi] = lo;
    }
    let mut reps = Vec::new();
    let mut class = vec![0; n];
    let mut of_root = HashMap::new();
    for v in 0..n {
        let r = root(&mut parent, v);
        let c = *of_root.entry(r).or_insert_with(|| {
            reps.push(v);
            reps.len() - 1
        });
        class[v] = c;
    }
    Ok(Components { class, reps })
}

/// The map on components induced by `f`.
pub fn pi0_map(f: &SimplicialMap) -> Result<(Components, Components, Vec<usize>)> {
    let a = pi0(&f.source)?;
    let b = pi0(&f.target)?;
    let m = a.reps.iter().map(|&v| b.class[f.level[0][v]]).collect();
    Ok((a, b, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinGroup;

    #[test]
    fn simplex_counts() {
        assert!(standard_simplex(0, 2).sizes().iter().all(|&s| s == 1));
        assert_eq!(standard_simplex(1, 2).len(2), 4);
        assert_eq!(standard_simplex(3, 2).len(1), 10);
        standard_simplex(3, 3).audit_identities().unwrap();
    }

    #[test]
    fn boundary_and_horn() {
        let (b1, _) = boundary(1, 2);
        assert_eq!(b1.len(0), 2);
        assert!(b1.nondegenerate(1).is_empty());
        let (h, _) = horn(2, 1, 2).unwrap();
        assert_eq!(h.nondegenerate(1).len(), 2);
        let (b2, _) = boundary(2, 2);
        assert_eq!(b2.nondegenerate(1).len(), 3);
        assert_eq!(b2.nondegenerate(2).len(), 0);
        assert!(boundary(0, 2).0.is_empty());
        assert!(horn(2, 3, 2).is_err());
    }

    #[test]
    fn nerves() {
        let t = nerve_category(&FinCategory::terminal(), 3);
        assert!(t.sizes().iter().all(|&s| s == 1));
        let z2 = FinGroupoid::from_group(&FinGroup::cyclic(2), "*");
        let n = nerve_category(&z2.cat, 3);
        assert_eq!(n.sizes(), vec![1, 2, 4, 8]);
        n.audit_identities().unwrap();
        assert_eq!(nerve_category(&FinCategory::walking_arrow(), 2).len(2), 4);
        assert_eq!(walking_iso_nerve(2).sizes(), vec![2, 4, 8]);
    }

    #[test]
    fn circle_pushout() {
        let (b, incl) = boundary(1, 2);
        let pt = standard_simplex(0, 2);
        let collapse = SimplicialMap::new(b.clone(), pt, vec![vec![0; b.len(0)], vec![0; b.len(1)], vec![0; b.len(2)]])
            .unwrap();
        let (c, _, _) = pushout(&incl, &collapse).unwrap();
        assert_eq!(c.len(0), 1);
        assert_eq!(c.nondegenerate(1).len(), 1);
        c.audit_identities().unwrap();
    }

    #[test]
    fn components() {
        assert_eq!(pi0(&standard_simplex(2, 2)).unwrap().count(), 1);
        assert_eq!(pi0(&boundary(1, 2).0).unwrap().count(), 2);
        assert_eq!(pi0(&walking_iso_nerve(2)).unwrap().count(), 1);
        assert!(pi0(&standard_simplex(1, 0)).is_err());
    }

    #[test]
    fn vertices_of_cells() {
        let d = standard_simplex(3, 3);
        let x = d.find(3, "0123").unwrap();
        let vs: Vec<&str> = (0..4).map(|j| d.cells(0)[d.vertex(3, x, j)].as_str()).collect();
        assert_eq!(vs, vec!["0", "1", "2", "3"]);
    }
}

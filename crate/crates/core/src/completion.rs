//! Groupoid completions presented by generators and relations.

use crate::category::{FinCategory, FinGroupoid, Morphism};
use crate::error::{Error, Result};
use crate::presheaf::Budget;

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A path in the generator graph, read left to right (first letter first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub start: usize,
    pub letters: Vec<Letter>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidPresentation {
    pub objects: Vec<String>,
    pub generators: Vec<Morphism>,
    pub relations: Vec<(Word, Word)>,
    /// Set when the presentation is the free groupoid on its graph.
    free: bool,
}

impl GroupoidPresentation {
    pub fn new(objects: Vec<String>, generators: Vec<Morphism>, relations: Vec<(Word, Word)>) -> Result<Self> {
        let p = GroupoidPresentation { objects, generators, relations, free: false };
        for (l, r) in &p.relations {
            let (a, b) = (p.endpoints(l)?, p.endpoints(r)?);
            if a != b {
                return Err(Error::Invalid("relation sides have different endpoints".into()));
            }
        }
        Ok(p)
    }

    /// The free groupoid on a directed graph.
    pub fn free(objects: Vec<String>, generators: Vec<Morphism>) -> Result<Self> {
        if generators.iter().any(|g| g.dom >= objects.len() || g.cod >= objects.len()) {
            return Err(Error::Invalid("edge endpoint out of range".into()));
        }
        Ok(GroupoidPresentation { objects, generators, relations: Vec::new(), free: true })
    }

    pub fn is_free(&self) -> bool {
        self.free
    }

    fn letter_ends(&self, l: Letter) -> (usize, usize) {
        let g = &self.generators[l.generator];
        if l.inverse {
            (g.cod, g.dom)
        } else {
            (g.dom, g.cod)
        }
    }

    /// `(source, target)` of a well-typed word.
    pub fn endpoints(&self, w: &Word) -> Result<(usize, usize)> {
        let mut at = w.start;
        for &l in &w.letters {
            if l.generator >= self.generators.len() {
                return Err(Error::Invalid("unknown generator".into()));
            }
            let (s, t) = self.letter_ends(l);
            if s != at {
                return Err(Error::Invalid("word is not a path".into()));
            }
            at = t;
        }
        Ok((w.start, at))
    }

    /// Freely reduced form (adjacent `g g⁻¹` cancelled). In a free
    /// groupoid two words are equal iff their reduced forms are.
    pub fn reduce(&self, w: &Word) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
        for &l in &w.letters {
            match out.last() {
                Some(&p) if p.generator == l.generator && p.inverse != l.inverse => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { start: w.start, letters: out }
    }

    /// Decides equality of words; only available for free presentations.
    pub fn words_equal(&self, a: &Word, b: &Word) -> Option<bool> {
        if !self.free {
            return None;
        }
        Some(self.reduce(a) == self.reduce(b))
    }

    /// Evaluates a word in `H` under an assignment of generators.
    pub fn evaluate(&self, h: &FinGroupoid, objects: &[usize], gens: &[usize], w: &Word) -> usize {
        let mut acc = h.cat.identity(objects[w.start]);
        for &l in &w.letters {
            let m = if l.inverse { h.inverse(gens[l.generator]) } else { gens[l.generator] };
            acc = h.cat.compose(m, acc);
        }
        acc
    }
}

/// Presentation of the groupoid completion of `C`: generators are the
/// morphisms of `C`, relations the composition table and identities.
pub fn groupoid_completion(c: &FinCategory) -> GroupoidPresentation {
    let letter = |m: usize| Letter { generator: m, inverse: false };
    let mut relations = Vec::new();
    for (g, f, h) in c.composable_pairs() {
        relations.push((
            Word { start: c.dom(f), letters: vec![letter(f), letter(g)] },
            Word { start: c.dom(f), letters: vec![letter(h)] },
        ));
    }
    for x in 0..c.num_objects() {
        relations.push((
            Word { start: x, letters: vec![letter(c.identity(x))] },
            Word { start: x, letters: Vec::new() },
        ));
    }
    GroupoidPresentation::new(c.objects().to_vec(), c.morphisms().to_vec(), relations)
        .expect("composition table is well typed")
}

/// A functor out of a presentation: object images and generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationFunctor {
    pub objects: Vec<usize>,
    pub generators: Vec<usize>,
}

/// All functors from the presented groupoid into `H`.
pub fn completion_hom_eval(
    p: &GroupoidPresentation,
    h: &FinGroupoid,
    budget: &mut Budget,
) -> Result<Vec<PresentationFunctor>> {
    let mut out = Vec::new();
    let mut objs = vec![0; p.objects.len()];
    rec_objects(p, h, 0, &mut objs, budget, &mut out)?;
    Ok(out)
}

fn rec_objects(
    p: &GroupoidPresentation,
    h: &FinGroupoid,
    i: usize,
    objs: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<PresentationFunctor>,
) -> Result<()> {
    if i == objs.len() {
        let mut gens = Vec::with_capacity(p.generators.len());
        return rec_gens(p, h, objs, &mut gens, budget, out);
    }
    for o in 0..h.cat.num_objects() {
        budget.tick()?;
        objs[i] = o;
        rec_objects(p, h, i + 1, objs, budget, out)?;
    }
    Ok(())
}

fn rec_gens(
    p: &GroupoidPresentation,
    h: &FinGroupoid,
    objs: &[usize],
    gens: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<PresentationFunctor>,
) -> Result<()> {
    let i = gens.len();
    // relations whose generators are all assigned and that mention i - 1
    let settled = |gens: &[usize]| {
        p.relations.iter().all(|(l, r)| {
            let top = l.letters.iter().chain(&r.letters).map(|x| x.generator).max();
            match top {
                Some(t) if t + 1 == gens.len() => {
                    p.evaluate(h, objs, gens, l) == p.evaluate(h, objs, gens, r)
                }
                _ => true,
            }
        })
    };
    if i == p.generators.len() {
        let ok = p
            .relations
            .iter()
            .filter(|(l, r)| l.letters.is_empty() && r.letters.is_empty())
            .all(|(l, r)| p.evaluate(h, objs, gens, l) == p.evaluate(h, objs, gens, r));
        if ok {
            out.push(PresentationFunctor { objects: objs.to_vec(), generators: gens.clone() });
        }
        return Ok(());
    }
    let g = &p.generators[i];
    for &m in h.cat.hom(objs[g.dom], objs[g.cod]) {
        budget.tick()?;
        gens.push(m);
        if settled(gens) {
            rec_gens(p, h, objs, gens, budget, out)?;
        }
        gens.pop();
    }
    Ok(())
}

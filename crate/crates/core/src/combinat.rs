//! Enumeration of maps between finite ordinals.
//!
//! A function `[k] -> [n]` is stored as the vector of its values.

/// All monotone functions `[k] -> [n]`, in lexicographic order.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k + 1);
    fn rec(k: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(k, n, v, cur, out);
            cur.pop();
        }
    }
    rec(k, n, 0, &mut cur, &mut out);
    out
}

/// All functions `[k] -> [n]`, in lexicographic order.
pub fn all_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; k + 1];
    loop {
        out.push(cur.clone());
        let mut pos = k + 1;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < n {
                cur[pos] += 1;
                for c in cur.iter_mut().skip(pos + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

pub fn is_monotone(f: &[usize]) -> bool {
    f.windows(2).all(|w| w[0] <= w[1])
}

pub fn is_surjective(f: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n + 1];
    for &v in f {
        hit[v] = true;
    }
    hit.into_iter().all(|h| h)
}

/// `f ∘ g`, where `g: [j] -> [k]` and `f: [k] -> [n]`.
pub fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

/// Coface `δ^i: [n-1] -> [n]` skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j < i { j } else { j + 1 }).collect()
}

/// Codegeneracy `σ^i: [n+1] -> [n]` hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect()
}

/// Adjacent transposition of `[n]` swapping `i` and `i+1`.
pub fn transposition(n: usize, i: usize) -> Vec<usize> {
    (0..=n)
        .map(|j| {
            if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            }
        })
        .collect()
}

/// Binomial coefficient.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Label for a sequence of small integers: digits when all are `< 10`,
/// comma separated otherwise.
pub fn seq_label(seq: &[usize]) -> String {
    if seq.iter().all(|&v| v < 10) {
        seq.iter().map(|v| char::from(b'0' + *v as u8)).collect()
    } else {
        seq.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// One step in the generator word for the action of a function on an
/// `IΔ`-presheaf, applied left to right to a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionStep {
    /// `d_i` on the current level.
    Face(usize),
    /// `s_i` on the current level.
    Degen(usize),
    /// `t_i` on the current level.
    Transpose(usize),
}

/// Tie-breaking rule used when a function is factored as a monotone map
/// after a permutation. Both rules must yield the same action on any
/// coherent symmetric object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// Stable sort, transpositions bubbled from the left.
    Left,
    /// Reverse tie order, transpositions bubbled from the right.
    Right,
}

/// Word of generators computing `α^*: X_n -> X_k` for `α: [k] -> [n]`.
///
/// `α = β ∘ π` with `β` monotone and `π` a permutation; `α^* = π^* β^*`.
/// The word for `β^*` is faces (top down) then degeneracies (left to right);
/// the word for `π^*` is a product of adjacent transpositions.
pub fn action_word(alpha: &[usize], n: usize, how: Factorization) -> Vec<ActionStep> {
    let k = alpha.len() - 1;
    // sort order σ: position j of the sorted list holds index σ[j] of α
    let mut sigma: Vec<usize> = (0..=k).collect();
    match how {
        Factorization::Left => sigma.sort_by_key(|&j| alpha[j]),
        Factorization::Right => sigma.sort_by(|&a, &b| alpha[a].cmp(&alpha[b]).then(b.cmp(&a))),
    }
    let beta: Vec<usize> = sigma.iter().map(|&j| alpha[j]).collect();
    // π = σ^{-1}
    let mut pi = vec![0; k + 1];
    for (j, &s) in sigma.iter().enumerate() {
        pi[s] = j;
    }
    let mut word = Vec::new();
    // β = ι ∘ ρ with ι injective monotone onto the image, ρ surjective
    let mut image: Vec<usize> = beta.clone();
    image.dedup();
    for v in (0..=n).rev() {
        if !image.contains(&v) {
            word.push(ActionStep::Face(v));
        }
    }
    let rho: Vec<usize> = beta
        .iter()
        .map(|b| image.iter().position(|v| v == b).unwrap())
        .collect();
    for j in 0..k {
        if rho[j] == rho[j + 1] {
            word.push(ActionStep::Degen(j));
        }
    }
    // permutation: the current cell `c` equals `x ∘ L`; bring L to π.
    let mut l: Vec<usize> = (0..=k).collect();
    match how {
        Factorization::Left => {
            for j in 0..=k {
                let p = l.iter().position(|&v| v == pi[j]).unwrap();
                for q in (j..p).rev() {
                    l.swap(q, q + 1);
                    word.push(ActionStep::Transpose(q));
                }
            }
        }
        Factorization::Right => {
            for j in (0..=k).rev() {
                let p = l.iter().position(|&v| v == pi[j]).unwrap();
                for q in p..j {
                    l.swap(q, q + 1);
                    word.push(ActionStep::Transpose(q));
                }
            }
        }
    }
    word
}

/// Applies an action word to a function `x: [n] -> S` (the model case
/// `x ∘ α`). Used to validate [`action_word`].
pub fn apply_word_to_function(x: &[usize], word: &[ActionStep]) -> Vec<usize> {
    let mut cur = x.to_vec();
    for step in word {
        match *step {
            ActionStep::Face(i) => {
                cur.remove(i);
            }
            ActionStep::Degen(i) => {
                let v = cur[i];
                cur.insert(i, v);
            }
            ActionStep::Transpose(i) => cur.swap(i, i + 1),
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monotone_maps(2, 1).len(), 4);
        assert_eq!(monotone_maps(1, 3).len(), 10);
        assert_eq!(all_maps(1, 2).len(), 9);
        for n in 0..5 {
            for k in 0..5 {
                assert_eq!(monotone_maps(k, n).len(), binomial(n + k + 1, k + 1));
                assert_eq!(all_maps(k, n).len(), (n + 1).pow(k as u32 + 1));
            }
        }
    }

    #[test]
    fn action_words_compute_precomposition() {
        for n in 0..4 {
            for k in 0..4 {
                let x: Vec<usize> = (0..=n).map(|v| 10 + v).collect();
                for alpha in all_maps(k, n) {
                    let expect = compose(&x, &alpha);
                    for how in [Factorization::Left, Factorization::Right] {
                        let w = action_word(&alpha, n, how);
                        assert_eq!(apply_word_to_function(&x, &w), expect, "{alpha:?} {how:?}");
                    }
                }
            }
        }
    }
}

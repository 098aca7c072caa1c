//! Backtracking search for homomorphisms out of a finite group.
//!
//! A map is fixed by the images of a generating set. Images are assigned one
//! generator at a time; after each assignment the partial map is extended by
//! breadth-first search over the subgroup generated so far, and the branch is
//! cut as soon as two paths to the same element disagree or, for injective
//! searches, two elements collide on their key.

use std::ops::ControlFlow;

use crate::group::FiniteGroup;

/// Codomain of a homomorphism search.
pub(crate) trait Target {
    type El: Clone + PartialEq;

    fn identity(&self) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Key that must be distinct across the image, or `None` for searches
    /// that allow non-injective maps.
    fn key(&self, a: &Self::El) -> Option<usize>;
    fn key_space(&self) -> usize;
}

/// Group-table codomain.
pub(crate) struct TableTarget<'a> {
    pub group: &'a FiniteGroup,
    pub injective: bool,
}

impl Target for TableTarget<'_> {
    type El = usize;

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.group.mul(*a, *b)
    }

    fn key(&self, a: &usize) -> Option<usize> {
        self.injective.then_some(*a)
    }

    fn key_space(&self) -> usize {
        self.group.order()
    }
}

/// Extends generator images to the subgroup they generate.
///
/// Returns the partial map (indexed by source element, `None` outside the
/// generated subgroup) or `None` if the images do not define a homomorphism
/// (or collide on a key).
pub(crate) fn extend<T: Target>(
    src: &FiniteGroup,
    gens: &[usize],
    images: &[T::El],
    target: &T,
) -> Option<Vec<Option<T::El>>> {
    let n = src.order();
    let mut map: Vec<Option<T::El>> = vec![None; n];
    let mut used = vec![false; target.key_space()];
    let id = target.identity();
    if let Some(k) = target.key(&id) {
        used[k] = true;
    }
    map[0] = Some(id);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (g, img_g) in gens.iter().zip(images) {
            let y = src.mul(x, *g);
            let img = target.mul(map[x].as_ref().expect("visited"), img_g);
            match &map[y] {
                Some(existing) => {
                    if *existing != img {
                        return None;
                    }
                }
                None => {
                    if let Some(k) = target.key(&img) {
                        if used[k] {
                            return None;
                        }
                        used[k] = true;
                    }
                    map[y] = Some(img);
                    queue.push(y);
                }
            }
        }
    }
    Some(map)
}

/// Visits every homomorphism `src -> target` determined by `gens`, with the
/// image of `gens[i]` drawn from `candidates[i]` in the given order.
///
/// `gens` must generate `src`; the visitor receives the full map.
pub(crate) fn search<T: Target>(
    src: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<T::El>],
    target: &T,
    visit: &mut dyn FnMut(Vec<T::El>) -> ControlFlow<()>,
) {
    debug_assert_eq!(gens.len(), candidates.len());
    let mut chosen: Vec<T::El> = Vec::with_capacity(gens.len());
    let _ = descend(src, gens, candidates, target, &mut chosen, visit);
}

fn descend<T: Target>(
    src: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<T::El>],
    target: &T,
    chosen: &mut Vec<T::El>,
    visit: &mut dyn FnMut(Vec<T::El>) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let depth = chosen.len();
    if depth == gens.len() {
        // Only reached for the trivial group (no generators).
        return visit(vec![target.identity()]);
    }
    for cand in &candidates[depth] {
        chosen.push(cand.clone());
        if let Some(map) = extend(src, &gens[..=depth], chosen, target) {
            if depth + 1 == gens.len() {
                let full: Vec<T::El> = map
                    .into_iter()
                    .map(|m| m.expect("generators span the group"))
                    .collect();
                if visit(full).is_break() {
                    chosen.pop();
                    return ControlFlow::Break(());
                }
            } else if descend(src, gens, candidates, target, chosen, visit).is_break() {
                chosen.pop();
                return ControlFlow::Break(());
            }
        }
        chosen.pop();
    }
    ControlFlow::Continue(())
}

use super::Semimatroid;
use crate::subset::Subset;

/// Per-element invariant preserved by any isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    singleton_rank: Option<u32>,
    degree: usize,
    rank_sum: u64,
}

fn profiles(s: &Semimatroid) -> Vec<Profile> {
    let mut out: Vec<Profile> = (0..s.n())
        .map(|e| Profile {
            singleton_rank: s.rank_of(Subset::singleton(e)),
            degree: 0,
            rank_sum: 0,
        })
        .collect();
    for (x, r) in s.central_ranks() {
        for e in x.iter() {
            out[e].degree += 1;
            out[e].rank_sum += r as u64;
        }
    }
    out
}

impl Semimatroid {
    /// Whether a bijection of ground sets maps `C1` onto `C2` preserving rank.
    ///
    /// Backtracking over permutations, pruned by per-element profiles and by
    /// checking each central set as soon as all its elements are assigned.
    /// Intended for ground sets of about ten elements.
    pub fn is_isomorphic(&self, other: &Semimatroid) -> bool {
        self.find_isomorphism(other).is_some()
    }

    /// A permutation `perm` with `other = self` relabelled by `perm`, if any.
    pub fn find_isomorphism(&self, other: &Semimatroid) -> Option<Vec<usize>> {
        let n = self.n();
        if n != other.n()
            || self.num_central() != other.num_central()
            || self.semimatroid_rank() != other.semimatroid_rank()
        {
            return None;
        }
        let p1 = profiles(self);
        let p2 = profiles(other);
        let mut sorted1 = p1.clone();
        let mut sorted2 = p2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
        // Central sets of `self`, bucketed by their largest element.
        let mut by_max: Vec<Vec<(Subset, u32)>> = vec![Vec::new(); n];
        for (x, r) in self.central_ranks() {
            if let Some(m) = x.max() {
                by_max[m].push((x, r));
            }
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if search(0, other, &p1, &p2, &by_max, &mut perm, &mut used) {
            Some(perm)
        } else {
            None
        }
    }

    /// Relabel elements: element `e` becomes `perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Semimatroid {
        let ranks = self
            .central_ranks()
            .map(|(x, r)| (x.map(perm), r))
            .collect();
        let ground = match self.ground().labels() {
            Some(labels) => {
                let mut new = vec![String::new(); self.n()];
                for (e, &img) in perm.iter().enumerate() {
                    new[img] = labels[e].clone();
                }
                crate::subset::GroundSet::with_labels(new)
            }
            None => self.ground().clone(),
        };
        Semimatroid::from_map_unchecked(ground, ranks)
    }
}

fn search(
    k: usize,
    other: &Semimatroid,
    p1: &[Profile],
    p2: &[Profile],
    by_max: &[Vec<(Subset, u32)>],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if k == perm.len() {
        // Injective on sets, same count: the image is all of C2.
        return true;
    }
    for target in 0..perm.len() {
        if used[target] || p1[k] != p2[target] {
            continue;
        }
        perm[k] = target;
        used[target] = true;
        let consistent = by_max[k]
            .iter()
            .all(|&(x, r)| other.rank_of(x.map(perm)) == Some(r));
        if consistent && search(k + 1, other, p1, p2, by_max, perm, used) {
            return true;
        }
        used[target] = false;
    }
    perm[k] = usize::MAX;
    false
}

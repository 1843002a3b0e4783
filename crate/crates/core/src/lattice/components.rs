use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{check_level, stencil, DiscreteSet, LatticePoint};
use crate::error::Result;
use crate::union_find::UnionFind;

/// Partition of a discrete set into its k-components.
///
/// Component ids follow the lexicographic order of each component's
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub k: usize,
    pub labels: BTreeMap<LatticePoint, usize>,
    pub count: usize,
}

impl ComponentLabeling {
    /// Members of each component, lexicographically sorted.
    pub fn members(&self) -> Vec<Vec<LatticePoint>> {
        let mut out = vec![Vec::new(); self.count];
        for (p, &id) in &self.labels {
            out[id].push(p.clone());
        }
        out
    }
}

/// Labels the k-components of `set` by breadth-first search over the
/// k-adjacency stencil.
pub fn components(set: &DiscreteSet, k: usize) -> Result<ComponentLabeling> {
    let n = set.dim();
    check_level(k, n)?;
    let steps = stencil(n, k);
    let mut labels: BTreeMap<LatticePoint, usize> = BTreeMap::new();
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in set.iter() {
        if labels.contains_key(start) {
            continue;
        }
        labels.insert(start.clone(), count);
        queue.push_back(start.clone());
        while let Some(p) = queue.pop_front() {
            for delta in &steps {
                let q = p.offset(delta);
                if set.contains(&q) && !labels.contains_key(&q) {
                    labels.insert(q.clone(), count);
                    queue.push_back(q);
                }
            }
        }
        count += 1;
    }
    Ok(ComponentLabeling { k, labels, count })
}

/// Empty and singleton sets count as k-connected.
pub fn is_k_connected(set: &DiscreteSet, k: usize) -> Result<bool> {
    Ok(components(set, k)?.count <= 1)
}

/// Component count maintained under point insertions.
#[derive(Clone, Debug)]
pub struct IncrementalComponents {
    steps: Vec<Vec<i64>>,
    index: HashMap<LatticePoint, usize>,
    uf: UnionFind,
}

impl IncrementalComponents {
    pub fn new(dim: usize, k: usize) -> Result<Self> {
        check_level(k, dim)?;
        Ok(Self {
            steps: stencil(dim, k),
            index: HashMap::new(),
            uf: UnionFind::new(0),
        })
    }

    pub fn insert(&mut self, p: LatticePoint) {
        if self.index.contains_key(&p) {
            return;
        }
        let id = self.uf.push();
        for delta in &self.steps {
            if let Some(&other) = self.index.get(&p.offset(delta)) {
                self.uf.union(id, other);
            }
        }
        self.index.insert(p, id);
    }

    pub fn count(&self) -> usize {
        self.uf.sets()
    }

    pub fn is_connected(&self) -> bool {
        self.count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::k_adjacent;

    /// All-pairs reachability by repeated relaxation of the adjacency matrix.
    fn brute_force_count(set: &DiscreteSet, k: usize) -> usize {
        let pts: Vec<_> = set.iter().cloned().collect();
        let m = pts.len();
        let mut reach = vec![vec![false; m]; m];
        for i in 0..m {
            reach[i][i] = true;
            for j in 0..m {
                if k_adjacent(&pts[i], &pts[j], k).unwrap() {
                    reach[i][j] = true;
                }
            }
        }
        for mid in 0..m {
            for i in 0..m {
                for j in 0..m {
                    if reach[i][mid] && reach[mid][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        (0..m).filter(|&i| (0..i).all(|j| !reach[j][i])).count()
    }

    #[test]
    fn empty_and_singleton() {
        let empty = DiscreteSet::empty(2);
        assert_eq!(components(&empty, 0).unwrap().count, 0);
        assert!(is_k_connected(&empty, 1).unwrap());
        let one = DiscreteSet::from_coords(&[[5, 7]]);
        assert_eq!(components(&one, 1).unwrap().count, 1);
    }

    #[test]
    fn diagonal_pair() {
        let s = DiscreteSet::from_coords(&[[0, 0], [1, 1]]);
        assert!(is_k_connected(&s, 0).unwrap());
        assert!(!is_k_connected(&s, 1).unwrap());
    }

    #[test]
    fn horizontal_set_is_zero_disconnected() {
        let s = DiscreteSet::from_coords(&[[0, 0], [0, 1], [2, 0], [2, 1]]);
        let lab = components(&s, 0).unwrap();
        assert_eq!(lab.count, 2);
        assert_eq!(
            lab.members(),
            vec![
                vec![LatticePoint(vec![0, 0]), LatticePoint(vec![0, 1])],
                vec![LatticePoint(vec![2, 0]), LatticePoint(vec![2, 1])],
            ]
        );
    }

    #[test]
    fn labels_follow_smallest_member() {
        let s = DiscreteSet::from_coords(&[[9, 9], [-3, 0], [-3, 1], [4, 4]]);
        let lab = components(&s, 1).unwrap();
        assert_eq!(lab.labels[&LatticePoint(vec![-3, 1])], 0);
        assert_eq!(lab.labels[&LatticePoint(vec![4, 4])], 1);
        assert_eq!(lab.labels[&LatticePoint(vec![9, 9])], 2);
    }

    #[test]
    fn incremental_matches_batch() {
        let coords = [[0, 0], [2, 0], [1, 1], [5, 5], [4, 4], [3, 3], [1, 0]];
        for k in 0..2 {
            let mut inc = IncrementalComponents::new(2, k).unwrap();
            let mut set = DiscreteSet::empty(2);
            for c in coords {
                inc.insert(LatticePoint(c.to_vec()));
                set.insert(LatticePoint(c.to_vec()));
                assert_eq!(inc.count(), components(&set, k).unwrap().count);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_set() -> impl Strategy<Value = DiscreteSet> {
            prop::collection::vec((-2i64..3, -2i64..3, -1i64..2), 0..20).prop_map(|v| {
                DiscreteSet::from_points(3, v.into_iter().map(|(a, b, c)| LatticePoint(vec![a, b, c]))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn agrees_with_brute_force(set in small_set(), k in 0usize..3) {
                prop_assert_eq!(components(&set, k).unwrap().count, brute_force_count(&set, k));
            }

            #[test]
            fn higher_level_connectivity_implies_lower(set in small_set()) {
                for k in 0..2 {
                    if is_k_connected(&set, k + 1).unwrap() {
                        prop_assert!(is_k_connected(&set, k).unwrap());
                    }
                }
            }

            #[test]
            fn adjacency_nesting(
                a in prop::collection::vec(-1i64..2, 3),
                b in prop::collection::vec(-1i64..2, 3),
            ) {
                let (p, q) = (LatticePoint(a), LatticePoint(b));
                for k in 0..2 {
                    if k_adjacent(&p, &q, k + 1).unwrap() {
                        prop_assert!(k_adjacent(&p, &q, k).unwrap());
                    }
                }
            }
        }
    }
}

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`enumerate_labeled_graphs`].
pub const LABELED_LIMIT: usize = 7;

/// Every labeled simple graph on `n` vertices, once each.
///
/// Graph number `code` has edge `{i, j}` (`i < j`) iff bit `p` of `code` is
/// set, where `p` is the position of `(i, j)` in graph6 order
/// `(0,1), (0,2), (1,2), (0,3), ..`.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next == self.end
    }

    fn build(&self, code: u64) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            if code >> p & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_masks(&rows)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.build(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.len() as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > LABELED_LIMIT {
        return Err(Error::BudgetExceeded { what: "labeled graph enumeration", n, limit: LABELED_LIMIT });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(LabeledGraphs { n, end: 1u64 << pairs.len(), pairs, next: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::to_graph6;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(7).unwrap().len(), 2_097_152);
        assert!(matches!(enumerate_labeled_graphs(8), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn distinct_and_ordered() {
        let all: Vec<Graph> = enumerate_labeled_graphs(4).unwrap().collect();
        let distinct: HashSet<String> = all.iter().map(to_graph6).collect();
        assert_eq!(distinct.len(), 64);
        assert_eq!(all[0], Graph::empty(4));
        assert_eq!(all[63], Graph::complete(4));
        assert_eq!(all[1].edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(all[8].edges().collect::<Vec<_>>(), vec![(0, 3)]);
    }
}

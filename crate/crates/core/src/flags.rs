//! Flags of a ranked poset and their adjacency graph.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::poset::{FaceId, RankedPoset};

pub const NO_FLAG: u32 = u32::MAX;

/// All maximal chains running from the least to the greatest face, with the
/// `i`-adjacency between them: two flags are `i`-adjacent when they differ
/// exactly in their rank-`i` face.
#[derive(Clone, Debug)]
pub struct FlagGraph {
    rank: usize,
    stride: usize,
    faces: Vec<FaceId>,
    adjacency: Vec<u32>,
    defects: usize,
}

impl FlagGraph {
    pub fn new(poset: &RankedPoset) -> Self {
        let rank = poset.rank().max(0) as usize;
        let stride = poset.rank().max(-1) as usize + 2;
        let mut faces = Vec::new();
        let mut chain = vec![poset.bottom()];
        collect_flags(poset, &mut chain, &mut faces);
        let count = faces.len() / stride;
        let mut adjacency = vec![NO_FLAG; count * rank];
        let mut defects = 0;
        let mut order: Vec<u32> = (0..count as u32).collect();
        for i in 0..rank {
            let p = i + 1;
            let flag = |k: u32| &faces[k as usize * stride..(k as usize + 1) * stride];
            let cmp = |a: &u32, b: &u32| -> Ordering {
                let (fa, fb) = (flag(*a), flag(*b));
                fa[..p].cmp(&fb[..p]).then_with(|| fa[p + 1..].cmp(&fb[p + 1..]))
            };
            order.sort_unstable_by(cmp);
            let mut start = 0;
            while start < count {
                let mut end = start + 1;
                while end < count && cmp(&order[start], &order[end]) == Ordering::Equal {
                    end += 1;
                }
                if end - start == 2 {
                    let (a, b) = (order[start], order[start + 1]);
                    adjacency[a as usize * rank + i] = b;
                    adjacency[b as usize * rank + i] = a;
                } else {
                    defects += end - start;
                }
                start = end;
            }
        }
        FlagGraph {
            rank,
            stride,
            faces,
            adjacency,
            defects,
        }
    }

    pub fn len(&self) -> usize {
        self.faces.len() / self.stride
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Rank of the underlying poset; adjacency indices run over `0..rank`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The chain of faces of flag `k`, from the least face to the greatest.
    pub fn flag(&self, k: u32) -> &[FaceId] {
        &self.faces[k as usize * self.stride..(k as usize + 1) * self.stride]
    }

    /// The rank-`r` face of flag `k`.
    pub fn face_at(&self, k: u32, r: i32) -> FaceId {
        self.faces[k as usize * self.stride + (r + 1) as usize]
    }

    pub fn adjacent(&self, k: u32, i: usize) -> Option<u32> {
        let a = self.adjacency[k as usize * self.rank + i];
        (a != NO_FLAG).then_some(a)
    }

    /// Flags whose `i`-adjacent flag is missing or ambiguous.
    pub fn defects(&self) -> usize {
        self.defects
    }

    pub fn is_complete(&self) -> bool {
        self.defects == 0
    }

    pub fn position(&self, chain: &[FaceId]) -> Option<u32> {
        (0..self.len() as u32).find(|&k| self.flag(k) == chain)
    }

    /// Length of the orbit of flag `k` under alternately taking the `i`- and
    /// `(i+1)`-adjacent flag, for every `i`. Preserved by automorphisms.
    pub fn signature(&self, k: u32) -> Vec<u32> {
        (0..self.rank.saturating_sub(1))
            .map(|i| {
                let mut cur = k;
                let mut steps = 0;
                loop {
                    let Some(next) = self.adjacent(cur, i + steps as usize % 2) else {
                        return 0;
                    };
                    cur = next;
                    steps += 1;
                    if cur == k && steps % 2 == 0 {
                        return steps;
                    }
                }
            })
            .collect()
    }

    /// Whether the flag graph is bipartite (orientability for polytopes).
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.len()];
        for s in 0..self.len() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s as u32]);
            while let Some(x) = queue.pop_front() {
                for i in 0..self.rank {
                    if let Some(y) = self.adjacent(x, i) {
                        if side[y as usize] == u8::MAX {
                            side[y as usize] = 1 - side[x as usize];
                            queue.push_back(y);
                        } else if side[y as usize] == side[x as usize] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn collect_flags(poset: &RankedPoset, chain: &mut Vec<FaceId>, out: &mut Vec<FaceId>) {
    let last = *chain.last().expect("chain starts at the least face");
    if last == poset.top() {
        out.extend_from_slice(chain);
        return;
    }
    for &next in poset.up(last) {
        chain.push(next);
        collect_flags(poset, chain, out);
        chain.pop();
    }
}

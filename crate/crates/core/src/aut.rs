//! Graph automorphism groups by individualization–refinement backtracking,
//! plus the permutation-group queries (orbits, rank, subdegrees) built on
//! top of them.
//!
//! The search refines an ordered partition with iterated cellwise
//! neighbour-count splitting (1-WL), individualizes the first vertex of the
//! largest non-singleton cell, and compares discrete leaves against the
//! first leaf reached; equal leaf certificates yield automorphisms. Known
//! automorphisms that fix the current branch prefix pointwise prune sibling
//! branches in the same orbit — the pruned subtree is the image of an
//! explored one, so the generated group is unchanged. Pruning is switchable
//! so that correctness can be checked against unpruned runs.
//!
//! Everything is deterministic: cell scan order, subcell order (ascending
//! neighbour count) and branch order (ascending vertex index) are fixed and
//! label-invariant.

use crate::graph::Graph;
use crate::perm::{GroupError, PermGroup, Permutation};

#[derive(Debug, Clone, Copy)]
pub struct AutOptions {
    /// Prune sibling branches using orbits of the automorphisms found so
    /// far. Off is exponentially slower and only sensible for small graphs.
    pub orbit_pruning: bool,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            orbit_pruning: true,
        }
    }
}

/// Computes the automorphism group of `g` (generators plus exact order).
pub fn automorphism_group(g: &Graph) -> Result<PermGroup, GroupError> {
    automorphism_group_with(g, &AutOptions::default())
}

pub fn automorphism_group_with(g: &Graph, options: &AutOptions) -> Result<PermGroup, GroupError> {
    let mut search = Search {
        rows: (0..g.n()).map(|v| g.neighbors_mask(v)).collect(),
        n: g.n(),
        prune: options.orbit_pruning,
        first: None,
        generators: Vec::new(),
        fixed: Vec::new(),
    };
    let mut cells: Vec<u64> = if g.n() == 0 {
        Vec::new()
    } else {
        vec![full_mask(g.n())]
    };
    refine(&search.rows, &mut cells);
    search.node(cells);
    for gen in &search.generators {
        assert!(
            preserves_adjacency(g, gen),
            "internal error: search produced a non-automorphism"
        );
    }
    PermGroup::from_generators(g.n(), search.generators)
}

/// True iff `perm` maps edges to edges and non-edges to non-edges.
pub fn preserves_adjacency(g: &Graph, perm: &Permutation) -> bool {
    if perm.degree() != g.n() {
        return false;
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.has_edge(u, v) != g.has_edge(perm.apply(u), perm.apply(v)) {
                return false;
            }
        }
    }
    true
}

const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Equitable refinement: split cells by neighbour counts into other cells
/// until stable. Subcells replace their cell in ascending count order, so
/// the result depends only on the graph and the incoming partition, not on
/// labels.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut stable = false;
    while !stable {
        stable = true;
        let mut ci = 0;
        while ci < cells.len() {
            if cells[ci].count_ones() > 1 {
                for cj in 0..cells.len() {
                    let splitter = cells[cj];
                    let mut buckets = [0u64; 65];
                    let mut distinct = 0;
                    for v in bits(cells[ci]) {
                        let count = (rows[v] & splitter).count_ones() as usize;
                        if buckets[count] == 0 {
                            distinct += 1;
                        }
                        buckets[count] |= 1 << v;
                    }
                    if distinct > 1 {
                        let pieces: Vec<u64> =
                            buckets.iter().copied().filter(|&m| m != 0).collect();
                        cells.splice(ci..=ci, pieces);
                        stable = false;
                        break;
                    }
                }
            }
            ci += 1;
        }
    }
}

/// First cell of maximal size among the non-singletons.
fn target_cell(cells: &[u64]) -> Option<usize> {
    let mut best: Option<(usize, u32)> = None;
    for (i, &cell) in cells.iter().enumerate() {
        let size = cell.count_ones();
        if size > 1 && best.map_or(true, |(_, s)| size > s) {
            best = Some((i, size));
        }
    }
    best.map(|(i, _)| i)
}

struct Search {
    rows: Vec<u64>,
    n: usize,
    prune: bool,
    /// Labeling and relabeled adjacency of the first leaf reached.
    first: Option<(Vec<usize>, Vec<u64>)>,
    generators: Vec<Permutation>,
    /// Vertices individualized along the current path.
    fixed: Vec<usize>,
}

impl Search {
    fn node(&mut self, cells: Vec<u64>) {
        match target_cell(&cells) {
            None => self.leaf(&cells),
            Some(t) => {
                let mut explored = 0u64;
                for v in bits(cells[t]) {
                    if self.prune && explored != 0 && self.orbit_meets(v, explored) {
                        continue;
                    }
                    let mut child = cells.clone();
                    child.splice(t..=t, [1u64 << v, cells[t] & !(1 << v)]);
                    refine(&self.rows, &mut child);
                    self.fixed.push(v);
                    self.node(child);
                    self.fixed.pop();
                    explored |= 1 << v;
                }
            }
        }
    }

    /// Does the orbit of `v` under the known automorphisms fixing the
    /// current prefix meet an already explored branch vertex?
    fn orbit_meets(&self, v: usize, explored: u64) -> bool {
        let relevant: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|g| self.fixed.iter().all(|&f| g.apply(f) == f))
            .collect();
        if relevant.is_empty() {
            return false;
        }
        let mut orbit = 1u64 << v;
        let mut frontier = vec![v];
        while let Some(p) = frontier.pop() {
            for g in &relevant {
                let q = g.apply(p);
                if orbit & (1 << q) == 0 {
                    if explored & (1 << q) != 0 {
                        return true;
                    }
                    orbit |= 1 << q;
                    frontier.push(q);
                }
            }
        }
        orbit & explored != 0
    }

    fn leaf(&mut self, cells: &[u64]) {
        let labeling: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        debug_assert_eq!(labeling.len(), self.n);
        let cert = self.certificate(&labeling);
        match &self.first {
            None => self.first = Some((labeling, cert)),
            Some((first_labeling, first_cert)) => {
                if &cert == first_cert {
                    // positions agree: labeling ∘ first⁻¹ is an automorphism
                    let mut images = vec![0; self.n];
                    for pos in 0..self.n {
                        images[first_labeling[pos]] = labeling[pos];
                    }
                    let perm = Permutation::from_images(images).expect("bijective by construction");
                    if !perm.is_identity() {
                        self.generators.push(perm);
                    }
                }
            }
        }
    }

    /// Adjacency rows relabeled by position: bit j of row i is the
    /// adjacency of the vertices in positions i and j.
    fn certificate(&self, labeling: &[usize]) -> Vec<u64> {
        let mut position_of = vec![0usize; self.n];
        for (pos, &v) in labeling.iter().enumerate() {
            position_of[v] = pos;
        }
        labeling
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                for u in bits(self.rows[v]) {
                    row |= 1 << position_of[u];
                }
                row
            })
            .collect()
    }
}

/// Counts automorphisms by plain backtracking over vertex images with
/// adjacency consistency as the only pruning rule — no refinement, no
/// stabilizer chain. Serves as an independent check of group orders.
///
/// Vertices are processed in a greedy order that maximizes the number of
/// already-placed neighbours, which keeps the search tree narrow without
/// affecting the count.
pub fn count_automorphisms_backtrack(g: &Graph) -> u64 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors_mask(v)).collect();

    // static order: next vertex with the most chosen neighbours
    let mut order = Vec::with_capacity(n);
    let mut chosen = 0u64;
    for step in 0..n {
        let pick = (0..n)
            .filter(|&v| chosen & (1 << v) == 0)
            .max_by_key(|&v| ((rows[v] & chosen).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        let _ = step;
        order.push(pick);
        chosen |= 1 << pick;
    }

    fn descend(
        rows: &[u64],
        order: &[usize],
        depth: usize,
        images: &mut Vec<usize>,
        used: u64,
        full: u64,
    ) -> u64 {
        if depth == order.len() {
            return 1;
        }
        let v = order[depth];
        let mut candidates = full & !used;
        for (j, &u) in order[..depth].iter().enumerate() {
            let img = images[j];
            candidates &= if rows[v] & (1 << u) != 0 {
                rows[img]
            } else {
                !rows[img]
            };
            if candidates == 0 {
                return 0;
            }
        }
        let mut total = 0;
        for w in bits(candidates) {
            images.push(w);
            total += descend(rows, order, depth + 1, images, used | (1 << w), full);
            images.pop();
        }
        total
    }

    descend(&rows, &order, 0, &mut Vec::with_capacity(n), 0, full_mask(n))
}

/// Rank and subdegrees of a transitive group acting on the vertices of `g`.
#[derive(Debug, Clone)]
pub struct RankInfo {
    pub rank: usize,
    /// Orbit sizes of a point stabilizer, ascending.
    pub subdegrees: Vec<usize>,
    pub base_point: usize,
    /// Stabilizer orbits, each sorted, ordered by least element.
    pub suborbits: Vec<Vec<usize>>,
    /// For rank 3: the nontrivial suborbits are exactly the neighbourhood
    /// and non-neighbourhood of the base point.
    pub suborbits_match_neighbourhoods: bool,
}

/// Computes the permutation rank of `group` on the vertex set of `g` as the
/// orbit count of the stabilizer of vertex 0, together with the subdegrees.
///
/// Rejects intransitive groups and degree mismatches.
pub fn rank_and_subdegrees(group: &PermGroup, g: &Graph) -> Result<RankInfo, GroupError> {
    if group.degree() != g.n() {
        return Err(GroupError::DegreeMismatch {
            expected: g.n(),
            found: group.degree(),
        });
    }
    if g.n() == 0 || !group.is_transitive() {
        return Err(GroupError::Intransitive);
    }
    let base_point = 0;
    let stab_gens = group.point_stabilizer_generators(base_point)?;
    let suborbits = orbits_of(g.n(), &stab_gens);
    let mut subdegrees: Vec<usize> = suborbits.iter().map(|o| o.len()).collect();
    subdegrees.sort_unstable();
    let rank = suborbits.len();

    let mut neighbourhood: Vec<usize> = bits(g.neighbors_mask(base_point)).collect();
    neighbourhood.sort_unstable();
    let non_neighbourhood: Vec<usize> = (0..g.n())
        .filter(|&v| v != base_point && !g.has_edge(base_point, v))
        .collect();
    let suborbits_match_neighbourhoods = rank == 3
        && suborbits.contains(&vec![base_point])
        && suborbits.contains(&neighbourhood)
        && suborbits.contains(&non_neighbourhood);

    Ok(RankInfo {
        rank,
        subdegrees,
        base_point,
        suborbits,
        suborbits_match_neighbourhoods,
    })
}

/// Rank computed independently as the number of group orbits on ordered
/// pairs; agrees with the stabilizer-orbit count for transitive groups.
pub fn rank_via_pair_orbits(group: &PermGroup) -> usize {
    let n = group.degree();
    if n == 0 {
        return 0;
    }
    let mut seen = vec![false; n * n];
    let mut orbit_count = 0;
    for start in 0..n * n {
        if seen[start] {
            continue;
        }
        orbit_count += 1;
        seen[start] = true;
        let mut frontier = vec![(start / n, start % n)];
        while let Some((a, b)) = frontier.pop() {
            for g in group.generators() {
                let (x, y) = (g.apply(a), g.apply(b));
                if !seen[x * n + y] {
                    seen[x * n + y] = true;
                    frontier.push((x, y));
                }
            }
        }
    }
    orbit_count
}

fn orbits_of(n: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut g = Graph::empty(10).unwrap();
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
        }
        g
    }

    #[test]
    fn five_cycle_has_dihedral_group() {
        let group = automorphism_group(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(group.order(), 10);
        assert!(group.is_transitive());
    }

    #[test]
    fn petersen_group_order_120() {
        let group = automorphism_group(&petersen()).unwrap();
        assert_eq!(group.order(), 120);
        assert_eq!(count_automorphisms_backtrack(&petersen()), 120);
    }

    #[test]
    fn generators_preserve_adjacency() {
        let g = petersen();
        let group = automorphism_group(&g).unwrap();
        for gen in group.generators() {
            assert!(preserves_adjacency(&g, gen));
        }
    }

    #[test]
    fn empty_and_tiny_graphs() {
        assert_eq!(automorphism_group(&Graph::empty(0).unwrap()).unwrap().order(), 1);
        assert_eq!(automorphism_group(&Graph::empty(1).unwrap()).unwrap().order(), 1);
        assert_eq!(automorphism_group(&Graph::empty(4).unwrap()).unwrap().order(), 24);
        assert_eq!(automorphism_group(&Graph::complete(4).unwrap()).unwrap().order(), 24);
    }

    #[test]
    fn asymmetric_graph_has_trivial_group() {
        // smallest asymmetric graph: 6 vertices
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (1, 4)])
            .unwrap();
        let group = automorphism_group(&g).unwrap();
        assert_eq!(group.order(), 1);
        assert_eq!(count_automorphisms_backtrack(&g), 1);
    }

    #[test]
    fn pruning_does_not_change_the_group() {
        let cases = vec![
            Graph::cycle(6).unwrap(),
            Graph::complete(5).unwrap(),
            petersen(),
            Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 4)]).unwrap(),
        ];
        for g in cases {
            let pruned = automorphism_group_with(&g, &AutOptions { orbit_pruning: true }).unwrap();
            let unpruned =
                automorphism_group_with(&g, &AutOptions { orbit_pruning: false }).unwrap();
            assert_eq!(pruned.order(), unpruned.order());
            assert_eq!(pruned.order(), count_automorphisms_backtrack(&g));
        }
    }

    #[test]
    fn disconnected_graph_orbits() {
        // triangle plus an isolated edge plus an isolated vertex
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let group = automorphism_group(&g).unwrap();
        assert_eq!(group.order(), 12); // S3 × S2
        assert_eq!(group.orbits(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert!(!group.is_transitive());
        assert!(rank_and_subdegrees(&group, &g).is_err());
    }

    #[test]
    fn complete_graph_has_rank_2() {
        let g = Graph::complete(4).unwrap();
        let group = automorphism_group(&g).unwrap();
        let info = rank_and_subdegrees(&group, &g).unwrap();
        assert_eq!(info.rank, 2);
        assert_eq!(info.subdegrees, vec![1, 3]);
        assert_eq!(rank_via_pair_orbits(&group), 2);
    }

    #[test]
    fn pentagon_has_rank_3() {
        let g = Graph::cycle(5).unwrap();
        let group = automorphism_group(&g).unwrap();
        let info = rank_and_subdegrees(&group, &g).unwrap();
        assert_eq!(info.rank, 3);
        assert_eq!(info.subdegrees, vec![1, 2, 2]);
        assert!(info.suborbits_match_neighbourhoods);
        assert_eq!(rank_via_pair_orbits(&group), 3);
    }

    #[test]
    fn petersen_rank_3_subdegrees() {
        let g = petersen();
        let group = automorphism_group(&g).unwrap();
        let info = rank_and_subdegrees(&group, &g).unwrap();
        assert_eq!(info.rank, 3);
        assert_eq!(info.subdegrees, vec![1, 3, 6]);
        assert!(info.suborbits_match_neighbourhoods);
    }

    #[test]
    fn order_invariant_under_relabeling() {
        let g = petersen();
        let p = Permutation::from_images(vec![9, 0, 4, 2, 6, 1, 8, 3, 5, 7]).unwrap();
        let h = g.relabel(&p).unwrap();
        assert_eq!(
            automorphism_group(&g).unwrap().order(),
            automorphism_group(&h).unwrap().order()
        );
    }

    #[test]
    fn backtrack_matches_refinement_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.random_range(1..=10);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.4) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let ir = automorphism_group(&g).unwrap().order();
            assert_eq!(ir, count_automorphisms_backtrack(&g), "graph {g:?}");
        }
    }
}

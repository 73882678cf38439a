//! Permutations and permutation groups given by generators.
//!
//! Group order is computed exactly with a stabilizer chain: pick a moved
//! base point, compute its orbit with a transversal, push Schreier
//! generators down to the stabilizer, recurse. By Schreier's lemma the
//! generators passed down generate the full point stabilizer, so the order
//! is the product of the orbit lengths along the chain — no randomization
//! and nothing probabilistic. Degrees are at most 64 and the group orders
//! here are far below 2⁶⁴, but the multiplication is checked anyway.

use std::collections::HashSet;

use serde::Serialize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("image list of length {0} is not a permutation")]
    NotBijective(usize),
    #[error("permutation degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds u64")]
    OrderOverflow,
    #[error("operation requires a transitive group")]
    Intransitive,
}

/// A permutation of {0, …, n−1}, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(GroupError::NotBijective(n));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Nontrivial cycles, each rotated to start at its least point, sorted
    /// by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            let mut p = self.images[start];
            seen[start] = true;
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle notation like `(0 1 4)(2 3)`; the identity renders as `()`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "images": self.images,
            "cycles": self.cycle_notation(),
        })
    }
}

struct ChainLevel {
    base: usize,
    /// For each point in the orbit, a group element mapping `base` to it.
    transversal: Vec<Option<Permutation>>,
}

/// Stabilizer chain: level i acts with the pointwise stabilizer of the
/// bases of levels 0..i.
pub(crate) struct StabChain {
    levels: Vec<ChainLevel>,
    /// Generators of the stabilizer of the first base point (Schreier
    /// generators of level 0); the full group's generators if the chain is
    /// trivial.
    first_stabilizer_gens: Vec<Permutation>,
    order: u64,
}

impl StabChain {
    /// Builds the chain, preferring base points from `base_hint` (each used
    /// only if some current generator moves it) before falling back to the
    /// smallest moved point.
    pub(crate) fn build(
        n: usize,
        generators: &[Permutation],
        base_hint: &[usize],
    ) -> Result<StabChain, GroupError> {
        let mut levels = Vec::new();
        let mut order = 1u64;
        let mut gens: Vec<Permutation> = generators
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut first_stabilizer_gens = Vec::new();
        let mut hint_pos = 0;
        while !gens.is_empty() {
            let base = next_base(n, &gens, base_hint, &mut hint_pos);
            let (orbit, transversal) = orbit_with_transversal(n, base, &gens);
            order = order
                .checked_mul(orbit.len() as u64)
                .ok_or(GroupError::OrderOverflow)?;
            let stab_gens = schreier_generators(&orbit, &transversal, &gens);
            if levels.is_empty() {
                first_stabilizer_gens = stab_gens.clone();
            }
            levels.push(ChainLevel { base, transversal });
            gens = stab_gens;
        }
        Ok(StabChain {
            levels,
            first_stabilizer_gens,
            order,
        })
    }

    pub(crate) fn order(&self) -> u64 {
        self.order
    }

    pub(crate) fn first_base(&self) -> Option<usize> {
        self.levels.first().map(|l| l.base)
    }

    pub(crate) fn first_stabilizer_gens(&self) -> &[Permutation] {
        &self.first_stabilizer_gens
    }

    /// Membership test by sifting through the chain.
    pub(crate) fn contains(&self, perm: &Permutation) -> bool {
        let mut residue = perm.clone();
        for level in &self.levels {
            let image = residue.apply(level.base);
            match &level.transversal[image] {
                Some(rep) => residue = rep.inverse().compose(&residue),
                None => return false,
            }
        }
        residue.is_identity()
    }
}

fn next_base(n: usize, gens: &[Permutation], hint: &[usize], hint_pos: &mut usize) -> usize {
    while *hint_pos < hint.len() {
        let candidate = hint[*hint_pos];
        *hint_pos += 1;
        if gens.iter().any(|g| g.apply(candidate) != candidate) {
            return candidate;
        }
    }
    (0..n)
        .find(|&p| gens.iter().any(|g| g.apply(p) != p))
        .expect("non-identity generators move some point")
}

fn orbit_with_transversal(
    n: usize,
    base: usize,
    gens: &[Permutation],
) -> (Vec<usize>, Vec<Option<Permutation>>) {
    let mut orbit = vec![base];
    let mut transversal: Vec<Option<Permutation>> = vec![None; n];
    transversal[base] = Some(Permutation::identity(n));
    let mut head = 0;
    while head < orbit.len() {
        let point = orbit[head];
        head += 1;
        for g in gens {
            let image = g.apply(point);
            if transversal[image].is_none() {
                let rep = g.compose(transversal[point].as_ref().unwrap());
                transversal[image] = Some(rep);
                orbit.push(image);
            }
        }
    }
    (orbit, transversal)
}

/// Schreier generators u_{g(p)}⁻¹ · g · u_p for p in the orbit; by
/// Schreier's lemma they generate the stabilizer of the base point.
/// Deduplicated, identity dropped, discovery order kept for determinism.
fn schreier_generators(
    orbit: &[usize],
    transversal: &[Option<Permutation>],
    gens: &[Permutation],
) -> Vec<Permutation> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for &p in orbit {
        let u_p = transversal[p].as_ref().unwrap();
        for g in gens {
            let image = g.apply(p);
            let u_image_inv = transversal[image].as_ref().unwrap().inverse();
            let schreier = u_image_inv.compose(g).compose(u_p);
            if !schreier.is_identity() && seen.insert(schreier.images().to_vec()) {
                out.push(schreier);
            }
        }
    }
    out
}

/// A permutation group given by generators, with its exact order.
#[derive(Debug, Clone, Serialize)]
pub struct PermGroup {
    degree: usize,
    #[serde(serialize_with = "serialize_generators")]
    generators: Vec<Permutation>,
    order: u64,
}

fn serialize_generators<S: serde::Serializer>(
    gens: &[Permutation],
    ser: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(gens.len()))?;
    for g in gens {
        seq.serialize_element(&g.to_json())?;
    }
    seq.end()
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            order: 1,
        }
    }

    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &generators, &[])?;
        Ok(PermGroup {
            degree,
            generators,
            order: chain.order(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Orbit partition of the vertex set, orbits sorted by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in &self.generators {
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

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }

    /// Generators of the stabilizer of `point` (Schreier generators from a
    /// chain rooted at `point`). If nothing moves the point the stabilizer
    /// is the whole group.
    pub fn point_stabilizer_generators(&self, point: usize) -> Result<Vec<Permutation>, GroupError> {
        let chain = StabChain::build(self.degree, &self.generators, &[point])?;
        match chain.first_base() {
            Some(base) if base == point => Ok(chain.first_stabilizer_gens().to_vec()),
            _ => Ok(self.generators.clone()),
        }
    }

    /// Membership test.
    pub fn contains(&self, perm: &Permutation) -> Result<bool, GroupError> {
        if perm.degree() != self.degree {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree,
                found: perm.degree(),
            });
        }
        let chain = StabChain::build(self.degree, &self.generators, &[])?;
        Ok(chain.contains(perm))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "order": self.order,
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "orbits": self.orbits(),
        })
    }
}

/// Explicit closure of a generating set, for cross-checking chain orders on
/// small groups. Panics past one million elements.
pub fn closure_elements(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut elements: HashSet<Vec<usize>> = HashSet::new();
    let identity = Permutation::identity(degree);
    elements.insert(identity.images().to_vec());
    let mut frontier = vec![identity];
    while let Some(e) = frontier.pop() {
        for g in gens {
            let product = g.compose(&e);
            if elements.insert(product.images().to_vec()) {
                assert!(elements.len() <= 1_000_000, "closure too large");
                frontier.push(product);
            }
        }
    }
    let mut out: Vec<Permutation> = elements
        .into_iter()
        .map(|images| Permutation { images })
        .collect();
    out.sort_by(|a, b| a.images.cmp(&b.images));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_images(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn compose_applies_right_then_left() {
        let a = perm(&[1, 2, 0]); // 0→1→2→0
        let b = perm(&[0, 2, 1]); // swap 1,2
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), a.apply(b.apply(1)));
        assert_eq!(ab.images(), &[1, 0, 2]);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn cycle_notation_matches() {
        assert_eq!(perm(&[1, 2, 0, 3, 5, 4]).cycle_notation(), "(0 1 2)(4 5)");
        assert_eq!(Permutation::identity(4).cycle_notation(), "()");
    }

    #[test]
    fn symmetric_group_order() {
        // S5 from a transposition and a 5-cycle
        let gens = vec![perm(&[1, 0, 2, 3, 4]), perm(&[1, 2, 3, 4, 0])];
        let group = PermGroup::from_generators(5, gens.clone()).unwrap();
        assert_eq!(group.order(), 120);
        assert!(group.is_transitive());
        assert_eq!(closure_elements(5, &gens).len(), 120);
    }

    #[test]
    fn dihedral_group_on_the_pentagon() {
        let rot = perm(&[1, 2, 3, 4, 0]);
        let refl = perm(&[0, 4, 3, 2, 1]);
        let group = PermGroup::from_generators(5, vec![rot, refl]).unwrap();
        assert_eq!(group.order(), 10);
    }

    #[test]
    fn chain_order_matches_closure_on_assorted_groups() {
        let cases: Vec<(usize, Vec<Permutation>)> = vec![
            (4, vec![perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]), // Klein four
            (6, vec![perm(&[1, 2, 0, 4, 5, 3])]),                // C3 diagonal
            (7, vec![perm(&[1, 2, 3, 4, 5, 6, 0]), perm(&[0, 2, 1, 3, 4, 5, 6])]), // S7
            (3, vec![]),
        ];
        for (n, gens) in cases {
            let group = PermGroup::from_generators(n, gens.clone()).unwrap();
            assert_eq!(group.order() as usize, closure_elements(n, &gens).len());
        }
    }

    #[test]
    fn trivial_group_orbits_are_singletons() {
        let group = PermGroup::trivial(4);
        assert_eq!(group.order(), 1);
        assert_eq!(group.orbits(), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert!(!group.is_transitive());
    }

    #[test]
    fn stabilizer_generators_generate_the_stabilizer() {
        // S4: stabilizer of 0 is S3 on {1,2,3}, order 6
        let gens = vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])];
        let group = PermGroup::from_generators(4, gens).unwrap();
        let stab = group.point_stabilizer_generators(0).unwrap();
        assert!(stab.iter().all(|g| g.apply(0) == 0));
        let stab_group = PermGroup::from_generators(4, stab).unwrap();
        assert_eq!(stab_group.order(), 6);
    }

    #[test]
    fn membership_test() {
        let gens = vec![perm(&[1, 2, 3, 4, 0])];
        let group = PermGroup::from_generators(5, gens).unwrap();
        assert_eq!(group.order(), 5);
        assert!(group.contains(&perm(&[2, 3, 4, 0, 1])).unwrap());
        assert!(!group.contains(&perm(&[1, 0, 2, 3, 4])).unwrap());
    }
}

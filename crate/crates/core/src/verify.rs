//! The full verification run: every claim of the construction is evaluated
//! and written into a machine-readable report.
//!
//! A report contains one record per claim, keyed by a stable id carrying
//! the claim's anchor (`definition-4.1`, `eq-5`, `lemma-2.3`, …), plus one
//! summary record per acceptance criterion. Re-running with the same seed
//! reproduces the claim records byte for byte; only the environment stamp
//! and timing differ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::aut::{
    automorphism_group, count_automorphisms_backtrack, rank_and_subdegrees, rank_via_pair_orbits,
};
use crate::geometry;
use crate::graph::{srg_scan_rows, Graph, SrgOutcome, SrgParams, VertexSet};
use crate::pipeline::{
    self, classify_complement_edges, neighbour_splits, GammaConstruction, SwitchCandidate,
    COMPLEMENT_PARAMS, GAMMA_PARAMS, GAMMA_PRIME_PARAMS,
};
use crate::seidel::{uniform_row_profile, verify_seidel_identities};
use crate::two_graph::{associated_two_graph, switching_witness};

/// Default seed for the randomized property suites.
pub const DEFAULT_SEED: u64 = 1729;

/// Number of 6-class unions (out of the 924 scanned) whose switch verifies
/// as srg(36,21,12,12). Frozen from the exhaustive scan as a regression
/// value: three complementary pairs. The construction guarantees at least
/// one; complementary selections switch to the same graph, so the count is
/// even.
pub const VALID_SWITCH_SET_COUNT: usize = 6;

/// Labeled graphs on 0..=8 vertices: Σ 2^C(n,2).
pub const EXHAUSTIVE_SCAN_TOTAL: u64 = 270_566_476;

/// Expected automorphism group orders.
pub const AUT_GAMMA_ORDER: u64 = 51_840;
pub const AUT_GAMMA_PRIME_ORDER: u64 = 12_096;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED }
    }
}

/// One verified claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub anchor: String,
    pub description: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EnvironmentStamp {
    pub package: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub threads: usize,
    pub timestamp_unix: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub environment: EnvironmentStamp,
    pub elapsed_ms: u128,
    pub claims: Vec<ClaimRecord>,
}

impl VerificationReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The deterministic part of the report (everything except the
    /// environment stamp and timing), for byte-identity comparisons.
    pub fn claims_json(&self) -> String {
        serde_json::to_string_pretty(&self.claims).expect("claims serialize")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut width = 0;
        for c in &self.claims {
            width = width.max(c.id.len());
        }
        for c in &self.claims {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {:width$}  {}\n", c.id, c.description));
            if !c.pass {
                out.push_str(&format!(
                    "      expected: {}\n      computed: {}\n",
                    c.expected, c.computed
                ));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!("      note: {note}\n"));
            }
        }
        let failed = self.claims.iter().filter(|c| !c.pass).count();
        out.push_str(&format!(
            "\n{} claims, {} failed — {}\n",
            self.claims.len(),
            failed,
            if self.passed { "VERIFIED" } else { "FAILED" }
        ));
        out
    }
}

struct Reporter {
    claims: Vec<ClaimRecord>,
}

impl Reporter {
    fn record(
        &mut self,
        id: &str,
        anchor: &str,
        description: &str,
        expected: Value,
        computed: Value,
        pass: bool,
    ) {
        self.claims.push(ClaimRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            description: description.to_string(),
            computed,
            expected,
            pass,
            note: None,
        });
    }

    fn record_noted(
        &mut self,
        id: &str,
        anchor: &str,
        description: &str,
        expected: Value,
        computed: Value,
        pass: bool,
        note: &str,
    ) {
        self.record(id, anchor, description, expected, computed, pass);
        self.claims.last_mut().unwrap().note = Some(note.to_string());
    }

    fn criterion(&mut self, number: usize, description: &str, member_ids: &[&str]) {
        let members: Vec<&ClaimRecord> = member_ids
            .iter()
            .map(|id| {
                self.claims
                    .iter()
                    .find(|c| c.id == *id)
                    .unwrap_or_else(|| panic!("criterion references unknown claim {id}"))
            })
            .collect();
        let pass = members.iter().all(|c| c.pass);
        let computed: Vec<Value> = members
            .iter()
            .map(|c| json!({ "id": c.id, "pass": c.pass }))
            .collect();
        self.claims.push(ClaimRecord {
            id: format!("criterion-{number:02}"),
            anchor: "acceptance".to_string(),
            description: description.to_string(),
            computed: Value::Array(computed),
            expected: json!("all member claims pass"),
            pass,
            note: None,
        });
    }
}

/// Runs the complete verification and returns the report. Any failed claim
/// marks the report as failed.
pub fn run_full_verification(options: &VerifyOptions) -> VerificationReport {
    let start = std::time::Instant::now();
    let mut r = Reporter { claims: Vec::new() };

    // ---- geometry --------------------------------------------------------
    let construction = GammaConstruction::new();
    let v1 = construction.vectors();
    r.record(
        "v1-size",
        "section-4",
        "V1 = {x : h(x,x)=1} has 36 vectors",
        json!(36),
        json!(v1.len()),
        v1.len() == 36,
    );
    let class_sizes: Vec<usize> = construction
        .classes()
        .iter()
        .map(|c| c.members().len())
        .collect();
    r.record(
        "v1-projective-classes",
        "section-4",
        "V1 splits into 12 projective classes of 3",
        json!({ "classes": 12, "size": 3 }),
        json!({ "classes": class_sizes.len(), "sizes": class_sizes }),
        class_sizes.len() == 12 && class_sizes.iter().all(|&s| s == 3),
    );
    let isotropic = geometry::isotropic_points().len();
    r.record(
        "isotropic-point-count",
        "section-4",
        "the ambient space has 9 isotropic projective points",
        json!(9),
        json!(isotropic),
        isotropic == 9,
    );

    // ---- Γ and its Seidel identities --------------------------------------
    let gamma = construction.graph().clone();
    let gamma_outcome = gamma.check_srg();
    r.record(
        "definition-4.1-gamma-srg",
        "definition-4.1",
        "Γ (adjacency: s(u,v)=0) is an srg(36,15,6,6), by pair counting and \
         by the matrix identity",
        json!(GAMMA_PARAMS),
        json!(gamma_outcome.params()),
        gamma_outcome == SrgOutcome::Srg(GAMMA_PARAMS),
    );

    let profile = uniform_row_profile(&gamma.seidel_matrix());
    r.record(
        "lemma-4.3-seidel-row-profile",
        "lemma-4.3",
        "every Seidel row of Γ has one 0, 15 entries -1, 20 entries +1",
        json!([1, 15, 20]),
        json!(profile.map(|(z, m, p)| vec![z, m, p])),
        profile == Some((1, 15, 20)),
    );

    // switching-set search (the Seidel suite needs W for eq-6..eq-9)
    let scan = pipeline::scan_switch_candidates(&construction);
    let valid: Vec<&SwitchCandidate> = scan.iter().filter(|c| c.is_target()).collect();
    let canonical = valid
        .first()
        .copied()
        .expect("construction yields at least one valid switching set")
        .clone();
    let w = canonical.vertex_set;
    let gamma_prime = gamma.switch(w);
    let complement = gamma_prime.complement();

    let seidel = verify_seidel_identities(&gamma, w).expect("gamma has 36 vertices");
    for id in ["eq-1", "eq-2", "eq-3", "eq-4", "eq-5", "eq-5-as-printed"] {
        let identity = seidel.get(id).unwrap();
        let expected_holds = id != "eq-5-as-printed";
        let pass = identity.holds == expected_holds;
        match identity.note {
            Some(note) => r.record_noted(
                id,
                id.trim_end_matches("-as-printed"),
                identity.statement,
                json!(expected_holds),
                json!(identity.holds),
                pass,
                note,
            ),
            None => r.record(
                id,
                id,
                identity.statement,
                json!(expected_holds),
                json!(identity.holds),
                pass,
            ),
        }
    }

    // ---- the 924-candidate scan -------------------------------------------
    r.record(
        "switch-scan-examined",
        "section-4",
        "all C(12,6) = 924 unions of 6 projective classes were examined",
        json!(924),
        json!(scan.len()),
        scan.len() == 924,
    );
    r.record_noted(
        "lemma-4.3-valid-switch-count",
        "lemma-4.3",
        "number of 6-class unions whose switch is an srg(36,21,12,12)",
        json!(VALID_SWITCH_SET_COUNT),
        json!(valid.len()),
        !valid.is_empty() && valid.len() == VALID_SWITCH_SET_COUNT,
        "count frozen from the first verified exhaustive scan; at least one is guaranteed",
    );
    r.record_noted(
        "section-4-w-vectors",
        "section-4",
        "the canonical switching set W as explicit vectors (18 coordinate triples)",
        json!(18),
        json!({
            "class_indices": canonical.class_indices,
            "vectors": w
                .indices()
                .iter()
                .map(|&i| construction.vectors()[i].render())
                .collect::<Vec<_>>(),
        }),
        w.len() == 18 && canonical.class_indices.len() == 6,
        "recovered extensionally as the lexicographically least 6-class union whose switch \
         verifies; not asserted to coincide with any externally defined H0",
    );

    // ---- Γ′ ----------------------------------------------------------------
    r.record(
        "lemma-4.2-regular-21",
        "lemma-4.2",
        "Γ' (switch of Γ w.r.t. W) is 21-regular",
        json!(21),
        json!(gamma_prime.is_regular()),
        gamma_prime.is_regular() == Some(21),
    );
    let splits = neighbour_splits(&construction, &gamma_prime, w);
    let splits_ok = splits
        .iter()
        .all(|s| s.same_side == 9 && s.cross_side == 12 && s.hermitian_conditions_hold);
    r.record(
        "lemma-4.2-neighbour-split",
        "lemma-4.2",
        "every vertex has 9 same-side neighbours with h in {0,1} and 12 \
         cross-side neighbours with h in {w,W}",
        json!({ "same_side": 9, "cross_side": 12 }),
        json!({
            "uniform": splits_ok,
            "first": splits.first(),
        }),
        splits_ok,
    );
    let gamma_prime_outcome = gamma_prime.check_srg();
    r.record(
        "lemma-4.3-gamma-prime-srg",
        "lemma-4.3",
        "Γ' is an srg(36,21,12,12), by pair counting and by the matrix identity",
        json!(GAMMA_PRIME_PARAMS),
        json!(gamma_prime_outcome.params()),
        gamma_prime_outcome == SrgOutcome::Srg(GAMMA_PRIME_PARAMS),
    );
    for id in ["eq-6", "eq-7", "eq-8", "eq-9"] {
        let identity = seidel.get(id).unwrap();
        match identity.note {
            Some(note) => r.record_noted(
                id,
                id,
                identity.statement,
                json!(true),
                json!(identity.holds),
                identity.holds,
                note,
            ),
            None => r.record(
                id,
                id,
                identity.statement,
                json!(true),
                json!(identity.holds),
                identity.holds,
            ),
        }
    }

    // ---- two-graphs ---------------------------------------------------------
    let tg_gamma = associated_two_graph(&gamma);
    let tg_gamma_prime = associated_two_graph(&gamma_prime);
    r.record(
        "lemma-2.3-two-graph-equal",
        "lemma-2.3",
        "Γ and Γ' are associated to the same two-graph",
        json!(true),
        json!(tg_gamma == tg_gamma_prime),
        tg_gamma == tg_gamma_prime,
    );
    let lambda = tg_gamma.regularity();
    r.record(
        "two-graph-regular-lambda-18",
        "section-2",
        "the common two-graph is regular with every pair in 18 triples",
        json!(18),
        json!(lambda),
        lambda == Some(18),
    );
    let axiom = tg_gamma.satisfies_even_intersection();
    r.record(
        "two-graph-even-intersection",
        "section-2",
        "every 4-subset contains an even number of triples (all 58905 subsets)",
        json!(true),
        json!(axiom),
        axiom,
    );
    let witness = switching_witness(&gamma, &gamma_prime).expect("same order");
    let witness_matches = witness == Some(w) || witness == Some(w.complement_within(36));
    r.record(
        "lemma-2.3-switching-witness",
        "lemma-2.3",
        "the recovered switching witness equals W or its complement",
        json!(true),
        json!({
            "found": witness.map(|y| y.indices()),
            "matches_w_or_complement": witness_matches,
        }),
        witness_matches,
    );

    // ---- complement and edge types -------------------------------------------
    let complement_outcome = complement.check_srg();
    r.record(
        "theorem-4.5-complement-srg",
        "theorem-4.5",
        "the complement of Γ' is an srg(36,14,4,6)",
        json!(COMPLEMENT_PARAMS),
        json!(complement_outcome.params()),
        complement_outcome == SrgOutcome::Srg(COMPLEMENT_PARAMS),
    );
    r.record(
        "lemma-2.1-complement-formula",
        "lemma-2.1",
        "complement parameters follow (n, n-k-1, n-2k+mu-2, n-2k+lambda)",
        json!(GAMMA_PRIME_PARAMS.complement()),
        json!(complement_outcome.params()),
        complement_outcome.params() == Some(GAMMA_PRIME_PARAMS.complement()),
    );
    let tally = classify_complement_edges(&construction, &gamma_prime, w);
    let tally_ok = tally.violations.is_empty()
        && tally.both_in_w == 72
        && tally.both_outside_w == 72
        && tally.crossing == 108;
    r.record_noted(
        "theorem-4.5-edge-types",
        "theorem-4.5",
        "every complement edge is one of the three types; tallies 72 + 72 + 108 = 252",
        json!({ "both_in_w": 72, "both_outside_w": 72, "crossing": 108, "violations": 0 }),
        json!({
            "both_in_w": tally.both_in_w,
            "both_outside_w": tally.both_outside_w,
            "crossing": tally.crossing,
            "violations": tally.violations.len(),
        }),
        tally_ok,
        "tallies frozen from the first verified enumeration (per-vertex counts 8 same-side \
         and 6 cross-side complement neighbours)",
    );

    // ---- automorphism groups ---------------------------------------------------
    let aut_gamma = automorphism_group(&gamma).expect("order fits u64");
    let backtrack_gamma = count_automorphisms_backtrack(&gamma);
    r.record(
        "definition-4.1-aut-gamma-order",
        "definition-4.1",
        "|Aut Γ| = 51840, by refinement search + stabilizer chain and by \
         independent backtrack count",
        json!({ "order": AUT_GAMMA_ORDER }),
        json!({ "chain": aut_gamma.order(), "backtrack": backtrack_gamma }),
        aut_gamma.order() == AUT_GAMMA_ORDER && backtrack_gamma == AUT_GAMMA_ORDER,
    );
    let aut_gamma_prime = automorphism_group(&gamma_prime).expect("order fits u64");
    let backtrack_gamma_prime = count_automorphisms_backtrack(&gamma_prime);
    r.record_noted(
        "lemma-4.4-aut-gamma-prime-order",
        "lemma-4.4",
        "|Aut Γ'| = 12096, by refinement search + stabilizer chain and by \
         independent backtrack count",
        json!({ "order": AUT_GAMMA_PRIME_ORDER }),
        json!({ "chain": aut_gamma_prime.order(), "backtrack": backtrack_gamma_prime }),
        aut_gamma_prime.order() == AUT_GAMMA_PRIME_ORDER
            && backtrack_gamma_prime == AUT_GAMMA_PRIME_ORDER,
        "12096 is the order of G2(2); the evidence here is order, transitivity and rank, \
         not an abstract-group isomorphism",
    );
    let aut_complement = automorphism_group(&complement).expect("order fits u64");
    r.record(
        "aut-complement-order",
        "lemma-4.4",
        "the complement has the same automorphism group order 12096",
        json!(AUT_GAMMA_PRIME_ORDER),
        json!(aut_complement.order()),
        aut_complement.order() == AUT_GAMMA_PRIME_ORDER,
    );
    let transitive = aut_gamma.is_transitive() && aut_gamma_prime.is_transitive();
    r.record(
        "aut-transitivity",
        "section-3",
        "Aut Γ and Aut Γ' are vertex-transitive (one orbit of size 36)",
        json!(true),
        json!({
            "gamma_orbits": aut_gamma.orbits().iter().map(Vec::len).collect::<Vec<_>>(),
            "gamma_prime_orbits": aut_gamma_prime.orbits().iter().map(Vec::len).collect::<Vec<_>>(),
        }),
        transitive,
    );
    let rank_gamma = rank_and_subdegrees(&aut_gamma, &gamma).expect("transitive");
    let pair_rank_gamma = rank_via_pair_orbits(&aut_gamma);
    r.record(
        "section-3-rank-gamma",
        "section-3",
        "Aut Γ acts with rank 3 and subdegrees {1,15,20}; suborbits are the \
         neighbourhood and non-neighbourhood",
        json!({ "rank": 3, "subdegrees": [1, 15, 20] }),
        json!({
            "rank": rank_gamma.rank,
            "subdegrees": rank_gamma.subdegrees,
            "pair_orbit_rank": pair_rank_gamma,
            "suborbits_match_neighbourhoods": rank_gamma.suborbits_match_neighbourhoods,
        }),
        rank_gamma.rank == 3
            && rank_gamma.subdegrees == vec![1, 15, 20]
            && pair_rank_gamma == 3
            && rank_gamma.suborbits_match_neighbourhoods,
    );
    let rank_complement = rank_and_subdegrees(&aut_complement, &complement).expect("transitive");
    let pair_rank_complement = rank_via_pair_orbits(&aut_complement);
    r.record(
        "section-3-rank-complement",
        "section-3",
        "Aut of the complement acts with rank 3 and subdegrees {1,14,21}",
        json!({ "rank": 3, "subdegrees": [1, 14, 21] }),
        json!({
            "rank": rank_complement.rank,
            "subdegrees": rank_complement.subdegrees,
            "pair_orbit_rank": pair_rank_complement,
            "suborbits_match_neighbourhoods": rank_complement.suborbits_match_neighbourhoods,
        }),
        rank_complement.rank == 3
            && rank_complement.subdegrees == vec![1, 14, 21]
            && pair_rank_complement == 3
            && rank_complement.suborbits_match_neighbourhoods,
    );
    let candidate_orders: Vec<Value> = valid
        .iter()
        .map(|cand| {
            let order = automorphism_group(&gamma.switch(cand.vertex_set))
                .expect("order fits u64")
                .order();
            json!({ "class_indices": cand.class_indices, "aut_order": order })
        })
        .collect();
    r.record_noted(
        "switch-candidates-aut-orders",
        "lemma-4.4",
        "automorphism group order of every valid candidate's switched graph",
        json!("recorded"),
        Value::Array(candidate_orders),
        true,
        "recorded for inspection; pairwise isomorphism of the candidates is not asserted",
    );

    // ---- property suites ----------------------------------------------------
    let mut srgs_encountered: Vec<(&str, &Graph)> =
        vec![("gamma", &gamma), ("gamma-prime", &gamma_prime), ("complement", &complement)];
    let candidate_graphs: Vec<Graph> = valid
        .iter()
        .map(|cand| gamma.switch(cand.vertex_set))
        .collect();
    for g in &candidate_graphs {
        srgs_encountered.push(("candidate", g));
    }
    let roundtrip_ok = srgs_encountered.iter().all(|(_, g)| {
        match g.check_srg().params() {
            Some(p) => g.complement().check_srg().params() == Some(p.complement()),
            None => false,
        }
    });
    r.record(
        "lemma-2.1-roundtrip",
        "lemma-2.1",
        "complement-parameter round-trip holds on every SRG encountered",
        json!(true),
        json!({ "graphs_checked": srgs_encountered.len(), "all_pass": roundtrip_ok }),
        roundtrip_ok,
    );

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let switching_laws = switching_law_suite(&mut rng, 120);
    r.record(
        "section-2-switching-laws",
        "section-2",
        "switching involution and symmetric-difference law on random instances (n <= 12)",
        json!({ "instances": 120, "failures": 0 }),
        json!(switching_laws),
        switching_laws.failures == 0 && switching_laws.instances == 120,
    );
    let dsd = dsd_suite(&mut rng, 120);
    r.record(
        "lemma-2.2-dsd-consistency",
        "lemma-2.2",
        "Seidel matrix of a switch equals DSD on random instances (n <= 12)",
        json!({ "instances": 120, "failures": 0 }),
        json!(dsd),
        dsd.failures == 0 && dsd.instances == 120,
    );

    let scan_stats = exhaustive_oracle_scan();
    r.record(
        "check-srg-oracle-exhaustive",
        "section-2",
        "check_srg agrees with the naive pair-counting oracle on every graph \
         with at most 8 vertices",
        json!({ "graphs": EXHAUSTIVE_SCAN_TOTAL, "disagreements": 0 }),
        json!(scan_stats),
        scan_stats.graphs == EXHAUSTIVE_SCAN_TOTAL && scan_stats.disagreements == 0,
    );
    let random16 = random16_oracle_suite(&mut rng, 1000);
    r.record(
        "check-srg-oracle-random16",
        "section-2",
        "check_srg agrees with the oracle on 1000 random 16-vertex graphs",
        json!({ "instances": 1000, "failures": 0 }),
        json!(random16),
        random16.failures == 0 && random16.instances == 1000,
    );

    let relabelings = 20;
    let relabel_ok = (0..relabelings).all(|_| {
        let perm = random_permutation(&mut rng, 36);
        let relabeled = gamma_prime.relabel(&perm).expect("same order");
        automorphism_group(&relabeled).expect("order fits u64").order() == AUT_GAMMA_PRIME_ORDER
    });
    r.record(
        "aut-order-relabeling-invariance",
        "lemma-4.4",
        "the computed |Aut Γ'| is unchanged under 20 random relabelings",
        json!({ "relabelings": relabelings, "all_equal": true }),
        json!({ "relabelings": relabelings, "all_equal": relabel_ok }),
        relabel_ok,
    );

    // ---- mutation sensitivity ---------------------------------------------------
    let flips = 10;
    let mut flip_results = Vec::new();
    let mut all_flips_detected = true;
    for _ in 0..flips {
        let u = rng.random_range(0..36usize);
        let v = loop {
            let v = rng.random_range(0..36usize);
            if v != u {
                break v;
            }
        };
        let mut mutated = gamma_prime.clone();
        mutated.toggle_edge(u, v).expect("in range");
        let still_srg = mutated.check_srg() == SrgOutcome::Srg(GAMMA_PRIME_PARAMS);
        let complement_still_srg =
            mutated.complement().check_srg() == SrgOutcome::Srg(COMPLEMENT_PARAMS);
        let detected = !still_srg || !complement_still_srg;
        all_flips_detected &= detected;
        flip_results.push(json!({
            "pair": [u.min(v), u.max(v)],
            "detected": detected,
        }));
    }
    r.record(
        "mutation-single-edge-flip",
        "acceptance",
        "each of 10 random single-pair flips of Γ' breaks the srg(36,21,12,12) \
         or the complement srg(36,14,4,6) verification",
        json!({ "flips": flips, "all_detected": true }),
        Value::Array(flip_results),
        all_flips_detected,
    );

    // ---- criterion summaries -----------------------------------------------------
    r.criterion(
        1,
        "|V1| = 36 in 12 projective classes of 3; 9 isotropic points",
        &["v1-size", "v1-projective-classes", "isotropic-point-count"],
    );
    r.criterion(
        2,
        "Γ verifies as srg(36,15,6,6) by pair counting and matrix identity",
        &["definition-4.1-gamma-srg"],
    );
    r.criterion(
        3,
        "Seidel row profile (1,15,20); SJ = JS = 5J; quadratic Seidel identity",
        &["lemma-4.3-seidel-row-profile", "eq-4", "eq-5", "eq-5-as-printed"],
    );
    r.criterion(
        4,
        "the 924-scan finds valid switching sets; Γ' is 21-regular srg(36,21,12,12); eq-7, eq-9",
        &[
            "switch-scan-examined",
            "lemma-4.3-valid-switch-count",
            "lemma-4.2-regular-21",
            "lemma-4.3-gamma-prime-srg",
            "eq-7",
            "eq-9",
        ],
    );
    r.criterion(
        5,
        "neighbour split 9 (same side, h in {0,1}) + 12 (cross side, h in {w,W})",
        &["lemma-4.2-neighbour-split"],
    );
    r.criterion(
        6,
        "complement of Γ' verifies as srg(36,14,4,6)",
        &["theorem-4.5-complement-srg", "lemma-2.1-complement-formula"],
    );
    r.criterion(
        7,
        "edge trichotomy holds with tallies 72 + 72 + 108 = 252 and no violations",
        &["theorem-4.5-edge-types"],
    );
    r.criterion(
        8,
        "equal associated two-graphs, regular with lambda = 18",
        &[
            "lemma-2.3-two-graph-equal",
            "two-graph-regular-lambda-18",
            "two-graph-even-intersection",
            "lemma-2.3-switching-witness",
        ],
    );
    r.criterion(
        9,
        "|Aut Γ| = 51840, |Aut Γ'| = 12096, both transitive, rank 3 with \
         subdegrees {1,15,20} and {1,14,21}",
        &[
            "definition-4.1-aut-gamma-order",
            "lemma-4.4-aut-gamma-prime-order",
            "aut-complement-order",
            "aut-transitivity",
            "section-3-rank-gamma",
            "section-3-rank-complement",
        ],
    );
    r.criterion(
        10,
        "property suites: complement round-trip, switching laws, DSD, oracle \
         agreement, relabeling invariance",
        &[
            "lemma-2.1-roundtrip",
            "section-2-switching-laws",
            "lemma-2.2-dsd-consistency",
            "check-srg-oracle-exhaustive",
            "check-srg-oracle-random16",
            "aut-order-relabeling-invariance",
        ],
    );
    r.criterion(
        11,
        "mutation sensitivity: single-pair flips are detected",
        &["mutation-single-edge-flip"],
    );

    let passed = r.claims.iter().all(|c| c.pass);
    VerificationReport {
        passed,
        environment: EnvironmentStamp {
            package: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            seed: options.seed,
            threads: rayon::current_num_threads(),
            timestamp_unix: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        },
        elapsed_ms: start.elapsed().as_millis(),
        claims: r.claims,
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SuiteStats {
    pub instances: usize,
    pub failures: usize,
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("small");
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    let mask = rng.random_range(0..(1u64 << n));
    VertexSet::from_mask(mask)
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> crate::perm::Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    // Fisher–Yates
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        images.swap(i, j);
    }
    crate::perm::Permutation::from_images(images).expect("shuffle is a bijection")
}

fn switching_law_suite(rng: &mut ChaCha8Rng, instances: usize) -> SuiteStats {
    let mut failures = 0;
    for _ in 0..instances {
        let n = rng.random_range(4..=12);
        let g = random_graph(rng, n, 0.5);
        let y1 = random_subset(rng, n);
        let y2 = random_subset(rng, n);
        let involution = g.switch(y1).switch(y1) == g;
        let symmetric_difference =
            g.switch(y1).switch(y2) == g.switch(y1.symmetric_difference(y2));
        let full_set = g.switch(VertexSet::from_mask((1u64 << n) - 1)) == g;
        if !(involution && symmetric_difference && full_set) {
            failures += 1;
        }
    }
    SuiteStats {
        instances,
        failures,
    }
}

fn dsd_suite(rng: &mut ChaCha8Rng, instances: usize) -> SuiteStats {
    use crate::seidel::IntMatrix;
    let mut failures = 0;
    for _ in 0..instances {
        let n = rng.random_range(4..=12);
        let g = random_graph(rng, n, 0.5);
        let y = random_subset(rng, n);
        let d = IntMatrix::from_fn(n, |i, j| {
            if i != j {
                0
            } else if y.contains(i) {
                -1
            } else {
                1
            }
        });
        let dsd = d.mul(&g.seidel_matrix()).mul(&d);
        if g.switch(y).seidel_matrix() != dsd {
            failures += 1;
        }
    }
    SuiteStats {
        instances,
        failures,
    }
}

/// Naive strong-regularity oracle: explicit adjacency loops, no bitmask
/// counting and no matrix algebra. Kept deliberately separate from the
/// production path.
pub fn naive_srg_oracle(rows: &[u64], n: usize) -> Option<SrgParams> {
    if n == 0 {
        return None;
    }
    let adj = |i: usize, j: usize| (rows[i] >> j) & 1 == 1;
    let mut k = 0;
    for j in 0..n {
        if adj(0, j) {
            k += 1;
        }
    }
    for i in 1..n {
        let mut d = 0;
        for j in 0..n {
            if adj(i, j) {
                d += 1;
            }
        }
        if d != k {
            return None;
        }
    }
    if k == 0 || k == n - 1 {
        return None;
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut common = 0;
            for t in 0..n {
                if adj(i, t) && adj(j, t) {
                    common += 1;
                }
            }
            let slot = if adj(i, j) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c == common => {}
                Some(_) => return None,
            }
        }
    }
    Some(SrgParams::new(n, k, lambda.unwrap(), mu.unwrap()))
}

#[derive(Debug, Clone, Copy, Serialize, Default)]
pub struct ScanStats {
    pub graphs: u64,
    pub srgs_found: u64,
    pub disagreements: u64,
}

/// Compares `check_srg` with the naive oracle on every labeled graph with
/// at most 8 vertices (270 566 476 graphs), enumerating edge masks in Gray
/// order so each step toggles a single pair. The mask space for n = 8 is
/// split into chunks processed in parallel and merged in order, so the
/// statistics do not depend on the thread count.
pub fn exhaustive_oracle_scan() -> ScanStats {
    let mut total = ScanStats {
        graphs: 1, // the empty graph on 0 vertices: both sides reject it
        ..Default::default()
    };
    debug_assert_eq!(srg_scan_rows(&[], 0).params(), naive_srg_oracle(&[], 0));
    for n in 1..=8usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let bits = pairs.len();
        let total_masks: u64 = 1 << bits;
        let chunk_count: u64 = if bits >= 20 { 256 } else { 1 };
        let chunk_size = total_masks.div_ceil(chunk_count);
        let chunk_stats: Vec<ScanStats> = (0..chunk_count)
            .into_par_iter()
            .map(|chunk| {
                let start = chunk * chunk_size;
                let end = total_masks.min(start + chunk_size);
                if start >= end {
                    return ScanStats::default();
                }
                scan_mask_range(&pairs, n, start, end)
            })
            .collect();
        for s in chunk_stats {
            total.graphs += s.graphs;
            total.srgs_found += s.srgs_found;
            total.disagreements += s.disagreements;
        }
    }
    total
}

fn scan_mask_range(pairs: &[(usize, usize)], n: usize, start: u64, end: u64) -> ScanStats {
    let mut rows = [0u64; 8];
    let gray = |i: u64| i ^ (i >> 1);
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if (gray(start) >> bit) & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    let mut stats = ScanStats::default();
    let mut index = start;
    loop {
        stats.graphs += 1;
        let production = srg_scan_rows(&rows[..n], n).params();
        let oracle = naive_srg_oracle(&rows[..n], n);
        if production != oracle {
            stats.disagreements += 1;
        } else if production.is_some() {
            stats.srgs_found += 1;
            // exercise the full production path (matrix-identity guard)
            let g = Graph::from_edges(
                n,
                &pairs
                    .iter()
                    .filter(|&&(u, v)| (rows[u] >> v) & 1 == 1)
                    .copied()
                    .collect::<Vec<_>>(),
            )
            .expect("valid");
            assert_eq!(g.check_srg().params(), production);
        }
        index += 1;
        if index == end {
            break;
        }
        // Gray step: bit tz(index) flips between gray(index-1) and gray(index)
        let bit = index.trailing_zeros() as usize;
        let (u, v) = pairs[bit];
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    }
    stats
}

fn random16_oracle_suite(rng: &mut ChaCha8Rng, instances: usize) -> SuiteStats {
    let mut failures = 0;
    for _ in 0..instances {
        let g = random_graph(rng, 16, 0.5);
        let rows: Vec<u64> = (0..16).map(|v| g.neighbors_mask(v)).collect();
        if g.check_srg().params() != naive_srg_oracle(&rows, 16) {
            failures += 1;
        }
    }
    SuiteStats {
        instances,
        failures,
    }
}

//! Breadth-first search for blocks meeting conditions (ii)–(iv).
//!
//! Level 0 holds every initial block with 2 to `max_rows` rows; level
//! `k + 1` holds the right extensions of level `k`. Blocks are visited in a
//! fixed order (level by level, canonical order inside a level), identical
//! blocks are visited once, and the search stops after `budget` visits.
//! Extensions of a level are computed on a worker pool and merged back in
//! that fixed order, so the outcome does not depend on the number of
//! workers.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use super::building::{
    create_initial_blocks, extend_right_with, BuildingBlock, DEFAULT_MAX_SUFFIX,
};
use super::conditions::{check_conditions, cond_iv_unreachable, ConditionReport, Provenance};
use super::word::{BlockSymbol, BlockWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_rows: usize,
    /// Maximum number of distinct blocks visited.
    pub budget: usize,
    pub threads: usize,
    pub max_suffix: usize,
    /// Stop extending after this many extension levels.
    pub max_extensions: Option<usize>,
    /// Skip extending blocks that can never satisfy condition (iv).
    pub prune: bool,
}

impl SearchConfig {
    pub fn new(max_rows: usize, budget: usize) -> Self {
        Self {
            max_rows,
            budget,
            threads: 1,
            max_suffix: DEFAULT_MAX_SUFFIX,
            max_extensions: None,
            prune: true,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub block: BuildingBlock,
    pub provenance: Provenance,
    pub report: ConditionReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Qualifying blocks in canonical block order.
    pub found: Vec<Found>,
    pub visited: usize,
    pub budget_exhausted: bool,
}

/// Every word of `{ε,v,vv}{0,1}{ε,w,ww}` in canonical order.
pub fn initial_seeds() -> Vec<BlockWord> {
    use BlockSymbol::*;
    let mut out = Vec::new();
    for prefix in 0..=2 {
        for literal in [Zero, One] {
            for suffix in 0..=2 {
                let mut s = vec![V; prefix];
                s.push(literal);
                s.extend(std::iter::repeat_n(W, suffix));
                out.push(BlockWord(s));
            }
        }
    }
    out.sort();
    out
}

struct Node {
    block: BuildingBlock,
    provenance: Provenance,
}

fn initial_nodes(max_rows: usize) -> Vec<Node> {
    let mut nodes = Vec::new();
    for depth in 1..max_rows {
        for seed in initial_seeds() {
            let blocks = create_initial_blocks(&seed, depth).expect("seed is valid");
            nodes.extend(blocks.into_iter().map(|block| Node {
                block,
                provenance: Provenance::initial(seed.clone(), depth),
            }));
        }
    }
    nodes
}

pub fn search(config: &SearchConfig) -> SearchOutcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .expect("worker pool");
    let mut visited: HashSet<BuildingBlock> = HashSet::new();
    let mut found = Vec::new();
    let mut frontier = initial_nodes(config.max_rows);
    let mut level = 0usize;
    let mut exhausted = false;

    while !frontier.is_empty() {
        let may_extend = config.max_extensions.is_none_or(|m| level < m);
        let mut to_extend = Vec::new();
        for node in frontier {
            if visited.contains(&node.block) {
                continue;
            }
            if visited.len() >= config.budget {
                exhausted = true;
                break;
            }
            visited.insert(node.block.clone());
            let report = check_conditions(&node.block, &node.provenance);
            if report.search_target() {
                found.push(Found {
                    block: node.block.clone(),
                    provenance: node.provenance.clone(),
                    report,
                });
            }
            if may_extend && !(config.prune && cond_iv_unreachable(&node.block)) {
                to_extend.push(node);
            }
        }
        if exhausted {
            break;
        }
        let children: Vec<BTreeSet<BuildingBlock>> = pool.install(|| {
            to_extend
                .par_iter()
                .map(|n| extend_right_with(&n.block, config.max_suffix).unwrap_or_default())
                .collect()
        });
        frontier = to_extend
            .iter()
            .zip(children)
            .flat_map(|(parent, kids)| {
                let provenance = parent.provenance.extended();
                kids.into_iter().map(move |block| Node {
                    block,
                    provenance: provenance.clone(),
                })
            })
            .collect();
        level += 1;
    }

    found.sort_by(|a, b| a.block.cmp(&b.block));
    SearchOutcome {
        found,
        visited: visited.len(),
        budget_exhausted: exhausted,
    }
}

/// Text document for a search: header fields, then one section per block.
pub fn render_outcome(config: &SearchConfig, outcome: &SearchOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "max_rows = {}", config.max_rows);
    let _ = writeln!(out, "budget = {}", config.budget);
    let _ = writeln!(out, "max_suffix = {}", config.max_suffix);
    let _ = writeln!(out, "visited = {}", outcome.visited);
    let _ = writeln!(out, "budget_exhausted = {}", outcome.budget_exhausted);
    let _ = writeln!(out, "found = {}", outcome.found.len());
    for (i, f) in outcome.found.iter().enumerate() {
        let _ = writeln!(out);
        let _ = writeln!(out, "block = {}", i + 1);
        let _ = writeln!(out, "provenance = {}", f.provenance);
        for row in f.block.rows() {
            let _ = writeln!(out, "row = {row}");
        }
        let _ = writeln!(out, "cond_i = {}", f.report.cond_i);
        let _ = writeln!(out, "cond_ii = {}", f.report.cond_ii);
        let _ = writeln!(out, "cond_iii = {}", f.report.cond_iii);
        let _ = writeln!(out, "cond_iv = {}", f.report.cond_iv);
    }
    out
}

use std::collections::BTreeSet;

use posttag::blocks::{
    check_conditions, converting_set, create_initial_blocks, expand_literals, extend_right_with,
    initial_seeds, is_in_b, search, BlockSymbol, BlockWord, BuildingBlock, Provenance,
    SearchConfig,
};

const ALPHABET: [char; 5] = ['v', 'u', 'w', '0', '1'];

/// Membership by trying every split into prefix, literal, groups and suffix.
fn in_b_oracle(s: &str) -> bool {
    let s = s.as_bytes();
    for p in 0..=2usize.min(s.len()) {
        if !s[..p].iter().all(|&c| c == b'v') {
            continue;
        }
        for q in 0..=2usize {
            if p + 1 + q > s.len() {
                break;
            }
            let tail = &s[s.len() - q..];
            if !tail.iter().all(|&c| c == b'w') {
                continue;
            }
            if !matches!(s[p], b'0' | b'1') {
                continue;
            }
            let middle = &s[p + 1..s.len() - q];
            if middle.len().is_multiple_of(3)
                && middle
                    .chunks(3)
                    .all(|g| g[0] == b'u' && g[1] == b'u' && matches!(g[2], b'0' | b'1'))
            {
                return true;
            }
        }
    }
    false
}

fn choices(c: char) -> &'static [char] {
    match c {
        '0' => &['0', 'u', 'v', 'w'],
        '1' => &['1', 'u', 'v', 'w'],
        'w' => &['u', 'w'],
        'v' => &['v'],
        'u' => &['u'],
        _ => unreachable!(),
    }
}

/// Every position-wise replacement, filtered by the membership oracle.
fn converting_oracle(s: &str) -> BTreeSet<String> {
    let mut partial = vec![String::new()];
    for c in s.chars() {
        partial = partial
            .iter()
            .flat_map(|p| choices(c).iter().map(move |&r| format!("{p}{r}")))
            .collect();
    }
    partial.into_iter().filter(|w| in_b_oracle(w)).collect()
}

fn all_words(len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|p| ALPHABET.iter().map(move |c| format!("{p}{c}")))
            .collect();
    }
    out
}

fn bw(s: &str) -> BlockWord {
    s.parse().unwrap()
}

fn strings(set: &BTreeSet<BlockWord>) -> BTreeSet<String> {
    set.iter().map(|w| w.to_string()).collect()
}

fn block(rows: &[&str]) -> BuildingBlock {
    BuildingBlock::new(rows.iter().map(|r| bw(r)).collect()).unwrap()
}

fn expand_str(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '0' => "00",
            '1' => "1101",
            _ => "",
        })
        .collect()
}

#[test]
fn recognizer_matches_oracle_up_to_length_eight() {
    for len in 0..=8 {
        for s in all_words(len) {
            assert_eq!(is_in_b(&bw(&s)), in_b_oracle(&s), "{s}");
        }
    }
}

#[test]
fn converting_set_matches_oracle_up_to_length_seven() {
    for len in 0..=7 {
        for s in all_words(len) {
            assert_eq!(
                strings(&converting_set(&bw(&s))),
                converting_oracle(&s),
                "{s}"
            );
        }
    }
}

#[test]
fn expansion_length_law() {
    for len in 0..=5 {
        for s in all_words(len) {
            let w = bw(&s);
            let e = expand_literals(&w);
            assert_eq!(
                e.len(),
                2 * w.count(BlockSymbol::Zero) + 4 * w.count(BlockSymbol::One)
            );
            assert_eq!(e.to_string(), expand_str(&s));
        }
    }
}

#[test]
fn six_row_chain_rows_follow_from_each_other() {
    let rows = ["v1w", "1uu1", "vv0uu1ww", "v0uu0w", "v0ww", "0w"];
    for pair in rows.windows(2) {
        let next = converting_oracle(&expand_str(pair[0]));
        assert!(next.contains(pair[1]), "{} -> {}", pair[0], pair[1]);
    }
    let blocks = create_initial_blocks(&bw("v1w"), 5).unwrap();
    assert!(blocks.contains(&block(&rows)));
}

/// Initial-block creation written directly from its definition.
fn initial_oracle(seed: &str, depth: usize) -> BTreeSet<Vec<String>> {
    let mut partial: Vec<Vec<String>> = converting_oracle(seed)
        .into_iter()
        .map(|r| vec![r])
        .collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for rows in &partial {
            let prev = rows.last().unwrap();
            if !prev.contains(['0', '1']) {
                continue;
            }
            for r in converting_oracle(&expand_str(prev)) {
                let mut grown = rows.clone();
                grown.push(r);
                next.push(grown);
            }
        }
        partial = next;
    }
    partial.into_iter().collect()
}

fn as_rows(blocks: &BTreeSet<BuildingBlock>) -> BTreeSet<Vec<String>> {
    blocks
        .iter()
        .map(|b| b.rows().iter().map(|r| r.to_string()).collect())
        .collect()
}

#[test]
fn initial_blocks_match_oracle() {
    for (seed, depth) in [
        ("0", 1),
        ("0", 2),
        ("0", 3),
        ("1", 1),
        ("1", 2),
        ("v0w", 2),
        ("vv1", 1),
    ] {
        let got = create_initial_blocks(&bw(seed), depth).unwrap();
        assert_eq!(
            as_rows(&got),
            initial_oracle(seed, depth),
            "{seed} depth {depth}"
        );
    }
}

/// Right extension written directly from its definition.
fn extend_oracle(rows: &[&str], max_suffix: usize) -> BTreeSet<Vec<String>> {
    let base = rows[0].chars().filter(|c| matches!(c, '0' | '1')).count();
    let mut suffixes = Vec::new();
    for len in 1..=max_suffix {
        for bits in 0..(1u32 << len) {
            let s: String = (0..len)
                .map(|k| {
                    if bits >> (len - 1 - k) & 1 == 1 {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect();
            let set = converting_oracle(&format!("{}{s}", rows[0]));
            if set.len() == 1 {
                let only = set.iter().next().unwrap();
                if only.chars().filter(|c| matches!(c, '0' | '1')).count() == base + 1 {
                    suffixes.push(s);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in suffixes {
        let mut stack = vec![(
            rows.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            0usize,
            s,
        )];
        while let Some((current, i, suffix)) = stack.pop() {
            if i == current.len() {
                out.insert(current);
                continue;
            }
            let orig_len = current[i].chars().count();
            let joined: Vec<char> = format!("{}{suffix}", current[i]).chars().collect();
            for member in converting_oracle(&joined.iter().collect::<String>()) {
                let m: Vec<char> = member.chars().collect();
                let kept: String = (orig_len..joined.len())
                    .filter(|&j| matches!(joined[j], '0' | '1') && joined[j] == m[j])
                    .map(|j| joined[j])
                    .collect();
                let mut next = current.clone();
                next[i] = member;
                if kept.is_empty() {
                    out.insert(next);
                } else {
                    stack.push((next, i + 1, expand_str(&kept)));
                }
            }
        }
    }
    out
}

#[test]
fn right_extension_matches_oracle() {
    for (rows, max_suffix) in [
        (vec!["vv0"], 6),
        (vec!["0"], 4),
        (vec!["0", "0w"], 4),
        (vec!["0", "v0"], 4),
        (vec!["1ww", "vv1"], 3),
    ] {
        let got = extend_right_with(&block(&rows), max_suffix).unwrap_or_default();
        assert_eq!(as_rows(&got), extend_oracle(&rows, max_suffix), "{rows:?}");
    }
}

fn count(s: &BlockWord, sym: BlockSymbol) -> usize {
    s.symbols().iter().filter(|&&c| c == sym).count()
}

#[test]
fn search_results_meet_the_conditions() {
    let outcome = search(&SearchConfig::new(3, 1500));
    assert!(!outcome.found.is_empty());
    for f in &outcome.found {
        let rows = f.block.rows();
        let n = rows.len() - 1;
        assert_eq!(rows[0], rows[n]);
        for i in 0..n {
            assert_eq!(
                count(&rows[i], BlockSymbol::W) + count(&rows[i + 1], BlockSymbol::V),
                2
            );
        }
        assert!(rows[..n].iter().any(|r| count(r, BlockSymbol::V) == 0));
        assert_eq!(check_conditions(&f.block, &f.provenance), f.report);
        assert!(f.report.cond_i);
    }
    let sorted: Vec<_> = {
        let mut v: Vec<_> = outcome.found.iter().map(|f| f.block.clone()).collect();
        v.sort();
        v
    };
    assert_eq!(
        outcome
            .found
            .iter()
            .map(|f| f.block.clone())
            .collect::<Vec<_>>(),
        sorted
    );
}

fn exhaustive(
    max_rows: usize,
    extensions: usize,
    prune: bool,
    budget: usize,
) -> BTreeSet<BuildingBlock> {
    let mut config = SearchConfig::new(max_rows, budget);
    config.max_extensions = Some(extensions);
    config.max_suffix = 3;
    config.prune = prune;
    let outcome = search(&config);
    if budget == usize::MAX {
        assert!(!outcome.budget_exhausted);
    }
    outcome.found.into_iter().map(|f| f.block).collect()
}

#[test]
fn pruning_loses_nothing() {
    let unpruned = exhaustive(3, 2, false, usize::MAX);
    let pruned = exhaustive(3, 2, true, usize::MAX);
    assert_eq!(pruned, unpruned);
    for budget in [10, 100, 400] {
        let partial = exhaustive(3, 2, true, budget);
        assert!(partial.is_subset(&unpruned), "budget {budget}");
    }
}

#[test]
fn initial_seeds_are_the_eighteen_short_words() {
    let got: BTreeSet<String> = initial_seeds().iter().map(|s| s.to_string()).collect();
    let mut want = BTreeSet::new();
    for p in ["", "v", "vv"] {
        for l in ["0", "1"] {
            for s in ["", "w", "ww"] {
                want.insert(format!("{p}{l}{s}"));
            }
        }
    }
    assert_eq!(got, want);
}

#[test]
fn external_blocks_fail_condition_one() {
    let b = block(&["0uu1ww", "0uu1ww"]);
    let report = check_conditions(&b, &Provenance::external());
    assert!(!report.cond_i);
    assert!(report.search_target());
}

use posttag::constants::{omega_table, word_a, word_b, word_c, OMEGA_CUTS};
use posttag::family::{check_step, table_mismatches, CHAIN_STEPS};
use posttag::{full_pass, instantiate, run, verify_chain, OutcomeKind, Quadruplet, TagRules};

#[test]
fn each_step_commutes_with_a_pass() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    assert!(chain.is_valid());
    for (k, step) in chain.steps.iter().enumerate() {
        for n in 0..=3 {
            for m in 0..=3 {
                let before = instantiate(&step.source, n, m);
                assert_eq!(
                    full_pass(&before).unwrap(),
                    instantiate(&step.derived, n, m),
                    "step {} n={n} m={m}",
                    k + 1
                );
            }
        }
    }
}

#[test]
fn closure_gives_growth_in_the_predicted_step_count() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    assert!(chain.closure_ok);
    let seed = chain.seed();
    for n in 0..=5 {
        for m in 0..=5 {
            let predicted = chain.tag_iterations(n, m);
            let out = run(
                &instantiate(seed, n, m),
                &TagRules::post(),
                predicted,
                Some(&instantiate(seed, n + 1, m + 1)),
            )
            .unwrap();
            assert_eq!(out.kind, OutcomeKind::TargetReached, "n={n} m={m}");
            assert_eq!(out.steps_taken, predicted, "n={n} m={m}");
        }
    }
}

#[test]
fn pass_replay_follows_the_chain() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    let mut cur = instantiate(chain.seed(), 1, 2);
    for q in &chain.quadruplets[1..] {
        cur = full_pass(&cur).unwrap();
        assert_eq!(cur, instantiate(q, 1, 2));
    }
    assert_eq!(cur, instantiate(chain.seed(), 2, 3));
}

#[test]
fn chain_agrees_with_the_table() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    assert!(table_mismatches(&chain).is_empty());
    let table = omega_table();
    assert_eq!(table.len(), 14);
    for (q, row) in chain.quadruplets.iter().zip(&table) {
        assert_eq!((&q.a, &q.c, q.x), (&row.a, &row.c, row.x));
    }
    let xs: Vec<u8> = chain.quadruplets.iter().map(|q| q.x.value()).collect();
    assert_eq!(xs, OMEGA_CUTS);
    assert_eq!(chain.quadruplets[0].b, word_b());
    assert_eq!(table[0].a, word_a());
    assert_eq!(table[0].c, word_c());
    assert_eq!(table[13].a, word_a());
    assert_eq!(table[13].c, word_c());
    assert_eq!(table[9].a.to_string(), "000011011101110100");
    assert_eq!(table[9].x.value(), 2);
}

#[test]
fn derived_lengths_follow_the_sampling_law() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    for step in &chain.steps {
        let sampled: Vec<bool> = step
            .source
            .b
            .iter()
            .skip(step.source.x.value() as usize)
            .step_by(3)
            .collect();
        let ones = sampled.iter().filter(|&&b| b).count();
        assert_eq!(step.derived.b.len(), 4 * ones + 2 * (sampled.len() - ones));
    }
}

#[test]
fn tampered_steps_are_caught() {
    let chain = verify_chain(&Quadruplet::standard_seed(), CHAIN_STEPS).unwrap();
    let step = &chain.steps[4];
    let mut derived = step.derived.clone();
    derived.b = derived.b.concat(&"0".parse().unwrap());
    let checks = check_step(&step.source, &derived, step.y);
    assert!(!checks.e_ok);
    assert!(checks.d_ok && checks.f_ok && checks.y_eq);
    let wrong_y = step.y + posttag::Residue::ONE;
    assert!(!check_step(&step.source, &step.derived, wrong_y).y_eq);
}

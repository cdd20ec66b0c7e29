mod common;

use common::{all_words, criterion_instances as instances, oracle_code_minimal, oracle_word_minimal, table};
use minicode_core::code::{defining_set, linearity_check};
use minicode_core::minimality::{
    ab_condition, cf_case_check, dhz_criterion, is_minimal_definition, rank_criterion_code,
    rank_criterion_codeword, CheckOptions, Verdict,
};
use minicode_core::{Field, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn definition_dhz_and_rank_criteria_agree() {
    let mut nonlinear = 0;
    let mut binary_nonlinear = 0;
    for f in instances() {
        if linearity_check(&f).unwrap().is_some() {
            continue;
        }
        nonlinear += 1;
        if f.field().q() == 2 {
            binary_nonlinear += 1;
        }
        let d = defining_set(&f).unwrap();
        let oracle = oracle_code_minimal(&d);
        let def = is_minimal_definition(&d).unwrap().is_minimal();
        let dhz = dhz_criterion(&d).unwrap().is_minimal();
        let rank = rank_criterion_code(&d, &CheckOptions::default()).unwrap().is_minimal();
        assert_eq!((def, dhz, rank), (oracle, oracle, oracle), "{:?}", f.table().unwrap());
    }
    // 16 of the 256 binary tables are linear on nonzero x (8 forms, f(0) free)
    assert_eq!(binary_nonlinear, 240);
    assert!(nonlinear >= 240 + 190);
}

#[test]
fn ab_condition_never_claims_a_non_minimal_code() {
    let mut confirmed = 0;
    for f in instances() {
        if linearity_check(&f).unwrap().is_some() {
            continue;
        }
        let d = defining_set(&f).unwrap();
        let ab = ab_condition(&d).unwrap();
        assert_ne!(ab.verdict, Verdict::NotMinimal);
        if ab.is_minimal() {
            assert!(oracle_code_minimal(&d));
            confirmed += 1;
        }
    }
    assert!(confirmed > 0, "no instance exercised the sufficient condition");
}

#[test]
fn function_case_check_matches_codeword_oracle() {
    let f3 = Field::prime(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 50 {
        let f = table(&f3, 3, (0..27).map(|_| rng.gen_range(0..3)).collect());
        if linearity_check(&f).unwrap().is_some() {
            continue;
        }
        checked += 1;
        let d = defining_set(&f).unwrap();
        let words = all_words(&d);
        for (y, c) in &words {
            let (u, v) = (y[0], Vector(y[1..].to_vec()));
            let report = cf_case_check(u, &v, &f).unwrap();
            let oracle = oracle_word_minimal(&d, &words, c);
            assert_eq!(report.is_minimal(), oracle, "f = {:?}, y = {y}", f.table().unwrap());
            assert_eq!(rank_criterion_codeword(y, &d).unwrap().is_minimal(), oracle);
        }
    }
}

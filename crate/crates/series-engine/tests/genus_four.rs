//! End-to-end verification of the genus-4 presentation against brute-force
//! coset enumeration beyond depth one.

use hecke_oracle::{EnumConfig, NormalizationOrder};
use series_engine::compare_with_oracle;
use sym_table::SymConvention;

fn config() -> EnumConfig {
    EnumConfig {
        workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..EnumConfig::default()
    }
}

fn check(p: i128, delta: u32, expected_cosets: u128) {
    let cmp = compare_with_oracle(
        4,
        p,
        delta,
        SymConvention::OrbitSum,
        NormalizationOrder::Descending,
        &config(),
    )
    .unwrap();
    assert_eq!(cmp.coset_count, expected_cosets);
    assert!(
        cmp.count_matches,
        "closed form does not predict the coset count at p {p}, delta {delta}"
    );
    assert!(
        cmp.images_match,
        "images differ at p {p}, delta {delta}:\n  closed {}\n  oracle {}",
        cmp.closed_form, cmp.oracle
    );
}

#[test]
fn depth_two_image_at_p_two_matches_the_closed_form() {
    check(2, 2, 3_127_831);
}

#[test]
fn depth_one_image_at_p_three_matches_the_closed_form() {
    // prod (3^i + 1) over i = 1..4
    check(3, 1, 91_840);
}

//! The embedded expanded table must stay in lockstep with the static source
//! data, and its hash must stay stable so reports remain comparable across
//! runs and machines.

use sym_table::{KTable, SymConvention};

#[test]
fn embedded_json_matches_the_static_table() {
    let built = KTable::build(SymConvention::OrbitSum);
    let embedded = KTable::embedded().expect("embedded table parses");
    assert_eq!(
        embedded, built,
        "data/ktable-genus4.json is stale; regenerate with \
         `cargo run -p sym-table --example gen_table`"
    );
}

#[test]
fn content_hash_is_frozen() {
    // Any change to the table data, the expansion, or the JSON encoding
    // shows up here first. Regenerate the embedded file and update this
    // constant only after re-verifying the pairing and oracle checks.
    let built = KTable::build(SymConvention::OrbitSum);
    assert_eq!(
        built.content_hash(),
        "ecc687ee00d8b8ef05dc40eb5e60bda05ffe7370945489ffa481dd3c586946d7"
    );
}

//! Regenerates the embedded expanded table:
//!
//! ```sh
//! cargo run -p sym-table --example gen_table > crates/sym-table/data/ktable-genus4.json
//! ```

use sym_table::{KTable, SymConvention};

fn main() {
    let table = KTable::build(SymConvention::OrbitSum);
    println!(
        "{}",
        serde_json::to_string_pretty(&table.to_json()).expect("table serializes")
    );
}

//! The table dump is frozen: any change to the classification data layer has
//! to update `tests/data/tables_expected.txt` deliberately.

use gsp4_bessel::gsp4::tables::dump_tables;

#[test]
fn derived_tables_match_the_frozen_transcription() {
    let expected = include_str!("data/tables_expected.txt");
    let got = dump_tables();
    if got != expected {
        let mismatch = got
            .lines()
            .zip(expected.lines())
            .enumerate()
            .find(|(_, (a, b))| a != b);
        match mismatch {
            Some((i, (a, b))) => {
                panic!("table dump diverges at line {}:\n  got      {a}\n  expected {b}", i + 1)
            }
            None => panic!(
                "table dump length changed: {} vs {} lines",
                got.lines().count(),
                expected.lines().count()
            ),
        }
    }
}

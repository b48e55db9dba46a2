#![no_main]

use fincat_dsl::{format_spec, parse_spec, parse_spec_bytes};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(doc) = parse_spec_bytes(data) {
        let text = format_spec(&doc);
        let again = parse_spec(&text).expect("formatted output parses");
        assert_eq!(again, doc);
        assert_eq!(format_spec(&again), text);
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Err(e) = fincat_dsl::parse_spec_bytes(data) {
        assert!(e.span.line >= 1 && e.span.column >= 1);
    }
});

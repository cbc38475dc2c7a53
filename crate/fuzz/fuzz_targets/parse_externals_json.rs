#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors_cli::json::{externals_from_json, externals_to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(ext) = externals_from_json(s) {
            assert_eq!(externals_from_json(&externals_to_json(&ext)).unwrap(), ext);
        }
    }
});

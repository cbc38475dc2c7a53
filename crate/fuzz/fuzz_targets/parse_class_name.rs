#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors_cli::names::ClassName;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(name) = s.parse::<ClassName>() {
            assert_eq!(name.to_string(), s);
        }
    }
});

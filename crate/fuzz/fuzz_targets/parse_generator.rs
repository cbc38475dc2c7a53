#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors::Generator;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(g) = s.parse::<Generator>() {
            assert_eq!(g.to_string(), s);
        }
    }
});

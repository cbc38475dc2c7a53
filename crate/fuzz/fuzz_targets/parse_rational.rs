#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors::Rational;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = s.parse::<Rational>() {
            // canonical text parses back to the same value
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
});

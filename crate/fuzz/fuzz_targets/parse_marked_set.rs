#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors::m0n::intersect_nonempty;
use trace_divisors_cli::sets::parse_marked_set;

fuzz_target!(|data: &[u8]| {
    let Some((&b, rest)) = data.split_first() else {
        return;
    };
    let b = u32::from(b % 32);
    if let Ok(s) = std::str::from_utf8(rest) {
        if let Ok(set) = parse_marked_set(b, s) {
            let again = parse_marked_set(b, &set.to_string()).unwrap();
            assert_eq!(again, set);
            assert!(intersect_nonempty(&set, &again).unwrap());
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use trace_divisors_cli::json::{class_from_json, class_to_json};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok((class, norm)) = class_from_json(s) {
            let text = class_to_json(&class, norm);
            let (back, back_norm) = class_from_json(&text).unwrap();
            assert_eq!(back, class);
            assert_eq!(class_to_json(&back, back_norm), text);
        }
    }
});

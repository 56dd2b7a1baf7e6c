#![no_main]

use ellblock_core::group_spec::{parse_base_spec, parse_group_spec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group_spec(s) {
        assert_eq!(parse_group_spec(&g.to_string()).unwrap(), g);
    }
    if let Ok(b) = parse_base_spec(s) {
        assert_eq!(parse_base_spec(&b.to_string()).unwrap(), b);
    }
});

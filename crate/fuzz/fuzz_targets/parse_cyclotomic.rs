#![no_main]

use ellblock_core::cyclotomic::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(x) = Cyclotomic::from_json_str(s) else { return };
    let again = Cyclotomic::from_json_str(&serde_json::to_string(&x).unwrap()).unwrap();
    assert_eq!(again, x);
    assert_eq!(x.conj().conj(), x);
    assert!((&x - &x).is_zero());
    let _ = x.to_string();
});

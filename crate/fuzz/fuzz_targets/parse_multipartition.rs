#![no_main]

use ellblock_core::partition::MultiPartition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(m) = MultiPartition::from_json_str(s) else { return };
    let again = MultiPartition::from_json_str(&serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(again, m);
    assert_eq!(m.size(), m.components().iter().map(|p| p.size()).sum::<usize>());
    let _ = m.to_string();
});

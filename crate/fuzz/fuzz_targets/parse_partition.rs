#![no_main]

use ellblock_core::partition::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(p) = Partition::from_json_str(s) else { return };
    let again = Partition::from_json_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(again, p);
    assert_eq!(p.conjugate().conjugate(), p);
    if p.size() <= 30 {
        for ell in 2..=5 {
            let cq = p.ell_core_quotient(ell).unwrap();
            assert_eq!(p.size(), cq.core.size() + ell * cq.quotient.size());
            assert_eq!(Partition::from_core_quotient(&cq.core, &cq.quotient, ell).unwrap(), p);
        }
    }
});

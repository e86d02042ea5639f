#![no_main]

use colorful_core::{ColoredTriangulation, Triangulation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = Triangulation::from_json_str(text) {
        // A parsed triangulation survives a round trip and can be flipped.
        assert_eq!(Triangulation::from_json_str(&t.to_json()).as_ref(), Ok(&t));
        for d in t.flip_units() {
            let u = t.flip(d).expect("flip unit");
            let back = u.flip(t.flip_partner(d).expect("flip unit")).expect("partner present");
            assert_eq!(back, t);
        }
    }
    if let Ok(t) = ColoredTriangulation::from_json_str(text) {
        assert_eq!(ColoredTriangulation::from_json_str(&t.to_json()).as_ref(), Ok(&t));
        let _ = t.neighbors();
    }
});

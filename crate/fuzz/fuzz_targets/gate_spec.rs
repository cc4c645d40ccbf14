//! Fuzzes the gate-spec parser: arbitrary strings must never panic, and
//! accepted specs must round-trip through the formatter.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lugraph::io::{format_gate_op, parse_gate_spec};

fuzz_target!(|data: &[u8]| {
    let Ok(spec) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(ops) = parse_gate_spec(spec) else {
        return;
    };
    let formatted: Vec<String> = ops.iter().map(format_gate_op).collect();
    let reparsed = parse_gate_spec(&formatted.join(",")).expect("formatted spec must parse");
    assert_eq!(ops.len(), reparsed.len());
});

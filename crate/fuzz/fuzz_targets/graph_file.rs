//! Fuzzes the graph file parser: arbitrary bytes must never panic, and any
//! accepted graph must survive a serialize/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;
use lugraph::io::GraphFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = GraphFile::parse(text) else {
        return;
    };
    let Ok(graph) = file.to_graph() else {
        return;
    };
    let json = GraphFile::from_graph(&graph, None).to_json();
    let back = GraphFile::parse(&json)
        .expect("serialized graph must parse")
        .to_graph()
        .expect("serialized graph must validate");
    assert_eq!(graph, back);
});

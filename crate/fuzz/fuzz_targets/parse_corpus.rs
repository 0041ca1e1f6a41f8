#![no_main]

use libfuzzer_sys::fuzz_target;
use logicrel::parser::corpus_lines;

fuzz_target!(|text: &str| {
    let mut last = 0;
    for line in corpus_lines(text) {
        assert!(line.number > last);
        last = line.number;
        assert!(!line.text.is_empty() && !line.text.starts_with('#'));
        let _ = line.parse_operands(4);
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use logicrel::{parse_with_max_letters, LogicError};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_with_max_letters(text, 4) {
        Ok(f) => assert!(f.letters().len() <= 4),
        Err(LogicError::Parse(e)) => assert!(e.offset <= text.len()),
        Err(LogicError::Limit { .. }) => {}
        Err(e) => panic!("unexpected error kind: {e}"),
    }
});

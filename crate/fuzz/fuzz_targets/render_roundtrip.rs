#![no_main]

use libfuzzer_sys::fuzz_target;
use logicrel::{parse, render, SyntaxStyle};

fuzz_target!(|text: &str| {
    let Ok(f) = parse(text) else { return };
    for style in [SyntaxStyle::Ascii, SyntaxStyle::Unicode] {
        let shown = render(&f, style);
        assert_eq!(parse(&shown).as_ref(), Ok(&f), "{shown}");
    }
});

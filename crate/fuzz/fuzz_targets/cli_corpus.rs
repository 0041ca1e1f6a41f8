#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    for cmd in ["classify", "implies"] {
        let mut stdin = data;
        let argv = ["logicrel", cmd, "--corpus", "-", "--json"];
        let out = logicrel_cli::run_with_env(argv, &mut stdin, Some("4"));
        assert!((0..=3).contains(&out.code));
    }
});

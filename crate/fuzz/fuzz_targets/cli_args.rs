#![no_main]

use libfuzzer_sys::fuzz_target;

// Whitespace-separated words become arguments. File and budget options are
// dropped and a small budget is forced.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut args = vec!["fincat".to_string(), "--budget".into(), "200".into()];
    let mut words = text.split_whitespace();
    while let Some(w) = words.next() {
        match w {
            "-s" | "--spec" | "--budget" => {
                words.next();
            }
            w if w.starts_with("--spec=") || w.starts_with("--budget=") || w.starts_with("-s") => {}
            w => args.push(w.to_string()),
        }
    }
    if let Ok(inv) = fincat_cli::run(args) {
        assert!(matches!(inv.report.exit_code, 0..=2));
        let _ = inv.render();
    }
});

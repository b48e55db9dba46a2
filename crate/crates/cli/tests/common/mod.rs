#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use fincat_cli::{run, Invocation, REPORT_SCHEMA};
use jsonschema::JSONSchema;
use serde_json::Value;

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../dsl/corpus")
}

/// Every `# run: ARGS => EXIT` line of every valid corpus file.
pub fn corpus_runs() -> Vec<(PathBuf, Vec<String>, i32)> {
    let mut files: Vec<PathBuf> = fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "cat"))
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        for line in text.lines().filter_map(|l| l.strip_prefix("# run: ")) {
            let (args, exit) = line.rsplit_once(" => ").unwrap();
            out.push((
                path.clone(),
                args.split_whitespace().map(String::from).collect(),
                exit.parse().unwrap(),
            ));
        }
    }
    out
}

pub fn invoke(spec: Option<&Path>, args: &[&str]) -> Invocation {
    let mut argv = vec!["fincat".to_string()];
    if let Some(p) = spec {
        argv.push("--spec".into());
        argv.push(p.display().to_string());
    }
    argv.extend(args.iter().map(|s| s.to_string()));
    run(argv).expect("not a help request")
}

pub fn schema() -> JSONSchema {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    JSONSchema::compile(&schema).unwrap()
}

pub fn assert_schema_valid(schema: &JSONSchema, json: &str) {
    let value: Value = serde_json::from_str(json).unwrap();
    let messages: Vec<String> = match schema.validate(&value) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{e} at {}", e.instance_path)).collect(),
    };
    panic!("schema violations: {messages:?}\n{json}");
}

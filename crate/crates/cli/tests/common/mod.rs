#![allow(dead_code)]

use std::path::{Path, PathBuf};

use quiverfin_cli::{run, Outcome};

pub fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Corpus files with the given extension in one subdirectory, sorted by name.
pub fn files(dir: &str, ext: &str) -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(corpus().join(dir))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    out.sort();
    out
}

/// Every setting file in the corpus.
pub fn setting_files() -> Vec<PathBuf> {
    ["euclidean", "settings", "fq"].iter().flat_map(|d| files(d, "quiver")).collect()
}

pub fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("quiverfin").chain(args.iter().copied()))
}

pub fn cli_path(command: &str, file: &Path) -> Outcome {
    cli(&[command, file.to_str().unwrap()])
}

/// Golden file recording `command` on a corpus setting.
pub fn golden_path(file: &Path, command: &str) -> PathBuf {
    let dir = file.parent().unwrap().file_name().unwrap();
    let stem = file.file_stem().unwrap().to_str().unwrap();
    corpus().join("golden").join(dir).join(format!("{stem}.{command}"))
}

/// Exit code line followed by stdout.
pub fn transcript(out: &Outcome) -> String {
    format!("exit {}\n{}", out.code, out.stdout)
}

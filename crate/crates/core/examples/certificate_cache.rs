// Drive the command line front end in-process: produce a certificate, hit
// the cache, then verify the stored envelope.

use biperron::error::Result;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("biperron-example-{}", std::process::id()));
    let cache = dir.to_string_lossy().into_owned();
    let args = ["biperron", "--cache-dir", &cache, "realize", "--poly", "1,-1,-1"];

    let first = biperron::cli::run(args);
    let second = biperron::cli::run(args);
    println!("exit {} cache {}, then cache {}", first.code, first.cache.name(), second.cache.name());
    assert_eq!(first.stdout, second.stdout);

    let file = dir.join("golden.json");
    std::fs::write(&file, &first.stdout).map_err(|e| biperron::error::Error::Io(e.to_string()))?;
    let verified = biperron::cli::run(["biperron", "--verify", &file.to_string_lossy()]);
    println!("verify exit {}", verified.code);
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}

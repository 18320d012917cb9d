//! Acceptance harness for the binary. One criterion, one pass or fail line,
//! wall-clock budget pinned in code.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn run(label: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let took = start.elapsed();
    match outcome {
        Ok(()) if took <= budget => println!("[PASS] {label} ({took:.2?}, budget {budget:?})"),
        Ok(()) => {
            println!("[FAIL] {label}: over time budget ({took:.2?} > {budget:?})");
            panic!("{label}: time budget exceeded");
        }
        Err(cause) => {
            println!("[FAIL] {label} ({took:.2?})");
            std::panic::resume_unwind(cause);
        }
    }
}

fn bes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = bes(args);
    assert!(out.status.success(), "fixture {args:?}");
    let path = dir.join(name);
    fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

/// Every invocation below runs twice per thread count with the same seeds.
/// All four stdout captures must agree byte for byte, and the exit code must
/// be the one the suite expects.
#[test]
fn criterion_12_reproducibility() {
    run(
        "byte-identical stdout, reruns under --threads {1, 4}",
        Duration::from_secs(300),
        || {
            let dir = tempfile::tempdir().unwrap();
            let k34 = fixture(
                dir.path(),
                "k34.txt",
                &["construct", "kst-plus", "--s", "3", "--t", "4"],
            );
            let k22 = fixture(
                dir.path(),
                "k22.txt",
                &["construct", "kst-plus", "--s", "2", "--t", "2"],
            );
            let rs = fixture(
                dir.path(),
                "rs.txt",
                &["generate", "--kind", "rs", "--n", "40"],
            );
            let planted = fixture(
                dir.path(),
                "planted.txt",
                &[
                    "generate",
                    "--kind",
                    "planted",
                    "--n",
                    "24",
                    "--s",
                    "3",
                    "--t",
                    "4",
                    "--density",
                    "2.5",
                    "--seed",
                    "99",
                ],
            );
            let dense = dir.path().join("dense.txt");
            fs::write(&dense, "h3 5 3\n0 1 2\n0 1 3\n0 1 4\n").unwrap();
            let dense = dense.to_str().unwrap().to_string();
            let edge = dir.path().join("edge.txt");
            fs::write(&edge, "h3 3 1\n0 1 2\n").unwrap();
            let edge = edge.to_str().unwrap().to_string();
            let cert = fixture(
                dir.path(),
                "cert.json",
                &[
                    "search", "--host", &dense, "--mode", "oracle", "--e", "3", "--v", "6",
                ],
            );

            let suite: &[(&[&str], i32)] = &[
                (&["construct", "kst-plus", "--s", "3", "--t", "4"], 0),
                (&["construct", "kst-plus", "--s", "16", "--t", "16"], 0),
                (
                    &[
                        "construct",
                        "tower",
                        "--s",
                        "3",
                        "--t",
                        "4",
                        "--target",
                        "96",
                    ],
                    0,
                ),
                (&["construct", "glue", "--input", &k34, "--m", "2"], 0),
                (&["construct", "glue", "--input", &k34, "--m", "4"], 0),
                (&["generate", "--kind", "rs", "--n", "40"], 0),
                (
                    &[
                        "generate",
                        "--kind",
                        "random-linear",
                        "--n",
                        "60",
                        "--density",
                        "2.0",
                        "--seed",
                        "7",
                    ],
                    0,
                ),
                (
                    &[
                        "generate",
                        "--kind",
                        "planted",
                        "--n",
                        "24",
                        "--s",
                        "3",
                        "--t",
                        "4",
                        "--density",
                        "2.5",
                        "--seed",
                        "99",
                    ],
                    0,
                ),
                (
                    &[
                        "search", "--host", &dense, "--mode", "oracle", "--e", "3", "--v", "6",
                    ],
                    0,
                ),
                (
                    &[
                        "search", "--host", &rs, "--mode", "oracle", "--e", "3", "--v", "6",
                    ],
                    3,
                ),
                (
                    &[
                        "search", "--host", &planted, "--mode", "bes", "--e", "24", "--s", "3",
                        "--t", "4", "--seed", "99",
                    ],
                    0,
                ),
                (
                    &[
                        "search",
                        "--pattern",
                        &edge,
                        "--host",
                        &k34,
                        "--mode",
                        "embed",
                        "--limit",
                        "7",
                    ],
                    0,
                ),
                (
                    &[
                        "search",
                        "--pattern",
                        &k22,
                        "--host",
                        &k22,
                        "--mode",
                        "embed",
                        "--limit",
                        "5",
                    ],
                    0,
                ),
                (&["verify", "--cert", &cert, "--host", &dense], 0),
                (&["bench"], 0),
            ];

            for (args, want) in suite {
                let mut captures: Vec<Vec<u8>> = Vec::new();
                for threads in ["1", "4"] {
                    for _ in 0..2 {
                        let mut argv: Vec<&str> = args.to_vec();
                        argv.extend(["--threads", threads]);
                        let out = bes(&argv);
                        assert_eq!(out.status.code(), Some(*want), "{args:?} threads {threads}");
                        captures.push(out.stdout);
                    }
                }
                for other in &captures[1..] {
                    assert_eq!(&captures[0], other, "stdout drift in {args:?}");
                }
            }
        },
    );
}

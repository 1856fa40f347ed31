//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every check is an exact equality.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use delent::canonical::{a_canonical, s_canonical};
use delent::enumerate::factorial;
use delent::perm::hat;
use delent::statistics::{del_set_a, del_set_s, des_set_s, maj_s, rmaj_of};
use delent::{alternating_group, symmetric_group, verify, Params};

type Outcome = Result<String, String>;

/// Runs registry entries for every `n` in `ns`, failing on the first
/// mismatch.
fn registry(names: &[&str], ns: impl Fn(&str) -> std::ops::RangeInclusive<usize>) -> Outcome {
    let mut runs = 0;
    for &name in names {
        for n in ns(name) {
            let r =
                verify(name, &Params::new(n), false).map_err(|e| format!("{name} n={n}: {e}"))?;
            if !r.pass {
                return Err(format!(
                    "{name} n={n} at {}: {} != {}",
                    r.failing_point.unwrap_or(r.point),
                    r.lhs,
                    r.rhs
                ));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} registry runs"))
}

fn min_n(name: &str) -> usize {
    delent::identities::info(name).expect("registered").min_n
}

fn expect_text(name: &str, n: usize, want: &str) -> Result<(), String> {
    let r = verify(name, &Params::new(n), false).map_err(|e| e.to_string())?;
    let got = r.lhs.to_text();
    if got == want && r.pass {
        Ok(())
    } else {
        Err(format!("{name} n={n}: got {got}, want {want}"))
    }
}

fn canonical_round_trip() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=8 {
        let mut seen = HashSet::new();
        for w in symmetric_group(n) {
            let word = s_canonical(&w);
            let back = word.to_permutation();
            if back != w || s_canonical(&back) != word {
                return Err(format!("S_{n}: round trip fails at {w}"));
            }
            seen.insert(word);
        }
        if seen.len() as u64 != factorial(n) {
            return Err(format!("S_{n}: {} distinct words", seen.len()));
        }
        checked += seen.len() as u64;
    }
    for m in 2..=9 {
        let mut seen = HashSet::new();
        for v in alternating_group(m) {
            let word = a_canonical(&v).map_err(|e| e.to_string())?;
            let back = word.to_permutation();
            if back != v || a_canonical(&back).map_err(|e| e.to_string())? != word {
                return Err(format!("A_{m}: round trip fails at {v}"));
            }
            seen.insert(word);
        }
        if seen.len() as u64 != factorial(m) / 2 {
            return Err(format!("A_{m}: {} distinct words", seen.len()));
        }
        checked += seen.len() as u64;
    }
    Ok(format!("{checked} words, all distinct"))
}

fn worked_examples() -> Outcome {
    let w = "[2,5,4,1,3]"
        .parse()
        .map_err(|e: delent::Error| e.to_string())?;
    let v = "[3,5,4,2,1]"
        .parse()
        .map_err(|e: delent::Error| e.to_string())?;
    let s_word = s_canonical(&w).to_string();
    let a_word = a_canonical(&v).map_err(|e| e.to_string())?.to_string();
    if s_word != "s1 | 1 | s3 s2 | s4 s3 s2" {
        return Err(format!("S-word {s_word}"));
    }
    if a_word != "a1 | a2 a1^-1 | a3 a2 a1" {
        return Err(format!("A-word {a_word}"));
    }
    Ok(format!("{s_word}; {a_word}"))
}

fn bivariate_s() -> Outcome {
    expect_text("thm61-s", 3, "1 + q + q*t + 2*q^2*t + q^3*t^2")?;
    registry(&["thm61-s"], |_| 1..=8)
}

fn bivariate_a() -> Outcome {
    expect_text("thm61-a", 2, "1 + 2*q*t")?;
    registry(&["thm61-a"], |_| 1..=8)
}

/// `c[m][j]`: permutations of `[m]` with `j` cycles, by direct counting.
fn cycle_table(max: usize) -> Vec<Vec<u64>> {
    let mut c = vec![vec![0u64; max + 2]; max + 1];
    c[0][0] = 1;
    for (m, row) in c.iter_mut().enumerate().skip(1) {
        for w in symmetric_group(m) {
            row[w.cycle_count()] += 1;
        }
    }
    c
}

fn stirling() -> Outcome {
    let c = cycle_table(8);
    for n in 1..=8 {
        let mut by_del = vec![0u64; n];
        let mut by_occ = vec![vec![0u64; n * n]; 5];
        for w in symmetric_group(n) {
            by_del[del_set_s(&w).len()] += 1;
            let word = s_canonical(&w);
            for k in 1..=4.min(n - 1) {
                by_occ[k][word.occurrences(k).map_err(|e| e.to_string())?] += 1;
            }
        }
        let mut by_del_a = vec![0u64; n];
        for v in alternating_group(n + 1) {
            by_del_a[del_set_a(&v).map_err(|e| e.to_string())?.len()] += 1;
        }
        for l in 0..n {
            if by_del[l] != c[n][l + 1] {
                return Err(format!(
                    "w_S({n},{l}) = {} vs c = {}",
                    by_del[l],
                    c[n][l + 1]
                ));
            }
            if by_del_a[l] != (1 << l) * c[n][l + 1] {
                return Err(format!("w_A({},{l}) = {}", n + 1, by_del_a[l]));
            }
        }
        for k in 1..=4.min(n - 1) {
            for (l, &count) in by_occ[k].iter().enumerate() {
                let want = if l < n - k + 1 {
                    factorial(k) * (k as u64).pow(l as u32) * c[n - k + 1][l + 1]
                } else {
                    0
                };
                if count != want {
                    return Err(format!("w_S({n},{l},{k}) = {count} vs {want}"));
                }
            }
        }
    }
    registry(
        &[
            "prop57-stirling-s",
            "prop57-stirling-a",
            "prop712-sk-occurrences",
        ],
        |name| min_n(name)..=8,
    )
}

fn appendix_hat() -> Outcome {
    let r = verify("appendix-hat", &Params::new(3).with_i(1), false).map_err(|e| e.to_string())?;
    if r.lhs.to_text() != "1 + q + q^2" || !r.pass {
        return Err(format!("n=3 instance {}", r.lhs));
    }
    registry(&["appendix-hat"], |name| min_n(name)..=8)
}

fn hat_involution() -> Outcome {
    for n in 1..=7 {
        for sigma in symmetric_group(n) {
            let h = hat(&sigma);
            if maj_s(&h) != rmaj_of(&des_set_s(&sigma), n) || h.inversions() != sigma.inversions() {
                return Err(format!("fails at {sigma}"));
            }
        }
    }
    registry(&["hat-involution"], |_| 1..=7)
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_delent"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {:?}", out.status.code()));
    }
    Ok(out.stdout)
}

fn cli_determinism() -> Outcome {
    let fixtures: [&[&str]; 10] = [
        &["stat", "--group", "S", "[2,5,4,1,3]"],
        &["stat", "--group", "A", "[3,5,4,2,1]"],
        &["canon", "--group", "S", "[2,5,4,1,3]"],
        &["canon", "--group", "A", "[3,5,4,2,1]"],
        &["fiber", "[2,5,4,1,3]"],
        &["shuffles", "--n", "5", "--b", "2,3"],
        &["genfun", "--group", "A", "--n", "4", "--q-stat", "rmaj"],
        &["genfun", "--group", "S", "--n", "5", "--multivar"],
        &["verify", "thm61-a", "--n", "4"],
        &["list"],
    ];
    let mut runs = 0;
    for args in fixtures {
        for format in ["json", "csv", "pretty"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let first = run_cli(&full)?;
            let mut again = full.clone();
            again.extend(["--jobs", "1"]);
            if run_cli(&full)? != first || run_cli(&again)? != first {
                return Err(format!("{full:?} is not byte-identical across runs"));
            }
            runs += 3;
        }
    }
    let start = Instant::now();
    let first = run_cli(&["verify", "--all", "--n-max", "5", "--jobs", "1"])?;
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(300) {
        return Err(format!("verify --all --n-max 5 took {elapsed:?}"));
    }
    if run_cli(&["verify", "--all", "--n-max", "5"])? != first {
        return Err("verify --all differs between thread counts".into());
    }
    let lines = first.iter().filter(|&&b| b == b'\n').count();
    Ok(format!(
        "{runs} fixture runs; verify --all --n-max 5: {lines} reports in {:.2}s",
        elapsed.as_secs_f64()
    ))
}

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    check: fn() -> Outcome,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "canonical round trip and uniqueness",
            budget: secs(60),
            check: canonical_round_trip,
        },
        Criterion {
            id: 2,
            title: "worked canonical words",
            budget: secs(60),
            check: worked_examples,
        },
        Criterion {
            id: 3,
            title: "length and rmaj with del over S_n",
            budget: secs(120),
            check: bivariate_s,
        },
        Criterion {
            id: 4,
            title: "length and rmaj with del over A_{n+1}",
            budget: secs(120),
            check: bivariate_a,
        },
        Criterion {
            id: 5,
            title: "restricted equidistribution over S_n",
            budget: secs(60),
            check: || registry(&["main-s"], |_| 1..=6),
        },
        Criterion {
            id: 6,
            title: "restricted equidistribution over A_{n+1}",
            budget: secs(60),
            check: || registry(&["main-a"], |_| 1..=5),
        },
        Criterion {
            id: 7,
            title: "trivariate equidistribution",
            budget: secs(120),
            check: || registry(&["cor92-s", "cor92-a"], |_| 1..=7),
        },
        Criterion {
            id: 8,
            title: "fiber sizes and partition",
            budget: secs(120),
            check: || registry(&["fiber-size"], |_| 1..=7),
        },
        Criterion {
            id: 9,
            title: "delent and occurrence counts against cycle counts",
            budget: secs(120),
            check: stirling,
        },
        Criterion {
            id: 10,
            title: "minima characterizations of del and epsilon",
            budget: secs(120),
            check: || {
                registry(
                    &[
                        "ltr-minima-del",
                        "ltr-minima-epsilon",
                        "almost-minima-s2",
                        "almost-minima-del-a",
                        "level-minima",
                        "occurrences-inverse",
                        "t-vector",
                    ],
                    |_| 1..=8,
                )
            },
        },
        Criterion {
            id: 11,
            title: "shuffle suite",
            budget: secs(120),
            check: || {
                registry(
                    &[
                        "shuffle-inverse-descents",
                        "shuffle-decompose",
                        "garsia-gessel",
                        "shuffle-inversions",
                        "prop81",
                        "shuffle-first-letter",
                        "g-bijection",
                        "g-rmaj",
                        "lemma86",
                        "lemma87",
                        "shuffle-canonical-shape",
                        "shuffle-delent",
                        "shuffle-epsilon-additive",
                        "lemma93",
                    ],
                    |name| min_n(name)..=6,
                )
            },
        },
        Criterion {
            id: 12,
            title: "hat statistics over A_n",
            budget: secs(120),
            check: appendix_hat,
        },
        Criterion {
            id: 13,
            title: "hat involution",
            budget: secs(60),
            check: hat_involution,
        },
        Criterion {
            id: 14,
            title: "CLI determinism and full sweep",
            budget: secs(300),
            check: cli_determinism,
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let outcome = (c.check)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => {
                Err(format!("{detail}; over budget {:?}", c.budget))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS {:>2} {} ({detail}; {:.2}s)",
                c.id,
                c.title,
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {}: {why} ({:.2}s)",
                    c.id,
                    c.title,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!("{} of 14 criteria passed", 14 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Rendering of results as JSON, CSV or plain text. Every renderer is a
//! pure function of its input, so repeated runs are byte-identical.

use std::fmt::{Display, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use delent::statistics::Group;
use delent::{GenFunSpec, IdentityInfo, IdentityReport, MultiPoly, Permutation, StatProfile};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn json_line<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

fn csv_table<const N: usize>(
    header: [&str; N],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for row in rows {
        w.write_record(&row).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn list<T: Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(T::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn group_name(g: Group) -> &'static str {
    match g {
        Group::S => "S",
        Group::A => "A",
    }
}

pub fn stat(p: &StatProfile, fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(p),
        Format::Csv => csv_table(
            [
                "group", "n", "perm", "length", "des_set", "des", "maj", "rmaj", "del", "del_set",
                "epsilon",
            ],
            [vec![
                group_name(p.group).to_string(),
                p.n.to_string(),
                p.perm.to_string(),
                p.length.to_string(),
                list(&p.des_set),
                p.des.to_string(),
                p.maj.to_string(),
                p.rmaj.to_string(),
                p.del.to_string(),
                list(&p.del_set),
                list(&p.epsilon),
            ]],
        ),
        Format::Pretty => {
            let mut s = String::new();
            let rows: [(&str, String); 11] = [
                ("group", group_name(p.group).to_string()),
                ("n", p.n.to_string()),
                ("perm", p.perm.to_string()),
                ("length", p.length.to_string()),
                ("des_set", list(&p.des_set)),
                ("des", p.des.to_string()),
                ("maj", p.maj.to_string()),
                ("rmaj", p.rmaj.to_string()),
                ("del", p.del.to_string()),
                ("del_set", list(&p.del_set)),
                ("epsilon", list(&p.epsilon)),
            ];
            for (k, v) in rows {
                writeln!(s, "{k:<8} {v}").unwrap();
            }
            s
        }
    }
}

pub fn canon<W: Serialize + Display>(
    group: Group,
    pi: &Permutation,
    word: &W,
    fmt: Format,
) -> String {
    match fmt {
        Format::Json => json_line(&json!({
            "group": group_name(group),
            "perm": pi,
            "factors": word,
            "word": word.to_string(),
        })),
        Format::Csv => csv_table(
            ["group", "perm", "word"],
            [vec![
                group_name(group).to_string(),
                pi.to_string(),
                word.to_string(),
            ]],
        ),
        Format::Pretty => format!("{word}\n"),
    }
}

pub fn fiber(w: &Permutation, members: &[Permutation], fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(&json!({
            "base": w,
            "size": members.len(),
            "fiber": members,
        })),
        Format::Csv => csv_table(["perm"], members.iter().map(|v| vec![v.to_string()])),
        Format::Pretty => members.iter().map(|v| format!("{v}\n")).collect(),
    }
}

pub fn shuffles(perms: &[Permutation], fmt: Format) -> String {
    match fmt {
        Format::Json => perms.iter().map(json_line).collect(),
        Format::Csv => csv_table(["perm"], perms.iter().map(|p| vec![p.to_string()])),
        Format::Pretty => perms.iter().map(|p| format!("{p}\n")).collect(),
    }
}

pub fn genfun(spec: &GenFunSpec, poly: &MultiPoly, fmt: Format) -> String {
    let t_stat = spec.t_stat.map_or("none", |s| s.name());
    match fmt {
        Format::Json => json_line(&json!({
            "group": group_name(spec.group),
            "n": spec.n,
            "q_stat": spec.q_stat.name(),
            "t_stat": t_stat,
            "multivar": spec.multivar,
            "polynomial": poly.to_text(),
            "terms": poly,
        })),
        Format::Csv => {
            let terms = serde_json::to_value(poly).expect("serializable polynomial");
            let rows = terms.as_array().into_iter().flatten().map(|t| {
                let exps: Vec<String> = t["exps"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(Value::to_string)
                    .collect();
                vec![t["coeff"].to_string(), exps.join(" ")]
            });
            csv_table(["coeff", "exps"], rows)
        }
        Format::Pretty => format!("{poly}\n"),
    }
}

/// One JSON line per report.
pub fn reports(rs: &[IdentityReport], fmt: Format) -> String {
    match fmt {
        Format::Json => rs.iter().map(json_line).collect(),
        Format::Csv => csv_table(
            ["name", "params", "pass", "elapsed"],
            rs.iter().map(|r| {
                vec![
                    r.identity.clone(),
                    r.params.to_string(),
                    r.pass.to_string(),
                    r.elapsed_ms.map_or(String::new(), |ms| ms.to_string()),
                ]
            }),
        ),
        Format::Pretty => {
            let mut s = String::new();
            for r in rs {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                write!(
                    s,
                    "{verdict} {} {} ({} points, {} elements)",
                    r.identity, r.params, r.points, r.elements_scanned
                )
                .unwrap();
                if let Some(ms) = r.elapsed_ms {
                    write!(s, " {ms} ms").unwrap();
                }
                s.push('\n');
                if !r.pass {
                    writeln!(s, "  at {}", r.failing_point.as_deref().unwrap_or(&r.point)).unwrap();
                    writeln!(s, "  lhs {}", r.lhs).unwrap();
                    writeln!(s, "  rhs {}", r.rhs).unwrap();
                }
            }
            s
        }
    }
}

pub fn catalog(infos: &[IdentityInfo], fmt: Format) -> String {
    match fmt {
        Format::Json => json_line(infos),
        Format::Csv => csv_table(
            ["name", "min_n", "default_n", "cap", "params", "statement"],
            infos.iter().map(|i| {
                vec![
                    i.name.to_string(),
                    i.min_n.to_string(),
                    i.default_n.to_string(),
                    i.cap.to_string(),
                    i.params.to_string(),
                    i.statement.to_string(),
                ]
            }),
        ),
        Format::Pretty => {
            let width = infos.iter().map(|i| i.name.len()).max().unwrap_or(0);
            infos
                .iter()
                .map(|i| {
                    format!(
                        "{:<width$}  n in {}..={}  {}\n",
                        i.name, i.min_n, i.cap, i.statement
                    )
                })
                .collect()
        }
    }
}

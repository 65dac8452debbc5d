use std::path::PathBuf;
use std::process::{Command, Output};

fn dnacyclic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dnacyclic"))
        .args(args)
        .output()
        .expect("run dnacyclic")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(": "))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dnacyclic-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn factor_commands() {
    let o = dnacyclic(&["factor", "-n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let factors: Vec<String> = stdout(&o)
        .lines()
        .filter_map(|l| l.strip_prefix("factor: ").map(str::to_string))
        .collect();
    assert_eq!(factors, ["x+1", "x^3+x+1", "x^3+x^2+1"]);

    let o = dnacyclic(&["factor", "-n", "1"]);
    assert_eq!(value(&stdout(&o), "factor"), Some("x+1"));
    assert_eq!(dnacyclic(&["factor", "-n", "0"]).status.code(), Some(2));
    assert_eq!(dnacyclic(&["factor"]).status.code(), Some(2));
}

#[test]
fn verify_table3_code() {
    let o = dnacyclic(&["verify", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(value(&out, "words"), Some("64"));
    assert_eq!(value(&out, "min_hamming"), Some("4"));
    assert_eq!(value(&out, "rc_closed"), Some("false"));
    assert_eq!(value(&out, "gray_quasi_cyclic_6"), Some("true"));

    let o = dnacyclic(&["verify", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)", "--metric", "edit", "--level", "nucleotide"]);
    assert_eq!(value(&stdout(&o), "min_edit_nucleotide"), Some("6"));
}

#[test]
fn verify_dna_definition_failure_exits_1() {
    let o = dnacyclic(&["verify", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)", "--d", "6"]);
    assert_eq!(value(&stdout(&o), "dna_code"), Some("false"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_skew_indicator_code() {
    let o = dnacyclic(&["verify", "--ring", "f2v", "-n", "10", "--gen", "v*I"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(value(&out, "case"), Some("3"));
    assert_eq!(value(&out, "contains_all_c"), Some("true"));
    assert_eq!(value(&out, "rc_closed"), Some("true"));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(dnacyclic(&["verify", "-n", "7", "--gen", "u^4(x+1)"]).status.code(), Some(2));
    assert_eq!(dnacyclic(&["verify", "-n", "7", "--gen", "x+"]).status.code(), Some(2));
    assert_eq!(dnacyclic(&["verify", "--ring", "z4", "-n", "7", "--gen", "x+1"]).status.code(), Some(2));
    assert_eq!(dnacyclic(&["reproduce", "--table", "6"]).status.code(), Some(2));
    assert_eq!(dnacyclic(&["verify", "--ring", "f2v", "-n", "5", "--gen", "x+1"]).status.code(), Some(2));
}

#[test]
fn export_fasta_and_csv() {
    let o = dnacyclic(&["export", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)", "--format", "fasta"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let headers: Vec<&str> = out.lines().filter(|l| l.starts_with('>')).collect();
    assert_eq!(headers.len(), 64);
    assert_eq!(headers[0], ">cw0");
    assert!(out.lines().filter(|l| !l.starts_with('>')).all(|l| l.len() == 21));

    let o = dnacyclic(&["export", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)", "--format", "csv"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 65);
    assert!(out.starts_with("index,dna,c0,"));

    let o = dnacyclic(&["export", "-n", "7", "--gen", "0", "--format", "fasta"]);
    assert_eq!(stdout(&o), format!(">cw0\n{}\n", "G".repeat(21)));
}

#[test]
fn oversized_export_exits_2() {
    let o = dnacyclic(&["export", "-n", "7", "--gen", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2^42"));
}

#[test]
fn export_is_deterministic() {
    let args = ["export", "-n", "7", "--gen", "u^2*(x^3+x+1)", "--format", "csv"];
    assert_eq!(stdout(&dnacyclic(&args)), stdout(&dnacyclic(&args)));
}

#[test]
fn reproduce_writes_artifacts() {
    let dir = scratch("reproduce");
    let d = dir.to_str().unwrap();
    let o = dnacyclic(&["reproduce", "--table", "3", "--out", d]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "words"), Some("64"));
    let t3 = std::fs::read_to_string(dir.join("table3.csv")).unwrap();
    assert_eq!(t3.lines().count(), 65);
    assert!(t3.lines().skip(1).all(|l| l.split(',').nth(1).is_some_and(|s| s.len() == 21)));
    assert!(dir.join("table3_diff.csv").exists());

    let o = dnacyclic(&["reproduce", "--table", "1", "--out", d]);
    assert_eq!(o.status.code(), Some(0));
    let t1 = std::fs::read_to_string(dir.join("table1.csv")).unwrap();
    assert_eq!(t1.lines().count(), 65);
    let diff = std::fs::read_to_string(dir.join("table1_diff.csv")).unwrap();
    assert!(diff.starts_with("codon,printed_value,derived_value\n"));

    let o = dnacyclic(&["reproduce", "--table", "2"]);
    let sizes: Vec<String> = stdout(&o)
        .lines()
        .skip_while(|l| *l != "[csv table2]")
        .skip(2)
        .take_while(|l| *l != "[end]")
        .map(|l| l.split(',').nth(4).unwrap().to_string())
        .collect();
    assert_eq!(sizes, ["4096", "256", "256", "4", "64", "64"]);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn config_file_and_flag_override() {
    let dir = scratch("config");
    let job = dir.join("job.conf");
    std::fs::write(&job, "# table 3 code\ncommand = export\nn = 7\ngen = u^4*(x+1)*(x^3+x+1)\nformat = fasta\n").unwrap();
    let j = job.to_str().unwrap();
    let o = dnacyclic(&["run", "--config", j]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with(">cw")).count(), 64);

    let o = dnacyclic(&["run", "--config", j, "--format", "csv"]);
    assert!(stdout(&o).starts_with("index,dna,"));

    std::fs::write(&job, "n = 7\nflavour = odd\n").unwrap();
    assert_eq!(dnacyclic(&["verify", "--config", j]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn weighted_edit_costs() {
    let dir = scratch("costs");
    let costs = dir.join("costs.csv");
    // halving every cost halves the minimum
    let mut text = String::from("from,to,cost\n");
    let codons: Vec<String> = dnacyclic::codon::Codon::all().map(|c| c.to_string()).collect();
    for a in &codons {
        text += &format!("{a},-,1/2\n-,{a},1/2\n");
        for b in &codons {
            if a != b {
                text += &format!("{a},{b},1/2\n");
            }
        }
    }
    std::fs::write(&costs, text).unwrap();
    let o = dnacyclic(&[
        "verify", "-n", "7", "--gen", "u^4*(x+1)*(x^3+x+1)", "--metric", "edit", "--costs", costs.to_str().unwrap(),
    ]);
    let out = stdout(&o);
    assert_eq!(value(&out, "min_edit_codon"), Some("2"));
    assert_eq!(value(&out, "min_weighted_edit"), Some("1"));
    std::fs::remove_dir_all(dir).ok();
}

use std::process::{Command, Output};

fn superverma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superverma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_writes_json_and_exits_zero() {
    let o = superverma(&[
        "check", "--family", "gl", "--m", "1", "--n", "1", "--p", "3", "--checks", "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sigma"], 1);
    assert_eq!(v["checks"].as_array().unwrap().len(), 16);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] != "fail"));
}

#[test]
fn configuration_errors_exit_two() {
    let o = superverma(&["check", "--checks", "no-such-check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("no-such-check"));
    assert_eq!(superverma(&["check", "--p", "4"]).status.code(), Some(2));
    assert_eq!(
        superverma(&["check", "--chi", "wobbly"]).status.code(),
        Some(2)
    );
}

#[test]
fn config_file_and_flags_combine() {
    let dir = std::env::temp_dir().join(format!("superverma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("scenario.txt");
    let out = dir.join("report.json");
    std::fs::write(
        &cfg,
        "# osp(2|2) at p = 3\nfamily = osp\nn = 1\nchecks = block-count-surrogate\n",
    )
    .unwrap();
    let o = superverma(&[
        "check",
        "--config",
        cfg.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["scenario"], "osp(2|2) p=3 k=1 chi=zero");
    assert_eq!(v["checks"][0]["stats"]["weyl_order"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_has_three_atypical_rows() {
    let o = superverma(&[
        "table", "--family", "gl", "--m", "1", "--n", "1", "--p", "3",
    ]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows.iter().filter(|r| r.contains("\tfalse\t")).count(), 3);
    assert!(rows.contains(&"0,0\t1\t0\t0\tfalse\t1"));
    assert!(rows
        .iter()
        .any(|r| r.starts_with("1,0\t") && r.ends_with("\t2")));
}

#[test]
fn characters() {
    let o = superverma(&[
        "char", "--family", "gl", "--m", "2", "--n", "1", "--lambda", "1,0,0",
    ]);
    let total: usize = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(1).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 12);
    let o = superverma(&[
        "char", "--family", "gl", "--m", "2", "--n", "1", "--lambda", "0,0,0", "--graded",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mass: u64 = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.rsplit('\t').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(mass, 12);
    assert_eq!(
        superverma(&["char", "--graded", "--lambda", "t,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verma_export() {
    let o = superverma(&["verma", "--lambda", "1,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 2);
    let o = superverma(&[
        "verma", "--family", "gl", "--m", "2", "--n", "1", "--lambda", "0,0,0", "--even",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 3);
}

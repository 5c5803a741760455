use std::process::Command;

fn diskstrip(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_diskstrip")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn betti_reports_known_values() {
    let (code, out, _) = diskstrip(&["betti", "--n", "3", "--w", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,w,j,betti\n3,2,0,1\n3,2,1,7\n");
}

#[test]
fn betti_ranges_default_to_all_widths() {
    let (code, out, _) = diskstrip(&["betti", "--n", "1..3"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "n,w,j,betti");
    assert!(rows.contains(&"3,3,2,2"));
    assert!(rows.contains(&"3,1,0,6"));
    assert!(rows.contains(&"1,1,0,1"));
}

#[test]
fn morse_census_with_certificate() {
    let (code, out, _) = diskstrip(&["morse", "--n", "3", "--w", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,w,dim,critical_count\n3,2,0,1\n3,2,1,7\ngradient: ok\n");
}

#[test]
fn betti_never_exceeds_critical_counts() {
    let (_, betti, _) = diskstrip(&["betti", "--n", "2..5"]);
    let (_, morse, _) = diskstrip(&["morse", "--n", "2..5"]);
    let rows = |s: &str| -> Vec<(String, u64)> {
        s.lines()
            .skip(1)
            .filter(|l| l.contains(','))
            .map(|l| {
                let (k, v) = l.rsplit_once(',').unwrap();
                (k.to_string(), v.parse().unwrap())
            })
            .collect()
    };
    let (b, m) = (rows(&betti), rows(&morse));
    assert_eq!(b.len(), m.len());
    for ((kb, vb), (km, vm)) in b.iter().zip(&m) {
        assert_eq!(kb, km);
        assert!(vb <= vm, "{kb}: {vb} > {vm}");
    }
}

#[test]
fn bounds_rows() {
    let (code, out, _) = diskstrip(&["bounds", "--n", "3", "--w", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n,w,j,regime,lower_bound,stirling\n3,2,0,gas,1,1\n3,2,1,liquid,6,3\n3,2,2,solid,0,2\n"
    );
}

#[test]
fn portrait_marks_liquid() {
    let (code, out, _) = diskstrip(&["portrait", "--n", "3"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.trim_start().starts_with("1 ")).unwrap();
    let cells: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(cells[1 + 2], "L");
}

#[test]
fn verify_suites_pass() {
    let (code, out, _) = diskstrip(&["verify", "all", "--n", "1..3", "--samples", "50", "--seed", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.contains("pass")));
    assert!(out.contains("torus n=3 w=2"));
    assert!(out.contains("flag n=3: pass"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "classify", "--n", "4", "--w", "2", "--seed", "11", "--samples", "100"];
    assert_eq!(diskstrip(&args), diskstrip(&args));
}

#[test]
fn export_to_stdout_and_files() {
    let (code, out, _) = diskstrip(&["export", "--n", "2", "--w", "2", "--j", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 2 2\n0 0\n0 1\n1 0\n1 1\n");

    let dir = std::env::temp_dir().join(format!("diskstrip-export-{}", std::process::id()));
    let (code, listed, _) = diskstrip(&["export", "--n", "3", "--w", "3", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    let files: Vec<&str> = listed.lines().collect();
    assert_eq!(files.len(), 2);
    let d2 = std::fs::read_to_string(files[1]).unwrap();
    let mut lines = d2.lines();
    assert_eq!(lines.next(), Some("2 12 6"));
    assert_eq!(lines.count(), 6 * 6);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(diskstrip(&["nonsense"]).0, 2);
    assert_eq!(diskstrip(&["betti", "--n", "2..1"]).0, 2);
    assert_eq!(diskstrip(&["export", "--n", "3", "--w", "2", "--j", "5"]).0, 2);
    let (code, _, err) = diskstrip(&["betti", "--n", "5", "--max-cells", "100"]);
    assert_eq!(code, 1);
    assert!(err.contains("above the cap"));
}

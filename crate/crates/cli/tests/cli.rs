use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use polycontact::{verify_any, AnyScene};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycontact")).args(args).output().expect("binary runs")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn represent_complete_writes_verified_scene() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k5.json");
    let r = run(&["represent", "--class", "complete", "--n", "5", "--output", p(&out)]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
    let scene = AnyScene::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(scene.float_polygons().len(), 5);
    assert!(String::from_utf8_lossy(&r.stderr).starts_with("PASS"));
}

#[test]
fn file_round_trip_gives_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k6.json");
    let s: AnyScene = polycontact::gen3d::represent_complete(6).unwrap().into();
    fs::write(&out, s.to_json()).unwrap();
    let back = AnyScene::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(back, s);
    assert_eq!(verify_any(&back, None), verify_any(&s, None));
    let r = run(&["verify", p(&out)]);
    assert_eq!(r.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&r.stdout), verify_any(&s, None).to_text());
}

#[test]
fn broken_scene_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("broken.scene.json");
    let mut s = polycontact::gen3d::represent_complete(4).unwrap();
    // Move one polygon far away: its contacts disappear.
    let shift = polycontact::geom::Point3::from_i64(100, 0, 0);
    for c in &mut s.polygons[0].polygon.corners {
        *c = c.add(&shift);
    }
    fs::write(&out, AnyScene::from(s).to_json()).unwrap();
    let r = run(&["verify", p(&out)]);
    assert_eq!(r.status.code(), Some(1));
    let text = String::from_utf8_lossy(&r.stdout);
    assert!(text.starts_with("FAIL") && text.contains("violation:"), "{text}");
}

#[test]
fn usage_and_precondition_exit_codes() {
    assert_eq!(run(&["represent", "--class", "complete"]).status.code(), Some(2));
    assert_eq!(run(&["represent", "--class", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "/nonexistent/scene.json"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    fs::write(&g, "1 2\n2 3\n3 1\n").unwrap();
    assert_eq!(run(&["represent", "--class", "cubic", "--input", p(&g)]).status.code(), Some(3));
    fs::write(&g, "1 2\n2 1\n").unwrap();
    assert_eq!(run(&["represent", "--class", "cubic", "--input", p(&g)]).status.code(), Some(2));
    assert_eq!(run(&["represent", "--class", "complete", "--n", "2"]).status.code(), Some(3));
}

#[test]
fn cubic_classes_from_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("petersen.txt");
    fs::write(&g, polycontact::graph::families::petersen().to_edge_list()).unwrap();
    for class in ["cubic-2ec", "cubic", "maxdeg3"] {
        let r = run(&["represent", "--class", class, "--input", p(&g), "--output", p(&dir.path().join("o.json"))]);
        assert_eq!(r.status.code(), Some(0), "{class}: {}", String::from_utf8_lossy(&r.stderr));
    }
    let chain = dir.path().join("chain.txt");
    fs::write(&chain, polycontact::graph::families::bridge_chain(3).to_edge_list()).unwrap();
    assert_eq!(run(&["represent", "--class", "cubic-2ec", "--input", p(&chain)]).status.code(), Some(3));
    let r = run(&["represent", "--class", "cubic", "--input", p(&chain), "--output", p(&dir.path().join("c.json"))]);
    assert_eq!(r.status.code(), Some(0));
}

#[test]
fn oneplanar_from_embedding_file() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("e.json");
    fs::write(&emb, polycontact::oneplanar3d::samples::k4_crossed().to_json()).unwrap();
    let out = dir.path().join("s.json");
    let r = run(&["represent", "--class", "oneplanar-cubic", "--input", p(&emb), "--output", p(&out)]);
    assert_eq!(r.status.code(), Some(0), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn float_classes() {
    for args in [
        vec!["--class", "k33"],
        vec!["--class", "cycle-square", "--n", "7"],
        vec!["--class", "fano", "--alpha", "85"],
        vec!["--class", "s239"],
        vec!["--class", "bipartite-toroidal", "--a", "3", "--b", "4"],
        vec!["--class", "bipartite-grid", "--a", "3", "--b", "5"],
    ] {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("s.json");
        let mut full = vec!["represent"];
        full.extend(&args);
        full.extend(["--output", p(&out)]);
        let r = run(&full);
        assert_eq!(r.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&r.stderr));
    }
}

#[test]
fn analyses() {
    let dir = tempfile::tempdir().unwrap();
    let blocks = dir.path().join("s3410.blocks");
    fs::write(&blocks, polycontact::hypergraph::builtin_system("S3410").unwrap().to_block_list()).unwrap();
    let r = run(&["analyze", "f-pattern", "--input", p(&blocks)]);
    assert_eq!(r.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&r.stdout).starts_with("found: a="));

    let r = run(&["analyze", "counting", "--system", "S3410"]);
    assert!(String::from_utf8_lossy(&r.stdout).contains("ConvexQuadObstruction"));

    let r = run(&["analyze", "steiner-check", "--system", "S239", "--t", "2", "--k", "3"]);
    assert_eq!(r.status.code(), Some(0));
    let r = run(&["analyze", "steiner-check", "--system", "S239", "--t", "3", "--k", "4"]);
    assert_eq!(r.status.code(), Some(1));

    let scene = dir.path().join("fano.json");
    run(&["represent", "--class", "fano", "--output", p(&scene)]);
    let r = run(&["analyze", "coplanar-points", "--input", p(&scene)]);
    assert_eq!(r.status.code(), Some(0));
    let r = run(&["analyze", "coplanar-polygons", "--input", p(&scene)]);
    assert!(String::from_utf8_lossy(&r.stdout).contains("coplanar polygon pairs"));
}

#[test]
fn export_obj_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("k4.json");
    run(&["represent", "--class", "complete", "--n", "4", "--output", p(&scene)]);
    let obj = dir.path().join("k4.obj");
    assert_eq!(run(&["export", p(&scene), "--format", "obj", "--output", p(&obj)]).status.code(), Some(0));
    let text = fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("g ")).count(), 4);
    let r = run(&["export", p(&scene), "--format", "svg", "--view", "xz"]);
    let svg = String::from_utf8_lossy(&r.stdout);
    assert!(svg.starts_with("<svg") && svg.matches("<polygon").count() == 4);
    let r = run(&["info", p(&scene)]);
    assert!(String::from_utf8_lossy(&r.stdout).contains("polygons: 4"));
}

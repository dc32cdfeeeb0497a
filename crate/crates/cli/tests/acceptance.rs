//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use octa_geodesic::oracle::{chain_chord, chord_3d, dist3, embed_3d, unfold_geodesic, MeshGraph};
use octa_geodesic::topology::{enumerate_dual_paths, neighbors_ccw, VertexLabel};
use octa_geodesic::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Antipodal-vertex geodesic, frozen from the first verified oracle run.
const ANTIPODAL_ORACLE: f64 = 1.7320508075688772;

const CORPUS: &str = include_str!("data/corpus.jsonl");

struct Outcome {
    pass: bool,
    detail: String,
}

fn criterion(n: u32, name: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let tag = if out.pass { "PASS" } else { "FAIL" };
    println!(
        "[{tag}] criterion {n}: {name}: {} ({:.2} s)",
        out.detail,
        start.elapsed().as_secs_f64()
    );
    out.pass
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

fn witness_rows() -> Outcome {
    let start = Instant::now();
    let mut hits = 0;
    let mut worst: f64 = 0.0;
    for row in WITNESS_ROWS {
        let a = row.p1.to_point::<f64>().unwrap();
        let b = row.p2.to_point::<f64>().unwrap();
        let d = surface_distance(&a, &b);
        let err = (d.distance - unfold_geodesic(&a, &b, 8)).abs();
        worst = worst.max(err);
        if d.argmin.contains(&row.landscape) && err <= 1e-9 {
            hits += 1;
        }
    }
    let fast = within(start, Duration::from_secs(1));
    Outcome {
        pass: hits == 9 && fast,
        detail: format!("{hits}/9 rows, max |formula - oracle| = {worst:.3e}"),
    }
}

fn oracle_sweep() -> Outcome {
    let start = Instant::now();
    let pts = sample_uniform::<f64>(2024, 20_000);
    let mut worst: f64 = 0.0;
    let mut bad = 0;
    let mut fallbacks = 0;
    for w in pts.chunks(2) {
        let d = surface_distance(&w[0], &w[1]);
        let err = (d.distance - unfold_geodesic(&w[0], &w[1], 8)).abs();
        worst = worst.max(err);
        bad += (err > 1e-9) as usize;
        fallbacks += d.fallback as usize;
    }
    let fast = within(start, Duration::from_secs(60));
    Outcome {
        pass: bad == 0 && fallbacks == 0 && fast,
        detail: format!("10000 pairs, {bad} over 1e-9, {fallbacks} fallbacks, max error {worst:.3e}"),
    }
}

fn random_rep(rng: &mut ChaCha8Rng) -> Representation64 {
    let home = FaceId::ALL[rng.random_range(0..8)];
    let shared = neighbors_ccw(home)[rng.random_range(0..3)];
    let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
    if u + v > 1.0 {
        (u, v) = (1.0 - u, 1.0 - v);
    }
    Representation::new(home, shared, u + v / 2.0, v * 3f64.sqrt() / 2.0).unwrap()
}

fn lemma_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut coord_err: f64 = 0.0;
    let mut embed_err: f64 = 0.0;
    for _ in 0..1000 {
        let r = random_rep(&mut rng);
        let p = embed_3d(&r);
        let mut s = r;
        for _ in 0..3 {
            s = s.rotate_shared();
            embed_err = embed_err.max(dist3(p, embed_3d(&s)));
        }
        coord_err = coord_err.max((s.x() - r.x()).abs()).max((s.y() - r.y()).abs());
        let edge = Representation::new(r.home(), r.shared(), r.x().min(1.0), 0.0).unwrap();
        let flipped = flip_home_face(&edge).unwrap();
        embed_err = embed_err.max(dist3(embed_3d(&edge), embed_3d(&flipped)));
        let back = flipped.rotate_shared();
        embed_err = embed_err.max(dist3(embed_3d(&edge), embed_3d(&back)));
    }
    Outcome {
        pass: coord_err <= 1e-12 && embed_err <= 1e-12,
        detail: format!("1000 points, triple rotation error {coord_err:.3e}, embedding drift {embed_err:.3e}"),
    }
}

fn census() -> Outcome {
    let mut classes = [0usize; 3];
    let mut ok = true;
    for a in FaceId::ALL {
        for b in FaceId::ALL {
            if a >= b {
                continue;
            }
            let (slot, len, want) = match relation(a, b) {
                FaceRelation::Adjacent => (0, 2, 1),
                FaceRelation::NeitherAdjacentNorOpposite => (1, 3, 2),
                FaceRelation::Opposite => (2, 4, 6),
                FaceRelation::Same => unreachable!(),
            };
            classes[slot] += 1;
            for (x, y) in [(a, b), (b, a)] {
                let paths = enumerate_dual_paths(x, y, len);
                ok &= paths.len() == want && paths.iter().all(|p| p.len() == len);
            }
        }
    }
    Outcome {
        pass: ok && classes == [12, 12, 4],
        detail: format!(
            "unordered pairs adjacent/neither/opposite = {}/{}/{}, path counts 1/2/6 in both directions",
            classes[0], classes[1], classes[2]
        ),
    }
}

fn dominance() -> Outcome {
    let pts = sample_uniform::<f64>(55, 4000);
    let mut violations = 0;
    let mut checked = 0;
    for w in pts.chunks(2) {
        let d = surface_distance(&w[0], &w[1]).distance;
        for path in enumerate_dual_paths(w[0].home(), w[1].home(), 8) {
            if path.len() < 5 {
                continue;
            }
            if let Some(len) = chain_chord(&path, &w[0], &w[1]) {
                checked += 1;
                violations += (len < d - 1e-9) as usize;
            }
        }
    }
    Outcome {
        pass: violations == 0,
        detail: format!("2000 pairs, {checked} contained long chords, {violations} shorter"),
    }
}

fn metric_axioms() -> Outcome {
    let pts = sample_uniform::<f64>(77, 4000);
    let mesh = MeshGraph::new(64);
    let mut asym: f64 = 0.0;
    let mut unbracketed = 0;
    for w in pts.chunks(2) {
        let ab = surface_distance(&w[0], &w[1]).distance;
        let ba = surface_distance(&w[1], &w[0]).distance;
        asym = asym.max((ab - ba).abs());
        let low = chord_3d(&w[0], &w[1]);
        let high = mesh.shortest(&w[0], &w[1]);
        unbracketed += !(low <= ab + 1e-12 && ab <= high + 1e-12) as usize;
    }
    let tri = sample_uniform::<f64>(78, 3000);
    let mut triangle = 0;
    for t in tri.chunks(3) {
        let ab = surface_distance(&t[0], &t[1]).distance;
        let bc = surface_distance(&t[1], &t[2]).distance;
        let ac = surface_distance(&t[0], &t[2]).distance;
        triangle += (ac > ab + bc + 1e-9) as usize;
    }
    Outcome {
        pass: asym <= 1e-12 && triangle == 0 && unbracketed == 0,
        detail: format!(
            "max asymmetry {asym:.3e}, {triangle}/1000 triangle violations, {unbracketed}/2000 outside chord..mesh(64)"
        ),
    }
}

fn antipodal() -> Outcome {
    let v = |faces: [u8; 4]| {
        let label = VertexLabel::from_faces(&faces).unwrap();
        canonicalize(&vertex_representations::<f64>(label)[0]).unwrap()
    };
    let (a, b) = (v([1, 2, 3, 4]), v([5, 6, 7, 8]));
    let d = surface_distance(&a, &b).distance;
    let oracle = unfold_geodesic(&a, &b, 8);
    Outcome {
        pass: (d - ANTIPODAL_ORACLE).abs() <= 1e-12 && (oracle - ANTIPODAL_ORACLE).abs() <= 1e-12,
        detail: format!("distance {d}, oracle {oracle}"),
    }
}

fn run(args: &[&str], stdin: &str) -> (Option<i32>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_octa"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn octa");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), out.stdout)
}

fn cli_contract() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    for cmd in ["distance", "path"] {
        let first = run(&[cmd], CORPUS);
        let second = run(&[cmd], CORPUS);
        let n = String::from_utf8_lossy(&first.1).lines().count();
        let same = first == second && first.0 == Some(0) && n == 50;
        ok &= same;
        notes.push(format!("{cmd} {}", if same { "deterministic" } else { "NOT deterministic" }));
    }

    let dir = std::env::temp_dir().join(format!("octa-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut renders_same = true;
    for (i, line) in CORPUS.lines().enumerate() {
        let mut svgs = Vec::new();
        for k in 0..2 {
            let path = dir.join(format!("{i}-{k}.svg"));
            let (code, _) = run(&["render", "--out", path.to_str().unwrap()], line);
            renders_same &= code == Some(0);
            svgs.push(std::fs::read(&path).unwrap_or_default());
        }
        renders_same &= !svgs[0].is_empty() && svgs[0] == svgs[1];
    }
    let _ = std::fs::remove_dir_all(&dir);
    ok &= renders_same;
    notes.push(format!("render {}", if renders_same { "deterministic" } else { "NOT deterministic" }));

    let clean = String::from_utf8(run(&["distance"], CORPUS).1).unwrap();
    let clean: Vec<&str> = clean.lines().collect();
    let mut dirty: Vec<&str> = CORPUS.lines().collect();
    dirty.insert(10, "{\"p1\": not json");
    dirty.insert(30, r#"{"p1":{"home":"F1","shared":"F2","x":2,"y":0.2},"p2":{"home":"F2","shared":"F1","x":0.5,"y":0.2}}"#);
    let (code, out) = run(&["distance"], &dirty.join("\n"));
    let out = String::from_utf8(out).unwrap();
    let out: Vec<&str> = out.lines().collect();
    let kept: Vec<&str> = out
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != 10 && *i != 30)
        .map(|(_, l)| *l)
        .collect();
    let isolated = code == Some(2)
        && out.len() == 52
        && out[10].contains("MalformedRecord")
        && out[30].contains("InvalidRepresentation")
        && kept == clean;
    ok &= isolated;
    notes.push(format!("malformed lines {}", if isolated { "isolated" } else { "NOT isolated" }));

    let (code, _) = run(&["validate"], "");
    ok &= code == Some(0);
    notes.push(format!("validate default exit {code:?}"));

    Outcome {
        pass: ok,
        detail: notes.join(", "),
    }
}

fn main() {
    let results = [
        criterion(1, "witness-table reproduction", witness_rows),
        criterion(2, "oracle equivalence sweep", oracle_sweep),
        criterion(3, "rotation round-trip and embedding invariance", lemma_round_trip),
        criterion(4, "landscape-count census", census),
        criterion(5, "long-path dominance", dominance),
        criterion(6, "metric axioms and bracket", metric_axioms),
        criterion(7, "antipodal-vertex regression", antipodal),
        criterion(8, "CLI contract", cli_contract),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}

//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use arclab::arcs::{arc_complex, disjoint, enumerate_arcs, inner_arc_complex, Arc, Surface};
use arclab::certify::{certify, flip_graph, Effort, Verdict};
use arclab::collapse::{
    apply_collapse, cone_collapse_trace, join_lift_trace, verify_trace, welker_expand, CollapseTrace,
};
use arclab::simplicial::{isomorphic, Complex};
use arclab::strong::{core, dominated_vertices, is_strongly_collapsible, strong_to_elementary, CoreOrder};
use arclab::theorems::{
    crown_schedule, inner_schedule, mobius_collapse_schedule, mobius_nonstrong_check, strip_schedule,
};
use arclab::Face;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn crowns_strongly_collapse() -> Outcome {
    for n in 1..=6 {
        let s = crown_schedule(n).map_err(|e| format!("Crown({n}): {e}"))?;
        let c_arcs: Face = (1..=n).map(|i| s.arcs.expect_id(&Arc::CrownC(i))).collect();
        ensure(s.terminal.vertices() == c_arcs && s.terminal.facets() == [c_arcs], || {
            format!("Crown({n}): terminal is not the c-arc simplex")
        })?;
        let (order_free, _) = is_strongly_collapsible(&s.arcs.complex);
        ensure(order_free, || format!("Crown({n}): core is not a point"))?;
    }
    Ok("Crown(1..=6): schedule with c_p and c_q witnesses and core both give a point".into())
}

fn inner_mobius_strongly_collapses() -> Outcome {
    for n in 1..=7 {
        let s = inner_schedule(n).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(s.terminal.vertex_count() == 1, || format!("n = {n}: terminal is not a point"))?;
        ensure(is_strongly_collapsible(&s.arcs.complex).0, || format!("n = {n}: core is not a point"))?;
    }
    Ok("n = 1..=7: schedule with witnesses (1,i) reaches a point".into())
}

fn mobius_collapses() -> Outcome {
    let mut steps = Vec::new();
    for n in 1..=5 {
        let s = mobius_collapse_schedule(n).map_err(|e| format!("M{n}: {e}"))?;
        let mid = verify_trace(&s.arcs.complex, &s.boundary_trace).map_err(|e| format!("M{n}: {e}"))?;
        let inner = inner_arc_complex(&Surface::MobiusCrown { n }).map_err(|e| e.to_string())?;
        let inner_ids: Face = inner.arcs.iter().map(|a| s.arcs.expect_id(a)).collect();
        ensure(mid.vertices() == inner_ids, || format!("M{n}: intermediate vertex set is not the c-arcs"))?;
        let end = verify_trace(&s.arcs.complex, &s.full_trace()).map_err(|e| format!("M{n}: {e}"))?;
        ensure(end.vertex_count() == 1 && end.facets().len() == 1, || format!("M{n}: does not end at a point"))?;
        steps.push(s.full_trace().len());
    }
    Ok(format!("n = 1..=5: verified traces of {steps:?} collapses, passing through the inner complex"))
}

fn mobius_not_strong() -> Outcome {
    let seeds: Vec<u64> = (0..20).collect();
    let mut cores = Vec::new();
    for n in [4u32, 5] {
        let ev = mobius_nonstrong_check(n, &seeds).map_err(|e| format!("n = {n}: {e}"))?;
        let a = arc_complex(&Surface::MobiusCrown { n }).map_err(|e| e.to_string())?;
        ensure(ev.removed.len() == 2 * n as usize, || format!("n = {n}: |D| = {}", ev.removed.len()))?;
        ensure(ev.core_vertices == a.arcs.len() - 2 * n as usize, || format!("n = {n}: core size"))?;
        let (k, _) = core(&a.complex, CoreOrder::Canonical);
        ensure(dominated_vertices(&k).is_empty() && k.vertex_count() > 1, || format!("n = {n}: bad core"))?;
        ensure(ev.seeds_agreeing == 20, || format!("n = {n}: random orders disagree"))?;
        cores.push(format!("{} stages, core {}", ev.stages_checked, ev.core_vertices));
    }
    Ok(format!("n = 4, 5: {}; 20 random orders agree", cores.join(" / ")))
}

fn strips_strongly_collapse() -> Outcome {
    let mut count = 0;
    for total in 4..=10u32 {
        for m in 1..total {
            let n = total - m;
            let thin = m == 1 || n == 1;
            if total == 4 {
                // (2, 2): two crossing chords, a 0-sphere; (1, 3) and (3, 1): a single chord.
                let a = arc_complex(&Surface::IntegralStrip { m, n }).map_err(|e| e.to_string())?;
                let zero_sphere = a.complex.facets().len() == 2 && a.complex.dimension() == 0;
                ensure(if thin { a.complex.vertex_count() == 1 } else { zero_sphere }, || {
                    format!("{m}x{n}: unexpected complex")
                })?;
                continue;
            }
            let s = strip_schedule(m, n).map_err(|e| format!("{m}x{n}: {e}"))?;
            let a = &s.arcs.complex;
            ensure(s.terminal.vertex_count() == 1, || format!("{m}x{n}: terminal is not a point"))?;
            ensure(is_strongly_collapsible(a).0, || format!("{m}x{n}: core is not a point"))?;
            count += 1;
        }
    }
    Ok(format!(
        "{count} strips with 5 <= m+n <= 10 collapse with witnesses (i, r-1); \
         (2,2) is excluded: with the corner chords removed its complex is a 0-sphere"
    ))
}

/// Noncrossing sets of `n - 3` diagonals of an `n`-gon, counted over all subsets.
fn brute_force_triangulations(n: u32) -> usize {
    let diags: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (i + 2..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 1 && j == n))
        .collect();
    let crosses = |(a, b): (u32, u32), (c, d): (u32, u32)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let conflict: Vec<u32> = diags
        .iter()
        .map(|&x| diags.iter().enumerate().filter(|(_, &y)| crosses(x, y)).fold(0, |m, (k, _)| m | 1 << k))
        .collect();
    (0u32..1 << diags.len())
        .filter(|s| s.count_ones() == n - 3)
        .filter(|s| (0..diags.len()).all(|k| s >> k & 1 == 0 || conflict[k] & s == 0))
        .count()
}

fn catalan(k: usize) -> usize {
    let mut c = vec![1usize];
    for i in 1..=k {
        c.push((0..i).map(|j| c[j] * c[i - 1 - j]).sum());
    }
    c[k]
}

fn certificates() -> Outcome {
    for n in 4..=8u32 {
        let a = arc_complex(&Surface::Polygon { n }).map_err(|e| e.to_string())?;
        let facets = a.complex.facets().len();
        let expected = catalan(n as usize - 2);
        ensure(facets == expected && brute_force_triangulations(n) == expected, || {
            format!("P{n}: {facets} facets, Catalan {expected}")
        })?;
        let cert = certify(&a.complex, Effort::default());
        let d = n as isize - 4;
        ensure(cert.verdict == Verdict::Sphere { dim: d }, || format!("P{n}: {}", cert.verdict))?;
        ensure(a.complex.euler_characteristic() == 1 + (-1i64).pow(d as u32), || format!("P{n}: chi"))?;
    }
    for n in 2..=5u32 {
        for s in [Surface::Crown { n }, Surface::MobiusCrown { n }] {
            let a = arc_complex(&s).map_err(|e| e.to_string())?;
            let cert = certify(&a.complex, Effort::default());
            ensure(cert.verdict == Verdict::Ball { dim: n as isize - 1 }, || format!("{s}: {}", cert.verdict))?;
            ensure(a.complex.euler_characteristic() == 1, || format!("{s}: chi"))?;
        }
    }
    Ok("P4..P8 spheres with Catalan facet counts 2, 5, 14, 42, 132; crowns and Mobius crowns 2..=5 balls".into())
}

fn flip_diameters() -> Outcome {
    let mut got = Vec::new();
    for n in 2..=5u32 {
        let a = arc_complex(&Surface::Crown { n }).map_err(|e| e.to_string())?;
        let g = flip_graph(&a.complex).map_err(|e| e.to_string())?;
        ensure(g.is_connected(), || format!("Crown({n}): flip graph disconnected"))?;
        let d = g.diameter().unwrap_or(usize::MAX);
        ensure(d == 2 * n as usize - 2, || format!("Crown({n}): diameter {d}"))?;
        got.push(d);
    }
    Ok(format!("Crown(2..=5) diameters {got:?}"))
}

fn predicate_soundness() -> Outcome {
    let mut pairs = 0usize;
    for n in 1..=8u32 {
        let mut surfaces = vec![Surface::Polygon { n }, Surface::Crown { n }, Surface::MobiusCrown { n }];
        surfaces.extend((1..n).map(|m| Surface::IntegralStrip { m, n: n - m }));
        for s in surfaces {
            let arcs = enumerate_arcs(&s);
            let rotations = if matches!(s, Surface::IntegralStrip { .. }) { 0 } else { n };
            for a in &arcs {
                for b in arcs.iter().filter(|b| *b != a) {
                    let d = disjoint(&s, a, b).map_err(|e| e.to_string())?;
                    ensure(d == disjoint(&s, b, a).map_err(|e| e.to_string())?, || format!("{s}: {a} {b} asymmetric"))?;
                    for k in 1..rotations {
                        let (ra, rb) = (a.rotate(&s, k).unwrap(), b.rotate(&s, k).unwrap());
                        ensure(disjoint(&s, &ra, &rb).unwrap() == d, || format!("{s}: {a} {b} under rotation {k}"))?;
                    }
                    let (fa, fb) = (a.reflect(&s).unwrap(), b.reflect(&s).unwrap());
                    ensure(disjoint(&s, &fa, &fb).unwrap() == d, || format!("{s}: {a} {b} under reflection"))?;
                    pairs += 1;
                }
            }
        }
    }
    for n in 1..=6u32 {
        for s in [Surface::Crown { n }, Surface::MobiusCrown { n }] {
            let a = arc_complex(&s).map_err(|e| e.to_string())?;
            let c_arcs = a.select(Arc::is_c_arc);
            ensure(a.complex.is_pure() && a.complex.dimension() == n as isize - 1, || format!("{s}: not pure"))?;
            ensure(a.complex.facets().iter().all(|f| !f.is_disjoint(c_arcs)), || format!("{s}: facet without c-arc"))?;
        }
    }
    for n in 3..=5u32 {
        let polygon = arc_complex(&Surface::Polygon { n: n + 1 }).map_err(|e| e.to_string())?.complex;
        let point = Complex::new(vec!["c".into()], vec![Face::singleton(0)]).map_err(|e| e.to_string())?;
        let model = polygon.join(&point).map_err(|e| e.to_string())?;
        for (s, partner) in [
            (Surface::Crown { n }, Arc::CrownC as fn(u32) -> Arc),
            (Surface::MobiusCrown { n }, |i| Arc::MobC(i, i)),
        ] {
            let a = arc_complex(&s).map_err(|e| e.to_string())?;
            for i in 1..=n {
                let link = a.complex.link(Face::singleton(a.expect_id(&Arc::BArc { p: i, q: i }))).unwrap();
                ensure(link.is_cone() == Some(a.expect_id(&partner(i))), || format!("{s}: link of M{i} apex"))?;
                ensure(isomorphic(&link, &model).map_err(|e| e.to_string())?, || format!("{s}: link of M{i}"))?;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs symmetric and equivariant for n <= 8; purity and M_i links for n = 3..=5"))
}

fn random_complex(rng: &mut ChaCha8Rng, prefix: &str, vertices: std::ops::RangeInclusive<usize>) -> Complex {
    let vertices = rng.gen_range(vertices);
    let labels = (0..vertices).map(|v| format!("{prefix}{v}")).collect();
    let facets = (0..rng.gen_range(1..=5))
        .map(|_| {
            let size = rng.gen_range(1..=vertices.min(4));
            let all: Vec<usize> = (0..vertices).collect();
            all.choose_multiple(rng, size).collect::<Face>()
        })
        .collect();
    Complex::new(labels, facets).expect("small random complex")
}

fn point(label: &str) -> Complex {
    Complex::new(vec![label.into()], vec![Face::singleton(0)]).expect("point")
}

/// Replays `t` step by step, checking that the Euler characteristic never moves.
fn replay(c: &Complex, t: &CollapseTrace) -> Result<Complex, String> {
    let chi = c.euler_characteristic();
    let mut cur = c.clone();
    for (k, p) in t.iter().enumerate() {
        cur = apply_collapse(&cur, p.free, p.coface).map_err(|e| format!("step {k}: {e}"))?;
        ensure(cur.euler_characteristic() == chi, || format!("step {k}: chi changed"))?;
    }
    let verified = verify_trace(c, t).map_err(|e| e.to_string())?;
    ensure(verified == cur, || "verify_trace disagrees with stepwise replay".into())?;
    Ok(cur)
}

fn machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let instances = 100;
    let mut steps = 0;
    for k in 0..instances {
        let fail = |what: &str, e: String| format!("{what} instance {k}: {e}");

        // cone_collapse_trace
        let y = random_complex(&mut rng, "y", 1..=6);
        let cone = y.join(&point("a")).unwrap();
        let t = cone_collapse_trace(&cone).map_err(|e| fail("cone", e.to_string()))?;
        let end = replay(&cone, &t).map_err(|e| fail("cone", e))?;
        ensure(end.vertex_count() == 1, || fail("cone", "not a point".into()))?;
        steps += t.len();

        // strong_to_elementary
        let r = random_complex(&mut rng, "r", 1..=7);
        let (k_core, st) = core(&r, CoreOrder::Random(k as u64));
        let t = strong_to_elementary(&r, &st).map_err(|e| fail("strong", e.to_string()))?;
        let end = replay(&r, &t).map_err(|e| fail("strong", e))?;
        ensure(end == k_core, || fail("strong", "terminal is not the core".into()))?;
        steps += t.len();

        // join_lift_trace
        let x = random_complex(&mut rng, "x", 1..=4);
        let y = random_complex(&mut rng, "y", 1..=4).join(&point("a")).unwrap();
        let ty = cone_collapse_trace(&y).unwrap();
        let t = join_lift_trace(&x, &y, &ty).map_err(|e| fail("join", e.to_string()))?;
        let joined = x.join(&y).unwrap();
        let end = replay(&joined, &t).map_err(|e| fail("join", e))?;
        let expected = x.join(&verify_trace(&y, &ty).unwrap()).unwrap();
        ensure(end.facets() == expected.facets(), || fail("join", "terminal is not x joined with the point".into()))?;
        steps += t.len();

        // welker_expand: the star of v = 0 is v * w * Y with w = 1, other facets avoid v
        let size = rng.gen_range(3..=8);
        let base = random_complex(&mut rng, "v", size..=size);
        let mut faces: Vec<Face> = base
            .facets()
            .iter()
            .map(|f| f.iter().filter(|&u| u >= 2).collect::<Face>().with(0).with(1))
            .collect();
        faces.extend(random_complex(&mut rng, "v", size..=size).facets().iter().map(|f| f.without(0)).filter(|f| !f.is_empty()));
        let c = base.derive(faces);
        let y_vertices = c.link(Face::singleton(0)).unwrap().vertices().without(1);
        let sigma = match y_vertices.to_vec().choose(&mut rng) {
            Some(&u) if rng.gen_bool(0.5) => Face::singleton(0).with(u),
            _ => Face::singleton(0),
        };
        let link = c.link(sigma).unwrap();
        let lt = cone_collapse_trace(&link).map_err(|e| fail("welker", e.to_string()))?;
        let t = welker_expand(&c, sigma, &lt).map_err(|e| fail("welker", e.to_string()))?;
        let end = replay(&c, &t).map_err(|e| fail("welker", e))?;
        ensure(end == c.face_deletion(sigma).unwrap(), || fail("welker", "terminal is not the face deletion".into()))?;
        steps += t.len();
    }
    Ok(format!("{instances} random instances per machine, {steps} collapses replayed with constant chi"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("crown strong collapsibility", crowns_strongly_collapse),
        ("inner Mobius strong collapsibility", inner_mobius_strongly_collapses),
        ("Mobius collapsibility", mobius_collapses),
        ("Mobius non-strong-collapsibility", mobius_not_strong),
        ("integral strips", strips_strongly_collapse),
        ("ball and sphere certificates", certificates),
        ("crown flip graphs", flip_diameters),
        ("predicate soundness", predicate_soundness),
        ("trace machinery", machinery),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({:.2?})", k + 1, start.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} ({:.2?})", k + 1, start.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

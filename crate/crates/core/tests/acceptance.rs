//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use standardize_core::oracle::{
    brute_min_standardizer_curve, brute_min_standardizer_parabolic, EnumerationBudget, PositiveMonoid,
};
use standardize_core::parabolic::{
    central_element, minimal_standardizer, positive_conjugates, standard_target, strip_standardizer, c_of_presentation,
};
use standardize_core::{
    inverse_word, s_braid, ArtinGroup, AtomSet, DynnikovCoords, GarsideElement, LatticeOp, Order, ParabolicPresentation,
    Side,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn group(name: &str) -> ArtinGroup {
    ArtinGroup::named(name).expect("named group builds")
}

fn random_signed_word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let s = rng.gen_range(1..=rank as i32);
            if rng.gen_bool(0.5) {
                s
            } else {
                -s
            }
        })
        .collect()
}

/// Bound checks of criterion 8 for one instance: `|β| ≤ ½ℓ(S)(n-1)²` and
/// `ℓ(S) ≤ Σ(2|a_i| + |b_i|)`.
fn check_bounds(c: &DynnikovCoords, beta_len: usize) -> Result<(), String> {
    let n1 = BigInt::from(c.punctures() - 1);
    let len = c.curve_length();
    ensure(BigInt::from(2 * beta_len) <= &len * &n1 * &n1, || format!("|β| = {beta_len} exceeds bound for {c}"))?;
    ensure(len <= c.coordinate_weight(), || format!("ℓ(S) exceeds coordinate weight for {c}"))
}

#[derive(Default)]
struct BoundLog {
    instances: usize,
    failures: Vec<String>,
}

impl BoundLog {
    fn record(&mut self, c: &DynnikovCoords, beta_len: usize) {
        self.instances += 1;
        if let Err(e) = check_bounds(c, beta_len) {
            self.failures.push(e);
        }
    }
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let c = DynnikovCoords::reduce_u64(&[1, 2, 4, 2, 6, 9, 3, 12, 6], 4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let want = DynnikovCoords::from_i64(&[0, -1, 1, -2, 3, -3, 0, 6]).unwrap();
    ensure(c == want, || format!("got {c}"))?;
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("reduced to ({c}) in {elapsed:?}"))
}

fn criterion2(bounds: &mut BoundLog) -> Outcome {
    let start = Instant::now();
    let alpha = s_braid(0, 2, 4, 5).unwrap();
    for k in 1..=5usize {
        let spiral = DynnikovCoords::spiral(k, 5).map_err(|e| e.to_string())?;
        let beta = spiral.standardize().map_err(|e| e.to_string())?;
        let want: Vec<i32> = alpha.iter().copied().cycle().take(4 * k).collect();
        ensure(beta == want, || format!("k={k}: got {beta:?}"))?;
        ensure(spiral.curve_length() == BigInt::from(2 * (k + 1)), || format!("k={k}: ℓ = {}", spiral.curve_length()))?;
        bounds.record(&spiral, beta.len());
    }
    within(Duration::from_secs(1), start.elapsed())?;
    Ok(format!("k=1..5 give s(0,2,4)^k in {:?}", start.elapsed()))
}

/// Consecutive blocks of `X` become round curves `[p, q]`.
fn round_curves_for(x: AtomSet) -> Vec<(usize, usize)> {
    let mut curves = Vec::new();
    let labels = x.to_labels();
    let mut i = 0;
    while i < labels.len() {
        let p = labels[i];
        let mut q = p + 1;
        while i + 1 < labels.len() && labels[i + 1] == labels[i] + 1 {
            i += 1;
            q += 1;
        }
        curves.push((p, q));
        i += 1;
    }
    curves
}

fn criterion3(bounds: &mut BoundLog) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut cases = 0;
    for n in 3..=5usize {
        let g = group(&format!("A{}", n - 1));
        let rank = n - 1;
        for _ in 0..200 {
            // nonempty and proper: the full set has no round curve
            let x = AtomSet::from_bits(rng.gen_range(1..(1u64 << rank) - 1));
            let alpha = random_signed_word(&mut rng, rank, 6);
            let curve = DynnikovCoords::round_system(&round_curves_for(x), n).map_err(|e| e.to_string())?;
            let acted = curve.apply_braid(&alpha).map_err(|e| e.to_string())?;
            let beta = acted.standardize().map_err(|e| e.to_string())?;
            bounds.record(&acted, beta.len());
            let geometric = g.normalize(&beta).unwrap();
            let p = ParabolicPresentation::new(x, g.normalize(&inverse_word(&alpha)).unwrap());
            let (b, _) = minimal_standardizer(&g, &p).map_err(|e| e.to_string())?;
            ensure(geometric == b, || {
                format!("n={n}, X={x}, α={alpha:?}: curve gives {}, algebra gives {}", g.display(&geometric), g.display(&b))
            })?;
            cases += 1;
        }
    }
    within(Duration::from_secs(30), start.elapsed())?;
    Ok(format!("{cases} cases agree in {:?}", start.elapsed()))
}

fn positive_words(rank: usize, max_len: usize) -> Vec<Vec<i32>> {
    let mut all = vec![vec![]];
    let mut frontier: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 1..=rank as i32 {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

struct CurveInstance {
    coords: DynnikovCoords,
    beta: GarsideElement,
}

fn criterion4(bounds: &mut BoundLog, curve_instances: &mut Vec<CurveInstance>) -> Outcome {
    let start = Instant::now();
    let n = 4;
    let a3 = group("A3");
    let budget = EnumerationBudget::new(40, 5_000_000).unwrap();
    let mut curve_cases = 0;
    for p in 1..=n {
        for q in p + 1..=n {
            if p == 1 && q == n {
                continue;
            }
            let round = DynnikovCoords::round_system(&[(p, q)], n).unwrap();
            for w in positive_words(n - 1, 5) {
                let acted = round.apply_braid(&w).unwrap();
                let beta = acted.standardize().map_err(|e| e.to_string())?;
                bounds.record(&acted, beta.len());
                let algorithm = a3.normalize(&beta).unwrap();
                let oracle = brute_min_standardizer_curve(&a3, &acted, budget).map_err(|e| format!("[{p},{q}]·{w:?}: {e}"))?;
                ensure(oracle.ties == 1, || format!("[{p},{q}]·{w:?}: {} minimal standardizers", oracle.ties))?;
                ensure(oracle.element == algorithm, || {
                    format!("[{p},{q}]·{w:?}: rounding {} vs oracle {}", a3.display(&algorithm), a3.display(&oracle.element))
                })?;
                curve_instances.push(CurveInstance { coords: acted, beta: algorithm });
                curve_cases += 1;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut parabolic_cases = 0;
    for name in ["A2", "A3", "B3", "I2(5)"] {
        let g = group(name);
        for _ in 0..100 {
            let x = AtomSet::from_bits(rng.gen_range(0..1u64 << g.rank()));
            let alpha = random_signed_word(&mut rng, g.rank(), 2);
            let p = ParabolicPresentation::new(x, g.normalize(&alpha).unwrap());
            let (b, y) = minimal_standardizer(&g, &p).map_err(|e| e.to_string())?;
            let stripped = strip_standardizer(&g, &p).map_err(|e| e.to_string())?;
            let (oracle, oy) = brute_min_standardizer_parabolic(&g, &p, budget).map_err(|e| format!("{name} X={x} α={alpha:?}: {e}"))?;
            ensure(oracle.ties == 1, || format!("{name} X={x} α={alpha:?}: {} minima", oracle.ties))?;
            ensure(stripped == (b.clone(), y), || format!("{name} X={x} α={alpha:?}: strip disagrees"))?;
            ensure(oracle.element == b && oy == y, || {
                format!("{name} X={x} α={alpha:?}: pn gives {}, oracle {}", g.display(&b), g.display(&oracle.element))
            })?;
            parabolic_cases += 1;
        }
    }
    within(Duration::from_secs(120), start.elapsed())?;
    Ok(format!("{curve_cases} curve and {parabolic_cases} parabolic instances in {:?}", start.elapsed()))
}

fn criterion5(curve_instances: &[CurveInstance]) -> Outcome {
    let start = Instant::now();
    let a3 = group("A3");
    let mut checked = 0usize;
    let mut covered = 0usize;
    let mut trees: Vec<Option<PositiveMonoid>> = (0..=12).map(|_| None).collect();
    for inst in curve_instances {
        let census = inst.coords.census();
        let bending: Vec<usize> = (1..inst.coords.punctures()).filter(|&j| census.bending_points(j) > BigInt::from(0)).collect();
        if bending.is_empty() {
            continue;
        }
        let depth = (a3.to_word(&inst.beta).len() + 3).min(12);
        let tree = trees[depth].get_or_insert_with(|| {
            PositiveMonoid::build(&a3, EnumerationBudget::new(depth, 2_000_000).unwrap()).unwrap()
        });
        let standardizers = tree.curve_standardizers(&inst.coords).map_err(|e| e.to_string())?;
        if !standardizers.is_empty() {
            covered += 1;
        }
        for s in &standardizers {
            for &j in &bending {
                ensure(a3.atom_is_prefix(j - 1, s), || {
                    format!("({}) bends at {j} but {} lacks σ_{j} prefix", inst.coords, a3.display(s))
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (standardizer, bending point) pairs over {covered} curves with a standardizer of length <= 12 in {:?}",
        start.elapsed()
    ))
}

fn criterion6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for name in ["A2", "A3", "B3", "I2(5)", "H3"] {
        let g = group(name);
        for w in g.table().elements() {
            let a = g.simple_from_element(w).unwrap();
            let twice = g.complement(g.complement(a, Side::Right), Side::Right);
            ensure(twice == g.tau_simple(a, 1), || format!("{name}: ∂² ≠ τ"))?;
        }
        for _ in 0..1000 {
            let word = random_signed_word(&mut rng, g.rank(), 14);
            let x = g.normalize(&word).unwrap();
            let fail = |what: &str| format!("{name} {word:?}: {what}");
            ensure(g.is_left_normal(&x), || fail("not left normal"))?;
            ensure(g.normalize(&g.to_word(&x)).unwrap() == x, || fail("renormalizing changed the form"))?;
            let xi = g.invert(&x);
            ensure(g.is_left_normal(&xi), || fail("inverse not left normal"))?;
            ensure(xi == g.normalize(&inverse_word(&word)).unwrap(), || fail("inverse formula"))?;
            ensure(g.multiply(&x, &xi).unwrap().is_identity(), || fail("x x⁻¹ ≠ 1"))?;
            let rnf = g.right_normal_form(&x);
            let rinv = g.invert_right_normal_form(&rnf);
            ensure(g.is_right_normal(&rinv), || fail("right inverse not right normal"))?;
            ensure(g.from_right_normal_form(&rinv) == xi, || fail("right-form inverse formula"))?;
            let (a, b) = g.pn_normal_form(&x);
            ensure(a.is_positive() && b.is_positive(), || fail("pn factors not positive"))?;
            ensure(g.multiply(&a, &g.invert(&b)).unwrap() == x, || fail("x ≠ ab⁻¹"))?;
            let common = g.positive_meet_join(&a, &b, Order::Suffix, LatticeOp::Meet).unwrap();
            ensure(common.is_identity(), || fail("a ∧↰ b ≠ 1"))?;
            ensure(g.join(&xi, &g.identity(), Order::Prefix).unwrap() == b, || fail("b ≠ x⁻¹ ∨ 1"))?;
        }
    }
    within(Duration::from_secs(60), start.elapsed())?;
    Ok(format!("5 groups x 1000 elements in {:?}", start.elapsed()))
}

fn criterion7() -> Outcome {
    let s = |v: &[usize]| AtomSet::from_indices(v.iter().copied());
    let a2 = group("A2");
    let found = positive_conjugates(&a2, s(&[0])).map_err(|e| e.to_string())?;
    ensure(found == vec![s(&[0]), s(&[1])], || format!("A2: {found:?}"))?;
    let a3 = group("A3");
    let found3 = positive_conjugates(&a3, s(&[0, 1])).map_err(|e| e.to_string())?;
    ensure(found3.contains(&s(&[1, 2])), || format!("A3: {found3:?}"))?;
    for (g, ys) in [(&a2, &found), (&a3, &found3)] {
        for &y in ys.iter() {
            let c = central_element(g, y).value;
            ensure(g.is_rigid(&c), || format!("c_{y} not rigid"))?;
            ensure(g.cyclic_sliding(&c).1 == c, || format!("c_{y} moved by cyclic sliding"))?;
        }
    }
    Ok(format!("A2 {{1}} -> {found:?}; A3 {{1,2}} -> {found3:?}"))
}

fn criterion8(bounds: &BoundLog) -> Outcome {
    ensure(bounds.failures.is_empty(), || bounds.failures.join("; "))?;
    ensure(bounds.instances > 0, || "no instances recorded".to_string())?;
    Ok(format!("bounds hold on {} instances", bounds.instances))
}

fn criterion9() -> Outcome {
    let start = Instant::now();
    let g = group("A3");
    let p = ParabolicPresentation::new(AtomSet::from_indices([0]), g.normalize(&[2, -3, 1]).unwrap());
    let c = c_of_presentation(&g, &p).map_err(|e| e.to_string())?;
    let tree = PositiveMonoid::build(&g, EnumerationBudget::new(7, 2_000_000).unwrap()).map_err(|e| e.to_string())?;
    let standardizers = tree.parabolic_standardizers(&p).map_err(|e| e.to_string())?;
    ensure(standardizers.len() >= 10, || format!("only {} standardizers enumerated", standardizers.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..50 {
        let u = &standardizers[rng.gen_range(0..standardizers.len())];
        let v = &standardizers[rng.gen_range(0..standardizers.len())];
        for op in [LatticeOp::Meet, LatticeOp::Join] {
            let z = g.positive_meet_join(u, v, Order::Prefix, op).unwrap();
            let ok = standard_target(&g, &c, &z).map_err(|e| e.to_string())?.is_some();
            ensure(ok, || format!("{op:?} of {} and {} is not a standardizer", g.display(u), g.display(v)))?;
        }
    }
    Ok(format!("50 pairs from {} standardizers closed under ∧, ∨ in {:?}", standardizers.len(), start.elapsed()))
}

fn main() {
    let mut bounds = BoundLog::default();
    let mut curve_instances = Vec::new();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion1()),
        (2, criterion2(&mut bounds)),
        (3, criterion3(&mut bounds)),
        (4, criterion4(&mut bounds, &mut curve_instances)),
        (5, criterion5(&curve_instances)),
        (6, criterion6()),
        (7, criterion7()),
        (8, criterion8(&bounds)),
        (9, criterion9()),
    ];
    let mut failed = 0;
    for (i, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {i}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {i}: {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

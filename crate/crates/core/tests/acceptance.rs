//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.
//!
//! Run alone with `cargo test -p sylvester --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sylvester::certificates::{squares_identity_holds, AvatarSlot};
use sylvester::oracle::{elementary_symmetric, spectrum_classify, SpectrumVerdict};
use sylvester::{
    avatar_identities_ternary, char_poly_sums, classify, lb_decompose,
    leading_minors, parse_form, parse_matrix, psd_certificate, render_form, verify_certificate,
    DefinitenessClass, Error, ParseError, PsdOutcome, RVector, Rational, SymMatrix,
};

/// Single-input timing bound for the counterexample.
const COUNTEREXAMPLE_BUDGET: Duration = Duration::from_millis(1);
/// Wall-clock bound for the exhaustive n = 2, 3 families.
const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(60);
/// Relative tolerance between eigenvalue symmetric functions and minor sums;
/// the error is scaled by max(1, |exact|).
const CHAR_POLY_REL_TOL: f64 = 1e-6;

type Outcome = Result<String, String>;

fn ints(rows: &[&[i64]]) -> SymMatrix {
    SymMatrix::from_i64(rows).unwrap()
}

// ---- generators ----------------------------------------------------------

/// Every symmetric n×n matrix with integer entries in `lo..=hi`.
fn exhaustive(n: usize, lo: i64, hi: i64) -> Vec<SymMatrix> {
    let upper: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let base = (hi - lo + 1) as usize;
    let count = base.pow(upper.len() as u32);
    (0..count)
        .map(|mut code| {
            let mut vals = vec![vec![0i64; n]; n];
            for &(i, j) in &upper {
                let v = lo + (code % base) as i64;
                code /= base;
                vals[i][j] = v;
                vals[j][i] = v;
            }
            SymMatrix::from_fn(n, |i, j| Rational::from(vals[i][j]))
        })
        .collect()
}

fn random_rational(rng: &mut ChaCha8Rng, num: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=max_den))
}

fn random_generic(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    SymMatrix::from_fn(n, |_, _| random_rational(rng, 5, 4))
}

/// `±BᵀB` for a random rational `k×n` matrix `B`, `k ≤ n`: semidefinite and
/// often singular.
fn random_gram(rng: &mut ChaCha8Rng, n: usize, negate: bool) -> SymMatrix {
    let k = rng.gen_range(1..=n);
    let b: Vec<Vec<Rational>> = (0..k)
        .map(|_| (0..n).map(|_| random_rational(rng, 3, 3)).collect())
        .collect();
    let g = SymMatrix::from_fn(n, |i, j| b.iter().map(|row| &row[i] * &row[j]).sum());
    if negate {
        g.negate()
    } else {
        g
    }
}

/// Generic, Gram, or negated Gram with equal probability.
fn random_mixed(rng: &mut ChaCha8Rng, n: usize) -> SymMatrix {
    match rng.gen_range(0..3) {
        0 => random_generic(rng, n),
        1 => random_gram(rng, n, false),
        _ => random_gram(rng, n, true),
    }
}

// ---- independent oracles -------------------------------------------------

/// Classifies an integer matrix by evaluating Q in i64 over every vector
/// with entries in `-4..=4`: which signs occur, and whether Q vanishes at a
/// nonzero vector.
fn brute_force_class(a: &SymMatrix) -> DefinitenessClass {
    let n = a.dim();
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = a.get(i, j);
                    assert!(v.is_integer());
                    v.to_f64() as i64
                })
                .collect()
        })
        .collect();
    let (mut neg, mut pos, mut zero) = (false, false, false);
    let total = 9usize.pow(n as u32);
    let mut x = vec![0i64; n];
    for code in 1..total {
        let mut c = code;
        for xi in x.iter_mut() {
            *xi = (c % 9) as i64 - 4;
            c /= 9;
        }
        if x.iter().all(|&v| v == 0) {
            continue;
        }
        let mut q = 0i64;
        for i in 0..n {
            for j in 0..n {
                q += m[i][j] * x[i] * x[j];
            }
        }
        match q.signum() {
            -1 => neg = true,
            1 => pos = true,
            _ => zero = true,
        }
    }
    use DefinitenessClass::*;
    match (neg, pos, zero) {
        (true, true, _) => Indefinite,
        (false, false, _) => Zero,
        (false, true, false) => PositiveDefinite,
        (false, true, true) => PositiveSemidefinite,
        (true, false, false) => NegativeDefinite,
        (true, false, true) => NegativeSemidefinite,
    }
}

/// `a ≥ 0, c ≥ 0, ac − b² ≥ 0` evaluated literally.
fn binary_conditions(a: &SymMatrix) -> bool {
    let (pa, pb, pc) = (a.get(0, 0), a.get(0, 1), a.get(1, 1));
    !pa.is_negative() && !pc.is_negative() && !(pa * pc - pb.square()).is_negative()
}

/// The seven inequalities for `ax² + 2bxy + 2pxz + cy² + 2qyz + rz²`, with
/// `Δ = p(bq − cp) + q(bp − aq) + r(ac − b²)` written out.
fn ternary_conditions(m: &SymMatrix) -> bool {
    let (a, b, p) = (m.get(0, 0), m.get(0, 1), m.get(0, 2));
    let (c, q, r) = (m.get(1, 1), m.get(1, 2), m.get(2, 2));
    let delta = p * (b * q - c * p) + q * (b * p - a * q) + r * (a * c - b.square());
    [
        a.clone(),
        c.clone(),
        r.clone(),
        a * c - b.square(),
        c * r - q.square(),
        a * r - p.square(),
        delta,
    ]
    .iter()
    .all(|v| !v.is_negative())
}

// ---- criteria ------------------------------------------------------------

fn ac1_counterexample() -> Outcome {
    let a = ints(&[&[0, 0], &[0, -1]]);
    let mut best = Duration::MAX;
    let mut result = None;
    for _ in 0..5 {
        let t = Instant::now();
        let lm = leading_minors(&a);
        let class = classify(&a);
        best = best.min(t.elapsed());
        result = Some((lm, class));
    }
    let (lm, class) = result.unwrap();
    let expected: Vec<Rational> = [1, 0, 0].iter().map(|&v| Rational::from(v)).collect();
    if lm.values() != expected.as_slice() {
        return Err(format!("leading minors {:?}", lm.values()));
    }
    if lm.values().iter().any(Rational::is_negative) {
        return Err("a leading minor is negative".into());
    }
    if class != DefinitenessClass::NegativeSemidefinite {
        return Err(format!("classified as {class}"));
    }
    if best > COUNTEREXAMPLE_BUDGET {
        return Err(format!("took {best:?}, budget {COUNTEREXAMPLE_BUDGET:?}"));
    }
    Ok(format!("Δ = [1, 0, 0], class NegativeSemidefinite, {best:?}"))
}

fn ac2_exhaustive_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut spectral_checks = 0;
    for n in [2, 3] {
        for a in exhaustive(n, -2, 2) {
            let exact = classify(&a);
            let brute = brute_force_class(&a);
            if exact != brute {
                return Err(format!("[{a}]: exact {exact}, brute force {brute}"));
            }
            let report = spectrum_classify(&a, None).map_err(|e| e.to_string())?;
            if let SpectrumVerdict::Class(c) = report.verdict {
                spectral_checks += 1;
                if c != brute {
                    return Err(format!("[{a}]: spectrum {c}, brute force {brute}"));
                }
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if checked != 125 + 15_625 {
        return Err(format!("enumerated {checked} matrices"));
    }
    if elapsed > EXHAUSTIVE_BUDGET {
        return Err(format!("took {elapsed:?}, budget {EXHAUSTIVE_BUDGET:?}"));
    }
    Ok(format!(
        "{checked} matrices, 0 mismatches, {spectral_checks} spectral cross-checks, {elapsed:.1?}"
    ))
}

fn check_psd_outcome(a: &SymMatrix) -> Result<bool, String> {
    match psd_certificate(a) {
        PsdOutcome::Certificate(c) => {
            let ok = verify_certificate(a, &c).map_err(|e| e.to_string())?;
            if !ok || c.terms().iter().any(|t| t.weight.is_negative()) {
                return Err(format!("[{a}]: certificate fails verification"));
            }
            if !classify(a).is_nonnegative() {
                return Err(format!("[{a}]: certificate for a {} matrix", classify(a)));
            }
            Ok(true)
        }
        PsdOutcome::Witness(w) => {
            let v = a.evaluate_form(w.x()).map_err(|e| e.to_string())?;
            if !v.is_negative() || &v != w.value() || w.x().is_zero() {
                return Err(format!("[{a}]: witness {w} is not negative"));
            }
            Ok(false)
        }
    }
}

fn ac3_certificate_totality() -> Outcome {
    let mut certs = 0;
    let mut witnesses = 0;
    let mut tally = |is_cert: bool| {
        if is_cert {
            certs += 1
        } else {
            witnesses += 1
        }
    };
    for n in [2, 3] {
        for a in exhaustive(n, -2, 2) {
            tally(check_psd_outcome(&a)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..1000 {
        let n = if i % 2 == 0 { 4 } else { 5 };
        let a = random_mixed(&mut rng, n);
        tally(check_psd_outcome(&a)?);
    }
    Ok(format!("{} inputs: {certs} certificates, {witnesses} witnesses, 0 failures", certs + witnesses))
}

fn ac4_lagrange_beltrami() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    let mut rejected = 0;
    while done < 1000 {
        let n = rng.gen_range(1..=6);
        let a = random_generic(&mut rng, n);
        let lm = leading_minors(&a);
        if lm.values().iter().any(Rational::is_zero) {
            rejected += 1;
            continue;
        }
        let lb = lb_decompose(&a).map_err(|e| format!("[{a}]: {e}"))?;
        for i in 1..=n {
            let ratio = lm.get(i) / lm.get(i - 1);
            if lb.weights[i - 1] != ratio {
                return Err(format!("[{a}]: weight {i} is {}, Δ ratio {ratio}", lb.weights[i - 1]));
            }
        }
        if !lb.identity_holds(&a) {
            return Err(format!("[{a}]: expanded identity fails"));
        }
        if !lb.substitution.solve(&RVector::zeros(n)).unwrap().is_zero() {
            return Err(format!("[{a}]: substitution not invertible"));
        }
        done += 1;
    }
    Ok(format!("1000 matrices (n ≤ 6, {rejected} degenerate draws skipped), 0 failures"))
}

fn ac5_avatars() -> Outcome {
    let worked = ints(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
    if sylvester::det(&worked) != Rational::from(4) {
        return Err("worked instance Δ ≠ 4".into());
    }
    let slots = avatar_identities_ternary(&worked).map_err(|e| e.to_string())?;
    let first = slots[0].identity().ok_or("worked instance slot 1 not applicable")?;
    let expected = [
        (3, [2, 1, 0]),
        (1, [0, 3, 2]),
        (8, [0, 0, 1]),
    ];
    let matches = first.scale == Rational::from(6)
        && first.terms.len() == 3
        && first.terms.iter().zip(expected).all(|(t, (w, f))| {
            t.weight == Rational::from(w) && t.form == RVector::from_i64(&f)
        });
    if !matches || !first.holds(&worked) {
        return Err(format!("worked instance gave {first:?}"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut applicable = 0;
    let mut not_applicable = 0;
    for _ in 0..1000 {
        // zeros are drawn often enough to exercise the NotApplicable slots
        let a = SymMatrix::from_fn(3, |_, _| random_rational(&mut rng, 3, 3));
        let slots = avatar_identities_ternary(&a).map_err(|e| e.to_string())?;
        if slots.len() != 6 {
            return Err(format!("{} slots", slots.len()));
        }
        for slot in slots {
            match slot {
                AvatarSlot::Applicable(id) => {
                    if !id.holds(&a) {
                        return Err(format!("[{a}]: avatar ({}, {}) fails", id.pivot + 1, id.pair));
                    }
                    if !squares_identity_holds(&a, &Rational::one(), &id.normalized_terms()) {
                        return Err(format!("[{a}]: normalized avatar fails"));
                    }
                    applicable += 1;
                }
                AvatarSlot::NotApplicable { pivot, pair } => {
                    let m1 = a.get(pivot, pivot).clone();
                    let sub = a.principal_submatrix(&pair).unwrap();
                    if !(m1 * sylvester::det(&sub)).is_zero() {
                        return Err(format!("[{a}]: slot ({}, {pair}) wrongly skipped", pivot + 1));
                    }
                    not_applicable += 1;
                }
            }
        }
    }
    Ok(format!(
        "worked instance 6Q = 3(2x+y)² + (3y+2z)² + 8z² holds; {applicable} identities verified, {not_applicable} not applicable"
    ))
}

fn ac6_proposition_consistency() -> Outcome {
    let mut checked = 0;
    for (n, conditions) in [(2usize, binary_conditions as fn(&SymMatrix) -> bool), (3, ternary_conditions)] {
        for a in exhaustive(n, -2, 2) {
            let class = classify(&a);
            if class.is_nonnegative() != conditions(&a) {
                return Err(format!("[{a}]: {class} vs literal conditions {}", conditions(&a)));
            }
            if class.is_nonpositive() != conditions(&a.negate()) {
                return Err(format!("[{a}]: {class} vs literal conditions on -A"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} matrices, 0 mismatches"))
}

fn ac7_mirror_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = std::collections::BTreeMap::new();
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5);
        let a = random_mixed(&mut rng, n);
        let c = classify(&a);
        let mirrored = classify(&a.negate());
        if mirrored != c.mirror() {
            return Err(format!("[{a}]: {c} but -A is {mirrored}"));
        }
        *seen.entry(c.name()).or_insert(0) += 1;
    }
    Ok(format!("10000 matrices, 0 failures, classes {seen:?}"))
}

fn ac8_oracle_cross_check() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    let mut resolved = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=6);
        let a = SymMatrix::from_fn(n, |_, _| Rational::from(rng.gen_range(-10i64..=10)));
        let report = spectrum_classify(&a, None).map_err(|e| e.to_string())?;
        if report.eigenvalues.len() != n {
            return Err(format!("[{a}]: Jacobi did not converge"));
        }
        let sums = char_poly_sums(&a);
        for (e, c) in elementary_symmetric(&report.eigenvalues).iter().zip(&sums) {
            let exact = c.to_f64();
            let rel = (e - exact).abs() / exact.abs().max(1.0);
            worst = worst.max(rel);
            if rel > CHAR_POLY_REL_TOL {
                return Err(format!("[{a}]: e_k {e} vs c_k {c}, relative error {rel:e}"));
            }
        }
        if let SpectrumVerdict::Class(v) = report.verdict {
            resolved += 1;
            let exact = classify(&a);
            if v != exact {
                return Err(format!("[{a}]: spectrum {v}, exact {exact}"));
            }
        }
    }
    Ok(format!(
        "1000 matrices, worst relative error {worst:.2e} (tol {CHAR_POLY_REL_TOL:e}), {resolved} resolved verdicts agree"
    ))
}

fn ac9_parser() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let a = SymMatrix::from_fn(n, |_, _| random_rational(&mut rng, 20, 9));
        let text = render_form(&a);
        let back = parse_form(&text).map_err(|e| format!("{text:?}: {e}"))?;
        if back != a {
            return Err(format!("{text:?} parsed to [{back}], expected [{a}]"));
        }
    }
    match parse_form("x^2 + w^2") {
        Err(Error::Parse(ParseError::UnknownVariable { .. })) => {}
        other => return Err(format!("unknown variable gave {other:?}")),
    }
    match parse_form("x^3") {
        Err(Error::Parse(ParseError::NonQuadraticTerm { .. })) => {}
        other => return Err(format!("cubic term gave {other:?}")),
    }
    match parse_matrix("1 2; 3 4") {
        Err(Error::NotSymmetric { row: 1, col: 2 }) => {}
        other => return Err(format!("asymmetric matrix gave {other:?}")),
    }
    Ok("500 round trips exact; UnknownVariable, NonQuadraticTerm, NotSymmetric(1,2) raised".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC1 counterexample: nonnegative leading minors, not PSD", ac1_counterexample),
        ("AC2 exhaustive n=2,3 classification vs brute force", ac2_exhaustive_oracle),
        ("AC3 psd_certificate totality and soundness", ac3_certificate_totality),
        ("AC4 Lagrange-Beltrami weights Δi/Δi-1", ac4_lagrange_beltrami),
        ("AC5 ternary avatar identities", ac5_avatars),
        ("AC6 binary/ternary inequality consistency", ac6_proposition_consistency),
        ("AC7 mirror law under negation", ac7_mirror_law),
        ("AC8 Jacobi spectrum vs exact minors", ac8_oracle_cross_check),
        ("AC9 form parser round trip and errors", ac9_parser),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({:.2?})", t.elapsed()),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 9 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}


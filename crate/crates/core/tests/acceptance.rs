//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use reskit::oracles::{
    compare_exact, compare_numeric, determinant_resultant, macaulay_resultant,
    numeric_root_product, sylvester_resultant, Agreement, NUMERIC_TOLERANCE,
};
use reskit::schur::{degree_vector, schur_direct, schur_recurrence};
use reskit::traces::{TraceEngine, TraceIndex, TraceTable};
use reskit::{parse_polynomial, resultant, Coefficient, Error, PolySystem, Polynomial};

use common::*;

const FIXTURE_PARAMS: [&str; 4] = ["a", "b", "c", "alpha"];
const FIXTURE_SYSTEM: [&str; 3] = [
    "a*x1^2 + alpha*x2*x3",
    "b*x2^2 + alpha*x1*x3",
    "c*x3^2 + alpha*x1*x2",
];
/// Macaulay-oracle value of the fixture system, computed once and frozen.
const FIXTURE_MACAULAY: &str =
    "a^4*b^4*c^4 + 3*a^3*b^3*c^3*alpha^3 + 3*a^2*b^2*c^2*alpha^6 + a*b*c*alpha^9";

/// Known low-order expansions, transcribed verbatim.
const DISPLAYED_SCHUR: [(&str, &str); 5] = [
    ("1,0", "- T_{1, 0}"),
    ("2,0", "- T_{2, 0} + T_{1, 0}^2/2"),
    ("2,1", "- T_{2,1} + T_{2,0} T_{0,1} + T_{1,0} T_{1,1} - T_{1,0}^2 T_{0,1}/2"),
    (
        "2,1,0",
        "- T_{2,1,0} + T_{2,0,0} T_{0,1,0} + T_{1,0,0} T_{1,1,0} - T_{1,0,0}^2 T_{0,1,0}/2",
    ),
    (
        "1,1,1",
        "- T_{1,1,1} + T_{1,0,0} T_{0,1,1} + T_{0,1,0} T_{1,0,1} + T_{1,1,0} T_{0,0,1} - T_{0,1,0} T_{0,0,1} T_{1,0,0}",
    ),
];

type Outcome = Result<String, String>;

/// Observed oracle/schur sign ratios, keyed by oracle and degree profile.
#[derive(Default)]
struct SignLedger {
    seen: BTreeMap<(String, Vec<u32>), BTreeSet<i8>>,
    both_zero: usize,
}

impl SignLedger {
    /// Records the comparison; `Err` on disagreement or a sign flip.
    fn record(&mut self, oracle: &str, profile: &[u32], a: Agreement) -> Result<(), String> {
        let sign = match a {
            Agreement::Disagree => {
                return Err(format!("{oracle} disagrees on profile {profile:?}"));
            }
            Agreement::BothZero => {
                self.both_zero += 1;
                return Ok(());
            }
            a => a.sign().unwrap(),
        };
        let signs = self.seen.entry((oracle.to_string(), profile.to_vec())).or_default();
        signs.insert(sign);
        if signs.len() > 1 {
            return Err(format!("{oracle} sign flips on profile {profile:?}"));
        }
        Ok(())
    }

    fn sign(&self, oracle: &str, profile: &[u32]) -> Option<i8> {
        let s = self.seen.get(&(oracle.to_string(), profile.to_vec()))?;
        (s.len() == 1).then(|| *s.iter().next().unwrap())
    }

    fn summary(&self, oracle: &str) -> String {
        let mut by_sign: BTreeMap<String, usize> = BTreeMap::new();
        for ((o, _), s) in &self.seen {
            if o == oracle {
                let key = s.iter().map(|v| format!("{v:+}")).collect::<Vec<_>>().join("/");
                *by_sign.entry(key).or_default() += 1;
            }
        }
        by_sign.iter().map(|(s, c)| format!("{c} profiles sign {s}")).collect::<Vec<_>>().join(", ")
    }

    fn violations(&self) -> usize {
        self.seen.values().filter(|s| s.len() > 1).count()
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn res(system: &PolySystem) -> Result<Coefficient, String> {
    resultant(system).map_err(|e| e.to_string())
}

fn criterion_1(ledger: &mut SignLedger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let profiles: Vec<[u32; 2]> = (1..=4).flat_map(|a| (1..=4).map(move |b| [a, b])).collect();
    for draw in 0..200 {
        let p = profiles[draw % profiles.len()];
        let s = random_system(&mut rng, &p, -5, 5);
        let ours = res(&s)?;
        let theirs = sylvester_resultant(s.poly(0), s.poly(1)).map_err(|e| e.to_string())?;
        ledger.record("sylvester", &p, compare_exact(&ours, &theirs))?;
    }
    Ok(format!("200 systems, {}", ledger.summary("sylvester")))
}

fn criterion_2(ledger: &mut SignLedger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for draw in 0..100 {
        let n = 2 + draw % 4;
        let p = vec![1; n];
        let s = random_system(&mut rng, &p, -5, 5);
        let ours = res(&s)?;
        let theirs = determinant_resultant(&s).map_err(|e| e.to_string())?;
        ledger.record("determinant", &p, compare_exact(&ours, &theirs))?;
    }
    Ok(format!("100 systems n = 2..5, {}", ledger.summary("determinant")))
}

fn criterion_3(ledger: &mut SignLedger) -> Outcome {
    let params = names(&FIXTURE_PARAMS);
    let s = system(&FIXTURE_SYSTEM, &params);
    let ours = res(&s)?;
    let frozen = parse_polynomial(FIXTURE_MACAULAY, 1, &params)
        .map_err(|e| e.to_string())?
        .coefficient(&[0])
        .map_err(|e| e.to_string())?;
    let agreement = compare_exact(&ours, &frozen);
    ledger.record("macaulay", &[2, 2, 2], agreement)?;
    let live = macaulay_resultant(&s).map_err(|e| e.to_string())?;
    ensure(live == frozen, || "live Macaulay oracle no longer matches the frozen value".into())?;

    let no_alpha = ours.specialize(&[None, None, None, Some(BigRational::from_integer(0.into()))]);
    let abc = &(&Coefficient::param(0) * &Coefficient::param(1)) * &Coefficient::param(2);
    ensure(no_alpha == abc.pow(4), || {
        format!("alpha -> 0 gives {}", no_alpha.display(&params))
    })?;
    Ok(format!("sign {:+}, alpha -> 0 gives a^4*b^4*c^4", agreement.sign().unwrap()))
}

/// Reads one displayed expansion into a coefficient over the symbols `T_k`.
fn displayed_expansion(text: &str, symbols: &BTreeMap<String, usize>) -> Result<Coefficient, String> {
    let mut flat = String::new();
    let mut in_braces = false;
    for ch in text.chars() {
        match ch {
            '{' => {
                in_braces = true;
                flat.push('[');
            }
            '}' => {
                in_braces = false;
                flat.push(']');
            }
            ' ' if in_braces => {}
            c => flat.push(c),
        }
    }
    let mut total = Coefficient::zero();
    let mut sign = 1i64;
    let mut term: Option<Coefficient> = None;
    let flush = |term: &mut Option<Coefficient>, sign: i64, total: &mut Coefficient| {
        if let Some(t) = term.take() {
            *total += &(&t * &Coefficient::from(sign));
        }
    };
    for tok in flat.split_whitespace() {
        match tok {
            "+" | "-" => {
                flush(&mut term, sign, &mut total);
                sign = if tok == "-" { -1 } else { 1 };
            }
            factor => {
                let (factor, divisor) = match factor.split_once('/') {
                    Some((f, d)) => (f, d.parse::<i64>().map_err(|e| e.to_string())?),
                    None => (factor, 1),
                };
                let (sym, power) = match factor.split_once('^') {
                    Some((s, p)) => (s, p.parse::<u32>().map_err(|e| e.to_string())?),
                    None => (factor, 1),
                };
                let key = sym
                    .strip_prefix("T_[")
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| format!("unexpected factor {factor}"))?;
                let idx = *symbols.get(key).ok_or_else(|| format!("unknown symbol {key}"))?;
                let f = Coefficient::param(idx).pow(power).div_int(&BigInt::from(divisor));
                term = Some(match term.take() {
                    Some(t) => &t * &f,
                    None => f,
                });
            }
        }
    }
    flush(&mut term, sign, &mut total);
    Ok(total)
}

/// Trace table whose nonzero entries are independent symbols `T_k`.
fn formal_table(bound: &[u32]) -> (TraceTable, BTreeMap<String, usize>, Vec<String>) {
    let mut symbols = BTreeMap::new();
    let mut display = Vec::new();
    let table = TraceTable::from_fn(TraceIndex::new(bound.to_vec()), |k| {
        if k.is_zero() {
            return Coefficient::zero();
        }
        let idx = display.len();
        symbols.insert(k.to_string(), idx);
        display.push(format!("T[{k}]"));
        Coefficient::param(idx)
    });
    (table, symbols, display)
}

fn criterion_4() -> Outcome {
    for (k, text) in DISPLAYED_SCHUR {
        let index: Vec<u32> = k.split(',').map(|v| v.parse().unwrap()).collect();
        let (table, symbols, display) = formal_table(&index);
        let want = displayed_expansion(text, &symbols)?;
        let got = schur_direct(&table, &TraceIndex::new(index.clone())).map_err(|e| e.to_string())?;
        ensure(got == want, || {
            format!("P[{k}]: computed {} but displayed {}", got.display(&display), want.display(&display))
        })?;
        let rec = schur_recurrence(&table, &TraceIndex::new(index.clone())).map_err(|e| e.to_string())?;
        ensure(rec.get(&index) == Some(&want), || format!("recurrence differs at P[{k}]"))?;
    }
    Ok(format!("{} displayed expansions reproduced", DISPLAYED_SCHUR.len()))
}

fn random_rational_table(rng: &mut impl Rng, bound: &[u32]) -> TraceTable {
    TraceTable::from_fn(TraceIndex::new(bound.to_vec()), |k| {
        if k.is_zero() || rng.random_bool(0.15) {
            return Coefficient::zero();
        }
        let num = rng.random_range(-9i64..=9);
        let den = rng.random_range(1i64..=7);
        Coefficient::ratio(num, den)
    })
}

/// Table with `v! T_v` integral, which selects the integer recurrence path.
fn random_scaled_integer_table(rng: &mut impl Rng, bound: &[u32]) -> TraceTable {
    TraceTable::from_fn(TraceIndex::new(bound.to_vec()), |k| {
        if k.is_zero() || rng.random_bool(0.15) {
            return Coefficient::zero();
        }
        let factorial: i64 = k.as_slice().iter().map(|&x| (1..=x as i64).product::<i64>()).product();
        Coefficient::ratio(rng.random_range(-9i64..=9), factorial)
    })
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for bound in [vec![3u32, 3], vec![2, 2, 2]] {
        for draw in 0..20 {
            let table = if draw % 2 == 0 {
                random_rational_table(&mut rng, &bound)
            } else {
                random_scaled_integer_table(&mut rng, &bound)
            };
            let rec = schur_recurrence(&table, table.bound()).map_err(|e| e.to_string())?;
            for (k, _) in table.iter() {
                let direct = schur_direct(&table, &k).map_err(|e| e.to_string())?;
                ensure(rec.get(k.as_slice()) == Some(&direct), || {
                    format!("recurrence and direct expansion differ at P[{k}]")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} coefficients on 40 random tables (20 general rational, 20 with integral v! T_v)"))
}

fn positive_indices(bound: &[u32]) -> Vec<TraceIndex> {
    degree_profiles(bound.len(), 2)
        .into_iter()
        .filter(|k| k.iter().zip(bound).all(|(a, b)| a <= b))
        .map(TraceIndex::new)
        .collect()
}

fn check_dp_against_enumeration(s: &PolySystem, bound: &[u32]) -> Result<usize, String> {
    let degrees = s.degrees();
    let engine = TraceEngine::new(s, TraceIndex::new(bound.to_vec())).map_err(|e| e.to_string())?;
    let mut count = 0;
    for k in positive_indices(bound) {
        let dp = engine.trace_positive(&k).map_err(|e| e.to_string())?;
        let brute = engine.trace_positive_enumerated(&k).map_err(|e| e.to_string())?;
        ensure(dp == brute, || format!("profile {degrees:?}, k = {k}: DP and enumeration differ"))?;
        for m in engine.visited_matrices(&k).map_err(|e| e.to_string())? {
            let want: Vec<u64> =
                degrees.iter().zip(k.as_slice()).map(|(&r, &v)| r as u64 * v as u64).collect();
            ensure(m.row_sums() == want && m.col_sums() == want, || {
                format!("profile {degrees:?}, k = {k}: visited matrix violates the margins")
            })?;
        }
        count += 1;
    }
    Ok(count)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut generic = 0;
    let mut random = 0;
    for n in 1..=3 {
        for profile in degree_profiles(n, 2) {
            let bound = vec![2; n];
            generic += check_dp_against_enumeration(&generic_system(&profile), &bound)?;
            for _ in 0..3 {
                random += check_dp_against_enumeration(&random_system(&mut rng, &profile, -5, 5), &bound)?;
            }
        }
    }
    Ok(format!("{generic} generic-coefficient traces, {random} random integer traces"))
}

fn scale_poly(s: &PolySystem, i: usize, by: &Coefficient) -> PolySystem {
    s.with_poly(i, s.poly(i).scale(by)).unwrap()
}

/// Makes every form vanish at `point` by adjusting its `x1^{r}` coefficient.
fn force_root(s: &PolySystem, point: &[i64]) -> PolySystem {
    let n = s.n();
    let values: Vec<BigRational> =
        point.iter().map(|&v| BigRational::from_integer(v.into())).collect();
    s.map_polys(|f| {
        let mut at = Coefficient::zero();
        for (e, c) in f.terms() {
            let mut m = c.as_rational().unwrap().clone();
            for (x, &k) in values.iter().zip(e.as_slice()) {
                m *= num_traits::pow(x.clone(), k as usize);
            }
            at += &Coefficient::from(m);
        }
        let lead = num_traits::pow(values[0].clone(), f.degree() as usize);
        let mut e = vec![0; n];
        e[0] = f.degree();
        let fix = Polynomial::monomial(
            reskit::ExponentVector::new(e),
            -&(at * Coefficient::from(lead.recip())),
        );
        f.add(&fix).unwrap()
    })
    .unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut notes = Vec::new();

    // Scaling.
    let lambdas = [Coefficient::from(2), Coefficient::from(-3), Coefficient::ratio(1, 2)];
    let mut scaled = 0;
    for profile in [vec![2u32, 3], vec![3, 1], vec![1, 1, 2], vec![1, 2, 2], vec![1, 1, 1, 1]] {
        let s = random_system(&mut rng, &profile, -5, 5);
        let base = res(&s)?;
        let d = degree_vector(&s);
        for i in 0..s.n() {
            for l in &lambdas {
                let got = res(&scale_poly(&s, i, l))?;
                ensure(got == &base * &l.pow(d.entries()[i]), || {
                    format!("scaling f{} of profile {profile:?}", i + 1)
                })?;
                scaled += 1;
            }
        }
    }
    notes.push(format!("scaling {scaled}"));

    // Vanishing on systems with a common root.
    let profiles: [&[u32]; 10] = [
        &[1, 1],
        &[2, 3],
        &[3, 3],
        &[1, 4],
        &[1, 1, 1],
        &[1, 1, 2],
        &[1, 2, 2],
        &[2, 2, 2],
        &[1, 1, 1, 1],
        &[1, 1, 1, 2],
    ];
    for case in 0..50 {
        let profile = profiles[case % profiles.len()];
        let n = profile.len();
        let s = if case % 2 == 0 {
            let linear = random_poly(&mut rng, n, 1, -5, 5);
            let polys = profile
                .iter()
                .map(|&r| {
                    if r == 1 {
                        linear.scale(&Coefficient::from(rng.random_range(1..=5)))
                    } else {
                        linear.multiply(&random_poly(&mut rng, n, r - 1, -5, 5)).unwrap()
                    }
                })
                .collect();
            PolySystem::new(polys).unwrap()
        } else {
            let mut point: Vec<i64> = (0..n).map(|_| rng.random_range(-3..=3)).collect();
            point[0] = if rng.random_bool(0.5) { 1 } else { -2 };
            loop {
                let s = force_root(&random_system(&mut rng, profile, -5, 5), &point);
                if s.polys().iter().all(|f| !f.is_zero()) {
                    break s;
                }
            }
        };
        let r = res(&s).map_err(|e| format!("common-root case {case}: {e}"))?;
        ensure(r.is_zero(), || format!("common-root case {case} ({profile:?}) gives {}", r.display(&[])))?;
    }
    notes.push("vanishing 50".into());

    // Multiplicativity in the first slot.
    for case in 0..50 {
        let (a, b, c) =
            (rng.random_range(1..=3u32), rng.random_range(1..=3u32), rng.random_range(1..=3u32));
        let f = random_poly(&mut rng, 2, a, -5, 5);
        let g = random_poly(&mut rng, 2, b, -5, 5);
        let h = random_poly(&mut rng, 2, c, -5, 5);
        let pair = |x: &Polynomial| res(&PolySystem::new(vec![x.clone(), h.clone()]).unwrap());
        let whole = pair(&f.multiply(&g).unwrap())?;
        ensure(whole == &pair(&f)? * &pair(&g)?, || {
            format!("multiplicativity case {case} with degrees ({a}, {b}, {c})")
        })?;
    }
    notes.push("multiplicativity 50".into());

    // Integrality.
    let mut integral = 0;
    for profile in [vec![2u32, 3], vec![4, 3], vec![1, 2, 3], vec![2, 2, 2], vec![1, 1, 1, 2]] {
        for _ in 0..4 {
            let r = res(&random_system(&mut rng, &profile, -5, 5))?;
            ensure(r.is_integer(), || format!("non-integral resultant for {profile:?}"))?;
            integral += 1;
        }
    }
    for profile in [vec![2u32, 2], vec![2, 3], vec![1, 1, 2], vec![1, 2, 2]] {
        let r = res(&generic_system(&profile))?;
        ensure(r.has_integer_coefficients(), || format!("generic {profile:?} has non-integral coefficients"))?;
        integral += 1;
    }
    notes.push(format!("integrality {integral}"));

    // Diagonal systems.
    let mut diagonal = 0;
    for n in 1..=4 {
        for profile in degree_profiles(n, 3) {
            let r = res(&PolySystem::diagonal(&profile).unwrap())?;
            ensure(r.is_one(), || format!("diagonal {profile:?} gives {}", r.display(&[])))?;
            diagonal += 1;
        }
    }
    notes.push(format!("diagonal {diagonal}"));
    Ok(notes.join(", "))
}

/// Coefficient of `x2^r`, the leading coefficient after dehomogenizing.
fn leading(f: &Polynomial) -> Coefficient {
    f.coefficient(&[0, f.degree()]).unwrap()
}

fn criterion_8(ledger: &mut SignLedger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst = 0.0f64;
    for draw in 0..100 {
        let p = [1 + (draw % 4) as u32, 1 + (draw / 4 % 4) as u32];
        let s = loop {
            let s = random_system(&mut rng, &p, -5, 5);
            if s.polys().iter().all(|f| !leading(f).is_zero()) {
                break s;
            }
        };
        let exact = res(&s)?;
        let approx = numeric_root_product(s.poly(0), s.poly(1)).map_err(|e| e.to_string())?;
        let x = exact.to_f64().unwrap();
        if x != 0.0 {
            worst = worst.max(((approx.re - x).abs()).max(approx.im.abs()) / x.abs());
        }
        ledger.record("numeric", &p, compare_numeric(&exact, approx, NUMERIC_TOLERANCE))?;
    }
    Ok(format!(
        "100 systems within {NUMERIC_TOLERANCE:e}, worst relative error {worst:.1e}, {}",
        ledger.summary("numeric")
    ))
}

fn cli_signs(input: &str) -> Result<BTreeMap<String, Value>, String> {
    let out = reskit::cli::run(
        ["reskit", "--command", "verify", "--format", "json", "--seed", "3"],
        &mut input.as_bytes(),
    );
    ensure(out.code == 0, || format!("verify exited with {}: {}", out.code, out.stderr))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    Ok(v["signVsOracles"].as_object().cloned().unwrap_or_default().into_iter().collect())
}

fn criterion_9(ledger: &mut SignLedger) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut inconclusive = 0;
    let profiles: [&[u32]; 9] = [
        &[2, 3],
        &[1, 1, 1],
        &[2, 1, 1],
        &[1, 1, 2],
        &[1, 2, 2],
        &[2, 2, 2],
        &[1, 2, 3],
        &[1, 1, 1, 1],
        &[2, 1, 1, 1],
    ];
    for profile in profiles {
        for _ in 0..8 {
            let s = random_system(&mut rng, profile, -5, 5);
            match macaulay_resultant(&s) {
                Ok(m) => ledger.record("macaulay", profile, compare_exact(&res(&s)?, &m))?,
                Err(Error::Inconclusive(_)) => inconclusive += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    ensure(ledger.violations() == 0, || "sign violations recorded".into())?;

    let pair = cli_signs("n 2\nf1 = 2*x1^2 - x1*x2 + 3*x2^2\nf2 = x1^3 + x1^2*x2 - 4*x2^3 + x1*x2^2\n")?;
    for oracle in ["sylvester", "numeric", "macaulay"] {
        let want = ledger.sign(oracle, &[2, 3]).map(i64::from);
        ensure(pair.get(oracle).and_then(Value::as_i64) == want, || {
            format!("CLI reports {oracle} sign {:?}, suite observed {want:?}", pair.get(oracle))
        })?;
    }
    let params = FIXTURE_SYSTEM
        .iter()
        .enumerate()
        .map(|(i, f)| format!("f{} = {f}\n", i + 1))
        .collect::<String>();
    let fixture = cli_signs(&format!("n 3\nparams a b c alpha\n{params}"))?;
    let want = ledger.sign("macaulay", &[2, 2, 2]).map(i64::from);
    ensure(fixture.get("macaulay").and_then(Value::as_i64) == want, || {
        "CLI macaulay sign on the fixture differs from the suite".into()
    })?;

    let all: BTreeSet<i8> = ledger.seen.values().flatten().copied().collect();
    Ok(format!(
        "{} (oracle, profile) pairs, 0 violations, signs seen {:?}, {} both-zero draws, {} Macaulay draws inconclusive; CLI verify reports the same signs",
        ledger.seen.len(),
        all,
        ledger.both_zero,
        inconclusive
    ))
}

fn main() {
    let mut ledger = SignLedger::default();
    let mut failed = 0;
    let mut run = |id: u32, title: &str, f: &mut dyn FnMut(&mut SignLedger) -> Outcome| {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| f(&mut ledger)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {id} ({title}): {detail} [{secs:.2}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({title}): {why} [{secs:.2}s]");
            }
        }
    };
    run(1, "Sylvester agreement", &mut criterion_1);
    run(2, "determinant agreement", &mut criterion_2);
    run(3, "fixture system", &mut criterion_3);
    run(4, "displayed Schur expansions", &mut |_| criterion_4());
    run(5, "recurrence vs direct expansion", &mut |_| criterion_5());
    run(6, "trace DP vs enumeration", &mut |_| criterion_6());
    run(7, "invariant suite", &mut |_| criterion_7());
    run(8, "numeric root product", &mut criterion_8);
    run(9, "sign stability", &mut criterion_9);
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}

//! One PASS/FAIL line per acceptance criterion. All comparisons are exact
//! (tolerance 0); each criterion carries a pinned wall-clock budget.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::Value;

use covg_core::equivariant::{braid_symmetric_group, graded_character, locus_action, verify_graded_module_structure};
use covg_core::field::{PrimeField, Rationals};
use covg_core::harmonics::{
    big_locus, hilbert_series, kostant_locus, permmatrix_locus, permutohedral_locus, small_braid_erratum,
    small_braid_series, small_locus, tilde_ideal_generators, verify_small_generators, verify_theorem_big,
    BigContext,
};
use covg_core::matroidal::{
    check_tope_contraction_count, check_two_values_exhaustive, nbc_sets_of, FlatStructure, TotalOrder,
};
use covg_core::realize::{
    braid_arrangement, braid_com, enumerate_covectors, fixture, fixture_arrangement, lp_strict_feasible,
    AffineForm, Arrangement,
};
use covg_core::{Com, ElementSet, Rational};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn corpus() -> Vec<(String, Com)> {
    let mut v = vec![
        ("figure1".to_string(), fixture("figure1").unwrap()),
        ("figure1-rectangle".to_string(), fixture("figure1-rectangle").unwrap()),
    ];
    for n in 1..=4 {
        v.push((format!("braid{n}"), braid_com(n).unwrap()));
    }
    v
}

fn set(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

fn timed<T>(budget: Duration, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let t = Instant::now();
    let out = f()?;
    let el = t.elapsed();
    ensure(el <= budget, || format!("{what} took {el:?}, budget {budget:?}"))?;
    Ok(out)
}

fn c1_figure1() -> Check {
    let m = fixture("figure1").map_err(e)?;
    ensure(m.check_axioms().map_err(e)?.passes(), || "axioms fail".into())?;
    ensure(m.len() == 13, || format!("{} covectors", m.len()))?;
    ensure(m.topes().len() == 6, || format!("{} topes", m.topes().len()))?;
    let fs = FlatStructure::new(&m).map_err(e)?;
    let mut flats = fs.flats().flats().to_vec();
    flats.sort();
    let expect = vec![set(&[]), set(&[0]), set(&[0, 1, 2]), set(&[1]), set(&[2])];
    ensure(flats == expect, || format!("flats {flats:?}"))?;
    let b = fs.basic_sets(&set(&[0, 1, 2])).map_err(e)?;
    ensure(b == [set(&[0, 1]), set(&[0, 2]), set(&[1, 2])], || format!("basic {b:?}"))?;
    let mn = fs.minimal_nonbasic_sets();
    ensure(mn == vec![set(&[0, 1, 2]), set(&[3])], || format!("minimal nonbasic {mn:?}"))?;
    let ctx = BigContext::new(&m).map_err(e)?;
    let tilde: Vec<String> = tilde_ideal_generators(&Rationals, &m, &ctx).polynomials().map(|p| p.to_string()).collect();
    let want = ["z1*z2*z3", "z4", "z1*z2 - z1*z3", "z1*z2 - z2*z3", "z1*z3 - z2*z3"];
    ensure(tilde == want, || format!("tilde {tilde:?}"))?;
    Ok("13 covectors, 6 topes, 5 flats, tilde ideal matches".into())
}

fn cli_series(n: usize, method: &str, field: &str) -> Result<Vec<u64>, String> {
    let input = format!("braid:{n}");
    let out = Command::new(env!("CARGO_BIN_EXE_covg"))
        .args(["hilbert", &input, "--which", "big", "--method", method, "--field", field])
        .env_remove("COVG_FIELD")
        .output()
        .map_err(e)?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let v: Value = serde_json::from_slice(&out.stdout).map_err(e)?;
    v["results"]["series"]["coeffs"]
        .as_array()
        .ok_or("no coeffs")?
        .iter()
        .map(|c| c.as_u64().ok_or_else(|| "bad coeff".to_string()))
        .collect()
}

fn c2_big_braid() -> Check {
    let table: [&[u64]; 5] = [&[1], &[1, 2], &[1, 6, 6], &[1, 12, 36, 26], &[1, 20, 120, 250, 150]];
    let check = |n: usize, field: &str| -> Result<(), String> {
        let rank = cli_series(n, "rank", field)?;
        let nbc = cli_series(n, "nbc", field)?;
        ensure(rank == table[n - 1], || format!("n={n} {field}: rank {rank:?}"))?;
        ensure(nbc == rank, || format!("n={n}: nbc {nbc:?} vs rank {rank:?}"))
    };
    timed(Duration::from_secs(10), "n<=4 over Q", || (1..=4).try_for_each(|n| check(n, "rational")))?;
    timed(Duration::from_secs(300), "n=5 over Q", || check(5, "rational"))?;
    timed(Duration::from_secs(30), "n=5 over F_p", || check(5, "fp:1000003"))?;
    Ok("n=1..5 rank = nbc = table over Q; F_p path agrees at n=5".into())
}

fn c3_small_braid() -> Check {
    let mut fact = 1u64;
    for n in 2..=5 {
        fact *= n as u64;
        let h = hilbert_series(Rationals, &small_locus(&braid_com(n).map_err(e)?)).map_err(e)?;
        ensure(h == small_braid_series(n), || format!("n={n}: {h}"))?;
        ensure(h.total() == fact, || format!("n={n}: total {}", h.total()))?;
        ensure(small_braid_erratum(n, &h).is_some(), || format!("n={n}: printed formula not flagged"))?;
    }
    Ok("prod (1+iq) for n=2..5, sums n!, printed closed form flagged".into())
}

fn c4_membership() -> Check {
    let mut gens = 0;
    let mut js = 0;
    for (name, m) in corpus() {
        let ord = TotalOrder::natural(m.ground().len());
        let big = verify_theorem_big(Rationals, &m, &ord).map_err(e)?;
        ensure(big.membership_failures.is_empty(), || format!("{name}: {:?}", big.membership_failures))?;
        ensure(big.j_failures.is_empty(), || format!("{name}: {:?}", big.j_failures))?;
        gens += big.big_generators;
        js += big.j_variants_checked;
        if m.topes().is_empty() {
            continue;
        }
        let small = verify_small_generators(Rationals, &m, &ord).map_err(e)?;
        ensure(small.graded_failures.is_empty(), || format!("{name}: {:?}", small.graded_failures))?;
        gens += small.graded_generators;
    }
    ensure(js > 0, || "no J variants exercised".into())?;
    Ok(format!("{gens} generators and {js} J variants are members"))
}

fn c5_bases() -> Check {
    for (name, m) in corpus() {
        let ord = TotalOrder::natural(m.ground().len());
        let big = verify_theorem_big(Rationals, &m, &ord).map_err(e)?;
        ensure(big.basis_is_basis, || format!("{name}: big basis"))?;
        ensure(big.basis_size == m.len(), || format!("{name}: #N = {}", big.basis_size))?;
        ensure(big.strata_match, || format!("{name}: strata"))?;
        let small = verify_small_generators(Rationals, &m, &ord).map_err(e)?;
        ensure(small.basis_is_basis, || format!("{name}: small basis"))?;
    }
    Ok("small and big NBC monomials are bases; strata sizes match".into())
}

fn c6_counting() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for (name, m) in corpus() {
        let n = m.ground().len();
        let topes = m.topes().len();
        let mut orders = vec![TotalOrder::natural(n)];
        for _ in 0..5 {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            orders.push(TotalOrder::new(p).map_err(e)?);
        }
        for ord in &orders {
            let k = nbc_sets_of(&m, ord).map_err(e)?.len();
            ensure(k == topes, || format!("{name}: #NBC {k} vs {topes} topes under {:?}", ord.elements()))?;
        }
        ensure(check_tope_contraction_count(&m).map_err(e)?.passes(), || format!("{name}: tope count"))?;
        let fs = FlatStructure::new(&m).map_err(e)?;
        ensure(fs.basic_sets_nest() && fs.nonbasic_upward_closed(), || format!("{name}: basic lemma"))?;
    }
    Ok("#NBC = #topes under 6 orders each; tope sum and basic lemma hold".into())
}

fn c7_two_values() -> Check {
    timed(Duration::from_secs(30), "two-values", || {
        let mut cases = 0;
        for (name, m) in corpus() {
            let s = check_two_values_exhaustive(&m).map_err(e)?;
            ensure(s.passes(), || format!("{name}: {:?}", s.failed))?;
            cases += s.cases;
        }
        Ok(format!("{cases} (flat, circuit, J) cases"))
    })
}

fn c8_equivariant() -> Check {
    for n in [3, 4] {
        let budget = Duration::from_secs(if n == 4 { 120 } else { 10 });
        timed(budget, &format!("n={n}"), || {
            let m = braid_com(n).map_err(e)?;
            let g = braid_symmetric_group(n).map_err(e)?;
            let l = big_locus(&m);
            let chi = graded_character(Rationals, &l, &g).map_err(e)?;
            for k in 0..g.order() {
                let perm = locus_action(&l, g.element(k)).map_err(e)?;
                let fixed = perm.iter().enumerate().filter(|&(j, &p)| j == p).count() as i64;
                ensure(chi.total(k) == fixed, || format!("n={n}: element {k}"))?;
            }
            let h = hilbert_series(Rationals, &l).map_err(e)?;
            let id: Vec<u64> = chi.values[0].iter().map(|&v| v as u64).collect();
            ensure(id == h.coeffs, || format!("n={n}: identity {id:?}"))?;
            let r = verify_graded_module_structure(Rationals, &m, &g).map_err(e)?;
            ensure(r.passes(), || format!("n={n}: decomposition {r:?}"))
        })?;
    }
    Ok("S_3 and S_4: fixed points, Hilbert row, induced decomposition exact".into())
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn dist(vals: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for v in vals {
        if out.len() <= v {
            out.resize(v + 1, 0);
        }
        out[v] += 1;
    }
    out
}

fn c9_permutation_loci() -> Check {
    let inv = |w: &Vec<usize>| (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum();
    let des = |w: &Vec<usize>| w.windows(2).filter(|p| p[0] > p[1]).count();
    let lis = |w: &Vec<usize>| {
        let mut tails: Vec<usize> = Vec::new();
        for &x in w {
            match tails.binary_search(&x) {
                Ok(_) => {}
                Err(k) if k == tails.len() => tails.push(x),
                Err(k) => tails[k] = x,
            }
        }
        w.len() - tails.len()
    };
    let mut at3 = Vec::new();
    for n in 1..=5 {
        let h = hilbert_series(Rationals, &kostant_locus(&Rationals, n).map_err(e)?).map_err(e)?;
        let want = dist(perms(n).iter().map(inv));
        ensure(h.coeffs == want, || format!("kostant n={n}: {:?}", h.coeffs))?;
        if n == 3 {
            at3.push(h.coeffs.clone());
        }
        if n > 4 {
            continue;
        }
        let h = hilbert_series(Rationals, &permutohedral_locus(&Rationals, n).map_err(e)?).map_err(e)?;
        let want = dist(perms(n).iter().map(des));
        ensure(h.coeffs == want, || format!("permutohedral n={n}: {:?}", h.coeffs))?;
        if n == 3 {
            at3.push(h.coeffs.clone());
        }
        let h = hilbert_series(Rationals, &permmatrix_locus(n).map_err(e)?).map_err(e)?;
        let want = dist(perms(n).iter().map(lis));
        ensure(h.coeffs == want, || format!("permmatrix n={n}: {:?}", h.coeffs))?;
        if n == 3 {
            at3.push(h.coeffs.clone());
        }
    }
    let expect: Vec<Vec<u64>> = vec![vec![1, 2, 2, 1], vec![1, 4, 1], vec![1, 4, 1]];
    ensure(at3 == expect, || format!("n=3: {at3:?}"))?;
    // the fast path agrees on the characteristic-free family
    let p = hilbert_series(PrimeField::new(1_000_003).map_err(e)?, &permmatrix_locus(4).map_err(e)?).map_err(e)?;
    let q = hilbert_series(Rationals, &permmatrix_locus(4).map_err(e)?).map_err(e)?;
    ensure(p == q, || "F_p permmatrix disagrees".into())?;
    Ok("inv / des / n-lis statistics match; n=3 gives [1,2,2,1] [1,4,1] [1,4,1]".into())
}

fn c10_realization() -> Check {
    for n in 1..=4 {
        let m = enumerate_covectors(&braid_arrangement(n).map_err(e)?).map_err(e)?;
        ensure(m == braid_com(n).map_err(e)?, || format!("braid n={n}"))?;
    }
    let q = |v: &[i64], c: i64| AffineForm::from_ints(v, c);
    let strict = [q(&[1, -1, 0], 0), q(&[1, 0, -1], 0), q(&[0, -1, 1], 0)];
    let x = lp_strict_feasible(&strict, &[]).map_err(e)?.ok_or("witness case infeasible")?;
    ensure(strict.iter().all(|f| f.eval(&x).map(|v| v > Rational::zero()).unwrap_or(false)), || {
        format!("bad witness {x:?}")
    })?;
    let known: Vec<Rational> = [3, 1, 2].iter().map(|&a| Rational::from_integer(a)).collect();
    ensure(strict.iter().all(|f| f.eval(&known).unwrap() > Rational::zero()), || "(3,1,2) rejected".into())?;
    let contra = [q(&[1], 0), q(&[-1], 0)];
    ensure(lp_strict_feasible(&contra, &[]).map_err(e)?.is_none(), || "x>0, x<0 feasible".into())?;
    let cyclic = [q(&[1, -1, 0], 0), q(&[0, 1, -1], 0), q(&[-1, 0, 1], 0)];
    ensure(lp_strict_feasible(&cyclic, &[]).map_err(e)?.is_none(), || "cycle feasible".into())?;
    for a in [
        braid_arrangement(3).map_err(e)?,
        fixture_arrangement("figure1-box").map_err(e)?,
        fixture_arrangement("figure1-rectangle").map_err(e)?,
    ] {
        let s = a.to_json();
        let back = Arrangement::from_json(&s).map_err(e)?;
        ensure(back.to_json() == s, || "arrangement JSON not byte-identical".into())?;
    }
    Ok("braid forms n<=4, LP witness/contradiction cases, JSON round trip".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("figure1 fixture", Duration::from_secs(1), c1_figure1),
        ("big braid Hilbert table via CLI", Duration::from_secs(340), c2_big_braid),
        ("small braid Hilbert series", Duration::from_secs(60), c3_small_braid),
        ("generator membership", Duration::from_secs(300), c4_membership),
        ("NBC bases", Duration::from_secs(300), c5_bases),
        ("counting lemmas", Duration::from_secs(60), c6_counting),
        ("two-values lemma", Duration::from_secs(30), c7_two_values),
        ("equivariant decomposition", Duration::from_secs(130), c8_equivariant),
        ("permutation loci", Duration::from_secs(120), c9_permutation_loci),
        ("realization", Duration::from_secs(60), c10_realization),
    ];
    let mut failed = 0;
    for (k, (name, budget, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = f();
        let el = t.elapsed();
        let r = r.and_then(|msg| {
            ensure(el <= *budget, || format!("took {el:?}, budget {budget:?}"))?;
            Ok(msg)
        });
        match r {
            Ok(msg) => println!(
                "PASS criterion {:>2}: {name} ({msg}; tolerance 0; {:.0} ms of {} s)",
                k + 1,
                el.as_secs_f64() * 1e3,
                budget.as_secs()
            ),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} ({msg})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

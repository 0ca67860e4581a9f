//! The verification suite: every reproduction target with its expected
//! values pinned, runnable as a whole or filtered by item id. Each item
//! prints one pass/fail line; the two known misprints in the source
//! material surface as informational diffs, not failures.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{
    betti_shifts, betti_table_hochster, bs_check, bs_solve, closed_form, first_step_betti,
    herzog_kuhl, purity, BettiTable, ClosedFormKind, TableMethod,
};
use crate::code::LinearCode;
use crate::families::{
    denniston_arc, dual_hyperoval, hermitian, hyperoval, ovoid, reed_muller, simplex,
    subfield_system,
};
use crate::matroid::{minimal_nullity_sets_subcode, MatroidView};
use crate::{Budgets, Error};

#[derive(Debug, Clone)]
pub struct ItemResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
    pub infos: Vec<String>,
    pub elapsed: Duration,
}

impl ItemResult {
    pub fn status_line(&self) -> String {
        format!(
            "{} {:14} {} ({:.2?})",
            if self.passed { "ok  " } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed
        )
    }
}

/// Collects expectation failures and informational notes for one item.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
    infos: Vec<String>,
}

impl Check {
    fn eq<T: PartialEq + Debug>(&mut self, what: &str, computed: T, expected: T) {
        if computed != expected {
            self.failures
                .push(format!("{}: computed {:?}, expected {:?}", what, computed, expected));
        }
    }

    fn ok(&mut self, what: &str, cond: bool) {
        if !cond {
            self.failures.push(format!("{}: failed", what));
        }
    }

    fn info(&mut self, msg: String) {
        self.infos.push(msg);
    }

    fn run(mut self, err: Option<Error>) -> (bool, Vec<String>, Vec<String>) {
        if let Some(e) = err {
            self.failures.push(format!("error: {}", e));
        }
        (self.failures.is_empty(), self.failures, self.infos)
    }
}

fn item(
    id: &'static str,
    name: &'static str,
    filter: Option<&str>,
    out: &mut Vec<ItemResult>,
    body: impl FnOnce(&mut Check) -> crate::Result<()>,
) {
    if let Some(f) = filter {
        if !id.contains(f) {
            return;
        }
    }
    let start = Instant::now();
    let mut check = Check::default();
    let err = body(&mut check).err();
    let (passed, failures, infos) = check.run(err);
    out.push(ItemResult { id, name, passed, failures, infos, elapsed: start.elapsed() });
}

fn entries(pairs: &[(usize, usize, u64)]) -> BTreeMap<(usize, usize), BigInt> {
    let mut m = BTreeMap::new();
    m.insert((0, 0), BigInt::from(1));
    for &(i, j, b) in pairs {
        m.insert((i, j), BigInt::from(b));
    }
    m
}

fn big(values: &[(usize, u64)]) -> BTreeMap<usize, BigInt> {
    values.iter().map(|&(k, v)| (k, BigInt::from(v))).collect()
}

fn checked_hochster(
    code: &LinearCode,
    budgets: &Budgets,
    check: &mut Check,
) -> crate::Result<BettiTable> {
    let table = betti_table_hochster(code, budgets)?;
    let (ok, residuals) = bs_check(&table);
    check.ok(
        &format!("power-sum residuals vanish for the [{},{}] table", table.n, table.k),
        ok,
    );
    if !ok {
        check.failures.push(format!("residuals: {:?}", residuals));
    }
    Ok(table)
}

/// Run the verification items whose id contains `filter` (all when None).
pub fn run_all(filter: Option<&str>, budgets: &Budgets) -> Vec<ItemResult> {
    let mut out = Vec::new();
    let b = budgets;

    item("mds-hyperoval", "[6,3]_4 hyperoval: linear MDS resolution", filter, &mut out, |c| {
        let code = hyperoval(4)?.code()?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("Betti table", table.entries.clone(), entries(&[(1, 4, 15), (2, 5, 24), (3, 6, 10)]));
        c.ok("pure", table.is_pure());
        c.ok("linear", table.is_linear());
        let cf = closed_form(ClosedFormKind::Mds { n: 6, k: 3 }, 4)?;
        c.ok("matches the MDS closed form", table.same_values(&cf));
        Ok(())
    });

    item("simplex", "[7,3]_2 simplex: constant-weight resolution", filter, &mut out, |c| {
        let code = simplex(2, 3)?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("pure type", table.pure_type(), Some(vec![0, 4, 6, 7]));
        c.eq("Betti table", table.entries.clone(), entries(&[(1, 4, 7), (2, 6, 14), (3, 7, 8)]));
        let cf = closed_form(ClosedFormKind::ConstantWeight { q: 2, k: 3, d: 4 }, 2)?;
        c.ok("matches the constant-weight closed form", table.same_values(&cf));
        Ok(())
    });

    item("rm13", "RM_2(1,3) = [8,4]: pure resolution", filter, &mut out, |c| {
        let code = reed_muller(2, 1, 3)?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("pure type", table.pure_type(), Some(vec![0, 4, 6, 7, 8]));
        c.eq(
            "Betti table",
            table.entries.clone(),
            entries(&[(1, 4, 14), (2, 6, 56), (3, 7, 64), (4, 8, 21)]),
        );
        let cf = closed_form(ClosedFormKind::Rm1 { q: 2, m: 3 }, 2)?;
        c.ok("matches the first-order closed form", table.same_values(&cf));
        Ok(())
    });

    item("rm24", "RM_2(2,4) = [16,11]: not pure", filter, &mut out, |c| {
        let code = reed_muller(2, 2, 4)?;
        let fs = first_step_betti(&code, b)?;
        let keys: Vec<usize> = fs.keys().copied().collect();
        c.eq("first-step shifts", keys, vec![4, 6]);
        Ok(())
    });

    item("rm42", "RM_4(2,2) = [16,6]_4: not pure", filter, &mut out, |c| {
        let code = reed_muller(4, 2, 2)?;
        let fs = first_step_betti(&code, b)?;
        c.ok("at least two first-step shifts", fs.len() >= 2);
        c.ok("shift 8 present", fs.contains_key(&8));
        c.ok("shift 9 present", fs.contains_key(&9));
        Ok(())
    });

    item("tf1d-q2", "dual hyperoval q=2 ([6,3]_2)", filter, &mut out, |c| {
        let code = dual_hyperoval(2)?.code()?;
        let table = checked_hochster(&code, b, c)?;
        c.eq(
            "Betti table",
            table.entries.clone(),
            entries(&[(1, 3, 4), (1, 4, 3), (2, 5, 12), (3, 6, 6)]),
        );
        let fs = first_step_betti(&code, b)?;
        let shifts = betti_shifts(&code, b)?;
        let knowns: BTreeMap<(usize, usize), BigInt> =
            fs.iter().map(|(&w, v)| ((1, w), v.clone())).collect();
        let solved = bs_solve(6, 3, 2, &shifts, &knowns)?;
        c.eq("solved beta_{2,5}", solved.beta(2, 5), BigInt::from(12));
        c.eq("solved beta_{3,6}", solved.beta(3, 6), BigInt::from(6));
        Ok(())
    });

    item("tf1d-q4", "dual hyperoval q=4 ([15,3]_4)", filter, &mut out, |c| {
        let system = dual_hyperoval(4)?;
        let code = system.code()?;
        let fs = first_step_betti(&code, b)?;
        c.eq("first-step Betti numbers", fs.clone(), big(&[(10, 6), (12, 15)]));
        let shifts = betti_shifts(&code, b)?;
        let knowns: BTreeMap<(usize, usize), BigInt> =
            fs.iter().map(|(&w, v)| ((1, w), v.clone())).collect();
        let solved = bs_solve(15, 3, 4, &shifts, &knowns)?;
        c.eq("solved beta_{2,14}", solved.beta(2, 14), BigInt::from(60));
        c.eq("solved beta_{3,15}", solved.beta(3, 15), BigInt::from(40));
        let wd = code.weight_distribution(b)?;
        c.eq(
            "weight distribution",
            wd.counts.clone(),
            BTreeMap::from([(0, 1), (10, 18), (12, 45)]),
        );
        let nu = system.hyperplane_spectrum(b)?;
        for (&size, &count) in &nu {
            let w = system.n() - size;
            if w == 0 {
                continue;
            }
            c.eq(
                &format!("A_{} = (q-1) nu", w),
                wd.counts.get(&w).copied().unwrap_or(0),
                3 * count as u64,
            );
        }
        let table = checked_hochster(&code, b, c)?;
        c.ok("full 2^15 scan agrees with the solved table", table.same_values(&solved));
        Ok(())
    });

    item("tf3-ovoid", "ovoid q=3 ([10,4]_3)", filter, &mut out, |c| {
        let code = ovoid(3)?.code()?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("pure type", table.pure_type(), Some(vec![0, 6, 8, 9, 10]));
        c.eq(
            "Betti table",
            table.entries.clone(),
            entries(&[(1, 6, 30), (2, 8, 135), (3, 9, 160), (4, 10, 54)]),
        );
        Ok(())
    });

    item("rt3-curve", "Hermitian curve q=2 ([9,3]_4)", filter, &mut out, |c| {
        let code = hermitian(2, 3, b)?.code()?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("pure type", table.pure_type(), Some(vec![0, 6, 8, 9]));
        c.eq(
            "Betti table",
            table.entries.clone(),
            entries(&[(1, 6, 12), (2, 8, 27), (3, 9, 16)]),
        );
        // the printed closed form q(q^2-1)(q^2-q+1) gives 18 at q = 2, but
        // the l = 0 power-sum equation with beta_1 = 12, beta_2 = 27 forces
        // 16 = q^4(q-1)
        let printed = 2u64 * 3 * 3;
        c.info(format!(
            "printed step-3 value {} differs from computed {} (residual {})",
            printed,
            table.beta(3, 9),
            BigInt::from(1 - 12 + 27) - BigInt::from(printed),
        ));
        Ok(())
    });

    item("rt3-surface", "Hermitian surface q=2 ([45,4]_4)", filter, &mut out, |c| {
        let code = hermitian(2, 4, b)?.code()?;
        let shifts = betti_shifts(&code, b)?;
        let expected_shifts = BTreeMap::from([
            (1, BTreeSet::from([32, 36])),
            (2, BTreeSet::from([40, 42])),
            (3, BTreeSet::from([44])),
            (4, BTreeSet::from([45])),
        ]);
        c.eq("shift sets", shifts.clone(), expected_shifts);
        let fs = first_step_betti(&code, b)?;
        c.eq("first-step Betti numbers", fs.clone(), big(&[(32, 45), (36, 40)]));
        let knowns: BTreeMap<(usize, usize), BigInt> =
            fs.iter().map(|(&w, v)| ((1, w), v.clone())).collect();
        let solved = bs_solve(45, 4, 4, &shifts, &knowns)?;
        c.eq("solved beta_{2,40}", solved.beta(2, 40), BigInt::from(108));
        c.eq("solved beta_{2,42}", solved.beta(2, 42), BigInt::from(960));
        c.eq("solved beta_{3,44}", solved.beta(3, 44), BigInt::from(2520));
        c.eq("solved beta_{4,45}", solved.beta(4, 45), BigInt::from(1536));
        c.ok("3-MDS", code.is_h_mds(3, b)?);
        Ok(())
    });

    item("tf2-denniston", "Denniston arc q=8, h=4 ([28,3]_8)", filter, &mut out, |c| {
        let system = denniston_arc(8, 4)?;
        let spectrum = system.hyperplane_spectrum(b)?;
        c.eq(
            "line spectrum",
            spectrum.keys().copied().collect::<Vec<_>>(),
            vec![0, 4],
        );
        let code = system.code()?;
        let wd = code.weight_distribution(b)?;
        c.eq("nonzero weights", wd.nonzero_weights(), vec![24, 28]);
        let report = purity(&code, b)?;
        c.ok("pure", report.pure);
        c.eq("pure type", report.pure_type.clone(), Some(vec![0, 24, 27, 28]));
        let betas = herzog_kuhl(&[0, 24, 27, 28])?;
        c.eq(
            "Herzog-Kuhl values",
            betas.clone(),
            vec![BigInt::from(63), BigInt::from(224), BigInt::from(162)],
        );
        let mut table = BettiTable::new(28, 3, 8, TableMethod::ClosedForm);
        for (i, beta) in betas.into_iter().enumerate() {
            table.insert(i + 1, [24, 27, 28][i], beta);
        }
        c.ok("power-sum residuals vanish", bs_check(&table).0);
        // the printed first-step formula (q+1)^2 - q/h gives 79; the
        // computed value is (q+1)n/h = 63
        c.info(format!(
            "printed first-step value {} differs from computed {}",
            (8 + 1) * (8 + 1) - 8 / 4,
            table.beta(1, 24),
        ));
        Ok(())
    });

    item("rt1-subfield", "subfield system q=2, k=3 ([7,3]_4)", filter, &mut out, |c| {
        let code = subfield_system(2, 3)?.code()?;
        let table = checked_hochster(&code, b, c)?;
        c.eq("pure type", table.pure_type(), Some(vec![0, 4, 6, 7]));
        c.eq("Betti table", table.entries.clone(), entries(&[(1, 4, 7), (2, 6, 14), (3, 7, 8)]));
        Ok(())
    });

    item("properties", "property suite on a random corpus", filter, &mut out, |c| {
        property_suite(c, b)
    });

    // test-mode fault injection: deliberately corrupt a field-table
    // expectation so the failure path of the runner is exercisable
    if std::env::var_os("RESOLV_FAULT_INJECT").is_some() {
        item("fault-inject", "deliberately corrupted field table", filter, &mut out, |c| {
            let f = crate::families::field_of_order(4)?;
            let g = f.elem(2);
            let g2 = f.mul(g, g);
            c.eq("corrupted GF(4) product g * g^2", f.mul(g, g2), f.elem(0));
            Ok(())
        });
    }

    out
}

/// 25 seeded random codes with n <= 10, k <= 4, q in {2, 3, 4}: the
/// Betti/GHW identity, power-sum residuals, the homology oracle against
/// the Euler characteristic, stratum-method agreement, and the forced
/// single shifts n-1, n at the last two steps.
fn property_suite(c: &mut Check, b: &Budgets) -> crate::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut corpus = Vec::new();
    while corpus.len() < 25 {
        let q = [2u64, 3, 4][corpus.len() % 3];
        let field = crate::families::field_of_order(q)?;
        let n = rng.gen_range(4..=10usize);
        let k_target = rng.gen_range(1..=4usize);
        let rows: Vec<Vec<u64>> = (0..k_target)
            .map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect())
            .collect();
        match LinearCode::from_rows(field, &rows) {
            Ok(code) => corpus.push(code),
            Err(Error::ZeroCode) => continue,
            Err(e) => return Err(e),
        }
    }
    for (idx, code) in corpus.iter().enumerate() {
        let label = format!("code #{} [{},{}]_{}", idx, code.n(), code.k(), code.q());
        // (a) + (b): least shifts are the weight hierarchy; residuals vanish
        let table = betti_table_hochster(code, b)?;
        c.eq(
            &format!("{}: Betti least shifts equal the weight hierarchy", label),
            table.ghw_vector(),
            code.ghw_vector(b)?,
        );
        c.ok(&format!("{}: power-sum residuals vanish", label), bs_check(&table).0);
        let view = MatroidView::from_code(code);
        for i in 1..=code.k() {
            // (d) scan and subcode stratum methods agree
            let scan = view.minimal_nullity_sets_scan(i, b)?;
            let sub = minimal_nullity_sets_subcode(code, i, b)?;
            c.eq(
                &format!("{}: stratum methods agree at i = {}", label, i),
                scan.minimal_sets.clone(),
                sub.minimal_sets.clone(),
            );
            // (c) homology oracle vs Euler characteristic on small sets
            for &sigma in scan.minimal_sets.iter().filter(|s| s.count_ones() <= 8) {
                let (rank, _) = view.rank_nullity(sigma);
                let top = rank as i64 - 1;
                let chi = view.reduced_euler_char(sigma, b)?;
                let h = view.homology_dims(sigma, b)?;
                for (&deg, &dim) in &h {
                    let expected = if deg == top { chi.unsigned_abs() as usize } else { 0 };
                    c.eq(
                        &format!("{}: homology at sigma {:#x} degree {}", label, sigma, deg),
                        dim,
                        expected,
                    );
                }
            }
        }
        // (e) forced shifts at the last two steps. Step k-1 of a
        // nondegenerate code carries the shifts n - m over the distinct
        // multiplicities m of its projective column classes; with all
        // multiplicities 1 (a simple projective system, the setting of
        // every named family here) that is the single shift n-1.
        if code.is_nondegenerate() {
            c.eq(
                &format!("{}: step k carries the single shift n", label),
                table.step_shifts(code.k()),
                vec![code.n()],
            );
            if code.k() >= 2 {
                let mults = code.projective_column_multiplicities();
                let expected: BTreeSet<usize> =
                    mults.iter().map(|&m| code.n() - m).collect();
                c.eq(
                    &format!("{}: step k-1 shifts are n minus the point multiplicities", label),
                    table.step_shifts(code.k() - 1).into_iter().collect::<BTreeSet<_>>(),
                    expected,
                );
                if mults.iter().all(|&m| m == 1) {
                    c.eq(
                        &format!("{}: step k-1 carries the single shift n-1", label),
                        table.step_shifts(code.k() - 1),
                        vec![code.n() - 1],
                    );
                } else {
                    c.info(format!(
                        "{}: repeated projective columns (multiplicities {:?}); the \
                         single-shift form of the last-steps purity statement needs a \
                         simple system and is checked in its multiset form instead",
                        label, mults
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Print one line per item plus failure/info details; true iff all passed.
pub fn print_results(results: &[ItemResult]) -> bool {
    let mut all = true;
    for r in results {
        println!("{}", r.status_line());
        for f in &r.failures {
            println!("      {}", f);
        }
        for i in &r.infos {
            println!("      note: {}", i);
        }
        all &= r.passed;
    }
    all
}

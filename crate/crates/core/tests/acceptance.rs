//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! wall time against the allowed budget; the test fails if any line fails.

use std::time::{Duration, Instant};

use riffle_algebra::amazing::{
    amazing_matrix, descent_polynomial, foulkes_determinant, verify_multiplicativity, verify_spectrum, verify_stationary,
};
use riffle_algebra::combinatorics::{binomial, superfactorial};
use riffle_algebra::eulerian::{foulkes_matrix, worpitzky_matrix, BasisMatrix};
use riffle_algebra::matrix::Matrix;
use riffle_algebra::oracle::{
    group_product, idempotent_group, oracle_descent_polynomial, oracle_transition_matrix, simulate_carries,
    simulate_shuffle_chain, EmpiricalMatrix, GroupAlgebraElement, SimulationConfig,
};
use riffle_algebra::{BigInt, BigRational};

type Outcome = Result<(), String>;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn run(&mut self, id: &str, name: &str, budget: Duration, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= budget {
                Ok(())
            } else {
                Err(format!("took {elapsed:.2?}, budget {budget:?}"))
            }
        });
        match &outcome {
            Ok(()) => println!("[PASS] {id} {name} ({elapsed:.2?} / {budget:?})"),
            Err(why) => {
                println!("[FAIL] {id} {name} ({elapsed:.2?} / {budget:?}): {why}");
                self.failures.push(format!("{id}: {why}"));
            }
        }
    }
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn scaled(rows: [[i64; 3]; 3], denom: i64) -> Matrix<BigRational> {
    Matrix::from_fn(3, 3, |i, j| BigRational::new(rows[i][j].into(), denom.into()))
}

fn ac1_amazing_matrix() -> Outcome {
    let three = amazing_matrix(3, 2).map_err(|e| e.to_string())?.normalized();
    ensure(three == scaled([[4, 4, 0], [1, 6, 1], [0, 4, 4]], 8), || format!("P(3,2) = {:?}", three.to_rows()))?;
    let two = amazing_matrix(2, 2).map_err(|e| e.to_string())?.normalized();
    let expected = Matrix::from_rows(vec![
        vec![BigRational::new(3.into(), 4.into()), BigRational::new(1.into(), 4.into())],
        vec![BigRational::new(1.into(), 4.into()), BigRational::new(3.into(), 4.into())],
    ])
    .unwrap();
    ensure(two == expected, || format!("P(2,2) = {:?}", two.to_rows()))?;
    for n in 1..=6 {
        for b in [2, 3] {
            let oracle = oracle_transition_matrix(n, b).map_err(|e| e.to_string())?;
            let exact = amazing_matrix(n, b).map_err(|e| e.to_string())?.normalized();
            ensure(oracle == exact, || format!("oracle differs at n={n} b={b}"))?;
        }
    }
    Ok(())
}

fn ac2_row_sums() -> Outcome {
    for n in 1..=12 {
        for b in [2u64, 3, 10] {
            let m = amazing_matrix(n, b).map_err(|e| e.to_string())?;
            let target = BigInt::from(b).pow(n as u32);
            ensure(m.row_sums().iter().all(|s| s == &target), || format!("row sums at n={n} b={b}: {:?}", m.row_sums()))?;
        }
    }
    Ok(())
}

fn ac3_spectrum() -> Outcome {
    for n in 1..=10 {
        for b in [2, 3, 5] {
            let report = verify_spectrum(n, b).map_err(|e| e.to_string())?;
            ensure(report.checks.len() == 2 * n, || format!("expected {} checks at n={n}", 2 * n))?;
            report.into_result().map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn ac4_determinant_and_inverse() -> Outcome {
    for n in 1..=8 {
        let det = foulkes_determinant(n).map_err(|e| e.to_string())?;
        let expected = BigInt::from(superfactorial(n as u64));
        ensure(det == expected, || format!("det F at n={n} is {det}, expected {expected}"))?;
    }
    for n in 1..=10 {
        let fw = foulkes_matrix(n).then(&worpitzky_matrix(n)).map_err(|e| e.to_string())?;
        ensure(BasisMatrix::is_identity(&fw), || format!("F W is not the identity at n={n}"))?;
    }
    Ok(())
}

fn ac5_multiplicativity() -> Outcome {
    for n in 1..=8 {
        for b1 in 1..=4 {
            for b2 in 1..=4 {
                verify_multiplicativity(n, b1, b2).map_err(|e| e.to_string())?.into_result().map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(())
}

fn ac6_idempotents() -> Outcome {
    for n in 1..=6 {
        let es: Vec<GroupAlgebraElement> = (1..=n).map(|k| idempotent_group(n, k)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for (k, ek) in es.iter().enumerate() {
            for (l, el) in es.iter().enumerate() {
                let prod = group_product(ek, el).map_err(|e| e.to_string())?;
                if k == l {
                    ensure(&prod == ek, || format!("E_{} not idempotent at n={n}", k + 1))?;
                } else {
                    ensure(prod.is_zero(), || format!("E_{} E_{} != 0 at n={n}", k + 1, l + 1))?;
                }
            }
        }
        let total = es.iter().try_fold(GroupAlgebraElement::zero(n), |acc, e| acc.checked_add(e)).map_err(|e| e.to_string())?;
        ensure(total == GroupAlgebraElement::identity(n), || format!("idempotents do not sum to the identity at n={n}"))?;
    }
    Ok(())
}

fn ac7_descent_polynomials() -> Outcome {
    let pairs: Vec<(u64, u32)> = vec![(2, 1), (2, 2), (2, 3), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1)];
    for n in 1..=6 {
        for &(b, r) in &pairs {
            let closed = descent_polynomial(n, b, r).map_err(|e| e.to_string())?;
            let brute = oracle_descent_polynomial(n, b.pow(r)).map_err(|e| e.to_string())?;
            ensure(closed == brute, || format!("n={n} b={b} r={r}: {:?} vs {:?}", closed.coeffs, brute.coeffs))?;
        }
    }
    for n in 1..=8 {
        for &(b, r) in &pairs {
            let p = descent_polynomial(n, b, r).map_err(|e| e.to_string())?;
            ensure(p.mass() == p.expected_mass(), || format!("mass at n={n} b={b} r={r}"))?;
        }
    }
    Ok(())
}

fn ac8_stationary() -> Outcome {
    for n in 1..=10 {
        for b in [2, 3] {
            verify_stationary(n, b).map_err(|e| e.to_string())?.into_result().map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}

fn ac9_worpitzky() -> Outcome {
    for n in 1..=8 {
        let f = foulkes_matrix(n).entries;
        for x in 1..=10i64 {
            for k in 1..=n {
                let lhs: BigRational = (1..=n)
                    .map(|i| f.get(k - 1, i - 1) * BigRational::from_integer(binomial(x + (n - i) as i64, n as u64).into()))
                    .sum();
                let rhs = BigRational::from_integer(BigInt::from(x).pow(k as u32));
                ensure(lhs == rhs, || format!("n={n} x={x} k={k}: {lhs} != {rhs}"))?;
            }
        }
    }
    Ok(())
}

const TV_TOLERANCE: f64 = 0.005;
const SIM_TRIALS: u64 = 1_000_000;
const CARRY_DIGITS: u32 = 8;

fn check_simulation(label: &str, n: usize, b: u64, sample: impl Fn() -> EmpiricalMatrix) -> Outcome {
    let first = sample();
    let exact = amazing_matrix(n, b).map_err(|e| e.to_string())?.normalized();
    let tv = first.tv_distances(&exact).map_err(|e| e.to_string())?;
    println!("       {label}: per-row TV {tv:?}");
    ensure(tv.iter().all(|&d| d <= TV_TOLERANCE), || format!("{label}: TV {tv:?} exceeds {TV_TOLERANCE}"))?;
    ensure(sample() == first, || format!("{label}: rerun with the same seed differs"))
}

fn ac10_shuffle_simulation() -> Outcome {
    let cfg = SimulationConfig::new(SIM_TRIALS, 20_240_601);
    check_simulation("GSR shuffle n=3 b=2", 3, 2, || simulate_shuffle_chain(3, 2, &cfg).unwrap())
}

fn ac10_carries_simulation(b: u64) -> Outcome {
    let cfg = SimulationConfig::new(SIM_TRIALS, 7_654_321);
    check_simulation(&format!("carries 2 summands b={b}"), 2, b, || simulate_carries(2, b, CARRY_DIGITS, &cfg).unwrap())
}

#[test]
fn acceptance_criteria() {
    let mut gate = Gate { failures: Vec::new() };
    let secs = Duration::from_secs;
    gate.run("AC1", "amazing matrix equals hand values and the enumeration oracle (n<=6, b in {2,3})", secs(60), ac1_amazing_matrix);
    gate.run("AC2", "row sums equal b^n (n<=12, b in {2,3,10})", secs(5), ac2_row_sums);
    gate.run("AC3", "Worpitzky columns / Foulkes rows are eigenvectors (n<=10, b in {2,3,5})", secs(10), ac3_spectrum);
    gate.run("AC4", "det F = superfactorial (n<=8); F W = I (n<=10)", secs(5), ac4_determinant_and_inverse);
    gate.run("AC5", "P(b1) P(b2) = P(b1 b2) (n<=8, b1,b2 in 1..=4)", secs(10), ac5_multiplicativity);
    gate.run("AC6", "group-algebra idempotents: idempotent, orthogonal, sum to identity (n<=6)", secs(30), ac6_idempotents);
    gate.run("AC7", "descent polynomial = enumeration (n<=6, b^r<=8); mass (b^r)^n (n<=8)", secs(30), ac7_descent_polynomials);
    gate.run("AC8", "Eulerian/n! is stationary: pi P = b^n pi (n<=10, b in {2,3})", secs(5), ac8_stationary);
    gate.run("AC9", "sum_i F(k,i) C(x+n-i,n) = x^k (x<=10, n<=8)", secs(5), ac9_worpitzky);
    gate.run("AC10a", "GSR shuffle chain simulation, 1e6 trials, TV<=0.005, reproducible", secs(60), ac10_shuffle_simulation);
    gate.run("AC10b", "carries chain simulation b=2, 1e6 trials, TV<=0.005, reproducible", secs(60), || ac10_carries_simulation(2));
    gate.run("AC10c", "carries chain simulation b=10, 1e6 trials, TV<=0.005, reproducible", secs(60), || ac10_carries_simulation(10));
    assert!(gate.failures.is_empty(), "failed criteria: {:#?}", gate.failures);
}

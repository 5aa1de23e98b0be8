//! Subcommand implementations. Every command validates its inputs before
//! touching the core operations and reports through the shared exit-code
//! contract.

use std::fs;
use std::path::Path;

use serde_json::json;

use quasiper_core::analysis::{
    conjecture_check, conjecture_scan, sharpness_construction, sharpness_experimental,
    zaslavsky_bound, PeriodChain, ScanFilter, ScanSample, Verdict,
};
use quasiper_core::ehrhart::{HPolytope, HPolytopeJson, SimplexSpec, DEFAULT_POINT_BUDGET};
use quasiper_core::poly::Polynomial;
use quasiper_core::quasipoly::{QuasiPolynomial, QuasiPolynomialJson};
use quasiper_core::rational::{parse_rational, rat_int, Rational};
use quasiper_core::{Error, RationalGF, Result};

use crate::render;
use crate::Command;

pub fn run(command: Command) -> Result<i32> {
    match command {
        Command::Ehrhart { p, kmax, json } => cmd_ehrhart(&p, kmax, json),
        Command::Count {
            p,
            polytope,
            k,
            json,
        } => cmd_count(p.as_deref(), polytope.as_deref(), k, json),
        Command::Convolve {
            a,
            b,
            qp_a,
            qp_b,
            json,
        } => cmd_convolve(a.as_deref(), b.as_deref(), qp_a.as_deref(), qp_b.as_deref(), json),
        Command::Zaslavsky {
            alpha,
            beta,
            construct,
            experimental,
            json,
        } => cmd_zaslavsky(&alpha, &beta, construct, experimental, json),
        Command::Conjecture {
            a,
            scan,
            max_n,
            max_a,
            seed,
            limit,
            chains_only,
            json,
        } => cmd_conjecture(a.as_deref(), scan, max_n, max_a, seed, limit, chains_only, json),
        Command::Gf {
            num,
            den_exponents,
            den_poly,
            from_qp,
            json,
        } => cmd_gf(
            num.as_deref(),
            den_exponents.as_deref(),
            den_poly.as_deref(),
            from_qp.as_deref(),
            json,
        ),
    }
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|e| Error::InvalidArgument(format!("bad integer `{part}`: {e}")))
        })
        .collect()
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(parse_rational).collect()
}

fn point_budget() -> Result<u64> {
    match std::env::var("QUASIPER_BUDGET") {
        Err(_) => Ok(DEFAULT_POINT_BUDGET),
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::InvalidArgument(format!("bad QUASIPER_BUDGET `{raw}`: {e}"))),
    }
}

fn read_json_file<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("bad JSON in {}: {e}", path.display())))
}

fn read_quasipolynomial(path: &Path) -> Result<QuasiPolynomial> {
    let dto: QuasiPolynomialJson = read_json_file(path)?;
    QuasiPolynomial::try_from(&dto)
}

fn cmd_ehrhart(p: &str, kmax: Option<u64>, json: bool) -> Result<i32> {
    let spec = SimplexSpec::new(parse_u64_list(p)?)?;
    let qp = spec.ehrhart_qp()?;
    let profile = qp.minimum_period_profile();
    let j_indices: Vec<u64> = (0..=spec.dim())
        .map(|j| spec.j_index(j))
        .collect::<Result<_>>()?;
    let mut values = Vec::new();
    if let Some(kmax) = kmax {
        let counts = spec.denumerant_upto(kmax);
        for (k, &count) in counts.iter().enumerate() {
            let value = qp.evaluate(k as i64);
            if value != rat_int(count as i64) {
                return Err(Error::Internal(format!(
                    "value table disagrees with the counting oracle at k={k}"
                )));
            }
            values.push((k as u64, value, count));
        }
    }
    if json {
        let out = json!({
            "p": spec.parts(),
            "quasipolynomial": render::qp_json(&qp),
            "profile": profile.coefficient_periods,
            "minimum_period": profile.minimum_period,
            "j_indices": j_indices,
            "values": values
                .iter()
                .map(|(k, v, c)| json!({"k": k, "value": v.to_string(), "denumerant": c}))
                .collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("simplex p = {:?}", spec.parts());
        print!("{}", render::qp_table(&qp));
        println!("{}", render::profile_line("minimum periods", &profile));
        println!("j-indices: {j_indices:?}");
        if !values.is_empty() {
            println!("   k | L(k) | denumerant");
            for (k, v, c) in &values {
                println!("{k:>4} | {v} | {c}");
            }
        }
    }
    Ok(0)
}

fn cmd_count(p: Option<&str>, polytope: Option<&Path>, k: u64, json: bool) -> Result<i32> {
    let count = match (p, polytope) {
        (Some(p), None) => SimplexSpec::new(parse_u64_list(p)?)?.denumerant(k),
        (None, Some(path)) => {
            let dto: HPolytopeJson = read_json_file(path)?;
            let poly = HPolytope::try_from(&dto)?;
            poly.count_lattice_points_with_budget(k, point_budget()?)?
        }
        _ => {
            return Err(Error::InvalidArgument(
                "pass exactly one of --p or --polytope".into(),
            ))
        }
    };
    if json {
        println!("{}", json!({"k": k, "count": count}));
    } else {
        println!("{count}");
    }
    Ok(0)
}

fn convolve_factor(tuple: Option<&str>, file: Option<&Path>, side: &str) -> Result<QuasiPolynomial> {
    match (tuple, file) {
        (Some(t), None) => SimplexSpec::new(parse_u64_list(t)?)?.ehrhart_qp(),
        (None, Some(path)) => read_quasipolynomial(path),
        _ => Err(Error::InvalidArgument(format!(
            "pass exactly one of --{side} or --qp-{side}"
        ))),
    }
}

fn cmd_convolve(
    a: Option<&str>,
    b: Option<&str>,
    qp_a: Option<&Path>,
    qp_b: Option<&Path>,
    json: bool,
) -> Result<i32> {
    let qa = convolve_factor(a, qp_a, "a")?;
    let qb = convolve_factor(b, qp_b, "b")?;
    let c = qa.convolve(&qb)?;
    let pa = qa.minimum_period_profile();
    let pb = qb.minimum_period_profile();
    let pc = c.minimum_period_profile();
    if json {
        let out = json!({
            "a_profile": pa.coefficient_periods,
            "b_profile": pb.coefficient_periods,
            "convolution": render::qp_json(&c),
            "profile": pc.coefficient_periods,
            "minimum_period": pc.minimum_period,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("{}", render::profile_line("periods of A", &pa));
        println!("{}", render::profile_line("periods of B", &pb));
        print!("{}", render::qp_table(&c));
        println!("{}", render::profile_line("periods of C", &pc));
    }
    Ok(0)
}

fn cmd_zaslavsky(
    alpha: &str,
    beta: &str,
    construct: bool,
    experimental: bool,
    json: bool,
) -> Result<i32> {
    let alpha = parse_u64_list(alpha)?;
    let beta = parse_u64_list(beta)?;
    if alpha.is_empty() || beta.is_empty() || alpha.contains(&0) || beta.contains(&0) {
        return Err(Error::InvalidArgument(
            "period lists must be nonempty and positive".into(),
        ));
    }
    let bound = zaslavsky_bound(&alpha, &beta);
    if !construct {
        if json {
            println!(
                "{}",
                json!({"alpha": alpha, "beta": beta, "bound": bound})
            );
        } else {
            println!("alpha = {alpha:?}, beta = {beta:?}");
            println!("zaslavsky bounds: {bound:?}");
        }
        return Ok(0);
    }
    let report = if experimental {
        sharpness_experimental(&alpha, &beta)?
    } else {
        sharpness_construction(&PeriodChain::new(alpha.clone(), beta.clone()))?.report
    };
    let equality = report.gamma == report.bound;
    if json {
        println!(
            "{}",
            json!({
                "alpha": report.alpha,
                "beta": report.beta,
                "bound": report.bound,
                "gamma": report.gamma,
                "divisibility_holds": report.holds,
                "equality": equality,
            })
        );
    } else {
        println!("alpha = {:?}, beta = {:?}", report.alpha, report.beta);
        println!("bound: {:?}", report.bound);
        println!("gamma: {:?}", report.gamma);
        println!("equality: {}", if equality { "yes" } else { "no" });
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_conjecture(
    a: Option<&str>,
    scan: bool,
    max_n: usize,
    max_a: u64,
    seed: Option<u64>,
    limit: usize,
    chains_only: bool,
    json: bool,
) -> Result<i32> {
    if let Some(a) = a {
        let instance = conjecture_check(&parse_u64_list(a)?)?;
        if json {
            println!("{}", serde_json::to_string(&instance).expect("serializable"));
        } else {
            println!(
                "a = {:?}: predicted {:?}, actual {:?}, {}",
                instance.a,
                instance.predicted,
                instance.actual,
                match instance.verdict {
                    Verdict::Match => "match",
                    Verdict::Mismatch => "mismatch",
                }
            );
        }
        return Ok(0);
    }
    if !scan {
        return Err(Error::InvalidArgument(
            "pass --a or --scan".into(),
        ));
    }
    let filter = if chains_only {
        ScanFilter::ChainsOnly
    } else {
        ScanFilter::All
    };
    let sample = seed.map(|seed| ScanSample { seed, limit });
    let instances = conjecture_scan(max_n, max_a, filter, sample)?;
    let mut mismatches = 0usize;
    // one JSON line per instance so long scans stay inspectable mid-run
    for instance in &instances {
        if instance.verdict == Verdict::Mismatch {
            mismatches += 1;
        }
        println!("{}", serde_json::to_string(instance).expect("serializable"));
    }
    if json {
        println!(
            "{}",
            json!({"checked": instances.len(), "mismatches": mismatches})
        );
    } else {
        println!("checked {}, mismatches {}", instances.len(), mismatches);
    }
    if chains_only && mismatches > 0 {
        return Err(Error::Internal(format!(
            "{mismatches} mismatch(es) on distinct chains, which are theorem-backed"
        )));
    }
    Ok(0)
}

fn cmd_gf(
    num: Option<&str>,
    den_exponents: Option<&str>,
    den_poly: Option<&str>,
    from_qp: Option<&Path>,
    json: bool,
) -> Result<i32> {
    let gf = match (num, den_exponents, den_poly, from_qp) {
        (None, None, None, Some(path)) => {
            RationalGF::from_quasipolynomial(&read_quasipolynomial(path)?)
        }
        (Some(num), Some(exponents), None, None) => {
            let num = Polynomial::new(parse_rational_list(num)?);
            RationalGF::from_denominator_exponents(num, &parse_u64_list(exponents)?)?
        }
        (Some(num), None, Some(den), None) => {
            let num = Polynomial::new(parse_rational_list(num)?);
            RationalGF::from_num_den(num, Polynomial::new(parse_rational_list(den)?))?
        }
        _ => {
            return Err(Error::InvalidArgument(
                "pass --from-qp alone, or --num with exactly one of --den-exponents / --den-poly"
                    .into(),
            ))
        }
    };
    let orders = gf.pole_orders();
    let qp = gf.to_quasipolynomial()?;
    let profile = qp.minimum_period_profile();
    if json {
        let out = json!({
            "gf": render::gf_json(&gf),
            "pole_orders": render::pole_orders_json(&orders),
            "quasipolynomial": render::qp_json(&qp),
            "profile": profile.coefficient_periods,
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        println!("{}", render::gf_line(&gf));
        println!("{}", render::pole_orders_line(&orders));
        print!("{}", render::qp_table(&qp));
        println!("{}", render::profile_line("minimum periods", &profile));
    }
    Ok(0)
}

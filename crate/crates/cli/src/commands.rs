//! One handler per subcommand; each returns the artifact to emit.

use std::path::PathBuf;

use num_complex::Complex64;
use num_rational::Rational64;
use serde_json::{json, Value};

use natbound_core::analytic::{
    euler_product_eval, independence_margin, load_zeros, zeta_eval, ZetaZerosTable,
};
use natbound_core::classify::{beta, boundary_cluster, classify, local_zeros};
use natbound_core::cyclotomic::{
    cyclotomic_factor_bivariate, cyclotomic_factor_multi, cyclotomic_factor_uni, estermann_verdict,
};
use natbound_core::explicit::{
    gsp6_coeffs, gsp6_smoothed, gsp6_term_structure, smoothed_min_bound,
};
use natbound_core::goldbach::{
    convolve_gr, oscillating_hr, phi2_eval, residual_report, Method, VonMangoldtTable,
    RESIDUAL_HEADER,
};
use natbound_core::newton::{
    brute_count_toric, domain_v, domain_v_full, ext_sets, toric_degree, toric_local_series,
};
use natbound_core::polycore::{
    fmt_ratio, formal_log, parse_poly, substitute_prime, BivariateLocalFactor, MultiPoly, Parsed,
    PolyJson, UniPoly, VarSet,
};
use natbound_core::primes::primes_in;
use natbound_core::zetafact::{factorize_bivariate, factorize_multivariate};

use crate::output::{fmt15, invalid, Artifact, CliError, CliResult, Format};
use crate::{
    Command, GoldbachCmd, Gsp6Cmd, MethodArg, PolyArg, PolyCmd, ToricCmd, Vars, ZerosCmd, ZetaCmd,
};

fn infer_vars(arg: &PolyArg) -> CliResult<VarSet> {
    let text = &arg.poly;
    let max_index = text
        .char_indices()
        .filter(|&(_, ch)| ch == 'X')
        .filter_map(|(i, _)| {
            let digits: String = text[i + 1..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect();
            digits.parse::<usize>().ok()
        })
        .max();
    let multi = || match (arg.n, max_index) {
        (Some(n), _) => Ok(VarSet::Multi(n)),
        (None, Some(m)) if m >= 2 => Ok(VarSet::Multi(m - 1)),
        _ => Err(invalid("cannot infer the variable count; pass --n")),
    };
    match arg.vars {
        Vars::Uni => Ok(VarSet::Uni),
        Vars::Biv => Ok(VarSet::Bivariate),
        Vars::Multi => multi(),
        Vars::Auto if text.contains('y') => Ok(VarSet::Bivariate),
        Vars::Auto if max_index.is_some() => multi(),
        Vars::Auto => Ok(VarSet::Uni),
    }
}

fn read_poly(arg: &PolyArg) -> CliResult<Parsed> {
    Ok(parse_poly(&arg.poly, &infer_vars(arg)?)?)
}

fn read_uni(arg: &PolyArg) -> CliResult<UniPoly> {
    match read_poly(arg)? {
        Parsed::Uni(h) => Ok(h),
        _ => Err(invalid("expected a univariate polynomial in X")),
    }
}

fn read_biv(arg: &PolyArg) -> CliResult<BivariateLocalFactor> {
    let arg = PolyArg {
        vars: if arg.vars == Vars::Auto {
            Vars::Biv
        } else {
            arg.vars
        },
        ..arg.clone()
    };
    match read_poly(&arg)? {
        Parsed::Bivariate(w) => Ok(w),
        _ => Err(invalid("expected a bivariate factor in x, y")),
    }
}

fn read_multi(arg: &PolyArg) -> CliResult<MultiPoly> {
    match read_poly(arg)? {
        Parsed::Multi(h) => Ok(h),
        Parsed::Bivariate(w) => w.to_multi().ok_or_else(|| {
            invalid("expected non-negative integer exponents and integer coefficients")
        }),
        Parsed::Uni(_) => Err(invalid(
            "expected a multivariate polynomial in X1..Xn, X(n+1)",
        )),
    }
}

fn zeros_table(path: Option<PathBuf>) -> CliResult<ZetaZerosTable> {
    match path {
        Some(p) => Ok(load_zeros(&p)?),
        None => Ok(ZetaZerosTable::bundled()),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> CliResult<Value> {
    serde_json::to_value(v).map_err(|e| CliError::Compute(e.to_string()))
}

fn complex_json(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

fn exp_json(num: i64, den: i64) -> Value {
    let r = Rational64::new(num, den);
    if r.is_integer() {
        json!(r.to_integer())
    } else {
        json!(r.to_string())
    }
}

fn size(n: u64) -> CliResult<usize> {
    usize::try_from(n).map_err(|_| invalid(format!("{n} is too large")))
}

pub fn dispatch(cmd: Command) -> CliResult<Artifact> {
    match cmd {
        Command::Poly(p) => poly(p),
        Command::Cyclotomic { poly, depth } => {
            let verdict = match read_poly(&poly)? {
                Parsed::Uni(h) => cyclotomic_factor_uni(&h)?,
                Parsed::Bivariate(w) => cyclotomic_factor_bivariate(&w, depth)?,
                Parsed::Multi(h) => cyclotomic_factor_multi(&h, depth)?,
            };
            Ok(Artifact::json(verdict.to_json()))
        }
        Command::Estermann { poly } => Ok(Artifact::json(
            estermann_verdict(&read_uni(&poly)?)?.to_json(),
        )),
        Command::Factorize {
            poly,
            order,
            r,
            cutoff,
        } => match read_poly(&poly)? {
            Parsed::Bivariate(w) => Ok(Artifact::json(factorize_bivariate(&w, order)?.to_json())),
            Parsed::Multi(h) => Ok(Artifact::json(
                factorize_multivariate(&h, r, cutoff)?.to_json(),
            )),
            Parsed::Uni(_) => Err(invalid(
                "factorize expects a bivariate or multivariate polynomial",
            )),
        },
        Command::Classify {
            poly,
            depth,
            prime_bound,
        } => {
            let w = read_biv(&poly)?;
            Ok(Artifact::json(classify(&w, depth, prime_bound)?.to_json()))
        }
        Command::Zeros(z) => zeros(z),
        Command::Cluster {
            poly,
            re,
            tau,
            primes,
            prime_bound,
        } => {
            let w = read_biv(&poly)?;
            let re = match re {
                Some(r) => r,
                None => {
                    let b = beta(&w)?;
                    *b.numer() as f64 / *b.denom() as f64
                }
            };
            let primes = match (primes.is_empty(), prime_bound) {
                (false, _) => primes,
                (true, Some(p)) => primes_in(p / 10, p),
                (true, None) => return Err(invalid("give --primes or --prime-bound")),
            };
            let rows = boundary_cluster(&w, re, tau, &primes)?;
            let mut csv = String::from("p,nearest_re,nearest_im,distance,min_offset\n");
            let opt = |x: Option<f64>| x.map(fmt15).unwrap_or_default();
            for r in &rows {
                csv.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.p,
                    opt(r.nearest.map(|z| z.re)),
                    opt(r.nearest.map(|z| z.im)),
                    opt(r.distance),
                    opt(r.min_offset)
                ));
            }
            let json = json!({
                "re": re,
                "tau": tau,
                "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            });
            Ok(Artifact::both(json, csv, Format::Json))
        }
        Command::Domain {
            poly,
            delta,
            s,
            full,
        } => {
            let h = read_multi(&poly)?;
            let v = if full {
                domain_v_full(&h, delta)?
            } else {
                domain_v(&h, delta)?
            };
            let ext: serde_json::Map<String, Value> = ext_sets(&h)?
                .into_iter()
                .map(|(k, pts)| (k.to_string(), json!(pts)))
                .collect();
            let mut out = v.to_json();
            out["ext"] = Value::Object(ext);
            if !s.is_empty() {
                out["s"] = s.iter().map(|z| complex_json(*z)).collect();
                out["contains"] = json!(v.contains(&s)?);
            }
            Ok(Artifact::json(out))
        }
        Command::Toric(t) => toric(t),
        Command::Goldbach(g) => goldbach(g),
        Command::Gsp6(g) => gsp6(g),
        Command::Zeta(z) => zeta(z),
        Command::Independence { k, alpha, zeros } => {
            let table = zeros_table(zeros)?;
            Ok(Artifact::json(to_value(&independence_margin(
                &table, k, alpha,
            )?)?))
        }
    }
}

fn poly(cmd: PolyCmd) -> CliResult<Artifact> {
    match cmd {
        PolyCmd::Parse { poly } => {
            let canonical = match read_poly(&poly)? {
                Parsed::Uni(h) => PolyJson::from(&h),
                Parsed::Bivariate(w) => PolyJson::from(&w),
                Parsed::Multi(h) => PolyJson::from(&h),
            };
            Ok(Artifact::json(to_value(&canonical)?))
        }
        PolyCmd::Log { poly, order } => {
            if order < 1 {
                return Err(invalid("--order must be at least 1"));
            }
            let w = read_biv(&poly)?;
            let d = w.denom();
            let log = formal_log(&w.to_series(order))?;
            let terms: Vec<Value> = log
                .iter()
                .map(|(e, c)| json!({"exp": [exp_json(e[0], d), exp_json(e[1], d)], "coef": fmt_ratio(c)}))
                .collect();
            Ok(Artifact::json(
                json!({"vars": ["x", "y"], "order": order, "terms": terms}),
            ))
        }
        PolyCmd::Substitute { poly, p } => {
            let w = read_biv(&poly)?;
            Ok(Artifact::json(to_value(&substitute_prime(&w, p)?)?))
        }
    }
}

fn zeros(cmd: ZerosCmd) -> CliResult<Artifact> {
    match cmd {
        ZerosCmd::Load { zeros } => {
            let t = zeros_table(zeros)?;
            Ok(Artifact::json(json!({
                "count": t.len(),
                "source": t.source().map(|p| p.display().to_string()),
                "precision": t.precision(),
                "first": t.gammas().first(),
                "last": t.gammas().last(),
            })))
        }
        ZerosCmd::Local {
            poly,
            p,
            re_min,
            re_max,
        } => {
            let w = read_biv(&poly)?;
            let window = match (re_min, re_max) {
                (None, None) => None,
                (lo, hi) => Some((lo.unwrap_or(f64::NEG_INFINITY), hi.unwrap_or(f64::INFINITY))),
            };
            Ok(Artifact::json(local_zeros(&w, p, window)?.to_json()))
        }
    }
}

fn toric(cmd: ToricCmd) -> CliResult<Artifact> {
    match cmd {
        ToricCmd::Count { n, t_max } => {
            let counts: Vec<(u64, u64)> = (1..=t_max)
                .map(|t| Ok((t, brute_count_toric(n, t)?)))
                .collect::<CliResult<_>>()?;
            let mut csv = String::from("t,count\n");
            for (t, c) in &counts {
                csv.push_str(&format!("{t},{c}\n"));
            }
            let json = json!({
                "n": n,
                "counts": counts.iter().map(|(t, c)| json!({"t": t, "count": c})).collect::<Vec<_>>(),
            });
            Ok(Artifact::both(json, csv, Format::Csv))
        }
        ToricCmd::Series { n, cutoff } => {
            let s = toric_local_series(n, cutoff)?;
            let terms: Vec<Value> = s
                .terms()
                .map(|(a, c)| json!({"alpha": a, "coef": c}))
                .collect();
            Ok(Artifact::json(
                json!({"n": n, "cutoff": cutoff, "terms": terms}),
            ))
        }
        ToricCmd::Degree { n } => Ok(Artifact::json(json!({"n": n, "degree": toric_degree(n)?}))),
    }
}

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Naive => Method::Naive,
        MethodArg::Fast => Method::Fast,
    }
}

fn goldbach(cmd: GoldbachCmd) -> CliResult<Artifact> {
    match cmd {
        GoldbachCmd::Sum {
            x,
            n,
            zeros,
            k,
            method: m,
        } => {
            let table = zeros_table(zeros)?;
            if k > table.len() {
                return Err(invalid(format!(
                    "--K {k} exceeds the {} zeros available",
                    table.len()
                )));
            }
            if let Some(bad) = x.iter().find(|&&v| v > n) {
                return Err(invalid(format!("x = {bad} exceeds N = {n}")));
            }
            let lam = VonMangoldtTable::new(size(n)?)?;
            let g = convolve_gr(&lam, 2, method(m))?;
            let xs: Vec<usize> = x.iter().map(|&v| size(v)).collect::<CliResult<_>>()?;
            let rows = residual_report(&g, &xs, &table, k)?;
            let mut csv = format!("{RESIDUAL_HEADER}\n");
            for r in &rows {
                csv.push_str(&r.to_csv());
                csv.push('\n');
            }
            let json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "x": r.x, "S": r.s, "S_minus_main": r.minus_main,
                        "S_minus_main_minus_H2": r.minus_main_minus_h2,
                        "fujii_bound": r.fujii_bound, "log5_bound": r.log5_bound,
                    })
                })
                .collect();
            Ok(Artifact::both(
                json!({"N": n, "K": k, "rows": json}),
                csv,
                Format::Csv,
            ))
        }
        GoldbachCmd::Series { r, n, method: m } => {
            let lam = VonMangoldtTable::new(size(n)?)?;
            let g = convolve_gr(&lam, r, method(m))?;
            let mut csv = String::from("n,G\n");
            for (i, v) in g.g.iter().enumerate() {
                csv.push_str(&format!("{i},{}\n", fmt15(*v)));
            }
            Ok(Artifact::csv(csv))
        }
        GoldbachCmd::Hr { x, r, k, zeros } => {
            let table = zeros_table(zeros)?;
            let value = oscillating_hr(x, r, &table, k)?;
            Ok(Artifact::json(
                json!({"x": x, "r": r, "K": k, "value": value}),
            ))
        }
        GoldbachCmd::Phi2 { s, n } => {
            let v = phi2_eval(s, size(n)?)?;
            Ok(Artifact::json(json!({
                "s": complex_json(s),
                "N": n,
                "value": complex_json(v.value),
                "tail_bound": v.tail_bound,
            })))
        }
    }
}

fn gsp6(cmd: Gsp6Cmd) -> CliResult<Artifact> {
    match cmd {
        Gsp6Cmd::Coeffs { n } => Ok(Artifact::csv(gsp6_coeffs(n)?.to_csv())),
        Gsp6Cmd::Smoothed { x, n } => {
            if !(x.is_finite() && x > 0.0) {
                return Err(invalid("--x must be positive"));
            }
            let bound = n.unwrap_or_else(|| smoothed_min_bound(x));
            let coeffs = gsp6_coeffs(bound)?;
            Ok(Artifact::json(gsp6_smoothed(x, &coeffs)?.to_json()))
        }
        Gsp6Cmd::Terms => Ok(Artifact::json(gsp6_term_structure()?.to_json())),
    }
}

fn zeta(cmd: ZetaCmd) -> CliResult<Artifact> {
    match cmd {
        ZetaCmd::Eval { s } => Ok(Artifact::json(json!({
            "s": complex_json(s),
            "value": complex_json(zeta_eval(s)?),
        }))),
        ZetaCmd::Euler {
            poly,
            s,
            prime_bound,
        } => {
            let w = read_biv(&poly)?;
            Ok(Artifact::json(
                euler_product_eval(&w, s, prime_bound)?.to_json(),
            ))
        }
    }
}

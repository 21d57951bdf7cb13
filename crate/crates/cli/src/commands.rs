use std::fmt::Write;

use clap::Args;
use num_traits::Signed;
use serde_json::{json, Value};

use lefschetz_core::codim3::{
    has_wlp3_with, hilbert3, regularity3, verify_wlp3_primes, wlp3_bad_primes_with, MonomialIdeal3,
};
use lefschetz_core::groebner::{
    groebner_summary, has_slp_generic_with, FieldSpec, RankCertificate,
};
use lefschetz_core::lattice::{build_lattice, lgv_compare, LatticeGrid, DEFAULT_CAP};
use lefschetz_core::macaulay::{
    h_forces_lexsegment, hilbert_from_width, is_valid_hilbert, is_valid_width,
    lex_ideal_from_hilbert, lex_ideal_from_width, non_lex_witness_from_h, non_lex_witness_from_w,
    w_forces_lexsegment,
};
use lefschetz_core::maps::{
    build_matrix, closed_form_det, det_exact, reduce_to_hat, square_pairs, unimodularity,
};
use lefschetz_core::parse::{parse_polynomial_list, parse_sequence};
use lefschetz_core::slp::{bad_primes_with, has_slp_with, square_determinants};
use lefschetz_core::sweep::{self, primes_up_to, SweepReport};
use lefschetz_core::{Error, Execution, MonomialIdeal2, Result};

use crate::report::{big, determinant_json, factorization_json, factorization_text, join, Outcome};

fn ideal(s: &str) -> Result<MonomialIdeal2> {
    let i: MonomialIdeal2 = s.parse()?;
    if i.is_zero() {
        return Err(Error::NotArtinian(format!("empty generator list {s:?}")));
    }
    Ok(i)
}

fn sequence_text(v: &[u32]) -> String {
    format!("({})", join(v))
}

pub fn analyze(
    ideal_str: Option<&str>,
    hvector: Option<&str>,
    wvector: Option<&str>,
    exec: Execution,
) -> Result<Outcome> {
    match (ideal_str, hvector, wvector) {
        (Some(s), _, _) => analyze_ideal(s, exec),
        (_, Some(h), _) => analyze_hilbert(&parse_sequence(h)?),
        (_, _, Some(w)) => analyze_width(&parse_sequence(w)?),
        _ => unreachable!("clap requires one input"),
    }
}

fn analyze_ideal(s: &str, exec: Execution) -> Result<Outcome> {
    let i = ideal(s)?;
    let h = i.hilbert_function()?;
    let w = i.width_function()?;
    let pairs = square_pairs(&i)?;
    let bad = bad_primes_with(&i, exec)?;
    let defects: Vec<u32> = (0..=h.reg).map(|d| i.lex_defect(d)).collect();
    let result = json!({
        "ideal": i.to_string(),
        "h": h.values,
        "w": w.values,
        "reg": h.reg,
        "indeg": h.indeg,
        "lexsegment": i.is_lexsegment(),
        "initial_lexsegment": i.is_initial_lexsegment(),
        "lex_defect": defects,
        "square_pairs": pairs,
        "bad_primes": bad.primes(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "ideal               ({i})");
    let _ = writeln!(text, "h                   {}", sequence_text(&h.values));
    let _ = writeln!(text, "w                   {}", sequence_text(&w.values));
    let _ = writeln!(text, "reg                 {}", h.reg);
    if let Some(m) = h.indeg {
        let _ = writeln!(text, "indeg               {m}");
    }
    let _ = writeln!(text, "lexsegment          {}", i.is_lexsegment());
    let _ = writeln!(text, "initial lexsegment  {}", i.is_initial_lexsegment());
    let _ = writeln!(text, "lex defect          {}", sequence_text(&defects));
    let pair_text: Vec<String> = pairs
        .iter()
        .map(|(d, t)| format!("({d},{})", d + t))
        .collect();
    let _ = writeln!(text, "square pairs        {}", pair_text.join(" "));
    let _ = writeln!(text, "bad primes          {{{}}}", join(&bad.primes()));
    Ok(Outcome::new(json!({ "ideal": s }), result, text))
}

fn analyze_hilbert(h: &[u32]) -> Result<Outcome> {
    let valid = is_valid_hilbert(h);
    let mut result = json!({ "h": h, "valid": valid });
    let mut text = format!(
        "h                   {}\nvalid               {valid}\n",
        sequence_text(h)
    );
    if valid {
        let forces = h_forces_lexsegment(h)?;
        let lex = lex_ideal_from_hilbert(h)?;
        result["forces_lexsegment"] = json!(forces);
        result["forces_slp"] = json!(forces);
        result["lex_ideal"] = json!(lex.to_string());
        let _ = writeln!(text, "forces lexsegment   {forces}");
        let _ = writeln!(text, "forces SLP          {forces}");
        let _ = writeln!(text, "lex ideal           ({lex})");
    }
    Ok(Outcome::new(json!({ "hvector": h }), result, text))
}

fn analyze_width(w: &[u32]) -> Result<Outcome> {
    let valid = is_valid_width(w);
    let mut result = json!({ "w": w, "valid": valid });
    let mut text = format!(
        "w                   {}\nvalid               {valid}\n",
        sequence_text(w)
    );
    if valid {
        let forces = w_forces_lexsegment(w)?;
        let lex = lex_ideal_from_width(w)?;
        let h = hilbert_from_width(w)?;
        result["forces_lexsegment"] = json!(forces);
        result["forces_slp"] = json!(forces);
        result["lex_ideal"] = json!(lex.to_string());
        result["h"] = json!(h);
        let _ = writeln!(text, "h                   {}", sequence_text(&h));
        let _ = writeln!(text, "forces lexsegment   {forces}");
        let _ = writeln!(text, "forces SLP          {forces}");
        let _ = writeln!(text, "lex ideal           ({lex})");
    }
    Ok(Outcome::new(json!({ "wvector": w }), result, text))
}

pub fn witness(hvector: Option<&str>, wvector: Option<&str>) -> Result<Outcome> {
    let (input, found, seq) = match (hvector, wvector) {
        (Some(h), _) => {
            let h = parse_sequence(h)?;
            (json!({ "hvector": h }), non_lex_witness_from_h(&h), h)
        }
        (_, Some(w)) => {
            let w = parse_sequence(w)?;
            (json!({ "wvector": w }), non_lex_witness_from_w(&w), w)
        }
        _ => {
            return Err(Error::PreconditionFailed(
                "witness needs --hvector or --wvector".to_string(),
            ))
        }
    };
    match found {
        Ok(i) => {
            let text = format!(
                "non-lexsegment ideal ({i}) realizes {}\n",
                sequence_text(&seq)
            );
            let result = json!({ "forces_lexsegment": false, "witness": i.to_string() });
            Ok(Outcome::new(input, result, text).witnesses(vec![json!(i.to_string())]))
        }
        Err(Error::ForcingHolds) => {
            let text = format!(
                "every ideal realizing {} is lexsegment\n",
                sequence_text(&seq)
            );
            let result = json!({ "forces_lexsegment": true, "witness": null });
            Ok(Outcome::new(input, result, text))
        }
        Err(e) => Err(e),
    }
}

fn matrix_text(rows: &[Vec<num_bigint::BigInt>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", line.join(" "));
    }
    out
}

pub fn matrix(s: &str, d: u32, t: u32) -> Result<Outcome> {
    let i = ideal(s)?;
    let m = build_matrix(&i, d, t)?;
    let exact = det_exact(&m);
    let closed = closed_form_det(&i, d, t)?;
    let hat = reduce_to_hat(&i, d, t)?;
    let unimodular = unimodularity(&i, d, t)?;
    let entries: Vec<Vec<String>> = m
        .entries
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let reduced = hat
        .reduced
        .as_ref()
        .map(|(j, e)| json!({ "ideal": j.to_string(), "d": e, "t": hat.t }));
    let result = json!({
        "rows": (0..=d).map(|a| format!("x^{a}y^{}", d - a)).collect::<Vec<_>>(),
        "column_x_exponents": m.bexps,
        "matrix": entries,
        "bareiss": exact.to_string(),
        "closed_form": determinant_json(&closed),
        "r": closed.r,
        "s": closed.s,
        "factors": closed.difference_factors,
        "factorization": factorization_json(&closed.prime_factorization),
        "reduced": reduced,
        "unimodular": unimodular.det_is_unit,
        "width_equals_t": unimodular.width_equals_t,
    });
    let mut text = format!(
        "N({d},{}) of ({i}), columns x^b with b in {{{}}}\n",
        d + t,
        join(&m.bexps)
    );
    text.push_str(&matrix_text(&m.entries));
    let _ = writeln!(text, "Bareiss determinant     {exact}");
    let _ = writeln!(
        text,
        "closed form             {} = {}",
        closed.value,
        factorization_text(&closed.prime_factorization)
    );
    let _ = writeln!(text, "r, s                    {}, {}", closed.r, closed.s);
    let _ = writeln!(
        text,
        "difference factors      {}",
        join(&closed.difference_factors)
    );
    if let Some((j, e)) = &hat.reduced {
        let _ = writeln!(
            text,
            "central block           N({e},{}) of ({j})",
            e + hat.t
        );
    }
    let _ = writeln!(text, "unimodular              {}", unimodular.det_is_unit);
    let input = json!({ "ideal": s, "d": d, "t": t });
    Ok(Outcome::new(input, result, text))
}

pub fn det(s: &str, d: u32, t: u32) -> Result<Outcome> {
    let i = ideal(s)?;
    let closed = closed_form_det(&i, d, t)?;
    let exact = det_exact(&build_matrix(&i, d, t)?);
    let agree = exact.abs() == closed.value.clone().into();
    let result = json!({
        "determinant": big(&closed.value),
        "bareiss": exact.to_string(),
        "agree": agree,
        "factorization": factorization_json(&closed.prime_factorization),
        "closed_form": determinant_json(&closed),
    });
    let text = format!(
        "det N({d},{}) = {} = {}\nBareiss {exact}, agree {agree}\n",
        d + t,
        closed.value,
        factorization_text(&closed.prime_factorization)
    );
    Ok(Outcome::new(
        json!({ "ideal": s, "d": d, "t": t }),
        result,
        text,
    ))
}

pub fn slp(s: &str, p: u64, exec: Execution) -> Result<Outcome> {
    let i = ideal(s)?;
    let r = has_slp_with(&i, p, exec)?;
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .map(|w| json!({ "d": w.d, "t": w.t, "determinant": big(&w.determinant) }))
        .collect();
    let result = json!({
        "verdict": r.verdict,
        "prime": p,
        "width_bound": r.bounds.width_bound,
        "regularity_bound": r.bounds.regularity_bound,
    });
    let mut text = format!("SLP of ({i}) in characteristic {p}: {}\n", r.verdict);
    for w in &r.witnesses {
        let _ = writeln!(
            text,
            "  witness (d={}, t={}) det {}",
            w.d, w.t, w.determinant
        );
    }
    let _ = writeln!(
        text,
        "bad primes are < {} and < {}",
        r.bounds.width_bound, r.bounds.regularity_bound
    );
    Ok(Outcome::new(json!({ "ideal": s, "prime": p }), result, text).witnesses(witnesses))
}

pub fn bad_primes(s: &str, exec: Execution) -> Result<Outcome> {
    let i = ideal(s)?;
    let bad = bad_primes_with(&i, exec)?;
    let dets = square_determinants(&i, exec)?;
    let primes: serde_json::Map<String, Value> = bad
        .primes
        .iter()
        .map(|(p, pairs)| (p.to_string(), json!(pairs)))
        .collect();
    let result = json!({ "bad_primes": bad.primes(), "pairs": primes });
    let witnesses = dets
        .iter()
        .filter(|f| !f.is_unit())
        .map(determinant_json)
        .collect();
    let mut text = format!("bad primes of ({i}): {{{}}}\n", join(&bad.primes()));
    for f in dets.iter().filter(|f| !f.is_unit()) {
        let _ = writeln!(
            text,
            "  N({},{}) det {} = {}",
            f.d,
            f.d + f.t,
            f.value,
            factorization_text(&f.prime_factorization)
        );
    }
    Ok(Outcome::new(json!({ "ideal": s }), result, text).witnesses(witnesses))
}

pub fn lgv(s: &str, d: u32, t: u32, cap: u64, emit: bool) -> Result<Outcome> {
    let i = ideal(s)?;
    let cmp = lgv_compare(&i, d, t, cap)?;
    let lattice = build_lattice(&i, d, t)?;
    let grid = LatticeGrid(&lattice).to_string();
    let agree = cmp.agree();
    let result = json!({
        "determinant": cmp.determinant.to_string(),
        "families": big(&cmp.families),
        "agree": agree,
        "sources": lattice.sources,
        "sinks": lattice.sinks,
        "lattice": emit.then(|| grid.clone()),
    });
    let mut text = format!(
        "non-intersecting families {}, determinant {}, agree {agree}\n",
        cmp.families, cmp.determinant
    );
    if emit {
        text.push_str(&grid);
    }
    let input = json!({ "ideal": s, "d": d, "t": t, "cap": cap });
    Ok(Outcome::new(input, result, text).asserting(agree))
}

pub fn gb(s: &str, char: u64) -> Result<Outcome> {
    let gens = parse_polynomial_list(s)?;
    let summary = groebner_summary(&gens, FieldSpec::from_characteristic(char)?)?;
    let result = json!({
        "basis": summary.basis,
        "initial_ideal": summary.initial_ideal.to_string(),
        "artinian": summary.artinian,
        "h": summary.hilbert,
        "lexsegment": summary.lexsegment,
    });
    let mut text = format!("reduced Gröbner basis in characteristic {char} (lex, x > y)\n");
    for g in &summary.basis {
        let _ = writeln!(text, "  {g}");
    }
    let _ = writeln!(text, "initial ideal  ({})", summary.initial_ideal);
    let _ = writeln!(text, "artinian       {}", summary.artinian);
    if let Some(h) = &summary.hilbert {
        let _ = writeln!(text, "h              {}", sequence_text(h));
    }
    let _ = writeln!(text, "lexsegment     {}", summary.lexsegment);
    Ok(Outcome::new(
        json!({ "ideal": s, "char": char }),
        result,
        text,
    ))
}

fn certificate_json(c: &RankCertificate) -> Value {
    match c {
        RankCertificate::Specialization { value } => json!({ "specialization": value }),
        RankCertificate::FunctionField => json!("function-field"),
    }
}

fn generic_outcome(
    gens_text: &str,
    p: u64,
    exec: Execution,
    input: Value,
) -> Result<(Value, Vec<Value>, String, bool)> {
    let gens = parse_polynomial_list(gens_text)?;
    let summary = groebner_summary(&gens, FieldSpec::from_characteristic(p)?)?;
    if !summary.artinian {
        return Err(Error::NotArtinian(format!(
            "({gens_text}) in characteristic {p}"
        )));
    }
    let mut text = String::new();
    let _ = writeln!(text, "reduced Gröbner basis  {}", summary.basis.join(", "));
    let _ = writeln!(text, "initial ideal          ({})", summary.initial_ideal);
    let (verdict, witnesses, method) = if p == 0 {
        // in(I) is monomial and artinian, so it has the SLP in characteristic 0,
        // and the SLP passes from in(I) to I
        (true, Vec::new(), "initial ideal in characteristic 0")
    } else {
        let report = has_slp_generic_with(&gens, p, exec)?;
        let pairs: Vec<Value> = report
            .pairs
            .iter()
            .map(|r| {
                json!({
                    "d": r.d, "t": r.t, "rows": r.rows, "cols": r.cols, "rank": r.rank,
                    "max_rank": r.is_max_rank(), "certificate": certificate_json(&r.certificate),
                })
            })
            .collect();
        for r in report.pairs.iter().filter(|r| !r.is_max_rank()) {
            let _ = writeln!(
                text,
                "  rank drop (d={}, t={}): {} of {}",
                r.d,
                r.t,
                r.rank,
                r.rows.min(r.cols)
            );
        }
        let _ = writeln!(text, "pairs checked          {}", report.pairs.len());
        (report.verdict, pairs, "generic linear form over F_p(c)")
    };
    let _ = writeln!(text, "SLP in characteristic {p}: {verdict}");
    let result = json!({
        "verdict": verdict,
        "method": method,
        "basis": summary.basis,
        "initial_ideal": summary.initial_ideal.to_string(),
        "h": summary.hilbert,
        "lexsegment": summary.lexsegment,
        "input": input,
    });
    Ok((result, witnesses, text, verdict))
}

pub fn slp_poly(s: &str, char: u64, exec: Execution) -> Result<Outcome> {
    let input = json!({ "ideal": s, "char": char });
    let (mut result, witnesses, text, _) = generic_outcome(s, char, exec, input.clone())?;
    result.as_object_mut().expect("object").remove("input");
    Ok(Outcome::new(input, result, text).witnesses(witnesses))
}

pub fn conjecture(p: u64, exec: Execution) -> Result<Outcome> {
    if p < 3 || !lefschetz_core::arith::is_prime(p) {
        return Err(Error::PreconditionFailed(format!(
            "--p must be an odd prime, got {p}"
        )));
    }
    let gens = format!("x^{p}, x^{}y^{} + y^{p}", p.div_ceil(2), (p - 1) / 2);
    let input = json!({ "p": p, "ideal": gens });
    let (mut result, witnesses, text, verdict) = generic_outcome(&gens, p, exec, input.clone())?;
    result.as_object_mut().expect("object").remove("input");
    let text = format!("({gens}) in characteristic {p}\n{text}");
    Ok(Outcome::new(input, result, text)
        .witnesses(witnesses)
        .asserting(verdict))
}

pub fn wlp3(s: &str, prime: Option<u64>, verify: Option<&str>, exec: Execution) -> Result<Outcome> {
    let j: MonomialIdeal3 = s.parse()?;
    let h = hilbert3(&j)?;
    let reg = regularity3(&j)?;
    let mut text = format!("({j}): h = {}, reg {reg}\n", sequence_text(&h));
    if let Some(p) = prime {
        let r = has_wlp3_with(&j, p, exec)?;
        let failing = r.failing_degrees();
        let _ = writeln!(text, "WLP in characteristic {p}: {}", r.verdict);
        if !failing.is_empty() {
            let _ = writeln!(text, "  rank drops from degrees {}", join(&failing));
        }
        let result = json!({ "h": h, "reg": reg, "prime": p, "verdict": r.verdict, "failing_degrees": failing });
        return Ok(Outcome::new(
            json!({ "ideal": s, "prime": p }),
            result,
            text,
        ));
    }
    if let Some(list) = verify {
        let primes: Vec<u64> = parse_sequence(list)?.into_iter().map(u64::from).collect();
        let checked = verify_wlp3_primes(&j, &primes, exec)?;
        let all_bad = checked.values().all(|d| !d.is_empty());
        for (p, degs) in &checked {
            let status = if degs.is_empty() {
                "WLP holds".to_string()
            } else {
                format!("fails from degrees {}", join(degs))
            };
            let _ = writeln!(text, "  {p}: {status}");
        }
        let _ = writeln!(text, "every listed prime is bad: {all_bad}");
        let per: serde_json::Map<String, Value> = checked
            .iter()
            .map(|(p, d)| (p.to_string(), json!(d)))
            .collect();
        let result = json!({ "h": h, "reg": reg, "failing_degrees": per, "all_bad": all_bad });
        let input = json!({ "ideal": s, "verify_primes": primes });
        return Ok(Outcome::new(input, result, text).asserting(all_bad));
    }
    let bad = wlp3_bad_primes_with(&j, exec)?;
    let primes: Vec<String> = bad.prime_list().iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "bad primes {{{}}}", primes.join(","));
    for (p, degs) in &bad.primes {
        let _ = writeln!(text, "  {p}: degrees {}", join(degs));
    }
    if !bad.rank_deficient_degrees.is_empty() {
        let _ = writeln!(
            text,
            "not of maximal rank in characteristic 0 from degrees {}",
            join(&bad.rank_deficient_degrees)
        );
    }
    let per: serde_json::Map<String, Value> = bad
        .primes
        .iter()
        .map(|(p, d)| (p.to_string(), json!(d)))
        .collect();
    let result = json!({
        "h": h,
        "reg": reg,
        "bad_primes": primes,
        "degrees": per,
        "rank_deficient_degrees": bad.rank_deficient_degrees,
    });
    Ok(Outcome::new(json!({ "ideal": s }), result, text))
}

pub const SUITES: [&str; 14] = [
    "always-slp",
    "closed-form",
    "consecutive-rank",
    "bounds",
    "width-sharpness",
    "width-failure",
    "rank-oracle",
    "lgv",
    "bridge",
    "wlp-bound",
    "h-forcing",
    "w-forcing",
    "families",
    "sharpness-family",
];

#[derive(Args, Clone)]
pub struct SweepArgs {
    /// Exhaustive families cover every artinian ideal with reg <= N.
    #[arg(long, default_value_t = 8)]
    pub max_reg: u32,
    /// Suites to run (comma-separated); all by default.
    #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    pub suite: Vec<String>,
    /// Largest prime used by the rank suites.
    #[arg(long, default_value_t = 13)]
    pub primes_up_to: u64,
    /// Sampled ideals for the closed-form suite.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Regularity bound of the sampled ideals.
    #[arg(long, default_value_t = 12)]
    pub sample_reg: u32,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest z-power for the three-variable suite.
    #[arg(long, default_value_t = 5)]
    pub max_t: u32,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
}

fn run_suite(name: &str, a: &SweepArgs, exec: Execution) -> SweepReport {
    let primes = primes_up_to(a.primes_up_to);
    let n = a.max_reg;
    match name {
        "always-slp" => sweep::always_slp_sweep(n, exec),
        "closed-form" => sweep::closed_form_sweep(a.samples, a.sample_reg, a.seed, exec),
        "consecutive-rank" => sweep::consecutive_rank_sweep(n, &primes, exec),
        "bounds" => sweep::bounds_sweep(n, exec),
        "width-sharpness" => sweep::width_sharpness_sweep(n, exec),
        "width-failure" => sweep::width_failure_sweep(n, exec),
        "rank-oracle" => sweep::rank_oracle_sweep(n, &primes, exec),
        "lgv" => sweep::lgv_sweep(n, a.cap, exec),
        "bridge" => sweep::bridge_sweep(n, &primes, exec),
        "wlp-bound" => sweep::wlp_bound_sweep(n, a.max_t, exec),
        "h-forcing" => sweep::h_forcing_sweep(n, exec),
        "w-forcing" => sweep::w_forcing_sweep(n, exec),
        "families" => sweep::family_sweep(12, 10, &primes_up_to(a.primes_up_to.max(23)), exec),
        "sharpness-family" => sweep::sharpness_family_sweep(5, exec),
        other => unreachable!("clap rejects suite {other}"),
    }
}

pub fn sweep(a: &SweepArgs, exec: Execution) -> Result<Outcome> {
    let names: Vec<&str> = if a.suite.is_empty() {
        SUITES.to_vec()
    } else {
        a.suite.iter().map(String::as_str).collect()
    };
    let mut text = String::new();
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    let mut all = true;
    for name in names {
        let r = run_suite(name, a, exec);
        all &= r.passed();
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} {name}: {} ({} checks, {} failures)",
            r.name,
            r.checked,
            r.failures.len()
        );
        for f in r.failures.iter().take(5) {
            let _ = writeln!(text, "  {f}");
        }
        witnesses.extend(
            r.failures
                .iter()
                .take(20)
                .map(|f| json!({ "suite": name, "failure": f })),
        );
        results.push(json!({
            "suite": name,
            "description": r.name,
            "checked": r.checked,
            "failures": r.failures.len(),
            "passed": r.passed(),
        }));
    }
    let input = json!({
        "max_reg": a.max_reg,
        "suites": a.suite,
        "primes_up_to": a.primes_up_to,
        "samples": a.samples,
        "sample_reg": a.sample_reg,
        "seed": a.seed,
        "max_t": a.max_t,
        "cap": a.cap,
    });
    let result = json!({ "passed": all, "suites": results });
    Ok(Outcome::new(input, result, text)
        .witnesses(witnesses)
        .asserting(all))
}

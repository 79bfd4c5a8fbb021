//! The six subcommands. Each one resolves its effective settings, runs the
//! corresponding library suite, renders a report in the requested format,
//! emits it, and maps any failed check to exit status 1.

use std::path::PathBuf;

use serde_json::json;

use qpositivity::bounds::FamilyParams;
use qpositivity::identities::{
    check_andrews_merca, check_gauss, check_guo_zeng, check_jacobi_products, check_pentagonal,
    GuoZengVariant,
};
use qpositivity::merca::{
    check_gamma_prime, check_merca_conjecture, check_special_factor, MercaConjecture, MercaSuite,
};
use qpositivity::periodic::{decompose, CoprimeTriple};
use qpositivity::rational::format_rational;
use qpositivity::report::IdentityReport;
use qpositivity::tables::{compute_row, expected_rows, parse_rows, reproduce, TableRow};
use qpositivity::theta::ThetaForm;
use qpositivity::verifier::certify_family;

use crate::config::{emit, CliError, CliResult, OutputFormat};

/// Settings shared by every subcommand.
pub struct GlobalOpts {
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

fn join_degrees(degrees: &[i64]) -> String {
    let parts: Vec<String> = degrees.iter().map(|n| n.to_string()).collect();
    parts.join(",")
}

fn row_json(row: &TableRow) -> serde_json::Value {
    json!({
        "family": {
            "a": row.triple.a(),
            "b": row.triple.b(),
            "c": row.triple.c(),
            "A": format_rational(row.form.quad()),
            "B": format_rational(row.form.lin()),
        },
        "D": format_rational(&row.beta_bound),
        "K": row.k_min,
        "N": row.degrees,
    })
}

/// Recomputes the threshold tables, prints them, and diffs every cell against
/// the expected values (embedded, or an override file). Any disagreement is
/// reported per cell on stderr and exits with status 1.
pub fn cmd_tables(
    family: Option<CoprimeTriple>,
    form: Option<ThetaForm>,
    expected: Option<PathBuf>,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let mut rows = match &expected {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::usage(format!("cannot read expected file {}: {e}", path.display()))
            })?;
            parse_rows(&text)?
        }
        None => expected_rows()?,
    };
    if let Some(triple) = family {
        rows.retain(|r| r.triple == triple);
    }
    if let Some(form) = &form {
        rows.retain(|r| &r.form == form);
    }
    if rows.is_empty() {
        return Err(CliError::usage(
            "no table row matches the requested family/form".to_string(),
        ));
    }

    let computed: Vec<TableRow> = rows
        .iter()
        .map(|r| compute_row(&r.triple, &r.form))
        .collect::<Result<_, _>>()?;

    // A fully pinned-down family prints the bare `D | K | N-list` row; the
    // general listing carries the family columns.
    let single = family.is_some() && form.is_some() && computed.len() == 1;
    let report = match opts.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for row in &computed {
                let tail = format!(
                    "{} | {} | {}",
                    format_rational(&row.beta_bound),
                    row.k_min,
                    join_degrees(&row.degrees)
                );
                if single {
                    out.push_str(&tail);
                } else {
                    let [a, b, c] = row.triple.parts();
                    out.push_str(&format!(
                        "{a},{b},{c} | {},{} | {tail}",
                        format_rational(row.form.quad()),
                        format_rational(row.form.lin()),
                    ));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("a,b,c,A,B,D,K,N...\n");
            for row in &computed {
                out.push_str(&row.csv_line());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = computed.iter().map(row_json).collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
    };
    emit(&report, opts.output.clone())?;

    let diffs = reproduce(&rows)?;
    if diffs.is_empty() {
        Ok(())
    } else {
        for d in &diffs {
            eprintln!(
                "row {} {}: {} expected {}, computed {}",
                d.row + 1,
                d.family,
                d.field,
                d.expected,
                d.actual
            );
        }
        Err(CliError::failure(format!(
            "{} cell(s) disagree with the expected tables",
            diffs.len()
        )))
    }
}

/// Certifies one family end to end and writes the JSON positivity
/// certificate. The certificate is always JSON regardless of `--format`.
pub fn cmd_verify(
    triple: CoprimeTriple,
    form: ThetaForm,
    sample_order: usize,
    sample_extra: u64,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let params = FamilyParams::new(triple, form)?;
    let certificate = certify_family(&params, sample_order, sample_extra)?;
    let report = format!("{:#}\n", certificate.to_json());
    emit(&report, opts.output.clone())?;
    eprintln!(
        "family {} {}: verdict {} (K = {}, {} finite range(s) checked)",
        params.triple,
        params.form,
        certificate.verdict(),
        certificate.thresholds.k_min,
        certificate.per_k.len()
    );
    if certificate.pass {
        Ok(())
    } else {
        Err(CliError::failure(
            "negative coefficient below a degree threshold".to_string(),
        ))
    }
}

fn render_identity_reports(reports: &[IdentityReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                if r.equal {
                    out.push_str(&format!("{}: equal to order {}\n", r.name, r.order));
                } else {
                    out.push_str(&format!(
                        "{}: MISMATCH at degree {} (order {})\n",
                        r.name,
                        r.first_mismatch.unwrap_or_default(),
                        r.order
                    ));
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,order,equal,first_mismatch\n");
            for r in reports {
                let at = r.first_mismatch.map_or(String::new(), |n| n.to_string());
                out.push_str(&format!("{},{},{},{at}\n", r.name, r.order, r.equal));
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
    }
}

/// Runs the classical identity suite to the requested order and truncation
/// depth: the three product identities, both mod-5 quotients, and the three
/// truncated-theta recursions for every `k` up to the cap.
pub fn cmd_identity(t_order: usize, k_max: u64, opts: &GlobalOpts) -> CliResult<()> {
    let mut reports = vec![check_pentagonal(t_order)?];
    let (squares, triangular) = check_gauss(t_order)?;
    reports.push(squares);
    reports.push(triangular);
    let (one_four, two_three) = check_jacobi_products(t_order)?;
    reports.push(one_four);
    reports.push(two_three);
    for k in 1..=k_max {
        reports.push(check_andrews_merca(k, t_order)?);
        reports.push(check_guo_zeng(GuoZengVariant::Overpartition, k, t_order)?);
        reports.push(check_guo_zeng(GuoZengVariant::OddDistinct, k, t_order)?);
    }

    emit(&render_identity_reports(&reports, opts.format), opts.output.clone())?;
    let mismatches = reports.iter().filter(|r| !r.equal).count();
    if mismatches == 0 {
        Ok(())
    } else {
        Err(CliError::failure(format!("{mismatches} identity check(s) failed")))
    }
}

/// Runs the special-product suite: the auxiliary factor's positivity, the
/// staircase pattern, and both truncation conjectures (route equality plus
/// positivity) for every `k` up to the cap.
pub fn cmd_merca(t_order: usize, k_max: u64, opts: &GlobalOpts) -> CliResult<()> {
    let mut ok = true;
    let mut text = String::new();
    let mut csv = String::from("check,k,ok\n");
    let mut items = Vec::new();

    let factor = check_special_factor(t_order);
    ok &= factor.nonnegative;
    text.push_str(&format!(
        "{}: {} to order {}\n",
        factor.name,
        if factor.nonnegative { "nonnegative" } else { "NEGATIVE" },
        factor.order
    ));
    csv.push_str(&format!("special-factor,,{}\n", factor.nonnegative));
    items.push(factor.to_json());

    for k in 1..=k_max {
        let staircase = check_gamma_prime(k, t_order)?;
        ok &= staircase.equal;
        text.push_str(&format!(
            "{}: {}\n",
            staircase.name,
            if staircase.equal { "matches the predicted pattern" } else { "MISMATCH" }
        ));
        csv.push_str(&format!("staircase,{k},{}\n", staircase.equal));
        items.push(staircase.to_json());
    }

    let suite = MercaSuite::new(t_order);
    for k in 1..=k_max {
        for (label, which) in [("first", MercaConjecture::First), ("second", MercaConjecture::Second)]
        {
            let check = check_merca_conjecture(&suite, which, k)?;
            let good = check.identity.equal && check.positivity.nonnegative;
            ok &= good;
            text.push_str(&format!(
                "{} conjecture (k = {k}): routes {}, series {}\n",
                label,
                if check.identity.equal { "equal" } else { "DIFFER" },
                if check.positivity.nonnegative { "nonnegative" } else { "NEGATIVE" },
            ));
            csv.push_str(&format!("conjecture-{label},{k},{good}\n"));
            items.push(json!({
                "conjecture": label,
                "k": k,
                "identity": check.identity.to_json(),
                "positivity": check.positivity.to_json(),
            }));
        }
    }

    let report = match opts.format {
        OutputFormat::Text => text,
        OutputFormat::Csv => csv,
        OutputFormat::Json => format!("{:#}\n", serde_json::Value::Array(items)),
    };
    emit(&report, opts.output.clone())?;
    if ok {
        Ok(())
    } else {
        Err(CliError::failure("special-product suite reported failures".to_string()))
    }
}

/// Shows the periodic decomposition of one coprime triple: the period, the
/// remainder bound `D`, and (in JSON) the full remainder table. The library
/// re-verifies periodicity over two cycles while computing it.
pub fn cmd_period(triple: CoprimeTriple, opts: &GlobalOpts) -> CliResult<()> {
    let decomp = decompose(&triple)?;
    let report = match opts.format {
        OutputFormat::Text => format!(
            "triple {}: period {} verified, D = {}\n",
            triple,
            decomp.period,
            format_rational(&decomp.bound)
        ),
        OutputFormat::Csv => {
            let [a, b, c] = triple.parts();
            format!(
                "a,b,c,period,D\n{a},{b},{c},{},{}\n",
                decomp.period,
                format_rational(&decomp.bound)
            )
        }
        OutputFormat::Json => {
            let beta: Vec<String> = decomp.beta.iter().map(format_rational).collect();
            let value = json!({
                "triple": {"a": triple.a(), "b": triple.b(), "c": triple.c()},
                "period": decomp.period,
                "D": format_rational(&decomp.bound),
                "beta": beta,
            });
            format!("{value:#}\n")
        }
    };
    emit(&report, opts.output.clone())
}

/// Certifies every coprime triple with product at most `limit` under one
/// quadratic form, reporting each verdict. Exits 1 if any family fails.
pub fn cmd_scan(
    form: ThetaForm,
    limit: u64,
    sample_order: usize,
    sample_extra: u64,
    opts: &GlobalOpts,
) -> CliResult<()> {
    let mut results = Vec::new();
    for a in 1..=limit {
        for b in (a + 1)..=limit {
            if a * b > limit {
                break;
            }
            for c in (b + 1)..=limit {
                if a * b * c > limit {
                    break;
                }
                let Ok(triple) = CoprimeTriple::new(a, b, c) else {
                    continue;
                };
                let params = FamilyParams::new(triple, form.clone())?;
                let certificate = certify_family(&params, sample_order, sample_extra)?;
                results.push((triple, certificate));
            }
        }
    }
    if results.is_empty() {
        return Err(CliError::usage(format!(
            "no coprime triple has product <= {limit}"
        )));
    }

    let report = match opts.format {
        OutputFormat::Text => {
            let mut out = String::new();
            for (triple, cert) in &results {
                out.push_str(&format!(
                    "{}: {} — K = {}, N = [{}]\n",
                    triple,
                    cert.verdict(),
                    cert.thresholds.k_min,
                    join_degrees(&cert.per_k.iter().map(|c| c.n).collect::<Vec<_>>())
                ));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("a,b,c,verdict,K,N...\n");
            for (triple, cert) in &results {
                let [a, b, c] = triple.parts();
                out.push_str(&format!(
                    "{a},{b},{c},{},{},{}\n",
                    cert.verdict(),
                    cert.thresholds.k_min,
                    join_degrees(&cert.per_k.iter().map(|c| c.n).collect::<Vec<_>>())
                ));
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = results.iter().map(|(_, c)| c.to_json()).collect();
            format!("{:#}\n", serde_json::Value::Array(items))
        }
    };
    emit(&report, opts.output.clone())?;

    let failures = results.iter().filter(|(_, c)| !c.pass).count();
    if failures == 0 {
        Ok(())
    } else {
        Err(CliError::failure(format!("{failures} familie(s) failed certification")))
    }
}

//! Subcommand bodies. Each returns `Ok(true)` when everything it checked passed.

use std::io::Write;

use serde::Serialize;
use sptcrank::combinatorics::{generating_series, oracle_spt};
use sptcrank::identities::{self, IdentityReport};
use sptcrank::spt::{
    cached_crank_form, congruence_check, m_residue, negative_coefficients, spt_series, CongruenceReport, CrankForm,
    SptFamily,
};
use sptcrank::Int;

use crate::{
    expr, CliError, Column, CongruenceArgs, EvalArgs, Format, OracleArgs, ScanArgs, TableArgs, TableFormat, VerifyArgs,
};

type Outcome = Result<bool, CliError>;

#[derive(Serialize)]
struct SuiteReport<'a> {
    suite: &'a str,
    cases: Vec<CaseRow<'a>>,
    summary: Summary,
}

#[derive(Serialize)]
struct CaseRow<'a> {
    id: &'a str,
    pass: bool,
    order: usize,
    first_mismatch: Option<usize>,
    millis: u64,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    failed: usize,
}

pub fn verify(out: &mut impl Write, a: VerifyArgs) -> Outcome {
    let (suite, reports): (String, Vec<IdentityReport>) = if let Some(id) = &a.id {
        (id.clone(), vec![identities::verify(id, a.order)?])
    } else if let Some(f) = &a.filter {
        let r = identities::verify_all(Some(f), a.order);
        if r.is_empty() {
            return Err(CliError::Usage(format!("no identity matches '{f}'")));
        }
        (f.clone(), r)
    } else {
        ("all".to_string(), identities::verify_all(None, a.order))
    };
    let failed = reports.iter().filter(|r| !r.pass).count();
    match a.format {
        Format::Json => {
            let report = SuiteReport {
                suite: &suite,
                cases: reports
                    .iter()
                    .map(|r| CaseRow {
                        id: &r.id,
                        pass: r.pass,
                        order: r.order,
                        first_mismatch: r.first_mismatch,
                        millis: r.millis,
                    })
                    .collect(),
                summary: Summary { total: reports.len(), failed },
            };
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Text => {
            for r in &reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                write!(out, "{verdict} {} (order {}, {} ms)", r.id, r.order, r.millis)?;
                if let Some(k) = r.first_mismatch {
                    write!(out, ": first mismatch at q^{k}")?;
                }
                if let Some(d) = &r.detail {
                    write!(out, ": {d}")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "{} cases, {failed} failed", reports.len())?;
        }
    }
    Ok(failed == 0)
}

#[derive(Serialize)]
struct CongruenceJson<'a> {
    #[serde(flatten)]
    report: &'a CongruenceReport,
    pass: bool,
    witness: Option<usize>,
}

fn list(ns: &[usize]) -> String {
    let shown: Vec<String> = ns.iter().take(8).map(usize::to_string).collect();
    let more = if ns.len() > 8 { format!(", ... ({} in all)", ns.len()) } else { String::new() };
    format!("{}{more}", shown.join(", "))
}

pub fn congruence(out: &mut impl Write, a: CongruenceArgs) -> Outcome {
    let r = congruence_check(a.family, a.modulus, a.residue, a.n_max)?;
    match a.format {
        Format::Json => {
            let j = CongruenceJson { report: &r, pass: r.pass(), witness: r.witness() };
            serde_json::to_writer_pretty(&mut *out, &j)?;
            writeln!(out)?;
        }
        Format::Text => {
            let (x, t, res) = (r.family, r.modulus, r.residue);
            writeln!(out, "spt_{x}({t}n+{res}) ≡ 0 (mod {t}) for n ≤ {}: {} values", r.n_max, r.checked)?;
            if r.spt_failures.is_empty() {
                writeln!(out, "  coefficients mod {t}: pass")?;
            } else {
                writeln!(out, "  coefficients mod {t}: fail at n = {}", list(&r.spt_failures))?;
            }
            match &r.root_failures {
                None => writeln!(out, "  root of unity: not checked ({t} is not a supported prime)")?,
                Some(v) if v.is_empty() => {
                    writeln!(out, "  root of unity: pass; M_{x}(k,{t},n) is the same for every k in each checked n")?
                }
                Some(v) => writeln!(out, "  root of unity: fail at n = {}", list(v))?,
            }
            match r.witness() {
                None => writeln!(out, "verdict: pass")?,
                Some(n) => writeln!(out, "verdict: fail, witness n = {n}")?,
            }
        }
    }
    Ok(r.pass())
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    value: Int,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<Vec<Int>>,
}

pub fn table(out: &mut impl Write, a: TableArgs) -> Outcome {
    let s = spt_series(a.family, a.n_max)?;
    let t = match a.what {
        Column::Spt => None,
        Column::Mresidue => {
            cached_crank_form(CrankForm::Family(a.family), a.n_max)?;
            a.modulus.map(i64::from)
        }
    };
    let mut rows = Vec::with_capacity(a.n_max + 1);
    for n in 0..=a.n_max {
        let m = match t {
            Some(t) => Some((0..t).map(|k| m_residue(a.family, k, t, n)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        rows.push(TableRow { n, value: s.coeffs()[n].clone(), m });
    }
    match a.format {
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["n".to_string(), "value".to_string()];
            header.extend((0..t.unwrap_or(0)).map(|k| format!("m{k}")));
            w.write_record(&header)?;
            for r in &rows {
                let mut rec = vec![r.n.to_string(), r.value.to_string()];
                rec.extend(r.m.iter().flatten().map(Int::to_string));
                w.write_record(&rec)?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

pub fn oracle_check(out: &mut impl Write, a: OracleArgs) -> Outcome {
    let guard = a.kind.default_guard();
    if a.n_max > guard {
        return Err(CliError::Usage(format!("enumeration for {} is limited to n ≤ {guard}", a.kind)));
    }
    let s = generating_series(a.kind, a.n_max as usize)?;
    let mut mismatches = 0;
    let mut values = Vec::new();
    for n in 0..=a.n_max {
        let o = oracle_spt(a.kind, n)?;
        let c = &s.coeffs()[n as usize];
        if &o != c {
            mismatches += 1;
            writeln!(out, "mismatch at n = {n}: series {c}, enumeration {o}")?;
        }
        values.push(o.to_string());
    }
    writeln!(out, "{}: {}", a.kind, values.join(","))?;
    if mismatches == 0 {
        writeln!(out, "pass: series and enumeration agree for 0 ≤ n ≤ {}", a.n_max)?;
    } else {
        writeln!(out, "fail: {mismatches} mismatches")?;
    }
    Ok(mismatches == 0)
}

pub fn scan_nonneg(out: &mut impl Write, a: ScanArgs) -> Outcome {
    let s = cached_crank_form(CrankForm::Family(a.family), a.n_max)?;
    let entries: usize = s.coeffs().iter().take(a.n_max + 1).map(|c| c.terms().count()).sum();
    let neg = negative_coefficients(a.family, a.n_max)?;
    let x = a.family;
    writeln!(out, "{x}: {} negative M_{x}(m,n) among {entries} nonzero entries with n ≤ {}", neg.len(), a.n_max)?;
    for (m, n, v) in neg.iter().take(20) {
        writeln!(out, "  M_{x}({m},{n}) = {v}")?;
    }
    let proved = x == SptFamily::E4;
    if neg.is_empty() {
        writeln!(out, "no negative entries")?;
    } else if proved {
        writeln!(out, "fail: M_{x}(m,n) must be nonnegative")?;
    } else {
        writeln!(out, "finding: negative entries reported for the conjectured nonnegativity")?;
    }
    Ok(neg.is_empty() || !proved)
}

pub fn eval(out: &mut impl Write, a: EvalArgs) -> Outcome {
    let e = expr::parse(&a.expr)?;
    let s = e.eval(a.order)?;
    let cs: Vec<String> = s.coeffs().iter().map(Int::to_string).collect();
    writeln!(out, "{}", cs.join(","))?;
    Ok(true)
}

use num_bigint::BigInt;
use serde_json::{json, Value};

use cubic_core::field::parse_coefficients;
use cubic_core::verify::{self, Check, CheckGroup};
use cubic_core::{
    cubic_data, CountingModel, CubicClass, CubicData, Error, FieldDescriptor, FieldElement, Result,
    SeriesTarget, ThetaSource,
};

use crate::query::{ConstantsArgs, CountArgs, ExampleArgs, FieldArgs, SeriesArgs, VerifyArgs};

/// Largest `--n-terms` accepted by `series`.
pub const MAX_TERMS: usize = 10_000;

/// What a command produced, before rendering.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub tsv: Vec<Vec<String>>,
    pub warnings: Vec<String>,
    /// Set when a verification step did not pass.
    pub failed: bool,
}

/// Arbitrary-size integer as a JSON number.
fn num(v: &BigInt) -> Value {
    Value::Number(
        v.to_string()
            .parse()
            .expect("integers are valid JSON numbers"),
    )
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn build_field(args: &FieldArgs) -> Result<FieldDescriptor> {
    let modulus = args
        .modulus
        .as_deref()
        .map(parse_coefficients)
        .transpose()?;
    let generator = args
        .generator
        .as_deref()
        .map(parse_coefficients)
        .transpose()?;
    FieldDescriptor::from_parts(args.p, args.k, modulus, generator)
}

fn require_cubic_field(field: &FieldDescriptor, command: &str) -> Result<()> {
    if field.q() % 3 != 1 {
        return Err(Error::Domain(format!(
            "{command} needs q = 1 mod 3, got q = {}",
            field.q()
        )));
    }
    Ok(())
}

fn theta_warnings(data: Option<&CubicData>, source: ThetaSource, warnings: &mut Vec<String>) {
    if let Some(d) = data.and_then(CubicData::theta_discrepancy) {
        warnings.push(d.to_string());
        if source == ThetaSource::Paper {
            warnings.push("counts below use the closed-rule theta".to_string());
        }
    }
}

/// A class keyword or an explicit element, with the element's class.
fn resolve_target(
    field: &FieldDescriptor,
    text: &str,
) -> Result<(CubicClass, Option<FieldElement>)> {
    if let Ok(class) = text.parse::<CubicClass>() {
        return Ok((class, None));
    }
    let z = field.parse_element(text)?;
    let class = if z.is_zero() {
        CubicClass::Zero
    } else if field.q() % 3 == 1 {
        field.cube_class(&z)?
    } else {
        CubicClass::C0
    };
    Ok((class, Some(z)))
}

fn noncubic_target(
    field: &FieldDescriptor,
    text: &str,
) -> Result<(CubicClass, Option<FieldElement>)> {
    require_cubic_field(field, "a --y target")?;
    let (class, element) = resolve_target(field, text)?;
    if !class.is_noncubic() {
        return Err(Error::Domain(format!(
            "y = {text} must be a non-cube, got class {class}"
        )));
    }
    Ok((class, element))
}

pub fn constants(args: &ConstantsArgs) -> Result<Outcome> {
    let field = build_field(&args.field)?;
    require_cubic_field(&field, "constants")?;
    let data = cubic_data(&field)?;
    let source = ThetaSource::from(args.theta_source);
    let mut out = Outcome::default();
    theta_warnings(Some(&data), source, &mut out.warnings);

    let r = data.r_pair;
    out.result = json!({
        "q": data.q,
        "p": data.p,
        "k": data.k,
        "modulus": join(field.modulus()),
        "generator": field.generator().to_string(),
        "g_prime": data.g_prime,
        "c": data.c,
        "d": data.d,
        "r1": r.map(|r| r.r1),
        "r2": r.map(|r| r.r2),
        "theta": data.theta.value(),
        "theta_paper": data.theta_paper.value(),
        "theta_used": data.theta_for(source).value(),
        "gauss_cubed_over_q": data.gauss_cubed_over_q.to_string(),
    });
    out.tsv = out
        .result
        .as_object()
        .unwrap()
        .iter()
        .map(|(k, v)| {
            vec![
                k.clone(),
                v.as_str().map_or_else(|| v.to_string(), str::to_string),
            ]
        })
        .collect();
    Ok(out)
}

pub fn count(args: &CountArgs) -> Result<Outcome> {
    let field = build_field(&args.field)?;
    let source = ThetaSource::from(args.theta_source);
    let (target, (class, element)) = match (&args.z, &args.y) {
        (Some(z), None) => ("N", resolve_target(&field, z)?),
        (None, Some(y)) => {
            if args.s < 2 {
                return Err(Error::Domain("T_s needs s >= 2".into()));
            }
            ("T", noncubic_target(&field, y)?)
        }
        _ => {
            return Err(Error::Domain(
                "exactly one of --z and --y is required".into(),
            ))
        }
    };

    let model = CountingModel::new(&field, source)?;
    let value = match target {
        "N" => model.count_n(args.s, class)?,
        _ => model.count_t(args.s, class)?,
    };
    let mut out = Outcome::default();
    theta_warnings(model.data(), source, &mut out.warnings);
    if args.s == 0 {
        out.warnings
            .push("s = 0 uses the empty-sum convention N_0(0) = 1, N_0(z) = 0 otherwise".into());
    }
    out.result = json!({
        "q": field.q(),
        "s": args.s,
        "target": target,
        "class": class.as_str(),
        "element": element.map(|e| e.to_string()),
        "value": num(&value),
    });
    out.tsv = vec![
        vec![
            "q".into(),
            "s".into(),
            "target".into(),
            "class".into(),
            "value".into(),
        ],
        vec![
            field.q().to_string(),
            args.s.to_string(),
            target.into(),
            class.to_string(),
            value.to_string(),
        ],
    ];
    Ok(out)
}

pub fn series(args: &SeriesArgs) -> Result<Outcome> {
    let field = build_field(&args.field)?;
    require_cubic_field(&field, "series")?;
    if args.n_terms == 0 || args.n_terms > MAX_TERMS {
        return Err(Error::Domain(format!(
            "--n-terms must lie in 1..={MAX_TERMS}"
        )));
    }
    let source = ThetaSource::from(args.theta_source);
    let (target, first_s, label, (class, element)) = match (&args.z, &args.y) {
        (Some(z), None) => {
            let (class, element) = resolve_target(&field, z)?;
            (SeriesTarget::N(class), 1u32, "N", (class, element))
        }
        (None, Some(y)) => {
            let (class, element) = noncubic_target(&field, y)?;
            (SeriesTarget::T(class), 2, "T", (class, element))
        }
        _ => {
            return Err(Error::Domain(
                "exactly one of --z and --y is required".into(),
            ))
        }
    };

    let model = CountingModel::new(&field, source)?;
    let window = model.series(target, args.n_terms)?;
    let mut out = Outcome::default();
    theta_warnings(model.data(), source, &mut out.warnings);
    out.result = json!({
        "q": field.q(),
        "target": label,
        "class": class.as_str(),
        "element": element.map(|e| e.to_string()),
        "first_s": first_s,
        "coefficients": window.coefficients.iter().map(num).collect::<Vec<_>>(),
        "recurrence_holds": window.check_recurrence(),
    });
    out.tsv = std::iter::once(vec!["s".to_string(), format!("{label}_s")])
        .chain(
            window
                .coefficients
                .iter()
                .zip(first_s..)
                .map(|(v, s)| vec![s.to_string(), v.to_string()]),
        )
        .collect();
    Ok(out)
}

fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed,
        "observed": c.observed,
        "expected": c.expected,
        "tolerance": c.tolerance,
    })
}

fn check_row(group: &str, c: &Check) -> Vec<String> {
    vec![
        group.to_string(),
        c.name.clone(),
        if c.passed { "PASS" } else { "FAIL" }.to_string(),
        c.observed.clone(),
        c.expected.clone(),
    ]
}

fn group_json(g: &CheckGroup) -> Value {
    json!({
        "name": g.name,
        "passed": g.passed(),
        "checks": g.checks.len(),
        "failures": g.failures().map(check_json).collect::<Vec<_>>(),
        "findings": g.findings,
    })
}

pub fn verify(_args: &VerifyArgs) -> Result<Outcome> {
    let report = verify::run_all()?;
    let mut out = Outcome {
        failed: !report.passed(),
        ..Outcome::default()
    };
    out.result = json!({
        "status": if report.passed() { "PASS" } else { "FAIL" },
        "groups": report.groups.iter().map(group_json).collect::<Vec<_>>(),
    });
    out.tsv = report
        .groups
        .iter()
        .flat_map(|g| g.checks.iter().map(|c| check_row(&g.name, c)))
        .collect();
    out.warnings = report
        .groups
        .iter()
        .flat_map(|g| g.findings.clone())
        .collect();
    Ok(out)
}

pub fn reproduce_example(args: &ExampleArgs) -> Result<Outcome> {
    let source = ThetaSource::from(args.theta_source);
    let group = verify::reproduce_example(source)?;
    let status = if group.passed() { "PASS" } else { "FAIL" };
    Ok(Outcome {
        result: json!({
            "status": status,
            "theta_source": source.as_str(),
            "checks": group.checks.iter().map(check_json).collect::<Vec<_>>(),
        }),
        tsv: group
            .checks
            .iter()
            .map(|c| check_row(&group.name, c))
            .chain(std::iter::once(vec![status.to_string()]))
            .collect(),
        warnings: Vec::new(),
        failed: !group.passed(),
    })
}

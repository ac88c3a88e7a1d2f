use bbcells::graded::{bb_plus, fixed_locus, open_immersion_check, GradedPresentation};
use bbcells::io::PresentationSpec;
use bbcells::truncation::{algebraize_check, kempf_degree, stabilization_check, truncate, MonomialQuotient};
use bbcells::{AffineMonoid, IntVector};
use num_bigint::Sign;

use crate::error::CliError;
use crate::output::{list, table, Output};

fn presentation_output(p: &GradedPresentation) -> Output {
    let spec = PresentationSpec::from_presentation(p);
    let mut text = String::new();
    let rows: Vec<Vec<String>> = spec
        .variables
        .iter()
        .map(|v| vec![v.name.clone(), v.weight.to_string()])
        .collect();
    text += &table(&["variable", "weight"], &rows);
    text += "relations:\n";
    if spec.relations.is_empty() {
        text += "  (none)\n";
    }
    for r in &spec.relations {
        text += &format!("  {r}\n");
    }
    Output::new(&spec, text)
}

pub fn bbplus(p: &GradedPresentation, s: &AffineMonoid) -> Result<Output, CliError> {
    Ok(presentation_output(&bb_plus(p, s)?))
}

pub fn fixed(p: &GradedPresentation) -> Result<Output, CliError> {
    Ok(presentation_output(&fixed_locus(p)))
}

pub fn check(p: &GradedPresentation, s: &AffineMonoid) -> Result<Output, CliError> {
    let report = open_immersion_check(p, s)?;
    let text = format!(
        "open immersion      {}\noutsider variables  {}\n",
        if report.open_immersion { "yes" } else { "no" },
        list(&report.outsider_variables)
    );
    Ok(Output::new(&report, text))
}

pub fn truncate_cmd(q: &MonomialQuotient, s: &AffineMonoid, level: usize) -> Result<Output, CliError> {
    let t = truncate(q, s, level)?;
    let mut text = format!("kempf vector  {}\n", t.kempf_vector.vector());
    text += &format!("level         {level}\n");
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|((_, w), d)| vec![w.to_string(), t.kempf_vector.degree(w).to_string(), d.to_string()])
        .collect();
    text += &table(&["weight", "kempf degree", "dimension"], &rows);
    Ok(Output::new(&t, text))
}

pub fn stabilize(q: &MonomialQuotient, s: &AffineMonoid, weight: &IntVector, n_max: Option<usize>) -> Result<Output, CliError> {
    let n_max = match n_max {
        Some(n) => n,
        None => {
            let k = kempf_degree(s, weight)?;
            let base = match k.sign() {
                Sign::Minus => 0,
                _ => usize::try_from(&k).map_err(|_| CliError::new("degree_overflow", format!("Kempf degree {k} is too large to enumerate")))?,
            };
            base + 2
        }
    };
    let r = stabilization_check(q, s, weight, n_max)?;
    let mut text = format!("weight     {}\nn_lambda   {}\n", r.weight, r.n_lambda);
    let rows: Vec<Vec<String>> = r
        .dimensions
        .iter()
        .enumerate()
        .map(|(n, d)| vec![n.to_string(), d.to_string()])
        .collect();
    text += &table(&["level", "dimension"], &rows);
    text += &format!(
        "monotone   {}\nstable     {}\nlimit      {}\n",
        yes_no(r.monotone),
        yes_no(r.stable),
        r.limit
    );
    Ok(Output::new(&r, text))
}

pub fn algebraize(q: &MonomialQuotient, s: &AffineMonoid, bound: usize) -> Result<Output, CliError> {
    let r = algebraize_check(q, s, bound)?;
    let text = format!(
        "weight bound     {}\nweights checked  {}\nholds            {}\nmismatches       {}\n",
        r.weight_bound,
        r.weights_checked,
        yes_no(r.holds),
        list(&r.mismatches)
    );
    Ok(Output::new(&r, text))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

use bbcells::{AffineMonoid, IntVector, KempfVector};
use serde::Serialize;

use crate::error::CliError;
use crate::output::{list, Output};

#[derive(Serialize)]
struct Analysis<'a> {
    rank: usize,
    generators: &'a [IntVector],
    facet_normals: &'a [IntVector],
    equations: &'a [IntVector],
    units: &'a [IntVector],
    has_zero: bool,
    kempf_vector: Option<KempfVector>,
}

pub fn analyze(s: &AffineMonoid) -> Result<Output, CliError> {
    let kempf = s.kempf_vector().ok();
    let payload = Analysis {
        rank: s.rank(),
        generators: s.generators(),
        facet_normals: s.facet_normals(),
        equations: s.equations(),
        units: s.units(),
        has_zero: s.has_zero(),
        kempf_vector: kempf.clone(),
    };
    let mut text = format!("rank           {}\n", s.rank());
    text += &format!("generators     {}\n", list(s.generators()));
    text += &format!("facet normals  {}\n", list(s.facet_normals()));
    text += &format!("equations      {}\n", list(s.equations()));
    text += &format!("units          {}\n", list(s.units()));
    text += &format!("has zero       {}\n", if s.has_zero() { "yes" } else { "no" });
    text += &format!(
        "kempf vector   {}\n",
        kempf.map_or_else(|| "(none: monoid has units)".to_string(), |k| k.vector().to_string())
    );
    Ok(Output::new(&payload, text))
}

pub fn reduce(s: &AffineMonoid) -> Result<Output, CliError> {
    let p = s.reduce_to_zero();
    let mut text = format!("projection Z^{} -> Z^{}\n", p.source_rank, p.target_rank);
    for row in &p.matrix {
        text += &format!("  {row}\n");
    }
    let image = &p.image_monoid;
    text += &format!("image generators     {}\n", list(image.generators()));
    text += &format!("image facet normals  {}\n", list(image.facet_normals()));
    if let (true, Ok(k)) = (image.rank() > 0, image.kempf_vector()) {
        text += &format!("image kempf vector   {}\n", k.vector());
    }
    Ok(Output::new(&p, text))
}

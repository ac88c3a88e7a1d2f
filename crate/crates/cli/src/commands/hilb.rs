use bbcells::hilb::{
    cell_dimension_of, intersection_dimension_of, partitions, poincare_polynomial, tangent_character_armleg,
    tangent_character_linalg, BigradedCharacter, MonomialIdealPlane, Partition, WeightVector2,
};
use serde::Serialize;

use crate::error::CliError;
use crate::output::{table, Output};

/// Colength argument: negative values are a domain error, not a usage error.
pub fn colength(d: i64) -> Result<usize, CliError> {
    usize::try_from(d).map_err(|_| CliError::new("invalid_colength", format!("colength must be nonnegative, got {d}")))
}

fn pair(w: WeightVector2) -> [i64; 2] {
    let (a, b) = w.components();
    [a, b]
}

fn show(w: WeightVector2) -> String {
    let (a, b) = w.components();
    format!("({a}, {b})")
}

fn ideals(d: usize) -> Vec<(Partition, MonomialIdealPlane)> {
    partitions(d)
        .into_iter()
        .map(|p| {
            let m = MonomialIdealPlane::from_partition(&p);
            (p, m)
        })
        .collect()
}

pub fn fixed_points(d: usize) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Point {
        partition: Partition,
        generators: Vec<String>,
    }
    #[derive(Serialize)]
    struct Payload {
        d: usize,
        count: usize,
        fixed_points: Vec<Point>,
    }
    let points: Vec<Point> = ideals(d)
        .into_iter()
        .map(|(partition, m)| Point {
            partition,
            generators: m.generator_strings(),
        })
        .collect();
    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|p| vec![p.partition.to_string(), p.generators.join(", ")])
        .collect();
    let text = table(&["partition", "ideal generators"], &rows) + &format!("{} fixed points\n", points.len());
    Ok(Output::new(
        &Payload {
            d,
            count: points.len(),
            fixed_points: points,
        },
        text,
    ))
}

fn show_character(c: &BigradedCharacter) -> String {
    c.entries()
        .iter()
        .map(|(&(a, b), &m)| if m == 1 { format!("({a},{b})") } else { format!("{m}*({a},{b})") })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn tangent(d: usize) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Point {
        partition: Partition,
        character: BigradedCharacter,
    }
    #[derive(Serialize)]
    struct Payload {
        d: usize,
        oracles_agree: bool,
        tangent_spaces: Vec<Point>,
    }
    let mut agree = true;
    let points: Vec<Point> = ideals(d)
        .into_iter()
        .map(|(partition, m)| {
            let character = tangent_character_linalg(&m);
            agree &= character == tangent_character_armleg(&m);
            Point { partition, character }
        })
        .collect();
    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|p| vec![p.partition.to_string(), p.character.total().to_string(), show_character(&p.character)])
        .collect();
    let text = table(&["partition", "dim", "weights"], &rows)
        + &format!("arm/leg cross-check  {}\n", if agree { "agrees" } else { "DISAGREES" });
    Ok(Output::new(
        &Payload {
            d,
            oracles_agree: agree,
            tangent_spaces: points,
        },
        text,
    ))
}

pub fn cells(d: usize, w: WeightVector2) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Cell {
        partition: Partition,
        dimension: usize,
    }
    #[derive(Serialize)]
    struct Payload {
        d: usize,
        weight: [i64; 2],
        generic: bool,
        cells: Vec<Cell>,
    }
    let mut generic = true;
    let cells: Vec<Cell> = ideals(d)
        .into_iter()
        .map(|(partition, m)| {
            let c = cell_dimension_of(&tangent_character_linalg(&m), w);
            generic &= c.generic;
            Cell {
                partition,
                dimension: c.dimension,
            }
        })
        .collect();
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|c| vec![c.partition.to_string(), c.dimension.to_string()])
        .collect();
    let mut text = format!("weight {}\n", show(w)) + &table(&["partition", "cell dimension"], &rows);
    if !generic {
        text += "warning: weight is not generic; some tangent weight pairs to zero\n";
    }
    Ok(Output::new(
        &Payload {
            d,
            weight: pair(w),
            generic,
            cells,
        },
        text,
    ))
}

pub fn intersect(d: usize, w1: WeightVector2, w2: WeightVector2) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Row {
        partition: Partition,
        dimension: usize,
        cell_dimensions: [usize; 2],
    }
    #[derive(Serialize)]
    struct Payload {
        d: usize,
        weights: [[i64; 2]; 2],
        intersections: Vec<Row>,
    }
    let rows: Vec<Row> = ideals(d)
        .into_iter()
        .map(|(partition, m)| {
            let c = tangent_character_linalg(&m);
            Row {
                partition,
                dimension: intersection_dimension_of(&c, w1, w2),
                cell_dimensions: [cell_dimension_of(&c, w1).dimension, cell_dimension_of(&c, w2).dimension],
            }
        })
        .collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.partition.to_string(),
                r.cell_dimensions[0].to_string(),
                r.cell_dimensions[1].to_string(),
                r.dimension.to_string(),
            ]
        })
        .collect();
    let text = format!("weights {} and {}\n", show(w1), show(w2))
        + &table(&["partition", "cell 1", "cell 2", "intersection"], &cells);
    Ok(Output::new(
        &Payload {
            d,
            weights: [pair(w1), pair(w2)],
            intersections: rows,
        },
        text,
    ))
}

pub fn poincare(d: usize, w: WeightVector2) -> Result<Output, CliError> {
    #[derive(Serialize)]
    struct Bin {
        dimension: usize,
        count: usize,
    }
    #[derive(Serialize)]
    struct Payload {
        d: usize,
        weight: [i64; 2],
        histogram: Vec<Bin>,
    }
    let histogram: Vec<Bin> = poincare_polynomial(d, w)?
        .into_iter()
        .map(|(dimension, count)| Bin { dimension, count })
        .collect();
    let rows: Vec<Vec<String>> = histogram
        .iter()
        .map(|b| vec![b.dimension.to_string(), b.count.to_string()])
        .collect();
    let terms: Vec<String> = histogram
        .iter()
        .rev()
        .map(|b| match (b.count, b.dimension) {
            (c, 0) => c.to_string(),
            (1, k) => format!("q^{k}"),
            (c, k) => format!("{c}*q^{k}"),
        })
        .collect();
    let text = format!("weight {}\n", show(w))
        + &table(&["dimension", "cells"], &rows)
        + &format!("sum over cells of q^dim = {}\n", terms.join(" + "));
    Ok(Output::new(
        &Payload {
            d,
            weight: pair(w),
            histogram,
        },
        text,
    ))
}

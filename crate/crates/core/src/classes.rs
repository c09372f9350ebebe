//! Named graph classes: the hypothesis of every coloring theorem plus a few
//! convenience classes, addressable by a string id.

use serde::{Deserialize, Serialize};

use crate::detect::{ClassParams, ClassSpec, Conditions};
use crate::error::{Error, Result};
use crate::patterns::{self, PatternId, PatternInstance, PatternParams, StarConvention};
use crate::properties::{hypothesis, PropertyId, PropertyParams};

/// Which of `F¹_t`, `F²_t` the second coloring theorem forbids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum YChoice {
    #[default]
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassArgs {
    #[serde(default = "two")]
    pub s: usize,
    #[serde(default = "two")]
    pub t: usize,
    #[serde(default = "two")]
    pub k: usize,
    #[serde(default)]
    pub y: YChoice,
    #[serde(default)]
    pub star: StarConvention,
}

fn two() -> usize {
    2
}

impl Default for ClassArgs {
    fn default() -> Self {
        Self {
            s: 2,
            t: 2,
            k: 2,
            y: YChoice::F1,
            star: StarConvention::Vertices,
        }
    }
}

pub const CLASS_IDS: [&str; 9] = [
    "all",
    "diamond-free",
    "thm1",
    "thm2",
    "thm3",
    "thm4",
    "thm5a",
    "thm5b",
    "<property id>",
];

pub(crate) fn pattern(id: PatternId, params: &[(&str, usize)], star: StarConvention) -> Result<PatternInstance> {
    let mut p = PatternParams {
        star,
        ..Default::default()
    };
    for &(name, value) in params {
        match name {
            "s" => p.s = Some(value),
            "t" => p.t = Some(value),
            "k" => p.k = Some(value),
            _ => p.l = Some(value),
        }
    }
    PatternInstance::build(id, &p)
}

fn diamond() -> PatternInstance {
    PatternInstance::fixed(PatternId::Diamond, patterns::diamond())
}

/// Looks up a class by id. Property ids (`P1`, …, `D1`, `P-property`) give
/// that property's hypothesis.
pub fn class_by_id(id: &str, a: &ClassArgs) -> Result<ClassSpec> {
    let star = a.star;
    let params = ClassParams {
        s: Some(a.s),
        t: Some(a.t),
        k: Some(a.k),
    };
    let p5 = || pattern(PatternId::Path, &[("l", 5)], star);
    let forbidden = match id.to_ascii_lowercase().as_str() {
        "all" => vec![],
        "diamond-free" => vec![diamond()],
        "thm1" => vec![diamond(), pattern(PatternId::HammerPlus, &[("t", a.t)], star)?],
        "thm2" => {
            let y = match a.y {
                YChoice::F1 => pattern(PatternId::F1, &[("t", a.t)], star)?,
                YChoice::F2 => pattern(PatternId::F2, &[("t", a.t)], star)?,
            };
            vec![
                y,
                pattern(PatternId::Bowtie, &[("s", a.s), ("t", a.t)], star)?,
                pattern(PatternId::LollipopStar, &[("k", a.k), ("t", a.t)], star)?,
            ]
        }
        "thm3" => vec![
            pattern(PatternId::Bowtie, &[("s", a.s), ("t", a.t)], star)?,
            p5()?,
            pattern(PatternId::Dumbbell, &[("s", a.s + 1), ("t", a.t + 1)], star)?,
        ],
        "thm4" => vec![
            pattern(PatternId::Bowtie, &[("s", 2), ("t", 2)], star)?,
            p5()?,
            pattern(PatternId::Dumbbell, &[("s", 3), ("t", 3)], star)?,
        ],
        "thm5a" => {
            return Ok(ClassSpec::new(
                "thm5a",
                vec![diamond(), pattern(PatternId::FanTriangles, &[("l", a.k)], star)?],
            )
            .with_conditions(Conditions {
                every_edge_in_two_triangles: true,
                min_omega: Some(4),
            })
            .with_params(params))
        }
        "thm5b" => {
            return Ok(ClassSpec::new(
                "thm5b",
                vec![diamond(), pattern(PatternId::Dumbbell, &[("s", 4), ("t", 4)], star)?],
            )
            .with_conditions(Conditions {
                every_edge_in_two_triangles: true,
                min_omega: None,
            })
            .with_params(params))
        }
        _ => {
            let prop: PropertyId = id
                .parse()
                .map_err(|_| Error::Config(format!("unknown class id '{id}'")))?;
            let pp = PropertyParams {
                s: a.s,
                t: a.t,
                k: a.k,
                star,
                ..Default::default()
            };
            return hypothesis(prop, &pp);
        }
    };
    Ok(ClassSpec::new(id.to_ascii_lowercase(), forbidden).with_params(params))
}

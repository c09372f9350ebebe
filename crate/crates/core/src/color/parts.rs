//! Colorers that give every decomposition part its own palette block.

use crate::bitset::VertexSet;
use crate::classes::ClassArgs;
use crate::decompose::{decompose_auto, CliqueDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::clique_number;

use super::{bounds, certificate, color_components, require_member, ColorOptions, ColoringCertificate, Ctx, Finish, Paint, TheoremId};

#[derive(Clone, Copy)]
enum Mode {
    /// Base colorer; counts towards `C`.
    Base,
    /// Exact coloring of a part whose width the construction bounds itself.
    Exact,
}

fn fmt_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Colors `K` with `1..=ω`.
fn paint_k(paint: &mut Paint, dec: &CliqueDecomposition, depth: usize) {
    let mut local = vec![0; paint.colors.len()];
    for (i, v) in dec.k.iter().enumerate() {
        local[v] = i + 1;
    }
    paint.place(&dec.k, &local, "K", depth, 0, Some(dec.omega() as u128));
}

/// Lays the parts out one after another starting at color `ω + 1`.
fn paint_blocks(
    g: &Graph,
    paint: &mut Paint,
    ctx: &mut Ctx,
    blocks: Vec<(String, VertexSet, Mode, Option<u128>)>,
    start: usize,
    depth: usize,
) -> Result<usize> {
    let mut offset = start;
    for (label, set, mode, claimed) in blocks {
        if set.is_empty() {
            continue;
        }
        let (_, local) = match mode {
            Mode::Base => ctx.base(g, &set)?,
            Mode::Exact => ctx.exact(g, &set)?,
        };
        offset += paint.place(&set, &local, &label, depth, offset, claimed);
    }
    Ok(offset)
}

fn t_groups(dec: &CliqueDecomposition, mode: Mode, claimed: Option<u128>) -> Vec<(String, VertexSet, Mode, Option<u128>)> {
    dec.canonical_groups()
        .into_iter()
        .map(|((n, v), members)| (format!("T[N={},v={v}]", fmt_set(&n)), members, mode, claimed))
        .collect()
}

pub(super) fn base_all(g: &Graph, ctx: &mut Ctx, depth: usize) -> Result<Paint> {
    let mut paint = Paint::new(g.n());
    let (_, local) = ctx.base(g, &g.vertices())?;
    paint.place(&g.vertices(), &local, "base", depth, 0, None);
    Ok(paint)
}

fn thm1_rec(g: &Graph, t: usize, depth: usize, ctx: &mut Ctx) -> Result<Paint> {
    let omega = clique_number(g);
    if omega <= t {
        return base_all(g, ctx, depth);
    }
    let dec = decompose_auto(g, t)?;
    if !dec.s.is_empty() {
        return Err(Error::StructuralGap(format!(
            "S = {:?} is nonempty in a diamond-free graph with omega = {omega}",
            dec.s.to_vec()
        )));
    }
    let mut paint = Paint::new(g.n());
    paint_k(&mut paint, &dec, depth);
    let w = Some(omega as u128);
    let mut blocks = t_groups(&dec, Mode::Exact, w);
    blocks.push(("T'".into(), dec.t_prime, Mode::Exact, w));
    paint_blocks(g, &mut paint, ctx, blocks, omega, depth)?;
    color_components(g, &dec.residual, &mut paint, |h, _| thm1_rec(h, t, depth + 1, ctx))?;
    Ok(paint)
}

/// Colors a `{diamond, hammer(t)+}`-free graph.
pub fn color_thm1(g: &Graph, t: usize, opts: &ColorOptions) -> Result<ColoringCertificate> {
    if t < 2 {
        return Err(Error::ThresholdTooSmall(t));
    }
    let args = ClassArgs {
        t,
        ..Default::default()
    };
    require_member(g, &TheoremId::Thm1.class(&args)?)?;
    let mut ctx = Ctx::new(*opts);
    let mut paint = thm1_rec(g, t, 0, &mut ctx)?;
    paint
        .notes
        .push("C is drawn on only by base calls on subgraphs with omega <= t".into());
    let omega = clique_number(g);
    let c_value = ctx.c_value();
    certificate(
        g,
        paint,
        Finish {
            theorem: TheoremId::Thm1,
            omega,
            c_value,
            bound_value: bounds::thm1(omega, t, c_value)?,
            strict_budget: None,
        },
    )
}

fn thm3_rec(g: &Graph, t: usize, depth: usize, ctx: &mut Ctx) -> Result<Paint> {
    let omega = clique_number(g);
    if omega <= 2 * t - 2 {
        return base_all(g, ctx, depth);
    }
    let dec = decompose_auto(g, t)?;
    let mut paint = Paint::new(g.n());
    paint_k(&mut paint, &dec, depth);
    let mut blocks: Vec<_> = dec
        .a_m
        .iter()
        .map(|(m, members)| (format!("S[M={}]", fmt_set(m)), *members, Mode::Base, None))
        .collect();
    blocks.extend(t_groups(&dec, Mode::Base, None));
    blocks.push(("S'".into(), dec.s_prime, Mode::Base, None));
    blocks.push(("T'".into(), dec.t_prime, Mode::Base, None));
    paint_blocks(g, &mut paint, ctx, blocks, omega, depth)?;
    color_components(g, &dec.residual, &mut paint, |h, _| thm3_rec(h, t, depth + 1, ctx))?;
    Ok(paint)
}

/// Colors a `{(s,t)-bowtie, P5, (s+1,t+1)-dumbbell}`-free graph.
pub fn color_thm3(g: &Graph, s: usize, t: usize, opts: &ColorOptions) -> Result<ColoringCertificate> {
    if s < 2 || t < 2 {
        return Err(Error::Config(format!("need s, t >= 2 (got s = {s}, t = {t})")));
    }
    let args = ClassArgs {
        s,
        t,
        ..Default::default()
    };
    require_member(g, &TheoremId::Thm3.class(&args)?)?;
    let mut ctx = Ctx::new(*opts);
    let paint = thm3_rec(g, t, 0, &mut ctx)?;
    let omega = clique_number(g);
    let c_value = ctx.c_value();
    certificate(
        g,
        paint,
        Finish {
            theorem: TheoremId::Thm3,
            omega,
            c_value,
            bound_value: bounds::thm3(omega, t, c_value)?,
            strict_budget: None,
        },
    )
}

fn thm4_rec(g: &Graph, depth: usize, ctx: &mut Ctx) -> Result<Paint> {
    let omega = clique_number(g);
    if omega < 3 {
        let mut paint = Paint::new(g.n());
        let (_, local) = ctx.exact(g, &g.vertices())?;
        paint.place(&g.vertices(), &local, "exact", depth, 0, None);
        return Ok(paint);
    }
    let dec = decompose_auto(g, 2)?;
    let mut paint = Paint::new(g.n());
    paint_k(&mut paint, &dec, depth);
    let one = Some(1);
    let mut blocks: Vec<_> = dec
        .a_m
        .iter()
        .map(|(m, members)| (format!("S[M={}]", fmt_set(m)), *members, Mode::Exact, one))
        .collect();
    blocks.extend(t_groups(&dec, Mode::Exact, one));
    blocks.push(("S'".into(), dec.s_prime, Mode::Exact, one));
    blocks.push(("T'".into(), dec.t_prime, Mode::Exact, one));
    paint_blocks(g, &mut paint, ctx, blocks, omega, depth)?;
    color_components(g, &dec.residual, &mut paint, |h, _| thm4_rec(h, depth + 1, ctx))?;
    Ok(paint)
}

/// Colors a `{(2,2)-bowtie, P5, (3,3)-dumbbell}`-free graph. Graphs with
/// `ω < 3` are colored exactly and the certificate says so.
pub fn color_thm4(g: &Graph, opts: &ColorOptions) -> Result<ColoringCertificate> {
    require_member(g, &TheoremId::Thm4.class(&ClassArgs::default())?)?;
    let mut ctx = Ctx::new(*opts);
    let mut paint = thm4_rec(g, 0, &mut ctx)?;
    let omega = clique_number(g);
    if omega < 3 {
        paint
            .notes
            .push(format!("hypothesis omega >= 3 not met (omega = {omega}); exact oracle used"));
    }
    certificate(
        g,
        paint,
        Finish {
            theorem: TheoremId::Thm4,
            omega,
            c_value: 0,
            bound_value: bounds::thm4(omega)?,
            strict_budget: None,
        },
    )
}

//! Colorers that color everything away from a core recursively and then lift
//! each core vertex into a block of colors reserved for its core color.

use crate::bitset::VertexSet;
use crate::classes::ClassArgs;
use crate::decompose::decompose_auto;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{clique_number, lex_min_max_clique};

use super::parts::base_all;
use super::{bounds, certificate, require_member, BlockRecord, ColorOptions, ColoringCertificate, Ctx, Finish, Paint, TheoremId, TraceStep};

/// Core coloring to be lifted: color, part label, and block record per group.
struct Core {
    set: VertexSet,
    c2: Vec<usize>,
    label: Vec<String>,
    groups: Vec<(String, usize, usize)>,
}

impl Core {
    fn new(n: usize) -> Self {
        Self {
            set: VertexSet::new(),
            c2: vec![0; n],
            label: vec![String::new(); n],
            groups: Vec::new(),
        }
    }

    fn add(&mut self, set: &VertexSet, local: &[usize], label: &str, offset: usize) -> usize {
        let width = set.iter().map(|v| local[v]).max().unwrap_or(0);
        for v in set.iter() {
            self.set.insert(v);
            self.c2[v] = offset + local[v];
            self.label[v] = label.to_string();
        }
        self.groups.push((label.to_string(), offset, width));
        width
    }
}

/// Gives each core vertex the smallest color of its block that no neighbor
/// outside the core already carries.
fn lift(
    g: &Graph,
    paint: &mut Paint,
    core: &Core,
    block: usize,
    depth: usize,
    origin: &[usize],
    degree_claim: Option<(usize, &str)>,
) -> Result<()> {
    for v in core.set.iter() {
        let outside = g.neighbors(v).difference(&core.set);
        let mut used: Vec<usize> = outside.iter().map(|u| paint.colors[u]).collect();
        used.sort_unstable();
        used.dedup();
        if let Some((limit, what)) = degree_claim {
            if outside.len() > limit {
                paint.findings.push(format!(
                    "vertex {} has {} neighbors outside the core, {what} allows {limit}",
                    origin[v],
                    outside.len()
                ));
            }
        }
        let start = block * (core.c2[v] - 1) + 1;
        let color = (start..start + block)
            .find(|c| used.binary_search(c).is_err())
            .ok_or(Error::LiftFailure {
                vertex: origin[v],
                outside_degree: outside.len(),
                outside_colors: used.len(),
                block,
            })?;
        paint.colors[v] = color;
        paint.trace.push(TraceStep {
            vertex: v,
            set: format!("{} (lifted)", core.label[v]),
            depth,
            block_offset: (start - 1) as u128,
        });
    }
    for (label, offset, width) in &core.groups {
        paint.blocks.push(BlockRecord {
            label: format!("{label} (lifted)"),
            depth,
            offset: (block * offset) as u128,
            width: block * width,
            claimed: None,
        });
    }
    Ok(())
}

fn recurse_rest<F>(g: &Graph, rest: &VertexSet, paint: &mut Paint, origin: &[usize], f: F) -> Result<()>
where
    F: FnOnce(&Graph, &[usize]) -> Result<Paint>,
{
    if rest.is_empty() {
        return Ok(());
    }
    let (h, map) = g.induced_subgraph(rest)?;
    let sub_origin: Vec<usize> = map.iter().map(|&i| origin[i]).collect();
    let sub = f(&h, &sub_origin)?;
    paint.absorb(sub, &map);
    Ok(())
}

fn thm2_rec(g: &Graph, a: &ClassArgs, depth: usize, ctx: &mut Ctx, origin: &[usize]) -> Result<Paint> {
    let omega = clique_number(g);
    if omega <= 2 * a.t - 2 {
        return base_all(g, ctx, depth);
    }
    let dec = decompose_auto(g, a.t)?;
    let mut core = Core::new(g.n());
    let mut local = vec![0; g.n()];
    for (i, v) in dec.k.iter().enumerate() {
        local[v] = i + 1;
    }
    let mut offset = core.add(&dec.k, &local, "K", 0);
    for ((n, v), members) in dec.canonical_groups() {
        let (_, local) = ctx.base(g, &members)?;
        let label = format!("T[N={:?},v={v}]", n.to_vec());
        offset += core.add(&members, &local, &label, offset);
    }

    let mut paint = Paint::new(g.n());
    let rest = g.vertices().difference(&core.set);
    recurse_rest(g, &rest, &mut paint, origin, |h, o| thm2_rec(h, a, depth + 1, ctx, o))?;

    let alpha = bounds::thm2_alpha(omega, a.t, a.k)?;
    let alpha = usize::try_from(alpha).map_err(|_| Error::Overflow("alpha"))?;
    let claim = (depth == 0).then_some((alpha - 1, "the degree bound alpha - 1"));
    lift(g, &mut paint, &core, alpha, depth, origin, claim)?;
    Ok(paint)
}

/// Colors a `{Y, (s,t)-bowtie, (k,t)-lollipop}`-free graph, `Y` being
/// `F¹_t` or `F²_t` as chosen in `args.y`.
pub fn color_thm2(g: &Graph, args: &ClassArgs, opts: &ColorOptions) -> Result<ColoringCertificate> {
    if args.s < 2 || args.t < 2 || args.k < 2 {
        return Err(Error::Config(format!(
            "need s, t, k >= 2 (got s = {}, t = {}, k = {})",
            args.s, args.t, args.k
        )));
    }
    require_member(g, &TheoremId::Thm2.class(args)?)?;
    let mut ctx = Ctx::new(*opts);
    let origin: Vec<usize> = (0..g.n()).collect();
    let mut paint = thm2_rec(g, args, 0, &mut ctx, &origin)?;
    paint
        .notes
        .push("R(omega-1, k) is taken as its binomial upper bound".into());
    let omega = clique_number(g);
    let c_value = ctx.c_value();
    certificate(
        g,
        paint,
        Finish {
            theorem: TheoremId::Thm2,
            omega,
            c_value,
            bound_value: bounds::thm2(omega, args.t, args.k, c_value)?,
            strict_budget: None,
        },
    )
}

fn thm5a_rec(g: &Graph, k: usize, depth: usize, ctx: &mut Ctx, origin: &[usize]) -> Result<Paint> {
    let omega = clique_number(g);
    if omega <= 3 {
        let mut paint = Paint::new(g.n());
        let (_, local) = ctx.exact(g, &g.vertices())?;
        paint.place(&g.vertices(), &local, "exact", depth, 0, None);
        return Ok(paint);
    }
    let kk = lex_min_max_clique(g);
    let mut core = Core::new(g.n());
    let mut local = vec![0; g.n()];
    for (i, v) in kk.iter().enumerate() {
        local[v] = i + 1;
    }
    core.add(&kk, &local, "K", 0);

    let mut paint = Paint::new(g.n());
    let rest = g.vertices().difference(&kk);
    recurse_rest(g, &rest, &mut paint, origin, |h, o| thm5a_rec(h, k, depth + 1, ctx, o))?;

    let alpha = bounds::thm5a_alpha(omega, k) as usize;
    // fewer than k - 1 outside blades, each adding at most omega - 1 neighbors
    let claim = (depth == 0).then_some(((k - 2) * (omega - 1), "the blade count bound (k-2)(omega-1)"));
    lift(g, &mut paint, &core, alpha + 1, depth, origin, claim)?;
    Ok(paint)
}

/// Colors a diamond-free, `F(3,k)`-free graph with every edge in at least
/// two triangles and `ω >= 4`.
pub fn color_thm5a(g: &Graph, k: usize, opts: &ColorOptions) -> Result<ColoringCertificate> {
    if k < 2 {
        return Err(Error::Config(format!("need k >= 2 (got {k})")));
    }
    let args = ClassArgs {
        k,
        ..Default::default()
    };
    require_member(g, &TheoremId::Thm5a.class(&args)?)?;
    let mut ctx = Ctx::new(*opts);
    let origin: Vec<usize> = (0..g.n()).collect();
    let mut paint = thm5a_rec(g, k, 0, &mut ctx, &origin)?;
    let omega = clique_number(g);
    let bound = bounds::thm5a(omega, k);
    let strict = bounds::thm5a_g(omega, k);
    let max_color = paint.colors.iter().copied().max().unwrap_or(0) as u128;
    paint.notes.push(format!(
        "budgets: max((alpha+1)*omega, g(omega)) = {bound}, g(omega) = {strict}; construction used {max_color}"
    ));
    if max_color > strict {
        paint
            .findings
            .push(format!("palette {max_color} exceeds the strict budget g(omega) = {strict}"));
    }
    certificate(
        g,
        paint,
        Finish {
            theorem: TheoremId::Thm5a,
            omega,
            c_value: 0,
            bound_value: bound,
            strict_budget: Some(strict),
        },
    )
}

//! Subcommand bodies. Each fills a report and returns the human text.

use std::fmt::Write as _;

use branch_forge::catalog::{serialize, suite};
use branch_forge::completions::{
    connecting_matrix, in_closure_of_derived, kernel_span, BoundSuite, KernelOptions,
};
use branch_forge::linalg::{smith_normal_form, IntMatrix};
use branch_forge::permgrp::abelian_invariants_finite;
use branch_forge::tree::{nucleus, parse_word};
use branch_forge::{GroupDef, Limits, Policy, Result};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::report::{table, Check, Report};

pub struct Ctx {
    pub limits: Limits,
    pub cache: Cache,
}

fn inv_text(xs: &[u64]) -> String {
    if xs.is_empty() {
        "trivial".into()
    } else {
        format!("{xs:?}")
    }
}

pub fn info(def: &GroupDef, r: &mut Report) -> Result<String> {
    let gens: Vec<Value> = def
        .generators()
        .iter()
        .map(|g| {
            json!({
                "name": g.name,
                "perm": GroupDef::format_letter_perm(&g.perm),
                "sections": g.sections.iter().map(|w| def.format_word(w)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let endos: Vec<&str> = def
        .endomorphisms()
        .iter()
        .map(|e| e.name.as_str())
        .collect();
    let text = serialize(def);
    r.result = json!({
        "alphabet": def.degree(),
        "action": format!("{:?}", def.action()).to_lowercase(),
        "generators": gens,
        "endomorphisms": endos,
        "definition": text,
    });
    Ok(text)
}

pub fn order(def: &GroupDef, level: usize, ctx: &mut Ctx, r: &mut Report) -> Result<String> {
    let g = ctx.cache.level_group(def, level, &ctx.limits)?;
    let order = g.order().to_string();
    r.result = json!({
        "level": level,
        "degree": g.degree(),
        "order": order,
        "base": g.base(),
        "transversal_sizes": g.transversal_sizes(),
    });
    Ok(format!("|G_{level}| = {order}\n"))
}

pub fn stab_series(def: &GroupDef, levels: usize, ctx: &mut Ctx, r: &mut Report) -> Result<String> {
    let mut orders = Vec::new();
    let mut abelian = Vec::new();
    for n in 0..=levels {
        let g = ctx.cache.level_group(def, n, &ctx.limits)?;
        abelian.push(abelian_invariants_finite(&g, ctx.limits.abelian_cap)?);
        orders.push(g.order());
    }
    let quotients: Vec<String> = orders
        .windows(2)
        .map(|w| (&w[1] / &w[0]).to_string())
        .collect();
    let mut rows = Vec::new();
    for n in 0..=levels {
        rows.push(vec![
            n.to_string(),
            orders[n].to_string(),
            quotients.get(n).cloned().unwrap_or_default(),
            inv_text(&abelian[n]),
        ]);
    }
    r.result = json!({
        "orders": orders.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "quotients": quotients,
        "abelian": abelian,
    });
    Ok(table(
        &["n", "|G_n|", "|stab(n)/stab(n+1)|", "G_n/G_n'"],
        &rows,
    ))
}

pub fn ab_invariants(
    def: &GroupDef,
    levels: usize,
    ctx: &mut Ctx,
    r: &mut Report,
) -> Result<String> {
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for n in 1..=levels {
        let g = ctx.cache.level_group(def, n, &ctx.limits)?;
        let inv = abelian_invariants_finite(&g, ctx.limits.abelian_cap)?;
        rows.push(vec![n.to_string(), inv_text(&inv)]);
        out.push(json!({ "level": n, "invariants": inv }));
    }
    r.result = json!({ "levels": out });
    Ok(table(&["n", "G_n/G_n'"], &rows))
}

pub fn nucleus_cmd(def: &GroupDef, max_size: usize, ctx: &Ctx, r: &mut Report) -> Result<String> {
    let n = nucleus(def, ctx.limits.word_depth, max_size)?;
    let names: Vec<String> = n.iter().map(|w| def.format_word(w)).collect();
    r.result = json!({ "size": names.len(), "elements": names });
    Ok(format!(
        "nucleus ({} elements): {{{}}}\n",
        names.len(),
        names.join(", ")
    ))
}

pub fn witness(
    def: &GroupDef,
    element: &str,
    levels: usize,
    ctx: &Ctx,
    r: &mut Report,
) -> Result<String> {
    let w = parse_word(def, element)?;
    let inside = in_closure_of_derived(def, &w, levels, &ctx.limits)?;
    let rows: Vec<Vec<String>> = inside
        .iter()
        .enumerate()
        .map(|(i, b)| {
            vec![
                (i + 1).to_string(),
                if *b { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    r.result = json!({ "element": def.format_word(&w), "in_derived": inside });
    Ok(table(
        &["n", &format!("{} in G_n'", def.format_word(&w))],
        &rows,
    ))
}

pub fn kernels(
    def: &GroupDef,
    level: usize,
    opts: KernelOptions,
    ctx: &Ctx,
    r: &mut Report,
) -> Result<String> {
    let k = kernel_span(def, level, opts, &ctx.limits)?;
    let mut text = String::new();
    let mode = if k.exact { "exact" } else { "bounds" };
    let _ = writeln!(
        text,
        "M_{level} ({mode}): rank {} of {}",
        k.rank,
        3 * 3usize.pow(level as u32)
    );
    let _ = writeln!(text, "upper bound from functionals: {}", k.upper_bound);
    if let Some(d) = k.derived_rank {
        let _ = writeln!(text, "rank of intersection with derived subgroup: {d}");
    }
    if let Some(c) = k.lower_certified {
        let _ = writeln!(text, "lower-bound elements checked in chain: {c}");
    }
    if let Some(c) = k.chain_rank {
        let _ = writeln!(text, "rank from chain orders: {c}");
    }
    let _ = writeln!(text, "bounds meet: {}", k.bounds_meet);
    r.result = serde_json::to_value(&k).expect("kernel report serializes");
    Ok(text)
}

pub fn verify(
    name: &str,
    def: Option<GroupDef>,
    policy: Policy,
    ctx: &Ctx,
    r: &mut Report,
) -> Result<String> {
    let s = suite(name)?;
    let bound = match def {
        None => BoundSuite::load(s, &ctx.limits)?,
        Some(d) => {
            let d = if policy == Policy::NucleusCertified {
                d.certify(ctx.limits.word_depth, 256)?
            } else {
                d
            };
            BoundSuite::bind(d, s)?
        }
    };
    r.group = Some(bound.def.name().to_string());
    let report = bound.run(policy, &ctx.limits)?;
    let rows: Vec<Vec<String>> = report
        .outcomes
        .iter()
        .map(|o| {
            vec![
                if o.passed { "ok" } else { "FAIL" }.to_string(),
                o.check.clone(),
            ]
        })
        .collect();
    r.checks = report
        .outcomes
        .iter()
        .map(|o| Check {
            check: o.check.clone(),
            passed: o.passed,
        })
        .collect();
    r.result = json!({ "checks": r.checks.len(), "failed": report.failures() });
    let mut text = table(&["status", "check"], &rows);
    let _ = writeln!(
        text,
        "{} of {} checks passed",
        r.checks.len() - report.failures(),
        r.checks.len()
    );
    Ok(text)
}

pub fn snf(text: &str, r: &mut Report) -> Result<String> {
    let m = IntMatrix::parse(text)?;
    let s = smith_normal_form(&m);
    let diag: Vec<String> = s
        .invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect();
    let torsion: Vec<String> = s.torsion().iter().map(ToString::to_string).collect();
    r.result = json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "invariant_factors": diag,
        "rank": s.rank,
        "free_rank": s.free_rank(),
        "torsion": torsion,
    });
    Ok(format!(
        "invariant factors: ({})\nrank {}, free rank {}\ntorsion: {}\n",
        diag.join(","),
        s.rank,
        s.free_rank(),
        if torsion.is_empty() {
            "none".to_string()
        } else {
            torsion.join(" x ")
        }
    ))
}

pub fn connecting(def: &GroupDef, policy: Policy, r: &mut Report) -> Result<String> {
    let c = connecting_matrix(def, policy)?;
    r.checks = c
        .identities
        .iter()
        .map(|o| Check {
            check: o.check.clone(),
            passed: o.passed,
        })
        .collect();
    r.result = json!({ "basis": ["d", "e", "f", "eh-"], "matrix": c.matrix });
    let rows: Vec<Vec<String>> = c
        .matrix
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    let mut text = String::new();
    for o in &c.identities {
        let _ = writeln!(text, "ok  {}", o.check);
    }
    text.push_str(&table(&["d", "e", "f", "eh-"], &rows));
    Ok(text)
}

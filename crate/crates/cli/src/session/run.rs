use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use cmreg::functors::{frobenius_power, frobenius_q, kahler_module};
use cmreg::invariants::{a_invariants_of, betti_regularity, regularity, RegRoute};
use cmreg::theorems::{self, Assertions, TheoremReport, Verdict};
use cmreg::tor::{tor_multi, tor_multi_truncated};
use cmreg::{a_invariants, AlgebraError, ChainComplex, GradedModule, Ideal, QuotientRing};

use super::{Arg, Command, CommandKind, Object, SessionSpec, Theorem};

const DEFAULT_WINDOW: (i64, i64) = (0, 10);

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Run commands concurrently; output order is unaffected.
    pub parallel: bool,
    /// Overrides the session's `seed` statement.
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Default)]
pub struct SessionOutcome {
    /// One JSON document per line, in command order.
    pub records: Vec<String>,
    pub summary: String,
    pub exit_code: i32,
}

impl SessionOutcome {
    pub fn json_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(r);
            s.push('\n');
        }
        s
    }
}

#[derive(Default)]
struct Output {
    records: Vec<Value>,
    summary: String,
    reports: Vec<(String, Verdict)>,
    error: bool,
}

type CmdResult<T> = std::result::Result<T, AlgebraError>;

pub fn run_session(spec: &SessionSpec, opts: &RunOptions) -> SessionOutcome {
    let seed = opts.seed.unwrap_or(spec.seed);
    let run = |(k, c): (usize, &Command)| run_command(k, c, seed);
    let outputs: Vec<Output> = if opts.parallel {
        spec.commands.par_iter().enumerate().map(run).collect()
    } else {
        spec.commands.iter().enumerate().map(run).collect()
    };
    let mut out = SessionOutcome::default();
    let mut tally: BTreeMap<String, [usize; 5]> = BTreeMap::new();
    let mut violated = false;
    let mut error = false;
    for o in outputs {
        out.records.extend(o.records.iter().map(|r| r.to_string()));
        out.summary.push_str(&o.summary);
        error |= o.error;
        for (t, v) in o.reports {
            violated |= v == Verdict::Violated;
            tally.entry(t).or_default()[verdict_slot(v)] += 1;
        }
    }
    if !tally.is_empty() {
        let names = ["holds", "violated", "vacuous", "truncated", "candidate"];
        let w = tally.keys().map(|k| k.len()).max().unwrap_or(0).max(7);
        let _ = write!(out.summary, "\n{:<w$}", "theorem");
        for n in names {
            let _ = write!(out.summary, " {n:>9}");
        }
        out.summary.push('\n');
        for (t, counts) in &tally {
            let _ = write!(out.summary, "{t:<w$}");
            for c in counts {
                let _ = write!(out.summary, " {c:>9}");
            }
            out.summary.push('\n');
        }
    }
    out.exit_code = if violated || error { 1 } else { 0 };
    out
}

fn verdict_slot(v: Verdict) -> usize {
    match v {
        Verdict::Holds => 0,
        Verdict::Violated => 1,
        Verdict::Vacuous => 2,
        Verdict::Truncated => 3,
        Verdict::CounterexampleCandidate => 4,
    }
}

fn verdict_name(v: Verdict) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn command_name(kind: CommandKind) -> &'static str {
    match kind {
        CommandKind::Betti => "betti",
        CommandKind::Reg => "reg",
        CommandKind::Ainv => "ainv",
        CommandKind::Tor => "tor",
        CommandKind::Frobenius => "frobenius",
        CommandKind::Power => "power",
        CommandKind::Saturate => "saturate",
        CommandKind::Kahler => "kahler",
        CommandKind::Verify(_) => "verify",
        CommandKind::Fuzz(_) => "fuzz",
    }
}

fn run_command(index: usize, c: &Command, seed: u64) -> Output {
    let mut o = Output::default();
    let _ = writeln!(o.summary, "[{}] {}", index + 1, c.text);
    let result = match c.kind {
        CommandKind::Verify(t) => verify(t, c).map(|rs| push_reports(&mut o, c, rs, None)),
        CommandKind::Fuzz(t) => fuzz(t, c, index, seed).map(|rs| {
            let n = rs.len();
            push_reports(&mut o, c, rs, Some(seed));
            if n == 0 {
                o.summary.push_str("    no samples\n");
            }
        }),
        _ => compute(c).map(|(status, result, text)| {
            o.records.push(json!({
                "command": command_name(c.kind),
                "input": c.args.iter().map(|a| a.text.as_str()).collect::<Vec<_>>().join(" "),
                "status": status,
                "result": result,
            }));
            o.summary.push_str(&text);
            if status == "truncated" {
                o.summary.push_str("    (truncated at the resolution cap)\n");
            }
        }),
    };
    if let Err(e) = result {
        o.error = true;
        o.records.push(json!({
            "command": command_name(c.kind),
            "input": c.text,
            "status": "error",
            "error": e.to_string(),
        }));
        let _ = writeln!(o.summary, "    error: {e}");
    }
    o
}

fn push_reports(o: &mut Output, c: &Command, reports: Vec<TheoremReport>, seed: Option<u64>) {
    for (k, mut r) in reports.into_iter().enumerate() {
        if let (Some(s), Value::Object(d)) = (seed, &mut r.details) {
            d.insert("seed".into(), json!(s));
            d.insert("sample".into(), json!(k));
        }
        let mut v = serde_json::to_value(&r).unwrap_or(Value::Null);
        if let Value::Object(m) = &mut v {
            m.insert("command".into(), json!(command_name(c.kind)));
        }
        o.records.push(v);
        let side = match (r.lhs, r.relation, r.rhs) {
            (Some(l), Some(rel), Some(rh)) => {
                let rel = serde_json::to_value(rel).ok().and_then(|v| v.as_str().map(str::to_string));
                format!("  ({l} {} {rh})", rel.unwrap_or_default())
            }
            _ => String::new(),
        };
        let _ = writeln!(o.summary, "    {} {}: {}{side}", r.theorem, r.input, verdict_name(r.verdict));
        for f in r.failed_checks() {
            let _ = writeln!(o.summary, "      failed: {} ({} vs {})", f.label, f.lhs, f.rhs);
        }
        o.reports.push((r.theorem.clone(), r.verdict));
    }
}

fn module(a: &Arg) -> &GradedModule {
    match &a.object {
        Object::Module(m) => m,
        _ => unreachable!("arguments are checked by the parser"),
    }
}

fn ideal(a: &Arg) -> &Ideal {
    match &a.object {
        Object::Ideal(i) => i,
        _ => unreachable!("arguments are checked by the parser"),
    }
}

fn ring(a: &Arg) -> &QuotientRing {
    match &a.object {
        Object::Ring(r) => r,
        _ => unreachable!("arguments are checked by the parser"),
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("    {l}\n")).collect()
}

/// Plain computations: status, JSON result and summary text.
fn compute(c: &Command) -> CmdResult<(&'static str, Value, String)> {
    let (lo, hi) = c.flags.window.unwrap_or(DEFAULT_WINDOW);
    let status = |t: bool| if t { "truncated" } else { "ok" };
    match c.kind {
        CommandKind::Betti => {
            let m = module(&c.args[0]);
            let res = m.resolution(c.flags.cap.unwrap_or_else(|| m.default_cap()));
            let b = res.betti();
            let text = indent(&b.staircase());
            Ok((status(res.truncated), serde_json::to_value(&b).unwrap(), text))
        }
        CommandKind::Reg => {
            let m = module(&c.args[0]);
            let reg = regularity(m, RegRoute::Duality)?;
            let betti = betti_regularity(m).ok();
            let a = a_invariants(m);
            let text = format!("    reg = {reg}\n");
            Ok((
                "ok",
                json!({"reg": reg, "betti_reg": betti, "cd": a.cd, "depth": a.depth()}),
                text,
            ))
        }
        CommandKind::Ainv => {
            let m = module(&c.args[0]);
            let a = a_invariants(m);
            let h = m.hilbert_data(lo, hi);
            let parts: Vec<String> = a.a.iter().map(|(i, v)| format!("a_{i} = {v}")).collect();
            let text = format!("    {}; reg = {}\n", parts.join(", "), a.reg);
            Ok((
                "ok",
                json!({
                    "a": a.a,
                    "reg": a.reg,
                    "cd": a.cd,
                    "depth": a.depth(),
                    "cohen_macaulay": a.is_cohen_macaulay(),
                    "hilbert": h,
                }),
                text,
            ))
        }
        CommandKind::Tor => {
            let mods: Vec<GradedModule> = c.args.iter().map(|a| module(a).clone()).collect();
            let top = mods[0].ring().nvars();
            let range: Vec<usize> = match c.flags.index {
                Some(i) => vec![i],
                None => (0..=top).collect(),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut truncated = false;
            for i in range {
                let t = tor_multi(&mods, i as i64)?;
                let cut = tor_multi_truncated(&mods, i);
                truncated |= cut;
                let h = t.hilbert_data(lo, hi);
                let reg = a_invariants_of(&t).reg;
                let _ = writeln!(text, "    Tor_{i}: HF[{lo}..{hi}] = {:?}, reg = {reg}", h.values);
                rows.push(json!({"i": i, "zero": t.is_zero(), "reg": reg, "hilbert": h, "truncated": cut}));
            }
            Ok((status(truncated), Value::Array(rows), text))
        }
        CommandKind::Frobenius => {
            let m = module(&c.args[0]);
            let emax = c.flags.emax.unwrap_or(1);
            let mut rows = Vec::new();
            let mut text = String::from("    e  q  reg\n");
            for e in 0..=emax {
                let q = frobenius_q(m.ring(), e)?;
                let f = frobenius_power(m, e)?;
                let a = a_invariants(&f);
                let _ = writeln!(text, "    {e}  {q}  {}", a.reg);
                rows.push(json!({"e": e, "q": q, "reg": a.reg, "a": a.a, "hilbert": f.hilbert_data(lo, hi)}));
            }
            Ok(("ok", Value::Array(rows), text))
        }
        CommandKind::Power => {
            let i = ideal(&c.args[0]);
            let max = c.flags.max.unwrap_or(3).max(1);
            let mut rows = Vec::new();
            let mut text = String::from("    m  reg(S/I^m)\n");
            for m in 1..=max {
                let p = i.power(m);
                let a = a_invariants(&p.quotient_module());
                let _ = writeln!(text, "    {m}  {}", a.reg);
                rows.push(json!({
                    "m": m,
                    "reg_quotient": a.reg,
                    "a": a.a,
                    "generators": p.minimal_generators().len(),
                }));
            }
            Ok(("ok", Value::Array(rows), text))
        }
        CommandKind::Saturate => {
            let i = ideal(&c.args[0]);
            let s = i.saturation().minimalized();
            let saturated = i.contains_ideal(&s);
            let gens = s.to_strings();
            let text = format!("    ({}){}\n", gens.join(", "), if saturated { " already saturated" } else { "" });
            Ok(("ok", json!({"generators": gens, "saturated": saturated}), text))
        }
        CommandKind::Kahler => {
            let r = ring(&c.args[0]);
            let k = kahler_module(r);
            let a = a_invariants(&k.omega);
            let h = k.omega.hilbert_data(lo, hi);
            let parts: Vec<String> = a.a.iter().map(|(i, v)| format!("a_{i} = {v}")).collect();
            let text = format!("    Omega: {}; reg = {}\n", parts.join(", "), a.reg);
            Ok((
                "ok",
                json!({
                    "omega": {"a": a.a, "reg": a.reg, "hilbert": h},
                    "conormal_hilbert": k.conormal.hilbert_data(lo, hi),
                    "kernel_hilbert": k.k.hilbert_data(lo, hi),
                }),
                text,
            ))
        }
        CommandKind::Verify(_) | CommandKind::Fuzz(_) => unreachable!(),
    }
}

fn assertions(c: &Command) -> Assertions {
    Assertions::of(c.flags.assertions.iter().cloned())
}

fn verify(t: Theorem, c: &Command) -> CmdResult<Vec<TheoremReport>> {
    let a = &c.args;
    let asrt = assertions(c);
    let modules = || a.iter().map(|x| module(x).clone()).collect::<Vec<_>>();
    let max = c.flags.max;
    Ok(match t {
        Theorem::Regfpd => vec![theorems::check_regfpd(module(&a[0]))],
        Theorem::Regtor => vec![theorems::check_regtor(&modules())?],
        Theorem::Rigidity => vec![theorems::check_rigidity_and_proper(&modules())?],
        Theorem::Regtorgen => {
            let ms = modules();
            vec![theorems::check_regtorgen(&ms[0], &ms[1..])?]
        }
        Theorem::Nonacyclic => {
            let i = ideal(&a[0]);
            let m = module(&a[1]);
            m.ring().same_ring(i.ring())?;
            let f = ChainComplex::koszul(m.ring(), i.gens())?;
            vec![theorems::check_nonacyclic(&f, m)?]
        }
        Theorem::Koszul => {
            let m = module(&a[0]);
            let i = ideal(&a[1]);
            m.ring().same_ring(i.ring())?;
            vec![theorems::check_koszul_bounds(m, i.gens())?]
        }
        Theorem::KoszulPair => vec![theorems::check_koszul_pair(ideal(&a[0]), ideal(&a[1]), &asrt)?],
        Theorem::Intersection => {
            let is: Vec<Ideal> = a.iter().map(|x| ideal(x).clone()).collect();
            vec![theorems::check_intersection_bound(&is, &asrt)?]
        }
        Theorem::Frobenius => {
            let emax = c.flags.emax.unwrap_or(1);
            let mut rs = theorems::check_frobenius_bound(module(&a[0]), emax, &asrt)?;
            // e = 0 is the identity functor; the command reports e = 1 … emax.
            if emax > 0 {
                rs.remove(0);
            }
            rs
        }
        Theorem::PowerCd1 => theorems::check_power_bound_cd1(ideal(&a[0]), max.unwrap_or(3)),
        Theorem::PowerDim2 => theorems::check_power_bound_dim2(ideal(&a[0]), max.unwrap_or(3), &asrt),
        Theorem::PowerKernel => theorems::check_power_kernel(ideal(&a[0]), max.unwrap_or(3).max(2), &asrt)?,
        Theorem::Kahler => vec![theorems::check_kahler_bounds(ring(&a[0]), &asrt)],
        Theorem::BettiTransfer => vec![theorems::check_betti_transfer(module(&a[0]), max.unwrap_or(4) as usize)],
        Theorem::Estbetti => vec![theorems::check_estbetti(module(&a[0]), max.unwrap_or(3) as usize)],
    })
}

fn random_monomial_ideal(rng: &mut ChaCha8Rng, ring: &QuotientRing, max_deg: u32) -> CmdResult<Ideal> {
    let n = ring.nvars();
    let k = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    for _ in 0..k {
        let d = rng.gen_range(1..=max_deg.max(1));
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        let text: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, k)| **k > 0)
            .map(|(i, k)| format!("x{i}^{k}"))
            .collect();
        gens.push(ring.parse(&text.join("*"))?);
    }
    Ideal::new(ring, gens)
}

/// Random monomial inputs for a theorem, reproducible from the seed.
fn fuzz(t: Theorem, c: &Command, index: usize, seed: u64) -> CmdResult<Vec<TheoremReport>> {
    let r = ring(&c.args[0]);
    let count = c.flags.count.unwrap_or(10);
    let deg = c.flags.max.unwrap_or(3);
    let asrt = assertions(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut out = Vec::new();
    for _ in 0..count {
        let i = random_monomial_ideal(&mut rng, r, deg)?;
        let j = random_monomial_ideal(&mut rng, r, deg)?;
        let (m, n) = (i.quotient_module(), j.quotient_module());
        let rep = match t {
            Theorem::Regfpd => theorems::check_regfpd(&m),
            Theorem::Regtor => theorems::check_regtor(&[m, n])?,
            Theorem::Rigidity => theorems::check_rigidity_and_proper(&[m, n])?,
            Theorem::Regtorgen => theorems::check_regtorgen(&m, &[n])?,
            Theorem::Nonacyclic => theorems::check_nonacyclic(&ChainComplex::koszul(r, j.gens())?, &m)?,
            Theorem::Koszul => theorems::check_koszul_bounds(&m, j.gens())?,
            Theorem::KoszulPair => theorems::check_koszul_pair(&i, &j, &asrt)?,
            Theorem::Intersection => theorems::check_intersection_bound(&[i, j], &asrt)?,
            Theorem::Frobenius => theorems::check_frobenius_bound(&m, 1, &asrt)?.pop().unwrap(),
            Theorem::PowerCd1 => theorems::check_power_bound_cd1(&i, 2).pop().unwrap(),
            Theorem::PowerDim2 => theorems::check_power_bound_dim2(&i, 3, &asrt).pop().unwrap(),
            Theorem::PowerKernel => theorems::check_power_kernel(&i, 3, &asrt)?.pop().unwrap(),
            Theorem::BettiTransfer => theorems::check_betti_transfer(&m, 3),
            Theorem::Estbetti => theorems::check_estbetti(&m, 3),
            Theorem::Kahler => {
                return Err(AlgebraError::Unsupported(
                    "kahler takes a ring, not random ideals".into(),
                ))
            }
        };
        out.push(rep);
    }
    Ok(out)
}

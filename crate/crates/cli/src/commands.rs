use std::ffi::OsString;
use std::path::{Path, PathBuf};

use domtie::cascade::{
    check_avg_degree_bound, check_elarge, check_obs_casc, generate_kprime, relax_threshold, relax_to_cascade,
    validate_cascade, Cascade, Certificate, CheckError, Color, Coloring, MCascade, RelaxError, SlopeError,
    SparsifyError,
};
use domtie::dichotomy::{
    ratio_survey, two_ind_or_steep, DichotomyError, DichotomyOutcome, DichotomyParams, DichotomyTrace, Family,
    ParamMode,
};
use domtie::exact::{is_dominating, is_independent, is_nearly_two_independent, is_two_independent};
use domtie::graph::{densest_subgraph, generators, DenseSubgraph};
use domtie::lp::{
    fractional_domination_with_guard, AssignmentKind, DualityCertificate, FractionalAssignment, FractionalError,
};
use domtie::orientation::{orient_bounded_outdegree, OrientOutcome, Orientation, OrientationError};
use domtie::{Graph, Rational, SolverError, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::context::{parse_failure, Context, Failure, Outcome};
use crate::{CascadeCmd, CertifyArgs, Command, DichotomyArgs, GenFamily, GenerateArgs, Param, SolveArgs, SurveyArgs};

pub fn dispatch(cmd: &Command, ctx: &mut Context) -> Result<Outcome, Failure> {
    match cmd {
        Command::Analyze { graph } => analyze(graph, ctx),
        Command::Solve(a) => solve(a, ctx),
        Command::Certify(a) => certify(a, ctx),
        Command::Cascade(c) => cascade(c, ctx),
        Command::Generate(a) => generate(a, ctx),
        Command::Dichotomy(a) => dichotomy(a, ctx),
        Command::Survey(a) => survey(a, ctx),
    }
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn members(s: &VertexSet) -> Value {
    json!(s.members())
}

fn dense_json(w: &DenseSubgraph) -> Value {
    json!({
        "vertices": w.vertices,
        "edges": w.edges,
        "average_degree": rat(&w.average_degree()),
    })
}

fn param_name(p: Param) -> &'static str {
    match p {
        Param::Gamma => "gamma",
        Param::Alpha => "alpha",
        Param::Alpha2 => "alpha2",
        Param::GammaStar => "gamma-star",
        Param::Nearly => "nearly",
        Param::Orientation => "orientation",
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str, p: Param) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{flag} is required for --param {}", param_name(p))))
}

fn frac_failure(e: FractionalError) -> Failure {
    match e {
        FractionalError::Solver(e) => e.into(),
        other => Failure::verification(other),
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s: OsString = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, Failure> {
    text.parse()
        .map_err(|_| Failure::Usage(format!("{flag} expects an integer or p/q, got {text:?}")))
}

fn analyze(path: &Path, ctx: &mut Context) -> Result<Outcome, Failure> {
    let g = ctx.graph(path)?;
    let mut r = Map::new();
    r.insert("n".into(), g.n().into());
    r.insert("m".into(), g.m().into());
    r.insert("max_degree".into(), g.max_degree().into());
    r.insert(
        "average_degree".into(),
        g.average_degree().ok().as_ref().map_or(Value::Null, rat),
    );
    r.insert("degeneracy".into(), g.degeneracy().ok().into());
    r.insert(
        "densest_subgraph".into(),
        densest_subgraph(&g).ok().as_ref().map_or(Value::Null, dense_json),
    );
    let mut verified = true;
    let exact = match exact_summary(&g, ctx) {
        Ok((v, holds)) => {
            verified = holds;
            v
        }
        Err(e @ SolverError::SizeGuard { .. }) => json!({"refused": e.to_string()}),
        Err(SolverError::EmptyGraph) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    r.insert("exact".into(), exact);
    Ok(Outcome {
        result: Value::Object(r),
        verified,
    })
}

fn exact_summary(g: &Graph, ctx: &Context) -> Result<(Value, bool), SolverError> {
    let gamma = ctx.solver.domination_number(g)?;
    let alpha = ctx.solver.independence_number(g)?;
    let alpha2 = ctx.solver.two_independence_number(g)?;
    let star = match fractional_domination_with_guard(g, ctx.lp_guard) {
        Ok(cert) => cert.value,
        Err(FractionalError::Solver(e)) => return Err(e),
        Err(e) => panic!("fractional solver failed its own check: {e}"),
    };
    let holds = Rational::from_usize(alpha2.value) <= star && star <= Rational::from_usize(gamma.value);
    Ok((
        json!({
            "gamma": gamma.value,
            "alpha": alpha.value,
            "alpha2": alpha2.value,
            "gamma_star": rat(&star),
            "sandwich_holds": holds,
        }),
        holds,
    ))
}

fn solve(a: &SolveArgs, ctx: &mut Context) -> Result<Outcome, Failure> {
    let g = ctx.graph(&a.graph)?;
    if a.packing_out.is_some() && a.param != Param::GammaStar {
        return Err(Failure::Usage(
            "--packing-out applies to --param gamma-star only".into(),
        ));
    }
    let mut r = Map::new();
    r.insert("param".into(), param_name(a.param).into());
    match a.param {
        Param::Gamma | Param::Alpha | Param::Alpha2 | Param::Nearly => {
            let s = &ctx.solver;
            let opt = match a.param {
                Param::Gamma => s.domination_number(&g)?,
                Param::Alpha => s.independence_number(&g)?,
                Param::Alpha2 => s.two_independence_number(&g)?,
                _ => {
                    let k = require(a.k, "--k", a.param)?;
                    r.insert("k".into(), k.into());
                    s.max_nearly_two_independent(&g, k)?
                }
            };
            if let Some(out) = &a.out {
                ctx.write(out, &opt.witness.to_certificate())?;
            }
            r.insert("value".into(), opt.value.into());
            r.insert("witness".into(), members(&opt.witness));
        }
        Param::GammaStar => {
            let cert = fractional_domination_with_guard(&g, ctx.lp_guard).map_err(frac_failure)?;
            if let Some(out) = &a.out {
                ctx.write(out, &cert.dual.to_text())?;
            }
            if let Some(out) = &a.packing_out {
                ctx.write(out, &cert.primal.to_text())?;
            }
            r.insert("value".into(), rat(&cert.value));
            r.insert("domination".into(), cert.dual.weights.iter().map(rat).collect());
            r.insert("packing".into(), cert.primal.weights.iter().map(rat).collect());
        }
        Param::Orientation => {
            let d = require(a.d, "--d", a.param)?;
            r.insert("d".into(), d.into());
            match orient_bounded_outdegree(&g, d) {
                OrientOutcome::Oriented(o) => {
                    if let Some(out) = &a.out {
                        ctx.write(out, &o.to_text())?;
                    }
                    r.insert("oriented".into(), true.into());
                    r.insert("max_outdegree".into(), o.max_outdegree().into());
                }
                OrientOutcome::Dense(w) => {
                    r.insert("oriented".into(), false.into());
                    r.insert("dense_subgraph".into(), dense_json(&w));
                }
            }
        }
    }
    Ok(Outcome::ok(Value::Object(r)))
}

fn certify(a: &CertifyArgs, ctx: &mut Context) -> Result<Outcome, Failure> {
    let g = ctx.graph(&a.graph)?;
    let expect = a.expect.as_deref().map(|e| parse_rational(e, "--expect")).transpose()?;
    let mut r = Map::new();
    r.insert("param".into(), param_name(a.param).into());
    let verified = match a.param {
        Param::Gamma | Param::Alpha | Param::Alpha2 | Param::Nearly => certify_set(a, &g, expect, &mut r, ctx)?,
        Param::GammaStar => certify_fractional(a, &g, expect, &mut r, ctx)?,
        Param::Orientation => {
            if expect.is_some() || a.optimal {
                return Err(Failure::Usage(
                    "--expect and --optimal do not apply to orientations".into(),
                ));
            }
            let path = a
                .orientation
                .as_ref()
                .ok_or_else(|| Failure::Usage("--orientation is required for --param orientation".into()))?;
            let text = ctx.read(path)?;
            match Orientation::parse(&g, &text) {
                Err(e @ OrientationError::Malformed { .. }) => return Err(parse_failure(path, e)),
                Err(e) => {
                    r.insert("valid".into(), false.into());
                    r.insert("violation".into(), e.to_string().into());
                    false
                }
                Ok(o) => {
                    r.insert("valid".into(), true.into());
                    r.insert("max_outdegree".into(), o.max_outdegree().into());
                    match a.d {
                        Some(d) => {
                            let within = o.max_outdegree() <= d;
                            r.insert("d".into(), d.into());
                            r.insert("within_bound".into(), within.into());
                            within
                        }
                        None => true,
                    }
                }
            }
        }
    };
    r.insert("verified".into(), verified.into());
    Ok(Outcome {
        result: Value::Object(r),
        verified,
    })
}

fn certify_set(
    a: &CertifyArgs,
    g: &Graph,
    expect: Option<Rational>,
    r: &mut Map<String, Value>,
    ctx: &mut Context,
) -> Result<bool, Failure> {
    let path = a
        .set
        .as_ref()
        .ok_or_else(|| Failure::Usage(format!("--set is required for --param {}", param_name(a.param))))?;
    let k = match a.param {
        Param::Nearly => {
            let k = require(a.k, "--k", a.param)?;
            r.insert("k".into(), k.into());
            k
        }
        _ => 0,
    };
    let text = ctx.read(path)?;
    let set = VertexSet::parse_certificate(&text).map_err(|e| parse_failure(path, e))?;
    let (property, holds): (&str, fn(&Graph, &VertexSet, usize) -> bool) = match a.param {
        Param::Gamma => ("dominating", |g, s, _| is_dominating(g, s)),
        Param::Alpha => ("independent", |g, s, _| is_independent(g, s)),
        Param::Alpha2 => ("2-independent", |g, s, _| is_two_independent(g, s)),
        _ => ("nearly 2-independent", is_nearly_two_independent),
    };
    r.insert("property".into(), property.into());
    r.insert("size".into(), set.len().into());
    let violation = match set.check_host(g) {
        Err(e) => Some(e.to_string()),
        Ok(()) if !holds(g, &set, k) => Some(format!("set is not {property}")),
        Ok(()) => None,
    };
    let mut verified = violation.is_none();
    r.insert("valid".into(), verified.into());
    if let Some(v) = violation {
        r.insert("violation".into(), v.into());
    }
    if let Some(e) = expect {
        let matches = Rational::from_usize(set.len()) == e;
        r.insert("expected".into(), rat(&e));
        r.insert("matches_expected".into(), matches.into());
        verified &= matches;
    }
    if a.optimal {
        let s = &ctx.solver;
        let opt = match a.param {
            Param::Gamma => s.domination_number(g)?,
            Param::Alpha => s.independence_number(g)?,
            Param::Alpha2 => s.two_independence_number(g)?,
            _ => s.max_nearly_two_independent(g, k)?,
        };
        let optimal = verified && opt.value == set.len();
        r.insert("optimum".into(), opt.value.into());
        r.insert("optimal".into(), optimal.into());
        verified &= optimal;
    }
    Ok(verified)
}

fn assignment_json(x: &FractionalAssignment, g: &Graph) -> (Value, bool) {
    let mut m = Map::new();
    m.insert("total".into(), rat(&x.total()));
    let check = x.verify(g);
    m.insert("valid".into(), check.is_ok().into());
    if let Err(e) = &check {
        m.insert("violation".into(), e.to_string().into());
    }
    (Value::Object(m), check.is_ok())
}

fn certify_fractional(
    a: &CertifyArgs,
    g: &Graph,
    expect: Option<Rational>,
    r: &mut Map<String, Value>,
    ctx: &mut Context,
) -> Result<bool, Failure> {
    if a.assignment.is_none() && a.packing.is_none() {
        return Err(Failure::Usage(
            "--assignment or --packing is required for --param gamma-star".into(),
        ));
    }
    let mut load = |path: &Option<PathBuf>, kind| -> Result<Option<FractionalAssignment>, Failure> {
        let Some(path) = path else { return Ok(None) };
        let text = ctx.read(path)?;
        FractionalAssignment::parse(&text, g.n(), kind)
            .map(Some)
            .map_err(|e| parse_failure(path, e))
    };
    let dom = load(&a.assignment, AssignmentKind::Domination)?;
    let pack = load(&a.packing, AssignmentKind::Packing)?;
    let mut verified = true;
    for (key, x) in [("domination", &dom), ("packing", &pack)] {
        if let Some(x) = x {
            let (v, ok) = assignment_json(x, g);
            r.insert(key.into(), v);
            verified &= ok;
        }
    }
    let value = match (&dom, &pack) {
        (Some(d), Some(p)) => {
            let cert = DualityCertificate {
                primal: p.clone(),
                dual: d.clone(),
                value: d.total(),
            };
            let check = cert.verify(g);
            let mut m = Map::new();
            m.insert("valid".into(), check.is_ok().into());
            match &check {
                Ok(()) => {
                    m.insert("value".into(), rat(&cert.value));
                }
                Err(e) => {
                    m.insert("violation".into(), e.to_string().into());
                }
            }
            r.insert("duality".into(), Value::Object(m));
            verified &= check.is_ok();
            d.total()
        }
        (Some(x), None) | (None, Some(x)) => x.total(),
        (None, None) => unreachable!("checked above"),
    };
    if let Some(e) = expect {
        let matches = value == e;
        r.insert("expected".into(), rat(&e));
        r.insert("matches_expected".into(), matches.into());
        verified &= matches;
    }
    if a.optimal {
        let opt = fractional_domination_with_guard(g, ctx.lp_guard)
            .map_err(frac_failure)?
            .value;
        let optimal = verified && [&dom, &pack].into_iter().flatten().all(|x| x.total() == opt);
        r.insert("optimum".into(), rat(&opt));
        r.insert("optimal".into(), optimal.into());
        verified &= optimal;
    }
    Ok(verified)
}

fn load_coloring(ctx: &mut Context, g: &Graph, path: &Path) -> Result<Coloring, Failure> {
    let text = ctx.read(path)?;
    Coloring::parse(&text, g.n()).map_err(|e| parse_failure(path, e))
}

fn counts(psi: &Coloring) -> Value {
    json!({"v": psi.count(Color::V), "e": psi.count(Color::E), "d": psi.count(Color::D)})
}

fn invalid(r: &mut Map<String, Value>, violation: impl ToString) -> Outcome {
    r.insert("valid".into(), false.into());
    r.insert("violation".into(), violation.to_string().into());
    Outcome {
        result: Value::Object(std::mem::take(r)),
        verified: false,
    }
}

fn into_mcascade(cert: Certificate) -> MCascade {
    match cert {
        Certificate::Cascade(c) => c.into_mcascade(),
        Certificate::MCascade(mc) => mc,
    }
}

fn cascade(cmd: &CascadeCmd, ctx: &mut Context) -> Result<Outcome, Failure> {
    let mut r = Map::new();
    match cmd {
        CascadeCmd::Validate { graph, coloring, m } => {
            let g = ctx.graph(graph)?;
            let psi = load_coloring(ctx, &g, coloring)?;
            r.insert("kind".into(), if m.is_some() { "m-cascade" } else { "cascade" }.into());
            if let Some(m) = m {
                r.insert("m".into(), (*m).into());
            }
            r.insert("counts".into(), counts(&psi));
            if let Err(v) = validate_cascade(&g, &psi, *m) {
                return Ok(invalid(&mut r, v));
            }
            r.insert("valid".into(), true.into());
            Ok(Outcome::ok(Value::Object(r)))
        }
        CascadeCmd::Slope { graph, coloring, m } => {
            let g = ctx.graph(graph)?;
            let psi = load_coloring(ctx, &g, coloring)?;
            r.insert("counts".into(), counts(&psi));
            let mc = match validate_cascade(&g, &psi, *m) {
                Ok(cert) => into_mcascade(cert),
                Err(v) => return Ok(invalid(&mut r, v)),
            };
            let slope = match mc.slope(&ctx.solver) {
                Ok(s) => s,
                Err(SlopeError::Solver(e)) => return Err(e.into()),
                Err(e @ SlopeError::NoVVertices) => return Err(Failure::verification(e)),
            };
            let f = mc.foundation().graph;
            r.insert("valid".into(), true.into());
            r.insert(
                "foundation".into(),
                json!({
                    "vertices": f.n(),
                    "edges": f.m(),
                    "alpha": ctx.solver.independence_number(&f)?.value,
                }),
            );
            r.insert("slope".into(), rat(&slope));
            Ok(Outcome::ok(Value::Object(r)))
        }
        CascadeCmd::Check { graph, coloring } => {
            let g = ctx.graph(graph)?;
            let psi = load_coloring(ctx, &g, coloring)?;
            let c = match Cascade::new(g, psi) {
                Ok(c) => c,
                Err(v) => return Ok(invalid(&mut r, v)),
            };
            r.insert("valid".into(), true.into());
            let mut verified = true;
            let mut record = |key: &str, res: Result<(Value, bool), CheckError>| -> Result<(), Failure> {
                let v = match res {
                    Ok((v, holds)) => {
                        verified &= holds;
                        v
                    }
                    Err(CheckError::Solver(e)) | Err(CheckError::Slope(SlopeError::Solver(e))) => return Err(e.into()),
                    Err(e) => json!({"applicable": false, "reason": e.to_string()}),
                };
                r.insert(key.into(), v);
                Ok(())
            };
            record(
                "obs_casc",
                check_obs_casc(&c, &ctx.solver).map(|x| {
                    let holds = x.holds();
                    (
                        json!({
                            "applicable": true,
                            "holds": holds,
                            "slope": rat(&x.slope),
                            "gamma": x.gamma,
                            "alpha2": x.alpha2,
                            "v": x.v_count,
                            "gamma_at_least_half_v": x.gamma_half_v,
                            "alpha2_at_most_2v_over_s": x.alpha2_bound,
                            "gamma_at_least_s_alpha2_over_4": x.ratio_bound,
                        }),
                        holds,
                    )
                }),
            )?;
            record(
                "elarge",
                check_elarge(&c, &ctx.solver).map(|x| {
                    let holds = x.holds();
                    (
                        json!({
                            "applicable": true,
                            "holds": holds,
                            "slope": rat(&x.slope),
                            "foundation_average_degree": rat(&x.foundation_average_degree),
                            "e": x.e_count,
                            "v": x.v_count,
                            "non_e": x.non_e_count,
                            "degree_bound": x.degree_bound,
                            "e_vs_v": x.e_vs_v,
                            "e_vs_rest": x.e_vs_rest,
                        }),
                        holds,
                    )
                }),
            )?;
            record(
                "average_degree",
                check_avg_degree_bound(&c, &ctx.solver).map(|x| {
                    let holds = x.holds();
                    (
                        json!({
                            "applicable": true,
                            "holds": holds,
                            "slope": rat(&x.slope),
                            "average_degree": rat(&x.average_degree),
                            "bound": rat(&x.bound),
                        }),
                        holds,
                    )
                }),
            )?;
            Ok(Outcome {
                result: Value::Object(r),
                verified,
            })
        }
        CascadeCmd::Relax {
            graph,
            coloring,
            m,
            c,
            out,
        } => {
            let g = ctx.graph(graph)?;
            let psi = load_coloring(ctx, &g, coloring)?;
            let c = parse_rational(c, "--c")?;
            r.insert("m".into(), (*m).into());
            r.insert("c".into(), rat(&c));
            if c < 1 {
                return Err(Failure::Usage(format!("--c must be at least 1, got {c}")));
            }
            r.insert("threshold".into(), relax_threshold(*m, &c).to_string().into());
            let mc = match MCascade::new(g, psi, *m) {
                Ok(mc) => mc,
                Err(v) => return Ok(invalid(&mut r, v)),
            };
            let outcome = match relax_to_cascade(&mc, &c, ctx.seed, ctx.max_retries, &ctx.solver) {
                Ok(o) => o,
                Err(RelaxError::Solver(e)) | Err(RelaxError::Sparsify(SparsifyError::Solver(e))) => {
                    return Err(e.into())
                }
                Err(e) => {
                    return Err(Failure::Verification {
                        message: e.to_string(),
                        detail: Some(Value::Object(r)),
                    })
                }
            };
            let h = &outcome.cascade;
            if let Some(prefix) = out {
                ctx.write(&with_suffix(prefix, ".graph"), &h.graph().to_edge_list())?;
                ctx.write(&with_suffix(prefix, ".col"), &h.coloring().to_text())?;
                ctx.write(&with_suffix(prefix, ".map"), &lines(&outcome.embedding))?;
            }
            let sp = &outcome.sparsify;
            r.insert("b".into(), sp.b.to_string().into());
            r.insert("attempts".into(), sp.attempts.into());
            r.insert("draw_seed".into(), sp.seed.into());
            r.insert("precondition_checked".into(), outcome.precondition_checked.into());
            r.insert("target_checked".into(), sp.target_checked.into());
            r.insert("slope_checked".into(), outcome.slope_checked.into());
            r.insert(
                "cascade".into(),
                json!({"vertices": h.graph().n(), "edges": h.graph().m(), "counts": counts(h.coloring())}),
            );
            r.insert("embedding".into(), json!(outcome.embedding));
            Ok(Outcome::ok(Value::Object(r)))
        }
    }
}

fn lines(xs: &[usize]) -> String {
    xs.iter().map(|x| format!("{x}\n")).collect()
}

fn generate(a: &GenerateArgs, ctx: &mut Context) -> Result<Outcome, Failure> {
    if a.coloring.is_some() && a.family != GenFamily::Kprime {
        return Err(Failure::Usage("--coloring is produced for --family kprime only".into()));
    }
    let undefined = || Failure::Usage(format!("family is undefined for n = {}", a.n));
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (g, name) = match a.family {
        GenFamily::Kprime => {
            let c = generate_kprime(a.n).map_err(|e| Failure::Usage(e.to_string()))?;
            if let Some(path) = &a.coloring {
                ctx.write(path, &c.coloring().to_text())?;
            }
            (c.graph().clone(), "kprime")
        }
        GenFamily::Path => (Family::Path.build(a.n).ok_or_else(undefined)?, "path"),
        GenFamily::Cycle => (Family::Cycle.build(a.n).ok_or_else(undefined)?, "cycle"),
        GenFamily::Star => (Family::Star.build(a.n).ok_or_else(undefined)?, "star"),
        GenFamily::Complete => (Family::Complete.build(a.n).ok_or_else(undefined)?, "complete"),
        GenFamily::Gnp => {
            let p =
                a.p.ok_or_else(|| Failure::Usage("--p is required for --family gnp".into()))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            (generators::gnp(a.n, p, &mut rng), "gnp")
        }
        GenFamily::Sparse => {
            let d =
                a.d.ok_or_else(|| Failure::Usage("--d is required for --family sparse".into()))?;
            (generators::bounded_outdegree(a.n, d, &mut rng), "sparse")
        }
    };
    ctx.write(&a.out, &g.to_edge_list())?;
    Ok(Outcome::ok(json!({
        "family": name,
        "n": a.n,
        "vertices": g.n(),
        "edges": g.m(),
    })))
}

fn parse_override(text: &str) -> Result<(usize, usize, usize), Failure> {
    let bad = || {
        Failure::Usage(format!(
            "--override expects m,s,c as three positive integers, got {text:?}"
        ))
    };
    let parts: Vec<usize> = text
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [m, s, c] => Ok((m, s, c)),
        _ => Err(bad()),
    }
}

fn trace_json(t: &DichotomyTrace) -> Value {
    json!({
        "b": t.b,
        "B": t.base.len(),
        "X": t.x.len(),
        "D": t.d.len(),
        "S_v": t.s_v.len(),
        "S_e": t.s_e.len(),
        "S_d": t.s_d.len(),
        "alpha2": t.alpha2,
        "alpha_F": t.alpha_f,
        "F_edges": t.f_edges,
        "F_prime_edges": t.f_prime_edges,
        "removed_bound": t.removed_bound.to_string(),
    })
}

fn dichotomy(a: &DichotomyArgs, ctx: &mut Context) -> Result<Outcome, Failure> {
    let params = match (&a.r#override, a.c) {
        (Some(o), c) => {
            let (m, s, oc) = parse_override(o)?;
            if c.is_some_and(|c| c != oc) {
                return Err(Failure::Usage(format!(
                    "--c disagrees with the c = {oc} given in --override"
                )));
            }
            DichotomyParams::with_override(m, s, oc, a.d)
        }
        (None, Some(c)) => DichotomyParams::theorem(c, a.d),
        (None, None) => return Err(Failure::Usage("--c is required without --override".into())),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let g = ctx.graph(&a.graph)?;

    let mut r = Map::new();
    r.insert("mode".into(), params.mode().to_string().into());
    r.insert("theorem_certified".into(), (params.mode() == ParamMode::Theorem).into());
    r.insert(
        "constants".into(),
        json!({
            "c": params.c(),
            "d": params.d(),
            "m": params.m(),
            "s": params.s().to_string(),
            "threshold_denominator": params.threshold_denominator().to_string(),
            "ratio_bound": params.ratio_bound().to_string(),
        }),
    );
    let result = match two_ind_or_steep(&g, &params, &ctx.solver) {
        Ok(res) => res,
        Err(DichotomyError::Solver(e)) => return Err(e.into()),
        Err(e) => {
            match &e {
                DichotomyError::Mad { witness, .. } => {
                    r.insert("dense_subgraph".into(), dense_json(witness));
                }
                DichotomyError::NoCertificate { trace } => {
                    r.insert("trace".into(), trace_json(trace));
                }
                _ => {}
            }
            return Err(Failure::Verification {
                message: e.to_string(),
                detail: Some(Value::Object(r)),
            });
        }
    };
    r.insert("trace".into(), trace_json(&result.trace));
    match &result.outcome {
        DichotomyOutcome::TwoIndependent { set, threshold } => {
            r.insert("variant".into(), "two-independent".into());
            if let Some(prefix) = &a.out {
                ctx.write(&with_suffix(prefix, ".set"), &set.to_certificate())?;
            }
            r.insert(
                "certificate".into(),
                json!({"size": set.len(), "threshold": rat(threshold), "set": members(set)}),
            );
        }
        DichotomyOutcome::Cascade {
            mcascade,
            embedding,
            s1,
            s2,
        } => {
            r.insert("variant".into(), "cascade".into());
            if let Some(prefix) = &a.out {
                ctx.write(&with_suffix(prefix, ".graph"), &mcascade.graph().to_edge_list())?;
                ctx.write(&with_suffix(prefix, ".col"), &mcascade.coloring().to_text())?;
                ctx.write(&with_suffix(prefix, ".map"), &lines(embedding))?;
            }
            r.insert(
                "certificate".into(),
                json!({
                    "m": mcascade.m(),
                    "vertices": mcascade.graph().n(),
                    "edges": mcascade.graph().m(),
                    "counts": counts(mcascade.coloring()),
                    "s1": rat(s1),
                    "s2": rat(s2),
                    "embedding": embedding,
                }),
            );
        }
    }
    Ok(Outcome::ok(Value::Object(r)))
}

fn survey(a: &SurveyArgs, ctx: &mut Context) -> Result<Outcome, Failure> {
    let families: Vec<Family> = if a.family == "all" {
        Family::ALL.to_vec()
    } else {
        vec![Family::from_name(&a.family).ok_or_else(|| {
            Failure::Usage(format!(
                "unknown family {:?}; expected kprime, path, cycle, star, complete or all",
                a.family
            ))
        })?]
    };
    let rows: Vec<Value> = families
        .into_iter()
        .flat_map(|f| ratio_survey(f, &a.sizes, &ctx.solver))
        .map(|row| match &row.values {
            Ok(v) => json!({
                "family": row.family.name(),
                "size": row.size,
                "n": v.n,
                "gamma": v.gamma,
                "alpha2": v.alpha2,
                "gamma_star": rat(&v.gamma_star),
                "ratio": rat(&v.ratio),
                "mad": rat(&v.mad),
            }),
            Err(reason) => json!({"family": row.family.name(), "size": row.size, "refused": reason}),
        })
        .collect();
    Ok(Outcome::ok(json!({ "rows": rows })))
}

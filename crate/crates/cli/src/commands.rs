use cellrim::diagram::min_column_diagram;
use cellrim::families::{
    brute_force_rim, determining_tuple, family_diagram, orderings, rim_diagrams, verify_induced_rim,
    verify_rim_family, verify_transport, z_ideal, FamilyParams, Guard, RimDiagrams, RimRoute,
};
use cellrim::paths::{find_form_path, find_kpath_with_type, is_admissible, subsequence_type};
use cellrim::rs::{calibrate, right_cell_of, right_equivalent, rs_pair, RIGHT_CELL_SIDE};
use cellrim::symmetric::{coset_decompose, longest_in_parabolic, parabolic};
use cellrim::{Composition, Diagram, Error, GeneratorSet, Node, Ordering3, Partition, Permutation, StuShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{CellArgs, DiagramCommand, FamilyArgs, OracleArgs, RimArgs, VerifyCommand};

/// A rendered result. `passed` is false when a mathematical check failed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, passed: true }
    }
}

pub enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res = Result<Output, Failure>;

pub struct Ctx {
    pub guard: Guard,
    pub plain: bool,
}

fn word_text(x: &Permutation) -> String {
    let w = x.reduced_word();
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn rim(args: &RimArgs, ctx: &Ctx) -> Res {
    let lambda = Composition::new(args.composition.clone())?;
    let e = if args.brute_force {
        RimDiagrams::new(&lambda, RimRoute::BruteForce, brute_force_rim(&lambda, &ctx.guard)?)
    } else {
        rim_diagrams(&lambda, &ctx.guard)?
    };
    let mut entries: Vec<(Permutation, Diagram)> = e.all.iter().map(|d| (d.w(), d.clone())).collect();
    entries.sort_by_cached_key(|(y, _)| (y.length(), y.images()));
    let route = serde_json::to_value(e.route).unwrap();
    let json = json!({
        "lambda": lambda.parts(),
        "route": route,
        "rim_size": entries.len(),
        "special": e.special.len(),
        "nonspecial": e.nonspecial_count(),
        "elements": entries.iter().map(|(y, _)| y.images()).collect::<Vec<_>>(),
        "reduced_words": entries.iter().map(|(y, _)| y.reduced_word()).collect::<Vec<_>>(),
        "diagrams": entries.iter().map(|(_, d)| d).collect::<Vec<_>>(),
        "is_special": entries.iter().map(|(_, d)| d.is_special()).collect::<Vec<_>>(),
    });
    let mut text = format!(
        "λ = {lambda}  route: {}\nrim size {} ({} special, {} nonspecial)\n",
        route.as_str().unwrap_or_default(),
        entries.len(),
        e.special.len(),
        e.nonspecial_count()
    );
    for (k, (y, d)) in entries.iter().enumerate() {
        let tag = if d.is_special() { "special" } else { "nonspecial" };
        text.push_str(&format!("\ny{} = {}  {}  [{tag}]\n", k + 1, word_text(y), y));
        text.push_str(&d.render_ascii(ctx.plain));
    }
    Ok(Output::ok(json, text))
}

pub fn cell(args: &CellArgs, ctx: &Ctx) -> Res {
    if let Some(images) = &args.perm {
        let x = Permutation::from_images(images)?;
        ctx.guard.check_family(x.degree())?;
        let (p, q) = rs_pair(&x);
        let cell = right_cell_of(&x);
        let json = json!({
            "perm": x.images(),
            "p": p,
            "q": q,
            "shape": p.shape().parts(),
            "right_cell_size": cell.len(),
            "right_cell": cell.iter().map(Permutation::images).collect::<Vec<_>>(),
        });
        let mut text = format!("x = {x}  ({})\nP:\n{p}Q:\n{q}right cell: {} elements\n", word_text(&x), cell.len());
        for y in &cell {
            text.push_str(&format!("  {y}  {}\n", word_text(y)));
        }
        return Ok(Output::ok(json, text));
    }
    let parts = args.composition.clone().unwrap_or_default();
    let lambda = Composition::new(parts)?;
    let z = z_ideal(&lambda, &ctx.guard)?;
    let w_j = longest_in_parabolic(lambda.size(), &lambda.generator_set());
    let json = json!({
        "lambda": lambda.parts(),
        "w_j": w_j.images(),
        "z_size": z.len(),
        "z": z.iter().map(Permutation::images).collect::<Vec<_>>(),
    });
    let mut text = format!("λ = {lambda}  w_J = {w_j}\nZ(λ): {} elements\n", z.len());
    for e in &z {
        text.push_str(&format!("  {e}  {}\n", word_text(e)));
    }
    Ok(Output::ok(json, text))
}

fn parse_nodes(text: &str) -> Result<Diagram, Failure> {
    let mut nodes = Vec::new();
    for item in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let coords: Vec<usize> = item
            .split(',')
            .map(|v| v.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("bad node {item:?}")))?;
        match coords[..] {
            [a, b] if a > 0 && b > 0 => nodes.push(Node::new(a, b)),
            _ => return Err(Failure::Usage(format!("bad node {item:?}"))),
        }
    }
    Ok(Diagram::from_nodes(nodes)?)
}

fn annotate(d: &Diagram, ctx: &Ctx, lambda_prime_search: bool) -> Output {
    let w = d.w();
    let admissible = is_admissible(d);
    let mut json = json!({
        "nodes": d,
        "rows": d.row_composition().parts(),
        "columns": d.column_lengths(),
        "admissible": admissible,
        "special": d.is_special(),
        "subsequence_type": subsequence_type(d).parts(),
        "w": w.images(),
        "reduced_word": w.reduced_word(),
    });
    let mut text = d.render_ascii(ctx.plain);
    text.push_str(&format!(
        "rows {}  columns {:?}\nadmissible: {admissible}  special: {}\nsubsequence type: {}\nw = {w}  {}\n",
        d.row_composition(),
        d.column_lengths(),
        d.is_special(),
        subsequence_type(d),
        word_text(&w)
    ));
    if lambda_prime_search {
        let lambda_prime = d.row_composition().conjugate();
        let found = find_kpath_with_type(d.nodes(), &lambda_prime);
        json["lambda_prime_path"] = json!(found);
        text.push_str(&format!("k-path of type {lambda_prime}: {}\n", if found.is_some() { "yes" } else { "none" }));
    }
    if let Ok(shape) = StuShape::from_composition(&d.row_composition()) {
        if let Ok(tuple) = determining_tuple(d, &shape) {
            json["determining_tuple"] = json!(tuple.to_string());
            text.push_str(&format!("determining tuple: {tuple}\n"));
        }
    }
    if let Ok((pi, class)) = find_form_path(d) {
        json["form_path"] = json!({ "class": format!("{class:?}"), "paths": pi });
        text.push_str(&format!("form path ({class:?}):"));
        for path in pi.paths() {
            let nodes: Vec<String> = path.iter().map(|p| format!("({},{})", p.row, p.col)).collect();
            text.push_str(&format!(" {{{}}}", nodes.join(",")));
        }
        text.push('\n');
    }
    Output::ok(json, text)
}

fn family(letter: char, a: &FamilyArgs, ctx: &Ctx) -> Res {
    let [s, t, u] = a.stu[..] else {
        return Err(Failure::Usage("--stu takes three values s,t,u".into()));
    };
    let default_order = match letter {
        'F' => Ordering3::Sut,
        'G' => Ordering3::Tsu,
        'H' => Ordering3::Tus,
        'M' => Ordering3::Ust,
        _ => Ordering3::Uts,
    };
    let order = match &a.order {
        Some(o) => o.parse()?,
        None => default_order,
    };
    let shape = StuShape::new(s, t, u, order, 1)?;
    let want = |k: usize| -> Result<(), Failure> {
        if a.params.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!("{letter} takes {k} --params values, got {}", a.params.len())))
        }
    };
    let params = match letter {
        'F' => FamilyParams::F { c: a.c.clone() },
        'G' => FamilyParams::G { c: a.c.clone() },
        'H' => {
            let v = a.v.ok_or_else(|| Failure::Usage("H needs --v".into()))?;
            FamilyParams::H { v, c_tilde: a.c.clone() }
        }
        'M' => {
            want(5)?;
            let p = &a.params;
            FamilyParams::M { epsilon: p[0], eta: p[1], theta: p[2], zeta: p[3], psi: p[4], c: a.c.clone() }
        }
        _ => {
            want(5)?;
            let p = &a.params;
            FamilyParams::N { eta: p[0], epsilon: p[1], theta: p[2], phi: p[3], zeta: p[4] }
        }
    };
    let d = family_diagram(&params, &shape)?;
    let mut out = annotate(&d, ctx, false);
    out.json["params"] = serde_json::to_value(&params).unwrap();
    out.json["lambda"] = json!(shape.composition().parts());
    out.text = format!("{letter} for λ = {}\n{}", shape.composition(), out.text);
    Ok(out)
}

pub fn diagram(cmd: &DiagramCommand, ctx: &Ctx) -> Res {
    match cmd {
        DiagramCommand::Young { partition } => {
            let d = Diagram::young(&Partition::new(partition.clone())?)?;
            Ok(annotate(&d, ctx, false))
        }
        DiagramCommand::F(a) => family('F', a, ctx),
        DiagramCommand::G(a) => family('G', a, ctx),
        DiagramCommand::H(a) => family('H', a, ctx),
        DiagramCommand::M(a) => family('M', a, ctx),
        DiagramCommand::N(a) => family('N', a, ctx),
        DiagramCommand::Check { nodes } => Ok(annotate(&parse_nodes(nodes)?, ctx, true)),
        DiagramCommand::MinColumn { perm, composition } => {
            let d = min_column_diagram(&Permutation::from_images(perm)?, &Composition::new(composition.clone())?)?;
            Ok(annotate(&d, ctx, false))
        }
    }
}

pub fn verify(cmd: &VerifyCommand, ctx: &Ctx) -> Res {
    match *cmd {
        VerifyCommand::Tables { s, t, u, r } => {
            let mut results = Vec::new();
            let mut text = String::new();
            let mut passed = true;
            for shape in orderings(s, t, u)? {
                let shape = shape.with_trailing_ones(r)?;
                let report = verify_rim_family(&shape.composition(), &ctx.guard)?;
                passed &= report.passed();
                text.push_str(&format!(
                    "{} {}  table {:?}  closed form {:?}  brute force {:?}  antichain {}  complete {}\n",
                    pass_fail(report.passed()),
                    shape.composition(),
                    report.table,
                    report.closed_form,
                    report.brute_force,
                    report.antichain,
                    report.complete
                ));
                results.push(report);
            }
            let json = json!({ "suite": "tables", "passed": passed, "results": results });
            Ok(Output { json, text, passed })
        }
        VerifyCommand::Oracle { max_n, samples, seed } => {
            ctx.guard.check_group(max_n)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut passed = true;
            for n in 1..=max_n {
                let (mut cases, mut bad) = (0usize, 0usize);
                for lambda in Composition::all(n) {
                    let data = parabolic(&lambda.generator_set(), n)?;
                    for e in &data.cosets {
                        cases += 1;
                        bad += usize::from(!membership_agrees(&lambda, &data.w_j, e)?);
                    }
                }
                passed &= bad == 0;
                text.push_str(&format!("{} n = {n}: {cases} cases, {bad} discrepancies\n", pass_fail(bad == 0)));
                rows.push(json!({ "n": n, "cases": cases, "discrepancies": bad }));
            }
            let mut sampled = Value::Null;
            if samples > 0 {
                let m = max_n + 1;
                ctx.guard.check_group(m)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut bad = 0usize;
                for _ in 0..samples {
                    let cuts: Vec<usize> = (1..m).filter(|_| rng.gen_bool(0.5)).collect();
                    let j = GeneratorSet::from_indices(m, &(1..m).filter(|i| !cuts.contains(i)).collect::<Vec<_>>())?;
                    let lambda = composition_of(m, &cuts)?;
                    let mut images: Vec<usize> = (1..=m).collect();
                    rand::seq::SliceRandom::shuffle(&mut images[..], &mut rng);
                    let (_, e) = coset_decompose(&Permutation::from_images(&images)?, &j);
                    bad += usize::from(!membership_agrees(&lambda, &longest_in_parabolic(m, &j), &e)?);
                }
                passed &= bad == 0;
                text.push_str(&format!(
                    "{} n = {m}: {samples} random samples (seed {seed}), {bad} discrepancies\n",
                    pass_fail(bad == 0)
                ));
                sampled = json!({ "n": m, "samples": samples, "seed": seed, "discrepancies": bad });
            }
            let json = json!({ "suite": "oracle", "passed": passed, "exhaustive": rows, "sampled": sampled });
            Ok(Output { json, text, passed })
        }
        VerifyCommand::Bijections { max_n } => {
            ctx.guard.check_group(max_n)?;
            let mut failures = Vec::new();
            let (mut transport, mut induced) = (0usize, 0usize);
            for n in 1..=max_n {
                for lambda in Composition::all(n) {
                    let r = verify_transport(&lambda, &ctx.guard)?;
                    transport += 1;
                    if !r.passed() {
                        failures.push(json!({ "check": "transport", "report": r }));
                    }
                    if n < max_n {
                        let r = verify_induced_rim(&lambda, &ctx.guard)?;
                        induced += 1;
                        if !r.passed() {
                            failures.push(json!({ "check": "induced", "report": r }));
                        }
                    }
                }
            }
            let passed = failures.is_empty();
            let text = format!(
                "{} rotation and ψ transport: {transport} compositions\n{} induced rims: {induced} compositions\n{}",
                pass_fail(!failures.iter().any(|f| f["check"] == "transport")),
                pass_fail(!failures.iter().any(|f| f["check"] == "induced")),
                failures.iter().map(|f| format!("  failed: {f}\n")).collect::<String>()
            );
            let json = json!({
                "suite": "bijections",
                "passed": passed,
                "transport_checked": transport,
                "induced_checked": induced,
                "failures": failures,
            });
            Ok(Output { json, text, passed })
        }
    }
}

fn composition_of(m: usize, cuts: &[usize]) -> Result<Composition, Failure> {
    let mut parts = Vec::new();
    let mut last = 0;
    for &c in cuts.iter().chain([m].iter()) {
        parts.push(c - last);
        last = c;
    }
    Ok(Composition::new(parts)?)
}

fn membership_agrees(lambda: &Composition, w_j: &Permutation, e: &Permutation) -> Result<bool, Failure> {
    let by_cells = right_equivalent(&w_j.compose(e)?, w_j)?;
    let by_paths = is_admissible(&min_column_diagram(e, lambda)?);
    Ok(by_cells == by_paths)
}

pub fn oracle(args: &OracleArgs, ctx: &Ctx) -> Res {
    ctx.guard.check_group(args.max_n)?;
    let cal = calibrate(1..=args.max_n)?;
    let winner = cal.winner();
    let passed = winner == Some(RIGHT_CELL_SIDE);
    let json = json!({
        "max_n": args.max_n,
        "calibration": cal,
        "winner": winner,
        "configured": RIGHT_CELL_SIDE,
    });
    let text = format!(
        "{} n <= {}: {} cases; P side {} discrepancies, Q side {}; configured side {:?}\n",
        pass_fail(passed),
        args.max_n,
        cal.cases,
        cal.p_discrepancies,
        cal.q_discrepancies,
        RIGHT_CELL_SIDE
    );
    Ok(Output { json, text, passed })
}

//! Acceptance gates. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; exits non-zero if any criterion fails.

use std::collections::{BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cellrim::diagram::{min_column_diagram, Diagram, Node};
use cellrim::families::{
    brute_force_rim, closed_form_rim, determining_tuple, family_diagram, orderings, prefix_comparable_pairs,
    rim_params, table_counts, verify_induced_rim, verify_transport, z_ideal_checked, FamilyParams, Guard,
};
use cellrim::paths::{classify_form, find_kpath_with_type, is_admissible, FormClass, KPath};
use cellrim::rs::{right_equivalent, TableauSide, RIGHT_CELL_SIDE};
use cellrim::shape::{Ordering3, StuShape};
use cellrim::symmetric::{
    coset_decompose, is_coset_representative, longest_in_parabolic, minimal_determining_set, parabolic,
    parabolic_elements, Composition, GeneratorSet, InversionSet, Partition, Permutation,
};

type Check = std::result::Result<String, String>;
type Criterion = (u8, &'static str, Duration, fn() -> Check);

const TABLE_LIMIT: Duration = Duration::from_secs(60);
const CLOSED_FORM_LIMIT: Duration = Duration::from_secs(120);
const PSI_LIMIT: Duration = Duration::from_secs(600);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const DUALITY_LIMIT: Duration = Duration::from_secs(60);
const PARABOLIC_LIMIT: Duration = Duration::from_secs(300);
const INDUCED_LIMIT: Duration = Duration::from_secs(300);
const ROTATION_LIMIT: Duration = Duration::from_secs(300);
const LARGE_SHAPE_LIMIT: Duration = Duration::from_secs(60);
const FIXTURE_LIMIT: Duration = Duration::from_secs(60);

fn comp(p: &[usize]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `Z(λ)` by scanning all of `S_n`: `e ∈ X_J` with `w_J·e ∼_R w_J`.
fn z_by_group_scan(lambda: &Composition) -> Vec<Permutation> {
    let n = lambda.size();
    let j = lambda.generator_set();
    let w_j = longest_in_parabolic(n, &j);
    let mut out: Vec<Permutation> = Permutation::all(n)
        .filter(|e| is_coset_representative(e, &j))
        .filter(|e| right_equivalent(&w_j.compose(e).unwrap(), &w_j).unwrap())
        .collect();
    cellrim::symmetric::sort_canonical(&mut out);
    out
}

/// Brute-force `Y(λ)` and `{D(y, λ)}`, with the group scan checked against
/// both library routes for `Z(λ)`.
fn brute_rim(lambda: &Composition, guard: &Guard) -> std::result::Result<(Vec<Permutation>, Vec<Diagram>), String> {
    let scanned = z_by_group_scan(lambda);
    let routed = z_ideal_checked(lambda, guard).map_err(|e| e.to_string())?;
    ensure(scanned == routed, || format!("Z{lambda}: group scan {} vs library {}", scanned.len(), routed.len()))?;
    let y = minimal_determining_set(&scanned.into_iter().collect::<HashSet<_>>());
    let mut diagrams: Vec<Diagram> = y.iter().map(|e| min_column_diagram(e, lambda).unwrap()).collect();
    diagrams.sort();
    Ok((y, diagrams))
}

fn split_counts(diagrams: &[Diagram]) -> (u64, u64) {
    let special = diagrams.iter().filter(|d| d.is_special()).count() as u64;
    (special, diagrams.len() as u64 - special)
}

fn table_reproduction() -> Check {
    let guard = Guard::default();
    let mut parts = Vec::new();
    for shape in orderings(3, 2, 1).map_err(|e| e.to_string())? {
        let lambda = shape.composition();
        let (y, diagrams) = brute_rim(&lambda, &guard)?;
        let got = split_counts(&diagrams);
        ensure(y.len() == diagrams.len(), || format!("{lambda}: y ↦ D(y, λ) not injective"))?;
        let want = table_counts(&shape);
        ensure(got == want, || format!("{lambda}: brute force {got:?}, table {want:?}"))?;
        parts.push(format!("{}:{got:?}", shape.order));
    }
    Ok(parts.join(" "))
}

fn closed_form_equality() -> Check {
    let guard = Guard::default();
    let mut sizes = Vec::new();
    for shape in orderings(3, 2, 1).map_err(|e| e.to_string())? {
        let lambda = shape.composition();
        let (_, brute) = brute_rim(&lambda, &guard)?;
        let closed = closed_form_rim(&shape).map_err(|e| e.to_string())?;
        ensure(brute == closed, || format!("{lambda}: brute {brute:?} vs closed form {closed:?}"))?;
        sizes.push(closed.len().to_string());
    }
    Ok(format!("set sizes {}", sizes.join(",")))
}

fn psi_transport() -> Check {
    let guard = Guard::default();
    let base = comp(&[1, 3, 2, 1]);
    let lambda = comp(&[1, 3, 2, 1, 1]);
    let (_, small) = brute_rim(&base, &guard)?;
    let (_, big) = brute_rim(&lambda, &guard)?;
    let (c4, c5) = (split_counts(&small), split_counts(&big));
    ensure(c4 == c5, || format!("counts r=4 {c4:?}, r=5 {c5:?}"))?;
    let mapped: BTreeSet<Diagram> = small.iter().map(|d| d.psi_append().unwrap()).collect();
    let target: BTreeSet<Diagram> = big.iter().cloned().collect();
    ensure(mapped == target, || format!("ψ image {mapped:?} vs brute force {target:?}"))?;
    let shape = StuShape::from_composition(&lambda).map_err(|e| e.to_string())?;
    let closed: BTreeSet<Diagram> = closed_form_rim(&shape).map_err(|e| e.to_string())?.into_iter().collect();
    ensure(closed == target, || "closed form at r=5 differs from brute force".into())?;
    Ok(format!("counts {c5:?} in S_8"))
}

fn oracle_calibration() -> Check {
    ensure(RIGHT_CELL_SIDE == TableauSide::Q, || "unexpected tableau side".into())?;
    let (mut cases, mut bad) = (0usize, 0usize);
    for n in 4..=6 {
        for lambda in Composition::all(n) {
            let j = lambda.generator_set();
            let data = parabolic(&j, n).map_err(|e| e.to_string())?;
            for e in &data.cosets {
                let by_cells = right_equivalent(&data.w_j.compose(e).unwrap(), &data.w_j).unwrap();
                let by_paths = is_admissible(&min_column_diagram(e, &lambda).unwrap());
                cases += 1;
                bad += usize::from(by_cells != by_paths);
            }
        }
    }
    ensure(bad == 0, || format!("{bad} discrepancies in {cases} cases"))?;
    Ok(format!("{cases} cases, 0 discrepancies"))
}

/// Prefix by definition: `l(x') + l(x'^{-1} x) = l(x)`.
fn is_prefix_by_length(xp: &Permutation, x: &Permutation) -> bool {
    xp.length() + xp.inverse().compose(x).unwrap().length() == x.length()
}

fn prefix_duality() -> Check {
    let mut pairs = 0usize;
    let mut bad = 0usize;
    for n in 1..=6 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        let sets: Vec<InversionSet> =
            all.iter().map(|x| InversionSet::from_reduced_word(n, &x.reduced_word()).unwrap()).collect();
        for (a, xp) in all.iter().enumerate() {
            for (b, x) in all.iter().enumerate() {
                pairs += 1;
                bad += usize::from(is_prefix_by_length(xp, x) != sets[a].is_subset(&sets[b]));
            }
        }
    }
    ensure(bad == 0, || format!("{bad} discrepancies in {pairs} pairs"))?;
    Ok(format!("{pairs} pairs, 0 discrepancies"))
}

fn parabolic_identities() -> Check {
    let mut checks = 0usize;
    for n in 1..=7 {
        let all: Vec<Permutation> = Permutation::all(n).collect();
        for j in GeneratorSet::all_subsets(n) {
            let data = parabolic(&j, n).map_err(|e| e.to_string())?;
            let top = data.d_j.inversion_set();
            let complement = InversionSet::all_positive(n).difference(&InversionSet::parabolic_positive(n, &j));
            ensure(top == complement, || format!("N(d_J) for J = {:?} in S_{n}", j.indices()))?;
            for v in parabolic_elements(&j, n) {
                checks += 1;
                ensure(top.act(&v).as_ref() == Some(&top), || format!("N(d_J)·v for v = {v}"))?;
            }
            for x in &all {
                let (u, d) = coset_decompose(x, &j);
                let n_u = u.inversion_set();
                let moved = d.inversion_set().act(&u.inverse()).ok_or_else(|| format!("N(d)u⁻¹ not positive, x = {x}"))?;
                checks += 1;
                ensure(n_u.is_disjoint(&moved) && n_u.union(&moved) == x.inversion_set(), || {
                    format!("disjoint union fails for x = {x}, J = {:?}", j.indices())
                })?;
            }
        }
    }
    Ok(format!("{checks} identities"))
}

fn induced_rims() -> Check {
    let guard = Guard::default();
    let mut count = 0;
    for n in 1..=5 {
        for lambda in Composition::all(n) {
            let r = verify_induced_rim(&lambda, &guard).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("{r:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} compositions"))
}

fn from_rows(rows: &[&str]) -> Diagram {
    let mut nodes = Vec::new();
    for (r, line) in rows.iter().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            if ch == 'x' {
                nodes.push(Node::new(r + 1, c + 1));
            }
        }
    }
    Diagram::from_nodes(nodes).unwrap()
}

fn kpath(paths: &[&[(usize, usize)]]) -> KPath {
    KPath::from_pairs(paths).unwrap()
}

fn check_paths(d: &Diagram, pi: &KPath, pi_prime: &KPath, label: &str) -> std::result::Result<(), String> {
    let lambda_prime = Partition::new(vec![4, 3, 3, 2, 2, 1, 1, 1]).unwrap();
    let type_b = Partition::new(vec![3, 3, 3, 3, 2, 1, 1, 1]).unwrap();
    ensure(pi.covers(d) && pi_prime.covers(d), || format!("{label}: paths do not cover the diagram"))?;
    ensure(pi.path_type() == lambda_prime, || format!("{label}: Π has type {}", pi.path_type()))?;
    ensure(pi_prime.path_type() == type_b, || format!("{label}: Π′ has type {}", pi_prime.path_type()))?;
    ensure(pi_prime.is_ordered(), || format!("{label}: Π′ not ordered"))?;
    ensure(classify_form(pi_prime, 8, 5, 3) == Ok(FormClass::FormB), || format!("{label}: Π′ not form-B"))
}

fn fixtures() -> Check {
    let d = Diagram::from_pairs(&[
        (1, 2), (1, 3), (1, 6), (1, 7),
        (2, 1), (2, 3), (2, 4), (2, 6), (2, 7), (2, 8),
        (3, 5), (3, 6), (3, 8),
        (4, 6),
    ])
    .unwrap();
    let pi_one = kpath(&[
        &[(2, 1)],
        &[(1, 2), (2, 3), (3, 5), (4, 6)],
        &[(1, 3), (2, 4), (3, 6)],
        &[(2, 6)],
        &[(1, 6), (2, 7), (3, 8)],
        &[(1, 7), (2, 8)],
    ]);
    let pi_two = kpath(&[
        &[(2, 1)],
        &[(1, 2), (2, 3), (4, 6)],
        &[(1, 3), (2, 4), (3, 5)],
        &[(1, 6), (2, 6), (3, 6)],
        &[(1, 7), (2, 7), (3, 8)],
        &[(2, 8)],
    ]);
    ensure(pi_one.covers(&d) && pi_two.covers(&d), || "Π₁/Π₂ do not cover the diagram".into())?;
    ensure(classify_form(&pi_one, 6, 4, 3) == Ok(FormClass::FormA), || "Π₁ is not form-A".into())?;
    ensure(classify_form(&pi_two, 6, 4, 3) == Ok(FormClass::FormB), || "Π₂ is not form-B".into())?;

    let shape = |o| StuShape::new(8, 5, 3, o, 1).unwrap();
    let f = family_diagram(&FamilyParams::F { c: vec![2, 3, 4] }, &shape(Ordering3::Sut)).unwrap();
    ensure(f == from_rows(&["xxxxxxxx", ".xxx....", "xxxxx...", ".x......"]), || "F_C array".into())?;
    let g = family_diagram(&FamilyParams::G { c: vec![2, 4, 5] }, &shape(Ordering3::Tsu)).unwrap();
    ensure(g == from_rows(&[".x.xx.xx", "xxxxxxxx", ".x.xx...", ".x......"]), || "G_C array".into())?;
    let h = family_diagram(&FamilyParams::H { v: 3, c_tilde: vec![6, 8] }, &shape(Ordering3::Tus)).unwrap();
    ensure(h == from_rows(&["..x.xxxx", "..x..x.x", "xxxxxxxx", "..x....."]), || "H_C array".into())?;

    let m_params = FamilyParams::M { epsilon: 1, eta: 3, theta: 1, zeta: 0, psi: 3, c: vec![7, 8] };
    let m = family_diagram(&m_params, &shape(Ordering3::Ust)).unwrap();
    ensure(m == from_rows(&["....x.xx.", "xxxxx.xxx", "x...xxxx.", "....x...."]), || "M array".into())?;
    let tuple = determining_tuple(&m, &shape(Ordering3::Ust)).map_err(|e| e.to_string())?;
    ensure(tuple.to_string() == "(2,1,1,1,4,1\u{304},3,3,1)", || format!("M tuple {tuple}"))?;
    let m_pi = kpath(&[
        &[(2, 1), (3, 1)],
        &[(2, 2), (3, 6)],
        &[(2, 3)],
        &[(2, 4)],
        &[(1, 5), (2, 5), (3, 5), (4, 5)],
        &[(1, 7), (2, 7), (3, 7)],
        &[(1, 8), (2, 8), (3, 8)],
        &[(2, 9)],
    ]);
    let m_pi_prime = kpath(&[
        &[(2, 1), (3, 1)],
        &[(2, 2), (3, 5), (4, 5)],
        &[(2, 3)],
        &[(2, 4)],
        &[(1, 5), (2, 5), (3, 6)],
        &[(1, 7), (2, 7), (3, 7)],
        &[(1, 8), (2, 8), (3, 8)],
        &[(2, 9)],
    ]);
    check_paths(&m, &m_pi, &m_pi_prime, "M")?;

    let n_params = FamilyParams::N { eta: 3, epsilon: 0, theta: 1, phi: 1, zeta: 1 };
    let nd = family_diagram(&n_params, &shape(Ordering3::Uts)).unwrap();
    ensure(nd == from_rows(&["....x..xx", "...xx.xxx", "xxx.xxxxx", "....x...."]), || "N array".into())?;
    let n_pi = kpath(&[
        &[(3, 1)],
        &[(3, 2)],
        &[(3, 3)],
        &[(2, 4), (3, 6)],
        &[(1, 5), (2, 5), (3, 5), (4, 5)],
        &[(2, 7), (3, 7)],
        &[(1, 8), (2, 8), (3, 8)],
        &[(1, 9), (2, 9), (3, 9)],
    ]);
    let n_pi_prime = kpath(&[
        &[(3, 1)],
        &[(3, 2)],
        &[(3, 3)],
        &[(2, 4), (3, 5), (4, 5)],
        &[(1, 5), (2, 5), (3, 6)],
        &[(2, 7), (3, 7)],
        &[(1, 8), (2, 8), (3, 8)],
        &[(1, 9), (2, 9), (3, 9)],
    ]);
    check_paths(&nd, &n_pi, &n_pi_prime, "N")?;
    Ok("example diagram, F/G/H/M/N arrays, M/N path types".into())
}

fn counterexamples() -> Check {
    // S_3, J = {s_1}: x = s_1 s_2 = u·d with u = s_1, d = s_2; x' = s_2.
    let j = GeneratorSet::from_indices(3, &[1]).unwrap();
    let x = Permutation::from_word(3, &[1, 2]).unwrap();
    let xp = Permutation::from_word(3, &[2]).unwrap();
    let (u, d) = coset_decompose(&x, &j);
    let (up, dp) = coset_decompose(&xp, &j);
    ensure(u == Permutation::generator(3, 1) && d == Permutation::generator(3, 2), || "factorization of x".into())?;
    ensure(up.is_identity() && dp == d, || "factorization of x'".into())?;
    ensure(up.is_prefix_of(&u).unwrap() && dp.is_prefix_of(&d).unwrap(), || "componentwise prefix".into())?;
    ensure(xp.inverse().compose(&x).unwrap().length() == 3, || "l(x'^{-1}x) should be 3".into())?;
    ensure(!xp.is_prefix_of(&x).unwrap() && !is_prefix_by_length(&xp, &x), || "x' is a prefix of x".into())?;

    let witness = Diagram::from_pairs(&[(1, 1), (1, 2), (2, 1), (3, 2), (4, 1), (4, 2)]).unwrap();
    ensure(witness.row_composition() == comp(&[2, 1, 1, 2]), || "witness rows".into())?;
    ensure(is_admissible(&witness), || "witness should be admissible".into())?;
    let lambda_prime = witness.row_composition().conjugate();
    ensure(find_kpath_with_type(witness.nodes(), &lambda_prime).is_none(), || {
        format!("witness has a k-path of type {lambda_prime}")
    })?;
    Ok("prefix converse fails in S_3; (2,1,1,2) witness has no λ′-type path".into())
}

fn rotation_transport() -> Check {
    let guard = Guard::default();
    let mut count = 0;
    for n in 1..=6 {
        for lambda in Composition::all(n) {
            let r = verify_transport(&lambda, &guard).map_err(|e| e.to_string())?;
            ensure(r.rotation, || format!("rotation fails for {lambda}"))?;
            count += 1;
        }
    }
    // Spot-check the closed form for the reverse of a Hypothesis-(*) shape.
    let lambda = comp(&[1, 2, 3, 1]);
    let rotated: Vec<Diagram> = {
        let mut v: Vec<Diagram> = closed_form_rim(&StuShape::from_composition(&lambda).unwrap())
            .unwrap()
            .iter()
            .map(Diagram::rotate_180)
            .collect();
        v.sort();
        v
    };
    ensure(rotated == brute_force_rim(&lambda.reversed(), &guard).unwrap(), || "rotated closed form".into())?;
    Ok(format!("{count} compositions"))
}

fn large_shape() -> Check {
    let shape = StuShape::new(8, 5, 3, Ordering3::Ust, 1).unwrap();
    let counts = table_counts(&shape);
    ensure(counts == (40, 50), || format!("table_counts {counts:?}"))?;
    let diagrams: Vec<Diagram> =
        rim_params(&shape).iter().map(|p| family_diagram(p, &shape)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let distinct: BTreeSet<&Diagram> = diagrams.iter().collect();
    ensure(diagrams.len() == 90 && distinct.len() == 90, || format!("{} tuples, {} distinct", diagrams.len(), distinct.len()))?;
    let special = diagrams.iter().filter(|d| d.is_special()).count();
    ensure(special == 40, || format!("{special} special"))?;
    let pairs = prefix_comparable_pairs(&diagrams);
    ensure(pairs.is_empty(), || format!("{} prefix-comparable pairs", pairs.len()))?;
    Ok("(40, 50); 90 pairwise non-prefix-comparable diagrams".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "table reproduction at (3,2,1), r = 4", TABLE_LIMIT, table_reproduction),
        (2, "closed form equals brute force at (3,2,1)", CLOSED_FORM_LIMIT, closed_form_equality),
        (3, "r = 5 transport for (1,3,2,1,1)", PSI_LIMIT, psi_transport),
        (4, "cell membership vs admissibility, n = 4..6", ORACLE_LIMIT, oracle_calibration),
        (5, "prefix order vs inversion sets, n <= 6", DUALITY_LIMIT, prefix_duality),
        (6, "parabolic identities, n <= 7", PARABOLIC_LIMIT, parabolic_identities),
        (7, "induced rims, n <= 5", INDUCED_LIMIT, induced_rims),
        (8, "worked fixtures", FIXTURE_LIMIT, fixtures),
        (9, "counterexamples", FIXTURE_LIMIT, counterexamples),
        (10, "rotation transport, n <= 6", ROTATION_LIMIT, rotation_transport),
        (11, "large shape (8,5,3), (u,s,t)", LARGE_SHAPE_LIMIT, large_shape),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {id:>2} {name}: {detail} [{:.2}s / {}s]",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        println!("acceptance: 11/11 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 failed");
        ExitCode::FAILURE
    }
}

//! Command-line front end. Every command is a pure function of its inputs
//! returning the rendered output.

use std::fs;
use std::io::{self, Read};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bott::{
    bott, cartan_matrix, chamber_vertices, components_count, hasse_degree, mirrors, BottOutcome, CartanType,
};
use crate::cohomology::{cohomology, graded_table, truncated_complex, CohomologyTable};
use crate::error::{Error, Result};
use crate::expr::parse_bundle;
use crate::linalg::{fmt_q, parse_q, Q};
use crate::pieri::{
    olver_scaled, p2_matrices, predicted_two_step, verify_relation_coefficients, wedge_check, Ext2, PieriOracle,
};
use crate::quiver::{
    arrows_from, check_relations, from_json, rescale_from_commutative, rescale_to_commutative, to_json, QuiverRep,
};
use crate::rootsys::{module_dim, Space, Weight};
use crate::stability::{
    canonical_character, character_from_json, check_witness, decide, ex73_invariants, ex73_rep, ex73_weights,
    path_semistable, tangent_dim, Character, Witness,
};

#[derive(Parser, Debug)]
#[command(name = "hvb", version, about = "Homogeneous vector bundles as quiver representations")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArg {
    /// `p:n` or `gr:k,n`.
    #[arg(long, allow_hyphen_values = true)]
    pub space: String,
}

#[derive(Args, Debug, Clone)]
pub struct WeightArg {
    #[command(flatten)]
    pub space: SpaceArg,
    /// Comma-separated fundamental-weight coordinates.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "bundle", required_unless_present = "bundle")]
    pub weight: Option<String>,
    /// A bundle expression such as `S[2,1]U S[1]Q* O(3)`.
    #[arg(long, allow_hyphen_values = true)]
    pub bundle: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct RepArg {
    /// Representation JSON file, or `-` for stdin.
    #[arg(long)]
    pub rep: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bott's algorithm for one irreducible bundle.
    Bott(WeightArg),
    /// Weights with cohomology ν = 0, by degree.
    Chambers(SpaceArg),
    /// Number of maximal chains in the chamber poset.
    Hasse(SpaceArg),
    /// Arrows leaving a vertex, with Bott values and mirrors.
    QuiverArrows(WeightArg),
    /// Checks the relations of a representation.
    Check(RepArg),
    /// Rescales a projective-space representation to commuting squares.
    Rescale {
        #[command(flatten)]
        rep: RepArg,
        /// Undo the rescaling instead.
        #[arg(long)]
        inverse: bool,
    },
    /// H^i(E) as a table of irreducible modules.
    Cohomology {
        #[command(flatten)]
        rep: RepArg,
        /// H^i(grE) instead.
        #[arg(long)]
        graded: bool,
    },
    /// Homology of the sequence restricted to mirrors of at most n steps.
    Truncated {
        #[command(flatten)]
        rep: RepArg,
        /// Largest mirror step count kept.
        #[arg(long)]
        steps: i64,
    },
    /// Semistability and moduli checks.
    #[command(subcommand)]
    Stability(StabilityCommand),
    /// Brute-force checks of Pieri maps and relation coefficients.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Connected components of the quiver for a Cartan type.
    Components {
        #[arg(long = "type")]
        cartan: String,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CharacterArg {
    /// Character JSON file, or `auto` for the canonical character.
    #[arg(long, default_value = "auto")]
    pub character: String,
}

#[derive(Subcommand, Debug)]
pub enum StabilityCommand {
    /// The canonical character μ(α).
    Character(RepArg),
    /// Checks a candidate subrepresentation.
    Witness {
        #[command(flatten)]
        rep: RepArg,
        /// Witness JSON file: `{"spans": [{"weight": [..], "vectors": [["p/q", ..], ..]}]}`.
        #[arg(long)]
        witness: String,
        #[command(flatten)]
        character: CharacterArg,
    },
    /// Exact verdict for segment supports (and one-dimensional vertices).
    Path {
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        character: CharacterArg,
    },
    /// Tangent dimension of the relation variety modulo gauge.
    Tangent(RepArg),
    /// S and T invariants of the P² deformation family.
    Ex73 {
        /// A representation with the family's support; otherwise the maps
        /// below are used.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "1,2")]
        f1: String,
        #[arg(long, allow_hyphen_values = true, default_value = "3,-1")]
        f2: String,
        #[arg(long, allow_hyphen_values = true, default_value = "2,5")]
        f3: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1,4")]
        f4: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCommand {
    /// Dimension and weight multiplicities of a concrete S^a C^m.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        m: usize,
    },
    /// Coefficients of κ ⊗ e_i ⊗ e_j and κ ⊗ e_j ⊗ e_i after two Pieri steps.
    TwoStep {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        /// `i,j`, 1-based rows.
        #[arg(long)]
        rows: String,
        #[arg(long)]
        m: usize,
    },
    /// Evaluates one relation system on wedges of cotangent vectors.
    Relations {
        #[command(flatten)]
        weight: WeightArg,
        /// `p1,q1,p2,q2`.
        #[arg(long)]
        boxes: String,
    },
    /// The exterior-algebra matrices C_k, B_k on P² and their identities.
    P2 {
        #[arg(long)]
        k: usize,
    },
}

fn read(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

fn load_rep(a: &RepArg) -> Result<QuiverRep> {
    from_json(&read(&a.rep)?)
}

fn resolve_weight(a: &WeightArg) -> Result<(Space, Weight)> {
    let s = Space::parse(&a.space.space)?;
    let w = match (&a.weight, &a.bundle) {
        (Some(w), _) => Weight::parse(w)?,
        (None, Some(b)) => s.shape_to_weight(&parse_bundle(b, &s)?)?,
        (None, None) => return Err(Error::Parse("--weight or --bundle is required".into())),
    };
    s.check_rank(&w)?;
    Ok((s, w))
}

fn load_character(a: &CharacterArg, r: &QuiverRep) -> Result<Character> {
    if a.character == "auto" {
        canonical_character(r)
    } else {
        Ok(character_from_json(&read(&a.character)?)?.on(r))
    }
}

fn ints(text: &str, n: usize, what: &str) -> Result<Vec<usize>> {
    let v: Vec<usize> = text
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad {what} {text:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != n {
        return Err(Error::Parse(format!("{what} needs {n} entries, got {}", v.len())));
    }
    Ok(v)
}

fn partition(text: &str) -> Result<Vec<u32>> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    let v: Vec<u32> = t
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad partition {text:?}"))))
        .collect::<Result<_>>()?;
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Shape(format!("partition {v:?} is not weakly decreasing")));
    }
    Ok(v)
}

fn pair(text: &str) -> Result<[Q; 2]> {
    let v: Vec<Q> = text.split(',').map(|x| parse_q(x.trim()).map_err(Error::Parse)).collect::<Result<_>>()?;
    match <[Q; 2]>::try_from(v) {
        Ok(p) => Ok(p),
        Err(_) => Err(Error::Parse(format!("expected two rationals, got {text:?}"))),
    }
}

fn nu_text(nu: &Weight) -> String {
    let d = module_dim(nu);
    if d.bits() <= 40 {
        format!("{nu} [dim {d}]")
    } else {
        nu.to_string()
    }
}

fn table_json(t: &CohomologyTable) -> Value {
    json!(t.rows.iter().map(|r| json!({
        "degree": r.degree,
        "nu": r.nu.0,
        "multiplicity": r.multiplicity,
        "dim": r.dim.to_string(),
    })).collect::<Vec<_>>())
}

fn render(json_mode: bool, v: Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn bott_text(o: &BottOutcome) -> (Value, String) {
    match o {
        BottOutcome::Singular => (json!({"singular": true}), "singular: all cohomology vanishes\n".into()),
        BottOutcome::Value { degree, nu } => (
            json!({"singular": false, "degree": degree, "nu": nu.0, "dim": module_dim(nu).to_string()}),
            format!("degree {degree}, nu {}\n", nu_text(nu)),
        ),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Parse(e.to_string()))?;
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Result<String> {
    let j = cli.json;
    match &cli.command {
        Command::Bott(a) => {
            let (s, w) = resolve_weight(a)?;
            let (v, t) = bott_text(&bott(&s, &w)?);
            Ok(render(j, v, t))
        }
        Command::Chambers(a) => {
            let s = Space::parse(&a.space)?;
            let verts = chamber_vertices(&s);
            let v = json!(verts.iter().map(|(w, d)| json!({"degree": d, "weight": w.0})).collect::<Vec<_>>());
            let mut t = format!("{:>3}  weight\n", "i");
            for (w, d) in &verts {
                t.push_str(&format!("{d:>3}  {w}\n"));
            }
            Ok(render(j, v, t))
        }
        Command::Hasse(a) => {
            let s = Space::parse(&a.space)?;
            let d = hasse_degree(&s);
            Ok(render(j, json!({"space": s.to_string(), "degree": d.to_string()}), format!("{d}\n")))
        }
        Command::QuiverArrows(a) => {
            let (s, w) = resolve_weight(a)?;
            let arrows = arrows_from(&s, &w)?;
            let mut rows = Vec::new();
            let mut t = format!("from {w}, slope {}\n", fmt_q(&s.slope(&w)?));
            for (b, target) in &arrows {
                let (bv, bt) = bott_text(&bott(&s, target)?);
                t.push_str(&format!("  box ({},{}) -> {target}: {bt}", b.0, b.1));
                rows.push(json!({"box": [b.0, b.1], "target": target.0, "bott": bv}));
            }
            let mirror_rows: Vec<Value> = match bott(&s, &w)? {
                BottOutcome::Singular => Vec::new(),
                BottOutcome::Value { .. } => mirrors(&s, &w)?
                    .into_iter()
                    .map(|m| {
                        t.push_str(&format!(
                            "  mirror {:?} across box {} in {} steps -> {}\n",
                            m.direction, m.xi_index, m.steps, m.target
                        ));
                        json!({"target": m.target.0, "steps": m.steps, "direction": format!("{:?}", m.direction).to_lowercase(), "xi": m.xi_index})
                    })
                    .collect(),
            };
            Ok(render(j, json!({"weight": w.0, "arrows": rows, "mirrors": mirror_rows}), t))
        }
        Command::Check(a) => {
            let r = load_rep(a)?;
            let v = check_relations(&r);
            if v.is_empty() {
                return Ok(render(j, json!({"valid": true, "violations": []}), "ok: all relations hold\n".into()));
            }
            Err(Error::Relations(v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n")))
        }
        Command::Rescale { rep, inverse } => {
            let r = load_rep(rep)?;
            let out = if *inverse { rescale_from_commutative(&r)? } else { rescale_to_commutative(&r)? };
            let mut s = to_json(&out);
            s.push('\n');
            Ok(s)
        }
        Command::Cohomology { rep, graded } => {
            let r = load_rep(rep)?;
            let t = if *graded { graded_table(&r) } else { cohomology(&r)? };
            Ok(render(j, table_json(&t), t.to_text()))
        }
        Command::Truncated { rep, steps } => {
            let r = load_rep(rep)?;
            let tr = truncated_complex(&r, *steps)?;
            let v = json!({
                "steps": tr.steps,
                "is_complex": tr.is_complex,
                "caveat": tr.caveat,
                "table": tr.table.as_ref().map(table_json),
            });
            let mut t = match &tr.table {
                Some(tab) => tab.to_text(),
                None => "not a complex: consecutive maps compose to a nonzero map\n".into(),
            };
            if tr.caveat {
                t.push_str("note: homology of the truncated sequence, not a subquotient statement about H^i(E)\n");
            }
            Ok(render(j, v, t))
        }
        Command::Components { cartan, rank } => {
            let t: CartanType = cartan.parse()?;
            let c = components_count(&cartan_matrix(t, *rank)?)?;
            Ok(render(j, json!({"components": c.to_string()}), format!("{c}\n")))
        }
        Command::Stability(sc) => stability(j, sc),
        Command::Oracle(oc) => oracle(j, oc),
    }
}

fn stability(j: bool, sc: &StabilityCommand) -> Result<String> {
    match sc {
        StabilityCommand::Character(a) => {
            let r = load_rep(a)?;
            let ch = canonical_character(&r)?;
            let content = ch.content();
            let prim = ch.primitive();
            let v = json!({
                "sigma": ch.weights.iter().zip(&ch.sigma).map(|(w, s)| json!({"weight": w.0, "value": s.to_string()})).collect::<Vec<_>>(),
                "scale": ch.scale.to_string(),
                "content": content.to_string(),
            });
            let mut t = format!("character = {content}·({})\n", prim.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
            if ch.scale != num_bigint::BigInt::from(1) {
                t.push_str(&format!("scaled by {} to clear denominators\n", ch.scale));
            }
            for (w, s) in ch.weights.iter().zip(&ch.sigma) {
                t.push_str(&format!("  {w}: {s}\n"));
            }
            Ok(render(j, v, t))
        }
        StabilityCommand::Witness { rep, witness, character } => {
            let r = load_rep(rep)?;
            let ch = load_character(character, &r)?;
            let w = Witness::from_json(&read(witness)?)?;
            let rep = check_witness(&r, &w, &ch)?;
            let v = json!({
                "invariant": rep.invariant,
                "pairing": rep.pairing.to_string(),
                "subdims": rep.subdims,
                "destabilizing": rep.destabilizing(),
            });
            let t = if !rep.invariant {
                "not a subrepresentation: some arrow leaves the span\n".to_string()
            } else if rep.destabilizing() {
                format!("destabilizing: pairing {}\n", rep.pairing)
            } else {
                format!("subrepresentation with pairing {}\n", rep.pairing)
            };
            Ok(render(j, v, t))
        }
        StabilityCommand::Path { rep, character } => {
            let r = load_rep(rep)?;
            let ch = load_character(character, &r)?;
            let verdict = if character.character == "auto" { decide(&r, &ch)? } else { path_semistable(&r, &ch)? };
            let v = json!({
                "semistable": verdict.semistable,
                "stable": verdict.stable,
                "destabilizer": verdict.destabilizer,
            });
            let mut t = if verdict.semistable { "semistable\n".to_string() } else { "unstable\n".to_string() };
            if verdict.stable == Some(true) {
                t = "stable\n".into();
            }
            if let Some(d) = &verdict.destabilizer {
                t.push_str(&format!("destabilizing dimension vector {d:?}\n"));
            }
            Ok(render(j, v, t))
        }
        StabilityCommand::Tangent(a) => {
            let r = load_rep(a)?;
            let t = tangent_dim(&r)?;
            let v = json!({
                "label": "tangent dimension of the relation variety modulo gauge",
                "dim": t.dim,
                "kernel": t.kernel,
                "gauge": t.gauge,
                "endomorphisms": t.endomorphisms,
            });
            let text = format!(
                "tangent dimension of the relation variety modulo gauge: {}\n  linearized kernel {}, gauge {}, endomorphisms {}\n",
                t.dim, t.kernel, t.gauge, t.endomorphisms
            );
            Ok(render(j, v, text))
        }
        StabilityCommand::Ex73 { rep, f1, f2, f3, f4 } => {
            let r = match rep {
                Some(p) => from_json(&read(p)?)?,
                None => ex73_rep(pair(f1)?, pair(f2)?, pair(f3)?, pair(f4)?)?,
            };
            let e = ex73_invariants(&r)?;
            let ch = canonical_character(&r)?;
            let order: Vec<String> = ex73_weights().iter().map(|w| ch.value_at(w).to_string()).collect();
            let v = json!({
                "S": fmt_q(&e.s),
                "T": fmt_q(&e.t),
                "locus": e.locus,
                "coincidences": e.coincidences,
                "sym3_pairing": e.sym3_pairing.to_string(),
                "character": order,
            });
            let t = format!(
                "S = {}\nT = {}\nlocus: {}\ncoincidences: {}\nsubmodule generated at Sym^3 Q: pairing {}\n",
                fmt_q(&e.s),
                fmt_q(&e.t),
                e.locus,
                if e.coincidences.is_empty() { "none".to_string() } else { e.coincidences.join(", ") },
                e.sym3_pairing
            );
            Ok(render(j, v, t))
        }
    }
}

fn ext_text(x: &Ext2) -> String {
    let names = ["", "x", "y", "x∧y"];
    let terms: Vec<String> = x
        .0
        .iter()
        .zip(names)
        .filter(|(c, _)| !num_traits::Zero::is_zero(*c))
        .map(|(c, n)| if n.is_empty() { fmt_q(c) } else { format!("{}{n}", fmt_q(c)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn oracle(j: bool, oc: &OracleCommand) -> Result<String> {
    let mut o = PieriOracle::new();
    match oc {
        OracleCommand::Realize { partition: p, m } => {
            let a = partition(p)?;
            let r = o.realize(&a, *m)?;
            let mut mult: std::collections::BTreeMap<Vec<i64>, usize> = Default::default();
            for w in &r.weights {
                *mult.entry(w.clone()).or_default() += 1;
            }
            let v = json!({
                "dim": r.dim(),
                "weights": mult.iter().map(|(w, c)| json!({"weight": w, "multiplicity": c})).collect::<Vec<_>>(),
            });
            let mut t = format!("dim {}\n", r.dim());
            for (w, c) in mult.iter().rev() {
                t.push_str(&format!("  {w:?}: {c}\n"));
            }
            Ok(render(j, v, t))
        }
        OracleCommand::TwoStep { partition: p, rows, m } => {
            let a = partition(p)?;
            let rc = ints(rows, 2, "rows")?;
            let (i, jj) = (rc[0], rc[1]);
            let got = o.two_step_coefficients(&a, i, jj, *m)?;
            let mut pa = a.clone();
            pa.resize(*m, 0);
            let scaled = olver_scaled(&pa, i, jj, got.clone());
            let pred = predicted_two_step(&pa, i, jj);
            let v = json!({
                "normalized": [fmt_q(&got.0), fmt_q(&got.1)],
                "scaled": [fmt_q(&scaled.0), fmt_q(&scaled.1)],
                "predicted": [fmt_q(&pred.0), if i == jj { Value::Null } else { json!(fmt_q(&pred.1)) }],
            });
            let t = format!(
                "normalized: e{i}⊗e{jj} {}, e{jj}⊗e{i} {}\nscaled:     e{i}⊗e{jj} {}, e{jj}⊗e{i} {}\n",
                fmt_q(&got.0),
                fmt_q(&got.1),
                fmt_q(&scaled.0),
                fmt_q(&scaled.1)
            );
            Ok(render(j, v, t))
        }
        OracleCommand::Relations { weight, boxes } => {
            let (s, w) = resolve_weight(weight)?;
            let b = ints(boxes, 4, "boxes")?;
            let c = verify_relation_coefficients(&mut o, &s, &w, (b[0], b[1]), (b[2], b[3]))?;
            let v = json!({
                "case": c.case.to_string(),
                "paths": c.paths,
                "values": c.values.iter().map(|(wedge, vals)| json!({"wedge": [wedge.0, wedge.1], "values": vals.iter().map(fmt_q).collect::<Vec<_>>()})).collect::<Vec<_>>(),
                "constants_match": c.constants_match,
                "equations_match": c.equations_match,
            });
            let mut t = format!("case {}\n", c.case);
            for ((x, y), vals) in &c.values {
                t.push_str(&format!("  n{x:?} ∧ n{y:?}:"));
                for (p, val) in c.paths.iter().zip(vals) {
                    t.push_str(&format!(" first {p:?} -> {}", fmt_q(val)));
                }
                t.push('\n');
            }
            t.push_str(&format!("constants match: {}\nequations match: {}\n", c.constants_match, c.equations_match));
            Ok(render(j, v, t))
        }
        OracleCommand::P2 { k } => {
            let (c, b) = p2_matrices(*k)?;
            let ok = wedge_check(*k)?;
            let fmt = |m: &Vec<Vec<Ext2>>| m.iter().map(|r| r.iter().map(ext_text).collect::<Vec<_>>()).collect::<Vec<_>>();
            let v = json!({"C": fmt(&c), "B": fmt(&b), "identities": ok});
            let mut t = format!("C_{k}:\n");
            for r in fmt(&c) {
                t.push_str(&format!("  [{}]\n", r.join(", ")));
            }
            t.push_str(&format!("B_{k}:\n"));
            for r in fmt(&b) {
                t.push_str(&format!("  [{}]\n", r.join(", ")));
            }
            t.push_str(&format!("identities hold: {ok}\n"));
            Ok(render(j, v, t))
        }
    }
}

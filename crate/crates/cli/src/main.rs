//! `schubcalc`: batch command-line access to the schubcalc library.

mod output;

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schubcalc::complexes::{
    delta_w, slide_complex, ssyt_standardization_decomposition, subword_complex, tableau_complex,
    SimplicialComplex, TableauComplexSpec,
};
use schubcalc::perm::{demazure, lehmer, reduced_words};
use schubcalc::pipedreams::{
    all_pipe_dreams, minimal_ambient, qy_pipe_dream_for_word, reduced_pipe_dreams, render_ascii, render_svg,
    PipeDream,
};
use schubcalc::poly::{
    backstable_truncate, expand_grothendieck_into_glides, expand_schubert_into_slides, expand_schur_into_f,
    fundamental_quasisym, glide, grothendieck, schubert, schur, slide, Polynomial,
};
use schubcalc::shapes::{parse_parts, Family, Shape};
use schubcalc::shuffle::{
    monk_rhs, monk_shuffle_traced, monk_unshuffle, monk_unshuffle_traced, pieri_rhs, pieri_shuffle,
    pieri_shuffle_traced, pieri_unshuffle, pieri_unshuffle_traced, MarkedWord, Variant,
};
use schubcalc::{golden, Permutation, Word};

use output::{lines, CliError, Format, Output};

type CliResult = Result<Output, CliError>;

#[derive(Parser)]
#[command(name = "schubcalc", version, about = "Combinatorial Schubert calculus")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutations and words.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Polynomial families.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Expansions into slide, fundamental and glide polynomials.
    #[command(subcommand)]
    Expand(ExpandCmd),
    /// Pipe dreams.
    #[command(subcommand)]
    Pipedreams(PipeDreamCmd),
    /// Subword, slide and tableau complexes.
    #[command(subcommand)]
    Complex(ComplexCmd),
    /// Monk and Pieri shuffles on reduced words.
    #[command(subcommand)]
    Shuffle(ShuffleCmd),
    /// Run the built-in corpus of worked examples.
    Selftest,
}

#[derive(Subcommand)]
enum PermCmd {
    /// All reduced words, in lexicographic order.
    ReducedWords { perm: String },
    /// The Lehmer code.
    Lehmer { perm: String },
    /// The Demazure product of a word.
    Demazure {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Shift by conjugation with the translation `x -> x + 1`, applied `shift` times.
    Tau {
        perm: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        shift: i64,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    Schubert { perm: String },
    Grothendieck { perm: String },
    /// Schur polynomial of a partition in `n` variables.
    Schur {
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// Fundamental quasisymmetric polynomial of a composition in `n` variables.
    Fqs {
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// Slide polynomial of a weak composition.
    Slide { shape: String },
    /// Glide polynomial of a weak composition.
    Glide { shape: String },
    /// Back-stable Schubert series with `x_i = 0` for `i` below the bound.
    Backstable {
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        lower_bound: i64,
    },
}

#[derive(Subcommand)]
enum ExpandCmd {
    SchubertSlides { perm: String },
    SchurFqs {
        shape: String,
        #[arg(long)]
        n: usize,
    },
    GrothGlides { perm: String },
}

#[derive(Subcommand)]
enum PipeDreamCmd {
    /// Pipe dreams for a permutation in its smallest staircase.
    List {
        perm: String,
        /// Include non-reduced pipe dreams.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_excess: Option<usize>,
    },
    /// The quasi-Yamanouchi pipe dream with a given reading word.
    Qy {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Draw the pipe dream with the given reading word and rows.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        rows: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args)]
struct TableauArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    shape: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum ComplexCmd {
    /// The subword complex of `q` and a permutation.
    Subword {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        perm: String,
    },
    /// The slide complex of `q` and one reduced word.
    Slide {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// The complex whose facets are complements of embeddings of the given words.
    DeltaW {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, num_args = 1.., required = true)]
        words: Vec<String>,
    },
    /// The tableau complex of a family of tableaux.
    Tableau(TableauArgs),
    /// Classify a complex given as JSON `{"vertices": [..], "facets": [[..], ..]}`.
    Classify {
        #[arg(long)]
        complex: String,
    },
    /// Split the semistandard tableau complex by standardization.
    DecomposeSsyt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
    },
    /// Minimal non-faces of the subword complex.
    SrGenerators {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        perm: String,
    },
}

#[derive(Subcommand)]
enum ShuffleCmd {
    /// Insert `i` into a reduced word at position `pos` and rectify.
    Monk {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        pos: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Recover the word and position from a Monk shuffle of a word for `perm`.
    MonkInv {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Rectify a word with `∞↓` insertions, such as `3∞↓4∞↓5`.
    Pieri {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, default_value = "c")]
        variant: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Recover the marked word from a Pieri shuffle of a word for `perm`.
    PieriInv {
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, default_value = "c")]
        variant: String,
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        trace: bool,
    },
    /// Check a shuffle bijection exhaustively for one permutation.
    Verify {
        #[arg(long, value_parser = ["monk", "pieri-c", "pieri-r"])]
        rule: String,
        #[arg(long)]
        perm: String,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

fn perm(s: &str) -> Result<Permutation, CliError> {
    Ok(s.parse()?)
}

fn word(s: &str) -> Result<Word, CliError> {
    Ok(s.parse()?)
}

fn poly_output(p: Polynomial) -> Output {
    Output::new(format!("{p}\n"), json!(p))
}

fn run_perm(cmd: PermCmd) -> CliResult {
    match cmd {
        PermCmd::ReducedWords { perm: p } => {
            let ws = reduced_words(&perm(&p)?);
            Ok(Output::new(lines(&ws), json!(ws)))
        }
        PermCmd::Lehmer { perm: p } => {
            let code = lehmer(&perm(&p)?)?;
            let text: Vec<String> = code.iter().map(|c| c.to_string()).collect();
            Ok(Output::new(format!("({})\n", text.join(",")), json!(code)))
        }
        PermCmd::Demazure { word: w } => {
            let d = demazure(&word(&w)?);
            Ok(Output::new(format!("{d}\n"), json!(d)))
        }
        PermCmd::Tau { perm: p, shift } => {
            let t = perm(&p)?.tau_shift(shift);
            Ok(Output::new(format!("{t}\n"), json!(t)))
        }
    }
}

fn run_poly(cmd: PolyCmd) -> CliResult {
    let p = match cmd {
        PolyCmd::Schubert { perm: p } => schubert(&perm(&p)?)?,
        PolyCmd::Grothendieck { perm: p } => grothendieck(&perm(&p)?)?,
        PolyCmd::Schur { shape, n } => schur(&parse_parts(&shape)?, n)?,
        PolyCmd::Fqs { shape, n } => fundamental_quasisym(&parse_parts(&shape)?, n)?,
        PolyCmd::Slide { shape } => slide(&parse_parts(&shape)?),
        PolyCmd::Glide { shape } => glide(&parse_parts(&shape)?),
        PolyCmd::Backstable { perm: p, lower_bound } => backstable_truncate(&perm(&p)?, lower_bound),
    };
    Ok(poly_output(p))
}

fn run_expand(cmd: ExpandCmd) -> CliResult {
    match cmd {
        ExpandCmd::SchubertSlides { perm: p } => {
            let terms = expand_schubert_into_slides(&perm(&p)?)?;
            let text = lines(terms.iter().map(|(w, s)| format!("{w}: {s}")));
            let js: Vec<Value> = terms.iter().map(|(w, s)| json!({"word": w, "slide": s})).collect();
            Ok(Output::new(text, json!(js)))
        }
        ExpandCmd::SchurFqs { shape, n } => {
            let terms = expand_schur_into_f(&parse_parts(&shape)?, n)?;
            let text = lines(terms.iter().map(|(t, f)| format!("{t}: {f}")));
            let js: Vec<Value> = terms.iter().map(|(t, f)| json!({"tableau": t, "fqs": f})).collect();
            Ok(Output::new(text, json!(js)))
        }
        ExpandCmd::GrothGlides { perm: p } => {
            let terms = expand_grothendieck_into_glides(&perm(&p)?)?;
            let text = lines(terms.iter().map(|t| {
                let sign = if t.sign < 0 { '-' } else { '+' };
                format!("{sign} {:?}: {}", t.pipe_dream.weight(), t.glide)
            }));
            let js: Vec<Value> = terms
                .iter()
                .map(|t| json!({"pipe_dream": t.pipe_dream, "sign": t.sign, "glide": t.glide}))
                .collect();
            Ok(Output::new(text, json!(js)))
        }
    }
}

fn pipe_dream_text(p: &PipeDream) -> String {
    format!("word {} rows {:?} weight {:?}\n{}", p.reading_word(), p.rows(), p.weight(), render_ascii(p))
}

fn run_pipedreams(cmd: PipeDreamCmd) -> CliResult {
    match cmd {
        PipeDreamCmd::List { perm: p, all, max_excess } => {
            let pi = perm(&p)?;
            let n = minimal_ambient(&pi)?;
            let pds = if all || max_excess.is_some() {
                all_pipe_dreams(&pi, n, max_excess)?
            } else {
                reduced_pipe_dreams(&pi, n)?
            };
            let text = pds.iter().map(pipe_dream_text).collect::<Vec<_>>().join("\n");
            Ok(Output::new(text, json!(pds)))
        }
        PipeDreamCmd::Qy { word: w } => {
            let w = word(&w)?;
            let pd = qy_pipe_dream_for_word(&w)
                .ok_or_else(|| CliError::Domain(format!("{w} has no quasi-Yamanouchi pipe dream")))?;
            let mut out = Output::new(pipe_dream_text(&pd), json!(pd));
            out.svg = Some(render_svg(&pd));
            Ok(out)
        }
        PipeDreamCmd::Render { word: w, rows, n } => {
            let rows: Vec<i64> = parse_parts(&rows)?.into_iter().map(|r| r as i64).collect();
            let pd = PipeDream::from_word_and_rows(&word(&w)?, &rows, n)?;
            let mut out = Output::new(pipe_dream_text(&pd), json!(pd));
            out.svg = Some(render_svg(&pd));
            Ok(out)
        }
    }
}

fn complex_output(d: &SimplicialComplex, label: &dyn Fn(usize) -> String) -> Output {
    let class = d.classify();
    let mut text = String::new();
    text.push_str(&format!("vertices: {:?}\n", d.vertices()));
    text.push_str(&format!("facets: {:?}\n", d.facets()));
    match d.dimension() {
        Some(dim) => text.push_str(&format!("dimension: {dim}\n")),
        None => text.push_str("dimension: void\n"),
    }
    text.push_str(&format!("reduced euler characteristic: {}\n", d.reduced_euler_characteristic()));
    text.push_str(&format!("vertex decomposable: {}\n", d.is_vertex_decomposable()));
    text.push_str(&format!("classification: {}\n", class.name()));
    let js = json!({
        "complex": d,
        "dimension": d.dimension(),
        "reduced_euler_characteristic": d.reduced_euler_characteristic(),
        "vertex_decomposable": d.is_vertex_decomposable(),
        "classification": class,
    });
    let mut out = Output::new(text, js);
    out.svg = Some(d.to_svg(label));
    out.dot = Some(d.to_dot(label));
    out
}

fn position_label(v: usize) -> String {
    v.to_string()
}

fn tableau_shape(family: Family, s: &str) -> Result<Shape, CliError> {
    let parts = parse_parts(s)?;
    Ok(match family {
        Family::Syt | Family::Ssyt => Shape::partition(&parts)?,
        Family::Ct => Shape::composition(&parts)?,
        Family::Wct => Shape::weak_composition(&parts),
    })
}

fn run_complex(cmd: ComplexCmd) -> CliResult {
    match cmd {
        ComplexCmd::Subword { q, perm: p } => Ok(complex_output(&subword_complex(&word(&q)?, &perm(&p)?)?, &position_label)),
        ComplexCmd::Slide { q, word: w } => Ok(complex_output(&slide_complex(&word(&q)?, &word(&w)?)?, &position_label)),
        ComplexCmd::DeltaW { q, words } => {
            let ws = words.iter().map(|w| word(w)).collect::<Result<Vec<_>, _>>()?;
            Ok(complex_output(&delta_w(&word(&q)?, &ws)?, &position_label))
        }
        ComplexCmd::Tableau(args) => {
            let family: Family = args.family.parse()?;
            let spec = TableauComplexSpec {
                family,
                shape: tableau_shape(family, &args.shape)?,
                n: args.n,
                ambient: None,
            };
            let tc = tableau_complex(&spec)?;
            let label = |v: usize| tc.label(v);
            let mut out = complex_output(&tc.complex, &label);
            out.text = format!("{}{}", lines((0..tc.entries.len()).map(|v| format!("vertex {v} = {}", tc.label(v)))), out.text);
            out.json["entries"] = json!(tc.entries);
            out.json["tableaux"] = json!(tc.tableaux);
            Ok(out)
        }
        ComplexCmd::Classify { complex } => {
            let d: SimplicialComplex = serde_json::from_str(&complex)?;
            let mut out = complex_output(&d, &position_label);
            out.json["decomposition"] = json!(d.vertex_decomposition());
            Ok(out)
        }
        ComplexCmd::DecomposeSsyt { shape, n } => {
            let (tc, classes) = ssyt_standardization_decomposition(&parse_parts(&shape)?, n)?;
            let mut text = String::new();
            let mut js = Vec::new();
            for class in &classes {
                let c = class.complex.classify();
                text.push_str(&format!(
                    "{}: {} tableaux, {}\n",
                    class.standard,
                    class.members.len(),
                    c.name()
                ));
                js.push(json!({
                    "standard": class.standard,
                    "members": class.members,
                    "complex": class.complex,
                    "classification": c,
                }));
            }
            Ok(Output::new(text, json!({"entries": tc.entries, "classes": js})))
        }
        ComplexCmd::SrGenerators { q, perm: p } => {
            let gens = subword_complex(&word(&q)?, &perm(&p)?)?.stanley_reisner_generators();
            let text = lines(gens.iter().map(|g| g.iter().map(|v| format!("z{v}")).collect::<Vec<_>>().join("*")));
            Ok(Output::new(text, json!(gens)))
        }
    }
}

fn with_trace(mut out: Output, trace: Option<Vec<String>>) -> Output {
    if let Some(t) = trace {
        out.text = format!("{}{}", lines(&t), out.text);
        out.json = json!({"result": out.json, "trace": t});
    }
    out
}

fn variant(s: &str) -> Result<Variant, CliError> {
    Ok(s.parse()?)
}

fn run_shuffle(cmd: ShuffleCmd) -> CliResult {
    match cmd {
        ShuffleCmd::Monk { i, word: w, pos, trace } => {
            let (out, t) = monk_shuffle_traced(i, &word(&w)?, pos)?;
            Ok(with_trace(Output::new(format!("{out}\n"), json!(out)), trace.then_some(t)))
        }
        ShuffleCmd::MonkInv { i, perm: p, word: w, trace } => {
            let (back, j, t) = monk_unshuffle_traced(i, &perm(&p)?, &word(&w)?)?;
            let out = Output::new(format!("{back} at {j}\n"), json!({"word": back, "pos": j}));
            Ok(with_trace(out, trace.then_some(t)))
        }
        ShuffleCmd::Pieri { i, variant: v, word: w, trace } => {
            let marked: MarkedWord = w.parse()?;
            let (out, t) = pieri_shuffle_traced(i, &marked, variant(&v)?)?;
            Ok(with_trace(Output::new(format!("{out}\n"), json!(out)), trace.then_some(t)))
        }
        ShuffleCmd::PieriInv { i, variant: v, perm: p, word: w, trace } => {
            let (back, t) = pieri_unshuffle_traced(i, &perm(&p)?, &word(&w)?, variant(&v)?)?;
            Ok(with_trace(Output::new(format!("{back}\n"), json!(back)), trace.then_some(t)))
        }
        ShuffleCmd::Verify { rule, perm: p, i, k } => verify(&rule, &perm(&p)?, i, k),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (1..=n).filter(|p| m & 1 << (p - 1) != 0).collect())
        .collect()
}

fn verify(rule: &str, pi: &Permutation, i: i64, k: usize) -> CliResult {
    let words = reduced_words(pi);
    let (targets, inputs): (BTreeSet<Permutation>, usize) = match rule {
        "monk" => (monk_rhs(pi, i).into_iter().collect(), words.len() * (pi.length() + 1)),
        _ => {
            let v = if rule == "pieri-c" { Variant::C } else { Variant::R };
            let count = words.len() * subsets(pi.length() + k, k).len();
            (pieri_rhs(pi, i, k, v), count)
        }
    };
    let mut images = BTreeSet::new();
    for w in &words {
        if rule == "monk" {
            for j in 1..=w.len() + 1 {
                let out = schubcalc::shuffle::monk_shuffle(i, w, j)?;
                if monk_unshuffle(i, pi, &out)? != (w.clone(), j) {
                    return Err(CliError::Domain(format!("unshuffle does not invert {w} at {j}")));
                }
                images.insert(out);
            }
        } else {
            let v = if rule == "pieri-c" { Variant::C } else { Variant::R };
            for pos in subsets(w.len() + k, k) {
                let marked = MarkedWord::with_insertions(w, &pos)?;
                let out = pieri_shuffle(i, &marked, v)?;
                if pieri_unshuffle(i, pi, &out, v)? != marked {
                    return Err(CliError::Domain(format!("unshuffle does not invert {marked}")));
                }
                images.insert(out);
            }
        }
    }
    let expected: BTreeSet<Word> = targets.iter().flat_map(reduced_words).collect();
    let ok = images.len() == inputs && images == expected;
    let text = format!(
        "{} inputs, {} targets with {} reduced words: {}\n",
        inputs,
        targets.len(),
        expected.len(),
        if ok { "bijection" } else { "NOT a bijection" }
    );
    let js = json!({"inputs": inputs, "targets": targets, "target_words": expected.len(), "bijection": ok});
    if ok {
        Ok(Output::new(text, js))
    } else {
        Err(CliError::Domain(text.trim_end().to_string()))
    }
}

fn selftest() -> CliResult {
    let results = golden::run_all();
    let mut text = String::new();
    let mut js = Vec::new();
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(()) => text.push_str(&format!("ok   {name}\n")),
            Err(e) => {
                failed += 1;
                text.push_str(&format!("FAIL {name}: {e}\n"));
            }
        }
        js.push(json!({"name": name, "ok": r.is_ok(), "error": r.as_ref().err()}));
    }
    text.push_str(&format!("{} passed, {failed} failed\n", results.len() - failed));
    if failed > 0 {
        eprint!("{text}");
        return Err(CliError::Domain(format!("{failed} golden cases failed")));
    }
    Ok(Output::new(text, json!(js)))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let out = match cli.command {
        Command::Perm(c) => run_perm(c),
        Command::Poly(c) => run_poly(c),
        Command::Expand(c) => run_expand(c),
        Command::Pipedreams(c) => run_pipedreams(c),
        Command::Complex(c) => run_complex(c),
        Command::Shuffle(c) => run_shuffle(c),
        Command::Selftest => selftest(),
    }?;
    out.render(cli.format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(s) => {
            print!("{s}");
            if !s.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use ihara_sectors::edge_space::OrientedEdgeSpace;
use ihara_sectors::linalg::FractionText;
use ihara_sectors::screen::{self, InputSource, ScreenConfig};
use ihara_sectors::shadows::{compare, fingerprint, shadow_set, Fingerprint, DEFAULT_KMAX};
use ihara_sectors::spectral::{check_bounds, DEFAULT_SLACK};
use ihara_sectors::verify::{verify_all, Outcome};
use ihara_sectors::zeta::{factorize, trivial_roots, DEFAULT_ORDER};
use ihara_sectors::{corpus, encode_graph6, lookup, parse_graph6, Error, Graph};

#[derive(Parser)]
#[command(name = "ihara", version, about = "Exact Hashimoto edge-space invariants of simple graphs")]
struct Cli {
    /// Series order for correction expansions
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Highest k in the M^T L^k M shadows
    #[arg(long, global = true, default_value_t = DEFAULT_KMAX)]
    kmax: usize,
    /// Machine-readable output (JSON / JSONL)
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for screening
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Slack for floating-point bound checks
    #[arg(long, global = true, default_value_t = DEFAULT_SLACK)]
    tol: f64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every identity check (whole corpus when no graph is given)
    Verify { graphs: Vec<String> },
    /// Ihara determinant, sector factorization and trivial roots; with two
    /// graphs, where their expansions first diverge
    Zeta { graph: String, other: Option<String> },
    /// Gauge-invariant shadow polynomials; with two graphs, a pair report
    Shadows {
        graph: String,
        other: Option<String>,
        /// Also dump L, S, M, M M^T, M^T M (lexicographic gauge)
        #[arg(long)]
        matrices: bool,
    },
    /// Numerical-range bounds on Spec(T)
    Bounds { graph: String },
    /// Fingerprint records, one JSON line each (`-` reads graph6 from stdin)
    Fingerprint {
        graphs: Vec<String>,
        /// Append records to this store
        #[arg(long)]
        store: Option<PathBuf>,
    },
    /// Group graphs into classes by an exact invariant key
    Screen(ScreenArgs),
    /// List the named corpus, or show one entry
    Examples { name: Option<String> },
}

#[derive(Args)]
struct ScreenArgs {
    /// graph6 file, `-` for stdin
    #[arg(long, conflicts_with_all = ["builtin", "from_store"])]
    input: Option<String>,
    /// All connected graphs on N <= 7 vertices
    #[arg(long, conflicts_with = "from_store")]
    builtin: Option<usize>,
    /// Regroup an existing fingerprint store instead of reading graphs
    #[arg(long)]
    from_store: Option<PathBuf>,
    /// Comma-separated subset of A,L,S,shadows,hashimoto
    #[arg(long, default_value = "A,L,S")]
    key: String,
    /// Keep only connected graphs
    #[arg(long)]
    connected: bool,
    /// Keep only irregular graphs
    #[arg(long)]
    irregular: bool,
    /// Every vertex degree at least this
    #[arg(long)]
    min_degree: Option<usize>,
    /// Every vertex degree at most this
    #[arg(long)]
    max_degree: Option<usize>,
    /// Append fingerprints to this store
    #[arg(long)]
    store: Option<PathBuf>,
    /// Report malformed input lines instead of failing
    #[arg(long)]
    skip_malformed: bool,
    /// Pair reports kept per class
    #[arg(long, default_value_t = screen::DEFAULT_PAIR_CAP)]
    pair_cap: usize,
}

enum Failure {
    Check,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn resolve(spec: &str) -> Result<Graph, Failure> {
    if let Some(e) = lookup(spec) {
        return Ok(e.graph);
    }
    parse_graph6(spec).map_err(|e| Failure::Input(format!("{spec:?} is neither a corpus name nor graph6: {e}")))
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.cmd {
        Cmd::Verify { graphs } => cmd_verify(cli, graphs),
        Cmd::Zeta { graph, other } => cmd_zeta(cli, graph, other.as_deref()),
        Cmd::Shadows { graph, other, matrices } => cmd_shadows(cli, graph, other.as_deref(), *matrices),
        Cmd::Bounds { graph } => cmd_bounds(cli, graph),
        Cmd::Fingerprint { graphs, store } => cmd_fingerprint(cli, graphs, store.as_ref()),
        Cmd::Screen(args) => cmd_screen(cli, args),
        Cmd::Examples { name } => cmd_examples(cli, name.as_deref()),
    }
}

fn cmd_verify(cli: &Cli, specs: &[String]) -> CmdResult {
    let targets: Vec<(String, Graph)> = if specs.is_empty() {
        corpus().into_iter().map(|e| (e.name.to_string(), e.graph)).collect()
    } else {
        specs.iter().map(|s| Ok((s.clone(), resolve(s)?))).collect::<Result<_, Failure>>()?
    };
    let mut ok = true;
    for (name, g) in targets {
        let list = verify_all(&g);
        ok &= list.passed();
        if cli.json {
            print_json(&json!({ "name": name, "passed": list.passed(), "checklist": list }));
            continue;
        }
        println!("{name} ({})", list.graph6);
        for c in &list.checks {
            let tag = match c.outcome {
                Outcome::Pass => "pass",
                Outcome::Fail => "FAIL",
                Outcome::Skip => "skip",
            };
            match &c.detail {
                Some(d) => println!("  {tag}  {}  [{d}]", c.name),
                None => println!("  {tag}  {}", c.name),
            }
        }
    }
    if ok { Ok(()) } else { Err(Failure::Check) }
}

fn cmd_zeta(cli: &Cli, spec: &str, other: Option<&str>) -> CmdResult {
    let g = resolve(spec)?;
    if let Some(o) = other {
        let h = resolve(o)?;
        let r = compare(&g, &h, cli.order, cli.kmax);
        if cli.json {
            print_json(&r.divergence);
        } else {
            let d = &r.divergence;
            let show = |k: Option<usize>| k.map_or("none".to_string(), |k| k.to_string());
            println!("line-cospectral             {}", d.line_cospectral);
            println!("det(I - wT) first differs   {}", show(d.det_first_diff_order));
            println!("correction first differs    {}", show(d.correction_first_diff_order));
            if let Some((a, b)) = &r.det_witness {
                println!("  det coefficients          {a} vs {b}");
            }
            if let Some((a, b)) = &r.correction_witness {
                println!("  correction coefficients   {a} vs {b}");
            }
            println!("consistent with resolution  {}", d.consistent);
        }
        return if r.divergence.consistent { Ok(()) } else { Err(Failure::Check) };
    }
    let f = factorize(&g, cli.order);
    let roots = if g.is_connected() { Some(trivial_roots(&g)?) } else { None };
    let ok = f.is_exact() && roots.as_ref().is_none_or(|r| r.violations().is_empty());
    if cli.json {
        print_json(&json!({
            "graph6": encode_graph6(&g),
            "factorization": f,
            "trivial_roots": roots,
        }));
    } else {
        println!("det(I - wT)          = {}", f.hashimoto_det.display_in("w"));
        println!("det(I - (w/2) L)     = {}", f.line_factor.display_in("w"));
        println!("C(w)                 = {}", f.correction);
        let cs: Vec<String> = f.correction_series.coeffs().iter().map(|c| c.to_fraction()).collect();
        println!("c_0..c_{:<2}          = {}", f.order(), cs.join(", "));
        println!("factorization exact  = {}", f.is_exact());
        if let Some(r) = &roots {
            println!("m - n = {}, bipartite = {}", r.m_minus_n, r.bipartite);
            println!("  dim ker D = {}, dim ker |D| = {}", r.ker_dim_d, r.ker_dim_abs_d);
            println!("  ord_(-1) line factor = {}", r.ord_line_at_minus1);
            println!(
                "  ord_(+1): det = {}, line factor = {}, C = {}",
                r.ord_det_at_plus1, r.ord_line_at_plus1, r.ord_correction_at_plus1
            );
            for v in r.literal_violations() {
                println!("  note: literal bound fails: {v}");
            }
            for v in r.violations() {
                println!("  VIOLATION: {v}");
            }
        }
    }
    if ok { Ok(()) } else { Err(Failure::Check) }
}

fn cmd_shadows(cli: &Cli, spec: &str, other: Option<&str>, matrices: bool) -> CmdResult {
    let g = resolve(spec)?;
    if let Some(o) = other {
        let h = resolve(o)?;
        let r = compare(&g, &h, cli.order, cli.kmax);
        if cli.json {
            print_json(&r);
        } else {
            let a = &r.agree;
            let yn = |b: bool| if b { "equal" } else { "differ" };
            println!("degrees        {}", yn(a.degrees));
            println!("chi(A)         {}", yn(a.a));
            println!("chi(L)         {}", yn(a.l));
            println!("chi(S)         {}", yn(a.s));
            println!("chi(M M^T)     {}", yn(a.mmt));
            println!("chi(M^T M)     {}", yn(a.mtm));
            for (k, x) in a.mtlkm.iter().enumerate() {
                println!("chi(M^T L^{} M) {}", k + 1, yn(*x));
            }
            println!("det(I - wT)    {}", yn(a.hashimoto_det));
            println!("correction     {} through order {}", yn(a.correction_series), cli.order);
        }
        return Ok(());
    }
    let es = OrientedEdgeSpace::new(&g);
    let s = shadow_set(&es, cli.kmax);
    if cli.json {
        let mut out = json!({ "graph6": encode_graph6(&g), "shadows": s });
        if matrices {
            let b = es.sector_blocks();
            out["matrices"] = json!({
                "gauge": "lexicographic (gauge-dependent: M changes to M Sigma under edge flips)",
                "L": b.l.to_json(),
                "S": b.s.to_json(),
                "M": b.m.to_json(),
                "MMt": (&b.m * &b.m.transpose()).to_json(),
                "MtM": (&b.m.transpose() * &b.m).to_json(),
            });
        }
        print_json(&out);
    } else {
        println!("chi(M M^T)     = {}", s.mmt.display_in("x"));
        println!("chi(M^T M)     = {}", s.mtm.display_in("x"));
        for (k, p) in s.mtlkm.iter().enumerate() {
            println!("chi(M^T L^{} M) = {}", k + 1, p.display_in("x"));
        }
        if matrices {
            let b = es.sector_blocks();
            println!("matrices in the lexicographic gauge (gauge-dependent):");
            println!("M = {}", serde_json::to_string(&b.m.to_json()).expect("json"));
            println!("L = {}", serde_json::to_string(&b.l.to_json()).expect("json"));
            println!("S = {}", serde_json::to_string(&b.s.to_json()).expect("json"));
        }
    }
    Ok(())
}

fn cmd_bounds(cli: &Cli, spec: &str) -> CmdResult {
    let g = resolve(spec)?;
    let r = check_bounds(&g, cli.tol)?;
    if cli.json {
        print_json(&r);
    } else {
        println!("{:<44} {:>14} {:>14}", "bound", "value", "margin");
        let row = |name: &str, v: f64, m: f64| println!("{name:<44} {v:>14.9} {m:>14.3e}");
        row("max Re(lambda) <= rho(L)/2", r.rho_l / 2.0, r.re_upper_margin);
        row("min Re(lambda) >= -rho(S)/2", -r.rho_s / 2.0, r.re_lower_margin);
        row("max |Im(lambda)| <= sigma_max(M)/2", r.sigma_max_m / 2.0, r.im_margin);
        row(
            "sigma_max(M) <= sqrt(rho(Lap) rho(Q))",
            (r.rho_laplacian * r.rho_signless).sqrt(),
            r.sigma_margin,
        );
        row("rho(T) <= d_max - 1", r.d_max as f64 - 1.0, r.perron_margin);
        println!("Spec(T): Re in [{:.9}, {:.9}], max |Im| {:.9}, rho(T) {:.9}", r.re_min, r.re_max, r.im_max, r.rho_t);
        println!("H-spectrum deviation {:.3e}, max root residual {:.3e}", r.h_spectrum_deviation, r.max_root_residual);
        for v in &r.violations {
            println!("VIOLATION: {v}");
        }
    }
    if r.ok() { Ok(()) } else { Err(Failure::Check) }
}

fn cmd_fingerprint(cli: &Cli, specs: &[String], store: Option<&PathBuf>) -> CmdResult {
    let mut graphs = Vec::new();
    for s in specs {
        if s == "-" {
            graphs.extend(screen::read_input(&InputSource::Stdin, false)?.0);
        } else {
            graphs.push(resolve(s)?);
        }
    }
    if graphs.is_empty() {
        return Err(Failure::Input("no graphs given".into()));
    }
    let fps: Vec<Fingerprint> = graphs.iter().map(|g| fingerprint(g, cli.order, cli.kmax)).collect();
    if let Some(p) = store {
        screen::append_store(p, &fps)?;
    }
    for fp in &fps {
        if cli.json {
            println!("{}", fp.to_json_line());
        } else {
            println!("{}  n={} m={}  degrees {:?}", fp.graph6, fp.n, fp.m, fp.degrees);
            println!("  chi(A) = {}", fp.charpoly_a.display_in("x"));
            println!("  chi(L) = {}", fp.charpoly_l.display_in("x"));
            println!("  chi(S) = {}", fp.charpoly_s.display_in("x"));
            println!("  det(I - wT) = {}", fp.hashimoto_det.display_in("w"));
        }
    }
    Ok(())
}

fn cmd_screen(cli: &Cli, a: &ScreenArgs) -> CmdResult {
    let key: BTreeSet<_> = screen::parse_key(&a.key)?;
    if let Some(path) = &a.from_store {
        let fps = screen::load_store(path)?;
        let (classes, counts, pairs) = screen::group_fingerprints(&fps, &key, a.pair_cap);
        for c in &classes {
            emit_class(cli, c);
        }
        let summary = json!({ "fingerprinted": fps.len(), "classes": classes.len(), "pairs_examined": pairs, "separated_by": counts });
        if cli.json {
            print_json(&json!({ "summary": summary }));
        } else {
            println!("summary: {summary}");
        }
        return Ok(());
    }
    let input = match (&a.input, a.builtin) {
        (Some(p), _) if p == "-" => InputSource::Stdin,
        (Some(p), _) => InputSource::File(PathBuf::from(p)),
        (None, Some(n)) => InputSource::Builtin(n),
        (None, None) => InputSource::Stdin,
    };
    let mut cfg = ScreenConfig::new(input);
    cfg.key = key;
    cfg.filters.connected_only = a.connected;
    cfg.filters.irregular_only = a.irregular;
    cfg.filters.min_degree = a.min_degree;
    cfg.filters.max_degree = a.max_degree;
    cfg.order = cli.order;
    cfg.kmax = cli.kmax;
    cfg.jobs = cli.jobs;
    cfg.store = a.store.clone();
    cfg.skip_malformed = a.skip_malformed;
    cfg.pair_cap = a.pair_cap;
    let out = screen::run_screen(&cfg)?;
    for m in &out.malformed {
        eprintln!("skipped line {}: {}", m.line, m.message);
    }
    for c in &out.classes {
        emit_class(cli, c);
    }
    if cli.json {
        print_json(&json!({ "summary": out.summary }));
    } else {
        let s = &out.summary;
        println!(
            "read {}  malformed {}  filtered {}  fingerprinted {}  classes {} (largest {})  pairs {}",
            s.graphs_read, s.malformed, s.filtered_out, s.fingerprinted, s.classes, s.largest_class, s.pairs_examined
        );
        let c = &s.separated_by;
        println!(
            "separated by: S {}  shadows {}  det(I - wT) {}  correction {}  none {}",
            c.s, c.shadows, c.hashimoto_det, c.correction_series, c.unseparated
        );
    }
    Ok(())
}

fn emit_class(cli: &Cli, c: &screen::ClassRecord) {
    if cli.json {
        print_json(c);
        return;
    }
    println!("class {} ({} members): {}", &c.key_digest[..12], c.members.len(), c.members.join(" "));
    for p in &c.pairs {
        let a = &p.agree;
        let mut diff = Vec::new();
        for (name, same) in [("A", a.a), ("L", a.l), ("S", a.s), ("shadows", a.all_shadows_agree())] {
            if !same {
                diff.push(name.to_string());
            }
        }
        if let (Some(k), Some((x, y))) = (p.divergence.det_first_diff_order, &p.det_witness) {
            diff.push(format!("det@w^{k} ({x} vs {y})"));
        }
        let diff = if diff.is_empty() { "nothing".to_string() } else { diff.join(", ") };
        println!("  {} / {}: differ in {}", p.left, p.right, diff);
    }
    if c.pairs_truncated {
        println!("  (pair list truncated)");
    }
}

fn cmd_examples(cli: &Cli, name: Option<&str>) -> CmdResult {
    match name {
        None => {
            for e in corpus() {
                if cli.json {
                    print_json(&json!({ "name": e.name, "graph6": encode_graph6(&e.graph), "n": e.graph.n(), "m": e.graph.m() }));
                } else {
                    println!("{:<10} {:<14} n={:<3} m={}", e.name, encode_graph6(&e.graph), e.graph.n(), e.graph.m());
                }
            }
        }
        Some(n) => {
            let e = lookup(n).ok_or_else(|| Failure::Input(format!("no corpus entry named {n:?}")))?;
            if cli.json {
                print_json(&json!({ "name": e.name, "graph6": encode_graph6(&e.graph), "edges": e.graph.edges() }));
            } else {
                println!("{} = {}", e.name, encode_graph6(&e.graph));
                println!("edges: {:?}", e.graph.edges());
                println!("degrees: {:?}", e.graph.degree_data().multiset);
            }
        }
    }
    Ok(())
}

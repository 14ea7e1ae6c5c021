use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use shiftbound::experiments::{comparison_csv, compare_experiment, scatter_csv, sorted_by_brauer};
use shiftbound::graph::{er_csv, er_summary};
use shiftbound::shifted::{raster_csv, shifted_gershgorin_report};
use shiftbound::{
    adjacency, brauer_bounds, brauer_graph_lower, ckv_bounds_best_singleton, er_experiment,
    f_pair, format_number, gersh_graph_lower, gershgorin_bounds, melman_bounds,
    pair_gersh_graph_lower, pair_min, parse_graph, parse_matrix, profile_lower,
    region_halfplanes_3x3, region_raster, shifted_brauer_lower, shifted_brauer_upper,
    spread_extremes, spread_sup, tilde_lines, tilde_shifted_lower, BoundReport, Method,
    SymmetricMatrix, UndirectedGraph, Witness,
};

use crate::args::{
    BenchArgs, BoundsArgs, ErArgs, GraphArgs, MethodArg, ProfileArgs, RegionArgs, SpreadArgs,
};
use crate::error::{CliError, Result};

pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|source| CliError::Read {
                path: "<stdin>".into(),
                source,
            })?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Read {
                path: path.into(),
                source,
            })
        }
    }

    // A closed pipe (`| head`) is not a failure.
    fn print(&mut self, text: &str) -> Result<()> {
        match self.out.write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Write {
                path: "<stdout>".into(),
                source: e,
            }),
            _ => Ok(()),
        }
    }

    // The file when given, stdout otherwise.
    fn emit(&mut self, path: Option<&Path>, text: &str) -> Result<()> {
        match path {
            Some(p) => fs::write(p, text).map_err(|source| CliError::Write {
                path: p.display().to_string(),
                source,
            }),
            None => self.print(text),
        }
    }

    fn matrix(&mut self, path: &str) -> Result<SymmetricMatrix> {
        let text = self.read(path)?;
        parse_matrix(&text).map_err(|source| input_error(path, source))
    }

    fn graph(&mut self, path: &str) -> Result<UndirectedGraph> {
        let text = self.read(path)?;
        parse_graph(&text).map_err(|source| input_error(path, source))
    }
}

fn input_error(path: &str, source: shiftbound::Error) -> CliError {
    let path = if path == "-" { "<stdin>".into() } else { path.into() };
    CliError::Input { path, source }
}

fn num(v: f64) -> String {
    format_number(v)
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<w$}", w = widths[c]))
            .collect();
        s.push_str(line.join("  ").trim_end());
        s.push('\n');
    }
    s
}

fn method_of(m: MethodArg) -> Option<Method> {
    Some(match m {
        MethodArg::Gershgorin => Method::Gershgorin,
        MethodArg::Brauer => Method::Brauer,
        MethodArg::Melman => Method::Melman,
        MethodArg::Ckv => Method::Ckv,
        MethodArg::ShiftedGershgorin => Method::ShiftedGershgorin,
        MethodArg::ShiftedBrauer => Method::ShiftedBrauer,
        MethodArg::Tilde => Method::Tilde,
        MethodArg::All => return None,
    })
}

fn report_row(r: &BoundReport) -> Vec<String> {
    vec![
        r.method.to_string(),
        num(r.lower),
        num(r.shift_lower),
        num(r.upper),
        num(r.shift_upper),
        format!("{} / {}", r.witness_lower, r.witness_upper),
    ]
}

fn bound_row(a: &SymmetricMatrix, method: Method, listing_all: bool) -> Result<Vec<String>> {
    Ok(match method {
        Method::Gershgorin => report_row(&gershgorin_bounds(a)),
        Method::Brauer => report_row(&brauer_bounds(a)),
        Method::Melman => report_row(&melman_bounds(a)?),
        Method::Ckv => report_row(&ckv_bounds_best_singleton(a)?),
        Method::ShiftedGershgorin => report_row(&shifted_gershgorin_report(a)),
        Method::ShiftedBrauer => {
            let lo = shifted_brauer_lower(a);
            let hi = shifted_brauer_upper(a);
            let (li, lj) = lo.pair;
            let (ui, uj) = hi.pair;
            vec![
                method.to_string(),
                num(lo.value),
                num(lo.x_star),
                num(hi.value),
                num(hi.x_star),
                format!("{} / {}", Witness::Pair(li, lj), Witness::Pair(ui, uj)),
            ]
        }
        Method::Tilde => match tilde_shifted_lower(a) {
            Ok(t) => {
                let (i, j) = t.pair;
                let dash = "-".to_string();
                vec![method.to_string(), num(t.value), num(t.x_star), dash.clone(), dash, Witness::Pair(i, j).to_string()]
            }
            Err(e) if listing_all => {
                let dash = "-".to_string();
                vec![method.to_string(), dash.clone(), dash.clone(), dash.clone(), dash, format!("n/a: {e}")]
            }
            Err(e) => return Err(CliError::bad_flag("--method", format!("tilde: {e}"))),
        },
    })
}

pub fn bounds(args: BoundsArgs, io: &mut Io) -> Result<()> {
    let a = io.matrix(&args.input.file)?;
    let methods = match method_of(args.method) {
        Some(m) => vec![m],
        None => Method::ALL.to_vec(),
    };
    let mut rows = vec![["method", "lower", "x_lower", "upper", "x_upper", "witness"].map(String::from).to_vec()];
    for m in methods {
        rows.push(bound_row(&a, m, args.method == MethodArg::All)?);
    }
    io.print(&table(&rows))
}

fn sample_points(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if !lo.is_finite() {
        return Err(CliError::bad_flag("--x-min", "must be finite"));
    }
    if !hi.is_finite() || hi < lo {
        return Err(CliError::bad_flag("--x-max", "must be finite and at least --x-min"));
    }
    match steps {
        0 => Err(CliError::bad_flag("--steps", "must be at least 1")),
        1 => Ok(vec![lo]),
        _ => Ok((0..steps).map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64).collect()),
    }
}

pub fn profile(args: ProfileArgs, io: &mut Io) -> Result<()> {
    let a = io.matrix(&args.input.file)?;
    let xs = sample_points(args.x_min, args.x_max, args.steps)?;
    let values: Vec<f64> = if let Some(p) = &args.pair {
        xs.iter()
            .map(|&x| f_pair(&a, p[0], p[1], x))
            .collect::<shiftbound::Result<_>>()
            .map_err(|e| CliError::bad_flag("--pair", e.to_string()))?
    } else {
        match args.method {
            MethodArg::ShiftedGershgorin => profile_lower(&a, &xs).into_iter().map(|(_, v)| v).collect(),
            MethodArg::ShiftedBrauer if a.dim() >= 2 => xs.iter().map(|&x| pair_min(&a, x).0).collect(),
            MethodArg::ShiftedBrauer => {
                return Err(CliError::bad_flag("--method", "shifted-brauer needs at least two rows"))
            }
            MethodArg::Tilde => {
                let env = tilde_lines(&a).map_err(|e| CliError::bad_flag("--method", format!("tilde: {e}")))?;
                xs.iter().map(|&x| env.eval(x)).collect()
            }
            other => {
                return Err(CliError::bad_flag(
                    "--method",
                    format!(
                        "{} has no shift profile; use shifted-gershgorin, shifted-brauer or tilde",
                        other.name()
                    ),
                ))
            }
        }
    };
    let mut s = String::from("x,value\n");
    for (x, v) in xs.iter().zip(values) {
        s.push_str(&format!("{},{}\n", num(*x), num(v)));
    }
    io.print(&s)
}

pub fn graph(args: GraphArgs, io: &mut Io) -> Result<()> {
    let g = io.graph(&args.input.file)?;
    let offset = if args.unit_diagonal { 1.0 } else { 0.0 };
    let graph_methods = [MethodArg::Gershgorin, MethodArg::Tilde, MethodArg::Brauer, MethodArg::ShiftedBrauer];
    let methods = match args.method {
        MethodArg::All => graph_methods.to_vec(),
        m if graph_methods.contains(&m) => vec![m],
        m => {
            return Err(CliError::bad_flag(
                "--method",
                format!(
                    "{} is not a graph method; use gershgorin, tilde, brauer or shifted-brauer",
                    m.name()
                ),
            ))
        }
    };
    let mut rows = vec![["method", "bound", "x", "case"].map(String::from).to_vec()];
    for m in methods {
        let name = m.name().to_string();
        let (value, x, case) = match m {
            MethodArg::Gershgorin => {
                let b = gersh_graph_lower(&g)?;
                (b.value, b.shift(), b.case.to_string())
            }
            MethodArg::Tilde => {
                let b = pair_gersh_graph_lower(&g)?;
                (b.value, b.shift(), b.case.to_string())
            }
            MethodArg::Brauer => {
                let b = brauer_graph_lower(&g)?;
                (b.value, b.shift(), b.case.to_string())
            }
            _ => {
                let b = shifted_brauer_lower(&adjacency(&g)?);
                (b.value, b.x_star, "optimized".to_string())
            }
        };
        rows.push(vec![name, num(value + offset), num(x), case]);
    }
    io.print(&table(&rows))
}

pub fn region(args: RegionArgs, io: &mut Io) -> Result<()> {
    let a = io.matrix(&args.input.file)?;
    let n = a.dim();
    let (i, j) = (args.free[0], args.free[1]);
    if i >= n || j >= n || i == j {
        return Err(CliError::bad_flag("--free", format!("need two distinct indices below {n}, got {i} {j}")));
    }
    if let Some(spec) = args.grid {
        let offdiag: Vec<f64> = (0..n).flat_map(|r| ((r + 1)..n).map(move |c| (r, c))).map(|(r, c)| a.get(r, c)).collect();
        let fixed: Vec<f64> = (0..n).filter(|&k| k != i && k != j).map(|k| a.get(k, k)).collect();
        let pts = region_raster(&offdiag, (i, j), &fixed, spec.0)?;
        return io.emit(args.out.as_deref(), &raster_csv(&pts));
    }
    if n != 3 {
        return Err(CliError::bad_flag("--grid", format!("half-planes need a 3x3 matrix (got {n}x{n}); pass --grid to rasterize")));
    }
    let k = 3 - i - j;
    let b = a.permute(&[i, j, k])?;
    let region = region_halfplanes_3x3((b.get(0, 1), b.get(0, 2), b.get(1, 2)), b.get(2, 2));
    let mut s = format!("# y = a[{i}][{i}], z = a[{j}][{j}]\n");
    if region.is_empty_set() {
        s.push_str("# empty\n");
    }
    for h in &region.inequalities {
        s.push_str(&format!("{h}\n"));
    }
    io.emit(args.out.as_deref(), &s)
}

fn parse_values(text: &str) -> shiftbound::Result<Vec<f64>> {
    let mut v = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        for tok in line.split_whitespace() {
            v.push(tok.parse().map_err(|_| shiftbound::Error::Parse {
                line: k + 1,
                message: format!("malformed number '{tok}'"),
            })?);
        }
    }
    if v.is_empty() {
        return Err(shiftbound::Error::Parse {
            line: 1,
            message: "no values".into(),
        });
    }
    Ok(v)
}

pub fn spread(args: SpreadArgs, io: &mut Io) -> Result<()> {
    let text = io.read(&args.file)?;
    let y = parse_values(&text).map_err(|e| input_error(&args.file, e))?;
    let sup = spread_sup(&y).map_err(|e| input_error(&args.file, e))?;
    let rho: f64 = y.iter().sum();
    let (worst, best) = spread_extremes(y.len() + 1, rho)?;
    let rows = vec![
        vec!["sup".to_string(), num(sup)],
        vec!["rho".to_string(), num(rho)],
        vec!["even".to_string(), num(best)],
        vec!["concentrated".to_string(), num(worst)],
    ];
    io.print(&table(&rows))
}

pub fn bench(args: BenchArgs, io: &mut Io) -> Result<()> {
    if args.n == 0 {
        return Err(CliError::bad_flag("--n", "must be at least 1"));
    }
    if args.samples == 0 {
        return Err(CliError::bad_flag("--samples", "must be at least 1"));
    }
    let (records, summary) = compare_experiment(args.n, args.samples, args.seed)?;
    let records = if args.sorted { sorted_by_brauer(&records) } else { records };
    io.emit(args.out.as_deref(), &comparison_csv(&records))?;
    if let Some(p) = &args.scatter {
        io.emit(Some(p), &scatter_csv(&records))?;
    }
    io.print(&format!("wins,ties,losses,win_rate\n{}\n", summary.csv_line()))
}

pub fn er(args: ErArgs, io: &mut Io) -> Result<()> {
    if args.n < 2 {
        return Err(CliError::bad_flag("--n", "must be at least 2"));
    }
    if !(0.0..=1.0).contains(&args.p) {
        return Err(CliError::bad_flag("--p", "must lie in [0, 1]"));
    }
    if args.samples == 0 {
        return Err(CliError::bad_flag("--samples", "must be at least 1"));
    }
    let records = er_experiment(args.n, args.p, args.samples, args.seed)?;
    let offset = if args.unit_diagonal { 1.0 } else { 0.0 };
    io.emit(args.out.as_deref(), &er_csv(&records, offset))?;
    let s = er_summary(&records);
    io.print(&format!(
        "samples,violations,min_gap,mean_gap,max_gap\n{},{},{},{},{}\n",
        s.samples,
        s.violations,
        num(s.min_gap),
        num(s.mean_gap),
        num(s.max_gap)
    ))
}

//! `ellblock`: character tables, generalized blocks and isometry checks.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on a usage
//! error (bad flags, out-of-range parameters, exceeded bounds).

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ellblock_core::blocks::block_partition;
use ellblock_core::group_spec::{BaseSpec, GroupSpec};
use ellblock_core::isometry::{verify_kor_isometry_with, verify_main_isometry_with, Bounds};
use ellblock_core::normalizer::{
    build_normalizer_bounded, cyclic_group_data, DEFAULT_MAX_NORMALIZER_ELL,
};
use ellblock_core::numtheory::mobius;
use ellblock_core::partition::enumerate_multipartitions;
use ellblock_core::symmetric::{ell_singular_classes, sn_character_table_bounded, DEFAULT_MAX_SYM_N};
use ellblock_core::table::GroupData;
use ellblock_core::wreath::{wreath_classes, wreath_table};
use ellblock_core::Error;
use serde::Serialize;

/// Largest `w` accepted by `wreath` and `blocks --group wreath:…`.
const MAX_WREATH_W: usize = 10;
/// Largest number of classes of a wreath product we tabulate.
const MAX_WREATH_CLASSES: usize = 2000;

#[derive(Parser)]
#[command(name = "ellblock", version, about = "Generalized l-blocks of symmetric groups and their local subgroups")]
struct Cli {
    /// Write the output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Largest n for which a character table of S_n is built.
    #[arg(long, global = true, env = "ELLBLOCK_MAX_SYM_N", default_value_t = DEFAULT_MAX_SYM_N)]
    max_n: usize,

    /// Largest l for which N_{S_l}(Z_l) or Z_l is built.
    #[arg(long, global = true, env = "ELLBLOCK_MAX_NORMALIZER_ELL", default_value_t = DEFAULT_MAX_NORMALIZER_ELL)]
    max_ell: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Character table of S_n.
    SymTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Blocks obtained by linking across the l-singular classes.
    Blocks {
        /// sym:N, normalizer:L or wreath:{cyclic|normalizer}:L:W
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        json: bool,
    },
    /// The normalizer N_{S_l}(Z_l): characters, values at the l-cycle, blocks.
    Normalizer {
        #[arg(long)]
        ell: u64,
        /// Also print the full character table.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classes, table or blocks of H wr S_w.
    Wreath {
        /// cyclic:L or normalizer:L
        #[arg(long)]
        base: BaseSpec,
        #[arg(long)]
        w: usize,
        #[command(flatten)]
        view: WreathView,
        #[arg(long)]
        json: bool,
    },
    /// Check the isometry between the principal blocks of S_{lw+r} and N_G(L).
    Isometry {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        r: usize,
        /// Only compare B0 with Irr(L wr S_w).
        #[arg(long)]
        kor_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Shape of the l-analogue of a Sylow subgroup of S_n.
    Sylow {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WreathView {
    #[arg(long)]
    classes: bool,
    #[arg(long)]
    table: bool,
    #[arg(long)]
    blocks: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::Calibration(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Output {
    text: String,
    pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn check_ell(ell: u64, bounds: &Bounds) -> Result<(), Failure> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell).into());
    }
    if ell > bounds.max_normalizer_ell {
        return Err(usage(format!(
            "ell = {ell} exceeds the configured bound {}; raise ELLBLOCK_MAX_NORMALIZER_ELL or --max-ell",
            bounds.max_normalizer_ell
        )));
    }
    Ok(())
}

fn base_data(base: BaseSpec, bounds: &Bounds) -> Result<GroupData, Failure> {
    check_ell(base.ell(), bounds)?;
    Ok(match base {
        BaseSpec::Cyclic(l) => cyclic_group_data(l)?,
        BaseSpec::Normalizer(l) => build_normalizer_bounded(l, bounds.max_normalizer_ell)?.group_data(),
    })
}

fn check_wreath_size(h: &GroupData, w: usize) -> Result<(), Failure> {
    if w > MAX_WREATH_W {
        return Err(usage(format!("w = {w} exceeds {MAX_WREATH_W}")));
    }
    let k = enumerate_multipartitions(w, h.table.num_classes()).len();
    if k > MAX_WREATH_CLASSES {
        return Err(usage(format!(
            "the wreath product has {k} classes, more than {MAX_WREATH_CLASSES}"
        )));
    }
    Ok(())
}

fn sym_table(n: usize, as_json: bool, bounds: &Bounds) -> Result<Output, Failure> {
    let t = sn_character_table_bounded(n, bounds.max_sym_n)?;
    Ok(Output::ok(if as_json {
        json(&render::table_json(format!("sym:{n}"), &t))
    } else {
        format!("S_{n}, order {}\n{}", t.order(), render::table_text(&t))
    }))
}

fn blocks(group: GroupSpec, ell: u64, as_json: bool, bounds: &Bounds) -> Result<Output, Failure> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell).into());
    }
    if let Some(own) = group.ell() {
        if own != ell {
            return Err(usage(format!("--ell {ell} does not match the group {group}")));
        }
    }
    let (t, singular) = match group {
        GroupSpec::Sym(n) => {
            let n = n as usize;
            let t = sn_character_table_bounded(n, bounds.max_sym_n)?;
            (t, ell_singular_classes(n, ell as usize))
        }
        GroupSpec::Normalizer(l) => {
            check_ell(l, bounds)?;
            let gd = build_normalizer_bounded(l, bounds.max_normalizer_ell)?.group_data();
            let s = gd.table.singular().to_vec();
            (gd.table, s)
        }
        GroupSpec::Wreath { base, w } => {
            let h = base_data(base, bounds)?;
            check_wreath_size(&h, w as usize)?;
            let t = wreath_table(&h, w as usize)?;
            let s = t.singular().to_vec();
            (t, s)
        }
    };
    let b = block_partition(&t, &singular);
    let j = render::blocks_json(group.to_string(), ell, &t, &singular, &b);
    Ok(Output::ok(if as_json { json(&j) } else { render::blocks_text(&j) }))
}

#[derive(Serialize)]
struct NormalizerCharacter {
    label: String,
    d: u64,
    mu: i64,
    at_omega: String,
}

#[derive(Serialize)]
struct NormalizerJson {
    ell: u64,
    order: u64,
    classes: usize,
    m: usize,
    characters: Vec<NormalizerCharacter>,
    blocks: Vec<Vec<String>>,
    principal: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<render::TableJson>,
}

fn normalizer(ell: u64, with_table: bool, as_json: bool, bounds: &Bounds) -> Result<Output, Failure> {
    check_ell(ell, bounds)?;
    let n = build_normalizer_bounded(ell, bounds.max_normalizer_ell)?;
    let (order, m) = n.irr_ordering();
    let gd = n.group_data();
    let t = &gd.table;
    let characters: Vec<NormalizerCharacter> = order
        .iter()
        .enumerate()
        .map(|(row, &i)| {
            let d = n.labels()[i].d;
            NormalizerCharacter {
                label: t.char_labels()[row].to_string(),
                d,
                mu: mobius(ell / d),
                at_omega: t.value(row, gd.marked_class).to_string(),
            }
        })
        .collect();
    let b = block_partition(t, t.singular());
    let j = NormalizerJson {
        ell,
        order: n.order(),
        classes: t.num_classes(),
        m,
        characters,
        blocks: b
            .blocks
            .iter()
            .map(|blk| blk.iter().map(|&i| t.char_labels()[i].to_string()).collect())
            .collect(),
        principal: b.principal,
        table: with_table.then(|| render::table_json(format!("normalizer:{ell}"), t)),
    };
    if as_json {
        return Ok(Output::ok(json(&j)));
    }
    let mut text = format!(
        "N_(S_{ell})(Z_{ell}), order {}, {} classes, m = {m}\n",
        j.order, j.classes
    );
    let mut rows = vec![vec!["psi".into(), "d".into(), "mu(l/d)".into(), "psi(w)".into()]];
    for c in &j.characters {
        rows.push(vec![c.label.clone(), c.d.to_string(), c.mu.to_string(), c.at_omega.clone()]);
    }
    text.push_str(&render::grid(&rows));
    for (k, blk) in j.blocks.iter().enumerate() {
        let tag = if k == j.principal { " (principal)" } else { "" };
        text.push_str(&format!("block {}{tag}: {}\n", k + 1, blk.join(" ")));
    }
    if with_table {
        text.push_str(&render::table_text(t));
    }
    Ok(Output::ok(text))
}

#[derive(Serialize)]
struct WreathClassJson {
    label: String,
    size: String,
    centralizer: String,
    singular: bool,
}

fn wreath(base: BaseSpec, w: usize, view: &WreathView, as_json: bool, bounds: &Bounds) -> Result<Output, Failure> {
    let h = base_data(base, bounds)?;
    check_wreath_size(&h, w)?;
    let name = format!("wreath:{base}:{w}");
    if view.classes {
        let classes: Vec<WreathClassJson> = wreath_classes(&h, w)
            .into_iter()
            .map(|c| WreathClassJson {
                singular: !c.label.component(h.marked_class).is_empty(),
                label: c.label.to_string(),
                size: c.size.to_string(),
                centralizer: c.centralizer_order.to_string(),
            })
            .collect();
        if as_json {
            return Ok(Output::ok(json(&classes)));
        }
        let mut rows = vec![vec!["class".into(), "size".into(), "|C(g)|".into(), "".into()]];
        for c in &classes {
            rows.push(vec![
                c.label.clone(),
                c.size.clone(),
                c.centralizer.clone(),
                if c.singular { "singular" } else { "regular" }.into(),
            ]);
        }
        return Ok(Output::ok(format!("{name}: {} classes\n{}", classes.len(), render::grid(&rows))));
    }
    let t = wreath_table(&h, w)?;
    if view.table {
        return Ok(Output::ok(if as_json {
            json(&render::table_json(name, &t))
        } else {
            format!("{name}, order {}\n{}", t.order(), render::table_text(&t))
        }));
    }
    let b = block_partition(&t, t.singular());
    let j = render::blocks_json(name, base.ell(), &t, t.singular(), &b);
    Ok(Output::ok(if as_json { json(&j) } else { render::blocks_text(&j) }))
}

fn isometry(ell: usize, w: usize, r: usize, kor_only: bool, as_json: bool, bounds: &Bounds) -> Result<Output, Failure> {
    if ell < 2 {
        return Err(Error::EllTooSmall(ell as u64).into());
    }
    if w >= ell || r >= ell {
        return Err(usage(format!("need 0 <= r, w < ell (got ell = {ell}, w = {w}, r = {r})")));
    }
    check_ell(ell as u64, bounds)?;
    let rep = if kor_only {
        verify_kor_isometry_with(ell, w, r, bounds)?
    } else {
        verify_main_isometry_with(ell, w, r, bounds)?
    };
    Ok(Output {
        text: if as_json { json(&rep) } else { render::report_text(&rep) },
        pass: rep.pass,
    })
}

fn sylow(n: u64, ell: u64, as_json: bool) -> Result<Output, Failure> {
    let s = ellblock_core::sylow::sylow_ell_structure(n, ell)?;
    Ok(Output::ok(if as_json {
        json(&s)
    } else {
        let digits: Vec<String> = s.digits.iter().map(ToString::to_string).collect();
        format!(
            "n = {n}, ell = {ell}: digits ({}), L = {}, order {}, {}{}\n",
            digits.join(","),
            s.describe(),
            s.order,
            if s.abelian { "abelian" } else { "non-abelian" },
            if s.cyclic { ", cyclic" } else { "" }
        )
    }))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let bounds = Bounds {
        max_sym_n: cli.max_n,
        max_normalizer_ell: cli.max_ell,
    };
    match &cli.command {
        Command::SymTable { n, json } => sym_table(*n, *json, &bounds),
        Command::Blocks { group, ell, json } => blocks(*group, *ell, *json, &bounds),
        Command::Normalizer { ell, table, json } => normalizer(*ell, *table, *json, &bounds),
        Command::Wreath { base, w, view, json } => wreath(*base, *w, view, *json, &bounds),
        Command::Isometry {
            ell,
            w,
            r,
            kor_only,
            json,
        } => isometry(*ell, *w, *r, *kor_only, *json, &bounds),
        Command::Sylow { n, ell, json } => sylow(*n, *ell, *json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &out.text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}

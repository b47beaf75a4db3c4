use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use idweyl_core::bitseq::{deletion_sphere, iterated_sphere};
use idweyl_core::codes::{self, bad_decode, path_decode, vt_decode_deletion, vt_decode_insertion};
use idweyl_core::counting::{card_levenshtein, card_path_code, sphere_size_bai, sphere_size_standard};
use idweyl_core::theorems::{self, Theorem};
use idweyl_core::weyla::{bad_deletion_sphere, path_deletion_sphere};
use idweyl_core::weylb::{f_coset, half_from_bits, minuscule_from_bits};
use idweyl_core::{
    BigJson, BigUint, BitSeq, CodeSpec, EnumerationLimit, Error, LatticePath, MinusculeB, SignedPerm, SphereFamilyId,
};

/// Default bound on sequence lengths materialized by enumerate/spheres/weyl.
const DEFAULT_LENGTH_GUARD: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "idweyl",
    version,
    about = "Insertion/deletion codes and minuscule Weyl group elements"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Lift the size guards.
    #[arg(long, global = true)]
    unsafe_max: bool,

    /// Override every default size guard.
    #[arg(long = "size-guard", global = true, env = "IDWEYL_MAX_SIZE", hide_env_values = true)]
    guard: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Correct one error in a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        received: BitSeq,
        /// Error type for vt codes (path and bad codes correct deletions).
        #[arg(long, value_enum, default_value_t = ErrorKind::Deletion)]
        error: ErrorKind,
    },
    /// Test whether a word is a codeword.
    EncodeCheck {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        word: BitSeq,
    },
    /// List every codeword.
    Enumerate {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Iterated insertion spheres, or one-step deletion spheres.
    Spheres {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long)]
        x: BitSeq,
        #[arg(long)]
        deletion: bool,
    },
    /// Exhaustively check a theorem up to a size bound.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Closed-form counts.
    Count {
        #[arg(long, value_enum)]
        which: Which,
        #[command(flatten)]
        params: CountParams,
        /// Also count by enumeration.
        #[arg(long)]
        check: bool,
    },
    /// Signed permutations and minuscule elements of W(B_n).
    Weyl {
        #[arg(long, value_enum)]
        op: WeylOp,
        /// Bits (a minuscule element) or a signed window such as "[-2,3,1]".
        #[arg(long, allow_hyphen_values = true)]
        input: String,
    },
    /// Draw a lattice path and its Young diagram.
    Render {
        #[arg(long)]
        path: BitSeq,
    },
}

#[derive(Args, Debug)]
struct CodeArgs {
    #[arg(long, value_enum)]
    code: CodeKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, default_value_t = 0)]
    a: u64,
}

#[derive(Args, Debug)]
struct CountParams {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    /// Residue; all residues when omitted.
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value_t = Family::Standard)]
    family: Family,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CodeKind {
    Vt,
    Path,
    Bad,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ErrorKind {
    Deletion,
    Insertion,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Standard,
    Path,
    Bai,
}

impl From<Family> for SphereFamilyId {
    fn from(f: Family) -> Self {
        match f {
            Family::Standard => SphereFamilyId::Standard,
            Family::Path => SphereFamilyId::Path,
            Family::Bai => SphereFamilyId::Bai,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    #[value(name = "L")]
    L,
    #[value(name = "Y")]
    Y,
    #[value(name = "B")]
    B,
    Sphere,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum WeylOp {
    ReducedWord,
    Length,
    Bijection,
}

/// How a command ended, mapped onto the exit status.
enum Failure {
    /// Verification failed or no codeword matched: exit 1.
    Check(String),
    /// Bad arguments or refused sizes: exit 2.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoCandidate(_) | Error::MultipleCandidates { .. } => Failure::Check(e.to_string()),
            Error::SizeGuard { what, size, bound } => Failure::Usage(refusal(&what, size, bound)),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn refusal(what: &str, size: usize, bound: usize) -> String {
    format!(
        "refused: {what} {size} exceeds the size guard {bound} (raise it with IDWEYL_MAX_SIZE or pass --unsafe-max)"
    )
}

struct Ctx {
    json: bool,
    unsafe_max: bool,
    guard: Option<usize>,
}

impl Ctx {
    fn bound(&self, default: usize) -> usize {
        if self.unsafe_max {
            usize::MAX
        } else {
            self.guard.unwrap_or(default)
        }
    }

    fn ensure(&self, what: &str, size: usize, default: usize) -> Result<(), Failure> {
        let bound = self.bound(default);
        if size > bound {
            return Err(Failure::Usage(refusal(what, size, bound)));
        }
        Ok(())
    }

    fn limit(&self) -> EnumerationLimit {
        EnumerationLimit {
            max_len: self.bound(DEFAULT_LENGTH_GUARD),
        }
    }

    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("JSON values serialize")
            );
        } else {
            println!("{}", text());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        unsafe_max: cli.unsafe_max,
        guard: cli.guard,
    };
    if ctx.unsafe_max {
        eprintln!("warning: size guards lifted; large inputs may take a very long time");
    }
    match run(&ctx, cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn need(value: Option<usize>, flag: &str, what: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("{what} needs --{flag}")))
}

fn code_spec(args: &CodeArgs) -> Result<CodeSpec, Failure> {
    Ok(match args.code {
        CodeKind::Vt => CodeSpec::levenshtein(need(args.n, "n", "a vt code")?, args.a as i64),
        CodeKind::Path => CodeSpec::path(
            need(args.v, "v", "a path code")?,
            need(args.h, "h", "a path code")?,
            args.a as i64,
        )?,
        CodeKind::Bad => CodeSpec::bad(
            need(args.v, "v", "a bad code")?,
            need(args.h, "h", "a bad code")?,
            args.a as i64,
        )?,
    })
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n")
}

fn run(ctx: &Ctx, command: Command) -> Result<(), Failure> {
    match command {
        Command::Decode { code, received, error } => decode(ctx, &code, &received, error),
        Command::EncodeCheck { code, word } => {
            let spec = code_spec(&code)?;
            let member = spec.membership(&word)?;
            let stat = spec.statistic(&word)?;
            ctx.emit(
                json!({"code": spec, "input": word, "member": member, "statistic": stat, "modulus": spec.modulus()}),
                || {
                    format!(
                        "{} ({stat} mod {} = {})",
                        if member { "member" } else { "not a member" },
                        spec.modulus(),
                        stat % spec.modulus()
                    )
                },
            );
            Ok(())
        }
        Command::Enumerate { code } => {
            let spec = code_spec(&code)?;
            let words = spec.enumerate(ctx.limit())?;
            ctx.emit(json!({"code": spec, "count": words.len(), "codewords": words}), || {
                lines(&words)
            });
            Ok(())
        }
        Command::Spheres { family, t, x, deletion } => {
            let members: BTreeSet<BitSeq> = if deletion {
                match family {
                    Family::Standard => deletion_sphere(&x)?,
                    Family::Path => path_deletion_sphere(&x),
                    Family::Bai => bad_deletion_sphere(&x),
                }
            } else {
                let grown = x.len() + if family == Family::Standard { t } else { 2 * t };
                ctx.ensure("sphere word length", grown, DEFAULT_LENGTH_GUARD)?;
                iterated_sphere(&x, t, family.into())
            };
            ctx.emit(
                json!({"family": format!("{family:?}").to_lowercase(), "x": x, "t": if deletion { 1 } else { t },
                       "kind": if deletion { "deletion" } else { "insertion" }, "size": members.len(), "members": members}),
                || lines(&members),
            );
            Ok(())
        }
        Command::Verify { theorem, max_size } => {
            let default = theorem.default_max_size();
            let max_size = max_size.unwrap_or(default);
            ctx.ensure(
                &format!("{} bound ({})", theorem, theorem.size_meaning()),
                max_size,
                default,
            )?;
            let report = theorems::run(theorem, max_size)?;
            let value = serde_json::to_value(&report).expect("reports serialize");
            ctx.emit(value, || {
                let head = format!(
                    "{} {} (max-size {}, {} cases)",
                    if report.passed { "PASS" } else { "FAIL" },
                    theorem,
                    max_size,
                    report.cases
                );
                match &report.witness {
                    Some(w) => format!("{head}\nwitness: {w}"),
                    None => head,
                }
            });
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check(format!("{theorem} failed")))
            }
        }
        Command::Count { which, params, check } => count(ctx, which, &params, check),
        Command::Weyl { op, input } => weyl(ctx, op, &input),
        Command::Render { path } => {
            let p = LatticePath::new(path.clone());
            let art = p.render();
            ctx.emit(
                json!({"path": path, "v": p.v(), "h": p.h(), "cells": p.cells(), "drawing": art}),
                || format!("{art}\nv={} h={} cells={}", p.v(), p.h(), p.cells()),
            );
            Ok(())
        }
    }
}

fn decode(ctx: &Ctx, args: &CodeArgs, received: &BitSeq, error: ErrorKind) -> Result<(), Failure> {
    let output = match args.code {
        CodeKind::Vt => {
            let n = need(args.n, "n", "a vt code")?;
            match error {
                ErrorKind::Deletion => vt_decode_deletion(received, n, args.a)?,
                ErrorKind::Insertion => vt_decode_insertion(received, n, args.a)?,
            }
        }
        kind => {
            if error == ErrorKind::Insertion {
                return Err(Failure::Usage("path and bad codes only correct deletions".into()));
            }
            // v and h describe the received word; the codeword has one more of each
            let (v, h) = (received.len() - received.weight(), received.weight());
            if let (Some(fv), Some(fh)) = (args.v, args.h) {
                if (fv, fh) != (v, h) && (fv, fh) != (v + 1, h + 1) {
                    return Err(Failure::Usage(format!(
                        "received word has v={v} h={h}, which fits neither --v {fv} --h {fh} nor the code they describe"
                    )));
                }
            }
            if kind == CodeKind::Path {
                path_decode(received, v, h, args.a)?.bits().clone()
            } else {
                bad_decode(received, v, h, args.a)?
            }
        }
    };
    let spec = match args.code {
        CodeKind::Vt => CodeSpec::levenshtein(output.len(), args.a as i64),
        CodeKind::Path => CodeSpec::path(output.len() - output.weight(), output.weight(), args.a as i64)?,
        CodeKind::Bad => CodeSpec::bad(output.len() - output.weight(), output.weight(), args.a as i64)?,
    };
    let report = codes::DecodeReport {
        code: spec,
        input: received.clone(),
        output: output.clone(),
    };
    ctx.emit(serde_json::to_value(&report).expect("reports serialize"), || {
        output.to_string()
    });
    Ok(())
}

fn count(ctx: &Ctx, which: Which, p: &CountParams, check: bool) -> Result<(), Failure> {
    match which {
        Which::L => {
            let n = need(p.n, "n", "count L")?;
            if n == 0 {
                return Err(Failure::Usage("count L needs n >= 1".into()));
            }
            let residues: Vec<u64> =
                p.a.map_or_else(|| (0..=n as u64).collect(), |a| vec![a % (n as u64 + 1)]);
            let mut rows = Vec::new();
            for a in residues {
                let formula = card_levenshtein(n as u64, a)?;
                let enumeration = if check {
                    Some(CodeSpec::levenshtein(n, a as i64).enumerate(ctx.limit())?.len())
                } else {
                    None
                };
                rows.push((format!("L_{{{n},{a}}}"), formula, enumeration));
            }
            emit_counts(ctx, rows)
        }
        Which::Y | Which::B => {
            let (v, h) = (need(p.v, "v", "count Y/B")?, need(p.h, "h", "count Y/B")?);
            if v + h == 0 {
                return Err(Failure::Usage("count Y/B needs v + h >= 1".into()));
            }
            let m = (v + h) as u64;
            let residues: Vec<u64> = p.a.map_or_else(|| (0..m).collect(), |a| vec![a % m]);
            let mut rows = Vec::new();
            for a in residues {
                let formula = card_path_code(v as u64, h as u64, a)?;
                let enumeration = if check {
                    let spec = if which == Which::Y {
                        CodeSpec::path(v, h, a as i64)?
                    } else {
                        CodeSpec::bad(v, h, a as i64)?
                    };
                    Some(spec.enumerate(ctx.limit())?.len())
                } else {
                    None
                };
                let name = if which == Which::Y { "Y" } else { "B" };
                rows.push((format!("{name}_{{{v},{h},{a}}}"), formula, enumeration));
            }
            emit_counts(ctx, rows)
        }
        Which::Sphere => {
            let (n, t) = (need(p.n, "n", "count sphere")?, need(p.t, "t", "count sphere")?);
            let formula = match p.family {
                Family::Standard => sphere_size_standard(n as u64, t as u64),
                Family::Bai => sphere_size_bai(n as u64, t as u64),
                Family::Path => {
                    return Err(Failure::Usage(
                        "path spheres have no closed form: their size depends on x once t >= 2 (try `spheres --family path`)".into(),
                    ))
                }
            };
            let enumeration = if check {
                let grown = n + if p.family == Family::Standard { t } else { 2 * t };
                ctx.ensure("sphere word length", grown, DEFAULT_LENGTH_GUARD)?;
                Some(iterated_sphere(&BitSeq::zeros(n), t, p.family.into()).len())
            } else {
                None
            };
            let family = format!("{:?}", p.family).to_lowercase();
            emit_counts(ctx, vec![(format!("#iS^({t})_{family}(n={n})"), formula, enumeration)])
        }
    }
}

fn emit_counts(ctx: &Ctx, rows: Vec<(String, BigUint, Option<usize>)>) -> Result<(), Failure> {
    let mismatch = rows
        .iter()
        .find(|(_, f, e)| e.is_some_and(|e| *f != e.into()))
        .map(|(name, _, _)| name.clone());
    let value: Vec<Value> = rows
        .iter()
        .map(|(name, f, e)| {
            let mut obj = json!({"name": name, "formula": BigJson::from(f)});
            if let Some(e) = e {
                obj["enumeration"] = json!(e);
                obj["equal"] = json!(*f == (*e).into());
            }
            obj
        })
        .collect();
    ctx.emit(json!(value), || {
        if rows.len() == 1 && rows[0].2.is_none() {
            return rows[0].1.to_string();
        }
        lines(rows.iter().map(|(name, f, e)| match e {
            Some(e) => format!("{name} = {f} (enumeration {e})"),
            None => format!("{name} = {f}"),
        }))
    });
    match mismatch {
        Some(name) => Err(Failure::Check(format!("formula disagrees with enumeration for {name}"))),
        None => Ok(()),
    }
}

fn parse_weyl_input(input: &str) -> Result<Either, Failure> {
    let trimmed = input.trim();
    let is_window = trimmed.starts_with('[') || trimmed.contains(',') || trimmed.contains('-');
    if is_window {
        let body = trimmed.trim_start_matches('[').trim_end_matches(']');
        let window = body
            .split(',')
            .map(|s| s.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Failure::Usage(format!("cannot read a signed window from {input:?}")))?;
        Ok(Either::Perm(SignedPerm::from_window(window)?))
    } else {
        Ok(Either::Bits(trimmed.parse()?))
    }
}

enum Either {
    Perm(SignedPerm),
    Bits(BitSeq),
}

fn weyl(ctx: &Ctx, op: WeylOp, input: &str) -> Result<(), Failure> {
    let parsed = parse_weyl_input(input)?;
    let rank = match &parsed {
        Either::Perm(w) => w.rank(),
        Either::Bits(x) => x.len(),
    };
    ctx.ensure("rank", rank, DEFAULT_LENGTH_GUARD)?;
    let perm = match &parsed {
        Either::Perm(w) => w.clone(),
        Either::Bits(x) => minuscule_from_bits(x).to_signed_perm(),
    };
    match op {
        WeylOp::ReducedWord => {
            let word = match &parsed {
                Either::Bits(x) => minuscule_from_bits(x).word(),
                Either::Perm(w) => w.reduced_word(),
            };
            ctx.emit(json!({"window": perm, "word": word}), || {
                lines(&word).replace('\n', " ")
            });
        }
        WeylOp::Length => {
            let len = perm.length();
            ctx.emit(json!({"window": perm, "length": len}), || len.to_string());
        }
        WeylOp::Bijection => {
            let Either::Bits(x) = parsed else {
                return Err(Failure::Usage("bijection takes a bit sequence".into()));
            };
            let w: MinusculeB = minuscule_from_bits(&x);
            let half = half_from_bits(&x);
            let coset = f_coset(x.len(), w.subset())?;
            let halves: Vec<String> = half
                .doubled()
                .iter()
                .map(|&d| if d > 0 { "1/2" } else { "-1/2" }.to_string())
                .collect();
            ctx.emit(
                json!({
                    "bits": x,
                    "subset": w.subset(),
                    "half_vector_doubled": half.doubled(),
                    "minuscule_word": w.word(),
                    "length": w.length(),
                    "moment": x.moment(),
                    "coset_label_doubled": coset.orbit_point().doubled(),
                    "window": w.to_signed_perm(),
                }),
                || {
                    format!(
                        "bits      {x}\nJ         {:?}\nlambda    ({})\nw_J       {:?}\nlength    {} (moment {})\nwindow    {:?}",
                        w.subset(),
                        halves.join(", "),
                        w.word(),
                        w.length(),
                        x.moment(),
                        w.to_signed_perm().window()
                    )
                },
            );
        }
    }
    Ok(())
}

use charlier_core::{limit_study, MultiIndex2};
use clap::Args;
use serde_json::to_value;

use super::OutputArgs;
use crate::error::Result;
use crate::output::{real, Format, Outcome, Table};
use crate::params::ParamArgs;

#[derive(Debug, Clone, Args)]
pub struct LimitArgs {
    #[command(flatten)]
    pub params: ParamArgs,

    #[arg(long, default_value = "1,1")]
    pub deg: MultiIndex2,

    #[arg(long, default_value = "2,1")]
    pub pt: MultiIndex2,

    /// Simplex sizes N, in increasing order.
    #[arg(
        long = "Ns",
        value_name = "N,...",
        value_delimiter = ',',
        default_value = "16,64,256,1024"
    )]
    pub ns: Vec<usize>,

    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run(args: &LimitArgs) -> Result<Outcome> {
    let set = args.params.resolve()?;
    let params = set.planar("limit")?;
    let study = limit_study(params, args.deg, args.pt, &args.ns)?;

    let mut table = Table::new(["N", "krawtchouk", "error_charlier", "error_flipped_y"]);
    let mut plain = format!(
        "C{0}{1} = {2} (charlier convention), {3} (flipped-y convention)\n",
        args.deg,
        args.pt,
        real(study.charlier),
        real(study.charlier_flipped)
    );
    plain += &format!("{:>8}  {:>24}  {:>14}  {:>14}\n", "N", "P", "|P - C|", "|P - C'|");
    for row in &study.rows {
        table.push(vec![
            row.n.to_string(),
            real(row.krawtchouk),
            real(row.error),
            real(row.error_flipped),
        ]);
        plain += &format!(
            "{:>8}  {:>24}  {:>14.6e}  {:>14.6e}\n",
            row.n,
            real(row.krawtchouk),
            row.error,
            row.error_flipped
        );
    }
    let verdict = match study.converged {
        Some(conv) if study.report.pass => format!("converges under the {} convention", conv.name()),
        _ => "no convention converges".to_string(),
    };
    plain += &format!("verdict: {verdict}\n");
    for note in &study.report.notes {
        plain += &format!("note: {note}\n");
    }
    let failure = (!study.report.pass).then(|| format!("limit study failed: {}", study.report.notes.join("; ")));

    Ok(Outcome {
        command: "limit",
        default_format: Format::Plain,
        params: set.to_json(),
        json: to_value(&study)?,
        table,
        plain,
        failure,
    })
}

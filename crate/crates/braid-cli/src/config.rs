//! Key=value config files for the bench subcommand. Unknown keys are
//! rejected; flags given on the command line override file values.

use anyhow::{bail, Context};

#[derive(Debug, Clone)]
pub struct BenchGrid {
    pub n: Vec<usize>,
    pub k: Vec<i64>,
    pub c: usize,
    pub samples: usize,
    pub seed: u64,
    pub budget_ms: Option<u64>,
}

impl Default for BenchGrid {
    fn default() -> Self {
        BenchGrid {
            n: vec![4],
            k: vec![1],
            c: 10,
            samples: 100,
            seed: 0xB41D_5EED,
            budget_ms: Some(30_000),
        }
    }
}

fn parse_list<T: std::str::FromStr>(value: &str, key: &str) -> anyhow::Result<Vec<T>>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    value
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<T>()
                .with_context(|| format!("bad value `{v}` for key `{key}`"))
        })
        .collect()
}

impl BenchGrid {
    pub fn apply_config(&mut self, text: &str) -> anyhow::Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key=value, got `{line}`", lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n" => self.n = parse_list(value, key)?,
                "k" => self.k = parse_list(value, key)?,
                "c" => self.c = value.parse().with_context(|| format!("bad c `{value}`"))?,
                "samples" => {
                    self.samples = value
                        .parse()
                        .with_context(|| format!("bad samples `{value}`"))?
                }
                "seed" => {
                    self.seed = value
                        .parse()
                        .with_context(|| format!("bad seed `{value}`"))?
                }
                "budget_ms" => {
                    self.budget_ms = Some(
                        value
                            .parse()
                            .with_context(|| format!("bad budget_ms `{value}`"))?,
                    )
                }
                other => bail!("line {}: unknown key `{other}`", lineno + 1),
            }
        }
        Ok(())
    }
}

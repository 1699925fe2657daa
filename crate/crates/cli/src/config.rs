use girthforge::construction::{ConstructionParams, DEFAULT_CYCLE_CAP};
use girthforge::format::{Meta, ParseError};
use girthforge::DEFAULT_MIS_BUDGET;

use crate::CliError;

/// Everything that determines a `generate` run. It is echoed into the header
/// of every artifact, so any one file suffices to regenerate the run.
#[derive(Clone, Debug, PartialEq)]
pub struct GenerateConfig {
    pub layers: usize,
    pub layer_size: usize,
    pub r: usize,
    pub scale: f64,
    pub target_n: Option<usize>,
    pub seed: u64,
    pub budget: u64,
    pub cycle_cap: usize,
}

impl GenerateConfig {
    pub fn new(layers: usize, layer_size: usize, r: usize, seed: u64) -> Self {
        GenerateConfig {
            layers,
            layer_size,
            r,
            scale: 1.0,
            target_n: None,
            seed,
            budget: DEFAULT_MIS_BUDGET,
            cycle_cap: DEFAULT_CYCLE_CAP,
        }
    }

    pub fn params(&self) -> ConstructionParams {
        ConstructionParams::desk(self.layers, self.layer_size, self.r, self.seed)
            .with_scale(self.scale)
            .with_target(self.target_n)
    }

    pub fn to_meta(&self) -> Meta {
        Meta::new()
            .with("command", "generate")
            .with("layers", self.layers)
            .with("layer_size", self.layer_size)
            .with("r", self.r)
            .with("scale", self.scale)
            .with("target_n", self.target_n.map_or("none".to_string(), |t| t.to_string()))
            .with("seed", self.seed)
            .with("budget", self.budget)
            .with("cycle_cap", self.cycle_cap)
    }

    pub fn from_meta(meta: &Meta) -> Result<Self, CliError> {
        if meta.get("command") != Some("generate") {
            return Err(CliError::Config("metadata does not describe a generate run".into()));
        }
        fn field<T: std::str::FromStr>(meta: &Meta, key: &str) -> Result<T, CliError> {
            let raw = meta
                .get(key)
                .ok_or_else(|| CliError::Config(format!("missing `{key}`")))?;
            raw.parse()
                .map_err(|_| CliError::Config(format!("invalid `{key}` value {raw:?}")))
        }
        let target_n = match meta.get("target_n") {
            None | Some("none") => None,
            Some(_) => Some(field(meta, "target_n")?),
        };
        Ok(GenerateConfig {
            layers: field(meta, "layers")?,
            layer_size: field(meta, "layer_size")?,
            r: field(meta, "r")?,
            scale: field(meta, "scale")?,
            target_n,
            seed: field(meta, "seed")?,
            budget: field(meta, "budget")?,
            cycle_cap: field(meta, "cycle_cap")?,
        })
    }

    /// `key=value` lines.
    pub fn to_text(&self) -> String {
        self.to_meta()
            .0
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    pub fn parse_text(text: &str) -> Result<Meta, ParseError> {
        let mut meta = Meta::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line.split_once('=') {
                Some((k, v)) if !k.is_empty() => meta.push(k, v),
                _ => {
                    return Err(ParseError {
                        line: i + 1,
                        message: format!("expected `key=value`, found {line:?}"),
                    })
                }
            }
        }
        Ok(meta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let mut cfg = GenerateConfig::new(4, 24, 5, 7);
        cfg.scale = 0.545_454_545_454_545_4;
        cfg.target_n = Some(40);
        let meta = GenerateConfig::parse_text(&cfg.to_text()).unwrap();
        assert_eq!(GenerateConfig::from_meta(&meta).unwrap(), cfg);
        assert!(GenerateConfig::parse_text("layers 4\n").is_err());
        assert!(GenerateConfig::from_meta(&Meta::new().with("command", "realize")).is_err());
    }
}

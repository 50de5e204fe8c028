//! JSON configuration file mirroring the command-line flags.

use crate::bounds::{Bounds, DPolicy};
use crate::registry::Suite;
use crate::report::Format;
use crate::run::RunOptions;
use crate::VerifyError;
use serde::{Deserialize, Serialize};
use simpforge_models::Mutation;
use std::path::{Path, PathBuf};

pub const CONFIG_ENV: &str = "SIMPFORGE_CONFIG";

/// Every field is optional; a flag given on the command line wins over the file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default, alias = "suite", skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mk_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_policy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pure_char: Option<bool>,
}

impl Config {
    pub fn from_file(path: &Path) -> Result<Config, VerifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Config(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| VerifyError::Config(format!("{}: {e}", path.display())))
    }

    /// The file named by `explicit`, else by the environment variable, else an empty config.
    pub fn load(explicit: Option<&Path>) -> Result<Config, VerifyError> {
        match explicit {
            Some(p) => Config::from_file(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Config::from_file(Path::new(&p)),
                _ => Ok(Config::default()),
            },
        }
    }

    /// Fields of `over` that are set replace those of `self`.
    pub fn overridden_by(mut self, over: Config) -> Config {
        if !over.suites.is_empty() {
            self.suites = over.suites;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if over.$f.is_some() { self.$f = over.$f; } )* };
        }
        take!(p_max, n_max, mk_max, w_max, d_policy, format, out, mutation, only, pure_char);
        self
    }

    pub fn bounds(&self) -> Result<Bounds, VerifyError> {
        let d = Bounds::default();
        let b = Bounds {
            p_max: self.p_max.unwrap_or(d.p_max),
            n_max: self.n_max.unwrap_or(d.n_max),
            mk_max: self.mk_max.unwrap_or(d.mk_max),
            w_max: self.w_max.unwrap_or(d.w_max),
            d_policy: match &self.d_policy {
                Some(s) => s.parse::<DPolicy>()?,
                None => d.d_policy,
            },
        };
        b.validate()?;
        Ok(b)
    }

    pub fn suites(&self) -> Result<Vec<Suite>, VerifyError> {
        if self.suites.is_empty() {
            return Ok(Suite::ORDER.to_vec());
        }
        let mut out = Vec::new();
        for s in &self.suites {
            for x in Suite::parse_list(s)? {
                if !out.contains(&x) {
                    out.push(x);
                }
            }
        }
        Ok(out)
    }

    pub fn run_options(&self) -> Result<RunOptions, VerifyError> {
        let mutation = match &self.mutation {
            Some(m) => Some(m.parse::<Mutation>().map_err(VerifyError::Config)?),
            None => None,
        };
        Ok(RunOptions {
            suites: self.suites()?,
            bounds: self.bounds()?,
            mutation,
            only: self.only.clone(),
            pure_char: self.pure_char.unwrap_or(false),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file: Config = serde_json::from_str(r#"{"suite": ["simplex"], "p_max": 3, "w_max": 2}"#).unwrap();
        let flags = Config { p_max: Some(2), ..Config::default() };
        let c = file.overridden_by(flags);
        assert_eq!(c.p_max, Some(2));
        assert_eq!(c.w_max, Some(2));
        assert_eq!(c.suites().unwrap(), vec![Suite::Simplex]);
    }

    #[test]
    fn invalid_values_are_config_errors() {
        let c = Config { p_max: Some(1), ..Config::default() };
        assert!(matches!(c.bounds(), Err(VerifyError::Config(_))));
        let c = Config { d_policy: Some("sample:0:3".into()), ..Config::default() };
        assert!(matches!(c.bounds(), Err(VerifyError::Config(_))));
        let c = Config { mutation: Some("nope".into()), ..Config::default() };
        assert!(matches!(c.run_options(), Err(VerifyError::Config(_))));
        assert!(serde_json::from_str::<Config>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn all_expands() {
        let c = Config { suites: vec!["all".into(), "hopf".into()], ..Config::default() };
        assert_eq!(c.suites().unwrap(), Suite::ORDER.to_vec());
    }
}

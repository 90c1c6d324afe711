use std::fs;
use std::path::Path;

use hypertangent::poly::DEFAULT_PRIME;
use hypertangent::Limits;
use serde::Deserialize;

/// Contents of a `--config` TOML file.
///
/// ```toml
/// default_prime = 101
///
/// [limits]
/// max_vars = 8
/// max_pairs = 50000
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub default_prime: u64,
    pub limits: Limits,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            default_prime: DEFAULT_PRIME,
            limits: Limits::default(),
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let c: Config = toml::from_str("[limits]\nmax_vars = 5\n").unwrap();
        assert_eq!(c.limits.max_vars, 5);
        assert_eq!(c.limits.max_degree, Limits::default().max_degree);
        assert_eq!(c.default_prime, 101);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<Config>("prime = 7\n").is_err());
        assert!(toml::from_str::<Config>("[limits]\nmax_variables = 3\n").is_err());
    }
}

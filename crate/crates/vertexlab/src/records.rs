//! Machine-readable result records: schema-checked run configuration and
//! byte-stable output records (sorted keys, fixed float format, seeded run
//! ids with no timestamps).

use crate::numeric::fnv1a;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One run's effective configuration. Unknown keys are rejected.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rs: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rps: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sites: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caps: Option<String>,
}

impl RunConfig {
    pub fn parse_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }
}

/// Floats print with 17 significant digits so records are reproducible and
/// value-stable across runs.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x:.16e}")
    }
}

/// Byte-stable output record: every map is ordered, every float formatted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultRecord {
    pub config: RunConfig,
    pub values: BTreeMap<String, String>,
    pub conventions: BTreeMap<String, String>,
    pub oracle_comparisons: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<String>,
    pub run_id: String,
}

impl ResultRecord {
    pub fn new(config: RunConfig) -> Self {
        let canonical = serde_json::to_string(&config).expect("config serializes");
        let run_id = format!("{:016x}", fnv1a(canonical.as_bytes()));
        ResultRecord {
            config,
            values: BTreeMap::new(),
            conventions: BTreeMap::new(),
            oracle_comparisons: BTreeMap::new(),
            error_estimate: None,
            run_id,
        }
    }

    pub fn value(&mut self, key: &str, v: f64) -> &mut Self {
        self.values.insert(key.into(), fmt_f64(v));
        self
    }

    pub fn value_str(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.values.insert(key.into(), v.into());
        self
    }

    pub fn convention(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.conventions.insert(key.into(), v.into());
        self
    }

    pub fn comparison(&mut self, key: &str, v: f64) -> &mut Self {
        self.oracle_comparisons.insert(key.into(), fmt_f64(v));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut lines = vec!["key,value".to_string()];
        for (k, v) in &self.values {
            lines.push(format!("{k},{v}"));
        }
        for (k, v) in &self.oracle_comparisons {
            lines.push(format!("oracle:{k},{v}"));
        }
        lines.join("\n") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_keys_are_rejected() {
        let err = RunConfig::parse_json(r#"{"command": "z", "bogus": 1}"#);
        assert!(err.is_err());
        let ok = RunConfig::parse_json(r#"{"command": "z", "n": 3}"#).unwrap();
        assert_eq!(ok.n, Some(3));
    }

    #[test]
    fn records_are_byte_stable() {
        let mut config = RunConfig::default();
        config.command = "z".into();
        config.n = Some(3);
        let mut r1 = ResultRecord::new(config.clone());
        r1.value("z", 7.0).convention("dwbc", "horizontal-in");
        let mut r2 = ResultRecord::new(config);
        r2.value("z", 7.0).convention("dwbc", "horizontal-in");
        assert_eq!(r1.to_json(), r2.to_json());
        assert_eq!(r1.run_id, r2.run_id);
    }

    #[test]
    fn float_format_is_17_digits() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(0.0), "0");
    }
}

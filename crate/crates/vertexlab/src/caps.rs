//! Enumeration caps, overridable through the `VERTEXLAB_CAPS` environment
//! variable (`"6v=7,20v=3"`).

use crate::sixv::DEFAULT_CAP_6V;
use crate::twentyv::DEFAULT_CAP_20V;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub sixv: usize,
    pub twentyv: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            sixv: DEFAULT_CAP_6V,
            twentyv: DEFAULT_CAP_20V,
        }
    }
}

impl Caps {
    /// Defaults overlaid with any `VERTEXLAB_CAPS` entries.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(spec) = std::env::var("VERTEXLAB_CAPS") {
            caps.apply(&spec);
        }
        caps
    }

    pub fn apply(&mut self, spec: &str) {
        for part in spec.split(',') {
            let Some((key, value)) = part.split_once('=') else {
                continue;
            };
            if let Ok(v) = value.trim().parse::<usize>() {
                match key.trim() {
                    "6v" => self.sixv = v,
                    "20v" => self.twentyv = v,
                    _ => {}
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides() {
        let mut caps = Caps::default();
        caps.apply("6v=7, 20v=2, bogus=9, broken");
        assert_eq!(caps, Caps { sixv: 7, twentyv: 2 });
    }
}

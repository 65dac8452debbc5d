//! Job descriptors: `key = value` text files shared with the command line.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::binpoly::BinaryPoly;
use crate::cyclic::{self, CodeOverR, DivisorTower, Generator};
use crate::error::{Error, Result};
use crate::metrics::EditLevel;
use crate::skew::{SkewCode, SkewGenerators, SkewPoly};

macro_rules! keyword_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
        pub enum $name {
            #[default]
            $($variant),+
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $($name::$variant => $text),+ })
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<$name> {
                match s.trim() {
                    $($text => Ok($name::$variant),)+
                    other => Err(Error::Parse(format!(
                        concat!("unknown ", stringify!($name), " {:?}"),
                        other
                    ))),
                }
            }
        }
    };
}

keyword_enum!(Ring { R64 => "r64", F2v => "f2v" });
keyword_enum!(Metric { Hamming => "hamming", Lee => "lee", Edit => "edit" });
keyword_enum!(OutputFormat { Report => "report", Fasta => "fasta", Csv => "csv" });

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub command: String,
    pub ring: Ring,
    pub n: Option<usize>,
    /// Generators separated by `;`. The token `I` stands for `1 + x + .. + x^(n-1)`.
    pub gen: Option<String>,
    /// `f0..f5`, used when `gen` is absent.
    pub tower: [Option<String>; 6],
    pub metric: Metric,
    pub level: EditLevel,
    pub format: OutputFormat,
    pub guard: u64,
    pub table: Option<u8>,
    pub out: Option<PathBuf>,
    /// Distance parameter of the DNA-code definition.
    pub d: Option<u64>,
    /// Edit cost CSV file.
    pub costs: Option<PathBuf>,
}

impl Default for JobConfig {
    fn default() -> JobConfig {
        JobConfig {
            command: "verify".to_string(),
            ring: Ring::default(),
            n: None,
            gen: None,
            tower: Default::default(),
            metric: Metric::default(),
            level: EditLevel::default(),
            format: OutputFormat::default(),
            guard: cyclic::DEFAULT_GUARD,
            table: None,
            out: None,
            d: None,
            costs: None,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Parse(format!("{key}: expected a number, got {value:?}")))
}

impl JobConfig {
    /// Parses `key = value` lines. `#` starts a comment; unknown keys are errors.
    pub fn parse(text: &str) -> Result<JobConfig> {
        let mut c = JobConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", lineno + 1)))?;
            c.set(key.trim(), value.trim())?;
        }
        Ok(c)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "command" => self.command = value.to_string(),
            "ring" => self.ring = value.parse()?,
            "n" => self.n = Some(parse_num(key, value)?),
            "gen" => self.gen = Some(value.to_string()),
            "metric" => self.metric = value.parse()?,
            "level" => self.level = value.parse()?,
            "format" => self.format = value.parse()?,
            "guard" => self.guard = parse_num(key, value)?,
            "table" => self.table = Some(parse_num(key, value)?),
            "out" => self.out = Some(PathBuf::from(value)),
            "d" => self.d = Some(parse_num(key, value)?),
            "costs" => self.costs = Some(PathBuf::from(value)),
            _ => match key.strip_prefix('f').and_then(|i| i.parse::<usize>().ok()) {
                Some(i) if i < 6 => self.tower[i] = Some(value.to_string()),
                _ => return Err(Error::Parse(format!("unknown config key {key:?}"))),
            },
        }
        Ok(())
    }

    /// Inverse of [`JobConfig::parse`]; unset optional keys are omitted.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "command = {}\nring = {}\n",
            self.command, self.ring
        );
        if let Some(n) = self.n {
            s += &format!("n = {n}\n");
        }
        if let Some(g) = &self.gen {
            s += &format!("gen = {g}\n");
        }
        for (i, f) in self.tower.iter().enumerate() {
            if let Some(f) = f {
                s += &format!("f{i} = {f}\n");
            }
        }
        s += &format!(
            "metric = {}\nlevel = {}\nformat = {}\nguard = {}\n",
            self.metric, self.level, self.format, self.guard
        );
        if let Some(t) = self.table {
            s += &format!("table = {t}\n");
        }
        if let Some(o) = &self.out {
            s += &format!("out = {}\n", o.display());
        }
        if let Some(d) = self.d {
            s += &format!("d = {d}\n");
        }
        if let Some(c) = &self.costs {
            s += &format!("costs = {}\n", c.display());
        }
        s
    }

    pub fn length(&self) -> Result<usize> {
        match self.n {
            Some(0) => Err(Error::ZeroLength),
            Some(n) => Ok(n),
            None => Err(Error::Parse("missing n".into())),
        }
    }

    fn expand(&self, text: &str) -> Result<String> {
        let n = self.length()?;
        Ok(text.replace('I', &format!("({})", BinaryPoly::indicator(n))))
    }

    /// The code over `F2[u]/(u^6)` described by `gen`, or by `f0..f5` read
    /// as `<f0, u f1, .., u^5 f5>`. A complete tower is checked for admissibility.
    pub fn code_over_r(&self) -> Result<CodeOverR> {
        let n = self.length()?;
        if let Some(g) = &self.gen {
            let gens = Generator::parse_list(&self.expand(g)?)?;
            if gens.is_empty() {
                return Err(Error::Parse("gen lists no generators".into()));
            }
            return CodeOverR::from_generators(n, gens);
        }
        let polys: Vec<Option<BinaryPoly>> = self
            .tower
            .iter()
            .map(|f| f.as_ref().map(|t| self.expand(t).and_then(|t| BinaryPoly::parse(&t))).transpose())
            .collect::<Result<_>>()?;
        if polys.iter().all(Option::is_none) {
            return Err(Error::Parse("need gen or at least one of f0..f5".into()));
        }
        if polys.iter().all(Option::is_some) {
            let f: [BinaryPoly; 6] = std::array::from_fn(|i| polys[i].clone().expect("checked"));
            return CodeOverR::from_tower(n, &DivisorTower::new(n, f)?);
        }
        let gens = polys
            .into_iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| Generator::new(i, p)))
            .collect();
        CodeOverR::from_generators(n, gens)
    }

    /// The skew code described by `gen`: one monic generator, a scaled
    /// `a * f1`, or the pair `f; g` separated by `;`.
    pub fn skew_code(&self) -> Result<SkewCode> {
        let n = self.length()?;
        let g = self
            .gen
            .as_ref()
            .ok_or_else(|| Error::Parse("the f2v ring needs gen".into()))?;
        let polys = self
            .expand(g)?
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(SkewPoly::parse)
            .collect::<Result<Vec<_>>>()?;
        SkewCode::build(n, SkewGenerators::from_polys(polys)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_round_trip() {
        let text = "# table 3 code\ncommand = export\nn = 7\ngen = u^4*(x+1)*(x^3+x+1)  # f0 f1\nformat = fasta\nd = 6\n";
        let c = JobConfig::parse(text).unwrap();
        assert_eq!(c.command, "export");
        assert_eq!(c.n, Some(7));
        assert_eq!(c.format, OutputFormat::Fasta);
        assert_eq!(c.d, Some(6));
        assert_eq!(JobConfig::parse(&c.to_text()).unwrap(), c);
        assert_eq!(c.code_over_r().unwrap().size_log2(), 6);
    }

    #[test]
    fn rejects_unknown_keys_and_values() {
        assert!(JobConfig::parse("colour = red").is_err());
        assert!(JobConfig::parse("f6 = x+1").is_err());
        assert!(JobConfig::parse("ring = z4").is_err());
        assert!(JobConfig::parse("n 7").is_err());
        assert!(JobConfig::parse("n = seven").is_err());
    }

    #[test]
    fn indicator_token() {
        let c = JobConfig::parse("ring = f2v\nn = 10\ngen = v*I").unwrap();
        let code = c.skew_code().unwrap();
        assert_eq!(code.generators().case(), 3);
        let r = JobConfig::parse("n = 7\ngen = u^5*I").unwrap().code_over_r().unwrap();
        assert!(r.contains(&crate::cyclic::RWord(vec![crate::ring::R64::u_pow(5); 7])));
    }

    #[test]
    fn tower_keys() {
        let c = JobConfig::parse("n = 7\nf0 = x+1\nf1 = x+1\nf2 = x+1\nf3 = x+1\nf4 = x+1\nf5 = x+1").unwrap();
        assert_eq!(c.code_over_r().unwrap().size_log2(), 36);
        let bad = JobConfig::parse("n = 7\nf0 = x+1\nf1 = x^3+x+1\nf2 = 1\nf3 = 1\nf4 = 1\nf5 = 1").unwrap();
        assert!(matches!(bad.code_over_r(), Err(Error::Tower(_))));
        let partial = JobConfig::parse("n = 7\nf4 = x^4+x^3+x^2+1").unwrap();
        assert_eq!(partial.code_over_r().unwrap().size_log2(), 6);
    }
}

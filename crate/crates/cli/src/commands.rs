use std::fmt::Display;

use birthdeath::{gillespie, write_distribution_csv, write_trajectories_csv, BirthDeathModel, ClosedFormG, GillespieConfig, RNG_ID};
use exactmath::{parse_rational_function, rational_to_f64, Rational};
use galois_pipeline::{proposition1_certificate, proposition2_certificate, sample_s, Family};
use kovacic::kovacic;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::{AnalyzeArgs, ClosedFormArgs, FamilyArg, Format, KovacicArgs, Rates, Record, SimulateArgs};
use crate::{CliError, Outcome};

/// Effective configuration, echoed at the top of every output.
#[derive(Debug, Clone, PartialEq)]
pub struct Config(Vec<(&'static str, String)>);

impl Config {
    pub fn new(subcommand: &str) -> Self {
        Config(vec![("subcommand", subcommand.to_string())])
    }

    pub fn push(&mut self, key: &'static str, value: impl Display) -> &mut Self {
        self.0.push((key, value.to_string()));
        self
    }

    pub fn rates(&mut self, rates: &Rates) -> &mut Self {
        self.push("beta", &rates.beta).push("delta", &rates.delta)
    }

    pub fn json(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>())
    }

    /// `# key=value` lines.
    pub fn csv_header(&self) -> String {
        self.0.iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
    }
}


/// `config` first, then the body's own keys.
#[derive(Serialize)]
struct Headed {
    config: Value,
    #[serde(flatten)]
    body: Value,
}

/// Pretty JSON with `config` as the leading key.
pub(crate) fn render_json(body: Value, cfg: &Config) -> String {
    let mut body = body;
    if let Value::Object(m) = &mut body {
        m.remove("config");
    }
    let mut s = serde_json::to_string_pretty(&Headed { config: cfg.json(), body }).expect("json renders");
    s.push('\n');
    s
}

fn render_csv(f: impl FnOnce(&mut Vec<u8>) -> Result<(), String>) -> Result<String, CliError> {
    let mut buf = Vec::new();
    f(&mut buf).map_err(CliError::Render)?;
    String::from_utf8(buf).map_err(|e| CliError::Render(e.to_string()))
}

pub(crate) fn float_rates(rates: &Rates) -> (f64, f64) {
    (rational_to_f64(&rates.beta), rational_to_f64(&rates.delta))
}

pub(crate) fn family_of(arg: FamilyArg, beta: &Rational, delta: &Rational) -> Family {
    match arg {
        FamilyArg::Quadratic => Family::Quadratic12,
        FamilyArg::Linear if beta == delta => Family::Linear11Equal,
        FamilyArg::Linear => Family::Linear11Distinct,
    }
}

pub fn cmd_kovacic(a: &KovacicArgs) -> Result<Outcome, CliError> {
    let r = parse_rational_function(&a.r, a.var)?;
    let var = a.var.to_string();
    let res = kovacic(&r)?;
    let mut cfg = Config::new("kovacic");
    cfg.push("r", &a.r).push("r_normalized", r.to_string_var(&var)).push("var", &var);
    Ok(Outcome { text: render_json(res.to_json(&var), &cfg), ok: true })
}

pub fn cmd_analyze(a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let (beta, delta) = (&a.rates.beta, &a.rates.delta);
    let family = family_of(a.family, beta, delta);
    let mut cfg = Config::new("analyze");
    cfg.push("family", a.family.label()).rates(&a.rates).push("n0", a.n0);
    let samples = if a.s.is_empty() {
        if a.samples == 0 {
            return Err(CliError::Input("--samples must be at least 1".into()));
        }
        cfg.push("samples", a.samples).push("sample_seed", a.sample_seed);
        sample_s(family, beta, delta, a.samples, a.sample_seed)
    } else {
        let listed: Vec<String> = a.s.iter().map(|s| s.to_string()).collect();
        cfg.push("s", listed.join(","));
        a.s.clone()
    };
    let verdict = match a.family {
        FamilyArg::Linear => proposition1_certificate(beta, delta, a.n0, &samples)?,
        FamilyArg::Quadratic => proposition2_certificate(beta, delta, a.n0, &samples)?,
    };
    Ok(Outcome { text: render_json(verdict.to_json(), &cfg), ok: true })
}

pub fn cmd_simulate(a: &SimulateArgs) -> Result<Outcome, CliError> {
    if a.paths == 0 {
        return Err(CliError::Input("--paths must be at least 1".into()));
    }
    let (beta, delta) = float_rates(&a.rates);
    let model = BirthDeathModel::new(beta, delta, a.b, a.d, a.n0)?;
    let mut gc = GillespieConfig::new(a.t, a.paths, a.seed);
    gc.record_events = a.record == Record::Events;
    let ens = gillespie(&model, &gc);
    let summary = ens.summary();

    let mut cfg = Config::new("simulate");
    cfg.rates(&a.rates)
        .push("b", a.b)
        .push("d", a.d)
        .push("n0", a.n0)
        .push("t", a.t)
        .push("paths", a.paths)
        .push("seed", a.seed)
        .push("record", if gc.record_events { "events" } else { "terminal" })
        .push("rng", RNG_ID);
    let text = match a.out {
        Format::Json => {
            let mut doc = json!({
                "summary": summary,
                "capped_paths": ens.capped_paths,
            });
            match &ens.events {
                Some(ev) => doc["events"] = json!(ev),
                None => doc["terminal"] = json!(ens.terminal),
            }
            render_json(doc, &cfg)
        }
        Format::Csv => {
            let mut head = cfg.clone();
            head.push("mean", summary.mean)
                .push("var", summary.var)
                .push("extinct_fraction", summary.extinct_fraction)
                .push("capped_paths", ens.capped_paths);
            let body = render_csv(|buf| write_trajectories_csv(buf, &ens).map_err(|e| e.to_string()))?;
            head.csv_header() + &body
        }
    };
    Ok(Outcome { text, ok: true })
}

pub fn cmd_closed_form(a: &ClosedFormArgs) -> Result<Outcome, CliError> {
    let (beta, delta) = float_rates(&a.rates);
    BirthDeathModel::linear(beta, delta, a.n0)?;
    let g = ClosedFormG::new(beta, delta, a.n0);
    let p = g.series_coefficients(a.t, a.nmax);
    let (mean, variance) = g.moments(a.t);
    let extinction = g.extinction(a.t);
    let total: f64 = p.iter().sum();

    let mut cfg = Config::new("closed-form");
    cfg.rates(&a.rates).push("n0", a.n0).push("t", a.t).push("nmax", a.nmax);
    let variant = format!("{:?}", g.variant);
    let text = match a.out {
        Format::Json => {
            let doc = json!({
                "variant": variant,
                "extinction": extinction,
                "mean": mean,
                "variance": variance,
                "coefficient_sum": total,
                "P": p,
            });
            render_json(doc, &cfg)
        }
        Format::Csv => {
            let mut head = cfg.clone();
            head.push("variant", &variant)
                .push("extinction", extinction)
                .push("mean", mean)
                .push("variance", variance)
                .push("coefficient_sum", total);
            let body = render_csv(|buf| write_distribution_csv(buf, a.t, &p).map_err(|e| e.to_string()))?;
            head.csv_header() + &body
        }
    };
    Ok(Outcome { text, ok: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_renderings() {
        let mut c = Config::new("x");
        c.push("t", 1.5).push("n0", 3);
        assert_eq!(c.csv_header(), "# subcommand=x\n# t=1.5\n# n0=3\n");
        let text = render_json(json!({"z": 1, "a": 2, "config": "stale"}), &c);
        assert!(text.starts_with("{\n  \"config\": {\n    \"n0\": \"3\""), "{text}");
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["config"]["subcommand"], "x");
        assert_eq!(v["a"], 2);
    }
}

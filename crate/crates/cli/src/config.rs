//! `--config FILE`: `key = value` lines spliced into the argument list right
//! after the subcommand, so flags given on the command line win.

use std::fs;

use crate::failure::Failure;

pub fn expand(args: Vec<String>) -> Result<Vec<String>, Failure> {
    let Some(path) = config_path(&args) else {
        return Ok(args);
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::usage(format!("cannot read config {path}: {e}")))?;
    let mut injected = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("{path}:{}: expected key=value", lineno + 1)))?;
        let flag = format!("--{}", key.trim().replace('_', "-"));
        match value.trim() {
            "true" => injected.push(flag),
            "false" => {}
            v => {
                injected.push(flag);
                injected.push(v.to_string());
            }
        }
    }
    let mut out = args;
    let at = 2.min(out.len());
    out.splice(at..at, injected);
    Ok(out)
}

fn config_path(args: &[String]) -> Option<String> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            return it.next().cloned();
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.to_string());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splices_after_subcommand() {
        let dir = std::env::temp_dir().join(format!("lapctl-config-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        fs::write(
            &path,
            "# comment\nk = 4\nn=2\nextra=true\nt1 = 5\nignored=false\n",
        )
        .unwrap();
        let args: Vec<String> = [
            "lapctl",
            "simulate",
            "--config",
            path.to_str().unwrap(),
            "--t1",
            "3",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        let out = expand(args).unwrap();
        assert_eq!(
            &out[..9],
            ["lapctl", "simulate", "--k", "4", "--n", "2", "--extra", "--t1", "5"]
        );
        assert_eq!(&out[out.len() - 2..], ["--t1", "3"]);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn no_config_is_identity() {
        let args = vec!["lapctl".to_string(), "build".to_string()];
        assert_eq!(expand(args.clone()).unwrap(), args);
    }
}

//! File formats, reports, verification sweeps and benchmarks on top of
//! [`sierpinski_core`].

pub mod bench;
pub mod edge_list;
pub mod labels;
pub mod report;
pub mod verify;

use sierpinski_core::sierpinski::DEFAULT_VERTEX_BUDGET;

/// Environment variable overriding the default vertex budget.
pub const BUDGET_ENV: &str = "SIERPINSKI_VERTEX_BUDGET";

#[derive(Debug, thiserror::Error)]
#[error("{BUDGET_ENV} must be a non-negative integer, got {0:?}")]
pub struct BudgetEnvError(String);

/// `flag`, else the environment variable, else the default.
pub fn resolve_budget(flag: Option<u64>, env: Option<&str>) -> Result<u64, BudgetEnvError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match env {
        Some(s) => s.trim().parse().map_err(|_| BudgetEnvError(s.to_string())),
        None => Ok(DEFAULT_VERTEX_BUDGET),
    }
}

/// Parses `4`, `2..5` (inclusive), `2..=5` or `2,3,7`.
pub fn parse_levels(s: &str) -> Result<Vec<u32>, String> {
    let bad = || format!("invalid level list {s:?}: expected 4, 2..5, 2..=5 or 2,3,7");
    let num = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(parse_levels("4").unwrap(), vec![4]);
        assert_eq!(parse_levels("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_levels("2..=4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_levels("5,2").unwrap(), vec![5, 2]);
        assert!(parse_levels("4..2").is_err());
        assert!(parse_levels("x").is_err());
    }

    #[test]
    fn budget_precedence() {
        assert_eq!(resolve_budget(Some(5), Some("7")).unwrap(), 5);
        assert_eq!(resolve_budget(None, Some("7")).unwrap(), 7);
        assert_eq!(resolve_budget(None, None).unwrap(), DEFAULT_VERTEX_BUDGET);
        assert!(resolve_budget(None, Some("lots")).is_err());
    }
}

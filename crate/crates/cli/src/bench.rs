//! Timing of the closed form against explicit construction.

use std::io::{self, Write};
use std::time::Instant;

use num_bigint::BigUint;
use sierpinski_core::closed::{randic_closed, Variant};
use sierpinski_core::counts::{polymeric_order, polymeric_size, sierpinski_order, sierpinski_size};
use sierpinski_core::index::randic_direct;
use sierpinski_core::sierpinski::{build_polymeric, build_sierpinski};
use sierpinski_core::{num_bigint, Error, Graph, IndexParams};

pub const CSV_HEADER: &str = "variant,t,closed_ns,construct_ns,vertices,edges";

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub variant: Variant,
    pub t: u32,
    /// Fastest of the repeated closed-form evaluations.
    pub closed_ns: u128,
    /// Building the graph and summing over its edges; `None` when the
    /// vertex budget refuses the construction.
    pub construct_ns: Option<u128>,
    pub vertices: BigUint,
    pub edges: BigUint,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        let construct = match self.construct_ns {
            Some(ns) => ns.to_string(),
            None => "skipped: budget".to_string(),
        };
        format!(
            "{},{},{},{},{},{}",
            self.variant.symbol(),
            self.t,
            self.closed_ns,
            construct,
            self.vertices,
            self.edges
        )
    }
}

pub fn bench(
    base: &Graph,
    variant: Variant,
    levels: &[u32],
    params: &IndexParams,
    budget: u64,
    repeats: u32,
) -> sierpinski_core::Result<Vec<BenchRecord>> {
    let (n, m) = (base.order() as u64, base.size() as u64);
    let mut records = Vec::with_capacity(levels.len());
    for &t in levels {
        let mut closed_ns = u128::MAX;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            let report = randic_closed(variant, base, t, params)?;
            closed_ns = closed_ns.min(start.elapsed().as_nanos());
            std::hint::black_box(report);
        }
        let start = Instant::now();
        let built = match variant {
            Variant::Sierpinski => build_sierpinski(base, t, budget),
            Variant::Polymeric => build_polymeric(base, t, budget).map(|p| p.graph),
        };
        let construct_ns = match built {
            Ok(g) => {
                std::hint::black_box(randic_direct(&g, params)?);
                Some(start.elapsed().as_nanos())
            }
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        };
        let (vertices, edges) = match variant {
            Variant::Sierpinski => (sierpinski_order(n, t), sierpinski_size(n, m, t)),
            Variant::Polymeric => (polymeric_order(n, t), polymeric_size(n, m, t)),
        };
        records.push(BenchRecord {
            variant,
            t,
            closed_ns,
            construct_ns,
            vertices,
            edges,
        });
    }
    Ok(records)
}

pub fn write_csv<W: Write>(mut out: W, records: &[BenchRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use sierpinski_core::families::Family;

    #[test]
    fn construction_skipped_over_budget() {
        let k3 = Family::Complete(3).build().unwrap();
        let params = IndexParams::new(1.0).unwrap();
        let records = bench(&k3, Variant::Sierpinski, &[2, 3, 4], &params, 27, 2).unwrap();
        assert!(records[0].construct_ns.is_some() && records[1].construct_ns.is_some());
        assert_eq!(records[2].construct_ns, None);
        assert_eq!(records[2].vertices, BigUint::from(81u32));
        assert_eq!(records[2].edges, BigUint::from(120u32));

        let mut out = Vec::new();
        write_csv(&mut out, &records).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert!(lines[3].starts_with("S,4,") && lines[3].ends_with(",skipped: budget,81,120"));
    }

    #[test]
    fn counts_are_exact_beyond_u64() {
        let k3 = Family::Complete(3).build().unwrap();
        let params = IndexParams::new(1.0).unwrap();
        let r = bench(&k3, Variant::Polymeric, &[50], &params, 1000, 1).unwrap();
        assert_eq!(r[0].construct_ns, None);
        assert_eq!(r[0].vertices, polymeric_order(3, 50));
        assert!(r[0].vertices > BigUint::from(u64::MAX));
    }
}

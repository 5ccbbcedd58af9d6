//! Specialized formulae for structured base graphs.
//!
//! Each specialization evaluates the stated formula term by term (`stated`)
//! next to the normative value (`value`). The two differ only where the
//! stated form disagrees with the general theorem; such families carry a
//! [`Deviation`] naming the term. [`check_sierpinski`] and
//! [`check_polymeric`] compare every term against [`crate::closed`] on a
//! concrete graph, which is how such disagreements are found.
//!
//! `S(G,t)` terms are keyed by the degree pair `(a, b)` of the copies they
//! weigh by `a^α b^α`. `P(G,t)` terms are `β_1..β_7` for `t >= 2`, and the
//! hub and lifted sums for `t = 1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::closed::{agrees, randic_polymeric, randic_polymeric_base, randic_sierpinski, Breakdown};
use crate::counts::{exact_quotient, power, psi};
use crate::error::{Error, Result};
use crate::graph::{degree_profile, tau_graph, Graph, Semiregular};
use crate::index::{power as pw, IndexParams, IndexValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SierpinskiFamily {
    /// `degree`-regular graph of order `n` with `triangles` triangles.
    Regular { n: u32, degree: u32, triangles: u64 },
    Complete(u32),
    /// `C_n` for `n >= 4`; `C_3 = K_3` is covered by [`Self::Complete`].
    Cycle(u32),
    BipartiteSemiregular(Semiregular),
    /// `K_{1,r}` for `r >= 2`.
    Star(u32),
    Path(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolymericFamily {
    Regular { n: u32, degree: u32, triangles: u64 },
    Complete(u32),
    /// Only at `t = 1`.
    BipartiteSemiregular(Semiregular),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecTerm {
    pub label: String,
    pub stated: f64,
    pub value: f64,
}

/// A term whose stated form is known to disagree with the general theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub term: String,
    pub note: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Specialization {
    /// Normative value, consistent with the general theorem.
    pub value: f64,
    /// Value of the formula as stated.
    pub stated: f64,
    pub terms: Vec<SpecTerm>,
    pub deviation: Option<Deviation>,
}

const REGULAR_NOTE: &str = "the stated coefficient of d^a (d+1)^a is \
((n^(t-1) + psi(t-1)) d^2 - 6 n^(t-2) tau(G)); summing f01 + f10 over the \
edges of a d-regular base gives (d^2 (n^(t-1) - n psi(t-2)) - 6 n^(t-2) tau(G)), \
which is the normative value";

fn float(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn bad(family: &'static str, reason: &str) -> Error {
    Error::FamilyParameter {
        family,
        reason: reason.to_string(),
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    IndexParams::new(alpha).map(|_| ())
}

/// Exact `numerator / 2`, asserting divisibility.
fn halve(numerator: BigInt) -> BigInt {
    let (q, r) = numerator.div_rem(&BigInt::from(2));
    assert!(r.is_zero(), "odd numerator");
    q
}

fn pair_label(a: u64, b: u64) -> String {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    format!("d=({a},{b})")
}

#[derive(Default)]
struct PairTerms(BTreeMap<(u64, u64), (f64, f64)>);

impl PairTerms {
    fn add(&mut self, a: u64, b: u64, stated: f64, value: f64) {
        let key = if a <= b { (a, b) } else { (b, a) };
        let slot = self.0.entry(key).or_insert((0.0, 0.0));
        slot.0 += stated;
        slot.1 += value;
    }

    fn same(&mut self, a: u64, b: u64, term: f64) {
        self.add(a, b, term, term);
    }

    fn finish(self, deviation: Option<Deviation>) -> Specialization {
        let terms: Vec<SpecTerm> = self
            .0
            .into_iter()
            .map(|((a, b), (stated, value))| SpecTerm {
                label: pair_label(a, b),
                stated,
                value,
            })
            .collect();
        finish(terms, deviation)
    }
}

fn finish(terms: Vec<SpecTerm>, deviation: Option<Deviation>) -> Specialization {
    Specialization {
        value: terms.iter().map(|t| t.value).sum(),
        stated: terms.iter().map(|t| t.stated).sum(),
        terms,
        deviation,
    }
}

fn stated_terms(labelled: impl IntoIterator<Item = (&'static str, f64)>) -> Specialization {
    finish(
        labelled
            .into_iter()
            .map(|(label, v)| SpecTerm {
                label: label.to_string(),
                stated: v,
                value: v,
            })
            .collect(),
        None,
    )
}

/// Exact level quantities for order `n` at level `t >= 2`.
struct Level {
    n: BigInt,
    /// `n^(t-2)`
    low: BigInt,
    /// `n^(t-1)`
    top: BigInt,
    psi2: BigInt,
    psi1: BigInt,
}

impl Level {
    fn new(n: u64, t: u32) -> Level {
        Level {
            n: n.into(),
            low: power(n, t - 2).into(),
            top: power(n, t - 1).into(),
            psi2: psi(n, t - 2).into(),
            psi1: psi(n, t - 1).into(),
        }
    }
}

fn validate_regular(family: &'static str, n: u32, degree: u32) -> Result<()> {
    if n < 2 {
        return Err(bad(family, "n must be at least 2"));
    }
    if degree < 1 || degree >= n {
        return Err(bad(family, "degree must be in 1..n"));
    }
    if (u64::from(n) * u64::from(degree)) % 2 != 0 {
        return Err(bad(family, "n * degree must be even"));
    }
    Ok(())
}

fn validate_semiregular(s: &Semiregular) -> Result<()> {
    let family = "bipartite_semiregular";
    if s.n1 == 0 || s.n2 == 0 || s.d1 == 0 || s.d2 == 0 {
        return Err(bad(family, "part sizes and degrees must be positive"));
    }
    if s.n1 * s.d1 != s.n2 * s.d2 {
        return Err(bad(family, "n1 * d1 must equal n2 * d2"));
    }
    if s.d1 > s.n2 || s.d2 > s.n1 {
        return Err(bad(family, "degrees exceed the opposite part"));
    }
    Ok(())
}

/// Stated closed form of `R_α(S(G,t))` for a structured base `G`, `t >= 2`.
pub fn specialized_sierpinski(family: SierpinskiFamily, t: u32, alpha: f64) -> Result<Specialization> {
    check_alpha(alpha)?;
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    let a = alpha;
    let mut terms = PairTerms::default();
    match family {
        SierpinskiFamily::Regular { n, degree, triangles } => {
            validate_regular("regular", n, degree)?;
            let lv = Level::new(n.into(), t);
            let (d, tau) = (BigInt::from(degree), BigInt::from(triangles));
            let df = f64::from(degree);
            let dd = u64::from(degree);
            let three_tau = &lv.low * &tau * 3;
            let c00 = halve(&lv.top * &d * (&lv.n - &d * 2)) + &three_tau;
            let stated01 = (&lv.top + &lv.psi1) * &d * &d - &three_tau * 2;
            let value01 = &d * &d * (&lv.top - &lv.n * &lv.psi2) - &three_tau * 2;
            let c11 = halve(&lv.n * &d * &lv.psi1) + &lv.n * &d * &d * &lv.psi2 + &three_tau;
            terms.same(dd, dd, float(&c00) * pw(df, 2.0 * a));
            let mixed = pw(df, a) * pw(df + 1.0, a);
            terms.add(dd, dd + 1, float(&stated01) * mixed, float(&value01) * mixed);
            terms.same(dd + 1, dd + 1, float(&c11) * pw(df + 1.0, 2.0 * a));
            let deviation = Deviation {
                term: pair_label(dd, dd + 1),
                note: REGULAR_NOTE,
            };
            Ok(terms.finish(Some(deviation)))
        }
        SierpinskiFamily::Complete(n) => {
            if n < 2 {
                return Err(bad("complete", "n must be at least 2"));
            }
            let nf = f64::from(n);
            let tf = f64::from(t);
            let nn = u64::from(n);
            terms.same(nn - 1, nn, pw(nf, a + 1.0) * pw(nf - 1.0, a + 1.0));
            terms.same(
                nn,
                nn,
                (pw(nf, 2.0 * a + tf + 1.0) - 2.0 * pw(nf, 2.0 * (a + 1.0)) + pw(nf, 2.0 * a + 1.0)) / 2.0,
            );
            Ok(terms.finish(None))
        }
        SierpinskiFamily::Cycle(n) => {
            if n < 4 {
                return Err(bad("cycle", "n must be at least 4; C_3 is the complete graph K_3"));
            }
            let lv = Level::new(n.into(), t);
            let nf = f64::from(n);
            terms.same(2, 2, pw(4.0, a) * float(&lv.top) * (nf - 4.0));
            terms.same(2, 3, 4.0 * pw(6.0, a) * float(&(&lv.top - &lv.n * &lv.psi2)));
            terms.same(3, 3, pw(9.0, a) * nf * float(&(&lv.psi1 + &lv.psi2 * 4)));
            Ok(terms.finish(None))
        }
        SierpinskiFamily::BipartiteSemiregular(s) => {
            validate_semiregular(&s)?;
            let n = (s.n1 + s.n2) as u64;
            let lv = Level::new(n, t);
            let (n1, n2, d1, d2) = (s.n1 as f64, s.n2 as f64, s.d1 as f64, s.d2 as f64);
            let (low, p2) = (float(&lv.low), float(&lv.psi2));
            let (k1, k2) = (s.d1 as u64, s.d2 as u64);
            terms.same(k1, k2, n1 * low * pw(d1, a + 1.0) * pw(d2, a) * (n as f64 - d1 - d2));
            terms.same(k1, k2 + 1, n1 * pw(d1, a + 1.0) * pw(d2 + 1.0, a) * (d2 * low - d1 * p2));
            terms.same(k1 + 1, k2, n2 * pw(d1 + 1.0, a) * pw(d2, a + 1.0) * (d1 * low - d2 * p2));
            terms.same(
                k1 + 1,
                k2 + 1,
                n1 * d1 * pw(d1 + 1.0, a) * pw(d2 + 1.0, a) * (low + (d1 + d2 + 1.0) * p2),
            );
            Ok(terms.finish(None))
        }
        SierpinskiFamily::Star(r) => {
            if r < 2 {
                return Err(bad("star", "r must be at least 2"));
            }
            let rf = f64::from(r);
            let rr = u64::from(r);
            let up = float(&power(u64::from(r) + 1, t - 1).into());
            terms.same(1, rr + 1, pw(rf + 1.0, a) * (up * (rf - 1.0) + 1.0));
            terms.same(2, rr, pw(2.0, a) * pw(rf, a + 1.0));
            terms.same(2, rr + 1, pw(2.0 * (rf + 1.0), a) * (2.0 * up - rf - 2.0));
            Ok(terms.finish(None))
        }
        SierpinskiFamily::Path(2) => {
            terms.same(1, 2, pw(2.0, a + 1.0));
            terms.same(2, 2, (pw(2.0, f64::from(t)) - 3.0) * pw(2.0, 2.0 * a));
            Ok(terms.finish(None))
        }
        SierpinskiFamily::Path(n) => {
            if n < 2 {
                return Err(bad("path", "n must be at least 2"));
            }
            // The stated form mixes degree pairs inside its summands; it is
            // regrouped by pair here without changing any coefficient.
            let lv = Level::new(n.into(), t);
            let (low, p2) = (float(&lv.low), float(&lv.psi2));
            let m3 = f64::from(n) - 3.0;
            let nf = f64::from(n);
            terms.same(1, 2, pw(2.0, a) * low * m3 * 2.0);
            terms.same(
                2,
                2,
                pw(2.0, a) * low * m3 * (pw(2.0, a) * nf - pw(2.0, a + 2.0)) + pw(2.0, 2.0 * a + 1.0) * (low - 2.0 * p2),
            );
            terms.same(1, 3, pw(3.0, a) * (4.0 * low - 2.0 * p2));
            terms.same(
                2,
                3,
                pw(3.0, a) * pw(2.0, a + 2.0) * m3 * (low - p2) + pw(3.0, a) * pw(2.0, a + 1.0) * (low + 4.0 * p2),
            );
            terms.same(3, 3, pw(3.0, a) * pw(3.0, a) * m3 * (low + 5.0 * p2));
            Ok(terms.finish(None))
        }
    }
}

/// Stated closed form of `R_α(P(G,t))` for a structured base `G`, `t >= 1`.
pub fn specialized_polymeric(family: PolymericFamily, t: u32, alpha: f64) -> Result<Specialization> {
    check_alpha(alpha)?;
    if t < 1 {
        return Err(Error::LevelTooSmall { t, min: 1 });
    }
    let a = alpha;
    match (family, t) {
        (PolymericFamily::Regular { n, degree, .. }, 1) => {
            validate_regular("regular", n, degree)?;
            let (nf, d) = (f64::from(n), f64::from(degree));
            Ok(stated_terms([
                ("hub", pw(nf, a + 1.0) * pw(d + 1.0, a)),
                ("lifted", nf * d * pw(d + 1.0, 2.0 * a) / 2.0),
            ]))
        }
        (PolymericFamily::Complete(n), 1) => {
            if n < 2 {
                return Err(bad("complete", "n must be at least 2"));
            }
            // n^(2a+1) (n+1) / 2, split as hub n^(2a+1) and lifted n^(2a+1) (n-1) / 2.
            let nf = f64::from(n);
            Ok(stated_terms([
                ("hub", pw(nf, 2.0 * a + 1.0)),
                ("lifted", pw(nf, 2.0 * a + 1.0) * (nf - 1.0) / 2.0),
            ]))
        }
        (PolymericFamily::BipartiteSemiregular(s), 1) => {
            validate_semiregular(&s)?;
            let (n1, n2, d1, d2) = (s.n1 as f64, s.n2 as f64, s.d1 as f64, s.d2 as f64);
            Ok(stated_terms([
                ("hub", pw(n1 + n2, a) * (n1 * pw(d1 + 1.0, a) + n2 * pw(d2 + 1.0, a))),
                ("lifted", n1 * d1 * pw((d1 + 1.0) * (d2 + 1.0), a)),
            ]))
        }
        (PolymericFamily::BipartiteSemiregular(_), _) => Err(Error::NotApplicable(
            "the semiregular polymeric formula covers t = 1 only".to_string(),
        )),
        (PolymericFamily::Regular { n, degree, triangles }, _) => {
            validate_regular("regular", n, degree)?;
            Ok(regular_betas(n.into(), degree.into(), triangles, t, a))
        }
        (PolymericFamily::Complete(n), _) => {
            if n < 2 {
                return Err(bad("complete", "n must be at least 2"));
            }
            Ok(complete_betas(n.into(), t, a))
        }
    }
}

const BETAS: [&str; 7] = ["beta1", "beta2", "beta3", "beta4", "beta5", "beta6", "beta7"];

fn regular_betas(n: u64, degree: u64, triangles: u64, t: u32, a: f64) -> Specialization {
    let lv = Level::new(n, t);
    let (nf, d) = (n as f64, degree as f64);
    let (db, tau) = (BigInt::from(degree), BigInt::from(triangles));
    let t2 = BigInt::from(t - 2);
    let t1 = BigInt::from(t - 1);
    let q3 = exact_quotient(&t2 - &lv.n * &lv.psi2, n);
    let q4 = exact_quotient(&t2 - &lv.psi2, n);
    let q5 = exact_quotient(&t1 - &lv.psi1, n);
    let q5a = exact_quotient(&db * &t1 + &lv.psi1 * (&lv.n - &db - 1), n);
    let nd = &lv.n * &db;
    let hub = pw(nf + 1.0, a);
    let (w1, w2, w3) = (pw(d + 1.0, a), pw(d + 2.0, a), pw(d + 3.0, a));
    let half_nd_gap = halve(&nd * (&lv.n - &db * 2));

    let beta1 = pw(nf, a + 1.0) * w2;
    let beta2 = float(&nd) * w2 * w2 / 2.0;
    let beta3 = float(&(&lv.n * &lv.n * &lv.psi2)) * hub * w2 + float(&(&nd * &q3)) * hub * w2
        - float(&(&nd * &q3)) * hub * w3;
    let beta4 = w2 * w2 * float(&(&lv.psi2 * (&half_nd_gap + &tau * 3)))
        + w2 * w3 * float(&((&nd * &db - &tau * 6) * &lv.psi2 + &nd * &db * &q4))
        + w3 * w3 * float(&((&tau * 3 + halve(nd.clone())) * &lv.psi2 - halve(&nd * (&db * 2 + 1) * &q4)));
    let beta5 = float(&(&lv.n * &q5a)) * hub * w2 - float(&(&nd * &q5)) * hub * w3;
    let beta6 = hub * w1 * float(&(&lv.top * &lv.n - &nd * &lv.psi1)) + float(&(&nd * &lv.psi1)) * hub * w2;
    let beta7 = w1 * w1 * float(&(&lv.low * (&half_nd_gap + &tau * 3)))
        + w1 * w2 * float(&(&db * &db * (&lv.top - &lv.n * &lv.psi2) - &lv.low * &tau * 6))
        + w2 * w2 * float(&(halve(&nd * &lv.psi1) + &nd * &db * &lv.psi2 + &lv.low * &tau * 3));
    stated_terms(BETAS.into_iter().zip([beta1, beta2, beta3, beta4, beta5, beta6, beta7]))
}

fn complete_betas(n: u64, t: u32, a: f64) -> Specialization {
    let lv = Level::new(n, t);
    let nf = n as f64;
    let (t2, t1) = (f64::from(t) - 2.0, f64::from(t) - 1.0);
    let (h1, h2) = (pw(nf + 1.0, a), pw(nf + 2.0, a));
    let n_pow_t = float(&(&lv.top * &lv.n));
    let beta1 = pw(nf, a + 1.0) * h1;
    let beta2 = nf * (nf - 1.0) * h1 * h1 / 2.0;
    let beta3 = nf * t2 * h1 * h1 + nf * h1 * h2 * float(&(BigInt::from(2) + &lv.n * &lv.psi2 - t));
    let beta4 = t2 * nf * (nf - 1.0) * h1 * h2
        + h2 * h2 / 2.0 * float(&(&lv.n * &lv.n * &lv.n * &lv.psi2 + BigInt::from(t - 2) * (&lv.n - &lv.n * &lv.n * 2)));
    let beta5 = t1 * nf * h1 * h1 + nf * h1 * h2 * float(&(&lv.psi1 - (t - 1)));
    let beta6 = pw(nf, a + 1.0) * h1 + (n_pow_t - nf) * h1 * h1;
    let beta7 = (nf - 1.0) * pw(nf, a + 1.0) * h1
        + float(&(&lv.top * &lv.n * &lv.n - &lv.n * &lv.n * 2 + &lv.n)) * h1 * h1 / 2.0;
    stated_terms(BETAS.into_iter().zip([beta1, beta2, beta3, beta4, beta5, beta6, beta7]))
}

/// One term of a specialization next to the same term of the general
/// theorem on a concrete graph.
#[derive(Clone, Debug, PartialEq)]
pub struct TermCheck {
    pub label: String,
    pub stated: f64,
    pub value: f64,
    pub general: f64,
    pub stated_agrees: bool,
    pub value_agrees: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Consistency {
    pub terms: Vec<TermCheck>,
    pub deviation: Option<Deviation>,
}

impl Consistency {
    pub fn stated_agrees(&self) -> bool {
        self.terms.iter().all(|t| t.stated_agrees)
    }

    pub fn value_agrees(&self) -> bool {
        self.terms.iter().all(|t| t.value_agrees)
    }

    /// Labels of terms whose stated form disagrees with the general theorem.
    pub fn diverging(&self) -> Vec<&str> {
        self.terms
            .iter()
            .filter(|t| !t.stated_agrees)
            .map(|t| t.label.as_str())
            .collect()
    }
}

fn compare(spec: Specialization, general: Vec<(String, f64)>, rel_tol: f64) -> Consistency {
    let mut merged: BTreeMap<String, (f64, f64, f64)> = BTreeMap::new();
    for t in spec.terms {
        merged.insert(t.label, (t.stated, t.value, 0.0));
    }
    for (label, g) in general {
        merged.entry(label).or_insert((0.0, 0.0, 0.0)).2 += g;
    }
    // Terms are compared on the scale of the whole index so that cancelling
    // summands inside a term do not trip the relative tolerance.
    let scale: f64 = merged.values().map(|v| v.2.abs()).sum();
    let close = |x: f64, y: f64| agrees(x, y, rel_tol) || (x - y).abs() <= rel_tol * scale * 1e-3;
    Consistency {
        terms: merged
            .into_iter()
            .map(|(label, (stated, value, general))| TermCheck {
                label,
                stated,
                value,
                general,
                stated_agrees: close(stated, general),
                value_agrees: close(value, general),
            })
            .collect(),
        deviation: spec.deviation,
    }
}

fn regular_matches(g: &Graph, n: u32, degree: u32, triangles: u64) -> bool {
    g.order() == n as usize
        && degree_profile(g).regular_degree == Some(degree as usize)
        && tau_graph(g) as u64 == triangles
}

fn semiregular_matches(g: &Graph, s: &Semiregular) -> bool {
    let Some(p) = degree_profile(g).bipartite_semiregular else {
        return false;
    };
    let swapped = Semiregular {
        n1: p.n2,
        n2: p.n1,
        d1: p.d2,
        d2: p.d1,
    };
    p == *s || swapped == *s
}

impl SierpinskiFamily {
    /// Whether `g` belongs to this family with these parameters.
    pub fn describes(&self, g: &Graph) -> bool {
        match *self {
            SierpinskiFamily::Regular { n, degree, triangles } => regular_matches(g, n, degree, triangles),
            SierpinskiFamily::Complete(n) => {
                g.order() == n as usize && g.size() == (n as usize * (n as usize - 1)) / 2
            }
            SierpinskiFamily::Cycle(n) => g.order() == n as usize && regular_matches(g, n, 2, 0) && g.is_connected(),
            SierpinskiFamily::BipartiteSemiregular(s) => semiregular_matches(g, &s),
            SierpinskiFamily::Star(r) => semiregular_matches(
                g,
                &Semiregular {
                    n1: 1,
                    n2: r as usize,
                    d1: r as usize,
                    d2: 1,
                },
            ),
            SierpinskiFamily::Path(n) => {
                g.order() == n as usize && g.size() + 1 == n as usize && g.is_connected() && g.max_degree() <= 2
            }
        }
    }
}

impl PolymericFamily {
    pub fn describes(&self, g: &Graph) -> bool {
        match *self {
            PolymericFamily::Regular { n, degree, triangles } => regular_matches(g, n, degree, triangles),
            PolymericFamily::Complete(n) => SierpinskiFamily::Complete(n).describes(g),
            PolymericFamily::BipartiteSemiregular(s) => semiregular_matches(g, &s),
        }
    }
}

/// Compares [`specialized_sierpinski`] with [`randic_sierpinski`] on `g`,
/// grouping the general theorem's class terms by degree pair.
pub fn check_sierpinski(family: SierpinskiFamily, g: &Graph, t: u32, alpha: f64, rel_tol: f64) -> Result<Consistency> {
    if !family.describes(g) {
        return Err(Error::NotApplicable(format!("{family:?} does not describe the given graph")));
    }
    let spec = specialized_sierpinski(family, t, alpha)?;
    let report = randic_sierpinski(g, t, &IndexParams::new(alpha)?)?;
    let Breakdown::Sierpinski(b) = report.breakdown else {
        unreachable!("S(G,t) reports carry per-edge terms")
    };
    let general = b
        .edges
        .iter()
        .flat_map(|e| e.terms.iter())
        .map(|c| (pair_label(c.degrees.0, c.degrees.1), c.value.to_f64()))
        .collect();
    Ok(compare(spec, general, rel_tol))
}

/// Compares [`specialized_polymeric`] with [`randic_polymeric`] on `g`, term
/// by term (`β_i`, or hub and lifted sums at `t = 1`).
pub fn check_polymeric(family: PolymericFamily, g: &Graph, t: u32, alpha: f64, rel_tol: f64) -> Result<Consistency> {
    if !family.describes(g) {
        return Err(Error::NotApplicable(format!("{family:?} does not describe the given graph")));
    }
    let spec = specialized_polymeric(family, t, alpha)?;
    let params = IndexParams::new(alpha)?;
    let general: Vec<(String, f64)> = if t == 1 {
        let b = randic_polymeric_base(g, &params)?;
        let lifted: f64 = b.lifted.iter().map(|e| e.value.to_f64()).sum();
        alloc::vec![("hub".to_string(), b.hub.to_f64()), ("lifted".to_string(), lifted)]
    } else {
        let Breakdown::Polymeric(b) = randic_polymeric(g, t, &params)?.breakdown else {
            unreachable!("P(G,t) reports for t >= 2 carry betas")
        };
        BETAS
            .iter()
            .zip(b.beta.iter())
            .map(|(l, v)| (l.to_string(), IndexValue::to_f64(v)))
            .collect()
    };
    Ok(compare(spec, general, rel_tol))
}

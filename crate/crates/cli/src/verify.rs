//! `geomr verify --suite NAME`: seeded checks of the identities, reported as JSON.

use geomr::exactfield::{Laurent, Rational};
use geomr::geomcrystal::{
    duality, e_c, eps, phi, pr, prod_duality, prod_e_c, prod_pr, prod_schutzenberger, same_points, schutzenberger,
};
use geomr::grassmann::{cyclic_interval_count, k_subsets, phi_matrix, PlanarNetwork, XPoint};
use geomr::loopgroup::{fl, g_eval, g_matrix, inv, is_r_nonnegative, linear_power, minor_delta, sh};
use geomr::rmatrix::{geom_e, geom_e_loop, geom_e_plucker, geom_r, key_identity_check, matrix_identity_holds, r_at};
use geomr::sampling::Sampler;
use geomr::tableaux::{comb_coenergy, comb_r_oracle, enumerate_rect, KRectangle, Tableau};
use geomr::tropical::{trop_e, trop_r};
use geomr::{Field, GeomError, Result, Ring};
use serde::Serialize;
use serde_json::{json, Value};

use crate::wire::{PointJson, TableauOut};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    GrIdentity,
    Involution,
    YangBaxter,
    Equivariance,
    TropAgreement,
    CoenergyLaw,
    SymmetryLaws,
    MinorPositivity,
    Lindstrom,
    Serre,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::GrIdentity => "gr-identity",
            Suite::Involution => "involution",
            Suite::YangBaxter => "yang-baxter",
            Suite::Equivariance => "equivariance",
            Suite::TropAgreement => "trop-agreement",
            Suite::CoenergyLaw => "coenergy-law",
            Suite::SymmetryLaws => "symmetry-laws",
            Suite::MinorPositivity => "minor-positivity",
            Suite::Lindstrom => "lindstrom",
            Suite::Serre => "serre",
        }
    }

    /// Number of factors the suite samples, if fixed.
    fn arity(self) -> Option<usize> {
        match self {
            Suite::Involution | Suite::Equivariance | Suite::CoenergyLaw => Some(2),
            Suite::YangBaxter => Some(3),
            _ => None,
        }
    }

    fn default_profile(self, n: usize) -> Vec<usize> {
        let two = 2.min(n - 1);
        match self {
            Suite::YangBaxter => vec![1, two, 1],
            _ => vec![1, two],
        }
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub n: usize,
    pub seed: u64,
    pub trials: usize,
    pub profile: Vec<usize>,
}

impl Config {
    pub fn new(suite: Suite, n: usize, seed: u64, trials: usize, profile: Option<Vec<usize>>) -> Result<Self> {
        if n < 2 {
            return Err(GeomError::invalid("n must be at least 2"));
        }
        if trials < 1 {
            return Err(GeomError::invalid("trials must be at least 1"));
        }
        let profile = profile.unwrap_or_else(|| suite.default_profile(n));
        if profile.is_empty() || profile.len() > 3 {
            return Err(GeomError::invalid("profile needs one to three entries"));
        }
        if let Some(&k) = profile.iter().find(|&&k| k < 1 || k >= n) {
            return Err(GeomError::invalid(format!("profile entry {k} outside [1, {}]", n - 1)));
        }
        match suite.arity() {
            Some(a) if profile.len() != a => {
                return Err(GeomError::invalid(format!("suite {} needs a profile with {a} entries", suite.name())))
            }
            None if suite == Suite::GrIdentity && profile.len() < 2 => {
                return Err(GeomError::invalid("suite gr-identity needs at least two profile entries"))
            }
            _ => {}
        }
        Ok(Config { n, seed, trials, profile })
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    name: String,
    passed: bool,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
}

#[derive(Serialize)]
pub struct Report {
    suite: &'static str,
    n: usize,
    seed: u64,
    trials: usize,
    profile: Vec<usize>,
    checks: Vec<CheckReport>,
    pub passed: bool,
}

#[derive(Default)]
struct Checks(Vec<CheckReport>);

impl Checks {
    /// Counts one instance of `name`; the first failure (or error) is kept as the counterexample.
    fn record(&mut self, name: &str, outcome: Result<bool>, witness: impl FnOnce() -> Value) {
        let pos = match self.0.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.0.push(CheckReport { name: name.to_string(), passed: true, count: 0, counterexample: None });
                self.0.len() - 1
            }
        };
        let c = &mut self.0[pos];
        c.count += 1;
        let failure = match outcome {
            Ok(true) => return,
            Ok(false) => json!({ "input": witness() }),
            Err(e) => json!({ "input": witness(), "error": error_code(&e), "detail": e.detail() }),
        };
        if c.passed {
            c.passed = false;
            c.counterexample = Some(failure);
        }
    }
}

pub fn error_code(e: &GeomError) -> &'static str {
    match e {
        GeomError::InvalidInput(_) => "invalid_input",
        GeomError::DegenerateInput(_) => "degenerate_input",
    }
}

type Q = Rational;
type P = XPoint<Q>;

fn points_json(xs: &[P]) -> Value {
    json!(xs.iter().map(PointJson::from_point).collect::<Vec<_>>())
}

fn tableaux_json(ts: &[&Tableau]) -> Value {
    json!(ts.iter().map(|t| TableauOut::from(*t)).collect::<Vec<_>>())
}

pub fn run(suite: Suite, cfg: &Config) -> Result<Report> {
    let mut checks = Checks::default();
    let mut s = Sampler::new(cfg.seed);
    let n = cfg.n;
    match suite {
        Suite::TropAgreement => trop_agreement(cfg, &mut checks),
        Suite::Lindstrom => {
            for _ in 0..cfg.trials {
                for &k in &cfg.profile {
                    let t = s.rational();
                    lindstrom(&s.rect(n, k, t)?, &mut checks);
                }
            }
        }
        Suite::SymmetryLaws | Suite::MinorPositivity | Suite::Serre => {
            for _ in 0..cfg.trials {
                for &k in &cfg.profile {
                    let x = s.point(n, k)?;
                    match suite {
                        Suite::SymmetryLaws => symmetry(&x, &mut checks),
                        Suite::MinorPositivity => positivity(&x, &mut checks),
                        _ => {
                            let (c1, c2) = (s.rational(), s.rational());
                            serre(&x, &c1, &c2, &mut checks);
                        }
                    }
                }
            }
        }
        _ => {
            for _ in 0..cfg.trials {
                let xs = s.points(n, &cfg.profile)?;
                let c = s.rational();
                sampled(suite, &xs, &c, &mut checks);
            }
        }
    }
    let passed = checks.0.iter().all(|c| c.passed);
    Ok(Report {
        suite: suite.name(),
        n,
        seed: cfg.seed,
        trials: cfg.trials,
        profile: cfg.profile.clone(),
        checks: checks.0,
        passed,
    })
}

fn sampled(suite: Suite, xs: &[P], c: &Q, checks: &mut Checks) {
    let w = || points_json(xs);
    let r = |ys: &[P], pos: usize| r_at(ys, pos);
    match suite {
        Suite::GrIdentity => {
            for pos in 0..xs.len() - 1 {
                let (u, v) = (&xs[pos], &xs[pos + 1]);
                let ok = geom_r(u, v).and_then(|(vp, up)| matrix_identity_holds(u, v, &vp, &up));
                checks.record("g(u)g(v) = g(v')g(u')", ok, w);
            }
        }
        Suite::Involution => {
            let ok = r(xs, 0).and_then(|once| r(&once, 0)).map(|twice| same_points(&twice, xs));
            checks.record("R^2 = id", ok, w);
        }
        Suite::YangBaxter => {
            let lhs = r(xs, 0).and_then(|a| r(&a, 1)).and_then(|a| r(&a, 0));
            let rhs = r(xs, 1).and_then(|a| r(&a, 0)).and_then(|a| r(&a, 1));
            let ok = lhs.and_then(|l| rhs.map(|rr| same_points(&l, &rr)));
            checks.record("R1 R2 R1 = R2 R1 R2", ok, w);
        }
        Suite::Equivariance => {
            let n = xs[0].n() as i64;
            let commutes = |f: &dyn Fn(&[P]) -> Result<Vec<P>>| -> Result<bool> {
                let lhs = r(&f(xs)?, 0)?;
                let rhs = f(&r(xs, 0)?)?;
                Ok(same_points(&lhs, &rhs))
            };
            for i in 0..n {
                checks.record("R e_i^c = e_i^c R", commutes(&|ys| prod_e_c(ys, i, c)), || {
                    json!({ "points": points_json(xs), "i": i, "c": c })
                });
            }
            checks.record("R PR = PR R", commutes(&|ys| prod_pr(ys)), w);
            checks.record("R S = S R", commutes(&|ys| prod_schutzenberger(ys)), w);
            checks.record("R D = D R", commutes(&|ys| prod_duality(ys)), w);
        }
        Suite::CoenergyLaw => coenergy(xs, c, checks),
        _ => unreachable!("suite {suite:?} is not pointwise"),
    }
}

fn coenergy(xs: &[P], c: &Q, checks: &mut Checks) {
    let (u, v) = (&xs[0], &xs[1]);
    let n = u.n() as i64;
    let w = || json!({ "points": points_json(xs), "c": c });
    let e = match geom_e(u, v) {
        Ok(e) => e,
        Err(err) => return checks.record("E is defined", Err(err), w),
    };
    let forms = geom_e_loop(u, v)
        .and_then(|l| geom_e_plucker(u, v).map(|p| l == Laurent::constant(e.clone()) && p == e));
    checks.record("E from determinant, loop minor and Plücker forms agree", forms, w);
    for i in 1..n {
        let ok = prod_e_c(xs, i, c).and_then(|m| geom_e(&m[0], &m[1])).map(|ei| ei == e);
        checks.record("E is invariant under e_i^c, i != 0", ok, w);
    }
    let law = (|| -> Result<bool> {
        let (vp, up) = geom_r(u, v)?;
        let m = prod_e_c(xs, 0, c)?;
        let (e0u, p0v) = (eps(u, 0)?, phi(v, 0)?);
        let (e0v, p0u) = (eps(&vp, 0)?, phi(&up, 0)?);
        let f1 = e0u.add(&p0v.div(c)?).div(&e0u.add(&p0v))?;
        let f2 = c.mul(&e0v).add(&p0u).div(&e0v.add(&p0u))?;
        Ok(geom_e(&m[0], &m[1])? == e.mul(&f1).mul(&f2))
    })();
    checks.record("E transforms under e_0^c", law, w);
    for r in 1..=n {
        checks.record("key identity", key_identity_check(u, v, r), || json!({ "points": points_json(xs), "r": r }));
    }
}

fn trop_agreement(cfg: &Config, checks: &mut Checks) {
    let n = cfg.n;
    let lmax = if n <= 3 { 3 } else { 2 };
    let mut ks = cfg.profile.clone();
    ks.sort_unstable();
    ks.dedup();
    let all: Vec<Tableau> = ks.iter().flat_map(|&k| (0..=lmax).flat_map(move |l| enumerate_rect(n, k, l))).collect();
    for t in &all {
        for u in &all {
            let w = || tableaux_json(&[t, u]);
            let agree = (|| -> Result<bool> {
                let (up, tp) = comb_r_oracle(t, u)?;
                let (bp, ap) = trop_r(&KRectangle::from_tableau(t)?, &KRectangle::from_tableau(u)?)?;
                Ok(bp.to_tableau()? == up && ap.to_tableau()? == tp)
            })();
            checks.record("Trop(R) = combinatorial R", agree, w);
            let energy = (|| -> Result<bool> {
                Ok(trop_e(&KRectangle::from_tableau(t)?, &KRectangle::from_tableau(u)?)? == comb_coenergy(t, u)?)
            })();
            checks.record("Trop(E) = combinatorial coenergy", energy, w);
        }
    }
}

fn sign(e: i64) -> Q {
    Q::sign_pow(e)
}

fn symmetry(x: &P, checks: &mut Checks) {
    let (n, k) = (x.n(), x.k());
    let w = || points_json(std::slice::from_ref(x));
    let a = match g_matrix(x) {
        Ok(a) => a,
        Err(e) => return checks.record("g is defined", Err(e), w),
    };
    let det = a.det().map(|d| d == linear_power(&x.t, &sign(k as i64), (n - k) as u32));
    checks.record("det g = (t + (-1)^k λ)^(n-k)", det, w);
    checks.record("g PR = sh g", pr(x).and_then(|y| g_matrix(&y)).map(|b| b == sh(&a)), w);
    checks.record("g S = fl g", schutzenberger(x).and_then(|y| g_matrix(&y)).map(|b| b == fl(&a)), w);
    let dual = (|| -> Result<bool> {
        let beta = linear_power(&x.t, &sign((k + n) as i64), (n - k - 1) as u32);
        Ok(g_matrix(&duality(x)?)?.scale(&beta) == inv(&a)?)
    })();
    checks.record("β g D = inv g", dual, w);
    let z = sign(k as i64 - 1).mul(&x.t);
    checks.record("rank g at λ = (-1)^(k-1) t is k", g_eval(x, &z).map(|m| m.rank() == k), w);
}

fn positivity(x: &P, checks: &mut Checks) {
    let (n, k) = (x.n(), x.k());
    let g = match g_matrix(x) {
        Ok(g) => g,
        Err(e) => return checks.record("g is defined", Err(e), || points_json(std::slice::from_ref(x))),
    };
    for r in 1..=n {
        for i in k_subsets(n, r) {
            for j in k_subsets(n, r) {
                if cyclic_interval_count(n, &i) > 2 && cyclic_interval_count(n, &j) > 2 {
                    continue;
                }
                let ok = minor_delta(&g, &i, &j).map(|d| {
                    let f = if r > k { d.div_exact(&linear_power(&x.t, &sign(k as i64), (r - k) as u32)) } else { Some(d) };
                    f.is_some_and(|f| is_r_nonnegative(&f, r as i64))
                });
                checks.record("Δ_{I,J}(g) has the sign pattern (-1)^((r-1)i)", ok, || {
                    json!({ "point": PointJson::from_point(x), "I": i, "J": j })
                });
            }
        }
    }
}

fn lindstrom(rect: &geomr::grassmann::RationalRect<Q>, checks: &mut Checks) {
    let n = rect.n;
    let w = || json!({ "n": n, "k": rect.k, "t": rect.t });
    let net = PlanarNetwork::gamma(rect);
    let m = match phi_matrix(rect) {
        Ok(m) => m,
        Err(e) => return checks.record("Φ is defined", Err(e), w),
    };
    checks.record("path matrix of the network = Φ", Ok(net.path_matrix() == m), w);
    let idx = |s: &[i64]| s.iter().map(|&v| (v - 1) as usize).collect::<Vec<_>>();
    for size in 1..=3.min(n) {
        for i in k_subsets(n, size) {
            for j in k_subsets(n, size) {
                let ok = net.lindstrom_minor(&i, &j).and_then(|d| m.minor(&idx(&i), &idx(&j)).map(|e| d == e));
                checks.record("disjoint path families count minors of Φ", ok, || {
                    json!({ "n": n, "k": rect.k, "I": i, "J": j })
                });
            }
        }
    }
}

fn serre(x: &P, c1: &Q, c2: &Q, checks: &mut Checks) {
    let n = x.n() as i64;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let d = (i - j).rem_euclid(n).min((j - i).rem_euclid(n));
            let ok = (|| -> Result<bool> {
                if d > 1 {
                    Ok(e_c(&e_c(x, j, c2)?, i, c1)?.same_point(&e_c(&e_c(x, i, c1)?, j, c2)?))
                } else {
                    let c12 = c1.mul(c2);
                    let lhs = e_c(&e_c(&e_c(x, i, c2)?, j, &c12)?, i, c1)?;
                    let rhs = e_c(&e_c(&e_c(x, j, c1)?, i, &c12)?, j, c2)?;
                    Ok(lhs.same_point(&rhs))
                }
            })();
            let name = if d > 1 { "e_i and e_j commute (distant)" } else { "e_i e_j^(c1 c2) e_i relation (adjacent)" };
            checks.record(name, ok, || json!({ "point": PointJson::from_point(x), "i": i, "j": j, "c1": c1, "c2": c2 }));
        }
    }
}

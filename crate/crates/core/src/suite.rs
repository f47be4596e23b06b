//! Named verification suites with pass/fail assertions and JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::category::{FiniteCategory, MonFunctor, Variance};
use crate::corrcat::{parse_tmodule, tilde_functor, CTPresentation, TModule, WindowCategory};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homalg::{
    evaluation_naturality, ext_dims_via_duality, mon_natural_transformations, prop34_check, tor_dims,
    ResolutionOptions,
};
use crate::lattice::{parse_lattice, semilattice_self_duality, FiniteLattice};
use crate::monoid::corpus::{inverse_corpus, non_regular_corpus};
use crate::monoid::{
    enumerate_hom_maps, find_isomorphism, group_completion, is_k_trivial_monoid, monoid_algebra_decomposition,
    CliffordData, FiniteCommMonoid, MonoidHom,
};
use crate::simplicial::{cech_resolution, degreewise_group_completion, hom_cosimplicial_check, moore_homology};
use crate::tensormon::{coend_mon, tensor_bounded, tensor_semilattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Clifford,
    Duality,
    CechExactness,
    Tensor,
    CoendComparison,
    CompletionHomology,
    KTrivialVanishing,
    TorVanishing,
    ExtVanishing,
    KTrivial,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::Clifford,
        SuiteName::Duality,
        SuiteName::CechExactness,
        SuiteName::Tensor,
        SuiteName::CoendComparison,
        SuiteName::CompletionHomology,
        SuiteName::KTrivialVanishing,
        SuiteName::TorVanishing,
        SuiteName::ExtVanishing,
        SuiteName::KTrivial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Clifford => "clifford",
            SuiteName::Duality => "duality4.2",
            SuiteName::CechExactness => "lemma3.5",
            SuiteName::Tensor => "tensor",
            SuiteName::CoendComparison => "prop3.4",
            SuiteName::CompletionHomology => "prop5.4",
            SuiteName::KTrivialVanishing => "prop5.5",
            SuiteName::TorVanishing => "tor4.5",
            SuiteName::ExtVanishing => "ext6.3",
            SuiteName::KTrivial => "ktrivial5.1",
        }
    }

    fn default_fields(self) -> Vec<FieldSpec> {
        use FieldSpec::*;
        match self {
            SuiteName::Clifford | SuiteName::CoendComparison => vec![Rationals, Prime(2)],
            SuiteName::Duality | SuiteName::CechExactness | SuiteName::TorVanishing => {
                vec![Prime(2), Prime(3), Rationals]
            }
            SuiteName::Tensor | SuiteName::ExtVanishing => vec![Prime(2)],
            SuiteName::CompletionHomology | SuiteName::KTrivialVanishing | SuiteName::KTrivial => {
                vec![Prime(2), Prime(3), Prime(5), Rationals]
            }
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = SuiteName::ALL.iter().map(|n| n.name()).collect();
                Error::Config(format!("unknown suite {s:?}; expected one of {}", known.join(", ")))
            })
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    /// A builtin name (`chain:n`, `boolean:k`, `diamond`, `pentagon`) or a
    /// lattice file.
    pub lattice: String,
    /// `self` or T-module files; the first is `U`, the second `V`.
    pub tmodules: Vec<String>,
    /// Empty means the suite's defaults.
    pub fields: Vec<FieldSpec>,
    /// Largest set size in the window `{0..window}`.
    pub window: usize,
    /// Highest homological degree reported.
    pub depth: usize,
    pub seed: u64,
    pub cap_enum: u128,
    pub cap_matrix: usize,
    pub timing: bool,
}

impl SuiteConfig {
    pub fn new(suite: SuiteName) -> Self {
        SuiteConfig {
            suite,
            lattice: "boolean:1".into(),
            tmodules: Vec::new(),
            fields: Vec::new(),
            window: 3,
            depth: 2,
            seed: 0,
            cap_enum: 1 << 24,
            cap_matrix: 1 << 17,
            timing: true,
        }
    }

    pub fn fields(&self) -> Vec<FieldSpec> {
        if self.fields.is_empty() {
            self.suite.default_fields()
        } else {
            self.fields.clone()
        }
    }

    pub fn window_sizes(&self) -> Vec<usize> {
        (0..=self.window).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.cap_enum == 0 || self.cap_matrix == 0 {
            return Err(Error::Config("caps must be positive".into()));
        }
        if self.tmodules.len() > 2 {
            return Err(Error::Config("at most two T-modules (U and V)".into()));
        }
        Ok(())
    }

    /// The configured lattice and its display name.
    pub fn resolve_lattice(&self) -> Result<(String, FiniteLattice)> {
        if let Ok(l) = FiniteLattice::builtin(&self.lattice) {
            return Ok((self.lattice.clone(), l));
        }
        let path = Path::new(&self.lattice);
        if !path.is_file() {
            return Err(Error::Config(format!("{:?} is neither a builtin lattice nor a file", self.lattice)));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", self.lattice)))?;
        let l = parse_lattice(&text).map_err(|e| Error::Config(format!("{}: {e}", self.lattice)))?;
        Ok((self.lattice.clone(), l))
    }

    /// `U` and `V`, defaulting to `T` acting on itself.
    pub fn resolve_modules(&self, t: &FiniteLattice) -> Result<[(String, TModule); 2]> {
        let load = |spec: &str| -> Result<(String, TModule)> {
            if spec == "self" {
                return Ok(("self".into(), TModule::self_module(t)));
            }
            let text = std::fs::read_to_string(spec).map_err(|e| Error::Config(format!("{spec}: {e}")))?;
            let u = parse_tmodule(&text, t).map_err(|e| Error::Config(format!("{spec}: {e}")))?;
            Ok((spec.to_string(), u))
        };
        let u = load(self.tmodules.first().map(String::as_str).unwrap_or("self"))?;
        let v = match self.tmodules.get(1) {
            Some(spec) => load(spec)?,
            None => u.clone(),
        };
        Ok([u, v])
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Assertion {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Assertion { name: name.into(), passed, detail: detail.into() }
    }

    /// Errors become failed assertions carrying the message.
    fn from_result(name: impl Into<String>, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Assertion::new(name, passed, detail),
            Err(e) => Assertion::new(name, false, format!("error: {e}")),
        }
    }
}

/// One homological computation, in the published report layout.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Computation {
    pub lattice: String,
    pub window: Vec<usize>,
    pub field: String,
    #[serde(rename = "functor_A")]
    pub functor_a: String,
    #[serde(rename = "functor_B")]
    pub functor_b: String,
    pub resolution: BTreeMap<String, BTreeMap<String, usize>>,
    pub tor: Vec<usize>,
    pub ext: Vec<usize>,
    pub certified: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
    pub computations: Vec<Computation>,
}

impl SuiteReport {
    /// 0 when every assertion holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let width = self.assertions.iter().map(|a| a.name.len()).max().unwrap_or(0);
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for a in &self.assertions {
            let mark = if a.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:width$}  {}\n", a.name, a.detail));
        }
        let failed = self.assertions.iter().filter(|a| !a.passed).count();
        out.push_str(&format!("{} assertions, {failed} failed\n", self.assertions.len()));
        out
    }
}

/// Runs a suite. Only configuration problems are returned as errors;
/// computational failures are recorded as failed assertions.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let fields = cfg.fields();
    let mut computations = Vec::new();
    let assertions = match cfg.suite {
        SuiteName::Clifford => clifford(&fields),
        SuiteName::Duality => duality(cfg, &fields)?,
        SuiteName::CechExactness => cech_exactness(cfg, &fields),
        SuiteName::Tensor => tensor(cfg),
        SuiteName::CoendComparison => coend_comparison(cfg, &fields),
        SuiteName::CompletionHomology => completion_homology(cfg, &fields, false),
        SuiteName::KTrivialVanishing => completion_homology(cfg, &fields, true),
        SuiteName::TorVanishing => tor_vanishing(cfg, &fields, &mut computations)?,
        SuiteName::ExtVanishing => ext_vanishing(cfg, &fields, &mut computations)?,
        SuiteName::KTrivial => k_trivial(cfg, &fields)?,
    };
    Ok(SuiteReport {
        suite: cfg.suite.name().to_string(),
        seed: cfg.seed,
        passed: assertions.iter().all(|a| a.passed),
        assertions,
        computations,
    })
}

fn clifford(fields: &[FieldSpec]) -> Vec<Assertion> {
    let corpus = inverse_corpus();
    let cases: Vec<(&String, &FiniteCommMonoid, FieldSpec)> =
        corpus.iter().flat_map(|(n, m)| fields.iter().map(move |&f| (n, m, f))).collect();
    let mut out: Vec<Assertion> = cases
        .par_iter()
        .map(|&(name, m, field)| {
            let r = crate::with_field!(field, |k| {
                monoid_algebra_decomposition(m, k).and_then(|d| {
                    d.certify(m)?;
                    Ok((true, format!("rank {} of {}, {} idempotents", d.rank(), m.order(), d.data.idempotents.len())))
                })
            });
            Assertion::from_result(format!("decomposition {name} over {field}"), r)
        })
        .collect();
    for (name, m) in non_regular_corpus() {
        let r = CliffordData::of_inverse(&m);
        out.push(Assertion::new(
            format!("{name} is rejected as not inverse"),
            r.is_err(),
            r.err().map(|e| e.to_string()).unwrap_or_default(),
        ));
    }
    out
}

fn lattice_corpus() -> Vec<(String, FiniteLattice)> {
    let mut out: Vec<(String, FiniteLattice)> = (1..=6).map(|n| (format!("chain:{n}"), FiniteLattice::chain(n))).collect();
    out.extend((1..=3).map(|k| (format!("boolean:{k}"), FiniteLattice::boolean(k))));
    let (c2, c3) = (FiniteLattice::chain(2), FiniteLattice::chain(3));
    out.push(("chain:2 x chain:3".into(), FiniteLattice::product(&c2, &c3)));
    out.push(("chain:3 x chain:3".into(), FiniteLattice::product(&c3, &c3)));
    out.push(("boolean:1 x chain:4".into(), FiniteLattice::product(&FiniteLattice::boolean(1), &FiniteLattice::chain(4))));
    out
}

fn window_category(t: &FiniteLattice, sizes: Vec<usize>, cap: usize) -> Result<WindowCategory> {
    CTPresentation::new(t.clone(), sizes)?.category(cap)
}

fn duality(cfg: &SuiteConfig, fields: &[FieldSpec]) -> Result<Vec<Assertion>> {
    let corpus = lattice_corpus();
    let mut out: Vec<Assertion> = corpus
        .par_iter()
        .flat_map_iter(|(name, l)| {
            let sd = semilattice_self_duality(l, cfg.cap_enum);
            let mut v = Vec::new();
            match sd {
                Ok(sd) => {
                    v.push(Assertion::new(
                        format!("{name}: f ↦ max f⁻¹(1) is a bijection onto L"),
                        sd.is_bijective(l),
                        format!("{} homomorphisms", sd.dual.homs.len()),
                    ));
                    v.push(Assertion::new(format!("{name}: bijection is a monoid isomorphism"), sd.is_meet_isomorphism(l), ""));
                    for &f in fields {
                        let rank = crate::with_field!(f, |k| sd.evaluation_matrix(k).rank());
                        v.push(Assertion::new(
                            format!("{name}: evaluation matrix invertible over {f}"),
                            rank == l.order(),
                            format!("rank {rank} of {}", l.order()),
                        ));
                    }
                }
                Err(e) => v.push(Assertion::new(format!("{name}: duality"), false, format!("error: {e}"))),
            }
            v
        })
        .collect();
    let (lname, t) = cfg.resolve_lattice()?;
    let sizes: Vec<usize> = (0..=cfg.window.min(2)).collect();
    let naturality = (|| -> Result<Vec<Assertion>> {
        let w = window_category(&t, sizes.clone(), cfg.cap_matrix)?;
        let tt = tilde_functor(&TModule::self_module(&t), &w, cfg.cap_matrix)?;
        let d = tt.dual(cfg.cap_enum)?;
        let mut v = Vec::new();
        for &f in fields {
            let ok = evaluation_naturality(&tt, &d, f, cfg.cap_enum)?;
            v.push(Assertion::new(
                format!("naturality of k[T~] ≅ k^(T~#) on {lname}, sizes {sizes:?}, over {f}"),
                ok,
                format!("{} morphisms", w.category.morphism_count()),
            ));
        }
        let one = w.object(1).expect("window contains [1]");
        let iso = find_isomorphism(d.value(one), &t.meet_monoid()).is_some();
        v.push(Assertion::new(format!("(T~)#([1]) ≅ T for {lname}"), iso, ""));
        Ok(v)
    })();
    match naturality {
        Ok(v) => out.extend(v),
        Err(e) => out.push(Assertion::new("naturality", false, format!("error: {e}"))),
    }
    Ok(out)
}

/// Surjections between corpus monoids of order at most 6 whose Čech level
/// `top` stays below `cap` elements, at most one per pair of monoids.
pub fn small_surjections(cap_enum: u128, top: usize, cap: usize, limit: usize) -> Vec<(String, MonoidHom)> {
    let mut monoids: Vec<(String, FiniteCommMonoid)> =
        inverse_corpus().into_iter().chain(non_regular_corpus()).filter(|(_, m)| m.order() <= 6).collect();
    monoids.sort_by_key(|(_, m)| m.order());
    let mut out = Vec::new();
    for (mn, m) in &monoids {
        for (an, a) in &monoids {
            if a.order() >= m.order() || out.len() >= limit {
                continue;
            }
            let Ok(maps) = enumerate_hom_maps(m, a, cap_enum) else {
                continue;
            };
            for map in maps {
                let mut fibres = vec![0usize; a.order()];
                for &y in &map {
                    fibres[y] += 1;
                }
                let size: usize = fibres.iter().map(|&f| f.pow(top as u32 + 1)).sum();
                if fibres.contains(&0) || size > cap {
                    continue;
                }
                let pi = MonoidHom::new(Arc::new(m.clone()), Arc::new(a.clone()), map).expect("enumerated");
                out.push((format!("{mn} -> {an}"), pi));
                break;
            }
        }
    }
    out
}

const CECH_TOP: usize = 4;

fn cech_exactness(cfg: &SuiteConfig, fields: &[FieldSpec]) -> Vec<Assertion> {
    let surjections = small_surjections(cfg.cap_enum, CECH_TOP, 2048.min(cfg.cap_matrix), 12);
    let mut out = vec![Assertion::new(
        "at least 10 surjections",
        surjections.len() >= 10,
        format!("{} surjections", surjections.len()),
    )];
    let homology: Vec<Assertion> = surjections
        .par_iter()
        .flat_map_iter(|(name, pi)| {
            let cech = cech_resolution(pi, CECH_TOP, cfg.cap_matrix);
            fields
                .iter()
                .map(|&f| {
                    let r = cech.as_ref().map_err(Clone::clone).and_then(|c| moore_homology(&c.object, f, CECH_TOP - 1));
                    let expected: Vec<usize> = std::iter::once(pi.target().order()).chain([0; CECH_TOP - 1]).collect();
                    Assertion::from_result(
                        format!("{name}: H_0 = |A|, H_1..3 = 0 over {f}"),
                        r.map(|h| (h == expected, format!("{h:?}"))),
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.extend(homology);
    let targets = [
        ("chain2", FiniteCommMonoid::chain(2)),
        ("Z2", FiniteCommMonoid::cyclic_group(2)),
        ("Z3+inf", FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3))),
    ];
    let cases: Vec<_> = surjections
        .iter()
        .take(4)
        .flat_map(|s| targets.iter().flat_map(move |b| fields.iter().map(move |&f| (s, b, f))))
        .collect();
    let dual: Vec<Assertion> = cases
        .par_iter()
        .map(|((name, pi), (bn, b), f)| {
            let r = hom_cosimplicial_check(pi, b, *f, 3, cfg.cap_enum, cfg.cap_matrix);
            Assertion::from_result(
                format!("{name}: Hom(-, {bn}) sequence exact over {f}"),
                r.map(|r| (r.holds(), format!("homs {:?}, augmentation {}", r.hom_counts, r.augmentation_count))),
            )
        })
        .collect();
    out.extend(dual);
    out
}

fn tensor(cfg: &SuiteConfig) -> Vec<Assertion> {
    let mut out = Vec::new();
    let bound = cfg.cap_matrix;
    for m in 2..=8usize {
        for n in 2..=8usize {
            let g = num_integer::gcd(m, n);
            let r = tensor_bounded(&FiniteCommMonoid::cyclic_group(m), &FiniteCommMonoid::cyclic_group(n), bound)
                .map(|t| {
                    let ok = find_isomorphism(&t.monoid, &FiniteCommMonoid::cyclic_group(g)).is_some();
                    (ok, format!("order {}", t.monoid.order()))
                });
            out.push(Assertion::from_result(format!("Z{m} ⊗ Z{n} ≅ Z{g}"), r));
        }
    }
    let semilattices: Vec<(String, FiniteCommMonoid)> = inverse_corpus()
        .into_iter()
        .filter(|(_, m)| m.is_semilattice())
        .collect();
    let two = FiniteCommMonoid::chain(2);
    for (name, m) in &semilattices {
        let r = tensor_semilattice(&two, m, cfg.cap_matrix)
            .map(|t| (find_isomorphism(&t.monoid, m).is_some(), format!("order {}", t.monoid.order())));
        out.push(Assertion::from_result(format!("chain2 ⊗ {name} ≅ {name}"), r));
        let r = tensor_semilattice(m, &FiniteCommMonoid::trivial(), cfg.cap_matrix)
            .map(|t| (t.monoid.is_trivial(), String::new()));
        out.push(Assertion::from_result(format!("{name} ⊗ 0 = 0"), r));
    }
    for (an, a) in &semilattices {
        for (bn, b) in &semilattices {
            if a.order() * b.order() > 16 {
                continue;
            }
            let r = tensor_semilattice(a, b, cfg.cap_matrix).and_then(|ab| {
                let ba = tensor_semilattice(b, a, cfg.cap_matrix)?;
                Ok((find_isomorphism(&ab.monoid, &ba.monoid).is_some(), format!("order {}", ab.monoid.order())))
            });
            out.push(Assertion::from_result(format!("{an} ⊗ {bn} ≅ {bn} ⊗ {an}"), r));
        }
    }
    let r = tensor_bounded(&FiniteCommMonoid::cyclic_group(6), &FiniteCommMonoid::cyclic_group(6), 2);
    out.push(Assertion::new(
        "bounded tensor reports the exceeded bound",
        matches!(r, Err(Error::Unbounded(2))),
        format!("{:?}", r.err()),
    ));
    for t in [FiniteLattice::chain(2), FiniteLattice::chain(3), FiniteLattice::boolean(2)] {
        let r = (|| -> Result<(bool, String)> {
            let c = Arc::new(FiniteCategory::one_object("*", &t.meet_monoid(), Some(&t.join_monoid()))?);
            let h = MonFunctor::representable(c.clone(), 0, Variance::Covariant)?;
            let a = h.dual(cfg.cap_enum)?;
            let coend = coend_mon(&c, &a, &h, cfg.cap_matrix)?;
            Ok((find_isomorphism(&coend.monoid, a.value(0)).is_some(), format!("order {}", coend.monoid.order())))
        })();
        out.push(Assertion::from_result(format!("A ⊗ C(*, -) ≅ A(*) over a {}-element lattice", t.order()), r));
    }
    out
}

type FunctorPair = (String, MonFunctor, MonFunctor);

fn coend_cases(cfg: &SuiteConfig) -> Result<Vec<FunctorPair>> {
    let mut cases = Vec::new();
    for (tn, t) in [
        ("chain:2", FiniteLattice::chain(2)),
        ("chain:3", FiniteLattice::chain(3)),
        ("boolean:2", FiniteLattice::boolean(2)),
        ("chain:4", FiniteLattice::chain(4)),
    ] {
        let c = Arc::new(FiniteCategory::one_object("*", &t.meet_monoid(), Some(&t.join_monoid()))?);
        let b = MonFunctor::representable(c.clone(), 0, Variance::Covariant)?;
        let a = MonFunctor::representable(c.clone(), 0, Variance::Contravariant)?;
        cases.push((format!("({tn}, ∧): C(-,*) and C(*,-)"), a.clone(), b.clone()));
        cases.push((format!("({tn}, ∧): C(*,-)# and C(*,-)"), b.dual(cfg.cap_enum)?, b.clone()));
        cases.push((format!("({tn}, ∧): trivial and C(*,-)"), MonFunctor::trivial(c, Variance::Contravariant), b));
    }
    for (tn, t) in [("chain:2", FiniteLattice::chain(2)), ("chain:3", FiniteLattice::chain(3))] {
        for sizes in [vec![0, 1], vec![1, 2]] {
            let w = window_category(&t, sizes.clone(), cfg.cap_matrix)?;
            let tt = tilde_functor(&TModule::self_module(&t), &w, cfg.cap_matrix)?;
            cases.push((format!("C_T over {tn}, sizes {sizes:?}: T~# and T~"), tt.dual(cfg.cap_enum)?, tt.clone()));
            let h = MonFunctor::representable(w.category.clone(), 0, Variance::Contravariant)?;
            cases.push((format!("C_T over {tn}, sizes {sizes:?}: C(-,[{}]) and T~", sizes[0]), h, tt));
        }
    }
    Ok(cases)
}

fn coend_comparison(cfg: &SuiteConfig, fields: &[FieldSpec]) -> Vec<Assertion> {
    let cases = match coend_cases(cfg) {
        Ok(c) => c,
        Err(e) => return vec![Assertion::new("building categories", false, format!("error: {e}"))],
    };
    let jobs: Vec<(&FunctorPair, FieldSpec)> = cases.iter().flat_map(|c| fields.iter().map(move |&f| (c, f))).collect();
    jobs.par_iter()
        .map(|((name, a, b), f)| {
            let r = prop34_check(a, b, *f, cfg.cap_matrix).map(|r| {
                (r.holds(), format!("linear {} / monoid {}", r.linear_dim, r.monoid_dim))
            });
            Assertion::from_result(format!("{name} over {f}"), r)
        })
        .collect()
}

/// Čech resolutions `M -> 1` used for the group-completion comparisons.
pub fn completion_instances() -> Vec<(String, FiniteCommMonoid, FieldSpec)> {
    use FiniteCommMonoid as M;
    vec![
        ("Z2+inf".into(), M::adjoin_absorbing(&M::cyclic_group(2)), FieldSpec::Prime(5)),
        ("Z3+inf".into(), M::adjoin_absorbing(&M::cyclic_group(3)), FieldSpec::Prime(2)),
        ("chain2".into(), M::chain(2), FieldSpec::Rationals),
        ("Z2+inf".into(), M::adjoin_absorbing(&M::cyclic_group(2)), FieldSpec::Rationals),
    ]
}

fn completion_homology(cfg: &SuiteConfig, fields: &[FieldSpec], vanishing: bool) -> Vec<Assertion> {
    let mut cases = completion_instances();
    if !cfg.fields.is_empty() {
        cases.retain(|c| fields.contains(&c.2));
    }
    cases
        .par_iter()
        .map(|(name, m, f)| {
            let r = (|| -> Result<(bool, String)> {
                let n = m.order();
                let pi = MonoidHom::new(Arc::new(m.clone()), Arc::new(FiniteCommMonoid::trivial()), vec![0; n])?;
                let c = cech_resolution(&pi, CECH_TOP, cfg.cap_matrix)?;
                let r = degreewise_group_completion(&c.object, *f)?;
                let (h, hp) = (&r.homology[1..], &r.completed_homology[1..]);
                let zero = h.iter().all(|&d| d == 0);
                let ok = if vanishing { r.connected && r.units_vanish && zero } else { h == hp && zero };
                Ok((ok, format!("H = {h:?}, H+ = {hp:?}, connected {}, units vanish {}", r.connected, r.units_vanish)))
            })();
            let what = if vanishing { "H_n = 0 for n = 1..3" } else { "H_n(X) = H_n(X+) = 0 for n = 1..3" };
            Assertion::from_result(format!("Čech({name} -> 1) over {f}: {what}"), r)
        })
        .collect()
}

fn elapsed(cfg: &SuiteConfig, start: Instant) -> u64 {
    if cfg.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    }
}

fn resolution_map(counts: &[BTreeMap<String, usize>]) -> BTreeMap<String, BTreeMap<String, usize>> {
    counts.iter().enumerate().map(|(d, c)| (d.to_string(), c.clone())).collect()
}

fn tor_vanishing(cfg: &SuiteConfig, fields: &[FieldSpec], computations: &mut Vec<Computation>) -> Result<Vec<Assertion>> {
    let (lname, t) = cfg.resolve_lattice()?;
    let [(uname, u), _] = cfg.resolve_modules(&t)?;
    let sizes = cfg.window_sizes();
    let setup = (|| -> Result<(WindowCategory, MonFunctor, MonFunctor)> {
        let w = window_category(&t, sizes.clone(), cfg.cap_matrix)?;
        let b = tilde_functor(&u, &w, cfg.cap_matrix)?;
        let a = b.dual(cfg.cap_enum)?;
        Ok((w, a, b))
    })();
    let (w, a, b) = match setup {
        Ok(s) => s,
        Err(e) => return Ok(vec![Assertion::new("building the window", false, format!("error: {e}"))]),
    };
    let opts = ResolutionOptions { seed: cfg.seed, ..Default::default() };
    let coend = coend_mon(&w.category, &a, &b, cfg.cap_matrix);
    let mut out = Vec::new();
    let results: Vec<(FieldSpec, Result<crate::homalg::TorReport>, u64)> = fields
        .par_iter()
        .map(|&f| {
            let start = Instant::now();
            let r = tor_dims(&a, &b, f, cfg.depth, opts);
            (f, r, elapsed(cfg, start))
        })
        .collect();
    for (f, r, ms) in results {
        match r {
            Ok(r) => {
                out.push(Assertion::new(format!("resolution certified over {f}"), r.certified, ""));
                for n in 1..=cfg.depth {
                    out.push(Assertion::new(
                        format!("Tor_{n}(k[T~#], k[T~]) = 0 over {f}"),
                        r.dims[n] == 0,
                        format!("dim {}", r.dims[n]),
                    ));
                }
                let c = coend.as_ref().map(|c| c.monoid.order());
                out.push(Assertion::new(
                    format!("Tor_0 = dim k[T~# ⊗ T~] over {f}"),
                    c.as_ref().is_ok_and(|&n| n == r.dims[0]),
                    format!("Tor_0 {} / coend {:?}", r.dims[0], c),
                ));
                computations.push(Computation {
                    lattice: lname.clone(),
                    window: sizes.clone(),
                    field: f.to_string(),
                    functor_a: format!("({uname})~#"),
                    functor_b: format!("({uname})~"),
                    resolution: resolution_map(&r.summand_counts),
                    tor: r.dims,
                    ext: Vec::new(),
                    certified: r.certified,
                    elapsed_ms: ms,
                });
            }
            Err(e) => out.push(Assertion::new(format!("Tor over {f}"), false, format!("error: {e}"))),
        }
    }
    Ok(out)
}

fn ext_vanishing(cfg: &SuiteConfig, fields: &[FieldSpec], computations: &mut Vec<Computation>) -> Result<Vec<Assertion>> {
    let (lname, t) = cfg.resolve_lattice()?;
    let [(uname, u), (vname, v)] = cfg.resolve_modules(&t)?;
    let sizes = cfg.window_sizes();
    let setup = (|| -> Result<(MonFunctor, MonFunctor)> {
        let w = window_category(&t, sizes.clone(), cfg.cap_matrix)?;
        Ok((tilde_functor(&u, &w, cfg.cap_matrix)?, tilde_functor(&v, &w, cfg.cap_matrix)?))
    })();
    let (fu, fv) = match setup {
        Ok(s) => s,
        Err(e) => return Ok(vec![Assertion::new("building the window", false, format!("error: {e}"))]),
    };
    let opts = ResolutionOptions { seed: cfg.seed, ..Default::default() };
    let homs = mon_natural_transformations(&fu, &fv, cfg.cap_enum).map(|h| h.len());
    let mut out = Vec::new();
    let results: Vec<(FieldSpec, Result<crate::homalg::ExtReport>, u64)> = fields
        .par_iter()
        .map(|&f| {
            let start = Instant::now();
            let r = ext_dims_via_duality(&fu, &fv, f, cfg.depth, cfg.cap_enum, opts);
            (f, r, elapsed(cfg, start))
        })
        .collect();
    for (f, r, ms) in results {
        match r {
            Ok(r) => {
                out.push(Assertion::new(format!("resolution certified over {f}"), r.certified, ""));
                for n in 1..=cfg.depth {
                    out.push(Assertion::new(
                        format!("Ext^{n}(F_U, F_V) = 0 over {f}"),
                        r.dims[n] == 0,
                        format!("dim {}", r.dims[n]),
                    ));
                }
                out.push(Assertion::new(
                    format!("Ext^0 = dim of natural transformations over {f}"),
                    r.degree_zero_agrees(),
                    format!("Ext^0 {} / brute force {}", r.dims[0], r.natural_transformations),
                ));
                out.push(Assertion::new(
                    format!("Ext^0 = |Hom(U~, V~)| over {f}"),
                    homs.as_ref().is_ok_and(|&h| h == r.dims[0]),
                    format!("{:?}", homs),
                ));
                computations.push(Computation {
                    lattice: lname.clone(),
                    window: sizes.clone(),
                    field: f.to_string(),
                    functor_a: format!("F_{uname}"),
                    functor_b: format!("F_{vname}"),
                    resolution: resolution_map(&r.summand_counts),
                    tor: Vec::new(),
                    ext: r.dims,
                    certified: r.certified,
                    elapsed_ms: ms,
                });
            }
            Err(e) => out.push(Assertion::new(format!("Ext over {f}"), false, format!("error: {e}"))),
        }
    }
    Ok(out)
}

fn k_trivial(cfg: &SuiteConfig, fields: &[FieldSpec]) -> Result<Vec<Assertion>> {
    let h = FiniteCommMonoid::adjoin_absorbing(&FiniteCommMonoid::cyclic_group(3));
    let mut out = Vec::new();
    let gc = group_completion(&h);
    out.push(Assertion::new(
        "(Z3+inf)^+ = 0",
        gc.group.is_trivial(),
        format!("invariants {:?}", gc.invariants.invariant_factors()),
    ));
    let units = CliffordData::new(&h).map(|d| {
        d.groups.iter().find(|g| g.idempotent == h.zero()).map(|g| g.group.order()).unwrap_or(0)
    });
    out.push(Assertion::new(
        "unit group of Z3+inf at 0 has order 3",
        units.as_ref().is_ok_and(|&n| n == 3),
        format!("{units:?}"),
    ));
    for &f in fields {
        let expected = f.characteristic() != 3;
        out.push(Assertion::new(
            format!("Z3+inf is {}k-trivial over {f}", if expected { "" } else { "not " }),
            is_k_trivial_monoid(&h, f) == expected,
            "",
        ));
    }
    let (lname, t) = cfg.resolve_lattice()?;
    let sizes: Vec<usize> = (0..=cfg.window.min(2)).collect();
    match window_category(&t, sizes.clone(), cfg.cap_matrix) {
        Ok(w) => {
            let c = &w.category;
            let n = c.object_count();
            for &f in fields {
                let ok = (0..n).all(|x| (0..n).all(|y| c.hom_monoid(x, y).is_some_and(|m| is_k_trivial_monoid(m, f))));
                out.push(Assertion::new(format!("C_T over {lname}, sizes {sizes:?}, is k-trivial over {f}"), ok, ""));
            }
        }
        Err(e) => out.push(Assertion::new("C_T window", false, format!("error: {e}"))),
    }
    Ok(out)
}

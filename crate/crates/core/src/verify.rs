//! Checkers for the minimal-element theorems, the incomparability lemma and
//! the branch-vertex conjecture, run against exhaustive catalogs.

use serde::Serialize;

use crate::canon::canonical_form;
use crate::enumerate::{
    enumerate_family_guarded, FamilyCatalog, Member, Restriction, MAX_ENUM_ORDER,
};
use crate::error::{Error, Result};
use crate::families::{build_u, FamilySpec};
use crate::graph::{classify, Graph};
use crate::poset::{compare, minimal_elements, strict_indices, PosetRel};
use crate::spectra::{laplacian_coefficients, lel, CoeffVector};

/// Tolerance for floating-point energy comparisons.
pub const LEL_TOL: f64 = 1e-8;

/// `floor((n - g - g*l + l) / (l + 1))`, possibly negative.
pub fn p_formula(n: usize, l: usize, g: usize) -> i64 {
    let (n, l, g) = (n as i64, l as i64, g as i64);
    (n - g - g * l + l).div_euclid(l + 1)
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct MemberSummary {
    pub form: String,
    pub edges: Vec<(usize, usize)>,
    pub coeffs: Vec<String>,
    pub lel: f64,
}

impl MemberSummary {
    pub fn of(graph: &Graph, form: &[u8], coeffs: &CoeffVector, energy: f64) -> Self {
        MemberSummary {
            form: hex(form),
            edges: graph.edges().to_vec(),
            coeffs: coeffs.to_decimal_strings(),
            lel: energy,
        }
    }

    fn of_member(m: &Member) -> Self {
        MemberSummary::of(&m.graph, &m.form, &m.coeffs, lel(&m.graph))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictedMember {
    pub p: usize,
    pub form: String,
}

/// `(p, canonical form, graph)` triples.
pub type Predicted = Vec<(usize, Vec<u8>, Graph)>;

/// The set `{U^0, ..., U^p}`, deduplicated by canonical form.
///
/// A negative `p` formula is clamped to `0`, since a nonempty family always
/// has a minimal element. `clamped` reports whether that happened.
pub fn predicted_set(n: usize, l: usize, g: usize) -> Result<(Predicted, bool)> {
    let raw = p_formula(n, l, g);
    let top = raw.max(0) as usize;
    let mut out: Predicted = Vec::new();
    for p in 0..=top {
        let graph = build_u(FamilySpec::new(n, l, g, p))?;
        let form = canonical_form(&graph);
        if !out.iter().any(|(_, f, _)| *f == form) {
            out.push((p, form, graph));
        }
    }
    Ok((out, raw < 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Assertion {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Assertion {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LelPairs {
    pub checked: usize,
    pub violations: Vec<(String, String)>,
}

/// Energies of members, in catalog order.
pub fn member_energies(catalog: &FamilyCatalog) -> Vec<f64> {
    catalog.members.iter().map(|m| lel(&m.graph)).collect()
}

/// Every strictly comparable pair must have ordered energies.
pub fn lel_monotone_pairs(catalog: &FamilyCatalog, energies: &[f64]) -> LelPairs {
    let ms = &catalog.members;
    let mut checked = 0;
    let mut violations = Vec::new();
    for i in 0..ms.len() {
        for j in 0..ms.len() {
            if i != j && compare(&ms[i].coeffs, &ms[j].coeffs) == Ok(PosetRel::LessStrict) {
                checked += 1;
                if energies[i] >= energies[j] + LEL_TOL {
                    violations.push((hex(&ms[i].form), hex(&ms[j].form)));
                }
            }
        }
    }
    LelPairs {
        checked,
        violations,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceCheck {
    pub checked: usize,
    /// Members that `U^0` does not strictly precede.
    pub violations: Vec<MemberSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub n: usize,
    pub l: usize,
    pub g: usize,
    pub restriction: Restriction,
    pub family_size: usize,
    pub p_formula: i64,
    /// Formula was negative; the prediction used `p = 0`.
    pub clamped: bool,
    pub predicted: Vec<PredictedMember>,
    pub observed_minimal: Vec<MemberSummary>,
    /// Set equality of canonical forms (not asserted for the two-attachment
    /// family, whose prediction is dominance by `U^0`).
    pub minimal_matches: Option<bool>,
    pub dominance: Option<DominanceCheck>,
    pub family_lel_min: f64,
    pub predicted_lel_min: f64,
    pub lel_pairs: LelPairs,
    pub assertions: Vec<Assertion>,
    pub notes: Vec<String>,
    pub pass: bool,
}

/// Enumerates the restricted family and checks it against the predicted
/// minimal set (or, for two attachments, against `U^0`).
pub fn verify_minimal_family(
    n: usize,
    l: usize,
    g: usize,
    restriction: Restriction,
) -> Result<FamilyReport> {
    verify_minimal_family_guarded(n, l, g, restriction, MAX_ENUM_ORDER)
}

pub fn verify_minimal_family_guarded(
    n: usize,
    l: usize,
    g: usize,
    restriction: Restriction,
    limit: usize,
) -> Result<FamilyReport> {
    let catalog = enumerate_family_guarded(n, Some(l), Some(g), restriction, limit)?;
    verify_catalog(&catalog, n, l, g, restriction)
}

/// Same as [`verify_minimal_family`] over an already built catalog.
pub fn verify_catalog(
    catalog: &FamilyCatalog,
    n: usize,
    l: usize,
    g: usize,
    restriction: Restriction,
) -> Result<FamilyReport> {
    if catalog.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let raw = p_formula(n, l, g);
    let (predicted, clamped) = predicted_set(n, l, g)?;
    let energies = member_energies(catalog);
    let family_lel_min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let predicted_energies: Vec<f64> = predicted.iter().map(|(_, _, gr)| lel(gr)).collect();
    let predicted_lel_min = predicted_energies
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    let lel_pairs = lel_monotone_pairs(catalog, &energies);

    let mut assertions = Vec::new();
    let mut notes = Vec::new();
    if clamped {
        notes.push(format!(
            "p formula gives {raw} < 0, outside the theorem's range; compared against {{U^0}}"
        ));
    }

    let minimal = minimal_elements(catalog);
    let observed_minimal: Vec<MemberSummary> = minimal
        .members
        .iter()
        .map(MemberSummary::of_member)
        .collect();

    let (minimal_matches, dominance) = if restriction == Restriction::TwoAttachments {
        let u0 = &predicted[0].2;
        let c0 = laplacian_coefficients(u0);
        let violations: Vec<MemberSummary> = catalog
            .members
            .iter()
            .filter(|m| compare(&c0, &m.coeffs) != Ok(PosetRel::LessStrict))
            .map(MemberSummary::of_member)
            .collect();
        assertions.push(Assertion::new(
            "u0_strictly_below_every_member",
            violations.is_empty(),
            format!("{} members, {} violations", catalog.len(), violations.len()),
        ));
        let lel0 = predicted_energies[0];
        let below = energies.iter().all(|&e| lel0 < e + LEL_TOL);
        assertions.push(Assertion::new(
            "lel_u0_below_every_member",
            below,
            format!("LEL(U^0) = {lel0:.10}, family min = {family_lel_min:.10}"),
        ));
        (
            None,
            Some(DominanceCheck {
                checked: catalog.len(),
                violations,
            }),
        )
    } else {
        let mut observed: Vec<&[u8]> = minimal.members.iter().map(|m| m.form.as_slice()).collect();
        let mut expected: Vec<&[u8]> = predicted.iter().map(|(_, f, _)| f.as_slice()).collect();
        observed.sort();
        expected.sort();
        let matches = observed == expected;
        assertions.push(Assertion::new(
            "minimal_set_equals_prediction",
            matches,
            format!(
                "observed {} minimal, predicted {}",
                observed.len(),
                expected.len()
            ),
        ));
        assertions.push(Assertion::new(
            "family_lel_min_in_prediction",
            predicted_lel_min <= family_lel_min + LEL_TOL,
            format!("family min {family_lel_min:.10}, predicted min {predicted_lel_min:.10}"),
        ));
        (Some(matches), None)
    };
    assertions.push(Assertion::new(
        "lel_monotone_on_strict_pairs",
        lel_pairs.violations.is_empty(),
        format!("{} strict pairs", lel_pairs.checked),
    ));

    let pass = assertions.iter().all(|a| a.pass);
    Ok(FamilyReport {
        n,
        l,
        g,
        restriction,
        family_size: catalog.len(),
        p_formula: raw,
        clamped,
        predicted: predicted
            .iter()
            .map(|(p, f, _)| PredictedMember {
                p: *p,
                form: hex(f),
            })
            .collect(),
        observed_minimal,
        minimal_matches,
        dominance,
        family_lel_min,
        predicted_lel_min,
        lel_pairs,
        assertions,
        notes,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub index: usize,
    /// Value for the larger tail parameter.
    pub high: String,
    /// Value for the smaller tail parameter.
    pub low: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub l: usize,
    pub g: usize,
    pub p: usize,
    pub q: usize,
    pub coeffs_p: Vec<String>,
    pub coeffs_q: Vec<String>,
    pub verdict: PosetRel,
    /// `c_{n-2}` of the larger tail is strictly smaller.
    pub tail_witness: Option<Witness>,
    /// Inclusive index band where the larger tail should be strictly larger.
    pub band: (usize, usize),
    pub band_witnesses: Vec<Witness>,
    pub pass: bool,
}

/// Compares `U^p` and `U^q` and reports two-sided witnesses.
pub fn incomparability_probe(
    n: usize,
    l: usize,
    g: usize,
    p: usize,
    q: usize,
) -> Result<ProbeReport> {
    if p == q {
        return Err(Error::InvalidProbe("p and q must differ".into()));
    }
    let raw = p_formula(n, l, g);
    if raw < 0 || p.max(q) as i64 > raw {
        return Err(Error::InvalidProbe(format!(
            "p = {p}, q = {q} must both be <= floor((n - g - g*l + l)/(l + 1)) = {raw}"
        )));
    }
    let cp = laplacian_coefficients(&build_u(FamilySpec::new(n, l, g, p))?);
    let cq = laplacian_coefficients(&build_u(FamilySpec::new(n, l, g, q))?);
    let verdict = compare(&cp, &cq)?;
    let lo = p.min(q);
    let (c_hi, c_lo) = if p > q { (&cp, &cq) } else { (&cq, &cp) };
    let witness = |k: usize| Witness {
        index: k,
        high: c_hi.get(k).to_string(),
        low: c_lo.get(k).to_string(),
    };

    let (below, above) = strict_indices(c_hi, c_lo);
    let tail_witness = (n >= 2 && below.contains(&(n - 2))).then(|| witness(n - 2));
    let band = (2 * (lo + 1), (2 * (lo + 1 + g)).saturating_sub(3).min(n));
    let band_witnesses: Vec<Witness> = above
        .iter()
        .copied()
        .filter(|&k| band.0 <= k && k <= band.1)
        .map(witness)
        .collect();
    let pass =
        verdict == PosetRel::Incomparable && tail_witness.is_some() && !band_witnesses.is_empty();
    Ok(ProbeReport {
        n,
        l,
        g,
        p,
        q,
        coeffs_p: cp.to_decimal_strings(),
        coeffs_q: cq.to_decimal_strings(),
        verdict,
        tail_witness,
        band,
        band_witnesses,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchViolation {
    pub g: usize,
    pub graph: MemberSummary,
    pub u0_coeffs: Vec<String>,
    pub verdict: PosetRel,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub n: usize,
    pub l: usize,
    /// Graphs with at least three branching cycle vertices.
    pub branch_checked: usize,
    pub branch_violations: Vec<BranchViolation>,
    /// `None` when the pooled family is outside the statement (no `U` exists).
    pub pooled_p_formula: Option<i64>,
    pub pooled_clamped: bool,
    pub pooled_matches: Option<bool>,
    pub pooled_observed: Vec<String>,
    pub pooled_predicted: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n_max: usize,
    pub girths_pooled: String,
    pub entries: Vec<ConjectureEntry>,
    /// Part 1 had no qualifying graph at all.
    pub branch_vacuous: bool,
    pub branch_checked: usize,
    pub branch_violations: usize,
    pub pooled_checked: usize,
    pub pooled_violations: usize,
    pub pass: bool,
}

/// Checks both parts of the branch-vertex conjecture for all `3 <= n <= n_max`.
pub fn check_conjecture(n_max: usize) -> Result<ConjectureReport> {
    check_conjecture_guarded(n_max, MAX_ENUM_ORDER)
}

pub fn check_conjecture_guarded(n_max: usize, limit: usize) -> Result<ConjectureReport> {
    let limit = limit.min(MAX_ENUM_ORDER);
    if n_max > limit {
        return Err(Error::GuardExceeded(format!(
            "conjecture check limited to n_max <= {limit}, got {n_max}"
        )));
    }
    let mut entries = Vec::new();
    for n in 3..=n_max {
        let all = enumerate_family_guarded(n, None, None, Restriction::Full, limit)?;
        for l in 0..=n - 3 {
            let fam = all.restrict(Some(l), None, Restriction::Full);
            if fam.is_empty() {
                continue;
            }
            entries.push(conjecture_entry(n, l, &fam)?);
        }
    }
    let branch_checked = entries.iter().map(|e| e.branch_checked).sum();
    let branch_violations = entries.iter().map(|e| e.branch_violations.len()).sum();
    let pooled_checked = entries
        .iter()
        .filter(|e| e.pooled_matches.is_some())
        .count();
    let pooled_violations = entries
        .iter()
        .filter(|e| e.pooled_matches == Some(false))
        .count();
    Ok(ConjectureReport {
        n_max,
        girths_pooled: "all g >= 3".into(),
        branch_vacuous: branch_checked == 0,
        branch_checked,
        branch_violations,
        pooled_checked,
        pooled_violations,
        pass: branch_violations == 0 && pooled_violations == 0,
        entries,
    })
}

fn conjecture_entry(n: usize, l: usize, fam: &FamilyCatalog) -> Result<ConjectureEntry> {
    let mut branch_checked = 0;
    let mut branch_violations = Vec::new();
    let mut u0_cache: Vec<(usize, CoeffVector)> = Vec::new();
    for m in &fam.members {
        let report = classify(&m.graph);
        let branching = report
            .cycle_vertices
            .iter()
            .filter(|&&v| m.graph.degree(v) >= 3)
            .count();
        if branching < 3 {
            continue;
        }
        branch_checked += 1;
        let g = m.girth;
        let c0 = match u0_cache.iter().find(|(gg, _)| *gg == g) {
            Some((_, c)) => c.clone(),
            None => {
                let c = laplacian_coefficients(&build_u(FamilySpec::new(n, l, g, 0))?);
                u0_cache.push((g, c.clone()));
                c
            }
        };
        let verdict = compare(&c0, &m.coeffs)?;
        if !verdict.is_le() {
            branch_violations.push(BranchViolation {
                g,
                graph: MemberSummary::of_member(m),
                u0_coeffs: c0.to_decimal_strings(),
                verdict,
            });
        }
    }

    let mut entry = ConjectureEntry {
        n,
        l,
        branch_checked,
        branch_violations,
        pooled_p_formula: None,
        pooled_clamped: false,
        pooled_matches: None,
        pooled_observed: Vec::new(),
        pooled_predicted: Vec::new(),
    };
    if l == 0 || n < 3 + l {
        return Ok(entry);
    }
    let (predicted, clamped) = predicted_set(n, l, 3)?;
    let minimal = minimal_elements(fam);
    let mut observed: Vec<String> = minimal.members.iter().map(|m| hex(&m.form)).collect();
    let mut expected: Vec<String> = predicted.iter().map(|(_, f, _)| hex(f)).collect();
    observed.sort();
    expected.sort();
    entry.pooled_p_formula = Some(p_formula(n, l, 3));
    entry.pooled_clamped = clamped;
    entry.pooled_matches = Some(observed == expected);
    entry.pooled_observed = observed;
    entry.pooled_predicted = expected;
    Ok(entry)
}

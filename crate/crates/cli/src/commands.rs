use anyhow::{bail, Context};
use rayon::prelude::*;

use univsum::claims::{self, ALMOST_UNIVERSAL, PENTAGONAL_PAIRS, TRIANGULAR_UNIVERSAL};
use univsum::identities::{check_counts, dissect_components, transfer, Dissection};
use univsum::ternary::lemmas;
use univsum::{
    reduce_to_squares, reduction_bridge, sums_equivalent_up_to, verify_dickson, verify_identity,
    Catalog, Component, RuleRecord, Series, SquareReduction, TernaryTuple,
};

use crate::cache::SeriesCache;
use crate::report::{Report, Row, SubjectKind};

/// Scans go through the cache when one is configured.
pub struct Scanner {
    pub cache: Option<SeriesCache>,
}

impl Scanner {
    pub fn series(&self, t: &TernaryTuple, bound: usize) -> anyhow::Result<Series> {
        match &self.cache {
            Some(c) => c.rep_series(t, bound),
            None => Ok(univsum::rep_series(t, bound)?),
        }
    }

    pub fn gaps(&self, t: &TernaryTuple, bound: usize) -> anyhow::Result<Vec<usize>> {
        Ok(self.series(t, bound)?.zeros())
    }
}

fn term(var: char, c: &Component) -> String {
    let sign = if c.b < 0 { '-' } else { '+' };
    format!("{var}({}{var}{sign}{})/2", c.a, c.b.abs())
}

/// The sum a tuple stands for, e.g. `x(8x+2)/2 + y(5y+1)/2 + z(3z+1)/2`.
pub fn polynomial(t: &TernaryTuple) -> String {
    let c = t.components();
    format!(
        "{} + {} + {}",
        term('x', &c[0]),
        term('y', &c[1]),
        term('z', &c[2])
    )
}

pub fn parse_tuple(values: &[i64]) -> anyhow::Result<TernaryTuple> {
    let arr: [i64; 6] = values
        .try_into()
        .map_err(|_| anyhow::anyhow!("a tuple needs six integers, got {}", values.len()))?;
    Ok(TernaryTuple::from_array(arr)?)
}

/// Accepts `(1,1),(3,1)` or `1 1 3 1`: any list of integers read as pairs.
pub fn parse_components(text: &str) -> anyhow::Result<Vec<Component>> {
    let nums: Vec<i64> = text
        .split(|c: char| !(c.is_ascii_digit() || c == '-'))
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .with_context(|| format!("bad integer {s:?} in {text:?}"))
        })
        .collect::<anyhow::Result<_>>()?;
    if nums.is_empty() || !nums.len().is_multiple_of(2) {
        bail!("component list {text:?} must list (a,b) pairs");
    }
    nums.chunks(2)
        .map(|p| Ok(Component::new(p[0], p[1])?))
        .collect()
}

fn tuple_row(claim: &str, t: &TernaryTuple, bound: usize, gaps: &[usize]) -> Row {
    Row::new(claim, SubjectKind::Tuple, t.to_string(), bound)
        .verdict(gaps.is_empty())
        .gaps(gaps)
        .witness(gaps.first())
        .source(polynomial(t))
}

pub fn universal(scan: &Scanner, t: &TernaryTuple, bound: usize) -> anyhow::Result<Report> {
    let gaps = scan.gaps(t, bound)?;
    Ok(Report::new(
        "universal",
        bound,
        vec![tuple_row("universal", t, bound, &gaps)],
    ))
}

fn almost_row(scan: &Scanner, t: &TernaryTuple, bound: usize) -> anyhow::Result<Row> {
    let gaps = scan.gaps(t, bound)?;
    let e = univsum::forms::exceptional_from_gaps(gaps, bound);
    Ok(Row::new(
        "almost universal (empirical)",
        SubjectKind::Tuple,
        t.to_string(),
        bound,
    )
    .verdict(e.stabilized)
    .gaps(&e.gaps)
    .witness(e.largest)
    .source(polynomial(t)))
}

pub fn exceptional(scan: &Scanner, t: &TernaryTuple, bound: usize) -> anyhow::Result<Report> {
    Ok(Report::new(
        "exceptional",
        bound,
        vec![almost_row(scan, t, bound)?],
    ))
}

fn tuple_rows(
    scan: &Scanner,
    claim: &str,
    tuples: &[TernaryTuple],
    bound: usize,
) -> anyhow::Result<Vec<Row>> {
    tuples
        .par_iter()
        .map(|t| Ok(tuple_row(claim, t, bound, &scan.gaps(t, bound)?)))
        .collect()
}

fn bridge_bound(bound: usize) -> usize {
    bound.min(2000)
}

fn form_rows(scan: &Scanner, bound: usize) -> anyhow::Result<Vec<Row>> {
    let tuples: Vec<TernaryTuple> = claims::UNIVERSAL_BY_FORMS
        .iter()
        .flat_map(|g| claims::tuples(g))
        .collect();
    tuples
        .par_iter()
        .map(|t| {
            let gaps = scan.gaps(t, bound)?;
            let bridge = reduction_bridge(t, bridge_bound(bound))?;
            let red = reduce_to_squares(t);
            let witness = gaps.first().map(|g| g.to_string()).or(bridge
                .witness
                .map(|w| format!("reduction disagrees at {w}")));
            Ok(Row::new(
                "universal via diagonal form",
                SubjectKind::Tuple,
                t.to_string(),
                bound,
            )
            .verdict(gaps.is_empty() && bridge.ok())
            .gaps(&gaps)
            .witness(witness)
            .source(format!("{} ; {}", polynomial(t), describe_reduction(&red))))
        })
        .collect()
}

/// `M value + C = d1 (m1 x + r1)^2 + ...`
pub fn describe_reduction(r: &SquareReduction) -> String {
    let terms: Vec<String> = r
        .terms
        .iter()
        .zip(['x', 'y', 'z'])
        .map(|(s, v)| {
            let lin = match s.offset {
                0 => format!("{}{v}+{}", s.modulus, s.residue),
                o => format!("{}({v}{o:+})+{}", s.modulus, s.residue),
            };
            if s.coeff == 1 {
                format!("({lin})^2")
            } else {
                format!("{}({lin})^2", s.coeff)
            }
        })
        .collect();
    format!(
        "{} value + {} = {}",
        r.multiplier,
        r.constant,
        terms.join(" + ")
    )
}

pub fn reduce(t: &TernaryTuple, bound: usize) -> anyhow::Result<Report> {
    let red = reduce_to_squares(t);
    let bridge = reduction_bridge(t, bound)?;
    let row = Row::new("square reduction", SubjectKind::Tuple, t.to_string(), bound)
        .verdict(bridge.ok())
        .witness(bridge.witness)
        .source(describe_reduction(&red));
    Ok(Report::new("reduce", bound, vec![row]))
}

fn triangular_rows(scan: &Scanner, bound: usize) -> anyhow::Result<Vec<Row>> {
    let mut triples = Vec::new();
    for a in 1..=20i64 {
        for b in a..=20 {
            for c in b..=20 {
                triples.push([a, b, c]);
            }
        }
    }
    triples
        .par_iter()
        .map(|&[a, b, c]| {
            let t = claims::triangular_tuple(a, b, c);
            // most triples miss a small value, so a short scan finds the witness
            let mut scanned = bound.min(2000);
            let mut gaps = scan.gaps(&t, scanned)?;
            if gaps.is_empty() && bound > scanned {
                scanned = bound;
                gaps = scan.gaps(&t, scanned)?;
            }
            let listed = TRIANGULAR_UNIVERSAL.contains(&[a, b, c]);
            let claim = if listed {
                "triangular universal"
            } else {
                "triangular not universal"
            };
            Ok(Row::new(claim, SubjectKind::Tuple, t.to_string(), scanned)
                .verdict(listed == gaps.is_empty())
                .gaps(&gaps)
                .witness(gaps.first())
                .source(format!("{a}T(x) + {b}T(y) + {c}T(z)")))
        })
        .collect()
}

fn dickson_rows(rules: &[RuleRecord], bound: usize) -> anyhow::Result<Vec<Row>> {
    rules
        .par_iter()
        .map(|r| {
            let check = verify_dickson(&r.form, &r.rule, bound)?;
            Ok(Row::new(
                "excluded-set rule",
                SubjectKind::Form,
                r.form.to_string(),
                bound,
            )
            .verdict(check.ok())
            .witness(check.disagreement.map(|d| d.n))
            .source(r.source.clone()))
        })
        .collect()
}

fn equivalence_rows(bound: usize) -> anyhow::Result<Vec<Row>> {
    claims::equivalences()
        .par_iter()
        .map(|e| {
            let ok = sums_equivalent_up_to(&e.lhs, &e.rhs, bound)?;
            Ok(equiv_row(&e.lhs, &e.rhs, bound, ok).source(e.name.clone()))
        })
        .collect()
}

fn show_components(cs: &[Component]) -> String {
    let parts: Vec<String> = cs.iter().map(|c| format!("({},{})", c.a, c.b)).collect();
    parts.join("+")
}

fn equiv_row(lhs: &[Component], rhs: &[Component], bound: usize, ok: bool) -> Row {
    let subject = format!("{} ~ {}", show_components(lhs), show_components(rhs));
    Row::new("value sets equal", SubjectKind::Form, subject, bound).verdict(ok)
}

pub fn equiv(lhs: &[Component], rhs: &[Component], bound: usize) -> anyhow::Result<Report> {
    let a = univsum::forms::value_set(&univsum::forms::component_sum_series::<i64>(lhs, bound)?);
    let b = univsum::forms::value_set(&univsum::forms::component_sum_series::<i64>(rhs, bound)?);
    let witness = (0..=bound).find(|&n| a[n] != b[n]);
    let row = equiv_row(lhs, rhs, bound, witness.is_none()).witness(witness);
    Ok(Report::new("equiv", bound, vec![row]))
}

fn lemma_rows(bound: usize) -> Vec<Row> {
    let limit = bound as i64;
    let mut sweeps = vec![
        (
            "x^2+3y^2 = 4 mod 8 with odd parts",
            lemmas::sweep_odd_rewrite(limit),
        ),
        (
            "x^2+3y^2 with parts prime to 6",
            lemmas::sweep_coprime_six_rewrite(limit),
        ),
        (
            "9(x^2+y^2+z^2) not all divisible by 3",
            lemmas::sweep_ninefold_rewrite(limit),
        ),
    ];
    for (m, name) in [
        (2, "x^2+2y^2 with a part prime to 3"),
        (5, "x^2+5y^2 with a part prime to 3"),
        (8, "x^2+8y^2 with a part prime to 3"),
    ] {
        sweeps.push((name, lemmas::sweep_mod3_rewrite(limit, m)));
    }
    sweeps
        .into_iter()
        .map(|(name, s)| {
            Row::new("rewrite lemma", SubjectKind::Form, name, bound)
                .verdict(s.ok())
                .witness(s.first_violation)
                .source(format!("{} inputs met the hypothesis", s.checked))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Subject {
    /// Universal tuples obtained from theta dissections.
    Dissection,
    /// Universal tuples proved through diagonal ternary forms.
    Forms,
    /// Almost universal sums and their empirical exceptional sets.
    Almost,
    /// All a T(x) + b T(y) + c T(z) with a <= b <= c <= 20.
    Triangular,
    /// p5(x) + b p5(y) + c p5(z) for the universal pairs (b, c).
    Pentagonal,
    /// Excluded sets of regular diagonal forms.
    Dickson,
    /// Two-variable value-set equivalences.
    Equiv,
    /// Exhaustive sweeps of the rewrite lemmas.
    Lemmas,
}

impl Subject {
    pub fn name(self) -> &'static str {
        match self {
            Subject::Dissection => "dissection",
            Subject::Forms => "forms",
            Subject::Almost => "almost",
            Subject::Triangular => "triangular",
            Subject::Pentagonal => "pentagonal",
            Subject::Dickson => "dickson",
            Subject::Equiv => "equiv",
            Subject::Lemmas => "lemmas",
        }
    }

    pub fn default_limit(self) -> usize {
        match self {
            Subject::Dickson => 100_000,
            Subject::Equiv | Subject::Lemmas => 10_000,
            _ => 1_000_000,
        }
    }
}

pub fn report(
    scan: &Scanner,
    subject: Subject,
    rules: &[RuleRecord],
    bound: usize,
) -> anyhow::Result<Report> {
    let rows = match subject {
        Subject::Dissection => tuple_rows(
            scan,
            "universal via dissection",
            &claims::tuples(&claims::UNIVERSAL_BY_DISSECTION),
            bound,
        )?,
        Subject::Forms => form_rows(scan, bound)?,
        Subject::Almost => claims::tuples(&ALMOST_UNIVERSAL)
            .par_iter()
            .map(|t| almost_row(scan, t, bound))
            .collect::<anyhow::Result<_>>()?,
        Subject::Triangular => triangular_rows(scan, bound)?,
        Subject::Pentagonal => {
            let tuples: Vec<TernaryTuple> = PENTAGONAL_PAIRS
                .iter()
                .map(|&(b, c)| claims::pentagonal_tuple(b, c))
                .collect();
            tuple_rows(scan, "pentagonal universal", &tuples, bound)?
        }
        Subject::Dickson => dickson_rows(rules, bound)?,
        Subject::Equiv => equivalence_rows(bound)?,
        Subject::Lemmas => lemma_rows(bound),
    };
    Ok(Report::new(
        format!("report {}", subject.name()),
        bound,
        rows,
    ))
}

pub fn identity_verify(catalog: &Catalog, ids: &[String], bound: usize) -> anyhow::Result<Report> {
    let rows = ids
        .par_iter()
        .map(|id| {
            let rec = catalog.get(id)?;
            let check = verify_identity::<i64>(rec, bound)?;
            Ok(
                Row::new("identity", SubjectKind::Identity, id.clone(), bound)
                    .verdict(check.ok())
                    .witness(
                        check
                            .first_mismatch
                            .map(|m| format!("q^{}: lhs {} rhs {}", m.n, m.lhs, m.rhs)),
                    )
                    .source(rec.source.clone()),
            )
        })
        .collect::<anyhow::Result<_>>()?;
    Ok(Report::new("identity verify", bound, rows))
}

pub fn identity_dissect(catalog: &Catalog, id: &str, bound: usize) -> anyhow::Result<Report> {
    let rec = catalog.get(id)?;
    let d = dissect_components(rec)?;
    let check = check_counts(&d, bound)?;
    let failed_shift = check.first_failure.as_ref().map(|f| f.shift);
    let mut rows = vec![Row::new(
        format!("{id} lhs"),
        SubjectKind::Tuple,
        d.lhs.to_string(),
        bound,
    )
    .verdict(check.ok())
    .source(rec.source.clone())];
    for c in &d.components {
        let fail = check.first_failure.as_ref().filter(|f| f.shift == c.shift);
        rows.push(
            Row::new(
                format!("{id} R({}n+{}) = {} R(n)", d.k, c.shift, c.multiplier),
                SubjectKind::Tuple,
                c.tuple.to_string(),
                bound,
            )
            .verdict(failed_shift != Some(c.shift))
            .witness(fail.map(|f| format!("n={}: {} vs {}", f.n, f.lhs_count, f.expected)))
            .source(polynomial(&c.tuple)),
        );
    }
    Ok(Report::new("identity dissect", bound, rows))
}

/// Gap correspondence for one dissection, one row per side.
pub fn transfer_rows(d: &Dissection, id: &str, bound: usize) -> anyhow::Result<Vec<Row>> {
    let rep = transfer(d, bound)?;
    let mut rows = vec![Row::new(
        format!("{id} lhs"),
        SubjectKind::Tuple,
        rep.lhs.to_string(),
        rep.lhs_bound,
    )
    .verdict(rep.consistent)
    .gaps(&rep.lhs_gaps)
    .witness(
        rep.lhs_gaps
            .iter()
            .zip(&rep.mapped_gaps)
            .find(|(a, b)| a != b)
            .map(|(a, b)| format!("lhs gap {a} vs mapped {b}")),
    )
    .source(polynomial(&rep.lhs))];
    for c in &rep.components {
        let own: Vec<usize> = rep
            .lhs_gaps
            .iter()
            .filter(|&&g| g % rep.k == c.shift)
            .map(|&g| (g - c.shift) / rep.k)
            .collect();
        let witness = own
            .iter()
            .zip(&c.gaps)
            .find(|(a, b)| a != b)
            .map(|(a, b)| format!("lhs gives {a}, component gives {b}"))
            .or_else(|| (own.len() != c.gaps.len()).then(|| "gap counts differ".to_string()));
        rows.push(
            Row::new(
                format!("{id} shift {}", c.shift),
                SubjectKind::Tuple,
                c.tuple.to_string(),
                bound,
            )
            .verdict(witness.is_none())
            .gaps(&c.gaps)
            .witness(witness)
            .source(polynomial(&c.tuple)),
        );
    }
    Ok(rows)
}

pub fn identity_transfer(catalog: &Catalog, id: &str, bound: usize) -> anyhow::Result<Report> {
    let d = dissect_components(catalog.get(id)?)?;
    Ok(Report::new(
        "identity transfer",
        bound,
        transfer_rows(&d, id, bound)?,
    ))
}

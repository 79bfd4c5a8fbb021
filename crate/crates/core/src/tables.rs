//! Embedded reference threshold tables and their reproduction.
//!
//! The crate ships a small CSV of expected values — for each verified
//! `(a, b, c, A, B)` family the remainder bound `D`, the global index `K`
//! past which positivity needs no finite check, and the per-`k` degree
//! thresholds `N^k` for `1 <= k < K`. [`reproduce`] recomputes every row
//! from scratch and reports any cell that disagrees, which is the primary
//! end-to-end regression check for the whole threshold pipeline
//! (partition-counter decomposition, case quadratics, and root ceilings).

use crate::bounds::{compute_thresholds, FamilyParams};
use crate::error::{Error, Result};
use crate::periodic::CoprimeTriple;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::theta::ThetaForm;

/// The expected values shipped with the crate. Ragged CSV: the fixed columns
/// `a,b,c,A,B,D,K` are followed by the `K - 1` degree thresholds.
pub const EXPECTED_TABLES_CSV: &str = include_str!("../data/expected_tables.csv");

/// One family's reference (or recomputed) threshold data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub triple: CoprimeTriple,
    pub form: ThetaForm,
    /// The remainder bound `D` of the triple's partition counter.
    pub beta_bound: Rational,
    /// The global index `K`.
    pub k_min: u64,
    /// The degree thresholds `N^1, ..., N^{K-1}`.
    pub degrees: Vec<i64>,
}

impl TableRow {
    /// Renders the row in the same ragged-CSV shape the parser accepts.
    pub fn csv_line(&self) -> String {
        let mut fields = vec![
            self.triple.a().to_string(),
            self.triple.b().to_string(),
            self.triple.c().to_string(),
            format_rational(self.form.quad()),
            format_rational(self.form.lin()),
            format_rational(&self.beta_bound),
            self.k_min.to_string(),
        ];
        fields.extend(self.degrees.iter().map(|n| n.to_string()));
        fields.join(",")
    }
}

/// Parses ragged-CSV rows. Lines that are empty or do not start with a digit
/// (the header, comments) are skipped.
pub fn parse_rows(csv: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (lineno, line) in csv.lines().enumerate() {
        let line = line.trim();
        if !line.starts_with(|c: char| c.is_ascii_digit()) {
            continue;
        }
        let bad = |what: &str| {
            Error::InvalidArgument(format!("table line {}: {what}", lineno + 1))
        };
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() < 7 {
            return Err(bad("expected at least 7 fields"));
        }
        let mut ints = fields[..3].iter().map(|f| f.parse::<u64>());
        let a = ints.next().unwrap().map_err(|_| bad("bad part a"))?;
        let b = ints.next().unwrap().map_err(|_| bad("bad part b"))?;
        let c = ints.next().unwrap().map_err(|_| bad("bad part c"))?;
        let triple = CoprimeTriple::new(a, b, c)?;
        let form = ThetaForm::new(parse_rational(fields[3])?, parse_rational(fields[4])?)?;
        let beta_bound = parse_rational(fields[5])?;
        let k_min: u64 = fields[6].parse().map_err(|_| bad("bad index K"))?;
        if k_min < 1 {
            return Err(bad("index K must be at least 1"));
        }
        let degrees = fields[7..]
            .iter()
            .map(|f| f.parse::<i64>().map_err(|_| bad("bad degree threshold")))
            .collect::<Result<Vec<i64>>>()?;
        if degrees.len() as u64 != k_min - 1 {
            return Err(bad("degree list length must be K - 1"));
        }
        rows.push(TableRow { triple, form, beta_bound, k_min, degrees });
    }
    Ok(rows)
}

/// The seventeen rows shipped with the crate.
pub fn expected_rows() -> Result<Vec<TableRow>> {
    parse_rows(EXPECTED_TABLES_CSV)
}

/// Recomputes one family's row from scratch.
pub fn compute_row(triple: &CoprimeTriple, form: &ThetaForm) -> Result<TableRow> {
    let params = FamilyParams::new(*triple, form.clone())?;
    let thresholds = compute_thresholds(&params)?;
    Ok(TableRow {
        triple: *triple,
        form: form.clone(),
        beta_bound: params.beta_bound,
        k_min: thresholds.k_min,
        degrees: thresholds.per_k.iter().map(|t| t.n).collect(),
    })
}

/// One disagreeing cell between an expected row and its recomputation.
#[derive(Clone, Debug)]
pub struct RowDiff {
    /// Index of the row in the input slice.
    pub row: usize,
    /// The family, rendered for messages.
    pub family: String,
    /// Which cell disagreed: `"D"`, `"K"`, or `"N^k"`.
    pub field: String,
    pub expected: String,
    pub actual: String,
}

/// Recomputes every row and collects cell-level disagreements. An empty
/// result means the tables reproduce exactly.
pub fn reproduce(rows: &[TableRow]) -> Result<Vec<RowDiff>> {
    let mut diffs = Vec::new();
    for (index, row) in rows.iter().enumerate() {
        let computed = compute_row(&row.triple, &row.form)?;
        let family = format!("{} {}", row.triple, row.form);
        let mut push = |field: String, expected: String, actual: String| {
            diffs.push(RowDiff { row: index, family: family.clone(), field, expected, actual });
        };
        if computed.beta_bound != row.beta_bound {
            push(
                "D".into(),
                format_rational(&row.beta_bound),
                format_rational(&computed.beta_bound),
            );
        }
        if computed.k_min != row.k_min {
            push("K".into(), row.k_min.to_string(), computed.k_min.to_string());
        }
        let pairs = row.degrees.len().max(computed.degrees.len());
        for k in 0..pairs {
            let expected = row.degrees.get(k);
            let actual = computed.degrees.get(k);
            if expected != actual {
                push(
                    format!("N^{}", k + 1),
                    expected.map_or("-".into(), |n| n.to_string()),
                    actual.map_or("-".into(), |n| n.to_string()),
                );
            }
        }
    }
    Ok(diffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn expected_tables_parse() {
        let rows = expected_rows().unwrap();
        assert_eq!(rows.len(), 17);

        let first = &rows[0];
        assert_eq!(first.triple.parts(), [1, 2, 3]);
        assert_eq!(first.form, ThetaForm::pentagonal());
        assert_eq!(first.beta_bound, int(1));
        assert_eq!(first.k_min, 3);
        assert_eq!(first.degrees, vec![805, 57]);

        let last = &rows[16];
        assert_eq!(last.triple.parts(), [2, 3, 5]);
        assert_eq!(last.form, ThetaForm::new(ratio(5, 2), ratio(1, 2)).unwrap());
        assert_eq!(last.degrees, vec![2117, 164]);

        // Five blocks: 8 rows at (3/2, 1/2), 3 at (1, 0), 4 at (2, 1), and
        // one each at (5/2, 3/2) and (5/2, 1/2).
        let count = |form: &ThetaForm| rows.iter().filter(|r| &r.form == form).count();
        assert_eq!(count(&ThetaForm::pentagonal()), 8);
        assert_eq!(count(&ThetaForm::squares()), 3);
        assert_eq!(count(&ThetaForm::triangular()), 4);
        assert_eq!(count(&ThetaForm::new(ratio(5, 2), ratio(3, 2)).unwrap()), 1);
        assert_eq!(count(&ThetaForm::new(ratio(5, 2), ratio(1, 2)).unwrap()), 1);

        // Ten distinct part triples appear across the seventeen rows.
        let mut triples: Vec<[u64; 3]> = rows.iter().map(|r| r.triple.parts()).collect();
        triples.sort();
        triples.dedup();
        assert_eq!(triples.len(), 10);
    }

    #[test]
    fn csv_lines_round_trip() {
        for row in expected_rows().unwrap() {
            let reparsed = parse_rows(&row.csv_line()).unwrap();
            assert_eq!(reparsed.len(), 1);
            assert_eq!(&reparsed[0], &row);
        }
    }

    #[test]
    fn malformed_rows_are_rejected() {
        // Too few fields.
        assert!(parse_rows("1,2,3,3/2,1/2,1").is_err());
        // Degree list length disagrees with K.
        assert!(parse_rows("1,2,3,3/2,1/2,1,3,805").is_err());
        assert!(parse_rows("1,2,3,3/2,1/2,1,3,805,57,42").is_err());
        // K must be positive.
        assert!(parse_rows("1,2,3,3/2,1/2,1,0").is_err());
        // Non-coprime triple.
        assert!(parse_rows("2,4,6,3/2,1/2,1,3,805,57").is_err());
        // Unparseable quadratic coefficient.
        assert!(parse_rows("1,2,3,x,1/2,1,3,805,57").is_err());
        // Header and blank lines are skipped, not errors.
        assert!(parse_rows("a,b,c\n\n# note\n").unwrap().is_empty());
    }

    #[test]
    fn reproduction_matches_on_one_family() {
        // Full seventeen-row reproduction runs in the integration suite;
        // here a single cheap family guards the plumbing.
        let rows = parse_rows("1,2,3,1,0,1,3,529,64").unwrap();
        let diffs = reproduce(&rows).unwrap();
        assert!(diffs.is_empty(), "unexpected diffs: {diffs:?}");
    }

    #[test]
    fn reproduce_reports_cell_level_diffs() {
        // Corrupt one degree and the bound; both cells must be flagged.
        let rows = parse_rows("1,2,3,1,0,2,3,529,65").unwrap();
        let diffs = reproduce(&rows).unwrap();
        let fields: Vec<&str> = diffs.iter().map(|d| d.field.as_str()).collect();
        assert_eq!(fields, vec!["D", "N^2"]);
        assert_eq!(diffs[0].expected, "2");
        assert_eq!(diffs[0].actual, "1");
        assert_eq!(diffs[1].expected, "65");
        assert_eq!(diffs[1].actual, "64");
    }
}

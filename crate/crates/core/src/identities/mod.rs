//! Pointwise exact verification of the identities relating the number and
//! polynomial families, with as-printed and corrected variants where the
//! printed specialization disagrees with the definitions for `m != 1`.

mod catalog;
mod forms;
mod suite;

use serde::{Deserialize, Serialize};

pub use catalog::{
    erratum_candidates, expectation, CatalogEntry, EntryKind, Expectation, IdentityTag, Inputs,
    Variant, CATALOG,
};
pub use forms::series_eps;
pub use suite::{run_suite, Grid, SuiteResult, SummaryRow, VariantSelection};

use crate::error::{Error, Result};
use crate::Rational;
use forms::{Failure, Sides};

/// Free parameters of an identity instance. Only the fields the identity
/// consumes are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdentityParams {
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub m: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub a: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub a1: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub a2: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub r: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub x: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub x1: Option<Rational>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational_text::option"
    )]
    pub x2: Option<Rational>,
    pub n: u32,
}

impl IdentityParams {
    pub fn with_n(n: u32) -> Self {
        IdentityParams {
            n,
            ..Default::default()
        }
    }

    pub fn m(mut self, v: Rational) -> Self {
        self.m = Some(v);
        self
    }

    pub fn a(mut self, v: Rational) -> Self {
        self.a = Some(v);
        self
    }

    pub fn a_pair(mut self, a1: Rational, a2: Rational) -> Self {
        self.a1 = Some(a1);
        self.a2 = Some(a2);
        self
    }

    pub fn r(mut self, v: Rational) -> Self {
        self.r = Some(v);
        self
    }

    pub fn x(mut self, v: Rational) -> Self {
        self.x = Some(v);
        self
    }

    pub fn x_pair(mut self, x1: Rational, x2: Rational) -> Self {
        self.x1 = Some(x1);
        self.x2 = Some(x2);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Skipped,
}

/// Exact enclosure of a series-valued right-hand side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhsEnclosure {
    #[serde(with = "rational_text")]
    pub lo: Rational,
    #[serde(with = "rational_text")]
    pub hi: Rational,
    pub terms_used: usize,
}

/// Outcome of checking one identity instance.
///
/// For exact identities `verdict` is `Holds` iff `lhs == rhs`. For series
/// identities `rhs` is the enclosure midpoint and `verdict` is `Holds` iff
/// `lhs` lies in `rhs_enclosure`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    #[serde(with = "tag_text")]
    pub id: IdentityTag,
    #[serde(with = "variant_text")]
    pub variant: Variant,
    pub params: IdentityParams,
    #[serde(with = "rational_text::option")]
    pub lhs: Option<Rational>,
    #[serde(with = "rational_text::option")]
    pub rhs: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_enclosure: Option<RhsEnclosure>,
    pub verdict: Verdict,
    pub skip_reason: Option<String>,
}

impl IdentityReport {
    pub fn expectation(&self) -> Expectation {
        expectation(self.id, self.variant, &self.params)
    }

    /// Skips are driven by preconditions and always match.
    pub fn is_expected(&self) -> bool {
        match self.verdict {
            Verdict::Holds | Verdict::Skipped => true,
            Verdict::Fails => self.expectation() == Expectation::MayFail,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Checks one identity at one parameter point.
///
/// Precondition violations produce a `Skipped` report. Requesting a
/// `Corrected` variant of a tag that only has one form is an error.
pub fn check_identity(
    id: IdentityTag,
    variant: Variant,
    params: &IdentityParams,
) -> Result<IdentityReport> {
    if !id.variants().contains(&variant) {
        return Err(Error::domain(format!("{id} has no {variant} variant")));
    }
    let mut report = IdentityReport {
        id,
        variant,
        params: params.clone(),
        lhs: None,
        rhs: None,
        rhs_enclosure: None,
        verdict: Verdict::Skipped,
        skip_reason: None,
    };
    match forms::evaluate(id, variant, params) {
        Ok(Sides::Exact { lhs, rhs }) => {
            report.verdict = if lhs == rhs {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            report.lhs = Some(lhs);
            report.rhs = Some(rhs);
        }
        Ok(Sides::Enclosed { lhs, rhs }) => {
            report.verdict = if rhs.contains(&lhs) {
                Verdict::Holds
            } else {
                Verdict::Fails
            };
            report.rhs = Some(rhs.midpoint());
            report.rhs_enclosure = Some(RhsEnclosure {
                lo: rhs.lo,
                hi: rhs.hi,
                terms_used: rhs.terms_used,
            });
            report.lhs = Some(lhs);
        }
        Err(Failure::Skip(reason)) => report.skip_reason = Some(reason),
        Err(Failure::Unconverged(reason)) => {
            report.verdict = Verdict::Fails;
            report.skip_reason = Some(reason);
        }
    }
    Ok(report)
}

/// Serde adapters writing rationals as `p/q` strings.
pub mod rational_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use crate::arith::{format_rational, parse_rational};
    use crate::Rational;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.serialize_str(&format_rational(v)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| parse_rational(&t).map_err(D::Error::custom))
                .transpose()
        }
    }
}

mod tag_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::IdentityTag;

    pub fn serialize<S: Serializer>(v: &IdentityTag, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(v.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IdentityTag, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

mod variant_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::Variant;

    pub fn serialize<S: Serializer>(v: &Variant, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(v.name())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Variant, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn check(id: IdentityTag, v: Variant, p: IdentityParams) -> IdentityReport {
        check_identity(id, v, &p).unwrap()
    }

    #[test]
    fn thm2_worked_example() {
        let r = check(
            IdentityTag::Thm2,
            Variant::AsPrinted,
            IdentityParams::with_n(2).m(rat(1)).a(rat(0)).x(rat(1)),
        );
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs, Some(rat(6)));
        assert_eq!(r.rhs, Some(rat(6)));
    }

    #[test]
    fn kargin1_worked_example() {
        let r = check(
            IdentityTag::Kargin1,
            Variant::AsPrinted,
            IdentityParams::with_n(1).x(rat(1)),
        );
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs, Some(rat(4)));
        assert_eq!(r.rhs, Some(rat(4)));
    }

    #[test]
    fn spec8th_mismatch_at_m2() {
        let p = IdentityParams::with_n(2).m(rat(2)).x(rat(2));
        let printed = check(IdentityTag::Spec8th, Variant::AsPrinted, p.clone());
        assert_eq!(printed.verdict, Verdict::Fails);
        assert_eq!(printed.lhs, Some(rat(48)));
        assert_eq!(printed.rhs, Some(rat(12)));
        assert!(printed.is_expected());
        let corrected = check(IdentityTag::Spec8th, Variant::Corrected, p);
        assert_eq!(corrected.verdict, Verdict::Holds);
    }

    #[test]
    fn singular_points_are_skipped() {
        let r = check(
            IdentityTag::Thm5,
            Variant::AsPrinted,
            IdentityParams::with_n(3).m(rat(2)).a(rat(1)).x(rat(-2)),
        );
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.skip_reason.unwrap().contains("x != -m"));

        let r = check(
            IdentityTag::Thm4,
            Variant::AsPrinted,
            IdentityParams::with_n(3)
                .m(rat(2))
                .a_pair(rat(1), rat(0))
                .x_pair(rat(1), rat(1)),
        );
        assert_eq!(r.verdict, Verdict::Skipped);

        let r = check(
            IdentityTag::Thm1,
            Variant::AsPrinted,
            IdentityParams::with_n(3).m(rat(0)).a(rat(0)).x(rat(1)),
        );
        assert_eq!(r.verdict, Verdict::Skipped);
    }

    #[test]
    fn missing_variant_is_an_error() {
        assert!(check_identity(
            IdentityTag::Thm1,
            Variant::Corrected,
            &IdentityParams::with_n(1)
        )
        .is_err());
    }

    #[test]
    fn unexpected_failure_is_flagged() {
        let mut r = check(
            IdentityTag::Thm1,
            Variant::AsPrinted,
            IdentityParams::with_n(2).m(rat(2)).a(rat(1)).x(rat(1)),
        );
        assert!(r.is_expected());
        r.verdict = Verdict::Fails;
        assert!(!r.is_expected());
    }

    #[test]
    fn series_report_carries_enclosure() {
        let r = check(
            IdentityTag::Series21,
            Variant::AsPrinted,
            IdentityParams::with_n(3)
                .m(rat(2))
                .a(rat(-1))
                .x(ratio(1, 2)),
        );
        assert_eq!(r.verdict, Verdict::Holds);
        let e = r.rhs_enclosure.as_ref().unwrap();
        assert!(&e.hi - &e.lo <= series_eps());
    }

    #[test]
    fn json_line_schema() {
        let r = check(
            IdentityTag::Thm2,
            Variant::AsPrinted,
            IdentityParams::with_n(2).m(rat(1)).a(rat(0)).x(ratio(1, 2)),
        );
        let line = r.to_json_line();
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        for key in [
            "id",
            "variant",
            "params",
            "lhs",
            "rhs",
            "verdict",
            "skip_reason",
        ] {
            assert!(v.get(key).is_some(), "missing {key} in {line}");
        }
        assert_eq!(v["id"], "THM2");
        assert_eq!(v["variant"], "as-printed");
        assert_eq!(v["params"]["x"], "1/2");
        assert_eq!(v["params"]["n"], 2);
        assert!(v["params"].get("a1").is_none());
        assert_eq!(v["verdict"], "holds");
        let back: IdentityReport = serde_json::from_str(&line).unwrap();
        assert_eq!(back, r);
    }
}

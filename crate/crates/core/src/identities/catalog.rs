//! Catalog of checkable identities and the expectation table.
//!
//! Whether an as-printed form is an erratum candidate is data in [`CATALOG`],
//! not code: flipping an entry's [`EntryKind`] changes what the sweep expects.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::IdentityParams;
use crate::error::Error;

macro_rules! identity_tags {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// Symbolic tag of one catalogued identity.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum IdentityTag {
            $($variant),*
        }

        impl IdentityTag {
            pub const ALL: &'static [IdentityTag] = &[$(IdentityTag::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(IdentityTag::$variant => $name),*
                }
            }
        }
    };
}

identity_tags! {
    WEgf => "W_EGF",
    WDerivRec => "W_DERIV_REC",
    F1Egf => "F1_EGF",
    F2Egf => "F2_EGF",
    FtEgf => "FT_EGF",
    NcwSum => "NCW_SUM",
    NcwA0 => "NCW_A0",
    SpecA0 => "SPEC_A0",
    SpecAm1 => "SPEC_AM1",
    Spec1mr => "SPEC_1MR",
    Thm1 => "THM1",
    KarginE13 => "KARGIN_E13",
    Thm2 => "THM2",
    KarginE14 => "KARGIN_E14",
    Spec6th => "SPEC_6TH",
    Spec7th => "SPEC_7TH",
    Spec8th => "SPEC_8TH",
    Spec9th => "SPEC_9TH",
    DilKurt1 => "DILKURT_1",
    DilKurt2 => "DILKURT_2",
    Thm3 => "THM3",
    Spec11th => "SPEC_11TH",
    Kargin1 => "KARGIN1",
    Thm4 => "THM4",
    SpecThm4A0 => "SPEC_THM4_A0",
    Kargin2 => "KARGIN2",
    BininvFwd => "BININV_FWD",
    BininvInv => "BININV_INV",
    Reflect => "REFLECT",
    Thm5 => "THM5",
    Spec17th => "SPEC_17TH",
    Spec18th => "SPEC_18TH",
    Kargin3 => "KARGIN3",
    TwRec => "TW_REC",
    TwExplicit => "TW_EXPLICIT",
    HalfArg => "HALF_ARG",
    Thm6 => "THM6",
    Spec20th => "SPEC_20TH",
    Kargin4 => "KARGIN4",
    Series21 => "SERIES_21",
    Spec22nd => "SPEC_22ND",
    Series23 => "SERIES_23",
    Series24 => "SERIES_24",
}

impl IdentityTag {
    pub fn entry(self) -> &'static CatalogEntry {
        CATALOG
            .iter()
            .find(|e| e.tag == self)
            .expect("every tag has a catalog entry")
    }

    /// Variants this tag can be checked in.
    pub fn variants(self) -> &'static [Variant] {
        match self.entry().kind {
            EntryKind::Single => &[Variant::AsPrinted],
            _ => &[Variant::AsPrinted, Variant::Corrected],
        }
    }
}

impl fmt::Display for IdentityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase();
        IdentityTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == wanted)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl From<IdentityTag> for String {
    fn from(tag: IdentityTag) -> String {
        tag.name().to_string()
    }
}

impl TryFrom<String> for IdentityTag {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "as-printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            other => Err(Error::domain(format!("unknown variant {other:?}"))),
        }
    }
}

impl From<Variant> for String {
    fn from(v: Variant) -> String {
        v.name().to_string()
    }
}

impl TryFrom<String> for Variant {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// Parameters an identity consumes, as a bit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inputs(u8);

impl Inputs {
    pub const NONE: Inputs = Inputs(0);
    pub const M: Inputs = Inputs(1);
    pub const A: Inputs = Inputs(2);
    /// `a1` and `a2`.
    pub const A_PAIR: Inputs = Inputs(4);
    pub const X: Inputs = Inputs(8);
    /// `x1` and `x2`.
    pub const X_PAIR: Inputs = Inputs(16);
    pub const R: Inputs = Inputs(32);

    pub const fn with(self, other: Inputs) -> Inputs {
        Inputs(self.0 | other.0)
    }

    pub const fn has(self, other: Inputs) -> bool {
        self.0 & other.0 == other.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// One form, expected to hold everywhere its preconditions allow.
    Single,
    /// The as-printed form is only expected at `m = 1`, `n >= holds_at_m1_from_n`;
    /// the corrected form is expected everywhere.
    Erratum { holds_at_m1_from_n: u32 },
    /// Two equivalent renderings, both expected to hold.
    Reformulated,
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub tag: IdentityTag,
    /// Formula in plain text, in the cleared-denominator form that is checked.
    pub formula: &'static str,
    pub inputs: Inputs,
    pub kind: EntryKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    /// Erratum candidate away from its specialization; failing is expected.
    MayFail,
}

impl Expectation {
    pub fn name(self) -> &'static str {
        match self {
            Expectation::Holds => "holds",
            Expectation::MayFail => "may-fail",
        }
    }
}

pub fn expectation(tag: IdentityTag, variant: Variant, params: &IdentityParams) -> Expectation {
    match (tag.entry().kind, variant) {
        (EntryKind::Erratum { holds_at_m1_from_n }, Variant::AsPrinted) => {
            let m_is_one = params.m.as_ref().is_some_and(|m| m.is_one());
            if m_is_one && params.n >= holds_at_m1_from_n {
                Expectation::Holds
            } else {
                Expectation::MayFail
            }
        }
        _ => Expectation::Holds,
    }
}

const fn entry(
    tag: IdentityTag,
    formula: &'static str,
    inputs: Inputs,
    kind: EntryKind,
) -> CatalogEntry {
    CatalogEntry {
        tag,
        formula,
        inputs,
        kind,
    }
}

const fn erratum(from_n: u32) -> EntryKind {
    EntryKind::Erratum {
        holds_at_m1_from_n: from_n,
    }
}

use EntryKind::{Reformulated, Single};
use IdentityTag as T;

const M: Inputs = Inputs::M;
const MX: Inputs = Inputs::M.with(Inputs::X);
const MAX: Inputs = Inputs::M.with(Inputs::A).with(Inputs::X);
const RX: Inputs = Inputs::R.with(Inputs::X);
const X: Inputs = Inputs::X;

pub static CATALOG: &[CatalogEntry] = &[
    entry(T::WEgf, "w_n(x) = n! [z^n] 1/(1 - x(e^z - 1))", X, Single),
    entry(T::WDerivRec, "w_{n+1}(x) = x d/dx[(1 + x) w_n(x)]", X, Single),
    entry(T::F1Egf, "F_{m,1}(n;x) = n! [z^n] e^z/(1 - x(e^{mz} - 1))", MX, Single),
    entry(T::F2Egf, "F_{m,2}(n;x) = n! [z^n] e^z/(1 - (x/m)(e^{mz} - 1))", MX, Single),
    entry(T::FtEgf, "F~_{m,a}(n;x) = n! [z^n] m e^{-az}/(m - x(e^{mz} - 1))", MAX, Single),
    entry(
        T::NcwSum,
        "sum_k k! W~_{m,a}(n,k) x^k with W~ from the recurrence = same with W~ = sum_j C(n,j)(-a)^{n-j} m^{j-k} S(j,k)",
        MAX,
        Single,
    ),
    entry(T::NcwA0, "sum_k k! W~_{m,0}(n,k) x^k = sum_k k! m^{n-k} S(n,k) x^k", MX, Single),
    entry(T::SpecA0, "F~_{m,0}(n;x) = w_n(x/m) | corrected: m^n w_n(x/m)", MX, erratum(0)),
    entry(T::SpecAm1, "F~_{m,-1}(n;x) = F_{m,2}(n;x)", MX, Single),
    entry(T::Spec1mr, "F~_{1,-r}(n;x) = w_n(r;x)", RX, Single),
    entry(T::Thm1, "F~_{m,a}(n;x) = sum_k C(n,k) m^k w_k(x/m) (-a)^{n-k}", MAX, Single),
    entry(T::KarginE13, "w_n(r;x) = sum_k C(n,k) w_k(x) r^{n-k}", RX, Single),
    entry(T::Thm2, "x F~_{m,a-m}(n;x) = (m + x) F~_{m,a}(n;x) - (-a)^n m", MAX, Single),
    entry(T::KarginE14, "x w_n(r+1;x) = (1 + x) w_n(r;x) - r^n", RX, Single),
    entry(
        T::Spec6th,
        "x F~_{m,-m}(n;x) = (m + x) w_n(x/m) | corrected: (m + x) m^n w_n(x/m) - 0^n m",
        MX,
        erratum(1),
    ),
    entry(
        T::Spec7th,
        "(m + x) F~_{m,m}(n;x) = x w_n(x/m) - (-m)^{n+1} | corrected: x m^n w_n(x/m) - (-m)^{n+1}",
        MX,
        erratum(0),
    ),
    entry(
        T::Spec8th,
        "x m^n sum_k C(n,k) w_k(x/m) = (m + x) w_n(x/m) | corrected: x sum_k C(n,k) w_k(x/m) = (m + x) w_n(x/m) - 0^n m",
        MX,
        erratum(1),
    ),
    entry(
        T::Spec9th,
        "(m + x) m^n sum_k C(n,k) (-1)^{n-k} w_k(x/m) = x w_n(x/m) - (-m)^{n+1} | corrected: (m + x) sum_k C(n,k) (-1)^{n-k} w_k(x/m) = x w_n(x/m) + (-1)^n m",
        MX,
        erratum(0),
    ),
    entry(T::DilKurt1, "sum_k C(n,k) w_k = 2 w_n, n >= 1", Inputs::NONE, Single),
    entry(T::DilKurt2, "2 sum_k C(n,k) (-1)^k w_k = (-1)^n w_n + 1", Inputs::NONE, Single),
    entry(
        T::Thm3,
        "x sum_k C(n,k) F~_{m,a1}(k;x) F~_{m,a2}(n-k;x) = F~_{m,b}(n+1;x) + b F~_{m,b}(n;x), b = a1 + a2 + m",
        M.with(Inputs::A_PAIR).with(Inputs::X),
        Single,
    ),
    entry(
        T::Spec11th,
        "(m + x) sum_k C(n,k) w_k(x/m) w_{n-k}(x/m) = w_{n+1}(x/m) + m w_n(x/m) | corrected: m (w_{n+1}(x/m) + w_n(x/m))",
        MX,
        erratum(0),
    ),
    entry(
        T::Kargin1,
        "(x + 1) sum_k C(n,k) w_k(x) w_{n-k}(x) = w_{n+1}(x) + w_n(x)",
        X,
        Single,
    ),
    entry(
        T::Thm4,
        "(x2 - x1) sum_k C(n,k) F~_{m,a1}(k;x1) F~_{m,a2}(n-k;x2) = x2 F~_{m,a1+a2}(n;x2) - x1 F~_{m,a1+a2}(n;x1)",
        M.with(Inputs::A_PAIR).with(Inputs::X_PAIR),
        Single,
    ),
    entry(
        T::SpecThm4A0,
        "(x2 - x1) sum_k C(n,k) w_k(x1/m) w_{n-k}(x2/m) = x2 w_n(x2/m) - x1 w_n(x1/m) | corrected: same with every w_j(x/m) read as m^j w_j(x/m)",
        M.with(Inputs::X_PAIR),
        Reformulated,
    ),
    entry(
        T::Kargin2,
        "(x2 - x1) sum_k C(n,k) w_k(x1) w_{n-k}(x2) = x2 w_n(x2) - x1 w_n(x1)",
        Inputs::X_PAIR,
        Single,
    ),
    entry(
        T::BininvFwd,
        "F~_{m,a}(n;x) = sum_j (-1)^{n-j} C(n,j) m^j a^{n-j} w_j(x/m)",
        MAX,
        Single,
    ),
    entry(
        T::BininvInv,
        "m^n w_n(x/m) = sum_j C(n,j) a^{n-j} F~_{m,a}(j;x)",
        MAX,
        Single,
    ),
    entry(T::Reflect, "F~_{m,a}(n;x-m) = (-1)^n F~_{m,-a-m}(n;-x)", MAX, Single),
    entry(
        T::Thm5,
        "(m + x) F~_{m,a}(n;x) = x sum_k (-1)^{n+k} k! W~_{m,-a}(n,k) (m+x)^k + (-a)^n m, x != -m",
        MAX,
        Single,
    ),
    entry(
        T::Spec17th,
        "(m + x) w_n(x/m) = x sum_k (-1)^{n+k} k! m^{n-k} S(n,k) (m+x)^k | corrected: (m + x) m^n w_n(x/m) = ... + 0^n m",
        MX,
        erratum(1),
    ),
    entry(
        T::Spec18th,
        "(m + x) w_n(x/m) = x sum_k (-1)^{n+k} k! S^(m)(n,k) (m+x)^k | corrected: (m + x) m^n w_n(x/m) = ... + 0^n m",
        MX,
        erratum(1),
    ),
    entry(
        T::Kargin3,
        "(x + 1) w_n(x) = x sum_{k>=1} S(n,k) (-1)^{n+k} k! (x+1)^k, n >= 1",
        X,
        Single,
    ),
    entry(
        T::TwRec,
        "sum_k S^(m)(n,k) x^k = sum_k [S^(m)(n-1,k-1) + m k S^(m)(n-1,k)] x^k, n >= 1",
        MX,
        Single,
    ),
    entry(
        T::TwExplicit,
        "sum_k S^(m)(n,k) x^k = sum_k x^k (m^k k!)^{-1} sum_j (-1)^{k-j} C(k,j) (m j)^n",
        MX,
        Single,
    ),
    entry(
        T::HalfArg,
        "(m + 2x) F~_{m,2a}(n;x) = 2^{n+1} (m + x) F~_{m,a}(n;x^2/(m+2x)) - m F~_{m,2a}(n;-mx/(m+2x)), x != -m/2",
        MAX,
        Single,
    ),
    entry(
        T::Thm6,
        "(m+2x)^{n+1} F~_{m,2a}(n;x) = sum_k k! x^k [2^{n+1} (m+x) x^k W~_{m,a}(n,k) + (-m)^{k+1} W~_{m,2a}(n,k)] (m+2x)^{n-k}",
        MAX,
        Single,
    ),
    entry(
        T::Spec20th,
        "(m+2x)^{n+1} w_n(x/m) = sum_k k! x^k S^(m)(n,k) [2^{n+1} (m+x) x^k + (-m)^{k+1}] (m+2x)^{n-k} | corrected: m^n w_n(x/m) on the left",
        MX,
        erratum(0),
    ),
    entry(
        T::Kargin4,
        "(2x+1)^{n+1} w_n(x) = sum_k S(n,k) k! x^k [2^{n+1} (x+1) x^k + (-1)^{k+1}] (2x+1)^{n-k}",
        X,
        Single,
    ),
    entry(
        T::Series21,
        "F~_{m,a}(n;x) in enclosure of (m/(m+x)) sum_k (x/(m+x))^k (m k - a)^n",
        MAX,
        Single,
    ),
    entry(
        T::Spec22nd,
        "w_n(x/m) in enclosure of (m^{n+1}/(m+x)) sum_k (x/(m+x))^k k^n | corrected: prefactor m/(m+x)",
        MX,
        erratum(0),
    ),
    entry(
        T::Series23,
        "w_n(x) in enclosure of (1/(x+1)) sum_k (x/(x+1))^k k^n",
        X,
        Single,
    ),
    entry(T::Series24, "w_n in enclosure of sum_k k^n / 2^{k+1}", Inputs::NONE, Single),
];

/// Tags whose as-printed form is an erratum candidate.
pub fn erratum_candidates() -> impl Iterator<Item = IdentityTag> {
    CATALOG
        .iter()
        .filter(|e| matches!(e.kind, EntryKind::Erratum { .. }))
        .map(|e| e.tag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_tag_has_exactly_one_entry() {
        for tag in IdentityTag::ALL {
            assert_eq!(CATALOG.iter().filter(|e| e.tag == *tag).count(), 1, "{tag}");
        }
        assert_eq!(CATALOG.len(), IdentityTag::ALL.len());
    }

    #[test]
    fn names_round_trip() {
        for tag in IdentityTag::ALL {
            assert_eq!(tag.name().parse::<IdentityTag>().unwrap(), *tag);
        }
        assert_eq!("thm1".parse::<IdentityTag>().unwrap(), IdentityTag::Thm1);
        assert!(matches!(
            "THM99".parse::<IdentityTag>(),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn erratum_list() {
        let names: Vec<_> = erratum_candidates().map(|t| t.name()).collect();
        assert_eq!(
            names,
            [
                "SPEC_A0",
                "SPEC_6TH",
                "SPEC_7TH",
                "SPEC_8TH",
                "SPEC_9TH",
                "SPEC_11TH",
                "SPEC_17TH",
                "SPEC_18TH",
                "SPEC_20TH",
                "SPEC_22ND"
            ]
        );
    }
}

use core::fmt::{self, Write};

/// Leading decimal digit of `|x|`, or `None` for zero and non-finite input.
///
/// The digit is read from the shortest decimal representation that
/// round-trips to `x`, so values such as `0.001 * 1000.0` that land a few
/// ulps under a decade boundary are not misreported.
pub fn first_significant_digit(x: f64) -> Option<u8> {
    if !x.is_finite() || x == 0.0 {
        return None;
    }
    let mut first = FirstByte(None);
    write!(first, "{:e}", x.abs()).ok()?;
    match first.0 {
        Some(b @ b'1'..=b'9') => Some(b - b'0'),
        _ => None,
    }
}

struct FirstByte(Option<u8>);

impl Write for FirstByte {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        if self.0.is_none() {
            self.0 = s.bytes().next();
        }
        Ok(())
    }
}

/// A numeric text field after validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParsedNumber {
    /// Nonzero value with its leading decimal digit taken from the text.
    Significant {
        digit: u8,
        value: f64,
    },
    Zero,
    NonFinite,
}

impl ParsedNumber {
    pub fn digit(&self) -> Option<u8> {
        match *self {
            ParsedNumber::Significant { digit, .. } => Some(digit),
            _ => None,
        }
    }
}

/// Parses an integer, decimal or scientific-notation literal with optional
/// sign. `nan`, `inf` and `infinity` (any case) parse as non-finite.
/// Thousands separators, locale decimal commas and any other characters
/// make the field unparseable (`None`).
///
/// The leading digit is read from the decimal text itself, not from a
/// binary approximation.
pub fn parse_number(text: &str) -> Option<ParsedNumber> {
    let text = text.trim();
    let unsigned = text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('+'))
        .unwrap_or(text);
    if ["nan", "inf", "infinity"]
        .iter()
        .any(|w| unsigned.eq_ignore_ascii_case(w))
    {
        return Some(ParsedNumber::NonFinite);
    }

    let (mantissa, exponent) = match unsigned.find(['e', 'E']) {
        Some(i) => (&unsigned[..i], Some(&unsigned[i + 1..])),
        None => (unsigned, None),
    };
    if let Some(exp) = exponent {
        let digits = exp
            .strip_prefix('-')
            .or_else(|| exp.strip_prefix('+'))
            .unwrap_or(exp);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
    }
    let mut seen_digit = false;
    let mut seen_point = false;
    let mut leading = None;
    for b in mantissa.bytes() {
        match b {
            b'0'..=b'9' => {
                seen_digit = true;
                if leading.is_none() && b != b'0' {
                    leading = Some(b - b'0');
                }
            }
            b'.' if !seen_point => seen_point = true,
            _ => return None,
        }
    }
    if !seen_digit {
        return None;
    }
    match leading {
        None => Some(ParsedNumber::Zero),
        Some(digit) => {
            let value = text.parse::<f64>().ok()?;
            Some(ParsedNumber::Significant { digit, value })
        }
    }
}

/// Leading digit of a numeric literal, read in decimal. `None` for zero,
/// non-finite or unparseable text.
pub fn first_significant_digit_str(text: &str) -> Option<u8> {
    parse_number(text).and_then(|p| p.digit())
}

/// Counts of leading digits 1..=9 plus inputs that had none.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DigitHistogram {
    counts: [u64; 9],
    skipped: u64,
}

impl DigitHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: [u64; 9], skipped: u64) -> Self {
        Self { counts, skipped }
    }

    pub fn record(&mut self, x: f64) {
        self.record_digit(first_significant_digit(x));
    }

    pub fn record_digit(&mut self, digit: Option<u8>) {
        match digit {
            Some(d @ 1..=9) => self.counts[usize::from(d - 1)] += 1,
            _ => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, other: &DigitHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self.skipped += other.skipped;
    }

    /// Counts indexed by `digit - 1`.
    pub fn counts(&self) -> [u64; 9] {
        self.counts
    }

    pub fn count(&self, digit: u8) -> u64 {
        match digit {
            1..=9 => self.counts[usize::from(digit - 1)],
            _ => 0,
        }
    }

    pub fn skipped(&self) -> u64 {
        self.skipped
    }

    /// Inputs that contributed a digit.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn processed(&self) -> u64 {
        self.total() + self.skipped
    }

    /// Observed relative frequencies; all zero when nothing was counted.
    pub fn frequencies(&self) -> [f64; 9] {
        let total = self.total();
        let mut out = [0.0; 9];
        if total > 0 {
            for (o, &c) in out.iter_mut().zip(&self.counts) {
                *o = c as f64 / total as f64;
            }
        }
        out
    }
}

/// Single-pass leading-digit tally.
pub fn digit_histogram<I: IntoIterator<Item = f64>>(values: I) -> DigitHistogram {
    let mut hist = DigitHistogram::new();
    for v in values {
        hist.record(v);
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_first_digit() {
        assert_eq!(first_significant_digit(0.00321), Some(3));
        assert_eq!(first_significant_digit(-987.4), Some(9));
        assert_eq!(first_significant_digit(0.0), None);
        assert_eq!(first_significant_digit(-0.0), None);
        assert_eq!(first_significant_digit(f64::NAN), None);
        assert_eq!(first_significant_digit(f64::INFINITY), None);
        assert_eq!(first_significant_digit(f64::MIN_POSITIVE), Some(2));
        assert_eq!(first_significant_digit(5e-324), Some(5));
        assert_eq!(first_significant_digit(f64::MAX), Some(1));
        assert_eq!(first_significant_digit(0.1 * 3.0), Some(3));
        assert_eq!(first_significant_digit(0.001 * 1000.0), Some(1));
    }

    #[test]
    fn text_first_digit() {
        assert_eq!(first_significant_digit_str("0.00321"), Some(3));
        assert_eq!(first_significant_digit_str("-987.4"), Some(9));
        assert_eq!(first_significant_digit_str(" +4.5e-7 "), Some(4));
        assert_eq!(first_significant_digit_str("000.0"), None);
        assert_eq!(first_significant_digit_str("1e999"), Some(1));
        assert_eq!(first_significant_digit_str(".5"), Some(5));
        assert_eq!(first_significant_digit_str("7."), Some(7));
    }

    #[test]
    fn text_parse_classes() {
        assert_eq!(parse_number("0"), Some(ParsedNumber::Zero));
        assert_eq!(parse_number("-0.000e5"), Some(ParsedNumber::Zero));
        assert_eq!(parse_number("NaN"), Some(ParsedNumber::NonFinite));
        assert_eq!(parse_number("-Infinity"), Some(ParsedNumber::NonFinite));
        assert_eq!(
            parse_number("12.5"),
            Some(ParsedNumber::Significant {
                digit: 1,
                value: 12.5
            })
        );
        for bad in [
            "", "-", ".", "1,000", "1.2.3", "12e", "1e+", "abc", "0x10", "1_000", "3 4",
        ] {
            assert_eq!(parse_number(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn histogram_basics() {
        let h = digit_histogram((1..=9).map(f64::from));
        assert_eq!(h.counts(), [1; 9]);
        assert_eq!(h.skipped(), 0);

        let h = digit_histogram([0.0, f64::NAN, 10.0, 100.0]);
        assert_eq!(h.count(1), 2);
        assert_eq!(h.total(), 2);
        assert_eq!(h.skipped(), 2);
        assert_eq!(h.processed(), 4);
        assert_eq!(h.frequencies()[0], 1.0);
    }

    #[test]
    fn histogram_merge() {
        let mut a = digit_histogram([1.0, 2.0, 0.0]);
        let b = digit_histogram([2.0, 9.0]);
        a.merge(&b);
        assert_eq!(a, digit_histogram([1.0, 2.0, 0.0, 2.0, 9.0]));
    }
}

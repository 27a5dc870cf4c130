//! `%g`-style number rendering shared by expression display and CSV output.

/// Render `v` with `sig` significant digits, choosing fixed or scientific
/// notation the way C's `%.{sig}g` does and stripping trailing zeros.
pub fn sig_digits(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= sig as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, v)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::sig_digits;

    #[test]
    fn matches_c_percent_g() {
        assert_eq!(sig_digits(-2.0 / 3.0, 6), "-0.666667");
        assert_eq!(sig_digits(0.5, 6), "0.5");
        assert_eq!(sig_digits(120.0, 6), "120");
        assert_eq!(sig_digits(1234567.0, 6), "1.23457e+06");
        assert_eq!(sig_digits(1.5e-5, 6), "1.5e-05");
        assert_eq!(sig_digits(0.0001, 6), "0.0001");
        assert_eq!(sig_digits(4050.542025489, 15), "4050.542025489");
        assert_eq!(sig_digits(0.1 + 0.2, 15), "0.3");
        assert_eq!(sig_digits(0.0, 15), "0");
    }
}

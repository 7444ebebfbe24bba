//! Rounding to significant digits for printed and CSV output.

/// `x` rounded to `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x + 0.0;
    }
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x);
    // Avoid printing negative zero.
    rounded + 0.0
}

pub fn sig3(z: [f64; 3], digits: usize) -> [f64; 3] {
    z.map(|x| sig(x, digits))
}

/// Shortest form of `sig(x, digits)`; scientific notation outside `[1e-4, 1e15)`.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    let x = sig(x, digits);
    let a = x.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) || !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{:.*e}", digits.saturating_sub(1), x);
    match s.split_once('e') {
        Some((m, e)) if m.contains('.') => {
            format!("{}e{e}", m.trim_end_matches('0').trim_end_matches('.'))
        }
        _ => s,
    }
}

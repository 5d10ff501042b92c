/// Concatenation, element by element: `(s·t)[k]` is `s[k]` for `k < |s|` and
/// `t[k − |s|]` after that.
pub fn concat<T: Clone>(s: &[T], t: &[T]) -> Vec<T> {
    (0..s.len() + t.len()).map(|k| if k < s.len() { s[k].clone() } else { t[k - s.len()].clone() }).collect()
}

/// Reversal, element by element: `rev(s)[k] = s[n − 1 − k]`.
pub fn reversed<T: Clone>(s: &[T]) -> Vec<T> {
    let n = s.len();
    (0..n).map(|k| s[n - 1 - k].clone()).collect()
}

/// Fresh copy of `seq` rotated by `amount` (positive = left), written as the
/// two-case slice definition:
///
/// * `0 <= r < n`: `seq[r..n) · seq[0..r)`
/// * `−n < r <= 0`: `seq[n + r..n) · seq[0..n + r)`
///
/// Amounts with `|amount| >= n` are first reduced by truncated remainder,
/// keeping their sign.
pub fn oracle_rotate<T: Clone>(seq: &[T], amount: i64) -> Vec<T> {
    let n = seq.len() as i128;
    if n == 0 {
        return Vec::new();
    }
    let r = amount as i128 % n;
    let cut = if r >= 0 { r } else { n + r } as usize;
    concat(&seq[cut..], &seq[..cut])
}

/// Splits after every `\n`. A final line without a newline is its own unit,
/// so concatenating the units gives back `data` exactly.
pub fn split_lines(data: &[u8]) -> Vec<&[u8]> {
    data.split_inclusive(|&b| b == b'\n').collect()
}

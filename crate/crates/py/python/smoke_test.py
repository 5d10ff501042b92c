"""Smoke test for the pyrotkit extension module.

Build the module first, e.g. `maturin develop -m crates/py/Cargo.toml`, or
copy `target/release/libpyrotkit.so` to `pyrotkit.so` on the Python path.
"""

import pyrotkit as rk


def rotated(seq, r):
    return seq[r:] + seq[:r]


def main():
    assert rk.algorithms() == ["copy", "copy-native", "reverse", "swap-rec", "swap", "modulo"]

    out, counters = rk.rotate(b"ABCDEF", 2)
    assert out == b"CDEFAB", out
    assert counters.swaps == 4 and counters.aux_peak == 1, counters

    words = ["the", "quick", "brown", "fox", object()]
    for name in rk.algorithms():
        for amount in range(-12, 13):
            out, _ = rk.rotate(words, amount, name)
            assert out == rotated(words, amount % len(words)), (name, amount)
            assert out == rk.oracle_rotate(words, amount)

    _, counters = rk.rotate(list(range(6)), 2, "modulo")
    assert counters.writes == 6

    assert rk.normalize(-2, 6) == 4
    assert rk.wrap(14, 6) == 2
    assert rk.gcd(6, 4) == 2
    assert rk.tau(6, 4) == 3
    assert rk.mp(6, 4, 0, 1) == 4
    assert rk.invert_mp(6, 4, 2) == (0, 2)
    assert rk.dest_index(0, 6, 2) == 4
    assert rk.src_index(0, 6, 2) == 2

    dec = rk.decompose(6, 2)
    assert (dec.g, dec.tau) == (2, 3)
    assert dec.cycles() == [[0, 4, 2], [1, 5, 3]]

    result, counters = rk.run_checked("reverse", [1, 2, 3, 4, 5, 6], 2)
    assert result == [3, 4, 5, 6, 1, 2] and counters.swaps == 6

    for report in [rk.check_lemma_rev_cat(6), *rk.check_lemma_rot_swap(9), rk.check_lemma_invert_mp(32),
                   rk.check_rot_pointwise(16), rk.check_wrap_bounds(64)]:
        assert report.passed(), str(report)

    records = rk.sweep([8], ["swap", "copy"])
    assert len(records) == 14
    assert all(rec.elapsed_ns > 0 for rec in records)

    for bad in [lambda: rk.rotate("text", 1), lambda: rk.rotate([1], 1, "bogus"), lambda: rk.decompose(6, 0)]:
        try:
            bad()
        except (TypeError, ValueError):
            pass
        else:
            raise AssertionError("expected an error")

    print("pyrotkit smoke test passed")


if __name__ == "__main__":
    main()

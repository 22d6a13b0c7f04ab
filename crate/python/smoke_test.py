"""Smoke test for the pycobg extension module.

Build and install first, e.g.
    maturin build -m crates/python/Cargo.toml --release
    pip install target/wheels/pycobg-*.whl
"""

import json
import sys
from fractions import Fraction

import pycobg


def main() -> int:
    tp = pycobg.Matrix("legendre:even", "chebyshev_t:even", 4)
    assert tp.rows()[0] == ["1", "1/4", "9/64", "25/256"], tp.rows()
    assert tp.apply([0, 1, 0, 2]) == ["57/128", "297/256", "63/128", "231/256"]

    pt = tp.inverse()
    assert pt.rows()[0] == ["1", "-1/3", "-1/15", "-1/35"], pt.rows()
    assert (tp @ pt).is_identity()
    assert tp @ pt == pycobg.Matrix.identity("chebyshev_t:even", 4)
    assert tp @ pt != pycobg.Matrix.identity("legendre:even", 4)
    back = pt.apply([Fraction(57, 128), "297/256", "63/128", "231/256"])
    assert back == ["0", "1", "0", "2"], back

    assert pycobg.expand("hermite_physicist", 6, "chebyshev_t") == [
        (6, "2"), (4, "-48"), (2, "150"), (0, "80"),
    ]
    assert pycobg.polynomial("legendre_shifted", 3) == ["-1", "12", "-30", "20"]
    assert pycobg.verify(["monomial:even", "legendre:even", "chebyshev_t:even"], 4) == (9, True)
    assert pycobg.count(6, case3=True) == 12
    assert pycobg.count(7, case4=True) == 10

    th = pycobg.Matrix("hermite_physicist", "chebyshev_t", 8)
    doc = json.loads(th.compress(k1=1, case4=True))
    assert doc["rows"][0] == ["2", "-6", "20", "70"], doc
    assert pycobg.Matrix.from_json(th.to_json()) == th

    try:
        pycobg.Matrix("laguerre", "chebyshev_t", 7).compress(case4=True)
    except ValueError as e:
        assert "lossy" in str(e) or "drop" in str(e), e
    else:
        raise AssertionError("lossy compression was accepted")

    try:
        pycobg.Matrix("bessel", "legendre", 3)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown basis was accepted")

    print("pycobg smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

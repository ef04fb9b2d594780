"""Smoke tests for the _padichl extension module."""

import json
import sys

import _padichl as m


def test_signature_ops():
    st = m.signature_stats([3, 1, -1])
    assert st["size"] == 3
    assert st["weighted"] == -1
    assert st["mults"] == {3: 1, 1: 1, -1: 1}
    assert m.interlace("P", [1], [2, 0])
    assert not m.interlace("Q", [0, 0], [2, 2])
    sigs = m.enumerate_signatures(2, 0, 1)
    assert sigs == [[1, 1], [1, 0], [0, 0]]


def test_hall_littlewood():
    p = json.loads(m.hl_p(lam=[2, 0], n=2, param="t"))
    terms = {tuple(e): c for e, c in (tuple(t) for t in p["terms"])}
    assert (2, 0) in terms and (1, 1) in terms
    # coefficient of x1 x2 is 1 - t
    c = terms[(1, 1)]
    assert c["num"] == [[0, "1"], [1, "-1"]]


def test_coefficients():
    table = json.loads(m.lr_table("alt", [1, 0, 0, 0], [2, 1]))
    entries = {tuple(lam): c for lam, c in (tuple(e) for e in table["entries"])}
    assert entries[(3, 1)]["num"] == [[0, "1"], [1, "1"]]  # 1 + t
    g, sign_exp = m.hecke_g("alt", [1, 0, 0, 0], [1, 0], [2, 0])
    assert g == "q + 1"
    assert sign_exp == 0


def test_laws():
    assert m.corner_prob("her", [0, 0], [2], "1/3") == "4/45"
    assert m.invertible_prob("alt", 4, "2") == "7/16"
    assert m.invertible_prob("her", 2, "3") == "20/27"
    assert m.haar_sn_prob("her", 1, [3], "1/3") == "2/81"  # t^3 (1 - t)
    dist = json.loads(m.exact_distribution("haar", "her", n=2, t="1/3", cutoff=4))
    total = sum(eval_frac(p) for _, p in dist["atoms"]) + eval_frac(dist["tail"])
    assert abs(total - 1.0) < 1e-12


def eval_frac(s):
    if "/" in s:
        a, b = s.split("/")
        return int(a) / int(b)
    return float(int(s))


def test_oracles():
    assert m.brute_invertible_fraction("alt", 4, 2) == "7/16"
    assert m.brute_coset_count([1, 0], 2, 2) == 3


def test_simulation_reproducible():
    h1 = m.run_experiment("haar", "her", n=1, t="1/3", samples=2000, seed=5, threads=1)
    h4 = m.run_experiment("haar", "her", n=1, t="1/3", samples=2000, seed=5, threads=4)
    assert h1 == h4
    rep = json.loads(m.verify("haar", "her", n=1, t="1/3", samples=20000, seed=5,
                              threads=4, precision=8, cutoff=4))
    assert rep["pass"]


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())

"""Smoke test for the pydelent extension module."""

import pydelent


def main():
    prof = pydelent.stat("S", [2, 5, 4, 1, 3])
    assert prof["length"] == 6 and prof["del"] == 1, prof

    assert pydelent.canon("A", [3, 5, 4, 2, 1]) == "a1 | a2 a1^-1 | a3 a2 a1"
    assert pydelent.canon("S", [2, 5, 4, 1, 3]) == "s1 | 1 | s3 s2 | s4 s3 s2"

    assert pydelent.f_map([3, 5, 4, 2, 1]) == [4, 3, 2, 1]
    fib = pydelent.fiber([2, 5, 4, 1, 3])
    assert len(fib) == 2 and all(pydelent.f_map(v) == [2, 5, 4, 1, 3] for v in fib)

    assert len(pydelent.shuffles(5, [2, 3])) == 30

    text, terms = pydelent.genfun("S", 3)
    assert text == "1 + q + q*t + 2*q^2*t + q^3*t^2", text
    assert sum(c for c, _ in terms) == 6
    text, _ = pydelent.genfun("A", 2, q_stat="rmaj")
    assert text == "1 + 2*q*t", text

    names = pydelent.list_identities()
    assert "thm61-a" in names and "main-a" in names
    report = pydelent.verify("thm61-a", 4)
    assert report["pass"] and report["lhs"] == report["rhs"], report

    try:
        pydelent.stat("A", [2, 1, 3])
    except ValueError:
        pass
    else:
        raise AssertionError("odd permutation accepted for group A")

    print("pydelent smoke test: ok")


if __name__ == "__main__":
    main()

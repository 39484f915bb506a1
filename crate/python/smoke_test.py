"""Smoke test for the quiverfin_py extension module.

Build and run from the repository root:

    cargo build --release -p quiverfin-py --features extension-module
    cp target/release/libquiverfin_py.so python/quiverfin_py.so
    python3 python/smoke_test.py

or install it with `pip install ./crates/python` (needs maturin).
"""

from pathlib import Path

import quiverfin_py as qf

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def main():
    kron = qf.Setting.parse((CORPUS / "settings" / "kronecker.quiver").read_text())
    verdict = kron.classify(checked=True)
    assert verdict.is_infinite
    assert verdict.witness.kind == "A~1"
    assert kron.verify_witness(verdict.witness.report)
    assert [kron.count_orbits(p) for p in (2, 3, 5)] == [4, 5, 7]

    counter = qf.Setting.parse((CORPUS / "settings" / "counterexample.quiver").read_text())
    assert not counter.classify(checked=True).is_infinite

    e8 = qf.Setting.parse((CORPUS / "euclidean" / "e8.quiver").read_text())
    assert e8.tits_form() == 0
    assert e8.is_minimal_infinite()

    alg = qf.Algebra.parse((CORPUS / "algebras" / "counterexample.alg").read_text())
    assert not alg.finitely_many_orbits().is_infinite
    assert alg.or_conditions()["c3"][0] is False

    try:
        qf.Setting.parse("dim: a=1")
    except qf.QuiverfinError as err:
        assert "line 1" in str(err)
    else:
        raise AssertionError("parse error not raised")

    print("quiverfin_py smoke test passed:", verdict, counter.classify())


if __name__ == "__main__":
    main()

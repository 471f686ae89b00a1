"""Builds the extension with cargo, loads it, and exercises the main calls."""

import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[3]


def load():
    subprocess.run(["cargo", "build", "--release", "-p", "mixprod-python"], cwd=ROOT, check=True)
    built = ROOT / "target" / "release" / "libmixprod_py.so"
    dest = pathlib.Path(tempfile.mkdtemp()) / "mixprod_py.so"
    shutil.copy(built, dest)
    sys.path.insert(0, str(dest.parent))
    import mixprod_py

    return mixprod_py


def main():
    mp = load()
    ring = mp.Ring([("x", 3), ("y", 3)])

    l4 = mp.gmpi("ring x[1], y[1];\n(x1*y1^3, x1^2*y1^2, x1^3*y1)\n", [3, 3], "sqV")
    assert len(l4) == 15
    assert l4 == ring.ideal("sqV(x,1)*sqV(y,3) + sqV(x,2)*sqV(y,2) + sqV(x,3)*sqV(y,1)")
    assert l4.is_matroidal()
    cert = l4.linear_quotients()
    assert cert is not None
    assert l4.pd() == 3 and l4.reg() == 3
    table = l4.betti()
    assert table["pd"] == 3 and sum(e["rank"] for e in table["entries"]) == 50

    bad = ring.ideal("sqV(y,3) + sqV(x,2)*sqV(y,1)")
    assert not bad.is_polymatroidal()
    assert not bad.is_normal_up_to(2)
    assert bad.report("is-polymatroidal")["witness"] is not None

    sq = ring.parse("(x1^2, y1^2)")
    assert sq.integral_closure() == ring.parse("(x1^2, x1*y1, y1^2)")
    assert not sq.is_integrally_closed()
    assert (sq ** 2).contains([2, 0, 0, 2, 0, 0])

    assert mp.run("ring x[3], y[3]; reg staircase(4);") == "3\n"
    try:
        ring.ideal("sqV(x 2)")
    except ValueError as e:
        assert "1:" in str(e)
    else:
        raise AssertionError("syntax error not raised")
    print("python smoke test passed")


if __name__ == "__main__":
    main()

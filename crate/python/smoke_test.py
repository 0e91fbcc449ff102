#!/usr/bin/env python3
"""Smoke test for the lrembed Python bindings.

Builds nothing itself: it expects `cargo build --release -p lrembed-py` to
have produced the extension library, copies it next to a temp directory under
the import name `lrembed`, and exercises the main entry points.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_library() -> Path:
    candidates = [
        REPO / "target" / "release" / "liblrembed_py.so",
        REPO / "target" / "debug" / "liblrembed_py.so",
        REPO / "target" / "release" / "liblrembed_py.dylib",
        REPO / "target" / "debug" / "liblrembed_py.dylib",
    ]
    for c in candidates:
        if c.exists():
            return c
    print("building the extension module (cargo build --release -p lrembed-py)")
    subprocess.run(
        ["cargo", "build", "--release", "-p", "lrembed-py"], cwd=REPO, check=True
    )
    return candidates[0]


def main() -> None:
    lib = locate_library()
    tmp = Path(tempfile.mkdtemp(prefix="lrembed_py_"))
    suffix = ".so" if lib.suffix == ".so" else ".so"
    shutil.copy(lib, tmp / f"lrembed{suffix}")
    sys.path.insert(0, str(tmp))

    import lrembed

    # partitions
    assert lrembed.conjugate([5, 2]) == [2, 2, 1, 1, 1]
    assert lrembed.dominance_leq([5, 3, 2, 2], [5, 3, 3, 1])
    assert not lrembed.dominance_leq([5, 3, 3, 1], [5, 3, 2, 2])

    # the five-component family
    tabs = lrembed.enumerate_tableaux([3, 2], [5, 4, 3, 2, 1], [4, 3, 2, 1])
    assert len(tabs) == 5, f"expected 5 tableaux, got {len(tabs)}"
    assert all(t.content() == [3, 2] for t in tabs)

    # pole calculus: P((1,3,4)) lives on blocks (5,2) with entries in rows 2, 4, 5
    t = lrembed.pole_tableau([1, 3, 4])
    assert t.outer() == [5, 2]
    assert t.grid() == [[0, 0], [0, 1], [0], [2], [3]]
    assert lrembed.pole_roundtrip([1, 3, 4], prime=5) == [1, 3, 4]

    # the same tableau recomputed from explicit matrices over F_5:
    # generator T^2 b_5 + T b_2 in coordinates (block 5 then block 2)
    t2 = lrembed.embedding_tableau(5, [5, 2], [[0, 0, 1, 0, 0, 0, 1]])
    assert t2 == t

    # classification: the four-map example has 2 classes, 1 with the property
    example = lrembed.Tableau.from_grid([[0, 0, 1, 1], [0, 0, 2], [1, 2], [3]])
    classes = example.partial_map_classes()
    assert len(classes) == 2
    ebp = [c for c in classes if c["ebp"]]
    assert len(ebp) == 1
    assert sorted(ebp[0]["poles"]) == [[0, 1], [0, 2, 3], [2]]

    # endomorphism submodule count
    assert lrembed.endo_submodule_count([5, 2]) == 12

    # boundary poset of the intro shape: 5 nodes, 5 Hasse edges, certified
    poset = lrembed.boundary_poset([3, 2], [5, 4, 3, 2, 1], [4, 3, 2, 1], certify=True)
    assert len(poset["nodes"]) == 5
    assert len(poset["hasse_edges"]) == 5
    assert all(cert for (_, _, cert) in poset["box_edges"])

    dot = lrembed.hasse_dot([3, 2], [5, 4, 3, 2, 1], [4, 3, 2, 1])
    assert dot.count("->") == 5

    print("lrembed python bindings: all smoke checks passed")


if __name__ == "__main__":
    main()

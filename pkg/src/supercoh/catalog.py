"""Built-in example algebras, stored in the same JSON shape the CLI reads.

The entries span purely even, purely odd and mixed algebras at p = 3 and
p = 5, with trivial and adjoint coefficient modules.  Expected six-term
dimensions are recorded where an independent hand or brute-force oracle
pinned them; `None` means the engine's output is checked only against the
exactness verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    description: str
    data: dict
    module_name: str
    expected_dims: tuple | None = None


def _one_dim(p, pmap_coeff):
    return {
        "p": p,
        "even": ["x"],
        "odd": [],
        "brackets": {},
        "pmap": {"x": {"x": pmap_coeff} if pmap_coeff else {}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _heisenberg(p):
    return {
        "p": p,
        "even": ["z"],
        "odd": ["y"],
        "brackets": {"[y,y]": {"z": 1}},
        "pmap": {"z": {}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _borel(p):
    return {
        "p": p,
        "even": ["h", "x"],
        "odd": [],
        "brackets": {"[h,x]": {"x": 1}},
        "pmap": {"h": {"h": 1}, "x": {}},
        "modules": {
            "k": {"even": ["m"], "odd": [], "action": {}},
            "adjoint": {
                "even": ["H", "X"],
                "odd": [],
                "action": {"h": [[0, 0], [0, 1]], "x": [[0, 0], [-1, 0]]},
            },
            "dual": {
                "even": ["H*", "X*"],
                "odd": [],
                "action": {"h": [[0, 0], [0, -1]], "x": [[0, 1], [0, 0]]},
            },
        },
    }


def _borel_semidirect(p):
    # the trivial extension of the borel line by its one-dimensional
    # trivial module, taken as a 3-dimensional algebra in its own right
    return {
        "p": p,
        "even": ["h", "x", "c"],
        "odd": [],
        "brackets": {"[h,x]": {"x": 1}},
        "pmap": {"h": {"h": 1}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _odd_line(p):
    return {
        "p": p,
        "even": [],
        "odd": ["y"],
        "brackets": {},
        "pmap": {},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _abelian_plane(p):
    return {
        "p": p,
        "even": ["x1", "x2"],
        "odd": [],
        "brackets": {},
        "pmap": {"x1": {}, "x2": {}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _torus_null_plane(p):
    # abelian plane with mixed p-map: x1^[p] = x1, x2^[p] = 0; the only
    # catalog entry whose final arrow (the obstruction map) is nonzero
    return {
        "p": p,
        "even": ["x1", "x2"],
        "odd": [],
        "brackets": {},
        "pmap": {"x1": {"x1": 1}, "x2": {}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _mixed_line(p):
    # even x acting on odd y: [x, y] = y, x^[p] = x
    return {
        "p": p,
        "even": ["x"],
        "odd": ["y"],
        "brackets": {"[x,y]": {"y": 1}},
        "pmap": {"x": {"x": 1}},
        "modules": {"k": {"even": ["m"], "odd": [], "action": {}}},
    }


def _heisenberg_adjoint(p):
    return {
        "p": p,
        "even": ["z"],
        "odd": ["y"],
        "brackets": {"[y,y]": {"z": 1}},
        "pmap": {"z": {}},
        "modules": {
            "k": {"even": ["m"], "odd": [], "action": {}},
            "adjoint": {
                "even": ["Z"],
                "odd": ["Y"],
                "action": {"z": [[0, 0], [0, 0]], "y": [[0, 1], [0, 0]]},
            },
        },
    }


ENTRIES = (
    CatalogEntry(
        "a1-null", "one even generator, zero p-map, trivial coefficients (p=3)",
        _one_dim(3, 0), "k", (1, 1, 1, 1, 0, 0)),
    CatalogEntry(
        "a2-torus", "one even generator, x^[p] = x, trivial coefficients (p=3)",
        _one_dim(3, 1), "k", (0, 1, 1, 0, 0, 0)),
    CatalogEntry(
        "a3-heisenberg", "super line [y,y] = z, trivial coefficients (p=3)",
        _heisenberg(3), "k", (0, 0, 1, 1, 0, 0)),
    CatalogEntry(
        "a4-borel", "[h,x] = x with h^[p] = h, trivial coefficients (p=3)",
        _borel(3), "k", (0, 1, 2, 1, 0, 0)),
    CatalogEntry(
        "a4-borel-adjoint", "[h,x] = x acting on its adjoint module (p=3)",
        _borel(3), "adjoint", None),
    CatalogEntry(
        "a4-borel-dual", "[h,x] = x acting on the dual of its adjoint (p=3)",
        _borel(3), "dual", None),
    CatalogEntry(
        "a5-odd-line", "one odd generator, [y,y] = 0, trivial coefficients (p=3)",
        _odd_line(3), "k", (0, 0, 0, 1, 1, 0)),
    CatalogEntry(
        "a6-abelian-plane", "two even generators, zero p-map (p=3)",
        _abelian_plane(3), "k", (2, 2, 2, 3, 1, 0)),
    CatalogEntry(
        "a7-mixed-line", "[x,y] = y with even x, odd y, x^[p] = x (p=3)",
        _mixed_line(3), "k", (0, 1, 1, 0, 0, 0)),
    CatalogEntry(
        "a8-torus-null-plane",
        "abelian plane, x1^[p] = x1, x2^[p] = 0; nonzero obstruction map (p=3)",
        _torus_null_plane(3), "k", (1, 2, 2, 1, 1, 1)),
    CatalogEntry(
        "a9-borel-semidirect",
        "the borel line extended by a central generator; every space nonzero (p=3)",
        _borel_semidirect(3), "k", (1, 2, 3, 2, 1, 1)),
    CatalogEntry(
        "a3-heisenberg-adjoint", "super line acting on its adjoint module (p=3)",
        _heisenberg_adjoint(3), "adjoint", None),
    CatalogEntry(
        "a1-null-p5", "one even generator, zero p-map (p=5)",
        _one_dim(5, 0), "k", (1, 1, 1, 1, 0, 0)),
    CatalogEntry(
        "a2-torus-p5", "one even generator, x^[p] = x (p=5)",
        _one_dim(5, 1), "k", (0, 1, 1, 0, 0, 0)),
    CatalogEntry(
        "a3-heisenberg-p5", "super line [y,y] = z (p=5)",
        _heisenberg(5), "k", (0, 0, 1, 1, 0, 0)),
)


def entry_ids():
    return tuple(e.entry_id for e in ENTRIES)


def get_entry(entry_id):
    for e in ENTRIES:
        if e.entry_id == entry_id:
            return e
    raise KeyError(f"unknown catalog entry {entry_id!r}")

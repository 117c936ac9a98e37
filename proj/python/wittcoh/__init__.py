"""Exact cohomology computations for Witt-type Lie algebras.

Rationals are accepted as int, str or Fraction and returned as Fraction.
Elements use the text form "2*L[1] + -1/3*A[0] + 1*c[Vir]".
"""

import json
from fractions import Fraction

from ._wittcoh import (
    Algebra,
    WittError,
    check_f_equivariance,
    cubic_mixing_extension,
    exact_sequence_report,
    h1_dimension,
    h2_dimensions,
    hl2_dimension,
    inner_identity_check,
    inv_dimension,
    tables,
    verify,
    verify_extension,
    vir_a,
    vir_b,
    virasoro,
)
from . import _wittcoh

__all__ = [
    "Algebra", "WittError", "check_f_equivariance", "compose_auts", "cubic_mixing_extension",
    "exact_sequence_report", "h1_dimension", "h2_dimensions", "hl2_dimension", "inner_identity_check",
    "inverse_aut", "apply_aut", "check_aut", "inv_dimension", "solve", "tables", "verify",
    "verify_extension", "vir_a", "vir_b", "virasoro",
]


def _aut_json(s):
    d = {
        "k": int(s.get("k", 0)),
        "a": str(Fraction(s.get("a", 0))),
        "b": str(Fraction(s.get("b", 0))),
        "alpha": str(Fraction(s.get("alpha", 1))),
        "xi": str(Fraction(s.get("xi", 1))),
        "inner": [[int(i), str(Fraction(c))] for i, c in s.get("inner", [])],
    }
    return json.dumps(d)


def _aut_dict(text):
    d = json.loads(text)
    out = {k: Fraction(d[k]) for k in ("a", "b", "alpha", "xi")}
    out["k"] = d["k"]
    out["inner"] = [(i, Fraction(c)) for i, c in d["inner"]]
    return out


def compose_auts(s1, s2, spec):
    """Parameters of s1 after s2; automorphisms are dicts with k, a, b, alpha, xi, inner."""
    return _aut_dict(_wittcoh._compose_auts(_aut_json(s1), _aut_json(s2), spec))


def inverse_aut(s, spec):
    return _aut_dict(_wittcoh._inverse_aut(_aut_json(s), spec))


def apply_aut(s, spec, x):
    return _wittcoh._apply_aut(_aut_json(s), spec, x)


def check_aut(s, spec, N=8):
    return _wittcoh._check_aut(_aut_json(s), spec, N)


def _opt(v):
    return None if v is None else str(v)


def solve(target, algebra=None, lam=None, a=None, b=None, window=8):
    """Kernel or quotient basis for one algebra; basis values come back as Fractions."""
    r = json.loads(_wittcoh._solve(target, algebra, _opt(lam), _opt(a), _opt(b), window))
    r["basis"] = [{var: Fraction(val) for var, val in vec} for vec in r["basis"]]
    return r

"""JSON form of ScalarExt: {"tExp", "num", "den", "numLow", "denLow", "level"}.

Rationals are written as "p/q" strings (integers without a slash).
"""

from __future__ import annotations

from gmpy2 import mpq

from .cyclotomic import field
from .scalar import ScalarExt


def _rat(x) -> str:
    return str(mpq(x))


def scalar_to_json(x: ScalarExt) -> dict:
    r = x.reduced()
    return {
        "level": r.level,
        "tExp": r.t_exp,
        "numLow": r.shift,
        "num": [[_rat(c) for c in coeffs] for coeffs in r.num],
        "denLow": 0,
        "den": [[_rat(c) for c in coeffs] for coeffs in r.den],
    }


def scalar_from_json(obj: dict, level: int | None = None) -> ScalarExt:
    level = obj.get("level", level)
    if level is None:
        raise ValueError("level missing from serialized scalar")
    F = field(level)

    def vec(rows):
        out = []
        for row in rows:
            if len(row) != F.degree:
                raise ValueError(f"coefficient vector of length {len(row)}, expected {F.degree}")
            out.append(tuple(mpq(v) for v in row))
        return tuple(out)

    num, den = vec(obj["num"]), vec(obj["den"])
    if not num:
        return ScalarExt.zero(level)
    shift = int(obj.get("numLow", 0)) - int(obj.get("denLow", 0))
    return ScalarExt(F, shift, num, den, int(obj.get("tExp", 0)))

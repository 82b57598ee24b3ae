"""Dense univariate polynomials in s over a :class:`CycField`.

A polynomial is a tuple of field-element tuples, lowest degree first, with no
trailing zero coefficients.  The zero polynomial is ``()``.  Every function
takes the field as first argument; nothing here allocates wrapper objects.
"""

from __future__ import annotations

from .cyclotomic import CycField


def strip(F: CycField, a) -> tuple:
    a = list(a)
    while a and not any(a[-1]):
        a.pop()
    return tuple(a)


def low_zeros(a: tuple) -> int:
    k = 0
    while k < len(a) and not any(a[k]):
        k += 1
    return k


def add(F: CycField, a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    if len(a) == len(b):
        return strip(F, out)
    return tuple(out)


def sub(F: CycField, a: tuple, b: tuple) -> tuple:
    return add(F, a, neg(F, b))


def neg(F: CycField, a: tuple) -> tuple:
    return tuple(F.neg(x) for x in a)


def scale(F: CycField, a: tuple, c: tuple) -> tuple:
    if not any(c):
        return ()
    return tuple(F.mul(x, c) for x in a)


def shift_up(F: CycField, a: tuple, k: int) -> tuple:
    if not a or k == 0:
        return a
    return (F.zero,) * k + a


def mul(F: CycField, a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(F, b, a[0])
    if len(b) == 1:
        return scale(F, a, b[0])
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not any(x):
            continue
        for j, y in enumerate(b):
            if any(y):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return strip(F, out)


def divmod_(F: CycField, a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv_lead = F.inv(b[-1])
    rem = list(a)
    quo = [F.zero] * (len(a) - len(b) + 1)
    db = len(b) - 1
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + db]
        if not any(c):
            continue
        c = F.mul(c, inv_lead)
        quo[k] = c
        for j, y in enumerate(b):
            if any(y):
                rem[k + j] = F.sub(rem[k + j], F.mul(c, y))
    return strip(F, quo), strip(F, rem[:db])


def monic(F: CycField, a: tuple) -> tuple:
    if not a:
        return a
    lead = a[-1]
    if lead == F.one:
        return a
    return scale(F, a, F.inv(lead))


def gcd(F: CycField, a: tuple, b: tuple) -> tuple:
    """Monic gcd by the Euclidean algorithm (remainders kept monic)."""
    a, b = monic(F, a), monic(F, b)
    while b:
        _, r = divmod_(F, a, b)
        a, b = b, monic(F, r)
    return a


def reverse(a: tuple) -> tuple:
    return tuple(reversed(a))


def evaluate(coeff_values: list[complex], x: complex) -> complex:
    acc = 0j
    for c in reversed(coeff_values):
        acc = acc * x + c
    return acc

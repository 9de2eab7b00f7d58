"""Shared fixtures and generators for the test suite."""

from __future__ import annotations

import bisect

from gaussgenus import (
    NEGATIVE,
    OVER,
    POSITIVE,
    UNDER,
    UNSIGNED,
    GaussCode,
    Unit,
)

TREFOIL = "O1-U2-O3-U1-O2-U3-"
TREFOIL_CYCLES = ("O1-U1-O2-U2-O3-U3-", "U1-O1-U2-O2-U3-O3-")

EIGHT_20 = "O1+U2-U3+O4+O5-U1+U6-O7-U8-U5-O2-O6-U7-O3+U4+O8-"
EIGHT_20_TRIMMED_45 = "O1+U2-U3+U1+U6-O7-U8-O2-O6-U7-O3+O8-"
EIGHT_20_MOVED_45 = "O1+U12+U2-U3+U9-O9-O10+O11-O12+U1+U6-O7-U8-O2-U11-O6-U7-U10+O3+O8-"
EIGHT_20_GUIDE_45 = "U3+U1+O1+U2-O2-O6-U6-O7-U7-O3+"

RII_PAIR = "O1+U2-U1+O2-"

DT_GENUS3 = "-12 26 22 -14 28 -2 -20 30 -24 8 -32 -16 4 10 18 -6"
DT_GENUS5_MISPRINT = "4 10 -26 -22 -18 2 20 -26 -32 -28 14 30 -6 -12 -8 24"
DT_GENUS5 = "4 10 -26 -22 -18 2 20 -16 -32 -28 14 30 -6 -12 -8 24"


def random_code(rng, n, signed=True) -> GaussCode:
    """Uniform random chord diagram with random passes and signs."""
    pos = list(range(2 * n))
    rng.shuffle(pos)
    units = [None] * (2 * n)
    for lab in range(1, n + 1):
        a, b = pos[2 * lab - 2], pos[2 * lab - 1]
        if rng.random() < 0.5:
            a, b = b, a
        sign = rng.choice((POSITIVE, NEGATIVE)) if signed else UNSIGNED
        units[a] = Unit(OVER, lab, sign)
        units[b] = Unit(UNDER, lab, sign)
    return GaussCode(units)


def braid_knot_code(rng, max_strands=5, max_len=12) -> GaussCode:
    """Gauss code of a random braid closure with one component.

    Unlike :func:`random_code`, the output is always planar-realizable, so
    knot invariants must survive the moves applied to it.
    """
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(2, max_len)
        word = [(rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)]
        passes = []
        slot, t = 1, 0
        start = (slot, t)
        while True:
            j, eps = word[t]
            if slot in (j, j + 1):
                left = slot == j
                over = (eps == 1) == left  # positive letter: left strand on top
                passes.append((t, OVER if over else UNDER, POSITIVE if eps == 1 else NEGATIVE))
                slot = j + 1 if left else j
            t += 1
            if t == length:
                t = 0
            if (slot, t) == start:
                break
        if len(passes) != 2 * length:
            continue  # closure has several components, retry
        relabel: dict[int, int] = {}
        units = [
            Unit(kind, relabel.setdefault(letter, len(relabel) + 1), sign)
            for letter, kind, sign in passes
        ]
        return GaussCode(units)


# -- knot-group fingerprint --------------------------------------------------
#
# Alexander polynomial of the Wirtinger presentation, evaluated over GF(p)
# at a root of unity and canonicalized up to the unit group {+-t^k}.  Equal
# knots give equal fingerprints, so any knot-type-preserving operation on a
# realizable code must keep it fixed.

_FIELDS = ((20011, 78), (30013, 9686))
_UNIT_SETS = []
for _p, _t in _FIELDS:
    units, v = set(), 1
    while v not in units:
        units.update((v, _p - v))
        v = v * _t % _p
    _UNIT_SETS.append(sorted(units))


def _det_mod(matrix, p):
    m = [row[:] for row in matrix]
    det = 1
    for col in range(len(m)):
        piv = next((r for r in range(col, len(m)) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        inv = pow(m[col][col], p - 2, p)
        det = det * m[col][col] % p
        for r in range(col + 1, len(m)):
            f = m[r][col] * inv % p
            if f:
                for c in range(col, len(m)):
                    m[r][c] = (m[r][c] - f * m[col][c]) % p
    return det % p


def _alexander_eval(code: GaussCode, t: int, p: int) -> int:
    if code.n == 0:
        return 1 % p
    unders = sorted(i for i, u in enumerate(code.units) if u.kind == UNDER)
    narcs = len(unders)

    def arc_of(pos):
        return bisect.bisect_left(unders, pos) % narcs

    rows = [[0] * narcs for _ in range(narcs)]
    for r, label in enumerate(sorted(code.labels)):
        a, b = code.positions_of(label)
        over_pos, under_pos = (a, b) if code.units[a].kind == OVER else (b, a)
        j = unders.index(under_pos)
        arc_in, arc_out, arc_over = j, (j + 1) % narcs, arc_of(over_pos)
        if code.units[a].sign == POSITIVE:
            rows[r][arc_over] += 1 - t
            rows[r][arc_in] += t
            rows[r][arc_out] -= 1
        else:
            rows[r][arc_over] += t - 1
            rows[r][arc_in] += 1
            rows[r][arc_out] -= t
    return _det_mod([row[1:] for row in rows[1:]], p)


def knot_fingerprint(code: GaussCode) -> tuple[int, ...]:
    out = []
    for (p, t), units in zip(_FIELDS, _UNIT_SETS):
        d = _alexander_eval(code, t, p)
        out.append(0 if d == 0 else min(d * u % p for u in units))
    return tuple(out)

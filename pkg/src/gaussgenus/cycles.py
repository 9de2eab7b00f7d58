"""Seifert-circle decomposition and diagram genus of a Gauss code.

Smoothing every crossing of an n-crossing diagram coherently with the
orientation splits it into s circles; the spanning surface built on them has
genus (n - s + 1) / 2.  On the code, a circle corresponds to an orbit of
sigma(i) = successor(partner(i)): jump the chord, then step one unit along
the cycle.  The bare unknot (empty code) counts as one circle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import GaussCode, GaussCodeError, InternalInvariantError, Unit, unit_order_key


def sigma_orbit(code: GaussCode, start: int) -> tuple[int, ...]:
    """Positions visited from ``start`` under jump-to-partner-then-step."""
    partner = code.partner
    m = len(code.units)
    orbit = [start]
    x = (partner[start] + 1) % m
    while x != start:
        orbit.append(x)
        x = (partner[x] + 1) % m
    return tuple(orbit)


def _interleave(code: GaussCode, orbit: tuple[int, ...]) -> tuple[Unit, ...]:
    # Recorded walk: each orbit element followed by its chord partner.
    out = []
    for x in orbit:
        out.append(code.units[x])
        out.append(code.units[code.partner[x]])
    return tuple(out)


def _recorded(code: GaussCode, orbit: tuple[int, ...]) -> tuple[Unit, ...]:
    # Phase is a free choice among orbit elements; print the least walk.
    best = None
    best_key = None
    for s in range(len(orbit)):
        cand = _interleave(code, orbit[s:] + orbit[:s])
        key = tuple(unit_order_key(u) for u in cand)
        if best is None or key < best_key:
            best, best_key = cand, key
    return best if best is not None else ()


@dataclass(frozen=True)
class Cycle:
    """One Seifert circle: its position orbit and the printable unit walk.

    ``recorded`` has even length; its steps alternate between chord steps
    (consecutive units share a label) and arc steps (consecutive positions
    on the circle).
    """

    orbit: tuple[int, ...]
    recorded: tuple[Unit, ...]

    def serialize(self) -> str:
        return "".join(str(u) for u in self.recorded)


@dataclass(frozen=True)
class CycleDecomposition:
    """All Seifert circles of a code, plus which circle traverses each arc.

    ``arc_owner[i]`` is the index of the cycle running along the gap between
    positions i and i+1.
    """

    cycles: tuple[Cycle, ...]
    arc_owner: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.cycles)


def cycles(code: GaussCode) -> CycleDecomposition:
    """Decompose the smoothed diagram into its circles.

    >>> from gaussgenus import parse_gauss
    >>> cycles(parse_gauss("O1-U2-O3-U1-O2-U3-")).s
    2
    """
    m = len(code.units)
    if m == 0:
        return CycleDecomposition(cycles=(Cycle((), ()),), arc_owner=())
    owner = [-1] * m
    found = []
    for i in range(m):
        if owner[i] >= 0:
            continue
        orbit = sigma_orbit(code, i)
        for x in orbit:
            owner[x] = len(found)
        found.append(Cycle(orbit=orbit, recorded=_recorded(code, orbit)))
    arc_owner = tuple(owner[(i + 1) % m] for i in range(m))
    return CycleDecomposition(cycles=tuple(found), arc_owner=arc_owner)


def genus(code: GaussCode) -> int:
    """Genus of the spanning surface the smoothing produces.

    Sign and pass data do not matter; only the chord pairing does.
    """
    s = cycles(code).s
    doubled = code.n - s + 1
    if doubled % 2 or doubled < 0:
        raise InternalInvariantError(
            f"impossible circle count s={s} for n={code.n} (n + s must be odd)"
        )
    return doubled // 2


def remove_chords(code: GaussCode, labels) -> GaussCode:
    """Delete both passes of every named crossing, keeping cyclic order."""
    labels = frozenset(labels)
    missing = labels - code.labels
    if missing:
        raise GaussCodeError(f"unknown label {min(missing)}")
    return GaussCode(u for u in code.units if u.label not in labels)


def chord_removal_drops_genus(code: GaussCode, label: int) -> bool:
    """Whether deleting this one crossing lowers the genus (by exactly one).

    True iff both passes of the crossing lie on a single circle of the
    decomposition; otherwise the genus is unchanged.
    """
    a, b = code.positions_of(label)
    decomposition = cycles(code)
    owner = {}
    for idx, cyc in enumerate(decomposition.cycles):
        for x in cyc.orbit:
            owner[x] = idx
    return owner[a] == owner[b]

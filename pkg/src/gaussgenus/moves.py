"""Bridges, the genus-reducing bridge replacement, and RII reduction.

A bridge is a cyclically contiguous run of all-over (or all-under) passes.
Replacing a bridge reroutes that strand along the interval left by smoothing
the rest of the diagram, which never raises the diagram genus and lowers it
exactly when two of the arcs flanking the bridge lie on one Seifert circle.
All operations are pure; codes are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import (
    NEGATIVE,
    OVER,
    POSITIVE,
    UNDER,
    GaussCode,
    GaussCodeError,
    InternalInvariantError,
    Unit,
    canonical_rotation,
    flip_passes,
)
from .cycles import cycles, genus, remove_chords, sigma_orbit

_KIND_ALIASES = {
    "O": OVER,
    "U": UNDER,
    "over": OVER,
    "under": UNDER,
    "both": "both",
}


@dataclass(frozen=True)
class Bridge:
    """A same-pass run: positions in run order with their crossing labels."""

    kind: str
    positions: tuple[int, ...]
    labels: tuple[int, ...]
    maximal: bool

    def __len__(self) -> int:
        return len(self.positions)


def bridge_at(code: GaussCode, start: int, length: int) -> Bridge:
    """The bridge occupying ``length`` positions from ``start``."""
    m = len(code.units)
    if m == 0 or not 1 <= length <= m:
        raise GaussCodeError(f"no bridge of length {length} in a code of {m} units")
    start %= m
    positions = tuple((start + t) % m for t in range(length))
    kind = code.units[start].kind
    labels = []
    for p in positions:
        u = code.units[p]
        if u.kind != kind:
            raise GaussCodeError(f"run at {start} mixes passes (position {p} is {u.kind})")
        labels.append(u.label)
    maximal = (
        length == m
        or (
            code.units[(start - 1) % m].kind != kind
            and code.units[(start + length) % m].kind != kind
        )
    )
    return Bridge(kind=kind, positions=positions, labels=tuple(labels), maximal=maximal)


def enumerate_bridges(code: GaussCode, kind: str = "both", min_len: int = 1) -> list[Bridge]:
    """All maximal bridges of the requested kind(s) with length >= min_len.

    Wrap-around runs are handled; bridges are ordered by the smallest
    position they contain.
    """
    want = _KIND_ALIASES.get(kind)
    if want is None:
        raise GaussCodeError(f"bad bridge kind {kind!r}")
    if min_len < 1:
        raise GaussCodeError("min_len must be positive")
    m = len(code.units)
    if m == 0:
        return []
    starts = [i for i in range(m) if code.units[i].kind != code.units[i - 1].kind]
    bridges = []
    for idx, st in enumerate(starts):
        nxt = starts[(idx + 1) % len(starts)]
        length = (nxt - st) % m
        b = bridge_at(code, st, length)
        if len(b) >= min_len and want in ("both", b.kind):
            bridges.append(b)
    bridges.sort(key=lambda b: min(b.positions))
    return bridges


def find_bridge(code: GaussCode, labels) -> Bridge:
    """The maximal bridge whose crossing set is exactly ``labels``."""
    target = frozenset(labels)
    for b in enumerate_bridges(code):
        if frozenset(b.labels) == target:
            return b
    pretty = ",".join(str(x) for x in sorted(target))
    raise GaussCodeError(f"labels {{{pretty}}} do not form a maximal bridge")


def _require_bridge(code: GaussCode, bridge: Bridge) -> None:
    m = len(code.units)
    if m == 0 or not bridge.positions or len(bridge.positions) != len(bridge.labels):
        raise GaussCodeError("bridge not contained in code")
    prev = None
    for p, label in zip(bridge.positions, bridge.labels):
        if not 0 <= p < m:
            raise GaussCodeError("bridge not contained in code")
        u = code.units[p]
        if u.kind != bridge.kind or u.label != label:
            raise GaussCodeError("bridge not contained in code")
        if prev is not None and (p - prev) % m != 1:
            raise GaussCodeError("bridge positions are not contiguous")
        prev = p


def strictly_decreases(code: GaussCode, bridge: Bridge) -> bool:
    """Whether replacing this bridge is guaranteed to lower the genus.

    True iff two of the k+1 arcs flanking and separating the bridge's
    passes are traversed by the same Seifert circle (a bypass exists).
    """
    _require_bridge(code, bridge)
    m = len(code.units)
    decomposition = cycles(code)
    arcs = [(bridge.positions[0] - 1) % m, *bridge.positions]
    owners = {decomposition.arc_owner[a] for a in arcs}
    return len(owners) < len(arcs)


def knotoid_genus(code: GaussCode, bridge: Bridge) -> int:
    """Genus of the open diagram left when the bridge strand is removed."""
    _require_bridge(code, bridge)
    return genus(remove_chords(code, bridge.labels))


@dataclass(frozen=True)
class MoveOutcome:
    """Full provenance of one bridge replacement."""

    result: GaussCode
    removed_labels: tuple[int, ...]
    anchor: Unit | None
    guide: tuple[Unit, ...]
    pattern_labels: tuple[int, ...]
    inserted_labels: tuple[int, ...]
    strict_decrease_predicted: bool

    def guide_text(self) -> str:
        return "".join(str(u) for u in self.guide)


def bridge_replace(code: GaussCode, bridge: Bridge) -> MoveOutcome:
    """Replace the bridge by a new one routed along the smoothing interval.

    The genus of the result equals the genus of the code with the bridge's
    crossings deleted, and never exceeds the genus of the input.
    """
    if not code.signed:
        raise GaussCodeError("bridge replacement requires a fully signed code")
    _require_bridge(code, bridge)
    if bridge.kind == UNDER:
        mirrored = _replace_over(flip_passes(code), _flip_bridge(bridge))
        return MoveOutcome(
            result=flip_passes(mirrored.result),
            removed_labels=mirrored.removed_labels,
            anchor=mirrored.anchor.flipped() if mirrored.anchor else None,
            guide=tuple(u.flipped() for u in mirrored.guide),
            pattern_labels=mirrored.pattern_labels,
            inserted_labels=mirrored.inserted_labels,
            strict_decrease_predicted=mirrored.strict_decrease_predicted,
        )
    return _replace_over(code, bridge)


def _flip_bridge(bridge: Bridge) -> Bridge:
    return Bridge(
        kind=OVER if bridge.kind == UNDER else UNDER,
        positions=bridge.positions,
        labels=bridge.labels,
        maximal=bridge.maximal,
    )


def _replace_over(code: GaussCode, bridge: Bridge) -> MoveOutcome:
    m = len(code.units)
    doomed = frozenset(bridge.labels)
    removed = tuple(sorted(doomed))
    strict = strictly_decreases(code, bridge)
    trimmed = remove_chords(code, doomed)
    if len(trimmed) == 0:
        return _checked(
            code,
            MoveOutcome(
                result=trimmed,
                removed_labels=removed,
                anchor=None,
                guide=(),
                pattern_labels=(),
                inserted_labels=(),
                strict_decrease_predicted=strict,
            ),
        )

    # Anchor X: first unit at or cyclically left of the one just before the
    # bridge that names no bridge crossing.
    pos = (bridge.positions[0] - 1) % m
    while code.units[pos].label in doomed:
        pos = (pos - 1) % m
    kept = [i for i in range(m) if code.units[i].label not in doomed]
    xc = kept.index(pos)

    mm = len(trimmed.units)
    partner = trimmed.partner

    # Guide cycle: the circle running along the arc just after X, i.e. the
    # one through the gap the removed bridge used to occupy.  Present it
    # from X, so its first step is that arc.
    orbit = sigma_orbit(trimmed, (xc + 1) % mm)
    guide_pos = [xc]
    for x in orbit:
        guide_pos.append(x)
        guide_pos.append(partner[x])
    guide_pos.pop()  # the walk closes back at X
    guide = tuple(trimmed.units[t] for t in guide_pos)

    # Pattern crossings: chord steps of the guide, scanned leftward from X,
    # where the new bridge must cross the interval.  A '+' crossing matches
    # when stepped over-to-under, a '-' crossing under-to-over; each chord
    # matches in at most one direction, so pattern labels stay distinct.
    patterns = []
    for x in reversed(orbit):
        u = trimmed.units[x]
        if (u.sign == POSITIVE and u.kind == OVER) or (u.sign == NEGATIVE and u.kind == UNDER):
            patterns.append((u.label, x, partner[x]))
    k = len(patterns)
    if len({a for a, _, _ in patterns}) != k:
        raise InternalInvariantError("pattern crossings are not pairwise distinct")

    base = max(code.labels)
    block = [Unit(OVER, base + t, NEGATIVE if t % 2 else POSITIVE) for t in range(1, 2 * k + 1)]
    after: dict[int, Unit] = {}
    before: dict[int, Unit] = {}
    for j, (_, q1, q2) in enumerate(patterns, start=1):
        after[q2] = Unit(UNDER, base + 2 * j - 1, NEGATIVE)
        before[(q1 - 1) % mm] = Unit(UNDER, base + 2 * j, POSITIVE)

    out: list[Unit] = []
    for t in range(mm):
        out.append(trimmed.units[t])
        if t in after:
            out.append(after[t])
        if t == xc:
            out.extend(block)
        if t in before:
            out.append(before[t])
    result = GaussCode(out)

    return _checked(
        code,
        MoveOutcome(
            result=result,
            removed_labels=removed,
            anchor=code.units[pos],
            guide=guide,
            pattern_labels=tuple(a for a, _, _ in patterns),
            inserted_labels=tuple(range(base + 1, base + 2 * k + 1)),
            strict_decrease_predicted=strict,
        ),
    )


def _checked(code: GaussCode, outcome: MoveOutcome) -> MoveOutcome:
    g_before = genus(code)
    g_after = genus(outcome.result)
    g_open = genus(remove_chords(code, outcome.removed_labels))
    if g_after != g_open:
        raise InternalInvariantError(
            f"replacement genus {g_after} differs from open-diagram genus {g_open}"
        )
    if g_after > g_before:
        raise InternalInvariantError(f"replacement raised genus {g_before} -> {g_after}")
    if outcome.strict_decrease_predicted != (g_after < g_before):
        raise InternalInvariantError("bypass prediction disagrees with genus drop")
    return outcome


def _cancellable_pairs(code: GaussCode) -> list[tuple[int, int, int]]:
    """Candidate RII cancellations as (o_pair_start, label_a, label_b).

    Labels a, b cancel when their O passes sit at adjacent positions (a
    first), their U passes are adjacent in either order, and the signs are
    opposite.
    """
    m = len(code.units)
    out = []
    for i in range(m):
        ua = code.units[i]
        ub = code.units[(i + 1) % m]
        if ua.kind != OVER or ub.kind != OVER or ua.label == ub.label:
            continue
        if ua.sign != -ub.sign:
            continue
        a_under = next(p for p in code.positions_of(ua.label) if p != i)
        b_under = next(p for p in code.positions_of(ub.label) if p != (i + 1) % m)
        if (a_under + 1) % m == b_under or (b_under + 1) % m == a_under:
            out.append((i, ua.label, ub.label))
    return out


def rii_reduce(code: GaussCode) -> GaussCode:
    """Cancel opposite-sign adjacent crossing pairs until none remains.

    Deterministic: each round cancels the candidate whose O pair starts at
    the least position, measured from the canonical rotation so that
    rotations of one code reduce to cyclically equal codes.
    """
    if not code.signed:
        raise GaussCodeError("RII reduction requires a fully signed code")
    while True:
        candidates = _cancellable_pairs(code)
        if not candidates:
            return code
        shift = canonical_rotation(code)
        m = len(code.units)
        i, a, b = min(candidates, key=lambda c: (c[0] - shift) % m)
        code = remove_chords(code, (a, b))

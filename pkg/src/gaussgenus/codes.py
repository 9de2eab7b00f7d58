"""Gauss codes: cyclic crossing sequences of knot and virtual-knot diagrams.

A code of length n is a cyclic word of 2n units.  Each unit records one pass
of the strand through a crossing: an over/under letter, the crossing label,
and the crossing sign.  Every label occurs exactly twice, once over and once
under, with equal signs.  Codes need not be planar-realizable; virtual
diagrams are first-class citizens.

Text format: units are ``O`` or ``U``, decimal digits, then ``+`` or ``-``
(``?`` for codes without sign data, as produced by DT import).  Whitespace
between units is ignored, e.g. ``O1-U2-O3-U1-O2-U3-`` is a trefoil diagram.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, NamedTuple

OVER = "O"
UNDER = "U"

POSITIVE = 1
NEGATIVE = -1
UNSIGNED = 0

_SIGN_CHAR = {POSITIVE: "+", NEGATIVE: "-", UNSIGNED: "?"}
_CHAR_SIGN = {"+": POSITIVE, "-": NEGATIVE, "?": UNSIGNED}
_SIGN_RANK = {POSITIVE: 0, NEGATIVE: 1, UNSIGNED: 2}

_UNIT_RE = re.compile(r"([OU])(\d+)([+\-?])")


class GaussCodeError(ValueError):
    """Text or unit data violates the Gauss-code invariants."""


class InternalInvariantError(RuntimeError):
    """A postcondition that should be unbreakable was broken (a bug)."""


class Unit(NamedTuple):
    kind: str  # OVER or UNDER
    label: int
    sign: int  # POSITIVE, NEGATIVE or UNSIGNED

    def __str__(self) -> str:
        return f"{self.kind}{self.label}{_SIGN_CHAR[self.sign]}"

    def flipped(self) -> "Unit":
        """The same pass with over and under interchanged."""
        return Unit(UNDER if self.kind == OVER else OVER, self.label, self.sign)


def unit_order_key(unit: Unit) -> tuple[int, int, int]:
    """Total order on units: O before U, then label, then '+' before '-'."""
    return (0 if unit.kind == OVER else 1, unit.label, _SIGN_RANK[unit.sign])


class GaussCode:
    """An immutable, validated cyclic sequence of units.

    The stored linearization is arbitrary; no basepoint is semantic.  Two
    codes are cyclically equivalent iff their :func:`canonical_form` values
    compare equal.
    """

    __slots__ = ("units", "partner", "_label_pos")

    def __init__(self, units: Iterable[Unit]):
        units = tuple(units)
        label_pos: dict[int, list[int]] = {}
        for i, u in enumerate(units):
            if u.kind not in (OVER, UNDER):
                raise GaussCodeError(f"bad pass letter {u.kind!r} at position {i}")
            if u.label < 1:
                raise GaussCodeError(f"label {u.label} at position {i} (labels start at 1)")
            if u.sign not in _SIGN_CHAR:
                raise GaussCodeError(f"bad sign value {u.sign!r} at position {i}")
            label_pos.setdefault(u.label, []).append(i)
        for label, pos in label_pos.items():
            if len(pos) != 2:
                raise GaussCodeError(
                    f"label {label} appears {len(pos)} time(s), expected exactly twice"
                )
            a, b = (units[p] for p in pos)
            if a.kind == b.kind:
                raise GaussCodeError(
                    f"label {label} passes {a.kind} twice (needs one O and one U)"
                )
            if a.sign != b.sign:
                raise GaussCodeError(f"label {label} carries two different signs")
        unsigned_flags = {u.sign == UNSIGNED for u in units}
        if len(unsigned_flags) > 1:
            bad = next(u.label for u in units if u.sign == UNSIGNED)
            raise GaussCodeError(f"mixed signedness (label {bad} is unsigned)")

        partner = [0] * len(units)
        for a, b in label_pos.values():
            partner[a], partner[b] = b, a
        object.__setattr__(self, "units", units)
        object.__setattr__(self, "partner", tuple(partner))
        object.__setattr__(self, "_label_pos", {k: tuple(v) for k, v in label_pos.items()})

    def __setattr__(self, name, value):
        raise AttributeError("GaussCode is immutable")

    # -- basic views ---------------------------------------------------

    @property
    def n(self) -> int:
        """Number of crossings (chords)."""
        return len(self.units) // 2

    def __len__(self) -> int:
        return len(self.units)

    def __iter__(self) -> Iterator[Unit]:
        return iter(self.units)

    def __eq__(self, other) -> bool:
        return isinstance(other, GaussCode) and self.units == other.units

    def __hash__(self) -> int:
        return hash(self.units)

    def __repr__(self) -> str:
        return f"GaussCode({self.serialize()!r})"

    @property
    def signed(self) -> bool:
        return all(u.sign != UNSIGNED for u in self.units)

    @property
    def labels(self) -> frozenset[int]:
        return frozenset(self._label_pos)

    def positions_of(self, label: int) -> tuple[int, int]:
        """The two positions at which ``label`` is visited."""
        try:
            return self._label_pos[label]
        except KeyError:
            raise GaussCodeError(f"unknown label {label}") from None

    def successor(self, position: int) -> int:
        return (position + 1) % len(self.units)

    def rotated(self, offset: int) -> "GaussCode":
        """The same cyclic code linearized from ``offset``."""
        m = len(self.units)
        if m == 0:
            return self
        offset %= m
        return GaussCode(self.units[offset:] + self.units[:offset])

    def serialize(self, start: int = 0) -> str:
        """Emit the units once around the cycle from ``start``, no separators."""
        m = len(self.units)
        if m == 0:
            return ""
        return "".join(str(self.units[(start + t) % m]) for t in range(m))

    def __str__(self) -> str:
        return self.serialize()


def parse_gauss(text: str) -> GaussCode:
    """Parse the textual unit sequence into a validated code.

    >>> parse_gauss("O1-U2-O3-U1-O2-U3-").n
    3
    """
    units = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _UNIT_RE.match(text, i)
        if not m:
            snippet = text[i : i + 8]
            raise GaussCodeError(f"malformed unit at offset {i}: {snippet!r}")
        kind, digits, sign = m.groups()
        units.append(Unit(kind, int(digits), _CHAR_SIGN[sign]))
        i = m.end()
    return GaussCode(units)


def _rotation_key(code: GaussCode, offset: int) -> tuple:
    relabel: dict[int, int] = {}
    key = []
    m = len(code.units)
    for t in range(m):
        u = code.units[(offset + t) % m]
        fresh = relabel.setdefault(u.label, len(relabel) + 1)
        key.append((0 if u.kind == OVER else 1, fresh, _SIGN_RANK[u.sign]))
    return tuple(key)


def canonical_rotation(code: GaussCode) -> int:
    """The rotation offset whose relabeled serialization is least."""
    m = len(code.units)
    if m == 0:
        return 0
    best = 0
    best_key = _rotation_key(code, 0)
    for r in range(1, m):
        key = _rotation_key(code, r)
        if key < best_key:
            best, best_key = r, key
    return best


def canonical_form(code: GaussCode) -> GaussCode:
    """Rotation-invariant representative: relabel by first appearance and
    pick the least rotation under the unit order (O < U, label, '+' < '-').

    Mirror images and orientation reversal are deliberately not identified.
    """
    m = len(code.units)
    if m == 0:
        return code
    r = canonical_rotation(code)
    relabel: dict[int, int] = {}
    out = []
    for t in range(m):
        u = code.units[(r + t) % m]
        fresh = relabel.setdefault(u.label, len(relabel) + 1)
        out.append(Unit(u.kind, fresh, u.sign))
    return GaussCode(out)


def attach_signs(code: GaussCode, signs: Mapping[int, int]) -> GaussCode:
    """Give every crossing of an unsigned code an explicit sign."""
    if code.signed and len(code) > 0:
        raise GaussCodeError("code is already signed")
    out = []
    for u in code.units:
        if u.label not in signs:
            raise GaussCodeError(f"label {u.label} unsigned")
        sign = signs[u.label]
        if sign not in (POSITIVE, NEGATIVE):
            raise GaussCodeError(f"sign for label {u.label} must be positive or negative")
        out.append(Unit(u.kind, u.label, sign))
    return GaussCode(out)


def flip_passes(code: GaussCode) -> GaussCode:
    """Interchange over and under everywhere (labels and signs unchanged)."""
    return GaussCode(u.flipped() for u in code.units)

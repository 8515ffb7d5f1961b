"""Symbolic Borel levels, class references and the expansion jump predictor."""

import re
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Tuple

from .classifier import BorelClassLabel, BorelLabel
from .errors import HierarchyError


class LevelKind(str, Enum):
    FINITE = "finite"
    OMEGA_PLUS = "omega_plus"
    OMEGA1 = "omega1"


@dataclass(frozen=True)
class Level:
    """A countable ordinal level: n >= 1, omega + k, or the render-only omega_1."""
    kind: LevelKind
    n: int = 0

    def __post_init__(self):
        if self.kind == LevelKind.FINITE and self.n < 1:
            raise HierarchyError(f"finite levels start at 1, got {self.n}")
        if self.kind == LevelKind.OMEGA_PLUS and self.n < 0:
            raise HierarchyError(f"omega+k needs k >= 0, got {self.n}")
        if self.kind == LevelKind.OMEGA1 and self.n != 0:
            raise HierarchyError("omega_1 carries no offset")

    @classmethod
    def finite(cls, n: int) -> "Level":
        return cls(LevelKind.FINITE, n)

    @classmethod
    def omega(cls, k: int = 0) -> "Level":
        return cls(LevelKind.OMEGA_PLUS, k)

    @classmethod
    def omega1(cls) -> "Level":
        return cls(LevelKind.OMEGA1)

    @property
    def is_finite(self) -> bool:
        return self.kind == LevelKind.FINITE

    @property
    def is_odd(self) -> bool:
        return self.is_finite and self.n % 2 == 1

    def successor(self) -> "Level":
        if self.kind == LevelKind.OMEGA1:
            raise HierarchyError("omega_1 is used for rendering only")
        return Level(self.kind, self.n + 1)

    def sort_key(self) -> Tuple[int, int]:
        order = {LevelKind.FINITE: 0, LevelKind.OMEGA_PLUS: 1, LevelKind.OMEGA1: 2}
        return order[self.kind], self.n

    def suffix(self) -> str:
        if self.kind == LevelKind.FINITE:
            return str(self.n)
        if self.kind == LevelKind.OMEGA1:
            return "Omega1"
        return "Omega" if self.n == 0 else f"OmegaPlus{self.n}"

    def __str__(self) -> str:
        if self.kind == LevelKind.FINITE:
            return str(self.n)
        if self.kind == LevelKind.OMEGA1:
            return "omega1"
        return "omega" if self.n == 0 else f"omega+{self.n}"


class Side(str, Enum):
    SIGMA = "Sigma"
    PI = "Pi"
    DELTA = "Delta"


_SIDE_ORDER = {Side.SIGMA: 0, Side.PI: 1, Side.DELTA: 2}


@dataclass(frozen=True)
class ClassRef:
    side: Side
    level: Level

    @property
    def name(self) -> str:
        """Serialized name such as ``Sigma2``, ``SigmaOmega``, ``PiOmegaPlus1``."""
        return f"{self.side.value}{self.level.suffix()}"

    def sort_key(self):
        return self.level.sort_key(), _SIDE_ORDER[self.side]

    def __str__(self) -> str:
        return self.name


def sigma(level) -> ClassRef:
    return ClassRef(Side.SIGMA, _as_level(level))


def pi(level) -> ClassRef:
    return ClassRef(Side.PI, _as_level(level))


def delta(level) -> ClassRef:
    return ClassRef(Side.DELTA, _as_level(level))


def _as_level(level) -> Level:
    return level if isinstance(level, Level) else Level.finite(level)


def sort_refs(refs: Iterable[ClassRef]) -> List[ClassRef]:
    return sorted(refs, key=ClassRef.sort_key)


# =========================
# Parsing
# =========================

_LEVEL = re.compile(r"^(?:(?P<n>\d+)|omega(?:\s*\+\s*(?P<k>\d+))?|(?P<top>omega_?1))$")
_REF = re.compile(r"^(?P<side>sigma|pi|delta)\s*(?P<level>.+)$", re.IGNORECASE)
_SUFFIX = re.compile(r"^(?:(?P<n>\d+)|omega(?:plus(?P<k>\d+))?|(?P<top>omega1))$")


def parse_level(text: str) -> Level:
    """Parse ``3``, ``omega``, ``omega+2`` or ``omega1`` (case-insensitive).

    Raises:
        HierarchyError: If the text is not a level
    """
    raw = text.strip().lower().replace("ω", "omega")
    match = _LEVEL.match(raw)
    if not match:
        raise HierarchyError(f"malformed level {text!r}; expected n, omega, omega+k or omega1")
    if match.group("n") is not None:
        return Level.finite(int(match.group("n")))
    if match.group("top"):
        return Level.omega1()
    return Level.omega(int(match.group("k") or 0))


def parse_side(text: str) -> Side:
    for side in Side:
        if side.value.lower() == text.strip().lower():
            return side
    raise HierarchyError(f"unknown side {text!r}; expected Sigma, Pi or Delta")


def parse_class_ref(text: str) -> ClassRef:
    """Parse a serialized name (``Pi3``, ``SigmaOmegaPlus1``)."""
    match = _REF.match(text.strip())
    if not match:
        raise HierarchyError(f"malformed class reference {text!r}")
    suffix = _SUFFIX.match(match.group("level").strip().lower())
    if not suffix:
        raise HierarchyError(f"malformed class reference {text!r}")
    if suffix.group("n") is not None:
        level = Level.finite(int(suffix.group("n")))
    elif suffix.group("top"):
        level = Level.omega1()
    else:
        level = Level.omega(int(suffix.group("k") or 0))
    return ClassRef(parse_side(match.group("side")), level)


# =========================
# Jump prediction
# =========================

def predict_jump(c: ClassRef) -> FrozenSet[ClassRef]:
    """Upper bounds for a class of A^omega once viewed inside a larger B^omega.

    Odd Sigma and even Pi levels move up by one; even Sigma and odd Pi stay.
    Levels from omega on are stable. A Delta class gets both side bounds.
    """
    if c.side == Side.DELTA:
        return predict_jump(ClassRef(Side.SIGMA, c.level)) | predict_jump(ClassRef(Side.PI, c.level))
    if not c.level.is_finite:
        return frozenset({c})
    moves_up = c.level.is_odd if c.side == Side.SIGMA else not c.level.is_odd
    return frozenset({ClassRef(c.side, c.level.successor() if moves_up else c.level)})


# Lowest finite level of each exact label and the sides it belongs to there
_BASE = {
    BorelLabel.CLOPEN: (1, {Side.SIGMA, Side.PI}),
    BorelLabel.OPEN_PROPER: (1, {Side.SIGMA}),
    BorelLabel.CLOSED_PROPER: (1, {Side.PI}),
    BorelLabel.DELTA2_PROPER: (2, {Side.SIGMA, Side.PI}),
    BorelLabel.SIGMA2_PROPER: (2, {Side.SIGMA}),
    BorelLabel.PI2_PROPER: (2, {Side.PI}),
    BorelLabel.DELTA3_PROPER: (3, {Side.SIGMA, Side.PI}),
}

_MINIMAL_REF = {
    BorelLabel.CLOPEN: delta(1),
    BorelLabel.OPEN_PROPER: sigma(1),
    BorelLabel.CLOSED_PROPER: pi(1),
    BorelLabel.DELTA2_PROPER: delta(2),
    BorelLabel.SIGMA2_PROPER: sigma(2),
    BorelLabel.PI2_PROPER: pi(2),
    BorelLabel.DELTA3_PROPER: delta(3),
}


def _label_of(label) -> BorelLabel:
    return label.label if isinstance(label, BorelClassLabel) else BorelLabel(label)


def minimal_ref(label) -> ClassRef:
    """Least class reference containing every language with this exact label."""
    return _MINIMAL_REF[_label_of(label)]


def class_leq(label, c: ClassRef) -> bool:
    """True iff every language with exact label ``label`` lies in class ``c``."""
    base, sides = _BASE[_label_of(label)]
    if not c.level.is_finite:
        return True
    n = c.level.n

    def member(side: Side) -> bool:
        return n > base or (n == base and side in sides)

    if c.side == Side.DELTA:
        return member(Side.SIGMA) and member(Side.PI)
    return member(c.side)


# =========================
# Jump table
# =========================

class EntryKind(str, Enum):
    LOOP = "loop"
    ARROW = "arrow"
    OFF_TABLE = "off-table"


@dataclass(frozen=True)
class TableEntry:
    source: ClassRef
    target: ClassRef
    kind: EntryKind

    def render(self) -> str:
        if self.kind == EntryKind.LOOP:
            return f"{self.source.name} -> {self.target.name} (self-loop)"
        if self.kind == EntryKind.OFF_TABLE:
            return f"{self.source.name} -> {self.target.name} (off-table)"
        return f"{self.source.name} -> {self.target.name}"


@dataclass(frozen=True)
class HierarchyTable:
    max_finite_level: int
    columns: Tuple[Level, ...]
    entries: Tuple[TableEntry, ...]

    def arrows(self) -> List[Tuple[str, str]]:
        return [(e.source.name, e.target.name) for e in self.entries if e.kind == EntryKind.ARROW]

    def loops(self) -> List[str]:
        return [e.source.name for e in self.entries if e.kind == EntryKind.LOOP]

    def render(self) -> str:
        lines = []
        for column in self.columns:
            row = [e for e in self.entries if e.source.level == column]
            lines.append(f"level {column}: " + "; ".join(e.render() for e in row))
        return "\n".join(lines)


def hierarchy_table(max_finite_level: int) -> HierarchyTable:
    """Jump arrows for Sigma and Pi at levels 1..max plus omega, omega+1, omega1.

    Raises:
        HierarchyError: If ``max_finite_level`` is below 1
    """
    if max_finite_level < 1:
        raise HierarchyError(f"table needs at least one finite level, got {max_finite_level}")
    columns = tuple(Level.finite(n) for n in range(1, max_finite_level + 1)) + (
        Level.omega(0),
        Level.omega(1),
        Level.omega1(),
    )
    entries = []
    for column in columns:
        for side in (Side.SIGMA, Side.PI):
            source = ClassRef(side, column)
            (target,) = predict_jump(source)
            if target == source:
                kind = EntryKind.LOOP
            elif target.level.is_finite and target.level.n > max_finite_level:
                kind = EntryKind.OFF_TABLE
            else:
                kind = EntryKind.ARROW
            entries.append(TableEntry(source, target, kind))
    return HierarchyTable(max_finite_level, columns, tuple(entries))

"""Parenthesis strings, edit scripts and the basic Dyck checks.

Symbols are stored as signed integer codes: an open parenthesis of type
``t`` is ``t + 1`` and its congruent close is ``-(t + 1)``.  Two symbols
form a matching pair exactly when ``open_code + close_code == 0``.

Every index that leaves this module (edit scripts, decompositions, traces)
is 1-based and refers to the original string.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .errors import (EmptyTypeName, IndexOutOfRange, NotDyck1, ParseError, ScriptError,
                     SymbolOutOfAlphabet, UnknownCharacter)

OPEN_CHARS = "([{<"
CLOSE_CHARS = ")]}>"


class Polarity(enum.Enum):
    OPEN = "open"
    CLOSE = "close"


@dataclass(frozen=True, order=True)
class ParenSymbol:
    type_id: int
    polarity: Polarity = field(compare=False)

    def __post_init__(self):
        if self.type_id < 0:
            raise ValueError("type_id must be non-negative")

    @property
    def is_open(self) -> bool:
        return self.polarity is Polarity.OPEN

    @property
    def code(self) -> int:
        return self.type_id + 1 if self.is_open else -(self.type_id + 1)

    @classmethod
    def from_code(cls, code: int) -> "ParenSymbol":
        if code == 0:
            raise ValueError("0 is not a symbol code")
        if code > 0:
            return cls(code - 1, Polarity.OPEN)
        return cls(-code - 1, Polarity.CLOSE)

    @classmethod
    def open(cls, type_id: int) -> "ParenSymbol":
        return cls(type_id, Polarity.OPEN)

    @classmethod
    def close(cls, type_id: int) -> "ParenSymbol":
        return cls(type_id, Polarity.CLOSE)

    def congruent(self) -> "ParenSymbol":
        flipped = Polarity.CLOSE if self.is_open else Polarity.OPEN
        return ParenSymbol(self.type_id, flipped)

    def __repr__(self):
        return f"{'Open' if self.is_open else 'Close'}{self.type_id}"


def _check_code(code: int, alphabet_size: int, position: int) -> None:
    if code == 0:
        raise ValueError("0 is not a symbol code")
    if abs(code) > alphabet_size:
        raise SymbolOutOfAlphabet(position, abs(code) - 1, alphabet_size)


@dataclass(frozen=True)
class ParenString:
    """An immutable string of typed parentheses.

    ``codes`` holds the signed symbol codes.  ``names`` is an optional table
    mapping type ids to token names (set by :func:`parse_tokens`).
    """

    codes: tuple
    alphabet_size: int = 1
    names: tuple | None = None

    def __post_init__(self):
        codes = tuple(int(c) for c in self.codes)
        object.__setattr__(self, "codes", codes)
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        for pos, c in enumerate(codes, start=1):
            _check_code(c, self.alphabet_size, pos)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) < self.alphabet_size:
                raise ValueError("name table shorter than alphabet")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_symbols(cls, symbols: Iterable[ParenSymbol],
                     alphabet_size: int | None = None) -> "ParenString":
        codes = tuple(s.code for s in symbols)
        if alphabet_size is None:
            alphabet_size = max((abs(c) for c in codes), default=1)
        return cls(codes, alphabet_size)

    @property
    def symbols(self) -> tuple:
        return tuple(ParenSymbol.from_code(c) for c in self.codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        return iter(self.symbols)

    def at(self, index: int) -> ParenSymbol:
        """Symbol at a 1-based position."""
        if not 1 <= index <= len(self.codes):
            raise IndexOutOfRange(f"index {index} outside 1..{len(self.codes)}")
        return ParenSymbol.from_code(self.codes[index - 1])

    def subsequence(self, indices: Iterable[int]) -> "ParenString":
        """String formed by the given 1-based positions, in the given order."""
        return ParenString(tuple(self.codes[i - 1] for i in indices),
                           self.alphabet_size, self.names)

    def with_codes(self, codes: Sequence[int]) -> "ParenString":
        return ParenString(tuple(codes), self.alphabet_size, self.names)

    def __str__(self):
        if self.names is not None:
            return render_tokens(self)
        if self.alphabet_size <= len(OPEN_CHARS):
            return render_compact(self)
        return render_tokens(self)


# --- edit scripts -----------------------------------------------------------

@dataclass(frozen=True)
class Delete:
    index: int


@dataclass(frozen=True)
class Substitute:
    index: int
    symbol: ParenSymbol


@dataclass(frozen=True)
class Insert:
    after_index: int
    symbol: ParenSymbol


EditOp = Union[Delete, Substitute, Insert]


@dataclass(frozen=True)
class EditScript:
    ops: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        touched = {}
        for op in self.ops:
            if isinstance(op, Insert):
                continue
            if op.index in touched:
                raise ScriptError(f"index {op.index} targeted by "
                                  f"{type(touched[op.index]).__name__} and "
                                  f"{type(op).__name__}")
            touched[op.index] = op

    @property
    def cost(self) -> int:
        return len(self.ops)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def sorted(self) -> "EditScript":
        def key(op):
            if isinstance(op, Insert):
                return (op.after_index, 1, _insert_rank(op.symbol))
            return (op.index, 0, 0)
        return EditScript(tuple(sorted(self.ops, key=key)))


@dataclass(frozen=True)
class RepairResult:
    """Edit cost plus, when computed, the script and the repaired string."""

    cost: int
    script: EditScript | None = None
    repaired: ParenString | None = None
    info: dict = field(default_factory=dict, compare=False)


def _insert_rank(sym: ParenSymbol) -> tuple:
    # opens (by type) before closes (by descending type): "([" + "])" nests
    return (0, sym.type_id) if sym.is_open else (1, -sym.type_id)


def apply_script(p: ParenString, script: EditScript | Iterable[EditOp]) -> ParenString:
    """Apply ``script`` to ``p``.

    Substitutions and deletions are keyed to original indices, insertions are
    anchored after an original index (0 means the front).  The result does
    not depend on the order of ``script.ops``.
    """
    if not isinstance(script, EditScript):
        script = EditScript(tuple(script))
    n = len(p)
    codes = list(p.codes)
    deleted = set()
    inserts: dict[int, list] = {}
    size = p.alphabet_size
    for op in script.ops:
        if isinstance(op, Insert):
            if not 0 <= op.after_index <= n:
                raise IndexOutOfRange(f"insert anchor {op.after_index} outside 0..{n}")
            inserts.setdefault(op.after_index, []).append(op.symbol)
            size = max(size, op.symbol.type_id + 1)
            continue
        if not 1 <= op.index <= n:
            raise IndexOutOfRange(f"index {op.index} outside 1..{n}")
        if isinstance(op, Substitute):
            codes[op.index - 1] = op.symbol.code
            size = max(size, op.symbol.type_id + 1)
        else:
            deleted.add(op.index)
    out = [s.code for s in sorted(inserts.get(0, ()), key=_insert_rank)]
    for i in range(1, n + 1):
        if i not in deleted:
            out.append(codes[i - 1])
        if i in inserts:
            out.extend(s.code for s in sorted(inserts[i], key=_insert_rank))
    return ParenString(tuple(out), size, p.names if size == p.alphabet_size else None)


# --- parsing / rendering ----------------------------------------------------

def parse_compact(text: str, alphabet_size: int | None = None) -> ParenString:
    """Parse ``([{<`` / ``)]}>`` text; whitespace is ignored.

    >>> parse_compact("([)]").alphabet_size
    2
    """
    codes = []
    for pos, ch in enumerate(text, start=1):
        if ch.isspace():
            continue
        t = OPEN_CHARS.find(ch)
        if t >= 0:
            code = t + 1
        else:
            t = CLOSE_CHARS.find(ch)
            if t < 0:
                raise UnknownCharacter(pos, ch)
            code = -(t + 1)
        if alphabet_size is not None and t >= alphabet_size:
            raise SymbolOutOfAlphabet(pos, t, alphabet_size)
        codes.append(code)
    if alphabet_size is None:
        alphabet_size = max((abs(c) for c in codes), default=1)
    return ParenString(tuple(codes), alphabet_size)


def render_compact(p: ParenString) -> str:
    if p.alphabet_size > len(OPEN_CHARS) and any(abs(c) > len(OPEN_CHARS) for c in p.codes):
        raise ValueError("compact format supports at most 4 parenthesis types")
    return "".join(OPEN_CHARS[c - 1] if c > 0 else CLOSE_CHARS[-c - 1] for c in p.codes)


def parse_tokens(text: str, alphabet_size: int | None = None) -> ParenString:
    """Parse whitespace-separated ``name`` / ``/name`` tokens.

    Type ids are assigned to names in order of first appearance; the name
    table travels with the returned string.
    """
    names: dict[str, int] = {}
    codes = []
    for pos, tok in enumerate(text.split(), start=1):
        closing = tok.startswith("/")
        name = tok[1:] if closing else tok
        if not name:
            raise EmptyTypeName(pos)
        t = names.setdefault(name, len(names))
        if alphabet_size is not None and t >= alphabet_size:
            raise SymbolOutOfAlphabet(pos, t, alphabet_size)
        codes.append(-(t + 1) if closing else t + 1)
    table = tuple(names)
    if alphabet_size is None:
        alphabet_size = max(len(table), 1)
    table = table + tuple(f"t{i}" for i in range(len(table), alphabet_size))
    return ParenString(tuple(codes), alphabet_size, table)


def render_tokens(p: ParenString) -> str:
    names = p.names
    if names is None:
        names = tuple(f"t{i}" for i in range(p.alphabet_size))
    return " ".join(names[c - 1] if c > 0 else "/" + names[-c - 1] for c in p.codes)


def render_symbol(sym: ParenSymbol, fmt: str = "compact", names=None) -> str:
    if fmt == "compact":
        return (OPEN_CHARS if sym.is_open else CLOSE_CHARS)[sym.type_id]
    name = names[sym.type_id] if names is not None else f"t{sym.type_id}"
    return name if sym.is_open else "/" + name


# --- checks -----------------------------------------------------------------

def is_well_formed(p: ParenString | Sequence[int]) -> bool:
    codes = p.codes if isinstance(p, ParenString) else p
    stack = []
    push, pop = stack.append, stack.pop
    for c in codes:
        if c > 0:
            push(c)
        elif not stack or pop() != -c:
            return False
    return not stack


def dyck1_distance(p: ParenString) -> int:
    """Exact edit distance to Dyck(1) in one pass.

    Counts closes that find no open to pair with plus opens left over.
    """
    if p.alphabet_size > 1:
        raise NotDyck1(f"alphabet size {p.alphabet_size} > 1")
    depth = unmatched_close = 0
    for c in p.codes:
        if c > 0:
            depth += 1
        elif depth:
            depth -= 1
        else:
            unmatched_close += 1
    # a run of u unmatched closes / o unmatched opens is fixed by
    # substituting half of it; an odd run costs one extra deletion
    return (unmatched_close + 1) // 2 + (depth + 1) // 2


def dyck1_unmatched(p: ParenString) -> int:
    """Symbols a one-type stack scan leaves unmatched (the deletion distance)."""
    depth = stray = 0
    for c in p.codes:
        if c > 0:
            depth += 1
        elif depth:
            depth -= 1
        else:
            stray += 1
    return stray + depth


# --- script text ------------------------------------------------------------

def render_script(script: EditScript, fmt: str = "compact", names=None) -> str:
    """One op per line: ``D i``, ``S i sym`` or ``I after sym`` (sorted)."""
    lines = []
    for op in script.sorted().ops:
        if isinstance(op, Delete):
            lines.append(f"D {op.index}")
        elif isinstance(op, Substitute):
            lines.append(f"S {op.index} {render_symbol(op.symbol, fmt, names)}")
        else:
            lines.append(f"I {op.after_index} {render_symbol(op.symbol, fmt, names)}")
    return "".join(line + "\n" for line in lines)


def parse_script(text: str, fmt: str = "compact", names=None) -> EditScript:
    lookup = {n: i for i, n in enumerate(names or ())}
    ops = []
    for no, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        try:
            kind, index = parts[0], int(parts[1])
        except (IndexError, ValueError):
            raise ParseError(f"script line {no}: {raw!r}") from None
        if kind == "D" and len(parts) == 2:
            ops.append(Delete(index))
            continue
        if kind not in ("S", "I") or len(parts) != 3:
            raise ParseError(f"script line {no}: {raw!r}")
        tok = parts[2]
        if fmt == "compact":
            sym = parse_compact(tok).symbols
            if len(sym) != 1:
                raise ParseError(f"script line {no}: bad symbol {tok!r}")
            sym = sym[0]
        else:
            closing = tok.startswith("/")
            name = tok[1:] if closing else tok
            if name in lookup:
                t = lookup[name]
            elif name.startswith("t") and name[1:].isdigit():
                t = int(name[1:])
            else:
                raise ParseError(f"script line {no}: unknown type name {name!r}")
            sym = ParenSymbol.close(t) if closing else ParenSymbol.open(t)
        ops.append(Substitute(index, sym) if kind == "S" else Insert(index, sym))
    return EditScript(tuple(ops))

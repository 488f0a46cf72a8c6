"""Exception types raised across the package."""


class DyckError(Exception):
    """Base class for every error raised by dyckrepair."""


class ParseError(DyckError, ValueError):
    """Input text could not be turned into a parenthesis string or transcript."""


class UnknownCharacter(ParseError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"unknown character {char!r} at position {position}")


class SymbolOutOfAlphabet(ParseError):
    def __init__(self, position: int, type_id: int, alphabet_size: int):
        self.position = position
        self.type_id = type_id
        self.alphabet_size = alphabet_size
        super().__init__(
            f"symbol of type {type_id} at position {position} "
            f"exceeds declared alphabet size {alphabet_size}")


class EmptyTypeName(ParseError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"bare '/' token at token position {position}")


class NotDyck1(DyckError, ValueError):
    pass


class ScriptError(DyckError, ValueError):
    """An edit script is inconsistent (for example two ops on one index)."""


class IndexOutOfRange(DyckError, IndexError):
    pass


class TooLarge(DyckError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"input length {n} exceeds cap {cap}")


class NotFound(DyckError):
    """Brute-force search exhausted its cost budget."""


class PolarityViolation(DyckError, ValueError):
    pass


class WindowOverlap(DyckError, RuntimeError):
    """Trace segmentation produced overlapping windows (internal bug)."""


class MixedDecorations(DyckError, ValueError):
    pass


class BadParams(DyckError, ValueError):
    pass


class TranscriptSyntax(ParseError):
    def __init__(self, line: int, text: str, why: str):
        self.line = line
        self.text = text
        super().__init__(f"line {line}: {why}: {text!r}")

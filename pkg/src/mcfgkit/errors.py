"""Exception types shared across the toolkit."""


class McfgError(Exception):
    """Base class for all toolkit errors."""


class RuleApplicationError(McfgError):
    """A rule was applied to children that do not fit its right-hand side."""


class UnsupportedGrammarError(McfgError):
    """The grammar falls outside what the requested operation can handle soundly."""


class ForeignLetterError(McfgError):
    """An input word contains a letter outside the relevant alphabet."""


class TreePathError(McfgError):
    """A node path does not address a node of the tree."""


class TreeStructureError(McfgError):
    """A derivation tree whose shape contradicts one of its rule labels."""


class LabelMismatchError(McfgError):
    """A subtree replacement whose root rule differs from the replaced node's rule."""


class WordRejectedError(McfgError):
    """An experiment needed a derivation for a word the grammar does not accept."""


class TermLimitError(McfgError):
    """Saturation exceeded the configured cap on stored terms."""


class FormatError(McfgError):
    """A parse error in one of the text file formats, carrying a source position."""

    def __init__(self, message: str, filename: str = "<input>", line: int = 1, column: int = 1):
        super().__init__(message)
        self.message = message
        self.filename = filename
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"{self.filename}:{self.line}:{self.column}: {self.message}"

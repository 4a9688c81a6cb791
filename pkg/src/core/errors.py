"""
Exception hierarchy for qweyl
Every precondition failure raised by the library derives from QweylError
"""

from typing import Optional


class QweylError(Exception):
    """Base class for all library errors"""


class ConfigurationError(QweylError, ValueError):
    """Invalid configuration or parameter context"""


class DivisionByZero(QweylError, ZeroDivisionError):
    """Division by the zero scalar"""


class ZeroScalar(QweylError, ValueError):
    """An operation received the zero scalar where a nonzero one is required"""


class PresentationMismatch(QweylError, ValueError):
    """Elements from different presentations were combined"""


class ModeMismatch(QweylError, ValueError):
    """An element lives in the wrong algebra for the requested operation"""


class LambdaModeMismatch(ModeMismatch):
    """The operation requires a different lambda mode"""


class SpecMismatch(QweylError, ValueError):
    """A vector or request does not belong to the module spec it was used with"""


class WindowTooSmall(QweylError, ValueError):
    """The verification window cannot contain the requested point with its margin"""


class RankNotOne(QweylError, ValueError):
    """The operation is only defined in rank one"""


def byte_offset(text: str, index: int) -> int:
    """UTF-8 byte offset of character index in text"""
    return len(text[:index].encode('utf-8'))


class ExpressionSyntaxError(QweylError, ValueError):
    """
    Malformed expression text

    Args:
        message: Human readable description
        offset: UTF-8 byte offset of the offending token, if known
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        self.message = message
        self.offset = offset
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)


class NegativeExponent(ExpressionSyntaxError):
    """x or y (or z outside the localized presentations) raised to a negative power"""


class UnknownGenerator(ExpressionSyntaxError):
    """Generator or parameter symbol outside the declared rank"""


class CharacterSyntaxError(ExpressionSyntaxError):
    """Malformed character literal"""

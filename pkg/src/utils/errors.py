"""
Error types shared by every sekwl module
"""


class SekwlError(Exception):
    """Base class for all sekwl errors"""


class GraphFormatError(SekwlError, ValueError):
    """Malformed edge list or graph6 input"""


class GraphLoadError(SekwlError):
    """A graph file could not be read or decoded"""

    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


class DomainError(SekwlError, ValueError):
    """Parameters outside the mathematical domain of an operation"""


class CapabilityError(SekwlError):
    """Input exceeds a size guard"""


class ContractError(SekwlError, ValueError):
    """Shape or width mismatch between cooperating inputs"""


class UsageError(SekwlError):
    """Malformed generator or algorithm spec string"""

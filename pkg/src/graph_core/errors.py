"""
Exception hierarchy shared by every package in the toolkit
"""
from typing import Optional


class DecompositionError(Exception):
    """Base class for all toolkit errors"""


class GraphFormatError(DecompositionError):
    """Raised when graph, partition or formula text cannot be parsed"""

    def __init__(self, message: str, line: Optional[int] = None, byte: Optional[int] = None):
        self.line = line
        self.byte = byte
        where = []
        if line is not None:
            where.append(f"line {line}")
        if byte is not None:
            where.append(f"byte {byte}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class InvalidSubsetError(DecompositionError):
    """Raised when an edge subset refers to edges the graph does not have"""


class InvalidPartitionError(DecompositionError):
    """Raised when a partition or colouring does not fit its graph"""


class PreconditionError(DecompositionError):
    """Raised when an operation is called outside its domain"""


class ParameterError(DecompositionError):
    """Raised for gadget, Latin square or configuration parameters out of range"""


class FormulaError(DecompositionError):
    """Raised when a formula violates its variant or an assignment is unusable"""


class ScaleError(DecompositionError):
    """Raised when an exhaustive oracle is asked to run beyond its scale"""

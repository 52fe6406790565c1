"""Shared exception types.

Input-side problems derive from ValueError (bad text, bad arity, bad flags);
everything the CLI reports as a computation failure derives from
ComputationError so the exit-code contract stays a two-line except clause.
"""


class ParseError(ValueError):
    """Syntax error in polynomial text; .pos is the 0-based offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class VariableMismatch(ValueError):
    """Operands live in rings with different variable counts."""


class ComputationError(Exception):
    """Base for failures of the mathematical pipeline (CLI exit code 2)."""


class DegenerateVariables(ComputationError):
    """(Ann_f)_1 != 0: some linear operator annihilates f.

    Carries the offending operator coefficient vectors so callers can reduce
    to essential variables or report them.
    """

    def __init__(self, kernel_vectors):
        self.kernel_vectors = list(kernel_vectors)
        super().__init__(
            "(Ann_f)_1 != 0: %d independent linear operator(s) annihilate f; "
            "reduce to essential variables first" % len(self.kernel_vectors)
        )


class GenericityFailure(ComputationError):
    """Could not sample a point avoiding the zero locus of f (100 draws)."""


class NonGenericRankTable(ComputationError):
    """A rank table produced a negative or asymmetric string count e(i,j)."""

    def __init__(self, i, j, value=None, message=None):
        self.i = i
        self.j = j
        self.value = value
        if message is None:
            message = f"rank table is not a generic profile: e({i},{j}) = {value} < 0"
        super().__init__(message)


class InternalInconsistency(ComputationError):
    """Two independent derivations of the same quantity disagreed (a bug)."""


class InvalidRankProfile(ComputationError):
    """Closed-form parameters violate their inequalities or give negative multiplicities."""


class DegenerateLinearForm(ComputationError):
    """f(l_perp) = 0: the chosen linear form is not admissible for the pipeline."""


class MismatchReport(ComputationError):
    """Oracle and formula partitions disagree at a sampled point."""

    def __init__(self, point, formula_partition, oracle_partition):
        self.point = tuple(point)
        self.formula_partition = formula_partition
        self.oracle_partition = oracle_partition
        super().__init__(
            f"oracle disagrees with the Hessian formulas at point {self.point}: "
            f"formula {formula_partition} vs oracle {oracle_partition}"
        )


class TilingMismatch(ComputationError):
    """String multiplicities cannot tile the Ferrer diagram of the Hilbert vector."""

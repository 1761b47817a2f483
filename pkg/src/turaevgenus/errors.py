"""Exception hierarchy shared by all modules."""


class TuraevError(Exception):
    """Base class for all errors raised by this package."""


# --- diagram errors ---------------------------------------------------------

class MalformedLineError(TuraevError):
    """A PD file line does not match the 'X a b c d' format."""

    def __init__(self, lineno: int, text: str, reason: str = ""):
        self.lineno = lineno
        self.text = text
        msg = f"line {lineno}: malformed crossing line {text!r}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


class ArcMultiplicityError(TuraevError):
    """An arc identifier is used a number of times different from two."""

    def __init__(self, arc: int, count: int):
        self.arc = arc
        self.count = count
        super().__init__(f"arc {arc} appears {count} times, expected 2")


class NonPlanarMapError(TuraevError):
    """The rotation system fails the genus-zero Euler check."""


class ArcNotFoundError(TuraevError):
    """An operation referenced an arc id absent from the diagram."""


class InternalParityError(TuraevError):
    """The Turaev genus formula produced a negative or non-integer value."""


class TooLargeError(TuraevError):
    """The diagram exceeds the configured state-sum crossing limit."""


class DisconnectedError(TuraevError):
    """The operation requires a connected diagram."""


class NoCrossingsError(TuraevError):
    """The operation requires at least one crossing."""


# --- ribbon graph errors ----------------------------------------------------

class NonOrientableError(TuraevError):
    """Orientable genus requested for a non-orientable ribbon graph.

    Carries the Euler genus 2k - v + e - f for diagnostics.
    """

    def __init__(self, euler_genus: int):
        self.euler_genus = euler_genus
        super().__init__(
            f"ribbon graph is non-orientable (Euler genus {euler_genus})"
        )


class ParityError(TuraevError):
    """The orientable genus formula yielded an odd value."""


# --- abstract graph errors --------------------------------------------------

class HasLoopError(TuraevError):
    """A loop edge was supplied where loopless multigraphs are required."""


class OddDegreeError(TuraevError):
    def __init__(self, vertex: int, degree: int):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has odd degree {degree}")


class NotBipartiteError(TuraevError):
    """Carries one odd cycle as a witness."""

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph contains an odd cycle: {self.cycle}")


class NotPlanarError(TuraevError):
    def __init__(self, component):
        self.component = sorted(component)
        super().__init__(f"component {self.component} is not planar")


class NotValidatedError(TuraevError):
    """The operation requires a validated graph (bipartition attached)."""


class NotEmbeddedError(TuraevError):
    """The operation requires a graph with a rotation system."""


class BadParametersError(TuraevError):
    """Family constructor parameters out of range."""


class InvalidSiteError(TuraevError):
    """A graph move was requested at a structurally invalid site."""


class ClassificationFailureError(TuraevError):
    """A reduced genus-1 or genus-2 graph matched no known family.

    This would be a counterexample to the classification theorems and
    must abort loudly.
    """


class SignMismatchError(TuraevError):
    """Internal consistency failure while assigning edge signs."""


class BoundsTooLargeError(TuraevError):
    """Census bounds exceed the documented feasibility limits."""

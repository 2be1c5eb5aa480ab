"""Exception hierarchy shared by every module.

``ChartError`` is the base of everything the library raises on bad input or
on a mathematically impossible request.  ``FalsifiedProperty`` is reserved
for the opposite situation: the input was fine but a property that should
hold (torsor freeness, fiber cardinality, ...) failed to verify.  The CLI
maps the former to exit code 2 and the latter to exit code 1.
"""


class ChartError(Exception):
    """Base class for input and validation errors."""


class InvalidMonoidSpec(ChartError):
    """Malformed monoid data: wrong arity, zero generator, bad relation entries."""


class NotSharp(ChartError):
    """The rational cone spanned by the generators contains a line."""


class RelationInconsistent(ChartError):
    """A supplied relation fails sum(r_j * gen_j) == sum(s_j * gen_j)."""


class RelationSynthesisIncomplete(ChartError):
    """A synthesized relation set does not generate the full congruence
    up to the configured degree bound."""


class SaturationFailure(ChartError):
    """A lattice point of the cone lies outside the monoid.

    The offending point is kept on the ``witness`` attribute.
    """

    def __init__(self, witness, message=None):
        self.witness = tuple(witness)
        super().__init__(message or f"cone lattice point {self.witness} is not in the monoid")


class NotAFace(ChartError):
    """The given generator subset admits no supporting functional."""


class NotOnVariety(ChartError):
    """A point violates the chart's relation equations beyond tolerance."""

    def __init__(self, residual, message=None):
        self.residual = residual
        super().__init__(message or f"relation residual {residual!r} exceeds tolerance")


class InvalidPoint(ChartError):
    """A point value is malformed or inconsistent with the requested operation."""


class ArityMismatch(ChartError):
    """A point's coordinate count does not match the equation system."""


class StratumEmptyAtDeskScale(ChartError):
    """The sampler exhausted its retry budget without a consistent draw."""


class FalsifiedProperty(Exception):
    """A property the mathematics guarantees failed to verify.

    Raised for hard failures such as a Kummer fiber of the wrong
    cardinality; always indicates a relation-set or tolerance bug.
    """

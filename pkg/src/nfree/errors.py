"""Exception hierarchy.

Everything raised on purpose derives from :class:`NfreeError`.  Errors that
come from a configured size cap derive from :class:`LimitExceeded`; the CLI
maps those to exit code 3 and every other ``NfreeError`` to exit code 2.
"""


class NfreeError(Exception):
    """Base class for all library errors."""

    def payload(self):
        return {"error": type(self).__name__, "message": str(self)}


class LimitExceeded(NfreeError):
    """A configured enumeration cap was exceeded."""


class GroundTooLarge(LimitExceeded):
    pass


class TooManyGenerators(LimitExceeded):
    pass


class TooManyVertices(LimitExceeded):
    pass


class TooLargeForExhaustive(LimitExceeded):
    pass


class DuplicateLabel(NfreeError):
    pass


class AlgebraMismatch(NfreeError):
    pass


class UnknownGeneratorIndex(NfreeError):
    pass


class CriterionViolated(NfreeError):
    """A generator map fails the extension criterion.

    ``witness`` is the full :class:`~nfree.algebra.ElementaryProduct` whose
    source value is 0 while the corresponding image product is not.
    """

    def __init__(self, witness, image):
        self.witness = witness
        self.image = image
        super().__init__(
            f"elementary product {witness.signs} is 0 in the source "
            f"but its image {sorted(image.members)} is not"
        )


class InternalDisagreement(NfreeError):
    """Two independent routes to the same answer disagree (a bug)."""


class NotIndependentInput(NfreeError):
    pass


class NotMaximalInput(NfreeError):
    pass


class ZeroInY(NfreeError):
    pass


class ZeroInH(NfreeError):
    pass


class InvalidHypergraph(NfreeError):
    pass


class NotAGraph(NfreeError):
    pass


class JoinOnNonGraph(NotAGraph):
    pass


class ZeroGenerator(NfreeError):
    pass


class NotOmegaIndependent(NfreeError):
    pass


class ReconstructionFailed(NfreeError):
    pass


class InvalidPoset(NfreeError):
    pass


class NotOrderPreserving(NfreeError):
    pass


class NotAHomomorphism(NfreeError):
    pass

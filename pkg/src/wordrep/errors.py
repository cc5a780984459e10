"""Exception types shared across the package."""


class WordrepError(Exception):
    """Base class for every package-specific error."""


class GraphError(WordrepError, ValueError):
    """Invalid graph construction or graph argument."""


class TooManyVertices(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class EndpointOutOfRange(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class SetOutOfRange(GraphError):
    pass


class KTooSmall(GraphError):
    pass


class TooLargeForBruteForce(GraphError):
    pass


class WordError(WordrepError, ValueError):
    """Invalid word or word argument."""


class SameLetter(WordError):
    pass


class LetterOutOfRange(WordError):
    pass


class MissingLetter(WordError):
    pass


class AlphabetMismatch(WordError):
    pass


class OrientationError(WordrepError, ValueError):
    """Invalid orientation construction or argument."""


class CyclicOrientation(OrientationError):
    pass


class ImproperColoring(OrientationError):
    pass


class NonInjectiveKey(OrientationError):
    pass


class BadParameter(WordrepError, ValueError):
    """Family spec outside its documented parameter range."""


class BudgetExceeded(WordrepError, RuntimeError):
    """A search hit its node budget before reaching an answer.

    Deliberately not a ValueError: a non-answer must never be confused
    with a negative verdict.
    """


class Graph6Error(WordrepError, ValueError):
    """Invalid graph6 input."""


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonCanonicalPadding(Graph6Error):
    pass

"""Exception hierarchy for qfab."""


class QfabError(Exception):
    """Base class for all qfab errors."""


class NotAdmissible(QfabError):
    """The relation ideal is not admissible within the configured length bound."""


class DimensionMismatch(QfabError):
    pass


class AlgebraMismatch(QfabError):
    """Two representations over different algebras were combined."""


class SummandsNotDistinct(QfabError):
    pass


class SummandDecomposable(QfabError):
    pass


class ProjDimTooBig(QfabError):
    """proj.dim of the idempotent quotient exceeds 1, so the quiver-level
    fabric test does not apply."""


class ConditionFailed(QfabError):
    def __init__(self, condition, witness):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition ({condition}) failed: {witness}")


class NoCompanionFound(QfabError):
    pass


class VerificationFailed(QfabError):
    pass


class NotGorensteinCertified(QfabError):
    pass


class InfiniteQuotientGlobalDimension(QfabError):
    pass


class CornerProjDimUnbounded(QfabError):
    pass


class AxiomViolation(QfabError):
    def __init__(self, index, message):
        self.index = index
        super().__init__(message)


class HypothesisViolated(QfabError):
    pass


class StageVerificationFailed(QfabError):
    pass


class UnknownFixture(QfabError):
    pass


class ParameterOutOfRange(QfabError):
    pass


class ParseError(QfabError):
    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownVertex(ParseError):
    pass


class NonParallelRelation(ParseError):
    pass

"""Exception hierarchy shared by every module."""


class YangBraidError(Exception):
    """Base class for all library errors."""


class IllegalType(YangBraidError, ValueError):
    pass


class InternalInconsistency(YangBraidError):
    """A derived quantity broke an identity that must hold; signals a bug."""


class SingularMatrix(YangBraidError, ZeroDivisionError):
    pass


class NotPolynomial(YangBraidError, ValueError):
    pass


class NonzeroDegree(YangBraidError, ValueError):
    pass


class NonzeroChainSum(YangBraidError, ValueError):
    pass


class NotReduced(YangBraidError, ValueError):
    pass


class NotLongestElement(YangBraidError, ValueError):
    pass


class PolynomialityViolation(InternalInconsistency):
    pass


class EquivalenceViolation(InternalInconsistency):
    pass


class TruncationTooSmall(YangBraidError, ValueError):
    pass

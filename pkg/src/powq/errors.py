"""Exception types shared across the package."""


class PowqError(Exception):
    """Base class for all errors raised by this package."""


class GroupTableError(PowqError):
    """A candidate multiplication table is not a group table."""


class NoIdentity(GroupTableError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"index 0 is not a two-sided identity (witness element {witness})")


class NoInverse(GroupTableError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(GroupTableError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"associativity fails at triple {triple}")


class UnknownName(PowqError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown catalog name {name!r}")


class UnsupportedSize(PowqError):
    def __init__(self, name, params):
        self.name = name
        self.params = params
        super().__init__(f"unsupported parameters {params} for catalog family {name!r}")


class NotNormal(PowqError):
    def __init__(self, g, n, conj):
        self.witness = (g, n, conj)
        super().__init__(f"subgroup not normal: {g}*{n}*{g}^-1 = {conj} is outside")


class Unrealizable(PowqError):
    """No finite abelian group matches the given power fingerprint."""


class AxiomViolation(PowqError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"power quandle axiom {axiom} fails at {witness}")


class SizeBound(PowqError):
    def __init__(self, order, bound):
        self.order = order
        self.bound = bound
        super().__init__(f"group order {order} exceeds configured bound {bound}")


class LimitExceeded(PowqError):
    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"coset enumeration exceeded limit of {limit} live cosets")


class CentralityFailure(PowqError):
    """The enumerated kernel is not central.  Signals an implementation bug."""


class SectionNotPqMorphism(PowqError):
    """A proposed section does not respect conjugation or the power maps."""


class KernelNotCentral(PowqError):
    """A proposed extension is not central."""


class ConsistencyError(PowqError):
    """Two computation routes that must agree disagreed.  Signals a bug."""


class UnsupportedFormat(PowqError):
    def __init__(self, fmt):
        self.fmt = fmt
        super().__init__(f"unsupported report format {fmt!r}")

"""Exception types shared across the package."""


class HypermorseError(Exception):
    """Base class for all package errors."""


class InvalidFaceCode(HypermorseError):
    """A word over {0,1,*} that does not canonically name a face of J(n,k)."""


class InvalidLabel(HypermorseError):
    """A grid square label (a,b) outside 0 <= a <= n-k-1, 0 <= b <= k-1."""


class NoFacets(HypermorseError):
    """Facets requested for a vertex."""


class InvalidDiagram(HypermorseError):
    """A shaded grid that is not closed downward and to the left."""


class InvalidTriple(HypermorseError):
    """A (d,i,j) outside its legal ranges."""


class BudgetExceeded(HypermorseError):
    """Order complex would exceed the configured simplex budget."""

    def __init__(self, message, cells=None, chains=None):
        super().__init__(message)
        self.cells = cells
        self.chains = chains


class NotConcentrated(HypermorseError):
    """Alternating-sum character requested for a subcomplex whose homology
    is spread over several degrees."""


class UseVertexCount(HypermorseError):
    """Betti formula asked for d = 0; the rank there is C(n,k) - 1."""

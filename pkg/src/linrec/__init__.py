"""Exact closed forms and evaluators for second-order linear recurrences."""

from linrec.errors import (
    ConsistencyError,
    DegenerateIndex,
    DomainError,
    IndexOutOfRange,
    IrrationalCoefficients,
    IrrationalResidue,
    NonPositiveDiscriminant,
    RadicandMismatch,
    RootOrderError,
    ZeroDominantCoefficient,
    ZeroTerm,
)
from linrec.quadfield import QuadRat, qr_add, qr_conj, qr_is_rational, qr_mul, qr_pow
from linrec.recurrence import (
    ClosedForm,
    Recurrence,
    eval_closed,
    eval_iterative,
    eval_matrix,
    from_roots,
    solve,
)

__version__ = "0.1.0"

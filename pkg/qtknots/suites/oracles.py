"""
Published reference values the acceptance suites compare against.

Coefficients written "s[2] + s[1,1]" are two-variable Schur polynomials:
each is evaluated at the alphabet q + t by ``qt_value``.
"""

from functools import lru_cache

from ..coeff import RatFunc, q, t
from ..plethysm import Alphabet, plethysm_scalar
from ..symfunc import parse_symfunc

_QT = Alphabet.scalar(q + t)


@lru_cache(maxsize=None)
def qt_value(text: str) -> RatFunc:
    """"s[2] + s[1,1]" -> s_2(q,t) + s_11(q,t)."""
    return plethysm_scalar(parse_symfunc(text), _QT)


SMALL_MACH = {
    (2,): "s[2] + q*s[1,1]",
    (1, 1): "s[2] + t*s[1,1]",
    (3,): "s[3] + (q^2 + q)*s[2,1] + q^3*s[1,1,1]",
    (2, 1): "s[3] + (q + t)*s[2,1] + q*t*s[1,1,1]",
    (1, 1, 1): "s[3] + (t^2 + t)*s[2,1] + t^3*s[1,1,1]",
}

# Rows and columns 4, 31, 22, 211, 1111; entries t^η(λ) K̃_λμ(q, 1/t)
KOSTKA4_CLASSICAL = (
    ("1", "q^3 + q^2 + q", "q^4 + q^2", "q^5 + q^4 + q^3", "q^6"),
    ("t", "q^2*t + q*t + 1", "q^2*t + q", "q^3*t + q^2 + q", "q^3"),
    ("t^2", "q*t^2 + q*t + t", "q^2*t^2 + 1", "q^2*t + q*t + q", "q^2"),
    ("t^3", "q*t^3 + t^2 + t", "q*t^2 + t", "q*t^2 + q*t + 1", "q"),
    ("t^6", "t^5 + t^4 + t^3", "t^4 + t^2", "t^3 + t^2 + t", "1"),
)

KOSTKA2_MODIFIED = (("1", "q"), ("1", "t"))

# ∇e_n: Schur function of X -> two-variable Schur coefficient
NABLA_EN = {
    1: {(1,): "1"},
    2: {(2,): "1", (1, 1): "s[1]"},
    3: {(3,): "1", (2, 1): "s[1] + s[2]", (1, 1, 1): "s[1,1] + s[3]"},
    4: {
        (4,): "1",
        (3, 1): "s[1] + s[2] + s[3]",
        (2, 2): "s[2] + s[2,1] + s[4]",
        (2, 1, 1): "s[1,1] + s[2,1] + s[3,1] + s[3] + s[4] + s[5]",
        (1, 1, 1, 1): "s[3,1] + s[4,1] + s[6]",
    },
}

NABLA_SHAT = {
    (1,): {(1,): "1"},
    (2,): {(1, 1): "1"},
    (1, 1): {(1, 1): "s[1]", (2,): "1"},
    (3,): {(1, 1, 1): "s[1]", (2, 1): "1"},
    (2, 1): {(1, 1, 1): "s[2]", (2, 1): "s[1]"},
    (1, 1, 1): {(1, 1, 1): "s[1,1] + s[3]", (2, 1): "s[1] + s[2]", (3,): "1"},
    (4,): {(1, 1, 1, 1): "s[1,1] + s[3]", (2, 1, 1): "s[1] + s[2]", (2, 2): "s[1]", (3, 1): "1"},
    (3, 1): {
        (1, 1, 1, 1): "s[2,1] + s[4]",
        (2, 1, 1): "s[1,1] + s[2] + s[3]",
        (2, 2): "s[2]",
        (3, 1): "s[1]",
    },
    (2, 2): {(1, 1, 1, 1): "s[1,1]", (2, 1, 1): "s[1]", (3, 1): "1"},
    (2, 1, 1): {
        (1, 1, 1, 1): "s[3,1] + s[5]",
        (2, 1, 1): "s[2,1] + s[3] + s[4]",
        (2, 2): "s[1,1] + s[3]",
        (3, 1): "s[2]",
    },
    (1, 1, 1, 1): {
        (1, 1, 1, 1): "s[3,1] + s[4,1] + s[6]",
        (2, 1, 1): "s[1,1] + s[2,1] + s[3] + s[3,1] + s[4] + s[5]",
        (2, 2): "s[2] + s[2,1] + s[4]",
        (3, 1): "s[1] + s[2] + s[3]",
        (4,): "1",
    },
}

# Superpolynomials: A-coefficients from A^0 upwards
SUPERPOLYS = {
    (2, 2): ("s[1]", "1"),
    (3, 2): ("s[1]", "1"),
    (4, 3): ("s[3] + s[1,1]", "s[1] + s[2]", "1"),
    (5, 4): (
        "s[3,1] + s[4,1] + s[6]",
        "s[1,1] + s[2,1] + s[3,1] + s[3] + s[4] + s[5]",
        "s[1] + s[2] + s[3]",
        "1",
    ),
    (6, 5): (
        "s[4,3] + s[4,2] + s[6,2] + s[6,1] + s[7,1] + s[8,1] + s[10]",
        "s[3,3] + s[3,2] + s[4,2] + s[5,2] + s[3,1] + 2*s[4,1] + 2*s[5,1] + 2*s[6,1] + s[7,1]"
        " + s[6] + s[7] + s[8] + s[9]",
        "s[3,2] + s[1,1] + s[2,1] + 2*s[3,1] + s[4,1] + s[5,1] + s[3] + s[4] + 2*s[5] + s[6] + s[7]",
        "s[1] + s[2] + s[3] + s[4]",
        "1",
    ),
}

A_CANDIDATES = {
    (5, 4): "s[1,1,1] + s[3,1] + s[4,1] + s[6]",
    (6, 5): "s[1,1,1,1] + s[3,1,1] + s[4,1,1] + s[5,1,1] + s[4,2] + s[4,3] + s[6,1] + s[6,2] + s[7,1] + s[8,1] + s[10]",
}

# y-exponent of the hook polynomial of each candidate above
A_CANDIDATE_HOOK_DELTA = {(5, 4): 2, (6, 5): 3}

TRIANGULAR_COUNTS = (1, 1, 2, 3, 4, 6, 7)

TRIANGULAR_SHAPES = (
    ((),),
    ((1,),),
    ((2,), (1, 1)),
    ((3,), (2, 1), (1, 1, 1)),
    ((4,), (3, 1), (2, 1, 1), (1, 1, 1, 1)),
    ((5,), (4, 1), (3, 2), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)),
    ((6,), (5, 1), (4, 2), (3, 2, 1), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1, 1, 1, 1, 1, 1)),
)

# 𝒟_τ for triangular τ of size <= 8, one of each conjugate pair
D_TAU = {
    (): "1",
    (1,): "s[1]",
    (2,): "s[2]",
    (2, 1): "s[1,1] + s[3]",
    (3,): "s[3]",
    (3, 1): "s[2,1] + s[4]",
    (4,): "s[4]",
    (3, 2): "s[3,1] + s[5]",
    (4, 1): "s[3,1] + s[5]",
    (5,): "s[5]",
    (3, 2, 1): "s[3,1] + s[4,1] + s[6]",
    (4, 2): "s[2,2] + s[4,1] + s[6]",
    (5, 1): "s[4,1] + s[6]",
    (6,): "s[6]",
    (4, 2, 1): "s[3,2] + s[4,1] + s[5,1] + s[7]",
    (5, 2): "s[3,2] + s[5,1] + s[7]",
    (6, 1): "s[5,1] + s[7]",
    (7,): "s[7]",
    (4, 3, 1): "s[4,2] + s[5,1] + s[6,1] + s[8]",
    (5, 3): "s[4,2] + s[6,1] + s[8]",
    (6, 2): "s[4,2] + s[6,1] + s[8]",
    (7, 1): "s[6,1] + s[8]",
    (8,): "s[8]",
}

# Compositions of 6 that are not partitions and straighten to a nonzero term
STRAIGHTENING = {
    (1, 1, 4): (1, (2, 2, 2)),
    (1, 3, 2): (-1, (2, 2, 2)),
    (2, 1, 3): (-1, (2, 2, 2)),
    (1, 5): (-1, (4, 2)),
    (2, 4): (-1, (3, 3)),
    (1, 4, 1): (-1, (3, 2, 1)),
    (1, 3, 1, 1): (-1, (2, 2, 1, 1)),
}

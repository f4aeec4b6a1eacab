"""Sparse polynomial arithmetic for coloring certificates.

The certificate method: a coloring constraint graph on variables
X_1..X_n yields the polynomial  P = prod over constrained pairs (i, j)
of (X_i - X_j).  If the coefficient of a monomial  prod X_i^{t_i}  with
sum t_i = deg P  is nonzero and every variable has more than t_i
admissible values, a proper choice always exists regardless of which
lists the adversary supplies.

Monomials are nibble-packed: exponent of variable i (0-based) lives in
bits 4i..4i+3 of an int key, so individual exponents must stay below 16.
That bound is far above anything the bundled certificates need.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

_LOG = logging.getLogger(__name__)

_NIBBLE = 0xF


class ExponentOverflow(ValueError):
    """An exponent reached 16 and no longer fits its nibble."""


def pack(exponents: Iterable[int]) -> int:
    key = 0
    for i, t in enumerate(exponents):
        if not (0 <= t <= _NIBBLE):
            raise ExponentOverflow(f"exponent {t} of variable {i + 1} not in 0..15")
        key |= t << (4 * i)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (4 * i)) & _NIBBLE for i in range(nvars))


@dataclass(frozen=True)
class Certificate:
    """A difference-product certificate instance.

    ``pairs`` use 1-based variable indices.  ``target`` is the monomial
    whose coefficient is evaluated; ``caps[i]`` is the guaranteed list
    size for variable i+1 (so the certificate applies when every list
    has at least that many admissible values).
    """

    name: str
    nvars: int
    pairs: tuple[tuple[int, int], ...]
    target: tuple[int, ...]
    caps: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.target) != self.nvars or len(self.caps) != self.nvars:
            raise ValueError("target/caps length must equal nvars")
        for i, j in self.pairs:
            if not (1 <= i <= self.nvars and 1 <= j <= self.nvars and i != j):
                raise ValueError(f"bad pair ({i}, {j})")
        if sum(self.target) != len(self.pairs):
            raise ValueError("target degree must equal the number of factors")

    @property
    def degree(self) -> int:
        return len(self.pairs)


def graph_polynomial_coefficient(
    nvars: int,
    pairs: Iterable[tuple[int, int]],
    target: tuple[int, ...],
) -> int:
    """Coefficient of ``prod X_i^{target[i-1]}`` in ``prod (X_i - X_j)``.

    Multiplies the factors sequentially over a sparse dict keyed by
    packed exponent vectors, pruning any monomial whose exponent already
    exceeds the target in some variable (factors only raise exponents,
    so such monomials can never contribute).
    """
    pairs = tuple(pairs)
    if sum(target) != len(pairs):
        return 0
    tgt = tuple(target)
    poly: dict[int, int] = {0: 1}
    for i, j in pairs:
        ii, jj = i - 1, j - 1
        shift_i, shift_j = 4 * ii, 4 * jj
        cap_i, cap_j = tgt[ii], tgt[jj]
        nxt: dict[int, int] = {}
        for key, coef in poly.items():
            ei = (key >> shift_i) & _NIBBLE
            if ei < cap_i:
                k2 = key + (1 << shift_i)
                nxt[k2] = nxt.get(k2, 0) + coef
            ej = (key >> shift_j) & _NIBBLE
            if ej < cap_j:
                k2 = key + (1 << shift_j)
                nxt[k2] = nxt.get(k2, 0) - coef
        poly = {k: c for k, c in nxt.items() if c}
    return poly.get(pack(tgt), 0)


def expand_polynomial(
    nvars: int,
    pairs: Iterable[tuple[int, int]],
    caps: Optional[tuple[int, ...]] = None,
) -> dict[int, int]:
    """Full sparse expansion of ``prod (X_i - X_j)``.

    With ``caps`` given, monomials where some exponent reaches
    ``caps[i]`` are discarded as they grow (sound pruning for witness
    search: exponents never decrease)."""
    poly: dict[int, int] = {0: 1}
    for i, j in pairs:
        ii, jj = i - 1, j - 1
        shift_i, shift_j = 4 * ii, 4 * jj
        lim_i = caps[ii] if caps else _NIBBLE + 1
        lim_j = caps[jj] if caps else _NIBBLE + 1
        nxt: dict[int, int] = {}
        for key, coef in poly.items():
            ei = (key >> shift_i) & _NIBBLE
            if ei + 1 < lim_i or (caps is None and ei + 1 <= _NIBBLE):
                if ei + 1 > _NIBBLE:
                    raise ExponentOverflow("exponent grew past 15")
                k2 = key + (1 << shift_i)
                nxt[k2] = nxt.get(k2, 0) + coef
            ej = (key >> shift_j) & _NIBBLE
            if ej + 1 < lim_j or (caps is None and ej + 1 <= _NIBBLE):
                if ej + 1 > _NIBBLE:
                    raise ExponentOverflow("exponent grew past 15")
                k2 = key + (1 << shift_j)
                nxt[k2] = nxt.get(k2, 0) - coef
        poly = {k: c for k, c in nxt.items() if c}
    return poly


def cn_witness(
    nvars: int,
    pairs: Iterable[tuple[int, int]],
    caps: tuple[int, ...],
) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest witness monomial under the caps.

    Searches the expansion of ``prod (X_i - X_j)`` for a monomial with
    nonzero coefficient and exponent of variable i strictly below
    ``caps[i-1]`` for every i.  Returns its exponent vector or ``None``.
    """
    pairs = tuple(pairs)
    poly = expand_polynomial(nvars, pairs, tuple(caps))
    best: Optional[tuple[int, ...]] = None
    deg = len(pairs)
    for key, coef in poly.items():
        exps = unpack(key, nvars)
        if sum(exps) != deg:
            continue
        if best is None or exps < best:
            best = exps
    return best


def coefficient(
    pairs: Iterable[tuple[int, int]], target: tuple[int, ...]
) -> int:
    """Coefficient of the target monomial in ``prod (X_i - X_j)``.

    The variable count is the length of ``target``.  A target whose
    degree differs from the number of factors makes the coefficient
    trivially zero; that case returns 0 after logging a degree-mismatch
    note instead of raising.
    """
    pairs = tuple(pairs)
    nvars = len(target)
    for i, j in pairs:
        if not (1 <= i < j <= nvars):
            raise ValueError(f"pair ({i}, {j}) out of range for {nvars} variables")
    if sum(target) != len(pairs):
        _LOG.info(
            "degree mismatch: target degree %d, %d factors; coefficient is 0",
            sum(target), len(pairs),
        )
        return 0
    return graph_polynomial_coefficient(nvars, pairs, tuple(target))


def check_certificate(cert: Certificate) -> tuple[int, Optional[tuple[int, ...]]]:
    """Evaluate a certificate: target coefficient plus a witness search.

    Returns ``(coefficient, witness)``.  The certificate is valid when
    the coefficient is nonzero and the target respects the caps; the
    witness is an independent confirmation that some qualifying monomial
    survives under the caps (it need not equal the target).
    """
    coef = graph_polynomial_coefficient(cert.nvars, cert.pairs, cert.target)
    witness = cn_witness(cert.nvars, cert.pairs, cert.caps)
    return coef, witness


# -- bundled certificates -------------------------------------------------
#
# Each instance below is a frozen transcription of one certificate used
# by the reducibility catalog.  Variable numbering matches the edge
# numbering in the corresponding host configuration; see
# reducibility.catalog() for the geometric side.

FOUR_VERTEX = Certificate(
    name="four-vertex",
    nvars=8,
    pairs=(
        (1, 2), (1, 4), (1, 5), (1, 6), (1, 8),
        (2, 3), (2, 5), (2, 6), (2, 7),
        (3, 4), (3, 6), (3, 7), (3, 8),
        (4, 5), (4, 7), (4, 8),
        (5, 6), (5, 8),
        (6, 7),
        (7, 8),
    ),
    target=(3, 3, 3, 3, 2, 2, 2, 2),
    caps=(4, 4, 4, 4, 3, 3, 3, 3),
)

NINE_FACE = Certificate(
    name="nine-face",
    nvars=7,
    pairs=(
        (1, 2), (1, 3), (1, 6), (1, 7),
        (2, 3), (2, 4), (2, 7),
        (3, 4), (3, 5),
        (4, 5), (4, 6), (4, 7),
        (5, 6), (5, 7),
        (6, 7),
    ),
    target=(2, 2, 2, 2, 2, 3, 2),
    caps=(3, 3, 3, 3, 4, 4, 3),
)

TEN_FACE_ADJACENT = Certificate(
    name="ten-face-adjacent",
    nvars=10,
    pairs=(
        (1, 2), (1, 3), (1, 9), (1, 10),
        (2, 3), (2, 5), (2, 9), (2, 10),
        (3, 5), (3, 6), (3, 10),
        (5, 6), (5, 7),
        (6, 7), (6, 9),
        (7, 9), (7, 10),
        (9, 10),
    ),
    target=(4, 4, 2, 0, 2, 1, 2, 0, 0, 3),
    caps=(5, 5, 3, 1, 3, 3, 3, 1, 3, 5),
)

TEN_FACE_DIST3 = Certificate(
    name="ten-face-dist3",
    nvars=10,
    pairs=(
        (1, 2), (1, 3), (1, 4), (1, 8), (1, 10),
        (2, 3), (2, 4), (2, 10),
        (3, 4), (3, 6), (3, 10),
        (4, 6), (4, 7),
        (6, 7), (6, 8),
        (7, 8), (7, 10),
        (8, 10),
    ),
    target=(3, 2, 2, 3, 0, 2, 2, 1, 0, 3),
    caps=(4, 3, 4, 4, 1, 3, 3, 3, 1, 4),
)

TEN_FACE_DIST4 = Certificate(
    name="ten-face-dist4",
    nvars=10,
    pairs=TEN_FACE_DIST3.pairs,
    target=TEN_FACE_DIST3.target,
    caps=(4, 3, 3, 4, 1, 3, 3, 3, 1, 4),
)

CERTIFICATES: dict[str, Certificate] = {
    c.name: c
    for c in (
        FOUR_VERTEX,
        NINE_FACE,
        TEN_FACE_ADJACENT,
        TEN_FACE_DIST3,
        TEN_FACE_DIST4,
    )
}

# Expected target coefficients, pinned so a drifting transcription is
# caught immediately rather than through a downstream proof obligation.
EXPECTED_COEFFICIENTS: dict[str, int] = {
    "four-vertex": 6,
    "nine-face": -3,
    "ten-face-adjacent": 1,
    "ten-face-dist3": -1,
    "ten-face-dist4": -1,
}


def lemma_polynomial(
    name: str,
) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...], tuple[int, ...]]:
    """Bundled certificate data by name: ``(pairs, target, caps)``."""
    cert = CERTIFICATES.get(name)
    if cert is None:
        raise ValueError(
            f"unknown certificate {name!r}; known: {', '.join(sorted(CERTIFICATES))}"
        )
    return cert.pairs, cert.target, cert.caps

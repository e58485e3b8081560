"""Upper bounds on the order of the Schur multiplier M(G) of a finite p-group.

Every bound has the form ``|M(G)| <= p**x`` (or ``|gamma_2(G)| |M(G)| <= p**x``)
and is reported through its exponent ``x``, kept as an exact
:class:`~fractions.Fraction`.  Since the true order is a power of ``p``, the
floor of ``x`` is an equally valid exponent and is reported alongside.

Group-theoretic hypotheses that cannot be read off the numeric inputs
(nilpotency class, the group being special, a vanishing restriction map)
are listed in ``BoundReport.assumptions``; they are the caller's
responsibility.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple, Sequence

from .extremal import triangular_decompose

M_G = "M(G)"
GAMMA2_M_G = "gamma2(G)*M(G)"


class BoundError(ValueError):
    """Inputs outside the hypotheses of the requested bound."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class BoundReport:
    formula_id: str
    exponent: Fraction
    bound_on: str
    inputs: dict
    assumptions: tuple[str, ...] = ()
    variants: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.exponent < 0:
            raise BoundError(
                f"{self.formula_id}: exponent {self.exponent} is negative; "
                f"the inputs {self.inputs} cannot describe a group satisfying the hypotheses"
            )

    @property
    def exponent_floor(self) -> int:
        return math.floor(self.exponent)

    def to_dict(self) -> dict:
        return {
            "formula_id": self.formula_id,
            "bound_on": self.bound_on,
            "inputs": self.inputs,
            "exponent_rational": _frac_str(self.exponent),
            "exponent_floor": self.exponent_floor,
            "assumptions": list(self.assumptions),
            "variants": {
                k: {"exponent_rational": _frac_str(v), "exponent_floor": math.floor(v)}
                for k, v in self.variants.items()
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise BoundError(f"p={p} is not prime")


def _check_not_2_3(p: int, formula: str) -> None:
    _check_prime(p)
    if p in (2, 3):
        raise BoundError(f"{formula} requires p != 2, 3 (got p={p})")


def _check_alpha(alpha: Sequence[int], d: int) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if len(alpha) != d:
        raise BoundError(f"need d={d} abelian invariants, got {len(alpha)}")
    if any(a < 1 for a in alpha):
        raise BoundError(f"abelian invariants must be positive: {alpha}")
    if any(alpha[i] < alpha[i + 1] for i in range(d - 1)):
        raise BoundError(f"abelian invariants must be non-increasing: {alpha}")
    return alpha


@dataclass(frozen=True)
class GroupProfile:
    """Numeric invariants of a p-group of order p**n.

    ``k``: |gamma_2 G| = p**k; ``c``: nilpotency class; ``delta``: d(G/Z(G));
    ``e``: exponent of G^ab is p**e; ``alpha``: abelian invariants of G^ab.
    """

    p: int
    n: int
    d: int
    k: int
    c: int | None = None
    delta: int | None = None
    e: int | None = None
    alpha: tuple[int, ...] | None = None

    def __post_init__(self):
        _check_prime(self.p)
        if self.n < 1 or not 1 <= self.d <= self.n or not 0 <= self.k <= self.n:
            raise BoundError(f"need n >= 1, 1 <= d <= n, 0 <= k <= n; got n={self.n}, d={self.d}, k={self.k}")
        if self.alpha is not None:
            alpha = _check_alpha(self.alpha, self.d)
            object.__setattr__(self, "alpha", alpha)
            if sum(alpha) != self.n - self.k:
                raise BoundError(f"abelian invariants {alpha} must sum to n-k={self.n - self.k}")
            if self.e is not None and alpha[0] != self.e:
                raise BoundError(f"largest abelian invariant {alpha[0]} differs from e={self.e}")

    @property
    def coclass(self) -> int | None:
        return None if self.c is None else self.n - self.c

    @property
    def m(self) -> int:
        """log_p |G^ab|."""
        return self.n - self.k


def special_bound(p: int, d: int, k: int) -> BoundReport:
    """Bound for a special p-group with d generators and derived subgroup of rank k."""
    _check_prime(p)
    if d < 2:
        raise BoundError(f"special p-groups need d >= 2, got d={d}")
    if not 2 <= k <= comb(d, 2):
        raise BoundError(f"rank k must satisfy 2 <= k <= C(d,2)={comb(d, 2)}, got k={k}")
    # missing commutators form a graph on d vertices; its triangles are the
    # triples not covered, at most the extremal count
    dec = triangular_decompose(comb(d, 2) - k)
    x = Fraction(d * (d + 2 * k - 1), 2) - k - comb(d, 3) + comb(dec.r, 3) + comb(dec.t, 2)
    return BoundReport(
        "special",
        x,
        M_G,
        {"p": p, "d": d, "k": k, "n": d + k, "r": dec.r, "t": dec.t},
        ("G is a special p-group of rank k",),
    )


def _delta_terms(delta: int) -> int:
    return -max(0, delta - 2) - max(1, delta - 3)


def ellis_wiegold_exponent(d: int, n: int, k: int, e: int, delta: int) -> Fraction:
    """Earlier class-agnostic exponent d(n-k-e)/2 + (delta-1)k - max(0, delta-2)."""
    return Fraction(d * (n - k - e), 2) + (delta - 1) * k - max(0, delta - 2)


def nil3_bound(p: int, d: int, n: int, k: int, e: int, delta: int) -> BoundReport:
    _check_not_2_3(p, "nil3_bound")
    if delta < 1:
        raise BoundError(f"delta must be at least 1, got {delta}")
    if n - k - e < 0:
        raise BoundError(f"need n-k-e >= 0, got {n - k - e}")
    x = Fraction(d * (n - k - e), 2) + (delta - 1) * k + _delta_terms(delta)
    return BoundReport(
        "nil3",
        x,
        M_G,
        {"p": p, "d": d, "n": n, "k": k, "e": e, "delta": delta},
        ("nilpotency class c >= 3",),
    )


def simple_nil3_bound(p: int, d: int, n: int, k: int) -> BoundReport:
    _check_not_2_3(p, "simple_nil3_bound")
    if n - k - 2 < 0:
        raise BoundError(f"need n-k-2 >= 0, got {n - k - 2}")
    return BoundReport(
        "simple",
        Fraction((d - 1) * (n - k - 2), 2),
        M_G,
        {"p": p, "d": d, "n": n, "k": k},
        ("nilpotency class c >= 3",),
    )


def sharpened_nil3_bound(p: int, d: int, n: int, k: int, delta: int, alpha: Sequence[int]) -> BoundReport:
    _check_not_2_3(p, "sharpened_nil3_bound")
    if delta < 1:
        raise BoundError(f"delta must be at least 1, got {delta}")
    alpha = _check_alpha(alpha, d)
    spread = alpha[0] - alpha[-1]
    x = Fraction((d - 1) * (n - k - spread), 2) + (delta - 1) * k + _delta_terms(delta)
    return BoundReport(
        "sharpened",
        x,
        M_G,
        {"p": p, "d": d, "n": n, "k": k, "delta": delta, "alpha": list(alpha)},
        ("nilpotency class c >= 3",),
    )


def non_homocyclic_bound(p: int, d: int, n: int, k: int, alpha: Sequence[int]) -> BoundReport:
    """General exponent, plus a ``not_homocyclic`` variant when alpha_1 > alpha_d."""
    _check_not_2_3(p, "non_homocyclic_bound")
    alpha = _check_alpha(alpha, d)
    spread = alpha[0] - alpha[-1]
    variants = {}
    if spread > 0:
        variants["not_homocyclic"] = Fraction((d - 1) * (n + k - 3), 2)
    return BoundReport(
        "nonhomocyclic",
        Fraction((d - 1) * (n + k - 2 - spread), 2),
        M_G,
        {"p": p, "d": d, "n": n, "k": k, "alpha": list(alpha)},
        ("nilpotency class c >= 3",),
        variants,
    )


def abelian_tensor_exponent(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """log_p |A (x) B| for abelian p-groups with invariants ``alpha`` and ``beta``."""
    if any(a < 1 for a in alpha) or any(b < 1 for b in beta):
        raise BoundError("abelian invariants must be positive")
    return sum(min(a, b) for a in alpha for b in beta)


def vermani_improved_bound(p: int, m: int, r_sub: int, d_quot: int, tensor_exponent: int) -> BoundReport:
    """Bound on |gamma_2(G)| |M(G)| through a central subgroup K.

    ``m``: log_p |G/K|; ``r_sub``: log_p |gamma_2(G)K/K|; ``d_quot``: d(G/K);
    ``tensor_exponent``: log_p |(G/K)^ab (x) K|.  The ``d_quot_replaced``
    variant substitutes m - r_sub for d(G/K).
    """
    _check_prime(p)
    if r_sub < 0 or m < r_sub:
        raise BoundError(f"need m >= r_sub >= 0, got m={m}, r_sub={r_sub}")
    if not 0 <= d_quot <= m - r_sub:
        # G/K modulo its Frattini subgroup has order at most p^(m - r_sub)
        raise BoundError(f"d(G/K) must lie in [0, m - r_sub] = [0, {m - r_sub}], got {d_quot}")
    if tensor_exponent < 0:
        raise BoundError("tensor exponent must be non-negative")
    x = tensor_exponent + Fraction(d_quot * (m + r_sub - 2), 2)
    weaker = tensor_exponent + Fraction((m - r_sub) * (m + r_sub - 2), 2)
    return BoundReport(
        "vermani",
        x,
        GAMMA2_M_G,
        {"p": p, "m": m, "r_sub": r_sub, "d_quot": d_quot, "tensor_exponent": tensor_exponent},
        (
            "nilpotency class c >= 4",
            "K is central and the restriction map M(G) -> M(K) is zero",
        ),
        {"d_quot_replaced": weaker},
    )


def coclass_bound(p: int, coclass_r: int, k: int) -> BoundReport:
    _check_not_2_3(p, "coclass_bound")
    if coclass_r < 0:
        raise BoundError(f"coclass must be non-negative, got {coclass_r}")
    if k < 1:
        raise BoundError(f"k must be at least 1, got {k}")
    x = Fraction(coclass_r * coclass_r - coclass_r, 2) + k * coclass_r
    return BoundReport(
        "coclass",
        x,
        M_G,
        {"p": p, "coclass": coclass_r, "k": k},
        ("nilpotency class c > 2",),
    )


class Verdict(NamedTuple):
    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def hatui_consistency_check(d_range) -> Verdict:
    """Rank-2 special bound should equal d(d-1)/2 + 3 for every d >= 3."""
    for d in d_range:
        if d < 3:
            raise BoundError(f"d must be at least 3, got {d}")
        got = special_bound(3, d, 2).exponent
        want = Fraction(d * (d - 1), 2) + 3
        if got != want:
            return Verdict(False, (d, got, want))
    return Verdict(True)


class Table1Row(NamedTuple):
    group_id: int
    order_exponent: int
    d: int
    k: int
    reported_exponent: int
    computed_exponent: Fraction

    @property
    def match(self) -> bool:
        return self.computed_exponent == self.reported_exponent


# SmallGroup ids of order 3^n and their reported |M(G)| = 3^x
TABLE1 = (
    (37, 5, 3, 2, 6),
    (122, 6, 3, 3, 8),
    (6477, 7, 4, 3, 12),
    (263726, 8, 4, 4, 14),
)


def table1() -> list[Table1Row]:
    return [
        Table1Row(gid, order, d, k, reported, special_bound(3, d, k).exponent)
        for gid, order, d, k, reported in TABLE1
    ]

"""A separable state whose operator Schmidt rank is three but whose
shortest separable decomposition needs four product terms.

The state is the diagonal mixture (1/16) sum delta_i (x) delta_i on
C4 (x) C4; a three-term decomposition would give eight nonnegative
weight vectors in R^3 with prescribed pairwise dot products, which a
support scan rules out.
"""

from __future__ import annotations

from itertools import combinations

from ..qmat import ComplexMatrix, operator_schmidt_rank, tensor_product
from ..scalars import ONE, ZERO, scalar


def diagonal_factors():
    def diag(bits):
        return ComplexMatrix.exact(
            [[scalar(bits[i]) if i == j else ZERO for j in range(4)]
             for i in range(4)])
    return [
        diag((1, 0, 1, 0)),
        diag((0, 1, 0, 1)),
        diag((1, 1, 0, 0)),
        diag((0, 0, 1, 1)),
    ]


def build_state():
    deltas = diagonal_factors()
    acc = None
    for d in deltas:
        term = tensor_product(d, d)
        acc = term if acc is None else acc + term
    from fractions import Fraction
    return acc.scale(scalar(Fraction(1, 16)))


# required dot products alpha^j . beta^k for the three-term decomposition
_TARGET = {}
for _j in range(4):
    for _k in range(4):
        _TARGET[(_j, _k)] = 1
for _j in range(4):
    _TARGET[(_j, _j)] = 2
for _j, _k in ((0, 3), (3, 0), (1, 2), (2, 1)):
    _TARGET[(_j, _k)] = 0


def three_term_support_scan():
    """Enumerate support patterns of the eight weight vectors in R^3:
    zero targets force disjoint supports, nonzero targets force
    overlapping ones.  Returns the list of surviving patterns."""
    supports = []
    for size in (1, 2):
        for combo in combinations(range(3), size):
            mask = 0
            for c in combo:
                mask |= 1 << c
            supports.append(mask)
    survivors = []

    def compatible(am, bm, target):
        inter = am & bm
        return (inter == 0) if target == 0 else (inter != 0)

    def admissible_beta(alpha_masks, k):
        out = []
        for bm in supports:
            if all(compatible(alpha_masks[j], bm, _TARGET[(j, k)])
                   for j in range(4)):
                out.append(bm)
        return out

    from itertools import product as iproduct
    for alpha_masks in iproduct(supports, repeat=4):
        betas = []
        dead = False
        for k in range(4):
            opts = admissible_beta(alpha_masks, k)
            if not opts:
                dead = True
                break
            betas.append(opts)
        if dead:
            continue
        for beta_masks in iproduct(*betas):
            survivors.append((alpha_masks, beta_masks))
    return survivors


def schmidt_length_demo():
    """Build the state, confirm Schmidt rank three, confirm the four-term
    product decomposition, and rule out three terms."""
    state = build_state()
    rank = operator_schmidt_rank(state)
    deltas = diagonal_factors()
    four_term_psd = all(d.is_psd() for d in deltas)
    survivors = three_term_support_scan()
    return {
        "schmidt_rank": rank,
        "four_term_psd": four_term_psd,
        "three_term_support_patterns": len(survivors),
        "three_term_feasible": bool(survivors),
    }

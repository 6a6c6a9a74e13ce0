"""Trunk trees over length-<=1 semiorders and the right-to-left-minima
bijection with Dyck-path peaks.

Linearly ordering the m upper elements of a length-<=1 semiorder by a
permutation turns it into a tree: the ordered upper elements form the main
trunk and each lower element hangs as a leaf off the lowest trunk element
it lies below.  The tree shape only depends on the positions and values of
the permutation's right-to-left minima; those pair sets biject with Dyck
paths of semilength m keyed by their peaks, Narayana-many for each fixed
number of minima.  When the upper entries of the vector are pairwise
distinct, the number of distinct tree shapes over all m! permutations is
the Catalan number C_m.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from itertools import permutations

from .core import LengthTooLargeError, Semiorder, level_profile
from .counting import catalan
from .trees import DyckPath


class NotAPermutationError(ValueError):
    """Input is not a permutation of 1..m."""


class InvalidRtlmSetError(ValueError):
    """Pairs cannot be the right-to-left minima of any permutation."""


class HypothesisViolatedWarning(UserWarning):
    """Upper entries are not pairwise distinct; the Catalan-count guarantee
    does not apply, though the distinct-tree count is still computed."""


@dataclass(frozen=True)
class TrunkTree:
    """Canonical shape of a trunk tree: leaves per trunk position, top down."""

    leaf_counts: tuple[int, ...]

    @property
    def trunk_length(self) -> int:
        return len(self.leaf_counts)

    @property
    def total_leaves(self) -> int:
        return sum(self.leaf_counts)


def _check_permutation(sigma) -> tuple[int, ...]:
    perm = tuple(int(v) for v in sigma)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise NotAPermutationError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def rtl_minima(sigma) -> tuple[tuple[int, int], ...]:
    """(position, value) pairs of entries smaller than everything to their
    right, in increasing position order."""
    perm = _check_permutation(sigma)
    out = []
    smallest = len(perm) + 1
    for pos in range(len(perm), 0, -1):
        if perm[pos - 1] < smallest:
            smallest = perm[pos - 1]
            out.append((pos, smallest))
    return tuple(reversed(out))


def upper_count(s: Semiorder) -> int:
    """Number of first-level elements of a length-<=1 semiorder."""
    profile = level_profile(s)
    if profile.length > 1:
        raise LengthTooLargeError("trunk trees need length <= 1")
    return profile.sizes[0]


def trunk_tree(s: Semiorder, sigma) -> TrunkTree:
    """Build T(s, sigma): trunk in sigma order, lower elements as leaves.

    Lower element i lies below the upper elements 1..t_i (a prefix, since
    the vector is nonincreasing); it attaches to whichever of those sits
    lowest on the trunk.
    """
    m = upper_count(s)
    perm = _check_permutation(sigma)
    if len(perm) != m:
        raise NotAPermutationError(f"permutation must have length {m}")
    position_of = {value: pos for pos, value in enumerate(perm, start=1)}
    leaves = [0] * m
    n = s.n
    for i in range(m + 1, n + 1):
        t_i = sum(1 for j in range(1, m + 1) if s.rho[j - 1] > n - i)
        attach = max(position_of[v] for v in range(1, t_i + 1))
        leaves[attach - 1] += 1
    return TrunkTree(tuple(leaves))


def count_trunk_trees(s: Semiorder) -> int:
    """Size of {T(s, sigma) : sigma over all permutations of the trunk}.

    Equals C_m when the upper entries are pairwise distinct; otherwise the
    count is still returned but flagged with HypothesisViolatedWarning.
    """
    m = upper_count(s)
    uppers = s.rho[:m]
    if len(set(uppers)) != m:
        warnings.warn(
            HypothesisViolatedWarning(
                f"upper entries {uppers} are not pairwise distinct; "
                f"the count may fall short of C_{m} = {catalan(m)}"
            )
        )
    shapes = {trunk_tree(s, sigma).leaf_counts for sigma in permutations(range(1, m + 1))}
    return len(shapes)


def narayana(m: int, k: int) -> int:
    """N(m, k) = binom(m, k) binom(m, k-1) / m: Dyck paths of semilength m
    with k peaks."""
    if m < 1 or not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m; got {(m, k)}")
    return math.comb(m, k) * math.comb(m, k - 1) // m


def _validate_rtlm(pairs, m: int) -> tuple[tuple[int, int], ...]:
    seq = tuple((int(a), int(b)) for a, b in pairs)
    if not seq:
        raise InvalidRtlmSetError("need at least one pair")
    positions = [a for a, _ in seq]
    values = [b for _, b in seq]
    if positions != sorted(set(positions)) or values != sorted(set(values)):
        raise InvalidRtlmSetError("positions and values must be strictly increasing")
    if values[0] != 1 or positions[-1] != m or values[-1] > m or positions[0] < 1:
        raise InvalidRtlmSetError("need value 1 first and position m last")
    for i in range(len(seq) - 1):
        if positions[i] < values[i + 1] - 1:
            raise InvalidRtlmSetError(
                f"pair {seq[i + 1]} cannot follow {seq[i]} in any permutation"
            )
    return seq


def rtlm_to_dyck(pairs, m: int) -> DyckPath:
    """Walk the peak coordinates into a Dyck path of semilength m.

    Up a_1, down b_2 - b_1, up a_2 - a_1, ..., closing with m + 1 - b_k
    down steps; the image has exactly one peak per pair.
    """
    seq = _validate_rtlm(pairs, m)
    steps = []
    prev_a = 0
    for i, (a, b) in enumerate(seq):
        steps.append("U" * (a - prev_a))
        next_b = seq[i + 1][1] if i + 1 < len(seq) else m + 1
        steps.append("D" * (next_b - b))
        prev_a = a
    return DyckPath("".join(steps))


def dyck_to_rtlm(path: DyckPath) -> tuple[tuple[int, int], ...]:
    """Read peak coordinates: the i-th up-step endpoint paired with the
    j-th down-step startpoint wherever a U immediately precedes a D."""
    word = path.word
    out = []
    ups = downs = 0
    for pos, step in enumerate(word):
        if step == "U":
            ups += 1
            if pos + 1 < len(word) and word[pos + 1] == "D":
                out.append((ups, downs + 1))
        else:
            downs += 1
    return tuple(out)

"""Constructive bijection between plane trees and semiorders.

A tree with n+1 nodes and height H+1 corresponds to an n-element semiorder
of length H whose level sizes equal the tree's depth profile.  The vector
is assembled level by level: with x_i nodes at depth i, s^i the per-parent
child counts between depths i-1 and i, and u^i their suffix sums, the
stage vectors are

    R^1 = (0, ..., 0)                                   (x_1 zeros)
    R^{i+1} = (older entries + x_{i+1},
               level-i entries + u^{i+1} componentwise,
               x_{i+1} fresh zeros)

and R^{H+1} is the canonical vector of the image semiorder.  The deepest
x_{H+1} nodes become the good elements.  Composing with the tree/Dyck walk
transports everything to Dyck paths, and a separate two-level arrangement
map handles length <= 1 directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import LengthTooLargeError, Semiorder, level_profile
from .trees import DyckPath, OrderedTree, dyck_to_tree, tree_to_dyck


class IndexOutOfRangeError(ValueError):
    """An arrangement index falls outside {2, ..., n}."""


@dataclass(frozen=True)
class LevelLinkage:
    """Depth profile and parent/child link counts of a tree.

    ``sizes[i-1]`` is x_i (nodes at depth i), ``child_counts[i-1]`` is s^i
    (children at depth i per depth-(i-1) node, left to right),
    ``suffix_sums[i-1]`` is u^i with u_j^i = s_j^i + ... + s_last^i, and
    ``cumulative[i-1]`` is y_i = x_1 + ... + x_i.
    """

    sizes: tuple[int, ...]
    child_counts: tuple[tuple[int, ...], ...]
    suffix_sums: tuple[tuple[int, ...], ...]
    cumulative: tuple[int, ...]


def level_linkage(tree: OrderedTree) -> LevelLinkage:
    """Read x, s, u, y off a tree by scanning depths left to right."""
    generations: list[list[OrderedTree]] = []
    current = [tree]
    while True:
        nxt = [child for node in current for child in node.children]
        if not nxt:
            break
        generations.append(nxt)
        current = nxt
    sizes = tuple(len(g) for g in generations)
    parents = [[tree]] + generations[:-1]
    child_counts = tuple(
        tuple(len(p.children) for p in parents[i]) for i in range(len(generations))
    )
    suffix_sums = []
    for counts in child_counts:
        total = 0
        sums = []
        for c in reversed(counts):
            total += c
            sums.append(total)
        suffix_sums.append(tuple(reversed(sums)))
    cumulative = []
    running = 0
    for x in sizes:
        running += x
        cumulative.append(running)
    return LevelLinkage(sizes, child_counts, tuple(suffix_sums), tuple(cumulative))


def construction_stages(tree: OrderedTree) -> tuple[tuple[int, ...], ...]:
    """All intermediate vectors R^1, ..., R^{H+1} for a tree.

    Empty for the single-node tree, which maps to the empty semiorder.
    """
    link = level_linkage(tree)
    depth_count = len(link.sizes)
    if depth_count == 0:
        return ()
    stages = []
    r = [0] * link.sizes[0]
    stages.append(tuple(r))
    for i in range(1, depth_count):
        x_next = link.sizes[i]
        u_next = link.suffix_sums[i]
        base = len(r) - link.sizes[i - 1]
        r = (
            [v + x_next for v in r[:base]]
            + [r[base + j] + u_next[j] for j in range(link.sizes[i - 1])]
            + [0] * x_next
        )
        stages.append(tuple(r))
    return tuple(stages)


def tree_to_semiorder(tree: OrderedTree) -> Semiorder:
    """Map an (n+1)-node tree of height H+1 to an n-element length-H semiorder."""
    stages = construction_stages(tree)
    return Semiorder(stages[-1]) if stages else Semiorder(())


def semiorder_to_tree(s: Semiorder) -> OrderedTree:
    """Inverse construction: recover the child counts level by level.

    For the j-th element on level i, u_j^{i+1} is its vector entry minus
    the total size of levels i+2 and deeper, and s_j^{i+1} is the drop
    u_j^{i+1} - u_{j+1}^{i+1} (with a trailing zero).  Children attach to
    parents left to right in consecutive runs.
    """
    if s.n == 0:
        return OrderedTree()
    prof = level_profile(s)
    x = prof.sizes
    depth_count = len(x)
    child_counts: list[tuple[int, ...]] = [(x[0],)]
    for i in range(1, depth_count):
        deeper = sum(x[i + 1 :])
        u = [s.rho[e - 1] - deeper for e in prof.elements_on(i)]
        u.append(0)
        drops = tuple(u[j] - u[j + 1] for j in range(len(u) - 1))
        if any(d < 0 for d in drops) or u[-2] < 0 or sum(drops) != x[i]:
            raise ValueError("vector does not encode a level-linked tree")
        child_counts.append(drops)
    nodes = [OrderedTree()] * x[-1]
    for depth in range(depth_count - 1, 0, -1):
        rebuilt = []
        pos = 0
        for c in child_counts[depth]:
            rebuilt.append(OrderedTree(tuple(nodes[pos : pos + c])))
            pos += c
        nodes = rebuilt
    return OrderedTree(tuple(nodes))


def dyck_to_semiorder(path: DyckPath) -> Semiorder:
    """Height-(H+1) Dyck word to length-H semiorder, through the tree walk."""
    return tree_to_semiorder(dyck_to_tree(path))


def semiorder_to_dyck(s: Semiorder) -> DyckPath:
    return tree_to_dyck(semiorder_to_tree(s))


def arrangement_to_semiorder(n: int, upper) -> Semiorder:
    """Two-level arrangement to a semiorder of length <= 1.

    Element 1 and the elements indexed by ``upper`` (a subset of 2..n) sit
    on the upper level, the rest below; a_i > a_j iff i < j with a_i upper
    and a_j lower.
    """
    if n < 1:
        raise IndexOutOfRangeError("need n >= 1")
    chosen = {int(u) for u in upper}
    if any(u < 2 or u > n for u in chosen):
        raise IndexOutOfRangeError(f"upper indices must lie in 2..{n}")
    upper_set = {1} | chosen
    lower = [j for j in range(1, n + 1) if j not in upper_set]
    counts = [sum(1 for j in lower if j > t) for t in sorted(upper_set)]
    counts += [0] * len(lower)
    return Semiorder.from_counts(counts)


def semiorder_to_arrangement(s: Semiorder) -> frozenset[int]:
    """Recover the upper-level subscripts {t_2, ..., t_m} from the vector.

    With m = n - r_1 upper elements, the i-th of them carries subscript
    t_i = r_1 - r_i + i; t_1 = 1 is implicit and the returned set is the
    arrangement's choice set U within {2, ..., n}.
    """
    if s.n == 0:
        raise IndexOutOfRangeError("need n >= 1")
    if level_profile(s).length > 1:
        raise LengthTooLargeError("arrangements encode only semiorders of length <= 1")
    r1 = s.rho[0]
    m = s.n - r1
    return frozenset(r1 - s.rho[i - 1] + i for i in range(2, m + 1))

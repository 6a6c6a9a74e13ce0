"""Plane (ordered) trees, Dyck words, and the depth-first walk between them.

Trees serialize to balanced parentheses, one ``( ... )`` pair per node with
the root included; Dyck words are ASCII strings over ``U``/``D``.  The walk
visits children left to right, emitting U on entering a child and D on
leaving it, so a tree with n+1 nodes and height H maps to a word of
semilength n and height H.
"""

from __future__ import annotations

from dataclasses import dataclass


class UnbalancedParensError(ValueError):
    def __init__(self, position: int):
        super().__init__(f"unbalanced parentheses at position {position}")
        self.position = position


class TrailingInputError(ValueError):
    def __init__(self, position: int):
        super().__init__(f"trailing input after the root subtree at position {position}")
        self.position = position


class MalformedDyckWordError(ValueError):
    def __init__(self, position: int):
        super().__init__(f"malformed Dyck word at position {position}")
        self.position = position


@dataclass(frozen=True)
class OrderedTree:
    """A rooted tree whose children carry a left-to-right order."""

    children: tuple["OrderedTree", ...] = ()

    @property
    def node_count(self) -> int:
        return 1 + sum(c.node_count for c in self.children)

    @property
    def height(self) -> int:
        """Maximum edge-depth; 0 for a single node."""
        return 1 + max(c.height for c in self.children) if self.children else 0

    @classmethod
    def from_text(cls, text: str) -> "OrderedTree":
        tree, end = _parse_node(text, 0)
        if end != len(text):
            raise TrailingInputError(end)
        return tree

    def to_text(self) -> str:
        return "(" + "".join(c.to_text() for c in self.children) + ")"

    def __str__(self) -> str:
        return self.to_text()


def _parse_node(text: str, pos: int) -> tuple[OrderedTree, int]:
    if pos >= len(text) or text[pos] != "(":
        raise UnbalancedParensError(pos)
    pos += 1
    children = []
    while pos < len(text) and text[pos] == "(":
        child, pos = _parse_node(text, pos)
        children.append(child)
    if pos >= len(text) or text[pos] != ")":
        raise UnbalancedParensError(pos)
    return OrderedTree(tuple(children)), pos + 1


@dataclass(frozen=True)
class DyckPath:
    """A word over {U, D} with balanced counts and nonnegative prefixes."""

    word: str = ""

    def __post_init__(self):
        altitude = 0
        for pos, step in enumerate(self.word):
            if step == "U":
                altitude += 1
            elif step == "D":
                altitude -= 1
                if altitude < 0:
                    raise MalformedDyckWordError(pos)
            else:
                raise MalformedDyckWordError(pos)
        if altitude != 0:
            raise MalformedDyckWordError(len(self.word))

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    @property
    def height(self) -> int:
        altitude = best = 0
        for step in self.word:
            altitude += 1 if step == "U" else -1
            if altitude > best:
                best = altitude
        return best

    @classmethod
    def from_text(cls, text: str) -> "DyckPath":
        return cls(text)

    def to_text(self) -> str:
        return self.word

    def __str__(self) -> str:
        return self.word


def tree_to_dyck(tree: OrderedTree) -> DyckPath:
    """Preorder walk: U entering each child, D leaving it."""
    steps: list[str] = []

    def walk(node: OrderedTree) -> None:
        for child in node.children:
            steps.append("U")
            walk(child)
            steps.append("D")

    walk(tree)
    return DyckPath("".join(steps))


def dyck_to_tree(path: DyckPath) -> OrderedTree:
    """Inverse walk; the word's validity is established by DyckPath itself."""
    root: list = []
    stack = [root]
    for step in path.word:
        if step == "U":
            child: list = []
            stack[-1].append(child)
            stack.append(child)
        else:
            stack.pop()

    def freeze(node: list) -> OrderedTree:
        return OrderedTree(tuple(freeze(c) for c in node))

    return freeze(root)


def all_trees(node_count: int):
    """Yield every plane tree with the given node count, in a fixed order."""
    if node_count >= 1:
        for forest in _all_forests(node_count - 1):
            yield OrderedTree(forest)


def _all_forests(total: int):
    if total == 0:
        yield ()
        return
    for head_size in range(1, total + 1):
        for head in all_trees(head_size):
            for tail in _all_forests(total - head_size):
                yield (head,) + tail


def all_dyck_words(semilength: int):
    """Yield every Dyck word of the given semilength (w = U w1 D w2)."""
    if semilength == 0:
        yield DyckPath("")
        return
    for k in range(semilength):
        for first in all_dyck_words(k):
            for rest in all_dyck_words(semilength - 1 - k):
                yield DyckPath("U" + first.word + "D" + rest.word)

"""Ordered tree edit distance (Zhang-Shasha) and the derived similarity.

Unit costs: inserting a node, deleting a node, and relabeling a node each
cost 1.  The similarity normalizes by the larger tree size:

    similarity(t1, t2) = 1 - distance(t1, t2) / max(size(t1), size(t2))

which is 1.0 for label-isomorphic trees and stays in [0, 1] because the
distance never exceeds the larger size (delete-all-then-insert-all is
never cheaper than editing within the larger tree).
"""

from __future__ import annotations

from .structure import TreeNode


def _annotate(root: TreeNode):
    """Postorder nodes, leftmost-leaf-descendant indices, and keyroots."""
    nodes = []

    def walk(node):
        child_first = None
        for c in node.children:
            first = walk(c)
            if child_first is None:
                child_first = first
        idx = len(nodes)
        lmd = child_first if child_first is not None else idx
        nodes.append((node.label, lmd))
        return lmd

    walk(root)
    labels = [lab for lab, _ in nodes]
    lmds = [lmd for _, lmd in nodes]
    keyroots_by_lmd = {}
    for i, lmd in enumerate(lmds):
        keyroots_by_lmd[lmd] = i
    keyroots = sorted(keyroots_by_lmd.values())
    return labels, lmds, keyroots


def tree_edit_distance(t1: TreeNode, t2: TreeNode) -> int:
    """Minimum unit-cost edit script turning ``t1`` into ``t2``."""
    l1, lmd1, kr1 = _annotate(t1)
    l2, lmd2, kr2 = _annotate(t2)
    n1, n2 = len(l1), len(l2)
    td = [[0] * n2 for _ in range(n1)]

    for i in kr1:
        for j in kr2:
            ioff = lmd1[i] - 1
            joff = lmd2[j] - 1
            m = i - lmd1[i] + 2
            n = j - lmd2[j] + 2
            fd = [[0] * n for _ in range(m)]
            for x in range(1, m):
                fd[x][0] = fd[x - 1][0] + 1
            for y in range(1, n):
                fd[0][y] = fd[0][y - 1] + 1
            for x in range(1, m):
                for y in range(1, n):
                    if lmd1[i] == lmd1[x + ioff] and lmd2[j] == lmd2[y + joff]:
                        relabel = 0 if l1[x + ioff] == l2[y + joff] else 1
                        fd[x][y] = min(
                            fd[x - 1][y] + 1,
                            fd[x][y - 1] + 1,
                            fd[x - 1][y - 1] + relabel,
                        )
                        td[x + ioff][y + joff] = fd[x][y]
                    else:
                        p = lmd1[x + ioff] - 1 - ioff
                        q = lmd2[y + joff] - 1 - joff
                        fd[x][y] = min(
                            fd[x - 1][y] + 1,
                            fd[x][y - 1] + 1,
                            fd[p][q] + td[x + ioff][y + joff],
                        )
    return td[n1 - 1][n2 - 1]


def steds(t1: TreeNode, t2: TreeNode) -> float:
    """Structure similarity in [0, 1]; 1.0 iff the trees are label-isomorphic."""
    return 1.0 - tree_edit_distance(t1, t2) / max(t1.size(), t2.size())
